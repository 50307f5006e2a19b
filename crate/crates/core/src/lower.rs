//! Exclusion radii: disks around the center that contain no root of `p`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, ShiftedExpansion};
use crate::radius::{rho_profile_with, RadiusProfile, Tolerances};
use crate::solve::bracketed_root;

/// Vanishing-derivative hypothesis: `θ^i |b_i / b_0| <= ε` for `i ∈ Ω`,
/// where `θ` bounds every root distance from the center.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmegaCondition {
    omega: Vec<usize>,
    epsilon: f64,
    theta: f64,
}

impl OmegaCondition {
    /// `omega` is sorted and deduplicated; it must be nonempty, avoid 0, and
    /// satisfy `ε · |Ω| < 1`.
    pub fn new(mut omega: Vec<usize>, epsilon: f64, theta: f64) -> Result<Self> {
        omega.sort_unstable();
        omega.dedup();
        if omega.is_empty() {
            return Err(Error::InvalidOmega("omega must be nonempty".into()));
        }
        if omega[0] == 0 {
            return Err(Error::InvalidOmega("omega indices start at 1".into()));
        }
        if epsilon.is_nan() || epsilon < 0.0 || epsilon * omega.len() as f64 >= 1.0 {
            return Err(Error::InvalidOmega(format!(
                "need 0 <= ε < 1/h, got ε = {epsilon}, h = {}",
                omega.len()
            )));
        }
        if theta.is_nan() || theta <= 0.0 {
            return Err(Error::InvalidOmega(format!(
                "θ must be positive, got {theta}"
            )));
        }
        Ok(OmegaCondition {
            omega,
            epsilon,
            theta,
        })
    }

    pub fn omega(&self) -> &[usize] {
        &self.omega
    }

    pub fn h(&self) -> usize {
        self.omega.len()
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// An [`OmegaCondition`] checked against a concrete polynomial and center.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifiedOmega {
    pub center: Complex64,
    pub condition: OmegaCondition,
}

/// Why [`verify_omega_condition`] rejected a center.
#[derive(Debug, Clone, PartialEq)]
pub enum OmegaFailure {
    /// `θ^i |b_i/b_0|` exceeds `ε` at this index.
    Violated {
        index: usize,
        value: f64,
    },
    /// Index outside `1..n`.
    IndexOutOfRange {
        index: usize,
    },
    CenterIsRoot,
    Invalid(Error),
}

/// `(1/2) · ρ`, with `ρ` the minimum over all `k >= 1`.
pub fn exclusion_radius_basic(profile: &RadiusProfile) -> Result<f64> {
    if profile.degenerate {
        return Err(Error::CenterIsRoot);
    }
    Ok(0.5 * profile.rho_min_full)
}

/// The unique zero in `(1/2, 1)` of
/// `f(t) = (t - 1) Σ_{i∈Ω} t^i + 2t - 1 + (1 - t) h ε`.
pub fn gamma_omega(cond: &OmegaCondition) -> Result<f64> {
    let h = cond.h() as f64;
    let he = h * cond.epsilon;
    let f = |t: f64| {
        let (mut s, mut ds) = (0.0, 0.0);
        for &i in &cond.omega {
            s += t.powi(i as i32);
            ds += i as f64 * t.powi(i as i32 - 1);
        }
        let value = (t - 1.0) * s + 2.0 * t - 1.0 + (1.0 - t) * he;
        let slope = s + (t - 1.0) * ds + 2.0 - he;
        (value, slope)
    };
    let (at_half, _) = f(0.5);
    let (at_one, _) = f(1.0);
    if !(at_half < 0.0 && at_one > 0.0) {
        return Err(Error::NoSignChange);
    }
    Ok(bracketed_root(f, 0.5, 1.0, 1e-15))
}

/// `γ(Ω, ε) · ρ` for a verified condition.
pub fn exclusion_radius_omega(profile: &RadiusProfile, verified: &VerifiedOmega) -> Result<f64> {
    if verified.center != profile.center {
        return Err(Error::CenterMismatch);
    }
    if profile.degenerate {
        return Err(Error::CenterIsRoot);
    }
    Ok(gamma_omega(&verified.condition)? * profile.rho_min_full)
}

/// Checks `θ^i |b_i/b_0| <= ε` for each `i ∈ Ω`, with `θ` from
/// [`theta_bound`]. A coefficient below the profile's vanishing tolerance
/// counts as an exact zero, so numerically located critical points pass
/// with `ε = 0`.
pub fn verify_omega_condition(
    p: &Polynomial,
    center: Complex64,
    omega: &[usize],
    epsilon: f64,
    tolerances: Tolerances,
) -> std::result::Result<VerifiedOmega, OmegaFailure> {
    let profile = rho_profile_with(p, center, tolerances).map_err(OmegaFailure::Invalid)?;
    if profile.degenerate {
        return Err(OmegaFailure::CenterIsRoot);
    }
    let n = profile.degree;
    let theta = theta_bound(&profile.expansion);
    let b0 = profile.expansion.b[0].norm();
    for &i in omega {
        if i == 0 || i >= n {
            return Err(OmegaFailure::IndexOutOfRange { index: i });
        }
        if profile.vanishes(i) {
            continue;
        }
        let value = theta.powi(i as i32) * profile.expansion.b[i].norm() / b0;
        if value > epsilon {
            return Err(OmegaFailure::Violated { index: i, value });
        }
    }
    let condition =
        OmegaCondition::new(omega.to_vec(), epsilon, theta).map_err(OmegaFailure::Invalid)?;
    Ok(VerifiedOmega { center, condition })
}

/// Cauchy's bound on the shifted expansion: `1 + max_{k<n} |b_k / b_n|`.
pub fn theta_bound(e: &ShiftedExpansion) -> f64 {
    let n = e.degree();
    let lead = e.b[n].norm();
    1.0 + e.b[..n].iter().map(|b| b.norm() / lead).fold(0.0, f64::max)
}

/// The positive zero of `Σ_{i>=1} |b_i| t^i - |b_0|`; no root lies in the
/// open disk of this radius.
pub fn sigma_radius(e: &ShiftedExpansion) -> Result<f64> {
    let b0 = e.b[0].norm();
    if b0 == 0.0 {
        return Err(Error::CenterIsRoot);
    }
    let mags: Vec<f64> = e.b.iter().map(|b| b.norm()).collect();
    let f = |t: f64| {
        let (mut value, mut slope) = (0.0, 0.0);
        for &m in mags[1..].iter().rev() {
            slope = slope * t + value;
            value = value * t + m;
        }
        slope = slope * t + value;
        value *= t;
        (value - b0, slope)
    };
    let mut hi = 1.0;
    while f(hi).0 < 0.0 {
        hi *= 2.0;
    }
    let mut lo = hi;
    while f(lo).0 >= 0.0 {
        lo *= 0.5;
    }
    Ok(bracketed_root(f, lo, hi, 4.0 * f64::EPSILON * b0))
}
