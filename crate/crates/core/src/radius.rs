//! The radius family `ρ^{(k)}(ζ) = |k! p(ζ) / p^{(k)}(ζ)|^{1/k} = |b_0/b_k|^{1/k}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, ShiftedExpansion};

/// Relative thresholds for treating a shifted coefficient `b_k` as zero.
///
/// Both are measured against the envelope `Σ_i C(i,k) |a_i| |ζ|^{i-k}`,
/// the size of the terms that cancel when `b_k` is formed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// `p(ζ)` counts as zero (center is a root) below this.
    pub degenerate: f64,
    /// `p^{(k)}(ζ)`, `k >= 1`, counts as zero below this (criticality tests).
    pub vanishing: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            degenerate: 1e-14,
            vanishing: 1e-10,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusProfile {
    pub center: Complex64,
    pub degree: usize,
    /// `rho[k - 1] = ρ^{(k)}`, `k = 1..=n`; `f64::INFINITY` where `b_k = 0`.
    pub rho: Vec<f64>,
    /// `min_{k >= 2} ρ^{(k)}`.
    pub rho_min_from2: f64,
    /// `min_{k >= 1} ρ^{(k)}`.
    pub rho_min_full: f64,
    /// Smallest `k >= 2` attaining `rho_min_from2`.
    pub argmin_from2: usize,
    pub degenerate: bool,
    pub expansion: ShiftedExpansion,
    /// Envelope used for the scale-aware zero tests, indexed like `expansion.b`.
    pub envelope: Vec<f64>,
    pub tolerances: Tolerances,
}

impl RadiusProfile {
    /// `ρ^{(k)}` for `1 <= k <= n`.
    pub fn rho_k(&self, k: usize) -> f64 {
        self.rho[k - 1]
    }

    /// `|b_k|` relative to its envelope.
    pub fn relative_coefficient(&self, k: usize) -> f64 {
        let scale = self.envelope[k];
        if scale == 0.0 {
            0.0
        } else {
            self.expansion.b[k].norm() / scale
        }
    }

    /// Whether `p^{(k)}(ζ)` is zero within `tolerances.vanishing`.
    pub fn vanishes(&self, k: usize) -> bool {
        self.relative_coefficient(k) <= self.tolerances.vanishing
    }

    pub fn is_critical(&self) -> bool {
        self.vanishes(1)
    }

    /// Number of consecutive vanishing derivatives `p', p'', ...` at the center.
    pub fn vanishing_order(&self) -> usize {
        (1..self.degree).take_while(|&k| self.vanishes(k)).count()
    }
}

pub fn rho_profile(p: &Polynomial, center: Complex64) -> Result<RadiusProfile> {
    rho_profile_with(p, center, Tolerances::default())
}

pub fn rho_profile_with(
    p: &Polynomial,
    center: Complex64,
    tolerances: Tolerances,
) -> Result<RadiusProfile> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            degree: n,
            required: 2,
        });
    }
    let expansion = p.taylor_shift(center);
    let envelope = p.magnitude_envelope(center);
    let b0 = expansion.b[0].norm();
    let degenerate = b0 <= tolerances.degenerate * envelope[0];

    let rho: Vec<f64> = if degenerate {
        vec![0.0; n]
    } else {
        (1..=n)
            .map(|k| radius_term(b0, expansion.b[k].norm(), k))
            .collect()
    };

    let rho_min_full = rho.iter().copied().fold(f64::INFINITY, f64::min);
    let (argmin_from2, rho_min_from2) = rho.iter().copied().enumerate().skip(1).fold(
        (2, f64::INFINITY),
        |(best_k, best), (i, r)| {
            if r < best {
                (i + 1, r)
            } else {
                (best_k, best)
            }
        },
    );

    Ok(RadiusProfile {
        center,
        degree: n,
        rho,
        rho_min_from2,
        rho_min_full,
        argmin_from2,
        degenerate,
        expansion,
        envelope,
        tolerances,
    })
}

fn radius_term(b0: f64, bk: f64, k: usize) -> f64 {
    if bk == 0.0 {
        return f64::INFINITY;
    }
    let ratio = b0 / bk;
    match k {
        1 => ratio,
        2 => ratio.sqrt(),
        _ if ratio.is_normal() => ratio.powf(1.0 / k as f64),
        _ => ((b0.ln() - bk.ln()) / k as f64).exp(),
    }
}

/// Natural log of the binomial coefficient `C(n, k)`.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k).map(|i| ((n - i) as f64 / (i + 1) as f64).ln()).sum()
}

/// Closed form of `ρ^{(n,k)}` for `z^{n+1} - (n+1) z` at any `n`-th root of
/// unity: `(n / C(n+1, k))^{1/k}`.
pub fn rho_family_counterexample(n: usize, k: usize) -> Result<f64> {
    if n < 1 || k < 2 || k > n + 1 {
        return Err(Error::KOutOfRange {
            k,
            min: 2,
            max: n + 1,
        });
    }
    Ok((((n as f64).ln() - ln_binomial(n + 1, k)) / k as f64).exp())
}
