//! Inclusion radii: disks around the center that contain at least one root.
//!
//! For a general center the bound is `ρ^{(k)} C(n,k)^{1/k}`. At a critical
//! point the Newton identities for the reciprocal power sums give the much
//! tighter family built from the sequence `γ_k` (see [`GammaSequence`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radius::{ln_binomial, RadiusProfile};

/// `ρ^{(k)} · C(n,k)^{1/k}`.
pub fn inclusion_radius_general(profile: &RadiusProfile, k: usize) -> Result<f64> {
    let n = profile.degree;
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, min: 1, max: n });
    }
    let rho = profile.rho_k(k);
    if !rho.is_finite() {
        return Err(Error::BoundUndefined { k });
    }
    Ok(rho * (ln_binomial(n, k) / k as f64).exp())
}

/// The chain `min_k C(n,k)^{1/k} ρ^{(k)} <= max_k C(n,k)^{1/k} ρ <= n ρ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneralChain {
    pub best: f64,
    pub uniform: f64,
    pub linear: f64,
}

pub fn general_chain(profile: &RadiusProfile) -> GeneralChain {
    let n = profile.degree;
    let rho = profile.rho_min_full;
    let best = (1..=n)
        .filter_map(|k| inclusion_radius_general(profile, k).ok())
        .fold(f64::INFINITY, f64::min);
    let widest = (1..=n)
        .map(|k| (ln_binomial(n, k) / k as f64).exp())
        .fold(0.0, f64::max);
    GeneralChain {
        best,
        uniform: widest * rho,
        linear: n as f64 * rho,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalInclusion {
    /// `per_k[k - 2]` is the bound obtained from `ρ^{(k)}`, `k = 2..=n`;
    /// `None` where `ρ^{(k)}` is infinite.
    pub per_k: Vec<Option<f64>>,
    /// `ρ · √(n/2)` with `ρ = min_{k>=2} ρ^{(k)}`.
    pub blanket: f64,
    pub best: f64,
}

/// Per-`k` inclusion bounds at a critical point:
///
/// * `k = 2`: `ρ^{(2)} √(n/2)`
/// * `k = 3`: `ρ^{(3)} (n/3)^{1/3}`
/// * `k >= 4`: `ρ^{(k)} √n ((1/k) Π_{i=2}^{⌊k/2⌋} (1/n + 1/(2i-1) + 1/(2i-2)))^{1/k}`
pub fn inclusion_radius_critical(profile: &RadiusProfile) -> Result<CriticalInclusion> {
    if !profile.is_critical() {
        return Err(Error::NotCritical {
            residual: profile.relative_coefficient(1),
        });
    }
    let n = profile.degree;
    let nf = n as f64;
    let mut per_k = Vec::with_capacity(n - 1);
    // running log of the product over i = 2..=k/2
    let mut ln_product = 0.0;
    for k in 2..=n {
        if k >= 4 && k % 2 == 0 {
            let i = (k / 2) as f64;
            ln_product += (1.0 / nf + 1.0 / (2.0 * i - 1.0) + 1.0 / (2.0 * i - 2.0)).ln();
        }
        let rho = profile.rho_k(k);
        if !rho.is_finite() {
            per_k.push(None);
            continue;
        }
        let kf = k as f64;
        let factor = match k {
            2 => (nf / 2.0).sqrt(),
            3 => (nf / 3.0).cbrt(),
            _ => (0.5 * nf.ln() + (ln_product - kf.ln()) / kf).exp(),
        };
        per_k.push(Some(rho * factor));
    }
    let blanket = profile.rho_min_from2 * (nf / 2.0).sqrt();
    let best = per_k.iter().flatten().copied().fold(blanket, f64::min);
    Ok(CriticalInclusion {
        per_k,
        blanket,
        best,
    })
}

/// Bounding sequence for the Newton-identity argument.
///
/// `γ_2 = γ_3 = n`, `γ_k = γ_{k-1} + n/(k-2) · γ_{k-2}`; the normalized
/// `δ_{2i} = γ_{2i}/n^i`, `δ_{2i+1} = γ_{2i+1}/n^i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaSequence {
    pub n: usize,
    /// `gamma[k - 2] = γ_k`.
    pub gamma: Vec<f64>,
    /// `delta[k - 2] = δ_k`.
    pub delta: Vec<f64>,
}

impl GammaSequence {
    pub fn gamma_k(&self, k: usize) -> f64 {
        self.gamma[k - 2]
    }

    pub fn delta_k(&self, k: usize) -> f64 {
        self.delta[k - 2]
    }

    pub fn k_max(&self) -> usize {
        self.gamma.len() + 1
    }

    /// Distance bound `ρ^{(k)} (γ_k / k)^{1/k}` for a critical center.
    pub fn distance_bound(&self, k: usize, rho_k: f64) -> f64 {
        rho_k * (self.gamma_k(k) / k as f64).powf(1.0 / k as f64)
    }

    /// `Π_{j=2}^{i} ‖W_{2j}‖_∞` with `‖W_k‖_∞ = 1/n + 1/(k-1) + 1/(k-2)`,
    /// the bound on `max(δ_{2i+1}, δ_{2i})`.
    pub fn delta_norm_bound(&self, i: usize) -> f64 {
        let nf = self.n as f64;
        (2..=i)
            .map(|j| {
                let j = j as f64;
                1.0 / nf + 1.0 / (2.0 * j - 1.0) + 1.0 / (2.0 * j - 2.0)
            })
            .product()
    }
}

pub fn gamma_sequence(n: usize, k_max: usize) -> Result<GammaSequence> {
    if k_max < 2 || k_max > n {
        return Err(Error::KOutOfRange {
            k: k_max,
            min: 2,
            max: n,
        });
    }
    let nf = n as f64;
    let mut gamma = Vec::with_capacity(k_max - 1);
    for k in 2..=k_max {
        let g = if k <= 3 {
            nf
        } else {
            gamma[k - 3] + nf / (k - 2) as f64 * gamma[k - 4]
        };
        gamma.push(g);
    }
    let delta = gamma
        .iter()
        .enumerate()
        .map(|(idx, g)| g / nf.powi(((idx + 2) / 2) as i32))
        .collect();
    Ok(GammaSequence { n, gamma, delta })
}

/// When `p', ..., p^{(h)}` all vanish at the center:
/// `ρ^{(h+i)} (n/(h+1))^{1/(h+i)}` for `i = 1..=h+1` (indices past `n` and
/// infinite radii are skipped).
pub fn inclusion_radius_multiplicity(profile: &RadiusProfile, h: usize) -> Result<Vec<f64>> {
    let n = profile.degree;
    if h == 0 || h >= n {
        return Err(Error::KOutOfRange {
            k: h,
            min: 1,
            max: n - 1,
        });
    }
    if let Some(index) = (1..=h).find(|&j| !profile.vanishes(j)) {
        return Err(Error::DerivativeNotVanishing { index });
    }
    let base = n as f64 / (h + 1) as f64;
    Ok((1..=h + 1)
        .map(|i| h + i)
        .filter(|&k| k <= n)
        .filter_map(|k| {
            let rho = profile.rho_k(k);
            rho.is_finite().then(|| rho * base.powf(1.0 / k as f64))
        })
        .collect())
}
