//! Critical-point annuli and the family that defeats a universal outer constant.
//!
//! Each critical point `ζ_j` carries the annulus
//! `ι₁ ρ_j <= |z - ζ_j| <= ι₂ ρ_j` with `ρ_j = min_{k>=2} ρ^{(k)}(ζ_j)`; the
//! covering question asks whether every root of `p` lies in their union.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{critical_points, find_roots, Cluster, RootSet};
use crate::poly::Polynomial;
use crate::radius::{ln_binomial, rho_family_counterexample, rho_profile, RadiusProfile};

/// Relative slack on annulus membership.
pub const MEMBERSHIP_SLACK: f64 = 1e-12;
/// Absolute slack (scaled by `1 + |ζ|`) for the point annulus of a critical
/// point that is also a root.
pub const POINT_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annulus {
    pub center: Complex64,
    pub inner: f64,
    pub outer: f64,
    pub rho: f64,
    pub degenerate: bool,
}

impl Annulus {
    pub fn contains(&self, z: Complex64) -> bool {
        let d = (z - self.center).norm();
        if self.degenerate {
            return d <= POINT_SLACK * (1.0 + self.center.norm());
        }
        self.inner * (1.0 - MEMBERSHIP_SLACK) <= d && d <= self.outer * (1.0 + MEMBERSHIP_SLACK)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub iota1: f64,
    pub iota2: f64,
    pub annuli: Vec<Annulus>,
    pub roots: Vec<Complex64>,
    pub covered: bool,
    pub uncovered_roots: Vec<Complex64>,
    /// `min_j |ξ - ζ_j| / ρ_j` over non-degenerate annuli, per root.
    pub per_root_ratios: Vec<Option<f64>>,
}

fn check_iota(iota1: f64, iota2: f64) -> Result<()> {
    if iota1 > 0.0 && iota1 <= iota2 {
        Ok(())
    } else {
        Err(Error::InvalidIota { iota1, iota2 })
    }
}

pub fn build_annuli(p: &Polynomial, iota1: f64, iota2: f64) -> Result<Vec<Annulus>> {
    check_iota(iota1, iota2)?;
    let centers = critical_points(p)?;
    annuli_at(p, &centers, iota1, iota2)
}

/// Annuli for already located critical points.
pub fn annuli_at(
    p: &Polynomial,
    centers: &[Cluster],
    iota1: f64,
    iota2: f64,
) -> Result<Vec<Annulus>> {
    check_iota(iota1, iota2)?;
    centers
        .iter()
        .map(|cp| {
            let profile = rho_profile(p, cp.location)?;
            Ok(annulus_from_profile(&profile, iota1, iota2))
        })
        .collect()
}

pub fn annulus_from_profile(profile: &RadiusProfile, iota1: f64, iota2: f64) -> Annulus {
    if profile.degenerate {
        return Annulus {
            center: profile.center,
            inner: 0.0,
            outer: 0.0,
            rho: 0.0,
            degenerate: true,
        };
    }
    let rho = profile.rho_min_from2;
    Annulus {
        center: profile.center,
        inner: iota1 * rho,
        outer: iota2 * rho,
        rho,
        degenerate: false,
    }
}

pub fn check_coverage(p: &Polynomial, iota1: f64, iota2: f64) -> Result<ConjectureReport> {
    check_iota(iota1, iota2)?;
    let roots = find_roots(p)?;
    if !roots.converged {
        return Err(Error::NoConvergence {
            iterations: roots.iterations,
        });
    }
    let annuli = build_annuli(p, iota1, iota2)?;
    Ok(coverage(&roots, annuli, iota1, iota2))
}

/// Coverage verdict for precomputed roots and annuli.
pub fn coverage(roots: &RootSet, annuli: Vec<Annulus>, iota1: f64, iota2: f64) -> ConjectureReport {
    let mut uncovered_roots = Vec::new();
    let mut per_root_ratios = Vec::with_capacity(roots.roots.len());
    for &xi in &roots.roots {
        if !annuli.iter().any(|a| a.contains(xi)) {
            uncovered_roots.push(xi);
        }
        let ratio = annuli
            .iter()
            .filter(|a| !a.degenerate)
            .map(|a| (xi - a.center).norm() / a.rho)
            .reduce(f64::min);
        per_root_ratios.push(ratio);
    }
    ConjectureReport {
        iota1,
        iota2,
        annuli,
        roots: roots.roots.clone(),
        covered: uncovered_roots.is_empty(),
        uncovered_roots,
        per_root_ratios,
    }
}

/// `p_n(z) = z^{n+1} - (n+1) z`: every critical point is an `n`-th root of
/// unity and `0` is a root at distance exactly 1 from all of them.
#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleFamily {
    pub n: usize,
    pub polynomial: Polynomial,
}

impl CounterexampleFamily {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "counterexample family needs n >= 2, got {n}"
            )));
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 2];
        coeffs[1] = Complex64::new(-((n + 1) as f64), 0.0);
        coeffs[n + 1] = Complex64::new(1.0, 0.0);
        Ok(CounterexampleFamily {
            n,
            polynomial: Polynomial::new(coeffs)?,
        })
    }

    /// `√(2/(n+1))`.
    pub fn rho2_closed_form(&self) -> f64 {
        (2.0 / (self.n + 1) as f64).sqrt()
    }

    /// `(n / C(n+1, k))^{1/k}`.
    pub fn rho_closed_form(&self, k: usize) -> Result<f64> {
        rho_family_counterexample(self.n, k)
    }

    /// `(C(n+1, k) / n)^{1/k}`, the distance-to-radius ratio of the origin.
    pub fn ratio_closed_form(&self, k: usize) -> Result<f64> {
        Ok(1.0 / self.rho_closed_form(k)?)
    }

    /// `(k, ratio)` for `k = 2..=n+1`.
    pub fn ratio_table(&self) -> Vec<(usize, f64)> {
        (2..=self.n + 1)
            .map(|k| {
                let r = ((ln_binomial(self.n + 1, k) - (self.n as f64).ln()) / k as f64).exp();
                (k, r)
            })
            .collect()
    }

    /// Runs the root oracle on `p_n` and `p_n'`.
    pub fn measure(&self) -> Result<FamilyMeasurement> {
        let roots = find_roots(&self.polynomial)?;
        if !roots.converged {
            return Err(Error::NoConvergence {
                iterations: roots.iterations,
            });
        }
        let origin = roots
            .roots
            .iter()
            .copied()
            .min_by(|a, b| a.norm().total_cmp(&b.norm()))
            .ok_or(Error::EmptyRootSet)?;
        let critical: Vec<Complex64> = critical_points(&self.polynomial)?
            .into_iter()
            .map(|c| c.location)
            .collect();
        let one = Complex64::new(1.0, 0.0);
        let reference_center = critical
            .iter()
            .copied()
            .min_by(|a, b| (a - one).norm().total_cmp(&(b - one).norm()))
            .ok_or(Error::EmptyRootSet)?;
        let reference = rho_profile(&self.polynomial, reference_center)?;
        Ok(FamilyMeasurement {
            n: self.n,
            origin,
            critical,
            roots,
            reference,
        })
    }
}

#[derive(Debug, Clone)]
pub struct FamilyMeasurement {
    pub n: usize,
    /// The oracle root of smallest modulus.
    pub origin: Complex64,
    pub critical: Vec<Complex64>,
    pub roots: RootSet,
    /// Profile at the oracle critical point closest to 1.
    pub reference: RadiusProfile,
}

impl FamilyMeasurement {
    /// `|origin - ζ| / ρ^{(n,k)}(ζ)` at the reference critical point.
    pub fn measured_ratio(&self, k: usize) -> f64 {
        (self.origin - self.reference.center).norm() / self.reference.rho_k(k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub n: usize,
    pub measured_ratio: f64,
    pub lower_bound: f64,
}

/// Measured origin ratio for `ρ^{(n,k)}` against `(C(n+1,k)/n)^{1/k}`.
pub fn growth_sweep(n_list: &[usize], k: usize) -> Result<Vec<GrowthRow>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "growth sweep needs k >= 2, got {k}"
        )));
    }
    n_list
        .iter()
        .map(|&n| {
            if n + 1 < k {
                return Err(Error::InvalidArgument(format!(
                    "n = {n} is below k - 1 = {}",
                    k - 1
                )));
            }
            let family = CounterexampleFamily::new(n)?;
            let m = family.measure()?;
            Ok(GrowthRow {
                n,
                measured_ratio: m.measured_ratio(k),
                lower_bound: family.ratio_closed_form(k)?,
            })
        })
        .collect()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let m = points.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = points.iter().map(|&(x, y)| (x.ln(), y.ln())).unzip();
    let mx = lx.iter().sum::<f64>() / m;
    let my = ly.iter().sum::<f64>() / m;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
