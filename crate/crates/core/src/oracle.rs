//! Reference roots by Ehrlich–Aberth simultaneous iteration.
//!
//! The oracle is deliberately independent of the bound code: it never looks
//! at radius profiles and only shares the [`Polynomial`] type.
//!
//! Multiple roots are only accurate to about `ε^{1/m}` after plain
//! iteration. Approximations whose inclusion disks overlap are therefore
//! grouped; a group of size `m` is replaced by the zero of `p^{(m-1)}` near
//! its centroid, provided `p, p', ..., p^{(m-1)}` all vanish there.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleOptions {
    pub max_iterations: usize,
    /// Angular offset of the starting configuration, in radians.
    pub angle_offset: f64,
    /// A root is locked once its correction drops below `lock * (1 + |z|)`.
    pub lock: f64,
    /// Relative size of `p^{(j)}/j!` below which a merged cluster is accepted.
    pub cluster: f64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_iterations: 200,
            angle_offset: 0.4,
            lock: 1e-14,
            cluster: 1e-9,
        }
    }
}

/// A distinct root together with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub location: Complex64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    /// All roots, repeated according to multiplicity.
    pub roots: Vec<Complex64>,
    /// `|p(ξ)| / Σ |a_i| |ξ|^i` per root.
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
    pub clusters: Vec<Cluster>,
    leading: Complex64,
}

impl RootSet {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// `leading · Π (z - ξ_i)`.
    pub fn reconstruct(&self) -> Result<Polynomial> {
        Polynomial::from_roots(self.leading, &self.roots)
    }
}

pub fn find_roots(p: &Polynomial) -> Result<RootSet> {
    find_roots_with(p, OracleOptions::default())
}

pub fn find_roots_with(p: &Polynomial, options: OracleOptions) -> Result<RootSet> {
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let zero = Complex64::new(0.0, 0.0);
    let zeros = p.coeffs().iter().take_while(|&&c| c == zero).count();
    let deflated = Polynomial::new(p.coeffs()[zeros..].to_vec())?;

    let mut clusters = Vec::new();
    if zeros > 0 {
        clusters.push(Cluster {
            location: zero,
            multiplicity: zeros,
        });
    }
    let (mut converged, mut iterations) = (true, 0);
    if deflated.degree() > 0 {
        let run = aberth(&deflated, &options);
        converged = run.converged;
        iterations = run.iterations;
        clusters.extend(group(&deflated, &run.roots, &options));
    }

    let roots: Vec<Complex64> = clusters
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.location, c.multiplicity))
        .collect();
    let residuals = roots.iter().map(|&z| scaled_residual(p, z)).collect();
    Ok(RootSet {
        roots,
        residuals,
        converged,
        iterations,
        clusters,
        leading: p.leading(),
    })
}

/// Distinct roots of `p'`, sorted by argument and then modulus.
pub fn critical_points(p: &Polynomial) -> Result<Vec<Cluster>> {
    critical_points_with(p, OracleOptions::default())
}

pub fn critical_points_with(p: &Polynomial, options: OracleOptions) -> Result<Vec<Cluster>> {
    if p.degree() < 2 {
        return Err(Error::DegreeTooSmall {
            degree: p.degree(),
            required: 2,
        });
    }
    let rs = find_roots_with(&p.derivative()?, options)?;
    if !rs.converged {
        return Err(Error::NoConvergence {
            iterations: rs.iterations,
        });
    }
    let mut clusters = rs.clusters;
    sort_by_angle(&mut clusters);
    Ok(clusters)
}

pub fn sort_by_angle(clusters: &mut [Cluster]) {
    clusters.sort_by(|a, b| {
        a.location
            .arg()
            .total_cmp(&b.location.arg())
            .then(a.location.norm().total_cmp(&b.location.norm()))
    });
}

pub fn nearest_root_distance(rs: &RootSet, center: Complex64) -> Result<f64> {
    rs.roots
        .iter()
        .map(|&r| (r - center).norm())
        .reduce(f64::min)
        .ok_or(Error::EmptyRootSet)
}

pub fn scaled_residual(p: &Polynomial, z: Complex64) -> f64 {
    let value = p.evaluate(z).norm();
    if value == 0.0 {
        return 0.0;
    }
    value / p.magnitude_at(z)
}

struct Run {
    roots: Vec<Complex64>,
    converged: bool,
    iterations: usize,
}

/// Gauss–Seidel Aberth iteration on a polynomial with `p(0) != 0`.
fn aberth(p: &Polynomial, options: &OracleOptions) -> Run {
    let m = p.degree();
    if m == 1 {
        let c = p.coeffs();
        return Run {
            roots: vec![-c[0] / c[1]],
            converged: true,
            iterations: 0,
        };
    }
    let radius = cauchy_radius(p);
    let mut z: Vec<Complex64> = (0..m)
        .map(|j| Complex64::from_polar(radius, TAU * j as f64 / m as f64 + options.angle_offset))
        .collect();
    let mut locked = vec![false; m];
    let residual_floor = m as f64 * f64::EPSILON;

    let mut iterations = 0;
    while iterations < options.max_iterations && locked.iter().any(|l| !l) {
        iterations += 1;
        for i in 0..m {
            if locked[i] {
                continue;
            }
            let zi = z[i];
            let (value, slope) = p.evaluate_with_derivative(zi);
            if value.norm() <= residual_floor * p.magnitude_at(zi) {
                locked[i] = true;
                continue;
            }
            let repulsion: Complex64 = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| (zi - zj).inv())
                .sum();
            let correction = (slope / value - repulsion).inv();
            if !(correction.re.is_finite() && correction.im.is_finite()) {
                continue;
            }
            z[i] = zi - correction;
            if correction.norm() <= options.lock * (1.0 + z[i].norm()) {
                locked[i] = true;
            }
        }
    }
    Run {
        converged: locked.iter().all(|&l| l),
        roots: z,
        iterations,
    }
}

/// Unique positive zero of `|a_n| t^n - Σ_{i<n} |a_i| t^i`; every root lies
/// in the closed disk of this radius.
fn cauchy_radius(p: &Polynomial) -> f64 {
    let n = p.degree();
    let mags: Vec<f64> = p.coeffs().iter().map(|c| c.norm()).collect();
    // g(t) = |a_n| - Σ_{i<n} |a_i| t^{i-n} increases with t
    let g = |t: f64| {
        let inv = 1.0 / t;
        let tail = mags[..n].iter().fold(0.0, |acc, &m| acc * inv + m) * inv;
        mags[n] - tail
    };
    let (mut lo, mut hi) = (1.0, 1.0);
    while g(hi) < 0.0 {
        hi *= 2.0;
    }
    while g(lo) >= 0.0 {
        lo *= 0.5;
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// Groups approximations whose inclusion disks overlap and refines each
/// group into a single multiple root when the derivatives confirm it.
fn group(p: &Polynomial, approx: &[Complex64], options: &OracleOptions) -> Vec<Cluster> {
    let m = approx.len();
    let radii = inclusion_radii(p, approx);
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..m {
        for j in i + 1..m {
            if (approx[i] - approx[j]).norm() <= radii[i] + radii[j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 0..m {
        let root = find(&mut parent, i);
        members[root].push(i);
    }

    let mut out = Vec::new();
    for group in members.into_iter().filter(|g| !g.is_empty()) {
        if group.len() == 1 {
            out.push(Cluster {
                location: approx[group[0]],
                multiplicity: 1,
            });
            continue;
        }
        let pts: Vec<Complex64> = group.iter().map(|&i| approx[i]).collect();
        let reach = group.iter().map(|&i| radii[i]).fold(0.0, f64::max);
        match refine_multiple(p, &pts, reach, options) {
            Some(location) => out.push(Cluster {
                location,
                multiplicity: pts.len(),
            }),
            None => out.extend(pts.into_iter().map(|location| Cluster {
                location,
                multiplicity: 1,
            })),
        }
    }
    out
}

/// `n (|p(z_i)| + n ε Σ|a_k||z_i|^k) / |a_n Π_{j≠i} (z_i - z_j)|`.
fn inclusion_radii(p: &Polynomial, approx: &[Complex64]) -> Vec<f64> {
    let n = approx.len() as f64;
    let ln_lead = p.leading().norm().ln();
    approx
        .iter()
        .enumerate()
        .map(|(i, &zi)| {
            let err = p.evaluate(zi).norm() + n * f64::EPSILON * p.magnitude_at(zi);
            let mut ln_prod = 0.0;
            for (j, &zj) in approx.iter().enumerate() {
                if j != i {
                    let d = (zi - zj).norm();
                    if d == 0.0 {
                        return f64::INFINITY;
                    }
                    ln_prod += d.ln();
                }
            }
            (n.ln() + err.ln() - ln_lead - ln_prod).exp()
        })
        .collect()
}

fn refine_multiple(
    p: &Polynomial,
    pts: &[Complex64],
    reach: f64,
    options: &OracleOptions,
) -> Option<Complex64> {
    let k = pts.len();
    let centroid = pts.iter().sum::<Complex64>() / k as f64;
    let target = p.nth_derivative(k - 1).ok()?;
    let mut z = centroid;
    for _ in 0..100 {
        let (value, slope) = target.evaluate_with_derivative(z);
        if value.norm() == 0.0 {
            break;
        }
        let step = value / slope;
        if !(step.re.is_finite() && step.im.is_finite()) {
            return None;
        }
        z -= step;
        if step.norm() <= 4.0 * f64::EPSILON * (1.0 + z.norm()) {
            break;
        }
    }
    if (z - centroid).norm() > reach.max(f64::EPSILON * (1.0 + centroid.norm())) {
        return None;
    }
    let b = p.taylor_shift(z).b;
    let env = p.magnitude_envelope(z);
    (0..k)
        .all(|j| b[j].norm() <= options.cluster * env[j])
        .then_some(z)
}
