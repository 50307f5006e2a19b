//! Input parsing, per-center analysis, and machine-readable reports.

use std::fmt::Write as _;
use std::io;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::conjecture::{annuli_at, coverage, Annulus, POINT_SLACK};
use crate::error::{Error, Result};
use crate::lower::{
    exclusion_radius_basic, exclusion_radius_omega, gamma_omega, sigma_radius,
    verify_omega_condition,
};
use crate::oracle::{
    find_roots_with, nearest_root_distance, sort_by_angle, Cluster, OracleOptions, RootSet,
};
use crate::poly::Polynomial;
use crate::radius::{rho_profile_with, RadiusProfile, Tolerances};
use crate::upper::{
    inclusion_radius_critical, inclusion_radius_general, inclusion_radius_multiplicity,
    CriticalInclusion,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BOUND_VIOLATION: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;

/// Parses one coefficient per line, `"<re> <im>"`, ascending degree.
///
/// Input whose first non-blank character is `{` is read as
/// `{"coeffs": [[re, im], ...]}` instead.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    if text.trim_start().starts_with('{') {
        return parse_json_polynomial(text);
    }
    let mut coeffs = Vec::new();
    for (idx, line) in text
        .strip_suffix('\n')
        .unwrap_or(text)
        .split('\n')
        .enumerate()
    {
        let line_no = idx + 1;
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let (re, im) = line
            .split_once(' ')
            .ok_or_else(|| parse_err(format!("expected \"re im\", got {line:?}")))?;
        coeffs.push(Complex64::new(
            parse_decimal(re).map_err(parse_err)?,
            parse_decimal(im).map_err(parse_err)?,
        ));
    }
    Polynomial::new(coeffs)
}

fn parse_decimal(token: &str) -> std::result::Result<f64, String> {
    let body = token.strip_prefix(['+', '-']).unwrap_or(token);
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(pos) => (&body[..pos], Some(&body[pos + 1..])),
        None => (body, None),
    };
    let digits_ok = !mantissa.is_empty()
        && mantissa.chars().any(|c| c.is_ascii_digit())
        && mantissa.chars().all(|c| c.is_ascii_digit() || c == '.')
        && mantissa.matches('.').count() <= 1;
    let exponent_ok = exponent.is_none_or(|e| {
        let e = e.strip_prefix(['+', '-']).unwrap_or(e);
        !e.is_empty() && e.chars().all(|c| c.is_ascii_digit())
    });
    if !(digits_ok && exponent_ok) {
        return Err(format!("malformed number {token:?}"));
    }
    token
        .parse::<f64>()
        .map_err(|e| format!("malformed number {token:?}: {e}"))
}

#[derive(Deserialize)]
struct CoeffInput {
    coeffs: Vec<[f64; 2]>,
}

fn parse_json_polynomial(text: &str) -> Result<Polynomial> {
    let input: CoeffInput = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    if input.coeffs.is_empty() {
        return Err(Error::EmptyInput);
    }
    Polynomial::new(
        input
            .coeffs
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    pub iota1: f64,
    pub iota2: f64,
    pub tolerances: Tolerances,
    /// Relative slack for `lower <= nearest`.
    pub lower_slack: f64,
    /// Relative slack for `nearest <= upper`.
    pub upper_slack: f64,
    pub oracle: OracleOptions,
    /// Multiplies every lower bound before the sandwich check. Anything other
    /// than 1 is a fault-injection hook for exercising the violation path.
    pub lower_bound_scale: f64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            iota1: 0.618,
            iota2: 10.0,
            tolerances: Tolerances::default(),
            lower_slack: 1e-12,
            upper_slack: 1e-10,
            oracle: OracleOptions::default(),
            lower_bound_scale: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootEntry {
    pub value: Complex64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileSummary {
    /// `ρ^{(k)}` for `k = 1..=n`; `null` where `p^{(k)}(ζ) = 0`.
    pub rho_k: Vec<Option<f64>>,
    pub rho_min_from2: f64,
    pub rho_min_full: f64,
    pub argmin_from2: usize,
}

impl From<&RadiusProfile> for ProfileSummary {
    fn from(p: &RadiusProfile) -> Self {
        ProfileSummary {
            rho_k: p.rho.iter().map(|&r| r.is_finite().then_some(r)).collect(),
            rho_min_from2: p.rho_min_from2,
            rho_min_full: p.rho_min_full,
            argmin_from2: p.argmin_from2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBounds {
    pub basic: f64,
    /// `Ω = {1..h}` with `h` the multiplicity of the critical point.
    pub omega: Vec<usize>,
    pub omega_gamma: Option<f64>,
    pub omega_radius: Option<f64>,
    pub sigma: f64,
}

impl LowerBounds {
    pub fn max(&self) -> f64 {
        self.omega_radius
            .into_iter()
            .fold(self.basic.max(self.sigma), f64::max)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UpperBounds {
    /// General-center bound for `k = 1..=n`.
    pub general: Vec<Option<f64>>,
    pub critical: Option<CriticalInclusion>,
    pub multiplicity: Vec<f64>,
    pub best: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CenterRecord {
    pub center: Complex64,
    pub multiplicity: usize,
    pub degenerate: bool,
    pub rho_profile: ProfileSummary,
    pub lower_bounds: Option<LowerBounds>,
    pub upper_bounds: Option<UpperBounds>,
    pub nearest_root_distance: f64,
    pub sandwich_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureSection {
    pub iota1: f64,
    pub iota2: f64,
    pub covered: bool,
    pub uncovered_roots: Vec<Complex64>,
    pub annuli: Vec<Annulus>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub degree: usize,
    pub converged: bool,
    pub roots: Vec<RootEntry>,
    pub critical_points: Vec<Cluster>,
    pub centers: Vec<CenterRecord>,
    pub conjecture: ConjectureSection,
}

impl AnalysisReport {
    pub fn all_sandwiches_hold(&self) -> bool {
        self.centers.iter().all(|c| c.sandwich_ok)
    }

    pub fn exit_code(&self) -> i32 {
        if !self.converged {
            EXIT_NO_CONVERGENCE
        } else if !self.all_sandwiches_hold() {
            EXIT_BOUND_VIOLATION
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are finite or null")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

/// Runs the oracle, then every applicable bound at each critical point.
pub fn analyze(p: &Polynomial, options: &AnalysisOptions) -> Result<AnalysisReport> {
    if p.degree() < 2 {
        return Err(Error::DegreeTooSmall {
            degree: p.degree(),
            required: 2,
        });
    }
    let roots = find_roots_with(p, options.oracle)?;
    let critical_run = find_roots_with(&p.derivative()?, options.oracle)?;
    let mut critical = critical_run.clusters.clone();
    sort_by_angle(&mut critical);

    let centers = critical
        .iter()
        .map(|cp| analyze_center(p, cp, &roots, options))
        .collect::<Result<Vec<_>>>()?;

    let annuli = annuli_at(p, &critical, options.iota1, options.iota2)?;
    let cov = coverage(&roots, annuli, options.iota1, options.iota2);

    Ok(AnalysisReport {
        degree: p.degree(),
        converged: roots.converged && critical_run.converged,
        roots: roots
            .roots
            .iter()
            .zip(&roots.residuals)
            .map(|(&value, &residual)| RootEntry { value, residual })
            .collect(),
        critical_points: critical,
        centers,
        conjecture: ConjectureSection {
            iota1: cov.iota1,
            iota2: cov.iota2,
            covered: cov.covered,
            uncovered_roots: cov.uncovered_roots,
            annuli: cov.annuli,
        },
    })
}

fn analyze_center(
    p: &Polynomial,
    cp: &Cluster,
    roots: &RootSet,
    options: &AnalysisOptions,
) -> Result<CenterRecord> {
    let center = cp.location;
    let profile = rho_profile_with(p, center, options.tolerances)?;
    let nearest = nearest_root_distance(roots, center)?;
    if profile.degenerate {
        return Ok(CenterRecord {
            center,
            multiplicity: cp.multiplicity,
            degenerate: true,
            rho_profile: (&profile).into(),
            lower_bounds: None,
            upper_bounds: None,
            nearest_root_distance: nearest,
            sandwich_ok: nearest <= POINT_SLACK * (1.0 + center.norm()),
        });
    }
    let n = p.degree();

    let h = cp.multiplicity.min(n - 1);
    let omega: Vec<usize> = (1..=h).collect();
    let (omega_gamma, omega_radius) =
        match verify_omega_condition(p, center, &omega, 0.0, options.tolerances) {
            Ok(v) => (
                Some(gamma_omega(&v.condition)?),
                Some(exclusion_radius_omega(&profile, &v)?),
            ),
            Err(_) => (None, None),
        };
    let scale = options.lower_bound_scale;
    let lower = LowerBounds {
        basic: exclusion_radius_basic(&profile)? * scale,
        omega,
        omega_gamma,
        omega_radius: omega_radius.map(|r| r * scale),
        sigma: sigma_radius(&profile.expansion)? * scale,
    };

    let general: Vec<Option<f64>> = (1..=n)
        .map(|k| inclusion_radius_general(&profile, k).ok())
        .collect();
    let critical = inclusion_radius_critical(&profile).ok();
    let multiplicity = inclusion_radius_multiplicity(&profile, h).unwrap_or_default();
    let best = general
        .iter()
        .flatten()
        .chain(critical.iter().map(|c| &c.best))
        .chain(multiplicity.iter())
        .copied()
        .fold(f64::INFINITY, f64::min);
    let upper = UpperBounds {
        general,
        critical,
        multiplicity,
        best,
    };

    let sandwich_ok = lower.max() <= nearest * (1.0 + options.lower_slack)
        && nearest <= upper.best * (1.0 + options.upper_slack);

    Ok(CenterRecord {
        center,
        multiplicity: cp.multiplicity,
        degenerate: false,
        rho_profile: (&profile).into(),
        lower_bounds: Some(lower),
        upper_bounds: Some(upper),
        nearest_root_distance: nearest,
        sandwich_ok,
    })
}

/// Writes `center_re,center_im,inner,outer` rows.
pub fn write_annuli_csv<W: io::Write>(annuli: &[Annulus], mut out: W) -> io::Result<()> {
    writeln!(out, "center_re,center_im,inner,outer")?;
    for a in annuli {
        writeln!(
            out,
            "{},{},{},{}",
            a.center.re, a.center.im, a.inner, a.outer
        )?;
    }
    Ok(())
}

fn fmt_complex(z: Complex64) -> String {
    format!("{:+.12e}{:+.12e}i", z.re, z.im)
}

pub fn render_text(report: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "degree {}  converged {}",
        report.degree, report.converged
    );
    for c in &report.centers {
        let _ = write!(
            s,
            "center {} (mult {})  nearest {:.12e}",
            fmt_complex(c.center),
            c.multiplicity,
            c.nearest_root_distance
        );
        match (&c.lower_bounds, &c.upper_bounds) {
            (Some(lo), Some(up)) => {
                let _ = write!(s, "  lower {:.12e}  upper {:.12e}", lo.max(), up.best);
            }
            _ => {
                let _ = write!(s, "  degenerate");
            }
        }
        let _ = writeln!(s, "  {}", if c.sandwich_ok { "ok" } else { "VIOLATION" });
    }
    let conj = &report.conjecture;
    let _ = writeln!(
        s,
        "annuli iota1 {} iota2 {}: {}",
        conj.iota1,
        conj.iota2,
        if conj.covered {
            "all roots covered"
        } else {
            "NOT covered"
        }
    );
    for r in &conj.uncovered_roots {
        let _ = writeln!(s, "  uncovered root {}", fmt_complex(*r));
    }
    s
}
