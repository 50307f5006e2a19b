//! Exit criteria. Each test prints one `PASS`/`FAIL` line and then asserts.
//!
//! Run with `cargo test -p critbound --test acceptance -- --nocapture` to see
//! the lines.

// Negated comparisons are deliberate: a NaN must count as a failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use common::*;
use critbound::conjecture::{check_coverage, growth_sweep, loglog_slope, CounterexampleFamily};
use critbound::lower::{
    exclusion_radius_basic, exclusion_radius_omega, gamma_omega, sigma_radius,
    verify_omega_condition, OmegaCondition,
};
use critbound::oracle::{critical_points, find_roots, nearest_root_distance};
use critbound::radius::{rho_profile, Tolerances};
use critbound::upper::{
    gamma_sequence, inclusion_radius_critical, inclusion_radius_general,
    inclusion_radius_multiplicity,
};
use critbound::{Complex64, Polynomial};

const CORPUS_SEED: u64 = 0x5eed_0001;
const CORPUS_SIZE: usize = 1000;
const GOLDEN: f64 = 0.618_033_988_7;

fn verdict(id: &str, title: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS {id} {title}");
    } else {
        println!("FAIL {id} {title}");
        for f in failures {
            println!("     {f}");
        }
    }
    assert!(failures.is_empty(), "{id} failed: {failures:#?}");
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn c01_counterexample_radii() {
    let mut failures = Vec::new();
    for n in [3usize, 10, 100, 1000] {
        let family = CounterexampleFamily::new(n).unwrap();
        let rho2 = rho_profile(&family.polynomial, c(1.0, 0.0))
            .unwrap()
            .rho_k(2);
        let want = (2.0 / (n + 1) as f64).sqrt();
        if !(rel(rho2, want) <= 1e-10) {
            failures.push(format!("n={n}: rho_2 = {rho2}, want {want}"));
        }
    }
    verdict(
        "C01",
        "counterexample radii rho^(n,2) = sqrt(2/(n+1))",
        &failures,
    );
}

#[test]
fn c02_counterexample_refutation() {
    let mut failures = Vec::new();
    for (iota2, n) in [(2.0, 10usize), (5.0, 60), (10.0, 250)] {
        let p = CounterexampleFamily::new(n).unwrap().polynomial;
        let report = check_coverage(&p, 0.618, iota2).unwrap();
        let origin_uncovered = report.uncovered_roots.iter().any(|r| r.norm() < 1e-12);
        if report.covered || !origin_uncovered {
            failures.push(format!(
                "iota2={iota2} n={n}: covered={} origin uncovered={origin_uncovered}",
                report.covered
            ));
        }
    }
    let p = CounterexampleFamily::new(100).unwrap().polynomial;
    let report = check_coverage(&p, 0.618, 10.0).unwrap();
    if !report.covered {
        let rho = report.annuli[0].rho;
        failures.push(format!(
            "iota2=10 n=100: expected coverage, but {} root(s) uncovered; rho_j = {rho} (min over k), \
             so iota2*rho_j = {} < 1 = |0 - zeta_j|",
            report.uncovered_roots.len(),
            10.0 * rho
        ));
    }
    verdict(
        "C02",
        "counterexample refutes a fixed outer constant",
        &failures,
    );
}

#[test]
fn c03_ratio_growth() {
    let mut failures = Vec::new();
    for n in [10usize, 100] {
        let m = CounterexampleFamily::new(n).unwrap().measure().unwrap();
        let got = m.measured_ratio(2);
        let want = ((n + 1) as f64 / 2.0).sqrt();
        if !((got - want).abs() <= 1e-9) {
            failures.push(format!("n={n}: ratio(2) = {got}, want {want}"));
        }
    }
    let n_list = [10usize, 100, 1000];
    for k in [2usize, 3] {
        let rows = growth_sweep(&n_list, k).unwrap();
        for r in &rows {
            if !(r.measured_ratio >= r.lower_bound * (1.0 - 1e-12)) {
                failures.push(format!(
                    "k={k} n={}: measured {} below {}",
                    r.n, r.measured_ratio, r.lower_bound
                ));
            }
        }
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .map(|r| (r.n as f64, r.measured_ratio))
            .collect();
        let slope = loglog_slope(&pts);
        let want = 1.0 - 1.0 / k as f64;
        println!("     k={k}: log-log slope {slope:.4} (target {want:.4})");
        if !((slope - want).abs() <= 0.1) {
            failures.push(format!("k={k}: slope {slope}, want {want} ± 0.1"));
        }
    }
    verdict("C03", "origin ratio growth ~ n^(1-1/k)", &failures);
}

#[test]
fn c04_golden_ratio_constant() {
    let mut failures = Vec::new();
    let g =
        |omega: Vec<usize>| gamma_omega(&OmegaCondition::new(omega, 0.0, 1.0).unwrap()).unwrap();
    let g1 = g(vec![1]);
    if !((g1 - GOLDEN).abs() <= 1e-9) {
        failures.push(format!("h=1: {g1}"));
    }
    let g2 = g(vec![1, 2]);
    if !((g2 - 0.682).abs() <= 5e-4) {
        failures.push(format!("h=2: {g2}"));
    }
    let g3 = g(vec![1, 2, 3]);
    if !((g3 - 0.724).abs() <= 5e-4) {
        failures.push(format!("h=3: {g3}"));
    }
    println!("     gamma: h=1 {g1:.10}  h=2 {g2:.10}  h=3 {g3:.10}");
    verdict(
        "C04",
        "exclusion constants 0.618 / 0.682 / 0.724",
        &failures,
    );
}

#[test]
fn c05_epsilon_expansion() {
    let printed_slope = 1.0 + 3.0 / 5f64.sqrt();
    let err = |eps: f64| {
        let g = gamma_omega(&OmegaCondition::new(vec![1], eps, 1.0).unwrap()).unwrap();
        (g - (GOLDEN - eps * printed_slope)).abs()
    };
    let (e1, e2) = (err(1e-2), err(5e-3));
    let ratio = e1 / e2;
    println!("     error at 1e-2: {e1:.3e}, at 5e-3: {e2:.3e}, ratio {ratio:.4}");
    let mut failures = Vec::new();
    if !(3.0..=5.0).contains(&ratio) {
        failures.push(format!(
            "error ratio {ratio:.4} not in [3, 5]: the error is first order in ε, so the \
             expansion coefficient (1 + 3/√5) does not match the root of \
             t^2 + t - 1 + (1 - t) ε = 0, whose slope is -(3/(2√5) - 1/2)"
        ));
    }
    verdict(
        "C05",
        "first-order expansion of gamma in epsilon",
        &failures,
    );
}

#[test]
fn c06_exclusion_soundness_sweep() {
    let mut failures = Vec::new();
    let mut centers = 0usize;
    for (idx, p) in corpus(CORPUS_SEED, CORPUS_SIZE).iter().enumerate() {
        let roots = find_roots(p).unwrap();
        assert!(roots.converged, "oracle failed on corpus polynomial {idx}");
        for cp in critical_points(p).unwrap() {
            let profile = rho_profile(p, cp.location).unwrap();
            if profile.degenerate {
                continue;
            }
            centers += 1;
            let d = nearest_root_distance(&roots, cp.location).unwrap();
            let basic = exclusion_radius_basic(&profile).unwrap();
            let sigma = sigma_radius(&profile.expansion).unwrap();
            let golden =
                match verify_omega_condition(p, cp.location, &[1], 0.0, Tolerances::default()) {
                    Ok(v) => exclusion_radius_omega(&profile, &v).unwrap(),
                    Err(e) => {
                        failures.push(format!("poly {idx}: critical point rejected: {e:?}"));
                        continue;
                    }
                };
            if !(d - golden >= -1e-12 * d) {
                failures.push(format!("poly {idx}: nearest {d} vs 0.618 rho {golden}"));
            }
            if !(d >= sigma * (1.0 - 1e-12)) {
                failures.push(format!("poly {idx}: nearest {d} vs sigma {sigma}"));
            }
            if !(d > basic) {
                failures.push(format!("poly {idx}: nearest {d} vs rho/2 {basic}"));
            }
        }
    }
    println!("     {centers} critical points checked");
    verdict(
        "C06",
        "exclusion radii never exceed the nearest root",
        &failures,
    );
}

#[test]
fn c07_inclusion_soundness_sweep() {
    let mut failures = Vec::new();
    let mut centers = 0usize;
    for (idx, p) in corpus(CORPUS_SEED, CORPUS_SIZE).iter().enumerate() {
        let roots = find_roots(p).unwrap();
        for cp in critical_points(p).unwrap() {
            let profile = rho_profile(p, cp.location).unwrap();
            if profile.degenerate {
                continue;
            }
            centers += 1;
            let d = nearest_root_distance(&roots, cp.location).unwrap();
            match inclusion_radius_critical(&profile) {
                Ok(inc) => {
                    if !(d <= inc.best * (1.0 + 1e-10)) {
                        failures.push(format!(
                            "poly {idx}: nearest {d} > critical best {}",
                            inc.best
                        ));
                    }
                }
                Err(e) => failures.push(format!("poly {idx}: {e}")),
            }
            for k in 1..=p.degree() {
                if let Ok(bound) = inclusion_radius_general(&profile, k) {
                    if !(d <= bound * (1.0 + 1e-10)) {
                        failures.push(format!("poly {idx}: nearest {d} > general k={k} {bound}"));
                    }
                }
            }
        }
    }
    println!("     {centers} critical points checked");
    verdict("C07", "inclusion radii always reach a root", &failures);
}

#[test]
fn c08_sharpness_attainment() {
    let mut failures = Vec::new();
    let origin = c(0.0, 0.0);
    for m in 1..=6usize {
        let p = square_family(m);
        let n = 2 * m;
        let rho = rho_profile(&p, origin).unwrap().rho_min_from2;
        let d = nearest_root_distance(&find_roots(&p).unwrap(), origin).unwrap();
        let ratio = d / (rho * (n as f64 / 2.0).sqrt());
        if !((ratio - 1.0).abs() <= 1e-9) {
            failures.push(format!("(z^2-{m})^{m}: ratio {ratio}"));
        }
    }
    for n in 2..=8usize {
        let p = shifted_power(n);
        let rho = rho_profile(&p, origin).unwrap().rho_min_full;
        let d = nearest_root_distance(&find_roots(&p).unwrap(), origin).unwrap();
        let ratio = d / (n as f64 * rho);
        if !((ratio - 1.0).abs() <= 1e-9) {
            failures.push(format!("(z-{n})^{n}: ratio {ratio}"));
        }
    }
    verdict(
        "C08",
        "extremal polynomials attain the inclusion bounds",
        &failures,
    );
}

#[test]
fn c09_half_bound_near_sharpness() {
    let mut failures = Vec::new();
    for n in 2..=50usize {
        let p = geometric_minus_one(n);
        let f = |t: f64| p.evaluate(c(t, 0.0)).re;
        let (lo, hi) = (0.5, 0.5 * (1.0 + 1.0 / n as f64));
        // f is increasing on [0, ∞); a sign change pins the real root strictly inside.
        if !(f(lo) < 0.0 && f(hi) > 0.0) {
            failures.push(format!(
                "n={n}: f(1/2) = {:e}, f(upper) = {:e}",
                f(lo),
                f(hi)
            ));
            continue;
        }
        let (mut a, mut b) = (lo, hi);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if f(mid) < 0.0 {
                a = mid;
            } else {
                b = mid;
            }
        }
        if !(b > lo && a < hi) {
            failures.push(format!("n={n}: root bracket [{a}, {b}] escaped"));
        }
        if n <= 20 {
            let rs = find_roots(&p).unwrap();
            let real = rs
                .roots
                .iter()
                .filter(|r| r.im.abs() < 1e-12 && r.re > 0.0)
                .map(|r| r.re)
                .next();
            match real {
                Some(r) if (r - a).abs() <= 1e-12 => {}
                other => failures.push(format!("n={n}: oracle real root {other:?} vs {a}")),
            }
        }
    }
    verdict(
        "C09",
        "real root of z + ... + z^n - 1 lies in (1/2, (1+1/n)/2)",
        &failures,
    );
}

#[test]
fn c10_gamma_sequence_invariant() {
    let mut failures = Vec::new();
    for n in 4..=60usize {
        let g = gamma_sequence(n, n).unwrap();
        let nf = n as f64;
        if g.gamma_k(2) != nf || g.gamma_k(3) != nf {
            failures.push(format!(
                "n={n}: gamma_2,3 = {}, {}",
                g.gamma_k(2),
                g.gamma_k(3)
            ));
        }
        if g.gamma_k(4) != nf * (nf + 2.0) / 2.0 {
            failures.push(format!("n={n}: gamma_4 = {}", g.gamma_k(4)));
        }
        for k in 2..=n {
            let cap = k as f64 * (nf / 2.0).sqrt().powi(k as i32);
            if !(g.gamma_k(k) <= cap * (1.0 + 1e-12)) {
                failures.push(format!("n={n} k={k}: gamma {} > {cap}", g.gamma_k(k)));
            }
        }
    }
    verdict("C10", "gamma_k <= k (n/2)^(k/2)", &failures);
}

#[test]
fn c11_multiplicity_bound_attainment() {
    let mut coeffs = vec![0.0; 10];
    coeffs[0] = -27.0;
    coeffs[3] = 27.0;
    coeffs[6] = -9.0;
    coeffs[9] = 1.0;
    let p = Polynomial::from_real(&coeffs).unwrap();
    let origin = c(0.0, 0.0);
    let profile = rho_profile(&p, origin).unwrap();
    let bounds = inclusion_radius_multiplicity(&profile, 2).unwrap();
    let bound = bounds.iter().copied().fold(f64::INFINITY, f64::min);
    let d = nearest_root_distance(&find_roots(&p).unwrap(), origin).unwrap();
    let expected = profile.rho_k(3) * 3f64.cbrt();
    let mut failures = Vec::new();
    if !((bound - expected).abs() <= 1e-12) {
        failures.push(format!(
            "bound {bound}, expected rho_3 * 3^(1/3) = {expected}"
        ));
    }
    if !((bound - d).abs() <= 1e-8) {
        failures.push(format!("bound {bound} vs nearest {d}"));
    }
    verdict(
        "C11",
        "(z^3-3)^3 attains the multiplicity-2 bound",
        &failures,
    );
}

#[test]
fn c12_oracle_quality_gate() {
    let mut failures = Vec::new();
    let mut rng = rng(0x5eed_0012);

    for trial in 0..200 {
        let degree = 1 + trial % 20;
        let p = random_monic(&mut rng, degree);
        let rs = find_roots(&p).unwrap();
        let q = rs.reconstruct().unwrap();
        let scale = p.coeffs().iter().map(|a| a.norm()).fold(0.0, f64::max);
        let err = p
            .coeffs()
            .iter()
            .zip(q.coeffs())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        if q.degree() != p.degree() || !(err <= 1e-6 * scale) {
            failures.push(format!(
                "reconstruction trial {trial} (deg {degree}): error {err:e}"
            ));
        }
    }

    for trial in 0..300 {
        let degree = 1 + trial % 8;
        let roots: Vec<Complex64> = (0..degree)
            .map(|_| annulus_point(&mut rng, 0.5, 2.0))
            .collect();
        let p = Polynomial::from_roots(c(1.0, 0.0), &roots).unwrap();
        let found = find_roots(&p).unwrap();
        let sums = p
            .taylor_shift(c(0.0, 0.0))
            .newton_power_sums(degree)
            .unwrap();
        for (k, s) in sums.iter().enumerate() {
            let power = -(k as i32 + 1);
            let direct: Complex64 = found.roots.iter().map(|r| r.powi(power)).sum();
            let scale: f64 = found.roots.iter().map(|r| r.norm().powi(power)).sum();
            if !((s - direct).norm() <= 1e-7 * scale) {
                failures.push(format!(
                    "power sums trial {trial} k={}: {s} vs {direct}",
                    k + 1
                ));
            }
        }
    }
    verdict(
        "C12",
        "oracle reconstruction and Newton power sums",
        &failures,
    );
}
