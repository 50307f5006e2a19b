#![allow(dead_code)]

use std::f64::consts::TAU;

use critbound::{Complex64, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Uniform in the unit disk.
pub fn unit_disk<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>())
}

/// Uniform in the annulus `lo <= |z| <= hi` (uniform in area).
pub fn annulus_point<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> Complex64 {
    let r2 = lo * lo + (hi * hi - lo * lo) * rng.gen::<f64>();
    Complex64::from_polar(r2.sqrt(), TAU * rng.gen::<f64>())
}

/// Monic, lower coefficients uniform in the unit disk.
pub fn random_monic<R: Rng>(rng: &mut R, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Complex64> = (0..degree).map(|_| unit_disk(rng)).collect();
    coeffs.push(c(1.0, 0.0));
    Polynomial::new(coeffs).unwrap()
}

/// The acceptance corpus: `count` monic polynomials with degrees 3..=12.
pub fn corpus(seed: u64, count: usize) -> Vec<Polynomial> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(3..=12);
            random_monic(&mut rng, degree)
        })
        .collect()
}

/// `(z^2 - m)^m` by binomial expansion.
pub fn square_family(m: usize) -> Polynomial {
    let mut coeffs = vec![0.0; 2 * m + 1];
    let mut binom = 1.0;
    for j in 0..=m {
        coeffs[2 * j] = binom * (-(m as f64)).powi((m - j) as i32);
        binom = binom * (m - j) as f64 / (j + 1) as f64;
    }
    Polynomial::from_real(&coeffs).unwrap()
}

/// `(z - n)^n` by binomial expansion.
pub fn shifted_power(n: usize) -> Polynomial {
    let mut coeffs = vec![0.0; n + 1];
    let mut binom = 1.0;
    for (k, a) in coeffs.iter_mut().enumerate() {
        *a = binom * (-(n as f64)).powi((n - k) as i32);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Polynomial::from_real(&coeffs).unwrap()
}

/// `Σ_{i=1}^n z^i - 1`.
pub fn geometric_minus_one(n: usize) -> Polynomial {
    let mut coeffs = vec![1.0; n + 1];
    coeffs[0] = -1.0;
    Polynomial::from_real(&coeffs).unwrap()
}
