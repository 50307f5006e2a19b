//! Dense complex polynomials in ascending coefficient order.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `p(z) = Σ coeffs[i] z^i`, with a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl TryFrom<Vec<Complex64>> for Polynomial {
    type Error = Error;

    fn try_from(coeffs: Vec<Complex64>) -> Result<Self> {
        Polynomial::new(coeffs)
    }
}

impl From<Polynomial> for Vec<Complex64> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Polynomial {
    /// Builds a polynomial, trimming zero high-degree coefficients.
    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self> {
        while coeffs
            .last()
            .is_some_and(|c| *c == Complex64::new(0.0, 0.0))
        {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Polynomial { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `leading · Π (z - r)`.
    pub fn from_roots(leading: Complex64, roots: &[Complex64]) -> Result<Self> {
        let mut coeffs = vec![leading];
        for &r in roots {
            coeffs.push(Complex64::new(0.0, 0.0));
            for i in (1..coeffs.len()).rev() {
                coeffs[i] = coeffs[i - 1] - r * coeffs[i];
            }
            coeffs[0] = -r * coeffs[0];
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// `(p(z), p'(z))` in a single Horner pass.
    pub fn evaluate_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut value = Complex64::new(0.0, 0.0);
        let mut slope = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            slope = slope * z + value;
            value = value * z + c;
        }
        (value, slope)
    }

    /// `Σ |a_i| |z|^i`, the natural scale of rounding errors in `p(z)`.
    pub fn magnitude_at(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn derivative(&self) -> Result<Polynomial> {
        if self.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        Polynomial::new(coeffs)
    }

    /// The `order`-th derivative; `order` must not exceed the degree.
    pub fn nth_derivative(&self, order: usize) -> Result<Polynomial> {
        (0..order).try_fold(self.clone(), |q, _| q.derivative())
    }

    /// Recenters `p` at `center` by repeated synthetic division.
    pub fn taylor_shift(&self, center: Complex64) -> ShiftedExpansion {
        let mut b = self.coeffs.clone();
        let n = self.degree();
        for k in 0..n {
            for j in (k..n).rev() {
                let carry = b[j + 1];
                b[j] += center * carry;
            }
        }
        ShiftedExpansion { center, b }
    }

    /// Entrywise upper bounds on `|p^{(k)}(center)/k!|` obtained by shifting
    /// `Σ |a_i| z^i` to `|center|`. Used as the reference scale for deciding
    /// whether a shifted coefficient is numerically zero.
    pub fn magnitude_envelope(&self, center: Complex64) -> Vec<f64> {
        let mut c: Vec<f64> = self.coeffs.iter().map(|a| a.norm()).collect();
        let r = center.norm();
        let n = self.degree();
        for k in 0..n {
            for j in (k..n).rev() {
                c[j] += r * c[j + 1];
            }
        }
        c
    }

    /// `q(z) = c · p(z)`.
    pub fn scale(&self, factor: Complex64) -> Result<Polynomial> {
        Polynomial::new(self.coeffs.iter().map(|&a| a * factor).collect())
    }

    /// `q(z) = p(z + shift)`.
    pub fn translate(&self, shift: Complex64) -> Polynomial {
        Polynomial {
            coeffs: self.taylor_shift(shift).b,
        }
    }

    /// `q(z) = p(alpha · z)`.
    pub fn dilate(&self, alpha: Complex64) -> Result<Polynomial> {
        let mut power = Complex64::new(1.0, 0.0);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            coeffs.push(a * power);
            power *= alpha;
        }
        Polynomial::new(coeffs)
    }
}

/// Coefficients of `p` about `center`: `b[k] = p^{(k)}(center) / k!`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedExpansion {
    pub center: Complex64,
    pub b: Vec<Complex64>,
}

impl ShiftedExpansion {
    pub fn degree(&self) -> usize {
        self.b.len() - 1
    }

    /// `Σ b[k] (z - center)^k`.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let w = z - self.center;
        self.b
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * w + c)
    }

    /// Back to ascending coefficients in `z`.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        Ok(Polynomial::new(self.b.clone())?.translate(-self.center))
    }

    /// Power sums `s_k = Σ_i (ξ_i - center)^{-k}`, `k = 1..=m`, from the
    /// Newton identities `k a_k = -s_k - Σ_{i<k} a_i s_{k-i}` applied to the
    /// coefficients normalized so that `a_0 = 1`. The identities hold for
    /// every `k` (with `a_k = 0` past the degree), so `m` is not capped.
    pub fn newton_power_sums(&self, m: usize) -> Result<Vec<Complex64>> {
        let n = self.degree();
        let b0 = self.b[0];
        if b0 == Complex64::new(0.0, 0.0) {
            return Err(Error::CenterIsRoot);
        }
        let a: Vec<Complex64> = self.b.iter().map(|&bk| bk / b0).collect();
        let mut s: Vec<Complex64> = Vec::with_capacity(m);
        for k in 1..=m {
            let ak = if k <= n {
                a[k]
            } else {
                Complex64::new(0.0, 0.0)
            };
            let mut acc = -ak * k as f64;
            for i in 1..k.min(n + 1) {
                acc -= a[i] * s[k - i - 1];
            }
            s.push(acc);
        }
        Ok(s)
    }
}
