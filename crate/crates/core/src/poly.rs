//! Complex polynomials in ascending coefficient order and the operators
//! every inequality in this crate is phrased in: evaluation, ordinary and
//! polar derivatives, the conjugate-reciprocal transform and lacunary
//! profile extraction.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Relative threshold below which a coefficient counts as an exact zero
/// when extracting the lacunary gap order.
pub const PROFILE_ZERO_TOL: f64 = 1e-12;

/// A polynomial with complex coefficients stored ascending by exponent:
/// `coeffs[j]` multiplies `z^j`.
///
/// Invariants: the coefficient vector is nonempty, every entry is finite,
/// and the leading entry is nonzero unless the value is the zero
/// polynomial (represented as a single zero coefficient).
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// exact zeros.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("empty coefficient list".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite coefficient".into()));
        }
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::ZERO) {
            coeffs.pop();
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor from real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Self {
            coeffs: vec![Complex64::ZERO],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::ZERO
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Index of the highest stored coefficient. The zero polynomial
    /// reports degree 0 by convention.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().expect("coeffs nonempty")
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation from the leading coefficient down.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::InvalidInput("non-finite evaluation point".into()));
        }
        Ok(self.eval_unchecked(z))
    }

    #[inline]
    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// `sum_j |a_j| r^j`, the magnitude envelope used for residual
    /// certification of computed roots.
    pub(crate) fn abs_envelope(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * r + c.norm();
        }
        acc
    }

    /// Ordinary derivative; the derivative of a constant is the zero
    /// polynomial.
    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * j as f64)
            .collect();
        Self::new(coeffs).expect("derivative of finite polynomial is finite")
    }

    /// Polar derivative `D_a P(z) = n P(z) + (a - z) P'(z)` with respect
    /// to the point `alpha`.
    ///
    /// The degree-`n` coefficient cancels identically, so the result is
    /// assembled directly at degree `n-1` as
    /// `(n - j) a_j + alpha (j + 1) a_{j+1}`; no catastrophic subtraction
    /// of two degree-`n` polynomials is involved.
    pub fn polar_derivative(&self, alpha: Complex64) -> Result<Self> {
        if !alpha.re.is_finite() || !alpha.im.is_finite() {
            return Err(Error::InvalidInput("non-finite alpha".into()));
        }
        let n = self.degree();
        if n == 0 {
            return Err(Error::DegeneratePolynomial(
                "polar derivative needs degree >= 1".into(),
            ));
        }
        let coeffs = (0..n)
            .map(|j| self.coeffs[j] * (n - j) as f64 + alpha * self.coeffs[j + 1] * (j + 1) as f64)
            .collect();
        Self::new(coeffs)
    }

    /// The conjugate-reciprocal `Q(z) = z^n conj(P(1/conj(z)))`:
    /// coefficients reversed and conjugated.
    pub fn conjugate_reciprocal(&self) -> Self {
        let coeffs = self.coeffs.iter().rev().map(|c| c.conj()).collect();
        Self::new(coeffs).expect("reversal of finite polynomial is finite")
    }

    /// Extracts the lacunary profile `(n, mu, a_n, a_{n-mu})` where `mu`
    /// is the smallest `j >= 1` with `a_{n-j}` nonzero relative to the
    /// largest coefficient magnitude.
    ///
    /// For the monomial `a_n z^n` no such `j` exists; by convention the
    /// profile degenerates to `mu = n` with `a_{n-mu} = 0`, which makes
    /// the `S_mu` functional collapse to `k^{mu+1}` consistently.
    pub fn lacunary_profile(&self, tol: f64) -> Result<LacunaryProfile> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::DegeneratePolynomial(
                "lacunary profile needs degree >= 1".into(),
            ));
        }
        if !(tol >= 0.0) {
            return Err(Error::InvalidInput("negative profile tolerance".into()));
        }
        let scale = self.max_coeff_abs();
        for j in 1..=n {
            let c = self.coeffs[n - j];
            if c.norm() > tol * scale {
                return Ok(LacunaryProfile {
                    n,
                    mu: j,
                    a_n: self.leading(),
                    a_n_minus_mu: c,
                });
            }
        }
        Ok(LacunaryProfile {
            n,
            mu: n,
            a_n: self.leading(),
            a_n_minus_mu: Complex64::ZERO,
        })
    }

    /// Expands `leading * prod_j (z - r_j)` by incremental convolution.
    pub fn from_roots(roots: &[Complex64], leading: Complex64) -> Result<Self> {
        if leading == Complex64::ZERO {
            return Err(Error::InvalidInput("zero leading coefficient".into()));
        }
        if !leading.re.is_finite() || !leading.im.is_finite() {
            return Err(Error::InvalidInput("non-finite leading coefficient".into()));
        }
        if roots
            .iter()
            .any(|r| !r.re.is_finite() || !r.im.is_finite())
        {
            return Err(Error::InvalidInput("non-finite root".into()));
        }
        let mut coeffs = vec![Complex64::ZERO; roots.len() + 1];
        coeffs[0] = leading;
        let mut len = 1;
        for &r in roots {
            coeffs[len] = coeffs[len - 1];
            for i in (1..len).rev() {
                coeffs[i] = coeffs[i - 1] - r * coeffs[i];
            }
            coeffs[0] = -r * coeffs[0];
            len += 1;
        }
        Self::new(coeffs)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if *c == Complex64::ZERO && self.coeffs.len() > 1 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match j {
                0 => {}
                1 => write!(f, "*z")?,
                _ => write!(f, "*z^{j}")?,
            }
        }
        Ok(())
    }
}

// Reports and poly files carry coefficients as [re, im] pairs ascending.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            coeffs: &'a [[f64; 2]],
        }
        let pairs: Vec<[f64; 2]> = self.coeffs.iter().map(|c| [c.re, c.im]).collect();
        Repr { coeffs: &pairs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<[f64; 2]>,
        }
        let repr = Repr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        Polynomial::new(coeffs).map_err(serde::de::Error::custom)
    }
}

/// The shape data `(n, mu, a_n, a_{n-mu})` every bound formula consumes.
///
/// `mu` is the gap order: coefficients of `z^{n-1} ... z^{n-mu+1}` all
/// vanish (up to the extraction tolerance).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LacunaryProfile {
    pub n: usize,
    pub mu: usize,
    pub a_n: Complex64,
    pub a_n_minus_mu: Complex64,
}
