//! Floating-point scalars tied to a fixed numeric deformation parameter.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::DomainError;

/// A complex scalar together with the `q` it was computed at.
///
/// Every value carries its context so that scalars from different
/// configurations can never be combined silently: binary operations panic
/// when the contexts differ. Exact and numeric scalars cannot mix at all —
/// they are distinct types.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QNumeric {
    value: Complex64,
    q: Complex64,
}

impl QNumeric {
    pub fn new(q: Complex64, value: Complex64) -> Self {
        QNumeric { value, q }
    }

    pub fn from_re(q: Complex64, re: f64) -> Self {
        QNumeric { value: Complex64::new(re, 0.0), q }
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    pub fn norm(&self) -> f64 {
        self.value.norm()
    }

    pub fn is_finite(&self) -> bool {
        self.value.re.is_finite() && self.value.im.is_finite()
    }

    fn same_ctx(&self, rhs: &Self) -> Complex64 {
        assert_eq!(self.q, rhs.q, "combined scalars computed at different q");
        self.q
    }
}

/// `[m]` at a numeric `q`; exactly `0.0` for `m = 0`.
pub fn qint_value(q: Complex64, m: i64) -> Complex64 {
    (q.powi(m as i32) - q.powi(-m as i32)) / (q - q.powi(-1))
}

/// `<m> = q^m + q^{-m}` at a numeric `q`.
pub fn qangle_value(q: Complex64, m: i64) -> Complex64 {
    q.powi(m as i32) + q.powi(-m as i32)
}

/// `γ_m = [m+1][m][m-1]/([2][3]<m>)` at a numeric `q`.
pub fn qgamma_value(q: Complex64, m: i64) -> Complex64 {
    qint_value(q, m + 1) * qint_value(q, m) * qint_value(q, m - 1)
        / (qint_value(q, 2) * qint_value(q, 3) * qangle_value(q, m))
}

impl Add for &QNumeric {
    type Output = QNumeric;
    fn add(self, rhs: &QNumeric) -> QNumeric {
        QNumeric { value: self.value + rhs.value, q: self.same_ctx(rhs) }
    }
}

impl Sub for &QNumeric {
    type Output = QNumeric;
    fn sub(self, rhs: &QNumeric) -> QNumeric {
        QNumeric { value: self.value - rhs.value, q: self.same_ctx(rhs) }
    }
}

impl Mul for &QNumeric {
    type Output = QNumeric;
    fn mul(self, rhs: &QNumeric) -> QNumeric {
        QNumeric { value: self.value * rhs.value, q: self.same_ctx(rhs) }
    }
}

impl Neg for &QNumeric {
    type Output = QNumeric;
    fn neg(self) -> QNumeric {
        QNumeric { value: -self.value, q: self.q }
    }
}

impl QNumeric {
    pub fn invert(&self) -> Result<Self, DomainError> {
        if self.value == Complex64::new(0.0, 0.0) {
            return Err(DomainError::DivisionByZero);
        }
        Ok(QNumeric { value: self.value.inv(), q: self.q })
    }
}

impl fmt::Display for QNumeric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_zero_is_exact() {
        let q = Complex64::new(1.3, 0.0);
        assert_eq!(qint_value(q, 0), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn qint_classical_limit() {
        let q = Complex64::new(1.0 + 1e-8, 0.0);
        for m in [-5i64, 2, 7] {
            let v = qint_value(q, m);
            assert!((v.re - m as f64).abs() < 1e-6);
        }
    }

    #[test]
    #[should_panic(expected = "different q")]
    fn mixing_contexts_panics() {
        let a = QNumeric::from_re(Complex64::new(1.5, 0.0), 1.0);
        let b = QNumeric::from_re(Complex64::new(2.0, 0.0), 1.0);
        let _ = &a + &b;
    }
}
