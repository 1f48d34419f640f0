//! Exact rational functions in the deformation parameter `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::zpoly::ZPoly;
use crate::error::DomainError;

/// A rational function in `q` with integer coefficients, kept in canonical
/// form: numerator and denominator share no polynomial factor, no integer
/// content, and no power of `q`; the denominator's leading coefficient is
/// positive; zero is `0/1`. Equality is therefore structural.
///
/// Laurent expressions such as `q + q^{-1}` are stored with the negative
/// powers cleared into the denominator: `(q^2 + 1)/q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExact {
    num: ZPoly,
    den: ZPoly,
}

impl QExact {
    fn reduced(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QExact { num, den: ZPoly::one() };
        }
        // strip the common power of q
        let shift = num.ord().unwrap().min(den.ord().unwrap());
        let mut num = num.shift_down(shift);
        let mut den = den.shift_down(shift);
        // strip the common integer content
        let g = num.content().gcd(&den.content());
        if g != BigInt::from(1) {
            num = num.div_exact(&ZPoly::from_coeffs(vec![g.clone()]));
            den = den.div_exact(&ZPoly::from_coeffs(vec![g]));
        }
        // strip the common polynomial factor; monomials were fully handled
        // by the q-power shift, so only multi-term pairs need a real gcd
        if !num.is_monomial() && !den.is_monomial() {
            let g = ZPoly::gcd(&num, &den);
            if g.degree().unwrap_or(0) > 0 {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        QExact { num, den }
    }

    pub fn zero() -> Self {
        QExact { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        QExact { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        QExact { num: ZPoly::constant(n), den: ZPoly::one() }
    }

    /// `q^k` for any integer `k`.
    pub fn qpow(k: i64) -> Self {
        if k >= 0 {
            QExact { num: ZPoly::monomial(k as usize, 1), den: ZPoly::one() }
        } else {
            QExact { num: ZPoly::one(), den: ZPoly::monomial((-k) as usize, 1) }
        }
    }

    /// The q-integer `[m] = (q^m - q^{-m})/(q - q^{-1})`.
    ///
    /// For `m > 0` this is the Laurent polynomial
    /// `q^{m-1} + q^{m-3} + ... + q^{-(m-1)}`, built here directly in
    /// canonical form; `[0] = 0` and `[-m] = -[m]`.
    pub fn qint(m: i64) -> Self {
        if m == 0 {
            return QExact::zero();
        }
        let a = m.unsigned_abs() as usize;
        let mut coeffs = vec![BigInt::zero(); 2 * a - 1];
        for i in 0..a {
            coeffs[2 * i] = BigInt::from(if m > 0 { 1 } else { -1 });
        }
        QExact { num: ZPoly::from_coeffs(coeffs), den: ZPoly::monomial(a - 1, 1) }
    }

    /// The q-angle `<m> = q^m + q^{-m}`; `<0> = 2` and `<-m> = <m>`.
    pub fn qangle(m: i64) -> Self {
        let a = m.unsigned_abs() as usize;
        if a == 0 {
            return QExact::from_int(2);
        }
        let mut coeffs = vec![BigInt::zero(); 2 * a + 1];
        coeffs[0] = BigInt::from(1);
        coeffs[2 * a] = BigInt::from(1);
        QExact { num: ZPoly::from_coeffs(coeffs), den: ZPoly::monomial(a, 1) }
    }

    /// The central coefficient `γ_m = [m+1][m][m-1] / ([2][3]<m>)`.
    pub fn qgamma(m: i64) -> Self {
        let num = &(&QExact::qint(m + 1) * &QExact::qint(m)) * &QExact::qint(m - 1);
        let den = &(&QExact::qint(2) * &QExact::qint(3)) * &QExact::qangle(m);
        &num * &den.invert().expect("[2][3]<m> is a nonzero rational function")
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == ZPoly::one() && self.den == ZPoly::one()
    }

    pub fn invert(&self) -> Result<Self, DomainError> {
        if self.is_zero() {
            return Err(DomainError::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(QExact { num, den })
    }

    /// Evaluate at a numeric point `q`.
    pub fn eval(&self, q: Complex64) -> Complex64 {
        self.num.eval(q) / self.den.eval(q)
    }

    /// Re-derive the canonical form from the stored parts. Normalization is
    /// idempotent, so for any reachable value this is the identity.
    pub fn renormalized(&self) -> Self {
        QExact::reduced(self.num.clone(), self.den.clone())
    }
}

impl Add for &QExact {
    type Output = QExact;
    fn add(self, rhs: &QExact) -> QExact {
        QExact::reduced(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &QExact {
    type Output = QExact;
    fn sub(self, rhs: &QExact) -> QExact {
        QExact::reduced(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Mul for &QExact {
    type Output = QExact;
    fn mul(self, rhs: &QExact) -> QExact {
        QExact::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for &QExact {
    type Output = QExact;
    fn neg(self) -> QExact {
        QExact { num: self.num.neg(), den: self.den.clone() }
    }
}

impl fmt::Display for QExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == ZPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_small_values() {
        assert!(QExact::qint(0).is_zero());
        assert!(QExact::qint(1).is_one());
        // [2] = q + q^{-1} = (q^2+1)/q
        assert_eq!(QExact::qint(2), &QExact::qangle(1) * &QExact::one());
        assert_eq!(QExact::qint(-3), (&QExact::qint(3)).neg());
    }

    #[test]
    fn qangle_small_values() {
        assert_eq!(QExact::qangle(0), QExact::from_int(2));
        assert_eq!(QExact::qangle(1), QExact::qint(2));
        assert_eq!(QExact::qangle(-4), QExact::qangle(4));
    }

    #[test]
    fn qgamma_values() {
        assert!(QExact::qgamma(0).is_zero());
        assert!(QExact::qgamma(1).is_zero());
        // γ_2 = 1/<2> = q^2/(q^4+1)
        let expected = QExact::qangle(2).invert().unwrap();
        assert_eq!(QExact::qgamma(2), expected);
        assert_eq!(QExact::qgamma(-5), (&QExact::qgamma(5)).neg());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let samples = [
            QExact::qgamma(4),
            &QExact::qint(5) * &QExact::qangle(3).invert().unwrap(),
            &QExact::qpow(-7) + &QExact::from_int(3),
            QExact::zero(),
        ];
        for s in &samples {
            assert_eq!(&s.renormalized(), s);
        }
    }

    #[test]
    fn field_arithmetic() {
        let a = QExact::qint(5);
        let b = QExact::qangle(3);
        let prod = &a * &b;
        assert_eq!(&(&prod * &a.invert().unwrap()) * &b.invert().unwrap(), QExact::one());
        assert!((&a - &a).is_zero());
        assert_eq!(QExact::zero().invert(), Err(DomainError::DivisionByZero));
    }

    #[test]
    fn angle_product_rule() {
        // <m><n> = <m+n> + <m-n>
        for m in -12..=12 {
            for n in -12..=12 {
                let lhs = &QExact::qangle(m) * &QExact::qangle(n);
                let rhs = &QExact::qangle(m + n) + &QExact::qangle(m - n);
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn eval_matches_f64() {
        let q = Complex64::new(1.5, 0.0);
        let v = QExact::qint(4).eval(q);
        let expected = (1.5f64.powi(4) - 1.5f64.powi(-4)) / (1.5 - 1.0 / 1.5);
        assert!((v.re - expected).abs() < 1e-12 * expected.abs());
        assert!(v.im.abs() < 1e-15);
    }
}
