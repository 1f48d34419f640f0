//! Dense polynomials in `q` with integer coefficients.
//!
//! This is the machinery below [`QExact`](super::QExact): ordinary (not
//! Laurent) polynomials, kept trimmed so the coefficient vector never ends
//! in zeros. Negative powers of `q` are handled one level up by the
//! rational-function wrapper.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// `coeffs[i]` is the coefficient of `q^i`; the last entry is nonzero.
/// An empty vector is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        if c == 0 {
            ZPoly::zero()
        } else {
            ZPoly { coeffs: vec![BigInt::from(c)] }
        }
    }

    pub fn monomial(degree: usize, c: i64) -> Self {
        if c == 0 {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::from(c);
        ZPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient; `None` for zero.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// True when exactly one coefficient is nonzero (`c * q^k`).
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Divide by `q^k`; requires `ord() >= k`.
    pub fn shift_down(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(self.ord().is_none_or(|o| o >= k));
        ZPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        let zero = BigInt::zero();
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = rhs.coeffs.get(i).unwrap_or(&zero);
            coeffs.push(a + b);
        }
        ZPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        ZPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        ZPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g == BigInt::from(1) {
                break;
            }
        }
        g
    }

    /// Divide out the content (no-op on zero).
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c == BigInt::from(1) {
            return self.clone();
        }
        ZPoly { coeffs: self.coeffs.iter().map(|x| x / &c).collect() }
    }

    /// Pseudo-remainder of `self` by `d`: repeated leading-term elimination
    /// after scaling by `lc(d)`, so everything stays over the integers.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let lc_d = d.leading_coeff().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lc_r = r.leading_coeff().clone();
            r = r.scale(&lc_d).sub(&d.shift_up(dr - dd).scale(&lc_r));
        }
        r
    }

    /// Primitive gcd via the primitive polynomial remainder sequence.
    /// Result has positive leading coefficient; gcd(0, 0) = 0.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut a = a.primitive_part();
        let mut b = b.primitive_part();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if !a.is_zero() && a.leading_coeff().is_negative() {
            a = a.neg();
        }
        a
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return ZPoly::zero();
        }
        let deg = self.degree().unwrap();
        assert!(deg >= dd, "inexact polynomial division");
        let lc_d = d.leading_coeff().clone();
        let mut quotient = vec![BigInt::zero(); deg - dd + 1];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let (c, rem) = r.leading_coeff().div_rem(&lc_d);
            assert!(rem.is_zero(), "inexact polynomial division");
            r = r.sub(&d.shift_up(dr - dd).scale(&c));
            quotient[dr - dd] = c;
        }
        assert!(r.is_zero(), "inexact polynomial division");
        ZPoly::from_coeffs(quotient)
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, q: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * q + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one = BigInt::from(1);
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag == one => write!(f, "q")?,
                1 => write!(f, "{mag}*q")?,
                _ if mag == one => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}
