//! The scalar field: exact rational functions in `q`, numeric scalars at a
//! fixed `q`, and the scalar identities behind the bracket and cocycle
//! computations.
//!
//! All verification runs on [`QExact`], where a passing check means the
//! expression is the zero rational function — an identity at that index,
//! not an approximation. [`QNumeric`] backs the simulation and the
//! exact-vs-numeric consistency tests.

mod exact;
mod numeric;
mod zpoly;

pub use exact::QExact;
pub use numeric::{qangle_value, qgamma_value, qint_value, QNumeric};

use std::fmt::Debug;

use num_complex::Complex64;

use crate::error::DomainError;

/// Common interface of the exact and numeric scalar kinds.
///
/// `Ctx` is whatever is needed to conjure a scalar out of thin air: nothing
/// for [`QExact`] (where `q` is symbolic), the numeric `q` for
/// [`QNumeric`]. Structures made of scalars carry a `Ctx` so that empty
/// containers still know their field.
pub trait Scalar: Clone + PartialEq + Debug {
    type Ctx: Clone + PartialEq + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self;
    fn one(ctx: &Self::Ctx) -> Self {
        Self::from_int(ctx, 1)
    }
    /// The q-integer `[m]`.
    fn qint(ctx: &Self::Ctx, m: i64) -> Self;
    /// The q-angle `<m>`.
    fn qangle(ctx: &Self::Ctx, m: i64) -> Self;
    /// The central coefficient `γ_m`.
    fn qgamma(ctx: &Self::Ctx, m: i64) -> Self;
    /// `q^k`.
    fn qpow(ctx: &Self::Ctx, k: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn invert(&self) -> Result<Self, DomainError>;
}

impl Scalar for QExact {
    type Ctx = ();

    fn ctx(&self) -> Self::Ctx {}
    fn zero(_: &()) -> Self {
        QExact::zero()
    }
    fn from_int(_: &(), n: i64) -> Self {
        QExact::from_int(n)
    }
    fn qint(_: &(), m: i64) -> Self {
        QExact::qint(m)
    }
    fn qangle(_: &(), m: i64) -> Self {
        QExact::qangle(m)
    }
    fn qgamma(_: &(), m: i64) -> Self {
        QExact::qgamma(m)
    }
    fn qpow(_: &(), k: i64) -> Self {
        QExact::qpow(k)
    }
    fn is_zero(&self) -> bool {
        QExact::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn invert(&self) -> Result<Self, DomainError> {
        QExact::invert(self)
    }
}

impl Scalar for QNumeric {
    type Ctx = Complex64;

    fn ctx(&self) -> Complex64 {
        self.q()
    }
    fn zero(q: &Complex64) -> Self {
        QNumeric::from_re(*q, 0.0)
    }
    fn from_int(q: &Complex64, n: i64) -> Self {
        QNumeric::from_re(*q, n as f64)
    }
    fn qint(q: &Complex64, m: i64) -> Self {
        QNumeric::new(*q, qint_value(*q, m))
    }
    fn qangle(q: &Complex64, m: i64) -> Self {
        QNumeric::new(*q, qangle_value(*q, m))
    }
    fn qgamma(q: &Complex64, m: i64) -> Self {
        QNumeric::new(*q, qgamma_value(*q, m))
    }
    fn qpow(q: &Complex64, k: i64) -> Self {
        QNumeric::new(*q, q.powi(k as i32))
    }
    fn is_zero(&self) -> bool {
        self.value() == Complex64::new(0.0, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn invert(&self) -> Result<Self, DomainError> {
        QNumeric::invert(self)
    }
}

/// Cyclic sum `[m-n][m+n-p]<p> + [n-p][n+p-m]<m> + [p-m][p+m-n]<n>`.
pub fn identity_z_sum<C: Scalar>(ctx: &C::Ctx, m: i64, n: i64, p: i64) -> C {
    let term = |a: i64, b: i64, c: i64| {
        C::qint(ctx, a).mul(&C::qint(ctx, b)).mul(&C::qangle(ctx, c))
    };
    term(m - n, m + n - p, p)
        .add(&term(n - p, n + p - m, m))
        .add(&term(p - m, p + m - n, n))
}

/// True iff the cyclic angle-bracket sum vanishes identically.
pub fn check_identity_z(m: i64, n: i64, p: i64) -> bool {
    identity_z_sum::<QExact>(&(), m, n, p).is_zero()
}

/// `[p+1][p][p-1][m-n] + [m+1][m][m-1][n-p] + [n+1][n][n-1][p-m]`,
/// meaningful on the surface `m+n+p = 0`.
pub fn identity_x_sum<C: Scalar>(ctx: &C::Ctx, m: i64, n: i64, p: i64) -> C {
    let cube = |a: i64| {
        C::qint(ctx, a + 1).mul(&C::qint(ctx, a)).mul(&C::qint(ctx, a - 1))
    };
    cube(p)
        .mul(&C::qint(ctx, m - n))
        .add(&cube(m).mul(&C::qint(ctx, n - p)))
        .add(&cube(n).mul(&C::qint(ctx, p - m)))
}

/// Checks the cubic-bracket sum on its constraint surface; inputs off the
/// surface are rejected rather than tested.
pub fn check_identity_x(m: i64, n: i64, p: i64) -> Result<bool, DomainError> {
    if m + n + p != 0 {
        return Err(DomainError::ConstraintViolation { m, n, p });
    }
    Ok(identity_x_sum::<QExact>(&(), m, n, p).is_zero())
}

/// `[m+1][m][m-1][2n+m] - [m+n-1][m+n][m+n+1][m-n] - [n+1][n][n-1][n+2m]`.
pub fn identity_y_sum<C: Scalar>(ctx: &C::Ctx, m: i64, n: i64) -> C {
    let cube = |a: i64| {
        C::qint(ctx, a + 1).mul(&C::qint(ctx, a)).mul(&C::qint(ctx, a - 1))
    };
    cube(m)
        .mul(&C::qint(ctx, 2 * n + m))
        .sub(&cube(m + n).mul(&C::qint(ctx, m - n)))
        .sub(&cube(n).mul(&C::qint(ctx, n + 2 * m)))
}

pub fn check_identity_y(m: i64, n: i64) -> bool {
    identity_y_sum::<QExact>(&(), m, n).is_zero()
}

/// The angle-difference form
/// `(<2m+1>-<1>)(<2n+2m-1>-<2n+1>) - (<2m+2n-1>-<1>)(<2m+1>-<2n+1>)
///  - (<2n+1>-<1>)(<2n+2m-1>-<2m+1>)`,
/// with the outer square brackets of the source read as plain grouping.
/// Term by term this is `(q - q^{-1})^4` times [`identity_y_sum`] under the
/// pairing `[a][b] = (<a+b> - <a-b>)/(q - q^{-1})^2`.
pub fn identity_w_sum<C: Scalar>(ctx: &C::Ctx, m: i64, n: i64) -> C {
    let diff = |a: i64, b: i64| C::qangle(ctx, a).sub(&C::qangle(ctx, b));
    diff(2 * m + 1, 1)
        .mul(&diff(2 * n + 2 * m - 1, 2 * n + 1))
        .sub(&diff(2 * m + 2 * n - 1, 1).mul(&diff(2 * m + 1, 2 * n + 1)))
        .sub(&diff(2 * n + 1, 1).mul(&diff(2 * n + 2 * m - 1, 2 * m + 1)))
}

pub fn check_identity_w(m: i64, n: i64) -> bool {
    identity_w_sum::<QExact>(&(), m, n).is_zero()
}

/// `q^{m+1}[n+1] - q^{n+1}[m+1] - [n-m]`.
pub fn identity_a10_diff<C: Scalar>(ctx: &C::Ctx, m: i64, n: i64) -> C {
    C::qpow(ctx, m + 1)
        .mul(&C::qint(ctx, n + 1))
        .sub(&C::qpow(ctx, n + 1).mul(&C::qint(ctx, m + 1)))
        .sub(&C::qint(ctx, n - m))
}

pub fn check_identity_a10(m: i64, n: i64) -> bool {
    identity_a10_diff::<QExact>(&(), m, n).is_zero()
}
