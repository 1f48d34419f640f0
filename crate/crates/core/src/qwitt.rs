//! The centrally extended graded algebra spanned by generators `d_m` and a
//! central element `ĉ`.
//!
//! The bracket is `[d_m, d_n] = [m-n] d_{m+n} + γ_m δ_{m+n,0} ĉ`, with `ĉ`
//! bracketing to zero against everything. The concrete realization sends
//! `d_m ↦ -z^{m+1}∂_q` and `ĉ ↦ τ`; the minus sign is the convention under
//! which the twisted composition rule closes on `[m-n] d_{m+n}` exactly,
//! and it is applied globally. In the realization the central term never
//! arises — reconciling the abstract `γ_m` with the operator picture is
//! the job of the cocycle, not of this module.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::DomainError;
use crate::qscalar::Scalar;
use crate::qseries::LaurentPoly;

/// A finite linear combination `Σ c_m d_m + a·ĉ`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<C: Scalar> {
    ctx: C::Ctx,
    d_terms: BTreeMap<i64, C>,
    central: C,
}

impl<C: Scalar> AlgebraElement<C> {
    pub fn zero_in(ctx: &C::Ctx) -> Self {
        AlgebraElement {
            ctx: ctx.clone(),
            d_terms: BTreeMap::new(),
            central: C::zero(ctx),
        }
    }

    /// The generator `d_m`.
    pub fn generator(ctx: &C::Ctx, m: i64) -> Self {
        let mut out = Self::zero_in(ctx);
        out.add_d_term(m, C::one(ctx));
        out
    }

    /// `a·ĉ`.
    pub fn central_term(ctx: &C::Ctx, a: C) -> Self {
        let mut out = Self::zero_in(ctx);
        out.central = a;
        out
    }

    pub fn from_d_terms(ctx: &C::Ctx, entries: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero_in(ctx);
        for (m, c) in entries {
            out.add_d_term(m, c);
        }
        out
    }

    pub fn ctx(&self) -> &C::Ctx {
        &self.ctx
    }

    pub fn add_d_term(&mut self, m: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.d_terms.remove(&m) {
            None => {
                self.d_terms.insert(m, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.d_terms.insert(m, sum);
                }
            }
        }
    }

    /// Coefficient of `d_m` (zero when absent).
    pub fn d_coeff(&self, m: i64) -> C {
        self.d_terms.get(&m).cloned().unwrap_or_else(|| C::zero(&self.ctx))
    }

    /// Coefficient of `ĉ`.
    pub fn central_coeff(&self) -> &C {
        &self.central
    }

    pub fn d_iter(&self) -> impl Iterator<Item = (i64, &C)> {
        self.d_terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.d_terms.is_empty() && self.central.is_zero()
    }

    /// True when the element is supported on `d_m` alone (no `d_n`, n≠m,
    /// and no central part) — a pure grade-m element.
    pub fn is_pure_grade(&self, m: i64) -> bool {
        self.central.is_zero() && self.d_terms.keys().all(|&n| n == m)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.ctx, rhs.ctx, "combined elements over different scalar contexts");
        let mut out = self.clone();
        for (&m, c) in &rhs.d_terms {
            out.add_d_term(m, c.clone());
        }
        out.central = out.central.add(&rhs.central);
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            ctx: self.ctx.clone(),
            d_terms: self.d_terms.iter().map(|(&m, c)| (m, c.neg())).collect(),
            central: self.central.neg(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero_in(&self.ctx);
        for (&m, a) in &self.d_terms {
            out.add_d_term(m, a.mul(c));
        }
        out.central = self.central.mul(c);
        out
    }
}

/// Bilinear extension of `[d_m, d_n] = [m-n] d_{m+n} + γ_m δ_{m+n,0} ĉ`.
/// Central parts of either argument bracket to zero.
pub fn d_bracket<C: Scalar>(x: &AlgebraElement<C>, y: &AlgebraElement<C>) -> AlgebraElement<C> {
    assert_eq!(x.ctx, y.ctx, "combined elements over different scalar contexts");
    let ctx = &x.ctx;
    let mut out = AlgebraElement::zero_in(ctx);
    for (&m, xm) in &x.d_terms {
        for (&n, yn) in &y.d_terms {
            let c = xm.mul(yn);
            out.add_d_term(m + n, C::qint(ctx, m - n).mul(&c));
            if m + n == 0 {
                out.central = out.central.add(&C::qgamma(ctx, m).mul(&c));
            }
        }
    }
    out
}

/// The diagonal operator `Γ(d_p) = <p> d_p`, defined on the span of the
/// generators only.
pub fn gamma_op<C: Scalar>(x: &AlgebraElement<C>) -> Result<AlgebraElement<C>, DomainError> {
    if !x.central.is_zero() {
        return Err(DomainError::NonzeroCentralPart);
    }
    let mut out = AlgebraElement::zero_in(&x.ctx);
    for (&p, c) in &x.d_terms {
        out.add_d_term(p, c.mul(&C::qangle(&x.ctx, p)));
    }
    Ok(out)
}

/// The Jacobi defect
/// `Ξ_{m,n,p} = [[d_m,d_n],Γ(d_p)] + [[d_n,d_p],Γ(d_m)] + [[d_p,d_m],Γ(d_n)]`,
/// identically zero: the `d_{m+n+p}` coefficient cancels through the cyclic
/// angle-bracket identity and the `ĉ` coefficient through the cubic one.
pub fn jacobi_defect<C: Scalar>(ctx: &C::Ctx, m: i64, n: i64, p: i64) -> AlgebraElement<C> {
    let term = |a: i64, b: i64, c: i64| {
        let inner = d_bracket(
            &AlgebraElement::generator(ctx, a),
            &AlgebraElement::generator(ctx, b),
        );
        let gamma_c = gamma_op(&AlgebraElement::generator(ctx, c))
            .expect("generators have no central part");
        d_bracket(&inner, &gamma_c)
    };
    term(m, n, p).add(&term(n, p, m)).add(&term(p, m, n))
}

/// The operator realization of an element: `d_m ↦ -z^{m+1}∂_q`, `ĉ ↦ τ`.
pub struct RealizedOp<C: Scalar> {
    element: AlgebraElement<C>,
}

/// Build the concrete operator for an element.
pub fn realize<C: Scalar>(x: &AlgebraElement<C>) -> RealizedOp<C> {
    RealizedOp { element: x.clone() }
}

impl<C: Scalar> RealizedOp<C> {
    pub fn apply(&self, f: &LaurentPoly<C>) -> LaurentPoly<C> {
        let ctx = &self.element.ctx;
        let mut out = LaurentPoly::zero_in(ctx);
        let df = f.dq();
        for (&m, c) in &self.element.d_terms {
            let shifted = LaurentPoly::monomial_in(ctx, m + 1, c.neg()).mul(&df);
            out = out.add(&shifted);
        }
        if !self.element.central.is_zero() {
            out = out.add(&f.tau(1).scale(&self.element.central));
        }
        out
    }
}

/// `ℓ_m = -z^{m+1}∂_q τ` applied to a field.
pub fn ell_apply<C: Scalar>(ctx: &C::Ctx, m: i64, f: &LaurentPoly<C>) -> LaurentPoly<C> {
    LaurentPoly::monomial_in(ctx, m + 1, C::one(ctx).neg()).mul(&f.tau(1).dq())
}

/// Realized form of the twisted composition rule
/// `q^m d_m d_n J - q^n d_n d_m J = [m-n] d_{m+n}` applied to `z^k`,
/// with `J = τ`. True iff both sides agree exactly; in this realization no
/// central contribution appears.
pub fn check_twisted_bracket<C: Scalar>(ctx: &C::Ctx, m: i64, n: i64, k: i64) -> bool {
    let zk = LaurentPoly::monomial_in(ctx, k, C::one(ctx));
    let tz = zk.tau(1);
    let dm = realize(&AlgebraElement::generator(ctx, m));
    let dn = realize(&AlgebraElement::generator(ctx, n));
    let lhs = dm
        .apply(&dn.apply(&tz))
        .scale(&C::qpow(ctx, m))
        .sub(&dn.apply(&dm.apply(&tz)).scale(&C::qpow(ctx, n)));
    let mut target = AlgebraElement::zero_in(ctx);
    target.add_d_term(m + n, C::qint(ctx, m - n));
    let rhs = realize(&target).apply(&zk);
    lhs == rhs
}

/// The q-bracket relation `q^{m-n} ℓ_m ℓ_n - q^{n-m} ℓ_n ℓ_m = [m-n] ℓ_{m+n}`
/// applied to `z^k`.
pub fn check_ell_relation<C: Scalar>(ctx: &C::Ctx, m: i64, n: i64, k: i64) -> bool {
    let zk = LaurentPoly::monomial_in(ctx, k, C::one(ctx));
    let lhs = ell_apply(ctx, m, &ell_apply(ctx, n, &zk))
        .scale(&C::qpow(ctx, m - n))
        .sub(&ell_apply(ctx, n, &ell_apply(ctx, m, &zk)).scale(&C::qpow(ctx, n - m)));
    let rhs = ell_apply(ctx, m + n, &zk).scale(&C::qint(ctx, m - n));
    lhs == rhs
}

/// Commutation of the grading twist with `ℓ_m`:
/// `τ² ℓ_m = q^{2m} ℓ_m τ²` applied to `z^k`.
pub fn check_chat_commutation<C: Scalar>(ctx: &C::Ctx, m: i64, k: i64) -> bool {
    let zk = LaurentPoly::monomial_in(ctx, k, C::one(ctx));
    let lhs = ell_apply(ctx, m, &zk).tau(2);
    let rhs = ell_apply(ctx, m, &zk.tau(2)).scale(&C::qpow(ctx, 2 * m));
    lhs == rhs
}

impl<C: Scalar + fmt::Display> fmt::Display for AlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.d_iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*d[{m}]")?;
        }
        if !self.central.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})*c", self.central)?;
        }
        Ok(())
    }
}
