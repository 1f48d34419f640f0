//! Finitely supported Laurent fields `v(z) = Σ v_n z^n` on the circle and
//! the q-difference calculus acting on them.
//!
//! The grading conventions: `∂_q` maps `z^n ↦ [n] z^{n-1}`, the scaling
//! operator `τ` maps `z^n ↦ q^n z^n`, and the circle integral picks out the
//! coefficient of `z^{-1}`. `Θ = (τ + τ⁻¹)⁻¹` acts diagonally as division
//! by the q-angle `<n>`; the alternating Neumann expansion of the same
//! operator is kept separately, as a partial sum, purely for convergence
//! experiments.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::DomainError;
use crate::qscalar::{QExact, QNumeric, Scalar};

/// A Laurent polynomial over one scalar kind. Zero coefficients are never
/// stored, and the context (nothing for exact scalars, the numeric `q`
/// otherwise) travels with the value so empty fields stay well typed.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<C: Scalar> {
    ctx: C::Ctx,
    terms: BTreeMap<i64, C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero_in(ctx: &C::Ctx) -> Self {
        LaurentPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one_in(ctx: &C::Ctx) -> Self {
        Self::monomial_in(ctx, 0, C::one(ctx))
    }

    /// `c · z^k`; the context is taken from the coefficient.
    pub fn monomial(k: i64, c: C) -> Self {
        let ctx = c.ctx();
        Self::monomial_in(&ctx, k, c)
    }

    pub fn monomial_in(ctx: &C::Ctx, k: i64, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { ctx: ctx.clone(), terms }
    }

    pub fn from_terms_in(ctx: &C::Ctx, entries: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero_in(ctx);
        for (k, c) in entries {
            out.add_term(k, c);
        }
        out
    }

    pub fn ctx(&self) -> &C::Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) coefficients.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of `z^k` (zero when absent).
    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(|| C::zero(&self.ctx))
    }

    /// Iterate `(exponent, coefficient)` in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn add_term(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&k) {
            None => {
                self.terms.insert(k, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(k, sum);
                }
            }
        }
    }

    fn assert_ctx(&self, rhs: &Self) {
        assert_eq!(self.ctx, rhs.ctx, "combined fields over different scalar contexts");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_ctx(rhs);
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }

    /// Exponent-convolution product `(fg)_k = Σ_{i+j=k} f_i g_j`.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_ctx(rhs);
        let mut out = Self::zero_in(&self.ctx);
        for (&i, a) in &self.terms {
            for (&j, b) in &rhs.terms {
                out.add_term(i + j, a.mul(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero_in(&self.ctx);
        for (&k, a) in &self.terms {
            out.add_term(k, a.mul(c));
        }
        out
    }

    /// The q-derivative: `z^n ↦ [n] z^{n-1}`.
    pub fn dq(&self) -> Self {
        let mut out = Self::zero_in(&self.ctx);
        for (&k, c) in &self.terms {
            out.add_term(k - 1, c.mul(&C::qint(&self.ctx, k)));
        }
        out
    }

    /// `τ^steps`: `z^n ↦ q^{steps·n} z^n`; negative steps give the inverse.
    pub fn tau(&self, steps: i64) -> Self {
        if steps == 0 {
            return self.clone();
        }
        let mut out = Self::zero_in(&self.ctx);
        for (&k, c) in &self.terms {
            out.add_term(k, c.mul(&C::qpow(&self.ctx, steps * k)));
        }
        out
    }

    /// `Θ = (τ + τ⁻¹)⁻¹`: diagonal division by `<n>`. Errors where `<n>`
    /// vanishes (numeric `q` at a root of unity).
    pub fn theta(&self) -> Result<Self, DomainError> {
        let mut out = Self::zero_in(&self.ctx);
        for (&k, c) in &self.terms {
            let inv = C::qangle(&self.ctx, k)
                .invert()
                .map_err(|_| DomainError::ThetaSingular { mode: k })?;
            out.add_term(k, c.mul(&inv));
        }
        Ok(out)
    }

    /// The circle integral: the coefficient of `z^{-1}`.
    pub fn integrate(&self) -> C {
        self.coeff(-1)
    }

    /// Galerkin projection onto `|k| <= n`.
    pub fn truncate(&self, n: i64) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(&k, _)| k.abs() <= n)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }
}

impl LaurentPoly<QExact> {
    /// Evaluate every exact coefficient at a numeric `q`.
    pub fn eval_at(&self, q: Complex64) -> LaurentPoly<QNumeric> {
        LaurentPoly {
            ctx: q,
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, QNumeric::new(q, c.eval(q))))
                .collect(),
        }
    }
}

impl LaurentPoly<QNumeric> {
    /// Partial sum of the alternating Neumann expansion of `Θ`:
    /// `τ Σ_j (-1)^j τ^{2j}` with `j < terms`.
    ///
    /// Requires `|q^{2k}| < 1` on every supported mode except mode 0, where
    /// every `τ` acts as the identity and the partial sum is well defined
    /// (though not convergent).
    pub fn theta_neumann(&self, terms: usize) -> Result<Self, DomainError> {
        let q = self.ctx;
        for &k in self.terms.keys() {
            if k != 0 && q.powi(2 * k as i32).norm() >= 1.0 {
                return Err(DomainError::NeumannDivergent { mode: k });
            }
        }
        let mut out = Self::zero_in(&self.ctx);
        for (&k, c) in &self.terms {
            let ratio = -q.powi(2 * k as i32);
            let mut power = q.powi(k as i32);
            let mut acc = Complex64::new(0.0, 0.0);
            for _ in 0..terms {
                acc += power;
                power *= ratio;
            }
            out.add_term(k, c.mul(&QNumeric::new(q, acc)));
        }
        Ok(out)
    }

    /// Largest coefficient magnitude (0 for the zero field).
    pub fn norm_inf(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn all_finite(&self) -> bool {
        self.terms.values().all(|c| c.is_finite())
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

/// The duality pairing `<(v∂_q, a), (u, c)> = ∫ v u + a c`.
pub fn pairing<C: Scalar>(v: &LaurentPoly<C>, a: &C, u: &LaurentPoly<C>, c: &C) -> C {
    v.mul(u).integrate().add(&a.mul(c))
}

/// Coefficient field of the vector-field bracket:
/// `[v∂_q, w∂_q] = [(τv)(∂_q w) - (τw)(∂_q v)] ∂_q`.
pub fn bracket_vec<C: Scalar>(v: &LaurentPoly<C>, w: &LaurentPoly<C>) -> LaurentPoly<C> {
    v.tau(1).mul(&w.dq()).sub(&w.tau(1).mul(&v.dq()))
}

/// Product rule `∂_q(ab) = (τa)(∂_q b) + (∂_q a)(τ⁻¹b)`, checked exactly.
pub fn check_leibniz<C: Scalar>(a: &LaurentPoly<C>, b: &LaurentPoly<C>) -> bool {
    let lhs = a.mul(b).dq();
    let rhs = a.tau(1).mul(&b.dq()).add(&a.dq().mul(&b.tau(-1)));
    lhs == rhs
}

/// Commutation `∂_q τ = q τ ∂_q` and its inverse-twist dual
/// `τ⁻¹ ∂_q = q ∂_q τ⁻¹`, applied to `z^n`.
pub fn check_a5<C: Scalar>(ctx: &C::Ctx, n: i64) -> bool {
    let f = LaurentPoly::monomial_in(ctx, n, C::one(ctx));
    let q = C::qpow(ctx, 1);
    let forward = f.tau(1).dq() == f.dq().tau(1).scale(&q);
    let dual = f.dq().tau(-1) == f.tau(-1).dq().scale(&q);
    forward && dual
}

/// Operator identity `∂_q z^{p+1} = q^{p+1} z^{p+1} ∂_q + [p+1] z^p τ⁻¹`,
/// with both sides applied to `z^k`.
pub fn check_a9<C: Scalar>(ctx: &C::Ctx, p: i64, k: i64) -> bool {
    let f = LaurentPoly::monomial_in(ctx, k, C::one(ctx));
    let zp1 = LaurentPoly::monomial_in(ctx, p + 1, C::one(ctx));
    let zp = LaurentPoly::monomial_in(ctx, p, C::one(ctx));
    let lhs = zp1.mul(&f).dq();
    let rhs = zp1
        .mul(&f.dq())
        .scale(&C::qpow(ctx, p + 1))
        .add(&zp.mul(&f.tau(-1)).scale(&C::qint(ctx, p + 1)));
    lhs == rhs
}

/// Integral shift rule `q ∫ f g = ∫ (τ⁻¹f)(τ⁻¹g)`.
pub fn check_a12<C: Scalar>(f: &LaurentPoly<C>, g: &LaurentPoly<C>) -> bool {
    let lhs = C::qpow(f.ctx(), 1).mul(&f.mul(g).integrate());
    let rhs = f.tau(-1).mul(&g.tau(-1)).integrate();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Lp = LaurentPoly<QExact>;

    fn zmon(k: i64) -> Lp {
        LaurentPoly::monomial(k, QExact::one())
    }

    fn qint(m: i64) -> QExact {
        QExact::qint(m)
    }

    #[test]
    fn dq_on_monomials() {
        for m in [-6i64, -1, 0, 1, 2, 9] {
            assert_eq!(zmon(m).dq(), LaurentPoly::monomial(m - 1, qint(m)));
        }
        assert!(zmon(0).dq().is_zero());
        assert_eq!(zmon(1).dq(), LaurentPoly::monomial(0, QExact::one()));
    }

    #[test]
    fn tau_scales_modes() {
        let f = LaurentPoly::from_terms_in(&(), [(2, QExact::from_int(3)), (-1, QExact::one())]);
        assert_eq!(zmon(5).tau(1), LaurentPoly::monomial(5, QExact::qpow(5)));
        assert_eq!(f.tau(0), f);
        assert_eq!(f.tau(2).tau(-2), f);
    }

    #[test]
    fn mul_convolves() {
        assert_eq!(zmon(3).mul(&zmon(-5)), zmon(-2));
        let f = LaurentPoly::from_terms_in(&(), [(1, QExact::one()), (-1, QExact::one())]);
        let g = LaurentPoly::from_terms_in(
            &(),
            [(1, QExact::one()), (-1, QExact::from_int(-1))],
        );
        let expected = LaurentPoly::from_terms_in(
            &(),
            [(2, QExact::one()), (-2, QExact::from_int(-1))],
        );
        assert_eq!(f.mul(&g), expected);
        assert_eq!(f.mul(&LaurentPoly::one_in(&())), f);
    }

    #[test]
    fn theta_divides_by_angle() {
        let half = QExact::from_int(2).invert().unwrap();
        assert_eq!(zmon(0).theta().unwrap(), LaurentPoly::monomial(0, half));
        for n in [-4i64, 1, 7] {
            let inv = QExact::qangle(n).invert().unwrap();
            assert_eq!(zmon(n).theta().unwrap(), LaurentPoly::monomial(n, inv));
        }
        // theta inverts (τ + τ⁻¹)
        let f = LaurentPoly::from_terms_in(
            &(),
            [(3, QExact::from_int(2)), (0, QExact::one()), (-2, QExact::from_int(5))],
        );
        let tau_pair = f.tau(1).add(&f.tau(-1));
        assert_eq!(tau_pair.theta().unwrap(), f);
        assert_eq!(f.theta().unwrap().tau(1).add(&f.theta().unwrap().tau(-1)), f);
    }

    #[test]
    fn integrate_picks_residue() {
        assert!(zmon(-1).integrate().is_one());
        assert!(zmon(0).integrate().is_zero());
        let f = LaurentPoly::from_terms_in(
            &(),
            [(-1, QExact::from_int(7)), (4, QExact::one())],
        );
        assert_eq!(f.integrate(), QExact::from_int(7));
    }

    #[test]
    fn integral_of_derivative_vanishes() {
        let f = LaurentPoly::from_terms_in(
            &(),
            [(-3, QExact::from_int(4)), (0, QExact::from_int(-2)), (5, QExact::one())],
        );
        assert!(f.dq().integrate().is_zero());
        assert!(zmon(0).dq().integrate().is_zero());
    }

    #[test]
    fn pairing_examples() {
        let zero = QExact::zero();
        assert!(pairing(&zmon(1), &zero, &zmon(-2), &QExact::from_int(5)).is_one());
        let empty = Lp::zero_in(&());
        assert_eq!(
            pairing(&empty, &QExact::from_int(2), &empty, &QExact::from_int(3)),
            QExact::from_int(6)
        );
        let u = LaurentPoly::from_terms_in(&(), [(-3, QExact::one()), (1, QExact::one())]);
        assert_eq!(
            pairing(&zmon(2), &QExact::one(), &u, &QExact::one()),
            QExact::from_int(2)
        );
    }

    #[test]
    fn bracket_vec_examples() {
        let v = LaurentPoly::from_terms_in(&(), [(2, QExact::from_int(3)), (-1, QExact::one())]);
        assert!(bracket_vec(&v, &v).is_zero());
        assert_eq!(bracket_vec(&zmon(1), &zmon(2)), zmon(2));
        for n in -5i64..=5 {
            for m in -5i64..=5 {
                assert_eq!(
                    bracket_vec(&zmon(n + 1), &zmon(m + 1)),
                    LaurentPoly::monomial(n + m + 1, qint(m - n)),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn leibniz_and_a9_and_a12() {
        for (m, n) in [(0i64, 0i64), (3, -2), (-5, 7), (1, 1)] {
            assert!(check_leibniz(&zmon(m), &zmon(n)));
        }
        assert!(check_a9::<QExact>(&(), 0, 0));
        assert!(check_a9::<QExact>(&(), 2, 3));
        assert!(check_a9::<QExact>(&(), -4, 7));
        assert!(check_a12(&zmon(0), &zmon(-1)));
        assert!(check_a12(&zmon(1), &zmon(1)));
        for a in -4i64..=4 {
            assert!(check_a12(&zmon(a), &zmon(-1 - a)));
        }
    }

    #[test]
    fn a5_commutation_band() {
        for n in -10i64..=10 {
            assert!(check_a5::<QExact>(&(), n));
        }
    }

    #[test]
    fn dq_reduces_to_derivative_near_q_one() {
        let q = Complex64::new(1.0 + 1e-6, 0.0);
        for n in -8i64..=8 {
            if n == 0 {
                continue;
            }
            let d = LaurentPoly::monomial_in(&q, n, QNumeric::from_re(q, 1.0)).dq();
            let got = d.coeff(n - 1).value();
            let want = n as f64;
            assert!((got.re - want).abs() / want.abs() < 1e-4, "n={n} got={got}");
        }
    }

    #[test]
    fn theta_neumann_examples() {
        // constant mode, one term: τ fixes constants
        let q = Complex64::new(1.7, 0.0);
        let f = LaurentPoly::monomial_in(&q, 0, QNumeric::from_re(q, 1.0));
        assert_eq!(f.theta_neumann(1).unwrap(), f);

        // geometric convergence to theta on a convergent mode
        let q = Complex64::new(0.5, 0.0);
        let f = LaurentPoly::monomial_in(&q, 2, QNumeric::from_re(q, 1.0));
        let exact = f.theta().unwrap().coeff(2).value();
        let approx = f.theta_neumann(40).unwrap().coeff(2).value();
        assert!((approx - exact).norm() < 1e-10);

        // q=0.9, k=3, enough terms: converges to z^3/<3>
        let q = Complex64::new(0.9, 0.0);
        let f = LaurentPoly::monomial_in(&q, 3, QNumeric::from_re(q, 1.0));
        let exact = f.theta().unwrap().coeff(3).value();
        let approx = f.theta_neumann(200).unwrap().coeff(3).value();
        assert!((approx - exact).norm() < 1e-12);

        // divergent mode rejected
        let g = LaurentPoly::monomial_in(&q, -2, QNumeric::from_re(q, 1.0));
        assert_eq!(g.theta_neumann(10), Err(DomainError::NeumannDivergent { mode: -2 }));
    }

    #[test]
    fn neumann_error_shrinks_geometrically() {
        let q = Complex64::new(0.8, 0.0);
        let f = LaurentPoly::monomial_in(&q, 1, QNumeric::from_re(q, 1.0));
        let exact = f.theta().unwrap().coeff(1).value();
        let err = |t: usize| (f.theta_neumann(t).unwrap().coeff(1).value() - exact).norm();
        let (e10, e20, e30) = (err(10), err(20), err(30));
        let ratio = q.re * q.re; // |q^2|
        assert!(e20 / e10 < ratio.powi(8));
        assert!(e30 / e20 < ratio.powi(8));
    }

    prop_compose! {
        fn arb_poly()(entries in prop::collection::vec((-6i64..=6, -9i64..=9), 0..5)) -> Lp {
            LaurentPoly::from_terms_in(&(), entries.into_iter()
                .map(|(k, c)| (k, QExact::from_int(c))))
        }
    }

    proptest! {
        #[test]
        fn prop_bracket_antisymmetric(v in arb_poly(), w in arb_poly()) {
            prop_assert!(bracket_vec(&v, &w).add(&bracket_vec(&w, &v)).is_zero());
        }

        #[test]
        fn prop_bracket_bilinear(u in arb_poly(), v in arb_poly(), w in arb_poly()) {
            let lhs = bracket_vec(&u.add(&v), &w);
            let rhs = bracket_vec(&u, &w).add(&bracket_vec(&v, &w));
            prop_assert_eq!(lhs, rhs);
            let c = QExact::from_int(3);
            prop_assert_eq!(bracket_vec(&u.scale(&c), &w), bracket_vec(&u, &w).scale(&c));
        }

        #[test]
        fn prop_leibniz(a in arb_poly(), b in arb_poly()) {
            prop_assert!(check_leibniz(&a, &b));
        }

        #[test]
        fn prop_a12(f in arb_poly(), g in arb_poly()) {
            prop_assert!(check_a12(&f, &g));
        }

        #[test]
        fn prop_integral_of_dq_vanishes(f in arb_poly()) {
            prop_assert!(f.dq().integrate().is_zero());
        }
    }
}
