//! The 2-cocycle on vector fields that makes the central extension genuine.
//!
//! Two routes compute the same pairing: an integral form pushing the field
//! through `∂_q² Θ ∂_q` and a closed mode form summing `v_{n+1} w_{-n+1} γ_n`.
//! They must agree exactly; the Jacobi-type cyclic sum `Υ` built from the
//! vector-field bracket and the diagonal `Γ` must vanish exactly.

use crate::error::DomainError;
use crate::qscalar::Scalar;
use crate::qseries::{bracket_vec, LaurentPoly};

/// The normalization `a = 1/([2][3])`.
pub fn coupling_a<C: Scalar>(ctx: &C::Ctx) -> C {
    C::qint(ctx, 2)
        .mul(&C::qint(ctx, 3))
        .invert()
        .expect("[2][3] is a nonzero rational function")
}

/// Integral form: `φ(v∂_q, w∂_q) = a ∫ w ∂_q²((τ+τ⁻¹)⁻¹ ∂_q v)`.
pub fn phi_integral<C: Scalar>(
    v: &LaurentPoly<C>,
    w: &LaurentPoly<C>,
) -> Result<C, DomainError> {
    let core = v.dq().theta()?.dq().dq();
    Ok(coupling_a::<C>(v.ctx()).mul(&w.mul(&core).integrate()))
}

/// Mode form: `φ(v∂_q, w∂_q) = Σ_n v_{n+1} w_{-n+1} γ_n`.
pub fn phi_modes<C: Scalar>(v: &LaurentPoly<C>, w: &LaurentPoly<C>) -> C {
    let ctx = v.ctx();
    let mut acc = C::zero(ctx);
    for (kv, cv) in v.iter() {
        let n = kv - 1;
        let cw = w.coeff(-n + 1);
        if cw.is_zero() {
            continue;
        }
        acc = acc.add(&cv.mul(&cw).mul(&C::qgamma(ctx, n)));
    }
    acc
}

/// The vector-field avatar of `Γ`: `z^{p+1} ↦ <p> z^{p+1}`.
pub fn gamma_vec<C: Scalar>(u: &LaurentPoly<C>) -> LaurentPoly<C> {
    let ctx = u.ctx();
    let mut out = LaurentPoly::zero_in(ctx);
    for (k, c) in u.iter() {
        out.add_term(k, c.mul(&C::qangle(ctx, k - 1)));
    }
    out
}

/// The cocycle-Jacobi sum
/// `Υ(u,v,w) = φ([v,w], Γu) + φ([w,u], Γv) + φ([u,v], Γw)`,
/// evaluated through the mode form; identically zero.
pub fn upsilon<C: Scalar>(
    u: &LaurentPoly<C>,
    v: &LaurentPoly<C>,
    w: &LaurentPoly<C>,
) -> C {
    phi_modes(&bracket_vec(v, w), &gamma_vec(u))
        .add(&phi_modes(&bracket_vec(w, u), &gamma_vec(v)))
        .add(&phi_modes(&bracket_vec(u, v), &gamma_vec(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::QExact;
    use crate::qwitt::{d_bracket, AlgebraElement};

    type Lp = LaurentPoly<QExact>;

    fn zmon(k: i64) -> Lp {
        LaurentPoly::monomial(k, QExact::one())
    }

    #[test]
    fn phi_on_paired_monomials_gives_gamma() {
        for n in [4i64, 2, -3, 0, 1] {
            let v = zmon(n + 1);
            let w = zmon(-n + 1);
            assert_eq!(phi_integral(&v, &w).unwrap(), QExact::qgamma(n), "n={n}");
            assert_eq!(phi_modes(&v, &w), QExact::qgamma(n), "n={n}");
        }
        // z², z⁰ picks n=1, γ_1 = 0
        assert!(phi_integral(&zmon(2), &zmon(0)).unwrap().is_zero());
        // z³, z⁻¹ picks n=2, γ_2 = 1/<2>
        assert_eq!(
            phi_integral(&zmon(3), &zmon(-1)).unwrap(),
            QExact::qangle(2).invert().unwrap()
        );
    }

    #[test]
    fn integral_and_mode_forms_agree() {
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let v = zmon(a);
                let w = zmon(b);
                assert_eq!(phi_integral(&v, &w).unwrap(), phi_modes(&v, &w), "a={a} b={b}");
            }
        }
        let v = LaurentPoly::from_terms_in(
            &(),
            [(3, QExact::from_int(2)), (-1, QExact::from_int(-5)), (0, QExact::one())],
        );
        let w = LaurentPoly::from_terms_in(
            &(),
            [(-1, QExact::from_int(3)), (2, QExact::from_int(7))],
        );
        assert_eq!(phi_integral(&v, &w).unwrap(), phi_modes(&v, &w));
    }

    #[test]
    fn phi_is_antisymmetric() {
        let v = LaurentPoly::from_terms_in(&(), [(3, QExact::one()), (-1, QExact::one())]);
        assert!(phi_modes(&v, &v).is_zero());
        let w = LaurentPoly::from_terms_in(
            &(),
            [(2, QExact::from_int(4)), (0, QExact::from_int(-3))],
        );
        assert!(phi_modes(&v, &w).add(&phi_modes(&w, &v)).is_zero());
        assert!(phi_modes(&Lp::zero_in(&()), &w).is_zero());
    }

    #[test]
    fn phi_is_bilinear() {
        let u = LaurentPoly::from_terms_in(&(), [(4, QExact::one()), (-2, QExact::from_int(3))]);
        let v = LaurentPoly::from_terms_in(&(), [(1, QExact::from_int(-2)), (3, QExact::one())]);
        let w = LaurentPoly::from_terms_in(&(), [(-1, QExact::one()), (0, QExact::from_int(5))]);
        let c = QExact::from_int(7);
        assert_eq!(
            phi_modes(&u.add(&v), &w),
            phi_modes(&u, &w).add(&phi_modes(&v, &w))
        );
        assert_eq!(
            phi_modes(&u, &v.add(&w)),
            phi_modes(&u, &v).add(&phi_modes(&u, &w))
        );
        assert_eq!(phi_modes(&u.scale(&c), &w), phi_modes(&u, &w).mul(&c));
        assert_eq!(phi_modes(&u, &w.scale(&c)), phi_modes(&u, &w).mul(&c));
    }

    #[test]
    fn gamma_vec_examples() {
        assert_eq!(gamma_vec(&zmon(1)), zmon(1).scale(&QExact::from_int(2)));
        for p in [-3i64, 0, 5] {
            assert_eq!(
                gamma_vec(&zmon(p + 1)),
                zmon(p + 1).scale(&QExact::qangle(p))
            );
        }
        let f = zmon(2).add(&zmon(0));
        assert_eq!(gamma_vec(&f), f.scale(&QExact::qangle(1)));
    }

    #[test]
    fn upsilon_vanishes() {
        let u = LaurentPoly::from_terms_in(&(), [(2, QExact::one()), (-1, QExact::from_int(3))]);
        let w = LaurentPoly::from_terms_in(&(), [(0, QExact::one()), (4, QExact::from_int(-2))]);
        assert!(upsilon(&u, &u, &w).is_zero());
        assert!(upsilon(&zmon(2), &zmon(3), &zmon(-4)).is_zero());
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                for c in -4i64..=4 {
                    assert!(upsilon(&zmon(a), &zmon(b), &zmon(c)).is_zero(), "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn phi_matches_abstract_central_coefficient() {
        for m in -6i64..=6 {
            for n in -6i64..=6 {
                let phi = phi_modes(&zmon(m + 1), &zmon(n + 1));
                let bracket = d_bracket(
                    &AlgebraElement::<QExact>::generator(&(), m),
                    &AlgebraElement::generator(&(), n),
                );
                assert_eq!(&phi, bracket.central_coeff(), "m={m} n={n}");
            }
        }
    }
}
