//! The qKdV flow `u_t = -[c' ∂_q²Θ∂_q u + ∂_q(u·τu) + (τ⁻¹u)·∂_q(τ⁻¹u)]`
//! and its supporting casts: the Euler-equation derivation cross-checks,
//! the classical q→1 oracle, Galerkin truncation, and explicit RK4 time
//! stepping on the mode band `|k| <= N`.
//!
//! The right-hand-side evaluators are generic over the scalar kind so that
//! the algebraic equivalences (the two equation forms, the pairing
//! identity) can be certified with exact arithmetic, while the stepping
//! runs on numeric scalars.

use num_complex::Complex64;
use thiserror::Error;

use crate::cocycle::{coupling_a, phi_integral};
use crate::error::DomainError;
use crate::qscalar::{QNumeric, Scalar};
use crate::qseries::{bracket_vec, LaurentPoly};

/// Abort threshold for a single mode magnitude during stepping.
pub const BLOWUP_LIMIT: f64 = 1e12;

/// Smallest `|<n>|` tolerated on the working band `|n| <= N+3`.
pub const ANGLE_FLOOR: f64 = 1e-8;

/// Numerical parameters of a truncated qKdV run.
#[derive(Clone, Debug, PartialEq)]
pub struct SimConfig {
    /// Deformation parameter: real positive (≠1) or unimodular `e^{iε}`.
    pub q: Complex64,
    /// Coefficient `c'` of the linear dispersion term.
    pub cprime: f64,
    /// Mode truncation: support is kept within `[-n_modes, n_modes]`.
    pub n_modes: i64,
    pub dt: f64,
    pub steps: u64,
    /// Sampling stride for the trajectory (in steps).
    pub output_every: u64,
}

impl SimConfig {
    /// Validates ranges and the conditioning of `Θ` on the working band.
    pub fn validate(&self) -> Result<(), SimError> {
        let err = |msg: String| Err(SimError::Config(msg));
        if !(self.q.re.is_finite() && self.q.im.is_finite()) || self.q.norm() == 0.0 {
            return err(format!("q must be finite and nonzero, got {}", self.q));
        }
        if self.q == Complex64::new(1.0, 0.0) || self.q == Complex64::new(-1.0, 0.0) {
            return err(format!("q must differ from 1 and -1, got {}", self.q));
        }
        if !self.cprime.is_finite() {
            return err(format!("cprime must be finite, got {}", self.cprime));
        }
        if self.n_modes < 4 {
            return err(format!("n_modes must be at least 4, got {}", self.n_modes));
        }
        if !self.dt.is_finite() || self.dt <= 0.0 {
            return err(format!("dt must be positive and finite, got {}", self.dt));
        }
        if self.output_every == 0 {
            return err("output_every must be at least 1".to_string());
        }
        for n in 0..=(self.n_modes + 3) {
            let angle = crate::qscalar::qangle_value(self.q, n);
            if angle.norm() < ANGLE_FLOOR {
                return err(format!(
                    "q is too close to a root of unity: |<{n}>| = {:.3e} < {ANGLE_FLOOR:e}",
                    angle.norm()
                ));
            }
        }
        Ok(())
    }
}

/// The complex mode vector `u_k(t)`, supported within `[-N, N]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SimState {
    pub t: f64,
    pub u: LaurentPoly<QNumeric>,
}

/// Time-indexed samples of a run.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<SimState>,
}

impl Trajectory {
    pub fn final_state(&self) -> &SimState {
        self.samples.last().expect("trajectory always contains the initial state")
    }
}

#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("blow-up at step {step}: a mode magnitude exceeded {BLOWUP_LIMIT:e}")]
    BlowUp { step: u64, partial: Trajectory },
}

/// Failure of a single step, before the driving loop attaches context.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("a mode magnitude exceeded {BLOWUP_LIMIT:e} or turned non-finite")]
    Unstable,
}

/// Dispersion core `∂_q² Θ ∂_q u`; on `z^k` the coefficient is
/// `[k][k-1][k-2]/<k-1>` landing on `z^{k-3}`.
pub fn linear_core<C: Scalar>(u: &LaurentPoly<C>) -> Result<LaurentPoly<C>, DomainError> {
    Ok(u.dq().theta()?.dq().dq())
}

/// `c' ∂_q² Θ ∂_q u`.
pub fn linear_term<C: Scalar>(
    u: &LaurentPoly<C>,
    cprime: &C,
) -> Result<LaurentPoly<C>, DomainError> {
    Ok(linear_core(u)?.scale(cprime))
}

/// `∂_q(u·τu) + (τ⁻¹u)·∂_q(τ⁻¹u)`.
pub fn nonlinear_terms<C: Scalar>(u: &LaurentPoly<C>) -> LaurentPoly<C> {
    let shifted_down = u.tau(-1);
    u.mul(&u.tau(1)).dq().add(&shifted_down.mul(&shifted_down.dq()))
}

/// `u_t` for the canonical form: the displayed terms moved across the
/// equality, `u_t = -(c'∂_q²Θ∂_q u + ∂_q(u·τu) + (τ⁻¹u)·∂_q(τ⁻¹u))`.
pub fn rhs_eq2<C: Scalar>(
    u: &LaurentPoly<C>,
    cprime: &C,
) -> Result<LaurentPoly<C>, DomainError> {
    Ok(linear_term(u, cprime)?.add(&nonlinear_terms(u)).neg())
}

/// `u_t` for the Euler-equation form
/// `q u_t = -qca ∂_q²Θ∂_q u - τ⁻¹∂_q(τu·τ²u) - τ⁻¹(u ∂_q u)`;
/// algebraically identical to [`rhs_eq2`] with `c' = a·c`.
pub fn rhs_eq7<C: Scalar>(
    u: &LaurentPoly<C>,
    c: &C,
    a: &C,
) -> Result<LaurentPoly<C>, DomainError> {
    let ctx = u.ctx();
    let q = C::qpow(ctx, 1);
    let dispersion = linear_core(u)?.scale(&q.mul(c).mul(a));
    let transport = u.tau(1).mul(&u.tau(2)).dq().tau(-1);
    let advection = u.mul(&u.dq()).tau(-1);
    Ok(dispersion
        .add(&transport)
        .add(&advection)
        .neg()
        .scale(&C::qpow(ctx, -1)))
}

/// Both sides of the Euler-equation pairing computation: the bracket/cocycle
/// pairing on one side, the integrated-by-parts integrand on the other.
/// True iff they agree exactly.
pub fn euler_pairing_check<C: Scalar>(
    f: &LaurentPoly<C>,
    g: &LaurentPoly<C>,
    u: &LaurentPoly<C>,
    c: &C,
) -> Result<bool, DomainError> {
    let ctx = f.ctx();
    let q = C::qpow(ctx, 1);
    let a = coupling_a::<C>(ctx);

    let lhs = q
        .neg()
        .mul(&bracket_vec(f, g).mul(u).integrate())
        .add(&c.mul(&q).mul(&phi_integral(f, g)?));

    let transport = u.tau(1).mul(&f.tau(2)).dq().tau(-1);
    let advection = u.mul(&f.dq()).tau(-1);
    let dispersion = linear_core(f)?.scale(&a.mul(&q).mul(c));
    let rhs = g
        .mul(&transport.add(&advection).add(&dispersion))
        .integrate();

    Ok(lhs == rhs)
}

fn classical_derivative(u: &LaurentPoly<QNumeric>) -> LaurentPoly<QNumeric> {
    let q = *u.ctx();
    let mut out = LaurentPoly::zero_in(&q);
    for (k, c) in u.iter() {
        out.add_term(k - 1, c.mul(&QNumeric::from_re(q, k as f64)));
    }
    out
}

/// The q→1 oracle: `u_t = -(c'/2) ∂³u - 3 u ∂u` with the ordinary
/// derivative `∂ z^n = n z^{n-1}`.
pub fn classical_kdv_rhs(u: &LaurentPoly<QNumeric>, cprime: f64) -> LaurentPoly<QNumeric> {
    let q = *u.ctx();
    let du = classical_derivative(u);
    let dddu = classical_derivative(&classical_derivative(&du));
    dddu.scale(&QNumeric::from_re(q, cprime / 2.0))
        .add(&u.mul(&du).scale(&QNumeric::from_re(q, 3.0)))
        .neg()
}

/// One classical RK4 stage combination for an arbitrary autonomous RHS.
pub fn rk4_step_with<F>(
    u: &LaurentPoly<QNumeric>,
    dt: f64,
    rhs: F,
) -> Result<LaurentPoly<QNumeric>, DomainError>
where
    F: Fn(&LaurentPoly<QNumeric>) -> Result<LaurentPoly<QNumeric>, DomainError>,
{
    let q = *u.ctx();
    let h = |x: f64| QNumeric::from_re(q, x);
    let k1 = rhs(u)?;
    let k2 = rhs(&u.add(&k1.scale(&h(dt / 2.0))))?;
    let k3 = rhs(&u.add(&k2.scale(&h(dt / 2.0))))?;
    let k4 = rhs(&u.add(&k3.scale(&h(dt))))?;
    let increment = k1
        .add(&k2.scale(&h(2.0)))
        .add(&k3.scale(&h(2.0)))
        .add(&k4)
        .scale(&h(dt / 6.0));
    Ok(u.add(&increment))
}

fn guard_state(u: LaurentPoly<QNumeric>) -> Result<LaurentPoly<QNumeric>, StepError> {
    if !u.all_finite() || u.norm_inf() > BLOWUP_LIMIT {
        return Err(StepError::Unstable);
    }
    Ok(u)
}

/// Advances one step of the truncated qKdV flow,
/// `F(u) = truncate(rhs_eq2(u, c'), N)`, by explicit RK4.
pub fn step_rk4(state: &SimState, config: &SimConfig) -> Result<SimState, StepError> {
    let cprime = QNumeric::from_re(config.q, config.cprime);
    let n = config.n_modes;
    let next = rk4_step_with(&state.u, config.dt, |u| {
        Ok(rhs_eq2(u, &cprime)?.truncate(n))
    })?;
    Ok(SimState { t: state.t + config.dt, u: guard_state(next)? })
}

/// Classical-KdV reference step on the same band, for the q→1 oracle.
pub fn step_rk4_classical(state: &SimState, config: &SimConfig) -> Result<SimState, StepError> {
    let n = config.n_modes;
    let next = rk4_step_with(&state.u, config.dt, |u| {
        Ok(classical_kdv_rhs(u, config.cprime).truncate(n))
    })?;
    Ok(SimState { t: state.t + config.dt, u: guard_state(next)? })
}

/// Runs the configured number of steps, sampling every `output_every`
/// steps (the initial state is always included). On blow-up the partial
/// trajectory collected so far is returned inside the error.
pub fn simulate(config: &SimConfig, init: &SimState) -> Result<Trajectory, SimError> {
    config.validate()?;
    if init.u.ctx() != &config.q {
        return Err(SimError::Config(
            "initial state was built for a different q".to_string(),
        ));
    }
    if let (Some(lo), Some(hi)) = (init.u.min_exp(), init.u.max_exp()) {
        if lo < -config.n_modes || hi > config.n_modes {
            return Err(SimError::Config(format!(
                "initial support [{lo}, {hi}] exceeds the mode band [-{n}, {n}]",
                n = config.n_modes
            )));
        }
    }
    if !init.u.all_finite() {
        return Err(SimError::Config("initial state has non-finite modes".to_string()));
    }

    let mut samples = vec![init.clone()];
    let mut state = init.clone();
    for step in 1..=config.steps {
        state = match step_rk4(&state, config) {
            Ok(next) => next,
            Err(StepError::Domain(e)) => return Err(SimError::Domain(e)),
            Err(StepError::Unstable) => {
                return Err(SimError::BlowUp { step, partial: Trajectory { samples } })
            }
        };
        if step % config.output_every == 0 {
            samples.push(state.clone());
        }
    }
    Ok(Trajectory { samples })
}
