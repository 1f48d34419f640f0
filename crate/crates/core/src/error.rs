use thiserror::Error;

/// Errors raised by scalar and operator arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    /// Inversion of a zero scalar.
    #[error("division by zero scalar")]
    DivisionByZero,

    /// `Θ = (τ+τ⁻¹)⁻¹` hit a mode where the q-angle vanishes.
    #[error("theta is singular at mode {mode}: <{mode}> = 0")]
    ThetaSingular { mode: i64 },

    /// The Neumann expansion of `Θ` was requested on a mode where it diverges.
    #[error("neumann series diverges at mode {mode}: |q^(2k)| >= 1")]
    NeumannDivergent { mode: i64 },

    /// The diagonal operator `Γ` is only defined on the span of the `d_m`.
    #[error("gamma operator is undefined on elements with a central part")]
    NonzeroCentralPart,

    /// An identity checker was called outside its constraint surface.
    #[error("constraint violated: expected m+n+p=0, got {m}+{n}+{p} != 0")]
    ConstraintViolation { m: i64, n: i64, p: i64 },
}
