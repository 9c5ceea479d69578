use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The type `(α, β; γ, δ; κ)` of an additive code.
///
/// `γ` and `δ` count independent generators of order `p` and `p²`; `κ` is
/// the dimension of the X-projection of the order-`p` subcode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

impl CodeType {
    /// Validates the existence conditions for a nontrivial code:
    /// `α+β > 0`, `0 < γ+δ ≤ β+κ`, `κ ≤ min(α, γ)`.
    pub fn new(
        alpha: usize,
        beta: usize,
        gamma: usize,
        delta: usize,
        kappa: usize,
    ) -> Result<Self> {
        let t = CodeType {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        };
        t.validate()?;
        Ok(t)
    }

    /// The type of the zero code `{0}`, which has no generators.
    pub fn trivial(alpha: usize, beta: usize) -> Self {
        CodeType {
            alpha,
            beta,
            gamma: 0,
            delta: 0,
            kappa: 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.gamma == 0 && self.delta == 0
    }

    pub fn validate(&self) -> Result<()> {
        let CodeType {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        } = *self;
        let fail = |why: &str| Err(Error::InvalidType(format!("{self}: {why}")));
        if alpha + beta == 0 {
            return fail("α + β must be positive");
        }
        if gamma + delta == 0 {
            return fail("γ + δ must be positive");
        }
        if gamma + delta > beta + kappa {
            return fail("γ + δ exceeds β + κ");
        }
        if kappa > alpha.min(gamma) {
            return fail("κ exceeds min(α, γ)");
        }
        Ok(())
    }

    /// `log_p |C| = γ + 2δ`.
    pub fn log_size(&self) -> usize {
        self.gamma + 2 * self.delta
    }

    /// Width `β − (γ − κ) − δ` of the free Y block of the standard form.
    pub fn free_width(&self) -> usize {
        self.beta + self.kappa - self.gamma - self.delta
    }

    /// The type of the dual code:
    /// `(α, β; α+γ−2κ, β−γ−δ+κ; α−κ)`.
    pub fn dual(&self) -> CodeType {
        CodeType {
            alpha: self.alpha,
            beta: self.beta,
            gamma: self.alpha + self.gamma - 2 * self.kappa,
            delta: self.beta + self.kappa - self.gamma - self.delta,
            kappa: self.alpha - self.kappa,
        }
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{};{},{};{})",
            self.alpha, self.beta, self.gamma, self.delta, self.kappa
        )
    }
}
