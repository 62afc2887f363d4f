use thiserror::Error;

/// Errors surfaced by series arithmetic, the Laguerre calculus, the
/// counting formulas and the enumeration oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Denominator of a rational generating function has a vanishing
    /// constant term; the expression must be rewritten before expansion.
    #[error("denominator has no invertible constant term")]
    NonUnitDenominator,

    /// `exp` (and the Smirnov substitutions) require a vanishing constant
    /// term in the argument.
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,

    /// Exact division by `t` requires a vanishing `t`-constant term.
    /// In the cyclic formulas this signals a `u^0` term leaking into a
    /// context that requires at least one part.
    #[error("polynomial has a nonzero constant term in t")]
    NonzeroConstant,

    /// The transform `u^k -> l_k(t)` is only defined on `v`-free input.
    #[error("v marker present where a v-free polynomial is required")]
    VMarkerPresent,

    /// An enumeration would exceed the configured brute-force budget.
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    /// A forbidden word uses a letter absent from the available multiset.
    #[error("forbidden word uses letter {letter} not present in the available letters")]
    LetterMissing { letter: u32 },

    /// Star products are defined only for factorization sets on disjoint
    /// alphabets.
    #[error("alphabets overlap on letter {letter}")]
    AlphabetOverlap { letter: u32 },
}
