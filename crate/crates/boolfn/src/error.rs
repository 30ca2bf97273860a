use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A truth-table string does not encode a power-of-two number of bits.
    #[error("truth table has {bits} bits; length must be a power of two between 2 and 2^24")]
    InvalidLength { bits: usize },

    /// A truth-table string contains a character outside its alphabet.
    #[error("invalid character {ch:?} at position {pos} in truth table")]
    InvalidCharacter { ch: char, pos: usize },

    /// Hex rendering needs at least one full hex digit (four table bits).
    #[error("hex format needs at least 4 table bits; a function on {n} variable(s) has fewer")]
    HexTooSmall { n: usize },

    /// A requested variable count exceeds an operation-specific limit.
    #[error("{n} variables exceeds the supported maximum of {max}")]
    TooManyVariables { n: usize, max: usize },

    /// An operation needs more variables than the function has.
    #[error("operation needs at least {min} variables, got {n}")]
    TooFewVariables { n: usize, min: usize },

    /// Variable counts of two operands differ.
    #[error("operands have different variable counts: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An input vector has the wrong number of bits for the function.
    #[error("input has {got} bits, function takes {expected}")]
    InputLengthMismatch { expected: usize, got: usize },

    /// An operation defined only for an even number of variables was
    /// invoked with an odd one.
    #[error("operation requires an even variable count, got {n}")]
    OddVariableCount { n: usize },

    /// An index table passed as a permutation is not a bijection.
    #[error("index table of length {len} is not a permutation of 0..{len}")]
    NotAPermutation { len: usize },

    /// A precondition required a bent function and the named one is not.
    #[error("{which} is not bent")]
    NotBent { which: String },

    /// W(0) does not have the parity forced by the transform definition.
    #[error("spectrum value W(0) = {value} has the wrong parity for n = {n}")]
    SpectrumParity { value: i32, n: usize },

    /// The composition-transform sum failed to divide exactly by 2^k.
    #[error("composition sum {sum} is not divisible by 2^{k}")]
    NonIntegralDivision { sum: i64, k: usize },

    /// An identity that holds for every input was violated; this signals
    /// a transcription bug, not bad input.
    #[error("internal identity `{claim}` violated: {detail}")]
    IdentityViolation {
        claim: &'static str,
        detail: String,
    },

    /// The iterative generator needs at least one level.
    #[error("iteration depth must be at least 1")]
    ZeroIterationDepth,

    /// An exhaustive sweep was requested beyond the feasibility gate.
    #[error("exhaustive sweep at n = {n} would cover 2^{cases_log2} triples (limit n <= {max_n}); use sampled mode")]
    ExhaustiveInfeasible {
        n: usize,
        cases_log2: u64,
        max_n: usize,
    },
}
