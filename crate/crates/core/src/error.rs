use thiserror::Error;

/// Errors raised while building substitutions and periodic points or while
/// reading and writing representations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: expected `LETTER -> IMAGE`, got `{text}`")]
    MalformedRule { line: usize, text: String },

    #[error("line {line}: invalid letter `{letter}`")]
    InvalidLetter { line: usize, letter: String },

    #[error("line {line}: empty image for letter `{letter}`")]
    EmptyImage { line: usize, letter: String },

    #[error("line {line}: unknown letter `{letter}` in image")]
    UnknownLetter { line: usize, letter: String },

    #[error("line {line}: duplicate rule for letter `{letter}`")]
    DuplicateRule { line: usize, letter: String },

    #[error("substitution has no rules")]
    EmptyAlphabet,

    #[error("substitution has no growing letter")]
    NoGrowingLetter,

    #[error("malformed seed `{0}`, expected `LEFT|RIGHT`")]
    MalformedSeed(String),

    #[error("seed letter `{0}` is not in the alphabet")]
    UnknownSeedLetter(String),

    #[error("seed letter `{0}` is not growing")]
    SeedNotGrowing(String),

    #[error("seed is not periodic: `{letter}` is not the {side} letter of any iterated image of itself")]
    SeedNotPeriodic { letter: String, side: &'static str },

    #[error("position {n} is out of range [0, {bound})")]
    OutOfRange { n: String, bound: String },

    #[error("quotient and remainder are undefined for {0}")]
    DegeneratePosition(String),

    #[error("empty digit word")]
    EmptyWord,

    #[error("invalid digit text `{0}`")]
    InvalidDigits(String),

    #[error("sign digit must be 0 or 1, got {0}")]
    BadSignDigit(u32),

    #[error("no transition on digit {digit} from state `{state}` at position {position}")]
    NoTransition {
        state: String,
        digit: u32,
        position: usize,
    },

    #[error("word length {len} is not 1 modulo the period {period}")]
    LengthClass { len: usize, period: usize },

    #[error("target length {target} is shorter than the word length {len}")]
    PadTooShort { target: usize, len: usize },

    #[error("periodic points must share one substitution and one period")]
    MismatchedSystems,

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("rows have different lengths")]
    MismatchedRowLengths,

    #[error("non-binary digit {0}")]
    NonBinaryDigit(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
