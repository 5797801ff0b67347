use crate::magnitude::Magnitude;

/// Errors raised by the arithmetic layer (magnitudes, multisign numbers, tuples
/// and the signed-number bridge).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("magnitude underflow: {minuend} - {subtrahend} has no nonnegative value")]
    Underflow {
        minuend: Magnitude,
        subtrahend: Magnitude,
    },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("invalid magnitude literal `{0}`")]
    InvalidMagnitude(String),

    #[error("sign count must be at least 1")]
    InvalidSignCount,

    #[error("sign {sign} is out of range 0..={signs}")]
    SignOutOfRange { sign: i64, signs: u32 },

    #[error("sign 0 is reserved for the zero element but magnitude is {0}")]
    ZeroSignNonzeroMagnitude(Magnitude),

    #[error("operands belong to different carriers ({left} signs vs {right} signs)")]
    SignCountMismatch { left: u32, right: u32 },

    #[error("linear coefficient must be nonzero")]
    ZeroCoefficient,

    #[error("a tuple needs at least one slot")]
    EmptyTuple,

    #[error("tuple shapes differ: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("tuple is not invertible: zero in slot(s) {slots:?}")]
    NonInvertibleTuple { slots: Vec<usize> },

    #[error("the signed-number bridge needs exactly 2 signs, got {0}")]
    NotTwoSigns(u32),

    #[error("invalid signed rational `{0}`")]
    InvalidSignedRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
