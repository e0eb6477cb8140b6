use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A checked operation left the supported integer range.
    Overflow,
    /// The form is not positive definite.
    NotPositiveDefinite,
    /// Coefficients or targets outside the supported domain.
    OutOfRange(&'static str),
    /// `gcd(a,b,c) != 1` for a triangular triple.
    NotCoprime { a: u64, b: u64, c: u64 },
    /// A triangular coefficient was zero.
    ZeroCoefficient,
    /// An operation that needs a diagonal binary form got a cross term.
    NotDiagonal,
    /// An input fell outside an operation's stated hypotheses.
    Precondition(&'static str),
    /// A map image was not integral at the given point.
    MapDomain { point: Vec<i64> },
    /// Malformed text literal.
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => f.write_str("integer overflow"),
            Error::NotPositiveDefinite => f.write_str("form is not positive definite"),
            Error::OutOfRange(what) => write!(f, "out of supported range: {what}"),
            Error::NotCoprime { a, b, c } => write!(f, "gcd({a},{b},{c}) != 1"),
            Error::ZeroCoefficient => f.write_str("coefficients must be positive"),
            Error::NotDiagonal => f.write_str("form must be diagonal"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::MapDomain { point } => {
                write!(f, "map image is not integral at {point:?}")
            }
            Error::Parse(what) => write!(f, "parse error: {what}"),
        }
    }
}

impl core::error::Error for Error {}
