use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: the factor (uv)^{k} - 1 vanishes at the evaluation point")]
    Pole { k: u32 },

    #[error("denominator factor (uv)^0 - 1 is identically zero")]
    ZeroFactor,

    #[error(
        "term {index} is not of the form R(u,v)*(uv-1)^j / prod((uv)^k - 1) with j = #factors; \
         its limit at u = v = 1 is not defined by the structured form"
    )]
    NotStructured { index: usize },

    #[error("multinomial parts sum to {sum}, expected {expected}")]
    PartsMismatch { sum: u64, expected: u64 },

    #[error("invalid singularity type (r={r}, n={n}, ell={ell}): need r >= ell >= 2 and n + 1 >= ell")]
    InvalidSingularity { r: u32, n: u32, ell: u32 },

    #[error("ell={ell} divides neither n={n} nor n+1; out of the implemented family")]
    OutOfFamily { n: u32, ell: u32 },

    #[error(
        "weight system is not that of an isolated quasihomogeneous singularity in the implemented sense"
    )]
    NotQuasihomogeneous,

    #[error("{what} = {value} out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: i64, range: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            value,
            range: range.into(),
        }
    }
}
