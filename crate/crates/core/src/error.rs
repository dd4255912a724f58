use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree {0} outside 1..=24")]
    FieldDegree(u32),
    #[error("polynomial {poly:#x} rejected for degree {m}: {reason}")]
    BadPolynomial { m: u32, poly: u32, reason: &'static str },
    #[error("value {value:#x} is not an element of GF(2^{m})")]
    NotInField { value: u64, m: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{k} does not divide {m}")]
    NotDivisor { k: u32, m: u32 },
    #[error("{den} is not invertible modulo {modulus}")]
    NotInvertible { den: i128, modulus: u64 },
    #[error("truth table length {got} does not match 2^{m}")]
    TableLength { got: usize, m: u32 },
    #[error("function is not quadratic: {0}")]
    NotQuadratic(String),
    #[error("defining set is empty")]
    EmptySet,
    #[error("function is not a permutation")]
    NotPermutation,
    #[error("0 lies in a set that must avoid it")]
    ZeroInSet,
    #[error("{0} is not a subgroup")]
    NotSubgroup(String),
    #[error("family {family} not applicable: {reason}")]
    Inapplicable { family: String, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter for {family}: {detail}")]
    BadParam { family: String, detail: String },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("unknown table `{0}`")]
    UnknownTable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn inapplicable(family: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Inapplicable { family: family.into(), reason: reason.into() }
    }

    pub(crate) fn bad_param(family: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::BadParam { family: family.into(), detail: detail.into() }
    }
}
