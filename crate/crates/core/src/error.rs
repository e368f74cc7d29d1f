use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("malformed scalar literal {0:?}")]
    Parse(String),

    #[error("{what} = {value} is outside {min}..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("scalar ring mismatch: {left} vs {right}")]
    RingMismatch {
        left: &'static str,
        right: &'static str,
    },

    #[error("resource bound exceeded: {what} = {value} > {limit}")]
    ResourceBound {
        what: &'static str,
        value: usize,
        limit: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(what: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if value < min || value > max {
        Err(Error::IndexOutOfRange {
            what,
            value,
            min,
            max,
        })
    } else {
        Ok(())
    }
}
