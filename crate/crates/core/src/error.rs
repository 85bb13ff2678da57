use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse word {0:?}: only the letters x and y are allowed")]
    ParseWord(String),

    #[error("words are limited to {max} letters, got {len}", max = crate::words::MAX_LEN)]
    WordTooLong { len: usize },

    #[error("word `{0}` is not convergent")]
    NotConvergent(String),

    #[error("word `{0}` does not end in y")]
    NotEndingInY(String),

    #[error("invalid composition {0}: parts must be positive and the first part at least 2")]
    InvalidComposition(String),

    #[error("polynomial is not weight-homogeneous")]
    NotHomogeneous,

    #[error("weight {weight} is out of range ({expected})")]
    WeightOutOfRange { weight: i64, expected: &'static str },

    #[error("period polynomial violates p(2i) = -p(k-2-2i)")]
    NotAntisymmetric,

    #[error("expected a double zeta relation, got a bracket relation")]
    WrongRelationKind,

    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("precision of {digits} digits exceeds the supported maximum of {max}")]
    PrecisionOutOfRange { digits: u32, max: u32 },

    #[error("direct summation would need {terms} terms")]
    CutoffTooLarge { terms: u64 },
}

pub(crate) fn check_weight(weight: i64, ok: bool, expected: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::WeightOutOfRange { weight, expected })
    }
}
