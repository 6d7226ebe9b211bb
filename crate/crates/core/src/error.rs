use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input: bad vertex, bad parameters, violated precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// A sub-construction failed. `case` is the full case path, outermost first
    /// (for example `high/disjoint/c/step2 > union/same-class`).
    #[error("construction failed at {case}: {detail}")]
    Construction { case: String, detail: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn construction(case: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Construction {
            case: case.into(),
            detail: detail.into(),
        }
    }

    /// Prefix the case path of a construction error with an enclosing case label.
    /// An input error raised by a nested call is an internal failure of the
    /// enclosing construction, so it is converted.
    pub(crate) fn within(self, outer: &str) -> Self {
        match self {
            Error::Construction { case, detail } => Error::Construction {
                case: format!("{outer} > {case}"),
                detail,
            },
            Error::Input(msg) => Error::Construction {
                case: outer.to_string(),
                detail: format!("sub-call rejected its input: {msg}"),
            },
        }
    }

    pub fn is_input(&self) -> bool {
        matches!(self, Error::Input(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
