use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol `{0}` is not in the alphabet")]
    AlphabetMismatch(String),

    #[error("alphabets differ: {0}")]
    AlphabetsDiffer(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("surface configurations differ")]
    ConfigMismatch,

    #[error("generator `{0}` is outside the domain of the Hilden map")]
    UnsupportedGenerator(String),

    #[error("element failed validation: {0}")]
    Invalid(String),

    #[error("malformed serialized data: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
