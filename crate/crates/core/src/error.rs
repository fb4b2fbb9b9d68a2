use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("value {0} is not a hexadecimal digit")]
    NibbleRange(u32),
    #[error("segment set {0} is not one of the sixteen canonical digits")]
    InvalidGlyph(String),
    #[error("parse error at offset {offset}: {detail}")]
    Parse { offset: usize, detail: String },
    #[error("raster scale {0} is below the minimum of 2")]
    ScaleTooSmall(usize),
    #[error("need at least two glyphs, got {0}")]
    EmptyInput(usize),
    #[error("computed flag {criterion} is false but the stored row asserts it")]
    ModelContradiction { criterion: &'static str },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, detail: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            detail: detail.into(),
        }
    }
}
