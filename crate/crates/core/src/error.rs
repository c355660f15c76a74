use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pd parse error: {0}")]
    PdParse(String),
    #[error("edge label {0} appears {1} times, expected exactly 2")]
    BadEdgeLabel(usize, usize),
    #[error("multiple components")]
    MultipleComponents,
    #[error("non-planar rotation system: V - E + F = {0}, expected 2")]
    NonPlanar(i64),
    #[error("diagram has {0} crossings, exceeding the brute-force guard of {1}")]
    SizeGuard(usize, usize),
    #[error("invalid weft word: {0}")]
    InvalidWeft(String),
    #[error("braid generator index {0} out of range for width {1}")]
    BraidIndex(usize, u32),
    #[error("width mismatch: braid width {0}, weaver width {1}")]
    WidthMismatch(u32, u32),
    #[error("grid width {0} and sign tuple length {1} are incompatible (need width = 2m-1)")]
    SignTupleMismatch(usize, usize),
    #[error("potholder dimensions must be odd, got {0}x{1}")]
    EvenGrid(usize, usize),
    #[error("pad target {0}x{1} smaller than current {2}x{3} or not odd")]
    BadPadTarget(usize, usize, usize, usize),
    #[error("enumeration guard: {0} cells exceeds the exhaustive limit of {1}")]
    EnumGuard(usize, usize),
    #[error("unknown knot name: {0}")]
    UnknownKnot(String),
    #[error("sign tuple too short: grid needs width {0} but 2*{1}-1 = {2}")]
    SignTupleTooShort(usize, usize, usize),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Other(String),
}
