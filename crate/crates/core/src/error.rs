use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("the zero polynomial is not a valid Alexander polynomial")]
    ZeroPolynomial,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("odd power z^{0} cannot be written in x = z^2")]
    OddZPower(u32),
    #[error("Laurent polynomial is not symmetric under t -> 1/t")]
    NotSymmetric,
    #[error("braid word is empty")]
    EmptyBraid,
    #[error("braid letter 0 is not a generator")]
    ZeroLetter,
    #[error("braid closure has {0} components, expected a knot")]
    NotAKnot(usize),
    #[error("index {index} out of range for braid of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("generator {generator} out of range for {strands} strands")]
    GeneratorOutOfRange { generator: i32, strands: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("det(V - V^T) = {0}, not a Seifert matrix of a knot")]
    InvalidSeifert(String),
    #[error("Hermitian form is numerically singular at turn {turn}; move away from the Alexander roots")]
    DegenerateEvaluation { turn: f64 },
    #[error("root at turn {turn:.12} has multiplicity {multiplicity}; the knot is not simple")]
    NonSimpleRoot { turn: f64, multiplicity: usize },
    #[error("no good crossing found within threading depth {depth}")]
    SearchExhausted { depth: usize },
    #[error("torus knot parameters ({a}, {b}) must be coprime with 2 <= a < b")]
    BadTorusParameters { a: u32, b: u32 },
    #[error("record {name}: stored Alexander polynomial {stored} differs from the braid's {computed}")]
    DeltaMismatch { name: String, stored: String, computed: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
