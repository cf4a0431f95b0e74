use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is not one of 2, 3, 4")]
    BadAlphabet(u8),

    #[error("letter {letter} is outside the alphabet of size {size}")]
    LetterOutOfRange { letter: u8, size: u8 },

    #[error("alphabet mismatch: size {left} vs size {right}")]
    AlphabetMismatch { left: u8, right: u8 },

    #[error("the cycle of a lasso word must be nonempty")]
    EmptyCycle,

    #[error("`{prefix}` is not a prefix of the word")]
    NotAPrefix { prefix: String },

    #[error("K[{n},{j}] is not a valid address: {n} exceeds M_{j} = {bound}")]
    InvalidAddress { n: u128, j: u32, bound: u128 },

    #[error("pair components have different lengths ({beta} vs {alpha})")]
    PairLengthMismatch { beta: usize, alpha: usize },

    #[error("index arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("word is too long to materialize ({0} letters)")]
    TooLong(u128),

    #[error("the word does not lie in any K[N,j]")]
    NotInKnj,

    #[error("the word is not in T (some prefix has more 2s than 1s)")]
    NotInT,

    #[error("the word does not have the block shape of P")]
    NotInP,

    #[error("the word lies in mu^omega")]
    InMuOmega,

    #[error("the word has no maximal violation index although it is outside K[N,j0-1]")]
    NoMaximalViolation,

    #[error("search budget of {0} exhausted")]
    BudgetExceeded(usize),

    #[error("invalid tree presentation: {0}")]
    InvalidTree(String),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
}
