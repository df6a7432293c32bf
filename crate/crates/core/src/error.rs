use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// Two letters or two brackets were placed next to each other.
    #[error("alternation violation at {pos}: adjacent factors of the same kind")]
    Alternation { pos: usize },

    #[error("unknown generator `{name}` at {pos}")]
    UnknownGenerator { name: String, pos: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid letter: {0}")]
    InvalidLetter(String),

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("recursion guard exceeded (limit {limit})")]
    RecursionLimit { limit: usize },

    #[error("resource limit exceeded: {what} (cap {cap})")]
    ResourceLimit { what: String, cap: usize },

    #[error("associativity violation on ({a}, {b}, {c})")]
    Associativity { a: String, b: String, c: String },

    #[error("weight mismatch: context has {context}, target has {target}")]
    WeightMismatch { context: String, target: String },

    #[error("map is not multiplicative on ({a}, {b})")]
    NotMultiplicative { a: String, b: String },

    #[error("not a dendriform morphism: {op} fails on ({x}, {y})")]
    NotDendriformMorphism { op: String, x: String, y: String },

    #[error("axiom `{axiom}` fails on ({x}, {y}, {z})")]
    AxiomViolation {
        axiom: String,
        x: String,
        y: String,
        z: String,
    },

    #[error("Rota-Baxter identity fails on ({x}, {y})")]
    RotaBaxterViolation { x: String, y: String },

    #[error("the dot operation is not available on this structure")]
    DotUnavailable,

    #[error("the leaf tree is not an element here")]
    LeafInput,

    #[error("arity mismatch: {children} children for {decorations} decorations")]
    Arity { children: usize, decorations: usize },

    #[error("invalid structure: {0}")]
    Invalid(String),
}
