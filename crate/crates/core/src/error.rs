use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or combining monoids and acts.
///
/// Variants that reject a table name the elements witnessing the failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("malformed table: {0}")]
    TableShape(String),
    #[error("element index {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("the zero and the identity must be distinct elements")]
    ZeroEqualsOne,
    #[error("identity law fails at `{0}`")]
    BadIdentity(String),
    #[error("zero law fails at `{0}`")]
    BadZero(String),
    #[error("multiplication is not associative: ({x}{y}){z} != {x}({y}{z})")]
    NotAssociative { x: String, y: String, z: String },
    #[error("identity does not fix act element `{0}`")]
    UnitLaw(String),
    #[error("action is not compatible: ({s}{t})·{a} != {s}·({t}·{a})")]
    NotCompatible { s: String, t: String, a: String },
    #[error("an act with zero must be nonempty")]
    EmptyZeroedAct,
    #[error("expected exactly one zero element, found {{{}}}", .0.join(", "))]
    ZeroSetNotSingleton(Vec<String>),
    #[error("designated zero `{given}` differs from the actual zero `{actual}`")]
    WrongDesignatedZero { given: String, actual: String },
    #[error("acts are defined over different monoids")]
    MonoidMismatch,
    #[error("acts live in different categories")]
    CategoryMismatch,
    #[error("map is not equivariant at {s}·{a}")]
    NotEquivariant { s: String, a: String },
    #[error("map does not preserve the zero")]
    ZeroNotPreserved,
    #[error("subset is not closed under the action")]
    NotASubact,
    #[error("partition is not a left congruence: {a} ~ {b} but {s}·{a} !~ {s}·{b}")]
    NotACongruence { s: String, a: String, b: String },
    #[error("the empty set generates no subact of an act with zero")]
    EmptyGeneratorInAct0,
    #[error("the empty subact cannot be collapsed")]
    EmptySubact,
    #[error("operation needs a nonempty family")]
    EmptyFamily,
    #[error("product of {got} factors exceeds the limit of {limit}")]
    TooManyFactors { limit: usize, got: usize },
    #[error("operation is undefined on the empty act")]
    EmptyAct,
    #[error("`{0}` is not idempotent")]
    NotIdempotent(String),
    #[error("label `{0}` is already in use")]
    LabelClash(String),
    #[error("size {bound} exceeds the supported maximum of {max}")]
    BoundTooLarge { bound: usize, max: usize },
}
