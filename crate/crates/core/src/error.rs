use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("vacuum state where a non-vacuum state is required")]
    Vacuum,

    #[error("non-physical cell{}: rho={rho}, p={p}{}",
        .index.map(|i| format!(" {i}")).unwrap_or_default(),
        .time.map(|t| format!(" at t={t}")).unwrap_or_default())]
    NonPhysicalCell {
        index: Option<usize>,
        time: Option<f64>,
        rho: f64,
        p: f64,
    },

    #[error("states have equal density; this is a contact, not a shock")]
    ContactNotShock,

    #[error("contact with unchanged density has zero strength")]
    DegenerateContact,

    #[error("no stationary wave reaches a={a_target}: minimum reachable cross-section is {a_min}")]
    NoStationarySolution { a_target: f64, a_min: f64 },

    #[error("anchor is sonic; the stationary branch must be selected explicitly")]
    AmbiguousBranch,

    #[error("state lies on a sonic boundary; interaction case is ambiguous")]
    AmbiguousClassification,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no admissible solution: {0}")]
    NoSolution(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
