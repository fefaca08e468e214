use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("malformed partition string {input:?}: offending token {token:?}")]
    Parse { input: String, token: String },
    #[error("beta-set too short: length {length} needs t >= {length}, got t = {t}")]
    BetaSetTooShort { length: usize, t: usize },
    #[error("degree mismatch: |nu| = {nu} but |rho| = {rho}")]
    DegreeMismatch { nu: usize, rho: usize },
    #[error("table too large: n = {n} exceeds max_table_n = {limit}")]
    TableTooLarge { n: usize, limit: usize },
    #[error("not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("{name} = {value} exceeds the configured limit {limit}")]
    LimitExceeded {
        name: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("hypothesis d ∤ n violated: d = {d} divides n = {n}")]
    DividesHypothesis { n: usize, d: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("cache conflict for {key}: {existing} vs {incoming}")]
    CacheConflict {
        key: String,
        existing: String,
        incoming: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
