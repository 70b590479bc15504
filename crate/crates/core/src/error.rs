use thiserror::Error;

use crate::table::ObjectId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong between reading a CSV and emitting a core report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("table has no data rows")]
    EmptyTable,

    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow { line: u64, expected: usize, found: usize },

    #[error("line {line}, column {column:?}: missing value")]
    MissingValue { line: u64, column: String },

    #[error("line {line}, column {column:?}: value {value:?} is not finite")]
    NonFiniteValue { line: u64, column: String, value: String },

    #[error("line {line}: object id {value:?} is not a positive integer")]
    InvalidObjectId { line: u64, value: String },

    #[error("duplicate object id {0}")]
    DuplicateObjectId(ObjectId),

    #[error("duplicate column name {0:?}")]
    DuplicateColumn(String),

    #[error("unknown column {name:?} (available: {available})")]
    UnknownColumn { name: String, available: String },

    #[error("table needs at least one condition attribute")]
    NoConditionAttributes,

    #[error("column {column:?} has {found} values for {expected} objects")]
    ColumnLength { column: String, expected: usize, found: usize },

    #[error("column {column:?}, object {object}: {value} is not a discrete label (integers >= 1)")]
    InvalidLabel { column: String, object: ObjectId, value: String },

    #[error("column {0:?} is numeric; discretize it before building partitions")]
    UndiscretizedColumn(String),

    #[error("cannot discretize an empty column")]
    EmptyColumn,

    #[error("decision code {code} not present (available: {available:?})")]
    UnknownDecisionCode { code: u32, available: Vec<u32> },

    #[error("decision value {token:?} not present (available: {available:?})")]
    UnknownDecisionToken { token: String, available: Vec<String> },

    #[error("object {0} is not part of the universe")]
    UnknownObject(ObjectId),

    #[error("attribute set is empty")]
    EmptyAttributeSet,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("omission analysis needs at least two condition attributes, table has {0}")]
    TooFewAttributes(usize),

    #[error("no attribute reports to aggregate")]
    NoReports,

    #[error("tolerant core is empty at threshold {threshold}; try a lower threshold")]
    EmptyCore { threshold: u64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    /// True for errors caused by flags or selectors rather than the input data.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::UnknownColumn { .. }
                | Error::UnknownDecisionCode { .. }
                | Error::UnknownDecisionToken { .. }
                | Error::EmptyAttributeSet
                | Error::TooFewAttributes(_)
                | Error::EmptyCore { .. }
                | Error::Config(_)
        )
    }
}
