//! Rough-set analysis of decision tables.
//!
//! The pipeline: load a CSV decision table ([`table`]), turn numeric
//! attributes into integer labels by standard-deviation binning
//! ([`discretize`]), build indiscernibility partitions and the lower/upper
//! approximations, boundary and rough topology of a target set
//! ([`roughset`]), then measure how much each attribute contributes to the
//! boundary to find the exact and tolerant core ([`core_analysis`]).
//!
//! ```
//! use roughcore::{compute_core, load_csv, as_discrete, select_target_set, IngestConfig};
//!
//! let csv = "Patient,Headache,Temperature,Flu\n1,No,High,Yes\n2,Yes,High,Yes\n3,No,Normal,No\n";
//! let table = load_csv(csv.as_bytes(), &IngestConfig::default().with_id_column("Patient")).unwrap();
//! let table = as_discrete(&table).unwrap();
//! let x = select_target_set(&table, &[1]).unwrap();
//! let core = compute_core(&table, &x, 0).unwrap();
//! assert_eq!(core.exact_core, ["Temperature"]);
//! ```

pub mod core_analysis;
pub mod discretize;
pub mod error;
pub mod pipeline;
pub mod report;
pub mod roughset;
pub mod table;

pub use core_analysis::{
    compute_core, export_reduced, mu_rt, omit_analysis, verify_complement, AttributeReport, CoreResult,
};
pub use discretize::{discretize_column, discretize_table, DiscretizationConfig, DiscretizationTrace, StdevMode};
pub use error::{Error, Result};
pub use pipeline::{prepare, Preparation, Prepared};
pub use report::{analyze, AnalysisReport, CoreReport, ReportContext};
pub use roughset::{
    boundary, is_rough, lower_approximation, partition, rough_topology, upper_approximation, ApproximationResult,
    Partition, RoughTopology,
};
pub use table::{
    as_discrete, codes_for_tokens, encode_decision, load_csv, load_csv_path, select_target_set, write_csv,
    AttributeColumn, ColumnKind, DecisionColumn, DecisionTable, IngestConfig, ObjectId, ObjectSet,
};
