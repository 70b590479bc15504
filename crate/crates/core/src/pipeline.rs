//! Loading plus discretization, shared by the CLI and the examples.

use crate::discretize::{discretize_table, DiscretizationConfig, DiscretizationTrace, StdevMode};
use crate::error::Result;
use crate::table::{as_discrete, DecisionTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preparation {
    /// Numeric columns already hold integer labels.
    AlreadyDiscrete,
    Discretize(DiscretizationConfig),
}

#[derive(Clone, Debug)]
pub struct Prepared {
    /// The table as loaded.
    pub original: DecisionTable,
    /// The table the rough-set machinery runs on.
    pub discrete: DecisionTable,
    pub traces: Vec<DiscretizationTrace>,
    pub stdev_mode: Option<StdevMode>,
}

pub fn prepare(original: DecisionTable, preparation: Preparation) -> Result<Prepared> {
    match preparation {
        Preparation::AlreadyDiscrete => {
            Ok(Prepared { discrete: as_discrete(&original)?, original, traces: Vec::new(), stdev_mode: None })
        }
        Preparation::Discretize(config) => {
            let (discrete, traces) = discretize_table(&original, &config)?;
            Ok(Prepared { original, discrete, traces, stdev_mode: Some(config.stdev_mode) })
        }
    }
}
