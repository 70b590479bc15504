//! Standard-deviation binning of numeric attributes.
//!
//! Each numeric column is turned into integer labels 1, 2, 3, ... by
//! repeatedly taking the largest unlabeled value `max`, computing the cut
//! `round(max - st, d)` and giving the current label to every unlabeled
//! value `>= cut`. `st` is the standard deviation of the whole column and is
//! computed once, before the first cut.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{AttributeColumn, ColumnValues, DecisionTable, ObjectId, ObjectSet};

/// Largest accepted `cut_round_decimals`.
pub const MAX_ROUND_DECIMALS: u32 = 12;

/// Labels always start here.
pub const FIRST_LABEL: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StdevMode {
    /// Divides by n - 1.
    #[default]
    Sample,
    /// Divides by n.
    Population,
}

impl fmt::Display for StdevMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StdevMode::Sample => "sample",
            StdevMode::Population => "population",
        })
    }
}

impl FromStr for StdevMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sample" => Ok(StdevMode::Sample),
            "population" => Ok(StdevMode::Population),
            other => Err(Error::Config(format!("unknown stdev mode {other:?} (expected sample or population)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscretizationConfig {
    pub stdev_mode: StdevMode,
    /// Decimal places the cut is rounded to before comparing.
    pub cut_round_decimals: u32,
}

impl Default for DiscretizationConfig {
    fn default() -> Self {
        Self { stdev_mode: StdevMode::Sample, cut_round_decimals: 3 }
    }
}

impl DiscretizationConfig {
    pub fn population() -> Self {
        Self { stdev_mode: StdevMode::Population, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.cut_round_decimals > MAX_ROUND_DECIMALS {
            return Err(Error::Config(format!(
                "cut_round_decimals must be at most {MAX_ROUND_DECIMALS}, got {}",
                self.cut_round_decimals
            )));
        }
        Ok(())
    }
}

/// One label of a discretized column.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bin {
    pub label: u32,
    /// Rounded cut; members are the values `>= cut` still unlabeled at this step.
    pub cut: f64,
    pub members: ObjectSet,
}

/// How one column was binned.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscretizationTrace {
    pub attribute: String,
    pub stdev: f64,
    pub bins: Vec<Bin>,
}

/// Compact trace form: `{attribute, stdev, bins: [{label, cut, count}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub attribute: String,
    pub stdev: f64,
    pub bins: Vec<BinSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinSummary {
    pub label: u32,
    pub cut: f64,
    pub count: usize,
}

impl DiscretizationTrace {
    pub fn summary(&self) -> TraceSummary {
        TraceSummary {
            attribute: self.attribute.clone(),
            stdev: self.stdev,
            bins: self.bins.iter().map(|b| BinSummary { label: b.label, cut: b.cut, count: b.members.len() }).collect(),
        }
    }
}

/// Standard deviation of `values` (0 for fewer than two values in sample mode).
pub fn standard_deviation(values: &[f64], mode: StdevMode) -> f64 {
    let n = values.len();
    let denom = match mode {
        StdevMode::Sample if n < 2 => return 0.0,
        StdevMode::Sample => (n - 1) as f64,
        StdevMode::Population if n == 0 => return 0.0,
        StdevMode::Population => n as f64,
    };
    let mean = compensated_sum(values.iter().copied()) / n as f64;
    let ss = compensated_sum(values.iter().map(|&v| (v - mean) * (v - mean)));
    (ss / denom).sqrt()
}

// Neumaier summation.
fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    sum + c
}

/// Rounds to `decimals` places through the decimal representation, ties to even.
pub fn round_decimals(x: f64, decimals: u32) -> f64 {
    format!("{:.*}", decimals as usize, x).parse().unwrap_or(x)
}

/// Discretizes one column. Bin members in the trace are 1-based row positions.
pub fn discretize_column(values: &[f64], config: &DiscretizationConfig) -> Result<(Vec<u32>, DiscretizationTrace)> {
    let ids: Vec<ObjectId> = (1..=values.len() as u64).map(ObjectId).collect();
    discretize_with_ids(values, &ids, "", config)
}

fn discretize_with_ids(
    values: &[f64],
    ids: &[ObjectId],
    attribute: &str,
    config: &DiscretizationConfig,
) -> Result<(Vec<u32>, DiscretizationTrace)> {
    config.validate()?;
    if values.is_empty() {
        return Err(Error::EmptyColumn);
    }
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteValue { line: 0, column: attribute.to_string(), value: values[i].to_string() });
    }

    let stdev = standard_deviation(values, config.stdev_mode);

    // Descending order; peeling is then a walk along this vector.
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));

    let mut labels = vec![0u32; values.len()];
    let mut bins = Vec::new();
    let mut label = FIRST_LABEL;
    let mut next = 0;
    while next < order.len() {
        let max = values[order[next]];
        // A cut rounded above the maximum would assign nothing; the maximum
        // always belongs to its own bin.
        let cut = round_decimals(max - stdev, config.cut_round_decimals).min(max);
        let mut members = ObjectSet::new();
        while next < order.len() && values[order[next]] >= cut {
            labels[order[next]] = label;
            members.insert(ids[order[next]]);
            next += 1;
        }
        bins.push(Bin { label, cut, members });
        label += 1;
    }

    Ok((labels, DiscretizationTrace { attribute: attribute.to_string(), stdev, bins }))
}

/// Replaces every numeric column by its labels. Discrete and categorical
/// columns pass through; traces are returned for the numeric ones, in
/// column order.
pub fn discretize_table(
    table: &DecisionTable,
    config: &DiscretizationConfig,
) -> Result<(DecisionTable, Vec<DiscretizationTrace>)> {
    config.validate()?;
    let mut columns = Vec::with_capacity(table.columns().len());
    let mut traces = Vec::new();
    for col in table.columns() {
        match col.values() {
            ColumnValues::Numeric(values) => {
                let (labels, trace) = discretize_with_ids(values, table.object_ids(), col.name(), config)?;
                columns.push(AttributeColumn::labels(col.name(), labels));
                traces.push(trace);
            }
            _ => columns.push(col.clone()),
        }
    }
    Ok((table.with_columns(columns)?, traces))
}
