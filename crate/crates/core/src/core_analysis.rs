//! Attribute omission analysis: how much the boundary of a target set grows
//! when one condition attribute is dropped, and which attributes form the
//! (exact or tolerant) core.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roughset::Partition;
use crate::table::{DecisionTable, ObjectId, ObjectSet};

/// Effect of omitting one attribute on the boundary of the target set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AttributeReport {
    pub attribute: String,
    /// B_R(X), all attributes.
    pub boundary_full: ObjectSet,
    /// B_{R-r}(X), every attribute except this one.
    pub boundary_without: ObjectSet,
    /// |B_R(X) Δ B_{R-r}(X)|.
    pub nu: usize,
    /// |B_R(X)| / |B_{R-r}(X)|, 1 when both are empty.
    pub mu: f64,
    /// Whether the basis of the rough topology changes without this attribute.
    pub basis_changed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoreResult {
    pub target: ObjectSet,
    pub boundary_full: ObjectSet,
    /// One report per condition attribute, in column order.
    pub reports: Vec<AttributeReport>,
    /// Attributes whose omission changes the basis (nu > 0).
    pub exact_core: Vec<String>,
    /// Attributes with nu > threshold.
    pub tolerant_core: Vec<String>,
    pub threshold: u64,
    pub mu_rt: f64,
}

impl CoreResult {
    pub fn report(&self, attribute: &str) -> Option<&AttributeReport> {
        self.reports.iter().find(|r| r.attribute == attribute)
    }

    pub fn nu_values(&self) -> Vec<(&str, usize)> {
        self.reports.iter().map(|r| (r.attribute.as_str(), r.nu)).collect()
    }
}

/// Discrete codes for every condition column, computed once and shared by
/// all omission partitions.
struct CodedTable<'a> {
    ids: &'a [ObjectId],
    names: Vec<&'a str>,
    codes: Vec<Vec<u32>>,
}

impl<'a> CodedTable<'a> {
    fn new(table: &'a DecisionTable) -> Result<Self> {
        let codes = table.columns().iter().map(|c| c.discrete_codes()).collect::<Result<_>>()?;
        Ok(Self { ids: table.object_ids(), names: table.column_names(), codes })
    }

    fn partition_without(&self, omitted: Option<usize>) -> Partition {
        let cols: Vec<&[u32]> =
            self.codes.iter().enumerate().filter(|&(i, _)| Some(i) != omitted).map(|(_, c)| c.as_slice()).collect();
        Partition::from_codes(self.ids, &cols)
    }

    fn require_omittable(&self) -> Result<()> {
        if self.names.len() < 2 {
            return Err(Error::TooFewAttributes(self.names.len()));
        }
        Ok(())
    }

    fn report(&self, index: usize, x: &ObjectSet, boundary_full: &ObjectSet) -> AttributeReport {
        let boundary_without = self.partition_without(Some(index)).boundary(x);
        let nu = boundary_full.symmetric_difference(&boundary_without).len();
        AttributeReport {
            attribute: self.names[index].to_string(),
            boundary_full: boundary_full.clone(),
            mu: boundary_ratio(boundary_full.len(), boundary_without.len()),
            boundary_without,
            nu,
            basis_changed: nu > 0,
        }
    }
}

fn boundary_ratio(full: usize, without: usize) -> f64 {
    if without == 0 {
        1.0
    } else {
        full as f64 / without as f64
    }
}

fn check_target(table: &DecisionTable, x: &ObjectSet) -> Result<()> {
    let universe = table.universe();
    match x.iter().find(|id| !universe.contains(*id)) {
        Some(id) => Err(Error::UnknownObject(id)),
        None => Ok(()),
    }
}

/// Compares B_R(X) with B_{R-{attribute}}(X).
pub fn omit_analysis(table: &DecisionTable, x: &ObjectSet, attribute: &str) -> Result<AttributeReport> {
    check_target(table, x)?;
    let coded = CodedTable::new(table)?;
    coded.require_omittable()?;
    let index = table.column_index(attribute)?;
    let boundary_full = coded.partition_without(None).boundary(x);
    Ok(coded.report(index, x, &boundary_full))
}

/// Largest mu over the reports.
pub fn mu_rt(reports: &[AttributeReport]) -> Result<f64> {
    reports.iter().map(|r| r.mu).reduce(f64::max).ok_or(Error::NoReports)
}

/// Runs the omission analysis for every condition attribute.
///
/// `threshold = 0` makes the tolerant core equal the exact core.
pub fn compute_core(table: &DecisionTable, x: &ObjectSet, threshold: u64) -> Result<CoreResult> {
    check_target(table, x)?;
    let coded = CodedTable::new(table)?;
    coded.require_omittable()?;
    let boundary_full = coded.partition_without(None).boundary(x);
    let reports: Vec<AttributeReport> = (0..coded.names.len()).map(|i| coded.report(i, x, &boundary_full)).collect();

    let exact_core = reports.iter().filter(|r| r.nu > 0).map(|r| r.attribute.clone()).collect();
    let tolerant_core = reports.iter().filter(|r| r.nu as u64 > threshold).map(|r| r.attribute.clone()).collect();
    let mu_rt = mu_rt(&reports)?;
    Ok(CoreResult { target: x.clone(), boundary_full, reports, exact_core, tolerant_core, threshold, mu_rt })
}

/// Recomputes the analysis for U - X and checks nu values and both cores agree.
pub fn verify_complement(table: &DecisionTable, x: &ObjectSet, threshold: u64) -> Result<bool> {
    let direct = compute_core(table, x, threshold)?;
    let complement = compute_core(table, &table.universe().difference(x), threshold)?;
    Ok(direct.nu_values() == complement.nu_values()
        && direct.exact_core == complement.exact_core
        && direct.tolerant_core == complement.tolerant_core)
}

/// Restricts `table` to the tolerant core attributes plus the decision.
///
/// Pass the table as loaded (before discretization) to keep the original values.
pub fn export_reduced(table: &DecisionTable, core: &CoreResult) -> Result<DecisionTable> {
    if core.tolerant_core.is_empty() {
        return Err(Error::EmptyCore { threshold: core.threshold });
    }
    table.project(&core.tolerant_core)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{AttributeColumn, DecisionColumn};

    fn set(ids: &[u64]) -> ObjectSet {
        ObjectSet::from_ids(ids.iter().copied())
    }

    fn flu_table() -> DecisionTable {
        DecisionTable::new(
            Some("Patient".into()),
            (1..=6).map(ObjectId).collect(),
            vec![
                AttributeColumn::categorical("Headache", vec!["No", "Yes", "Yes", "No", "Yes", "No"]),
                AttributeColumn::categorical("Muscular pain", vec!["Yes", "No", "Yes", "Yes", "No", "Yes"]),
                AttributeColumn::categorical(
                    "Temperature",
                    vec!["High", "High", "Very High", "Normal", "High", "Very High"],
                ),
            ],
            DecisionColumn::new("Flue", vec!["Yes", "Yes", "Yes", "No", "No", "Yes"]),
        )
        .unwrap()
    }

    #[test]
    fn temperature_symmetric_difference() {
        let t = flu_table();
        let r = omit_analysis(&t, &set(&[1, 2, 3, 6]), "Temperature").unwrap();
        assert_eq!(r.boundary_full, set(&[2, 5]));
        assert_eq!(r.boundary_without, set(&[1, 2, 4, 5, 6]));
        assert_eq!(r.nu, 3);
        assert_eq!(r.mu, 2.0 / 5.0);
        assert!(r.basis_changed);
    }

    #[test]
    fn flu_core() {
        let t = flu_table();
        let core = compute_core(&t, &set(&[1, 2, 3, 6]), 0).unwrap();
        assert_eq!(core.exact_core, ["Temperature"]);
        assert_eq!(core.tolerant_core, ["Temperature"]);
        assert_eq!(core.nu_values(), [("Headache", 0), ("Muscular pain", 0), ("Temperature", 3)]);
        assert_eq!(core.mu_rt, 1.0);
        assert_eq!(compute_core(&t, &set(&[4, 5]), 0).unwrap().exact_core, ["Temperature"]);
        assert!(verify_complement(&t, &set(&[1, 2, 3, 6]), 0).unwrap());
        // Threshold above every nu empties the tolerant core only.
        let loose = compute_core(&t, &set(&[1, 2, 3, 6]), 3).unwrap();
        assert!(loose.tolerant_core.is_empty());
        assert_eq!(loose.exact_core, ["Temperature"]);
    }

    #[test]
    fn empty_and_full_targets() {
        let t = flu_table();
        for x in [ObjectSet::new(), t.universe()] {
            let core = compute_core(&t, &x, 0).unwrap();
            assert!(core.reports.iter().all(|r| r.nu == 0 && r.mu == 1.0));
            assert_eq!(core.mu_rt, 1.0);
        }
        assert!(verify_complement(&t, &ObjectSet::new(), 0).unwrap());
    }

    #[test]
    fn mu_rt_of_reports() {
        let r = AttributeReport {
            attribute: "a".into(),
            boundary_full: set(&[1]),
            boundary_without: set(&[1, 2, 3, 4]),
            nu: 3,
            mu: 0.25,
            basis_changed: true,
        };
        assert_eq!(mu_rt(std::slice::from_ref(&r)).unwrap(), 0.25);
        assert!(matches!(mu_rt(&[]), Err(Error::NoReports)));
    }

    #[test]
    fn errors() {
        let t = flu_table();
        assert!(omit_analysis(&t, &set(&[1]), "Fever").unwrap_err().is_config());
        let single = t.project(&["Headache"]).unwrap();
        assert!(matches!(compute_core(&single, &set(&[1]), 0), Err(Error::TooFewAttributes(1))));
        assert!(matches!(compute_core(&t, &set(&[99]), 0), Err(Error::UnknownObject(ObjectId(99)))));
    }

    #[test]
    fn export() {
        let t = flu_table();
        let core = compute_core(&t, &set(&[1, 2, 3, 6]), 0).unwrap();
        let reduced = export_reduced(&t, &core).unwrap();
        assert_eq!(reduced.column_names(), ["Temperature"]);
        assert_eq!(reduced.decision(), t.decision());
        let empty = compute_core(&t, &set(&[1, 2, 3, 6]), 10).unwrap();
        assert!(matches!(export_reduced(&t, &empty), Err(Error::EmptyCore { threshold: 10 })));
    }
}
