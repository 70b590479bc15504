//! Text and JSON renderings of approximation spaces and core analyses.
//!
//! Sets are always listed in ascending id order and attributes in column
//! order, so identical inputs give byte-identical reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::core_analysis::CoreResult;
use crate::discretize::StdevMode;
use crate::error::Result;
use crate::roughset::{Partition, RoughTopology};
use crate::table::{DecisionTable, ObjectSet};

/// Where a report came from.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportContext {
    pub dataset: String,
    /// `None` when the input was already discrete.
    pub stdev_mode: Option<StdevMode>,
    pub target_codes: Vec<u32>,
}

/// Partition, approximations and rough topology for one attribute set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproximationSpace {
    pub attributes: Vec<String>,
    pub classes: Vec<ObjectSet>,
    pub lower: ObjectSet,
    pub upper: ObjectSet,
    pub boundary: ObjectSet,
    pub is_rough: bool,
    pub topology: Vec<ObjectSet>,
    pub basis: Vec<ObjectSet>,
}

impl ApproximationSpace {
    pub fn compute<S: AsRef<str>>(table: &DecisionTable, attributes: &[S], x: &ObjectSet) -> Result<Self> {
        let p = Partition::from_table(table, attributes)?;
        let approx = p.approximate(x);
        let top = RoughTopology::from_approximation(p.universe(), &approx);
        Ok(Self {
            attributes: attributes.iter().map(|a| a.as_ref().to_string()).collect(),
            classes: p.classes().to_vec(),
            is_rough: approx.is_rough(),
            lower: approx.lower,
            upper: approx.upper,
            boundary: approx.boundary,
            topology: top.members.into_iter().collect(),
            basis: top.basis.into_iter().collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmittedSpace {
    pub attribute: String,
    pub space: ApproximationSpace,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub dataset: String,
    pub stdev_mode: Option<StdevMode>,
    pub target_codes: Vec<u32>,
    pub target: ObjectSet,
    pub full: ApproximationSpace,
    pub omitted: Option<OmittedSpace>,
}

/// Approximation space over all attributes and, optionally, without `omit`.
pub fn analyze(
    table: &DecisionTable,
    x: &ObjectSet,
    omit: Option<&str>,
    context: &ReportContext,
) -> Result<AnalysisReport> {
    let all = table.column_names();
    let full = ApproximationSpace::compute(table, &all, x)?;
    let omitted = match omit {
        Some(name) => {
            table.column_index(name)?;
            let rest: Vec<&str> = all.iter().copied().filter(|a| *a != name).collect();
            Some(OmittedSpace { attribute: name.to_string(), space: ApproximationSpace::compute(table, &rest, x)? })
        }
        None => None,
    };
    Ok(AnalysisReport {
        dataset: context.dataset.clone(),
        stdev_mode: context.stdev_mode,
        target_codes: context.target_codes.clone(),
        target: x.clone(),
        full,
        omitted,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AttributeEntry {
    pub name: String,
    pub nu: usize,
    pub mu: f64,
    pub boundary_without: ObjectSet,
    pub basis_changed: bool,
}

/// JSON shape of a core analysis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoreReport {
    pub dataset: String,
    pub stdev_mode: Option<StdevMode>,
    pub target_codes: Vec<u32>,
    pub threshold: u64,
    pub boundary_full: ObjectSet,
    pub attributes: Vec<AttributeEntry>,
    pub exact_core: Vec<String>,
    pub tolerant_core: Vec<String>,
    pub mu_rt: f64,
}

impl CoreReport {
    pub fn new(core: &CoreResult, context: &ReportContext) -> Self {
        Self {
            dataset: context.dataset.clone(),
            stdev_mode: context.stdev_mode,
            target_codes: context.target_codes.clone(),
            threshold: core.threshold,
            boundary_full: core.boundary_full.clone(),
            attributes: core
                .reports
                .iter()
                .map(|r| AttributeEntry {
                    name: r.attribute.clone(),
                    nu: r.nu,
                    mu: r.mu,
                    boundary_without: r.boundary_without.clone(),
                    basis_changed: r.basis_changed,
                })
                .collect(),
            exact_core: core.exact_core.clone(),
            tolerant_core: core.tolerant_core.clone(),
            mu_rt: core.mu_rt,
        }
    }
}

fn families(sets: &[ObjectSet]) -> String {
    sets.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn names(list: &[String]) -> String {
    format!("{{{}}}", list.join(", "))
}

fn header(out: &mut String, context: &ReportContext) {
    let _ = writeln!(out, "Dataset: {}", context.dataset);
    match context.stdev_mode {
        Some(mode) => {
            let _ = writeln!(out, "Discretization: standard deviation ({mode})");
        }
        None => {
            let _ = writeln!(out, "Discretization: none (already discrete)");
        }
    }
    let codes: Vec<String> = context.target_codes.iter().map(u32::to_string).collect();
    let _ = writeln!(out, "Target decision codes: {}", codes.join(", "));
}

const RULE: &str = "--------------------------------------------------------------------------";

fn space_block(out: &mut String, title: &str, space: &ApproximationSpace) {
    let _ = writeln!(out, "\n{title}\n{RULE}");
    let _ = writeln!(out, "Equivalence Classes: {}", families(&space.classes));
    let _ = writeln!(out, "Lower Approximation: {}", space.lower);
    let _ = writeln!(out, "Upper Approximation: {}", space.upper);
    let _ = writeln!(out, "Boundary: {}", space.boundary);
}

pub fn render_analysis_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    header(
        &mut out,
        &ReportContext {
            dataset: report.dataset.clone(),
            stdev_mode: report.stdev_mode,
            target_codes: report.target_codes.clone(),
        },
    );
    let _ = writeln!(out, "X = {}", report.target);
    let mut spaces = vec![("All attributes are used".to_string(), &report.full)];
    if let Some(o) = &report.omitted {
        spaces.push((format!("{} is omitted", o.attribute), &o.space));
    }
    for (title, space) in spaces {
        space_block(&mut out, &title, space);
        let _ = writeln!(out, "Rough set: {}", if space.is_rough { "yes" } else { "no" });
        let _ = writeln!(out, "Topology: {{{}}}", families(&space.topology));
        let _ = writeln!(out, "Basis: {{{}}}", families(&space.basis));
    }
    out
}

/// Full omission report: one block per attribute with the partition, both
/// approximations, the boundary and the nu and mu lines.
pub fn render_core_text(table: &DecisionTable, core: &CoreResult, context: &ReportContext) -> Result<String> {
    let mut out = String::new();
    header(&mut out, context);
    let _ = writeln!(out, "X = {}", core.target);
    let _ = writeln!(out, "Threshold: {}", core.threshold);

    let all = table.column_names();
    space_block(&mut out, "All attributes are used", &ApproximationSpace::compute(table, &all, &core.target)?);
    for report in &core.reports {
        let rest: Vec<&str> = all.iter().copied().filter(|a| *a != report.attribute).collect();
        let space = ApproximationSpace::compute(table, &rest, &core.target)?;
        space_block(&mut out, &format!("{} is omitted", report.attribute), &space);
        let changed = report.boundary_full.symmetric_difference(&report.boundary_without);
        let _ = writeln!(
            out,
            "nu_{}(X) = |{}| = {}  (symmetric-difference convention)",
            report.attribute, changed, report.nu
        );
        let _ = writeln!(
            out,
            "mu_{}(X) = {}/{} = {}",
            report.attribute,
            report.boundary_full.len(),
            report.boundary_without.len(),
            report.mu
        );
    }
    let _ = writeln!(out, "\n{RULE}");
    let _ = writeln!(out, "Exact core (basis change): {}", names(&core.exact_core));
    let _ = writeln!(out, "Tolerant core (nu > {}): {}", core.threshold, names(&core.tolerant_core));
    let _ = writeln!(out, "mu_RT(X) = {}", core.mu_rt);
    Ok(out)
}
