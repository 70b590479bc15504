//! Independent oracles for the integration suites.
//!
//! Nothing here calls the partition or approximation code under test: classes
//! come from a quadratic pairwise merge and approximations straight from the
//! indiscernibility relation.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use roughcore::roughset::{satisfies_topology_axioms, RoughTopology};
use roughcore::{
    compute_core, discretize_column, AttributeColumn, DecisionColumn, DecisionTable, DiscretizationConfig, ObjectId,
    ObjectSet, Partition,
};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub type Rows = Vec<Vec<u32>>;

/// Row-major codes, objects numbered 1..=n.
pub fn table_from_rows(rows: &Rows) -> DecisionTable {
    let width = rows.first().map_or(0, Vec::len);
    let columns =
        (0..width).map(|c| AttributeColumn::labels(format!("a{c}"), rows.iter().map(|r| r[c] + 1).collect())).collect();
    DecisionTable::new(
        None,
        (1..=rows.len() as u64).map(ObjectId).collect(),
        columns,
        DecisionColumn::new("d", vec!["0"; rows.len()]),
    )
    .unwrap()
}

fn indiscernible(a: &[u32], b: &[u32], attrs: &[usize]) -> bool {
    attrs.iter().all(|&c| a[c] == b[c])
}

/// Quadratic merge: each object joins the first class whose representative
/// it matches on every attribute in `attrs`.
pub fn merge_partition(rows: &Rows, attrs: &[usize]) -> BTreeSet<BTreeSet<u64>> {
    let mut classes: Vec<(usize, BTreeSet<u64>)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        match classes.iter_mut().find(|(rep, _)| indiscernible(&rows[*rep], row, attrs)) {
            Some((_, members)) => {
                members.insert(i as u64 + 1);
            }
            None => classes.push((i, BTreeSet::from([i as u64 + 1]))),
        }
    }
    classes.into_iter().map(|(_, m)| m).collect()
}

pub struct Approx {
    pub lower: BTreeSet<u64>,
    pub upper: BTreeSet<u64>,
    pub boundary: BTreeSet<u64>,
}

/// Approximations from the relation itself: `i` is in the lower set when every
/// object indiscernible from it is in X, in the upper set when some is.
pub fn brute_approx(rows: &Rows, attrs: &[usize], x: &BTreeSet<u64>) -> Approx {
    let mut lower = BTreeSet::new();
    let mut upper = BTreeSet::new();
    for (i, row) in rows.iter().enumerate() {
        let related: Vec<u64> = rows
            .iter()
            .enumerate()
            .filter(|(_, other)| indiscernible(row, other, attrs))
            .map(|(j, _)| j as u64 + 1)
            .collect();
        if related.iter().all(|j| x.contains(j)) {
            lower.insert(i as u64 + 1);
        }
        if related.iter().any(|j| x.contains(j)) {
            upper.insert(i as u64 + 1);
        }
    }
    let boundary = upper.difference(&lower).copied().collect();
    Approx { lower, upper, boundary }
}

fn brute_basis(n: usize, a: &Approx) -> BTreeSet<BTreeSet<u64>> {
    let universe: BTreeSet<u64> = (1..=n as u64).collect();
    [universe, a.lower.clone(), a.boundary.clone()].into_iter().filter(|s| !s.is_empty()).collect()
}

/// Attributes whose removal changes {U, lower, boundary}, by direct comparison.
pub fn brute_exact_core(rows: &Rows, x: &BTreeSet<u64>) -> Vec<String> {
    let width = rows[0].len();
    let all: Vec<usize> = (0..width).collect();
    let full = brute_basis(rows.len(), &brute_approx(rows, &all, x));
    (0..width)
        .filter(|&r| {
            let rest: Vec<usize> = all.iter().copied().filter(|&c| c != r).collect();
            brute_basis(rows.len(), &brute_approx(rows, &rest, x)) != full
        })
        .map(|r| format!("a{r}"))
        .collect()
}

pub fn ids(set: &ObjectSet) -> BTreeSet<u64> {
    set.iter().map(|id| id.0).collect()
}

pub fn to_set(ids: &BTreeSet<u64>) -> ObjectSet {
    ObjectSet::from_ids(ids.iter().copied())
}

/// Every union of a subfamily of `basis`, the empty union included.
fn unions(basis: &[BTreeSet<u64>]) -> BTreeSet<BTreeSet<u64>> {
    (0u32..1 << basis.len())
        .map(|mask| {
            basis
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .flat_map(|(_, s)| s.iter().copied())
                .collect()
        })
        .collect()
}

fn topology_axioms(family: &BTreeSet<BTreeSet<u64>>, n: usize) -> bool {
    let universe: BTreeSet<u64> = (1..=n as u64).collect();
    family.contains(&BTreeSet::new())
        && family.contains(&universe)
        && family.iter().all(|a| {
            family.iter().all(|b| {
                family.contains(&a.union(b).copied().collect::<BTreeSet<_>>())
                    && family.contains(&a.intersection(b).copied().collect::<BTreeSet<_>>())
            })
        })
}

/// Target-independent checks: hash partition against the merge oracle and
/// refinement of every one-attribute-smaller partition.
pub fn check_partitions(rows: &Rows, table: &DecisionTable) -> Result<(Partition, Vec<Partition>), String> {
    let width = rows[0].len();
    let all: Vec<usize> = (0..width).collect();
    let names = table.column_names();
    let p = Partition::from_table(table, &names).map_err(|e| e.to_string())?;
    let hashed: BTreeSet<BTreeSet<u64>> = p.classes().iter().map(ids).collect();
    if hashed != merge_partition(rows, &all) {
        return Err(format!("partition mismatch on {rows:?}"));
    }
    let mut coarse = Vec::new();
    if width >= 2 {
        for r in 0..width {
            let rest: Vec<&str> = names.iter().copied().filter(|s| *s != names[r]).collect();
            let q = Partition::from_table(table, &rest).map_err(|e| e.to_string())?;
            if !p.refines(&q) {
                return Err(format!("partition does not refine the one without a{r} on {rows:?}"));
            }
            coarse.push(q);
        }
    }
    Ok((p, coarse))
}

/// Checks every target-dependent property; returns the first violation.
pub fn check_target(
    rows: &Rows,
    table: &DecisionTable,
    p: &Partition,
    coarse: &[Partition],
    x_ids: &BTreeSet<u64>,
) -> Result<Vec<usize>, String> {
    let n = rows.len();
    let width = rows[0].len();
    let all: Vec<usize> = (0..width).collect();
    let universe = table.universe();
    let x = to_set(x_ids);
    let not_x = universe.difference(&x);

    let a = p.approximate(&x);
    let oracle = brute_approx(rows, &all, x_ids);
    if ids(&a.lower) != oracle.lower || ids(&a.upper) != oracle.upper || ids(&a.boundary) != oracle.boundary {
        return Err(format!("approximation mismatch on {rows:?} X={x_ids:?}"));
    }
    if !a.lower.is_subset(&x) || !x.is_subset(&a.upper) {
        return Err(format!("lower ⊆ X ⊆ upper violated on {rows:?} X={x_ids:?}"));
    }
    if a.lower != universe.difference(&p.upper(&not_x)) {
        return Err(format!("duality violated on {rows:?} X={x_ids:?}"));
    }
    if a.boundary != p.boundary(&not_x) {
        return Err(format!("complement boundary differs on {rows:?} X={x_ids:?}"));
    }

    let top = RoughTopology::new(p, &x);
    let members: BTreeSet<BTreeSet<u64>> = top.members.iter().map(ids).collect();
    if !topology_axioms(&members, n) || !satisfies_topology_axioms(&top.members, &universe) {
        return Err(format!("topology axioms fail on {rows:?} X={x_ids:?}"));
    }
    let basis: Vec<BTreeSet<u64>> = top.basis.iter().map(ids).collect();
    if unions(&basis) != members {
        return Err(format!("basis does not generate the topology on {rows:?} X={x_ids:?}"));
    }

    for (r, q) in coarse.iter().enumerate() {
        if !a.boundary.is_subset(&q.boundary(&x)) {
            return Err(format!("boundary shrinks without a{r} on {rows:?} X={x_ids:?}"));
        }
    }

    if width >= 2 {
        let core = compute_core(table, &x, 0).map_err(|e| e.to_string())?;
        if core.exact_core != brute_exact_core(rows, x_ids) {
            return Err(format!(
                "exact core {:?} differs from basis comparison on {rows:?} X={x_ids:?}",
                core.exact_core
            ));
        }
        for (r, report) in core.reports.iter().enumerate() {
            let rest: Vec<usize> = all.iter().copied().filter(|&c| c != r).collect();
            let without = brute_approx(rows, &rest, x_ids).boundary;
            let nu = oracle.boundary.symmetric_difference(&without).count();
            if report.nu != nu {
                return Err(format!("nu of a{r} is {} not {nu} on {rows:?} X={x_ids:?}", report.nu));
            }
        }
        return Ok(core.reports.iter().map(|r| r.nu).collect());
    }
    Ok(Vec::new())
}

/// All targets X ⊆ U for one table; returns the number of cases checked.
pub fn check_all_targets(rows: &Rows) -> Result<usize, String> {
    let table = table_from_rows(rows);
    let (p, coarse) = check_partitions(rows, &table)?;
    let n = rows.len();
    let full = (1u32 << n) - 1;
    let mut nus = Vec::with_capacity(1 << n);
    for mask in 0..=full {
        let x: BTreeSet<u64> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i as u64 + 1).collect();
        nus.push(check_target(rows, &table, &p, &coarse, &x)?);
    }
    for mask in 0..=full {
        if nus[mask as usize] != nus[(full & !mask) as usize] {
            return Err(format!("nu differs between mask {mask:b} and its complement on {rows:?}"));
        }
    }
    Ok(1 << n)
}

/// Restricted-growth strings of length `n` using at most `k` values: one per
/// set partition of the objects into at most `k` blocks.
pub fn restricted_growth(n: usize, k: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, max: u32, n: usize, k: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=(max + 1).min(k - 1) {
            prefix.push(v);
            extend(prefix, max.max(v), n, k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        let mut prefix = vec![0];
        extend(&mut prefix, 0, n, k, &mut out);
    }
    out
}

/// Multisets of `width` columns drawn from `patterns`, as row-major tables.
pub fn column_multisets(patterns: &[Vec<u32>], width: usize) -> Vec<Rows> {
    fn pick(start: usize, width: usize, patterns: &[Vec<u32>], chosen: &mut Vec<usize>, out: &mut Vec<Rows>) {
        if chosen.len() == width {
            let n = patterns[0].len();
            out.push((0..n).map(|i| chosen.iter().map(|&c| patterns[c][i]).collect()).collect());
            return;
        }
        for c in start..patterns.len() {
            chosen.push(c);
            pick(c, width, patterns, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    pick(0, width, patterns, &mut Vec::new(), &mut out);
    out
}

/// Shapes covered exhaustively: (objects, attributes). Columns range over
/// every set partition with at most three blocks, so each table stands for
/// all its relabelings and attribute orders.
pub const EXHAUSTIVE_SHAPES: [(usize, usize); 4] = [(4, 4), (5, 3), (6, 2), (8, 1)];

pub fn exhaustive_tables() -> Vec<Rows> {
    EXHAUSTIVE_SHAPES.iter().flat_map(|&(n, width)| column_multisets(&restricted_growth(n, 3), width)).collect()
}

pub fn random_rows(rng: &mut ChaCha8Rng, max_objects: usize, max_attrs: usize, max_values: u32) -> Rows {
    let n = rng.gen_range(1..=max_objects);
    let width = rng.gen_range(1..=max_attrs);
    let values = rng.gen_range(1..=max_values);
    (0..n).map(|_| (0..width).map(|_| rng.gen_range(0..values)).collect()).collect()
}

/// Anti-monotonicity, gap-free coverage and at most n bins for one column.
pub fn check_discretization(values: &[f64], config: &DiscretizationConfig) -> Result<(), String> {
    let (labels, trace) = discretize_column(values, config).map_err(|e| e.to_string())?;
    if labels.len() != values.len() {
        return Err("label count differs from value count".into());
    }
    for i in 0..values.len() {
        for j in 0..values.len() {
            if values[i] > values[j] && labels[i] > labels[j] {
                return Err(format!("anti-monotonicity fails for {values:?}"));
            }
            if values[i] == values[j] && labels[i] != labels[j] {
                return Err(format!("equal values split in {values:?}"));
            }
        }
    }
    let used: BTreeSet<u32> = labels.iter().copied().collect();
    let k = trace.bins.len() as u32;
    if used != (1..=k).collect() {
        return Err(format!("labels {used:?} are not 1..={k} for {values:?}"));
    }
    if trace.bins.len() > values.len() || trace.bins.iter().any(|b| b.members.is_empty()) {
        return Err(format!("a peel assigned nothing for {values:?}"));
    }
    let covered: usize = trace.bins.iter().map(|b| b.members.len()).sum();
    if covered != values.len() {
        return Err(format!("bins cover {covered} of {} values", values.len()));
    }
    Ok(())
}

pub fn random_column(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let n = rng.gen_range(1..=40);
    match rng.gen_range(0..4) {
        0 => vec![rng.gen_range(-50.0..50.0); n],
        1 => (0..n).map(|_| rng.gen_range(0..5) as f64).collect(),
        2 => (0..n).map(|_| (rng.gen_range(-1000.0..1000.0_f64) * 1000.0).round() / 1000.0).collect(),
        _ => (0..n).map(|_| rng.gen_range(0.0..1e-3)).collect(),
    }
}
