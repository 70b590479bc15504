//! Indiscernibility partitions, lower/upper approximations, boundary regions
//! and the rough topology generated by a target set.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{DecisionTable, ObjectId, ObjectSet};

/// The quotient U/R: disjoint, non-empty classes covering the universe.
///
/// Classes are kept in canonical order (ascending smallest member), so two
/// partitions of the same universe compare equal iff they are the same
/// partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    universe: ObjectSet,
    classes: Vec<ObjectSet>,
    class_of: HashMap<ObjectId, usize>,
}

impl Partition {
    /// Groups objects by their value tuples over `attributes`.
    pub fn from_table<S: AsRef<str>>(table: &DecisionTable, attributes: &[S]) -> Result<Self> {
        if attributes.is_empty() {
            return Err(Error::EmptyAttributeSet);
        }
        let mut columns = Vec::with_capacity(attributes.len());
        for name in attributes {
            columns.push(table.column(name.as_ref())?.discrete_codes()?);
        }
        let refs: Vec<&[u32]> = columns.iter().map(Vec::as_slice).collect();
        Ok(Self::from_codes(table.object_ids(), &refs))
    }

    /// Partitions `ids` so that two rows share a class iff they agree on every
    /// column of `columns` (each indexed by row).
    ///
    /// Runs one hash pass per column, refining the previous class labels with
    /// the next column's code: O(rows * columns) expected time.
    pub fn from_codes(ids: &[ObjectId], columns: &[&[u32]]) -> Self {
        let n = ids.len();
        let mut label = vec![0u32; n];
        let mut refine: HashMap<(u32, u32), u32> = HashMap::with_capacity(n.min(1 << 16));
        for col in columns {
            debug_assert_eq!(col.len(), n);
            refine.clear();
            for (l, &code) in label.iter_mut().zip(col.iter()) {
                let next = refine.len() as u32;
                *l = *refine.entry((*l, code)).or_insert(next);
            }
        }

        let groups = columns.first().map_or(1, |_| refine.len()).max(usize::from(n > 0));
        let mut buckets: Vec<Vec<ObjectId>> = vec![Vec::new(); groups];
        for (&id, &l) in ids.iter().zip(&label) {
            buckets[l as usize].push(id);
        }
        let classes = buckets.into_iter().map(|b| b.into_iter().collect::<ObjectSet>()).collect();
        Self::assemble(classes)
    }

    /// Builds a partition from explicit classes, checking they are non-empty
    /// and pairwise disjoint. The universe is their union.
    pub fn from_classes(classes: Vec<ObjectSet>) -> Result<Self> {
        let mut seen = ObjectSet::new();
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            for id in class {
                if !seen.insert(id) {
                    return Err(Error::InvalidPartition(format!("object {id} is in two classes")));
                }
            }
        }
        Ok(Self::assemble(classes))
    }

    fn assemble(mut classes: Vec<ObjectSet>) -> Self {
        classes.retain(|c| !c.is_empty());
        classes.sort_by_key(|c| c.iter().next());
        let mut class_of = HashMap::new();
        let mut universe = ObjectSet::new();
        for (i, class) in classes.iter().enumerate() {
            for id in class {
                class_of.insert(id, i);
                universe.insert(id);
            }
        }
        Self { universe, classes, class_of }
    }

    pub fn universe(&self) -> &ObjectSet {
        &self.universe
    }

    pub fn classes(&self) -> &[ObjectSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The class [x]_R of `id`.
    pub fn class_of(&self, id: ObjectId) -> Option<&ObjectSet> {
        self.class_of.get(&id).map(|&i| &self.classes[i])
    }

    /// Union of the classes contained in `x`.
    pub fn lower(&self, x: &ObjectSet) -> ObjectSet {
        self.classes.iter().filter(|c| c.is_subset(x)).flat_map(|c| c.iter()).collect()
    }

    /// Union of the classes meeting `x`.
    pub fn upper(&self, x: &ObjectSet) -> ObjectSet {
        let mut hit = vec![false; self.classes.len()];
        for id in x {
            if let Some(&i) = self.class_of.get(&id) {
                hit[i] = true;
            }
        }
        self.classes.iter().zip(hit).filter(|(_, h)| *h).flat_map(|(c, _)| c.iter()).collect()
    }

    pub fn boundary(&self, x: &ObjectSet) -> ObjectSet {
        self.approximate(x).boundary
    }

    pub fn is_rough(&self, x: &ObjectSet) -> bool {
        !self.boundary(x).is_empty()
    }

    pub fn approximate(&self, x: &ObjectSet) -> ApproximationResult {
        let lower = self.lower(x);
        let upper = self.upper(x);
        let boundary = upper.difference(&lower);
        ApproximationResult { target: x.clone(), lower, upper, boundary }
    }

    /// True when every class of `self` lies inside one class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.universe == coarser.universe
            && self.classes.iter().all(|c| {
                let first = c.iter().next().expect("classes are non-empty");
                coarser.class_of(first).is_some_and(|big| c.is_subset(big))
            })
    }
}

/// Lower approximation, upper approximation and boundary of one target set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproximationResult {
    pub target: ObjectSet,
    pub lower: ObjectSet,
    pub upper: ObjectSet,
    pub boundary: ObjectSet,
}

impl ApproximationResult {
    pub fn is_rough(&self) -> bool {
        !self.boundary.is_empty()
    }
}

pub fn partition<S: AsRef<str>>(table: &DecisionTable, attributes: &[S]) -> Result<Partition> {
    Partition::from_table(table, attributes)
}

pub fn lower_approximation(p: &Partition, x: &ObjectSet) -> ObjectSet {
    p.lower(x)
}

pub fn upper_approximation(p: &Partition, x: &ObjectSet) -> ObjectSet {
    p.upper(x)
}

pub fn boundary(p: &Partition, x: &ObjectSet) -> ObjectSet {
    p.boundary(x)
}

pub fn is_rough(p: &Partition, x: &ObjectSet) -> bool {
    p.is_rough(x)
}

/// A family of subsets of the universe, compared as a set of sets.
pub type SetFamily = BTreeSet<ObjectSet>;

/// τ_R = {U, ∅, lower, upper, boundary} and its basis {U, lower, boundary}.
///
/// Both families collapse duplicates. The basis leaves out the empty set,
/// which contributes nothing to the unions it generates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoughTopology {
    pub members: SetFamily,
    pub basis: SetFamily,
}

impl RoughTopology {
    pub fn new(p: &Partition, x: &ObjectSet) -> Self {
        Self::from_approximation(p.universe(), &p.approximate(x))
    }

    pub fn from_approximation(universe: &ObjectSet, approx: &ApproximationResult) -> Self {
        let members: SetFamily =
            [universe.clone(), ObjectSet::new(), approx.lower.clone(), approx.upper.clone(), approx.boundary.clone()]
                .into_iter()
                .collect();
        let basis: SetFamily = [universe.clone(), approx.lower.clone(), approx.boundary.clone()]
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect();
        Self { members, basis }
    }
}

/// `universe` must equal the partition's universe.
pub fn rough_topology(p: &Partition, x: &ObjectSet, universe: &ObjectSet) -> Result<RoughTopology> {
    if universe != p.universe() {
        return Err(Error::InvalidPartition("universe does not match the partition".into()));
    }
    Ok(RoughTopology::new(p, x))
}

/// Checks ∅ and U are members and the family is closed under pairwise union
/// and intersection (enough for finite families).
pub fn satisfies_topology_axioms(family: &SetFamily, universe: &ObjectSet) -> bool {
    if !family.contains(&ObjectSet::new()) || !family.contains(universe) {
        return false;
    }
    family.iter().all(|a| {
        a.is_subset(universe)
            && family.iter().all(|b| family.contains(&a.union(b)) && family.contains(&a.intersection(b)))
    })
}

/// True when `basis ⊆ topology` and every member of `topology` is a union of
/// basis elements (the empty union gives ∅).
pub fn generates(basis: &SetFamily, topology: &SetFamily) -> bool {
    basis.is_subset(topology)
        && topology.iter().all(|member| {
            let covered: ObjectSet = basis.iter().filter(|b| b.is_subset(member)).flat_map(|b| b.iter()).collect();
            &covered == member
        })
}
