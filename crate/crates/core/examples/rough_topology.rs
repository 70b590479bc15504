//! Rough topology and basis generated by a target set over a fixed
//! partition, checked against the topology axioms.
//!
//! cargo run --example rough_topology

use roughcore::roughset::{generates, satisfies_topology_axioms};
use roughcore::{ObjectSet, Partition, RoughTopology};

fn show(family: &std::collections::BTreeSet<ObjectSet>) -> String {
    family.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn main() -> roughcore::Result<()> {
    let p = Partition::from_classes(vec![
        ObjectSet::from_ids([1, 2]),
        ObjectSet::from_ids([3, 5]),
        ObjectSet::from_ids([4]),
    ])?;
    for x in [ObjectSet::from_ids([1, 2, 3]), ObjectSet::from_ids([1, 2]), ObjectSet::from_ids([3])] {
        let top = RoughTopology::new(&p, &x);
        println!("X = {x}");
        println!("  topology {{{}}}", show(&top.members));
        println!("  basis    {{{}}}", show(&top.basis));
        println!(
            "  axioms hold: {}, basis generates: {}",
            satisfies_topology_axioms(&top.members, p.universe()),
            generates(&top.basis, &top.members)
        );
    }
    Ok(())
}
