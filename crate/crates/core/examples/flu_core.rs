//! Approximations, boundary and exact core of a small symptom table.
//!
//! cargo run --example flu_core

use roughcore::{compute_core, load_csv, prepare, select_target_set, IngestConfig, Partition, Preparation};

const TABLE: &str = "\
Patient,Headache,Muscular pain,Temperature,Flu
1,No,Yes,High,Yes
2,Yes,No,High,Yes
3,Yes,Yes,Very High,Yes
4,No,Yes,Normal,No
5,Yes,No,High,No
6,No,Yes,Very High,Yes
";

fn main() -> roughcore::Result<()> {
    let loaded = load_csv(TABLE.as_bytes(), &IngestConfig::default().with_id_column("Patient"))?;
    let table = prepare(loaded, Preparation::AlreadyDiscrete)?.discrete;

    let flu = table.decision().code_of("Yes").expect("Yes is a decision value");
    let x = select_target_set(&table, &[flu])?;
    let p = Partition::from_table(&table, &table.column_names())?;
    let approx = p.approximate(&x);

    println!("X        = {x}");
    println!("classes  = {:?}", p.classes().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("lower    = {}", approx.lower);
    println!("upper    = {}", approx.upper);
    println!("boundary = {}", approx.boundary);

    let core = compute_core(&table, &x, 0)?;
    for r in &core.reports {
        println!(
            "without {:<14} boundary {:<20} nu {}  mu {:.3}",
            r.attribute,
            r.boundary_without.to_string(),
            r.nu,
            r.mu
        );
    }
    println!("exact core = {:?}", core.exact_core);
    Ok(())
}
