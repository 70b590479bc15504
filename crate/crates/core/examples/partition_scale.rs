//! Partition and full core analysis of a large synthetic table.
//!
//! cargo run --release --example partition_scale -- [ROWS] [ATTRIBUTES]

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use roughcore::{compute_core, AttributeColumn, DecisionColumn, DecisionTable, ObjectId, Partition};

fn main() -> roughcore::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("a row or attribute count"));
    let rows = args.next().unwrap_or(50_000);
    let width = args.next().unwrap_or(10);
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    let columns = (0..width)
        .map(|c| {
            let k = rng.gen_range(2..=5);
            AttributeColumn::labels(format!("a{c}"), (0..rows).map(|_| rng.gen_range(1..=k)).collect())
        })
        .collect();
    let decision = (0..rows).map(|_| if rng.gen_bool(0.4) { "pos" } else { "neg" }).collect();
    let table = DecisionTable::new(
        None,
        (1..=rows as u64).map(ObjectId).collect(),
        columns,
        DecisionColumn::new("d", decision),
    )?;
    let x = roughcore::select_target_set(&table, &[table.decision().code_of("pos").unwrap()])?;

    let start = Instant::now();
    let p = Partition::from_table(&table, &table.column_names())?;
    println!("{rows} x {width}: {} classes in {:?}", p.len(), start.elapsed());

    let start = Instant::now();
    let core = compute_core(&table, &x, 100)?;
    println!("core analysis in {:?}, boundary size {}", start.elapsed(), core.boundary_full.len());
    for r in &core.reports {
        println!("  {:<4} nu {:>6}  mu {:.4}", r.attribute, r.nu, r.mu);
    }
    println!("tolerant core (nu > 100): {:?}", core.tolerant_core);
    Ok(())
}
