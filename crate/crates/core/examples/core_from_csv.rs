//! Tolerant core of any CSV decision table.
//!
//! cargo run --example core_from_csv -- TABLE.csv TARGET THRESHOLD [ID_COLUMN|none] [sample|population]
//!
//! Without arguments it runs on the bundled vital-signs table.

use std::path::PathBuf;

use roughcore::{
    codes_for_tokens, compute_core, load_csv_path, prepare, select_target_set, DiscretizationConfig, IngestConfig,
    Preparation, StdevMode,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let path = args
        .first()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/table2_jarvinen.csv"));
    let token = args.get(1).map_or("Yes", String::as_str);
    let threshold: u64 = args.get(2).map_or(Ok(1), |s| s.parse())?;
    let mut ingest = IngestConfig::default();
    match args.get(3).map_or("Patient", String::as_str) {
        "none" => {}
        id => ingest = ingest.with_id_column(id),
    }
    let stdev_mode: StdevMode = args.get(4).map_or(Ok(StdevMode::Sample), |s| s.parse())?;

    let table = load_csv_path(&path, &ingest)?;
    let prepared = prepare(table, Preparation::Discretize(DiscretizationConfig { stdev_mode, ..Default::default() }))?;
    let codes = codes_for_tokens(&prepared.discrete, &[token])?;
    let x = select_target_set(&prepared.discrete, &codes)?;

    let core = compute_core(&prepared.discrete, &x, threshold)?;
    println!("{} objects, |X| = {}, boundary {}", prepared.discrete.len(), x.len(), core.boundary_full);
    for r in &core.reports {
        println!("{:<20} nu {:>4}  mu {:.4}", r.attribute, r.nu, r.mu);
    }
    println!("exact core    {:?}", core.exact_core);
    println!("tolerant core {:?} (nu > {threshold})", core.tolerant_core);
    println!("mu_RT         {:.4}", core.mu_rt);
    Ok(())
}
