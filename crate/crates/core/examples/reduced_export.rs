//! Keeps only the core attributes of a table, with their original values,
//! and writes the result as CSV.
//!
//! cargo run --example reduced_export

use roughcore::{
    compute_core, export_reduced, load_csv, prepare, select_target_set, write_csv, DiscretizationConfig, IngestConfig,
    Preparation,
};

const TABLE: &str = "\
id,age,dose,weight,noise,outcome
1,34,2.5,71.0,0.3,ok
2,51,1.0,88.5,0.9,fail
3,29,2.0,64.2,0.1,ok
4,62,0.5,90.1,0.4,fail
5,45,1.5,77.7,0.8,ok
6,38,1.0,69.0,0.2,fail
7,57,2.5,81.3,0.7,ok
8,41,0.5,73.9,0.6,fail
";

fn main() -> roughcore::Result<()> {
    let table = load_csv(TABLE.as_bytes(), &IngestConfig::default().with_id_column("id"))?;
    let prepared = prepare(table, Preparation::Discretize(DiscretizationConfig::default()))?;
    let ok = prepared.discrete.decision().code_of("ok").expect("ok is a decision value");
    let x = select_target_set(&prepared.discrete, &[ok])?;

    let core = compute_core(&prepared.discrete, &x, 0)?;
    eprintln!("nu: {:?}", core.nu_values());
    eprintln!("core: {:?}", core.tolerant_core);
    match export_reduced(&prepared.original, &core) {
        Ok(reduced) => write_csv(&reduced, std::io::stdout().lock())?,
        Err(e) => eprintln!("nothing to export: {e}"),
    }
    Ok(())
}
