//! Standard-deviation binning of two vital-sign columns under both stdev
//! conventions, with the per-bin trace.
//!
//! cargo run --example discretize_trace

use roughcore::discretize::{discretize_table, DiscretizationConfig, StdevMode};
use roughcore::{load_csv, IngestConfig};

const TABLE: &str = "\
Patient,Temperature,Hemoglobin,Results
1,39.3,125,No
2,39.1,116,No
3,39.2,132,No
4,37.1,139,Yes
5,37.3,130,Yes
6,37.8,121,Yes
7,36.7,130,No
";

fn main() -> roughcore::Result<()> {
    let table = load_csv(TABLE.as_bytes(), &IngestConfig::default().with_id_column("Patient"))?;
    for mode in [StdevMode::Population, StdevMode::Sample] {
        let config = DiscretizationConfig { stdev_mode: mode, ..Default::default() };
        let (discrete, traces) = discretize_table(&table, &config)?;
        println!("== {mode}");
        for (column, trace) in discrete.columns().iter().zip(&traces) {
            println!("{:<12} stdev {:.4}  labels {:?}", trace.attribute, trace.stdev, column.discrete_codes()?);
            for bin in &trace.bins {
                println!("    label {} cut {:>8} members {}", bin.label, bin.cut, bin.members);
            }
        }
    }
    Ok(())
}
