//! Runs the checks on a reduced corpus and prints the summary table.
//!
//!     cargo run --release --example verify_corpus

use idealtop::harness::{run, CheckId, CorpusSpec};

fn main() -> idealtop::Result<()> {
    let spec = CorpusSpec {
        zmod_max: 32,
        poly_p_max: 3,
        poly_deg_max: 2,
        max_ring_size: 64,
        z_bound: 1000,
        noeth_samples: 100,
        ..CorpusSpec::default()
    };
    let result = run(&spec, &CheckId::ALL)?;
    print!("{}", result.summary_table());
    for r in &result.reports {
        for v in r.verdicts.iter().filter(|v| v.detail.get("error").is_some()) {
            println!("{} {}: {}", r.check, v.ring, v.detail["error"]);
        }
    }
    Ok(())
}
