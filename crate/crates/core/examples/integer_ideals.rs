//! Ideals of ℤ: Reg(ℤ) is irreducible but not sober, while Prm(ℤ) passes
//! the sober criterion on every trace up to a bound.
//!
//!     cargo run --release --example integer_ideals -- 2000

use idealtop::zsym::{
    prm_z_sober_bounded, reg_z_irreducibility_witness, reg_z_not_sober_certificate, z_classify, z_upset, ZIdeal,
};

fn main() -> idealtop::Result<()> {
    let bound: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);

    for n in [0, 8, 12, 30] {
        println!("{n}Z: {:?}", z_classify(ZIdeal(n))?);
    }
    let ups: Vec<u64> = z_upset(ZIdeal(12))?.iter().map(|z| z.0).collect();
    println!("ideals containing 12Z: {ups:?}");
    println!("6Z and 10Z both miss {}Z", reg_z_irreducibility_witness(6, 10));

    let reg = reg_z_not_sober_certificate(bound)?;
    println!(
        "Reg(Z): {} pairs, witness primes {:?}; certificate valid: {}",
        reg.irreducible.pairs_checked,
        reg.irreducible.histogram.keys().collect::<Vec<_>>(),
        reg.validate()
    );
    let prm = prm_z_sober_bounded(bound)?;
    println!(
        "Prm(Z): {} of {} traces irreducible, sober up to {bound}: {}",
        prm.irreducible_traces, prm.traces_checked, prm.sober_bounded
    );
    Ok(())
}
