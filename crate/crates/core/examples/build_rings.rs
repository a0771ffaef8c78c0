//! Building rings from text specs and doing arithmetic in them.
//!
//!     cargo run --example build_rings

use idealtop::ring::{build_ring, localize_at_maximal, quotient_ring, RingSpec};
use idealtop::ideal::ideal_from_generators;

fn main() -> idealtop::Result<()> {
    for text in ["Z/12", "GF(2)[x]/(x^2+x+1)", "Z/4 x Z/3", "Z/8 / (4)"] {
        let spec: RingSpec = text.parse()?;
        let ring = build_ring(&spec)?;
        let units = ring.elements().filter(|&x| ring.is_unit(x)).count();
        println!("{spec}: {} elements, {units} units", ring.size());
    }

    let r = build_ring(&"GF(2)[x]/(x^2)".parse()?)?;
    let x = r.encode(&"x".parse()?)?;
    println!("in {}: x*x = {}", r.name(), r.decode(r.mul(x, x)));

    let z12 = build_ring(&RingSpec::zmod(12))?;
    let two = ideal_from_generators(&z12, &[2]);
    let (q, proj) = quotient_ring(&z12, &two);
    println!("Z/12 / (2) has {} elements; 7 maps to {}", q.size(), q.decode(proj.apply(7)));
    let (local, _) = localize_at_maximal(&z12, &two)?;
    println!("Z/12 localized at (2) has {} elements", local.size());

    // JSON mirror of the text grammar
    println!("{}", serde_json::to_string(&"Z/4 x Z/3".parse::<RingSpec>()?)?);
    Ok(())
}
