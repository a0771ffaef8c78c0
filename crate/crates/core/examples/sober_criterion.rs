//! Soberness decided twice: by generic points of irreducible closed sets,
//! and by the X-radical criterion over all ideals of the ring.
//!
//!     cargo run --example sober_criterion

use idealtop::families::{build_space, Family};
use idealtop::ideal::{classify, enumerate_ideals};
use idealtop::ring::build_ring;
use idealtop::topology::FiniteSpace;

fn main() -> idealtop::Result<()> {
    for text in ["Z/12", "Z/2 x Z/4", "GF(3)[x]/(x^3)"] {
        let ring = build_ring(&text.parse()?)?;
        let lat = enumerate_ideals(&ring)?;
        let cls = classify(&lat);
        for f in [Family::Spec, Family::Prm, Family::Irr, Family::Idl] {
            let space = build_space(&lat, &cls, f);
            let direct = space.is_sober_direct()?;
            let criterion = space.is_sober_criterion();
            println!("{text:<16} {:<5} direct {:<5} criterion {}", f.name(), direct.sober, criterion.sober);
        }
        let spec = build_space(&lat, &cls, Family::Spec);
        let r = spec.x_radical(lat.bottom());
        println!("  Spec-radical of (0) = {}", lat.label(r.ideal));
    }

    // Two equivalent points: the only irreducible closed set has two
    // generic points.
    let pair = FiniteSpace::from_relation(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)])?;
    let v = pair.is_sober_direct()?;
    println!("indiscrete pair: sober {}, witness {:?}", v.sober, v.witness);
    Ok(())
}
