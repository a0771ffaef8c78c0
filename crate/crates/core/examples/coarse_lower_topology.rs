//! Closed sets, closures, irreducibility and generic points.
//!
//!     cargo run --example coarse_lower_topology

use idealtop::families::{build_space, Family};
use idealtop::ideal::{classify, enumerate_ideals};
use idealtop::ring::build_ring;

fn main() -> idealtop::Result<()> {
    let ring = build_ring(&"Z/12".parse()?)?;
    let lat = enumerate_ideals(&ring)?;
    let cls = classify(&lat);
    let prm = build_space(&lat, &cls, Family::Prm);
    let show = |idx: &[usize]| idx.iter().map(|&i| lat.label(i)).collect::<Vec<_>>().join(", ");

    println!("Prm(Z/12) = {{{}}}", show(prm.members()));
    for c in prm.all_closed_sets()? {
        let generic = match c.members.is_empty() {
            true => "-".to_string(),
            false => prm.generic_point(&c)?.map_or("none".into(), |g| lat.label(g)),
        };
        println!("  closed {{{}}}  generic point: {generic}", show(&c.members));
    }

    let v = prm.is_irreducible(prm.members())?;
    if let (Some((a, b)), Some((v1, v2))) = (v.pair, v.cover) {
        println!(
            "not irreducible: {} and {} have no common lower bound; covered by {{{}}} and {{{}}}",
            lat.label(a),
            lat.label(b),
            show(&v1.members),
            show(&v2.members)
        );
    }
    let four = (0..lat.len()).find(|&i| lat.label(i) == "(4)").unwrap();
    println!("closure of (4): {{{}}}", show(&prm.closure(&[four])?.members));
    Ok(())
}
