//! Every ideal of a ring, its lattice operations and classification.
//!
//!     cargo run --example ideal_lattice -- "Z/2 x Z/4"

use idealtop::ideal::{classify, enumerate_ideals, krull_dimension};
use idealtop::ring::build_ring;

fn main() -> idealtop::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "Z/36".into());
    let ring = build_ring(&text.parse()?)?;
    let lat = enumerate_ideals(&ring)?;
    let cls = classify(&lat);

    println!("{} has {} ideals", ring.name(), lat.len());
    for i in 0..lat.len() {
        let f = cls.flags(i);
        let mut tags = Vec::new();
        for (on, tag) in [
            (f.maximal, "maximal"),
            (f.prime, "prime"),
            (f.primary, "primary"),
            (f.radical, "radical"),
            (f.irreducible, "irreducible"),
            (f.nilpotent, "nilpotent"),
            (f.minimal, "minimal"),
        ] {
            if on {
                tags.push(tag);
            }
        }
        println!(
            "  {:<10} size {:<4} radical {:<8} {}",
            lat.label(i),
            lat.ideal(i).len(),
            lat.label(cls.radical(i)),
            tags.join(" ")
        );
    }
    let (a, b) = (1, lat.len() - 2);
    println!(
        "{} + {} = {}, {} ∩ {} = {}",
        lat.label(a),
        lat.label(b),
        lat.label(lat.sum(a, b)),
        lat.label(a),
        lat.label(b),
        lat.label(lat.intersect(a, b))
    );
    println!("Krull dimension {}", krull_dimension(&lat, &cls));
    Ok(())
}
