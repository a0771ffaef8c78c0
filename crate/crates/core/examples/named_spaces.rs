//! The sixteen named ideal spaces of a ring, with their properties.
//!
//!     cargo run --example named_spaces -- "Z/2 x Z/9"

use idealtop::families::{build_space, family_inclusions_report, Family};
use idealtop::ideal::{classify, enumerate_ideals};
use idealtop::ring::build_ring;

fn main() -> idealtop::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "Z/2 x Z/9".into());
    let ring = build_ring(&text.parse()?)?;
    let lat = enumerate_ideals(&ring)?;
    let cls = classify(&lat);
    for f in Family::ALL {
        let space = build_space(&lat, &cls, f);
        let members: Vec<String> = space.members().iter().map(|&i| lat.label(i)).collect();
        let irreducible = match space.is_empty() {
            true => "-".to_string(),
            false => space.is_irreducible(space.members())?.irreducible.to_string(),
        };
        let (spectral, _) = space.is_spectral_finite()?;
        println!(
            "{:<5} irreducible {:<5} spectral {:<5} {{{}}}",
            f.name(),
            irreducible,
            spectral,
            members.join(", ")
        );
    }
    println!("inclusions hold: {}", family_inclusions_report(&cls).all_hold());
    Ok(())
}
