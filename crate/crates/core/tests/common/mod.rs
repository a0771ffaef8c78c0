#![allow(dead_code)]

use idealtop::harness::{generate_corpus, CorpusSpec};
use idealtop::ideal::{classify, enumerate_ideals, IdealClassification, IdealLattice};
use idealtop::ring::{build_ring, FiniteRing, RingSpec};

pub fn ring(text: &str) -> FiniteRing {
    build_ring(&text.parse().unwrap()).unwrap()
}

pub fn lattice(text: &str) -> (IdealLattice, IdealClassification) {
    let lat = enumerate_ideals(&ring(text)).unwrap();
    let cls = classify(&lat);
    (lat, cls)
}

/// Default-corpus rings of at most `max_size` elements.
pub fn small_corpus(max_size: u64) -> Vec<RingSpec> {
    generate_corpus(&CorpusSpec::default())
        .unwrap()
        .into_iter()
        .filter(|r| r.ambient_size().map_or(false, |s| s <= max_size))
        .collect()
}

pub fn index_of_label(lat: &IdealLattice, label: &str) -> usize {
    (0..lat.len())
        .find(|&i| lat.label(i) == label)
        .unwrap_or_else(|| panic!("no ideal labelled {label}"))
}
