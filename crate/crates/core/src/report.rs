//! Analysis reports and the JSON lattice export.
//!
//! JSON is written through `serde_json::Value`, whose maps keep keys
//! sorted, so equal reports serialize to equal bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::families::{build_space, family_inclusions_report, Family};
use crate::harness::SCHEMA_VERSION;
use crate::ideal::{classify, enumerate_ideals, krull_dimension, IdealClassification, IdealLattice};
use crate::ring::{build_ring, RingSpec};
use crate::topology::{QuasiCompactnessReport, SobernessVerdict, SpectralCertificate, IrreducibilityVerdict};

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealRecord {
    pub index: usize,
    pub label: String,
    pub generators: Vec<String>,
    pub size: usize,
    pub members: Vec<String>,
    pub radical: usize,
    pub flags: crate::ideal::IdealFlags,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeExport {
    pub ring: String,
    pub ring_size: usize,
    pub ideals: Vec<IdealRecord>,
    /// Pairs `(i, j)` with `I_i ⊊ I_j`, sorted.
    pub containment: Vec<(usize, usize)>,
}

pub fn lattice_export(lat: &IdealLattice, cls: &IdealClassification) -> LatticeExport {
    let ring = lat.ring();
    let ideals = (0..lat.len())
        .map(|i| IdealRecord {
            index: i,
            label: lat.label(i),
            generators: lat.generators(i).iter().map(|&g| ring.decode(g).to_string()).collect(),
            size: lat.ideal(i).len(),
            members: lat.ideal(i).elements().iter().map(|&x| ring.decode(x).to_string()).collect(),
            radical: cls.radical(i),
            flags: *cls.flags(i),
        })
        .collect();
    let containment = (0..lat.len())
        .flat_map(|i| lat.up_set(i).ones().filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    LatticeExport {
        ring: ring.name(),
        ring_size: ring.size(),
        ideals,
        containment,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyAnalysis {
    pub family: Family,
    pub members: Vec<usize>,
    pub labels: Vec<String>,
    /// Absent for the empty space, where irreducibility is undefined.
    pub irreducible: Option<IrreducibilityVerdict>,
    pub sober_direct: SobernessVerdict,
    pub sober_criterion: SobernessVerdict,
    pub spectral: bool,
    pub certificate: SpectralCertificate,
    pub max_elements: Vec<usize>,
    pub quasi_compactness: QuasiCompactnessReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub ring: String,
    pub spec: RingSpec,
    pub ideal_count: usize,
    pub krull_dimension: usize,
    pub local: bool,
    pub lattice: LatticeExport,
    pub families: Vec<FamilyAnalysis>,
    pub inclusions: crate::families::FamilyInclusions,
}

pub fn analyze(spec: &RingSpec, families: &[Family]) -> Result<AnalysisReport> {
    let ring = build_ring(spec)?;
    let lat = enumerate_ideals(&ring)?;
    let cls = classify(&lat);
    let mut out = Vec::with_capacity(families.len());
    for &f in families {
        let space = build_space(&lat, &cls, f);
        let irreducible = if space.is_empty() {
            None
        } else {
            Some(space.is_irreducible(space.members())?)
        };
        let (spectral, certificate) = space.is_spectral_finite()?;
        out.push(FamilyAnalysis {
            family: f,
            members: space.members().to_vec(),
            labels: space.members().iter().map(|&i| lat.label(i)).collect(),
            irreducible,
            sober_direct: space.is_sober_direct()?,
            sober_criterion: space.is_sober_criterion(),
            spectral,
            certificate,
            max_elements: space.max_elements(),
            quasi_compactness: space.quasi_compactness_report()?,
        });
    }
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        ring: spec.to_string(),
        spec: spec.clone(),
        ideal_count: lat.len(),
        krull_dimension: krull_dimension(&lat, &cls),
        local: lat.is_local(),
        inclusions: family_inclusions_report(&cls),
        lattice: lattice_export(&lat, &cls),
        families: out,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> Result<String> {
        to_canonical_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ring {} (size {})", self.ring, self.lattice.ring_size);
        let _ = writeln!(
            s,
            "{} ideals, Krull dimension {}, {}",
            self.ideal_count,
            self.krull_dimension,
            if self.local { "local" } else { "not local" }
        );
        for rec in &self.lattice.ideals {
            let _ = writeln!(s, "  #{:<3} {:<16} size {}", rec.index, rec.label, rec.size);
        }
        for f in &self.families {
            let members = if f.labels.is_empty() {
                "∅".to_string()
            } else {
                format!("{{{}}}", f.labels.join(", "))
            };
            let _ = writeln!(s, "{} = {}", f.family.name(), members);
            let irr = match &f.irreducible {
                None => "n/a".to_string(),
                Some(v) if v.irreducible => "yes".to_string(),
                Some(v) => {
                    let (a, b) = v.pair.expect("reducible verdicts carry a pair");
                    format!("no, {} and {} have no common lower bound", self.label(a), self.label(b))
                }
            };
            let _ = writeln!(s, "  irreducible: {irr}");
            let _ = writeln!(
                s,
                "  sober: {} (criterion: {}), spectral: {}, quasi-compact: {}",
                yes(f.sober_direct.sober),
                yes(f.sober_criterion.sober),
                yes(f.spectral),
                yes(f.quasi_compactness.qc)
            );
        }
        s
    }

    fn label(&self, i: usize) -> &str {
        &self.lattice.ideals[i].label
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `{family tag: [member labels]}` for a quick look at one ring.
pub fn family_members(lat: &IdealLattice, cls: &IdealClassification) -> Value {
    let map: BTreeMap<&str, Vec<String>> = Family::ALL
        .iter()
        .map(|f| (f.tag(), f.members(cls).iter().map(|&i| lat.label(i)).collect()))
        .collect();
    json!(map)
}
