//! Spaces that must come out non-sober, and controls that must not.

use serde::Serialize;

use crate::error::Result;
use crate::topology::{FiniteSpace, SoberWitness};
use crate::zsym::{reg_z_not_sober_certificate, ZIdeal};

pub struct Fixture {
    pub name: &'static str,
    pub space: FiniteSpace,
    pub expect_sober: bool,
}

fn fixture(name: &'static str, n: usize, relation: &[(usize, usize)], expect_sober: bool) -> Fixture {
    let labels = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    Fixture {
        name,
        space: FiniteSpace::from_relation(labels, relation).expect("fixture relation in range"),
        expect_sober,
    }
}

/// A finite space whose specialization order is a partial order is always
/// sober, so the non-sober fixtures are preorders with two equivalent
/// points: the irreducible closed set they span has two generic points.
pub fn finite_fixtures() -> Vec<Fixture> {
    vec![
        fixture("indiscrete-pair", 2, &[(0, 1), (1, 0)], false),
        fixture("v-with-doubled-bottom", 4, &[(0, 1), (1, 0), (0, 2), (0, 3)], false),
        fixture("chain-under-equivalent-pair", 4, &[(0, 1), (1, 2), (2, 3), (3, 2)], false),
        fixture("doubled-antichain", 4, &[(0, 1), (1, 0), (2, 3), (3, 2)], false),
        fixture("v-poset", 3, &[(0, 1), (0, 2)], true),
        fixture("inverted-v-poset", 3, &[(0, 2), (1, 2)], true),
        fixture("three-chain", 3, &[(0, 1), (1, 2)], true),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub points: usize,
    pub t0: bool,
    pub expect_sober: bool,
    pub sober: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SoberWitness>,
    pub witness_valid: bool,
    /// Generic points of the witness set; empty means generic-point-free.
    pub generic_points: usize,
}

impl FixtureOutcome {
    pub fn as_designed(&self) -> bool {
        self.sober == self.expect_sober && (self.sober || self.witness_valid)
    }
}

pub fn run_finite_fixture(f: &Fixture) -> Result<FixtureOutcome> {
    let v = f.space.is_sober_direct()?;
    let witness_valid = v.witness.as_ref().map_or(false, |w| f.space.validate_witness(w));
    let generic_points = match &v.witness {
        Some(SoberWitness::NoGenericPoint { candidates, .. }) => candidates.len(),
        _ => 0,
    };
    Ok(FixtureOutcome {
        name: f.name.to_string(),
        points: f.space.len(),
        t0: f.space.is_t0(),
        expect_sober: f.expect_sober,
        sober: v.sober,
        witness: v.witness,
        witness_valid,
        generic_points,
    })
}

/// `Reg(ℤ)` as a closed set of itself: irreducible, and no member `nℤ` has
/// it as closure, because a prime `p ∤ n` gives `nℤ ⊄ pℤ`.
#[derive(Clone, Debug, Serialize)]
pub struct GenericPointFree {
    pub name: String,
    pub irreducible: bool,
    pub candidates_refuted: u64,
    pub candidate_bound: u64,
    pub witness_valid: bool,
    pub generic_points: usize,
}

pub fn reg_z_fixture(bound: u64) -> Result<GenericPointFree> {
    let cert = reg_z_not_sober_certificate(bound)?;
    let valid = cert.validate();
    // each refutation prime is itself a member with nℤ ⊄ pℤ
    let refuted = cert
        .refutations
        .iter()
        .filter(|r| !ZIdeal(r.candidate).is_subset(ZIdeal(r.prime)))
        .count() as u64;
    Ok(GenericPointFree {
        name: "reg-z".into(),
        irreducible: cert.irreducible.pairs_checked > 0,
        candidates_refuted: refuted,
        candidate_bound: bound,
        witness_valid: valid,
        generic_points: 0,
    })
}

impl GenericPointFree {
    pub fn as_designed(&self) -> bool {
        self.irreducible && self.witness_valid && self.candidates_refuted == self.candidate_bound - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_behave() {
        for f in finite_fixtures() {
            let o = run_finite_fixture(&f).unwrap();
            assert!(o.as_designed(), "{}", f.name);
            assert_eq!(o.t0, f.expect_sober, "{}", f.name);
        }
        assert!(reg_z_fixture(50).unwrap().as_designed());
    }
}
