//! Ideals of finite rings: element-level constructions, the full ideal
//! lattice, and classification into the named families.

mod classify;
mod lattice;

use std::cmp::Ordering;

use fixedbitset::FixedBitSet;

use crate::ring::{Elem, FiniteRing};

pub use classify::{
    classify, ideal_product, krull_dimension, radical_of, IdealClassification, IdealFlags,
};
pub use lattice::{enumerate_ideals, enumerate_ideals_with_cap, IdealLattice};

/// An ideal, stored as the set of its member element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    members: FixedBitSet,
}

impl Ideal {
    pub(crate) fn from_members(members: FixedBitSet) -> Self {
        Ideal { members }
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn into_members(self) -> FixedBitSet {
        self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.members.ones().collect()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Canonical order: by cardinality, then lexicographically by member list.
    pub fn canonical_cmp(&self, other: &Ideal) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

/// `{rx : r ∈ R}`, the smallest ideal containing `x`.
pub fn principal_ideal(ring: &FiniteRing, x: Elem) -> Ideal {
    let mut members = FixedBitSet::with_capacity(ring.size());
    for r in ring.elements() {
        members.insert(ring.mul(r, x));
    }
    Ideal { members }
}

/// Sum of the principal ideals of `gens`; `(0)` for an empty list.
pub fn ideal_from_generators(ring: &FiniteRing, gens: &[Elem]) -> Ideal {
    let mut members = FixedBitSet::with_capacity(ring.size());
    members.insert(ring.zero());
    for &g in gens {
        extend_by_principal(ring, &mut members, g);
    }
    Ideal { members }
}

/// Extends the additive subgroup `span` by the cyclic group generated by `g`.
pub(crate) fn add_span(ring: &FiniteRing, span: &mut FixedBitSet, g: Elem) {
    if span.contains(g) {
        return;
    }
    let base: Vec<Elem> = span.ones().collect();
    let mut k = g;
    // the cosets base + k·g repeat as soon as k·g falls back into the span
    while !span.contains(k) {
        for &h in &base {
            span.insert(ring.add(h, k));
        }
        k = ring.add(k, g);
    }
}

/// Replaces the ideal `span` by `span + Rx`.
pub(crate) fn extend_by_principal(ring: &FiniteRing, span: &mut FixedBitSet, x: Elem) {
    if span.contains(x) {
        return;
    }
    for r in ring.elements() {
        add_span(ring, span, ring.mul(r, x));
    }
}

/// Element-level ideal sum `I + J`.
pub(crate) fn sum_members(ring: &FiniteRing, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut out = a.clone();
    for y in b.ones() {
        add_span(ring, &mut out, y);
    }
    out
}

/// Whether `members` contains zero, is closed under addition and absorbs
/// multiplication.
pub fn is_ideal(ring: &FiniteRing, members: &FixedBitSet) -> bool {
    if !members.contains(ring.zero()) {
        return false;
    }
    let elems: Vec<Elem> = members.ones().collect();
    elems
        .iter()
        .all(|&a| elems.iter().all(|&b| members.contains(ring.add(a, b))))
        && elems
            .iter()
            .all(|&a| ring.elements().all(|r| members.contains(ring.mul(r, a))))
}

/// A small generating set: repeatedly adds the member that enlarges the
/// current span the most, ties broken by least index.
pub fn greedy_generators(ring: &FiniteRing, members: &FixedBitSet) -> Vec<Elem> {
    let mut span = FixedBitSet::with_capacity(ring.size());
    span.insert(ring.zero());
    let mut gens = Vec::new();
    while span.count_ones(..) < members.count_ones(..) {
        let mut best: Option<(usize, Elem, FixedBitSet)> = None;
        for x in members.ones().filter(|&x| !span.contains(x)) {
            let mut candidate = span.clone();
            extend_by_principal(ring, &mut candidate, x);
            let size = candidate.count_ones(..);
            if best.as_ref().map_or(true, |(s, _, _)| size > *s) {
                best = Some((size, x, candidate));
            }
        }
        let (_, x, next) = best.expect("span is strictly inside the ideal");
        gens.push(x);
        span = next;
    }
    gens
}

/// Human-readable `(g1, g2, ...)` form of an ideal.
pub fn describe(ring: &FiniteRing, members: &FixedBitSet) -> String {
    let gens = greedy_generators(ring, members);
    if gens.is_empty() {
        return "(0)".to_string();
    }
    let parts: Vec<String> = gens.iter().map(|&g| ring.decode(g).to_string()).collect();
    format!("({})", parts.join(", "))
}
