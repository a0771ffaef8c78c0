use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use super::{principal_ideal, sum_members, Ideal};
use crate::config;
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// Operation tables are materialized up to this many ideals.
const TABLE_IDEAL_LIMIT: usize = 1024;

/// All ideals of a finite ring in canonical order (cardinality, then members),
/// with the containment order and the sum and intersection operations.
///
/// Index 0 is always `(0)` and the last index is `R`.
pub struct IdealLattice {
    ring: FiniteRing,
    ideals: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    principal_of: Vec<usize>,
    sum_table: Option<Vec<u32>>,
    meet_table: Option<Vec<u32>>,
    high_power: Vec<Elem>,
    regular_elements: FixedBitSet,
}

pub fn enumerate_ideals(ring: &FiniteRing) -> Result<IdealLattice> {
    enumerate_ideals_with_cap(ring, config::ideal_cap())
}

/// Every ideal of a finite ring is a finite sum of principal ideals, so the
/// lattice is the closure of the principal ideals under binary sum.
pub fn enumerate_ideals_with_cap(ring: &FiniteRing, cap: usize) -> Result<IdealLattice> {
    let over_cap = || Error::ResourceCap {
        what: "ideal count",
        cap,
        env_var: config::IDEAL_CAP_ENV,
    };
    let principal_members: Vec<FixedBitSet> = ring
        .elements()
        .map(|x| principal_ideal(ring, x).into_members())
        .collect();
    let mut principals: Vec<FixedBitSet> = Vec::new();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    for m in &principal_members {
        if seen.insert(m.clone()) {
            principals.push(m.clone());
        }
    }
    if seen.len() > cap {
        return Err(over_cap());
    }
    let mut queue = principals.clone();
    while let Some(current) = queue.pop() {
        for p in &principals {
            if p.is_subset(&current) {
                continue;
            }
            let s = sum_members(ring, &current, p);
            if !seen.contains(&s) {
                seen.insert(s.clone());
                if seen.len() > cap {
                    return Err(over_cap());
                }
                queue.push(s);
            }
        }
    }

    let mut ideals: Vec<Ideal> = seen.into_iter().map(Ideal::from_members).collect();
    ideals.sort_by(Ideal::canonical_cmp);
    let n = ideals.len();
    let index: HashMap<FixedBitSet, usize> = ideals
        .iter()
        .enumerate()
        .map(|(i, ideal)| (ideal.members.clone(), i))
        .collect();
    let mut up = vec![FixedBitSet::with_capacity(n); n];
    let mut down = vec![FixedBitSet::with_capacity(n); n];
    for i in 0..n {
        for j in i..n {
            if ideals[i].is_subset(&ideals[j]) {
                up[i].insert(j);
                down[j].insert(i);
            }
        }
    }
    let principal_of = principal_members.iter().map(|m| index[m]).collect();
    let size = ring.size() as u64;
    let high_power = ring.elements().map(|x| ring.pow(x, size)).collect();
    let mut regular_elements = FixedBitSet::with_capacity(ring.size());
    for x in ring.elements() {
        if ring.is_regular_element(x) {
            regular_elements.insert(x);
        }
    }

    let mut lattice = IdealLattice {
        ring: ring.clone(),
        ideals,
        index,
        up,
        down,
        principal_of,
        sum_table: None,
        meet_table: None,
        high_power,
        regular_elements,
    };
    if n <= TABLE_IDEAL_LIMIT {
        let mut sum = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                sum.push(lattice.join_by_order(i, j) as u32);
                meet.push(lattice.intersect_by_members(i, j) as u32);
            }
        }
        lattice.sum_table = Some(sum);
        lattice.meet_table = Some(meet);
    }
    Ok(lattice)
}

impl IdealLattice {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.ideals.len() - 1
    }

    /// Canonical index of an element set, if it is an ideal.
    pub fn index_of(&self, members: &FixedBitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Index of the principal ideal generated by `x`.
    pub fn principal_of(&self, x: Elem) -> usize {
        self.principal_of[x]
    }

    /// `I_i ⊆ I_j`.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Indices of the ideals containing `I_i` (including `i`).
    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    /// Indices of the ideals contained in `I_i` (including `i`).
    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    /// `I_i + I_j`.
    pub fn sum(&self, i: usize, j: usize) -> usize {
        match &self.sum_table {
            Some(t) => t[i * self.len() + j] as usize,
            None => self.join_by_order(i, j),
        }
    }

    /// `I_i ∩ I_j`.
    pub fn intersect(&self, i: usize, j: usize) -> usize {
        match &self.meet_table {
            Some(t) => t[i * self.len() + j] as usize,
            None => self.intersect_by_members(i, j),
        }
    }

    /// Intersection of a family; `R` for the empty family.
    pub fn intersect_all(&self, family: impl IntoIterator<Item = usize>) -> usize {
        family
            .into_iter()
            .fold(self.top(), |acc, i| self.intersect(acc, i))
    }

    /// Least common upper bound: with ideals sorted by cardinality the first
    /// common upper bound is the least one.
    fn join_by_order(&self, i: usize, j: usize) -> usize {
        let mut common = self.up[i].clone();
        common.intersect_with(&self.up[j]);
        common.minimum().expect("R bounds every pair")
    }

    fn intersect_by_members(&self, i: usize, j: usize) -> usize {
        let mut m = self.ideals[i].members.clone();
        m.intersect_with(&self.ideals[j].members);
        self.index[&m]
    }

    /// Element-level sum `{a + b}`, independent of the order-theoretic join.
    pub fn sum_by_elements(&self, i: usize, j: usize) -> usize {
        let s = sum_members(&self.ring, &self.ideals[i].members, &self.ideals[j].members);
        self.index[&s]
    }

    /// `x^|R|`; for every `k`, `x^k ∈ I` for some `k ≥ 1` iff `x^|R| ∈ I`.
    pub(crate) fn high_power(&self, x: Elem) -> Elem {
        self.high_power[x]
    }

    pub(crate) fn regular_elements(&self) -> &FixedBitSet {
        &self.regular_elements
    }

    /// Small generating set of `I_i`, chosen greedily by the size of the
    /// resulting span, ties broken by least element index.
    pub fn generators(&self, i: usize) -> Vec<Elem> {
        let mut current = self.bottom();
        let mut gens = Vec::new();
        while current != i {
            let (x, next) = self.ideals[i]
                .members
                .ones()
                .filter(|&x| !self.ideals[current].contains(x))
                .map(|x| (x, self.sum(current, self.principal_of[x])))
                .max_by(|(xa, a), (xb, b)| {
                    self.ideals[*a]
                        .len()
                        .cmp(&self.ideals[*b].len())
                        .then(xb.cmp(xa))
                })
                .expect("current is strictly inside the target");
            gens.push(x);
            current = next;
        }
        gens
    }

    /// `(g1, g2, ...)` label of `I_i`.
    pub fn label(&self, i: usize) -> String {
        let gens = self.generators(i);
        if gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = gens.iter().map(|&g| self.ring.decode(g).to_string()).collect();
        format!("({})", parts.join(", "))
    }

    /// Maximal ideals, by the order: proper with only `R` strictly above.
    pub fn maximal_ideals(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| i != self.top() && self.up[i].count_ones(..) == 2)
            .collect()
    }

    pub fn is_local(&self) -> bool {
        self.maximal_ideals().len() == 1
    }
}
