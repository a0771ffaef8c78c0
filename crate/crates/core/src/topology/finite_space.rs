//! Finite spaces given by their specialization preorder.
//!
//! On a finite set the coarse lower topology has exactly the up-sets as
//! closed sets: every up-set is the finite union of the principal up-sets
//! `{x}↑` of its points, and finite intersections of up-sets are up-sets.
//! Points are positions `0..len`; subsets are bitsets over positions.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::config;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteSpace {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

/// Outcome of an irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// `pair` has no common lower bound in the subset; the subset lies in
    /// `first ∪ second` but in neither alone.
    Reducible {
        pair: (usize, usize),
        first: FixedBitSet,
        second: FixedBitSet,
    },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SoberMethod {
    Direct,
    Criterion,
}

/// Why a space failed to be sober.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SoberWitness {
    /// An irreducible closed set without a unique generic point; `candidates`
    /// are its points whose closure is the whole set (none or several).
    NoGenericPoint {
        closed_set: Vec<usize>,
        candidates: Vec<usize>,
    },
    /// An ideal whose trace on the space is irreducible while the
    /// intersection of that trace lies outside the space.
    RadicalOutside {
        ideal: usize,
        trace: Vec<usize>,
        radical: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SobernessVerdict {
    pub sober: bool,
    pub method: SoberMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SoberWitness>,
}

/// The individual conditions of Hochster's characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralCertificate {
    pub t0: bool,
    pub quasi_compact: bool,
    pub sober: bool,
    pub qc_open_basis_closed_under_intersection: bool,
}

impl SpectralCertificate {
    pub fn spectral(&self) -> bool {
        self.t0 && self.quasi_compact && self.sober && self.qc_open_basis_closed_under_intersection
    }
}

pub(crate) fn bitset(len: usize, items: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(len);
    for i in items {
        b.insert(i);
    }
    b
}

impl FiniteSpace {
    /// Space from a relation `a ≤ b`; the reflexive-transitive closure is taken.
    pub fn from_relation(labels: Vec<String>, relation: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut up: Vec<FixedBitSet> = (0..n).map(|i| bitset(n, [i])).collect();
        for &(a, b) in relation {
            if a >= n || b >= n {
                return Err(Error::Precondition(format!("relation pair ({a}, {b}) out of range")));
            }
            up[a].insert(b);
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    let row = up[k].clone();
                    up[i].union_with(&row);
                }
            }
        }
        Ok(Self::from_up_sets(labels, up))
    }

    /// `up[i]` must already be reflexive and transitive.
    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<FixedBitSet>) -> Self {
        let n = up.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        FiniteSpace { labels, up, down }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `i ≤ j` in the specialization order, i.e. `j ∈ closure{i}`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn up(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    pub fn down(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    pub fn full(&self) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.len());
        b.insert_range(..);
        b
    }

    pub fn closure(&self, subset: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for i in subset.ones() {
            out.union_with(&self.up[i]);
        }
        out
    }

    pub fn is_closed(&self, subset: &FixedBitSet) -> bool {
        subset.ones().all(|i| self.up[i].is_subset(subset))
    }

    pub fn is_t0(&self) -> bool {
        (0..self.len()).all(|i| {
            let mut both = self.up[i].clone();
            both.intersect_with(&self.down[i]);
            both.count_ones(..) == 1
        })
    }

    /// Every closed set (up-set), capped by the configured closed-set cap.
    pub fn all_closed_sets(&self) -> Result<Vec<FixedBitSet>> {
        self.all_closed_sets_with_cap(config::closed_set_cap())
    }

    /// Enumerates up-sets by deciding points in index order: including a
    /// point forces its up-set in, excluding it forces its down-set out, so
    /// every branch ends in a distinct up-set.
    pub fn all_closed_sets_with_cap(&self, cap: usize) -> Result<Vec<FixedBitSet>> {
        self.closed_sets_within(&self.full(), cap)
    }

    /// Up-sets of the subspace `within` (traces of closed sets on it).
    pub(crate) fn closed_sets_within(&self, within: &FixedBitSet, cap: usize) -> Result<Vec<FixedBitSet>> {
        let n = self.len();
        let mut out = Vec::new();
        let mut excluded = FixedBitSet::with_capacity(n);
        excluded.insert_range(..);
        excluded.difference_with(within);
        let included = FixedBitSet::with_capacity(n);
        self.enumerate_up_sets(within, included, excluded, cap, &mut out)?;
        Ok(out)
    }

    fn enumerate_up_sets(
        &self,
        within: &FixedBitSet,
        included: FixedBitSet,
        excluded: FixedBitSet,
        cap: usize,
        out: &mut Vec<FixedBitSet>,
    ) -> Result<()> {
        let next = (0..self.len()).find(|&i| !included.contains(i) && !excluded.contains(i));
        let Some(x) = next else {
            if out.len() >= cap {
                return Err(Error::ResourceCap {
                    what: "closed-set count",
                    cap,
                    env_var: config::CLOSED_SET_CAP_ENV,
                });
            }
            out.push(included);
            return Ok(());
        };
        let mut ex = excluded.clone();
        let mut down = self.down[x].clone();
        down.intersect_with(within);
        ex.union_with(&down);
        self.enumerate_up_sets(within, included.clone(), ex, cap, out)?;
        let mut inc = included;
        let mut up = self.up[x].clone();
        up.intersect_with(within);
        inc.union_with(&up);
        self.enumerate_up_sets(within, inc, excluded, cap, out)
    }

    /// Irreducibility by the pairwise lower-bound test: every two points of
    /// the subset have a common lower bound inside it.
    pub fn is_irreducible(&self, subset: &FixedBitSet) -> Result<Irreducibility> {
        if subset.is_clear() {
            return Err(Error::Precondition("irreducibility of the empty set".into()));
        }
        let points: Vec<usize> = subset.ones().collect();
        for (a, &x) in points.iter().enumerate() {
            for &y in &points[a + 1..] {
                let mut common = self.down[x].clone();
                common.intersect_with(&self.down[y]);
                if common.is_disjoint(subset) {
                    return Ok(self.separating_cover(x, y));
                }
            }
        }
        Ok(Irreducibility::Irreducible)
    }

    /// The closed sets `X \ ↓x` and `X \ ↓y`.
    fn separating_cover(&self, x: usize, y: usize) -> Irreducibility {
        let mut first = self.full();
        first.difference_with(&self.down[x]);
        let mut second = self.full();
        second.difference_with(&self.down[y]);
        Irreducibility::Reducible {
            pair: (x, y),
            first,
            second,
        }
    }

    /// Irreducibility straight from the definition: no two closed sets cover
    /// the subset without one of them containing it. Only the trace of a
    /// closed set on the subset matters, so the first set ranges over the
    /// closed sets of the subspace and the second is the closure of what the
    /// first misses.
    pub fn is_irreducible_by_covers(&self, subset: &FixedBitSet, cap: usize) -> Result<Irreducibility> {
        if subset.is_clear() {
            return Err(Error::Precondition("irreducibility of the empty set".into()));
        }
        for trace in self.closed_sets_within(subset, cap)? {
            if &trace == subset {
                continue;
            }
            let first = self.closure(&trace);
            let mut rest = subset.clone();
            rest.difference_with(&first);
            let second = self.closure(&rest);
            if !subset.is_subset(&second) {
                let x = rest.minimum().expect("trace misses a point");
                let y = subset
                    .ones()
                    .find(|&y| !second.contains(y))
                    .expect("second misses a point");
                return Ok(Irreducibility::Reducible {
                    pair: (x, y),
                    first,
                    second,
                });
            }
        }
        Ok(Irreducibility::Irreducible)
    }

    /// Points of `closed` whose closure is exactly `closed`.
    pub fn generic_candidates(&self, closed: &FixedBitSet) -> Vec<usize> {
        closed.ones().filter(|&p| &self.up[p] == closed).collect()
    }

    /// The unique generic point of a closed set, if there is exactly one.
    pub fn generic_point(&self, closed: &FixedBitSet) -> Option<usize> {
        match self.generic_candidates(closed).as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    /// Sober iff every irreducible closed set has a unique generic point.
    /// The witness is the failing set that is least by (size, members).
    pub fn is_sober_direct(&self) -> Result<SobernessVerdict> {
        let mut worst: Option<FixedBitSet> = None;
        for closed in self.all_closed_sets()? {
            if closed.is_clear() || !self.is_irreducible(&closed)?.is_irreducible() {
                continue;
            }
            if self.generic_point(&closed).is_none() {
                let better = worst.as_ref().map_or(true, |w| {
                    (closed.count_ones(..), closed.ones().collect::<Vec<_>>())
                        < (w.count_ones(..), w.ones().collect::<Vec<_>>())
                });
                if better {
                    worst = Some(closed);
                }
            }
        }
        Ok(SobernessVerdict {
            sober: worst.is_none(),
            method: SoberMethod::Direct,
            witness: worst.map(|c| SoberWitness::NoGenericPoint {
                candidates: self.generic_candidates(&c),
                closed_set: c.ones().collect(),
            }),
        })
    }

    /// Points with nothing strictly above them.
    pub fn max_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.up[i].is_subset(&self.down[i]))
            .collect()
    }

    /// Maximal chains of a T0 space, as position lists from bottom to top.
    /// Stops with a resource error after `cap` chains.
    pub fn maximal_chains(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.len();
        let covers: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                self.up[i]
                    .ones()
                    .filter(|&j| j != i)
                    .filter(|&j| {
                        !self.up[i]
                            .ones()
                            .any(|k| k != i && k != j && self.up[k].contains(j))
                    })
                    .collect()
            })
            .collect();
        let minimal: Vec<usize> = (0..n)
            .filter(|&i| self.down[i].count_ones(..) == 1)
            .collect();
        let mut chains = Vec::new();
        let mut stack: Vec<Vec<usize>> = minimal.into_iter().rev().map(|m| vec![m]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            if covers[last].is_empty() {
                if chains.len() >= cap {
                    return Err(Error::ResourceCap {
                        what: "maximal-chain count",
                        cap,
                        env_var: config::CLOSED_SET_CAP_ENV,
                    });
                }
                chains.push(chain);
                continue;
            }
            for &c in covers[last].iter().rev() {
                let mut next = chain.clone();
                next.push(c);
                stack.push(next);
            }
        }
        Ok(chains)
    }

    /// Points above every point of `chain`.
    pub fn upper_bounds(&self, chain: &[usize]) -> FixedBitSet {
        let mut b = self.full();
        for &c in chain {
            b.intersect_with(&self.up[c]);
        }
        b
    }

    /// For a finite space: every open set is quasi-compact, the open sets form
    /// a basis closed under intersection, so spectral reduces to T0 + sober.
    pub fn spectral_certificate(&self) -> Result<SpectralCertificate> {
        let sober = self.is_sober_direct()?.sober;
        Ok(SpectralCertificate {
            t0: self.is_t0(),
            quasi_compact: true,
            sober,
            qc_open_basis_closed_under_intersection: true,
        })
    }

    /// Re-checks a direct-method witness from scratch.
    pub fn validate_witness(&self, witness: &SoberWitness) -> bool {
        match witness {
            SoberWitness::NoGenericPoint {
                closed_set,
                candidates,
            } => {
                let c = bitset(self.len(), closed_set.iter().copied());
                !c.is_clear()
                    && self.is_closed(&c)
                    && self.is_irreducible(&c).map_or(false, |r| r.is_irreducible())
                    && self.generic_point(&c).is_none()
                    && &self.generic_candidates(&c) == candidates
            }
            SoberWitness::RadicalOutside { .. } => false,
        }
    }
}
