//! Subsets of an ideal lattice carrying the coarse lower topology.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::finite_space::{bitset, FiniteSpace, Irreducibility, SoberMethod, SoberWitness, SobernessVerdict, SpectralCertificate};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::ideal::IdealLattice;

/// A closed set of an ideal space, as sorted lattice indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClosedSet {
    pub members: Vec<usize>,
}

/// Irreducibility verdict in lattice indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    /// Two members without a common lower bound in the subset.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
    /// Closed sets covering the subset, neither containing it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<(ClosedSet, ClosedSet)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct XRadical {
    pub ideal: usize,
    /// No member of the space contains the ideal; `ideal` is then `R`.
    pub empty_family: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiCompactnessReport {
    pub qc: bool,
    pub everyone_below_max: bool,
    pub max_qc: bool,
    pub chain_bounds_ok: bool,
    /// `(x, m)`: member `x` lies below the maximal member `m`.
    pub witnesses: Vec<(usize, usize)>,
}

impl QuasiCompactnessReport {
    pub fn equivalence_holds(&self) -> bool {
        self.qc == (self.everyone_below_max && self.max_qc)
    }
}

/// An ideal space: a set of ideals of one ring, ordered by inclusion.
pub struct IdealSpace<'a> {
    lattice: &'a IdealLattice,
    members: Vec<usize>,
    member_set: FixedBitSet,
    position: Vec<Option<usize>>,
    label: Option<Family>,
    space: FiniteSpace,
}

impl<'a> IdealSpace<'a> {
    pub fn new(lattice: &'a IdealLattice, members: impl IntoIterator<Item = usize>, label: Option<Family>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let n = lattice.len();
        assert!(members.iter().all(|&i| i < n), "member outside the lattice");
        let mut position = vec![None; n];
        for (p, &i) in members.iter().enumerate() {
            position[i] = Some(p);
        }
        let up = members
            .iter()
            .map(|&i| bitset(members.len(), lattice.up_set(i).ones().filter_map(|j| position[j])))
            .collect();
        let labels = members.iter().map(|&i| lattice.label(i)).collect();
        IdealSpace {
            lattice,
            member_set: bitset(n, members.iter().copied()),
            members,
            position,
            label,
            space: FiniteSpace::from_up_sets(labels, up),
        }
    }

    pub fn whole(lattice: &'a IdealLattice) -> Self {
        Self::new(lattice, 0..lattice.len(), Some(Family::Idl))
    }

    pub fn lattice(&self) -> &'a IdealLattice {
        self.lattice
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.member_set.contains(i)
    }

    pub fn label(&self) -> Option<Family> {
        self.label
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The underlying finite space, with points numbered by position in
    /// [`Self::members`].
    pub fn finite_space(&self) -> &FiniteSpace {
        &self.space
    }

    fn to_positions(&self, subset: &[usize]) -> Result<FixedBitSet> {
        let mut b = FixedBitSet::with_capacity(self.len());
        for &i in subset {
            match self.position.get(i).copied().flatten() {
                Some(p) => b.insert(p),
                None => {
                    return Err(Error::Precondition(format!(
                        "ideal {} is not a member of the space",
                        self.describe(i)
                    )))
                }
            }
        }
        Ok(b)
    }

    fn to_indices(&self, positions: &FixedBitSet) -> Vec<usize> {
        positions.ones().map(|p| self.members[p]).collect()
    }

    fn describe(&self, i: usize) -> String {
        if i < self.lattice.len() {
            format!("#{i} {}", self.lattice.label(i))
        } else {
            format!("#{i}")
        }
    }

    /// `{I ∈ X : a ⊆ I}`; `a` need not belong to the space.
    pub fn subbasic_closed(&self, a: usize) -> ClosedSet {
        ClosedSet {
            members: self
                .lattice
                .up_set(a)
                .ones()
                .filter(|&i| self.contains(i))
                .collect(),
        }
    }

    pub fn all_closed_sets(&self) -> Result<Vec<ClosedSet>> {
        let mut sets: Vec<ClosedSet> = self
            .space
            .all_closed_sets()?
            .iter()
            .map(|c| ClosedSet {
                members: self.to_indices(c),
            })
            .collect();
        sets.sort_by(|a, b| (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members)));
        Ok(sets)
    }

    /// Closed sets generated from the subbasis `{a}↑ ∩ X` (`a` ranging over
    /// the whole lattice) by finite unions and intersections, with `∅` and
    /// `X` included. Exponential; meant for cross-checking small spaces.
    pub fn closed_sets_from_subbasis(&self) -> Vec<ClosedSet> {
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        let mut frontier: Vec<Vec<usize>> = vec![Vec::new(), self.members.clone()];
        for a in 0..self.lattice.len() {
            frontier.push(self.subbasic_closed(a).members);
        }
        let mut all: Vec<Vec<usize>> = Vec::new();
        while let Some(s) = frontier.pop() {
            if !found.insert(s.clone()) {
                continue;
            }
            for t in &all {
                let a: HashSet<usize> = s.iter().copied().collect();
                let b: HashSet<usize> = t.iter().copied().collect();
                let mut u: Vec<usize> = a.union(&b).copied().collect();
                let mut v: Vec<usize> = a.intersection(&b).copied().collect();
                u.sort_unstable();
                v.sort_unstable();
                frontier.push(u);
                frontier.push(v);
            }
            all.push(s);
        }
        let mut sets: Vec<ClosedSet> = all.into_iter().map(|members| ClosedSet { members }).collect();
        sets.sort_by(|a, b| (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members)));
        sets
    }

    pub fn closure(&self, subset: &[usize]) -> Result<ClosedSet> {
        let b = self.to_positions(subset)?;
        Ok(ClosedSet {
            members: self.to_indices(&self.space.closure(&b)),
        })
    }

    pub fn is_closed(&self, subset: &[usize]) -> Result<bool> {
        Ok(self.space.is_closed(&self.to_positions(subset)?))
    }

    fn verdict(&self, r: Irreducibility) -> IrreducibilityVerdict {
        match r {
            Irreducibility::Irreducible => IrreducibilityVerdict {
                irreducible: true,
                pair: None,
                cover: None,
            },
            Irreducibility::Reducible { pair, first, second } => IrreducibilityVerdict {
                irreducible: false,
                pair: Some((self.members[pair.0], self.members[pair.1])),
                cover: Some((
                    ClosedSet {
                        members: self.to_indices(&first),
                    },
                    ClosedSet {
                        members: self.to_indices(&second),
                    },
                )),
            },
        }
    }

    /// Pairwise lower-bound test inside the subspace.
    pub fn is_irreducible(&self, subset: &[usize]) -> Result<IrreducibilityVerdict> {
        let b = self.to_positions(subset)?;
        Ok(self.verdict(self.space.is_irreducible(&b)?))
    }

    /// Closed-cover definition.
    pub fn is_irreducible_by_covers(&self, subset: &[usize], cap: usize) -> Result<IrreducibilityVerdict> {
        let b = self.to_positions(subset)?;
        Ok(self.verdict(self.space.is_irreducible_by_covers(&b, cap)?))
    }

    pub fn generic_point(&self, closed: &ClosedSet) -> Result<Option<usize>> {
        let b = self.to_positions(&closed.members)?;
        if !self.space.is_closed(&b) {
            return Err(Error::Precondition("generic point of a set that is not closed".into()));
        }
        Ok(self.space.generic_point(&b).map(|p| self.members[p]))
    }

    /// Intersection of the members of the space containing `a`.
    pub fn x_radical(&self, a: usize) -> XRadical {
        let trace = self.subbasic_closed(a).members;
        XRadical {
            empty_family: trace.is_empty(),
            ideal: self.lattice.intersect_all(trace),
        }
    }

    pub fn is_sober_direct(&self) -> Result<SobernessVerdict> {
        let mut v = self.space.is_sober_direct()?;
        if let Some(SoberWitness::NoGenericPoint {
            closed_set,
            candidates,
        }) = v.witness.take()
        {
            v.witness = Some(SoberWitness::NoGenericPoint {
                closed_set: closed_set.iter().map(|&p| self.members[p]).collect(),
                candidates: candidates.iter().map(|&p| self.members[p]).collect(),
            });
        }
        Ok(v)
    }

    /// Sober iff for every ideal `a` of the lattice whose (nonempty) trace
    /// `X ∩ {a}↑` is irreducible, the X-radical of `a` lies in `X`. The
    /// witness is the least such `a` for which it does not.
    pub fn is_sober_criterion(&self) -> SobernessVerdict {
        let witness = (0..self.lattice.len()).find_map(|a| {
            let trace = self.subbasic_closed(a).members;
            if trace.is_empty() {
                return None;
            }
            let b = self.to_positions(&trace).expect("trace lies in the space");
            if !self.space.is_irreducible(&b).expect("nonempty").is_irreducible() {
                return None;
            }
            let radical = self.lattice.intersect_all(trace.iter().copied());
            (!self.contains(radical)).then_some(SoberWitness::RadicalOutside {
                ideal: a,
                trace,
                radical,
            })
        });
        SobernessVerdict {
            sober: witness.is_none(),
            method: SoberMethod::Criterion,
            witness,
        }
    }

    /// Recomputes a witness from its stored data alone.
    pub fn validate_witness(&self, witness: &SoberWitness) -> bool {
        match witness {
            SoberWitness::NoGenericPoint {
                closed_set,
                candidates,
            } => {
                let Ok(b) = self.to_positions(closed_set) else {
                    return false;
                };
                let cand: Vec<usize> = self
                    .space
                    .generic_candidates(&b)
                    .iter()
                    .map(|&p| self.members[p])
                    .collect();
                !b.is_clear()
                    && self.space.is_closed(&b)
                    && self.space.is_irreducible(&b).map_or(false, |r| r.is_irreducible())
                    && self.space.generic_point(&b).is_none()
                    && &cand == candidates
            }
            SoberWitness::RadicalOutside {
                ideal,
                trace,
                radical,
            } => {
                if *ideal >= self.lattice.len() || &self.subbasic_closed(*ideal).members != trace || trace.is_empty() {
                    return false;
                }
                let irreducible = self.is_irreducible(trace).map_or(false, |v| v.irreducible);
                irreducible
                    && self.lattice.intersect_all(trace.iter().copied()) == *radical
                    && !self.contains(*radical)
            }
        }
    }

    pub fn max_elements(&self) -> Vec<usize> {
        self.space
            .max_elements()
            .into_iter()
            .map(|p| self.members[p])
            .collect()
    }

    pub fn is_t0(&self) -> bool {
        self.space.is_t0()
    }

    /// Maximal chains, bottom to top, in lattice indices.
    pub fn maximal_chains(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        Ok(self
            .space
            .maximal_chains(cap)?
            .into_iter()
            .map(|c| c.into_iter().map(|p| self.members[p]).collect())
            .collect())
    }

    pub fn quasi_compactness_report(&self) -> Result<QuasiCompactnessReport> {
        let n = self.len();
        // A cover by the basic opens ↓x; extract a subcover greedily and
        // check it still covers.
        let mut covered = FixedBitSet::with_capacity(n);
        for p in 0..n {
            if !covered.contains(p) {
                covered.union_with(self.space.down(p));
            }
        }
        let qc = covered.count_ones(..) == n;

        let max = self.space.max_elements();
        let mut witnesses = Vec::with_capacity(n);
        let mut everyone_below_max = true;
        for p in 0..n {
            match max.iter().find(|&&m| self.space.leq(p, m)) {
                Some(&m) => witnesses.push((self.members[p], self.members[m])),
                None => everyone_below_max = false,
            }
        }
        // Max(X) carries the discrete topology: its points are pairwise
        // incomparable. A discrete space is quasi-compact iff it is finite.
        let max_discrete = max
            .iter()
            .all(|&a| max.iter().all(|&b| a == b || !self.space.leq(a, b)));
        let max_qc = max_discrete && max.len() <= n;

        let chain_bounds_ok = self
            .space
            .maximal_chains(crate::config::closed_set_cap())?
            .iter()
            .all(|c| !self.space.upper_bounds(c).is_clear());

        Ok(QuasiCompactnessReport {
            qc,
            everyone_below_max,
            max_qc,
            chain_bounds_ok,
            witnesses,
        })
    }

    pub fn is_spectral_finite(&self) -> Result<(bool, SpectralCertificate)> {
        let sober = self.is_sober_direct()?.sober;
        let qc = self.quasi_compactness_report()?.qc;
        let cert = SpectralCertificate {
            t0: self.is_t0(),
            quasi_compact: qc,
            sober,
            // every open set of a finite space is quasi-compact, so the open
            // sets themselves form such a basis
            qc_open_basis_closed_under_intersection: true,
        };
        Ok((cert.spectral(), cert))
    }

    /// Whether `inf z` (the intersection in the lattice) lies in the space.
    /// `z` must be a nonempty lower-directed subset of the space.
    pub fn lower_directed_infimum_check(&self, z: &[usize]) -> Result<bool> {
        if z.is_empty() {
            return Err(Error::Precondition("infimum of an empty family".into()));
        }
        self.to_positions(z)?;
        for (k, &a) in z.iter().enumerate() {
            for &b in &z[k + 1..] {
                let bounded = z
                    .iter()
                    .any(|&c| self.lattice.contains(c, a) && self.lattice.contains(c, b));
                if !bounded {
                    return Err(Error::Precondition(format!(
                        "not lower directed: {} and {} have no lower bound in the family",
                        self.describe(a),
                        self.describe(b)
                    )));
                }
            }
        }
        Ok(self.contains(self.lattice.intersect_all(z.iter().copied())))
    }
}
