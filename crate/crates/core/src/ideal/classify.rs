use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use super::lattice::IdealLattice;

/// Membership of one ideal in each of the named families, every flag
/// computed from its definition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    pub prime: bool,
    pub maximal: bool,
    pub primary: bool,
    pub radical: bool,
    pub irreducible: bool,
    pub strongly_irreducible: bool,
    pub completely_irreducible: bool,
    pub nilpotent: bool,
    pub nil: bool,
    pub principal: bool,
    pub regular: bool,
    pub minimal: bool,
    pub minimal_prime: bool,
    pub proper: bool,
    pub finitely_generated: bool,
}

#[derive(Clone, Debug)]
pub struct IdealClassification {
    flags: Vec<IdealFlags>,
    radicals: Vec<usize>,
}

impl IdealClassification {
    pub fn flags(&self, i: usize) -> &IdealFlags {
        &self.flags[i]
    }

    pub fn all(&self) -> &[IdealFlags] {
        &self.flags
    }

    /// Index of `√I_i`.
    pub fn radical(&self, i: usize) -> usize {
        self.radicals[i]
    }

    pub fn indices_where(&self, pred: impl Fn(&IdealFlags) -> bool) -> Vec<usize> {
        (0..self.flags.len()).filter(|&i| pred(&self.flags[i])).collect()
    }
}

/// `√I = {x : x^k ∈ I for some k ≥ 1}`.
pub fn radical_of(lat: &IdealLattice, i: usize) -> usize {
    let ring = lat.ring();
    let ideal = lat.ideal(i);
    let mut members = FixedBitSet::with_capacity(ring.size());
    for x in ring.elements() {
        if ideal.contains(lat.high_power(x)) {
            members.insert(x);
        }
    }
    lat.index_of(&members)
        .expect("the radical of an ideal is an ideal")
}

/// Ideal generated by the products `xy`, `x ∈ I_i`, `y ∈ I_j`.
pub fn ideal_product(lat: &IdealLattice, i: usize, j: usize) -> usize {
    let ring = lat.ring();
    let mut products = FixedBitSet::with_capacity(ring.size());
    let right = lat.ideal(j).elements();
    for x in lat.ideal(i).members().ones() {
        for &y in &right {
            products.insert(ring.mul(x, y));
        }
    }
    products
        .ones()
        .fold(lat.bottom(), |acc, z| lat.sum(acc, lat.principal_of(z)))
}

fn is_nilpotent(lat: &IdealLattice, i: usize) -> bool {
    let mut power = i;
    for _ in 0..lat.ideal(i).len() {
        if power == lat.bottom() {
            return true;
        }
        power = ideal_product(lat, power, i);
    }
    power == lat.bottom()
}

pub fn classify(lat: &IdealLattice) -> IdealClassification {
    let ring = lat.ring();
    let n = lat.len();
    let top = lat.top();
    let bottom = lat.bottom();
    let radicals: Vec<usize> = (0..n).into_par_iter().map(|i| radical_of(lat, i)).collect();
    let principal: FixedBitSet = ring.elements().map(|x| lat.principal_of(x)).collect();

    let mut flags: Vec<IdealFlags> = (0..n)
        .into_par_iter()
        .map(|i| {
            let ideal = lat.ideal(i);
            let rad = lat.ideal(radicals[i]);
            let proper = i != top;
            let outside: Vec<usize> = ring.elements().filter(|&x| !ideal.contains(x)).collect();
            let outside_rad: Vec<usize> = ring.elements().filter(|&x| !rad.contains(x)).collect();

            let prime = proper
                && outside
                    .iter()
                    .all(|&a| outside.iter().all(|&b| !ideal.contains(ring.mul(a, b))));
            let primary = proper
                && outside
                    .iter()
                    .all(|&a| outside_rad.iter().all(|&b| !ideal.contains(ring.mul(a, b))));
            let maximal = proper && lat.up_set(i).count_ones(..) == 2;

            let mut strictly_above = lat.up_set(i).clone();
            strictly_above.set(i, false);
            let above: Vec<usize> = strictly_above.ones().collect();
            let irreducible = proper
                && !above.iter().enumerate().any(|(a, &j)| {
                    above[a..].iter().any(|&k| lat.intersect(j, k) == i)
                });
            let not_below: Vec<usize> = (0..n).filter(|&j| !lat.contains(j, i)).collect();
            let strongly_irreducible = proper
                && !not_below.iter().enumerate().any(|(a, &j)| {
                    not_below[a..]
                        .iter()
                        .any(|&k| lat.contains(lat.intersect(j, k), i))
                });
            let completely_irreducible = proper && {
                let mut meet = FixedBitSet::with_capacity(ring.size());
                meet.insert_range(..);
                for &j in &above {
                    meet.intersect_with(lat.ideal(j).members());
                }
                &meet != ideal.members()
            };

            let nil = ideal
                .members()
                .ones()
                .all(|x| lat.high_power(x) == ring.zero());
            let regular = proper && !ideal.members().is_disjoint(lat.regular_elements());
            let minimal = i != bottom && lat.down_set(i).count_ones(..) == 2;

            IdealFlags {
                prime,
                maximal,
                primary,
                radical: radicals[i] == i,
                irreducible,
                strongly_irreducible,
                completely_irreducible,
                nilpotent: is_nilpotent(lat, i),
                nil,
                principal: principal.contains(i),
                regular,
                minimal,
                minimal_prime: false,
                proper,
                finitely_generated: true,
            }
        })
        .collect();

    for i in 0..n {
        if flags[i].prime {
            flags[i].minimal_prime = !lat
                .down_set(i)
                .ones()
                .any(|j| j != i && flags[j].prime);
        }
    }
    IdealClassification { flags, radicals }
}

/// Length (in edges) of the longest chain of primes.
pub fn krull_dimension(lat: &IdealLattice, cls: &IdealClassification) -> usize {
    let primes = cls.indices_where(|f| f.prime);
    // canonical order lists smaller ideals first, a topological order for ⊂
    let mut height = vec![0usize; lat.len()];
    let mut best = 0;
    for &p in &primes {
        let h = primes
            .iter()
            .filter(|&&q| q != p && lat.contains(q, p))
            .map(|&q| height[q] + 1)
            .max()
            .unwrap_or(0);
        height[p] = h;
        best = best.max(h);
    }
    best
}
