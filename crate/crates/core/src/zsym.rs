//! Ideals of ℤ, modelled by their nonnegative generators: `n ↦ nℤ`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Trial division runs up to this divisor.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;
/// Subbasic pairs are checked exhaustively up to this generator by default.
pub const DEFAULT_PAIR_BOUND: u64 = 10_000;

/// `nℤ`; `0` is the zero ideal and `1` is ℤ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ZIdeal(pub u64);

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl ZIdeal {
    /// `self ⊆ other`, i.e. `other.0 | self.0`.
    pub fn is_subset(self, other: ZIdeal) -> bool {
        match (self.0, other.0) {
            (_, 0) => self.0 == 0,
            (m, n) => m % n == 0,
        }
    }

    pub fn sum(self, other: ZIdeal) -> ZIdeal {
        ZIdeal(gcd(self.0, other.0))
    }

    pub fn intersect(self, other: ZIdeal) -> ZIdeal {
        if self.0 == 0 || other.0 == 0 {
            return ZIdeal(0);
        }
        ZIdeal(self.0 / gcd(self.0, other.0) * other.0)
    }

    pub fn product(self, other: ZIdeal) -> ZIdeal {
        ZIdeal(self.0 * other.0)
    }

    /// Squarefree kernel; `√(0) = (0)`.
    pub fn radical(self) -> Result<ZIdeal> {
        if self.0 == 0 {
            return Ok(self);
        }
        Ok(ZIdeal(factorize(self.0)?.iter().map(|&(p, _)| p).product()))
    }
}

/// Prime factorization by trial division. Any cofactor left after dividing
/// out everything up to 10^6 is prime only if it is below 10^12; larger
/// cofactors are refused.
pub fn factorize(mut n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::Precondition("factorization of 0".into()));
    }
    let original = n;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if d > TRIAL_DIVISION_LIMIT {
            return Err(Error::Factorization(original));
        }
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && matches!(factorize(n).as_deref(), Ok([(_, 1)]))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ZFlags {
    pub prime: bool,
    pub maximal: bool,
    pub primary: bool,
    pub regular_proper: bool,
    pub radical: bool,
}

pub fn z_classify(i: ZIdeal) -> Result<ZFlags> {
    if i.0 == 0 {
        return Ok(ZFlags {
            prime: true,
            maximal: false,
            primary: true,
            regular_proper: false,
            radical: true,
        });
    }
    if i.0 == 1 {
        return Ok(ZFlags::default());
    }
    let f = factorize(i.0)?;
    let prime = matches!(f.as_slice(), [(_, 1)]);
    Ok(ZFlags {
        prime,
        maximal: prime,
        primary: f.len() == 1,
        regular_proper: true,
        radical: f.iter().all(|&(_, e)| e == 1),
    })
}

/// `{mℤ : m | n}`, ascending by generator.
pub fn z_upset(i: ZIdeal) -> Result<Vec<ZIdeal>> {
    if i.0 == 0 {
        return Err(Error::Precondition(
            "the up-set of (0) is all of Idl(Z) and is infinite".into(),
        ));
    }
    let mut divisors = vec![1u64];
    for (p, e) in factorize(i.0)? {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for &d in &divisors {
            let mut q = d;
            for _ in 0..=e {
                next.push(q);
                q *= p;
            }
        }
        divisors = next;
    }
    divisors.sort_unstable();
    Ok(divisors.into_iter().map(ZIdeal).collect())
}

/// Least prime dividing neither `n` nor `m`. `pℤ` is then a member of
/// `Reg(ℤ)` outside both `{nℤ}↑` and `{mℤ}↑`, so the two basic opens meet.
pub fn reg_z_irreducibility_witness(n: u64, m: u64) -> u64 {
    let mut p = 2;
    loop {
        if n % p != 0 && m % p != 0 {
            return p;
        }
        p = next_prime(p);
    }
}

fn next_prime(p: u64) -> u64 {
    let mut q = p + 1;
    while !small_prime(q) {
        q += 1;
    }
    q
}

fn small_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

const MASK_PRIMES: usize = 64;

fn first_primes() -> Vec<u64> {
    let mut out = vec![2u64];
    while out.len() < MASK_PRIMES {
        out.push(next_prime(*out.last().unwrap()));
    }
    out
}

/// Which of the first 64 primes divide `n`.
fn prime_mask(n: u64, primes: &[u64]) -> u64 {
    primes
        .iter()
        .enumerate()
        .filter(|&(_, &p)| n % p == 0)
        .fold(0, |m, (k, _)| m | 1 << k)
}

/// Witness data for every pair `2 ≤ n ≤ m ≤ pair_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitnesses {
    pub pair_bound: u64,
    pub pairs_checked: u64,
    /// How often each prime occurs as the witness.
    pub histogram: BTreeMap<u64, u64>,
    /// Every `(n, m, p)`, kept only for small bounds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<(u64, u64, u64)>>,
}

const FULL_LIST_BOUND: u64 = 100;

fn pair_witnesses(pair_bound: u64) -> PairWitnesses {
    let primes = first_primes();
    let masks: Vec<u64> = (0..=pair_bound).map(|n| prime_mask(n, &primes)).collect();
    let histogram = (2..=pair_bound)
        .into_par_iter()
        .fold(BTreeMap::new, |mut h: BTreeMap<u64, u64>, n| {
            for m in n..=pair_bound {
                let covered = masks[n as usize] | masks[m as usize];
                let p = if covered == u64::MAX {
                    reg_z_irreducibility_witness(n, m)
                } else {
                    primes[covered.trailing_ones() as usize]
                };
                *h.entry(p).or_default() += 1;
            }
            h
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let witnesses = (pair_bound <= FULL_LIST_BOUND).then(|| {
        (2..=pair_bound)
            .flat_map(|n| (n..=pair_bound).map(move |m| (n, m, reg_z_irreducibility_witness(n, m))))
            .collect()
    });
    let k = pair_bound.saturating_sub(1);
    PairWitnesses {
        pair_bound,
        pairs_checked: k * (k + 1) / 2,
        histogram,
        witnesses,
    }
}

impl PairWitnesses {
    /// Recomputes every pair by a plain prime scan and checks that the
    /// witness is prime, divides neither generator, and is least.
    pub fn validate(&self) -> bool {
        let recomputed = (2..=self.pair_bound)
            .into_par_iter()
            .fold(BTreeMap::new, |mut h: BTreeMap<u64, u64>, n| {
                for m in n..=self.pair_bound {
                    let p = (2..).find(|&q| small_prime(q) && n % q != 0 && m % q != 0).unwrap();
                    *h.entry(p).or_default() += 1;
                }
                h
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            });
        let count: u64 = recomputed.values().sum();
        let list_ok = self.witnesses.as_ref().map_or(true, |w| {
            w.iter().all(|&(n, m, p)| {
                is_prime(p) && n % p != 0 && m % p != 0 && (2..p).all(|q| !small_prime(q) || n % q == 0 || m % q == 0)
            })
        });
        recomputed == self.histogram && count == self.pairs_checked && list_ok
    }
}

/// Refutation of a nonzero candidate `kℤ` for the intersection of all of
/// `Reg(ℤ)`: the prime `p` does not divide `k`, so `kℤ ⊄ pℤ ∈ Reg(ℤ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub candidate: u64,
    pub prime: u64,
}

/// Evidence that `Reg(ℤ) = {nℤ : n ≥ 2}` is irreducible but not sober.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegZCertificate {
    pub bound: u64,
    /// Basic opens `Reg(ℤ) \ {nℤ}↑` pairwise meet.
    pub irreducible: PairWitnesses,
    /// Candidates `k = 2..=bound`; `k = 1` is ℤ itself and not proper.
    pub refutations: Vec<Refutation>,
    /// The intersection of every member is `(0)`, given as its generator.
    pub x_radical_of_zero: u64,
    pub x_radical_in_space: bool,
    pub sober: bool,
}

pub fn reg_z_not_sober_certificate(bound: u64) -> Result<RegZCertificate> {
    reg_z_not_sober_certificate_with_pairs(bound, bound.min(DEFAULT_PAIR_BOUND))
}

pub fn reg_z_not_sober_certificate_with_pairs(bound: u64, pair_bound: u64) -> Result<RegZCertificate> {
    if bound < 2 {
        return Err(Error::Precondition("bound must be at least 2".into()));
    }
    let refutations = (2..=bound)
        .into_par_iter()
        .map(|k| Refutation {
            candidate: k,
            prime: reg_z_irreducibility_witness(k, k),
        })
        .collect();
    Ok(RegZCertificate {
        bound,
        irreducible: pair_witnesses(pair_bound.min(bound)),
        refutations,
        x_radical_of_zero: 0,
        x_radical_in_space: false,
        sober: false,
    })
}

impl RegZCertificate {
    pub fn validate(&self) -> bool {
        let refuted = self.refutations.len() as u64 == self.bound - 1
            && self.refutations.iter().zip(2..).all(|(r, k)| {
                r.candidate == k && is_prime(r.prime) && k % r.prime != 0
            });
        let zero_outside = z_classify(ZIdeal(self.x_radical_of_zero)).map_or(false, |f| !f.regular_proper);
        self.irreducible.validate()
            && refuted
            && self.x_radical_of_zero == 0
            && zero_outside
            && !self.x_radical_in_space
            && !self.sober
    }
}

/// A trace `Prm(ℤ) ∩ {nℤ}↑` that is irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleTrace {
    pub n: u64,
    pub trace: Vec<u64>,
    pub x_radical: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrmZVerdict {
    pub bound: u64,
    pub traces_checked: u64,
    pub irreducible_traces: u64,
    /// Irreducible traces whose intersection is not primary.
    pub failures: Vec<IrreducibleTrace>,
    /// Sample of irreducible traces, the first few by `n`.
    pub examples: Vec<IrreducibleTrace>,
    /// `Prm(ℤ)` itself: its basic opens pairwise meet in a prime.
    pub whole_space_irreducible: PairWitnesses,
    /// `(0)` is primary, so the X-radical of `(0)` lies in the space.
    pub zero_primary: bool,
    pub sober_bounded: bool,
}

const TRACE_EXAMPLES: usize = 8;

/// Checks the sober criterion for `Prm(ℤ)` on every `n ≤ bound`, plus the
/// whole-space case `n = 0`.
pub fn prm_z_sober_bounded(bound: u64) -> Result<PrmZVerdict> {
    prm_z_sober_bounded_with_pairs(bound, bound.min(DEFAULT_PAIR_BOUND))
}

pub fn prm_z_sober_bounded_with_pairs(bound: u64, pair_bound: u64) -> Result<PrmZVerdict> {
    if bound < 2 {
        return Err(Error::Precondition("bound must be at least 2".into()));
    }
    let results: Vec<Option<IrreducibleTrace>> = (1..=bound)
        .into_par_iter()
        .map(|n| -> Result<Option<IrreducibleTrace>> {
            let mut trace = Vec::new();
            for d in z_upset(ZIdeal(n))? {
                if z_classify(d)?.primary {
                    trace.push(d.0);
                }
            }
            if trace.is_empty() {
                return Ok(None);
            }
            // irreducible iff every pair has a lower bound, i.e. a common
            // multiple, inside the trace
            let irreducible = trace.iter().enumerate().all(|(k, &a)| {
                trace[k + 1..]
                    .iter()
                    .all(|&b| trace.iter().any(|&c| c % a == 0 && c % b == 0))
            });
            if !irreducible {
                return Ok(None);
            }
            let x_radical = trace
                .iter()
                .fold(ZIdeal(1), |acc, &d| acc.intersect(ZIdeal(d)))
                .0;
            Ok(Some(IrreducibleTrace { n, trace, x_radical }))
        })
        .collect::<Result<_>>()?;
    let irreducible: Vec<IrreducibleTrace> = results.into_iter().flatten().collect();
    let mut failures = Vec::new();
    for t in &irreducible {
        if !z_classify(ZIdeal(t.x_radical))?.primary {
            failures.push(t.clone());
        }
    }
    let whole = pair_witnesses(pair_bound.min(bound));
    let zero_primary = z_classify(ZIdeal(0))?.primary;
    Ok(PrmZVerdict {
        bound,
        traces_checked: bound,
        irreducible_traces: irreducible.len() as u64,
        sober_bounded: failures.is_empty() && zero_primary,
        failures,
        examples: irreducible.into_iter().take(TRACE_EXAMPLES).collect(),
        whole_space_irreducible: whole,
        zero_primary,
    })
}

impl PrmZVerdict {
    pub fn validate(&self) -> bool {
        self.whole_space_irreducible.validate()
            && self.failures.is_empty() == self.sober_bounded
            && self.examples.iter().all(|t| {
                t.trace.iter().all(|&d| t.n % d == 0)
                    && z_classify(ZIdeal(t.x_radical)).map_or(false, |f| f.primary)
            })
    }
}
