use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{ElementExpr, RingSpec};
use crate::zsym::factorize;

/// Bounds of the generated ring corpus and of the sampled sub-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    /// `Z/n` for `2 ≤ n ≤ zmod_max`.
    pub zmod_max: u64,
    /// `GF(p)[x]/(f)` for every prime `p ≤ poly_p_max` and monic `f` of
    /// degree `1..=poly_deg_max`.
    pub poly_p_max: u64,
    pub poly_deg_max: usize,
    /// Products of `2..=product_factors_max` rings from a small pool.
    pub product_factors_max: usize,
    pub max_ring_size: u64,
    pub quotients: bool,
    /// Rings with more ideals are reported as skipped.
    pub max_ideals: usize,
    pub seed: u64,
    /// Bound for the integer certificates.
    pub z_bound: u64,
    /// Random subsets per ring in the Noetherian check.
    pub noeth_samples: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            zmod_max: 64,
            poly_p_max: 5,
            poly_deg_max: 3,
            product_factors_max: 3,
            max_ring_size: 256,
            quotients: true,
            max_ideals: 1 << 12,
            seed: 0x1dea1,
            z_bound: 10_000,
            noeth_samples: 1000,
        }
    }
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| crate::zsym::is_prime(p)).collect()
}

/// Every monic polynomial of degree `deg` over `GF(p)`, coefficients
/// lowest first, in lexicographic order of the lower coefficients.
fn monic_polys(p: u64, deg: usize) -> Vec<Vec<u64>> {
    let count = p.pow(deg as u32);
    (0..count)
        .map(|mut k| {
            let mut c = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                c.push(k % p);
                k /= p;
            }
            c.push(1);
            c
        })
        .collect()
}

fn product_pool(spec: &CorpusSpec) -> Vec<RingSpec> {
    let mut pool: Vec<RingSpec> = [2u64, 3, 4, 5, 8, 9]
        .into_iter()
        .filter(|&n| n <= spec.zmod_max)
        .map(RingSpec::zmod)
        .collect();
    if spec.poly_deg_max >= 2 {
        if spec.poly_p_max >= 2 {
            pool.push(RingSpec::poly_quot(2, vec![0, 0, 1]));
            pool.push(RingSpec::poly_quot(2, vec![1, 1, 1]));
        }
        if spec.poly_p_max >= 3 {
            pool.push(RingSpec::poly_quot(3, vec![0, 0, 1]));
        }
    }
    pool
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in multisets(n - first, k - 1) {
            let mut v = vec![first];
            v.extend(rest.into_iter().map(|r| r + first));
            out.push(v);
        }
    }
    out
}

fn least_prime_factor(n: u64) -> u64 {
    factorize(n).map(|f| f[0].0).unwrap_or(n)
}

/// The corpus, in a fixed order, without duplicate descriptions.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<RingSpec>> {
    if spec.zmod_max < 2 {
        return Err(Error::InvalidSpec("zmod_max must be at least 2".into()));
    }
    let fits = |r: &RingSpec| r.ambient_size().map_or(false, |s| s <= spec.max_ring_size);
    let mut out: Vec<RingSpec> = Vec::new();
    out.extend((2..=spec.zmod_max).map(RingSpec::zmod));
    for p in primes_up_to(spec.poly_p_max) {
        for deg in 1..=spec.poly_deg_max {
            out.extend(monic_polys(p, deg).into_iter().map(|c| RingSpec::poly_quot(p, c)));
        }
    }
    let pool = product_pool(spec);
    let mut products = Vec::new();
    for k in 2..=spec.product_factors_max {
        for combo in multisets(pool.len(), k) {
            let r = RingSpec::product(combo.iter().map(|&i| pool[i].clone()).collect());
            if fits(&r) {
                products.push(r);
            }
        }
    }
    out.extend(products.iter().cloned());
    if spec.quotients {
        for r in &products {
            let RingSpec::Product { factors } = r else { continue };
            let moduli: Option<Vec<u64>> = factors
                .iter()
                .map(|f| match f {
                    RingSpec::Zmod { n } if factorize(*n).map_or(false, |v| v.len() == 1 && v[0].1 > 1) => Some(*n),
                    _ => None,
                })
                .collect();
            let Some(moduli) = moduli.filter(|m| m.len() == 2) else { continue };
            let ps: Vec<i64> = moduli.iter().map(|&n| least_prime_factor(n) as i64).collect();
            let both = ElementExpr::Tuple(ps.iter().map(|&p| ElementExpr::int(p)).collect());
            let first = ElementExpr::Tuple(vec![ElementExpr::int(ps[0]), ElementExpr::int(0)]);
            out.push(RingSpec::quotient(r.clone(), vec![both]));
            out.push(RingSpec::quotient(r.clone(), vec![first]));
        }
        for p in primes_up_to(spec.poly_p_max) {
            for deg in 2..=spec.poly_deg_max {
                let mut c = vec![0u64; deg + 1];
                c[deg] = 1;
                let mut g = vec![0i64; deg];
                g[deg - 1] = 1;
                out.push(RingSpec::quotient(RingSpec::poly_quot(p, c), vec![ElementExpr::Poly(g)]));
            }
        }
        for (n, d) in [(12u64, 4i64), (36, 6), (64, 8), (48, 12)] {
            if n <= spec.zmod_max {
                out.push(RingSpec::quotient(RingSpec::zmod(n), vec![ElementExpr::int(d)]));
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|r| fits(r) && seen.insert(r.to_string()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_is_large_enough() {
        let c = generate_corpus(&CorpusSpec::default()).unwrap();
        assert!(c.len() >= 150, "{}", c.len());
        for r in &c {
            let back: RingSpec = r.to_string().parse().unwrap();
            assert_eq!(&back, r);
        }
    }

    #[test]
    fn monic_poly_count() {
        assert_eq!(monic_polys(3, 2).len(), 9);
        assert!(monic_polys(2, 3).iter().all(|c| c.len() == 4 && c[3] == 1));
    }
}
