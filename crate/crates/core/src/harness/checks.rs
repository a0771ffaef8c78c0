//! The per-ring checks. Each returns pass/fail plus a JSON detail record
//! that names ideals by lattice index and label.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Result;
use crate::families::{build_space, family_inclusions_report, Family, MAX_CONTAINING};
use crate::ideal::{classify, enumerate_ideals_with_cap, IdealClassification, IdealLattice};
use crate::ring::{build_ring, localize_at_maximal, quotient_ring, FiniteRing, Projection, RingSpec};
use crate::topology::IdealSpace;

/// Everything a ring's checks need, built once.
pub struct RingContext {
    pub spec: RingSpec,
    pub name: String,
    pub lat: IdealLattice,
    pub cls: IdealClassification,
}

impl RingContext {
    pub fn build(spec: &RingSpec, max_ideals: usize) -> Result<Self> {
        let ring = build_ring(spec)?;
        let lat = enumerate_ideals_with_cap(&ring, max_ideals)?;
        let cls = classify(&lat);
        Ok(RingContext {
            spec: spec.clone(),
            name: spec.to_string(),
            lat,
            cls,
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        self.lat.ring()
    }

    pub fn space(&self, f: Family) -> IdealSpace<'_> {
        build_space(&self.lat, &self.cls, f)
    }

    fn labels(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.lat.label(i)).collect()
    }
}

pub struct Outcome {
    pub pass: bool,
    pub detail: Value,
}

fn outcome(pass: bool, detail: Value) -> Result<Outcome> {
    Ok(Outcome { pass, detail })
}

/// 64-bit FNV-1a; stable across platforms and runs.
pub fn fnv1a(bytes: impl IntoIterator<Item = u8>) -> u64 {
    bytes.into_iter().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Seed for a ring's sampled checks, independent of corpus order.
pub fn ring_seed(seed: u64, name: &str) -> u64 {
    seed ^ fnv1a(name.bytes())
}

pub fn sober_eq(ctx: &RingContext) -> Result<Outcome> {
    let mut families = BTreeMap::new();
    let mut pass = true;
    for f in Family::ALL {
        let space = ctx.space(f);
        let direct = space.is_sober_direct()?;
        let criterion = space.is_sober_criterion();
        let witnesses_ok = [&direct.witness, &criterion.witness]
            .into_iter()
            .flatten()
            .all(|w| space.validate_witness(w));
        let agree = direct.sober == criterion.sober && witnesses_ok;
        pass &= agree;
        let mut rec = json!({
            "points": space.len(),
            "direct": direct.sober,
            "criterion": criterion.sober,
        });
        if !agree {
            rec["direct_witness"] = json!(direct.witness);
            rec["criterion_witness"] = json!(criterion.witness);
        }
        families.insert(f.tag(), rec);
    }
    outcome(pass, json!({ "families": families }))
}

pub fn qc_eq(ctx: &RingContext) -> Result<Outcome> {
    let mut families = BTreeMap::new();
    let mut pass = true;
    for f in Family::ALL {
        let r = ctx.space(f).quasi_compactness_report()?;
        let ok = r.equivalence_holds() && r.qc;
        pass &= ok;
        families.insert(
            f.tag(),
            json!({
                "qc": r.qc,
                "everyone_below_max": r.everyone_below_max,
                "max_qc": r.max_qc,
                "chain_bounds_ok": r.chain_bounds_ok,
            }),
        );
    }
    outcome(pass, json!({ "families": families }))
}

pub fn qc_cor(ctx: &RingContext) -> Result<Outcome> {
    let inclusions = family_inclusions_report(&ctx.cls);
    let max = Family::Max.members(&ctx.cls);
    let mut families = BTreeMap::new();
    let mut pass = inclusions.all_hold();
    for f in MAX_CONTAINING {
        let space = ctx.space(f);
        let contains_max = max.iter().all(|&m| space.contains(m));
        let qc = space.quasi_compactness_report()?.qc;
        pass &= contains_max && qc;
        families.insert(f.tag(), json!({ "contains_max": contains_max, "qc": qc }));
    }
    outcome(
        pass,
        json!({ "families": families, "max": ctx.labels(&max), "inclusions": inclusions }),
    )
}

pub fn chain(ctx: &RingContext) -> Result<Outcome> {
    let mut families = BTreeMap::new();
    let mut pass = true;
    for f in Family::ALL {
        let space = ctx.space(f);
        let chains = space.maximal_chains(crate::config::closed_set_cap())?;
        let mut unbounded = Vec::new();
        for c in &chains {
            let top = *c.last().expect("chains are nonempty");
            let bounded = c.iter().all(|&x| ctx.lat.contains(x, top));
            if !bounded {
                unbounded.push(c.clone());
            }
        }
        let ok = space.is_t0() && unbounded.is_empty();
        pass &= ok;
        let mut rec = json!({ "chains": chains.len(), "t0": space.is_t0() });
        if !unbounded.is_empty() {
            rec["unbounded"] = json!(unbounded);
        }
        families.insert(f.tag(), rec);
    }
    outcome(pass, json!({ "families": families }))
}

/// A random nonempty subset of `0..n`.
fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

pub fn noeth(ctx: &RingContext, seed: u64, samples: usize) -> Result<Outcome> {
    let whole = IdealSpace::whole(&ctx.lat);
    let direct = whole.is_sober_direct()?;
    let mut irreducible_closed = 0usize;
    let mut generic_mismatch = Vec::new();
    for c in whole.all_closed_sets()? {
        if c.members.is_empty() || !whole.is_irreducible(&c.members)?.irreducible {
            continue;
        }
        irreducible_closed += 1;
        let meet = ctx.lat.intersect_all(c.members.iter().copied());
        if whole.generic_point(&c)? != Some(meet) {
            generic_mismatch.push(c.members.clone());
        }
    }

    // Subspaces: cover each sample by the basic opens ↓y ∩ Y and by random
    // down-sets, then pick one covering open per point.
    let seed = ring_seed(seed, &ctx.name);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ctx.lat.len();
    let mut digest_bytes = Vec::new();
    let mut non_qc = Vec::new();
    for _ in 0..samples {
        let y = random_subset(&mut rng, n);
        digest_bytes.extend(y.iter().flat_map(|&i| (i as u32).to_le_bytes()));
        digest_bytes.push(0xff);
        let y_set: FixedBitSet = y.iter().copied().collect();
        let mut cover: Vec<FixedBitSet> = y
            .iter()
            .map(|&p| {
                let mut d = ctx.lat.down_set(p).clone();
                d.grow(n);
                d.intersect_with(&y_set);
                d
            })
            .collect();
        for _ in 0..rng.gen_range(0..4) {
            let gens = random_subset(&mut rng, n);
            let mut open = FixedBitSet::with_capacity(n);
            for g in gens {
                open.union_with(ctx.lat.down_set(g));
            }
            open.intersect_with(&y_set);
            cover.push(open);
        }
        let mut chosen: Vec<usize> = y
            .iter()
            .map(|&p| cover.iter().position(|o| o.contains(p)).expect("covered"))
            .collect();
        chosen.sort_unstable();
        chosen.dedup();
        let mut union = FixedBitSet::with_capacity(n);
        for &k in &chosen {
            union.union_with(&cover[k]);
        }
        if !(y_set.is_subset(&union) && chosen.len() <= y.len()) {
            non_qc.push(y);
        }
    }
    let pass = direct.sober && generic_mismatch.is_empty() && non_qc.is_empty();
    outcome(
        pass,
        json!({
            "sober": direct.sober,
            "irreducible_closed_sets": irreducible_closed,
            "generic_point_is_intersection": generic_mismatch.is_empty(),
            "samples": samples,
            "sample_seed": seed,
            "sample_digest": format!("{:016x}", fnv1a(digest_bytes)),
            "non_qc_samples": non_qc,
            "generic_mismatch": generic_mismatch,
        }),
    )
}

pub fn spectral_sober(ctx: &RingContext) -> Result<Outcome> {
    let mut families = BTreeMap::new();
    let mut pass = true;
    for f in Family::ALL {
        let space = ctx.space(f);
        let (spectral, cert) = space.is_spectral_finite()?;
        let sober = space.is_sober_direct()?.sober;
        pass &= spectral == sober;
        families.insert(f.tag(), json!({ "spectral": spectral, "sober": sober, "certificate": cert }));
    }
    outcome(pass, json!({ "families": families }))
}

/// Lower-directed subsets of size ≤ 4: a finite lower-directed set has a
/// least element, so each is a member `m` together with at most three
/// members above it.
fn lower_directed_small(space: &IdealSpace<'_>, mut visit: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let lat = space.lattice();
    for &m in space.members() {
        let above: Vec<usize> = space
            .members()
            .iter()
            .copied()
            .filter(|&x| x != m && lat.contains(m, x))
            .collect();
        visit(&[m])?;
        for a in 0..above.len() {
            visit(&[m, above[a]])?;
            for b in a + 1..above.len() {
                visit(&[m, above[a], above[b]])?;
                for c in b + 1..above.len() {
                    visit(&[m, above[a], above[b], above[c]])?;
                }
            }
        }
    }
    Ok(())
}

pub fn inf(ctx: &RingContext) -> Result<Outcome> {
    let mut families = BTreeMap::new();
    let mut pass = true;
    for f in Family::ALL {
        let space = ctx.space(f);
        if !space.is_sober_direct()?.sober {
            families.insert(f.tag(), json!({ "sober": false }));
            continue;
        }
        let mut checked = 0u64;
        let mut outside: Vec<Vec<usize>> = Vec::new();
        lower_directed_small(&space, |z| {
            checked += 1;
            if !space.lower_directed_infimum_check(z)? {
                outside.push(z.to_vec());
            }
            Ok(())
        })?;
        let chains = space.maximal_chains(crate::config::closed_set_cap())?;
        for c in &chains {
            if !space.lower_directed_infimum_check(c)? {
                outside.push(c.clone());
            }
        }
        pass &= outside.is_empty();
        let mut rec = json!({ "sober": true, "directed_sets": checked, "chains": chains.len() });
        if !outside.is_empty() {
            rec["infimum_outside"] = json!(outside);
        }
        families.insert(f.tag(), rec);
    }
    outcome(pass, json!({ "families": families }))
}

/// Least idempotent other than 0 and 1, if any.
pub fn nontrivial_idempotent(ring: &FiniteRing) -> Option<usize> {
    ring.elements()
        .find(|&e| e != ring.zero() && e != ring.one() && ring.mul(e, e) == e)
}

/// Non-local rings: `Prm(R)` splits along an idempotent `e`, every primary
/// ideal containing exactly one of `e`, `1 − e`.
pub fn prm_irrid(ctx: &RingContext) -> Result<Option<Outcome>> {
    let ring = ctx.ring();
    let local = ctx.lat.is_local();
    let idem = nontrivial_idempotent(ring);
    if local {
        return if idem.is_none() {
            Ok(None)
        } else {
            outcome(false, json!({ "local": true, "idempotent": idem })).map(Some)
        };
    }
    let space = ctx.space(Family::Prm);
    let verdict = space.is_irreducible(space.members())?;
    let cover_valid = match (&verdict.pair, &verdict.cover) {
        (Some(_), Some((v1, v2))) => {
            let closed = space.is_closed(&v1.members)? && space.is_closed(&v2.members)?;
            let covers = space
                .members()
                .iter()
                .all(|x| v1.members.contains(x) || v2.members.contains(x));
            let proper = v1.members.len() < space.len() && v2.members.len() < space.len();
            closed && covers && proper
        }
        _ => false,
    };
    let (split_ok, e_label, f_label) = match idem {
        Some(e) => {
            let f = ring.sub(ring.one(), e);
            let split = space.members().iter().all(|&i| {
                let id = ctx.lat.ideal(i);
                id.contains(e) != id.contains(f)
            });
            let both_sides = space.members().iter().any(|&i| ctx.lat.ideal(i).contains(e))
                && space.members().iter().any(|&i| ctx.lat.ideal(i).contains(f));
            (split && both_sides, Some(ring.decode(e).to_string()), Some(ring.decode(f).to_string()))
        }
        None => (false, None, None),
    };
    let pass = !verdict.irreducible && cover_valid && split_ok;
    outcome(
        pass,
        json!({
            "local": false,
            "irreducible": verdict.irreducible,
            "pair": verdict.pair,
            "pair_labels": verdict.pair.map(|(a, b)| ctx.labels(&[a, b])),
            "cover": verdict.cover,
            "cover_valid": cover_valid,
            "idempotent": e_label,
            "complement": f_label,
            "split_valid": split_ok,
        }),
    )
    .map(Some)
}

pub fn prm_sober(ctx: &RingContext) -> Result<Outcome> {
    let space = ctx.space(Family::Prm);
    let direct = space.is_sober_direct()?;
    let criterion = space.is_sober_criterion();
    let (spectral, cert) = space.is_spectral_finite()?;
    outcome(
        direct.sober && criterion.sober && spectral,
        json!({
            "members": ctx.labels(space.members()),
            "direct": direct,
            "criterion": criterion,
            "spectral": spectral,
            "certificate": cert,
        }),
    )
}

/// Whether `φ` maps `domain` bijectively onto `target` and both preserves
/// and reflects inclusion. Returns the image indices alongside.
fn order_isomorphism(
    src: &IdealLattice,
    dst: &IdealLattice,
    proj: &Projection,
    domain: &[usize],
    target: &[usize],
) -> (bool, Vec<Option<usize>>) {
    let image: Vec<Option<usize>> = domain
        .iter()
        .map(|&i| dst.index_of(&proj.image(src.ideal(i).members())))
        .collect();
    let mut hit: Vec<usize> = image.iter().flatten().copied().collect();
    hit.sort_unstable();
    let injective = hit.windows(2).all(|w| w[0] != w[1]) && hit.len() == domain.len();
    let onto = hit == target;
    let order = domain.iter().zip(&image).all(|(&a, ia)| {
        domain.iter().zip(&image).all(|(&b, ib)| match (ia, ib) {
            (Some(x), Some(y)) => src.contains(a, b) == dst.contains(*x, *y),
            _ => false,
        })
    });
    (injective && onto && order, image)
}

pub fn prm_loc(ctx: &RingContext, max_ideals: usize) -> Result<Outcome> {
    let ring = ctx.ring();
    let prm = Family::Prm.members(&ctx.cls);
    let mut rows = Vec::new();
    let mut pass = true;
    for m in ctx.lat.maximal_ideals() {
        let (rm, proj) = localize_at_maximal(ring, ctx.lat.ideal(m))?;
        let lm = enumerate_ideals_with_cap(&rm, max_ideals)?;
        let cm = classify(&lm);
        let target = Family::Prm.members(&cm);
        let domain: Vec<usize> = prm.iter().copied().filter(|&a| ctx.lat.contains(a, m)).collect();
        let (iso, image) = order_isomorphism(&ctx.lat, &lm, &proj, &domain, &target);
        let local_space = build_space(&lm, &cm, Family::Prm);
        let sober = local_space.is_sober_direct()?.sober && local_space.is_sober_criterion().sober;
        let ok = iso && sober && lm.is_local();
        pass &= ok;
        rows.push(json!({
            "maximal": m,
            "maximal_label": ctx.lat.label(m),
            "local_size": rm.size(),
            "local": lm.is_local(),
            "domain": domain,
            "image": image,
            "homeomorphism": iso,
            "sober": sober,
        }));
    }
    outcome(pass, json!({ "maximal_ideals": rows }))
}

pub fn quot_homeo(ctx: &RingContext, max_ideals: usize) -> Result<Outcome> {
    let ring = ctx.ring();
    let prm = Family::Prm.members(&ctx.cls);
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for a in 0..ctx.lat.len() {
        let (q, proj) = quotient_ring(ring, ctx.lat.ideal(a));
        let lq = enumerate_ideals_with_cap(&q, max_ideals)?;
        let cq = classify(&lq);
        let target = Family::Prm.members(&cq);
        let domain: Vec<usize> = prm.iter().copied().filter(|&b| ctx.lat.contains(a, b)).collect();
        let (iso, image) = order_isomorphism(&ctx.lat, &lq, &proj, &domain, &target);
        checked += 1;
        if !iso {
            failures.push(json!({
                "ideal": a,
                "ideal_label": ctx.lat.label(a),
                "domain": domain,
                "image": image,
                "target": target,
            }));
        }
    }
    outcome(
        failures.is_empty(),
        json!({ "ideals_checked": checked, "failures": failures }),
    )
}
