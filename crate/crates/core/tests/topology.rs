mod common;

use common::{index_of_label, lattice, small_corpus};
use fixedbitset::FixedBitSet;
use idealtop::families::{build_space, Family};
use idealtop::ideal::{classify, enumerate_ideals};
use idealtop::ring::build_ring;
use idealtop::topology::{ClosedSet, FiniteSpace, IdealSpace};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn labels(space: &IdealSpace<'_>, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| space.lattice().label(i)).collect()
}

#[test]
fn subbasic_examples() {
    let (lat, cls) = lattice("Z/12");
    let idl = IdealSpace::whole(&lat);
    let two = index_of_label(&lat, "(2)");
    assert_eq!(labels(&idl, &idl.subbasic_closed(two).members), ["(2)", "(1)"]);
    assert_eq!(idl.subbasic_closed(lat.bottom()).members.len(), lat.len());
    let prm = build_space(&lat, &cls, Family::Prm);
    let six = index_of_label(&lat, "(6)");
    assert_eq!(labels(&prm, &prm.subbasic_closed(six).members), ["(3)", "(2)"]);
}

#[test]
fn closed_set_examples() {
    let (lat, _) = lattice("Z/2");
    assert_eq!(IdealSpace::whole(&lat).all_closed_sets().unwrap().len(), 3);
    let chain = IdealSpace::new(&lat, [0, 1], None);
    let sets: Vec<Vec<usize>> = chain.all_closed_sets().unwrap().into_iter().map(|c| c.members).collect();
    assert_eq!(sets, vec![vec![], vec![1], vec![0, 1]]);
    let (lat, cls) = lattice("Z/30");
    assert_eq!(build_space(&lat, &cls, Family::Max).all_closed_sets().unwrap().len(), 8);
}

#[test]
fn closure_and_generic_points() {
    let (lat, cls) = lattice("Z/12");
    let idl = IdealSpace::whole(&lat);
    assert_eq!(idl.closure(&[lat.bottom()]).unwrap().members.len(), lat.len());
    let two = index_of_label(&lat, "(2)");
    let max = build_space(&lat, &cls, Family::Max);
    assert_eq!(max.closure(&[two]).unwrap().members, vec![two]);
    let prm = build_space(&lat, &cls, Family::Prm);
    let four = index_of_label(&lat, "(4)");
    assert_eq!(labels(&prm, &prm.closure(&[four]).unwrap().members), ["(4)", "(2)"]);
    let c = prm.closure(&[four]).unwrap();
    assert_eq!(prm.generic_point(&c).unwrap(), Some(four));
    let six = index_of_label(&lat, "(6)");
    assert_eq!(prm.generic_point(&prm.subbasic_closed(six)).unwrap(), None);
    let three = index_of_label(&lat, "(3)");
    let pair = ClosedSet { members: vec![three, two] };
    assert_eq!(max.generic_point(&pair).unwrap(), None);
}

#[test]
fn irreducibility_examples() {
    let (lat, cls) = lattice("Z/2 x Z/2");
    let prm = build_space(&lat, &cls, Family::Prm);
    let v = prm.is_irreducible(prm.members()).unwrap();
    assert!(!v.irreducible);
    let (first, second) = v.cover.unwrap();
    assert!(prm.is_closed(&first.members).unwrap() && prm.is_closed(&second.members).unwrap());
    assert!(prm.is_irreducible(&prm.members()[..1]).unwrap().irreducible);
    let (lat4, _) = lattice("Z/4");
    let idl = IdealSpace::whole(&lat4);
    assert!(idl.is_irreducible(idl.members()).unwrap().irreducible);
    assert!(idl.is_irreducible(&[]).is_err());
}

#[test]
fn radical_examples() {
    let (lat, cls) = lattice("Z/12");
    let spec = build_space(&lat, &cls, Family::Spec);
    let r = spec.x_radical(lat.bottom());
    assert_eq!(lat.label(r.ideal), "(6)");
    assert!(!r.empty_family);
    let prm = build_space(&lat, &cls, Family::Prm);
    let four = index_of_label(&lat, "(4)");
    assert_eq!(prm.x_radical(four).ideal, four);
    let empty = prm.x_radical(lat.top());
    assert!(empty.empty_family && empty.ideal == lat.top());
    let (lat4, cls4) = lattice("Z/4");
    assert_eq!(build_space(&lat4, &cls4, Family::Prm).x_radical(0).ideal, 0);
}

#[test]
fn soberness_examples() {
    let (lat, cls) = lattice("Z/2 x Z/2");
    let prm = build_space(&lat, &cls, Family::Prm);
    assert!(prm.is_sober_direct().unwrap().sober);
    assert!(prm.is_sober_criterion().sober);
    let (lat, cls) = lattice("Z/12");
    let prm = build_space(&lat, &cls, Family::Prm);
    assert!(prm.is_sober_direct().unwrap().sober && prm.is_sober_criterion().sober);
    assert!(prm.is_spectral_finite().unwrap().0);
}

#[test]
fn max_and_quasi_compactness_examples() {
    let (lat, cls) = lattice("Z/12");
    assert_eq!(IdealSpace::whole(&lat).max_elements(), vec![lat.top()]);
    let prp = build_space(&lat, &cls, Family::Prp);
    assert_eq!(labels(&prp, &prp.max_elements()), ["(3)", "(2)"]);
    let r = prp.quasi_compactness_report().unwrap();
    assert!(r.qc && r.everyone_below_max && r.max_qc && r.chain_bounds_ok);
    assert_eq!(r.witnesses.len(), prp.len());
    let empty = build_space(&lat, &cls, Family::Reg);
    assert!(empty.is_empty() && empty.max_elements().is_empty());
    assert!(empty.quasi_compactness_report().unwrap().qc);
}

#[test]
fn infimum_examples() {
    let (lat, cls) = lattice("Z/8");
    let prm = build_space(&lat, &cls, Family::Prm);
    let z = [index_of_label(&lat, "(4)"), index_of_label(&lat, "(2)")];
    assert!(prm.lower_directed_infimum_check(&z).unwrap());
    assert!(prm.lower_directed_infimum_check(&z[..1]).unwrap());
    let (lat, cls) = lattice("Z/12");
    let spec = build_space(&lat, &cls, Family::Spec);
    let err = spec.lower_directed_infimum_check(spec.members()).unwrap_err();
    assert!(err.to_string().contains("(3)") && err.to_string().contains("(2)"), "{err}");
}

#[test]
fn whole_lattice_generic_points_are_intersections() {
    for spec in small_corpus(32) {
        let lat = enumerate_ideals(&build_ring(&spec).unwrap()).unwrap();
        let idl = IdealSpace::whole(&lat);
        for c in idl.all_closed_sets().unwrap() {
            if c.members.is_empty() || !idl.is_irreducible(&c.members).unwrap().irreducible {
                continue;
            }
            let meet = lat.intersect_all(c.members.iter().copied());
            assert_eq!(idl.generic_point(&c).unwrap(), Some(meet), "{spec}");
        }
    }
}

/// Up-sets coincide with what unions and intersections of the subbasic
/// closed sets generate.
#[test]
fn closed_sets_match_subbasis_generation() {
    for spec in small_corpus(64) {
        let lat = enumerate_ideals(&build_ring(&spec).unwrap()).unwrap();
        if lat.len() > 16 {
            continue;
        }
        let cls = classify(&lat);
        for f in Family::ALL {
            let space = build_space(&lat, &cls, f);
            assert_eq!(space.all_closed_sets().unwrap(), space.closed_sets_from_subbasis(), "{spec} {f}");
        }
    }
}

#[test]
fn topology_recovers_containment() {
    for spec in small_corpus(64) {
        let lat = enumerate_ideals(&build_ring(&spec).unwrap()).unwrap();
        let cls = classify(&lat);
        for f in Family::ALL {
            let space = build_space(&lat, &cls, f);
            assert!(space.is_t0());
            for &i in space.members() {
                let c = space.closure(&[i]).unwrap();
                assert_eq!(space.generic_point(&c).unwrap(), Some(i));
                for &j in space.members() {
                    assert_eq!(c.members.contains(&j), lat.contains(i, j), "{spec} {f}");
                }
            }
        }
    }
}

/// The pairwise lower-bound test agrees with the closed-cover definition:
/// on every subset of spaces with at most 12 points, and on random subsets
/// of larger spaces.
#[test]
fn irreducibility_tests_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1dea1);
    let mut random_checked = 0;
    for spec in small_corpus(256) {
        let lat = enumerate_ideals(&build_ring(&spec).unwrap()).unwrap();
        let cls = classify(&lat);
        for f in [Family::Idl, Family::Prp, Family::Prm, Family::Prn] {
            let space = build_space(&lat, &cls, f);
            let n = space.len();
            let check = |subset: Vec<usize>| {
                let a = space.is_irreducible(&subset).unwrap().irreducible;
                let b = space.is_irreducible_by_covers(&subset, 1 << 20).unwrap().irreducible;
                assert_eq!(a, b, "{spec} {f} {subset:?}");
            };
            if n <= 12 {
                for mask in 1u32..(1 << n) {
                    check((0..n).filter(|k| mask & (1 << k) != 0).map(|k| space.members()[k]).collect());
                }
            } else if random_checked < 1000 {
                for _ in 0..50 {
                    let s: Vec<usize> = space.members().iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
                    if !s.is_empty() {
                        check(s);
                        random_checked += 1;
                    }
                }
            }
        }
    }
    assert!(random_checked > 0);
}

#[test]
fn adversarial_preorder_fails() {
    let s = FiniteSpace::from_relation(vec!["a".into(), "b".into(), "c".into()], &[(0, 1), (1, 0), (0, 2)]).unwrap();
    let v = s.is_sober_direct().unwrap();
    assert!(!v.sober);
    assert!(s.validate_witness(v.witness.as_ref().unwrap()));
    assert!(!s.spectral_certificate().unwrap().spectral());
}

fn preorder() -> impl Strategy<Value = FiniteSpace> {
    (1usize..8).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..12).prop_map(move |rel| {
            FiniteSpace::from_relation((0..n).map(|i| i.to_string()).collect(), &rel).unwrap()
        })
    })
}

fn subset_of(n: usize, mask: u32) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for k in 0..n {
        if mask & (1 << k) != 0 {
            b.insert(k);
        }
    }
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closure_is_a_closure_operator(s in preorder(), a in any::<u32>(), b in any::<u32>()) {
        let n = s.len();
        let x = subset_of(n, a);
        let mut y = x.clone();
        y.union_with(&subset_of(n, b));
        let cx = s.closure(&x);
        prop_assert!(x.is_subset(&cx));
        prop_assert_eq!(s.closure(&cx), cx.clone());
        prop_assert!(cx.is_subset(&s.closure(&y)));
        prop_assert_eq!(s.is_closed(&x), s.closure(&x) == x);
    }

    #[test]
    fn closed_sets_are_fixed_points(s in preorder()) {
        let closed = s.all_closed_sets().unwrap();
        let n = s.len();
        let fixed = (0u32..(1 << n)).filter(|&m| s.is_closed(&subset_of(n, m))).count();
        prop_assert_eq!(closed.len(), fixed);
        prop_assert!(closed.iter().all(|c| s.is_closed(c)));
    }

    #[test]
    fn sober_iff_t0_on_finite_spaces(s in preorder()) {
        let v = s.is_sober_direct().unwrap();
        prop_assert_eq!(v.sober, s.is_t0());
        if let Some(w) = &v.witness {
            prop_assert!(s.validate_witness(w));
        }
    }

    #[test]
    fn irreducibility_tests_agree_on_preorders(s in preorder(), m in 1u32..) {
        let x = subset_of(s.len(), m);
        prop_assume!(!x.is_clear());
        prop_assert_eq!(
            s.is_irreducible(&x).unwrap().is_irreducible(),
            s.is_irreducible_by_covers(&x, 1 << 20).unwrap().is_irreducible()
        );
    }
}
