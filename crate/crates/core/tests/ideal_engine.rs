mod common;

use common::{index_of_label, lattice, ring, small_corpus};
use idealtop::ideal::{
    classify, enumerate_ideals, ideal_from_generators, ideal_product, krull_dimension, principal_ideal,
    radical_of,
};
use idealtop::ring::{build_ring, RingSpec};

#[test]
fn principal_examples() {
    assert_eq!(principal_ideal(&ring("Z/6"), 2).elements(), vec![0, 2, 4]);
    assert_eq!(principal_ideal(&ring("Z/6"), 0).elements(), vec![0]);
    let r = ring("Z/2 x Z/2");
    let e = r.encode(&"(1,0)".parse().unwrap()).unwrap();
    assert_eq!(principal_ideal(&r, e).elements(), vec![r.zero(), e]);
}

#[test]
fn generator_examples() {
    let r = ring("Z/12");
    assert_eq!(ideal_from_generators(&r, &[4, 6]).elements(), vec![0, 2, 4, 6, 8, 10]);
    assert_eq!(ideal_from_generators(&r, &[]).elements(), vec![0]);
    assert_eq!(ideal_from_generators(&r, &[1]).len(), 12);
}

#[test]
fn enumeration_examples() {
    let (lat, _) = lattice("Z/12");
    let labels: Vec<String> = (0..lat.len()).map(|i| lat.label(i)).collect();
    assert_eq!(labels, ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
    assert_eq!(lattice("Z/2").0.len(), 2);
    assert_eq!(lattice("Z/2 x Z/2").0.len(), 4);
}

#[test]
fn radical_and_product_examples() {
    let (lat, cls) = lattice("Z/12");
    let i = |s| index_of_label(&lat, s);
    assert_eq!(radical_of(&lat, i("(4)")), i("(2)"));
    assert_eq!(radical_of(&lat, i("(3)")), i("(3)"));
    assert_eq!(ideal_product(&lat, i("(2)"), i("(3)")), i("(6)"));
    assert_eq!(ideal_product(&lat, i("(4)"), lat.top()), i("(4)"));
    assert_eq!(krull_dimension(&lat, &cls), 0);
    let (lat4, _) = lattice("Z/4");
    assert_eq!(radical_of(&lat4, 0), index_of_label(&lat4, "(2)"));
    let (lat8, _) = lattice("Z/8");
    let i8 = |s| index_of_label(&lat8, s);
    assert_eq!(ideal_product(&lat8, i8("(2)"), i8("(2)")), i8("(4)"));
}

#[test]
fn classification_examples() {
    let (lat, cls) = lattice("Z/4");
    assert!(cls.flags(0).primary && !cls.flags(0).prime);
    assert!(cls.flags(index_of_label(&lat, "(2)")).maximal);

    let (lat, cls) = lattice("Z/2 x Z/2");
    assert!(!cls.flags(lat.bottom()).primary);

    let (lat, cls) = lattice("Z/12");
    let primary: Vec<String> = cls.indices_where(|f| f.primary).iter().map(|&i| lat.label(i)).collect();
    assert_eq!(primary, ["(4)", "(3)", "(2)"]);
    assert!(!cls.flags(index_of_label(&lat, "(6)")).irreducible);

    assert_eq!(krull_dimension(&lattice("Z/2").0, &lattice("Z/2").1), 0);
    let (l, c) = lattice("Z/2 x Z/4");
    assert_eq!(krull_dimension(&l, &c), 0);
}

#[test]
fn enumeration_cap_names_the_variable() {
    let r = ring("Z/2 x Z/2 x Z/2");
    let err = idealtop::ideal::enumerate_ideals_with_cap(&r, 4).err().unwrap();
    assert!(err.to_string().contains("IDEALTOP_IDEAL_CAP"), "{err}");
}

#[test]
fn lattice_laws_on_corpus() {
    for spec in small_corpus(64) {
        let lat = enumerate_ideals(&build_ring(&spec).unwrap()).unwrap();
        let n = lat.len();
        for i in 0..n {
            for j in 0..n {
                let s = lat.sum(i, j);
                let m = lat.intersect(i, j);
                assert_eq!(lat.sum(i, m), i, "{spec}");
                assert_eq!(lat.intersect(i, s), i, "{spec}");
                assert_eq!(s, lat.sum(j, i));
                assert_eq!(m, lat.intersect(j, i));
                assert_eq!(s, lat.sum_by_elements(i, j), "{spec}");
                if n <= 16 {
                    for k in 0..n {
                        assert_eq!(lat.sum(lat.sum(i, j), k), lat.sum(i, lat.sum(j, k)));
                        assert_eq!(lat.intersect(lat.intersect(i, j), k), lat.intersect(i, lat.intersect(j, k)));
                    }
                }
            }
            assert_eq!(lat.sum(i, i), i);
        }
        assert_eq!(lat.ideal(lat.bottom()).len(), 1);
        assert_eq!(lat.ideal(lat.top()).len(), lat.ring().size());
    }
}

#[test]
fn implication_chain_on_corpus() {
    for spec in small_corpus(128) {
        let lat = enumerate_ideals(&build_ring(&spec).unwrap()).unwrap();
        let cls = classify(&lat);
        assert_eq!(krull_dimension(&lat, &cls), 0);
        for (i, f) in cls.all().iter().enumerate() {
            let at = format!("{spec} ideal {}", lat.label(i));
            if f.proper {
                assert!(!f.maximal || f.prime, "{at}");
                assert!(!f.prime || f.primary, "{at}");
                assert!(!f.prime || f.radical, "{at}");
                assert!(!f.primary || f.irreducible, "{at}");
                assert!(!f.strongly_irreducible || f.irreducible, "{at}");
                assert!(!f.completely_irreducible || f.irreducible, "{at}");
            }
            assert_eq!(f.nil, f.nilpotent, "{at}");
            assert!(!f.regular, "{at}");
            assert_eq!(f.finitely_generated, true);
            if f.primary {
                assert!(cls.flags(cls.radical(i)).prime, "{at}");
            }
        }
    }
}

/// Ideals of a product are exactly the products of component ideals, with
/// `(a, b)` encoded as `a + |A|·b`.
#[test]
fn product_ideals_are_componentwise() {
    for (a, b) in [("Z/4", "Z/6"), ("Z/8", "GF(2)[x]/(x^2)"), ("Z/9", "Z/2 x Z/3")] {
        let spec = RingSpec::product(vec![a.parse().unwrap(), b.parse().unwrap()]);
        let (la, lb) = (lattice(a).0, lattice(b).0);
        let lp = enumerate_ideals(&build_ring(&spec).unwrap()).unwrap();
        let width = la.ring().size();
        let mut expected: Vec<Vec<usize>> = Vec::new();
        for i in 0..la.len() {
            for j in 0..lb.len() {
                let mut m: Vec<usize> = la
                    .ideal(i)
                    .elements()
                    .iter()
                    .flat_map(|&x| lb.ideal(j).elements().into_iter().map(move |y| x + width * y))
                    .collect();
                m.sort_unstable();
                expected.push(m);
            }
        }
        expected.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
        let got: Vec<Vec<usize>> = lp.ideals().iter().map(|i| i.elements()).collect();
        assert_eq!(got, expected, "{spec}");
    }
}
