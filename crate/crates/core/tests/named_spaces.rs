mod common;

use common::{lattice, small_corpus};
use idealtop::families::{build_space, family_inclusions_report, Family};
use idealtop::ideal::{classify, enumerate_ideals};
use idealtop::ring::build_ring;

fn member_labels(text: &str, f: Family) -> Vec<String> {
    let (lat, cls) = lattice(text);
    f.members(&cls).iter().map(|&i| lat.label(i)).collect()
}

#[test]
fn family_examples() {
    assert_eq!(member_labels("Z/12", Family::Spec), ["(3)", "(2)"]);
    assert_eq!(member_labels("Z/12", Family::Prm), ["(4)", "(3)", "(2)"]);
    assert_eq!(member_labels("Z/12", Family::Spn), member_labels("Z/12", Family::Spec));
    assert_eq!(member_labels("Z/2", Family::Spec), ["(0)"]);
    assert_eq!(member_labels("Z/2", Family::Max), ["(0)"]);
    assert_eq!(member_labels("Z/2 x Z/2", Family::Prm), ["((1,0))", "((0,1))"]);
    assert_eq!(member_labels("Z/4", Family::Prm), ["(0)", "(2)"]);
    assert_eq!(member_labels("Z/4", Family::Prp), ["(0)", "(2)"]);
    assert_eq!(member_labels("Z/12", Family::Min), ["(6)", "(4)"]);
    assert!(member_labels("Z/12", Family::Prn).contains(&"(1)".to_string()));
    assert!(member_labels("Z/12", Family::Reg).is_empty());
}

#[test]
fn fields_are_degenerate() {
    for text in ["Z/2", "Z/7", "GF(2)[x]/(x^2+x+1)"] {
        let (lat, cls) = lattice(text);
        for f in Family::ALL {
            let m = f.members(&cls);
            // minimal nonzero ideals of a field: only R itself
            let expected_min = f == Family::Min && m == [1];
            assert!(m.is_empty() || m == [0] || m == [0, 1] || expected_min, "{text} {f}: {m:?}");
        }
        assert_eq!(lat.len(), 2);
    }
}

#[test]
fn tags_round_trip() {
    for f in Family::ALL {
        assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        assert_eq!(serde_json::to_string(&f).unwrap(), format!("\"{}\"", f.tag()));
    }
    assert!("divisorial".parse::<Family>().is_err());
}

#[test]
fn inclusions_on_corpus() {
    for spec in small_corpus(128) {
        let lat = enumerate_ideals(&build_ring(&spec).unwrap()).unwrap();
        let cls = classify(&lat);
        let inc = family_inclusions_report(&cls);
        assert!(inc.all_hold(), "{spec}: {inc:?}");
        for f in Family::ALL {
            let space = build_space(&lat, &cls, f);
            assert_eq!(space.label(), Some(f));
            assert!(space.members().iter().all(|&i| f.contains(cls.flags(i))));
        }
    }
}
