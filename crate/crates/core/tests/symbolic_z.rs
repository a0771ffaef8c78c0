mod common;

use common::lattice;
use idealtop::ideal::ideal_from_generators;
use idealtop::ring::{build_ring, RingSpec};
use idealtop::zsym::{
    gcd, prm_z_sober_bounded, reg_z_irreducibility_witness, reg_z_not_sober_certificate, z_classify, ZIdeal,
};
use proptest::prelude::*;
use rayon::prelude::*;

/// Bezout coefficients by the extended Euclidean algorithm.
fn bezout(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1, mut x0, mut x1, mut y0, mut y1) = (a, b, 1, 0, 0, 1);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    (r0, x0, y0)
}

#[test]
fn sum_and_intersection_dualities_to_ten_thousand() {
    const N: u64 = 10_000;
    let bad: u64 = (1..=N)
        .into_par_iter()
        .map(|n| {
            let mut bad = 0;
            for m in n..=N {
                let (a, b) = (ZIdeal(n), ZIdeal(m));
                let s = a.sum(b).0;
                let l = a.intersect(b).0;
                let (g, x, y) = bezout(n as i64, m as i64);
                // s generates (n) + (m): it divides both and is a combination of them
                let sum_ok = n % s == 0 && m % s == 0 && g == s as i64 && x * n as i64 + y * m as i64 == g;
                let meet_ok = l % n == 0 && l % m == 0 && l as u128 * s as u128 == n as u128 * m as u128;
                let order_ok = a.is_subset(ZIdeal(s)) && b.is_subset(ZIdeal(s)) && ZIdeal(l).is_subset(a) && ZIdeal(l).is_subset(b);
                let containment_ok = a.is_subset(b) == (n % m == 0) && b.is_subset(a) == (m % n == 0);
                if !(sum_ok && meet_ok && order_ok && containment_ok) {
                    bad += 1;
                }
            }
            bad
        })
        .sum();
    assert_eq!(bad, 0);
}

/// For divisors of a modulus N, the image of nℤ in ℤ/N is the ideal (n):
/// sums, intersections and inclusions computed element by element in
/// ℤ/N match gcd, lcm and divisibility.
#[test]
fn element_level_oracle() {
    for big in [360u64, 720, 210] {
        let r = build_ring(&RingSpec::zmod(big)).unwrap();
        let divisors: Vec<u64> = (1..=big).filter(|d| big % d == 0).collect();
        let ideal = |d: u64| ideal_from_generators(&r, &[d as usize % big as usize]);
        for &n in &divisors {
            for &m in &divisors {
                let s = ideal_from_generators(&r, &[(n % big) as usize, (m % big) as usize]);
                assert_eq!(s, ideal(ZIdeal(n).sum(ZIdeal(m)).0));
                let meet: Vec<usize> = ideal(n).elements().into_iter().filter(|&x| ideal(m).contains(x)).collect();
                assert_eq!(meet, ideal(ZIdeal(n).intersect(ZIdeal(m)).0).elements());
                assert_eq!(ideal(n).is_subset(&ideal(m)), ZIdeal(n).is_subset(ZIdeal(m)));
            }
        }
    }
}

/// nℤ maps onto (n) in ℤ/k when n | k; primary there iff n is a prime power
/// (or n = k and k is one).
#[test]
fn bridge_to_finite_primary_test() {
    for k in 2..=256u64 {
        let (lat, cls) = lattice(&format!("Z/{k}"));
        let r = lat.ring();
        for n in (1..=k).filter(|n| k % n == 0) {
            let image = ideal_from_generators(r, &[(n % k) as usize]);
            let i = lat.index_of(image.members()).unwrap();
            let symbolic = z_classify(ZIdeal(if n == k { 0 } else { n })).unwrap().primary;
            let finite = cls.flags(i).primary;
            if n == k {
                // (0) of ℤ/k: primary iff k is a prime power
                assert_eq!(finite, z_classify(ZIdeal(k)).unwrap().primary, "Z/{k}");
                assert!(symbolic);
            } else {
                assert_eq!(finite, symbolic, "({n}) in Z/{k}");
            }
        }
    }
}

#[test]
fn certificates_at_spec_bounds() {
    let reg = reg_z_not_sober_certificate(100).unwrap();
    assert!(reg.validate());
    assert!(!reg.sober && reg.x_radical_of_zero == 0);
    for bound in [2, 10, 1000] {
        let v = prm_z_sober_bounded(bound).unwrap();
        assert!(v.sober_bounded && v.validate(), "bound {bound}");
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let mut reg = reg_z_not_sober_certificate(50).unwrap();
    reg.refutations[4].prime = 3;
    assert!(!reg.validate());
    let mut reg = reg_z_not_sober_certificate(50).unwrap();
    *reg.irreducible.histogram.get_mut(&3).unwrap() += 1;
    assert!(!reg.validate());
}

proptest! {
    #[test]
    fn witness_never_divides_the_product(n in 2u64..1_000_000, m in 2u64..1_000_000) {
        let p = reg_z_irreducibility_witness(n, m);
        prop_assert!(idealtop::zsym::is_prime(p));
        prop_assert!((n as u128 * m as u128) % p as u128 != 0);
        prop_assert_eq!(gcd(p, n), 1);
    }
}
