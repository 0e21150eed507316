//! Disk diagrams against the standalone classical Khovanov implementation.

mod support;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use support::khovanov::{khovanov, total, Field, FIGURE_EIGHT, HOPF, TREFOIL, UNKNOT_R1};
use tkh_core::diagram::from_pd;
use tkh_core::{homology, HomologyResult, Ring, SkeinDegree};

fn by_hom_quantum(r: &HomologyResult) -> BTreeMap<(u32, i64), usize> {
    let mut out = BTreeMap::new();
    for (key, e) in &r.refined {
        assert_eq!(
            key.skein,
            SkeinDegree::zero(),
            "disk diagrams live in skein degree 0"
        );
        if e.betti > 0 {
            out.insert((key.hom, key.quantum), e.betti);
        }
    }
    out
}

fn even_factors(r: &HomologyResult) -> usize {
    r.table
        .values()
        .flat_map(|e| &e.torsion)
        .filter(|f| (*f % 2u32) == BigInt::from(0))
        .count()
}

fn check(pd: &[[usize; 4]]) -> (HomologyResult, HomologyResult) {
    let diag = from_pd(pd).unwrap();
    let z = homology(&diag, Ring::Z).unwrap();
    let z2 = homology(&diag, Ring::Z2).unwrap();
    let q = khovanov(pd, Field::Rational);
    let f2 = khovanov(pd, Field::Prime(2));
    assert_eq!(by_hom_quantum(&z), q);
    assert_eq!(by_hom_quantum(&z2), f2);
    assert_eq!(total(&f2), total(&q) + 2 * even_factors(&z));
    // No odd torsion on either side.
    assert_eq!(khovanov(pd, Field::Prime(3)), q);
    assert!(z
        .table
        .values()
        .flat_map(|e| &e.torsion)
        .all(|f| f.clone() % 3u32 != BigInt::from(0)));
    (z, z2)
}

#[test]
fn unknot() {
    let (z, z2) = check(UNKNOT_R1);
    assert_eq!(z.total_betti(), 2);
    assert_eq!(z2.total_betti(), 2);
    assert_eq!(total(&khovanov(UNKNOT_R1, Field::Rational)), 2);
}

#[test]
fn hopf_link() {
    let (z, z2) = check(HOPF);
    assert_eq!(total(&khovanov(HOPF, Field::Prime(2))), 4);
    assert_eq!(z2.total_betti(), 4);
    assert_eq!(z.total_betti(), 4);
    assert_eq!(even_factors(&z), 0);
}

#[test]
fn trefoil() {
    let (z, z2) = check(TREFOIL);
    assert_eq!(total(&khovanov(TREFOIL, Field::Rational)), 4);
    assert_eq!(total(&khovanov(TREFOIL, Field::Prime(2))), 6);
    assert_eq!(z.total_betti(), 4);
    let torsion: Vec<BigInt> = z.table.values().flat_map(|e| e.torsion.clone()).collect();
    assert_eq!(torsion, vec![BigInt::from(2)]);
    assert_eq!(z2.total_betti(), 6);
}

#[test]
fn figure_eight() {
    let (z, z2) = check(FIGURE_EIGHT);
    assert_eq!(total(&khovanov(FIGURE_EIGHT, Field::Rational)), 6);
    assert_eq!(total(&khovanov(FIGURE_EIGHT, Field::Prime(2))), 10);
    assert_eq!(z.total_betti(), 6);
    let torsion: Vec<BigInt> = z.table.values().flat_map(|e| e.torsion.clone()).collect();
    assert_eq!(torsion, vec![BigInt::from(2), BigInt::from(2)]);
    assert_eq!(z2.total_betti(), 10);
}
