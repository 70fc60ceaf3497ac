use std::collections::BTreeSet;

use hopfcat::duoidal::{
    bimonoid_from_category, bimonoid_shape, black_tensor, category_from_bimonoid, verify_bimonoid,
    verify_duoidal_units, white_tensor, zeta, BimonoidData, MkXObject,
};
use hopfcat::fixtures;
use hopfcat::{verify_structure, Error, Field, LinMap, Level, Report};

const Q: Field = Field::Rational;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

#[test]
fn unit_objects_under_the_two_products() {
    let j = MkXObject::unit_j(labels(2));
    assert_eq!(white_tensor(&j, &j).unwrap().dims_table(), vec![vec![2, 2], vec![2, 2]]);
    let m = MkXObject::new(labels(2), vec![vec![1, 2], vec![3, 1]]).unwrap();
    let i = MkXObject::unit_i(labels(2));
    assert_eq!(white_tensor(&m, &i).unwrap().dims_table(), m.dims_table());
    assert_eq!(black_tensor(&m, &j).unwrap().dims_table(), m.dims_table());
}

#[test]
fn interchange_on_one_object_is_the_identity() {
    let j = MkXObject::unit_j(labels(1));
    assert_eq!(zeta(Q, &j, &j, &j, &j, 0, 0).unwrap(), LinMap::identity(Q, 1));
}

#[test]
fn duoidal_unit_maps_verify() {
    for n in 1..=4 {
        let r = verify_duoidal_units(Q, &labels(n)).unwrap();
        assert!(r.passed(), "{n}\n{}", r.to_text());
    }
}

#[test]
fn bimonoid_round_trips() {
    let mut all = fixtures::hopf_fixtures(Q);
    all.push(("idempotent", fixtures::idempotent_bialgebra(Q)));
    for (name, a) in all {
        let b = bimonoid_from_category(&a).unwrap();
        assert!(verify_bimonoid(&b).unwrap().passed(), "{name}");
        assert_eq!(category_from_bimonoid(&b).unwrap(), a.strip_antipode(), "{name}");
        assert_eq!(bimonoid_from_category(&category_from_bimonoid(&b).unwrap()).unwrap(), b, "{name}");
    }
}

#[test]
fn hand_built_pair_groupoid_bimonoid_round_trips() {
    let n = 2;
    let carrier = MkXObject::new(labels(n), vec![vec![1; n]; n]).unwrap();
    let mut b = BimonoidData::zero(Q, carrier);
    for x in 0..n {
        for y in 0..n {
            b.mu[x * n + y] = LinMap::from_i64(Q, &[&vec![1; n]]);
            b.delta[x * n + y] = LinMap::from_i64(Q, &[&[1]]);
            b.eps[x * n + y] = LinMap::from_i64(Q, &[&[1]]);
        }
        b.eta[x] = LinMap::from_i64(Q, &[&[1]]);
    }
    assert!(verify_bimonoid(&b).unwrap().passed());
    let a = category_from_bimonoid(&b).unwrap();
    assert_eq!(a.dims_table(), vec![vec![1; n]; n]);
    assert_eq!(bimonoid_from_category(&a).unwrap(), b);
}

fn failing(r: &Report) -> BTreeSet<String> {
    r.failures().map(|i| i.axiom.clone()).collect()
}

#[test]
fn faults_map_across_the_correspondence() {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        let mutants = fixtures::fault_mutants(&a);
        assert_eq!(mutants.len(), 5);
        for (fault, m) in mutants {
            let cat = verify_structure(&m, Level::Semihopf).unwrap();
            let bim = verify_bimonoid(&bimonoid_shape(&m)).unwrap();
            assert!(!cat.passed() && !bim.passed(), "{name}/{fault}");
            assert_eq!(failing(&cat), failing(&bim), "{name}/{fault}");
        }
    }
}

#[test]
fn faulty_comultiplication_fails_with_a_witness() {
    let mut b = bimonoid_from_category(&fixtures::pair_category(2, Q)).unwrap();
    b.delta[1] = b.delta[1].scale(&Q.from_i64(2));
    let r = verify_bimonoid(&b).unwrap();
    assert!(!r.passed());
    assert!(r.failures().any(|i| i.witness.is_some()));
    assert!(matches!(category_from_bimonoid(&b), Err(Error::Precondition(_))));
}
