use std::sync::Arc;

use hopfcat::fixtures;
use hopfcat::fundamental::{
    build_can, can_inverse, can_ranks, check_antipode_bijective, check_equivalence, coinvariants, counit_bijective,
    dual_hopf_module, fundamental_conditions, integrals, randomized_free_module, recover_antipode, verify_hopf_module,
    HopfModuleData,
};
use hopfcat::{Error, Field, LinMap};

const Q: Field = Field::Rational;

#[test]
fn standard_hopf_modules_verify() {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        let a = Arc::new(a);
        let mut modules = vec![("regular".to_string(), HopfModuleData::regular(a.clone()))];
        for z in 0..a.n() {
            modules.push((format!("M^{z}"), HopfModuleData::m_z(a.clone(), z).unwrap()));
        }
        modules.push(("F(1)".into(), HopfModuleData::free(a.clone(), &vec![1; a.n()]).unwrap()));
        modules.push(("random".into(), randomized_free_module(a.clone(), 7).unwrap()));
        modules.push(("dual".into(), dual_hopf_module(a.clone()).unwrap()));
        for (label, m) in modules {
            let r = verify_hopf_module(&m).unwrap();
            assert!(r.passed(), "{name} {label}\n{}", r.to_text());
        }
    }
}

#[test]
fn trivial_coaction_breaks_compatibility() {
    let a = Arc::new(fixtures::group_algebra(2, Q));
    let mut m = HopfModuleData::regular(a.clone());
    let trivial = LinMap::identity(Q, 2).kron(a.unit(0)).unwrap();
    m.set_coaction(0, 0, trivial).unwrap();
    let r = verify_hopf_module(&m).unwrap();
    assert!(!r.holds("hopf-module-compatibility"));
    let item = r.find("hopf-module-compatibility").next().unwrap();
    assert!(item.witness.is_some());
}

#[test]
fn hopf_modules_need_a_semi_hopf_base() {
    let mut a = fixtures::group_algebra(2, Q);
    a.set_counit(0, 0, LinMap::zero(Q, 1, 2)).unwrap();
    let m = HopfModuleData::regular(Arc::new(a));
    assert!(matches!(verify_hopf_module(&m), Err(Error::Precondition(_))));
}

#[test]
fn closed_form_can_inverse_matches_matrix_inverse() {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        for c in can_ranks(&a) {
            assert!(c.invertible(), "{name}");
            let direct = build_can(&a, c.z, c.x, c.y).unwrap().invert().unwrap();
            assert_eq!(can_inverse(&a, c.z, c.x, c.y).unwrap(), direct, "{name}");
        }
    }
}

#[test]
fn stripped_antipodes_are_recovered_exactly() {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        assert_eq!(recover_antipode(&a.strip_antipode()).unwrap(), a, "{name}");
    }
    // pair groupoid: S(g) = g^{-1}
    let p = fixtures::pair_category(3, Q);
    let s = recover_antipode(&p.strip_antipode()).unwrap();
    assert!(s.antipode(0, 2).unwrap().get(0, 0).is_one());
}

#[test]
fn idempotent_bialgebra_blocks_recovery() {
    let b = fixtures::idempotent_bialgebra(Q);
    let ranks = can_ranks(&b);
    assert_eq!(ranks.len(), 1);
    assert_eq!((ranks[0].rank, ranks[0].rows), (3, 4));
    match recover_antipode(&b) {
        Err(Error::RecoveryFailed { z, x, y, rank, expected }) => {
            assert_eq!((z.as_str(), x.as_str(), y.as_str(), rank, expected), ("*", "*", "*", 3, 4));
        }
        other => panic!("{other:?}"),
    }
    let r = fundamental_conditions(&b).unwrap();
    assert!(r.passed());
    assert!(!r.holds("antipode-recoverable") && !r.holds("free-counit-bijective"));
}

#[test]
fn coinvariant_examples() {
    let kz2 = Arc::new(fixtures::group_algebra(2, Q));
    let free = HopfModuleData::free(kz2.clone(), &[1]).unwrap();
    assert_eq!(coinvariants(&free).unwrap().dims(), vec![1]);
    let reg = coinvariants(&HopfModuleData::regular(kz2.clone())).unwrap();
    assert_eq!(reg.bases[0], vec![kz2.unit_vec(0)]);
    for (name, a) in fixtures::hopf_fixtures(Q) {
        let a = Arc::new(a);
        for z in 0..a.n() {
            let m = HopfModuleData::m_z(a.clone(), z).unwrap();
            let dims = coinvariants(&m).unwrap().dims();
            let expected: Vec<usize> = (0..a.n()).map(|x| a.dim(z, x)).collect();
            assert_eq!(dims, expected, "{name} M^{z}");
        }
    }
}

#[test]
fn free_coinvariant_equivalence() {
    let kz2 = Arc::new(fixtures::group_algebra(2, Q));
    assert!(check_equivalence(&HopfModuleData::regular(kz2)).unwrap().passed());
    let pair = Arc::new(fixtures::pair_category(2, Q));
    for z in 0..2 {
        assert!(check_equivalence(&HopfModuleData::m_z(pair.clone(), z).unwrap()).unwrap().passed());
    }
    let kz3 = Arc::new(fixtures::group_algebra(3, Q));
    for seed in 0..5 {
        let m = randomized_free_module(kz3.clone(), seed).unwrap();
        assert!(check_equivalence(&m).unwrap().passed(), "seed {seed}");
        assert!(counit_bijective(&m).unwrap());
    }
    let a = randomized_free_module(kz3.clone(), 9).unwrap();
    assert_eq!(a, randomized_free_module(kz3, 9).unwrap());
}

#[test]
fn integrals_of_group_algebras_are_one_dimensional() {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        let a = Arc::new(a);
        let co = coinvariants(&dual_hopf_module(a.clone()).unwrap()).unwrap();
        for x in 0..a.n() {
            let i = integrals(a.clone(), x).unwrap();
            assert_eq!(i.basis, co.bases[x], "{name}");
            assert!(i.bijective(), "{name}");
        }
    }
    let i = integrals(Arc::new(fixtures::group_algebra(2, Q)), 0).unwrap();
    assert_eq!(i.basis, vec![vec![Q.one(), Q.zero()]]);
    assert!(matches!(integrals(Arc::new(fixtures::idempotent_bialgebra(Q)), 0), Err(Error::MissingAntipode)));
}

#[test]
fn antipodes_are_bijective() {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        assert!(check_antipode_bijective(&a).unwrap().passed(), "{name}");
        assert!(fundamental_conditions(&a).unwrap().holds("antipode-recoverable"), "{name}");
    }
    let s = fixtures::sweedler(Q).antipode(0, 0).unwrap().clone();
    assert_eq!(s.rank(), 4);
    assert!(!s.compose(&s).unwrap().is_identity());
}
