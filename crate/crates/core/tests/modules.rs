use std::sync::Arc;

use hopfcat::fixtures;
use hopfcat::modules::{
    comodule_to_module, module_to_comodule, tensor_modules, verify_comodule, verify_module, ComoduleData, ModuleData,
    Side,
};
use hopfcat::{dualize, Field, LinMap};

const Q: Field = Field::Rational;

#[test]
fn regular_and_unit_modules_pass_on_both_sides() {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        let a = Arc::new(a);
        for side in [Side::Left, Side::Right] {
            assert!(verify_module(&ModuleData::regular(a.clone(), side)).passed(), "{name} regular {side}");
            assert!(verify_module(&ModuleData::unit_object(a.clone(), side)).passed(), "{name} J {side}");
        }
    }
}

#[test]
fn regular_comodules_pass() {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        let c = Arc::new(dualize(&a).unwrap());
        assert!(verify_comodule(&ComoduleData::regular(c)).passed(), "{name}");
    }
}

#[test]
fn zero_action_fails_the_unit_law() {
    let a = Arc::new(fixtures::group_algebra(2, Q));
    let mut m = ModuleData::regular(a, Side::Right);
    m.set_action(0, 0, 0, LinMap::zero(Q, 2, 4)).unwrap();
    let r = verify_module(&m);
    assert!(!r.holds("module-unit"));
    assert!(r.failures().all(|i| i.witness.is_some()));
}

#[test]
fn tensor_products_of_modules() {
    for (name, a) in [("kz2", fixtures::group_algebra(2, Q)), ("pair2", fixtures::pair_category(2, Q))] {
        let a = Arc::new(a);
        for side in [Side::Left, Side::Right] {
            let m = ModuleData::regular(a.clone(), side);
            let mm = tensor_modules(&m, &m).unwrap();
            assert!(verify_module(&mm).passed(), "{name} {side}");
            let expected: Vec<Vec<usize>> =
                m.dims_table().iter().map(|row| row.iter().map(|d| d * d).collect()).collect();
            assert_eq!(mm.dims_table(), expected);
            // M ⊗ J has M's dimensions and, under M ⊗ k = M, M's action.
            let mj = tensor_modules(&m, &ModuleData::unit_object(a.clone(), side)).unwrap();
            assert_eq!(mj.dims_table(), m.dims_table());
            assert_eq!(mj, m, "{name} {side}");
        }
    }
    assert_eq!(
        tensor_modules(
            &ModuleData::regular(Arc::new(fixtures::group_algebra(2, Q)), Side::Right),
            &ModuleData::regular(Arc::new(fixtures::group_algebra(2, Q)), Side::Right)
        )
        .unwrap()
        .dim(0, 0),
        4
    );
}

#[test]
fn comodule_module_correspondence_round_trips() {
    let mut all = fixtures::hopf_fixtures(Q);
    all.push(("idempotent", fixtures::idempotent_bialgebra(Q)));
    for (name, a) in all {
        let a = Arc::new(a);
        let rm = ModuleData::regular(a.clone(), Side::Right);
        let co = module_to_comodule(&rm).unwrap();
        assert!(verify_comodule(&co).passed(), "{name}");
        assert_eq!(comodule_to_module(&co).unwrap(), rm, "{name}");

        let c = ComoduleData::regular(Arc::new(dualize(&a).unwrap()));
        let m = comodule_to_module(&c).unwrap();
        assert!(verify_module(&m).passed(), "{name}");
        assert_eq!(module_to_comodule(&m).unwrap(), c, "{name}");
    }
}

#[test]
fn left_modules_have_no_comodule_counterpart() {
    let m = ModuleData::regular(Arc::new(fixtures::group_algebra(2, Q)), Side::Left);
    assert!(module_to_comodule(&m).is_err());
}
