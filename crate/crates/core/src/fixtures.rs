//! Small named structures used by the test suites and the bundled fixture files.

use crate::error::Result;
use crate::graded::{from_graded, GradedHopfData};
use crate::groupoid::{linearize_groupoid, GroupoidData};
use crate::category::HopfCatData;
use crate::linalg::LinMap;
use crate::scalar::Field;

/// Pair groupoid on objects `1..=n`.
pub fn pair_groupoid(n: usize) -> GroupoidData {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    GroupoidData::pair(&refs)
}

/// `Z/2` on object `1` disjoint from the trivial group on object `2`.
pub fn disjoint_groupoid() -> GroupoidData {
    let z2 = GroupoidData::group("1", &["e1", "s"], &[vec![0, 1], vec![1, 0]]);
    let triv = GroupoidData::group("2", &["e2"], &[vec![0]]);
    z2.disjoint_union(&triv)
}

pub fn cyclic_group(n: usize) -> GroupoidData {
    GroupoidData::cyclic("*", n)
}

pub fn group_algebra(n: usize, field: Field) -> HopfCatData {
    linearize_groupoid(&cyclic_group(n), field).expect("cyclic groups are groupoids")
}

pub fn pair_category(n: usize, field: Field) -> HopfCatData {
    linearize_groupoid(&pair_groupoid(n), field).expect("pair groupoids are groupoids")
}

pub fn disjoint_category(field: Field) -> HopfCatData {
    linearize_groupoid(&disjoint_groupoid(), field).expect("valid groupoid")
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = -gx`, `g` grouplike, `Δx = x⊗1 + g⊗x`,
/// `S(x) = -gx`, `S(gx) = x`. Requires characteristic other than 2.
pub fn sweedler(field: Field) -> HopfCatData {
    const ONE: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let mut a = HopfCatData::new(field, vec!["*".into()], vec![vec![4]]).expect("shape");
    let products: [(usize, usize, usize, i64); 12] = [
        (ONE, ONE, ONE, 1),
        (ONE, G, G, 1),
        (ONE, X, X, 1),
        (ONE, GX, GX, 1),
        (G, ONE, G, 1),
        (G, G, ONE, 1),
        (G, X, GX, 1),
        (G, GX, X, 1),
        (X, ONE, X, 1),
        (X, G, GX, -1),
        (GX, ONE, GX, 1),
        (GX, G, X, -1),
    ];
    for (i, j, k, v) in products {
        a.set_mult_entry(0, 0, 0, i, j, k, field.from_i64(v)).expect("in range");
    }
    a.set_unit_entry(0, ONE, field.one()).expect("in range");
    let coproducts = [
        (ONE, ONE, ONE),
        (G, G, G),
        (X, X, ONE),
        (X, G, X),
        (GX, GX, G),
        (GX, ONE, GX),
    ];
    for (i, j, k) in coproducts {
        a.set_comult_entry(0, 0, i, j, k, field.one()).expect("in range");
    }
    a.set_counit_entry(0, 0, ONE, field.one()).expect("in range");
    a.set_counit_entry(0, 0, G, field.one()).expect("in range");
    for (i, j, v) in [(ONE, ONE, 1), (G, G, 1), (X, GX, -1), (GX, X, 1)] {
        a.set_antipode_entry(0, 0, i, j, field.from_i64(v)).expect("in range");
    }
    a
}

/// The monoid bialgebra `k{1, z}` with `z² = z`, `z` grouplike. It has no antipode.
pub fn idempotent_bialgebra(field: Field) -> HopfCatData {
    let mut a = HopfCatData::new(field, vec!["*".into()], vec![vec![2]]).expect("shape");
    for (i, j, k) in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)] {
        a.set_mult_entry(0, 0, 0, i, j, k, field.one()).expect("in range");
    }
    a.set_unit_entry(0, 0, field.one()).expect("in range");
    for i in 0..2 {
        a.set_comult_entry(0, 0, i, i, i, field.one()).expect("in range");
        a.set_counit_entry(0, 0, i, field.one()).expect("in range");
    }
    a
}

/// Candidate antipodes for the idempotent bialgebra, as `(name, matrix)`; each must be rejected.
pub fn idempotent_candidates(field: Field) -> Vec<(&'static str, LinMap)> {
    vec![
        ("identity", LinMap::from_i64(field, &[&[1, 0], &[0, 1]])),
        ("kill-z", LinMap::from_i64(field, &[&[1, 0], &[0, 0]])),
        ("z-to-one", LinMap::from_i64(field, &[&[1, 1], &[0, 0]])),
    ]
}

/// `Z/2`-graded algebra with one-dimensional components, all structure constants 1
/// (the group algebra viewed as graded). When `zero_odd` is set, the odd component is zero.
pub fn graded_z2(field: Field, zero_odd: bool) -> GradedHopfData {
    let dims = if zero_odd { vec![1, 0] } else { vec![1, 1] };
    let mut h = GradedHopfData::new(field, vec!["e".into(), "s".into()], 0, vec![0, 1, 1, 0], dims.clone())
        .expect("shape");
    for s in 0..2 {
        for t in 0..2 {
            let st = h.mul(s, t);
            if dims[s] == 1 && dims[t] == 1 {
                h.mult[s * 2 + t] = LinMap::from_i64(field, &[&[1]]);
            } else {
                h.mult[s * 2 + t] = LinMap::zero(field, dims[st], dims[s] * dims[t]);
            }
        }
    }
    h.unit = LinMap::from_i64(field, &[&[1]]);
    let mut anti = Vec::new();
    for s in 0..2 {
        if dims[s] == 1 {
            h.comult[s] = LinMap::from_i64(field, &[&[1]]);
            h.counit[s] = LinMap::from_i64(field, &[&[1]]);
            anti.push(LinMap::from_i64(field, &[&[1]]));
        } else {
            anti.push(LinMap::zero(field, 0, 0));
        }
    }
    h.antipode = Some(anti);
    h
}

/// A one-object Hopf category viewed as graded by the trivial group.
pub fn trivially_graded(a: &HopfCatData) -> Result<GradedHopfData> {
    let d = a.dim(0, 0);
    let mut h = GradedHopfData::new(a.field(), vec!["e".into()], 0, vec![0], vec![d])?;
    h.mult[0] = a.mult(0, 0, 0).clone();
    h.unit = a.unit(0).clone();
    h.comult[0] = a.comult(0, 0).clone();
    h.counit[0] = a.counit(0, 0).clone();
    h.antipode = a.antipode(0, 0).map(|s| vec![s.clone()]);
    Ok(h)
}

pub fn strongly_graded_category(field: Field) -> HopfCatData {
    from_graded(&graded_z2(field, false)).expect("valid graded fixture")
}

pub fn zero_component_category(field: Field) -> HopfCatData {
    from_graded(&graded_z2(field, true)).expect("valid graded fixture")
}

/// Every Hopf fixture, by name.
pub fn hopf_fixtures(field: Field) -> Vec<(&'static str, HopfCatData)> {
    vec![
        ("kz2", group_algebra(2, field)),
        ("kz3", group_algebra(3, field)),
        ("pair2", pair_category(2, field)),
        ("pair3", pair_category(3, field)),
        ("disjoint", disjoint_category(field)),
        ("sweedler", sweedler(field)),
        ("graded-strong", strongly_graded_category(field)),
        ("graded-zero", zero_component_category(field)),
    ]
}

/// Five single-fault corruptions of `A` at the hom object `A_{x,x}` of its first object,
/// antipode removed. Used to test that checks on both sides of a correspondence fail together.
pub fn fault_mutants(a: &HopfCatData) -> Vec<(&'static str, HopfCatData)> {
    let f = a.field();
    let base = a.strip_antipode();
    let d = a.dim(0, 0);
    let two = f.from_i64(2);
    let mut out = Vec::new();

    let mut m = base.clone();
    m.set_unit(0, a.unit(0).scale(&two)).expect("shape");
    out.push(("unit-scaled", m));

    let mut m = base.clone();
    m.set_counit(0, 0, LinMap::zero(f, 1, d)).expect("shape");
    out.push(("counit-zeroed", m));

    let mut m = base.clone();
    m.set_comult(0, 0, a.comult(0, 0).scale(&two)).expect("shape");
    out.push(("comult-doubled", m));

    let mut m = base.clone();
    let mut mult = a.mult(0, 0, 0).clone();
    for r in 0..d {
        mult.set(r, 0, f.zero());
    }
    m.set_mult(0, 0, 0, mult).expect("shape");
    out.push(("first-product-zeroed", m));

    let mut m = base;
    let mut comult = a.comult(0, 0).clone();
    comult.add_to(d - 1, d - 1, &f.one());
    m.set_comult(0, 0, comult).expect("shape");
    out.push(("comult-twisted", m));
    out
}
