use std::sync::Arc;

use hopfcat::duoidal::bimonoid_shape;
use hopfcat::fixtures;
use hopfcat::format::{parse, write, Document};
use hopfcat::fundamental::HopfModuleData;
use hopfcat::modules::{ComoduleData, ModuleData, Side};
use hopfcat::{dualize, pack, Error, Field, HopfCatData};
use proptest::prelude::*;

fn round_trip(doc: Document, base: Option<Document>) {
    let text = write(&doc);
    let back = parse(&text, &move |_| base.clone().ok_or(Error::Io("no base".into())))
        .unwrap_or_else(|e| panic!("{e}\n{text}"));
    assert_eq!(back, doc);
    assert_eq!(write(&back), text);
}

#[test]
fn every_kind_round_trips() {
    for field in [Field::Rational, Field::prime(5).unwrap()] {
        for (_, a) in fixtures::hopf_fixtures(field) {
            round_trip(Document::HopfCategory(a.clone()), None);
            round_trip(Document::HopfCategory(a.strip_antipode()), None);
            round_trip(Document::DualHopfCategory(dualize(&a).unwrap()), None);
            round_trip(Document::WeakHopf(pack(&a).unwrap()), None);
            round_trip(Document::Bimonoid(bimonoid_shape(&a)), None);
            let arc = Arc::new(a.clone());
            let hd = Some(Document::HopfCategory(a.clone()));
            round_trip(Document::Module { base: "b".into(), data: ModuleData::regular(arc.clone(), Side::Left) }, hd.clone());
            round_trip(
                Document::HopfModule { base: "b".into(), data: HopfModuleData::m_z(arc.clone(), 0).unwrap() },
                hd.clone(),
            );
            let c = dualize(&a).unwrap();
            round_trip(
                Document::Comodule { base: "b".into(), data: ComoduleData::regular(Arc::new(c.clone())) },
                Some(Document::DualHopfCategory(c)),
            );
        }
        round_trip(Document::GradedHopf(fixtures::graded_z2(field, false)), None);
        round_trip(Document::GradedHopf(fixtures::graded_z2(field, true)), None);
    }
    round_trip(Document::Groupoid(fixtures::pair_groupoid(3)), None);
    round_trip(Document::Groupoid(fixtures::disjoint_groupoid()), None);
}

#[test]
fn module_base_must_have_the_right_kind() {
    let a = Arc::new(fixtures::group_algebra(2, Field::Rational));
    let doc = Document::Module { base: "b".into(), data: ModuleData::regular(a, Side::Right) };
    let text = write(&doc);
    let wrong = Document::Groupoid(fixtures::pair_groupoid(2));
    assert!(parse(&text, &move |_| Ok(wrong.clone())).is_err());
}

fn random_category() -> impl Strategy<Value = HopfCatData> {
    (1usize..3, prop::collection::vec(0usize..3, 4)).prop_flat_map(|(n, dims)| {
        let dims: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| dims[x * n + y]).collect()).collect();
        let total: usize = (0..n)
            .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
            .map(|(x, y, z)| dims[x][y] * dims[y][z] * dims[x][z])
            .sum();
        prop::collection::vec((-2i64..=2, 1i64..4), total).prop_map(move |coeffs| {
            let f = Field::Rational;
            let labels = (0..n).map(|i| format!("o{i}")).collect();
            let mut a = HopfCatData::new(f, labels, dims.clone()).unwrap();
            let mut it = coeffs.into_iter();
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for i in 0..dims[x][y] {
                            for j in 0..dims[y][z] {
                                for k in 0..dims[x][z] {
                                    let (num, den) = it.next().unwrap();
                                    a.set_mult_entry(x, y, z, i, j, k, f.ratio(num, den).unwrap()).unwrap();
                                }
                            }
                        }
                    }
                }
            }
            a
        })
    })
}

proptest! {
    #[test]
    fn arbitrary_constants_round_trip(a in random_category()) {
        let doc = Document::HopfCategory(a);
        let text = write(&doc);
        let back = parse(&text, &|_| Err(Error::Io("no base".into()))).unwrap();
        prop_assert_eq!(write(&back), text);
        prop_assert_eq!(back, doc);
    }
}
