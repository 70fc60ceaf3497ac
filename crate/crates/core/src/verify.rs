//! Axiom verification for [`HopfCatData`].
//!
//! Every identity is checked on each basis element of its domain; by linearity
//! this decides the identity exactly.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::category::{multi_indices, tuples, HopfCatData};
use crate::report::{Check, Report, ReportItem};
use crate::scalar::Field;
use crate::tensor::{SparseMap, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Category,
    Semihopf,
    Hopf,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Level> {
        match s {
            "category" => Ok(Level::Category),
            "semihopf" => Ok(Level::Semihopf),
            "hopf" => Ok(Level::Hopf),
            _ => Err(Error::Precondition(format!("unknown level `{s}`"))),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Category => "category",
            Level::Semihopf => "semihopf",
            Level::Hopf => "hopf",
        })
    }
}

/// Sparse views of every structure map, built once per check.
pub(crate) struct Views {
    pub n: usize,
    pub field: Field,
    dims: Vec<usize>,
    mult: Vec<SparseMap>,
    unit: Vec<Tensor>,
    comult: Vec<SparseMap>,
    counit: Vec<SparseMap>,
    antipode: Option<Vec<SparseMap>>,
}

impl Views {
    pub fn new(a: &HopfCatData) -> Self {
        let n = a.n();
        let mut mult = Vec::with_capacity(n * n * n);
        for t in tuples(n, 3) {
            let (x, y, z) = (t[0], t[1], t[2]);
            mult.push(SparseMap::new(a.mult(x, y, z), &[a.dim(x, y), a.dim(y, z)], &[a.dim(x, z)]));
        }
        let unit = (0..n).map(|x| Tensor::from_vec(a.field(), &a.unit_vec(x))).collect();
        let mut comult = Vec::with_capacity(n * n);
        let mut counit = Vec::with_capacity(n * n);
        for t in tuples(n, 2) {
            let d = a.dim(t[0], t[1]);
            comult.push(SparseMap::new(a.comult(t[0], t[1]), &[d], &[d, d]));
            counit.push(SparseMap::new(a.counit(t[0], t[1]), &[d], &[]));
        }
        let antipode = a.has_antipode().then(|| {
            tuples(n, 2)
                .map(|t| {
                    let s = a.antipode(t[0], t[1]).expect("present");
                    SparseMap::new(s, &[a.dim(t[0], t[1])], &[a.dim(t[1], t[0])])
                })
                .collect()
        });
        Views { n, field: a.field(), dims: (0..n * n).map(|i| a.dim(i / n, i % n)).collect(), mult, unit, comult, counit, antipode }
    }

    pub fn d(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.n + y]
    }
    pub fn m(&self, x: usize, y: usize, z: usize) -> &SparseMap {
        &self.mult[(x * self.n + y) * self.n + z]
    }
    pub fn one(&self, x: usize) -> &Tensor {
        &self.unit[x]
    }
    pub fn delta(&self, x: usize, y: usize) -> &SparseMap {
        &self.comult[x * self.n + y]
    }
    pub fn eps(&self, x: usize, y: usize) -> &SparseMap {
        &self.counit[x * self.n + y]
    }
    pub fn s(&self, x: usize, y: usize) -> &SparseMap {
        &self.antipode.as_ref().expect("antipode present")[x * self.n + y]
    }
    pub fn basis(&self, dims: &[usize], idx: &[usize]) -> Tensor {
        Tensor::basis(self.field, dims, idx)
    }
}

/// Check `A` at the requested level. Errors only on a missing antipode at level hopf.
pub fn verify_structure(a: &HopfCatData, level: Level) -> Result<Report> {
    if level == Level::Hopf && !a.has_antipode() {
        return Err(Error::MissingAntipode);
    }
    let v = Views::new(a);
    let mut r = Report::new();
    category_axioms(a, &v, &mut r);
    if level >= Level::Semihopf {
        coalgebra_axioms(a, &v, &mut r);
        enrichment_axioms(a, &v, &mut r);
    }
    if level == Level::Hopf {
        antipode_axioms(a, &v, &mut r);
    }
    Ok(r)
}

fn category_axioms(a: &HopfCatData, v: &Views, r: &mut Report) {
    let n = v.n;
    for t in tuples(n, 4) {
        let (x, y, z, u) = (t[0], t[1], t[2], t[3]);
        let dims = [v.d(x, y), v.d(y, z), v.d(z, u)];
        let mut c = Check::new("associativity", &a.labels(&t));
        for idx in multi_indices(&dims) {
            let b = v.basis(&dims, &idx);
            let lhs = b.apply(0, v.m(x, y, z)).apply(0, v.m(x, z, u));
            let rhs = b.apply(1, v.m(y, z, u)).apply(0, v.m(x, y, u));
            c.compare(&idx, &lhs, &rhs);
        }
        r.push(c.finish());
    }
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = v.d(x, y);
        let mut left = Check::new("left-unit", &a.labels(&t));
        let mut right = Check::new("right-unit", &a.labels(&t));
        for i in 0..d {
            let b = v.basis(&[d], &[i]);
            left.compare(&[i], &v.one(x).tensor(&b).apply(0, v.m(x, x, y)), &b);
            right.compare(&[i], &b.tensor(v.one(y)).apply(0, v.m(x, y, y)), &b);
        }
        r.push(left.finish());
        r.push(right.finish());
    }
}

fn coalgebra_axioms(a: &HopfCatData, v: &Views, r: &mut Report) {
    for t in tuples(v.n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = v.d(x, y);
        let labels = a.labels(&t);
        let mut coassoc = Check::new("coassociativity", &labels);
        let mut left = Check::new("left-counit", &labels);
        let mut right = Check::new("right-counit", &labels);
        for i in 0..d {
            let b = v.basis(&[d], &[i]);
            let dh = b.apply(0, v.delta(x, y));
            coassoc.compare(&[i], &dh.apply(0, v.delta(x, y)), &dh.apply(1, v.delta(x, y)));
            left.compare(&[i], &dh.apply(0, v.eps(x, y)), &b);
            right.compare(&[i], &dh.apply(1, v.eps(x, y)), &b);
        }
        r.push(coassoc.finish());
        r.push(left.finish());
        r.push(right.finish());
    }
}

fn enrichment_axioms(a: &HopfCatData, v: &Views, r: &mut Report) {
    for t in tuples(v.n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let dims = [v.d(x, y), v.d(y, z)];
        let labels = a.labels(&t);
        let mut delta_m = Check::new("comult-multiplicative", &labels);
        let mut eps_m = Check::new("counit-multiplicative", &labels);
        for idx in multi_indices(&dims) {
            let b = v.basis(&dims, &idx);
            let prod = b.apply(0, v.m(x, y, z));
            let lhs = prod.apply(0, v.delta(x, z));
            let rhs = b
                .apply(1, v.delta(y, z))
                .apply(0, v.delta(x, y))
                .permute(&[0, 2, 1, 3])
                .apply(0, v.m(x, y, z))
                .apply(1, v.m(x, y, z));
            delta_m.compare(&idx, &lhs, &rhs);
            let lhs = prod.apply(0, v.eps(x, z));
            let rhs = b.apply(0, v.eps(x, y)).apply(0, v.eps(y, z));
            eps_m.compare(&idx, &lhs, &rhs);
        }
        r.push(delta_m.finish());
        r.push(eps_m.finish());
    }
    for x in 0..v.n {
        let labels = a.labels(&[x]);
        let one = v.one(x);
        let mut c = Check::new("comult-unit", &labels);
        c.compare(&[], &one.apply(0, v.delta(x, x)), &one.tensor(one));
        r.push(c.finish());
        let mut c = Check::new("counit-unit", &labels);
        c.compare(&[], &one.apply(0, v.eps(x, x)), &Tensor::scalar(v.field.one()));
        r.push(c.finish());
    }
}

fn antipode_axioms(a: &HopfCatData, v: &Views, r: &mut Report) {
    for t in tuples(v.n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = v.d(x, y);
        let labels = a.labels(&t);
        let mut left = Check::new("antipode-left", &labels);
        let mut right = Check::new("antipode-right", &labels);
        for i in 0..d {
            let b = v.basis(&[d], &[i]);
            let dh = b.apply(0, v.delta(x, y));
            let eps = b.apply(0, v.eps(x, y)).as_scalar();
            let lhs = dh.apply(1, v.s(x, y)).apply(0, v.m(x, y, x));
            left.compare(&[i], &lhs, &v.one(x).scale(&eps));
            let lhs = dh.apply(0, v.s(x, y)).apply(0, v.m(y, x, y));
            right.compare(&[i], &lhs, &v.one(y).scale(&eps));
        }
        r.push(left.finish());
        r.push(right.finish());
    }
}

/// Consequences of the antipode axioms: anti-(co)multiplicativity and the three
/// equivalent involutivity conditions per pair, plus a check that those agree.
pub fn check_antipode_theorems(a: &HopfCatData) -> Result<Report> {
    let pre = verify_structure(a, Level::Hopf)?;
    if !pre.passed() {
        return Err(Error::Precondition("input does not pass level hopf".into()));
    }
    let v = Views::new(a);
    let mut r = Report::new();
    for t in tuples(v.n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let dims = [v.d(x, y), v.d(y, z)];
        let mut c = Check::new("antipode-anti-multiplicative", &a.labels(&t));
        for idx in multi_indices(&dims) {
            let b = v.basis(&dims, &idx);
            let lhs = b.apply(0, v.m(x, y, z)).apply(0, v.s(x, z));
            let rhs = b.permute(&[1, 0]).apply(0, v.s(y, z)).apply(1, v.s(x, y)).apply(0, v.m(z, y, x));
            c.compare(&idx, &lhs, &rhs);
        }
        r.push(c.finish());
    }
    for x in 0..v.n {
        let mut c = Check::new("antipode-unit", &a.labels(&[x]));
        c.compare(&[], &v.one(x).apply(0, v.s(x, x)), v.one(x));
        r.push(c.finish());
    }
    for t in tuples(v.n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = v.d(x, y);
        let labels = a.labels(&t);
        let mut anti = Check::new("antipode-anti-comultiplicative", &labels);
        let mut counit = Check::new("antipode-counit", &labels);
        let mut inv_left = Check::new("involutivity-left", &labels);
        let mut inv_right = Check::new("involutivity-right", &labels);
        let mut inv = Check::new("involutivity", &labels);
        for i in 0..d {
            let b = v.basis(&[d], &[i]);
            let dh = b.apply(0, v.delta(x, y));
            let sh = b.apply(0, v.s(x, y));
            let eps = b.apply(0, v.eps(x, y));
            anti.compare(&[i], &sh.apply(0, v.delta(y, x)), &dh.permute(&[1, 0]).apply(0, v.s(x, y)).apply(1, v.s(x, y)));
            counit.compare(&[i], &sh.apply(0, v.eps(y, x)), &eps);
            let e = eps.as_scalar();
            let lhs = dh.permute(&[1, 0]).apply(0, v.s(x, y)).apply(0, v.m(y, x, y));
            inv_left.compare(&[i], &lhs, &v.one(y).scale(&e));
            let lhs = dh.apply(0, v.s(x, y)).permute(&[1, 0]).apply(0, v.m(x, y, x));
            inv_right.compare(&[i], &lhs, &v.one(x).scale(&e));
            inv.compare(&[i], &sh.apply(0, v.s(y, x)), &b);
        }
        r.push(anti.finish());
        r.push(counit.finish());
        let items = [inv_left.finish(), inv_right.finish(), inv.finish()];
        let agree = items.iter().all(|i| i.holds == items[0].holds);
        let detail = format!(
            "left={} right={} square={}",
            items[0].holds, items[1].holds, items[2].holds
        );
        for item in items {
            r.push(item.informational());
        }
        r.push(ReportItem::verdict("involutivity-conditions-agree", &labels, agree, Some(detail)));
    }
    Ok(r)
}

/// Outcome of the strictness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strictness {
    /// Every `m_{x,y,z}` is surjective.
    pub all_triples: bool,
    /// Every `m_{x,y,x}` is surjective.
    pub loops: bool,
    pub report: Report,
}

impl Strictness {
    pub fn strict(&self) -> bool {
        self.all_triples
    }
}

/// Surjectivity of composition by rank, over all triples and over loops only.
pub fn check_strictness(a: &HopfCatData) -> Strictness {
    let n = a.n();
    let mut report = Report::new();
    let mut all_triples = true;
    let mut loops = true;
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let rank = a.mult(x, y, z).rank();
        let target = a.dim(x, z);
        let ok = rank == target;
        all_triples &= ok;
        if x == z {
            loops &= ok;
        }
        report.push(
            ReportItem::verdict("composition-surjective", &a.labels(&t), ok, Some(format!("rank {rank} of {target}")))
                .informational(),
        );
    }
    let none: [&str; 0] = [];
    report.push(ReportItem::verdict("strict-all-triples", &none, all_triples, None).informational());
    report.push(ReportItem::verdict("strict-loops", &none, loops, None).informational());
    report.push(ReportItem::verdict(
        "strictness-conditions-agree",
        &none,
        all_triples == loops,
        Some(format!("all-triples={all_triples} loops={loops}")),
    ));
    Strictness { all_triples, loops, report }
}
