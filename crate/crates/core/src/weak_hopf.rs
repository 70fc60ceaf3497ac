//! Weak Hopf algebras obtained by packing all hom objects into one space.
//!
//! `pack(A)` is `⊕_{x,y} A_{x,y}` with `hk = 0` unless the blocks compose;
//! `pack_dual(C)` is `⊕_{x,y} C_{x,y}` with componentwise multiplication and
//! `Δ(h) = Σ_y Δ_{x,y,z}(h)`. Blocks are ordered lexicographically in `(x, y)`.

use crate::dual::DualHopfCatData;
use crate::error::{Error, Result};
use crate::category::{tuples, HopfCatData};
use crate::linalg::LinMap;
use crate::report::{Check, Report, ReportItem};
use crate::scalar::{Field, Scalar};
use crate::tensor::{SparseMap, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub x: usize,
    pub y: usize,
    pub offset: usize,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakHopfData {
    pub field: Field,
    pub objects: Vec<String>,
    pub total_dim: usize,
    pub blocks: Vec<Block>,
    /// `N x N²`.
    pub mult: LinMap,
    /// `N x 1`.
    pub unit: LinMap,
    /// `N² x N`.
    pub comult: LinMap,
    /// `1 x N`.
    pub counit: LinMap,
    /// `N x N`.
    pub antipode: LinMap,
}

impl WeakHopfData {
    pub fn zero(field: Field, objects: Vec<String>, blocks: Vec<Block>, total_dim: usize) -> Self {
        let n = total_dim;
        WeakHopfData {
            field,
            objects,
            total_dim,
            blocks,
            mult: LinMap::zero(field, n, n * n),
            unit: LinMap::zero(field, n, 1),
            comult: LinMap::zero(field, n * n, n),
            counit: LinMap::zero(field, 1, n),
            antipode: LinMap::zero(field, n, n),
        }
    }

    /// Blocks must tile `[0, total_dim)` in order and refer to declared objects.
    pub fn check_blocks(&self) -> Result<()> {
        let mut next = 0;
        for b in &self.blocks {
            if b.x >= self.objects.len() || b.y >= self.objects.len() {
                return Err(Error::Malformed("block refers to an undeclared object".into()));
            }
            if b.offset != next {
                return Err(Error::Malformed(format!("block ({}, {}) starts at {} instead of {next}", b.x, b.y, b.offset)));
            }
            next += b.length;
        }
        if next != self.total_dim {
            return Err(Error::Malformed(format!("blocks cover {next} of {} coordinates", self.total_dim)));
        }
        let n = self.total_dim;
        let shapes = [
            (&self.mult, n, n * n),
            (&self.unit, n, 1),
            (&self.comult, n * n, n),
            (&self.counit, 1, n),
            (&self.antipode, n, n),
        ];
        if shapes.iter().any(|(m, r, c)| (m.rows(), m.cols()) != (*r, *c) || m.field() != self.field) {
            return Err(Error::Malformed("weak Hopf structure map has the wrong shape".into()));
        }
        Ok(())
    }

    fn block_of(&self, i: usize) -> &Block {
        self.blocks.iter().find(|b| i >= b.offset && i < b.offset + b.length).expect("blocks tile")
    }

    /// `Δ(1)` as a dense `N²` vector.
    pub fn delta_one(&self) -> Vec<Scalar> {
        self.comult.apply(&self.unit.col_vec(0)).expect("shapes checked")
    }

    /// `ε(h k)` for basis elements, as an `N x N` matrix.
    fn counit_form(&self) -> LinMap {
        let n = self.total_dim;
        let row = self.counit.compose(&self.mult).expect("shapes checked");
        LinMap::new(self.field, n, n, row.entries().to_vec()).expect("square")
    }

    /// Target counital map `ε_t(h) = ε(1_(1) h) 1_(2)`.
    pub fn eps_t(&self) -> LinMap {
        let n = self.total_dim;
        let d1 = self.delta_one();
        let b = self.counit_form();
        let mut out = LinMap::zero(self.field, n, n);
        for a in 0..n {
            for c in 0..n {
                let coeff = &d1[a * n + c];
                if coeff.is_zero() {
                    continue;
                }
                for h in 0..n {
                    let v = b.get(a, h);
                    if !v.is_zero() {
                        out.add_to(c, h, &(coeff * v));
                    }
                }
            }
        }
        out
    }

    /// Source counital map `ε_s(h) = 1_(1) ε(h 1_(2))`.
    pub fn eps_s(&self) -> LinMap {
        let n = self.total_dim;
        let d1 = self.delta_one();
        let b = self.counit_form();
        let mut out = LinMap::zero(self.field, n, n);
        for a in 0..n {
            for c in 0..n {
                let coeff = &d1[a * n + c];
                if coeff.is_zero() {
                    continue;
                }
                for h in 0..n {
                    let v = b.get(h, c);
                    if !v.is_zero() {
                        out.add_to(a, h, &(coeff * v));
                    }
                }
            }
        }
        out
    }
}

fn offsets(blocks: &[Block], n: usize) -> Vec<usize> {
    let mut off = vec![0; n * n];
    for b in blocks {
        off[b.x * n + b.y] = b.offset;
    }
    off
}

fn lex_blocks(n: usize, dim: impl Fn(usize, usize) -> usize) -> (Vec<Block>, usize) {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for t in tuples(n, 2) {
        let length = dim(t[0], t[1]);
        blocks.push(Block { x: t[0], y: t[1], offset, length });
        offset += length;
    }
    (blocks, offset)
}

pub fn pack(a: &HopfCatData) -> Result<WeakHopfData> {
    if !a.has_antipode() {
        return Err(Error::MissingAntipode);
    }
    let n = a.n();
    let (blocks, total) = lex_blocks(n, |x, y| a.dim(x, y));
    let off = offsets(&blocks, n);
    let o = |x: usize, y: usize| off[x * n + y];
    let mut w = WeakHopfData::zero(a.field(), a.objects().to_vec(), blocks, total);
    for t in tuples(n, 3) {
        let (x, y, u) = (t[0], t[1], t[2]);
        for i in 0..a.dim(x, y) {
            for j in 0..a.dim(y, u) {
                for k in 0..a.dim(x, u) {
                    let v = a.mult_coeff(x, y, u, i, j, k);
                    if !v.is_zero() {
                        w.mult.set(o(x, u) + k, (o(x, y) + i) * total + o(y, u) + j, v.clone());
                    }
                }
            }
        }
    }
    for x in 0..n {
        for (i, v) in a.unit_vec(x).into_iter().enumerate() {
            w.unit.set(o(x, x) + i, 0, v);
        }
    }
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = a.dim(x, y);
        let base = o(x, y);
        let s = a.require_antipode(x, y)?;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = a.comult_coeff(x, y, i, j, k);
                    if !v.is_zero() {
                        w.comult.set((base + j) * total + base + k, base + i, v.clone());
                    }
                }
            }
            w.counit.set(0, base + i, a.counit(x, y).get(0, i).clone());
            for j in 0..a.dim(y, x) {
                w.antipode.set(o(y, x) + j, base + i, s.get(j, i).clone());
            }
        }
    }
    Ok(w)
}

pub fn pack_dual(c: &DualHopfCatData) -> Result<WeakHopfData> {
    if !c.has_antipode() {
        return Err(Error::MissingAntipode);
    }
    let n = c.n();
    let (blocks, total) = lex_blocks(n, |x, y| c.dim(x, y));
    let off = offsets(&blocks, n);
    let o = |x: usize, y: usize| off[x * n + y];
    let mut w = WeakHopfData::zero(c.field(), c.objects().to_vec(), blocks, total);
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = c.dim(x, y);
        let base = o(x, y);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = c.alg_mult(x, y).get(k, i * d + j);
                    if !v.is_zero() {
                        w.mult.set(base + k, (base + i) * total + base + j, v.clone());
                    }
                }
            }
            w.unit.set(base + i, 0, c.alg_unit(x, y).get(i, 0).clone());
            if x == y {
                w.counit.set(0, base + i, c.counit(x).get(0, i).clone());
            }
            // S^C_{y,x}: C_{x,y} → C_{y,x}
            let s = c.antipode(y, x).expect("checked");
            for j in 0..c.dim(y, x) {
                w.antipode.set(o(y, x) + j, base + i, s.get(j, i).clone());
            }
        }
    }
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let del = c.cocomp(x, y, z);
        let dyz = c.dim(y, z);
        for k in 0..c.dim(x, z) {
            for i in 0..c.dim(x, y) {
                for j in 0..dyz {
                    let v = del.get(i * dyz + j, k);
                    if !v.is_zero() {
                        w.comult.set((o(x, y) + i) * total + o(y, z) + j, o(x, z) + k, v.clone());
                    }
                }
            }
        }
    }
    Ok(w)
}

/// Every weak Hopf identity, checked on all basis elements (all triples for the weak counit law).
pub fn verify_weak_hopf(w: &WeakHopfData) -> Result<Report> {
    w.check_blocks()?;
    let n = w.total_dim;
    let f = w.field;
    let m = SparseMap::new(&w.mult, &[n, n], &[n]);
    let delta = SparseMap::new(&w.comult, &[n], &[n, n]);
    let eps = SparseMap::new(&w.counit, &[n], &[]);
    let s = SparseMap::new(&w.antipode, &[n], &[n]);
    let one = Tensor::from_vec(f, &w.unit.col_vec(0));
    let basis = |idx: &[usize]| Tensor::basis(f, &vec![n; idx.len()], idx);
    let none: [&str; 0] = [];
    let mut r = Report::new();

    let mut assoc = Check::new("associativity", &none);
    for h in 0..n {
        for k in 0..n {
            let hk = basis(&[h, k]).apply(0, &m);
            for l in 0..n {
                let lhs = hk.tensor(&basis(&[l])).apply(0, &m);
                let rhs = basis(&[h]).tensor(&basis(&[k, l]).apply(0, &m)).apply(0, &m);
                assoc.compare(&[h, k, l], &lhs, &rhs);
            }
        }
    }
    r.push(assoc.finish());

    let mut lu = Check::new("left-unit", &none);
    let mut ru = Check::new("right-unit", &none);
    let mut coassoc = Check::new("coassociativity", &none);
    let mut lc = Check::new("left-counit", &none);
    let mut rc = Check::new("right-counit", &none);
    for h in 0..n {
        let b = basis(&[h]);
        lu.compare(&[h], &one.tensor(&b).apply(0, &m), &b);
        ru.compare(&[h], &b.tensor(&one).apply(0, &m), &b);
        let dh = b.apply(0, &delta);
        coassoc.compare(&[h], &dh.apply(0, &delta), &dh.apply(1, &delta));
        lc.compare(&[h], &dh.apply(0, &eps), &b);
        rc.compare(&[h], &dh.apply(1, &eps), &b);
    }
    for c in [lu, ru, coassoc, lc, rc] {
        r.push(c.finish());
    }

    let mul2 = |x: &Tensor, y: &Tensor| -> Tensor {
        x.tensor(y).permute(&[0, 2, 1, 3]).apply(0, &m).apply(1, &m)
    };
    let mut dm = Check::new("comult-multiplicative", &none);
    for h in 0..n {
        for k in 0..n {
            let lhs = basis(&[h, k]).apply(0, &m).apply(0, &delta);
            let rhs = mul2(&basis(&[h]).apply(0, &delta), &basis(&[k]).apply(0, &delta));
            dm.compare(&[h, k], &lhs, &rhs);
        }
    }
    r.push(dm.finish());

    // ε(hkl) = ε(h k_(1)) ε(k_(2) l) = ε(h k_(2)) ε(k_(1) l), with B(a,b) = ε(ab)
    let bform = w.counit_form();
    let mut wc1 = Check::new("weak-counit-first", &none);
    let mut wc2 = Check::new("weak-counit-second", &none);
    for k in 0..n {
        let dk: Vec<(usize, usize, Scalar)> = (0..n * n)
            .filter(|&p| !w.comult.get(p, k).is_zero())
            .map(|p| (p / n, p % n, w.comult.get(p, k).clone()))
            .collect();
        let hk: Vec<Vec<Scalar>> = (0..n).map(|h| w.mult.col_vec(h * n + k)).collect();
        for h in 0..n {
            for l in 0..n {
                let mut lhs = f.zero();
                for (c, v) in hk[h].iter().enumerate() {
                    if !v.is_zero() {
                        lhs = &lhs + &(v * bform.get(c, l));
                    }
                }
                let mut r1 = f.zero();
                let mut r2 = f.zero();
                for (a, b, v) in &dk {
                    r1 = &r1 + &(&(v * bform.get(h, *a)) * bform.get(*b, l));
                    r2 = &r2 + &(&(v * bform.get(h, *b)) * bform.get(*a, l));
                }
                wc1.expect(&[h, k, l], lhs == r1, || format!("{lhs} vs {r1}"));
                wc2.expect(&[h, k, l], lhs == r2, || format!("{lhs} vs {r2}"));
            }
        }
    }
    r.push(wc1.finish());
    r.push(wc2.finish());

    // (Δ⊗id)Δ(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)
    let d1 = one.apply(0, &delta);
    let mul3 = |x: &Tensor, y: &Tensor| -> Tensor {
        x.tensor(y).permute(&[0, 3, 1, 4, 2, 5]).apply(0, &m).apply(1, &m).apply(2, &m)
    };
    let lhs = d1.apply(0, &delta);
    let a = d1.tensor(&one);
    let b = one.tensor(&d1);
    let mut wu1 = Check::new("weak-unit-first", &none);
    wu1.compare(&[], &lhs, &mul3(&a, &b));
    r.push(wu1.finish());
    let mut wu2 = Check::new("weak-unit-second", &none);
    wu2.compare(&[], &lhs, &mul3(&b, &a));
    r.push(wu2.finish());

    let et = SparseMap::new(&w.eps_t(), &[n], &[n]);
    let es = SparseMap::new(&w.eps_s(), &[n], &[n]);
    let mut at = Check::new("antipode-target", &none);
    let mut as_ = Check::new("antipode-source", &none);
    let mut sandwich = Check::new("antipode-sandwich", &none);
    for h in 0..n {
        let b = basis(&[h]);
        let dh = b.apply(0, &delta);
        at.compare(&[h], &dh.apply(1, &s).apply(0, &m), &b.apply(0, &et));
        as_.compare(&[h], &dh.apply(0, &s).apply(0, &m), &b.apply(0, &es));
        let lhs = dh.apply(0, &delta).apply(0, &s).apply(2, &s).apply(0, &m).apply(0, &m);
        sandwich.compare(&[h], &lhs, &b.apply(0, &s));
    }
    for c in [at, as_, sandwich] {
        r.push(c.finish());
    }

    // block multiplication rule: informational, it holds for packed categories only
    let mut rule = Check::new("block-composition-rule", &none);
    for h in 0..n {
        for k in 0..n {
            let (bh, bk) = (w.block_of(h), w.block_of(k));
            let prod = w.mult.col_vec(h * n + k);
            let ok = prod.iter().enumerate().all(|(c, v)| {
                if v.is_zero() {
                    return true;
                }
                let bc = w.block_of(c);
                bh.y == bk.x && bc.x == bh.x && bc.y == bk.y
            });
            rule.expect(&[h, k], ok, || "product leaves the composite block".into());
        }
    }
    r.push(rule.finish().informational());
    Ok(r)
}

/// Whether `Δ(1) ≠ 1 ⊗ 1`.
pub fn is_genuinely_weak(w: &WeakHopfData) -> bool {
    let one = w.unit.col_vec(0);
    let d1 = w.delta_one();
    let n = w.total_dim;
    (0..n * n).any(|p| d1[p] != &one[p / n] * &one[p % n])
}

/// Informational item recording whether `Δ(1) ≠ 1 ⊗ 1`.
pub fn weakness_item(w: &WeakHopfData) -> ReportItem {
    let none: [&str; 0] = [];
    ReportItem::verdict("unit-comult-nontrivial", &none, is_genuinely_weak(w), None).informational()
}
