//! Dual Hopf categories and the duality with Hopf categories.
//!
//! A dual Hopf category has an algebra `C_{x,y}` for every pair, cocomposition
//! `Δ_{x,y,z}: C_{x,z} → C_{x,y} ⊗ C_{y,z}`, counits `ε_x: C_{x,x} → k` and an
//! optional antipode `S_{x,y}: C_{y,x} → C_{x,y}`.
//!
//! `dualize` sends `A` to `C_{x,y} = A*_{y,x}` on the dual basis. With `D` the
//! comultiplication constants of `A` and `c` its multiplication constants:
//!
//! * product on `C_{x,y}`: `e*_p · e*_q = Σ_i D_{y,x}[i][q][p] e*_i` (the
//!   opposite convolution),
//! * unit `1_{x,y} = ε_{y,x}`, counit `ε_x(φ) = φ(1_x)`,
//! * `Δ_{z,y,x}(e*_k) = Σ c_{x,y,z}[i][j][k] e*_j ⊗ e*_i`,
//! * `S^C_{x,y} = (S_{y,x})^T`.
//!
//! `undualize` inverts these formulas literally, so both round trips are
//! identities of structure constants.

use crate::error::{Error, Result};
use crate::category::{check_labels, multi_indices, tuples, HopfCatData};
use crate::linalg::LinMap;
use crate::report::{Check, Report};
use crate::scalar::{Field, Scalar};
use crate::tensor::{SparseMap, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualHopfCatData {
    field: Field,
    objects: Vec<String>,
    dims: Vec<usize>,
    alg_mult: Vec<LinMap>,
    alg_unit: Vec<LinMap>,
    cocomp: Vec<LinMap>,
    counit: Vec<LinMap>,
    antipode: Option<Vec<LinMap>>,
}

impl DualHopfCatData {
    pub fn new(field: Field, objects: Vec<String>, dims: Vec<Vec<usize>>) -> Result<Self> {
        check_labels(&objects)?;
        let n = objects.len();
        if dims.len() != n || dims.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("dimension table must be {n}x{n}")));
        }
        let flat = dims.concat();
        let d = |x: usize, y: usize| flat[x * n + y];
        let mut alg_mult = Vec::new();
        let mut alg_unit = Vec::new();
        for t in tuples(n, 2) {
            let dd = d(t[0], t[1]);
            alg_mult.push(LinMap::zero(field, dd, dd * dd));
            alg_unit.push(LinMap::zero(field, dd, 1));
        }
        let cocomp = tuples(n, 3)
            .map(|t| LinMap::zero(field, d(t[0], t[1]) * d(t[1], t[2]), d(t[0], t[2])))
            .collect();
        let counit = (0..n).map(|x| LinMap::zero(field, 1, d(x, x))).collect();
        Ok(DualHopfCatData { field, objects, dims: flat, alg_mult, alg_unit, cocomp, counit, antipode: None })
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn n(&self) -> usize {
        self.objects.len()
    }
    pub fn label(&self, x: usize) -> &str {
        &self.objects[x]
    }
    pub fn labels(&self, idx: &[usize]) -> Vec<&str> {
        idx.iter().map(|&i| self.label(i)).collect()
    }
    pub fn object_index(&self, label: &str) -> Result<usize> {
        self.objects.iter().position(|o| o == label).ok_or_else(|| Error::UnknownObject(label.into()))
    }
    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.n() + y]
    }
    pub fn dims_table(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|x| (0..self.n()).map(|y| self.dim(x, y)).collect()).collect()
    }
    /// `C_{x,y} ⊗ C_{x,y} → C_{x,y}`.
    pub fn alg_mult(&self, x: usize, y: usize) -> &LinMap {
        &self.alg_mult[x * self.n() + y]
    }
    pub fn alg_unit(&self, x: usize, y: usize) -> &LinMap {
        &self.alg_unit[x * self.n() + y]
    }
    /// `Δ_{x,y,z}: C_{x,z} → C_{x,y} ⊗ C_{y,z}`.
    pub fn cocomp(&self, x: usize, y: usize, z: usize) -> &LinMap {
        &self.cocomp[(x * self.n() + y) * self.n() + z]
    }
    pub fn counit(&self, x: usize) -> &LinMap {
        &self.counit[x]
    }
    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }
    /// `S_{x,y}: C_{y,x} → C_{x,y}`.
    pub fn antipode(&self, x: usize, y: usize) -> Option<&LinMap> {
        self.antipode.as_ref().map(|s| &s[x * self.n() + y])
    }

    fn index_check(&self, what: &str, pairs: &[(usize, usize)]) -> Result<()> {
        match pairs.iter().find(|(i, d)| i >= d) {
            Some((i, d)) => Err(Error::Malformed(format!("{what}: index {i} out of range for dimension {d}"))),
            None => Ok(()),
        }
    }

    pub fn set_alg_mult_entry(&mut self, x: usize, y: usize, i: usize, j: usize, k: usize, v: Scalar) -> Result<()> {
        let d = self.dim(x, y);
        self.index_check("alg-mult", &[(i, d), (j, d), (k, d)])?;
        let n = self.n();
        self.alg_mult[x * n + y].set(k, i * d + j, v);
        Ok(())
    }

    pub fn set_alg_unit_entry(&mut self, x: usize, y: usize, i: usize, v: Scalar) -> Result<()> {
        self.index_check("alg-unit", &[(i, self.dim(x, y))])?;
        let n = self.n();
        self.alg_unit[x * n + y].set(i, 0, v);
        Ok(())
    }

    /// `Δ_{x,y,z}(e_k) ∋ v · e_i ⊗ e_j`.
    pub fn set_cocomp_entry(&mut self, x: usize, y: usize, z: usize, k: usize, i: usize, j: usize, v: Scalar) -> Result<()> {
        let (dxy, dyz) = (self.dim(x, y), self.dim(y, z));
        self.index_check("cocomp", &[(k, self.dim(x, z)), (i, dxy), (j, dyz)])?;
        let n = self.n();
        self.cocomp[(x * n + y) * n + z].set(i * dyz + j, k, v);
        Ok(())
    }

    pub fn set_counit_entry(&mut self, x: usize, i: usize, v: Scalar) -> Result<()> {
        self.index_check("dual-counit", &[(i, self.dim(x, x))])?;
        self.counit[x].set(0, i, v);
        Ok(())
    }

    pub fn ensure_antipode(&mut self) {
        if self.antipode.is_none() {
            let n = self.n();
            self.antipode = Some(tuples(n, 2).map(|t| LinMap::zero(self.field, self.dim(t[0], t[1]), self.dim(t[1], t[0]))).collect());
        }
    }

    /// `S_{x,y}(e_i) ∋ v · e_j` with `e_i ∈ C_{y,x}`, `e_j ∈ C_{x,y}`.
    pub fn set_antipode_entry(&mut self, x: usize, y: usize, i: usize, j: usize, v: Scalar) -> Result<()> {
        self.index_check("antipode", &[(i, self.dim(y, x)), (j, self.dim(x, y))])?;
        self.ensure_antipode();
        let n = self.n();
        self.antipode.as_mut().expect("installed")[x * n + y].set(j, i, v);
        Ok(())
    }

    pub fn strip_antipode(&self) -> Self {
        let mut out = self.clone();
        out.antipode = None;
        out
    }
}

/// Coassociativity, counit, algebra and compatibility axioms; the antipode
/// identities as well when an antipode is present.
pub fn verify_dual(c: &DualHopfCatData) -> Report {
    let n = c.n();
    let f = c.field;
    let mut r = Report::new();
    let mu: Vec<SparseMap> = tuples(n, 2)
        .map(|t| {
            let d = c.dim(t[0], t[1]);
            SparseMap::new(c.alg_mult(t[0], t[1]), &[d, d], &[d])
        })
        .collect();
    let one: Vec<Tensor> = tuples(n, 2).map(|t| Tensor::from_vec(f, &c.alg_unit(t[0], t[1]).col_vec(0))).collect();
    let dl: Vec<SparseMap> = tuples(n, 3)
        .map(|t| SparseMap::new(c.cocomp(t[0], t[1], t[2]), &[c.dim(t[0], t[2])], &[c.dim(t[0], t[1]), c.dim(t[1], t[2])]))
        .collect();
    let eps: Vec<SparseMap> = (0..n).map(|x| SparseMap::new(c.counit(x), &[c.dim(x, x)], &[])).collect();
    let m = |x: usize, y: usize| &mu[x * n + y];
    let u = |x: usize, y: usize| &one[x * n + y];
    let del = |x: usize, y: usize, z: usize| &dl[(x * n + y) * n + z];

    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = c.dim(x, y);
        let labels = c.labels(&t);
        let mut assoc = Check::new("algebra-associativity", &labels);
        for idx in multi_indices(&[d, d, d]) {
            let b = Tensor::basis(f, &[d, d, d], &idx);
            assoc.compare(&idx, &b.apply(0, m(x, y)).apply(0, m(x, y)), &b.apply(1, m(x, y)).apply(0, m(x, y)));
        }
        r.push(assoc.finish());
        let mut left = Check::new("algebra-left-unit", &labels);
        let mut right = Check::new("algebra-right-unit", &labels);
        for i in 0..d {
            let b = Tensor::basis(f, &[d], &[i]);
            left.compare(&[i], &u(x, y).tensor(&b).apply(0, m(x, y)), &b);
            right.compare(&[i], &b.tensor(u(x, y)).apply(0, m(x, y)), &b);
        }
        r.push(left.finish());
        r.push(right.finish());
    }
    for t in tuples(n, 4) {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let d = c.dim(x, w);
        let mut co = Check::new("cocomposition-coassociativity", &c.labels(&t));
        for i in 0..d {
            let b = Tensor::basis(f, &[d], &[i]);
            let lhs = b.apply(0, del(x, z, w)).apply(0, del(x, y, z));
            let rhs = b.apply(0, del(x, y, w)).apply(1, del(y, z, w));
            co.compare(&[i], &lhs, &rhs);
        }
        r.push(co.finish());
    }
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = c.dim(x, y);
        let labels = c.labels(&t);
        let mut left = Check::new("cocomposition-left-counit", &labels);
        let mut right = Check::new("cocomposition-right-counit", &labels);
        for i in 0..d {
            let b = Tensor::basis(f, &[d], &[i]);
            left.compare(&[i], &b.apply(0, del(x, x, y)).apply(0, &eps[x]), &b);
            right.compare(&[i], &b.apply(0, del(x, y, y)).apply(1, &eps[y]), &b);
        }
        r.push(left.finish());
        r.push(right.finish());
    }
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let d = c.dim(x, z);
        let labels = c.labels(&t);
        let mut mult = Check::new("cocomposition-multiplicative", &labels);
        for idx in multi_indices(&[d, d]) {
            let b = Tensor::basis(f, &[d, d], &idx);
            let lhs = b.apply(0, m(x, z)).apply(0, del(x, y, z));
            let rhs = b
                .apply(1, del(x, y, z))
                .apply(0, del(x, y, z))
                .permute(&[0, 2, 1, 3])
                .apply(0, m(x, y))
                .apply(1, m(y, z));
            mult.compare(&idx, &lhs, &rhs);
        }
        r.push(mult.finish());
        let mut unit = Check::new("cocomposition-unit", &labels);
        unit.compare(&[], &u(x, z).apply(0, del(x, y, z)), &u(x, y).tensor(u(y, z)));
        r.push(unit.finish());
    }
    for x in 0..n {
        let d = c.dim(x, x);
        let labels = c.labels(&[x]);
        let mut mult = Check::new("counit-multiplicative", &labels);
        for idx in multi_indices(&[d, d]) {
            let b = Tensor::basis(f, &[d, d], &idx);
            mult.compare(&idx, &b.apply(0, m(x, x)).apply(0, &eps[x]), &b.apply(0, &eps[x]).apply(0, &eps[x]));
        }
        r.push(mult.finish());
        let mut unit = Check::new("counit-unit", &labels);
        unit.compare(&[], &u(x, x).apply(0, &eps[x]), &Tensor::scalar(f.one()));
        r.push(unit.finish());
    }
    if let Some(s) = &c.antipode {
        let sm = |x: usize, y: usize| SparseMap::new(&s[x * n + y], &[c.dim(y, x)], &[c.dim(x, y)]);
        for t in tuples(n, 2) {
            let (x, y) = (t[0], t[1]);
            let d = c.dim(x, x);
            let labels = c.labels(&t);
            let mut left = Check::new("dual-antipode-left", &labels);
            let mut right = Check::new("dual-antipode-right", &labels);
            let (sxy, syx) = (sm(x, y), sm(y, x));
            for i in 0..d {
                let b = Tensor::basis(f, &[d], &[i]);
                let e = b.apply(0, &eps[x]).as_scalar();
                let dh = b.apply(0, del(x, y, x));
                left.compare(&[i], &dh.apply(1, &sxy).apply(0, m(x, y)), &u(x, y).scale(&e));
                right.compare(&[i], &dh.apply(0, &syx).apply(0, m(y, x)), &u(y, x).scale(&e));
            }
            r.push(left.finish());
            r.push(right.finish());
        }
    }
    r
}

pub fn dualize(a: &HopfCatData) -> Result<DualHopfCatData> {
    let n = a.n();
    let dims = (0..n).map(|x| (0..n).map(|y| a.dim(y, x)).collect()).collect();
    let mut c = DualHopfCatData::new(a.field(), a.objects().to_vec(), dims)?;
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = a.dim(y, x);
        for (i, p, q) in triples(d, d, d) {
            let v = a.comult_coeff(y, x, i, q, p);
            if !v.is_zero() {
                c.set_alg_mult_entry(x, y, p, q, i, v.clone())?;
            }
        }
        for i in 0..d {
            c.set_alg_unit_entry(x, y, i, a.counit(y, x).get(0, i).clone())?;
        }
    }
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        // Δ^C_{z,y,x}: C_{z,x} = A*_{x,z} → C_{z,y} ⊗ C_{y,x} = A*_{y,z} ⊗ A*_{x,y}
        for (i, j, k) in triples(a.dim(x, y), a.dim(y, z), a.dim(x, z)) {
            let v = a.mult_coeff(x, y, z, i, j, k);
            if !v.is_zero() {
                c.set_cocomp_entry(z, y, x, k, j, i, v.clone())?;
            }
        }
    }
    for x in 0..n {
        for (i, v) in a.unit_vec(x).into_iter().enumerate() {
            c.set_counit_entry(x, i, v)?;
        }
    }
    if a.has_antipode() {
        c.ensure_antipode();
        for t in tuples(n, 2) {
            let (x, y) = (t[0], t[1]);
            // S^C_{x,y}: A*_{x,y} → A*_{y,x}, transpose of S_{y,x}: A_{y,x} → A_{x,y}
            c.antipode.as_mut().expect("installed")[x * n + y] = a.require_antipode(y, x)?.transpose();
        }
    }
    Ok(c)
}

pub fn undualize(c: &DualHopfCatData) -> Result<HopfCatData> {
    let n = c.n();
    let dims = (0..n).map(|x| (0..n).map(|y| c.dim(y, x)).collect()).collect();
    let mut a = HopfCatData::new(c.field(), c.objects().to_vec(), dims)?;
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let dyx = c.dim(y, x);
        let del = c.cocomp(z, y, x);
        for (i, j, k) in triples(a.dim(x, y), a.dim(y, z), a.dim(x, z)) {
            let v = del.get(j * dyx + i, k);
            if !v.is_zero() {
                a.set_mult_entry(x, y, z, i, j, k, v.clone())?;
            }
        }
    }
    for x in 0..n {
        for i in 0..c.dim(x, x) {
            a.set_unit_entry(x, i, c.counit(x).get(0, i).clone())?;
        }
    }
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = a.dim(x, y);
        let mu = c.alg_mult(y, x);
        for (l, j, i) in triples(d, d, d) {
            let v = mu.get(l, i * d + j);
            if !v.is_zero() {
                a.set_comult_entry(x, y, l, j, i, v.clone())?;
            }
        }
        for i in 0..d {
            a.set_counit_entry(x, y, i, c.alg_unit(y, x).get(i, 0).clone())?;
        }
    }
    if let Some(s) = &c.antipode {
        for t in tuples(n, 2) {
            let (x, y) = (t[0], t[1]);
            a.set_antipode(x, y, s[y * n + x].transpose())?;
        }
    }
    Ok(a)
}

fn triples(a: usize, b: usize, c: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..a).flat_map(move |i| (0..b).flat_map(move |j| (0..c).map(move |k| (i, j, k))))
}
