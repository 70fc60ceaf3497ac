//! Group-graded Hopf algebras and their lifting to Hopf categories.
//!
//! `A = ⊕_σ A_σ` over a finite group `G` given by its multiplication table,
//! with `m_{σ,τ}: A_σ ⊗ A_τ → A_{στ}`, unit in `A_e`, a coalgebra structure on
//! each component, and `S_σ: A_σ → A_{σ^{-1}}`. The lifted category `K(A)` has
//! the group elements as objects and `K(A)_{σ,τ} = A_{σ^{-1}τ}`.

use crate::error::{Error, Result};
use crate::category::{check_labels, multi_indices, HopfCatData};
use crate::linalg::LinMap;
use crate::scalar::Field;
use crate::tensor::{SparseMap, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHopfData {
    pub field: Field,
    pub elements: Vec<String>,
    pub identity: usize,
    /// `table[a * n + b] = a·b`.
    pub table: Vec<usize>,
    pub dims: Vec<usize>,
    /// `mult[σ * n + τ]`: `A_σ ⊗ A_τ → A_{στ}`.
    pub mult: Vec<LinMap>,
    pub unit: LinMap,
    pub comult: Vec<LinMap>,
    pub counit: Vec<LinMap>,
    /// `antipode[σ]`: `A_σ → A_{σ^{-1}}`.
    pub antipode: Option<Vec<LinMap>>,
}

impl GradedHopfData {
    /// Zero structure maps over the given group table.
    pub fn new(field: Field, elements: Vec<String>, identity: usize, table: Vec<usize>, dims: Vec<usize>) -> Result<Self> {
        check_labels(&elements)?;
        let n = elements.len();
        if table.len() != n * n || dims.len() != n || identity >= n || table.iter().any(|&c| c >= n) {
            return Err(Error::Malformed("group table, identity or dimensions do not match the element list".into()));
        }
        let mut mult = Vec::with_capacity(n * n);
        for s in 0..n {
            for t in 0..n {
                mult.push(LinMap::zero(field, dims[table[s * n + t]], dims[s] * dims[t]));
            }
        }
        Ok(GradedHopfData {
            field,
            unit: LinMap::zero(field, dims[identity], 1),
            comult: dims.iter().map(|&d| LinMap::zero(field, d * d, d)).collect(),
            counit: dims.iter().map(|&d| LinMap::zero(field, 1, d)).collect(),
            mult,
            antipode: None,
            elements,
            identity,
            table,
            dims,
        })
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.n()).find(|&b| self.mul(a, b) == self.identity).expect("validated group")
    }

    fn graded_err(&self, axiom: &str, s: usize, t: usize) -> Error {
        Error::GradedAxiom { axiom: axiom.into(), sigma: self.elements[s].clone(), tau: self.elements[t].clone() }
    }

    fn validate_group(&self) -> Result<()> {
        let n = self.n();
        let e = self.identity;
        for a in 0..n {
            if self.mul(e, a) != a || self.mul(a, e) != a {
                return Err(self.graded_err("group-identity", e, a));
            }
            if !(0..n).any(|b| self.mul(a, b) == e && self.mul(b, a) == e) {
                return Err(self.graded_err("group-inverse", a, a));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(self.graded_err("group-associativity", a, b));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_shapes(&self) -> Result<()> {
        let n = self.n();
        let bad = |what: &str| Error::Malformed(format!("graded {what} has the wrong shape"));
        for s in 0..n {
            let d = self.dims[s];
            for t in 0..n {
                let m = &self.mult[s * n + t];
                if (m.rows(), m.cols()) != (self.dims[self.mul(s, t)], d * self.dims[t]) {
                    return Err(bad("mult"));
                }
            }
            if (self.comult[s].rows(), self.comult[s].cols()) != (d * d, d) {
                return Err(bad("comult"));
            }
            if (self.counit[s].rows(), self.counit[s].cols()) != (1, d) {
                return Err(bad("counit"));
            }
            if let Some(sm) = &self.antipode {
                if (sm[s].rows(), sm[s].cols()) != (self.dims[self.inv(s)], d) {
                    return Err(bad("antipode"));
                }
            }
        }
        if (self.unit.rows(), self.unit.cols()) != (self.dims[self.identity], 1) {
            return Err(bad("unit"));
        }
        Ok(())
    }

    /// All graded Hopf axioms; the first violation is returned with its `(σ, τ)`.
    /// For axioms over three components, `τ` is the middle one.
    pub fn validate(&self) -> Result<()> {
        self.validate_group()?;
        self.check_shapes()?;
        let n = self.n();
        let f = self.field;
        let m = |s: usize, t: usize| SparseMap::new(&self.mult[s * n + t], &[self.dims[s], self.dims[t]], &[self.dims[self.mul(s, t)]]);
        let delta = |s: usize| SparseMap::new(&self.comult[s], &[self.dims[s]], &[self.dims[s], self.dims[s]]);
        let eps = |s: usize| SparseMap::new(&self.counit[s], &[self.dims[s]], &[]);
        let e = self.identity;
        let one = Tensor::from_vec(f, &self.unit.col_vec(0));
        for s in 0..n {
            for t in 0..n {
                let st = self.mul(s, t);
                let dims = [self.dims[s], self.dims[t]];
                for u in 0..n {
                    let d3 = [self.dims[s], self.dims[t], self.dims[u]];
                    for idx in multi_indices(&d3) {
                        let b = Tensor::basis(f, &d3, &idx);
                        let lhs = b.apply(0, &m(s, t)).apply(0, &m(st, u));
                        let rhs = b.apply(1, &m(t, u)).apply(0, &m(s, self.mul(t, u)));
                        if lhs != rhs {
                            return Err(self.graded_err("associativity", s, t));
                        }
                    }
                }
                for idx in multi_indices(&dims) {
                    let b = Tensor::basis(f, &dims, &idx);
                    let prod = b.apply(0, &m(s, t));
                    let rhs = b.apply(1, &delta(t)).apply(0, &delta(s)).permute(&[0, 2, 1, 3]).apply(0, &m(s, t)).apply(1, &m(s, t));
                    if prod.apply(0, &delta(st)) != rhs {
                        return Err(self.graded_err("comult-multiplicative", s, t));
                    }
                    if prod.apply(0, &eps(st)) != b.apply(0, &eps(s)).apply(0, &eps(t)) {
                        return Err(self.graded_err("counit-multiplicative", s, t));
                    }
                }
            }
            let d = self.dims[s];
            for i in 0..d {
                let b = Tensor::basis(f, &[d], &[i]);
                if one.tensor(&b).apply(0, &m(e, s)) != b {
                    return Err(self.graded_err("left-unit", e, s));
                }
                if b.tensor(&one).apply(0, &m(s, e)) != b {
                    return Err(self.graded_err("right-unit", s, e));
                }
                let dh = b.apply(0, &delta(s));
                if dh.apply(0, &delta(s)) != dh.apply(1, &delta(s)) {
                    return Err(self.graded_err("coassociativity", s, s));
                }
                if dh.apply(0, &eps(s)) != b || dh.apply(1, &eps(s)) != b {
                    return Err(self.graded_err("counit", s, s));
                }
                if let Some(sm) = &self.antipode {
                    let si = self.inv(s);
                    let anti = SparseMap::new(&sm[s], &[d], &[self.dims[si]]);
                    let ep = b.apply(0, &eps(s)).as_scalar();
                    if dh.apply(1, &anti).apply(0, &m(s, si)) != one.scale(&ep) {
                        return Err(self.graded_err("antipode-left", s, si));
                    }
                    if dh.apply(0, &anti).apply(0, &m(si, s)) != one.scale(&ep) {
                        return Err(self.graded_err("antipode-right", si, s));
                    }
                }
            }
        }
        if one.apply(0, &delta(e)) != one.tensor(&one) {
            return Err(self.graded_err("comult-unit", e, e));
        }
        if one.apply(0, &eps(e)) != Tensor::scalar(f.one()) {
            return Err(self.graded_err("counit-unit", e, e));
        }
        Ok(())
    }
}

/// Lift to the Hopf category `K(A)`, after validating `A`.
pub fn from_graded(h: &GradedHopfData) -> Result<HopfCatData> {
    h.validate()?;
    let n = h.n();
    let comp = |s: usize, t: usize| h.mul(h.inv(s), t);
    let dims = (0..n).map(|s| (0..n).map(|t| h.dims[comp(s, t)]).collect()).collect();
    let mut a = HopfCatData::new(h.field, h.elements.clone(), dims)?;
    for s in 0..n {
        for r in 0..n {
            for t in 0..n {
                a.set_mult(s, r, t, h.mult[comp(s, r) * n + comp(r, t)].clone())?;
            }
            a.set_comult(s, r, h.comult[comp(s, r)].clone())?;
            a.set_counit(s, r, h.counit[comp(s, r)].clone())?;
            if let Some(sm) = &h.antipode {
                a.set_antipode(s, r, sm[comp(s, r)].clone())?;
            }
        }
        a.set_unit(s, h.unit.clone())?;
    }
    Ok(a)
}
