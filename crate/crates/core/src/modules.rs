//! Modules over a Hopf category and comodules over a dual Hopf category.
//!
//! A right module has actions `ψ_{x,y,z}: M_{x,y} ⊗ A_{y,z} → M_{x,z}`; a left
//! module `ψ_{x,y,z}: A_{x,y} ⊗ M_{y,z} → M_{x,z}`. A right comodule over `C`
//! has coactions `ρ_{x,y,z}: M_{x,z} → M_{x,y} ⊗ C_{y,z}`.
//!
//! For finite dimensions a right `C`-comodule is the same as a right module
//! over `A` with `A_{z,y} = C*_{y,z}`: `m·a = ⟨a, m_[1]⟩ m_[0]`, which on
//! structure constants reads `ψ_{x,z,y}[r, (m, a)] = ρ_{x,y,z}[(r, a), m]`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::category::{multi_indices, tuples, HopfCatData};
use crate::dual::{dualize, undualize, DualHopfCatData};
use crate::error::{Error, Result};
use crate::linalg::LinMap;
use crate::report::{Check, Report};
use crate::tensor::{SparseMap, Tensor};
use crate::verify::{verify_structure, Level, Views};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Precondition(format!("unknown side `{s}`"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub base: Arc<HopfCatData>,
    pub side: Side,
    dims: Vec<usize>,
    actions: Vec<LinMap>,
}

impl ModuleData {
    /// Zero actions over `base` with `dims[x][y] = d_M(x, y)`.
    pub fn new(base: Arc<HopfCatData>, side: Side, dims: Vec<Vec<usize>>) -> Result<Self> {
        let n = base.n();
        if dims.len() != n || dims.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("module dimension table must be {n}x{n}")));
        }
        let flat = dims.concat();
        let f = base.field();
        let actions = tuples(n, 3)
            .map(|t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                let cols = match side {
                    Side::Right => flat[x * n + y] * base.dim(y, z),
                    Side::Left => base.dim(x, y) * flat[y * n + z],
                };
                LinMap::zero(f, flat[x * n + z], cols)
            })
            .collect();
        Ok(ModuleData { base, side, dims: flat, actions })
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.n() + y]
    }

    pub fn dims_table(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|x| (0..self.n()).map(|y| self.dim(x, y)).collect()).collect()
    }

    fn in_dims(&self, x: usize, y: usize, z: usize) -> [usize; 2] {
        match self.side {
            Side::Right => [self.dim(x, y), self.base.dim(y, z)],
            Side::Left => [self.base.dim(x, y), self.dim(y, z)],
        }
    }

    pub fn action(&self, x: usize, y: usize, z: usize) -> &LinMap {
        &self.actions[(x * self.n() + y) * self.n() + z]
    }

    pub fn set_action(&mut self, x: usize, y: usize, z: usize, map: LinMap) -> Result<()> {
        let [a, b] = self.in_dims(x, y, z);
        if (map.rows(), map.cols()) != (self.dim(x, z), a * b) || map.field() != self.base.field() {
            return Err(Error::Malformed("action map has the wrong shape".into()));
        }
        let n = self.n();
        self.actions[(x * n + y) * n + z] = map;
        Ok(())
    }

    /// `ψ_{x,y,z}(e_i ⊗ e_j) ∋ v e_k`, factors in the order of the side.
    pub fn set_action_entry(&mut self, x: usize, y: usize, z: usize, i: usize, j: usize, k: usize, v: crate::Scalar) -> Result<()> {
        let [a, b] = self.in_dims(x, y, z);
        let c = self.dim(x, z);
        if i >= a || j >= b || k >= c {
            return Err(Error::Malformed(format!("action index ({i},{j},{k}) out of range")));
        }
        let n = self.n();
        self.actions[(x * n + y) * n + z].set(k, i * b + j, v);
        Ok(())
    }

    pub(crate) fn sparse_action(&self, x: usize, y: usize, z: usize) -> SparseMap {
        SparseMap::new(self.action(x, y, z), &self.in_dims(x, y, z), &[self.dim(x, z)])
    }

    /// `A` acting on itself by composition.
    pub fn regular(base: Arc<HopfCatData>, side: Side) -> Self {
        let dims = base.dims_table();
        let mut m = ModuleData::new(base.clone(), side, dims).expect("shape");
        for t in tuples(base.n(), 3) {
            m.set_action(t[0], t[1], t[2], base.mult(t[0], t[1], t[2]).clone()).expect("shape");
        }
        m
    }

    /// The unit object `J`: every component one-dimensional, acting through the counit.
    pub fn unit_object(base: Arc<HopfCatData>, side: Side) -> Self {
        let n = base.n();
        let mut m = ModuleData::new(base.clone(), side, vec![vec![1; n]; n]).expect("shape");
        for t in tuples(n, 3) {
            let (x, y, z) = (t[0], t[1], t[2]);
            let eps = match side {
                Side::Right => base.counit(y, z).clone(),
                Side::Left => base.counit(x, y).clone(),
            };
            m.set_action(x, y, z, eps).expect("shape");
        }
        m
    }
}

/// Associativity and unit laws of the action, on every basis element.
pub fn verify_module(m: &ModuleData) -> Report {
    let a = &*m.base;
    let v = Views::new(a);
    let n = m.n();
    let f = a.field();
    let mut r = Report::new();
    let psi: Vec<SparseMap> = tuples(n, 3).map(|t| m.sparse_action(t[0], t[1], t[2])).collect();
    let p = |x: usize, y: usize, z: usize| &psi[(x * n + y) * n + z];
    for t in tuples(n, 4) {
        let (x, y, z, u) = (t[0], t[1], t[2], t[3]);
        let mut c = Check::new("module-associativity", &a.labels(&t));
        match m.side {
            Side::Right => {
                let dims = [m.dim(x, y), a.dim(y, z), a.dim(z, u)];
                for idx in multi_indices(&dims) {
                    let b = Tensor::basis(f, &dims, &idx);
                    let lhs = b.apply(0, p(x, y, z)).apply(0, p(x, z, u));
                    let rhs = b.apply(1, v.m(y, z, u)).apply(0, p(x, y, u));
                    c.compare(&idx, &lhs, &rhs);
                }
            }
            Side::Left => {
                let dims = [a.dim(x, y), a.dim(y, z), m.dim(z, u)];
                for idx in multi_indices(&dims) {
                    let b = Tensor::basis(f, &dims, &idx);
                    let lhs = b.apply(1, p(y, z, u)).apply(0, p(x, y, u));
                    let rhs = b.apply(0, v.m(x, y, z)).apply(0, p(x, z, u));
                    c.compare(&idx, &lhs, &rhs);
                }
            }
        }
        r.push(c.finish());
    }
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let d = m.dim(x, y);
        let mut c = Check::new("module-unit", &a.labels(&t));
        for i in 0..d {
            let b = Tensor::basis(f, &[d], &[i]);
            let lhs = match m.side {
                Side::Right => b.tensor(v.one(y)).apply(0, p(x, y, y)),
                Side::Left => v.one(x).tensor(&b).apply(0, p(x, x, y)),
            };
            c.compare(&[i], &lhs, &b);
        }
        r.push(c.finish());
    }
    r
}

/// Diagonal action on componentwise tensor products:
/// `(m ⊗ n)·a = m a_(1) ⊗ n a_(2)` (right) or `a·(m ⊗ n) = a_(1) m ⊗ a_(2) n` (left).
pub fn tensor_modules(m: &ModuleData, k: &ModuleData) -> Result<ModuleData> {
    if m.side != k.side {
        return Err(Error::Precondition("modules act from different sides".into()));
    }
    if m.base != k.base {
        return Err(Error::Precondition("modules have different base categories".into()));
    }
    let a = &*m.base;
    if !verify_structure(a, Level::Semihopf)?.passed() {
        return Err(Error::Precondition("base is not a semi-Hopf category".into()));
    }
    let v = Views::new(a);
    let n = m.n();
    let f = a.field();
    let dims = (0..n).map(|x| (0..n).map(|y| m.dim(x, y) * k.dim(x, y)).collect()).collect();
    let mut out = ModuleData::new(m.base.clone(), m.side, dims)?;
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let (pm, pk) = (m.sparse_action(x, y, z), k.sparse_action(x, y, z));
        let map = match m.side {
            Side::Right => {
                let in_dims = [m.dim(x, y), k.dim(x, y), a.dim(y, z)];
                build_map(f, &in_dims, m.dim(x, z) * k.dim(x, z), |b| {
                    // m ⊗ n ⊗ a → m ⊗ n ⊗ a1 ⊗ a2 → m ⊗ a1 ⊗ n ⊗ a2
                    b.apply(2, v.delta(y, z)).permute(&[0, 2, 1, 3]).apply(0, &pm).apply(1, &pk)
                })
            }
            Side::Left => {
                let in_dims = [a.dim(x, y), m.dim(y, z), k.dim(y, z)];
                build_map(f, &in_dims, m.dim(x, z) * k.dim(x, z), |b| {
                    // a ⊗ m ⊗ n → a1 ⊗ a2 ⊗ m ⊗ n → a1 ⊗ m ⊗ a2 ⊗ n
                    b.apply(0, v.delta(x, y)).permute(&[0, 2, 1, 3]).apply(0, &pm).apply(1, &pk)
                })
            }
        };
        // the domain is (M⊗N)⊗A or A⊗(M⊗N), which flattens the same as the three factors
        out.set_action(x, y, z, map)?;
    }
    Ok(out)
}

/// Dense matrix of a map given by its values on basis tensors over `in_dims`.
pub(crate) fn build_map(f: crate::Field, in_dims: &[usize], rows: usize, image: impl Fn(&Tensor) -> Tensor) -> LinMap {
    let cols: usize = in_dims.iter().product();
    let mut out = LinMap::zero(f, rows, cols);
    for (c, idx) in multi_indices(in_dims).enumerate() {
        let col = image(&Tensor::basis(f, in_dims, &idx)).to_vec();
        assert_eq!(col.len(), rows, "image has the wrong size");
        for (r, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                out.set(r, c, v);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleData {
    pub base: Arc<DualHopfCatData>,
    dims: Vec<usize>,
    coactions: Vec<LinMap>,
}

impl ComoduleData {
    pub fn new(base: Arc<DualHopfCatData>, dims: Vec<Vec<usize>>) -> Result<Self> {
        let n = base.n();
        if dims.len() != n || dims.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("comodule dimension table must be {n}x{n}")));
        }
        let flat = dims.concat();
        let coactions = tuples(n, 3)
            .map(|t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                LinMap::zero(base.field(), flat[x * n + y] * base.dim(y, z), flat[x * n + z])
            })
            .collect();
        Ok(ComoduleData { base, dims: flat, coactions })
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.n() + y]
    }

    pub fn dims_table(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|x| (0..self.n()).map(|y| self.dim(x, y)).collect()).collect()
    }

    /// `ρ_{x,y,z}: M_{x,z} → M_{x,y} ⊗ C_{y,z}`.
    pub fn coaction(&self, x: usize, y: usize, z: usize) -> &LinMap {
        &self.coactions[(x * self.n() + y) * self.n() + z]
    }

    pub fn set_coaction(&mut self, x: usize, y: usize, z: usize, map: LinMap) -> Result<()> {
        if (map.rows(), map.cols()) != (self.dim(x, y) * self.base.dim(y, z), self.dim(x, z)) || map.field() != self.base.field() {
            return Err(Error::Malformed("coaction map has the wrong shape".into()));
        }
        let n = self.n();
        self.coactions[(x * n + y) * n + z] = map;
        Ok(())
    }

    /// `ρ_{x,y,z}(e_k) ∋ v e_i ⊗ e_j`.
    pub fn set_coaction_entry(&mut self, x: usize, y: usize, z: usize, k: usize, i: usize, j: usize, v: crate::Scalar) -> Result<()> {
        let dc = self.base.dim(y, z);
        if k >= self.dim(x, z) || i >= self.dim(x, y) || j >= dc {
            return Err(Error::Malformed(format!("coaction index ({k},{i},{j}) out of range")));
        }
        let n = self.n();
        self.coactions[(x * n + y) * n + z].set(i * dc + j, k, v);
        Ok(())
    }

    /// `C` coacting on itself by cocomposition.
    pub fn regular(base: Arc<DualHopfCatData>) -> Self {
        let dims = base.dims_table();
        let mut m = ComoduleData::new(base.clone(), dims).expect("shape");
        for t in tuples(base.n(), 3) {
            m.set_coaction(t[0], t[1], t[2], base.cocomp(t[0], t[1], t[2]).clone()).expect("shape");
        }
        m
    }
}

/// Coassociativity and counit law of the coaction.
pub fn verify_comodule(m: &ComoduleData) -> Report {
    let c = &*m.base;
    let n = m.n();
    let f = c.field();
    let mut r = Report::new();
    let rho = |x: usize, y: usize, z: usize| SparseMap::new(m.coaction(x, y, z), &[m.dim(x, z)], &[m.dim(x, y), c.dim(y, z)]);
    let del = |x: usize, y: usize, z: usize| SparseMap::new(c.cocomp(x, y, z), &[c.dim(x, z)], &[c.dim(x, y), c.dim(y, z)]);
    for t in tuples(n, 4) {
        let (x, u, y, z) = (t[0], t[1], t[2], t[3]);
        let d = m.dim(x, z);
        let mut ch = Check::new("comodule-coassociativity", &c.labels(&t));
        let (r1, r2, r3, dl) = (rho(x, y, z), rho(x, u, y), rho(x, u, z), del(u, y, z));
        for i in 0..d {
            let b = Tensor::basis(f, &[d], &[i]);
            let lhs = b.apply(0, &r1).apply(0, &r2);
            let rhs = b.apply(0, &r3).apply(1, &dl);
            ch.compare(&[i], &lhs, &rhs);
        }
        r.push(ch.finish());
    }
    for t in tuples(n, 2) {
        let (x, z) = (t[0], t[1]);
        let d = m.dim(x, z);
        let eps = SparseMap::new(c.counit(z), &[c.dim(z, z)], &[]);
        let mut ch = Check::new("comodule-counit", &c.labels(&t));
        let r1 = rho(x, z, z);
        for i in 0..d {
            let b = Tensor::basis(f, &[d], &[i]);
            ch.compare(&[i], &b.apply(0, &r1).apply(1, &eps), &b);
        }
        r.push(ch.finish());
    }
    r
}

/// Right module over `undualize(C)` with `m·a = ⟨a, m_[1]⟩ m_[0]`.
pub fn comodule_to_module(m: &ComoduleData) -> Result<ModuleData> {
    let base = Arc::new(undualize(&m.base)?);
    let n = m.n();
    let mut out = ModuleData::new(base.clone(), Side::Right, m.dims_table())?;
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        // ψ_{x,z,y}: M_{x,z} ⊗ A_{z,y} → M_{x,y}, from ρ_{x,y,z}
        let rho = m.coaction(x, y, z);
        let da = base.dim(z, y);
        let mut psi = LinMap::zero(base.field(), m.dim(x, y), m.dim(x, z) * da);
        for r in 0..m.dim(x, y) {
            for a in 0..da {
                for k in 0..m.dim(x, z) {
                    let v = rho.get(r * da + a, k);
                    if !v.is_zero() {
                        psi.set(r, k * da + a, v.clone());
                    }
                }
            }
        }
        out.set_action(x, z, y, psi)?;
    }
    Ok(out)
}

/// Right comodule over `dualize(A)` with `ρ(m) = Σ_i m a_i ⊗ c_i` on dual bases.
pub fn module_to_comodule(m: &ModuleData) -> Result<ComoduleData> {
    if m.side != Side::Right {
        return Err(Error::Precondition("only right modules correspond to right comodules".into()));
    }
    let base = Arc::new(dualize(&m.base)?);
    let n = m.n();
    let mut out = ComoduleData::new(base.clone(), m.dims_table())?;
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let psi = m.action(x, z, y);
        let da = base.dim(y, z);
        let mut rho = LinMap::zero(base.field(), m.dim(x, y) * da, m.dim(x, z));
        for r in 0..m.dim(x, y) {
            for a in 0..da {
                for k in 0..m.dim(x, z) {
                    let v = psi.get(r, k * da + a);
                    if !v.is_zero() {
                        rho.set(r * da + a, k, v.clone());
                    }
                }
            }
        }
        out.set_coaction(x, y, z, rho)?;
    }
    Ok(out)
}
