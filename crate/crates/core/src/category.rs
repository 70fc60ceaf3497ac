//! Finite k-linear (semi-)Hopf categories in structure-constant form.
//!
//! Objects are indexed `0..n` in declaration order; hom objects `A_{x,y}` have
//! dimension `dim(x, y)` (possibly zero). Composition is
//! `m_{x,y,z}: A_{x,y} ⊗ A_{y,z} → A_{x,z}`, the unit of `A_{x,x}` is `η_x`,
//! each `A_{x,y}` is a coalgebra `(Δ_{x,y}, ε_{x,y})`, and the optional
//! antipode is `S_{x,y}: A_{x,y} → A_{y,x}`.
//!
//! Every map is stored as a [`LinMap`] under the global row-major flattening:
//! the multiplication constant `c[i][j][k]` of `m(e_i ⊗ e_j) = Σ c[i][j][k] e_k`
//! lives at row `k`, column `i·d(y,z) + j`, and `Δ(e_i) = Σ D[i][j][k] e_j ⊗ e_k`
//! at row `j·d + k`, column `i`.

use crate::error::{Error, Result};
use crate::linalg::LinMap;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfCatData {
    field: Field,
    objects: Vec<String>,
    dims: Vec<usize>,
    mult: Vec<LinMap>,
    unit: Vec<LinMap>,
    comult: Vec<LinMap>,
    counit: Vec<LinMap>,
    antipode: Option<Vec<LinMap>>,
}

impl HopfCatData {
    /// All structure maps zero, no antipode. `dims[x][y] = d(x, y)`.
    pub fn new(field: Field, objects: Vec<String>, dims: Vec<Vec<usize>>) -> Result<Self> {
        let n = objects.len();
        check_labels(&objects)?;
        if dims.len() != n || dims.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("dimension table must be {n}x{n}")));
        }
        let flat: Vec<usize> = dims.concat();
        let d = |x: usize, y: usize| flat[x * n + y];
        let mut mult = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    mult.push(LinMap::zero(field, d(x, z), d(x, y) * d(y, z)));
                }
            }
        }
        let unit = (0..n).map(|x| LinMap::zero(field, d(x, x), 1)).collect();
        let mut comult = Vec::with_capacity(n * n);
        let mut counit = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                comult.push(LinMap::zero(field, d(x, y) * d(x, y), d(x, y)));
                counit.push(LinMap::zero(field, 1, d(x, y)));
            }
        }
        Ok(HopfCatData { field, objects, dims: flat, mult, unit, comult, counit, antipode: None })
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

    pub fn object_index(&self, label: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == label)
            .ok_or_else(|| Error::UnknownObject(label.to_string()))
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.n() + y]
    }

    pub fn dims_table(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|x| (0..self.n()).map(|y| self.dim(x, y)).collect()).collect()
    }

    pub fn mult(&self, x: usize, y: usize, z: usize) -> &LinMap {
        &self.mult[(x * self.n() + y) * self.n() + z]
    }

    pub fn unit(&self, x: usize) -> &LinMap {
        &self.unit[x]
    }

    /// `1_x` as a coordinate vector.
    pub fn unit_vec(&self, x: usize) -> Vec<Scalar> {
        self.unit[x].col_vec(0)
    }

    pub fn comult(&self, x: usize, y: usize) -> &LinMap {
        &self.comult[x * self.n() + y]
    }

    pub fn counit(&self, x: usize, y: usize) -> &LinMap {
        &self.counit[x * self.n() + y]
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn antipode(&self, x: usize, y: usize) -> Option<&LinMap> {
        self.antipode.as_ref().map(|s| &s[x * self.n() + y])
    }

    pub fn require_antipode(&self, x: usize, y: usize) -> Result<&LinMap> {
        self.antipode(x, y).ok_or(Error::MissingAntipode)
    }

    fn check_shape(&self, what: &str, map: &LinMap, rows: usize, cols: usize) -> Result<()> {
        if map.field() != self.field {
            return Err(Error::Malformed(format!("{what}: entries over {} in a {} structure", map.field(), self.field)));
        }
        if map.rows() != rows || map.cols() != cols {
            return Err(Error::Malformed(format!(
                "{what}: expected {rows}x{cols} matrix, got {}x{}",
                map.rows(),
                map.cols()
            )));
        }
        Ok(())
    }

    pub fn set_mult(&mut self, x: usize, y: usize, z: usize, map: LinMap) -> Result<()> {
        let (r, c) = (self.dim(x, z), self.dim(x, y) * self.dim(y, z));
        self.check_shape("mult", &map, r, c)?;
        let n = self.n();
        self.mult[(x * n + y) * n + z] = map;
        Ok(())
    }

    pub fn set_unit(&mut self, x: usize, map: LinMap) -> Result<()> {
        self.check_shape("unit", &map, self.dim(x, x), 1)?;
        self.unit[x] = map;
        Ok(())
    }

    pub fn set_comult(&mut self, x: usize, y: usize, map: LinMap) -> Result<()> {
        let d = self.dim(x, y);
        self.check_shape("comult", &map, d * d, d)?;
        let n = self.n();
        self.comult[x * n + y] = map;
        Ok(())
    }

    pub fn set_counit(&mut self, x: usize, y: usize, map: LinMap) -> Result<()> {
        self.check_shape("counit", &map, 1, self.dim(x, y))?;
        let n = self.n();
        self.counit[x * n + y] = map;
        Ok(())
    }

    /// Install a zero antipode family if none exists, so entries can be set.
    pub fn ensure_antipode(&mut self) {
        if self.antipode.is_none() {
            let n = self.n();
            let mut s = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    s.push(LinMap::zero(self.field, self.dim(y, x), self.dim(x, y)));
                }
            }
            self.antipode = Some(s);
        }
    }

    pub fn set_antipode(&mut self, x: usize, y: usize, map: LinMap) -> Result<()> {
        self.check_shape("antipode", &map, self.dim(y, x), self.dim(x, y))?;
        self.ensure_antipode();
        let n = self.n();
        self.antipode.as_mut().expect("installed")[x * n + y] = map;
        Ok(())
    }

    /// Install a whole antipode family indexed `[x * n + y]`.
    pub fn with_antipode(mut self, family: Vec<LinMap>) -> Result<Self> {
        let n = self.n();
        if family.len() != n * n {
            return Err(Error::Malformed("antipode family has the wrong length".into()));
        }
        self.antipode = None;
        for (idx, s) in family.into_iter().enumerate() {
            self.set_antipode(idx / n, idx % n, s)?;
        }
        Ok(self)
    }

    pub fn strip_antipode(&self) -> Self {
        let mut out = self.clone();
        out.antipode = None;
        out
    }

    /// Entry-level setters used by parsers and fixtures.
    pub fn set_mult_entry(&mut self, x: usize, y: usize, z: usize, i: usize, j: usize, k: usize, v: Scalar) -> Result<()> {
        let dyz = self.dim(y, z);
        self.check_index("mult", &[(i, self.dim(x, y)), (j, dyz), (k, self.dim(x, z))])?;
        let n = self.n();
        self.mult[(x * n + y) * n + z].set(k, i * dyz + j, v);
        Ok(())
    }

    pub fn set_unit_entry(&mut self, x: usize, i: usize, v: Scalar) -> Result<()> {
        self.check_index("unit", &[(i, self.dim(x, x))])?;
        self.unit[x].set(i, 0, v);
        Ok(())
    }

    pub fn set_comult_entry(&mut self, x: usize, y: usize, i: usize, j: usize, k: usize, v: Scalar) -> Result<()> {
        let d = self.dim(x, y);
        self.check_index("comult", &[(i, d), (j, d), (k, d)])?;
        let n = self.n();
        self.comult[x * n + y].set(j * d + k, i, v);
        Ok(())
    }

    pub fn set_counit_entry(&mut self, x: usize, y: usize, i: usize, v: Scalar) -> Result<()> {
        self.check_index("counit", &[(i, self.dim(x, y))])?;
        let n = self.n();
        self.counit[x * n + y].set(0, i, v);
        Ok(())
    }

    /// `S_{x,y}(e_i) = Σ_j v e_j`; the entry sits at row `j`, column `i`.
    pub fn set_antipode_entry(&mut self, x: usize, y: usize, i: usize, j: usize, v: Scalar) -> Result<()> {
        self.check_index("antipode", &[(i, self.dim(x, y)), (j, self.dim(y, x))])?;
        self.ensure_antipode();
        let n = self.n();
        self.antipode.as_mut().expect("installed")[x * n + y].set(j, i, v);
        Ok(())
    }

    fn check_index(&self, what: &str, pairs: &[(usize, usize)]) -> Result<()> {
        for &(i, d) in pairs {
            if i >= d {
                return Err(Error::Malformed(format!("{what}: index {i} out of range for dimension {d}")));
            }
        }
        Ok(())
    }

    /// Structure constant `c[i][j][k]` of `m_{x,y,z}`.
    pub fn mult_coeff(&self, x: usize, y: usize, z: usize, i: usize, j: usize, k: usize) -> &Scalar {
        self.mult(x, y, z).get(k, i * self.dim(y, z) + j)
    }

    /// Structure constant `D[i][j][k]` of `Δ_{x,y}`.
    pub fn comult_coeff(&self, x: usize, y: usize, i: usize, j: usize, k: usize) -> &Scalar {
        self.comult(x, y).get(j * self.dim(x, y) + k, i)
    }

    /// Tuple of labels, for reports.
    pub fn labels(&self, idx: &[usize]) -> Vec<&str> {
        idx.iter().map(|&i| self.label(i)).collect()
    }
}

pub(crate) fn check_labels(objects: &[String]) -> Result<()> {
    for (i, o) in objects.iter().enumerate() {
        if o.is_empty() || o.chars().any(char::is_whitespace) {
            return Err(Error::Malformed(format!("invalid object label `{o}`")));
        }
        if objects[..i].contains(o) {
            return Err(Error::Malformed(format!("duplicate object label `{o}`")));
        }
    }
    Ok(())
}

/// Iterate all `k`-tuples over `0..n` in lexicographic order.
pub fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(k as u32).unwrap_or(0);
    (0..total).map(move |mut t| {
        let mut v = vec![0; k];
        for slot in v.iter_mut().rev() {
            *slot = t % n;
            t /= n;
        }
        v
    })
}

/// All multi-indices in a box with the given side lengths, lexicographic.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |mut t| {
        let mut v = vec![0; dims.len()];
        for (slot, &d) in v.iter_mut().zip(dims).rev() {
            *slot = t % d;
            t /= d;
        }
        v
    })
}
