//! Dense exact matrices and tensor-index bookkeeping.
//!
//! A [`LinMap`] stores a `rows x cols` matrix in row-major order; rows index the
//! codomain basis and columns the domain basis. Tensor products of spaces are
//! flattened row-major with the leftmost factor varying slowest, everywhere.

use crate::error::LinalgError;
use crate::scalar::{Field, Scalar};

/// Row-major flattening of multi-indices over `factor_dims`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    factor_dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(factor_dims: &[usize]) -> Self {
        TensorIndex { factor_dims: factor_dims.to_vec() }
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    pub fn size(&self) -> usize {
        self.factor_dims.iter().product()
    }

    /// Flat position of `idx`; `None` if any coordinate is out of range.
    pub fn flatten(&self, idx: &[usize]) -> Option<usize> {
        if idx.len() != self.factor_dims.len() {
            return None;
        }
        let mut flat = 0;
        for (&i, &d) in idx.iter().zip(&self.factor_dims) {
            if i >= d {
                return None;
            }
            flat = flat * d + i;
        }
        Some(flat)
    }

    pub fn unflatten(&self, mut flat: usize) -> Option<Vec<usize>> {
        if flat >= self.size() {
            return None;
        }
        let mut out = vec![0; self.factor_dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factor_dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        Some(out)
    }
}

/// A linear map between coordinate spaces, as a dense exact matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl LinMap {
    /// Validates that the entry count matches and that every entry lies in `field`.
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(LinalgError::FieldMismatch { left: field, right: bad.field() });
        }
        Ok(LinMap { field, rows, cols, entries })
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>], cols: usize) -> Result<Self, LinalgError> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimMismatch(format!("row of length {} where {cols} expected", r.len())));
        }
        LinMap::new(field, rows.len(), cols, rows.concat())
    }

    /// Convenience for tests and fixtures: integer entries.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                r.iter().map(|&v| field.from_i64(v))
            })
            .collect();
        LinMap { field, rows: rows.len(), cols, entries }
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        LinMap { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = LinMap::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// Column vector as an `n x 1` matrix.
    pub fn column(field: Field, v: &[Scalar]) -> Self {
        LinMap { field, rows: v.len(), cols: 1, entries: v.to_vec() }
    }

    /// Covector as a `1 x n` matrix.
    pub fn row(field: Field, v: &[Scalar]) -> Self {
        LinMap { field, rows: 1, cols: v.len(), entries: v.to_vec() }
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn domain_dim(&self) -> usize {
        self.cols
    }
    pub fn codomain_dim(&self) -> usize {
        self.rows
    }
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar from foreign field");
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let slot = &mut self.entries[r * self.cols + c];
        *slot = &*slot + v;
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    fn check_field(&self, other: &LinMap) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch { left: self.field, right: other.field });
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = LinMap::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Apply to a coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimMismatch(format!("vector of length {} into {} columns", v.len(), self.cols)));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.field() != self.field {
                return Err(LinalgError::FieldMismatch { left: self.field, right: x.field() });
            }
            if x.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *slot = &*slot + &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: `(f⊗g)[(i,k),(j,l)] = f[i,j]·g[k,l]`.
    pub fn kron(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.check_field(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = LinMap::zero(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> LinMap {
        let mut out = LinMap::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &LinMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<LinMap, LinalgError> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(LinMap { field: self.field, rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c { e.is_one() } else { e.is_zero() }
                })
            })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (LinMap, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inverse().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank and a canonical kernel basis (the rows of a reduced echelon matrix).
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<Scalar>>) {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut next_pivot = 0;
        for free in 0..self.cols {
            if next_pivot < pivots.len() && pivots[next_pivot] == free {
                next_pivot += 1;
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            basis.push(v);
        }
        (pivots.len(), echelon_basis(self.field, self.cols, &basis))
    }

    pub fn invert(&self) -> Result<LinMap, LinalgError> {
        let not_invertible = |rank| LinalgError::NotInvertible { rank, rows: self.rows, cols: self.cols };
        if self.rows != self.cols {
            return Err(not_invertible(self.rank()));
        }
        let n = self.rows;
        let mut aug = LinMap::zero(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.entries[r * 2 * n + c] = self.get(r, c).clone();
            }
            aug.entries[r * 2 * n + n + r] = self.field.one();
        }
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().take_while(|&&p| p < n).count();
        if rank < n {
            return Err(not_invertible(rank));
        }
        let mut inv = LinMap::zero(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.entries[r * n + c] = red.get(r, n + c).clone();
            }
        }
        Ok(inv)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(LinalgError::DimMismatch("hstack row counts differ".into()));
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(&self.entries[r * self.cols..(r + 1) * self.cols]);
            entries.extend_from_slice(&other.entries[r * other.cols..(r + 1) * other.cols]);
        }
        Ok(LinMap { field: self.field, rows: self.rows, cols, entries })
    }

    /// Permutation of tensor factors: the map sending `e_{i_0}⊗…⊗e_{i_{n-1}}`
    /// over `dims` to the basis vector whose `k`-th factor is `i_{perm[k]}`.
    pub fn factor_permutation(field: Field, dims: &[usize], perm: &[usize]) -> LinMap {
        let src = TensorIndex::new(dims);
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let dst = TensorIndex::new(&out_dims);
        let n = src.size();
        let mut m = LinMap::zero(field, n, n);
        for flat in 0..n {
            let idx = src.unflatten(flat).expect("in range");
            let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            m.set(dst.flatten(&out).expect("in range"), flat, field.one());
        }
        m
    }
}

/// Row-reduce a list of vectors and drop zero rows: a canonical basis of their span.
pub fn echelon_basis(field: Field, dim: usize, vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = LinMap::from_rows(field, vectors, dim).expect("vectors share a length");
    let (red, pivots) = m.rref();
    (0..pivots.len()).map(|r| red.row_vec(r)).collect()
}
