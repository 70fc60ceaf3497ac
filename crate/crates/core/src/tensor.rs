//! Sparse elements of tensor products of coordinate spaces.
//!
//! Axiom checks evaluate both sides of an identity on one basis element at a
//! time; a [`Tensor`] carries the intermediate value as a sparse sum of pure
//! basis tensors, and [`SparseMap`] applies a structure map to a run of
//! consecutive factors.

use std::collections::BTreeMap;

use crate::linalg::{LinMap, TensorIndex};
use crate::scalar::{Field, Scalar};

/// Column-sparse view of a [`LinMap`] with the tensor shapes of its domain and codomain.
#[derive(Clone, Debug)]
pub struct SparseMap {
    in_dims: Vec<usize>,
    out_dims: Vec<usize>,
    columns: Vec<Vec<(Vec<usize>, Scalar)>>,
}

impl SparseMap {
    /// `map` must have `prod(out_dims)` rows and `prod(in_dims)` columns.
    pub fn new(map: &LinMap, in_dims: &[usize], out_dims: &[usize]) -> Self {
        let tin = TensorIndex::new(in_dims);
        let tout = TensorIndex::new(out_dims);
        assert_eq!(map.cols(), tin.size(), "domain shape");
        assert_eq!(map.rows(), tout.size(), "codomain shape");
        let columns = (0..map.cols())
            .map(|c| {
                (0..map.rows())
                    .filter(|&r| !map.get(r, c).is_zero())
                    .map(|r| (tout.unflatten(r).expect("in range"), map.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SparseMap { in_dims: in_dims.to_vec(), out_dims: out_dims.to_vec(), columns }
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dims(&self) -> &[usize] {
        &self.out_dims
    }
}

/// A sparse vector in `V_0 ⊗ … ⊗ V_{n-1}` with `dim V_i = dims[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zero(field: Field, dims: &[usize]) -> Self {
        Tensor { field, dims: dims.to_vec(), terms: BTreeMap::new() }
    }

    pub fn basis(field: Field, dims: &[usize], idx: &[usize]) -> Self {
        assert_eq!(dims.len(), idx.len());
        assert!(idx.iter().zip(dims).all(|(i, d)| i < d), "basis index out of range");
        let mut t = Tensor::zero(field, dims);
        t.terms.insert(idx.to_vec(), field.one());
        t
    }

    /// The empty tensor product, i.e. the ground field, holding `s`.
    pub fn scalar(s: Scalar) -> Self {
        let mut t = Tensor::zero(s.field(), &[]);
        t.add_term(vec![], s);
        t
    }

    pub fn from_vec(field: Field, v: &[Scalar]) -> Self {
        let mut t = Tensor::zero(field, &[v.len()]);
        for (i, s) in v.iter().enumerate() {
            t.add_term(vec![i], s.clone());
        }
        t
    }

    /// Flattened dense coordinates, row-major.
    pub fn to_vec(&self) -> Vec<Scalar> {
        let ti = TensorIndex::new(&self.dims);
        let mut out = vec![self.field.zero(); ti.size()];
        for (idx, s) in &self.terms {
            out[ti.flatten(idx).expect("in range")] = s.clone();
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, idx: Vec<usize>, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &s;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// Replace factors `pos..pos+k` (where `k = map.in_dims().len()`) by the image under `map`.
    pub fn apply(&self, pos: usize, map: &SparseMap) -> Tensor {
        let k = map.in_dims.len();
        assert!(pos + k <= self.dims.len(), "factor range out of bounds");
        assert_eq!(&self.dims[pos..pos + k], map.in_dims.as_slice(), "factor shape mismatch at {pos}");
        let mut dims = self.dims[..pos].to_vec();
        dims.extend_from_slice(&map.out_dims);
        dims.extend_from_slice(&self.dims[pos + k..]);
        let tin = TensorIndex::new(&map.in_dims);
        let mut out = Tensor::zero(self.field, &dims);
        for (idx, s) in &self.terms {
            let col = tin.flatten(&idx[pos..pos + k]).expect("in range");
            for (oidx, c) in &map.columns[col] {
                let mut nidx = idx[..pos].to_vec();
                nidx.extend_from_slice(oidx);
                nidx.extend_from_slice(&idx[pos + k..]);
                out.add_term(nidx, s * c);
            }
        }
        out
    }

    /// Reorder factors: factor `k` of the result is factor `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zero(self.field, &dims);
        for (idx, s) in &self.terms {
            out.add_term(perm.iter().map(|&p| idx[p]).collect(), s.clone());
        }
        out
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut out = Tensor::zero(self.field, &dims);
        for (a, s) in &self.terms {
            for (b, t) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, s * t);
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.field, &self.dims);
        for (idx, t) in &self.terms {
            out.add_term(idx.clone(), t * s);
        }
        out
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "adding tensors of different shapes");
        let mut out = self.clone();
        for (idx, s) in &other.terms {
            out.add_term(idx.clone(), s.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&-self.field.one()))
    }

    /// Contract to a scalar; only valid for the empty tensor product.
    pub fn as_scalar(&self) -> Scalar {
        assert!(self.dims.is_empty(), "not a scalar");
        self.coeff(&[])
    }

    /// Drop factors of dimension one, identifying `k ⊗ V ≅ V`.
    pub fn squeeze_factor(&self, pos: usize) -> Tensor {
        assert_eq!(self.dims[pos], 1);
        let mut dims = self.dims.clone();
        dims.remove(pos);
        let mut out = Tensor::zero(self.field, &dims);
        for (idx, s) in &self.terms {
            let mut n = idx.clone();
            n.remove(pos);
            out.add_term(n, s.clone());
        }
        out
    }

    /// Short human-readable rendering of the nonzero coordinates (first few).
    pub fn describe(&self, limit: usize) -> String {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .take(limit)
            .map(|(idx, s)| {
                let i: Vec<String> = idx.iter().map(usize::to_string).collect();
                format!("{}@({})", s, i.join(","))
            })
            .collect();
        if self.terms.len() > limit {
            parts.push(format!("... {} more", self.terms.len() - limit));
        }
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn apply_matches_dense_kron() {
        let f = LinMap::from_i64(Q, &[&[1, 2], &[3, 4], &[0, 1]]);
        let g = LinMap::from_i64(Q, &[&[2, 0, 1], &[1, 1, 1]]);
        let fg = f.kron(&g).unwrap();
        let sf = SparseMap::new(&f, &[2], &[3]);
        let sg = SparseMap::new(&g, &[3], &[2]);
        for i in 0..2 {
            for j in 0..3 {
                let t = Tensor::basis(Q, &[2, 3], &[i, j]).apply(0, &sf).apply(1, &sg);
                assert_eq!(t.to_vec(), fg.col_vec(i * 3 + j));
            }
        }
    }

    #[test]
    fn permute_matches_factor_permutation() {
        let p = LinMap::factor_permutation(Q, &[2, 3, 2], &[2, 0, 1]);
        for flat in 0..12 {
            let idx = TensorIndex::new(&[2, 3, 2]).unflatten(flat).unwrap();
            let t = Tensor::basis(Q, &[2, 3, 2], &idx).permute(&[2, 0, 1]);
            assert_eq!(t.to_vec(), p.col_vec(flat));
        }
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = Tensor::basis(Q, &[2], &[1]);
        assert!(a.sub(&a).is_zero());
    }
}
