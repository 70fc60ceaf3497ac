//! The duoidal structure on `X × X`-indexed families of vector spaces and its bimonoids.
//!
//! `(M ⊙ N)_{x,z} = ⊕_y M_{x,y} ⊗ N_{y,z}` with unit `I` (`k` on the diagonal, 0
//! elsewhere), `(M • N)_{x,y} = M_{x,y} ⊗ N_{x,y}` with unit `J` (`k` everywhere).
//! Direct-sum blocks follow the declared object order. A bimonoid is a `⊙`-monoid and
//! `•`-comonoid whose structure maps are compatible through the interchange `ζ`; these are
//! exactly the semi-Hopf categories, with `μ_{x,y} = Σ_u m_{x,u,y}`.
//!
//! Checks of a bimonoid reuse the axiom names of [`crate::verify_structure`], so a failure
//! on one side of the correspondence can be matched with the other.

use crate::category::{multi_indices, tuples, HopfCatData};
use crate::error::{Error, Result};
use crate::linalg::LinMap;
use crate::report::{Check, Report};
use crate::scalar::Field;
use crate::tensor::{SparseMap, Tensor};
use crate::verify::{verify_structure, Level};

/// A family of dimensions `d(x, y)` indexed by `X × X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MkXObject {
    pub objects: Vec<String>,
    dims: Vec<usize>,
}

impl MkXObject {
    pub fn new(objects: Vec<String>, dims: Vec<Vec<usize>>) -> Result<Self> {
        let n = objects.len();
        if dims.len() != n || dims.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("dimension table must be {n}x{n}")));
        }
        Ok(MkXObject { objects, dims: dims.concat() })
    }

    pub fn n(&self) -> usize {
        self.objects.len()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.n() + y]
    }

    pub fn dims_table(&self) -> Vec<Vec<usize>> {
        self.dims.chunks(self.n().max(1)).map(<[usize]>::to_vec).take(self.n()).collect()
    }

    /// The `⊙`-unit.
    pub fn unit_i(objects: Vec<String>) -> Self {
        let n = objects.len();
        let dims = (0..n).map(|x| (0..n).map(|y| usize::from(x == y)).collect()).collect();
        MkXObject::new(objects, dims).expect("square")
    }

    /// The `•`-unit.
    pub fn unit_j(objects: Vec<String>) -> Self {
        let n = objects.len();
        MkXObject::new(objects, vec![vec![1; n]; n]).expect("square")
    }
}

fn same_objects(m: &MkXObject, n: &MkXObject) -> Result<()> {
    if m.objects != n.objects {
        return Err(Error::Precondition("families are indexed by different object sets".into()));
    }
    Ok(())
}

pub fn white_tensor(m: &MkXObject, k: &MkXObject) -> Result<MkXObject> {
    same_objects(m, k)?;
    let n = m.n();
    let dims = (0..n).map(|x| (0..n).map(|z| (0..n).map(|y| m.dim(x, y) * k.dim(y, z)).sum()).collect()).collect();
    MkXObject::new(m.objects.clone(), dims)
}

pub fn black_tensor(m: &MkXObject, k: &MkXObject) -> Result<MkXObject> {
    same_objects(m, k)?;
    let n = m.n();
    let dims = (0..n).map(|x| (0..n).map(|y| m.dim(x, y) * k.dim(x, y)).collect()).collect();
    MkXObject::new(m.objects.clone(), dims)
}

/// Offset of the `y`-summand `M_{x,y} ⊗ N_{y,z}` inside `(M ⊙ N)_{x,z}`.
pub fn white_offset(m: &MkXObject, k: &MkXObject, x: usize, y: usize, z: usize) -> usize {
    (0..y).map(|u| m.dim(x, u) * k.dim(u, z)).sum()
}

/// `ζ_{M,N,P,Q}` at `(x, y)`: `((M•N) ⊙ (P•Q))_{x,y} → ((M⊙P) • (N⊙Q))_{x,y}`, swapping
/// the middle factors of each `u`-summand and including it as the `(u, u)` summand.
pub fn zeta(field: Field, m: &MkXObject, k: &MkXObject, p: &MkXObject, q: &MkXObject, x: usize, y: usize) -> Result<LinMap> {
    same_objects(m, k)?;
    same_objects(m, p)?;
    same_objects(m, q)?;
    let mk = black_tensor(m, k)?;
    let pq = black_tensor(p, q)?;
    let mp = white_tensor(m, p)?;
    let kq = white_tensor(k, q)?;
    let cols = white_tensor(&mk, &pq)?.dim(x, y);
    let right = kq.dim(x, y);
    let mut out = LinMap::zero(field, mp.dim(x, y) * right, cols);
    for u in 0..m.n() {
        let dims = [m.dim(x, u), k.dim(x, u), p.dim(u, y), q.dim(u, y)];
        let base = white_offset(&mk, &pq, x, u, y);
        for (c, idx) in multi_indices(&dims).enumerate() {
            let r1 = white_offset(m, p, x, u, y) + idx[0] * dims[2] + idx[2];
            let r2 = white_offset(k, q, x, u, y) + idx[1] * dims[3] + idx[3];
            out.set(r1 * right + r2, base + c, field.one());
        }
    }
    Ok(out)
}

/// `ϖ: J ⊙ J → J` at `(x, y)`: every summand maps identically onto `k`.
pub fn varpi(field: Field, n: usize) -> LinMap {
    LinMap::from_rows(field, &[vec![field.one(); n]], n).expect("shape")
}

/// `τ: I → J` at `(x, y)`.
pub fn tau(field: Field, x: usize, y: usize) -> LinMap {
    if x == y {
        LinMap::identity(field, 1)
    } else {
        LinMap::zero(field, 1, 0)
    }
}

/// `δ: I → I • I` at `(x, y)`.
pub fn delta_i(field: Field, x: usize, y: usize) -> LinMap {
    if x == y {
        LinMap::identity(field, 1)
    } else {
        LinMap::zero(field, 0, 0)
    }
}

/// Unit and associativity laws relating `ϖ`, `τ`, `δ` and `ζ` on `|X| = n`.
pub fn verify_duoidal_units(field: Field, objects: &[String]) -> Result<Report> {
    let n = objects.len();
    let j = MkXObject::unit_j(objects.to_vec());
    let i = MkXObject::unit_i(objects.to_vec());
    let labels: Vec<&str> = objects.iter().map(String::as_str).collect();
    let mut r = Report::new();
    let w = varpi(field, n);
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let obj = [labels[x], labels[y]];
        // (J⊙J)⊙J and J⊙(J⊙J) at (x,y) are both k^{X×X}; blocks (v, u) and (u, v) respectively
        let mut left = LinMap::zero(field, n, n * n);
        let mut right = LinMap::zero(field, n, n * n);
        for v in 0..n {
            for u in 0..n {
                left.set(v, v * n + u, field.one());
                right.set(u, v * n + u, field.one());
            }
        }
        let lhs = w.compose(&left)?;
        let rhs = w.compose(&right)?;
        let mut c = Check::new("varpi-associativity", &obj);
        c.expect(&[], lhs == rhs, || "composites differ".into());
        r.push(c.finish());
        // (τ ⊙ J): (I⊙J)_{x,y} = k (the u = x summand) → (J⊙J)_{x,y}, then ϖ
        let mut incl_l = LinMap::zero(field, n, 1);
        incl_l.set(x, 0, field.one());
        let mut incl_r = LinMap::zero(field, n, 1);
        incl_r.set(y, 0, field.one());
        let mut c = Check::new("varpi-unit", &obj);
        c.expect(&[0], w.compose(&incl_l)?.is_identity(), || "left unit fails".into());
        c.expect(&[1], w.compose(&incl_r)?.is_identity(), || "right unit fails".into());
        r.push(c.finish());
        // (τ • I) ∘ δ = id on I
        let d = delta_i(field, x, y);
        let tau_i = tau(field, x, y).kron(&LinMap::identity(field, i.dim(x, y)))?;
        let mut c = Check::new("delta-counit", &obj);
        let back = if x == y { tau_i.compose(&d)?.is_identity() } else { d.rows() == 0 };
        c.expect(&[], back, || "(τ • I) ∘ δ is not the identity".into());
        r.push(c.finish());
        // (ϖ • ϖ) ∘ ζ_{J,J,J,J} = ϖ, under J • J = J
        let z = zeta(field, &j, &j, &j, &j, x, y)?;
        let ww = w.kron(&w)?;
        let mut c = Check::new("interchange-unit", &obj);
        c.expect(&[], ww.compose(&z)? == w, || "(ϖ • ϖ) ∘ ζ differs from ϖ".into());
        r.push(c.finish());
    }
    Ok(r)
}

/// A `⊙`-monoid and `•`-comonoid on one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimonoidData {
    pub field: Field,
    pub carrier: MkXObject,
    /// `μ_{x,y}: (M ⊙ M)_{x,y} → M_{x,y}`, index `x * n + y`.
    pub mu: Vec<LinMap>,
    /// `η_x ∈ M_{x,x}` as a `d(x,x) × 1` column.
    pub eta: Vec<LinMap>,
    pub delta: Vec<LinMap>,
    pub eps: Vec<LinMap>,
}

impl BimonoidData {
    pub fn zero(field: Field, carrier: MkXObject) -> Self {
        let n = carrier.n();
        let mm = white_tensor(&carrier, &carrier).expect("same objects");
        let mut mu = Vec::new();
        let mut delta = Vec::new();
        let mut eps = Vec::new();
        for t in tuples(n, 2) {
            let d = carrier.dim(t[0], t[1]);
            mu.push(LinMap::zero(field, d, mm.dim(t[0], t[1])));
            delta.push(LinMap::zero(field, d * d, d));
            eps.push(LinMap::zero(field, 1, d));
        }
        let eta = (0..n).map(|x| LinMap::zero(field, carrier.dim(x, x), 1)).collect();
        BimonoidData { field, carrier, mu, eta, delta, eps }
    }

    pub fn n(&self) -> usize {
        self.carrier.n()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let n = self.n();
        let c = &self.carrier;
        let mm = white_tensor(c, c)?;
        let bad = |what: &str| Err(Error::Malformed(format!("bimonoid {what} has the wrong shape")));
        if self.mu.len() != n * n || self.delta.len() != n * n || self.eps.len() != n * n || self.eta.len() != n {
            return bad("map list");
        }
        for t in tuples(n, 2) {
            let (x, y) = (t[0], t[1]);
            let d = c.dim(x, y);
            let k = x * n + y;
            if (self.mu[k].rows(), self.mu[k].cols()) != (d, mm.dim(x, y)) {
                return bad("multiplication");
            }
            if (self.delta[k].rows(), self.delta[k].cols()) != (d * d, d) {
                return bad("comultiplication");
            }
            if (self.eps[k].rows(), self.eps[k].cols()) != (1, d) {
                return bad("counit");
            }
        }
        for x in 0..n {
            if (self.eta[x].rows(), self.eta[x].cols()) != (c.dim(x, x), 1) {
                return bad("unit");
            }
        }
        Ok(())
    }

    /// The `u`-summand of `μ_{x,y}`, i.e. `M_{x,u} ⊗ M_{u,y} → M_{x,y}`.
    pub fn mu_block(&self, x: usize, u: usize, y: usize) -> LinMap {
        let c = &self.carrier;
        let off = white_offset(c, c, x, u, y);
        let width = c.dim(x, u) * c.dim(u, y);
        let m = &self.mu[x * self.n() + y];
        let mut out = LinMap::zero(self.field, m.rows(), width);
        for r in 0..m.rows() {
            for j in 0..width {
                out.set(r, j, m.get(r, off + j).clone());
            }
        }
        out
    }

    fn labels(&self, idx: &[usize]) -> Vec<&str> {
        idx.iter().map(|&i| self.carrier.objects[i].as_str()).collect()
    }
}

/// `(M ⊙ M)_{x,y} → ((M•M) ⊙ (M•M))_{x,y}`, block diagonal in `u` with blocks `Δ ⊗ Δ`.
fn white_of(b: &BimonoidData, x: usize, y: usize, f: impl Fn(usize, usize) -> LinMap, out_dim: impl Fn(usize, usize) -> usize) -> Result<LinMap> {
    let c = &b.carrier;
    let n = b.n();
    let rows: usize = (0..n).map(|u| out_dim(x, u) * out_dim(u, y)).sum();
    let cols: usize = (0..n).map(|u| c.dim(x, u) * c.dim(u, y)).sum();
    let mut out = LinMap::zero(b.field, rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for u in 0..n {
        let blk = f(x, u).kron(&f(u, y))?;
        for r in 0..blk.rows() {
            for j in 0..blk.cols() {
                let v = blk.get(r, j);
                if !v.is_zero() {
                    out.set(r0 + r, c0 + j, v.clone());
                }
            }
        }
        r0 += blk.rows();
        c0 += blk.cols();
    }
    Ok(out)
}

/// Compare two maps with the same domain column by column; the witness is the domain
/// index, split as `(u, i, j)` for a `⊙`-summand when `split` is given.
fn compare_maps(c: &mut Check, lhs: &LinMap, rhs: &LinMap, split: Option<&dyn Fn(usize) -> Vec<usize>>) {
    let f = lhs.field();
    for col in 0..lhs.cols() {
        let (l, r) = (lhs.col_vec(col), rhs.col_vec(col));
        let w = split.map_or_else(|| vec![col], |s| s(col));
        c.compare(&w, &Tensor::from_vec(f, &l), &Tensor::from_vec(f, &r));
    }
}

/// Monoid, comonoid and the four compatibility laws, on every basis element.
pub fn verify_bimonoid(b: &BimonoidData) -> Result<Report> {
    b.check_shapes()?;
    let f = b.field;
    let c = &b.carrier;
    let n = b.n();
    let mut r = Report::new();
    let m = |x: usize, u: usize, y: usize| SparseMap::new(&b.mu_block(x, u, y), &[c.dim(x, u), c.dim(u, y)], &[c.dim(x, y)]);
    let blocks: Vec<SparseMap> = tuples(n, 3).map(|t| m(t[0], t[1], t[2])).collect();
    let m = |x: usize, u: usize, y: usize| &blocks[(x * n + u) * n + y];
    let delta = |x: usize, y: usize| SparseMap::new(&b.delta[x * n + y], &[c.dim(x, y)], &[c.dim(x, y), c.dim(x, y)]);
    let eps = |x: usize, y: usize| SparseMap::new(&b.eps[x * n + y], &[c.dim(x, y)], &[]);
    let eta = |x: usize| Tensor::from_vec(f, &b.eta[x].col_vec(0));

    for t in tuples(n, 4) {
        let (x, u, v, y) = (t[0], t[1], t[2], t[3]);
        let dims = [c.dim(x, u), c.dim(u, v), c.dim(v, y)];
        let mut ch = Check::new("associativity", &b.labels(&t));
        for idx in multi_indices(&dims) {
            let e = Tensor::basis(f, &dims, &idx);
            let lhs = e.apply(0, m(x, u, v)).apply(0, m(x, v, y));
            let rhs = e.apply(1, m(u, v, y)).apply(0, m(x, u, y));
            ch.compare(&idx, &lhs, &rhs);
        }
        r.push(ch.finish());
    }
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let obj = b.labels(&t);
        let d = c.dim(x, y);
        let mut lu = Check::new("left-unit", &obj);
        let mut ru = Check::new("right-unit", &obj);
        let mut coassoc = Check::new("coassociativity", &obj);
        let mut lc = Check::new("left-counit", &obj);
        let mut rc = Check::new("right-counit", &obj);
        let (dl, el) = (delta(x, y), eps(x, y));
        for i in 0..d {
            let e = Tensor::basis(f, &[d], &[i]);
            lu.compare(&[i], &eta(x).tensor(&e).apply(0, m(x, x, y)), &e);
            ru.compare(&[i], &e.tensor(&eta(y)).apply(0, m(x, y, y)), &e);
            let de = e.apply(0, &dl);
            coassoc.compare(&[i], &de.apply(0, &dl), &de.apply(1, &dl));
            lc.compare(&[i], &de.apply(0, &el), &e);
            rc.compare(&[i], &de.apply(1, &el), &e);
        }
        for ch in [lu, ru, coassoc, lc, rc] {
            r.push(ch.finish());
        }

        // the four compatibility identities as matrix equalities on (M ⊙ M)_{x,y} or I_{x,y}
        let split = |col: usize| {
            let mut rest = col;
            for u in 0..n {
                let w = c.dim(x, u) * c.dim(u, y);
                if rest < w {
                    return vec![u, rest / c.dim(u, y).max(1), rest % c.dim(u, y).max(1)];
                }
                rest -= w;
            }
            vec![col]
        };
        let mu = &b.mu[x * n + y];
        let dd = white_of(b, x, y, |p, q| b.delta[p * n + q].clone(), |p, q| c.dim(p, q) * c.dim(p, q))?;
        let z = zeta(f, c, c, c, c, x, y)?;
        let lhs = b.delta[x * n + y].compose(mu)?;
        let rhs = mu.kron(mu)?.compose(&z)?.compose(&dd)?;
        let mut ch = Check::new("comult-multiplicative", &obj);
        compare_maps(&mut ch, &lhs, &rhs, Some(&split));
        r.push(ch.finish());

        let ee = white_of(b, x, y, |p, q| b.eps[p * n + q].clone(), |_, _| 1)?;
        let lhs = b.eps[x * n + y].compose(mu)?;
        let rhs = varpi(f, n).compose(&ee)?;
        let mut ch = Check::new("counit-multiplicative", &obj);
        compare_maps(&mut ch, &lhs, &rhs, Some(&split));
        r.push(ch.finish());

        if x == y {
            let e = &b.eta[x];
            let mut ch = Check::new("comult-unit", &obj);
            let lhs = e.kron(e)?.compose(&delta_i(f, x, y))?;
            compare_maps(&mut ch, &lhs, &b.delta[x * n + y].compose(e)?, None);
            r.push(ch.finish());
            let mut ch = Check::new("counit-unit", &obj);
            compare_maps(&mut ch, &b.eps[x * n + y].compose(e)?, &tau(f, x, y), None);
            r.push(ch.finish());
        }
    }
    Ok(r)
}

/// `μ_{x,y} = Σ_u m_{x,u,y}`, `η` on the diagonal, same coalgebras. No validation.
pub fn bimonoid_shape(a: &HopfCatData) -> BimonoidData {
    let n = a.n();
    let f = a.field();
    let carrier = MkXObject::new(a.objects().to_vec(), a.dims_table()).expect("square");
    let mut b = BimonoidData::zero(f, carrier);
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        let mut mu = LinMap::zero(f, a.dim(x, y), 0);
        for u in 0..n {
            mu = mu.hstack(a.mult(x, u, y)).expect("same rows");
        }
        b.mu[x * n + y] = mu;
        b.delta[x * n + y] = a.comult(x, y).clone();
        b.eps[x * n + y] = a.counit(x, y).clone();
    }
    for x in 0..n {
        b.eta[x] = a.unit(x).clone();
    }
    b
}

/// The bimonoid of a semi-Hopf category; the antipode, if any, is dropped.
pub fn bimonoid_from_category(a: &HopfCatData) -> Result<BimonoidData> {
    if !verify_structure(a, Level::Semihopf)?.passed() {
        return Err(Error::Precondition("input is not a semi-Hopf category".into()));
    }
    Ok(bimonoid_shape(a))
}

/// `m_{x,u,y} = μ_{x,y} ∘ i_u`. No validation.
pub fn category_shape(b: &BimonoidData) -> Result<HopfCatData> {
    b.check_shapes()?;
    let n = b.n();
    let mut a = HopfCatData::new(b.field, b.carrier.objects.clone(), b.carrier.dims_table())?;
    for t in tuples(n, 3) {
        a.set_mult(t[0], t[1], t[2], b.mu_block(t[0], t[1], t[2]))?;
    }
    for t in tuples(n, 2) {
        a.set_comult(t[0], t[1], b.delta[t[0] * n + t[1]].clone())?;
        a.set_counit(t[0], t[1], b.eps[t[0] * n + t[1]].clone())?;
    }
    for x in 0..n {
        a.set_unit(x, b.eta[x].clone())?;
    }
    Ok(a)
}

pub fn category_from_bimonoid(b: &BimonoidData) -> Result<HopfCatData> {
    if !verify_bimonoid(b)?.passed() {
        return Err(Error::Precondition("input is not a bimonoid".into()));
    }
    category_shape(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn j_white_j_has_dimension_of_x() {
        let j = MkXObject::unit_j(labels(2));
        assert_eq!(white_tensor(&j, &j).unwrap().dims_table(), vec![vec![2, 2], vec![2, 2]]);
    }

    #[test]
    fn units_are_neutral_on_dimensions() {
        let m = MkXObject::new(labels(2), vec![vec![1, 3], vec![2, 4]]).unwrap();
        let i = MkXObject::unit_i(labels(2));
        let j = MkXObject::unit_j(labels(2));
        assert_eq!(white_tensor(&m, &i).unwrap(), m);
        assert_eq!(black_tensor(&m, &j).unwrap(), m);
    }

    #[test]
    fn zeta_on_one_dimensional_families() {
        let f = Field::Rational;
        let j1 = MkXObject::unit_j(labels(1));
        assert!(zeta(f, &j1, &j1, &j1, &j1, 0, 0).unwrap().is_identity());
        // |X| = 2: the u-summand lands at (u, u) of the 2x2 double sum
        let j2 = MkXObject::unit_j(labels(2));
        let z = zeta(f, &j2, &j2, &j2, &j2, 0, 1).unwrap();
        assert_eq!((z.rows(), z.cols()), (4, 2));
        let expect = LinMap::from_i64(f, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
        assert_eq!(z, expect);
    }

    #[test]
    fn duoidal_units_hold_up_to_four_objects() {
        for n in 1..=4 {
            assert!(verify_duoidal_units(Field::Rational, &labels(n)).unwrap().passed());
        }
    }
}
