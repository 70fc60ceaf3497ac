//! Opposite and coopposite categories.
//!
//! `A^op` has hom objects `A^op_{x,y} = A_{y,x}` and composition
//! `m_{z,y,x} ∘ flip`; `A^cop` keeps the composition and flips every
//! comultiplication. Antipodes carry over as follows (all over a field, where
//! antipodes are bijective): `S^op_{x,y} = S_{x,y}^{-1}`,
//! `S^cop_{x,y} = S_{y,x}^{-1}` and `S^{opcop}_{x,y} = S_{y,x}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::category::{tuples, HopfCatData};
use crate::linalg::LinMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Opposite,
    Coopposite,
    Opcop,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "opposite" => Ok(Mode::Opposite),
            "coopposite" => Ok(Mode::Coopposite),
            "opcop" => Ok(Mode::Opcop),
            _ => Err(Error::Precondition(format!("unknown transform mode `{s}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Opposite => "opposite",
            Mode::Coopposite => "coopposite",
            Mode::Opcop => "opcop",
        })
    }
}

pub fn transform(a: &HopfCatData, mode: Mode) -> Result<HopfCatData> {
    match mode {
        Mode::Opposite => opposite(a),
        Mode::Coopposite => coopposite(a),
        Mode::Opcop => opcop(a),
    }
}

fn flip(a: &HopfCatData, d1: usize, d2: usize) -> LinMap {
    LinMap::factor_permutation(a.field(), &[d1, d2], &[1, 0])
}

/// Opposite composition, same coalgebras (re-indexed); antipode left unset.
fn opposite_shape(a: &HopfCatData) -> Result<HopfCatData> {
    let n = a.n();
    let dims = (0..n).map(|x| (0..n).map(|y| a.dim(y, x)).collect()).collect();
    let mut out = HopfCatData::new(a.field(), a.objects().to_vec(), dims)?;
    for t in tuples(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        // A^op_{x,y} ⊗ A^op_{y,z} = A_{y,x} ⊗ A_{z,y}
        let m = a.mult(z, y, x).compose(&flip(a, a.dim(y, x), a.dim(z, y)))?;
        out.set_mult(x, y, z, m)?;
    }
    for x in 0..n {
        out.set_unit(x, a.unit(x).clone())?;
    }
    for t in tuples(n, 2) {
        let (x, y) = (t[0], t[1]);
        out.set_comult(x, y, a.comult(y, x).clone())?;
        out.set_counit(x, y, a.counit(y, x).clone())?;
    }
    Ok(out)
}

fn invert_antipode(s: &LinMap) -> Result<LinMap> {
    s.invert()
        .map_err(|e| Error::Precondition(format!("antipode is not bijective: {e}")))
}

pub fn opposite(a: &HopfCatData) -> Result<HopfCatData> {
    let mut out = opposite_shape(a)?;
    if a.has_antipode() {
        for t in tuples(a.n(), 2) {
            let (x, y) = (t[0], t[1]);
            // S^op_{x,y}: A_{y,x} → A_{x,y}
            out.set_antipode(x, y, invert_antipode(a.require_antipode(x, y)?)?)?;
        }
    }
    Ok(out)
}

fn flip_comult(a: &HopfCatData) -> Result<HopfCatData> {
    let mut out = a.strip_antipode();
    for t in tuples(a.n(), 2) {
        let (x, y) = (t[0], t[1]);
        let d = a.dim(x, y);
        out.set_comult(x, y, flip(a, d, d).compose(a.comult(x, y))?)?;
    }
    Ok(out)
}

pub fn coopposite(a: &HopfCatData) -> Result<HopfCatData> {
    let mut out = flip_comult(a)?;
    if a.has_antipode() {
        for t in tuples(a.n(), 2) {
            let (x, y) = (t[0], t[1]);
            out.set_antipode(x, y, invert_antipode(a.require_antipode(y, x)?)?)?;
        }
    }
    Ok(out)
}

pub fn opcop(a: &HopfCatData) -> Result<HopfCatData> {
    let mut out = flip_comult(&opposite_shape(a)?)?;
    if a.has_antipode() {
        for t in tuples(a.n(), 2) {
            let (x, y) = (t[0], t[1]);
            out.set_antipode(x, y, a.require_antipode(y, x)?.clone())?;
        }
    }
    Ok(out)
}
