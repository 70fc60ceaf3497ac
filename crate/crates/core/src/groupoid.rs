//! Finite groupoids given by explicit tables, and their linearization.
//!
//! A morphism `g: y → x` belongs to `G_{x,y}`, so composites `g ∘ h` with
//! `h: z → y` land in `G_{x,z}` and linearization gives
//! `m_{x,y,z}(g ⊗ h) = g ∘ h` directly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::category::{check_labels, HopfCatData};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidData {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    /// Identity morphism of each object.
    pub identity: Vec<usize>,
    /// `(g, h) ↦ g ∘ h`, defined when `target(h) = source(g)`.
    pub compose: BTreeMap<(usize, usize), usize>,
    /// Declared inverses; a missing entry makes validation fail.
    pub inverse: Vec<Option<usize>>,
}

impl GroupoidData {
    pub fn morphism_index(&self, id: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.id == id)
    }

    fn reject(&self, g: usize, reason: impl Into<String>) -> Error {
        Error::NotGroupoid { morphism: self.morphisms[g].id.clone(), reason: reason.into() }
    }

    /// Exhaustive check of the category laws and of two-sided inverses.
    pub fn validate(&self) -> Result<()> {
        check_labels(&self.objects)?;
        let n = self.objects.len();
        let k = self.morphisms.len();
        for (i, m) in self.morphisms.iter().enumerate() {
            if m.source >= n || m.target >= n {
                return Err(self.reject(i, "has an undeclared endpoint"));
            }
            if self.morphisms[..i].iter().any(|o| o.id == m.id) {
                return Err(self.reject(i, "is declared twice"));
            }
        }
        if self.identity.len() != n || self.inverse.len() != k {
            return Err(Error::Malformed("identity or inverse table has the wrong length".into()));
        }
        for (x, &e) in self.identity.iter().enumerate() {
            let m = &self.morphisms[e];
            if m.source != x || m.target != x {
                return Err(self.reject(e, format!("is declared identity of `{}` but is not an endomorphism of it", self.objects[x])));
            }
        }
        for (&(g, h), &r) in &self.compose {
            if g >= k || h >= k || r >= k {
                return Err(Error::Malformed("composition table references an unknown morphism".into()));
            }
            if self.morphisms[h].target != self.morphisms[g].source {
                return Err(self.reject(g, format!("is composed with non-composable `{}`", self.morphisms[h].id)));
            }
        }
        let comp = |g: usize, h: usize| -> Result<usize> {
            self.compose
                .get(&(g, h))
                .copied()
                .ok_or_else(|| self.reject(g, format!("has no composite with `{}`", self.morphisms[h].id)))
        };
        for g in 0..k {
            for h in 0..k {
                if self.morphisms[h].target != self.morphisms[g].source {
                    continue;
                }
                let gh = comp(g, h)?;
                let expect = (self.morphisms[h].source, self.morphisms[g].target);
                if (self.morphisms[gh].source, self.morphisms[gh].target) != expect {
                    return Err(self.reject(gh, "has the wrong endpoints as a composite"));
                }
            }
        }
        for g in 0..k {
            let m = &self.morphisms[g];
            if comp(self.identity[m.target], g)? != g || comp(g, self.identity[m.source])? != g {
                return Err(self.reject(g, "is not fixed by identities"));
            }
            for h in 0..k {
                if self.morphisms[h].target != m.source {
                    continue;
                }
                for l in 0..k {
                    if self.morphisms[l].target != self.morphisms[h].source {
                        continue;
                    }
                    if comp(comp(g, h)?, l)? != comp(g, comp(h, l)?)? {
                        return Err(self.reject(g, "violates associativity"));
                    }
                }
            }
        }
        for g in 0..k {
            let Some(inv) = self.inverse[g] else {
                return Err(self.reject(g, "has no inverse"));
            };
            let m = &self.morphisms[g];
            let im = &self.morphisms[inv];
            if im.source != m.target || im.target != m.source {
                return Err(self.reject(g, "has an inverse with the wrong endpoints"));
            }
            if comp(g, inv)? != self.identity[m.target] || comp(inv, g)? != self.identity[m.source] {
                return Err(self.reject(g, "has no two-sided inverse"));
            }
        }
        Ok(())
    }

    /// Morphisms `y → x` in declaration order: the basis of `A_{x,y}`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&g| self.morphisms[g].target == x && self.morphisms[g].source == y)
            .collect()
    }

    /// The pair groupoid: exactly one morphism `y → x` for every pair, named `x<-y`.
    pub fn pair(labels: &[&str]) -> Self {
        let n = labels.len();
        let mut morphisms = Vec::new();
        for x in 0..n {
            for y in 0..n {
                morphisms.push(Morphism { id: format!("{}<-{}", labels[x], labels[y]), source: y, target: x });
            }
        }
        let idx = |x: usize, y: usize| x * n + y;
        let mut compose = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    compose.insert((idx(x, y), idx(y, z)), idx(x, z));
                }
            }
        }
        GroupoidData {
            objects: labels.iter().map(|s| s.to_string()).collect(),
            morphisms,
            identity: (0..n).map(|x| idx(x, x)).collect(),
            compose,
            inverse: (0..n * n).map(|g| Some(idx(g % n, g / n))).collect(),
        }
    }

    /// A group as a one-object groupoid, from element names and a Cayley table
    /// `table[a][b] = a·b`; element 0 must be the identity.
    pub fn group(object: &str, elements: &[&str], table: &[Vec<usize>]) -> Self {
        let k = elements.len();
        let mut compose = BTreeMap::new();
        for a in 0..k {
            for b in 0..k {
                compose.insert((a, b), table[a][b]);
            }
        }
        let inverse = (0..k).map(|a| (0..k).find(|&b| table[a][b] == 0)).collect();
        GroupoidData {
            objects: vec![object.to_string()],
            morphisms: elements.iter().map(|e| Morphism { id: e.to_string(), source: 0, target: 0 }).collect(),
            identity: vec![0],
            compose,
            inverse,
        }
    }

    /// The cyclic group `Z/n` on one object, elements `g0..g{n-1}`.
    pub fn cyclic(object: &str, n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupoidData::group(object, &refs, &table)
    }

    /// Disjoint union; morphism ids must already be distinct.
    pub fn disjoint_union(&self, other: &GroupoidData) -> Self {
        let no = self.objects.len();
        let km = self.morphisms.len();
        let mut out = self.clone();
        out.objects.extend(other.objects.iter().cloned());
        out.morphisms.extend(other.morphisms.iter().map(|m| Morphism {
            id: m.id.clone(),
            source: m.source + no,
            target: m.target + no,
        }));
        out.identity.extend(other.identity.iter().map(|e| e + km));
        for (&(g, h), &r) in &other.compose {
            out.compose.insert((g + km, h + km), r + km);
        }
        out.inverse.extend(other.inverse.iter().map(|i| i.map(|v| v + km)));
        out
    }
}

/// `A_{x,y} = k G_{x,y}` with grouplike comultiplication and `S(g) = g^{-1}`.
pub fn linearize_groupoid(g: &GroupoidData, field: Field) -> Result<HopfCatData> {
    g.validate()?;
    let n = g.objects.len();
    let homs: Vec<Vec<usize>> = (0..n * n).map(|p| g.hom(p / n, p % n)).collect();
    let hom = |x: usize, y: usize| &homs[x * n + y];
    // position of each morphism inside its hom basis
    let mut pos = vec![0; g.morphisms.len()];
    for h in &homs {
        for (i, &m) in h.iter().enumerate() {
            pos[m] = i;
        }
    }
    let dims = (0..n).map(|x| (0..n).map(|y| hom(x, y).len()).collect()).collect();
    let mut a = HopfCatData::new(field, g.objects.clone(), dims)?;
    let one = field.one();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for (i, &f) in hom(x, y).iter().enumerate() {
                    for (j, &h) in hom(y, z).iter().enumerate() {
                        let k = pos[g.compose[&(f, h)]];
                        a.set_mult_entry(x, y, z, i, j, k, one.clone())?;
                    }
                }
            }
        }
        a.set_unit_entry(x, pos[g.identity[x]], one.clone())?;
    }
    a.ensure_antipode();
    for x in 0..n {
        for y in 0..n {
            for (i, &f) in hom(x, y).iter().enumerate() {
                a.set_comult_entry(x, y, i, i, i, one.clone())?;
                a.set_counit_entry(x, y, i, one.clone())?;
                let inv = g.inverse[f].expect("validated");
                a.set_antipode_entry(x, y, i, pos[inv], one.clone())?;
            }
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_inverse_names_the_morphism() {
        let mut g = GroupoidData::cyclic("*", 2);
        g.inverse[1] = None;
        match g.validate() {
            Err(Error::NotGroupoid { morphism, .. }) => assert_eq!(morphism, "g1"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn monoid_is_rejected() {
        // {1, z} with z·z = z: z has no inverse
        let g = GroupoidData::group("*", &["1", "z"], &[vec![0, 1], vec![1, 1]]);
        assert!(matches!(g.validate(), Err(Error::NotGroupoid { .. })));
    }

    #[test]
    fn pair_groupoid_has_one_dimensional_homs() {
        let a = linearize_groupoid(&GroupoidData::pair(&["1", "2"]), Field::Rational).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(a.dim(x, y), 1);
                for z in 0..2 {
                    assert!(a.mult_coeff(x, y, z, 0, 0, 0).is_one());
                }
            }
        }
    }
}
