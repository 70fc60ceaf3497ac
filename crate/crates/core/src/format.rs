//! The sparse text format for every structure kind.
//!
//! ```text
//! format hopfcat 1
//! kind hopf-category
//! field q
//! objects 1 2
//! has-antipode yes
//! dim 1 1 1
//! mult 1 1 1 0 0 0 1
//! ```
//!
//! A file is a header (`format`, `kind`, then kind-specific keys, each at most once)
//! followed by one record per line. `#` starts a comment. Objects are referenced by
//! label, basis vectors by 0-based index, coefficients as `a` or `a/b` (residues for
//! `fp:<p>`). Omitted coefficients are zero. Records:
//!
//! | kind | records |
//! |---|---|
//! | hopf-category | `dim x y d`, `mult x y z i j k v`, `unit x i v`, `comult x y i j k v`, `counit x y i v`, `antipode x y i j v` |
//! | dual-hopf-category | `dim x y d`, `alg-mult x y i j k v`, `alg-unit x y i v`, `cocomp x y z k i j v`, `dual-counit x i v`, `antipode x y i j v` |
//! | weak-hopf | `block x y offset length`, `mult i j k v`, `unit i v`, `comult i j k v`, `counit i v`, `antipode i j v` |
//! | groupoid | `morphism id source target`, `identity x id`, `compose g h g∘h`, `inverse g g⁻¹` |
//! | graded-hopf | `group-mult a b ab`, `dim σ d`, `mult σ τ i j k v`, `unit i v`, `comult σ i j k v`, `counit σ i v`, `antipode σ i j v` |
//! | module | `dim x y d`, `action x y z i j k v` |
//! | comodule | `dim x y d`, `coaction x y z k i j v` |
//! | hopf-module | `dim x y d`, `action x y z i j k v`, `coaction x y k i j v` |
//! | bimonoid | `dim x y d`, `mu x u y i j k v`, `eta x i v`, `delta x y i j k v`, `eps x y i v` |
//!
//! A product record `(i, j, k, v)` means `e_i · e_j ∋ v e_k`, a coproduct record
//! `Δ(e_i) ∋ v e_j ⊗ e_k`, an antipode record `S(e_i) ∋ v e_j`. Module kinds name their
//! base file with `base <path>`, relative to the module file.
//!
//! [`write`] emits the canonical form: header keys in a fixed order, all dimensions,
//! then the nonzero entries of each record type sorted by index tuple in declared
//! object order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use crate::category::{tuples, HopfCatData};
use crate::dual::DualHopfCatData;
use crate::duoidal::{white_offset, BimonoidData, MkXObject};
use crate::error::{Error, Result};
use crate::fundamental::HopfModuleData;
use crate::graded::GradedHopfData;
use crate::groupoid::{GroupoidData, Morphism};
use crate::linalg::LinMap;
use crate::modules::{ComoduleData, ModuleData, Side};
use crate::scalar::{Field, Scalar};
use crate::weak_hopf::{Block, WeakHopfData};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    HopfCategory,
    DualHopfCategory,
    WeakHopf,
    Groupoid,
    GradedHopf,
    Module,
    Comodule,
    HopfModule,
    Bimonoid,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::HopfCategory => "hopf-category",
            Kind::DualHopfCategory => "dual-hopf-category",
            Kind::WeakHopf => "weak-hopf",
            Kind::Groupoid => "groupoid",
            Kind::GradedHopf => "graded-hopf",
            Kind::Module => "module",
            Kind::Comodule => "comodule",
            Kind::HopfModule => "hopf-module",
            Kind::Bimonoid => "bimonoid",
        }
    }

    const ALL: [Kind; 9] = [
        Kind::HopfCategory,
        Kind::DualHopfCategory,
        Kind::WeakHopf,
        Kind::Groupoid,
        Kind::GradedHopf,
        Kind::Module,
        Kind::Comodule,
        Kind::HopfModule,
        Kind::Bimonoid,
    ];

    fn header_keys(self) -> &'static [&'static str] {
        match self {
            Kind::HopfCategory | Kind::DualHopfCategory => &["field", "objects", "has-antipode"],
            Kind::WeakHopf => &["field", "objects", "total-dim"],
            Kind::Groupoid => &["objects"],
            Kind::GradedHopf => &["field", "elements", "group-identity", "has-antipode"],
            Kind::Module => &["base", "side"],
            Kind::Comodule | Kind::HopfModule => &["base"],
            Kind::Bimonoid => &["field", "objects"],
        }
    }

    fn records(self) -> &'static [&'static str] {
        match self {
            Kind::HopfCategory => &["dim", "mult", "unit", "comult", "counit", "antipode"],
            Kind::DualHopfCategory => &["dim", "alg-mult", "alg-unit", "cocomp", "dual-counit", "antipode"],
            Kind::WeakHopf => &["block", "mult", "unit", "comult", "counit", "antipode"],
            Kind::Groupoid => &["morphism", "identity", "compose", "inverse"],
            Kind::GradedHopf => &["group-mult", "dim", "mult", "unit", "comult", "counit", "antipode"],
            Kind::Module => &["dim", "action"],
            Kind::Comodule => &["dim", "coaction"],
            Kind::HopfModule => &["dim", "action", "coaction"],
            Kind::Bimonoid => &["dim", "mu", "eta", "delta", "eps"],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .iter()
            .copied()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown kind `{s}`")))
    }
}

/// A parsed file. Module kinds keep the path of their base as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    HopfCategory(HopfCatData),
    DualHopfCategory(DualHopfCatData),
    WeakHopf(WeakHopfData),
    Groupoid(GroupoidData),
    GradedHopf(GradedHopfData),
    Module { base: String, data: ModuleData },
    Comodule { base: String, data: ComoduleData },
    HopfModule { base: String, data: HopfModuleData },
    Bimonoid(BimonoidData),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::HopfCategory(_) => Kind::HopfCategory,
            Document::DualHopfCategory(_) => Kind::DualHopfCategory,
            Document::WeakHopf(_) => Kind::WeakHopf,
            Document::Groupoid(_) => Kind::Groupoid,
            Document::GradedHopf(_) => Kind::GradedHopf,
            Document::Module { .. } => Kind::Module,
            Document::Comodule { .. } => Kind::Comodule,
            Document::HopfModule { .. } => Kind::HopfModule,
            Document::Bimonoid(_) => Kind::Bimonoid,
        }
    }
}

struct Line {
    no: usize,
    tokens: Vec<String>,
}

impl Line {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.no, msg: msg.into() }
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.tokens.len() != n + 1 {
            return Err(self.err(format!("`{}` takes {n} fields, found {}", self.tokens[0], self.tokens.len() - 1)));
        }
        Ok(())
    }
}

/// Resolves tokens of one record against the declared objects and field.
struct Ctx<'a> {
    objects: &'a [String],
    field: Field,
}

impl Ctx<'_> {
    fn obj(&self, l: &Line, k: usize) -> Result<usize> {
        let t = &l.tokens[k];
        self.objects.iter().position(|o| o == t).ok_or_else(|| l.err(format!("undeclared object `{t}`")))
    }

    fn idx(&self, l: &Line, k: usize) -> Result<usize> {
        let t = &l.tokens[k];
        t.parse().map_err(|_| l.err(format!("`{t}` is not an index")))
    }

    fn val(&self, l: &Line, k: usize) -> Result<Scalar> {
        self.field.parse(&l.tokens[k]).map_err(|e| l.err(e.to_string()))
    }
}

fn located<T>(l: &Line, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => l.err(other.to_string()),
    })
}

struct Parsed {
    kind: Kind,
    header: BTreeMap<String, (usize, Vec<String>)>,
    records: Vec<Line>,
}

impl Parsed {
    fn header(&self, key: &str) -> Result<&[String]> {
        self.header
            .get(key)
            .map(|(_, v)| v.as_slice())
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("missing header `{key}`") })
    }

    fn single(&self, key: &str) -> Result<&str> {
        let v = self.header(key)?;
        if v.len() != 1 {
            return Err(Error::Parse { line: self.header[key].0, msg: format!("`{key}` takes one value") });
        }
        Ok(&v[0])
    }

    fn field(&self) -> Result<Field> {
        let s = self.single("field")?;
        s.parse().map_err(|e: crate::LinalgError| Error::Parse { line: self.header["field"].0, msg: e.to_string() })
    }

    fn objects(&self) -> Result<Vec<String>> {
        let objs = self.header("objects")?.to_vec();
        crate::category::check_labels(&objs).map_err(|e| Error::Parse { line: self.header["objects"].0, msg: e.to_string() })?;
        Ok(objs)
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.single(key)? {
            "yes" => Ok(true),
            "no" => Ok(false),
            other => Err(Error::Parse { line: self.header[key].0, msg: format!("`{key}` must be yes or no, found `{other}`") }),
        }
    }

    fn of<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Line> + 'a {
        self.records.iter().filter(move |l| l.tokens[0] == name)
    }

    /// `dim x y d` records into a square table; missing pairs are zero.
    fn dims(&self, ctx: &Ctx) -> Result<Vec<Vec<usize>>> {
        let n = ctx.objects.len();
        let mut dims = vec![vec![0; n]; n];
        for l in self.of("dim") {
            l.arity(3)?;
            dims[ctx.obj(l, 1)?][ctx.obj(l, 2)?] = ctx.idx(l, 3)?;
        }
        Ok(dims)
    }
}

fn tokenize(text: &str) -> Result<Parsed> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<String> = content.split_whitespace().map(str::to_string).collect();
        (!tokens.is_empty()).then_some(Line { no: i + 1, tokens })
    });
    let first = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
    if first.tokens != ["format", "hopfcat", "1"] {
        return Err(first.err("expected `format hopfcat 1`"));
    }
    let kind_line = lines.next().ok_or(Error::Parse { line: first.no, msg: "missing `kind`".into() })?;
    if kind_line.tokens[0] != "kind" {
        return Err(kind_line.err("expected `kind` after the format line"));
    }
    kind_line.arity(1)?;
    let kind: Kind = located(&kind_line, kind_line.tokens[1].parse())?;
    let mut header = BTreeMap::new();
    let mut records = Vec::new();
    let mut seen = BTreeSet::new();
    for l in lines {
        let name = l.tokens[0].as_str();
        if kind.header_keys().contains(&name) {
            if !records.is_empty() {
                return Err(l.err(format!("header `{name}` after the first record")));
            }
            if header.insert(name.to_string(), (l.no, l.tokens[1..].to_vec())).is_some() {
                return Err(l.err(format!("header `{name}` given twice")));
            }
        } else if kind.records().contains(&name) {
            // the key is everything but the last field (coefficient, dimension or result)
            let key: Vec<String> = l.tokens[..l.tokens.len() - 1].to_vec();
            if !seen.insert(key) {
                return Err(l.err(format!("duplicate `{name}` entry")));
            }
            records.push(l);
        } else {
            return Err(l.err(format!("`{name}` is not valid in a {kind} file")));
        }
    }
    Ok(Parsed { kind, header, records })
}

/// Parse `text`; `base` loads the file named by a `base` header.
pub fn parse(text: &str, base: &dyn Fn(&str) -> Result<Document>) -> Result<Document> {
    let p = tokenize(text)?;
    match p.kind {
        Kind::HopfCategory => parse_hopf(&p).map(Document::HopfCategory),
        Kind::DualHopfCategory => parse_dual(&p).map(Document::DualHopfCategory),
        Kind::WeakHopf => parse_weak(&p).map(Document::WeakHopf),
        Kind::Groupoid => parse_groupoid(&p).map(Document::Groupoid),
        Kind::GradedHopf => parse_graded(&p).map(Document::GradedHopf),
        Kind::Bimonoid => parse_bimonoid(&p).map(Document::Bimonoid),
        Kind::Module | Kind::Comodule | Kind::HopfModule => {
            let path = p.single("base")?.to_string();
            let line = p.header["base"].0;
            let doc = base(&path).map_err(|e| Error::Parse { line, msg: format!("base `{path}`: {e}") })?;
            match (p.kind, doc) {
                (Kind::Module, Document::HopfCategory(a)) => {
                    Ok(Document::Module { data: parse_module(&p, Arc::new(a))?, base: path })
                }
                (Kind::HopfModule, Document::HopfCategory(a)) => {
                    Ok(Document::HopfModule { data: parse_hopf_module(&p, Arc::new(a))?, base: path })
                }
                (Kind::Comodule, Document::DualHopfCategory(c)) => {
                    Ok(Document::Comodule { data: parse_comodule(&p, Arc::new(c))?, base: path })
                }
                (_, other) => Err(Error::Parse { line, msg: format!("base `{path}` has unsuitable kind {}", other.kind()) }),
            }
        }
    }
}

/// Read a file, resolving `base` headers relative to its directory.
pub fn read(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse(&text, &|rel: &str| read(&dir.join(rel)))
}

fn parse_hopf(p: &Parsed) -> Result<HopfCatData> {
    let ctx = Ctx { objects: &p.objects()?, field: p.field()? };
    let mut a = HopfCatData::new(ctx.field, ctx.objects.to_vec(), p.dims(&ctx)?)?;
    if p.flag("has-antipode")? {
        a.ensure_antipode();
    } else if let Some(l) = p.of("antipode").next() {
        return Err(l.err("antipode entries in a file declared `has-antipode no`"));
    }
    for l in &p.records {
        let r = match l.tokens[0].as_str() {
            "mult" => {
                l.arity(7)?;
                a.set_mult_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.obj(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.idx(l, 6)?, ctx.val(l, 7)?)
            }
            "unit" => {
                l.arity(3)?;
                a.set_unit_entry(ctx.obj(l, 1)?, ctx.idx(l, 2)?, ctx.val(l, 3)?)
            }
            "comult" => {
                l.arity(6)?;
                a.set_comult_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.idx(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.val(l, 6)?)
            }
            "counit" => {
                l.arity(4)?;
                a.set_counit_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.idx(l, 3)?, ctx.val(l, 4)?)
            }
            "antipode" => {
                l.arity(5)?;
                a.set_antipode_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.idx(l, 3)?, ctx.idx(l, 4)?, ctx.val(l, 5)?)
            }
            _ => Ok(()),
        };
        located(l, r)?;
    }
    Ok(a)
}

fn parse_dual(p: &Parsed) -> Result<DualHopfCatData> {
    let ctx = Ctx { objects: &p.objects()?, field: p.field()? };
    let mut c = DualHopfCatData::new(ctx.field, ctx.objects.to_vec(), p.dims(&ctx)?)?;
    if p.flag("has-antipode")? {
        c.ensure_antipode();
    } else if let Some(l) = p.of("antipode").next() {
        return Err(l.err("antipode entries in a file declared `has-antipode no`"));
    }
    for l in &p.records {
        let r = match l.tokens[0].as_str() {
            "alg-mult" => {
                l.arity(6)?;
                c.set_alg_mult_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.idx(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.val(l, 6)?)
            }
            "alg-unit" => {
                l.arity(4)?;
                c.set_alg_unit_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.idx(l, 3)?, ctx.val(l, 4)?)
            }
            "cocomp" => {
                l.arity(7)?;
                c.set_cocomp_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.obj(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.idx(l, 6)?, ctx.val(l, 7)?)
            }
            "dual-counit" => {
                l.arity(3)?;
                c.set_counit_entry(ctx.obj(l, 1)?, ctx.idx(l, 2)?, ctx.val(l, 3)?)
            }
            "antipode" => {
                l.arity(5)?;
                c.set_antipode_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.idx(l, 3)?, ctx.idx(l, 4)?, ctx.val(l, 5)?)
            }
            _ => Ok(()),
        };
        located(l, r)?;
    }
    Ok(c)
}

/// Set `map[row, col]` after checking both indices.
fn put(l: &Line, map: &mut LinMap, row: usize, col: usize, v: Scalar) -> Result<()> {
    if row >= map.rows() || col >= map.cols() {
        return Err(l.err("index out of range"));
    }
    map.set(row, col, v);
    Ok(())
}

fn in_range(l: &Line, pairs: &[(usize, usize)]) -> Result<()> {
    match pairs.iter().find(|(i, d)| i >= d) {
        Some((i, d)) => Err(l.err(format!("index {i} out of range for dimension {d}"))),
        None => Ok(()),
    }
}

fn parse_weak(p: &Parsed) -> Result<WeakHopfData> {
    let ctx = Ctx { objects: &p.objects()?, field: p.field()? };
    let total: usize = p.single("total-dim")?.parse().map_err(|_| Error::Parse { line: p.header["total-dim"].0, msg: "bad total-dim".into() })?;
    let mut blocks = Vec::new();
    for l in p.of("block") {
        l.arity(4)?;
        blocks.push(Block { x: ctx.obj(l, 1)?, y: ctx.obj(l, 2)?, offset: ctx.idx(l, 3)?, length: ctx.idx(l, 4)? });
    }
    blocks.sort_by_key(|b| b.offset);
    let mut w = WeakHopfData::zero(ctx.field, ctx.objects.to_vec(), blocks, total);
    w.check_blocks().map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    let n = total;
    for l in &p.records {
        match l.tokens[0].as_str() {
            "mult" => {
                l.arity(4)?;
                let (i, j, k) = (ctx.idx(l, 1)?, ctx.idx(l, 2)?, ctx.idx(l, 3)?);
                in_range(l, &[(i, n), (j, n), (k, n)])?;
                put(l, &mut w.mult, k, i * n + j, ctx.val(l, 4)?)?;
            }
            "unit" => {
                l.arity(2)?;
                put(l, &mut w.unit, ctx.idx(l, 1)?, 0, ctx.val(l, 2)?)?;
            }
            "comult" => {
                l.arity(4)?;
                let (i, j, k) = (ctx.idx(l, 1)?, ctx.idx(l, 2)?, ctx.idx(l, 3)?);
                in_range(l, &[(i, n), (j, n), (k, n)])?;
                put(l, &mut w.comult, j * n + k, i, ctx.val(l, 4)?)?;
            }
            "counit" => {
                l.arity(2)?;
                put(l, &mut w.counit, 0, ctx.idx(l, 1)?, ctx.val(l, 2)?)?;
            }
            "antipode" => {
                l.arity(3)?;
                put(l, &mut w.antipode, ctx.idx(l, 2)?, ctx.idx(l, 1)?, ctx.val(l, 3)?)?;
            }
            _ => {}
        }
    }
    Ok(w)
}

fn parse_groupoid(p: &Parsed) -> Result<GroupoidData> {
    let objects = p.objects()?;
    let ctx = Ctx { objects: &objects, field: Field::Rational };
    let mut morphisms = Vec::new();
    for l in p.of("morphism") {
        l.arity(3)?;
        if morphisms.iter().any(|m: &Morphism| m.id == l.tokens[1]) {
            return Err(l.err(format!("morphism `{}` declared twice", l.tokens[1])));
        }
        morphisms.push(Morphism { id: l.tokens[1].clone(), source: ctx.obj(l, 2)?, target: ctx.obj(l, 3)? });
    }
    let mor = |l: &Line, k: usize| -> Result<usize> {
        let t = &l.tokens[k];
        morphisms.iter().position(|m| &m.id == t).ok_or_else(|| l.err(format!("undeclared morphism `{t}`")))
    };
    let mut identity = vec![None; objects.len()];
    let mut compose = BTreeMap::new();
    let mut inverse = vec![None; morphisms.len()];
    for l in &p.records {
        match l.tokens[0].as_str() {
            "identity" => {
                l.arity(2)?;
                identity[ctx.obj(l, 1)?] = Some(mor(l, 2)?);
            }
            "compose" => {
                l.arity(3)?;
                compose.insert((mor(l, 1)?, mor(l, 2)?), mor(l, 3)?);
            }
            "inverse" => {
                l.arity(2)?;
                inverse[mor(l, 1)?] = Some(mor(l, 2)?);
            }
            _ => {}
        }
    }
    let identity = identity
        .into_iter()
        .enumerate()
        .map(|(x, e)| e.ok_or_else(|| Error::Parse { line: 0, msg: format!("object `{}` has no identity", objects[x]) }))
        .collect::<Result<_>>()?;
    Ok(GroupoidData { objects, morphisms, identity, compose, inverse })
}

fn parse_graded(p: &Parsed) -> Result<GradedHopfData> {
    let field = p.field()?;
    let elements = p.header("elements")?.to_vec();
    let ctx = Ctx { objects: &elements, field };
    let e_line = p.header["group-identity"].0;
    let identity = elements
        .iter()
        .position(|e| e == p.single("group-identity").unwrap_or(""))
        .ok_or(Error::Parse { line: e_line, msg: "group identity is not a declared element".into() })?;
    let n = elements.len();
    let mut table = vec![None; n * n];
    for l in p.of("group-mult") {
        l.arity(3)?;
        table[ctx.obj(l, 1)? * n + ctx.obj(l, 2)?] = Some(ctx.obj(l, 3)?);
    }
    let table = table
        .into_iter()
        .map(|c| c.ok_or(Error::Parse { line: 0, msg: "group multiplication table is incomplete".into() }))
        .collect::<Result<Vec<_>>>()?;
    let mut dims = vec![0; n];
    for l in p.of("dim") {
        l.arity(2)?;
        dims[ctx.obj(l, 1)?] = ctx.idx(l, 2)?;
    }
    let mut h = GradedHopfData::new(field, elements.clone(), identity, table, dims.clone())?;
    let with_antipode = p.flag("has-antipode")?;
    if with_antipode {
        // S_σ: A_σ → A_{σ^{-1}}, needs the group to have inverses
        let mut anti = Vec::with_capacity(n);
        for s in 0..n {
            let inv = (0..n).find(|&t| h.mul(s, t) == identity).ok_or(Error::Parse { line: 0, msg: "group table has no inverses".into() })?;
            anti.push(LinMap::zero(field, dims[inv], dims[s]));
        }
        h.antipode = Some(anti);
    } else if let Some(l) = p.of("antipode").next() {
        return Err(l.err("antipode entries in a file declared `has-antipode no`"));
    }
    for l in &p.records {
        match l.tokens[0].as_str() {
            "mult" => {
                l.arity(6)?;
                let (s, t) = (ctx.obj(l, 1)?, ctx.obj(l, 2)?);
                let (i, j, k) = (ctx.idx(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?);
                in_range(l, &[(i, dims[s]), (j, dims[t])])?;
                put(l, &mut h.mult[s * n + t], k, i * dims[t] + j, ctx.val(l, 6)?)?;
            }
            "unit" => {
                l.arity(2)?;
                put(l, &mut h.unit, ctx.idx(l, 1)?, 0, ctx.val(l, 2)?)?;
            }
            "comult" => {
                l.arity(5)?;
                let s = ctx.obj(l, 1)?;
                let (i, j, k) = (ctx.idx(l, 2)?, ctx.idx(l, 3)?, ctx.idx(l, 4)?);
                in_range(l, &[(i, dims[s]), (j, dims[s]), (k, dims[s])])?;
                put(l, &mut h.comult[s], j * dims[s] + k, i, ctx.val(l, 5)?)?;
            }
            "counit" => {
                l.arity(3)?;
                let s = ctx.obj(l, 1)?;
                put(l, &mut h.counit[s], 0, ctx.idx(l, 2)?, ctx.val(l, 3)?)?;
            }
            "antipode" => {
                l.arity(4)?;
                let s = ctx.obj(l, 1)?;
                let anti = h.antipode.as_mut().expect("declared");
                put(l, &mut anti[s], ctx.idx(l, 3)?, ctx.idx(l, 2)?, ctx.val(l, 4)?)?;
            }
            _ => {}
        }
    }
    Ok(h)
}

fn parse_bimonoid(p: &Parsed) -> Result<BimonoidData> {
    let ctx = Ctx { objects: &p.objects()?, field: p.field()? };
    let carrier = MkXObject::new(ctx.objects.to_vec(), p.dims(&ctx)?)?;
    let mut b = BimonoidData::zero(ctx.field, carrier.clone());
    let n = carrier.n();
    for l in &p.records {
        match l.tokens[0].as_str() {
            "mu" => {
                l.arity(7)?;
                let (x, u, y) = (ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.obj(l, 3)?);
                let (i, j, k) = (ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.idx(l, 6)?);
                in_range(l, &[(i, carrier.dim(x, u)), (j, carrier.dim(u, y))])?;
                let col = white_offset(&carrier, &carrier, x, u, y) + i * carrier.dim(u, y) + j;
                put(l, &mut b.mu[x * n + y], k, col, ctx.val(l, 7)?)?;
            }
            "eta" => {
                l.arity(3)?;
                let x = ctx.obj(l, 1)?;
                put(l, &mut b.eta[x], ctx.idx(l, 2)?, 0, ctx.val(l, 3)?)?;
            }
            "delta" => {
                l.arity(6)?;
                let (x, y) = (ctx.obj(l, 1)?, ctx.obj(l, 2)?);
                let d = carrier.dim(x, y);
                let (i, j, k) = (ctx.idx(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?);
                in_range(l, &[(i, d), (j, d), (k, d)])?;
                put(l, &mut b.delta[x * n + y], j * d + k, i, ctx.val(l, 6)?)?;
            }
            "eps" => {
                l.arity(4)?;
                let (x, y) = (ctx.obj(l, 1)?, ctx.obj(l, 2)?);
                put(l, &mut b.eps[x * n + y], 0, ctx.idx(l, 3)?, ctx.val(l, 4)?)?;
            }
            _ => {}
        }
    }
    Ok(b)
}

fn parse_module(p: &Parsed, base: Arc<HopfCatData>) -> Result<ModuleData> {
    let ctx = Ctx { objects: base.objects(), field: base.field() };
    let side: Side = located(&Line { no: p.header["side"].0, tokens: vec![] }, p.single("side")?.parse())?;
    let mut m = ModuleData::new(base.clone(), side, p.dims(&ctx)?)?;
    for l in p.of("action") {
        l.arity(7)?;
        let r = m.set_action_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.obj(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.idx(l, 6)?, ctx.val(l, 7)?);
        located(l, r)?;
    }
    Ok(m)
}

fn parse_comodule(p: &Parsed, base: Arc<DualHopfCatData>) -> Result<ComoduleData> {
    let ctx = Ctx { objects: base.objects(), field: base.field() };
    let mut m = ComoduleData::new(base.clone(), p.dims(&ctx)?)?;
    for l in p.of("coaction") {
        l.arity(7)?;
        let r = m.set_coaction_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.obj(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.idx(l, 6)?, ctx.val(l, 7)?);
        located(l, r)?;
    }
    Ok(m)
}

fn parse_hopf_module(p: &Parsed, base: Arc<HopfCatData>) -> Result<HopfModuleData> {
    let ctx = Ctx { objects: base.objects(), field: base.field() };
    let mut m = HopfModuleData::new(base.clone(), p.dims(&ctx)?)?;
    for l in &p.records {
        let r = match l.tokens[0].as_str() {
            "action" => {
                l.arity(7)?;
                m.module.set_action_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.obj(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.idx(l, 6)?, ctx.val(l, 7)?)
            }
            "coaction" => {
                l.arity(6)?;
                m.set_coaction_entry(ctx.obj(l, 1)?, ctx.obj(l, 2)?, ctx.idx(l, 3)?, ctx.idx(l, 4)?, ctx.idx(l, 5)?, ctx.val(l, 6)?)
            }
            _ => Ok(()),
        };
        located(l, r)?;
    }
    Ok(m)
}

/// Canonical writer state: one line per record, in emission order.
struct Out {
    text: String,
}

impl Out {
    fn new(kind: Kind) -> Self {
        Out { text: format!("format hopfcat 1\nkind {kind}\n") }
    }

    fn line(&mut self, parts: &[&str]) {
        self.text.push_str(&parts.join(" "));
        self.text.push('\n');
    }

    fn dims(&mut self, objects: &[String], dim: impl Fn(usize, usize) -> usize) {
        for t in tuples(objects.len(), 2) {
            let d = dim(t[0], t[1]).to_string();
            self.line(&["dim", &objects[t[0]], &objects[t[1]], &d]);
        }
    }

    /// Emit the nonzero entries of `map`; `key` turns `(row, col)` into the index fields,
    /// which are then sorted.
    fn entries(&mut self, name: &str, prefix: &[&str], map: &LinMap, key: impl Fn(usize, usize) -> Vec<usize>) {
        let mut rows: Vec<(Vec<usize>, &Scalar)> = Vec::new();
        for r in 0..map.rows() {
            for c in 0..map.cols() {
                let v = map.get(r, c);
                if !v.is_zero() {
                    rows.push((key(r, c), v));
                }
            }
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        for (idx, v) in rows {
            let mut s = String::from(name);
            for p in prefix {
                let _ = write!(s, " {p}");
            }
            for i in idx {
                let _ = write!(s, " {i}");
            }
            let _ = write!(s, " {v}");
            self.text.push_str(&s);
            self.text.push('\n');
        }
    }
}

/// Canonical text form.
pub fn write(doc: &Document) -> String {
    let mut o = Out::new(doc.kind());
    match doc {
        Document::HopfCategory(a) => write_hopf(&mut o, a),
        Document::DualHopfCategory(c) => write_dual(&mut o, c),
        Document::WeakHopf(w) => write_weak(&mut o, w),
        Document::Groupoid(g) => write_groupoid(&mut o, g),
        Document::GradedHopf(h) => write_graded(&mut o, h),
        Document::Bimonoid(b) => write_bimonoid(&mut o, b),
        Document::Module { base, data } => {
            o.line(&["base", base]);
            o.line(&["side", &data.side.to_string()]);
            let objs = data.base.objects().to_vec();
            o.dims(&objs, |x, y| data.dim(x, y));
            for t in tuples(data.n(), 3) {
                let (x, y, z) = (t[0], t[1], t[2]);
                let b = match data.side {
                    Side::Right => data.base.dim(y, z),
                    Side::Left => data.dim(y, z),
                };
                o.entries("action", &[&objs[x], &objs[y], &objs[z]], data.action(x, y, z), |r, c| vec![c / b, c % b, r]);
            }
        }
        Document::Comodule { base, data } => {
            o.line(&["base", base]);
            let objs = data.base.objects().to_vec();
            o.dims(&objs, |x, y| data.dim(x, y));
            for t in tuples(data.n(), 3) {
                let (x, y, z) = (t[0], t[1], t[2]);
                let dc = data.base.dim(y, z);
                o.entries("coaction", &[&objs[x], &objs[y], &objs[z]], data.coaction(x, y, z), |r, c| vec![c, r / dc, r % dc]);
            }
        }
        Document::HopfModule { base, data } => {
            o.line(&["base", base]);
            let a = data.base().clone();
            let objs = a.objects().to_vec();
            o.dims(&objs, |x, y| data.dim(x, y));
            for t in tuples(data.n(), 3) {
                let (x, y, z) = (t[0], t[1], t[2]);
                let b = a.dim(y, z);
                o.entries("action", &[&objs[x], &objs[y], &objs[z]], data.action(x, y, z), |r, c| vec![c / b, c % b, r]);
            }
            for t in tuples(data.n(), 2) {
                let (x, y) = (t[0], t[1]);
                let da = a.dim(x, y);
                o.entries("coaction", &[&objs[x], &objs[y]], data.coaction(x, y), |r, c| vec![c, r / da, r % da]);
            }
        }
    }
    o.text
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn header_objects(o: &mut Out, field: Field, objects: &[String]) {
    o.line(&["field", &field.to_string()]);
    let mut parts = vec!["objects"];
    parts.extend(objects.iter().map(String::as_str));
    o.line(&parts);
}

fn write_hopf(o: &mut Out, a: &HopfCatData) {
    let objs = a.objects().to_vec();
    header_objects(o, a.field(), &objs);
    o.line(&["has-antipode", yes_no(a.has_antipode())]);
    o.dims(&objs, |x, y| a.dim(x, y));
    let n = a.n();
    for t in tuples(n, 3) {
        let b = a.dim(t[1], t[2]);
        o.entries("mult", &[&objs[t[0]], &objs[t[1]], &objs[t[2]]], a.mult(t[0], t[1], t[2]), |r, c| vec![c / b, c % b, r]);
    }
    for x in 0..n {
        o.entries("unit", &[&objs[x]], a.unit(x), |r, _| vec![r]);
    }
    for t in tuples(n, 2) {
        let d = a.dim(t[0], t[1]);
        o.entries("comult", &[&objs[t[0]], &objs[t[1]]], a.comult(t[0], t[1]), |r, c| vec![c, r / d, r % d]);
    }
    for t in tuples(n, 2) {
        o.entries("counit", &[&objs[t[0]], &objs[t[1]]], a.counit(t[0], t[1]), |_, c| vec![c]);
    }
    if a.has_antipode() {
        for t in tuples(n, 2) {
            let s = a.antipode(t[0], t[1]).expect("present");
            o.entries("antipode", &[&objs[t[0]], &objs[t[1]]], s, |r, c| vec![c, r]);
        }
    }
}

fn write_dual(o: &mut Out, c: &DualHopfCatData) {
    let objs = c.objects().to_vec();
    header_objects(o, c.field(), &objs);
    o.line(&["has-antipode", yes_no(c.has_antipode())]);
    o.dims(&objs, |x, y| c.dim(x, y));
    let n = c.n();
    for t in tuples(n, 2) {
        let d = c.dim(t[0], t[1]);
        o.entries("alg-mult", &[&objs[t[0]], &objs[t[1]]], c.alg_mult(t[0], t[1]), |r, col| vec![col / d, col % d, r]);
    }
    for t in tuples(n, 2) {
        o.entries("alg-unit", &[&objs[t[0]], &objs[t[1]]], c.alg_unit(t[0], t[1]), |r, _| vec![r]);
    }
    for t in tuples(n, 3) {
        let dyz = c.dim(t[1], t[2]);
        o.entries("cocomp", &[&objs[t[0]], &objs[t[1]], &objs[t[2]]], c.cocomp(t[0], t[1], t[2]), |r, col| vec![col, r / dyz, r % dyz]);
    }
    for x in 0..n {
        o.entries("dual-counit", &[&objs[x]], c.counit(x), |_, col| vec![col]);
    }
    if c.has_antipode() {
        for t in tuples(n, 2) {
            let s = c.antipode(t[0], t[1]).expect("present");
            o.entries("antipode", &[&objs[t[0]], &objs[t[1]]], s, |r, col| vec![col, r]);
        }
    }
}

fn write_weak(o: &mut Out, w: &WeakHopfData) {
    header_objects(o, w.field, &w.objects);
    o.line(&["total-dim", &w.total_dim.to_string()]);
    for b in &w.blocks {
        o.line(&["block", &w.objects[b.x], &w.objects[b.y], &b.offset.to_string(), &b.length.to_string()]);
    }
    let n = w.total_dim;
    o.entries("mult", &[], &w.mult, |r, c| vec![c / n, c % n, r]);
    o.entries("unit", &[], &w.unit, |r, _| vec![r]);
    o.entries("comult", &[], &w.comult, |r, c| vec![c, r / n, r % n]);
    o.entries("counit", &[], &w.counit, |_, c| vec![c]);
    o.entries("antipode", &[], &w.antipode, |r, c| vec![c, r]);
}

fn write_groupoid(o: &mut Out, g: &GroupoidData) {
    let mut parts = vec!["objects"];
    parts.extend(g.objects.iter().map(String::as_str));
    o.line(&parts);
    for m in &g.morphisms {
        o.line(&["morphism", &m.id, &g.objects[m.source], &g.objects[m.target]]);
    }
    for (x, &e) in g.identity.iter().enumerate() {
        o.line(&["identity", &g.objects[x], &g.morphisms[e].id]);
    }
    for (&(a, b), &c) in &g.compose {
        o.line(&["compose", &g.morphisms[a].id, &g.morphisms[b].id, &g.morphisms[c].id]);
    }
    for (a, inv) in g.inverse.iter().enumerate() {
        if let Some(b) = inv {
            o.line(&["inverse", &g.morphisms[a].id, &g.morphisms[*b].id]);
        }
    }
}

fn write_graded(o: &mut Out, h: &GradedHopfData) {
    let e = &h.elements;
    o.line(&["field", &h.field.to_string()]);
    let mut parts = vec!["elements"];
    parts.extend(e.iter().map(String::as_str));
    o.line(&parts);
    o.line(&["group-identity", &e[h.identity]]);
    o.line(&["has-antipode", yes_no(h.antipode.is_some())]);
    let n = h.n();
    for t in tuples(n, 2) {
        o.line(&["group-mult", &e[t[0]], &e[t[1]], &e[h.mul(t[0], t[1])]]);
    }
    for s in 0..n {
        o.line(&["dim", &e[s], &h.dims[s].to_string()]);
    }
    for t in tuples(n, 2) {
        let b = h.dims[t[1]];
        o.entries("mult", &[&e[t[0]], &e[t[1]]], &h.mult[t[0] * n + t[1]], |r, c| vec![c / b, c % b, r]);
    }
    o.entries("unit", &[], &h.unit, |r, _| vec![r]);
    for s in 0..n {
        let d = h.dims[s];
        o.entries("comult", &[&e[s]], &h.comult[s], |r, c| vec![c, r / d, r % d]);
    }
    for s in 0..n {
        o.entries("counit", &[&e[s]], &h.counit[s], |_, c| vec![c]);
    }
    if let Some(anti) = &h.antipode {
        for s in 0..n {
            o.entries("antipode", &[&e[s]], &anti[s], |r, c| vec![c, r]);
        }
    }
}

fn write_bimonoid(o: &mut Out, b: &BimonoidData) {
    let c = &b.carrier;
    let objs = c.objects.clone();
    header_objects(o, b.field, &objs);
    o.dims(&objs, |x, y| c.dim(x, y));
    let n = c.n();
    for t in tuples(n, 3) {
        let (x, u, y) = (t[0], t[1], t[2]);
        let w = c.dim(u, y);
        o.entries("mu", &[&objs[x], &objs[u], &objs[y]], &b.mu_block(x, u, y), |r, col| vec![col / w, col % w, r]);
    }
    for x in 0..n {
        o.entries("eta", &[&objs[x]], &b.eta[x], |r, _| vec![r]);
    }
    for t in tuples(n, 2) {
        let d = c.dim(t[0], t[1]);
        o.entries("delta", &[&objs[t[0]], &objs[t[1]]], &b.delta[t[0] * n + t[1]], |r, col| vec![col, r / d, r % d]);
    }
    for t in tuples(n, 2) {
        o.entries("eps", &[&objs[t[0]], &objs[t[1]]], &b.eps[t[0] * n + t[1]], |_, col| vec![col]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{group_algebra, sweedler};

    fn no_base(_: &str) -> Result<Document> {
        Err(Error::Io("no base available".into()))
    }

    #[test]
    fn canonical_text_round_trips() {
        let doc = Document::HopfCategory(sweedler(Field::Rational));
        let text = write(&doc);
        let back = parse(&text, &no_base).unwrap();
        assert_eq!(back, doc);
        assert_eq!(write(&back), text);
    }

    #[test]
    fn out_of_range_index_is_a_parse_error() {
        let text = write(&Document::HopfCategory(group_algebra(2, Field::Rational))).replace("unit * 0 1", "unit * 5 1");
        match parse(&text, &no_base) {
            Err(Error::Parse { line, .. }) => assert!(line > 0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_and_undeclared_entries_are_rejected() {
        let text = write(&Document::HopfCategory(group_algebra(2, Field::Rational)));
        let dup = format!("{text}unit * 0 1\n");
        assert!(matches!(parse(&dup, &no_base), Err(Error::Parse { .. })));
        let undeclared = format!("{text}counit ? * 0 1\n");
        assert!(matches!(parse(&undeclared, &no_base), Err(Error::Parse { .. })));
    }

    #[test]
    fn prime_field_header() {
        let a = group_algebra(3, Field::prime(5).unwrap());
        let text = write(&Document::HopfCategory(a.clone()));
        assert!(text.contains("field fp:5"));
        assert_eq!(parse(&text, &no_base).unwrap(), Document::HopfCategory(a));
    }
}
