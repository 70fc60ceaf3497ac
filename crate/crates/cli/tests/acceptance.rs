//! End-to-end acceptance checks, one line per criterion. Every comparison is exact.
//! Runs without the libtest harness so the summary is always printed.

mod common;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{fixture, hopfcat as cli, path_str, Q};
use hopfcat::duoidal::{bimonoid_from_category, bimonoid_shape, category_from_bimonoid, verify_bimonoid};
use hopfcat::fixtures;
use hopfcat::format::{self, Document};
use hopfcat::fundamental::{
    build_can, can_inverse, can_ranks, check_antipode_bijective, check_equivalence, coinvariants,
    dual_hopf_module, integrals, randomized_free_module, recover_antipode, HopfModuleData,
};
use hopfcat::modules::{comodule_to_module, module_to_comodule, ComoduleData, ModuleData, Side};
use hopfcat::{
    check_antipode_theorems, check_strictness, dualize, pack, verify_dual, verify_structure, verify_weak_hopf,
    Error, Field, HopfCatData, LinMap, Level, Report,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn failures(r: &Report) -> String {
    r.failures().map(|i| format!("{}({})", i.axiom, i.objects.join(","))).collect::<Vec<_>>().join(" ")
}

fn read_category(path: &Path) -> Result<HopfCatData, String> {
    match format::read(path).map_err(|e| e.to_string())? {
        Document::HopfCategory(a) => Ok(a),
        other => Err(format!("{}: unexpected kind {}", path.display(), other.kind())),
    }
}

fn tmpdir() -> tempfile::TempDir {
    tempfile::tempdir().expect("temp dir")
}

/// Distinct object tuples covered by passing items of `axiom`.
fn covered(r: &Report, axiom: &str) -> usize {
    r.find(axiom).filter(|i| i.holds).map(|i| i.objects.clone()).collect::<BTreeSet<_>>().len()
}

fn groupoid_pipeline() -> Check {
    let start = Instant::now();
    let dir = tmpdir();
    let cat = dir.path().join("pair3.hopfcat");
    let run = cli(&["transform", path_str(&fixture("pair-3")), "from-groupoid", path_str(&cat), "-q"]);
    ensure!(run.code == 0, "from-groupoid exit {}: {}", run.code, run.stderr);
    let run = cli(&["verify", path_str(&cat), "--level", "hopf", "-q"]);
    ensure!(run.code == 0, "verify exit {}", run.code);

    let a = read_category(&cat)?;
    ensure!(a.n() == 3, "expected 3 objects");
    let r = verify_structure(&a, Level::Hopf).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "level hopf fails: {}", failures(&r));
    for (axiom, want) in [
        ("associativity", 81),
        ("comult-multiplicative", 27),
        ("counit-multiplicative", 27),
        ("coassociativity", 9),
        ("left-counit", 9),
        ("right-counit", 9),
        ("antipode-left", 9),
        ("antipode-right", 9),
    ] {
        ensure!(covered(&r, axiom) == want, "{axiom} covers {} object tuples, want {want}", covered(&r, axiom));
    }

    let w = pack(&a).map_err(|e| e.to_string())?;
    let wr = verify_weak_hopf(&w).map_err(|e| e.to_string())?;
    ensure!(wr.passed(), "packed algebra fails: {}", failures(&wr));
    let n = w.total_dim;
    ensure!(n == 9, "total dim {n}");
    let offset = |x: usize, y: usize| w.blocks.iter().find(|b| b.x == x && b.y == y).expect("block").offset;

    // Δ(1) = Σ_x 1_x ⊗ 1_x, where 1_x is the identity morphism of x.
    let mut expected = vec![Q.zero(); n * n];
    for x in 0..3 {
        let o = offset(x, x);
        expected[o * n + o] = Q.one();
    }
    ensure!(w.delta_one() == expected, "Δ(1) differs from Σ 1_x ⊗ 1_x");

    // Groupoid algebra of the pair groupoid: e_{x,y} e_{y,z} = e_{x,z}, other products vanish.
    let mut groupoid_alg = LinMap::zero(Q, n, n * n);
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                groupoid_alg.set(offset(x, z), offset(x, y) * n + offset(y, z), Q.one());
            }
        }
    }
    ensure!(w.mult == groupoid_alg, "packed multiplication differs from the groupoid algebra");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(())
}

fn s_squared_is_identity(a: &HopfCatData) -> bool {
    (0..a.n()).all(|x| {
        (0..a.n()).all(|y| {
            let s = a.antipode(x, y).expect("antipode");
            let back = a.antipode(y, x).expect("antipode");
            back.compose(s).expect("shapes").is_identity()
        })
    })
}

fn singleton_reduction() -> Check {
    for name in ["kz2", "kz3"] {
        let run = cli(&[
            "verify",
            path_str(&fixture(name)),
            "--antipode-theorems",
            "--strictness",
            "--fundamental",
            "-q",
        ]);
        ensure!(run.code == 0, "{name}: full verify exit {}", run.code);
        let a = read_category(&fixture(name))?;
        let base = verify_structure(&a, Level::Hopf).map_err(|e| e.to_string())?;
        ensure!(base.passed(), "{name}: {}", failures(&base));
        let th = check_antipode_theorems(&a).map_err(|e| e.to_string())?;
        for axiom in ["antipode-anti-multiplicative", "antipode-unit", "antipode-anti-comultiplicative", "antipode-counit"] {
            let checked: usize = th.find(axiom).map(|i| i.instances_checked).sum();
            ensure!(th.holds(axiom) && checked > 0, "{name}: {axiom} fails");
        }
        for axiom in ["involutivity-left", "involutivity-right", "involutivity", "involutivity-conditions-agree"] {
            ensure!(th.holds(axiom), "{name}: {axiom} is false");
        }
        ensure!(s_squared_is_identity(&a), "{name}: S² ≠ id");
    }
    let sw = read_category(&fixture("sweedler"))?;
    let base = verify_structure(&sw, Level::Hopf).map_err(|e| e.to_string())?;
    ensure!(base.passed(), "sweedler: {}", failures(&base));
    let th = check_antipode_theorems(&sw).map_err(|e| e.to_string())?;
    for axiom in ["involutivity-left", "involutivity-right", "involutivity"] {
        ensure!(th.find(axiom).all(|i| !i.holds), "sweedler: {axiom} unexpectedly true");
    }
    ensure!(th.holds("involutivity-conditions-agree"), "sweedler: involutivity conditions disagree");
    ensure!(th.passed(), "sweedler theorems: {}", failures(&th));
    Ok(())
}

fn fundamental_positive() -> Check {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        for c in can_ranks(&a) {
            ensure!(c.invertible(), "{name}: can^{}_({},{}) rank {}", c.z, c.x, c.y, c.rank);
            let closed = can_inverse(&a, c.z, c.x, c.y).map_err(|e| format!("{name}: {e}"))?;
            let direct = build_can(&a, c.z, c.x, c.y).and_then(|m| Ok(m.invert()?)).map_err(|e| e.to_string())?;
            ensure!(closed == direct, "{name}: closed-form can inverse differs at ({},{},{})", c.z, c.x, c.y);
        }
        let recovered = recover_antipode(&a.strip_antipode()).map_err(|e| format!("{name}: {e}"))?;
        ensure!(recovered == a, "{name}: recovered antipode differs");

        let arc = Arc::new(a.clone());
        let mut modules = Vec::new();
        for z in 0..a.n() {
            modules.push((format!("M^{z}"), HopfModuleData::m_z(arc.clone(), z).map_err(|e| e.to_string())?));
        }
        for seed in 0..3 {
            modules.push((format!("F(N) seed {seed}"), randomized_free_module(arc.clone(), seed).map_err(|e| e.to_string())?));
        }
        for (label, m) in modules {
            let r = check_equivalence(&m).map_err(|e| format!("{name} {label}: {e}"))?;
            ensure!(r.passed() && r.items.len() >= 6, "{name} {label}: {}", failures(&r));
        }
    }
    let dir = tmpdir();
    for name in ["kz2", "kz3", "sweedler"] {
        let out = dir.path().join(format!("{name}.hopfcat"));
        let stripped = fixture(&format!("{name}-stripped"));
        let run = cli(&["analyze", path_str(&stripped), "recover-antipode", "--out", path_str(&out), "-q"]);
        ensure!(run.code == 0, "{name}: recover-antipode exit {}", run.code);
        let got = fs::read(&out).map_err(|e| e.to_string())?;
        let want = fs::read(fixture(name)).map_err(|e| e.to_string())?;
        ensure!(got == want, "{name}: recovered file differs from the shipped original");
    }
    for name in ["kz2-mz", "sweedler-free", "kz3", "sweedler"] {
        let run = cli(&["analyze", path_str(&fixture(name)), "equivalence", "--seed", "11", "-q"]);
        ensure!(run.code == 0, "{name}: equivalence exit {}", run.code);
    }
    Ok(())
}

fn fundamental_negative() -> Check {
    let a = read_category(&fixture("idempotent"))?;
    let base = verify_structure(&a, Level::Semihopf).map_err(|e| e.to_string())?;
    ensure!(base.passed(), "idempotent bialgebra is not semi-Hopf: {}", failures(&base));
    ensure!(can_ranks(&a).iter().any(|c| !c.invertible()), "no singular can-map");
    match recover_antipode(&a) {
        Err(Error::RecoveryFailed { rank, expected, .. }) if rank < expected => {}
        other => return Err(format!("recovery did not fail with a located witness: {other:?}")),
    }
    let run = cli(&["analyze", path_str(&fixture("idempotent")), "recover-antipode"]);
    ensure!(run.code == 1 && run.stdout.contains("rank 3 < 4"), "recover-antipode exit {}: {}", run.code, run.stdout);
    let run = cli(&["analyze", path_str(&fixture("idempotent")), "can-ranks"]);
    ensure!(run.code == 1 && run.stdout.contains(" no\n"), "can-ranks exit {}", run.code);
    for name in ["identity", "kill-z", "z-to-one"] {
        let path = fixture(&format!("idempotent-candidate-{name}"));
        let run = cli(&["verify", path_str(&path), "--level", "hopf"]);
        ensure!(run.code == 1, "candidate {name} accepted (exit {})", run.code);
        ensure!(run.stdout.contains("FAIL  ") && run.stdout.contains("basis ["), "candidate {name}: no witness");
    }
    let run = cli(&["verify", path_str(&fixture("idempotent")), "--level", "hopf", "-q"]);
    ensure!(run.code == 1, "antipode-free file accepted at level hopf");
    Ok(())
}

/// Every hopf-category file the suite can produce from the shipped fixtures.
fn category_files(dir: &Path) -> Result<Vec<PathBuf>, String> {
    let mut out = Vec::new();
    for name in ["kz2", "kz3", "sweedler", "kz2-stripped", "sweedler-stripped", "idempotent"] {
        out.push(fixture(name));
    }
    for (name, op) in [
        ("pair-2", "from-groupoid"),
        ("pair-3", "from-groupoid"),
        ("disjoint", "from-groupoid"),
        ("cyclic-2", "from-groupoid"),
        ("graded-z2-strong", "from-graded"),
        ("graded-z2-zero", "from-graded"),
    ] {
        let path = dir.join(format!("{name}-cat.hopfcat"));
        let run = cli(&["transform", path_str(&fixture(name)), op, path_str(&path), "-q"]);
        ensure!(run.code == 0, "{name}: {op} exit {}", run.code);
        out.push(path);
    }
    Ok(out)
}

fn duality() -> Check {
    let dir = tmpdir();
    for path in category_files(dir.path())? {
        let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
        let dual = dir.path().join(format!("{stem}.dual"));
        let back = dir.path().join(format!("{stem}.back"));
        let dual2 = dir.path().join(format!("{stem}.dual2"));
        let packed = dir.path().join(format!("{stem}.packed"));
        for (input, op, out) in [(&path, "dualize", &dual), (&dual, "undualize", &back), (&back, "dualize", &dual2)] {
            let run = cli(&["transform", path_str(input), op, path_str(out), "-q"]);
            ensure!(run.code == 0, "{stem}: {op} exit {}: {}", run.code, run.stderr);
        }
        let original = fs::read(&path).map_err(|e| e.to_string())?;
        ensure!(fs::read(&back).unwrap() == original, "{stem}: dualize then undualize is not byte-identical");
        ensure!(fs::read(&dual2).unwrap() == fs::read(&dual).unwrap(), "{stem}: undualize then dualize is not byte-identical");

        let Document::DualHopfCategory(c) = format::read(&dual).map_err(|e| e.to_string())? else {
            return Err(format!("{stem}: dualize wrote the wrong kind"));
        };
        let r = verify_dual(&c);
        ensure!(r.passed(), "{stem}: dual fails {}", failures(&r));
        for axiom in ["cocomposition-multiplicative", "cocomposition-unit"] {
            ensure!(r.holds(axiom), "{stem}: {axiom} missing or false");
        }
        if c.has_antipode() {
            let run = cli(&["transform", path_str(&dual), "pack-dual", path_str(&packed), "-q"]);
            ensure!(run.code == 0, "{stem}: pack-dual exit {}", run.code);
            let Document::WeakHopf(w) = format::read(&packed).map_err(|e| e.to_string())? else {
                return Err(format!("{stem}: pack-dual wrote the wrong kind"));
            };
            let wr = verify_weak_hopf(&w).map_err(|e| e.to_string())?;
            ensure!(wr.passed(), "{stem}: packed dual fails {}", failures(&wr));
        }
    }
    Ok(())
}

fn all_fixtures() -> Vec<(&'static str, HopfCatData)> {
    let mut v = fixtures::hopf_fixtures(Q);
    v.push(("idempotent", fixtures::idempotent_bialgebra(Q)));
    v
}

fn comodule_module_round_trips() -> Check {
    for (name, a) in all_fixtures() {
        let a = Arc::new(a);
        let m = ModuleData::regular(a.clone(), Side::Right);
        let there = module_to_comodule(&m).map_err(|e| format!("{name}: {e}"))?;
        let back = comodule_to_module(&there).map_err(|e| format!("{name}: {e}"))?;
        ensure!(back == m, "{name}: module → comodule → module differs");

        let c = ComoduleData::regular(Arc::new(dualize(&a).map_err(|e| e.to_string())?));
        let there = comodule_to_module(&c).map_err(|e| format!("{name}: {e}"))?;
        let back = module_to_comodule(&there).map_err(|e| format!("{name}: {e}"))?;
        ensure!(back == c, "{name}: comodule → module → comodule differs");
    }
    Ok(())
}

/// All `φ ∈ F_p^d` with `φ·a* = ⟨a*, 1⟩ φ` for every dual basis functional `a*`, where
/// `(φ·a*)(b) = Σ φ(b_(1)) a*(b_(2))`.
fn brute_force_integrals(a: &HopfCatData, p: u64) -> Vec<Vec<i64>> {
    let f = a.field();
    let d = a.dim(0, 0);
    let delta = a.comult(0, 0);
    let one = a.unit_vec(0);
    let mut found = Vec::new();
    let total = (p as usize).pow(d as u32);
    for code in 0..total {
        let phi: Vec<i64> = (0..d).map(|i| ((code / (p as usize).pow(i as u32)) % p as usize) as i64).collect();
        let ok = (0..d).all(|q| {
            (0..d).all(|r| {
                let mut lhs = f.zero();
                for (i, &c) in phi.iter().enumerate() {
                    lhs = &lhs + &(&f.from_i64(c) * delta.get(i * d + q, r));
                }
                lhs == &one[q] * &f.from_i64(phi[r])
            })
        });
        if ok {
            found.push(phi);
        }
    }
    found
}

fn integral_checks() -> Check {
    for n in [2, 3] {
        let a = Arc::new(fixtures::group_algebra(n, Q));
        let ints = integrals(a.clone(), 0).map_err(|e| e.to_string())?;
        let mut delta_e = vec![Q.zero(); n];
        delta_e[0] = Q.one();
        ensure!(ints.basis == vec![delta_e], "kZ/{n}: integral basis {:?}", ints.basis);
        for p in [3u64, 5] {
            let fp = Field::prime(p).map_err(|e| e.to_string())?;
            let a = Arc::new(fixtures::group_algebra(n, fp));
            let ints = integrals(a.clone(), 0).map_err(|e| e.to_string())?;
            ensure!(ints.basis.len() == 1, "kZ/{n} over F_{p}: dimension {}", ints.basis.len());
            let solutions = brute_force_integrals(&a, p);
            ensure!(solutions.len() == p as usize, "kZ/{n} over F_{p}: oracle found {} solutions", solutions.len());
            for phi in solutions {
                // Each solution is a multiple of the basis vector.
                let c = fp.from_i64(phi[0]);
                let scaled: Vec<_> = ints.basis[0].iter().map(|s| s * &c).collect();
                let phi: Vec<_> = phi.iter().map(|&v| fp.from_i64(v)).collect();
                ensure!(scaled == phi, "kZ/{n} over F_{p}: oracle solution outside the integral span");
            }
        }
    }
    for (name, a) in fixtures::hopf_fixtures(Q) {
        let a = Arc::new(a);
        let dual = dual_hopf_module(a.clone()).map_err(|e| e.to_string())?;
        let co = coinvariants(&dual).map_err(|e| e.to_string())?;
        for x in 0..a.n() {
            let ints = integrals(a.clone(), x).map_err(|e| format!("{name}: {e}"))?;
            ensure!(ints.basis == co.bases[x], "{name}: integrals at {x} differ from dual coinvariants");
            ensure!(ints.maps.len() == a.n() && ints.bijective(), "{name}: integral map not bijective at {x}");
        }
    }
    let run = cli(&["analyze", path_str(&fixture("kz2")), "integrals"]);
    ensure!(run.code == 0 && run.stdout.contains("object * dim 1"), "integrals CLI exit {}", run.code);
    Ok(())
}

fn failing_axioms(r: &Report) -> BTreeSet<String> {
    r.failures().map(|i| i.axiom.clone()).collect()
}

fn bimonoid_correspondence() -> Check {
    let mut mutants = 0;
    for (name, a) in all_fixtures() {
        let b = bimonoid_from_category(&a).map_err(|e| format!("{name}: {e}"))?;
        let back = category_from_bimonoid(&b).map_err(|e| format!("{name}: {e}"))?;
        ensure!(back == a.strip_antipode(), "{name}: bimonoid round trip differs");
        let cat_side = verify_structure(&a, Level::Semihopf).map_err(|e| e.to_string())?;
        let bim_side = verify_bimonoid(&b).map_err(|e| e.to_string())?;
        ensure!(cat_side.passed() && bim_side.passed(), "{name}: passing fixture rejected");
        for (fault, m) in fixtures::fault_mutants(&a) {
            let cat_side = verify_structure(&m, Level::Semihopf).map_err(|e| e.to_string())?;
            let bim_side = verify_bimonoid(&bimonoid_shape(&m)).map_err(|e| e.to_string())?;
            ensure!(!cat_side.passed() && !bim_side.passed(), "{name}/{fault}: only one side rejects");
            ensure!(
                failing_axioms(&cat_side) == failing_axioms(&bim_side),
                "{name}/{fault}: broken axioms {:?} vs {:?}",
                failing_axioms(&cat_side),
                failing_axioms(&bim_side)
            );
            mutants += 1;
        }
    }
    ensure!(mutants >= 5 * all_fixtures().len(), "only {mutants} mutants checked");
    let dir = tmpdir();
    let b = dir.path().join("kz3.bimonoid");
    let back = dir.path().join("kz3.back");
    let run = cli(&["transform", path_str(&fixture("kz3")), "bimonoid", path_str(&b), "-q"]);
    ensure!(run.code == 0, "bimonoid exit {}", run.code);
    let run = cli(&["transform", path_str(&b), "unbimonoid", path_str(&back), "-q"]);
    ensure!(run.code == 0, "unbimonoid exit {}", run.code);
    ensure!(fs::read(&back).unwrap() == fs::read(fixture("kz3-stripped")).unwrap(), "CLI bimonoid round trip differs");
    Ok(())
}

fn strictness() -> Check {
    for n in [2, 3] {
        ensure!(check_strictness(&fixtures::pair_category(n, Q)).strict(), "pair groupoid {n} not strict");
    }
    for n in [2, 3] {
        ensure!(check_strictness(&fixtures::group_algebra(n, Q)).strict(), "kZ/{n} not strict");
    }
    ensure!(check_strictness(&fixtures::strongly_graded_category(Q)).strict(), "strongly graded not strict");
    ensure!(!check_strictness(&fixtures::zero_component_category(Q)).strict(), "zero-component graded is strict");
    for (name, a) in all_fixtures() {
        let s = check_strictness(&a);
        ensure!(s.all_triples == s.loops && s.report.passed(), "{name}: strictness conditions disagree");
    }
    for (name, want) in [("graded-z2-strong", "strict yes"), ("graded-z2-zero", "strict no")] {
        let run = cli(&["analyze", path_str(&fixture(name)), "strictness"]);
        ensure!(run.code == 0 && run.stdout.contains(want), "{name}: CLI strictness exit {}", run.code);
    }
    Ok(())
}

fn antipode_bijective() -> Check {
    for (name, a) in fixtures::hopf_fixtures(Q) {
        for x in 0..a.n() {
            for y in 0..a.n() {
                let s = a.antipode(x, y).expect("antipode");
                ensure!(s.rank() == s.rows() && s.rank() == s.cols(), "{name}: S_({x},{y}) is singular");
            }
        }
        let r = check_antipode_bijective(&a).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{name}: {}", failures(&r));
    }
    let sw = fixtures::sweedler(Q);
    let s = sw.antipode(0, 0).unwrap();
    ensure!(s.invert().is_ok(), "Sweedler antipode not invertible");
    ensure!(!s.compose(s).unwrap().is_identity(), "Sweedler S² = id");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("groupoid pipeline: pair groupoid, pack, Δ(1), groupoid algebra", groupoid_pipeline),
        ("singleton reduction: kZ/2, kZ/3, Sweedler involutivity", singleton_reduction),
        ("fundamental theorem: can inverses, recovery, equivalence", fundamental_positive),
        ("fundamental theorem: idempotent bialgebra rejected", fundamental_negative),
        ("duality round trips and packed dual", duality),
        ("comodule/module round trips", comodule_module_round_trips),
        ("integrals: brute-force oracle, dual coinvariants, bijective map", integral_checks),
        ("bimonoid correspondence and fault mutants", bimonoid_correspondence),
        ("strictness", strictness),
        ("antipodes bijective, Sweedler S² ≠ id", antipode_bijective),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (desc, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = check();
        let status = if result.is_ok() { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {status}  {desc} ({:.2?})", i + 1, t.elapsed());
        if let Err(e) = result {
            println!("              {e}");
            failed += 1;
        }
    }
    let total = start.elapsed();
    let fast = total < Duration::from_secs(60);
    println!(
        "criterion 11: {}  whole suite under 60 s ({total:.2?})",
        if fast { "PASS" } else { "FAIL" }
    );
    if !fast {
        failed += 1;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
