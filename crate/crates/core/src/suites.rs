//! Verification suites over the catalog and seeded random instances.
//! Each suite yields one [`Report`]; a violation means a theorem failed on
//! some instance (or the harness itself is broken).

use serde_json::{json, Value};

use crate::algebra::{Algebra, Side};
use crate::catalog::{self, GroupTable};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{Coalgebra, HopfAlgebra, IntegralSide};
use crate::linalg::{format_vec, unit_vector, Matrix, Subspace};
use crate::module_algebra::HModuleAlgebra;
use crate::random::{self, SeededRng};
use crate::report::{Report, Status, Violation};
use crate::smash::SmashProduct;
use crate::twist;
use rand::seq::SliceRandom;
use rand::Rng;

pub const SUITES: [&str; 10] = [
    "separability",
    "maschke",
    "commutative-semiprime",
    "negative-controls",
    "radical-oracle",
    "annihilator-essential",
    "integral-map",
    "twists",
    "end-iso",
    "integrals",
];

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Essentiality probes per ideal.
    pub probes: usize,
    /// Random generators for sampled `H`-stable ideals.
    pub samples: usize,
    /// Random module algebras in the Maschke suite.
    pub random_module_algebras: usize,
    /// Random algebras in the radical oracle suite.
    pub random_algebras: usize,
    /// Debug mode: corrupt the counit of one Maschke-suite input.
    pub corrupt_counit: bool,
}

impl SuiteOptions {
    pub fn new(seed: u64) -> SuiteOptions {
        SuiteOptions {
            seed,
            probes: 50,
            samples: 10,
            random_module_algebras: 60,
            random_algebras: 120,
            corrupt_counit: false,
        }
    }
}

/// Runs every suite in [`SUITES`] order.
pub fn run_all(opts: &SuiteOptions) -> Vec<Report> {
    SUITES
        .iter()
        .map(|name| run_suite(name, opts).expect("known suite"))
        .collect()
}

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Option<Report> {
    let seed = random::derive_seed(opts.seed, name);
    let result = match name {
        "separability" => separability_suite(),
        "maschke" => maschke_suite(seed, opts),
        "commutative-semiprime" => commutative_semiprime_suite(),
        "negative-controls" => negative_control_suite(),
        "radical-oracle" => radical_oracle_suite(seed, opts.random_algebras),
        "annihilator-essential" => essentiality_suite(seed, opts),
        "integral-map" => integral_map_suite(seed, opts.samples),
        "twists" => twist_suite(),
        "end-iso" => end_iso_suite(),
        "integrals" => integral_suite(),
        _ => return None,
    };
    let mut report = match result {
        Ok(r) => r,
        Err(e) => Report::from_error("verify-paper", name, &e),
    };
    report.command = "verify-paper".into();
    report.instance = name.into();
    report.seed = Some(opts.seed);
    Some(report)
}

fn tag(name: &str, mut v: Vec<Violation>) -> Vec<Violation> {
    for x in &mut v {
        x.location = format!("{name}: {}", x.location);
    }
    v
}

fn catalog_pairs() -> Result<Vec<(String, HModuleAlgebra)>> {
    catalog::module_algebra_instances()
}

fn separability_suite() -> Result<Report> {
    let mut r = Report::new("", "");
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    for (name, ma) in catalog_pairs()? {
        let s = SmashProduct::build(ma)?;
        match s.separability_idempotent() {
            Ok(omega) => {
                r.extend_violations(tag(&name, s.bimodule_tensor().certify()));
                r.extend_violations(tag(&name, s.verify_separability(&omega)));
                checked.push(name);
            }
            Err(Error::NoSeparabilityWitness) => skipped.push(name),
            Err(e) => return Err(e),
        }
    }
    r.hypothesis("pairs_with_witness", checked.len());
    r.conclusion = json!({ "checked": checked, "no_witness": skipped });
    Ok(r)
}

/// Replaces the counit by one that vanishes off the unit's support.
fn corrupt(ma: &HModuleAlgebra) -> Result<HModuleAlgebra> {
    let h = ma.hopf();
    let f = h.field();
    let comult = (0..h.dim()).map(|i| h.coalgebra().comult(i).to_vec()).collect();
    let counit = (0..h.dim())
        .map(|i| {
            if h.unit()[i].is_zero() {
                f.zero()
            } else {
                h.counit()[i].clone()
            }
        })
        .collect();
    let bad = HopfAlgebra::from_parts(
        h.algebra().clone(),
        Coalgebra::new(h.dim(), comult, counit)?,
        h.antipode().clone(),
    )?;
    HModuleAlgebra::new(bad, ma.algebra().clone(), ma.action().to_vec())
}

fn maschke_suite(seed: u64, opts: &SuiteOptions) -> Result<Report> {
    let mut instances = catalog_pairs()?;
    instances.extend(random_module_algebras(seed, opts.random_module_algebras)?);
    if opts.corrupt_counit {
        instances[0].1 = corrupt(&instances[0].1)?;
    }
    let mut r = Report::new("", "");
    for (name, ma) in &instances {
        if let Some(v) = ma.verify_all().first() {
            r.status = Status::InputError;
            r.conclusion = json!({
                "invalid_input": name,
                "check": v.check,
                "location": v.location,
            });
            return Ok(r);
        }
    }
    let mut with_hypotheses = 0;
    let mut vacuous = 0;
    for (name, ma) in instances.iter() {
        let o = SmashProduct::build(ma.clone())?.maschke_check()?;
        if o.hypotheses_hold() {
            with_hypotheses += 1;
        } else {
            vacuous += 1;
        }
        if o.violated() {
            r.push_violation(Violation::new(
                "A#H semisimple",
                name.clone(),
                format!("radical dim {}", o.radical.dim()),
                "0",
            ));
        }
    }
    r.hypothesis("instances", instances.len());
    r.hypothesis("random_instances", opts.random_module_algebras);
    r.conclusion = json!({ "hypotheses_true": with_hypotheses, "vacuous": vacuous });
    Ok(r)
}

fn commutative_semiprime_suite() -> Result<Report> {
    let mut r = Report::new("", "");
    let mut rows = Vec::new();
    for (name, ma) in catalog_pairs()? {
        let a_comm = ma.algebra().is_commutative();
        let a_semiprime = ma.algebra().is_semiprime()?;
        let h_ss = ma.hopf().is_separable();
        let h_coss = ma.hopf().is_cosemisimple()?;
        // the noncommutative graded group ring is run alongside as an extension
        let extension = name == "ma:dualgroup-S3";
        if !(a_semiprime && h_ss && h_coss && (a_comm || extension)) {
            continue;
        }
        let s = SmashProduct::build(ma)?;
        let rad = s.radical()?;
        if !rad.is_zero() {
            r.push_violation(Violation::new(
                "A#H semiprime",
                name.clone(),
                format!("radical dim {}", rad.dim()),
                "0",
            ));
        }
        rows.push(json!({
            "instance": name,
            "smash_dim": s.algebra().dim(),
            "A_commutative": a_comm,
            "smash_semiprime": rad.is_zero(),
        }));
    }
    r.hypothesis("A_integral_over_invariants", "automatic in finite dimension");
    r.conclusion = Value::Array(rows);
    Ok(r)
}

fn negative_control_suite() -> Result<Report> {
    let mut r = Report::new("", "");
    let mut rows = Vec::new();
    for (name, ma, tag) in catalog::negative_controls(Field::Rational)? {
        let s = SmashProduct::build(ma)?;
        let rad = s.radical()?;
        if rad.is_zero() {
            r.push_violation(Violation::new(
                "A#H not semiprime",
                name.clone(),
                "radical 0",
                "non-zero radical",
            ));
        }
        let witness: Vec<String> = rad.basis_vectors().iter().map(|v| format_vec(v)).collect();
        rows.push(json!({ "instance": name, "tag": format!("{tag:?}"), "witness_ideal": witness }));
    }
    r.conclusion = Value::Array(rows);
    Ok(r)
}

fn radical_oracle_suite(seed: u64, count: usize) -> Result<Report> {
    let mut r = Report::new("", "");
    let mut rng = random::rng(seed);
    let grid = oracle_grid();
    let mut agree = 0;
    let mut nonzero = 0;
    let mut modular = 0;
    for idx in 0..count {
        let dim = 1 + idx % 3;
        let (consts, a) = random_associative_algebra(&mut rng, Field::Rational, dim)?;
        let trace = a.jacobson_radical()?;
        let search = a.nilpotent_ideal_search(grid_vectors(&grid, dim))?;
        if trace == search {
            agree += 1;
        } else {
            r.push_violation(Violation::new(
                "trace form = nilpotent ideal search",
                format!("algebra {idx}"),
                format!("{:?}", trace.basis_vectors()),
                format!("{:?}", search.basis_vectors()),
            ));
        }
        nonzero += usize::from(!trace.is_zero());
        // the same integer structure constants reduced mod 5 and 7
        for p in [5, 7] {
            let f = Field::prime(p)?;
            let reduced = algebra_from_ints(f, dim, &consts)?;
            let trace = reduced.trace_form().kernel();
            let exhaustive = reduced.nilpotent_ideal_search(crate::algebra::all_vectors(f, dim))?;
            modular += 1;
            if trace != exhaustive {
                r.push_violation(Violation::new(
                    "trace form = exhaustive search",
                    format!("algebra {idx} mod {p}"),
                    "differs",
                    "equal",
                ));
            }
        }
    }
    r.hypothesis("algebras", count);
    r.conclusion = json!({ "agree": agree, "nonzero_radical": nonzero, "modular_checks": modular });
    Ok(r)
}

fn essentiality_suite(seed: u64, opts: &SuiteOptions) -> Result<Report> {
    let mut r = Report::new("", "");
    let mut checked = 0;
    let mut instances = Vec::new();
    for (name, ma) in catalog_pairs()? {
        if !ma.is_h_semiprime()?.semiprime {
            continue;
        }
        let (n, v) = essentiality_instance(&ma, &name, opts.samples, opts.probes, random::derive_seed(seed, &name))?;
        checked += n;
        r.extend_violations(v);
        instances.push(name);
    }
    r.hypothesis("probes", opts.probes);
    r.conclusion = json!({ "instances": instances, "ideals_checked": checked });
    Ok(r)
}

/// Runs the annihilator/essentiality comparison on the stable ideals
/// generated by each basis vector and by `samples` random vectors. Returns
/// the number of distinct ideals checked and any disagreements.
pub fn essentiality_instance(
    ma: &HModuleAlgebra,
    name: &str,
    samples: usize,
    probes: usize,
    seed: u64,
) -> Result<(usize, Vec<Violation>)> {
    let f = ma.field();
    let n = ma.algebra().dim();
    let mut rng = random::rng(seed);
    let mut gens: Vec<Vec<Scalar>> = (0..n).map(|k| unit_vector(f, n, k)).collect();
    gens.extend((0..samples).map(|_| random::sparse_vector(f, n, &mut rng)));
    let mut seen: Vec<Subspace> = Vec::new();
    let mut out = Vec::new();
    for g in gens {
        let ideal = ma.h_stable_closure(&Subspace::span(f, n, &[g]), Side::TwoSided)?;
        if seen.contains(&ideal.ideal.space) {
            continue;
        }
        seen.push(ideal.ideal.space.clone());
        if !ma.is_stable(&ideal.ideal.space, Side::TwoSided) {
            out.push(Violation::new("stability certificate", name, "not stable", "stable"));
        }
        let o = ma.essentiality_check(&ideal, probes, rng.gen())?;
        if !o.consistent() {
            out.push(Violation::new(
                "l.ann(I) = 0 iff I essential",
                format!("{name}: I dim {}", ideal.ideal.space.dim()),
                o.annihilator_zero.to_string(),
                o.essential.to_string(),
            ));
        }
    }
    Ok((seen.len(), out))
}

fn integral_map_suite(seed: u64, samples: usize) -> Result<Report> {
    let mut r = Report::new("", "");
    let mut rows = Vec::new();
    for (name, ma) in catalog_pairs()? {
        let s = SmashProduct::build(ma)?;
        let o = s.integral_map_check(samples, random::derive_seed(seed, &name))?;
        r.extend_violations(tag(&name, o.violations.clone()));
        rows.push(json!({
            "instance": name,
            "smash_semiprime": o.smash_semiprime,
            "injective": o.injective,
            "ideals_checked": o.ideals_checked,
        }));
    }
    r.conclusion = Value::Array(rows);
    Ok(r)
}

fn twist_suite() -> Result<Report> {
    let mut r = Report::new("", "");
    let f = Field::Rational;
    let h = catalog::group_algebra(f, &GroupTable::klein())?;
    let ma = catalog::translation_action(f, &GroupTable::klein())?;
    let search = twist::twist_search(&h, &twist::default_grid(f))?;
    let trivial_found = search.twists.iter().any(|t| twist::is_trivial(&h, t));
    if !trivial_found {
        r.push_violation(Violation::new(
            "trivial twist certified",
            "grid search",
            "missing",
            "present",
        ));
    }
    for (k, t) in search.twists.iter().enumerate() {
        let loc = format!("twist {k}");
        let outcome = (|| -> Result<Vec<Violation>> {
            let hj = twist::twist_hopf(&h, t)?;
            let mut v = hj.verify();
            let aj = twist::twist_module_algebra(&ma, t)?;
            v.extend(aj.verify());
            v.extend(twist::verify_twist_relation(&ma, t)?);
            v.extend(twist::inverse_twist_check(&h, Some(&ma), t)?);
            v.extend(twist::semiprime_transfer_check(&ma, t)?.violations());
            Ok(v)
        })();
        match outcome {
            Ok(v) => r.extend_violations(tag(&loc, v)),
            Err(e) => r.push_violation(Violation::new("twist pipeline", loc, e.to_string(), "ok")),
        }
    }
    let nontrivial: Vec<Value> = search
        .nontrivial()
        .take(3)
        .map(|t| crate::io::twist_to_json(t.j(), h.dim()))
        .collect();
    r.hypothesis("grid", "0,1,-1,1/2,-1/2");
    r.conclusion = json!({
        "candidates": search.candidates,
        "counit_admissible": search.counit_admissible,
        "prefilter_hits": search.prefilter_hits,
        "certified": search.twists.len(),
        "nontrivial": search.nontrivial().count(),
        "examples": nontrivial,
    });
    Ok(r)
}

fn end_iso_suite() -> Result<Report> {
    let mut r = Report::new("", "");
    let mut rows = Vec::new();
    for (name, ma) in catalog_pairs()? {
        let o = ma.end_iso_check()?;
        if !o.holds() {
            r.push_violation(Violation::new(
                "dim End(A) = dim A^H",
                name.clone(),
                o.endomorphism_dim.to_string(),
                o.invariants_dim.to_string(),
            ));
        }
        rows.push(json!({ "instance": name, "dim_end": o.endomorphism_dim, "dim_invariants": o.invariants_dim }));
    }
    r.conclusion = Value::Array(rows);
    Ok(r)
}

fn integral_suite() -> Result<Report> {
    let mut r = Report::new("", "");
    let mut rows = Vec::new();
    for (name, h) in catalog::hopf_instances()? {
        let left = h.integrals(IntegralSide::Left);
        let right = h.integrals(IntegralSide::Right);
        if left.dim() != 1 || right.dim() != 1 {
            r.push_violation(Violation::new(
                "dim integrals = 1",
                name.clone(),
                format!("{}/{}", left.dim(), right.dim()),
                "1/1",
            ));
        }
        if name.starts_with("group:") || name.contains('[') {
            let n = h.dim();
            let t = catalog::group_sum(h.field(), n);
            let expected = h.field().from_i64(n as i64);
            if !left.contains(&t) || !right.contains(&t) || h.eps(&t) != expected {
                r.push_violation(Violation::new(
                    "eps(t) = |G|",
                    name.clone(),
                    h.eps(&t).to_string(),
                    expected.to_string(),
                ));
            }
        }
        rows.push(json!({ "instance": name, "left": left.dim(), "right": right.dim() }));
    }
    r.conclusion = Value::Array(rows);
    Ok(r)
}

// ---- random instances ----

/// `{0, ±1, ±2, ±3, ±1/2, ±1/3}`.
pub fn oracle_grid() -> Vec<Scalar> {
    let f = Field::Rational;
    let mut g = vec![f.zero()];
    for (a, b) in [(1, 1), (2, 1), (3, 1), (1, 2), (1, 3)] {
        g.push(f.frac(a, b));
        g.push(f.frac(-a, b));
    }
    g
}

/// Every vector with coordinates in `grid`.
pub fn grid_vectors(grid: &[Scalar], n: usize) -> impl Iterator<Item = Vec<Scalar>> + '_ {
    let total = grid.len().pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let s = grid[code % grid.len()].clone();
                code /= grid.len();
                s
            })
            .collect()
    })
}

fn algebra_from_ints(f: Field, dim: usize, consts: &[i64]) -> Result<Algebra> {
    let mult = consts.iter().map(|&c| f.from_i64(c)).collect();
    Algebra::new(f, dim, mult, unit_vector(f, dim, 0), None)
}

/// A random unital associative algebra: `e_0` is the unit and the products
/// `e_i e_j` (`i, j ≥ 1`) have coordinates in `{−1, 0, 1}`; non-associative
/// draws are rejected. Returns the integer structure constants as well.
pub fn random_associative_algebra(rng: &mut SeededRng, field: Field, dim: usize) -> Result<(Vec<i64>, Algebra)> {
    for _ in 0..100_000 {
        let mut consts = vec![0i64; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let base = (i * dim + j) * dim;
                if i == 0 {
                    consts[base + j] = 1;
                } else if j == 0 {
                    consts[base + i] = 1;
                } else {
                    for k in 0..dim {
                        consts[base + k] = rng.gen_range(-1..=1);
                    }
                }
            }
        }
        let a = algebra_from_ints(field, dim, &consts)?;
        if a.verify().is_empty() {
            return Ok((consts, a));
        }
    }
    Err(Error::internal("no associative algebra found by rejection"))
}

/// Small commutative algebras with a finite group of automorphisms listed
/// (identity first) and a homogeneous basis for gradings.
struct Family {
    name: &'static str,
    algebra: Algebra,
    automorphisms: Vec<Matrix>,
    /// Which basis elements may carry a non-trivial degree, and the order
    /// that degree must divide (`0` = unrestricted, since the element squares to zero).
    gradable: Vec<(usize, usize)>,
}

fn families(f: Field) -> Vec<Family> {
    let mut out = Vec::new();
    for k in 1..=3 {
        let perms = permutations(k);
        let auts = perms
            .iter()
            .map(|p| Matrix::from_columns(f, k, &p.iter().map(|&i| unit_vector(f, k, i)).collect::<Vec<_>>()))
            .collect();
        out.push(Family {
            name: ["Q", "Q^2", "Q^3"][k - 1],
            algebra: catalog::diagonal_algebra(f, k),
            automorphisms: auts,
            gradable: vec![],
        });
    }
    let flip2 = vec![Matrix::identity(f, 2), Matrix::from_i64(f, &[&[1, 0], &[0, -1]])];
    out.push(Family {
        name: "Q[x]/(x^2)",
        algebra: catalog::dual_numbers(f),
        automorphisms: flip2.clone(),
        gradable: vec![(1, 0)],
    });
    let split = Algebra::from_products(f, 2, unit_vector(f, 2, 0), None, |i, j| unit_vector(f, 2, (i + j) % 2))
        .expect("Q[y]/(y^2-1)");
    out.push(Family {
        name: "Q[y]/(y^2-1)",
        algebra: split,
        automorphisms: flip2,
        gradable: vec![(1, 2)],
    });
    // basis e1, x, e2 with x^2 = 0, unit e1 + e2
    let mixed = Algebra::from_products(f, 3, vec![f.one(), f.zero(), f.one()], None, |i, j| match (i, j) {
        (0, 0) | (2, 2) => unit_vector(f, 3, i),
        (0, 1) | (1, 0) => unit_vector(f, 3, 1),
        _ => vec![f.zero(); 3],
    })
    .expect("Q[x]/(x^2) x Q");
    let flip3 = vec![
        Matrix::identity(f, 3),
        Matrix::from_i64(f, &[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]),
    ];
    out.push(Family {
        name: "Q[x]/(x^2)xQ",
        algebra: mixed,
        automorphisms: flip3,
        gradable: vec![(1, 0)],
    });
    let cubic = Algebra::from_products(f, 3, unit_vector(f, 3, 0), None, |i, j| unit_vector(f, 3, (i + j) % 3))
        .expect("Q[y]/(y^3-1)");
    let inv = vec![
        Matrix::identity(f, 3),
        Matrix::from_i64(f, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
    ];
    out.push(Family {
        name: "Q[y]/(y^3-1)",
        algebra: cubic,
        automorphisms: inv,
        gradable: vec![],
    });
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Group homomorphisms `G → auts`, as index vectors.
fn homomorphisms(g: &GroupTable, auts: &[Matrix]) -> Vec<Vec<usize>> {
    let n = g.order();
    let m = auts.len();
    let mut out = Vec::new();
    for code in 0..m.pow(n as u32) {
        let mut c = code;
        let img: Vec<usize> = (0..n)
            .map(|_| {
                let x = c % m;
                c /= m;
                x
            })
            .collect();
        let ok = (0..n).all(|a| (0..n).all(|b| auts[img[g.mul(a, b)]] == auts[img[a]].mul(&auts[img[b]])));
        if ok {
            out.push(img);
        }
    }
    out
}

/// Seeded random module algebras with `dim A ≤ 3`, `dim H ≤ 4` over `Q`:
/// group algebras acting by automorphisms and dual group algebras acting
/// through gradings.
pub fn random_module_algebras(seed: u64, count: usize) -> Result<Vec<(String, HModuleAlgebra)>> {
    let f = Field::Rational;
    let fams = families(f);
    let groups: Vec<GroupTable> = ["C2", "C3", "C4", "C2xC2"]
        .iter()
        .map(|g| GroupTable::parse(g))
        .collect::<Result<_>>()?;
    let mut rng = random::rng(seed);
    let mut out = Vec::new();
    for idx in 0..count {
        let g = groups.choose(&mut rng).expect("non-empty");
        let fam = fams.choose(&mut rng).expect("non-empty");
        let (name, ma) = if rng.gen_bool(0.6) {
            let homs = homomorphisms(g, &fam.automorphisms);
            let img = homs.choose(&mut rng).expect("trivial hom exists");
            let hopf = catalog::group_algebra(f, g)?;
            let action = img.iter().map(|&i| fam.automorphisms[i].clone()).collect();
            (
                format!("random {idx}: Q[{}] on {} via {:?}", g.name(), fam.name, img),
                HModuleAlgebra::new(hopf, fam.algebra.clone(), action)?,
            )
        } else {
            let n = fam.algebra.dim();
            let mut degrees = vec![g.identity(); n];
            for &(b, order) in &fam.gradable {
                let allowed: Vec<usize> = (0..g.order())
                    .filter(|&x| order == 0 || g.mul(x, x) == g.identity())
                    .collect();
                degrees[b] = *allowed.choose(&mut rng).expect("identity allowed");
            }
            let hopf = catalog::dual_group_algebra(f, g)?;
            let action = (0..g.order())
                .map(|x| {
                    let mut m = Matrix::zeros(f, n, n);
                    for (b, &d) in degrees.iter().enumerate() {
                        if d == x {
                            m.set(b, b, f.one());
                        }
                    }
                    m
                })
                .collect();
            (
                format!("random {idx}: Q^{} grading {} by {:?}", g.name(), fam.name, degrees),
                HModuleAlgebra::new(hopf, fam.algebra.clone(), action)?,
            )
        };
        if let Some(v) = ma.verify_all().first() {
            return Err(Error::internal(format!("{name}: generated instance fails {}", v.check)));
        }
        out.push((name, ma));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_module_algebras_are_valid_and_varied() {
        let ms = random_module_algebras(3, 30).unwrap();
        assert_eq!(ms.len(), 30);
        assert!(ms.iter().any(|(_, m)| !m.algebra().is_semiprime().unwrap()));
        assert!(ms.iter().any(|(n, _)| n.contains("grading")));
        let again = random_module_algebras(3, 30).unwrap();
        assert_eq!(
            ms.iter().map(|x| &x.0).collect::<Vec<_>>(),
            again.iter().map(|x| &x.0).collect::<Vec<_>>()
        );
    }

    #[test]
    fn random_algebras_are_associative() {
        let mut rng = random::rng(1);
        for dim in 1..=3 {
            let (_, a) = random_associative_algebra(&mut rng, Field::Rational, dim).unwrap();
            assert!(a.verify().is_empty());
        }
    }

    #[test]
    fn homomorphism_enumeration() {
        let auts = vec![Matrix::identity(Field::Rational, 1)];
        assert_eq!(homomorphisms(&GroupTable::cyclic(3), &auts).len(), 1);
        let f = families(Field::Rational);
        let q3 = f.iter().find(|x| x.name == "Q^3").unwrap();
        // C2 → S3: identity plus three transpositions
        assert_eq!(homomorphisms(&GroupTable::cyclic(2), &q3.automorphisms).len(), 4);
    }

    #[test]
    fn corrupted_counit_is_an_input_error() {
        let mut opts = SuiteOptions::new(1);
        opts.random_module_algebras = 2;
        opts.corrupt_counit = true;
        let r = run_suite("maschke", &opts).unwrap();
        assert_eq!(r.status, Status::InputError);
        assert_eq!(r.status.exit_code(), 2);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteOptions::new(1)).is_none());
    }
}
