//! One function per subcommand, each returning a finished report.

use serde_json::{json, Value};
use smashprime::catalog::{self, Entry};
use smashprime::hopf::{HopfAlgebra, IntegralSide};
use smashprime::io;
use smashprime::module_algebra::HModuleAlgebra;
use smashprime::report::{Report, Status, Violation};
use smashprime::smash::SmashProduct;
use smashprime::suites::{self, SuiteOptions, SUITES};
use smashprime::twist::{self, Checked, DrinfeldTwist};
use smashprime::{Error, Field, Result, Scalar, Subspace};

use crate::{Ctx, Loaded};

fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn space(s: &Subspace) -> Value {
    Value::Array(s.basis_vectors().iter().map(|v| vector(v)).collect())
}

fn hopf_of(l: &Loaded) -> Result<&HopfAlgebra> {
    match &l.entry {
        Entry::Hopf(h) => Ok(h),
        Entry::ModuleAlgebra(m) => Ok(m.hopf()),
        Entry::Algebra(_) => Err(Error::input(format!(
            "'{}' is an algebra; a Hopf algebra is needed",
            l.instance
        ))),
    }
}

fn module_algebra_of(l: &Loaded) -> Result<&HModuleAlgebra> {
    match &l.entry {
        Entry::ModuleAlgebra(m) => Ok(m),
        _ => Err(Error::input(format!("'{}' is not a module algebra", l.instance))),
    }
}

fn axiom_violations(l: &Loaded) -> Vec<Violation> {
    match &l.entry {
        Entry::Algebra(a) => a.verify(),
        Entry::Hopf(h) => h.verify(),
        Entry::ModuleAlgebra(m) => m.verify_all(),
    }
}

/// `Some(report)` with status `input_error` when the input breaks an axiom.
/// The failed checks go into the conclusion so that `violations` stays
/// reserved for property failures.
pub fn validated(command: &str, l: &Loaded) -> Option<Report> {
    let bad = axiom_violations(l);
    if bad.is_empty() {
        return None;
    }
    let mut r = Report::new(command, l.instance.as_str());
    r.status = Status::InputError;
    r.conclusion = json!({ "error": "input fails its axioms", "failed_checks": bad });
    Some(r)
}

pub fn validate(l: &Loaded) -> Report {
    let mut r = Report::new("validate", l.instance.as_str());
    let (kind, dim) = match &l.entry {
        Entry::Algebra(a) => ("algebra", a.dim()),
        Entry::Hopf(h) => ("hopf", h.dim()),
        Entry::ModuleAlgebra(m) => ("module_algebra", m.algebra().dim()),
    };
    let bad = axiom_violations(l);
    r.conclusion =
        json!({ "kind": kind, "dim": dim, "field": l.entry.algebra().field().name(), "valid": bad.is_empty() });
    r.extend_violations(bad);
    r
}

pub fn radical(_: &Ctx, l: &Loaded) -> Result<Report> {
    let a = l.entry.algebra();
    let rad = a.jacobson_radical()?;
    let mut r = Report::new("", "");
    r.conclusion = json!({ "dim": a.dim(), "radical_dim": rad.dim(), "radical_basis": space(&rad) });
    Ok(r)
}

pub fn semiprime(_: &Ctx, l: &Loaded) -> Result<Report> {
    let a = l.entry.algebra();
    let rad = a.jacobson_radical()?;
    let mut r = Report::new("", "");
    r.conclusion = json!({ "semiprime": rad.is_zero(), "radical_dim": rad.dim() });
    Ok(r)
}

pub fn integrals(_: &Ctx, l: &Loaded) -> Result<Report> {
    let h = hopf_of(l)?;
    let mut r = Report::new("", "");
    let mut sides = serde_json::Map::new();
    for (side, key) in [(IntegralSide::Left, "left"), (IntegralSide::Right, "right")] {
        let s = h.integrals(side);
        let eps: Vec<Value> = s
            .basis_vectors()
            .iter()
            .map(|t| Value::String(h.eps(t).to_string()))
            .collect();
        sides.insert(key.into(), json!({ "dim": s.dim(), "basis": space(&s), "eps": eps }));
        if s.dim() != 1 {
            r.push_violation(Violation::new(
                format!("dim of {key} integrals = 1"),
                l.instance.as_str(),
                s.dim().to_string(),
                "1",
            ));
        }
    }
    r.conclusion = Value::Object(sides);
    Ok(r)
}

pub fn semisimple(_: &Ctx, l: &Loaded) -> Result<Report> {
    let h = hopf_of(l)?;
    let mut r = Report::new("", "");
    let witness = h.separability_witness();
    r.conclusion = match &witness {
        Some(w) => json!({
            "semisimple": true,
            "integral_side": match w.side { IntegralSide::Left => "left", IntegralSide::Right => "right" },
            "t": vector(&w.t),
            "eps_t": w.eps_t.to_string(),
        }),
        None => json!({ "semisimple": false }),
    };
    // cross-check against the radical of the underlying algebra
    match h.algebra().is_semiprime() {
        Ok(semiprime) => {
            r.hypothesis("radical_zero", semiprime);
            if semiprime != witness.is_some() {
                r.push_violation(Violation::new(
                    "eps(t) != 0 iff H semisimple",
                    l.instance.as_str(),
                    witness.is_some().to_string(),
                    semiprime.to_string(),
                ));
            }
        }
        Err(Error::UnsupportedCharacteristic { .. }) => r.hypothesis("radical_zero", "unsupported"),
        Err(e) => return Err(e),
    }
    Ok(r)
}

pub fn cosemisimple(_: &Ctx, l: &Loaded) -> Result<Report> {
    let h = hopf_of(l)?;
    let mut r = Report::new("", "");
    r.conclusion = json!({ "cosemisimple": h.is_cosemisimple()? });
    Ok(r)
}

pub fn dual(_: &Ctx, l: &Loaded) -> Result<Report> {
    let h = hopf_of(l)?;
    let d = h.dual()?;
    let mut r = Report::new("", "");
    r.extend_violations(d.verify());
    let dd = d.dual()?;
    if dd.algebra().structure_constants() != h.algebra().structure_constants() || dd.coalgebra() != h.coalgebra() {
        r.push_violation(Violation::new(
            "double dual = H",
            l.instance.as_str(),
            "differs",
            "equal",
        ));
    }
    r.conclusion = serde_json::to_value(io::hopf_to_json(&d)).expect("serializable");
    Ok(r)
}

pub fn antipode(_: &Ctx, l: &Loaded) -> Result<Report> {
    let h = hopf_of(l)?;
    let s = h.antipode();
    let mut r = Report::new("", "");
    r.extend_violations(h.verify_antipode());
    let rows: Vec<Value> = (0..s.rows()).map(|i| vector(s.row(i))).collect();
    r.conclusion = json!({ "antipode": rows, "bijective": h.antipode_is_bijective() });
    Ok(r)
}

fn smash_of(l: &Loaded) -> Result<SmashProduct> {
    SmashProduct::build(module_algebra_of(l)?.clone())
}

pub fn smash(_: &Ctx, l: &Loaded) -> Result<Report> {
    let s = smash_of(l)?;
    let mut r = Report::new("", "");
    r.extend_violations(s.verify());
    r.conclusion = serde_json::to_value(io::algebra_to_json(s.algebra())).expect("serializable");
    Ok(r)
}

pub fn smash_semiprime(_: &Ctx, l: &Loaded) -> Result<Report> {
    let s = smash_of(l)?;
    let rad = s.radical()?;
    let mut r = Report::new("", "");
    r.conclusion = json!({
        "dim": s.algebra().dim(),
        "semiprime": rad.is_zero(),
        "radical_dim": rad.dim(),
        "radical_basis": space(&rad),
    });
    Ok(r)
}

pub fn h_semiprime(_: &Ctx, l: &Loaded) -> Result<Report> {
    let ma = module_algebra_of(l)?;
    let o = ma.is_h_semiprime()?;
    let mut r = Report::new("", "");
    r.conclusion = json!({ "h_semiprime": o.semiprime, "witness": space(&o.witness) });
    Ok(r)
}

pub fn invariants(_: &Ctx, l: &Loaded) -> Result<Report> {
    let ma = module_algebra_of(l)?;
    let (inv, central) = (ma.invariants()?, ma.central_invariants()?);
    let mut r = Report::new("", "");
    r.conclusion = json!({
        "invariants_dim": inv.dim(),
        "invariants": space(&inv),
        "central_invariants_dim": central.dim(),
        "central_invariants": space(&central),
    });
    Ok(r)
}

pub fn separability(_: &Ctx, l: &Loaded) -> Result<Report> {
    let s = smash_of(l)?;
    let mut r = Report::new("", "");
    match s.separability_idempotent() {
        Ok(omega) => {
            r.hypothesis("eps_t_nonzero", true);
            r.extend_violations(s.bimodule_tensor().certify());
            r.extend_violations(s.verify_separability(&omega));
            r.conclusion = json!({ "tensor_dim": s.bimodule_tensor().dim(), "omega": vector(&omega) });
        }
        Err(Error::NoSeparabilityWitness) => {
            r.hypothesis("eps_t_nonzero", false);
            r.conclusion = json!("no integral with nonzero counit");
            r.mark_vacuous();
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

pub fn end_iso(_: &Ctx, l: &Loaded) -> Result<Report> {
    let o = module_algebra_of(l)?.end_iso_check()?;
    let mut r = Report::new("", "");
    r.conclusion = json!({
        "endomorphism_dim": o.endomorphism_dim,
        "invariants_dim": o.invariants_dim,
        "right_multiplications_embed": o.right_multiplications_embed,
    });
    if !o.holds() {
        r.push_violation(Violation::new(
            "dim End_{A#H}(A) = dim A^H",
            l.instance.as_str(),
            o.endomorphism_dim.to_string(),
            o.invariants_dim.to_string(),
        ));
    }
    Ok(r)
}

pub fn lemma31(c: &Ctx, l: &Loaded, probes: usize) -> Result<Report> {
    let ma = module_algebra_of(l)?;
    if !ma.is_h_semiprime()?.semiprime {
        return Err(Error::input(format!("'{}' is not H-semiprime", l.instance)));
    }
    let (checked, bad) = suites::essentiality_instance(ma, &l.instance, c.samples, probes, c.seed)?;
    let mut r = Report::new("", "").with_seed(c.seed);
    r.hypothesis("h_semiprime", true);
    r.hypothesis("probes", probes);
    r.conclusion = json!({ "ideals_checked": checked });
    r.extend_violations(bad);
    Ok(r)
}

pub fn retract(c: &Ctx, l: &Loaded) -> Result<Report> {
    let ma = module_algebra_of(l)?;
    let o = ma.retractability_check(c.samples, c.seed)?;
    let semiprime = SmashProduct::build(ma.clone())?.is_semiprime()?;
    let mut r = Report::new("", "").with_seed(c.seed);
    r.hypothesis("smash_semiprime", semiprime);
    let counter: Vec<Value> = o.counterexamples.iter().map(space).collect();
    r.conclusion = json!({ "ideals_checked": o.ideals_checked, "counterexamples": counter });
    if semiprime {
        for ce in &o.counterexamples {
            r.push_violation(Violation::new(
                "I^H != 0",
                format!("I dim {}", ce.dim()),
                "0",
                "nonzero",
            ));
        }
    } else if o.counterexamples.is_empty() {
        r.mark_vacuous();
    }
    Ok(r)
}

pub fn thm44(c: &Ctx, l: &Loaded) -> Result<Report> {
    let s = smash_of(l)?;
    let o = s.integral_map_check(c.samples, c.seed)?;
    let mut r = Report::new("", "").with_seed(c.seed);
    r.hypothesis("smash_semiprime", o.smash_semiprime);
    r.conclusion =
        json!({ "injective": o.injective, "ideals_checked": o.ideals_checked, "integral": vector(&o.integral) });
    r.extend_violations(o.violations);
    if !o.smash_semiprime {
        r.mark_vacuous();
    }
    Ok(r)
}

/// Parses and checks `J`; invalid twists come back as a failed report.
fn checked_twist(h: &HopfAlgebra, v: &Value) -> Result<std::result::Result<DrinfeldTwist, Report>> {
    let j = io::twist_from_value(v, h)?;
    let mut r = Report::new("", "");
    match twist::verify_twist(h, &j) {
        Ok(Checked::Valid(t)) => Ok(Ok(t)),
        Ok(Checked::Invalid(bad)) => {
            r.conclusion = json!({ "twist": false });
            r.extend_violations(bad);
            Ok(Err(r))
        }
        Err(Error::NotInvertible) => {
            r.conclusion = json!({ "twist": false });
            r.push_violation(Violation::new("J invertible", "H⊗H", "singular", "invertible"));
            Ok(Err(r))
        }
        Err(e) => Err(e),
    }
}

pub fn twist_verify(l: &Loaded, v: &Value) -> Result<Report> {
    let h = hopf_of(l)?;
    let t = match checked_twist(h, v)? {
        Ok(t) => t,
        Err(r) => return Ok(r),
    };
    let mut r = Report::new("", "");
    r.conclusion = json!({
        "twist": true,
        "trivial": twist::is_trivial(h, &t),
        "inverse": io::twist_to_json(t.q(), h.dim())["J"].clone(),
    });
    Ok(r)
}

pub fn twist_apply(l: &Loaded, v: &Value) -> Result<Report> {
    let h = hopf_of(l)?;
    let t = match checked_twist(h, v)? {
        Ok(t) => t,
        Err(r) => return Ok(r),
    };
    let ma = module_algebra_of(l).ok();
    let mut r = Report::new("", "");
    let hj = twist::twist_hopf(h, &t)?;
    r.extend_violations(twist::inverse_twist_check(h, ma, &t)?);
    let mut out = serde_json::Map::new();
    out.insert(
        "hopf".into(),
        serde_json::to_value(io::hopf_to_json(&hj)).expect("serializable"),
    );
    if let Some(ma) = ma {
        let aj = twist::twist_module_algebra(ma, &t)?;
        r.extend_violations(twist::verify_twist_relation(ma, &t)?);
        out.insert("module_algebra".into(), io::module_algebra_to_json(&aj));
    }
    r.conclusion = Value::Object(out);
    Ok(r)
}

pub fn transfer(l: &Loaded, v: &Value) -> Result<Report> {
    let ma = module_algebra_of(l)?;
    let t = match checked_twist(ma.hopf(), v)? {
        Ok(t) => t,
        Err(r) => return Ok(r),
    };
    let o = twist::semiprime_transfer_check(ma, &t)?;
    let mut r = Report::new("", "");
    r.conclusion = json!({
        "h_semiprime": [o.h_semiprime, o.h_semiprime_twisted],
        "smash_semiprime": [o.smash_semiprime, o.smash_semiprime_twisted],
        "smash_radical_dim": [o.smash_radical_dim, o.smash_radical_dim_twisted],
        "smash_center_dim": [o.smash_center_dim, o.smash_center_dim_twisted],
    });
    r.extend_violations(o.violations());
    Ok(r)
}

pub fn triangular_verify(l: &Loaded, v: &Value) -> Result<Report> {
    let h = hopf_of(l)?;
    let rm = io::r_matrix_from_value(v, h)?;
    let mut r = Report::new("", "");
    match twist::verify_triangular(h, &rm) {
        Ok(Checked::Valid(_)) => r.conclusion = json!({ "triangular": true }),
        Ok(Checked::Invalid(bad)) => {
            r.conclusion = json!({ "triangular": false });
            r.extend_violations(bad);
        }
        Err(Error::NotInvertible) => {
            r.conclusion = json!({ "triangular": false });
            r.push_violation(Violation::new("R invertible", "H⊗H", "singular", "invertible"));
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

pub fn twist_search(l: &Loaded, grid: Option<&str>) -> Result<Report> {
    let h = hopf_of(l)?;
    let f = h.field();
    let grid = match grid {
        Some(g) => twist::parse_grid(f, g)?,
        None => twist::default_grid(f),
    };
    let s = twist::twist_search(h, &grid)?;
    let mut r = Report::new("", "");
    let twists: Vec<Value> = s
        .twists
        .iter()
        .map(|t| io::twist_to_json(t.j(), h.dim())["J"].clone())
        .collect();
    r.hypothesis(
        "grid",
        Value::Array(s.grid.iter().map(|c| Value::String(c.to_string())).collect()),
    );
    r.conclusion = json!({
        "candidates": s.candidates,
        "counit_admissible": s.counit_admissible,
        "prefilter_hits": s.prefilter_hits,
        "certified": s.twists.len(),
        "nontrivial": s.nontrivial().count(),
        "twists": twists,
    });
    let has_trivial = s.twists.iter().any(|t| twist::is_trivial(h, t));
    if grid.contains(&f.zero()) && grid.contains(&f.one()) && !has_trivial {
        r.push_violation(Violation::new(
            "trivial twist found",
            l.instance.as_str(),
            "absent",
            "present",
        ));
    }
    Ok(r)
}

pub fn catalog_list() -> Report {
    let mut r = Report::new("catalog", "list");
    r.conclusion = json!(catalog::names());
    r
}

/// The JSON form of a catalog entry, ready to be fed back through `--input`.
pub fn catalog_emit(name: &str, field: Field) -> Result<Value> {
    Ok(match catalog::lookup(name, field)? {
        Entry::Algebra(a) => serde_json::to_value(io::algebra_to_json(&a)).expect("serializable"),
        Entry::Hopf(h) => serde_json::to_value(io::hopf_to_json(&h)).expect("serializable"),
        Entry::ModuleAlgebra(m) => io::module_algebra_to_json(&m),
    })
}

pub fn verify_paper(c: &Ctx, only: &[String], probes: usize, corrupt_counit: bool) -> Vec<Report> {
    let mut opts = SuiteOptions::new(c.seed);
    opts.samples = c.samples;
    opts.probes = probes;
    opts.corrupt_counit = corrupt_counit;
    if let Some(bad) = only.iter().find(|s| !SUITES.contains(&s.as_str())) {
        let e = Error::input(format!("unknown suite '{bad}'; known: {}", SUITES.join(", ")));
        return vec![Report::from_error("verify-paper", bad.as_str(), &e)];
    }
    SUITES
        .iter()
        .filter(|s| only.is_empty() || only.iter().any(|o| o == *s))
        .filter_map(|s| suites::run_suite(s, &opts))
        .collect()
}
