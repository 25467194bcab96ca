//! The ten acceptance criteria. Runs without the libtest harness so that
//! every criterion prints exactly one PASS or FAIL line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::Value;
use smashprime::catalog::{self, GroupTable};
use smashprime::hopf::IntegralSide;
use smashprime::report::{Report, Status};
use smashprime::smash::SmashProduct;
use smashprime::suites::{self, SuiteOptions};
use smashprime::Field;

const SEED: u64 = 42;

struct Criterion {
    number: usize,
    title: &'static str,
    suite: &'static str,
    bound: Duration,
    /// Extra checks on the suite report; returns a reason on failure.
    check: fn(&Report) -> Result<(), String>,
}

fn rows(r: &Report) -> &[Value] {
    r.conclusion.as_array().map(Vec::as_slice).unwrap_or(&[])
}

fn row<'a>(r: &'a Report, instance: &str) -> Option<&'a Value> {
    rows(r).iter().find(|x| x["instance"] == instance)
}

fn separability(r: &Report) -> Result<(), String> {
    // every catalog pair whose Hopf algebra has an integral with eps(t) != 0
    let expected: Vec<String> = catalog::module_algebra_instances()
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|(_, ma)| ma.hopf().separability_witness().is_some())
        .map(|(n, _)| n)
        .collect();
    let checked: Vec<String> = serde_json::from_value(r.conclusion["checked"].clone()).map_err(|e| e.to_string())?;
    if checked != expected || checked.is_empty() {
        return Err(format!("checked {checked:?}, expected {expected:?}"));
    }
    Ok(())
}

fn maschke(r: &Report) -> Result<(), String> {
    let random = r.hypotheses["random_instances"].as_u64().unwrap_or(0);
    if random < 50 {
        return Err(format!("only {random} random module algebras"));
    }
    Ok(())
}

fn commutative_semiprime(r: &Report) -> Result<(), String> {
    // |X| * |S3| for the natural action on three points, |S3|^2 for the grading
    for (name, dim) in [("ma:s3-set", 3 * 6), ("ma:dualgroup-S3", 6 * 6)] {
        let x = row(r, name).ok_or(format!("{name} not covered"))?;
        if x["smash_dim"] != dim || x["smash_semiprime"] != true {
            return Err(format!("{name}: {x}"));
        }
    }
    Ok(())
}

fn negative_controls(r: &Report) -> Result<(), String> {
    for name in ["ma:dual-numbers-trivial", "ma:F2-trivial"] {
        let x = row(r, name).ok_or(format!("{name} missing"))?;
        if x["witness_ideal"].as_array().is_none_or(Vec::is_empty) {
            return Err(format!("{name}: no witness ideal"));
        }
    }
    // the witness is a non-zero nilpotent ideal of the smash product
    for (name, ma, _) in catalog::negative_controls(Field::Rational).map_err(|e| e.to_string())? {
        let s = SmashProduct::build(ma).map_err(|e| e.to_string())?;
        let rad = s.radical().map_err(|e| e.to_string())?;
        let a = s.algebra();
        let two_sided = a.is_ideal(&rad, smashprime::algebra::Side::TwoSided);
        if rad.is_zero() || !two_sided || a.nilpotency_index(&rad).is_none() {
            return Err(format!("{name}: witness is not a nilpotent ideal"));
        }
    }
    Ok(())
}

fn radical_oracle(r: &Report) -> Result<(), String> {
    let n = r.hypotheses["algebras"].as_u64().unwrap_or(0);
    let agree = r.conclusion["agree"].as_u64().unwrap_or(0);
    if n < 100 || agree != n {
        return Err(format!("{agree}/{n} agree"));
    }
    Ok(())
}

fn essentiality(r: &Report) -> Result<(), String> {
    if r.hypotheses["probes"] != 50 {
        return Err("probes != 50".into());
    }
    if r.conclusion["ideals_checked"].as_u64().unwrap_or(0) == 0 {
        return Err("no ideals checked".into());
    }
    Ok(())
}

fn integral_map(r: &Report) -> Result<(), String> {
    let semiprime: Vec<&Value> = rows(r).iter().filter(|x| x["smash_semiprime"] == true).collect();
    if semiprime.is_empty() {
        return Err("no instance with semiprime smash product".into());
    }
    if let Some(x) = semiprime.iter().find(|x| x["injective"] != true) {
        return Err(format!("a -> a#t not injective: {x}"));
    }
    Ok(())
}

fn twists(r: &Report) -> Result<(), String> {
    let certified = r.conclusion["certified"].as_u64().unwrap_or(0);
    let nontrivial = r.conclusion["nontrivial"].as_u64().unwrap_or(0);
    if certified < 1 || nontrivial < 1 || certified != nontrivial + 1 {
        return Err(format!("certified {certified}, nontrivial {nontrivial}"));
    }
    Ok(())
}

fn end_iso(r: &Report) -> Result<(), String> {
    let n = catalog::module_algebra_instances().map_err(|e| e.to_string())?.len();
    if rows(r).len() != n {
        return Err(format!("{} of {n} module algebras covered", rows(r).len()));
    }
    Ok(())
}

fn integrals(r: &Report) -> Result<(), String> {
    let n = catalog::hopf_instances().map_err(|e| e.to_string())?.len();
    if rows(r).len() != n {
        return Err(format!("{} of {n} Hopf algebras covered", rows(r).len()));
    }
    // t = sum of group elements: invariant under every left translation in the table
    for name in ["C2", "C3", "C4", "C2xC2", "S3"] {
        let g = GroupTable::parse(name).map_err(|e| e.to_string())?;
        let h = catalog::group_algebra(Field::Rational, &g).map_err(|e| e.to_string())?;
        let ints = h.integrals(IntegralSide::Left);
        let t = ints.basis_vectors().remove(0);
        let translated_equal = (0..g.order()).all(|x| (0..g.order()).all(|y| t[g.mul(x, y)] == t[y]));
        let eps = h.eps(&t);
        let expected = &t[0] * &Field::Rational.from_i64(g.order() as i64);
        if ints.dim() != 1 || !translated_equal || eps != expected {
            return Err(format!("Q[{name}]: eps(t) = {eps}, expected {expected}"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            number: 1,
            title: "separability idempotent",
            suite: "separability",
            bound: secs(5),
            check: separability,
        },
        Criterion {
            number: 2,
            title: "Maschke-type closure",
            suite: "maschke",
            bound: secs(30),
            check: maschke,
        },
        Criterion {
            number: 3,
            title: "commutative semiprime theorem",
            suite: "commutative-semiprime",
            bound: secs(60),
            check: commutative_semiprime,
        },
        Criterion {
            number: 4,
            title: "negative controls",
            suite: "negative-controls",
            bound: secs(1),
            check: negative_controls,
        },
        Criterion {
            number: 5,
            title: "radical oracle equivalence",
            suite: "radical-oracle",
            bound: secs(60),
            check: radical_oracle,
        },
        Criterion {
            number: 6,
            title: "annihilator vs essentiality",
            suite: "annihilator-essential",
            bound: secs(30),
            check: essentiality,
        },
        Criterion {
            number: 7,
            title: "integral map and t.I",
            suite: "integral-map",
            bound: secs(30),
            check: integral_map,
        },
        Criterion {
            number: 8,
            title: "twist suite",
            suite: "twists",
            bound: secs(120),
            check: twists,
        },
        Criterion {
            number: 9,
            title: "End(A) = invariants",
            suite: "end-iso",
            bound: secs(5),
            check: end_iso,
        },
        Criterion {
            number: 10,
            title: "integrals",
            suite: "integrals",
            bound: secs(1),
            check: integrals,
        },
    ];
    let opts = SuiteOptions::new(SEED);
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let report = suites::run_suite(c.suite, &opts).expect("known suite");
        let elapsed = start.elapsed();
        let verdict = if report.status != Status::Pass {
            Err(format!(
                "suite status {:?}: {:?}",
                report.status,
                report.violations.first()
            ))
        } else if elapsed > c.bound {
            Err(format!(
                "took {:.2}s, bound {}s",
                elapsed.as_secs_f64(),
                c.bound.as_secs()
            ))
        } else {
            (c.check)(&report)
        };
        let (word, detail) = match &verdict {
            Ok(()) => ("PASS", String::new()),
            Err(why) => ("FAIL", format!(" -- {why}")),
        };
        failed += usize::from(verdict.is_err());
        println!(
            "criterion {:>2} {:<32} {} ({:.2}s, bound {}s){}",
            c.number,
            c.title,
            word,
            elapsed.as_secs_f64(),
            c.bound.as_secs(),
            detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
