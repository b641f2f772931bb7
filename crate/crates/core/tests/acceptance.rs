//! Acceptance run: ten criteria, one PASS/FAIL line each. Exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use iquantum_core::idp::{comult_direct, idp_closed, idp_recursive, mult_closed};
use iquantum_core::verify::{run_suite, Suite, VarsigmaMode};
use iquantum_core::Parity;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite(s: Suite, bound: i64, mode: VarsigmaMode) -> Outcome {
    let r = run_suite(s, bound, mode).map_err(|e| e.to_string())?;
    let first = r.failures().next().cloned();
    match first {
        None => Ok(format!("{s} {mode} bound {bound}: {} checks", r.checks.len())),
        Some(f) => Err(format!(
            "{s} {mode} bound {bound}: {} of {} failed, first {} {:?} {}",
            r.failures().count(),
            r.checks.len(),
            f.id,
            f.params,
            f.witness.as_deref().unwrap_or("")
        )),
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for p in parts {
        notes.push(p?);
    }
    Ok(notes.join("; "))
}

fn recursive_equals_closed() -> Outcome {
    for p in Parity::ALL {
        for n in 0..=16 {
            let (r, c) = (
                idp_recursive(p, n).map_err(|e| e.to_string())?,
                idp_closed(p, n).map_err(|e| e.to_string())?,
            );
            if r != c {
                return Err(format!("{p} n={n}: {r:?} != {c:?}"));
            }
        }
    }
    Ok("both families, n <= 16".into())
}

fn products() -> Outcome {
    all(vec![
        suite(Suite::MultEven, 12, VarsigmaMode::Generic),
        suite(Suite::MultOdd, 12, VarsigmaMode::Generic),
        suite(Suite::MultEven, 16, VarsigmaMode::Specialized),
        suite(Suite::MultOdd, 16, VarsigmaMode::Specialized),
    ])
}

fn golden() -> Outcome {
    for (name, p, mult) in GOLDEN {
        let path = golden_path(name);
        let stored = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        if stored != render_golden(p, mult) {
            return Err(format!("{name} does not regenerate bit-exactly"));
        }
    }
    for p in Parity::ALL {
        for a in 1..=3 {
            for (m, n, expected) in displayed_products(p, a) {
                if mult_closed(p, m, n).map_err(|e| e.to_string())? != expected {
                    return Err(format!("{p} B^({m}) B^({n}) at a={a}"));
                }
            }
        }
        for n in [2u32, 3] {
            if displayed_coproduct(p, n) != comult_direct(p, n as i32).map_err(|e| e.to_string())? {
                return Err(format!("{p} coproduct of B^({n})"));
            }
        }
    }
    if displayed_coproduct(Parity::Ev, 2) == displayed_coproduct(Parity::Odd, 2) {
        return Err("degree-two coproducts do not distinguish the families".into());
    }
    Ok(format!(
        "{} golden files, products at a = 1..3, coproducts of B^(2), B^(3)",
        GOLDEN.len()
    ))
}

fn coproducts() -> Outcome {
    all(vec![
        suite(Suite::ComultEven, 8, VarsigmaMode::Generic),
        suite(Suite::ComultOdd, 8, VarsigmaMode::Generic),
    ])
}

fn criteria() -> Vec<Criterion> {
    vec![
        (
            "recursive and closed iota-divided powers agree",
            recursive_equals_closed,
        ),
        ("product expansions match closed coefficients", products),
        ("worked examples reproduced", golden),
        ("coproduct closed form equals direct coproduct", coproducts),
        ("reversed-order coproduct forms", || {
            suite(Suite::FhyForms, 6, VarsigmaMode::Generic)
        }),
        ("coproduct recurrences", || {
            suite(Suite::ProofRecurrences, 8, VarsigmaMode::Generic)
        }),
        ("scalar identities", || {
            suite(Suite::QIdentities, 20, VarsigmaMode::Generic)
        }),
        ("integrality and positivity", || {
            suite(Suite::Positivity, 16, VarsigmaMode::Specialized)
        }),
        ("anti-involution", || suite(Suite::Chi, 10, VarsigmaMode::Specialized)),
        ("Hopf structure", || suite(Suite::PbwCore, 12, VarsigmaMode::Generic)),
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (name, run)) in criteria().into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("criterion {:>2} PASS  {name} ({note}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
