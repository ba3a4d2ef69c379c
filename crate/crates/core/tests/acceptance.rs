//! Acceptance gate: every criterion at its full size, one line each.
//! Run with `cargo test -p ncfit-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ncfit::suite::{run_one, SuiteConfig};

const SEED: u64 = 20240601;

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    limit: Duration,
}

const fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "commutative oracle equivalence (200 cases)", suite: "oracle", limit: minutes(5) },
    Criterion { id: 2, title: "reduced-norm properties (500 + 200 + 200 cases)", suite: "nrd-props", limit: minutes(3) },
    Criterion { id: 3, title: "adjoint identity (200 cases)", suite: "adjoint", limit: minutes(3) },
    Criterion { id: 4, title: "pairing oracle, scaling, normalization (300 + 100 + 100)", suite: "pairing", limit: minutes(5) },
    Criterion { id: 5, title: "epsilon pairing identity and vanishing (100 + 100)", suite: "epsilon", limit: minutes(5) },
    Criterion { id: 6, title: "theta_b round trip and bijectivity grid (100 + grid)", suite: "theta", limit: minutes(2) },
    Criterion { id: 7, title: "determinant-functor signs and section independence (100 + 100)", suite: "detfun", limit: minutes(2) },
    Criterion { id: 8, title: "annihilation by |G| (100 cases)", suite: "annihilation", limit: minutes(5) },
    Criterion { id: 9, title: "cyclotomic distribution relation f <= 30, l <= 13", suite: "cyclo", limit: minutes(2) },
    Criterion { id: 10, title: "xi sanity", suite: "xi", limit: minutes(5) },
];

fn main() -> ExitCode {
    let cfg = SuiteConfig::new(SEED);
    let mut all = true;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = run_one(c.suite, &cfg);
        let elapsed = start.elapsed();
        let (ok, detail) = match &outcome {
            Ok(r) => {
                let counts: Vec<String> = r.checks.iter().map(|k| format!("{} {}/{}", k.name, k.passed, k.cases)).collect();
                (r.pass, counts.join(", "))
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= c.limit;
        let pass = ok && in_time;
        all &= pass;
        println!(
            "criterion {:>2} {}: {} [{}] in {:.1}s (limit {}s)",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            detail,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        if let Ok(r) = &outcome {
            for k in r.checks.iter().filter(|k| k.failure.is_some()) {
                println!("    {}: {}", k.name, k.failure.as_ref().unwrap());
            }
        }
    }
    println!("acceptance: {}", if all { "PASS" } else { "FAIL" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
