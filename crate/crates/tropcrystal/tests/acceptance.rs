//! One PASS/FAIL line per acceptance criterion, with its tolerance and
//! wall-clock limit. Runs every suite at its default parameters.

use std::process::ExitCode;
use std::time::Instant;

use tropcrystal::suites::{run, Suite, SuiteConfig};

fn tolerance(s: Suite) -> &'static str {
    match s {
        Suite::CatalogVsOracle => "coefficient-exact Laurent and tropical equality",
        Suite::Realizations => "exact isomorphism with wt/ε labels",
        Suite::Ks | Suite::Monomial => "exact",
        Suite::Braid => "zero violations, 10^4 samples per move, 10^3 for ω/ξ",
        Suite::Geometric => "exact rational equality, 50 points",
        Suite::Trails => "exact monomial arithmetic",
        Suite::Connectivity => "zero failures, 10^4 equivariance samples, 200/100 pairs",
    }
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut all = true;
    for s in Suite::ALL {
        let t0 = Instant::now();
        let report = run(s, &cfg);
        let secs = t0.elapsed().as_secs_f64();
        let in_time = s.time_limit().map_or(true, |l| secs < l as f64);
        let limit = s.time_limit().map_or("no limit".to_string(), |l| format!("< {l} s"));
        let (ok, detail) = match &report {
            Ok(r) => {
                let failed: Vec<_> = r.failed().map(|c| format!("{}: {}", c.name, c.detail)).collect();
                let mut d = format!("{}/{} checks", r.checks.len() - failed.len(), r.checks.len());
                if !failed.is_empty() {
                    d += &format!("; failed: {}", failed.join("; "));
                }
                (r.passed(), d)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let pass = ok && in_time;
        all &= pass;
        println!(
            "criterion {} {}: {} [{}; {secs:.1} s, {limit}] {}",
            s.criterion(),
            if pass { "PASS" } else { "FAIL" },
            s.summary(),
            tolerance(s),
            detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
