//! The subcommands. Each returns the text for stdout and an exit code, so
//! the binary and the tests drive the same code.

use std::fmt::Write;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::json;
use tropcrystal_core::cellular::binf::{binf_truncation, Realization};
use tropcrystal_core::cellular::{CellCrystal, Potential};
use tropcrystal_core::connectivity::{connectedness_report, ConnectParams, ConnectReport};
use tropcrystal_core::crystalcore::{generate_component, Closure, CrystalGraph, MonomialCrystal, MonomialElem, Sign};
use tropcrystal_core::grouprep::MatrixRep;
use tropcrystal_core::rootdata::{word_graph_path, CartanData, Family};
use tropcrystal_core::tropsym::{format_linear, Flattening};

use crate::config::{self, CliError, CliResult, EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_OK};
use crate::export;
use crate::suites::{self, Suite, SuiteConfig, SuiteReport};

/// What a command prints and how the process should exit.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn word_str(w: &[usize]) -> String {
    if w.iter().all(|&l| l < 10) {
        join(w, "")
    } else {
        join(w, ",")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// `B(∞)` cut out of the cellular crystal by the potential.
    Potential,
    Polyhedral,
    Tensor,
    /// The cellular crystal with no potential, closed under `ẽ_i` and `f̃_i` from 0.
    Free,
    /// `B(Λ)` as the component of a highest-weight monomial.
    Highest,
}

impl GraphKind {
    pub fn parse(s: &str) -> CliResult<Self> {
        Ok(match s {
            "potential" => GraphKind::Potential,
            "polyhedral" => GraphKind::Polyhedral,
            "tensor" => GraphKind::Tensor,
            "free" => GraphKind::Free,
            "highest-weight" => GraphKind::Highest,
            _ => {
                return Err(CliError::usage(format!(
                    "unknown realization {s:?}; expected potential, polyhedral, tensor, free or highest-weight"
                )))
            }
        })
    }
}

pub struct GraphArgs {
    pub family: Family,
    pub rank: usize,
    pub kind: GraphKind,
    pub depth: usize,
    pub word: Option<String>,
    /// Highest weight `Σ m_i Λ_i` for `highest-weight`.
    pub weight: Option<Vec<i64>>,
    pub dot: Option<PathBuf>,
    pub json: Option<PathBuf>,
}

fn potential_for(c: &CartanData, word: &[usize], canonical: bool) -> CliResult<Potential> {
    if canonical {
        if let Ok(p) = Potential::catalog(c.family(), c.rank()) {
            return Ok(p);
        }
    }
    Ok(Potential::from_oracle(&MatrixRep::defining(c.family(), c.rank())?, word)?)
}

pub fn build_graph(a: &GraphArgs) -> CliResult<(CrystalGraph, String)> {
    let c = config::cartan(a.family, a.rank)?;
    let word = config::longest_word(&c, a.word.as_deref())?;
    let canonical = a.word.is_none();
    let name = format!("{}{} {}", a.family, a.rank, word_str(&word));
    Ok(match a.kind {
        GraphKind::Potential | GraphKind::Polyhedral | GraphKind::Tensor => {
            let r = match a.kind {
                GraphKind::Potential => Realization::Potential,
                GraphKind::Polyhedral => Realization::Polyhedral,
                _ => Realization::Tensor,
            };
            let pot = potential_for(&c, &word, canonical)?;
            let (g, _) = binf_truncation(&c, &pot, r, a.depth)?;
            (g, format!("B(∞) {name} {} depth {}", r.name(), a.depth))
        }
        GraphKind::Free => {
            let cell = CellCrystal::new(c.clone(), word.clone(), None)?;
            let (g, _) = generate_component(&cell, vec![0; word.len()], a.depth, Closure::Both, &|_| true)?;
            (g, format!("free cellular crystal {name} radius {}", a.depth))
        }
        GraphKind::Highest => {
            let m = a.weight.clone().unwrap_or_else(|| {
                let mut v = vec![0; a.rank];
                v[0] = 1;
                v
            });
            if m.len() != a.rank || m.iter().any(|&x| x < 0) {
                return Err(CliError::usage(format!("weight must have {} non-negative entries", a.rank)));
            }
            let order: Vec<usize> = (1..=a.rank).collect();
            let mc = MonomialCrystal { cartan: c.clone(), sign: Sign::cyclic(&order)? };
            let seed = (1..=a.rank).fold(MonomialElem::one(), |acc, i| acc.mul_pow(&MonomialElem::y(0, i), m[i - 1]));
            let (g, _) = generate_component(&mc, seed, a.depth, Closure::Lowering, &|_| true)?;
            (g, format!("B({}) {}{} monomial depth {}", join(&m, ","), a.family, a.rank, a.depth))
        }
    })
}

fn write_file(path: &PathBuf, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

pub fn graph(a: &GraphArgs) -> CliResult<Outcome> {
    let (g, title) = build_graph(a)?;
    g.check_structure()?;
    let mut out = String::new();
    if let Some(p) = &a.dot {
        write_file(p, &export::to_dot(&g, &title))?;
    }
    if let Some(p) = &a.json {
        write_file(p, &export::to_json(&g, &title))?;
    }
    if a.dot.is_none() && a.json.is_none() {
        out = export::to_dot(&g, &title);
    } else {
        writeln!(out, "{title}: {} nodes, {} edges, {} sources", g.len(), g.edge_count(), g.sources().len()).unwrap();
    }
    Ok(Outcome::ok(out))
}

pub struct VerifyArgs {
    /// `None` runs every suite.
    pub suite: Option<Suite>,
    pub config: SuiteConfig,
    pub json: bool,
}

fn suite_exit(reports: &[SuiteReport]) -> i32 {
    if reports.iter().all(SuiteReport::passed) {
        EXIT_OK
    } else if reports.iter().all(|r| r.failed().all(|c| c.inconclusive)) {
        EXIT_BUDGET
    } else {
        EXIT_CHECK_FAILED
    }
}

pub fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let which: Vec<Suite> = match a.suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for s in which {
        reports.push(suites::run(s, &a.config)?);
    }
    let mut out = String::new();
    if a.json {
        out = serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n";
    } else {
        for r in &reports {
            for c in &r.checks {
                let status = if c.passed {
                    "ok"
                } else if c.inconclusive {
                    "INCONCLUSIVE"
                } else {
                    "FAIL"
                };
                writeln!(out, "[{}] {}: {status}  {}", r.suite, c.name, c.detail).unwrap();
            }
            let total = r.checks.len();
            let failed = r.failed().count();
            writeln!(out, "{} {}: {}/{} checks passed", if failed == 0 { "PASS" } else { "FAIL" }, r.suite, total - failed, total)
                .unwrap();
        }
    }
    Ok(Outcome { stdout: out, code: suite_exit(&reports) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Laurent,
    Tropical,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PotentialSource {
    Catalog,
    Oracle,
    LowestTerms,
}

pub struct PotentialArgs {
    pub family: Family,
    pub rank: usize,
    pub word: Option<String>,
    /// `None` picks the closed form where one exists and lowest terms otherwise.
    pub source: Option<PotentialSource>,
    /// `Tropical` always prints JSON.
    pub emit: Emit,
    pub json: bool,
}

#[derive(Serialize)]
struct PotentialDoc {
    schema: &'static str,
    family: String,
    rank: usize,
    word: Vec<usize>,
    source: &'static str,
    partial: bool,
    terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    laurent: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tropical: Option<Vec<Vec<i64>>>,
}

pub fn potential(a: &PotentialArgs) -> CliResult<Outcome> {
    let c = config::cartan(a.family, a.rank)?;
    let word = config::longest_word(&c, a.word.as_deref())?;
    let exceptional = matches!(a.family, Family::E | Family::F);
    let source = a.source.unwrap_or(if exceptional { PotentialSource::LowestTerms } else { PotentialSource::Catalog });
    let pot = match source {
        PotentialSource::Catalog => {
            if a.word.is_some() {
                return Err(CliError::usage("closed forms exist for the canonical word only; use --source oracle"));
            }
            Potential::catalog(a.family, a.rank)?
        }
        PotentialSource::Oracle => Potential::from_oracle(&MatrixRep::defining(a.family, a.rank)?, &word)?,
        PotentialSource::LowestTerms => Potential::lowest_terms(&c, &word)?,
    };
    let fl = Flattening::new(&word);
    let total = pot.laurent();
    let laurent = matches!(a.emit, Emit::Laurent | Emit::Both);
    let tropical = matches!(a.emit, Emit::Tropical | Emit::Both);
    if a.json || a.emit == Emit::Tropical {
        let doc = PotentialDoc {
            schema: "tropcrystal.potential/1",
            family: a.family.to_string(),
            rank: a.rank,
            word: word.clone(),
            source: pot.source.name(),
            partial: pot.is_partial(),
            terms: total.len(),
            laurent: laurent.then(|| pot.minors.iter().map(|m| fl.format(m)).collect()),
            tropical: tropical.then(|| pot.trop.forms().cloned().collect()),
        };
        return Ok(Outcome::ok(serde_json::to_string_pretty(&doc).expect("potential serializes") + "\n"));
    }
    let mut out = String::new();
    writeln!(out, "# {}{} word {} source {}", a.family, a.rank, word_str(&word), pot.source.name()).unwrap();
    if pot.is_partial() {
        writeln!(out, "# partial: lowest-term monomials only, not the full potential").unwrap();
    }
    writeln!(out, "# variables c[s,j]: s-th occurrence of letter j").unwrap();
    if laurent {
        for (j, m) in pot.minors.iter().enumerate() {
            writeln!(out, "minor {}: {}", j + 1, fl.format(m)).unwrap();
        }
        writeln!(out, "terms: {}", total.len()).unwrap();
    }
    if tropical {
        writeln!(out, "# tropical: min over the forms below, x_k = coordinate k of the word").unwrap();
        for f in pot.trop.forms() {
            writeln!(out, "  {}", format_linear(f)).unwrap();
        }
        writeln!(out, "forms: {}", pot.trop.len()).unwrap();
    }
    Ok(Outcome::ok(out))
}

pub struct BraidArgs {
    pub family: Family,
    pub rank: usize,
    pub from: String,
    pub to: String,
    pub point: Vec<i64>,
    pub fixture: Option<PathBuf>,
}

/// Transports a point along the shortest braid-move path and prints each step.
pub fn braid(a: &BraidArgs) -> CliResult<Outcome> {
    let c = config::cartan(a.family, a.rank)?;
    let from = config::word(&a.from)?;
    let to = config::word(&a.to)?;
    c.check_word(&from)?;
    c.check_word(&to)?;
    if a.point.len() != from.len() {
        return Err(tropcrystal_core::Error::Dimension { expected: from.len(), got: a.point.len() }.into());
    }
    let b = match &a.fixture {
        Some(p) => tropcrystal_core::braid::Braid::with_table(c.clone(), config::transitions(p)?),
        None => tropcrystal_core::braid::Braid::new(c.clone())?,
    };
    let path = word_graph_path(&c, &from, &to)?;
    let mut out = String::new();
    let (mut w, mut x) = (from, a.point.clone());
    writeln!(out, "{}  {}", word_str(&w), join(&x, ",")).unwrap();
    for mv in &path {
        let (w2, x2) = b.apply_move(&w, &x, mv)?;
        (w, x) = (w2, x2);
        writeln!(out, "{}  {}  (move at {}, {} → {})", word_str(&w), join(&x, ","), mv.position, mv.from, mv.to).unwrap();
    }
    writeln!(out, "moves: {}", path.len()).unwrap();
    Ok(Outcome::ok(out))
}

pub struct ConnectArgs {
    pub family: Family,
    pub rank: usize,
    pub params: ConnectParams,
    /// Where to write the JSON report.
    pub json: Option<PathBuf>,
}

fn connect_json(r: &ConnectReport) -> serde_json::Value {
    let check = |name: &str, passed: bool, detail: serde_json::Value| json!({ "name": name, "passed": passed, "detail": detail });
    json!({
        "schema": "tropcrystal.connect/1",
        "family": r.family.to_string(),
        "rank": r.rank,
        "params": {
            "box": r.params.radius,
            "pair_box": r.params.pair_radius,
            "pairs": r.params.pairs,
            "pad": r.params.pad,
            "budget": r.params.budget,
            "seed": r.params.seed,
        },
        "checks": [
            check("shift lattice equals root lattice", r.lattice.equal(), json!({
                "roots_in_kernel": r.lattice.roots_in_kernel,
                "transition_det": r.lattice.transition_det.to_string(),
            })),
            check("potential forms are coordinates modulo β", r.condition_h, json!(null)),
            check("constructive paths to 0", r.constructive_failed.is_empty(), json!({
                "ok": r.constructive_ok,
                "failed": r.constructive_failed,
            })),
            check("direct search connects pairs", r.direct_inconclusive == 0, json!({
                "connected": r.direct_connected,
                "inconclusive": r.direct_inconclusive,
                "longest_path": r.longest_path,
            })),
        ],
        "passed": r.passed(),
    })
}

pub fn connect(a: &ConnectArgs) -> CliResult<Outcome> {
    let r = connectedness_report(a.family, a.rank, a.params)?;
    let code = if r.passed() {
        EXIT_OK
    } else if r.lattice.equal() && r.condition_h && r.constructive_failed.is_empty() {
        EXIT_BUDGET
    } else {
        EXIT_CHECK_FAILED
    };
    if let Some(path) = &a.json {
        write_file(path, &(serde_json::to_string_pretty(&connect_json(&r)).expect("report serializes") + "\n"))?;
    }
    let out = {
        let p = &r.params;
        let mut s = String::new();
        writeln!(s, "{}{}: shift lattice equals root lattice: {}", r.family, r.rank, r.lattice.equal()).unwrap();
        writeln!(s, "shift condition on the potential forms: {}", r.condition_h).unwrap();
        writeln!(
            s,
            "constructive paths from [−{0},{0}]^N: {1} ok, {2} failed",
            p.radius,
            r.constructive_ok,
            r.constructive_failed.len()
        )
        .unwrap();
        writeln!(
            s,
            "direct search on {} pairs from [−{1},{1}]^N, pad {2}: {3} connected, {4} inconclusive, longest {5}",
            p.pairs, p.pair_radius, p.pad, r.direct_connected, r.direct_inconclusive, r.longest_path
        )
        .unwrap();
        writeln!(s, "{}", if r.passed() { "PASS" } else if code == EXIT_BUDGET { "INCONCLUSIVE" } else { "FAIL" }).unwrap();
        s
    };
    Ok(Outcome { stdout: out, code })
}
