//! Verification suites, one per acceptance criterion. Each returns a report
//! of named checks; the command line and the acceptance test share them.

use serde::Serialize;
use tropcrystal_core::braid::checks::{
    inverse_violations, morphism_violations, omega_xi_violations, route_disagreements,
};
use tropcrystal_core::braid::{Braid, TransitionTable};
use tropcrystal_core::cellular::binf::triple_check;
use tropcrystal_core::cellular::geometric::{identities_at, matrix_action_holds, top_minors_are_one};
use tropcrystal_core::cellular::ks::{ks_check, psi_graph_check, KsParams, PsiMaps};
use tropcrystal_core::cellular::monomial::monomial_restatement_check;
use tropcrystal_core::cellular::trail::{a_factorization_check, exceptional_identities, lowest_term_present};
use tropcrystal_core::cellular::{catalog_minor, minor_laurent, oracle_minors, CellCrystal, Potential};
use tropcrystal_core::connectivity::{
    condition_h, connectedness_report, coverage_check, h_basis, interior_point, intersection_witness,
    random_h, shift_equivariance_check, ConnectParams,
};
use tropcrystal_core::grouprep::MatrixRep;
use tropcrystal_core::rootdata::{canonical_longest_word, CartanData, Family};
use tropcrystal_core::{sample, Error};

pub const REPORT_SCHEMA: &str = "tropcrystal.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    CatalogVsOracle,
    Realizations,
    Ks,
    Braid,
    Geometric,
    Trails,
    Connectivity,
    Monomial,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::CatalogVsOracle,
        Suite::Realizations,
        Suite::Ks,
        Suite::Braid,
        Suite::Geometric,
        Suite::Trails,
        Suite::Connectivity,
        Suite::Monomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CatalogVsOracle => "catalog-vs-oracle",
            Suite::Realizations => "realizations",
            Suite::Ks => "ks",
            Suite::Braid => "braid",
            Suite::Geometric => "geometric",
            Suite::Trails => "trails",
            Suite::Connectivity => "connectivity",
            Suite::Monomial => "monomial",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Acceptance criterion number.
    pub fn criterion(self) -> u8 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u8 + 1
    }

    pub fn summary(self) -> &'static str {
        match self {
            Suite::CatalogVsOracle => "closed-form potentials equal the matrix-model minors",
            Suite::Realizations => "potential, polyhedral and tensor B(∞) truncations isomorphic",
            Suite::Ks => "B(∞) characterization and normality conditions",
            Suite::Braid => "braid isomorphisms: inverses, morphisms, route independence, ω/ξ",
            Suite::Geometric => "geometric crystal identities at random rational points",
            Suite::Trails => "lowest terms, A-factorizations and exceptional identities",
            Suite::Connectivity => "shift lattice, shift condition, witnesses, coverage, connectedness",
            Suite::Monomial => "minors rebuilt from monomial-crystal orbits",
        }
    }

    /// Wall-clock limit in seconds, where the criterion sets one.
    pub fn time_limit(self) -> Option<u64> {
        match self {
            Suite::CatalogVsOracle | Suite::Trails => Some(60),
            Suite::Realizations => Some(120),
            Suite::Connectivity => Some(300),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Set when a search ran out of budget: neither pass nor disproof.
    pub inconclusive: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed, inconclusive: false, detail: detail.into() }
    }

    fn count(name: impl Into<String>, violations: usize, of: usize) -> Self {
        Self::new(name, violations == 0, format!("{violations} violations in {of}"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: &'static str,
    pub criterion: u8,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn inconclusive(&self) -> bool {
        self.checks.iter().any(|c| c.inconclusive)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Overrides for a suite run; `None` keeps the acceptance defaults.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub only: Option<(Family, usize)>,
    pub depth: Option<usize>,
    pub box_radius: Option<i64>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub transitions: Option<TransitionTable>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            only: None,
            depth: None,
            box_radius: None,
            samples: None,
            seed: sample::DEFAULT_SEED,
            transitions: None,
        }
    }
}

impl SuiteConfig {
    fn types(&self, defaults: &[(Family, usize)]) -> Vec<(Family, usize)> {
        match self.only {
            Some(t) => vec![t],
            None => defaults.to_vec(),
        }
    }

    fn braid(&self, cartan: CartanData) -> Result<Braid, Error> {
        match &self.transitions {
            Some(t) => Ok(Braid::with_table(cartan, t.clone())),
            None => Braid::new(cartan),
        }
    }
}

const FIVE: [(Family, usize); 5] = [(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::G, 2), (Family::A, 3)];

fn tag(f: Family, n: usize) -> String {
    format!("{f}{n}")
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    let checks = match suite {
        Suite::CatalogVsOracle => catalog_vs_oracle(cfg)?,
        Suite::Realizations => realizations(cfg)?,
        Suite::Ks => ks(cfg)?,
        Suite::Braid => braid(cfg)?,
        Suite::Geometric => geometric(cfg)?,
        Suite::Trails => trails(cfg)?,
        Suite::Connectivity => connectivity(cfg)?,
        Suite::Monomial => monomial(cfg)?,
    };
    Ok(SuiteReport { schema: REPORT_SCHEMA, suite: suite.name(), criterion: suite.criterion(), seed: cfg.seed, checks })
}

fn catalog_vs_oracle(cfg: &SuiteConfig) -> Result<Vec<CheckResult>, Error> {
    let defaults = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
    ];
    let mut out = Vec::new();
    for (f, n) in cfg.types(&defaults) {
        let rep = MatrixRep::defining(f, n)?;
        let word = canonical_longest_word(f, n)?;
        let js = oracle_minors(&rep);
        for &j in &js {
            let m = minor_laurent(&rep, &word, j)?;
            let c = catalog_minor(f, n, j)?;
            out.push(CheckResult::new(format!("{} Δ_{j} closed form = minor", tag(f, n)), m == c, format!("{} terms", c.len())));
            out.push(CheckResult::new(
                format!("{} Δ_{j} tropical forms agree", tag(f, n)),
                m.tropicalize()? == c.tropicalize()?,
                "",
            ));
        }
        if js.len() == n {
            let a = Potential::from_oracle(&rep, &word)?;
            let b = Potential::catalog(f, n)?;
            out.push(CheckResult::new(
                format!("{} full potential agrees", tag(f, n)),
                a.laurent() == b.laurent() && a.trop == b.trop,
                format!("{} forms", b.trop.len()),
            ));
        }
    }
    Ok(out)
}

fn realizations(cfg: &SuiteConfig) -> Result<Vec<CheckResult>, Error> {
    let mut out = Vec::new();
    for (f, n) in cfg.types(&FIVE) {
        let depth = cfg.depth.unwrap_or(if n >= 3 { 5 } else { 6 });
        let c = CartanData::new(f, n)?;
        let pot = Potential::catalog(f, n)?;
        let r = triple_check(&c, &pot, depth)?;
        out.push(CheckResult::new(
            format!("{} three truncations isomorphic at depth {depth}", tag(f, n)),
            r.passed(),
            format!("sizes {:?}, isomorphic {:?}, same points {}", r.sizes, r.isomorphic, r.same_points),
        ));
    }
    Ok(out)
}

fn ks(cfg: &SuiteConfig) -> Result<Vec<CheckResult>, Error> {
    let params = KsParams { depth: cfg.depth.unwrap_or(5), box_radius: cfg.box_radius.unwrap_or(4) };
    let mut out = Vec::new();
    for (f, n) in cfg.types(&FIVE) {
        let c = CartanData::new(f, n)?;
        let pot = Potential::catalog(f, n)?;
        let braid = cfg.braid(c.clone())?;
        for ch in ks_check(&c, &pot, &braid, params)?.checks {
            out.push(CheckResult::new(format!("{} {}", tag(f, n), ch.name), ch.passed, ch.detail));
        }
        let b = CellCrystal::binf(c.clone(), &pot)?;
        let psi = PsiMaps::new(&braid, &pot.word)?;
        let bad: usize = (1..=n).map(|i| psi_graph_check(&b, &psi, params.depth, i)).sum::<Result<usize, _>>()?;
        out.push(CheckResult::count(format!("{} Ψ_i preserves edges", tag(f, n)), bad, n));
    }
    Ok(out)
}

fn braid(cfg: &SuiteConfig) -> Result<Vec<CheckResult>, Error> {
    let samples = cfg.samples.unwrap_or(10_000);
    let seed = cfg.seed;
    let moves: [(Family, usize, &[usize], &[usize]); 8] = [
        (Family::A, 3, &[1, 3], &[3, 1]),
        (Family::A, 2, &[1, 2, 1], &[2, 1, 2]),
        (Family::A, 2, &[2, 1, 2], &[1, 2, 1]),
        (Family::C, 2, &[1, 2, 1, 2], &[2, 1, 2, 1]),
        (Family::C, 2, &[2, 1, 2, 1], &[1, 2, 1, 2]),
        (Family::B, 2, &[1, 2, 1, 2], &[2, 1, 2, 1]),
        (Family::G, 2, &[1, 2, 1, 2, 1, 2], &[2, 1, 2, 1, 2, 1]),
        (Family::G, 2, &[2, 1, 2, 1, 2, 1], &[1, 2, 1, 2, 1, 2]),
    ];
    let keep = |f: Family, n: usize| cfg.only.map_or(true, |t| t == (f, n));
    let mut out = Vec::new();
    for (f, n, from, to) in moves.iter().copied().filter(|m| keep(m.0, m.1)) {
        let b = cfg.braid(CartanData::new(f, n)?)?;
        let name = format!("{} {:?}→{:?}", tag(f, n), from, to);
        out.push(CheckResult::count(format!("{name} inverse"), inverse_violations(&b, from, to, samples, seed)?, samples));
        let m = (samples / 3).max(1);
        out.push(CheckResult::count(format!("{name} crystal morphism"), morphism_violations(&b, from, to, m, seed)?, m));
    }
    for (f, n, k) in [(Family::A, 3, 300), (Family::C, 2, 1000), (Family::C, 3, 100)] {
        if !keep(f, n) {
            continue;
        }
        let b = cfg.braid(CartanData::new(f, n)?)?;
        let word = canonical_longest_word(f, n)?;
        out.push(CheckResult::count(
            format!("{} endpoints independent of route", tag(f, n)),
            route_disagreements(&b, &word, k, seed)?,
            k,
        ));
    }
    for (f, n) in [(Family::A, 3), (Family::C, 3)] {
        if !keep(f, n) {
            continue;
        }
        let b = cfg.braid(CartanData::new(f, n)?)?;
        let word = canonical_longest_word(f, n)?;
        let k = cfg.samples.map_or(1000, |s| s.min(1000));
        out.push(CheckResult::count(
            format!("{} ω_i, ξ_i independent of target word", tag(f, n)),
            omega_xi_violations(&b, &word, k, seed)?,
            k,
        ));
    }
    if out.is_empty() {
        return Err(Error::Unsupported(format!("no braid checks for {:?}", cfg.only)));
    }
    Ok(out)
}

fn geometric(cfg: &SuiteConfig) -> Result<Vec<CheckResult>, Error> {
    let points = cfg.samples.unwrap_or(50);
    let mut r = sample::rng(cfg.seed);
    let mut out = Vec::new();
    for (f, n) in cfg.types(&FIVE) {
        let c = CartanData::new(f, n)?;
        let word = canonical_longest_word(f, n)?;
        let phi = Potential::catalog(f, n)?.laurent();
        let rep = MatrixRep::defining(f, n)?;
        out.push(CheckResult::new(format!("{} Δ_(w0Λ_i, Λ_i) = 1", tag(f, n)), top_minors_are_one(&rep, &word)?, ""));
        let mut bad = Vec::new();
        let mut matrix_bad = 0;
        for _ in 0..points {
            let x = sample::positive_point(&mut r, word.len());
            let (a, b) = (sample::positive_rational(&mut r), sample::positive_rational(&mut r));
            bad.extend(identities_at(&c, &word, Some(&phi), &x, &a, &b));
            matrix_bad += (1..=n).filter(|&i| !matrix_action_holds(&rep, &word, &x, i, &a)).count();
        }
        bad.sort();
        bad.dedup();
        out.push(CheckResult::new(
            format!("{} action, ε/γ axioms, Verma relations, half-potential law", tag(f, n)),
            bad.is_empty(),
            if bad.is_empty() { format!("{points} points") } else { bad.join("; ") },
        ));
        out.push(CheckResult::count(format!("{} e_i^c as conjugation by x_i", tag(f, n)), matrix_bad, points * n));
    }
    Ok(out)
}

fn trails(cfg: &SuiteConfig) -> Result<Vec<CheckResult>, Error> {
    let defaults = [(Family::A, 2), (Family::A, 3), (Family::C, 2), (Family::G, 2)];
    let mut out = Vec::new();
    let exceptional = matches!(cfg.only, Some((Family::E | Family::F, _)));
    if !exceptional {
        for (f, n) in cfg.types(&defaults) {
            let c = CartanData::new(f, n)?;
            let word = canonical_longest_word(f, n)?;
            for j in 1..=n {
                let m = catalog_minor(f, n, j)?;
                out.push(CheckResult::new(
                    format!("{} Δ_{j} contains its lowest term", tag(f, n)),
                    lowest_term_present(&c, &word, j, &m)?,
                    "",
                ));
                let rep = a_factorization_check(&c, &word, j, &m)?;
                out.push(CheckResult::new(
                    format!("{} Δ_{j} monomials factor through A-monomials", tag(f, n)),
                    rep.passed(),
                    format!("{} monomials, failures {:?}", rep.monomials, rep.failures),
                ));
            }
        }
    }
    if cfg.only.is_none() || exceptional {
        for ch in exceptional_identities()? {
            if cfg.only.map_or(true, |t| t == (ch.family, ch.rank)) {
                out.push(CheckResult::new(format!("{} {}", tag(ch.family, ch.rank), ch.what), ch.ok, ""));
            }
        }
    }
    Ok(out)
}

fn all_types() -> Vec<(Family, usize)> {
    let mut v: Vec<_> = (1..=8).map(|n| (Family::A, n)).collect();
    for n in 2..=8 {
        v.push((Family::B, n));
        v.push((Family::C, n));
    }
    v.extend((4..=8).map(|n| (Family::D, n)));
    v.extend([(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]);
    v
}

fn connectivity(cfg: &SuiteConfig) -> Result<Vec<CheckResult>, Error> {
    let mut out = Vec::new();
    let seed = cfg.seed;
    let samples = cfg.samples.unwrap_or(10_000);
    for (f, n) in cfg.types(&all_types()) {
        let c = CartanData::new(f, n)?;
        let w = canonical_longest_word(f, n)?;
        let (ok, detail) = match h_basis(&c, &w) {
            Ok(lat) => (lat.equality().equal(), format!("{:?}", lat.equality())),
            Err(e) => (false, e.to_string()),
        };
        out.push(CheckResult::new(format!("{} shift lattice: kernel = root lattice", tag(f, n)), ok, detail));
    }
    let equivariance = [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::B, 3), (Family::D, 4), (Family::F, 4)];
    for (f, n) in cfg.types(&equivariance) {
        let c = CartanData::new(f, n)?;
        let lat = h_basis(&c, &canonical_longest_word(f, n)?)?;
        out.push(CheckResult::count(
            format!("{} shifts commute with ẽ_i, f̃_i", tag(f, n)),
            shift_equivariance_check(&c, &lat, samples, seed),
            samples,
        ));
    }
    if matches!(cfg.only, Some((Family::E | Family::F, _))) {
        return Ok(out);
    }
    let mut small: Vec<_> = (1..=4).map(|n| (Family::A, n)).collect();
    small.extend([(Family::B, 2), (Family::B, 3), (Family::B, 4), (Family::C, 2), (Family::C, 3), (Family::C, 4)]);
    small.extend([(Family::D, 4), (Family::G, 2)]);
    for (f, n) in cfg.types(&small) {
        let c = CartanData::new(f, n)?;
        let pot = Potential::catalog(f, n)?;
        let lat = h_basis(&c, &pot.word)?;
        let ch = condition_h(&lat, pot.trop.forms());
        out.push(CheckResult::new(
            format!("{} every potential form is a coordinate modulo β", tag(f, n)),
            ch.holds(),
            format!("{} forms, failures {:?}", ch.records.len(), ch.failures()),
        ));
    }
    let rank2 = [(Family::A, 2, 5), (Family::B, 2, 3), (Family::C, 2, 3), (Family::G, 2, 3)];
    for (f, n, r) in rank2.iter().copied().filter(|t| cfg.only.map_or(true, |o| o == (t.0, t.1))) {
        let c = CartanData::new(f, n)?;
        let pot = Potential::catalog(f, n)?;
        let lat = h_basis(&c, &pot.word)?;
        let x = interior_point(&c, &pot, 16)?;
        let mut rng = sample::rng(seed);
        let bad = (0..100).filter(|_| intersection_witness(&pot, &x, &lat.vector(&random_h(&mut rng, n))).is_err()).count();
        out.push(CheckResult::count(format!("{} witnesses in B(∞) ∩ (B(∞)+H)", tag(f, n)), bad, 100));
        let r = cfg.box_radius.unwrap_or(r);
        let cov = coverage_check(&lat, &pot, r);
        out.push(CheckResult::new(
            format!("{} box [−{r},{r}]^N covered by translates", tag(f, n)),
            cov.uncovered.is_empty(),
            format!("{} points, {} uncovered, max h {}", cov.points, cov.uncovered.len(), cov.max_h),
        ));
    }
    // G2 pairs come from a smaller box: exhaustive search cannot reach
    // its long paths at radius 3
    let pairs = [(Family::A, 2, 4, 4, 3, 200), (Family::C, 2, 3, 3, 3, 100), (Family::G, 2, 3, 1, 6, 100)];
    for (f, n, r, pr, pad, k) in pairs.iter().copied().filter(|t| cfg.only.map_or(true, |o| o == (t.0, t.1))) {
        let p = ConnectParams { radius: r, pair_radius: pr, pad, pairs: k, seed, ..ConnectParams::default() };
        let rep = connectedness_report(f, n, p)?;
        out.push(CheckResult::new(
            format!("{} constructive paths to 0 through shifted copies", tag(f, n)),
            rep.constructive_failed.is_empty(),
            format!("{}/{} points", rep.constructive_ok, 2 * k),
        ));
        let mut direct = CheckResult::new(
            format!("{} direct search connects random pairs", tag(f, n)),
            rep.direct_inconclusive == 0,
            format!(
                "{}/{k} connected in [−{pr},{pr}]^N with pad {pad}, {} inconclusive, longest {}",
                rep.direct_connected, rep.direct_inconclusive, rep.longest_path
            ),
        );
        direct.inconclusive = rep.direct_inconclusive > 0;
        out.push(direct);
    }
    Ok(out)
}

fn monomial(cfg: &SuiteConfig) -> Result<Vec<CheckResult>, Error> {
    let defaults = [
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
    ];
    let mut out = Vec::new();
    for (f, n) in cfg.types(&defaults) {
        for k in 1..=n {
            out.push(CheckResult::new(
                format!("{} Δ_{k} from monomial orbits", tag(f, n)),
                monomial_restatement_check(f, n, k)?,
                "",
            ));
        }
    }
    Ok(out)
}
