//! Braid-type isomorphisms between cellular crystals of different reduced
//! words, path transport and the maps `ω_i`, `ξ^{(i)}`.
//!
//! A cellular point `x = (x_1, …, x_N)` of a word `i_1 ⋯ i_N` corresponds to
//! the tensor `(−x_N)_{i_N} ⊗ ⋯ ⊗ (−x_1)_{i_1}`. Every move is carried out on
//! that tensor side; [`cell_to_tensor`] and [`tensor_to_cell`] are the only
//! conversion.
//!
//! The rank-2 moves of length 4 and 6 have no closed form here. Their
//! transition maps are obtained from [`chamber_solve`] and stored as text in
//! `fixtures/rank2_transitions.txt`; a test re-derives them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::grouprep::{chamber_solve, ChamberSolution, MatrixRep};
use crate::rootdata::{apply_move, word_graph_search, BraidMove, CartanData, Family};
use crate::tropsym::{LaurentPoly, RationalPair, TropForm};

const FIXTURE: &str = include_str!("../fixtures/rank2_transitions.txt");

/// `(x_1, …, x_N) ↦ (−x_N, …, −x_1)`.
pub fn cell_to_tensor(x: &[i64]) -> Vec<i64> {
    x.iter().rev().map(|v| -v).collect()
}

/// Inverse of [`cell_to_tensor`].
pub fn tensor_to_cell(t: &[i64]) -> Vec<i64> {
    cell_to_tensor(t)
}

/// `(x)_i ⊗ (y)_j ↦ (y)_j ⊗ (x)_i` for commuting `i, j`.
pub fn phi0(t: [i64; 2]) -> [i64; 2] {
    [t[1], t[0]]
}

/// `(x)_i ⊗ (y)_j ⊗ (z)_i ↦ (max(z, y−x))_j ⊗ (x+z)_i ⊗ (−max(−x, z−y))_j`.
pub fn phi1(t: [i64; 3]) -> [i64; 3] {
    let [x, y, z] = t;
    [z.max(y - x), x + z, -((-x).max(z - y))]
}

/// A transition `Θ⁻_from(c) = Θ⁻_to(d(c))` tropicalized:
/// `d̃_k(x) = TR(num_k)(x) − TR(den_k)(x)` on cellular coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropTransition {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub num: Vec<TropForm>,
    pub den: Vec<TropForm>,
}

impl TropTransition {
    pub fn from_solution(sol: &ChamberSolution) -> Result<Self> {
        let num = sol.d.iter().map(|r| r.num.tropicalize()).collect::<Result<Vec<_>>>()?;
        let den = sol.d.iter().map(|r| r.den.tropicalize()).collect::<Result<Vec<_>>>()?;
        Ok(TropTransition { from: sol.from.clone(), to: sol.to.clone(), num, den })
    }

    pub fn len(&self) -> usize {
        self.from.len()
    }

    pub fn is_empty(&self) -> bool {
        self.from.is_empty()
    }

    /// On cellular coordinates of the window.
    pub fn apply_cell(&self, x: &[i64]) -> Vec<i64> {
        self.num.iter().zip(&self.den).map(|(n, d)| n.eval(x) - d.eval(x)).collect()
    }

    /// On the tensor side `(−c̃_L) ⊗ ⋯ ⊗ (−c̃_1) ↦ (−d̃_L) ⊗ ⋯ ⊗ (−d̃_1)`.
    pub fn apply_tensor(&self, t: &[i64]) -> Vec<i64> {
        let c = cell_to_tensor(t);
        cell_to_tensor(&self.apply_cell(&c))
    }

    /// Human-readable `y_k = …` lines.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (k, (n, d)) in self.num.iter().zip(&self.den).enumerate() {
            let _ = writeln!(out, "y{} = {} - {}", k + 1, n.pretty(), d.pretty());
        }
        out
    }
}

/// Serializes chamber solutions in the fixture format.
pub fn format_fixture(sols: &[ChamberSolution]) -> String {
    let mut out = String::from(
        "# Rank-2 transition maps d(c) with Θ⁻_from(c) = Θ⁻_to(d).\n\
         # Generated by chamber_solve; regenerate with TROPCRYSTAL_BLESS=1.\n",
    );
    for sol in sols {
        let fam = family_of_model(sol.from.len());
        let w = |v: &[usize]| v.iter().map(|d| format!("{d}")).collect::<String>();
        let _ = writeln!(out, "\n[{} {} {}]", fam.letter(), w(&sol.from), w(&sol.to));
        for (k, r) in sol.d.iter().enumerate() {
            let _ = writeln!(out, "num{} = {}", k + 1, r.num);
            let _ = writeln!(out, "den{} = {}", k + 1, r.den);
        }
    }
    out
}

fn family_of_model(len: usize) -> Family {
    match len {
        3 => Family::A,
        4 => Family::C,
        _ => Family::G,
    }
}

fn parse_digits(s: &str) -> Result<Vec<usize>> {
    s.chars()
        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad word {s}"))))
        .collect()
}

/// Reads the fixture format back.
pub fn parse_fixture(text: &str) -> Result<Vec<ChamberSolution>> {
    let mut out: Vec<ChamberSolution> = Vec::new();
    let mut pending: Vec<(Option<LaurentPoly>, Option<LaurentPoly>)> = Vec::new();
    let flush = |out: &mut Vec<ChamberSolution>, pending: &mut Vec<(Option<LaurentPoly>, Option<LaurentPoly>)>| -> Result<()> {
        if let Some(sol) = out.last_mut() {
            if sol.d.is_empty() {
                for (k, (n, d)) in pending.drain(..).enumerate() {
                    match (n, d) {
                        (Some(num), Some(den)) => sol.d.push(RationalPair { num, den }),
                        _ => return Err(Error::Parse(format!("incomplete d{}", k + 1))),
                    }
                }
                if sol.d.len() != sol.from.len() {
                    return Err(Error::Parse(format!("expected {} maps for {:?}", sol.from.len(), sol.from)));
                }
            }
        }
        Ok(())
    };
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(head) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            flush(&mut out, &mut pending)?;
            let parts: Vec<&str> = head.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("bad header [{head}]")));
            }
            let from = parse_digits(parts[1])?;
            let to = parse_digits(parts[2])?;
            pending = (0..from.len()).map(|_| (None, None)).collect();
            out.push(ChamberSolution { from, to, d: Vec::new() });
            continue;
        }
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| Error::Parse(format!("bad line {line}")))?;
        let lhs = lhs.trim();
        let nvars = out.last().map(|s| s.from.len()).ok_or_else(|| Error::Parse("data before header".into()))?;
        let (is_num, idx) = if let Some(k) = lhs.strip_prefix("num") {
            (true, k)
        } else if let Some(k) = lhs.strip_prefix("den") {
            (false, k)
        } else {
            return Err(Error::Parse(format!("bad key {lhs}")));
        };
        let k: usize = idx.parse().map_err(|_| Error::Parse(format!("bad key {lhs}")))?;
        let slot = pending.get_mut(k.wrapping_sub(1)).ok_or_else(|| Error::Parse(format!("bad index {lhs}")))?;
        let p = LaurentPoly::parse(rhs.trim(), nvars)?;
        if is_num {
            slot.0 = Some(p);
        } else {
            slot.1 = Some(p);
        }
    }
    flush(&mut out, &mut pending)?;
    Ok(out)
}

/// The model moves: A2 `121→212`, C2 both directions, G2 both directions.
pub fn model_moves() -> [(Family, [usize; 6], usize); 5] {
    [
        (Family::A, [1, 2, 1, 0, 0, 0], 3),
        (Family::C, [1, 2, 1, 2, 0, 0], 4),
        (Family::C, [2, 1, 2, 1, 0, 0], 4),
        (Family::G, [1, 2, 1, 2, 1, 2], 6),
        (Family::G, [2, 1, 2, 1, 2, 1], 6),
    ]
}

/// Derives every model transition with the matrix oracle.
pub fn derive_all(checks: usize, seed: u64) -> Result<Vec<ChamberSolution>> {
    let mut out = Vec::new();
    for (fam, w, len) in model_moves() {
        let rep = MatrixRep::defining(fam, 2)?;
        let from = &w[..len];
        let to: Vec<usize> = from.iter().map(|&i| 3 - i).collect();
        out.push(chamber_solve(&rep, from, &to, checks, seed)?);
    }
    Ok(out)
}

/// Cached tropical transitions, keyed by model family and source word.
#[derive(Clone, Debug)]
pub struct TransitionTable {
    entries: BTreeMap<(char, Vec<usize>), TropTransition>,
    solutions: Vec<ChamberSolution>,
}

impl TransitionTable {
    /// From the stored fixture.
    pub fn load() -> Result<Self> {
        Self::from_solutions(parse_fixture(FIXTURE)?)
    }

    pub fn from_solutions(solutions: Vec<ChamberSolution>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for sol in &solutions {
            let fam = family_of_model(sol.from.len());
            entries.insert((fam.letter(), sol.from.clone()), TropTransition::from_solution(sol)?);
        }
        Ok(TransitionTable { entries, solutions })
    }

    pub fn solutions(&self) -> &[ChamberSolution] {
        &self.solutions
    }

    pub fn get(&self, fam: Family, from: &[usize]) -> Option<&TropTransition> {
        self.entries.get(&(fam.letter(), from.to_vec()))
    }
}

/// Which map a move uses, with the model word letters when derived.
enum Local<'a> {
    Swap,
    Phi1,
    Derived(&'a TropTransition),
}

/// Braid transport on the cellular crystals of one Cartan datum.
#[derive(Clone, Debug)]
pub struct Braid {
    pub cartan: CartanData,
    table: TransitionTable,
}

/// Which end of the word `ω_i` reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    First,
    Last,
}

impl Braid {
    pub fn new(cartan: CartanData) -> Result<Self> {
        Ok(Braid { cartan, table: TransitionTable::load()? })
    }

    pub fn with_table(cartan: CartanData, table: TransitionTable) -> Self {
        Braid { cartan, table }
    }

    pub fn table(&self) -> &TransitionTable {
        &self.table
    }

    fn local(&self, mv: &BraidMove) -> Result<Local<'_>> {
        let (i, j) = (mv.from, mv.to);
        match mv.class {
            0 => Ok(Local::Swap),
            1 => Ok(Local::Phi1),
            2 | 3 => {
                let (fam, long) = if mv.class == 2 { (Family::C, -2) } else { (Family::G, -3) };
                // model letter of `i`: in C2 a_12 = −2, in G2 a_21 = −3
                let i_is_l = self.cartan.a(i, j) == long;
                let model_i = match (fam, i_is_l) {
                    (Family::C, true) | (Family::G, false) => 1,
                    _ => 2,
                };
                let from: Vec<usize> = (0..mv.len()).map(|t| if t % 2 == 0 { model_i } else { 3 - model_i }).collect();
                self.table
                    .get(fam, &from)
                    .map(Local::Derived)
                    .ok_or_else(|| Error::Unsupported(format!("no stored transition for {fam}2 {from:?}")))
            }
            _ => Err(Error::InvalidMove(format!("class {}", mv.class))),
        }
    }

    /// The tensor-side map of one move on its window, given in tensor order.
    pub fn tensor_move(&self, mv: &BraidMove, t: &[i64]) -> Result<Vec<i64>> {
        if t.len() != mv.len() {
            return Err(Error::Dimension { expected: mv.len(), got: t.len() });
        }
        Ok(match self.local(mv)? {
            Local::Swap => phi0([t[0], t[1]]).to_vec(),
            Local::Phi1 => phi1([t[0], t[1], t[2]]).to_vec(),
            Local::Derived(tr) => tr.apply_tensor(t),
        })
    }

    /// One move on a cellular point; returns the new point and word.
    pub fn apply_move(&self, word: &[usize], x: &[i64], mv: &BraidMove) -> Result<(Vec<usize>, Vec<i64>)> {
        if word.len() != x.len() {
            return Err(Error::Dimension { expected: word.len(), got: x.len() });
        }
        let new_word = apply_move(&self.cartan, word, mv)?;
        let (lo, hi) = (mv.position - 1, mv.position - 1 + mv.len());
        let t = cell_to_tensor(&x[lo..hi]);
        let y = tensor_to_cell(&self.tensor_move(mv, &t)?);
        let mut out = x.to_vec();
        out[lo..hi].copy_from_slice(&y);
        Ok((new_word, out))
    }

    pub fn apply_path(&self, word: &[usize], x: &[i64], path: &[BraidMove]) -> Result<(Vec<usize>, Vec<i64>)> {
        let mut w = word.to_vec();
        let mut p = x.to_vec();
        for mv in path {
            (w, p) = self.apply_move(&w, &p, mv)?;
        }
        Ok((w, p))
    }

    /// Undoes [`Braid::apply_path`].
    pub fn apply_path_inverse(&self, word: &[usize], x: &[i64], path: &[BraidMove]) -> Result<(Vec<usize>, Vec<i64>)> {
        let inv: Vec<BraidMove> = path.iter().rev().map(BraidMove::inverse).collect();
        self.apply_path(word, x, &inv)
    }

    /// A nearest word starting (ending) with `i`, and a path to it.
    pub fn path_to_end(&self, word: &[usize], i: usize, end: End) -> Result<(Vec<usize>, Vec<BraidMove>)> {
        self.cartan.check_letter(i)?;
        word_graph_search(&self.cartan, word, &|w: &[usize]| match end {
            End::First => w.first() == Some(&i),
            End::Last => w.last() == Some(&i),
        })
        .map_err(|e| match e {
            Error::NotEquivalent => Error::Invalid(format!("no reduced word of this element has {i} at that end")),
            e => e,
        })
    }

    /// `ω_i` (or `ω'_i`): the end coordinate after transport to a word with `i` at that end.
    pub fn omega(&self, word: &[usize], x: &[i64], i: usize, end: End) -> Result<i64> {
        let (_, path) = self.path_to_end(word, i, end)?;
        self.omega_via(word, x, &path, end)
    }

    /// `ω` along a given path.
    pub fn omega_via(&self, word: &[usize], x: &[i64], path: &[BraidMove], end: End) -> Result<i64> {
        let (_, y) = self.apply_path(word, x, path)?;
        Ok(match end {
            End::First => y[0],
            End::Last => y[y.len() - 1],
        })
    }

    /// `ξ^{(i)}`: transport to an `i`-leading word, zero the first coordinate, transport back.
    pub fn xi(&self, word: &[usize], x: &[i64], i: usize) -> Result<Vec<i64>> {
        let (_, path) = self.path_to_end(word, i, End::First)?;
        self.xi_via(word, x, &path)
    }

    pub fn xi_via(&self, word: &[usize], x: &[i64], path: &[BraidMove]) -> Result<Vec<i64>> {
        let (w, mut y) = self.apply_path(word, x, path)?;
        y[0] = 0;
        let (back, z) = self.apply_path_inverse(&w, &y, path)?;
        debug_assert_eq!(back, word);
        Ok(z)
    }
}

/// Property checks shared by the test suites and the command line.
pub mod checks {
    use alloc::vec::Vec;

    use super::{Braid, End};
    use crate::cellular::CellCrystal;
    use crate::crystalcore::Crystal;
    use crate::error::{Error, Result};
    use crate::rootdata::{reduced_words_of, word_graph_path, BraidMove};
    use crate::sample;

    /// Failures of `move⁻¹ ∘ move = id` for the single move `from → to`.
    pub fn inverse_violations(b: &Braid, from: &[usize], to: &[usize], samples: usize, seed: u64) -> Result<usize> {
        let path = word_graph_path(&b.cartan, from, to)?;
        if path.len() != 1 {
            return Err(Error::Invalid(alloc::format!("{from:?} → {to:?} is not a single move")));
        }
        let back: BraidMove = path[0].inverse();
        let mut rng = sample::rng(seed);
        let mut bad = 0;
        for _ in 0..samples {
            let x = sample::int_vec(&mut rng, from.len(), -20, 20);
            let (w, y) = b.apply_move(from, &x, &path[0])?;
            if w != to || b.apply_move(&w, &y, &back)? != (from.to_vec(), x) {
                bad += 1;
            }
        }
        Ok(bad)
    }

    /// Failures of the transport `from → to` to preserve `wt`, `ε_i` and
    /// intertwine every `ẽ_i`, `f̃_i` of the free cellular crystals.
    pub fn morphism_violations(b: &Braid, from: &[usize], to: &[usize], samples: usize, seed: u64) -> Result<usize> {
        let c = &b.cartan;
        let path = word_graph_path(c, from, to)?;
        let src = CellCrystal::new(c.clone(), from.to_vec(), None)?;
        let dst = CellCrystal::new(c.clone(), to.to_vec(), None)?;
        let map = |x: &Vec<i64>| b.apply_path(from, x, &path).map(|r| r.1);
        let mut rng = sample::rng(seed);
        let mut bad = 0;
        for _ in 0..samples {
            let x = sample::int_vec(&mut rng, from.len(), -8, 8);
            let y = map(&x)?;
            bad += usize::from(src.wt(&x) != dst.wt(&y));
            for i in 1..=c.rank() {
                bad += usize::from(src.eps(&x, i) != dst.eps(&y, i));
                let e = src.e(&x, i).map(|z| map(&z)).transpose()?;
                bad += usize::from(e != dst.e(&y, i));
                let f = src.f(&x, i).map(|z| map(&z)).transpose()?;
                bad += usize::from(f != dst.f(&y, i));
            }
        }
        Ok(bad)
    }

    /// Endpoint disagreements between the shortest path `word → target` and
    /// detours through intermediate reduced words, where `target` is the
    /// last word found by the word-graph enumeration.
    pub fn route_disagreements(b: &Braid, word: &[usize], samples: usize, seed: u64) -> Result<usize> {
        let c = &b.cartan;
        let words = reduced_words_of(c, word, 10_000)?;
        let target = words.last().ok_or(Error::NotReduced)?.clone();
        let direct = word_graph_path(c, word, &target)?;
        let mut rng = sample::rng(seed);
        let mut bad = 0;
        let mut routes = Vec::new();
        for mid in words.iter().step_by((words.len() / 6).max(1)) {
            let mut route = word_graph_path(c, word, mid)?;
            route.extend(word_graph_path(c, mid, &target)?);
            routes.push(route);
        }
        // a detour that leaves and re-enters the target
        if let Some(last) = direct.last() {
            let mut r = direct.clone();
            r.push(last.inverse());
            r.push(*last);
            routes.push(r);
        }
        for route in &routes {
            for _ in 0..samples {
                let x = sample::int_vec(&mut rng, word.len(), -10, 10);
                if b.apply_path(word, &x, &direct)? != b.apply_path(word, &x, route)? {
                    bad += 1;
                }
            }
        }
        Ok(bad)
    }

    /// Disagreements of `ω_i` and `ξ^{(i)}` computed through up to three
    /// different `i`-leading words, over random points and every letter.
    pub fn omega_xi_violations(b: &Braid, word: &[usize], samples: usize, seed: u64) -> Result<usize> {
        let c = &b.cartan;
        let words = reduced_words_of(c, word, 10_000)?;
        let mut rng = sample::rng(seed);
        let points: Vec<Vec<i64>> = (0..samples).map(|_| sample::int_vec(&mut rng, word.len(), -6, 6)).collect();
        let mut bad = 0;
        for i in 1..=c.rank() {
            let paths = words
                .iter()
                .filter(|w| w[0] == i)
                .take(3)
                .map(|t| word_graph_path(c, word, t))
                .collect::<Result<Vec<_>>>()?;
            for x in &points {
                let om = paths.iter().map(|p| b.omega_via(word, x, p, End::First)).collect::<Result<Vec<_>>>()?;
                let xi = paths.iter().map(|p| b.xi_via(word, x, p)).collect::<Result<Vec<_>>>()?;
                bad += usize::from(om.windows(2).any(|w| w[0] != w[1]));
                bad += usize::from(xi.windows(2).any(|w| w[0] != w[1]));
            }
        }
        Ok(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::word_graph_path;
    use crate::sample;
    use alloc::vec;

    #[test]
    fn closed_forms() {
        assert_eq!(phi0([3, -1]), [-1, 3]);
        assert_eq!(phi1([0, 0, 0]), [0, 0, 0]);
        let mut rng = sample::rng(sample::DEFAULT_SEED);
        for _ in 0..1000 {
            let v = sample::int_vec(&mut rng, 3, -20, 20);
            let t = [v[0], v[1], v[2]];
            assert_eq!(phi1(phi1(t)), t);
        }
    }

    #[test]
    fn fixture_parses() {
        let sols = parse_fixture(FIXTURE).unwrap();
        assert_eq!(sols.len(), 5);
        let table = TransitionTable::from_solutions(sols.clone()).unwrap();
        assert!(table.get(Family::G, &[2, 1, 2, 1, 2, 1]).is_some());
        let again = parse_fixture(&format_fixture(&sols)).unwrap();
        for (a, b) in sols.iter().zip(&again) {
            assert_eq!(a.d, b.d);
        }
    }

    #[test]
    fn a2_pipeline_matches_closed_form() {
        let table = TransitionTable::load().unwrap();
        let tr = table.get(Family::A, &[1, 2, 1]).unwrap();
        let mut rng = sample::rng(3);
        for _ in 0..1000 {
            let v = sample::int_vec(&mut rng, 3, -15, 15);
            assert_eq!(tr.apply_tensor(&v), phi1([v[0], v[1], v[2]]).to_vec());
        }
    }

    #[test]
    fn round_trips() {
        for (f, from, to) in [
            (Family::A, vec![1, 2, 1], vec![2, 1, 2]),
            (Family::C, vec![1, 2, 1, 2], vec![2, 1, 2, 1]),
            (Family::B, vec![1, 2, 1, 2], vec![2, 1, 2, 1]),
            (Family::G, vec![1, 2, 1, 2, 1, 2], vec![2, 1, 2, 1, 2, 1]),
        ] {
            let c = CartanData::new(f, 2).unwrap();
            let b = Braid::new(c.clone()).unwrap();
            let path = word_graph_path(&c, &from, &to).unwrap();
            let mut rng = sample::rng(5);
            for _ in 0..500 {
                let x = sample::int_vec(&mut rng, from.len(), -10, 10);
                let (w, y) = b.apply_path(&from, &x, &path).unwrap();
                assert_eq!(w, to);
                let (w2, z) = b.apply_path_inverse(&w, &y, &path).unwrap();
                assert_eq!(w2, from);
                assert_eq!(z, x, "{f}2");
            }
        }
    }

    #[test]
    fn omega_on_leading_word() {
        let c = CartanData::new(Family::A, 2).unwrap();
        let b = Braid::new(c).unwrap();
        assert_eq!(b.omega(&[1, 2, 1], &[4, 1, 2], 1, End::First).unwrap(), 4);
        assert_eq!(b.xi(&[1, 2, 1], &[4, 1, 2], 1).unwrap(), vec![0, 1, 2]);
        assert_eq!(b.omega(&[1, 2, 1], &[0, 0, 0], 2, End::First).unwrap(), 0);
    }
}
