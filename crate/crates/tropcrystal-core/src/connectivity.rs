//! Connectedness of cellular crystals through shifted copies of `B(∞)`.
//!
//! For a reduced longest word the shift lattice `H` is the integer kernel
//! of the forms `β_k` (one per `k` with `k⁺ ≤ N`). Shifting by `H`
//! commutes with every `ẽ_i`, `f̃_i`, so each translate `B(∞) + H` is a
//! connected copy. When every linear form of `Φ̃` is `x_j` modulo the
//! `β_k`, the copies overlap pairwise with `B(∞)` and cover `Z^N`.
//!
//! `β_k` is taken in the orientation of the structure maps in
//! [`crate::cellular`]: `β_k = x_k + Σ_{k<l<k⁺} a_{i_l,i_k} x_l + x_{k⁺}`,
//! which is `X_{k⁺} − X_k` for the colour `i_k`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::cellular::{cell_step, CellCrystal, Potential, Step};
use crate::crystalcore::Crystal;
use crate::error::{Error, Result};
use crate::rootdata::{
    canonical_longest_word, is_longest, is_reduced, kplus, positive_roots_from_word, CartanData, Family,
};
use crate::sample;

/// The forms `β_k` for every `k` (1-based) with `k⁺ ≤ N`.
pub fn beta_forms(cartan: &CartanData, word: &[usize]) -> Vec<(usize, Vec<i64>)> {
    let n = word.len();
    (1..=n)
        .filter_map(|k| {
            let kp = kplus(word, k)?;
            let mut f = vec![0i64; n];
            f[k - 1] = 1;
            f[kp - 1] = 1;
            for l in k + 1..kp {
                f[l - 1] = cartan.a(word[l - 1], word[k - 1]);
            }
            Some((k, f))
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The shift lattice of a reduced longest word, computed twice.
#[derive(Clone, Debug)]
pub struct HLattice {
    pub word: Vec<usize>,
    /// `roots[k][i]`: coefficient of `α_{i+1}` in `s_{i_N} ⋯ s_{i_{k+2}}(α_{i_{k+1}})`.
    pub roots: Vec<Vec<i64>>,
    /// Integer kernel basis: column `i` has a 1 at the last occurrence of
    /// letter `i+1`, zeros at the other last occurrences.
    pub kernel: Vec<Vec<i64>>,
    pub betas: Vec<(usize, Vec<i64>)>,
}

/// Outcome of comparing the two descriptions of the shift lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeEquality {
    pub equations: usize,
    pub roots_in_kernel: bool,
    /// Determinant of the root matrix restricted to the last occurrences.
    pub transition_det: i128,
}

impl LatticeEquality {
    pub fn equal(&self) -> bool {
        self.roots_in_kernel && self.transition_det.abs() == 1
    }
}

fn last_occurrences(word: &[usize], rank: usize) -> Result<Vec<usize>> {
    (1..=rank)
        .map(|i| {
            word.iter()
                .rposition(|&l| l == i)
                .ok_or_else(|| Error::Invalid(format!("letter {i} missing from word")))
        })
        .collect()
}

fn det(mut m: Vec<Vec<i128>>) -> i128 {
    // fraction-free elimination
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| m[r][k] != 0) else { return 0 };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

impl HLattice {
    pub fn rank(&self) -> usize {
        self.kernel.first().map_or(0, Vec::len)
    }

    /// `H = (Σ_i m^{(k)}_i h_i)_k`.
    pub fn vector(&self, h: &[i64]) -> Vec<i64> {
        self.roots.iter().map(|r| dot(r, h)).collect()
    }

    /// Compares the root description with the kernel description.
    pub fn equality(&self) -> LatticeEquality {
        let n = self.rank();
        let roots_in_kernel = (0..n).all(|i| {
            let col: Vec<i64> = self.roots.iter().map(|r| r[i]).collect();
            self.betas.iter().all(|(_, b)| dot(b, &col) == 0)
        });
        let last = last_occurrences(&self.word, n).expect("longest word uses every letter");
        let sub = last.iter().map(|&p| self.roots[p].iter().map(|&v| v as i128).collect()).collect();
        LatticeEquality { equations: self.betas.len(), roots_in_kernel, transition_det: det(sub) }
    }
}

/// Both descriptions of the shift lattice. Fails when the kernel and the
/// root lattice differ, which would mean the `β_k` orientation is wrong.
pub fn h_basis(cartan: &CartanData, word: &[usize]) -> Result<HLattice> {
    if !is_longest(cartan, word) {
        return Err(Error::NotLongest);
    }
    let n = cartan.rank();
    let len = word.len();
    let roots: Vec<Vec<i64>> = positive_roots_from_word(cartan, word)?.into_iter().map(|r| r.coords).collect();
    let betas = beta_forms(cartan, word);
    if betas.len() + n != len {
        return Err(Error::Invalid(format!("{} equations for {} unknowns and rank {n}", betas.len(), len)));
    }
    // back substitution from the free last occurrences
    let last = last_occurrences(word, n)?;
    let mut cols = Vec::with_capacity(n);
    for &p in &last {
        let mut v = vec![0i64; len];
        v[p] = 1;
        for k in (1..=len).rev() {
            if let Some(kp) = kplus(word, k) {
                let mid: i64 = (k + 1..kp).map(|l| cartan.a(word[l - 1], word[k - 1]) * v[l - 1]).sum();
                v[k - 1] = -v[kp - 1] - mid;
            }
        }
        cols.push(v);
    }
    let kernel = (0..len).map(|k| cols.iter().map(|c| c[k]).collect()).collect();
    let lat = HLattice { word: word.to_vec(), roots, kernel, betas };
    let eq = lat.equality();
    if !eq.equal() {
        return Err(Error::Invalid(format!("shift lattice descriptions disagree: {eq:?}")));
    }
    Ok(lat)
}

/// Violations of `ẽ_i(x+H) = ẽ_i(x)+H` and `f̃_i(x+H) = f̃_i(x)+H` over
/// random `x ∈ [−10,10]^N`, `h ∈ [−5,5]^n`, every colour.
pub fn shift_equivariance_check(cartan: &CartanData, lat: &HLattice, samples: usize, seed: u64) -> usize {
    let mut rng = sample::rng(seed);
    let word = &lat.word;
    let mut bad = 0;
    for _ in 0..samples {
        let x = sample::int_vec(&mut rng, word.len(), -10, 10);
        let h = sample::int_vec(&mut rng, cartan.rank(), -5, 5);
        let hv = lat.vector(&h);
        let xh: Vec<i64> = x.iter().zip(&hv).map(|(a, b)| a + b).collect();
        for i in 1..=cartan.rank() {
            for dir in [Step::Raise, Step::Lower] {
                let lhs = cell_step(cartan, word, &xh, i, dir, None);
                let rhs = cell_step(cartan, word, &x, i, dir, None)
                    .map(|y| y.iter().zip(&hv).map(|(a, b)| a + b).collect::<Vec<_>>());
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// `φ = x_j − Σ_k c_k β_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// 0-based coordinate.
    pub j: usize,
    /// `(k, c_k)` with `k` 1-based, nonzero `c_k` only.
    pub c: Vec<(usize, i64)>,
}

#[derive(Clone, Debug)]
pub struct FormRecord {
    pub form: Vec<i64>,
    /// Every valid decomposition found.
    pub decompositions: Vec<Decomposition>,
}

/// The shift condition on a set of linear forms.
#[derive(Clone, Debug)]
pub struct ConditionH {
    pub records: Vec<FormRecord>,
    /// Forms congruent to a coordinate on the lattice whose elimination
    /// still left a residual.
    pub inconsistent: usize,
}

impl ConditionH {
    pub fn holds(&self) -> bool {
        self.inconsistent == 0 && self.records.iter().all(|r| !r.decompositions.is_empty())
    }

    pub fn failures(&self) -> Vec<&Vec<i64>> {
        self.records.iter().filter(|r| r.decompositions.is_empty()).map(|r| &r.form).collect()
    }
}

/// Writes `x_j − φ` in the `β_k` by forward elimination: `β_k` has
/// coefficient 1 at `k` and support in `[k, k⁺]`.
fn solve_betas(word: &[usize], betas: &BTreeMap<usize, &Vec<i64>>, mut r: Vec<i64>) -> Option<Vec<(usize, i64)>> {
    let mut c = Vec::new();
    for k in 1..=word.len() {
        let v = r[k - 1];
        if v == 0 {
            continue;
        }
        let b = betas.get(&k)?;
        for (ri, bi) in r.iter_mut().zip(b.iter()) {
            *ri -= v * bi;
        }
        c.push((k, v));
    }
    Some(c)
}

/// Checks that each form equals some `x_j` modulo integer combinations of
/// the `β_k`. Candidates `j` are those with `φ(H) = H_j` on the lattice
/// generators; the coefficients then come from elimination.
pub fn condition_h<'a>(lat: &HLattice, forms: impl IntoIterator<Item = &'a Vec<i64>>) -> ConditionH {
    let betas: BTreeMap<usize, &Vec<i64>> = lat.betas.iter().map(|(k, f)| (*k, f)).collect();
    let n = lat.rank();
    let mut records = Vec::new();
    let mut inconsistent = 0;
    for form in forms {
        let on_lattice: Vec<i64> = (0..n).map(|i| lat.roots.iter().zip(form).map(|(r, f)| r[i] * f).sum()).collect();
        let mut decompositions = Vec::new();
        for j in 0..form.len() {
            if lat.roots[j] != on_lattice {
                continue;
            }
            let mut r: Vec<i64> = form.iter().map(|v| -v).collect();
            r[j] += 1;
            match solve_betas(&lat.word, &betas, r) {
                Some(c) => decompositions.push(Decomposition { j, c }),
                None => inconsistent += 1,
            }
        }
        records.push(FormRecord { form: form.clone(), decompositions });
    }
    ConditionH { records, inconsistent }
}

/// A point with `φ(x̃) ≥ 1` for every form of `Φ̃`: the sum of the `f̃`-ball
/// of `0` in `B(∞)`, grown until strictly interior. Such a sum is interior
/// once the ball spans `Q^N`, since every form is nonnegative on the ball.
pub fn interior_point(cartan: &CartanData, pot: &Potential, max_depth: usize) -> Result<Vec<i64>> {
    let b = CellCrystal::binf(cartan.clone(), pot)?;
    let mut seen = BTreeSet::from([b.zero()]);
    let mut layer = vec![b.zero()];
    let mut sum = b.zero();
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for x in &layer {
            for i in 1..=cartan.rank() {
                if let Some(y) = b.f(x, i) {
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
        }
        for y in &next {
            for (s, v) in sum.iter_mut().zip(y) {
                *s += v;
            }
        }
        if pot.trop.forms().all(|f| dot(f, &sum) >= 1) {
            return Ok(sum);
        }
        layer = next;
    }
    Err(Error::Budget(format!("no interior point within depth {max_depth}")))
}

/// `w ∈ B(∞) ∩ (B(∞) + H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub shift: Vec<i64>,
    pub point: Vec<i64>,
}

/// `w = H̃·x̃ + H` with `H̃ = max |H_k|`; both memberships are checked.
pub fn intersection_witness(pot: &Potential, interior: &[i64], shift: &[i64]) -> Result<Witness> {
    let scale = shift.iter().map(|v| v.abs()).max().unwrap_or(0);
    let point: Vec<i64> = interior.iter().zip(shift).map(|(x, h)| scale * x + h).collect();
    let back: Vec<i64> = point.iter().zip(shift).map(|(w, h)| w - h).collect();
    if !pot.member(&point) || !pot.member(&back) {
        return Err(Error::Invalid(format!("witness {point:?} for shift {shift:?} fails membership")));
    }
    Ok(Witness { shift: shift.to_vec(), point })
}

/// Integer points of `[−r, r]^len` in lexicographic order.
pub fn box_points(len: usize, r: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * r + 1) as u64;
    let total = side.pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut x = vec![0i64; len];
        for v in x.iter_mut().rev() {
            *v = (idx % side) as i64 - r;
            idx /= side;
        }
        x
    })
}

/// The uniform parameter `h = max(0, −min_φ φ(x))`, for which `x + H(h,…,h)`
/// lies in `B(∞)` under the shift condition.
pub fn covering_h(pot: &Potential, x: &[i64]) -> i64 {
    pot.trop.forms().map(|f| -dot(f, x)).max().unwrap_or(0).max(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub radius: i64,
    pub points: usize,
    pub uncovered: Vec<Vec<i64>>,
    /// Largest `h` used; grows linearly with the radius.
    pub max_h: i64,
}

/// Every point of `[−r, r]^N` lies in some translate `B(∞) − H`.
pub fn coverage_check(lat: &HLattice, pot: &Potential, r: i64) -> Coverage {
    let n = lat.rank();
    let mut out = Coverage { radius: r, points: 0, uncovered: Vec::new(), max_h: 0 };
    for x in box_points(lat.word.len(), r) {
        out.points += 1;
        let h = covering_h(pot, &x);
        out.max_h = out.max_h.max(h);
        let hv = lat.vector(&vec![h; n]);
        let y: Vec<i64> = x.iter().zip(&hv).map(|(a, b)| a + b).collect();
        if !pot.member(&y) {
            out.uncovered.push(x);
        }
    }
    out
}

/// Colours of an `ẽ`-path from `y ∈ B(∞)` to `0` inside `B(∞)`.
fn raise_to_origin(b: &CellCrystal, y: &[i64], cap: usize) -> Option<Vec<usize>> {
    let mut cur = y.to_vec();
    let mut path = Vec::new();
    while cur.iter().any(|&v| v != 0) {
        if path.len() >= cap {
            return None;
        }
        let (i, next) = (1..=b.cartan.rank()).find_map(|i| b.e(&cur, i).map(|z| (i, z)))?;
        path.push(i);
        cur = next;
    }
    Some(path)
}

/// Follows `path` from `x` with the free operators, staying inside
/// `B(∞) − H`; returns the endpoint.
fn transport(cartan: &CartanData, pot: &Potential, x: &[i64], hv: &[i64], path: &[usize]) -> Option<Vec<i64>> {
    let mut cur = x.to_vec();
    for &i in path {
        cur = cell_step(cartan, &pot.word, &cur, i, Step::Raise, None)?;
        let up: Vec<i64> = cur.iter().zip(hv).map(|(a, b)| a + b).collect();
        if !pot.member(&up) {
            return None;
        }
    }
    Some(cur)
}

/// Connects `x` to `0`: `x` lies in the copy `B(∞) − H`, reaches `−H`
/// inside the copy, and the copy meets `B(∞)` at a witness that reaches
/// both `−H` and `0`.
pub fn constructive_path_exists(cartan: &CartanData, lat: &HLattice, pot: &Potential, interior: &[i64], x: &[i64]) -> bool {
    const CAP: usize = 1 << 20;
    let b = match CellCrystal::binf(cartan.clone(), pot) {
        Ok(b) => b,
        Err(_) => return false,
    };
    let h = covering_h(pot, x);
    let hv = lat.vector(&vec![h; lat.rank()]);
    let neg: Vec<i64> = hv.iter().map(|v| -v).collect();
    let lifted: Vec<i64> = x.iter().zip(&hv).map(|(a, b)| a + b).collect();
    if !pot.member(&lifted) {
        return false;
    }
    let Some(path) = raise_to_origin(&b, &lifted, CAP) else { return false };
    if transport(cartan, pot, x, &hv, &path).as_deref() != Some(&neg[..]) {
        return false;
    }
    let Ok(w) = intersection_witness(pot, interior, &neg) else { return false };
    let w_lift: Vec<i64> = w.point.iter().zip(&hv).map(|(a, b)| a + b).collect();
    let Some(wpath) = raise_to_origin(&b, &w_lift, CAP) else { return false };
    if transport(cartan, pot, &w.point, &hv, &wpath).as_deref() != Some(&neg[..]) {
        return false;
    }
    raise_to_origin(&b, &w.point, CAP).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reach {
    Connected(usize),
    /// Budget or region exhausted; never read as a disproof.
    Inconclusive,
}

/// Bidirectional BFS in the free cellular crystal, restricted to the box
/// `[−bound, bound]^N`, visiting at most `budget` points.
pub fn bfs_connect(cartan: &CartanData, word: &[usize], x: &[i64], y: &[i64], bound: i64, budget: usize) -> Reach {
    if x == y {
        return Reach::Connected(0);
    }
    let mut dist = [BTreeMap::new(), BTreeMap::new()];
    let mut queues = [VecDeque::new(), VecDeque::new()];
    dist[0].insert(x.to_vec(), 0usize);
    dist[1].insert(y.to_vec(), 0usize);
    queues[0].push_back(x.to_vec());
    queues[1].push_back(y.to_vec());
    let mut visited = 2;
    while !queues[0].is_empty() && !queues[1].is_empty() {
        let s = usize::from(queues[1].len() < queues[0].len());
        // expand one full layer of side `s`
        for _ in 0..queues[s].len() {
            let cur = queues[s].pop_front().expect("nonempty");
            let d = dist[s][&cur];
            for i in 1..=cartan.rank() {
                for dir in [Step::Raise, Step::Lower] {
                    let Some(z) = cell_step(cartan, word, &cur, i, dir, None) else { continue };
                    if z.iter().any(|v| v.abs() > bound) || dist[s].contains_key(&z) {
                        continue;
                    }
                    if let Some(&e) = dist[1 - s].get(&z) {
                        return Reach::Connected(d + 1 + e);
                    }
                    visited += 1;
                    if visited > budget {
                        return Reach::Inconclusive;
                    }
                    dist[s].insert(z.clone(), d + 1);
                    queues[s].push_back(z);
                }
            }
        }
    }
    Reach::Inconclusive
}

/// Extends a reduced word to a reduced longest word by appending letters.
/// Connectedness of the longest word's crystal passes to the prefix.
pub fn complete_to_longest(cartan: &CartanData, word: &[usize]) -> Result<Vec<usize>> {
    if !is_reduced(cartan, word) {
        return Err(Error::NotReduced);
    }
    let mut w = word.to_vec();
    while !is_longest(cartan, &w) {
        let i = (1..=cartan.rank())
            .find(|&i| {
                w.push(i);
                let ok = is_reduced(cartan, &w);
                w.pop();
                ok
            })
            .ok_or(Error::NotReduced)?;
        w.push(i);
    }
    Ok(w)
}

#[derive(Clone, Copy, Debug)]
pub struct ConnectParams {
    /// Box for the constructive samples.
    pub radius: i64,
    /// Box for the direct pairs; exhaustive search only stays cheap for
    /// small boxes in higher rank.
    pub pair_radius: i64,
    pub pairs: usize,
    /// Extra room around the box for the direct search.
    pub pad: i64,
    pub budget: usize,
    pub seed: u64,
}

impl Default for ConnectParams {
    fn default() -> Self {
        ConnectParams { radius: 3, pair_radius: 3, pairs: 100, pad: 3, budget: 1_000_000, seed: sample::DEFAULT_SEED }
    }
}

#[derive(Clone, Debug)]
pub struct ConnectReport {
    pub family: Family,
    pub rank: usize,
    pub params: ConnectParams,
    pub lattice: LatticeEquality,
    pub condition_h: bool,
    pub constructive_ok: usize,
    pub constructive_failed: Vec<Vec<i64>>,
    pub direct_connected: usize,
    pub direct_inconclusive: usize,
    pub longest_path: usize,
}

impl ConnectReport {
    /// Both certificates succeeded on every sample.
    pub fn passed(&self) -> bool {
        self.lattice.equal()
            && self.condition_h
            && self.constructive_failed.is_empty()
            && self.direct_inconclusive == 0
    }
}

/// Two certificates for the canonical word: the constructive chain through
/// shifted copies for each sampled point, and direct bidirectional BFS
/// between random pairs inside a padded box. Exceptional types have no full potential here and are refused.
pub fn connectedness_report(family: Family, rank: usize, params: ConnectParams) -> Result<ConnectReport> {
    if matches!(family, Family::E | Family::F) {
        return Err(Error::Unsupported(format!(
            "{family}{rank}: no full potential is built, so the shift condition is taken as stated and no certificate is produced"
        )));
    }
    let cartan = CartanData::new(family, rank)?;
    let word = canonical_longest_word(family, rank)?;
    let pot = Potential::catalog(family, rank)?;
    let lat = h_basis(&cartan, &word)?;
    let cond = condition_h(&lat, pot.trop.forms());
    let interior = interior_point(&cartan, &pot, 16)?;
    let mut rng = sample::rng(params.seed);
    let r = params.radius;
    let mut report = ConnectReport {
        family,
        rank,
        params,
        lattice: lat.equality(),
        condition_h: cond.holds(),
        constructive_ok: 0,
        constructive_failed: Vec::new(),
        direct_connected: 0,
        direct_inconclusive: 0,
        longest_path: 0,
    };
    for _ in 0..2 * params.pairs {
        let x = sample::int_vec(&mut rng, word.len(), -r, r);
        if constructive_path_exists(&cartan, &lat, &pot, &interior, &x) {
            report.constructive_ok += 1;
        } else {
            report.constructive_failed.push(x);
        }
    }
    let pr = params.pair_radius;
    for _ in 0..params.pairs {
        let x = sample::int_vec(&mut rng, word.len(), -pr, pr);
        let y = sample::int_vec(&mut rng, word.len(), -pr, pr);
        match bfs_connect(&cartan, &word, &x, &y, pr + params.pad, params.budget) {
            Reach::Connected(d) => {
                report.direct_connected += 1;
                report.longest_path = report.longest_path.max(d);
            }
            Reach::Inconclusive => report.direct_inconclusive += 1,
        }
    }
    Ok(report)
}

/// Random `h ∈ [−5, 5]^n`.
pub fn random_h<R: Rng>(rng: &mut R, n: usize) -> Vec<i64> {
    sample::int_vec(rng, n, -5, 5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_lattice() {
        let c = CartanData::new(Family::A, 2).unwrap();
        let lat = h_basis(&c, &[1, 2, 1]).unwrap();
        assert_eq!(lat.vector(&[1, 0]), vec![0, 1, 1]);
        assert_eq!(lat.vector(&[0, 1]), vec![1, 1, 0]);
        assert_eq!(lat.betas, vec![(1, vec![1, -1, 1])]);
    }

    #[test]
    fn a2_decomposition() {
        let c = CartanData::new(Family::A, 2).unwrap();
        let lat = h_basis(&c, &[1, 2, 1]).unwrap();
        let f = vec![0, 1, -1];
        let ch = condition_h(&lat, [&f]);
        assert!(ch.holds());
        assert!(ch.records[0].decompositions.contains(&Decomposition { j: 0, c: vec![(1, 1)] }));
        let coord = vec![0, 0, 1];
        let ch = condition_h(&lat, [&coord]);
        assert!(ch.records[0].decompositions.contains(&Decomposition { j: 2, c: vec![] }));
    }

    #[test]
    fn witness_for_a2() {
        let c = CartanData::new(Family::A, 2).unwrap();
        let pot = Potential::catalog(Family::A, 2).unwrap();
        let lat = h_basis(&c, &pot.word).unwrap();
        let x = interior_point(&c, &pot, 16).unwrap();
        let h = lat.vector(&[1, 1]);
        assert_eq!(h, vec![1, 2, 1]);
        intersection_witness(&pot, &x, &h).unwrap();
        intersection_witness(&pot, &x, &[0, 0, 0]).unwrap();
    }

    #[test]
    fn trivial_bfs_and_completion() {
        let c = CartanData::new(Family::A, 3).unwrap();
        let w = canonical_longest_word(Family::A, 3).unwrap();
        let z = vec![0; w.len()];
        assert_eq!(bfs_connect(&c, &w, &z, &z, 1, 10), Reach::Connected(0));
        let full = complete_to_longest(&c, &[2, 1]).unwrap();
        assert!(is_longest(&c, &full) && full.starts_with(&[2, 1]));
    }

    #[test]
    fn exceptional_refused() {
        let p = ConnectParams::default();
        assert!(matches!(connectedness_report(Family::E, 6, p), Err(Error::Unsupported(_))));
    }
}
