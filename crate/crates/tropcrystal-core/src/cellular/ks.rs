//! The Kashiwara–Saito characterization of `B(∞)` checked on truncations of
//! the cut-down cellular crystal, with the embeddings `Ψ_i`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::binf::{binf_truncation, Realization};
use super::{cell_eps, cell_wt_root, CellCrystal, Potential};
use crate::braid::{Braid, End};
use crate::crystalcore::{
    generate_component, strict_morphism_check, BiCrystal, Closure, Crystal, ElemBi, ExtInt, TensorPair,
};
use crate::error::Result;
use crate::rootdata::{BraidMove, CartanData};

/// One named condition and whether it held.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, failures: Vec<String>, checked: usize) -> Self {
        let detail = match failures.first() {
            None => format!("{checked} checked"),
            Some(f) => format!("{} of {checked} failed, first: {f}", failures.len()),
        };
        Check { name, passed: failures.is_empty(), detail }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// `Ψ_i(x) = ξ^{(i)}(x) ⊗ f̃_i^{ω_i(x)}(0)_i`, with the braid paths to an
/// `i`-leading word computed once per letter.
pub struct PsiMaps<'a> {
    braid: &'a Braid,
    word: Vec<usize>,
    paths: Vec<Vec<BraidMove>>,
}

impl<'a> PsiMaps<'a> {
    pub fn new(braid: &'a Braid, word: &[usize]) -> Result<Self> {
        let paths = (1..=braid.cartan.rank())
            .map(|i| braid.path_to_end(word, i, End::First).map(|p| p.1))
            .collect::<Result<Vec<_>>>()?;
        Ok(PsiMaps { braid, word: word.to_vec(), paths })
    }

    pub fn omega(&self, x: &[i64], i: usize) -> Result<i64> {
        self.braid.omega_via(&self.word, x, &self.paths[i - 1], End::First)
    }

    pub fn xi(&self, x: &[i64], i: usize) -> Result<Vec<i64>> {
        self.braid.xi_via(&self.word, x, &self.paths[i - 1])
    }

    /// `(ξ^{(i)}(x), ω_i(x))`.
    pub fn psi_plus(&self, x: &[i64], i: usize) -> Result<(Vec<i64>, i64)> {
        Ok((self.xi(x, i)?, self.omega(x, i)?))
    }

    /// `Ψ_i(x)` as an element of `B ⊗ B_i`.
    pub fn psi_elem(&self, x: &[i64], i: usize) -> Result<(Vec<i64>, ElemBi)> {
        let (y, w) = self.psi_plus(x, i)?;
        Ok((y, ElemBi { x: -w, i }))
    }
}

/// The codomain `B ⊗ B_i` of `Ψ_i`.
pub fn psi_codomain(b: &CellCrystal) -> TensorPair<CellCrystal, BiCrystal> {
    TensorPair { left: b.clone(), right: BiCrystal { cartan: b.cartan.dual() } }
}

/// Strictness of `Ψ_i` at each point: `wt`, `ε`, `φ` agree and `Ψ_i`
/// commutes with every `ẽ_j`, `f̃_j` (zero included).
pub fn psi_pointwise(b: &CellCrystal, psi: &PsiMaps<'_>, points: &[Vec<i64>], i: usize) -> Result<Vec<String>> {
    let cod = psi_codomain(b);
    let mut bad = Vec::new();
    for x in points {
        let px = psi.psi_elem(x, i)?;
        if cod.wt(&px) != b.wt(x) {
            bad.push(format!("Ψ_{i} wt at {x:?}"));
        }
        for j in 1..=b.rank() {
            if cod.eps(&px, j) != b.eps(x, j) || cod.phi(&px, j) != b.phi(x, j) {
                bad.push(format!("Ψ_{i} ε_{j} at {x:?}"));
            }
            for (dom, img) in [(b.e(x, j), cod.e(&px, j)), (b.f(x, j), cod.f(&px, j))] {
                let mapped = dom.map(|y| psi.psi_elem(&y, i)).transpose()?;
                if mapped != img {
                    bad.push(format!("Ψ_{i} does not commute with colour {j} at {x:?}"));
                }
            }
        }
    }
    Ok(bad)
}

/// Graph form of the strictness check: the image of the truncation is
/// matched against the truncation of `B ⊗ B_i` generated from `Ψ_i(0)`.
pub fn psi_graph_check(b: &CellCrystal, psi: &PsiMaps<'_>, depth: usize, i: usize) -> Result<usize> {
    let (g, elems) = generate_component(b, b.zero(), depth, Closure::Lowering, &|_| true)?;
    let cod = psi_codomain(b);
    let (h, images) = generate_component(&cod, psi.psi_elem(&b.zero(), i)?, depth, Closure::Lowering, &|_| true)?;
    let map = elems
        .iter()
        .map(|x| Ok(psi.psi_elem(x, i).ok().and_then(|p| images.iter().position(|q| *q == p))))
        .collect::<Result<Vec<_>>>()?;
    let colours: Vec<usize> = (1..=b.rank()).collect();
    Ok(strict_morphism_check(&map, &g, &h, &colours).len())
}

/// Every form of `Φ̃` has `x_1`-coefficient 0 or 1, and the bare form `x_1` occurs.
pub fn minx1_structure_check(pot: &Potential) -> bool {
    let n = pot.word.len();
    let mut bare = vec![0i64; n];
    bare[0] = 1;
    pot.trop.forms().all(|f| f[0] == 0 || f[0] == 1) && pot.trop.contains(&bare)
}

/// Points of `[-r, r]^N` with `Φ̃ ≥ 0` and every `ε_i ≤ 0`, other than 0.
/// Also returns the members whose weight leaves `Q_-`.
pub fn box_scan(cartan: &CartanData, pot: &Potential, r: i64) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, usize) {
    let n = pot.word.len();
    let mut x = vec![-r; n];
    let mut extra_sources = Vec::new();
    let mut bad_weights = Vec::new();
    let mut members = 0;
    loop {
        if pot.member(&x) {
            members += 1;
            let low = (1..=cartan.rank()).all(|i| cell_eps(cartan, &pot.word, &x, i) <= ExtInt::Fin(0));
            if low && x.iter().any(|&v| v != 0) {
                extra_sources.push(x.clone());
            }
            if cell_wt_root(cartan.rank(), &pot.word, &x).iter().any(|&c| c > 0) {
                bad_weights.push(x.clone());
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return (extra_sources, bad_weights, members);
            }
            if x[k] < r {
                x[k] += 1;
                break;
            }
            x[k] = -r;
            k += 1;
        }
    }
}

/// Parameters of [`ks_check`].
#[derive(Clone, Copy, Debug)]
pub struct KsParams {
    pub depth: usize,
    pub box_radius: i64,
}

/// The conditions characterizing `B(∞)`, checked on the depth-`d`
/// truncation, upper normality, the box scan for extra sources and the
/// shape of the `x_1` forms.
pub fn ks_check(cartan: &CartanData, pot: &Potential, braid: &Braid, params: KsParams) -> Result<Report> {
    let b = CellCrystal::binf(cartan.clone(), pot)?;
    let (_, points) = binf_truncation(cartan, pot, Realization::Potential, params.depth)?;
    let n = cartan.rank();
    let zero = b.zero();
    let mut report = Report::default();
    let mut push = |name, bad: Vec<String>, count| report.checks.push(Check::new(name, bad, count));

    let mut bad = Vec::new();
    for x in &points {
        if cell_wt_root(n, &pot.word, x).iter().any(|&c| c > 0) {
            bad.push(format!("{x:?}"));
        }
    }
    push("weights in Q-", bad, points.len());

    let zero_wt: Vec<String> = points
        .iter()
        .filter(|x| **x != zero && cell_wt_root(n, &pot.word, x).iter().all(|&c| c == 0))
        .map(|x| format!("{x:?}"))
        .collect();
    push("unique weight-0 element", zero_wt, points.len());

    let bad = (1..=n).filter(|&i| b.eps(&zero, i) != ExtInt::Fin(0)).map(|i| format!("ε_{i}(0)")).collect();
    push("ε(0) = 0", bad, n);

    let mut bad = Vec::new();
    for x in &points {
        for i in 1..=n {
            if !b.eps(x, i).is_finite() {
                bad.push(format!("ε_{i}{x:?}"));
            }
        }
    }
    push("ε finite", bad, points.len());

    let psi = PsiMaps::new(braid, &pot.word)?;
    let mut bad = Vec::new();
    for i in 1..=n {
        bad.extend(psi_pointwise(&b, &psi, &points, i)?);
    }
    push("Ψ_i strict embeddings", bad, points.len() * n);

    let mut bad = Vec::new();
    for x in &points {
        for i in 1..=n {
            let w = psi.omega(x, i)?;
            if w < 0 {
                bad.push(format!("ω_{i}{x:?} = {w}"));
            }
        }
    }
    push("ω_i ≥ 0", bad, points.len() * n);

    let bad = points
        .iter()
        .filter(|x| **x != zero && (1..=n).all(|i| b.e(x, i).is_none()))
        .map(|x| format!("{x:?}"))
        .collect();
    push("some ẽ_i acts on x ≠ 0", bad, points.len());

    let mut bad = Vec::new();
    for x in &points {
        for i in 1..=n {
            let mut steps = 0i64;
            let mut y = x.clone();
            while let Some(z) = b.e(&y, i) {
                y = z;
                steps += 1;
            }
            if b.eps(x, i) != ExtInt::Fin(steps) {
                bad.push(format!("ε_{i}{x:?} = {} but ẽ_{i} acts {steps} times", b.eps(x, i)));
            }
        }
    }
    push("upper normality", bad, points.len() * n);

    let (sources, weights, members) = box_scan(cartan, pot, params.box_radius);
    push("only 0 has all ε ≤ 0 (box scan)", sources.iter().map(|x| format!("{x:?}")).collect(), members);
    push("weights in Q- (box scan)", weights.iter().map(|x| format!("{x:?}")).collect(), members);

    let ok = minx1_structure_check(pot);
    push("x1 forms", if ok { vec![] } else { vec![String::from("x1 coefficient outside {0,1} or bare x1 missing")] }, pot.trop.len());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Family;

    fn setup(f: Family, n: usize) -> (CartanData, Potential, Braid) {
        let c = CartanData::new(f, n).unwrap();
        (c.clone(), Potential::catalog(f, n).unwrap(), Braid::new(c).unwrap())
    }

    #[test]
    fn a2_and_g2_pass() {
        for (f, n, d) in [(Family::A, 2, 5), (Family::G, 2, 4)] {
            let (c, pot, braid) = setup(f, n);
            let r = ks_check(&c, &pot, &braid, KsParams { depth: d, box_radius: 2 }).unwrap();
            for ch in &r.checks {
                assert!(ch.passed, "{f}{n} {}: {}", ch.name, ch.detail);
            }
        }
    }

    #[test]
    fn dropping_x1_is_caught() {
        let (c, mut pot, braid) = setup(Family::A, 2);
        assert!(pot.trop.remove(&[1, 0, 0]));
        assert!(!minx1_structure_check(&pot));
        let r = ks_check(&c, &pot, &braid, KsParams { depth: 3, box_radius: 2 }).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn psi_on_a2() {
        let (c, pot, braid) = setup(Family::A, 2);
        let psi = PsiMaps::new(&braid, &pot.word).unwrap();
        assert_eq!(psi.psi_plus(&[0, 0, 0], 1).unwrap(), (vec![0, 0, 0], 0));
        // the word already starts with 1
        assert_eq!(psi.psi_plus(&[3, 2, 1], 1).unwrap(), (vec![0, 2, 1], 3));
        let b = CellCrystal::binf(c, &pot).unwrap();
        for i in 1..=2 {
            assert_eq!(psi_graph_check(&b, &psi, 5, i).unwrap(), 0);
        }
    }
}
