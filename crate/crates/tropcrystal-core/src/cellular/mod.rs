//! The cellular crystal `Z^N` of a reduced word, its upper half potential,
//! and the checks built on them.
//!
//! A point `x` of the cellular crystal of `i_1 ⋯ i_N` corresponds to the
//! tensor `(-x_N)_{i_N} ⊗ ⋯ ⊗ (-x_1)_{i_1}` of elementary crystals of the
//! Langlands dual, so structure maps use `a_{i_l, i}` of the original type
//! while the crystal axioms hold for [`CartanData::dual`].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::crystalcore::{Crystal, ExtInt};
use crate::error::{Error, Result};
use crate::grouprep::MatrixRep;
use crate::rootdata::{canonical_longest_word, CartanData, Family};
use crate::tropsym::{LaurentPoly, TropForm};

pub mod binf;
mod catalog;
pub mod geometric;
pub mod ks;
pub mod monomial;
mod exceptional;
pub mod trail;

pub use catalog::{catalog_minor, minor_laurent, oracle_minors};

/// `wt_i(x) = -Σ_l a_{i_l,i} x_l`.
pub fn cell_wt_i(cartan: &CartanData, word: &[usize], x: &[i64], i: usize) -> i64 {
    -word.iter().zip(x).map(|(&il, &xl)| cartan.a(il, i) * xl).sum::<i64>()
}

/// All pairings `wt_i`, `i = 1..=n`.
pub fn cell_wt(cartan: &CartanData, word: &[usize], x: &[i64]) -> Vec<i64> {
    (1..=cartan.rank()).map(|i| cell_wt_i(cartan, word, x, i)).collect()
}

/// The root coordinates of `wt(x) = -Σ x_l α_{i_l}`.
pub fn cell_wt_root(rank: usize, word: &[usize], x: &[i64]) -> Vec<i64> {
    let mut r = vec![0; rank];
    for (&il, &xl) in word.iter().zip(x) {
        r[il - 1] -= xl;
    }
    r
}

/// `ε_i(x) = max_{i_m = i}(x_m + Σ_{l>m} a_{i_l,i} x_l)`; `-∞` when `i` is absent.
pub fn cell_eps(cartan: &CartanData, word: &[usize], x: &[i64], i: usize) -> ExtInt {
    let mut best = ExtInt::NegInf;
    let mut tail = 0i64;
    for m in (0..word.len()).rev() {
        if word[m] == i {
            best = best.max(ExtInt::Fin(x[m] + tail));
        }
        tail += cartan.a(word[m], i) * x[m];
    }
    best
}

/// `X_m = x_m + Σ_{k<m} a_{i_k,i} x_k` at the positions `m` with `i_m = i`.
fn partial_sums(cartan: &CartanData, word: &[usize], x: &[i64], i: usize) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    let mut head = 0i64;
    for (m, &im) in word.iter().enumerate() {
        if im == i {
            out.push((m, x[m] + head));
        }
        head += cartan.a(im, i) * x[m];
    }
    out
}

/// Direction of a single step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Raise,
    Lower,
}

/// One application of `ẽ_i` or `f̃_i`: `ẽ_i` lowers the coordinate at the
/// last minimizer of `X_m`, `f̃_i` raises the one at the first minimizer.
/// With a potential, results outside `{Φ̃ ≥ 0}` become `None`.
pub fn cell_step(
    cartan: &CartanData,
    word: &[usize],
    x: &[i64],
    i: usize,
    dir: Step,
    potential: Option<&TropForm>,
) -> Option<Vec<i64>> {
    let sums = partial_sums(cartan, word, x, i);
    let min = sums.iter().map(|p| p.1).min()?;
    let m = match dir {
        Step::Raise => sums.iter().rev().find(|p| p.1 == min)?.0,
        Step::Lower => sums.iter().find(|p| p.1 == min)?.0,
    };
    let mut y = x.to_vec();
    y[m] += if dir == Step::Raise { -1 } else { 1 };
    match potential {
        Some(p) if p.eval(&y) < 0 => None,
        _ => Some(y),
    }
}

/// `ẽ_i^n x` for any integer `n` by the closed double-min formula
/// (`n < 0` gives `f̃_i^{-n}`), with no cutoff.
pub fn cell_e_pow(cartan: &CartanData, word: &[usize], x: &[i64], i: usize, n: i64) -> Vec<i64> {
    let sums = partial_sums(cartan, word, x, i);
    if n == 0 || sums.is_empty() {
        return x.to_vec();
    }
    let min_over = |pred: &dyn Fn(usize) -> bool, shift: i64| -> Option<i64> {
        sums.iter().filter(|p| pred(p.0)).map(|p| p.1 + shift).min()
    };
    let both = |a: Option<i64>, b: Option<i64>| match (a, b) {
        (Some(a), Some(b)) => a.min(b),
        (a, b) => a.or(b).expect("letter occurs"),
    };
    (0..x.len())
        .map(|j| {
            let up = both(min_over(&|m| m < j, n), min_over(&|m| m >= j, 0));
            let down = both(min_over(&|m| m <= j, n), min_over(&|m| m > j, 0));
            x[j] + up - down
        })
        .collect()
}

/// The cellular crystal of a word, optionally cut down to `{Φ̃ ≥ 0}`.
#[derive(Clone, Debug)]
pub struct CellCrystal {
    pub cartan: CartanData,
    pub word: Vec<usize>,
    pub potential: Option<TropForm>,
}

impl CellCrystal {
    pub fn new(cartan: CartanData, word: Vec<usize>, potential: Option<TropForm>) -> Result<Self> {
        cartan.check_word(&word)?;
        if let Some(p) = &potential {
            if p.nvars() != word.len() {
                return Err(Error::Dimension { expected: word.len(), got: p.nvars() });
            }
        }
        Ok(CellCrystal { cartan, word, potential })
    }

    /// The cut-down crystal `B(∞)` of a potential.
    pub fn binf(cartan: CartanData, pot: &Potential) -> Result<Self> {
        Self::new(cartan, pot.word.clone(), Some(pot.trop.clone()))
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.word.len()]
    }

    /// `Φ̃(x) ≥ 0`, or always true without a potential.
    pub fn member(&self, x: &[i64]) -> bool {
        self.potential.as_ref().map_or(true, |p| p.eval(x) >= 0)
    }
}

impl Crystal for CellCrystal {
    type Elem = Vec<i64>;
    fn rank(&self) -> usize {
        self.cartan.rank()
    }
    fn wt(&self, x: &Vec<i64>) -> Vec<i64> {
        cell_wt(&self.cartan, &self.word, x)
    }
    fn eps(&self, x: &Vec<i64>, i: usize) -> ExtInt {
        cell_eps(&self.cartan, &self.word, x, i)
    }
    fn e(&self, x: &Vec<i64>, i: usize) -> Option<Vec<i64>> {
        cell_step(&self.cartan, &self.word, x, i, Step::Raise, self.potential.as_ref())
    }
    fn f(&self, x: &Vec<i64>, i: usize) -> Option<Vec<i64>> {
        cell_step(&self.cartan, &self.word, x, i, Step::Lower, self.potential.as_ref())
    }
    fn label(&self, x: &Vec<i64>) -> String {
        format!("{x:?}")
    }
}

/// Where a potential's forms came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Closed-form minors for the canonical word.
    Catalog,
    /// Minors computed from the matrix model.
    Minors,
    /// Only the lowest-term monomial of each minor; a partial potential.
    LowestTerms,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Catalog => "catalog",
            Source::Minors => "minor-oracle",
            Source::LowestTerms => "lowest-terms-partial",
        }
    }
}

/// `Φ⁽⁺⁾ = Σ_j Δ_{w_0Λ_j, s_jΛ_j}` on `Θ⁻_word`, as Laurent polynomials per
/// `j` and tropicalized.
#[derive(Clone, Debug)]
pub struct Potential {
    pub word: Vec<usize>,
    /// `minors[j-1]` is `Δ_{w_0Λ_j, s_jΛ_j}`.
    pub minors: Vec<LaurentPoly>,
    pub trop: TropForm,
    pub source: Source,
}

impl Potential {
    fn from_minors(word: Vec<usize>, minors: Vec<LaurentPoly>, source: Source) -> Result<Self> {
        let n = word.len();
        let mut forms = Vec::new();
        for m in &minors {
            forms.extend(m.tropicalize()?.forms().cloned());
        }
        Ok(Potential { word, minors, trop: TropForm::new(n, forms), source })
    }

    /// The closed-form potential for the canonical word of a classical type or `G_2`.
    pub fn catalog(family: Family, rank: usize) -> Result<Self> {
        let word = canonical_longest_word(family, rank)?;
        let minors = (1..=rank).map(|j| catalog_minor(family, rank, j)).collect::<Result<Vec<_>>>()?;
        Self::from_minors(word, minors, Source::Catalog)
    }

    /// The potential for any reduced word of `w_0`, from the matrix model.
    pub fn from_oracle(rep: &MatrixRep, word: &[usize]) -> Result<Self> {
        let minors = (1..=rep.cartan().rank()).map(|j| minor_laurent(rep, word, j)).collect::<Result<Vec<_>>>()?;
        Self::from_minors(word.to_vec(), minors, Source::Minors)
    }

    /// The partial potential made of the lowest-term monomials only.
    pub fn lowest_terms(cartan: &CartanData, word: &[usize]) -> Result<Self> {
        cartan.check_word(word)?;
        let minors = (1..=cartan.rank()).map(|j| trail::lowest_term(cartan, word, j)).collect::<Result<Vec<_>>>()?;
        Self::from_minors(word.to_vec(), minors, Source::LowestTerms)
    }

    pub fn is_partial(&self) -> bool {
        self.source == Source::LowestTerms
    }

    /// `Φ⁽⁺⁾` as one Laurent polynomial.
    pub fn laurent(&self) -> LaurentPoly {
        self.minors.iter().fold(LaurentPoly::zero(self.word.len()), |acc, m| &acc + m)
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        self.trop.eval(x)
    }

    /// `x ∈ B(∞)`, i.e. `Φ̃(x) ≥ 0`.
    pub fn member(&self, x: &[i64]) -> bool {
        self.trop.eval(x) >= 0
    }
}

/// `Φ̃(x) ≥ 0`.
pub fn binf_member(x: &[i64], pot: &Potential) -> Result<bool> {
    if x.len() != pot.word.len() {
        return Err(Error::Dimension { expected: pot.word.len(), got: x.len() });
    }
    Ok(pot.member(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystalcore::check_axioms;
    use crate::sample::{int_vec, rng};

    fn a2() -> CartanData {
        CartanData::new(Family::A, 2).unwrap()
    }

    #[test]
    fn structure_maps() {
        let c = a2();
        let w = [1, 2, 1];
        assert_eq!(cell_wt(&c, &w, &[1, 0, 0]), vec![-2, 1]);
        assert_eq!(cell_eps(&c, &w, &[0, 0, 1], 1), ExtInt::Fin(2));
        assert_eq!(cell_eps(&c, &[1, 1], &[0, 0], 2), ExtInt::NegInf);
        // from 0 the first occurrence moves
        assert_eq!(cell_step(&c, &w, &[0, 0, 0], 1, Step::Lower, None), Some(vec![1, 0, 0]));
    }

    #[test]
    fn cutoff_and_membership() {
        let pot = Potential::catalog(Family::A, 2).unwrap();
        assert_eq!(pot.trop, TropForm::new(3, [vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, -1]]));
        assert!(pot.member(&[0, 0, 0]));
        assert!(pot.member(&[1, 1, 1]));
        assert!(!pot.member(&[0, 0, 1]));
        assert_eq!(cell_step(&a2(), &[1, 2, 1], &[0, 0, 0], 1, Step::Raise, Some(&pot.trop)), None);
    }

    #[test]
    fn closed_power_matches_steps() {
        let mut r = rng(5);
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::B, 3)] {
            let c = CartanData::new(f, n).unwrap();
            let w = canonical_longest_word(f, n).unwrap();
            for _ in 0..300 {
                let x = int_vec(&mut r, w.len(), -4, 4);
                for i in 1..=n {
                    let up = cell_step(&c, &w, &x, i, Step::Raise, None).unwrap();
                    let down = cell_step(&c, &w, &x, i, Step::Lower, None).unwrap();
                    assert_eq!(cell_e_pow(&c, &w, &x, i, 1), up);
                    assert_eq!(cell_e_pow(&c, &w, &x, i, -1), down);
                    assert_eq!(cell_e_pow(&c, &w, &x, i, 0), x);
                    let two = cell_e_pow(&c, &w, &cell_e_pow(&c, &w, &x, i, 2), i, -3);
                    assert_eq!(two, cell_e_pow(&c, &w, &x, i, -1));
                }
            }
        }
    }

    #[test]
    fn axioms_hold_for_the_dual() {
        let mut r = rng(6);
        for (f, n) in [(Family::B, 2), (Family::G, 2), (Family::A, 3)] {
            let c = CartanData::new(f, n).unwrap();
            let cc = CellCrystal::new(c.clone(), canonical_longest_word(f, n).unwrap(), None).unwrap();
            for _ in 0..200 {
                let x = int_vec(&mut r, cc.word.len(), -3, 3);
                check_axioms(&cc, &c.dual(), &x).unwrap();
            }
        }
    }

    #[test]
    fn triple_a2_c2() {
        for (f, n) in [(Family::A, 2), (Family::C, 2)] {
            let c = CartanData::new(f, n).unwrap();
            let pot = Potential::catalog(f, n).unwrap();
            let r = binf::triple_check(&c, &pot, 4).unwrap();
            assert!(r.passed(), "{f}{n}: {r:?}");
        }
    }
}
