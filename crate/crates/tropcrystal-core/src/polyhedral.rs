//! The polyhedral realization of `B(∞)` inside `Z^∞_ι`.
//!
//! A point `x = (…, x_2, x_1)` is stored as the finite vector
//! `[x_1, x_2, …]` with trailing zeros trimmed. Positions are 1-based in
//! the API, matching `ι = …, i_2, i_1`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::crystalcore::{Crystal, ExtInt};
use crate::error::{Error, Result};
use crate::rootdata::CartanData;

/// An infinite index sequence `ι`: a finite prefix followed by a cycle
/// repeated forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iota {
    rank: usize,
    prefix: Vec<usize>,
    cycle: Vec<usize>,
}

impl Iota {
    /// Every letter must occur in the cycle and neighbouring letters must
    /// differ, including across the prefix/cycle seam and the wrap-around.
    pub fn new(cartan: &CartanData, prefix: Vec<usize>, cycle: Vec<usize>) -> Result<Self> {
        cartan.check_word(&prefix)?;
        cartan.check_word(&cycle)?;
        let rank = cartan.rank();
        if cycle.is_empty() {
            return Err(Error::Invalid("ι needs a non-empty cycle".into()));
        }
        if let Some(i) = (1..=rank).find(|i| !cycle.contains(i)) {
            return Err(Error::Invalid(format!("letter {i} does not recur in ι")));
        }
        let iota = Iota { rank, prefix, cycle };
        let span = iota.prefix.len() + iota.cycle.len() + 1;
        if let Some(k) = (1..span).find(|&k| iota.at(k) == iota.at(k + 1)) {
            return Err(Error::Invalid(format!("ι repeats letter {} at positions {k}, {}", iota.at(k), k + 1)));
        }
        Ok(iota)
    }

    pub fn cyclic(cartan: &CartanData, cycle: Vec<usize>) -> Result<Self> {
        Iota::new(cartan, Vec::new(), cycle)
    }

    /// `word` followed by the first cycle, in lexicographic order of the
    /// permutations of `1..=n`, that makes a valid sequence.
    pub fn after_word(cartan: &CartanData, word: &[usize]) -> Result<Self> {
        let n = cartan.rank();
        let mut perm: Vec<usize> = (1..=n).collect();
        loop {
            if let Ok(iota) = Iota::new(cartan, word.to_vec(), perm.clone()) {
                return Ok(iota);
            }
            if !next_permutation(&mut perm) {
                return Err(Error::Invalid("no cycle extends the word to a valid ι".into()));
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// `i_k` for `k ≥ 1`.
    pub fn at(&self, k: usize) -> usize {
        assert!(k >= 1, "ι is indexed from 1");
        let p = self.prefix.len();
        if k <= p {
            self.prefix[k - 1]
        } else {
            self.cycle[(k - p - 1) % self.cycle.len()]
        }
    }

    /// `k⁺`; always exists.
    pub fn kplus(&self, k: usize) -> usize {
        let i = self.at(k);
        (k + 1..).find(|&l| self.at(l) == i).expect("letter recurs in the cycle")
    }

    /// `k⁻`, or 0 for a first occurrence.
    pub fn kminus(&self, k: usize) -> usize {
        let i = self.at(k);
        (1..k).rev().find(|&l| self.at(l) == i).unwrap_or(0)
    }

    /// Length past which every letter has occurred again after position `s`.
    pub fn reach(&self, s: usize) -> usize {
        s.max(self.prefix.len()) + self.cycle.len()
    }

    pub fn letters(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|k| self.at(k)).collect()
    }
}

impl fmt::Display for Iota {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &[usize]| w.iter().map(|i| format!("{i}")).collect::<Vec<_>>().join(",");
        if self.prefix.is_empty() {
            write!(f, "({})^∞", show(&self.cycle))
        } else {
            write!(f, "{},({})^∞", show(&self.prefix), show(&self.cycle))
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Drops trailing zeros so that equal points compare equal.
pub fn trim(mut x: Vec<i64>) -> Vec<i64> {
    while x.last() == Some(&0) {
        x.pop();
    }
    x
}

/// A finitely supported linear form `Σ φ_k x_k`; `coeffs[k-1] = φ_k`.
///
/// Coefficients stay integral: the coordinate forms and every `β_k` are
/// integral and `S_k` only subtracts integer multiples of them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm { coeffs: Vec::new() }
    }

    /// The coordinate form `x_k`.
    pub fn coordinate(k: usize) -> Self {
        let mut coeffs = vec![0; k];
        coeffs[k - 1] = 1;
        LinearForm { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        LinearForm { coeffs: trim(coeffs) }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `φ_k`.
    pub fn get(&self, k: usize) -> i64 {
        self.coeffs.get(k - 1).copied().unwrap_or(0)
    }

    /// Largest `k` with `φ_k ≠ 0`.
    pub fn support(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &LinearForm, c: i64) -> LinearForm {
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (1..=n).map(|k| self.get(k) + c * other.get(k)).collect();
        LinearForm::from_coeffs(out)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "x{}", k + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// The crystal `Z^∞_ι`.
#[derive(Clone, Debug)]
pub struct Polyhedral {
    pub cartan: CartanData,
    pub iota: Iota,
}

impl Polyhedral {
    pub fn new(cartan: CartanData, iota: Iota) -> Result<Self> {
        if iota.rank() != cartan.rank() {
            return Err(Error::Dimension { expected: cartan.rank(), got: iota.rank() });
        }
        Ok(Polyhedral { cartan, iota })
    }

    /// `σ_k(x) = x_k + Σ_{j>k} ⟨h_{i_k}, α_{i_j}⟩ x_j`.
    pub fn sigma_k(&self, x: &[i64], k: usize) -> i64 {
        let ik = self.iota.at(k);
        let x_at = |j: usize| x.get(j - 1).copied().unwrap_or(0);
        x_at(k) + (k + 1..=x.len()).map(|j| self.cartan.a(ik, self.iota.at(j)) * x_at(j)).sum::<i64>()
    }

    /// `(σ^{(i)}, m_f, m_e)`. The scan stops one cycle past the support,
    /// where `σ_k = 0` is reached for every letter; `m_e` is only
    /// meaningful when `σ^{(i)} > 0`.
    pub fn sigma_i(&self, x: &[i64], i: usize) -> (i64, usize, usize) {
        let reach = self.iota.reach(x.len());
        let mut best = i64::MIN;
        let (mut mf, mut me) = (0, 0);
        for k in (1..=reach).filter(|&k| self.iota.at(k) == i) {
            let s = self.sigma_k(x, k);
            if s > best {
                best = s;
                mf = k;
                me = k;
            } else if s == best {
                me = k;
            }
        }
        (best, mf, me)
    }

    /// `ẽ_i x`, or `None` for the absorbing 0.
    pub fn zinf_e(&self, x: &[i64], i: usize) -> Option<Vec<i64>> {
        let (s, _, me) = self.sigma_i(x, i);
        if s <= 0 {
            return None;
        }
        let mut out = x.to_vec();
        out[me - 1] -= 1;
        Some(trim(out))
    }

    pub fn zinf_f(&self, x: &[i64], i: usize) -> Vec<i64> {
        let (_, mf, _) = self.sigma_i(x, i);
        let mut out = x.to_vec();
        if out.len() < mf {
            out.resize(mf, 0);
        }
        out[mf - 1] += 1;
        trim(out)
    }

    /// `β_k = x_k + Σ_{k<j<k⁺} ⟨h_{i_k}, α_{i_j}⟩ x_j + x_{k⁺}`, with `β_0 = 0`.
    pub fn beta_form(&self, k: usize) -> LinearForm {
        if k == 0 {
            return LinearForm::zero();
        }
        let kp = self.iota.kplus(k);
        let ik = self.iota.at(k);
        let mut c = vec![0i64; kp];
        c[k - 1] = 1;
        for j in k + 1..kp {
            c[j - 1] = self.cartan.a(ik, self.iota.at(j));
        }
        c[kp - 1] = 1;
        LinearForm::from_coeffs(c)
    }

    /// The piecewise-linear operator `S_k`.
    pub fn s_k(&self, phi: &LinearForm, k: usize) -> LinearForm {
        let c = phi.get(k);
        if c > 0 {
            phi.add_scaled(&self.beta_form(k), -c)
        } else {
            phi.add_scaled(&self.beta_form(self.iota.kminus(k)), -c)
        }
    }

    /// Converts a point to the finite tensor `B_{i_L} ⊗ ⋯ ⊗ B_{i_1}`
    /// (leftmost factor first): `x_k ↦ (−x_k)_{i_k}`.
    pub fn to_tensor(&self, x: &[i64], len: usize) -> Vec<i64> {
        (1..=len).rev().map(|k| -x.get(k - 1).copied().unwrap_or(0)).collect()
    }

    /// Colours of the tensor used by [`Polyhedral::to_tensor`].
    pub fn tensor_colours(&self, len: usize) -> Vec<usize> {
        (1..=len).rev().map(|k| self.iota.at(k)).collect()
    }
}

impl Crystal for Polyhedral {
    type Elem = Vec<i64>;
    fn rank(&self) -> usize {
        self.cartan.rank()
    }
    /// `⟨h_j, wt x⟩ = −Σ_k x_k ⟨h_j, α_{i_k}⟩`.
    fn wt(&self, x: &Vec<i64>) -> Vec<i64> {
        (1..=self.rank())
            .map(|j| -x.iter().enumerate().map(|(k, &v)| v * self.cartan.a(j, self.iota.at(k + 1))).sum::<i64>())
            .collect()
    }
    fn eps(&self, x: &Vec<i64>, i: usize) -> ExtInt {
        ExtInt::Fin(self.sigma_i(x, i).0)
    }
    fn e(&self, x: &Vec<i64>, i: usize) -> Option<Vec<i64>> {
        self.zinf_e(x, i)
    }
    fn f(&self, x: &Vec<i64>, i: usize) -> Option<Vec<i64>> {
        Some(self.zinf_f(x, i))
    }
    fn label(&self, x: &Vec<i64>) -> String {
        let parts: Vec<String> = x.iter().rev().map(|v| format!("{v}")).collect();
        format!("(…,0,{})", parts.join(","))
    }
}

/// Limits for the `S`-closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XiLimits {
    /// Forms are kept only while their support stays in `1..=window`.
    pub window: usize,
    pub max_forms: usize,
    /// Longest chain `S_{j_l} ⋯ S_{j_1}` explored.
    pub max_steps: usize,
}

impl XiLimits {
    pub fn with_window(window: usize) -> Self {
        XiLimits { window, max_forms: 10_000, max_steps: 50 }
    }
}

/// A windowed piece of `Ξ_ι`.
#[derive(Clone, Debug)]
pub struct Xi {
    pub forms: Vec<LinearForm>,
    pub limits: XiLimits,
    /// The closure finished without hitting `max_forms` or `max_steps`.
    pub stabilized: bool,
    /// Images that left the window and were discarded.
    pub dropped: usize,
    /// Positions `k` with `k⁻ = 0` where some form has a negative coefficient.
    pub positivity_failures: Vec<usize>,
}

impl Xi {
    /// Whether the positivity hypothesis of the realization theorem holds
    /// on the generated forms.
    pub fn positivity(&self) -> bool {
        self.positivity_failures.is_empty()
    }

    /// `φ(x) ≥ 0` for every generated form.
    pub fn contains(&self, x: &[i64]) -> bool {
        self.forms.iter().all(|f| f.eval(x) >= 0)
    }

    /// The forms whose support lies in `1..=s`.
    pub fn restricted(&self, s: usize) -> BTreeSet<LinearForm> {
        self.forms.iter().filter(|f| f.support() <= s).cloned().collect()
    }
}

/// Closure of the coordinate forms `x_1, …, x_W` under `S_1, …, S_W`.
pub fn generate_xi(p: &Polyhedral, limits: XiLimits) -> Xi {
    let w = limits.window;
    let mut seen: BTreeSet<LinearForm> = BTreeSet::new();
    let mut forms = Vec::new();
    let mut queue = VecDeque::new();
    let mut stabilized = true;
    let mut dropped = 0;
    for k in 1..=w {
        let f = LinearForm::coordinate(k);
        seen.insert(f.clone());
        forms.push(f.clone());
        queue.push_back((f, 0usize));
    }
    'outer: while let Some((phi, depth)) = queue.pop_front() {
        for k in 1..=phi.support() {
            if phi.get(k) == 0 {
                continue;
            }
            let img = p.s_k(&phi, k);
            if img.support() > w {
                dropped += 1;
                continue;
            }
            if img.is_zero() || seen.contains(&img) {
                continue;
            }
            if depth + 1 > limits.max_steps || forms.len() >= limits.max_forms {
                stabilized = false;
                break 'outer;
            }
            seen.insert(img.clone());
            forms.push(img.clone());
            queue.push_back((img, depth + 1));
        }
    }
    let positivity_failures = (1..=w)
        .filter(|&k| p.iota.kminus(k) == 0 && forms.iter().any(|f| f.get(k) < 0))
        .collect();
    Xi { forms, limits, stabilized, dropped, positivity_failures }
}

/// Membership in `Σ_ι`: `φ(x) ≥ 0` for every form of `xi`.
pub fn sigma_membership(xi: &Xi, x: &[i64]) -> Result<bool> {
    let s = trim(x.to_vec()).len();
    if s > xi.limits.window {
        return Err(Error::Dimension { expected: xi.limits.window, got: s });
    }
    Ok(xi.contains(x))
}

/// `Ξ_ι` for points supported in `1..=s`: windows of width
/// `reach(s) + |cycle|` and one cycle wider must agree on forms supported
/// in `1..=reach(s)`, otherwise the result is flagged as not stabilized.
pub fn xi_for_support(p: &Polyhedral, s: usize) -> Xi {
    let c = p.iota.cycle().len();
    let inner = p.iota.reach(s);
    let mut a = generate_xi(p, XiLimits::with_window(inner + c));
    let b = generate_xi(p, XiLimits::with_window(inner + 2 * c));
    if a.restricted(inner) != b.restricted(inner) {
        a.stabilized = false;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystalcore::check_axioms;
    use crate::rootdata::Family;
    use crate::sample;
    use rand::Rng;

    fn a2() -> Polyhedral {
        let c = CartanData::new(Family::A, 2).unwrap();
        let iota = Iota::cyclic(&c, vec![1, 2]).unwrap();
        Polyhedral::new(c, iota).unwrap()
    }

    #[test]
    fn iota_validation() {
        let a1 = CartanData::new(Family::A, 1).unwrap();
        assert!(Iota::cyclic(&a1, vec![1]).is_err());
        let a2 = CartanData::new(Family::A, 2).unwrap();
        assert!(Iota::cyclic(&a2, vec![1, 1, 2]).is_err());
        assert!(Iota::new(&a2, vec![1, 2, 1], vec![1, 2]).is_err());
        let i = Iota::new(&a2, vec![1, 2, 1], vec![2, 1]).unwrap();
        assert_eq!(i.letters(6), vec![1, 2, 1, 2, 1, 2]);
        assert_eq!(i.kplus(2), 4);
        assert_eq!(i.kminus(2), 0);
        assert_eq!(Iota::after_word(&a2, &[1, 2, 1]).unwrap(), i);
    }

    #[test]
    fn sigma_and_operators() {
        let p = a2();
        for i in 1..=2 {
            assert_eq!(p.sigma_i(&[], i).0, 0);
            assert_eq!(p.zinf_e(&[], i), None);
        }
        let (s, mf, me) = p.sigma_i(&[1], 1);
        assert_eq!((p.sigma_k(&[1], 1), s, mf, me), (1, 1, 1, 1));
        assert_eq!(p.zinf_f(&[], 1), vec![1]);
        assert_eq!(p.zinf_f(&[1], 2), vec![1, 1]);
    }

    #[test]
    fn beta_and_s() {
        let p = a2();
        assert_eq!(p.beta_form(1), LinearForm::from_coeffs(vec![1, -1, 1]));
        assert_eq!(p.s_k(&LinearForm::coordinate(1), 1), LinearForm::from_coeffs(vec![0, 1, -1]));
        assert_eq!(p.s_k(&LinearForm::coordinate(2), 1), LinearForm::coordinate(2));
        let c = CartanData::from_matrix(Family::A, &[vec![2, 0], vec![0, 2]]).unwrap();
        let iota = Iota::cyclic(&c, vec![1, 2]).unwrap();
        let q = Polyhedral::new(c, iota).unwrap();
        assert_eq!(q.beta_form(1), LinearForm::from_coeffs(vec![1, 0, 1]));
        assert_eq!(format!("{}", p.beta_form(1)), "x1 - x2 + x3");
    }

    #[test]
    fn axioms_on_random_points() {
        let p = a2();
        let mut rng = sample::rng(sample::DEFAULT_SEED);
        for _ in 0..2000 {
            let n = rng.gen_range(0..6);
            let x = trim(sample::int_vec(&mut rng, n, -3, 3));
            check_axioms(&p, &p.cartan, &x).unwrap();
            for i in 1..=2 {
                let s = p.sigma_i(&x, i).0;
                assert!(s >= 0);
                assert_eq!(p.sigma_i(&p.zinf_f(&x, i), i).0, s + 1);
            }
        }
    }

    #[test]
    fn a2_xi() {
        let p = a2();
        let xi = xi_for_support(&p, 3);
        assert!(xi.stabilized);
        assert!(xi.positivity());
        assert!(xi.contains(&[]));
        assert!(xi.contains(&[0, 1, 1]));
        assert!(!xi.contains(&[0, 0, 1]));
        assert!(!xi.contains(&[0, 0, 0, 1]));
        assert!(xi.forms.contains(&LinearForm::from_coeffs(vec![0, 1, -1])));
    }
}
