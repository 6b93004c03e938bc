//! Finite-type Cartan data, weights and roots, and reduced-word combinatorics.
//!
//! Letters of words and Cartan indices are 1-based, as in the usual
//! notation `i_1 i_2 … i_N`. Coordinate vectors are 0-based arrays whose
//! slot `i - 1` belongs to letter `i`.
//!
//! Node numbering per family (`a[i][j] = ⟨h_i, α_j⟩`):
//!
//! | family | numbering |
//! |--------|-----------|
//! | A_n    | chain 1–2–…–n |
//! | B_n    | chain, node n short: a_{n,n-1} = -2 |
//! | C_n    | chain, node n long: a_{n-1,n} = -2 |
//! | D_n    | chain 1–…–(n-2), nodes n-1 and n both attached to n-2 |
//! | E_6    | chain 1–2–3–4–5, node 6 attached to 3 |
//! | E_7    | chain 1–…–6, node 7 attached to 4 |
//! | E_8    | chain 1–…–7, node 8 attached to 5 |
//! | F_4    | chain, a_{3,2} = -2 (nodes 1,2 long) |
//! | G_2    | a_{1,2} = -1, a_{2,1} = -3 (node 1 long, node 2 short) |
//!
//! The exceptional numberings are the ones under which the fixed longest
//! words of [`canonical_longest_word`] are reduced and the tabulated
//! lowest-term monomials of the trail section come out as stated.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Cartan–Killing family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    /// Whether `(self, rank)` names a finite type in the conventions used here.
    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A vector in the fundamental-weight basis `{Λ_i}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec {
    pub coords: Vec<i64>,
}

/// A vector in the simple-root basis `{α_i}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVec {
    pub coords: Vec<i64>,
}

impl RootVec {
    pub fn zero(rank: usize) -> Self {
        RootVec { coords: vec![0; rank] }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut r = Self::zero(rank);
        r.coords[i - 1] = 1;
        r
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coords.iter().all(|&c| c <= 0) && self.coords.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Self {
        RootVec { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// Finite-type Cartan matrix with its family label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanData {
    family: Family,
    rank: usize,
    a: Vec<i64>,
}

impl CartanData {
    /// The Cartan matrix of the named finite type (node numbering in the module docs).
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.valid_rank(rank) {
            return Err(Error::InvalidType { family: family.letter(), rank });
        }
        let n = rank;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            a[i * n + i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[(i - 1) * n + (j - 1)] = aij;
            a[(j - 1) * n + (i - 1)] = aji;
        };
        match family {
            Family::A => {
                for i in 1..n {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::B => {
                for i in 1..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 1, n, -1, -2);
            }
            Family::C => {
                for i in 1..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 1, n, -2, -1);
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 2, n, -1, -1);
            }
            Family::E => {
                let (chain, branch_at) = match n {
                    6 => (5, 3),
                    7 => (6, 4),
                    _ => (7, 5),
                };
                for i in 1..chain {
                    link(i, i + 1, -1, -1);
                }
                link(branch_at, n, -1, -1);
            }
            Family::F => {
                link(1, 2, -1, -1);
                link(2, 3, -1, -2);
                link(3, 4, -1, -1);
            }
            Family::G => link(1, 2, -1, -3),
        }
        Ok(CartanData { family, rank, a })
    }

    /// Builds Cartan data from an explicit matrix (rows `a[i][j] = ⟨h_i, α_j⟩`).
    pub fn from_matrix(family: Family, rows: &[Vec<i64>]) -> Result<Self> {
        let rank = rows.len();
        let mut a = Vec::with_capacity(rank * rank);
        for row in rows {
            if row.len() != rank {
                return Err(Error::Dimension { expected: rank, got: row.len() });
            }
            a.extend_from_slice(row);
        }
        let c = CartanData { family, rank, a };
        for i in 1..=rank {
            if c.a(i, i) != 2 {
                return Err(Error::Invalid(format!("diagonal entry a({i},{i}) != 2")));
            }
            for j in 1..=rank {
                if i != j && (c.a(i, j) > 0 || (c.a(i, j) == 0) != (c.a(j, i) == 0)) {
                    return Err(Error::Invalid(format!("bad off-diagonal pair at ({i},{j})")));
                }
            }
        }
        Ok(c)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a_{ij} = ⟨h_i, α_j⟩` with 1-based indices.
    #[inline]
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[(i - 1) * self.rank + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.rank).map(|i| (1..=self.rank).map(|j| self.a(i, j)).collect()).collect()
    }

    /// Display name such as `C3`.
    pub fn name(&self) -> alloc::string::String {
        format!("{}{}", self.family, self.rank)
    }

    /// Langlands dual: transposed matrix, `B ↔ C`.
    pub fn dual(&self) -> CartanData {
        let n = self.rank;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = self.a[j * n + i];
            }
        }
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        CartanData { family, rank: n, a }
    }

    /// `m_{ij}` of the braid relation: 2, 3, 4, 6 for `a_ij a_ji = 0,1,2,3`.
    pub fn braid_length(&self, i: usize, j: usize) -> usize {
        match self.a(i, j) * self.a(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        }
    }

    pub fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::LetterOutOfRange { letter: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        word.iter().try_for_each(|&i| self.check_letter(i))
    }

    /// `α_j` expressed in fundamental weights: `α_j = Σ_i a_{ij} Λ_i`.
    pub fn alpha_weight(&self, j: usize) -> WeightVec {
        WeightVec { coords: (1..=self.rank).map(|i| self.a(i, j)).collect() }
    }

    pub fn root_to_weight(&self, r: &RootVec) -> WeightVec {
        let mut w = vec![0; self.rank];
        for (j, &c) in r.coords.iter().enumerate() {
            if c != 0 {
                for (i, wi) in w.iter_mut().enumerate() {
                    *wi += c * self.a(i + 1, j + 1);
                }
            }
        }
        WeightVec { coords: w }
    }

    /// `⟨h_i, β⟩` for a root-coordinate vector `β`.
    pub fn pair_root(&self, i: usize, r: &RootVec) -> i64 {
        r.coords.iter().enumerate().map(|(j, &c)| c * self.a(i, j + 1)).sum()
    }

    /// `s_i λ = λ − ⟨h_i, λ⟩ α_i` on weights.
    pub fn reflect(&self, i: usize, w: &WeightVec) -> WeightVec {
        let k = w.coords[i - 1];
        let mut out = w.clone();
        if k != 0 {
            for (t, o) in out.coords.iter_mut().enumerate() {
                *o -= k * self.a(t + 1, i);
            }
        }
        out
    }

    /// `s_i β = β − ⟨h_i, β⟩ α_i` on root coordinates.
    pub fn reflect_root(&self, i: usize, r: &RootVec) -> RootVec {
        let k = self.pair_root(i, r);
        let mut out = r.clone();
        out.coords[i - 1] -= k;
        out
    }

    /// Applies `w = s_{i_1} ⋯ s_{i_k}` to a weight (rightmost reflection first).
    pub fn act_weight(&self, word: &[usize], w: &WeightVec) -> WeightVec {
        word.iter().rev().fold(w.clone(), |acc, &i| self.reflect(i, &acc))
    }

    /// Applies `w = s_{i_1} ⋯ s_{i_k}` to a root-coordinate vector.
    pub fn act_root(&self, word: &[usize], r: &RootVec) -> RootVec {
        word.iter().rev().fold(r.clone(), |acc, &i| self.reflect_root(i, &acc))
    }

    /// `ρ = Σ Λ_i`; regular, so `w ρ` determines `w`.
    pub fn rho(&self) -> WeightVec {
        WeightVec { coords: vec![1; self.rank] }
    }

    /// All positive roots, sorted by height then coordinates.
    pub fn positive_roots(&self) -> Vec<RootVec> {
        let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        let mut queue: VecDeque<RootVec> = VecDeque::new();
        for i in 1..=self.rank {
            let r = RootVec::simple(self.rank, i);
            seen.insert(r.coords.clone(), ());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for i in 1..=self.rank {
                let s = self.reflect_root(i, &r);
                if s.is_positive() && !seen.contains_key(&s.coords) {
                    seen.insert(s.coords.clone(), ());
                    queue.push_back(s);
                }
            }
        }
        let mut out: Vec<RootVec> = seen.into_keys().map(|coords| RootVec { coords }).collect();
        out.sort_by_key(|r| (r.coords.iter().sum::<i64>(), r.coords.clone()));
        out
    }

    /// `|Δ₊|`, the length of the longest element.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

/// A reduced word of some Weyl group element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

impl ReducedWord {
    /// Validates reducedness.
    pub fn new(cartan: &CartanData, letters: Vec<usize>) -> Result<Self> {
        cartan.check_word(&letters)?;
        if !is_reduced(cartan, &letters) {
            return Err(Error::NotReduced);
        }
        Ok(ReducedWord { letters })
    }

    /// Validates that the word is a reduced expression of `w_0`.
    pub fn longest(cartan: &CartanData, letters: Vec<usize>) -> Result<Self> {
        let w = Self::new(cartan, letters)?;
        if w.letters.len() != cartan.num_positive_roots() {
            return Err(Error::NotLongest);
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter `i_k` for 1-based `k`.
    pub fn at(&self, k: usize) -> usize {
        self.letters[k - 1]
    }
}

/// The roots `s_{i_N} ⋯ s_{i_{k+1}}(α_{i_k})`, k = 1..N, without validation.
fn suffix_roots(cartan: &CartanData, word: &[usize]) -> Vec<RootVec> {
    let n = word.len();
    let mut out = vec![RootVec::zero(cartan.rank()); n];
    for k in 0..n {
        let mut r = RootVec::simple(cartan.rank(), word[k]);
        for &i in &word[k + 1..] {
            r = cartan.reflect_root(i, &r);
        }
        out[k] = r;
    }
    out
}

/// A word is reduced iff every root `s_{i_N} ⋯ s_{i_{k+1}}(α_{i_k})` is positive.
pub fn is_reduced(cartan: &CartanData, word: &[usize]) -> bool {
    if cartan.check_word(word).is_err() {
        return false;
    }
    suffix_roots(cartan, word).iter().all(RootVec::is_positive)
}

/// Reduced and of length `|Δ₊|`.
pub fn is_longest(cartan: &CartanData, word: &[usize]) -> bool {
    word.len() == cartan.num_positive_roots() && is_reduced(cartan, word)
}

/// `(α^{(1)}, …, α^{(N)})` with `α^{(k)} = s_{i_N} ⋯ s_{i_{k+1}}(α_{i_k})`, using the
/// reflections of `cartan`.
pub fn positive_roots_from_word(cartan: &CartanData, word: &[usize]) -> Result<Vec<RootVec>> {
    cartan.check_word(word)?;
    if word.len() != cartan.num_positive_roots() {
        return Err(Error::NotLongest);
    }
    let roots = suffix_roots(cartan, word);
    if !roots.iter().all(RootVec::is_positive) {
        return Err(Error::NotReduced);
    }
    Ok(roots)
}

/// The fixed reduced longest word of each type.
///
/// A_n is the staircase `1..n, 1..n-1, …, 1`; B_n and C_n use `(1..n)^n`;
/// D_n uses `(1..n)^{n-1}`; G_2 uses `121212`; E_7, E_8, F_4 use powers of the
/// Coxeter word; E_6 is stored letter by letter.
pub fn canonical_longest_word(family: Family, rank: usize) -> Result<Vec<usize>> {
    if !family.valid_rank(rank) {
        return Err(Error::InvalidType { family: family.letter(), rank });
    }
    let cycle = |n: usize, times: usize| -> Vec<usize> {
        (0..times).flat_map(|_| 1..=n).collect()
    };
    Ok(match family {
        Family::A => (0..rank).flat_map(|b| 1..=rank - b).collect(),
        Family::B | Family::C => cycle(rank, rank),
        Family::D => cycle(rank, rank - 1),
        Family::G => vec![1, 2, 1, 2, 1, 2],
        Family::F => cycle(4, 6),
        Family::E => match rank {
            6 => E6_WORD.to_vec(),
            7 => cycle(7, 9),
            _ => cycle(8, 15),
        },
    })
}

/// `((1,…,6)^4, 1,2,3,4,6, 1,2,3,6, 1,2, 1)`.
const E6_WORD: [usize; 36] = [
    1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 6, 1, 2, 3,
    6, 1, 2, 1,
];

/// `k⁺ = min{l > k : i_l = i_k}` (1-based), if any.
pub fn kplus(word: &[usize], k: usize) -> Option<usize> {
    let i = word[k - 1];
    (k + 1..=word.len()).find(|&l| word[l - 1] == i)
}

/// `k⁻ = max{l < k : i_l = i_k}` (1-based), or 0 for a first occurrence.
pub fn kminus(word: &[usize], k: usize) -> usize {
    let i = word[k - 1];
    (1..k).rev().find(|&l| word[l - 1] == i).unwrap_or(0)
}

/// One local rewrite `i j i … → j i j …` of length `m_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidMove {
    /// 1-based start of the pattern.
    pub position: usize,
    /// `a_ij a_ji ∈ {0,1,2,3}`.
    pub class: u8,
    /// Leading letter of the pattern before the move.
    pub from: usize,
    /// Leading letter after the move.
    pub to: usize,
}

impl BraidMove {
    pub fn len(&self) -> usize {
        match self.class {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The move undoing this one.
    pub fn inverse(&self) -> BraidMove {
        BraidMove { position: self.position, class: self.class, from: self.to, to: self.from }
    }
}

/// Finds the move at `pos` (1-based) if the letters there form an
/// alternating pattern of the right length.
pub fn move_at(cartan: &CartanData, word: &[usize], pos: usize) -> Option<BraidMove> {
    if pos == 0 || pos >= word.len() {
        return None;
    }
    let i = word[pos - 1];
    let j = word[pos];
    if i == j {
        return None;
    }
    let m = cartan.braid_length(i, j);
    if pos - 1 + m > word.len() {
        return None;
    }
    for t in 0..m {
        let expect = if t % 2 == 0 { i } else { j };
        if word[pos - 1 + t] != expect {
            return None;
        }
    }
    Some(BraidMove { position: pos, class: (cartan.a(i, j) * cartan.a(j, i)) as u8, from: i, to: j })
}

/// Rewrites a word by one braid move.
pub fn apply_move(cartan: &CartanData, word: &[usize], mv: &BraidMove) -> Result<Vec<usize>> {
    match move_at(cartan, word, mv.position) {
        Some(found) if found.from == mv.from && found.to == mv.to => {
            let mut out = word.to_vec();
            for t in 0..mv.len() {
                out[mv.position - 1 + t] = if t % 2 == 0 { mv.to } else { mv.from };
            }
            Ok(out)
        }
        _ => Err(Error::InvalidMove(format!(
            "no {}{}-pattern at position {}",
            mv.from, mv.to, mv.position
        ))),
    }
}

/// Visited-word cap for [`word_graph_path`].
pub const WORD_GRAPH_CAP: usize = 1_000_000;

/// Shortest sequence of braid moves turning `from` into `to` (breadth-first).
pub fn word_graph_path(cartan: &CartanData, from: &[usize], to: &[usize]) -> Result<Vec<BraidMove>> {
    cartan.check_word(from)?;
    cartan.check_word(to)?;
    if !is_reduced(cartan, from) || !is_reduced(cartan, to) {
        return Err(Error::NotReduced);
    }
    let rho = cartan.rho();
    if from.len() != to.len() || cartan.act_weight(from, &rho) != cartan.act_weight(to, &rho) {
        return Err(Error::NotEquivalent);
    }
    if from == to {
        return Ok(Vec::new());
    }
    let mut parent: BTreeMap<Vec<usize>, Option<(Vec<usize>, BraidMove)>> = BTreeMap::new();
    parent.insert(from.to_vec(), None);
    let mut queue = VecDeque::new();
    queue.push_back(from.to_vec());
    while let Some(w) = queue.pop_front() {
        for pos in 1..w.len() {
            if let Some(mv) = move_at(cartan, &w, pos) {
                let next = apply_move(cartan, &w, &mv)?;
                if parent.contains_key(&next) {
                    continue;
                }
                parent.insert(next.clone(), Some((w.clone(), mv)));
                if next == to {
                    let mut path = Vec::new();
                    let mut cur = next;
                    while let Some(Some((prev, mv))) = parent.get(&cur) {
                        path.push(*mv);
                        cur = prev.clone();
                    }
                    path.reverse();
                    return Ok(path);
                }
                if parent.len() > WORD_GRAPH_CAP {
                    return Err(Error::Budget(format!(
                        "word graph search visited more than {WORD_GRAPH_CAP} words"
                    )));
                }
                queue.push_back(next);
            }
        }
    }
    Err(Error::NotEquivalent)
}

/// Shortest braid-move path from `from` to the nearest word satisfying `accept`.
pub fn word_graph_search(
    cartan: &CartanData,
    from: &[usize],
    accept: &dyn Fn(&[usize]) -> bool,
) -> Result<(Vec<usize>, Vec<BraidMove>)> {
    cartan.check_word(from)?;
    if !is_reduced(cartan, from) {
        return Err(Error::NotReduced);
    }
    if accept(from) {
        return Ok((from.to_vec(), Vec::new()));
    }
    let mut parent: BTreeMap<Vec<usize>, Option<(Vec<usize>, BraidMove)>> = BTreeMap::new();
    parent.insert(from.to_vec(), None);
    let mut queue = VecDeque::new();
    queue.push_back(from.to_vec());
    while let Some(w) = queue.pop_front() {
        for pos in 1..w.len() {
            let Some(mv) = move_at(cartan, &w, pos) else { continue };
            let next = apply_move(cartan, &w, &mv)?;
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((w.clone(), mv)));
            if accept(&next) {
                let mut path = Vec::new();
                let mut cur = next.clone();
                while let Some(Some((prev, mv))) = parent.get(&cur) {
                    path.push(*mv);
                    cur = prev.clone();
                }
                path.reverse();
                return Ok((next, path));
            }
            if parent.len() > WORD_GRAPH_CAP {
                return Err(Error::Budget(format!("word graph search visited more than {WORD_GRAPH_CAP} words")));
            }
            queue.push_back(next);
        }
    }
    Err(Error::NotEquivalent)
}

/// Every reduced word of the same element reachable by braid moves, in
/// breadth-first order (capped).
pub fn reduced_words_of(cartan: &CartanData, word: &[usize], cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(word.to_vec(), ());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        order.push(w.clone());
        for pos in 1..w.len() {
            if let Some(mv) = move_at(cartan, &w, pos) {
                let next = apply_move(cartan, &w, &mv)?;
                if !seen.contains_key(&next) {
                    if seen.len() >= cap {
                        return Err(Error::Budget(format!("more than {cap} reduced words")));
                    }
                    seen.insert(next.clone(), ());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(order)
}

/// One reduced word for every Weyl group element, shortest first.
pub fn weyl_group_words(cartan: &CartanData, cap: usize) -> Result<Vec<Vec<usize>>> {
    let all: Vec<usize> = (1..=cartan.rank()).collect();
    parabolic_words(cartan, &all, cap)
}

/// One reduced word for every element of the subgroup generated by `letters`.
pub fn parabolic_words(cartan: &CartanData, letters: &[usize], cap: usize) -> Result<Vec<Vec<usize>>> {
    let rho = cartan.rho();
    let mut seen: BTreeSet<WeightVec> = BTreeSet::new();
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    seen.insert(rho.clone());
    let mut head = 0;
    while head < out.len() {
        let w = out[head].clone();
        head += 1;
        for &j in letters {
            if cartan.act_root(&w, &RootVec::simple(cartan.rank(), j)).is_positive() {
                let mut next = w.clone();
                next.push(j);
                let key = cartan.act_weight(&next, &rho);
                if !seen.contains(&key) {
                    if out.len() >= cap {
                        return Err(Error::Budget(format!("Weyl group larger than {cap}")));
                    }
                    seen.insert(key);
                    out.push(next);
                }
            }
        }
    }
    Ok(out)
}

/// The unique `k` with `w_0(α_{i_1}) = −α_k`.
pub fn partner_index(cartan: &CartanData, word: &[usize]) -> Result<usize> {
    if !is_longest(cartan, word) {
        return Err(Error::NotLongest);
    }
    let image = cartan.act_root(word, &RootVec::simple(cartan.rank(), word[0]));
    let neg = image.neg();
    (1..=cartan.rank())
        .find(|&k| neg == RootVec::simple(cartan.rank(), k))
        .ok_or_else(|| Error::Invalid(format!("w0 image {:?} is not a negative simple root", image)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_matrices() {
        let a2 = CartanData::new(Family::A, 2).unwrap();
        assert_eq!(a2.rows(), vec![vec![2, -1], vec![-1, 2]]);
        let g2 = CartanData::new(Family::G, 2).unwrap();
        assert_eq!(g2.rows(), vec![vec![2, -1], vec![-3, 2]]);
        let b2 = CartanData::new(Family::B, 2).unwrap();
        let c2 = CartanData::new(Family::C, 2).unwrap();
        assert_eq!(b2.dual(), c2);
        assert!(CartanData::new(Family::D, 3).is_err());
        assert!(CartanData::new(Family::G, 3).is_err());
    }

    #[test]
    fn dual_is_involution() {
        for f in Family::ALL {
            for n in 1..=8 {
                if let Ok(c) = CartanData::new(f, n) {
                    assert_eq!(c.dual().dual(), c);
                }
            }
        }
        let a3 = CartanData::new(Family::A, 3).unwrap();
        assert_eq!(a3.dual(), a3);
    }

    #[test]
    fn reflections() {
        let a2 = CartanData::new(Family::A, 2).unwrap();
        let l1 = WeightVec { coords: vec![1, 0] };
        assert_eq!(a2.reflect(1, &l1).coords, vec![-1, 1]);
        assert_eq!(a2.reflect(2, &l1), l1);
        let g2 = CartanData::new(Family::G, 2).unwrap();
        // s_1(α_2) = α_2 − a_{12} α_1 = α_1 + α_2
        assert_eq!(g2.reflect_root(1, &RootVec::simple(2, 2)).coords, vec![1, 1]);
        assert_eq!(g2.reflect_root(2, &RootVec::simple(2, 1)).coords, vec![1, 3]);
    }

    #[test]
    fn reduced_and_longest() {
        let a2 = CartanData::new(Family::A, 2).unwrap();
        assert!(is_reduced(&a2, &[1, 2, 1]));
        assert!(!is_reduced(&a2, &[1, 1]));
        assert!(is_longest(&a2, &[1, 2, 1]) && is_longest(&a2, &[2, 1, 2]));
    }

    #[test]
    fn canonical_words_are_longest() {
        for f in Family::ALL {
            for n in 1..=8 {
                if let Ok(c) = CartanData::new(f, n) {
                    let w = canonical_longest_word(f, n).unwrap();
                    assert!(is_longest(&c, &w), "{}{}", f, n);
                    assert_eq!(c.positive_roots().len(), c.num_positive_roots());
                }
            }
        }
        assert_eq!(canonical_longest_word(Family::A, 3).unwrap(), vec![1, 2, 3, 1, 2, 1]);
        assert_eq!(canonical_longest_word(Family::F, 4).unwrap().len(), 24);
    }

    #[test]
    fn word_roots() {
        let a2 = CartanData::new(Family::A, 2).unwrap();
        let r = positive_roots_from_word(&a2, &[1, 2, 1]).unwrap();
        let coords: Vec<_> = r.iter().map(|r| r.coords.clone()).collect();
        assert_eq!(coords, vec![vec![0, 1], vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn plus_minus() {
        let w = [1, 2, 1];
        assert_eq!(kplus(&w, 1), Some(3));
        assert_eq!(kplus(&w, 2), None);
        assert_eq!(kminus(&w, 3), 1);
        assert_eq!(kminus(&w, 1), 0);
    }

    #[test]
    fn paths() {
        let a2 = CartanData::new(Family::A, 2).unwrap();
        let p = word_graph_path(&a2, &[1, 2, 1], &[2, 1, 2]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].len(), 3);
        assert!(word_graph_path(&a2, &[1, 2, 1], &[1, 2, 1]).unwrap().is_empty());
        let c2 = CartanData::new(Family::C, 2).unwrap();
        let p = word_graph_path(&c2, &[1, 2, 1, 2], &[2, 1, 2, 1]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].len(), 4);
        assert_eq!(word_graph_path(&a2, &[1, 2], &[2, 1]), Err(Error::NotEquivalent));
    }

    #[test]
    fn partners() {
        for n in 1..=6 {
            let c = CartanData::new(Family::A, n).unwrap();
            let w = canonical_longest_word(Family::A, n).unwrap();
            assert_eq!(partner_index(&c, &w).unwrap(), n + 1 - w[0]);
        }
        for f in [Family::B, Family::C] {
            let c = CartanData::new(f, 3).unwrap();
            let w = canonical_longest_word(f, 3).unwrap();
            assert_eq!(partner_index(&c, &w).unwrap(), w[0]);
        }
    }
}
