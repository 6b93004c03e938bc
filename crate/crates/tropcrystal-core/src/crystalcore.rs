//! Abstract crystals, the elementary crystals `B_i`, tensor products,
//! monomial crystals, graph generation and isomorphism.
//!
//! Weights are stored as pairing vectors `(⟨h_1, wt⟩, …, ⟨h_n, wt⟩)`.
//! Colours are 1-based throughout.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

use crate::error::{Error, Result};
use crate::rootdata::CartanData;

/// An element of `Z ∪ {−∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
}

impl ExtInt {
    pub fn fin(self) -> Option<i64> {
        match self {
            ExtInt::Fin(v) => Some(v),
            ExtInt::NegInf => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Fin(_))
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (ExtInt::NegInf, ExtInt::NegInf) => Ordering::Equal,
            (ExtInt::NegInf, _) => Ordering::Less,
            (_, ExtInt::NegInf) => Ordering::Greater,
            (ExtInt::Fin(a), ExtInt::Fin(b)) => a.cmp(b),
        }
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;
    fn add(self, n: i64) -> ExtInt {
        match self {
            ExtInt::Fin(v) => ExtInt::Fin(v + n),
            ExtInt::NegInf => ExtInt::NegInf,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Fin(v) => write!(f, "{v}"),
            ExtInt::NegInf => f.write_str("-inf"),
        }
    }
}

/// A Kashiwara crystal. `e`/`f` return `None` for the absorbing element 0.
pub trait Crystal {
    type Elem: Clone + Ord + fmt::Debug;

    fn rank(&self) -> usize;
    /// `⟨h_i, wt b⟩` for `i = 1..=rank`.
    fn wt(&self, b: &Self::Elem) -> Vec<i64>;
    fn eps(&self, b: &Self::Elem, i: usize) -> ExtInt;
    fn phi(&self, b: &Self::Elem, i: usize) -> ExtInt {
        self.eps(b, i) + self.wt(b)[i - 1]
    }
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    /// Short text used for graph export.
    fn label(&self, b: &Self::Elem) -> String {
        format!("{b:?}")
    }
}

/// An element `(x)_i` of `B_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemBi {
    pub x: i64,
    pub i: usize,
}

/// `⟨h_j, wt (x)_i⟩ = x a_{j,i}`.
pub fn bi_wt(cartan: &CartanData, b: ElemBi) -> Vec<i64> {
    (1..=cartan.rank()).map(|j| b.x * cartan.a(j, b.i)).collect()
}

pub fn bi_eps(b: ElemBi, j: usize) -> ExtInt {
    if j == b.i {
        ExtInt::Fin(-b.x)
    } else {
        ExtInt::NegInf
    }
}

pub fn bi_phi(b: ElemBi, j: usize) -> ExtInt {
    if j == b.i {
        ExtInt::Fin(b.x)
    } else {
        ExtInt::NegInf
    }
}

pub fn bi_e(b: ElemBi, j: usize) -> Option<ElemBi> {
    (j == b.i).then_some(ElemBi { x: b.x + 1, i: b.i })
}

pub fn bi_f(b: ElemBi, j: usize) -> Option<ElemBi> {
    (j == b.i).then_some(ElemBi { x: b.x - 1, i: b.i })
}

/// The union of all `B_i` for a Cartan datum.
#[derive(Clone, Debug)]
pub struct BiCrystal {
    pub cartan: CartanData,
}

impl Crystal for BiCrystal {
    type Elem = ElemBi;
    fn rank(&self) -> usize {
        self.cartan.rank()
    }
    fn wt(&self, b: &ElemBi) -> Vec<i64> {
        bi_wt(&self.cartan, *b)
    }
    fn eps(&self, b: &ElemBi, i: usize) -> ExtInt {
        bi_eps(*b, i)
    }
    fn phi(&self, b: &ElemBi, i: usize) -> ExtInt {
        bi_phi(*b, i)
    }
    fn e(&self, b: &ElemBi, i: usize) -> Option<ElemBi> {
        bi_e(*b, i)
    }
    fn f(&self, b: &ElemBi, i: usize) -> Option<ElemBi> {
        bi_f(*b, i)
    }
    fn label(&self, b: &ElemBi) -> String {
        format!("({})_{}", b.x, b.i)
    }
}

/// `B1 ⊗ B2` with `b1` on the left.
#[derive(Clone, Debug)]
pub struct TensorPair<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Crystal, B: Crystal> TensorPair<A, B> {
    fn acts_left_e(&self, b: &(A::Elem, B::Elem), i: usize) -> bool {
        self.left.phi(&b.0, i) >= self.right.eps(&b.1, i)
    }
    fn acts_left_f(&self, b: &(A::Elem, B::Elem), i: usize) -> bool {
        self.left.phi(&b.0, i) > self.right.eps(&b.1, i)
    }
}

impl<A: Crystal, B: Crystal> Crystal for TensorPair<A, B> {
    type Elem = (A::Elem, B::Elem);
    fn rank(&self) -> usize {
        self.left.rank()
    }
    fn wt(&self, b: &Self::Elem) -> Vec<i64> {
        self.left.wt(&b.0).iter().zip(self.right.wt(&b.1)).map(|(x, y)| x + y).collect()
    }
    fn eps(&self, b: &Self::Elem, i: usize) -> ExtInt {
        let w1 = self.left.wt(&b.0)[i - 1];
        core::cmp::max(self.left.eps(&b.0, i), self.right.eps(&b.1, i) + (-w1))
    }
    fn phi(&self, b: &Self::Elem, i: usize) -> ExtInt {
        let w2 = self.right.wt(&b.1)[i - 1];
        core::cmp::max(self.left.phi(&b.0, i) + w2, self.right.phi(&b.1, i))
    }
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.acts_left_e(b, i) {
            self.left.e(&b.0, i).map(|x| (x, b.1.clone()))
        } else {
            self.right.e(&b.1, i).map(|y| (b.0.clone(), y))
        }
    }
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        if self.acts_left_f(b, i) {
            self.left.f(&b.0, i).map(|x| (x, b.1.clone()))
        } else {
            self.right.f(&b.1, i).map(|y| (b.0.clone(), y))
        }
    }
    fn label(&self, b: &Self::Elem) -> String {
        format!("{}⊗{}", self.left.label(&b.0), self.right.label(&b.1))
    }
}

/// Where `ẽ_i` and `f̃_i` act on `b_1 ⊗ ⋯ ⊗ b_L`, from the per-factor
/// `ε_i(b_k)` and `⟨h_i, wt b_k⟩`.
///
/// With `a_k = ε_i(b_k) − Σ_{j<k} ⟨h_i, wt b_j⟩`, `ẽ_i` acts on the leftmost
/// and `f̃_i` on the rightmost index attaining `max a_k`. Returns
/// `(k_e, k_f, ε_i)` with 0-based indices, or `None` when every `a_k` is `−∞`.
pub fn multi_tensor_action(eps: &[ExtInt], wt_i: &[i64]) -> Option<(usize, usize, ExtInt)> {
    let mut acc = 0i64;
    let mut best = ExtInt::NegInf;
    let mut k_e = None;
    let mut k_f = 0;
    for (k, (&ep, &w)) in eps.iter().zip(wt_i).enumerate() {
        let a = ep + (-acc);
        if a.is_finite() {
            if k_e.is_none() || a > best {
                best = a;
                k_e = Some(k);
                k_f = k;
            } else if a == best {
                k_f = k;
            }
        }
        acc += w;
    }
    k_e.map(|k| (k, k_f, best))
}

/// `B_{c_1} ⊗ ⋯ ⊗ B_{c_L}` for a fixed colour list; elements are the `x`'s.
#[derive(Clone, Debug)]
pub struct BiTensor {
    pub cartan: CartanData,
    pub colours: Vec<usize>,
}

impl BiTensor {
    pub fn new(cartan: CartanData, colours: Vec<usize>) -> Result<Self> {
        if colours.is_empty() {
            return Err(Error::Invalid("a tensor product needs at least one factor".into()));
        }
        cartan.check_word(&colours)?;
        Ok(BiTensor { cartan, colours })
    }

    fn action(&self, b: &[i64], i: usize) -> Option<(usize, usize, ExtInt)> {
        let eps: Vec<ExtInt> =
            self.colours.iter().zip(b).map(|(&c, &x)| bi_eps(ElemBi { x, i: c }, i)).collect();
        let wts: Vec<i64> = self.colours.iter().zip(b).map(|(&c, &x)| x * self.cartan.a(i, c)).collect();
        multi_tensor_action(&eps, &wts)
    }
}

impl Crystal for BiTensor {
    type Elem = Vec<i64>;
    fn rank(&self) -> usize {
        self.cartan.rank()
    }
    fn wt(&self, b: &Vec<i64>) -> Vec<i64> {
        (1..=self.cartan.rank())
            .map(|j| self.colours.iter().zip(b).map(|(&c, &x)| x * self.cartan.a(j, c)).sum())
            .collect()
    }
    fn eps(&self, b: &Vec<i64>, i: usize) -> ExtInt {
        self.action(b, i).map(|a| a.2).unwrap_or(ExtInt::NegInf)
    }
    fn e(&self, b: &Vec<i64>, i: usize) -> Option<Vec<i64>> {
        let (k, _, _) = self.action(b, i)?;
        let mut out = b.clone();
        out[k] += 1;
        Some(out)
    }
    fn f(&self, b: &Vec<i64>, i: usize) -> Option<Vec<i64>> {
        let (_, k, _) = self.action(b, i)?;
        let mut out = b.clone();
        out[k] -= 1;
        Some(out)
    }
    fn label(&self, b: &Vec<i64>) -> String {
        let parts: Vec<String> = self.colours.iter().zip(b).map(|(c, x)| format!("({x})_{c}")).collect();
        parts.join("⊗")
    }
}

/// A sign `p_{i,j} ∈ {0, 1}` with `p_{i,j} + p_{j,i} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sign {
    n: usize,
    p: Vec<u8>,
}

impl Sign {
    /// The sign of a cyclic sequence `(i_1 ⋯ i_n)`: `p_{i_a,i_b} = 1` iff `a < b`.
    pub fn cyclic(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in order {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Invalid(format!("{order:?} is not a permutation of 1..={n}")));
            }
            seen[i - 1] = true;
        }
        let mut pos = vec![0; n];
        for (a, &i) in order.iter().enumerate() {
            pos[i - 1] = a;
        }
        let mut p = vec![0u8; n * n];
        for i in 1..=n {
            for j in 1..=n {
                if i != j && pos[i - 1] < pos[j - 1] {
                    p[(i - 1) * n + j - 1] = 1;
                }
            }
        }
        Ok(Sign { n, p })
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.p[(i - 1) * self.n + j - 1] as i64
    }

    pub fn flip(&self) -> Sign {
        let n = self.n;
        let mut p = self.p.clone();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    p[i * n + j] = 1 - self.p[i * n + j];
                }
            }
        }
        Sign { n, p }
    }
}

/// A Laurent monomial in the `Y_{m,i}`, keyed by `(m, i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialElem {
    pub exps: BTreeMap<(i64, usize), i64>,
}

impl MonomialElem {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn y(m: i64, i: usize) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert((m, i), 1);
        MonomialElem { exps }
    }

    pub fn get(&self, m: i64, i: usize) -> i64 {
        self.exps.get(&(m, i)).copied().unwrap_or(0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_pow(o, 1)
    }

    /// `self · o^k`.
    pub fn mul_pow(&self, o: &Self, k: i64) -> Self {
        let mut exps = self.exps.clone();
        for (&key, &v) in &o.exps {
            let e = exps.entry(key).or_insert(0);
            *e += k * v;
            if *e == 0 {
                exps.remove(&key);
            }
        }
        MonomialElem { exps }
    }

    pub fn inverse(&self) -> Self {
        MonomialElem::one().mul_pow(self, -1)
    }

    fn row(&self, i: usize) -> Vec<(i64, i64)> {
        self.exps.iter().filter(|((_, j), _)| *j == i).map(|(&(m, _), &l)| (m, l)).collect()
    }

    /// `(φ_i, n_f, n_e)`: the maximal partial sum of row `i` and the first and
    /// last `n` attaining it. A row with no entries gives `φ = 0` everywhere,
    /// reported with `n_f = n_e = None`.
    fn row_stats(&self, i: usize) -> (i64, Option<i64>, Option<i64>) {
        let row = self.row(i);
        if row.is_empty() {
            return (0, None, None);
        }
        // partial sums are constant between consecutive entries and 0 far left
        let mut best = 0i64;
        let mut nf = Some(row[0].0 - 1);
        let mut ne = nf;
        let mut acc = 0i64;
        for (idx, &(m, l)) in row.iter().enumerate() {
            acc += l;
            // value acc holds on [m, next_m − 1]
            let last = if idx + 1 < row.len() { row[idx + 1].0 - 1 } else { i64::MAX };
            if acc > best {
                best = acc;
                nf = Some(m);
                ne = Some(last);
            } else if acc == best {
                ne = Some(last);
            }
        }
        (best, nf, ne)
    }
}

impl fmt::Display for MonomialElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(&(m, i), &l)| if l == 1 { format!("Y[{m},{i}]") } else { format!("Y[{m},{i}]^{l}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// The monomial crystal `𝒴(p)` for a Cartan datum and sign.
#[derive(Clone, Debug)]
pub struct MonomialCrystal {
    pub cartan: CartanData,
    pub sign: Sign,
}

impl MonomialCrystal {
    /// `A_{m,i} = Y_{m,i} Y_{m+1,i} ∏_{j≠i} Y_{m+p_{j,i},j}^{a_{j,i}}`.
    pub fn a_monomial(&self, m: i64, i: usize) -> MonomialElem {
        let mut out = MonomialElem::y(m, i).mul(&MonomialElem::y(m + 1, i));
        for j in 1..=self.cartan.rank() {
            if j != i && self.cartan.a(j, i) != 0 {
                out = out.mul_pow(&MonomialElem::y(m + self.sign.get(j, i), j), self.cartan.a(j, i));
            }
        }
        out
    }
}

impl Crystal for MonomialCrystal {
    type Elem = MonomialElem;
    fn rank(&self) -> usize {
        self.cartan.rank()
    }
    fn wt(&self, b: &MonomialElem) -> Vec<i64> {
        let mut w = vec![0; self.cartan.rank()];
        for (&(_, i), &l) in &b.exps {
            w[i - 1] += l;
        }
        w
    }
    fn phi(&self, b: &MonomialElem, i: usize) -> ExtInt {
        ExtInt::Fin(b.row_stats(i).0)
    }
    fn eps(&self, b: &MonomialElem, i: usize) -> ExtInt {
        ExtInt::Fin(b.row_stats(i).0 - self.wt(b)[i - 1])
    }
    fn f(&self, b: &MonomialElem, i: usize) -> Option<MonomialElem> {
        let (phi, nf, _) = b.row_stats(i);
        if phi <= 0 {
            return None;
        }
        Some(b.mul_pow(&self.a_monomial(nf?, i), -1))
    }
    fn e(&self, b: &MonomialElem, i: usize) -> Option<MonomialElem> {
        let (phi, _, ne) = b.row_stats(i);
        if phi - self.wt(b)[i - 1] <= 0 {
            return None;
        }
        Some(b.mul(&self.a_monomial(ne?, i)))
    }
    fn label(&self, b: &MonomialElem) -> String {
        format!("{b}")
    }
}

/// Node labels carried by a crystal graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeLabel {
    pub name: String,
    pub wt: Vec<i64>,
    pub eps: Vec<ExtInt>,
    pub phi: Vec<ExtInt>,
}

/// A finite piece of a crystal graph. `f_edges[v][i-1] = Some(w)` means
/// `f̃_i v = w` with both ends in the graph.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub rank: usize,
    pub nodes: Vec<NodeLabel>,
    pub f_edges: Vec<Vec<Option<usize>>>,
    /// Nodes whose neighbours were not all explored.
    pub boundary: Vec<bool>,
}

impl CrystalGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.f_edges.iter().flatten().filter(|e| e.is_some()).count()
    }

    /// `e_edges[w][i-1] = Some(v)` iff `f̃_i v = w`.
    pub fn e_edges(&self) -> Vec<Vec<Option<usize>>> {
        let mut out = vec![vec![None; self.rank]; self.len()];
        for (v, row) in self.f_edges.iter().enumerate() {
            for (i, w) in row.iter().enumerate() {
                if let Some(w) = w {
                    out[*w][i] = Some(v);
                }
            }
        }
        out
    }

    /// Unique incoming and outgoing edges per colour.
    pub fn check_structure(&self) -> Result<()> {
        let mut incoming = vec![vec![0usize; self.rank]; self.len()];
        for row in &self.f_edges {
            for (i, w) in row.iter().enumerate() {
                if let Some(w) = w {
                    incoming[*w][i] += 1;
                }
            }
        }
        for (v, row) in incoming.iter().enumerate() {
            if let Some(i) = row.iter().position(|&c| c > 1) {
                return Err(Error::Invalid(format!("node {v} has {} incoming {}-edges", row[i], i + 1)));
            }
        }
        Ok(())
    }

    /// Nodes with `ε_i = 0` for every `i`.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.nodes[v].eps.iter().all(|&e| e == ExtInt::Fin(0))).collect()
    }
}

/// Which operators the closure follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// `f̃_i` only: the truncation `{f̃_{i_1}⋯f̃_{i_d} seed}` at depth `d`.
    Lowering,
    /// Both `ẽ_i` and `f̃_i`.
    Both,
}

/// Cap on the number of generated nodes.
pub const NODE_CAP: usize = 1_000_000;

/// Breadth-first closure from `seed` with at most `bound` operator
/// applications along any path, optionally restricted by `keep`.
pub fn generate_component<C: Crystal>(
    crystal: &C,
    seed: C::Elem,
    bound: usize,
    closure: Closure,
    keep: &dyn Fn(&C::Elem) -> bool,
) -> Result<(CrystalGraph, Vec<C::Elem>)> {
    let rank = crystal.rank();
    let mut index: BTreeMap<C::Elem, usize> = BTreeMap::new();
    let mut elems: Vec<C::Elem> = Vec::new();
    let mut depth: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(seed.clone(), 0);
    elems.push(seed);
    depth.push(0);
    queue.push_back(0usize);
    while let Some(v) = queue.pop_front() {
        if depth[v] == bound {
            continue;
        }
        for i in 1..=rank {
            let b = elems[v].clone();
            let mut next = Vec::new();
            if let Some(w) = crystal.f(&b, i) {
                next.push(w);
            }
            if closure == Closure::Both {
                if let Some(w) = crystal.e(&b, i) {
                    next.push(w);
                }
            }
            for w in next {
                if !keep(&w) || index.contains_key(&w) {
                    continue;
                }
                if elems.len() >= NODE_CAP {
                    return Err(Error::Budget(format!("more than {NODE_CAP} crystal nodes")));
                }
                index.insert(w.clone(), elems.len());
                elems.push(w);
                depth.push(depth[v] + 1);
                queue.push_back(elems.len() - 1);
            }
        }
    }
    let mut f_edges = vec![vec![None; rank]; elems.len()];
    let mut boundary = vec![false; elems.len()];
    for (v, b) in elems.iter().enumerate() {
        for i in 1..=rank {
            if let Some(w) = crystal.f(b, i) {
                match index.get(&w) {
                    Some(&t) => f_edges[v][i - 1] = Some(t),
                    None => {
                        if keep(&w) {
                            boundary[v] = true;
                        }
                    }
                }
            }
            if closure == Closure::Both {
                if let Some(w) = crystal.e(b, i) {
                    if !index.contains_key(&w) && keep(&w) {
                        boundary[v] = true;
                    }
                }
            }
        }
    }
    let nodes = elems
        .iter()
        .map(|b| NodeLabel {
            name: crystal.label(b),
            wt: crystal.wt(b),
            eps: (1..=rank).map(|i| crystal.eps(b, i)).collect(),
            phi: (1..=rank).map(|i| crystal.phi(b, i)).collect(),
        })
        .collect();
    Ok((CrystalGraph { rank, nodes, f_edges, boundary }, elems))
}

/// Label comparison used by the isomorphism test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelMatch {
    /// Colour structure only.
    Structure,
    /// Colours plus `wt` and `ε`.
    WtEps,
}

/// Decides whether two graphs are isomorphic as coloured digraphs, via
/// parallel BFS from designated roots. Returns the node map on success.
///
/// Without roots, each graph must have exactly one source (all `ε_i = 0`).
pub fn graph_isomorphic(
    g1: &CrystalGraph,
    g2: &CrystalGraph,
    roots: Option<(usize, usize)>,
    labels: LabelMatch,
) -> Result<Option<Vec<usize>>> {
    let (r1, r2) = match roots {
        Some(r) => r,
        None => {
            let (s1, s2) = (g1.sources(), g2.sources());
            if s1.len() != 1 || s2.len() != 1 {
                return Err(Error::Invalid(format!(
                    "isomorphism test needs unique sources (found {} and {})",
                    s1.len(),
                    s2.len()
                )));
            }
            (s1[0], s2[0])
        }
    };
    if g1.len() != g2.len() || g1.rank != g2.rank || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let (e1, e2) = (g1.e_edges(), g2.e_edges());
    let mut map = vec![usize::MAX; g1.len()];
    let mut back = vec![usize::MAX; g2.len()];
    let same = |a: usize, b: usize| match labels {
        LabelMatch::Structure => true,
        LabelMatch::WtEps => g1.nodes[a].wt == g2.nodes[b].wt && g1.nodes[a].eps == g2.nodes[b].eps,
    };
    if !same(r1, r2) {
        return Ok(None);
    }
    map[r1] = r2;
    back[r2] = r1;
    let mut queue = VecDeque::from([r1]);
    while let Some(v) = queue.pop_front() {
        let w = map[v];
        for i in 0..g1.rank {
            for (a, b) in [(g1.f_edges[v][i], g2.f_edges[w][i]), (e1[v][i], e2[w][i])] {
                match (a, b) {
                    (None, None) => {}
                    (Some(a), Some(b)) => {
                        if map[a] == usize::MAX && back[b] == usize::MAX {
                            if !same(a, b) {
                                return Ok(None);
                            }
                            map[a] = b;
                            back[b] = a;
                            queue.push_back(a);
                        } else if map[a] != b || back[b] != a {
                            return Ok(None);
                        }
                    }
                    _ => return Ok(None),
                }
            }
        }
    }
    if map.contains(&usize::MAX) {
        return Ok(None);
    }
    Ok(Some(map))
}

/// One failed condition of a claimed strict morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismViolation {
    pub node: usize,
    pub colour: usize,
    pub what: String,
}

/// Checks that `map` (domain node ↦ codomain node) preserves `wt`, `ε`, `φ`
/// and commutes with `f̃_i` and `ẽ_i` for the given colours.
pub fn strict_morphism_check(
    map: &[Option<usize>],
    domain: &CrystalGraph,
    codomain: &CrystalGraph,
    colours: &[usize],
) -> Vec<MorphismViolation> {
    let mut out = Vec::new();
    let de = domain.e_edges();
    let ce = codomain.e_edges();
    for v in 0..domain.len() {
        let Some(w) = map[v] else {
            out.push(MorphismViolation { node: v, colour: 0, what: "unmapped".into() });
            continue;
        };
        let (a, b) = (&domain.nodes[v], &codomain.nodes[w]);
        if a.wt != b.wt {
            out.push(MorphismViolation { node: v, colour: 0, what: "wt".into() });
        }
        for &i in colours {
            if a.eps[i - 1] != b.eps[i - 1] || a.phi[i - 1] != b.phi[i - 1] {
                out.push(MorphismViolation { node: v, colour: i, what: "eps/phi".into() });
            }
            for (dom, cod, name) in [(&domain.f_edges, &codomain.f_edges, "f"), (&de, &ce, "e")] {
                let image = dom[v][i - 1].map(|t| map[t]);
                let target = cod[w][i - 1];
                let ok = match image {
                    None => domain.boundary[v] || target.is_none(),
                    Some(img) => img == target,
                };
                if !ok {
                    out.push(MorphismViolation { node: v, colour: i, what: format!("{name}-edge") });
                }
            }
        }
    }
    out
}

/// Checks the crystal axioms at one element; returns a description of the
/// first failure.
pub fn check_axioms<C: Crystal>(c: &C, cartan: &CartanData, b: &C::Elem) -> core::result::Result<(), String> {
    let wt = c.wt(b);
    for i in 1..=c.rank() {
        let (ep, ph) = (c.eps(b, i), c.phi(b, i));
        if ph != ep + wt[i - 1] {
            return Err(format!("φ_{i} ≠ ε_{i} + ⟨h_{i}, wt⟩ at {}", c.label(b)));
        }
        for (dir, next) in [(1i64, c.e(b, i)), (-1, c.f(b, i))] {
            let Some(n) = next else { continue };
            let w2 = c.wt(&n);
            for j in 1..=c.rank() {
                if w2[j - 1] != wt[j - 1] + dir * cartan.a(j, i) {
                    return Err(format!("wt shift of colour {i} at {}", c.label(b)));
                }
            }
            if c.eps(&n, i) != ep + (-dir) || c.phi(&n, i) != ph + dir {
                return Err(format!("ε/φ shift of colour {i} at {}", c.label(b)));
            }
            let back = if dir == 1 { c.f(&n, i) } else { c.e(&n, i) };
            if back.as_ref() != Some(b) {
                return Err(format!("ẽ/f̃ not inverse for colour {i} at {}", c.label(b)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Family;

    fn cartan(f: Family, n: usize) -> CartanData {
        CartanData::new(f, n).unwrap()
    }

    #[test]
    fn bi_table() {
        assert_eq!(bi_f(ElemBi { x: 0, i: 1 }, 1), Some(ElemBi { x: -1, i: 1 }));
        assert_eq!(bi_e(ElemBi { x: 5, i: 1 }, 2), None);
        assert_eq!(bi_eps(ElemBi { x: -2, i: 1 }, 1), ExtInt::Fin(2));
        assert_eq!(bi_phi(ElemBi { x: -2, i: 1 }, 1), ExtInt::Fin(-2));
        assert_eq!(bi_eps(ElemBi { x: -2, i: 1 }, 2), ExtInt::NegInf);
    }

    #[test]
    fn a1_tensor_routing() {
        let c = cartan(Family::A, 1);
        let t = TensorPair { left: BiCrystal { cartan: c.clone() }, right: BiCrystal { cartan: c } };
        let b = (ElemBi { x: 0, i: 1 }, ElemBi { x: 0, i: 1 });
        assert_eq!(t.f(&b, 1), Some((ElemBi { x: 0, i: 1 }, ElemBi { x: -1, i: 1 })));
        assert_eq!(t.e(&b, 1), Some((ElemBi { x: 1, i: 1 }, ElemBi { x: 0, i: 1 })));
    }

    #[test]
    fn tie_rule() {
        let e = [ExtInt::Fin(0); 3];
        assert_eq!(multi_tensor_action(&e, &[0, 0, 0]), Some((0, 2, ExtInt::Fin(0))));
        assert_eq!(multi_tensor_action(&[ExtInt::NegInf], &[0]), None);
    }

    #[test]
    fn monomial_a2_orbit() {
        let c = cartan(Family::A, 2);
        let m = MonomialCrystal { cartan: c.clone(), sign: Sign::cyclic(&[1, 2]).unwrap() };
        let y = MonomialElem::y(1, 1);
        for i in 1..=2 {
            assert_eq!(m.eps(&y, i), ExtInt::Fin(0));
        }
        let (g, elems) = generate_component(&m, y, 6, Closure::Both, &|_| true).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.edge_count(), 2);
        for b in &elems {
            check_axioms(&m, &c, b).unwrap();
        }
        let a1 = MonomialCrystal { cartan: cartan(Family::A, 1), sign: Sign::cyclic(&[1]).unwrap() };
        assert_eq!(a1.a_monomial(3, 1), MonomialElem::y(3, 1).mul(&MonomialElem::y(4, 1)));
    }

    #[test]
    fn c_type_a_monomial() {
        // cyclic sign (1 2 … n) for C2: A_{m,1} = Y_{m,1} Y_{m,2}^{-1} Y_{m+1,1}
        let m = MonomialCrystal { cartan: cartan(Family::C, 2), sign: Sign::cyclic(&[1, 2]).unwrap() };
        let want = MonomialElem::y(4, 1).mul(&MonomialElem::y(5, 1)).mul_pow(&MonomialElem::y(4, 2), -1);
        assert_eq!(m.a_monomial(4, 1), want);
        let flipped = MonomialCrystal { cartan: m.cartan.clone(), sign: m.sign.flip() };
        let want = MonomialElem::y(4, 1).mul(&MonomialElem::y(5, 1)).mul_pow(&MonomialElem::y(5, 2), -1);
        assert_eq!(flipped.a_monomial(4, 1), want);
    }

    #[test]
    fn isomorphism_basics() {
        let c = cartan(Family::A, 2);
        let m = MonomialCrystal { cartan: c, sign: Sign::cyclic(&[1, 2]).unwrap() };
        let (g, _) = generate_component(&m, MonomialElem::y(1, 1), 6, Closure::Both, &|_| true).unwrap();
        assert!(graph_isomorphic(&g, &g, None, LabelMatch::WtEps).unwrap().is_some());
        let (h, _) = generate_component(&m, MonomialElem::y(1, 1), 1, Closure::Both, &|_| true).unwrap();
        assert!(graph_isomorphic(&g, &h, None, LabelMatch::Structure).unwrap().is_none());
        let (single, _) = generate_component(&m, MonomialElem::y(1, 1), 0, Closure::Both, &|_| true).unwrap();
        assert_eq!(single.len(), 1);
        let id: Vec<Option<usize>> = (0..g.len()).map(Some).collect();
        assert!(strict_morphism_check(&id, &g, &g, &[1, 2]).is_empty());
    }
}
