//! Matrix oracle: small faithful representations, one-parameter subgroups,
//! products `Θ⁻_𝐢(c) = 𝐲_{i_1}(c_1) ⋯ 𝐲_{i_k}(c_k)`, generalized minors and
//! rank-2 chamber solving.
//!
//! Every representation has nonnegative integer Chevalley generators in a
//! basis ordered by decreasing weight, so `e_1 ∧ ⋯ ∧ e_k` is a highest-weight
//! vector of `Λ^k V` and `Δ_{Λ}` is a leading principal minor. This is
//! checked when the representation is built.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{CartanData, Family, WeightVec};
use crate::sample;
use crate::tropsym::{LaurentPoly, RationalPair};

/// Ring operations needed by [`Matrix`].
pub trait Entry: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn int_like(&self, k: i128) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn is_zero_entry(&self) -> bool;
    /// Integer power; negative powers only for units.
    fn powi(&self, k: i32) -> Self;
}

impl Entry for i128 {
    fn zero_like(&self) -> Self {
        0
    }
    fn int_like(&self, k: i128) -> Self {
        k
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.checked_add(*o).expect("integer matrix overflow")
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.checked_mul(*o).expect("integer matrix overflow")
    }
    fn is_zero_entry(&self) -> bool {
        *self == 0
    }
    fn powi(&self, k: i32) -> Self {
        match (*self, k) {
            (_, 0) => 1,
            (1, _) => 1,
            (-1, k) => {
                if k % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            (b, k) if k > 0 => b.checked_pow(k as u32).expect("integer matrix overflow"),
            _ => panic!("negative power of a non-unit integer"),
        }
    }
}

impl Entry for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn int_like(&self, k: i128) -> Self {
        BigRational::from_integer(BigInt::from(k))
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn powi(&self, k: i32) -> Self {
        self.pow(k)
    }
}

impl Entry for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.nvars())
    }
    fn int_like(&self, k: i128) -> Self {
        LaurentPoly::constant(self.nvars(), k)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn powi(&self, k: i32) -> Self {
        if k >= 0 {
            return self.pow(k as u32);
        }
        let (e, c) = self.as_monomial().expect("negative power of a non-monomial");
        assert!(c == 1 || c == -1, "negative power of a non-unit monomial");
        let inv: Vec<i32> = e.iter().map(|v| -v).collect();
        LaurentPoly::monomial(inv, c).pow((-k) as u32)
    }
}

/// Dense square matrix over an [`Entry`] ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<i128>;
pub type SymMatrix = Matrix<LaurentPoly>;
pub type RatMatrix = Matrix<BigRational>;

impl<T: Entry> Matrix<T> {
    pub fn filled(n: usize, v: T) -> Self {
        Matrix { n, data: vec![v; n * n] }
    }

    pub fn identity(n: usize, proto: &T) -> Self {
        let mut m = Self::filled(n, proto.zero_like());
        for i in 0..n {
            m.data[i * n + i] = proto.int_like(1);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// 0-based entry.
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.n + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> + '_ {
        self.data.iter()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "matrix dimension mismatch");
        let n = self.n;
        let zero = self.data[0].zero_like();
        let mut out = Self::filled(n, zero.clone());
        for r in 0..n {
            for k in 0..n {
                let a = &self.data[r * n + k];
                if a.is_zero_entry() {
                    continue;
                }
                for c in 0..n {
                    let b = &o.data[k * n + c];
                    if b.is_zero_entry() {
                        continue;
                    }
                    let slot = &mut out.data[r * n + c];
                    *slot = slot.add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect() }
    }

    /// Determinant of the leading `k × k` block by Laplace expansion.
    pub fn principal_minor(&self, k: usize) -> T {
        let rows: Vec<usize> = (0..k).collect();
        let cols: Vec<usize> = (0..k).collect();
        self.minor(&rows, &cols)
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> T {
        let zero = self.data[0].zero_like();
        if rows.is_empty() {
            return zero.int_like(1);
        }
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let r0 = rows[0];
        let rest = &rows[1..];
        let mut acc = zero.clone();
        for (t, &c) in cols.iter().enumerate() {
            let a = self.get(r0, c);
            if a.is_zero_entry() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|(s, _)| *s != t).map(|(_, &c)| c).collect();
            let sub = self.minor(rest, &sub_cols);
            let term = a.mul_ref(&sub);
            acc = if t % 2 == 0 { acc.add_ref(&term) } else { acc.add_ref(&term.mul_ref(&zero.int_like(-1))) };
        }
        acc
    }
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self::filled(n, 0)
    }

    /// Converts to another entry ring using `proto` for constants.
    pub fn lift<T: Entry>(&self, proto: &T) -> Matrix<T> {
        Matrix { n: self.n, data: self.data.iter().map(|&v| proto.int_like(v)).collect() }
    }

    pub fn scale(&self, k: i128) -> Self {
        Matrix { n: self.n, data: self.data.iter().map(|v| v * k).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Matrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.n).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// A faithful representation given by integer Chevalley generators.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    cartan: CartanData,
    dim: usize,
    e: Vec<IntMatrix>,
    f: Vec<IntMatrix>,
    h: Vec<IntMatrix>,
    /// `⟨h_i, wt(v_r)⟩` for each basis vector `v_r`.
    weights: Vec<Vec<i64>>,
    /// `E^k / k!` for each generator, `k ≥ 1` until nilpotent.
    e_div: Vec<Vec<IntMatrix>>,
    f_div: Vec<Vec<IntMatrix>>,
    /// Fundamental weight index ↦ size of the leading minor realizing it.
    minor_sizes: BTreeMap<usize, usize>,
}

fn unit(n: usize, entries: &[(usize, usize, i128)]) -> IntMatrix {
    let mut m = IntMatrix::zeros(n);
    for &(r, c, v) in entries {
        m.set(r - 1, c - 1, v);
    }
    m
}

fn transpose(m: &IntMatrix) -> IntMatrix {
    let n = m.dim();
    let mut t = IntMatrix::zeros(n);
    for r in 0..n {
        for c in 0..n {
            t.set(c, r, *m.get(r, c));
        }
    }
    t
}

fn divided_powers(x: &IntMatrix) -> Result<Vec<IntMatrix>> {
    let mut out = Vec::new();
    let mut pw = x.clone();
    let mut fact: i128 = 1;
    let mut k: i128 = 1;
    while !pw.is_zero() {
        fact *= k;
        if pw.data.iter().any(|v| v % fact != 0) {
            return Err(Error::Invalid(format!("power {k} of a generator is not divisible by {k}!")));
        }
        out.push(Matrix { n: pw.n, data: pw.data.iter().map(|v| v / fact).collect() });
        pw = pw.mul(x);
        k += 1;
        if k > 64 {
            return Err(Error::Invalid("generator is not nilpotent".into()));
        }
    }
    Ok(out)
}

impl MatrixRep {
    /// The defining representation: A_n (n+1), B_n (2n+1), C_n (2n), D_n (2n), G_2 (7).
    pub fn defining(family: Family, rank: usize) -> Result<Self> {
        let cartan = CartanData::new(family, rank)?;
        let n = rank;
        let (dim, e) = match family {
            Family::A => {
                let d = n + 1;
                (d, (1..=n).map(|i| unit(d, &[(i, i + 1, 1)])).collect::<Vec<_>>())
            }
            Family::C | Family::B | Family::D => {
                let d = if family == Family::B { 2 * n + 1 } else { 2 * n };
                // v_1..v_n, [v_0], v_n̄..v_1̄
                let bar = |j: usize| d + 1 - j;
                let mut e: Vec<IntMatrix> =
                    (1..n).map(|i| unit(d, &[(i, i + 1, 1), (bar(i + 1), bar(i), 1)])).collect();
                e.push(match family {
                    Family::C => unit(d, &[(n, bar(n), 1)]),
                    Family::B => unit(d, &[(n, n + 1, 1), (n + 1, bar(n), 2)]),
                    _ => unit(d, &[(n - 1, bar(n), 1), (n, bar(n - 1), 1)]),
                });
                (d, e)
            }
            Family::G => {
                let e1 = unit(7, &[(2, 3, 1), (5, 6, 1)]);
                let e2 = unit(7, &[(1, 2, 1), (3, 4, 1), (4, 5, 2), (6, 7, 1)]);
                (7, vec![e1, e2])
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "no matrix model for type {}{}",
                    family, rank
                )))
            }
        };
        let mut f: Vec<IntMatrix> = e.iter().map(transpose).collect();
        if family == Family::B {
            let d = dim;
            f[n - 1] = unit(d, &[(n + 1, n, 2), (d + 1 - n, n + 1, 1)]);
        }
        if family == Family::G {
            f[1] = unit(7, &[(2, 1, 1), (4, 3, 2), (5, 4, 1), (7, 6, 1)]);
        }
        Self::from_generators(cartan, e, f)
    }

    /// Builds a representation from explicit generators, checking the
    /// Chevalley and Serre relations.
    pub fn from_generators(cartan: CartanData, e: Vec<IntMatrix>, f: Vec<IntMatrix>) -> Result<Self> {
        let r = cartan.rank();
        let dim = e[0].dim();
        let h: Vec<IntMatrix> = (0..r).map(|i| e[i].commutator(&f[i])).collect();
        let mut weights = vec![vec![0i64; r]; dim];
        for (i, hi) in h.iter().enumerate() {
            for (a, wa) in weights.iter_mut().enumerate() {
                for b in 0..dim {
                    let v = *hi.get(a, b);
                    if a == b {
                        wa[i] = v as i64;
                    } else if v != 0 {
                        return Err(Error::Invalid(format!("H_{} is not diagonal", i + 1)));
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                if i != j && !e[i].commutator(&f[j]).is_zero() {
                    return Err(Error::Invalid(format!("[E_{}, F_{}] != 0", i + 1, j + 1)));
                }
                let aij = cartan.a(i + 1, j + 1) as i128;
                if h[i].commutator(&e[j]).sub(&e[j].scale(aij)) != IntMatrix::zeros(dim) {
                    return Err(Error::Invalid(format!("[H_{}, E_{}] != a E", i + 1, j + 1)));
                }
                if h[i].commutator(&f[j]).sub(&f[j].scale(-aij)) != IntMatrix::zeros(dim) {
                    return Err(Error::Invalid(format!("[H_{}, F_{}] != -a F", i + 1, j + 1)));
                }
                if i != j {
                    let mut ad_e = e[j].clone();
                    let mut ad_f = f[j].clone();
                    for _ in 0..(1 - aij) {
                        ad_e = e[i].commutator(&ad_e);
                        ad_f = f[i].commutator(&ad_f);
                    }
                    if !ad_e.is_zero() || !ad_f.is_zero() {
                        return Err(Error::Invalid(format!("Serre relation fails for ({}, {})", i + 1, j + 1)));
                    }
                }
            }
        }
        // Weight of each basis vector must be consistent with the generators.
        for (i, ei) in e.iter().enumerate() {
            for a in 0..dim {
                for b in 0..dim {
                    if *ei.get(a, b) != 0 {
                        let diff: Vec<i64> = (0..r).map(|t| weights[a][t] - weights[b][t]).collect();
                        if diff != cartan.alpha_weight(i + 1).coords {
                            return Err(Error::Invalid(format!("E_{} does not raise by α_{}", i + 1, i + 1)));
                        }
                    }
                }
            }
        }
        let e_div = e.iter().map(divided_powers).collect::<Result<Vec<_>>>()?;
        let f_div = f.iter().map(divided_powers).collect::<Result<Vec<_>>>()?;
        let mut rep = MatrixRep { cartan, dim, e, f, h, weights, e_div, f_div, minor_sizes: BTreeMap::new() };
        rep.minor_sizes = rep.find_minor_sizes();
        Ok(rep)
    }

    /// For each `k`, `e_1 ∧ ⋯ ∧ e_k` is a highest-weight vector of `Λ^k V` iff every
    /// `E_i` maps the first `k` basis vectors into their span; it realizes `Λ_j`
    /// when the summed weight is that fundamental weight.
    fn find_minor_sizes(&self) -> BTreeMap<usize, usize> {
        let r = self.cartan.rank();
        let mut out = BTreeMap::new();
        let mut acc = vec![0i64; r];
        for k in 1..=self.dim {
            for (a, w) in acc.iter_mut().zip(&self.weights[k - 1]) {
                *a += w;
            }
            let highest = self.e.iter().all(|ei| (0..k).all(|c| (k..self.dim).all(|row| *ei.get(row, c) == 0)));
            if !highest {
                continue;
            }
            let nonzero: Vec<usize> = (0..r).filter(|&t| acc[t] != 0).collect();
            if nonzero.len() == 1 && acc[nonzero[0]] == 1 {
                out.entry(nonzero[0] + 1).or_insert(k);
            }
        }
        out
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn e(&self, i: usize) -> &IntMatrix {
        &self.e[i - 1]
    }

    pub fn f(&self, i: usize) -> &IntMatrix {
        &self.f[i - 1]
    }

    pub fn h(&self, i: usize) -> &IntMatrix {
        &self.h[i - 1]
    }

    /// `⟨h_i, wt(v_r)⟩` for all `i`.
    pub fn weight(&self, r: usize) -> &[i64] {
        &self.weights[r]
    }

    /// Size of the leading minor computing `Δ_{Λ_j}`, if realizable here.
    pub fn minor_size(&self, j: usize) -> Result<usize> {
        self.minor_sizes.get(&j).copied().ok_or_else(|| {
            Error::UnsupportedMinor(format!("Λ_{} of {} is not a leading minor of this representation", j, self.cartan.name()))
        })
    }

    pub fn supported_minors(&self) -> Vec<usize> {
        self.minor_sizes.keys().copied().collect()
    }

    fn exp_series<T: Entry>(&self, div: &[IntMatrix], t: &T) -> Matrix<T> {
        let mut m = Matrix::identity(self.dim, t);
        let mut tp = t.clone();
        for d in div {
            m = m.add(&Matrix {
                n: self.dim,
                data: d.data.iter().map(|&v| if v == 0 { t.zero_like() } else { tp.mul_ref(&t.int_like(v)) }).collect(),
            });
            tp = tp.mul_ref(t);
        }
        m
    }

    /// `x_i(t) = exp(t E_i)`.
    pub fn x<T: Entry>(&self, i: usize, t: &T) -> Matrix<T> {
        self.exp_series(&self.e_div[i - 1], t)
    }

    /// `y_i(t) = exp(t F_i)`.
    pub fn y<T: Entry>(&self, i: usize, t: &T) -> Matrix<T> {
        self.exp_series(&self.f_div[i - 1], t)
    }

    /// `α_i^∨(c) = diag(c^{⟨h_i, wt v_r⟩})`; `c` must be a unit.
    pub fn coroot<T: Entry>(&self, i: usize, c: &T) -> Matrix<T> {
        let mut m = Matrix::filled(self.dim, c.zero_like());
        for r in 0..self.dim {
            m.set(r, r, c.powi(self.weights[r][i - 1] as i32));
        }
        m
    }

    /// `𝐲_i(c) = y_i(c) α_i^∨(c^{-1})`.
    pub fn yb<T: Entry>(&self, i: usize, c: &T) -> Matrix<T> {
        let mut m = self.y(i, c);
        // right multiplication by a diagonal matrix scales columns
        for col in 0..self.dim {
            let s = c.powi(-(self.weights[col][i - 1] as i32));
            for row in 0..self.dim {
                let v = m.get(row, col).mul_ref(&s);
                m.set(row, col, v);
            }
        }
        m
    }

    /// `Θ⁻_𝐢(c) = 𝐲_{i_1}(c_1) ⋯ 𝐲_{i_k}(c_k)`.
    pub fn theta_minus<T: Entry>(&self, word: &[usize], params: &[T], proto: &T) -> Matrix<T> {
        assert_eq!(word.len(), params.len(), "one parameter per letter");
        let mut m = Matrix::identity(self.dim, proto);
        for (&i, c) in word.iter().zip(params) {
            m = m.mul(&self.yb(i, c));
        }
        m
    }

    /// `Θ⁻_𝐢` with symbolic parameters `c_1, …, c_k`.
    pub fn theta_minus_symbolic(&self, word: &[usize]) -> SymMatrix {
        let n = word.len();
        let params: Vec<LaurentPoly> = (0..n).map(|k| LaurentPoly::var(n, k)).collect();
        self.theta_minus(word, &params, &LaurentPoly::one(n))
    }

    /// `τ Θ⁻_𝐢(c)^{-1} τ = 𝐲_{i_k}(c_k^{-1}) ⋯ 𝐲_{i_1}(c_1^{-1})` with symbolic
    /// parameters, where `τ` is the sign of the height grading.
    pub fn theta_dual_symbolic(&self, word: &[usize]) -> SymMatrix {
        let n = word.len();
        let mut m = Matrix::identity(self.dim, &LaurentPoly::one(n));
        for k in (0..n).rev() {
            let mut e = vec![0; n];
            e[k] = -1;
            m = m.mul(&self.yb(word[k], &LaurentPoly::monomial(e, 1)));
        }
        m
    }

    /// `s̄_i = x_i(-1) y_i(1) x_i(-1)`.
    pub fn sbar(&self, i: usize) -> IntMatrix {
        self.x(i, &-1i128).mul(&self.y(i, &1i128)).mul(&self.x(i, &-1i128))
    }

    /// `s̄_i^{-1} = x_i(1) y_i(-1) x_i(1)`.
    pub fn sbar_inv(&self, i: usize) -> IntMatrix {
        self.x(i, &1i128).mul(&self.y(i, &-1i128)).mul(&self.x(i, &1i128))
    }

    /// `w̄ = s̄_{i_1} ⋯ s̄_{i_k}` for a reduced word of `w`.
    pub fn weyl_bar(&self, word: &[usize]) -> IntMatrix {
        word.iter().fold(IntMatrix::identity(self.dim, &0), |m, &i| m.mul(&self.sbar(i)))
    }

    /// `w̄^{-1}`.
    pub fn weyl_bar_inv(&self, word: &[usize]) -> IntMatrix {
        word.iter().rev().fold(IntMatrix::identity(self.dim, &0), |m, &i| m.mul(&self.sbar_inv(i)))
    }

    /// `Δ_{uΛ_j, vΛ_j}(g) = Δ_{Λ_j}(ū^{-1} g v̄)`.
    pub fn generalized_minor<T: Entry>(&self, g: &Matrix<T>, u: &[usize], v: &[usize], j: usize) -> Result<T> {
        let k = self.minor_size(j)?;
        let proto = g.get(0, 0);
        let m = self.weyl_bar_inv(u).lift(proto).mul(g).mul(&self.weyl_bar(v).lift(proto));
        Ok(m.principal_minor(k))
    }
}

/// Solution of `Θ⁻_from(c) = Θ⁻_to(d)`, each `d_k` a ratio of
/// subtraction-free Laurent polynomials in `c`.
#[derive(Clone, Debug)]
pub struct ChamberSolution {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub d: Vec<RationalPair>,
}

impl ChamberSolution {
    pub fn eval_d(&self, c: &[BigRational]) -> Vec<BigRational> {
        self.d.iter().map(|r| r.eval(c)).collect()
    }
}

/// Solves `Θ⁻_from(c) = Θ⁻_to(d)` for `d` in the given representation.
///
/// Factors are stripped one at a time from both ends of the target word.
/// The result is verified by exact reassembly at `checks` random positive
/// rational points.
pub fn chamber_solve(rep: &MatrixRep, from: &[usize], to: &[usize], checks: usize, seed: u64) -> Result<ChamberSolution> {
    let n = from.len();
    if to.len() != n {
        return Err(Error::NotEquivalent);
    }
    let d = if n == 2 && from[0] == to[1] && from[1] == to[0] && rep.cartan().a(from[0], from[1]) == 0 {
        // commuting letters: d_1 = c_2, d_2 = c_1
        let one = LaurentPoly::one(2);
        vec![
            RationalPair::new(LaurentPoly::var(2, 1), one.clone())?,
            RationalPair::new(LaurentPoly::var(2, 0), one)?,
        ]
    } else {
        peel_solve(rep, from, to)?
    };
    for (k, r) in d.iter().enumerate() {
        if !r.is_subtraction_free() {
            return Err(Error::NotSubtractionFree(format!("d_{} = {}", k + 1, r)));
        }
    }
    let sol = ChamberSolution { from: from.to_vec(), to: to.to_vec(), d };
    let mut rng = sample::rng(seed);
    let one = BigRational::one();
    for _ in 0..checks {
        let c = sample::positive_point(&mut rng, n);
        let d = sol.eval_d(&c);
        if rep.theta_minus(from, &c, &one) != rep.theta_minus(to, &d, &one) {
            return Err(Error::Invalid(format!("chamber solution {:?} -> {:?} fails reassembly", from, to)));
        }
    }
    Ok(sol)
}

fn peel_solve(rep: &MatrixRep, from: &[usize], to: &[usize]) -> Result<Vec<RationalPair>> {
    let n = from.len();
    let mut atoms: Vec<LaurentPoly> = Vec::new();
    let mut d: Vec<Option<RationalPair>> = vec![None; n];
    // Left end: Θ⁻_to(d) up to a scalar.
    let mut p = rep.theta_minus_symbolic(from);
    let mut lo = 0;
    while lo < n {
        match peel_step(rep, &p, &to[lo..], &mut atoms)? {
            Some((r, next)) => {
                d[lo] = Some(r);
                p = next;
                lo += 1;
            }
            None => break,
        }
    }
    // Right end: τ Θ⁻_to(d)^{-1} τ = Θ⁻ of the reversed word at d^{-1}.
    let rev: Vec<usize> = to.iter().rev().copied().collect();
    let mut q = rep.theta_dual_symbolic(from);
    let mut hi = n;
    while hi > lo {
        match peel_step(rep, &q, &rev[n - hi..], &mut atoms)? {
            Some((r, next)) => {
                d[hi - 1] = Some(RationalPair::new(r.den, r.num)?);
                q = next;
                hi -= 1;
            }
            None => break,
        }
    }
    if hi - lo > 1 {
        return Err(Error::Invalid(format!("could not peel positions {}..{} of {:?}", lo + 1, hi, to)));
    }
    if hi - lo == 1 {
        d[lo] = Some(middle_from_diagonal(rep, from, to, lo, &d)?);
    }
    Ok(d.into_iter().map(|r| r.unwrap()).collect())
}

/// The diagonal of `Θ⁻_𝐢(c)` is the monomial `∏_k c_k^{-⟨h_{i_k}, wt v_r⟩}`;
/// with every other `d_k` known this pins down the missing one.
fn middle_from_diagonal(
    rep: &MatrixRep,
    from: &[usize],
    to: &[usize],
    k0: usize,
    d: &[Option<RationalPair>],
) -> Result<RationalPair> {
    let n = from.len();
    let r = (0..rep.dim())
        .find(|&r| rep.weight(r)[to[k0] - 1].abs() == 1)
        .ok_or_else(|| Error::Invalid("no weight with pairing ±1".into()))?;
    // d_{k0}^{-e} = ∏_k c_k^{-μ(from_k)} / ∏_{k≠k0} d_k^{-μ(to_k)}
    let mono: Vec<i32> = from.iter().map(|&i| -(rep.weight(r)[i - 1] as i32)).collect();
    let mut num = LaurentPoly::monomial(mono, 1);
    let mut den = LaurentPoly::one(n);
    for (k, dk) in d.iter().enumerate() {
        if k == k0 {
            continue;
        }
        let dk = dk.as_ref().unwrap();
        let e = -rep.weight(r)[to[k] - 1];
        if e > 0 {
            den = &den * &dk.num.pow(e as u32);
            num = &num * &dk.den.pow(e as u32);
        } else if e < 0 {
            num = &num * &dk.num.pow((-e) as u32);
            den = &den * &dk.den.pow((-e) as u32);
        }
    }
    let e = -rep.weight(r)[to[k0] - 1];
    let (num, den) = if e == 1 { (num, den) } else { (den, num) };
    let (num, den) = cancel_pair(num, den, &[]);
    RationalPair::new(num, den)
}

/// Strips `𝐲_j(d)` off the left of `p ∝ Θ⁻_word(d)`, `j = word[0]`.
///
/// The factor is found from the vanishing of the extremal minor at `wΛ_i`
/// on the remainder, for an `i` where that condition is linear in `d`.
/// Returns `None` when no such `i` exists.
fn peel_step(
    rep: &MatrixRep,
    p: &SymMatrix,
    word: &[usize],
    atoms: &mut Vec<LaurentPoly>,
) -> Result<Option<(RationalPair, SymMatrix)>> {
    let n = p.get(0, 0).nvars();
    let j = word[0];
    let cartan = rep.cartan();
    let map: Vec<usize> = (0..n).collect();
    let lifted = Matrix { n: p.n, data: p.data.iter().map(|x| x.embed(n + 1, &map)).collect() };
    let t = LaurentPoly::var(n + 1, n);
    let m = rep.y(j, &-&t).mul(&lifted);
    for i in rep.supported_minors() {
        let size = rep.minor_size(i)?;
        let mut lam = vec![0i64; cartan.rank()];
        lam[i - 1] = 1;
        let lam = WeightVec { coords: lam };
        let wl = cartan.act_weight(word, &lam);
        if wl == cartan.act_weight(&word[1..], &lam) {
            continue;
        }
        let Some(rows) = rows_of_weight(rep, size, &wl.coords) else { continue };
        let cols: Vec<usize> = (0..size).collect();
        let eq = m.minor(&rows, &cols);
        let mut parts: BTreeMap<i32, Vec<(Vec<i32>, i128)>> = BTreeMap::new();
        for (e, c) in eq.terms() {
            parts.entry(e[n]).or_default().push((e[..n].to_vec(), c));
        }
        if parts.keys().copied().collect::<Vec<_>>() != [0, 1] {
            continue;
        }
        let a0 = LaurentPoly::from_terms(n, parts.remove(&0).unwrap());
        let a1 = LaurentPoly::from_terms(n, parts.remove(&1).unwrap());
        // a0 + a1 d = 0
        let (mut a, mut b) = cancel_pair(a0, -&a1, atoms);
        if !a.is_subtraction_free() && (-&a).is_subtraction_free() {
            a = -&a;
            b = -&b;
        }
        if !a.is_subtraction_free() || !b.is_subtraction_free() {
            continue;
        }
        for x in [&a, &b] {
            if x.as_monomial().is_none() && !atoms.contains(x) {
                atoms.push(x.clone());
            }
        }
        let rem = remainder(rep, p, j, &a, &b);
        let next = strip_content(rem, atoms);
        return Ok(Some((RationalPair::new(a, b)?, next)));
    }
    Ok(None)
}

/// `(ab)^H α_j^∨(a/b) y_j(-a/b) b^L p`, polynomial in the entries of `p`.
fn remainder(rep: &MatrixRep, p: &SymMatrix, j: usize, a: &LaurentPoly, b: &LaurentPoly) -> SymMatrix {
    let n = a.nvars();
    let div = &rep.f_div[j - 1];
    let l = div.len() as u32;
    let mut y = Matrix::identity(rep.dim, &LaurentPoly::zero(n));
    let bl = b.pow(l);
    for v in y.data.iter_mut() {
        *v = &*v * &bl;
    }
    let neg_a = -a;
    for (r, f) in div.iter().enumerate() {
        let r = r as u32 + 1;
        let coef = &neg_a.pow(r) * &b.pow(l - r);
        for (slot, &v) in y.data.iter_mut().zip(&f.data) {
            if v != 0 {
                *slot = &*slot + &coef.scale(v);
            }
        }
    }
    let mut out = y.mul(p);
    let h: i64 = (0..rep.dim).map(|r| rep.weights[r][j - 1].abs()).max().unwrap_or(0);
    for r in 0..rep.dim {
        let mu = rep.weights[r][j - 1];
        let s = &a.pow((h + mu) as u32) * &b.pow((h - mu) as u32);
        for c in 0..rep.dim {
            let v = out.get(r, c).mul_ref(&s);
            out.set(r, c, v);
        }
    }
    out
}

/// The unique `size`-subset of basis vectors with the given total weight.
fn rows_of_weight(rep: &MatrixRep, size: usize, wt: &[i64]) -> Option<Vec<usize>> {
    let dim = rep.dim;
    let mut found = None;
    for mask in 0u64..(1 << dim) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let rows: Vec<usize> = (0..dim).filter(|r| mask >> r & 1 == 1).collect();
        let sum: Vec<i64> = (0..wt.len()).map(|i| rows.iter().map(|&r| rep.weights[r][i]).sum()).collect();
        if sum == wt {
            if found.is_some() {
                return None;
            }
            found = Some(rows);
        }
    }
    found
}

/// Divides out common factors drawn from `atoms` and from each other.
fn cancel_pair(mut a: LaurentPoly, mut b: LaurentPoly, atoms: &[LaurentPoly]) -> (LaurentPoly, LaurentPoly) {
    let mut progress = true;
    while progress {
        progress = false;
        if b.as_monomial().is_none() {
            if let Ok(q) = a.div_exact(&b) {
                return (q, LaurentPoly::one(a.nvars()));
            }
        }
        if a.as_monomial().is_none() {
            if let Ok(q) = b.div_exact(&a) {
                return (LaurentPoly::one(a.nvars()), q);
            }
        }
        for f in atoms {
            if let (Ok(qa), Ok(qb)) = (a.div_exact(f), b.div_exact(f)) {
                a = qa;
                b = qb;
                progress = true;
            }
        }
    }
    (a, b)
}

/// Removes factors from `atoms`, monomials and integers common to every entry.
fn strip_content(mut m: SymMatrix, atoms: &[LaurentPoly]) -> SymMatrix {
    let n = m.data[0].nvars();
    let nonzero = |m: &SymMatrix| m.data.iter().filter(|x| !x.is_zero()).cloned().collect::<Vec<_>>();
    let mut progress = true;
    while progress {
        progress = false;
        for f in atoms {
            // try the smallest entries first so a failure is cheap
            let mut order: Vec<usize> = (0..m.data.len()).filter(|&k| !m.data[k].is_zero()).collect();
            order.sort_by_key(|&k| m.data[k].len());
            let mut quotients = Vec::with_capacity(order.len());
            for &k in &order {
                match m.data[k].div_exact(f) {
                    Ok(q) => quotients.push((k, q)),
                    Err(_) => break,
                }
            }
            if quotients.len() == order.len() && !order.is_empty() {
                for (k, q) in quotients {
                    m.data[k] = q;
                }
                progress = true;
            }
        }
    }
    let entries = nonzero(&m);
    let mut lo = vec![i32::MAX; n];
    let mut g = 0i128;
    for x in &entries {
        let (l, _) = x.exponent_box();
        for v in 0..n {
            lo[v] = lo[v].min(l[v]);
        }
        for (_, c) in x.terms() {
            g = num_integer::Integer::gcd(&g, &c);
        }
    }
    if entries.is_empty() {
        return m;
    }
    let neg: Vec<i32> = lo.iter().map(|v| -v).collect();
    for v in m.data.iter_mut() {
        if !v.is_zero() {
            let s = v.shift(&neg);
            *v = if g > 1 { LaurentPoly::from_terms(n, s.terms().map(|(e, c)| (e.clone(), c / g))) } else { s };
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::canonical_longest_word;

    #[test]
    fn reps_build() {
        for (f, n, d) in [
            (Family::A, 1, 2),
            (Family::A, 3, 4),
            (Family::C, 2, 4),
            (Family::C, 3, 6),
            (Family::B, 2, 5),
            (Family::B, 3, 7),
            (Family::D, 4, 8),
            (Family::G, 2, 7),
        ] {
            let rep = MatrixRep::defining(f, n).unwrap();
            assert_eq!(rep.dim(), d);
        }
        let a1 = MatrixRep::defining(Family::A, 1).unwrap();
        assert_eq!(a1.e(1), &unit(2, &[(1, 2, 1)]));
        assert!(MatrixRep::defining(Family::E, 6).is_err());
    }

    #[test]
    fn minor_support() {
        let b3 = MatrixRep::defining(Family::B, 3).unwrap();
        assert_eq!(b3.supported_minors(), vec![1, 2]);
        let d4 = MatrixRep::defining(Family::D, 4).unwrap();
        assert_eq!(d4.supported_minors(), vec![1, 2]);
        let g2 = MatrixRep::defining(Family::G, 2).unwrap();
        assert_eq!(g2.minor_size(1).unwrap(), 2);
        assert_eq!(g2.minor_size(2).unwrap(), 1);
        let c3 = MatrixRep::defining(Family::C, 3).unwrap();
        assert_eq!(c3.supported_minors(), vec![1, 2, 3]);
        assert!(matches!(b3.minor_size(3), Err(Error::UnsupportedMinor(_))));
    }

    #[test]
    fn a1_matrices() {
        let a1 = MatrixRep::defining(Family::A, 1).unwrap();
        let c = LaurentPoly::var(1, 0);
        let y = a1.yb(1, &c);
        assert_eq!(y.get(0, 0), &LaurentPoly::monomial(vec![-1], 1));
        assert_eq!(y.get(1, 0), &LaurentPoly::one(1));
        assert_eq!(y.get(1, 1), &c);
        assert!(y.get(0, 1).is_zero());
        let s = a1.sbar(1);
        assert_eq!(s, unit(2, &[(1, 2, -1), (2, 1, 1)]));
        assert_eq!(a1.generalized_minor(&y, &[1], &[1], 1).unwrap(), c);
        assert_eq!(a1.generalized_minor(&y, &[1], &[], 1).unwrap(), LaurentPoly::one(1));
    }

    #[test]
    fn sbar_square_is_sign() {
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::B, 2), (Family::G, 2), (Family::D, 4)] {
            let rep = MatrixRep::defining(f, n).unwrap();
            for i in 1..=n {
                let s2 = rep.sbar(i).mul(&rep.sbar(i));
                for r in 0..rep.dim() {
                    let sign = if rep.weight(r)[i - 1] % 2 == 0 { 1 } else { -1 };
                    for c in 0..rep.dim() {
                        assert_eq!(*s2.get(r, c), if r == c { sign } else { 0 });
                    }
                }
            }
        }
    }

    #[test]
    fn longest_bar_is_word_independent() {
        let a2 = MatrixRep::defining(Family::A, 2).unwrap();
        assert_eq!(a2.weyl_bar(&[1, 2, 1]), a2.weyl_bar(&[2, 1, 2]));
        let g2 = MatrixRep::defining(Family::G, 2).unwrap();
        assert_eq!(g2.weyl_bar(&[1, 2, 1, 2, 1, 2]), g2.weyl_bar(&[2, 1, 2, 1, 2, 1]));
    }

    #[test]
    fn theta_a2() {
        let a2 = MatrixRep::defining(Family::A, 2).unwrap();
        let th = a2.theta_minus_symbolic(&[1, 2, 1]);
        // the torus factors of 𝐲 cancel in the corner entry
        assert_eq!(th.get(2, 0), &LaurentPoly::one(3));
        assert_eq!(th.get(0, 0), &LaurentPoly::parse("c[1]^-1*c[3]^-1", 3).unwrap());
        for r in 0..3 {
            for c in r + 1..3 {
                assert!(th.get(r, c).is_zero());
            }
        }
        assert!(th.entries().all(|e| e.is_zero() || e.is_subtraction_free()));
        let m = a2.generalized_minor(&th, &[1, 2, 1], &[1], 1).unwrap();
        assert_eq!(m, LaurentPoly::var(3, 2));
    }

    #[test]
    fn top_minors_are_one() {
        for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::C, 2), (Family::G, 2)] {
            let rep = MatrixRep::defining(f, n).unwrap();
            let w = canonical_longest_word(f, n).unwrap();
            let th = rep.theta_minus_symbolic(&w);
            for j in 1..=n {
                let m = rep.generalized_minor(&th, &w, &[], j).unwrap();
                assert_eq!(m, LaurentPoly::one(w.len()), "{f}{n} j={j}");
            }
        }
    }

    #[test]
    fn chamber_commuting_and_a2() {
        let a1a1 = MatrixRep::defining(Family::D, 4).unwrap();
        let sol = chamber_solve(&a1a1, &[1, 3], &[3, 1], 5, 7).unwrap();
        assert_eq!(sol.from, vec![1, 3]);
        let a2 = MatrixRep::defining(Family::A, 2).unwrap();
        let sol = chamber_solve(&a2, &[1, 2, 1], &[2, 1, 2], 10, 7).unwrap();
        for d in &sol.d {
            assert!(d.is_subtraction_free());
        }
    }

    #[test]
    fn chamber_c2() {
        for (f, from, to) in [
            (Family::C, vec![1, 2, 1, 2], vec![2, 1, 2, 1]),
            (Family::C, vec![2, 1, 2, 1], vec![1, 2, 1, 2]),
        ] {
            let rep = MatrixRep::defining(f, 2).unwrap();
            let sol = chamber_solve(&rep, &from, &to, 5, 11).unwrap();
            assert_eq!(sol.d.len(), from.len());
            assert!(sol.d.iter().all(|d| d.is_subtraction_free()));
        }
    }
}
