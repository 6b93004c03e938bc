//! Exact Laurent polynomials over the integers and their min-plus tropicalization.
//!
//! Variables are numbered by position in the active reduced word. A
//! [`Flattening`] translates positions to the double index `(s, j)`
//! (the `s`-th occurrence of letter `j`) used when printing and parsing.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Exponent = Vec<i32>;

fn add_coeff(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn mul_coeff(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

/// A Laurent polynomial `Σ c_e x^e` with `i128` coefficients.
///
/// Arithmetic panics on coefficient overflow; the magnitudes occurring for
/// rank ≤ 8 minors stay far below that.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, i128>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i128) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable with 0-based index `k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(e, 1)
    }

    pub fn monomial(exps: Exponent, coeff: i128) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exps, coeff);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, i128)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: i128) {
        if c == 0 {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = add_coeff(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, i128)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, e: &[i32]) -> i128 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// `Some((e, c))` when the polynomial is the single term `c x^e`.
    pub fn as_monomial(&self) -> Option<(&Exponent, i128)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, &c)| (e, c))
        } else {
            None
        }
    }

    pub fn is_subtraction_free(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|&c| c > 0)
    }

    pub fn scale(&self, k: i128) -> Self {
        if k == 0 {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), mul_coeff(c, k))).collect(),
        }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in the Laurent ring.
    ///
    /// Runs lexicographic leading-term division. Quotient exponents are
    /// confined to the box forced by the supports of `self` and `divisor`,
    /// so a non-divisor is detected instead of looping forever; the error
    /// carries the remainder at the point of failure.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::Invalid("division by the zero polynomial".to_string()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let n = self.nvars;
        let (f_lo, f_hi) = self.exponent_box();
        let (g_lo, g_hi) = divisor.exponent_box();
        let lo: Vec<i32> = (0..n).map(|v| f_lo[v] - g_hi[v]).collect();
        let hi: Vec<i32> = (0..n).map(|v| f_hi[v] - g_lo[v]).collect();
        let (lead_g, lead_gc) = divisor.terms.iter().next_back().map(|(e, &c)| (e.clone(), c)).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(n);
        while let Some((lead_r, lead_rc)) = rem.terms.iter().next_back().map(|(e, &c)| (e.clone(), c)) {
            let eq: Vec<i32> = lead_r.iter().zip(&lead_g).map(|(a, b)| a - b).collect();
            let inside = (0..n).all(|v| lo[v] <= eq[v] && eq[v] <= hi[v]);
            if lead_rc % lead_gc != 0 || !inside {
                return Err(Error::NotDivisible { remainder: rem.to_string() });
            }
            let cq = lead_rc / lead_gc;
            let step = divisor.shift(&eq).scale(cq);
            rem = &rem - &step;
            quot.add_term(eq, cq);
        }
        Ok(quot)
    }

    /// Componentwise minimum and maximum exponents over the support.
    pub fn exponent_box(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for v in 0..self.nvars {
                lo[v] = lo[v].min(e[v]);
                hi[v] = hi[v].max(e[v]);
            }
        }
        (lo, hi)
    }

    /// One linear form per monomial; coefficients are dropped.
    pub fn tropicalize(&self) -> Result<TropForm> {
        if !self.is_subtraction_free() {
            return Err(Error::NotSubtractionFree(self.to_string()));
        }
        Ok(TropForm::new(
            self.nvars,
            self.terms.keys().map(|e| e.iter().map(|&v| v as i64).collect()),
        ))
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars, "evaluation point dimension");
        let mut acc = BigRational::zero();
        for (e, &c) in &self.terms {
            let mut t = BigRational::from_integer(BigInt::from(c));
            for (v, &k) in e.iter().enumerate() {
                if k != 0 {
                    t *= point[v].pow(k);
                }
            }
            acc += t;
        }
        acc
    }

    /// Value at a point with all coordinates positive.
    pub fn eval_positive(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.iter().any(|p| *p <= BigRational::zero()) {
            return Err(Error::Invalid("evaluation point must be positive".to_string()));
        }
        Ok(self.eval(point))
    }

    /// Replaces variables by new variable indices in a larger ring.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(nvars);
        for (e, &c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (v, &k) in e.iter().enumerate() {
                ne[map[v]] += k;
            }
            out.add_term(ne, c);
        }
        out
    }

    /// Formats with a custom variable printer.
    pub fn format_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(name(v)),
                    _ => factors.push(format!("{}^{}", name(v), k)),
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag != 1 {
                    out.push_str(&format!("{}*", mag));
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Parses `3*c[2]^2*c[1]^-1 + c[3]` (1-based positions).
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        parse_poly(text, nvars, &|idx: &[usize]| match idx {
            [k] if *k >= 1 && *k <= nvars => Ok(*k - 1),
            _ => Err(Error::Parse(format!("bad variable index {:?}", idx))),
        })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&|v| format!("c[{}]", v + 1)))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c.checked_neg().expect("Laurent coefficient overflow"));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut acc: BTreeMap<Exponent, i128> = BTreeMap::new();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let slot = acc.entry(e).or_insert(0);
                *slot = add_coeff(*slot, mul_coeff(c1, c2));
            }
        }
        acc.retain(|_, c| *c != 0);
        LaurentPoly { nvars: self.nvars, terms: acc }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

fn parse_poly(
    text: &str,
    nvars: usize,
    resolve: &dyn Fn(&[usize]) -> Result<usize>,
) -> Result<LaurentPoly> {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".to_string()));
    }
    if s == ['0'] {
        return Ok(LaurentPoly::zero(nvars));
    }
    let mut pos = 0;
    let mut out = LaurentPoly::zero(nvars);
    let mut sign = 1i128;
    if s[0] == '-' {
        sign = -1;
        pos = 1;
    } else if s[0] == '+' {
        pos = 1;
    }
    loop {
        let (exps, coeff) = parse_term(&s, &mut pos, nvars, resolve)?;
        out.add_term(exps, sign * coeff);
        if pos >= s.len() {
            break;
        }
        sign = match s[pos] {
            '+' => 1,
            '-' => -1,
            c => return Err(Error::Parse(format!("unexpected '{c}' at {pos}"))),
        };
        pos += 1;
    }
    Ok(out)
}

fn parse_int(s: &[char], pos: &mut usize) -> Result<i128> {
    let start = *pos;
    if *pos < s.len() && s[*pos] == '-' {
        *pos += 1;
    }
    while *pos < s.len() && s[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let lit: String = s[start..*pos].iter().collect();
    lit.parse::<i128>().map_err(|_| Error::Parse(format!("bad integer at {start}")))
}

fn parse_term(
    s: &[char],
    pos: &mut usize,
    nvars: usize,
    resolve: &dyn Fn(&[usize]) -> Result<usize>,
) -> Result<(Exponent, i128)> {
    let mut coeff = 1i128;
    let mut exps = vec![0i32; nvars];
    let mut first = true;
    loop {
        if *pos < s.len() && s[*pos].is_ascii_digit() {
            if !first {
                return Err(Error::Parse(format!("coefficient must lead its term at {}", *pos)));
            }
            coeff = parse_int(s, pos)?;
        } else if *pos + 1 < s.len() && s[*pos] == 'c' && s[*pos + 1] == '[' {
            *pos += 2;
            let mut idx = Vec::new();
            loop {
                let v = parse_int(s, pos)?;
                idx.push(usize::try_from(v).map_err(|_| Error::Parse("negative index".to_string()))?);
                match s.get(*pos) {
                    Some(',') => *pos += 1,
                    Some(']') => {
                        *pos += 1;
                        break;
                    }
                    _ => return Err(Error::Parse(format!("unterminated variable at {}", *pos))),
                }
            }
            let var = resolve(&idx)?;
            let mut k = 1i128;
            if s.get(*pos) == Some(&'^') {
                *pos += 1;
                k = parse_int(s, pos)?;
            }
            exps[var] += i32::try_from(k).map_err(|_| Error::Parse("exponent too large".to_string()))?;
        } else {
            return Err(Error::Parse(format!("expected coefficient or variable at {}", *pos)));
        }
        first = false;
        if s.get(*pos) == Some(&'*') {
            *pos += 1;
        } else {
            return Ok((exps, coeff));
        }
    }
}

/// Ratio of two Laurent polynomials with monomial and integer content stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPair {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalPair {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".to_string()));
        }
        let n = num.nvars();
        // Push the denominator's monomial content into the numerator.
        let (dlo, _) = den.exponent_box();
        let neg: Vec<i32> = dlo.iter().map(|v| -v).collect();
        let mut num = num.shift(&neg);
        let mut den = den.shift(&neg);
        if let Some((e, c)) = den.as_monomial().map(|(e, c)| (e.clone(), c)) {
            let inv: Vec<i32> = e.iter().map(|v| -v).collect();
            num = num.shift(&inv);
            den = LaurentPoly::constant(n, c);
        }
        let g = num
            .terms()
            .chain(den.terms())
            .fold(0i128, |g, (_, c)| num_integer::Integer::gcd(&g, &c));
        let g = if den.terms.values().next_back().map(|&c| c < 0).unwrap_or(false) { -g } else { g };
        if g != 1 && g != 0 {
            num = LaurentPoly::from_terms(n, num.terms().map(|(e, c)| (e.clone(), c / g)));
            den = LaurentPoly::from_terms(n, den.terms().map(|(e, c)| (e.clone(), c / g)));
        }
        Ok(RationalPair { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        RationalPair { num: p, den: LaurentPoly::one(n) }
    }

    pub fn is_subtraction_free(&self) -> bool {
        self.num.is_subtraction_free() && self.den.is_subtraction_free()
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        self.num.eval(point) / self.den.eval(point)
    }

    /// Tropical value `TR(num) − TR(den)` at an integer point.
    pub fn trop_eval(&self, x: &[i64]) -> Result<i64> {
        Ok(self.num.tropicalize()?.eval(x) - self.den.tropicalize()?.eval(x))
    }
}

impl fmt::Display for RationalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one(self.den.nvars()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// `min` of finitely many integer linear forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropForm {
    nvars: usize,
    forms: BTreeSet<Vec<i64>>,
}

impl TropForm {
    pub fn new(nvars: usize, forms: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let forms: BTreeSet<Vec<i64>> = forms.into_iter().collect();
        assert!(forms.iter().all(|f| f.len() == nvars), "form length mismatch");
        TropForm { nvars, forms }
    }

    /// The tropical unit: the single zero form.
    pub fn zero_form(nvars: usize) -> Self {
        Self::new(nvars, [vec![0; nvars]])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> impl Iterator<Item = &Vec<i64>> + '_ {
        self.forms.iter()
    }

    pub fn contains(&self, form: &[i64]) -> bool {
        self.forms.contains(form)
    }

    pub fn insert(&mut self, form: Vec<i64>) {
        assert_eq!(form.len(), self.nvars);
        self.forms.insert(form);
    }

    pub fn remove(&mut self, form: &[i64]) -> bool {
        self.forms.remove(form)
    }

    /// `min_f ⟨f, x⟩`. Panics on an empty form set.
    pub fn eval(&self, x: &[i64]) -> i64 {
        assert_eq!(x.len(), self.nvars, "tropical evaluation dimension");
        self.forms
            .iter()
            .map(|f| f.iter().zip(x).map(|(a, b)| a * b).sum::<i64>())
            .min()
            .expect("empty tropical form")
    }

    /// Tropical sum: union of forms.
    pub fn trop_add(&self, other: &TropForm) -> TropForm {
        TropForm::new(self.nvars, self.forms.iter().chain(other.forms.iter()).cloned())
    }

    /// Tropical product: pairwise sums of forms.
    pub fn trop_mul(&self, other: &TropForm) -> TropForm {
        let mut out = BTreeSet::new();
        for a in &self.forms {
            for b in &other.forms {
                out.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        TropForm { nvars: self.nvars, forms: out }
    }

    /// Formats as `min(x1, 3x2 - x3)`.
    pub fn pretty(&self) -> String {
        let parts: Vec<String> = self.forms.iter().map(|f| format_linear(f)).collect();
        if parts.len() == 1 {
            parts[0].clone()
        } else {
            format!("min({})", parts.join(", "))
        }
    }
}

/// Formats an integer linear form over `x1, x2, …`.
pub fn format_linear(f: &[i64]) -> String {
    let mut out = String::new();
    for (v, &k) in f.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let mag = k.unsigned_abs();
        if out.is_empty() {
            if k < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if k < 0 { " - " } else { " + " });
        }
        if mag != 1 {
            out.push_str(&mag.to_string());
        }
        out.push_str(&format!("x{}", v + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Tropical evaluation `min_f ⟨f, x⟩`.
pub fn trop_eval(t: &TropForm, x: &[i64]) -> i64 {
    t.eval(x)
}

/// Position `k` of a word ↔ double index `(s, j)`: the `s`-th occurrence of letter `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flattening {
    word: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
}

impl Flattening {
    pub fn new(word: &[usize]) -> Self {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        let mut pairs = Vec::with_capacity(word.len());
        let mut index = BTreeMap::new();
        for (k, &j) in word.iter().enumerate() {
            let s = count.entry(j).or_insert(0);
            *s += 1;
            pairs.push((*s, j));
            index.insert((*s, j), k);
        }
        Flattening { word: word.to_vec(), pairs, index }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// 0-based position of `c[s, j]`.
    pub fn index(&self, s: usize, j: usize) -> Option<usize> {
        self.index.get(&(s, j)).copied()
    }

    /// `(s, j)` at 0-based position `k`.
    pub fn pair(&self, k: usize) -> (usize, usize) {
        self.pairs[k]
    }

    /// The variable `c[s, j]`; `s = 0` gives the constant 1.
    pub fn var(&self, s: usize, j: usize) -> LaurentPoly {
        if s == 0 {
            return LaurentPoly::one(self.len());
        }
        let k = self.index(s, j).unwrap_or_else(|| panic!("no variable c[{s},{j}] in word"));
        LaurentPoly::var(self.len(), k)
    }

    /// Exponent vector of `c[s, j]` (`s = 0` gives the zero vector).
    pub fn unit(&self, s: usize, j: usize) -> Vec<i32> {
        let mut e = vec![0; self.len()];
        if s > 0 {
            e[self.index(s, j).unwrap_or_else(|| panic!("no variable c[{s},{j}] in word"))] = 1;
        }
        e
    }

    pub fn format(&self, p: &LaurentPoly) -> String {
        p.format_with(&|v| {
            let (s, j) = self.pairs[v];
            format!("c[{},{}]", s, j)
        })
    }

    /// Parses the double-index text format, also accepting single positions `c[k]`.
    pub fn parse(&self, text: &str) -> Result<LaurentPoly> {
        let n = self.len();
        parse_poly(text, n, &|idx: &[usize]| match idx {
            [s, j] => self.index(*s, *j).ok_or_else(|| Error::Parse(format!("no variable c[{s},{j}]"))),
            [k] if *k >= 1 && *k <= n => Ok(*k - 1),
            _ => Err(Error::Parse(format!("bad variable index {:?}", idx))),
        })
    }
}

/// `1` as a rational, for callers without `num_traits` in scope.
pub fn rat_one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize, k: usize) -> LaurentPoly {
        LaurentPoly::var(n, k)
    }

    #[test]
    fn ring_basics() {
        let (c1, c2) = (c(2, 0), c(2, 1));
        let lhs = &(&c1 + &c2) * &(&c1 - &c2);
        let rhs = &c1.pow(2) - &c2.pow(2);
        assert_eq!(lhs, rhs);
        let num = &(&c1 * &c2) + &c2.pow(2);
        assert_eq!(num.div_exact(&c2).unwrap(), &c1 + &c2);
        assert!(matches!((&c1 + &c2).div_exact(&(&c1 + &LaurentPoly::one(2))), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn laurent_division() {
        let (a, b) = (c(2, 0), c(2, 1));
        let inv_b = LaurentPoly::monomial(vec![0, -1], 1);
        let f = &(&a * &inv_b) + &LaurentPoly::constant(2, 3);
        let g = &a + &b;
        assert_eq!((&f * &g).div_exact(&g).unwrap(), f);
    }

    #[test]
    fn subtraction_free_and_trop() {
        let p = LaurentPoly::parse("c[1] + 2*c[2]*c[3]^-1", 3).unwrap();
        assert!(p.is_subtraction_free());
        assert!(!LaurentPoly::parse("c[1] - c[2]", 2).unwrap().is_subtraction_free());
        let t = LaurentPoly::parse("c[1] + c[2]^3*c[3]^-1", 3).unwrap().tropicalize().unwrap();
        assert_eq!(t.pretty(), "min(3x2 - x3, x1)");
        assert_eq!(t.eval(&[0, 0, 0]), 0);
        let a2 = LaurentPoly::parse("c[3] + c[1] + c[2]*c[3]^-1", 3).unwrap().tropicalize().unwrap();
        assert_eq!(a2.eval(&[1, 2, 1]), 1);
        assert!(LaurentPoly::parse("c[1] - c[2]", 2).unwrap().tropicalize().is_err());
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::parse("c[1] + c[2]", 2).unwrap();
        let one = BigRational::one();
        assert_eq!(p.eval(&[one.clone(), one.clone()]), BigRational::from_integer(2.into()));
        let q = LaurentPoly::parse("c[1]*c[2]^-1", 2).unwrap();
        let v = q.eval(&[BigRational::from_integer(3.into()), BigRational::from_integer(2.into())]);
        assert_eq!(v, BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn text_round_trip() {
        let fl = Flattening::new(&[1, 2, 1, 2]);
        let p = fl.parse("3*c[2,1]^2*c[1,2]^-1 + c[1,1]").unwrap();
        let printed = fl.format(&p);
        assert_eq!(fl.parse(&printed).unwrap(), p);
        assert_eq!(fl.index(2, 1), Some(2));
        assert_eq!(fl.pair(3), (2, 2));
        let neg = LaurentPoly::parse("-c[1] + 4 - 2*c[2]^3", 2).unwrap();
        assert_eq!(LaurentPoly::parse(&neg.to_string(), 2).unwrap(), neg);
    }

    #[test]
    fn rational_pairs() {
        let c1 = c(2, 0);
        let c2 = c(2, 1);
        let r = RationalPair::new(&c1 * &c2, c2.scale(2)).unwrap();
        assert_eq!(r.num, c1);
        assert_eq!(r.den, LaurentPoly::constant(2, 2));
        let s = RationalPair::new(&c1 * &c2, &(&c1 * &c2) + &c2.pow(2)).unwrap();
        assert_eq!(s.den, &c1 + &c2);
        assert_eq!(s.num, c1);
    }
}
