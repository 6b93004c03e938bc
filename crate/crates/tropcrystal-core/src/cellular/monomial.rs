//! The fundamental minors of the canonical word rewritten as sums over
//! orbits of the monomial crystal, with `Y_{s,j}` read as the `s`-th
//! occurrence of letter `j`.

use alloc::format;
use alloc::vec::Vec;

use super::catalog::catalog_minor;
use super::trail::cyclic_monomials;
use crate::crystalcore::{Crystal, MonomialCrystal, MonomialElem};
use crate::error::{Error, Result};
use crate::rootdata::{canonical_longest_word, CartanData, Family};
use crate::tropsym::{Flattening, LaurentPoly};

fn to_poly(fl: &Flattening, m: &MonomialElem) -> Result<LaurentPoly> {
    let mut e = alloc::vec![0i32; fl.len()];
    for (&(s, j), &l) in &m.exps {
        let k = usize::try_from(s)
            .ok()
            .and_then(|s| fl.index(s, j))
            .ok_or_else(|| Error::Invalid(format!("Y[{s},{j}] is not a variable of the word")))?;
        e[k] = l as i32;
    }
    Ok(LaurentPoly::monomial(e, 1))
}

struct Orbit<'a> {
    mc: &'a MonomialCrystal,
}

impl Orbit<'_> {
    fn f(&self, m: &MonomialElem, i: usize) -> Result<MonomialElem> {
        self.mc.f(m, i).ok_or_else(|| Error::Invalid(format!("f̃_{i} vanishes on {m}")))
    }

    /// Applies `f̃_{w_1} ⋯ f̃_{w_r}`, rightmost first.
    fn word(&self, m: &MonomialElem, w: &[usize]) -> Result<MonomialElem> {
        w.iter().rev().try_fold(m.clone(), |acc, &i| self.f(&acc, i))
    }
}

/// The expansion of `Δ_{w_0Λ_k, s_kΛ_k}` as monomial-crystal elements with
/// multiplicities.
pub fn monomial_terms(family: Family, rank: usize, k: usize) -> Result<Vec<(MonomialElem, i128)>> {
    let cartan = CartanData::new(family, rank)?;
    cartan.check_letter(k)?;
    let mc = cyclic_monomials(&cartan)?;
    let o = Orbit { mc: &mc };
    let n = rank as i64;
    let y = |s: i64, j: usize| MonomialElem::y(s, j);
    let mut out = Vec::new();
    // v_1, …, v_m along f̃_1, …, f̃_{m-1} from u
    let chain = |u: MonomialElem, m: usize| -> Result<Vec<MonomialElem>> {
        let mut v = alloc::vec![u];
        for j in 1..m {
            let next = o.f(&v[j - 1], j)?;
            v.push(next);
        }
        Ok(v)
    };
    match family {
        Family::A => {
            let v = chain(y(n - k as i64 + 1, 1), k)?;
            out.extend(v.into_iter().map(|m| (m, 1)));
        }
        Family::B | Family::C if k == rank => out.push((y(n, rank), 1)),
        Family::C | Family::B => {
            let v = chain(y(k as i64, 1), rank)?;
            let mut bar = alloc::vec![MonomialElem::one(); rank + 1];
            if family == Family::C {
                bar[rank] = o.f(&v[rank - 1], rank)?;
            } else {
                let v0 = o.f(&v[rank - 1], rank)?;
                bar[rank] = o.f(&v0, rank)?;
                out.push((v0, 2));
            }
            for j in (k + 1..rank).rev() {
                bar[j] = o.f(&bar[j + 1], j)?;
            }
            out.extend(v.into_iter().map(|m| (m, 1)));
            out.extend(bar.into_iter().skip(k + 1).map(|m| (m, 1)));
        }
        Family::D if k == rank - 1 => out.push((y(n - 1, rank - 1), 1)),
        Family::D if k == rank => out.push((y(n - 1, rank), 1)),
        Family::D => {
            let mut v = chain(y(k as i64, 1), rank - 1)?;
            let vn = o.f(&v[rank - 2], rank - 1)?;
            let mut bar = alloc::vec![MonomialElem::one(); rank + 1];
            bar[rank] = o.f(&v[rank - 2], rank)?;
            bar[rank - 1] = o.f(&vn, rank)?;
            for j in (k + 1..=rank - 2).rev() {
                bar[j] = o.f(&bar[j + 1], j)?;
            }
            v.push(vn);
            out.extend(v.into_iter().map(|m| (m, 1)));
            out.extend(bar.into_iter().skip(k + 1).map(|m| (m, 1)));
        }
        Family::G if k == 2 => out.push((y(3, 2), 1)),
        Family::G => {
            // f̃-words on c_1, written left to right as operators
            const TERMS: &[(i128, &[usize])] = &[
                (1, &[]),
                (1, &[1]),
                (3, &[2, 1]),
                (3, &[2, 2, 1]),
                (1, &[2, 2, 2, 1]),
                (2, &[1, 2, 2, 2, 1]),
                (1, &[1, 1, 2, 2, 2, 1]),
                (3, &[1, 2, 2, 1]),
                (3, &[2, 1, 2, 2, 1]),
                (3, &[2, 2, 1, 2, 2, 1]),
                (3, &[1, 2, 2, 1, 2, 2, 1]),
                (3, &[2, 1, 2, 2, 1, 2, 2, 1]),
                (1, &[2, 2, 1, 2, 2, 1, 2, 2, 1]),
            ];
            for &(c, w) in TERMS {
                out.push((o.word(&y(1, 1), w)?, c));
            }
        }
        Family::E | Family::F => {
            return Err(Error::Unsupported(format!("no monomial expansion for {family}{rank}")));
        }
    }
    Ok(out)
}

/// The expansion as a Laurent polynomial in the word's variables.
pub fn monomial_expansion(family: Family, rank: usize, k: usize) -> Result<LaurentPoly> {
    let word = canonical_longest_word(family, rank)?;
    let fl = Flattening::new(&word);
    let mut p = LaurentPoly::zero(word.len());
    for (m, c) in monomial_terms(family, rank, k)? {
        p = &p + &to_poly(&fl, &m)?.scale(c);
    }
    Ok(p)
}

/// Whether the orbit expansion reproduces the closed-form minor exactly.
pub fn monomial_restatement_check(family: Family, rank: usize, k: usize) -> Result<bool> {
    Ok(monomial_expansion(family, rank, k)? == catalog_minor(family, rank, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restatements() {
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 4), (Family::G, 2)] {
            for k in 1..=n {
                let a = monomial_expansion(f, n, k).unwrap();
                let b = catalog_minor(f, n, k).unwrap();
                assert_eq!(a, b, "{f}{n} k={k}");
            }
        }
    }
}
