//! Closed-form upper half potentials for the classical types and `G_2`, and
//! the same minors computed from the matrix model.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grouprep::MatrixRep;
use crate::rootdata::{canonical_longest_word, CartanData, Family};
use crate::tropsym::{Flattening, LaurentPoly};

/// Monomials in the double-index variables `ci(i, s)` (letter `i`, block `s`).
/// Letter 0 stands for the constant 1.
pub(crate) struct DoubleIndex {
    fl: Flattening,
}

impl DoubleIndex {
    pub(crate) fn new(word: &[usize]) -> Self {
        DoubleIndex { fl: Flattening::new(word) }
    }

    /// `∏ ci(i, s)^e` over the given factors.
    pub(crate) fn mono(&self, factors: &[(usize, usize, i32)]) -> Result<LaurentPoly> {
        let mut exps = alloc::vec![0i32; self.fl.len()];
        for &(i, s, e) in factors {
            if i == 0 {
                continue;
            }
            let k = self
                .fl
                .index(s, i)
                .ok_or_else(|| Error::Invalid(format!("word has no variable for letter {i}, block {s}")))?;
            exps[k] += e;
        }
        Ok(LaurentPoly::monomial(exps, 1))
    }

    pub(crate) fn ratio(&self, num: (usize, usize), den: (usize, usize)) -> Result<LaurentPoly> {
        self.mono(&[(num.0, num.1, 1), (den.0, den.1, -1)])
    }
}

/// `Δ_{w_0Λ_j, s_jΛ_j}(Θ⁻(c))` for the canonical longest word, from the closed forms.
pub fn catalog_minor(family: Family, rank: usize, j: usize) -> Result<LaurentPoly> {
    let cartan = CartanData::new(family, rank)?;
    cartan.check_letter(j)?;
    let word = canonical_longest_word(family, rank)?;
    let d = DoubleIndex::new(&word);
    let n = rank;
    let k = j;
    let mut terms: Vec<(LaurentPoly, i128)> = Vec::new();
    match family {
        Family::A => {
            // block s of the staircase word is 1 2 … n-s+1
            let s = n - k + 1;
            terms.push((d.mono(&[(1, s, 1)])?, 1));
            for t in 2..=k {
                terms.push((d.ratio((t, s), (t - 1, s + 1))?, 1));
            }
        }
        Family::C => {
            if k == n {
                terms.push((d.mono(&[(n, n, 1)])?, 1));
            } else {
                for i in 1..=n {
                    terms.push((d.ratio((i, k), (i - 1, k + 1))?, 1));
                }
                for i in (k + 1..=n).rev() {
                    let b = k + n - i + 1;
                    terms.push((d.ratio((i - 1, b), (i, b))?, 1));
                }
            }
        }
        Family::B => {
            if k == n {
                terms.push((d.mono(&[(n, n, 1)])?, 1));
            } else {
                for i in 1..n {
                    terms.push((d.ratio((i, k), (i - 1, k + 1))?, 1));
                }
                terms.push((d.mono(&[(n, k, 2), (n - 1, k + 1, -1)])?, 1));
                terms.push((d.ratio((n, k), (n, k + 1))?, 2));
                terms.push((d.mono(&[(n - 1, k + 1, 1), (n, k + 1, -2)])?, 1));
                for i in (k + 1..n).rev() {
                    let b = k + n - i + 1;
                    terms.push((d.ratio((i - 1, b), (i, b))?, 1));
                }
            }
        }
        Family::D => {
            if k == n - 1 {
                terms.push((d.mono(&[(n - 1, n - 1, 1)])?, 1));
            } else if k == n {
                terms.push((d.mono(&[(n, n - 1, 1)])?, 1));
            } else {
                for i in 1..=n - 2 {
                    terms.push((d.ratio((i, k), (i - 1, k + 1))?, 1));
                }
                terms.push((d.mono(&[(n - 1, k, 1), (n, k, 1), (n - 2, k + 1, -1)])?, 1));
                terms.push((d.mono(&[(n - 2, k + 1, 1), (n - 1, k + 1, -1), (n, k + 1, -1)])?, 1));
                terms.push((d.ratio((n, k), (n - 1, k + 1))?, 1));
                terms.push((d.ratio((n - 1, k), (n, k + 1))?, 1));
                for i in (k + 1..=n - 2).rev() {
                    let b = k + n - i;
                    terms.push((d.ratio((i - 1, b), (i, b))?, 1));
                }
            }
        }
        Family::G => {
            let text = if k == 2 {
                "c[6]"
            } else {
                "c[1] + c[2]^3*c[3]^-1 + 3*c[2]^2*c[4]^-1 + 3*c[2]*c[3]*c[4]^-2 + c[3]^2*c[4]^-3 \
                 + 2*c[3]*c[5]^-1 + c[4]^3*c[5]^-2 + 3*c[2]*c[4]*c[5]^-1 + 3*c[2]*c[6]^-1 \
                 + 3*c[3]*c[4]^-1*c[6]^-1 + 3*c[4]^2*c[5]^-1*c[6]^-1 + 3*c[4]*c[6]^-2 + c[5]*c[6]^-3"
            };
            return LaurentPoly::parse(text, word.len());
        }
        Family::E | Family::F => {
            return Err(Error::Unsupported(format!(
                "no closed-form minor for {}{}; use the lowest-term data",
                family, rank
            )))
        }
    }
    let mut out = LaurentPoly::zero(word.len());
    for (t, c) in terms {
        out = &out + &t.scale(c);
    }
    Ok(out)
}

/// A diagram relabelling under which a minor the matrix model lacks becomes one it has.
struct Relabel {
    rep: MatrixRep,
    /// letter of the original diagram ↦ letter of the model diagram
    letters: Vec<usize>,
}

fn relabel_for(family: Family, rank: usize, j: usize) -> Option<Relabel> {
    match (family, rank, j) {
        // B_2 with its nodes swapped is C_2; the spin node becomes the vector node
        (Family::B, 2, 2) => Some(Relabel { rep: MatrixRep::defining(Family::C, 2).ok()?, letters: alloc::vec![0, 2, 1] }),
        // triality of D_4: swap node 1 with node 3 or 4
        (Family::D, 4, 3) => Some(Relabel { rep: MatrixRep::defining(Family::D, 4).ok()?, letters: alloc::vec![0, 3, 2, 1, 4] }),
        (Family::D, 4, 4) => Some(Relabel { rep: MatrixRep::defining(Family::D, 4).ok()?, letters: alloc::vec![0, 4, 2, 3, 1] }),
        _ => None,
    }
}

/// `Δ_{w_0Λ_j, s_jΛ_j}(Θ⁻_word(c))` from the matrix model, with `word` a
/// reduced word of `w_0`. Minors outside the defining representation are
/// reached through a diagram isomorphism where one exists.
pub fn minor_laurent(rep: &MatrixRep, word: &[usize], j: usize) -> Result<LaurentPoly> {
    let cartan = rep.cartan();
    cartan.check_word(word)?;
    if rep.minor_size(j).is_ok() {
        let th = rep.theta_minus_symbolic(word);
        return rep.generalized_minor(&th, word, &[j], j);
    }
    let Some(rl) = relabel_for(cartan.family(), cartan.rank(), j) else {
        return Err(Error::UnsupportedMinor(format!("Λ_{j} of {}", cartan.name())));
    };
    let moved: Vec<usize> = word.iter().map(|&i| rl.letters[i]).collect();
    let jj = rl.letters[j];
    let th = rl.rep.theta_minus_symbolic(&moved);
    rl.rep.generalized_minor(&th, &moved, &[jj], jj)
}

/// The fundamental minors the oracle can produce for a type.
pub fn oracle_minors(rep: &MatrixRep) -> Vec<usize> {
    let c = rep.cartan();
    (1..=c.rank())
        .filter(|&j| rep.minor_size(j).is_ok() || relabel_for(c.family(), c.rank(), j).is_some())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_matches_oracle() {
        for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::C, 2), (Family::C, 3), (Family::G, 2), (Family::B, 3), (Family::D, 4)] {
            let rep = MatrixRep::defining(f, n).unwrap();
            let w = canonical_longest_word(f, n).unwrap();
            for j in oracle_minors(&rep) {
                let a = catalog_minor(f, n, j).unwrap();
                let b = minor_laurent(&rep, &w, j).unwrap();
                std::println!("{f}{n} j={j}: catalog {a}\n   oracle {b}");
                assert_eq!(a, b, "{f}{n} j={j}");
            }
        }
    }
}
