//! The positive geometric crystal on `Θ⁻_word(c)`, evaluated at exact
//! positive rational points.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::grouprep::{Matrix, MatrixRep};
use crate::rootdata::CartanData;
use crate::tropsym::LaurentPoly;

type Q = BigRational;

fn q(k: i64) -> Q {
    Q::from_integer(k.into())
}

/// `P_m = c_1^{a_{i_1,i}} ⋯ c_{m-1}^{a_{i_{m-1},i}} c_m` for the positions `m` with `i_m = i`.
fn prefix_products(cartan: &CartanData, word: &[usize], c: &[Q], i: usize) -> Vec<(usize, Q)> {
    let mut out = Vec::new();
    let mut head = Q::one();
    for (m, &im) in word.iter().enumerate() {
        if im == i {
            out.push((m, &head * &c[m]));
        }
        head *= c[m].pow(cartan.a(im, i) as i32);
    }
    out
}

/// `e_i^α` on the coordinates `c`.
pub fn e_action(cartan: &CartanData, word: &[usize], c: &[Q], i: usize, alpha: &Q) -> Vec<Q> {
    let p = prefix_products(cartan, word, c, i);
    (0..c.len())
        .map(|j| {
            let mut num = Q::zero();
            let mut den = Q::zero();
            for (m, pm) in &p {
                num += if *m < j { alpha * pm } else { pm.clone() };
                den += if *m <= j { alpha * pm } else { pm.clone() };
            }
            if den.is_zero() {
                return c[j].clone();
            }
            &c[j] * num / den
        })
        .collect()
}

/// `ε_i = (Σ_{i_m = i} 1 / (c_m c_{m+1}^{a_{i_{m+1},i}} ⋯ c_N^{a_{i_N,i}}))^{-1}`.
pub fn geo_eps(cartan: &CartanData, word: &[usize], c: &[Q], i: usize) -> Q {
    let mut sum = Q::zero();
    let mut tail = Q::one();
    for m in (0..word.len()).rev() {
        if word[m] == i {
            sum += (&c[m] * &tail).recip();
        }
        tail *= c[m].pow(cartan.a(word[m], i) as i32);
    }
    sum.recip()
}

/// `γ_i = 1 / ∏_l c_l^{a_{i_l,i}}`.
pub fn geo_gamma(cartan: &CartanData, word: &[usize], c: &[Q], i: usize) -> Q {
    word.iter().zip(c).fold(Q::one(), |acc, (&il, cl)| acc * cl.pow(cartan.a(il, i) as i32)).recip()
}

fn apply_seq(cartan: &CartanData, word: &[usize], c: &[Q], seq: &[(usize, Q)]) -> Vec<Q> {
    // rightmost operator acts first
    seq.iter().rev().fold(c.to_vec(), |x, (i, a)| e_action(cartan, word, &x, *i, a))
}

/// Both sides of the Verma relation for the pair `(i, j)`, or `None` when
/// `a_{ij} a_{ji}` has no relation in this orientation.
pub fn verma_sides(
    cartan: &CartanData,
    word: &[usize],
    c: &[Q],
    i: usize,
    j: usize,
    c1: &Q,
    c2: &Q,
) -> Option<(Vec<Q>, Vec<Q>)> {
    let (aij, aji) = (cartan.a(i, j), cartan.a(j, i));
    let p = |a: &Q, k: i32, b: &Q, l: i32| a.pow(k) * b.pow(l);
    type Seq = Vec<(usize, Q)>;
    let (lhs, rhs): (Seq, Seq) = match (aij, aji) {
        (0, 0) => (vec![(i, c1.clone()), (j, c2.clone())], vec![(j, c2.clone()), (i, c1.clone())]),
        (-1, -1) => (
            vec![(i, c1.clone()), (j, c1 * c2), (i, c2.clone())],
            vec![(j, c2.clone()), (i, c1 * c2), (j, c1.clone())],
        ),
        (-2, -1) => (
            vec![(i, c1.clone()), (j, p(c1, 2, c2, 1)), (i, c1 * c2), (j, c2.clone())],
            vec![(j, c2.clone()), (i, c1 * c2), (j, p(c1, 2, c2, 1)), (i, c1.clone())],
        ),
        (-3, -1) => (
            vec![(i, c1.clone()), (j, p(c1, 3, c2, 1)), (i, p(c1, 2, c2, 1)), (j, p(c1, 3, c2, 2)), (i, c1 * c2), (j, c2.clone())],
            vec![(j, c2.clone()), (i, c1 * c2), (j, p(c1, 3, c2, 2)), (i, p(c1, 2, c2, 1)), (j, p(c1, 3, c2, 1)), (i, c1.clone())],
        ),
        _ => return None,
    };
    Some((apply_seq(cartan, word, c, &lhs), apply_seq(cartan, word, c, &rhs)))
}

/// Failures of the geometric identities at one point.
pub fn identities_at(
    cartan: &CartanData,
    word: &[usize],
    phi: Option<&LaurentPoly>,
    c: &[Q],
    alpha: &Q,
    beta: &Q,
) -> Vec<String> {
    let n = cartan.rank();
    let mut bad = Vec::new();
    for i in 1..=n {
        let y = e_action(cartan, word, c, i, alpha);
        if e_action(cartan, word, &y, i, beta) != e_action(cartan, word, c, i, &(alpha * beta)) {
            bad.push(format!("e_{i} is not a group action"));
        }
        if e_action(cartan, word, c, i, &Q::one()) != c {
            bad.push(format!("e_{i}^1 is not the identity"));
        }
        for j in 1..=n {
            if geo_gamma(cartan, word, &y, j) != alpha.pow(cartan.a(i, j) as i32) * geo_gamma(cartan, word, c, j) {
                bad.push(format!("γ_{j}(e_{i}^c x) ≠ c^a_{i}{j} γ_{j}(x)"));
            }
            if j == i && geo_eps(cartan, word, &y, i) != alpha.recip() * geo_eps(cartan, word, c, i) {
                bad.push(format!("ε_{i}(e_{i}^c x) ≠ c^-1 ε_{i}(x)"));
            }
            if j != i && cartan.a(i, j) == 0 && geo_eps(cartan, word, &y, j) != geo_eps(cartan, word, c, j) {
                bad.push(format!("ε_{j} not invariant under e_{i}"));
            }
            if j != i {
                if let Some((l, r)) = verma_sides(cartan, word, c, i, j, alpha, beta) {
                    if l != r {
                        bad.push(format!("Verma relation for ({i},{j})"));
                    }
                }
            }
        }
        if let Some(phi) = phi {
            let lhs = phi.eval(&y);
            let rhs = phi.eval(c) + (alpha.recip() - q(1)) * geo_eps(cartan, word, c, i);
            if lhs != rhs {
                bad.push(format!("Φ(e_{i}^c x) − Φ(x) ≠ (c^-1 − 1) ε_{i}(x)"));
            }
        }
    }
    bad
}

/// `e_i^c(g) = x_i((c-1)φ_i(g)) · g · x_i((c^{-1}-1)ε_i(g))` with `φ_i = ε_i γ_i`,
/// compared with `Θ⁻` at the transformed coordinates.
pub fn matrix_action_holds(rep: &MatrixRep, word: &[usize], c: &[Q], i: usize, alpha: &Q) -> bool {
    let cartan = rep.cartan();
    let one = Q::one();
    let g = rep.theta_minus(word, c, &one);
    let eps = geo_eps(cartan, word, c, i);
    let phi = &eps * geo_gamma(cartan, word, c, i);
    let left = rep.x(i, &((alpha - &one) * phi));
    let right = rep.x(i, &((alpha.recip() - &one) * eps));
    let moved: Matrix<Q> = left.mul(&g).mul(&right);
    moved == rep.theta_minus(word, &e_action(cartan, word, c, i, alpha), &one)
}

/// `Δ_{w_0Λ_j, Λ_j}(Θ⁻_word) = 1` for every minor the model realizes.
pub fn top_minors_are_one(rep: &MatrixRep, word: &[usize]) -> Result<bool> {
    let th = rep.theta_minus_symbolic(word);
    for j in rep.supported_minors() {
        if rep.generalized_minor(&th, word, &[], j)? != LaurentPoly::one(word.len()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::Potential;
    use crate::rootdata::{canonical_longest_word, Family};
    use crate::sample::{positive_point, positive_rational, rng};

    #[test]
    fn identities_small_types() {
        let mut r = rng(11);
        for (f, n) in [(Family::A, 2), (Family::C, 2), (Family::B, 2), (Family::G, 2), (Family::A, 3)] {
            let cartan = CartanData::new(f, n).unwrap();
            let word = canonical_longest_word(f, n).unwrap();
            let phi = Potential::catalog(f, n).unwrap().laurent();
            let rep = MatrixRep::defining(f, n).unwrap();
            for _ in 0..5 {
                let c = positive_point(&mut r, word.len());
                let (a, b) = (positive_rational(&mut r), positive_rational(&mut r));
                let bad = identities_at(&cartan, &word, Some(&phi), &c, &a, &b);
                assert!(bad.is_empty(), "{f}{n}: {bad:?}");
                for i in 1..=n {
                    assert!(matrix_action_holds(&rep, &word, &c, i, &a), "{f}{n} e_{i}");
                }
            }
        }
    }
}
