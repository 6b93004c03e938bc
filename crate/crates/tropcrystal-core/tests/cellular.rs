//! Potentials, the three realizations of `B(∞)`, the normality suite, the
//! geometric identities, lowest terms and monomial restatements.

use tropcrystal_core::braid::{cell_to_tensor, tensor_to_cell, Braid};
use tropcrystal_core::cellular::binf::triple_check;
use tropcrystal_core::cellular::geometric::{identities_at, matrix_action_holds, top_minors_are_one};
use tropcrystal_core::cellular::ks::{ks_check, psi_graph_check, KsParams, PsiMaps};
use tropcrystal_core::cellular::monomial::monomial_restatement_check;
use tropcrystal_core::cellular::trail::{a_factorization_check, exceptional_identities, lowest_term_present};
use tropcrystal_core::cellular::{catalog_minor, minor_laurent, oracle_minors, CellCrystal, Potential};
use tropcrystal_core::crystalcore::{BiTensor, Crystal};
use tropcrystal_core::grouprep::MatrixRep;
use tropcrystal_core::rootdata::{canonical_longest_word, CartanData, Family};
use tropcrystal_core::sample;

const FIVE: [(Family, usize); 5] = [(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::G, 2), (Family::A, 3)];

#[test]
fn closed_forms_match_the_matrix_model() {
    let types = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
    ];
    for (f, n) in types {
        let rep = MatrixRep::defining(f, n).unwrap();
        let word = canonical_longest_word(f, n).unwrap();
        let js = oracle_minors(&rep);
        for &j in &js {
            let m = minor_laurent(&rep, &word, j).unwrap();
            let c = catalog_minor(f, n, j).unwrap();
            assert_eq!(m, c, "{f}{n} j={j}");
            assert_eq!(m.tropicalize().unwrap(), c.tropicalize().unwrap(), "{f}{n} j={j}");
        }
        if js.len() == n {
            let a = Potential::from_oracle(&rep, &word).unwrap();
            let b = Potential::catalog(f, n).unwrap();
            assert_eq!(a.laurent(), b.laurent(), "{f}{n}");
            assert_eq!(a.trop, b.trop, "{f}{n}");
        }
    }
}

#[test]
fn potential_of_another_word_gives_the_same_crystal() {
    use tropcrystal_core::crystalcore::{generate_component, graph_isomorphic, Closure, LabelMatch};
    let c = CartanData::new(Family::A, 2).unwrap();
    let rep = MatrixRep::defining(Family::A, 2).unwrap();
    let mut graphs = Vec::new();
    for w in [vec![1, 2, 1], vec![2, 1, 2]] {
        let pot = Potential::from_oracle(&rep, &w).unwrap();
        let b = CellCrystal::binf(c.clone(), &pot).unwrap();
        graphs.push(generate_component(&b, vec![0; 3], 6, Closure::Lowering, &|_| true).unwrap().0);
    }
    assert!(graph_isomorphic(&graphs[0], &graphs[1], Some((0, 0)), LabelMatch::WtEps).unwrap().is_some());
}

#[test]
fn three_realizations_agree() {
    for (f, n) in FIVE {
        let depth = if n == 3 { 5 } else { 6 };
        let c = CartanData::new(f, n).unwrap();
        let pot = Potential::catalog(f, n).unwrap();
        let r = triple_check(&c, &pot, depth).unwrap();
        assert!(r.passed(), "{f}{n}: {r:?}");
    }
}

#[test]
fn free_operators_match_the_dual_tensor_product() {
    for (f, n) in FIVE {
        let c = CartanData::new(f, n).unwrap();
        let word = canonical_longest_word(f, n).unwrap();
        let cell = CellCrystal::new(c.clone(), word.clone(), None).unwrap();
        let tensor = BiTensor::new(c.dual(), word.iter().rev().copied().collect()).unwrap();
        let mut rng = sample::rng(sample::DEFAULT_SEED);
        for _ in 0..10_000 {
            let x = sample::int_vec(&mut rng, word.len(), -10, 10);
            let t = cell_to_tensor(&x);
            assert_eq!(cell.wt(&x), tensor.wt(&t), "{f}{n}");
            for i in 1..=n {
                assert_eq!(cell.eps(&x, i), tensor.eps(&t, i));
                assert_eq!(cell.e(&x, i), tensor.e(&t, i).map(|b| tensor_to_cell(&b)), "{f}{n} e_{i} {x:?}");
                assert_eq!(cell.f(&x, i), tensor.f(&t, i).map(|b| tensor_to_cell(&b)), "{f}{n} f_{i} {x:?}");
            }
        }
    }
}

#[test]
fn normality_suite() {
    for (f, n) in FIVE {
        let c = CartanData::new(f, n).unwrap();
        let pot = Potential::catalog(f, n).unwrap();
        let braid = Braid::new(c.clone()).unwrap();
        let rep = ks_check(&c, &pot, &braid, KsParams { depth: 5, box_radius: 4 }).unwrap();
        for ch in &rep.checks {
            println!("{f}{n} {}: {}", ch.name, if ch.passed { "ok" } else { &ch.detail });
        }
        assert!(rep.passed(), "{f}{n}: {:?}", rep.failed());
    }
}

#[test]
fn psi_respects_edges() {
    for (f, n) in FIVE {
        let c = CartanData::new(f, n).unwrap();
        let pot = Potential::catalog(f, n).unwrap();
        let braid = Braid::new(c.clone()).unwrap();
        let b = CellCrystal::binf(c.clone(), &pot).unwrap();
        let psi = PsiMaps::new(&braid, &pot.word).unwrap();
        for i in 1..=n {
            assert_eq!(psi_graph_check(&b, &psi, 5, i).unwrap(), 0, "{f}{n} Ψ_{i}");
        }
    }
}

#[test]
fn geometric_identities_at_random_points() {
    let mut r = sample::rng(sample::DEFAULT_SEED);
    for (f, n) in FIVE {
        let c = CartanData::new(f, n).unwrap();
        let word = canonical_longest_word(f, n).unwrap();
        let phi = Potential::catalog(f, n).unwrap().laurent();
        let rep = MatrixRep::defining(f, n).unwrap();
        assert!(top_minors_are_one(&rep, &word).unwrap(), "{f}{n}");
        for _ in 0..50 {
            let x = sample::positive_point(&mut r, word.len());
            let (a, b) = (sample::positive_rational(&mut r), sample::positive_rational(&mut r));
            let bad = identities_at(&c, &word, Some(&phi), &x, &a, &b);
            assert!(bad.is_empty(), "{f}{n}: {bad:?}");
            for i in 1..=n {
                assert!(matrix_action_holds(&rep, &word, &x, i, &a), "{f}{n} e_{i}");
            }
        }
    }
}

#[test]
fn lowest_terms_and_a_factorizations() {
    for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::C, 2), (Family::G, 2)] {
        let c = CartanData::new(f, n).unwrap();
        let word = canonical_longest_word(f, n).unwrap();
        for j in 1..=n {
            let m = catalog_minor(f, n, j).unwrap();
            assert!(lowest_term_present(&c, &word, j, &m).unwrap(), "{f}{n} j={j}");
            let rep = a_factorization_check(&c, &word, j, &m).unwrap();
            assert!(rep.passed(), "{f}{n} j={j}: {:?}", rep.failures);
        }
    }
    let checks = exceptional_identities().unwrap();
    let bad: Vec<_> = checks.iter().filter(|c| !c.ok).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn monomial_orbits_reproduce_the_minors() {
    for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 4), (Family::G, 2)] {
        for k in 1..=n {
            assert!(monomial_restatement_check(f, n, k).unwrap(), "{f}{n} k={k}");
        }
    }
}
