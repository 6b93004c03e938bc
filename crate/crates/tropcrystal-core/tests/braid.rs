//! Braid-type isomorphisms: inverses, crystal morphisms, path independence
//! and well-definedness of `ω_i`, `ξ^{(i)}`.

use tropcrystal_core::braid::checks::{
    inverse_violations, morphism_violations, omega_xi_violations, route_disagreements,
};
use tropcrystal_core::braid::Braid;
use tropcrystal_core::cellular::Potential;
use tropcrystal_core::grouprep::MatrixRep;
use tropcrystal_core::rootdata::{canonical_longest_word, reduced_words_of, word_graph_path, CartanData, Family};
use tropcrystal_core::sample::DEFAULT_SEED;

fn braid(f: Family, n: usize) -> Braid {
    Braid::new(CartanData::new(f, n).unwrap()).unwrap()
}

/// One move of each class, both directions where the pattern is not symmetric.
fn single_moves() -> Vec<(Family, usize, Vec<usize>, Vec<usize>)> {
    vec![
        (Family::A, 3, vec![1, 3], vec![3, 1]),
        (Family::A, 2, vec![1, 2, 1], vec![2, 1, 2]),
        (Family::A, 2, vec![2, 1, 2], vec![1, 2, 1]),
        (Family::C, 2, vec![1, 2, 1, 2], vec![2, 1, 2, 1]),
        (Family::C, 2, vec![2, 1, 2, 1], vec![1, 2, 1, 2]),
        (Family::B, 2, vec![1, 2, 1, 2], vec![2, 1, 2, 1]),
        (Family::G, 2, vec![1, 2, 1, 2, 1, 2], vec![2, 1, 2, 1, 2, 1]),
        (Family::G, 2, vec![2, 1, 2, 1, 2, 1], vec![1, 2, 1, 2, 1, 2]),
    ]
}

#[test]
fn moves_are_inverse_to_their_reverse() {
    for (f, n, from, to) in single_moves() {
        assert_eq!(inverse_violations(&braid(f, n), &from, &to, 10_000, DEFAULT_SEED).unwrap(), 0, "{f}{n} {from:?}");
    }
}

#[test]
fn transports_are_crystal_morphisms() {
    for (f, n, from, to) in single_moves() {
        assert_eq!(morphism_violations(&braid(f, n), &from, &to, 3000, DEFAULT_SEED).unwrap(), 0, "{f}{n} {from:?}");
    }
    // longer paths mixing classes
    for (f, n) in [(Family::A, 3), (Family::C, 3), (Family::B, 3)] {
        let b = braid(f, n);
        let from = canonical_longest_word(f, n).unwrap();
        let words = reduced_words_of(&b.cartan, &from, 10_000).unwrap();
        let to = words.last().unwrap();
        assert_eq!(morphism_violations(&b, &from, to, 500, DEFAULT_SEED).unwrap(), 0, "{f}{n} {to:?}");
    }
}

#[test]
fn endpoints_do_not_depend_on_the_route() {
    for (f, n, samples) in [(Family::A, 3, 300), (Family::C, 3, 100), (Family::C, 2, 1000)] {
        let word = canonical_longest_word(f, n).unwrap();
        assert_eq!(route_disagreements(&braid(f, n), &word, samples, DEFAULT_SEED).unwrap(), 0, "{f}{n}");
    }
}

#[test]
fn omega_and_xi_are_well_defined() {
    for (f, n) in [(Family::A, 3), (Family::C, 3)] {
        let word = canonical_longest_word(f, n).unwrap();
        assert_eq!(omega_xi_violations(&braid(f, n), &word, 1000, DEFAULT_SEED).unwrap(), 0, "{f}{n}");
    }
}

#[test]
fn membership_is_transported() {
    let rep = MatrixRep::defining(Family::A, 2).unwrap();
    let b = braid(Family::A, 2);
    let (w, v) = (vec![1, 2, 1], vec![2, 1, 2]);
    let pw = Potential::from_oracle(&rep, &w).unwrap();
    let pv = Potential::from_oracle(&rep, &v).unwrap();
    let path = word_graph_path(&b.cartan, &w, &v).unwrap();
    let mut members = 0;
    for a in -4..=4 {
        for bb in -4..=4 {
            for cc in -4..=4 {
                let x = vec![a, bb, cc];
                let (_, y) = b.apply_path(&w, &x, &path).unwrap();
                assert_eq!(pw.member(&x), pv.member(&y), "{x:?} -> {y:?}");
                members += usize::from(pw.member(&x));
            }
        }
    }
    assert!(members > 0);
}
