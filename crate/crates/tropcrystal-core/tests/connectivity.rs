use std::time::Instant;

use tropcrystal_core::cellular::Potential;
use tropcrystal_core::connectivity::{
    condition_h, connectedness_report, coverage_check, h_basis, interior_point, intersection_witness,
    random_h, shift_equivariance_check, ConnectParams,
};
use tropcrystal_core::rootdata::{canonical_longest_word, CartanData, Family};
use tropcrystal_core::sample;

fn all_types() -> Vec<(Family, usize)> {
    let mut v = Vec::new();
    for n in 1..=8 {
        v.push((Family::A, n));
    }
    for n in 2..=8 {
        v.push((Family::B, n));
        v.push((Family::C, n));
    }
    for n in 4..=8 {
        v.push((Family::D, n));
    }
    v.extend([(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]);
    v
}

fn small_types() -> Vec<(Family, usize)> {
    let mut v: Vec<_> = (1..=4).map(|n| (Family::A, n)).collect();
    v.extend([(Family::B, 2), (Family::B, 3), (Family::B, 4), (Family::C, 2), (Family::C, 3), (Family::C, 4)]);
    v.extend([(Family::D, 4), (Family::G, 2)]);
    v
}

#[test]
fn lattice_descriptions_agree() {
    for (f, n) in all_types() {
        let c = CartanData::new(f, n).unwrap();
        let w = canonical_longest_word(f, n).unwrap();
        let lat = h_basis(&c, &w).unwrap_or_else(|e| panic!("{f}{n}: {e}"));
        assert!(lat.equality().equal(), "{f}{n}");
    }
}

#[test]
fn shifts_commute_with_operators() {
    for (f, n) in [(Family::A, 2), (Family::G, 2), (Family::C, 3), (Family::B, 3), (Family::D, 4), (Family::F, 4)] {
        let c = CartanData::new(f, n).unwrap();
        let w = canonical_longest_word(f, n).unwrap();
        let lat = h_basis(&c, &w).unwrap();
        assert_eq!(shift_equivariance_check(&c, &lat, 10_000, sample::DEFAULT_SEED), 0, "{f}{n}");
    }
}

#[test]
fn potential_forms_are_coordinates_modulo_betas() {
    for (f, n) in small_types() {
        let c = CartanData::new(f, n).unwrap();
        let pot = Potential::catalog(f, n).unwrap();
        let lat = h_basis(&c, &pot.word).unwrap();
        let ch = condition_h(&lat, pot.trop.forms());
        assert!(ch.holds(), "{f}{n}: {:?}", ch.failures());
    }
}

#[test]
fn witnesses_for_random_shifts() {
    for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::G, 2)] {
        let c = CartanData::new(f, n).unwrap();
        let pot = Potential::catalog(f, n).unwrap();
        let lat = h_basis(&c, &pot.word).unwrap();
        let x = interior_point(&c, &pot, 16).unwrap();
        let mut rng = sample::rng(sample::DEFAULT_SEED);
        for _ in 0..100 {
            let h = lat.vector(&random_h(&mut rng, n));
            intersection_witness(&pot, &x, &h).unwrap_or_else(|e| panic!("{f}{n}: {e}"));
        }
    }
}

#[test]
fn boxes_are_covered_by_translates() {
    for (f, n, r) in [(Family::A, 2, 5), (Family::B, 2, 3), (Family::C, 2, 3), (Family::G, 2, 3)] {
        let c = CartanData::new(f, n).unwrap();
        let pot = Potential::catalog(f, n).unwrap();
        let lat = h_basis(&c, &pot.word).unwrap();
        let cov = coverage_check(&lat, &pot, r);
        println!("{f}{n} radius {r}: {} points, max h {}", cov.points, cov.max_h);
        assert!(cov.uncovered.is_empty(), "{f}{n}: {:?}", &cov.uncovered[..cov.uncovered.len().min(3)]);
    }
}

#[test]
fn random_pairs_connect() {
    // G2 pairs come from a smaller box with more room: its shortest paths
    // leave the box and run to ~60 edges, beyond exhaustive reach at radius 3
    for (f, n, r, pr, pad, pairs) in [
        (Family::A, 2, 4, 4, 3, 200),
        (Family::C, 2, 3, 3, 3, 100),
        (Family::G, 2, 3, 1, 6, 100),
    ] {
        let t = Instant::now();
        let p = ConnectParams { radius: r, pair_radius: pr, pad, pairs, ..ConnectParams::default() };
        let rep = connectedness_report(f, n, p).unwrap();
        println!(
            "{f}{n}: constructive {}/{}, direct {}/{} (longest {}), {:?}",
            rep.constructive_ok,
            2 * pairs,
            rep.direct_connected,
            pairs,
            rep.longest_path,
            t.elapsed()
        );
        assert!(rep.passed(), "{f}{n}: {rep:?}");
    }
}
