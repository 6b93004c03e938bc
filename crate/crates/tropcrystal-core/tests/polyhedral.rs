use std::collections::BTreeSet;

use rand::Rng;
use tropcrystal_core::crystalcore::{
    generate_component, graph_isomorphic, BiTensor, Closure, Crystal, LabelMatch,
};
use tropcrystal_core::polyhedral::{sigma_membership, trim, xi_for_support, Iota, Polyhedral};
use tropcrystal_core::rootdata::{CartanData, Family};
use tropcrystal_core::sample;

const DEPTH: usize = 6;

fn cases() -> Vec<(Family, usize, Vec<usize>)> {
    vec![
        (Family::A, 2, vec![1, 2]),
        (Family::C, 2, vec![1, 2]),
        (Family::B, 2, vec![1, 2]),
        (Family::G, 2, vec![1, 2]),
        (Family::G, 2, vec![2, 1]),
        (Family::A, 3, vec![1, 2, 3]),
    ]
}

fn realization(f: Family, n: usize, cycle: Vec<usize>) -> Polyhedral {
    let c = CartanData::new(f, n).unwrap();
    let iota = Iota::cyclic(&c, cycle).unwrap();
    Polyhedral::new(c, iota).unwrap()
}

/// Nonnegative vectors of length `len` with entry sum at most `d`.
fn small_points(len: usize, d: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for v in &out {
            let used: i64 = v.iter().sum();
            for a in 0..=(d as i64 - used) {
                let mut w = v.clone();
                w.push(a);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

#[test]
fn truncation_matches_tensor_oracle() {
    for (f, n, cycle) in cases() {
        let p = realization(f, n, cycle);
        let (g, _) = generate_component(&p, vec![], DEPTH, Closure::Lowering, &|_| true).unwrap();
        let len = p.iota.reach(DEPTH * p.iota.cycle().len());
        let t = BiTensor::new(p.cartan.clone(), p.tensor_colours(len)).unwrap();
        let (h, _) = generate_component(&t, vec![0; len], DEPTH, Closure::Lowering, &|_| true).unwrap();
        let iso = graph_isomorphic(&g, &h, Some((0, 0)), LabelMatch::WtEps).unwrap();
        assert!(iso.is_some(), "{f}{n}: polyhedral and tensor truncations differ");
    }
}

#[test]
fn agrees_with_tensor_pointwise() {
    let mut rng = sample::rng(sample::DEFAULT_SEED);
    for (f, n, cycle) in cases() {
        let p = realization(f, n, cycle);
        for _ in 0..2000 {
            let s = rng.gen_range(0..8);
            let x = trim(sample::int_vec(&mut rng, s, -4, 4));
            let len = p.iota.reach(x.len()) + 1;
            let t = BiTensor::new(p.cartan.clone(), p.tensor_colours(len)).unwrap();
            let tx = p.to_tensor(&x, len);
            assert_eq!(p.wt(&x), t.wt(&tx));
            for i in 1..=n {
                assert_eq!(p.eps(&x, i), t.eps(&tx, i), "{f}{n} ε_{i} at {x:?}");
                assert_eq!(p.to_tensor(&p.f(&x, i).unwrap(), len), t.f(&tx, i).unwrap());
                if let Some(y) = p.e(&x, i) {
                    assert_eq!(p.to_tensor(&y, len), t.e(&tx, i).unwrap());
                }
            }
        }
    }
}

#[test]
fn sigma_is_the_generated_truncation() {
    for (f, n, cycle) in cases() {
        let p = realization(f, n, cycle);
        let (_, elems) = generate_component(&p, vec![], DEPTH, Closure::Lowering, &|_| true).unwrap();
        let support = elems.iter().map(|x| x.len()).max().unwrap();
        let xi = xi_for_support(&p, support + 1);
        assert!(xi.stabilized, "{f}{n}: Ξ did not stabilize");
        assert!(xi.positivity(), "{f}{n}: positivity fails at {:?}", xi.positivity_failures);
        let bfs: BTreeSet<Vec<i64>> = elems.into_iter().collect();
        let inside: BTreeSet<Vec<i64>> = small_points(support + 1, DEPTH)
            .into_iter()
            .filter(|x| sigma_membership(&xi, x).unwrap())
            .map(trim)
            .collect();
        assert_eq!(bfs, inside, "{f}{n}: Σ_ι and the f̃-closure of 0 differ");
        for x in &bfs {
            for i in 1..=n {
                if let Some(y) = p.e(x, i) {
                    assert!(bfs.contains(&y), "{f}{n}: ẽ_{i} leaves Σ_ι at {x:?}");
                }
            }
        }
    }
}

#[test]
fn first_occurrence_negative_is_excluded() {
    let p = realization(Family::C, 2, vec![1, 2]);
    let xi = xi_for_support(&p, 4);
    assert!(!sigma_membership(&xi, &[-1]).unwrap());
    assert!(!sigma_membership(&xi, &[0, -1, 0, 1]).unwrap());
}
