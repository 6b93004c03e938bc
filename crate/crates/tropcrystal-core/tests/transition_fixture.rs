//! The stored rank-2 transitions agree with a fresh derivation.

use tropcrystal_core::braid::{derive_all, format_fixture, parse_fixture};
use tropcrystal_core::sample::DEFAULT_SEED;

const PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/rank2_transitions.txt");

#[test]
fn stored_transitions_match_derivation() {
    let derived = derive_all(5, DEFAULT_SEED).expect("derivation");
    if std::env::var_os("TROPCRYSTAL_BLESS").is_some() {
        std::fs::write(PATH, format_fixture(&derived)).unwrap();
    }
    let stored = parse_fixture(&std::fs::read_to_string(PATH).unwrap()).unwrap();
    assert_eq!(stored.len(), derived.len());
    for (s, d) in stored.iter().zip(&derived) {
        assert_eq!((&s.from, &s.to), (&d.from, &d.to));
        for (k, (a, b)) in s.d.iter().zip(&d.d).enumerate() {
            // equal as rational functions
            assert_eq!(&a.num * &b.den, &b.num * &a.den, "{:?} d{}", s.from, k + 1);
        }
    }
}
