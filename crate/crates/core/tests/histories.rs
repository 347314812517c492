mod common;

use std::collections::BTreeSet;

use rdyck::histories::{self, Side};
use rdyck::paths::{self, parse_word, LatticeWord};
use rdyck::tilings::{self, DyckTile, Tiling, Variant};

fn w(s: &str) -> LatticeWord {
    parse_word(s).unwrap()
}

fn singles_tiling(lower: &str, upper: &str) -> Tiling {
    let (lower, upper) = (w(lower), w(upper));
    let tiles = tilings::region_of(&lower, &upper).unwrap().into_iter().map(DyckTile::single).collect();
    Tiling::new(1, 1, lower, upper, tiles, Variant::Inclusive)
}

fn d1() -> Tiling {
    let tile = DyckTile::from_boxes(vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)], 1, 1).unwrap();
    Tiling::new(1, 1, w("NENNEENE"), w("N^4E^4"), vec![tile], Variant::Inclusive)
}

fn d2() -> Tiling {
    singles_tiling("NNNEENEE", "N^4E^4")
}

/// Number of smaller letters to the left of each value.
fn history_oracle(w: &[usize]) -> Vec<usize> {
    (1..=w.len())
        .map(|j| {
            let pos = w.iter().position(|&v| v == j).unwrap();
            w[..pos].iter().filter(|&&v| v < j).count()
        })
        .collect()
}

#[test]
fn insertion_history_examples() {
    assert_eq!(histories::insertion_history(&[3, 1, 4, 2]).unwrap(), vec![0, 1, 0, 2]);
    assert_eq!(histories::permutation_from_history(&[0, 1, 0, 2]).unwrap(), vec![3, 1, 4, 2]);
    assert!(histories::insertion_history(&[1, 1]).is_err());
    assert!(histories::permutation_from_history(&[1]).is_err());
    for n in 0..=6 {
        for p in common::permutations(n) {
            let h = histories::insertion_history(&p).unwrap();
            assert_eq!(h, history_oracle(&p));
            assert_eq!(histories::permutation_from_history(&h).unwrap(), p);
        }
    }
}

#[test]
fn worked_tilings() {
    let t = d1();
    t.validate().unwrap();
    assert_eq!(histories::hermite_vector(&t).unwrap(), vec![0, 0, 0, 3]);
    assert_eq!(histories::hermite_word(&t).unwrap(), vec![3, 2, 1, 4]);
    assert_eq!(histories::dts_word(&t, Side::Right).unwrap(), vec![2, 4, 3, 1]);

    let t = d2();
    t.validate().unwrap();
    assert_eq!(histories::hermite_word(&t).unwrap(), vec![3, 2, 4, 1]);
    assert_eq!(histories::dts_word(&t, Side::Right).unwrap(), vec![4, 3, 2, 1]);
    assert!(histories::duality_check(&d1()).unwrap());
    assert!(histories::duality_check(&t).unwrap());
}

#[test]
fn empty_tiling_words() {
    let t = singles_tiling("NENE", "NENE");
    assert_eq!(histories::dts_word(&t, Side::Right).unwrap(), vec![1, 2]);
    assert_eq!(histories::dts_word(&t, Side::Left).unwrap(), vec![1, 2]);
    assert_eq!(histories::hermite_word(&t).unwrap(), vec![2, 1]);
}

#[test]
fn spread_then_grow() {
    let t = singles_tiling("NENENE", "NNNEEE");
    assert_eq!(t.tiles.len(), 3);
    let next = histories::dts_step(&t, 3, Side::Right);
    assert_eq!(next.lower, w("NENNEENE"));
    assert_eq!(next.upper, w("NNNNEEEE"));
    let expected: BTreeSet<Vec<(i32, i32)>> =
        [vec![(0, 1)], vec![(0, 2), (0, 3), (1, 3)], vec![(2, 3)]].into_iter().collect();
    let found: BTreeSet<Vec<(i32, i32)>> = next.tiles.iter().map(|d| d.boxes.clone()).collect();
    assert_eq!(found, expected);
    next.validate().unwrap();
}

#[test]
fn words_below_a_fixed_top_path() {
    let cases = [
        ("NENENENE", [4, 3, 1, 2]),
        ("NENNEENE", [4, 3, 1, 2]),
        ("NNENEENE", [4, 3, 1, 2]),
        ("NNENENEE", [4, 2, 3, 1]),
        ("NNNEENEE", [4, 2, 3, 1]),
        ("NNNENEEE", [3, 4, 2, 1]),
    ];
    for (lower, word) in cases {
        let t = singles_tiling(lower, "N^3ENE^3");
        t.validate().unwrap();
        assert_eq!(histories::dts_word(&t, Side::Right).unwrap(), word, "{lower}");
    }
}

#[test]
fn words_with_large_tiles_are_realised() {
    let lower = w("N^2E^2NEN^2E^2NE");
    let words = [[5, 2, 3, 6, 4, 1], [5, 3, 4, 6, 1, 2], [6, 2, 5, 4, 1, 3], [5, 4, 3, 6, 1, 2], [5, 3, 2, 6, 4, 1], [6, 5, 2, 4, 1, 3]];
    let mut nontrivial = 0;
    for word in words {
        let t = histories::dts_inverse(&word, Side::Right, Some(&lower)).unwrap();
        t.validate().unwrap();
        nontrivial += t.has_nontrivial_tile() as usize;
        assert_eq!(histories::dts_word(&t, Side::Right).unwrap(), word);
    }
    assert!(nontrivial > 0);
}

/// Both readings biject the tilings above a lower path onto its increasing
/// labellings, and the two labels of every chord add up to n + 1.
#[test]
fn duality_and_bijectivity() {
    for n in 0..=5 {
        for lower in paths::dyck_paths(1, 1, n).unwrap() {
            let forest = histories::chords(&lower).unwrap();
            let all = tilings::tilings_above(&lower, 1, 1).unwrap();
            let mut seen_h = BTreeSet::new();
            let mut seen = [BTreeSet::new(), BTreeSet::new()];
            for t in &all {
                assert!(histories::duality_check(t).unwrap(), "{:?}", t);
                let h = histories::hermite_labels(t).unwrap();
                let flipped: Vec<usize> = h.iter().map(|&x| n + 1 - x).collect();
                assert!(forest.is_increasing(&flipped));
                seen_h.insert(h);
                for (k, side) in [Side::Right, Side::Left].into_iter().enumerate() {
                    let labels = histories::dts_labels(t, side).unwrap();
                    assert!(forest.is_increasing(&labels));
                    let word = histories::dts_word(t, side).unwrap();
                    assert_eq!(&histories::dts_inverse(&word, side, Some(&lower)).unwrap(), t);
                    seen[k].insert(word);
                }
            }
            assert_eq!(seen_h.len(), all.len());
            assert_eq!(seen[0].len(), all.len());
            assert_eq!(seen[1].len(), all.len());
        }
    }
}

#[test]
fn flat_lower_path_round_trip() {
    for n in 0..=6 {
        for p in common::permutations(n) {
            for side in [Side::Right, Side::Left] {
                let t = histories::dts_inverse(&p, side, None).unwrap();
                t.validate().unwrap();
                assert_eq!(histories::dts_word(&t, side).unwrap(), p);
                assert_eq!(histories::dts_decodings(&t, side).len(), 1);
            }
        }
    }
}

#[test]
fn single_tiles_give_top_path_from_hermite() {
    for n in 1..=5 {
        for lower in paths::dyck_paths(1, 1, n).unwrap() {
            for t in tilings::tilings_above(&lower, 1, 1).unwrap() {
                if t.has_nontrivial_tile() {
                    continue;
                }
                let omega = histories::hermite_word(&t).unwrap();
                let u = histories::top_path_from_hermite(&lower, &omega).unwrap();
                assert_eq!(u, paths::step_sequence(&t.upper, 1, 1).unwrap());
            }
        }
    }
}

#[test]
fn rejects_non_increasing_words() {
    assert!(histories::dts_inverse(&[1, 2], Side::Right, Some(&w("NNEE"))).is_err());
    assert!(histories::dts_inverse(&[2, 1], Side::Right, Some(&w("NNEE"))).is_ok());
    assert!(histories::dts_inverse(&[1, 3], Side::Right, None).is_err());
}
