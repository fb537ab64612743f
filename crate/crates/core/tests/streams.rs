//! Minimal and maximal words against brute-force oracles.

use proptest::prelude::*;
use ratbase::analysis::complexity_count;
use ratbase::numeration::{
    ceil_step, enumerate_rc, rep_u64, successor, val_integer, Base, Nat, DEFAULT_RC_CAP,
};
use ratbase::streams::{nmin, sigma, Extremal, ExtremalStream, LetterStream, Snapshot};

fn bases() -> impl Strategy<Value = Base> {
    prop_oneof![
        Just("3/2"),
        Just("5/2"),
        Just("7/3"),
        Just("8/3"),
        Just("8/5"),
        Just("9/8"),
        Just("13/5"),
    ]
    .prop_map(|s| s.parse().unwrap())
}

fn prefix(base: Base, kind: Extremal, v: u64, n: usize) -> Vec<u32> {
    ExtremalStream::from_value(base, kind, &Nat::from(v))
        .take_letters(n)
        .unwrap()
}

proptest! {
    #[test]
    fn extremal_continuations(base in bases(), v in 1u64..100_000, l in 1usize..6) {
        let u = rep_u64(base, v);
        let rc = enumerate_rc(base, &u, l, DEFAULT_RC_CAP).unwrap();
        prop_assert_eq!(rc.first().unwrap().digits(), &prefix(base, Extremal::Min, v, l)[..]);
        prop_assert_eq!(rc.last().unwrap().digits(), &prefix(base, Extremal::Max, v, l)[..]);
    }

    #[test]
    fn letters_stay_in_their_subalphabet(base in bases(), v in 0u64..1 << 50) {
        let (p, q) = (base.p(), base.q());
        prop_assert!(prefix(base, Extremal::Min, v, 500).iter().all(|&a| a < q));
        prop_assert!(prefix(base, Extremal::Max, v, 500).iter().all(|&a| a >= p - q && a < p));
    }

    #[test]
    fn max_word_is_shifted_min_word_of_successor(base in bases(), v in 0u64..1 << 50) {
        let u = rep_u64(base, v);
        let next = val_integer(base, &successor(base, &u).unwrap()).unwrap();
        let min_next = ExtremalStream::from_value(base, Extremal::Min, &next).take_letters(300).unwrap();
        prop_assert_eq!(prefix(base, Extremal::Max, v, 300), sigma(base, &min_next).unwrap());
    }

    #[test]
    fn valuation_identity(base in bases(), v in 1u64..1 << 40, l in 0u64..200) {
        let u = rep_u64(base, v);
        let n = nmin(base, &u, l).unwrap();
        let uv = u.concat(&prefix(base, Extremal::Min, v, l as usize));
        prop_assert_eq!(&n, &val_integer(base, &uv).unwrap());
        let mut t = Nat::from(v);
        for _ in 0..l {
            t = ceil_step(base, &t);
        }
        prop_assert_eq!(n, t);
    }

    #[test]
    fn backends_agree(base in bases(), v in 0u64..1 << 60, len in 1u64..3000) {
        let u = rep_u64(base, v);
        for kind in [Extremal::Min, Extremal::Max] {
            let a = ExtremalStream::new(base, kind, &u).unwrap().take_letters(len as usize).unwrap();
            let mut r = ExtremalStream::with_budget(base, kind, &u, len).unwrap();
            prop_assert_eq!(a, r.take_letters(len as usize).unwrap());
            prop_assert!(r.next_letter().is_err());
        }
    }

    #[test]
    fn snapshots_resume_the_same_word(base in bases(), v in 0u64..1 << 40, cut in 0usize..400) {
        let u = rep_u64(base, v);
        let whole = prefix(base, Extremal::Min, v, 800);
        let mut s = ExtremalStream::new(base, Extremal::Min, &u).unwrap();
        let head = s.take_letters(cut).unwrap();
        let snap = Snapshot::from_bytes(&s.snapshot().to_bytes()).unwrap();
        let mut t = ExtremalStream::resume(&snap).unwrap();
        prop_assert_eq!(t.position(), cut as u64);
        let tail = t.take_letters(800 - cut).unwrap();
        prop_assert_eq!([head, tail].concat(), whole);
    }

    #[test]
    fn prefix_depends_on_residue_only(base in bases(), r in 0u64..1 << 20, j in 1u64..1000, l in 1u32..5) {
        let m = (base.q() as u64).pow(l);
        let r = r % m;
        prop_assert_eq!(
            prefix(base, Extremal::Min, r, l as usize),
            prefix(base, Extremal::Min, r + j * m, l as usize)
        );
    }
}

#[test]
fn residue_prefix_map_is_a_bijection() {
    for base in ["3/2", "7/3", "8/5"].map(|s| s.parse::<Base>().unwrap()) {
        for l in 1..=4u32 {
            let m = (base.q() as u64).pow(l);
            let mut seen = std::collections::HashSet::new();
            for r in 0..m {
                assert!(
                    seen.insert(prefix(base, Extremal::Min, r, l as usize)),
                    "{base} l={l}"
                );
            }
            assert_eq!(seen.len() as u64, m);
        }
    }
}

#[test]
fn minimal_words_are_not_eventually_periodic_looking() {
    // Morse-Hedlund: a word with at most l factors of some length l is eventually periodic
    for (base, v) in [("3/2", 1u64), ("7/3", 1), ("8/5", 7), ("9/8", 1)] {
        let base: Base = base.parse().unwrap();
        let w = prefix(base, Extremal::Min, v, 20_000);
        for l in 1..=12 {
            let c = complexity_count(&w, l);
            assert!(c > l, "{base} l={l}: {c} factors");
        }
    }
}

#[test]
fn integer_bases_give_constant_words() {
    let base: Base = "5/1".parse().unwrap();
    assert!(prefix(base, Extremal::Min, 17, 50).iter().all(|&a| a == 0));
    assert!(prefix(base, Extremal::Max, 17, 50).iter().all(|&a| a == 4));
}
