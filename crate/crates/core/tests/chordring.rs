use std::f64::consts::PI;

use chordcrystal::chordring::{cheb, chord_in, chord_ring, factor, identity_suite, is_irreducible, ChebKind, IntPoly};
use proptest::prelude::*;

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-7 * (1.0 + b.abs())
}

#[test]
fn families_match_trigonometric_closed_forms() {
    for n in 0..=15i64 {
        for theta in [0.3, 0.77, 1.9, 2.6] {
            let x = 2.0 * f64::cos(theta);
            let p = cheb(ChebKind::Chord, n).unwrap().eval_f64(x);
            assert!(close(p, ((n + 1) as f64 * theta).sin() / theta.sin()), "P_{n}");
            let q = cheb(ChebKind::OddModulus, n).unwrap().eval_f64(x);
            assert!(close(q, ((n as f64 + 0.5) * theta).cos() / (theta / 2.0).cos()), "Q_{n}");
            let pc = cheb(ChebKind::Classical, n).unwrap().eval_f64(theta.cos());
            assert!(close(pc, (n as f64 * theta).cos()), "Pc_{n}");
            if n >= 1 {
                let s = cheb(ChebKind::EvenModulus, n).unwrap().eval_f64(x);
                assert!(close(s, 2.0 * (n as f64 * theta).cos()), "S_{n}");
            }
        }
    }
}

#[test]
fn initial_values() {
    assert_eq!(cheb(ChebKind::OddModulus, -1).unwrap(), IntPoly::one());
    assert_eq!(cheb(ChebKind::OddModulus, 0).unwrap(), IntPoly::one());
    assert_eq!(cheb(ChebKind::Chord, 2).unwrap(), IntPoly::new(vec![-1, 0, 1]));
    assert_eq!(cheb(ChebKind::EvenModulus, 2).unwrap(), IntPoly::new(vec![-2, 0, 1]));
}

#[test]
fn identity_suite_holds_to_twenty() {
    let checks = identity_suite(20);
    assert!(checks.len() > 100);
    let bad: Vec<_> = checks.iter().filter(|c| !c.holds).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn irreducibility_pattern() {
    for n in 1..=12i64 {
        let q = is_irreducible(&cheb(ChebKind::OddModulus, n).unwrap()).unwrap();
        assert_eq!(q, is_prime(2 * n + 1), "Q_{n}");
        let s = is_irreducible(&cheb(ChebKind::EvenModulus, n).unwrap()).unwrap();
        assert_eq!(s, (n as u64).is_power_of_two(), "S_{n}");
    }
}

#[test]
fn factors_multiply_back() {
    for kind in [ChebKind::Chord, ChebKind::OddModulus, ChebKind::EvenModulus] {
        for n in 1..=14 {
            let p = cheb(kind, n).unwrap();
            let fs = factor(&p).unwrap();
            let prod = fs.iter().fold(IntPoly::one(), |acc, f| &acc * f);
            assert_eq!(prod, p, "{kind:?} {n}");
            for f in &fs {
                assert!(is_irreducible(f).unwrap());
            }
        }
    }
}

#[test]
fn chords_are_polygon_diagonals() {
    for m in 3..=13usize {
        let ring = chord_ring(m).unwrap();
        for i in 0..m - 1 {
            let v = chord_in(&ring, i).eval_f64();
            let want = ((i + 1) as f64 * PI / m as f64).sin() / (PI / m as f64).sin();
            assert!(close(v, want), "m={m} i={i}");
        }
    }
}

proptest! {
    #[test]
    fn ring_arithmetic_is_evaluation_compatible(
        m in 3usize..14,
        a in prop::collection::vec(-6i64..6, 6),
        b in prop::collection::vec(-6i64..6, 6),
        c in prop::collection::vec(-6i64..6, 6),
    ) {
        let ring = chord_ring(m).unwrap();
        let r = ring.rank();
        let x = ring.elem(a[..r].to_vec()).unwrap();
        let y = ring.elem(b[..r].to_vec()).unwrap();
        let z = ring.elem(c[..r].to_vec()).unwrap();
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        let (fx, fy) = (x.eval_f64(), y.eval_f64());
        prop_assert!(((&x * &y).eval_f64() - fx * fy).abs() <= 1e-6 * (1.0 + (fx * fy).abs()));
        prop_assert_eq!(&(&x - &y) + &y, x);
    }
}
