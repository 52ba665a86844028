use chordcrystal::crystal::{golden_spec, odd_spec, Crystal, CrystalElt, CrystalError, JSeq};
use proptest::prelude::*;

fn walk(c: &Crystal, ops: &[(usize, usize)]) -> CrystalElt {
    ops.iter()
        .fold(CrystalElt::highest(), |b, &(r, i)| c.f(&b, r, i).expect("periodic sequences never overflow"))
}

fn op_strategy(rank: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..2, 0..rank), 0..14)
}

#[test]
fn closure_layers_for_small_odd_m() {
    // m = 3 is A_2: weight a alpha + b beta has min(a, b) + 1 partitions
    let c = Crystal::new(odd_spec(3).unwrap(), JSeq::Periodic(vec![0, 1]));
    let layers: Vec<usize> = c.closure(6).unwrap().layers.iter().map(Vec::len).collect();
    let kostant: Vec<usize> = (0..=6).map(|d| (0..=d).map(|a| a.min(d - a) + 1).sum()).collect();
    assert_eq!(layers, kostant);
}

#[test]
fn finite_word_overflows() {
    let c = Crystal::new(golden_spec(), JSeq::Finite { word: vec![0], dummies: true });
    let b = c.f(&CrystalElt::highest(), 0, 0).unwrap();
    assert!(matches!(c.f(&b, 1, 0), Err(CrystalError::WindowOverflow(_))));
}

#[test]
fn highest_element_is_killed_by_every_e() {
    for m in [3, 5, 7, 9] {
        let spec = odd_spec(m).unwrap();
        let c = Crystal::new(spec.clone(), JSeq::Periodic(vec![0, 1]));
        for (r, i) in spec.operators() {
            assert!(c.e(&CrystalElt::highest(), r, i).is_none());
        }
    }
}

proptest! {
    #[test]
    fn e_undoes_f(m in prop::sample::select(vec![3usize, 5, 7, 9]), ops in op_strategy(4), last in (0usize..2, 0usize..4)) {
        let spec = odd_spec(m).unwrap();
        let rank = spec.rank();
        let ops: Vec<_> = ops.into_iter().map(|(r, i)| (r, i % rank)).collect();
        let c = Crystal::new(spec, JSeq::Periodic(vec![0, 1]));
        let b = walk(&c, &ops);
        let (r, i) = (last.0, last.1 % rank);
        let fb = c.f(&b, r, i).unwrap();
        prop_assert_eq!(c.e(&fb, r, i), Some(b.clone()));
        prop_assert_eq!(fb.degree(), b.degree() + 1);
        let (wb, wf) = (c.weight(&b), c.weight(&fb));
        for (k, (x, y)) in wb.iter().zip(&wf).enumerate() {
            prop_assert_eq!(*x - *y, i64::from(k == r * rank + i));
        }
    }

    #[test]
    fn f_undoes_e(ops in op_strategy(2), last in (0usize..2, 0usize..2)) {
        let c = Crystal::new(golden_spec(), JSeq::Periodic(vec![0, 1]));
        let b = walk(&c, &ops);
        if let Some(eb) = c.e(&b, last.0, last.1) {
            prop_assert_eq!(c.f(&eb, last.0, last.1).unwrap(), b);
        }
    }
}
