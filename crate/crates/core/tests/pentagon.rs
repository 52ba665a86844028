use std::collections::HashMap;

use chordcrystal::crystal::CrystalElt;
use chordcrystal::pentagon::{
    apply_word, char_coeff, crystal_j, crystal_j_prime, e_kills, is_member, is_normal_form, members_up_to,
    normal_form, transport, transport_back, verify_suite, GoldenOp, POSITIVE_ROOTS,
};
use proptest::prelude::*;

/// Coefficients of the product of `1 / (1 - e^root)` over the positive
/// roots, truncated at total height `h`.
fn character_by_series(h: u32) -> HashMap<[u32; 4], u64> {
    let mut series: HashMap<[u32; 4], u64> = HashMap::from([([0; 4], 1)]);
    for r in POSITIVE_ROOTS {
        let mut next = HashMap::new();
        for (w, c) in &series {
            let mut k = 0;
            loop {
                let v = [w[0] + k * r[0], w[1] + k * r[1], w[2] + k * r[2], w[3] + k * r[3]];
                if v.iter().sum::<u32>() > h {
                    break;
                }
                *next.entry(v).or_insert(0) += c;
                k += 1;
            }
        }
        series = next;
    }
    series
}

#[test]
fn partition_count_agrees_with_series() {
    let series = character_by_series(7);
    for (w, c) in &series {
        assert_eq!(char_coeff(*w), *c, "{w:?}");
    }
    assert_eq!(char_coeff([1, 1, 1, 1]), series[&[1, 1, 1, 1]]);
}

#[test]
fn ten_positive_roots() {
    let total: u32 = POSITIVE_ROOTS.iter().map(|r| r.iter().sum::<u32>()).sum();
    assert_eq!(POSITIVE_ROOTS.len(), 10);
    // four roots of height 1, three of height 2, two of height 3, one of height 4
    assert_eq!(total, 4 + 6 + 6 + 4);
}

#[test]
fn suite_depth_eight() {
    let r = verify_suite(8).unwrap();
    assert!(r.passed(), "{r:?}");
    let sizes: Vec<usize> = r.layers.iter().map(|l| l.closure).collect();
    assert_eq!(sizes, [1, 4, 13, 34, 80, 170, 339, 636, 1141]);
}

#[test]
fn non_members_are_rejected() {
    let elt = |pairs: &[(u32, u32)]| CrystalElt::from_entries(pairs.iter().map(|&(m, n)| vec![m, n]).collect());
    assert!(!is_member(&elt(&[(0, 0), (0, 0), (1, 0)])).0);
    assert!(is_member(&elt(&[(0, 1)])).0);
    let members = members_up_to(3);
    assert_eq!(members.len(), 1 + 4 + 13 + 34);
}

fn golden_walk(ops: &[(usize, usize)]) -> CrystalElt {
    let c = crystal_j();
    ops.iter().fold(CrystalElt::highest(), |b, &(r, i)| c.f(&b, r, i).unwrap())
}

proptest! {
    #[test]
    fn reached_elements_satisfy_the_theorem(ops in prop::collection::vec((0usize..2, 0usize..2), 0..16)) {
        let c = crystal_j();
        let b = golden_walk(&ops);
        prop_assert!(is_member(&b).0);
        for op in GoldenOp::ALL {
            let (r, i) = op.index();
            prop_assert_eq!(e_kills(&b, op).unwrap(), c.e(&b, r, i).is_none());
        }
    }

    #[test]
    fn normal_forms_rebuild_and_transport(ops in prop::collection::vec((0usize..2, 0usize..2), 0..12)) {
        let c = crystal_j();
        let cp = crystal_j_prime();
        let b = golden_walk(&ops);
        let word = normal_form(&b).unwrap();
        prop_assert!(is_normal_form(&c, &word).unwrap());
        prop_assert_eq!(apply_word(&c, &word, &CrystalElt::highest()).unwrap(), b.clone());
        let t = transport(&b).unwrap();
        prop_assert_eq!(c.weight(&b), cp.weight(&t));
        prop_assert_eq!(transport_back(&t).unwrap(), b);
    }
}
