use chordcrystal::chordring::RingElem;
use chordcrystal::tiling::{
    all_triangles, closure_reach, consecutive_pair_holds, decompose, method_sweep, natural_whole,
    product_identity_holds, star_all, verify, Method, Polygon, Reach, ScaledTriangle, Triangle,
};
use proptest::prelude::*;

#[test]
fn sweep_small_polygons() {
    for m in 3..=9 {
        let r = method_sweep(m, 3);
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checked > 0 || m == 3, "m = {m}");
    }
}

#[test]
fn nine_pieces_of_the_equilateral_nonagon_triangle() {
    let t333 = Triangle::new(9, [3, 3, 3]).unwrap();
    let d = decompose(&ScaledTriangle::chord_scaled(t333, 2).unwrap(), Method::Nine { rotation: 0 }).unwrap();
    assert!(verify(&d).passed());
    let parts = d.part_triangles();
    let t135 = Triangle::new(9, [1, 3, 5]).unwrap();
    let t234 = Triangle::new(9, [2, 3, 4]).unwrap();
    assert_eq!(parts.iter().filter(|t| t.same_up_to_mirror(&t135)).count(), 3);
    assert_eq!(parts.iter().filter(|t| t.same_up_to_mirror(&t234)).count(), 6);
}

#[test]
fn squares_give_n_squared_copies() {
    for m in [5, 7, 8] {
        for tri in all_triangles(m) {
            for n in 1..=3 {
                let meth = Method::Square { rotation: 0, n };
                let d = decompose(&natural_whole(tri, meth).unwrap(), meth).unwrap();
                assert!(verify(&d).passed());
                assert_eq!(d.parts.len(), n * n);
                assert!(d.part_triangles().iter().all(|t| t == &tri));
            }
        }
    }
}

#[test]
fn chord_identities() {
    for m in 3..=13 {
        assert!(product_identity_holds(m).unwrap());
        for i in 1..m.saturating_sub(2) {
            assert!(consecutive_pair_holds(m, i).unwrap(), "m = {m}, i = {i}");
        }
    }
}

#[test]
fn golden_pair_star_product() {
    let small = ScaledTriangle::chord_scaled(Triangle::new(5, [1, 1, 3]).unwrap(), 1).unwrap();
    let large = ScaledTriangle::unit(Triangle::new(5, [1, 2, 2]).unwrap()).unwrap();
    let target = ScaledTriangle::chord_scaled(Triangle::new(5, [1, 2, 2]).unwrap(), 1).unwrap();
    let glued = star_all(&Polygon::from_triangle(&small), &Polygon::from_triangle(&large));
    assert!(glued.iter().any(|p| p.matches(&target)));
}

#[test]
fn reach_in_the_pentagon_and_nonagon() {
    let gens = vec![Triangle::indexed(5, 1).unwrap(), Triangle::indexed(5, 2).unwrap()];
    let target = ScaledTriangle::chord_scaled(Triangle::indexed(5, 1).unwrap(), 1).unwrap();
    assert!(matches!(closure_reach(&target, &gens, 6, &[]), Reach::Derived(_)));

    let t333 = Triangle::new(9, [3, 3, 3]).unwrap();
    let target = ScaledTriangle::chord_scaled(t333, 2).unwrap();
    let all9 = all_triangles(9);
    match closure_reach(&target, &all9, 4, &[]) {
        Reach::Derived(d) => assert_eq!(d.root_method(), Some(Method::Nine { rotation: 0 })),
        other => panic!("{other:?}"),
    }
    assert!(matches!(closure_reach(&target, &all9, 4, &["nine"]), Reach::Unreachable { exhausted: true }));
}

#[test]
fn rejects_non_triangles() {
    assert!(Triangle::new(13, [4, 4, 6]).is_err());
    assert!(Triangle::new(13, [4, 4, 5]).is_ok());
    let meth = Method::Pt { rotation: 0, t: 3 };
    let t443 = Triangle::new(11, [4, 4, 3]).unwrap();
    assert!(natural_whole(t443, meth).and_then(|w| decompose(&w, meth)).is_err());
}

fn any_method() -> impl Strategy<Value = Method> {
    (0usize..5, 0usize..3, 1usize..4).prop_map(|(k, rotation, t)| match k {
        0 => Method::Pair { rotation, t },
        1 => Method::Inscribed { t },
        2 => Method::Nine { rotation },
        3 => Method::Pt { rotation, t },
        _ => Method::Square { rotation, n: t },
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn areas_add_up_exactly(m in 4usize..14, pick in 0usize..1000, meth in any_method()) {
        let tris = all_triangles(m);
        let tri = tris[pick % tris.len()];
        let whole = natural_whole(tri, meth).unwrap();
        if let Ok(d) = decompose(&whole, meth) {
            let ring = whole.ring().clone();
            let sum = d.parts.iter().fold(ring.zero(), |acc: RingElem, p| &acc + &p.scaled(m).area());
            prop_assert_eq!(sum, whole.area());
            prop_assert!(verify(&d).passed());
        }
    }
}
