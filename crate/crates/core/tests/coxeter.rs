use chordcrystal::coxeter::{
    aug_gens, check_m, classical_reflections, dihedral_rotation_order, dodeca_check, equivariant,
    golden_action_table, group_closure, length_profile, psi_even_matrix, psi_matrix, root_orbit, roots_odd,
    rotation_polys_match, CoxeterType, LinMap, RankTwoLattice,
};
use proptest::prelude::*;

#[test]
fn small_augmented_groups() {
    for (m, ty, order) in [
        (3, CoxeterType::A(2), 6u64),
        (4, CoxeterType::B(2), 8),
        (5, CoxeterType::A(4), 120),
        (6, CoxeterType::B(3), 48),
        (8, CoxeterType::B(4), 384),
    ] {
        let r = check_m(m).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.target, ty.to_string());
        assert_eq!(r.order as u64, order);
    }
}

#[test]
fn rotation_orders() {
    // s_alpha s_beta has order m in the chord lattice
    for m in 3..=12 {
        assert_eq!(dihedral_rotation_order(m).unwrap(), Some(m), "m = {m}");
    }
    assert!(rotation_polys_match(15));
}

#[test]
fn psi_intertwines_reflections() {
    for m in [3usize, 5, 7, 9] {
        let lat = RankTwoLattice::new(m).unwrap();
        let (gens, ty) = lat.matched_gens();
        let psi = psi_matrix((m - 1) / 2);
        assert!(equivariant(&psi, &classical_reflections(&ty.cartan()), &gens, true), "m = {m}");
    }
    for m in [4usize, 6, 8, 10] {
        let lat = RankTwoLattice::new(m).unwrap();
        let (gens, ty) = lat.matched_gens();
        let psi = psi_even_matrix(m).unwrap();
        assert!(equivariant(&psi, &classical_reflections(&ty.cartan()), &gens, false), "m = {m}");
    }
}

#[test]
fn pentagon_roots() {
    let r = root_orbit(5).unwrap();
    assert_eq!(r.count, 20);
    assert_eq!(r.w_orbit_sizes, [10, 10]);
    assert_eq!(r.wa_orbit_sizes, [20]);
    assert!(r.stable && r.short_orbit_of_simple);
    // every generator fixes six roots and swaps seven pairs
    for row in golden_action_table() {
        assert_eq!((row.fixed.len(), row.swapped.len()), (6, 7), "{}", row.generator);
    }
    assert_eq!(roots_odd(7).unwrap().len(), 42);
}

#[test]
fn dodecahedron() {
    let r = dodeca_check();
    assert!(r.passed(), "{:?}", r.checks);
}

#[test]
fn length_profile_of_a4() {
    // Poincare polynomial of A_4: (1+q)(1+q+q^2)(1+..+q^3)(1+..+q^4)
    let mut poly = vec![1usize];
    for k in 2..=5 {
        let mut next = vec![0; poly.len() + k - 1];
        for (i, c) in poly.iter().enumerate() {
            for j in 0..k {
                next[i + j] += c;
            }
        }
        poly = next;
    }
    assert_eq!(length_profile(&aug_gens(5).unwrap()), poly);
}

proptest! {
    #[test]
    fn generator_words_preserve_the_roots(word in prop::collection::vec(0usize..4, 0..20)) {
        let gens = aug_gens(5).unwrap();
        let w = word.iter().fold(LinMap::identity(4), |acc, &i| acc.compose(&gens[i]));
        let roots = roots_odd(5).unwrap();
        let mut images: Vec<Vec<i64>> = roots.iter().map(|r| w.apply(r)).collect();
        let mut sorted = roots.clone();
        images.sort();
        sorted.sort();
        prop_assert_eq!(images, sorted);
        let group = group_closure(&gens, 1000).unwrap();
        prop_assert!(group.contains(&w));
    }
}
