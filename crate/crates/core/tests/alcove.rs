use std::collections::HashSet;
use std::f64::consts::PI;

use chordcrystal::alcove::{
    aperiodic_tile, classify, compatible_step, find_tiling25, fundamental_alcove, in_root_lattice, plane_ring,
    psi_prime, root_in_weights, shape_classes, verify_golden, weight_line_count, weight_to_roots, Alcove, Region,
    Walk, Weight4,
};
use proptest::prelude::*;

type Affine = [[i64; 5]; 5];

/// Homogeneous matrix of `h -> h - (theta(h) - 1) theta^vee` on weight
/// coordinates, where `theta(h)` is the coordinate sum and `theta^vee` is
/// `varpi_1 + varpi_4`.
fn affine_s0() -> Affine {
    let mut m = [[0; 5]; 5];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for i in [0, 3] {
        for j in 0..4 {
            m[i][j] -= 1;
        }
        m[i][4] += 1;
    }
    m
}

fn mul(a: &Affine, b: &Affine) -> Affine {
    let mut c = [[0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            c[i][j] = (0..5).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn apply(a: &Affine, v: &Weight4) -> Weight4 {
    let h = [v[0], v[1], v[2], v[3], 1];
    let mut out = [0; 4];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..5).map(|k| a[i][k] * h[k]).sum();
    }
    out
}

#[test]
fn affine_reflection_is_an_involution_fixing_its_wall() {
    let s0 = affine_s0();
    let mut id = [[0; 5]; 5];
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = 1;
    }
    assert_eq!(mul(&s0, &s0), id);
    for v in [[1, 0, 0, 0], [0, 0, 0, 1], [2, -1, 0, 0], [3, 1, -4, 1]] {
        assert_eq!(v.iter().sum::<i64>(), 1);
        assert_eq!(apply(&s0, &v), v);
    }
    assert_eq!(apply(&s0, &[0; 4]), [1, 0, 0, 1]);
    let image: HashSet<Weight4> = fundamental_alcove().verts.iter().map(|v| apply(&s0, v)).collect();
    let reflected: HashSet<Weight4> = fundamental_alcove().reflect(0).verts.into_iter().collect();
    assert_eq!(image, reflected);
}

/// Reflect `v` in the wall through `face`: find the positive root with a
/// constant value `k` on the face, then `v - (root(v) - k) root^vee`.
fn reflect_in_wall(face: &[Weight4], v: &Weight4) -> Weight4 {
    for i in 0..4 {
        for j in i..4 {
            let pair = |w: &Weight4| w[i..=j].iter().sum::<i64>();
            let k = pair(&face[0]);
            if face.iter().all(|w| pair(w) == k) {
                let coroot: Weight4 = (i..=j).fold([0; 4], |acc, t| {
                    let r = root_in_weights(t);
                    [acc[0] + r[0], acc[1] + r[1], acc[2] + r[2], acc[3] + r[3]]
                });
                let c = pair(v) - k;
                return [v[0] - c * coroot[0], v[1] - c * coroot[1], v[2] - c * coroot[2], v[3] - c * coroot[3]];
            }
        }
    }
    panic!("face lies on no wall");
}

#[test]
fn the_twenty_five_alcoves_match_the_frozen_set() {
    let golden: Vec<[Weight4; 5]> = serde_json::from_str(include_str!("golden/tiling25.json")).unwrap();
    let t = find_tiling25().unwrap();
    assert!(t.passed());
    assert_eq!(t.alcoves.len(), 25);
    let found: HashSet<Alcove> = t.alcoves.iter().copied().collect();
    let frozen: HashSet<Alcove> = golden.into_iter().map(|verts| Alcove { verts }).collect();
    assert_eq!(found, frozen);
    for a in &t.alcoves {
        assert!(a.is_valid());
        assert_eq!(a.verts.iter().filter(|v| in_root_lattice(v)).count(), 1, "{a}");
    }
    assert_eq!(weight_to_roots(&[0, 1, 1, 0]), Some([1, 2, 2, 1]));
    assert!(found.contains(&fundamental_alcove()));
}

#[test]
fn twelve_shapes_in_orbits_of_ten() {
    let sc = shape_classes();
    assert_eq!(sc.alcoves.len(), 120);
    let distinct: HashSet<&Alcove> = sc.alcoves.iter().collect();
    assert_eq!(distinct.len(), 120, "finite Weyl group acts freely");
    assert_eq!(sc.classes.len(), 12);
    assert!(sc.classes.iter().all(|c| c.members.len() == 10));
    let labels: Vec<String> = sc.classes.iter().map(|c| c.label.to_string()).collect();
    assert_eq!(labels, ["Ps", "Pl", "T0", "T1", "T2", "T3", "T4", "R0", "R1", "R2", "R3", "R4"]);
    assert_eq!(classify(&fundamental_alcove()).unwrap().to_string(), "T0");
}

#[test]
fn compatible_steps() {
    let a = fundamental_alcove();
    assert!(compatible_step(&a, 1, 1).is_err());
    for k in 0..5 {
        for k2 in 0..5 {
            if k != k2 {
                assert_eq!(compatible_step(&a, k, k2).unwrap().len(), 3);
            }
        }
    }
}

#[test]
fn golden_pair_tilings() {
    let base = find_tiling25().unwrap();
    let region = Region::new(1, &base).unwrap();
    let t1 = aperiodic_tile(&Walk::seeded(&region, 1).unwrap(), &region).unwrap();
    let c = verify_golden(&t1);
    assert!(c.passed(), "{:?}", c.problems);
    assert_eq!((c.tiles, c.t1, c.t2), (75, 25, 50));
    let t2 = aperiodic_tile(&Walk::seeded(&region, 2).unwrap(), &region).unwrap();
    assert!(verify_golden(&t2).passed());
    assert_ne!(t1.diagonals, t2.diagonals);

    let region = Region::new(2, &base).unwrap();
    let t = aperiodic_tile(&Walk::seeded(&region, 5).unwrap(), &region).unwrap();
    let c = verify_golden(&t);
    assert!(c.passed(), "{:?}", c.problems);
    assert_eq!(c.tiles, 300);
    assert!(Region::new(0, &base).is_err());
}

#[test]
fn explicit_walks_reproduce_seeded_ones() {
    let base = find_tiling25().unwrap();
    let region = Region::new(1, &base).unwrap();
    let w = Walk::seeded(&region, 9).unwrap();
    let again = Walk::explicit(w.start, w.before, w.steps.clone()).unwrap();
    let (a, b) = (aperiodic_tile(&w, &region).unwrap(), aperiodic_tile(&again, &region).unwrap());
    assert_eq!(a.diagonals, b.diagonals);
    assert!(Walk::explicit(w.start, w.steps[0], w.steps.clone()).is_err());
}

/// Float enumeration: images of sums of distinct defining-representation
/// weights, tested against the m lines at angles `k pi / m`.
fn line_count_by_floats(n: usize) -> (usize, usize) {
    let m = 2 * n + 1;
    let ring = plane_ring(n).unwrap();
    let eps: Vec<Vec<i64>> = (0..m)
        .map(|k| {
            let mut c = vec![0; 2 * n];
            if k < 2 * n {
                c[k] += 1;
            }
            if k > 0 {
                c[k - 1] -= 1;
            }
            c
        })
        .collect();
    let (mut on, mut total) = (0, 0);
    for mask in 1u32..(1 << m) - 1 {
        let mut c = vec![0; 2 * n];
        for (k, e) in eps.iter().enumerate() {
            if mask >> k & 1 == 1 {
                c.iter_mut().zip(e).for_each(|(x, y)| *x += y);
            }
        }
        let [x, y] = psi_prime(&ring, &c).xy();
        total += 1;
        let hit = (0..m).any(|k| {
            let phi = k as f64 * PI / m as f64;
            (x * phi.sin() - y * phi.cos()).abs() < 1e-9
        });
        on += usize::from(hit);
    }
    (on, total)
}

#[test]
fn weight_line_counts() {
    for n in 1..=4 {
        assert_eq!(weight_line_count(n).unwrap(), line_count_by_floats(n), "n = {n}");
    }
    assert_eq!(weight_line_count(1).unwrap(), (6, 6));
    assert_eq!(weight_line_count(2).unwrap(), (30, 30));
    assert_eq!(weight_line_count(3).unwrap(), (98, 126));
}

fn gallery() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..5, 0..30)
}

proptest! {
    #[test]
    fn face_reflections_are_affine_reflections(steps in gallery(), k in 0usize..5) {
        let a = steps.iter().fold(fundamental_alcove(), |a, &s| a.reflect(s));
        prop_assert!(a.is_valid());
        let face: Vec<Weight4> = (0..5).filter(|&t| t != k).map(|t| a.verts[t]).collect();
        let b = a.reflect(k);
        prop_assert_eq!(b.verts[k], reflect_in_wall(&face, &a.verts[k]));
        prop_assert_eq!(b.reflect(k), a);
    }

    #[test]
    fn psi_prime_commutes_with_reflections(n in 1usize..5, c in prop::collection::vec(-5i64..6, 8), j in 0usize..8) {
        let ring = plane_ring(n).unwrap();
        let c = &c[..2 * n];
        let j = j % (2 * n);
        // classical s_j on fundamental-weight coordinates
        let mut s = c.to_vec();
        s[j] -= 2 * c[j];
        if j > 0 {
            s[j - 1] += c[j];
        }
        if j + 1 < 2 * n {
            s[j + 1] += c[j];
        }
        // 0-based j even is alpha-type, odd is beta-type
        let (root, i) = if j % 2 == 0 { (0, j / 2) } else { (1, (2 * n - 1 - j) / 2) };
        prop_assert_eq!(psi_prime(&ring, &s), psi_prime(&ring, c).reflect(root, i));
    }
}
