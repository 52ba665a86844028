use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use super::{plane_ring, psi_prime, AlcoveError, PlanarPoint};
use crate::chordring::{QuotientRing, RingElem};

/// A weight of `A_4` in fundamental-weight coordinates.
pub type Weight4 = [i64; 4];

/// Alpha_j (0-based) in fundamental-weight coordinates: a row of the Cartan
/// matrix.
pub fn root_in_weights(j: usize) -> Weight4 {
    let mut r = [0; 4];
    r[j] = 2;
    if j > 0 {
        r[j - 1] = -1;
    }
    if j < 3 {
        r[j + 1] = -1;
    }
    r
}

/// Class of a weight modulo the root lattice.
pub fn weight_class(c: &Weight4) -> usize {
    c.iter()
        .enumerate()
        .map(|(k, v)| (k as i64 + 1) * v)
        .sum::<i64>()
        .rem_euclid(5) as usize
}

pub fn in_root_lattice(c: &Weight4) -> bool {
    weight_class(c) == 0
}

/// Simple-root coordinates of a weight, when it lies in the root lattice.
pub fn weight_to_roots(c: &Weight4) -> Option<Weight4> {
    let mut out = [0; 4];
    for (j, o) in out.iter_mut().enumerate() {
        let s: i64 = (0..4)
            .map(|i| {
                let (lo, hi) = (i.min(j) as i64 + 1, i.max(j) as i64 + 1);
                c[i] * lo * (5 - hi)
            })
            .sum();
        if s % 5 != 0 {
            return None;
        }
        *o = s / 5;
    }
    Some(out)
}

fn add(u: &Weight4, v: &Weight4) -> Weight4 {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]]
}

fn sub(u: &Weight4, v: &Weight4) -> Weight4 {
    [u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]]
}

/// Pairing with `5 varpi_i . varpi_j = min(i,j)(5 - max(i,j))`, times 5.
pub(super) fn gram5(u: &Weight4, v: &Weight4) -> i64 {
    let mut s = 0;
    for i in 0..4 {
        for j in 0..4 {
            let (lo, hi) = (i.min(j) as i64 + 1, i.max(j) as i64 + 1);
            s += u[i] * v[j] * lo * (5 - hi);
        }
    }
    s
}

/// An alcove of the affine Weyl group of `A_4`: its vertices indexed by type,
/// the type of a vertex being its class modulo the root lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Alcove {
    pub verts: [Weight4; 5],
}

/// `{0, varpi_1, ..., varpi_4}`.
pub fn fundamental_alcove() -> Alcove {
    let mut verts = [[0; 4]; 5];
    for (k, v) in verts.iter_mut().enumerate().skip(1) {
        v[k - 1] = 1;
    }
    Alcove { verts }
}

impl Alcove {
    /// Reflection in the face opposite the vertex of type `k`.
    pub fn reflect(&self, k: usize) -> Alcove {
        let mut verts = self.verts;
        verts[k] = sub(&add(&self.verts[(k + 4) % 5], &self.verts[(k + 1) % 5]), &self.verts[k]);
        Alcove { verts }
    }

    pub fn translate(&self, mu: &Weight4) -> Alcove {
        Alcove {
            verts: self.verts.map(|v| add(&v, mu)),
        }
    }

    /// The alcove `-A`, reindexed by type.
    pub fn negate(&self) -> Alcove {
        let mut verts = [[0; 4]; 5];
        for (j, v) in verts.iter_mut().enumerate() {
            *v = self.verts[(5 - j) % 5].map(|c| -c);
        }
        Alcove { verts }
    }

    /// Left action of the finite simple reflection `s_j` (0-based) on every
    /// vertex.
    pub fn act(&self, j: usize) -> Alcove {
        let r = root_in_weights(j);
        Alcove {
            verts: self.verts.map(|v| sub(&v, &r.map(|c| c * v[j]))),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.verts.iter().enumerate().all(|(k, v)| weight_class(v) == k)
    }

    /// Sum of the vertices: five times the barycenter.
    pub fn vertex_sum(&self) -> Weight4 {
        self.verts.iter().fold([0; 4], |acc, v| add(&acc, v))
    }

    /// Whether the wall through the face opposite type `k` separates this
    /// alcove from `other`.
    pub fn separates(&self, k: usize, other: &Alcove) -> bool {
        let v = self.verts[k];
        let normal = sub(&sub(&v.map(|c| 2 * c), &self.verts[(k + 4) % 5]), &self.verts[(k + 1) % 5]);
        let level = 5 * gram5(&normal, &self.verts[(k + 1) % 5]);
        let own = gram5(&normal, &self.vertex_sum()) - level;
        let theirs = gram5(&normal, &other.vertex_sum()) - level;
        own.signum() * theirs.signum() < 0
    }

    /// Number of walls separating the two alcoves.
    pub fn distance(&self, other: &Alcove) -> usize {
        // walls are the level sets alpha = integer for the ten positive roots
        let a = self.vertex_sum();
        let b = other.vertex_sum();
        let mut d = 0;
        for i in 0..4 {
            for j in i..4 {
                let root: Weight4 = (i..=j).fold([0; 4], |acc, k| add(&acc, &root_in_weights(k)));
                let (pa, pb) = (gram5(&root, &a), gram5(&root, &b));
                // barycenters are never on a wall; levels are multiples of 25
                d += (pa.div_euclid(25) - pb.div_euclid(25)).unsigned_abs() as usize;
            }
        }
        d
    }

    pub fn image(&self, ring: &Arc<QuotientRing>) -> Vec<PlanarPoint> {
        self.verts.iter().map(|v| psi_prime(ring, v)).collect()
    }

    /// Types of the vertices shared with `other`.
    pub fn shared_types(&self, other: &Alcove) -> Vec<usize> {
        (0..5).filter(|&k| other.verts.contains(&self.verts[k])).collect()
    }
}

impl fmt::Display for Alcove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.verts.iter().map(|v| format!("{v:?}")).collect();
        write!(f, "[{}]", vs.join(" "))
    }
}

/// The vertices shared by `a` and `s' s a`, where `s` and `s'` are the face
/// reflections opposite types `k` and `k2`.
pub fn compatible_step(a: &Alcove, k: usize, k2: usize) -> Result<Vec<Weight4>, AlcoveError> {
    if k > 4 || k2 > 4 {
        return Err(AlcoveError::Precondition(format!("face types {k}, {k2} out of range")));
    }
    if k == k2 {
        return Err(AlcoveError::Incompatible(k, k2));
    }
    let b = a.reflect(k).reflect(k2);
    let shared: Vec<Weight4> = a.verts.iter().filter(|v| b.verts.contains(v)).cloned().collect();
    if shared.len() != 3 {
        return Err(AlcoveError::Incompatible(k, k2));
    }
    Ok(shared)
}

/// The compatible pair whose two-step image shares exactly the given vertex
/// types with `a`; the two reflections may be taken in either order.
pub fn pair_for_shared(types: &[usize]) -> Result<(usize, usize), AlcoveError> {
    let mut t = types.to_vec();
    t.sort_unstable();
    t.dedup();
    if t.len() != 3 || t.iter().any(|&k| k > 4) {
        return Err(AlcoveError::Precondition(format!(
            "exactly three distinct vertex types are shared by a compatible pair, got {types:?}"
        )));
    }
    let rest: Vec<usize> = (0..5).filter(|k| !t.contains(k)).collect();
    Ok((rest[0], rest[1]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ShapeKind {
    SmallPentagon,
    LargePentagon,
    Triangle,
    Rhombus,
}

/// One of the twelve shape classes. The index of a triangle or rhombus class
/// records which vertex of the shape sits at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShapeLabel {
    pub kind: ShapeKind,
    pub index: usize,
}

impl fmt::Display for ShapeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ShapeKind::SmallPentagon => f.write_str("Ps"),
            ShapeKind::LargePentagon => f.write_str("Pl"),
            ShapeKind::Triangle => write!(f, "T{}", self.index),
            ShapeKind::Rhombus => write!(f, "R{}", self.index),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeClass {
    pub label: ShapeLabel,
    /// Indices into [`ShapeClasses::alcoves`].
    pub members: Vec<usize>,
    /// Sorted squared distances between the five image points.
    #[serde(skip)]
    pub pair_dists: Vec<RingElem>,
    /// Sorted squared distances from the origin to the other four points.
    #[serde(skip)]
    pub origin_dists: Vec<RingElem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeClasses {
    /// The alcoves `w A_0` for `w` in the finite Weyl group, in breadth-first
    /// order of the words in `s_1, ..., s_4`.
    pub alcoves: Vec<Alcove>,
    pub classes: Vec<ShapeClass>,
    /// Class index of each alcove.
    pub class_of: Vec<usize>,
    /// Sizes of the orbits of the rank-two group on the images.
    pub orbit_sizes: Vec<usize>,
}

fn sorted(mut v: Vec<RingElem>) -> Vec<RingElem> {
    v.sort_by(|a, b| a.eval_f64().partial_cmp(&b.eval_f64()).expect("finite"));
    v
}

pub(super) fn pair_dists(pts: &[PlanarPoint]) -> Vec<RingElem> {
    let mut d = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            d.push(pts[i].dist2(&pts[j]));
        }
    }
    sorted(d)
}

pub(super) fn pentagon_ring() -> Arc<QuotientRing> {
    static RING: OnceLock<Arc<QuotientRing>> = OnceLock::new();
    RING.get_or_init(|| plane_ring(2).expect("m = 5")).clone()
}

fn compute_classes() -> ShapeClasses {
    let ring = pentagon_ring();
    let a0 = fundamental_alcove();
    // finite Weyl images: face reflections fixing the type-0 vertex
    let mut alcoves = vec![a0];
    let mut index: HashMap<Alcove, usize> = HashMap::from([(a0, 0)]);
    let mut queue = VecDeque::from([a0]);
    while let Some(a) = queue.pop_front() {
        for k in 1..5 {
            let b = a.reflect(k);
            if !index.contains_key(&b) {
                index.insert(b, alcoves.len());
                alcoves.push(b);
                queue.push_back(b);
            }
        }
    }

    // orbits of the rank-two group: s_alpha = s_1 s_3 and s_beta = s_2 s_4
    let mut orbit_of = vec![usize::MAX; alcoves.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..alcoves.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut i = 0;
        while i < members.len() {
            let a = alcoves[members[i]];
            for b in [a.act(0).act(2), a.act(1).act(3)] {
                let j = index[&b];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }

    let images: Vec<Vec<PlanarPoint>> = alcoves.iter().map(|a| a.image(&ring)).collect();
    let origin = PlanarPoint::origin(&ring);
    let one = ring.one();
    let g = ring.gen();

    // group orbits by the pairwise distance multiset, then name the kinds
    let mut by_shape: Vec<(Vec<RingElem>, Vec<usize>)> = Vec::new();
    for (id, orbit) in orbits.iter().enumerate() {
        let d = pair_dists(&images[orbit[0]]);
        match by_shape.iter_mut().find(|(k, _)| *k == d) {
            Some((_, ids)) => ids.push(id),
            None => by_shape.push((d, vec![id])),
        }
    }
    let long = &g + &one;
    let kind_of = |d: &[RingElem], count: usize| -> ShapeKind {
        let longs = d.iter().filter(|x| **x == long).count();
        match (count, longs) {
            (1, 0) => ShapeKind::SmallPentagon,
            (1, _) => ShapeKind::LargePentagon,
            (_, 2) => ShapeKind::Triangle,
            _ => ShapeKind::Rhombus,
        }
    };

    let mut classes = Vec::new();
    for (d, ids) in &by_shape {
        let kind = kind_of(d, ids.len());
        // order: origin role by its distance multiset (the apex of the
        // triangle and the inner rhombus vertex first), then first appearance
        let mut keyed: Vec<(Vec<RingElem>, usize, usize)> = ids
            .iter()
            .map(|&id| {
                let rep = orbits[id][0];
                let od = sorted(images[rep][1..].iter().map(|p| p.dist2(&origin)).collect());
                (od, rep, id)
            })
            .collect();
        let role_rank = |od: &[RingElem]| -> usize {
            let short = od.iter().filter(|x| **x != one && **x != long).count();
            let longs = od.iter().filter(|x| **x == long).count();
            match kind {
                ShapeKind::Triangle => [2usize, 1, 0].iter().position(|&l| l == longs).unwrap_or(3),
                _ => [2usize, 1, 0].iter().position(|&s| s == short).unwrap_or(3),
            }
        };
        keyed.sort_by_key(|(od, rep, _)| (role_rank(od), *rep));
        for (index, (od, _, id)) in keyed.into_iter().enumerate() {
            classes.push(ShapeClass {
                label: ShapeLabel { kind, index },
                members: orbits[id].clone(),
                pair_dists: d.clone(),
                origin_dists: od,
            });
        }
    }
    classes.sort_by_key(|c| c.label);
    let mut class_of = vec![0; alcoves.len()];
    for (ci, c) in classes.iter().enumerate() {
        for &i in &c.members {
            class_of[i] = ci;
        }
    }
    let orbit_sizes = orbits.iter().map(Vec::len).collect();
    ShapeClasses {
        alcoves,
        classes,
        class_of,
        orbit_sizes,
    }
}

/// The 120 images `w A_0` grouped into the twelve classes.
pub fn shape_classes() -> &'static ShapeClasses {
    static CLASSES: OnceLock<ShapeClasses> = OnceLock::new();
    CLASSES.get_or_init(compute_classes)
}

/// Shape label of any alcove: that of its translate with the type-0 vertex at
/// the origin.
pub fn classify(a: &Alcove) -> Option<ShapeLabel> {
    let sc = shape_classes();
    let base = a.translate(&a.verts[0].map(|c| -c));
    let i = sc.alcoves.iter().position(|b| *b == base)?;
    Some(sc.classes[sc.class_of[i]].label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_classes() {
        let sc = shape_classes();
        assert_eq!(sc.alcoves.len(), 120);
        assert_eq!(sc.classes.len(), 12);
        assert!(sc.orbit_sizes.iter().all(|&s| s == 10));
    }

    #[test]
    fn reflections_are_involutions() {
        let a = fundamental_alcove().reflect(2).reflect(0);
        for k in 0..5 {
            assert_eq!(a.reflect(k).reflect(k), a);
            assert!(a.reflect(k).is_valid());
            assert!(a.separates(k, &a.reflect(k)));
            assert_eq!(a.distance(&a.reflect(k)), 1);
        }
    }

    #[test]
    fn compatible_pairs_share_three() {
        let a = fundamental_alcove();
        for k in 0..5 {
            for k2 in 0..5 {
                let r = compatible_step(&a, k, k2);
                if k == k2 {
                    assert!(r.is_err());
                } else {
                    assert_eq!(r.unwrap().len(), 3);
                }
            }
        }
        assert!(pair_for_shared(&[0, 1, 2, 3]).is_err());
        assert_eq!(pair_for_shared(&[4, 0, 2]).unwrap(), (1, 3));
    }
}
