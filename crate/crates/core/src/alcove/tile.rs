use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::pentagonal::{pentagon_ring, Weight4};
use super::{
    classify, fundamental_alcove, in_root_lattice, psi_prime, psi_prime_inverse, shape_classes, Alcove, AlcoveError,
    PlanarPoint, ShapeKind,
};
use crate::chordring::RingElem;

const FLOAT_TOL: f64 = 1e-9;

/// Corner roles of a triangle image: the apex, the side points next to the
/// apex and the base corners, as vertex types. `side[i]` lies on the segment
/// from the apex to `base[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
struct Roles {
    apex: usize,
    side: [usize; 2],
    base: [usize; 2],
}

fn roles(pts: &[PlanarPoint]) -> Option<Roles> {
    let ring = pts[0].ring().clone();
    let long = &ring.gen() + &ring.one();
    let partners: Vec<Vec<usize>> = (0..5)
        .map(|i| (0..5).filter(|&j| j != i && pts[i].dist2(&pts[j]) == long).collect())
        .collect();
    let apex = (0..5).find(|&i| partners[i].len() == 2)?;
    let base = [partners[apex][0], partners[apex][1]];
    let mut side = [0; 2];
    for (s, b) in side.iter_mut().zip(base) {
        *s = (0..5).find(|&i| {
            i != apex && !base.contains(&i) && {
                let d = pts[i].sub(&pts[apex]).det(&pts[b].sub(&pts[apex]));
                d.is_zero()
            }
        })?;
    }
    Some(Roles { apex, side, base })
}

/// The 25 alcoves whose images tile `T = {0, 5 x_2, 5 x_3}`, one per cell of
/// the grid of translates of `T_f`, with the checks of the defining
/// properties.
#[derive(Clone, Debug, Serialize)]
pub struct Tiling25 {
    pub alcoves: Vec<Alcove>,
    /// Number of candidates found for each grid cell.
    pub candidates: Vec<usize>,
    pub area_ok: bool,
    pub edges_ok: bool,
    /// Every image has exactly one vertex in the root lattice.
    pub one_lattice_vertex: bool,
}

impl Tiling25 {
    pub fn passed(&self) -> bool {
        self.alcoves.len() == 25 && self.area_ok && self.edges_ok && self.one_lattice_vertex
    }
}

fn grid_point(a: i64, b: i64) -> PlanarPoint {
    psi_prime(&pentagon_ring(), &[0, a, b, 0])
}

fn grid_cells(size: i64) -> Vec<[PlanarPoint; 3]> {
    let mut cells = Vec::new();
    for a in 0..size {
        for b in 0..size - a {
            cells.push([grid_point(a, b), grid_point(a + 1, b), grid_point(a, b + 1)]);
        }
    }
    for a in 0..size - 1 {
        for b in 0..size - 1 - a {
            cells.push([grid_point(a + 1, b), grid_point(a + 1, b + 1), grid_point(a, b + 1)]);
        }
    }
    cells
}

/// Search the translates `w A_0 + mu`, `mu` in the root lattice, of the
/// triangle-class alcoves for one whose corners are each grid cell of `T`.
pub fn find_tiling25() -> Result<Tiling25, AlcoveError> {
    let ring = pentagon_ring();
    let sc = shape_classes();
    let triangles: Vec<(Alcove, Vec<PlanarPoint>)> = sc
        .classes
        .iter()
        .filter(|c| c.label.kind == ShapeKind::Triangle)
        .flat_map(|c| c.members.iter().map(|&i| sc.alcoves[i]))
        .map(|a| {
            let img = a.image(&ring);
            let r = roles(&img).expect("triangle class");
            let corners = vec![img[r.apex].clone(), img[r.base[0]].clone(), img[r.base[1]].clone()];
            (a, corners)
        })
        .collect();
    let cells = grid_cells(5);
    let found: Vec<Vec<Alcove>> = cells
        .par_iter()
        .map(|cell| {
            let mut out = Vec::new();
            for (a, corners) in &triangles {
                for target in cell {
                    let d = target.sub(&corners[0]);
                    let moved: Vec<PlanarPoint> = corners.iter().map(|c| c.add(&d)).collect();
                    if !cell.iter().all(|p| moved.contains(p)) {
                        continue;
                    }
                    let mu = psi_prime_inverse(&d);
                    let mu: Weight4 = [mu[0], mu[1], mu[2], mu[3]];
                    if in_root_lattice(&mu) {
                        out.push(a.translate(&mu));
                    }
                }
            }
            out.sort();
            out.dedup();
            out
        })
        .collect();
    let candidates: Vec<usize> = found.iter().map(Vec::len).collect();
    if let Some(i) = candidates.iter().position(|&c| c == 0) {
        return Err(AlcoveError::SearchExhausted(format!("no alcove covers grid cell {i}")));
    }
    let alcoves: Vec<Alcove> = found.iter().map(|f| f[0]).collect();

    let outline = [grid_point(0, 0), grid_point(5, 0), grid_point(0, 5)];
    let tris: Vec<[PlanarPoint; 3]> = alcoves
        .iter()
        .map(|a| {
            let img = a.image(&ring);
            let r = roles(&img).expect("triangle image");
            ccw([img[r.apex].clone(), img[r.base[0]].clone(), img[r.base[1]].clone()])
        })
        .collect();
    let area_ok = tris.iter().fold(ring.zero(), |acc, t| &acc + &tri_det(t)) == tri_det(&ccw(outline.clone()));
    let edges_ok = edge_problems(&tris, &outline).is_empty();
    let one_lattice_vertex = alcoves
        .iter()
        .all(|a| a.verts.iter().filter(|v| in_root_lattice(v)).count() == 1);
    Ok(Tiling25 {
        alcoves,
        candidates,
        area_ok,
        edges_ok,
        one_lattice_vertex,
    })
}

fn tri_det(t: &[PlanarPoint; 3]) -> RingElem {
    t[1].sub(&t[0]).det(&t[2].sub(&t[0]))
}

fn ccw(t: [PlanarPoint; 3]) -> [PlanarPoint; 3] {
    if tri_det(&t).eval_f64() < 0.0 {
        let [p, q, r] = t;
        [p, r, q]
    } else {
        t
    }
}

fn on_segment(p: &PlanarPoint, a: &PlanarPoint, b: &PlanarPoint) -> Option<f64> {
    let (pa, ab) = (p.xy(), [b.xy()[0] - a.xy()[0], b.xy()[1] - a.xy()[1]]);
    let rel = [pa[0] - a.xy()[0], pa[1] - a.xy()[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = (rel[0] * ab[0] + rel[1] * ab[1]) / len2;
    let off = (rel[0] * ab[1] - rel[1] * ab[0]).abs() / len2.sqrt();
    if t <= 1e-9 || t >= 1.0 - 1e-9 || off > 1e-6 {
        return None;
    }
    p.sub(a).det(&b.sub(a)).is_zero().then_some(t)
}

/// Exact edge bookkeeping: every edge is cut at the vertices lying inside
/// it; each piece must be matched by a reversed piece or lie on the outline.
fn edge_problems(tris: &[[PlanarPoint; 3]], outline: &[PlanarPoint; 3]) -> Vec<String> {
    let mut verts: Vec<PlanarPoint> = Vec::new();
    let mut seen = HashSet::new();
    for t in tris {
        for p in t {
            if seen.insert(p.key()) {
                verts.push(p.clone());
            }
        }
    }
    let mut pieces: HashMap<(PlanarPoint, PlanarPoint), usize> = HashMap::new();
    for t in tris {
        for e in 0..3 {
            let (a, b) = (&t[e], &t[(e + 1) % 3]);
            let mut inner: Vec<(f64, &PlanarPoint)> =
                verts.iter().filter_map(|p| on_segment(p, a, b).map(|s| (s, p))).collect();
            inner.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite"));
            let mut chain = vec![a];
            chain.extend(inner.into_iter().map(|(_, p)| p));
            chain.push(b);
            for w in chain.windows(2) {
                *pieces.entry((w[0].clone(), w[1].clone())).or_insert(0) += 1;
            }
        }
    }
    let on_outline = |p: &PlanarPoint, q: &PlanarPoint| {
        (0..3).any(|e| {
            let (a, b) = (&outline[e], &outline[(e + 1) % 3]);
            p.sub(a).det(&b.sub(a)).is_zero() && q.sub(a).det(&b.sub(a)).is_zero()
        })
    };
    let mut problems = Vec::new();
    for ((p, q), n) in &pieces {
        if *n > 1 {
            problems.push(format!("edge {p:?} -> {q:?} used {n} times"));
        }
        if !pieces.contains_key(&(q.clone(), p.clone())) && !on_outline(p, q) {
            problems.push(format!("edge {p:?} -> {q:?} unmatched"));
        }
    }
    problems.sort();
    problems
}

/// Interiors of two counterclockwise triangles overlap: no edge line
/// separates them.
fn interiors_overlap(s: &[[f64; 2]; 3], t: &[[f64; 2]; 3]) -> bool {
    let separated_by = |u: &[[f64; 2]; 3], v: &[[f64; 2]; 3]| {
        (0..3).any(|e| {
            let (a, b) = (u[e], u[(e + 1) % 3]);
            let len = (b[0] - a[0]).hypot(b[1] - a[1]);
            v.iter()
                .all(|p| ((b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])) / len <= FLOAT_TOL)
        })
    };
    !separated_by(s, t) && !separated_by(t, s)
}

/// The region tiled for a given extent `E`: the triangle `E T`, made of
/// `E^2` translates of `T` and of its point reflection `T'`.
#[derive(Clone, Debug, Serialize)]
pub struct Region {
    pub extent: usize,
    pub alcoves: Vec<Alcove>,
    #[serde(skip)]
    pub outline: [PlanarPoint; 3],
}

impl Region {
    pub fn new(extent: usize, base: &Tiling25) -> Result<Region, AlcoveError> {
        if extent == 0 || extent > 16 {
            return Err(AlcoveError::Region(format!("extent {extent} outside 1..=16")));
        }
        if base.alcoves.len() != 25 {
            return Err(AlcoveError::Region("the base set must hold 25 alcoves".into()));
        }
        let e = extent as i64;
        let mut alcoves = Vec::new();
        for a in 0..e {
            for b in 0..e - a {
                let mu = [0, 5 * a, 5 * b, 0];
                alcoves.extend(base.alcoves.iter().map(|x| x.translate(&mu)));
            }
        }
        for a in 0..e - 1 {
            for b in 0..e - 1 - a {
                let mu = [0, 5 * a + 5, 5 * b + 5, 0];
                alcoves.extend(base.alcoves.iter().map(|x| x.negate().translate(&mu)));
            }
        }
        let outline = [grid_point(0, 0), grid_point(5 * e, 0), grid_point(0, 5 * e)];
        Ok(Region {
            extent,
            alcoves,
            outline,
        })
    }
}

/// A gallery of alcoves: each step reflects in the face opposite the given
/// vertex type. `before` is the step that led into `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Walk {
    pub seed: Option<u64>,
    pub start: Alcove,
    pub before: usize,
    pub steps: Vec<usize>,
}

impl Walk {
    pub fn explicit(start: Alcove, before: usize, steps: Vec<usize>) -> Result<Walk, AlcoveError> {
        let w = Walk {
            seed: None,
            start,
            before,
            steps,
        };
        w.check()?;
        Ok(w)
    }

    /// A seeded walk from the fundamental alcove through every alcove of the
    /// region in a shuffled order, each leg crossing separating walls where
    /// it can, and never undoing the previous step.
    pub fn seeded(region: &Region, seed: u64) -> Result<Walk, AlcoveError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let start = fundamental_alcove();
        let mut targets = region.alcoves.clone();
        targets.shuffle(&mut rng);
        let mut visited: HashSet<Alcove> = HashSet::from([start]);
        let mut cur = start;
        let mut prev: Option<usize> = None;
        let mut steps = Vec::new();
        let cap = 200 * region.alcoves.len() + 1000;
        for target in targets {
            while !visited.contains(&target) {
                if steps.len() > cap {
                    return Err(AlcoveError::Walk(format!("no path within {cap} steps")));
                }
                let toward: Vec<usize> = (0..5)
                    .filter(|&k| Some(k) != prev && cur.separates(k, &target))
                    .collect();
                let k = if toward.is_empty() {
                    let others: Vec<usize> = (0..5).filter(|&k| Some(k) != prev).collect();
                    others[rng.gen_range(0..others.len())]
                } else {
                    toward[rng.gen_range(0..toward.len())]
                };
                cur = cur.reflect(k);
                visited.insert(cur);
                steps.push(k);
                prev = Some(k);
            }
        }
        // one more step so the last alcove has a successor
        let last = prev.unwrap_or(0);
        steps.push((last + 1 + rng.gen_range(0..4)) % 5);
        let first = steps[0];
        let before = (first + 1 + rng.gen_range(0..4)) % 5;
        let w = Walk {
            seed: Some(seed),
            start,
            before,
            steps,
        };
        w.check()?;
        Ok(w)
    }

    pub fn check(&self) -> Result<(), AlcoveError> {
        if !self.start.is_valid() {
            return Err(AlcoveError::Walk("start is not an alcove".into()));
        }
        if self.before > 4 || self.steps.iter().any(|&k| k > 4) {
            return Err(AlcoveError::Walk("face types are 0..=4".into()));
        }
        if self.steps.first() == Some(&self.before) || self.steps.windows(2).any(|w| w[0] == w[1]) {
            return Err(AlcoveError::Walk("a step undoes the previous one".into()));
        }
        Ok(())
    }

    /// Visited alcoves, starting with `start`.
    pub fn alcoves(&self) -> Vec<Alcove> {
        let mut out = vec![self.start];
        let mut cur = self.start;
        for &k in &self.steps {
            cur = cur.reflect(k);
            out.push(cur);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GoldenKind {
    T1,
    T2,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenTile {
    pub kind: GoldenKind,
    /// Counterclockwise.
    pub verts: [PlanarPoint; 3],
    /// Index into the region's alcoves.
    pub alcove: usize,
}

/// The diagonal chosen in the quadrilateral of one triangle image, as the
/// vertex types of its ends (a side point, then a base corner).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Diagonal {
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenTiling {
    pub extent: usize,
    pub seed: Option<u64>,
    pub tiles: Vec<GoldenTile>,
    pub diagonals: Vec<Diagonal>,
    pub labels: Vec<String>,
    pub outline: [PlanarPoint; 3],
}

/// Split every triangle image of the region into the small triangle at the
/// apex and a quadrilateral, and split the quadrilateral along the diagonal
/// fixed by the reflections entering and leaving the alcove on its first
/// visit.
pub fn aperiodic_tile(walk: &Walk, region: &Region) -> Result<GoldenTiling, AlcoveError> {
    walk.check()?;
    let ring = pentagon_ring();
    let visits = walk.alcoves();
    let mut first: HashMap<Alcove, (usize, Option<usize>)> = HashMap::new();
    for (i, a) in visits.iter().enumerate() {
        let pred = if i == 0 { walk.before } else { walk.steps[i - 1] };
        first.entry(*a).or_insert((pred, walk.steps.get(i).copied()));
    }
    let mut tiles = Vec::new();
    let mut diagonals = Vec::new();
    let mut labels = Vec::new();
    for (idx, a) in region.alcoves.iter().enumerate() {
        let &(pred, succ) = first
            .get(a)
            .ok_or_else(|| AlcoveError::Walk(format!("alcove {a} is never visited")))?;
        let succ = succ.ok_or_else(|| AlcoveError::Walk(format!("alcove {a} has no successor")))?;
        let img = a.image(&ring);
        let r = roles(&img).ok_or_else(|| AlcoveError::Region(format!("image of {a} is not a triangle")))?;
        let shared: Vec<usize> = (0..5).filter(|&k| k != pred && k != succ).collect();
        let quad: Vec<usize> = if shared.contains(&r.apex) {
            (0..5).filter(|&k| k != succ && k != r.apex).collect()
        } else {
            shared
        };
        let d = if quad.contains(&r.side[0]) && quad.contains(&r.base[1]) {
            Diagonal {
                from: r.side[0],
                to: r.base[1],
            }
        } else {
            Diagonal {
                from: r.side[1],
                to: r.base[0],
            }
        };
        let (s_near, s_far, b_near, b_far) = if d.from == r.side[0] {
            (r.side[0], r.side[1], r.base[0], r.base[1])
        } else {
            (r.side[1], r.side[0], r.base[1], r.base[0])
        };
        let p = |k: usize| img[k].clone();
        for (kind, t) in [
            (GoldenKind::T2, [p(r.apex), p(r.side[0]), p(r.side[1])]),
            (GoldenKind::T1, [p(s_near), p(s_far), p(b_far)]),
            (GoldenKind::T2, [p(s_near), p(b_far), p(b_near)]),
        ] {
            tiles.push(GoldenTile {
                kind,
                verts: ccw(t),
                alcove: idx,
            });
        }
        diagonals.push(d);
        labels.push(classify(a).map(|l| l.to_string()).unwrap_or_default());
    }
    Ok(GoldenTiling {
        extent: region.extent,
        seed: walk.seed,
        tiles,
        diagonals,
        labels,
        outline: region.outline.clone(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenCheck {
    pub tiles: usize,
    pub t1: usize,
    pub t2: usize,
    pub shapes_ok: bool,
    pub area_ok: bool,
    pub edges_ok: bool,
    pub disjoint_ok: bool,
    pub problems: Vec<String>,
}

impl GoldenCheck {
    pub fn passed(&self) -> bool {
        self.shapes_ok && self.area_ok && self.edges_ok && self.disjoint_ok && 2 * self.t1 == self.t2
    }
}

/// Exact shape, area and edge checks plus a floating disjointness check.
pub fn verify_golden(t: &GoldenTiling) -> GoldenCheck {
    let ring = pentagon_ring();
    let one = ring.one();
    let short = &ring.int(2) - &ring.gen();
    let mut problems = Vec::new();
    let mut shapes_ok = true;
    for (i, tile) in t.tiles.iter().enumerate() {
        let mut d: Vec<RingElem> = (0..3).map(|e| tile.verts[e].dist2(&tile.verts[(e + 1) % 3])).collect();
        d.sort_by(|a, b| a.eval_f64().partial_cmp(&b.eval_f64()).expect("finite"));
        let want = match tile.kind {
            GoldenKind::T1 => [short.clone(), short.clone(), one.clone()],
            GoldenKind::T2 => [short.clone(), one.clone(), one.clone()],
        };
        if d != want || tri_det(&tile.verts).eval_f64() <= 0.0 {
            shapes_ok = false;
            problems.push(format!("tile {i} is not a counterclockwise {:?}", tile.kind));
        }
    }
    let tris: Vec<[PlanarPoint; 3]> = t.tiles.iter().map(|x| x.verts.clone()).collect();
    let area = tris.iter().fold(ring.zero(), |acc, x| &acc + &tri_det(x));
    let area_ok = area == tri_det(&ccw(t.outline.clone()));
    if !area_ok {
        problems.push("areas do not sum to the outline".into());
    }
    let edge = edge_problems(&tris, &t.outline);
    let edges_ok = edge.is_empty();
    problems.extend(edge);
    let fl: Vec<[[f64; 2]; 3]> = tris.iter().map(|x| [x[0].xy(), x[1].xy(), x[2].xy()]).collect();
    let overlaps: Vec<(usize, usize)> = (0..fl.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let fl = &fl;
            (i + 1..fl.len()).filter(move |&j| interiors_overlap(&fl[i], &fl[j])).map(move |j| (i, j))
        })
        .collect();
    let disjoint_ok = overlaps.is_empty();
    problems.extend(overlaps.iter().take(10).map(|(i, j)| format!("tiles {i} and {j} overlap")));
    let t1 = t.tiles.iter().filter(|x| x.kind == GoldenKind::T1).count();
    GoldenCheck {
        tiles: t.tiles.len(),
        t1,
        t2: t.tiles.len() - t1,
        shapes_ok,
        area_ok,
        edges_ok,
        disjoint_ok,
        problems,
    }
}
