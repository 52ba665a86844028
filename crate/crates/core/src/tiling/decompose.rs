use std::collections::HashMap;
use std::f64::consts::PI;

use serde::Serialize;

use super::{area_of, p, ScaledTriangle, TilingError, Triangle};
use crate::chordring::RingElem;

/// Tolerance for float placement only; exact checks decide validity.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    /// Cut by a line through a vertex; `rotation` picks the cut vertex.
    Pair { rotation: usize, t: usize },
    /// Corner triangles around an inscribed rotated copy.
    Inscribed { t: usize },
    /// `p_2 T` into nine unit triangles.
    Nine { rotation: usize },
    /// `p_t T` into `(t+1)^2` unit triangles.
    Pt { rotation: usize, t: usize },
    /// `n T` into `n^2` copies of `T`.
    Square { rotation: usize, n: usize },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Pair { .. } => "pair",
            Method::Inscribed { .. } => "inscribed",
            Method::Nine { .. } => "nine",
            Method::Pt { .. } => "pt",
            Method::Square { .. } => "square",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PointTag {
    Corner(usize),
    /// Strictly inside whole side `k`, which runs from corner `k` to `k+1`.
    OnSide(usize),
    Interior,
}

impl PointTag {
    fn on_side(self, s: usize) -> bool {
        match self {
            PointTag::Corner(k) => k == s || (k + 2) % 3 == s,
            PointTag::OnSide(k) => k == s,
            PointTag::Interior => false,
        }
    }
}

/// A piece with its angles listed in the order of its vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub angles: [usize; 3],
    pub scale: RingElem,
    pub verts: [usize; 3],
}

impl Part {
    pub fn triangle(&self, m: usize) -> Triangle {
        Triangle::new(m, self.angles).expect("parts are valid triangles")
    }

    pub fn scaled(&self, m: usize) -> ScaledTriangle {
        ScaledTriangle::new(self.triangle(m), self.scale.clone())
    }

    /// Exact length of the side from `verts[k]` to `verts[k+1]`.
    pub fn side_from(&self, k: usize) -> RingElem {
        &self.scale * &p(self.scale.ring(), self.angles[(k + 2) % 3] - 1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub m: usize,
    pub method: Method,
    /// Whole angles listed at corners 0, 1, 2.
    pub whole_angles: [usize; 3],
    pub whole_scale: RingElem,
    /// Factor by which the whole exceeds the method's own scale.
    pub extra: RingElem,
    pub parts: Vec<Part>,
    pub tags: Vec<PointTag>,
    pub positions: Vec<(f64, f64)>,
}

impl Decomposition {
    pub fn whole(&self) -> ScaledTriangle {
        ScaledTriangle::new(
            Triangle::new(self.m, self.whole_angles).expect("valid whole"),
            self.whole_scale.clone(),
        )
    }

    pub fn part_triangles(&self) -> Vec<Triangle> {
        self.parts.iter().map(|q| q.triangle(self.m)).collect()
    }

    /// Pairs of parts sharing an edge.
    pub fn adjacency(&self) -> Vec<(usize, usize)> {
        let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (pi, part) in self.parts.iter().enumerate() {
            for k in 0..3 {
                let (u, v) = (part.verts[k], part.verts[(k + 1) % 3]);
                by_edge.entry((u.min(v), u.max(v))).or_default().push(pi);
            }
        }
        let mut out: Vec<(usize, usize)> = by_edge
            .values()
            .filter(|v| v.len() == 2)
            .map(|v| (v[0].min(v[1]), v[0].max(v[1])))
            .collect();
        out.sort_unstable();
        out
    }

    /// Reverse the orientation of the whole and every part.
    pub fn mirror(&self) -> Decomposition {
        let [a0, a1, a2] = self.whole_angles;
        let corner = |k: usize| [0, 2, 1][k];
        let side = |s: usize| [2, 1, 0][s];
        let tags = self
            .tags
            .iter()
            .map(|t| match *t {
                PointTag::Corner(k) => PointTag::Corner(corner(k)),
                PointTag::OnSide(s) => PointTag::OnSide(side(s)),
                PointTag::Interior => PointTag::Interior,
            })
            .collect();
        let parts = self
            .parts
            .iter()
            .map(|q| Part {
                angles: [q.angles[0], q.angles[2], q.angles[1]],
                scale: q.scale.clone(),
                verts: [q.verts[0], q.verts[2], q.verts[1]],
            })
            .collect();
        let mut out = Decomposition {
            m: self.m,
            method: self.method,
            whole_angles: [a0, a2, a1],
            whole_scale: self.whole_scale.clone(),
            extra: self.extra.clone(),
            parts,
            tags,
            positions: Vec::new(),
        };
        out.positions = place(&out, false).unwrap_or_default();
        out
    }
}

fn listing(whole: &ScaledTriangle, rotation: usize) -> [usize; 3] {
    whole.base.rotated(rotation)
}

fn require(cond: bool, msg: impl Into<String>) -> Result<(), TilingError> {
    if cond {
        Ok(())
    } else {
        Err(TilingError::Precondition(msg.into()))
    }
}

/// The extra factor `c` with `whole.scale = c * method_scale`.
fn extra_factor(whole: &ScaledTriangle, method_scale: &RingElem) -> Result<RingElem, TilingError> {
    if whole.scale == *method_scale {
        return Ok(whole.ring().one());
    }
    whole
        .scale
        .div_exact(method_scale)
        .ok_or_else(|| TilingError::Precondition(format!("scale {} is not a multiple of {}", whole.scale, method_scale)))
}

/// Decompose `whole` by `method`. The whole's scale must be the method's
/// scale times a ring element, which multiplies every part.
pub fn decompose(whole: &ScaledTriangle, method: Method) -> Result<Decomposition, TilingError> {
    let m = whole.base.m();
    let ring = whole.ring().clone();
    let mut tags = Vec::new();
    let mut parts = Vec::new();
    let (angles, method_scale) = match method {
        Method::Pair { rotation, t } => {
            let a = listing(whole, rotation);
            require(t > 0 && t < a[2], format!("pair needs 0 < t < {}", a[2]))?;
            tags.extend([PointTag::Corner(0), PointTag::Corner(1), PointTag::Corner(2), PointTag::OnSide(0)]);
            parts.push(([a[0], a[1] + a[2] - t, t], p(&ring, a[0] + a[2] - 1), [0, 3, 2]));
            parts.push(([a[0] + t, a[1], a[2] - t], p(&ring, a[0] - 1), [3, 1, 2]));
            (a, p(&ring, a[0] + t - 1))
        }
        Method::Inscribed { t } => {
            let a = whole.base.angles();
            require(t > 0 && a.iter().all(|&x| x > t), "inscribed needs 0 < t < every angle")?;
            require(a.iter().any(|&x| x > 1), "inscribed needs an angle above 1")?;
            // corners 0..3, then u_k on side k
            tags.extend([PointTag::Corner(0), PointTag::Corner(1), PointTag::Corner(2)]);
            tags.extend([PointTag::OnSide(0), PointTag::OnSide(1), PointTag::OnSide(2)]);
            let one_less = p(&ring, t - 1);
            for k in 0..3 {
                let prev = (k + 2) % 3;
                let next = (k + 1) % 3;
                parts.push(([a[prev] + t, a[k], a[next] - t], one_less.clone(), [3 + prev, k, 3 + k]));
            }
            parts.push(([a[2], a[0], a[1]], one_less, [3, 4, 5]));
            (a, p(&ring, 2 * t - 1))
        }
        Method::Nine { rotation } => {
            let a = listing(whole, rotation);
            require(a.iter().all(|&x| x >= 3), "nine needs every angle at least 3")?;
            grid(&mut tags, &mut parts, a, 2, true, &ring);
            (a, p(&ring, 2))
        }
        Method::Pt { rotation, t } => {
            let a = listing(whole, rotation);
            require(t > 0 && a.iter().all(|&x| x > t), format!("pt needs every angle above {t}"))?;
            grid(&mut tags, &mut parts, a, t, true, &ring);
            (a, p(&ring, t))
        }
        Method::Square { rotation, n } => {
            let a = listing(whole, rotation);
            require(n >= 1, "square needs n >= 1")?;
            grid(&mut tags, &mut parts, a, n - 1, false, &ring);
            (a, ring.int(n as i64))
        }
    };
    let c = extra_factor(whole, &method_scale)?;
    let mut d = Decomposition {
        m,
        method,
        whole_angles: angles,
        whole_scale: whole.scale.clone(),
        extra: c.clone(),
        parts: parts
            .into_iter()
            .map(|(angles, scale, verts)| Part {
                angles,
                scale: &c * &scale,
                verts,
            })
            .collect(),
        tags,
        positions: Vec::new(),
    };
    d.positions = place(&d, false)?;
    Ok(d)
}

type RawPart = ([usize; 3], RingElem, [usize; 3]);

/// Triangular grid with rows `c = 0..=t`; `shifted` selects the chord
/// pattern, otherwise every piece is a copy of the whole.
fn grid(
    tags: &mut Vec<PointTag>,
    parts: &mut Vec<RawPart>,
    a: [usize; 3],
    t: usize,
    shifted: bool,
    ring: &std::sync::Arc<crate::chordring::QuotientRing>,
) {
    let id = |c: usize, r: usize| c * (c + 1) / 2 + r;
    for c in 0..=t + 1 {
        for r in 0..=c {
            let tag = match (c, r) {
                (0, 0) => PointTag::Corner(0),
                _ if c == t + 1 && r == t + 1 => PointTag::Corner(1),
                _ if c == t + 1 && r == 0 => PointTag::Corner(2),
                _ if r == c => PointTag::OnSide(0),
                _ if c == t + 1 => PointTag::OnSide(1),
                _ if r == 0 => PointTag::OnSide(2),
                _ => PointTag::Interior,
            };
            tags.push(tag);
        }
    }
    let (i, j, k) = (a[0] as i64, a[1] as i64, a[2] as i64);
    let ti = t as i64;
    let one = ring.one();
    for c in 0..=t {
        for r in 0..=c {
            let (ci, ri) = (c as i64, r as i64);
            let ang = if shifted {
                [i + ci - 2 * ri, j + ti - 2 * ci + ri, k - ti + ci + ri]
            } else {
                [i, j, k]
            };
            parts.push((ang.map(|x| x as usize), one.clone(), [id(c, r), id(c + 1, r + 1), id(c + 1, r)]));
        }
    }
    for c in 1..=t {
        for r in 1..=c {
            let (ci, ri) = (c as i64, r as i64);
            let ang = if shifted {
                [j + ti - 2 * ci + ri, k - ti + ci + ri - 1, i + ci - 2 * ri + 1]
            } else {
                [j, k, i]
            };
            parts.push((ang.map(|x| x as usize), one.clone(), [id(c, r - 1), id(c, r), id(c + 1, r)]));
        }
    }
}

/// The whole triangle a method cuts when applied to `base` with its own
/// parameters: `p_k T` for the chord-scaled methods, `n T` for squares.
pub fn natural_whole(base: Triangle, method: Method) -> Result<ScaledTriangle, TilingError> {
    Ok(match method {
        Method::Pair { rotation, t } => ScaledTriangle::chord_scaled(base, base.rotated(rotation)[0] + t - 1)?,
        Method::Inscribed { t } => ScaledTriangle::chord_scaled(base, 2 * t - 1)?,
        Method::Pt { t, .. } => ScaledTriangle::chord_scaled(base, t)?,
        Method::Nine { .. } => ScaledTriangle::chord_scaled(base, 2)?,
        Method::Square { n, .. } => {
            let unit = ScaledTriangle::unit(base)?;
            ScaledTriangle::new(base, unit.scale.scale(n as i64))
        }
    })
}

/// Outcome of running every method on every triangle of one m-gon.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub m: usize,
    /// Decompositions built and verified, mirrors included.
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every method with parameter `t <= max_t` (squares up to side
/// `max_t + 1`, the nine-piece cut at `t = 2`) on every triangle of the
/// m-gon, together with its mirror. Methods whose preconditions fail are
/// skipped; any other error is a failure.
pub fn method_sweep(m: usize, max_t: usize) -> SweepReport {
    let mut report = SweepReport {
        m,
        ..SweepReport::default()
    };
    for tri in super::all_triangles(m) {
        for t in 1..=max_t {
            let mut methods = vec![Method::Inscribed { t }];
            for rotation in 0..3 {
                methods.push(Method::Pair { rotation, t });
                methods.push(Method::Pt { rotation, t });
                methods.push(Method::Square { rotation, n: t + 1 });
                if t == 2 {
                    methods.push(Method::Nine { rotation });
                }
            }
            for method in methods {
                let d = match natural_whole(tri, method).and_then(|w| decompose(&w, method)) {
                    Ok(d) => d,
                    Err(TilingError::Precondition(_)) => continue,
                    Err(e) => {
                        report.failures.push(format!("{tri} {method:?}: {e}"));
                        continue;
                    }
                };
                for (label, d) in [(" mirrored", d.mirror()), ("", d)] {
                    report.checked += 1;
                    let r = verify(&d);
                    if !r.passed() {
                        report.failures.push(format!("{tri} {method:?}{label}: {:?}", r.problems));
                    }
                }
            }
        }
    }
    report
}

/// Exact and float checks of a decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub parts: usize,
    pub angles_ok: bool,
    pub edges_ok: bool,
    pub boundary_ok: bool,
    pub area_ok: bool,
    pub placement_ok: bool,
    pub problems: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.angles_ok && self.edges_ok && self.boundary_ok && self.area_ok && self.placement_ok
    }
}

pub fn verify(d: &Decomposition) -> VerifyReport {
    let m = d.m;
    let mut problems = Vec::new();
    let whole = d.whole();

    let mut angles_ok = d.parts.iter().all(|q| q.angles.iter().sum::<usize>() == m && q.angles.iter().all(|&x| x > 0));
    let mut sums = vec![0usize; d.tags.len()];
    for q in &d.parts {
        for k in 0..3 {
            sums[q.verts[k]] += q.angles[k];
        }
    }
    for (v, tag) in d.tags.iter().enumerate() {
        let want = match tag {
            PointTag::Corner(k) => d.whole_angles[*k],
            PointTag::OnSide(_) => m,
            PointTag::Interior => 2 * m,
        };
        if sums[v] != want {
            angles_ok = false;
            problems.push(format!("angle sum {} at point {v}, expected {want}", sums[v]));
        }
    }

    let mut edges: HashMap<(usize, usize), Vec<(bool, RingElem)>> = HashMap::new();
    for q in &d.parts {
        for k in 0..3 {
            let (u, v) = (q.verts[k], q.verts[(k + 1) % 3]);
            edges.entry((u.min(v), u.max(v))).or_default().push((u < v, q.side_from(k)));
        }
    }
    let mut edges_ok = true;
    let ring = d.whole_scale.ring();
    let mut boundary_len = [ring.zero(), ring.zero(), ring.zero()];
    let mut boundary_ok = true;
    let mut keys: Vec<_> = edges.keys().copied().collect();
    keys.sort_unstable();
    for key in keys {
        let uses = &edges[&key];
        match uses.len() {
            1 => {
                let (u, v) = key;
                match (0..3).find(|&s| d.tags[u].on_side(s) && d.tags[v].on_side(s)) {
                    Some(s) => boundary_len[s] = &boundary_len[s] + &uses[0].1,
                    None => {
                        boundary_ok = false;
                        problems.push(format!("unshared edge {key:?} is not on the boundary"));
                    }
                }
            }
            2 => {
                if uses[0].0 == uses[1].0 || uses[0].1 != uses[1].1 {
                    edges_ok = false;
                    problems.push(format!("edge {key:?} mismatched"));
                }
            }
            n => {
                edges_ok = false;
                problems.push(format!("edge {key:?} used {n} times"));
            }
        }
    }
    let scaled = ScaledTriangle::new(Triangle::new(m, d.whole_angles).expect("valid"), d.whole_scale.clone());
    for (s, len) in boundary_len.iter().enumerate() {
        let want = &scaled.scale * &p(ring, d.whole_angles[(s + 2) % 3] - 1);
        if *len != want {
            boundary_ok = false;
            problems.push(format!("side {s} has length {len}, expected {want}"));
        }
    }

    let total = d.parts.iter().fold(ring.zero(), |acc, q| &acc + &area_of(&q.scale, q.angles));
    let area_ok = total == whole.area();
    if !area_ok {
        problems.push(format!("area {total} vs {}", whole.area()));
    }
    let area_float = (total.eval_f64() - whole.area().eval_f64()).abs() < FLOAT_TOL * whole.area().eval_f64().max(1.0);
    if !area_float {
        problems.push("area differs at the real point".into());
    }

    let placement_ok = match (place(d, false), place(d, true)) {
        (Ok(a), Ok(b)) => {
            let size = whole.side(0).eval_f64().max(1.0);
            let agree = a.iter().zip(&b).all(|(x, y)| (x.0 - y.0).hypot(x.1 - y.1) < FLOAT_TOL * size);
            if !agree {
                problems.push("placements disagree between traversal orders".into());
            }
            agree
        }
        (Err(e), _) | (_, Err(e)) => {
            problems.push(e.to_string());
            false
        }
    };

    VerifyReport {
        parts: d.parts.len(),
        angles_ok,
        edges_ok,
        boundary_ok,
        area_ok: area_ok && area_float,
        placement_ok,
        problems,
    }
}

/// Float positions: whole corners first, then parts propagated across
/// placed edges, forward or reversed part order.
fn place(d: &Decomposition, reversed: bool) -> Result<Vec<(f64, f64)>, TilingError> {
    let m = d.m as f64;
    let whole = ScaledTriangle::new(Triangle::new(d.m, d.whole_angles)?, d.whole_scale.clone());
    let ring = whole.ring();
    let len = |k: usize| (&whole.scale * &p(ring, d.whole_angles[k] - 1)).eval_f64();
    let size = len(0).max(len(1)).max(len(2)).max(1.0);
    let mut pos: Vec<Option<(f64, f64)>> = vec![None; d.tags.len()];
    let corner = |k: usize| d.tags.iter().position(|t| *t == PointTag::Corner(k));
    let (c0, c1, c2) = match (corner(0), corner(1), corner(2)) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return Err(TilingError::Conservation("missing corner".into())),
    };
    // corner 1 to the right of corner 0, clockwise listing
    let th = d.whole_angles[0] as f64 * PI / m;
    let expected = [(0.0, 0.0), (len(2), 0.0), (len(1) * th.cos(), -len(1) * th.sin())];
    pos[c0] = Some(expected[0]);
    // seed: the part at corner 0 runs along side 0 towards corner 1
    let (seed, k) = d
        .parts
        .iter()
        .enumerate()
        .find_map(|(pi, q)| q.verts.iter().position(|&v| v == c0).map(|k| (pi, k)))
        .ok_or_else(|| TilingError::Conservation("no part at corner 0".into()))?;
    let q = &d.parts[seed];
    pos[q.verts[(k + 1) % 3]] = Some((q.side_from(k).eval_f64(), 0.0));

    let order: Vec<usize> = if reversed { (0..d.parts.len()).rev().collect() } else { (0..d.parts.len()).collect() };
    let mut done = vec![false; d.parts.len()];
    loop {
        let mut progress = false;
        for &pi in &order {
            if done[pi] {
                continue;
            }
            let q = &d.parts[pi];
            let known: Vec<usize> = (0..3).filter(|&k| pos[q.verts[k]].is_some()).collect();
            if known.len() < 2 {
                continue;
            }
            // a consecutive known pair (k, k+1)
            let k = (0..3)
                .find(|&k| known.contains(&k) && known.contains(&((k + 1) % 3)))
                .expect("two of three are consecutive");
            let a = pos[q.verts[k]].expect("known");
            let b = pos[q.verts[(k + 1) % 3]].expect("known");
            let c_idx = (k + 2) % 3;
            let l_ac = q.side_from(c_idx).eval_f64();
            let th = q.angles[k] as f64 * PI / m;
            let dir = (b.1 - a.1).atan2(b.0 - a.0) - th;
            let c = (a.0 + l_ac * dir.cos(), a.1 + l_ac * dir.sin());
            let ab = q.side_from(k).eval_f64();
            if ((b.0 - a.0).hypot(b.1 - a.1) - ab).abs() > FLOAT_TOL * size {
                return Err(TilingError::Conservation(format!("part {pi} edge length disagrees with placement")));
            }
            match pos[q.verts[c_idx]] {
                Some(old) if (old.0 - c.0).hypot(old.1 - c.1) > FLOAT_TOL * size => {
                    return Err(TilingError::Conservation(format!("part {pi} does not close up")));
                }
                Some(_) => {}
                None => pos[q.verts[c_idx]] = Some(c),
            }
            done[pi] = true;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    if done.iter().any(|x| !x) {
        return Err(TilingError::Conservation("parts not connected to the corners".into()));
    }
    for (k, &c) in [c0, c1, c2].iter().enumerate() {
        let got = pos[c].expect("corner placed");
        if (got.0 - expected[k].0).hypot(got.1 - expected[k].1) > FLOAT_TOL * size {
            return Err(TilingError::Conservation(format!("corner {k} misplaced")));
        }
    }
    for (v, tag) in d.tags.iter().enumerate() {
        if let (PointTag::OnSide(s), Some(x)) = (tag, pos[v]) {
            let (a, b) = (expected[*s], expected[(s + 1) % 3]);
            let cross = (b.0 - a.0) * (x.1 - a.1) - (b.1 - a.1) * (x.0 - a.0);
            if cross.abs() / (b.0 - a.0).hypot(b.1 - a.1) > FLOAT_TOL * size {
                return Err(TilingError::Conservation(format!("point {v} is off side {s}")));
            }
        }
    }
    pos.into_iter()
        .map(|x| x.ok_or_else(|| TilingError::Conservation("unplaced point".into())))
        .collect()
}
