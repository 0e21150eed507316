//! Diagrams from closed polylines drawn on the torus.
//!
//! A curve is a polyline in the plane whose last point is its first point
//! shifted by the curve's class `(a, b)`; it projects to a closed curve on
//! ℝ²/ℤ². Crossings are found by intersecting segments against integer
//! translates, and the over/under choice at each crossing is supplied by the
//! caller. Random curves are in general position with probability one;
//! near-degenerate configurations are rejected.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::diagram::{Edge, Endpoint, FreeLoop, TorusDiagram, Winding};
use crate::error::{Error, Result};

const EPS: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyCurve {
    /// Vertices `P₀ … P_{m−1}`; the curve closes at `P₀ + class`.
    pub points: Vec<(f64, f64)>,
    pub class: (i64, i64),
}

impl PolyCurve {
    fn point(&self, s: usize) -> (f64, f64) {
        let m = self.points.len();
        let (x, y) = self.points[s % m];
        let laps = (s / m) as f64;
        (
            x + laps * self.class.0 as f64,
            y + laps * self.class.1 as f64,
        )
    }

    fn segment(&self, s: usize) -> ((f64, f64), (f64, f64)) {
        (self.point(s), self.point(s + 1))
    }

    fn segments(&self) -> usize {
        self.points.len()
    }
}

/// One crossing of an arrangement, before the over/under choice.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RawCrossing {
    pub curves: [usize; 2],
    segs: [usize; 2],
    params: [f64; 2],
    /// floor of the lifted crossing point on each curve's base lift.
    floors: [(i64, i64); 2],
    dirs: [(f64, f64); 2],
}

#[derive(Clone, Copy, Debug)]
struct Visit {
    crossing: usize,
    seg: usize,
    param: f64,
    floor: (i64, i64),
    /// Slot the curve enters through and the slot it leaves through.
    slots: (u8, u8),
}

fn cross(u: (f64, f64), v: (f64, f64)) -> f64 {
    u.0 * v.1 - u.1 * v.0
}

fn sub(u: (f64, f64), v: (f64, f64)) -> (f64, f64) {
    (u.0 - v.0, u.1 - v.1)
}

/// Intersection parameters of `p0→p1` and `q0→q1`, interior to both.
/// Segments that touch only at a shared end point do not cross.
fn intersect(
    p: ((f64, f64), (f64, f64)),
    q: ((f64, f64), (f64, f64)),
) -> Result<Option<(f64, f64)>> {
    let r = sub(p.1, p.0);
    let s = sub(q.1, q.0);
    let den = cross(r, s);
    let qp = sub(q.0, p.0);
    if den.abs() < EPS {
        if cross(qp, r).abs() > EPS {
            return Ok(None);
        }
        let rr = r.0 * r.0 + r.1 * r.1;
        let a = (qp.0 * r.0 + qp.1 * r.1) / rr;
        let b = a + (s.0 * r.0 + s.1 * r.1) / rr;
        let (lo, hi) = (a.min(b), a.max(b));
        if hi.min(1.0) - lo.max(0.0) > EPS {
            return Err(Error::InvalidDiagram(
                "overlapping collinear segments".into(),
            ));
        }
        return Ok(None);
    }
    let t = cross(qp, s) / den;
    let u = cross(qp, r) / den;
    let near = |x: f64| x.abs() < EPS || (x - 1.0).abs() < EPS;
    let inside = |x: f64| x > -EPS && x < 1.0 + EPS;
    if inside(t) && inside(u) && (near(t) || near(u)) {
        if near(t) && near(u) && (t - u).abs() > 0.5 {
            return Ok(None);
        }
        return Err(Error::InvalidDiagram(
            "crossing at a polyline vertex".into(),
        ));
    }
    Ok((t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0).then_some((t, u)))
}

fn bbox(seg: ((f64, f64), (f64, f64))) -> ((f64, f64), (f64, f64)) {
    let (a, b) = seg;
    ((a.0.min(b.0), a.1.min(b.1)), (a.0.max(b.0), a.1.max(b.1)))
}

/// All crossings among `curves`, self-crossings included.
pub fn crossings(curves: &[PolyCurve]) -> Result<Vec<RawCrossing>> {
    for c in curves {
        if c.points.len() < 3 {
            return Err(Error::InvalidDiagram(
                "a curve needs at least three points".into(),
            ));
        }
    }
    let mut out = Vec::new();
    for (i, ci) in curves.iter().enumerate() {
        for (j, cj) in curves.iter().enumerate().skip(i) {
            for s in 0..ci.segments() {
                let ps = ci.segment(s);
                let (lo, hi) = bbox(ps);
                for t in 0..cj.segments() {
                    let qt = cj.segment(t);
                    let (qlo, qhi) = bbox(qt);
                    let kx = ((lo.0 - qhi.0).ceil() as i64)..=((hi.0 - qlo.0).floor() as i64);
                    for k in kx {
                        let ly = ((lo.1 - qhi.1).ceil() as i64)..=((hi.1 - qlo.1).floor() as i64);
                        for l in ly {
                            // Each unordered pair of self-segments once.
                            if i == j && (t < s || (t == s && (k, l) <= (0, 0))) {
                                continue;
                            }
                            let shifted = (
                                (qt.0 .0 + k as f64, qt.0 .1 + l as f64),
                                (qt.1 .0 + k as f64, qt.1 .1 + l as f64),
                            );
                            if let Some((a, b)) = intersect(ps, shifted)? {
                                let p = (
                                    ps.0 .0 + a * (ps.1 .0 - ps.0 .0),
                                    ps.0 .1 + a * (ps.1 .1 - ps.0 .1),
                                );
                                let f = (p.0.floor() as i64, p.1.floor() as i64);
                                let frac = (p.0 - f.0 as f64, p.1 - f.1 as f64);
                                if frac.0 < EPS
                                    || frac.0 > 1.0 - EPS
                                    || frac.1 < EPS
                                    || frac.1 > 1.0 - EPS
                                {
                                    return Err(Error::InvalidDiagram(
                                        "crossing on the domain boundary".into(),
                                    ));
                                }
                                out.push(RawCrossing {
                                    curves: [i, j],
                                    segs: [s, t],
                                    params: [a, b],
                                    floors: [f, (f.0 - k, f.1 - l)],
                                    dirs: [sub(ps.1, ps.0), sub(qt.1, qt.0)],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Builds the diagram; `first_over(x)` says whether the strand of
/// `x.curves[0]` passes over.
pub fn diagram_from_curves<F>(curves: &[PolyCurve], mut first_over: F) -> Result<TorusDiagram>
where
    F: FnMut(&RawCrossing) -> bool,
{
    let raw = crossings(curves)?;
    let mut visits: Vec<Vec<Visit>> = vec![Vec::new(); curves.len()];
    for (n, x) in raw.iter().enumerate() {
        let over = if first_over(x) { 0 } else { 1 };
        let under = 1 - over;
        let u = x.dirs[under];
        let o = x.dirs[over];
        // Slot 0 is the incoming understrand, slot 2 the outgoing one. Slot 1
        // is whichever overstrand ray comes next counterclockwise.
        let back = (-u.0, -u.1);
        let (o_in, o_out) = if cross(back, o) > 0.0 { (3, 1) } else { (1, 3) };
        for side in 0..2 {
            let slots = if side == under { (0, 2) } else { (o_in, o_out) };
            visits[x.curves[side]].push(Visit {
                crossing: n,
                seg: x.segs[side],
                param: x.params[side],
                floor: x.floors[side],
                slots,
            });
        }
    }

    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for (c, curve) in curves.iter().enumerate() {
        let vs = &mut visits[c];
        if vs.is_empty() {
            loops.push(FreeLoop::new(curve.class.0, curve.class.1));
            continue;
        }
        vs.sort_by(|a, b| {
            (a.seg, a.param)
                .partial_cmp(&(b.seg, b.param))
                .expect("finite parameters")
        });
        for k in 0..vs.len() {
            let from = vs[k];
            let (to, lap) = if k + 1 < vs.len() {
                (vs[k + 1], (0, 0))
            } else {
                (vs[0], curve.class)
            };
            let w = Winding::new(
                to.floor.0 + lap.0 - from.floor.0,
                to.floor.1 + lap.1 - from.floor.1,
            );
            edges.push(Edge::new(
                Endpoint::new(from.crossing, from.slots.1),
                Endpoint::new(to.crossing, to.slots.0),
                w,
            ));
        }
    }
    Ok(TorusDiagram::new(raw.len(), edges, loops))
}

/// A wobbly polyline of class `class`. Essential classes follow the straight
/// line with vertex noise up to `wobble`; the zero class gives a star-shaped
/// polygon of radius below `wobble`.
pub fn random_curve<R: Rng + ?Sized>(
    rng: &mut R,
    class: (i64, i64),
    points: usize,
    wobble: f64,
) -> PolyCurve {
    let points = points.max(3);
    let base = (rng.random::<f64>(), rng.random::<f64>());
    let pts = if class == (0, 0) {
        let mut angles: Vec<f64> = (0..points)
            .map(|_| rng.random::<f64>() * std::f64::consts::TAU)
            .collect();
        angles.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        angles
            .into_iter()
            .map(|t| {
                let r = wobble * (0.3 + 0.7 * rng.random::<f64>());
                (base.0 + r * t.cos(), base.1 + r * t.sin())
            })
            .collect()
    } else {
        (0..points)
            .map(|k| {
                let f = k as f64 / points as f64;
                let nx = wobble * (2.0 * rng.random::<f64>() - 1.0);
                let ny = wobble * (2.0 * rng.random::<f64>() - 1.0);
                (
                    base.0 + f * class.0 as f64 + nx,
                    base.1 + f * class.1 as f64 + ny,
                )
            })
            .collect()
    };
    PolyCurve { points: pts, class }
}

const CLASSES: [(i64, i64); 6] = [(0, 0), (1, 0), (0, 1), (1, 1), (1, -1), (2, 1)];

/// A random diagram whose crossing count lies in `crossings`, with random
/// over/under choices.
pub fn random_diagram<R: Rng + ?Sized>(
    rng: &mut R,
    crossings_in: RangeInclusive<usize>,
) -> TorusDiagram {
    loop {
        let n = rng.random_range(1..=3);
        let curves: Vec<PolyCurve> = (0..n)
            .map(|_| {
                let class = CLASSES[rng.random_range(0..CLASSES.len())];
                let wobble = if class == (0, 0) {
                    rng.random_range(0.1..0.45)
                } else {
                    rng.random_range(0.05..0.4)
                };
                let points = rng.random_range(3..7);
                random_curve(rng, class, points, wobble)
            })
            .collect();
        let Ok(raw) = crossings(&curves) else {
            continue;
        };
        if !crossings_in.contains(&raw.len()) {
            continue;
        }
        let flips: Vec<bool> = (0..raw.len()).map(|_| rng.random()).collect();
        let mut next = flips.into_iter();
        if let Ok(d) = diagram_from_curves(&curves, |_| next.next().unwrap_or(false)) {
            return d;
        }
    }
}

/// Embedded curves stacked by index, later curves above earlier ones.
/// Returns `None` when some curve crosses itself.
pub fn layered_diagram(curves: &[PolyCurve]) -> Result<Option<TorusDiagram>> {
    if crossings(curves)?
        .iter()
        .any(|x| x.curves[0] == x.curves[1])
    {
        return Ok(None);
    }
    diagram_from_curves(curves, |x| x.curves[0] > x.curves[1]).map(Some)
}

/// Two independent layered realizations of the same class sequence. The
/// links are isotopic: each layer is an embedded curve at its own height,
/// determined up to isotopy by its class.
pub fn layered_pair<R: Rng + ?Sized>(
    rng: &mut R,
    classes: &[(i64, i64)],
    max_crossings: usize,
) -> (TorusDiagram, TorusDiagram) {
    let draw = |rng: &mut R| loop {
        let curves: Vec<PolyCurve> = classes
            .iter()
            .map(|&c| {
                let wobble = if c == (0, 0) {
                    rng.random_range(0.1..0.45)
                } else {
                    rng.random_range(0.02..0.15)
                };
                let points = rng.random_range(3..6);
                random_curve(rng, c, points, wobble)
            })
            .collect();
        if let Ok(Some(d)) = layered_diagram(&curves) {
            if d.crossing_count() <= max_crossings {
                return d;
            }
        }
    };
    let a = draw(rng);
    let b = draw(rng);
    (a, b)
}
