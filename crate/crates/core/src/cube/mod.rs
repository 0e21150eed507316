//! Resolutions of a diagram at the vertices of the cube {0,1}^d.

mod class;

use std::fmt;

pub use class::{intersection_number, normalize_class, CurveClass};

use crate::diagram::{Incidence, TorusDiagram, Winding};
use crate::error::{Error, Result};

/// Default bound on the crossing count; the cube has 2^d vertices.
pub const DEFAULT_MAX_CROSSINGS: usize = 24;

/// A vertex of the cube; bit `i` is the smoothing chosen at crossing `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeVertex(u32);

impl CubeVertex {
    pub const fn new(bits: u32) -> Self {
        CubeVertex(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn smoothing(self, crossing: usize) -> u8 {
        ((self.0 >> crossing) & 1) as u8
    }

    /// ‖v‖₁, the homological degree of the vertex.
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn with_one(self, crossing: usize) -> CubeVertex {
        CubeVertex(self.0 | (1 << crossing))
    }
}

impl fmt::Display for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:b}", self.0)
    }
}

/// Slot joined to `slot` inside a crossing by the given smoothing.
///
/// The 0-smoothing pairs slots (0,1) and (2,3); the 1-smoothing pairs
/// (1,2) and (3,0).
#[inline]
pub fn smoothing_partner(slot: u8, smoothing: u8) -> u8 {
    match smoothing {
        0 => slot ^ 1,
        _ if slot % 2 == 1 => (slot + 1) & 3,
        _ => (slot + 3) & 3,
    }
}

/// One edge traversed in or against its stored direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Traversal {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub id: usize,
    /// Edge traversals in cyclic order; crossing-internal hops sit between
    /// consecutive entries. Empty for free loops.
    pub arcs: Vec<Traversal>,
    /// Signed winding sum along the traversal.
    pub winding: Winding,
    pub class: CurveClass,
    pub free_loop: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedState {
    pub vertex: CubeVertex,
    /// Crossing circles ordered by minimal half-edge, then free loops.
    pub circles: Vec<Circle>,
    /// Owning circle of every half-edge, then of every free loop.
    pub owner: Vec<usize>,
}

impl ResolvedState {
    pub fn slot_owner(&self, crossing: usize, slot: u8) -> usize {
        self.owner[4 * crossing + slot as usize]
    }

    pub fn essential_class(&self) -> Option<CurveClass> {
        self.circles
            .iter()
            .map(|c| c.class)
            .find(|c| c.is_essential())
    }
}

/// Resolves a diagram at many vertices, sharing the incidence table.
pub struct Resolver<'a> {
    diag: &'a TorusDiagram,
    incidence: Vec<Incidence>,
}

impl<'a> Resolver<'a> {
    /// The diagram must cover every slot exactly once.
    pub fn new(diag: &'a TorusDiagram) -> Self {
        Resolver {
            diag,
            incidence: diag.incidence(),
        }
    }

    pub fn resolve(&self, v: CubeVertex) -> Result<ResolvedState> {
        let d = self.diag.crossing_count();
        if d < 32 && (v.bits() >> d) != 0 {
            return Err(Error::IndexOutOfRange {
                index: v.bits() as usize,
                len: 1 << d,
            });
        }
        let edges = self.diag.edges();
        let n = 4 * d;
        let mut owner = vec![usize::MAX; n + self.diag.loops().len()];
        let mut circles = Vec::new();

        for start in 0..n {
            if owner[start] != usize::MAX {
                continue;
            }
            let id = circles.len();
            let mut arcs = Vec::new();
            let mut winding = Winding::ZERO;
            let mut h = start;
            loop {
                owner[h] = id;
                let inc = self.incidence[h];
                let e = &edges[inc.edge];
                let (other, w) = if inc.is_a {
                    (e.b, e.winding)
                } else {
                    (e.a, -e.winding)
                };
                arcs.push(Traversal {
                    edge: inc.edge,
                    forward: inc.is_a,
                });
                winding += w;
                let o = other.half_edge();
                owner[o] = id;
                h = 4 * other.crossing
                    + smoothing_partner(other.slot, v.smoothing(other.crossing)) as usize;
                if h == start {
                    break;
                }
            }
            let class = normalize_class(winding.a, winding.b)?;
            circles.push(Circle {
                id,
                arcs,
                winding,
                class,
                free_loop: None,
            });
        }
        for (j, l) in self.diag.loops().iter().enumerate() {
            let id = circles.len();
            owner[n + j] = id;
            let class = normalize_class(l.winding.a, l.winding.b)?;
            circles.push(Circle {
                id,
                arcs: Vec::new(),
                winding: l.winding,
                class,
                free_loop: Some(j),
            });
        }

        let mut essential = circles.iter().map(|c| c.class).filter(|c| c.is_essential());
        if let Some(first) = essential.next() {
            if let Some(other) = essential.find(|c| *c != first) {
                return Err(Error::NonParallelCircles(
                    first.to_string(),
                    other.to_string(),
                ));
            }
        }
        Ok(ResolvedState {
            vertex: v,
            circles,
            owner,
        })
    }
}

/// Resolves `diag` at `v`. The diagram must pass validation.
pub fn resolve(diag: &TorusDiagram, v: CubeVertex) -> Result<ResolvedState> {
    Resolver::new(diag).resolve(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    fn kink() -> TorusDiagram {
        parse_diagram("crossings 1\nedge 0.1 0.2 w 0 0\nedge 0.3 0.0 w 1 0\n").unwrap()
    }

    fn classes(s: &ResolvedState) -> Vec<(i64, i64)> {
        s.circles
            .iter()
            .map(|c| (c.class.p(), c.class.q()))
            .collect()
    }

    #[test]
    fn partners() {
        assert_eq!(
            (0..4).map(|s| smoothing_partner(s, 0)).collect::<Vec<_>>(),
            vec![1, 0, 3, 2]
        );
        assert_eq!(
            (0..4).map(|s| smoothing_partner(s, 1)).collect::<Vec<_>>(),
            vec![3, 2, 1, 0]
        );
    }

    #[test]
    fn free_loop() {
        let s = resolve(&TorusDiagram::from_loops(&[(1, 0)]), CubeVertex::new(0)).unwrap();
        assert_eq!(classes(&s), vec![(1, 0)]);
        assert_eq!(s.circles[0].free_loop, Some(0));
    }

    #[test]
    fn kink_zero_smoothing() {
        let s = resolve(&kink(), CubeVertex::new(0)).unwrap();
        assert_eq!(classes(&s), vec![(1, 0)]);
        assert_eq!(s.circles[0].arcs.len(), 2);
    }

    #[test]
    fn kink_one_smoothing() {
        let s = resolve(&kink(), CubeVertex::new(1)).unwrap();
        // Slot 0 starts the essential circle; slot 1 the trivial one.
        assert_eq!(classes(&s), vec![(1, 0), (0, 0)]);
        assert_eq!(s.owner, vec![0, 1, 1, 0]);
    }

    #[test]
    fn non_primitive_trace_is_rejected() {
        let d = parse_diagram("crossings 1\nedge 0.1 0.2 w 0 0\nedge 0.3 0.0 w 2 0\n").unwrap();
        assert_eq!(
            resolve(&d, CubeVertex::new(0)),
            Err(Error::NonPrimitiveClass { p: -2, q: 0 })
        );
    }

    #[test]
    fn vertex_out_of_range() {
        assert!(resolve(&kink(), CubeVertex::new(2)).is_err());
    }

    #[test]
    fn one_circle_to_one_circle() {
        let d = parse_diagram("crossings 1\nedge 0.2 0.0 w 1 0\nedge 0.3 0.1 w 0 1\n").unwrap();
        assert_eq!(
            classes(&resolve(&d, CubeVertex::new(0)).unwrap()),
            vec![(1, -1)]
        );
        assert_eq!(
            classes(&resolve(&d, CubeVertex::new(1)).unwrap()),
            vec![(1, 1)]
        );
    }
}
