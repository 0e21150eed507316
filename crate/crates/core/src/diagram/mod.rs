//! Combinatorial link diagrams on the torus.
//!
//! A diagram is a 4-valent graph drawn on T². Every crossing has four slots
//! numbered counterclockwise; the understrand passes through slots 0 and 2,
//! the overstrand through slots 1 and 3. Edges join two slots and carry the
//! homology class in H₁(T²; ℤ) ≅ ℤ² of the arc traversed from its first
//! endpoint to its second. Components without crossings are free loops.

mod build;
mod moves;
mod parse;
mod validate;

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

pub use build::{braid_closure, from_pd, BraidClosure};
pub use moves::{apply_r1, permute_crossings, Chirality, R1Site};
pub use parse::parse_diagram;
pub use validate::{validate_diagram, Finding, ValidationReport};

/// A (crossing, slot) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub crossing: usize,
    pub slot: u8,
}

impl Endpoint {
    pub const fn new(crossing: usize, slot: u8) -> Self {
        Endpoint { crossing, slot }
    }

    /// Dense index `4 * crossing + slot`.
    #[inline]
    pub fn half_edge(self) -> usize {
        4 * self.crossing + self.slot as usize
    }

    #[inline]
    pub fn from_half_edge(h: usize) -> Self {
        Endpoint {
            crossing: h / 4,
            slot: (h % 4) as u8,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.crossing, self.slot)
    }
}

/// An element of H₁(T²; ℤ), i.e. a displacement between lifts in the
/// universal cover.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Winding {
    pub a: i64,
    pub b: i64,
}

impl Winding {
    pub const ZERO: Winding = Winding { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Winding { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl Add for Winding {
    type Output = Winding;
    fn add(self, rhs: Winding) -> Winding {
        Winding::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for Winding {
    fn add_assign(&mut self, rhs: Winding) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for Winding {
    type Output = Winding;
    fn sub(self, rhs: Winding) -> Winding {
        Winding::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Winding {
    type Output = Winding;
    fn neg(self) -> Winding {
        Winding::new(-self.a, -self.b)
    }
}

impl fmt::Display for Winding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: Endpoint,
    pub b: Endpoint,
    /// Class of the arc traversed from `a` to `b`.
    pub winding: Winding,
}

impl Edge {
    pub fn new(a: Endpoint, b: Endpoint, winding: Winding) -> Self {
        Edge { a, b, winding }
    }
}

/// A crossingless component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FreeLoop {
    pub winding: Winding,
}

impl FreeLoop {
    pub fn new(a: i64, b: i64) -> Self {
        FreeLoop {
            winding: Winding::new(a, b),
        }
    }
}

/// Which edge a half-edge belongs to, and at which end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub edge: usize,
    /// True when the half-edge is the edge's first endpoint.
    pub is_a: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TorusDiagram {
    crossings: usize,
    edges: Vec<Edge>,
    loops: Vec<FreeLoop>,
}

impl TorusDiagram {
    /// Builds a diagram without checking it; see [`validate_diagram`].
    pub fn new(crossings: usize, edges: Vec<Edge>, loops: Vec<FreeLoop>) -> Self {
        TorusDiagram {
            crossings,
            edges,
            loops,
        }
    }

    pub fn empty() -> Self {
        TorusDiagram::default()
    }

    /// Disjoint union of crossingless loops.
    pub fn from_loops(classes: &[(i64, i64)]) -> Self {
        let loops = classes.iter().map(|&(a, b)| FreeLoop::new(a, b)).collect();
        TorusDiagram::new(0, Vec::new(), loops)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn loops(&self) -> &[FreeLoop] {
        &self.loops
    }

    /// No crossings and no loops.
    pub fn is_empty_link(&self) -> bool {
        self.crossings == 0 && self.loops.is_empty()
    }

    pub fn half_edge_count(&self) -> usize {
        4 * self.crossings
    }

    /// Per half-edge incidence table. `None` entries mark uncovered slots.
    pub fn incidence_table(&self) -> Vec<Option<Incidence>> {
        let mut table = vec![None; self.half_edge_count()];
        for (i, e) in self.edges.iter().enumerate() {
            for (ep, is_a) in [(e.a, true), (e.b, false)] {
                if ep.crossing < self.crossings && ep.slot < 4 {
                    table[ep.half_edge()] = Some(Incidence { edge: i, is_a });
                }
            }
        }
        table
    }

    /// Incidence table for a diagram known to cover every slot exactly once.
    pub(crate) fn incidence(&self) -> Vec<Incidence> {
        self.incidence_table()
            .into_iter()
            .map(|x| x.expect("slot coverage checked by validation"))
            .collect()
    }

    /// Same diagram with edges sorted by first endpoint, the order
    /// serialization emits.
    pub fn canonical(&self) -> TorusDiagram {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| e.a);
        TorusDiagram {
            crossings: self.crossings,
            edges,
            loops: self.loops.clone(),
        }
    }

    /// Canonical text serialization.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TorusDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "crossings {}", self.crossings)?;
        let mut edges: Vec<&Edge> = self.edges.iter().collect();
        edges.sort_by_key(|e| e.a);
        for e in edges {
            writeln!(f, "edge {} {} w {} {}", e.a, e.b, e.winding.a, e.winding.b)?;
        }
        for l in &self.loops {
            writeln!(f, "loop {} {}", l.winding.a, l.winding.b)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serialize_sorts_edges_and_keeps_loop_order() {
        let d = TorusDiagram::new(
            1,
            vec![
                Edge::new(Endpoint::new(0, 3), Endpoint::new(0, 0), Winding::new(1, 0)),
                Edge::new(Endpoint::new(0, 1), Endpoint::new(0, 2), Winding::ZERO),
            ],
            vec![FreeLoop::new(0, 1), FreeLoop::new(0, 0)],
        );
        assert_eq!(
            d.serialize(),
            "crossings 1\nedge 0.1 0.2 w 0 0\nedge 0.3 0.0 w 1 0\nloop 0 1\nloop 0 0\n"
        );
    }

    #[test]
    fn half_edge_roundtrip() {
        for h in 0..40 {
            assert_eq!(Endpoint::from_half_edge(h).half_edge(), h);
        }
    }
}
