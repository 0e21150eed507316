//! Realizability checks for diagrams on the torus.
//!
//! Slot coverage and loop classes are checked directly. Embedding data is
//! checked per connected component of the 4-valent graph, using the
//! counterclockwise rotation system and the edge windings:
//!
//! * rotation genus 0, every face walk winding zero: the component sits in
//!   a disk of T²;
//! * rotation genus 0, exactly two face walks winding ±w with w primitive:
//!   the component sits in an annulus with core class w;
//! * rotation genus 1, every face walk winding zero and cycle windings
//!   spanning ℤ²: the component fills the torus.
//!
//! Anything else cannot be drawn on T² with the given windings. Across
//! components, at most one may fill the torus, and all essential classes
//! (annular components and essential loops) must be parallel. Whether
//! the orientation of a filling embedding agrees with the rotation system
//! is not certified.

use std::fmt;

use super::{Endpoint, TorusDiagram, Winding};
use crate::cube::CurveClass;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub code: &'static str,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.code, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<Finding>,
    pub warnings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }

    fn error(&mut self, code: &'static str, message: String) {
        self.errors.push(Finding { code, message });
    }

    fn warn(&mut self, code: &'static str, message: String) {
        self.warnings.push(Finding { code, message });
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Placement {
    Disk,
    Annulus(CurveClass),
    Filling,
}

pub fn validate_diagram(diag: &TorusDiagram) -> ValidationReport {
    let mut report = ValidationReport::default();
    let d = diag.crossing_count();

    let mut hits = vec![0usize; 4 * d];
    for (i, e) in diag.edges().iter().enumerate() {
        for ep in [e.a, e.b] {
            if ep.crossing >= d || ep.slot > 3 {
                report.error("slot-range", format!("edge {i}: slot {ep} out of range"));
            } else {
                hits[ep.half_edge()] += 1;
            }
        }
    }
    for (h, &n) in hits.iter().enumerate() {
        let ep = Endpoint::from_half_edge(h);
        match n {
            1 => {}
            0 => report.error(
                "slot-uncovered",
                format!("slot {ep} is not an edge endpoint"),
            ),
            _ => report.error("slot-duplicate", format!("slot {ep} used {n} times")),
        }
    }

    let mut essential: Vec<(CurveClass, String)> = Vec::new();
    for (i, l) in diag.loops().iter().enumerate() {
        match CurveClass::primitive(l.winding) {
            Some(c) if !c.is_trivial() => essential.push((c, format!("loop {i}"))),
            Some(_) => {}
            None => report.error(
                "loop-class",
                format!("loop {i}: non-primitive loop class {}", l.winding),
            ),
        }
    }

    if !report.errors.is_empty() {
        return report;
    }

    let components = components(diag);
    let mut filling = Vec::new();
    for (ci, crossings) in components.iter().enumerate() {
        match classify_component(diag, crossings) {
            Ok(Placement::Disk) => {}
            Ok(Placement::Annulus(c)) => essential.push((c, format!("component {ci}"))),
            Ok(Placement::Filling) => filling.push(ci),
            Err((code, msg)) => report.error(code, format!("component {ci}: {msg}")),
        }
    }

    if filling.len() > 1 {
        report.error(
            "component-mix",
            format!("{} components fill the torus", filling.len()),
        );
    }
    if let (Some(&f), Some((_, who))) = (filling.first(), essential.first()) {
        report.error(
            "component-mix",
            format!("{who} is essential but component {f} fills the torus"),
        );
    }
    if let Some((first, who)) = essential.first() {
        for (c, other) in &essential[1..] {
            if c != first {
                report.error(
                    "non-parallel",
                    format!("{who} has class {first} but {other} has class {c}"),
                );
            }
        }
    }

    let pieces = components.len() + diag.loops().len();
    if pieces > 1 {
        report.warn(
            "disconnected",
            format!("{pieces} components; embedding checked per component only"),
        );
    }
    report
}

/// Crossing sets of the connected components of the 4-valent graph.
fn components(diag: &TorusDiagram) -> Vec<Vec<usize>> {
    let d = diag.crossing_count();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in diag.edges() {
        let (x, y) = (
            find(&mut parent, e.a.crossing),
            find(&mut parent, e.b.crossing),
        );
        if x != y {
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot_of = vec![usize::MAX; d];
    for c in 0..d {
        let r = find(&mut parent, c);
        if slot_of[r] == usize::MAX {
            slot_of[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot_of[r]].push(c);
    }
    groups
}

fn classify_component(
    diag: &TorusDiagram,
    crossings: &[usize],
) -> Result<Placement, (&'static str, String)> {
    let inc = diag.incidence();
    let edges = diag.edges();
    let darts: Vec<usize> = crossings.iter().flat_map(|&c| 4 * c..4 * c + 4).collect();

    // Walking a dart means traversing its edge away from it.
    let step = |h: usize| -> (usize, Winding) {
        let i = inc[h];
        let e = edges[i.edge];
        if i.is_a {
            (e.b.half_edge(), e.winding)
        } else {
            (e.a.half_edge(), -e.winding)
        }
    };
    let rotate = |h: usize| -> usize { (h & !3) | ((h + 1) & 3) };

    let mut seen = vec![false; diag.half_edge_count()];
    let mut face_windings = Vec::new();
    for &start in &darts {
        if seen[start] {
            continue;
        }
        let mut total = Winding::ZERO;
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            let (other, w) = step(h);
            total += w;
            h = rotate(other);
        }
        face_windings.push(total);
    }

    let v = crossings.len() as i64;
    let e = 2 * v;
    let f = face_windings.len() as i64;
    let euler = v - e + f;
    if euler > 2 || euler % 2 != 0 {
        return Err((
            "rotation-genus",
            format!("odd Euler characteristic {euler}"),
        ));
    }
    let genus = (2 - euler) / 2;
    let nonzero: Vec<Winding> = face_windings
        .iter()
        .copied()
        .filter(|w| !w.is_zero())
        .collect();

    match genus {
        0 => match nonzero.as_slice() {
            [] => Ok(Placement::Disk),
            [w, _] => match CurveClass::primitive(*w) {
                Some(c) => Ok(Placement::Annulus(c)),
                None => Err((
                    "face-winding",
                    format!("annular face winds {w}, not primitive"),
                )),
            },
            ws => Err((
                "face-winding",
                format!(
                    "{} face walks with nonzero winding in a planar component",
                    ws.len()
                ),
            )),
        },
        1 => {
            if let Some(w) = nonzero.first() {
                return Err(("face-winding", format!("disk face winds {w}")));
            }
            let index = cycle_lattice_index(diag, crossings, &inc);
            if index != 1 {
                return Err((
                    "cycle-span",
                    format!("cycle windings span a sublattice of index {index}, expected 1"),
                ));
            }
            Ok(Placement::Filling)
        }
        g => Err(("rotation-genus", format!("rotation system has genus {g}"))),
    }
}

/// Index in ℤ² of the lattice spanned by the windings of all cycles of the
/// component (0 when the lattice has rank < 2).
fn cycle_lattice_index(diag: &TorusDiagram, crossings: &[usize], inc: &[super::Incidence]) -> i64 {
    let edges = diag.edges();
    let mut lift: Vec<Option<Winding>> = vec![None; diag.crossing_count()];
    lift[crossings[0]] = Some(Winding::ZERO);
    let mut stack = vec![crossings[0]];
    let mut tree = vec![false; edges.len()];
    while let Some(c) = stack.pop() {
        let here = lift[c].unwrap();
        for &i in &inc[4 * c..4 * c + 4] {
            let e = edges[i.edge];
            let (other, w) = if i.is_a {
                (e.b, e.winding)
            } else {
                (e.a, -e.winding)
            };
            if lift[other.crossing].is_none() {
                lift[other.crossing] = Some(here + w);
                tree[i.edge] = true;
                stack.push(other.crossing);
            }
        }
    }
    let mut cycles = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if tree[i] || lift[e.a.crossing].is_none() {
            continue;
        }
        let w = lift[e.a.crossing].unwrap() + e.winding - lift[e.b.crossing].unwrap();
        if !w.is_zero() {
            cycles.push(w);
        }
    }
    let mut g = 0i64;
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let det = cycles[i].a * cycles[j].b - cycles[i].b * cycles[j].a;
            g = num_integer::gcd(g, det);
        }
    }
    g
}
