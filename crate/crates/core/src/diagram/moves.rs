use super::{Edge, Endpoint, TorusDiagram, Winding};
use crate::error::{Error, Result};

/// Crossing sign of an inserted kink. The positive kink splits its loop off
/// at the 0-smoothing, the negative one at the 1-smoothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chirality {
    Positive,
    Negative,
}

/// Where to insert a kink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum R1Site {
    Edge(usize),
    Loop(usize),
}

/// Inserts a Reidemeister I kink as a new last crossing.
///
/// The strand enters the new crossing under (slot 0), runs around a
/// null-homologous self-edge and leaves over. The original winding stays on
/// the incoming piece. A free loop becomes a single edge through the kink.
pub fn apply_r1(diag: &TorusDiagram, site: R1Site, chirality: Chirality) -> Result<TorusDiagram> {
    let n = diag.crossing_count();
    let slot = |s: u8| Endpoint::new(n, s);
    // (self-edge slots, exit slot)
    let ((p, q), exit) = match chirality {
        Chirality::Positive => ((2, 3), 1),
        Chirality::Negative => ((1, 2), 3),
    };
    let kink = Edge::new(slot(p), slot(q), Winding::ZERO);

    let mut edges = diag.edges().to_vec();
    let mut loops = diag.loops().to_vec();
    match site {
        R1Site::Edge(i) => {
            let len = edges.len();
            let e = *edges
                .get(i)
                .ok_or(Error::IndexOutOfRange { index: i, len })?;
            edges[i] = Edge::new(e.a, slot(0), e.winding);
            edges.push(kink);
            edges.push(Edge::new(slot(exit), e.b, Winding::ZERO));
        }
        R1Site::Loop(j) => {
            let len = loops.len();
            if j >= len {
                return Err(Error::IndexOutOfRange { index: j, len });
            }
            let l = loops.remove(j);
            edges.push(Edge::new(slot(exit), slot(0), l.winding));
            edges.push(kink);
        }
    }
    Ok(TorusDiagram::new(n + 1, edges, loops))
}

/// Relabels crossing `i` as `perm[i]`.
pub fn permute_crossings(diag: &TorusDiagram, perm: &[usize]) -> Result<TorusDiagram> {
    let n = diag.crossing_count();
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::IndexOutOfRange {
            index: perm.len(),
            len: n,
        });
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::IndexOutOfRange { index: p, len: n });
        }
    }
    let map = |e: Endpoint| Endpoint::new(perm[e.crossing], e.slot);
    let edges = diag
        .edges()
        .iter()
        .map(|e| Edge::new(map(e.a), map(e.b), e.winding))
        .collect();
    Ok(TorusDiagram::new(n, edges, diag.loops().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_diagram, validate_diagram};

    #[test]
    fn kink_from_loop() {
        let d = TorusDiagram::from_loops(&[(1, 0)]);
        let k = apply_r1(&d, R1Site::Loop(0), Chirality::Negative).unwrap();
        assert_eq!(
            k.serialize(),
            "crossings 1\nedge 0.1 0.2 w 0 0\nedge 0.3 0.0 w 1 0\n"
        );
        let k = apply_r1(&d, R1Site::Loop(0), Chirality::Positive).unwrap();
        assert!(validate_diagram(&k).is_valid());
    }

    #[test]
    fn twice() {
        let d = TorusDiagram::from_loops(&[(1, 0)]);
        let k = apply_r1(&d, R1Site::Loop(0), Chirality::Negative).unwrap();
        for c in [Chirality::Positive, Chirality::Negative] {
            for i in 0..k.edges().len() {
                let k2 = apply_r1(&k, R1Site::Edge(i), c).unwrap();
                assert_eq!(k2.crossing_count(), 2);
                let self_edges = k2
                    .edges()
                    .iter()
                    .filter(|e| e.a.crossing == e.b.crossing)
                    .count();
                assert!(self_edges >= 2);
                assert!(validate_diagram(&k2).is_valid(), "{k2}");
            }
        }
    }

    #[test]
    fn index_errors() {
        let d = TorusDiagram::from_loops(&[(1, 0)]);
        assert!(apply_r1(&d, R1Site::Edge(0), Chirality::Positive).is_err());
        assert!(apply_r1(&d, R1Site::Loop(1), Chirality::Positive).is_err());
    }

    #[test]
    fn permutation() {
        let d = parse_diagram("crossings 2\nedge 0.0 1.2 w 0 0\nedge 0.1 1.3 w 0 0\nedge 0.2 1.0 w 0 0\nedge 0.3 1.1 w 1 0\n").unwrap();
        let p = permute_crossings(&d, &[1, 0]).unwrap();
        assert_eq!(
            p.edges()[3],
            Edge::new(Endpoint::new(1, 3), Endpoint::new(0, 1), Winding::new(1, 0))
        );
        assert!(permute_crossings(&d, &[0, 0]).is_err());
        assert!(permute_crossings(&d, &[0]).is_err());
    }
}
