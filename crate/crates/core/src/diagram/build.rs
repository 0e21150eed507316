use std::collections::HashMap;

use super::{Edge, Endpoint, FreeLoop, TorusDiagram, Winding};
use crate::error::{Error, Result};

/// Converts a planar diagram code (`X[i,j,k,l]` tuples, labels listed
/// counterclockwise starting from the incoming understrand) into a disk
/// diagram with zero windings. Tuple position is the slot index.
pub fn from_pd(code: &[[usize; 4]]) -> Result<TorusDiagram> {
    let mut ends: HashMap<usize, Vec<Endpoint>> = HashMap::new();
    for (c, x) in code.iter().enumerate() {
        for (s, &label) in x.iter().enumerate() {
            ends.entry(label)
                .or_default()
                .push(Endpoint::new(c, s as u8));
        }
    }
    let mut labels: Vec<_> = ends.into_iter().collect();
    labels.sort();
    let mut edges = Vec::with_capacity(labels.len());
    for (label, eps) in labels {
        match eps.as_slice() {
            [a, b] => edges.push(Edge::new(*a, *b, Winding::ZERO)),
            _ => {
                return Err(Error::InvalidDiagram(format!(
                    "PD label {label} appears {} times",
                    eps.len()
                )))
            }
        }
    }
    Ok(TorusDiagram::new(code.len(), edges, Vec::new()))
}

/// How the strands of a braid are closed up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidClosure {
    /// Planar closure; the link sits in a disk.
    Disk,
    /// Closing arcs wind once around the (1,0) direction; the link sits in
    /// an annulus.
    Annular,
}

/// Closure of a braid word on `strands` strands. Letter `k > 0` is the
/// generator crossing positions `k` and `k+1`; `-k` its inverse.
pub fn braid_closure(strands: usize, word: &[i32], closure: BraidClosure) -> Result<TorusDiagram> {
    let wrap = match closure {
        BraidClosure::Disk => Winding::ZERO,
        BraidClosure::Annular => Winding::new(1, 0),
    };
    let mut first: Vec<Option<Endpoint>> = vec![None; strands];
    let mut current: Vec<Option<Endpoint>> = vec![None; strands];
    let mut edges = Vec::new();

    for (c, &letter) in word.iter().enumerate() {
        let k = letter.unsigned_abs() as usize;
        if letter == 0 || k >= strands {
            return Err(Error::InvalidDiagram(format!(
                "braid letter {letter} on {strands} strands"
            )));
        }
        // Slots of the top-left, bottom-left, top-right, bottom-right ends.
        let [tl, bl, tr, br] = if letter > 0 {
            [3, 0, 2, 1]
        } else {
            [0, 1, 3, 2]
        };
        let (upper, lower) = (k - 1, k);
        for (pos, slot) in [(upper, tl), (lower, bl)] {
            let ep = Endpoint::new(c, slot);
            match current[pos] {
                Some(prev) => edges.push(Edge::new(prev, ep, Winding::ZERO)),
                None => first[pos] = Some(ep),
            }
        }
        current[upper] = Some(Endpoint::new(c, tr));
        current[lower] = Some(Endpoint::new(c, br));
    }

    let mut loops = Vec::new();
    for pos in 0..strands {
        match (current[pos], first[pos]) {
            (Some(end), Some(start)) => edges.push(Edge::new(end, start, wrap)),
            _ => loops.push(FreeLoop { winding: wrap }),
        }
    }
    Ok(TorusDiagram::new(word.len(), edges, loops))
}
