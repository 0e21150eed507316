//! The maps d_vu attached to the edges of the cube.
//!
//! Labels are bitmasks over the canonical circle order of a resolution:
//! bit k set means circle k carries v₊, clear means v₋. Every map sends a
//! basis element to a sum of basis elements with coefficient 1.

use crate::cube::{CubeVertex, ResolvedState};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MergeCase {
    /// Two trivial circles into a trivial circle.
    BothTrivial,
    /// A trivial and an essential circle into an essential circle.
    TrivialEssential,
    /// Two parallel essential circles into a trivial circle.
    BothEssential,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitCase {
    /// A trivial circle into two trivial circles.
    BothTrivial,
    /// An essential circle into a trivial and an essential circle.
    TrivialEssential,
    /// A trivial circle into two parallel essential circles.
    BothEssential,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bifurcation {
    /// For `TrivialEssential`, `inputs[0]` is the trivial circle.
    Merge {
        case: MergeCase,
        inputs: [usize; 2],
        output: usize,
    },
    /// For `TrivialEssential`, `outputs[0]` is the trivial circle.
    Split {
        case: SplitCase,
        input: usize,
        outputs: [usize; 2],
    },
    /// One circle becomes one circle of another class; the map is zero.
    Reclass { input: usize, output: usize },
}

/// d_vu for one edge of the cube, before the sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMap {
    pub bifurcation: Bifurcation,
    /// Circles away from the crossing: (index at v, index at u).
    pub passthrough: Vec<(usize, usize)>,
    pub source_circles: usize,
    pub target_circles: usize,
}

fn involved(state: &ResolvedState, crossing: usize) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..4).map(|s| state.slot_owner(crossing, s)).collect();
    ids.sort_unstable();
    ids.dedup();
    ids
}

impl EdgeMap {
    /// Classifies the change at `crossing` between resolutions `from` and
    /// `to`, where `to` differs from `from` only by 0 → 1 at `crossing`.
    pub fn between(from: &ResolvedState, to: &ResolvedState, crossing: usize) -> Result<EdgeMap> {
        let ins = involved(from, crossing);
        let outs = involved(to, crossing);
        let violation = |detail: String| Error::CaseAnalysisViolation {
            vertex: from.vertex.bits(),
            crossing,
            detail,
        };
        let cls = |s: &ResolvedState, i: usize| s.circles[i].class;

        let bifurcation = match (ins.as_slice(), outs.as_slice()) {
            (&[a, b], &[o]) => {
                let (ca, cb, co) = (cls(from, a), cls(from, b), cls(to, o));
                match (ca.is_essential(), cb.is_essential()) {
                    (false, false) if co.is_trivial() => Bifurcation::Merge {
                        case: MergeCase::BothTrivial,
                        inputs: [a, b],
                        output: o,
                    },
                    (false, true) if co == cb => Bifurcation::Merge {
                        case: MergeCase::TrivialEssential,
                        inputs: [a, b],
                        output: o,
                    },
                    (true, false) if co == ca => Bifurcation::Merge {
                        case: MergeCase::TrivialEssential,
                        inputs: [b, a],
                        output: o,
                    },
                    (true, true) if ca == cb && co.is_trivial() => Bifurcation::Merge {
                        case: MergeCase::BothEssential,
                        inputs: [a, b],
                        output: o,
                    },
                    _ => return Err(violation(format!("merge of {ca} and {cb} into {co}"))),
                }
            }
            (&[i], &[a, b]) => {
                let (ci, ca, cb) = (cls(from, i), cls(to, a), cls(to, b));
                match (ca.is_essential(), cb.is_essential()) {
                    (false, false) if ci.is_trivial() => Bifurcation::Split {
                        case: SplitCase::BothTrivial,
                        input: i,
                        outputs: [a, b],
                    },
                    (false, true) if ci == cb => Bifurcation::Split {
                        case: SplitCase::TrivialEssential,
                        input: i,
                        outputs: [a, b],
                    },
                    (true, false) if ci == ca => Bifurcation::Split {
                        case: SplitCase::TrivialEssential,
                        input: i,
                        outputs: [b, a],
                    },
                    (true, true) if ca == cb && ci.is_trivial() => Bifurcation::Split {
                        case: SplitCase::BothEssential,
                        input: i,
                        outputs: [a, b],
                    },
                    _ => return Err(violation(format!("split of {ci} into {ca} and {cb}"))),
                }
            }
            (&[i], &[o]) => Bifurcation::Reclass {
                input: i,
                output: o,
            },
            (x, y) => {
                return Err(violation(format!(
                    "{} circles become {} circles",
                    x.len(),
                    y.len()
                )));
            }
        };

        let mut passthrough = Vec::with_capacity(from.circles.len());
        let mut seen = vec![false; from.circles.len()];
        for (h, &c) in from.owner.iter().enumerate() {
            if !seen[c] {
                seen[c] = true;
                if !ins.contains(&c) {
                    passthrough.push((c, to.owner[h]));
                }
            }
        }
        Ok(EdgeMap {
            bifurcation,
            passthrough,
            source_circles: from.circles.len(),
            target_circles: to.circles.len(),
        })
    }

    /// Appends the images of the basis element `labels`.
    pub fn images(&self, labels: u64, out: &mut Vec<u64>) {
        let bit = |i: usize| (labels >> i) & 1;
        let mut base = 0u64;
        for &(from, to) in &self.passthrough {
            base |= bit(from) << to;
        }
        match self.bifurcation {
            Bifurcation::Merge {
                case,
                inputs: [a, b],
                output,
            } => {
                let (x, y) = (bit(a), bit(b));
                let image = match (case, x, y) {
                    (MergeCase::BothTrivial, 1, 1) => Some(1),
                    (MergeCase::BothTrivial, 1, 0) | (MergeCase::BothTrivial, 0, 1) => Some(0),
                    (MergeCase::TrivialEssential, 1, y) => Some(y),
                    (MergeCase::BothEssential, 1, 0) | (MergeCase::BothEssential, 0, 1) => Some(0),
                    _ => None,
                };
                if let Some(z) = image {
                    out.push(base | (z << output));
                }
            }
            Bifurcation::Split {
                case,
                input,
                outputs: [a, b],
            } => {
                let x = bit(input);
                let plus_minus = base | (1 << a);
                let minus_plus = base | (1 << b);
                match (case, x) {
                    (SplitCase::BothTrivial, 1) | (SplitCase::BothEssential, 1) => {
                        out.push(plus_minus);
                        out.push(minus_plus);
                    }
                    (SplitCase::BothTrivial, _) => out.push(base),
                    (SplitCase::TrivialEssential, x) => out.push(base | (x << b)),
                    (SplitCase::BothEssential, _) => {}
                }
            }
            Bifurcation::Reclass { .. } => {}
        }
    }

    /// Matrix of the map in the label bases (rows: target labels, columns:
    /// source labels).
    pub fn matrix(&self) -> crate::linalg::SparseMatrix<i64> {
        let cols = 1usize << self.source_circles;
        let rows = 1usize << self.target_circles;
        let mut buf = Vec::new();
        let mut triplets = Vec::new();
        for labels in 0..cols as u64 {
            buf.clear();
            self.images(labels, &mut buf);
            triplets.extend(buf.iter().map(|&t| (t as usize, labels as usize, 1i64)));
        }
        crate::linalg::SparseMatrix::from_triplets(rows, cols, triplets)
    }
}

/// Sign of d_vu along the edge at `crossing`: (−1) to the number of
/// 1-coordinates of `v` after `crossing`.
pub fn edge_sign(v: CubeVertex, crossing: usize) -> i64 {
    let above = v.bits().checked_shr(crossing as u32 + 1).unwrap_or(0);
    if above.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}
