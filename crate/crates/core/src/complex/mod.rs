//! The graded chain complex of the cube of resolutions.

mod degree;
mod edge;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cube::{CubeVertex, ResolvedState, Resolver, DEFAULT_MAX_CROSSINGS};
use crate::diagram::{validate_diagram, TorusDiagram};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;

pub use degree::SkeinDegree;
pub use edge::{edge_sign, Bifurcation, EdgeMap, MergeCase, SplitCase};

/// Coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Z2,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Z => "Z",
            Ring::Z2 => "Z/2",
        })
    }
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ring> {
        match s.to_ascii_lowercase().as_str() {
            "z" => Ok(Ring::Z),
            "z2" | "z/2" => Ok(Ring::Z2),
            _ => Err(Error::Syntax {
                line: 0,
                msg: format!("unknown coefficient ring `{s}`"),
            }),
        }
    }
}

/// A basis element of C(D): a vertex and a labelling of its circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub vertex: CubeVertex,
    /// Bit k is set when circle k carries v₊.
    pub labels: u64,
    pub hom_degree: u32,
    pub quantum: i64,
    pub skein: SkeinDegree,
}

fn grading(state: &ResolvedState, labels: u64) -> (i64, SkeinDegree) {
    let n = state.circles.len() as i64;
    let plus = labels.count_ones() as i64;
    let mut skein = SkeinDegree::zero();
    for (k, c) in state.circles.iter().enumerate() {
        if c.class.is_essential() {
            skein.add_term(c.class, if labels >> k & 1 == 1 { 1 } else { -1 });
        }
    }
    (2 * plus - n + state.vertex.weight() as i64, skein)
}

/// The basis of the chain group at one vertex, in increasing label order.
pub fn chain_group(state: &ResolvedState) -> Vec<Generator> {
    (0..1u64 << state.circles.len())
        .map(|labels| {
            let (quantum, skein) = grading(state, labels);
            Generator {
                vertex: state.vertex,
                labels,
                hom_degree: state.vertex.weight(),
                quantum,
                skein,
            }
        })
        .collect()
}

/// The unsigned block d_vu from `v` to `v` with crossing `i` changed to 1,
/// in the label bases of both vertices.
pub fn edge_block(diag: &TorusDiagram, v: CubeVertex, i: usize) -> Result<SparseMatrix<i64>> {
    if i >= diag.crossing_count() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: diag.crossing_count(),
        });
    }
    if v.smoothing(i) != 0 {
        return Err(Error::InvariantViolation(format!(
            "vertex {v} already has a 1 at crossing {i}"
        )));
    }
    let resolver = Resolver::new(diag);
    let from = resolver.resolve(v)?;
    let to = resolver.resolve(v.with_one(i))?;
    Ok(EdgeMap::between(&from, &to, i)?.matrix())
}

/// Grading of a block of the complex.
///
/// `quantum` is `#v₊ − #v₋ + hom`, which every edge map preserves; it only
/// refines the decomposition and is summed away in reports.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockKey {
    pub hom: u32,
    pub quantum: i64,
    pub skein: SkeinDegree,
}

impl BlockKey {
    fn next(&self) -> BlockKey {
        BlockKey {
            hom: self.hom + 1,
            quantum: self.quantum,
            skein: self.skein.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Block {
    pub key: BlockKey,
    /// Basis in assembly order: (vertex, labels).
    pub basis: Vec<(CubeVertex, u64)>,
}

#[derive(Clone, Debug)]
pub struct AssembleOptions {
    pub max_crossings: usize,
    /// Upper bound on the total number of generators.
    pub max_generators: usize,
    /// Apply the edge signs; over ℤ/2 the result is the same either way.
    pub signs: bool,
    /// Check degree preservation and d∘d = 0 after assembly.
    pub verify: bool,
}

impl Default for AssembleOptions {
    fn default() -> Self {
        AssembleOptions {
            max_crossings: DEFAULT_MAX_CROSSINGS,
            max_generators: 1 << 27,
            signs: true,
            verify: true,
        }
    }
}

/// C(D) split into blocks by (hom, quantum, skein) with the differential
/// stored block by block.
#[derive(Clone, Debug)]
pub struct GradedChainComplex {
    ring: Ring,
    crossings: usize,
    blocks: Vec<Block>,
    /// Index of the block one homological degree up with the same grading.
    next: Vec<Option<usize>>,
    /// `boundary[b]` maps block `b` into `next[b]`.
    boundary: Vec<Option<SparseMatrix<i64>>>,
    index: HashMap<BlockKey, usize>,
}

impl GradedChainComplex {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn crossings(&self) -> usize {
        self.crossings
    }

    /// Blocks sorted by key.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_index(&self, key: &BlockKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn next_block(&self, b: usize) -> Option<usize> {
        self.next[b]
    }

    /// The differential out of block `b`, if its target block exists.
    pub fn boundary(&self, b: usize) -> Option<&SparseMatrix<i64>> {
        self.boundary[b].as_ref()
    }

    pub fn generator_count(&self) -> usize {
        self.blocks.iter().map(|b| b.basis.len()).sum()
    }

    /// Checks d∘d = 0 on every pair of consecutive blocks (mod 2 over ℤ/2).
    pub fn check_d_squared(&self) -> Result<()> {
        (0..self.blocks.len()).into_par_iter().try_for_each(|b| {
            let (Some(n), Some(first)) = (self.next[b], self.boundary[b].as_ref()) else {
                return Ok(());
            };
            let Some(second) = self.boundary[n].as_ref() else {
                return Ok(());
            };
            if composite_vanishes(first, second, self.ring) {
                Ok(())
            } else {
                Err(Error::InvariantViolation(format!(
                    "d∘d ≠ 0 from degree {} skein {}",
                    self.blocks[b].key.hom, self.blocks[b].key.skein
                )))
            }
        })
    }
}

fn composite_vanishes(first: &SparseMatrix<i64>, second: &SparseMatrix<i64>, ring: Ring) -> bool {
    let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); second.cols()];
    for &(r, c, v) in second.entries() {
        by_row[c].push((r, v));
    }
    let mut products: Vec<(usize, usize, i64)> = Vec::new();
    for &(mid, c, v) in first.entries() {
        products.extend(by_row[mid].iter().map(|&(r, w)| (r, c, v * w)));
    }
    products.sort_unstable_by_key(|t| (t.0, t.1));
    products
        .chunk_by(|x, y| x.0 == y.0 && x.1 == y.1)
        .all(|run| {
            let s: i64 = run.iter().map(|t| t.2).sum();
            match ring {
                Ring::Z => s == 0,
                Ring::Z2 => s % 2 == 0,
            }
        })
}

pub fn assemble_complex(diag: &TorusDiagram, ring: Ring) -> Result<GradedChainComplex> {
    assemble_complex_with(diag, ring, &AssembleOptions::default())
}

pub fn assemble_complex_with(
    diag: &TorusDiagram,
    ring: Ring,
    opts: &AssembleOptions,
) -> Result<GradedChainComplex> {
    let report = validate_diagram(diag);
    if !report.is_valid() {
        let msgs: Vec<String> = report.errors.iter().map(|f| f.message.clone()).collect();
        return Err(Error::InvalidDiagram(msgs.join("; ")));
    }
    let d = diag.crossing_count();
    if d > opts.max_crossings {
        return Err(Error::TooManyCrossings {
            crossings: d,
            cap: opts.max_crossings,
        });
    }

    let resolver = Resolver::new(diag);
    let states: Vec<ResolvedState> = (0..1u32 << d)
        .into_par_iter()
        .map(|b| resolver.resolve(CubeVertex::new(b)))
        .collect::<Result<_>>()?;

    let mut total = 0usize;
    for s in &states {
        let n = s.circles.len();
        let size = if n < 63 { 1usize << n } else { usize::MAX };
        total = total.saturating_add(size);
        if total > opts.max_generators {
            return Err(Error::ResourceCap(format!(
                "more than {} generators (cap set by max_generators)",
                opts.max_generators
            )));
        }
    }

    // Assign every generator to a block; locate[v][labels] = (block, position).
    let mut index: HashMap<BlockKey, usize> = HashMap::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut locate: Vec<Vec<(u32, u32)>> = Vec::with_capacity(states.len());
    for s in &states {
        let mut cache: HashMap<(i64, SkeinDegree), usize> = HashMap::new();
        let mut here = Vec::with_capacity(1 << s.circles.len());
        for labels in 0..1u64 << s.circles.len() {
            let (quantum, skein) = grading(s, labels);
            let b = *cache.entry((quantum, skein.clone())).or_insert_with(|| {
                let key = BlockKey {
                    hom: s.vertex.weight(),
                    quantum,
                    skein,
                };
                *index.entry(key.clone()).or_insert_with(|| {
                    blocks.push(Block {
                        key,
                        basis: Vec::new(),
                    });
                    blocks.len() - 1
                })
            });
            here.push((b as u32, blocks[b].basis.len() as u32));
            blocks[b].basis.push((s.vertex, labels));
        }
        locate.push(here);
    }

    // Sort blocks by key and renumber.
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by(|&x, &y| blocks[x].key.cmp(&blocks[y].key));
    let mut rank_of = vec![0u32; blocks.len()];
    for (new, &old) in order.iter().enumerate() {
        rank_of[old] = new as u32;
    }
    let mut slots: Vec<Option<Block>> = blocks.into_iter().map(Some).collect();
    let blocks: Vec<Block> = order
        .iter()
        .map(|&o| slots[o].take().expect("each block once"))
        .collect();
    for here in &mut locate {
        for entry in here.iter_mut() {
            entry.0 = rank_of[entry.0 as usize];
        }
    }
    let index: HashMap<BlockKey, usize> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| (b.key.clone(), i))
        .collect();
    let next: Vec<Option<usize>> = blocks
        .iter()
        .map(|b| index.get(&b.key.next()).copied())
        .collect();

    // Differential, one vertex at a time.
    let per_vertex: Vec<Vec<(u32, u32, u32, i64)>> = (0..states.len())
        .into_par_iter()
        .map(|vb| -> Result<Vec<(u32, u32, u32, i64)>> {
            let from = &states[vb];
            let mut out = Vec::new();
            let mut images = Vec::new();
            for i in 0..d {
                if from.vertex.smoothing(i) != 0 {
                    continue;
                }
                let u = from.vertex.with_one(i);
                let to = &states[u.bits() as usize];
                let map = EdgeMap::between(from, to, i)?;
                let sign = if opts.signs {
                    edge_sign(from.vertex, i)
                } else {
                    1
                };
                let sign = match ring {
                    Ring::Z => sign,
                    Ring::Z2 => sign.rem_euclid(2),
                };
                for labels in 0..1u64 << from.circles.len() {
                    images.clear();
                    map.images(labels, &mut images);
                    let (sb, si) = locate[vb][labels as usize];
                    for &t in &images {
                        let (tb, ti) = locate[u.bits() as usize][t as usize];
                        if opts.verify && next[sb as usize] != Some(tb as usize) {
                            return Err(Error::InvariantViolation(format!(
                                "edge map at vertex {} crossing {i} changes the grading",
                                from.vertex
                            )));
                        }
                        out.push((sb, ti, si, sign));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    let mut triplets: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); blocks.len()];
    for (sb, ti, si, v) in per_vertex.into_iter().flatten() {
        triplets[sb as usize].push((ti as usize, si as usize, v));
    }
    let boundary: Vec<Option<SparseMatrix<i64>>> = triplets
        .into_par_iter()
        .enumerate()
        .map(|(b, t)| {
            next[b].map(|n| {
                let m =
                    SparseMatrix::from_triplets(blocks[n].basis.len(), blocks[b].basis.len(), t);
                match ring {
                    Ring::Z => m,
                    Ring::Z2 => m.mod2(),
                }
            })
        })
        .collect();

    let complex = GradedChainComplex {
        ring,
        crossings: d,
        blocks,
        next,
        boundary,
        index,
    };
    if opts.verify {
        complex.check_d_squared()?;
    }
    Ok(complex)
}
