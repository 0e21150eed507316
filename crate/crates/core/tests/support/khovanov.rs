//! Brute-force classical Khovanov homology from a planar diagram code.
//!
//! Standalone on purpose: it shares no code with the library. Crossings are
//! `[i, j, k, l]` (incoming understrand first, counterclockwise). The
//! 0-smoothing joins (i,j),(k,l), the 1-smoothing (i,l),(j,k). Signs follow
//! the usual (−1)^(number of 1s before the changed crossing).

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub const UNKNOT_R1: &[[usize; 4]] = &[[1, 1, 2, 2]];
pub const HOPF: &[[usize; 4]] = &[[4, 1, 3, 2], [2, 3, 1, 4]];
pub const TREFOIL: &[[usize; 4]] = &[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
pub const FIGURE_EIGHT: &[[usize; 4]] = &[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

#[derive(Clone, Copy, Debug)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// Ranks by (homological degree, #v₊ − #v₋ + homological degree); no
/// normalization shifts.
pub fn khovanov(pd: &[[usize; 4]], field: Field) -> BTreeMap<(u32, i64), usize> {
    let n = pd.len();
    let states: Vec<Vec<usize>> = (0..1u32 << n).map(|s| circles(pd, s)).collect();
    let count = |s: usize| states[s].iter().copied().max().map_or(0, |m| m + 1);

    // Generators grouped by (r, q); each is (state, labels).
    let mut groups: BTreeMap<(u32, i64), Vec<(usize, u64)>> = BTreeMap::new();
    for s in 0..states.len() {
        let r = (s as u32).count_ones();
        let k = count(s);
        for labels in 0..1u64 << k {
            let q = 2 * labels.count_ones() as i64 - k as i64 + r as i64;
            groups.entry((r, q)).or_default().push((s, labels));
        }
    }
    let position: HashMap<(usize, u64), usize> = groups
        .values()
        .flat_map(|g| g.iter().enumerate().map(|(i, x)| (*x, i)))
        .collect();

    let mut out_rank: BTreeMap<(u32, i64), usize> = BTreeMap::new();
    for (&(r, q), gens) in &groups {
        let Some(target) = groups.get(&(r + 1, q)) else {
            continue;
        };
        let mut m = vec![vec![0i64; gens.len()]; target.len()];
        for (col, &(s, labels)) in gens.iter().enumerate() {
            for c in 0..n {
                if s >> c & 1 == 1 {
                    continue;
                }
                let t = s | 1 << c;
                let sign = if (s & ((1 << c) - 1)).count_ones() % 2 == 0 {
                    1
                } else {
                    -1
                };
                for image in edge_images(pd, &states[s], &states[t], c, labels) {
                    m[position[&(t, image)]][col] += sign;
                }
            }
        }
        out_rank.insert((r, q), rank(m, field));
    }

    let mut result = BTreeMap::new();
    for (&(r, q), gens) in &groups {
        let rank_out = out_rank.get(&(r, q)).copied().unwrap_or(0);
        let rank_in = if r == 0 {
            0
        } else {
            out_rank.get(&(r - 1, q)).copied().unwrap_or(0)
        };
        let b = gens.len() - rank_out - rank_in;
        if b > 0 {
            result.insert((r, q), b);
        }
    }
    result
}

pub fn total(ranks: &BTreeMap<(u32, i64), usize>) -> usize {
    ranks.values().sum()
}

/// Circle id for every arc label at state `s`, ids in order of first
/// appearance by label.
fn circles(pd: &[[usize; 4]], s: u32) -> Vec<usize> {
    let labels = pd.iter().flatten().copied().max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..=labels).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (c, &[i, j, k, l]) in pd.iter().enumerate() {
        let pairs = if s >> c & 1 == 0 {
            [(i, j), (k, l)]
        } else {
            [(i, l), (j, k)]
        };
        for (a, b) in pairs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let mut out = vec![usize::MAX; labels + 1];
    for (x, slot) in out.iter_mut().enumerate().skip(1) {
        let root = find(&mut parent, x);
        let next = ids.len();
        *slot = *ids.entry(root).or_insert(next);
    }
    out[0] = out.get(1).copied().unwrap_or(0);
    out
}

fn edge_images(pd: &[[usize; 4]], from: &[usize], to: &[usize], c: usize, labels: u64) -> Vec<u64> {
    let [i, j, k, _] = pd[c];
    let (a, b) = (from[i], from[k]);
    let (x, y) = (to[i], to[j]);
    // Circles away from the crossing carry their labels across.
    let mut base = 0u64;
    for lab in 1..from.len() {
        let f = from[lab];
        if f != a && f != b {
            base |= (labels >> f & 1) << to[lab];
        }
    }
    let bit = |l: u64, p: usize| l >> p & 1;
    if a != b {
        // merge: 1 = v₊
        match (bit(labels, a), bit(labels, b)) {
            (1, 1) => vec![base | 1 << x],
            (1, 0) | (0, 1) => vec![base],
            _ => vec![],
        }
    } else {
        // split into x and y
        match bit(labels, a) {
            1 => vec![base | 1 << x, base | 1 << y],
            _ => vec![base],
        }
    }
}

fn rank(m: Vec<Vec<i64>>, field: Field) -> usize {
    match field {
        Field::Prime(p) => rank_mod_p(m, p),
        Field::Rational => rank_rational(m),
    }
}

fn rank_mod_p(m: Vec<Vec<i64>>, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| v.rem_euclid(p as i64) as u64)
                .collect()
        })
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * inv % p;
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot).skip(c) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Fraction-free elimination; each row is kept primitive to bound growth.
fn rank_rational(m: Vec<Vec<i64>>) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let pivot_row = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot_row[c] - &f * y;
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && g.abs() != BigInt::from(1) {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
        }
        rank += 1;
    }
    rank
}
