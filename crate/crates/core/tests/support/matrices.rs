//! Brute-force matrix oracles for small integer matrices.

#![allow(dead_code)]

use rand::Rng;

pub fn random_matrix<R: Rng>(rng: &mut R) -> Vec<Vec<i64>> {
    let rows = rng.random_range(0..=8);
    let cols = rng.random_range(0..=8);
    let density = rng.random_range(0.1..0.9);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.random_bool(density) {
                        rng.random_range(-4..=4)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        _ => (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k×k minors (0 when they all vanish).
pub fn minor_gcd(m: &[Vec<i64>], k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut g = 0;
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<i128>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                .collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

/// Rank over ℚ by Bareiss fraction-free elimination.
pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                a[r][cc] = (a[r][cc] * a[rank][c] - a[r][c] * a[rank][cc]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

pub fn rank_gf2(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<u8>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(2) as u8).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] == 1) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] == 1 {
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}
