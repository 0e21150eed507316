use super::{Scalar, SparseMatrix};

/// Rank over ℤ/2.
///
/// Rows are packed into `u64` words along the shorter dimension and reduced
/// against a table of pivots keyed by leading bit. Columns are ordered by
/// increasing weight first, which keeps fill-in low on boundary matrices.
pub fn rank_mod2<T: Scalar>(m: &SparseMatrix<T>) -> usize {
    let odd: Vec<(usize, usize)> = m
        .entries()
        .iter()
        .filter(|e| e.2.is_odd())
        .map(|(r, c, _)| (*r, *c))
        .collect();
    if odd.is_empty() {
        return 0;
    }
    let (nrows, nbits, pairs): (usize, usize, Vec<(usize, usize)>) = if m.cols() <= m.rows() {
        (m.rows(), m.cols(), odd)
    } else {
        (
            m.cols(),
            m.rows(),
            odd.into_iter().map(|(r, c)| (c, r)).collect(),
        )
    };

    let mut weight = vec![0usize; nbits];
    for &(_, b) in &pairs {
        weight[b] += 1;
    }
    let mut order: Vec<usize> = (0..nbits).collect();
    order.sort_by_key(|&b| (weight[b], b));
    let mut position = vec![0usize; nbits];
    for (p, &b) in order.iter().enumerate() {
        position[b] = p;
    }

    let words = nbits.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = vec![vec![0u64; words]; nrows];
    for (r, b) in pairs {
        let p = position[b];
        rows[r][p / 64] ^= 1 << (p % 64);
    }

    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; nbits];
    let mut rank = 0;
    for mut row in rows {
        let mut from = 0;
        while let Some(lead) = leading_bit(&row, from) {
            match &pivots[lead] {
                Some(p) => {
                    for w in lead / 64..words {
                        row[w] ^= p[w];
                    }
                    from = lead / 64;
                }
                None => {
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn leading_bit(row: &[u64], from_word: usize) -> Option<usize> {
    row[from_word..]
        .iter()
        .position(|&w| w != 0)
        .map(|i| (from_word + i) * 64 + row[from_word + i].trailing_zeros() as usize)
}
