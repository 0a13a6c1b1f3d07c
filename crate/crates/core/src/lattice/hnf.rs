//! Exact integer linear algebra: row Hermite normal form and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type BigMatrix = Vec<Vec<BigInt>>;

fn to_big(m: &[Vec<i64>]) -> BigMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Row-style Hermite normal form, applied in place to the first `pivot_cols`
/// columns (the remaining columns ride along under the same unimodular row
/// operations). Returns the number of pivots. Pivots are positive, entries
/// above a pivot are reduced into `[0, pivot)`, and the rows below the last
/// pivot are zero in the pivot columns.
pub fn row_hnf_in_place(m: &mut BigMatrix, pivot_cols: usize) -> usize {
    let nrows = m.len();
    let mut prow = 0;
    for col in 0..pivot_cols {
        if prow == nrows {
            break;
        }
        loop {
            // smallest nonzero |entry| at or below prow
            let best = (prow..nrows)
                .filter(|&i| !m[i][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()).then(a.cmp(&b)));
            let Some(best) = best else { break };
            m.swap(prow, best);
            let mut done = true;
            for i in prow + 1..nrows {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[prow][col]);
                let pivot_row = m[prow].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                if !m[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[prow][col].is_zero() {
            continue;
        }
        if m[prow][col].is_negative() {
            for x in m[prow].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..prow {
            let q = m[i][col].div_floor(&m[prow][col]);
            if q.is_zero() {
                continue;
            }
            let pivot_row = m[prow].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                *x -= &q * p;
            }
        }
        prow += 1;
    }
    prow
}

/// Hermite normal form of the row lattice, zero rows dropped.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m = to_big(rows);
    let rank = row_hnf_in_place(&mut m, ncols);
    m.truncate(rank);
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| x.to_i64().expect("HNF entry overflow"))
                .collect()
        })
        .collect()
}

/// Rank over the rationals.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut big = to_big(m);
    row_hnf_in_place(&mut big, ncols)
}

/// Basis of the full integer kernel `{v ∈ Z^r : M v = 0}` of a `d×r` matrix,
/// returned in Hermite normal form.
pub fn integer_kernel(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = m.len();
    let r = m.first().map_or(0, |row| row.len());
    if r == 0 {
        return Vec::new();
    }
    // Rows of [Mᵀ | I_r]; HNF on the Mᵀ block.
    let mut aug: BigMatrix = (0..r)
        .map(|j| {
            let mut row: Vec<BigInt> = (0..d).map(|i| BigInt::from(m[i][j])).collect();
            row.extend((0..r).map(|k| {
                if k == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = row_hnf_in_place(&mut aug, d);
    let kernel: Vec<Vec<i64>> = aug[pivots..]
        .iter()
        .map(|row| {
            row[d..]
                .iter()
                .map(|x| x.to_i64().expect("kernel entry overflow"))
                .collect()
        })
        .collect();
    if kernel.is_empty() {
        return kernel;
    }
    hermite_normal_form(&kernel)
}

/// Whether `v` lies in the row lattice of an HNF basis.
pub fn hnf_contains(hnf: &[Vec<i64>], v: &[i64]) -> bool {
    let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    for row in hnf {
        let Some(col) = row.iter().position(|&x| x != 0) else {
            continue;
        };
        let pivot = row[col] as i128;
        if rest[col] % pivot != 0 {
            return false;
        }
        let q = rest[col] / pivot;
        for (x, &b) in rest.iter_mut().zip(row) {
            *x -= q * b as i128;
        }
    }
    rest.iter().all(|&x| x == 0)
}
