//! Exact matrix rank over the rationals and over prime fields.
//!
//! Rational rank uses fraction-free (Bareiss) elimination on `i128` with checked
//! arithmetic and restarts on `BigInt` if an intermediate minor overflows.

use num_bigint::BigInt;
use num_traits::Zero;

/// A sparse integer matrix given row by row as `(column, value)` pairs.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        SparseMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    fn dense_i128(&self) -> Vec<Vec<i128>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![0i128; self.cols];
                for &(c, v) in r {
                    d[c] += v as i128;
                }
                d
            })
            .collect()
    }
}

/// Rank over the rationals.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    if m.rows.is_empty() || m.cols == 0 {
        return 0;
    }
    match bareiss_i128(m.dense_i128()) {
        Some(r) => r,
        None => bareiss_big(
            m.dense_i128()
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let (nr, nc) = (a.len(), a[0].len());
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col];
        for i in rank + 1..nr {
            let f = a[i][col];
            for j in col + 1..nc {
                let lhs = pivot.checked_mul(a[i][j])?;
                let rhs = f.checked_mul(a[rank][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let (nr, nc) = (a.len(), a[0].len());
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(p) = (rank..nr).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..nr {
            let f = a[i][col].clone();
            for j in col + 1..nc {
                let v = (&pivot * &a[i][j] - &f * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over `F_p`. `p` must be prime; `p = 2` uses packed bit rows.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    if m.rows.is_empty() || m.cols == 0 {
        return 0;
    }
    if p == 2 {
        return rank_f2(m);
    }
    let mut a: Vec<Vec<u64>> = m
        .rows
        .iter()
        .map(|r| {
            let mut d = vec![0u64; m.cols];
            for &(c, v) in r {
                d[c] = (d[c] + v.rem_euclid(p as i64) as u64) % p;
            }
            d
        })
        .collect();
    let (nr, nc) = (a.len(), m.cols);
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(pr) = (rank..nr).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for j in col..nc {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for i in rank + 1..nr {
            let f = a[i][col];
            if f == 0 {
                continue;
            }
            for j in col..nc {
                a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn rank_f2(m: &SparseMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut a: Vec<Vec<u64>> = m
        .rows
        .iter()
        .map(|r| {
            let mut d = vec![0u64; words];
            for &(c, v) in r {
                if v.rem_euclid(2) == 1 {
                    d[c / 64] ^= 1 << (c % 64);
                }
            }
            d
        })
        .collect();
    let nr = a.len();
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == nr {
            break;
        }
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(pr) = (rank..nr).find(|&r| a[r][w] & b != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[w] & b != 0 {
                for k in w..words {
                    row[k] ^= pivot[k];
                }
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix {
            cols: rows[0].len(),
            rows: rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
                .collect(),
        }
    }

    #[test]
    fn small_ranks() {
        let m = from_dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
        // det = 2: full rank over Q and F_3, rank 1 over F_2
        let m = from_dense(&[&[1, 1], &[1, -1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
        assert_eq!(rank_rational(&SparseMatrix::new(4)), 0);
    }

    #[test]
    fn big_fallback_agrees() {
        // Entries large enough that i128 minors overflow.
        let big = 1i64 << 62;
        let m = from_dense(&[&[big, 1, 0, 3], &[1, big, 5, 0], &[7, 1, big, 1], &[0, 2, 1, big]]);
        assert!(bareiss_i128(m.dense_i128()).is_none());
        assert_eq!(rank_rational(&m), 4);
        let sing = from_dense(&[&[big, 1], &[big, 1]]);
        assert_eq!(rank_rational(&sing), 1);
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
