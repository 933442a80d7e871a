//! Exact rank of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

const PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(x: &BigInt) -> u64 {
    let m = x.mod_floor(&BigInt::from(PRIME));
    m.to_u64().expect("reduced value fits")
}

/// Rank over `Z/pZ` for a large prime `p`; a lower bound for the rank over
/// the rationals.
pub fn rank_mod_p(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(reduce).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], PRIME - 2);
        let pivot_row: Vec<u64> = m[rank].iter().map(|&x| mul_mod(x, inv)).collect();
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for (x, &p) in m[r].iter_mut().zip(&pivot_row).skip(c) {
                    *x = (*x + PRIME - mul_mod(f, p)) % PRIME;
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank_exact(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][c].clone();
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone();
            let (head, tail) = m.split_at_mut(r);
            let prow = &head[rank];
            let row = &mut tail[0];
            let mut g = BigInt::zero();
            for k in c..cols {
                row[k] = &row[k] * &p - &f * &prow[k];
                g = g.gcd(&row[k]);
            }
            if !g.is_zero() && g != BigInt::from(1) {
                for x in row.iter_mut().skip(c) {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Exact rank: full rank modulo a prime already proves full rank.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let r = rank_mod_p(rows);
    if r == rows.len() {
        r
    } else {
        rank_exact(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 2, 3], &[0, 1, 1], &[1, 3, 4]])), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&m(&[&[2, 0, 1], &[0, 3, 0], &[1, 0, 5]])), 3);
        assert_eq!(rank(&[]), 0);
        // entries divisible by the prime still count exactly
        let big = m(&[&[1, 1]]);
        assert_eq!(rank_exact(&big), 1);
    }
}
