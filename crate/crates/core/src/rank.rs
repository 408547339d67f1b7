//! Exact rank of sparse integer matrices, over the rationals (integer rows
//! with gcd stripping, i128 fast path with a big-integer fallback) and over
//! prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Sparse row: (column, value) pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, i64)>;

/// Rank over the rationals.
pub fn rank_q(rows: &[SparseRow]) -> usize {
    match rank_i128(rows) {
        Some(r) => r,
        None => rank_bigint(rows),
    }
}

/// Rank over GF(p). `p` must be an odd prime or 2, below 2^31.
pub fn rank_gf(rows: &[SparseRow], p: u64) -> usize {
    let mut work: Vec<Vec<(usize, u64)>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .filter_map(|&(c, v)| {
                    let m = v.rem_euclid(p as i64) as u64;
                    (m != 0).then_some((c, m))
                })
                .collect()
        })
        .filter(|r: &Vec<(usize, u64)>| !r.is_empty())
        .collect();
    let mut rank = 0;
    while let Some(best) = pick_pivot_row(&work) {
        let pivot = work.swap_remove(best);
        let (pcol, pval) = pivot[0];
        let inv = mod_inv(pval, p);
        let pivot: Vec<(usize, u64)> = pivot
            .iter()
            .map(|&(c, v)| (c, v * inv % p))
            .collect();
        rank += 1;
        let mut next = Vec::with_capacity(work.len());
        for row in work {
            let coeff = row
                .iter()
                .find(|&&(c, _)| c == pcol)
                .map(|&(_, v)| v);
            let reduced = match coeff {
                None => row,
                Some(cf) => {
                    let neg = p - cf;
                    merge_mod(&row, &pivot, neg, p)
                }
            };
            if !reduced.is_empty() {
                next.push(reduced);
            }
        }
        work = next;
    }
    rank
}

fn pick_pivot_row<T>(rows: &[Vec<T>]) -> Option<usize> {
    rows.iter()
        .enumerate()
        .min_by_key(|(_, r)| r.len())
        .map(|(i, _)| i)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// row + scale * pivot over GF(p), both sorted by column.
fn merge_mod(row: &[(usize, u64)], pivot: &[(usize, u64)], scale: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        match (row.get(i), pivot.get(j)) {
            (Some(&(c1, v1)), Some(&(c2, v2))) if c1 == c2 => {
                let v = (v1 + scale % p * v2) % p;
                if v != 0 {
                    out.push((c1, v));
                }
                i += 1;
                j += 1;
            }
            (Some(&(c1, v1)), Some(&(c2, _))) if c1 < c2 => {
                out.push((c1, v1));
                i += 1;
            }
            (Some(_), Some(&(c2, v2))) => {
                let v = scale * v2 % p;
                if v != 0 {
                    out.push((c2, v));
                }
                j += 1;
            }
            (Some(&(c1, v1)), None) => {
                out.push((c1, v1));
                i += 1;
            }
            (None, Some(&(c2, v2))) => {
                let v = scale * v2 % p;
                if v != 0 {
                    out.push((c2, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn rank_i128(rows: &[SparseRow]) -> Option<usize> {
    let mut work: Vec<Vec<(usize, i128)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect())
        .filter(|r: &Vec<(usize, i128)>| !r.is_empty())
        .collect();
    let mut rank = 0;
    while let Some(best) = pick_pivot_row(&work) {
        let pivot = work.swap_remove(best);
        let (pcol, pval) = pivot[0];
        rank += 1;
        let mut next = Vec::with_capacity(work.len());
        for row in work {
            let coeff = row.iter().find(|&&(c, _)| c == pcol).map(|&(_, v)| v);
            let reduced = match coeff {
                None => row,
                Some(cf) => strip_gcd_i128(merge_i128(&row, pval, &pivot, cf)?),
            };
            if !reduced.is_empty() {
                next.push(reduced);
            }
        }
        work = next;
    }
    Some(rank)
}

/// pval * row - cf * pivot with overflow detection.
fn merge_i128(
    row: &[(usize, i128)],
    pval: i128,
    pivot: &[(usize, i128)],
    cf: i128,
) -> Option<Vec<(usize, i128)>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (c, v) = match (row.get(i), pivot.get(j)) {
            (Some(&(c1, v1)), Some(&(c2, v2))) if c1 == c2 => {
                i += 1;
                j += 1;
                (
                    c1,
                    pval.checked_mul(v1)?.checked_sub(cf.checked_mul(v2)?)?,
                )
            }
            (Some(&(c1, v1)), Some(&(c2, _))) if c1 < c2 => {
                i += 1;
                (c1, pval.checked_mul(v1)?)
            }
            (Some(_), Some(&(c2, v2))) => {
                j += 1;
                (c2, cf.checked_mul(v2)?.checked_neg()?)
            }
            (Some(&(c1, v1)), None) => {
                i += 1;
                (c1, pval.checked_mul(v1)?)
            }
            (None, Some(&(c2, v2))) => {
                j += 1;
                (c2, cf.checked_mul(v2)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    Some(out)
}

fn strip_gcd_i128(mut row: Vec<(usize, i128)>) -> Vec<(usize, i128)> {
    let mut g: i128 = 0;
    for &(_, v) in &row {
        g = gcd_i128(g, v.abs());
        if g == 1 {
            return row;
        }
    }
    if g > 1 {
        for e in &mut row {
            e.1 /= g;
        }
    }
    row
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn rank_bigint(rows: &[SparseRow]) -> usize {
    let mut work: Vec<Vec<(usize, BigInt)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .filter(|r: &Vec<(usize, BigInt)>| !r.is_empty())
        .collect();
    let mut rank = 0;
    while let Some(best) = pick_pivot_row(&work) {
        let pivot = work.swap_remove(best);
        let (pcol, pval) = (pivot[0].0, pivot[0].1.clone());
        rank += 1;
        let mut next = Vec::with_capacity(work.len());
        for row in work {
            let coeff = row
                .iter()
                .find(|&&(c, _)| c == pcol)
                .map(|(_, v)| v.clone());
            let reduced = match coeff {
                None => row,
                Some(cf) => {
                    let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(row.len() + pivot.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < pivot.len() {
                        let (c, v): (usize, BigInt) = match (row.get(i), pivot.get(j)) {
                            (Some(&(c1, ref v1)), Some(&(c2, ref v2))) if c1 == c2 => {
                                i += 1;
                                j += 1;
                                (c1, &pval * v1 - &cf * v2)
                            }
                            (Some(&(c1, ref v1)), Some(&(c2, _))) if c1 < c2 => {
                                i += 1;
                                (c1, &pval * v1)
                            }
                            (Some(_), Some(&(c2, ref v2))) => {
                                j += 1;
                                (c2, -(&cf * v2))
                            }
                            (Some(&(c1, ref v1)), None) => {
                                i += 1;
                                (c1, &pval * v1)
                            }
                            (None, Some(&(c2, ref v2))) => {
                                j += 1;
                                (c2, -(&cf * v2))
                            }
                            (None, None) => unreachable!(),
                        };
                        if !v.is_zero() {
                            out.push((c, v));
                        }
                    }
                    strip_gcd_bigint(out)
                }
            };
            if !reduced.is_empty() {
                next.push(reduced);
            }
        }
        work = next;
    }
    rank
}

fn strip_gcd_bigint(mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(&v.abs());
    }
    if g > BigInt::from(1) {
        for e in &mut row {
            e.1 = &e.1 / &g;
        }
    }
    row
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(_, &v)| v != 0)
                    .map(|(c, &v)| (c, v))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = dense(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank_q(&m), 1);
        assert_eq!(rank_gf(&m, 65537), 1);
        let m = dense(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]);
        assert_eq!(rank_q(&m), 3);
        // over GF(2) the last row is the sum of the first two
        assert_eq!(rank_gf(&m, 2), 2);
        assert_eq!(rank_q(&[]), 0);
    }

    #[test]
    fn random_matrices_agree_with_gf() {
        use crate::rng::Rng;
        let mut rng = Rng::new(3);
        for _ in 0..50 {
            let r = 1 + rng.below(6);
            let c = 1 + rng.below(6);
            let rows: Vec<SparseRow> = (0..r)
                .map(|_| {
                    (0..c)
                        .filter_map(|j| {
                            let v = rng.below(5) as i64 - 2;
                            (v != 0).then_some((j, v))
                        })
                        .collect()
                })
                .collect();
            let rq = rank_q(&rows);
            // a large prime almost surely preserves the rank of tiny matrices;
            // rank over GF(p) never exceeds the rational rank
            let rp = rank_gf(&rows, 1_000_003);
            assert!(rp <= rq);
            assert_eq!(rq, rp);
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(65537) && is_prime(1_000_003));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(65539 * 3));
    }
}
