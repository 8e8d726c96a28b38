//! Exact rank computation for sparse integer matrices, over the rationals
//! (fraction-free Bareiss elimination) or a prime field (modular elimination).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// The coefficient field for homology: the rationals, or Z/p for a prime p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Rationals,
    Prime(u32),
}

pub const MAX_PRIME: u32 = 1 << 31;

impl Field {
    /// Validated constructor for a prime field.
    pub fn prime(p: u32) -> Result<Field> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime { modulus: p });
        }
        Ok(Field::Prime(p))
    }

    /// Parses `q` or `fp:P`.
    pub fn parse(s: &str) -> Result<Field> {
        let parse_err = |msg: String| Error::Parse { line: 1, msg };
        match s {
            "q" | "Q" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .ok_or_else(|| parse_err(format!("unknown field {s:?}, expected `q` or `fp:P`")))?
                    .parse::<u32>()
                    .map_err(|_| parse_err(format!("invalid prime in {s:?}")))?;
                Field::prime(p)
            }
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            Field::Rationals => Ok(()),
            Field::Prime(p) => {
                if p > MAX_PRIME || !is_prime(p) {
                    Err(Error::NotPrime { modulus: p })
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    let p = p as u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A sparse integer matrix given by (row, col, value) triples.
#[derive(Clone, Debug)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize) -> SparseIntMatrix {
        SparseIntMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.cols, "entry out of bounds");
        if value != 0 {
            self.entries.push((row, col, value));
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }
}

/// Rank of the matrix over the given field.  Exact in all cases: no floating
/// point anywhere.
pub fn exact_rank(m: &SparseIntMatrix, field: Field) -> Result<usize> {
    field.validate()?;
    if m.rows == 0 || m.cols == 0 {
        return Ok(0);
    }
    match field {
        Field::Rationals => Ok(rank_bareiss(m)),
        Field::Prime(p) => Ok(rank_mod_p(m, p)),
    }
}

/// Fraction-free Gaussian elimination (Bareiss).  Works in i128 and falls
/// back to arbitrary precision if any intermediate product would overflow.
fn rank_bareiss(m: &SparseIntMatrix) -> usize {
    let mut dense = vec![vec![0i128; m.cols]; m.rows];
    for &(r, c, v) in &m.entries {
        dense[r][c] += v as i128;
    }
    match bareiss_i128(dense) {
        Some(rank) => rank,
        None => {
            let mut big = vec![vec![BigInt::zero(); m.cols]; m.rows];
            for &(r, c, v) in &m.entries {
                big[r][c] += BigInt::from(v);
            }
            bareiss_bigint(big)
        }
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let pivot = a[rank][col];
        for r in rank + 1..rows {
            let head = a[r][col];
            for c in col + 1..cols {
                let t1 = pivot.checked_mul(a[r][c])?;
                let t2 = head.checked_mul(a[rank][c])?;
                let num = t1.checked_sub(t2)?;
                debug_assert_eq!(num % prev, 0);
                a[r][c] = num / prev;
            }
            a[r][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_bigint(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        let pivot = a[rank][col].clone();
        for r in rank + 1..rows {
            let head = a[r][col].clone();
            for c in col + 1..cols {
                let num = &pivot * &a[r][c] - &head * &a[rank][c];
                debug_assert!((&num % &prev).is_zero());
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Gaussian elimination over Z/p.  With p < 2^31 every product fits in u64.
fn rank_mod_p(m: &SparseIntMatrix, p: u32) -> usize {
    let p = p as u64;
    let mut dense = vec![vec![0u64; m.cols]; m.rows];
    for &(r, c, v) in &m.entries {
        let vm = v.rem_euclid(p as i64) as u64;
        dense[r][c] = (dense[r][c] + vm) % p;
    }
    let rows = dense.len();
    let cols = dense[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| dense[r][col] != 0) else {
            continue;
        };
        dense.swap(rank, pr);
        let inv = mod_inverse(dense[rank][col], p);
        for c in col..cols {
            dense[rank][c] = dense[rank][c] * inv % p;
        }
        for r in rank + 1..rows {
            if dense[r][col] != 0 {
                let factor = dense[r][col];
                for c in col..cols {
                    let sub = factor * dense[rank][c] % p;
                    dense[r][c] = (dense[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
