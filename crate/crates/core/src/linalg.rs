//! Exact rank computation for sparse integer matrices.
//!
//! Rationals use Bareiss fraction-free elimination over arbitrary-precision
//! integers (no fractions ever appear; divisions are exact). Prime fields use
//! ordinary modular elimination. Pivots are chosen to limit fill-in: the
//! boundary matrices this module exists for are very sparse.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::FieldSpec;

/// A sparse integer matrix given by coordinate triplets. Rows and columns are
/// 0-indexed; absent entries are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseIntMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseIntMatrix {
    pub fn new(nrows: usize, ncols: usize, entries: Vec<(usize, usize, i64)>) -> Self {
        debug_assert!(entries.iter().all(|&(r, c, _)| r < nrows && c < ncols));
        SparseIntMatrix {
            nrows,
            ncols,
            entries,
        }
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Rationals => rank_rational(self),
            FieldSpec::PrimeField(p) => rank_mod_p(self, p),
        }
    }
}

fn rows_of<T: Clone + Zero>(
    m: &SparseIntMatrix,
    lift: impl Fn(i64) -> T,
) -> Vec<HashMap<usize, T>> {
    let mut rows: Vec<HashMap<usize, T>> = vec![HashMap::new(); m.nrows];
    for &(r, c, v) in &m.entries {
        if v != 0 {
            rows[r].insert(c, lift(v));
        }
    }
    rows
}

/// Pivot choice: among the shortest remaining rows, the column with the
/// fewest occurrences (a cheap Markowitz rule).
fn choose_pivot<T>(rows: &[HashMap<usize, T>], active: &[bool]) -> Option<(usize, usize)> {
    let mut col_count: HashMap<usize, usize> = HashMap::new();
    for (i, row) in rows.iter().enumerate() {
        if active[i] {
            for &c in row.keys() {
                *col_count.entry(c).or_insert(0) += 1;
            }
        }
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, row) in rows.iter().enumerate() {
        if !active[i] || row.is_empty() {
            continue;
        }
        for &c in row.keys() {
            let cost = (row.len() - 1) * (col_count[&c] - 1);
            match best {
                Some((_, _, b)) if b <= cost => {}
                _ => best = Some((i, c, cost)),
            }
        }
    }
    best.map(|(i, c, _)| (i, c))
}

fn rank_rational(m: &SparseIntMatrix) -> usize {
    let mut rows = rows_of(m, BigInt::from);
    let mut active = vec![true; m.nrows];
    let mut prev_pivot = BigInt::one();
    let mut rank = 0;

    while let Some((pi, pc)) = choose_pivot(&rows, &active) {
        rank += 1;
        active[pi] = false;
        let pivot_row = std::mem::take(&mut rows[pi]);
        let pivot_val = pivot_row[&pc].clone();

        for (i, row) in rows.iter_mut().enumerate() {
            if !active[i] {
                continue;
            }
            // Bareiss step: row = (pivot * row - factor * pivot_row) / prev_pivot.
            // Every active row is rescaled, pivot-column entry or not; the
            // divisions are exact (entries stay minors of the input).
            let factor = row.remove(&pc).unwrap_or_else(BigInt::zero);
            let mut next: HashMap<usize, BigInt> = HashMap::with_capacity(row.len());
            for (&c, v) in row.iter() {
                let mut t = &pivot_val * v;
                if !factor.is_zero() {
                    if let Some(pv) = pivot_row.get(&c) {
                        t -= &factor * pv;
                    }
                }
                if !t.is_zero() {
                    next.insert(c, &t / &prev_pivot);
                }
            }
            if !factor.is_zero() {
                for (&c, pv) in pivot_row.iter() {
                    if c != pc && !row.contains_key(&c) {
                        let t = -(&factor * pv);
                        next.insert(c, &t / &prev_pivot);
                    }
                }
            }
            *row = next;
        }
        prev_pivot = pivot_val;
    }
    rank
}

fn mod_reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid; p is prime and a nonzero mod p
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "input not invertible mod p");
    t.rem_euclid(p as i128) as u64
}

fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> usize {
    let mut rows = rows_of(m, |v| mod_reduce(v, p));
    for row in &mut rows {
        row.retain(|_, v| *v != 0);
    }
    let mut active = vec![true; m.nrows];
    let mut rank = 0;

    while let Some((pi, pc)) = choose_pivot(&rows, &active) {
        rank += 1;
        active[pi] = false;
        let pivot_row = std::mem::take(&mut rows[pi]);
        let inv = mod_inv(pivot_row[&pc], p);

        for (i, row) in rows.iter_mut().enumerate() {
            if !active[i] {
                continue;
            }
            let Some(factor) = row.remove(&pc) else {
                continue;
            };
            let scale = (factor as u128 * inv as u128 % p as u128) as u64;
            for (&c, pv) in pivot_row.iter() {
                if c == pc {
                    continue;
                }
                let sub = (scale as u128 * *pv as u128 % p as u128) as u64;
                let entry = row.entry(c).or_insert(0);
                *entry = ((*entry as u128 + p as u128 - sub as u128) % p as u128) as u64;
                if *entry == 0 {
                    row.remove(&c);
                }
            }
        }
    }
    rank
}
