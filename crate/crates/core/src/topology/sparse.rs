//! Unit-pivot elimination for sparse integer matrices.
//!
//! Rows are eliminated shortest first, pivoting on a `±1` entry whose column
//! is least populated. Once no unit entry remains, the leftover block is
//! handed to the dense reduction. Entries start as `i64`; any overflow
//! restarts the computation with big integers.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::dense_snf;

/// Rank and invariant factors greater than one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SparseSnf {
    pub(crate) rank: usize,
    pub(crate) torsion: Vec<BigInt>,
}

pub(crate) trait Coeff: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - k * other`, `None` on overflow.
    fn sub_mul(&self, k: &Self, other: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, k: &Self, other: &Self) -> Option<Self> {
        self.checked_sub(k.checked_mul(*other)?)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn sub_mul(&self, k: &Self, other: &Self) -> Option<Self> {
        Some(self - k * other)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

/// Rows given as sorted `(column, value)` lists without zeros.
pub(crate) fn sparse_snf(cols: usize, rows: Vec<Vec<(u32, i64)>>) -> SparseSnf {
    match eliminate::<i64>(cols, rows.clone()) {
        Ok(r) => r,
        Err(Overflow) => match eliminate::<BigInt>(
            cols,
            rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect()).collect(),
        ) {
            Ok(r) => r,
            Err(Overflow) => unreachable!("big integers do not overflow"),
        },
    }
}

fn eliminate<T: Coeff>(cols: usize, mut rows: Vec<Vec<(u32, T)>>) -> Result<SparseSnf, Overflow> {
    let n = rows.len();
    let mut alive = vec![true; n];
    // rows that may contain each column (stale entries are filtered lazily)
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); cols];
    let mut heap = BinaryHeap::new();
    for (i, r) in rows.iter().enumerate() {
        for &(c, _) in r {
            col_rows[c as usize].push(i as u32);
        }
        if r.is_empty() {
            alive[i] = false;
        } else {
            heap.push(Reverse((r.len(), i as u32)));
        }
    }
    let mut rank = 0;
    let mut scratch: Vec<(u32, T)> = Vec::new();
    while let Some(Reverse((len, r))) = heap.pop() {
        let r = r as usize;
        if !alive[r] || rows[r].len() != len {
            continue;
        }
        let Some(&(c, ref u)) = rows[r]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(c, _)| col_rows[*c as usize].len())
        else {
            continue;
        };
        let u = u.clone();
        alive[r] = false;
        rank += 1;
        let pivot_row = core::mem::take(&mut rows[r]);
        let others = core::mem::take(&mut col_rows[c as usize]);
        for k in others {
            let k = k as usize;
            if !alive[k] {
                continue;
            }
            let Ok(pos) = rows[k].binary_search_by_key(&c, |e| e.0) else { continue };
            // row_k -= (a * u) * pivot_row, since u is its own inverse
            let f = rows[k][pos].1.mul(&u).ok_or(Overflow)?;
            scratch.clear();
            merge_sub(&rows[k], &pivot_row, &f, &mut scratch)?;
            for &(cc, _) in &scratch {
                if rows[k].binary_search_by_key(&cc, |e| e.0).is_err() {
                    col_rows[cc as usize].push(k as u32);
                }
            }
            core::mem::swap(&mut rows[k], &mut scratch);
            if rows[k].is_empty() {
                alive[k] = false;
            } else {
                heap.push(Reverse((rows[k].len(), k as u32)));
            }
        }
        for &(cc, _) in &pivot_row {
            // compact column lists that have become mostly stale
            let list = &mut col_rows[cc as usize];
            if list.len() > 64 {
                list.retain(|&k| alive[k as usize]);
            }
        }
    }
    // leftover block without unit entries
    let rest: Vec<usize> = (0..n).filter(|&i| alive[i] && !rows[i].is_empty()).collect();
    let mut torsion = Vec::new();
    if !rest.is_empty() {
        let mut used: Vec<u32> = rest.iter().flat_map(|&i| rows[i].iter().map(|e| e.0)).collect();
        used.sort_unstable();
        used.dedup();
        let dense: Vec<Vec<BigInt>> = rest
            .iter()
            .map(|&i| {
                let mut d = vec![BigInt::zero(); used.len()];
                for (c, v) in &rows[i] {
                    d[used.binary_search(c).expect("column present")] = v.to_big();
                }
                d
            })
            .collect();
        let snf = dense_snf(dense, used.len(), false);
        rank += snf.rank();
        torsion = snf.torsion();
    }
    Ok(SparseSnf { rank, torsion })
}

fn merge_sub<T: Coeff>(a: &[(u32, T)], b: &[(u32, T)], f: &T, out: &mut Vec<(u32, T)>) -> Result<(), Overflow> {
    let zero = T::from_i64(0);
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, zero.sub_mul(f, &b[j].1).ok_or(Overflow)?));
            j += 1;
        } else {
            let v = a[i].1.sub_mul(f, &b[j].1).ok_or(Overflow)?;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(())
}
