//! Sparse integer matrices and their invariant factors.
//!
//! Elimination first runs on checked `i64` arithmetic and restarts on
//! `BigInt` if any intermediate entry overflows, so results are always exact.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse matrix of arbitrary-precision integers, stored by column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<BTreeMap<usize, BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            columns: vec![BTreeMap::new(); cols],
        }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        let mut out = Self::zeros(n, m);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), m, "ragged matrix");
            for (c, v) in row.iter().enumerate() {
                out.set(r, c, v.clone().into());
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.columns[c].get(&r).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            self.columns[c].remove(&r);
        } else {
            self.columns[c].insert(r, v);
        }
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.nonzeros() {
            out[r][c] = v.clone();
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for (c, rcol) in rhs.columns.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, b) in rcol {
                for (&r, a) in &self.columns[k] {
                    *acc.entry(r).or_default() += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.columns[c] = acc;
        }
        out
    }
}

/// Entry type for the elimination. Every arithmetic step may refuse
/// (overflow), which aborts the pass.
trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn magnitude(&self) -> BigOrSmall;
    /// Truncating quotient `self / d`.
    fn quot(&self, d: &Self) -> Self;
    /// `self - q * p`.
    fn sub_mul(&self, q: &Self, p: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

/// Comparable magnitude key that works for both scalar types.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum BigOrSmall {
    Small(u64),
    Big(BigInt),
}

impl Scalar for i64 {
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn magnitude(&self) -> BigOrSmall {
        BigOrSmall::Small(self.unsigned_abs())
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn sub_mul(&self, q: &Self, p: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*p)?).filter(|v| *v != i64::MIN)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> BigOrSmall {
        BigOrSmall::Big(self.abs())
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn sub_mul(&self, q: &Self, p: &Self) -> Option<Self> {
        Some(self - q * p)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

/// Row-major sparse storage with a column occupancy index.
struct Work<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
}

impl<T: Scalar> Work<T> {
    fn entry(&self, r: usize, c: usize) -> &T {
        &self.rows[r][&c]
    }

    fn mag(&self, r: usize, c: usize) -> BigOrSmall {
        self.entry(r, c).magnitude()
    }

    /// row[target] -= q * row[src]
    fn row_sub(&mut self, target: usize, src: usize, q: &T) -> Result<(), Overflow> {
        let src_row: Vec<(usize, T)> = self.rows[src].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src_row {
            let cur = self.rows[target].get(&c).cloned().unwrap_or_else(T::nil);
            let next = cur.sub_mul(q, &v).ok_or(Overflow)?;
            if next.is_nil() {
                self.rows[target].remove(&c);
                self.cols[c].remove(&target);
            } else {
                self.rows[target].insert(c, next);
                self.cols[c].insert(target);
            }
        }
        Ok(())
    }

    /// col[target] -= q * col[src]
    fn col_sub(&mut self, target: usize, src: usize, q: &T) -> Result<(), Overflow> {
        let src_rows: Vec<usize> = self.cols[src].iter().copied().collect();
        for r in src_rows {
            let v = self.rows[r][&src].clone();
            let cur = self.rows[r].get(&target).cloned().unwrap_or_else(T::nil);
            let next = cur.sub_mul(q, &v).ok_or(Overflow)?;
            if next.is_nil() {
                self.rows[r].remove(&target);
                self.cols[target].remove(&r);
            } else {
                self.rows[r].insert(target, next);
                self.cols[target].insert(r);
            }
        }
        Ok(())
    }

    /// Clears the row and column of the pivot at `(p, c)`, moving the pivot to
    /// a strictly smaller entry whenever a remainder survives. Returns the
    /// final diagonal entry, with its row and column removed.
    fn eliminate(&mut self, mut p: usize, mut c: usize) -> Result<T, Overflow> {
        loop {
            let others: Vec<usize> = self.cols[c].iter().copied().filter(|&r| r != p).collect();
            for r in others {
                let q = self.entry(r, c).quot(self.entry(p, c));
                if !q.is_nil() {
                    self.row_sub(r, p, &q)?;
                }
            }
            let smaller = self.cols[c]
                .iter()
                .copied()
                .filter(|&r| r != p)
                .min_by_key(|&r| (self.mag(r, c), self.rows[r].len(), r));
            if let Some(r) = smaller {
                p = r;
                continue;
            }
            let others: Vec<usize> = self.rows[p].keys().copied().filter(|&k| k != c).collect();
            for k in others {
                let q = self.entry(p, k).quot(self.entry(p, c));
                if !q.is_nil() {
                    self.col_sub(k, c, &q)?;
                }
            }
            let smaller = self.rows[p]
                .keys()
                .copied()
                .filter(|&k| k != c)
                .min_by_key(|&k| (self.mag(p, k), self.cols[k].len(), k));
            if let Some(k) = smaller {
                c = k;
                continue;
            }
            let d = self.rows[p].remove(&c).expect("pivot present");
            self.cols[c].remove(&p);
            return Ok(d);
        }
    }
}

fn diagonalize<T: Scalar>(m: &IntegerMatrix, convert: impl Fn(&BigInt) -> Option<T>) -> Result<Vec<BigInt>, Overflow> {
    let mut work = Work::<T> {
        rows: vec![BTreeMap::new(); m.rows],
        cols: vec![BTreeSet::new(); m.cols],
    };
    for (r, c, v) in m.nonzeros() {
        work.rows[r].insert(c, convert(v).ok_or(Overflow)?);
        work.cols[c].insert(r);
    }
    let mut diag = Vec::new();
    for j in 0..m.cols {
        while !work.cols[j].is_empty() {
            let p = work.cols[j]
                .iter()
                .copied()
                .min_by_key(|&r| (work.mag(r, j), work.rows[r].len(), r))
                .expect("nonempty column");
            diag.push(work.eliminate(p, j)?.to_big());
        }
    }
    Ok(diag)
}

/// Normalizes a diagonal into an invariant-factor chain `d1 | d2 | ...` of
/// positive integers.
pub fn normalize_chain(diagonal: impl IntoIterator<Item = BigInt>) -> Vec<BigInt> {
    let mut units = 0usize;
    let mut rest: Vec<BigInt> = Vec::new();
    for d in diagonal {
        let d = d.abs();
        if d.is_zero() {
            continue;
        }
        if d.is_one() {
            units += 1;
        } else {
            rest.push(d);
        }
    }
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            let l = rest[i].lcm(&rest[j]);
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = vec![BigInt::one(); units];
    out.extend(rest);
    out.sort();
    out
}

/// Nonzero invariant factors of `m`, ascending, each dividing the next.
/// The length is the rank of `m`.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let diag = match diagonalize::<i64>(m, |v| i64::try_from(v).ok()) {
        Ok(d) => d,
        Err(Overflow) => match diagonalize::<BigInt>(m, |v| Some(v.clone())) {
            Ok(d) => d,
            Err(Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
        },
    };
    normalize_chain(diag)
}
