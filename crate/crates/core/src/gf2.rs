//! Dense linear algebra over GF(2) on bit-packed rows.
//!
//! Elimination is incremental: rows are reduced one at a time against the
//! pivots seen so far, and every pivot remembers which earlier pivots went
//! into it. That history is enough to express any reduced row as a
//! combination of original rows, which is what inconsistency certificates
//! and left-nullspace vectors need.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + t)
            })
        })
    }

    /// Parity of the bitwise AND with `other`.
    pub fn dot(&self, other: &BitVec) -> bool {
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVec({s})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<BitVec>,
    width: usize,
}

impl Gf2Matrix {
    pub fn new(width: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != width) {
            return Err(Error::Input(format!(
                "row of width {} in a matrix of width {width}",
                r.len()
            )));
        }
        Ok(Gf2Matrix { rows, width })
    }

    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| BitVec::from_bools(&r.iter().map(|&b| b != 0).collect::<Vec<_>>()))
            .collect();
        Self::new(width, rows)
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitVec::from_indices(n, [i])).collect();
        Gf2Matrix { rows, width: n }
    }

    pub fn zeros(rows: usize, width: usize) -> Self {
        Gf2Matrix {
            rows: vec![BitVec::zeros(width); rows],
            width,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        BitVec::from_bools(&self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>())
    }
}

/// Original row indices whose sum is zero while their right-hand sides sum
/// to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inconsistency {
    pub row_combination: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Solved(BitVec),
    Inconsistent(Inconsistency),
}

struct Pivot {
    column: usize,
    row: BitVec,
    rhs: bool,
    origin: usize,
    // earlier pivots (by position) xor-ed into this one
    history: BitVec,
}

struct Echelon {
    pivots: Vec<Pivot>,
    by_column: Vec<Option<usize>>,
}

enum Reduced {
    Pivot,
    Zero { rhs: bool, origin: usize, history: BitVec },
}

impl Echelon {
    fn new(width: usize) -> Self {
        Echelon {
            pivots: Vec::new(),
            by_column: vec![None; width],
        }
    }

    fn insert(&mut self, mut row: BitVec, mut rhs: bool, origin: usize, max_pivots: usize) -> Reduced {
        let mut history = BitVec::zeros(max_pivots);
        while let Some(c) = row.first_one() {
            match self.by_column[c] {
                Some(p) => {
                    let pivot = &self.pivots[p];
                    row.xor_assign(&pivot.row);
                    rhs ^= pivot.rhs;
                    history.flip(p);
                }
                None => {
                    let p = self.pivots.len();
                    self.by_column[c] = Some(p);
                    self.pivots.push(Pivot {
                        column: c,
                        row,
                        rhs,
                        origin,
                        history,
                    });
                    return Reduced::Pivot;
                }
            }
        }
        Reduced::Zero { rhs, origin, history }
    }

    // Expands a pivot history into the set of original rows it sums.
    fn expand(&self, origin: usize, history: &BitVec, rows: usize) -> Vec<usize> {
        let mut acc = BitVec::zeros(rows);
        acc.flip(origin);
        let mut pending = history.clone();
        // Later pivots only reference earlier ones, so sweep downwards.
        for p in (0..self.pivots.len()).rev() {
            if p < pending.len() && pending.get(p) {
                acc.flip(self.pivots[p].origin);
                for q in self.pivots[p].history.ones() {
                    pending.flip(q);
                }
            }
        }
        acc.ones().collect()
    }

    fn back_substitute(&self, width: usize) -> BitVec {
        let mut x = BitVec::zeros(width);
        let mut order: Vec<&Pivot> = self.pivots.iter().collect();
        order.sort_by_key(|p| std::cmp::Reverse(p.column));
        for p in order {
            let mut value = p.rhs;
            for j in p.row.ones() {
                if j != p.column && x.get(j) {
                    value = !value;
                }
            }
            x.set(p.column, value);
        }
        x
    }
}

/// Solves `a x = b`. Free variables are set to zero; when the system has no
/// solution, the first dependency found with an odd right-hand side is
/// returned in terms of original row indices.
pub fn solve(a: &Gf2Matrix, b: &BitVec) -> Result<Solution> {
    if b.len() != a.row_count() {
        return Err(Error::Input(format!(
            "right-hand side has {} entries for {} rows",
            b.len(),
            a.row_count()
        )));
    }
    let max_pivots = a.width.min(a.row_count());
    let mut ech = Echelon::new(a.width);
    for (i, row) in a.rows.iter().enumerate() {
        if let Reduced::Zero { rhs: true, origin, history } = ech.insert(row.clone(), b.get(i), i, max_pivots) {
            let row_combination = ech.expand(origin, &history, a.row_count());
            return Ok(Solution::Inconsistent(Inconsistency { row_combination }));
        }
    }
    Ok(Solution::Solved(ech.back_substitute(a.width)))
}

pub fn rank(a: &Gf2Matrix) -> usize {
    let max_pivots = a.width.min(a.row_count());
    let mut ech = Echelon::new(a.width);
    for (i, row) in a.rows.iter().enumerate() {
        ech.insert(row.clone(), false, i, max_pivots);
    }
    ech.pivots.len()
}

/// A basis of the left null space: each entry is a set of original row
/// indices summing to zero. Entry k is the dependency discovered when row
/// `k'` reduced to zero, so the basis is in ascending order of that row.
pub fn left_nullspace_basis(a: &Gf2Matrix) -> Vec<Vec<usize>> {
    let max_pivots = a.width.min(a.row_count());
    let mut ech = Echelon::new(a.width);
    let mut basis = Vec::new();
    for (i, row) in a.rows.iter().enumerate() {
        if let Reduced::Zero { origin, history, .. } = ech.insert(row.clone(), false, i, max_pivots) {
            basis.push(ech.expand(origin, &history, a.row_count()));
        }
    }
    basis
}

/// Largest left-nullspace dimension for which every dependency is listed.
pub const EXHAUSTIVE_NULLITY_LIMIT: usize = 16;
/// Largest row count for which exhaustive listing is attempted.
pub const EXHAUSTIVE_ROW_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowDependencies {
    /// Every nonempty set of rows summing to zero, sorted by size then
    /// lexicographically.
    All(Vec<Vec<usize>>),
    /// Too many to list; a basis of the left null space instead.
    Basis(Vec<Vec<usize>>),
}

impl RowDependencies {
    pub fn sets(&self) -> &[Vec<usize>] {
        match self {
            RowDependencies::All(v) | RowDependencies::Basis(v) => v,
        }
    }
}

pub fn nullspace_combinations(a: &Gf2Matrix) -> RowDependencies {
    let basis = left_nullspace_basis(a);
    if a.row_count() > EXHAUSTIVE_ROW_LIMIT || basis.len() > EXHAUSTIVE_NULLITY_LIMIT {
        return RowDependencies::Basis(basis);
    }
    let n = a.row_count();
    let vectors: Vec<BitVec> = basis
        .iter()
        .map(|s| BitVec::from_indices(n, s.iter().copied()))
        .collect();
    let mut all = Vec::with_capacity((1usize << basis.len()).saturating_sub(1));
    for mask in 1u32..(1u32 << basis.len()) {
        let mut acc = BitVec::zeros(n);
        for (k, v) in vectors.iter().enumerate() {
            if mask >> k & 1 == 1 {
                acc.xor_assign(v);
            }
        }
        all.push(acc.ones().collect::<Vec<_>>());
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    RowDependencies::All(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sum_rows(a: &Gf2Matrix, rows: &[usize]) -> BitVec {
        let mut acc = BitVec::zeros(a.width());
        for &r in rows {
            acc.xor_assign(&a.rows()[r]);
        }
        acc
    }

    #[test]
    fn identity_solve() {
        let a = Gf2Matrix::identity(2);
        let b = BitVec::from_bools(&[true, false]);
        assert_eq!(solve(&a, &b).unwrap(), Solution::Solved(b.clone()));
    }

    #[test]
    fn equal_rows_unequal_targets() {
        let a = Gf2Matrix::from_rows(&[&[1, 1], &[1, 1]]).unwrap();
        let b = BitVec::from_bools(&[false, true]);
        match solve(&a, &b).unwrap() {
            Solution::Inconsistent(inc) => assert_eq!(inc.row_combination, vec![0, 1]),
            s => panic!("expected inconsistency, got {s:?}"),
        }
    }

    #[test]
    fn three_cycle_rows() {
        let a = Gf2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        let b = BitVec::from_bools(&[true, true, true]);
        match solve(&a, &b).unwrap() {
            Solution::Inconsistent(inc) => {
                assert_eq!(inc.row_combination, vec![0, 1, 2]);
                assert!(sum_rows(&a, &inc.row_combination).is_zero());
            }
            s => panic!("expected inconsistency, got {s:?}"),
        }
    }

    #[test]
    fn dimension_mismatch() {
        let a = Gf2Matrix::identity(2);
        assert!(matches!(solve(&a, &BitVec::zeros(3)), Err(Error::Input(_))));
    }

    #[test]
    fn free_variables_are_zero() {
        // x0 + x2 = 1 ; x1 + x2 = 0  -> x2 free -> (1, 0, 0)
        let a = Gf2Matrix::from_rows(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        let b = BitVec::from_bools(&[true, false]);
        assert_eq!(
            solve(&a, &b).unwrap(),
            Solution::Solved(BitVec::from_bools(&[true, false, false]))
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&Gf2Matrix::zeros(3, 4)), 0);
        assert_eq!(rank(&Gf2Matrix::identity(5)), 5);
        // K_{2,3}: edges (1,3)(1,4)(1,5)(2,3)(2,4)(2,5); circuits via 3/4, 3/5, 4/5
        let k23 = Gf2Matrix::from_rows(&[
            &[1, 1, 0, 1, 1, 0],
            &[1, 0, 1, 1, 0, 1],
            &[0, 1, 1, 0, 1, 1],
        ])
        .unwrap();
        assert_eq!(rank(&k23), 2);
        assert_eq!(nullspace_combinations(&k23), RowDependencies::All(vec![vec![0, 1, 2]]));
        assert_eq!(nullspace_combinations(&Gf2Matrix::identity(3)), RowDependencies::All(vec![]));
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let width = 150;
        let r0 = BitVec::from_indices(width, [3, 70, 149]);
        let r1 = BitVec::from_indices(width, [70, 100]);
        let mut r2 = r0.clone();
        r2.xor_assign(&r1);
        let a = Gf2Matrix::new(width, vec![r0, r1, r2]).unwrap();
        assert_eq!(rank(&a), 2);
        let b = BitVec::from_bools(&[true, false, false]);
        match solve(&a, &b).unwrap() {
            Solution::Inconsistent(inc) => assert_eq!(inc.row_combination, vec![0, 1, 2]),
            s => panic!("{s:?}"),
        }
    }
}
