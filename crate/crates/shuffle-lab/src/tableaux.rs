//! Partitions, bi-partitions, Young diagrams, dominance order, standard
//! (bi-)tableau enumeration, diagonal sums, special tableaux, horizontal
//! strips and desarrangement tableaux.

use crate::error::{Error, Result};
use num::BigUint;
use std::collections::HashMap;
use std::fmt;

/// Default cap on `n` for standard-tableau enumeration (`d_lambda` growth).
pub const DEFAULT_SYT_CAP: usize = 14;

/// A partition: non-increasing positive parts, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Normalizes trailing zeros away; rejects a sequence that is not
    /// non-increasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn single_column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `lambda_i` with 1-based `i`; zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Iterates boxes as 1-based `(row, col)` pairs, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len as usize).map(move |j| (i + 1, j)))
    }

    /// True when `other` fits inside `self` aligned at the top-left corner.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &m)| self.part(i + 1) >= m)
    }

    /// Transpose (conjugate) partition: swap rows and columns.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `Diag(lambda) = sum over boxes (i,j) of (j - i)`.
    pub fn diag_sum(&self) -> i64 {
        self.boxes().map(|(i, j)| j as i64 - i as i64).sum()
    }

    /// Dominance order: all prefix sums of `self` dominate those of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!(
                "dominance of {self} (size {}) vs {other} (size {})",
                self.size(),
                other.size()
            )));
        }
        let rows = self.len().max(other.len());
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 1..=rows {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All shapes one box larger, as `(1-based row, shape)` pairs.
    pub fn add_box_children(&self) -> Vec<(usize, Partition)> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            if i == 1 || self.part(i - 1) > self.part(i) {
                let mut parts = self.parts.clone();
                if i > parts.len() {
                    parts.push(1);
                } else {
                    parts[i - 1] += 1;
                }
                out.push((i, Partition { parts }));
            }
        }
        out
    }

    /// Rows from which a box can be removed leaving a partition (1-based).
    pub fn removable_corners(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Complete, duplicate-free list of partitions of `n` in descending
/// lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let hi = remaining.min(max);
        for p in (1..=hi).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// A pair of partitions indexing `B_n` conjugacy classes and modules.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BiPartition {
    first: Partition,
    second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        BiPartition { first, second }
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// `(lambda1, lambda2)' = (lambda2', lambda1')`.
    pub fn transpose(&self) -> BiPartition {
        BiPartition {
            first: self.second.transpose(),
            second: self.first.transpose(),
        }
    }

    pub fn contains(&self, other: &BiPartition) -> bool {
        self.first.contains(&other.first) && self.second.contains(&other.second)
    }

    /// Dominance on bi-partitions: `|lambda1| > |mu1|`, or equal first sizes
    /// with componentwise dominance.
    pub fn dominates(&self, other: &BiPartition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!(
                "bi-dominance of {self} vs {other}"
            )));
        }
        if self.first.size() > other.first.size() {
            return Ok(true);
        }
        if self.first.size() < other.first.size() {
            return Ok(false);
        }
        Ok(self.first.dominates(&other.first)? && self.second.dominates(&other.second)?)
    }

    /// All bi-shapes one box larger, as `(component 1|2, 1-based row, shape)`.
    pub fn add_box_children(&self) -> Vec<(usize, usize, BiPartition)> {
        let mut out = Vec::new();
        for (i, shape) in self.first.add_box_children() {
            out.push((1, i, BiPartition::new(shape, self.second.clone())));
        }
        for (i, shape) in self.second.add_box_children() {
            out.push((2, i, BiPartition::new(self.first.clone(), shape)));
        }
        out
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Complete list of bi-partitions of `n`, ordered by decreasing `|lambda1|`.
pub fn bipartitions_of(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for m in (0..=n).rev() {
        for first in partitions_of(m) {
            for second in partitions_of(n - m) {
                out.push(BiPartition::new(first.clone(), second));
            }
        }
    }
    out
}

/// True iff the skew shape `lambda / mu` has at most one box per column.
/// Errors when `mu` is not contained in `lambda`.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained(lambda.to_string(), mu.to_string()));
    }
    // At most one box per column <=> lambda_{i+1} <= mu_i for every i.
    Ok((1..=lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i)))
}

/// A filling of a Young diagram with the values `1..n`, not necessarily
/// standard (eigenvalue formulas are defined for arbitrary fillings).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n];
        for v in rows.iter().flatten() {
            let v = *v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidTableau(format!(
                    "values of {rows:?} are not exactly 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Value in 1-based box `(i, j)`.
    pub fn value(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    /// 1-based `(row, col)` of value `v`.
    pub fn position_of(&self, v: u32) -> (usize, usize) {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&x| x == v) {
                return (i + 1, j + 1);
            }
        }
        panic!("value {v} not present in tableau");
    }

    /// Entries strictly increase along rows and down columns.
    pub fn is_standard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.iter().zip(above).any(|(below, up)| up >= below) {
                    return false;
                }
            }
        }
        true
    }

    pub fn into_standard(self) -> Result<StandardTableau> {
        if self.is_standard() {
            Ok(StandardTableau(self))
        } else {
            Err(Error::InvalidTableau(format!(
                "{:?} is not standard",
                self.rows
            )))
        }
    }

    /// Swap rows and columns, preserving values.
    pub fn transpose(&self) -> Tableau {
        let shape = self.shape.transpose();
        let rows = (1..=shape.len())
            .map(|j| {
                (1..=shape.part(j) as usize)
                    .map(|i| self.value(i, j))
                    .collect()
            })
            .collect();
        Tableau {
            shape,
            rows,
        }
    }

    /// Concatenation of the rows, used as the canonical tableau ordering key.
    pub fn row_reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

/// A tableau whose entries increase along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau(Tableau);

impl StandardTableau {
    pub fn transpose(&self) -> StandardTableau {
        StandardTableau(self.0.transpose())
    }
}

impl std::ops::Deref for StandardTableau {
    type Target = Tableau;
    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Complete enumeration of `SYT(lambda)` ordered lexicographically by
/// row-reading word.
pub fn enumerate_syt(shape: &Partition, cap: usize) -> Result<Vec<StandardTableau>> {
    if shape.size() > cap {
        return Err(Error::CapExceeded {
            what: "SYT enumeration",
            requested: shape.size(),
            cap,
        });
    }
    let n = shape.size() as u32;
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fn rec(shape: &Partition, v: u32, n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if v > n {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for i in 0..shape.len() {
            let filled = rows[i].len();
            let fits_row = filled < shape.part(i + 1) as usize;
            let fits_col = i == 0 || rows[i - 1].len() > filled;
            if fits_row && fits_col {
                rows[i].push(v);
                rec(shape, v + 1, n, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(shape, 1, n, &mut rows, &mut raw);
    raw.sort_by_key(|t| t.row_reading_word());
    out.extend(raw.into_iter().map(StandardTableau));
    Ok(out)
}

/// `d_lambda = |SYT(lambda)|` by enumeration (capped).
pub fn dimension(shape: &Partition, cap: usize) -> Result<u64> {
    Ok(enumerate_syt(shape, cap)?.len() as u64)
}

/// Lattice-path counter for `d_lambda`: recursive descent over removable
/// corners, memoized. Independent of the enumeration path, and exact for
/// large shapes where enumeration is infeasible.
#[derive(Default)]
pub struct DimensionCounter {
    memo: HashMap<Vec<u32>, BigUint>,
}

impl DimensionCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, shape: &Partition) -> BigUint {
        if shape.is_empty() {
            return BigUint::from(1u32);
        }
        if let Some(hit) = self.memo.get(shape.parts()) {
            return hit.clone();
        }
        let mut total = BigUint::from(0u32);
        for i in shape.removable_corners() {
            let mut parts = shape.parts().to_vec();
            parts[i - 1] -= 1;
            let child = Partition::new(parts).expect("removing a corner keeps a partition");
            total += self.count(&child);
        }
        self.memo.insert(shape.parts().to_vec(), total.clone());
        total
    }
}

/// Binomial coefficient as an exact big integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut out = BigUint::from(1u32);
    for i in 0..k.min(n - k) {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// A standard Young bi-tableau: the values `1..n` split across two standard
/// components.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiTableau {
    first: Tableau,
    second: Tableau,
}

impl BiTableau {
    pub fn first(&self) -> &Tableau {
        &self.first
    }

    pub fn second(&self) -> &Tableau {
        &self.second
    }

    pub fn shape(&self) -> BiPartition {
        BiPartition::new(self.first.shape.clone(), self.second.shape.clone())
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for BiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Complete enumeration of standard bi-tableaux of shape `lambda_bar`,
/// ordered by the growth sequence of (component, row) choices.
pub fn enumerate_bi_syt(shape: &BiPartition, cap: usize) -> Result<Vec<BiTableau>> {
    if shape.size() > cap {
        return Err(Error::CapExceeded {
            what: "bi-SYT enumeration",
            requested: shape.size(),
            cap,
        });
    }
    // Fillings where each component's entries increase along rows and columns
    // are exactly placements of 1..n in corner order across the two diagrams.
    let n = shape.size() as u32;
    let mut rows1: Vec<Vec<u32>> = vec![Vec::new(); shape.first.len()];
    let mut rows2: Vec<Vec<u32>> = vec![Vec::new(); shape.second.len()];
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        shape: &BiPartition,
        v: u32,
        n: u32,
        rows1: &mut Vec<Vec<u32>>,
        rows2: &mut Vec<Vec<u32>>,
        out: &mut Vec<BiTableau>,
    ) {
        if v > n {
            out.push(BiTableau {
                first: Tableau {
                    shape: shape.first.clone(),
                    rows: rows1.clone(),
                },
                second: Tableau {
                    shape: shape.second.clone(),
                    rows: rows2.clone(),
                },
            });
            return;
        }
        for component in 1..=2usize {
            let part = if component == 1 {
                &shape.first
            } else {
                &shape.second
            };
            for i in 0..part.len() {
                let (fits_row, fits_col) = {
                    let rows = if component == 1 { &*rows1 } else { &*rows2 };
                    let filled = rows[i].len();
                    (
                        filled < part.part(i + 1) as usize,
                        i == 0 || rows[i - 1].len() > filled,
                    )
                };
                if fits_row && fits_col {
                    let rows = if component == 1 { &mut *rows1 } else { &mut *rows2 };
                    rows[i].push(v);
                    rec(shape, v + 1, n, rows1, rows2, out);
                    let rows = if component == 1 { &mut *rows1 } else { &mut *rows2 };
                    rows[i].pop();
                }
            }
        }
    }
    rec(shape, 1, n, &mut rows1, &mut rows2, &mut out);
    out.sort_by_key(|t| {
        (
            t.first.row_reading_word(),
            t.second.row_reading_word(),
        )
    });
    Ok(out)
}

/// `d_{lambda_bar}` by enumeration; equals `C(n, |lambda1|) d_1 d_2`.
pub fn bi_dimension(shape: &BiPartition, cap: usize) -> Result<u64> {
    Ok(enumerate_bi_syt(shape, cap)?.len() as u64)
}

/// True iff `T` is a desarrangement tableau: no box `(1,2)` and even size, or
/// `T(1,2)` odd.
pub fn is_desarrangement(t: &StandardTableau) -> bool {
    if t.shape().part(1) < 2 {
        t.size() % 2 == 0
    } else {
        t.value(1, 2) % 2 == 1
    }
}

/// `d^lambda`, the number of desarrangement tableaux of the shape.
pub fn desarrangement_count(shape: &Partition, cap: usize) -> Result<u64> {
    Ok(enumerate_syt(shape, cap)?
        .iter()
        .filter(|t| is_desarrangement(t))
        .count() as u64)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialKind {
    /// Insert `1..n` from left to right, row by row.
    RowWise,
    /// Insert `1..n` from top to bottom, column by column.
    ColumnWise,
    /// Fill the diagonals from left to right, each diagonal top to bottom.
    /// The result is a valid filling but in general not standard.
    DiagonalWise,
}

/// The special tableau of a shape. `RowWise` and `ColumnWise` fillings are
/// standard; `DiagonalWise` need not be.
pub fn special_tableau(shape: &Partition, kind: SpecialKind) -> Tableau {
    let mut rows: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .map(|&len| vec![0; len as usize])
        .collect();
    let mut next = 1u32;
    match kind {
        SpecialKind::RowWise => {
            for row in rows.iter_mut() {
                for cell in row.iter_mut() {
                    *cell = next;
                    next += 1;
                }
            }
        }
        SpecialKind::ColumnWise => {
            for j in 1..=shape.part(1) as usize {
                for (i, row) in rows.iter_mut().enumerate() {
                    if shape.part(i + 1) as usize >= j {
                        row[j - 1] = next;
                        next += 1;
                    }
                }
            }
        }
        SpecialKind::DiagonalWise => {
            let lo = 1 - shape.len() as i64;
            let hi = shape.part(1) as i64 - 1;
            for d in lo..=hi {
                for (i, row) in rows.iter_mut().enumerate() {
                    let j = i as i64 + 1 + d;
                    if j >= 1 && j <= shape.part(i + 1) as i64 {
                        row[j as usize - 1] = next;
                        next += 1;
                    }
                }
            }
        }
    }
    Tableau {
        shape: shape.clone(),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bipart(a: &[u32], b: &[u32]) -> BiPartition {
        BiPartition::new(part(a), part(b))
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(9).len(), 30);
    }

    #[test]
    fn bipartitions_of_two() {
        let got = bipartitions_of(2);
        let want = vec![
            bipart(&[2], &[]),
            bipart(&[1, 1], &[]),
            bipart(&[1], &[1]),
            bipart(&[], &[2]),
            bipart(&[], &[1, 1]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn dominance_examples() {
        assert!(part(&[3, 2, 2, 1]).dominates(&part(&[2, 2, 2, 2])).unwrap());
        let a = part(&[5, 1, 1, 1]);
        let b = part(&[4, 4]);
        assert!(!a.dominates(&b).unwrap());
        assert!(!b.dominates(&a).unwrap());
        assert!(a.dominates(&a).unwrap());
        assert!(part(&[2]).dominates(&part(&[1])).is_err());
    }

    #[test]
    fn bi_dominance_examples() {
        assert!(bipart(&[3], &[]).dominates(&bipart(&[2, 1], &[])).unwrap());
        assert!(bipart(&[1], &[1]).dominates(&bipart(&[], &[2])).unwrap());
        let a = bipart(&[2, 1], &[2, 2]);
        let b = bipart(&[3], &[2, 1, 1]);
        assert!(!a.dominates(&b).unwrap());
        assert!(!b.dominates(&a).unwrap());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(part(&[3, 2]).transpose(), part(&[2, 2, 1]));
        assert_eq!(
            bipart(&[3, 1], &[2, 2, 1]).transpose(),
            bipart(&[3, 2], &[2, 1, 1])
        );
        let n = 6;
        assert_eq!(
            Partition::single_column(n).transpose(),
            Partition::single_row(n)
        );
    }

    #[test]
    fn diag_sum_examples() {
        let n = 7i64;
        assert_eq!(Partition::single_row(7).diag_sum(), n * (n - 1) / 2);
        assert_eq!(part(&[3, 2]).diag_sum(), 2);
        assert_eq!(Partition::single_column(7).diag_sum(), -n * (n - 1) / 2);
    }

    #[test]
    fn diag_antisymmetric_under_transpose() {
        for n in 0..=12 {
            for p in partitions_of(n) {
                assert_eq!(p.transpose().diag_sum(), -p.diag_sum());
                assert_eq!(p.transpose().transpose(), p);
            }
        }
    }

    #[test]
    fn dominance_is_partial_order_and_transpose_dual() {
        for n in 0..=8 {
            let all = partitions_of(n);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    let ba = b.dominates(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    // Duality with transposition.
                    assert_eq!(ab, b.transpose().dominates(&a.transpose()).unwrap());
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn syt_enumeration_examples() {
        let syt = enumerate_syt(&part(&[3, 2]), DEFAULT_SYT_CAP).unwrap();
        assert_eq!(syt.len(), 5);
        let words: Vec<Vec<u32>> = syt.iter().map(|t| t.row_reading_word()).collect();
        let want = vec![
            vec![1, 2, 3, 4, 5],
            vec![1, 2, 4, 3, 5],
            vec![1, 2, 5, 3, 4],
            vec![1, 3, 4, 2, 5],
            vec![1, 3, 5, 2, 4],
        ];
        assert_eq!(words, want);
        assert_eq!(dimension(&Partition::single_row(6), 14).unwrap(), 1);
        let total: u64 = partitions_of(4)
            .iter()
            .map(|p| {
                let d = dimension(p, 14).unwrap();
                d * d
            })
            .sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn dimension_identities() {
        let mut counter = DimensionCounter::new();
        for n in 0..=9 {
            let mut sum_sq = BigUint::from(0u32);
            for p in partitions_of(n) {
                let by_enum = dimension(&p, 14).unwrap();
                let by_paths = counter.count(&p);
                assert_eq!(BigUint::from(by_enum), by_paths, "shape {p}");
                assert_eq!(by_enum, dimension(&p.transpose(), 14).unwrap());
                sum_sq += BigUint::from(by_enum * by_enum);
            }
            let fact: BigUint = (1..=n as u32).map(BigUint::from).product();
            assert_eq!(sum_sq, fact, "n = {n}");
        }
    }

    #[test]
    fn bi_dimension_examples() {
        assert_eq!(bi_dimension(&bipart(&[2, 1], &[2]), 14).unwrap(), 20);
        assert_eq!(bi_dimension(&bipart(&[3, 1], &[2, 1]), 14).unwrap(), 210);
        assert_eq!(bi_dimension(&bipart(&[4], &[]), 14).unwrap(), 1);
    }

    #[test]
    fn bi_dimension_matches_product_formula() {
        let mut counter = DimensionCounter::new();
        for n in 0..=7 {
            for shape in bipartitions_of(n) {
                let by_enum = BigUint::from(bi_dimension(&shape, 14).unwrap());
                let formula = binomial(n, shape.first().size())
                    * counter.count(shape.first())
                    * counter.count(shape.second());
                assert_eq!(by_enum, formula, "shape {shape}");
            }
        }
    }

    #[test]
    fn horizontal_strip_examples() {
        assert!(is_horizontal_strip(&part(&[4, 3]), &part(&[3, 2])).unwrap());
        assert!(!is_horizontal_strip(&part(&[4, 3]), &part(&[2, 2])).unwrap());
        let p = part(&[3, 1]);
        assert!(is_horizontal_strip(&p, &p).unwrap());
        assert!(is_horizontal_strip(&part(&[2]), &part(&[2, 1])).is_err());
    }

    #[test]
    fn desarrangement_examples() {
        assert_eq!(desarrangement_count(&part(&[3, 2]), 14).unwrap(), 2);
        assert_eq!(desarrangement_count(&part(&[2]), 14).unwrap(), 0);
        assert_eq!(desarrangement_count(&part(&[1, 1]), 14).unwrap(), 1);
        assert_eq!(desarrangement_count(&Partition::empty(), 14).unwrap(), 1);
    }

    #[test]
    fn special_tableau_examples() {
        let row = special_tableau(&part(&[3, 2]), SpecialKind::RowWise);
        assert_eq!(row.rows(), &[vec![1, 2, 3], vec![4, 5]]);
        assert!(row.is_standard());

        let col = special_tableau(&part(&[3, 2]), SpecialKind::ColumnWise);
        assert_eq!(col.rows(), &[vec![1, 3, 5], vec![2, 4]]);
        assert!(col.is_standard());

        let diag = special_tableau(&part(&[4, 2]), SpecialKind::DiagonalWise);
        assert_eq!(diag.rows(), &[vec![2, 4, 5, 6], vec![1, 3]]);
        assert!(!diag.is_standard());

        let diag44 = special_tableau(&part(&[4, 4, 4, 4]), SpecialKind::DiagonalWise);
        assert_eq!(
            diag44.rows(),
            &[
                vec![7, 11, 14, 16],
                vec![4, 8, 12, 15],
                vec![2, 5, 9, 13],
                vec![1, 3, 6, 10]
            ]
        );
    }

    #[test]
    fn add_box_children_examples() {
        let children: Vec<Partition> = part(&[1, 1, 1])
            .add_box_children()
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        assert_eq!(children, vec![part(&[2, 1, 1]), part(&[1, 1, 1, 1])]);

        let from_empty = Partition::empty().add_box_children();
        assert_eq!(from_empty, vec![(1, part(&[1]))]);

        let bi: Vec<BiPartition> = bipart(&[1], &[1])
            .add_box_children()
            .into_iter()
            .map(|(_, _, p)| p)
            .collect();
        assert_eq!(
            bi,
            vec![
                bipart(&[2], &[1]),
                bipart(&[1, 1], &[1]),
                bipart(&[1], &[2]),
                bipart(&[1], &[1, 1]),
            ]
        );
    }

    #[test]
    fn tableau_transpose_standard() {
        for t in enumerate_syt(&part(&[3, 2]), 14).unwrap() {
            let tt = t.transpose();
            assert!(tt.is_standard());
            assert_eq!(tt.shape(), &part(&[3, 2]).transpose());
            assert_eq!(tt.transpose().rows(), t.rows());
        }
    }
}
