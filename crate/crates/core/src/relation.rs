//! Binary relations on a finite carrier `{0, .., m-1}`, stored as bitset rows.
//!
//! Row `a` holds every `b` with `(a, b)` in the relation, so the first
//! coordinate selects the row.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinRelation {
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

/// The standard structural flags of a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFlags {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub quasi_order: bool,
    pub equivalence: bool,
}

impl BinRelation {
    pub fn empty(size: usize) -> Self {
        let words = size.div_ceil(WORD).max(1);
        BinRelation {
            size,
            words,
            bits: vec![0; words * size],
        }
    }

    pub fn full(size: usize) -> Self {
        Self::from_fn(size, |_, _| true)
    }

    /// The diagonal `{(a, a)}`.
    pub fn diagonal(size: usize) -> Self {
        Self::from_fn(size, |a, b| a == b)
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(size);
        for a in 0..size {
            for b in 0..size {
                if f(a, b) {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    /// Builds a relation from explicit pairs, rejecting out-of-range entries.
    pub fn from_pairs(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut r = Self::empty(size);
        for (a, b) in pairs {
            if a >= size || b >= size {
                return input(format!("pair ({a}, {b}) out of range for size {size}"));
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    /// Decodes the low `size * size` bits of `mask`, row-major.
    /// Used for exhaustive enumeration on tiny carriers.
    pub fn from_mask(size: usize, mask: u64) -> Self {
        debug_assert!(size * size <= 64);
        Self::from_fn(size, |a, b| mask >> (a * size + b) & 1 == 1)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / WORD] >> (b % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / WORD] |= 1 << (b % WORD);
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / WORD] &= !(1 << (b % WORD));
    }

    #[inline]
    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    /// Every `b` with `(a, b)` in the relation, ascending.
    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(a)
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..WORD).filter(move |i| bits >> i & 1 == 1).map(move |i| w * WORD + i))
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |a| self.successors(a).map(move |b| (a, b)))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn row_is_empty(&self, a: usize) -> bool {
        self.row(a).iter().all(|&w| w == 0)
    }

    /// `pr1`: whether `a` occurs as a first coordinate.
    pub fn in_first_projection(&self, a: usize) -> bool {
        !self.row_is_empty(a)
    }

    pub(crate) fn row_subset(&self, a: usize, other: &BinRelation, b: usize) -> bool {
        self.row(a).iter().zip(other.row(b)).all(|(x, y)| x & !y == 0)
    }

    fn check_size(&self, other: &BinRelation) -> Result<()> {
        if self.size != other.size {
            return input(format!("relation size mismatch: {} vs {}", self.size, other.size));
        }
        Ok(())
    }

    pub fn is_subset_of(&self, other: &BinRelation) -> bool {
        self.size == other.size && self.bits.iter().zip(&other.bits).all(|(x, y)| x & !y == 0)
    }

    pub fn union(&self, other: &BinRelation) -> BinRelation {
        assert_eq!(self.size, other.size);
        let mut r = self.clone();
        r.bits.iter_mut().zip(&other.bits).for_each(|(x, y)| *x |= y);
        r
    }

    pub fn intersection(&self, other: &BinRelation) -> BinRelation {
        assert_eq!(self.size, other.size);
        let mut r = self.clone();
        r.bits.iter_mut().zip(&other.bits).for_each(|(x, y)| *x &= y);
        r
    }

    pub fn inverse(&self) -> BinRelation {
        Self::from_fn(self.size, |a, b| self.contains(b, a))
    }

    /// Relational product applying `self` first: `{(a, c) | a self b, b next c}`.
    pub fn then(&self, next: &BinRelation) -> Result<BinRelation> {
        self.check_size(next)?;
        let mut r = BinRelation::empty(self.size);
        for a in 0..self.size {
            for b in self.successors(a) {
                r.or_row_from(a, next, b);
            }
        }
        Ok(r)
    }

    /// `self ∪ Δ`.
    pub fn reflexive_closure(&self) -> BinRelation {
        let mut r = self.clone();
        for a in 0..self.size {
            r.insert(a, a);
        }
        r
    }

    /// Least transitive relation containing `self`, by repeated squaring
    /// `R ← R ∪ R·R` until stable.
    pub fn transitive_closure(&self) -> BinRelation {
        let mut r = self.clone();
        loop {
            let squared = r.then(&r).expect("same size");
            let next = r.union(&squared);
            if next == r {
                return r;
            }
            r = next;
        }
    }

    /// `self^k` under [`then`](Self::then); `self^0` is the diagonal.
    pub fn power(&self, k: usize) -> BinRelation {
        let mut r = BinRelation::diagonal(self.size);
        for _ in 0..k {
            r = r.then(self).expect("same size");
        }
        r
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.size).all(|a| self.successors(a).all(|b| self.row_subset(b, self, a)))
    }

    pub fn flags(&self) -> RelationFlags {
        let reflexive = self.is_reflexive();
        let symmetric = self.is_symmetric();
        let transitive = self.is_transitive();
        RelationFlags {
            reflexive,
            symmetric,
            transitive,
            quasi_order: reflexive && transitive,
            equivalence: reflexive && symmetric && transitive,
        }
    }

    pub fn is_quasi_order(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// `self ∩ self⁻¹`.
    pub fn kernel(&self) -> BinRelation {
        self.intersection(&self.inverse())
    }

    /// Rows as 0/1 vectors.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.contains(a, b) as u8).collect())
            .collect()
    }

    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self> {
        let size = rows.len();
        let mut r = Self::empty(size);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != size {
                return input(format!(
                    "matrix row {a} has length {} but the matrix has {size} rows",
                    row.len()
                ));
            }
            for (b, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => r.insert(a, b),
                    other => return input(format!("matrix entry [{a}][{b}] = {other} is not 0/1")),
                }
            }
        }
        Ok(r)
    }

    /// Overwrites row `a` with the union of itself and row `b` of `other`.
    pub(crate) fn or_row_from(&mut self, a: usize, other: &BinRelation, b: usize) {
        let words = self.words;
        let src = &other.bits[b * words..(b + 1) * words];
        self.bits[a * words..(a + 1) * words]
            .iter_mut()
            .zip(src)
            .for_each(|(x, y)| *x |= y);
    }
}

impl fmt::Debug for BinRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl fmt::Display for BinRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.size {
            let row: String = (0..self.size)
                .map(|b| if self.contains(a, b) { '1' } else { '0' })
                .collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(size: usize, pairs: &[(usize, usize)]) -> BinRelation {
        BinRelation::from_pairs(size, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn flags_of_basic_relations() {
        let d = BinRelation::diagonal(3).flags();
        assert!(d.reflexive && d.symmetric && d.transitive && d.quasi_order && d.equivalence);

        let f = rel(2, &[(0, 1)]).flags();
        assert_eq!(
            f,
            RelationFlags {
                reflexive: false,
                symmetric: false,
                transitive: true,
                quasi_order: false,
                equivalence: false
            }
        );

        assert!(BinRelation::full(4).flags().equivalence);
    }

    #[test]
    fn product_applies_receiver_first() {
        let rho = rel(3, &[(0, 1)]);
        let sigma = rel(3, &[(1, 2)]);
        assert_eq!(rho.then(&sigma).unwrap(), rel(3, &[(0, 2)]));
        assert!(sigma.then(&rho).unwrap().is_empty());
    }

    #[test]
    fn wide_carrier_crosses_word_boundary() {
        let mut r = BinRelation::empty(130);
        r.insert(0, 129);
        r.insert(129, 64);
        let c = r.transitive_closure();
        assert!(c.contains(0, 64));
        assert_eq!(c.len(), 3);
        assert_eq!(c.successors(0).collect::<Vec<_>>(), vec![64, 129]);
    }

    #[test]
    fn transitive_closure_matches_reachability() {
        // chain 0 -> 1 -> 2 -> 3 plus a back edge 3 -> 1
        let r = rel(5, &[(0, 1), (1, 2), (2, 3), (3, 1)]);
        let c = r.transitive_closure();
        for a in 0..5 {
            // plain DFS reachability
            let mut seen = [false; 5];
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                for y in r.successors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            for (b, &s) in seen.iter().enumerate() {
                assert_eq!(c.contains(a, b), s, "({a},{b})");
            }
        }
    }

    #[test]
    fn matrix_round_trip_and_validation() {
        let r = rel(3, &[(0, 0), (2, 1)]);
        assert_eq!(BinRelation::from_matrix(&r.to_matrix()).unwrap(), r);
        assert!(BinRelation::from_matrix(&[vec![1, 0], vec![1]]).is_err());
        assert!(BinRelation::from_matrix(&[vec![2]]).is_err());
    }

    #[test]
    fn powers_and_kernel() {
        let r = rel(3, &[(0, 1), (1, 2)]);
        assert_eq!(r.power(0), BinRelation::diagonal(3));
        assert_eq!(r.power(2), rel(3, &[(0, 2)]));
        let q = rel(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2)]);
        assert_eq!(q.kernel(), rel(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)]));
    }
}
