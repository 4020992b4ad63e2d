//! Rigged partitions and rigged configurations.
//!
//! Only riggings are stored. Vacancy numbers are always recomputed from the
//! partitions, and coriggings are derived from the two.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::cartan::{CartanDatum, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RcError {
    #[error("rigged configurations belong to different Cartan data")]
    DatumMismatch,
    #[error("expected {expected} rigged partitions, found {found}")]
    PartCount { expected: usize, found: usize },
    #[error("node {node}: row {index} does not exist")]
    BadRow { node: usize, index: usize },
    #[error("rows must have positive length")]
    ZeroLength,
}

/// One row of a rigged partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Row {
    pub len: usize,
    pub rigging: i64,
}

impl Row {
    pub fn new(len: usize, rigging: i64) -> Self {
        Row { len, rigging }
    }
}

// Canonical order: longer rows first, then larger riggings first.
impl Ord for Row {
    fn cmp(&self, other: &Self) -> Ordering {
        other.len.cmp(&self.len).then(other.rigging.cmp(&self.rigging))
    }
}

impl PartialOrd for Row {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A partition with an integer rigging per row, kept in canonical order.
///
/// The infinitely many rows of length zero with rigging zero are implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedPartition {
    rows: Vec<Row>,
}

impl RiggedPartition {
    pub fn new(mut rows: Vec<Row>) -> Result<Self, RcError> {
        if rows.iter().any(|r| r.len == 0) {
            return Err(RcError::ZeroLength);
        }
        rows.sort();
        Ok(RiggedPartition { rows })
    }

    pub(crate) fn from_rows_unchecked(mut rows: Vec<Row>) -> Self {
        rows.retain(|r| r.len > 0);
        rows.sort();
        RiggedPartition { rows }
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len).sum()
    }

    pub fn max_len(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len)
    }

    /// `m_i`, the number of rows of length `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.rows.iter().filter(|r| r.len == i).count()
    }

    /// `sum_j min(i, j) m_j`.
    pub(crate) fn min_sum(&self, i: usize) -> i64 {
        self.rows.iter().map(|r| r.len.min(i) as i64).sum()
    }
}

/// An element `(nu, J)`: one rigged partition per node of the Cartan datum.
#[derive(Debug, Clone)]
pub struct RiggedConfiguration {
    datum: Arc<CartanDatum>,
    parts: Vec<RiggedPartition>,
}

impl RiggedConfiguration {
    /// The generator `(nu_empty, J_empty)`.
    pub fn empty(datum: Arc<CartanDatum>) -> Self {
        let parts = vec![RiggedPartition::default(); datum.rank()];
        RiggedConfiguration { datum, parts }
    }

    pub fn new(datum: Arc<CartanDatum>, parts: Vec<RiggedPartition>) -> Result<Self, RcError> {
        if parts.len() != datum.rank() {
            return Err(RcError::PartCount {
                expected: datum.rank(),
                found: parts.len(),
            });
        }
        Ok(RiggedConfiguration { datum, parts })
    }

    /// Builds from `(length, rigging)` lists, one per node in label order.
    pub fn from_rows(datum: Arc<CartanDatum>, rows: Vec<Vec<(usize, i64)>>) -> Result<Self, RcError> {
        let parts = rows
            .into_iter()
            .map(|p| RiggedPartition::new(p.into_iter().map(|(l, x)| Row::new(l, x)).collect()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(datum, parts)
    }

    pub(crate) fn from_parts_unchecked(datum: Arc<CartanDatum>, parts: Vec<RiggedPartition>) -> Self {
        debug_assert_eq!(parts.len(), datum.rank());
        RiggedConfiguration { datum, parts }
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    pub fn parts(&self) -> &[RiggedPartition] {
        &self.parts
    }

    /// The rigged partition at a 1-based node label.
    pub fn part(&self, a: usize) -> &RiggedPartition {
        &self.parts[a - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(RiggedPartition::is_empty)
    }

    /// Total number of boxes, which is also the depth in `B(infinity)`.
    pub fn size(&self) -> usize {
        self.parts.iter().map(RiggedPartition::size).sum()
    }

    /// Vacancy number `p_i^{(a)}`; `i = usize::MAX` gives `p_infinity`.
    pub fn vacancy(&self, a: usize, i: usize) -> i64 {
        vacancy_of(&self.datum, &self.parts, a - 1, i)
    }

    pub fn vacancy_infinity(&self, a: usize) -> i64 {
        self.vacancy(a, usize::MAX)
    }

    /// Corigging of row `index` (canonical order) of part `a`; indices past the
    /// last stored row refer to the implicit length-0 rows, whose corigging is 0.
    pub fn corigging(&self, a: usize, index: usize) -> Result<i64, RcError> {
        let part = self
            .parts
            .get(a.wrapping_sub(1))
            .ok_or(RcError::BadRow { node: a, index })?;
        Ok(match part.rows.get(index) {
            Some(row) => self.vacancy(a, row.len) - row.rigging,
            None => 0,
        })
    }

    /// `wt = -sum |nu^{(a)}| alpha_a`.
    pub fn weight(&self) -> Weight {
        Weight::from_roots(self.parts.iter().map(|p| -(p.size() as i64)).collect())
    }

    /// Rows of part `a` paired with their current vacancy numbers.
    pub fn rows_with_vacancies(&self, a: usize) -> Vec<(Row, i64)> {
        self.part(a).rows.iter().map(|&r| (r, self.vacancy(a, r.len))).collect()
    }

    /// Canonical form. Parts are kept sorted at all times, so this is a clone.
    pub fn normalize(&self) -> Self {
        let parts = self
            .parts
            .iter()
            .map(|p| RiggedPartition::from_rows_unchecked(p.rows.clone()))
            .collect();
        RiggedConfiguration::from_parts_unchecked(self.datum.clone(), parts)
    }

    /// Multiset equality of all `J_i^{(a)}`, erroring on mismatched data.
    pub fn equals(&self, other: &Self) -> Result<bool, RcError> {
        if !self.same_datum(other) {
            return Err(RcError::DatumMismatch);
        }
        Ok(self.parts == other.parts)
    }

    pub fn same_datum(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.datum, &other.datum) || self.datum == other.datum
    }

    /// Replaces every rigging by `f(a, len, rigging, vacancy)`.
    pub(crate) fn map_riggings(&self, f: impl Fn(usize, usize, i64, i64) -> i64) -> Self {
        let parts = (1..=self.parts.len())
            .map(|a| {
                RiggedPartition::from_rows_unchecked(
                    self.part(a)
                        .rows
                        .iter()
                        .map(|r| Row::new(r.len, f(a, r.len, r.rigging, self.vacancy(a, r.len))))
                        .collect(),
                )
            })
            .collect();
        RiggedConfiguration::from_parts_unchecked(self.datum.clone(), parts)
    }
}

/// `p_i^{(a)} = -sum_{(b,j)} A_ab min(i, j) m_j^{(b)}` with `a` a 0-based index.
pub(crate) fn vacancy_of(datum: &CartanDatum, parts: &[RiggedPartition], a: usize, i: usize) -> i64 {
    -datum.gcm()[a]
        .iter()
        .zip(parts)
        .filter(|(aab, _)| **aab != 0)
        .map(|(aab, p)| aab * p.min_sum(i))
        .sum::<i64>()
}

impl PartialEq for RiggedConfiguration {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts && self.same_datum(other)
    }
}

impl Eq for RiggedConfiguration {}

impl Hash for RiggedConfiguration {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl PartialOrd for RiggedConfiguration {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by total size, then lexicographically by parts. Only meaningful
/// between configurations over the same datum.
impl Ord for RiggedConfiguration {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::horizontal(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::running_example;

    #[test]
    fn empty_configuration() {
        let d4 = Arc::new(CartanDatum::finite('D', 4).unwrap());
        let e = RiggedConfiguration::empty(d4);
        assert_eq!(e.parts().len(), 4);
        assert!(e.weight().is_zero());
        for a in 1..=4 {
            for i in [1, 2, 5, usize::MAX] {
                assert_eq!(e.vacancy(a, i), 0);
            }
        }
    }

    #[test]
    fn running_example_vacancies() {
        let rc = running_example();
        assert_eq!(rc.vacancy(2, 3), -3);
        assert_eq!(rc.vacancy(2, 1), -1);
        assert_eq!(rc.vacancy(1, 2), -1);
        assert_eq!(rc.vacancy(3, 2), -1);
        assert_eq!(rc.vacancy(4, 1), 0);
    }

    #[test]
    fn coriggings() {
        let rc = running_example();
        assert_eq!(rc.corigging(2, 0), Ok(-1));
        assert_eq!(rc.corigging(1, 0), Ok(-1));
        assert_eq!(rc.corigging(1, 7), Ok(0));
        assert!(rc.corigging(9, 0).is_err());
    }

    #[test]
    fn weight_matches_pairing_at_infinity() {
        let rc = running_example();
        let wt = rc.weight();
        assert_eq!(wt, Weight::from_roots(vec![-2, -4, -2, -1]));
        for a in 1..=4 {
            assert_eq!(rc.datum().pairing(a, &wt).unwrap(), rc.vacancy_infinity(a));
        }
    }

    #[test]
    fn multiset_identification() {
        let a1 = Arc::new(CartanDatum::finite('A', 1).unwrap());
        let x = RiggedConfiguration::from_rows(a1.clone(), vec![vec![(2, 5), (2, 7)]]).unwrap();
        let y = RiggedConfiguration::from_rows(a1, vec![vec![(2, 7), (2, 5)]]).unwrap();
        assert_eq!(x.equals(&y), Ok(true));
        let rc = running_example();
        assert_eq!(rc.normalize().equals(&rc), Ok(true));
    }

    #[test]
    fn datum_mismatch() {
        let a1 = Arc::new(CartanDatum::finite('A', 1).unwrap());
        let x = RiggedConfiguration::empty(a1);
        assert_eq!(x.equals(&running_example()), Err(RcError::DatumMismatch));
    }

    #[test]
    fn rejects_zero_length_rows() {
        assert_eq!(RiggedPartition::new(vec![Row::new(0, 0)]), Err(RcError::ZeroLength));
    }
}
