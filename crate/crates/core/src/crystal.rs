//! Crystal operators on rigged configurations.
//!
//! The ordinary operators `e_a, f_a` select a row by its rigging and keep the
//! coriggings of every other row fixed. The star operators select by corigging
//! and keep every other rigging fixed. Both are implemented by one routine
//! parametrized by [`Structure`]; the star-specific API lives in
//! [`crate::star`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanError;
use crate::rigged::{vacancy_of, RiggedConfiguration, RiggedPartition, Row};

/// Which of the two crystal structures an operator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    Ordinary,
    Star,
}

impl Structure {
    pub fn dual(self) -> Self {
        match self {
            Structure::Ordinary => Structure::Star,
            Structure::Star => Structure::Ordinary,
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::Ordinary => "ordinary",
            Structure::Star => "star",
        })
    }
}

impl FromStr for Structure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ordinary" | "o" => Ok(Structure::Ordinary),
            "star" | "s" | "*" => Ok(Structure::Star),
            _ => Err(format!("unknown structure `{s}` (expected ordinary or star)")),
        }
    }
}

/// `f` adds a box, `e` removes one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    F,
    E,
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f" => Ok(Direction::F),
            "e" => Ok(Direction::E),
            _ => Err(format!("unknown operator `{s}` (expected f or e)")),
        }
    }
}

/// Label of a row under a structure: the rigging for ordinary operators, the
/// corigging (against vacancies shifted by `offset`) for star operators.
#[inline]
fn label(structure: Structure, row: &Row, vacancy: i64, offset: i64) -> i64 {
    match structure {
        Structure::Ordinary => row.rigging,
        Structure::Star => vacancy + offset - row.rigging,
    }
}

/// Smallest label in part `a`, with the implicit length-0 rows contributing 0.
pub(crate) fn min_label(rc: &RiggedConfiguration, a: usize, structure: Structure, offset: i64) -> i64 {
    rc.part(a)
        .rows()
        .iter()
        .map(|r| label(structure, r, rc.vacancy(a, r.len), offset))
        .min()
        .unwrap_or(0)
        .min(0)
}

/// Core operator. `offsets[a-1]` is added to every vacancy number of part `a`
/// when coriggings are read or written (zero for `B(infinity)`).
pub(crate) fn apply_op(
    rc: &RiggedConfiguration,
    a: usize,
    structure: Structure,
    direction: Direction,
    offsets: Option<&[i64]>,
) -> Option<RiggedConfiguration> {
    let datum = rc.datum();
    assert!(
        a >= 1 && a <= datum.rank(),
        "node {a} is not in the index set 1..={}",
        datum.rank()
    );
    let idx = a - 1;
    let offset = offsets.map_or(0, |o| o[idx]);
    let parts = rc.parts();
    let rows = parts[idx].rows();

    let x = min_label(rc, a, structure, offset);
    let labels: Vec<i64> = rows
        .iter()
        .map(|r| label(structure, r, rc.vacancy(a, r.len), offset))
        .collect();
    // Rows are sorted by decreasing length: the first match is a longest row,
    // the last match a shortest one.
    let chosen = match direction {
        Direction::F => labels.iter().position(|&l| l == x),
        Direction::E => {
            if x == 0 {
                return None;
            }
            labels.iter().rposition(|&l| l == x)
        }
    };

    // Coriggings of all rows before the change (offsets cancel for the
    // preserved ordinary quantity, so plain vacancies suffice).
    let old_vac: Vec<Vec<i64>> = parts
        .iter()
        .enumerate()
        .map(|(b, p)| p.rows().iter().map(|r| vacancy_of(datum, parts, b, r.len)).collect())
        .collect();

    let mut new_rows: Vec<Vec<Row>> = parts.iter().map(|p| p.rows().to_vec()).collect();
    let changed = match (direction, chosen) {
        (Direction::F, Some(k)) => {
            new_rows[idx][k].len += 1;
            k
        }
        (Direction::F, None) => {
            debug_assert_eq!(x, 0);
            new_rows[idx].push(Row::new(1, 0));
            new_rows[idx].len() - 1
        }
        (Direction::E, Some(k)) => {
            new_rows[idx][k].len -= 1;
            k
        }
        (Direction::E, None) => unreachable!("negative minimum label must be attained"),
    };

    let shape: Vec<RiggedPartition> = new_rows
        .iter()
        .map(|r| RiggedPartition::from_rows_unchecked(r.clone()))
        .collect();
    let new_vac = |b: usize, len: usize| vacancy_of(datum, &shape, b, len);

    for (b, row_list) in new_rows.iter_mut().enumerate() {
        for (k, row) in row_list.iter_mut().enumerate() {
            if b == idx && k == changed {
                continue;
            }
            if structure == Structure::Ordinary {
                let corigging = old_vac[b][k] - row.rigging;
                row.rigging = new_vac(b, row.len) - corigging;
            }
        }
    }

    let new_label = match direction {
        Direction::F => x - 1,
        Direction::E => x + 1,
    };
    let row = &mut new_rows[idx][changed];
    row.rigging = match structure {
        Structure::Ordinary => new_label,
        Structure::Star => new_vac(idx, row.len) + offset - new_label,
    };

    let parts = new_rows.into_iter().map(RiggedPartition::from_rows_unchecked).collect();
    Some(RiggedConfiguration::from_parts_unchecked(datum.clone(), parts))
}

/// `f_a`. Always defined on `B(infinity)`.
pub fn f(rc: &RiggedConfiguration, a: usize) -> RiggedConfiguration {
    apply_op(rc, a, Structure::Ordinary, Direction::F, None).expect("f_a is total")
}

/// `e_a`, or `None` when the smallest rigging of part `a` is nonnegative.
pub fn e(rc: &RiggedConfiguration, a: usize) -> Option<RiggedConfiguration> {
    apply_op(rc, a, Structure::Ordinary, Direction::E, None)
}

/// `epsilon_a = -min(0, smallest rigging)`.
pub fn epsilon(rc: &RiggedConfiguration, a: usize) -> i64 {
    -min_label(rc, a, Structure::Ordinary, 0)
}

/// `phi_a = p_infinity^{(a)} + epsilon_a`.
pub fn phi(rc: &RiggedConfiguration, a: usize) -> i64 {
    rc.vacancy_infinity(a) + epsilon(rc, a)
}

/// `epsilon_a` counted by applying `e_a` until it returns `None`.
pub fn epsilon_by_iteration(rc: &RiggedConfiguration, a: usize, structure: Structure) -> i64 {
    let mut k = 0;
    let mut cur = rc.clone();
    while let Some(next) = apply_op(&cur, a, structure, Direction::E, None) {
        cur = next;
        k += 1;
    }
    k
}

/// Applies the operators of `word` left to right (the first letter acts
/// first). `None` propagates.
pub fn apply_word(
    rc: &RiggedConfiguration,
    word: &[usize],
    structure: Structure,
    direction: Direction,
) -> Result<Option<RiggedConfiguration>, CartanError> {
    for &a in word {
        rc.datum().index(a)?;
    }
    let mut cur = rc.clone();
    for &a in word {
        match apply_op(&cur, a, structure, direction, None) {
            Some(next) => cur = next,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}
