//! Generalized Cartan matrices, the built-in finite-type catalog and the
//! weight lattice.
//!
//! Matrices follow the convention `A_ab = <h_a, alpha_b>`, so row `a` holds the
//! values of the coroot `h_a` on the simple roots. For the non-simply-laced
//! built-in types this puts the `-2` (or `-3`) entry in the row of the short
//! node: `B_n` has `A_{n,n-1} = -2`, `C_n` has `A_{n-1,n} = -2`, `F_4` has
//! `A_{3,2} = -2` and `G_2` has `A_{1,2} = -3`. Node numbering is Bourbaki's.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("unknown Cartan family `{0}`")]
    UnknownFamily(String),
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse Cartan type `{0}`; expected e.g. `D4` or `A2`")]
    BadTypeString(String),
    #[error("matrix is empty or not square")]
    NotSquare,
    #[error("diagonal entry A[{0}][{0}] is not 2")]
    BadDiagonal(usize),
    #[error("off-diagonal entry A[{0}][{1}] is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("zero pattern is not symmetric at ({0}, {1})")]
    AsymmetricZero(usize, usize),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("unknown node {0}")]
    UnknownNode(usize),
    #[error("weight has {found} coordinates, expected {expected}")]
    WeightLength { expected: usize, found: usize },
}

/// How a datum was specified; kept so it can be serialized back the same way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CartanSpec {
    Family { family: String, rank: usize },
    Matrix { gcm: Vec<Vec<i64>> },
}

/// A symmetrizable generalized Cartan matrix with index set `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    spec: CartanSpec,
    gcm: Vec<Vec<i64>>,
    sym_diag: Vec<i64>,
}

impl CartanDatum {
    /// Builds one of the finite types `A_n, B_n, C_n, D_n, E_6..8, F_4, G_2`.
    pub fn finite(family: char, rank: usize) -> Result<Self, CartanError> {
        let family = family.to_ascii_uppercase();
        let gcm = finite_gcm(family, rank)?;
        let mut datum = Self::from_gcm(gcm)?;
        datum.spec = CartanSpec::Family {
            family: family.to_string(),
            rank,
        };
        Ok(datum)
    }

    /// Validates a raw matrix and computes its minimal symmetrizing diagonal.
    pub fn from_gcm(gcm: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let n = gcm.len();
        if n == 0 || gcm.iter().any(|row| row.len() != n) {
            return Err(CartanError::NotSquare);
        }
        for (a, row) in gcm.iter().enumerate() {
            if row[a] != 2 {
                return Err(CartanError::BadDiagonal(a + 1));
            }
            for (b, &entry) in row.iter().enumerate() {
                if a == b {
                    continue;
                }
                if entry > 0 {
                    return Err(CartanError::PositiveOffDiagonal(a + 1, b + 1));
                }
                if (entry == 0) != (gcm[b][a] == 0) {
                    return Err(CartanError::AsymmetricZero(a + 1, b + 1));
                }
            }
        }
        let sym_diag = symmetrizer(&gcm)?;
        Ok(CartanDatum {
            spec: CartanSpec::Matrix { gcm: gcm.clone() },
            gcm,
            sym_diag,
        })
    }

    pub fn from_spec(spec: &CartanSpec) -> Result<Self, CartanError> {
        match spec {
            CartanSpec::Family { family, rank } => {
                let mut chars = family.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Self::finite(c, *rank),
                    _ => Err(CartanError::UnknownFamily(family.clone())),
                }
            }
            CartanSpec::Matrix { gcm } => Self::from_gcm(gcm.clone()),
        }
    }

    /// Parses strings like `D4`, `a2` or `E6`.
    pub fn parse_type(s: &str) -> Result<Self, CartanError> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(|| CartanError::BadTypeString(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches(['_', '-'])
            .parse()
            .map_err(|_| CartanError::BadTypeString(s.to_string()))?;
        Self::finite(family, rank)
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.gcm.len()
    }

    /// Node labels, `1..=rank`.
    pub fn nodes(&self) -> impl Iterator<Item = usize> + Clone {
        1..=self.rank()
    }

    pub fn gcm(&self) -> &[Vec<i64>] {
        &self.gcm
    }

    pub fn sym_diag(&self) -> &[i64] {
        &self.sym_diag
    }

    /// `A_ab` for 1-based labels. Panics on labels outside the index set.
    pub fn entry(&self, a: usize, b: usize) -> i64 {
        self.gcm[a - 1][b - 1]
    }

    /// 0-based index of a node label.
    pub fn index(&self, a: usize) -> Result<usize, CartanError> {
        if a >= 1 && a <= self.rank() {
            Ok(a - 1)
        } else {
            Err(CartanError::UnknownNode(a))
        }
    }

    /// Canonical pairing `<h_a, w>`.
    pub fn pairing(&self, a: usize, w: &Weight) -> Result<i64, CartanError> {
        let i = self.index(a)?;
        self.check_weight(w)?;
        Ok(self.pairing_index(i, w))
    }

    pub(crate) fn pairing_index(&self, i: usize, w: &Weight) -> i64 {
        w.lambda_part[i]
            + self.gcm[i]
                .iter()
                .zip(&w.root_part)
                .map(|(aij, c)| aij * c)
                .sum::<i64>()
    }

    /// All pairings `(<h_a, w>)_a` at once.
    pub fn pairings(&self, w: &Weight) -> Result<Vec<i64>, CartanError> {
        self.check_weight(w)?;
        Ok((0..self.rank()).map(|i| self.pairing_index(i, w)).collect())
    }

    fn check_weight(&self, w: &Weight) -> Result<(), CartanError> {
        for len in [w.lambda_part.len(), w.root_part.len()] {
            if len != self.rank() {
                return Err(CartanError::WeightLength {
                    expected: self.rank(),
                    found: len,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.spec {
            CartanSpec::Family { family, rank } => write!(f, "{family}{rank}"),
            CartanSpec::Matrix { gcm } => {
                let rows: Vec<String> = gcm
                    .iter()
                    .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
                    .collect();
                write!(f, "[{}]", rows.join(";"))
            }
        }
    }
}

fn finite_gcm(family: char, rank: usize) -> Result<Vec<Vec<i64>>, CartanError> {
    let bad = || CartanError::InvalidRank { family, rank };
    let min_rank = match family {
        'A' => 1,
        'B' | 'C' => 2,
        'D' => 4,
        'E' => 6,
        'F' => 4,
        'G' => 2,
        _ => return Err(CartanError::UnknownFamily(family.to_string())),
    };
    if rank < min_rank {
        return Err(bad());
    }
    let mut m = vec![vec![0i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize| {
        m[a - 1][b - 1] = -1;
        m[b - 1][a - 1] = -1;
    };
    match family {
        'A' | 'B' | 'C' => {
            for a in 1..rank {
                link(a, a + 1);
            }
        }
        'D' => {
            for a in 1..rank - 1 {
                link(a, a + 1);
            }
            link(rank - 2, rank);
        }
        'E' => {
            if rank > 8 {
                return Err(bad());
            }
            link(1, 3);
            link(2, 4);
            for a in 3..rank {
                link(a, a + 1);
            }
        }
        'F' => {
            if rank != 4 {
                return Err(bad());
            }
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        'G' => {
            if rank != 2 {
                return Err(bad());
            }
            link(1, 2);
        }
        _ => unreachable!(),
    }
    match family {
        'B' => m[rank - 1][rank - 2] = -2,
        'C' => m[rank - 2][rank - 1] = -2,
        'F' => m[2][1] = -2,
        'G' => m[0][1] = -3,
        _ => {}
    }
    Ok(m)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Minimal positive `d` with `d_a A_ab = d_b A_ba`, per connected component.
fn symmetrizer(gcm: &[Vec<i64>]) -> Result<Vec<i64>, CartanError> {
    let n = gcm.len();
    // rationals as (numerator, denominator)
    let mut ratio: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut d = vec![0i64; n];
    for root in 0..n {
        if ratio[root].is_some() {
            continue;
        }
        ratio[root] = Some((1, 1));
        let mut component = vec![root];
        let mut stack = vec![root];
        while let Some(a) = stack.pop() {
            let (num, den) = ratio[a].unwrap();
            for b in 0..n {
                if b == a || gcm[a][b] == 0 {
                    continue;
                }
                // d_b = d_a * A_ab / A_ba
                let (mut bn, mut bd) = (num * gcm[a][b], den * gcm[b][a]);
                if bd < 0 {
                    bn = -bn;
                    bd = -bd;
                }
                let g = gcd(bn, bd);
                let (bn, bd) = (bn / g, bd / g);
                match ratio[b] {
                    None => {
                        ratio[b] = Some((bn, bd));
                        component.push(b);
                        stack.push(b);
                    }
                    Some(existing) if existing != (bn, bd) => {
                        return Err(CartanError::NotSymmetrizable);
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component.iter().fold(1i64, |acc, &a| {
            let den = ratio[a].unwrap().1;
            acc / gcd(acc, den) * den
        });
        let scaled: Vec<i64> = component
            .iter()
            .map(|&a| {
                let (num, den) = ratio[a].unwrap();
                num * (lcm / den)
            })
            .collect();
        let g = scaled.iter().fold(0, |acc, &x| gcd(acc, x));
        for (&a, v) in component.iter().zip(scaled) {
            d[a] = v / g;
        }
    }
    if d.iter().any(|&x| x <= 0) {
        return Err(CartanError::NotSymmetrizable);
    }
    Ok(d)
}

/// A weight `sum lambda_a Lambda_a + sum c_a alpha_a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    #[serde(rename = "lambda")]
    pub lambda_part: Vec<i64>,
    #[serde(rename = "root")]
    pub root_part: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            lambda_part: vec![0; rank],
            root_part: vec![0; rank],
        }
    }

    /// `Lambda_a` for a 1-based label.
    pub fn fundamental(rank: usize, a: usize) -> Self {
        let mut w = Self::zero(rank);
        w.lambda_part[a - 1] = 1;
        w
    }

    /// `alpha_a` for a 1-based label.
    pub fn simple_root(rank: usize, a: usize) -> Self {
        let mut w = Self::zero(rank);
        w.root_part[a - 1] = 1;
        w
    }

    pub fn from_lambda(lambda: Vec<i64>) -> Self {
        let rank = lambda.len();
        Weight {
            lambda_part: lambda,
            root_part: vec![0; rank],
        }
    }

    pub fn from_roots(roots: Vec<i64>) -> Self {
        let rank = roots.len();
        Weight {
            lambda_part: vec![0; rank],
            root_part: roots,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight {
            lambda_part: self.lambda_part.iter().map(|x| k * x).collect(),
            root_part: self.root_part.iter().map(|x| k * x).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.lambda_part.iter().chain(&self.root_part).all(|&x| x == 0)
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            lambda_part: zip_with(&self.lambda_part, &rhs.lambda_part, |a, b| a + b),
            root_part: zip_with(&self.root_part, &rhs.root_part, |a, b| a + b),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        Weight {
            lambda_part: zip_with(&self.lambda_part, &rhs.lambda_part, |a, b| a - b),
            root_part: zip_with(&self.root_part, &rhs.root_part, |a, b| a - b),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

fn zip_with(a: &[i64], b: &[i64], f: impl Fn(i64, i64) -> i64) -> Vec<i64> {
    assert_eq!(a.len(), b.len(), "weights of different rank");
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (sym, coeffs) in [("Lambda", &self.lambda_part), ("alpha", &self.root_part)] {
            for (i, &c) in coeffs.iter().enumerate() {
                match c {
                    0 => {}
                    1 => terms.push(format!("{sym}{}", i + 1)),
                    -1 => terms.push(format!("-{sym}{}", i + 1)),
                    c => terms.push(format!("{c}*{sym}{}", i + 1)),
                }
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {t}")),
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_symmetrized(d: &CartanDatum) -> bool {
        let n = d.rank();
        (0..n).all(|a| (0..n).all(|b| d.sym_diag[a] * d.gcm[a][b] == d.sym_diag[b] * d.gcm[b][a]))
    }

    #[test]
    fn d4_matrix() {
        let d4 = CartanDatum::finite('D', 4).unwrap();
        assert_eq!(
            d4.gcm(),
            &[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ]
        );
        assert_eq!(d4.sym_diag(), &[1, 1, 1, 1]);
    }

    #[test]
    fn a1_is_two() {
        let a1 = CartanDatum::parse_type("A1").unwrap();
        assert_eq!(a1.gcm(), &[vec![2]]);
    }

    #[test]
    fn affine_a1_raw() {
        let d = CartanDatum::from_gcm(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(d.sym_diag(), &[1, 1]);
        assert!(is_symmetrized(&d));
    }

    #[test]
    fn builtin_catalog_symmetrized() {
        let types = [
            ('A', 1),
            ('A', 5),
            ('B', 2),
            ('B', 4),
            ('C', 3),
            ('D', 4),
            ('D', 6),
            ('E', 6),
            ('E', 7),
            ('E', 8),
            ('F', 4),
            ('G', 2),
        ];
        for (f, r) in types {
            let d = CartanDatum::finite(f, r).unwrap();
            assert!(is_symmetrized(&d), "{f}{r}");
        }
        assert_eq!(CartanDatum::finite('B', 3).unwrap().sym_diag(), &[2, 2, 1]);
        assert_eq!(CartanDatum::finite('C', 3).unwrap().sym_diag(), &[1, 1, 2]);
        assert_eq!(CartanDatum::finite('G', 2).unwrap().sym_diag(), &[1, 3]);
        assert_eq!(CartanDatum::finite('F', 4).unwrap().sym_diag(), &[2, 2, 1, 1]);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert_eq!(
            CartanDatum::from_gcm(vec![vec![2, 1], vec![-1, 2]]),
            Err(CartanError::PositiveOffDiagonal(1, 2))
        );
        assert_eq!(
            CartanDatum::from_gcm(vec![vec![1, 0], vec![0, 2]]),
            Err(CartanError::BadDiagonal(1))
        );
        assert_eq!(
            CartanDatum::from_gcm(vec![vec![2, -1], vec![0, 2]]),
            Err(CartanError::AsymmetricZero(1, 2))
        );
        // cycle with inconsistent ratios
        let bad = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert_eq!(CartanDatum::from_gcm(bad), Err(CartanError::NotSymmetrizable));
        assert_eq!(CartanDatum::from_gcm(vec![]), Err(CartanError::NotSquare));
        assert!(CartanDatum::finite('D', 3).is_err());
        assert!(CartanDatum::finite('X', 3).is_err());
        assert!(CartanDatum::parse_type("D").is_err());
    }

    #[test]
    fn pairing_examples() {
        let d4 = CartanDatum::finite('D', 4).unwrap();
        let w = Weight::from_roots(vec![-2, -4, -2, -1]);
        assert_eq!(d4.pairing(2, &w), Ok(-3));
        for a in d4.nodes() {
            assert_eq!(d4.pairing(a, &Weight::fundamental(4, a)), Ok(1));
            assert_eq!(d4.pairing(a, &Weight::zero(4)), Ok(0));
        }
        assert_eq!(d4.pairing(5, &w), Err(CartanError::UnknownNode(5)));
    }

    #[test]
    fn weight_display() {
        let w = Weight::from_roots(vec![-2, -4, -2, -1]);
        assert_eq!(w.to_string(), "-2*alpha1 - 4*alpha2 - 2*alpha3 - alpha4");
        assert_eq!(Weight::zero(2).to_string(), "0");
    }
}
