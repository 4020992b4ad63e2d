//! Highest weight crystals `RC(lambda)` and `RC(lambda)^*`.
//!
//! Elements of both are stored as plain rigged configurations; the
//! lambda-shifted vacancy numbers `p_i^{(a)}(nu; lambda) = p_i^{(a)}(nu) +
//! <h_a, lambda>` are applied when an element is read.

use std::sync::Arc;

use thiserror::Error;

use crate::cartan::{CartanDatum, Weight};
use crate::crystal::{self, apply_op, min_label, Direction, Structure};
use crate::rigged::RiggedConfiguration;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HwError {
    #[error("highest weight must be a combination of fundamental weights (root part {0:?})")]
    NotFundamental(Vec<i64>),
    #[error("highest weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("highest weight has {found} coordinates, expected {expected}")]
    Rank { expected: usize, found: usize },
    #[error("element is not in RC(lambda)")]
    NotInRcLambda,
    #[error("lambda is not below mu")]
    NotBelow,
    #[error("element and highest weight use different Cartan data")]
    DatumMismatch,
}

/// A dominant integral weight `lambda` together with its datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeight {
    datum: Arc<CartanDatum>,
    lambda: Weight,
}

impl HighestWeight {
    pub fn new(datum: Arc<CartanDatum>, lambda: Weight) -> Result<Self, HwError> {
        let n = datum.rank();
        for len in [lambda.lambda_part.len(), lambda.root_part.len()] {
            if len != n {
                return Err(HwError::Rank {
                    expected: n,
                    found: len,
                });
            }
        }
        if lambda.root_part.iter().any(|&c| c != 0) {
            return Err(HwError::NotFundamental(lambda.root_part));
        }
        if lambda.lambda_part.iter().any(|&c| c < 0) {
            return Err(HwError::NotDominant(lambda.lambda_part));
        }
        Ok(HighestWeight { datum, lambda })
    }

    /// `lambda = sum coeffs[a-1] Lambda_a`.
    pub fn from_coefficients(datum: Arc<CartanDatum>, coeffs: Vec<i64>) -> Result<Self, HwError> {
        Self::new(datum, Weight::from_lambda(coeffs))
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `<h_a, lambda>`.
    pub fn level(&self, a: usize) -> i64 {
        self.lambda.lambda_part[a - 1]
    }

    fn offsets(&self) -> &[i64] {
        &self.lambda.lambda_part
    }

    fn check(&self, rc: &RiggedConfiguration) -> Result<(), HwError> {
        if self.datum.gcm() == rc.datum().gcm() {
            Ok(())
        } else {
            Err(HwError::DatumMismatch)
        }
    }
}

/// `p_i^{(a)}(nu; lambda)`.
pub fn vacancy_hw(rc: &RiggedConfiguration, ctx: &HighestWeight, a: usize, i: usize) -> i64 {
    rc.vacancy(a, i) + ctx.level(a)
}

/// `max J_i^{(a)} <= p_i^{(a)}(nu; lambda)` for every row.
pub fn in_rc_lambda(rc: &RiggedConfiguration, ctx: &HighestWeight) -> bool {
    rc.datum().nodes().all(|a| {
        rc.part(a)
            .rows()
            .iter()
            .all(|r| r.rigging <= vacancy_hw(rc, ctx, a, r.len))
    })
}

/// `epsilon_a^* <= <h_a, lambda>` for every node.
pub fn within_star_bound(rc: &RiggedConfiguration, ctx: &HighestWeight) -> bool {
    rc.datum()
        .nodes()
        .all(|a| crate::star::epsilon_star(rc, a) <= ctx.level(a))
}

/// `lambda + wt(nu, J)`.
pub fn weight_lambda(rc: &RiggedConfiguration, ctx: &HighestWeight) -> Weight {
    ctx.lambda() + &rc.weight()
}

pub fn phi_lambda(rc: &RiggedConfiguration, ctx: &HighestWeight, a: usize) -> i64 {
    rc.vacancy_infinity(a) + ctx.level(a) + crystal::epsilon(rc, a)
}

/// `f_a` on `RC(lambda)`; `Ok(None)` when the result leaves `RC(lambda)`.
pub fn f_lambda(
    rc: &RiggedConfiguration,
    ctx: &HighestWeight,
    a: usize,
) -> Result<Option<RiggedConfiguration>, HwError> {
    ctx.check(rc)?;
    if !in_rc_lambda(rc, ctx) {
        return Err(HwError::NotInRcLambda);
    }
    let next = crystal::f(rc, a);
    Ok(in_rc_lambda(&next, ctx).then_some(next))
}

/// `e_a` on `RC(lambda)`.
pub fn e_lambda(
    rc: &RiggedConfiguration,
    ctx: &HighestWeight,
    a: usize,
) -> Result<Option<RiggedConfiguration>, HwError> {
    ctx.check(rc)?;
    if !in_rc_lambda(rc, ctx) {
        return Err(HwError::NotInRcLambda);
    }
    let next = crystal::e(rc, a);
    if let Some(x) = &next {
        assert!(in_rc_lambda(x, ctx), "e_a left RC(lambda)");
    }
    Ok(next)
}

/// `f_a^*` on `RC(lambda)^*`, reading coriggings against lambda-shifted
/// vacancies. `None` if the result has a negative rigging.
pub fn f_star_lambda(rc: &RiggedConfiguration, ctx: &HighestWeight, a: usize) -> Option<RiggedConfiguration> {
    let next = apply_op(rc, a, Structure::Star, Direction::F, Some(ctx.offsets()))?;
    riggings_nonnegative(&next).then_some(next)
}

/// `e_a^*` on `RC(lambda)^*`.
pub fn e_star_lambda(rc: &RiggedConfiguration, ctx: &HighestWeight, a: usize) -> Option<RiggedConfiguration> {
    apply_op(rc, a, Structure::Star, Direction::E, Some(ctx.offsets()))
}

pub fn epsilon_star_lambda(rc: &RiggedConfiguration, ctx: &HighestWeight, a: usize) -> i64 {
    -min_label(rc, a, Structure::Star, ctx.level(a))
}

pub fn phi_star_lambda(rc: &RiggedConfiguration, ctx: &HighestWeight, a: usize) -> i64 {
    rc.vacancy_infinity(a) + ctx.level(a) + epsilon_star_lambda(rc, ctx, a)
}

pub fn riggings_nonnegative(rc: &RiggedConfiguration) -> bool {
    rc.parts().iter().all(|p| p.rows().iter().all(|r| r.rigging >= 0))
}

/// The difference statistic: the smallest dominant `lambda` with the element
/// in `RC(lambda)`. Component `a` is `max(0, max_i (max J_i^{(a)} - p_i^{(a)}))`.
pub fn tau(rc: &RiggedConfiguration) -> Weight {
    Weight::from_lambda(
        rc.datum()
            .nodes()
            .map(|a| {
                rc.rows_with_vacancies(a)
                    .iter()
                    .map(|(r, p)| r.rigging - p)
                    .max()
                    .unwrap_or(0)
                    .max(0)
            })
            .collect(),
    )
}

/// `sum_a epsilon_a Lambda_a`.
pub fn epsilon_weight(rc: &RiggedConfiguration) -> Weight {
    Weight::from_lambda(rc.datum().nodes().map(|a| crystal::epsilon(rc, a)).collect())
}

/// A dominant weight or the formal top element `infinity`, with
/// `<h_a, infinity> = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Finite(Weight),
    Infinity,
}

impl Bound {
    fn level(&self, a: usize) -> i64 {
        match self {
            Bound::Finite(w) => w.lambda_part[a - 1],
            Bound::Infinity => 0,
        }
    }

    fn le(&self, other: &Bound) -> bool {
        match (self, other) {
            (_, Bound::Infinity) => true,
            (Bound::Infinity, Bound::Finite(_)) => false,
            (Bound::Finite(l), Bound::Finite(m)) => l.lambda_part.iter().zip(&m.lambda_part).all(|(x, y)| x <= y),
        }
    }
}

/// `psi^*_{lambda, mu}`: shifts every rigging of part `a` by `<h_a, mu - lambda>`.
pub fn psi_star(rc: &RiggedConfiguration, lambda: &Bound, mu: &Bound) -> Result<RiggedConfiguration, HwError> {
    if !lambda.le(mu) {
        return Err(HwError::NotBelow);
    }
    Ok(rc.map_riggings(|a, _, x, _| x + mu.level(a) - lambda.level(a)))
}

/// `Xi(nu, J)`: the riggings of part `a` shifted by `<h_a, lambda>`.
pub fn xi(rc: &RiggedConfiguration, ctx: &HighestWeight) -> Result<RiggedConfiguration, HwError> {
    ctx.check(rc)?;
    if !in_rc_lambda(rc, ctx) {
        return Err(HwError::NotInRcLambda);
    }
    Ok(rc.map_riggings(|a, _, x, _| x + ctx.level(a)))
}

/// `psi^*_{infinity, lambda}` after the `*`-involution: row riggings become
/// `p_i^{(a)} - x + <h_a, lambda>`. Unlike [`xi`], this sends `f_a` on
/// `RC(lambda)` to `f_a^*` on `RC(lambda)^*` in every type.
pub fn xi_involuted(rc: &RiggedConfiguration, ctx: &HighestWeight) -> Result<RiggedConfiguration, HwError> {
    ctx.check(rc)?;
    if !in_rc_lambda(rc, ctx) {
        return Err(HwError::NotInRcLambda);
    }
    Ok(rc.map_riggings(|a, _, x, p| p - x + ctx.level(a)))
}
