//! The star crystal structure, the jump statistic `kappa` and the
//! `*`-involution.

use crate::crystal::{self, apply_op, min_label, Direction, Structure};
use crate::rigged::RiggedConfiguration;

/// `f_a^*`: adds a box to a longest row of minimal corigging `x <= 0` and
/// gives it corigging `x - 1`; all other riggings are unchanged.
pub fn f_star(rc: &RiggedConfiguration, a: usize) -> RiggedConfiguration {
    apply_op(rc, a, Structure::Star, Direction::F, None).expect("f_a^* is total")
}

/// `e_a^*`, or `None` when every corigging of part `a` is nonnegative.
pub fn e_star(rc: &RiggedConfiguration, a: usize) -> Option<RiggedConfiguration> {
    apply_op(rc, a, Structure::Star, Direction::E, None)
}

pub fn epsilon_star(rc: &RiggedConfiguration, a: usize) -> i64 {
    -min_label(rc, a, Structure::Star, 0)
}

pub fn phi_star(rc: &RiggedConfiguration, a: usize) -> i64 {
    rc.vacancy_infinity(a) + epsilon_star(rc, a)
}

/// The `a`-jump `epsilon_a + epsilon_a^* + <h_a, wt>`.
pub fn kappa(rc: &RiggedConfiguration, a: usize) -> i64 {
    crystal::epsilon(rc, a) + epsilon_star(rc, a) + rc.vacancy_infinity(a)
}

/// Replaces every rigging by its corigging, keeping the partitions.
pub fn involute(rc: &RiggedConfiguration) -> RiggedConfiguration {
    rc.map_riggings(|_, _, rigging, vacancy| vacancy - rigging)
}

/// Operator dispatch by structure and direction; `None` only for `e`.
pub fn op(
    rc: &RiggedConfiguration,
    a: usize,
    structure: Structure,
    direction: Direction,
) -> Option<RiggedConfiguration> {
    apply_op(rc, a, structure, direction, None)
}

pub fn epsilon_of(rc: &RiggedConfiguration, a: usize, structure: Structure) -> i64 {
    match structure {
        Structure::Ordinary => crystal::epsilon(rc, a),
        Structure::Star => epsilon_star(rc, a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{e, epsilon, f};
    use crate::fixtures::{d4, running_example};

    fn rc(rows: Vec<Vec<(usize, i64)>>) -> RiggedConfiguration {
        RiggedConfiguration::from_rows(d4(), rows).unwrap()
    }

    #[test]
    fn f2_star_matches_f2() {
        let nu = running_example();
        let out = f_star(&nu, 2);
        assert_eq!(
            out,
            rc(vec![vec![(2, 0)], vec![(4, -3), (1, -1)], vec![(2, 0)], vec![(1, 0)]])
        );
        assert_eq!(out, f(&nu, 2));
        assert_eq!(kappa(&nu, 2), 0);
    }

    #[test]
    fn generator_star_equals_ordinary() {
        let empty = RiggedConfiguration::empty(d4());
        for a in 1..=4 {
            assert_eq!(kappa(&empty, a), 0);
            let out = f_star(&empty, a);
            assert_eq!(out, f(&empty, a));
            assert_eq!(out.part(a).rows(), &[crate::rigged::Row::new(1, -1)]);
            assert_eq!(e_star(&empty, a), None);
            assert_eq!(epsilon_star(&empty, a), 0);
        }
    }

    #[test]
    fn f3_star_keeps_riggings() {
        let out = f_star(&running_example(), 3);
        assert_eq!(
            out,
            rc(vec![vec![(2, 0)], vec![(3, -2), (1, -1)], vec![(3, 0)], vec![(1, 0)]])
        );
        assert_eq!(out.vacancy(3, 3), -2);
        assert_eq!(out.vacancy(2, 3), -2);
    }

    #[test]
    fn e_star_examples() {
        let nu = running_example();
        assert_eq!(e_star(&f_star(&nu, 2), 2), Some(nu.clone()));
        let down = e_star(&nu, 3).unwrap();
        assert_eq!(down.part(3).rows().len(), 1);
        assert_eq!(down.part(3).rows()[0].len, 1);
        assert_eq!(down.corigging(3, 0), Ok(0));
        assert_eq!(f_star(&down, 3), nu);
    }

    #[test]
    fn epsilon_star_values() {
        let nu = running_example();
        let eps: Vec<i64> = (1..=4).map(|a| epsilon_star(&nu, a)).collect();
        assert_eq!(eps, vec![1, 1, 1, 0]);
        for a in 1..=4 {
            assert_eq!(crystal::epsilon_by_iteration(&nu, a, Structure::Star), eps[a - 1]);
            assert_eq!(epsilon_star(&nu, a), epsilon(&involute(&nu), a));
        }
    }

    #[test]
    fn jumps() {
        let nu = running_example();
        let k: Vec<i64> = (1..=4).map(|a| kappa(&nu, a)).collect();
        assert_eq!(k, vec![1, 0, 1, 2]);
        assert_eq!(kappa(&f(&nu, 4), 4), 1);
        let empty = RiggedConfiguration::empty(d4());
        assert!((1..=4).all(|a| kappa(&empty, a) == 0));
    }

    #[test]
    fn involution() {
        let nu = running_example();
        let star = involute(&nu);
        assert_eq!(
            star,
            rc(vec![vec![(2, -1)], vec![(3, -1), (1, 0)], vec![(2, -1)], vec![(1, 0)]])
        );
        assert_ne!(star, nu);
        assert_eq!(involute(&star), nu);
        assert_eq!(star.weight(), nu.weight());
        let empty = RiggedConfiguration::empty(d4());
        assert_eq!(involute(&empty), empty);
    }

    #[test]
    fn conjugation_on_running_example() {
        let nu = running_example();
        for a in 1..=4 {
            assert_eq!(f_star(&nu, a), involute(&f(&involute(&nu), a)));
            assert_eq!(e_star(&nu, a), e(&involute(&nu), a).map(|x| involute(&x)));
        }
    }

    #[test]
    fn kappa_one_preserves_other_epsilon() {
        let nu = running_example();
        assert_eq!(kappa(&nu, 3), 1);
        assert_eq!(epsilon_star(&f(&nu, 3), 3), epsilon_star(&nu, 3));
        assert_eq!(epsilon(&f_star(&nu, 3), 3), epsilon(&nu, 3));
    }

    #[test]
    fn kappa_two_commutes() {
        let nu = running_example();
        assert_eq!(kappa(&nu, 4), 2);
        let a = f(&f_star(&nu, 4), 4);
        let b = f_star(&f(&nu, 4), 4);
        assert_eq!(a, b);
        assert_eq!(
            a,
            rc(vec![vec![(2, 0)], vec![(3, -1), (1, -1)], vec![(2, 0)], vec![(3, -1)]])
        );
    }
}
