use std::sync::Arc;

use proptest::prelude::*;
use rigcon::crystal::{apply_word, e, epsilon, f};
use rigcon::explorer::{check_element, Property};
use rigcon::folding::{builtin_foldings, vacancy_scaling_failure, virtualize};
use rigcon::hw::{epsilon_weight, tau};
use rigcon::render::{self, Style};
use rigcon::star::{e_star, epsilon_star, f_star, involute, kappa};
use rigcon::{io, CartanDatum, Direction, RiggedConfiguration, Structure, Weight};

const TYPES: [&str; 8] = ["A1", "A3", "B3", "C3", "D4", "G2", "F4", "E6"];

fn datum(t: &str) -> Arc<CartanDatum> {
    Arc::new(CartanDatum::parse_type(t).unwrap())
}

fn affine() -> Arc<CartanDatum> {
    Arc::new(CartanDatum::from_gcm(vec![vec![2, -2], vec![-2, 2]]).unwrap())
}

/// An element reached by a random mix of ordinary and star lowering operators.
fn element() -> impl Strategy<Value = RiggedConfiguration> {
    (
        0..=TYPES.len(),
        prop::collection::vec((0usize..8, any::<bool>()), 0..10),
    )
        .prop_map(|(t, word)| {
            let d = if t == TYPES.len() { affine() } else { datum(TYPES[t]) };
            let n = d.rank();
            word.into_iter().fold(RiggedConfiguration::empty(d), |x, (a, star)| {
                let a = a % n + 1;
                if star {
                    f_star(&x, a)
                } else {
                    f(&x, a)
                }
            })
        })
}

proptest! {
    #[test]
    fn pairing_is_linear(
        t in 0..TYPES.len(),
        u in prop::collection::vec(-5i64..5, 12),
        v in prop::collection::vec(-5i64..5, 12),
        k in -4i64..4,
    ) {
        let d = datum(TYPES[t]);
        let n = d.rank();
        let w1 = Weight { lambda_part: u[..n].to_vec(), root_part: u[6..6 + n].to_vec() };
        let w2 = Weight { lambda_part: v[..n].to_vec(), root_part: v[6..6 + n].to_vec() };
        let sum = &w1.scale(k) + &w2;
        for a in d.nodes() {
            prop_assert_eq!(
                d.pairing(a, &sum).unwrap(),
                k * d.pairing(a, &w1).unwrap() + d.pairing(a, &w2).unwrap()
            );
        }
    }

    #[test]
    fn normalize_and_equality(x in element(), y in element()) {
        prop_assert_eq!(x.normalize().normalize(), x.normalize());
        prop_assert_eq!(x.equals(&x), Ok(true));
        if x.same_datum(&y) {
            prop_assert_eq!(x.equals(&y), y.equals(&x));
        } else {
            prop_assert!(x.equals(&y).is_err());
        }
    }

    #[test]
    fn every_property_holds(x in element()) {
        for p in Property::ALL {
            prop_assert_eq!(check_element(&x, p), Ok(()), "{:?}", p);
        }
    }

    #[test]
    fn operators_invert(x in element(), a in 0usize..8) {
        let a = a % x.datum().rank() + 1;
        prop_assert_eq!(e(&f(&x, a), a), Some(x.clone()));
        prop_assert_eq!(e_star(&f_star(&x, a), a), Some(x.clone()));
        prop_assert_eq!(epsilon(&f(&x, a), a), epsilon(&x, a) + 1);
        prop_assert_eq!(epsilon_star(&f_star(&x, a), a), epsilon_star(&x, a) + 1);
        prop_assert!(kappa(&x, a) >= 0);
    }

    #[test]
    fn involution_swaps_statistics(x in element()) {
        let y = involute(&x);
        prop_assert_eq!(involute(&y), x.clone());
        prop_assert_eq!(tau(&x), epsilon_weight(&y));
        prop_assert_eq!(epsilon_weight(&x), tau(&y));
    }

    #[test]
    fn serializations_round_trip(x in element()) {
        let d = x.datum().clone();
        prop_assert_eq!(io::from_json(&io::to_json(&x)).unwrap(), x.clone());
        prop_assert_eq!(render::parse_horizontal(&render::horizontal(&x), d.clone()).unwrap(), x.clone());
        prop_assert_eq!(render::parse_text(&render::render(&x, Style::Vertical), d).unwrap(), x);
    }

    #[test]
    fn words_agree_with_single_steps(t in 0..TYPES.len(), word in prop::collection::vec(0usize..8, 0..8)) {
        let d = datum(TYPES[t]);
        let word: Vec<usize> = word.into_iter().map(|a| a % d.rank() + 1).collect();
        let empty = RiggedConfiguration::empty(d);
        let up = apply_word(&empty, &word, Structure::Star, Direction::F).unwrap().unwrap();
        let rev: Vec<usize> = word.iter().rev().copied().collect();
        prop_assert_eq!(apply_word(&up, &rev, Structure::Star, Direction::E).unwrap(), Some(empty));
        prop_assert_eq!(up.size(), word.len());
    }

    #[test]
    fn foldings_scale_vacancies(k in 0usize..5, word in prop::collection::vec((0usize..4, any::<bool>()), 0..8)) {
        let foldings = builtin_foldings().unwrap();
        let fo = &foldings[k];
        let n = fo.source().rank();
        let x = word.into_iter().fold(RiggedConfiguration::empty(fo.source().clone()), |x, (a, s)| {
            if s { f_star(&x, a % n + 1) } else { f(&x, a % n + 1) }
        });
        prop_assert_eq!(vacancy_scaling_failure(&x, fo), Ok(None));
        prop_assert_eq!(involute(&virtualize(&x, fo).unwrap()), virtualize(&involute(&x), fo).unwrap());
    }
}
