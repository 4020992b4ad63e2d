use std::sync::Arc;

use rigcon::crystal::{apply_word, epsilon, f};
use rigcon::explorer::{bfs, check, Crystal, Property};
use rigcon::folding::{builtin_foldings, vacancy_scaling_failure, virtualize};
use rigcon::star::{epsilon_star, f_star, involute, kappa};
use rigcon::{CartanDatum, Direction, RiggedConfiguration, Structure};

fn d4() -> Arc<CartanDatum> {
    Arc::new(CartanDatum::parse_type("D4").unwrap())
}

fn nustar() -> RiggedConfiguration {
    let empty = RiggedConfiguration::empty(d4());
    apply_word(&empty, &[2, 1, 3, 4, 2, 2, 1, 3, 2], Structure::Star, Direction::F)
        .unwrap()
        .unwrap()
}

#[test]
fn d4_session() {
    let nu = nustar();
    assert_eq!(
        nu.to_string(),
        "-1[ ][ ]0   -3[ ][ ][ ]-2   -1[ ][ ]0   0[ ]0\n            -1[ ]-1                          "
    );
    let down = "-1[ ][ ]0   -5[ ][ ][ ][ ]-3   -1[ ][ ]0   0[ ]0\n            -1[ ]-1";
    assert_eq!(f_star(&nu, 2).to_string().trim_end(), down);
    assert_eq!(f(&nu, 2).to_string().trim_end(), down);
    let jumps: Vec<i64> = (1..=4).map(|a| kappa(&nu, a)).collect();
    assert_eq!(jumps, [1, 0, 1, 2]);
    assert_eq!(epsilon_star(&f(&nu, 3), 3), epsilon_star(&nu, 3));
    assert_eq!(epsilon(&f_star(&nu, 3), 3), epsilon(&nu, 3));
    let both = f_star(&f(&nu, 4), 4);
    assert_eq!(both, f(&f_star(&nu, 4), 4));
    assert_eq!(
        both.to_string(),
        "-1[ ][ ]0   -1[ ][ ][ ]-1   -1[ ][ ]0   -2[ ][ ][ ]-1\n            -1[ ]-1                                  "
    );
}

#[test]
fn small_corpora_pass_every_check() {
    for t in ["A2", "B2", "C3", "G2"] {
        let report = check(&Arc::new(CartanDatum::parse_type(t).unwrap()), 4, &Property::ALL);
        assert!(report.all_passed(), "{t}: {report:?}");
    }
    let affine = Arc::new(CartanDatum::from_gcm(vec![vec![2, -2], vec![-2, 2]]).unwrap());
    assert!(check(&affine, 5, &Property::BICRYSTAL).all_passed());
    let hyperbolic = Arc::new(CartanDatum::from_gcm(vec![vec![2, -3], vec![-3, 2]]).unwrap());
    assert!(check(&hyperbolic, 4, &Property::ALL).all_passed());
}

#[test]
fn foldings_on_corpora() {
    for fo in builtin_foldings().unwrap() {
        let g = bfs(&Crystal::Infinity(fo.source().clone()), &[Structure::Ordinary], Some(4));
        for x in g.nodes() {
            assert_eq!(vacancy_scaling_failure(x, &fo), Ok(None), "{}: {x}", fo.name());
            assert_eq!(
                involute(&virtualize(x, &fo).unwrap()),
                virtualize(&involute(x), &fo).unwrap()
            );
        }
    }
}
