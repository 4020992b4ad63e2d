//! Rigged configurations as a model of the crystals `B(infinity)` and
//! `B(lambda)` for symmetrizable Kac-Moody algebras, with both the ordinary and
//! the star crystal structures.
//!
//! Node labels are 1-based throughout. Operators panic on labels outside the
//! index set, like slice indexing; the word and document entry points validate
//! and return errors instead.

pub mod cartan;
pub mod crystal;
pub mod explorer;
pub mod folding;
pub mod hw;
pub mod io;
pub mod render;
pub mod rigged;
pub mod star;

pub use cartan::{CartanDatum, CartanError, CartanSpec, Weight};
pub use crystal::{Direction, Structure};
pub use rigged::{RcError, RiggedConfiguration, RiggedPartition, Row};

#[cfg(test)]
pub(crate) mod fixtures {
    use std::sync::Arc;

    use crate::{CartanDatum, RiggedConfiguration};

    pub fn d4() -> Arc<CartanDatum> {
        Arc::new(CartanDatum::finite('D', 4).unwrap())
    }

    /// `f_2^* f_3^* f_1^* f_2^* f_2^* f_4^* f_3^* f_1^* f_2^*` applied to the
    /// generator in type `D_4`.
    pub fn running_example() -> RiggedConfiguration {
        RiggedConfiguration::from_rows(
            d4(),
            vec![vec![(2, 0)], vec![(3, -2), (1, -1)], vec![(2, 0)], vec![(1, 0)]],
        )
        .unwrap()
    }
}
