//! Exact computations in the hyperoctahedral groups W_n: signed permutations,
//! signed compositions, the generalized descent algebra, its characters, the
//! signed Robinson–Schensted correspondence, the Hopf algebra of signed
//! permutations and the characteristic map to symmetric functions.

pub mod algebra;
pub mod characters;
pub mod comp;
pub mod cosets;
pub mod error;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod perm;
pub mod rsk;
pub mod symfun;
pub mod tables;
pub mod verify;

pub use comp::{Bip, Partition, SComp};
pub use error::{Error, Result};
pub use perm::{GenElem, SignedPerm};

/// Exact rational scalar used for every coefficient in the crate.
pub type Rat = num_rational::BigRational;

/// Integer as a [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `p/q` as a [`Rat`].
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}
