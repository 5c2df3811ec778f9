//! Duoidal structures on `Vect` induced by bialgebras with two compatible
//! comultiplications, their Eilenberg–Moore lifts, duoidal R-matrices and
//! linear distributors.

pub mod arith;
pub mod bialg;
pub mod corpus;
pub mod duoidal;
pub mod lindist;
pub mod error;
pub mod monad_em;
pub mod report;
pub mod rmatrix;

pub use error::{Error, Result};
