pub mod check;
pub mod critical;
pub mod error;
pub mod family;
pub mod implicit;
pub mod parse;
pub mod poly;
pub mod realroots;
pub mod reduce;
pub mod sample;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, RationalFunction, Var};
