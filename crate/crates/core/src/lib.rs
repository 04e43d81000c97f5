#![no_std]

extern crate alloc;

pub mod error;
pub mod groebner;
pub mod ideal;
pub mod infinity;
pub mod linear;
pub mod monomial;
pub mod parse;
pub mod polar;
pub mod poly;
pub mod projective;
pub mod rational;
pub mod transversality;
pub mod univariate;
pub mod zerodim;
pub mod ring;

pub use error::{Error, Result};
pub use groebner::{groebner_basis, Engine, GroebnerBasis, Ideal};
pub use linear::{sample_generic_form, CoordinateChange, LinearForm};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_linear_form, parse_polynomial};
pub use poly::Polynomial;
pub use rational::Rational;
pub use ring::Ring;
