//! Exact computation with logarithmic derivation modules of plane curve
//! arrangements: Gröbner/syzygy engine, singularity invariants, freeness
//! certificates, and the addition pipeline for unions with a smooth curve.

pub mod arrfile;
pub mod error;
pub mod field;
pub mod groebner;
pub mod logtangent;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod report;
pub mod singcurve;
pub mod univar;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals, Scalar};
pub use monomial::{ModuleOrder, Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{Degree, Poly, QPoly, VarSet};
