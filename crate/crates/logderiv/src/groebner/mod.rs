//! Gröbner bases, syzygies, Hilbert data, resolutions, and saturation.

pub mod engine;
pub mod hilbert;
pub mod ideal;
pub mod resolution;
pub mod submodule;
pub mod syzygy;

pub use engine::{buchberger, spair_reductions, GbOptions, ModuleGb, WElem, MAX_PAIRS_ENV};
pub use hilbert::{ambient_dim, binomial, monomial_quotient_numerator, standard_monomial_count, ZPoly};
pub use ideal::GradedIdeal;
pub use resolution::FreeResolution;
pub use submodule::GradedSubmodule;
pub use syzygy::{annihilates, syzygies, ModVec};
