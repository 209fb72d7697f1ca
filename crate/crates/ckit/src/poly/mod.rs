//! Exact polynomial arithmetic over Z, Q and cyclotomic fields.

mod cyclo;
mod factor;
mod int_poly;
mod laurent;
mod mod_poly;
mod norm;
mod rat_poly;
pub mod sturm;

pub use cyclo::{cyclotomic_poly, eval_cyclotomic, CycloElement, CycloPoly};
pub use factor::{factor_rational, fox_milnor_form, min_concordant_degree, SymmetricFactorization};
pub use int_poly::IntPoly;
pub use laurent::{normalize_alexander, LaurentPoly};
pub use mod_poly::{factor_squarefree, ModPoly};
pub use norm::norm_np;
pub(crate) use norm::lagrange_int as interpolate_int;
pub use rat_poly::RatPoly;
