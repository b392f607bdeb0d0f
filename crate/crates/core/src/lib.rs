//! Finite determinacy of matrices over the local ring `k[x_1..x_p]` at the
//! origin: standard bases, determinantal and annihilator ideals, tangent
//! modules to group orbits, and a truncated-jet oracle to check them against.

pub mod error;
pub mod field;
pub mod monomial;
pub mod ring;
pub mod terms;
pub mod poly;
pub mod parse;
pub mod sbasis;
pub mod ideal;
pub mod matrix;
pub mod jets;
pub mod determinacy;
pub mod random;

pub use error::{Error, Result};
pub use field::{Field, FieldElem};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::{Ring, RingCtx};
pub use sbasis::{ModuleElem, SBasis};
pub use ideal::{Decision, Ideal, RadicalAnswer, RadicalOptions};
pub use matrix::{PolyMatrix, Space};
pub use determinacy::{DerivationSet, DeterminacyReport, GroupBase, GroupSpec, Multiplier, Verdict};
