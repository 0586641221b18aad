//! Normalized ideals of numerical semigroups and the posets they form.

pub mod error;
pub mod family;
pub mod ideal;
pub mod irreducible;
pub mod order;
pub mod semigroup;
pub mod verify;

pub use error::{Error, KunzViolation, Result};
pub use family::{antichain_count, principal_family, IdealFamily};
pub use ideal::{NormalizedIdeal, Residual};
pub use irreducible::{irreducibles, irreducibles_in, plus_irreducibles, IrreducibleKind};
pub use order::{
    Direction, Distributivity, OrderKind, OrderStructure, Sublattice, SublatticeShape,
};
pub use semigroup::{enumerate_by_genus, NumericalSemigroup};
pub use verify::{Status, VerificationReport, Witness};
