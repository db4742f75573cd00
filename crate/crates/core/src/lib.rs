//! Trace-form lattices `(𝒪, Trace(x·θ(y)))` of cyclotomic and quadratic
//! fields: exact construction, root-lattice recognition, discriminant groups
//! and machine checks of their classification.

pub mod cyclotomic;
pub mod discgroup;
pub mod exactalg;
pub mod lattice;
pub mod quadratic;
pub mod report;
pub mod roots;
pub mod theorems;

pub use cyclotomic::{gram_trace_form, CycloElement, CyclotomicRing, Involution, RamificationData};
pub use exactalg::{IntMatrix, RatMatrix};
pub use lattice::{DiscGroup, GramLattice};
pub use quadratic::QuadField;
pub use roots::{Classification, EnumerationBudget, RootDecomposition, RootType, ShortVectorSet};
pub use theorems::{ClassificationRecord, FieldKind, FieldSpec};
