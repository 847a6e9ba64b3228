//! A toolkit for finite quandles.
//!
//! A quandle is a set with two binary operations `◁` and `◁⁻¹` satisfying
//! idempotency, right invertibility and self-distributivity — the algebraic
//! shadow of group conjugation. This crate represents finite quandles as
//! validated Cayley tables on `{0..n-1}` and implements, exactly and
//! exhaustively at small orders:
//!
//! - orbits of the inner automorphism group and the reflection onto trivial
//!   quandles ([`orbit`]);
//! - the closure operator on subquandles induced by that reflection, with
//!   dense/closed predicates, the dense–closed factorization, and the
//!   connectedness/separation tests via the diagonal ([`closure`]);
//! - classification predicates: trivial, quasi-trivial, connected, and
//!   membership in the class of quandles with no non-trivial connected
//!   subquandle ([`classify`]);
//! - congruences, quotients, relation composition, and the closure operator
//!   on congruences given by composing with the orbit congruence
//!   ([`congruence`]);
//! - enumeration of all quandles of a given order up to isomorphism, with
//!   canonical forms ([`enumerate`]);
//! - a text format for tables ([`text`]) and an exhaustive verification
//!   harness for every law the crate claims ([`verify`]).
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to call concurrently.
//!
//! ```
//! use quandles::{closure, orbit, Quandle, Subset};
//!
//! let q = Quandle::from_rows(&[
//!     vec![0, 0, 1],
//!     vec![1, 1, 0],
//!     vec![2, 2, 2],
//! ])
//! .unwrap();
//! assert_eq!(orbit::orbits(&q).class_count(), 2);
//!
//! // The closure of {0} is the whole orbit {0, 1}, which is not dense.
//! let m = Subset::singleton(3, 0);
//! assert_eq!(closure::closure_sub(&q, &m).unwrap().members(), vec![0, 1]);
//! assert!(!closure::is_dense(&q, &m).unwrap());
//! ```

pub mod classify;
pub mod closure;
pub mod congruence;
pub mod enumerate;
mod error;
pub mod hom;
pub mod orbit;
pub mod quandle;
pub mod subset;
pub mod text;
mod uf;
pub mod verify;

pub use classify::Classification;
pub use congruence::{Congruence, Relation};
pub use error::{Axiom, Error, Result, Witness};
pub use hom::Hom;
pub use orbit::OrbitPartition;
pub use quandle::{Quandle, Sign, CARRIER_BOUND, EXHAUSTIVE_BOUND};
pub use subset::Subset;

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::quandle::Quandle;

    /// The three-element quandle in which one element swaps the other two:
    /// two orbits, quasi-trivial, not trivial.
    pub fn e3() -> Quandle {
        Quandle::from_rows(&[vec![0, 0, 1], vec![1, 1, 0], vec![2, 2, 2]]).unwrap()
    }

    /// The dihedral quandle on three elements: connected, `◁⁻¹ = ◁`.
    pub fn r3() -> Quandle {
        Quandle::from_rows(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap()
    }
}
