use std::fmt;

use thiserror::Error;

/// The three quandle axioms, named in validation errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `x ◁ x = x` (idempotency).
    A1,
    /// Every right translation `x ↦ x ◁ y` is a bijection (right invertibility).
    A2,
    /// `(x ◁ y) ◁ z = (x ◁ z) ◁ (y ◁ z)` and its `◁⁻¹` mirror (self-distributivity).
    A3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::A1 => write!(f, "A1"),
            Axiom::A2 => write!(f, "A2"),
            Axiom::A3 => write!(f, "A3"),
        }
    }
}

/// First failing instance of a law, in lexicographic scan order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub x: usize,
    pub y: usize,
    pub z: Option<usize>,
}

impl Witness {
    pub fn pair(x: usize, y: usize) -> Self {
        Witness { x, y, z: None }
    }

    pub fn triple(x: usize, y: usize, z: usize) -> Self {
        Witness { x, y, z: Some(z) }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.z {
            Some(z) => write!(f, "({}, {}, {})", self.x, self.y, z),
            None => write!(f, "({}, {})", self.x, self.y),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry at ({x}, {y}) is {value}, outside the carrier 0..{order}")]
    EntryOutOfRange {
        x: usize,
        y: usize,
        value: usize,
        order: usize,
    },

    #[error("axiom {axiom} fails at {witness}")]
    AxiomViolation { axiom: Axiom, witness: Witness },

    #[error("supplied inverse table disagrees with the column inverse at ({x}, {y})")]
    InverseMismatch { x: usize, y: usize },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("map sends {x} to {value}, outside the target carrier")]
    MapOutOfRange { x: usize, value: usize },

    #[error("map does not preserve the operations at {witness}")]
    NotHomomorphism { witness: Witness },

    #[error("subset is not closed under the operations at ({a}, {b})")]
    NotSubquandle { a: usize, b: usize },

    #[error("partition is not compatible with the operations: {a} ~ {b} but translates by {c} disagree")]
    NotCongruence { a: usize, b: usize, c: usize },

    #[error("pair set is not an equivalence relation near ({a}, {b})")]
    NotEquivalence { a: usize, b: usize },

    #[error("map is not surjective: {missing} has no preimage")]
    NotSurjective { missing: usize },

    #[error("relations live on different carriers: {left} vs {right}")]
    ParentMismatch { left: usize, right: usize },

    #[error("product carrier of order {order} exceeds the bound {bound}")]
    OverflowOrder { order: usize, bound: usize },

    #[error("exhaustive operation on order {order} exceeds the bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("component comparison map is not bijective")]
    WitnessNotBijective,

    #[error("not a partition of the carrier: {detail}")]
    InvalidPartition { detail: String },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
