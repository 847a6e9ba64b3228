//! Subsets of a quandle carrier, and the subquandle operations on them:
//! closure under the operations (the generated subquandle) and exhaustive
//! enumeration of all subquandles of a small quandle.

use std::fmt;

use crate::error::{Error, Result};
use crate::quandle::{Quandle, EXHAUSTIVE_BOUND};

/// A subset of `{0..parent_order-1}`, stored as a bitset.
///
/// `Display` prints the members as a sorted comma list (`"0,1"`), the syntax
/// the command-line tools consume and emit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    parent_order: usize,
    blocks: Vec<u64>,
}

fn block_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl Subset {
    pub fn empty(parent_order: usize) -> Self {
        Subset {
            parent_order,
            blocks: vec![0; block_count(parent_order)],
        }
    }

    pub fn full(parent_order: usize) -> Self {
        let mut s = Subset::empty(parent_order);
        for x in 0..parent_order {
            s.insert(x);
        }
        s
    }

    pub fn singleton(parent_order: usize, x: usize) -> Self {
        let mut s = Subset::empty(parent_order);
        s.insert(x);
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(parent_order: usize, members: I) -> Self {
        let mut s = Subset::empty(parent_order);
        for x in members {
            s.insert(x);
        }
        s
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.parent_order && self.blocks[x >> 6] & (1 << (x & 63)) != 0
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.parent_order, "element {x} outside carrier");
        self.blocks[x >> 6] |= 1 << (x & 63);
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.parent_order).filter(|&x| self.contains(x))
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Subset) -> Subset {
        assert_eq!(self.parent_order, other.parent_order);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a | b)
            .collect();
        Subset {
            parent_order: self.parent_order,
            blocks,
        }
    }

    pub fn union_with(&mut self, other: &Subset) {
        assert_eq!(self.parent_order, other.parent_order);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        assert_eq!(self.parent_order, other.parent_order);
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.parent_order, other.parent_order);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// First pair `(a, b)` of members whose `◁` or `◁⁻¹` product escapes the
/// subset, in lexicographic order; `None` when the subset is a subquandle.
pub fn subquandle_witness(q: &Quandle, s: &Subset) -> Option<(usize, usize)> {
    assert_eq!(s.parent_order(), q.order());
    for a in s.iter() {
        for b in s.iter() {
            if !s.contains(q.op(a, b)) || !s.contains(q.inv_op(a, b)) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_subquandle(q: &Quandle, s: &Subset) -> bool {
    subquandle_witness(q, s).is_none()
}

pub(crate) fn require_subquandle(q: &Quandle, s: &Subset) -> Result<()> {
    match subquandle_witness(q, s) {
        None => Ok(()),
        Some((a, b)) => Err(Error::NotSubquandle { a, b }),
    }
}

/// Least subquandle containing `seed`: the fixpoint of closing the seed under
/// both operations. The empty seed yields the empty set.
pub fn generated_subquandle(q: &Quandle, seed: &Subset) -> Subset {
    assert_eq!(seed.parent_order(), q.order());
    let mut set = seed.clone();
    let mut work: Vec<usize> = set.members();
    while let Some(x) = work.pop() {
        // Pair the new element with everything present, in both roles.
        let present = set.members();
        for &y in &present {
            for v in [q.op(x, y), q.inv_op(x, y), q.op(y, x), q.inv_op(y, x)] {
                if !set.contains(v) {
                    set.insert(v);
                    work.push(v);
                }
            }
        }
    }
    set
}

/// Every subset closed under both operations, including the empty set,
/// in size-then-lexicographic order. Requires `q.order() <= EXHAUSTIVE_BOUND`
/// so the subsets fit a machine word.
pub fn all_subquandles(q: &Quandle) -> Result<Vec<Subset>> {
    let n = q.order();
    if n > EXHAUSTIVE_BOUND {
        return Err(Error::BoundExceeded {
            order: n,
            bound: EXHAUSTIVE_BOUND,
        });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let closed = (0..n).filter(|&a| mask & (1 << a) != 0).all(|a| {
            (0..n)
                .filter(|&b| mask & (1 << b) != 0)
                .all(|b| mask & (1 << q.op(a, b)) != 0 && mask & (1 << q.inv_op(a, b)) != 0)
        });
        if closed {
            out.push(Subset::from_members(
                n,
                (0..n).filter(|&x| mask & (1 << x) != 0),
            ));
        }
    }
    out.sort_by_key(|s| (s.len(), s.members()));
    Ok(out)
}
