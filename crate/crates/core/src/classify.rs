//! Classification predicates: trivial, quasi-trivial, connected on both
//! routes, separated, and membership in the class of quandles with no
//! non-trivial connected subquandle (the disconnectedness class paired with
//! the connected quandles under the constant-morphism Galois connection).

use crate::closure::{is_c_connected, is_c_separated};
use crate::error::Result;
use crate::orbit::{is_connected, orbits};
use crate::quandle::Quandle;
use crate::subset::all_subquandles;

/// Every row of the table is constant: `x ◁ y = x` for all `x, y`.
pub fn is_trivial(q: &Quandle) -> bool {
    q.elements()
        .all(|x| q.elements().all(|y| q.op(x, y) == x))
}

/// Every element is fixed by translation against every member of its own
/// orbit. The chain values reachable from `x` are exactly the orbit of `x`,
/// so the universally quantified chain condition reduces to this finite
/// check.
pub fn is_quasi_trivial(q: &Quandle) -> bool {
    let orb = orbits(q);
    q.elements().all(|x| {
        orb.classes()[orb.class_of_elem(x)]
            .iter()
            .all(|y| q.op(x, y) == x && q.inv_op(x, y) == x)
    })
}

/// Whether every connected subquandle of `q` has at most one element.
pub fn is_hereditarily_disconnected(q: &Quandle) -> Result<bool> {
    for s in all_subquandles(q)? {
        if s.len() <= 1 {
            continue;
        }
        let induced = q.induced(&s).expect("enumerated subsets are subquandles");
        if is_connected(&induced) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The full classification report for one quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub trivial: bool,
    pub quasi_trivial: bool,
    pub connected: bool,
    pub c_connected: bool,
    pub c_separated: bool,
    /// No connected subquandle has more than one element.
    pub in_z: bool,
    pub orbit_count: usize,
}

pub fn classify(q: &Quandle) -> Result<Classification> {
    Ok(Classification {
        trivial: is_trivial(q),
        quasi_trivial: is_quasi_trivial(q),
        connected: is_connected(q),
        c_connected: is_c_connected(q)?,
        c_separated: is_c_separated(q)?,
        in_z: is_hereditarily_disconnected(q)?,
        orbit_count: orbits(q).class_count(),
    })
}
