//! The closure operator on subquandles induced by the component reflector:
//! the closure of a subquandle is the union of the orbits it touches.
//! Derived notions: dense and closed subquandles, the dense–closed
//! factorization, weak heredity at a subobject, and the connectedness and
//! separation predicates computed from the diagonal of a square.
//!
//! `is_c_connected` and `is_c_separated` are computed definitionally, via the
//! product and the diagonal, not via their one-orbit/triviality
//! characterizations; the characterizations are verified as properties so
//! they stay falsifiable.

use crate::error::Result;
use crate::orbit::{orbits, OrbitPartition};
use crate::quandle::Quandle;
use crate::subset::{generated_subquandle, require_subquandle, Subset};

/// Union of the orbit classes that meet `m`, for a precomputed partition.
pub fn closure_sub_in(orb: &OrbitPartition, m: &Subset) -> Subset {
    let mut out = Subset::empty(orb.parent_order());
    for class in orb.classes() {
        if class.intersects(m) {
            out.union_with(class);
        }
    }
    out
}

/// Closure of a subquandle: the union of all orbits meeting it. The closure
/// of the empty subquandle is empty.
pub fn closure_sub(q: &Quandle, m: &Subset) -> Result<Subset> {
    require_subquandle(q, m)?;
    Ok(closure_sub_in(&orbits(q), m))
}

/// A subquandle is dense when its closure is the whole carrier.
pub fn is_dense(q: &Quandle, m: &Subset) -> Result<bool> {
    Ok(closure_sub(q, m)? == Subset::full(q.order()))
}

/// A subquandle is closed when it equals its closure.
pub fn is_closed(q: &Quandle, m: &Subset) -> Result<bool> {
    Ok(&closure_sub(q, m)? == m)
}

/// The dense–closed factorization of a subquandle `m ⊆ q`: `m` re-indexed
/// inside the quandle induced on its closure, then the closure inside `q`.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// Closure of the subquandle in the ambient quandle.
    pub outer: Subset,
    /// The quandle induced on `outer`, members re-indexed in ascending order.
    pub induced: Quandle,
    /// The original subquandle, re-indexed into `induced`'s carrier.
    pub inner: Subset,
}

pub fn dense_closed_factorization(q: &Quandle, m: &Subset) -> Result<Factorization> {
    let outer = closure_sub(q, m)?;
    let induced = q.induced(&outer)?;
    let elems = outer.members();
    let inner = Subset::from_members(
        elems.len(),
        m.iter().map(|x| {
            elems
                .binary_search(&x)
                .expect("members of m lie inside the closure")
        }),
    );
    Ok(Factorization {
        outer,
        induced,
        inner,
    })
}

/// Whether `m` is dense in its own closure, i.e. whether the first leg of
/// the dense–closed factorization is dense.
pub fn weakly_hereditary_at(q: &Quandle, m: &Subset) -> Result<bool> {
    let f = dense_closed_factorization(q, m)?;
    is_dense(&f.induced, &f.inner)
}

fn diagonal(q: &Quandle) -> Subset {
    let n = q.order();
    Subset::from_members(n * n, q.elements().map(|x| x * n + x))
}

/// Whether the diagonal is dense in the square, computed from the
/// definition. The diagonal is itself a subquandle, so generating it is a
/// no-op; this is asserted.
pub fn is_c_connected(q: &Quandle) -> Result<bool> {
    let p = q.product(q)?;
    let diag = diagonal(q);
    let generated = generated_subquandle(&p, &diag);
    assert_eq!(generated, diag, "the diagonal generates itself");
    is_dense(&p, &generated)
}

/// Whether the diagonal is closed in the square, computed from the
/// definition.
pub fn is_c_separated(q: &Quandle) -> Result<bool> {
    let p = q.product(q)?;
    is_closed(&p, &diagonal(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures::{e3, r3};

    #[test]
    fn closure_of_singletons_in_e3() {
        let q = e3();
        assert_eq!(
            closure_sub(&q, &Subset::singleton(3, 0)).unwrap(),
            Subset::from_members(3, [0, 1])
        );
        assert_eq!(
            closure_sub(&q, &Subset::singleton(3, 2)).unwrap(),
            Subset::singleton(3, 2)
        );
        assert!(closure_sub(&q, &Subset::empty(3)).unwrap().is_empty());
    }

    #[test]
    fn closure_requires_a_subquandle() {
        let q = e3();
        let err = closure_sub(&q, &Subset::from_members(3, [0, 2])).unwrap_err();
        assert!(matches!(err, Error::NotSubquandle { .. }));
    }

    #[test]
    fn dense_and_closed_flags() {
        let q = e3();
        assert!(!is_dense(&q, &Subset::singleton(3, 0)).unwrap());
        assert!(!is_closed(&q, &Subset::singleton(3, 0)).unwrap());
        assert!(is_closed(&q, &Subset::singleton(3, 2)).unwrap());
        assert!(is_dense(&r3(), &Subset::singleton(3, 0)).unwrap());
    }

    #[test]
    fn factorization_of_the_worked_example() {
        let q = e3();
        let f = dense_closed_factorization(&q, &Subset::singleton(3, 0)).unwrap();
        assert_eq!(f.outer, Subset::from_members(3, [0, 1]));
        assert_eq!(f.induced, Quandle::trivial(2));
        assert_eq!(f.inner, Subset::singleton(2, 0));
    }

    #[test]
    fn factorization_of_a_closed_subquandle() {
        let q = e3();
        let f = dense_closed_factorization(&q, &Subset::singleton(3, 2)).unwrap();
        assert_eq!(f.inner, Subset::full(1));
    }

    #[test]
    fn factorization_in_a_connected_quandle() {
        let f = dense_closed_factorization(&r3(), &Subset::singleton(3, 0)).unwrap();
        assert_eq!(f.outer, Subset::full(3));
        assert_eq!(f.induced, r3());
        assert_eq!(f.inner, Subset::singleton(3, 0));
    }

    #[test]
    fn weak_heredity() {
        let q = e3();
        assert!(!weakly_hereditary_at(&q, &Subset::singleton(3, 0)).unwrap());
        assert!(weakly_hereditary_at(&q, &Subset::full(3)).unwrap());
        assert!(weakly_hereditary_at(&r3(), &Subset::singleton(3, 0)).unwrap());
    }

    #[test]
    fn c_connected_matches_orbit_count_on_fixtures() {
        assert!(is_c_connected(&r3()).unwrap());
        assert!(is_c_connected(&Quandle::trivial(1)).unwrap());
        assert!(!is_c_connected(&e3()).unwrap());
    }

    #[test]
    fn c_separated_matches_triviality_on_fixtures() {
        assert!(is_c_separated(&Quandle::trivial(4)).unwrap());
        assert!(is_c_separated(&Quandle::trivial(1)).unwrap());
        assert!(!is_c_separated(&e3()).unwrap());
        assert!(!is_c_separated(&r3()).unwrap());
    }

    #[test]
    fn diagonal_closure_in_the_square_by_brute_force() {
        // Oracle for the separation example: compute the closure of the
        // diagonal in e3 × e3 directly from the orbit partition of the square.
        let q = e3();
        let p = q.product(&q).unwrap();
        let closure = closure_sub(&p, &diagonal(&q)).unwrap();
        let mut expect = Subset::empty(9);
        for i in [0, 1] {
            for j in [0, 1] {
                expect.insert(i * 3 + j);
            }
        }
        expect.insert(2 * 3 + 2);
        assert_eq!(closure, expect);
    }
}
