//! Finite quandles as validated Cayley tables.
//!
//! A quandle is a set with two binary operations `◁` and `◁⁻¹` satisfying
//! idempotency (A1), right invertibility (A2) and self-distributivity (A3).
//! The carrier is always `{0..n-1}`; the `◁⁻¹` table is derived from the
//! column permutations rather than user-supplied, since (A2) determines it.

use crate::error::{Axiom, Error, Result, Witness};
use crate::subset::{require_subquandle, Subset};

/// Largest carrier a constructed quandle may have. Products exceeding this
/// are rejected rather than silently truncated.
pub const CARRIER_BOUND: usize = 1024;

/// Largest order for which exhaustive subset enumeration is offered; subsets
/// of such carriers fit in one machine word.
pub const EXHAUSTIVE_BOUND: usize = 12;

/// Direction of one chain step: `◁` or `◁⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A finite quandle on the carrier `{0..order-1}`.
///
/// Equality and hashing are structural (same order, same table), so distinct
/// but equal-labelled quandles compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quandle {
    order: usize,
    table: Vec<usize>, // row-major: table[x * order + y] = x ◁ y
    inv: Vec<usize>,   // inv[x * order + y] = x ◁⁻¹ y
}

impl Quandle {
    /// Validate a table given as rows and build the quandle.
    ///
    /// All three axiom families are checked exhaustively; the first failing
    /// instance in lexicographic scan order is reported.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Quandle> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Quandle::from_flat(n, flat)
    }

    /// Validate a flat row-major table and build the quandle.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Quandle> {
        let n = order;
        if table.len() != n * n {
            return Err(Error::LengthMismatch {
                expected: n * n,
                got: table.len(),
            });
        }
        for x in 0..n {
            for y in 0..n {
                let v = table[x * n + y];
                if v >= n {
                    return Err(Error::EntryOutOfRange {
                        x,
                        y,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        // (A1) the diagonal is the identity.
        for x in 0..n {
            if table[x * n + x] != x {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::A1,
                    witness: Witness::pair(x, x),
                });
            }
        }
        // (A2) every column is a permutation. The witness is the first (x, y)
        // in lexicographic order whose column value repeats an earlier row.
        let mut seen = vec![false; n * n]; // seen[y * n + v]
        for x in 0..n {
            for y in 0..n {
                let v = table[x * n + y];
                if seen[y * n + v] {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::A2,
                        witness: Witness::pair(x, y),
                    });
                }
                seen[y * n + v] = true;
            }
        }
        // Invert each column.
        let mut inv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                inv[table[x * n + y] * n + y] = x;
            }
        }
        // (A3) self-distributivity for ◁ and its mirror for ◁⁻¹.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = table[table[x * n + y] * n + z];
                    let rhs = table[table[x * n + z] * n + table[y * n + z]];
                    let lhs_inv = inv[inv[x * n + y] * n + z];
                    let rhs_inv = inv[inv[x * n + z] * n + inv[y * n + z]];
                    if lhs != rhs || lhs_inv != rhs_inv {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::A3,
                            witness: Witness::triple(x, y, z),
                        });
                    }
                }
            }
        }
        Ok(Quandle {
            order: n,
            table,
            inv,
        })
    }

    /// Like [`Quandle::from_flat`], but with a caller-supplied `◁⁻¹` table,
    /// which is checked against the column inverse and rejected on mismatch.
    pub fn from_flat_with_inverse(order: usize, table: Vec<usize>, inv: Vec<usize>) -> Result<Quandle> {
        let q = Quandle::from_flat(order, table)?;
        if inv.len() != order * order {
            return Err(Error::LengthMismatch {
                expected: order * order,
                got: inv.len(),
            });
        }
        for x in 0..order {
            for y in 0..order {
                if inv[x * order + y] != q.inv[x * order + y] {
                    return Err(Error::InverseMismatch { x, y });
                }
            }
        }
        Ok(q)
    }

    /// The trivial quandle: `x ◁ y = x` for all `x, y`.
    pub fn trivial(order: usize) -> Quandle {
        let mut table = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                table[x * order + y] = x;
            }
        }
        Quandle {
            order,
            inv: table.clone(),
            table,
        }
    }

    /// The dihedral quandle on `{0..n-1}`: `x ◁ y = 2y − x (mod n)`.
    pub fn dihedral(order: usize) -> Quandle {
        let n = order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = (2 * y % n + n - x) % n;
            }
        }
        Quandle::from_flat(n, table).expect("dihedral tables satisfy the axioms")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `x ◁ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// `x ◁⁻¹ y`.
    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv[x * self.order + y]
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| self.table[x * self.order..(x + 1) * self.order].to_vec())
            .collect()
    }

    /// Left-fold a signed chain of operations onto `x`; the empty chain
    /// returns `x`.
    pub fn chain(&self, x: usize, steps: &[(Sign, usize)]) -> usize {
        steps.iter().fold(x, |acc, &(sign, y)| match sign {
            Sign::Plus => self.op(acc, y),
            Sign::Minus => self.inv_op(acc, y),
        })
    }

    /// Componentwise product, with pairs `(i, j)` encoded as `i * n2 + j`.
    /// The encoding is part of the public contract, so callers can name
    /// product elements.
    pub fn product(&self, other: &Quandle) -> Result<Quandle> {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        if n > CARRIER_BOUND {
            return Err(Error::OverflowOrder {
                order: n,
                bound: CARRIER_BOUND,
            });
        }
        let mut table = vec![0; n * n];
        let mut inv = vec![0; n * n];
        for i1 in 0..n1 {
            for j1 in 0..n2 {
                let a = i1 * n2 + j1;
                for i2 in 0..n1 {
                    for j2 in 0..n2 {
                        let b = i2 * n2 + j2;
                        table[a * n + b] = self.op(i1, i2) * n2 + other.op(j1, j2);
                        inv[a * n + b] = self.inv_op(i1, i2) * n2 + other.inv_op(j1, j2);
                    }
                }
            }
        }
        Ok(Quandle { order: n, table, inv })
    }

    /// Transport the table along a carrier permutation: the result has
    /// `σ(x) ◁ σ(y) = σ(x ◁ y)`, so it is isomorphic to `self` via `σ`.
    pub fn relabel(&self, perm: &[usize]) -> Quandle {
        let n = self.order;
        assert_eq!(perm.len(), n);
        let mut table = vec![0; n * n];
        let mut inv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)];
                inv[perm[x] * n + perm[y]] = perm[self.inv_op(x, y)];
            }
        }
        Quandle { order: n, table, inv }
    }

    /// The quandle induced on a subquandle, with the members re-indexed in
    /// ascending order (member `k` of the result is the `k`-th smallest
    /// element of `s`).
    pub fn induced(&self, s: &Subset) -> Result<Quandle> {
        require_subquandle(self, s)?;
        let elems = s.members();
        let mut index = vec![usize::MAX; self.order];
        for (k, &x) in elems.iter().enumerate() {
            index[x] = k;
        }
        let m = elems.len();
        let mut table = vec![0; m * m];
        let mut inv = vec![0; m * m];
        for (a, &x) in elems.iter().enumerate() {
            for (b, &y) in elems.iter().enumerate() {
                table[a * m + b] = index[self.op(x, y)];
                inv[a * m + b] = index[self.inv_op(x, y)];
            }
        }
        Ok(Quandle { order: m, table, inv })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e3, r3};

    #[test]
    fn e3_is_valid_and_self_inverse() {
        let q = e3();
        assert_eq!(q.order(), 3);
        assert_eq!(q.op(0, 2), 1);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(q.op(x, y), q.inv_op(x, y));
            }
        }
    }

    #[test]
    fn one_element_is_valid() {
        let q = Quandle::from_rows(&[vec![0]]).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn empty_quandle_is_valid() {
        let q = Quandle::from_flat(0, vec![]).unwrap();
        assert_eq!(q.order(), 0);
    }

    #[test]
    fn dihedral_r3_matches_table() {
        let q = r3();
        assert_eq!(q, Quandle::dihedral(3));
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(q.op(x, y), q.inv_op(x, y));
            }
        }
    }

    #[test]
    fn a1_violation_reported_first() {
        let err = Quandle::from_rows(&[
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![2, 2, 1],
        ])
        .unwrap_err();
        assert_eq!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::A1,
                witness: Witness::pair(2, 2),
            }
        );
    }

    #[test]
    fn a2_violation_on_constant_column() {
        // Diagonal is fine but column 0 sends both rows to 0.
        let err = Quandle::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::A2,
                witness: Witness::pair(1, 0),
            }
        );
    }

    #[test]
    fn a3_violation_witnessed() {
        // Columns are permutations fixing their index but conjugation fails:
        // ρ_0 = (12), ρ_1 = (02), ρ_2 = id.
        let err = Quandle::from_rows(&[
            vec![0, 2, 0],
            vec![2, 1, 1],
            vec![1, 0, 2],
        ])
        .unwrap_err();
        match err {
            Error::AxiomViolation { axiom: Axiom::A3, .. } => {}
            other => panic!("expected A3 violation, got {other:?}"),
        }
    }

    #[test]
    fn entry_out_of_range() {
        let err = Quandle::from_rows(&[vec![0, 3], vec![1, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::EntryOutOfRange {
                x: 0,
                y: 1,
                value: 3,
                order: 2,
            }
        );
    }

    #[test]
    fn supplied_inverse_checked() {
        let q = e3();
        let ok = Quandle::from_flat_with_inverse(3, q.flat_table().to_vec(), q.inv.clone());
        assert!(ok.is_ok());
        let mut bad = q.inv.clone();
        bad.swap(2, 5); // break (0,2) and (1,2)
        let err = Quandle::from_flat_with_inverse(3, q.flat_table().to_vec(), bad).unwrap_err();
        assert_eq!(err, Error::InverseMismatch { x: 0, y: 2 });
    }

    #[test]
    fn chain_examples() {
        let q = e3();
        assert_eq!(q.chain(0, &[(Sign::Plus, 2)]), 1);
        assert_eq!(q.chain(0, &[]), 0);
        let d = r3();
        assert_eq!(d.chain(0, &[(Sign::Plus, 1), (Sign::Plus, 1)]), 0);
    }

    #[test]
    fn product_componentwise() {
        let q = r3().product(&e3()).unwrap();
        assert_eq!(q.order(), 9);
        // (0,0) ◁ (1,2) = (0◁1, 0◁2) = (2, 1), pairs encoded as i·n2 + j
        assert_eq!(q.op(0, 5), 7);
        // products revalidate cleanly
        assert!(Quandle::from_flat(9, q.flat_table().to_vec()).is_ok());
    }

    #[test]
    fn product_with_unit_is_isomorphic() {
        let q = e3();
        let p = q.product(&Quandle::trivial(1)).unwrap();
        assert_eq!(p, q); // encoding i * 1 + 0 = i keeps the table identical
        assert_eq!(e3().product(&e3()).unwrap().order(), 9);
    }

    #[test]
    fn product_bound_enforced() {
        let a = Quandle::trivial(64);
        let b = Quandle::trivial(64);
        assert!(matches!(
            a.product(&b),
            Err(Error::OverflowOrder { order: 4096, .. })
        ));
    }

    #[test]
    fn induced_on_closed_pair() {
        let q = e3();
        let s = Subset::from_members(3, [0, 1]);
        let ind = q.induced(&s).unwrap();
        assert_eq!(ind, Quandle::trivial(2));
        let bad = Subset::from_members(3, [0, 2]);
        assert!(matches!(q.induced(&bad), Err(Error::NotSubquandle { a: 0, b: 2 })));
    }

    #[test]
    fn relabel_transports() {
        let q = e3();
        let swapped = q.relabel(&[1, 0, 2]);
        for x in 0..3 {
            for y in 0..3 {
                let perm = [1, 0, 2];
                assert_eq!(swapped.op(perm[x], perm[y]), perm[q.op(x, y)]);
            }
        }
    }

    #[test]
    fn a2_round_trip() {
        for q in [e3(), r3(), Quandle::dihedral(5), Quandle::trivial(4)] {
            for x in q.elements() {
                for y in q.elements() {
                    assert_eq!(q.inv_op(q.op(x, y), y), x);
                    assert_eq!(q.op(q.inv_op(x, y), y), x);
                }
            }
        }
    }
}
