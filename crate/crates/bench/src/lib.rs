//! Fixture builders shared by the benchmarks.

use quandles::{Quandle, Subset};

/// Product of two dihedral quandles; orders multiply.
pub fn dihedral_product(a: usize, b: usize) -> Quandle {
    Quandle::dihedral(a)
        .product(&Quandle::dihedral(b))
        .expect("bench fixtures stay within the carrier bound")
}

/// A subquandle generated by one element of the product.
pub fn generated_singleton(q: &Quandle, x: usize) -> Subset {
    quandles::subset::generated_subquandle(q, &Subset::singleton(q.order(), x))
}
