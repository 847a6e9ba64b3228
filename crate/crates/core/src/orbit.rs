//! Orbits under the inner automorphism group, the component reflector onto
//! trivial quandles, and the unit of that reflection.
//!
//! The inner automorphism group itself is never materialized; only its orbit
//! partition is, computed by union-find over the translation edges
//! `x — x ◁ y`. Orbit indices are assigned by smallest member, ascending, so
//! the reflected carrier is deterministic across runs.

use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::quandle::Quandle;
use crate::subset::Subset;
use crate::uf::UnionFind;

/// The partition of a carrier into orbits of the inner automorphism group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitPartition {
    parent_order: usize,
    class_of: Vec<usize>,
    classes: Vec<Subset>,
}

impl OrbitPartition {
    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_of_elem(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }
}

/// Connected components of the graph with an edge `x — x ◁ y` for every pair.
/// The relation is symmetric because the translations are invertible.
pub fn orbits(q: &Quandle) -> OrbitPartition {
    let n = q.order();
    let mut uf = UnionFind::new(n);
    for x in 0..n {
        for y in 0..n {
            uf.union(x, q.op(x, y));
        }
    }
    let (class_of, count) = uf.class_of();
    let mut classes = vec![Subset::empty(n); count];
    for (x, &k) in class_of.iter().enumerate() {
        classes[k].insert(x);
    }
    OrbitPartition {
        parent_order: n,
        class_of,
        classes,
    }
}

/// The reflection of `q` into trivial quandles: the trivial quandle on the
/// orbit set, together with the unit map sending each element to its orbit.
pub fn pi0(q: &Quandle) -> (Quandle, Hom) {
    let orb = orbits(q);
    let components = Quandle::trivial(orb.class_count());
    let unit = Hom::validate(q.clone(), components.clone(), orb.class_of().to_vec())
        .expect("the orbit projection preserves the operations");
    (components, unit)
}

/// A quandle is connected when it has exactly one orbit. The empty quandle
/// has zero orbits and is not connected.
pub fn is_connected(q: &Quandle) -> bool {
    orbits(q).class_count() == 1
}

/// The canonical comparison map from the components of a product to the
/// product of the components, `[(x, y)] ↦ ([x], [y])`, validated to be a
/// bijective homomorphism.
///
/// Bijectivity holds for every pair of finite quandles; a
/// `WitnessNotBijective` error signals an implementation bug.
pub fn pi0_product_witness(q1: &Quandle, q2: &Quandle) -> Result<Hom> {
    let p = q1.product(q2)?;
    let (p_components, _) = pi0(&p);
    let o1 = orbits(q1);
    let o2 = orbits(q2);
    let target = Quandle::trivial(o1.class_count() * o2.class_count());
    let n2 = q2.order();
    let c2 = o2.class_count();
    let orb_p = orbits(&p);
    let map: Vec<usize> = orb_p
        .classes()
        .iter()
        .map(|class| {
            let rep = class.iter().next().expect("orbit classes are non-empty");
            o1.class_of_elem(rep / n2) * c2 + o2.class_of_elem(rep % n2)
        })
        .collect();
    let gamma = Hom::validate(p_components, target, map)
        .expect("maps between trivial quandles preserve the operations");
    if gamma.is_injective() && gamma.is_surjective() {
        Ok(gamma)
    } else {
        Err(Error::WitnessNotBijective)
    }
}
