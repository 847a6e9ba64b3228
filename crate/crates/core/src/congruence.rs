//! Congruences, quotients, relation composition, and the closure operator on
//! congruences induced by the component reflector: the closure of a
//! congruence is its composite with the orbit congruence, which the
//! permutation lemma makes a congruence again.
//!
//! A congruence is stored as a partition (a `class_of` array), which makes
//! well-definedness of quotients structural. Raw pair sets appear only in the
//! intermediate [`Relation`] type, because composites of equivalence
//! relations need not be equivalence relations in general.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::hom::Hom;
use crate::orbit::orbits;
use crate::quandle::Quandle;
use crate::uf::UnionFind;

/// A partition of a carrier, compatible with the operations of the quandle
/// it is validated against. Class indices are normalized to first-occurrence
/// order, so equal partitions compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Congruence {
    parent_order: usize,
    class_of: Vec<usize>,
    class_count: usize,
}

impl Congruence {
    /// The discrete congruence: every class a singleton.
    pub fn discrete(parent_order: usize) -> Self {
        Congruence {
            parent_order,
            class_of: (0..parent_order).collect(),
            class_count: parent_order,
        }
    }

    /// The total congruence: one class, or none on the empty carrier.
    pub fn total(parent_order: usize) -> Self {
        Congruence {
            parent_order,
            class_of: vec![0; parent_order],
            class_count: if parent_order == 0 { 0 } else { 1 },
        }
    }

    /// Build from any labelling of elements by classes; labels are
    /// renumbered in first-occurrence order.
    pub fn from_class_of(class_of: Vec<usize>) -> Self {
        let n = class_of.len();
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut normalized = vec![0; n];
        let mut next = 0;
        for (x, &raw) in class_of.iter().enumerate() {
            normalized[x] = match relabel.get(&raw) {
                Some(&k) => k,
                None => {
                    relabel.insert(raw, next);
                    next += 1;
                    next - 1
                }
            };
        }
        Congruence {
            parent_order: n,
            class_of: normalized,
            class_count: next,
        }
    }

    /// Build from explicit classes; every element of `0..parent_order` must
    /// appear exactly once.
    pub fn from_classes(parent_order: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut class_of = vec![usize::MAX; parent_order];
        for (k, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidPartition {
                    detail: "empty class".into(),
                });
            }
            for &x in class {
                if x >= parent_order {
                    return Err(Error::InvalidPartition {
                        detail: format!("element {x} outside the carrier 0..{parent_order}"),
                    });
                }
                if class_of[x] != usize::MAX {
                    return Err(Error::InvalidPartition {
                        detail: format!("element {x} appears twice"),
                    });
                }
                class_of[x] = k;
            }
        }
        if let Some(x) = class_of.iter().position(|&k| k == usize::MAX) {
            return Err(Error::InvalidPartition {
                detail: format!("element {x} missing"),
            });
        }
        Ok(Congruence::from_class_of(class_of))
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_of_elem(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Classes as sorted member lists, in class-index order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (x, &k) in self.class_of.iter().enumerate() {
            out[k].push(x);
        }
        out
    }

    /// The congruence as a set of ordered pairs.
    pub fn relation(&self) -> Relation {
        let mut pairs = BTreeSet::new();
        for a in 0..self.parent_order {
            for b in 0..self.parent_order {
                if self.same(a, b) {
                    pairs.insert((a, b));
                }
            }
        }
        Relation {
            parent_order: self.parent_order,
            pairs,
        }
    }

    /// Partition refinement order: every class of `self` lies inside a class
    /// of `other`.
    pub fn le(&self, other: &Congruence) -> bool {
        assert_eq!(self.parent_order, other.parent_order);
        let mut image = vec![usize::MAX; self.class_count];
        for (x, &k) in self.class_of.iter().enumerate() {
            if image[k] == usize::MAX {
                image[k] = other.class_of[x];
            } else if image[k] != other.class_of[x] {
                return false;
            }
        }
        true
    }

    /// Check compatibility with the operations of `q`: related elements stay
    /// related under every right and left translation. Compatibility with
    /// `◁⁻¹` follows on a finite carrier, since each translation permutes the
    /// finitely many related pairs.
    pub fn validate_on(&self, q: &Quandle) -> Result<()> {
        if self.parent_order != q.order() {
            return Err(Error::ParentMismatch {
                left: self.parent_order,
                right: q.order(),
            });
        }
        for a in 0..self.parent_order {
            for b in a + 1..self.parent_order {
                if !self.same(a, b) {
                    continue;
                }
                for c in 0..self.parent_order {
                    if !self.same(q.op(a, c), q.op(b, c)) || !self.same(q.op(c, a), q.op(c, b)) {
                        return Err(Error::NotCongruence { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Congruence {
    /// Classes as semicolon-separated comma lists, e.g. `0,1;2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, class) in self.classes().iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            for (i, x) in class.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// An arbitrary set of ordered pairs on a carrier; the intermediate type for
/// composition and joins.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    parent_order: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl Relation {
    pub fn empty(parent_order: usize) -> Self {
        Relation {
            parent_order,
            pairs: BTreeSet::new(),
        }
    }

    pub fn diagonal(parent_order: usize) -> Self {
        Relation {
            parent_order,
            pairs: (0..parent_order).map(|x| (x, x)).collect(),
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(parent_order: usize, iter: I) -> Self {
        let pairs: BTreeSet<_> = iter.into_iter().collect();
        for &(a, b) in &pairs {
            assert!(a < parent_order && b < parent_order, "pair outside carrier");
        }
        Relation { parent_order, pairs }
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Relational composite `{(a, c) | ∃b. (a, b) ∈ r and (b, c) ∈ s}`.
pub fn compose(r: &Relation, s: &Relation) -> Result<Relation> {
    if r.parent_order != s.parent_order {
        return Err(Error::ParentMismatch {
            left: r.parent_order,
            right: s.parent_order,
        });
    }
    let mut by_first: Vec<Vec<usize>> = vec![Vec::new(); s.parent_order];
    for &(b, c) in &s.pairs {
        by_first[b].push(c);
    }
    let mut pairs = BTreeSet::new();
    for &(a, b) in &r.pairs {
        for &c in &by_first[b] {
            pairs.insert((a, c));
        }
    }
    Ok(Relation {
        parent_order: r.parent_order,
        pairs,
    })
}

/// The congruence whose classes are the orbits of the inner automorphism
/// group: the kernel pair of the unit map onto the components.
pub fn inn_congruence(q: &Quandle) -> Congruence {
    let orb = orbits(q);
    Congruence {
        parent_order: q.order(),
        class_of: orb.class_of().to_vec(),
        class_count: orb.class_count(),
    }
}

/// Quotient quandle on the classes of a congruence, with the canonical
/// projection. Well-defined by compatibility.
pub fn quotient(q: &Quandle, theta: &Congruence) -> Result<(Quandle, Hom)> {
    theta.validate_on(q)?;
    let k = theta.class_count();
    let mut reps = vec![usize::MAX; k];
    for x in (0..q.order()).rev() {
        reps[theta.class_of_elem(x)] = x;
    }
    let mut table = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            table[a * k + b] = theta.class_of_elem(q.op(reps[a], reps[b]));
        }
    }
    let quot = Quandle::from_flat(k, table).expect("quotient tables satisfy the axioms");
    let proj = Hom::validate(q.clone(), quot.clone(), theta.class_of().to_vec())
        .expect("the quotient projection preserves the operations");
    Ok((quot, proj))
}

/// The kernel pair of a homomorphism: elements are related when their images
/// agree.
pub fn kernel_pair(f: &Hom) -> Congruence {
    Congruence::from_class_of(f.map().to_vec())
}

/// Least congruence containing a seed relation: the fixpoint of
/// reflexive-symmetric-transitive closure interleaved with translation
/// closure. Every merge enqueues the translated pairs of the two elements
/// actually merged; pairs already identified push nothing, which keeps the
/// worklist linear in the number of merges.
pub fn congruence_generated(q: &Quandle, seed: &Relation) -> Congruence {
    assert_eq!(seed.parent_order(), q.order());
    let n = q.order();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = seed.pairs().iter().copied().collect();
    while let Some((a, b)) = work.pop() {
        if !uf.union(a, b) {
            continue;
        }
        for c in 0..n {
            work.push((q.op(a, c), q.op(b, c)));
            work.push((q.op(c, a), q.op(c, b)));
            work.push((q.inv_op(a, c), q.inv_op(b, c)));
            work.push((q.inv_op(c, a), q.inv_op(c, b)));
        }
    }
    let (class_of, class_count) = uf.class_of();
    let cong = Congruence {
        parent_order: n,
        class_of,
        class_count,
    };
    debug_assert!(cong.validate_on(q).is_ok());
    cong
}

/// Whether a congruence permutes with the orbit congruence, comparing the
/// two composites as raw pair sets.
pub fn permutes_with_inn(q: &Quandle, r: &Congruence) -> Result<bool> {
    r.validate_on(q)?;
    let inn = inn_congruence(q).relation();
    let rel = r.relation();
    Ok(compose(&inn, &rel)? == compose(&rel, &inn)?)
}

/// Closure of a congruence for the component reflector: the composite of the
/// congruence with the orbit congruence, validated to be a congruence again.
/// Failure of that validation would signal an implementation bug, since the
/// two always permute.
pub fn effective_closure(q: &Quandle, r: &Congruence) -> Result<Congruence> {
    r.validate_on(q)?;
    let composed = compose(&r.relation(), &inn_congruence(q).relation())?;
    let mut uf = UnionFind::new(q.order());
    for &(a, b) in composed.pairs() {
        uf.union(a, b);
    }
    let (class_of, class_count) = uf.class_of();
    let cong = Congruence {
        parent_order: q.order(),
        class_of,
        class_count,
    };
    // The composite must already be the full equivalence it generates.
    if let Some(&(a, b)) = cong
        .relation()
        .pairs()
        .difference(composed.pairs())
        .next()
    {
        return Err(Error::NotEquivalence { a, b });
    }
    cong.validate_on(q)?;
    Ok(cong)
}

/// Supremum of two congruences: the congruence generated by the union of
/// their pair sets. For congruences this coincides with the plain partition
/// join, which is asserted.
pub fn join(q: &Quandle, r: &Congruence, s: &Congruence) -> Result<Congruence> {
    if r.parent_order() != s.parent_order() {
        return Err(Error::ParentMismatch {
            left: r.parent_order(),
            right: s.parent_order(),
        });
    }
    let n = q.order();
    assert_eq!(r.parent_order(), n);
    let seed = Relation::from_pairs(
        n,
        r.relation().pairs().iter().chain(s.relation().pairs()).copied(),
    );
    let generated = congruence_generated(q, &seed);

    let mut uf = UnionFind::new(n);
    for &(a, b) in seed.pairs() {
        uf.union(a, b);
    }
    let (class_of, class_count) = uf.class_of();
    let partition_join = Congruence {
        parent_order: n,
        class_of,
        class_count,
    };
    assert_eq!(
        generated, partition_join,
        "partition join of congruences stays compatible"
    );
    Ok(generated)
}

/// Inverse image of a congruence along a homomorphism: pull the class of the
/// image back to each element. Always a congruence.
pub fn preimage_congruence(f: &Hom, r: &Congruence) -> Congruence {
    assert_eq!(r.parent_order(), f.target().order());
    let cong = Congruence::from_class_of(f.map().iter().map(|&v| r.class_of_elem(v)).collect());
    debug_assert!(cong.validate_on(f.source()).is_ok());
    cong
}

/// Direct image of a congruence along a surjection: the congruence generated
/// on the target by the image pair set. Generation is applied even though
/// the images arising here are already closed; that fact is kept as a tested
/// property rather than assumed.
pub fn image_congruence(f: &Hom, r: &Congruence) -> Result<Congruence> {
    assert_eq!(r.parent_order(), f.source().order());
    let mut hit = vec![false; f.target().order()];
    for &v in f.map() {
        hit[v] = true;
    }
    if let Some(missing) = hit.iter().position(|&h| !h) {
        return Err(Error::NotSurjective { missing });
    }
    let seed = Relation::from_pairs(
        f.target().order(),
        r.relation()
            .pairs()
            .iter()
            .map(|&(a, b)| (f.apply(a), f.apply(b))),
    );
    Ok(congruence_generated(f.target(), &seed))
}

/// The raw direct-image pair set of a congruence, before any closing.
pub fn image_pairs(f: &Hom, r: &Congruence) -> Relation {
    assert_eq!(r.parent_order(), f.source().order());
    Relation::from_pairs(
        f.target().order(),
        r.relation()
            .pairs()
            .iter()
            .map(|&(a, b)| (f.apply(a), f.apply(b))),
    )
}

/// All set partitions of `{0..n-1}` as restricted growth strings, in
/// lexicographic order.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(vec![]);
        return out;
    }
    let mut rgs = vec![0usize; n];
    fn recurse(rgs: &mut Vec<usize>, i: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == rgs.len() {
            out.push(rgs.clone());
            return;
        }
        for v in 0..=max + 1 {
            rgs[i] = v;
            recurse(rgs, i + 1, max.max(v), out);
        }
    }
    recurse(&mut rgs, 1, 0, &mut out);
    out
}

/// All congruences on `q`: set partitions filtered by compatibility, in the
/// deterministic restricted-growth-string order.
pub fn all_congruences(q: &Quandle) -> Vec<Congruence> {
    set_partitions(q.order())
        .into_iter()
        .map(Congruence::from_class_of)
        .filter(|c| c.validate_on(q).is_ok())
        .collect()
}
