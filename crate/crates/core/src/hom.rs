//! Quandle homomorphisms: validation, images and preimages of subquandles,
//! and exhaustive enumeration of all homomorphisms between two quandles.

use crate::error::{Error, Result, Witness};
use crate::quandle::Quandle;
use crate::subset::{require_subquandle, Subset};

/// A total map between quandle carriers preserving `◁` and `◁⁻¹`.
///
/// The `◁⁻¹` preservation follows from (A2), but validation asserts it too.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hom {
    source: Quandle,
    target: Quandle,
    map: Vec<usize>,
}

impl Hom {
    /// Check both preservation identities exhaustively and build the map.
    pub fn validate(source: Quandle, target: Quandle, map: Vec<usize>) -> Result<Hom> {
        if map.len() != source.order() {
            return Err(Error::LengthMismatch {
                expected: source.order(),
                got: map.len(),
            });
        }
        for (x, &v) in map.iter().enumerate() {
            if v >= target.order() {
                return Err(Error::MapOutOfRange { x, value: v });
            }
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.op(x, y)] != target.op(map[x], map[y])
                    || map[source.inv_op(x, y)] != target.inv_op(map[x], map[y])
                {
                    return Err(Error::NotHomomorphism {
                        witness: Witness::pair(x, y),
                    });
                }
            }
        }
        Ok(Hom { source, target, map })
    }

    pub fn identity(q: &Quandle) -> Hom {
        Hom {
            source: q.clone(),
            target: q.clone(),
            map: q.elements().collect(),
        }
    }

    pub fn source(&self) -> &Quandle {
        &self.source
    }

    pub fn target(&self) -> &Quandle {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &v in &self.map {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }

    /// Constant means the map factors through a one-element quandle; the
    /// empty-to-empty map counts as constant.
    pub fn is_constant(&self) -> bool {
        self.map.iter().max() == self.map.iter().min()
    }

    /// Composition `other ∘ self`; panics if the middle quandles differ.
    pub fn then(&self, other: &Hom) -> Hom {
        assert_eq!(self.target, other.source, "composition of incompatible maps");
        Hom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&v| other.map[v]).collect(),
        }
    }
}

/// Direct image of a subquandle; always a subquandle of the target.
pub fn image_subquandle(f: &Hom, s: &Subset) -> Result<Subset> {
    require_subquandle(f.source(), s)?;
    Ok(Subset::from_members(
        f.target().order(),
        s.iter().map(|x| f.apply(x)),
    ))
}

/// Inverse image of a subquandle; always a subquandle of the source.
pub fn preimage_subquandle(f: &Hom, t: &Subset) -> Result<Subset> {
    require_subquandle(f.target(), t)?;
    Ok(Subset::from_members(
        f.source().order(),
        f.source().elements().filter(|&x| t.contains(f.apply(x))),
    ))
}

/// All homomorphisms from `source` to `target`, in lexicographic order of
/// their map arrays.
///
/// Backtracks over partial maps, checking every preservation constraint as
/// soon as all three of `x`, `y`, `x ◁ y` are assigned.
pub fn enumerate_homs(source: &Quandle, target: &Quandle) -> Vec<Hom> {
    let n1 = source.order();
    let n2 = target.order();
    if n1 == 0 {
        return vec![Hom {
            source: source.clone(),
            target: target.clone(),
            map: vec![],
        }];
    }
    if n2 == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut map = vec![0usize; n1];
    search(source, target, &mut map, 0, &mut out);
    out
}

fn search(source: &Quandle, target: &Quandle, map: &mut [usize], k: usize, out: &mut Vec<Hom>) {
    if k == map.len() {
        out.push(Hom {
            source: source.clone(),
            target: target.clone(),
            map: map.to_vec(),
        });
        return;
    }
    'next_value: for v in target.elements() {
        map[k] = v;
        for a in 0..=k {
            for b in 0..=k {
                if a < k && b < k && source.op(a, b) != k && source.inv_op(a, b) != k {
                    continue; // constraint already checked at an earlier level
                }
                let c = source.op(a, b);
                if c <= k && map[c] != target.op(map[a], map[b]) {
                    continue 'next_value;
                }
                let c = source.inv_op(a, b);
                if c <= k && map[c] != target.inv_op(map[a], map[b]) {
                    continue 'next_value;
                }
            }
        }
        search(source, target, map, k + 1, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e3, r3};

    #[test]
    fn projection_onto_components_is_a_hom() {
        let q = e3();
        let f = Hom::validate(q, Quandle::trivial(2), vec![0, 0, 1]).unwrap();
        assert!(f.is_surjective());
        assert!(!f.is_constant());
    }

    #[test]
    fn identity_validates() {
        for q in [e3(), r3(), Quandle::trivial(1)] {
            let f = Hom::identity(&q);
            assert!(Hom::validate(q.clone(), q.clone(), f.map().to_vec()).is_ok());
        }
    }

    #[test]
    fn inner_automorphism_of_r3() {
        let q = r3();
        // x ↦ x ◁ 2, i.e. column 2 of the table
        let f = Hom::validate(q.clone(), q, vec![1, 0, 2]).unwrap();
        assert!(f.is_injective() && f.is_surjective());
    }

    #[test]
    fn non_hom_rejected_with_witness() {
        let q = r3();
        let err = Hom::validate(q.clone(), q, vec![0, 0, 1]).unwrap_err();
        assert!(matches!(err, Error::NotHomomorphism { .. }));
    }

    #[test]
    fn homs_from_r3_to_e3_are_the_constants() {
        let homs = enumerate_homs(&r3(), &e3());
        assert_eq!(homs.len(), 3);
        for (i, f) in homs.iter().enumerate() {
            assert_eq!(f.map(), &[i, i, i]);
            assert!(f.is_constant());
        }
    }

    #[test]
    fn homs_match_brute_force_filter() {
        let quandles = [Quandle::trivial(1), Quandle::trivial(2), e3(), r3()];
        for src in &quandles {
            for tgt in &quandles {
                let fast = enumerate_homs(src, tgt);
                let mut slow = Vec::new();
                let (n1, n2) = (src.order(), tgt.order());
                for code in 0..n2.pow(n1 as u32) {
                    let mut c = code;
                    let map: Vec<usize> = (0..n1)
                        .map(|_| {
                            let v = c % n2;
                            c /= n2;
                            v
                        })
                        .collect();
                    if let Ok(h) = Hom::validate(src.clone(), tgt.clone(), map) {
                        slow.push(h);
                    }
                }
                slow.sort_by(|a, b| a.map().cmp(b.map()));
                assert_eq!(fast, slow, "{src:?} -> {tgt:?}");
            }
        }
    }

    #[test]
    fn singleton_source_gives_one_hom_per_element() {
        let homs = enumerate_homs(&Quandle::trivial(1), &r3());
        assert_eq!(homs.len(), 3);
        let homs = enumerate_homs(&e3(), &Quandle::trivial(1));
        assert_eq!(homs.len(), 1);
    }

    #[test]
    fn image_and_preimage() {
        let q = e3();
        let f = Hom::validate(q.clone(), Quandle::trivial(2), vec![0, 0, 1]).unwrap();
        let img = image_subquandle(&f, &Subset::from_members(3, [0, 1])).unwrap();
        assert_eq!(img, Subset::singleton(2, 0));
        let pre = preimage_subquandle(&f, &Subset::singleton(2, 1)).unwrap();
        assert_eq!(pre, Subset::singleton(3, 2));

        let id = Hom::identity(&q);
        let s = Subset::from_members(3, [0, 1]);
        assert_eq!(image_subquandle(&id, &s).unwrap(), s);
        assert_eq!(preimage_subquandle(&id, &s).unwrap(), s);
    }

    #[test]
    fn preimage_along_first_projection() {
        let q = e3();
        let p = q.product(&q).unwrap();
        let first = Hom::validate(p, q, (0..9).map(|a| a / 3).collect()).unwrap();
        let pre = preimage_subquandle(&first, &Subset::singleton(3, 2)).unwrap();
        assert_eq!(pre, Subset::from_members(9, [6, 7, 8]));
    }

    #[test]
    fn collapse_to_point() {
        let f = Hom::validate(r3(), Quandle::trivial(1), vec![0, 0, 0]).unwrap();
        let img = image_subquandle(&f, &Subset::full(3)).unwrap();
        assert_eq!(img, Subset::full(1));
        assert!(f.is_constant());
    }

    #[test]
    fn empty_source_has_one_hom() {
        let empty = Quandle::from_flat(0, vec![]).unwrap();
        assert_eq!(enumerate_homs(&empty, &r3()).len(), 1);
        assert_eq!(enumerate_homs(&r3(), &empty).len(), 0);
        let f = &enumerate_homs(&empty, &empty)[0];
        assert!(f.is_constant()); // empty-to-empty counts as constant
    }
}
