//! Exhaustive generation of all quandles of a given order up to isomorphism,
//! isomorphism testing, and canonical forms.
//!
//! The search space is the set of column tuples: axiom (A2) forces every
//! column of the table to be a permutation, and (A1) forces column `y` to fix
//! `y`, so candidates shrink from `n^(n²)` tables to at most `((n-1)!)^n`
//! tuples before self-distributivity pruning. Columns are chosen left to
//! right; a conjugation constraint is checked as soon as the three columns it
//! mentions are all present. A completed table is kept only when it is the
//! lexicographically least member of its isomorphism class, so the output
//! carries exactly one representative per class, in canonical-form order.

use crate::error::{Error, Result};
use crate::orbit::orbits;
use crate::quandle::Quandle;

/// Hard bound on enumeration order; the search is exhaustive and order 7 is
/// out of desk scale.
pub const ENUMERATION_BOUND: usize = 6;

/// Bound on canonical-form computation, which walks all carrier
/// permutations.
pub const CANONICAL_BOUND: usize = 8;

/// All permutations of `0..n` in lexicographic order.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn recurse(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                recurse(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    recurse(n, &mut current, &mut used, &mut out);
    out
}

fn relabel_flat(n: usize, table: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x] * n + perm[y]] = perm[table[x * n + y]];
        }
    }
    out
}

fn canonical_flat(n: usize, table: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for perm in all_permutations(n) {
        let candidate = relabel_flat(n, table, &perm);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.unwrap_or_default()
}

/// The lexicographically least table over all relabellings of `q`. Two
/// quandles are isomorphic exactly when their canonical forms are equal.
pub fn canonical_form(q: &Quandle) -> Result<Quandle> {
    let n = q.order();
    if n > CANONICAL_BOUND {
        return Err(Error::BoundExceeded {
            order: n,
            bound: CANONICAL_BOUND,
        });
    }
    let table = canonical_flat(n, q.flat_table());
    Ok(Quandle::from_flat(n, table).expect("relabellings preserve the axioms"))
}

struct ColumnSearch {
    n: usize,
    /// Candidate columns: permutations of the carrier fixing the column
    /// index, in lexicographic order, per index.
    candidates: Vec<Vec<Vec<usize>>>,
    columns: Vec<Vec<usize>>,
    found: Vec<Vec<usize>>, // flat tables, canonical representatives only
}

impl ColumnSearch {
    fn new(n: usize) -> Self {
        let mut candidates = vec![Vec::new(); n];
        for perm in all_permutations(n) {
            for (y, slot) in candidates.iter_mut().enumerate() {
                if perm[y] == y {
                    slot.push(perm.clone());
                }
            }
        }
        ColumnSearch {
            n,
            candidates,
            columns: Vec::new(),
            found: Vec::new(),
        }
    }

    /// Self-distributivity in column form: ρ_z ∘ ρ_y = ρ_{y ◁ z} ∘ ρ_z.
    /// After placing column `k`, check every instance whose three columns
    /// y, z, y ◁ z are all placed and include `k`.
    fn consistent_after(&self, k: usize) -> bool {
        for z in 0..=k {
            let rho_z = &self.columns[z];
            for y in 0..=k {
                let rho_y = &self.columns[y];
                let yz = rho_z[y];
                if yz > k || (y != k && z != k && yz != k) {
                    continue;
                }
                let rho_yz = &self.columns[yz];
                if (0..self.n).any(|x| rho_z[rho_y[x]] != rho_yz[rho_z[x]]) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize) {
        if k == self.n {
            let mut table = vec![0; self.n * self.n];
            for y in 0..self.n {
                for x in 0..self.n {
                    table[x * self.n + y] = self.columns[y][x];
                }
            }
            if canonical_flat(self.n, &table) == table {
                self.found.push(table);
            }
            return;
        }
        for i in 0..self.candidates[k].len() {
            let column = self.candidates[k][i].clone();
            self.columns.push(column);
            if self.consistent_after(k) {
                self.run(k + 1);
            }
            self.columns.pop();
        }
    }
}

/// All quandles of order `n`, one representative per isomorphism class, in
/// canonical-form order. Every returned quandle passes full validation.
pub fn enumerate_quandles(n: usize) -> Result<Vec<Quandle>> {
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            order: n,
            bound: ENUMERATION_BOUND,
        });
    }
    if n == 0 {
        return Ok(vec![Quandle::from_flat(0, vec![])?]);
    }
    let mut search = ColumnSearch::new(n);
    search.run(0);
    search.found.sort();
    search
        .found
        .into_iter()
        .map(|table| Quandle::from_flat(n, table))
        .collect()
}

/// Per-element data preserved by every isomorphism: orbit size, fixed points
/// of the element's column, fixed points of its row, and the sorted cycle
/// type of its column permutation.
fn invariants(q: &Quandle) -> Vec<(usize, usize, usize, Vec<usize>)> {
    let orb = orbits(q);
    q.elements()
        .map(|y| {
            let orbit_size = orb.classes()[orb.class_of_elem(y)].len();
            let col_fixed = q.elements().filter(|&x| q.op(x, y) == x).count();
            let row_fixed = q.elements().filter(|&x| q.op(y, x) == y).count();
            let mut seen = vec![false; q.order()];
            let mut cycles = Vec::new();
            for start in q.elements() {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    len += 1;
                    x = q.op(x, y);
                }
                cycles.push(len);
            }
            cycles.sort_unstable();
            (orbit_size, col_fixed, row_fixed, cycles)
        })
        .collect()
}

/// A carrier bijection transporting the first table onto the second, if one
/// exists. Backtracks over assignments with invariant pruning.
pub fn are_isomorphic(q1: &Quandle, q2: &Quandle) -> Option<Vec<usize>> {
    if q1.order() != q2.order() {
        return None;
    }
    let n = q1.order();
    let inv1 = invariants(q1);
    let inv2 = invariants(q2);
    {
        let mut sorted1 = inv1.clone();
        let mut sorted2 = inv2.clone();
        sorted1.sort();
        sorted2.sort();
        if sorted1 != sorted2 {
            return None;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        q1: &Quandle,
        q2: &Quandle,
        inv1: &[(usize, usize, usize, Vec<usize>)],
        inv2: &[(usize, usize, usize, Vec<usize>)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        k: usize,
    ) -> bool {
        let n = q1.order();
        if k == n {
            return true;
        }
        'candidate: for v in 0..n {
            if used[v] || inv1[k] != inv2[v] {
                continue;
            }
            map[k] = v;
            for a in 0..=k {
                for b in 0..=k {
                    let c = q1.op(a, b);
                    if c <= k && q2.op(map[a], map[b]) != map[c] {
                        map[k] = usize::MAX;
                        continue 'candidate;
                    }
                }
            }
            used[v] = true;
            if extend(q1, q2, inv1, inv2, map, used, k + 1) {
                return true;
            }
            used[v] = false;
            map[k] = usize::MAX;
        }
        false
    }
    if extend(q1, q2, &inv1, &inv2, &mut map, &mut used, 0) {
        debug_assert_eq!(&q1.relabel(&map), q2);
        Some(map)
    } else {
        None
    }
}
