//! Comparability digraphs, constrained permutations and disjoint cycle
//! collections.
//!
//! Three independent routes lead to the characteristic polynomial of the
//! comparability digraph `D_P` (adjacency matrix `Z_P + Z_P^t - 2I`):
//!
//! * Bareiss elimination over `Z[t]` ([`crate::linalg::charpoly`]);
//! * a signed sum over the permutations `S_n^P` that only move elements to
//!   comparable elements ([`CycleEnumerator::chi_via_permutations`]);
//! * signed counts of disjoint directed cycles in `D_P`
//!   ([`CycleEnumerator::chi_via_cycle_counts`]).
//!
//! Evaluating at `t = -2` gives `det(Z_P + Z_P^t)`, which also equals the
//! alternating sum of the component counts `c_s` of spanning cycle
//! collections in `D_P` with two loops added at every vertex
//! ([`CycleEnumerator::theorem2_det`]).
//!
//! Everything here is brute-force enumeration; sizes are capped.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{CharPoly, IntMatrix};
use crate::partitions::partitions;
use crate::poset::Poset;

/// Default bound on the number of elements for any enumeration here.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// Which digraph to build from a poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DigraphMode {
    /// `G_P`: an arc `i -> j` for every `x_i < x_j`.
    Strict,
    /// `D_P`: arcs both ways between every pair of distinct comparable elements.
    Symmetric,
    /// `D_P` with two loops at every vertex.
    Looped,
}

/// A digraph on the elements of a poset. Loops are not stored as arcs; in
/// [`DigraphMode::Looped`] each vertex carries a loop multiplicity of 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparabilityDigraph {
    n: usize,
    arcs: Vec<Vec<bool>>,
    mode: DigraphMode,
}

impl ComparabilityDigraph {
    pub fn new(p: &Poset, mode: DigraphMode) -> Self {
        let n = p.len();
        let arcs = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match mode {
                        DigraphMode::Strict => p.lt(i, j),
                        DigraphMode::Symmetric | DigraphMode::Looped => {
                            i != j && p.comparable(i, j)
                        }
                    })
                    .collect()
            })
            .collect();
        Self { n, arcs, mode }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn mode(&self) -> DigraphMode {
        self.mode
    }

    /// Arc between distinct vertices.
    #[inline]
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs[i][j]
    }

    pub fn loops_per_vertex(&self) -> u32 {
        match self.mode {
            DigraphMode::Looped => 2,
            _ => 0,
        }
    }

    /// Number of arcs between distinct vertices.
    pub fn arc_count(&self) -> usize {
        self.arcs.iter().flatten().filter(|&&a| a).count()
    }

    /// Adjacency matrix with loops on the diagonal.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let loops = self.loops_per_vertex();
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                loops
            } else {
                u32::from(self.arcs[i][j])
            }
        })
    }
}

/// Builds `G_P`, `D_P` or `D_P` with loops.
pub fn build_digraph(p: &Poset, mode: DigraphMode) -> ComparabilityDigraph {
    ComparabilityDigraph::new(p, mode)
}

/// A member of `S_n^P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstrainedPermutation {
    /// `mapping[j] = sigma(j)`, 0-based.
    pub mapping: Vec<usize>,
    /// Signature: `+1` for even permutations, `-1` for odd.
    pub sign: i8,
    pub fixed_points: usize,
    /// Cycle lengths in nonincreasing order, fixed points included.
    pub cycle_type: Vec<usize>,
}

impl ConstrainedPermutation {
    pub fn from_mapping(mapping: Vec<usize>) -> Self {
        let n = mapping.len();
        let mut seen = vec![false; n];
        let mut cycle_type = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = mapping[v];
                len += 1;
            }
            cycle_type.push(len);
        }
        cycle_type.sort_unstable_by(|a, b| b.cmp(a));
        let fixed_points = cycle_type.iter().filter(|&&l| l == 1).count();
        let sign = if (n - cycle_type.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        Self {
            mapping,
            sign,
            fixed_points,
            cycle_type,
        }
    }

    /// Cycles of length greater than one.
    pub fn nontrivial_cycles(&self) -> usize {
        self.cycle_type.len() - self.fixed_points
    }
}

/// Backtracking stream over `S_n^P`: position `j` only tries elements
/// comparable to `x_j`.
#[derive(Clone, Debug)]
pub struct SnpIter {
    candidates: Vec<Vec<usize>>,
    cursor: Vec<usize>,
    mapping: Vec<usize>,
    used: Vec<bool>,
    depth: usize,
    done: bool,
}

impl SnpIter {
    fn new(p: &Poset) -> Self {
        let n = p.len();
        Self {
            candidates: (0..n).map(|j| p.comparable_set(j)).collect(),
            cursor: vec![0; n],
            mapping: vec![0; n],
            used: vec![false; n],
            depth: 0,
            done: false,
        }
    }

    fn backtrack(&mut self) {
        if self.depth == 0 {
            self.done = true;
            return;
        }
        self.depth -= 1;
        let c = self.mapping[self.depth];
        self.used[c] = false;
    }
}

impl Iterator for SnpIter {
    type Item = ConstrainedPermutation;

    fn next(&mut self) -> Option<ConstrainedPermutation> {
        let n = self.mapping.len();
        loop {
            if self.done {
                return None;
            }
            let d = self.depth;
            if d == n {
                let out = ConstrainedPermutation::from_mapping(self.mapping.clone());
                self.backtrack();
                return Some(out);
            }
            let mut advanced = false;
            while self.cursor[d] < self.candidates[d].len() {
                let c = self.candidates[d][self.cursor[d]];
                self.cursor[d] += 1;
                if !self.used[c] {
                    self.used[c] = true;
                    self.mapping[d] = c;
                    self.depth += 1;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.cursor[d] = 0;
                self.backtrack();
            }
        }
    }
}

/// Depth-first search state for cycle collections.
struct Search<'a> {
    d: &'a ComparabilityDigraph,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Calls `k` once per directed cycle on `len >= 2` vertices whose smallest
    /// vertex is `start`, with the cycle's vertices marked used.
    fn for_each_cycle(&mut self, start: usize, len: usize, k: &mut dyn FnMut(&mut Self)) {
        debug_assert!(len >= 2);
        self.used[start] = true;
        self.walk(start, start, len - 1, k);
        self.used[start] = false;
    }

    fn walk(&mut self, start: usize, at: usize, left: usize, k: &mut dyn FnMut(&mut Self)) {
        if left == 0 {
            if self.d.has_arc(at, start) {
                k(self);
            }
            return;
        }
        for next in start + 1..self.d.n {
            if !self.used[next] && self.d.has_arc(at, next) {
                self.used[next] = true;
                self.walk(start, next, left - 1, k);
                self.used[next] = false;
            }
        }
    }

    fn free_from(&self, v: usize) -> usize {
        self.used[v..].iter().filter(|&&u| !u).count()
    }

    /// Collections of disjoint cycles whose lengths use up `remaining`
    /// (`remaining[l]` cycles of length `l`), each cycle's smallest vertex
    /// being `>= v`. Loops are weighted by their multiplicity.
    fn count_collections(&mut self, v: usize, remaining: &mut [usize], left: usize) -> u128 {
        if left == 0 {
            return 1;
        }
        if v >= self.d.n || self.free_from(v) < left {
            return 0;
        }
        let mut total = self.count_collections(v + 1, remaining, left);
        if self.used[v] {
            return total;
        }
        for len in 1..remaining.len() {
            if remaining[len] == 0 {
                continue;
            }
            remaining[len] -= 1;
            if len == 1 {
                let loops = u128::from(self.d.loops_per_vertex());
                if loops > 0 {
                    self.used[v] = true;
                    total += loops * self.count_collections(v + 1, remaining, left - 1);
                    self.used[v] = false;
                }
            } else {
                let mut acc = 0u128;
                self.for_each_cycle(v, len, &mut |s| {
                    acc += s.count_collections(v + 1, remaining, left - len);
                });
                total += acc;
            }
            remaining[len] += 1;
        }
        total
    }

    /// Adds to `by_components[s]` the weighted number of spanning cycle
    /// collections extending the current state with `components` cycles so far.
    fn spanning(&mut self, v: usize, components: usize, weight: u128, by_components: &mut [u128]) {
        let Some(v) = (v..self.d.n).find(|&u| !self.used[u]) else {
            by_components[components] += weight;
            return;
        };
        let loops = u128::from(self.d.loops_per_vertex());
        if loops > 0 {
            self.used[v] = true;
            self.spanning(v + 1, components + 1, weight * loops, by_components);
            self.used[v] = false;
        }
        let free = self.free_from(v);
        for len in 2..=free {
            self.for_each_cycle(v, len, &mut |s| {
                s.spanning(v + 1, components + 1, weight, by_components);
            });
        }
    }
}

/// Enumeration-based computations, bounded by a cap on the poset size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleEnumerator {
    pub cap: usize,
}

impl Default for CycleEnumerator {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl CycleEnumerator {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::SizeCapExceeded {
                size: n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Every member of `S_n^P`, each exactly once.
    pub fn snp(&self, p: &Poset) -> Result<SnpIter> {
        self.check(p.len())?;
        Ok(SnpIter::new(p))
    }

    /// `chi(t) = sum_{sigma in S_n^P} sgn(sigma) (-t)^{k_sigma}`.
    pub fn chi_via_permutations(&self, p: &Poset) -> Result<CharPoly> {
        let n = p.len();
        let mut a = vec![BigInt::zero(); n + 1];
        for sigma in self.snp(p)? {
            a[n - sigma.fixed_points] += i32::from(sigma.sign);
        }
        Ok(CharPoly::new(a))
    }

    /// Number of collections of disjoint directed cycles with the given
    /// multiset of lengths. Loops (length 1) exist only in the looped
    /// digraph, two per vertex.
    pub fn count_cycle_covers(&self, d: &ComparabilityDigraph, lengths: &[usize]) -> Result<u128> {
        self.check(d.n)?;
        let total: usize = lengths.iter().sum();
        if total > d.n {
            return Err(Error::InvalidLengths(format!(
                "lengths sum to {total} on {} vertices",
                d.n
            )));
        }
        if lengths.contains(&0) {
            return Err(Error::InvalidLengths("zero-length cycle".into()));
        }
        if d.loops_per_vertex() == 0 && lengths.contains(&1) {
            return Err(Error::InvalidLengths(
                "length-1 cycles need loops; this digraph has none".into(),
            ));
        }
        let max = lengths.iter().copied().max().unwrap_or(0);
        let mut remaining = vec![0usize; max + 1];
        for &l in lengths {
            remaining[l] += 1;
        }
        let mut search = Search {
            d,
            used: vec![false; d.n],
        };
        Ok(search.count_collections(0, &mut remaining, total))
    }

    /// `f_{D_P}(lengths)` on the comparability digraph of `p`.
    pub fn f_count(&self, p: &Poset, lengths: &[usize]) -> Result<u128> {
        self.count_cycle_covers(&build_digraph(p, DigraphMode::Symmetric), lengths)
    }

    /// `a_i = sum over partitions i = i_1 + ... + i_r with parts >= 2 of
    /// (-1)^{i+r} f_{D_P}(i_1, ..., i_r)`, and `a_0 = 1`.
    pub fn chi_via_cycle_counts(&self, p: &Poset) -> Result<CharPoly> {
        let n = p.len();
        self.check(n)?;
        let d = build_digraph(p, DigraphMode::Symmetric);
        let mut a = vec![BigInt::zero(); n + 1];
        a[0] = BigInt::from(1);
        for (i, slot) in a.iter_mut().enumerate().skip(1) {
            for parts in partitions(i, 2) {
                let f = BigInt::from(self.count_cycle_covers(&d, &parts)?);
                if (i + parts.len()) % 2 == 0 {
                    *slot += f;
                } else {
                    *slot -= f;
                }
            }
        }
        Ok(CharPoly::new(a))
    }

    /// `c_1..c_n` from `S_n^P`: a permutation with `l` fixed points and `m`
    /// longer cycles contributes `2^l` to `c_{l+m}`.
    pub fn c_coefficients_from_permutations(&self, p: &Poset) -> Result<Vec<u128>> {
        let n = p.len();
        let mut c = vec![0u128; n + 1];
        for sigma in self.snp(p)? {
            c[sigma.cycle_type.len()] += 1u128 << sigma.fixed_points;
        }
        Ok(c.split_off(1))
    }

    /// `c_1..c_n` as spanning cycle collections of the looped digraph,
    /// counted by number of components.
    pub fn c_coefficients_from_covers(&self, p: &Poset) -> Result<Vec<u128>> {
        let n = p.len();
        self.check(n)?;
        let d = build_digraph(p, DigraphMode::Looped);
        let mut by_components = vec![0u128; n + 1];
        let mut search = Search {
            d: &d,
            used: vec![false; n],
        };
        search.spanning(0, 0, 1, &mut by_components);
        Ok(by_components.split_off(1))
    }

    /// `c_1..c_n`, computed both ways; disagreement is an error.
    pub fn c_coefficients(&self, p: &Poset) -> Result<Vec<u128>> {
        let from_perms = self.c_coefficients_from_permutations(p)?;
        let from_covers = self.c_coefficients_from_covers(p)?;
        if from_perms != from_covers {
            return Err(Error::InternalMismatch(format!(
                "c coefficients: permutations give {from_perms:?}, cycle covers give {from_covers:?}"
            )));
        }
        Ok(from_perms)
    }

    /// `sum_{s=1}^n (-1)^{n-s} c_s`, which equals `det(Z_P + Z_P^t)`.
    pub fn theorem2_det(&self, p: &Poset) -> Result<BigInt> {
        let n = p.len();
        let c = self.c_coefficients(p)?;
        Ok(alternating_sum(n, &c))
    }
}

/// `sum_{s=1}^n (-1)^{n-s} c_s` for `c = [c_1, ..., c_n]`.
pub fn alternating_sum(n: usize, c: &[u128]) -> BigInt {
    c.iter().enumerate().fold(BigInt::zero(), |acc, (k, &cs)| {
        let s = k + 1;
        if (n - s).is_multiple_of(2) {
            acc + cs
        } else {
            acc - cs
        }
    })
}
