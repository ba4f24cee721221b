//! Finite posets with an admissible labelling.
//!
//! Elements are indexed `0..n` internally. The labelling is always a linear
//! extension: `x_i < x_j` implies `i < j`, so every zeta matrix built from a
//! [`Poset`] is unipotent upper triangular. Text formats and CLI output use
//! 1-based indices.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Largest element count accepted by the generic constructors.
pub const DEFAULT_MAX_ELEMENTS: usize = 1 << 20;

/// Largest boolean-algebra rank accepted by [`Poset::boolean_algebra`].
pub const DEFAULT_MAX_RANK: usize = 20;

#[derive(Clone, Debug)]
enum Order {
    /// Row `i` holds `{ j : x_i <= x_j }`.
    Dense(Vec<FixedBitSet>),
    /// Subsets of `{1..rank}` encoded as bit masks; `i <= j` iff `i & j == i`.
    Subsets,
}

#[derive(Clone, Debug)]
enum Labels {
    Index,
    Bits(usize),
    Explicit(Vec<String>),
}

/// A finite partially ordered set.
///
/// Equality compares the order relation only; display labels are ignored.
#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    order: Order,
    labels: Labels,
}

/// A closed interval `[bottom, top]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub bottom: usize,
    pub top: usize,
    /// Sorted element indices `z` with `bottom <= z <= top`.
    pub members: Vec<usize>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        match (&self.order, &other.order) {
            (Order::Dense(a), Order::Dense(b)) => a == b,
            (Order::Subsets, Order::Subsets) => true,
            _ => (0..self.n).all(|i| (0..self.n).all(|j| self.leq(i, j) == other.leq(i, j))),
        }
    }
}

impl Eq for Poset {}

impl Poset {
    /// The total order `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert_range(i..n);
                row
            })
            .collect();
        Self::dense(n, rows, Labels::Index)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(i);
                row
            })
            .collect();
        Self::dense(n, rows, Labels::Index)
    }

    /// Subsets of `{1..rank}` under inclusion, with subset `A` at index
    /// `sum_{i in A} 2^(i-1)`. The numeric order of these codes is admissible.
    pub fn boolean_algebra(rank: usize) -> Result<Self> {
        Self::boolean_algebra_with_cap(rank, DEFAULT_MAX_RANK)
    }

    pub fn boolean_algebra_with_cap(rank: usize, cap: usize) -> Result<Self> {
        if rank > cap || rank >= usize::BITS as usize - 1 {
            return Err(Error::RankTooLarge { rank, cap });
        }
        Ok(Self {
            n: 1 << rank,
            order: Order::Subsets,
            labels: Labels::Bits(rank),
        })
    }

    /// Positive divisors of `n` in increasing order, ordered by divisibility.
    pub fn divisor_poset(n: u64) -> Self {
        assert!(n >= 1, "divisor poset needs a positive integer");
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut d = 1u64;
        while d * d <= n {
            if n.is_multiple_of(d) {
                small.push(d);
                if d != n / d {
                    large.push(n / d);
                }
            }
            d += 1;
        }
        small.extend(large.into_iter().rev());
        let divisors = small;
        let m = divisors.len();
        let rows = divisors
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let mut row = FixedBitSet::with_capacity(m);
                for (j, &b) in divisors.iter().enumerate().skip(i) {
                    if b % a == 0 {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let labels = divisors.iter().map(u64::to_string).collect();
        Self::dense(m, rows, Labels::Explicit(labels))
    }

    /// Builds a poset from asserted strict relations `(i, j)` meaning
    /// `x_i < x_j` (1-based). The reflexive-transitive closure is taken and
    /// elements are relabelled by the lexicographically smallest topological
    /// order. Labels carry the original 1-based indices.
    pub fn from_cover_relations(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if n > DEFAULT_MAX_ELEMENTS {
            return Err(Error::SizeCapExceeded {
                size: n,
                cap: DEFAULT_MAX_ELEMENTS,
            });
        }
        let mut arcs = Vec::with_capacity(covers.len());
        for &(i, j) in covers {
            for index in [i, j] {
                if index == 0 || index > n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            arcs.push((i - 1, j - 1));
        }
        let (order, closure) = closure_in_topological_order(n, &arcs)?;
        let labels = order.iter().map(|v| (v + 1).to_string()).collect();
        Ok(Self::dense(n, closure, Labels::Explicit(labels)))
    }

    /// Builds a poset from a full relation table, validating the order axioms
    /// and the admissible labelling.
    pub fn from_leq_table(table: &[Vec<bool>]) -> Result<Self> {
        let n = table.len();
        let mut rows = Vec::with_capacity(n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            let mut bits = FixedBitSet::with_capacity(n);
            for (j, &b) in row.iter().enumerate() {
                bits.set(j, b);
            }
            rows.push(bits);
        }
        let poset = Self::dense(n, rows, Labels::Index);
        poset.check_axioms()?;
        Ok(poset)
    }

    fn dense(n: usize, rows: Vec<FixedBitSet>, labels: Labels) -> Self {
        Self {
            n,
            order: Order::Dense(rows),
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `x_i <= x_j`.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        match &self.order {
            Order::Dense(rows) => rows[i].contains(j),
            Order::Subsets => i & j == i,
        }
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Elements `j` with `x_i <= x_j`, ascending.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        match &self.order {
            Order::Dense(rows) => rows[i].ones().collect(),
            Order::Subsets => (i..self.n).filter(|&j| i & j == i).collect(),
        }
    }

    /// Elements comparable to `i` (including `i`), ascending.
    pub fn comparable_set(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.comparable(i, j)).collect()
    }

    /// Number of ordered pairs `(i, j)` with `x_i <= x_j`.
    pub fn relation_size(&self) -> usize {
        match &self.order {
            Order::Dense(rows) => rows.iter().map(|r| r.count_ones(..)).sum(),
            Order::Subsets => (0..self.n)
                .map(|i| 1usize << ((self.n - 1) ^ i).count_ones())
                .sum(),
        }
    }

    /// Number of strictly comparable pairs `x_i < x_j`.
    pub fn strict_relation_size(&self) -> usize {
        self.relation_size() - self.n
    }

    /// Cover relations `(i, j)`, 0-based: `x_i < x_j` with nothing in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            let above: Vec<usize> = self.up_set(i).into_iter().filter(|&j| j != i).collect();
            for &j in &above {
                if !above.iter().any(|&k| k != j && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The closed interval `[i, j]`.
    pub fn interval(&self, i: usize, j: usize) -> Result<Interval> {
        for index in [i, j] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, n: self.n });
            }
        }
        if !self.leq(i, j) {
            return Err(Error::NotComparable(i, j));
        }
        let members = (i..=j)
            .filter(|&z| self.leq(i, z) && self.leq(z, j))
            .collect();
        Ok(Interval {
            bottom: i,
            top: j,
            members,
        })
    }

    /// Display name of element `i`: a bit string for boolean algebras, the
    /// divisor for divisor posets, the original index for parsed posets.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Labels::Index => (i + 1).to_string(),
            Labels::Bits(rank) => {
                if *rank == 0 {
                    "∅".to_string()
                } else {
                    format!("{i:0width$b}", width = *rank)
                }
            }
            Labels::Explicit(names) => names[i].clone(),
        }
    }

    /// Verifies reflexivity, antisymmetry, transitivity and the admissible
    /// labelling over all pairs and triples.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(Error::InvalidRelation(format!(
                    "not reflexive at {}",
                    i + 1
                )));
            }
            for j in 0..n {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                if self.leq(j, i) {
                    return Err(Error::InvalidRelation(format!(
                        "not antisymmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                if j < i {
                    return Err(Error::InvalidRelation(format!(
                        "labelling not admissible: {} < {} but {} > {}",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1
                    )));
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(Error::InvalidRelation(format!(
                            "not transitive at ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Serializes to the line-oriented text format: `n`, then one `i j` line
    /// per cover relation (1-based).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# poset on {} elements, cover relations i < j", self.n);
        let _ = writeln!(out, "{}", self.n);
        for (i, j) in self.covers() {
            let _ = writeln!(out, "{} {}", i + 1, j + 1);
        }
        out
    }

    /// Parses the text format written by [`Poset::to_text`]. Any asserted
    /// relations are accepted; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut relations = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|e| Error::Parse {
                    line: lineno + 1,
                    msg: format!("{s:?}: {e}"),
                })
            };
            match (n, fields.as_slice()) {
                (None, [count]) => n = Some(parse(count)?),
                (None, _) => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "expected the element count".into(),
                    })
                }
                (Some(_), [a, b]) => relations.push((parse(a)?, parse(b)?)),
                (Some(_), _) => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "expected a pair `i j`".into(),
                    })
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "empty input".into(),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                line: 0,
                msg: "a poset needs at least one element".into(),
            });
        }
        Self::from_cover_relations(n, &relations)
    }
}

/// Lexicographically smallest topological order of the arcs, plus the
/// reflexive-transitive closure expressed in the new labelling.
fn closure_in_topological_order(
    n: usize,
    arcs: &[(usize, usize)],
) -> Result<(Vec<usize>, Vec<FixedBitSet>)> {
    let mut succ = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for &(a, b) in arcs {
        if a == b {
            return Err(Error::CycleDetected);
        }
        succ[a].push(b);
        indegree[b] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &w in &succ[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    if order.len() != n {
        return Err(Error::CycleDetected);
    }
    let mut position = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    // Rows in new labels; fill from the top of the order down.
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    for k in (0..n).rev() {
        let v = order[k];
        let mut row = FixedBitSet::with_capacity(n);
        row.insert(k);
        for &w in &succ[v] {
            row.union_with(&rows[position[w]]);
        }
        rows[k] = row;
    }
    Ok((order, rows))
}
