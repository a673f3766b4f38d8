//! Partitions, multipartitions and their hooks.
//!
//! Rows, columns and components are 1-based throughout. The empty partition
//! is stored as an empty sequence; `part(i)` and `column_len(j)` return 0
//! outside the diagram so every formula stays total.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::Error;

/// A partition, stored as its nonzero parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A node of a diagram. `component` is `None` for single partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub component: Option<usize>,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node {
            row,
            col,
            component: None,
        }
    }

    pub fn in_component(row: usize, col: usize, component: usize) -> Self {
        Node {
            row,
            col,
            component: Some(component),
        }
    }
}

impl Partition {
    /// The empty partition `(0)`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence. Trailing zeros
    /// are dropped; any other zero or increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition { parts })
    }

    /// A single row `(n)`; the empty partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` (1-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_1`, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Number of nodes in column `j` (1-based), i.e. `λ̄_j`.
    pub fn column_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first()).map(|j| self.column_len(j)).collect();
        Partition { parts }
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// Nodes `(i, j)` in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// `h_{i,j} = λ_i − i + λ̄_j − j + 1`.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize, Error> {
        if !self.contains(row, col) {
            return Err(Error::NodeOutsideDiagram { row, col });
        }
        Ok(self.part(row) - col + self.column_len(col) - row + 1)
    }

    /// Generalized hook `h^{λ,μ}_{i,j} = λ_i − i + μ̄_j − j + 1` of a node of
    /// `self` against `other`. May be zero or negative.
    pub fn generalized_hook_length(
        &self,
        other: &Partition,
        row: usize,
        col: usize,
    ) -> Result<i64, Error> {
        if !self.contains(row, col) {
            return Err(Error::NodeOutsideDiagram { row, col });
        }
        Ok(self.part(row) as i64 - row as i64 + other.column_len(col) as i64 - col as i64 + 1)
    }

    /// The nodes `(i, λ_i)` with `λ_i > λ_{i+1}`, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Node::new(i, self.part(i)))
            .collect()
    }

    /// Removes the last node of row `row`, which must be removable.
    pub fn remove_node(&self, row: usize) -> Result<Partition, Error> {
        let col = self.part(row);
        if col == 0 || col <= self.part(row + 1) {
            return Err(Error::NodeOutsideDiagram { row, col });
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Partition::new(parts)
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        self.nodes()
            .map(|(i, j)| BigUint::from(self.part(i) - j + self.column_len(j) - i + 1))
            .product()
    }

    /// Number of standard tableaux of this shape, `|λ|! / Π h`.
    pub fn num_standard_tableaux(&self) -> BigUint {
        factorial(self.size()) / self.hook_product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All partitions of `n`, largest first in lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered tuple `(λ^1; …; λ^m)` of partitions, `m ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::Precondition(
                "a multipartition needs at least one component",
            ));
        }
        Ok(Multipartition { components })
    }

    /// `((0); …; (0))` with `m` components.
    pub fn empty(m: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); m.max(1)],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// The component `λ^s`, 1-based.
    pub fn component(&self, s: usize) -> &Partition {
        &self.components[s - 1]
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// `ℓ(Λ) = max_s ℓ(λ^s)`.
    pub fn len(&self) -> usize {
        self.components
            .iter()
            .map(Partition::len)
            .max()
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// All nodes `(i, j, s)`, component by component.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(s, p)| p.nodes().map(move |(i, j)| Node::in_component(i, j, s + 1)))
    }

    /// `σ·Λ`, where component `s` of `self` becomes component `σ(s)`.
    pub fn permute(&self, sigma: &crate::Permutation) -> Result<Self, Error> {
        if sigma.degree() != self.level() {
            return Err(Error::InvalidPermutation);
        }
        let mut components = vec![Partition::empty(); self.level()];
        for (s, p) in self.components.iter().enumerate() {
            components[sigma.image(s + 1) - 1] = p.clone();
        }
        Ok(Multipartition { components })
    }

    /// Number of standard multitableaux, `n! / Π` of all hook lengths.
    pub fn num_standard_tableaux(&self) -> BigUint {
        let hooks: BigUint = self
            .components
            .iter()
            .map(Partition::hook_product)
            .product();
        factorial(self.size()) / hooks
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Iterator over the `m`-multipartitions of `n`.
///
/// Order: component sizes `(|λ^1|, …, |λ^m|)` in decreasing lexicographic
/// order, then each component's partitions in decreasing lexicographic
/// order with the last component varying fastest.
#[derive(Clone, Debug)]
pub struct Multipartitions {
    by_size: Vec<Vec<Partition>>,
    composition: Option<Vec<usize>>,
    cursor: Vec<usize>,
}

impl Multipartitions {
    pub fn new(m: usize, n: usize) -> Self {
        let m = m.max(1);
        let mut composition = vec![0; m];
        composition[0] = n;
        Multipartitions {
            by_size: (0..=n).map(partitions).collect(),
            composition: Some(composition),
            cursor: vec![0; m],
        }
    }

    fn advance(&mut self) {
        let Some(comp) = self.composition.as_mut() else {
            return;
        };
        for s in (0..comp.len()).rev() {
            self.cursor[s] += 1;
            if self.cursor[s] < self.by_size[comp[s]].len() {
                return;
            }
            self.cursor[s] = 0;
        }
        if !next_composition(comp) {
            self.composition = None;
        }
    }
}

/// Steps a weak composition to its successor in decreasing lexicographic
/// order; returns false after the last one.
fn next_composition(comp: &mut [usize]) -> bool {
    let m = comp.len();
    if m < 2 {
        return false;
    }
    let Some(i) = (0..m - 1).rev().find(|&i| comp[i] > 0) else {
        return false;
    };
    let tail: usize = comp[i + 1..].iter().sum();
    comp[i] -= 1;
    for c in comp[i + 1..].iter_mut() {
        *c = 0;
    }
    comp[i + 1] = tail + 1;
    true
}

impl Iterator for Multipartitions {
    type Item = Multipartition;

    fn next(&mut self) -> Option<Multipartition> {
        let comp = self.composition.as_ref()?;
        let components = comp
            .iter()
            .zip(&self.cursor)
            .map(|(&size, &k)| self.by_size[size][k].clone())
            .collect();
        self.advance();
        Some(Multipartition { components })
    }
}

/// Shorthand for [`Multipartitions::new`].
pub fn multipartitions(m: usize, n: usize) -> Multipartitions {
    Multipartitions::new(m, n)
}
