//! Compositions, the composition poset and skew composition shapes.
//!
//! A composition is drawn in English notation with part `i` as the length of
//! row `i`, top row first. Inner shapes of skew shapes sit bottom-aligned in
//! the outer diagram, so row `i` of the inner shape is row
//! `l(outer) - l(inner) + i` of the outer one.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("cannot parse {0:?} as a composition or skew shape")]
    Parse(String),
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{inner} is not below {outer} in the composition poset")]
    NotContained {
        outer: Composition,
        inner: Composition,
    },
}

/// A finite sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.contains(&0) {
            return Err(ShapeError::ZeroPart(parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Drops zero entries; used when row lengths are tracked inside a fixed frame.
    pub fn from_row_lengths(rows: &[usize]) -> Self {
        Self(rows.iter().copied().filter(|&r| r > 0).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Parts sorted weakly decreasing.
    pub fn rearrange_to_partition(&self) -> Self {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// Everything covering `self` in the composition poset: a new top row of
    /// length one, or one more cell on a row that is the topmost of its length.
    pub fn covers_up(&self) -> Vec<Self> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut prepended = Vec::with_capacity(self.len() + 1);
        prepended.push(1);
        prepended.extend_from_slice(&self.0);
        out.push(Self(prepended));
        for k in 0..self.len() {
            if self.0[..k].iter().all(|&p| p != self.0[k]) {
                let mut grown = self.0.clone();
                grown[k] += 1;
                out.push(Self(grown));
            }
        }
        out
    }

    /// Everything covered by `self`: the inverse moves of [`covers_up`](Self::covers_up).
    pub fn covers_down(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.0.first() == Some(&1) {
            out.push(Self(self.0[1..].to_vec()));
        }
        for k in 0..self.len() {
            let shrunk = self.0[k] - 1;
            if shrunk > 0 && self.0[..k].iter().all(|&p| p != shrunk) {
                let mut parts = self.0.clone();
                parts[k] = shrunk;
                out.push(Self(parts));
            }
        }
        out
    }

    /// `self ≤_c other`, by an upward search from `self` pruned by size,
    /// length and largest part.
    pub fn leq_c(&self, other: &Self) -> bool {
        if self.size() > other.size()
            || self.len() > other.len()
            || self.max_part() > other.max_part()
        {
            return false;
        }
        let mut layer: HashSet<Self> = HashSet::from([self.clone()]);
        for _ in self.size()..other.size() {
            let mut next = HashSet::new();
            for c in &layer {
                for up in c.covers_up() {
                    if up.len() <= other.len() && up.max_part() <= other.max_part() {
                        next.insert(up);
                    }
                }
            }
            layer = next;
        }
        layer.contains(other)
    }

    /// `|α|_j` for `j = 1..=max part`: the number of cells in column `j`.
    pub fn column_heights(&self) -> Vec<usize> {
        (1..=self.max_part())
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect()
    }

    /// The dominance preorder `self ⊴ other`: every prefix sum of the column
    /// heights of `other` is at most that of `self`.
    pub fn dominance_leq(&self, other: &Self) -> Result<bool, ShapeError> {
        if self.size() != other.size() {
            return Err(ShapeError::SizeMismatch(self.size(), other.size()));
        }
        let mine = prefix_sums(&self.column_heights());
        let theirs = prefix_sums(&other.column_heights());
        let width = mine.len().max(theirs.len());
        let at = |v: &[usize], k: usize| v.get(k).copied().unwrap_or(*v.last().unwrap_or(&0));
        Ok((0..width).all(|k| at(&theirs, k) <= at(&mine, k)))
    }

    /// Strict variant: `self ⊴ other` and `self ≠ other`.
    pub fn dominance_lt(&self, other: &Self) -> Result<bool, ShapeError> {
        Ok(self != other && self.dominance_leq(other)?)
    }
}

fn prefix_sums(v: &[usize]) -> Vec<usize> {
    v.iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            rec(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Composition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ShapeError::Parse(s.to_string()))?;
        if body.is_empty() {
            return Ok(Self::empty());
        }
        let parts = body
            .split(',')
            .map(|p| p.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ShapeError::Parse(s.to_string()))?;
        Self::new(parts)
    }
}

/// A cell in matrix coordinates, both 1-based, top row first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// `self` attacks `other`: same column and different rows, or `other` is
    /// one column to the right and strictly below.
    pub fn attacks(&self, other: &Self) -> bool {
        (self.col == other.col && self.row != other.row)
            || (other.col == self.col + 1 && self.row < other.row)
    }
}

/// The skew shape `outer ⫽ inner`, with `inner` bottom-aligned in `outer`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Composition,
    inner: Composition,
    /// Inner row length for each outer row (zero above the inner shape).
    inner_rows: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: Composition, inner: Composition) -> Result<Self, ShapeError> {
        if !inner.leq_c(&outer) {
            return Err(ShapeError::NotContained { outer, inner });
        }
        Ok(Self::new_unchecked(outer, inner))
    }

    pub(crate) fn new_unchecked(outer: Composition, inner: Composition) -> Self {
        let offset = outer.len() - inner.len();
        let mut inner_rows = vec![0; outer.len()];
        for (i, &p) in inner.parts().iter().enumerate() {
            inner_rows[offset + i] = p;
        }
        Self {
            outer,
            inner,
            inner_rows,
        }
    }

    pub fn straight(outer: Composition) -> Self {
        Self::new_unchecked(outer, Composition::empty())
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.outer.parts()[row - 1]
    }

    pub fn inner_row_len(&self, row: usize) -> usize {
        self.inner_rows[row - 1]
    }

    pub fn in_outer(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.rows()
            && cell.col >= 1
            && cell.col <= self.row_len(cell.row)
    }

    pub fn in_inner(&self, cell: Cell) -> bool {
        self.in_outer(cell) && cell.col <= self.inner_row_len(cell.row)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.in_outer(cell) && !self.in_inner(cell)
    }

    /// Cells of the skew shape, row by row, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.rows())
            .flat_map(|r| {
                (self.inner_row_len(r) + 1..=self.row_len(r)).map(move |c| Cell::new(r, c))
            })
            .collect()
    }

    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.cells().into_iter().collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((o, i)) => Self::new(o.parse()?, i.parse()?),
            None => Ok(Self::straight(s.parse()?)),
        }
    }
}
