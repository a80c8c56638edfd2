//! Standard composition tableaux (SCT) of skew composition shapes.
//!
//! Text format: rows top to bottom separated by `|`, entries separated by
//! spaces, inner-shape cells written as `.`, e.g. `2 | . 5 4 1 | . . 3`.
//!
//! Column words read only the filled cells, so a skew tableau of size `n`
//! always yields a permutation of `S_n`; inner cells contribute nothing.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use thiserror::Error;

use crate::composition::{Cell, Composition, ShapeError, SkewShape};
use crate::permutation::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("row {row} has {got} filled cells, shape needs {want}")]
    RowLength { row: usize, got: usize, want: usize },
    #[error("filling is not a bijection onto 1..={0}")]
    NotBijective(usize),
    #[error("filling violates the standard composition tableau rules")]
    NotStandard,
    #[error("restriction index {m} out of range 0..={n}")]
    RestrictionOutOfRange { m: usize, n: usize },
    #[error("sequence is not a saturated chain in the composition poset")]
    NotAChain,
    #[error("cannot parse tableau from {0:?}")]
    Parse(String),
}

/// Entries of the skew cells, row by row, left to right.
pub type Filling = Vec<Vec<usize>>;

/// A standard composition tableau. Stores both the cell → entry grid and the
/// entry → cell table.
#[derive(Clone)]
pub struct Tableau {
    shape: SkewShape,
    /// `grid[r-1][c-1]` is the entry at `(r, c)`; inner cells hold 0.
    grid: Vec<Vec<usize>>,
    /// `positions[k-1]` is the cell holding `k`.
    positions: Vec<Cell>,
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.positions == other.positions
    }
}

impl Eq for Tableau {}

impl Hash for Tableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.positions.hash(state);
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.positions.cmp(&other.positions))
    }
}

/// Descent statistics of a tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentData {
    /// `i` with `c(i) <= c(i+1)`.
    pub descents: BTreeSet<usize>,
    pub attacking: BTreeSet<usize>,
    pub non_attacking: BTreeSet<usize>,
    /// Complement of the descents in `1..n`.
    pub ascents: BTreeSet<usize>,
    /// Ascents where `i + 1` is the left neighbour of `i`.
    pub neighborly: BTreeSet<usize>,
}

fn build_grid(shape: &SkewShape, filling: &Filling) -> Result<Vec<Vec<usize>>, TableauError> {
    if filling.len() != shape.rows() {
        return Err(TableauError::RowLength {
            row: filling.len().min(shape.rows()) + 1,
            got: 0,
            want: 0,
        });
    }
    let mut grid = Vec::with_capacity(shape.rows());
    for (r0, row) in filling.iter().enumerate() {
        let r = r0 + 1;
        let want = shape.row_len(r) - shape.inner_row_len(r);
        if row.len() != want {
            return Err(TableauError::RowLength {
                row: r,
                got: row.len(),
                want,
            });
        }
        let mut line = vec![0; shape.inner_row_len(r)];
        line.extend_from_slice(row);
        grid.push(line);
    }
    Ok(grid)
}

fn positions_of(grid: &[Vec<usize>], n: usize) -> Result<Vec<Cell>, TableauError> {
    let mut positions: Vec<Option<Cell>> = vec![None; n];
    for (r0, line) in grid.iter().enumerate() {
        for (c0, &v) in line.iter().enumerate() {
            if v == 0 {
                continue;
            }
            if v > n || positions[v - 1].is_some() {
                return Err(TableauError::NotBijective(n));
            }
            positions[v - 1] = Some(Cell::new(r0 + 1, c0 + 1));
        }
    }
    positions
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(TableauError::NotBijective(n))
}

fn grid_from_positions(shape: &SkewShape, positions: &[Cell]) -> Vec<Vec<usize>> {
    let mut grid: Vec<Vec<usize>> = (1..=shape.rows())
        .map(|r| vec![0; shape.row_len(r)])
        .collect();
    for (k, cell) in positions.iter().enumerate() {
        grid[cell.row - 1][cell.col - 1] = k + 1;
    }
    grid
}

/// Checks the three SCT rules for a bijective filling. Inner cells count as ∞.
pub fn is_valid_sct(shape: &SkewShape, filling: &Filling) -> Result<bool, TableauError> {
    let grid = build_grid(shape, filling)?;
    positions_of(&grid, shape.size())?;
    Ok(rules_hold(shape, &grid))
}

fn rules_hold(shape: &SkewShape, grid: &[Vec<usize>]) -> bool {
    let value = |cell: Cell| -> Option<usize> {
        if !shape.in_outer(cell) {
            None
        } else if shape.in_inner(cell) {
            Some(usize::MAX)
        } else {
            Some(grid[cell.row - 1][cell.col - 1])
        }
    };
    // Rows strictly decrease.
    for (r0, line) in grid.iter().enumerate() {
        let filled = &line[shape.inner_row_len(r0 + 1)..];
        if filled.windows(2).any(|w| w[0] <= w[1]) {
            return false;
        }
    }
    // First column strictly increases downwards.
    let first: Vec<usize> = (1..=shape.rows())
        .filter(|&r| shape.contains(Cell::new(r, 1)))
        .map(|r| grid[r - 1][0])
        .collect();
    if first.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    // Triple rule.
    for low in shape.cells() {
        if low.col < 2 {
            continue;
        }
        let b = grid[low.row - 1][low.col - 1];
        for i in 1..low.row {
            let Some(a) = value(Cell::new(i, low.col - 1)) else {
                continue;
            };
            if b < a {
                match value(Cell::new(i, low.col)) {
                    Some(above) if b < above => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

impl Tableau {
    /// Builds a tableau from the filled entries of each row, checking the SCT rules.
    pub fn new(shape: SkewShape, filling: Filling) -> Result<Self, TableauError> {
        let grid = build_grid(&shape, &filling)?;
        let positions = positions_of(&grid, shape.size())?;
        if !rules_hold(&shape, &grid) {
            return Err(TableauError::NotStandard);
        }
        Ok(Self {
            shape,
            grid,
            positions,
        })
    }

    fn from_positions(shape: SkewShape, positions: Vec<Cell>) -> Self {
        let grid = grid_from_positions(&shape, &positions);
        let t = Self {
            shape,
            grid,
            positions,
        };
        debug_assert!(rules_hold(&t.shape, &t.grid));
        t
    }

    /// The unique tableau of the empty skew shape `inner ⫽ inner`.
    pub fn empty(inner: Composition) -> Self {
        Self::from_positions(SkewShape::new_unchecked(inner.clone(), inner), Vec::new())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer_shape(&self) -> &Composition {
        self.shape.outer()
    }

    pub fn inner_shape(&self) -> &Composition {
        self.shape.inner()
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    /// Entry at a skew cell.
    pub fn entry(&self, cell: Cell) -> Option<usize> {
        if self.shape.contains(cell) {
            Some(self.grid[cell.row - 1][cell.col - 1])
        } else {
            None
        }
    }

    /// Cell holding entry `k` (1-based).
    pub fn position(&self, k: usize) -> Cell {
        self.positions[k - 1]
    }

    pub fn positions(&self) -> &[Cell] {
        &self.positions
    }

    pub fn filling(&self) -> Filling {
        self.grid
            .iter()
            .enumerate()
            .map(|(r0, line)| line[self.shape.inner_row_len(r0 + 1)..].to_vec())
            .collect()
    }

    /// `a` attacks `b` as entries of this tableau.
    pub fn attacks(&self, a: usize, b: usize) -> bool {
        self.position(a).attacks(&self.position(b))
    }

    /// Some entry of `a` attacks some entry of `b`.
    pub fn attacks_any(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().any(|&x| b.iter().any(|&y| self.attacks(x, y)))
    }

    pub fn descent_data(&self) -> DescentData {
        let n = self.size();
        let mut d = DescentData {
            descents: BTreeSet::new(),
            attacking: BTreeSet::new(),
            non_attacking: BTreeSet::new(),
            ascents: BTreeSet::new(),
            neighborly: BTreeSet::new(),
        };
        for i in 1..n {
            let (a, b) = (self.position(i), self.position(i + 1));
            if a.col <= b.col {
                d.descents.insert(i);
                if a.attacks(&b) {
                    d.attacking.insert(i);
                } else {
                    d.non_attacking.insert(i);
                }
            } else {
                d.ascents.insert(i);
                if b.row == a.row && b.col + 1 == a.col {
                    d.neighborly.insert(i);
                }
            }
        }
        d
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.size())
            .filter(|&i| self.position(i).col <= self.position(i + 1).col)
            .collect()
    }

    /// `s_i T`: entries `i` and `i + 1` exchanged. Only valid as an SCT when
    /// `i` is a non-attacking descent; callers guarantee that.
    pub(crate) fn swap_adjacent(&self, i: usize) -> Self {
        let mut positions = self.positions.clone();
        positions.swap(i - 1, i);
        Self::from_positions(self.shape.clone(), positions)
    }

    /// Entries of each column read top to bottom, concatenated left to right.
    pub fn column_word(&self) -> Permutation {
        let width = self.shape.outer().max_part();
        let mut word = Vec::with_capacity(self.size());
        for c in 1..=width {
            for r in 1..=self.shape.rows() {
                if let Some(v) = self.entry(Cell::new(r, c)) {
                    word.push(v);
                }
            }
        }
        Permutation::from_one_line(word).expect("column word of an SCT is a permutation")
    }

    /// Frame row lengths (in outer-shape rows) after removing entries `1..=m`.
    fn row_lengths_after(&self, m: usize) -> Vec<usize> {
        let mut lens: Vec<usize> = (1..=self.shape.rows())
            .map(|r| self.shape.row_len(r))
            .collect();
        for k in 1..=m {
            lens[self.position(k).row - 1] -= 1;
        }
        lens
    }

    /// The saturated chain `chain[m] = α^m`, from `chain[0] = outer` down to
    /// `chain[n] = inner`, where `α^{m-1}` is `α^m` plus the cell of `m`.
    pub fn chain_of(&self) -> Vec<Composition> {
        (0..=self.size())
            .map(|m| Composition::from_row_lengths(&self.row_lengths_after(m)))
            .collect()
    }

    /// `T^{>m}`: drop the cells holding `1..=m` and subtract `m` from the rest.
    /// The result has shape `α^m ⫽ inner` in its own coordinates.
    pub fn restrict_above(&self, m: usize) -> Result<Self, TableauError> {
        let n = self.size();
        if m > n {
            return Err(TableauError::RestrictionOutOfRange { m, n });
        }
        let lens = self.row_lengths_after(m);
        let dropped = lens.iter().take_while(|&&l| l == 0).count();
        let outer = Composition::from_row_lengths(&lens);
        let shape = SkewShape::new_unchecked(outer, self.shape.inner().clone());
        let positions = self.positions[m..]
            .iter()
            .map(|c| Cell::new(c.row - dropped, c.col))
            .collect();
        Ok(Self::from_positions(shape, positions))
    }

    /// Inverse of [`chain_of`](Self::chain_of): `chain[0]` is the outer shape,
    /// the last element the inner shape.
    pub fn from_chain(chain: &[Composition]) -> Result<Self, TableauError> {
        let outer = chain.first().ok_or(TableauError::NotAChain)?.clone();
        let inner = chain.last().expect("nonempty").clone();
        let rows = outer.len();
        let frame = |c: &Composition| -> Option<Vec<usize>> {
            let pad = rows.checked_sub(c.len())?;
            let mut v = vec![0; pad];
            v.extend_from_slice(c.parts());
            Some(v)
        };
        let mut positions = Vec::with_capacity(chain.len() - 1);
        for w in chain.windows(2) {
            if !w[1].covers_up().contains(&w[0]) {
                return Err(TableauError::NotAChain);
            }
            let (hi, lo) = (
                frame(&w[0]).ok_or(TableauError::NotAChain)?,
                frame(&w[1]).ok_or(TableauError::NotAChain)?,
            );
            let r = (0..rows)
                .find(|&r| hi[r] != lo[r])
                .ok_or(TableauError::NotAChain)?;
            positions.push(Cell::new(r + 1, hi[r]));
        }
        let shape = SkewShape::new_unchecked(outer, inner);
        let grid = grid_from_positions(&shape, &positions);
        if !rules_hold(&shape, &grid) {
            return Err(TableauError::NotStandard);
        }
        Ok(Self {
            shape,
            grid,
            positions,
        })
    }
}

/// All SCT of a skew shape, in lexicographic order of their position arrays.
///
/// Entry `k` is placed by the `k`-th downward cover step from the outer
/// shape: the removed cell is the last cell of a row, and either that row is
/// the topmost nonempty row of length one, or it is the topmost row of its new
/// length. Branches that cannot reach the inner shape are discarded.
pub fn enumerate_sct(shape: &SkewShape) -> Vec<Tableau> {
    let rows = shape.rows();
    let mut lens: Vec<usize> = (1..=rows).map(|r| shape.row_len(r)).collect();
    let inner: Vec<usize> = (1..=rows).map(|r| shape.inner_row_len(r)).collect();
    let mut path = Vec::with_capacity(shape.size());
    let mut out = Vec::new();
    descend(shape, &mut lens, &inner, &mut path, &mut out);
    out
}

fn descend(
    shape: &SkewShape,
    lens: &mut [usize],
    inner: &[usize],
    path: &mut Vec<Cell>,
    out: &mut Vec<Tableau>,
) {
    if path.len() == shape.size() {
        out.push(Tableau::from_positions(shape.clone(), path.clone()));
        return;
    }
    let top = lens.iter().position(|&l| l > 0);
    for r in 0..lens.len() {
        let len = lens[r];
        if len == 0 || len <= inner[r] {
            continue;
        }
        let removable = if len == 1 {
            Some(r) == top
        } else {
            lens[..r].iter().all(|&above| above != len - 1)
        };
        if !removable {
            continue;
        }
        path.push(Cell::new(r + 1, len));
        lens[r] -= 1;
        descend(shape, lens, inner, path, out);
        lens[r] += 1;
        path.pop();
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .grid
            .iter()
            .map(|line| {
                line.iter()
                    .map(|&v| {
                        if v == 0 {
                            ".".to_string()
                        } else {
                            v.to_string()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" | "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Tableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || TableauError::Parse(s.to_string());
        if s.trim().is_empty() {
            return Ok(Self::empty(Composition::empty()));
        }
        let mut outer = Vec::new();
        let mut dots = Vec::new();
        let mut filling = Vec::new();
        for row in s.split('|') {
            let tokens: Vec<&str> = row.split_whitespace().collect();
            if tokens.is_empty() {
                return Err(err());
            }
            let d = tokens.iter().take_while(|t| **t == ".").count();
            let entries = tokens[d..]
                .iter()
                .map(|t| t.parse::<usize>().map_err(|_| err()))
                .collect::<Result<Vec<_>, _>>()?;
            outer.push(tokens.len());
            dots.push(d);
            filling.push(entries);
        }
        let first_inner = dots.iter().position(|&d| d > 0).unwrap_or(dots.len());
        if dots[first_inner..].contains(&0) {
            return Err(err());
        }
        let inner = Composition::new(dots[first_inner..].to_vec())?;
        let shape = SkewShape::new(Composition::new(outer)?, inner)?;
        Self::new(shape, filling)
    }
}
