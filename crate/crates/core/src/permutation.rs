//! Permutations of `1..=n` in one-line notation, the left weak Bruhat order
//! and its intervals.
//!
//! Composition is functional: `(a * b)(x) = a(b(x))`. Under this convention
//! the left multiplication `s_i * w` exchanges the *values* `i` and `i + 1`
//! in the one-line word of `w`, which is exactly what swapping the entries
//! `i` and `i + 1` of a tableau does to its column word.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("one-line word {0:?} is not a permutation of 1..=n")]
    NotBijective(Vec<usize>),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("generator index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("{lower} is not below {upper} in left weak order")]
    NotComparable {
        lower: Permutation,
        upper: Permutation,
    },
    #[error("cannot parse permutation from {0:?}")]
    Parse(String),
}

/// An element of the symmetric group `S_n`, stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    pub fn from_one_line(word: Vec<usize>) -> Result<Self, PermutationError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(PermutationError::NotBijective(word));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    /// The simple transposition `s_i` of `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self, PermutationError> {
        if i == 0 || i >= n {
            return Err(PermutationError::IndexOutOfRange {
                index: i,
                degree: n,
            });
        }
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, i);
        Ok(Self { word })
    }

    /// Product `s_{w[0]} * s_{w[1]} * ... * s_{w[k-1]}`, leftmost factor first.
    pub fn from_word(indices: &[usize], n: usize) -> Result<Self, PermutationError> {
        let mut p = Self::identity(n);
        for &i in indices.iter().rev() {
            p = p.left_mul_simple(i)?;
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.word
    }

    /// Image of `x` (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.word[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.word.len()];
        for (p, &v) in self.word.iter().enumerate() {
            inv[v - 1] = p + 1;
        }
        Self { word: inv }
    }

    /// Functional composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermutationError> {
        if self.degree() != other.degree() {
            return Err(PermutationError::DegreeMismatch(
                self.degree(),
                other.degree(),
            ));
        }
        Ok(Self {
            word: other.word.iter().map(|&x| self.word[x - 1]).collect(),
        })
    }

    /// `s_i * self`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Result<Self, PermutationError> {
        let n = self.degree();
        if i == 0 || i >= n {
            return Err(PermutationError::IndexOutOfRange {
                index: i,
                degree: n,
            });
        }
        let word = self
            .word
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Ok(Self { word })
    }

    /// Number of inversions, which equals the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut inv = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Left descents: indices `i` with `l(s_i w) < l(w)`, i.e. the value
    /// `i + 1` occurs before `i` in the one-line word.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.degree())
            .filter(|&i| inv.word[i] < inv.word[i - 1])
            .collect()
    }

    /// Some reduced word `(j_k, ..., j_1)` with `self = s_{j_k} ... s_{j_1}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        while let Some(&i) = cur.left_descents().first() {
            out.push(i);
            cur = cur.left_mul_simple(i).expect("descent index in range");
        }
        out
    }

    /// All reduced words, leftmost factor first, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        let mut memo = HashMap::new();
        let mut words = reduced_words_memo(self, &mut memo);
        words.sort();
        words
    }

    /// Indices occurring in a reduced word, read off a single reduced word.
    pub fn support(&self) -> BTreeSet<usize> {
        self.reduced_word().into_iter().collect()
    }

    pub fn left_weak_leq(&self, other: &Self) -> Result<bool, PermutationError> {
        if self.degree() != other.degree() {
            return Err(PermutationError::DegreeMismatch(
                self.degree(),
                other.degree(),
            ));
        }
        let quotient = other.compose(&self.inverse())?;
        Ok(other.length() >= self.length() && quotient.length() == other.length() - self.length())
    }

    pub fn weak_interval(&self, top: &Self) -> Result<WeakInterval, PermutationError> {
        WeakInterval::new(self.clone(), top.clone())
    }
}

fn reduced_words_memo(
    p: &Permutation,
    memo: &mut HashMap<Permutation, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(w) = memo.get(p) {
        return w.clone();
    }
    let descents = p.left_descents();
    let words = if descents.is_empty() {
        vec![Vec::new()]
    } else {
        let mut acc = Vec::new();
        for i in descents {
            let rest = p.left_mul_simple(i).expect("descent index in range");
            for mut tail in reduced_words_memo(&rest, memo) {
                tail.insert(0, i);
                acc.push(tail);
            }
        }
        acc
    };
    memo.insert(p.clone(), words.clone());
    words
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutations of equal degree")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.iter().all(|&v| v < 10) {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    /// Accepts compact digits (`"16857423"`) or a bracketed list (`"[1,10,2,...]"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let word: Option<Vec<usize>> = if t.starts_with('[') && t.ends_with(']') {
            t[1..t.len() - 1]
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse().ok())
                .collect()
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let word = word.ok_or_else(|| PermutationError::Parse(s.to_string()))?;
        Self::from_one_line(word)
    }
}

/// All permutations of `S_n` in lexicographic order of their one-line words.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = used.len() - 1;
        if prefix.len() == n {
            out.push(Permutation {
                word: prefix.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        &mut Vec::with_capacity(n),
        &mut vec![false; n + 1],
        &mut out,
    );
    out
}

/// A cover `lower ⋖ upper = s_label * lower` inside an interval, by element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LabeledCover {
    pub lower: usize,
    pub upper: usize,
    pub label: usize,
}

/// An interval `[bottom, top]` of the left weak order, materialised with its
/// covers. Elements are sorted by rank, then lexicographically.
#[derive(Debug, Clone)]
pub struct WeakInterval {
    bottom: Permutation,
    top: Permutation,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    covers: Vec<LabeledCover>,
    ranks: Vec<usize>,
}

impl WeakInterval {
    pub fn new(bottom: Permutation, top: Permutation) -> Result<Self, PermutationError> {
        if !bottom.left_weak_leq(&top)? {
            return Err(PermutationError::NotComparable {
                lower: bottom,
                upper: top,
            });
        }
        let n = bottom.degree();
        let base_len = bottom.length();
        let mut found: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::from([bottom.clone()]);
        found.insert(bottom.clone());
        let mut raw_covers = Vec::new();
        while let Some(p) = queue.pop_front() {
            for i in 1..n {
                let q = p.left_mul_simple(i)?;
                if q.length() != p.length() + 1 || !q.left_weak_leq(&top)? {
                    continue;
                }
                raw_covers.push((p.clone(), q.clone(), i));
                if found.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let mut elements: Vec<Permutation> = found.into_iter().collect();
        elements.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), k))
            .collect();
        let mut covers: Vec<LabeledCover> = raw_covers
            .into_iter()
            .map(|(a, b, label)| LabeledCover {
                lower: index[&a],
                upper: index[&b],
                label,
            })
            .collect();
        covers.sort();
        let ranks = elements.iter().map(|p| p.length() - base_len).collect();
        Ok(Self {
            bottom,
            top,
            elements,
            index,
            covers,
            ranks,
        })
    }

    pub fn bottom(&self) -> &Permutation {
        &self.bottom
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn covers(&self) -> &[LabeledCover] {
        &self.covers
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `rank(ρ) = l(ρ · bottom⁻¹)`.
    pub fn rank(&self, p: &Permutation) -> Option<usize> {
        self.index_of(p).map(|k| self.ranks[k])
    }

    /// Number of elements at each rank, starting from rank 0.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let max = self.ranks.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0; max + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    /// Order relation computed from the covers alone (reflexive-transitive closure).
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        let k = self.elements.len();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); k];
        for c in &self.covers {
            up[c.lower].push(c.upper);
        }
        let mut leq = vec![vec![false; k]; k];
        for (a, row) in leq.iter_mut().enumerate() {
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                if !row[x] {
                    row[x] = true;
                    stack.extend(up[x].iter().copied());
                }
            }
        }
        leq
    }

    /// Every cover raises the rank by exactly one and the rank equals `l(ρ·bottom⁻¹)`.
    pub fn is_graded(&self) -> bool {
        let inv = self.bottom.inverse();
        self.covers
            .iter()
            .all(|c| self.ranks[c.upper] == self.ranks[c.lower] + 1)
            && self
                .elements
                .iter()
                .zip(&self.ranks)
                .all(|(p, &r)| (p * &inv).length() == r)
    }

    /// Every pair has a unique meet and a unique join.
    pub fn is_lattice(&self) -> bool {
        is_lattice(&self.leq_matrix())
    }

    /// All saturated chains from bottom to top, as element sequences.
    pub fn saturated_chains(&self) -> Vec<Vec<Permutation>> {
        let k = self.elements.len();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); k];
        for c in &self.covers {
            up[c.lower].push(c.upper);
        }
        let start = self.index[&self.bottom];
        let end = self.index[&self.top];
        let mut out = Vec::new();
        let mut path = vec![start];
        fn walk(
            at: usize,
            end: usize,
            up: &[Vec<usize>],
            path: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if at == end {
                out.push(path.clone());
                return;
            }
            for &nx in &up[at] {
                path.push(nx);
                walk(nx, end, up, path, out);
                path.pop();
            }
        }
        walk(start, end, &up, &mut path, &mut out);
        out.into_iter()
            .map(|c| c.into_iter().map(|x| self.elements[x].clone()).collect())
            .collect()
    }
}

/// Reduced word `(i_k, ..., i_1)` of `top · bottom⁻¹` read off a saturated chain
/// `bottom ⋖ s_{i_1} bottom ⋖ ... ⋖ top`.
pub fn chain_to_word(chain: &[Permutation]) -> Vec<usize> {
    let mut word: Vec<usize> = chain
        .windows(2)
        .map(|w| {
            let (a, b) = (&w[0], &w[1]);
            // b = s_i a, so b a⁻¹ = s_i; locate the swapped value.
            let q = b * &a.inverse();
            (1..q.degree())
                .find(|&i| q.apply(i) == i + 1)
                .expect("consecutive chain elements differ by a simple transposition")
        })
        .collect();
    word.reverse();
    word
}

/// Inverse of [`chain_to_word`]: the chain traced by a reduced word of `top · bottom⁻¹`.
pub fn word_to_chain(
    bottom: &Permutation,
    word: &[usize],
) -> Result<Vec<Permutation>, PermutationError> {
    let mut chain = vec![bottom.clone()];
    for &i in word.iter().rev() {
        let next = chain.last().expect("nonempty").left_mul_simple(i)?;
        chain.push(next);
    }
    Ok(chain)
}

/// Checks unique meets and joins for a finite poset given by its order matrix.
pub fn is_lattice(leq: &[Vec<bool>]) -> bool {
    let k = leq.len();
    let unique_extreme = |bounds: Vec<usize>, greatest: bool| -> bool {
        let extremes: Vec<usize> = bounds
            .iter()
            .copied()
            .filter(|&x| {
                bounds
                    .iter()
                    .all(|&y| if greatest { leq[y][x] } else { leq[x][y] })
            })
            .collect();
        extremes.len() == 1
    };
    for a in 0..k {
        for b in a + 1..k {
            let lower: Vec<usize> = (0..k).filter(|&x| leq[x][a] && leq[x][b]).collect();
            let upper: Vec<usize> = (0..k).filter(|&x| leq[a][x] && leq[b][x]).collect();
            if !unique_extreme(lower, true) || !unique_extreme(upper, false) {
                return false;
            }
        }
    }
    true
}
