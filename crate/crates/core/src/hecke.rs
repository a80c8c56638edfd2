//! The 0-Hecke action on standard composition tableaux and the posets of its
//! equivalence classes.
//!
//! `π_i` fixes `T` when `i` is not a descent, kills it when `i` is an
//! attacking descent and otherwise swaps the entries `i` and `i + 1`. Two
//! tableaux of one shape are equivalent when every column lists its entries in
//! the same relative order; each class spans a submodule whose basis graph is
//! materialised here as a [`ClassPoset`].

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::composition::{Cell, SkewShape};
use crate::permutation::{is_lattice, Permutation, PermutationError};
use crate::tableau::{enumerate_sct, Tableau, TableauError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("generator index {index} out of range 1..{size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("word acts as zero on {0}")]
    ActsAsZero(String),
    #[error("tableaux {0} and {1} are not comparable in a common class")]
    NotComparable(String, String),
    #[error("tableau {0} is not a member of this class")]
    NotAMember(String),
    #[error("expected exactly one {kind} tableau, found {count}")]
    NotUnique { kind: &'static str, count: usize },
    #[error("π_{index} maps {from} outside its class")]
    LeavesClass { index: usize, from: String },
    #[error("multi-flip precondition fails for entries {i}, {j}")]
    FlipPrecondition { i: usize, j: usize },
    #[error("annihilator precondition fails: {0}")]
    AnnihilatorPrecondition(&'static str),
    #[error("no entry above {i} is attacked by {i} in the source tableau")]
    AttackedEntryMissing { i: usize },
    #[error("class is empty")]
    EmptyClass,
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Permutation(#[from] PermutationError),
}

/// Result of acting on a basis tableau: the zero vector or another tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HeckeImage {
    Zero,
    Tableau(Tableau),
}

impl HeckeImage {
    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Zero)
    }

    pub fn tableau(&self) -> Option<&Tableau> {
        match self {
            Self::Zero => None,
            Self::Tableau(t) => Some(t),
        }
    }
}

impl fmt::Display for HeckeImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => write!(f, "0"),
            Self::Tableau(t) => write!(f, "{t}"),
        }
    }
}

/// A word `(j_k, ..., j_1)` in the generators, standing for `π_{j_k} ⋯ π_{j_1}`;
/// the rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct HeckeWord(pub Vec<usize>);

impl HeckeWord {
    pub fn new(indices: Vec<usize>) -> Self {
        Self(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The permutation `s_{j_k} ⋯ s_{j_1}`.
    pub fn permutation(&self, n: usize) -> Result<Permutation, PermutationError> {
        Permutation::from_word(&self.0, n)
    }
}

impl fmt::Display for HeckeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("π{i}")).collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

fn check_index(i: usize, t: &Tableau) -> Result<(), HeckeError> {
    if i == 0 || i >= t.size() {
        return Err(HeckeError::IndexOutOfRange {
            index: i,
            size: t.size(),
        });
    }
    Ok(())
}

/// `π_i T`.
pub fn apply_pi(i: usize, t: &Tableau) -> Result<HeckeImage, HeckeError> {
    check_index(i, t)?;
    let (a, b) = (t.position(i), t.position(i + 1));
    Ok(if a.col > b.col {
        HeckeImage::Tableau(t.clone())
    } else if a.attacks(&b) {
        HeckeImage::Zero
    } else {
        HeckeImage::Tableau(t.swap_adjacent(i))
    })
}

/// `π_{j_k} ⋯ π_{j_1} T`; zero absorbs.
pub fn apply_word(word: &HeckeWord, t: &Tableau) -> Result<HeckeImage, HeckeError> {
    for &i in word.indices() {
        check_index(i, t)?;
    }
    let mut cur = t.clone();
    for &i in word.indices().iter().rev() {
        match apply_pi(i, &cur)? {
            HeckeImage::Zero => return Ok(HeckeImage::Zero),
            HeckeImage::Tableau(next) => cur = next,
        }
    }
    Ok(HeckeImage::Tableau(cur))
}

/// Per-column relative orders: the entries of each column, read top to
/// bottom, replaced by their ranks within the column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassKey(pub Vec<Vec<usize>>);

pub fn equivalence_key(t: &Tableau) -> ClassKey {
    let shape = t.shape();
    let width = shape.outer().max_part();
    let columns = (1..=width)
        .map(|c| {
            let entries: Vec<usize> = (1..=shape.rows())
                .filter_map(|r| t.entry(Cell::new(r, c)))
                .collect();
            let mut sorted = entries.clone();
            sorted.sort_unstable();
            entries
                .iter()
                .map(|v| sorted.binary_search(v).expect("present") + 1)
                .collect()
        })
        .collect();
    ClassKey(columns)
}

/// A labelled Hasse edge `lower →^{π_label} upper`, by member index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ClassCover {
    pub lower: usize,
    pub upper: usize,
    pub label: usize,
}

/// An equivalence class with its order, covers, extremal tableaux and ranks.
/// Members are sorted by column word.
#[derive(Debug, Clone)]
pub struct ClassPoset {
    shape: SkewShape,
    key: ClassKey,
    members: Vec<Tableau>,
    column_words: Vec<Permutation>,
    index: HashMap<Tableau, usize>,
    covers: Vec<ClassCover>,
    order: Vec<Vec<bool>>,
    source: usize,
    sink: usize,
    ranks: Vec<usize>,
}

impl ClassPoset {
    /// Builds the poset on one class. Fails if the action leaves the class or
    /// the source or sink is not unique.
    pub fn new(shape: SkewShape, mut members: Vec<Tableau>) -> Result<Self, HeckeError> {
        if members.is_empty() {
            return Err(HeckeError::EmptyClass);
        }
        members.sort_by_cached_key(|t| t.column_word());
        let column_words: Vec<Permutation> = members.iter().map(|t| t.column_word()).collect();
        let key = equivalence_key(&members[0]);
        let index: HashMap<Tableau, usize> = members
            .iter()
            .enumerate()
            .map(|(k, t)| (t.clone(), k))
            .collect();
        let n = shape.size();
        let mut covers = Vec::new();
        for (k, t) in members.iter().enumerate() {
            for i in 1..n {
                if let HeckeImage::Tableau(img) = apply_pi(i, t)? {
                    if &img == t {
                        continue;
                    }
                    let upper = *index.get(&img).ok_or_else(|| HeckeError::LeavesClass {
                        index: i,
                        from: t.to_string(),
                    })?;
                    covers.push(ClassCover {
                        lower: k,
                        upper,
                        label: i,
                    });
                }
            }
        }
        covers.sort();
        let source = find_source(&members)?;
        let sink = find_sink(&members)?;
        let base = column_words[source].inverse();
        let ranks = column_words.iter().map(|w| (w * &base).length()).collect();
        let order = reachability(members.len(), &covers);
        Ok(Self {
            shape,
            key,
            members,
            column_words,
            index,
            covers,
            order,
            source,
            sink,
            ranks,
        })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn key(&self) -> &ClassKey {
        &self.key
    }

    pub fn members(&self) -> &[Tableau] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn covers(&self) -> &[ClassCover] {
        &self.covers
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        self.index.contains_key(t)
    }

    pub fn column_word(&self, k: usize) -> &Permutation {
        &self.column_words[k]
    }

    pub fn source(&self) -> &Tableau {
        &self.members[self.source]
    }

    pub fn sink(&self) -> &Tableau {
        &self.members[self.sink]
    }

    pub fn source_index(&self) -> usize {
        self.source
    }

    pub fn sink_index(&self) -> usize {
        self.sink
    }

    /// `δ(T) = l(col_T · col_source⁻¹)`.
    pub fn rank(&self, t: &Tableau) -> Option<usize> {
        self.index_of(t).map(|k| self.ranks[k])
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Number of members at each rank.
    pub fn rank_profile(&self) -> Vec<usize> {
        let max = self.ranks.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0; max + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    /// `a ⪯ b`: `b` is reachable from `a` through the action.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order[a][b]
    }

    pub fn order_matrix(&self) -> &[Vec<bool>] {
        &self.order
    }

    /// Members reachable from the source; equals the whole class when the
    /// module is cyclic on the source.
    pub fn reachable_from_source(&self) -> usize {
        self.order[self.source].iter().filter(|&&b| b).count()
    }

    /// Shortest word `w` with `π_w source = member k`, found by BFS over covers.
    pub fn word_from_source(&self, k: usize) -> Option<HeckeWord> {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(x) = queue.pop_front() {
            for c in self.covers.iter().filter(|c| c.lower == x) {
                if !seen[c.upper] {
                    seen[c.upper] = true;
                    prev[c.upper] = Some((x, c.label));
                    queue.push_back(c.upper);
                }
            }
        }
        if !seen[k] {
            return None;
        }
        let mut word = Vec::new();
        let mut at = k;
        while let Some((p, label)) = prev[at] {
            word.push(label);
            at = p;
        }
        Some(HeckeWord(word))
    }

    /// Hasse diagram in DOT; nodes in member order, labelled by tableau text.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for (k, t) in self.members.iter().enumerate() {
            let role = if k == self.source && k == self.sink {
                ", peripheries=3"
            } else if k == self.source || k == self.sink {
                ", peripheries=2"
            } else {
                ""
            };
            let _ = writeln!(out, "  n{k} [label=\"{t}\"{role}];");
        }
        for c in &self.covers {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"π{}\"];",
                c.lower, c.upper, c.label
            );
        }
        out.push_str("}\n");
        out
    }
}

fn reachability(k: usize, covers: &[ClassCover]) -> Vec<Vec<bool>> {
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); k];
    for c in covers {
        up[c.lower].push(c.upper);
    }
    let mut order = vec![vec![false; k]; k];
    for (a, row) in order.iter_mut().enumerate() {
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            if !row[x] {
                row[x] = true;
                stack.extend(up[x].iter().copied());
            }
        }
    }
    order
}

/// The unique member whose ascents are all neighbourly.
pub fn find_source(members: &[Tableau]) -> Result<usize, HeckeError> {
    unique_member(members, "source", |t| {
        let d = t.descent_data();
        d.ascents == d.neighborly
    })
}

/// The unique member whose descents are all attacking.
pub fn find_sink(members: &[Tableau]) -> Result<usize, HeckeError> {
    unique_member(members, "sink", |t| {
        let d = t.descent_data();
        d.descents == d.attacking
    })
}

fn unique_member(
    members: &[Tableau],
    kind: &'static str,
    pred: impl Fn(&Tableau) -> bool,
) -> Result<usize, HeckeError> {
    let hits: Vec<usize> = (0..members.len()).filter(|&k| pred(&members[k])).collect();
    match hits.as_slice() {
        [one] => Ok(*one),
        _ => Err(HeckeError::NotUnique {
            kind,
            count: hits.len(),
        }),
    }
}

/// Splits `SCT(shape)` into equivalence classes, ordered by the column word
/// of their source tableaux.
pub fn partition_classes(shape: &SkewShape) -> Result<Vec<ClassPoset>, HeckeError> {
    let mut groups: BTreeMap<ClassKey, Vec<Tableau>> = BTreeMap::new();
    for t in enumerate_sct(shape) {
        groups.entry(equivalence_key(&t)).or_default().push(t);
    }
    let mut classes = groups
        .into_values()
        .map(|members| ClassPoset::new(shape.clone(), members))
        .collect::<Result<Vec<_>, _>>()?;
    classes.sort_by_key(|a| a.source().column_word());
    Ok(classes)
}

/// Whether `T ↦ col_T` is a rank-preserving isomorphism from the class onto
/// the weak-order interval `[col_source, col_sink]`, and the class is a
/// graded lattice.
pub fn class_iso_check(class: &ClassPoset) -> bool {
    let bottom = class.column_word(class.source_index()).clone();
    let top = class.column_word(class.sink_index()).clone();
    let Ok(interval) = bottom.weak_interval(&top) else {
        return false;
    };
    if interval.len() != class.len() {
        return false;
    }
    let mut image = Vec::with_capacity(class.len());
    for k in 0..class.len() {
        match interval.index_of(class.column_word(k)) {
            Some(x) => image.push(x),
            None => return false,
        }
    }
    if image.iter().collect::<BTreeSet<_>>().len() != class.len() {
        return false;
    }
    // Labelled covers must correspond one to one.
    let mapped: BTreeSet<(usize, usize, usize)> = class
        .covers()
        .iter()
        .map(|c| (image[c.lower], image[c.upper], c.label))
        .collect();
    let target: BTreeSet<(usize, usize, usize)> = interval
        .covers()
        .iter()
        .map(|c| (c.lower, c.upper, c.label))
        .collect();
    if mapped.len() != class.covers().len() || mapped != target {
        return false;
    }
    // Rank function agrees and every cover raises it by one.
    let ranks_ok =
        (0..class.len()).all(|k| interval.rank(class.column_word(k)) == Some(class.ranks()[k]));
    let graded = class
        .covers()
        .iter()
        .all(|c| class.ranks()[c.upper] == class.ranks()[c.lower] + 1);
    ranks_ok && graded && interval.is_graded() && is_lattice(class.order_matrix())
}

/// Drops the letters of `word` that act trivially on the way through `t`.
/// Returns the surviving subword and the permutation it spells, which is
/// `col_{T₂} col_{T₁}⁻¹` for `T₂ = π_word T₁`.
pub fn normalize_word(
    word: &HeckeWord,
    t: &Tableau,
) -> Result<(HeckeWord, Permutation), HeckeError> {
    for &i in word.indices() {
        check_index(i, t)?;
    }
    let mut kept = Vec::new();
    let mut cur = t.clone();
    for &i in word.indices().iter().rev() {
        match apply_pi(i, &cur)? {
            HeckeImage::Zero => return Err(HeckeError::ActsAsZero(t.to_string())),
            HeckeImage::Tableau(next) => {
                if next != cur {
                    kept.push(i);
                    cur = next;
                }
            }
        }
    }
    kept.reverse();
    let kept = HeckeWord(kept);
    let perm = kept.permutation(t.size())?;
    Ok((kept, perm))
}

/// `π_{j-1} ⋯ π_{i+1} π_i T` when `i` lies strictly left of `[i+1, j]` and
/// attacks none of it. The cell that held `i` ends up holding `j`.
pub fn multi_flip(t: &Tableau, i: usize, j: usize) -> Result<Tableau, HeckeError> {
    let n = t.size();
    if i == 0 || i >= j || j > n {
        return Err(HeckeError::FlipPrecondition { i, j });
    }
    let cell = t.position(i);
    let ok = (i + 1..=j).all(|k| {
        let other = t.position(k);
        cell.col < other.col && !cell.attacks(&other)
    });
    if !ok {
        return Err(HeckeError::FlipPrecondition { i, j });
    }
    let word = HeckeWord((i..j).rev().collect());
    match apply_word(&word, t)? {
        HeckeImage::Tableau(out) => Ok(out),
        HeckeImage::Zero => Err(HeckeError::ActsAsZero(t.to_string())),
    }
}

/// The two descriptions of which generators occur between `T₁ ⪯ T₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportComparison {
    /// `supp(col_{T₂} col_{T₁}⁻¹)`.
    pub via_column_words: BTreeSet<usize>,
    /// `i` with `sh(T₂^{>i}) ≠ sh(T₁^{>i})`, indexed `1..n`.
    pub shapes_differ: Vec<bool>,
}

impl SupportComparison {
    pub fn via_shapes(&self) -> BTreeSet<usize> {
        (1..=self.shapes_differ.len())
            .filter(|&i| self.shapes_differ[i - 1])
            .collect()
    }

    pub fn agree(&self) -> bool {
        self.via_column_words == self.via_shapes()
    }
}

/// Tableaux reachable from `t` under the action (including `t`).
pub fn orbit_above(t: &Tableau) -> BTreeSet<Tableau> {
    let mut seen = BTreeSet::from([t.clone()]);
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 1..x.size() {
            if let Ok(HeckeImage::Tableau(y)) = apply_pi(i, &x) {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

pub fn support_criterion(t1: &Tableau, t2: &Tableau) -> Result<SupportComparison, HeckeError> {
    if t1.shape() != t2.shape() || !orbit_above(t1).contains(t2) {
        return Err(HeckeError::NotComparable(t1.to_string(), t2.to_string()));
    }
    let quotient = &t2.column_word() * &t1.column_word().inverse();
    let n = t1.size();
    let shapes_differ = (1..n)
        .map(|i| Ok(t2.restrict_above(i)?.shape() != t1.restrict_above(i)?.shape()))
        .collect::<Result<Vec<bool>, TableauError>>()?;
    Ok(SupportComparison {
        via_column_words: quotient.support(),
        shapes_differ,
    })
}

/// The word killing the source while moving `T` within its class.
#[derive(Debug, Clone)]
pub struct AnnihilatorWitness {
    /// Largest entry whose cell differs between `T` and the source.
    pub i: usize,
    /// Smallest entry above `i` attacked by `i` in the source.
    pub j: usize,
    /// `(j-1, ..., i+1, i)`.
    pub word: HeckeWord,
    pub on_source: HeckeImage,
    pub on_tableau: HeckeImage,
}

impl AnnihilatorWitness {
    /// `π_σ T₀ = 0`, `π_σ T ∈ E` and `σ = col_{π_σ T} col_T⁻¹`.
    pub fn holds(&self, class: &ClassPoset, t: &Tableau) -> bool {
        let Some(image) = self.on_tableau.tableau() else {
            return false;
        };
        let Ok(sigma) = self.word.permutation(t.size()) else {
            return false;
        };
        self.on_source.is_zero()
            && class.contains(image)
            && sigma == &image.column_word() * &t.column_word().inverse()
    }
}

/// Builds `σ = s_{j-1} ⋯ s_i` for a non-source member `T` with `D(T) ⊆ D(T₀)`.
pub fn annihilator_word(class: &ClassPoset, t: &Tableau) -> Result<AnnihilatorWitness, HeckeError> {
    if !class.contains(t) {
        return Err(HeckeError::NotAMember(t.to_string()));
    }
    let source = class.source();
    if t == source {
        return Err(HeckeError::AnnihilatorPrecondition("tableau is the source"));
    }
    if !t.descent_set().is_subset(&source.descent_set()) {
        return Err(HeckeError::AnnihilatorPrecondition(
            "descent set not contained in that of the source",
        ));
    }
    let n = t.size();
    let i = (1..=n)
        .rev()
        .find(|&k| t.position(k) != source.position(k))
        .expect("distinct tableaux of one shape differ somewhere");
    let j = (i + 1..=n)
        .find(|&k| source.attacks(i, k))
        .ok_or(HeckeError::AttackedEntryMissing { i })?;
    let word = HeckeWord((i..j).rev().collect());
    let on_source = apply_word(&word, source)?;
    let on_tableau = apply_word(&word, t)?;
    Ok(AnnihilatorWitness {
        i,
        j,
        word,
        on_source,
        on_tableau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_of;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn figure_class() -> ClassPoset {
        let source = t("1 | 6 5 4 3 | 8 7 2");
        partition_classes(source.shape())
            .unwrap()
            .into_iter()
            .find(|c| c.contains(&source))
            .unwrap()
    }

    #[test]
    fn action_table_of_worked_example() {
        let x = t("1 | 6 5 4 3 | 8 7 2");
        for i in [3, 4, 5, 7] {
            assert_eq!(apply_pi(i, &x).unwrap(), HeckeImage::Tableau(x.clone()));
        }
        assert_eq!(apply_pi(6, &x).unwrap(), HeckeImage::Zero);
        assert_eq!(
            apply_pi(1, &x).unwrap(),
            HeckeImage::Tableau(t("2 | 6 5 4 3 | 8 7 1"))
        );
        assert_eq!(
            apply_pi(2, &x).unwrap(),
            HeckeImage::Tableau(t("1 | 6 5 4 2 | 8 7 3"))
        );
        assert!(matches!(
            apply_pi(8, &x),
            Err(HeckeError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            apply_pi(0, &x),
            Err(HeckeError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn idempotent_generators() {
        for a in compositions_of(5) {
            for x in enumerate_sct(&SkewShape::straight(a)) {
                for i in 1..5 {
                    let once = apply_pi(i, &x).unwrap();
                    let twice = apply_word(&HeckeWord(vec![i, i]), &x).unwrap();
                    assert_eq!(once, twice);
                }
            }
        }
    }

    #[test]
    fn words() {
        let x = t("1 | 6 5 4 3 | 8 7 2");
        assert_eq!(
            apply_word(&HeckeWord::default(), &x).unwrap(),
            HeckeImage::Tableau(x.clone())
        );
        assert_eq!(
            apply_word(&HeckeWord(vec![3, 2]), &x).unwrap(),
            HeckeImage::Zero
        );
    }

    #[test]
    fn figure_class_shape() {
        let class = figure_class();
        assert_eq!(class.len(), 8);
        assert_eq!(class.covers().len(), 9);
        assert_eq!(class.source(), &t("1 | 6 5 4 3 | 8 7 2"));
        assert_eq!(class.sink(), &t("4 | 6 5 3 1 | 8 7 2"));
        assert_eq!(class.rank_profile(), vec![1, 2, 2, 2, 1]);
        assert!(class_iso_check(&class));
        let key = equivalence_key(class.source());
        assert!(class.members().iter().all(|m| equivalence_key(m) == key));
    }

    #[test]
    fn skew_class() {
        let classes = partition_classes(&"(1,3)/(2)".parse().unwrap()).unwrap();
        assert_eq!(classes.len(), 1);
        let c = &classes[0];
        assert_eq!(c.len(), 2);
        assert_eq!(c.source(), &t("1 | . . 2"));
        assert_eq!(c.sink(), &t("2 | . . 1"));
        assert_eq!(
            c.covers(),
            &[ClassCover {
                lower: 0,
                upper: 1,
                label: 1
            }]
        );
        assert!(class_iso_check(c));
    }

    #[test]
    fn single_row() {
        let classes = partition_classes(&"(4)".parse().unwrap()).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].len(), 1);
        assert_eq!(classes[0].source(), classes[0].sink());
        assert!(class_iso_check(&classes[0]));
    }

    #[test]
    fn normalize_examples() {
        let x = t("1 | 6 5 4 3 | 8 7 2");
        let (w, p) = normalize_word(&HeckeWord(vec![5, 4, 3]), &x).unwrap();
        assert!(w.is_empty() && p.is_identity());
        let (w, p) = normalize_word(&HeckeWord(vec![1]), &x).unwrap();
        assert_eq!(w, HeckeWord(vec![1]));
        assert_eq!(p, Permutation::simple(1, 8).unwrap());
        assert!(matches!(
            normalize_word(&HeckeWord(vec![6]), &x),
            Err(HeckeError::ActsAsZero(_))
        ));
    }

    #[test]
    fn multi_flip_example() {
        let x = t("2 | 6 5 4 3 | 8 7 1");
        let out = multi_flip(&x, 2, 4).unwrap();
        assert_eq!(out, t("4 | 6 5 3 2 | 8 7 1"));
        assert_eq!(out.entry(x.position(2)), Some(4));
        let src = t("1 | 6 5 4 3 | 8 7 2");
        assert_eq!(
            HeckeImage::Tableau(multi_flip(&src, 1, 2).unwrap()),
            apply_pi(1, &src).unwrap()
        );
        assert!(matches!(
            multi_flip(&src, 2, 4),
            Err(HeckeError::FlipPrecondition { .. })
        ));
    }

    #[test]
    fn annihilator_example() {
        let class = figure_class();
        let x = t("2 | 6 5 4 3 | 8 7 1");
        let w = annihilator_word(&class, &x).unwrap();
        assert_eq!((w.i, w.j), (2, 4));
        assert_eq!(w.word, HeckeWord(vec![3, 2]));
        assert!(w.on_source.is_zero());
        assert_eq!(w.on_tableau, HeckeImage::Tableau(t("4 | 6 5 3 2 | 8 7 1")));
        assert!(w.holds(&class, &x));
        assert!(matches!(
            annihilator_word(&class, class.source()),
            Err(HeckeError::AnnihilatorPrecondition(_))
        ));
        // Only one non-source member has its descents inside those of the source.
        let src_d = class.source().descent_set();
        let qualifying = class
            .members()
            .iter()
            .filter(|m| *m != class.source() && m.descent_set().is_subset(&src_d))
            .count();
        assert_eq!(qualifying, 1);
    }

    #[test]
    fn skew_annihilator_has_no_attacked_entry() {
        let classes = partition_classes(&"(1,3)/(2)".parse().unwrap()).unwrap();
        let c = &classes[0];
        assert_eq!(
            annihilator_word(c, c.sink()).unwrap_err(),
            HeckeError::AttackedEntryMissing { i: 2 }
        );
    }

    #[test]
    fn support_example() {
        let class = figure_class();
        let cmp = support_criterion(class.source(), class.sink()).unwrap();
        assert!(cmp.agree());
        assert_eq!(cmp.via_column_words, BTreeSet::from([1, 2, 3]));
        let same = support_criterion(class.source(), class.source()).unwrap();
        assert!(same.via_column_words.is_empty() && same.via_shapes().is_empty());
        assert!(support_criterion(class.sink(), class.source()).is_err());
    }

    #[test]
    fn dot_output() {
        let dot = figure_class().to_dot("E");
        assert_eq!(dot.matches(" -> ").count(), 9);
        assert_eq!(dot.matches("[label=\"π").count(), 9);
        assert!(dot.contains("n0 [label=\"1 | 6 5 4 3 | 8 7 2\", peripheries=2]"));
    }
}
