//! Quasisymmetric polynomials in finitely many variables.
//!
//! Elements are stored in the monomial basis over `x_1, …, x_m`; the
//! fundamental functions and quasisymmetric Schur functions are generated
//! from descent sets of tableaux.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Add;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::composition::{Composition, SkewShape};
use crate::hecke::ClassPoset;
use crate::linalg::Rational;
use crate::tableau::enumerate_sct;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QsymError {
    #[error("descent {element} is outside [1, {max}]")]
    DescentOutOfRange { element: usize, max: usize },
    #[error("{0} is not a partition")]
    NotAPartition(Composition),
    #[error("need at least one variable")]
    NoVariables,
}

/// Homogeneous polynomial of degree `degree` in `vars` variables.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    degree: usize,
    vars: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Polynomial {
    pub fn zero(degree: usize, vars: usize) -> Self {
        Self {
            degree,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[usize]) -> Rational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `c * x^exponents`.
    pub fn add_term(&mut self, exponents: Vec<usize>, c: Rational) {
        debug_assert_eq!(exponents.len(), self.vars);
        debug_assert_eq!(exponents.iter().sum::<usize>(), self.degree);
        let entry = self.terms.entry(exponents).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Sets every variable beyond the first `m` to zero.
    pub fn truncate(&self, m: usize) -> Self {
        let mut out = Self::zero(self.degree, m);
        for (e, c) in &self.terms {
            if e[m..].iter().all(|&x| x == 0) {
                out.add_term(e[..m].to_vec(), c.clone());
            }
        }
        out
    }

    /// Whether monomials with the same nonzero exponent sequence all carry
    /// the same coefficient.
    pub fn is_quasisymmetric(&self) -> bool {
        let mut groups: BTreeMap<Vec<usize>, (Rational, usize)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let flat: Vec<usize> = e.iter().copied().filter(|&x| x > 0).collect();
            match groups.get_mut(&flat) {
                Some((c0, count)) => {
                    if c0 != c {
                        return false;
                    }
                    *count += 1;
                }
                None => {
                    groups.insert(flat, (c.clone(), 1));
                }
            }
        }
        groups
            .iter()
            .all(|(flat, (_, count))| *count == binomial(self.vars, flat.len()))
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!((self.degree, self.vars), (rhs.degree, rhs.vars));
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Largest exponent vectors first, so x1^n leads.
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, a)
                    }
                })
                .collect();
            match (c.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (true, false) => write!(f, "{}", mono.join(" "))?,
                (false, false) => write!(f, "{c} * {}", mono.join(" "))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_descents(s: &BTreeSet<usize>, n: usize) -> Result<(), QsymError> {
    match s.iter().find(|&&x| x == 0 || x >= n) {
        Some(&element) => Err(QsymError::DescentOutOfRange {
            element,
            max: n.saturating_sub(1),
        }),
        None => Ok(()),
    }
}

/// `{s_1 < … < s_k} ↦ (s_1, s_2 - s_1, …, n - s_k)`.
pub fn descent_set_to_composition(s: &BTreeSet<usize>, n: usize) -> Result<Composition, QsymError> {
    check_descents(s, n)?;
    if n == 0 {
        return Ok(Composition::empty());
    }
    let mut parts = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for &x in s.iter().chain(std::iter::once(&n)) {
        parts.push(x - prev);
        prev = x;
    }
    Ok(Composition::from_row_lengths(&parts))
}

/// Partial sums of all parts but the last.
pub fn composition_to_descent_set(alpha: &Composition) -> BTreeSet<usize> {
    let parts = alpha.parts();
    parts
        .iter()
        .take(parts.len().saturating_sub(1))
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect()
}

/// Gessel's fundamental quasisymmetric function `F_S` in `m` variables.
pub fn fundamental(s: &BTreeSet<usize>, n: usize, m: usize) -> Result<Polynomial, QsymError> {
    if m == 0 {
        return Err(QsymError::NoVariables);
    }
    check_descents(s, n)?;
    let mut out = Polynomial::zero(n, m);
    let mut exps = vec![0; m];
    fill_fundamental(s, n, 0, 0, &mut exps, &mut out);
    Ok(out)
}

// Chooses the variable index for position `pos` (1-based) given the
// previous index `last`.
fn fill_fundamental(
    s: &BTreeSet<usize>,
    n: usize,
    pos: usize,
    last: usize,
    exps: &mut Vec<usize>,
    out: &mut Polynomial,
) {
    if pos == n {
        out.add_term(exps.clone(), Rational::one());
        return;
    }
    let start = if pos > 0 && s.contains(&pos) {
        last + 1
    } else {
        last
    };
    for v in start..exps.len() {
        exps[v] += 1;
        fill_fundamental(s, n, pos + 1, v, exps, out);
        exps[v] -= 1;
    }
}

/// Quasisymmetric Schur function: `F_{D(T)}` summed over the standard
/// composition tableaux of the shape.
pub fn quasischur(shape: &SkewShape, m: usize) -> Result<Polynomial, QsymError> {
    let n = shape.size();
    let mut out = Polynomial::zero(n, m);
    for t in enumerate_sct(shape) {
        out = &out + &fundamental(&t.descent_set(), n, m)?;
    }
    Ok(out)
}

/// Standard Young tableaux of a partition in English notation, as the row
/// index of each entry `1..=n`.
pub fn standard_young_tableaux(lambda: &Composition) -> Result<Vec<Vec<usize>>, QsymError> {
    if !lambda.is_partition() {
        return Err(QsymError::NotAPartition(lambda.clone()));
    }
    let mut out = Vec::new();
    let mut rows = vec![0; lambda.len()];
    let mut word = Vec::with_capacity(lambda.size());
    grow_syt(lambda.parts(), &mut rows, &mut word, &mut out);
    Ok(out)
}

fn grow_syt(
    target: &[usize],
    rows: &mut Vec<usize>,
    word: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if word.len() == target.iter().sum::<usize>() {
        out.push(word.clone());
        return;
    }
    for r in 0..target.len() {
        if rows[r] < target[r] && (r == 0 || rows[r] < rows[r - 1]) {
            rows[r] += 1;
            word.push(r);
            grow_syt(target, rows, word, out);
            word.pop();
            rows[r] -= 1;
        }
    }
}

/// `i` is a descent when `i + 1` sits in a lower row than `i`.
pub fn syt_descents(rows_of: &[usize]) -> BTreeSet<usize> {
    (1..rows_of.len())
        .filter(|&i| rows_of[i] > rows_of[i - 1])
        .collect()
}

/// Schur polynomial as a sum of fundamentals over standard Young tableaux.
pub fn schur(lambda: &Composition, m: usize) -> Result<Polynomial, QsymError> {
    let n = lambda.size();
    let mut out = Polynomial::zero(n, m);
    for syt in standard_young_tableaux(lambda)? {
        out = &out + &fundamental(&syt_descents(&syt), n, m)?;
    }
    Ok(out)
}

/// Descent compositions of the members of a class, sorted.
pub fn characteristic(class: &ClassPoset) -> Vec<Composition> {
    let n = class.shape().size();
    let mut out: Vec<Composition> = class
        .members()
        .iter()
        .map(|t| descent_set_to_composition(&t.descent_set(), n).expect("descents lie in [n-1]"))
        .collect();
    out.sort();
    out
}

/// Expands a multiset of descent compositions in the fundamental basis.
pub fn expand_characteristic(
    ch: &[Composition],
    n: usize,
    m: usize,
) -> Result<Polynomial, QsymError> {
    let mut out = Polynomial::zero(n, m);
    for alpha in ch {
        out = &out + &fundamental(&composition_to_descent_set(alpha), n, m)?;
    }
    Ok(out)
}
