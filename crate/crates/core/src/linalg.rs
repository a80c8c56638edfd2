//! Exact linear algebra over the rationals.
//!
//! Homogeneous systems with integer coefficients are solved by fraction-free
//! elimination on sparse `BigInt` rows: every row is kept primitive (content
//! divided out) and eliminations use cross-multiplication, so no rational
//! arithmetic happens until the nullspace basis is read off.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for k in 0..d {
            m[(k, k)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Reshapes a vector of length `d * d` (row-major) into a square matrix.
    pub fn from_flat(d: usize, flat: Vec<Rational>) -> Self {
        assert_eq!(flat.len(), d * d);
        Self {
            rows: d,
            cols: d,
            data: flat,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn flat(&self) -> &[Rational] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !self[(r, c)].is_zero() && !v[c].is_zero())
                    .fold(Rational::zero(), |acc, c| acc + &self[(r, c)] * &v[c])
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            for c in 0..self.cols {
                self.data.swap(p * self.cols + c, row * self.cols + c);
            }
            let inv = self[(row, col)].recip();
            for c in 0..self.cols {
                let v = &self[(row, c)] * &inv;
                self[(row, c)] = v;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for c in 0..self.cols {
                        let v = &self[(r, c)] - &factor * &self[(row, c)];
                        self[(r, c)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the column space, as reduced vectors.
    pub fn column_space(&self) -> Vec<Vec<Rational>> {
        let mut t = self.transpose();
        let pivots = t.rref();
        (0..pivots.len())
            .map(|r| (0..t.cols).map(|c| t[(r, c)].clone()).collect())
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

type SparseRow = BTreeMap<usize, BigInt>;

fn make_primitive(row: &mut SparseRow) {
    let g = row.values().fold(BigInt::zero(), |g, v| g.gcd(v));
    let lead_negative = row.values().next().is_some_and(|v| v.is_negative());
    if g.is_zero() {
        return;
    }
    let g = if lead_negative { -g } else { g };
    if !g.is_one() {
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
}

/// `row <- a*row - b*other`, where `a = other[col]`, `b = row[col]`, which
/// clears `col` in `row`.
fn eliminate(row: &mut SparseRow, other: &SparseRow, col: usize) {
    let Some(b) = row.get(&col).cloned() else {
        return;
    };
    let a = other[&col].clone();
    let g = a.gcd(&b);
    let (a, b) = (&a / &g, &b / &g);
    if !a.is_one() {
        for v in row.values_mut() {
            *v *= &a;
        }
    }
    for (&c, v) in other {
        let e = row.entry(c).or_insert_with(BigInt::zero);
        *e -= &b * v;
        if e.is_zero() {
            row.remove(&c);
        }
    }
    make_primitive(row);
}

/// Fraction-free incremental row reduction of a homogeneous integer system.
/// The pivot rows are kept fully reduced against each other.
#[derive(Debug, Clone, Default)]
pub struct IntegerRowReducer {
    vars: usize,
    /// Pivot column → row with that pivot.
    pivots: BTreeMap<usize, SparseRow>,
}

impl IntegerRowReducer {
    pub fn new(vars: usize) -> Self {
        Self {
            vars,
            pivots: BTreeMap::new(),
        }
    }

    /// Adds the equation `Σ coeff * x_var = 0`. Returns whether the rank grew.
    pub fn push(&mut self, equation: impl IntoIterator<Item = (usize, BigInt)>) -> bool {
        let mut row = SparseRow::new();
        for (var, coeff) in equation {
            assert!(var < self.vars, "variable {var} out of range");
            let e = row.entry(var).or_insert_with(BigInt::zero);
            *e += coeff;
            if e.is_zero() {
                row.remove(&var);
            }
        }
        let cols: Vec<usize> = row.keys().copied().collect();
        for c in cols {
            if let Some(p) = self.pivots.get(&c) {
                eliminate(&mut row, p, c);
            }
        }
        make_primitive(&mut row);
        let Some((&lead, _)) = row.iter().next() else {
            return false;
        };
        for other in self.pivots.values_mut() {
            if other.contains_key(&lead) {
                eliminate(other, &row, lead);
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.vars - self.rank()
    }

    /// One basis vector per free variable: that variable set to 1, the other
    /// free variables to 0.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let free: Vec<usize> = (0..self.vars)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.vars];
                v[f] = Rational::one();
                for (&p, row) in &self.pivots {
                    if let Some(coeff) = row.get(&f) {
                        v[p] = -Rational::new(coeff.clone(), row[&p].clone());
                    }
                }
                v
            })
            .collect()
    }
}

/// Nullspace of a dense rational matrix, via RREF.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rational>> {
    let mut r = m.clone();
    let pivots = r.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect()
}

/// Dense polynomial over the rationals, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn one() -> Self {
        Self(vec![Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `x - r`.
    pub fn linear(r: &Rational) -> Self {
        Self(vec![-r.clone(), Rational::one()])
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let get = |p: &Self, k: usize| p.0.get(k).cloned().unwrap_or_else(Rational::zero);
        Self::new((0..len).map(|k| get(self, k) - get(other, k)).collect())
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.0.len() - 1;
        let lead = divisor.0[dd].clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (Self(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let coeff = &rem[k + dd] / &lead;
            if coeff.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &coeff * d;
            }
            quot[k] = coeff;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// `(g, u, v)` with `u*self + v*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Self::one(), Self(Vec::new()));
        let (mut v0, mut v1) = (Self(Vec::new()), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u2 = u0.sub(&q.mul(&u1));
            let v2 = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u2;
            v0 = v1;
            v1 = v2;
        }
        let lead = r0.0.last().cloned().unwrap_or_else(Rational::one).recip();
        let scale = |p: Self| Self::new(p.0.into_iter().map(|c| c * &lead).collect());
        (scale(r0), scale(u0), scale(v0))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let d = m.rows();
        let mut acc = Matrix::zeros(d, d);
        for c in self.0.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(d).scale(c);
        }
        acc
    }

    /// Rational roots, by the rational root theorem on the integer-cleared
    /// polynomial.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let denom_lcm = self.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut roots = Vec::new();
        // Strip zero roots.
        let shift = ints.iter().take_while(|c| c.is_zero()).count();
        if shift > 0 {
            roots.push(Rational::zero());
        }
        let ints = &ints[shift..];
        if ints.len() <= 1 {
            return roots;
        }
        let constant = ints[0].abs();
        let leading = ints[ints.len() - 1].abs();
        let divisors = |x: &BigInt| -> Vec<BigInt> {
            let mut out = Vec::new();
            let mut k = BigInt::one();
            while &k * &k <= *x {
                if (x % &k).is_zero() {
                    out.push(k.clone());
                    out.push(x / &k);
                }
                k += 1;
            }
            out
        };
        let mut candidates: Vec<Rational> = Vec::new();
        for p in divisors(&constant) {
            for q in divisors(&leading) {
                for sign in [1, -1] {
                    candidates.push(Rational::new(p.clone() * sign, q.clone()));
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            if self.eval(&c).is_zero() {
                roots.push(c);
            }
        }
        roots
    }
}

/// Minimal polynomial of a square matrix, from the first linear dependency
/// among `I, M, M², …`.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    let d = m.rows();
    let mut powers: Vec<Matrix> = vec![Matrix::identity(d)];
    loop {
        let k = powers.len();
        // Columns are flattened powers; look for a kernel vector with last entry 1.
        let system = Matrix::from_fn(d * d, k, |r, c| powers[c].flat()[r].clone());
        let kernel = nullspace(&system);
        if let Some(v) = kernel.first() {
            let last = v
                .iter()
                .rposition(|x| !x.is_zero())
                .expect("nonzero kernel vector");
            let lead = v[last].clone();
            return Poly::new(v[..=last].iter().map(|x| x / &lead).collect());
        }
        let next = &powers[k - 1] * m;
        powers.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rref_and_rank() {
        let m = Matrix::from_fn(3, 3, |a, b| rat((a * 3 + b) as i64));
        assert_eq!(m.rank(), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        let zero = m.mul_vec(&ns[0]);
        assert!(zero.iter().all(Zero::is_zero));
    }

    #[test]
    fn integer_reducer_matches_dense() {
        // x0 + x1 - x2 = 0, 2x0 + 2x1 - 2x2 = 0, x1 + x3 = 0.
        let mut red = IntegerRowReducer::new(4);
        assert!(red.push([
            (0, BigInt::from(1)),
            (1, BigInt::from(1)),
            (2, BigInt::from(-1))
        ]));
        assert!(!red.push([
            (0, BigInt::from(2)),
            (1, BigInt::from(2)),
            (2, BigInt::from(-2))
        ]));
        assert!(red.push([(1, BigInt::from(1)), (3, BigInt::from(1))]));
        assert!(!red.push([(2, BigInt::from(0))]));
        assert_eq!(red.rank(), 2);
        let coeffs = [[1, 1, -1, 0], [0, 1, 0, 1]];
        let dense = Matrix::from_fn(2, 4, |a, b| rat(coeffs[a][b]));
        for v in red.nullspace() {
            assert!(dense.mul_vec(&v).iter().all(Zero::is_zero));
        }
        assert_eq!(red.nullspace().len(), nullspace(&dense).len());
    }

    #[test]
    fn polynomial_arithmetic() {
        // (x-1)(x-2)(x+1/2)
        let p = Poly::linear(&rat(1))
            .mul(&Poly::linear(&rat(2)))
            .mul(&Poly::linear(&r(-1, 2)));
        let mut roots = p.rational_roots();
        roots.sort();
        assert_eq!(roots, vec![r(-1, 2), rat(1), rat(2)]);
        let (q, rem) = p.div_rem(&Poly::linear(&rat(2)));
        assert!(rem.is_zero());
        assert_eq!(q.degree(), Some(2));
        let (g, u, v) = Poly::linear(&rat(1)).ext_gcd(&Poly::linear(&rat(3)));
        assert_eq!(g, Poly::one());
        let combo = u
            .mul(&Poly::linear(&rat(1)))
            .sub(&v.mul(&Poly::linear(&rat(3))).mul(&Poly::new(vec![rat(-1)])));
        assert_eq!(combo, Poly::one());
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let e = Matrix::from_fn(2, 2, |a, _| if a == 1 { rat(1) } else { rat(0) });
        let p = minimal_polynomial(&e);
        // x^2 - x
        assert_eq!(p, Poly::new(vec![rat(0), rat(-1), rat(1)]));
        assert!(p.eval_matrix(&e).is_zero());
        assert_eq!(
            minimal_polynomial(&Matrix::identity(3)),
            Poly::linear(&rat(1))
        );
    }
}
