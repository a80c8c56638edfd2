//! Matrix realisation of class modules and their endomorphism rings.
//!
//! In the basis given by the members of a class, each generator `π_i` is a
//! 0/1 matrix with at most one nonzero entry per column. Module
//! endomorphisms are exactly the matrices commuting with all of them, so the
//! endomorphism ring is computed as an exact nullspace.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::hecke::{apply_pi, ClassPoset, HeckeError, HeckeImage};
use crate::linalg::{minimal_polynomial, rat, IntegerRowReducer, Matrix, Poly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModRepError {
    #[error("relation {0} fails for the representation matrices")]
    RelationViolated(String),
    #[error("vector has length {got}, module has dimension {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}

/// The generators `π_1 … π_{n-1}` acting on one class.
#[derive(Debug, Clone)]
pub struct RepMatrices {
    dim: usize,
    /// `images[i-1][s]`: index of `π_i member_s`, or `None` for zero.
    images: Vec<Vec<Option<usize>>>,
    matrices: Vec<Matrix>,
}

impl RepMatrices {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> usize {
        self.matrices.len()
    }

    /// Matrix of `π_i`, `1 <= i <= n-1`.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i - 1]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Basis index of `π_i member_s`, or `None` when it is zero.
    pub fn image(&self, i: usize, s: usize) -> Option<usize> {
        self.images[i - 1][s]
    }

    /// Reorders the basis: new basis vector `k` is old basis vector `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut pos = vec![0; perm.len()];
        for (k, &old) in perm.iter().enumerate() {
            pos[old] = k;
        }
        let images: Vec<Vec<Option<usize>>> = self
            .images
            .iter()
            .map(|col| perm.iter().map(|&old| col[old].map(|t| pos[t])).collect())
            .collect();
        let matrices = images.iter().map(|m| matrix_of(m)).collect();
        Self {
            dim: self.dim,
            images,
            matrices,
        }
    }

    /// Idempotence, braid and far-commutation relations, checked on the
    /// partial maps.
    pub fn check_relations(&self) -> Result<(), ModRepError> {
        let compose = |a: &[Option<usize>], b: &[Option<usize>]| -> Vec<Option<usize>> {
            b.iter().map(|x| x.and_then(|y| a[y])).collect()
        };
        let g = self.images.len();
        for i in 0..g {
            let m = &self.images[i];
            if compose(m, m) != *m {
                return Err(ModRepError::RelationViolated(format!(
                    "π{}² = π{}",
                    i + 1,
                    i + 1
                )));
            }
            if i + 1 < g {
                let n = &self.images[i + 1];
                if compose(m, &compose(n, m)) != compose(n, &compose(m, n)) {
                    return Err(ModRepError::RelationViolated(format!("braid at {}", i + 1)));
                }
            }
            for j in i + 2..g {
                let n = &self.images[j];
                if compose(m, n) != compose(n, m) {
                    return Err(ModRepError::RelationViolated(format!(
                        "π{}π{} = π{}π{}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

fn matrix_of(images: &[Option<usize>]) -> Matrix {
    let d = images.len();
    let mut m = Matrix::zeros(d, d);
    for (s, t) in images.iter().enumerate() {
        if let Some(t) = t {
            m[(*t, s)] = Rational::one();
        }
    }
    m
}

/// `M_i[t][s] = 1` iff `π_i member_s = member_t`.
pub fn build_rep(class: &ClassPoset) -> Result<RepMatrices, ModRepError> {
    let n = class.shape().size();
    let dim = class.len();
    let mut images = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let col = class
            .members()
            .iter()
            .map(|t| match apply_pi(i, t)? {
                HeckeImage::Zero => Ok(None),
                HeckeImage::Tableau(img) => {
                    class
                        .index_of(&img)
                        .map(Some)
                        .ok_or(HeckeError::LeavesClass {
                            index: i,
                            from: t.to_string(),
                        })
                }
            })
            .collect::<Result<Vec<_>, HeckeError>>()?;
        images.push(col);
    }
    let matrices = images.iter().map(|m| matrix_of(m)).collect();
    let rep = RepMatrices {
        dim,
        images,
        matrices,
    };
    rep.check_relations()?;
    Ok(rep)
}

/// A basis of `{X : X M_i = M_i X for all i}`.
#[derive(Debug, Clone)]
pub struct CommutantBasis {
    pub dim: usize,
    pub basis: Vec<Matrix>,
}

impl CommutantBasis {
    /// Whether `m` lies in the span of the basis.
    pub fn spans(&self, m: &Matrix) -> bool {
        let d2 = m.rows() * m.cols();
        let k = self.basis.len();
        let stacked = Matrix::from_fn(d2, k + 1, |r, c| {
            if c < k {
                self.basis[c].flat()[r].clone()
            } else {
                m.flat()[r].clone()
            }
        });
        stacked.rank() == k
    }
}

/// Solves `X M_i - M_i X = 0` over the `d²` entries of `X`.
///
/// With `m_i(s)` the image of basis vector `s`, the `(t, s)` entry of
/// `X M_i` is `X[t, m_i(s)]` and that of `M_i X` is the sum of `X[k, s]`
/// over `k` with `m_i(k) = t`.
pub fn commutant(rep: &RepMatrices) -> CommutantBasis {
    let d = rep.dim();
    let var = |t: usize, s: usize| t * d + s;
    let mut reducer = IntegerRowReducer::new(d * d);
    for images in &rep.images {
        let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); d];
        for (k, img) in images.iter().enumerate() {
            if let Some(t) = img {
                preimages[*t].push(k);
            }
        }
        for t in 0..d {
            for s in 0..d {
                let mut eq: Vec<(usize, BigInt)> = Vec::new();
                if let Some(ms) = images[s] {
                    eq.push((var(t, ms), BigInt::one()));
                }
                for &k in &preimages[t] {
                    eq.push((var(k, s), -BigInt::one()));
                }
                reducer.push(eq);
            }
        }
    }
    let basis: Vec<Matrix> = reducer
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_flat(d, v))
        .collect();
    CommutantBasis {
        dim: basis.len(),
        basis,
    }
}

fn commutes_with_all(x: &Matrix, rep: &RepMatrices) -> bool {
    rep.matrices().iter().all(|m| (x * m) == (m * x))
}

fn is_nontrivial_idempotent(e: &Matrix, rep: &RepMatrices) -> bool {
    let id = Matrix::identity(rep.dim());
    !e.is_zero() && e != &id && &(e * e) == e && commutes_with_all(e, rep)
}

/// Projection onto the generalised eigenspace of some rational eigenvalue of
/// `x`, if that is a proper nonzero piece.
fn eigenprojection(x: &Matrix) -> Option<Matrix> {
    let minpoly = minimal_polynomial(x);
    for root in minpoly.rational_roots() {
        // minpoly = (t - root)^k * rest with rest(root) != 0.
        let mut power = Poly::one();
        let mut rest = minpoly.clone();
        loop {
            let (q, r) = rest.div_rem(&Poly::linear(&root));
            if !r.is_zero() {
                break;
            }
            rest = q;
            power = power.mul(&Poly::linear(&root));
        }
        if rest.degree() == Some(0) {
            continue;
        }
        // u*rest + v*power = 1, so u(x) rest(x) projects onto ker power(x).
        let (g, u, _) = rest.ext_gcd(&power);
        debug_assert_eq!(g, Poly::one());
        return Some(u.mul(&rest).eval_matrix(x));
    }
    None
}

/// Searches the commutant for a nontrivial idempotent: basis elements and
/// their complements first, then eigenprojections of basis elements and of
/// seeded random integer combinations. Returns `None` if nothing was found;
/// that is conclusive only when the commutant is one-dimensional.
pub fn find_idempotent(rep: &RepMatrices, end: &CommutantBasis, seed: u64) -> Option<Matrix> {
    let id = Matrix::identity(rep.dim());
    for b in &end.basis {
        for cand in [b.clone(), &id - b] {
            if is_nontrivial_idempotent(&cand, rep) {
                return Some(cand);
            }
        }
    }
    if end.dim < 2 {
        return None;
    }
    let mut candidates: Vec<Matrix> = end.basis.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let combo = end
            .basis
            .iter()
            .fold(Matrix::zeros(rep.dim(), rep.dim()), |acc, b| {
                &acc + &b.scale(&rat(rng.gen_range(-5..=5)))
            });
        candidates.push(combo);
    }
    candidates
        .iter()
        .filter_map(eigenprojection)
        .find(|e| is_nontrivial_idempotent(e, rep))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// One-dimensional endomorphism ring.
    Indecomposable,
    /// A nontrivial idempotent endomorphism was found.
    DecomposableWitness,
    /// Endomorphism ring of dimension > 1 but no idempotent found.
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub dim_module: usize,
    pub dim_end: usize,
    pub verdict: Verdict,
    pub idempotent: Option<Matrix>,
}

/// Basis vectors of a submodule, in the class basis.
pub type SubmoduleBasis = Vec<Vec<Rational>>;

impl Certificate {
    /// Column-space bases of `e` and `1 - e` when an idempotent was found.
    pub fn decomposition(&self) -> Option<(SubmoduleBasis, SubmoduleBasis)> {
        let e = self.idempotent.as_ref()?;
        let id = Matrix::identity(e.rows());
        Some((e.column_space(), (&id - e).column_space()))
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn certify_indecomposable(class: &ClassPoset) -> Result<Certificate, ModRepError> {
    certify_with_seed(class, DEFAULT_SEED)
}

/// As [`certify_indecomposable`], seeding the random part of the idempotent
/// search.
pub fn certify_with_seed(class: &ClassPoset, seed: u64) -> Result<Certificate, ModRepError> {
    let rep = build_rep(class)?;
    let end = commutant(&rep);
    let (verdict, idempotent) = if end.dim == 1 {
        (Verdict::Indecomposable, None)
    } else {
        match find_idempotent(&rep, &end, seed) {
            Some(e) => (Verdict::DecomposableWitness, Some(e)),
            None => (Verdict::Inconclusive, None),
        }
    };
    Ok(Certificate {
        dim_module: rep.dim(),
        dim_end: end.dim,
        verdict,
        idempotent,
    })
}

/// Outcome of extending `source ↦ v` to a module map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    Endomorphism(Matrix),
    Inconsistent { generator: usize, member: usize },
}

/// Defines `f(member_k) = π_w v` along a word `w` with `π_w source = member_k`
/// and checks `f π_i = π_i f` on every basis vector.
pub fn endomorphism_from_source_image(
    class: &ClassPoset,
    rep: &RepMatrices,
    v: &[Rational],
) -> Result<Extension, ModRepError> {
    let d = class.len();
    if v.len() != d {
        return Err(ModRepError::DimensionMismatch {
            got: v.len(),
            want: d,
        });
    }
    let columns = extension_columns(class, rep, v);
    let f = Matrix::from_fn(d, d, |t, s| columns[s][t].clone());
    for (i, m) in rep.matrices().iter().enumerate() {
        let lhs = &f * m;
        let rhs = m * &f;
        if lhs != rhs {
            let member = (0..d)
                .find(|&s| lhs.column(s) != rhs.column(s))
                .unwrap_or(0);
            return Ok(Extension::Inconsistent {
                generator: i + 1,
                member,
            });
        }
    }
    Ok(Extension::Endomorphism(f))
}

fn extension_columns(class: &ClassPoset, rep: &RepMatrices, v: &[Rational]) -> Vec<Vec<Rational>> {
    (0..class.len())
        .map(|k| {
            let word = class
                .word_from_source(k)
                .expect("class module is cyclic on its source");
            word.indices()
                .iter()
                .rev()
                .fold(v.to_vec(), |acc, &i| rep.matrix(i).mul_vec(&acc))
        })
        .collect()
}

/// All `v` for which `source ↦ v` extends to an endomorphism, as a basis.
///
/// The extension `F(v)` is linear in `v`, so the commutation conditions are a
/// homogeneous system in the `d` coordinates of `v`. Its solution space has
/// the same dimension as the endomorphism ring, by cyclicity.
pub fn source_image_space(class: &ClassPoset, rep: &RepMatrices) -> Vec<Vec<Rational>> {
    let d = class.len();
    let unit = |k: usize| -> Vec<Rational> {
        (0..d)
            .map(|x| {
                if x == k {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    };
    let per_unit: Vec<Matrix> = (0..d)
        .map(|k| {
            let cols = extension_columns(class, rep, &unit(k));
            Matrix::from_fn(d, d, |t, s| cols[s][t].clone())
        })
        .collect();
    let mut reducer = IntegerRowReducer::new(d);
    for m in rep.matrices() {
        let diffs: Vec<Matrix> = per_unit.iter().map(|f| &(f * m) - &(m * f)).collect();
        for t in 0..d {
            for s in 0..d {
                let eq: Vec<(usize, BigInt)> = diffs
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x[(t, s)].is_zero())
                    .map(|(k, x)| (k, x[(t, s)].to_integer()))
                    .collect();
                if !eq.is_empty() {
                    reducer.push(eq);
                }
            }
        }
    }
    reducer.nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::partition_classes;
    use crate::tableau::Tableau;

    fn class_of(source: &str) -> ClassPoset {
        let t: Tableau = source.parse().unwrap();
        partition_classes(t.shape())
            .unwrap()
            .into_iter()
            .find(|c| c.contains(&t))
            .unwrap()
    }

    #[test]
    fn single_row_is_scalar() {
        let c = class_of("3 2 1");
        let rep = build_rep(&c).unwrap();
        for m in rep.matrices() {
            assert_eq!(m, &Matrix::identity(1));
        }
        assert_eq!(commutant(&rep).dim, 1);
        let cert = certify_indecomposable(&c).unwrap();
        assert_eq!(cert.verdict, Verdict::Indecomposable);
    }

    #[test]
    fn skew_example_is_decomposable() {
        let c = class_of("1 | . . 2");
        let rep = build_rep(&c).unwrap();
        assert_eq!(rep.image(1, 0), Some(1));
        assert_eq!(rep.image(1, 1), Some(1));
        let end = commutant(&rep);
        assert_eq!(end.dim, 2);
        let cert = certify_indecomposable(&c).unwrap();
        assert_eq!(cert.verdict, Verdict::DecomposableWitness);
        let e = cert.idempotent.clone().unwrap();
        let phi = Matrix::from_fn(2, 2, |t, _| if t == 1 { rat(1) } else { rat(0) });
        assert!(e == phi || e == &Matrix::identity(2) - &phi);
        let (a, b) = cert.decomposition().unwrap();
        let mut lines = [a, b];
        lines.sort_by_key(|l| format!("{l:?}"));
        assert_eq!(lines[0], vec![vec![rat(0), rat(1)]]);
        assert_eq!(lines[1], vec![vec![rat(1), rat(-1)]]);
    }

    #[test]
    fn figure_class_matrices() {
        let c = class_of("1 | 6 5 4 3 | 8 7 2");
        let rep = build_rep(&c).unwrap();
        assert_eq!(rep.dim(), 8);
        for cover in c.covers() {
            assert!(rep.matrix(cover.label)[(cover.upper, cover.lower)].is_one());
        }
        let offdiag: usize = rep
            .matrices()
            .iter()
            .map(|m| {
                (0..8)
                    .flat_map(|t| (0..8).map(move |s| (t, s)))
                    .filter(|&(t, s)| t != s && !m[(t, s)].is_zero())
                    .count()
            })
            .sum();
        assert_eq!(offdiag, 9);
        assert_eq!(certify_indecomposable(&c).unwrap().dim_end, 1);
    }

    #[test]
    fn source_image_extension() {
        let c = class_of("1 | 6 5 4 3 | 8 7 2");
        let rep = build_rep(&c).unwrap();
        let d = c.len();
        let unit = |k: usize| -> Vec<Rational> {
            (0..d)
                .map(|x| if x == k { rat(1) } else { rat(0) })
                .collect()
        };
        assert_eq!(
            endomorphism_from_source_image(&c, &rep, &unit(c.source_index())).unwrap(),
            Extension::Endomorphism(Matrix::identity(d))
        );
        for k in 0..d {
            let ok = matches!(
                endomorphism_from_source_image(&c, &rep, &unit(k)).unwrap(),
                Extension::Endomorphism(_)
            );
            assert_eq!(ok, k == c.source_index());
        }
        assert_eq!(source_image_space(&c, &rep).len(), 1);
        assert!(matches!(
            endomorphism_from_source_image(&c, &rep, &[rat(1)]),
            Err(ModRepError::DimensionMismatch { got: 1, want: 8 })
        ));
    }

    #[test]
    fn relation_check_catches_bad_maps() {
        let bad = RepMatrices {
            dim: 2,
            images: vec![vec![Some(1), Some(0)]],
            matrices: vec![matrix_of(&[Some(1), Some(0)])],
        };
        assert!(matches!(
            bad.check_relations(),
            Err(ModRepError::RelationViolated(_))
        ));
    }
}
