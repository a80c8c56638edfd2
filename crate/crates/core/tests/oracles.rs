//! Library results against slow, independently written reference
//! computations.

use std::collections::{BTreeMap, BTreeSet};

use cthecke::composition::{compositions_of, partitions_of, Composition, SkewShape};
use cthecke::hecke::partition_classes;
use cthecke::linalg::{Matrix, Rational};
use cthecke::modrep::{build_rep, commutant};
use cthecke::permutation::{all_permutations, Permutation};
use cthecke::qsym::{fundamental, schur};
use cthecke::tableau::{enumerate_sct, Tableau};
use num_traits::{One, Zero};

/// Heap's algorithm over `1..=n`.
fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Grid with rows top to bottom, `None` outside the diagram, `Some(inf)` in
/// inner cells.
fn grid(outer: &[usize], inner: &[usize], values: &[usize]) -> Vec<Vec<Option<usize>>> {
    let inf = usize::MAX;
    let shift = outer.len() - inner.len();
    let mut it = values.iter();
    outer
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            let skip = if r >= shift { inner[r - shift] } else { 0 };
            (0..len)
                .map(|c| {
                    if c < skip {
                        Some(inf)
                    } else {
                        Some(*it.next().unwrap())
                    }
                })
                .collect()
        })
        .collect()
}

fn valid(g: &[Vec<Option<usize>>], inner: &[usize]) -> bool {
    let inf = usize::MAX;
    let at = |r: usize, c: usize| g.get(r).and_then(|row| row.get(c)).copied().flatten();
    let shift = g.len() - inner.len();
    let is_inner = |r: usize, c: usize| r >= shift && c < inner[r - shift];
    for (r, row) in g.iter().enumerate() {
        for c in 1..row.len() {
            if !is_inner(r, c) && row[c] >= row[c - 1] {
                return false;
            }
        }
    }
    let first: Vec<usize> = (0..g.len())
        .filter(|&r| !is_inner(r, 0))
        .map(|r| at(r, 0).unwrap())
        .collect();
    if first.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    for j in 0..g.len() {
        for k in 1..g[j].len() {
            if is_inner(j, k) {
                continue;
            }
            let x = at(j, k).unwrap();
            for i in 0..j {
                let Some(left) = at(i, k - 1) else { continue };
                if x < left {
                    match at(i, k) {
                        Some(y) if y != inf && x < y => {}
                        Some(y) if y == inf => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

fn brute_force_sct(shape: &SkewShape) -> BTreeSet<String> {
    let outer = shape.outer().parts().to_vec();
    let inner = shape.inner().parts().to_vec();
    let n = shape.size();
    permutations_of(n)
        .into_iter()
        .map(|p| grid(&outer, &inner, &p))
        .filter(|g| valid(g, &inner))
        .map(|g| {
            g.iter()
                .map(|row| {
                    row.iter()
                        .map(|x| match x {
                            Some(usize::MAX) => ".".to_string(),
                            Some(v) => v.to_string(),
                            None => unreachable!(),
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join(" | ")
        })
        .collect()
}

fn skew_shapes_up_to(max_outer: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 1..=max_outer {
        for outer in compositions_of(n) {
            for k in 0..n {
                for inner in compositions_of(k)
                    .into_iter()
                    .chain((k == 0).then(Composition::empty))
                {
                    if let Ok(s) = SkewShape::new(outer.clone(), inner) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force_filter() {
    let mut shapes = skew_shapes_up_to(5);
    shapes.push("(1,4,3)".parse().unwrap());
    shapes.push("(2,3,1)".parse().unwrap());
    for shape in shapes {
        let fast: BTreeSet<String> = enumerate_sct(&shape)
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(fast, brute_force_sct(&shape), "shape {shape}");
    }
}

#[test]
fn enumeration_count_for_figure_shape() {
    let shape: SkewShape = "(1,4,3)".parse().unwrap();
    assert_eq!(enumerate_sct(&shape).len(), brute_force_sct(&shape).len());
    assert_eq!(enumerate_sct(&shape).len(), 30);
}

/// Dense `d² x d²` system solved by rational row reduction.
fn dense_commutant_dim(mats: &[Matrix]) -> usize {
    let d = mats[0].rows();
    let rows = mats.len() * d * d;
    let mut sys = Matrix::zeros(rows, d * d);
    for (g, m) in mats.iter().enumerate() {
        for t in 0..d {
            for s in 0..d {
                let r = g * d * d + t * d + s;
                for k in 0..d {
                    // (XM)[t,s] = sum_k X[t,k] M[k,s]; (MX)[t,s] = sum_k M[t,k] X[k,s]
                    sys[(r, t * d + k)] = &sys[(r, t * d + k)] + &m[(k, s)];
                    sys[(r, k * d + s)] = &sys[(r, k * d + s)] - &m[(t, k)];
                }
            }
        }
    }
    d * d - sys.rank()
}

#[test]
fn commutant_matches_dense_elimination() {
    for shape in skew_shapes_up_to(5) {
        for class in partition_classes(&shape).unwrap() {
            let rep = build_rep(&class).unwrap();
            let fast = commutant(&rep).dim;
            if rep.generators() == 0 {
                assert_eq!(fast, 1);
                continue;
            }
            assert_eq!(
                fast,
                dense_commutant_dim(rep.matrices()),
                "{shape} {}",
                class.source()
            );
        }
    }
}

#[test]
fn commutant_basis_elements_commute() {
    let shape: SkewShape = "(1,3)/(2)".parse().unwrap();
    let class = &partition_classes(&shape).unwrap()[0];
    let rep = build_rep(class).unwrap();
    for x in commutant(&rep).basis {
        for m in rep.matrices() {
            assert_eq!(&x * m, m * &x);
        }
    }
}

#[test]
fn fundamental_matches_index_sequences() {
    for n in 1..=5 {
        for m in 1usize..=5 {
            for mask in 0..(1u32 << (n - 1)) {
                let s: BTreeSet<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let mut want: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
                let total = m.pow(n as u32);
                for code in 0..total {
                    let idx: Vec<usize> = (0..n).map(|p| (code / m.pow(p as u32)) % m).collect();
                    let ok = (1..n).all(|p| {
                        if s.contains(&p) {
                            idx[p - 1] < idx[p]
                        } else {
                            idx[p - 1] <= idx[p]
                        }
                    });
                    if ok {
                        let mut e = vec![0; m];
                        for &i in &idx {
                            e[i] += 1;
                        }
                        *want.entry(e).or_default() += 1;
                    }
                }
                let got = fundamental(&s, n, m).unwrap();
                let got: BTreeMap<Vec<usize>, usize> = got
                    .terms()
                    .iter()
                    .map(|(e, c)| (e.clone(), c.to_integer().try_into().unwrap()))
                    .collect();
                assert_eq!(got, want, "n={n} m={m} S={s:?}");
            }
        }
    }
}

/// Monomial expansion of a Schur polynomial from semistandard tableaux.
fn ssyt_schur(lambda: &[usize], m: usize) -> BTreeMap<Vec<usize>, Rational> {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        m: usize,
        fill: &mut BTreeMap<(usize, usize), usize>,
        out: &mut BTreeMap<Vec<usize>, Rational>,
    ) {
        if k == cells.len() {
            let mut e = vec![0; m];
            for v in fill.values() {
                e[*v] += 1;
            }
            *out.entry(e).or_insert_with(Rational::zero) += Rational::one();
            return;
        }
        let (r, c) = cells[k];
        for v in 0..m {
            let row_ok = c == 0 || fill[&(r, c - 1)] <= v;
            let col_ok = r == 0 || fill[&(r - 1, c)] < v;
            if row_ok && col_ok {
                fill.insert((r, c), v);
                go(k + 1, cells, m, fill, out);
                fill.remove(&(r, c));
            }
        }
    }
    go(0, &cells, m, &mut fill, &mut out);
    out
}

#[test]
fn schur_matches_semistandard_tableaux() {
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            for m in 1..=4 {
                let got = schur(&lambda, m).unwrap();
                assert_eq!(
                    got.terms(),
                    &ssyt_schur(lambda.parts(), m),
                    "λ={lambda} m={m}"
                );
            }
        }
    }
}

/// Position pairs `i < j` with `w(i) > w(j)`.
fn inversions(p: &Permutation) -> BTreeSet<(usize, usize)> {
    let w = p.one_line();
    let mut out = BTreeSet::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                out.insert((i, j));
            }
        }
    }
    out
}

#[test]
fn left_weak_order_is_inversion_containment() {
    for n in 1..=4 {
        let perms = all_permutations(n);
        for a in &perms {
            assert_eq!(a.length(), inversions(a).len());
            for b in &perms {
                let want = inversions(a).is_subset(&inversions(b));
                assert_eq!(a.left_weak_leq(b).unwrap(), want, "{a} {b}");
            }
        }
    }
}

#[test]
fn reduced_words_spell_their_permutation() {
    for p in all_permutations(5) {
        let words = p.reduced_words();
        assert!(!words.is_empty());
        for w in words {
            assert_eq!(w.len(), p.length());
            assert_eq!(Permutation::from_word(&w, 5).unwrap(), p);
        }
    }
}

#[test]
fn tableau_text_round_trips() {
    for shape in skew_shapes_up_to(4) {
        for t in enumerate_sct(&shape) {
            let back: Tableau = t.to_string().parse().unwrap();
            assert_eq!(back, t);
        }
    }
}
