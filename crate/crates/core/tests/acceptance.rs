//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use cthecke::composition::{compositions_of, partitions_of, SkewShape};
use cthecke::hecke::{
    annihilator_word, apply_pi, class_iso_check, partition_classes, support_criterion, ClassPoset,
    HeckeError, HeckeImage,
};
use cthecke::linalg::rat;
use cthecke::modrep::{certify_indecomposable, Verdict};
use cthecke::qsym::schur;
use cthecke::tableau::{enumerate_sct, Tableau};
use cthecke::verify::refinement_sum;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn t(s: &str) -> Tableau {
    s.parse().expect("tableau literal")
}

fn straight(n: usize) -> impl Iterator<Item = SkewShape> {
    compositions_of(n).into_iter().map(SkewShape::straight)
}

fn classes(shape: &SkewShape) -> Result<Vec<ClassPoset>, String> {
    partition_classes(shape).map_err(|e| format!("{shape}: {e}"))
}

fn figure_class() -> Result<ClassPoset, String> {
    let source = t("1 | 6 5 4 3 | 8 7 2");
    classes(source.shape())?
        .into_iter()
        .find(|c| c.contains(&source))
        .ok_or_else(|| "figure source not found".to_string())
}

fn main_theorem() -> Outcome {
    let mut count = 0;
    let mut extended = 0;
    for n in 1..=7 {
        for shape in straight(n) {
            for (k, class) in classes(&shape)?.iter().enumerate() {
                let cert = certify_indecomposable(class).map_err(|e| e.to_string())?;
                ensure(cert.dim_end == 1, || {
                    format!("{shape} class {k}: dim End = {}", cert.dim_end)
                })?;
                if n <= 6 {
                    count += 1;
                } else {
                    extended += 1;
                }
            }
        }
    }
    Ok(format!(
        "{count} classes at n <= 6 (plus {extended} at n = 7), all with dim End = 1"
    ))
}

fn skew_counterexample() -> Outcome {
    let shape: SkewShape = "(1,3)/(2)".parse().map_err(|e| format!("{e}"))?;
    let cls = classes(&shape)?;
    ensure(cls.len() == 1 && cls[0].len() == 2, || {
        format!("{} classes", cls.len())
    })?;
    let class = &cls[0];
    let (t0, t1) = (t("1 | . . 2"), t("2 | . . 1"));
    ensure(class.members() == [t0.clone(), t1.clone()], || {
        "unexpected members".into()
    })?;
    let cert = certify_indecomposable(class).map_err(|e| e.to_string())?;
    ensure(cert.dim_end == 2, || format!("dim End = {}", cert.dim_end))?;
    ensure(cert.verdict == Verdict::DecomposableWitness, || {
        format!("{:?}", cert.verdict)
    })?;
    let (a, b) = cert.decomposition().ok_or("no decomposition")?;
    // Basis order is (T0, T1): expect span{T1} and span{T0 - T1}, up to scaling.
    let mut lines = [a, b];
    lines.sort_by_key(|l| l.first().map(|v| v[0].clone()));
    let [span_t1, span_diff] = lines;
    ensure(span_t1.len() == 1 && span_diff.len() == 1, || {
        "summands are not lines".into()
    })?;
    let (u, v) = (&span_t1[0], &span_diff[0]);
    ensure(u[0] == rat(0) && u[1] != rat(0), || {
        format!("first summand {u:?}")
    })?;
    ensure(v[0] != rat(0) && v[0] == -v[1].clone(), || {
        format!("second summand {v:?}")
    })?;
    Ok("one class of dimension 2, dim End = 2, span{T1} ⊕ span{T0 - T1}".into())
}

fn figure_reproduction() -> Outcome {
    let class = figure_class()?;
    let nodes = [
        "1 | 6 5 4 3 | 8 7 2",
        "2 | 6 5 4 3 | 8 7 1",
        "1 | 6 5 4 2 | 8 7 3",
        "3 | 6 5 4 2 | 8 7 1",
        "2 | 6 5 4 1 | 8 7 3",
        "4 | 6 5 3 2 | 8 7 1",
        "3 | 6 5 4 1 | 8 7 2",
        "4 | 6 5 3 1 | 8 7 2",
    ];
    let edges = [
        (0, 1, 1),
        (0, 2, 2),
        (1, 3, 2),
        (2, 4, 1),
        (3, 5, 3),
        (3, 6, 1),
        (4, 6, 2),
        (5, 7, 1),
        (6, 7, 3),
    ];
    let want: BTreeSet<(String, String, usize)> = edges
        .iter()
        .map(|&(a, b, i)| (nodes[a].to_string(), nodes[b].to_string(), i))
        .collect();
    let got: BTreeSet<(String, String, usize)> = class
        .covers()
        .iter()
        .map(|c| {
            (
                class.members()[c.lower].to_string(),
                class.members()[c.upper].to_string(),
                c.label,
            )
        })
        .collect();
    let members: BTreeSet<String> = class.members().iter().map(|m| m.to_string()).collect();
    let want_members: BTreeSet<String> = nodes.iter().map(|s| s.to_string()).collect();
    ensure(class.len() == 8 && members == want_members, || {
        format!("members {members:?}")
    })?;
    ensure(class.covers().len() == 9 && got == want, || {
        format!("edges {got:?}")
    })?;
    ensure(class.sink() == &t(nodes[7]), || {
        format!("sink {}", class.sink())
    })?;
    let col = class.source().column_word().to_string();
    ensure(col == "16857423", || format!("col source = {col}"))?;
    Ok("8 members, 9 labelled covers, sink 4 | 6 5 3 1 | 8 7 2, col = 16857423".into())
}

fn poset_isomorphism() -> Outcome {
    let mut count = 0;
    for n in 1..=5 {
        for shape in straight(n) {
            for (k, class) in classes(&shape)?.iter().enumerate() {
                ensure(class_iso_check(class), || format!("{shape} class {k}"))?;
                count += 1;
            }
        }
    }
    ensure(class_iso_check(&figure_class()?), || "figure class".into())?;
    Ok(format!("{count} classes at n <= 5 and the figure class"))
}

fn decomposition_count() -> Outcome {
    let mut shapes = 0;
    for n in 1..=7 {
        for shape in straight(n) {
            let total: usize = classes(&shape)?.iter().map(|c| c.len()).sum();
            let sct = enumerate_sct(&shape).len();
            ensure(total == sct, || format!("{shape}: {total} != {sct}"))?;
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes at n <= 7"))
}

fn dominance_drop() -> Outcome {
    let mut edges = 0;
    for n in 1..=6 {
        for shape in straight(n) {
            for class in classes(&shape)? {
                for c in class.covers() {
                    let (lo, hi) = (&class.members()[c.lower], &class.members()[c.upper]);
                    for m in 0..=n {
                        let a = lo.restrict_above(m).map_err(|e| e.to_string())?;
                        let b = hi.restrict_above(m).map_err(|e| e.to_string())?;
                        let (a, b) = (a.outer_shape(), b.outer_shape());
                        if m == c.label {
                            ensure(b.dominance_lt(a).unwrap_or(false), || {
                                format!("{lo} -π{m}-> {hi}: {b} vs {a}")
                            })?;
                        } else {
                            ensure(a == b, || format!("{lo} -π{}-> {hi} at m = {m}", c.label))?;
                        }
                    }
                    edges += 1;
                }
            }
        }
    }
    Ok(format!("{edges} cover edges at n <= 6"))
}

fn support_criterion_check() -> Outcome {
    let mut pairs = 0;
    for n in 1..=5 {
        for shape in straight(n) {
            for class in classes(&shape)? {
                for a in 0..class.len() {
                    for b in 0..class.len() {
                        if !class.leq(a, b) {
                            continue;
                        }
                        let (t1, t2) = (&class.members()[a], &class.members()[b]);
                        let cmp = support_criterion(t1, t2).map_err(|e| e.to_string())?;
                        ensure(cmp.agree(), || format!("{t1} ⪯ {t2}: {cmp:?}"))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} comparable pairs at n <= 5"))
}

fn annihilator() -> Outcome {
    let mut per_n = Vec::new();
    // Sizes up to 6 as stated; 7 and 8 added because no instance exists below 7.
    for n in 1..=8 {
        let mut count = 0;
        for shape in straight(n) {
            for class in classes(&shape)? {
                let source = class.source();
                for x in class.members() {
                    if x == source || !x.descent_set().is_subset(&source.descent_set()) {
                        continue;
                    }
                    let w =
                        annihilator_word(&class, x).map_err(|e: HeckeError| format!("{x}: {e}"))?;
                    ensure(w.holds(&class, x), || format!("{x}: word {}", w.word))?;
                    count += 1;
                }
            }
        }
        per_n.push(count);
    }
    let class = figure_class()?;
    let x = t("2 | 6 5 4 3 | 8 7 1");
    let w = annihilator_word(&class, &x).map_err(|e| e.to_string())?;
    ensure((w.i, w.j) == (2, 4) && w.holds(&class, &x), || {
        format!("figure: i = {}, j = {}", w.i, w.j)
    })?;
    let small: usize = per_n[..6].iter().sum();
    Ok(format!(
        "{small} instances at n <= 6, {} at n = 7, {} at n = 8, figure example i = 2, j = 4",
        per_n[6], per_n[7]
    ))
}

fn qsym_refinement() -> Outcome {
    let mut count = 0;
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            let sum = refinement_sum(&lambda, n).map_err(|e| e.to_string())?;
            let s = schur(&lambda, n).map_err(|e| e.to_string())?;
            ensure(sum == s, || format!("λ = {lambda}: {sum} != {s}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} partitions of n <= 5 in n variables"))
}

fn worked_examples() -> Outcome {
    let set = |xs: &[usize]| xs.iter().copied().collect::<BTreeSet<usize>>();
    let x = t("2 | . 5 4 1 | . . 3");
    let d = x.descent_data();
    ensure(d.descents == set(&[2, 3]), || {
        format!("D = {:?}", d.descents)
    })?;
    ensure(d.attacking == set(&[3]), || {
        format!("AD = {:?}", d.attacking)
    })?;
    ensure(d.ascents == set(&[1, 4]), || {
        format!("Dc = {:?}", d.ascents)
    })?;
    ensure(d.neighborly == set(&[4]), || {
        format!("ND = {:?}", d.neighborly)
    })?;

    let y = t("1 | 6 5 4 3 | 8 7 2");
    let act = |i| apply_pi(i, &y).map_err(|e| e.to_string());
    ensure(act(6)? == HeckeImage::Zero, || "π6 T is not 0".into())?;
    for i in [3, 4, 5, 7] {
        ensure(act(i)? == HeckeImage::Tableau(y.clone()), || {
            format!("π{i} T ≠ T")
        })?;
    }
    ensure(
        act(1)? == HeckeImage::Tableau(t("2 | 6 5 4 3 | 8 7 1")),
        || "π1 T".into(),
    )?;
    ensure(
        act(2)? == HeckeImage::Tableau(t("1 | 6 5 4 2 | 8 7 3")),
        || "π2 T".into(),
    )?;

    let chain: Vec<String> = x.chain_of().iter().rev().map(|c| c.to_string()).collect();
    ensure(
        chain == ["(1,2)", "(2,2)", "(3,2)", "(3,3)", "(1,3,3)", "(1,4,3)"],
        || format!("chain {chain:?}"),
    )?;

    let z = t("1 | . . 3 | . 2");
    let r = z.restrict_above(2).map_err(|e| e.to_string())?;
    ensure(
        r.to_string() == ". . 1 | ." && r.shape().to_string() == "(3,1)/(2,1)",
        || format!("T^(>2) = {r} of shape {}", r.shape()),
    )?;
    Ok("descent data, action table, chain and restriction match".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("main theorem sweep", main_theorem),
        ("skew counterexample", skew_counterexample),
        ("figure reproduction", figure_reproduction),
        ("poset isomorphism", poset_isomorphism),
        ("decomposition dimension count", decomposition_count),
        ("dominance drop", dominance_drop),
        ("support criterion", support_criterion_check),
        ("annihilator construction", annihilator),
        ("qsym refinement", qsym_refinement),
        ("worked-example goldens", worked_examples),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
