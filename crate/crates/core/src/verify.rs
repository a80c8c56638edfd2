//! Exhaustive verification sweeps over all shapes up to a size bound.
//!
//! Each suite runs its checks shape by shape (in parallel) and the results
//! are merged in shape order, so a report depends only on its inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::composition::{compositions_of, partitions_of, Composition, SkewShape};
use crate::hecke::{
    annihilator_word, class_iso_check, partition_classes, support_criterion, HeckeError,
};
use crate::modrep::{build_rep, certify_with_seed, source_image_space, ModRepError, Verdict};
use crate::qsym::{
    characteristic, expand_characteristic, quasischur, schur, Polynomial, QsymError,
};
use crate::tableau::{enumerate_sct, TableauError};

pub const DEFAULT_CEILING: usize = 6;
pub const HARD_CAP: usize = 8;
const ANNIHILATOR: &str = "annihilator word kills the source";

pub const CEILING_ENV: &str = "CTHECKE_MAX_N";

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("--max-n {requested} exceeds the ceiling {ceiling}")]
    CeilingExceeded { requested: usize, ceiling: usize },
    #[error("unknown suite {0:?} (expected endo, poset, dominance, qsym or all)")]
    UnknownSuite(String),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    ModRep(#[from] ModRepError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Qsym(#[from] QsymError),
}

/// Size ceiling for sweeps: the default, lowered (never raised) by the
/// environment variable.
pub fn ceiling() -> usize {
    ceiling_from(std::env::var(CEILING_ENV).ok().as_deref())
}

pub fn ceiling_from(env: Option<&str>) -> usize {
    match env.and_then(|v| v.trim().parse::<usize>().ok()) {
        Some(v) => v.min(DEFAULT_CEILING),
        None => DEFAULT_CEILING,
    }
}

/// A single explicitly named shape may go up to the hard cap, unless the
/// environment variable asks for less.
pub fn shape_ceiling_from(env: Option<&str>) -> usize {
    match env.and_then(|v| v.trim().parse::<usize>().ok()) {
        Some(v) => v.min(HARD_CAP),
        None => HARD_CAP,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Endo,
    Poset,
    Dominance,
    Qsym,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Endo, Suite::Poset, Suite::Dominance, Suite::Qsym];

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(name: &str) -> Result<Vec<Suite>, VerifyError> {
        if name == "all" {
            Ok(Self::ALL.to_vec())
        } else {
            Ok(vec![name.parse()?])
        }
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "endo" => Ok(Suite::Endo),
            "poset" => Ok(Suite::Poset),
            "dominance" => Ok(Suite::Dominance),
            "qsym" => Ok(Suite::Qsym),
            other => Err(VerifyError::UnknownSuite(other.to_string())),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Endo => "endo",
            Suite::Poset => "poset",
            Suite::Dominance => "dominance",
            Suite::Qsym => "qsym",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Scope {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateRecord {
    pub shape: String,
    pub class_id: usize,
    pub source: String,
    pub dim_module: usize,
    pub dim_end: usize,
    /// Dimension of the space of admissible images of the source.
    pub dim_end_via_source: usize,
    pub verdict: Verdict,
    pub expected_decomposable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<Vec<Vec<String>>>,
    /// Bases of the two summands, entries as exact rationals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<[Vec<Vec<String>>; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub scope: Scope,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
    pub certificates: Vec<CertificateRecord>,
    /// Facts recorded without a pass/fail judgement.
    pub observations: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Tally for one named property.
#[derive(Debug, Clone, Default)]
struct Tally {
    checked: usize,
    counterexample: Option<String>,
}

#[derive(Debug, Default)]
struct ShapeOutcome {
    tallies: Vec<((Suite, &'static str), Tally)>,
    certificates: Vec<CertificateRecord>,
    observations: Vec<String>,
}

impl ShapeOutcome {
    /// Makes the property show up in the report even if nothing is checked.
    fn register(&mut self, suite: Suite, name: &'static str) -> usize {
        match self.tallies.iter().position(|(k, _)| *k == (suite, name)) {
            Some(i) => i,
            None => {
                self.tallies.push(((suite, name), Tally::default()));
                self.tallies.len() - 1
            }
        }
    }

    fn check(&mut self, suite: Suite, name: &'static str, ok: bool, what: impl FnOnce() -> String) {
        let idx = self.register(suite, name);
        let tally = &mut self.tallies[idx].1;
        tally.checked += 1;
        if !ok && tally.counterexample.is_none() {
            tally.counterexample = Some(what());
        }
    }
}

/// Runs `suites` over every composition of `1..=max_n`.
pub fn verify_sweep(
    max_n: usize,
    suites: &[Suite],
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    let cap = ceiling();
    if max_n > cap {
        return Err(VerifyError::CeilingExceeded {
            requested: max_n,
            ceiling: cap,
        });
    }
    let shapes: Vec<SkewShape> = (1..=max_n)
        .flat_map(compositions_of)
        .map(SkewShape::straight)
        .collect();
    let mut outcomes = run_shapes(&shapes, suites, seed)?;
    if suites.contains(&Suite::Qsym) {
        outcomes.push(refinement_outcome(max_n)?);
    }
    Ok(assemble(
        Scope {
            max_n: Some(max_n),
            shape: None,
        },
        suites,
        seed,
        outcomes,
    ))
}

/// Runs `suites` on a single, possibly skew, shape.
pub fn verify_shape(
    shape: &SkewShape,
    suites: &[Suite],
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    let cap = shape_ceiling_from(std::env::var(CEILING_ENV).ok().as_deref());
    if shape.size() > cap {
        return Err(VerifyError::CeilingExceeded {
            requested: shape.size(),
            ceiling: cap,
        });
    }
    let outcomes = run_shapes(std::slice::from_ref(shape), suites, seed)?;
    Ok(assemble(
        Scope {
            max_n: None,
            shape: Some(shape.to_string()),
        },
        suites,
        seed,
        outcomes,
    ))
}

fn run_shapes(
    shapes: &[SkewShape],
    suites: &[Suite],
    seed: u64,
) -> Result<Vec<ShapeOutcome>, VerifyError> {
    shapes
        .par_iter()
        .map(|shape| check_shape(shape, suites, seed))
        .collect()
}

fn assemble(
    scope: Scope,
    suites: &[Suite],
    seed: u64,
    outcomes: Vec<ShapeOutcome>,
) -> VerificationReport {
    let mut merged: BTreeMap<(Suite, &'static str), Tally> = BTreeMap::new();
    let mut certificates = Vec::new();
    let mut observations = Vec::new();
    for outcome in outcomes {
        for (key, tally) in outcome.tallies {
            let entry = merged.entry(key).or_default();
            entry.checked += tally.checked;
            if entry.counterexample.is_none() {
                entry.counterexample = tally.counterexample;
            }
        }
        certificates.extend(outcome.certificates);
        observations.extend(outcome.observations);
    }
    let properties: Vec<PropertyResult> = merged
        .into_iter()
        .map(|((suite, name), t)| PropertyResult {
            suite,
            name: name.to_string(),
            passed: t.counterexample.is_none(),
            checked: t.checked,
            counterexample: t.counterexample,
        })
        .collect();
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    VerificationReport {
        schema: 1,
        scope,
        seed,
        passed: properties.iter().all(|p| p.passed),
        suites,
        properties,
        certificates,
        observations,
    }
}

fn check_shape(
    shape: &SkewShape,
    suites: &[Suite],
    seed: u64,
) -> Result<ShapeOutcome, VerifyError> {
    let mut out = ShapeOutcome::default();
    let classes = partition_classes(shape)?;
    let straight = shape.is_straight();

    if suites.contains(&Suite::Endo) {
        for (id, class) in classes.iter().enumerate() {
            let cert = certify_with_seed(class, seed)?;
            let rep = build_rep(class)?;
            let via_source = source_image_space(class, &rep).len();
            out.check(
                Suite::Endo,
                "endomorphism ring computed two ways",
                via_source == cert.dim_end,
                || format!("{shape} class {id}: {} vs {via_source}", cert.dim_end),
            );
            if straight {
                out.check(
                    Suite::Endo,
                    "straight class modules have trivial endomorphisms",
                    cert.dim_end == 1,
                    || format!("{shape} class {id}: dim End = {}", cert.dim_end),
                );
            } else {
                out.check(
                    Suite::Endo,
                    "skew endomorphism rings are settled",
                    cert.verdict != Verdict::Inconclusive,
                    || {
                        format!(
                            "{shape} class {id}: dim End = {} without idempotent",
                            cert.dim_end
                        )
                    },
                );
            }
            let decomposition = cert
                .decomposition()
                .map(|(a, b)| [stringify(&a), stringify(&b)]);
            out.certificates.push(CertificateRecord {
                shape: shape.to_string(),
                class_id: id,
                source: class.source().to_string(),
                dim_module: cert.dim_module,
                dim_end: cert.dim_end,
                dim_end_via_source: via_source,
                verdict: cert.verdict,
                expected_decomposable: !straight && cert.dim_end > 1,
                idempotent: cert.idempotent.as_ref().map(|e| {
                    (0..e.rows())
                        .map(|r| (0..e.cols()).map(|c| e[(r, c)].to_string()).collect())
                        .collect()
                }),
                decomposition,
            });
        }
    }

    if suites.contains(&Suite::Poset) {
        let total: usize = classes.iter().map(|c| c.len()).sum();
        let sct = enumerate_sct(shape).len();
        out.check(
            Suite::Poset,
            "classes partition the tableaux",
            total == sct,
            || format!("{shape}: {total} in classes, {sct} tableaux"),
        );
        for (id, class) in classes.iter().enumerate() {
            out.check(
                Suite::Poset,
                "class is isomorphic to a weak-order interval",
                class_iso_check(class),
                || format!("{shape} class {id}"),
            );
            for a in 0..class.len() {
                for b in 0..class.len() {
                    if !class.leq(a, b) {
                        continue;
                    }
                    let (t1, t2) = (&class.members()[a], &class.members()[b]);
                    let cmp = support_criterion(t1, t2)?;
                    out.check(
                        Suite::Poset,
                        "support equals the set of changed restriction shapes",
                        cmp.agree(),
                        || format!("{t1} ⪯ {t2}"),
                    );
                }
            }
            if straight {
                out.register(Suite::Poset, ANNIHILATOR);
            }
            let source = class.source();
            for t in class.members() {
                if t == source || !t.descent_set().is_subset(&source.descent_set()) {
                    continue;
                }
                match annihilator_word(class, t) {
                    Ok(w) => out.check(Suite::Poset, ANNIHILATOR, w.holds(class, t), || {
                        format!("{t} with word {}", w.word)
                    }),
                    Err(HeckeError::AttackedEntryMissing { i }) if !straight => {
                        out.observations.push(format!(
                            "{shape} class {id}: no entry above {i} attacked in the source for {t}"
                        ))
                    }
                    Err(e) if straight => {
                        out.check(Suite::Poset, ANNIHILATOR, false, || format!("{t}: {e}"))
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }

    if suites.contains(&Suite::Dominance) {
        for class in &classes {
            for cover in class.covers() {
                let lower = &class.members()[cover.lower];
                let upper = &class.members()[cover.upper];
                let n = lower.size();
                let mut ok = true;
                for m in 0..=n {
                    let a = lower.restrict_above(m)?;
                    let b = upper.restrict_above(m)?;
                    let (a, b) = (a.outer_shape(), b.outer_shape());
                    ok &= if m == cover.label {
                        b.dominance_lt(a).unwrap_or(false)
                    } else {
                        a == b
                    };
                }
                out.check(
                    Suite::Dominance,
                    "covers strictly drop the restricted shape",
                    ok,
                    || format!("{lower} -π{}-> {upper}", cover.label),
                );
            }
        }
    }

    if suites.contains(&Suite::Qsym) {
        let n = shape.size();
        let mut sum = Polynomial::zero(n, n);
        for class in &classes {
            sum = &sum + &expand_characteristic(&characteristic(class), n, n)?;
        }
        let q = quasischur(shape, n)?;
        out.check(
            Suite::Qsym,
            "class characteristics add up to the quasisymmetric Schur function",
            sum == q,
            || shape.to_string(),
        );
        out.check(
            Suite::Qsym,
            "quasisymmetric Schur functions are quasisymmetric",
            q.is_quasisymmetric(),
            || shape.to_string(),
        );
    }
    Ok(out)
}

/// `Σ_{α̃ = λ} 𝓢_α = s_λ` in `n` variables for every partition of `n <= max_n`.
fn refinement_outcome(max_n: usize) -> Result<ShapeOutcome, VerifyError> {
    let mut out = ShapeOutcome::default();
    for n in 1..=max_n {
        let comps = compositions_of(n);
        for lambda in partitions_of(n) {
            let mut sum = Polynomial::zero(n, n);
            for alpha in comps
                .iter()
                .filter(|a| a.rearrange_to_partition() == lambda)
            {
                sum = &sum + &quasischur(&SkewShape::straight(alpha.clone()), n)?;
            }
            let s = schur(&lambda, n)?;
            out.check(
                Suite::Qsym,
                "rearrangements refine the Schur function",
                sum == s,
                || lambda.to_string(),
            );
        }
    }
    Ok(out)
}

/// Sum of `𝓢_α` over the rearrangements `α` of `λ`.
pub fn refinement_sum(lambda: &Composition, m: usize) -> Result<Polynomial, QsymError> {
    let n = lambda.size();
    let mut sum = Polynomial::zero(n, m);
    for alpha in compositions_of(n)
        .into_iter()
        .filter(|a| a.rearrange_to_partition() == *lambda)
    {
        sum = &sum + &quasischur(&SkewShape::straight(alpha), m)?;
    }
    Ok(sum)
}

/// One line of `classes` output.
#[derive(Debug, Clone, Serialize)]
pub struct ClassRecord {
    pub class_id: usize,
    pub size: usize,
    pub source: String,
    pub sink: String,
    pub rank_profile: Vec<usize>,
    /// Column words of source and sink: the weak-order interval endpoints.
    pub interval: [String; 2],
}

pub fn class_records(shape: &SkewShape) -> Result<Vec<ClassRecord>, HeckeError> {
    Ok(partition_classes(shape)?
        .iter()
        .enumerate()
        .map(|(id, c)| ClassRecord {
            class_id: id,
            size: c.len(),
            source: c.source().to_string(),
            sink: c.sink().to_string(),
            rank_profile: c.rank_profile(),
            interval: [
                c.source().column_word().to_string(),
                c.sink().column_word().to_string(),
            ],
        })
        .collect())
}

fn stringify(vectors: &[Vec<crate::linalg::Rational>]) -> Vec<Vec<String>> {
    vectors
        .iter()
        .map(|v| v.iter().map(|x| x.to_string()).collect())
        .collect()
}
