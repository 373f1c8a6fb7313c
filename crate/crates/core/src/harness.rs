//! Sweeps, suites and reports.
//!
//! Every report carries `schema: 1` and serializes to JSON; `Display` gives
//! the plain-text form. Apart from `wall_time_ms`, the same inputs and seed
//! always give the same report.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bao::{
    bao_validates_sampled, check_preliminary_facts, powerset_bao_of_frame, Bao, BaoError,
    BaoVerdict, Fact, FactStatus, Family, FamilyPair, PowersetAlgebra,
};
use crate::catalog::{Axiom, AxiomCatalog};
use crate::construction::{
    self, cofinite_candidates, find_f_witness, ConstructionError, RefutationCertificate, SidePairs,
    Verdict,
};
use crate::kripke::{
    enumerate_frames_bounded, frame_validates_bounded, preorder_frames, CompiledFormula,
    FiniteFrame, KripkeError, WorldSet, DEFAULT_MAX_ENUMERATION_WORLDS, DEFAULT_MAX_VALUATION_BITS,
};
use crate::upset::{
    recession_algebra, supremum_in_veiled, AffineSingletonFamily, Flavor, RecessionAlgebra, UpSet,
    VeiledSupremum,
};

pub const SCHEMA: u32 = 1;

/// Samples per axiom in the recession suite.
pub const RECESSION_SAMPLES: usize = 500;

/// Candidate upper bounds each missing supremum is tested against.
pub const SUPREMUM_CANDIDATES: usize = 20;

/// Frames drawn per run in the sampled `k = 4` sweep.
pub const DEFAULT_K4_SAMPLES: usize = 2000;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("k = {k} needs {needed}")]
    Bound { k: usize, needed: &'static str },
    #[error("unknown context {0:?}")]
    UnknownContext(String),
    #[error(transparent)]
    Kripke(#[from] KripkeError),
    #[error(transparent)]
    Bao(#[from] BaoError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Any algebra a certificate can name.
#[derive(Clone, Debug)]
pub enum Context {
    Recession(RecessionAlgebra),
    Powerset(PowersetAlgebra),
}

/// Rebuilds an algebra from its [`Bao::id`].
pub fn context_from_id(id: &str) -> Result<Context, HarnessError> {
    match id {
        "recession:full" => Ok(Context::Recession(recession_algebra(Flavor::Full))),
        "recession:veiled" => Ok(Context::Recession(recession_algebra(Flavor::Veiled))),
        _ => {
            let spec = id
                .strip_prefix("powerset:")
                .ok_or_else(|| HarnessError::UnknownContext(id.to_string()))?;
            let frame: FiniteFrame = spec.parse()?;
            Ok(Context::Powerset(powerset_bao_of_frame(&frame)))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertifyReport {
    pub schema: u32,
    pub context: String,
    pub verdict: Verdict,
    /// Every stored value that disagrees with the recomputation.
    pub problems: Vec<String>,
    pub passed: bool,
}

/// Recomputes a certificate from its context and witness alone.
pub fn certify(cert: &RefutationCertificate) -> Result<CertifyReport, HarnessError> {
    let problems = match context_from_id(&cert.context)? {
        Context::Recession(ctx) => cert.recheck(&ctx)?,
        Context::Powerset(ctx) => cert.recheck(&ctx)?,
    };
    Ok(CertifyReport {
        schema: SCHEMA,
        context: cert.context.clone(),
        verdict: cert.verdict.clone(),
        passed: problems.is_empty() && cert.verdict == Verdict::ARefuted,
        problems,
    })
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Largest `k` swept exhaustively.
    pub exhaustive_bound: usize,
    /// Sweep all 65,536 frames on four worlds. Slow.
    pub exhaustive_k4: bool,
    /// Random frames drawn for `k = 4` when not exhaustive.
    pub k4_samples: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            exhaustive_bound: DEFAULT_MAX_ENUMERATION_WORLDS,
            exhaustive_k4: false,
            k4_samples: DEFAULT_K4_SAMPLES,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameRecord {
    pub k: usize,
    /// Bit `w·k + v` is set iff `w R v`.
    pub index: u64,
    pub frame: String,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
    pub f: bool,
    pub reflexive: bool,
    pub transitive: bool,
    /// How the construction went for frames where `F` fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
}

impl FrameRecord {
    pub fn validates_logic(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e
    }

    pub fn validates_frame_conditions(&self) -> bool {
        self.b && self.c && self.d && self.e
    }

    pub fn validates_all(&self) -> bool {
        self.validates_logic() && self.f
    }
}

struct Classifier {
    compiled: Vec<CompiledFormula>,
}

impl Classifier {
    fn new() -> Classifier {
        let catalog = AxiomCatalog::new();
        let compiled = [Axiom::A, Axiom::B, Axiom::C, Axiom::D, Axiom::E, Axiom::F]
            .iter()
            .map(|&ax| CompiledFormula::new(catalog.get(ax)))
            .collect();
        Classifier { compiled }
    }

    fn classify(&self, frame: &FiniteFrame) -> Result<FrameRecord, KripkeError> {
        let mut valid = [false; 6];
        for (slot, f) in valid.iter_mut().zip(&self.compiled) {
            *slot = frame_validates_bounded(frame, f, DEFAULT_MAX_VALUATION_BITS)?.is_valid();
        }
        let props = frame.properties();
        let construction = (!valid[5]).then(|| {
            let ctx = powerset_bao_of_frame(frame);
            let elements = ctx.elements().unwrap_or_default();
            construction::attempt(&ctx, elements, (1 << frame.size()) + 2).summary()
        });
        Ok(FrameRecord {
            k: frame.size(),
            index: frame.relation_index(),
            frame: frame.to_string(),
            a: valid[0],
            b: valid[1],
            c: valid[2],
            d: valid[3],
            e: valid[4],
            f: valid[5],
            reflexive: props.reflexive,
            transitive: props.transitive,
            construction,
        })
    }

    fn classify_all(&self, frames: &[FiniteFrame]) -> Result<Vec<FrameRecord>, KripkeError> {
        // collect keeps input order, so the merge is deterministic
        frames
            .par_iter()
            .map(|frame| self.classify(frame))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub k: usize,
    pub mode: SweepMode,
    pub frames: usize,
    pub validating_logic: usize,
    pub validating_f: usize,
    pub counterexamples: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub kmax: usize,
    pub frames_examined: usize,
    pub sizes: Vec<SizeSummary>,
    /// Frames validating `A`–`E` but not `F`.
    pub counterexamples: Vec<FrameRecord>,
    /// Reflexive transitive frames failing one of `A`–`F`.
    pub s4_violations: Vec<FrameRecord>,
    /// Frames validating `B`–`E` on which some element refutes `F`.
    pub witnesses_under_frame_conditions: Vec<FrameRecord>,
    pub frames: Vec<FrameRecord>,
    pub wall_time_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
            && self.s4_violations.is_empty()
            && self.witnesses_under_frame_conditions.is_empty()
    }
}

/// Classifies every frame on `1..=kmax` worlds by which of `A`–`F` it validates.
pub fn corollary_sweep(kmax: usize, config: &SweepConfig) -> Result<SweepReport, HarnessError> {
    let start = Instant::now();
    let exhaustive = |k: usize| k <= config.exhaustive_bound || (k == 4 && config.exhaustive_k4);
    if kmax > 4 && !exhaustive(kmax) {
        return Err(HarnessError::Bound {
            k: kmax,
            needed: "k ≤ 4",
        });
    }
    if kmax == 4 && !exhaustive(4) && config.k4_samples == 0 {
        return Err(HarnessError::Bound {
            k: 4,
            needed: "--exhaustive-k4 or a positive sample count",
        });
    }
    let classifier = Classifier::new();
    let mut sizes = Vec::new();
    let mut frames = Vec::new();
    for k in 1..=kmax {
        let (mode, batch) = if exhaustive(k) {
            (
                SweepMode::Exhaustive,
                enumerate_frames_bounded(k, config.exhaustive_bound.max(k))?.collect::<Vec<_>>(),
            )
        } else {
            (
                SweepMode::Sampled,
                sample_frames(k, config.k4_samples, config.seed)?,
            )
        };
        let records = classifier.classify_all(&batch)?;
        sizes.push(SizeSummary {
            k,
            mode,
            frames: records.len(),
            validating_logic: records.iter().filter(|r| r.validates_logic()).count(),
            validating_f: records.iter().filter(|r| r.f).count(),
            counterexamples: records
                .iter()
                .filter(|r| r.validates_logic() && !r.f)
                .count(),
        });
        frames.extend(records);
    }
    let pick = |keep: &dyn Fn(&FrameRecord) -> bool| {
        frames
            .iter()
            .filter(|r| keep(r))
            .cloned()
            .collect::<Vec<_>>()
    };
    Ok(SweepReport {
        schema: SCHEMA,
        kmax,
        frames_examined: frames.len(),
        sizes,
        counterexamples: pick(&|r| r.validates_logic() && !r.f),
        s4_violations: pick(&|r| r.reflexive && r.transitive && !r.validates_all()),
        witnesses_under_frame_conditions: pick(&|r| {
            r.validates_frame_conditions()
                && r.construction
                    .as_deref()
                    .is_some_and(|s| !s.starts_with("no witness"))
        }),
        frames,
        wall_time_ms: elapsed_ms(start),
    })
}

/// Distinct random relations on `k` worlds, in index order.
fn sample_frames(k: usize, count: usize, seed: u64) -> Result<Vec<FiniteFrame>, KripkeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64) << 32);
    let space = 1u64 << (k * k);
    let mut indices: Vec<u64> = (0..count).map(|_| rng.gen_range(0..space)).collect();
    indices.sort_unstable();
    indices.dedup();
    indices
        .into_iter()
        .map(|i| FiniteFrame::from_relation_index(k, i))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct S4Report {
    pub schema: u32,
    pub kmax: usize,
    /// Reflexive transitive frames per size, starting at `k = 1`.
    pub frames_per_size: Vec<usize>,
    pub failures: Vec<FrameRecord>,
    pub wall_time_ms: u64,
}

impl S4Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `A`–`F` on every reflexive transitive frame with at most `kmax` worlds.
pub fn s4_sanity(kmax: usize) -> Result<S4Report, HarnessError> {
    let start = Instant::now();
    let classifier = Classifier::new();
    let mut frames_per_size = Vec::new();
    let mut failures = Vec::new();
    for k in 1..=kmax {
        let frames = preorder_frames(k)?;
        frames_per_size.push(frames.len());
        failures.extend(
            classifier
                .classify_all(&frames)?
                .into_iter()
                .filter(|r| !r.validates_all()),
        );
    }
    Ok(S4Report {
        schema: SCHEMA,
        kmax,
        frames_per_size,
        failures,
        wall_time_ms: elapsed_ms(start),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckVerdict {
    Pass,
    Fail,
    /// Sampling found no counterexample. Not a proof.
    NoCounterexampleSampled,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteCheck {
    pub description: String,
    /// The mathematical statement being checked.
    pub claim: String,
    pub verdict: CheckVerdict,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub checks: Vec<SuiteCheck>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<RefutationCertificate>,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport {
            schema: SCHEMA,
            suite: suite.into(),
            checks: Vec::new(),
            passed: true,
            certificate: None,
            wall_time_ms: 0,
        }
    }

    fn check(
        &mut self,
        description: impl Into<String>,
        claim: &str,
        ok: bool,
        witness: impl Into<String>,
    ) {
        self.push(
            description,
            claim,
            if ok {
                CheckVerdict::Pass
            } else {
                CheckVerdict::Fail
            },
            witness,
        );
    }

    fn push(
        &mut self,
        description: impl Into<String>,
        claim: &str,
        verdict: CheckVerdict,
        witness: impl Into<String>,
    ) {
        self.passed &= verdict != CheckVerdict::Fail;
        self.checks.push(SuiteCheck {
            description: description.into(),
            claim: claim.into(),
            verdict,
            witness: witness.into(),
        });
    }

    fn sampled<B: Bao + ?Sized>(
        &mut self,
        ctx: &B,
        axiom: Axiom,
        samples: usize,
        seed: u64,
        claim: &str,
    ) {
        let description = format!("{} sampled valid, {samples} samples", axiom.name());
        match bao_validates_sampled(ctx, &axiom.formula(), samples, seed) {
            Ok(BaoVerdict::Valid) => self.push(description, claim, CheckVerdict::Pass, "proved"),
            Ok(BaoVerdict::NoCounterexampleFound { samples }) => self.push(
                description,
                claim,
                CheckVerdict::NoCounterexampleSampled,
                format!("no counterexample in {samples} samples (sampling, not proof)"),
            ),
            Ok(BaoVerdict::Counterexample { assignment }) => {
                let shown: Vec<String> = assignment
                    .iter()
                    .map(|(k, v)| format!("{k} = {}", ctx.render(v)))
                    .collect();
                self.push(
                    description,
                    claim,
                    CheckVerdict::Fail,
                    format!("counterexample: {}", shown.join(", ")),
                )
            }
            Err(e) => self.push(description, claim, CheckVerdict::Fail, e.to_string()),
        }
    }

    fn facts<B: Bao + ?Sized>(
        &mut self,
        ctx: &B,
        description: &str,
        claim: &str,
        families: &[FamilyPair<B::Elem>],
    ) {
        match check_preliminary_facts(ctx, families) {
            Ok(report) => {
                let counts: Vec<String> = [
                    Fact::UnionBelowJoin,
                    Fact::SumSup,
                    Fact::Disjoint,
                    Fact::Distr,
                ]
                .iter()
                .map(|&f| {
                    format!(
                        "{f:?}: {} pass, {} vacuous",
                        report.count(f, FactStatus::Pass),
                        report.count(f, FactStatus::Vacuous)
                    )
                })
                .collect();
                let witness = match report.checks.iter().find(|c| c.status == FactStatus::Fail) {
                    Some(c) => format!("{:?} fails on pair {}: {}", c.fact, c.pair, c.detail),
                    None => counts.join("; "),
                };
                self.check(description, claim, report.passed(), witness);
            }
            Err(e) => self.check(description, claim, false, e.to_string()),
        }
    }

    fn finish(mut self, start: Instant) -> SuiteReport {
        self.wall_time_ms = elapsed_ms(start);
        self
    }
}

fn layer(n: u32) -> (u32, u32) {
    (n, 3)
}

/// The construction run end to end on the full recession algebra.
pub fn recession_suite(depth: usize, seed: u64) -> SuiteReport {
    recession_suite_with(depth, seed, RECESSION_SAMPLES)
}

pub fn recession_suite_with(depth: usize, seed: u64, samples: usize) -> SuiteReport {
    let start = Instant::now();
    let ctx = recession_algebra(Flavor::Full);
    let mut report = SuiteReport::new("recession");

    for (i, axiom) in Axiom::FRAME_CONDITIONS.into_iter().enumerate() {
        report.sampled(
            &ctx,
            axiom,
            samples,
            seed.wrapping_add(i as u64),
            "the recession frame validates B, C, D, E",
        );
    }

    let Some(witness) = find_f_witness(&ctx, cofinite_candidates(8)) else {
        report.check(
            "witness for ~F",
            "a = ω∖{0} refutes F",
            false,
            "none among ω∖S, S ⊆ [0, 8)",
        );
        return report.finish(start);
    };
    let a = witness.a().clone();
    report.check(
        "witness for ~F",
        "a = ω∖{0} refutes F",
        a == UpSet::cofinite([0]),
        a.to_string(),
    );
    let b1 = ctx.difference(witness.box_a(), witness.box2_a());
    report.check(
        "[]a \\ [][]a",
        "□a∖□²a = {2}",
        b1 == UpSet::finite([2]),
        b1.to_string(),
    );

    match construction::run_construction(&ctx, a.clone(), depth, SidePairs::All) {
        Ok(cert) => {
            let layers_ok = cert.layers.len() == depth
                && cert.layers.iter().enumerate().all(|(i, text)| {
                    text.parse::<UpSet>()
                        .is_ok_and(|b| b == UpSet::finite([i as u64 + 2]))
                });
            report.check(
                format!("b_n for 1 <= n <= {depth}"),
                "bₙ = {n+1}",
                layers_ok,
                format!(
                    "b1 = {}, b{depth} = {}",
                    show(&cert.layers[0]),
                    show(cert.layers.last().unwrap())
                ),
            );
            let failed: Vec<&str> = cert
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            report.check(
                "disjointness, coverage and assembly",
                "the bₙ are disjoint, bᵢ ≤ ◇bⱼ for i < j, q₁ ∨ q₂ ∨ q₃ = r",
                failed.is_empty(),
                if failed.is_empty() {
                    format!("{} checks", cert.checks.len())
                } else {
                    failed.join(", ")
                },
            );
            for (what, element, expected) in [
                ("q1", &cert.q1, UpSet::progression(2, 3)),
                ("q2", &cert.q2, UpSet::progression(3, 3)),
                ("q3", &cert.q3, UpSet::progression(4, 3)),
                ("r", &cert.r, Ok(UpSet::from(2))),
            ] {
                let ok = matches!((element.parse::<UpSet>(), expected), (Ok(x), Ok(y)) if x == y);
                report.check(what, "qᵢ = ⋁ₙ b₃ₙ₊ᵢ, r = ⋁ₙ bₙ", ok, show(element));
            }
            report.check(
                "antecedent of A",
                "the antecedent of A evaluates to b₁ = {2}",
                cert.antecedent_value
                    .parse::<UpSet>()
                    .is_ok_and(|x| x == UpSet::finite([2])),
                show(&cert.antecedent_value),
            );
            report.check(
                "consequent of A",
                "the consequent of A evaluates to 0",
                cert.consequent_value
                    .parse::<UpSet>()
                    .is_ok_and(|x| x.is_empty()),
                show(&cert.consequent_value),
            );
            report.check(
                "verdict",
                "A is refuted",
                cert.verdict == Verdict::ARefuted,
                cert.verdict.to_string(),
            );
            report.certificate = Some(cert);
        }
        Err(e) => report.check(
            "construction",
            "the construction goes through",
            false,
            e.to_string(),
        ),
    }

    let box_layers = |(start, step): (u32, u32)| Family::BoxLayers {
        a: a.clone(),
        start,
        step,
    };
    let all_layers = box_layers((1, 1));
    report.facts(
        &ctx,
        "facts on the construction families",
        "⋃ ≤ ⋁, sums respect ⊆, disjoint families have disjoint joins, ⋁◇bₙ ≤ ◇r",
        &[
            (box_layers(layer(1)), box_layers(layer(2))),
            (box_layers(layer(1)), box_layers(layer(3))),
            (box_layers(layer(2)), box_layers(layer(3))),
            (box_layers(layer(1)), all_layers.clone()),
            (all_layers.clone(), all_layers),
        ],
    );
    report.finish(start)
}

fn show(bits: &str) -> String {
    bits.parse::<UpSet>()
        .map_or_else(|_| bits.to_string(), |x| x.to_string())
}

/// The veiled algebra: `¬F` satisfiable, `A`–`E` sampled, no suprema for the `qᵢ`.
pub fn veiled_suite(samples: usize, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let ctx = recession_algebra(Flavor::Veiled);
    let mut report = SuiteReport::new("veiled");

    let a = UpSet::cofinite([0]);
    report.check(
        "a is admissible",
        "ω∖{0} belongs to the veiled algebra",
        ctx.contains(&a),
        a.to_string(),
    );
    let b1 = ctx.difference(&ctx.box_(&a), &ctx.box_power(&a, 2));
    report.check(
        "~F witness",
        "□a∖□²a = {2} ≠ ∅, so ¬F is satisfiable",
        b1 == UpSet::finite([2]),
        b1.to_string(),
    );

    for start in [2u64, 3, 4] {
        let family = AffineSingletonFamily { start, step: 3 };
        let description = format!("supremum of {{{{3n+{start}}}}}");
        match supremum_in_veiled(family) {
            Ok(VeiledSupremum::Absent(none)) => {
                let bounds = none.candidate_bounds(SUPREMUM_CANDIDATES);
                let broken = bounds.iter().find_map(|b| none.verify(b).err());
                report.check(
                    description,
                    "the family has no least upper bound among finite and cofinite sets",
                    broken.is_none() && bounds.len() == SUPREMUM_CANDIDATES,
                    match broken {
                        None => format!(
                            "union {} is neither finite nor cofinite; {} upper bounds each shrunk",
                            none.union(),
                            bounds.len()
                        ),
                        Some(e) => e.to_string(),
                    },
                );
            }
            Ok(VeiledSupremum::Exists(x)) => {
                report.check(description, "no supremum", false, format!("supremum {x}"))
            }
            Err(e) => report.check(description, "no supremum", false, e.to_string()),
        }
    }

    for (i, axiom) in Axiom::LOGIC.into_iter().enumerate() {
        report.sampled(
            &ctx,
            axiom,
            samples,
            seed.wrapping_add(i as u64),
            "the veiled frame validates A, B, C, D, E",
        );
    }

    match construction::run_construction(&ctx, a, construction::DEFAULT_DEPTH, SidePairs::Stride(7))
    {
        Err(e @ ConstructionError::Join { .. }) => report.check(
            "construction stops at the joins",
            "the veiled algebra is not complete",
            true,
            e.to_string(),
        ),
        Err(e) => report.check(
            "construction stops at the joins",
            "the veiled algebra is not complete",
            false,
            e.to_string(),
        ),
        Ok(_) => report.check(
            "construction stops at the joins",
            "the veiled algebra is not complete",
            false,
            "all joins formed",
        ),
    }
    report.finish(start)
}

/// The supremum facts on random frames with random families.
pub fn facts_suite(trials: usize, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("facts");
    let mut failures = Vec::new();
    let mut counts = [0usize; 4];
    for trial in 0..trials {
        let k = rng.gen_range(1..=4);
        let frame =
            FiniteFrame::from_relation_index(k, rng.gen_range(0..1u64 << (k * k))).expect("k ≤ 4");
        let ctx = powerset_bao_of_frame(&frame);
        let full = 1u64 << k;
        let family = |rng: &mut ChaCha8Rng| -> Family<WorldSet> {
            if rng.gen_bool(0.25) {
                Family::BoxLayers {
                    a: WorldSet(rng.gen_range(0..full)),
                    start: rng.gen_range(0..3),
                    step: rng.gen_range(1..4),
                }
            } else {
                let n = rng.gen_range(1..=4);
                Family::Finite((0..n).map(|_| WorldSet(rng.gen_range(0..full))).collect())
            }
        };
        let pair = (family(&mut rng), family(&mut rng));
        match check_preliminary_facts(&ctx, &[pair]) {
            Ok(r) => {
                for (slot, fact) in counts.iter_mut().zip([
                    Fact::UnionBelowJoin,
                    Fact::SumSup,
                    Fact::Disjoint,
                    Fact::Distr,
                ]) {
                    *slot += r.count(fact, FactStatus::Pass);
                }
                if !r.passed() {
                    failures.push(format!("trial {trial} on {frame}"));
                }
            }
            Err(e) => failures.push(format!("trial {trial} on {frame}: {e}")),
        }
    }
    report.check(
        format!("facts on {trials} random finite families"),
        "⋃ ≤ ⋁, sums respect ⊆, disjoint families have disjoint joins, ⋁◇ ≤ ◇⋁",
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "non-vacuous passes: union {}, sum {}, disjoint {}, distr {}",
                counts[0], counts[1], counts[2], counts[3]
            )
        } else {
            failures.join("; ")
        },
    );
    report.finish(start)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "sweep kmax={} frames={} time={}ms",
            self.kmax, self.frames_examined, self.wall_time_ms
        )?;
        for s in &self.sizes {
            writeln!(
                f,
                "  k={} {:?}: {} frames, {} validate A-E, {} validate F, {} counterexamples",
                s.k, s.mode, s.frames, s.validating_logic, s.validating_f, s.counterexamples
            )?;
        }
        for r in &self.counterexamples {
            writeln!(f, "  counterexample: {}", r.frame)?;
        }
        for r in &self.s4_violations {
            writeln!(
                f,
                "  reflexive transitive frame failing an axiom: {}",
                r.frame
            )?;
        }
        for r in &self.witnesses_under_frame_conditions {
            writeln!(
                f,
                "  witness on a B-E frame: {} ({})",
                r.frame,
                r.construction.as_deref().unwrap_or("")
            )?;
        }
        write!(f, "{}", mark(self.passed()))
    }
}

impl fmt::Display for S4Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "s4 kmax={} preorders per size={:?} time={}ms",
            self.kmax, self.frames_per_size, self.wall_time_ms
        )?;
        for r in &self.failures {
            writeln!(f, "  fails: {}", r.frame)?;
        }
        write!(f, "{}", mark(self.passed()))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} time={}ms", self.suite, self.wall_time_ms)?;
        for c in &self.checks {
            let verdict = match c.verdict {
                CheckVerdict::Pass => "pass",
                CheckVerdict::Fail => "FAIL",
                CheckVerdict::NoCounterexampleSampled => "sampled",
            };
            writeln!(f, "  [{verdict}] {}: {}", c.description, c.witness)?;
        }
        if let Some(cert) = &self.certificate {
            writeln!(
                f,
                "  certificate: a = {}, depth {}, {}",
                show(&cert.a),
                cert.depth,
                cert.verdict
            )?;
        }
        write!(f, "{}", mark(self.passed))
    }
}

impl fmt::Display for CertifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate for {}: {}", self.context, self.verdict)?;
        for p in &self.problems {
            writeln!(f, "  {p}")?;
        }
        write!(f, "{}", mark(self.passed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_have_no_counterexamples() {
        let config = SweepConfig::default();
        let one = corollary_sweep(1, &config).unwrap();
        assert_eq!(one.frames_examined, 2);
        assert!(one.passed());
        let two = corollary_sweep(2, &config).unwrap();
        assert_eq!(two.frames_examined, 2 + 16);
        assert_eq!(two.sizes[1].frames, 16);
        assert!(two.passed(), "{two}");
    }

    #[test]
    fn single_point_classification() {
        let config = SweepConfig::default();
        let one = corollary_sweep(1, &config).unwrap();
        let (dead, refl) = (&one.frames[0], &one.frames[1]);
        // the irreflexive point validates everything but C
        assert!(dead.a && dead.b && !dead.c && dead.d && dead.e && dead.f);
        assert!(refl.validates_all() && refl.reflexive && refl.transitive);
    }

    #[test]
    fn sweep_bound() {
        let config = SweepConfig {
            k4_samples: 0,
            ..SweepConfig::default()
        };
        assert!(matches!(
            corollary_sweep(4, &config),
            Err(HarnessError::Bound { k: 4, .. })
        ));
        assert!(matches!(
            corollary_sweep(5, &SweepConfig::default()),
            Err(HarnessError::Bound { k: 5, .. })
        ));
    }

    #[test]
    fn contexts_round_trip_through_ids() {
        for id in ["recession:full", "recession:veiled", "powerset:2;0-1,1-1"] {
            let back = match context_from_id(id).unwrap() {
                Context::Recession(c) => c.id(),
                Context::Powerset(c) => c.id(),
            };
            assert_eq!(back, id);
        }
        assert!(context_from_id("nowhere").is_err());
    }

    #[test]
    fn veiled_suite_is_green() {
        let report = veiled_suite(50, 1);
        assert!(report.passed, "{report}");
        assert!(report
            .checks
            .iter()
            .any(|c| c.verdict == CheckVerdict::NoCounterexampleSampled));
    }

    #[test]
    fn recession_suite_embeds_a_checkable_certificate() {
        let report = recession_suite_with(16, 3, 50);
        assert!(report.passed, "{report}");
        let cert = report.certificate.unwrap();
        let verdict = certify(&cert).unwrap();
        assert!(verdict.passed, "{verdict}");
    }

    #[test]
    fn suites_are_deterministic() {
        let strip = |mut r: SuiteReport| {
            r.wall_time_ms = 0;
            serde_json::to_string(&r).unwrap()
        };
        assert_eq!(strip(veiled_suite(30, 9)), strip(veiled_suite(30, 9)));
        assert_eq!(strip(facts_suite(40, 9)), strip(facts_suite(40, 9)));
    }
}
