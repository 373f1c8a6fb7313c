//! Acceptance criteria, one line each. Exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::random_raw;
use modalgebra::bao::{
    bao_validates_exhaustive, check_preliminary_facts, powerset_bao_of_frame, Bao, Fact,
    FactStatus, Family,
};
use modalgebra::catalog::Axiom;
use modalgebra::construction::{
    build_b_sequence, cofinite_candidates, find_f_witness, run_construction, SidePairs, Verdict,
};
use modalgebra::harness::{
    corollary_sweep, facts_suite, s4_sanity, veiled_suite, CheckVerdict, SweepConfig,
};
use modalgebra::kripke::{enumerate_frames, frame_validates};
use modalgebra::upset::{
    recession_algebra, supremum_in_veiled, AffineSingletonFamily, Flavor, UpSet, VeiledSupremum,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:?}, limit {limit:?}"))?;
    Ok(spent)
}

fn corollary_sweep_exhaustive() -> Outcome {
    let start = Instant::now();
    let report = corollary_sweep(3, &SweepConfig::default()).map_err(|e| e.to_string())?;
    let sizes: Vec<usize> = report.sizes.iter().map(|s| s.frames).collect();
    ensure(sizes == [2, 16, 512], || format!("frame counts {sizes:?}"))?;
    ensure(report.counterexamples.is_empty(), || {
        format!("{} counterexamples", report.counterexamples.len())
    })?;
    ensure(report.s4_violations.is_empty(), || {
        "reflexive transitive frame failing an axiom".into()
    })?;
    let spent = within(start, Duration::from_secs(60))?;
    Ok(format!("530 frames, 0 counterexamples, {spent:.2?}"))
}

fn s4_sanity_to_four() -> Outcome {
    let report = s4_sanity(4).map_err(|e| e.to_string())?;
    ensure(report.frames_per_size == [1, 4, 29, 355], || {
        format!("preorder counts {:?}", report.frames_per_size)
    })?;
    ensure(report.passed(), || {
        format!("{} failures", report.failures.len())
    })?;
    Ok("389 reflexive transitive frames validate A-F".into())
}

/// Iterates the recession box on `[0, N)` with an explicit tail bit, with no
/// reference to the closed forms.
struct Truncated {
    head: Vec<bool>,
    tail: bool,
}

impl Truncated {
    fn boxed(&self) -> Truncated {
        let n = self.head.len();
        let head = (0..n)
            .map(|w| self.tail && (w.saturating_sub(1)..n).all(|v| self.head[v]))
            .collect();
        // w ≥ N sees [w − 1, ∞), which meets the head only at N − 1
        Truncated {
            head,
            tail: self.tail && self.head[n - 1],
        }
    }
}

fn recession_run() -> Outcome {
    const DEPTH: usize = 64;
    const N: usize = 200;
    let start = Instant::now();
    let ctx = recession_algebra(Flavor::Full);
    let witness = find_f_witness(&ctx, cofinite_candidates(8)).ok_or("no witness")?;
    ensure(*witness.a() == UpSet::cofinite([0]), || {
        format!("witness {}", witness.a())
    })?;

    let bs = build_b_sequence(&ctx, &witness, DEPTH).map_err(|e| e.to_string())?;
    let mut power = Truncated {
        head: (0..N).map(|n| n != 0).collect(),
        tail: true,
    };
    for n in 1..=DEPTH {
        power = power.boxed();
        let next = power.boxed();
        let b = bs.b(n);
        for m in 0..N as u64 {
            let oracle = power.head[m as usize] && !next.head[m as usize];
            ensure(b.contains(m) == oracle, || {
                format!("b{n} disagrees with the oracle at {m}")
            })?;
        }
        ensure(!(power.tail && !next.tail), || {
            format!("oracle b{n} has an infinite tail")
        })?;
        ensure(*b == UpSet::finite([n as u64 + 1]), || {
            format!("b{n} = {b}")
        })?;
    }

    let cert = run_construction(&ctx, witness.a().clone(), DEPTH, SidePairs::All)
        .map_err(|e| e.to_string())?;
    if let Some(failed) = cert.checks.iter().find(|c| !c.passed) {
        return Err(format!("check {} failed: {}", failed.name, failed.detail));
    }
    let antecedent: UpSet = cert.antecedent_value.parse().map_err(|e| format!("{e}"))?;
    let consequent: UpSet = cert.consequent_value.parse().map_err(|e| format!("{e}"))?;
    ensure(antecedent == UpSet::finite([2]), || {
        format!("antecedent {antecedent}")
    })?;
    ensure(consequent.is_empty(), || format!("consequent {consequent}"))?;
    ensure(cert.verdict == Verdict::ARefuted, || {
        cert.verdict.to_string()
    })?;
    let spent = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "b_n = {{n+1}} for n <= {DEPTH}, {} checks, antecedent {antecedent}, consequent {consequent}, {spent:.2?}",
        cert.checks.len()
    ))
}

fn veiled_suite_run() -> Outcome {
    let start = Instant::now();
    let ctx = recession_algebra(Flavor::Veiled);
    let a = UpSet::cofinite([0]);
    ensure(ctx.contains(&a), || "ω∖{0} rejected".into())?;
    let layer = ctx.difference(&ctx.box_(&a), &ctx.box_power(&a, 2));
    ensure(layer == UpSet::finite([2]), || format!("□a∖□²a = {layer}"))?;

    for start in [2, 3, 4] {
        let VeiledSupremum::Absent(none) =
            supremum_in_veiled(AffineSingletonFamily { start, step: 3 })
                .map_err(|e| e.to_string())?
        else {
            return Err(format!("family 3n+{start} has a supremum"));
        };
        let bounds = none.candidate_bounds(20);
        ensure(bounds.len() >= 20, || "too few candidate bounds".into())?;
        for bound in &bounds {
            none.verify(bound).map_err(|e| e.to_string())?;
        }
    }

    let report = veiled_suite(1000, 2024);
    ensure(report.passed, || report.to_string())?;
    let sampled = report
        .checks
        .iter()
        .filter(|c| c.verdict == CheckVerdict::NoCounterexampleSampled)
        .count();
    ensure(sampled == Axiom::LOGIC.len(), || {
        format!("{sampled} sampled checks")
    })?;
    let spent = within(start, Duration::from_secs(30))?;
    Ok(format!("¬F witnessed by {{2}}, 3 families without supremum, A-E: no counterexample in 1000 samples each (sampling, not proof), {spent:.2?}"))
}

fn upset_oracle() -> Outcome {
    const CASES: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut equal_pairs = 0;
    for case in 0..CASES {
        let (x, y) = (random_raw(&mut rng, 16, 12), random_raw(&mut rng, 16, 12));
        let (a, b) = (x.to_upset(), y.to_upset());
        let h = x.horizon(&y) + 2;
        let fail = |op: &str| format!("case {case}: {op} on {x:?}, {y:?}");
        let agrees = |set: &UpSet, oracle: &dyn Fn(u64) -> bool| {
            (0..h).all(|n| set.contains(n) == oracle(n))
        };
        ensure(
            agrees(&a.union(&b), &|n| x.member(n) || y.member(n)),
            || fail("union"),
        )?;
        ensure(
            agrees(&a.intersection(&b), &|n| x.member(n) && y.member(n)),
            || fail("intersection"),
        )?;
        ensure(agrees(&a.complement(), &|n| !x.member(n)), || {
            fail("complement")
        })?;
        ensure(
            agrees(&a.difference(&b), &|n| x.member(n) && !y.member(n)),
            || fail("difference"),
        )?;
        ensure(agrees(&a.dia_recession(), &|n| x.dia(n)), || {
            fail("dia_recession")
        })?;
        ensure(agrees(&a.box_recession(), &|n| x.boxed(n)), || {
            fail("box_recession")
        })?;

        let again = UpSet::normalize(a.prefix().to_vec(), a.period().to_vec())
            .map_err(|e| e.to_string())?;
        ensure(again == a, || fail("idempotence"))?;
        let same = (0..h).all(|n| x.member(n) == y.member(n));
        ensure((a == b) == same, || fail("equality"))?;
        equal_pairs += same as usize;
    }
    ensure(equal_pairs > 0, || "no equal pairs drawn".into())?;
    Ok(format!(
        "{CASES} cases x 6 operations agree; {equal_pairs} equal pairs"
    ))
}

fn cross_semantics() -> Outcome {
    let formulas: Vec<(Axiom, _)> = Axiom::ALL
        .into_iter()
        .map(|a| (a, a.formula()))
        .filter(|(_, f)| f.variables().len() <= 3)
        .collect();
    let mut compared = 0;
    for k in 1..=2 {
        for frame in enumerate_frames(k).map_err(|e| e.to_string())? {
            let ctx = powerset_bao_of_frame(&frame);
            for (axiom, f) in &formulas {
                let kripke = frame_validates(&frame, f)
                    .map_err(|e| e.to_string())?
                    .is_valid();
                let algebra = bao_validates_exhaustive(&ctx, f)
                    .map_err(|e| e.to_string())?
                    .is_proof();
                ensure(kripke == algebra, || {
                    format!("{} disagrees on {frame}", axiom.name())
                })?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} frame/formula pairs, 0 disagreements"))
}

fn supremum_facts() -> Outcome {
    let finite = facts_suite(1000, 77);
    ensure(finite.passed, || finite.to_string())?;

    let ctx = recession_algebra(Flavor::Full);
    let a = UpSet::cofinite([0]);
    let q = |i| Family::BoxLayers {
        a: a.clone(),
        start: i,
        step: 3,
    };
    let all = Family::BoxLayers {
        a: a.clone(),
        start: 1,
        step: 1,
    };
    let report = check_preliminary_facts(
        &ctx,
        &[
            (q(1), q(2)),
            (q(1), q(3)),
            (q(2), q(3)),
            (q(1), all.clone()),
        ],
    )
    .map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{report:?}"))?;
    ensure(report.count(Fact::Disjoint, FactStatus::Pass) == 3, || {
        "q_i disjointness not exercised".into()
    })?;
    ensure(report.count(Fact::SumSup, FactStatus::Pass) >= 1, || {
        "sum fact not exercised".into()
    })?;
    let r = ctx.family_join(&all).map_err(|e| e.to_string())?;
    let joined_diamonds = ctx
        .family_join(&all.clone().diamonds())
        .map_err(|e| e.to_string())?;
    ensure(ctx.leq(&joined_diamonds, &ctx.diamond(&r)), || {
        "⋁◇bₙ ≰ ◇r".into()
    })?;
    Ok(format!(
        "1000 finite trials; recession families: q_i disjoint, ⋁◇b_n = {joined_diamonds} ≤ ◇r = {}",
        ctx.diamond(&r)
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 corollary sweep k <= 3", corollary_sweep_exhaustive),
        ("2 S4 sanity k <= 4", s4_sanity_to_four),
        ("3 recession construction", recession_run),
        ("4 veiled suite", veiled_suite_run),
        ("5 UPSet oracle", upset_oracle),
        ("6 cross-semantics", cross_semantics),
        ("7 supremum facts", supremum_facts),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of 7 criteria pass", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
