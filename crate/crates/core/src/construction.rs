//! The refutation of `A` in a complete algebra where `B`–`E` hold and `F` fails.
//!
//! Given `a` with `□a ≰ □²a`, the layers `bₙ = □ⁿa ∖ □ⁿ⁺¹a` (n ≥ 1) are
//! non-zero (by `E`), pairwise disjoint, and each `bᵢ ≤ ◇bⱼ` for `i < j`
//! (by `D` and `E`). Joining every third layer gives
//!
//! ```text
//! p := a,   qᵢ := ⋁ₙ b₃ₙ₊ᵢ (i = 1, 2, 3),   r := ⋁ₙ bₙ
//! ```
//!
//! under which the antecedent of `A` evaluates to `b₁ ≠ 0` while its
//! consequent `◇(r ∧ □(r → q₁ ∨ q₂))` evaluates to `0`. The joins are the one
//! place completeness is needed; an algebra without them fails at
//! [`assemble_assignment`].
//!
//! Every step is checked in the algebra itself and recorded in a
//! [`RefutationCertificate`], which [`RefutationCertificate::recheck`]
//! verifies again from nothing but the witness `a` and the algebra.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bao::{eval_in_bao, Assignment, Bao, BaoError, Family};
use crate::catalog::{Axiom, AxiomCatalog};
use crate::formula::Formula;

/// Default number of layers computed for a run.
pub const DEFAULT_DEPTH: usize = 64;

/// Upper limit on the number of layers.
pub const MAX_DEPTH: usize = 4096;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ConstructionError {
    #[error("{0} is not a witness: □a ≤ □²a")]
    NotAWitness(String),
    #[error("depth {depth} is outside 1..={MAX_DEPTH}")]
    DepthBound { depth: usize },
    #[error("layer b{step} is zero; the E instance with p := □^{} a evaluates to {e_instance} ({})", step - 2, if *e_instance_fails { "E fails here" } else { "E holds here" })]
    ZeroLayer {
        step: usize,
        e_instance: String,
        e_instance_fails: bool,
    },
    #[error("cannot form {element}: {source}")]
    Join {
        element: &'static str,
        #[source]
        source: BaoError,
    },
    #[error(transparent)]
    Bao(#[from] BaoError),
}

/// One verified (or falsified) claim of the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// An element `a` with `□a ≰ □²a`.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessA<E> {
    a: E,
    box_a: E,
    box2_a: E,
}

impl<E: Clone + PartialEq + fmt::Debug> WitnessA<E> {
    pub fn new<B: Bao<Elem = E> + ?Sized>(ctx: &B, a: E) -> Result<WitnessA<E>, ConstructionError> {
        let box_a = ctx.box_(&a);
        let box2_a = ctx.box_(&box_a);
        if ctx.leq(&box_a, &box2_a) {
            return Err(ConstructionError::NotAWitness(ctx.render(&a)));
        }
        Ok(WitnessA { a, box_a, box2_a })
    }

    pub fn a(&self) -> &E {
        &self.a
    }

    pub fn box_a(&self) -> &E {
        &self.box_a
    }

    pub fn box2_a(&self) -> &E {
        &self.box2_a
    }

    /// `□²a < □a`, which `C` forces once `□a ≰ □²a`.
    pub fn strict_descent<B: Bao<Elem = E> + ?Sized>(&self, ctx: &B) -> bool {
        ctx.leq(&self.box2_a, &self.box_a) && self.box2_a != self.box_a
    }
}

/// The first candidate, in order, that witnesses the failure of `F`.
pub fn find_f_witness<B, I>(ctx: &B, candidates: I) -> Option<WitnessA<B::Elem>>
where
    B: Bao + ?Sized,
    I: IntoIterator<Item = B::Elem>,
{
    candidates
        .into_iter()
        .find_map(|a| WitnessA::new(ctx, a).ok())
}

/// `b[1..=depth]` together with the box powers they came from.
#[derive(Clone, Debug, PartialEq)]
pub struct BSequence<E> {
    a: E,
    /// `□⁰a, …, □^(depth+1) a`
    powers: Vec<E>,
    /// `b₁, …, b_depth`
    layers: Vec<E>,
}

impl<E: Clone> BSequence<E> {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn a(&self) -> &E {
        &self.a
    }

    /// `bₙ` for `1 ≤ n ≤ depth`.
    pub fn b(&self, n: usize) -> &E {
        &self.layers[n - 1]
    }

    /// `□ⁿa` for `0 ≤ n ≤ depth + 1`.
    pub fn box_power(&self, n: usize) -> &E {
        &self.powers[n]
    }

    pub fn layers(&self) -> &[E] {
        &self.layers
    }
}

/// The `E` instance `([]x & ~[][]x) -> <>([][]x & ~[][][]x)` with `x = □ⁿa`,
/// built by substituting `box_power(a, n)` for `p`.
pub fn e_instance(n: usize) -> Formula {
    Axiom::E
        .formula()
        .substitute_one("p", Formula::var("a").box_power(n))
}

/// Computes `b₁ … b_depth`, stopping at the first zero layer.
///
/// A zero layer after a non-zero one means the `E` instance at that point
/// fails; the error reports that instance's value. In a finite algebra this
/// always happens eventually unless the layers repeat.
pub fn build_b_sequence<B: Bao + ?Sized>(
    ctx: &B,
    witness: &WitnessA<B::Elem>,
    depth: usize,
) -> Result<BSequence<B::Elem>, ConstructionError> {
    if depth == 0 || depth > MAX_DEPTH {
        return Err(ConstructionError::DepthBound { depth });
    }
    let mut powers = vec![
        witness.a.clone(),
        witness.box_a.clone(),
        witness.box2_a.clone(),
    ];
    let mut layers = Vec::with_capacity(depth);
    for n in 1..=depth {
        if powers.len() < n + 2 {
            let next = ctx.box_(&powers[n]);
            powers.push(next);
        }
        let layer = ctx.difference(&powers[n], &powers[n + 1]);
        if ctx.is_zero(&layer) {
            // n ≥ 2 here: b₁ ≠ 0 for a witness. Re-check E with p := □^(n−2) a.
            let mut assignment = Assignment::new();
            assignment.insert("a".to_string(), witness.a.clone());
            let value = eval_in_bao(ctx, &assignment, &e_instance(n - 2))?;
            return Err(ConstructionError::ZeroLayer {
                step: n,
                e_instance_fails: value != ctx.top(),
                e_instance: ctx.render(&value),
            });
        }
        layers.push(layer);
    }
    Ok(BSequence {
        a: witness.a.clone(),
        powers,
        layers,
    })
}

/// Which `(i, j)` pairs with `i + 1 < j` get the `D`-step side conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SidePairs {
    All,
    /// Pairs whose index `i·depth + j` is a multiple of the stride.
    Stride(usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, passed, detail));
    }

    /// Folds many checks of one kind into a single entry naming the first failure.
    fn push_all<I>(&mut self, name: &str, results: I)
    where
        I: IntoIterator<Item = (bool, String)>,
    {
        let mut count = 0;
        let mut first_failure = None;
        for (ok, what) in results {
            count += 1;
            if !ok && first_failure.is_none() {
                first_failure = Some(what);
            }
        }
        match first_failure {
            None => self.push(name, true, format!("{count} cases")),
            Some(what) => self.push(name, false, format!("fails at {what}")),
        }
    }
}

/// Pairwise disjointness through the chain `bⱼ ≤ □ʲa ≤ □ⁱ⁺¹a ≤ −bᵢ`, each
/// link checked on its own.
pub fn verify_disjointness<B: Bao + ?Sized>(ctx: &B, bs: &BSequence<B::Elem>) -> Report {
    let d = bs.depth();
    let pairs = || (1..=d).flat_map(move |i| (i + 1..=d).map(move |j| (i, j)));
    let mut report = Report::default();
    report.push_all(
        "b_j <= []^j a",
        (1..=d).map(|j| (ctx.leq(bs.b(j), bs.box_power(j)), format!("j={j}"))),
    );
    report.push_all(
        "[]^j a <= []^(i+1) a",
        pairs().map(|(i, j)| {
            (
                ctx.leq(bs.box_power(j), bs.box_power(i + 1)),
                format!("i={i}, j={j}"),
            )
        }),
    );
    report.push_all(
        "[]^(i+1) a <= -b_i",
        (1..=d).map(|i| {
            (
                ctx.leq(bs.box_power(i + 1), &ctx.complement(bs.b(i))),
                format!("i={i}"),
            )
        }),
    );
    report.push_all(
        "b_i & b_j = 0",
        pairs().map(|(i, j)| {
            (
                ctx.is_zero(&ctx.meet(bs.b(i), bs.b(j))),
                format!("i={i}, j={j}"),
            )
        }),
    );
    report
}

/// Checks `bᵢ ≤ ◇bⱼ` for all `i < j`, the `E` instances behind consecutive
/// pairs, and for non-consecutive pairs the side conditions of the `D` step:
/// `◇bᵢ ∧ □ⁱ⁺²a = 0`, `bⱼ ∧ ◇bᵢ = 0`, and the `D` instance `p := bᵢ, q := bⱼ`.
pub fn verify_coverage<B: Bao + ?Sized>(
    ctx: &B,
    bs: &BSequence<B::Elem>,
    side: SidePairs,
) -> Report {
    let d = bs.depth();
    let top = ctx.top();
    let diamonds: Vec<B::Elem> = bs.layers.iter().map(|b| ctx.diamond(b)).collect();
    let dia = |n: usize| &diamonds[n - 1];
    let mut report = Report::default();

    report.push_all(
        "b_i <= <>b_j",
        (1..=d)
            .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
            .map(|(i, j)| (ctx.leq(bs.b(i), dia(j)), format!("i={i}, j={j}"))),
    );

    let e = Axiom::E.formula();
    report.push_all(
        "E instance p := []^(i-1) a",
        (1..d).map(|i| {
            let mut assignment = Assignment::new();
            assignment.insert("p".to_string(), bs.box_power(i - 1).clone());
            let ok = eval_in_bao(ctx, &assignment, &e).is_ok_and(|v| v == top);
            (ok, format!("i={i}"))
        }),
    );

    let selected = |i: usize, j: usize| match side {
        SidePairs::All => true,
        SidePairs::Stride(s) => (i * d + j).is_multiple_of(s.max(1)),
    };
    let side_pairs: Vec<(usize, usize)> = (1..=d)
        .flat_map(|i| (i + 2..=d).map(move |j| (i, j)))
        .filter(|&(i, j)| selected(i, j))
        .collect();
    report.push_all(
        "<>b_i & []^(i+2) a = 0",
        side_pairs
            .iter()
            .map(|&(i, _)| i)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .filter(|&i| i + 2 <= d + 1)
            .map(|i| {
                (
                    ctx.is_zero(&ctx.meet(dia(i), bs.box_power(i + 2))),
                    format!("i={i}"),
                )
            }),
    );
    report.push_all(
        "b_j & <>b_i = 0",
        side_pairs.iter().map(|&(i, j)| {
            (
                ctx.is_zero(&ctx.meet(bs.b(j), dia(i))),
                format!("i={i}, j={j}"),
            )
        }),
    );
    let dax = Axiom::D.formula();
    report.push_all(
        "D instance p := b_i, q := b_j",
        side_pairs.iter().map(|&(i, j)| {
            let mut assignment = Assignment::new();
            assignment.insert("p".to_string(), bs.b(i).clone());
            assignment.insert("q".to_string(), bs.b(j).clone());
            let ok = eval_in_bao(ctx, &assignment, &dax).is_ok_and(|v| v == top);
            (ok, format!("i={i}, j={j}"))
        }),
    );
    report
}

/// The elements `p, q₁, q₂, q₃, r` refuting `A`, plus `b₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct RefutingAssignment<E> {
    pub p: E,
    pub q1: E,
    pub q2: E,
    pub q3: E,
    pub r: E,
    pub b1: E,
    pub checks: Report,
}

impl<E: Clone> RefutingAssignment<E> {
    /// The values of the variables of `A`. `q₃` is internal to the argument.
    pub fn for_axiom(&self) -> Assignment<E> {
        [
            ("p", &self.p),
            ("q1", &self.q1),
            ("q2", &self.q2),
            ("r", &self.r),
        ]
        .into_iter()
        .map(|(n, v)| (n.to_string(), v.clone()))
        .collect()
    }
}

/// Joins the layers into `qᵢ = ⋁ₙ b₃ₙ₊ᵢ` and `r = ⋁ₙ bₙ`, then checks
/// `q₁ ∨ q₂ ∨ q₃ = r`, pairwise disjointness of the `qᵢ`, and that every
/// computed layer sits below its `qᵢ`.
pub fn assemble_assignment<B: Bao + ?Sized>(
    ctx: &B,
    witness: &WitnessA<B::Elem>,
    bs: &BSequence<B::Elem>,
) -> Result<RefutingAssignment<B::Elem>, ConstructionError> {
    let a = witness.a.clone();
    let join = |element: &'static str, start: u32, step: u32| {
        ctx.family_join(&Family::BoxLayers {
            a: a.clone(),
            start,
            step,
        })
        .map_err(|source| ConstructionError::Join { element, source })
    };
    let q1 = join("q1", 1, 3)?;
    let q2 = join("q2", 2, 3)?;
    let q3 = join("q3", 3, 3)?;
    let r = join("r", 1, 1)?;

    let mut checks = Report::default();
    let union = ctx.join(&ctx.join(&q1, &q2), &q3);
    checks.push("q1 | q2 | q3 = r", union == r, ctx.render(&union));
    for (name, x, y) in [
        ("q1 & q2 = 0", &q1, &q2),
        ("q1 & q3 = 0", &q1, &q3),
        ("q2 & q3 = 0", &q2, &q3),
    ] {
        let m = ctx.meet(x, y);
        checks.push(name, ctx.is_zero(&m), ctx.render(&m));
    }
    let qs = [&q1, &q2, &q3];
    checks.push_all(
        "b_n <= q_((n-1) mod 3 + 1)",
        (1..=bs.depth()).map(|n| (ctx.leq(bs.b(n), qs[(n - 1) % 3]), format!("n={n}"))),
    );
    Ok(RefutingAssignment {
        p: a,
        b1: bs.b(1).clone(),
        q1,
        q2,
        q3,
        r,
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ARefuted,
    ConstructionBroken { step: String },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ARefuted => write!(f, "A refuted"),
            Verdict::ConstructionBroken { step } => write!(f, "construction broken at {step}"),
        }
    }
}

/// Value of one conjunct of `A`'s antecedent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjunctValue {
    pub name: String,
    pub value: String,
    pub is_top: bool,
}

/// Self-contained record of a completed run. Elements are stored in the
/// algebra's own text form ([`Bao::render`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationCertificate {
    pub schema: u32,
    pub context: String,
    pub a: String,
    pub depth: usize,
    /// `b₁ … b_depth`.
    pub layers: Vec<String>,
    pub p: String,
    pub q1: String,
    pub q2: String,
    pub q3: String,
    pub r: String,
    pub conjuncts: Vec<ConjunctValue>,
    pub antecedent_value: String,
    pub consequent_value: String,
    pub a_value: String,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl RefutationCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<RefutationCertificate, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Recomputes the whole construction in `ctx` from `a` and `depth` alone
    /// and compares every stored value with the recomputed one. Returns the
    /// list of disagreements; an empty list means the certificate holds.
    pub fn recheck<B: Bao + ?Sized>(&self, ctx: &B) -> Result<Vec<String>, ConstructionError> {
        let mut problems = Vec::new();
        if ctx.id() != self.context {
            problems.push(format!(
                "certificate is for {}, not {}",
                self.context,
                ctx.id()
            ));
        }
        let a = ctx.parse_element(&self.a)?;
        let fresh = run_construction(ctx, a, self.depth, SidePairs::All)?;
        let mut compare = |what: &str, stored: &str, recomputed: &str| {
            if stored != recomputed {
                problems.push(format!(
                    "{what}: certificate says {stored}, recomputed {recomputed}"
                ));
            }
        };
        if fresh.layers.len() != self.layers.len() {
            compare(
                "layer count",
                &self.layers.len().to_string(),
                &fresh.layers.len().to_string(),
            );
        }
        for (n, (stored, recomputed)) in self.layers.iter().zip(&fresh.layers).enumerate() {
            compare(&format!("b{}", n + 1), stored, recomputed);
        }
        compare("p", &self.p, &fresh.p);
        compare("q1", &self.q1, &fresh.q1);
        compare("q2", &self.q2, &fresh.q2);
        compare("q3", &self.q3, &fresh.q3);
        compare("r", &self.r, &fresh.r);
        compare(
            "antecedent",
            &self.antecedent_value,
            &fresh.antecedent_value,
        );
        compare(
            "consequent",
            &self.consequent_value,
            &fresh.consequent_value,
        );
        compare("A", &self.a_value, &fresh.a_value);
        if self.conjuncts != fresh.conjuncts {
            problems.push("conjunct values differ".into());
        }
        if self.checks != fresh.checks {
            for (stored, recomputed) in self.checks.iter().zip(&fresh.checks) {
                if stored != recomputed {
                    problems.push(format!("check {:?} differs", stored.name));
                }
            }
            if self.checks.len() != fresh.checks.len() {
                problems.push("check count differs".into());
            }
        }
        if self.verdict != fresh.verdict {
            problems.push(format!(
                "verdict: certificate says {:?}, recomputed {:?}",
                self.verdict, fresh.verdict
            ));
        }
        Ok(problems)
    }
}

/// Evaluates `A` and its parts under the assembled assignment and checks the
/// final computation: every conjunct `A₁ … C₁` is `1`, the antecedent is
/// `b₁ ≠ 0`, and the consequent is `0`.
pub fn refute_a<B: Bao + ?Sized>(
    ctx: &B,
    witness: &WitnessA<B::Elem>,
    bs: &BSequence<B::Elem>,
    assignment: &RefutingAssignment<B::Elem>,
    mut checks: Report,
) -> Result<RefutationCertificate, ConstructionError> {
    let catalog = AxiomCatalog::new();
    let values = assignment.for_axiom();
    let top = ctx.top();
    let eval = |f: &Formula| eval_in_bao(ctx, &values, f);

    let mut conjuncts = Vec::new();
    for axiom in [Axiom::A1, Axiom::A2, Axiom::B1, Axiom::B2, Axiom::C1] {
        let v = eval(catalog.get(axiom))?;
        conjuncts.push(ConjunctValue {
            name: axiom.name().to_string(),
            value: ctx.render(&v),
            is_top: v == top,
        });
    }
    for c in &conjuncts {
        checks.push(format!("{} = 1", c.name), c.is_top, c.value.clone());
    }

    let p = Formula::var("p");
    let core = Formula::var("r")
        .and(p.clone().boxed())
        .and(p.box_power(2).not());
    let core_value = eval(&core)?;
    checks.push(
        "r & []p & ~[][]p = b1",
        core_value == assignment.b1,
        ctx.render(&core_value),
    );

    let antecedent = eval(catalog.a_antecedent())?;
    let consequent = eval(catalog.a_consequent())?;
    let a_value = eval(catalog.get(Axiom::A))?;
    checks.push(
        "antecedent = b1",
        antecedent == assignment.b1,
        ctx.render(&antecedent),
    );
    checks.push(
        "b1 != 0",
        !ctx.is_zero(&assignment.b1),
        ctx.render(&assignment.b1),
    );

    // 0 = r ∧ −◇q₃ = r ∧ □−q₃ = r ∧ □(r → q₁ ∨ q₂)
    let (q1, q2, q3, r) = (
        &assignment.q1,
        &assignment.q2,
        &assignment.q3,
        &assignment.r,
    );
    let rest = ctx.meet(&ctx.meet(r, &ctx.complement(q1)), &ctx.complement(q2));
    checks.push("r & -q1 & -q2 = q3", rest == *q3, ctx.render(&rest));
    checks.push("r <= <>q3", ctx.leq(r, &ctx.diamond(q3)), "");
    let boxed = ctx.meet(r, &ctx.box_(&ctx.complement(q3)));
    checks.push("r & []-q3 = 0", ctx.is_zero(&boxed), ctx.render(&boxed));
    let r_to_q12 = ctx.join(&ctx.complement(r), &ctx.join(q1, q2));
    let inner = ctx.meet(r, &ctx.box_(&r_to_q12));
    checks.push(
        "r & [](r -> q1 | q2) = 0",
        ctx.is_zero(&inner),
        ctx.render(&inner),
    );
    checks.push(
        "consequent = 0",
        ctx.is_zero(&consequent),
        ctx.render(&consequent),
    );
    checks.push("A != 1", a_value != top, ctx.render(&a_value));

    let verdict = match checks.failures().next() {
        None => Verdict::ARefuted,
        Some(c) => Verdict::ConstructionBroken {
            step: c.name.clone(),
        },
    };
    Ok(RefutationCertificate {
        schema: 1,
        context: ctx.id(),
        a: ctx.render(&witness.a),
        depth: bs.depth(),
        layers: bs.layers.iter().map(|b| ctx.render(b)).collect(),
        p: ctx.render(&assignment.p),
        q1: ctx.render(q1),
        q2: ctx.render(q2),
        q3: ctx.render(q3),
        r: ctx.render(r),
        conjuncts,
        antecedent_value: ctx.render(&antecedent),
        consequent_value: ctx.render(&consequent),
        a_value: ctx.render(&a_value),
        checks: checks.checks,
        verdict,
    })
}

/// Runs every step from a given witness candidate: witness check, layers,
/// disjointness, coverage, joins, and the evaluation of `A`.
pub fn run_construction<B: Bao + ?Sized>(
    ctx: &B,
    a: B::Elem,
    depth: usize,
    side: SidePairs,
) -> Result<RefutationCertificate, ConstructionError> {
    let witness = WitnessA::new(ctx, a)?;
    let bs = build_b_sequence(ctx, &witness, depth)?;
    let mut checks = Report::default();
    checks.push(
        "[][]a < []a",
        witness.strict_descent(ctx),
        format!(
            "{} < {}",
            ctx.render(&witness.box2_a),
            ctx.render(&witness.box_a)
        ),
    );
    checks.checks.extend(verify_disjointness(ctx, &bs).checks);
    checks.checks.extend(verify_coverage(ctx, &bs, side).checks);
    let assignment = assemble_assignment(ctx, &witness, &bs)?;
    checks
        .checks
        .extend(assignment.checks.checks.iter().cloned());
    refute_a(ctx, &witness, &bs, &assignment, checks)
}

/// How a construction attempt in some algebra ended.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    /// No candidate refutes `F`.
    NoWitness,
    /// The construction could not be carried out; the error says where.
    Stopped {
        a: String,
        error: ConstructionError,
    },
    Completed(Box<RefutationCertificate>),
}

impl Outcome {
    pub fn summary(&self) -> String {
        match self {
            Outcome::NoWitness => "no witness for ~F".into(),
            Outcome::Stopped { a, error } => format!("a = {a}: {error}"),
            Outcome::Completed(cert) => format!("a = {}: {}", cert.a, cert.verdict),
        }
    }
}

/// Finds the first witness among `candidates` and runs the construction on it.
pub fn attempt<B, I>(ctx: &B, candidates: I, depth: usize) -> Outcome
where
    B: Bao + ?Sized,
    I: IntoIterator<Item = B::Elem>,
{
    let Some(witness) = find_f_witness(ctx, candidates) else {
        return Outcome::NoWitness;
    };
    let a = ctx.render(witness.a());
    match run_construction(ctx, witness.a, depth, SidePairs::All) {
        Ok(cert) => Outcome::Completed(Box::new(cert)),
        Err(error) => Outcome::Stopped { a, error },
    }
}

/// Cofinite sets `ω ∖ S` with `S ⊆ [0, bound)`, by size of `S` and then
/// lexicographically.
pub fn cofinite_candidates(bound: u64) -> impl Iterator<Item = crate::upset::UpSet> {
    let bound = bound.min(20);
    let mut subsets: Vec<Vec<u64>> = (0u64..1 << bound)
        .map(|mask| (0..bound).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    subsets.into_iter().map(crate::upset::UpSet::cofinite)
}
