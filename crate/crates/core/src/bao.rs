//! Boolean algebras with operators, as concrete algebras of sets.
//!
//! Every algebra here is a subalgebra of the powerset of some frame, with
//! meet, complement, zero and the diamond `m_R(X) = {w | ∃v ∈ X. w R v}` as
//! primitive operations. Joins of infinite families are only available for
//! families with a finite description ([`Family`]).

use std::collections::BTreeMap;
use std::fmt;

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::formula::Formula;
use crate::kripke::{FiniteFrame, WorldSet};

/// Default cap on `|elements|^|variables|` for exhaustive validity.
pub const DEFAULT_MAX_ASSIGNMENTS: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BaoError {
    #[error("variable {0:?} has no value")]
    Unassigned(String),
    #[error("value of {name:?} ({value}) is not an element of {context}")]
    ForeignElement {
        name: String,
        value: String,
        context: String,
    },
    #[error("{context} does not support {capability}")]
    MissingCapability {
        context: String,
        capability: &'static str,
    },
    #[error("family join unavailable: {union} has no supremum")]
    NoSupremum { union: String },
    #[error("{0}")]
    UnsupportedFamily(String),
    #[error("exhaustive check needs {needed} assignments, limit is {limit}")]
    TooManyAssignments { needed: u128, limit: u64 },
    #[error("cannot read element {text:?}: {reason}")]
    BadElement { text: String, reason: String },
}

/// A family of elements with a finite description.
#[derive(Clone, Debug, PartialEq)]
pub enum Family<E> {
    Finite(Vec<E>),
    /// `{{start + n·step} | n ≥ 0}`: singletons of an arithmetic progression in ω.
    Singletons {
        start: u64,
        step: u64,
    },
    /// `{□^m a ∖ □^(m+1) a | m = start + n·step, n ≥ 0}`.
    BoxLayers {
        a: E,
        start: u32,
        step: u32,
    },
    /// `{◇x | x ∈ family}`.
    Diamonds(Box<Family<E>>),
}

impl<E> Family<E> {
    pub fn diamonds(self) -> Family<E> {
        Family::Diamonds(Box::new(self))
    }
}

/// A concrete Boolean algebra with a normal operator.
///
/// Elements are plain values; [`Bao::contains`] says whether a value belongs
/// to this algebra, which is how values from a different algebra are caught.
pub trait Bao {
    type Elem: Clone + PartialEq + fmt::Debug;

    /// Identifies the algebra; [`crate::harness::context_from_id`] rebuilds it from this.
    fn id(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn meet(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn complement(&self, x: &Self::Elem) -> Self::Elem;
    fn diamond(&self, x: &Self::Elem) -> Self::Elem;

    fn contains(&self, x: &Self::Elem) -> bool;

    fn render(&self, x: &Self::Elem) -> String;
    fn parse_element(&self, text: &str) -> Result<Self::Elem, BaoError>;

    fn top(&self) -> Self::Elem {
        self.complement(&self.zero())
    }

    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.complement(&self.meet(&self.complement(x), &self.complement(y)))
    }

    fn box_(&self, x: &Self::Elem) -> Self::Elem {
        self.complement(&self.diamond(&self.complement(x)))
    }

    /// `x ∖ y = x ∧ −y`.
    fn difference(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.meet(x, &self.complement(y))
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.is_zero(&self.difference(x, y))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    /// `□^n x`, with `□^0 x = x`.
    fn box_power(&self, x: &Self::Elem, n: usize) -> Self::Elem {
        (0..n).fold(x.clone(), |acc, _| self.box_(&acc))
    }

    /// Every element, for finite algebras.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// The supremum of a family inside this algebra.
    fn family_join(&self, family: &Family<Self::Elem>) -> Result<Self::Elem, BaoError> {
        let _ = family;
        Err(BaoError::MissingCapability {
            context: self.id(),
            capability: "family_join",
        })
    }

    /// The set-theoretic union of a family. It need not be an element.
    fn family_union(&self, family: &Family<Self::Elem>) -> Result<Self::Elem, BaoError> {
        let _ = family;
        Err(BaoError::MissingCapability {
            context: self.id(),
            capability: "family_union",
        })
    }

    /// A random element, for algebras too large to enumerate.
    fn sample_element(&self, rng: &mut dyn RngCore) -> Option<Self::Elem> {
        let _ = rng;
        None
    }
}

pub type Assignment<E> = BTreeMap<String, E>;

/// Evaluates `f` homomorphically: `∧ ↦ meet`, `¬ ↦ complement`, `◇ ↦ diamond`,
/// `□ ↦ −◇−`, `→ ↦ −x ∨ y`, `⊥ ↦ 0`.
pub fn eval_in_bao<B: Bao + ?Sized>(
    ctx: &B,
    assignment: &Assignment<B::Elem>,
    f: &Formula,
) -> Result<B::Elem, BaoError> {
    for name in f.variables() {
        let value = assignment
            .get(&name)
            .ok_or_else(|| BaoError::Unassigned(name.clone()))?;
        if !ctx.contains(value) {
            return Err(BaoError::ForeignElement {
                value: ctx.render(value),
                name,
                context: ctx.id(),
            });
        }
    }
    Ok(eval_checked(ctx, assignment, f))
}

fn eval_checked<B: Bao + ?Sized>(
    ctx: &B,
    assignment: &Assignment<B::Elem>,
    f: &Formula,
) -> B::Elem {
    match f {
        Formula::Var(name) => assignment[name].clone(),
        Formula::Bottom => ctx.zero(),
        Formula::Not(g) => ctx.complement(&eval_checked(ctx, assignment, g)),
        Formula::And(l, r) => ctx.meet(
            &eval_checked(ctx, assignment, l),
            &eval_checked(ctx, assignment, r),
        ),
        Formula::Or(l, r) => ctx.join(
            &eval_checked(ctx, assignment, l),
            &eval_checked(ctx, assignment, r),
        ),
        Formula::Implies(l, r) => {
            let l = ctx.complement(&eval_checked(ctx, assignment, l));
            ctx.join(&l, &eval_checked(ctx, assignment, r))
        }
        Formula::Box(g) => ctx.box_(&eval_checked(ctx, assignment, g)),
        Formula::Diamond(g) => ctx.diamond(&eval_checked(ctx, assignment, g)),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum BaoVerdict<E> {
    /// Checked under every assignment.
    Valid,
    /// Sampling found nothing. This is not a validity proof.
    NoCounterexampleFound {
        samples: usize,
    },
    Counterexample {
        assignment: Assignment<E>,
    },
}

impl<E> BaoVerdict<E> {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, BaoVerdict::Counterexample { .. })
    }

    pub fn is_proof(&self) -> bool {
        matches!(self, BaoVerdict::Valid)
    }
}

/// Validity over every assignment of elements to the variables of `f`.
/// Assignments are visited with the variables in sorted order, the first one
/// most significant; the first counterexample is returned.
pub fn bao_validates_exhaustive<B: Bao + ?Sized>(
    ctx: &B,
    f: &Formula,
) -> Result<BaoVerdict<B::Elem>, BaoError> {
    bao_validates_exhaustive_bounded(ctx, f, DEFAULT_MAX_ASSIGNMENTS)
}

pub fn bao_validates_exhaustive_bounded<B: Bao + ?Sized>(
    ctx: &B,
    f: &Formula,
    limit: u64,
) -> Result<BaoVerdict<B::Elem>, BaoError> {
    let elements = ctx.elements().ok_or_else(|| BaoError::MissingCapability {
        context: ctx.id(),
        capability: "enumerate_elements",
    })?;
    let vars: Vec<String> = f.variables().into_iter().collect();
    let needed = (elements.len() as u128).saturating_pow(vars.len() as u32);
    if needed > limit as u128 {
        return Err(BaoError::TooManyAssignments { needed, limit });
    }
    let top = ctx.top();
    let mut digits = vec![0usize; vars.len()];
    loop {
        let assignment: Assignment<B::Elem> = vars
            .iter()
            .cloned()
            .zip(digits.iter().map(|&d| elements[d].clone()))
            .collect();
        if eval_in_bao(ctx, &assignment, f)? != top {
            return Ok(BaoVerdict::Counterexample { assignment });
        }
        // odometer, last variable fastest
        let mut i = vars.len();
        loop {
            if i == 0 {
                return Ok(BaoVerdict::Valid);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < elements.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Tries `samples` random assignments drawn from a generator seeded with `seed`.
pub fn bao_validates_sampled<B: Bao + ?Sized>(
    ctx: &B,
    f: &Formula,
    samples: usize,
    seed: u64,
) -> Result<BaoVerdict<B::Elem>, BaoError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = f.variables();
    let top = ctx.top();
    for _ in 0..samples {
        let mut assignment = Assignment::new();
        for name in &vars {
            let value =
                ctx.sample_element(&mut rng)
                    .ok_or_else(|| BaoError::MissingCapability {
                        context: ctx.id(),
                        capability: "sample_element",
                    })?;
            assignment.insert(name.clone(), value);
        }
        if eval_in_bao(ctx, &assignment, f)? != top {
            return Ok(BaoVerdict::Counterexample { assignment });
        }
    }
    Ok(BaoVerdict::NoCounterexampleFound { samples })
}

/// The full powerset algebra `⟨℘(W), ∩, ᶜ, ∅, m_R⟩` of a finite frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersetAlgebra {
    frame: FiniteFrame,
}

/// Largest frame whose powerset algebra will list its elements.
pub const MAX_ENUMERABLE_WORLDS: usize = 16;

impl PowersetAlgebra {
    pub fn new(frame: FiniteFrame) -> PowersetAlgebra {
        PowersetAlgebra { frame }
    }

    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    /// The distinct members of a family; every family over a finite
    /// algebra has finitely many.
    pub fn members(&self, family: &Family<WorldSet>) -> Result<Vec<WorldSet>, BaoError> {
        let mut out: Vec<WorldSet> = Vec::new();
        let push = |x: WorldSet, out: &mut Vec<WorldSet>| {
            if !out.contains(&x) {
                out.push(x);
            }
        };
        match family {
            Family::Finite(list) => list.iter().for_each(|&x| push(x, &mut out)),
            Family::Singletons { .. } => {
                return Err(BaoError::UnsupportedFamily(format!(
                    "{} has no singleton progressions over ω",
                    self.id()
                )))
            }
            Family::BoxLayers { a, start, step } => {
                // x ↦ □^step x is a function on a finite set, so the orbit of
                // □^start a repeats; the layers after that repeat too.
                let mut x = self.box_power(a, *start as usize);
                let mut seen = Vec::new();
                while !seen.contains(&x) {
                    seen.push(x);
                    push(self.difference(&x, &self.box_(&x)), &mut out);
                    x = self.box_power(&x, (*step).max(1) as usize);
                    if *step == 0 {
                        break;
                    }
                }
            }
            Family::Diamonds(inner) => {
                for x in self.members(inner)? {
                    push(self.diamond(&x), &mut out);
                }
            }
        }
        Ok(out)
    }
}

impl Bao for PowersetAlgebra {
    type Elem = WorldSet;

    fn id(&self) -> String {
        format!("powerset:{}", self.frame)
    }

    fn zero(&self) -> WorldSet {
        WorldSet::EMPTY
    }

    fn meet(&self, x: &WorldSet, y: &WorldSet) -> WorldSet {
        x.intersection(*y)
    }

    fn complement(&self, x: &WorldSet) -> WorldSet {
        x.complement_in(self.frame.size())
    }

    fn diamond(&self, x: &WorldSet) -> WorldSet {
        self.frame.diamond(*x)
    }

    fn contains(&self, x: &WorldSet) -> bool {
        x.is_subset(self.frame.worlds())
    }

    fn render(&self, x: &WorldSet) -> String {
        x.to_string()
    }

    fn parse_element(&self, text: &str) -> Result<WorldSet, BaoError> {
        let bad = |reason: String| BaoError::BadElement {
            text: text.to_string(),
            reason,
        };
        let x: WorldSet = text.parse().map_err(bad)?;
        if !self.contains(&x) {
            return Err(bad(format!(
                "not a subset of the {} worlds",
                self.frame.size()
            )));
        }
        Ok(x)
    }

    fn elements(&self) -> Option<Vec<WorldSet>> {
        let k = self.frame.size();
        (k <= MAX_ENUMERABLE_WORLDS).then(|| (0..1u64 << k).map(WorldSet).collect())
    }

    fn family_join(&self, family: &Family<WorldSet>) -> Result<WorldSet, BaoError> {
        self.family_union(family)
    }

    fn family_union(&self, family: &Family<WorldSet>) -> Result<WorldSet, BaoError> {
        Ok(self
            .members(family)?
            .into_iter()
            .fold(WorldSet::EMPTY, WorldSet::union))
    }

    fn sample_element(&self, rng: &mut dyn RngCore) -> Option<WorldSet> {
        Some(WorldSet(rng.next_u64()).intersection(self.frame.worlds()))
    }
}

/// `powerset_bao_of_frame(fr)`: the full complex algebra of a finite frame.
pub fn powerset_bao_of_frame(frame: &FiniteFrame) -> PowersetAlgebra {
    PowersetAlgebra::new(frame.clone())
}

/// Checks the Boolean-algebra laws and normality of `◇` on the given elements.
/// Returns a description of every violation found.
pub fn law_violations<B: Bao + ?Sized>(ctx: &B, elements: &[B::Elem]) -> Vec<String> {
    let mut out = Vec::new();
    let zero = ctx.zero();
    let top = ctx.top();
    let show = |x: &B::Elem| ctx.render(x);
    if ctx.diamond(&zero) != zero {
        out.push("◇0 ≠ 0".to_string());
    }
    for x in elements {
        if ctx.meet(x, &ctx.complement(x)) != zero {
            out.push(format!("x ∧ −x ≠ 0 for x = {}", show(x)));
        }
        if ctx.join(x, &ctx.complement(x)) != top {
            out.push(format!("x ∨ −x ≠ 1 for x = {}", show(x)));
        }
        if ctx.complement(&ctx.complement(x)) != *x {
            out.push(format!("−−x ≠ x for x = {}", show(x)));
        }
        for y in elements {
            if ctx.meet(x, y) != ctx.meet(y, x) {
                out.push(format!("meet not commutative on {}, {}", show(x), show(y)));
            }
            if ctx.meet(x, &ctx.join(x, y)) != *x {
                out.push(format!("absorption fails on {}, {}", show(x), show(y)));
            }
            let lhs = ctx.diamond(&ctx.join(x, y));
            let rhs = ctx.join(&ctx.diamond(x), &ctx.diamond(y));
            if lhs != rhs {
                out.push(format!("◇(x ∨ y) ≠ ◇x ∨ ◇y on {}, {}", show(x), show(y)));
            }
            if ctx.leq(x, y) && !ctx.leq(&ctx.box_(x), &ctx.box_(y)) {
                out.push(format!("□ not monotone on {}, {}", show(x), show(y)));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Fact {
    /// `⋃aₙ ≤ ⋁aₙ`.
    UnionBelowJoin,
    /// `⋃aₙ ⊆ ⋃bₙ` implies `⋁aₙ ≤ ⋁bₙ`.
    SumSup,
    /// `⋃aₙ ∩ ⋃bₙ = ∅` implies `⋁aₙ ∧ ⋁bₙ = 0`.
    Disjoint,
    /// `⋁◇aₙ ≤ ◇⋁aₙ`.
    Distr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactStatus {
    Pass,
    /// The hypothesis of the implication does not hold for this pair.
    Vacuous,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactCheck {
    pub pair: usize,
    pub fact: Fact,
    pub status: FactStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct FactsReport {
    pub checks: Vec<FactCheck>,
}

impl FactsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != FactStatus::Fail)
    }

    pub fn count(&self, fact: Fact, status: FactStatus) -> usize {
        self.checks
            .iter()
            .filter(|c| c.fact == fact && c.status == status)
            .count()
    }
}

/// Two families whose joins are compared.
pub type FamilyPair<E> = (Family<E>, Family<E>);

/// Checks the supremum facts for each pair of families `(a, b)`.
pub fn check_preliminary_facts<B: Bao + ?Sized>(
    ctx: &B,
    families: &[FamilyPair<B::Elem>],
) -> Result<FactsReport, BaoError> {
    let mut report = FactsReport::default();
    for (pair, (a, b)) in families.iter().enumerate() {
        let union_a = ctx.family_union(a)?;
        let union_b = ctx.family_union(b)?;
        let join_a = ctx.family_join(a)?;
        let join_b = ctx.family_join(b)?;
        let mut push = |fact, status, detail: String| {
            report.checks.push(FactCheck {
                pair,
                fact,
                status,
                detail,
            })
        };
        let verdict = |ok: bool| {
            if ok {
                FactStatus::Pass
            } else {
                FactStatus::Fail
            }
        };

        for (union, join) in [(&union_a, &join_a), (&union_b, &join_b)] {
            push(
                Fact::UnionBelowJoin,
                verdict(ctx.leq(union, join)),
                format!("⋃ = {}, ⋁ = {}", ctx.render(union), ctx.render(join)),
            );
        }

        if ctx.leq(&union_a, &union_b) {
            push(
                Fact::SumSup,
                verdict(ctx.leq(&join_a, &join_b)),
                format!(
                    "⋁a = {} ≤ ⋁b = {}",
                    ctx.render(&join_a),
                    ctx.render(&join_b)
                ),
            );
        } else {
            push(Fact::SumSup, FactStatus::Vacuous, "⋃a ⊄ ⋃b".into());
        }

        if ctx.is_zero(&ctx.meet(&union_a, &union_b)) {
            let meet = ctx.meet(&join_a, &join_b);
            push(
                Fact::Disjoint,
                verdict(ctx.is_zero(&meet)),
                format!("⋁a ∧ ⋁b = {}", ctx.render(&meet)),
            );
        } else {
            push(Fact::Disjoint, FactStatus::Vacuous, "⋃a ∩ ⋃b ≠ ∅".into());
        }

        for family in [a, b] {
            let join = ctx.family_join(family)?;
            let joined_diamonds = ctx.family_join(&family.clone().diamonds())?;
            let diamond_of_join = ctx.diamond(&join);
            push(
                Fact::Distr,
                verdict(ctx.leq(&joined_diamonds, &diamond_of_join)),
                format!(
                    "⋁◇ = {} ≤ ◇⋁ = {}",
                    ctx.render(&joined_diamonds),
                    ctx.render(&diamond_of_join)
                ),
            );
        }
    }
    Ok(report)
}
