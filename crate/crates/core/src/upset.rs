//! Ultimately periodic subsets of ω and the recession frame.
//!
//! An [`UpSet`] is a finite prefix followed by a period repeated forever:
//! `n ∈ S` iff `n < ℓ` and `prefix[n]`, or `n ≥ ℓ` and `period[(n − ℓ) mod π]`.
//! Values are always kept in canonical form (shortest period, then shortest
//! prefix), so structural equality is set equality.
//!
//! The recession frame is `⟨ω, R⟩` with `w R v` iff `v ≥ w − 1`. Its full
//! powerset algebra is complete; the subalgebra of finite and cofinite sets
//! (the *veiled* algebra) is closed under the operations but lacks the
//! suprema that the witness construction in [`crate::construction`] needs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bao::{Bao, BaoError, Family};

/// Default cap on the aligned period of a binary operation.
pub const DEFAULT_PERIOD_CAP: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum UpSetError {
    #[error("period must be non-empty")]
    EmptyPeriod,
    #[error("aligned period {needed} exceeds the cap of {cap}")]
    PeriodOverflow { needed: usize, cap: usize },
    #[error("progression step must be at least 1")]
    ZeroStep,
    #[error("cannot read set {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// An ultimately periodic subset of ω in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct UpSet {
    prefix: Vec<bool>,
    period: Vec<bool>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl UpSet {
    /// Builds the canonical form of the set described by `prefix` and `period`.
    pub fn normalize(mut prefix: Vec<bool>, period: Vec<bool>) -> Result<UpSet, UpSetError> {
        if period.is_empty() {
            return Err(UpSetError::EmptyPeriod);
        }
        // The least period of period^ω divides |period|.
        let len = period.len();
        let least = (1..=len)
            .filter(|&d| len.is_multiple_of(d))
            .find(|&d| (0..len).all(|i| period[i] == period[i % d]))
            .unwrap_or(len);
        let mut period = period[..least].to_vec();
        while prefix
            .last()
            .is_some_and(|&b| b == period[period.len() - 1])
        {
            prefix.pop();
            period.rotate_right(1);
        }
        Ok(UpSet { prefix, period })
    }

    pub fn empty() -> UpSet {
        UpSet {
            prefix: Vec::new(),
            period: vec![false],
        }
    }

    /// ω itself.
    pub fn omega() -> UpSet {
        UpSet {
            prefix: Vec::new(),
            period: vec![true],
        }
    }

    pub fn finite<I: IntoIterator<Item = u64>>(elements: I) -> UpSet {
        let elements: Vec<u64> = elements.into_iter().collect();
        let len = elements.iter().max().map_or(0, |&m| m as usize + 1);
        let mut prefix = vec![false; len];
        for e in elements {
            prefix[e as usize] = true;
        }
        UpSet::normalize(prefix, vec![false]).expect("non-empty period")
    }

    /// `ω ∖ missing`.
    pub fn cofinite<I: IntoIterator<Item = u64>>(missing: I) -> UpSet {
        UpSet::finite(missing).complement()
    }

    /// `{n | n ≥ start}`.
    pub fn from(start: u64) -> UpSet {
        UpSet::normalize(vec![false; start as usize], vec![true]).expect("non-empty period")
    }

    /// The interval `[lo, hi]`; empty when `lo > hi`.
    pub fn interval(lo: u64, hi: u64) -> UpSet {
        UpSet::finite(lo..=hi)
    }

    /// `{start + n·step | n ≥ 0}`.
    pub fn progression(start: u64, step: u64) -> Result<UpSet, UpSetError> {
        if step == 0 {
            return Err(UpSetError::ZeroStep);
        }
        let mut period = vec![false; step as usize];
        period[0] = true;
        UpSet::normalize(vec![false; start as usize], period)
    }

    pub fn prefix(&self) -> &[bool] {
        &self.prefix
    }

    pub fn period(&self) -> &[bool] {
        &self.period
    }

    pub fn contains(&self, n: u64) -> bool {
        let n = n as usize;
        if n < self.prefix.len() {
            self.prefix[n]
        } else {
            self.period[(n - self.prefix.len()) % self.period.len()]
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == UpSet::empty()
    }

    pub fn is_omega(&self) -> bool {
        *self == UpSet::omega()
    }

    pub fn is_finite(&self) -> bool {
        self.period == [false]
    }

    pub fn is_cofinite(&self) -> bool {
        self.period == [true]
    }

    /// Largest element of a finite, non-empty set.
    pub fn greatest(&self) -> Option<u64> {
        if self.is_finite() && !self.prefix.is_empty() {
            Some(self.prefix.len() as u64 - 1)
        } else {
            None
        }
    }

    /// Largest non-element of a cofinite set other than ω.
    pub fn largest_missing(&self) -> Option<u64> {
        if self.is_cofinite() && !self.prefix.is_empty() {
            Some(self.prefix.len() as u64 - 1)
        } else {
            None
        }
    }

    /// Least element, if any.
    pub fn least(&self) -> Option<u64> {
        let span = (self.prefix.len() + self.period.len()) as u64;
        (0..span).find(|&n| self.contains(n))
    }

    /// Elements below `bound`, ascending.
    pub fn elements_below(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..bound).filter(move |&n| self.contains(n))
    }

    /// Applies a pointwise Boolean operation, aligning both sets to a common
    /// prefix length and period.
    pub fn checked_combine(
        &self,
        other: &UpSet,
        cap: usize,
        op: impl Fn(bool, bool) -> bool,
    ) -> Result<UpSet, UpSetError> {
        let (px, py) = (self.period.len(), other.period.len());
        let period_len = px / gcd(px, py) * py;
        if period_len > cap {
            return Err(UpSetError::PeriodOverflow {
                needed: period_len,
                cap,
            });
        }
        let prefix_len = self.prefix.len().max(other.prefix.len());
        let at = |n: usize| op(self.contains(n as u64), other.contains(n as u64));
        let prefix = (0..prefix_len).map(at).collect();
        let period = (prefix_len..prefix_len + period_len).map(at).collect();
        UpSet::normalize(prefix, period)
    }

    fn combine(&self, other: &UpSet, op: impl Fn(bool, bool) -> bool) -> UpSet {
        match self.checked_combine(other, DEFAULT_PERIOD_CAP, op) {
            Ok(set) => set,
            Err(e) => panic!("ultimately periodic set operation failed: {e}"),
        }
    }

    /// # Panics
    ///
    /// If the aligned period exceeds [`DEFAULT_PERIOD_CAP`]; use
    /// [`UpSet::checked_combine`] to handle that case.
    pub fn union(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a || b)
    }

    /// Panics like [`UpSet::union`].
    pub fn intersection(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a && b)
    }

    /// Panics like [`UpSet::union`].
    pub fn difference(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> UpSet {
        UpSet {
            prefix: self.prefix.iter().map(|b| !b).collect(),
            period: self.period.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_subset(&self, other: &UpSet) -> bool {
        self.difference(other).is_empty()
    }

    /// `m_R(X)` for the recession relation: `w` has a successor in `X` iff
    /// `X` meets `[w − 1, ∞)`.
    pub fn dia_recession(&self) -> UpSet {
        if self.is_empty() {
            UpSet::empty()
        } else if let Some(max) = self.greatest() {
            UpSet::interval(0, max + 1)
        } else {
            UpSet::omega()
        }
    }

    /// The dual of [`UpSet::dia_recession`]: `w` is in the box iff
    /// `[w − 1, ∞) ⊆ X`.
    pub fn box_recession(&self) -> UpSet {
        if self.is_omega() {
            UpSet::omega()
        } else if let Some(missing) = self.largest_missing() {
            UpSet::from(missing + 2)
        } else {
            UpSet::empty()
        }
    }

    /// Finite or cofinite: the sets the veiled algebra admits.
    pub fn veiled_admissible(&self) -> bool {
        self.is_finite() || self.is_cofinite()
    }

    /// `prefix;period` as bit strings, e.g. `00;100` for `{2, 5, 8, …}`.
    pub fn to_bits(&self) -> String {
        let bits = |v: &[bool]| {
            v.iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect::<String>()
        };
        format!("{};{}", bits(&self.prefix), bits(&self.period))
    }

    /// The step and first element when the set is `{s, s + d, s + 2d, …}` with `d ≥ 2`.
    fn as_progression(&self) -> Option<(u64, u64)> {
        let ones = self.period.iter().filter(|&&b| b).count();
        if self.period.len() < 2 || ones != 1 || self.prefix.iter().any(|&b| b) {
            return None;
        }
        let offset = self.period.iter().position(|&b| b)?;
        Some((
            (self.prefix.len() + offset) as u64,
            self.period.len() as u64,
        ))
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = u64>) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

/// Human-readable rendering: `∅`, `ω`, `{1,3}`, `[0,6]`, `{n ≥ 2}`, `ω∖{0,3}`,
/// `{2,5,8,…}`, falling back to the bit form for other infinite, co-infinite
/// sets. Every rendering parses back with [`FromStr`].
impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        if self.is_omega() {
            return f.write_str("ω");
        }
        if let Some(max) = self.greatest() {
            let lo = self.least().expect("non-empty");
            let count = self.elements_below(max + 1).count() as u64;
            if count >= 2 && count == max - lo + 1 {
                return write!(f, "[{lo},{max}]");
            }
            return write_list(f, self.elements_below(max + 1));
        }
        if let Some(missing) = self.largest_missing() {
            let complement = self.complement();
            if complement.elements_below(missing + 1).count() as u64 == missing + 1 {
                return write!(f, "{{n ≥ {}}}", missing + 1);
            }
            f.write_str("ω∖")?;
            return write_list(f, complement.elements_below(missing + 1));
        }
        if let Some((start, step)) = self.as_progression() {
            return write!(f, "{{{},{},{},…}}", start, start + step, start + 2 * step);
        }
        f.write_str(&self.to_bits())
    }
}

impl fmt::Debug for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UpSet({} = {})", self.to_bits(), self)
    }
}

fn parse_bits(s: &str) -> Option<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}

fn parse_list(inner: &str) -> Result<Vec<u64>, String> {
    inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| format!("{s:?} is not a natural number"))
        })
        .collect()
}

/// Accepts the bit form `prefix;period` and every form [`fmt::Display`]
/// produces, plus ASCII spellings (`{}`, `w`, `omega`, `{n >= 2}`, `w\{0}`,
/// `{2,5,8,...}`). A trailing ellipsis requires an arithmetic progression.
impl FromStr for UpSet {
    type Err = UpSetError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| UpSetError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some((prefix, period)) = s.split_once(';') {
            let prefix = parse_bits(prefix).ok_or_else(|| err("bit strings use only 0 and 1"))?;
            let period = parse_bits(period).ok_or_else(|| err("bit strings use only 0 and 1"))?;
            return UpSet::normalize(prefix, period).map_err(|e| err(&e.to_string()));
        }
        match s.as_str() {
            "∅" | "{}" => return Ok(UpSet::empty()),
            "ω" | "w" | "omega" => return Ok(UpSet::omega()),
            _ => {}
        }
        for complement_prefix in ["ω∖", "ω\\", "w\\", "omega\\"] {
            if let Some(rest) = s.strip_prefix(complement_prefix) {
                return Ok(rest.parse::<UpSet>()?.complement());
            }
        }
        for ge in ["{n≥", "{n>="] {
            if let Some(rest) = s.strip_prefix(ge) {
                let n = rest
                    .strip_suffix('}')
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| err("expected {n ≥ k}"))?;
                return Ok(UpSet::from(n));
            }
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let bounds = parse_list(inner).map_err(|r| err(&r))?;
            return match bounds[..] {
                [lo, hi] => Ok(UpSet::interval(lo, hi)),
                _ => Err(err("intervals look like [a,b]")),
            };
        }
        if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let open = ["…", "..."].iter().find_map(|e| inner.strip_suffix(e));
            if let Some(listed) = open {
                let xs = parse_list(listed).map_err(|r| err(&r))?;
                if xs.len() < 2 || xs.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(err("an open list needs at least two increasing elements"));
                }
                let step = xs[1] - xs[0];
                if xs.windows(2).any(|w| w[1] - w[0] != step) {
                    return Err(err("an open list must be an arithmetic progression"));
                }
                return UpSet::progression(xs[0], step).map_err(|e| err(&e.to_string()));
            }
            return Ok(UpSet::finite(parse_list(inner).map_err(|r| err(&r))?));
        }
        Err(err("unrecognized set notation"))
    }
}

impl TryFrom<String> for UpSet {
    type Error = UpSetError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<UpSet> for String {
    fn from(set: UpSet) -> String {
        set.to_bits()
    }
}

/// `{{start + n·step} | n ≥ 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineSingletonFamily {
    pub start: u64,
    pub step: u64,
}

impl AffineSingletonFamily {
    pub fn union(&self) -> Result<UpSet, UpSetError> {
        UpSet::progression(self.start, self.step)
    }
}

/// Outcome of [`supremum_in_veiled`].
#[derive(Clone, Debug, PartialEq)]
pub enum VeiledSupremum {
    Exists(UpSet),
    Absent(NoSupremum),
}

/// Evidence that a family has no least upper bound among the finite and
/// cofinite sets: every admissible upper bound can be shrunk.
#[derive(Clone, Debug, PartialEq)]
pub struct NoSupremum {
    union: UpSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum JustificationError {
    #[error("{0} is not admissible in the veiled algebra")]
    NotAdmissible(UpSet),
    #[error("{0} is not an upper bound of the family")]
    NotAnUpperBound(UpSet),
    #[error(
        "shrinking {bound} gave {shrunk}, which is not a strictly smaller admissible upper bound"
    )]
    Broken { bound: UpSet, shrunk: UpSet },
}

impl NoSupremum {
    /// The union of the family, which is neither finite nor cofinite.
    pub fn union(&self) -> &UpSet {
        &self.union
    }

    /// Maps an admissible upper bound to a strictly smaller one by removing
    /// its least element outside the union.
    pub fn shrink(&self, bound: &UpSet) -> Result<UpSet, JustificationError> {
        if !bound.veiled_admissible() {
            return Err(JustificationError::NotAdmissible(bound.clone()));
        }
        if !self.union.is_subset(bound) {
            return Err(JustificationError::NotAnUpperBound(bound.clone()));
        }
        // bound is cofinite (a finite set cannot contain the infinite union)
        // and the union is co-infinite, so bound ∖ union is non-empty.
        let gap = bound
            .difference(&self.union)
            .least()
            .expect("a cofinite set minus a co-infinite set is non-empty");
        Ok(bound.difference(&UpSet::finite([gap])))
    }

    /// Shrinks `bound` and confirms the result is admissible, still an upper
    /// bound, and strictly below `bound`.
    pub fn verify(&self, bound: &UpSet) -> Result<UpSet, JustificationError> {
        let shrunk = self.shrink(bound)?;
        let ok = shrunk.veiled_admissible()
            && self.union.is_subset(&shrunk)
            && shrunk.is_subset(bound)
            && shrunk != *bound;
        if ok {
            Ok(shrunk)
        } else {
            Err(JustificationError::Broken {
                bound: bound.clone(),
                shrunk,
            })
        }
    }

    /// `count` distinct admissible upper bounds: ω with the first `i` points
    /// outside the union removed, for `i = 0..count`.
    pub fn candidate_bounds(&self, count: usize) -> Vec<UpSet> {
        let gaps: Vec<u64> = self
            .union
            .complement()
            .elements_below(u64::MAX)
            .take(count)
            .collect();
        (0..count)
            .map(|i| UpSet::cofinite(gaps[..i].iter().copied()))
            .collect()
    }
}

/// Decides whether `{{start + n·step}}` has a supremum among the finite and
/// cofinite subsets of ω.
pub fn supremum_in_veiled(family: AffineSingletonFamily) -> Result<VeiledSupremum, UpSetError> {
    let union = family.union()?;
    if union.veiled_admissible() {
        Ok(VeiledSupremum::Exists(union))
    } else {
        Ok(VeiledSupremum::Absent(NoSupremum { union }))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// Every ultimately periodic set; joins of describable families exist.
    Full,
    /// Finite and cofinite sets only.
    Veiled,
}

/// The recession frame's algebra, restricted to ultimately periodic sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecessionAlgebra {
    flavor: Flavor,
    /// Sampling bounds: prefix length and period length.
    max_prefix: usize,
    max_period: usize,
}

pub fn recession_algebra(flavor: Flavor) -> RecessionAlgebra {
    RecessionAlgebra::new(flavor)
}

impl RecessionAlgebra {
    pub fn new(flavor: Flavor) -> RecessionAlgebra {
        RecessionAlgebra {
            flavor,
            max_prefix: 12,
            max_period: 6,
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Accepts `x` if it belongs to this algebra.
    pub fn element(&self, x: UpSet) -> Result<UpSet, BaoError> {
        if self.contains(&x) {
            Ok(x)
        } else {
            Err(BaoError::ForeignElement {
                name: "element".into(),
                value: x.to_string(),
                context: self.id(),
            })
        }
    }

    /// Rewrites box layers of `a` as the singletons they are:
    /// for `a = ω ∖ S` with `max S = g`, `□^m a = {n ≥ g + 1 + m}` when `m ≥ 1`,
    /// so the m-th layer is `{g + 1 + m}`. For other `a` every layer with
    /// `m ≥ 1` is empty. Returns `None` for an empty family.
    fn layers_as_singletons(&self, a: &UpSet, start: u32, step: u32) -> Option<(u64, u64)> {
        debug_assert!(start >= 1);
        let missing = a.largest_missing()?;
        Some((missing + 1 + start as u64, step as u64))
    }

    fn union_of(&self, family: &Family<UpSet>) -> Result<UpSet, BaoError> {
        match family {
            Family::Finite(list) => Ok(list.iter().fold(UpSet::empty(), |acc, x| acc.union(x))),
            Family::Singletons { start, step } => UpSet::progression(*start, *step)
                .map_err(|e| BaoError::UnsupportedFamily(e.to_string())),
            Family::BoxLayers { a, start, step } => {
                if *step == 0 {
                    let layer = self.difference(
                        &self.box_power(a, *start as usize),
                        &self.box_power(a, *start as usize + 1),
                    );
                    return Ok(layer);
                }
                if *start == 0 {
                    let first = a.difference(&a.box_recession());
                    let rest = self.union_of(&Family::BoxLayers {
                        a: a.clone(),
                        start: *step,
                        step: *step,
                    })?;
                    return Ok(first.union(&rest));
                }
                match self.layers_as_singletons(a, *start, *step) {
                    Some((s, d)) => self.union_of(&Family::Singletons { start: s, step: d }),
                    None => Ok(UpSet::empty()),
                }
            }
            Family::Diamonds(inner) => match inner.as_ref() {
                Family::Finite(list) => Ok(list
                    .iter()
                    .fold(UpSet::empty(), |acc, x| acc.union(&x.dia_recession()))),
                // Infinitely many nonempty members with unbounded elements:
                // their diamonds are initial segments that exhaust ω.
                other => {
                    if self.union_of(other)?.is_empty() {
                        Ok(UpSet::empty())
                    } else if self.has_infinitely_many_nonempty(other) {
                        Ok(UpSet::omega())
                    } else {
                        Err(BaoError::UnsupportedFamily(
                            "diamonds of this family are not supported".into(),
                        ))
                    }
                }
            },
        }
    }

    fn has_infinitely_many_nonempty(&self, family: &Family<UpSet>) -> bool {
        match family {
            Family::Finite(_) => false,
            Family::Singletons { step, .. } => *step > 0,
            Family::BoxLayers { a, step, .. } => *step > 0 && a.largest_missing().is_some(),
            Family::Diamonds(inner) => self.has_infinitely_many_nonempty(inner),
        }
    }
}

impl Bao for RecessionAlgebra {
    type Elem = UpSet;

    fn id(&self) -> String {
        match self.flavor {
            Flavor::Full => "recession:full".into(),
            Flavor::Veiled => "recession:veiled".into(),
        }
    }

    fn zero(&self) -> UpSet {
        UpSet::empty()
    }

    fn meet(&self, x: &UpSet, y: &UpSet) -> UpSet {
        x.intersection(y)
    }

    fn complement(&self, x: &UpSet) -> UpSet {
        x.complement()
    }

    fn diamond(&self, x: &UpSet) -> UpSet {
        x.dia_recession()
    }

    fn box_(&self, x: &UpSet) -> UpSet {
        x.box_recession()
    }

    fn join(&self, x: &UpSet, y: &UpSet) -> UpSet {
        x.union(y)
    }

    fn contains(&self, x: &UpSet) -> bool {
        match self.flavor {
            Flavor::Full => true,
            Flavor::Veiled => x.veiled_admissible(),
        }
    }

    fn render(&self, x: &UpSet) -> String {
        x.to_bits()
    }

    fn parse_element(&self, text: &str) -> Result<UpSet, BaoError> {
        let x: UpSet = text.parse().map_err(|e: UpSetError| BaoError::BadElement {
            text: text.to_string(),
            reason: e.to_string(),
        })?;
        if !self.contains(&x) {
            return Err(BaoError::BadElement {
                text: text.to_string(),
                reason: "neither finite nor cofinite".into(),
            });
        }
        Ok(x)
    }

    fn family_union(&self, family: &Family<UpSet>) -> Result<UpSet, BaoError> {
        self.union_of(family)
    }

    fn family_join(&self, family: &Family<UpSet>) -> Result<UpSet, BaoError> {
        let union = self.union_of(family)?;
        match self.flavor {
            Flavor::Full => Ok(union),
            Flavor::Veiled if union.veiled_admissible() => Ok(union),
            Flavor::Veiled => Err(BaoError::NoSupremum {
                union: union.to_string(),
            }),
        }
    }

    fn sample_element(&self, rng: &mut dyn RngCore) -> Option<UpSet> {
        let prefix: Vec<bool> = (0..rng.gen_range(0..=self.max_prefix))
            .map(|_| rng.gen())
            .collect();
        let period: Vec<bool> = match self.flavor {
            Flavor::Full => (0..rng.gen_range(1..=self.max_period))
                .map(|_| rng.gen())
                .collect(),
            Flavor::Veiled => vec![rng.gen()],
        };
        Some(UpSet::normalize(prefix, period).expect("non-empty period"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> UpSet {
        let (prefix, period) = s.split_once(';').unwrap();
        UpSet::normalize(parse_bits(prefix).unwrap(), parse_bits(period).unwrap()).unwrap()
    }

    /// Membership on `[0, n)` straight from a raw (non-canonical) description.
    fn raw_members(prefix: &str, period: &str, n: usize) -> Vec<bool> {
        let p = parse_bits(prefix).unwrap();
        let q = parse_bits(period).unwrap();
        (0..n)
            .map(|i| {
                if i < p.len() {
                    p[i]
                } else {
                    q[(i - p.len()) % q.len()]
                }
            })
            .collect()
    }

    fn members(x: &UpSet, n: usize) -> Vec<bool> {
        (0..n as u64).map(|i| x.contains(i)).collect()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(bits(";11").to_bits(), ";1");
        assert_eq!(bits(";11"), UpSet::omega());
        assert_eq!(bits("01;0"), UpSet::finite([1]));
        assert_eq!(bits("01;0").to_bits(), "01;0");
        let x = bits("0;100100");
        assert_eq!(x.period().len(), 3);
        assert_eq!(members(&x, 64), raw_members("0", "100100", 64));
        // the leading 0 is absorbed by rotating the period: {1, 4, 7, …}
        assert_eq!(x.to_bits(), ";010");
        assert_eq!(
            UpSet::normalize(vec![], vec![]),
            Err(UpSetError::EmptyPeriod)
        );
    }

    #[test]
    fn boolean_examples() {
        assert_eq!(UpSet::empty().complement(), UpSet::omega());
        let a = UpSet::progression(2, 3).unwrap();
        let b = UpSet::progression(3, 3).unwrap();
        let u = a.union(&b);
        assert_eq!(u.period().len(), 3);
        for n in 0..64 {
            assert_eq!(u.contains(n), n >= 2 && n % 3 != 1, "{n}");
        }
        assert_eq!(
            UpSet::from(1).difference(&UpSet::from(2)),
            UpSet::finite([1])
        );
    }

    #[test]
    fn recession_modalities() {
        assert_eq!(UpSet::empty().dia_recession(), UpSet::empty());
        assert_eq!(UpSet::finite([5]).dia_recession(), UpSet::interval(0, 6));
        assert_eq!(
            UpSet::progression(0, 2).unwrap().dia_recession(),
            UpSet::omega()
        );
        assert_eq!(UpSet::cofinite([0]).box_recession(), UpSet::from(2));
        assert_eq!(
            UpSet::progression(0, 2).unwrap().box_recession(),
            UpSet::empty()
        );
        assert_eq!(UpSet::omega().box_recession(), UpSet::omega());
    }

    #[test]
    fn admissibility() {
        assert!(!UpSet::progression(2, 3).unwrap().veiled_admissible());
        assert!(UpSet::cofinite([0]).veiled_admissible());
        assert!(UpSet::empty().veiled_admissible());
    }

    #[test]
    fn suprema_in_the_veiled_algebra() {
        let fam = |start, step| AffineSingletonFamily { start, step };
        match supremum_in_veiled(fam(2, 3)).unwrap() {
            VeiledSupremum::Absent(why) => {
                let candidates = why.candidate_bounds(20);
                assert_eq!(candidates.len(), 20);
                for c in &candidates {
                    why.verify(c).unwrap();
                }
                assert!(matches!(
                    why.shrink(&UpSet::from(3)),
                    Err(JustificationError::NotAnUpperBound(_))
                ));
                assert!(matches!(
                    why.shrink(&UpSet::progression(2, 3).unwrap()),
                    Err(JustificationError::NotAdmissible(_))
                ));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            supremum_in_veiled(fam(0, 1)).unwrap(),
            VeiledSupremum::Exists(UpSet::omega())
        );
        assert_eq!(
            supremum_in_veiled(fam(5, 1)).unwrap(),
            VeiledSupremum::Exists(UpSet::from(5))
        );
        assert_eq!(supremum_in_veiled(fam(5, 0)), Err(UpSetError::ZeroStep));
    }

    #[test]
    fn candidate_bounds_are_distinct() {
        let VeiledSupremum::Absent(why) =
            supremum_in_veiled(AffineSingletonFamily { start: 3, step: 3 }).unwrap()
        else {
            panic!("expected no supremum")
        };
        let mut seen = why.candidate_bounds(25);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 25);
    }

    #[test]
    fn recession_algebra_contexts() {
        let full = recession_algebra(Flavor::Full);
        let join = full
            .family_join(&Family::Singletons { start: 2, step: 3 })
            .unwrap();
        assert_eq!(join, UpSet::progression(2, 3).unwrap());

        let veiled = recession_algebra(Flavor::Veiled);
        assert!(veiled.element(UpSet::cofinite([0])).is_ok());
        assert!(veiled.element(UpSet::progression(0, 2).unwrap()).is_err());
        let err = veiled
            .family_join(&Family::Singletons { start: 2, step: 3 })
            .unwrap_err();
        assert_eq!(
            err.to_string(),
            "family join unavailable: {2,5,8,…} has no supremum"
        );
    }

    #[test]
    fn box_layer_joins_match_iterated_boxes() {
        let full = recession_algebra(Flavor::Full);
        for a in [
            UpSet::cofinite([0]),
            UpSet::cofinite([1, 4]),
            UpSet::omega(),
            UpSet::finite([3]),
            UpSet::from(2),
        ] {
            for (start, step) in [(1, 1), (1, 3), (2, 3), (3, 3), (0, 2), (4, 5)] {
                let closed = full
                    .family_join(&Family::BoxLayers {
                        a: a.clone(),
                        start,
                        step,
                    })
                    .unwrap();
                // layers up to m = 60 by iterating the box, compared on [0, 40)
                let mut brute = UpSet::empty();
                let mut m = start as usize;
                while m <= 60 {
                    let layer = full.box_power(&a, m).difference(&full.box_power(&a, m + 1));
                    brute = brute.union(&layer);
                    m += step as usize;
                }
                assert_eq!(
                    members(&closed, 40),
                    members(&brute, 40),
                    "a = {a}, start {start}, step {step}"
                );
            }
        }
    }

    #[test]
    fn rendering_round_trips() {
        let cases = [
            (UpSet::empty(), "∅"),
            (UpSet::omega(), "ω"),
            (UpSet::finite([1, 3]), "{1,3}"),
            (UpSet::finite([2]), "{2}"),
            (UpSet::interval(0, 6), "[0,6]"),
            (UpSet::from(2), "{n ≥ 2}"),
            (UpSet::cofinite([0]), "{n ≥ 1}"),
            (UpSet::cofinite([0, 3]), "ω∖{0,3}"),
            (UpSet::progression(2, 3).unwrap(), "{2,5,8,…}"),
            (bits(";110"), ";110"),
        ];
        for (set, text) in cases {
            assert_eq!(set.to_string(), text);
            assert_eq!(text.parse::<UpSet>().unwrap(), set, "{text}");
        }
        assert_eq!(
            "00;100".parse::<UpSet>().unwrap(),
            UpSet::progression(2, 3).unwrap()
        );
        assert_eq!("{n >= 4}".parse::<UpSet>().unwrap(), UpSet::from(4));
        assert_eq!("w\\{0}".parse::<UpSet>().unwrap(), UpSet::cofinite([0]));
        assert_eq!(
            "{0, 2, 4, ...}".parse::<UpSet>().unwrap(),
            UpSet::progression(0, 2).unwrap()
        );
        assert!("{0,1,3,...}".parse::<UpSet>().is_err());
        assert!("0;".parse::<UpSet>().is_err());
        assert!("banana".parse::<UpSet>().is_err());
    }

    #[test]
    fn period_cap_is_enforced() {
        let a = UpSet::progression(0, 7).unwrap();
        let b = UpSet::progression(0, 11).unwrap();
        assert_eq!(
            a.checked_combine(&b, 50, |x, y| x || y),
            Err(UpSetError::PeriodOverflow {
                needed: 77,
                cap: 50
            })
        );
        assert!(a.checked_combine(&b, 77, |x, y| x || y).is_ok());
    }

    #[test]
    fn veiled_samples_are_admissible() {
        use rand::SeedableRng;
        let veiled = recession_algebra(Flavor::Veiled);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert!(veiled.sample_element(&mut rng).unwrap().veiled_admissible());
        }
    }
}
