//! Finite Kripke frames and model checking.
//!
//! Worlds are `0..k` and sets of worlds are `u64` bitmasks, so frames have at
//! most 64 worlds. The exhaustive procedures (validity over all valuations,
//! enumeration of all relations) are only practical far below that.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::Formula;

pub const MAX_WORLDS: usize = 64;

/// Default cap on `variables × worlds` for exhaustive validity checks.
pub const DEFAULT_MAX_VALUATION_BITS: usize = 24;

/// Default cap on the world count for [`enumerate_frames`].
pub const DEFAULT_MAX_ENUMERATION_WORLDS: usize = 3;

/// Beyond this, 2^(k²) relations do not fit the enumeration index.
pub const HARD_MAX_ENUMERATION_WORLDS: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KripkeError {
    #[error("frame size must be between 1 and {MAX_WORLDS}, got {0}")]
    BadSize(usize),
    #[error("world {world} out of range for a frame of size {size}")]
    WorldOutOfRange { world: usize, size: usize },
    #[error("variable {0:?} has no value")]
    Unassigned(String),
    #[error("value of {name:?} mentions worlds outside a frame of size {size}")]
    ValueOutOfRange { name: String, size: usize },
    #[error("exhaustive check needs {needed} valuation bits, limit is {limit}")]
    TooManyValuations { needed: usize, limit: usize },
    #[error("enumerating frames on {k} worlds exceeds the limit of {limit}")]
    EnumerationBound { k: usize, limit: usize },
    #[error("bad frame spec {spec:?}: {reason}")]
    BadFrameSpec { spec: String, reason: String },
}

/// A set of worlds, bit `w` set iff world `w` is a member.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct WorldSet(pub u64);

impl WorldSet {
    pub const EMPTY: WorldSet = WorldSet(0);

    pub fn full(size: usize) -> WorldSet {
        WorldSet(full_mask(size))
    }

    pub fn singleton(world: usize) -> WorldSet {
        WorldSet(1 << world)
    }

    pub fn from_worlds<I: IntoIterator<Item = usize>>(worlds: I) -> WorldSet {
        WorldSet(worlds.into_iter().fold(0, |acc, w| acc | (1 << w)))
    }

    pub fn contains(self, world: usize) -> bool {
        world < 64 && self.0 >> world & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: WorldSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: WorldSet) -> WorldSet {
        WorldSet(self.0 | other.0)
    }

    pub fn intersection(self, other: WorldSet) -> WorldSet {
        WorldSet(self.0 & other.0)
    }

    pub fn complement_in(self, size: usize) -> WorldSet {
        WorldSet(!self.0 & full_mask(size))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&w| self.contains(w))
    }
}

impl fmt::Display for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for WorldSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| format!("expected a set like {{0,2}}, got {s:?}"))?;
        let mut set = WorldSet::EMPTY;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let w: usize = part.parse().map_err(|_| format!("bad world {part:?}"))?;
            if w >= MAX_WORLDS {
                return Err(format!("world {w} exceeds {}", MAX_WORLDS - 1));
            }
            set = set.union(WorldSet::singleton(w));
        }
        Ok(set)
    }
}

fn full_mask(size: usize) -> u64 {
    if size >= 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

/// A Kripke frame on worlds `0..size`; `successors[w]` holds the worlds `v`
/// with `w R v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteFrame {
    size: usize,
    successors: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameProperties {
    pub reflexive: bool,
    pub transitive: bool,
}

impl FiniteFrame {
    /// A frame with the empty relation.
    pub fn new(size: usize) -> Result<FiniteFrame, KripkeError> {
        if size == 0 || size > MAX_WORLDS {
            return Err(KripkeError::BadSize(size));
        }
        Ok(FiniteFrame {
            size,
            successors: vec![0; size],
        })
    }

    pub fn from_edges<I>(size: usize, edges: I) -> Result<FiniteFrame, KripkeError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut frame = FiniteFrame::new(size)?;
        for (w, v) in edges {
            frame.add_edge(w, v)?;
        }
        Ok(frame)
    }

    /// Builds a frame from a boolean matrix, `matrix[w][v]` iff `w R v`.
    pub fn from_matrix(matrix: &[Vec<bool>]) -> Result<FiniteFrame, KripkeError> {
        let size = matrix.len();
        let mut frame = FiniteFrame::new(size)?;
        for (w, row) in matrix.iter().enumerate() {
            if row.len() != size {
                return Err(KripkeError::BadFrameSpec {
                    spec: format!("{size}x{} matrix", row.len()),
                    reason: "relation matrix must be square".into(),
                });
            }
            for (v, &related) in row.iter().enumerate() {
                if related {
                    frame.successors[w] |= 1 << v;
                }
            }
        }
        Ok(frame)
    }

    /// The frame whose relation is encoded by `index`: bit `w·k + v` set iff `w R v`.
    pub fn from_relation_index(size: usize, index: u64) -> Result<FiniteFrame, KripkeError> {
        let mut frame = FiniteFrame::new(size)?;
        let row_mask = full_mask(size);
        for w in 0..size {
            frame.successors[w] = (index >> (w * size)) & row_mask;
        }
        Ok(frame)
    }

    pub fn add_edge(&mut self, w: usize, v: usize) -> Result<(), KripkeError> {
        for x in [w, v] {
            if x >= self.size {
                return Err(KripkeError::WorldOutOfRange {
                    world: x,
                    size: self.size,
                });
            }
        }
        self.successors[w] |= 1 << v;
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn worlds(&self) -> WorldSet {
        WorldSet::full(self.size)
    }

    pub fn related(&self, w: usize, v: usize) -> bool {
        w < self.size && self.successors[w] >> v & 1 == 1
    }

    pub fn successors(&self, w: usize) -> WorldSet {
        WorldSet(self.successors[w])
    }

    pub fn relation_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|w| (0..self.size).map(|v| self.related(w, v)).collect())
            .collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |w| {
            (0..self.size)
                .filter(move |&v| self.related(w, v))
                .map(move |v| (w, v))
        })
    }

    /// `m_R(X)`: the worlds with at least one successor in `X`.
    pub fn diamond(&self, x: WorldSet) -> WorldSet {
        WorldSet(diamond_mask(&self.successors, x.0))
    }

    /// The worlds all of whose successors lie in `X`.
    pub fn box_(&self, x: WorldSet) -> WorldSet {
        self.diamond(x.complement_in(self.size))
            .complement_in(self.size)
    }

    pub fn properties(&self) -> FrameProperties {
        let reflexive = (0..self.size).all(|w| self.related(w, w));
        let transitive = (0..self.size).all(|w| {
            self.successors(w)
                .iter()
                .all(|v| self.successors(v).is_subset(self.successors(w)))
        });
        FrameProperties {
            reflexive,
            transitive,
        }
    }

    /// Relation encoding inverse to [`FiniteFrame::from_relation_index`].
    pub fn relation_index(&self) -> u64 {
        self.successors
            .iter()
            .enumerate()
            .fold(0, |acc, (w, &row)| acc | (row << (w * self.size)))
    }
}

#[inline]
fn diamond_mask(successors: &[u64], x: u64) -> u64 {
    let mut out = 0;
    for (w, &row) in successors.iter().enumerate() {
        if row & x != 0 {
            out |= 1 << w;
        }
    }
    out
}

/// Frames print in the CLI spec syntax, `k;w-v,...`.
impl fmt::Display for FiniteFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.size)?;
        for (i, (w, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}-{v}")?;
        }
        Ok(())
    }
}

/// Parses `k;edges` where edges is a comma-separated list of `w-v` pairs and
/// the shorthands `refl` (all loops) and `total` (every pair).
impl FromStr for FiniteFrame {
    type Err = KripkeError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| KripkeError::BadFrameSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let (size, edges) = spec.split_once(';').unwrap_or((spec, ""));
        let size: usize = size
            .trim()
            .parse()
            .map_err(|_| bad("world count is not a number"))?;
        let mut frame = FiniteFrame::new(size)?;
        for item in edges.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "refl" => (0..size).for_each(|w| frame.successors[w] |= 1 << w),
                "total" => frame
                    .successors
                    .iter_mut()
                    .for_each(|row| *row = full_mask(size)),
                _ => {
                    let (w, v) = item
                        .split_once('-')
                        .ok_or_else(|| bad("edges look like 0-1"))?;
                    let w = w
                        .trim()
                        .parse()
                        .map_err(|_| bad("edge endpoint is not a number"))?;
                    let v = v
                        .trim()
                        .parse()
                        .map_err(|_| bad("edge endpoint is not a number"))?;
                    frame.add_edge(w, v)?;
                }
            }
        }
        Ok(frame)
    }
}

/// Assignment of world sets to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Valuation(pub BTreeMap<String, WorldSet>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn with(mut self, name: &str, value: WorldSet) -> Valuation {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn insert(&mut self, name: &str, value: WorldSet) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<WorldSet> {
        self.0.get(name).copied()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name} = {value}")?;
        }
        Ok(())
    }
}

/// The truth set of `f` in the model `(frame, valuation)`.
pub fn eval_model(
    frame: &FiniteFrame,
    valuation: &Valuation,
    f: &Formula,
) -> Result<WorldSet, KripkeError> {
    let size = frame.size;
    Ok(match f {
        Formula::Var(name) => {
            let value = valuation
                .get(name)
                .ok_or_else(|| KripkeError::Unassigned(name.clone()))?;
            if !value.is_subset(frame.worlds()) {
                return Err(KripkeError::ValueOutOfRange {
                    name: name.clone(),
                    size,
                });
            }
            value
        }
        Formula::Bottom => WorldSet::EMPTY,
        Formula::Not(g) => eval_model(frame, valuation, g)?.complement_in(size),
        Formula::And(l, r) => {
            eval_model(frame, valuation, l)?.intersection(eval_model(frame, valuation, r)?)
        }
        Formula::Or(l, r) => {
            eval_model(frame, valuation, l)?.union(eval_model(frame, valuation, r)?)
        }
        Formula::Implies(l, r) => eval_model(frame, valuation, l)?
            .complement_in(size)
            .union(eval_model(frame, valuation, r)?),
        Formula::Box(g) => frame.box_(eval_model(frame, valuation, g)?),
        Formula::Diamond(g) => frame.diamond(eval_model(frame, valuation, g)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Var(usize),
    Bottom,
    Not,
    And,
    Or,
    Implies,
    Box,
    Diamond,
}

/// A formula flattened to postfix order over bitmasks, for the exhaustive
/// loops. Computes the same truth sets as [`eval_model`].
#[derive(Clone, Debug)]
pub struct CompiledFormula {
    ops: Vec<Op>,
    variables: Vec<String>,
}

impl CompiledFormula {
    pub fn new(f: &Formula) -> CompiledFormula {
        let variables: Vec<String> = f.variables().into_iter().collect();
        let mut ops = Vec::with_capacity(f.size());
        compile(f, &variables, &mut ops);
        CompiledFormula { ops, variables }
    }

    /// Variables in sorted order; `eval` takes their values in this order.
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn eval(&self, frame: &FiniteFrame, values: &[u64], stack: &mut Vec<u64>) -> u64 {
        let full = full_mask(frame.size);
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Var(i) => stack.push(values[i]),
                Op::Bottom => stack.push(0),
                Op::Not => {
                    let x = stack.pop().unwrap();
                    stack.push(!x & full);
                }
                Op::Diamond => {
                    let x = stack.pop().unwrap();
                    stack.push(diamond_mask(&frame.successors, x));
                }
                Op::Box => {
                    let x = stack.pop().unwrap();
                    stack.push(!diamond_mask(&frame.successors, !x & full) & full);
                }
                Op::And | Op::Or | Op::Implies => {
                    let y = stack.pop().unwrap();
                    let x = stack.pop().unwrap();
                    stack.push(match *op {
                        Op::And => x & y,
                        Op::Or => x | y,
                        _ => (!x & full) | y,
                    });
                }
            }
        }
        stack.pop().unwrap()
    }
}

fn compile(f: &Formula, variables: &[String], ops: &mut Vec<Op>) {
    match f {
        Formula::Var(name) => ops.push(Op::Var(
            variables.binary_search(name).expect("variable collected"),
        )),
        Formula::Bottom => ops.push(Op::Bottom),
        Formula::Not(g) => {
            compile(g, variables, ops);
            ops.push(Op::Not);
        }
        Formula::Box(g) => {
            compile(g, variables, ops);
            ops.push(Op::Box);
        }
        Formula::Diamond(g) => {
            compile(g, variables, ops);
            ops.push(Op::Diamond);
        }
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
            compile(l, variables, ops);
            compile(r, variables, ops);
            ops.push(match f {
                Formula::And(..) => Op::And,
                Formula::Or(..) => Op::Or,
                _ => Op::Implies,
            });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrameVerdict {
    Valid,
    Counterexample { valuation: Valuation, world: usize },
}

impl FrameVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, FrameVerdict::Valid)
    }
}

/// Decides whether `f` is true at every world under every valuation.
///
/// Valuations are enumerated with the variables in sorted order, the first
/// variable most significant, each value counting up from the empty set; the
/// first refuting valuation and its lowest refuting world are reported.
pub fn frame_validates(frame: &FiniteFrame, f: &Formula) -> Result<FrameVerdict, KripkeError> {
    frame_validates_bounded(frame, &CompiledFormula::new(f), DEFAULT_MAX_VALUATION_BITS)
}

pub fn frame_validates_bounded(
    frame: &FiniteFrame,
    f: &CompiledFormula,
    max_bits: usize,
) -> Result<FrameVerdict, KripkeError> {
    let k = frame.size;
    let n = f.variables.len();
    let bits = n * k;
    if bits > max_bits {
        return Err(KripkeError::TooManyValuations {
            needed: bits,
            limit: max_bits,
        });
    }
    let full = full_mask(k);
    let mut values = vec![0u64; n];
    let mut stack = Vec::with_capacity(f.ops.len());
    for index in 0u64..(1u64 << bits) {
        for (j, value) in values.iter_mut().enumerate() {
            *value = (index >> (k * (n - 1 - j))) & full;
        }
        let truth = f.eval(frame, &values, &mut stack);
        if truth != full {
            let world = (!truth & full).trailing_zeros() as usize;
            let valuation = Valuation(
                f.variables
                    .iter()
                    .cloned()
                    .zip(values.iter().map(|&v| WorldSet(v)))
                    .collect(),
            );
            return Ok(FrameVerdict::Counterexample { valuation, world });
        }
    }
    Ok(FrameVerdict::Valid)
}

/// All `2^(k²)` frames on `k` worlds, in relation-index order.
pub fn enumerate_frames(k: usize) -> Result<FrameEnumeration, KripkeError> {
    enumerate_frames_bounded(k, DEFAULT_MAX_ENUMERATION_WORLDS)
}

pub fn enumerate_frames_bounded(
    k: usize,
    max_worlds: usize,
) -> Result<FrameEnumeration, KripkeError> {
    let limit = max_worlds.min(HARD_MAX_ENUMERATION_WORLDS);
    if k > limit {
        return Err(KripkeError::EnumerationBound { k, limit });
    }
    if k == 0 {
        return Err(KripkeError::BadSize(0));
    }
    Ok(FrameEnumeration {
        size: k,
        next: 0,
        end: 1u64 << (k * k),
    })
}

#[derive(Clone, Debug)]
pub struct FrameEnumeration {
    size: usize,
    next: u64,
    end: u64,
}

impl FrameEnumeration {
    pub fn count(&self) -> u64 {
        self.end
    }
}

impl Iterator for FrameEnumeration {
    type Item = FiniteFrame;

    fn next(&mut self) -> Option<FiniteFrame> {
        if self.next == self.end {
            return None;
        }
        let frame = FiniteFrame::from_relation_index(self.size, self.next).expect("size checked");
        self.next += 1;
        Some(frame)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// Every reflexive and transitive frame on `k` worlds, in relation-index
/// order. Only relations containing the diagonal are visited.
pub fn preorder_frames(k: usize) -> Result<Vec<FiniteFrame>, KripkeError> {
    if k == 0 || k > 5 {
        return Err(KripkeError::EnumerationBound { k, limit: 5 });
    }
    let off_diagonal: Vec<(usize, usize)> = (0..k)
        .flat_map(|w| (0..k).filter(move |&v| v != w).map(move |v| (w, v)))
        .collect();
    let mut frames = Vec::new();
    for choice in 0u64..(1 << off_diagonal.len()) {
        let edges = off_diagonal
            .iter()
            .enumerate()
            .filter(|(i, _)| choice >> i & 1 == 1)
            .map(|(_, &e)| e)
            .chain((0..k).map(|w| (w, w)));
        let frame = FiniteFrame::from_edges(k, edges)?;
        if frame.properties().transitive {
            frames.push(frame);
        }
    }
    frames.sort_by_key(FiniteFrame::relation_index);
    Ok(frames)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn t_axiom_on_single_points() {
        let reflexive: FiniteFrame = "1;refl".parse().unwrap();
        let irreflexive: FiniteFrame = "1;".parse().unwrap();
        let v = Valuation::new().with("p", WorldSet::EMPTY);
        assert_eq!(
            eval_model(&reflexive, &v, &f("[]p -> p")).unwrap(),
            WorldSet(1)
        );
        assert_eq!(
            eval_model(&irreflexive, &v, &f("[]p -> p")).unwrap(),
            WorldSet::EMPTY
        );
    }

    #[test]
    fn diamond_on_a_chain() {
        let chain: FiniteFrame = "2;0-1".parse().unwrap();
        let v = Valuation::new().with("q", WorldSet::singleton(1));
        assert_eq!(
            eval_model(&chain, &v, &f("<>q")).unwrap(),
            WorldSet::singleton(0)
        );
    }

    #[test]
    fn unassigned_and_out_of_range() {
        let frame = FiniteFrame::new(2).unwrap();
        assert_eq!(
            eval_model(&frame, &Valuation::new(), &f("p")),
            Err(KripkeError::Unassigned("p".into()))
        );
        let v = Valuation::new().with("p", WorldSet::singleton(5));
        assert!(matches!(
            eval_model(&frame, &v, &f("p")),
            Err(KripkeError::ValueOutOfRange { .. })
        ));
    }

    #[test]
    fn validity_verdicts() {
        let s4_chain: FiniteFrame = "2;refl,0-1".parse().unwrap();
        assert_eq!(
            frame_validates(&s4_chain, &f("[]p -> [][]p")).unwrap(),
            FrameVerdict::Valid
        );

        let point = FiniteFrame::new(1).unwrap();
        assert_eq!(
            frame_validates(&point, &f("[]p -> p")).unwrap(),
            FrameVerdict::Counterexample {
                valuation: Valuation::new().with("p", WorldSet::EMPTY),
                world: 0
            }
        );
        for frame in enumerate_frames(2).unwrap() {
            assert!(frame_validates(&frame, &f("#t")).unwrap().is_valid());
        }
    }

    #[test]
    fn valuation_guard() {
        let frame = FiniteFrame::new(7).unwrap();
        let err = frame_validates(&frame, &f("a & b & c & d")).unwrap_err();
        assert_eq!(
            err,
            KripkeError::TooManyValuations {
                needed: 28,
                limit: 24
            }
        );
    }

    #[test]
    fn counterexample_order_is_lexicographic() {
        // With p the most significant variable, q -> p first fails at p = {}, q = {0}.
        let frame: FiniteFrame = "2;".parse().unwrap();
        let verdict = frame_validates(&frame, &f("q -> p")).unwrap();
        assert_eq!(
            verdict,
            FrameVerdict::Counterexample {
                valuation: Valuation::new()
                    .with("p", WorldSet::EMPTY)
                    .with("q", WorldSet(1)),
                world: 0
            }
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_frames(1).unwrap().count(), 2);
        assert_eq!(enumerate_frames(2).unwrap().count(), 16);
        assert_eq!(enumerate_frames(3).unwrap().count(), 512);
        assert!(matches!(
            enumerate_frames(4),
            Err(KripkeError::EnumerationBound { k: 4, limit: 3 })
        ));
        assert_eq!(enumerate_frames_bounded(4, 4).unwrap().count(), 65536);
        let all: Vec<_> = enumerate_frames(2).unwrap().collect();
        let distinct: std::collections::HashSet<_> =
            all.iter().map(FiniteFrame::relation_index).collect();
        assert_eq!(distinct.len(), 16);
    }

    #[test]
    fn preorder_counts() {
        // number of preorders on k labelled points
        let counts: Vec<usize> = (1..=4).map(|k| preorder_frames(k).unwrap().len()).collect();
        assert_eq!(counts, [1, 4, 29, 355]);
    }

    #[test]
    fn properties() {
        let id: FiniteFrame = "3;refl".parse().unwrap();
        let empty: FiniteFrame = "2;".parse().unwrap();
        let chain: FiniteFrame = "3;0-1,1-2".parse().unwrap();
        let t = |reflexive, transitive| FrameProperties {
            reflexive,
            transitive,
        };
        assert_eq!(id.properties(), t(true, true));
        assert_eq!(empty.properties(), t(false, true));
        assert_eq!(chain.properties(), t(false, false));
    }

    #[test]
    fn frame_specs() {
        let frame: FiniteFrame = "3;0-1, 1-2".parse().unwrap();
        assert_eq!(frame.to_string(), "3;0-1,1-2");
        assert_eq!("2;total".parse::<FiniteFrame>().unwrap().edges().count(), 4);
        assert!("0;".parse::<FiniteFrame>().is_err());
        assert!("2;0-2".parse::<FiniteFrame>().is_err());
        assert!("x;".parse::<FiniteFrame>().is_err());
        assert!("2;01".parse::<FiniteFrame>().is_err());
        let m = frame.relation_matrix();
        assert_eq!(FiniteFrame::from_matrix(&m).unwrap(), frame);
        assert_eq!(
            FiniteFrame::from_relation_index(3, frame.relation_index()).unwrap(),
            frame
        );
    }

    #[test]
    fn world_set_text() {
        assert_eq!(WorldSet::from_worlds([0, 2]).to_string(), "{0,2}");
        assert_eq!("{ 0, 2 }".parse::<WorldSet>(), Ok(WorldSet(5)));
        assert_eq!("{}".parse::<WorldSet>(), Ok(WorldSet::EMPTY));
        assert!("0,2".parse::<WorldSet>().is_err());
    }
}
