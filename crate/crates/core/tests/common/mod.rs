#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;

use modalgebra::formula::Formula;
use modalgebra::upset::UpSet;

/// A prefix and period exactly as drawn, never normalized.
#[derive(Clone, Debug)]
pub struct RawSet {
    pub prefix: Vec<bool>,
    pub period: Vec<bool>,
}

impl RawSet {
    pub fn member(&self, n: u64) -> bool {
        let n = n as usize;
        if n < self.prefix.len() {
            self.prefix[n]
        } else {
            self.period[(n - self.prefix.len()) % self.period.len()]
        }
    }

    pub fn to_upset(&self) -> UpSet {
        UpSet::normalize(self.prefix.clone(), self.period.clone()).unwrap()
    }

    /// `w ∈ ◇X` iff some `v ≥ w − 1` is in `X`.
    pub fn dia(&self, w: u64) -> bool {
        self.period.contains(&true)
            || (w.saturating_sub(1)..self.prefix.len() as u64).any(|v| self.member(v))
    }

    /// `w ∈ □X` iff every `v ≥ w − 1` is in `X`.
    pub fn boxed(&self, w: u64) -> bool {
        self.period.iter().all(|&b| b)
            && (w.saturating_sub(1)..self.prefix.len() as u64).all(|v| self.member(v))
    }

    /// A bound past which two raw sets (and anything built from both) repeat.
    pub fn horizon(&self, other: &RawSet) -> u64 {
        let lcm = self.period.len() * other.period.len();
        (self.prefix.len().max(other.prefix.len()) + 2 * lcm) as u64
    }
}

pub fn random_raw<R: Rng>(rng: &mut R, max_prefix: usize, max_period: usize) -> RawSet {
    // narrow draws now and then, so equal sets with different shapes turn up
    let (lp, pp) = if rng.gen_bool(0.3) {
        (3, 2)
    } else {
        (max_prefix, max_period)
    };
    let prefix = (0..rng.gen_range(0..=lp)).map(|_| rng.gen()).collect();
    let period = (0..rng.gen_range(1..=pp)).map(|_| rng.gen()).collect();
    RawSet { prefix, period }
}

pub fn arb_raw() -> impl Strategy<Value = RawSet> {
    (
        prop::collection::vec(any::<bool>(), 0..=16),
        prop::collection::vec(any::<bool>(), 1..=12),
    )
        .prop_map(|(prefix, period)| RawSet { prefix, period })
}

pub fn arb_formula(vars: &'static [&'static str], depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        8 => prop::sample::select(vars).prop_map(Formula::var),
        1 => Just(Formula::Bottom),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            inner.clone().prop_map(Formula::boxed),
            inner.clone().prop_map(Formula::diamond),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.implies(b)),
        ]
    })
}
