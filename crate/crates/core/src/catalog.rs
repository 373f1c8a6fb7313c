//! The named axioms of the logic and the auxiliary formulas used to state `A`.
//!
//! The logic **L** is axiomatized over propositional tautologies by
//! `A`, `B`, `C`, `D` and `E`; `F` is the S4 axiom `[]p -> [][]p`, which
//! every complete algebra validating **L** also validates, but which **L**
//! does not prove.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::formula::{parse, Formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axiom {
    A1,
    A2,
    B1,
    B2,
    C1,
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::A1,
        Axiom::A2,
        Axiom::B1,
        Axiom::B2,
        Axiom::C1,
        Axiom::A,
        Axiom::B,
        Axiom::C,
        Axiom::D,
        Axiom::E,
        Axiom::F,
    ];

    /// The axioms of **L** proper.
    pub const LOGIC: [Axiom; 5] = [Axiom::A, Axiom::B, Axiom::C, Axiom::D, Axiom::E];

    /// `B`..`E`: what the witness construction assumes valid.
    pub const FRAME_CONDITIONS: [Axiom; 4] = [Axiom::B, Axiom::C, Axiom::D, Axiom::E];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::A1 => "A1",
            Axiom::A2 => "A2",
            Axiom::B1 => "B1",
            Axiom::B2 => "B2",
            Axiom::C1 => "C1",
            Axiom::A => "A",
            Axiom::B => "B",
            Axiom::C => "C",
            Axiom::D => "D",
            Axiom::E => "E",
            Axiom::F => "F",
        }
    }

    fn source(self) -> &'static str {
        match self {
            Axiom::A1 => "[](q1 -> r)",
            Axiom::A2 => "[](q2 -> r)",
            Axiom::B1 => "[](r -> <>q1)",
            Axiom::B2 => "[](r -> <>q2)",
            Axiom::C1 => "[]~(q1 & q2)",
            Axiom::A => {
                "(r & []p & ~[][]p & [](q1 -> r) & [](q2 -> r) & [](r -> <>q1) & [](r -> <>q2) \
                 & []~(q1 & q2)) -> <>(r & [](r -> q1 | q2))"
            }
            Axiom::B => "[](p -> q) -> ([]p -> []q)",
            Axiom::C => "[]p -> p",
            Axiom::D => "(p & <><>q) -> (<>q | <><>(q & <>p))",
            Axiom::E => "([]p & ~[][]p) -> <>([][]p & ~[][][]p)",
            Axiom::F => "[]p -> [][]p",
        }
    }

    pub fn formula(self) -> Formula {
        parse(self.source()).expect("catalog entries are well-formed")
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown axiom {s:?}"))
    }
}

/// All catalog entries, parsed once.
#[derive(Clone, Debug)]
pub struct AxiomCatalog {
    entries: Vec<(Axiom, Formula)>,
}

impl AxiomCatalog {
    pub fn new() -> AxiomCatalog {
        AxiomCatalog {
            entries: Axiom::ALL.into_iter().map(|a| (a, a.formula())).collect(),
        }
    }

    pub fn get(&self, axiom: Axiom) -> &Formula {
        &self.entries[axiom as usize].1
    }

    pub fn iter(&self) -> impl Iterator<Item = (Axiom, &Formula)> {
        self.entries.iter().map(|(a, f)| (*a, f))
    }

    /// The antecedent of `A`: `r ∧ □p ∧ ¬□²p ∧ A1 ∧ A2 ∧ B1 ∧ B2 ∧ C1`.
    pub fn a_antecedent(&self) -> &Formula {
        self.get(Axiom::A)
            .as_implication()
            .expect("A is an implication")
            .0
    }

    /// The consequent of `A`: `◇(r ∧ □(r → q1 ∨ q2))`.
    pub fn a_consequent(&self) -> &Formula {
        self.get(Axiom::A)
            .as_implication()
            .expect("A is an implication")
            .1
    }
}

impl Default for AxiomCatalog {
    fn default() -> Self {
        AxiomCatalog::new()
    }
}

/// Shorthand for `AxiomCatalog::new()`.
pub fn axiom_catalog() -> AxiomCatalog {
    AxiomCatalog::new()
}
