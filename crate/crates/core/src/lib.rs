//! A workbench for modal formulas, Kripke frames and Boolean algebras with
//! operators.
//!
//! - [`formula`]: syntax, parsing and printing.
//! - [`catalog`]: the named axioms `A`–`F` and the conjuncts of `A`.
//! - [`kripke`]: finite frames, truth sets as bitmasks, exhaustive validity.
//! - [`bao`]: concrete algebras of sets, evaluation, the supremum facts.
//! - [`upset`]: ultimately periodic subsets of ω and the recession frame.
//! - [`construction`]: refuting `A` from a failure of `F` in a complete algebra.
//! - [`harness`]: sweeps over finite frames, suites, reports.
//!
//! ```
//! use modalgebra::catalog::Axiom;
//! use modalgebra::kripke::{frame_validates, FiniteFrame};
//!
//! let reflexive_point: FiniteFrame = "1;refl".parse().unwrap();
//! assert!(frame_validates(&reflexive_point, &Axiom::C.formula()).unwrap().is_valid());
//! ```

pub mod bao;
pub mod catalog;
pub mod construction;
pub mod formula;
pub mod harness;
pub mod kripke;
pub mod upset;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/formulas.md")]
    struct Formulas;
    #[doc = include_str!("../../../book/src/frames.md")]
    struct Frames;
    #[doc = include_str!("../../../book/src/algebras.md")]
    struct Algebras;
    #[doc = include_str!("../../../book/src/upsets.md")]
    struct Upsets;
    #[doc = include_str!("../../../book/src/construction.md")]
    struct Construction;
    #[doc = include_str!("../../../book/src/harness.md")]
    struct Harness;
}
