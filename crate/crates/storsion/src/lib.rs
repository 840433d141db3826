//! Finite extriangulated categories with negative first extensions,
//! their s-torsion pairs, and the interval/heart correspondence.
//!
//! The core objects are:
//!
//! * [`FiniteExtCat`]: a finite Krull-Schmidt category given by Hom and
//!   extension dimension matrices plus a middle-indexed conflation table.
//! * [`STorsPair`] and [`enumerate_stors`]: s-torsion pairs `(T, F)` with
//!   `C = T * F`, `Hom(T, F) = 0` and `E^{-1}(T, F) = 0`, ordered by
//!   torsion-class inclusion.
//! * [`heart_of`], [`Interval::phi`], [`Interval::psi`] and
//!   [`verify_main_theorem`]: the poset isomorphism between an interval
//!   `[t1, t2]` and the s-torsion pairs of its heart `T2 /\ F1`, verified by
//!   exhaustive computation.
//! * [`Quiver`] and [`succ_interval_iso`]: successor-closed vertex subsets
//!   and the purely combinatorial form of the same isomorphism.
//! * [`gen_typea`]: module categories of type-A path algebras in either
//!   negative-extension mode, where s-torsion pairs are parametrized by
//!   successor-closed subsets ([`verify_succ_bijection`]).
//!
//! The mdbook under `book/` walks through these concepts; every code block
//! there compiles and runs as a doc-test of this crate.

pub mod category;
pub mod datasets;
pub mod error;
pub mod quiver;
pub mod report;
pub mod torsion;
pub mod typea;

pub use category::{
    ConfRow, DimMat, FiniteExtCat, IndecId, LintFamily, LintViolation, Obj, Subcat,
};
pub use datasets::{dataset, dataset_spec_text, DATASET_NAMES};
pub use error::{Error, Result};
pub use quiver::{succ_interval_iso, Quiver, SuccIntervalIso, SuccLattice};
pub use report::{Check, VerifyReport};
pub use torsion::{
    canonical_decomposition, enumerate_stors, enumerate_stors_with, heart_of, is_storsion,
    shift_closed_check, verify_heart_lemma, verify_main_theorem, verify_main_theorem_in,
    EnumOptions, Interval, STorsPair, StorsPoset, StpFlags,
};
pub use typea::{
    gen_typea, interval_modules, pair_from_succ, serre_equivalence_check, succ_set_of_pair,
    verify_succ_bijection, Dir, IntervalModule, NegExtMode, Orientation,
};

// The book chapters double as doc-tests so the guide can never drift from the
// library. Hidden from rustdoc output; `cargo test --doc` runs them.
macro_rules! book_chapter {
    ($name:ident, $path:literal) => {
        #[doc = include_str!($path)]
        #[doc(hidden)]
        pub mod $name {}
    };
}
book_chapter!(_book_introduction, "../../../book/src/introduction.md");
book_chapter!(_book_categories, "../../../book/src/categories.md");
book_chapter!(_book_torsion_pairs, "../../../book/src/torsion-pairs.md");
book_chapter!(_book_hearts, "../../../book/src/hearts.md");
book_chapter!(_book_quivers, "../../../book/src/quivers.md");
book_chapter!(_book_type_a, "../../../book/src/type-a.md");
book_chapter!(_book_datasets, "../../../book/src/datasets.md");
