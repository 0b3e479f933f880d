//! Exact computations in finite Coxeter groups: length, reflection length,
//! conjugacy classes and their minimal-length elements, and the excess
//! statistics of factorizations into two involutions.
//!
//! Everything runs over exact arithmetic in Q(√5) — there is no floating
//! point. Group elements are packed signed permutations of the positive
//! roots, which keeps exhaustive enumeration feasible up to the ~3·10⁶
//! elements of E7.
//!
//! The crate is the library behind the `coxcess` command-line tool; the
//! `examples/` directory walks through each major capability:
//!
//! - `excess_basics` — lengths, reflection lengths, e(w) and E(w)
//! - `involution_factorizations` — the factorization table of a fixed
//!   permutation with its length sums
//! - `cuspidal_table` — the cuspidal-class table of an irreducible type
//! - `minimal_class_elements` — class enumeration and X_min / X⁰_min
//! - `zero_excess_everywhere` — the per-class zero-excess witness search
//! - `coxeter_two_coloring` — zero-excess Coxeter elements from graph
//!   2-coloring
//! - `cuspidal_constructions` — minimal cuspidal elements of B_n/D_n from
//!   partitions
//! - `large_reflection_excess` — the Sym(4k) family separating e from E
//! - `class_cache` — storing and reloading heavy class enumerations
//!
//! Run one with `cargo run --example excess_basics`.

#![forbid(unsafe_code)]

pub mod cache;
pub mod conjugacy;
pub mod element;
pub mod error;
pub mod excess;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod signed;
pub mod system;
pub mod types;
pub mod util;

pub use conjugacy::{
    all_classes, class_of, enumerate_group, is_cuspidal, Budget, ClassFingerprint, ConjugacyClass,
    Profile,
};
pub use element::{DihedralTag, Element};
pub use error::{Error, Result};
pub use excess::{
    excess_report_for, validate_certificate, verify_theorem, ClassContext, ExcessCertificate,
    ExcessReport, TheoremReport,
};
pub use linalg::Matrix;
pub use report::{cuspidal_report, parse_word, table1_report, ReportDocument, ReportOptions};
pub use scalar::Scalar;
pub use signed::{
    bigxs, construct_min_cuspidal, coxeter_bicolored, cuspidal_min_length, BdFamily,
    CuspidalPartition, SignedPermutation,
};
pub use system::CoxeterSystem;
pub use types::{Component, CoxeterType};
