//! Exact continued fractions of `√N` and the inverse construction of every
//! radicand whose expansion has a prescribed palindromic period word.
//!
//! ```
//! use cfperiod::{expand_sqrt, solve_family, SymmetricWord};
//! use num_bigint::BigUint;
//!
//! let e = expand_sqrt(&BigUint::from(23u32)).unwrap();
//! assert_eq!(e.to_string(), "[4; (1,3,1,8)]");
//!
//! let word: SymmetricWord = "2,2".parse().unwrap();
//! let family = solve_family(&word).unwrap().family().unwrap();
//! assert_eq!(family.eval(1).1, BigUint::from(41u32));
//! ```

pub mod cli;
pub mod construction;
pub mod continuant;
pub mod corollary;
pub mod error;
pub mod output;
pub mod surd;

pub use construction::{
    family_eval, generate, is_squarefree, solve_family, theorem_condition, verify_candidate,
    CandidateRecord, FactorBound, Family, ParityVerdict, Solution, Squarefree, Verification,
};
pub use continuant::{
    continuant, convergents, fibonacci, parse_word, symmetric_triple, ContinuantTable,
    ContinuantTriple, SymmetricWord,
};
pub use corollary::{
    choose_word, errata_table, original_word, parity_report, ErrataRow, ParityReport,
};
pub use error::{Error, Result};
pub use surd::{expand_sqrt, is_perfect_square, isqrt, period_length, CfExpansion};
