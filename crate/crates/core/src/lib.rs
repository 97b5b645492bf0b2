//! Maximal α-gapped repeats and palindromes of words over an integer
//! alphabet, with overlapping arms supported.
//!
//! The crate is split into:
//!
//! * [`word`]: words, segments, periods and the gapped-repeat/palindrome/run types,
//! * [`oracle`]: brute-force enumerators that follow the definitions literally,
//! * [`enumerate`]: the production enumerators (runs, Manacher, scans, run-border probing),
//! * [`covermap`]: point mappings, γ-cover geometry and the numeric lemmas behind the counting,
//! * [`bounds`]: classification into periodic/aperiodic classes and the bound report,
//! * [`selfcheck`]: the differential and property checks behind the fuzzer.
//!
//! Every position exposed by the public API is 1-based.

pub mod bounds;
pub mod covermap;
pub mod enumerate;
mod error;
pub mod oracle;
pub mod random;
pub mod rational;
pub mod selfcheck;
pub mod word;

pub use error::{Error, Result};
pub use rational::Rational;
pub use word::{GappedPalindrome, GappedRepeat, Params, Run, Segment, Symbol, Word};
