//! Exact arithmetic for the σ/τ word calculus on coprime slopes.
//!
//! A slope `q/p` in lowest terms is a billiard shot from one corner of the
//! unit square to another. Two gcd-preserving maps, `σ: q/p ↦ p/q` and
//! `τ: q/p ↦ q/(p+q)`, generate every such slope from `1/1`, and the word
//! that does so spells out the Euclidean algorithm on `(p, q)`.
//!
//! * [`rational`]: gcd, [`Slope`], Euclid traces.
//! * [`word`]: the maps, [`Word`], encoding and decoding, `fib^k`.
//! * [`enumeration`]: words and endpoints by length, families, step grids.
//! * [`billiard`]: folding the unfolded path back into the square.
//! * [`emit`]: SVG, CSV and PGM output.
//!
//! ```
//! use gcd_words::{encode, Slope};
//!
//! let slope: Slope = "3/5".parse()?;
//! let word = encode(&slope)?;
//! assert_eq!(word.to_string(), "tstst");
//! assert_eq!(word.apply(&Slope::one()), slope);
//! # Ok::<(), gcd_words::Error>(())
//! ```

pub mod billiard;
pub mod emit;
pub mod enumeration;
mod error;
pub mod rational;
pub mod word;

pub use billiard::{end_corner, fold_trajectory, Corner, Trajectory};
pub use enumeration::{count_words, endpoints_of_length, step_grid, words_of_length, StepGrid};
pub use error::{Error, Result};
pub use rational::{euclid_trace, gcd, reduce, EuclidTrace, Slope};
pub use word::{apply_sigma, apply_tau, apply_word, encode, fib_power, golden_ratio_error, Word};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/slopes.md")]
    mod slopes {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/fibonacci.md")]
    mod fibonacci {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/billiards.md")]
    mod billiards {}
    #[doc = include_str!("../../../book/src/figures.md")]
    mod figures {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
