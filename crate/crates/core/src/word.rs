//! The σ/τ map algebra.
//!
//! Two maps act on slopes `q/p`:
//!
//! * `σ: q/p ↦ p/q` mirrors the unfolded endpoint across the diagonal,
//! * `τ: q/p ↦ q/(p+q)` shifts the endpoint by `q` in the `x` direction.
//!
//! Both preserve `gcd(q, p)`, and every coprime slope is reached from `1/1` by
//! exactly one canonical word `σ^j τ^n₁ σ τ^n₂ ⋯ σ τ^n_k`. A [`Word`] stores
//! that shape directly (the optional leading σ plus the τ run lengths), so a
//! word with two adjacent σ's or a trailing σ cannot be built.
//!
//! Words are read left to right and applied right to left: the rightmost τ
//! acts on `1/1` first.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Slope;

/// A single map symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Sigma,
    Tau,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Sigma => 's',
            Symbol::Tau => 't',
        }
    }
}

/// Canonical word `σ^j τ^n₁ σ τ^n₂ ⋯ σ τ^n_k`.
///
/// The empty word `ε` (no runs) is the identity and encodes `1/1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    leading_sigma: bool,
    tau_runs: Vec<u64>,
}

impl Word {
    /// The identity word `ε`.
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from its prefix flag and run lengths.
    ///
    /// Fails if a run is zero or if a leading σ has no runs to act on (the
    /// lone word `σ` fixes `1/1` and is not a distinct word). The total length
    /// must fit in a `u64`.
    pub fn new(leading_sigma: bool, tau_runs: Vec<u64>) -> Result<Self> {
        let invalid = |reason| Error::InvalidWord {
            token: format!("{}{:?}", if leading_sigma { "s" } else { "" }, tau_runs),
            reason,
        };
        if tau_runs.contains(&0) {
            return Err(invalid("tau runs must be positive"));
        }
        if tau_runs.is_empty() && leading_sigma {
            return Err(invalid("a word may not end in s"));
        }
        let word = Word {
            leading_sigma,
            tau_runs,
        };
        word.checked_len().ok_or(Error::TooLarge("word length"))?;
        Ok(word)
    }

    /// `τ^n`; `n = 0` gives the empty word.
    pub fn tau_power(n: u64) -> Self {
        Word {
            leading_sigma: false,
            tau_runs: if n == 0 { vec![] } else { vec![n] },
        }
    }

    /// `fib^k = (στ)^k`.
    pub fn fib_power(k: usize) -> Self {
        Word {
            leading_sigma: k > 0,
            tau_runs: vec![1; k],
        }
    }

    /// Whether the word starts with σ (the exponent `j`).
    pub fn leading_sigma(&self) -> bool {
        self.leading_sigma
    }

    /// Run lengths `n₁ … n_k`, leftmost first.
    pub fn tau_runs(&self) -> &[u64] {
        &self.tau_runs
    }

    pub fn is_empty(&self) -> bool {
        self.tau_runs.is_empty()
    }

    /// `N_σ = j + (k - 1)`.
    pub fn n_sigma(&self) -> u64 {
        match self.tau_runs.len() {
            0 => 0,
            k => u64::from(self.leading_sigma) + (k as u64 - 1),
        }
    }

    /// `N_τ = Σ nᵢ`.
    pub fn n_tau(&self) -> u64 {
        self.tau_runs.iter().sum()
    }

    /// Total number of symbols.
    pub fn len(&self) -> u64 {
        self.n_sigma() + self.n_tau()
    }

    fn checked_len(&self) -> Option<u64> {
        let tau = self
            .tau_runs
            .iter()
            .try_fold(0u64, |acc, &n| acc.checked_add(n))?;
        tau.checked_add(self.n_sigma())
    }

    /// Symbols left to right.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        let lead = self.leading_sigma.then_some(Symbol::Sigma);
        let body = self.tau_runs.iter().enumerate().flat_map(|(i, &n)| {
            let sep = (i > 0).then_some(Symbol::Sigma);
            sep.into_iter()
                .chain(std::iter::repeat_n(Symbol::Tau, n as usize))
        });
        lead.into_iter().chain(body)
    }

    /// Rebuilds the canonical form from a left-to-right symbol string.
    pub fn from_symbols<I: IntoIterator<Item = Symbol>>(symbols: I) -> Result<Self> {
        let mut leading_sigma = false;
        let mut runs: Vec<u64> = Vec::new();
        let mut last = None;
        for (i, sym) in symbols.into_iter().enumerate() {
            match sym {
                Symbol::Sigma if last == Some(Symbol::Sigma) => {
                    return Err(Error::InvalidWord {
                        token: String::new(),
                        reason: "adjacent s symbols",
                    })
                }
                Symbol::Sigma if i == 0 => leading_sigma = true,
                Symbol::Sigma => {}
                Symbol::Tau if last == Some(Symbol::Tau) => {
                    let run = runs.last_mut().expect("a tau precedes");
                    *run = run.checked_add(1).ok_or(Error::TooLarge("tau run"))?;
                }
                Symbol::Tau => runs.push(1),
            }
            last = Some(sym);
        }
        if last == Some(Symbol::Sigma) {
            return Err(Error::InvalidWord {
                token: String::new(),
                reason: "a word may not end in s",
            });
        }
        Word::new(leading_sigma, runs)
    }

    /// Applies the word to `s`, rightmost map first.
    pub fn apply(&self, s: &Slope) -> Slope {
        let (mut q, mut p) = (s.numer().clone(), s.denom().clone());
        for (i, &n) in self.tau_runs.iter().enumerate().rev() {
            // τ^n: q/p -> q/(p + n q)
            p += &q * n;
            let sigma_before = i > 0 || self.leading_sigma;
            if sigma_before {
                std::mem::swap(&mut q, &mut p);
            }
        }
        Slope::new_unchecked(q, p)
    }
}

/// `τ: q/p ↦ q/(p+q)`.
pub fn apply_tau(s: &Slope) -> Slope {
    Slope::new_unchecked(s.numer().clone(), s.denom() + s.numer())
}

/// `σ: q/p ↦ p/q`.
pub fn apply_sigma(s: &Slope) -> Slope {
    Slope::new_unchecked(s.denom().clone(), s.numer().clone())
}

pub fn apply_word(w: &Word, s: &Slope) -> Slope {
    w.apply(s)
}

/// The unique canonical word sending `1/1` to `s`.
///
/// For `q < p` each division `p = n·q + r` peels off a factor
/// `q/p = τ^n σ (r/q)`; the chain ends at `1/p' = τ^(p'-1)(1/1)`. For
/// `q > p` the word is `σ` followed by the word of `p/q`.
///
/// Fails only when a run or the total length would not fit in a `u64`.
pub fn encode(s: &Slope) -> Result<Word> {
    let (mut num, mut den) = (s.numer().clone(), s.denom().clone());
    let leading_sigma = num > den;
    if leading_sigma {
        std::mem::swap(&mut num, &mut den);
    }
    let mut runs = Vec::new();
    while num != den {
        let (n, r) = num_integer::Integer::div_rem(&den, &num);
        if r.is_zero() {
            // num = 1 here since the slope is reduced
            runs.push(to_run(n - 1u32)?);
            break;
        }
        runs.push(to_run(n)?);
        den = num;
        num = r;
    }
    Word::new(leading_sigma, runs)
}

fn to_run(n: BigUint) -> Result<u64> {
    n.to_u64().ok_or(Error::TooLarge("tau run"))
}

/// `fib^k` together with its slope `F_{k+1}/F_k` (indexing `F_0 = F_1 = 1`),
/// obtained by applying `στ` to `1/1` k times.
pub fn fib_power(k: usize) -> (Word, Slope) {
    let mut slope = Slope::one();
    for _ in 0..k {
        slope = apply_sigma(&apply_tau(&slope));
    }
    (Word::fib_power(k), slope)
}

/// The golden ratio `(1 + √5) / 2`.
pub const PHI: f64 = 1.618_033_988_749_895;

/// `|F_{k+1}/F_k − φ|` in double precision.
///
/// With `a = 2F_{k+1} − F_k` and `b = F_k` the error is
/// `|a² − 5b²| / (2b (a + √5 b))`. The numerator is computed exactly, so the
/// result keeps full relative precision long after `F_{k+1}/F_k` and `φ`
/// round to the same double. Returns 0 once `F_k` overflows an `f64`.
pub fn golden_ratio_error(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::NotPositive("golden_ratio_error k"));
    }
    let (_, slope) = fib_power(k);
    let upper = BigInt::from(slope.numer().clone());
    let lower = BigInt::from(slope.denom().clone());
    let a: BigInt = &upper * 2 - &lower;
    let cassini: BigInt = &a * &a - &lower * &lower * 5u32;
    let numerator = cassini.magnitude().clone();
    let (a, b) = (a.to_f64().unwrap_or(f64::INFINITY), lower.to_f64().unwrap_or(f64::INFINITY));
    let numerator = numerator.to_f64().unwrap_or(f64::INFINITY);
    Ok(numerator / (2.0 * b * (a + 5f64.sqrt() * b)))
}

impl fmt::Display for Word {
    /// Run-length text: `s` for σ, `t` for τ, a count after `t` when the run
    /// exceeds one, and `e` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        if self.leading_sigma {
            f.write_str("s")?;
        }
        for (i, &n) in self.tau_runs.iter().enumerate() {
            if i > 0 {
                f.write_str("s")?;
            }
            f.write_str("t")?;
            if n > 1 {
                write!(f, "{n}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Accepts plain (`tstst`) and run-length (`t2st`) text, or `e`.
impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let invalid = |reason| Error::InvalidWord {
            token: text.to_owned(),
            reason,
        };
        if text == "e" {
            return Ok(Word::empty());
        }
        if text.is_empty() {
            return Err(invalid("empty input (use `e` for the empty word)"));
        }
        let bytes = text.as_bytes();
        // (symbol, count) pairs after expanding repetition counts
        let mut tokens: Vec<(Symbol, u64)> = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let sym = match bytes[i] {
                b's' => Symbol::Sigma,
                b't' => Symbol::Tau,
                b'e' => return Err(invalid("`e` must stand alone")),
                b'0'..=b'9' => return Err(invalid("count without a preceding letter")),
                _ => return Err(invalid("unexpected character")),
            };
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let count = if start == i {
                1
            } else {
                text[start..i]
                    .parse::<u64>()
                    .map_err(|_| invalid("repetition count too large"))?
            };
            if count == 0 {
                return Err(invalid("repetition count of 0"));
            }
            tokens.push((sym, count));
        }

        let mut leading_sigma = false;
        let mut runs: Vec<u64> = Vec::new();
        let mut last = None;
        for (idx, &(sym, count)) in tokens.iter().enumerate() {
            match sym {
                Symbol::Sigma => {
                    if count > 1 || last == Some(Symbol::Sigma) {
                        return Err(invalid("adjacent s symbols"));
                    }
                    if idx == 0 {
                        leading_sigma = true;
                    }
                }
                Symbol::Tau => {
                    if last == Some(Symbol::Tau) {
                        let run = runs.last_mut().expect("a tau precedes");
                        *run = run
                            .checked_add(count)
                            .ok_or_else(|| invalid("repetition count too large"))?;
                    } else {
                        runs.push(count);
                    }
                }
            }
            last = Some(sym);
        }
        if last == Some(Symbol::Sigma) {
            return Err(invalid("a word may not end in s"));
        }
        Word::new(leading_sigma, runs).map_err(|e| match e {
            Error::TooLarge(_) => invalid("word too long"),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slope(q: u64, p: u64) -> Slope {
        Slope::new(q, p).unwrap()
    }

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    // Applies a plain symbol string right to left using only the two maps.
    fn apply_symbols(text: &str, s: &Slope) -> Slope {
        text.chars().rev().fold(s.clone(), |acc, c| match c {
            's' => apply_sigma(&acc),
            't' => apply_tau(&acc),
            _ => unreachable!(),
        })
    }

    #[test]
    fn tau_examples() {
        assert_eq!(apply_tau(&slope(1, 1)), slope(1, 2));
        assert_eq!(apply_tau(&slope(3, 2)), slope(3, 5));
        assert_eq!(apply_tau(&slope(2, 3)), slope(2, 5));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(apply_sigma(&slope(2, 3)), slope(3, 2));
        assert_eq!(apply_sigma(&slope(1, 1)), slope(1, 1));
        assert_eq!(apply_sigma(&slope(7, 4)), slope(4, 7));
        assert_eq!(apply_sigma(&apply_sigma(&slope(7, 4))), slope(7, 4));
    }

    #[test]
    fn apply_word_examples() {
        assert_eq!(apply_word(&word("tstst"), &Slope::one()), slope(3, 5));
        assert_eq!(apply_word(&Word::empty(), &slope(9, 7)), slope(9, 7));
        assert_eq!(apply_word(&word("st"), &Slope::one()), slope(2, 1));
    }

    #[test]
    fn apply_matches_symbolwise_application() {
        for text in ["t", "st", "tst", "t3st2", "st5st", "t2st2st3", "stststst"] {
            let w = word(text);
            let plain: String = w.symbols().map(Symbol::as_char).collect();
            for s in [Slope::one(), slope(2, 7), slope(5, 3)] {
                assert_eq!(w.apply(&s), apply_symbols(&plain, &s), "{text} on {s}");
            }
        }
    }

    #[test]
    fn non_commutativity() {
        assert_eq!(word("st").apply(&Slope::one()), slope(2, 1));
        assert_eq!(apply_symbols("ts", &Slope::one()), slope(1, 2));
    }

    #[test]
    fn encode_examples() {
        let w = encode(&slope(3, 5)).unwrap();
        assert_eq!(w.to_string(), "tstst");
        assert!(!w.leading_sigma());
        assert_eq!(w.tau_runs(), &[1, 1, 1]);
        assert_eq!(encode(&Slope::one()).unwrap(), Word::empty());
        assert_eq!(encode(&slope(8, 5)).unwrap().to_string(), "stststst");
        assert_eq!(encode(&slope(8, 5)).unwrap(), Word::fib_power(4));
        assert_eq!(encode(&slope(1, 7)).unwrap().to_string(), "t6");
        assert_eq!(encode(&slope(7, 1)).unwrap().to_string(), "st6");
    }

    #[test]
    fn encode_huge_quotient_is_reported() {
        let p = BigUint::from(u64::MAX) * 4u32 + 1u32;
        let s = Slope::new(1u32, p).unwrap();
        assert_eq!(encode(&s), Err(Error::TooLarge("tau run")));
    }

    #[test]
    fn statistics() {
        let w = word("tstst");
        assert_eq!((w.n_sigma(), w.n_tau(), w.len()), (2, 3, 5));
        let e = Word::empty();
        assert_eq!((e.n_sigma(), e.n_tau(), e.len()), (0, 0, 0));
        let f = Word::fib_power(4);
        assert_eq!((f.n_sigma(), f.n_tau(), f.len()), (4, 4, 8));
    }

    #[test]
    fn fib_power_examples() {
        assert_eq!(fib_power(0), (Word::empty(), Slope::one()));
        assert_eq!(fib_power(1).1, slope(2, 1));
        let (w, s) = fib_power(4);
        assert_eq!(s, slope(8, 5));
        assert_eq!(w.apply(&Slope::one()), s);
    }

    #[test]
    fn golden_ratio_error_examples() {
        let e1 = golden_ratio_error(1).unwrap();
        assert!((e1 - (2.0 - PHI)).abs() < 1e-15);
        assert!((e1 - 0.381_966).abs() < 1e-6);
        let e2 = golden_ratio_error(2).unwrap();
        assert!((e2 - (PHI - 1.5)).abs() < 1e-15);
        assert!((e2 - 0.118_034).abs() < 1e-6);
        assert!(golden_ratio_error(20).unwrap() < 1e-8);
        assert!(golden_ratio_error(0).is_err());
        assert_eq!(PHI, (1.0 + 5f64.sqrt()) / 2.0);
    }

    #[test]
    fn golden_ratio_error_matches_direct_difference_while_resolvable() {
        // the direct double difference is accurate while the error dwarfs 1 ulp
        for k in 1..=12 {
            let direct = (fib_power(k).1.to_f64() - PHI).abs();
            let stable = golden_ratio_error(k).unwrap();
            assert!((direct - stable).abs() <= 1e-14, "k = {k}");
        }
    }

    #[test]
    fn golden_ratio_error_strictly_decreases() {
        let errs: Vec<f64> = (1..=61).map(|k| golden_ratio_error(k).unwrap()).collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Word::empty().to_string(), "e");
        assert_eq!(word("ttst").to_string(), "t2st");
        assert_eq!(word("t2st"), word("ttst"));
        assert_eq!(word("t2t3"), Word::tau_power(5));
        assert_eq!(word("st10").to_string(), "st10");
        assert_eq!(word("e"), Word::empty());
    }

    #[test]
    fn parse_rejections() {
        for bad in ["", "s", "ts", "sst", "s2t", "t0", "tst0", "x", "T", "2t", "te", "et", "t s", "t-1"] {
            let err = bad.parse::<Word>().unwrap_err();
            assert!(err.is_usage(), "{bad:?} gave {err:?}");
        }
    }

    #[test]
    fn word_new_validation() {
        assert!(Word::new(true, vec![]).is_err());
        assert!(Word::new(false, vec![1, 0]).is_err());
        assert!(Word::new(false, vec![u64::MAX, 1]).is_err());
        assert_eq!(Word::new(true, vec![2, 1]).unwrap().to_string(), "st2st");
    }

    #[test]
    fn from_symbols_roundtrip() {
        for text in ["t", "st", "t3st2", "st5st"] {
            let w = word(text);
            assert_eq!(Word::from_symbols(w.symbols()).unwrap(), w);
        }
        use Symbol::*;
        assert!(Word::from_symbols([Sigma, Sigma, Tau]).is_err());
        assert!(Word::from_symbols([Tau, Sigma]).is_err());
        assert_eq!(Word::from_symbols([]).unwrap(), Word::empty());
    }
}
