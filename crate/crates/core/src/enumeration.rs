//! Counting and listing canonical words by length, their lattice endpoints,
//! the single-σ families and the Euclid step-count grid.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::{step_count, Slope};
use crate::word::{encode, Word};

/// Default upper bound on word length for the listing functions.
pub const DEFAULT_LENGTH_CAP: u64 = 30;

/// Default upper bound on the side of a [`StepGrid`].
pub const DEFAULT_GRID_CAP: u64 = 10_000;

/// Fibonacci numbers with `F_0 = F_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibSequence {
    values: Vec<BigUint>,
}

impl FibSequence {
    /// `F_0 ..= F_n`.
    pub fn up_to(n: usize) -> Self {
        let mut values = vec![BigUint::one(), BigUint::one()];
        while values.len() <= n {
            let next = &values[values.len() - 1] + &values[values.len() - 2];
            values.push(next);
        }
        values.truncate(n + 1);
        FibSequence { values }
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// `F_n` with `F_0 = F_1 = 1`.
pub fn fibonacci(n: usize) -> BigUint {
    FibSequence::up_to(n).values.pop().expect("non-empty")
}

/// Counts of length-`n` strings over {σ, τ} with no σσ factor, split by the
/// last symbol: `(M_σ(n), M_τ(n))`. A σ may only follow a τ since `σ² = id`.
fn ending_counts(n: u64) -> (BigUint, BigUint) {
    let (mut m_sigma, mut m_tau) = (BigUint::one(), BigUint::one());
    for _ in 1..n {
        let next_tau = &m_sigma + &m_tau;
        m_sigma = std::mem::replace(&mut m_tau, next_tau);
    }
    (m_sigma, m_tau)
}

/// Number of canonical words of length `n`, which is `F_n`.
///
/// Canonical words are exactly the σσ-free strings whose last symbol is τ, so
/// the count is `M_τ(n)`.
pub fn count_words(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    ending_counts(n).1
}

/// Number of σσ-free strings of length `n` when σ may also stand last,
/// `M_σ(n) + M_τ(n) = F_{n+1}`.
pub fn count_words_sigma_first_allowed(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::NotPositive("word length"));
    }
    let (m_sigma, m_tau) = ending_counts(n);
    Ok(m_sigma + m_tau)
}

fn check_cap(what: &'static str, value: u64, cap: u64) -> Result<()> {
    if value > cap {
        return Err(Error::CapExceeded { what, value, cap });
    }
    Ok(())
}

/// All canonical words of length `n`, sorted by their rendered text.
pub fn words_of_length(n: u64) -> Result<Vec<Word>> {
    words_of_length_capped(n, DEFAULT_LENGTH_CAP)
}

pub fn words_of_length_capped(n: u64, cap: u64) -> Result<Vec<Word>> {
    check_cap("word length", n, cap)?;
    if n == 0 {
        return Ok(vec![Word::empty()]);
    }
    let mut out = Vec::new();
    let mut runs = Vec::new();
    // j = 0 uses all n symbols for runs and separators; j = 1 spends one on σ
    compositions(n, &mut runs, &mut |runs| out.push(Word::new(false, runs.to_vec())));
    compositions(n - 1, &mut runs, &mut |runs| out.push(Word::new(true, runs.to_vec())));
    let mut keyed: Vec<(String, Word)> = out
        .into_iter()
        .map(|w| {
            let w = w.expect("generated runs are valid");
            (w.to_string(), w)
        })
        .collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, w)| w).collect())
}

/// Calls `emit` with every run list `[n₁, …, n_k]` (k ≥ 1, nᵢ ≥ 1) such that
/// `Σ nᵢ + (k − 1) = remaining`.
fn compositions(remaining: u64, runs: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    if remaining == 0 {
        return;
    }
    // the last run takes everything
    runs.push(remaining);
    emit(runs);
    runs.pop();
    // or a run of n followed by σ and at least one more symbol
    for n in 1..remaining.saturating_sub(1) {
        runs.push(n);
        compositions(remaining - n - 1, runs, emit);
        runs.pop();
    }
}

/// A lattice point `(p, q)` together with the word that reaches it from `1/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoint {
    pub word: Word,
    pub p: BigUint,
    pub q: BigUint,
}

impl Endpoint {
    pub fn from_word(word: Word) -> Self {
        let s = word.apply(&Slope::one());
        Endpoint {
            p: s.denom().clone(),
            q: s.numer().clone(),
            word,
        }
    }

    /// Strictly below the diagonal `q = p` with `x = p`, `y = q`.
    pub fn is_below_diagonal(&self) -> bool {
        self.q < self.p
    }
}

/// Endpoints of every canonical word of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointSet {
    pub n: u64,
    pub points: Vec<Endpoint>,
}

impl EndpointSet {
    pub fn below_diagonal(&self) -> usize {
        self.points.iter().filter(|e| e.is_below_diagonal()).count()
    }
}

pub fn endpoints_of_length(n: u64) -> Result<EndpointSet> {
    endpoints_of_length_capped(n, DEFAULT_LENGTH_CAP)
}

pub fn endpoints_of_length_capped(n: u64, cap: u64) -> Result<EndpointSet> {
    if n == 0 {
        return Err(Error::NotPositive("word length"));
    }
    let points = words_of_length_capped(n, cap)?
        .into_iter()
        .map(Endpoint::from_word)
        .collect();
    Ok(EndpointSet { n, points })
}

/// `τ^n₁ σ τ^n₂ (1/1) = (n₂+1) / (n₁(n₂+1) + 1)`.
pub fn single_sigma_slope(n1: u64, n2: u64) -> Result<Slope> {
    if n2 == 0 {
        return Err(Error::NotPositive("n2"));
    }
    let q = BigUint::from(n2) + 1u32;
    let p = &q * n1 + 1u32;
    // p ≡ 1 (mod q), so the pair is coprime
    Ok(Slope::new_unchecked(q, p))
}

/// Points on the line through `(1, 0)` with slope `1/n₁`, up to `p ≤ p_max`.
///
/// The point with `q = 1` is `τ^n₁(1/1)`; every other point comes from
/// [`single_sigma_slope`] with `n₂ = q − 1`.
pub fn family_line_points(n1: u64, p_max: u64) -> Result<Vec<Endpoint>> {
    if n1 == 0 {
        return Err(Error::NotPositive("n1"));
    }
    if p_max < 2 {
        return Err(Error::BelowMinimum {
            what: "p_max",
            value: p_max,
            min: 2,
        });
    }
    let mut out = Vec::new();
    let mut q = 1u64;
    while n1.checked_mul(q).and_then(|v| v.checked_add(1)).is_some_and(|p| p <= p_max) {
        let point = if q == 1 {
            Endpoint::from_word(Word::tau_power(n1))
        } else {
            let slope = single_sigma_slope(n1, q - 1)?;
            Endpoint {
                word: Word::new(false, vec![n1, q - 1])?,
                p: slope.denom().clone(),
                q: slope.numer().clone(),
            }
        };
        out.push(point);
        q += 1;
    }
    Ok(out)
}

/// The largest `N_σ` over words of length `n`, `⌊n/2⌋`, and a word attaining
/// it: `(στ)^(n/2)` for even `n`, `τ(στ)^((n−1)/2)` for odd `n`.
pub fn max_n_sigma(n: u64) -> Result<(u64, Word)> {
    if n == 0 {
        return Err(Error::NotPositive("word length"));
    }
    let half = (n / 2) as usize;
    let witness = if n.is_multiple_of(2) {
        Word::fib_power(half)
    } else {
        Word::new(false, vec![1; half + 1])?
    };
    Ok((n / 2, witness))
}

/// Euclid division counts for every pair `1 ≤ p, q ≤ size`.
///
/// `cells(p, q)` is the step count of `euclid_trace(max(p,q), min(p,q))`.
/// Non-coprime pairs are included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepGrid {
    size: u32,
    cells: Vec<u8>,
}

impl StepGrid {
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Steps for `(p, q)`, both in `1..=size`.
    pub fn get(&self, p: u32, q: u32) -> u8 {
        assert!((1..=self.size).contains(&p) && (1..=self.size).contains(&q));
        self.cells[(p as usize - 1) * self.size as usize + (q as usize - 1)]
    }

    /// Row-major cells, `p` outer and `q` inner.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn max(&self) -> u8 {
        self.cells.iter().copied().max().unwrap_or(0)
    }

    /// All `(p, q)` attaining [`StepGrid::max`], in row-major order.
    pub fn argmax(&self) -> Vec<(u32, u32)> {
        let max = self.max();
        let n = self.size as usize;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == max)
            .map(|(i, _)| ((i / n) as u32 + 1, (i % n) as u32 + 1))
            .collect()
    }
}

pub fn step_grid(size: u64) -> Result<StepGrid> {
    step_grid_capped(size, DEFAULT_GRID_CAP)
}

/// Builds the grid row by row in parallel; the result does not depend on the
/// thread count.
pub fn step_grid_capped(size: u64, cap: u64) -> Result<StepGrid> {
    if size < 2 {
        return Err(Error::BelowMinimum {
            what: "grid size",
            value: size,
            min: 2,
        });
    }
    check_cap("grid size", size, cap)?;
    let n = u32::try_from(size).map_err(|_| Error::TooLarge("grid size"))?;
    let width = n as usize;
    let mut cells = vec![0u8; width * width];
    cells
        .par_chunks_mut(width)
        .enumerate()
        .for_each(|(row, out)| {
            let p = row as u64 + 1;
            for (col, cell) in out.iter_mut().enumerate() {
                let q = col as u64 + 1;
                // at most ~93 divisions for any u64 pair
                *cell = step_count(p.max(q), p.min(q)) as u8;
            }
        });
    Ok(StepGrid { size: n, cells })
}

/// The canonical word reaching the lattice point `(p, q)`.
pub fn encode_endpoint(p: &BigUint, q: &BigUint) -> Result<Word> {
    encode(&Slope::new(q.clone(), p.clone())?)
}
