//! Griesmer-bound inequalities for binary codes and the threshold checks
//! built on them. Logarithms and square roots are never evaluated; every
//! comparison is reduced to integer powers.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{ceil_div, floor_log2};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodingError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("logarithm base {num}/{den} is not above 1")]
    BaseNotAboveOne { num: u64, den: u64 },
    #[error("the range selects no dimensions")]
    EmptyRange,
    #[error("[{length},{dimension}] is beyond exhaustive reach (length ≤ 14, dimension ≤ 4)")]
    SizeCap { length: usize, dimension: usize },
}

/// Parameters `(n, s, c, j)` of the involution-existence inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GriesmerQuery {
    pub n: u64,
    pub s: u64,
    pub c: u64,
    pub j: u64,
}

impl GriesmerQuery {
    pub fn new(n: u64, s: u64, c: u64, j: u64) -> Result<Self, CodingError> {
        if n == 0 || c == 0 || j == 0 || s < j {
            return Err(CodingError::InvalidQuery(format!(
                "need n ≥ 1, c ≥ 1 and s ≥ j ≥ 1, got n={n} s={s} c={c} j={j}"
            )));
        }
        if c > n + 1 {
            return Err(CodingError::InvalidQuery(format!("c = {c} exceeds n + 1 = {}", n + 1)));
        }
        Ok(GriesmerQuery { n, s, c, j })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GriesmerOutcome {
    pub lhs: i64,
    pub rhs: u64,
    pub holds: bool,
    /// `n` even: the inequality is stated with `⌊n/2⌋`, which only matches
    /// its derivation for odd `n`.
    pub even_n: bool,
}

/// `⌊n/2⌋ − (j−1) < Σ_{i=0}^{s−j} ⌈⌈(n−c+1)/2⌉ / 2^{i+1}⌉`.
pub fn griesmer_inequality(q: GriesmerQuery) -> GriesmerOutcome {
    let lhs = (q.n / 2) as i64 - (q.j as i64 - 1);
    let half = ceil_div(q.n + 1 - q.c, 2);
    let terms = q.s - (q.j - 1);
    let rhs = (0..terms).map(|i| ceil_div(half, 1u64 << (i + 1).min(63))).sum::<u64>();
    GriesmerOutcome { lhs, rhs, holds: lhs < rhs as i64, even_n: q.n % 2 == 0 }
}

/// `s + 2 > log₂(n+1) + B − log₂(B+1)` with `B = ⌊log₂(n−1)⌋ − 2`, decided as
/// `2^{s+2}(B+1) > (n+1)·2^B`.
pub fn log_threshold_inequality(n: u64, s: u64) -> Result<bool, CodingError> {
    if n < 5 {
        return Err(CodingError::InvalidQuery(format!("n = {n} < 5")));
    }
    let b = floor_log2(n - 1) - 2;
    let lhs = (BigUint::from(1u8) << (s + 2)) * BigUint::from(b + 1);
    let rhs = BigUint::from(n + 1) << b;
    Ok(lhs > rhs)
}

/// `s ≥ log_{num/den}(x)`, i.e. `num^s ≥ x·den^s` (or the reciprocal form
/// for negative `s`).
pub fn exact_log_ge(base_num: u64, base_den: u64, s: i64, x: u64) -> Result<bool, CodingError> {
    if base_den == 0 || base_num <= base_den {
        return Err(CodingError::BaseNotAboveOne { num: base_num, den: base_den });
    }
    let e = s.unsigned_abs() as u32;
    let num = BigUint::from(base_num).pow(e);
    let den = BigUint::from(base_den).pow(e);
    let x = BigUint::from(x);
    Ok(if s >= 0 { num >= x * den } else { den >= x * num })
}

/// `s ≥ √x − 2`, i.e. `s + 2 ≥ 0` and `(s+2)² ≥ x`.
pub fn exact_sqrt_ge(s: i64, x: u64) -> bool {
    let t = s as i128 + 2;
    t >= 0 && t * t >= x as i128
}

/// Least `s ≥ 0` with `s ≥ log_{4/3}(n+3) − 8`.
pub fn min_s_log(n: u64) -> u64 {
    (0..).find(|&s| exact_log_ge(4, 3, s as i64 + 8, n + 3).unwrap()).unwrap()
}

/// Least `s ≥ 0` with `s ≥ √n − 2`.
pub fn min_s_sqrt(n: u64) -> u64 {
    (0..).find(|&s| exact_sqrt_ge(s as i64, n)).unwrap()
}

/// Number of involutions `j = ⌊log₂(n/4)⌋` sought for dimension `n`.
pub fn involution_count(n: u64) -> u64 {
    (floor_log2(n) as u64).saturating_sub(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariant {
    /// `s ≥ log_{4/3}(n+3) − 8`.
    Log,
    /// `s ≥ √n − 2`.
    Sqrt,
}

impl std::str::FromStr for SweepVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "log" => Ok(SweepVariant::Log),
            "sqrt" => Ok(SweepVariant::Sqrt),
            other => Err(format!("unknown variant {other:?}, expected log or sqrt")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u64,
    pub s_min: u64,
    pub j: u64,
    pub lhs: i64,
    pub rhs: u64,
    /// Outcome of the Griesmer inequality at `c = 1`.
    pub pass: bool,
    /// Outcome of the logarithmic threshold inequality at the same `s`.
    pub log_threshold: bool,
}

fn sweep_row(n: u64, s: u64, j: u64) -> Result<SweepRow, CodingError> {
    let g = griesmer_inequality(GriesmerQuery::new(n, s, 1, j)?);
    Ok(SweepRow { n, s_min: s, j, lhs: g.lhs, rhs: g.rhs, pass: g.holds, log_threshold: log_threshold_inequality(n, s)? })
}

/// One row per odd `n` in `[n_min, n_max]` (optionally only `n ≡ 1 mod 4`),
/// with the minimal `s` allowed by the variant's hypothesis and `c = 1`.
pub fn cor_ak_sweep(
    n_min: u64,
    n_max: u64,
    variant: SweepVariant,
    only_1_mod_4: bool,
) -> Result<Vec<SweepRow>, CodingError> {
    let ns: Vec<u64> = (n_min.max(1)..=n_max)
        .filter(|n| n % 2 == 1 && (!only_1_mod_4 || n % 4 == 1))
        .collect();
    if ns.is_empty() {
        return Err(CodingError::EmptyRange);
    }
    if ns[0] < 9 {
        return Err(CodingError::InvalidQuery(format!("sweeps need n ≥ 9 so that j ≥ 1, got {}", ns[0])));
    }
    ns.into_par_iter()
        .map(|n| {
            let s = match variant {
                SweepVariant::Log => min_s_log(n),
                SweepVariant::Sqrt => min_s_sqrt(n),
            };
            let j = involution_count(n);
            if s < j {
                return Err(CodingError::InvalidQuery(format!("n = {n}: s_min = {s} < j = {j}")));
            }
            sweep_row(n, s, j)
        })
        .collect()
}

/// The dimension-33 case: `k₀ = 4`, `j = 2`, minimal `s ≥ √33 − 2`.
pub fn dimension_33_row() -> SweepRow {
    sweep_row(33, min_s_sqrt(33), 2).expect("valid query")
}

/// `Σ_{i=0}^{k−1} ⌈d/2^i⌉`, the least length of a binary `[·,k,d]` code.
pub fn griesmer_bound(k: u64, d: u64) -> u64 {
    (0..k).map(|i| ceil_div(d, 1u64 << i.min(63))).sum()
}

/// Largest `d` with `griesmer_bound(k, d) ≤ n`.
pub fn griesmer_max_distance(n: u64, k: u64) -> u64 {
    (1..=n).take_while(|&d| griesmer_bound(k, d) <= n).last().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeOracleResult {
    pub length: usize,
    pub dimension: usize,
    pub best_distance: u64,
    pub griesmer_max_distance: u64,
    /// Generator columns of one optimal code, as bit masks of length
    /// `dimension`.
    pub witness: Vec<u32>,
    pub codes_examined: u64,
}

pub const ORACLE_MAX_LENGTH: usize = 14;
pub const ORACLE_MAX_DIMENSION: usize = 4;

/// Best minimum distance of a binary `[length, dimension]` code, found by
/// exhaustive search.
///
/// Every full-rank generator matrix is equivalent, under column permutation
/// and change of basis, to one whose first `dimension` columns are the unit
/// vectors; the remaining columns are then an arbitrary multiset of nonzero
/// vectors of `F_2^dimension`. The search walks these multisets with the
/// weights of all `2^dimension − 1` nonzero codewords kept up to date, so a
/// codeword `m` gains weight from column `v` exactly when `⟨m, v⟩ = 1`.
pub fn brute_force_code_oracle(length: usize, dimension: usize) -> Result<CodeOracleResult, CodingError> {
    if dimension == 0 || length < dimension || length > ORACLE_MAX_LENGTH || dimension > ORACLE_MAX_DIMENSION {
        return Err(CodingError::SizeCap { length, dimension });
    }
    let k = dimension;
    let messages: Vec<u32> = (1..1u32 << k).collect();
    let mut weights: Vec<u64> = messages.iter().map(|m| m.count_ones() as u64).collect();
    let mut state = Search { best: 0, witness: Vec::new(), examined: 0 };
    let mut columns: Vec<u32> = (0..k).map(|i| 1u32 << i).collect();
    extend(&messages, &mut weights, &mut columns, 1, length - k, &mut state);
    Ok(CodeOracleResult {
        length,
        dimension,
        best_distance: state.best,
        griesmer_max_distance: griesmer_max_distance(length as u64, k as u64),
        witness: state.witness,
        codes_examined: state.examined,
    })
}

struct Search {
    best: u64,
    witness: Vec<u32>,
    examined: u64,
}

fn extend(messages: &[u32], weights: &mut [u64], columns: &mut Vec<u32>, from: u32, left: usize, st: &mut Search) {
    if left == 0 {
        st.examined += 1;
        let d = *weights.iter().min().unwrap();
        if d > st.best {
            st.best = d;
            st.witness = columns.clone();
        }
        return;
    }
    // nonzero columns are 1..2^k and there are 2^k − 1 messages
    let top = messages.len() as u32 + 1;
    for v in from..top {
        for (w, &m) in weights.iter_mut().zip(messages) {
            *w += ((m & v).count_ones() & 1) as u64;
        }
        columns.push(v);
        extend(messages, weights, columns, v, left - 1, st);
        columns.pop();
        for (w, &m) in weights.iter_mut().zip(messages) {
            *w -= ((m & v).count_ones() & 1) as u64;
        }
    }
}

/// Minimum distance of the code spanned by the rows of a generator matrix
/// given as columns (bit masks over the rows).
pub fn minimum_distance(columns: &[u32], dimension: usize) -> u64 {
    (1..1u32 << dimension)
        .map(|m| columns.iter().filter(|&&v| (m & v).count_ones() % 2 == 1).count() as u64)
        .min()
        .unwrap_or(0)
}
