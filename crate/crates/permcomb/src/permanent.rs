//! Exact permanent engines.
//!
//! Three interchangeable engines cover the practical range: full
//! permutation expansion (`naive`, the reference), Ryser's
//! inclusion-exclusion formula with Gray-code updates (`ryser`, the dense
//! workhorse around side 20-30), and row-by-row expansion memoized on the
//! set of used columns (`dp`, which skips zero entries and therefore flies
//! on the structured 0/1 families). All accumulation is arbitrary-precision
//! integer arithmetic; there is no floating point anywhere.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Which algorithm computed a permanent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Naive,
    Ryser,
    Dp,
}

impl Engine {
    pub fn label(self) -> &'static str {
        match self {
            Engine::Naive => "naive",
            Engine::Ryser => "ryser",
            Engine::Dp => "dp",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(Engine::Naive),
            "ryser" => Ok(Engine::Ryser),
            "dp" => Ok(Engine::Dp),
            _ => Err(Error::Unknown {
                kind: "engine",
                name: s.to_string(),
            }),
        }
    }
}

/// Size guards for the engines. The defaults keep any single call within
/// seconds and within a couple of GiB; raise them deliberately if you know
/// what you are asking for.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub naive_max: usize,
    pub ryser_max: usize,
    pub dp_max: usize,
    /// Rough byte budget for the dp bitmask table.
    pub dp_budget_bytes: u128,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            naive_max: 11,
            ryser_max: 30,
            dp_max: 28,
            dp_budget_bytes: 2 << 30,
        }
    }
}

/// A computed permanent together with the engine used and the wall time.
#[derive(Debug, Clone)]
pub struct PermanentResult {
    pub value: BigInt,
    pub engine: Engine,
    pub elapsed: Duration,
}

fn square_side(a: &IntMatrix) -> Result<usize> {
    a.side()
}

/// Permanent by summing over all permutations, with zero-entry pruning.
/// This is the reference implementation the other engines are checked
/// against; the factorial blowup limits it to small sides.
pub fn per_naive(a: &IntMatrix) -> Result<BigInt> {
    per_naive_with(a, &EngineConfig::default())
}

pub fn per_naive_with(a: &IntMatrix, cfg: &EngineConfig) -> Result<BigInt> {
    let n = square_side(a)?;
    if n > cfg.naive_max {
        return Err(Error::SizeGuard {
            engine: "naive",
            side: n,
            max: cfg.naive_max,
        });
    }
    let mut total = BigInt::zero();
    let mut product = BigInt::one();
    expand_rows(a, n, 0, 0, &mut product, &mut total);
    Ok(total)
}

// depth-first over rows; `used` is the bitmask of taken columns
fn expand_rows(
    a: &IntMatrix,
    n: usize,
    row: usize,
    used: u32,
    product: &mut BigInt,
    total: &mut BigInt,
) {
    if row == n {
        *total += &*product;
        return;
    }
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = a.get(row + 1, col + 1);
        if entry.is_zero() {
            continue;
        }
        let saved = product.clone();
        *product *= entry;
        expand_rows(a, n, row + 1, used | (1 << col), product, total);
        *product = saved;
    }
}

/// Permanent by Ryser's inclusion-exclusion formula,
/// `(-1)^n * sum over nonempty column subsets S of
/// (-1)^|S| * prod_i sum_{j in S} a[i][j]`,
/// visiting subsets in binary-reflected Gray-code order so each step
/// updates the running row sums by a single column.
pub fn per_ryser(a: &IntMatrix) -> Result<BigInt> {
    per_ryser_with(a, &EngineConfig::default())
}

pub fn per_ryser_with(a: &IntMatrix, cfg: &EngineConfig) -> Result<BigInt> {
    let n = square_side(a)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    if n > cfg.ryser_max {
        return Err(Error::SizeGuard {
            engine: "ryser",
            side: n,
            max: cfg.ryser_max,
        });
    }
    // nonzero entries of each column, for sparse-friendly updates
    let col_entries: Vec<Vec<(usize, &BigInt)>> = (1..=n)
        .map(|j| {
            (1..=n)
                .filter_map(|i| {
                    let v = a.get(i, j);
                    (!v.is_zero()).then_some((i - 1, v))
                })
                .collect()
        })
        .collect();

    let mut sums = vec![BigInt::zero(); n];
    let mut mask: u64 = 0;
    let mut odd = false;
    let mut total = BigInt::zero();
    for k in 1u64..(1u64 << n) {
        let j = k.trailing_zeros() as usize;
        let bit = 1u64 << j;
        mask ^= bit;
        if mask & bit != 0 {
            for &(i, v) in &col_entries[j] {
                sums[i] += v;
            }
        } else {
            for &(i, v) in &col_entries[j] {
                sums[i] -= v;
            }
        }
        odd = !odd;
        let mut product = BigInt::one();
        let mut vanished = false;
        for s in &sums {
            if s.is_zero() {
                vanished = true;
                break;
            }
            product *= s;
        }
        if vanished {
            continue;
        }
        if odd {
            total -= product;
        } else {
            total += product;
        }
    }
    if n % 2 == 1 {
        total = -total;
    }
    Ok(total)
}

/// Permanent by expansion along the rows, memoized on the bitmask of used
/// columns. Zero entries are skipped, so structured sparse families run far
/// below the dense bound.
pub fn per_dp(a: &IntMatrix) -> Result<BigInt> {
    per_dp_with(a, &EngineConfig::default())
}

pub fn per_dp_with(a: &IntMatrix, cfg: &EngineConfig) -> Result<BigInt> {
    let n = square_side(a)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    if n > cfg.dp_max {
        return Err(Error::SizeGuard {
            engine: "dp",
            side: n,
            max: cfg.dp_max,
        });
    }
    let required = (1u128 << n) * std::mem::size_of::<BigInt>() as u128;
    if required > cfg.dp_budget_bytes {
        return Err(Error::MemoryBudget {
            side: n,
            required,
            budget: cfg.dp_budget_bytes,
        });
    }
    // table[mask] = permanent of the first popcount(mask) rows restricted
    // to the columns in mask; masks are filled in increasing order, so
    // every predecessor (one bit fewer) is already final.
    let full = 1usize << n;
    let mut table = vec![BigInt::zero(); full];
    table[0] = BigInt::one();
    for mask in 1..full {
        let row = mask.count_ones() as usize; // 1-based row index
        let mut acc = BigInt::zero();
        let mut rest = mask;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let entry = a.get(row, j + 1);
            if entry.is_zero() {
                continue;
            }
            let prev = &table[mask ^ (1 << j)];
            if !prev.is_zero() {
                acc += entry * prev;
            }
        }
        table[mask] = acc;
    }
    Ok(table[full - 1].clone())
}

/// Computes the permanent, choosing an engine by size when none is given
/// (naive up to 8, dp up to 24, Ryser beyond), and records the wall time.
pub fn per(a: &IntMatrix, engine: Option<Engine>) -> Result<PermanentResult> {
    per_with(a, engine, &EngineConfig::default())
}

pub fn per_with(
    a: &IntMatrix,
    engine: Option<Engine>,
    cfg: &EngineConfig,
) -> Result<PermanentResult> {
    let n = square_side(a)?;
    let engine = engine.unwrap_or(if n <= 8 {
        Engine::Naive
    } else if n <= 24 {
        Engine::Dp
    } else {
        Engine::Ryser
    });
    let start = Instant::now();
    let value = match engine {
        Engine::Naive => per_naive_with(a, cfg)?,
        Engine::Ryser => per_ryser_with(a, cfg)?,
        Engine::Dp => per_dp_with(a, cfg)?,
    };
    Ok(PermanentResult {
        value,
        engine,
        elapsed: start.elapsed(),
    })
}

/// Permanents of the minors obtained by deleting the bottom row and column
/// `i`, for `i = 1..=n`. When the bottom row is all ones these sum to the
/// permanent of the whole matrix.
pub fn bottom_row_minor_permanents(a: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = square_side(a)?;
    if n == 0 {
        return Err(Error::Domain("matrix must have at least one row".into()));
    }
    (1..=n)
        .map(|i| Ok(per(&a.minor(n, i)?, None)?.value))
        .collect()
}
