//! Exact integer and rational sequences: Bernoulli, Genocchi (first kind),
//! median Genocchi (second kind), normalized median Genocchi, Euler numbers
//! and the Kreweras triangle.
//!
//! Everything is computed by integer/rational recurrences and memoized for
//! the lifetime of the process.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn bernoulli_cache() -> &'static Mutex<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// Bernoulli number `B_n` in the convention with `B_1 = -1/2`, from the
/// recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
pub fn bernoulli(n: usize) -> BigRational {
    let mut cache = bernoulli_cache().lock().unwrap();
    while cache.len() <= n {
        let m = cache.len(); // computing B_m
        let mut acc = BigRational::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += BigRational::from(binomial(m + 1, k)) * b;
        }
        let value = -acc / BigRational::from(BigInt::from(m + 1));
        cache.push(value);
    }
    cache[n].clone()
}

/// Genocchi number of the first kind, `G_n = 2 (1 - 2^n) B_n`. The result
/// is provably an integer; a failed integrality check signals an arithmetic
/// bug and is surfaced as an error rather than a wrong value.
pub fn genocchi(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("Genocchi numbers start at index 1".into()));
    }
    let factor = BigRational::from(BigInt::from(2) * (BigInt::one() - (BigInt::one() << n)));
    let value = factor * bernoulli(n);
    if !value.is_integer() {
        return Err(Error::NotInteger(format!("G_{n} evaluated to {value}")));
    }
    Ok(value.to_integer())
}

/// Median Genocchi number `H_(2n-1)` via the binomial transform
/// `H_(2n-1) = (-1)^n sum_{j} C(n, 2j+1) G_(2n-2j)`.
pub fn median_genocchi(odd_index: usize) -> Result<BigInt> {
    if odd_index == 0 || odd_index % 2 == 0 {
        return Err(Error::Domain(format!(
            "median Genocchi numbers are indexed by odd integers, got {odd_index}"
        )));
    }
    let n = (odd_index + 1) / 2;
    let mut acc = BigInt::zero();
    for j in 0..=(n - 1) / 2 {
        acc += binomial(n, 2 * j + 1) * genocchi(2 * n - 2 * j)?;
    }
    if n % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// Normalized median Genocchi number `h_n = H_(2n+1) / 2^n`. The division
/// is exact; a failed divisibility check signals an arithmetic bug.
pub fn normalized_median_genocchi(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("normalized indices start at 1".into()));
    }
    let h = median_genocchi(2 * n + 1)?;
    let pow = BigInt::one() << n;
    if (&h % &pow) != BigInt::zero() {
        return Err(Error::NotDivisible(format!(
            "H_{} = {h} is not divisible by 2^{n}",
            2 * n + 1
        )));
    }
    Ok(h / pow)
}

struct EulerCache {
    // latest boustrophedon row, i.e. entries T(n, 0..=n)
    row: Vec<BigInt>,
    values: Vec<BigInt>,
}

fn euler_cache() -> &'static Mutex<EulerCache> {
    static CACHE: OnceLock<Mutex<EulerCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(EulerCache {
            row: vec![BigInt::one()],
            values: vec![BigInt::one()],
        })
    })
}

/// Euler number `E_n` (coefficients of `sec x + tan x`), generated by the
/// boustrophedon triangle `T(n, k) = T(n, k-1) + T(n-1, n-k)` with
/// `T(0, 0) = 1`; integer arithmetic only.
pub fn euler_number(n: usize) -> BigInt {
    let mut cache = euler_cache().lock().unwrap();
    while cache.values.len() <= n {
        let m = cache.values.len(); // building row m
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigInt::zero());
        for k in 1..=m {
            let v = &next[k - 1] + &cache.row[m - k];
            next.push(v);
        }
        cache.values.push(next[m].clone());
        cache.row = next;
    }
    cache.values[n].clone()
}

/// One row of the Kreweras triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrewerasRow {
    pub m: usize,
    /// `2m - 1` positive values.
    pub values: Vec<BigInt>,
}

impl KrewerasRow {
    pub fn sum(&self) -> BigInt {
        self.values.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let rev: Vec<_> = self.values.iter().rev().cloned().collect();
        rev == self.values
    }
}

fn kreweras_cache() -> &'static Mutex<Vec<Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]))
}

/// Row `m` of the Kreweras triangle, computed purely from the two
/// alternating recurrences
///
/// ```text
/// T(m, 2k-1) = T(m, 2k-2) + sum_{i=2k-2}^{2m-3} T(m-1, i)
/// T(m, 2k)   = T(m, 2k-1) - sum_{i=1}^{2k-2}    T(m-1, i)
/// ```
///
/// with out-of-range entries of the previous row read as 0 and base row
/// `(1)`. Row `m` also equals the bottom-row minor permanents of the
/// reduced 0/1 matrix of side `2m - 1`, and entry `k` counts the
/// descent-parity-constrained permutations of `2m + 1` letters whose first
/// letter is `k + 1`.
pub fn kreweras_row(m: usize) -> Result<KrewerasRow> {
    if m == 0 {
        return Err(Error::Domain("Kreweras rows start at m = 1".into()));
    }
    let mut cache = kreweras_cache().lock().unwrap();
    while cache.len() < m {
        let cur = cache.len() + 1; // building row `cur`
        let prev = &cache[cur - 2];
        let prev_len = prev.len() as isize; // = 2*cur - 3
        let at = |i: isize| -> BigInt {
            if i >= 1 && i <= prev_len {
                prev[(i - 1) as usize].clone()
            } else {
                BigInt::zero()
            }
        };
        let size = 2 * cur - 1;
        let mut row: Vec<BigInt> = Vec::with_capacity(size);
        for pos in 1..=size {
            let left = if pos == 1 {
                BigInt::zero()
            } else {
                row[pos - 2].clone()
            };
            let value = if pos % 2 == 1 {
                let k = (pos + 1) / 2;
                let mut acc = left;
                for i in (2 * k as isize - 2)..=(2 * cur as isize - 3) {
                    acc += at(i);
                }
                acc
            } else {
                let k = pos / 2;
                let mut acc = left;
                for i in 1..=(2 * k as isize - 2) {
                    acc -= at(i);
                }
                acc
            };
            row.push(value);
        }
        cache.push(row);
    }
    Ok(KrewerasRow {
        m,
        values: cache[m - 1].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_known_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for n in 1..=10 {
            assert!(bernoulli(2 * n + 1).is_zero(), "B_{}", 2 * n + 1);
        }
    }

    #[test]
    fn bernoulli_genocchi_cross_check() {
        // 2 (2^4 - 1) B_4 = -1 = -G_4 and 2 (2^6 - 1) B_6 = 3 = -G_6
        assert_eq!(
            BigRational::from(BigInt::from(2 * 15)) * bernoulli(4),
            rat(-1, 1)
        );
        assert_eq!(
            BigRational::from(BigInt::from(2 * 63)) * bernoulli(6),
            rat(3, 1)
        );
    }

    #[test]
    fn genocchi_known_values() {
        let g = |n| genocchi(n).unwrap().to_i64().unwrap();
        assert_eq!(g(1), 1);
        assert_eq!(g(2), -1);
        assert_eq!(g(4), 1);
        assert_eq!(g(6), -3);
        assert_eq!(g(8), 17);
        assert_eq!(g(10), -155);
        assert_eq!(g(12), 2073);
        assert_eq!(g(5), 0);
        assert!(genocchi(0).is_err());
    }

    #[test]
    fn genocchi_signs() {
        // odd indices beyond 1 vanish; (-1)^n G_2n is positive
        for n in 1..=12 {
            assert!(genocchi(2 * n + 1).unwrap().is_zero());
            let signed = genocchi(2 * n).unwrap() * if n % 2 == 1 { -1 } else { 1 };
            assert!(signed > BigInt::zero(), "G_{}", 2 * n);
        }
    }

    #[test]
    fn median_genocchi_known_values() {
        let h = |i| median_genocchi(i).unwrap().to_i64().unwrap();
        assert_eq!(h(1), 1);
        assert_eq!(h(3), 2);
        assert_eq!(h(5), 8);
        assert_eq!(h(7), 56);
        assert_eq!(h(9), 608);
        assert_eq!(h(11), 9440);
        assert!(median_genocchi(4).is_err());
        assert!(median_genocchi(0).is_err());
    }

    #[test]
    fn normalized_median_genocchi_values() {
        let hn = |n| normalized_median_genocchi(n).unwrap().to_i64().unwrap();
        assert_eq!(hn(1), 1);
        assert_eq!(hn(2), 2);
        assert_eq!(hn(3), 7);
        assert_eq!(hn(4), 38);
        assert_eq!(hn(5), 295);
        // divisibility holds well past the values used elsewhere
        for n in 1..=12 {
            assert!(normalized_median_genocchi(n).is_ok(), "h_{n}");
        }
    }

    #[test]
    fn euler_known_values() {
        let want = [
            1i64, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765,
        ];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(euler_number(n), BigInt::from(*w), "E_{n}");
        }
    }

    #[test]
    fn kreweras_rows_match_triangle() {
        let row = |m: usize| -> Vec<i64> {
            kreweras_row(m)
                .unwrap()
                .values
                .iter()
                .map(|v| v.to_i64().unwrap())
                .collect()
        };
        assert_eq!(row(1), vec![1]);
        assert_eq!(row(2), vec![1, 1, 1]);
        assert_eq!(row(3), vec![3, 3, 5, 3, 3]);
        assert_eq!(row(4), vec![17, 17, 31, 25, 31, 17, 17]);
        assert_eq!(
            row(5),
            vec![155, 155, 293, 259, 349, 259, 293, 155, 155]
        );
        assert!(kreweras_row(0).is_err());
    }

    #[test]
    fn kreweras_rows_are_palindromic_and_sum_to_genocchi() {
        for m in 1..=8usize {
            let row = kreweras_row(m).unwrap();
            assert_eq!(row.values.len(), 2 * m - 1);
            assert!(row.is_palindromic(), "m={m}");
            assert!(row.values.iter().all(|v| v > &BigInt::zero()));
            // row sum equals |G_(2m+2)|
            assert_eq!(row.sum(), genocchi(2 * m + 2).unwrap().abs(), "m={m}");
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(4, 5), BigInt::zero());
    }
}
