//! Permutations, their statistics, restricted classes and bijections.
//!
//! Everything here is brute force by design: the enumerators serve as the
//! independent oracles the permanent identities are checked against, so
//! correctness and directness beat cleverness. Enumeration is
//! lexicographic-successor based and classes are plain predicate filters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest length enumerated by the class-level operations (`n!` blowup).
pub const MAX_ENUM_LEN: usize = 10;
/// Largest length for the first-letter triangle counts (odd lengths only).
pub const MAX_TRIANGLE_LEN: usize = 11;
/// Largest size for dot-tableau counting.
pub const MAX_DELLAC_SIZE: usize = 6;

/// A permutation of `[n] = {1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection on `[n]`.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `pi(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.images.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { images: inv }
    }

    /// Number of excedances, `#{i : pi(i) > i}`.
    pub fn exc(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .count()
    }

    /// Excedances of the inverse.
    pub fn iexc(&self) -> usize {
        self.inverse().exc()
    }

    /// Number of weak excedances, `#{i : pi(i) >= i}`.
    pub fn wexc(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v >= i + 1)
            .count()
    }

    /// Number of fixed points.
    pub fn fix(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i + 1)
            .count()
    }

    pub fn is_derangement(&self) -> bool {
        self.fix() == 0
    }

    /// Descent set `{i < n : pi(i) > pi(i+1)}` (1-based positions).
    pub fn des_set(&self) -> Vec<usize> {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Parity-twisted excedance count: position `i` counts when
    /// `pi(i) > i` with `pi(i) - i` odd, or `pi(i) < i` with `pi(i) - i`
    /// even. This is the statistic matching the sign pattern of the
    /// checkerboard-twisted inverse of the `P` family.
    pub fn exc_p(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(idx, &v)| {
                let i = idx + 1;
                (v > i && (v - i) % 2 == 1) || (v < i && (i - v) % 2 == 0)
            })
            .count()
    }

    /// Excedance variant matching the sign pattern of the inverse of the
    /// `A` family on `[2n]`: position `i` counts in any of the situations
    ///
    /// 1. `1 <= i < pi(i) <= n`
    /// 2. `n+1 <= i <= 2n` and `i-n <= pi(i) <= n`
    /// 3. `n+1 <= i < pi(i) <= 2n`
    /// 4. `1 <= i < pi(i) - n` and `n+1 <= pi(i) <= 2n`
    ///
    /// The length must be even.
    pub fn exph(&self) -> Result<usize> {
        let len = self.images.len();
        if len % 2 != 0 {
            return Err(Error::OddLength(len));
        }
        let n = len / 2;
        Ok(self
            .images
            .iter()
            .enumerate()
            .filter(|&(idx, &v)| {
                let i = idx + 1;
                (i < v && v <= n)
                    || (i > n && i - n <= v && v <= n)
                    || (n < i && i < v)
                    || (v > n && i + n < v)
            })
            .count())
    }

    /// Cycle words in standard form: every cycle is written with its
    /// smallest element last and cycles are ordered by increasing smallest
    /// element.
    pub fn cycles_standard(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            // `start` is the smallest unseen element, hence its cycle's min
            let mut word = Vec::new();
            let mut x = self.image(start);
            seen[start - 1] = true;
            while x != start {
                seen[x - 1] = true;
                word.push(x);
                x = self.image(x);
            }
            word.push(start);
            cycles.push(word);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.len() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.images.iter().map(usize::to_string).collect();
            f.write_str(&words.join(","))
        }
    }
}

/// The base bijection on `[2n]` behind the conjugation that transports
/// plain excedances to [`Permutation::exph`]: odd `2k-1` goes to `n+k`,
/// even `2k` goes to `k`.
pub fn phi_map(x: usize, n: usize) -> Result<usize> {
    if x == 0 || x > 2 * n {
        return Err(Error::IndexOutOfRange {
            what: format!("phi({x}) with domain [1, {}]", 2 * n),
        });
    }
    Ok(if x % 2 == 1 { n + x.div_ceil(2) } else { x / 2 })
}

/// Conjugation by [`phi_map`]: relabels both rows of the two-line notation.
/// Preserves the number of fixed points and maps `exc` to `exph`.
pub fn phi_conjugate(p: &Permutation) -> Result<Permutation> {
    let len = p.len();
    if len % 2 != 0 {
        return Err(Error::OddLength(len));
    }
    let n = len / 2;
    let mut images = vec![0; len];
    for i in 1..=len {
        images[phi_map(i, n)? - 1] = phi_map(p.image(i), n)?;
    }
    Permutation::from_one_line(images)
}

/// First fundamental transformation, specialised to even length: write the
/// permutation in standard cycle form, erase the parentheses and append the
/// letter `2m + 1`. The first letter is preserved; descent-parity
/// permutations of the second kind map onto those of the first kind one
/// length up.
pub fn foata_hat(p: &Permutation) -> Result<Permutation> {
    let len = p.len();
    if len % 2 != 0 {
        return Err(Error::OddLength(len));
    }
    let mut images = Vec::with_capacity(len + 1);
    for cycle in p.cycles_standard() {
        images.extend(cycle);
    }
    images.push(len + 1);
    Permutation::from_one_line(images)
}

/// Restricted permutation classes used by the verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermClass {
    /// All of the symmetric group.
    All,
    /// No fixed points.
    Derangements,
    /// Descent at `i` exactly when the letter there is even (odd length).
    DumontFirst,
    /// Even positions are anti-excedances, odd positions weak excedances
    /// (even length).
    DumontSecond,
    /// All odd positions are descents and `ceil(i/2) <= pi(i) <= n + ceil(i/2)`
    /// (even length `2n`).
    DescentWindowed,
    /// `pi(i)` avoids `[floor(i/2)+1, ceil(i/2)+m-2]` for every `i`
    /// (odd length `2m-1`).
    BandAvoid,
    /// `ceil(i/2) <= pi(i) <= m + floor(i/2)` for every `i`
    /// (odd length `2m-1`).
    BandStay,
    /// `pi(i) > i` exactly for odd `i < 2m-1` (odd length `2m-1`).
    OddExceed,
}

impl PermClass {
    pub const ALL: [PermClass; 8] = [
        PermClass::All,
        PermClass::Derangements,
        PermClass::DumontFirst,
        PermClass::DumontSecond,
        PermClass::DescentWindowed,
        PermClass::BandAvoid,
        PermClass::BandStay,
        PermClass::OddExceed,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PermClass::All => "all",
            PermClass::Derangements => "derangements",
            PermClass::DumontFirst => "dumont1",
            PermClass::DumontSecond => "dumont2",
            PermClass::DescentWindowed => "descent_window",
            PermClass::BandAvoid => "band_avoid",
            PermClass::BandStay => "band_stay",
            PermClass::OddExceed => "odd_exceed",
        }
    }

    /// Parity constraint on the length, if any.
    fn check_length(self, n: usize) -> Result<()> {
        let need_even = matches!(self, PermClass::DumontSecond | PermClass::DescentWindowed);
        let need_odd = matches!(
            self,
            PermClass::DumontFirst | PermClass::BandAvoid | PermClass::BandStay | PermClass::OddExceed
        );
        if n == 0 {
            return Err(Error::Domain("length must be at least 1".into()));
        }
        if need_even && n % 2 != 0 {
            return Err(Error::Domain(format!(
                "class `{}` needs an even length, got {n}",
                self.label()
            )));
        }
        if need_odd && n % 2 != 1 {
            return Err(Error::Domain(format!(
                "class `{}` needs an odd length, got {n}",
                self.label()
            )));
        }
        Ok(())
    }

    fn contains_slice(self, images: &[usize]) -> bool {
        let n = images.len();
        match self {
            PermClass::All => true,
            PermClass::Derangements => images.iter().enumerate().all(|(i, &v)| v != i + 1),
            PermClass::DumontFirst => images
                .windows(2)
                .all(|w| (w[0] > w[1]) == (w[0] % 2 == 0)),
            PermClass::DumontSecond => images.iter().enumerate().all(|(idx, &v)| {
                let i = idx + 1;
                if i % 2 == 0 {
                    v < i
                } else {
                    v >= i
                }
            }),
            PermClass::DescentWindowed => {
                let half = n / 2;
                let descents = (0..n / 2).all(|k| images[2 * k] > images[2 * k + 1]);
                descents
                    && images.iter().enumerate().all(|(idx, &v)| {
                        let i = idx + 1;
                        let lo = i.div_ceil(2);
                        lo <= v && v <= half + lo
                    })
            }
            PermClass::BandAvoid => {
                let m = (n + 1) / 2;
                images.iter().enumerate().all(|(idx, &v)| {
                    let i = idx + 1;
                    let lo = i / 2 + 1;
                    let hi = i.div_ceil(2) + m; // upper bound is ceil(i/2) + m - 2
                    hi < lo + 2 || v < lo || v > hi - 2
                })
            }
            PermClass::BandStay => {
                let m = (n + 1) / 2;
                images.iter().enumerate().all(|(idx, &v)| {
                    let i = idx + 1;
                    i.div_ceil(2) <= v && v <= m + i / 2
                })
            }
            PermClass::OddExceed => images.iter().enumerate().all(|(idx, &v)| {
                let i = idx + 1;
                (v > i) == (i % 2 == 1 && i < n)
            }),
        }
    }

    pub fn contains(self, p: &Permutation) -> bool {
        self.contains_slice(p.images())
    }

    /// Position of this class in the Kreweras triangle refinement: the
    /// marker value `k` such that the class members with marker `k` are
    /// counted by the `k`-th triangle entry. `None` for unrefined classes.
    pub fn triangle_marker(self, p: &Permutation) -> Option<usize> {
        match self {
            PermClass::DumontFirst | PermClass::DumontSecond => Some(p.image(1) - 1),
            PermClass::BandAvoid => Some(p.position_of(p.len())),
            PermClass::BandStay => Some(p.position_of((p.len() + 1) / 2)),
            PermClass::OddExceed => Some(p.image(p.len())),
            _ => None,
        }
    }
}

impl FromStr for PermClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lowered = s.to_ascii_lowercase();
        PermClass::ALL
            .iter()
            .copied()
            .find(|c| c.label() == lowered)
            .ok_or(Error::Unknown {
                kind: "permutation class",
                name: s.to_string(),
            })
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

// in-place lexicographic successor; false once the last permutation passed
fn lex_advance(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

// drives `f` over all of S_n in lexicographic order without allocating
fn for_each_perm(n: usize, mut f: impl FnMut(&[usize])) {
    let mut v: Vec<usize> = (1..=n).collect();
    loop {
        f(&v);
        if !lex_advance(&mut v) {
            return;
        }
    }
}

/// Streaming iterator over all of `S_n` in lexicographic order.
pub struct LexPermutations {
    next: Option<Vec<usize>>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        Self {
            next: Some((1..=n).collect()),
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if lex_advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn check_budget(n: usize) -> Result<()> {
    if n > MAX_ENUM_LEN {
        Err(Error::EnumerationBudget {
            n,
            max: MAX_ENUM_LEN,
        })
    } else {
        Ok(())
    }
}

/// Lazily yields exactly the members of the class, in lexicographic order.
pub fn enumerate_class(
    class: PermClass,
    n: usize,
) -> Result<impl Iterator<Item = Permutation>> {
    check_budget(n)?;
    class.check_length(n)?;
    Ok(LexPermutations::new(n).filter(move |p| class.contains(p)))
}

/// Exact cardinality of the class.
pub fn count_class(class: PermClass, n: usize) -> Result<BigInt> {
    check_budget(n)?;
    class.check_length(n)?;
    let mut count = BigInt::zero();
    for_each_perm(n, |images| {
        if class.contains_slice(images) {
            count += 1;
        }
    });
    Ok(count)
}

/// Statistics usable in signed sums and joint distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stat {
    Exc,
    IExc,
    WExc,
    Fix,
    ExcP,
    Exph,
}

impl Stat {
    pub const ALL: [Stat; 6] = [
        Stat::Exc,
        Stat::IExc,
        Stat::WExc,
        Stat::Fix,
        Stat::ExcP,
        Stat::Exph,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Stat::Exc => "exc",
            Stat::IExc => "iexc",
            Stat::WExc => "wexc",
            Stat::Fix => "fix",
            Stat::ExcP => "exc_p",
            Stat::Exph => "exph",
        }
    }

    pub fn eval(self, p: &Permutation) -> Result<usize> {
        Ok(match self {
            Stat::Exc => p.exc(),
            Stat::IExc => p.iexc(),
            Stat::WExc => p.wexc(),
            Stat::Fix => p.fix(),
            Stat::ExcP => p.exc_p(),
            Stat::Exph => p.exph()?,
        })
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lowered = s.to_ascii_lowercase();
        Stat::ALL
            .iter()
            .copied()
            .find(|c| c.label() == lowered)
            .ok_or(Error::Unknown {
                kind: "statistic",
                name: s.to_string(),
            })
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `sum over the class of (-1)^stat`, the signed sums the permanents of the
/// sign-matrix families expand into.
pub fn sign_balance(class: PermClass, stat: Stat, n: usize) -> Result<BigInt> {
    check_budget(n)?;
    class.check_length(n)?;
    if stat == Stat::Exph && n % 2 != 0 {
        return Err(Error::OddLength(n));
    }
    let mut total = BigInt::zero();
    let mut failure = None;
    for_each_perm(n, |images| {
        if failure.is_some() || !class.contains_slice(images) {
            return;
        }
        let p = Permutation {
            images: images.to_vec(),
        };
        match stat.eval(&p) {
            Ok(v) => {
                if v % 2 == 0 {
                    total += 1;
                } else {
                    total -= 1;
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Exact joint distribution of several statistics over a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatDistribution {
    pub n: usize,
    pub stats: Vec<Stat>,
    /// stat vector -> multiplicity; multiplicities sum to the class size.
    pub entries: BTreeMap<Vec<usize>, BigInt>,
}

impl StatDistribution {
    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }
}

pub fn joint_distribution(class: PermClass, stats: &[Stat], n: usize) -> Result<StatDistribution> {
    check_budget(n)?;
    class.check_length(n)?;
    let mut entries: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    let mut failure = None;
    for_each_perm(n, |images| {
        if failure.is_some() || !class.contains_slice(images) {
            return;
        }
        let p = Permutation {
            images: images.to_vec(),
        };
        let mut key = Vec::with_capacity(stats.len());
        for stat in stats {
            match stat.eval(&p) {
                Ok(v) => key.push(v),
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            }
        }
        *entries.entry(key).or_insert_with(BigInt::zero) += 1;
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(StatDistribution {
            n,
            stats: stats.to_vec(),
            entries,
        }),
    }
}

/// Entry `(m, k)` of the Kreweras triangle by brute force: the number of
/// descent-parity permutations of `2m + 1` letters whose first letter is
/// `k + 1`.
pub fn kreweras_count(m: usize, k: usize) -> Result<BigInt> {
    if m == 0 || k == 0 || k > 2 * m - 1 {
        return Err(Error::Domain(format!(
            "triangle entry ({m}, {k}) out of range"
        )));
    }
    let n = 2 * m + 1;
    if n > MAX_TRIANGLE_LEN {
        return Err(Error::EnumerationBudget {
            n,
            max: MAX_TRIANGLE_LEN,
        });
    }
    let mut count = BigInt::zero();
    for_each_perm(n, |images| {
        if images[0] == k + 1 && PermClass::DumontFirst.contains_slice(images) {
            count += 1;
        }
    });
    Ok(count)
}

/// Number of dot tableaux of width `n` and height `2n` with one dot per
/// row, two dots per column, and the dot of row `r` (1-based from the
/// bottom) in column `c` only when `c <= r <= n + c`. Equals the
/// normalized median Genocchi number `h_n`.
pub fn dellac_count(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("size must be at least 1".into()));
    }
    if n > MAX_DELLAC_SIZE {
        return Err(Error::EnumerationBudget {
            n,
            max: MAX_DELLAC_SIZE,
        });
    }
    let mut capacity = vec![2u8; n + 1]; // 1-based columns
    fn place(row: usize, n: usize, capacity: &mut [u8], count: &mut BigInt) {
        if row > 2 * n {
            *count += 1;
            return;
        }
        // c <= r <= n + c, i.e. r - n <= c <= r
        let lo = row.saturating_sub(n).max(1);
        let hi = row.min(n);
        for c in lo..=hi {
            if capacity[c] == 0 {
                continue;
            }
            capacity[c] -= 1;
            place(row + 1, n, capacity, count);
            capacity[c] += 1;
        }
    }
    let mut count = BigInt::zero();
    place(1, n, &mut capacity, &mut count);
    Ok(count)
}

/// Convenience: all class members collected (small `n` only).
pub fn class_members(class: PermClass, n: usize) -> Result<Vec<Permutation>> {
    Ok(enumerate_class(class, n)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_line(images.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Permutation::from_one_line(vec![1, 3, 2]).is_ok());
        assert!(Permutation::from_one_line(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::from_one_line(vec![3]).is_err());
    }

    #[test]
    fn basic_stats() {
        let id5 = Permutation::identity(5);
        assert_eq!(id5.exc(), 0);
        assert_eq!(id5.wexc(), 5);
        assert_eq!(id5.fix(), 5);
        assert!(id5.des_set().is_empty());

        assert_eq!(p(&[2, 3, 1]).exc(), 2);
        assert_eq!(p(&[3, 2, 1]).des_set(), vec![1, 2]);
        assert_eq!(p(&[2, 1]).iexc(), 1);
    }

    #[test]
    fn exc_p_values() {
        assert_eq!(Permutation::identity(4).exc_p(), 0);
        assert_eq!(p(&[2, 1]).exc_p(), 1);
        // signed sum over derangements of 4 letters
        assert_eq!(
            sign_balance(PermClass::Derangements, Stat::ExcP, 4).unwrap(),
            BigInt::from(5)
        );
    }

    #[test]
    fn exph_values() {
        assert_eq!(p(&[3, 1, 5, 6, 2, 4]).exph().unwrap(), 3);
        assert_eq!(Permutation::identity(6).exph().unwrap(), 0);
        assert_eq!(p(&[4, 2, 1, 5, 6, 3]).exph().unwrap(), 3);
        assert!(p(&[2, 3, 1]).exph().is_err());
    }

    #[test]
    fn phi_map_values() {
        assert_eq!(phi_map(1, 3).unwrap(), 4);
        assert_eq!(phi_map(6, 3).unwrap(), 3);
        assert_eq!(phi_map(1, 1).unwrap(), 2);
        assert_eq!(phi_map(2, 1).unwrap(), 1);
        assert!(phi_map(0, 3).is_err());
        assert!(phi_map(7, 3).is_err());
    }

    #[test]
    fn phi_conjugation() {
        let pi = p(&[3, 1, 5, 4, 6, 2]);
        let sigma = phi_conjugate(&pi).unwrap();
        assert_eq!(sigma, p(&[4, 2, 1, 5, 6, 3]));
        assert_eq!(pi.exc(), sigma.exph().unwrap());
        assert_eq!(pi.fix(), sigma.fix());

        let id = Permutation::identity(6);
        assert_eq!(phi_conjugate(&id).unwrap(), id);
        assert!(phi_conjugate(&p(&[2, 3, 1])).is_err());
    }

    #[test]
    fn phi_transport_exhaustive_small() {
        for len in [2usize, 4, 6] {
            let mut seen = BTreeSet::new();
            for pi in LexPermutations::new(len) {
                let sigma = phi_conjugate(&pi).unwrap();
                assert_eq!(pi.exc(), sigma.exph().unwrap(), "{pi}");
                assert_eq!(pi.fix(), sigma.fix(), "{pi}");
                seen.insert(sigma);
            }
            // injectivity on the full group
            assert_eq!(seen.len(), (1..=len).product::<usize>());
        }
    }

    #[test]
    fn foata_transform() {
        assert_eq!(foata_hat(&p(&[2, 1])).unwrap(), p(&[2, 1, 3]));
        for sigma in LexPermutations::new(4) {
            let hat = foata_hat(&sigma).unwrap();
            assert_eq!(hat.image(1), sigma.image(1), "{sigma}");
        }
        assert!(foata_hat(&p(&[2, 3, 1])).is_err());
    }

    #[test]
    fn foata_maps_second_kind_onto_first_kind() {
        for m in 1..=3usize {
            let image: BTreeSet<_> = enumerate_class(PermClass::DumontSecond, 2 * m)
                .unwrap()
                .map(|s| foata_hat(&s).unwrap())
                .collect();
            let target: BTreeSet<_> = enumerate_class(PermClass::DumontFirst, 2 * m + 1)
                .unwrap()
                .collect();
            assert_eq!(image, target, "m={m}");
        }
    }

    #[test]
    fn class_enumeration_small() {
        let derangements2: Vec<_> = class_members(PermClass::Derangements, 2).unwrap();
        assert_eq!(derangements2, vec![p(&[2, 1])]);

        let dumont3: Vec<_> = class_members(PermClass::DumontFirst, 3).unwrap();
        assert_eq!(dumont3, vec![p(&[2, 1, 3])]);

        let windowed2: Vec<_> = class_members(PermClass::DescentWindowed, 2).unwrap();
        assert_eq!(windowed2, vec![p(&[2, 1])]);

        assert!(enumerate_class(PermClass::DumontFirst, 4).is_err());
        assert!(enumerate_class(PermClass::DescentWindowed, 3).is_err());
        assert!(enumerate_class(PermClass::All, MAX_ENUM_LEN + 1).is_err());
    }

    #[test]
    fn dumont_second_kind_members() {
        let d4: Vec<_> = class_members(PermClass::DumontSecond, 4).unwrap();
        assert_eq!(d4, vec![p(&[2, 1, 4, 3]), p(&[3, 1, 4, 2]), p(&[4, 1, 3, 2])]);
    }

    #[test]
    fn sign_balance_values() {
        assert_eq!(
            sign_balance(PermClass::All, Stat::Exc, 3).unwrap(),
            BigInt::from(-2)
        );
        assert_eq!(
            sign_balance(PermClass::Derangements, Stat::Exc, 4).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            sign_balance(PermClass::Derangements, Stat::Exc, 5).unwrap(),
            BigInt::zero()
        );
        // weak-excedance complement on 3 letters
        assert_eq!(
            sign_balance(PermClass::All, Stat::WExc, 3).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn joint_distributions() {
        let d = joint_distribution(PermClass::All, &[Stat::Exc, Stat::Fix], 2).unwrap();
        let mut want = BTreeMap::new();
        want.insert(vec![0, 2], BigInt::one());
        want.insert(vec![1, 0], BigInt::one());
        assert_eq!(d.entries, want);

        let exc_fix = joint_distribution(PermClass::All, &[Stat::Exc, Stat::Fix], 4).unwrap();
        let exph_fix = joint_distribution(PermClass::All, &[Stat::Exph, Stat::Fix], 4).unwrap();
        assert_eq!(exc_fix.entries, exph_fix.entries);
        assert_eq!(exc_fix.total(), BigInt::from(24));
    }

    #[test]
    fn kreweras_counts() {
        assert_eq!(kreweras_count(1, 1).unwrap(), BigInt::one());
        assert_eq!(kreweras_count(3, 3).unwrap(), BigInt::from(5));
        assert_eq!(kreweras_count(4, 4).unwrap(), BigInt::from(25));
        assert!(kreweras_count(2, 4).is_err());
        assert!(kreweras_count(6, 1).is_err());
    }

    #[test]
    fn dellac_counts() {
        let counts: Vec<i64> = (1..=4)
            .map(|n| {
                use num_traits::ToPrimitive;
                dellac_count(n).unwrap().to_i64().unwrap()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 7, 38]);
        assert!(dellac_count(7).is_err());
    }

    #[test]
    fn triangle_markers() {
        // first-letter marker for the second-kind class
        let member = p(&[3, 1, 4, 2]);
        assert_eq!(
            PermClass::DumontSecond.triangle_marker(&member),
            Some(2)
        );
        assert_eq!(PermClass::All.triangle_marker(&member), None);
    }

    #[test]
    fn lex_iterator_is_exhaustive_and_ordered() {
        let all: Vec<_> = LexPermutations::new(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        assert_eq!(all[5], p(&[3, 2, 1]));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[3, 1, 2]).to_string(), "312");
        let big = Permutation::identity(10);
        assert_eq!(big.to_string(), "1,2,3,4,5,6,7,8,9,10");
    }
}
