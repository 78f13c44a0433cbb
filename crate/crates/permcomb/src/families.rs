//! Builders for the structured integer matrix families whose permanents
//! equal Bernoulli, Genocchi, median Genocchi and Euler numbers.
//!
//! Every builder works in pure integer arithmetic. The sign matrices that
//! are usually written with `sgn(sin(..))` or `sgn(tan(..))` are computed by
//! classifying a modular residue instead, so results are bit-exact:
//! `sgn(sin(k*pi/m))` depends only on `k mod 2m` and `sgn(tan(k*pi/m))`
//! (odd `m`) only on `k mod m`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn check_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::Domain(format!("{what} must be at least 1")))
    } else {
        Ok(())
    }
}

fn check_even(n: usize) -> Result<()> {
    if n == 0 || n % 2 != 0 {
        Err(Error::OddDimension { n })
    } else {
        Ok(())
    }
}

/// `n x n` matrix with entry `(j, k)` equal to `floor((2j - k) / n)`.
/// Entries lie in `{-1, 0, 1}`; the permanent evaluates the Bernoulli
/// form `2 (2^(n+1) - 1) B_(n+1)`.
pub fn floor_l(n: usize) -> Result<IntMatrix> {
    check_positive(n, "n")?;
    Ok(IntMatrix::from_fn(n, n, |j, k| {
        floor_div(2 * j as i64 - k as i64, n as i64)
    }))
}

/// `2n x 2n` matrix with entry `(j, k)` equal to `floor((2j - k - 1) / 2n)`.
/// The permanent evaluates `(-1)^n H_(2n-1)` (median Genocchi).
pub fn floor_m(two_n: usize) -> Result<IntMatrix> {
    check_even(two_n)?;
    Ok(IntMatrix::from_fn(two_n, two_n, |j, k| {
        floor_div(2 * j as i64 - k as i64 - 1, two_n as i64)
    }))
}

/// `n x n` matrix with entry `(j, k)` equal to `floor((j + k - delta) / n)`
/// for `delta` in `{0, 1}`. Entries lie in `{0, 1, 2}`; the permanents are
/// `2^(n-1) + 1` and `1` respectively.
pub fn floor_jk(n: usize, delta: usize) -> Result<IntMatrix> {
    check_positive(n, "n")?;
    if delta > 1 {
        return Err(Error::Domain(format!("delta must be 0 or 1, got {delta}")));
    }
    Ok(IntMatrix::from_fn(n, n, |j, k| {
        floor_div(j as i64 + k as i64 - delta as i64, n as i64)
    }))
}

/// Reduced `(2m-1) x (2m-1)` 0/1 matrix obtained from the `L` family after
/// removing the two rows whose choice in the permanent expansion is forced.
pub fn l_tilde(m: usize) -> Result<IntMatrix> {
    check_positive(m, "m")?;
    let size = 2 * m - 1;
    Ok(IntMatrix::from_fn(size, size, |i, j| {
        let one = (1 <= i && i + 1 <= m && 2 * i <= j)
            || (m <= i && i + 2 <= 2 * m && j <= 2 * (i - m) + 2)
            || i == 2 * m - 1;
        i64::from(one)
    }))
}

/// Row vector of length `n`: `i` zeros followed by `n - i` ones.
pub fn gamma(n: usize, i: usize) -> Vec<i64> {
    assert!(i <= n, "gamma({n},{i}) out of range");
    (1..=n).map(|p| i64::from(p > i)).collect()
}

/// Complement of [`gamma`]: `i` ones followed by `n - i` zeros.
pub fn gamma_bar(n: usize, i: usize) -> Vec<i64> {
    gamma(n, i).into_iter().map(|v| 1 - v).collect()
}

/// Column vector of dimension `n` whose `(n-i)`-th entry is 0 with ones
/// above and minus-ones below, for `0 <= i <= n-1`.
pub fn alpha(n: usize, i: usize) -> Vec<i64> {
    assert!(i < n, "alpha({n},{i}) out of range");
    let zero_at = n - i;
    (1..=n)
        .map(|p| {
            if p < zero_at {
                1
            } else if p == zero_at {
                0
            } else {
                -1
            }
        })
        .collect()
}

/// [`alpha`] with its zero entry replaced by 1.
pub fn beta(n: usize, i: usize) -> Vec<i64> {
    let mut v = alpha(n, i);
    v[n - i - 1] = 1;
    v
}

pub fn ones(n: usize) -> Vec<i64> {
    vec![1; n]
}

/// Row rearrangement of [`l_tilde`] putting the complemented rows first:
/// `(gbar_2, gbar_4, ..., gbar_(2m-2), 1, g_1, g_3, ..., g_(2m-3))`.
pub fn l_star(m: usize) -> Result<IntMatrix> {
    check_positive(m, "m")?;
    let size = 2 * m - 1;
    let mut rows = Vec::with_capacity(size);
    for i in (2..=2 * m - 2).step_by(2) {
        rows.push(gamma_bar(size, i));
    }
    rows.push(ones(size));
    for i in (1..=2 * m - 3).step_by(2) {
        rows.push(gamma(size, i));
    }
    IntMatrix::from_rows(rows)
}

/// Interleaved row rearrangement of the same family, for either parity.
///
/// Odd `size = 2m-1`: `(g_1, gbar_2, g_3, ..., gbar_(2m-2), 1)`.
/// Even `size = 2m`: `(1, gbar_1, g_2, gbar_3, ..., g_(2m-2), gbar_(2m-1))`;
/// its permanent counts the permutations whose even positions are
/// anti-excedances and odd positions weak excedances.
pub fn l_star2(size: usize) -> Result<IntMatrix> {
    check_positive(size, "size")?;
    let mut rows = Vec::with_capacity(size);
    if size % 2 == 1 {
        for i in 1..size {
            rows.push(if i % 2 == 1 {
                gamma(size, i)
            } else {
                gamma_bar(size, i)
            });
        }
        rows.push(ones(size));
    } else {
        rows.push(ones(size));
        for i in 1..size {
            rows.push(if i % 2 == 1 {
                gamma_bar(size, i)
            } else {
                gamma(size, i)
            });
        }
    }
    IntMatrix::from_rows(rows)
}

/// Reduced `2n x 2n` 0/1 band matrix with rows `2i-1` and `2i` identical:
/// entry `(i, j)` is 1 exactly when `ceil(i/2) <= j <= n + ceil(i/2)`.
pub fn m_tilde(two_n: usize) -> Result<IntMatrix> {
    check_even(two_n)?;
    let n = two_n / 2;
    Ok(IntMatrix::from_fn(two_n, two_n, |i, j| {
        let lo = i.div_ceil(2);
        i64::from(lo <= j && j <= n + lo)
    }))
}

// residue of k modulo 2m classified against the sign of sin(k*pi/m)
fn sin_sign(k: usize, m: usize) -> i64 {
    let r = k % (2 * m);
    if r % m == 0 {
        0
    } else if r < m {
        1
    } else {
        -1
    }
}

/// `n x n` sign matrix with entry `(i, j)` equal to `sgn(sin((i+j) pi / (n+1)))`.
pub fn sign_p(n: usize) -> Result<IntMatrix> {
    check_positive(n, "n")?;
    Ok(IntMatrix::from_fn(n, n, |i, j| sin_sign(i + j, n + 1)))
}

/// Explicit inverse of the even-size [`sign_p`] matrix.
pub fn p_inverse(two_n: usize) -> Result<IntMatrix> {
    check_even(two_n)?;
    Ok(IntMatrix::from_fn(two_n, two_n, |i, j| {
        let s = i + j;
        if s == two_n + 1 {
            0
        } else if (s < two_n + 1) == (i % 2 == j % 2) {
            1
        } else {
            -1
        }
    }))
}

/// `n x n` sign matrix with entry `(i, j)` equal to `sgn(sin((i+2j) pi / (n+1)))`.
pub fn sign_q(n: usize) -> Result<IntMatrix> {
    check_positive(n, "n")?;
    Ok(IntMatrix::from_fn(n, n, |i, j| sin_sign(i + 2 * j, n + 1)))
}

/// `2n x 2n` sign matrix with entry `(i, j)` equal to
/// `sgn(tan((i+j) pi / (2n+1)))`. The modulus is odd so the pole is never
/// hit.
pub fn sign_a(two_n: usize) -> Result<IntMatrix> {
    check_even(two_n)?;
    let modulus = two_n + 1;
    Ok(IntMatrix::from_fn(two_n, two_n, |i, j| {
        let r = (i + j) % modulus;
        if r == 0 {
            0
        } else if 2 * r < modulus {
            1
        } else {
            -1
        }
    }))
}

/// Explicit inverse of [`sign_a`], given by a sign-region case split.
pub fn a_inverse(two_n: usize) -> Result<IntMatrix> {
    check_even(two_n)?;
    let n = two_n / 2;
    Ok(IntMatrix::from_fn(two_n, two_n, |i, j| {
        let s = i + j;
        if s == 2 * n + 1 {
            0
        } else if (s >= n + 1 && i.max(j) <= n)
            || (s >= 2 * n + 2 && i <= n)
            || (s >= 2 * n + 2 && j <= n)
            || s >= 3 * n + 2
        {
            -1
        } else {
            1
        }
    }))
}

/// Anti-diagonal permutation matrix.
pub fn anti_diag_j(n: usize) -> Result<IntMatrix> {
    check_positive(n, "n")?;
    Ok(IntMatrix::from_fn(n, n, |i, j| i64::from(i + j == n + 1)))
}

pub fn identity(n: usize) -> Result<IntMatrix> {
    check_positive(n, "n")?;
    Ok(IntMatrix::from_fn(n, n, |i, j| i64::from(i == j)))
}

/// Checkerboard of signs: entry `(i, j)` is `(-1)^(i+j)`.
pub fn checkerboard_h(n: usize) -> Result<IntMatrix> {
    check_positive(n, "n")?;
    Ok(IntMatrix::from_fn(
        n,
        n,
        |i, j| if (i + j) % 2 == 0 { 1 } else { -1 },
    ))
}

/// Block sign pattern `[[U, -U], [-U, U]]` where `U` is the all-ones block.
pub fn u_tilde(two_n: usize) -> Result<IntMatrix> {
    check_even(two_n)?;
    let n = two_n / 2;
    Ok(IntMatrix::from_fn(two_n, two_n, |i, j| {
        if (i <= n) == (j <= n) {
            1
        } else {
            -1
        }
    }))
}

/// Square matrix with independent uniform entries in `{-1, 0, 1}`.
pub fn random_sign(side: usize, rng: &mut impl Rng) -> IntMatrix {
    IntMatrix::from_fn(side, side, |_, _| rng.gen_range(-1i64..=1))
}

/// Named matrix families reachable from the command line and the C API.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    L,
    M,
    LTilde,
    LStar,
    LStar2,
    MTilde,
    P,
    PInv,
    Q,
    A,
    AInv,
    J,
    H,
    UTilde,
    Jk0,
    Jk1,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::L,
        Family::M,
        Family::LTilde,
        Family::LStar,
        Family::LStar2,
        Family::MTilde,
        Family::P,
        Family::PInv,
        Family::Q,
        Family::A,
        Family::AInv,
        Family::J,
        Family::H,
        Family::UTilde,
        Family::Jk0,
        Family::Jk1,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::M => "M",
            Family::LTilde => "L_tilde",
            Family::LStar => "L_star",
            Family::LStar2 => "L_star2",
            Family::MTilde => "M_tilde",
            Family::P => "P",
            Family::PInv => "P_inv",
            Family::Q => "Q",
            Family::A => "A",
            Family::AInv => "A_inv",
            Family::J => "J",
            Family::H => "H",
            Family::UTilde => "U_tilde",
            Family::Jk0 => "JK0",
            Family::Jk1 => "JK1",
        }
    }

    /// Builds the family member for parameter `n`. For `L_tilde` and
    /// `L_star` the parameter is `m` (the matrix has side `2m - 1`);
    /// everywhere else it is the side length.
    pub fn build(self, n: usize) -> Result<IntMatrix> {
        match self {
            Family::L => floor_l(n),
            Family::M => floor_m(n),
            Family::LTilde => l_tilde(n),
            Family::LStar => l_star(n),
            Family::LStar2 => l_star2(n),
            Family::MTilde => m_tilde(n),
            Family::P => sign_p(n),
            Family::PInv => p_inverse(n),
            Family::Q => sign_q(n),
            Family::A => sign_a(n),
            Family::AInv => a_inverse(n),
            Family::J => anti_diag_j(n),
            Family::H => checkerboard_h(n),
            Family::UTilde => u_tilde(n),
            Family::Jk0 => floor_jk(n, 0),
            Family::Jk1 => floor_jk(n, 1),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lowered = s.to_ascii_lowercase();
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.label().to_ascii_lowercase() == lowered)
            .ok_or(Error::Unknown {
                kind: "matrix family",
                name: s.to_string(),
            })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        m.rows_iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect()
    }

    #[test]
    fn floor_l_small() {
        assert_eq!(rows(&floor_l(1).unwrap()), vec![vec![1]]);
        assert_eq!(
            rows(&floor_l(3).unwrap()),
            vec![vec![0, 0, -1], vec![1, 0, 0], vec![1, 1, 1]]
        );
        // even side: the middle row vanishes
        assert_eq!(rows(&floor_l(2).unwrap())[0], vec![0, 0]);
        assert!(floor_l(0).is_err());
    }

    #[test]
    fn floor_l_forced_rows_for_odd_side() {
        // side 2m+1: row m is 2m zeros then -1, row m+1 is 1 then 2m zeros
        for m in 1..=4usize {
            let a = floor_l(2 * m + 1).unwrap();
            let r = rows(&a);
            let mut top = vec![0i64; 2 * m];
            top.push(-1);
            assert_eq!(r[m - 1], top);
            let mut bottom = vec![1i64];
            bottom.extend(vec![0i64; 2 * m]);
            assert_eq!(r[m], bottom);
        }
    }

    #[test]
    fn floor_m_small() {
        assert_eq!(rows(&floor_m(2).unwrap()), vec![vec![0, -1], vec![1, 0]]);
        let m4 = rows(&floor_m(4).unwrap());
        assert_eq!(m4[2], vec![1, 0, 0, 0]);
        assert_eq!(m4[0][3], -1);
        assert!(floor_m(3).is_err());
        assert!(floor_m(0).is_err());
    }

    #[test]
    fn floor_jk_small() {
        assert_eq!(rows(&floor_jk(1, 0).unwrap()), vec![vec![2]]);
        assert_eq!(
            rows(&floor_jk(2, 0).unwrap()),
            vec![vec![1, 1], vec![1, 2]]
        );
        assert_eq!(
            rows(&floor_jk(2, 1).unwrap()),
            vec![vec![0, 1], vec![1, 1]]
        );
        assert!(floor_jk(2, 2).is_err());
    }

    #[test]
    fn l_tilde_small() {
        assert_eq!(rows(&l_tilde(1).unwrap()), vec![vec![1]]);
        assert_eq!(
            rows(&l_tilde(2).unwrap()),
            vec![vec![0, 1, 1], vec![1, 1, 0], vec![1, 1, 1]]
        );
        let l5 = rows(&l_tilde(3).unwrap());
        assert_eq!(
            l5,
            vec![
                vec![0, 1, 1, 1, 1],
                vec![0, 0, 0, 1, 1],
                vec![1, 1, 0, 0, 0],
                vec![1, 1, 1, 1, 0],
                vec![1, 1, 1, 1, 1],
            ]
        );
        let l7 = rows(&l_tilde(4).unwrap());
        assert_eq!(l7[1], vec![0, 0, 0, 1, 1, 1, 1]);
        assert_eq!(l7[6], vec![1; 7]);
    }

    #[test]
    fn l_tilde_matches_gamma_stacking() {
        // (g_1, g_3, ..., g_(2m-3), gbar_2, gbar_4, ..., gbar_(2m-2), 1)
        for m in 1..=6usize {
            let size = 2 * m - 1;
            let mut expect = Vec::new();
            for i in (1..=2 * m - 3).step_by(2) {
                expect.push(gamma(size, i));
            }
            for i in (2..=2 * m - 2).step_by(2) {
                expect.push(gamma_bar(size, i));
            }
            expect.push(ones(size));
            assert_eq!(rows(&l_tilde(m).unwrap()), expect, "m={m}");
        }
    }

    #[test]
    fn l_star_variants() {
        assert_eq!(
            rows(&l_star(2).unwrap()),
            vec![vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 1]]
        );
        assert_eq!(
            rows(&l_star2(3).unwrap()),
            vec![vec![0, 1, 1], vec![1, 1, 0], vec![1, 1, 1]]
        );
        assert_eq!(
            rows(&l_star2(4).unwrap()),
            vec![
                vec![1, 1, 1, 1],
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 1],
                vec![1, 1, 1, 0],
            ]
        );
        assert_eq!(rows(&l_star(1).unwrap()), vec![vec![1]]);
        assert_eq!(rows(&l_star2(1).unwrap()), vec![vec![1]]);
        assert_eq!(rows(&l_star2(2).unwrap()), vec![vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn l_star_rows_are_l_tilde_rows() {
        // both rearrangements permute the rows of l_tilde
        for m in 2..=5usize {
            let base = rows(&l_tilde(m).unwrap());
            for variant in [l_star(m).unwrap(), l_star2(2 * m - 1).unwrap()] {
                let mut got = rows(&variant);
                let mut want = base.clone();
                got.sort();
                want.sort();
                assert_eq!(got, want, "m={m}");
            }
        }
    }

    #[test]
    fn m_tilde_small() {
        assert_eq!(rows(&m_tilde(2).unwrap()), vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(
            rows(&m_tilde(4).unwrap()),
            vec![
                vec![1, 1, 1, 0],
                vec![1, 1, 1, 0],
                vec![0, 1, 1, 1],
                vec![0, 1, 1, 1],
            ]
        );
        let m6 = rows(&m_tilde(6).unwrap());
        assert_eq!(m6[4], vec![0, 0, 1, 1, 1, 1]);
        // paired rows coincide
        for i in 0..3 {
            assert_eq!(m6[2 * i], m6[2 * i + 1]);
        }
        assert!(m_tilde(5).is_err());
    }

    #[test]
    fn sign_p_small() {
        assert_eq!(rows(&sign_p(2).unwrap()), vec![vec![1, 0], vec![0, -1]]);
        assert_eq!(
            rows(&sign_p(4).unwrap()),
            vec![
                vec![1, 1, 1, 0],
                vec![1, 1, 0, -1],
                vec![1, 0, -1, -1],
                vec![0, -1, -1, -1],
            ]
        );
        let p6 = sign_p(6).unwrap();
        assert_eq!(p6.get(6, 6), &BigInt::from(-1));
    }

    #[test]
    fn p_inverse_small() {
        assert_eq!(rows(&p_inverse(2).unwrap()), vec![vec![1, 0], vec![0, -1]]);
        assert_eq!(
            rows(&p_inverse(4).unwrap()),
            vec![
                vec![1, -1, 1, 0],
                vec![-1, 1, 0, -1],
                vec![1, 0, -1, 1],
                vec![0, -1, 1, -1],
            ]
        );
        let p6 = p_inverse(6).unwrap();
        for i in 1..=6 {
            assert_eq!(p6.get(i, 7 - i), &BigInt::from(0));
        }
        assert!(p_inverse(3).is_err());
    }

    #[test]
    fn sign_q_small() {
        assert_eq!(rows(&sign_q(1).unwrap()), vec![vec![-1]]);
        assert_eq!(rows(&sign_q(2).unwrap()), vec![vec![0, -1], vec![-1, 0]]);
        assert_eq!(
            rows(&sign_q(3).unwrap()),
            vec![vec![1, -1, -1], vec![0, -1, 0], vec![-1, -1, 1]]
        );
    }

    #[test]
    fn sign_a_and_inverse_small() {
        assert_eq!(rows(&sign_a(2).unwrap()), vec![vec![-1, 0], vec![0, 1]]);
        let a6_inv = rows(&a_inverse(6).unwrap());
        assert_eq!(a6_inv[0], vec![1, 1, -1, 1, 1, 0]);
        assert_eq!(a6_inv[2], vec![-1, -1, -1, 0, -1, -1]);
        assert_eq!(a6_inv[5], vec![0, -1, -1, 1, -1, -1]);
        assert!(sign_a(5).is_err());
    }

    #[test]
    fn helper_matrices() {
        assert_eq!(rows(&anti_diag_j(2).unwrap()), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            rows(&checkerboard_h(2).unwrap()),
            vec![vec![1, -1], vec![-1, 1]]
        );
        assert_eq!(
            rows(&u_tilde(4).unwrap()),
            vec![
                vec![1, 1, -1, -1],
                vec![1, 1, -1, -1],
                vec![-1, -1, 1, 1],
                vec![-1, -1, 1, 1],
            ]
        );
    }

    #[test]
    fn vector_helpers() {
        assert_eq!(gamma(5, 2), vec![0, 0, 1, 1, 1]);
        assert_eq!(gamma_bar(5, 2), vec![1, 1, 0, 0, 0]);
        assert_eq!(alpha(6, 2), vec![1, 1, 1, 0, -1, -1]);
        assert_eq!(beta(6, 2), vec![1, 1, 1, 1, -1, -1]);
    }

    #[test]
    fn builder_entries_bounded() {
        // every family except JK produces entries in {-1, 0, 1};
        // JK entries lie in {0, 1, 2}
        for family in Family::ALL {
            for n in 1..=8usize {
                let Ok(m) = family.build(n) else { continue };
                for v in m.entries() {
                    match family {
                        Family::Jk0 | Family::Jk1 => {
                            assert!(
                                (0..=2).contains(&i64::try_from(v).unwrap()),
                                "{family} n={n}"
                            );
                        }
                        _ => assert!(v.abs() <= BigInt::from(1), "{family} n={n}"),
                    }
                }
            }
        }
    }

    #[test]
    fn family_labels_round_trip() {
        for family in Family::ALL {
            assert_eq!(family.label().parse::<Family>().unwrap(), family);
        }
        assert!("p_inv".parse::<Family>().is_ok());
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn even_only_families_reject_odd() {
        for family in [
            Family::M,
            Family::MTilde,
            Family::PInv,
            Family::A,
            Family::AInv,
            Family::UTilde,
        ] {
            assert!(family.build(3).is_err(), "{family}");
            assert!(family.build(4).is_ok(), "{family}");
        }
    }
}
