//! Dense matrices of arbitrary-precision integers.
//!
//! All public indices are 1-based, matching the usual convention for the
//! matrix families built in [`crate::families`]. Storage is row-major.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Dense row-major matrix with exact integer entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries. The entry count must equal
    /// `n_rows * n_cols`; the empty 0x0 matrix is allowed (its permanent
    /// is 1 by convention, which the minor expansion relies on).
    pub fn new(n_rows: usize, n_cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n_rows * n_cols {
            return Err(Error::Domain(format!(
                "{}x{} matrix needs {} entries, got {}",
                n_rows,
                n_cols,
                n_rows * n_cols,
                entries.len()
            )));
        }
        Ok(Self {
            n_rows,
            n_cols,
            entries,
        })
    }

    /// Builds an `n_rows x n_cols` matrix by evaluating `f(i, j)` with
    /// 1-based `i`, `j`.
    pub fn from_fn<T: Into<BigInt>>(
        n_rows: usize,
        n_cols: usize,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for i in 1..=n_rows {
            for j in 1..=n_cols {
                entries.push(f(i, j).into());
            }
        }
        Self {
            n_rows,
            n_cols,
            entries,
        }
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::Domain(format!(
                    "ragged rows: expected {} columns, got {}",
                    n_cols,
                    row.len()
                )));
            }
            entries.extend(row.into_iter().map(Into::into));
        }
        Self::new(n_rows, n_cols, entries)
    }

    /// Builds a square matrix from a list of columns.
    pub fn from_cols<T: Into<BigInt> + Clone>(cols: Vec<Vec<T>>) -> Result<Self> {
        let n_cols = cols.len();
        let n_rows = cols.first().map_or(0, Vec::len);
        for col in &cols {
            if col.len() != n_rows {
                return Err(Error::Domain(format!(
                    "ragged columns: expected {} rows, got {}",
                    n_rows,
                    col.len()
                )));
            }
        }
        Ok(Self::from_fn(n_rows, n_cols, |i, j| {
            cols[j - 1][i - 1].clone().into()
        }))
    }

    /// Assembles `[[tl, tr], [bl, br]]`. All four blocks must be square and
    /// of equal size.
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Result<Self> {
        let n = tl.n_rows;
        for block in [tl, tr, bl, br] {
            if block.n_rows != n || block.n_cols != n {
                return Err(Error::DimensionMismatch {
                    left_rows: n,
                    left_cols: n,
                    right_rows: block.n_rows,
                    right_cols: block.n_cols,
                });
            }
        }
        Ok(Self::from_fn(2 * n, 2 * n, |i, j| {
            let block = match (i > n, j > n) {
                (false, false) => tl,
                (false, true) => tr,
                (true, false) => bl,
                (true, true) => br,
            };
            block.get((i - 1) % n + 1, (j - 1) % n + 1).clone()
        }))
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    /// Side length of a square matrix.
    pub fn side(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.n_rows)
        } else {
            Err(Error::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            })
        }
    }

    /// Entry at row `i`, column `j` (1-based). Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            (1..=self.n_rows).contains(&i) && (1..=self.n_cols).contains(&j),
            "entry ({i},{j}) out of range for {}x{} matrix",
            self.n_rows,
            self.n_cols
        );
        &self.entries[(i - 1) * self.n_cols + (j - 1)]
    }

    /// Row `i` as a slice (1-based).
    pub fn row(&self, i: usize) -> &[BigInt] {
        assert!((1..=self.n_rows).contains(&i), "row {i} out of range");
        &self.entries[(i - 1) * self.n_cols..i * self.n_cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.n_cols.max(1))
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n_cols, self.n_rows, |i, j| self.get(j, i).clone())
    }

    /// Reverses the order of the rows.
    pub fn flip_rows(&self) -> Self {
        Self::from_fn(self.n_rows, self.n_cols, |i, j| {
            self.get(self.n_rows + 1 - i, j).clone()
        })
    }

    /// Reverses the order of the columns.
    pub fn flip_cols(&self) -> Self {
        Self::from_fn(self.n_rows, self.n_cols, |i, j| {
            self.get(i, self.n_cols + 1 - j).clone()
        })
    }

    /// Deletes row `i` and column `j` (1-based).
    pub fn minor(&self, i: usize, j: usize) -> Result<Self> {
        self.delete_rows_cols(&[i], &[j])
    }

    /// Deletes the listed rows and columns (1-based, duplicates ignored).
    pub fn delete_rows_cols(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        for &r in rows {
            if r == 0 || r > self.n_rows {
                return Err(Error::IndexOutOfRange {
                    what: format!("row {r} of {}x{} matrix", self.n_rows, self.n_cols),
                });
            }
        }
        for &c in cols {
            if c == 0 || c > self.n_cols {
                return Err(Error::IndexOutOfRange {
                    what: format!("column {c} of {}x{} matrix", self.n_rows, self.n_cols),
                });
            }
        }
        let keep_rows: Vec<usize> = (1..=self.n_rows).filter(|r| !rows.contains(r)).collect();
        let keep_cols: Vec<usize> = (1..=self.n_cols).filter(|c| !cols.contains(c)).collect();
        let mut entries = Vec::with_capacity(keep_rows.len() * keep_cols.len());
        for &r in &keep_rows {
            for &c in &keep_cols {
                entries.push(self.get(r, c).clone());
            }
        }
        Self::new(keep_rows.len(), keep_cols.len(), entries)
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        if self.n_rows != other.n_rows || self.n_cols != other.n_cols {
            return Err(Error::DimensionMismatch {
                left_rows: self.n_rows,
                left_cols: self.n_cols,
                right_rows: other.n_rows,
                right_cols: other.n_cols,
            });
        }
        Ok(Self::from_fn(self.n_rows, self.n_cols, |i, j| {
            self.get(i, j) * other.get(i, j)
        }))
    }

    /// Exact matrix product.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.n_cols != other.n_rows {
            return Err(Error::DimensionMismatch {
                left_rows: self.n_rows,
                left_cols: self.n_cols,
                right_rows: other.n_rows,
                right_cols: other.n_cols,
            });
        }
        Ok(Self::from_fn(self.n_rows, other.n_cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 1..=self.n_cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        }))
    }

    /// Multiplies row `k` and column `l` by -1. The `(k, l)` entry is negated
    /// twice and therefore unchanged; the permanent is invariant under this
    /// action.
    pub fn phi_action(&self, k: usize, l: usize) -> Result<Self> {
        if k == 0 || k > self.n_rows || l == 0 || l > self.n_cols {
            return Err(Error::IndexOutOfRange {
                what: format!("phi ({k},{l}) on {}x{} matrix", self.n_rows, self.n_cols),
            });
        }
        Ok(Self::from_fn(self.n_rows, self.n_cols, |i, j| {
            let mut v = self.get(i, j).clone();
            if i == k {
                v = -v;
            }
            if j == l {
                v = -v;
            }
            v
        }))
    }

    /// Multiplies every entry of row `k` by `c`.
    pub fn scale_row(&self, k: usize, c: &BigInt) -> Result<Self> {
        if k == 0 || k > self.n_rows {
            return Err(Error::IndexOutOfRange {
                what: format!("row {k} of {}x{} matrix", self.n_rows, self.n_cols),
            });
        }
        Ok(Self::from_fn(self.n_rows, self.n_cols, |i, j| {
            if i == k {
                self.get(i, j) * c
            } else {
                self.get(i, j).clone()
            }
        }))
    }

    /// Swaps two rows (1-based).
    pub fn swap_rows(&self, a: usize, b: usize) -> Result<Self> {
        if a == 0 || a > self.n_rows || b == 0 || b > self.n_rows {
            return Err(Error::IndexOutOfRange {
                what: format!("rows {a},{b} of {}x{} matrix", self.n_rows, self.n_cols),
            });
        }
        Ok(Self::from_fn(self.n_rows, self.n_cols, |i, j| {
            let src = if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            };
            self.get(src, j).clone()
        }))
    }

    /// Swaps two columns (1-based).
    pub fn swap_cols(&self, a: usize, b: usize) -> Result<Self> {
        Ok(self.transpose().swap_rows(a, b)?.transpose())
    }

    /// Overwrites a single entry (1-based).
    pub fn with_entry<T: Into<BigInt>>(&self, i: usize, j: usize, v: T) -> Result<Self> {
        if i == 0 || i > self.n_rows || j == 0 || j > self.n_cols {
            return Err(Error::IndexOutOfRange {
                what: format!("entry ({i},{j}) of {}x{} matrix", self.n_rows, self.n_cols),
            });
        }
        let mut out = self.clone();
        out.entries[(i - 1) * self.n_cols + (j - 1)] = v.into();
        Ok(out)
    }

    /// One CSV line per row, entries as signed decimals.
    pub fn to_csv(&self) -> String {
        self.rows_iter()
            .map(|row| {
                row.iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// JSON object with `rows`, `cols` and row-major `entries` as decimal
    /// strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rows": self.n_rows,
            "cols": self.n_cols,
            "entries": self.entries.iter().map(BigInt::to_string).collect::<Vec<_>>(),
        })
    }

    /// Compact one-line form ("a,b;c,d") used in verification reports.
    pub fn fingerprint(&self) -> String {
        self.rows_iter()
            .map(|row| {
                row.iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl std::ops::Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix::from_fn(self.n_rows, self.n_cols, |i, j| -self.get(i, j))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix[{}x{}: {}]", self.n_rows, self.n_cols, self.fingerprint())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_csv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn entry_count_must_match() {
        assert!(IntMatrix::new(2, 2, vec![BigInt::zero(); 3]).is_err());
        assert!(IntMatrix::new(0, 0, vec![]).is_ok());
    }

    #[test]
    fn one_based_access() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(a.get(1, 1), &BigInt::from(1));
        assert_eq!(a.get(2, 1), &BigInt::from(3));
    }

    #[test]
    #[should_panic]
    fn zero_index_panics() {
        let a = m(vec![vec![1]]);
        let _ = a.get(0, 1);
    }

    #[test]
    fn transpose_and_flips() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(a.transpose(), m(vec![vec![1, 3], vec![2, 4]]));
        assert_eq!(a.flip_rows(), m(vec![vec![3, 4], vec![1, 2]]));
        assert_eq!(a.flip_cols(), m(vec![vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn minor_removes_row_and_col() {
        let a = m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(a.minor(2, 1).unwrap(), m(vec![vec![2, 3], vec![8, 9]]));
        assert!(a.minor(0, 1).is_err());
        assert!(a.minor(1, 4).is_err());
    }

    #[test]
    fn minor_of_1x1_is_empty() {
        let a = m(vec![vec![5]]);
        let e = a.minor(1, 1).unwrap();
        assert_eq!((e.n_rows(), e.n_cols()), (0, 0));
    }

    #[test]
    fn hadamard_requires_equal_dims() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(a.hadamard(&b).unwrap(), m(vec![vec![2, 0], vec![0, 8]]));
        let c = m(vec![vec![1, 2, 3]]);
        assert!(a.hadamard(&c).is_err());
    }

    #[test]
    fn matmul_small() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.matmul(&b).unwrap(), m(vec![vec![2, 1], vec![4, 3]]));
        assert!(a.matmul(&m(vec![vec![1, 2, 3]])).is_err());
    }

    #[test]
    fn phi_keeps_pivot_entry() {
        let a = m(vec![vec![1, 1], vec![1, 1]]);
        let b = a.phi_action(1, 2).unwrap();
        assert_eq!(b, m(vec![vec![-1, 1], vec![1, -1]]));
        assert_eq!(b.get(1, 2), &BigInt::from(1));
        assert!(a.phi_action(3, 1).is_err());
    }

    #[test]
    fn phi_on_1x1_is_identity() {
        let a = m(vec![vec![1]]);
        assert_eq!(a.phi_action(1, 1).unwrap(), a);
    }

    #[test]
    fn csv_and_json_round() {
        let a = m(vec![vec![0, -1], vec![1, 0]]);
        assert_eq!(a.to_csv(), "0,-1\n1,0");
        let v = a.to_json();
        assert_eq!(v["rows"], 2);
        assert_eq!(v["entries"][1], "-1");
    }

    #[test]
    fn block_assembly() {
        let i = m(vec![vec![1, 0], vec![0, 1]]);
        let z = m(vec![vec![0, 0], vec![0, 0]]);
        let b = IntMatrix::from_blocks(&i, &z, &z, &i).unwrap();
        assert_eq!(b.get(3, 3), &BigInt::from(1));
        assert_eq!(b.get(1, 3), &BigInt::from(0));
        assert!(IntMatrix::from_blocks(&i, &z, &z, &m(vec![vec![1]])).is_err());
    }
}
