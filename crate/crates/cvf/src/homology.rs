//! GF(2) linear algebra and the classical cellular homology oracle.

use serde::Serialize;

use crate::complex::CellComplex;
use crate::error::{Error, Result};

/// Dense bit-packed matrix over GF(2) with row and column labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize, row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        assert_eq!(row_labels.len(), rows);
        assert_eq!(col_labels.len(), cols);
        let words_per_row = cols.div_ceil(64);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
            row_labels,
            col_labels,
        }
    }

    /// Convenience constructor with positional labels, mostly for tests.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Gf2Matrix::zeros(
            r,
            c,
            (0..r).map(|i| format!("r{i}")).collect(),
            (0..c).map(|j| format!("c{j}")).collect(),
        );
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v % 2 == 1);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(
            n,
            n,
            (0..n).map(|i| format!("r{i}")).collect(),
            (0..n).map(|j| format!("c{j}")).collect(),
        );
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let word = r * self.words_per_row + c / 64;
        let mask = 1u64 << (c % 64);
        if value {
            self.bits[word] |= mask;
        } else {
            self.bits[word] &= !mask;
        }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        let word = r * self.words_per_row + c / 64;
        self.bits[word] & (1u64 << (c % 64)) != 0
    }

    pub fn column_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Rank via Gaussian elimination on a copy. The pivot for each step is
    /// the first row with a nonzero entry in the first open column, so the
    /// intermediate states are reproducible.
    pub fn rank(&self) -> usize {
        let wpr = self.words_per_row;
        if wpr == 0 || self.rows == 0 {
            return 0;
        }
        let mut work = self.bits.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let word = col / 64;
            let mask = 1u64 << (col % 64);
            let pivot = (rank..self.rows).find(|&r| work[r * wpr + word] & mask != 0);
            let Some(pivot) = pivot else { continue };
            if pivot != rank {
                for w in 0..wpr {
                    work.swap(pivot * wpr + w, rank * wpr + w);
                }
            }
            for r in 0..self.rows {
                if r != rank && work[r * wpr + word] & mask != 0 {
                    for w in 0..wpr {
                        work[r * wpr + w] ^= work[rank * wpr + w];
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Matrix product over GF(2). Labels are taken from the outer shapes.
    pub fn mul(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                lr: self.rows,
                lc: self.cols,
                rr: rhs.rows,
                rc: rhs.cols,
            });
        }
        let mut out = Gf2Matrix::zeros(
            self.rows,
            rhs.cols,
            self.row_labels.clone(),
            rhs.col_labels.clone(),
        );
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let (dst, src) = (i * out.words_per_row, k * rhs.words_per_row);
                    for w in 0..rhs.words_per_row {
                        out.bits[dst + w] ^= rhs.bits[src + w];
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Rank of a GF(2) matrix; the input is untouched.
pub fn rank_gf2(m: &Gf2Matrix) -> usize {
    m.rank()
}

/// Whether `a * b = 0` over GF(2).
pub fn compose_is_zero(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<bool> {
    Ok(a.mul(b)?.is_zero())
}

/// Betti numbers of the complex over GF(2), computed from the classical
/// cellular boundary matrices. This is the oracle every other homology
/// route is checked against.
pub fn betti_cellular(cx: &CellComplex) -> Vec<usize> {
    let m = cx.max_dim();
    if m < 0 {
        return Vec::new();
    }
    let m = m as usize;
    let mut ranks = vec![0usize; m + 2];
    for k in 1..=m {
        ranks[k] = cx.boundary_matrix_gf2(k).expect("degree in range").rank();
    }
    (0..=m)
        .map(|k| cx.cells_of_dim(k).len() - ranks[k] - ranks[k + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_complex;

    #[test]
    fn rank_basics() {
        assert_eq!(Gf2Matrix::identity(3).rank(), 3);
        assert_eq!(Gf2Matrix::from_rows(&[&[0, 0], &[0, 0]]).rank(), 0);
        let m = Gf2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn compose_identity_is_not_zero() {
        let id = Gf2Matrix::identity(2);
        assert!(!compose_is_zero(&id, &id).unwrap());
        let z = Gf2Matrix::from_rows(&[&[0, 0], &[0, 0]]);
        assert!(compose_is_zero(&z, &id).unwrap());
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = Gf2Matrix::identity(2);
        let b = Gf2Matrix::identity(3);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn sphere_betti_numbers() {
        let cx = parse_complex(crate::fixtures::TETRAHEDRON).unwrap();
        assert_eq!(betti_cellular(&cx), vec![1, 0, 1]);
    }

    #[test]
    fn point_and_empty() {
        let pt = parse_complex("simplex 0\n").unwrap();
        assert_eq!(betti_cellular(&pt), vec![1]);
        let empty = parse_complex("").unwrap();
        assert!(betti_cellular(&empty).is_empty());
    }

    #[test]
    fn euler_characteristic_agrees() {
        for text in [
            "simplex 0 1 2 3\n",
            "simplex 0 1 2\nsimplex 2 3\nsimplex 3 4 5\n",
        ] {
            let cx = parse_complex(text).unwrap();
            let betti = betti_cellular(&cx);
            let chi_cells: i64 = (0..=cx.max_dim() as usize)
                .map(|k| {
                    let n = cx.cells_of_dim(k).len() as i64;
                    if k % 2 == 0 {
                        n
                    } else {
                        -n
                    }
                })
                .sum();
            let chi_betti: i64 = betti
                .iter()
                .enumerate()
                .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
                .sum();
            assert_eq!(chi_cells, chi_betti);
        }
    }
}
