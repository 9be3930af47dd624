//! Dense matrices with polynomial entries.

use std::collections::HashMap;
use std::fmt;

use crate::field::Field;
use crate::linalg::Matrix;
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl PolyMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        PolyMatrix { field, rows, cols, entries: vec![Poly::zero(field); rows * cols] }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut m = PolyMatrix::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = PolyMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Constant coefficients, i.e. the matrix tensored down to the residue field.
    pub fn constant_part(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).constant_term());
            }
        }
        m
    }

    /// Determinant by Laplace expansion along rows, memoized on the set of used columns.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        assert!(n < 64);
        let mut memo: HashMap<u64, Poly> = HashMap::new();
        self.det_rec(0, (1u64 << n) - 1, &mut memo)
    }

    fn det_rec(&self, row: usize, cols: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
        if cols == 0 {
            return Poly::constant(self.field, 1);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = Poly::zero(self.field);
        let mut pos = 0;
        for c in 0..self.cols {
            if cols & (1 << c) == 0 {
                continue;
            }
            let a = self.get(row, c);
            if !a.is_zero() {
                let minor = self.det_rec(row + 1, cols & !(1 << c), memo);
                let term = a * &minor;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            pos += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}
