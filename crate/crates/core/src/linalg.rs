//! Dense linear algebra over GF(p).
//!
//! Linear maps are stored "source-major": row `k` of a [`Matrix`] is the image of the
//! `k`-th source basis vector. Under that convention the row space is the image, and the
//! left kernel is the kernel of the map.
//!
//! Pivoting is always on the first usable row in index order, so every result is
//! bit-reproducible.

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut data = Vec::new();
        let mut n = 0;
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(&r);
            n += 1;
        }
        Matrix { rows: n, cols, data }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// `self · other` with `self` of shape (a × b) and `other` of shape (b × c).
    pub fn matmul(&self, field: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Rank by forward elimination with delayed modular reduction.
///
/// Target rows accumulate in `u64` and are only reduced when the overflow budget runs out,
/// so the inner loop is a widening multiply-add.
pub fn rank(field: Field, m: &Matrix) -> usize {
    let (nrows, ncols) = (m.rows, m.cols);
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let p = field.p() as u64;
    let budget = ((u64::MAX - p) / ((p - 1) * (p - 1))).max(1);
    let mut a: Vec<u64> = m.data.iter().map(|&v| v as u64).collect();
    let mut piv = vec![0u32; ncols];
    let mut since_reduce = 0u64;
    let mut r = 0usize;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(prow) = (r..nrows).find(|&i| a[i * ncols + col] % p != 0) else {
            continue;
        };
        if prow != r {
            for j in col..ncols {
                a.swap(prow * ncols + j, r * ncols + j);
            }
        }
        let inv = field.inv((a[r * ncols + col] % p) as u32) as u64;
        let mut last = col;
        for j in col..ncols {
            let v = (a[r * ncols + j] % p) * inv % p;
            piv[j] = v as u32;
            if v != 0 {
                last = j;
            }
        }
        let (head, tail) = a.split_at_mut((r + 1) * ncols);
        let _ = head;
        for row in tail.chunks_exact_mut(ncols) {
            let c = row[col] % p;
            if c == 0 {
                continue;
            }
            let mlt = (p - c) as u32;
            for (x, &y) in row[col..=last].iter_mut().zip(&piv[col..=last]) {
                *x += mlt as u64 * y as u64;
            }
        }
        since_reduce += 1;
        if since_reduce >= budget {
            for x in tail.iter_mut() {
                *x %= p;
            }
            since_reduce = 0;
        }
        r += 1;
    }
    r
}

/// Reduced row echelon basis of a subspace of `k^cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn empty(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    /// The whole ambient space, with the standard basis as its RREF.
    pub fn full(cols: usize) -> Self {
        let rows = (0..cols)
            .map(|i| {
                let mut v = vec![0; cols];
                v[i] = 1;
                v
            })
            .collect();
        Echelon { cols, rows, pivots: (0..cols).collect() }
    }

    /// RREF of the span of `rows`.
    pub fn from_rows(field: Field, cols: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut work: Vec<Vec<u32>> = rows.into_iter().filter(|r| r.iter().any(|&v| v != 0)).collect();
        for r in &work {
            assert_eq!(r.len(), cols);
        }
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            if rank == work.len() {
                break;
            }
            let Some(prow) = (rank..work.len()).find(|&i| work[i][col] != 0) else {
                continue;
            };
            work.swap(rank, prow);
            let inv = field.inv(work[rank][col]);
            for v in work[rank][col..].iter_mut() {
                *v = field.mul(*v, inv);
            }
            let pivot_row = work[rank].clone();
            for (i, row) in work.iter_mut().enumerate() {
                if i == rank || row[col] == 0 {
                    continue;
                }
                let c = field.neg(row[col]);
                axpy(field, &mut row[col..], c, &pivot_row[col..]);
            }
            pivots.push(col);
            rank += 1;
        }
        work.truncate(rank);
        Echelon { cols, rows: work, pivots }
    }

    pub fn from_matrix(field: Field, m: &Matrix) -> Self {
        Echelon::from_rows(field, m.ncols(), m.rows().map(|r| r.to_vec()))
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Columns without a pivot, ascending.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.cols];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.cols).filter(|&c| !is_piv[c]).collect()
    }

    /// Subtract the unique combination of basis rows that clears every pivot column.
    pub fn reduce(&self, field: Field, v: &mut [u32]) {
        debug_assert_eq!(v.len(), self.cols);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                axpy(field, &mut v[pc..], field.neg(c), &row[pc..]);
            }
        }
    }

    pub fn contains(&self, field: Field, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` (assumed in the span) with respect to the RREF rows.
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// Adds `v` to the span keeping the basis reduced; returns whether the rank grew.
    pub fn insert(&mut self, field: Field, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = field.inv(w[pc]);
        for x in w[pc..].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                axpy(field, &mut row[pc..], field.neg(c), &w[pc..]);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, w);
        true
    }

    pub fn contains_space(&self, field: Field, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(field, r))
    }
}

#[inline]
pub fn axpy(field: Field, y: &mut [u32], a: u32, x: &[u32]) {
    if a == 0 {
        return;
    }
    let p = field.p() as u64;
    for (yi, &xi) in y.iter_mut().zip(x) {
        if xi != 0 {
            *yi = ((*yi as u64 + a as u64 * xi as u64) % p) as u32;
        }
    }
}

/// Basis of `{c : c · m = 0}`, i.e. the kernel of a source-major map.
pub fn left_kernel(field: Field, m: &Matrix) -> Vec<Vec<u32>> {
    right_kernel(field, &m.transpose())
}

/// Basis of `{v : m · v = 0}`; one vector per free column, with a 1 in that column.
pub fn right_kernel(field: Field, m: &Matrix) -> Vec<Vec<u32>> {
    let ech = Echelon::from_matrix(field, m);
    let n = m.ncols();
    ech.non_pivots()
        .into_iter()
        .map(|free| {
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
                v[pc] = field.neg(row[free]);
            }
            v
        })
        .collect()
}

/// Solves `m · v = b`; free variables are set to zero.
pub fn solve(field: Field, m: &Matrix, b: &[u32]) -> Option<Vec<u32>> {
    assert_eq!(m.nrows(), b.len());
    let n = m.ncols();
    let aug = (0..m.nrows()).map(|r| {
        let mut row = m.row(r).to_vec();
        row.push(b[r]);
        row
    });
    let ech = Echelon::from_rows(field, n + 1, aug);
    if ech.pivots.last() == Some(&n) {
        return None;
    }
    let mut v = vec![0u32; n];
    for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
        v[pc] = row[n];
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, field: Field, r: usize, c: usize, density: f64) -> Matrix {
        let mut m = Matrix::zeros(r, c);
        for i in 0..r {
            for j in 0..c {
                if rng.gen_bool(density) {
                    m.set(i, j, rng.gen_range(0..field.p()));
                }
            }
        }
        m
    }

    #[test]
    fn lazy_rank_agrees_with_rref() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [3u64, 7, 32003, 2147483647] {
            let field = Field::new(p).unwrap();
            for _ in 0..30 {
                let r = rng.gen_range(1..25);
                let c = rng.gen_range(1..25);
                let mut m = random_matrix(&mut rng, field, r, c, 0.3);
                if r > 2 {
                    let dup = m.row(0).to_vec();
                    m.row_mut(r - 1).copy_from_slice(&dup);
                }
                assert_eq!(rank(field, &m), Echelon::from_matrix(field, &m).rank());
                assert_eq!(rank(field, &m), rank(field, &m.transpose()));
            }
        }
    }

    #[test]
    fn kernels_are_kernels() {
        let field = Field::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = random_matrix(&mut rng, field, 6, 9, 0.5);
        let k = right_kernel(field, &m);
        assert_eq!(k.len(), 9 - rank(field, &m));
        for v in &k {
            let col = Matrix::from_rows(1, v.iter().map(|&x| vec![x]));
            assert!(m.matmul(field, &col).is_zero());
        }
        let lk = left_kernel(field, &m);
        assert_eq!(lk.len(), 6 - rank(field, &m));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let field = Field::new(7).unwrap();
        let m = Matrix::from_rows(2, vec![vec![1, 2], vec![2, 4]]);
        let x = solve(field, &m, &[3, 6]).unwrap();
        assert_eq!(field.add(x[0], field.mul(2, x[1])), 3);
        assert!(solve(field, &m, &[3, 5]).is_none());
    }

    #[test]
    fn insert_keeps_rref() {
        let field = Field::new(101).unwrap();
        let mut e = Echelon::empty(4);
        assert!(e.insert(field, &[0, 2, 4, 0]));
        assert!(e.insert(field, &[1, 1, 0, 1]));
        assert!(!e.insert(field, &[2, 4, 4, 2]));
        let direct = Echelon::from_rows(field, 4, vec![vec![0, 2, 4, 0], vec![1, 1, 0, 1]]);
        assert_eq!(e, direct);
    }
}
