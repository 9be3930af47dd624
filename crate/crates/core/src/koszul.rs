//! Graded Betti numbers through the Koszul complex `∧^• k^3 ⊗ R/I`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{ann, var_shift, GradedIdeal, InverseSystem, QuotientAlgebra};
use crate::linalg::{rank, Matrix};
use crate::poly::{contract_unchecked, strand_basis, strand_dim, DualForm, Poly, NVARS};

/// Subsets of `{x, y, z}` of size `i` as bitmasks, ascending.
pub fn wedge_basis(i: usize) -> Vec<u8> {
    (0u8..8).filter(|m| m.count_ones() as usize == i).collect()
}

/// `∂ e_S = Σ_k (-1)^{pos(k)} x_k e_{S∖k}` as (variable, sign, target mask) triples.
pub fn koszul_boundary(mask: u8) -> Vec<(usize, bool, u8)> {
    let mut out = Vec::new();
    let mut pos = 0;
    for k in 0..NVARS {
        if mask & (1 << k) != 0 {
            out.push((k, pos % 2 == 1, mask & !(1 << k)));
            pos += 1;
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub beta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, u32), usize)>) -> Self {
        let mut t = BettiTable::default();
        for ((i, j), b) in entries {
            if b > 0 {
                *t.entries.entry((i, j)).or_insert(0) += b;
            }
        }
        t
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), usize> {
        &self.entries
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, &b)| b).sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Degrees of nonzero entries in homological position `i`, with multiplicities.
    pub fn degrees(&self, i: usize) -> BTreeMap<u32, usize> {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(&(_, j), &b)| (j, b)).collect()
    }

    /// `Σ_i (-1)^i β_{i,j}`.
    pub fn euler(&self, j: u32) -> i64 {
        (0..=3).map(|i| if i % 2 == 0 { 1 } else { -1 } * self.get(i, j) as i64).sum()
    }

    /// One-line form `b1,3=4 b2,5=4 ...`, skipping `β_{0,0}`.
    pub fn to_compact(&self) -> String {
        let cells: Vec<String> = self.entries.iter().filter(|(&(i, _), _)| i > 0).map(|(&(i, j), &b)| format!("b{i},{j}={b}")).collect();
        cells.join(" ")
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson { entries: self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect() }
    }

    pub fn from_json(js: &BettiJson) -> Self {
        BettiTable::from_entries(js.entries.iter().map(|e| ((e.i, e.j), e.beta)))
    }

    /// Macaulay2-style table: columns are homological indices, rows are `j - i`.
    pub fn to_text(&self) -> String {
        let len = self.length();
        let max_row = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0);
        let min_row = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap_or(0).min(0);
        let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut cells: Vec<Vec<String>> = Vec::new();
        cells.push(std::iter::once(String::new()).chain((0..=len).map(|i| i.to_string())).collect());
        cells.push(std::iter::once("total:".to_string()).chain((0..=len).map(|i| self.total(i).to_string())).collect());
        for r in min_row..=max_row {
            let mut row = vec![format!("{r}:")];
            for i in 0..=len {
                let j = r + i as i64;
                row.push(if j < 0 { ".".into() } else { cell(self.get(i, j as u32)) });
            }
            cells.push(row);
        }
        let ncol = len + 2;
        let widths: Vec<usize> = (0..ncol).map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &cells {
            let mut line = String::new();
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{v:>w$}", w = widths[c]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Matrix of `δ_i : ∧^i ⊗ A_{j-i} → ∧^{i-1} ⊗ A_{j-i+1}`, one row per source basis element
/// (wedge basis outer, standard monomials inner).
pub fn koszul_strand(a: &QuotientAlgebra, i: usize, j: i64) -> Matrix {
    let src_deg = j - i as i64;
    let (ds, dt) = (a.dim(src_deg), a.dim(src_deg + 1));
    let src = wedge_basis(i);
    if i == 0 {
        return Matrix::zeros(ds, 0);
    }
    let tgt = wedge_basis(i - 1);
    let mut m = Matrix::zeros(src.len() * ds, tgt.len() * dt);
    if ds == 0 || dt == 0 {
        return m;
    }
    let mults: Vec<Matrix> = (0..NVARS).map(|v| a.var_mult(src_deg, v)).collect();
    let field = a.field();
    for (si, &s) in src.iter().enumerate() {
        for (v, neg, t) in koszul_boundary(s) {
            let ti = tgt.iter().position(|&x| x == t).unwrap();
            for r in 0..ds {
                for c in 0..dt {
                    let e = mults[v].get(r, c);
                    if e != 0 {
                        m.set(si * ds + r, ti * dt + c, if neg { field.neg(e) } else { e });
                    }
                }
            }
        }
    }
    m
}

/// `β_{i,j}(R/I)` for all `i, j`; `dmax` bounds the search for the top degree of `R/I`.
pub fn betti(ideal: &GradedIdeal, dmax: u32) -> Result<BettiTable> {
    let a = QuotientAlgebra::new(ideal, dmax)?;
    Ok(betti_of_algebra(&a))
}

pub fn betti_of_algebra(a: &QuotientAlgebra) -> BettiTable {
    let field = a.field();
    let top = a.top_degree() + 3;
    let entries: Vec<((usize, u32), usize)> = (0..=top)
        .into_par_iter()
        .flat_map_iter(|j| {
            let ranks: Vec<usize> = (0..=4).map(|i| if (1..=3).contains(&i) { rank(field, &koszul_strand(a, i, j)) } else { 0 }).collect();
            (0..=3usize)
                .map(move |i| {
                    let dim = wedge_basis(i).len() * a.dim(j - i as i64);
                    ((i, j as u32), dim - ranks[i] - ranks[i + 1])
                })
                .collect::<Vec<_>>()
        })
        .collect();
    BettiTable::from_entries(entries)
}

/// Least degree in which `Φ_d(φ)` fails to be injective, i.e. the initial degree of `ann(φ)`.
pub fn initial_degree(phi: &DualForm) -> Result<u32> {
    let sys = InverseSystem::single(phi.clone())?;
    let a = ann(&sys, 0);
    (0..=phi.degree() + 1).find(|&d| a.strand_dim(d) > 0).ok_or(Error::Precondition("zero form".into()))
}

/// `Θ_i(φ) = (1 ⊗ Φ_t) ∘ δ_i` on `∧^i ⊗ S_{t-1}`, where `t` is the initial degree of
/// `ann(φ)`. Returns the matrix and `t`.
pub fn theta_matrix(phi: &DualForm, i: usize) -> Result<(Matrix, u32)> {
    if !(1..=3).contains(&i) {
        return Err(Error::Precondition(format!("Θ_i needs 1 <= i <= 3, got {i}")));
    }
    if phi.is_zero() {
        return Err(Error::Precondition("zero form".into()));
    }
    let t = initial_degree(phi)?;
    if t == 0 {
        return Err(Error::Precondition("initial degree must be positive".into()));
    }
    let field = phi.field();
    let c = phi.degree();
    let src_basis = strand_basis(t - 1);
    let out_deg = c.checked_sub(t).ok_or_else(|| Error::Precondition("initial degree exceeds form degree".into()))?;
    let dual_dim = strand_dim(out_deg as i64);
    let images: Vec<Vec<u32>> = strand_basis(t).iter().map(|m| contract_unchecked(&Poly::monomial(field, *m), phi, out_deg).strand_vector()).collect();
    let src = wedge_basis(i);
    let tgt = wedge_basis(i - 1);
    let shifts: Vec<Vec<usize>> = (0..NVARS).map(|v| var_shift(t - 1, v)).collect();
    let mut m = Matrix::zeros(src.len() * src_basis.len(), tgt.len() * dual_dim);
    for (si, &s) in src.iter().enumerate() {
        for (v, neg, tmask) in koszul_boundary(s) {
            let ti = tgt.iter().position(|&x| x == tmask).unwrap();
            for r in 0..src_basis.len() {
                let img = &images[shifts[v][r]];
                for (k, &e) in img.iter().enumerate() {
                    if e != 0 {
                        let val = if neg { field.neg(e) } else { e };
                        let cur = m.get(si * src_basis.len() + r, ti * dual_dim + k);
                        m.set(si * src_basis.len() + r, ti * dual_dim + k, field.add(cur, val));
                    }
                }
            }
        }
    }
    Ok((m, t))
}

pub fn theta_rank(phi: &DualForm, i: usize) -> Result<usize> {
    let (m, _) = theta_matrix(phi, i)?;
    Ok(rank(phi.field(), &m))
}

/// `dim Tor_i(R/ann φ, k)_{i+t-1} = binom(t+i-2, i-1)·binom(t+2, 3-i) − rank Θ_i(φ)`.
/// Returns the value together with the internal degree `i + t - 1`.
pub fn tor_dim_via_theta(phi: &DualForm, i: usize) -> Result<(i64, u32)> {
    let (m, t) = theta_matrix(phi, i)?;
    let t = t as i64;
    let i64_ = i as i64;
    let image_dim = binom(t + i64_ - 2, i64_ - 1) * binom(t + 2, 3 - i64_);
    Ok((image_dim - rank(phi.field(), &m) as i64, (i64_ + t - 1) as u32))
}

/// Binomial coefficient, zero outside `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, j| acc * (n - j) / (j + 1))
}

/// `binom(t+i-2, i-1)·binom(t-1+r, r-i) − m·binom(c-t+r-i, r-i)·binom(c-t+r, i-1)`.
pub fn compressed_level_strand(r: i64, c: i64, m: i64, t: i64, i: i64) -> i64 {
    binom(t + i - 2, i - 1) * binom(t - 1 + r, r - i) - m * binom(c - t + r - i, r - i) * binom(c - t + r, i - 1)
}

/// Coefficients of the three pure diagrams in the decomposition of the Gorenstein table with
/// `b` extra linear syzygies.
pub fn bs_coefficients(s: i64, b: i64) -> [Ratio<i64>; 3] {
    let n = (s + 1) * (s + 1);
    let outer = Ratio::new(b, 2 * n - 2);
    let middle = Ratio::new(n - 1 - (s + 1) * b, n - 1);
    [outer, middle, outer]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn f() -> Field {
        Field::default()
    }

    fn ideal(gens: &[&str]) -> GradedIdeal {
        GradedIdeal::parse(f(), gens).unwrap()
    }

    #[test]
    fn koszul_complex_of_residue_field() {
        let t = betti(&ideal(&["x", "y", "z"]), 4).unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 0), 1), ((1, 1), 3), ((2, 2), 3), ((3, 3), 1)]));
    }

    #[test]
    fn complete_intersection() {
        let t = betti(&ideal(&["x^2", "y^2", "z^2"]), 6).unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 0), 1), ((1, 2), 3), ((2, 4), 3), ((3, 6), 1)]));
        let text = t.to_text();
        assert!(text.contains("total: 1 3 3 1"), "{text}");
    }

    #[test]
    fn strands_compose_to_zero() {
        let i = ideal(&["x^2", "x*y", "y^3", "z^3", "x*z^2"]);
        let a = QuotientAlgebra::new(&i, 8).unwrap();
        for j in 0..8 {
            for k in 2..=3 {
                let prod = koszul_strand(&a, k, j).matmul(f(), &koszul_strand(&a, k - 1, j));
                assert!(prod.is_zero());
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let t = betti(&ideal(&["x^2", "y^2", "z^2"]), 6).unwrap();
        assert_eq!(BettiTable::from_json(&t.to_json()), t);
    }

    #[test]
    fn closed_forms() {
        for s in 2..8 {
            assert_eq!(compressed_level_strand(3, 2 * s - 1, 1, s, 1), s + 1);
            assert_eq!(compressed_level_strand(3, 2 * s - 2, 1, s, 1), 2 * s + 1);
            assert_eq!(compressed_level_strand(3, 2 * s - 1, 1, s, 2), 0);
        }
        assert_eq!(bs_coefficients(3, 0), [Ratio::from(0), Ratio::from(1), Ratio::from(0)]);
        assert_eq!(bs_coefficients(3, 4)[1], Ratio::new(-1, 15));
        assert_eq!(bs_coefficients(3, 3)[1], Ratio::new(3, 15));
    }

    #[test]
    fn theta_agrees_with_betti_for_monomial_form() {
        let phi = DualForm::parse(f(), 3, "X*Y*Z").unwrap();
        let t = betti(&ann(&InverseSystem::single(phi.clone()).unwrap(), 0), 6).unwrap();
        for i in 2..=3 {
            let (v, j) = tor_dim_via_theta(&phi, i).unwrap();
            assert_eq!(v, t.get(i, j) as i64, "i={i}");
        }
    }
}
