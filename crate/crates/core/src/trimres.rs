//! Explicit free resolution of a trimmed Gorenstein ideal `(Pf_j : j ≠ i) + m·Pf_i`.
//!
//! For an alternating `M` of size `N` with signed submaximal Pfaffians `pf` (`M·pf = 0`) and a
//! trimmed index `i`, the complex is
//!
//! ```text
//! 0 → R ⊕ ∧³U --d3--> V* ⊕ ∧²U --d2--> V' ⊕ U --d1--> R
//! ```
//!
//! with `U = R^3` carrying the Koszul map `e_x, e_y, e_z ↦ x, y, z`, `V'` the summand of `V`
//! without `e_i`, and
//!
//! * `d1(e_j) = pf_j`, `d1(e_u) = x_u·pf_i`;
//! * `d2(e_k*) = (Σ_{j≠i} M[k][j] e_j, −q(e_k*))`, `d2(e_a∧e_b) = x_a e_b − x_b e_a`;
//! * `d3(ω) = (Σ_k pf_k e_k*, B)`, `d3(e_xyz) = x e_yz − y e_xz + z e_xy`,
//!
//! where `q(e_k*)` lifts `M[i][k]` through the Koszul map and `B` lifts `Σ_k pf_k q(e_k*)`
//! through `∧²U → U`.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::altpf::{sub_pfaffians, AltMatrix};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::GradedIdeal;
use crate::koszul::BettiTable;
use crate::linalg::{rank, solve, Matrix};
use crate::poly::{strand_basis, strand_dim, Monomial, Poly, NVARS};
use crate::polymat::PolyMatrix;

/// Basis of `∧²U`, in this order.
pub const WEDGE2: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// `f = x·a + y·b + z·c`, dividing each monomial by the first variable (in the order x, y, z)
/// that divides it.
pub fn lift_through_x(f: &Poly) -> Result<[Poly; 3]> {
    if f.constant_term() != 0 {
        return Err(Error::ConstantTerm(f.to_string()));
    }
    let field = f.field();
    let mut out = [Poly::zero(field), Poly::zero(field), Poly::zero(field)];
    for (m, &c) in f.terms() {
        let v = (0..NVARS).find(|&v| m.0[v] > 0).expect("nonconstant monomial");
        out[v].add_term(m.div(&Monomial::var(v)).unwrap(), c);
    }
    Ok(out)
}

/// Koszul map `U → R`: `(a, b, c) ↦ xa + yb + zc`.
pub fn koszul_u(u: &[Poly; 3]) -> Poly {
    let field = u[0].field();
    (0..NVARS).fold(Poly::zero(field), |acc, v| &acc + &(&Poly::var(field, v) * &u[v]))
}

/// Koszul map `∧²U → U` in the [`WEDGE2`] basis.
pub fn koszul_wedge2(w: &[Poly; 3]) -> [Poly; 3] {
    let field = w[0].field();
    let mut out = [Poly::zero(field), Poly::zero(field), Poly::zero(field)];
    for (k, &(a, b)) in WEDGE2.iter().enumerate() {
        out[b] = &out[b] + &(&Poly::var(field, a) * &w[k]);
        out[a] = &out[a] - &(&Poly::var(field, b) * &w[k]);
    }
    out
}

#[derive(Clone, Debug)]
pub struct TrimInput {
    matrix: AltMatrix,
    /// 0-based trimmed index
    index: usize,
    pf: Vec<Poly>,
}

impl TrimInput {
    /// `index` is 1-based.
    pub fn new(matrix: AltMatrix, index: usize) -> Result<Self> {
        let n = matrix.size();
        if n % 2 == 0 {
            return Err(Error::SizeParity(n));
        }
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, len: n });
        }
        let i0 = index - 1;
        for k in 0..n {
            let e = matrix.get(i0, k);
            if e.constant_term() != 0 {
                return Err(Error::ConstantTerm(format!("entry ({index},{}) = {e}", k + 1)));
            }
        }
        let pf = sub_pfaffians(&matrix)?.pf;
        if pf[i0].is_zero() {
            return Err(Error::ZeroGenerator(index));
        }
        if let Some(k) = pf.iter().position(Poly::is_zero) {
            return Err(Error::ZeroGenerator(k + 1));
        }
        Ok(TrimInput { matrix, index: i0, pf })
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &AltMatrix {
        &self.matrix
    }

    /// 1-based trimmed index.
    pub fn index(&self) -> usize {
        self.index + 1
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    /// Signed submaximal Pfaffians, `M · pf = 0`.
    pub fn pfaffians(&self) -> &[Poly] {
        &self.pf
    }

    pub fn pfaffian_ideal(&self) -> GradedIdeal {
        GradedIdeal::new(self.field(), self.pf.clone()).expect("nonzero homogeneous Pfaffians")
    }

    pub fn trimmed_ideal(&self) -> GradedIdeal {
        self.pfaffian_ideal().trim(self.index + 1).expect("index validated")
    }

    /// `K`, `K_0 = (Pf_i)`, `K' = (Pf_j : j ≠ i)`.
    pub fn k_ideals(&self) -> KIdeals {
        let field = self.field();
        let others: Vec<Poly> = self.pf.iter().enumerate().filter(|(k, _)| *k != self.index).map(|(_, p)| p.clone()).collect();
        KIdeals {
            k: self.pfaffian_ideal(),
            k0: GradedIdeal::new(field, vec![self.pf[self.index].clone()]).unwrap(),
            kprime: GradedIdeal::new(field, others).unwrap(),
        }
    }

    /// Whether `R/K` is Artinian with one-dimensional socle, checked through degree `dmax`.
    pub fn is_gorenstein_artinian(&self, dmax: u32) -> bool {
        self.pfaffian_ideal().socle_type(dmax).map(|t| t.values().sum::<usize>() == 1).unwrap_or(false)
    }

    /// `φ = φ' + v_0 ∧ v_0'`: returns `v_0'` (row `i` of `M`, zero in slot `i`) and `φ'`
    /// (`M` with row and column `i` cleared).
    pub fn decompose(&self) -> Decomposition {
        let n = self.size();
        let v0_prime = (0..n).map(|k| self.matrix.get(self.index, k)).collect();
        let mut phi_prime = self.matrix.clone();
        for k in 0..n {
            if k != self.index {
                phi_prime.set(self.index, k, Poly::zero(self.field()));
            }
        }
        Decomposition { index: self.index, v0_prime, phi_prime }
    }

    /// `q(e_k*) = lift_through_x(M[i][k])`.
    pub fn build_q(&self) -> Vec<[Poly; 3]> {
        (0..self.size()).map(|k| lift_through_x(&self.matrix.get(self.index, k)).expect("row entries checked in R_+")).collect()
    }

    /// `μ(K) + 2 − rank(q ⊗ k)`.
    pub fn predicted_mu(&self) -> usize {
        let mu_k = self.pfaffian_ideal().min_gens().mu;
        mu_k + 2 - q_constant_rank(self.field(), &self.build_q())
    }
}

pub fn q_constant_rank(field: Field, q: &[[Poly; 3]]) -> usize {
    let m = Matrix::from_rows(3, q.iter().map(|u| u.iter().map(Poly::constant_term).collect()));
    rank(field, &m)
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub index: usize,
    pub v0_prime: Vec<Poly>,
    pub phi_prime: AltMatrix,
}

impl Decomposition {
    /// `φ' + v_0 ∧ v_0'`.
    pub fn reassemble(&self) -> AltMatrix {
        let mut m = self.phi_prime.clone();
        for (k, p) in self.v0_prime.iter().enumerate() {
            if k != self.index {
                m.set(self.index, k, p.clone());
            }
        }
        m
    }

    /// `proj(v) = v − w_0(v)·v_0` on coordinate vectors.
    pub fn proj(&self, v: &[Poly]) -> Vec<Poly> {
        let mut out = v.to_vec();
        out[self.index] = Poly::zero(v[self.index].field());
        out
    }
}

pub struct KIdeals {
    pub k: GradedIdeal,
    pub k0: GradedIdeal,
    pub kprime: GradedIdeal,
}

impl KIdeals {
    /// `(K' : K_0) ⊆ m` holds exactly when the generator of `K_0` is not in `K'`.
    pub fn colon_in_maximal(&self) -> bool {
        !self.kprime.contains(&self.k0.gens()[0])
    }
}

/// `t = Σ_k pf_k q(e_k*)`, which must be a Koszul cycle.
pub fn koszul_target(pf: &[Poly], q: &[[Poly; 3]]) -> [Poly; 3] {
    let field = pf[0].field();
    let mut t = [Poly::zero(field), Poly::zero(field), Poly::zero(field)];
    for (p, qk) in pf.iter().zip(q) {
        for v in 0..NVARS {
            t[v] = &t[v] + &(p * &qk[v]);
        }
    }
    t
}

/// Some `B ∈ ∧²U` with `∂B = t`, found by solving the strand system.
pub fn build_b(pf: &[Poly], q: &[[Poly; 3]]) -> Result<[Poly; 3]> {
    let t = koszul_target(pf, q);
    let field = pf[0].field();
    if !koszul_u(&t).is_zero() {
        return Err(Error::NotACycle(format!("x(t) = {}", koszul_u(&t))));
    }
    let zero = [Poly::zero(field), Poly::zero(field), Poly::zero(field)];
    let Some(deg) = t.iter().filter_map(Poly::degree).max() else {
        return Ok(zero);
    };
    if t.iter().any(|p| !p.is_zero() && (!p.is_homogeneous() || p.degree() != Some(deg))) {
        return Err(Error::NotHomogeneous);
    }
    if deg == 0 {
        return Err(Error::NotACycle("constant nonzero cycle".into()));
    }
    let src = strand_basis(deg - 1);
    let nt = strand_dim(deg as i64);
    // column convention: rows are equations (U-slot, monomial), columns unknowns
    let mut m = Matrix::zeros(3 * nt, 3 * src.len());
    for (k, &(a, b)) in WEDGE2.iter().enumerate() {
        for (c, mono) in src.iter().enumerate() {
            let col = k * src.len() + c;
            m.set(b * nt + mono.mul(&Monomial::var(a)).strand_index(), col, 1);
            m.set(a * nt + mono.mul(&Monomial::var(b)).strand_index(), col, field.neg(1));
        }
    }
    let rhs: Vec<u32> = t.iter().flat_map(|p| p.strand_vector(deg)).collect();
    let sol = solve(field, &m, &rhs).ok_or_else(|| Error::NotACycle("no preimage under ∧²U → U".into()))?;
    let b: [Poly; 3] = std::array::from_fn(|k| Poly::from_strand_vector(field, deg - 1, &sol[k * src.len()..(k + 1) * src.len()]));
    debug_assert_eq!(koszul_wedge2(&b), t);
    Ok(b)
}

/// Another valid lift: `q + ∂∘h` for a random homogeneous `h : V* → ∧²U`.
pub fn perturbed_q(field: Field, q: &[[Poly; 3]], rng: &mut impl Rng) -> Vec<[Poly; 3]> {
    q.iter()
        .map(|qk| {
            let Some(d) = qk.iter().filter_map(Poly::degree).max() else {
                return qk.clone();
            };
            if d == 0 {
                return qk.clone();
            }
            let h: [Poly; 3] = std::array::from_fn(|_| {
                let v: Vec<u32> = (0..strand_dim(d as i64 - 1)).map(|_| rng.gen_range(0..field.p())).collect();
                Poly::from_strand_vector(field, d - 1, &v)
            });
            let dh = koszul_wedge2(&h);
            std::array::from_fn(|v| &qk[v] + &dh[v])
        })
        .collect()
}

/// Homogeneous map of graded free modules; column `c` is the image of source generator `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub matrix: PolyMatrix,
    pub source_degrees: Vec<u32>,
    pub target_degrees: Vec<u32>,
}

impl GradedMap {
    /// Infers source degrees from the columns and checks homogeneity.
    fn with_target(matrix: PolyMatrix, target_degrees: Vec<u32>) -> Result<Self> {
        let mut source_degrees = Vec::with_capacity(matrix.ncols());
        for c in 0..matrix.ncols() {
            let deg = (0..matrix.nrows())
                .find_map(|r| matrix.get(r, c).degree().map(|d| d + target_degrees[r]))
                .ok_or_else(|| Error::DegreeMismatch(format!("column {} is zero", c + 1)))?;
            source_degrees.push(deg);
        }
        let map = GradedMap { matrix, source_degrees, target_degrees };
        map.check_homogeneous()?;
        Ok(map)
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        for r in 0..self.matrix.nrows() {
            for c in 0..self.matrix.ncols() {
                let e = self.matrix.get(r, c);
                if e.is_zero() {
                    continue;
                }
                let want = self.source_degrees[c] as i64 - self.target_degrees[r] as i64;
                if !e.is_homogeneous() || e.degree().map(|d| d as i64) != Some(want) {
                    return Err(Error::DegreeMismatch(format!("entry ({},{}) = {e} should have degree {want}", r + 1, c + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn has_units(&self) -> bool {
        !self.matrix.constant_part().is_zero()
    }

    /// Source-major matrix of the map on degree-`d` strands.
    pub fn strand(&self, d: u32) -> Matrix {
        let offsets = |degs: &[u32]| {
            let mut off = Vec::with_capacity(degs.len() + 1);
            let mut acc = 0;
            for &g in degs {
                off.push(acc);
                acc += strand_dim(d as i64 - g as i64);
            }
            off.push(acc);
            off
        };
        let (so, to) = (offsets(&self.source_degrees), offsets(&self.target_degrees));
        let mut m = Matrix::zeros(*so.last().unwrap(), *to.last().unwrap());
        let field = self.matrix.field();
        for c in 0..self.matrix.ncols() {
            let Some(sd) = d.checked_sub(self.source_degrees[c]) else { continue };
            for (k, mono) in strand_basis(sd).iter().enumerate() {
                let row = so[c] + k;
                for r in 0..self.matrix.nrows() {
                    let e = self.matrix.get(r, c);
                    for (t, &coef) in e.terms() {
                        let idx = to[r] + t.mul(mono).strand_index();
                        let cur = m.get(row, idx);
                        m.set(row, idx, field.add(cur, coef));
                    }
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.matrix.ncols()
    }
}

fn strand_rank_sum(degs: &[u32], d: u32) -> usize {
    degs.iter().map(|&g| strand_dim(d as i64 - g as i64)).sum()
}

#[derive(Clone, Debug)]
pub struct TrimComplex {
    pub input: TrimInput,
    pub q: Vec<[Poly; 3]>,
    pub b: [Poly; 3],
    pub d1: GradedMap,
    pub d2: GradedMap,
    pub d3: GradedMap,
}

pub fn build_complex(input: &TrimInput) -> Result<TrimComplex> {
    build_complex_with_q(input, input.build_q())
}

/// Assembles the complex from a given lift `q` (any `q` with `x∘q = v_0'`).
pub fn build_complex_with_q(input: &TrimInput, q: Vec<[Poly; 3]>) -> Result<TrimComplex> {
    let field = input.field();
    let n = input.size();
    let i0 = input.index;
    let m = &input.matrix;
    let pf = &input.pf;
    for (k, qk) in q.iter().enumerate() {
        if koszul_u(qk) != m.get(i0, k) {
            return Err(Error::Precondition(format!("q does not lift entry {}", k + 1)));
        }
    }
    let b = build_b(pf, &q)?;
    let others: Vec<usize> = (0..n).filter(|&k| k != i0).collect();
    let var = |v: usize| Poly::var(field, v);

    // d1: F1 = V' ⊕ U → R
    let mut d1m = PolyMatrix::zeros(field, 1, n + 2);
    for (c, &j) in others.iter().enumerate() {
        d1m.set(0, c, pf[j].clone());
    }
    for v in 0..NVARS {
        d1m.set(0, n - 1 + v, &var(v) * &pf[i0]);
    }
    let d1 = GradedMap::with_target(d1m, vec![0])?;

    // d2: F2 = V* ⊕ ∧²U → V' ⊕ U
    let mut d2m = PolyMatrix::zeros(field, n + 2, n + 3);
    for k in 0..n {
        for (r, &j) in others.iter().enumerate() {
            d2m.set(r, k, m.get(k, j));
        }
        for v in 0..NVARS {
            d2m.set(n - 1 + v, k, -&q[k][v]);
        }
    }
    for (w, &(a, bb)) in WEDGE2.iter().enumerate() {
        d2m.set(n - 1 + bb, n + w, var(a));
        d2m.set(n - 1 + a, n + w, -var(bb));
    }
    let d2 = GradedMap::with_target(d2m, d1.source_degrees.clone())?;

    // d3: F3 = R ⊕ ∧³U → V* ⊕ ∧²U
    let mut d3m = PolyMatrix::zeros(field, n + 3, 2);
    for k in 0..n {
        d3m.set(k, 0, pf[k].clone());
    }
    for w in 0..3 {
        d3m.set(n + w, 0, b[w].clone());
    }
    // e_xyz ↦ x e_yz − y e_xz + z e_xy
    d3m.set(n + 2, 1, var(0));
    d3m.set(n + 1, 1, -var(1));
    d3m.set(n, 1, var(2));
    let d3 = GradedMap::with_target(d3m, d2.source_degrees.clone())?;

    Ok(TrimComplex { input: input.clone(), q, b, d1, d2, d3 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub degree: u32,
    /// `dim (F_k)_d`, k = 0..3
    pub dims: [usize; 4],
    /// `rank (d_k)_d`, k = 1..3
    pub ranks: [usize; 3],
    /// `dim (R/I)_d`
    pub hf: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub dmax: u32,
    pub is_complex: bool,
    pub exact: bool,
    pub degrees: Vec<DegreeCheck>,
}

impl TrimComplex {
    pub fn maps(&self) -> [&GradedMap; 3] {
        [&self.d1, &self.d2, &self.d3]
    }

    /// Generator degrees of `F_0, …, F_3`.
    pub fn shifts(&self) -> [Vec<u32>; 4] {
        [self.d1.target_degrees.clone(), self.d1.source_degrees.clone(), self.d2.source_degrees.clone(), self.d3.source_degrees.clone()]
    }

    pub fn ranks(&self) -> [usize; 4] {
        [1, self.d1.rank(), self.d2.rank(), self.d3.rank()]
    }

    /// `d1∘d2 = 0` and `d2∘d3 = 0` as polynomial identities.
    pub fn is_complex(&self) -> bool {
        self.d1.matrix.mul(&self.d2.matrix).is_zero() && self.d2.matrix.mul(&self.d3.matrix).is_zero()
    }

    /// No differential has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.maps().iter().all(|m| !m.has_units())
    }

    /// Strand-wise check that the complex resolves `R/I`, for degrees `0..=dmax`.
    pub fn verify_exactness(&self, dmax: u32) -> ExactnessReport {
        let ideal = self.input.trimmed_ideal();
        for d in 0..=dmax {
            ideal.strand(d);
        }
        let shifts = self.shifts();
        let field = self.input.field();
        let degrees: Vec<DegreeCheck> = (0..=dmax)
            .into_par_iter()
            .map(|d| {
                let dims: [usize; 4] = std::array::from_fn(|k| strand_rank_sum(&shifts[k], d));
                let ranks: [usize; 3] = std::array::from_fn(|k| rank(field, &self.maps()[k].strand(d)));
                let hf = strand_dim(d as i64) - ideal.strand_dim(d);
                let exact = dims[0] - ranks[0] == hf && dims[1] == ranks[0] + ranks[1] && dims[2] == ranks[1] + ranks[2] && dims[3] == ranks[2];
                DegreeCheck { degree: d, dims, ranks, hf, exact }
            })
            .collect();
        let is_complex = self.is_complex();
        ExactnessReport { dmax, is_complex, exact: is_complex && degrees.iter().all(|c| c.exact), degrees }
    }

    /// Betti numbers of the complex after cancelling unit entries.
    pub fn cancelled_betti(&self) -> BettiTable {
        let field = self.input.field();
        let shifts = self.shifts();
        // rank of the constant block of d_k between generators of degree j
        let unit_rank = |k: usize, j: u32| -> usize {
            let map = self.maps()[k - 1];
            let cols: Vec<usize> = (0..map.source_degrees.len()).filter(|&c| map.source_degrees[c] == j).collect();
            let rows: Vec<usize> = (0..map.target_degrees.len()).filter(|&r| map.target_degrees[r] == j).collect();
            if cols.is_empty() || rows.is_empty() {
                return 0;
            }
            let m = Matrix::from_rows(rows.len(), cols.iter().map(|&c| rows.iter().map(|&r| map.matrix.get(r, c).constant_term()).collect()));
            rank(field, &m)
        };
        let mut entries = BTreeMap::new();
        for (k, degs) in shifts.iter().enumerate() {
            for &j in degs {
                *entries.entry((k, j)).or_insert(0usize) += 1;
            }
        }
        let mut out = Vec::new();
        for (&(k, j), &count) in &entries {
            let lose = if k >= 1 { unit_rank(k, j) } else { 0 } + if k < 3 { unit_rank(k + 1, j) } else { 0 };
            out.push(((k, j), count - lose));
        }
        BettiTable::from_entries(out)
    }

    pub fn to_json(&self, report: Option<&ExactnessReport>) -> ComplexJson {
        let map_json = |m: &GradedMap| MapJson {
            rows: (0..m.matrix.nrows()).map(|r| (0..m.matrix.ncols()).map(|c| m.matrix.get(r, c).to_string()).collect()).collect(),
            source_degrees: m.source_degrees.clone(),
            target_degrees: m.target_degrees.clone(),
        };
        ComplexJson {
            size: self.input.size(),
            index: self.input.index(),
            ranks: self.ranks(),
            shifts: self.shifts(),
            d1: map_json(&self.d1),
            d2: map_json(&self.d2),
            d3: map_json(&self.d3),
            q: self.q.iter().map(|u| u.iter().map(|p| p.to_string()).collect()).collect(),
            b: self.b.iter().map(|p| p.to_string()).collect(),
            minimal: self.is_minimal(),
            verification: report.cloned(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapJson {
    pub rows: Vec<Vec<String>>,
    pub source_degrees: Vec<u32>,
    pub target_degrees: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub size: usize,
    pub index: usize,
    pub ranks: [usize; 4],
    pub shifts: [Vec<u32>; 4],
    pub d1: MapJson,
    pub d2: MapJson,
    pub d3: MapJson,
    pub q: Vec<Vec<String>>,
    /// coordinates on `e_x∧e_y, e_x∧e_z, e_y∧e_z`
    pub b: Vec<String>,
    pub minimal: bool,
    pub verification: Option<ExactnessReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::altpf::{h_even, v_j};

    fn f() -> Field {
        Field::default()
    }

    fn p(s: &str) -> Poly {
        Poly::parse(f(), s).unwrap()
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_through_x(&p("x^2")).unwrap(), [p("x"), p("0"), p("0")]);
        assert_eq!(lift_through_x(&p("y^2*z")).unwrap(), [p("0"), p("y*z"), p("0")]);
        let g = p("3*x*y + 2*y*z - z^2 + x^3");
        assert_eq!(koszul_u(&lift_through_x(&g).unwrap()), g);
        assert!(lift_through_x(&p("x + 1")).is_err());
    }

    #[test]
    fn wedge2_koszul_is_a_complex() {
        let w = [p("x"), p("y^2"), p("x*z")];
        assert!(koszul_u(&koszul_wedge2(&w)).is_zero());
    }

    #[test]
    fn extremal_trim_complex() {
        for s in 2..=4 {
            let input = TrimInput::new(v_j(f(), s, s).unwrap(), s + 1).unwrap();
            let dec = input.decompose();
            assert_eq!(dec.reassemble(), *input.matrix());
            let c = build_complex(&input).unwrap();
            assert!(c.is_complex());
            assert!(!c.is_minimal());
            assert_eq!(q_constant_rank(f(), &c.q), 1);
            assert_eq!(input.predicted_mu(), 2 * s + 2);
            let rep = c.verify_exactness(3 * s as u32 + 3);
            assert!(rep.exact, "{rep:?}");
            let direct = crate::koszul::betti(&input.trimmed_ideal(), 3 * s as u32 + 3).unwrap();
            assert_eq!(c.cancelled_betti(), direct);
        }
    }

    #[test]
    fn broken_complex_is_detected() {
        let input = TrimInput::new(h_even(f(), 4).unwrap(), 1).unwrap();
        let mut c = build_complex(&input).unwrap();
        assert!(c.verify_exactness(15).exact);
        let (r, col) = (0..c.d2.matrix.nrows())
            .flat_map(|r| (0..c.d2.matrix.ncols()).map(move |col| (r, col)))
            .find(|&(r, col)| !c.d2.matrix.get(r, col).is_zero())
            .unwrap();
        c.d2.matrix.set(r, col, Poly::zero(f()));
        let rep = c.verify_exactness(15);
        assert!(!rep.exact);
    }

    #[test]
    fn input_validation() {
        let m = h_even(f(), 4).unwrap();
        assert!(TrimInput::new(m.clone(), 0).is_err());
        assert!(TrimInput::new(m, 6).is_err());
        let mut unit = AltMatrix::zero(f(), 3);
        unit.set(0, 1, p("1"));
        unit.set(0, 2, p("x"));
        unit.set(1, 2, p("y"));
        assert!(TrimInput::new(unit, 1).is_err());
    }
}
