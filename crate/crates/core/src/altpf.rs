//! Alternating matrices over `k[x,y,z]`, Pfaffians, submaximal Pfaffian ideals, and the
//! explicit matrix families used throughout the crate.
//!
//! Indices in this module are 0-based; the `k`-th submaximal Pfaffian `Pf_{k+1}` carries the
//! sign `(-1)^k`, which makes `M · pf = 0` hold exactly.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Poly};
use crate::polymat::PolyMatrix;

/// Alternating matrix: structurally zero diagonal, `M[j][i] = -M[i][j]`.
#[derive(Clone, PartialEq, Eq)]
pub struct AltMatrix {
    field: Field,
    size: usize,
    // strict upper triangle, row-major
    upper: Vec<Poly>,
}

impl fmt::Debug for AltMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_poly_matrix())
    }
}

impl AltMatrix {
    pub fn zero(field: Field, size: usize) -> Self {
        let n = size * size.saturating_sub(1) / 2;
        AltMatrix { field, size, upper: vec![Poly::zero(field); n] }
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.size);
        i * self.size - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Sets `M[i][j] = p` and `M[j][i] = -p`.
    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert!(i != j, "diagonal of an alternating matrix is structurally zero");
        assert!(i < self.size && j < self.size);
        if i < j {
            let s = self.slot(i, j);
            self.upper[s] = p;
        } else {
            let s = self.slot(j, i);
            self.upper[s] = -p;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Poly {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Poly::zero(self.field),
            std::cmp::Ordering::Less => self.upper[self.slot(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.upper[self.slot(j, i)],
        }
    }

    /// Borrow of the upper-triangle entry for `i < j`.
    pub fn upper(&self, i: usize, j: usize) -> &Poly {
        &self.upper[self.slot(i, j)]
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        (0..self.size).map(|j| self.get(i, j)).collect()
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.field, self.size, self.size, |i, j| self.get(i, j))
    }

    /// Builds from an arbitrary square matrix, checking `M + Mᵀ = 0` and a zero diagonal.
    pub fn from_poly_matrix(m: &PolyMatrix) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotAlternating(format!("{}x{} is not square", m.nrows(), m.ncols())));
        }
        let n = m.nrows();
        let mut out = AltMatrix::zero(m.field(), n);
        for i in 0..n {
            if !m.get(i, i).is_zero() {
                return Err(Error::NotAlternating(format!("nonzero diagonal entry at {}", i + 1)));
            }
            for j in i + 1..n {
                if (m.get(i, j) + m.get(j, i)).is_zero() {
                    out.set(i, j, m.get(i, j).clone());
                } else {
                    return Err(Error::NotAlternating(format!("entries ({},{}) and ({},{}) are not negatives", i + 1, j + 1, j + 1, i + 1)));
                }
            }
        }
        Ok(out)
    }

    /// Principal submatrix on the given (increasing) indices.
    pub fn principal(&self, keep: &[usize]) -> AltMatrix {
        let mut out = AltMatrix::zero(self.field, keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }

    /// Degree of each entry, `None` where the entry is zero.
    pub fn degree_profile(&self) -> Vec<Vec<Option<u32>>> {
        (0..self.size).map(|i| (0..self.size).map(|j| self.get(i, j).degree()).collect()).collect()
    }

    pub fn has_constant_entries(&self) -> bool {
        self.upper.iter().any(|p| p.constant_term() != 0)
    }

    pub fn to_json(&self) -> AltMatrixJson {
        let mut entries = Vec::new();
        for i in 0..self.size {
            for j in i + 1..self.size {
                let p = self.upper(i, j);
                if !p.is_zero() {
                    entries.push(EntryJson { i: i + 1, j: j + 1, poly: p.to_string() });
                }
            }
        }
        AltMatrixJson { size: self.size, entries }
    }

    pub fn from_json(field: Field, js: &AltMatrixJson) -> Result<Self> {
        let n = js.size;
        let mut seen: HashMap<(usize, usize), Poly> = HashMap::new();
        for e in &js.entries {
            if e.i == 0 || e.j == 0 || e.i > n || e.j > n {
                return Err(Error::IndexOutOfRange { index: e.i.max(e.j), len: n });
            }
            let p = Poly::parse(field, &e.poly)?;
            if e.i == e.j {
                if !p.is_zero() {
                    return Err(Error::NotAlternating(format!("nonzero diagonal entry at {}", e.i)));
                }
                continue;
            }
            let (key, val) = if e.i < e.j { ((e.i - 1, e.j - 1), p) } else { ((e.j - 1, e.i - 1), -p) };
            if let Some(prev) = seen.get(&key) {
                if *prev != val {
                    return Err(Error::NotAlternating(format!("conflicting entries for ({},{})", key.0 + 1, key.1 + 1)));
                }
            }
            seen.insert(key, val);
        }
        let mut m = AltMatrix::zero(field, n);
        for ((i, j), p) in seen {
            m.set(i, j, p);
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub i: usize,
    pub j: usize,
    pub poly: String,
}

/// On-disk form: 1-based entries; any entry may be given from either triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltMatrixJson {
    pub size: usize,
    pub entries: Vec<EntryJson>,
}

/// Pfaffian of an even-size alternating matrix, expanding along the first row with sign
/// `(-1)^j` for the `j`-th column (1-based).
pub fn pfaffian(m: &AltMatrix) -> Result<Poly> {
    if m.size % 2 == 1 {
        return Err(Error::SizeParity(m.size));
    }
    let all: Vec<usize> = (0..m.size).collect();
    Ok(PfaffianEngine::new(m).pf(&all))
}

struct PfaffianEngine<'a> {
    m: &'a AltMatrix,
    memo: HashMap<u64, Poly>,
}

impl<'a> PfaffianEngine<'a> {
    fn new(m: &'a AltMatrix) -> Self {
        assert!(m.size <= 64);
        PfaffianEngine { m, memo: HashMap::new() }
    }

    fn pf(&mut self, idx: &[usize]) -> Poly {
        let mask = idx.iter().fold(0u64, |acc, &i| acc | (1 << i));
        self.pf_mask(mask)
    }

    fn pf_mask(&mut self, mask: u64) -> Poly {
        let field = self.m.field;
        if mask == 0 {
            return Poly::constant(field, 1);
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << first);
        let mut acc = Poly::zero(field);
        let mut pos = 0;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            pos += 1;
            let a = self.m.upper(first, j);
            if a.is_zero() {
                continue;
            }
            let sub = self.pf_mask(rest & !(1u64 << j));
            if sub.is_zero() {
                continue;
            }
            let t = a * &sub;
            // position of j inside the current index list is pos + 1 (1-based)
            acc = if pos % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

/// `φ^(n)` for `φ ∈ ∧²V` with `rank V = 2n+1`, written as a functional on `∧^{2n}V*`.
///
/// The basis of `∧^{2n}V*` is indexed by the deleted index `k`; `entries[k]` is the
/// coefficient of `e_{[N]∖k}` in `φ^n / n!`, which is the Pfaffian of `M` with row and column
/// `k` removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPowerRow {
    pub n: usize,
    pub entries: Vec<Poly>,
}

impl PhiPowerRow {
    /// The identification `e*_{[N]∖k} ↦ (-1)^k e_k` of `∧^{2n}V*` with `V` (0-based `k`).
    pub fn signed(&self) -> Vec<Poly> {
        self.entries.iter().enumerate().map(|(k, p)| if k % 2 == 0 { p.clone() } else { -p }).collect()
    }
}

/// `φ^(n)` via deletion Pfaffians.
pub fn phi_power_row(m: &AltMatrix) -> Result<PhiPowerRow> {
    if m.size % 2 == 0 {
        return Err(Error::SizeParity(m.size));
    }
    let mut eng = PfaffianEngine::new(m);
    let entries = (0..m.size)
        .map(|k| {
            let keep: Vec<usize> = (0..m.size).filter(|&i| i != k).collect();
            eng.pf(&keep)
        })
        .collect();
    Ok(PhiPowerRow { n: m.size / 2, entries })
}

/// `φ^(n)` via the exterior power `φ ∧ … ∧ φ / n!`. Exponential in the size; meant for
/// cross-checking [`phi_power_row`] on small matrices.
pub fn wedge_power_row(m: &AltMatrix) -> Result<PhiPowerRow> {
    if m.size % 2 == 0 {
        return Err(Error::SizeParity(m.size));
    }
    let field = m.field;
    let n = m.size / 2;
    let mut phi: HashMap<u64, Poly> = HashMap::new();
    for i in 0..m.size {
        for j in i + 1..m.size {
            let p = m.upper(i, j);
            if !p.is_zero() {
                phi.insert((1 << i) | (1 << j), p.clone());
            }
        }
    }
    let mut acc: HashMap<u64, Poly> = HashMap::from([(0u64, Poly::constant(field, 1))]);
    for _ in 0..n {
        acc = wedge(&acc, &phi);
    }
    let mut fact = 1u32;
    for k in 1..=n as u32 {
        fact = field.mul(fact, k);
    }
    let inv = field.inv(fact);
    let full = (1u64 << m.size) - 1;
    let entries = (0..m.size)
        .map(|k| acc.get(&(full & !(1 << k))).map(|p| p.scale(inv)).unwrap_or_else(|| Poly::zero(field)))
        .collect();
    Ok(PhiPowerRow { n, entries })
}

fn wedge(a: &HashMap<u64, Poly>, b: &HashMap<u64, Poly>) -> HashMap<u64, Poly> {
    let mut out: HashMap<u64, Poly> = HashMap::new();
    for (&s, p) in a {
        for (&t, q) in b {
            if s & t != 0 {
                continue;
            }
            let term = p * q;
            let term = if wedge_sign(s, t) < 0 { -term } else { term };
            let e = out.entry(s | t).or_insert_with(|| Poly::zero(p.field()));
            *e = &*e + &term;
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Sign of `e_S ∧ e_T` relative to `e_{S∪T}` for disjoint index sets.
pub fn wedge_sign(s: u64, t: u64) -> i32 {
    let mut inversions = 0u32;
    let mut bits = t;
    while bits != 0 {
        let j = bits.trailing_zeros();
        bits &= bits - 1;
        // elements of S greater than j
        inversions += (s >> (j + 1)).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The submaximal Pfaffians of an odd-size alternating matrix.
#[derive(Clone, Debug)]
pub struct PfaffianSystem {
    pub source: AltMatrix,
    /// `pf[k] = (-1)^k Pf(M with row/column k deleted)`, so that `M · pf = 0`.
    pub pf: Vec<Poly>,
    pub phi_n_row: PhiPowerRow,
}

impl PfaffianSystem {
    /// `M · pf`, which is identically zero.
    pub fn syzygy_residual(&self) -> Vec<Poly> {
        let m = &self.source;
        (0..m.size)
            .map(|i| {
                (0..m.size).fold(Poly::zero(m.field), |acc, j| {
                    if i == j {
                        acc
                    } else {
                        &acc + &(&m.get(i, j) * &self.pf[j])
                    }
                })
            })
            .collect()
    }
}

pub fn sub_pfaffians(m: &AltMatrix) -> Result<PfaffianSystem> {
    let row = phi_power_row(m)?;
    Ok(PfaffianSystem { source: m.clone(), pf: row.signed(), phi_n_row: row })
}

/// The named matrix families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    Hev,
    Hodd,
    Uev,
    Uodd,
    Vev,
    Vodd,
    Uj,
    Vj,
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "hev" => FamilyKind::Hev,
            "hodd" => FamilyKind::Hodd,
            "uev" => FamilyKind::Uev,
            "uodd" => FamilyKind::Uodd,
            "vev" => FamilyKind::Vev,
            "vodd" => FamilyKind::Vodd,
            "uj" => FamilyKind::Uj,
            "vj" => FamilyKind::Vj,
            other => return Err(Error::FamilyParams(format!("unknown family '{other}'"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyMatrix {
    Alternating(AltMatrix),
    Square(PolyMatrix),
}

impl FamilyMatrix {
    pub fn alternating(self) -> Result<AltMatrix> {
        match self {
            FamilyMatrix::Alternating(m) => Ok(m),
            FamilyMatrix::Square(_) => Err(Error::NotAlternating("U-type family matrices are not alternating".into())),
        }
    }
}

/// Family constructor. `param` is `s` for `Hev`/`Hodd` and `m` otherwise; `j` is required
/// for `Uj`/`Vj` and ignored elsewhere.
pub fn family(field: Field, kind: FamilyKind, param: usize, j: Option<usize>) -> Result<FamilyMatrix> {
    let need_j = || j.ok_or_else(|| Error::FamilyParams(format!("{kind:?} needs j")));
    Ok(match kind {
        FamilyKind::Hev => FamilyMatrix::Alternating(h_even(field, param)?),
        FamilyKind::Hodd => FamilyMatrix::Alternating(h_odd(field, param)?),
        FamilyKind::Uev => FamilyMatrix::Square(u_even(field, param)?),
        FamilyKind::Uodd => FamilyMatrix::Square(u_odd(field, param)?),
        FamilyKind::Vev => FamilyMatrix::Alternating(v_even(field, param)?),
        FamilyKind::Vodd => FamilyMatrix::Alternating(v_odd(field, param)?),
        FamilyKind::Uj => FamilyMatrix::Square(u_j(field, param, need_j()?)?),
        FamilyKind::Vj => FamilyMatrix::Alternating(v_j(field, param, need_j()?)?),
    })
}

fn pw(field: Field, v: usize, e: u32) -> Poly {
    let mut ex = [0; 3];
    ex[v] = e;
    Poly::monomial(field, Monomial(ex))
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

/// Size `N` matrix with `x^a, y^a` alternating on the superdiagonal (starting with `x`) and
/// `z^a` on the antidiagonal above the diagonal.
fn banded(field: Field, n: usize) -> AltMatrix {
    let mut m = AltMatrix::zero(field, n);
    for i in 0..n - 1 {
        let v = if i % 2 == 0 { X } else { Y };
        m.set(i, i + 1, pw(field, v, 2));
    }
    for i in 0..n / 2 {
        let j = n - 1 - i;
        if j > i + 1 || (j == i + 1 && m.upper(i, j).is_zero()) {
            m.set(i, j, pw(field, Z, 2));
        }
    }
    m
}

/// `(s+1)×(s+1)` matrix for even `s`; its Pfaffians have degree `s`.
pub fn h_even(field: Field, s: usize) -> Result<AltMatrix> {
    if s < 2 || s % 2 == 1 {
        return Err(Error::FamilyParams(format!("Hev needs an even s >= 2, got {s}")));
    }
    Ok(banded(field, s + 1))
}

/// `(s+2)×(s+2)` matrix for odd `s`, with linear `z` in the corner and linear `y` in the
/// last superdiagonal slot.
pub fn h_odd(field: Field, s: usize) -> Result<AltMatrix> {
    if s % 2 == 0 {
        return Err(Error::FamilyParams(format!("Hodd needs an odd s, got {s}")));
    }
    let n = s + 2;
    let mut m = banded(field, n);
    m.set(0, n - 1, pw(field, Z, 1));
    m.set(n - 2, n - 1, pw(field, Y, 1));
    Ok(m)
}

/// Hankel-type rule shared by the `U` families: row `i` (1-based) carries `a, b, c` in columns
/// `m-i, m-i+1, m-i+2`.
fn u_rule(field: Field, m: usize, row_entries: impl Fn(usize) -> Option<[Poly; 3]>) -> PolyMatrix {
    let mut u = PolyMatrix::zeros(field, m, m);
    for i in 1..=m {
        let Some(vals) = row_entries(i) else { continue };
        for (k, v) in vals.into_iter().enumerate() {
            let col = (m + k) as isize - i as isize; // m - i + k, 1-based
            if col >= 1 && col as usize <= m {
                u.set(i - 1, col as usize - 1, v);
            }
        }
    }
    u
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::FamilyParams("m must be >= 1".into()))
    } else {
        Ok(())
    }
}

pub fn u_even(field: Field, m: usize) -> Result<PolyMatrix> {
    check_m(m)?;
    Ok(u_rule(field, m, |_| Some([pw(field, X, 2), pw(field, Z, 2), pw(field, Y, 2)])))
}

pub fn u_odd(field: Field, m: usize) -> Result<PolyMatrix> {
    check_m(m)?;
    let mut u = u_rule(field, m, |i| (i < m).then(|| [pw(field, X, 2), pw(field, Z, 2), pw(field, Y, 2)]));
    u.set(m - 1, 0, pw(field, Z, 1));
    if m >= 2 {
        u.set(m - 1, 1, pw(field, Y, 1));
    }
    Ok(u)
}

pub fn u_j(field: Field, m: usize, j: usize) -> Result<PolyMatrix> {
    check_m(m)?;
    if j == 0 || j > m {
        return Err(Error::FamilyParams(format!("need 1 <= j <= m, got m={m}, j={j}")));
    }
    Ok(u_rule(field, m, |i| {
        let e = if i <= m - j { 2 } else { 1 };
        Some([pw(field, X, e), pw(field, Z, e), pw(field, Y, e)])
    }))
}

/// `[[O, O_{x²}, T], [·, 0, mid·O], [·, ·, O]]` completed to an alternating matrix.
fn v_block(field: Field, top_right: &PolyMatrix, mid: Poly) -> AltMatrix {
    let m = top_right.nrows();
    let mut a = AltMatrix::zero(field, 2 * m + 1);
    a.set(m - 1, m, pw(field, X, 2));
    for i in 0..m {
        for j in 0..m {
            let p = top_right.get(i, j);
            if !p.is_zero() {
                a.set(i, m + 1 + j, p.clone());
            }
        }
    }
    a.set(m, m + 1, mid);
    a
}

pub fn v_even(field: Field, m: usize) -> Result<AltMatrix> {
    Ok(v_block(field, &u_even(field, m)?, pw(field, Y, 2)))
}

/// For `m = 1` the index rule degenerates (the `y` entry of the last `U` row falls outside
/// the matrix); the displayed `3×3` matrix with linear `z, y` is returned instead.
pub fn v_odd(field: Field, m: usize) -> Result<AltMatrix> {
    if m == 1 {
        return v_j(field, 1, 1);
    }
    Ok(v_block(field, &u_odd(field, m)?.transpose(), pw(field, Y, 2)))
}

pub fn v_j(field: Field, m: usize, j: usize) -> Result<AltMatrix> {
    let u = u_j(field, m, j)?;
    let mid = if j == m { pw(field, Y, 1) } else { pw(field, Y, 2) };
    Ok(v_block(field, &u.transpose(), mid))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::default()
    }

    fn p(s: &str) -> Poly {
        Poly::parse(f(), s).unwrap()
    }

    fn alt(rows: &[&[&str]]) -> AltMatrix {
        let n = rows.len();
        let pm = PolyMatrix::from_fn(f(), n, n, |i, j| p(rows[i][j]));
        AltMatrix::from_poly_matrix(&pm).unwrap()
    }

    #[test]
    fn small_pfaffians() {
        let m2 = alt(&[&["0", "x"], &["-x", "0"]]);
        assert_eq!(pfaffian(&m2).unwrap(), p("x"));

        // (a,b,c,d,e,f) = (x, y, z, x+y, y+z, x^2)
        let m4 = alt(&[
            &["0", "x", "y", "z"],
            &["-x", "0", "x+y", "y+z"],
            &["-y", "-x-y", "0", "x^2"],
            &["-z", "-y-z", "-x^2", "0"],
        ]);
        let expect = &(&p("x") * &p("x^2")) - &(&p("y") * &p("y+z"));
        let expect = &expect + &(&p("z") * &p("x+y"));
        assert_eq!(pfaffian(&m4).unwrap(), expect);
        assert!(pfaffian(&AltMatrix::zero(f(), 3)).is_err());
    }

    #[test]
    fn v1_even_pfaffians_are_the_squares() {
        let v = v_even(f(), 1).unwrap();
        let sys = sub_pfaffians(&v).unwrap();
        assert_eq!(sys.pf, vec![p("y^2"), p("-z^2"), p("x^2")]);
        assert!(sys.syzygy_residual().iter().all(Poly::is_zero));
    }

    #[test]
    fn phi_power_small_cases() {
        let m = v_odd(f(), 1).unwrap();
        let row = phi_power_row(&m).unwrap();
        // deleting k leaves the pair complementary to k
        assert_eq!(row.entries[0], m.get(1, 2));
        assert_eq!(row.entries[1], m.get(0, 2));
        assert_eq!(row.entries[2], m.get(0, 1));
        assert_eq!(row, wedge_power_row(&m).unwrap());
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let m = h_odd(f(), 3).unwrap();
        let js = m.to_json();
        let back = AltMatrix::from_json(f(), &js).unwrap();
        assert_eq!(m, back);

        let bad = AltMatrixJson {
            size: 3,
            entries: vec![
                EntryJson { i: 1, j: 2, poly: "x".into() },
                EntryJson { i: 2, j: 1, poly: "x".into() },
            ],
        };
        assert!(AltMatrix::from_json(f(), &bad).is_err());
        let diag = AltMatrixJson { size: 3, entries: vec![EntryJson { i: 2, j: 2, poly: "y".into() }] };
        assert!(AltMatrix::from_json(f(), &diag).is_err());
    }

    #[test]
    fn family_parameter_errors() {
        assert!(family(f(), FamilyKind::Uj, 3, Some(4)).is_err());
        assert!(family(f(), FamilyKind::Vj, 3, Some(0)).is_err());
        assert!(family(f(), FamilyKind::Vj, 3, None).is_err());
        assert!(family(f(), FamilyKind::Hev, 3, None).is_err());
        assert!(family(f(), FamilyKind::Hodd, 4, None).is_err());
        assert!(family(f(), FamilyKind::Uev, 2, None).unwrap().alternating().is_err());
    }

    #[test]
    fn wedge_sign_basics() {
        // e1 ∧ e0 = -e0 ∧ e1
        assert_eq!(wedge_sign(0b10, 0b01), -1);
        assert_eq!(wedge_sign(0b01, 0b10), 1);
        // e2 ∧ (e0 ∧ e1) = e0 ∧ e1 ∧ e2
        assert_eq!(wedge_sign(0b100, 0b011), 1);
    }
}
