//! Algebra structure on `Tor^R(R/I, k)`, realized as the homology of `∧^• k^3 ⊗ R/I`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::altpf::wedge_sign;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{GradedIdeal, QuotientAlgebra};
use crate::koszul::{koszul_strand, wedge_basis};
use crate::linalg::{left_kernel, rank, Echelon, Matrix};

/// Homology of one strand `∧^i ⊗ A_{j-i}`.
#[derive(Clone, Debug)]
struct HomologyStrand {
    boundaries: Echelon,
    /// RREF of cycle residues modulo boundaries; its rows are the representatives.
    classes: Echelon,
}

#[derive(Clone, Debug)]
pub struct TorBasis {
    algebra: QuotientAlgebra,
    strands: [BTreeMap<u32, HomologyStrand>; 4],
}

/// Homogeneous element of `T_i` in internal degree `j`, in the chosen homology basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorClass {
    pub i: usize,
    pub j: u32,
    pub coords: Vec<u32>,
}

impl TorClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl TorBasis {
    pub fn new(algebra: QuotientAlgebra) -> Self {
        let field = algebra.field();
        let top = algebra.top_degree() + 3;
        let strands = std::array::from_fn(|i| {
            (i as i64..=top)
                .into_par_iter()
                .filter_map(|j| {
                    let len = wedge_basis(i).len() * algebra.dim(j - i as i64);
                    if len == 0 {
                        return None;
                    }
                    let boundaries = if i < 3 {
                        Echelon::from_matrix(field, &koszul_strand(&algebra, i + 1, j))
                    } else {
                        Echelon::empty(len)
                    };
                    let cycles = if i == 0 { Echelon::full(len).rows().to_vec() } else { left_kernel(field, &koszul_strand(&algebra, i, j)) };
                    let residues = cycles.into_iter().map(|mut c| {
                        boundaries.reduce(field, &mut c);
                        c
                    });
                    let classes = Echelon::from_rows(field, len, residues);
                    (classes.rank() > 0).then_some((j as u32, HomologyStrand { boundaries, classes }))
                })
                .collect()
        });
        TorBasis { algebra, strands }
    }

    pub fn from_ideal(ideal: &GradedIdeal, dmax: u32) -> Result<Self> {
        Ok(TorBasis::new(QuotientAlgebra::new(ideal, dmax)?))
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.algebra
    }

    /// `dim_k (T_i)_j`.
    pub fn dim_at(&self, i: usize, j: u32) -> usize {
        self.strands[i].get(&j).map_or(0, |h| h.classes.rank())
    }

    pub fn dim(&self, i: usize) -> usize {
        self.strands[i].values().map(|h| h.classes.rank()).sum()
    }

    /// Internal degrees `j` with `(T_i)_j ≠ 0`.
    pub fn degrees(&self, i: usize) -> Vec<u32> {
        self.strands[i].keys().copied().collect()
    }

    /// Cycle representing the `k`-th basis class of `(T_i)_j`.
    pub fn representative(&self, i: usize, j: u32, k: usize) -> Vec<u32> {
        self.strands[i][&j].classes.rows()[k].clone()
    }

    pub fn basis(&self, i: usize) -> Vec<TorClass> {
        let mut out = Vec::new();
        for (&j, h) in &self.strands[i] {
            for k in 0..h.classes.rank() {
                let mut coords = vec![0; h.classes.rank()];
                coords[k] = 1;
                out.push(TorClass { i, j, coords });
            }
        }
        out
    }

    pub fn chain(&self, z: &TorClass) -> Vec<u32> {
        let field = self.field();
        let Some(h) = self.strands[z.i].get(&z.j) else {
            return Vec::new();
        };
        let mut v = vec![0u32; h.classes.ambient_dim()];
        for (row, &c) in h.classes.rows().iter().zip(&z.coords) {
            crate::linalg::axpy(field, &mut v, c, row);
        }
        v
    }

    /// Homology class of a cycle in `∧^i ⊗ A_{j-i}`.
    pub fn project(&self, i: usize, j: u32, cycle: &[u32]) -> TorClass {
        match self.strands[i].get(&j) {
            None => TorClass { i, j, coords: Vec::new() },
            Some(h) => {
                let mut v = cycle.to_vec();
                h.boundaries.reduce(self.field(), &mut v);
                let coords = h.classes.coordinates(&v);
                TorClass { i, j, coords }
            }
        }
    }

    /// Wedge product of chains `a ∈ ∧^i ⊗ A_{ja-i}` and `b ∈ ∧^k ⊗ A_{jb-k}`.
    pub fn multiply_chains(&self, i: usize, ja: u32, a: &[u32], k: usize, jb: u32, b: &[u32]) -> Vec<u32> {
        let field = self.field();
        let alg = &self.algebra;
        let (da, db) = (ja as i64 - i as i64, jb as i64 - k as i64);
        let dd = da + db;
        let (na, nb, nd) = (alg.dim(da), alg.dim(db), alg.dim(dd));
        let tgt = wedge_basis(i + k);
        let mut out = vec![0u32; tgt.len() * nd];
        if nd == 0 {
            return out;
        }
        for (si, &s) in wedge_basis(i).iter().enumerate() {
            let ca = &a[si * na..(si + 1) * na];
            if ca.iter().all(|&x| x == 0) {
                continue;
            }
            for (ti, &t) in wedge_basis(k).iter().enumerate() {
                if s & t != 0 {
                    continue;
                }
                let cb = &b[ti * nb..(ti + 1) * nb];
                if cb.iter().all(|&x| x == 0) {
                    continue;
                }
                let prod = alg.multiply(da, ca, db, cb);
                let sign = wedge_sign(s as u64, t as u64);
                let ui = tgt.iter().position(|&u| u == s | t).unwrap();
                let c = if sign < 0 { field.neg(1) } else { 1 };
                crate::linalg::axpy(field, &mut out[ui * nd..(ui + 1) * nd], c, &prod);
            }
        }
        out
    }

    /// Product in `Tor`; zero whenever `i + k > 3`.
    pub fn multiply(&self, a: &TorClass, b: &TorClass) -> TorClass {
        let (i, j) = (a.i + b.i, a.j + b.j);
        if i > 3 {
            return TorClass { i, j, coords: Vec::new() };
        }
        let chain = self.multiply_chains(a.i, a.j, &self.chain(a), b.i, b.j, &self.chain(b));
        self.project(i, j, &chain)
    }

    /// Coordinates of a class in the concatenation of all `(T_i)_j`, degrees ascending.
    pub fn global_coords(&self, z: &TorClass) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.dim(z.i));
        for (&j, h) in &self.strands[z.i] {
            if j == z.j && !z.coords.is_empty() {
                out.extend_from_slice(&z.coords);
            } else {
                out.extend(std::iter::repeat(0).take(h.classes.rank()));
            }
        }
        out
    }

    pub fn invariants(&self) -> TorInvariants {
        let field = self.field();
        let t1 = self.basis(1);
        let t2 = self.basis(2);
        let (d2, d3) = (self.dim(2), self.dim(3));

        let mut p_rows = Vec::new();
        for (a, x) in t1.iter().enumerate() {
            for y in &t1[a + 1..] {
                p_rows.push(self.global_coords(&self.multiply(x, y)));
            }
        }
        let p = rank(field, &Matrix::from_rows(d2, p_rows));

        // pairing[b][a] = coordinates of t1[a] · t2[b] in T_3
        let pairing: Vec<Vec<Vec<u32>>> = t2.par_iter().map(|y| t1.iter().map(|x| self.global_coords(&self.multiply(x, y))).collect()).collect();
        let q = rank(field, &Matrix::from_rows(d3, pairing.iter().flatten().cloned()));
        let r = rank(field, &Matrix::from_rows(t1.len() * d3, pairing.iter().map(|row| row.concat())));

        let class = if p == 0 && q == 1 && r >= 2 { TorClassLabel::G(r) } else { TorClassLabel::Other { p, q, r } };
        TorInvariants { mu: t1.len(), type_: d3, p, q, r, class }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorClassLabel {
    G(usize),
    Other { p: usize, q: usize, r: usize },
}

impl fmt::Display for TorClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorClassLabel::G(r) => write!(f, "G({r})"),
            TorClassLabel::Other { p, q, r } => write!(f, "other({p},{q},{r})"),
        }
    }
}

impl Serialize for TorClassLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TorClassLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let bad = || serde::de::Error::custom(format!("bad class label '{s}'"));
        if let Some(r) = s.strip_prefix("G(").and_then(|t| t.strip_suffix(')')) {
            return Ok(TorClassLabel::G(r.parse().map_err(|_| bad())?));
        }
        let inner = s.strip_prefix("other(").and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let v: Vec<usize> = inner.split(',').map(|x| x.trim().parse()).collect::<std::result::Result<_, _>>().map_err(|_| bad())?;
        match v[..] {
            [p, q, r] => Ok(TorClassLabel::Other { p, q, r }),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorInvariants {
    pub mu: usize,
    #[serde(rename = "type")]
    pub type_: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub class: TorClassLabel,
}

pub fn invariants(ideal: &GradedIdeal, dmax: u32) -> Result<TorInvariants> {
    Ok(TorBasis::from_ideal(ideal, dmax)?.invariants())
}

/// For a compressed ideal with socle `k(-s) ⊕ k(-2s+1)`, `s ≥ 3`: whether the class is
/// `G(μ(I) - 3)`.
pub fn check_tormins(ideal: &GradedIdeal, s: u32) -> Result<bool> {
    if s < 3 {
        return Err(Error::Precondition(format!("needs s >= 3, got {s}")));
    }
    let wanted = BTreeMap::from([(s, 1usize), (2 * s - 1, 1)]);
    let found = ideal.socle_type(2 * s)?;
    if found != wanted {
        return Err(Error::Precondition(format!("socle type {found:?} is not k(-{s}) + k(-{})", 2 * s - 1)));
    }
    if !ideal.is_compressed(&wanted)? {
        return Err(Error::Precondition("quotient is not compressed".into()));
    }
    let inv = invariants(ideal, 2 * s)?;
    Ok(inv.mu >= 3 && inv.class == TorClassLabel::G(inv.mu - 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::betti;

    fn ideal(gens: &[&str]) -> GradedIdeal {
        GradedIdeal::parse(Field::default(), gens).unwrap()
    }

    #[test]
    fn residue_field_tor_is_exterior_algebra() {
        let tb = TorBasis::from_ideal(&ideal(&["x", "y", "z"]), 3).unwrap();
        assert_eq!(tb.degrees(1), vec![1]);
        assert_eq!((tb.dim(1), tb.dim(2), tb.dim(3)), (3, 3, 1));
        let inv = tb.invariants();
        assert_eq!((inv.p, inv.q, inv.r), (3, 1, 3));
        assert_eq!(inv.class.to_string(), "other(3,1,3)");
    }

    #[test]
    fn complete_intersection_products() {
        let i = ideal(&["x^2", "y^2", "z^2"]);
        let tb = TorBasis::from_ideal(&i, 6).unwrap();
        let t = betti(&i, 6).unwrap();
        for k in 0..=3 {
            for j in 0..8 {
                assert_eq!(tb.dim_at(k, j), t.get(k, j));
            }
        }
        let b1 = tb.basis(1);
        let xy = tb.multiply(&b1[0], &b1[1]);
        let yx = tb.multiply(&b1[1], &b1[0]);
        let f = tb.field();
        assert_eq!(xy.coords, yx.coords.iter().map(|&c| f.neg(c)).collect::<Vec<_>>());
        let xyz = tb.multiply(&xy, &b1[2]);
        assert_eq!(xyz.j, 6);
        assert!(!xyz.is_zero());
        assert!(tb.multiply(&xyz, &b1[0]).coords.is_empty());
    }

    #[test]
    fn label_json_roundtrip() {
        for l in [TorClassLabel::G(5), TorClassLabel::Other { p: 0, q: 1, r: 1 }] {
            let s = serde_json::to_string(&l).unwrap();
            assert_eq!(serde_json::from_str::<TorClassLabel>(&s).unwrap(), l);
        }
    }

    #[test]
    fn tormins_rejects_small_s() {
        assert!(check_tormins(&ideal(&["x^2", "y^2", "z^2"]), 2).is_err());
        assert!(check_tormins(&ideal(&["x^2", "y^2", "z^2"]), 3).is_err());
    }
}
