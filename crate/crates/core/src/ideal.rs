//! Homogeneous ideals of `k[x,y,z]` as strand-wise vector spaces, and apolarity ideals of
//! inverse systems.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{left_kernel, rank, Echelon, Matrix};
use crate::poly::{contract_unchecked, strand_basis, strand_dim, DualForm, Monomial, Poly, NVARS};

/// For each monomial of degree `d`, the strand index of its product with variable `v`.
pub fn var_shift(d: u32, v: usize) -> Vec<usize> {
    strand_basis(d).iter().map(|m| m.mul(&Monomial::var(v)).strand_index()).collect()
}

/// Products `x·b, y·b, z·b` of strand vectors, as vectors of the next strand.
pub(crate) fn times_variables(d: u32, v: &[u32]) -> [Vec<u32>; NVARS] {
    let n = strand_dim(d as i64 + 1);
    std::array::from_fn(|k| {
        let mut out = vec![0u32; n];
        for (i, t) in var_shift(d, k).into_iter().enumerate() {
            out[t] = v[i];
        }
        out
    })
}

pub struct GradedIdeal {
    field: Field,
    gens: Vec<Poly>,
    strands: Mutex<BTreeMap<u32, Arc<Echelon>>>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        let cache = self.strands.lock().unwrap().clone();
        GradedIdeal { field: self.field, gens: self.gens.clone(), strands: Mutex::new(cache) }
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl GradedIdeal {
    /// Ideal generated by the given homogeneous polynomials. Zero generators are rejected so
    /// that generator positions keep their meaning.
    pub fn new(field: Field, gens: Vec<Poly>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch(g.field().p(), field.p()));
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator(i + 1));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(GradedIdeal { field, gens, strands: Mutex::new(BTreeMap::new()) })
    }

    /// Parses a list of polynomial strings.
    pub fn parse(field: Field, gens: &[impl AsRef<str>]) -> Result<Self> {
        let gens = gens.iter().map(|s| Poly::parse(field, s.as_ref())).collect::<Result<Vec<_>>>()?;
        GradedIdeal::new(field, gens)
    }

    pub fn from_json(field: Field, text: &str) -> Result<Self> {
        let list: Vec<String> = serde_json::from_str(text)?;
        GradedIdeal::parse(field, &list)
    }

    pub fn to_json(&self) -> String {
        let list: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        serde_json::to_string(&list).expect("string list serializes")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    fn gen_degree(g: &Poly) -> u32 {
        g.degree().expect("generators are nonzero")
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(Self::gen_degree).max()
    }

    /// RREF basis of `I_d` in the grevlex-ordered monomial basis of `S_d`.
    pub fn strand(&self, d: u32) -> Arc<Echelon> {
        if let Some(e) = self.strands.lock().unwrap().get(&d) {
            return e.clone();
        }
        let n = strand_dim(d as i64);
        let own: Vec<Vec<u32>> = self.gens.iter().filter(|g| Self::gen_degree(g) == d).map(|g| g.strand_vector(d)).collect();
        let ech = if d == 0 {
            Echelon::from_rows(self.field, n, own)
        } else {
            let below = self.strand(d - 1);
            if below.is_full() {
                Echelon::full(n)
            } else {
                let shifts: Vec<Vec<usize>> = (0..NVARS).map(|v| var_shift(d - 1, v)).collect();
                let mut rows = own;
                for r in below.rows() {
                    for sh in &shifts {
                        let mut out = vec![0u32; n];
                        for (i, &t) in sh.iter().enumerate() {
                            out[t] = r[i];
                        }
                        rows.push(out);
                    }
                }
                Echelon::from_rows(self.field, n, rows)
            }
        };
        let ech = Arc::new(ech);
        self.strands.lock().unwrap().entry(d).or_insert(ech).clone()
    }

    pub fn strand_dim(&self, d: u32) -> usize {
        self.strand(d).rank()
    }

    /// `R_1 · I_{d-1}` inside `S_d`.
    pub fn linear_multiples(&self, d: u32) -> Echelon {
        let n = strand_dim(d as i64);
        if d == 0 {
            return Echelon::empty(n);
        }
        let below = self.strand(d - 1);
        let mut rows = Vec::with_capacity(3 * below.rank());
        for r in below.rows() {
            rows.extend(times_variables(d - 1, r));
        }
        Echelon::from_rows(self.field, n, rows)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        let mut by_degree: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, &c) in f.terms() {
            by_degree.entry(m.degree()).or_insert_with(|| Poly::zero(self.field)).add_term(*m, c);
        }
        by_degree.iter().all(|(&d, p)| self.strand(d).contains(self.field, &p.strand_vector(d)))
    }

    pub fn contains_ideal(&self, other: &GradedIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn same_ideal(&self, other: &GradedIdeal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// Minimal generators, picked from the given generators in list order.
    pub fn min_gens(&self) -> MinGens {
        let mut degrees: Vec<u32> = self.gens.iter().map(Self::gen_degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut gens = Vec::new();
        let mut by_degree = BTreeMap::new();
        for d in degrees {
            let mut span = self.linear_multiples(d);
            let mut count = 0;
            for g in self.gens.iter().filter(|g| Self::gen_degree(g) == d) {
                if span.insert(self.field, &g.strand_vector(d)) {
                    gens.push(g.clone());
                    count += 1;
                }
            }
            if count > 0 {
                by_degree.insert(d, count);
            }
        }
        MinGens { mu: gens.len(), by_degree, gens }
    }

    /// The ideal with the same span but a minimal generating list.
    pub fn minimalized(&self) -> GradedIdeal {
        let mg = self.min_gens();
        let out = GradedIdeal::new(self.field, mg.gens).expect("subset of valid generators");
        *out.strands.lock().unwrap() = self.strands.lock().unwrap().clone();
        out
    }

    /// `(g_j : j ≠ i) + (x g_i, y g_i, z g_i)`; `index` is 1-based.
    pub fn trim(&self, index: usize) -> Result<GradedIdeal> {
        if index == 0 || index > self.gens.len() {
            return Err(Error::IndexOutOfRange { index, len: self.gens.len() });
        }
        let target = &self.gens[index - 1];
        let mut gens: Vec<Poly> = self.gens.iter().enumerate().filter(|(k, _)| *k != index - 1).map(|(_, g)| g.clone()).collect();
        for v in 0..NVARS {
            gens.push(target * &Poly::var(self.field, v));
        }
        GradedIdeal::new(self.field, gens)
    }

    pub fn hilbert(&self, dmax: u32) -> HilbertData {
        let hf: Vec<usize> = (0..=dmax).map(|d| strand_dim(d as i64) - self.strand_dim(d)).collect();
        let socle = (0..=dmax).map(|d| self.socle_dim(d)).collect();
        let top_degree = hf.iter().rposition(|&h| h != 0).map(|d| d as u32);
        HilbertData { hf, socle, top_degree }
    }

    /// `dim Soc(R/I)_d`: kernel of `(R/I)_d → (R/I)_{d+1}^3`, `f ↦ (xf, yf, zf)`.
    pub fn socle_dim(&self, d: u32) -> usize {
        let here = self.strand(d);
        let next = self.strand(d + 1);
        let free = here.non_pivots();
        if free.is_empty() {
            return 0;
        }
        let next_free = next.non_pivots();
        let n = strand_dim(d as i64);
        let rows = free.iter().map(|&c| {
            let mut e = vec![0u32; n];
            e[c] = 1;
            let mut row = Vec::with_capacity(3 * next_free.len());
            for mut w in times_variables(d, &e) {
                next.reduce(self.field, &mut w);
                row.extend(next_free.iter().map(|&j| w[j]));
            }
            row
        });
        let m = Matrix::from_rows(3 * next_free.len(), rows);
        free.len() - rank(self.field, &m)
    }

    /// Socle type `{ℓ : c_ℓ}` read from the Hilbert data up to `dmax`.
    pub fn socle_type(&self, dmax: u32) -> Result<BTreeMap<u32, usize>> {
        let h = self.hilbert(dmax);
        if !h.is_artinian() {
            return Err(Error::NotArtinian(dmax));
        }
        Ok(h.socle_type())
    }

    /// Compares the Hilbert function with the maximal one allowed by the socle type.
    pub fn is_compressed(&self, socle_spec: &BTreeMap<u32, usize>) -> Result<bool> {
        let top = socle_spec.keys().copied().max().unwrap_or(0);
        let h = self.hilbert(top + 1);
        if !h.is_artinian() {
            return Err(Error::NotArtinian(top + 1));
        }
        Ok((0..=top + 1).all(|d| h.hf[d as usize] == compressed_bound(socle_spec, d)))
    }
}

/// `min{dim S_d, Σ_ℓ c_ℓ · dim S_{ℓ-d}}`.
pub fn compressed_bound(socle_spec: &BTreeMap<u32, usize>, d: u32) -> usize {
    let dual: usize = socle_spec.iter().map(|(&l, &c)| c * strand_dim(l as i64 - d as i64)).sum();
    dual.min(strand_dim(d as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinGens {
    pub mu: usize,
    /// degree → number of minimal generators
    pub by_degree: BTreeMap<u32, usize>,
    #[serde(skip)]
    pub gens: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `hf[d] = dim (R/I)_d`
    pub hf: Vec<usize>,
    pub socle: Vec<usize>,
    pub top_degree: Option<u32>,
}

impl HilbertData {
    /// Artinian as far as the computed range shows: the last computed value is zero.
    pub fn is_artinian(&self) -> bool {
        self.hf.last() == Some(&0)
    }

    pub fn socle_type(&self) -> BTreeMap<u32, usize> {
        self.socle.iter().enumerate().filter(|(_, &c)| c > 0).map(|(d, &c)| (d as u32, c)).collect()
    }

    /// Aligned table: degree, Hilbert function, socle dimensions.
    pub fn to_text(&self) -> String {
        let w = self
            .hf
            .iter()
            .chain(&self.socle)
            .map(|v| v.to_string().len())
            .chain(std::iter::once(self.hf.len().to_string().len()))
            .max()
            .unwrap_or(1);
        let line = |label: &str, vals: &mut dyn Iterator<Item = String>| {
            let mut s = format!("{label:<7}");
            for v in vals {
                s.push_str(&format!(" {v:>w$}"));
            }
            s
        };
        [
            line("degree", &mut (0..self.hf.len()).map(|d| d.to_string())),
            line("hf", &mut self.hf.iter().map(|v| v.to_string())),
            line("socle", &mut self.socle.iter().map(|v| v.to_string())),
        ]
        .join("\n")
    }
}

/// Generators `φ_1, …, φ_k` of a submodule of the divided-power algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSystem {
    field: Field,
    forms: Vec<DualForm>,
}

impl InverseSystem {
    pub fn new(forms: Vec<DualForm>) -> Result<Self> {
        let Some(first) = forms.first() else {
            return Err(Error::Precondition("inverse system needs at least one form".into()));
        };
        let field = first.field();
        let mut by_degree: BTreeMap<u32, Echelon> = BTreeMap::new();
        for f in &forms {
            if f.field() != field {
                return Err(Error::FieldMismatch(f.field().p(), field.p()));
            }
            let e = by_degree.entry(f.degree()).or_insert_with(|| Echelon::empty(strand_dim(f.degree() as i64)));
            if !e.insert(field, &f.strand_vector()) {
                return Err(Error::Precondition("forms are linearly dependent".into()));
            }
        }
        Ok(InverseSystem { field, forms })
    }

    pub fn single(form: DualForm) -> Result<Self> {
        InverseSystem::new(vec![form])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn forms(&self) -> &[DualForm] {
        &self.forms
    }

    pub fn max_degree(&self) -> u32 {
        self.forms.iter().map(DualForm::degree).max().unwrap_or(0)
    }

    /// Target dimension `Σ_j dim D_{s_j - d}`.
    pub fn target_dim(&self, d: u32) -> usize {
        self.forms.iter().map(|f| strand_dim(f.degree() as i64 - d as i64)).sum()
    }
}

/// `Φ_d : S_d → ⊕_j D_{s_j-d}`, one row per monomial of `S_d`.
pub fn phi_map(sys: &InverseSystem, d: u32) -> Matrix {
    let basis = strand_basis(d);
    let cols = sys.target_dim(d);
    let mut m = Matrix::zeros(basis.len(), cols);
    for (r, mono) in basis.iter().enumerate() {
        let f = Poly::monomial(sys.field, *mono);
        let mut off = 0;
        for form in &sys.forms {
            if form.degree() < d {
                continue;
            }
            let out_deg = form.degree() - d;
            let img = contract_unchecked(&f, form, out_deg).strand_vector();
            for (k, v) in img.into_iter().enumerate() {
                m.set(r, off + k, v);
            }
            off += strand_dim(out_deg as i64);
        }
    }
    m
}

/// Apolarity ideal `0 :_S N`, generated minimally from the strand kernels of `Φ_d` for
/// `d ≤ max(dmax, max s_j + 1)`.
pub fn ann(sys: &InverseSystem, dmax: u32) -> GradedIdeal {
    let field = sys.field;
    let top = dmax.max(sys.max_degree() + 1);
    let mut gens = Vec::new();
    let mut cache = BTreeMap::new();
    let mut prev: Option<Arc<Echelon>> = None;
    for d in 0..=top {
        let n = strand_dim(d as i64);
        let kernel = if d > sys.max_degree() {
            Echelon::full(n)
        } else {
            Echelon::from_rows(field, n, left_kernel(field, &phi_map(sys, d)))
        };
        let mut span = match &prev {
            None => Echelon::empty(n),
            Some(below) => {
                let rows: Vec<Vec<u32>> = below.rows().iter().flat_map(|r| times_variables(d - 1, r)).collect();
                Echelon::from_rows(field, n, rows)
            }
        };
        for r in kernel.rows() {
            if span.insert(field, r) {
                gens.push(Poly::from_strand_vector(field, d, r));
            }
        }
        let kernel = Arc::new(kernel);
        cache.insert(d, kernel.clone());
        prev = Some(kernel);
    }
    let out = GradedIdeal::new(field, gens).expect("kernel vectors are nonzero homogeneous");
    *out.strands.lock().unwrap() = cache;
    out
}

/// Least `d` with `Φ_d` surjective, for a single form.
pub fn tipping_point(sys: &InverseSystem) -> Result<u32> {
    if sys.forms.len() != 1 {
        return Err(Error::Precondition("tipping point is defined for a single form".into()));
    }
    let s = sys.forms[0].degree();
    for d in 0..=s {
        if rank(sys.field, &phi_map(sys, d)) == sys.target_dim(d) {
            return Ok(d);
        }
    }
    Err(Error::NeverSurjective(s))
}

/// Dual generator of a Gorenstein quotient with socle degree `c`: the form annihilating
/// `I_c` under the contraction pairing. Requires `dim (R/I)_c = 1`.
pub fn dual_socle_form(ideal: &GradedIdeal, c: u32) -> Result<DualForm> {
    let strand = ideal.strand(c);
    let free = strand.non_pivots();
    if free.len() != 1 {
        return Err(Error::Precondition(format!("dim (R/I)_{c} = {}, expected 1", free.len())));
    }
    // the functional vanishing on the RREF rows, normalized at the free column
    let field = ideal.field;
    let mut v = vec![0u32; strand.ambient_dim()];
    v[free[0]] = 1;
    for (row, &pc) in strand.rows().iter().zip(strand.pivots()) {
        v[pc] = field.neg(row[free[0]]);
    }
    Ok(DualForm::from_strand_vector(field, c, &v))
}

/// Uniformly random form of the given degree (coefficients in the whole field).
pub fn random_form(field: Field, degree: u32, rng: &mut impl Rng) -> DualForm {
    let v: Vec<u32> = (0..strand_dim(degree as i64)).map(|_| rng.gen_range(0..field.p())).collect();
    DualForm::from_strand_vector(field, degree, &v)
}

/// Quotient algebra `R/I` in the standard-monomial basis, degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    field: Field,
    strands: Vec<Arc<Echelon>>,
    standard: Vec<Vec<usize>>,
}

impl QuotientAlgebra {
    /// Requires `R/I` to vanish in degree `dmax + 1`.
    pub fn new(ideal: &GradedIdeal, dmax: u32) -> Result<Self> {
        let mut strands = Vec::new();
        let mut standard = Vec::new();
        for d in 0..=dmax + 1 {
            let s = ideal.strand(d);
            let free = s.non_pivots();
            if free.is_empty() {
                return Ok(QuotientAlgebra { field: ideal.field, strands, standard });
            }
            standard.push(free);
            strands.push(s);
        }
        Err(Error::NotArtinian(dmax))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Largest degree with `A_d ≠ 0`.
    pub fn top_degree(&self) -> i64 {
        self.standard.len() as i64 - 1
    }

    pub fn dim(&self, d: i64) -> usize {
        if d < 0 {
            return 0;
        }
        self.standard.get(d as usize).map_or(0, Vec::len)
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        self.standard.iter().map(Vec::len).collect()
    }

    /// Normal form of a homogeneous element of degree `d`, given as a strand vector.
    pub fn reduce_vector(&self, d: i64, mut v: Vec<u32>) -> Vec<u32> {
        if d < 0 || d as usize >= self.standard.len() {
            return Vec::new();
        }
        let d = d as usize;
        self.strands[d].reduce(self.field, &mut v);
        self.standard[d].iter().map(|&j| v[j]).collect()
    }

    pub fn reduce_poly(&self, d: i64, p: &Poly) -> Vec<u32> {
        if d < 0 || d as usize >= self.standard.len() {
            return Vec::new();
        }
        self.reduce_vector(d, p.strand_vector(d as u32))
    }

    /// Strand vector in `S_d` of the standard-monomial combination `coords`.
    pub fn lift_vector(&self, d: i64, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; strand_dim(d)];
        if d >= 0 {
            for (&j, &c) in self.standard[d as usize].iter().zip(coords) {
                v[j] = c;
            }
        }
        v
    }

    pub fn lift(&self, d: i64, coords: &[u32]) -> Poly {
        if d < 0 {
            return Poly::zero(self.field);
        }
        Poly::from_strand_vector(self.field, d as u32, &self.lift_vector(d, coords))
    }

    /// Matrix of multiplication by variable `v` from `A_d` to `A_{d+1}`, one row per source
    /// basis element.
    pub fn var_mult(&self, d: i64, v: usize) -> Matrix {
        let (src, dst) = (self.dim(d), self.dim(d + 1));
        let mut m = Matrix::zeros(src, dst);
        if src == 0 || dst == 0 {
            return m;
        }
        let shift = var_shift(d as u32, v);
        let n = strand_dim(d + 1);
        for (r, &j) in self.standard[d as usize].iter().enumerate() {
            let mut w = vec![0u32; n];
            w[shift[j]] = 1;
            let red = self.reduce_vector(d + 1, w);
            m.row_mut(r).copy_from_slice(&red);
        }
        m
    }

    /// Product of homogeneous elements of `A_i` and `A_j`.
    pub fn multiply(&self, i: i64, a: &[u32], j: i64, b: &[u32]) -> Vec<u32> {
        if self.dim(i + j) == 0 {
            return Vec::new();
        }
        let p = &self.lift(i, a) * &self.lift(j, b);
        self.reduce_poly(i + j, &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::default()
    }

    fn ideal(gens: &[&str]) -> GradedIdeal {
        GradedIdeal::parse(f(), gens).unwrap()
    }

    fn form(deg: u32, s: &str) -> DualForm {
        DualForm::parse(f(), deg, s).unwrap()
    }

    #[test]
    fn strand_dimensions() {
        assert_eq!(ideal(&["x", "y", "z"]).strand_dim(1), 3);
        let ci = ideal(&["x^2", "y^2", "z^2"]);
        assert_eq!(ci.strand_dim(3), 9);
        assert_eq!(ci.strand_dim(4), 15);
    }

    #[test]
    fn complete_intersection_hilbert_and_socle() {
        let h = ideal(&["x^2", "y^2", "z^2"]).hilbert(5);
        assert_eq!(h.hf, vec![1, 3, 3, 1, 0, 0]);
        assert_eq!(h.socle, vec![0, 0, 0, 1, 0, 0]);
        assert_eq!(h.top_degree, Some(3));
        assert!(h.is_artinian());
    }

    #[test]
    fn min_gens_drops_redundant() {
        let mg = ideal(&["x", "x^2", "y"]).min_gens();
        assert_eq!(mg.mu, 2);
        assert_eq!(mg.by_degree, BTreeMap::from([(1, 2)]));
    }

    #[test]
    fn trim_of_maximal_ideal() {
        let m = ideal(&["x", "y", "z"]);
        let t = m.trim(3).unwrap();
        let mg = t.min_gens();
        assert_eq!(mg.mu, 3);
        assert!(t.same_ideal(&ideal(&["x", "y", "z^2"])));
        assert!(m.trim(4).is_err());
        assert!(m.trim(0).is_err());
    }

    #[test]
    fn apolarity_examples() {
        let a = ann(&InverseSystem::single(form(2, "X^2")).unwrap(), 0);
        assert!(a.same_ideal(&ideal(&["y", "z", "x^3"])));
        let b = ann(&InverseSystem::single(form(3, "X*Y*Z")).unwrap(), 0);
        assert!(b.same_ideal(&ideal(&["x^2", "y^2", "z^2"])));
        assert_eq!(b.min_gens().mu, 3);
        let c = ann(&InverseSystem::single(form(6, "X^2*Y*Z^3")).unwrap(), 0);
        assert!(c.same_ideal(&ideal(&["x^3", "y^2", "z^4"])));
    }

    #[test]
    fn phi_map_ranks() {
        let sys = InverseSystem::single(form(2, "X^2")).unwrap();
        let m = phi_map(&sys, 1);
        assert_eq!((m.nrows(), m.ncols()), (3, 3));
        assert_eq!(rank(f(), &m), 1);
        let sys = InverseSystem::single(form(3, "X*Y*Z")).unwrap();
        assert_eq!(rank(f(), &phi_map(&sys, 1)), 3);
        assert_eq!(tipping_point(&sys).unwrap(), 2);
    }

    #[test]
    fn compressed_bound_for_type_two() {
        let wanted = BTreeMap::from([(3, 1), (5, 1)]);
        let hf: Vec<usize> = (0..=6).map(|d| compressed_bound(&wanted, d)).collect();
        assert_eq!(hf, vec![1, 3, 6, 7, 3, 1, 0]);
        let ci = ideal(&["x^2", "y^2", "z^2"]);
        assert!(ci.is_compressed(&BTreeMap::from([(3, 1)])).unwrap());
        assert!(ideal(&["x", "y"]).is_compressed(&BTreeMap::from([(3, 1)])).is_err());
    }

    #[test]
    fn quotient_algebra_products() {
        let ci = ideal(&["x^2", "y^2", "z^2"]);
        let a = QuotientAlgebra::new(&ci, 5).unwrap();
        assert_eq!(a.hilbert_function(), vec![1, 3, 3, 1]);
        let x = a.reduce_poly(1, &Poly::parse(f(), "x").unwrap());
        let yz = a.reduce_poly(2, &Poly::parse(f(), "y*z").unwrap());
        let prod = a.multiply(1, &x, 2, &yz);
        assert_eq!(a.lift(3, &prod), Poly::parse(f(), "x*y*z").unwrap());
        assert!(a.multiply(1, &x, 1, &x).iter().all(|&c| c == 0));
        assert!(QuotientAlgebra::new(&ideal(&["x", "y"]), 4).is_err());
    }

    #[test]
    fn dual_generator_recovers_the_ideal() {
        let ci = ideal(&["x^2", "y^2", "z^2"]);
        let phi = dual_socle_form(&ci, 3).unwrap();
        assert_eq!(phi, form(3, "X*Y*Z"));
        assert!(ann(&InverseSystem::single(phi).unwrap(), 0).same_ideal(&ci));
        assert!(dual_socle_form(&ci, 2).is_err());
    }

    #[test]
    fn ideal_json_roundtrip() {
        let i = ideal(&["x^2", "y*z - z^2"]);
        let back = GradedIdeal::from_json(f(), &i.to_json()).unwrap();
        assert_eq!(back.gens(), i.gens());
    }
}
