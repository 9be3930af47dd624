//! Monomials, sparse polynomials in `k[x,y,z]`, and dual forms acted on by contraction.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;

pub const NVARS: usize = 3;
pub const VAR_NAMES: [char; NVARS] = ['x', 'y', 'z'];

/// Exponent vector `x^a y^b z^c`, ordered by graded reverse lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    pub fn var(v: usize) -> Self {
        let mut e = [0; NVARS];
        e[v] = 1;
        Monomial(e)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b) {
            Some(Monomial([self.0[0] - other.0[0], self.0[1] - other.0[1], self.0[2] - other.0[2]]))
        } else {
            None
        }
    }

    /// Position inside [`strand_basis`] of its own degree.
    #[inline]
    pub fn strand_index(&self) -> usize {
        let d = self.degree() as usize;
        let b = self.0[1] as usize;
        let c = self.0[2] as usize;
        c * (d + 1) - c * c.saturating_sub(1) / 2 + b
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0[2].cmp(&self.0[2]))
            .then_with(|| other.0[1].cmp(&self.0[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self, &VAR_NAMES)
    }
}

fn write_monomial(f: &mut impl fmt::Write, m: &Monomial, names: &[char; NVARS]) -> fmt::Result {
    let mut first = true;
    for (v, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_char(names[v])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

/// Number of monomials of degree `d` in three variables.
#[inline]
pub fn strand_dim(d: i64) -> usize {
    if d < 0 {
        0
    } else {
        let d = d as usize;
        (d + 2) * (d + 1) / 2
    }
}

/// All monomials of degree `d`, strictly decreasing in grevlex order.
pub fn strand_basis(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(strand_dim(d as i64));
    for c in 0..=d {
        for b in 0..=(d - c) {
            out.push(Monomial([d - b - c, b, c]));
        }
    }
    out
}

/// Sparse polynomial over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    terms: BTreeMap<Monomial, u32>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(field: Field) -> Self {
        Poly { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, c: i64) -> Self {
        Poly::term(field, field.from_i64(c), Monomial::ONE)
    }

    pub fn term(field: Field, c: u32, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if c % field.p() != 0 {
            terms.insert(m, c % field.p());
        }
        Poly { field, terms }
    }

    pub fn monomial(field: Field, m: Monomial) -> Self {
        Poly::term(field, 1, m)
    }

    /// The variable `x`, `y` or `z` for `v = 0, 1, 2`.
    pub fn var(field: Field, v: usize) -> Self {
        Poly::monomial(field, Monomial::var(v))
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let mut p = Poly::zero(field);
        for (m, c) in terms {
            p.add_term(m, field.from_i64(c));
        }
        p
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &u32)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let f = self.field;
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = f.add(*v, c);
                if *v == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Degree of the leading term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.degree())
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(&Monomial::ONE)
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = self.field;
        let c = c % f.p();
        if c == 0 {
            return Poly::zero(f);
        }
        Poly { field: f, terms: self.terms.iter().map(|(m, v)| (*m, f.mul(*v, c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { field: self.field, terms: self.terms.iter().map(|(k, v)| (k.mul(m), *v)).collect() }
    }

    /// Exact product.
    pub fn multiply(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let f = self.field;
        let mut out = Poly::zero(f);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), f.mul(*c1, *c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(self.field, 1);
        for _ in 0..e {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Coordinates in [`strand_basis`] of degree `d`; terms of other degrees are ignored.
    pub fn strand_vector(&self, d: u32) -> Vec<u32> {
        let mut v = vec![0; strand_dim(d as i64)];
        for (m, c) in &self.terms {
            if m.degree() == d {
                v[m.strand_index()] = *c;
            }
        }
        v
    }

    pub fn from_strand_vector(field: Field, d: u32, v: &[u32]) -> Poly {
        let basis = strand_basis(d);
        let mut p = Poly::zero(field);
        for (m, &c) in basis.iter().zip(v) {
            p.add_term(*m, c);
        }
        p
    }

    /// Evaluate at a point of k^3.
    pub fn eval_at(&self, vals: &[u32; NVARS]) -> u32 {
        let f = self.field;
        self.terms.iter().fold(0, |acc, (m, c)| {
            let mut t = *c;
            for v in 0..NVARS {
                t = f.mul(t, f.pow(vals[v], m.0[v] as u64));
            }
            f.add(acc, t)
        })
    }

    fn check_field(&self, other: &Poly) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
    }

    pub fn parse(field: Field, s: &str) -> Result<Poly> {
        Parser::new(field, s, VAR_NAMES).parse()
    }

    fn fmt_with(&self, f: &mut impl fmt::Write, names: &[char; NVARS]) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_char('0');
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let c = self.field.to_signed(*c);
            let (neg, mag) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    f.write_char('-')?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m, names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &VAR_NAMES)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_field(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, *c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly { field: f, terms: self.terms.iter().map(|(m, c)| (*m, f.neg(*c))).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.multiply(rhs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -(&self)
    }
}

/// Homogeneous element of the divided power algebra, written in the dual monomial basis
/// `X^a Y^b Z^c`. Polynomials act by contraction: `x^a ∘ X^b = X^(b-a)` when `a <= b`
/// componentwise and zero otherwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualForm {
    degree: u32,
    body: Poly,
}

pub const DUAL_NAMES: [char; NVARS] = ['X', 'Y', 'Z'];

impl fmt::Debug for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualForm[{}]({self})", self.degree)
    }
}

impl fmt::Display for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.body.fmt_with(f, &DUAL_NAMES)
    }
}

impl DualForm {
    /// Wraps a homogeneous body; `degree` is needed for the zero form.
    pub fn new(degree: u32, body: Poly) -> Result<Self> {
        if !body.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if let Some(d) = body.degree() {
            if d != degree {
                return Err(Error::DegreeMismatch(format!("dual form body has degree {d}, expected {degree}")));
            }
        }
        Ok(DualForm { degree, body })
    }

    pub fn monomial(field: Field, m: Monomial) -> Self {
        DualForm { degree: m.degree(), body: Poly::monomial(field, m) }
    }

    pub fn from_strand_vector(field: Field, degree: u32, v: &[u32]) -> Self {
        DualForm { degree, body: Poly::from_strand_vector(field, degree, v) }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.body.field()
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn strand_vector(&self) -> Vec<u32> {
        self.body.strand_vector(self.degree)
    }

    pub fn scale(&self, c: u32) -> DualForm {
        DualForm { degree: self.degree, body: self.body.scale(c) }
    }

    /// Accepts the same syntax as [`Poly::parse`] with variables `X`, `Y`, `Z`
    /// (lowercase is accepted too).
    pub fn parse(field: Field, degree: u32, s: &str) -> Result<Self> {
        let body = Parser::new(field, s, DUAL_NAMES).parse()?;
        DualForm::new(degree, body)
    }
}

/// `f ∘ φ` for homogeneous `f` of degree `i <= deg φ`.
pub fn contract(f: &Poly, phi: &DualForm) -> Result<DualForm> {
    let i = f.homogeneous_degree()?.unwrap_or(0);
    if i > phi.degree {
        return Err(Error::DegreeMismatch(format!(
            "cannot contract a degree {i} form into a degree {} dual form",
            phi.degree
        )));
    }
    Ok(contract_unchecked(f, phi, phi.degree - i))
}

pub(crate) fn contract_unchecked(f: &Poly, phi: &DualForm, out_degree: u32) -> DualForm {
    let field = phi.field();
    let mut body = Poly::zero(field);
    for (a, ca) in f.terms() {
        for (b, cb) in phi.body.terms() {
            if let Some(q) = b.div(a) {
                body.add_term(q, field.mul(*ca, *cb));
            }
        }
    }
    DualForm { degree: out_degree, body }
}

struct Parser<'a> {
    field: Field,
    src: &'a [u8],
    pos: usize,
    names: [char; NVARS],
}

impl<'a> Parser<'a> {
    fn new(field: Field, s: &'a str, names: [char; NVARS]) -> Self {
        Parser { field, src: s.as_bytes(), pos: 0, names }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn var_index(&self, b: u8) -> Option<usize> {
        let c = (b as char).to_ascii_lowercase();
        self.names.iter().position(|n| n.to_ascii_lowercase() == c)
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            v = v.checked_mul(10).and_then(|v| v.checked_add((b - b'0') as u64)).ok_or(Error::Parse {
                pos: self.pos,
                msg: "integer too large".into(),
            })?;
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        Ok(v)
    }

    fn parse(mut self) -> Result<Poly> {
        let f = self.field;
        let mut out = Poly::zero(f);
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        while let Some(b) = self.peek() {
            let mut neg = false;
            if b == b'+' || b == b'-' {
                neg = b == b'-';
                self.pos += 1;
            } else if !first {
                return self.err(format!("expected '+' or '-', found '{}'", b as char));
            }
            first = false;
            let (m, c) = self.term()?;
            let c = if neg { f.neg(c) } else { c };
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let f = self.field;
        let mut coeff = 1u32;
        let mut exps = [0u32; NVARS];
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let n = self.number()?;
                    coeff = f.mul(coeff, (n % f.p() as u64) as u32);
                }
                Some(b) if self.var_index(b).is_some() => {
                    let v = self.var_index(b).unwrap();
                    self.pos += 1;
                    let mut e = 1u64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self.number()?;
                    }
                    exps[v] = exps[v]
                        .checked_add(u32::try_from(e).map_err(|_| Error::Parse {
                            pos: self.pos,
                            msg: "exponent too large".into(),
                        })?)
                        .ok_or(Error::Parse { pos: self.pos, msg: "exponent overflow".into() })?;
                }
                Some(b) => return self.err(format!("unexpected '{}'", b as char)),
                None => return self.err("unexpected end of input"),
            }
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(b) if b.is_ascii_digit() || self.var_index(b).is_some() => {}
                _ => break,
            }
        }
        Ok((Monomial(exps), coeff))
    }
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

    #[test]
    fn strand_basis_sizes_and_order() {
        assert_eq!(strand_basis(0), vec![Monomial::ONE]);
        assert_eq!(strand_basis(1), vec![Monomial::var(0), Monomial::var(1), Monomial::var(2)]);
        assert_eq!(strand_basis(4).len(), 15);
        for d in 0..12 {
            let b = strand_basis(d);
            assert_eq!(b.len(), ((d + 2) * (d + 1) / 2) as usize);
            for w in b.windows(2) {
                assert!(w[0] > w[1], "{} !> {}", w[0], w[1]);
            }
            for (i, m) in b.iter().enumerate() {
                assert_eq!(m.strand_index(), i);
            }
        }
    }

    #[test]
    fn grevlex_degree_two() {
        let names: Vec<String> = strand_basis(2).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        assert!((&p("x+y") * &Poly::zero(f())).is_zero());
        let cube = p("x+y+z").pow(3);
        assert_eq!(cube.coeff(&Monomial::new(1, 1, 1)), 6);
    }

    #[test]
    fn parse_print_variants() {
        assert_eq!(p("2xy^2z"), p("2*x*y^2*z"));
        assert_eq!(p("x y"), p("x*y"));
        assert_eq!(p("-x^2 + 3 - 3"), p("-x^2"));
        assert_eq!(p("x^2-y^2").to_string(), "x^2-y^2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("32004*x"), p("x"));
        assert!(Poly::parse(f(), "x +").is_err());
        assert!(Poly::parse(f(), "w").is_err());
        assert!(Poly::parse(f(), "").is_err());
    }

    #[test]
    fn contraction_examples() {
        let fld = f();
        let phi = DualForm::parse(fld, 3, "X^2Y").unwrap();
        let r = contract(&p("x"), &phi).unwrap();
        assert_eq!(r, DualForm::parse(fld, 2, "XY").unwrap());

        let phi = DualForm::parse(fld, 3, "XY^2").unwrap();
        assert!(contract(&p("x^2"), &phi).unwrap().is_zero());

        let phi = DualForm::parse(fld, 2, "X^2+Y^2").unwrap();
        assert_eq!(contract(&p("x+y"), &phi).unwrap(), DualForm::parse(fld, 1, "X+Y").unwrap());

        assert!(contract(&p("x^3"), &phi).is_err());
    }

    #[test]
    fn dual_form_rejects_wrong_degree() {
        assert!(DualForm::parse(f(), 2, "X^3").is_err());
        assert!(DualForm::parse(f(), 2, "X^2+Y").is_err());
    }
}
