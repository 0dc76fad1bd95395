//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are kept sorted in descending grevlex order with no zero
//! coefficients, so structural equality is semantic equality.

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::monomial::{grevlex, monomials_of_degree, Monomial, MonomialOrder};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::cmp::Ordering;
use std::fmt;

/// Names of the ambient variables; the pipeline uses x, y, z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        VarSet { names: names.into_iter().map(Into::into).collect() }
    }

    pub fn xyz() -> Self {
        VarSet::new(vec!["x", "y", "z"])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Degree of a polynomial; the zero polynomial has no degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degree {
    MinusInfinity,
    Of(u32),
}

impl Degree {
    pub fn unwrap_or(self, d: u32) -> u32 {
        match self {
            Degree::MinusInfinity => d,
            Degree::Of(v) => v,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F: Field> {
    field: F,
    nvars: usize,
    /// Descending grevlex, no zero coefficients.
    terms: Vec<(Monomial, F::Elem)>,
}

/// The workhorse instantiation.
pub type QPoly = Poly<Rationals>;

impl<F: Field> Poly<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        Poly { field, nvars, terms: Vec::new() }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        if !p.field.is_zero(&c) {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let c = field.one();
        Self::constant(field, nvars, c)
    }

    pub fn variable(field: F, nvars: usize, i: usize) -> Self {
        let c = field.one();
        Self::term(field, nvars, Monomial::var(nvars, i), c)
    }

    pub fn term(field: F, nvars: usize, m: Monomial, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        if !p.field.is_zero(&c) {
            p.terms.push((m, c));
        }
        p
    }

    /// Build from arbitrary (monomial, coefficient) pairs, combining and
    /// dropping zeros.
    pub fn from_terms(field: F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
            if let Some((_, lc)) = out.last() {
                if field.is_zero(lc) {
                    out.pop();
                }
            }
        }
        Poly { field, nvars, terms: out }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .map_or(Degree::MinusInfinity, Degree::Of)
    }

    /// (is_homogeneous, degree); the zero polynomial is reported apart.
    pub fn grading(&self) -> (bool, Degree) {
        if self.terms.is_empty() {
            return (true, Degree::MinusInfinity);
        }
        let d = self.terms[0].1.clone();
        let _ = d;
        let degs: Vec<u32> = self.terms.iter().map(|(m, _)| m.degree()).collect();
        let dmax = *degs.iter().max().unwrap();
        (degs.iter().all(|&d| d == dmax), Degree::Of(dmax))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.grading().0
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        match self.terms.binary_search_by(|(tm, _)| grevlex(m, tm)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// Leading term under the canonical grevlex order.
    pub fn lead(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    /// Leading term under an arbitrary order (linear scan off grevlex).
    pub fn lead_under(&self, ord: &MonomialOrder) -> Option<&(Monomial, F::Elem)> {
        match ord {
            MonomialOrder::GrevLex => self.terms.first(),
            _ => self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match grevlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&self.terms[i].1, &other.terms[j].1);
                    if !self.field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { field: self.field.clone(), nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// self − (c·m)·other, the reduction step primitive.
    pub fn sub_scaled(&self, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        let scaled: Vec<(Monomial, F::Elem)> = other
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), self.field.neg(&self.field.mul(c, tc))))
            .collect();
        // scaling by a single term preserves descending order
        let rhs = Poly { field: self.field.clone(), nvars: self.nvars, terms: scaled };
        self.add(&rhs)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.nvars);
        }
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, tc)| (m.clone(), self.field.mul(c, tc))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(tm, c)| (tm.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone(), self.nvars);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(self.field.clone(), self.nvars);
        for (m, c) in &small.terms {
            acc = acc.add(&large.scale(c).mul_monomial(m));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field.clone(), self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn differentiate(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            let nc = self.field.mul(c, &self.field.from_i64(e as i64));
            terms.push((Monomial::from_exps(&exps), nc));
        }
        Self::from_terms(self.field.clone(), self.nvars, terms)
    }

    /// Divide every coefficient by the canonical content (primitive
    /// integer form over Q, monic over a prime field).
    pub fn normalized(&self) -> Self {
        let mut p = self.clone();
        let mut coeffs: Vec<F::Elem> = p.terms.iter().map(|(_, c)| c.clone()).collect();
        self.field.normalize(&mut coeffs);
        for ((_, c), nc) in p.terms.iter_mut().zip(coeffs) {
            *c = nc;
        }
        p
    }

    /// Substitute each variable by a linear form: x_i ↦ Σ_j M[i][j]·x_j.
    /// The matrix must be invertible.
    pub fn apply_linear_change(&self, mat: &[Vec<F::Elem>]) -> Result<Self> {
        let n = self.nvars;
        assert_eq!(mat.len(), n);
        if det_is_zero(&self.field, mat) {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Self> = (0..n)
            .map(|i| {
                let terms = (0..n)
                    .map(|j| (Monomial::var(n, j), mat[i][j].clone()))
                    .collect();
                Self::from_terms(self.field.clone(), n, terms)
            })
            .collect();
        // cache powers of each image up to its maximal exponent
        let mut maxe = vec![0u16; n];
        for (m, _) in &self.terms {
            for i in 0..n {
                maxe[i] = maxe[i].max(m.exp(i));
            }
        }
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut ps = vec![Self::one(self.field.clone(), n)];
            for e in 1..=maxe[i] {
                let next = ps[(e - 1) as usize].mul(&images[i]);
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut acc = Self::zero(self.field.clone(), n);
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.field.clone(), n, c.clone());
            for i in 0..n {
                let e = m.exp(i);
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Set variable `var` to 1, dropping to `nvars - 1` variables.
    pub fn dehomogenize(&self, var: usize) -> Self {
        let n = self.nvars;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps: Vec<u16> = (0..n).filter(|&i| i != var).map(|i| m.exp(i)).collect();
                (Monomial::from_exps(&exps), c.clone())
            })
            .collect();
        Self::from_terms(self.field.clone(), n - 1, terms)
    }

    /// Homogenize to the given degree with a fresh last variable.
    pub fn homogenize_to(&self, degree: u32) -> Self {
        let n = self.nvars;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let d = m.degree();
                assert!(d <= degree);
                let mut exps = m.exps().to_vec();
                exps.push((degree - d) as u16);
                (Monomial::from_exps(&exps), c.clone())
            })
            .collect();
        Self::from_terms(self.field.clone(), n + 1, terms)
    }

    /// Evaluate at a point given by field elements.
    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars);
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, p) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = self.field.mul(&t, p);
                }
            }
            acc = self.field.add(&acc, &t);
        }
        acc
    }

    /// The homogeneous part of the given degree.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .cloned()
            .collect();
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    /// Coefficient vector on the descending-grevlex monomial basis of the
    /// given degree; the polynomial must be homogeneous of that degree.
    pub fn coeff_vector(&self, d: u32) -> Vec<F::Elem> {
        let basis = monomials_of_degree(self.nvars, d);
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn map_field<G: Field>(&self, g: G, f: impl Fn(&F::Elem) -> Option<G::Elem>) -> Option<Poly<G>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), f(c)?));
        }
        Some(Poly::from_terms(g, self.nvars, terms))
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> PolyDisplay<'a, F> {
        PolyDisplay { poly: self, vars }
    }
}

fn det_is_zero<F: Field>(field: &F, mat: &[Vec<F::Elem>]) -> bool {
    // fraction-free Gaussian elimination on a copy
    let n = mat.len();
    let mut a: Vec<Vec<F::Elem>> = mat.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !field.is_zero(&a[r][col]));
        let Some(p) = pivot else { return true };
        a.swap(col, p);
        for r in col + 1..n {
            let factor = field.div(&a[r][col], &a[col][col]);
            for c in col..n {
                let s = field.mul(&factor, &a[col][c]);
                a[r][c] = field.sub(&a[r][c], &s);
            }
        }
    }
    false
}

impl QPoly {
    pub fn from_int_terms(nvars: usize, terms: &[(&[u16], i64)]) -> Self {
        let ts = terms
            .iter()
            .map(|(e, c)| {
                (Monomial::from_exps(e), BigRational::from_integer(BigInt::from(*c)))
            })
            .collect();
        Self::from_terms(Rationals, nvars, ts)
    }
}

pub struct PolyDisplay<'a, F: Field> {
    poly: &'a Poly<F>,
    vars: &'a VarSet,
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.poly;
        if p.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in p.terms.iter().enumerate() {
            let cs = p.field.fmt_elem(c);
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || m.is_one() {
                factors.push(abs);
            }
            for v in 0..m.nvars() {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(self.vars.name(v).to_string()),
                    e => factors.push(format!("{}^{}", self.vars.name(v), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn arithmetic_basics() {
        // (x - y)(x + y) = x^2 - y^2
        let nv = 3;
        let x = QPoly::variable(Rationals, nv, 0);
        let y = QPoly::variable(Rationals, nv, 1);
        let lhs = x.sub(&y).mul(&x.add(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
        // x*y - y*x = 0
        assert!(x.mul(&y).sub(&y.mul(&x)).is_zero());
    }

    #[test]
    fn differentiate_examples() {
        let nv = 3;
        let p = QPoly::from_int_terms(nv, &[(&[3, 1, 0], 1)]); // x^3 y
        let dx = p.differentiate(0);
        assert_eq!(dx, QPoly::from_int_terms(nv, &[(&[2, 1, 0], 3)]));
        let p2 = QPoly::from_int_terms(nv, &[(&[2, 0, 0], 1), (&[0, 2, 0], 1)]);
        assert!(p2.differentiate(2).is_zero());
    }

    #[test]
    fn euler_identity_on_xyz() {
        let nv = 3;
        let f = QPoly::from_int_terms(nv, &[(&[1, 1, 1], 1)]);
        let mut acc = QPoly::zero(Rationals, nv);
        for i in 0..3 {
            let xi = QPoly::variable(Rationals, nv, i);
            acc = acc.add(&xi.mul(&f.differentiate(i)));
        }
        assert_eq!(acc, f.scale(&q(3)));
    }

    #[test]
    fn grading_reports_homogeneity() {
        let nv = 3;
        let p = QPoly::from_int_terms(nv, &[(&[2, 0, 0], 1), (&[1, 1, 0], 1)]);
        assert_eq!(p.grading(), (true, Degree::Of(2)));
        let np = QPoly::from_int_terms(nv, &[(&[2, 0, 0], 1), (&[0, 1, 0], 1)]);
        assert_eq!(np.grading(), (false, Degree::Of(2)));
        assert_eq!(QPoly::zero(Rationals, nv).grading(), (true, Degree::MinusInfinity));
    }

    #[test]
    fn linear_change_roundtrip_and_swap() {
        let nv = 3;
        let p = QPoly::from_int_terms(nv, &[(&[2, 0, 0], 1), (&[0, 2, 0], -1)]); // x^2 - y^2
        let id: Vec<Vec<BigRational>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { q(1) } else { q(0) }).collect())
            .collect();
        assert_eq!(p.apply_linear_change(&id).unwrap(), p);
        // swap x and y: antisymmetry
        let mut swap = id.clone();
        swap.swap(0, 1);
        assert_eq!(p.apply_linear_change(&swap).unwrap(), p.neg());
        // singular matrix rejected
        let mut sing = id.clone();
        sing[2] = sing[1].clone();
        assert!(p.apply_linear_change(&sing).is_err());
        // M then M^{-1} is identity: shear and unshear
        let mut shear = id.clone();
        shear[2][0] = q(3);
        shear[2][1] = q(5);
        let mut unshear = id;
        unshear[2][0] = q(-3);
        unshear[2][1] = q(-5);
        let moved = p.apply_linear_change(&shear).unwrap();
        assert_eq!(moved.apply_linear_change(&unshear).unwrap(), p);
    }

    #[test]
    fn display_renders_canonically() {
        let vars = VarSet::xyz();
        let p = QPoly::from_int_terms(3, &[(&[2, 0, 0], 1), (&[1, 1, 0], -3), (&[0, 0, 0], 2)]);
        assert_eq!(p.display(&vars).to_string(), "x^2 - 3*x*y + 2");
        assert_eq!(QPoly::zero(Rationals, 3).display(&vars).to_string(), "0");
    }
}
