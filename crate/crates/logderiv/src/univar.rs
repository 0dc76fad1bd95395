//! Univariate polynomial helpers: gcd, squarefree parts, and bivariate
//! resultants via fraction-free elimination of the Sylvester matrix.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Poly;

/// Dense univariate polynomial, coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly<F: Field> {
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> UPoly<F> {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => field.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(field, out)
    }

    pub fn neg(&self, field: &F) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect() }
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let p = field.mul(a, b);
                out[i + j] = field.add(&out[i + j], &p);
            }
        }
        Self::from_coeffs(field, out)
    }

    /// Division with remainder; divisor must be nonzero.
    pub fn div_rem(&self, field: &F, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = field.inv(divisor.coeffs.last().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quo = vec![field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = field.mul(&rem[k], &lead_inv);
            if !field.is_zero(&c) {
                quo[k - dd] = c.clone();
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let s = field.mul(&c, dc);
                    rem[k - dd + i] = field.sub(&rem[k - dd + i], &s);
                }
            }
            rem.pop();
        }
        (Self::from_coeffs(field, quo), Self::from_coeffs(field, rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, field: &F, divisor: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (q, r) = self.div_rem(field, divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self, field: &F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| field.mul(c, &field.from_i64(i as i64)))
            .collect();
        Self::from_coeffs(field, coeffs)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, field: &F, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(field, &b);
            a = b;
            b = r;
        }
        if let Some(lead) = a.coeffs.last().cloned() {
            let inv = field.inv(&lead);
            for c in a.coeffs.iter_mut() {
                *c = field.mul(c, &inv);
            }
        }
        a
    }

    /// Squarefree part p / gcd(p, p'), monic.
    pub fn squarefree_part(&self, field: &F) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(field, &self.derivative(field));
        let mut sf = self.div_exact(field, &g);
        if let Some(lead) = sf.coeffs.last().cloned() {
            let inv = field.inv(&lead);
            for c in sf.coeffs.iter_mut() {
                *c = field.mul(c, &inv);
            }
        }
        sf
    }

    /// Lift to a multivariate polynomial in variable `var` of an
    /// `nvars`-variable ring.
    pub fn to_poly(&self, field: &F, nvars: usize, var: usize) -> Poly<F> {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut exps = vec![0u16; nvars];
                exps[var] = i as u16;
                (Monomial::from_exps(&exps), c.clone())
            })
            .collect();
        Poly::from_terms(field.clone(), nvars, terms)
    }
}

/// Coefficients of a bivariate polynomial viewed in the eliminated
/// variable: entry i is the coefficient of elim^i, a univariate polynomial
/// in the other variable.
fn coefficients_in<F: Field>(p: &Poly<F>, elim: usize) -> Vec<UPoly<F>> {
    assert_eq!(p.nvars(), 2);
    let keep = 1 - elim;
    let de = p
        .terms()
        .iter()
        .map(|(m, _)| m.exp(elim) as usize)
        .max()
        .unwrap_or(0);
    let dk = p
        .terms()
        .iter()
        .map(|(m, _)| m.exp(keep) as usize)
        .max()
        .unwrap_or(0);
    let field = p.field();
    let mut rows = vec![vec![field.zero(); dk + 1]; de + 1];
    for (m, c) in p.terms() {
        rows[m.exp(elim) as usize][m.exp(keep) as usize] = c.clone();
    }
    rows.into_iter()
        .map(|r| UPoly::from_coeffs(field, r))
        .collect()
}

/// Resultant of two bivariate polynomials with respect to `elim`,
/// returned as a univariate polynomial in the other variable.
/// Zero output means a common factor involving `elim` (or a zero input).
pub fn resultant<F: Field>(p: &Poly<F>, q: &Poly<F>, elim: usize) -> UPoly<F> {
    let field = p.field().clone();
    if p.is_zero() || q.is_zero() {
        return UPoly::zero();
    }
    let pc = coefficients_in(p, elim);
    let qc = coefficients_in(q, elim);
    let dp = pc.len() - 1;
    let dq = qc.len() - 1;
    if dp == 0 {
        // res = p^dq as a constant in elim
        let mut acc = UPoly::from_coeffs(&field, vec![field.one()]);
        for _ in 0..dq {
            acc = acc.mul(&field, &pc[0]);
        }
        return acc;
    }
    if dq == 0 {
        let mut acc = UPoly::from_coeffs(&field, vec![field.one()]);
        for _ in 0..dp {
            acc = acc.mul(&field, &qc[0]);
        }
        return acc;
    }
    // Sylvester matrix: dq rows of p's coefficients, dp rows of q's.
    let n = dp + dq;
    let zero = UPoly::<F>::zero();
    let mut m: Vec<Vec<UPoly<F>>> = vec![vec![zero; n]; n];
    for r in 0..dq {
        for (k, c) in pc.iter().enumerate() {
            m[r][r + dp - k] = c.clone();
        }
    }
    for r in 0..dp {
        for (k, c) in qc.iter().enumerate() {
            m[dq + r][r + dq - k] = c.clone();
        }
    }
    bareiss_det(&field, m)
}

/// Fraction-free Gauss-Bareiss determinant over F[t].
fn bareiss_det<F: Field>(field: &F, mut m: Vec<Vec<UPoly<F>>>) -> UPoly<F> {
    let n = m.len();
    if n == 0 {
        return UPoly::from_coeffs(field, vec![field.one()]);
    }
    let mut sign_flip = false;
    let mut prev = UPoly::from_coeffs(field, vec![field.one()]);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(sw) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return UPoly::zero();
            };
            m.swap(k, sw);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].mul(field, &m[k][k]);
                let b = m[i][k].mul(field, &m[k][j]);
                m[i][j] = a.sub(field, &b).div_exact(field, &prev);
            }
        }
        for j in 0..=k {
            m.iter_mut().skip(k + 1).for_each(|row| row[j] = UPoly::zero());
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg(field)
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_polynomial;
    use crate::poly::VarSet;

    fn up(coeffs: &[i64]) -> UPoly<Rationals> {
        UPoly::from_coeffs(
            &Rationals,
            coeffs.iter().map(|&c| Rationals.from_i64(c)).collect(),
        )
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = Rationals;
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let p = up(&[2, -3, 0, 1]);
        let sf = p.squarefree_part(&f);
        // (t-1)(t+2) = t^2 + t - 2
        assert_eq!(sf, up(&[-2, 1, 1]));
        let g = up(&[-1, 1]).gcd(&f, &up(&[1, 1]));
        assert_eq!(g, up(&[1]));
    }

    #[test]
    fn resultant_detects_common_roots() {
        let vars = VarSet::new(vec!["x", "y"]);
        let p = |s: &str| parse_polynomial(Rationals, &vars, s).unwrap();
        // Res_y(x^2 + y^2 - 1, x - y) vanishes where the line meets the circle
        let r = resultant(&p("x^2 + y^2 - 1"), &p("x - y"), 1);
        // r(x) = 2x^2 - 1 up to sign
        let rpoly = r.to_poly(&Rationals, 2, 0);
        let expect = p("2*x^2 - 1");
        assert!(rpoly == expect || rpoly == expect.neg());
        // common factor forces zero resultant
        let z = resultant(&p("(x - y)*(x + y)"), &p("(x - y)*y"), 1);
        assert!(z.is_zero());
        // a common factor purely in the kept variable does not
        let nz = resultant(&p("x*(y - 1)"), &p("x*(y + 1)"), 1);
        assert!(!nz.is_zero());
        let z2 = resultant(&p("x*(y - 1)"), &p("x*(y + 1)"), 0);
        assert!(z2.is_zero());
    }

    #[test]
    fn resultant_degree_zero_cases() {
        let vars = VarSet::new(vec!["x", "y"]);
        let p = |s: &str| parse_polynomial(Rationals, &vars, s).unwrap();
        let r = resultant(&p("x"), &p("y^2 + 1"), 1);
        // Res_y(x, y^2+1) = x^2
        assert_eq!(r.to_poly(&Rationals, 2, 0), p("x^2"));
    }
}
