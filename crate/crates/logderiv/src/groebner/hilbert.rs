//! Hilbert functions and series from leading-term staircases.
//!
//! Series are written as an integer numerator over (1−t)^nvars; the
//! numerator of a monomial quotient S/I comes from the classical
//! generator-splitting recursion.

use crate::monomial::{monomials_of_degree, Monomial};
use std::fmt;

/// Integer polynomial in t, dense coefficients from degree 0 upward.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZPoly(pub Vec<i64>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![1])
    }

    pub fn monomial(k: usize, c: i64) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        ZPoly(v).normalized()
    }

    pub fn normalized(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        ZPoly((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect()).normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        ZPoly((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect()).normalized()
    }

    /// Multiply by t^k.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        ZPoly(v)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Exact division by (1 − t); requires eval_at_one() == 0.
    pub fn div_one_minus_t(&self) -> Self {
        assert_eq!(self.eval_at_one(), 0, "1 is not a root");
        // if N = (1-t) Q then q_k = Σ_{i<=k} n_i
        let mut acc = 0i64;
        let mut out = Vec::with_capacity(self.0.len());
        for (k, c) in self.0.iter().enumerate() {
            acc += c;
            if k + 1 < self.0.len() {
                out.push(acc);
            }
        }
        ZPoly(out).normalized()
    }

    /// Number of times (1 − t) divides, together with the quotient.
    pub fn strip_one_minus_t(&self) -> (usize, ZPoly) {
        let mut k = 0;
        let mut cur = self.clone().normalized();
        while !cur.is_zero() && cur.eval_at_one() == 0 {
            cur = cur.div_one_minus_t();
            k += 1;
        }
        (k, cur)
    }

    /// Coefficient of t^d in self / (1−t)^n.
    pub fn series_coeff(&self, n: u32, d: i64) -> i64 {
        let mut acc = 0i64;
        for (k, c) in self.0.iter().enumerate() {
            let e = d - k as i64;
            if e >= 0 {
                acc += c * binomial(e + n as i64 - 1, n as i64 - 1);
            }
        }
        acc
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}*t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, m) => write!(f, "{m}*t^{k}")?,
            }
        }
        Ok(())
    }
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of monomials of degree d in `nvars` variables.
pub fn ambient_dim(nvars: usize, d: i64) -> i64 {
    binomial(d + nvars as i64 - 1, nvars as i64 - 1)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of S/⟨gens⟩ over (1−t)^nvars.
pub fn monomial_quotient_numerator(gens: &[Monomial]) -> ZPoly {
    fn rec(gens: Vec<Monomial>) -> ZPoly {
        match gens.len() {
            0 => ZPoly::one(),
            1 => ZPoly::one().sub(&ZPoly::monomial(gens[0].degree() as usize, 1)),
            _ => {
                let mut rest = gens;
                let pivot = rest.pop().expect("nonempty");
                let colon: Vec<Monomial> = rest
                    .iter()
                    .map(|g| g.gcd(&pivot).quotient(g))
                    .collect();
                let n_rest = rec(rest);
                let n_colon = rec(minimalize(colon));
                n_rest.sub(&n_colon.shifted(pivot.degree() as usize))
            }
        }
    }
    rec(minimalize(gens.to_vec()))
}

/// Count monomials of degree d not divisible by any generator.
pub fn standard_monomial_count(nvars: usize, gens: &[Monomial], d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    monomials_of_degree(nvars, d as u32)
        .iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count() as i64
}

/// Is the quotient by the monomial module finite-dimensional, i.e. does
/// every variable appear as a pure power among the generators?
pub fn staircase_is_finite(nvars: usize, gens: &[Monomial]) -> bool {
    if gens.iter().any(|g| g.is_one()) {
        return true;
    }
    (0..nvars).all(|i| {
        gens.iter().any(|g| {
            (0..nvars).all(|j| j == i || g.exp(j) == 0) && g.exp(i) > 0
        })
    })
}

/// Total count of standard monomials of a finite staircase.
pub fn staircase_total(nvars: usize, gens: &[Monomial]) -> Option<i64> {
    if !staircase_is_finite(nvars, gens) {
        return None;
    }
    let numer = monomial_quotient_numerator(gens);
    // finite staircase: numerator divisible by (1-t)^nvars, the quotient
    // evaluated at 1 is the total count — equivalently sum the HF
    let mut cur = numer;
    for _ in 0..nvars {
        cur = cur.div_one_minus_t();
    }
    Some(cur.eval_at_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn zpoly_display_and_series() {
        let p = ZPoly(vec![0, 0, 0, 0, 2, -1, -1]);
        assert_eq!(p.to_string(), "2*t^4 - t^5 - t^6");
        // (2t^4 - t^5 - t^6)/(1-t)^3 has coefficients 0,0,0,0,2,5,8,11,...
        assert_eq!(p.series_coeff(3, 3), 0);
        assert_eq!(p.series_coeff(3, 4), 2);
        assert_eq!(p.series_coeff(3, 5), 5);
        assert_eq!(p.series_coeff(3, 6), 8);
        assert_eq!(p.series_coeff(3, 7), 11);
    }

    #[test]
    fn strip_one_minus_t_works() {
        // (1-t)^2 (1+t) = 1 - t - t^2 + t^3
        let p = ZPoly(vec![1, -1, -1, 1]);
        let (k, q) = p.strip_one_minus_t();
        assert_eq!(k, 2);
        assert_eq!(q, ZPoly(vec![1, 1]));
    }

    #[test]
    fn numerator_simple_cases() {
        // S/<x> in 3 vars: (1-t)/(1-t)^3
        let n = monomial_quotient_numerator(&[m(&[1, 0, 0])]);
        assert_eq!(n, ZPoly(vec![1, -1]));
        // S/<x,y,z>: numerator (1-t)^3
        let n = monomial_quotient_numerator(&[m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]);
        assert_eq!(n, ZPoly(vec![1, -3, 3, -1]));
        // S/<x^2, xy>: HF = 1, 2, 2, 2, ... (std monomials 1; x,y; y^2, xy? no xy kills)
        let n = monomial_quotient_numerator(&[m(&[2, 0]), m(&[1, 1])]);
        for d in 0..6 {
            assert_eq!(
                n.series_coeff(2, d),
                standard_monomial_count(2, &[m(&[2, 0]), m(&[1, 1])], d)
            );
        }
    }

    #[test]
    fn staircase_counts() {
        let gens = vec![m(&[2, 0]), m(&[0, 3])];
        assert!(staircase_is_finite(2, &gens));
        assert_eq!(staircase_total(2, &gens), Some(6));
        let gens2 = vec![m(&[1, 1])];
        assert!(!staircase_is_finite(2, &gens2));
        assert_eq!(staircase_total(2, &gens2), None);
    }

    #[test]
    fn numerator_matches_counts_random() {
        // deterministic pseudo-random monomial sets
        let mut state = 12345u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as u16
        };
        for _ in 0..30 {
            let gens: Vec<Monomial> = (0..4)
                .map(|_| m(&[next() % 5, next() % 5, next() % 5]))
                .collect();
            let n = monomial_quotient_numerator(&gens);
            for d in 0..10 {
                assert_eq!(
                    n.series_coeff(3, d),
                    standard_monomial_count(3, &gens, d),
                    "gens {gens:?} degree {d}"
                );
            }
        }
    }
}
