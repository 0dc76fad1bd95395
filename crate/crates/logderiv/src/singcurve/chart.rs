//! Certified generic charts.
//!
//! Local invariants are computed as global affine sums, which is valid
//! only when every singular point is visible in the chosen affine chart.
//! Charts are drawn at random from a seeded stream and certified exactly;
//! a draw is never trusted without its certificate.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::hilbert::staircase_is_finite;
use crate::groebner::GradedIdeal;
use crate::matrix;
use crate::monomial::MonomialOrder;
use crate::poly::{Degree, Poly};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
pub struct ChartOptions {
    pub max_retries: u32,
}

impl Default for ChartOptions {
    fn default() -> Self {
        ChartOptions { max_retries: 32 }
    }
}

/// A linear change of coordinates under which the curve's singular locus
/// avoids the line at infinity, together with the dehomogenized equation.
#[derive(Clone, Debug)]
pub struct ChartData<F: Field> {
    change: Vec<Vec<F::Elem>>,
    inverse: Vec<Vec<F::Elem>>,
    /// Q after the change, still homogeneous in three variables.
    moved: Poly<F>,
    /// The affine equation q(x, y) = (Q ∘ change)(x, y, 1).
    affine: Poly<F>,
    seed: u64,
    attempts: u32,
}

impl<F: Field> ChartData<F> {
    pub fn affine_equation(&self) -> &Poly<F> {
        &self.affine
    }

    pub fn moved_equation(&self) -> &Poly<F> {
        &self.moved
    }

    pub fn change(&self) -> &[Vec<F::Elem>] {
        &self.change
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn attempts(&self) -> u32 {
        self.attempts
    }

    /// Push another curve through the same change and dehomogenize.
    pub fn chart_of(&self, other: &Poly<F>) -> Result<Poly<F>> {
        Ok(other.apply_linear_change(&self.change)?.dehomogenize(2))
    }

    /// Pull a polynomial in the moved coordinates back to the original
    /// ones.
    pub fn pull_back(&self, moved: &Poly<F>) -> Result<Poly<F>> {
        moved.apply_linear_change(&self.inverse)
    }
}

/// Does the projective scheme V(I) avoid the line {z = 0}? Exact test:
/// S/(I + ⟨z⟩) is Artinian, equivalently the saturation of I + ⟨z⟩ by the
/// irrelevant ideal is the unit ideal.
fn empty_at_infinity<F: Field>(ideal: &GradedIdeal<F>, field: &F) -> bool {
    let z = Poly::variable(field.clone(), 3, 2);
    let with_line = ideal.with_extra_gens(&[z]);
    staircase_is_finite(3, &with_line.lead_monomials(&MonomialOrder::GrevLex))
}

/// Draw seeded random shears z ↦ a·x + b·y + z until one is certified:
/// the moved curve keeps its degree in the chart and has no singular
/// point at infinity.
pub fn generic_chart<F: Field>(
    q: &Poly<F>,
    seed: u64,
    opts: &ChartOptions,
) -> Result<ChartData<F>> {
    assert_eq!(q.nvars(), 3, "charts are drawn in three variables");
    let field = q.field().clone();
    let Degree::Of(deg) = q.degree() else {
        return Err(Error::ZeroInput);
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..opts.max_retries {
        let bound = 3i64 + attempt as i64;
        let a = rng.gen_range(-bound..=bound);
        let b = rng.gen_range(-bound..=bound);
        let mut change: Vec<Vec<F::Elem>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| field.from_i64(i64::from(i == j)))
                    .collect()
            })
            .collect();
        change[2][0] = field.from_i64(a);
        change[2][1] = field.from_i64(b);
        let moved = q.apply_linear_change(&change)?;
        let affine = moved.dehomogenize(2);
        // the line at infinity must not be a component
        if affine.degree() != Degree::Of(deg) {
            continue;
        }
        let jac = GradedIdeal::new(
            field.clone(),
            3,
            (0..3).map(|i| moved.differentiate(i)).collect(),
        );
        if !empty_at_infinity(&jac, &field) {
            continue;
        }
        let inverse = matrix::inverse(&field, &change).expect("shears are invertible");
        return Ok(ChartData { change, inverse, moved, affine, seed, attempts: attempt + 1 });
    }
    Err(Error::ChartRetriesExhausted { tries: opts.max_retries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_polynomial;
    use crate::poly::{QPoly, VarSet};

    fn p(s: &str) -> QPoly {
        parse_polynomial(Rationals, &VarSet::xyz(), s).unwrap()
    }

    #[test]
    fn smooth_curve_certifies_immediately() {
        let f = p("x^3 + y^3 + z^3");
        let chart = generic_chart(&f, 1, &ChartOptions::default()).unwrap();
        assert_eq!(chart.affine_equation().degree(), Degree::Of(3));
    }

    #[test]
    fn identity_chart_fails_for_triangle_but_generic_works() {
        // the triangle has singular points on every coordinate line, so
        // the zero shear must be rejected and a random one found
        let f = p("x*y*z");
        let chart = generic_chart(&f, 7, &ChartOptions::default()).unwrap();
        let q = chart.affine_equation();
        assert_eq!(q.degree(), Degree::Of(3));
        // certification implies the shear is nontrivial for this curve
        let a = &chart.change()[2][0];
        let b = &chart.change()[2][1];
        assert!(
            !Rationals.is_zero(a) || !Rationals.is_zero(b),
            "identity chart cannot certify the triangle"
        );
    }

    #[test]
    fn braid_arrangement_chart_exists() {
        let f = p("x*y*z*(x-y)*(x-z)*(y-z)");
        let chart = generic_chart(&f, 1, &ChartOptions::default()).unwrap();
        assert_eq!(chart.affine_equation().degree(), Degree::Of(6));
        // round trip through the inverse change
        let back = chart.pull_back(chart.moved_equation()).unwrap();
        assert_eq!(back, f);
    }
}
