//! Milnor and Tjurina totals, smoothness, and the quasihomogeneity test.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::hilbert::{staircase_is_finite, staircase_total};
use crate::groebner::GradedIdeal;
use crate::monomial::MonomialOrder;
use crate::poly::{Degree, Poly};
use crate::singcurve::chart::{generic_chart, ChartData, ChartOptions};
use crate::singcurve::intersect::radical_of_singular_locus;
use crate::singcurve::Arrangement;

/// The ideal of the three partial derivatives.
pub fn jacobian_ideal<F: Field>(f: &Poly<F>) -> Result<GradedIdeal<F>> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous("jacobian input".into()));
    }
    let field = f.field().clone();
    let nvars = f.nvars();
    Ok(GradedIdeal::new(
        field,
        nvars,
        (0..nvars).map(|i| f.differentiate(i)).collect(),
    ))
}

/// Smoothness of V(F): the partials have no common projective zero,
/// equivalently S/J_F is Artinian (the saturation of J_F is the unit
/// ideal).
pub fn is_smooth<F: Field>(f: &Poly<F>) -> Result<bool> {
    let jac = jacobian_ideal(f)?;
    Ok(staircase_is_finite(
        f.nvars(),
        &jac.lead_monomials(&MonomialOrder::GrevLex),
    ))
}

/// Standard-monomial count of an ideal in two variables; errors when the
/// quotient is infinite-dimensional.
pub fn affine_quotient_dimension<F: Field>(ideal: &GradedIdeal<F>) -> Result<i64> {
    let lms = ideal.lead_monomials(&MonomialOrder::GrevLex);
    staircase_total(ideal.nvars(), &lms).ok_or(Error::InfiniteDimensional)
}

/// Σ μ_p over the singular points of the affine curve f = 0.
///
/// The critical ideal ⟨f_x, f_y⟩ also vanishes at critical points off the
/// curve; adjoining f² removes exactly those (f² lies in the ideal of the
/// partials locally at every curve singularity, while f is a unit off the
/// curve), leaving the Milnor contribution of each singular point.
pub fn affine_milnor_total<F: Field>(f: &Poly<F>) -> Result<i64> {
    assert_eq!(f.nvars(), 2);
    let field = f.field().clone();
    let fx = f.differentiate(0);
    let fy = f.differentiate(1);
    let f2 = f.mul(f);
    let ideal = GradedIdeal::new(field, 2, vec![fx, fy, f2]);
    affine_quotient_dimension(&ideal)
}

/// Σ τ_p over the singular points of the affine curve f = 0.
pub fn affine_tjurina_total<F: Field>(f: &Poly<F>) -> Result<i64> {
    assert_eq!(f.nvars(), 2);
    let field = f.field().clone();
    let fx = f.differentiate(0);
    let fy = f.differentiate(1);
    let ideal = GradedIdeal::new(field, 2, vec![f.clone(), fx, fy]);
    affine_quotient_dimension(&ideal)
}

/// Invariants of the singular locus, computed in one certified chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityProfile {
    pub mu_total: i64,
    pub tau_total: i64,
    pub quasihomogeneous_all: bool,
    pub singular_point_count: i64,
    pub chart_seed: u64,
    pub chart_attempts: u32,
}

/// μ, τ, quasihomogeneity, and the number of distinct singular points of
/// the product curve, via a certified generic chart.
pub fn singularity_profile<F: Field>(
    arr: &Arrangement<F>,
    seed: u64,
    opts: &ChartOptions,
) -> Result<SingularityProfile> {
    let chart = generic_chart(arr.product(), seed, opts)?;
    profile_in_chart(&chart)
}

pub(crate) fn profile_in_chart<F: Field>(chart: &ChartData<F>) -> Result<SingularityProfile> {
    let q = chart.affine_equation();
    let mu_total = affine_milnor_total(q)?;
    let tau_total = affine_tjurina_total(q)?;
    debug_assert!(tau_total <= mu_total);
    let singular_point_count = if tau_total == 0 {
        0
    } else {
        let rad = radical_of_singular_locus(q)?;
        affine_quotient_dimension(&rad)?
    };
    Ok(SingularityProfile {
        mu_total,
        tau_total,
        // Saito: τ_p = μ_p at one point exactly when that singularity is
        // quasihomogeneous; τ ≤ μ pointwise makes the totals decisive.
        quasihomogeneous_all: mu_total == tau_total,
        singular_point_count,
        chart_seed: chart.seed(),
        chart_attempts: chart.attempts(),
    })
}

/// True when every singular point of the product curve is
/// quasihomogeneous (μ = τ globally).
pub fn is_quasihomogeneous_everywhere<F: Field>(
    arr: &Arrangement<F>,
    seed: u64,
    opts: &ChartOptions,
) -> Result<bool> {
    Ok(singularity_profile(arr, seed, opts)?.quasihomogeneous_all)
}

/// Milnor total of a projective curve (not necessarily an arrangement
/// product) in a certified chart.
pub fn projective_milnor_total<F: Field>(
    f: &Poly<F>,
    seed: u64,
    opts: &ChartOptions,
) -> Result<i64> {
    let Degree::Of(_) = f.degree() else {
        return Err(Error::ZeroInput);
    };
    let chart = generic_chart(f, seed, opts)?;
    affine_milnor_total(chart.affine_equation())
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

    fn p2(s: &str) -> QPoly {
        parse_polynomial(Rationals, &VarSet::new(vec!["x", "y"]), s).unwrap()
    }

    #[test]
    fn jacobian_examples() {
        let j = jacobian_ideal(&p("x^2")).unwrap();
        // <2x, 0, 0> = <x>
        assert!(j.equals(&GradedIdeal::new(Rationals, 3, vec![p("x")])));
        let j2 = jacobian_ideal(&p("x*y*z")).unwrap();
        assert!(j2.equals(&GradedIdeal::new(Rationals, 3, vec![p("y*z"), p("x*z"), p("x*y")])));
        // Euler: F lies in its Jacobian ideal
        let f = p("x*y*z*(x-y)*(x-z)*(y-z)");
        let jf = jacobian_ideal(&f).unwrap();
        assert!(jf.contains(&f));
        assert_eq!(jf.gens().len(), 3);
        assert!(jf.gens().iter().all(|g| g.degree() == Degree::Of(5)));
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth(&p("x^3 + y^3 + z^3")).unwrap());
        assert!(!is_smooth(&p("x*y")).unwrap());
        assert!(is_smooth(&p("x")).unwrap());
    }

    #[test]
    fn affine_dimensions() {
        let ideal = |gens: &[&str]| {
            GradedIdeal::new(Rationals, 2, gens.iter().map(|s| p2(s)).collect())
        };
        assert_eq!(affine_quotient_dimension(&ideal(&["x", "y"])).unwrap(), 1);
        assert_eq!(affine_quotient_dimension(&ideal(&["x^2", "y^3"])).unwrap(), 6);
        // cusp partials
        assert_eq!(affine_quotient_dimension(&ideal(&["3*x^2", "2*y"])).unwrap(), 2);
        assert!(affine_quotient_dimension(&ideal(&["x"])).is_err());
    }

    #[test]
    fn milnor_tjurina_of_affine_witness() {
        // classical non-quasihomogeneous curve: μ = 11 ≠ τ = 10
        let f = p2("x^5 + y^5 + x^2*y^2");
        assert_eq!(affine_milnor_total(&f).unwrap(), 11);
        assert_eq!(affine_tjurina_total(&f).unwrap(), 10);
        // cusp chart: quasihomogeneous, μ = τ = 2
        let cusp = p2("y^2 - x^3");
        assert_eq!(affine_milnor_total(&cusp).unwrap(), 2);
        assert_eq!(affine_tjurina_total(&cusp).unwrap(), 2);
    }
}
