//! Intersection data of a curve with an arrangement: reduced point
//! counts via Seidenberg radicals, Bezout totals, and the Milnor-number
//! bookkeeping for unions.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::GradedIdeal;
use crate::poly::{Degree, Poly};
use crate::singcurve::chart::{generic_chart, ChartOptions};
use crate::singcurve::invariants::{affine_quotient_dimension, singularity_profile};
use crate::singcurve::Arrangement;
use crate::univar::{resultant, UPoly};

/// Seidenberg radical of the singular-locus ideal ⟨q, q_x, q_y⟩ of a
/// reduced affine curve: adjoin squarefree eliminants in each variable.
///
/// The eliminant in v comes from Res_v(q, q_v): a common factor of q and
/// its own v-partial would be independent of v on reduced input, so that
/// resultant never vanishes. Cross pairs like (q, q_x) can vanish
/// spuriously when some component does not involve x.
pub(crate) fn radical_of_singular_locus<F: Field>(q: &Poly<F>) -> Result<GradedIdeal<F>> {
    let field = q.field().clone();
    let qx = q.differentiate(0);
    let qy = q.differentiate(1);
    let ex = resultant(q, &qy, 1);
    let ey = resultant(q, &qx, 0);
    if ex.is_zero() || ey.is_zero() {
        return Err(Error::NotReduced("eliminant of the singular locus vanished".into()));
    }
    let sfx = ex.squarefree_part(&field).to_poly(&field, 2, 0);
    let sfy = ey.squarefree_part(&field).to_poly(&field, 2, 1);
    Ok(GradedIdeal::new(field, 2, vec![q.clone(), qx, qy, sfx, sfy]))
}

/// Seidenberg radical of ⟨c, q⟩ for curves with no common component; a
/// vanishing resultant in either direction certifies a shared component.
pub(crate) fn radical_of_pair<F: Field>(c: &Poly<F>, q: &Poly<F>) -> Result<GradedIdeal<F>> {
    let field = c.field().clone();
    let ex = resultant(c, q, 1);
    let ey = resultant(c, q, 0);
    if ex.is_zero() || ey.is_zero() {
        return Err(Error::CommonComponent);
    }
    let sfx = ex.squarefree_part(&field).to_poly(&field, 2, 0);
    let sfy = ey.squarefree_part(&field).to_poly(&field, 2, 1);
    Ok(GradedIdeal::new(field, 2, vec![c.clone(), q.clone(), sfx, sfy]))
}

fn check_no_common_component<F: Field>(curve: &Poly<F>, arr: &Arrangement<F>) -> Result<()> {
    let field = curve.field().clone();
    let pair = GradedIdeal::new(field, 3, vec![curve.clone(), arr.product().clone()]);
    match pair.quotient_krull_dim() {
        None => Ok(()),
        Some(d) if d <= 1 => Ok(()),
        Some(_) => Err(Error::CommonComponent),
    }
}

/// Number of distinct points of V(C) ∩ V(Q), computed as the length of
/// the Seidenberg radical of ⟨c, q⟩ in a chart certified for the union
/// (every intersection point is singular on the union, hence affine).
pub fn reduced_point_count<F: Field>(
    curve: &Poly<F>,
    arr: &Arrangement<F>,
    seed: u64,
    opts: &ChartOptions,
) -> Result<i64> {
    check_no_common_component(curve, arr)?;
    let union_product = arr.product().mul(curve);
    let chart = generic_chart(&union_product, seed, opts)?;
    let c = chart.chart_of(curve)?;
    let q = chart.chart_of(arr.product())?;
    let rad = radical_of_pair(&c, &q)?;
    affine_quotient_dimension(&rad)
}

/// Σ_p (C·A)_p over all intersection points; equals deg C · deg Q by
/// Bezout whenever the curves share no component.
pub fn bezout_total<F: Field>(
    curve: &Poly<F>,
    arr: &Arrangement<F>,
    seed: u64,
    opts: &ChartOptions,
) -> Result<i64> {
    check_no_common_component(curve, arr)?;
    let union_product = arr.product().mul(curve);
    let chart = generic_chart(&union_product, seed, opts)?;
    let c = chart.chart_of(curve)?;
    let q = chart.chart_of(arr.product())?;
    let ideal = GradedIdeal::new(curve.field().clone(), 2, vec![c, q]);
    affine_quotient_dimension(&ideal)
}

/// Both sides of the Milnor-number identity for adding a smooth curve:
/// μ(A ∪ C) − μ(A) = 2·m·n − k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorDelta {
    pub mu_arrangement: i64,
    pub mu_union: i64,
    pub delta: i64,
    pub expected: i64,
    pub k: i64,
    pub holds: bool,
}

pub fn milnor_union_delta<F: Field>(
    curve: &Poly<F>,
    arr: &Arrangement<F>,
    seed: u64,
    opts: &ChartOptions,
) -> Result<MilnorDelta> {
    let Degree::Of(n) = curve.degree() else {
        return Err(Error::ZeroInput);
    };
    let m = arr.degree();
    let union = arr.with_curve(curve)?;
    let mu_a = singularity_profile(arr, seed, opts)?.mu_total;
    let mu_u = singularity_profile(&union, seed, opts)?.mu_total;
    let k = reduced_point_count(curve, arr, seed, opts)?;
    let delta = mu_u - mu_a;
    let expected = 2 * i64::from(m) * i64::from(n) - k;
    Ok(MilnorDelta {
        mu_arrangement: mu_a,
        mu_union: mu_u,
        delta,
        expected,
        k,
        holds: delta == expected,
    })
}

/// The saturated radical ideal of the singular points of the product
/// curve, in the original coordinates: Seidenberg radical in a certified
/// chart, homogenized, saturated by the chart line, and pulled back.
pub fn singular_points_ideal<F: Field>(
    arr: &Arrangement<F>,
    seed: u64,
    opts: &ChartOptions,
) -> Result<GradedIdeal<F>> {
    let field = arr.field().clone();
    let chart = generic_chart(arr.product(), seed, opts)?;
    let q = chart.affine_equation();
    let rad = radical_of_singular_locus(q)?;
    let homogenized: Vec<Poly<F>> = rad
        .gens()
        .iter()
        .map(|g| {
            let d = g.degree().unwrap_or(0);
            g.homogenize_to(d)
        })
        .collect();
    let proj = GradedIdeal::new(field.clone(), 3, homogenized);
    let z = Poly::variable(field.clone(), 3, 2);
    let saturated = proj.saturate_by_poly(&z)?;
    let pulled: Vec<Poly<F>> = saturated
        .gens()
        .iter()
        .map(|g| chart.pull_back(g))
        .collect::<Result<_>>()?;
    Ok(GradedIdeal::new(field, 3, pulled))
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

    fn opts() -> ChartOptions {
        ChartOptions::default()
    }

    #[test]
    fn two_lines_meet_once() {
        let arr = Arrangement::new(vec![p("y")]).unwrap();
        let k = reduced_point_count(&p("x"), &arr, 1, &opts()).unwrap();
        assert_eq!(k, 1);
        assert_eq!(bezout_total(&p("x"), &arr, 1, &opts()).unwrap(), 1);
    }

    #[test]
    fn line_tangent_to_conic() {
        // x = 0 meets y^2 - xz twice at one point
        let arr = Arrangement::new(vec![p("y^2 - x*z")]).unwrap();
        assert_eq!(reduced_point_count(&p("x"), &arr, 1, &opts()).unwrap(), 1);
        assert_eq!(bezout_total(&p("x"), &arr, 1, &opts()).unwrap(), 2);
    }

    #[test]
    fn shared_component_detected() {
        let arr = Arrangement::new(vec![p("x"), p("y")]).unwrap();
        assert!(matches!(
            reduced_point_count(&p("x*z + x*y"), &arr, 1, &opts()),
            Err(Error::CommonComponent)
        ));
    }

    #[test]
    fn node_delta_for_crossing_lines() {
        // A = {x}, C = y: μ(xy) − μ(x) = 1 − 0 = 1 = 2·1·1 − 1
        let arr = Arrangement::new(vec![p("x")]).unwrap();
        let delta = milnor_union_delta(&p("y"), &arr, 3, &opts()).unwrap();
        assert_eq!(delta.mu_arrangement, 0);
        assert_eq!(delta.mu_union, 1);
        assert_eq!(delta.delta, 1);
        assert_eq!(delta.expected, 1);
        assert!(delta.holds);
    }

    #[test]
    fn triangle_singular_points_ideal() {
        let arr = Arrangement::new(vec![p("x"), p("y"), p("z")]).unwrap();
        let pts = singular_points_ideal(&arr, 5, &opts()).unwrap();
        // three coordinate vertices: degree 3, radical contains xy, xz, yz
        assert_eq!(pts.projective_degree().unwrap(), 3);
        assert!(pts.contains(&p("x*y")));
        assert!(pts.contains(&p("x*z")));
        assert!(pts.contains(&p("y*z")));
        assert!(!pts.contains(&p("x")));
    }
}
