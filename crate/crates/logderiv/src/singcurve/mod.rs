//! Singularity invariants of reduced plane curves: Milnor and Tjurina
//! totals, quasihomogeneity, intersection counts, smoothness, genus.

mod chart;
mod intersect;
mod invariants;

pub use chart::{generic_chart, ChartData, ChartOptions};
pub use intersect::{
    bezout_total, milnor_union_delta, reduced_point_count, singular_points_ideal, MilnorDelta,
};
pub use invariants::{
    affine_milnor_total, affine_quotient_dimension, affine_tjurina_total, is_smooth,
    is_quasihomogeneous_everywhere, jacobian_ideal, projective_milnor_total,
    singularity_profile, SingularityProfile,
};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Degree, Poly};

/// An arrangement of smooth plane curves, held as the ordered list of
/// component equations together with their reduced product.
#[derive(Clone, Debug)]
pub struct Arrangement<F: Field> {
    components: Vec<Poly<F>>,
    product: Poly<F>,
    degree: u32,
}

impl<F: Field> Arrangement<F> {
    /// Build and validate: every component homogeneous and nonzero, and
    /// the product reduced (certified by the Jacobian locus being at most
    /// a finite set of projective points, which rules out both repeated
    /// factors and shared components).
    pub fn new(components: Vec<Poly<F>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ZeroInput);
        }
        let field = components[0].field().clone();
        let nvars = components[0].nvars();
        let mut product = Poly::one(field, nvars);
        let mut degree = 0u32;
        for (i, c) in components.iter().enumerate() {
            let (homog, d) = c.grading();
            let Degree::Of(d) = d else {
                return Err(Error::ZeroInput);
            };
            if !homog {
                return Err(Error::NotHomogeneous(format!("component {i}")));
            }
            degree += d;
            product = product.mul(c);
        }
        let arr = Arrangement { components, product, degree };
        arr.check_reduced()?;
        Ok(arr)
    }

    fn check_reduced(&self) -> Result<()> {
        let jac = invariants::jacobian_ideal(&self.product)?;
        match jac.quotient_krull_dim() {
            // empty or finite singular locus
            None => Ok(()),
            Some(dim) if dim <= 1 => Ok(()),
            Some(_) => Err(Error::NotReduced(
                "the product has a positive-dimensional singular locus".into(),
            )),
        }
    }

    pub fn components(&self) -> &[Poly<F>] {
        &self.components
    }

    pub fn product(&self) -> &Poly<F> {
        &self.product
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> &F {
        self.product.field()
    }

    pub fn nvars(&self) -> usize {
        self.product.nvars()
    }

    /// The arrangement together with one more curve.
    pub fn with_curve(&self, curve: &Poly<F>) -> Result<Arrangement<F>> {
        let mut comps = self.components.clone();
        comps.push(curve.clone());
        Arrangement::new(comps)
    }
}

/// Genus of a smooth plane curve of degree n: (n−1)(n−2)/2.
pub fn genus_smooth(n: u32) -> i64 {
    let n = n as i64;
    (n - 1) * (n - 2) / 2
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
    fn arrangement_validation() {
        let a = Arrangement::new(vec![p("x"), p("y"), p("z")]).unwrap();
        assert_eq!(a.degree(), 3);
        assert_eq!(a.product(), &p("x*y*z"));
        // repeated component rejected
        assert!(matches!(
            Arrangement::new(vec![p("x"), p("x")]),
            Err(Error::NotReduced(_))
        ));
        // shared factor between components rejected
        assert!(matches!(
            Arrangement::new(vec![p("x*y"), p("y*z")]),
            Err(Error::NotReduced(_))
        ));
        // non-homogeneous rejected
        assert!(matches!(
            Arrangement::new(vec![p("x + 1")]),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus_smooth(1), 0);
        assert_eq!(genus_smooth(2), 0);
        assert_eq!(genus_smooth(3), 1);
        assert_eq!(genus_smooth(4), 3);
    }
}
