//! Graded minimal free resolutions by iterated minimal syzygies.
//!
//! Each step takes minimal generators of the current kernel, so no map can
//! carry a nonzero constant entry and the resulting resolution is minimal
//! without a pruning pass.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::hilbert::ZPoly;
use crate::groebner::ideal::GradedIdeal;
use crate::groebner::submodule::GradedSubmodule;
use crate::groebner::syzygy::ModVec;
use crate::poly::Poly;

/// Minimal free resolution 0 → F_len → … → F_1 → F_0 (→ M → 0).
pub struct FreeResolution<F: Field> {
    field: F,
    nvars: usize,
    /// Generator degrees of each free module F_i.
    pub step_degrees: Vec<Vec<i64>>,
    /// maps[i]: columns express the generators of F_{i+1} in F_i.
    pub maps: Vec<Vec<ModVec<F>>>,
}

impl<F: Field> FreeResolution<F> {
    /// Resolve a submodule of a free module.
    pub fn of_submodule(m: &GradedSubmodule<F>) -> Result<Self> {
        let field = m.field().clone();
        let nvars = m.nvars();
        if m.is_zero_module() {
            return Ok(FreeResolution { field, nvars, step_degrees: vec![Vec::new()], maps: Vec::new() });
        }
        let mut step_degrees = Vec::new();
        let mut maps = Vec::new();
        let mut current = m.minimal_generators()?;
        step_degrees.push(current.generator_degrees()?);
        loop {
            let kernel = current.syzygy_module()?;
            if kernel.is_zero_module() {
                break;
            }
            let min = kernel.minimal_generators()?;
            step_degrees.push(min.generator_degrees()?);
            maps.push(min.gens().to_vec());
            if step_degrees.len() > nvars + 1 {
                return Err(Error::Internal(
                    "resolution exceeds the global bound on projective dimension".into(),
                ));
            }
            current = GradedSubmodule::new(
                field.clone(),
                nvars,
                min.shifts().to_vec(),
                min.gens().to_vec(),
            );
        }
        Ok(FreeResolution { field, nvars, step_degrees, maps })
    }

    /// Resolve S/I: prepend a rank-one step in degree 0, with the minimal
    /// generators of I as the first map.
    pub fn of_quotient(ideal: &GradedIdeal<F>) -> Result<Self> {
        let field = ideal.field().clone();
        let nvars = ideal.nvars();
        let as_module = GradedSubmodule::new(
            field.clone(),
            nvars,
            vec![0],
            ideal.gens().iter().map(|g| vec![g.clone()]).collect(),
        );
        if as_module.is_zero_module() {
            return Ok(FreeResolution {
                field,
                nvars,
                step_degrees: vec![vec![0]],
                maps: Vec::new(),
            });
        }
        let inner = Self::of_submodule(&as_module)?;
        let mut step_degrees = vec![vec![0]];
        step_degrees.extend(inner.step_degrees.clone());
        let min = as_module.minimal_generators()?;
        let mut maps = vec![min.gens().to_vec()];
        maps.extend(inner.maps);
        Ok(FreeResolution { field, nvars, step_degrees, maps })
    }

    /// Number of arrows, i.e. the projective dimension of the presented
    /// module over the polynomial ring.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.step_degrees.iter().map(|d| d.len()).collect()
    }

    /// Σ_i (−1)^i Σ_j t^{d_ij}: Euler characteristic numerator of the
    /// Hilbert series over (1−t)^nvars.
    pub fn euler_numerator(&self) -> ZPoly {
        let mut acc = ZPoly::zero();
        for (i, degrees) in self.step_degrees.iter().enumerate() {
            for &d in degrees {
                let term = ZPoly::monomial(usize::try_from(d).expect("nonnegative degree"), 1);
                acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
        }
        acc
    }

    /// Hilbert function by the alternating binomial sum over the steps.
    pub fn hilbert_function(&self, t: i64) -> i64 {
        let mut acc = 0i64;
        for (i, degrees) in self.step_degrees.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &d in degrees {
                acc += sign * crate::groebner::hilbert::ambient_dim(self.nvars, t - d);
            }
        }
        acc
    }

    /// Castelnuovo–Mumford regularity: max over steps of (generator
    /// degree − homological index).
    pub fn regularity(&self) -> i64 {
        self.step_degrees
            .iter()
            .enumerate()
            .flat_map(|(i, ds)| ds.iter().map(move |&d| d - i as i64))
            .max()
            .unwrap_or(0)
    }

    /// Verify that consecutive maps compose to zero and that no map entry
    /// is a nonzero constant (minimality).
    pub fn verify(&self) -> Result<()> {
        for map in &self.maps {
            for col in map {
                for entry in col {
                    if !entry.is_zero() && entry.is_constant() {
                        return Err(Error::Internal("resolution map has a constant entry".into()));
                    }
                }
            }
        }
        for w in self.maps.windows(2) {
            let (outer, inner) = (&w[0], &w[1]);
            // each column of `inner` maps through `outer`
            for col in inner {
                let rank = outer.first().map_or(0, |c| c.len());
                let mut acc: ModVec<F> = vec![Poly::zero(self.field.clone(), self.nvars); rank];
                for (ci, coeff) in col.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for (a, b) in acc.iter_mut().zip(&outer[ci]) {
                        *a = a.add(&coeff.mul(b));
                    }
                }
                if acc.iter().any(|p| !p.is_zero()) {
                    return Err(Error::Internal("resolution maps do not compose to zero".into()));
                }
            }
        }
        Ok(())
    }
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
    fn free_module_has_length_zero() {
        let m = GradedSubmodule::new(Rationals, 3, vec![0, 0], vec![
            vec![p("1"), p("0")],
            vec![p("0"), p("1")],
        ]);
        let res = FreeResolution::of_submodule(&m).unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(res.betti_numbers(), vec![2]);
        res.verify().unwrap();
    }

    #[test]
    fn koszul_resolution_of_the_irrelevant_ideal() {
        let i = GradedIdeal::new(Rationals, 3, vec![p("x"), p("y"), p("z")]);
        let res = FreeResolution::of_quotient(&i).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 3, 3, 1]);
        assert_eq!(res.step_degrees[1], vec![1, 1, 1]);
        assert_eq!(res.step_degrees[2], vec![2, 2, 2]);
        assert_eq!(res.step_degrees[3], vec![3]);
        res.verify().unwrap();
        // Euler numerator must reproduce the series of S/(x,y,z): 1 - 3t + 3t^2 - t^3
        assert_eq!(res.euler_numerator(), ZPoly(vec![1, -3, 3, -1]));
        assert_eq!(res.hilbert_function(0), 1);
        assert_eq!(res.hilbert_function(1), 0);
        assert_eq!(res.regularity(), 0);
    }

    #[test]
    fn zero_module_resolution() {
        let m = GradedSubmodule::new(Rationals, 3, vec![0], vec![]);
        let res = FreeResolution::of_submodule(&m).unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(res.betti_numbers(), vec![0]);
    }
}
