//! Graded ideals: Gröbner caches, membership, quotients, intersections,
//! saturation, and projective degree.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::engine::{buchberger, GbOptions, ModuleGb, WElem};
use crate::groebner::hilbert::{
    monomial_quotient_numerator, staircase_is_finite, standard_monomial_count, ZPoly,
};
use crate::groebner::syzygy::syzygies;
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::poly::Poly;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub struct GradedIdeal<F: Field> {
    field: F,
    nvars: usize,
    gens: Vec<Poly<F>>,
    cache: Mutex<HashMap<String, Arc<ModuleGb<F>>>>,
}

impl<F: Field> Clone for GradedIdeal<F> {
    fn clone(&self) -> Self {
        GradedIdeal {
            field: self.field.clone(),
            nvars: self.nvars,
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> std::fmt::Debug for GradedIdeal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedIdeal")
            .field("nvars", &self.nvars)
            .field("gens", &self.gens.len())
            .finish()
    }
}

impl<F: Field> GradedIdeal<F> {
    pub fn new(field: F, nvars: usize, gens: Vec<Poly<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        GradedIdeal { field, nvars, gens, cache: Mutex::new(HashMap::new()) }
    }

    pub fn irrelevant(field: F, nvars: usize) -> Self {
        let gens = (0..nvars)
            .map(|i| Poly::variable(field.clone(), nvars, i))
            .collect();
        Self::new(field, nvars, gens)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Gröbner basis under the given order, cached per order.
    pub fn gb(&self, order: &MonomialOrder) -> Arc<ModuleGb<F>> {
        let key = format!("{order:?}");
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let welems: Vec<WElem<F>> = self
            .gens
            .iter()
            .map(|g| WElem::from_polys(vec![g.clone()]))
            .collect();
        let mord = ModuleOrder::Pot(order.clone());
        let gb = buchberger(
            &self.field,
            self.nvars,
            1,
            &welems,
            &mord,
            false,
            &GbOptions::default(),
        )
        .expect("ideal Groebner basis");
        let arc = Arc::new(gb);
        self.cache.lock().unwrap().insert(key, arc.clone());
        arc
    }

    pub fn basis_polys(&self, order: &MonomialOrder) -> Vec<Poly<F>> {
        self.gb(order)
            .basis
            .iter()
            .map(|w| w.to_polys(&self.field, self.nvars).pop().expect("rank 1"))
            .collect()
    }

    pub fn lead_monomials(&self, order: &MonomialOrder) -> Vec<Monomial> {
        self.gb(order).leads.iter().map(|(_, m)| m.clone()).collect()
    }

    pub fn normal_form(&self, p: &Poly<F>, order: &MonomialOrder) -> Poly<F> {
        let gb = self.gb(order);
        let w = WElem::from_polys(vec![p.clone()]);
        gb.normal_form(&w)
            .to_polys(&self.field, self.nvars)
            .pop()
            .expect("rank 1")
    }

    pub fn contains(&self, p: &Poly<F>) -> bool {
        self.normal_form(p, &MonomialOrder::GrevLex).is_zero()
    }

    /// Structural equality of reduced Gröbner bases, hence ideal equality.
    pub fn equals(&self, other: &GradedIdeal<F>) -> bool {
        self.basis_polys(&MonomialOrder::GrevLex) == other.basis_polys(&MonomialOrder::GrevLex)
    }

    pub fn is_unit(&self) -> bool {
        let basis = self.basis_polys(&MonomialOrder::GrevLex);
        basis.len() == 1 && basis[0].is_constant() && !basis[0].is_zero()
    }

    /// Finite-dimensional quotient test: every variable appears as a pure
    /// power among the leading terms.
    pub fn is_artinian(&self) -> bool {
        if self.gens.is_empty() {
            return false;
        }
        staircase_is_finite(self.nvars, &self.lead_monomials(&MonomialOrder::GrevLex))
    }

    /// Numerator of the Hilbert series of S/I over (1−t)^nvars.
    pub fn quotient_series_numerator(&self) -> ZPoly {
        monomial_quotient_numerator(&self.lead_monomials(&MonomialOrder::GrevLex))
    }

    /// dim_k (S/I)_d.
    pub fn quotient_hilbert_function(&self, d: i64) -> i64 {
        standard_monomial_count(self.nvars, &self.lead_monomials(&MonomialOrder::GrevLex), d)
    }

    /// Krull dimension of S/I (the cone); the unit ideal gives None.
    pub fn quotient_krull_dim(&self) -> Option<u32> {
        let numer = self.quotient_series_numerator();
        if numer.is_zero() {
            return None;
        }
        let (cancelled, _) = numer.strip_one_minus_t();
        Some(self.nvars as u32 - cancelled as u32)
    }

    pub fn with_extra_gens(&self, extra: &[Poly<F>]) -> GradedIdeal<F> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        GradedIdeal::new(self.field.clone(), self.nvars, gens)
    }

    /// Ideal quotient (I : f) = { p : p f ∈ I }, via syzygies of
    /// [gens, f]: the f-coordinates of the kernel generate the quotient.
    pub fn quotient_by_poly(&self, f: &Poly<F>) -> Result<GradedIdeal<F>> {
        if f.is_zero() {
            return Ok(GradedIdeal::new(
                self.field.clone(),
                self.nvars,
                vec![Poly::one(self.field.clone(), self.nvars)],
            ));
        }
        if self.gens.is_empty() {
            return Ok(self.clone());
        }
        let mut gens: Vec<Vec<Poly<F>>> = self.gens.iter().map(|g| vec![g.clone()]).collect();
        gens.push(vec![f.clone()]);
        let syz = syzygies(
            &self.field,
            self.nvars,
            1,
            &gens,
            &MonomialOrder::GrevLex,
            &GbOptions::default(),
        )?;
        let last = gens.len() - 1;
        let quot_gens: Vec<Poly<F>> = syz.into_iter().map(|mut v| v.remove(last)).collect();
        Ok(GradedIdeal::new(self.field.clone(), self.nvars, quot_gens))
    }

    /// I ∩ J via syzygies of the concatenated generators.
    pub fn intersect(&self, other: &GradedIdeal<F>) -> Result<GradedIdeal<F>> {
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(GradedIdeal::new(self.field.clone(), self.nvars, Vec::new()));
        }
        let mut gens: Vec<Vec<Poly<F>>> = self.gens.iter().map(|g| vec![g.clone()]).collect();
        gens.extend(other.gens.iter().map(|g| vec![g.clone()]));
        let syz = syzygies(
            &self.field,
            self.nvars,
            1,
            &gens,
            &MonomialOrder::GrevLex,
            &GbOptions::default(),
        )?;
        let mine = self.gens.len();
        let inter: Vec<Poly<F>> = syz
            .into_iter()
            .map(|v| {
                let mut acc = Poly::zero(self.field.clone(), self.nvars);
                for (vi, g) in v.iter().take(mine).zip(&self.gens) {
                    acc = acc.add(&vi.mul(g));
                }
                acc
            })
            .collect();
        Ok(GradedIdeal::new(self.field.clone(), self.nvars, inter))
    }

    /// (I : J) = ∩_g (I : g) over the generators of J.
    pub fn quotient_by_ideal(&self, j: &GradedIdeal<F>) -> Result<GradedIdeal<F>> {
        let mut acc: Option<GradedIdeal<F>> = None;
        for g in &j.gens {
            let q = self.quotient_by_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| {
            GradedIdeal::new(
                self.field.clone(),
                self.nvars,
                vec![Poly::one(self.field.clone(), self.nvars)],
            )
        }))
    }

    /// Saturation (I : J^∞) by iterating the quotient until it stabilizes.
    pub fn saturate(&self, j: &GradedIdeal<F>) -> Result<GradedIdeal<F>> {
        let mut cur = self.clone();
        let mut cur_basis = cur.basis_polys(&MonomialOrder::GrevLex);
        loop {
            let next = cur.quotient_by_ideal(j)?;
            let next_basis = next.basis_polys(&MonomialOrder::GrevLex);
            if next_basis == cur_basis {
                return Ok(cur);
            }
            cur = next;
            cur_basis = next_basis;
        }
    }

    pub fn saturate_by_poly(&self, f: &Poly<F>) -> Result<GradedIdeal<F>> {
        let j = GradedIdeal::new(self.field.clone(), self.nvars, vec![f.clone()]);
        self.saturate(&j)
    }

    pub fn saturate_irrelevant(&self) -> Result<GradedIdeal<F>> {
        self.saturate(&GradedIdeal::irrelevant(self.field.clone(), self.nvars))
    }

    /// Degree of the projective scheme cut out by the saturation: the
    /// eventually constant value of HF(S/I^sat); 0 for the empty scheme.
    /// Positive-dimensional input is an error.
    pub fn projective_degree(&self) -> Result<i64> {
        let sat = self.saturate_irrelevant()?;
        if sat.is_unit() {
            return Ok(0);
        }
        let numer = sat.quotient_series_numerator();
        let (cancelled, reduced) = numer.strip_one_minus_t();
        let dim = self.nvars as i64 - cancelled as i64;
        match dim {
            // Artinian after saturation only happens for the unit ideal,
            // handled above; dim 1 is a finite set of projective points.
            1 => Ok(reduced.eval_at_one()),
            d if d < 1 => Ok(0),
            _ => Err(Error::PositiveDimensional),
        }
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

    fn ideal(gens: &[&str]) -> GradedIdeal<Rationals> {
        GradedIdeal::new(Rationals, 3, gens.iter().map(|s| p(s)).collect())
    }

    #[test]
    fn gb_single_variable() {
        let i = ideal(&["x"]);
        assert_eq!(i.basis_polys(&MonomialOrder::GrevLex), vec![p("x")]);
    }

    #[test]
    fn gb_buchberger_step_example() {
        // one S-pair: y(x^2+y^2) - x(xy) = y^3
        let i = ideal(&["x^2 + y^2", "x*y"]);
        let basis = i.basis_polys(&MonomialOrder::GrevLex);
        assert_eq!(basis, vec![p("x*y"), p("x^2 + y^2"), p("y^3")]);
    }

    #[test]
    fn gb_lex_linear_elimination() {
        let i = ideal(&["x - y", "y - z"]);
        let basis = i.basis_polys(&MonomialOrder::Lex);
        assert_eq!(basis, vec![p("y - z"), p("x - z")]);
    }

    #[test]
    fn normal_forms() {
        let i = ideal(&["x"]);
        assert!(i.normal_form(&p("x^2"), &MonomialOrder::GrevLex).is_zero());
        let j = ideal(&["x^2 + y^2", "x*y"]);
        assert_eq!(j.normal_form(&p("y^3 + 1"), &MonomialOrder::GrevLex), p("1"));
        // membership of a generated combination
        let comb = p("x^2 + y^2").mul(&p("x - 7")).add(&p("x*y").mul(&p("y^2 + 3")));
        assert!(j.contains(&comb));
    }

    #[test]
    fn quotient_and_saturation() {
        // (x^2, xy, xz) : (x,y,z) contains x; saturation is exactly (x)
        let i = ideal(&["x^2", "x*y", "x*z"]);
        let sat = i.saturate_irrelevant().unwrap();
        assert!(sat.equals(&ideal(&["x"])));
        // saturating a saturated ideal changes nothing
        let again = sat.saturate_irrelevant().unwrap();
        assert!(again.equals(&sat));
    }

    #[test]
    fn saturation_of_smooth_jacobian_is_unit() {
        // Fermat cubic: partials x^2, y^2, z^2
        let i = ideal(&["3*x^2", "3*y^2", "3*z^2"]);
        assert!(i.is_artinian());
        let sat = i.saturate_irrelevant().unwrap();
        assert!(sat.is_unit());
    }

    #[test]
    fn projective_degrees() {
        assert_eq!(ideal(&["x", "y"]).projective_degree().unwrap(), 1);
        assert_eq!(ideal(&["x^2", "y"]).projective_degree().unwrap(), 2);
        // positive-dimensional rejected
        assert!(matches!(
            ideal(&["x"]).projective_degree(),
            Err(Error::PositiveDimensional)
        ));
        // empty projective scheme
        assert_eq!(ideal(&["x", "y", "z"]).projective_degree().unwrap(), 0);
    }

    #[test]
    fn intersect_principal_ideals() {
        let a = ideal(&["x"]);
        let b = ideal(&["y"]);
        let c = a.intersect(&b).unwrap();
        assert!(c.equals(&ideal(&["x*y"])));
    }
}
