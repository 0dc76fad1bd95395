//! Graded submodules of free modules ⊕ S(−shift_c): Gröbner bases,
//! Hilbert data, homogeneity checks, and minimal generators.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::engine::{buchberger, GbOptions, ModuleGb, WElem};
use crate::groebner::hilbert::{
    ambient_dim, monomial_quotient_numerator, standard_monomial_count, ZPoly,
};
use crate::groebner::syzygy::{syzygies, ModVec};
use crate::matrix;
use crate::monomial::{monomials_of_degree, ModuleOrder, Monomial, MonomialOrder};
use crate::poly::Degree;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

pub struct GradedSubmodule<F: Field> {
    field: F,
    nvars: usize,
    shifts: Vec<i64>,
    gens: Vec<ModVec<F>>,
    cache: Mutex<Option<Arc<ModuleGb<F>>>>,
}

impl<F: Field> Clone for GradedSubmodule<F> {
    fn clone(&self) -> Self {
        GradedSubmodule {
            field: self.field.clone(),
            nvars: self.nvars,
            shifts: self.shifts.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> std::fmt::Debug for GradedSubmodule<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedSubmodule")
            .field("shifts", &self.shifts)
            .field("gens", &self.gens.len())
            .finish()
    }
}

impl<F: Field> GradedSubmodule<F> {
    pub fn new(field: F, nvars: usize, shifts: Vec<i64>, gens: Vec<ModVec<F>>) -> Self {
        let rank = shifts.len();
        let gens: Vec<ModVec<F>> = gens
            .into_iter()
            .filter(|g| {
                assert_eq!(g.len(), rank, "generator rank mismatch");
                g.iter().any(|p| !p.is_zero())
            })
            .collect();
        GradedSubmodule { field, nvars, shifts, gens, cache: Mutex::new(None) }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn gens(&self) -> &[ModVec<F>] {
        &self.gens
    }

    pub fn is_zero_module(&self) -> bool {
        self.gens.is_empty()
    }

    /// Degree of a homogeneous element in the shifted grading.
    pub fn element_degree(&self, v: &ModVec<F>) -> Result<i64> {
        let mut deg: Option<i64> = None;
        for (c, p) in v.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let (homog, d) = p.grading();
            if !homog {
                return Err(Error::NotHomogeneous(format!("coordinate {c}")));
            }
            let Degree::Of(d) = d else { continue };
            let total = d as i64 + self.shifts[c];
            match deg {
                None => deg = Some(total),
                Some(existing) if existing == total => {}
                Some(_) => {
                    return Err(Error::NotHomogeneous(format!(
                        "coordinate {c} breaks the shifted grading"
                    )))
                }
            }
        }
        deg.ok_or(Error::ZeroInput)
    }

    pub fn generator_degrees(&self) -> Result<Vec<i64>> {
        self.gens.iter().map(|g| self.element_degree(g)).collect()
    }

    pub fn gb(&self) -> Arc<ModuleGb<F>> {
        if let Some(hit) = self.cache.lock().unwrap().as_ref() {
            return hit.clone();
        }
        let welems: Vec<WElem<F>> = self
            .gens
            .iter()
            .map(|g| WElem::from_polys(g.clone()))
            .collect();
        let ord = ModuleOrder::Pot(MonomialOrder::GrevLex);
        let gb = buchberger(
            &self.field,
            self.nvars,
            self.rank(),
            &welems,
            &ord,
            false,
            &GbOptions::default(),
        )
        .expect("module Groebner basis");
        let arc = Arc::new(gb);
        *self.cache.lock().unwrap() = Some(arc.clone());
        arc
    }

    pub fn normal_form(&self, v: &ModVec<F>) -> ModVec<F> {
        let gb = self.gb();
        gb.normal_form(&WElem::from_polys(v.clone()))
            .to_polys(&self.field, self.nvars)
    }

    pub fn contains(&self, v: &ModVec<F>) -> bool {
        self.normal_form(v).iter().all(|p| p.is_zero())
    }

    /// Leading monomials of the Gröbner basis, grouped per component.
    pub fn lead_monomials_by_component(&self) -> Vec<Vec<Monomial>> {
        let gb = self.gb();
        let mut per: Vec<Vec<Monomial>> = vec![Vec::new(); self.rank()];
        for (c, m) in &gb.leads {
            per[*c].push(m.clone());
        }
        per
    }

    /// dim_k M_d from the staircase: HF(F, d) − HF(F/M, d).
    pub fn hilbert_function(&self, d: i64) -> i64 {
        let per = self.lead_monomials_by_component();
        let mut acc = 0i64;
        for (c, lms) in per.iter().enumerate() {
            let dd = d - self.shifts[c];
            acc += ambient_dim(self.nvars, dd) - standard_monomial_count(self.nvars, lms, dd);
        }
        acc
    }

    /// Numerator of HS(M) over (1−t)^nvars. Ambient shifts must be ≥ 0.
    pub fn series_numerator(&self) -> ZPoly {
        let per = self.lead_monomials_by_component();
        let mut acc = ZPoly::zero();
        for (c, lms) in per.iter().enumerate() {
            let s = usize::try_from(self.shifts[c]).expect("nonnegative shifts");
            let free = ZPoly::monomial(s, 1);
            let quot = monomial_quotient_numerator(lms).shifted(s);
            acc = acc.add(&free.sub(&quot));
        }
        acc
    }

    /// Kernel of ⊕ S(−deg g_i) → M, as a submodule with those shifts.
    pub fn syzygy_module(&self) -> Result<GradedSubmodule<F>> {
        let degrees = self.generator_degrees()?;
        let syz = syzygies(
            &self.field,
            self.nvars,
            self.rank(),
            &self.gens,
            &MonomialOrder::GrevLex,
            &GbOptions::default(),
        )?;
        Ok(GradedSubmodule::new(self.field.clone(), self.nvars, degrees, syz))
    }

    /// Coefficient vector of a homogeneous element in the ambient graded
    /// piece F_d = ⊕_c S_{d − shift_c}.
    fn coeff_vector(&self, v: &ModVec<F>, d: i64) -> Vec<F::Elem> {
        let mut out = Vec::new();
        for (c, p) in v.iter().enumerate() {
            let dd = d - self.shifts[c];
            if dd < 0 {
                debug_assert!(p.is_zero());
                continue;
            }
            for m in monomials_of_degree(self.nvars, dd as u32) {
                out.push(p.coeff(&m));
            }
        }
        out
    }

    /// Index of each monomial within the degree-d ambient piece.
    fn piece_offsets(&self, d: i64) -> (usize, Vec<(i64, usize)>) {
        let mut offsets = Vec::with_capacity(self.rank());
        let mut total = 0usize;
        for c in 0..self.rank() {
            let dd = d - self.shifts[c];
            offsets.push((dd, total));
            if dd >= 0 {
                total += ambient_dim(self.nvars, dd) as usize;
            }
        }
        (total, offsets)
    }

    /// Independent coefficient vectors spanning the graded piece M_d,
    /// built from Gröbner-basis multiples and row reduction.
    fn graded_piece_basis(&self, d: i64) -> Vec<Vec<F::Elem>> {
        let gb = self.gb();
        let mut rows = Vec::new();
        for w in gb.basis.iter() {
            let v = w.to_polys(&self.field, self.nvars);
            let Ok(gd) = self.element_degree(&v) else { continue };
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(self.nvars, (d - gd) as u32) {
                let mv: ModVec<F> = v.iter().map(|p| p.mul_monomial(&m)).collect();
                rows.push(self.coeff_vector(&mv, d));
            }
        }
        matrix::rref(&self.field, rows).rows
    }

    /// A minimal generating set selected from the given generators by
    /// exact linear algebra; the count per degree equals
    /// dim (M / ⟨x,y,z⟩M)_d. Stops as soon as the selected generators
    /// provably generate (equal Hilbert series), which skips the redundant
    /// high-degree part of syzygy output.
    pub fn minimal_generators(&self) -> Result<GradedSubmodule<F>> {
        let degrees = self.generator_degrees()?;
        let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, d) in degrees.iter().enumerate() {
            by_degree.entry(*d).or_default().push(i);
        }
        let target = self.series_numerator();
        let mut selected: Vec<ModVec<F>> = Vec::new();
        for (&d, idxs) in &by_degree {
            if !selected.is_empty() {
                let sel = GradedSubmodule::new(
                    self.field.clone(),
                    self.nvars,
                    self.shifts.clone(),
                    selected.clone(),
                );
                if sel.series_numerator() == target {
                    return Ok(sel);
                }
            }
            // span of (S_+ M)_d = S_1 · M_{d−1}: push a reduced basis of
            // M_{d−1} through the three multiplication maps
            let below = self.graded_piece_basis(d - 1);
            let (_, off_lo) = self.piece_offsets(d - 1);
            let (len_hi, off_hi) = self.piece_offsets(d);
            let mut index_hi: HashMap<(usize, Monomial), usize> = HashMap::new();
            for c in 0..self.rank() {
                let (dd, base) = off_hi[c];
                if dd < 0 {
                    continue;
                }
                for (k, m) in monomials_of_degree(self.nvars, dd as u32).iter().enumerate() {
                    index_hi.insert((c, m.clone()), base + k);
                }
            }
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            for v in &below {
                for var in 0..self.nvars {
                    let mut row = vec![self.field.zero(); len_hi];
                    for c in 0..self.rank() {
                        let (dd, base) = off_lo[c];
                        if dd < 0 {
                            continue;
                        }
                        for (k, m) in
                            monomials_of_degree(self.nvars, dd as u32).iter().enumerate()
                        {
                            let coef = &v[base + k];
                            if self.field.is_zero(coef) {
                                continue;
                            }
                            let target_idx = index_hi[&(c, m.mul_var(var))];
                            row[target_idx] = self.field.add(&row[target_idx], coef);
                        }
                    }
                    rows.push(row);
                }
            }
            let mut red = matrix::rref(&self.field, rows);
            for &i in idxs {
                // reduce the candidate against the current span
                let mut v = self.coeff_vector(&self.gens[i], d);
                for (ri, &pc) in red.pivots.iter().enumerate() {
                    if !self.field.is_zero(&v[pc]) {
                        let f = v[pc].clone();
                        for (vj, rj) in v.iter_mut().zip(&red.rows[ri]) {
                            let s = self.field.mul(&f, rj);
                            *vj = self.field.sub(vj, &s);
                        }
                    }
                }
                if v.iter().any(|c| !self.field.is_zero(c)) {
                    selected.push(self.gens[i].clone());
                    let mut rows2 = red.rows;
                    rows2.push(v);
                    red = matrix::rref(&self.field, rows2);
                }
            }
        }
        Ok(GradedSubmodule::new(
            self.field.clone(),
            self.nvars,
            self.shifts.clone(),
            selected,
        ))
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

    fn submodule(shifts: &[i64], gens: &[&[&str]]) -> GradedSubmodule<Rationals> {
        GradedSubmodule::new(
            Rationals,
            3,
            shifts.to_vec(),
            gens.iter().map(|g| g.iter().map(|s| p(s)).collect()).collect(),
        )
    }

    #[test]
    fn koszul_membership_and_hf() {
        // submodule of S^2 generated by (y, -x)
        let m = submodule(&[0, 0], &[&["y", "-x"]]);
        assert!(m.contains(&vec![p("x*y"), p("-x^2")]));
        assert!(!m.contains(&vec![p("y"), p("x")]));
        assert_eq!(m.hilbert_function(0), 0);
        assert_eq!(m.hilbert_function(1), 1);
        assert_eq!(m.hilbert_function(2), 3);
        assert_eq!(m.series_numerator(), ZPoly(vec![0, 1]));
    }

    #[test]
    fn minimal_generators_drop_multiples() {
        let m = submodule(&[0, 0], &[&["y", "-x"], &["x*y", "-x^2"]]);
        let min = m.minimal_generators().unwrap();
        assert_eq!(min.gens().len(), 1);
        assert_eq!(min.generator_degrees().unwrap(), vec![1]);
    }

    #[test]
    fn koszul_triple_stays() {
        let m = submodule(
            &[0, 0, 0],
            &[&["y", "-x", "0"], &["z", "0", "-x"], &["0", "z", "-y"]],
        );
        let min = m.minimal_generators().unwrap();
        assert_eq!(min.gens().len(), 3);
    }

    #[test]
    fn homogeneity_enforced() {
        let m = submodule(&[0, 1], &[&["x^2", "x"]]);
        assert_eq!(m.element_degree(&m.gens()[0].clone()).unwrap(), 2);
        let bad = submodule(&[0, 0], &[&["x^2", "x"]]);
        assert!(bad.generator_degrees().is_err());
    }

    #[test]
    fn syzygies_of_koszul_pair() {
        // syzygies of x, y as a rank-1 module with gens embedded
        let m = GradedSubmodule::new(Rationals, 3, vec![0], vec![vec![p("x")], vec![p("y")]]);
        let syz = m.syzygy_module().unwrap();
        assert_eq!(syz.shifts(), &[1, 1]);
        assert_eq!(syz.gens().len(), 1);
        assert_eq!(syz.gens()[0], vec![p("y"), p("-x")]);
    }
}
