//! Syzygy computation.
//!
//! Strategy: run a tracked Buchberger pass, then reduce every S-element of
//! the finished basis recording exact divisions. Those relations generate
//! the syzygies of the basis (Schreyer); combining them with the tracking
//! matrices transports them back to the input generators.

use crate::error::Result;
use crate::field::Field;
use crate::groebner::engine::{buchberger, spair_reductions, GbOptions, WElem};
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::poly::Poly;

pub type ModVec<F> = Vec<Poly<F>>;

fn welem_to_vec<F: Field>(field: &F, nvars: usize, w: &WElem<F>) -> ModVec<F> {
    w.to_polys(field, nvars)
}

fn vec_is_zero<F: Field>(v: &ModVec<F>) -> bool {
    v.iter().all(|p| p.is_zero())
}

fn vec_add_scaled<F: Field>(acc: &mut ModVec<F>, scale: &Poly<F>, v: &ModVec<F>) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a = a.add(&scale.mul(b));
    }
}

/// Generators of { v ∈ ⊕ S e_i : Σ v_i · gens_i = 0 } for module elements
/// `gens` of common ambient rank.
pub fn syzygies<F: Field>(
    field: &F,
    nvars: usize,
    rank: usize,
    gens: &[ModVec<F>],
    base: &MonomialOrder,
    opts: &GbOptions,
) -> Result<Vec<ModVec<F>>> {
    let s = gens.len();
    if s == 0 {
        return Ok(Vec::new());
    }
    let welems: Vec<WElem<F>> = gens
        .iter()
        .map(|g| WElem::from_polys(g.clone()))
        .collect();
    let order = ModuleOrder::Pot(base.clone());
    let gb = buchberger(field, nvars, rank, &welems, &order, true, opts)?;
    let reps: Vec<ModVec<F>> = gb
        .reps
        .as_ref()
        .expect("tracked")
        .iter()
        .map(|r| welem_to_vec(field, nvars, r))
        .collect();
    let t = gb.basis.len();

    let mut out: Vec<ModVec<F>> = Vec::new();
    let zero_vec = |n: usize| vec![Poly::zero(field.clone(), nvars); n];

    // Schreyer relations of the basis, pushed through the tracking matrix.
    for ((i, j), lcm, red) in spair_reductions(&gb) {
        assert!(
            red.remainder.is_zero(),
            "S-element did not reduce to zero against a Groebner basis"
        );
        let (ci, mi) = lead_of(&gb.basis[i], &gb.order);
        let (cj, mj) = lead_of(&gb.basis[j], &gb.order);
        let ui = mi.quotient(&lcm);
        let uj = mj.quotient(&lcm);
        // the division record says scale·(cj·ui·g_i − ci·uj·g_j) = Σ q_k g_k,
        // giving the syzygy scale·cj·ui·e_i − scale·ci·uj·e_j − Σ q_k e_k
        let mut coeffs: Vec<Poly<F>> = zero_vec(t);
        let sc_j = field.mul(&red.scale, cj);
        let sc_i = field.mul(&red.scale, ci);
        coeffs[i] = coeffs[i].add(&Poly::term(field.clone(), nvars, ui, sc_j));
        coeffs[j] = coeffs[j].sub(&Poly::term(field.clone(), nvars, uj, sc_i));
        for (k, mono, c) in red.quotient {
            coeffs[k] = coeffs[k].sub(&Poly::term(field.clone(), nvars, mono, c));
        }
        // transport: v = Σ_k coeffs_k · rep_k ∈ S^s
        let mut v = zero_vec(s);
        for (k, ck) in coeffs.iter().enumerate() {
            if !ck.is_zero() {
                vec_add_scaled(&mut v, ck, &reps[k]);
            }
        }
        if !vec_is_zero(&v) {
            out.push(normalize_vec(field, v));
        }
    }

    // completion: e_i − P·Q_i for every input generator
    for (i, g) in welems.iter().enumerate() {
        let red = gb.reduce(g);
        assert!(
            red.remainder.is_zero(),
            "input generator outside the module it generates"
        );
        let mut v = zero_vec(s);
        v[i] = Poly::constant(field.clone(), nvars, red.scale.clone());
        for (k, mono, c) in red.quotient {
            let term = Poly::term(field.clone(), nvars, mono, c);
            for (a, b) in v.iter_mut().zip(&reps[k]) {
                *a = a.sub(&term.mul(b));
            }
        }
        if !vec_is_zero(&v) {
            out.push(normalize_vec(field, v));
        }
    }

    out.sort_by(|a, b| vec_key(a).cmp(&vec_key(b)));
    out.dedup();
    Ok(out)
}

fn lead_of<'a, F: Field>(w: &'a WElem<F>, ord: &ModuleOrder) -> (&'a F::Elem, &'a Monomial) {
    let (_, m, c) = w.lead(ord).expect("basis element nonzero");
    (c, m)
}

fn normalize_vec<F: Field>(field: &F, mut v: ModVec<F>) -> ModVec<F> {
    let mut coeffs: Vec<F::Elem> = Vec::new();
    for p in &v {
        coeffs.extend(p.terms().iter().map(|(_, c)| c.clone()));
    }
    let unit = field.normalize(&mut coeffs);
    if !field.is_one(&unit) {
        for p in v.iter_mut() {
            *p = p.scale(&unit);
        }
    }
    v
}

fn vec_key<F: Field>(v: &ModVec<F>) -> (u32, usize, String) {
    let deg = v
        .iter()
        .filter_map(|p| match p.degree() {
            crate::poly::Degree::Of(d) => Some(d),
            crate::poly::Degree::MinusInfinity => None,
        })
        .max()
        .unwrap_or(0);
    let nterms: usize = v.iter().map(|p| p.num_terms()).sum();
    (deg, nterms, format!("{v:?}"))
}

/// Check Σ v_i g_i = 0 exactly.
pub fn annihilates<F: Field>(v: &ModVec<F>, gens: &[ModVec<F>], field: &F, nvars: usize) -> bool {
    let rank = gens.first().map_or(0, |g| g.len());
    let mut acc = vec![Poly::zero(field.clone(), nvars); rank];
    for (vi, g) in v.iter().zip(gens) {
        vec_add_scaled(&mut acc, vi, g);
    }
    acc.iter().all(|p| p.is_zero())
}
