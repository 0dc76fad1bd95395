//! Buchberger's algorithm for submodules of free graded modules.
//!
//! Ideals are the rank-one case. The engine optionally tracks, for every
//! basis element, its representation in terms of the input generators;
//! syzygy extraction builds on that (see `syzygy.rs`).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::poly::Poly;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

/// Environment variable capping the live S-pair queue (CI memory guard).
pub const MAX_PAIRS_ENV: &str = "LOGDERIV_MAX_PAIRS";

/// Term list sorted descending under the active base order.
type Terms<F> = Vec<(Monomial, <F as Field>::Elem)>;

/// Element of a free module, one term list per coordinate.
#[derive(Clone, Debug)]
pub struct WElem<F: Field> {
    pub coords: Vec<Terms<F>>,
}

impl<F: Field> WElem<F> {
    pub fn zero(rank: usize) -> Self {
        WElem { coords: vec![Vec::new(); rank] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_empty())
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Leading module term under `ord`: (component, monomial, coefficient).
    pub fn lead(&self, ord: &ModuleOrder) -> Option<(usize, &Monomial, &F::Elem)> {
        let mut best: Option<(usize, &Monomial, &F::Elem)> = None;
        for (ci, terms) in self.coords.iter().enumerate() {
            if let Some((m, c)) = terms.first() {
                best = match best {
                    None => Some((ci, m, c)),
                    Some(b) => {
                        if ord.cmp(&(ci, m.clone()), &(b.0, b.1.clone()))
                            == std::cmp::Ordering::Greater
                        {
                            Some((ci, m, c))
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        best
    }

    pub fn from_polys(polys: Vec<Poly<F>>) -> Self {
        WElem { coords: polys.into_iter().map(|p| p.terms().to_vec()).collect() }
    }

    pub fn to_polys(&self, field: &F, nvars: usize) -> Vec<Poly<F>> {
        self.coords
            .iter()
            .map(|t| Poly::from_terms(field.clone(), nvars, t.clone()))
            .collect()
    }

    fn sub_scaled(
        &self,
        field: &F,
        ord: &MonomialOrder,
        c: &F::Elem,
        m: &Monomial,
        other: &WElem<F>,
    ) -> WElem<F> {
        debug_assert_eq!(self.rank(), other.rank());
        WElem {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| sub_scaled_terms(field, ord, a, c, m, b))
                .collect(),
        }
    }

    fn scale(&mut self, field: &F, c: &F::Elem) {
        for t in self.coords.iter_mut() {
            for (_, tc) in t.iter_mut() {
                *tc = field.mul(c, tc);
            }
        }
    }

    /// Canonical unit rescaling (primitive over Q, monic over F_p);
    /// returns the unit that was applied.
    fn normalize(&mut self, field: &F, ord: &ModuleOrder) -> F::Elem {
        let Some((lc_comp, m, c)) = self.lead(ord).map(|(ci, m, c)| (ci, m.clone(), c.clone()))
        else {
            return field.one();
        };
        let mut coeffs: Vec<F::Elem> = vec![c];
        for (ci, t) in self.coords.iter().enumerate() {
            for (tm, tc) in t {
                if ci == lc_comp && *tm == m {
                    continue;
                }
                coeffs.push(tc.clone());
            }
        }
        let unit = field.normalize(&mut coeffs);
        if !field.is_one(&unit) {
            self.scale(field, &unit);
        }
        unit
    }
}

/// a + b as sorted term lists.
fn merge_add<F: Field>(field: &F, ord: &MonomialOrder, a: &Terms<F>, b: &Terms<F>) -> Terms<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.cmp(&a[i].0, &b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = field.add(&a[i].1, &b[j].1);
                if !field.is_zero(&c) {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// a − (c·m)·b.
fn sub_scaled_terms<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    a: &Terms<F>,
    c: &F::Elem,
    m: &Monomial,
    b: &Terms<F>,
) -> Terms<F> {
    if b.is_empty() {
        return a.clone();
    }
    let scaled: Terms<F> = b
        .iter()
        .map(|(bm, bc)| (bm.mul(m), field.neg(&field.mul(c, bc))))
        .collect();
    merge_add(field, ord, a, &scaled)
}

#[derive(Clone, Debug)]
struct Entry<F: Field> {
    elem: WElem<F>,
    lt_comp: usize,
    lt_mono: Monomial,
    lt_coeff: F::Elem,
    rep: Option<WElem<F>>,
}

impl<F: Field> Entry<F> {
    fn new(field: &F, ord: &ModuleOrder, mut elem: WElem<F>, mut rep: Option<WElem<F>>) -> Self {
        let unit = elem.normalize(field, ord);
        if let Some(r) = rep.as_mut() {
            if !field.is_one(&unit) {
                r.scale(field, &unit);
            }
        }
        let (c, m, e) = elem.lead(ord).expect("nonzero entry");
        let (lt_comp, lt_mono, lt_coeff) = (c, m.clone(), e.clone());
        Entry { elem, lt_comp, lt_mono, lt_coeff, rep }
    }

    fn untracked(ord: &ModuleOrder, elem: WElem<F>) -> Self {
        let (c, m, e) = elem.lead(ord).expect("nonzero entry");
        let (lt_comp, lt_mono, lt_coeff) = (c, m.clone(), e.clone());
        Entry { elem, lt_comp, lt_mono, lt_coeff, rep: None }
    }
}

/// One recorded division: (basis index, monomial factor, coefficient).
pub type Quotient<F> = Vec<(usize, Monomial, <F as Field>::Elem)>;

/// Result of a full division: scale·input = Σ quotient·basis + remainder.
/// Over the rationals reduction runs fraction-free, so `scale` is the
/// accumulated rescaling of the input (always 1 over a prime field).
pub struct Reduction<F: Field> {
    pub remainder: WElem<F>,
    pub quotient: Quotient<F>,
    pub scale: F::Elem,
}

/// Full normal form of `elem` against `basis`: no remaining term is
/// divisible by any basis leading term in the matching component.
///
/// `record` keeps the exact division steps (incompatible with content
/// stripping, which rescales by units outside the scale bookkeeping). A
/// tracked vector in `rep` gets the identical operations applied.
fn reduce_full<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    base: &MonomialOrder,
    basis: &[Entry<F>],
    mut work: WElem<F>,
    mut rep: Option<&mut WElem<F>>,
    record: bool,
    strip_content: bool,
) -> Reduction<F> {
    let rank = work.rank();
    // remainder terms and quotient records carry the scale at push time
    // and are trued up once at the end, so rescaling steps stay linear in
    // the working part
    let mut pending: Vec<(usize, Monomial, F::Elem, F::Elem)> = Vec::new();
    let mut pending_quot: Vec<(usize, Monomial, F::Elem, F::Elem)> = Vec::new();
    let mut scale = field.one();
    let mut steps = 0usize;
    while let Some((comp, mono, coeff)) =
        work.lead(ord).map(|(c, m, e)| (c, m.clone(), e.clone()))
    {
        let reducer = basis
            .iter()
            .position(|g| g.lt_comp == comp && g.lt_mono.divides(&mono));
        match reducer {
            Some(gi) => {
                let g = &basis[gi];
                let (u, v) = field.reduction_pair(&coeff, &g.lt_coeff);
                let shift = g.lt_mono.quotient(&mono);
                if !field.is_one(&u) {
                    work.scale(field, &u);
                    scale = field.mul(&scale, &u);
                    if let Some(r) = rep.as_deref_mut() {
                        r.scale(field, &u);
                    }
                }
                work = work.sub_scaled(field, base, &v, &shift, &g.elem);
                if let Some(r) = rep.as_deref_mut() {
                    if let Some(grep) = &g.rep {
                        *r = r.sub_scaled(field, base, &v, &shift, grep);
                    }
                }
                if record {
                    pending_quot.push((gi, shift, v, scale.clone()));
                }
                steps += 1;
                if strip_content && !record && steps % 8 == 0 {
                    let mut coeffs: Vec<F::Elem> = Vec::new();
                    for t in work.coords.iter() {
                        coeffs.extend(t.iter().map(|(_, c)| c.clone()));
                    }
                    if !coeffs.is_empty() {
                        let unit = field.normalize(&mut coeffs);
                        if !field.is_one(&unit) {
                            work.scale(field, &unit);
                            scale = field.mul(&scale, &unit);
                            if let Some(r) = rep.as_deref_mut() {
                                r.scale(field, &unit);
                            }
                        }
                    }
                }
            }
            None => {
                let terms = &mut work.coords[comp];
                let pos = terms
                    .iter()
                    .position(|(m, _)| *m == mono)
                    .expect("lead present");
                let (m, c) = terms.remove(pos);
                pending.push((comp, m, c, scale.clone()));
            }
        }
    }
    let mut remainder = WElem::zero(rank);
    for (comp, m, c, at) in pending {
        let c = if at == scale {
            c
        } else {
            field.mul(&c, &field.div(&scale, &at))
        };
        remainder.coords[comp].push((m, c));
    }
    let quotient: Quotient<F> = pending_quot
        .into_iter()
        .map(|(gi, m, v, at)| {
            let v = if at == scale {
                v
            } else {
                field.mul(&v, &field.div(&scale, &at))
            };
            (gi, m, v)
        })
        .collect();
    Reduction { remainder, quotient, scale }
}

pub struct GbOptions {
    pub use_criteria: bool,
    pub max_pairs: Option<usize>,
}

impl Default for GbOptions {
    fn default() -> Self {
        let max_pairs = std::env::var(MAX_PAIRS_ENV).ok().and_then(|v| v.parse().ok());
        GbOptions { use_criteria: true, max_pairs }
    }
}

pub struct ModuleGb<F: Field> {
    pub field: F,
    pub nvars: usize,
    pub rank: usize,
    pub order: ModuleOrder,
    /// Auto-reduced basis, sorted by ascending leading term.
    pub basis: Vec<WElem<F>>,
    /// Leading (component, monomial) of each basis element.
    pub leads: Vec<(usize, Monomial)>,
    /// basis[k] = Σ_i reps[k].coords[i] · gens[i], when tracking was on.
    pub reps: Option<Vec<WElem<F>>>,
}

impl<F: Field> ModuleGb<F> {
    /// Exact normal form: elem − result lies in the module.
    pub fn normal_form(&self, elem: &WElem<F>) -> WElem<F> {
        let red = self.reduce(elem);
        let mut r = red.remainder;
        if !self.field.is_one(&red.scale) {
            let inv = self.field.inv(&red.scale);
            r.scale(&self.field, &inv);
        }
        r
    }

    /// Normal form together with the exact division record.
    pub fn reduce(&self, elem: &WElem<F>) -> Reduction<F> {
        let entries = self.entries();
        let base = base_order(&self.order);
        let mut sorted = elem.clone();
        for t in sorted.coords.iter_mut() {
            t.sort_by(|a, b| base.cmp(&b.0, &a.0));
        }
        reduce_full(&self.field, &self.order, &base, &entries, sorted, None, true, false)
    }

    pub fn contains(&self, elem: &WElem<F>) -> bool {
        self.normal_form(elem).is_zero()
    }

    fn entries(&self) -> Vec<Entry<F>> {
        self.basis
            .iter()
            .map(|b| Entry::untracked(&self.order, b.clone()))
            .collect()
    }
}

pub fn base_order(ord: &ModuleOrder) -> MonomialOrder {
    match ord {
        ModuleOrder::Pot(b) => b.clone(),
        ModuleOrder::Top { base, .. } => base.clone(),
        ModuleOrder::Schreyer { base, .. } => base.clone(),
    }
}

/// Buchberger's algorithm on module generators.
pub fn buchberger<F: Field>(
    field: &F,
    nvars: usize,
    rank: usize,
    gens: &[WElem<F>],
    order: &ModuleOrder,
    track: bool,
    opts: &GbOptions,
) -> Result<ModuleGb<F>> {
    let base = base_order(order);
    let ngens = gens.len();
    let mut basis: Vec<Entry<F>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut sorted = g.clone();
        for t in sorted.coords.iter_mut() {
            t.sort_by(|a, b| base.cmp(&b.0, &a.0));
        }
        let rep = track.then(|| {
            let mut r = WElem::zero(ngens);
            r.coords[i] = vec![(Monomial::one(nvars), field.one())];
            r
        });
        basis.push(Entry::new(field, order, sorted, rep));
    }

    let mut pairs: BinaryHeap<Reverse<(i64, usize, usize)>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let lcm_degree = |a: &Entry<F>, b: &Entry<F>| -> Option<i64> {
        (a.lt_comp == b.lt_comp).then(|| a.lt_mono.lcm(&b.lt_mono).degree() as i64)
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(d) = lcm_degree(&basis[i], &basis[j]) {
                pairs.push(Reverse((d, i, j)));
            }
        }
    }

    while let Some(Reverse((_, i, j))) = pairs.pop() {
        if let Some(cap) = opts.max_pairs {
            if pairs.len() > cap {
                return Err(Error::PairQueueLimit(cap));
            }
        }
        done.insert((i, j));
        let lcm = basis[i].lt_mono.lcm(&basis[j].lt_mono);
        if opts.use_criteria {
            // product criterion (sound for ideals only)
            if rank == 1 && basis[i].lt_mono.is_coprime(&basis[j].lt_mono) {
                continue;
            }
            // chain criterion: both subpairs already treated
            let chain = basis.iter().enumerate().any(|(l, gl)| {
                l != i
                    && l != j
                    && gl.lt_comp == basis[i].lt_comp
                    && gl.lt_mono.divides(&lcm)
                    && done.contains(&(l.min(i), l.max(i)))
                    && done.contains(&(l.min(j), l.max(j)))
            });
            if chain {
                continue;
            }
        }
        let (spair, mut rep) = s_element(field, &base, &basis, i, j, &lcm, track, ngens);
        let red = reduce_full(field, order, &base, &basis, spair, rep.as_mut(), false, true);
        if red.remainder.is_zero() {
            continue;
        }
        let entry = Entry::new(field, order, red.remainder, rep);
        let k = basis.len();
        basis.push(entry);
        for l in 0..k {
            if let Some(d) = lcm_degree(&basis[l], &basis[k]) {
                pairs.push(Reverse((d, l, k)));
            }
        }
    }

    // drop entries whose lead is divisible by another lead
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !keep[b] || basis[b].lt_comp != basis[a].lt_comp {
                continue;
            }
            if basis[b].lt_mono.divides(&basis[a].lt_mono)
                && (basis[b].lt_mono != basis[a].lt_mono || b < a)
            {
                keep[a] = false;
                break;
            }
        }
    }
    let mut pruned: Vec<Entry<F>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();

    // tail-reduce each element against the others (leads are untouched
    // because no lead divides another after pruning)
    let snapshot = pruned.clone();
    for (idx, entry) in pruned.iter_mut().enumerate() {
        let others: Vec<Entry<F>> = snapshot
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != idx)
            .map(|(_, e)| e.clone())
            .collect();
        let mut rep = entry.rep.clone();
        let red = reduce_full(
            field,
            order,
            &base,
            &others,
            entry.elem.clone(),
            rep.as_mut(),
            false,
            true,
        );
        debug_assert!(!red.remainder.is_zero(), "pruned element reduced to zero");
        *entry = Entry::new(field, order, red.remainder, rep);
    }

    pruned.sort_by(|a, b| {
        order.cmp(
            &(a.lt_comp, a.lt_mono.clone()),
            &(b.lt_comp, b.lt_mono.clone()),
        )
    });

    let leads = pruned.iter().map(|e| (e.lt_comp, e.lt_mono.clone())).collect();
    let reps = track.then(|| {
        pruned
            .iter()
            .map(|e| e.rep.clone().expect("tracked run"))
            .collect()
    });
    Ok(ModuleGb {
        field: field.clone(),
        nvars,
        rank,
        order: order.clone(),
        basis: pruned.into_iter().map(|e| e.elem).collect(),
        leads,
        reps,
    })
}

/// Cross-scaled S-element c_j·(lcm/lt_i)·g_i − c_i·(lcm/lt_j)·g_j together
/// with the matching combination of representation vectors.
fn s_element<F: Field>(
    field: &F,
    base: &MonomialOrder,
    basis: &[Entry<F>],
    i: usize,
    j: usize,
    lcm: &Monomial,
    track: bool,
    ngens: usize,
) -> (WElem<F>, Option<WElem<F>>) {
    let (gi, gj) = (&basis[i], &basis[j]);
    let ui = gi.lt_mono.quotient(lcm);
    let uj = gj.lt_mono.quotient(lcm);
    let rank = gi.elem.rank();
    let mut spair = WElem::zero(rank);
    spair = spair.sub_scaled(field, base, &field.neg(&gj.lt_coeff), &ui, &gi.elem);
    spair = spair.sub_scaled(field, base, &gi.lt_coeff, &uj, &gj.elem);
    let rep = track.then(|| {
        let mut r = WElem::zero(ngens);
        if let Some(ri) = &gi.rep {
            r = r.sub_scaled(field, base, &field.neg(&gj.lt_coeff), &ui, ri);
        }
        if let Some(rj) = &gj.rep {
            r = r.sub_scaled(field, base, &gi.lt_coeff, &uj, rj);
        }
        r
    });
    (spair, rep)
}

/// Reduce all S-elements of a finished basis, recording exact divisions.
/// For a Gröbner basis every remainder is zero; the records are the
/// Schreyer generators of the syzygy module of the basis.
pub fn spair_reductions<F: Field>(
    gb: &ModuleGb<F>,
) -> Vec<((usize, usize), Monomial, Reduction<F>)> {
    let base = base_order(&gb.order);
    let entries = gb.entries();
    let mut out = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if entries[i].lt_comp != entries[j].lt_comp {
                continue;
            }
            let lcm = entries[i].lt_mono.lcm(&entries[j].lt_mono);
            let (spair, _) = s_element(&gb.field, &base, &entries, i, j, &lcm, false, 0);
            let red = reduce_full(&gb.field, &gb.order, &base, &entries, spair, None, true, false);
            out.push(((i, j), lcm, red));
        }
    }
    out
}
