//! Monomials and monomial orders.

use smallvec::SmallVec;
use std::cmp::Ordering;

/// Exponent vector; the pipeline uses three variables but any arity works.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 4]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e * k).collect() }
    }
}

/// Graded reverse lexicographic comparison: the canonical term order here.
/// Higher degree wins; ties go to the monomial whose last differing
/// exponent is smaller.
pub fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for (ea, eb) in a.exps.iter().zip(&b.exps).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (ea, eb) in a.exps.iter().zip(&b.exps) {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

/// A term order on monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (default).
    GrevLex,
    /// Pure lexicographic.
    Lex,
    /// Block elimination order: grevlex within each block of the given
    /// sizes, blocks compared left to right.
    Elimination(Vec<usize>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Elimination(blocks) => {
                let mut start = 0;
                for &len in blocks {
                    let end = (start + len).min(a.nvars());
                    let sa = Monomial::from_exps(&a.exps()[start..end]);
                    let sb = Monomial::from_exps(&b.exps()[start..end]);
                    match grevlex(&sa, &sb) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }

    /// Graded orders refine total degree, which Buchberger's normal
    /// selection strategy relies on.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

/// A monomial of a free module: a position together with a monomial.
pub type ModMonomial = (usize, Monomial);

/// Order on module monomials. Within one position every variant restricts
/// to the base order, so per-coordinate term lists stay valid.
#[derive(Clone, Debug)]
pub enum ModuleOrder {
    /// Position over term: lower position wins, base order breaks ties.
    Pot(MonomialOrder),
    /// Term over position, graded by shifted degree: compares
    /// deg(m) + shift first, then base order, then position.
    Top { base: MonomialOrder, shifts: Vec<i64> },
    /// Order induced by leading monomials of a basis (Schreyer):
    /// compares m·lead(i) against m'·lead(j) in the base order,
    /// breaking ties by position.
    Schreyer { base: MonomialOrder, leads: Vec<Monomial> },
}

impl ModuleOrder {
    pub fn cmp(&self, a: &ModMonomial, b: &ModMonomial) -> Ordering {
        match self {
            ModuleOrder::Pot(base) => match b.0.cmp(&a.0) {
                Ordering::Equal => base.cmp(&a.1, &b.1),
                o => o,
            },
            ModuleOrder::Top { base, shifts } => {
                let da = a.1.degree() as i64 + shifts[a.0];
                let db = b.1.degree() as i64 + shifts[b.0];
                match da.cmp(&db) {
                    Ordering::Equal => match base.cmp(&a.1, &b.1) {
                        Ordering::Equal => b.0.cmp(&a.0),
                        o => o,
                    },
                    o => o,
                }
            }
            ModuleOrder::Schreyer { base, leads } => {
                let ma = a.1.mul(&leads[a.0]);
                let mb = b.1.mul(&leads[b.0]);
                match base.cmp(&ma, &mb) {
                    Ordering::Equal => b.0.cmp(&a.0),
                    o => o,
                }
            }
        }
    }
}

/// All monomials of the given total degree, in descending grevlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fn rec(nvars: usize, i: usize, rem: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur[i] = rem as u16;
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in (0..=rem).rev() {
            cur[i] = e as u16;
            rec(nvars, i + 1, rem - e, cur, out);
        }
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::from_exps(&[]));
        }
        return out;
    }
    rec(nvars, 0, d, &mut cur, &mut out);
    out.sort_by(|a, b| grevlex(b, a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn grevlex_standard_examples() {
        // x > y > z in degree one
        assert_eq!(grevlex(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(grevlex(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(grevlex(&m(&[2, 0, 0]), &m(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(grevlex(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        // classic grevlex vs lex split: x^2 z vs x y^2
        // grevlex: deg equal, last exponent 1 vs 0 -> x y^2 is larger
        assert_eq!(grevlex(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
        // lex would say the opposite
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[2, 0, 1]), &m(&[1, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient(&b), m(&[1, 0, 1]));
        assert_eq!(a.lcm(&m(&[0, 1, 3])), m(&[1, 2, 3]));
        assert!(m(&[2, 0, 0]).is_coprime(&m(&[0, 3, 1])));
        assert!(!m(&[1, 1, 0]).is_coprime(&m(&[0, 1, 0])));
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(3, 5).len(), 21);
        let ms = monomials_of_degree(3, 2);
        for w in ms.windows(2) {
            assert_eq!(grevlex(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn elimination_order_blocks() {
        let ord = MonomialOrder::Elimination(vec![1, 2]);
        // any power of x beats anything in the (y, z) block
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn module_orders() {
        let pot = ModuleOrder::Pot(MonomialOrder::GrevLex);
        assert_eq!(pot.cmp(&(0, m(&[0, 0, 1])), &(1, m(&[5, 0, 0]))), Ordering::Greater);
        let top = ModuleOrder::Top { base: MonomialOrder::GrevLex, shifts: vec![0, 2] };
        // degree 1 + shift 2 beats degree 2 + shift 0
        assert_eq!(top.cmp(&(1, m(&[1, 0, 0])), &(0, m(&[2, 0, 0]))), Ordering::Greater);
    }
}
