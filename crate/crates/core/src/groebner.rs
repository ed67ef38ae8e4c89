//! Buchberger's algorithm and the ideal-theoretic queries built on it.
//!
//! Polynomials are converted to term vectors kept in ascending order under
//! the active monomial order, so the leading term is always `last()`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::finalg::FiniteAlgebra;
use crate::multipoly::{Monomial, MonomialOrder, MultiPoly, PolyRing};

pub const DEFAULT_PAIR_BUDGET: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerOptions {
    pub order: MonomialOrder,
    /// Maximum number of S-pairs reduced before giving up.
    pub pair_budget: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            order: MonomialOrder::GrevLex,
            pair_budget: DEFAULT_PAIR_BUDGET,
        }
    }
}

impl GroebnerOptions {
    pub fn with_order(order: MonomialOrder) -> Self {
        GroebnerOptions {
            order,
            ..Self::default()
        }
    }
}

type Terms = Vec<(Monomial, Scalar)>;

struct Engine {
    order: MonomialOrder,
}

impl Engine {
    fn to_terms(&self, p: &MultiPoly) -> Terms {
        let mut t = p.sorted_terms(self.order);
        t.reverse();
        t
    }

    /// `f - c * m * g`, both ascending.
    fn sub_mul(&self, f: &[(Monomial, Scalar)], c: &Scalar, m: &Monomial, g: &[(Monomial, Scalar)]) -> Terms {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), -&(c * gc))).peekable();
        let mut fi = f.iter().cloned().peekable();
        loop {
            let next = match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => fi.next(),
                (None, Some(_)) => gi.next(),
                (Some(a), Some(b)) => match self.order.cmp(&a.0, &b.0) {
                    std::cmp::Ordering::Less => fi.next(),
                    std::cmp::Ordering::Greater => gi.next(),
                    std::cmp::Ordering::Equal => {
                        let (m, a) = fi.next().expect("peeked");
                        let (_, b) = gi.next().expect("peeked");
                        let s = &a + &b;
                        if s.is_zero() {
                            continue;
                        }
                        Some((m, s))
                    }
                },
            };
            out.extend(next);
        }
        out
    }

    fn scale(&self, f: &[(Monomial, Scalar)], c: &Scalar) -> Terms {
        f.iter().map(|(m, a)| (m.clone(), a * c)).collect()
    }

    /// Full reduction of `p` by `basis`. When tracking, `cof` holds the
    /// representation of `p` in the original generators and is updated in step.
    fn reduce(&self, mut p: Terms, basis: &[Elem], mut cof: Option<&mut Vec<Terms>>, skip: Option<usize>) -> Terms {
        let mut rem: Terms = Vec::new();
        while let Some((lm, lc)) = p.last().cloned() {
            let divisor = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| Some(*i) != skip)
                .find(|(_, g)| g.lm().divides(&lm));
            match divisor {
                Some((_, g)) => {
                    let q = lm.div(g.lm()).expect("divisible");
                    // basis elements are monic
                    p = self.sub_mul(&p, &lc, &q, &g.terms);
                    if let (Some(cof), Some(gcof)) = (cof.as_deref_mut(), g.cof.as_ref()) {
                        for (ck, gk) in cof.iter_mut().zip(gcof) {
                            *ck = self.sub_mul(ck, &lc, &q, gk);
                        }
                    }
                }
                None => {
                    rem.push(p.pop().expect("nonempty"));
                }
            }
        }
        rem.reverse();
        rem
    }
}

#[derive(Clone)]
struct Elem {
    terms: Terms,
    cof: Option<Vec<Terms>>,
}

impl Elem {
    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("basis elements are nonzero").0
    }

    fn make_monic(&mut self, engine: &Engine) {
        let lc = self.terms.last().expect("nonzero").1.clone();
        if lc.is_one() {
            return;
        }
        let inv = lc.inv().expect("nonzero leading coefficient");
        self.terms = engine.scale(&self.terms, &inv);
        if let Some(cof) = self.cof.as_mut() {
            for c in cof.iter_mut() {
                *c = engine.scale(c, &inv);
            }
        }
    }
}

enum Outcome {
    Unit(Elem),
    Basis(Vec<Elem>),
}

fn run_buchberger(ring: &Arc<PolyRing>, gens: &[MultiPoly], opts: GroebnerOptions, track: bool) -> Result<Outcome> {
    if gens.iter().any(|g| !Arc::ptr_eq(g.ring(), ring) && g.ring().as_ref() != ring.as_ref()) {
        return Err(Error::RingMismatch);
    }
    let engine = Engine { order: opts.order };
    let ngens = gens.len();
    let mut elems: Vec<Elem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let cof = track.then(|| {
            (0..ngens)
                .map(|k| if k == i { vec![(Monomial::one(ring.nvars()), ring.field().one())] } else { Vec::new() })
                .collect()
        });
        let mut e = Elem {
            terms: engine.to_terms(g),
            cof,
        };
        e.make_monic(&engine);
        if e.lm().is_one() {
            return Ok(Outcome::Unit(e));
        }
        elems.push(e);
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..elems.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let mut reduced_pairs = 0usize;
    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first, ties by index
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = elems[a.0].lm().lcm(elems[a.1].lm());
                let lb = elems[b.0].lm().lcm(elems[b.1].lm());
                opts.order.cmp(&la, &lb).then(a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (lmi, lmj) = (elems[i].lm().clone(), elems[j].lm().clone());
        if lmi.is_coprime(&lmj) {
            continue;
        }
        let lcm = lmi.lcm(&lmj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..elems.len()).any(|k| {
            k != i
                && k != j
                && elems[k].lm().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        reduced_pairs += 1;
        if reduced_pairs > opts.pair_budget {
            return Err(Error::BudgetExceeded(opts.pair_budget));
        }
        let qi = lcm.div(&lmi).expect("lcm");
        let qj = lcm.div(&lmj).expect("lcm");
        let one = ring.field().one();
        let s = engine.sub_mul(&engine.sub_mul(&[], &-&one, &qi, &elems[i].terms), &one, &qj, &elems[j].terms);
        let mut cof = track.then(|| {
            let (ci, cj) = (elems[i].cof.as_ref().expect("tracked"), elems[j].cof.as_ref().expect("tracked"));
            ci.iter()
                .zip(cj)
                .map(|(a, b)| engine.sub_mul(&engine.sub_mul(&[], &-&one, &qi, a), &one, &qj, b))
                .collect::<Vec<_>>()
        });
        let r = engine.reduce(s, &elems, cof.as_mut(), None);
        if r.is_empty() {
            continue;
        }
        let mut e = Elem { terms: r, cof };
        e.make_monic(&engine);
        if e.lm().is_one() {
            return Ok(Outcome::Unit(e));
        }
        let new = elems.len();
        elems.push(e);
        for k in 0..new {
            pending.insert((k, new));
        }
    }
    Ok(Outcome::Basis(elems))
}

/// A reduced Gröbner basis together with the generators it was computed from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    options: GroebnerOptions,
    generators: Vec<MultiPoly>,
    original: Vec<MultiPoly>,
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by `gens` in `ring`.
    pub fn compute(ring: &Arc<PolyRing>, gens: &[MultiPoly], options: GroebnerOptions) -> Result<Self> {
        let engine = Engine { order: options.order };
        let elems = match run_buchberger(ring, gens, options, false)? {
            Outcome::Unit(_) => vec![Elem {
                terms: vec![(Monomial::one(ring.nvars()), ring.field().one())],
                cof: None,
            }],
            Outcome::Basis(elems) => {
                // minimal basis: drop elements whose leading monomial is a multiple of another's
                let keep: Vec<usize> = (0..elems.len())
                    .filter(|&i| {
                        !(0..elems.len()).any(|j| {
                            j != i
                                && elems[j].lm().divides(elems[i].lm())
                                && (elems[j].lm() != elems[i].lm() || j < i)
                        })
                    })
                    .collect();
                let minimal: Vec<Elem> = keep.iter().map(|&i| elems[i].clone()).collect();
                (0..minimal.len())
                    .map(|i| {
                        let mut terms = minimal[i].terms.clone();
                        let lt = terms.pop().expect("nonzero");
                        let mut tail = engine.reduce(terms, &minimal, None, Some(i));
                        tail.push(lt);
                        Elem { terms: tail, cof: None }
                    })
                    .collect()
            }
        };
        let mut generators: Vec<MultiPoly> = elems
            .into_iter()
            .map(|e| MultiPoly::from_terms(ring, e.terms))
            .collect();
        generators.sort_by(|a, b| {
            let la = a.leading_term(options.order).expect("nonzero").0;
            let lb = b.leading_term(options.order).expect("nonzero").0;
            options.order.cmp(lb, la)
        });
        Ok(GroebnerBasis {
            ring: ring.clone(),
            options,
            generators,
            original: gens.to_vec(),
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn options(&self) -> GroebnerOptions {
        self.options
    }

    pub fn order(&self) -> MonomialOrder {
        self.options.order
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn original(&self) -> &[MultiPoly] {
        &self.original
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_term(self.options.order).expect("nonzero").0.clone())
            .collect()
    }

    fn check_ring(&self, f: &MultiPoly) -> Result<()> {
        if Arc::ptr_eq(f.ring(), &self.ring) || f.ring().as_ref() == self.ring.as_ref() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn elems(&self, engine: &Engine) -> Vec<Elem> {
        self.generators
            .iter()
            .map(|g| Elem {
                terms: engine.to_terms(g),
                cof: None,
            })
            .collect()
    }

    /// Remainder of `f` modulo the basis; supported on standard monomials.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(f)?;
        let engine = Engine { order: self.options.order };
        let elems = self.elems(&engine);
        let r = engine.reduce(engine.to_terms(f), &elems, None, None);
        Ok(MultiPoly::from_terms(&self.ring, r))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The quotient ring is zero.
    pub fn contains_one(&self) -> bool {
        self.generators.len() == 1
            && self.generators[0]
                .constant_value()
                .is_some_and(|c| !c.is_zero())
    }

    /// Whether `g` is a unit modulo the ideal, i.e. `1` lies in `I + <g>`.
    pub fn is_invertible_mod(&self, g: &MultiPoly) -> Result<bool> {
        self.check_ring(g)?;
        let mut gens = self.generators.clone();
        gens.push(g.clone());
        Ok(GroebnerBasis::compute(&self.ring, &gens, self.options)?.contains_one())
    }

    /// Largest set of variables containing the support of no leading monomial.
    pub fn noether_dimension(&self) -> Result<usize> {
        if self.contains_one() {
            return Err(Error::TrivialIdeal);
        }
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        let masks: Vec<u64> = lms
            .iter()
            .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
            .collect();
        let best = (0u64..(1u64 << n))
            .filter(|s| masks.iter().all(|&lm| lm & !s != 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0);
        Ok(best)
    }

    pub fn is_zero_dimensional(&self) -> bool {
        matches!(self.noether_dimension(), Ok(0))
    }

    /// Monomials outside the leading-term ideal, ascending in the basis order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        let bounds: Vec<u32> = (0..n)
            .map(|i| {
                lms.iter()
                    .filter(|m| m.support().all(|j| j == i))
                    .map(|m| m.exps()[i])
                    .min()
                    .expect("zero-dimensional ideals have a pure power for every variable")
            })
            .collect();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            if !lms.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            // odometer over the bounding box
            let mut i = 0;
            while i < n {
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        let order = self.options.order;
        out.sort_by(|a, b| order.cmp(a, b));
        Ok(out)
    }

    /// Coordinates of `f mod I` on the standard-monomial basis `basis`.
    pub fn coordinates(&self, f: &MultiPoly, basis: &[Monomial]) -> Result<Vec<Scalar>> {
        let nf = self.normal_form(f)?;
        let mut v = vec![self.ring.field().zero(); basis.len()];
        for (mono, c) in nf.terms() {
            let i = basis
                .iter()
                .position(|b| b == mono)
                .ok_or(Error::NotZeroDimensional)?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// The strictly finite algebra `K[X]/I` on the standard-monomial basis,
    /// with each variable's image recorded as a named generator.
    pub fn quotient_algebra(&self) -> Result<FiniteAlgebra> {
        let basis = self.standard_monomials()?;
        let field = self.ring.field();
        let m = basis.len();
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let coords = |p: &MultiPoly| -> Vec<Scalar> {
            let mut v = vec![field.zero(); m];
            for (mono, c) in p.terms() {
                v[index[mono]] = c.clone();
            }
            v
        };
        let n = self.ring.nvars();
        // mult[k][j]: coordinates of x_k * b_j, a normal form only on the border
        let mut mult = vec![Vec::with_capacity(m); n];
        for (k, row) in mult.iter_mut().enumerate() {
            for b in &basis {
                let prod = b.mul(&Monomial::var(n, k));
                let v = match index.get(&prod) {
                    Some(&i) => {
                        let mut v = vec![field.zero(); m];
                        v[i] = field.one();
                        v
                    }
                    None => coords(&self.normal_form(&MultiPoly::term(&self.ring, field.one(), prod))?),
                };
                row.push(v);
            }
        }
        // standard monomials form an order ideal, so b_i = x_k * b_{i'} with i' < i
        let mut table: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); m];
        for i in 0..m {
            let Some(k) = basis[i].support().next() else {
                table[i] = (0..m)
                    .map(|j| {
                        let mut v = vec![field.zero(); m];
                        v[j] = field.one();
                        v
                    })
                    .collect();
                continue;
            };
            let prev = index[&basis[i].div(&Monomial::var(n, k)).expect("k in support")];
            table[i] = (0..m)
                .map(|j| {
                    let mut out = vec![field.zero(); m];
                    for (l, c) in table[prev][j].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (o, x) in out.iter_mut().zip(&mult[k][l]) {
                            if !x.is_zero() {
                                *o = &*o + &(c * x);
                            }
                        }
                    }
                    out
                })
                .collect();
        }
        let unit = coords(&self.normal_form(&MultiPoly::one(&self.ring))?);
        let labels = basis.iter().map(|b| b.display_with(self.ring.vars())).collect();
        let generators = (0..self.ring.nvars())
            .map(|i| {
                let nf = self.normal_form(&MultiPoly::var(&self.ring, i))?;
                Ok((self.ring.vars()[i].clone(), coords(&nf)))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteAlgebra::new(field, labels, table, unit, generators)
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let engine = Engine { order: self.options.order };
        let elems = self.elems(&engine);
        let one = self.ring.field().one();
        for j in 0..elems.len() {
            for i in 0..j {
                let lcm = elems[i].lm().lcm(elems[j].lm());
                let qi = lcm.div(elems[i].lm()).expect("lcm");
                let qj = lcm.div(elems[j].lm()).expect("lcm");
                let s = engine.sub_mul(&engine.sub_mul(&[], &-&one, &qi, &elems[i].terms), &one, &qj, &elems[j].terms);
                if !engine.reduce(s, &elems, None, None).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_auto_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.generators.iter().enumerate().all(|(i, g)| {
            g.leading_term(self.options.order).is_some_and(|(_, c)| c.is_one())
                && g.terms().all(|(m, _)| lms.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }
}

/// Cofactors `c_i` with `sum c_i * gens_i = 1`, when `1` is in the ideal.
pub fn unit_certificate(ring: &Arc<PolyRing>, gens: &[MultiPoly], options: GroebnerOptions) -> Result<Option<Vec<MultiPoly>>> {
    match run_buchberger(ring, gens, options, true)? {
        Outcome::Basis(_) => Ok(None),
        Outcome::Unit(e) => {
            let c = e.terms.last().expect("nonzero").1.inv()?;
            let cof = e.cof.expect("tracked");
            Ok(Some(
                cof.into_iter()
                    .map(|t| MultiPoly::from_terms(ring, t).scale(&c))
                    .collect(),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring2(field: Field) -> (Arc<PolyRing>, MultiPoly, MultiPoly) {
        let r = PolyRing::new(field, vec!["X".into(), "Y".into()]);
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        (r, x, y)
    }

    fn c(r: &Arc<PolyRing>, v: i64) -> MultiPoly {
        MultiPoly::from_i64(r, v)
    }

    fn gb(r: &Arc<PolyRing>, gens: &[MultiPoly]) -> GroebnerBasis {
        GroebnerBasis::compute(r, gens, GroebnerOptions::default()).unwrap()
    }

    #[test]
    fn buchberger_examples() {
        let (r, x, y) = ring2(Field::rationals());
        let f1 = &(&x * &x) - &c(&r, 2);
        let f2 = &(&y * &y) - &c(&r, 3);
        let g = gb(&r, &[f1.clone(), f2.clone()]);
        assert_eq!(g.generators(), &[f1, f2]);
        let h = &(&x * &y) - &c(&r, 1);
        assert_eq!(gb(&r, std::slice::from_ref(&h)).generators(), &[h]);
        let g = gb(&r, &[x.clone(), &x + &c(&r, 1)]);
        assert_eq!(g.generators(), &[c(&r, 1)]);
        assert!(g.contains_one());
    }

    #[test]
    fn circle_cross_basis() {
        let (r, x, y) = ring2(Field::rationals());
        let g = gb(&r, &[&(&(&x * &x) + &(&y * &y)) - &c(&r, 1), &x * &y]);
        let y3 = &(&(&y * &y) * &y) - &y;
        assert!(g.generators().contains(&y3));
        assert!(g.satisfies_buchberger_criterion());
        assert!(g.is_auto_reduced());
        let sm = g.standard_monomials().unwrap();
        let labels: Vec<String> = sm.iter().map(|m| m.display_with(r.vars())).collect();
        assert_eq!(labels, vec!["1", "Y", "X", "Y^2"]);
    }

    #[test]
    fn normal_form_examples() {
        let (r, x, y) = ring2(Field::rationals());
        let g = gb(&r, &[&(&x * &x) - &c(&r, 2), &(&y * &y) - &c(&r, 3)]);
        assert_eq!(g.normal_form(&(&x * &x)).unwrap(), c(&r, 2));
        assert_eq!(g.normal_form(&(&(&x * &y) * &x)).unwrap(), &c(&r, 2) * &y);
        let unit = gb(&r, &[c(&r, 1)]);
        assert!(unit.normal_form(&c(&r, 1)).unwrap().is_zero());
        let other = PolyRing::new(Field::rationals(), vec!["Z".into()]);
        assert_eq!(
            g.normal_form(&MultiPoly::var(&other, 0)),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn contains_one_examples() {
        let (r, x, _) = ring2(Field::rationals());
        assert!(gb(&r, &[x.clone(), &x + &c(&r, 1)]).contains_one());
        assert!(!gb(&r, &[&(&x * &x) - &c(&r, 2)]).contains_one());
        assert!(!gb(&r, &[]).contains_one());
    }

    #[test]
    fn invertibility_examples() {
        let q = Field::rationals();
        let r1 = PolyRing::new(q, vec!["X".into()]);
        let x = MultiPoly::var(&r1, 0);
        let i = gb(&r1, &[&(&x * &x) - &c(&r1, 1)]);
        assert!(i.is_invertible_mod(&(&c(&r1, 2) * &x)).unwrap());
        let j = gb(&r1, &[&x * &x]);
        assert!(!j.is_invertible_mod(&x).unwrap());
        let (r, x, y) = ring2(q);
        let k = gb(&r, &[&(&(&x * &x) + &(&y * &y)) - &c(&r, 1), &x * &y]);
        let det = &(&c(&r, 2) * &(&x * &x)) - &(&c(&r, 2) * &(&y * &y));
        assert!(k.is_invertible_mod(&det).unwrap());
        // hand check: det^2 = 4 in the quotient
        assert_eq!(k.normal_form(&(&det * &det)).unwrap(), c(&r, 4));
    }

    #[test]
    fn noether_dimension_examples() {
        let q = Field::rationals();
        let (r, x, y) = ring2(q);
        assert_eq!(gb(&r, &[&(&x * &y) - &c(&r, 1)]).noether_dimension().unwrap(), 1);
        assert_eq!(
            gb(&r, &[&(&x * &x) - &c(&r, 2), &(&y * &y) - &c(&r, 3)])
                .noether_dimension()
                .unwrap(),
            0
        );
        let r1 = PolyRing::new(q, vec!["X".into()]);
        assert_eq!(gb(&r1, &[]).noether_dimension().unwrap(), 1);
        assert_eq!(gb(&r, &[c(&r, 1)]).noether_dimension(), Err(Error::TrivialIdeal));
    }

    #[test]
    fn standard_monomial_examples() {
        let q = Field::rationals();
        let (r, x, y) = ring2(q);
        let g = gb(&r, &[&(&x * &x) - &c(&r, 2), &(&y * &y) - &c(&r, 3)]);
        let sm: Vec<String> = g
            .standard_monomials()
            .unwrap()
            .iter()
            .map(|m| m.display_with(r.vars()))
            .collect();
        assert_eq!(sm, vec!["1", "Y", "X", "X*Y"]);
        let r1 = PolyRing::new(q, vec!["X".into()]);
        let g1 = gb(&r1, &[MultiPoly::var(&r1, 0)]);
        assert_eq!(g1.standard_monomials().unwrap(), vec![Monomial::one(1)]);
        assert_eq!(
            gb(&r, &[&x * &y]).standard_monomials(),
            Err(Error::NotZeroDimensional)
        );
    }

    #[test]
    fn quotient_algebra_examples() {
        let q = Field::rationals();
        let r1 = PolyRing::new(q, vec!["X".into()]);
        let x = MultiPoly::var(&r1, 0);
        let a = gb(&r1, &[&(&x * &x) - &c(&r1, 2)]).quotient_algebra().unwrap();
        assert_eq!(a.dimension(), 2);
        let xv = a.generator("X").unwrap();
        assert_eq!(a.mul(&xv, &xv).unwrap(), a.scalar(&q.from_i64(2)));

        let (r, x, y) = ring2(q);
        let b = gb(&r, &[&(&x * &x) - &c(&r, 2), &(&y * &y) - &c(&r, 3)])
            .quotient_algebra()
            .unwrap();
        assert_eq!(b.dimension(), 4);
        let xy = b.mul(&b.generator("X").unwrap(), &b.generator("Y").unwrap()).unwrap();
        assert_eq!(b.mul(&xy, &xy).unwrap(), b.scalar(&q.from_i64(6)));

        let f2 = Field::prime(2).unwrap();
        let r2 = PolyRing::new(f2, vec!["X".into()]);
        let x2 = MultiPoly::var(&r2, 0);
        let field4 = gb(&r2, &[&(&(&x2 * &x2) + &x2) + &MultiPoly::one(&r2)])
            .quotient_algebra()
            .unwrap();
        let xv = field4.generator("X").unwrap();
        assert_eq!(
            field4.mul(&xv, &xv).unwrap(),
            field4.add(&xv, &field4.one())
        );
    }

    #[test]
    fn structure_constants_match_direct_normal_forms() {
        let (r, x, y) = ring2(Field::rationals());
        let systems = vec![
            vec![&(&(&x * &x) + &(&y * &y)) - &c(&r, 1), &x * &y],
            vec![&(&(&x * &x) * &x) - &(&y * &c(&r, 2)), &(&(&y * &y) * &y) - &(&x * &y), &(&x * &y) * &y],
            vec![&(&y * &y) - &(&x * &c(&r, 3)), &(&(&x * &x) * &x) - &c(&r, 5)],
        ];
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            for gens in &systems {
                let g = GroebnerBasis::compute(&r, gens, GroebnerOptions::with_order(order)).unwrap();
                let basis = g.standard_monomials().unwrap();
                let a = g.quotient_algebra().unwrap();
                for (i, bi) in basis.iter().enumerate() {
                    for (j, bj) in basis.iter().enumerate() {
                        let direct = g
                            .coordinates(&MultiPoly::term(&r, Field::rationals().one(), bi.mul(bj)), &basis)
                            .unwrap();
                        assert_eq!(a.structure_constants()[i][j], direct, "{order}: {i}, {j}");
                    }
                }
                a.check_associative().unwrap();
            }
        }
    }

    #[test]
    fn lex_and_grevlex_agree_on_dimension() {
        let q = Field::rationals();
        let (r, x, y) = ring2(q);
        let systems = vec![
            vec![&(&x * &y) - &c(&r, 1)],
            vec![&(&(&x * &x) + &(&y * &y)) - &c(&r, 1), &x * &y],
            vec![&(&x * &x) * &y, &(&y * &y) - &x],
        ];
        for gens in systems {
            let a = GroebnerBasis::compute(&r, &gens, GroebnerOptions::with_order(MonomialOrder::GrevLex)).unwrap();
            let b = GroebnerBasis::compute(&r, &gens, GroebnerOptions::with_order(MonomialOrder::Lex)).unwrap();
            assert_eq!(a.noether_dimension().unwrap(), b.noether_dimension().unwrap());
            assert!(b.satisfies_buchberger_criterion());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let q = Field::rationals();
        let r = PolyRing::new(q, vec!["X".into(), "Y".into(), "Z".into()]);
        let (x, y, z) = (MultiPoly::var(&r, 0), MultiPoly::var(&r, 1), MultiPoly::var(&r, 2));
        let gens = vec![
            &(&(&x * &x) * &y) - &z,
            &(&(&y * &y) * &z) - &x,
            &(&(&z * &z) * &x) - &y,
        ];
        let opts = GroebnerOptions {
            order: MonomialOrder::GrevLex,
            pair_budget: 1,
        };
        assert_eq!(
            GroebnerBasis::compute(&r, &gens, opts).map(|_| ()),
            Err(Error::BudgetExceeded(1))
        );
    }

    #[test]
    fn unit_certificate_recombines() {
        let q = Field::rationals();
        let (r, x, y) = ring2(q);
        let gens = vec![&(&x * &y) - &c(&r, 1), x.clone(), y.clone()];
        let cof = unit_certificate(&r, &gens, GroebnerOptions::default()).unwrap().unwrap();
        let sum = cof
            .iter()
            .zip(&gens)
            .fold(MultiPoly::zero(&r), |acc, (a, b)| &acc + &(a * b));
        assert_eq!(sum, c(&r, 1));
        assert!(unit_certificate(&r, &[&x * &y], GroebnerOptions::default()).unwrap().is_none());
    }
}
