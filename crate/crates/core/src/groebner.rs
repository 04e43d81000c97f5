//! Buchberger's algorithm with the Gebauer–Möller criteria and sugar pair
//! selection, working fraction-free over ℤ internally.

use alloc::vec::Vec;
use core::cell::{Cell, RefCell};
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::rational::{common_denominator, Rational};
use crate::ring::Ring;

pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

/// Shared context of one computation: the reduction-step budget and an
/// optional journal of every basis produced.
#[derive(Debug)]
pub struct Engine {
    limit: u64,
    used: Cell<u64>,
    journal: Option<RefCell<Vec<GroebnerBasis>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(DEFAULT_STEP_BUDGET)
    }
}

impl Engine {
    pub fn new(limit: u64) -> Self {
        Engine {
            limit,
            used: Cell::new(0),
            journal: None,
        }
    }

    pub fn with_journal(limit: u64) -> Self {
        Engine {
            journal: Some(RefCell::new(Vec::new())),
            ..Engine::new(limit)
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn steps_used(&self) -> u64 {
        self.used.get()
    }

    fn charge(&self, n: u64) -> Result<()> {
        let u = self.used.get() + n;
        self.used.set(u);
        if u > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    /// Bases recorded so far (empty without a journal).
    pub fn journal(&self) -> Vec<GroebnerBasis> {
        self.journal
            .as_ref()
            .map(|j| j.borrow().clone())
            .unwrap_or_default()
    }

    pub fn journal_len(&self) -> usize {
        self.journal.as_ref().map(|j| j.borrow().len()).unwrap_or(0)
    }

    fn record(&self, gb: &GroebnerBasis) {
        if let Some(j) = &self.journal {
            j.borrow_mut().push(gb.clone());
        }
    }
}

/// Generators of an ideal of a polynomial ring over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; all generators must share `ring`.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: alloc::vec![Polynomial::one(ring)],
        }
    }

    pub fn principal(f: &Polynomial) -> Self {
        Ideal {
            ring: f.ring().clone(),
            gens: if f.is_zero() { Vec::new() } else { alloc::vec![f.clone()] },
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn with(&self, more: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(more.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.with(&other.gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }
}

/// Reduced, monic Gröbner basis; elements are sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_unit(&self) -> bool {
        self.leads.len() == 1 && self.leads[0].is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: self.basis.clone(),
        }
    }

    /// Remainder of `f` modulo the basis, exact over ℚ.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(f.clone());
        }
        let (ip, den) = IPoly::from_polynomial(f, self.order);
        let reducers: Vec<IPoly> = self
            .basis
            .iter()
            .map(|g| IPoly::from_polynomial(g, self.order).0)
            .collect();
        let refs: Vec<&IPoly> = reducers.iter().collect();
        let (rem, mult) = reduce(ip.terms, &refs, self.order, true, None)?;
        let scale = Rational::new(BigInt::one(), den) / mult;
        Ok(to_polynomial(&self.ring, rem, &scale))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks directly that every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        let ips: Vec<IPoly> = self
            .basis
            .iter()
            .map(|g| IPoly::from_polynomial(g, self.order).0)
            .collect();
        let refs: Vec<&IPoly> = ips.iter().collect();
        for i in 0..ips.len() {
            for j in i + 1..ips.len() {
                let s = spoly(&ips[i], &ips[j], self.order);
                match reduce(s.terms, &refs, self.order, false, None) {
                    Ok((r, _)) if r.is_empty() => {}
                    _ => return false,
                }
            }
        }
        true
    }
}

type ITerm = (Monomial, BigInt);

#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<ITerm>,
    sugar: u32,
}

impl IPoly {
    /// Primitive integer multiple `den * f`, terms sorted by `order`.
    fn from_polynomial(f: &Polynomial, order: MonomialOrder) -> (IPoly, BigInt) {
        let den = common_denominator(f.terms().iter().map(|(_, c)| c));
        let mut terms: Vec<ITerm> = f
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), (c * Rational::from_integer(den.clone())).to_integer()))
            .collect();
        if order != MonomialOrder::Grevlex {
            terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        }
        let sugar = f.degree().unwrap_or(0);
        (IPoly { terms, sugar }, den)
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }
}

fn to_polynomial(ring: &Ring, terms: Vec<ITerm>, scale: &Rational) -> Polynomial {
    Polynomial::from_terms(
        ring,
        terms
            .into_iter()
            .map(|(m, c)| (m, Rational::from_integer(c) * scale))
            .collect(),
    )
}

fn content(terms: &[ITerm]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(terms: &mut [ITerm]) {
    if terms.is_empty() {
        return;
    }
    let mut g = content(terms);
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c /= &g;
        }
    }
}

/// `a * p - b * m * g` where both operands are sorted by `order`.
fn sub_mul(
    p: &[ITerm],
    a: &BigInt,
    b: &BigInt,
    m: &Monomial,
    g: &[ITerm],
    order: MonomialOrder,
) -> Vec<ITerm> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let a_one = a.is_one();
    let (mut i, mut j) = (0, 0);
    let mut gm: Option<Monomial> = g.first().map(|t| t.0.mul(m));
    while i < p.len() {
        let Some(gmon) = gm.as_ref() else { break };
        match order.compare(&p[i].0, gmon) {
            Ordering::Greater => {
                let c = if a_one { p[i].1.clone() } else { a * &p[i].1 };
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                out.push((gmon.clone(), -(b * &g[j].1)));
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let c = if a_one { p[i].1.clone() } else { a * &p[i].1 } - b * &g[j].1;
                if !c.is_zero() {
                    out.push((p[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    for t in &p[i..] {
        let c = if a_one { t.1.clone() } else { a * &t.1 };
        out.push((t.0.clone(), c));
    }
    while let Some(gmon) = gm {
        out.push((gmon, -(b * &g[j].1)));
        j += 1;
        gm = g.get(j).map(|t| t.0.mul(m));
    }
    out
}

fn find_reducer<'a>(m: &Monomial, reducers: &[&'a IPoly]) -> Option<&'a IPoly> {
    let mask = m.support_mask();
    reducers.iter().copied().find(|g| {
        let l = g.lead();
        l.support_mask() & !mask == 0 && l.divides(m)
    })
}

/// Full reduction of `p`. Returns the remainder `r` and (when `track`) a
/// rational `c` with `c * p ≡ r` modulo the reducers.
fn reduce(
    mut p: Vec<ITerm>,
    reducers: &[&IPoly],
    order: MonomialOrder,
    track: bool,
    engine: Option<&Engine>,
) -> Result<(Vec<ITerm>, Rational)> {
    let mut rem: Vec<ITerm> = Vec::new();
    let mut mult = Rational::one();
    let mut steps = 0u32;
    while !p.is_empty() {
        let lead = p[0].0.clone();
        match find_reducer(&lead, reducers) {
            None => {
                let t = p.remove(0);
                rem.push(t);
            }
            Some(g) => {
                if let Some(e) = engine {
                    e.charge(1)?;
                }
                let lc_g = &g.terms[0].1;
                let lc_p = &p[0].1;
                let d = lc_g.gcd(lc_p);
                let mut a = lc_g / &d;
                let mut b = lc_p / &d;
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                let q = g.lead().quotient_of(&lead);
                p = sub_mul(&p, &a, &b, &q, &g.terms, order);
                if !a.is_one() {
                    for (_, c) in rem.iter_mut() {
                        *c *= &a;
                    }
                    if track {
                        mult *= Rational::from_integer(a);
                    }
                }
                steps += 1;
                if steps.is_multiple_of(8) {
                    let mut c = content(&p);
                    if !c.is_one() {
                        for (_, x) in &rem {
                            c = c.gcd(x);
                            if c.is_one() {
                                break;
                            }
                        }
                    }
                    if !c.is_one() && !c.is_zero() {
                        for (_, x) in p.iter_mut().chain(rem.iter_mut()) {
                            *x /= &c;
                        }
                        if track {
                            mult /= Rational::from_integer(c);
                        }
                    }
                }
            }
        }
    }
    Ok((rem, mult))
}

fn spoly(f: &IPoly, g: &IPoly, order: MonomialOrder) -> IPoly {
    let lf = f.lead();
    let lg = g.lead();
    let l = lf.lcm(lg);
    let mf = lf.quotient_of(&l);
    let mg = lg.quotient_of(&l);
    let cf = &f.terms[0].1;
    let cg = &g.terms[0].1;
    let d = cf.gcd(cg);
    let a = cg / &d;
    let b = cf / &d;
    // a * mf * f - b * mg * g; the leading terms cancel
    let fm: Vec<ITerm> = f.terms.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    let mut s = sub_mul(&fm, &a, &b, &mg, &g.terms, order);
    if s.first().map(|t| t.0 == l).unwrap_or(false) {
        s.remove(0);
    }
    let sugar = (f.sugar + mf.degree()).max(g.sugar + mg.degree());
    IPoly { terms: s, sugar }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Buchberger<'e> {
    order: MonomialOrder,
    polys: Vec<IPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    engine: &'e Engine,
}

impl Buchberger<'_> {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (&self.polys[i], &self.polys[j]);
        let lcm = a.lead().lcm(b.lead());
        let sugar = (a.sugar + lcm.degree() - a.lead().degree())
            .max(b.sugar + lcm.degree() - b.lead().degree());
        Pair { i, j, lcm, sugar }
    }

    /// Gebauer–Möller update after appending polynomial `h`.
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lead().clone();
        let cands: Vec<Pair> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| self.pair(g, h))
            .collect();
        let mut keep: Vec<bool> = alloc::vec![true; cands.len()];
        // chain criterion among new pairs: drop (g,h) if some other lcm properly divides it
        for a in 0..cands.len() {
            let la = &cands[a].lcm;
            let coprime_a = self.polys[cands[a].i].lead().is_coprime(&lh);
            if coprime_a {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let lb = &cands[b].lcm;
                if lb.divides(la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // product criterion: an lcm shared with a coprime pair kills the others
        let coprime_lcms: Vec<Monomial> = cands
            .iter()
            .filter(|p| self.polys[p.i].lead().is_coprime(&lh))
            .map(|p| p.lcm.clone())
            .collect();
        let new_pairs: Vec<Pair> = cands
            .into_iter()
            .zip(keep)
            .filter(|(p, k)| *k && !coprime_lcms.contains(&p.lcm))
            .map(|(p, _)| p)
            .collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && polys[p.i].lead().lcm(&lh) != p.lcm
                && polys[p.j].lead().lcm(&lh) != p.lcm)
        });
        self.pairs.extend(new_pairs);
        for g in 0..h {
            if self.active[g] && lh.divides(self.polys[g].lead()) {
                self.active[g] = false;
            }
        }
    }

    fn insert(&mut self, p: IPoly) {
        self.polys.push(p);
        self.active.push(true);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.sugar.cmp(&b.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => order.compare(&a.lcm, &b.lcm) == Ordering::Less,
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<bool> {
        while let Some(pr) = self.next_pair() {
            let s = spoly(&self.polys[pr.i], &self.polys[pr.j], self.order);
            self.engine.charge(1)?;
            let reducers: Vec<&IPoly> = self
                .polys
                .iter()
                .zip(&self.active)
                .filter(|(_, a)| **a)
                .map(|(p, _)| p)
                .collect();
            let (mut r, _) = reduce(s.terms, &reducers, self.order, false, Some(self.engine))?;
            if r.is_empty() {
                continue;
            }
            make_primitive(&mut r);
            if r[0].0.is_one() {
                return Ok(true);
            }
            self.insert(IPoly {
                terms: r,
                sugar: s.sugar,
            });
        }
        Ok(false)
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn groebner_basis(engine: &Engine, ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let unit = || GroebnerBasis {
        ring: ring.clone(),
        order,
        basis: alloc::vec![Polynomial::one(&ring)],
        leads: alloc::vec![Monomial::one(n)],
    };
    if ideal.gens().iter().any(|g| g.is_constant()) {
        let gb = unit();
        engine.record(&gb);
        return Ok(gb);
    }
    let mut input: Vec<IPoly> = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut p = IPoly::from_polynomial(g, order).0;
            make_primitive(&mut p.terms);
            p
        })
        .collect();
    input.sort_by(|a, b| order.compare(a.lead(), b.lead()));
    input.dedup_by(|a, b| a.terms == b.terms);

    let mut bb = Buchberger {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        engine,
    };
    for p in input {
        // reduce each new generator by what is already there
        let reducers: Vec<&IPoly> = bb
            .polys
            .iter()
            .zip(&bb.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect();
        let sugar = p.sugar;
        let (mut r, _) = reduce(p.terms, &reducers, order, false, Some(engine))?;
        if r.is_empty() {
            continue;
        }
        make_primitive(&mut r);
        if r[0].0.is_one() {
            let gb = unit();
            engine.record(&gb);
            return Ok(gb);
        }
        bb.insert(IPoly { terms: r, sugar });
    }
    if bb.run()? {
        let gb = unit();
        engine.record(&gb);
        return Ok(gb);
    }

    // minimal basis
    let mut minimal: Vec<IPoly> = Vec::new();
    let active: Vec<IPoly> = bb
        .polys
        .into_iter()
        .zip(bb.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    for (k, p) in active.iter().enumerate() {
        let redundant = active.iter().enumerate().any(|(o, q)| {
            o != k && q.lead().divides(p.lead()) && (q.lead() != p.lead() || o < k)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    minimal.sort_by(|a, b| order.compare(a.lead(), b.lead()));

    // inter-reduce tails
    let mut reduced: Vec<IPoly> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&IPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != k)
            .map(|(_, q)| q)
            .collect();
        let head = minimal[k].terms[0].clone();
        let tail = minimal[k].terms[1..].to_vec();
        let (mut r, mult) = reduce(tail, &others, order, true, Some(engine))?;
        // head scaled consistently with the tail
        let scale = mult;
        let mut head_c = Rational::from_integer(head.1) * &scale;
        let den = common_denominator(core::iter::once(&head_c));
        head_c *= Rational::from_integer(den.clone());
        for (_, c) in r.iter_mut() {
            *c *= &den;
        }
        let mut terms = alloc::vec![(head.0, head_c.to_integer())];
        terms.append(&mut r);
        reduced.push(IPoly { terms, sugar: 0 });
    }
    let leads: Vec<Monomial> = reduced.iter().map(|p| p.lead().clone()).collect();
    let basis: Vec<Polynomial> = reduced
        .into_iter()
        .map(|p| {
            let lc = Rational::from_integer(p.terms[0].1.clone()).recip();
            to_polynomial(&ring, p.terms, &lc)
        })
        .collect();
    let gb = GroebnerBasis {
        ring,
        order,
        basis,
        leads,
    };
    engine.record(&gb);
    Ok(gb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use alloc::vec;

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()).unwrap()
    }

    fn polys(r: &Ring, gens: &[&str]) -> Vec<Polynomial> {
        gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = Ring::new(&["x", "y"]);
        let gb = groebner_basis(&Engine::default(), &ideal(&r, &["x"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.basis(), polys(&r, &["x"]).as_slice());
    }

    #[test]
    fn lex_basis_already_reduced() {
        let r = Ring::new(&["x", "y"]);
        let gb = groebner_basis(&Engine::default(), &ideal(&r, &["x - y", "y^2"]), MonomialOrder::Lex)
            .unwrap();
        assert_eq!(gb.basis(), polys(&r, &["y^2", "x - y"]).as_slice());
        assert!(gb.verify());
    }

    #[test]
    fn cusp_gradient_ideal() {
        let r = Ring::new(&["x", "y"]);
        let gb = groebner_basis(&Engine::default(), &ideal(&r, &["3x^2", "2y"]), MonomialOrder::Grevlex)
            .unwrap();
        assert_eq!(gb.basis(), polys(&r, &["y", "x^2"]).as_slice());
    }

    #[test]
    fn normal_forms() {
        let r = Ring::new(&["x", "y"]);
        let e = Engine::default();
        let g = groebner_basis(&e, &ideal(&r, &["x^2"]), MonomialOrder::Grevlex).unwrap();
        assert!(g.normal_form(&parse_polynomial("x^2*y", &r).unwrap()).unwrap().is_zero());
        let g = groebner_basis(&e, &ideal(&r, &["x - y"]), MonomialOrder::Grevlex).unwrap();
        let nf = g.normal_form(&parse_polynomial("x + y", &r).unwrap()).unwrap();
        assert_eq!(nf, parse_polynomial("2y", &r).unwrap());
        assert_eq!(g.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn inconsistent_system_gives_unit() {
        let r = Ring::new(&["x", "y"]);
        let gb = groebner_basis(
            &Engine::default(),
            &ideal(&r, &["x*y - 1", "x", "y^2 + 3"]),
            MonomialOrder::Grevlex,
        )
        .unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn cyclic3_reduced_basis() {
        let r = Ring::new(&["x", "y", "z"]);
        let i = ideal(&r, &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]);
        let e = Engine::with_journal(DEFAULT_STEP_BUDGET);
        let gb = groebner_basis(&e, &i, MonomialOrder::Lex).unwrap();
        assert_eq!(
            gb.basis(),
            polys(&r, &["z^3 - 1", "y^2 + y*z + z^2", "x + y + z"]).as_slice()
        );
        assert!(gb.verify());
        assert_eq!(e.journal_len(), 1);
        for g in i.gens() {
            assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let r = Ring::new(&["x", "y", "z", "w"]);
        let i = ideal(
            &r,
            &["x + y + z + w", "x*y + y*z + z*w + w*x", "x*y*z + y*z*w + z*w*x + w*x*y", "x*y*z*w - 1"],
        );
        let e = Engine::new(5);
        assert_eq!(
            groebner_basis(&e, &i, MonomialOrder::Grevlex),
            Err(Error::BudgetExceeded { limit: 5 })
        );
    }

    #[test]
    fn block_order_basis_contains_eliminant() {
        let r = Ring::new(&["t", "x", "y"]);
        let gb = groebner_basis(&Engine::default(), &ideal(&r, &["x - t^2", "y - t^3"]), MonomialOrder::Block(1))
            .unwrap();
        assert!(gb.verify());
        let elim: Vec<&Polynomial> = gb.basis().iter().filter(|g| !g.uses_variable(0)).collect();
        assert_eq!(elim, vec![&parse_polynomial("x^3 - y^2", &r).unwrap().monic()]);
    }
}
