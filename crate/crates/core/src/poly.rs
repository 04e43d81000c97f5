//! Sparse multivariate polynomials over ℚ.
//!
//! Terms are kept sorted by descending grevlex with no zero coefficients, so
//! two polynomials over the same ring are equal iff their term vectors are.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::rational::{common_denominator, Rational};
use crate::ring::Ring;

pub type Term = (Monomial, Rational);

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.compare(b, a)
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::variable(ring.nvars(), index), Rational::one())],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms already sorted by descending grevlex and nonzero.
    #[allow(dead_code)]
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .last()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Leading term under grevlex.
    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn uses_variable(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| canonical_cmp(t, m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match canonical_cmp(&a.0, &b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b.0.clone(), if negate { -b.1.clone() } else { b.1.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a.1 - &b.1 } else { &a.1 + &b.1 };
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { -c.clone() } else { c.clone() })),
        );
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: Vec<Term> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), ca * cb));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiplying by a monomial preserves grevlex order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Exact quotient `self / d`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        self.check_ring(d)?;
        let (dm, dc) = d.leading().ok_or(Error::ZeroInput)?;
        let mut rem = self.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !dm.divides(&m) {
                return Err(Error::InexactDivision);
            }
            let qm = dm.quotient_of(&m);
            let qc = c / dc;
            rem = rem.sub(&d.mul_monomial(&qm, &qc))?;
            quot.push((qm, qc));
        }
        Ok(Polynomial::from_terms(&self.ring, quot))
    }

    /// Divides by the grevlex leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Scales to integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let den = common_denominator(self.terms.iter().map(|(_, c)| c));
        let ints: Vec<_> = self
            .terms
            .iter()
            .map(|(_, c)| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(num_bigint::BigInt::zero(), |acc, v| num_integer::Integer::gcd(&acc, v));
        let mut factor = Rational::new(den, g);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.nvars() {
            return Err(Error::PointLength {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    pub fn differentiate(&self, var: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if var >= n {
            return Err(Error::VariableIndex { index: var, nvars: n });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                (m.with_exponent(var, e - 1), c * Rational::from_integer(e.into()))
            })
            .collect();
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars())
            .map(|i| self.differentiate(i).expect("index in range"))
            .collect()
    }

    /// Sets `x_var = 1` and drops the variable from the ring.
    pub fn dehomogenize(&self, var: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if var >= n {
            return Err(Error::VariableIndex { index: var, nvars: n });
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let ring = self.ring.remove(var);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != var)
                    .map(|(_, e)| *e);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(&ring, terms))
    }

    /// Inverse of [`dehomogenize`](Self::dehomogenize): inserts a variable
    /// named `name` at position `var` and pads every term to degree `d`.
    pub fn homogenize(&self, var: usize, name: &str, d: u32) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if var > n {
            return Err(Error::VariableIndex { index: var, nvars: n + 1 });
        }
        let deg = self.degree().unwrap_or(0);
        if d < deg {
            return Err(Error::DegreeTooLow { target: d, degree: deg });
        }
        let ring = self.ring.insert(var, name);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps: Vec<u16> = m.exponents().to_vec();
                exps.insert(var, (d - m.degree()) as u16);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(&ring, terms))
    }

    /// Homogenizes with respect to the variables flagged in `graded`, using
    /// the existing variable `var` (which must not be flagged and not occur).
    pub fn homogenize_partial(&self, var: usize, graded: &[bool]) -> Polynomial {
        let partial = |m: &Monomial| -> u32 {
            m.exponents()
                .iter()
                .zip(graded)
                .filter(|(_, g)| **g)
                .map(|(e, _)| *e as u32)
                .sum()
        };
        let top = self.terms.iter().map(|(m, _)| partial(m)).max().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let pad = (top - partial(m)) as u16;
                (m.with_exponent(var, m.exponent(var) + pad), c.clone())
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes `x_i -> images[i]` (all images in a common target ring).
    pub fn compose(&self, images: &[Polynomial], target: &Ring) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::PointLength {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        if images.iter().any(|g| g.ring != *target) {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|g| vec![Polynomial::one(target), g.clone()])
            .collect();
        let mut acc: Vec<Term> = Vec::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize])?;
            }
            acc.extend(t.terms);
        }
        Ok(Polynomial::from_terms(target, acc))
    }

    /// `f(x + shift)`.
    pub fn translate(&self, shift: &[Rational]) -> Result<Polynomial> {
        if shift.len() != self.ring.nvars() {
            return Err(Error::PointLength {
                expected: self.ring.nvars(),
                got: shift.len(),
            });
        }
        let images: Vec<Polynomial> = shift
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Polynomial::var(&self.ring, i)
                    .add(&Polynomial::constant(&self.ring, s.clone()))
                    .expect("same ring")
            })
            .collect();
        self.compose(&images, &self.ring)
    }

    /// Moves the polynomial into `target`, sending old variable `i` to
    /// `map[i]`. Variables of `target` not hit by `map` get exponent zero.
    pub fn embed(&self, target: &Ring, map: &[usize]) -> Polynomial {
        debug_assert_eq!(map.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps: Vec<u16> = vec![0; target.nvars()];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[map[i]] += e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Drops the variables not listed in `keep` (they must not occur);
    /// `keep[i]` is the old index of new variable `i`.
    pub fn restrict(&self, target: &Ring, keep: &[usize]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let kept: u32 = keep.iter().map(|&i| m.exponent(i) as u32).sum();
            if kept != m.degree() {
                return None;
            }
            terms.push((Monomial::new(keep.iter().map(|&i| m.exponent(i))), c.clone()));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Coefficient list of a linear homogeneous polynomial.
    pub fn linear_coefficients(&self) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); self.ring.nvars()];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let i = m.exponents().iter().position(|&e| e == 1)?;
            out[i] = c.clone();
        }
        Some(out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<alloc::string::String> = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).into()),
                    _ => factors.push(alloc::format!("{}^{}", self.ring.name(i), e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
