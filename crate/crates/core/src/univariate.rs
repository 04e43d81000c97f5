//! Dense univariate polynomials over ℚ: Euclid, Yun's squarefree
//! decomposition, rational roots by Hensel lifting, characteristic polynomials.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::{common_denominator, Rational};
use crate::ring::Ring;

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::new(vec![Rational::one()])
    }

    /// `x - r`.
    pub fn linear(r: &Rational) -> Self {
        UPoly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn from_integers(c: &[i64]) -> Self {
        UPoly::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for constants, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        UPoly::new(self.coeffs.iter().map(|c| c * &l).collect())
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
                        + o.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = d.degree().ok_or(Error::ZeroInput)?;
        let lc = d.lead();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let v = &c * dc;
                    rem[k + j] -= v;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    pub fn div_exact(&self, d: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Rescaled to integer coefficients with content one (keeps coefficient
    /// growth in Euclid bounded).
    fn primitive_rational(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let ints = self.integer_coeffs();
        UPoly::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Primitive integer coefficient vector with positive leading coefficient.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let den = common_denominator(&self.coeffs);
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        let sign = if ints.last().map(|c| c.is_negative()).unwrap_or(false) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        if !g.is_zero() {
            for v in ints.iter_mut() {
                *v = &*v / &g * &sign;
            }
        }
        ints
    }

    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: `(factor, multiplicity)` with monic, squarefree,
    /// pairwise coprime factors whose product with multiplicities is `self / lc`.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let b = f.gcd(&fp);
        let mut c = f.div_exact(&b).expect("gcd divides");
        let mut d = fp.div_exact(&b).expect("gcd divides").sub(&c.derivative());
        let mut i = 1u32;
        while c.degree().unwrap_or(0) > 0 {
            let a = c.gcd(&d);
            c = c.div_exact(&a).expect("gcd divides");
            d = d.div_exact(&a).expect("gcd divides").sub(&c.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let mut h = self.squarefree_part();
        if h.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            h = UPoly::new(h.coeffs[1..].to_vec());
        }
        if h.degree().unwrap_or(0) > 0 {
            roots.extend(hensel_roots(&h.integer_coeffs()));
        }
        roots.sort();
        roots.dedup();
        roots
    }

    pub fn to_polynomial(&self, ring: &Ring, var: usize) -> Polynomial {
        let n = ring.nvars();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Monomial::one(n).with_exponent(var, i as u16), c.clone()))
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// `None` when `p` involves a variable other than `var`.
    pub fn from_polynomial(p: &Polynomial, var: usize) -> Option<UPoly> {
        let mut coeffs = vec![Rational::zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            if m.exponent(var) as u32 != m.degree() {
                return None;
            }
            coeffs[m.exponent(var) as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..20_000).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn eval_mod(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for a in c.iter().rev() {
        acc = (acc * x + a).mod_floor(m);
    }
    acc
}

fn deriv_int(c: &[BigInt]) -> Vec<BigInt> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * BigInt::from(i))
        .collect()
}

fn mod_poly(c: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = c
        .iter()
        .map(|a| a.mod_floor(&pb).to_u64().expect("reduced"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        // a mod b
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let c = a.last().unwrap() * inv % p;
            let shift = a.len() - b.len();
            for (j, bc) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - c * bc % p) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    a
}

/// Wang's rational reconstruction of `u mod m` with `|a|, |b| ≤ bound`.
fn rational_reconstruct(u: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > bound {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Rational roots of a squarefree integer polynomial with nonzero constant term.
fn hensel_roots(c: &[BigInt]) -> Vec<Rational> {
    let lc = c.last().expect("nonzero").clone();
    let c0 = c[0].clone();
    let bound = lc.abs().max(c0.abs());
    let target = &bound * &bound * BigInt::from(2u32);
    let dc = deriv_int(c);
    let check = UPoly::new(c.iter().cloned().map(Rational::from_integer).collect());
    for p in small_primes() {
        let pb = BigInt::from(p);
        if (&lc % &pb).is_zero() {
            continue;
        }
        let hp = mod_poly(c, p);
        let dp = mod_poly(&dc, p);
        if gcd_mod(&hp, &dp, p).len() > 1 {
            continue;
        }
        let mut out = Vec::new();
        for r0 in 0..p {
            let rb = BigInt::from(r0);
            if !eval_mod(c, &rb, &pb).is_zero() {
                continue;
            }
            let mut m = pb.clone();
            let mut x = rb;
            while m <= target {
                m = &m * &m;
                let fx = eval_mod(c, &x, &m);
                let dx = eval_mod(&dc, &x, &m);
                let inv = dx.extended_gcd(&m).x.mod_floor(&m);
                x = (&x - fx * inv).mod_floor(&m);
            }
            if let Some(r) = rational_reconstruct(&x, &m, &bound) {
                if check.evaluate(&r).is_zero() {
                    out.push(r);
                }
            }
        }
        return out;
    }
    // no usable prime in range: fall back to nothing rather than guess
    Vec::new()
}

/// Characteristic polynomial `det(x·I − A)` via Hessenberg reduction.
pub fn charpoly(a: &[Vec<Rational>]) -> UPoly {
    let n = a.len();
    let mut h: Vec<Vec<Rational>> = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let piv = h[m][m - 1].clone();
        for i in m + 1..n {
            if h[i][m - 1].is_zero() {
                continue;
            }
            let u = &h[i][m - 1] / &piv;
            for j in 0..n {
                let v = &u * &h[m][j];
                h[i][j] -= v;
            }
            for row in h.iter_mut() {
                let v = &u * &row[i];
                row[m] += v;
            }
        }
    }
    // p_k = (x − h_kk) p_{k−1} − Σ_{i<k} h_ik (Π_{j=i+1}^{k} h_{j,j−1}) p_{i−1}
    let mut ps: Vec<UPoly> = vec![UPoly::one()];
    for k in 0..n {
        let mut pk = UPoly::new(vec![-h[k][k].clone(), Rational::one()]).mul(&ps[k]);
        let mut prod = Rational::one();
        for i in (0..k).rev() {
            prod *= &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let c = &prod * &h[i][k];
            if !c.is_zero() {
                pk = pk.sub(&ps[i].scale(&c));
            }
        }
        ps.push(pk);
    }
    ps.pop().expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let f = UPoly::linear(&int(1))
            .pow(3)
            .mul(&UPoly::linear(&int(-2)).pow(2))
            .mul(&UPoly::from_integers(&[1, 0, 1]));
        let d = f.squarefree_decomposition();
        assert_eq!(
            d,
            vec![
                (UPoly::from_integers(&[1, 0, 1]), 1),
                (UPoly::linear(&int(-2)), 2),
                (UPoly::linear(&int(1)), 3),
            ]
        );
    }

    #[test]
    fn rational_roots_by_lifting() {
        let f = UPoly::linear(&ratio(4, 27))
            .mul(&UPoly::linear(&ratio(-7, 3)))
            .mul(&UPoly::linear(&int(0)))
            .mul(&UPoly::from_integers(&[-2, 0, 1]));
        assert_eq!(f.rational_roots(), vec![ratio(-7, 3), int(0), ratio(4, 27)]);
        assert!(UPoly::from_integers(&[1, 0, 1]).rational_roots().is_empty());
        let big = UPoly::linear(&ratio(123456789, 1024)).mul(&UPoly::linear(&int(-99991)));
        assert_eq!(big.rational_roots(), vec![int(-99991), ratio(123456789, 1024)]);
    }

    #[test]
    fn characteristic_polynomials() {
        let a = vec![
            vec![int(2), int(1), int(0)],
            vec![int(1), int(3), int(1)],
            vec![int(0), int(1), int(4)],
        ];
        // det(xI - A) = x^3 - 9x^2 + 24x - 18
        assert_eq!(charpoly(&a), UPoly::from_integers(&[-18, 24, -9, 1]));
        let nil = vec![vec![int(0), int(1)], vec![int(0), int(0)]];
        assert_eq!(charpoly(&nil), UPoly::from_integers(&[0, 0, 1]));
        let perm = vec![
            vec![int(0), int(0), int(1)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(1), int(0)],
        ];
        assert_eq!(charpoly(&perm), UPoly::from_integers(&[-1, 0, 0, 1]));
    }

    #[test]
    fn euclid() {
        let a = UPoly::from_integers(&[-1, 0, 1]);
        let b = UPoly::from_integers(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), UPoly::from_integers(&[1, 1]));
        let (q, r) = UPoly::from_integers(&[1, 0, 0, 2]).div_rem(&UPoly::from_integers(&[1, 1])).unwrap();
        assert_eq!(q.mul(&UPoly::from_integers(&[1, 1])).add(&r), UPoly::from_integers(&[1, 0, 0, 2]));
    }
}
