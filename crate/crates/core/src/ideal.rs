//! Ideal operations built on the Gröbner kernel.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Engine, GroebnerBasis, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;

pub fn gb(engine: &Engine, ideal: &Ideal) -> Result<GroebnerBasis> {
    groebner_basis(engine, ideal, MonomialOrder::Grevlex)
}

/// Same ideal, generated by its reduced grevlex basis.
pub fn reduce_generators(engine: &Engine, ideal: &Ideal) -> Result<Ideal> {
    Ok(gb(engine, ideal)?.ideal())
}

pub fn is_unit(engine: &Engine, ideal: &Ideal) -> Result<bool> {
    Ok(gb(engine, ideal)?.is_unit())
}

pub fn ideals_equal(engine: &Engine, a: &Ideal, b: &Ideal) -> Result<bool> {
    Ok(gb(engine, a)?.basis() == gb(engine, b)?.basis())
}

/// `b ⊆ a`.
pub fn contains_ideal(engine: &Engine, a: &Ideal, b: &Ideal) -> Result<bool> {
    gb(engine, a)?.contains_ideal(b)
}

/// Generators of `I ∩ Q[vars not in drop]`, returned in the original ring.
pub fn eliminate(engine: &Engine, ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if let Some(&bad) = drop.iter().find(|&&i| i >= n) {
        return Err(Error::VariableIndex { index: bad, nvars: n });
    }
    if drop.is_empty() {
        return reduce_generators(engine, ideal);
    }
    // new position k holds old variable perm[k]
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    for i in 0..n {
        if drop.contains(&i) && !perm.contains(&i) {
            perm.push(i);
        }
    }
    let k = perm.len();
    perm.extend((0..n).filter(|i| !drop.contains(i)));
    let mut inv = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    let pring = ring.permuted(&perm);
    let gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.embed(&pring, &inv)).collect();
    let g = groebner_basis(engine, &Ideal::new(&pring, gens)?, MonomialOrder::Block(k))?;
    let kept: Vec<Polynomial> = g
        .basis()
        .iter()
        .filter(|p| (0..k).all(|v| !p.uses_variable(v)))
        .map(|p| p.embed(ring, &perm))
        .collect();
    Ideal::new(ring, kept)
}

/// Elimination ideal expressed in the subring on the variables `keep`
/// (in that order).
pub fn eliminate_to(engine: &Engine, ideal: &Ideal, keep: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let drop: Vec<usize> = (0..ring.nvars()).filter(|i| !keep.contains(i)).collect();
    let e = eliminate(engine, ideal, &drop)?;
    let names: Vec<&str> = keep.iter().map(|&i| ring.name(i)).collect();
    let sub = Ring::new(&names);
    let gens = e
        .gens()
        .iter()
        .map(|g| g.restrict(&sub, keep).expect("eliminated variables absent"))
        .collect();
    Ideal::new(&sub, gens)
}

/// Adds a fresh variable in front of the ring; returns the new ring and the
/// embedding of the old variables.
fn with_front_variable(ring: &Ring, base: &str) -> (Ring, Vec<usize>) {
    let name = ring.fresh_name(base);
    (ring.insert(0, &name), (1..=ring.nvars()).collect())
}

pub fn intersect(engine: &Engine, a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let (tr, map) = with_front_variable(ring, "t");
    let t = Polynomial::var(&tr, 0);
    let one_minus_t = Polynomial::one(&tr).sub(&t)?;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(t.mul(&g.embed(&tr, &map))?);
    }
    for g in b.gens() {
        gens.push(one_minus_t.mul(&g.embed(&tr, &map))?);
    }
    let g = groebner_basis(engine, &Ideal::new(&tr, gens)?, MonomialOrder::Block(1))?;
    let keep: Vec<usize> = (1..tr.nvars()).collect();
    let out = g
        .basis()
        .iter()
        .filter(|p| !p.uses_variable(0))
        .map(|p| p.restrict(ring, &keep).expect("t eliminated"))
        .collect();
    Ideal::new(ring, out)
}

/// `I : g`.
pub fn colon(engine: &Engine, ideal: &Ideal, g: &Polynomial) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroInput);
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    let meet = intersect(engine, ideal, &Ideal::principal(g))?;
    let gens = meet
        .gens()
        .iter()
        .map(|h| h.div_exact(g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// `I : J`.
pub fn colon_ideal(engine: &Engine, ideal: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let c = colon(engine, ideal, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(engine, &a, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ideal.ring())))
}

/// `I : g^∞` by the stabilised colon chain.
pub fn saturate(engine: &Engine, ideal: &Ideal, g: &Polynomial) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroInput);
    }
    if g.is_constant() || ideal.is_zero() {
        return reduce_generators(engine, ideal);
    }
    let mut cur = gb(engine, ideal)?;
    loop {
        if cur.is_unit() {
            return Ok(cur.ideal());
        }
        let next = colon(engine, &cur.ideal(), g)?;
        let next_gb = gb(engine, &next)?;
        if next_gb.basis() == cur.basis() {
            return Ok(cur.ideal());
        }
        cur = next_gb;
    }
}

/// `I : g^∞` as `(I + ⟨1 − s·g⟩) ∩ Q[x]`.
pub fn saturate_rabinowitsch(engine: &Engine, ideal: &Ideal, g: &Polynomial) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroInput);
    }
    if g.is_constant() || ideal.is_zero() {
        return reduce_generators(engine, ideal);
    }
    let ring = ideal.ring();
    let (sr, map) = with_front_variable(ring, "s");
    let s = Polynomial::var(&sr, 0);
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|h| h.embed(&sr, &map)).collect();
    gens.push(Polynomial::one(&sr).sub(&s.mul(&g.embed(&sr, &map))?)?);
    let basis = groebner_basis(engine, &Ideal::new(&sr, gens)?, MonomialOrder::Block(1))?;
    let keep: Vec<usize> = (1..sr.nvars()).collect();
    let out = basis
        .basis()
        .iter()
        .filter(|p| !p.uses_variable(0))
        .map(|p| p.restrict(ring, &keep).expect("s eliminated"))
        .collect();
    reduce_generators(engine, &Ideal::new(ring, out)?)
}

/// `I : J^∞ = ⋂_j I : g_j^∞`.
pub fn saturate_ideal(engine: &Engine, ideal: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let s = saturate(engine, ideal, g)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(engine, &a, &s)?,
        });
    }
    match acc {
        Some(a) => reduce_generators(engine, &a),
        None => Ok(Ideal::unit(ideal.ring())),
    }
}

/// `g ∈ √I`.
pub fn radical_contains(engine: &Engine, ideal: &Ideal, g: &Polynomial) -> Result<bool> {
    if g.is_zero() {
        return Ok(true);
    }
    let ring = ideal.ring();
    let (sr, map) = with_front_variable(ring, "s");
    let s = Polynomial::var(&sr, 0);
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|h| h.embed(&sr, &map)).collect();
    gens.push(Polynomial::one(&sr).sub(&s.mul(&g.embed(&sr, &map))?)?);
    is_unit(engine, &Ideal::new(&sr, gens)?)
}

/// Affine dimension of the zero set from the leading-term ideal; −1 for the unit ideal.
pub fn krull_dimension(engine: &Engine, ideal: &Ideal) -> Result<i64> {
    Ok(dimension_of(&gb(engine, ideal)?))
}

pub fn dimension_of(g: &GroebnerBasis) -> i64 {
    if g.is_unit() {
        return -1;
    }
    let n = g.ring().nvars();
    let masks: Vec<u64> = g.leading_monomials().iter().map(Monomial::support_mask).collect();
    let mut best = 0i64;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as i64;
        if size <= best {
            continue;
        }
        if masks.iter().all(|m| m & !set != 0) {
            best = size;
        }
    }
    best
}

/// Standard monomials of a zero-dimensional basis, in increasing exponent order.
pub fn standard_monomials(g: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let dim = dimension_of(g);
    if dim > 0 {
        return Err(Error::PositiveDimensional { dim });
    }
    let n = g.ring().nvars();
    let mut out = Vec::new();
    if g.is_unit() {
        return Ok(out);
    }
    let leads = g.leading_monomials();
    let in_lead = |m: &Monomial| leads.iter().any(|l| l.divides(m));
    fn walk(
        i: usize,
        exps: &mut Vec<u16>,
        n: usize,
        in_lead: &dyn Fn(&Monomial) -> bool,
        out: &mut Vec<Monomial>,
    ) {
        if i == n {
            out.push(Monomial::new(exps.iter().copied()));
            return;
        }
        loop {
            if in_lead(&Monomial::new(exps.iter().copied())) {
                break;
            }
            walk(i + 1, exps, n, in_lead, out);
            exps[i] += 1;
        }
        exps[i] = 0;
    }
    let mut exps = vec![0u16; n];
    walk(0, &mut exps, n, &in_lead, &mut out);
    Ok(out)
}

/// `dim_Q Q[x]/I` for zero-dimensional (or unit) `I`.
pub fn quotient_dimension(engine: &Engine, ideal: &Ideal) -> Result<usize> {
    let g = gb(engine, ideal)?;
    Ok(standard_monomials(&g)?.len())
}

/// Monic generator of `⟨f⟩ ∩ ⟨g⟩` divides `f·g` to give the gcd.
pub fn gcd(engine: &Engine, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    let ring = f.ring();
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(ring));
    }
    let meet = intersect(engine, &Ideal::principal(f), &Ideal::principal(g))?;
    let b = gb(engine, &meet)?;
    let lcm = match b.basis() {
        [one] => one.clone(),
        _ => return Err(Error::InexactDivision),
    };
    Ok(f.mul(g)?.div_exact(&lcm)?.monic())
}

/// Product of the distinct irreducible factors of `f`, made monic.
pub fn squarefree_part(engine: &Engine, f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if f.is_constant() {
        return Ok(Polynomial::one(f.ring()));
    }
    let mut d = f.clone();
    for i in 0..f.ring().nvars() {
        if d.is_constant() {
            break;
        }
        let p = f.differentiate(i)?;
        if !p.is_zero() {
            d = gcd(engine, &d, &p)?;
        }
    }
    Ok(f.div_exact(&d)?.monic())
}

/// Replaces every basis element by its squarefree part; the zero set is unchanged.
pub fn squarefree_generators(engine: &Engine, ideal: &Ideal) -> Result<Ideal> {
    let g = gb(engine, ideal)?;
    let gens = g
        .basis()
        .iter()
        .map(|p| squarefree_part(engine, p))
        .collect::<Result<Vec<_>>>()?;
    reduce_generators(engine, &Ideal::new(ideal.ring(), gens)?)
}

/// All `k × k` minors of a matrix of polynomials.
pub fn minors(rows: &[Vec<Polynomial>], k: usize, ring: &Ring) -> Result<Vec<Polynomial>> {
    let nr = rows.len();
    let nc = rows.first().map(|r| r.len()).unwrap_or(0);
    if k == 0 {
        return Ok(vec![Polynomial::one(ring)]);
    }
    if k > nr || k > nc {
        return Ok(Vec::new());
    }
    let rsets = subsets(nr, k);
    let csets = subsets(nc, k);
    let mut out = Vec::new();
    for rs in &rsets {
        for cs in &csets {
            let m = det(rows, rs, cs, ring)?;
            if !m.is_zero() && !out.contains(&m) {
                out.push(m);
            }
        }
    }
    Ok(out)
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn det(rows: &[Vec<Polynomial>], rs: &[usize], cs: &[usize], ring: &Ring) -> Result<Polynomial> {
    if rs.len() == 1 {
        return Ok(rows[rs[0]][cs[0]].clone());
    }
    // Laplace expansion along the first selected row
    let mut acc = Polynomial::zero(ring);
    let r0 = rs[0];
    for (j, &c) in cs.iter().enumerate() {
        let e = &rows[r0][c];
        if e.is_zero() {
            continue;
        }
        let rest_c: Vec<usize> = cs.iter().copied().filter(|&x| x != c).collect();
        let sub = det(rows, &rs[1..], &rest_c, ring)?;
        let term = e.mul(&sub)?;
        acc = if j % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
    }
    Ok(acc)
}

/// Jacobian matrix rows `∂g_i/∂x_j`.
pub fn jacobian(gens: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    gens.iter().map(|g| g.gradient()).collect()
}

/// Constant row of a linear form, as polynomials.
pub fn constant_row(ring: &Ring, coeffs: &[Rational]) -> Vec<Polynomial> {
    coeffs.iter().map(|c| Polynomial::constant(ring, c.clone())).collect()
}
