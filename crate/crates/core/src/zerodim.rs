//! Zero-dimensional schemes over ℚ: points grouped into clusters with multiplicities.
//!
//! The quotient algebra `Q[x]/I` is represented by its standard monomials.
//! A separating linear form `u` is found from the multiplication matrices;
//! its characteristic polynomial factors as `Π (X − u(p))^{mult_p}`, so Yun's
//! decomposition groups points by multiplicity and rational roots give the
//! rational points.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{Engine, GroebnerBasis, Ideal};
use crate::ideal::{
    dimension_of, gb, ideals_equal, intersect, krull_dimension, quotient_dimension, saturate,
    standard_monomials,
};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::univariate::{charpoly, UPoly};

/// Points of a zero-dimensional scheme sharing one ℚ-defined cluster ideal.
///
/// `degree` counts the geometric points in the cluster and `multiplicity`
/// is the multiplicity at each of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCluster {
    pub ideal: Ideal,
    pub rational_point: Option<Vec<Rational>>,
    pub degree: usize,
    pub multiplicity: usize,
}

impl PointCluster {
    pub fn rational(ideal: Ideal, point: Vec<Rational>, multiplicity: usize) -> Self {
        PointCluster {
            ideal,
            rational_point: Some(point),
            degree: 1,
            multiplicity,
        }
    }

    /// Cluster of the single rational point `p` (maximal ideal `⟨x_i − p_i⟩`).
    pub fn at_point(ring: &crate::ring::Ring, p: &[Rational]) -> Result<Self> {
        if p.len() != ring.nvars() {
            return Err(Error::PointLength {
                expected: ring.nvars(),
                got: p.len(),
            });
        }
        let gens = p
            .iter()
            .enumerate()
            .map(|(i, a)| Polynomial::var(ring, i).sub(&Polynomial::constant(ring, a.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointCluster::rational(Ideal::new(ring, gens)?, p.to_vec(), 1))
    }

    pub fn total(&self) -> usize {
        self.degree * self.multiplicity
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimScheme {
    pub ideal: Ideal,
    pub clusters: Vec<PointCluster>,
}

impl ZeroDimScheme {
    pub fn length(&self) -> usize {
        self.clusters.iter().map(PointCluster::total).sum()
    }

    pub fn rational_points(&self) -> impl Iterator<Item = &[Rational]> {
        self.clusters.iter().filter_map(|c| c.rational_point.as_deref())
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }
}

fn index_of(basis: &[Monomial], m: &Monomial) -> Option<usize> {
    basis.iter().position(|b| b == m)
}

/// Matrices of multiplication by each variable on `Q[x]/I`, acting on
/// coordinate columns relative to `basis`.
fn multiplication_matrices(g: &GroebnerBasis, basis: &[Monomial]) -> Result<Vec<Vec<Vec<Rational>>>> {
    let ring = g.ring();
    let n = ring.nvars();
    let d = basis.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let xi = Monomial::variable(n, i);
        let mut m = vec![vec![Rational::zero(); d]; d];
        for (col, b) in basis.iter().enumerate() {
            let prod = b.mul(&xi);
            if let Some(row) = index_of(basis, &prod) {
                m[row][col] = Rational::one();
                continue;
            }
            let nf = g.normal_form(&Polynomial::monomial(ring, prod, Rational::one()))?;
            for (mono, c) in nf.terms() {
                let row = index_of(basis, mono).expect("normal form is standard");
                m[row][col] = c.clone();
            }
        }
        out.push(m);
    }
    Ok(out)
}

fn combine(mats: &[Vec<Vec<Rational>>], weights: &[Rational]) -> Vec<Vec<Rational>> {
    let d = mats[0].len();
    let mut out = vec![vec![Rational::zero(); d]; d];
    for (m, w) in mats.iter().zip(weights) {
        if w.is_zero() {
            continue;
        }
        for r in 0..d {
            for c in 0..d {
                if !m[r][c].is_zero() {
                    out[r][c] += w * &m[r][c];
                }
            }
        }
    }
    out
}

/// Clusters of the zero set of a zero-dimensional ideal.
pub fn point_clusters(engine: &Engine, ideal: &Ideal) -> Result<ZeroDimScheme> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let g = gb(engine, ideal)?;
    let dim = dimension_of(&g);
    if dim > 0 {
        return Err(Error::PositiveDimensional { dim });
    }
    let mut scheme = ZeroDimScheme {
        ideal: ideal.clone(),
        clusters: Vec::new(),
    };
    if g.is_unit() {
        return Ok(scheme);
    }
    let basis = standard_monomials(&g)?;
    let mats = multiplication_matrices(&g, &basis)?;

    // radical: add the squarefree part of each coordinate's eliminant
    let mut rad_gens: Vec<Polynomial> = g.basis().to_vec();
    for (i, m) in mats.iter().enumerate() {
        let chi = charpoly(m);
        rad_gens.push(chi.squarefree_part().to_polynomial(&ring, i));
    }
    let radical = gb(engine, &Ideal::new(&ring, rad_gens)?)?;
    let npoints = standard_monomials(&radical)?.len();

    // separating form u = Σ c^i x_i
    let mut found = None;
    for c in 0i64..=(4 * (npoints * npoints * n) as i64 + 4) {
        let cr = Rational::from_integer(c.into());
        let mut w = Vec::with_capacity(n);
        let mut pw = Rational::one();
        for _ in 0..n {
            w.push(pw.clone());
            pw *= &cr;
        }
        let chi = charpoly(&combine(&mats, &w));
        if chi.squarefree_part().degree() == Some(npoints) {
            found = Some((w, chi));
            break;
        }
    }
    let (weights, chi) = found.ok_or_else(|| Error::GenericityFailure("no separating form".into()))?;
    let mut u = Polynomial::zero(&ring);
    for (i, w) in weights.iter().enumerate() {
        u = u.add(&Polynomial::var(&ring, i).scale(w))?;
    }
    let u_of = |h: &UPoly| -> Result<Polynomial> {
        // h(u) by Horner
        let mut acc = Polynomial::zero(&ring);
        for c in h.coeffs().iter().rev() {
            acc = acc.mul(&u)?.add(&Polynomial::constant(&ring, c.clone()))?;
        }
        Ok(acc)
    };

    for (h, mult) in chi.squarefree_decomposition() {
        let mut residual = h.clone();
        for r in h.rational_roots() {
            residual = residual.div_exact(&UPoly::linear(&r))?;
            let lin = u.sub(&Polynomial::constant(&ring, r.clone()))?;
            let pg = gb(engine, &radical.ideal().with(&[lin])?)?;
            let mut pt = vec![Rational::zero(); n];
            let mut seen = vec![false; n];
            for b in pg.basis() {
                let lead = b.leading().expect("nonzero");
                let i = lead
                    .0
                    .exponents()
                    .iter()
                    .position(|&e| e == 1)
                    .filter(|_| lead.0.degree() == 1 && b.nterms() <= 2)
                    .ok_or_else(|| Error::GenericityFailure("point ideal is not linear".into()))?;
                pt[i] = -b.constant_term();
                seen[i] = true;
            }
            if !seen.iter().all(|s| *s) {
                return Err(Error::GenericityFailure("point ideal is not maximal".into()));
            }
            scheme
                .clusters
                .push(PointCluster::rational(pg.ideal(), pt, mult as usize));
        }
        if residual.degree().unwrap_or(0) > 0 {
            let cg = gb(engine, &radical.ideal().with(&[u_of(&residual)?])?)?;
            scheme.clusters.push(PointCluster {
                ideal: cg.ideal(),
                rational_point: None,
                degree: residual.degree().unwrap(),
                multiplicity: mult as usize,
            });
        }
    }
    scheme.clusters.sort_by(|a, b| {
        (a.rational_point.is_none(), &a.rational_point).cmp(&(b.rational_point.is_none(), &b.rational_point))
    });
    Ok(scheme)
}

/// Multiplicity of the isolated point (or cluster) `c` of the scheme `I`,
/// per geometric point: `dim Q[x]/(I : (I : m_c^∞)) / deg c`.
pub fn local_multiplicity(engine: &Engine, ideal: &Ideal, c: &PointCluster) -> Result<usize> {
    let away = saturate_away(engine, ideal, &c.ideal)?;
    if ideals_equal(engine, &away, ideal)? {
        // no primary component at c: either c is off the scheme or it lies on
        // a positive-dimensional component
        if crate::ideal::is_unit(engine, &ideal.sum(&c.ideal)?)? {
            return Err(Error::ClusterNotOnScheme);
        }
        return Err(Error::NotIsolated);
    }
    let local = crate::ideal::colon_ideal(engine, ideal, &away)?;
    let dim = krull_dimension(engine, &local)?;
    if dim > 0 {
        return Err(Error::NotIsolated);
    }
    Ok(quotient_dimension(engine, &local)? / c.degree.max(1))
}

/// Like [`local_multiplicity`] but 0 when the cluster is not on the scheme.
pub fn local_multiplicity_or_zero(engine: &Engine, ideal: &Ideal, c: &PointCluster) -> Result<usize> {
    match local_multiplicity(engine, ideal, c) {
        Err(Error::ClusterNotOnScheme) => Ok(0),
        other => other,
    }
}

/// `I : m^∞` as the intersection of saturations by the generators of `m`.
fn saturate_away(engine: &Engine, ideal: &Ideal, m: &Ideal) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for g in m.gens() {
        let s = saturate(engine, ideal, g)?;
        if crate::ideal::is_unit(engine, &s)? {
            continue;
        }
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(engine, &a, &s)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ideal.ring())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::rational::{int, ratio};
    use crate::ring::Ring;

    fn id(ring: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()).unwrap()
    }

    #[test]
    fn two_rational_points() {
        let e = Engine::default();
        let r = Ring::new(&["x", "y"]);
        let s = point_clusters(&e, &id(&r, &["x*(x-1)", "y"])).unwrap();
        let pts: Vec<&[Rational]> = s.rational_points().collect();
        assert_eq!(pts, vec![&[int(0), int(0)][..], &[int(1), int(0)][..]]);
        assert!(s.clusters.iter().all(|c| c.multiplicity == 1 && c.degree == 1));
    }

    #[test]
    fn irreducible_quadratic_cluster() {
        let e = Engine::default();
        let r = Ring::new(&["x", "y"]);
        let s = point_clusters(&e, &id(&r, &["x^2 + 1", "y"])).unwrap();
        assert_eq!(s.clusters.len(), 1);
        assert_eq!(s.clusters[0].degree, 2);
        assert_eq!(s.clusters[0].multiplicity, 1);
        assert!(s.clusters[0].rational_point.is_none());
    }

    #[test]
    fn mixed_scheme_partitions_its_length() {
        let e = Engine::default();
        let r = Ring::new(&["x", "y"]);
        let i = id(&r, &["(x - 1/2)^2*(x^2 - 2)*(x + 3)", "y*(y - 1/4)^2*(y - 2)"]);
        let s = point_clusters(&e, &i).unwrap();
        assert_eq!(s.length(), quotient_dimension(&e, &i).unwrap());
        let half = s
            .clusters
            .iter()
            .find(|c| c.rational_point.as_deref() == Some(&[ratio(1, 2), ratio(1, 4)][..]))
            .unwrap();
        assert_eq!(half.multiplicity, 4);
        assert_eq!(s.length(), 20);
        let irr: Vec<(usize, usize)> = s
            .clusters
            .iter()
            .filter(|c| c.rational_point.is_none())
            .map(|c| (c.degree, c.multiplicity))
            .collect();
        assert_eq!(irr, vec![(4, 1), (2, 2)]);
        for c in &s.clusters {
            if let Some(p) = &c.rational_point {
                for g in i.gens() {
                    assert!(g.evaluate(p).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn empty_scheme_and_positive_dimension() {
        let e = Engine::default();
        let r = Ring::new(&["x", "y"]);
        assert!(point_clusters(&e, &id(&r, &["1"])).unwrap().is_empty());
        assert_eq!(
            point_clusters(&e, &id(&r, &["x*y"])),
            Err(Error::PositiveDimensional { dim: 1 })
        );
    }

    #[test]
    fn local_multiplicities() {
        let e = Engine::default();
        let r = Ring::new(&["x", "y"]);
        let origin = PointCluster::at_point(&r, &[int(0), int(0)]).unwrap();
        assert_eq!(local_multiplicity(&e, &id(&r, &["x^2", "y"]), &origin).unwrap(), 2);
        assert_eq!(local_multiplicity(&e, &id(&r, &["x*(x-1)", "y"]), &origin).unwrap(), 1);
        let far = PointCluster::at_point(&r, &[int(5), int(0)]).unwrap();
        assert_eq!(
            local_multiplicity(&e, &id(&r, &["x*(x-1)", "y"]), &far),
            Err(Error::ClusterNotOnScheme)
        );
        // isolated point of a scheme that also has a curve component
        let i = id(&r, &["x*(y-1)", "y*(y-1)"]);
        assert_eq!(local_multiplicity(&e, &i, &origin).unwrap(), 1);
        let j = id(&r, &["x^2*(y-1)", "x*y*(y-1)", "y^3*(y-1)"]);
        assert_eq!(local_multiplicity(&e, &j, &origin).unwrap(), 4);
    }
}
