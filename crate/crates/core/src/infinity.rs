//! The affine polynomial `P = f|_{l̂ = 1}` and its behaviour at infinity:
//! affine critical points off the zero fibre (`β^aff`) and t-singularities
//! at infinity with their polar intersection multiplicities (`β^∞`).
//!
//! After a coordinate change making `l̂` the last variable `x_n`, the graph
//! closure is `𝕏 = {F(y, x_n) − t·x_n^d = 0} ⊂ ℙⁿ × ℂ` and its part at infinity
//! lies in `{x_n = 0}`. In the chart `{ℓ ≠ 0}` the polar curve of `(x_n, τ)`
//! is the closure of the affine polar curve `Γ(ℓ, P)` lifted by `t = P`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{Engine, Ideal};
use crate::ideal::{eliminate_to, intersect, krull_dimension, saturate};
use crate::linear::{mix_seed, sample_generic_form, CoordinateChange, LinearForm};
use crate::polar::polar_minors;
use crate::poly::Polynomial;
use crate::projective::chart_ideal;
use crate::rational::{normalize_projective, Rational};
use crate::ring::Ring;
use crate::zerodim::{local_multiplicity, point_clusters, PointCluster, ZeroDimScheme};

/// `f` in coordinates `y` with `y_n = l̂`, and its dehomogenization `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePicture {
    /// Old coordinates in terms of new ones: `x = M y`.
    pub change: CoordinateChange,
    pub projective: Polynomial,
    pub affine: Polynomial,
    pub degree: u32,
}

impl AffinePicture {
    pub fn new(f: &Polynomial, form: &LinearForm) -> Result<Self> {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let ring = f.ring();
        let n1 = ring.nvars();
        let a = form.coeffs();
        if a.len() != n1 {
            return Err(Error::PointLength {
                expected: n1,
                got: a.len(),
            });
        }
        let k = a.iter().rposition(|c| !c.is_zero()).ok_or(Error::ZeroForm)?;
        let order: Vec<usize> = (0..n1).filter(|&i| i != k).chain([k]).collect();
        let mut m = vec![vec![Rational::zero(); n1]; n1];
        for (j, &i) in order.iter().enumerate() {
            if i != k {
                m[i][j] = Rational::one();
            }
        }
        for (j, &i) in order.iter().enumerate() {
            m[k][j] = if i == k { a[k].recip() } else { -&a[i] / &a[k] };
        }
        let change = CoordinateChange::new(m)?;
        let new_ring = ring.permuted(&order);
        let identity: Vec<usize> = (0..n1).collect();
        let projective = change.apply(f)?.embed(&new_ring, &identity);
        let affine = projective.dehomogenize(n1 - 1)?;
        let degree = f.degree().unwrap_or(0);
        if affine.degree() != Some(degree) {
            return Err(Error::HyperplaneInHypersurface);
        }
        Ok(AffinePicture {
            change,
            projective,
            affine,
            degree,
        })
    }

    /// Number of affine variables `n`.
    pub fn dim(&self) -> usize {
        self.affine.ring().nvars()
    }

    /// A point `y` at infinity (`y_n = 0`) in the original coordinates.
    pub fn to_original(&self, y: &[Rational]) -> Vec<Rational> {
        let mut v = y.to_vec();
        v.resize(self.dim() + 1, Rational::zero());
        normalize_projective(&self.change.map_point(&v)).unwrap_or(v)
    }

    /// An affine point of `P`, as a projective point in the original coordinates.
    pub fn affine_to_original(&self, y: &[Rational]) -> Vec<Rational> {
        let mut v = y.to_vec();
        v.push(Rational::one());
        normalize_projective(&self.change.map_point(&v)).unwrap_or(v)
    }

    /// Original projective point in new coordinates.
    pub fn from_original(&self, x: &[Rational]) -> Vec<Rational> {
        self.change.inverse().map_point(x)
    }

    /// Ring `(y_0, …, y_{n−1}, x_n, t)` of the graph closure.
    fn lift_ring(&self) -> Ring {
        let pr = self.projective.ring();
        let t = pr.fresh_name("t");
        pr.insert(pr.nvars(), &t)
    }
}

/// `β^aff`: total Milnor number of `P` off its zero fibre, with the critical
/// points as clusters carrying their Milnor numbers.
pub fn beta_affine(engine: &Engine, pic: &AffinePicture) -> Result<(usize, ZeroDimScheme)> {
    let p = &pic.affine;
    let ring = p.ring();
    let j = Ideal::new(ring, p.gradient())?;
    let critical = saturate(engine, &j, p)?;
    let dim = krull_dimension(engine, &critical)?;
    if dim > 0 {
        return Err(Error::NonAdmissible(format!(
            "critical locus of the affine polynomial off its zero fibre has dimension {dim}"
        )));
    }
    let scheme = point_clusters(engine, &critical)?;
    Ok((scheme.length(), scheme))
}

/// Closure in `ℙⁿ × ℂ` of `Γ(ℓ, P)` lifted by `t = P`; `None` when the affine
/// polar locus is not a curve.
fn lifted_polar(engine: &Engine, pic: &AffinePicture, ell: &[Rational]) -> Result<Option<Ideal>> {
    let p = &pic.affine;
    let n = pic.dim();
    let gamma = saturate(engine, &Ideal::new(p.ring(), polar_minors(p, ell)?)?, p)?;
    if krull_dimension(engine, &gamma)? > 1 {
        return Ok(None);
    }
    let lr = pic.lift_ring();
    let into: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&lr, n + 1);
    let xn = Polynomial::var(&lr, n);
    let mut gens: Vec<Polynomial> = gamma.gens().iter().map(|g| g.embed(&lr, &into)).collect();
    gens.push(p.embed(&lr, &into).sub(&t)?);
    let graded: Vec<bool> = (0..n + 2).map(|i| i < n).collect();
    let gens = gens.iter().map(|g| g.homogenize_partial(n, &graded)).collect();
    Ok(Some(saturate(engine, &Ideal::new(&lr, gens)?, &xn)?))
}

fn linear_in(ring: &Ring, coeffs: &[Rational]) -> Polynomial {
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| Polynomial::var(ring, i).scale(c));
    terms.fold(Polynomial::zero(ring), |acc, t| acc.add(&t).expect("same ring"))
}

/// A point at infinity of the graph closure, in lift-ring coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityCluster {
    /// Chart `j` of the `y`-coordinates the cluster was read in.
    pub chart: usize,
    pub cluster: PointCluster,
}

impl InfinityCluster {
    /// `(y, t)` when rational; `y` has `n` coordinates.
    pub fn point(&self) -> Option<(Vec<Rational>, Rational)> {
        let c = self.cluster.rational_point.as_ref()?;
        let n = c.len() - 2;
        Some((c[..n].to_vec(), c[n + 1].clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidates {
    /// Candidate pairs with `t ≠ 0`.
    pub nonzero: Vec<InfinityCluster>,
    /// Points at infinity of the polar curves over `t = 0`; informational.
    pub zero_fibre: Vec<InfinityCluster>,
    /// Forms whose polar locus was a curve and entered the union.
    pub forms: Vec<Vec<Rational>>,
}

fn points_at_infinity(engine: &Engine, ideal: &Ideal, n: usize) -> Result<Vec<InfinityCluster>> {
    let mut out = Vec::new();
    for j in 0..n {
        match point_clusters(engine, &chart_ideal(ideal, j)?) {
            Ok(scheme) => out.extend(scheme.clusters.into_iter().map(|cluster| InfinityCluster { chart: j, cluster })),
            Err(Error::PositiveDimensional { dim }) => {
                return Err(Error::NonAdmissible(format!(
                    "t-singularity candidates at infinity form a set of dimension {dim}"
                )))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Candidate t-singularities at infinity: the union over the coordinate
/// forms and one seeded generic form `ℓ` of the limits of the lifted polar
/// curves `Γ(ℓ, P)` at `x_n = 0`.
pub fn t_singularity_candidates(engine: &Engine, pic: &AffinePicture, seed: u64) -> Result<Candidates> {
    let n = pic.dim();
    let lr = pic.lift_ring();
    let xn = Polynomial::var(&lr, n);
    let t = Polynomial::var(&lr, n + 1);
    let mut forms: Vec<Vec<Rational>> = (0..n).map(|i| LinearForm::coordinate(n, i).coeffs().to_vec()).collect();
    if n >= 2 {
        forms.push(sample_generic_form(n, mix_seed(seed, 0x1f), None)?.coeffs().to_vec());
    }
    let mut used = Vec::new();
    let mut nonzero: Option<Ideal> = None;
    let mut zero: Option<Ideal> = None;
    for ell in forms {
        let Some(g) = lifted_polar(engine, pic, &ell)? else {
            continue;
        };
        let at_inf = g.with(core::slice::from_ref(&xn))?;
        let a = saturate(engine, &at_inf, &t)?;
        let z = at_inf.with(core::slice::from_ref(&t))?;
        nonzero = Some(match nonzero {
            None => a,
            Some(acc) => intersect(engine, &acc, &a)?,
        });
        zero = Some(match zero {
            None => z,
            Some(acc) => intersect(engine, &acc, &z)?,
        });
        used.push(ell);
    }
    if used.is_empty() {
        return Err(Error::NonAdmissible("no affine polar curve of the chart polynomial is a curve".into()));
    }
    Ok(Candidates {
        nonzero: points_at_infinity(engine, &nonzero.unwrap(), n)?,
        zero_fibre: points_at_infinity(engine, &zero.unwrap(), n)?,
        forms: used,
    })
}

/// `λ(p, t)` computed in the chart `{ℓ = 1}` with the polar curve of `ℓ`.
/// `y` is the point at infinity in new coordinates (`n` entries), `ℓ(y) ≠ 0`.
pub fn lambda_in_chart(
    engine: &Engine,
    pic: &AffinePicture,
    y: &[Rational],
    t0: &Rational,
    ell: &[Rational],
) -> Result<usize> {
    let n = pic.dim();
    if y.len() != n || ell.len() != n {
        return Err(Error::PointLength {
            expected: n,
            got: y.len().min(ell.len()),
        });
    }
    let scale: Rational = ell.iter().zip(y).map(|(a, b)| a * b).sum();
    if scale.is_zero() {
        return Err(Error::BadPoint("chart form vanishes at the point".into()));
    }
    let g = lifted_polar(engine, pic, ell)?
        .ok_or_else(|| Error::NonAdmissible("polar locus of the chart form is not a curve".into()))?;
    let lr = g.ring().clone();
    let ell_poly = linear_in(&lr, ell).sub(&Polynomial::one(&lr))?;
    let fibre = Polynomial::var(&lr, n + 1).sub(&Polynomial::constant(&lr, t0.clone()))?;
    let scheme = g.with(&[ell_poly, fibre])?;
    let mut pt: Vec<Rational> = y.iter().map(|c| c / &scale).collect();
    pt.push(Rational::zero());
    pt.push(t0.clone());
    let cluster = PointCluster::at_point(&lr, &pt)?;
    match local_multiplicity(engine, &scheme, &cluster) {
        Err(Error::ClusterNotOnScheme) => Ok(0),
        Err(Error::NotIsolated) => Err(Error::NonAdmissible(format!(
            "polar curve meets the fibre t = {t0} in a positive-dimensional set"
        ))),
        other => other,
    }
}

/// `λ` per point of a candidate cluster, using the coordinate chart it was read in.
fn lambda_of_cluster(engine: &Engine, pic: &AffinePicture, c: &InfinityCluster) -> Result<usize> {
    let n = pic.dim();
    if let Some((y, t0)) = c.point() {
        return lambda_in_chart(engine, pic, &y, &t0, LinearForm::coordinate(n, c.chart).coeffs());
    }
    let ell = LinearForm::coordinate(n, c.chart);
    let g = lifted_polar(engine, pic, ell.coeffs())?
        .ok_or_else(|| Error::NonAdmissible("polar locus of the chart form is not a curve".into()))?;
    let lr = g.ring().clone();
    let tvals = eliminate_to(engine, &c.cluster.ideal, &[n + 1])?;
    let tpoly = tvals
        .gens()
        .first()
        .ok_or_else(|| Error::BadPoint("cluster without finitely many t values".into()))?
        .embed(&lr, &[n + 1]);
    let chart = Polynomial::var(&lr, c.chart).sub(&Polynomial::one(&lr))?;
    let scheme = g.with(&[chart, tpoly])?;
    match local_multiplicity(engine, &scheme, &c.cluster) {
        Err(Error::ClusterNotOnScheme) => Ok(0),
        Err(Error::NotIsolated) => Err(Error::NonAdmissible(
            "polar curve meets a fibre in a positive-dimensional set".into(),
        )),
        other => other,
    }
}

/// `λ(p, t)` for `p` at infinity given in the original coordinates.
pub fn lambda_multiplicity(
    engine: &Engine,
    f: &Polynomial,
    form: &LinearForm,
    p: &[Rational],
    t0: &Rational,
) -> Result<usize> {
    let pic = AffinePicture::new(f, form)?;
    let y = pic.from_original(p);
    let n = pic.dim();
    if !y[n].is_zero() {
        return Err(Error::BadPoint("not on the hyperplane".into()));
    }
    let j = y.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::BadPoint("zero vector".into()))?;
    lambda_in_chart(engine, &pic, &y[..n], t0, LinearForm::coordinate(n, j).coeffs())
}

/// `λ(p, t)` in the coordinate chart of `p` and in the chart of a seeded
/// generic form; the two must agree.
pub fn lambda_two_charts(
    engine: &Engine,
    pic: &AffinePicture,
    y: &[Rational],
    t0: &Rational,
    seed: u64,
) -> Result<(usize, usize)> {
    let n = pic.dim();
    let j = y.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::BadPoint("zero vector".into()))?;
    let first = lambda_in_chart(engine, pic, y, t0, LinearForm::coordinate(n, j).coeffs())?;
    for k in 0..16 {
        let ell = sample_generic_form(n, mix_seed(seed, 0x200 + k), None)?;
        let at: Rational = ell.coeffs().iter().zip(y).map(|(a, b)| a * b).sum();
        if at.is_zero() {
            continue;
        }
        match lambda_in_chart(engine, pic, y, t0, ell.coeffs()) {
            Ok(second) => return Ok((first, second)),
            Err(Error::NonAdmissible(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure("no usable generic chart for the t-singularity".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSingularity {
    /// Point at infinity in the original coordinates, when rational.
    pub point: Option<Vec<Rational>>,
    pub t: Option<Rational>,
    pub degree: usize,
    pub lambda: usize,
    pub cluster: InfinityCluster,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaReport {
    pub picture: AffinePicture,
    pub beta_aff: usize,
    pub affine_critical: ZeroDimScheme,
    pub beta_inf: usize,
    pub t_singularities: Vec<TSingularity>,
    /// Candidates with `λ = 0`.
    pub t_regular: Vec<TSingularity>,
    /// Points at infinity over `t = 0` in the original coordinates; never counted.
    pub zero_fibre: Vec<Option<Vec<Rational>>>,
}

impl BetaReport {
    pub fn beta_total(&self) -> usize {
        self.beta_aff + self.beta_inf
    }
}

/// `β(V, ℋ) = β^aff + β^∞`.
pub fn beta_total(engine: &Engine, f: &Polynomial, form: &LinearForm, seed: u64) -> Result<BetaReport> {
    let pic = AffinePicture::new(f, form)?;
    let (beta_aff, affine_critical) = beta_affine(engine, &pic)?;
    let cands = t_singularity_candidates(engine, &pic, seed)?;
    let mut t_singularities = Vec::new();
    let mut t_regular = Vec::new();
    for c in cands.nonzero {
        let lambda = lambda_of_cluster(engine, &pic, &c)?;
        let (point, t) = match c.point() {
            Some((y, t)) => (Some(pic.to_original(&y)), Some(t)),
            None => (None, None),
        };
        let s = TSingularity {
            point,
            t,
            degree: c.cluster.degree,
            lambda,
            cluster: c,
        };
        if lambda > 0 {
            t_singularities.push(s);
        } else {
            t_regular.push(s);
        }
    }
    let beta_inf = t_singularities.iter().map(|s| s.degree * s.lambda).sum();
    let zero_fibre = cands
        .zero_fibre
        .iter()
        .map(|c| c.point().map(|(y, _)| pic.to_original(&y)))
        .collect();
    Ok(BetaReport {
        picture: pic,
        beta_aff,
        affine_critical,
        beta_inf,
        t_singularities,
        t_regular,
        zero_fibre,
    })
}
