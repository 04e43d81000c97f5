//! Singular filtration, non-transversality of hyperplanes, admissibility,
//! the sectional Milnor numbers α and special points.
//!
//! The filtration `F₀ = V ⊃ F₁ = Sing V ⊃ F₂ ⊃ …` stands in for a Whitney
//! stratification. Each layer after `F₁` collects the singular points of the
//! previous layer, its lower-dimensional components, and the points where the
//! Hessian of `f` drops below its generic rank along it.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{Engine, GroebnerBasis, Ideal};
use crate::ideal::{
    constant_row, dimension_of, eliminate_to, gb, ideals_equal, intersect, jacobian, krull_dimension,
    minors, radical_contains, saturate, saturate_ideal, squarefree_generators, squarefree_part, subsets,
};
use crate::linear::{sample_generic_form, LinearForm};
use crate::polar::{certify, cone_apex_set, polar_ideal, polar_minors, GenericValue, PolarLocus};
use crate::poly::Polynomial;
use crate::projective::{
    affine_chart, chart_representative, projective_clusters, projective_dimension, ProjectiveCluster,
};
use crate::rational::Rational;
use crate::zerodim::{local_multiplicity_or_zero, PointCluster};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub ideal: Ideal,
    /// Projective dimension, −1 for the empty layer.
    pub dimension: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub layers: Vec<Layer>,
    /// False when a step failed to lower the dimension and the chain was cut.
    pub complete: bool,
}

impl Filtration {
    pub fn dimensions(&self) -> Vec<i64> {
        self.layers.iter().map(|l| l.dimension).collect()
    }

    /// The final layer when it is a finite set of points.
    pub fn point_layer(&self) -> Option<&Layer> {
        self.layers.last().filter(|l| l.dimension == 0)
    }
}

pub fn hessian(f: &Polynomial) -> Vec<Vec<Polynomial>> {
    f.gradient().iter().map(Polynomial::gradient).collect()
}

fn nonzero_normal_forms(g: &GroebnerBasis, polys: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let mut out: Vec<Polynomial> = Vec::new();
    for p in polys {
        let r = g.normal_form(&p)?;
        if !r.is_zero() {
            let r = r.monic();
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Pushes an ideal towards its radical without changing the zero set:
/// squarefree parts of basis elements and of eliminants onto every set of
/// `dim + 1` coordinates, repeated until stable.
pub fn reduce(engine: &Engine, ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let mut cur = squarefree_generators(engine, ideal)?;
    loop {
        let g = gb(engine, &cur)?;
        if g.is_unit() {
            return Ok(cur);
        }
        let k = dimension_of(&g) as usize;
        let mut extra = Vec::new();
        if k < n {
            for keep in subsets(n, k + 1) {
                let e = eliminate_to(engine, &cur, &keep)?;
                for h in e.gens() {
                    extra.push(squarefree_part(engine, h)?.embed(&ring, &keep));
                }
            }
        }
        let next = squarefree_generators(engine, &cur.with(&extra)?)?;
        if ideals_equal(engine, &next, &cur)? {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Points of the layer where the Hessian rank drops below its generic value.
fn hessian_drop(
    engine: &Engine,
    hess: &[Vec<Polynomial>],
    layer: &Ideal,
    g: &GroebnerBasis,
    kdim: i64,
) -> Result<Option<Ideal>> {
    let ring = layer.ring();
    let h: Vec<Vec<Polynomial>> = hess
        .iter()
        .map(|row| row.iter().map(|e| g.normal_form(e)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for r in (1..=h.len()).rev() {
        let ms = nonzero_normal_forms(g, minors(&h, r, ring)?)?;
        let mut generic = false;
        for m in &ms {
            if !radical_contains(engine, layer, m)? {
                generic = true;
                break;
            }
        }
        if !generic {
            continue;
        }
        let drop = layer.with(&ms)?;
        if krull_dimension(engine, &drop)? < kdim {
            return Ok(Some(drop));
        }
        // some component keeps the lower rank throughout; restrict to the others
        let rest = saturate_ideal(engine, layer, &Ideal::new(ring, ms.clone())?)?;
        return Ok(Some(rest.with(&ms)?));
    }
    Ok(None)
}

fn next_layer(engine: &Engine, hess: &[Vec<Polynomial>], layer: &Ideal) -> Result<Ideal> {
    let ring = layer.ring();
    let n = ring.nvars();
    let g = gb(engine, layer)?;
    let kdim = dimension_of(&g);
    let c = n - kdim as usize;
    let jac = jacobian(g.basis());
    let mut parts = vec![layer.with(&nonzero_normal_forms(&g, minors(&jac, c, ring)?)?)?];
    let higher = nonzero_normal_forms(&g, minors(&jac, c + 1, ring)?)?;
    if !higher.is_empty() {
        parts.push(saturate_ideal(engine, layer, &Ideal::new(ring, higher)?)?);
    }
    if let Some(drop) = hessian_drop(engine, hess, layer, &g, kdim)? {
        parts.push(drop);
    }
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = intersect(engine, &acc, p)?;
    }
    reduce(engine, &acc)
}

/// `F₀ = ⟨f⟩`, `F₁ = Sing V`, then iterated until a layer is finite or empty.
pub fn singular_filtration(engine: &Engine, f: &Polynomial) -> Result<Filtration> {
    if f.is_zero() || f.is_constant() {
        return Err(Error::ZeroInput);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = f.ring();
    let mut layers = vec![Layer {
        ideal: Ideal::principal(f),
        dimension: ring.nvars() as i64 - 2,
    }];
    let hess = hessian(f);
    let mut gens = f.gradient();
    gens.push(f.clone());
    let mut cur = reduce(engine, &Ideal::new(ring, gens)?)?;
    let mut complete = true;
    loop {
        let dimension = projective_dimension(engine, &cur)?;
        if dimension >= layers.last().map(|l| l.dimension).unwrap_or(i64::MAX) {
            complete = false;
            break;
        }
        if dimension < 0 {
            layers.push(Layer {
                ideal: Ideal::unit(ring),
                dimension,
            });
            break;
        }
        layers.push(Layer {
            ideal: cur.clone(),
            dimension,
        });
        if dimension == 0 {
            break;
        }
        cur = next_layer(engine, &hess, &cur)?;
    }
    Ok(Filtration { layers, complete })
}

/// `l̂ | f`, i.e. `ℋ ⊂ V`.
pub fn hyperplane_in_hypersurface(f: &Polynomial, form: &LinearForm) -> Result<bool> {
    let ring = f.ring();
    let a = form.coeffs();
    if a.len() != ring.nvars() {
        return Err(Error::PointLength {
            expected: ring.nvars(),
            got: a.len(),
        });
    }
    let k = a.iter().rposition(|c| !c.is_zero()).ok_or(Error::ZeroForm)?;
    let images: Vec<Polynomial> = (0..ring.nvars())
        .map(|i| {
            if i != k {
                return Polynomial::var(ring, i);
            }
            let mut acc = Polynomial::zero(ring);
            for (j, c) in a.iter().enumerate() {
                if j != k && !c.is_zero() {
                    let t = Polynomial::var(ring, j).scale(&(-c / &a[k]));
                    acc = acc.add(&t).expect("same ring");
                }
            }
            acc
        })
        .collect();
    Ok(f.compose(&images, ring)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerLocus {
    pub layer: usize,
    pub ideal: Ideal,
    pub dimension: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonTransversalityReport {
    pub hyperplane: LinearForm,
    pub loci: Vec<LayerLocus>,
    /// Largest projective dimension among the loci, −1 if all are empty.
    pub dimension: i64,
    /// The points, when finitely many.
    pub points: Option<Vec<ProjectiveCluster>>,
}

impl NonTransversalityReport {
    pub fn is_finite(&self) -> bool {
        self.dimension <= 0
    }

    pub fn rational_points(&self) -> Vec<Vec<Rational>> {
        self.points
            .iter()
            .flatten()
            .filter_map(|c| c.point().map(<[Rational]>::to_vec))
            .collect()
    }
}

pub fn non_transversality_points(
    engine: &Engine,
    f: &Polynomial,
    form: &LinearForm,
) -> Result<NonTransversalityReport> {
    let filtration = singular_filtration(engine, f)?;
    non_transversality_with(engine, f, &filtration, form)
}

/// Per layer `S` of codimension `c`: points of `S ∩ ℋ` where `[Jac S; l̂]`
/// has rank at most `c`, with the next layer saturated away.
pub fn non_transversality_with(
    engine: &Engine,
    f: &Polynomial,
    filtration: &Filtration,
    form: &LinearForm,
) -> Result<NonTransversalityReport> {
    if hyperplane_in_hypersurface(f, form)? {
        return Err(Error::HyperplaneInHypersurface);
    }
    let ring = f.ring();
    let n = ring.nvars();
    let lhat = form.to_polynomial(ring)?;
    let arow = constant_row(ring, form.coeffs());
    let mut loci = Vec::new();
    for (k, layer) in filtration.layers.iter().enumerate() {
        if layer.dimension < 0 {
            continue;
        }
        let base = layer.ideal.with(core::slice::from_ref(&lhat))?;
        let mut locus = if layer.dimension == 0 {
            base
        } else {
            let gens = if k == 0 { vec![f.clone()] } else { layer.ideal.gens().to_vec() };
            let c = n - (layer.dimension as usize + 1);
            let mut rows = jacobian(&gens);
            rows.push(arow.clone());
            base.with(&minors(&rows, c + 1, ring)?)?
        };
        if let Some(next) = filtration.layers.get(k + 1) {
            if next.dimension >= 0 {
                locus = saturate_ideal(engine, &locus, &next.ideal)?;
            }
        }
        let dimension = projective_dimension(engine, &locus)?;
        loci.push(LayerLocus {
            layer: k,
            ideal: locus,
            dimension,
        });
    }
    let dimension = loci.iter().map(|l| l.dimension).max().unwrap_or(-1).max(-1);
    let points = if dimension <= 0 {
        let mut acc: Option<Ideal> = None;
        for l in loci.iter().filter(|l| l.dimension == 0) {
            acc = Some(match acc {
                None => l.ideal.clone(),
                Some(a) => intersect(engine, &a, &l.ideal)?,
            });
        }
        Some(match acc {
            Some(i) => projective_clusters(engine, &i)?,
            None => Vec::new(),
        })
    } else {
        None
    };
    Ok(NonTransversalityReport {
        hyperplane: form.clone(),
        loci,
        dimension,
        points,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Admissible,
    /// Condition (*) fails: a positive-dimensional non-transversality locus.
    FailsStar { layer: usize, locus: Ideal, dimension: i64 },
    /// Condition (ii) fails: the polar locus has dimension above 1.
    FailsPolar { dimension: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub verdict: Verdict,
    pub non_transversality: NonTransversalityReport,
    pub polar: PolarLocus,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.verdict == Verdict::Admissible
    }
}

pub fn check_admissible(engine: &Engine, f: &Polynomial, form: &LinearForm) -> Result<AdmissibilityReport> {
    let filtration = singular_filtration(engine, f)?;
    check_admissible_with(engine, f, &filtration, form)
}

pub fn check_admissible_with(
    engine: &Engine,
    f: &Polynomial,
    filtration: &Filtration,
    form: &LinearForm,
) -> Result<AdmissibilityReport> {
    let non_transversality = non_transversality_with(engine, f, filtration, form)?;
    let polar = polar_ideal(engine, f, form)?;
    let verdict = if let Some(bad) = non_transversality.loci.iter().find(|l| l.dimension > 0) {
        Verdict::FailsStar {
            layer: bad.layer,
            locus: bad.ideal.clone(),
            dimension: bad.dimension,
        }
    } else if polar.dimension > 1 {
        Verdict::FailsPolar {
            dimension: polar.dimension,
        }
    } else {
        Verdict::Admissible
    };
    Ok(AdmissibilityReport {
        verdict,
        non_transversality,
        polar,
    })
}

/// `Γ(l, f_j) + ⟨l⟩` in the affine chart `x_j = 1`.
fn chart_polar_slice(engine: &Engine, f: &Polynomial, form: &LinearForm, j: usize) -> Result<Ideal> {
    let g = affine_chart(f, j)?;
    let l = affine_chart(&form.to_polynomial(f.ring())?, j)?;
    let coeffs: Vec<Rational> = form
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != j)
        .map(|(_, c)| c.clone())
        .collect();
    if coeffs.iter().all(Zero::is_zero) {
        return Ok(Ideal::unit(g.ring()));
    }
    let gamma = saturate(engine, &Ideal::new(g.ring(), polar_minors(&g, &coeffs)?)?, &g)?;
    gamma.with(&[l])
}

/// `α_p(V, ℋ)`: intersection multiplicity at `p` of `{l = 0}` with the polar
/// curve of the chart polynomial.
pub fn alpha_at_point(engine: &Engine, f: &Polynomial, p: &[Rational], form: &LinearForm) -> Result<usize> {
    if p.len() != f.ring().nvars() {
        return Err(Error::PointLength {
            expected: f.ring().nvars(),
            got: p.len(),
        });
    }
    let (j, rep) = chart_representative(p).ok_or_else(|| Error::BadPoint("zero vector".into()))?;
    if !f.evaluate(&rep)?.is_zero() {
        return Err(Error::BadPoint("not on the hypersurface".into()));
    }
    if !form.evaluate(&rep)?.is_zero() {
        return Err(Error::BadPoint("not on the hyperplane".into()));
    }
    let scheme = chart_polar_slice(engine, f, form, j)?;
    let pt: Vec<Rational> = rep
        .into_iter()
        .enumerate()
        .filter(|(i, _)| *i != j)
        .map(|(_, c)| c)
        .collect();
    let cluster = PointCluster::at_point(scheme.ring(), &pt)?;
    local_multiplicity_or_zero(engine, &scheme, &cluster)
}

/// `α` per point of a cluster found by [`projective_clusters`].
pub fn alpha_at_cluster(
    engine: &Engine,
    f: &Polynomial,
    form: &LinearForm,
    pc: &ProjectiveCluster,
) -> Result<usize> {
    if let Some(p) = pc.point() {
        return alpha_at_point(engine, f, p, form);
    }
    let j = pc.chart;
    let scheme = chart_polar_slice(engine, f, form, j)?;
    let gens = pc
        .cluster
        .ideal
        .gens()
        .iter()
        .map(|h| affine_chart(h, j))
        .collect::<Result<Vec<_>>>()?;
    let cluster = PointCluster {
        ideal: Ideal::new(scheme.ring(), gens)?,
        rational_point: None,
        degree: pc.cluster.degree,
        multiplicity: 1,
    };
    local_multiplicity_or_zero(engine, &scheme, &cluster)
}

/// `α_p(V)`: the value of `α_p(V, ℋ)` shared by seeded generic `ℋ ∋ p`.
pub fn generic_alpha(
    engine: &Engine,
    f: &Polynomial,
    p: &[Rational],
    seed: u64,
    trials: usize,
) -> Result<GenericValue> {
    let n = f.ring().nvars();
    certify(seed, trials, "generic alpha", |s| {
        let form = sample_generic_form(n, s, Some(p))?;
        match alpha_at_point(engine, f, p, &form) {
            Ok(v) => Ok(Some(v)),
            Err(Error::NotIsolated) => Ok(None),
            Err(e) => Err(e),
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub cluster: ProjectiveCluster,
    /// `α_p(V)`; `None` for clusters without a rational point.
    pub alpha: Option<GenericValue>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPointReport {
    /// Cones are not examined.
    pub cone: bool,
    pub filtration_complete: bool,
    pub candidates: Vec<Candidate>,
    pub special: Vec<Vec<Rational>>,
}

pub fn special_points(engine: &Engine, f: &Polynomial, seed: u64) -> Result<SpecialPointReport> {
    let filtration = singular_filtration(engine, f)?;
    special_points_with(engine, f, &filtration, seed)
}

pub fn special_points_with(
    engine: &Engine,
    f: &Polynomial,
    filtration: &Filtration,
    seed: u64,
) -> Result<SpecialPointReport> {
    let mut report = SpecialPointReport {
        cone: cone_apex_set(f)?.is_cone,
        filtration_complete: filtration.complete,
        candidates: Vec::new(),
        special: Vec::new(),
    };
    if report.cone {
        return Ok(report);
    }
    let Some(layer) = filtration.point_layer() else {
        return Ok(report);
    };
    for cluster in projective_clusters(engine, &layer.ideal)? {
        let alpha = match cluster.point() {
            Some(p) => Some(generic_alpha(engine, f, p, seed, crate::polar::DEFAULT_TRIALS).map_err(
                |e| match e {
                    Error::GenericityFailure(m) => Error::GenericityFailure(format!("special point: {m}")),
                    other => other,
                },
            )?),
            None => None,
        };
        if let (Some(p), Some(a)) = (cluster.point(), &alpha) {
            if a.value > 0 {
                report.special.push(p.to_vec());
            }
        }
        report.candidates.push(Candidate { cluster, alpha });
    }
    Ok(report)
}
