//! Points of homogeneous ideals, read off chart by chart.
//!
//! Chart `j` sets `x_0 = … = x_{j−1} = 0` and `x_j = 1`, so every projective
//! point is found exactly once with its first nonzero coordinate equal to 1.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Result;
use crate::groebner::{Engine, Ideal};
use crate::ideal::krull_dimension;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::zerodim::{point_clusters, PointCluster};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveCluster {
    pub chart: usize,
    pub cluster: PointCluster,
}

impl ProjectiveCluster {
    pub fn point(&self) -> Option<&[Rational]> {
        self.cluster.rational_point.as_deref()
    }
}

/// Ideal of chart `j`: adds `x_0, …, x_{j−1}` and `x_j − 1`.
pub fn chart_ideal(ideal: &Ideal, j: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut extra: Vec<Polynomial> = (0..j).map(|i| Polynomial::var(ring, i)).collect();
    extra.push(Polynomial::var(ring, j).sub(&Polynomial::one(ring))?);
    ideal.with(&extra)
}

/// `p` with `x_j = 1` substituted, in the ring without `x_j`.
pub fn affine_chart(p: &Polynomial, j: usize) -> Result<Polynomial> {
    let ring = p.ring();
    let target = ring.remove(j);
    let images: Vec<Polynomial> = (0..ring.nvars())
        .map(|i| match i.cmp(&j) {
            core::cmp::Ordering::Less => Polynomial::var(&target, i),
            core::cmp::Ordering::Equal => Polynomial::one(&target),
            core::cmp::Ordering::Greater => Polynomial::var(&target, i - 1),
        })
        .collect();
    p.compose(&images, &target)
}

/// Representative of a projective point with `p_j = 1`, where `j` is the
/// first nonzero coordinate; `None` for the zero vector.
pub fn chart_representative(p: &[Rational]) -> Option<(usize, Vec<Rational>)> {
    let j = p.iter().position(|c| !c.is_zero())?;
    let pj = p[j].clone();
    Some((j, p.iter().map(|c| c / &pj).collect()))
}

/// Projective dimension of the zero set of a homogeneous ideal (−1 if empty).
pub fn projective_dimension(engine: &Engine, ideal: &Ideal) -> Result<i64> {
    Ok((krull_dimension(engine, ideal)? - 1).max(-1))
}

/// Points of a homogeneous ideal with finitely many projective zeros.
/// Fails with `PositiveDimensional` otherwise.
pub fn projective_clusters(engine: &Engine, ideal: &Ideal) -> Result<Vec<ProjectiveCluster>> {
    let mut out = Vec::new();
    for j in 0..ideal.ring().nvars() {
        let scheme = point_clusters(engine, &chart_ideal(ideal, j)?)?;
        out.extend(
            scheme
                .clusters
                .into_iter()
                .map(|cluster| ProjectiveCluster { chart: j, cluster }),
        );
    }
    Ok(out)
}
