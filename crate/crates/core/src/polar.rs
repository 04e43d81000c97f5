//! Polar loci, the cone test and the polar degree.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{Engine, Ideal};
use crate::ideal::{constant_row, krull_dimension, minors, quotient_dimension, saturate};
use crate::linear::{kernel, mix_seed, sample_generic_form, LinearForm};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Agreeing seeds required to certify a generic value.
pub const DEFAULT_TRIALS: usize = 3;
/// Rounds of fresh seeds before giving up.
pub const MAX_RESAMPLES: usize = 5;

/// `Γ(l̂, f)`: closure of the locus where `grad f` is proportional to `l̂`, off `{f = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarLocus {
    pub ideal: Ideal,
    pub dimension: i64,
}

impl PolarLocus {
    pub fn is_empty(&self) -> bool {
        self.dimension < 0
    }
}

/// Generators of the 2×2 minors of `[grad f; coeffs]`.
pub fn polar_minors(f: &Polynomial, coeffs: &[Rational]) -> Result<Vec<Polynomial>> {
    let ring = f.ring();
    if coeffs.len() != ring.nvars() {
        return Err(Error::PointLength {
            expected: ring.nvars(),
            got: coeffs.len(),
        });
    }
    let rows = alloc::vec![f.gradient(), constant_row(ring, coeffs)];
    minors(&rows, 2, ring)
}

pub fn polar_ideal(engine: &Engine, f: &Polynomial, form: &LinearForm) -> Result<PolarLocus> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let gens = polar_minors(f, form.coeffs())?;
    let ideal = saturate(engine, &Ideal::new(f.ring(), gens)?, f)?;
    let dimension = krull_dimension(engine, &ideal)?;
    Ok(PolarLocus { ideal, dimension })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeTestResult {
    pub is_cone: bool,
    pub apex_space: Vec<Vec<Rational>>,
}

/// Solves `Σ p_i ∂f/∂x_i ≡ 0` for `p`.
pub fn cone_apex_set(f: &Polynomial) -> Result<ConeTestResult> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let grad = f.gradient();
    let mut monos: Vec<Monomial> = Vec::new();
    for g in &grad {
        for (m, _) in g.terms() {
            if !monos.contains(m) {
                monos.push(m.clone());
            }
        }
    }
    let rows: Vec<Vec<Rational>> = monos
        .iter()
        .map(|m| grad.iter().map(|g| g.coefficient(m)).collect())
        .collect();
    let apex_space = kernel(&rows, grad.len());
    Ok(ConeTestResult {
        is_cone: !apex_space.is_empty(),
        apex_space,
    })
}

/// Length of `locus + ⟨h − 1⟩`, or `None` when that slice is not finite.
pub fn slice_degree(engine: &Engine, locus: &PolarLocus, h: &LinearForm) -> Result<Option<usize>> {
    if locus.is_empty() {
        return Ok(Some(0));
    }
    let ring = locus.ideal.ring();
    let slice = h.to_polynomial(ring)?.sub(&Polynomial::one(ring))?;
    let ideal = locus.ideal.with(&[slice])?;
    if krull_dimension(engine, &ideal)? > 0 {
        return Ok(None);
    }
    Ok(Some(quotient_dimension(engine, &ideal)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericValue {
    pub value: usize,
    pub seeds: Vec<u64>,
}

/// Runs `trial` on derived seeds until `trials` consecutive seeds of one
/// round agree; a trial returning `None` spoils its round.
pub fn certify<F>(seed: u64, trials: usize, what: &str, mut trial: F) -> Result<GenericValue>
where
    F: FnMut(u64) -> Result<Option<usize>>,
{
    let trials = trials.max(1);
    let mut history = Vec::new();
    for round in 0..MAX_RESAMPLES {
        let seeds: Vec<u64> = (0..trials)
            .map(|k| mix_seed(seed, (round * trials + k) as u64))
            .collect();
        let mut values = Vec::with_capacity(trials);
        for &s in &seeds {
            values.push(trial(s)?);
        }
        history.push(values.clone());
        if let Some(Some(v)) = values.first() {
            if values.iter().all(|x| x == &Some(*v)) {
                return Ok(GenericValue { value: *v, seeds });
            }
        }
    }
    Err(Error::GenericityFailure(format!(
        "{what}: no agreement across {MAX_RESAMPLES} rounds, saw {history:?}"
    )))
}

/// Polar degree of `{f = 0}` as `mult_0 Γ(l̂, f)` for seeded generic `l̂`.
pub fn pol_degree(engine: &Engine, f: &Polynomial, seed: u64, trials: usize) -> Result<GenericValue> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = f.ring().nvars();
    certify(seed, trials, "polar degree", |s| {
        let form = sample_generic_form(n, s, None)?;
        let locus = polar_ideal(engine, f, &form)?;
        if locus.dimension > 1 {
            return Ok(None);
        }
        slice_degree(engine, &locus, &form)
    })
}

/// `mult_0 Γ(l̂, f)` for the given `l̂`.
pub fn singular_polar_degree(
    engine: &Engine,
    f: &Polynomial,
    form: &LinearForm,
    seed: u64,
) -> Result<usize> {
    let locus = polar_ideal(engine, f, form)?;
    polar_locus_degree(engine, &locus, seed)
}

pub fn polar_locus_degree(engine: &Engine, locus: &PolarLocus, seed: u64) -> Result<usize> {
    if locus.dimension > 1 {
        return Err(Error::NonAdmissible(format!(
            "polar locus has dimension {}",
            locus.dimension
        )));
    }
    if locus.dimension <= 0 {
        return Ok(0);
    }
    let n = locus.ideal.ring().nvars();
    let v = certify(seed, DEFAULT_TRIALS, "polar slice", |s| {
        let h = sample_generic_form(n, s, None)?;
        slice_degree(engine, locus, &h)
    })?;
    Ok(v.value)
}

/// `(d − 1)^n` for a degree-`d` hypersurface in `P^n`.
pub fn polar_degree_bound(d: u32, n: usize) -> Option<u64> {
    (d.saturating_sub(1) as u64).checked_pow(n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideals_equal;
    use num_traits::Zero;
    use crate::parse::parse_polynomial;
    use crate::rational::{int, ratio};
    use crate::ring::Ring;

    fn r3() -> Ring {
        Ring::new(&["x", "y", "z"])
    }

    fn r4() -> Ring {
        Ring::new(&["x", "y", "z", "w"])
    }

    fn p(s: &str, r: &Ring) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn affine_polar_curve_through_parametrised_points() {
        let e = Engine::default();
        let r = Ring::new(&["x", "y", "w"]);
        let f = p("x^2 + x*y*w + y^3", &r);
        let locus = polar_ideal(&e, &f, &LinearForm::coordinate(3, 2)).unwrap();
        assert_eq!(locus.dimension, 1);
        let pt = [ratio(-1, 12), ratio(1, 6), int(1)];
        assert!(locus.ideal.gens().iter().all(|g| g.evaluate(&pt).unwrap().is_zero()));

        let f = p("x^2*z + y^2 - x*y^2 - y^3", &r3());
        let locus = polar_ideal(&e, &f, &LinearForm::coordinate(3, 2)).unwrap();
        let pt = [ratio(-1, 2), int(1), int(-1)];
        assert!(locus.ideal.gens().iter().all(|g| g.evaluate(&pt).unwrap().is_zero()));
    }

    #[test]
    fn empty_polar_locus() {
        let e = Engine::default();
        let f = p("x^2*z + x*y*w + y^3", &r4());
        let locus = polar_ideal(&e, &f, &LinearForm::coordinate(4, 3)).unwrap();
        assert_eq!(locus.dimension, -1);
        assert_eq!(singular_polar_degree(&e, &f, &LinearForm::coordinate(4, 3), 1).unwrap(), 0);
    }

    #[test]
    fn cone_tests() {
        let c = cone_apex_set(&p("x^2 + y^2", &r3())).unwrap();
        assert!(c.is_cone);
        assert_eq!(c.apex_space, alloc::vec![alloc::vec![int(0), int(0), int(1)]]);
        assert!(!cone_apex_set(&p("x^2*z + y^2*w", &r4())).unwrap().is_cone);
        let tilted = cone_apex_set(&p("(x - y)^3 + z^3", &r3())).unwrap();
        assert_eq!(tilted.apex_space, alloc::vec![alloc::vec![int(1), int(1), int(0)]]);
    }

    #[test]
    fn polar_degrees() {
        let e = Engine::default();
        assert_eq!(pol_degree(&e, &p("x*(x*y + z^2)", &r3()), 1, 3).unwrap().value, 1);
        assert_eq!(pol_degree(&e, &p("x^3 + y^3 + z^3", &r3()), 1, 3).unwrap().value, 4);
        assert_eq!(pol_degree(&e, &p("x^2 + y^2 + z^2", &r3()), 1, 3).unwrap().value, 1);
        assert_eq!(pol_degree(&e, &p("x^2 + y^2", &r3()), 1, 3).unwrap().value, 0);
        assert_eq!(pol_degree(&e, &p("x^2*z + y^2*w", &r4()), 1, 3).unwrap().value, 2);
    }

    #[test]
    fn fermat_singular_polar_degree() {
        let e = Engine::default();
        let f = p("x^3 + y^3 + z^3", &r3());
        let z = LinearForm::coordinate(3, 2);
        let locus = polar_ideal(&e, &f, &z).unwrap();
        let line = Ideal::new(&r3(), alloc::vec![p("x", &r3()), p("y", &r3())]).unwrap();
        assert_eq!(locus.dimension, 1);
        assert!(ideals_equal(&e, &crate::ideal::squarefree_generators(&e, &locus.ideal).unwrap(), &line).unwrap());
        // the scheme ⟨x², y²⟩ has multiplicity 4 along the line, matching β^aff
        assert_eq!(singular_polar_degree(&e, &f, &z, 5).unwrap(), 4);
        let reduced = PolarLocus {
            ideal: line,
            dimension: 1,
        };
        assert_eq!(polar_locus_degree(&e, &reduced, 5).unwrap(), 1);
    }

    #[test]
    fn bound() {
        assert_eq!(polar_degree_bound(3, 2), Some(4));
        assert_eq!(polar_degree_bound(1, 5), Some(0));
    }
}
