//! The decomposition `pol(V) = α(V, ℋ) + β(V, ℋ)` end to end.

use std::time::{Duration, Instant};

use polardeg_core::groebner::DEFAULT_STEP_BUDGET;
use polardeg_core::ideal::{gb, squarefree_part};
use polardeg_core::infinity::{beta_total, BetaReport};
use polardeg_core::polar::{cone_apex_set, pol_degree, polar_degree_bound, ConeTestResult, GenericValue, DEFAULT_TRIALS};
use polardeg_core::projective::ProjectiveCluster;
use polardeg_core::transversality::{
    alpha_at_cluster, check_admissible_with, hyperplane_in_hypersurface, singular_filtration, special_points_with,
    AdmissibilityReport, Filtration, SpecialPointReport,
};
use polardeg_core::{Engine, Error, Ideal, LinearForm, Polynomial, Result};

use crate::input::InputSpec;

pub const DEFAULT_SEED: u64 = 1;
pub const BUDGET_VAR: &str = "POLARDEG_STEP_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub seed: u64,
    pub trials: usize,
    pub step_budget: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl Settings {
    /// Defaults, then the input file, then `POLARDEG_STEP_BUDGET`.
    pub fn for_input(spec: &InputSpec) -> std::result::Result<Self, String> {
        let mut s = Settings::default();
        if let Some(seed) = spec.seed {
            s.seed = seed;
        }
        if let Some(t) = spec.trials {
            s.trials = t;
        }
        if let Ok(v) = std::env::var(BUDGET_VAR) {
            s.step_budget = v
                .trim()
                .parse()
                .map_err(|_| format!("{BUDGET_VAR} must be a positive integer, got '{v}'"))?;
        }
        Ok(s)
    }

    pub fn engine(&self) -> Engine {
        Engine::new(self.step_budget)
    }
}

/// The polynomial actually worked with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prepared {
    pub f: Polynomial,
    /// `f` had repeated factors and was replaced by its squarefree part.
    pub reduced: bool,
}

pub fn prepare(engine: &Engine, f: &Polynomial) -> Result<Prepared> {
    let g = squarefree_part(engine, f)?;
    if g.degree() == f.degree() {
        Ok(Prepared {
            f: f.clone(),
            reduced: false,
        })
    } else {
        Ok(Prepared {
            f: g.primitive(),
            reduced: true,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaPoint {
    pub cluster: ProjectiveCluster,
    /// Per geometric point of the cluster.
    pub alpha: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Failed,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, holds: bool, detail: String) -> Self {
        Check {
            name,
            status: if holds { CheckStatus::Pass } else { CheckStatus::Failed },
            detail,
        }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        Check {
            name,
            status: CheckStatus::NotApplicable,
            detail: why.to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub f: Polynomial,
    pub reduced: bool,
    pub hyperplane: LinearForm,
    pub seed: u64,
    pub pol: GenericValue,
    pub cone: ConeTestResult,
    pub filtration: Filtration,
    pub admissibility: AdmissibilityReport,
    /// `None` unless admissible.
    pub alpha: Option<usize>,
    pub alpha_points: Vec<AlphaPoint>,
    pub beta: Option<BetaReport>,
    pub special: SpecialPointReport,
    pub checks: Vec<Check>,
    /// Gröbner bases of the intermediate ideals, filled when a check fails.
    pub audit: Vec<(String, Vec<Polynomial>)>,
    pub timings: Vec<(&'static str, Duration)>,
}

impl DecompositionReport {
    pub fn admissible(&self) -> bool {
        self.admissibility.is_admissible()
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Failed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Clock(Vec<(&'static str, Duration)>);

impl Clock {
    fn run<T>(&mut self, name: &'static str, job: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = job();
        self.0.push((name, start.elapsed()));
        out
    }
}

/// Runs every stage for `f` (already prepared) and `form`. A non-admissible
/// hyperplane is not an error: the report carries the verdict and no α/β.
pub fn decompose(
    engine: &Engine,
    prepared: &Prepared,
    form: &LinearForm,
    settings: &Settings,
) -> Result<DecompositionReport> {
    let f = &prepared.f;
    if hyperplane_in_hypersurface(f, form)? {
        return Err(Error::HyperplaneInHypersurface);
    }
    let mut clock = Clock(Vec::new());
    let seed = settings.seed;
    let filtration = clock.run("filtration", || singular_filtration(engine, f))?;
    let admissibility = clock.run("admissibility", || check_admissible_with(engine, f, &filtration, form))?;
    let pol = clock.run("pol", || pol_degree(engine, f, seed, settings.trials))?;
    let cone = cone_apex_set(f)?;
    let special = clock.run("special points", || special_points_with(engine, f, &filtration, seed))?;

    let mut alpha = None;
    let mut alpha_points = Vec::new();
    let mut beta = None;
    if admissibility.is_admissible() {
        let points = admissibility.non_transversality.points.clone().unwrap_or_default();
        let total = clock.run("alpha", || {
            let mut total = 0;
            for pc in points {
                let a = alpha_at_cluster(engine, f, form, &pc)?;
                total += a * pc.cluster.degree;
                alpha_points.push(AlphaPoint { cluster: pc, alpha: a });
            }
            Ok(total)
        })?;
        alpha = Some(total);
        beta = Some(clock.run("beta", || beta_total(engine, f, form, seed))?);
    }

    let mut report = DecompositionReport {
        f: f.clone(),
        reduced: prepared.reduced,
        hyperplane: form.clone(),
        seed,
        pol,
        cone,
        filtration,
        admissibility,
        alpha,
        alpha_points,
        beta,
        special,
        checks: Vec::new(),
        audit: Vec::new(),
        timings: Vec::new(),
    };
    report.checks = checks(&report);
    if report.failed() {
        report.audit = clock.run("audit", || audit(engine, &report))?;
    }
    report.timings = clock.0;
    Ok(report)
}

fn checks(r: &DecompositionReport) -> Vec<Check> {
    let pol = r.pol.value;
    let mut out = Vec::new();
    match (r.alpha, &r.beta) {
        (Some(a), Some(b)) => {
            let beta = b.beta_total();
            out.push(Check::new(
                "identity",
                pol == a + beta,
                format!("pol {pol} = alpha {a} + beta {beta} ({} + {})", b.beta_aff, b.beta_inf),
            ));
        }
        _ => out.push(Check::skipped("identity", "hyperplane not admissible")),
    }
    out.extend(bound_checks(r.f.degree().unwrap_or(0), r.f.ring().nvars() - 1, pol, &r.special, &r.filtration));
    out
}

/// The special-point bound, Huh's bound and `pol ≤ (d − 1)^n`.
pub fn bound_checks(
    d: u32,
    n: usize,
    pol: usize,
    special: &SpecialPointReport,
    filtration: &Filtration,
) -> Vec<Check> {
    let mut out = Vec::new();
    let alphas: Vec<usize> = special
        .candidates
        .iter()
        .filter_map(|c| c.alpha.as_ref().map(|a| a.value))
        .collect();
    let max_alpha = alphas.iter().copied().max().unwrap_or(0);
    if special.cone {
        out.push(Check::skipped("special_bound", "cone"));
    } else {
        out.push(Check::new(
            "special_bound",
            pol >= max_alpha,
            format!("pol {pol} >= max alpha_p(V) {max_alpha}"),
        ));
    }
    let isolated = filtration.layers.get(1).is_none_or(|l| l.dimension <= 0);
    let all_rational = special.candidates.iter().all(|c| c.alpha.is_some());
    if special.cone {
        out.push(Check::skipped("huh_bound", "cone"));
    } else if !isolated {
        out.push(Check::skipped("huh_bound", "non-isolated singularities"));
    } else if !all_rational {
        out.push(Check::skipped("huh_bound", "singular points without rational coordinates"));
    } else {
        out.push(Check::new(
            "huh_bound",
            pol >= max_alpha,
            format!("pol {pol} >= max over Sing(V) of mu<n-2> {max_alpha}"),
        ));
    }
    match polar_degree_bound(d, n) {
        Some(b) => out.push(Check::new(
            "degree_bound",
            (pol as u64) <= b,
            format!("pol {pol} <= (d-1)^n = {b}"),
        )),
        None => out.push(Check::skipped("degree_bound", "bound overflows u64")),
    }
    out
}

fn audit(engine: &Engine, r: &DecompositionReport) -> Result<Vec<(String, Vec<Polynomial>)>> {
    let mut named: Vec<(String, Ideal)> = Vec::new();
    for (i, l) in r.filtration.layers.iter().enumerate() {
        named.push((format!("filtration layer {i}"), l.ideal.clone()));
    }
    for l in &r.admissibility.non_transversality.loci {
        named.push((format!("non-transversality locus on layer {}", l.layer), l.ideal.clone()));
    }
    named.push(("polar locus of the hyperplane".into(), r.admissibility.polar.ideal.clone()));
    if let Some(b) = &r.beta {
        named.push(("affine critical scheme".into(), b.affine_critical.ideal.clone()));
        for (i, t) in b.t_singularities.iter().chain(&b.t_regular).enumerate() {
            named.push((format!("t-candidate {i}"), t.cluster.cluster.ideal.clone()));
        }
    }
    named
        .into_iter()
        .map(|(name, ideal)| Ok((name, gb(engine, &ideal)?.basis().to_vec())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    #[test]
    fn squarefree_reduction() {
        let e = Engine::default();
        let spec = parse_input("vars: x y\nf: x^2*y^2").unwrap();
        let p = prepare(&e, &spec.f).unwrap();
        assert!(p.reduced);
        assert_eq!(p.f.to_string(), "x*y");
        let spec = parse_input("vars: x y z\nf: x*(x*y+z^2)").unwrap();
        assert!(!prepare(&e, &spec.f).unwrap().reduced);
    }

    #[test]
    fn settings_from_file() {
        let spec = parse_input("f: x*y\nseed: 9\ntrials: 2").unwrap();
        let s = Settings::for_input(&spec).unwrap();
        assert_eq!((s.seed, s.trials), (9, 2));
    }
}
