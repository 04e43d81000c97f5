use proptest::prelude::*;

use polardeg_core::ideal::{
    eliminate, gb, ideals_equal, quotient_dimension, saturate, squarefree_part,
};
use polardeg_core::polar::{cone_apex_set, pol_degree, polar_degree_bound, polar_ideal};
use polardeg_core::rational::int;
use polardeg_core::zerodim::{local_multiplicity, point_clusters};
use polardeg_core::{
    parse_polynomial, sample_generic_form, CoordinateChange, Engine, Ideal, Monomial, Polynomial, Rational, Ring,
};

fn ring3() -> Ring {
    Ring::new(&["x", "y", "z"])
}

fn term() -> impl Strategy<Value = (Vec<u16>, i64)> {
    (prop::collection::vec(0u16..3, 3), -5i64..=5)
}

fn poly3() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(term(), 0..6).prop_map(|ts| {
        let r = ring3();
        Polynomial::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c))).collect())
    })
}

/// Homogeneous of degree `d` in three variables.
fn homogeneous3(d: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..=d, 0..=d, -4i64..=4), 1..6).prop_map(move |ts| {
        let r = ring3();
        let terms = ts
            .into_iter()
            .filter(|(a, b, _)| a + b <= d)
            .map(|(a, b, c)| (Monomial::new([a, b, d - a - b]), int(c)))
            .collect();
        Polynomial::from_terms(&r, terms)
    })
}

fn point3() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 3)
        .prop_map(|v| v.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect())
}

fn invertible3() -> impl Strategy<Value = CoordinateChange> {
    prop::collection::vec(-2i64..=2, 9)
        .prop_filter_map("singular", |v| {
            let rows: Vec<&[i64]> = v.chunks(3).collect();
            CoordinateChange::from_integers(&rows).ok()
        })
}

fn linear(r: &Ring, c: &[i64; 4]) -> Polynomial {
    let mut p = Polynomial::constant(r, int(c[3]));
    for (i, &a) in c[..3].iter().enumerate() {
        p = p.add(&Polynomial::var(r, i).scale(&int(a))).unwrap();
    }
    p
}

/// Triangular products of linear forms: zero-dimensional with rational points.
fn zero_dim_ideal() -> impl Strategy<Value = Ideal> {
    prop::collection::vec(prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 1..3), 3).prop_map(|blocks| {
        let r = ring3();
        let gens = blocks
            .iter()
            .enumerate()
            .map(|(v, factors)| {
                factors.iter().fold(Polynomial::one(&r), |acc, &(a, b, k)| {
                    let mut c = [0i64; 4];
                    c[v] = 1;
                    if v > 0 {
                        c[0] = a;
                    }
                    if v > 1 {
                        c[1] = b;
                    }
                    c[3] = k;
                    acc.mul(&linear(&r, &c)).unwrap()
                })
            })
            .collect();
        Ideal::new(&r, gens).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse_is_identity(p in poly3()) {
        let q = parse_polynomial(&p.to_string(), p.ring()).unwrap();
        prop_assert_eq!(q, p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly3(), b in poly3(), pt in point3()) {
        let ab = a.mul(&b).unwrap().evaluate(&pt).unwrap();
        prop_assert_eq!(ab, a.evaluate(&pt).unwrap() * b.evaluate(&pt).unwrap());
        let s = a.add(&b).unwrap().evaluate(&pt).unwrap();
        prop_assert_eq!(s, a.evaluate(&pt).unwrap() + b.evaluate(&pt).unwrap());
    }

    #[test]
    fn euler_relation(f in homogeneous3(3)) {
        let r = f.ring().clone();
        let mut lhs = Polynomial::zero(&r);
        for (i, g) in f.gradient().iter().enumerate() {
            lhs = lhs.add(&Polynomial::var(&r, i).mul(g).unwrap()).unwrap();
        }
        prop_assert_eq!(lhs, f.scale(&int(3)));
    }

    #[test]
    fn chart_round_trip(f in homogeneous3(3), var in 0usize..3) {
        prop_assume!(!f.is_zero());
        prop_assume!(f.terms().iter().any(|(m, _)| m.exponents()[var] == 0));
        let g = f.dehomogenize(var).unwrap();
        let name = f.ring().name(var).to_string();
        prop_assert_eq!(g.homogenize(var, &name, 3).unwrap(), f);
    }

    #[test]
    fn coordinate_change_inverts(f in poly3(), m in invertible3()) {
        let g = m.apply(&f).unwrap();
        prop_assert_eq!(m.inverse().apply(&g).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_bases_pass_the_s_polynomial_check(gens in prop::collection::vec(homogeneous3(2), 1..4)) {
        let e = Engine::default();
        let i = Ideal::new(&ring3(), gens).unwrap();
        prop_assert!(gb(&e, &i).unwrap().verify());
    }

    #[test]
    fn combinations_of_generators_reduce_to_zero(
        gens in prop::collection::vec(poly3(), 1..3),
        mults in prop::collection::vec(poly3(), 3),
    ) {
        let e = Engine::default();
        let i = Ideal::new(&ring3(), gens.clone()).unwrap();
        let g = gb(&e, &i).unwrap();
        let mut h = Polynomial::zero(&ring3());
        for (a, q) in gens.iter().zip(&mults) {
            h = h.add(&a.mul(q).unwrap()).unwrap();
        }
        prop_assert!(g.normal_form(&h).unwrap().is_zero());
    }

    #[test]
    fn saturation_is_idempotent(gens in prop::collection::vec(homogeneous3(2), 1..3), k in 0usize..3) {
        let e = Engine::default();
        let i = Ideal::new(&ring3(), gens).unwrap();
        let x = Polynomial::var(&ring3(), k);
        let s = saturate(&e, &i, &x).unwrap();
        let ss = saturate(&e, &s, &x).unwrap();
        prop_assert!(ideals_equal(&e, &s, &ss).unwrap());
    }

    #[test]
    fn elimination_drops_the_variables(gens in prop::collection::vec(poly3(), 1..3), k in 0usize..3) {
        let e = Engine::default();
        let i = Ideal::new(&ring3(), gens).unwrap();
        let el = eliminate(&e, &i, &[k]).unwrap();
        prop_assert!(el.gens().iter().all(|g| !g.uses_variable(k)));
    }

    #[test]
    fn squarefree_part_divides_and_is_idempotent(a in homogeneous3(1), b in homogeneous3(2), k in 1u32..3) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let e = Engine::default();
        let f = a.pow(k + 1).mul(&b).unwrap();
        let s = squarefree_part(&e, &f).unwrap();
        prop_assert!(f.div_exact(&s).is_ok());
        let ss = squarefree_part(&e, &s).unwrap();
        prop_assert_eq!(ss.monic(), s.monic());
    }

    #[test]
    fn zero_dimensional_partition(i in zero_dim_ideal()) {
        let e = Engine::default();
        let scheme = point_clusters(&e, &i).unwrap();
        let total: usize = scheme.clusters.iter().map(|c| c.degree * c.multiplicity).sum();
        prop_assert_eq!(total, quotient_dimension(&e, &i).unwrap());
        for p in scheme.rational_points() {
            for g in i.gens() {
                prop_assert!(g.evaluate(p).unwrap() == int(0));
            }
        }
    }

    #[test]
    fn local_multiplicity_matches_a_fat_point_truncation(i in zero_dim_ideal()) {
        let e = Engine::default();
        let scheme = point_clusters(&e, &i).unwrap();
        let r = i.ring().clone();
        for c in scheme.clusters.iter().filter(|c| c.rational_point.is_some()) {
            let p = c.rational_point.clone().unwrap();
            let shifted: Vec<Polynomial> = (0..3)
                .map(|k| Polynomial::var(&r, k).sub(&Polynomial::constant(&r, p[k].clone())).unwrap())
                .collect();
            // dim Q[x]/(I + m^k) increases strictly until it reaches the local length
            let mut last = 0;
            for k in 1u32..12 {
                let mut power = Vec::new();
                for a in 0..=k {
                    for b in 0..=k - a {
                        let g = shifted[0].pow(a).mul(&shifted[1].pow(b)).unwrap();
                        power.push(g.mul(&shifted[2].pow(k - a - b)).unwrap());
                    }
                }
                let v = quotient_dimension(&e, &i.with(&power).unwrap()).unwrap();
                if v == last {
                    break;
                }
                last = v;
            }
            prop_assert_eq!(local_multiplicity(&e, &i, c).unwrap(), last);
        }
    }
}

/// Plane curves with known polar degree `(d − 1)² − Σ μ_p`.
const CURVES: &[(&str, usize)] = &[
    ("x*(x*y + z^2)", 1),
    ("x*(x*y + z^2) - z^3", 2),
    ("y^2*z - x^3 - x^2*z", 3),
    ("y^2*z - x^3", 2),
    ("x*y*z", 1),
    ("x^3 + y^3 + z^3", 4),
    ("x^2 + y^2 + z^2", 1),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn pol_is_invariant_under_coordinate_changes(k in 0..CURVES.len(), m in invertible3(), seed in any::<u64>()) {
        let e = Engine::default();
        let (src, expected) = CURVES[k];
        let f = parse_polynomial(src, &ring3()).unwrap();
        let g = m.apply(&f).unwrap();
        prop_assert_eq!(pol_degree(&e, &g, seed, 3).unwrap().value, expected);
    }

    #[test]
    fn pol_is_seed_stable_and_bounded(k in 0..CURVES.len(), seeds in prop::collection::vec(any::<u64>(), 3)) {
        let e = Engine::default();
        let f = parse_polynomial(CURVES[k].0, &ring3()).unwrap();
        let values: Vec<usize> = seeds.iter().map(|&s| pol_degree(&e, &f, s, 3).unwrap().value).collect();
        prop_assert!(values.iter().all(|&v| v == CURVES[k].1));
        prop_assert!(values[0] as u64 <= polar_degree_bound(3, 2).unwrap());
    }

    #[test]
    fn cones_have_polar_degree_zero(f in homogeneous3(3), m in invertible3(), seed in any::<u64>()) {
        // in four variables the result does not involve w
        prop_assume!(!f.is_zero());
        let r4 = Ring::new(&["x", "y", "z", "w"]);
        let g = m.apply(&f).unwrap().embed(&r4, &[0, 1, 2]);
        prop_assert!(cone_apex_set(&g).unwrap().is_cone);
        let e = Engine::default();
        prop_assert_eq!(pol_degree(&e, &g, seed, 3).unwrap().value, 0);
    }

    #[test]
    fn polar_ideals_are_homogeneous(k in 0..CURVES.len(), seed in any::<u64>()) {
        let e = Engine::default();
        let f = parse_polynomial(CURVES[k].0, &ring3()).unwrap();
        let form = sample_generic_form(3, seed, None).unwrap();
        let locus = polar_ideal(&e, &f, &form).unwrap();
        prop_assert!(locus.ideal.gens().iter().all(|g| g.is_homogeneous()));
    }
}
