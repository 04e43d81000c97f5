use proptest::prelude::*;

use polardeg_core::ideal::radical_contains;
use polardeg_core::infinity::{beta_total, AffinePicture};
use polardeg_core::linear::mix_seed;
use polardeg_core::projective::{projective_clusters, ProjectiveCluster};
use polardeg_core::rational::normalize_projective;
use polardeg_core::transversality::{
    alpha_at_point, check_admissible, generic_alpha, non_transversality_points, singular_filtration, special_points,
};
use polardeg_core::{
    parse_polynomial, sample_generic_form, CoordinateChange, Engine, Error, Ideal, LinearForm, Polynomial, Rational,
    Ring,
};

fn poly(src: &str, vars: &[&str]) -> Polynomial {
    parse_polynomial(src, &Ring::new(vars)).unwrap()
}

const XYZ: &[&str] = &["x", "y", "z"];
const XYZW: &[&str] = &["x", "y", "z", "w"];

/// `(f, special point)` pairs with `α_p(V) > 0`.
fn special_cases() -> Vec<(Polynomial, Vec<i64>)> {
    vec![
        (poly("x*(x*y + z^2)", XYZ), vec![0, 1, 0]),
        (poly("x*(x*y + z^2) - z^3", XYZ), vec![0, 1, 0]),
        (poly("y^2*z - x^3 - x^2*z", XYZ), vec![0, 0, 1]),
        (poly("x*y*z", XYZ), vec![0, 0, 1]),
        (poly("x^2*z + x*y*w + y^3", XYZW), vec![0, 0, 1, 0]),
        (poly("x^2*z + y^2*w", XYZW), vec![0, 0, 0, 1]),
    ]
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&c| Rational::from_integer(c.into())).collect()
}

fn rational_points(cs: &[ProjectiveCluster]) -> Vec<Vec<Rational>> {
    let mut v: Vec<Vec<Rational>> = cs.iter().filter_map(|c| c.point().map(|p| p.to_vec())).collect();
    v.sort();
    v
}

fn random_change(n: usize, entries: &[i64]) -> Option<CoordinateChange> {
    let rows: Vec<&[i64]> = entries[..n * n].chunks(n).collect();
    CoordinateChange::from_integers(&rows).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sectional_milnor_numbers_dominate_the_generic_one(k in 0usize..6, seed in any::<u64>()) {
        let (f, p) = &special_cases()[k];
        let e = Engine::default();
        let p = ints(p);
        let generic = generic_alpha(&e, f, &p, 1, 3).unwrap().value;
        prop_assert!(generic > 0);
        let form = sample_generic_form(f.ring().nvars(), seed, Some(&p)).unwrap();
        if check_admissible(&e, f, &form).unwrap().is_admissible() {
            let a = alpha_at_point(&e, f, &p, &form).unwrap();
            prop_assert!(a >= generic, "alpha {} below generic {}", a, generic);
        }
    }

    #[test]
    fn alpha_vanishes_off_the_non_transversality_points(k in 0usize..4, seed in any::<u64>()) {
        // plane curves: V ∩ ℋ is finite, so its rational points can be listed
        let (f, _) = &special_cases()[k];
        let e = Engine::default();
        let form = LinearForm::from_integers(&[1, 2, (seed % 7) as i64 - 3]).unwrap();
        let nt = non_transversality_points(&e, f, &form).unwrap();
        prop_assume!(nt.is_finite());
        let special = nt.rational_points();
        let section = Ideal::new(f.ring(), vec![f.clone(), form.to_polynomial(f.ring()).unwrap()]).unwrap();
        for pc in projective_clusters(&e, &section).unwrap() {
            if let Some(p) = pc.point() {
                let a = alpha_at_point(&e, f, p, &form).unwrap();
                let listed = special.iter().any(|q| normalize_projective(q) == normalize_projective(p));
                prop_assert!(listed || a == 0, "alpha {} at unlisted point {:?}", a, p);
            }
        }
    }

    #[test]
    fn non_transversality_points_follow_coordinate_changes(
        k in 0usize..6,
        entries in prop::collection::vec(-2i64..=2, 16),
        seed in any::<u64>(),
    ) {
        let (f, _) = &special_cases()[k];
        let n = f.ring().nvars();
        let m = random_change(n, &entries);
        prop_assume!(m.is_some());
        let m = m.unwrap();
        let e = Engine::default();
        let form = sample_generic_form(n, seed, None).unwrap();
        let before = non_transversality_points(&e, f, &form).unwrap();
        let g = m.apply(f).unwrap();
        let after = non_transversality_points(&e, &g, &m.pull_back_form(&form)).unwrap();
        prop_assert_eq!(before.dimension, after.dimension);
        if let (Some(b), Some(a)) = (&before.points, &after.points) {
            let mut moved: Vec<Vec<Rational>> = rational_points(a)
                .iter()
                .map(|p| normalize_projective(&m.map_point(p)).unwrap())
                .collect();
            moved.sort();
            prop_assert_eq!(moved, rational_points(b));
            let deg = |cs: &[ProjectiveCluster]| cs.iter().map(|c| c.cluster.degree).sum::<usize>();
            prop_assert_eq!(deg(a), deg(b));
        }
    }

    #[test]
    fn filtration_layers_shrink_and_nest(k in 0usize..6, entries in prop::collection::vec(-2i64..=2, 16)) {
        let (f, _) = &special_cases()[k];
        let m = random_change(f.ring().nvars(), &entries);
        prop_assume!(m.is_some());
        let g = m.unwrap().apply(f).unwrap();
        let e = Engine::default();
        let filt = singular_filtration(&e, &g).unwrap();
        let dims = filt.dimensions();
        prop_assert!(dims.windows(2).all(|w| w[1] < w[0]), "{:?}", dims);
        for w in filt.layers.windows(2) {
            // V(next) ⊂ V(layer)
            for h in w[0].ideal.gens() {
                prop_assert!(radical_contains(&e, &w[1].ideal, h).unwrap());
            }
        }
    }

    #[test]
    fn points_at_infinity_lie_on_the_section_and_carry_positive_lambda(k in 0usize..6, seed in any::<u64>()) {
        let (f, _) = &special_cases()[k];
        let e = Engine::default();
        let form = sample_generic_form(f.ring().nvars(), mix_seed(seed, 3), None).unwrap();
        prop_assume!(check_admissible(&e, f, &form).unwrap().is_admissible());
        let pic = AffinePicture::new(f, &form).unwrap();
        prop_assert_eq!(pic.affine.degree(), f.degree());
        let b = beta_total(&e, f, &form, seed).unwrap();
        let on_section = |p: &[Rational]| {
            f.evaluate(p).unwrap() == Rational::from_integer(0.into())
                && form.evaluate(p).unwrap() == Rational::from_integer(0.into())
        };
        for s in &b.t_singularities {
            prop_assert!(s.lambda >= 1);
            if let Some(p) = &s.point {
                prop_assert!(on_section(p));
            }
        }
        for s in &b.t_regular {
            prop_assert_eq!(s.lambda, 0);
        }
        for p in b.zero_fibre.iter().flatten() {
            prop_assert!(on_section(p));
        }
        let partition: usize = b.affine_critical.clusters.iter().map(|c| c.degree * c.multiplicity).sum();
        prop_assert_eq!(partition, b.beta_aff);
    }
}

#[test]
fn hyperplane_inside_the_hypersurface_is_refused() {
    let f = poly("x*(x*y + z^2)", XYZ);
    let x = LinearForm::coordinate(3, 0);
    assert!(matches!(AffinePicture::new(&f, &x), Err(Error::HyperplaneInHypersurface)));
}

#[test]
fn isolated_singularities_are_exactly_the_special_points() {
    let e = Engine::default();
    for (src, sing) in [
        ("x*(x*y + z^2)", vec![vec![0, 1, 0]]),
        ("y^2*z - x^3 - x^2*z", vec![vec![0, 0, 1]]),
        ("y^2*z - x^3", vec![vec![0, 0, 1]]),
        ("x*y*z", vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]),
        ("z*(x*y - z^2)", vec![vec![0, 1, 0], vec![1, 0, 0]]),
        ("x^3 + y^3 + z^3", vec![]),
    ] {
        let f = poly(src, XYZ);
        let mut want: Vec<Vec<Rational>> = sing.iter().map(|p| ints(p)).collect();
        want.sort();
        let filt = singular_filtration(&e, &f).unwrap();
        let singular = match filt.layers.get(1) {
            Some(l) if l.dimension >= 0 => rational_points(&projective_clusters(&e, &l.ideal).unwrap()),
            _ => vec![],
        };
        assert_eq!(singular, want, "{src}");
        let mut special = special_points(&e, &f, 1).unwrap().special;
        special.sort();
        assert_eq!(special, want, "{src}");
    }
}
