use cremona_poly::cremona::Cremona;
use cremona_poly::dual::dual_config;
use cremona_poly::geometry::same_point;
use cremona_poly::rnc::{
    alpha_formula, forbidden_values, image_curve_point, psi_on_curve_scalars, rnc_restrict, special_parameters, RNC_TABLE,
};
use cremona_poly::Fixture;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(cfg: &cremona_poly::PointConfig) {
    let c = Cremona::new(cfg).unwrap();
    let t = rnc_restrict(&c).unwrap();
    assert_eq!(t.rows.len(), RNC_TABLE.len());
    let (a, b, cc) = cfg.abc().unwrap();
    assert_eq!(Some(t.alpha.clone()), alpha_formula(&a, &b, &cc));
    assert!(!forbidden_values(&a, &b, &cc).contains(&t.alpha));
    assert!(psi_on_curve_scalars(&c, &t).unwrap().is_some());
}

#[test]
fn restrictions_on_default_d() {
    let cfg = Fixture::D.default_config();
    check(&cfg);
    let c = Cremona::new(&cfg).unwrap();
    let t = rnc_restrict(&c).unwrap();
    assert_eq!(t.alpha.to_string(), "5/3");
}

#[test]
fn restrictions_on_random_d() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..3 {
        check(&Fixture::D.random_config(&mut rng));
    }
}

#[test]
fn image_points_sit_at_special_parameters() {
    let cfg = Fixture::D.default_config();
    let c = Cremona::new(&cfg).unwrap();
    let t = rnc_restrict(&c).unwrap();
    let lam = psi_on_curve_scalars(&c, &t).unwrap().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let d = dual_config(&c, 3, &mut rng).unwrap();
    let params = special_parameters(&t);
    let expected = ["-alpha", "0", "infinity", "-beta", "-gamma", "-1"];
    for (i, name) in expected.iter().enumerate() {
        let (_, [u, v]) = params.iter().find(|(n, _)| n == name).unwrap();
        assert!(same_point(&image_curve_point(&t, &lam, u, v), d.q.point(i)), "q_{i}");
    }
}

#[test]
fn alpha_formula_rejects_degenerate_parameters() {
    let q = |n: i64| cremona_core::rational::q(n);
    assert_eq!(alpha_formula(&q(2), &q(1), &q(5)), None);
    assert_eq!(alpha_formula(&q(2), &q(3), &q(2)), None);
    // c = 1 gives alpha = 0.
    assert_eq!(alpha_formula(&q(2), &q(3), &q(1)), None);
}
