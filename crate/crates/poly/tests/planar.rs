use cremona_poly::anticanonical::check_anticanonical;
use cremona_poly::error::PolyError;
use cremona_poly::planar::{conic_instance, planar_quartic_dim, random_instance};
use cremona_poly::Fixture;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn planar_dimension_is_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let o = planar_quartic_dim(&random_instance(&mut rng)).unwrap();
        assert!(o.passed(), "{o:?}");
    }
}

#[test]
fn hypothesis_clauses_are_reported() {
    let e = planar_quartic_dim(&conic_instance()).unwrap_err();
    assert!(matches!(&e, PolyError::Hypothesis(m) if m.starts_with("clause 3")), "{e}");
    let mut pts = conic_instance();
    pts[2] = vec![pts[0][0].clone() + &pts[1][0], pts[0][1].clone() + &pts[1][1], pts[0][2].clone()];
    assert!(matches!(planar_quartic_dim(&pts), Err(PolyError::Hypothesis(m)) if m.starts_with("clause 1")));
    let mut pts = conic_instance();
    pts[3] = vec![pts[0][0].clone(), pts[1][1].clone(), pts[0][2].clone()];
    assert!(matches!(planar_quartic_dim(&pts), Err(PolyError::Hypothesis(m)) if m.starts_with("clause 2")));
}

#[test]
fn anticanonical_on_a() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let o = check_anticanonical(&Fixture::A.default_config(), 100, &mut rng).unwrap();
    assert!(o.passed(), "{o:?}");
    let expect: Vec<_> = [8, -2, -4, 1, 2].iter().map(|&n| cremona_core::rational::q(n)).collect();
    assert_eq!(o.coefficients, expect);
    for _ in 0..3 {
        let cfg = Fixture::A.random_config(&mut rng);
        assert!(check_anticanonical(&cfg, 20, &mut rng).unwrap().passed(), "{:?}", cfg.params);
    }
}
