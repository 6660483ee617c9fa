use cremona_core::rational::q;
use cremona_poly::cremona::Cremona;
use cremona_poly::dual::{dual_config, projective_equivalence, sends, LINE_QUARTICS};
use cremona_poly::geometry::same_point;
use cremona_poly::Fixture;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn dual_configuration_on_fixtures() {
    for fx in [Fixture::B, Fixture::D, Fixture::E] {
        let c = Cremona::new(&fx.default_config()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let d = dual_config(&c, 3, &mut rng).unwrap();
        let e = |i: usize| (0..4).map(|k| q((k == i) as i64)).collect::<Vec<_>>();
        assert!(same_point(d.q.point(0), &e(1)));
        assert!(same_point(d.q.point(3), &e(3)));
        assert!(same_point(d.q.point(4), &e(2)));
        for a in LINE_QUARTICS {
            assert!(d.fitted[a].same(&d.algebraic[a]), "l_{a} on {}", fx.name());
        }
        let q2 = d.q.point(2);
        assert!(["12", "24", "25"].iter().all(|a| d.fitted[*a].contains(q2)));
        assert!(sends(&d.m, &c.config, &d.q));
        assert!(!d.m.determinant().is_zero());
    }
}

#[test]
fn no_equivalence_for_mismatched_points() {
    let p = Fixture::B.default_config();
    let mut r = p.clone();
    r.points.swap(0, 1);
    r.points[5] = vec![q(1), q(2), q(3), q(5)];
    assert!(projective_equivalence(&p, &r).is_err());
}
