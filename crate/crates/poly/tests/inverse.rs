use cremona_core::divisor::BETA;
use cremona_poly::cremona::Cremona;
use cremona_poly::dual::dual_config;
use cremona_poly::exceptional::check_jacobian;
use cremona_poly::expr::{CheckOptions, Expr, Mode};
use cremona_poly::inverse::{check_fusion, check_plane_fusion, composite_linearity, psi_exprs, target_quartics};
use cremona_poly::jacobian::jacobian_det;
use cremona_poly::multipoly::{p3_vars, parse_poly};
use cremona_poly::Fixture;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn jacobian_examples() {
    let p = |s: &str| parse_poly(p3_vars(), s).unwrap();
    assert_eq!(jacobian_det(&[p("x0"), p("x1"), p("x2"), p("x3")]), p("1"));
    assert_eq!(jacobian_det(&[p("x0^2"), p("x1"), p("x2"), p("x3")]), p("2*x0"));
}

#[test]
fn jacobian_of_psi_factors() {
    let c = Cremona::new(&Fixture::B.default_config()).unwrap();
    assert_eq!(Expr::JacobianDet(psi_exprs(&c)).degree(), 48);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let sampled = check_jacobian(&c, CheckOptions::default(), &mut rng).unwrap();
    assert!(sampled.holds && sampled.samples == 40);
    let expanded = check_jacobian(&c, CheckOptions { mode: Mode::Expand, ..CheckOptions::default() }, &mut rng).unwrap();
    assert!(expanded.holds);
}

#[test]
fn fusion_and_composite() {
    let c = Cremona::new(&Fixture::B.default_config()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d = dual_config(&c, 3, &mut rng).unwrap();
    let g = target_quartics(&d.q).unwrap();
    for beta in BETA {
        let o = check_fusion(&c, &g, beta, CheckOptions::default(), &mut rng).unwrap();
        assert!(o.holds, "g_{beta}(psi)");
        assert_eq!(o.degree, 52);
    }
    for i in 0..4 {
        assert!(check_plane_fusion(&c, &d.q, i, CheckOptions::default(), &mut rng).unwrap().holds, "plane {i}");
    }
    let o = composite_linearity(&c, &d.q, &g, 5, 20, &mut rng).unwrap();
    assert_eq!(o.reproduced, 20);
    assert!(o.invertible && o.matches_planes);
}

#[test]
fn fusion_fails_for_a_wrong_exponent() {
    let c = Cremona::new(&Fixture::B.default_config()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let d = dual_config(&c, 3, &mut rng).unwrap();
    let g = target_quartics(&d.q).unwrap();
    let lhs = Expr::poly(&g["05"]).compose(psi_exprs(&c));
    let rhs = Expr::poly(c.f("0")).pow(13);
    let o = cremona_poly::expr::identity_check(&lhs, &rhs, 4, CheckOptions::default(), &mut rng).unwrap();
    assert!(!o.holds);
}
