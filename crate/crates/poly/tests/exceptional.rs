use cremona_poly::cremona::Cremona;
use cremona_poly::dims::{d_certificate, d_minus_e4_certificate, pencils};
use cremona_poly::exceptional::{check_chart, e4_conics, CHARTS};
use cremona_poly::Fixture;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn charts_do_not_contract_the_quartics() {
    let c = Cremona::new(&Fixture::B.default_config()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for chart in &CHARTS {
        let o = check_chart(&c, chart, 20, &mut rng).unwrap();
        assert!(o.passed(), "{o:?}");
    }
}

#[test]
fn conics_over_p4() {
    let c = Cremona::new(&Fixture::C.default_config()).unwrap();
    let e = e4_conics(&c).unwrap();
    assert!(e.passed(), "{e:?}");
}

#[test]
fn section_dimensions() {
    let c = Cremona::new(&Fixture::B.default_config()).unwrap();
    assert_eq!(d_certificate(&c).unwrap().exact(), Some(4));
    assert_eq!(d_minus_e4_certificate(&c).unwrap().exact(), Some(3));
}

#[test]
fn quintic_pencils() {
    let c = Cremona::new(&Fixture::B.default_config()).unwrap();
    let out = pencils(&c).unwrap();
    assert_eq!(out.len(), 6);
    for p in out {
        assert!(p.passed(), "{p:?}");
    }
}
