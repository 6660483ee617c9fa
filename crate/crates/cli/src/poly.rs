//! Polynomial suites on a six-point configuration.

use cremona_core::divisor::{named_class, Space, ALPHA, BETA};
use cremona_core::rational::Q;
use cremona_poly::anticanonical::check_anticanonical;
use cremona_poly::cremona::Cremona;
use cremona_poly::dims::{d_certificate, d_minus_e4_certificate, pencils};
use cremona_poly::displays::{self, space_poly};
use cremona_poly::dual::{dual_config, sends, LINE_QUARTICS};
use cremona_poly::exceptional::{check_chart, check_jacobian, e4_conics, CHARTS};
use cremona_poly::expr::{CheckOptions, IdentityOutcome, Mode};
use cremona_poly::geometry::{same_point, unit};
use cremona_poly::inverse::{check_fusion, check_plane_fusion, composite_linearity, target_quartics};
use cremona_poly::lemmas::{det_n_holds, euler_holds, fake_jac_holds, generic_point, images_jac_holds, random_form};
use cremona_poly::linsys::DimensionCertificate;
use cremona_poly::planar::{planar_quartic_dim, random_instance};
use cremona_poly::quartics::{profile, profile_matches, quartic};
use cremona_poly::rnc::{alpha_formula, forbidden_values, image_curve_point, psi_on_curve_scalars, rnc_restrict, special_parameters};
use cremona_poly::{Fixture, PointConfig, PolyError};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{Report, Timer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Quartics,
    Sections,
    Jacobian,
    Fusion,
    Dual,
    Rnc,
    E4,
    Anticanonical,
    Lemmas,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Quartics => "quartics",
            Suite::Sections => "sections",
            Suite::Jacobian => "jacobian",
            Suite::Fusion => "fusion",
            Suite::Dual => "dual",
            Suite::Rnc => "rnc",
            Suite::E4 => "e4",
            Suite::Anticanonical => "anticanonical",
            Suite::Lemmas => "lemmas",
        }
    }

    /// The placement a suite runs on when no configuration is given.
    pub fn default_fixture(self) -> Fixture {
        match self {
            Suite::Quartics | Suite::Sections | Suite::Jacobian | Suite::Fusion => Fixture::B,
            Suite::Dual | Suite::Rnc => Fixture::D,
            Suite::E4 => Fixture::C,
            Suite::Anticanonical | Suite::Lemmas => Fixture::A,
        }
    }

    /// The placement the suite's displayed formulas are written in, if any.
    pub fn required_fixture(self) -> Option<Fixture> {
        match self {
            Suite::Rnc => Some(Fixture::D),
            Suite::E4 => Some(Fixture::C),
            Suite::Anticanonical => Some(Fixture::A),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PolyOptions {
    pub seed: u64,
    pub mode: Mode,
    pub samples: usize,
    pub timing: bool,
}

impl Default for PolyOptions {
    fn default() -> Self {
        PolyOptions { seed: 0, mode: Mode::Sample, samples: 40, timing: false }
    }
}

impl PolyOptions {
    fn check(&self) -> CheckOptions {
        CheckOptions { mode: self.mode, samples: self.samples, ..CheckOptions::default() }
    }
}

/// The fixture whose coordinate placement `cfg` is, judged by its name and parameters.
pub fn placement(cfg: &PointConfig) -> Option<Fixture> {
    let f = Fixture::parse(&cfg.name).ok()?;
    let (a, b, c) = cfg.abc().ok()?;
    (f.build(a, b, c).points == cfg.points).then_some(f)
}

/// Rationals print as `p` or `p/q`.
fn qs(x: &Q) -> String {
    x.to_string()
}

fn point_json(p: &[Q]) -> Value {
    json!(p.iter().map(qs).collect::<Vec<_>>())
}

fn identity_json(o: &IdentityOutcome, mode: Mode) -> Value {
    json!({
        "mode": if mode == Mode::Expand { "expand" } else { "sample" },
        "samples": o.samples,
        "resampled": o.resampled,
        "degree": o.degree,
        "scalar": o.scalar.as_ref().map(qs),
        "false_accept_bound": qs(&o.bound),
    })
}

fn cert_json(c: &DimensionCertificate) -> Value {
    json!({ "upper": c.upper, "lower": c.lower, "rows": c.rows, "columns": c.columns })
}

/// Run one suite. Configuration errors and arithmetic failures are returned;
/// failed checks are recorded in the report.
pub fn run(suite: Suite, cfg: &PointConfig, opts: PolyOptions) -> Result<Report, PolyError> {
    if let Some(f) = suite.required_fixture() {
        if placement(cfg) != Some(f) {
            return Err(PolyError::Degenerate(format!("the {} suite needs placement {}", suite.name(), f.name())));
        }
    }
    if suite != Suite::Lemmas {
        cfg.check_general_position()?;
    }
    let mut rep = Report::new(&format!("poly {}", suite.name()), Some(opts.seed));
    let mut timer = Timer::new(opts.timing);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    match suite {
        Suite::Quartics => quartics(cfg, &mut rep, &mut timer)?,
        Suite::Sections => sections(cfg, opts, &mut rng, &mut rep, &mut timer)?,
        Suite::Jacobian => {
            let c = Cremona::new(cfg)?;
            let o = timer.time("jacobian", || check_jacobian(&c, opts.check(), &mut rng))?;
            rep.push(
                "poly.jacobian",
                "polyexact: det J(ψ) = f_0² f_3² f_4² f_05 f_13 f_24 f_12 f_15 f_25",
                o.holds,
                identity_json(&o, opts.mode),
            );
        }
        Suite::Fusion => fusion(cfg, opts, &mut rng, &mut rep, &mut timer)?,
        Suite::Dual => dual(cfg, &mut rng, &mut rep, &mut timer)?,
        Suite::Rnc => rnc(cfg, &mut rng, &mut rep, &mut timer)?,
        Suite::E4 => {
            let c = Cremona::new(cfg)?;
            let e = timer.time("e4", || e4_conics(&c))?;
            let src = "polyexact: tangent cones of f_12 and f_24 at p_4";
            rep.push("poly.e4.h12", src, e.h12_matches, json!({ "h12": e.h12.to_string() }));
            rep.push("poly.e4.h24", src, e.h24_matches, json!({ "h24": e.h24.to_string() }));
            rep.push(
                "poly.e4.point",
                "polyexact: the second point of h_12 on bY = aZ lies on h_24",
                e.point_matches && e.on_h24,
                json!({ "point": point_json(&e.point), "matches_display": e.point_matches, "on_h24": e.on_h24 }),
            );
        }
        Suite::Anticanonical => {
            let o = timer.time("anticanonical", || check_anticanonical(cfg, opts.samples, &mut rng))?;
            rep.push(
                "poly.anticanonical",
                "polyexact: h⁰(−K_X) = 1 and S′ is singular exactly at the six points",
                o.passed(),
                json!({
                    "dimension": o.dimension,
                    "coefficients": o.coefficients.iter().map(qs).collect::<Vec<_>>(),
                    "matches_display": o.matches_display,
                    "m_rank": o.m_rank,
                    "m_kills_g": o.m_kills_g,
                    "rows_match": o.rows_match,
                    "gradient_zero_at_points": o.gradient_zero_at_points,
                    "nonsingular_samples": o.nonsingular_samples,
                    "samples": o.samples,
                }),
            );
        }
        Suite::Lemmas => lemmas(opts, &mut rng, &mut rep, &mut timer)?,
    }
    timer.finish(&mut rep);
    Ok(rep)
}

fn quartics(cfg: &PointConfig, rep: &mut Report, timer: &mut Timer) -> Result<(), PolyError> {
    for alpha in ALPHA {
        let id = format!("poly.quartics.Q_{alpha}");
        let (f, prof) = timer.time(&id, || -> Result<_, PolyError> {
            let f = quartic(alpha, cfg)?;
            let class = named_class(&format!("Q_{alpha}"), Space::Y)?;
            let prof = profile(&f, &class, cfg)?;
            Ok((f, prof))
        })?;
        let bad: Vec<String> = prof
            .iter()
            .filter(|e| e.expected != e.measured)
            .map(|e| format!("{}: expected {}, measured {}", e.generator, e.expected, e.measured))
            .collect();
        rep.push(&id, "polyexact: the unique quartic of class Q_α has the prescribed multiplicities", profile_matches(&prof), json!({ "terms": f.len(), "mismatches": bad }));
    }
    let displayed = [("0", displays::F0, Fixture::B), ("12", displays::F12, Fixture::C), ("24", displays::F24, Fixture::C)];
    for (alpha, text, fixture) in displayed {
        let id = format!("poly.quartics.display_f{alpha}");
        let src = "polyexact: computed quartic matches the displayed formula";
        if placement(cfg) != Some(fixture) {
            rep.push_status(&id, src, crate::report::Status::Skip, json!({ "reason": format!("formula is written for placement {}", fixture.name()) }));
            continue;
        }
        let f = quartic(alpha, cfg)?;
        rep.push(&id, src, f.proportional(&space_poly(text, cfg)?), json!({}));
    }
    Ok(())
}

fn sections(cfg: &PointConfig, opts: PolyOptions, rng: &mut ChaCha8Rng, rep: &mut Report, timer: &mut Timer) -> Result<(), PolyError> {
    let c = timer.time("normalization", || Cremona::new(cfg))?;
    let common = (1..4).all(|i| c.s[i].sub(&c.s_prime[i]) == c.s[0]);
    rep.push(
        "poly.sections.normalization",
        "polyexact: the normalized sections share s_0 = s_i − s′_i",
        common && c.s[0].degree() == Some(13) && c.abcd.iter().all(|x| !x.is_zero()),
        json!({ "constants": c.abcd.iter().map(qs).collect::<Vec<_>>() }),
    );
    let d = timer.time("d", || d_certificate(&c))?;
    rep.push("poly.sections.h0_d", "polyexact: h⁰(D) = 4", d.exact() == Some(4), cert_json(&d));
    let d4 = timer.time("d_minus_e4", || d_minus_e4_certificate(&c))?;
    rep.push("poly.sections.h0_d_minus_e4", "polyexact: h⁰(D − E_4) = 3", d4.exact() == Some(3), cert_json(&d4));
    for p in timer.time("pencils", || pencils(&c))? {
        rep.push(
            &format!("poly.sections.pencil_{}", p.class),
            "polyexact: the quintic classes D_ij and F_ij are pencils",
            p.passed(),
            json!({ "certificate": cert_json(&p.certificate), "classes_match": p.classes_match, "rank": p.rank, "entries": p.entries }),
        );
    }
    for chart in &CHARTS {
        let id = format!("poly.sections.chart_Q_{}", chart.quartic);
        let o = timer.time(&id, || check_chart(&c, chart, opts.samples, rng))?;
        rep.push(
            &id,
            "polyexact: the lifted map is étale at general points of Q_α",
            o.passed(),
            json!({
                "scalar": o.scalar.as_ref().map(qs),
                "generic_samples": o.generic_samples,
                "nonzero_on_quartic": o.nonzero_on_quartic,
                "quartic_samples": o.quartic_samples,
            }),
        );
    }
    Ok(())
}

fn fusion(cfg: &PointConfig, opts: PolyOptions, rng: &mut ChaCha8Rng, rep: &mut Report, timer: &mut Timer) -> Result<(), PolyError> {
    let c = Cremona::new(cfg)?;
    let d = timer.time("dual", || dual_config(&c, 3, rng))?;
    let g = target_quartics(&d.q)?;
    for beta in BETA {
        let id = format!("poly.fusion.g_{beta}");
        let o = timer.time(&id, || check_fusion(&c, &g, beta, opts.check(), rng))?;
        rep.push(&id, "polyexact: g_β(ψ) = Π f_α^{m(α,β)}", o.holds, identity_json(&o, opts.mode));
    }
    for i in 0..4 {
        let id = format!("poly.fusion.plane_{i}");
        let o = timer.time(&id, || check_plane_fusion(&c, &d.q, i, opts.check(), rng))?;
        rep.push(&id, "polyexact: each target plane pulls back to a plane times three quartics", o.holds, identity_json(&o, opts.mode));
    }
    let o = timer.time("composite", || composite_linearity(&c, &d.q, &g, 5, opts.samples.max(1), rng))?;
    rep.push(
        "poly.fusion.composite",
        "polyexact: t_i(ψ)/F is linear with invertible matrix",
        o.reproduced == o.checked && o.invertible && o.matches_planes,
        json!({
            "forms": o.forms.iter().map(|f| f.iter().map(qs).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "reproduced": o.reproduced,
            "checked": o.checked,
            "invertible": o.invertible,
            "matches_planes": o.matches_planes,
        }),
    );
    Ok(())
}

fn dual(cfg: &PointConfig, rng: &mut ChaCha8Rng, rep: &mut Report, timer: &mut Timer) -> Result<(), PolyError> {
    let c = Cremona::new(cfg)?;
    let d = timer.time("dual", || dual_config(&c, 3, rng))?;
    for (i, k) in [(0, 1), (3, 3), (4, 2)] {
        rep.push(
            &format!("poly.dual.q{i}"),
            "polyexact: ψ contracts Q_0, Q_3, Q_4 to coordinate points",
            same_point(d.q.point(i), &unit(k)),
            json!({ "q": point_json(d.q.point(i)) }),
        );
    }
    let mismatched: Vec<&str> = LINE_QUARTICS.iter().copied().filter(|a| !d.fitted[*a].same(&d.algebraic[*a])).collect();
    rep.push(
        "poly.dual.lines",
        "polyexact: fitted image lines agree with the lines from the quintic relations",
        mismatched.is_empty(),
        json!({ "mismatched": mismatched }),
    );
    let q2 = d.q.point(2);
    rep.push(
        "poly.dual.concurrence",
        "polyexact: l_12, l_24 and l_25 meet at q_2",
        ["12", "24", "25"].iter().all(|a| d.fitted[*a].contains(q2)),
        json!({ "q2": point_json(q2) }),
    );
    let m = &d.m;
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| qs(&m[(i, j)])).collect()).collect();
    rep.push(
        "poly.dual.equivalence",
        "polyexact: an invertible M sends p_i to q_i",
        sends(m, cfg, &d.q) && !m.determinant().is_zero(),
        json!({
            "m": rows,
            "lambdas": d.lambdas.iter().map(qs).collect::<Vec<_>>(),
            "q": d.q.points.iter().map(|p| point_json(p)).collect::<Vec<_>>(),
        }),
    );
    Ok(())
}

fn rnc(cfg: &PointConfig, rng: &mut ChaCha8Rng, rep: &mut Report, timer: &mut Timer) -> Result<(), PolyError> {
    let c = Cremona::new(cfg)?;
    let (a, b, cc) = cfg.abc()?;
    let src = "polyexact: restrictions to the rational normal curve factor as displayed";
    let t = match timer.time("restrict", || rnc_restrict(&c)) {
        Ok(t) => t,
        Err(e) => {
            rep.push_error("poly.rnc.factorizations", src, e);
            return Ok(());
        }
    };
    rep.push(
        "poly.rnc.factorizations",
        src,
        true,
        json!({ "rows": t.rows.iter().map(|r| json!({ "name": r.name, "parameter": r.parameter.as_ref().map(qs) })).collect::<Vec<_>>() }),
    );
    let formula = alpha_formula(&a, &b, &cc);
    rep.push(
        "poly.rnc.alpha",
        "polyexact: α = (c−1)(b−a)/((b−1)(c−a))",
        formula.as_ref() == Some(&t.alpha),
        json!({ "alpha": qs(&t.alpha), "beta": qs(&t.beta), "gamma": qs(&t.gamma), "formula": formula.as_ref().map(qs) }),
    );
    let forbidden = forbidden_values(&a, &b, &cc);
    rep.push(
        "poly.rnc.alpha_generic",
        "polyexact: α avoids the forbidden values",
        !forbidden.contains(&t.alpha),
        json!({ "forbidden": forbidden.iter().map(qs).collect::<Vec<_>>() }),
    );
    let lam = psi_on_curve_scalars(&c, &t)?;
    rep.push(
        "poly.rnc.image_curve",
        "polyexact: ψ maps the curve to the twisted cubic R′",
        lam.is_some(),
        json!({ "scalars": lam.as_ref().map(|l| l.iter().map(qs).collect::<Vec<_>>()) }),
    );
    if let Some(lam) = lam {
        let d = timer.time("dual", || dual_config(&c, 3, rng))?;
        let params = special_parameters(&t);
        let order = ["-alpha", "0", "infinity", "-beta", "-gamma", "-1"];
        let placed: Vec<bool> = order
            .iter()
            .enumerate()
            .map(|(i, name)| {
                params.iter().find(|(n, _)| n == name).is_some_and(|(_, [u, v])| same_point(&image_curve_point(&t, &lam, u, v), d.q.point(i)))
            })
            .collect();
        rep.push(
            "poly.rnc.image_points",
            "polyexact: q_0, …, q_5 lie on R′ at the parameters −α, 0, ∞, −β, −γ, −1",
            placed.iter().all(|&x| x),
            json!({ "parameters": order, "placed": placed }),
        );
    }
    Ok(())
}

fn lemmas(opts: PolyOptions, rng: &mut ChaCha8Rng, rep: &mut Report, timer: &mut Timer) -> Result<(), PolyError> {
    let n = opts.samples;
    let count = |id: &str, src: &str, rep: &mut Report, timer: &mut Timer, f: &mut dyn FnMut() -> bool| {
        let passed = timer.time(id, || (0..n).filter(|_| f()).count());
        rep.push(id, src, passed == n, json!({ "instances": n, "passed": passed }));
    };
    count("poly.lemmas.det_n", "polyexact: g^(m−1) divides det J when m of the h_i share the factor g", rep, timer, &mut || {
        let m = rng.gen_range(2..=4);
        let dg = rng.gen_range(1..=2);
        let g = random_form(rng, dg, 3);
        let h: Vec<_> = (0..4).map(|_| random_form(rng, 2, 4)).collect();
        det_n_holds(&g, &h, m)
    });
    count("poly.lemmas.fake_jac", "polyexact: x_0 det J(h) = d times the bordered determinant", rep, timer, &mut || {
        let d = rng.gen_range(1..=3);
        let h: Vec<_> = (0..4).map(|_| random_form(rng, d, 5)).collect();
        fake_jac_holds(&h, d)
    });
    count("poly.lemmas.images_jac", "polyexact: Jacobians of the two quotient maps", rep, timer, &mut || {
        let d = rng.gen_range(1..=3);
        let h: Vec<_> = (0..4).map(|_| random_form(rng, d, 5)).collect();
        let x = generic_point(rng, &h);
        images_jac_holds(&h, d, &x) == Some((true, true))
    });
    count("poly.lemmas.euler", "polyexact: Σ x_i ∂h/∂x_i = d h", rep, timer, &mut || {
        let d = rng.gen_range(1..=6);
        let h = random_form(rng, d, 8);
        euler_holds(&h, d)
    });
    let mut bad = Vec::new();
    let mut minors_nonzero = 0;
    timer.time("planar", || -> Result<(), PolyError> {
        for i in 0..n {
            let o = planar_quartic_dim(&random_instance(rng))?;
            if o.passed() {
                minors_nonzero += 1;
            } else {
                bad.push(json!({ "instance": i, "dimension": o.dimension, "dimension_full": o.dimension_full, "minor": qs(&o.minor) }));
            }
        }
        Ok(())
    })?;
    rep.push(
        "poly.lemmas.planar",
        "polyexact: plane quartics double at a_1, a_2, a_3 through a_4, a_5, a_6 form a net",
        bad.is_empty(),
        json!({ "instances": n, "passed": minors_nonzero, "failures": bad }),
    );
    Ok(())
}
