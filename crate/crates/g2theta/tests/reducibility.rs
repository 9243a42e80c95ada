//! Golden composition series for the induced representations of G2 and
//! PGSp6, and a Borel-support oracle for the G2 engines.

use std::sync::OnceLock;

use g2theta::chars::{q, qi, ExponentChar, Registry, TorusCharG2, Q};
use g2theta::literal::{parse_g2, parse_gl2, parse_gl3, parse_gsp4, parse_p6, Ctx};
use g2theta::reducibility::{
    decompose_i1, decompose_i13, decompose_i2, decompose_i3, decompose_ib_g2, decompose_ip, decompose_iq,
    Position, RepStructure,
};
use g2theta::reps::{g2_orbit, G2Rep, GL2Kind, GL2Rep, PContext, PiGenParam};
use g2theta::verify::Gen;

use Position::{DirectSummand as Sum, Quotient as Quot, Sub, Subquotient as SubQ};

fn reg() -> &'static Registry {
    static R: OnceLock<Registry> = OnceLock::new();
    R.get_or_init(Registry::default)
}

fn ctx() -> Ctx<'static> {
    Ctx { reg: reg(), p: PContext::Other }
}

fn t(s: &str) -> GL2Rep {
    parse_gl2(ctx(), s).unwrap()
}

fn sorted<R: Ord + Clone>(r: &RepStructure<R>) -> Vec<(Option<R>, Position)> {
    let mut v: Vec<_> = r.constituents.iter().map(|c| (c.rep.clone(), c.position)).collect();
    v.sort();
    v
}

fn expect_g2(r: RepStructure<G2Rep>, want: &[(&str, Position)]) {
    let mut w: Vec<_> = want
        .iter()
        .map(|(s, p)| (if *s == "?" { None } else { Some(parse_g2(ctx(), s).unwrap()) }, *p))
        .collect();
    w.sort();
    assert_eq!(sorted(&r), w, "got {r}");
    assert_eq!(r.length as usize, want.len());
    assert_eq!(r.irreducible, want.len() == 1);
}

fn expect_p6(r: RepStructure<g2theta::reps::PGSp6Rep>, want: &[(&str, Position)]) {
    let mut w: Vec<_> = want
        .iter()
        .map(|(s, p)| (if *s == "?" { None } else { Some(parse_p6(ctx(), s).unwrap()) }, *p))
        .collect();
    w.sort();
    assert_eq!(sorted(&r), w, "got {r}");
    assert_eq!(r.length as usize, want.len());
}

fn h() -> Q {
    q(1, 2)
}

// ------------------------------------------------------------------ I_P

#[test]
fn ip_sc_trivial_central_half() {
    let r = decompose_ip(h(), &t("sc(r, sd)")).unwrap();
    expect_g2(r, &[("delta_P(sc(r, sd))", Sub), ("JP(1/2; sc(r, sd))", Quot)]);
}

#[test]
fn ip_sc_quadratic_central_zero() {
    let r = decompose_ip(qi(0), &t("sc(r, sd, w=chi2)")).unwrap();
    expect_g2(r, &[("IP(sc(r, sd, w=chi2))_gen", Sum), ("IP(sc(r, sd, w=chi2))_deg", Sum)]);
}

#[test]
fn ip_sc_not_self_dual_irreducible() {
    for s in [qi(0), h(), qi(1)] {
        assert!(decompose_ip(s, &t("sc(r, w=chi3)")).unwrap().irreducible);
    }
}

#[test]
fn ip_st_three_halves() {
    expect_g2(decompose_ip(q(3, 2), &t("st(1)")).unwrap(), &[("St_G2", Sub), ("JP(3/2; st(1))", Quot)]);
}

#[test]
fn ip_st_half_length_three() {
    expect_g2(
        decompose_ip(h(), &t("st(1)")).unwrap(),
        &[("pi_gen[1]", Sub), ("JP(1/2; st(1))", Quot), ("JQ(1/2; st(1))", SubQ)],
    );
}

#[test]
fn ip_st_quadratic_half() {
    expect_g2(decompose_ip(h(), &t("st(chi2)")).unwrap(), &[("pi_gen[chi2]", Sub), ("JP(1/2; st(chi2))", Quot)]);
}

#[test]
fn ip_st_cubic_half() {
    let r = decompose_ip(h(), &t("st(eta3)")).unwrap();
    expect_g2(r, &[("pi_gen[eta3]", Sub), ("JP(1/2; st(eta3))", Quot)]);
    // pi_gen[chi] = pi_gen[chi^-1]
    assert_eq!(parse_g2(ctx(), "pi_gen[eta3]").unwrap(), parse_g2(ctx(), "pi_gen[eta3^2]").unwrap());
}

#[test]
fn ip_trivial_three_halves() {
    expect_g2(decompose_ip(q(3, 2), &t("one(1)")).unwrap(), &[("JQ(5/2; st(1))", Sub), ("1_G2", Quot)]);
}

#[test]
fn ip_trivial_half_length_three() {
    expect_g2(
        decompose_ip(h(), &t("one(1)")).unwrap(),
        &[("pi_deg[1]", Sub), ("JQ(1; ps(1, 1))", Quot), ("JQ(1/2; st(1))", SubQ)],
    );
}

// The quotient is J_Q(1, pi(1, chi)): the exponent of J_Q(1/2, pi(1, chi))
// lies in a different Weyl orbit from I_P(1/2, chi).
#[test]
fn ip_quadratic_char_half() {
    expect_g2(
        decompose_ip(h(), &t("one(chi2)")).unwrap(),
        &[("JQ(1/2; st(chi2))", Sub), ("JQ(1; ps(1, chi2))", Quot)],
    );
}

// Induced from the cubic character itself, not from st_chi.
#[test]
fn ip_cubic_char_half() {
    expect_g2(
        decompose_ip(h(), &t("one(chi3)")).unwrap(),
        &[("JP(1/2; st(chi3^2))", Sub), ("JQ(1; ps(chi3, chi3^2))", Quot)],
    );
}

#[test]
fn ip_negative_s_swaps_sub_and_quotient() {
    expect_g2(
        decompose_ip(-h(), &t("st(1)")).unwrap(),
        &[("pi_gen[1]", Quot), ("JP(1/2; st(1))", Sub), ("JQ(1/2; st(1))", SubQ)],
    );
}

#[test]
fn ip_st_generic_point_irreducible() {
    assert!(decompose_ip(qi(1), &t("st(1)")).unwrap().irreducible);
    assert!(decompose_ip(q(3, 2), &t("st(chi2)")).unwrap().irreducible);
}

// ------------------------------------------------------------------ I_Q

#[test]
fn iq_sc_trivial_central_half() {
    expect_g2(
        decompose_iq(h(), &t("sc(r, sd)")).unwrap(),
        &[("delta_Q(sc(r, sd))", Sub), ("JQ(1/2; sc(r, sd))", Quot)],
    );
}

#[test]
fn iq_sc_dihedral_one() {
    let tau = "sc(r, sd, w=chi2, s3=yes)";
    expect_g2(
        decompose_iq(qi(1), &t(tau)).unwrap(),
        &[(&format!("pi_gen[{tau}]"), Sub), (&format!("JQ(1; {tau})"), Quot)],
    );
}

#[test]
fn iq_sc_non_s3_zero() {
    let tau = "sc(r, sd, w=eta2, s3=no)";
    expect_g2(
        decompose_iq(qi(0), &t(tau)).unwrap(),
        &[(&format!("IQ({tau})_gen"), Sum), (&format!("IQ({tau})_deg"), Sum)],
    );
}

#[test]
fn iq_st_five_halves() {
    expect_g2(decompose_iq(q(5, 2), &t("st(1)")).unwrap(), &[("St_G2", Sub), ("JQ(5/2; st(1))", Quot)]);
}

#[test]
fn iq_st_half() {
    expect_g2(
        decompose_iq(h(), &t("st(1)")).unwrap(),
        &[("pi_gen[1]", Sub), ("pi_deg[1]", Sub), ("JQ(1/2; st(1))", Quot)],
    );
}

#[test]
fn iq_st_quadratic_half() {
    expect_g2(decompose_iq(h(), &t("st(eta2)")).unwrap(), &[("pi_gen[eta2]", Sub), ("JQ(1/2; st(eta2))", Quot)]);
}

#[test]
fn iq_trivial_five_halves() {
    expect_g2(decompose_iq(q(5, 2), &t("one(1)")).unwrap(), &[("JP(3/2; st(1))", Sub), ("1_G2", Quot)]);
}

#[test]
fn iq_trivial_half_length_three() {
    expect_g2(
        decompose_iq(h(), &t("one(1)")).unwrap(),
        &[("JQ(1/2; st(1))", Sub), ("JQ(1; ps(1, 1))", Quot), ("JP(1/2; st(1))", SubQ)],
    );
}

#[test]
fn iq_quadratic_char_half() {
    expect_g2(
        decompose_iq(h(), &t("one(chi2)")).unwrap(),
        &[("JP(1/2; st(chi2))", Sub), ("JQ(1; ps(1, chi2))", Quot)],
    );
}

// ------------------------------------------------------------------ I_B

fn ch(s: &str) -> ExponentChar {
    g2theta::literal::parse_char(ctx(), s).unwrap()
}

#[test]
fn ib_three_quadratics_split() {
    let c = TorusCharG2 { c1: ch("chi2"), c2: ch("eta2") };
    let r = decompose_ib_g2(&c).unwrap();
    expect_g2(r, &[("IB(chi2, eta2)_gen", Sum), ("IB(chi2, eta2)_deg", Sum)]);
}

#[test]
fn ib_regular_position_irreducible() {
    let c = TorusCharG2 { c1: ch("|.|^7/3"), c2: ch("|.|^1/5") };
    let r = decompose_ib_g2(&c).unwrap();
    assert!(r.irreducible);
    assert!(matches!(r.constituents[0].rep, Some(G2Rep::JB(_))));
}

#[test]
fn ib_wall_reducible() {
    // chi = delta_B^{1/2}: every constituent of the full principal series
    let r = decompose_ib_g2(&TorusCharG2 { c1: ch("|.|^2"), c2: ch("|.|^1") }).unwrap();
    assert!(!r.irreducible);
    let reps: Vec<String> = r.reps().map(|x| x.to_string()).collect();
    assert!(reps.contains(&"St_G2".to_string()) && reps.contains(&"1_G2".to_string()), "{reps:?}");
}

// ------------------------------------------------------------------ PGSp6

#[test]
fn i2_sc_trivial_central_half() {
    expect_p6(decompose_i2(h(), &t("sc(r, sd)")).unwrap(), &[("delta_2(sc(r, sd))", Sub), ("J2(1/2; sc(r, sd))", Quot)]);
}

#[test]
fn i2_sc_dihedral_one() {
    let tau = "sc(r, sd, w=chi2, s3=yes)";
    expect_p6(
        decompose_i2(qi(1), &t(tau)).unwrap(),
        &[(&format!("sigma_gen[{tau}]"), Sub), (&format!("J2(1; {tau})"), Quot)],
    );
}

#[test]
fn i2_sc_non_s3_zero() {
    let tau = "sc(r, sd, w=chi2, s3=no)";
    expect_p6(
        decompose_i2(qi(0), &t(tau)).unwrap(),
        &[(&format!("I2({tau})_gen"), Sum), (&format!("I2({tau})_deg"), Sum)],
    );
}

#[test]
fn i2_st_five_halves() {
    expect_p6(decompose_i2(q(5, 2), &t("st(1)")).unwrap(), &[("St_P6", Sub), ("J2(5/2; st(1))", Quot)]);
}

#[test]
fn i2_st_half() {
    expect_p6(decompose_i2(h(), &t("st(1)")).unwrap(), &[("I3(St3(1))_gen", Sub), ("J2(1/2; st(1))", Quot)]);
}

#[test]
fn i2_st_quadratic_half() {
    expect_p6(decompose_i2(h(), &t("st(chi2)")).unwrap(), &[("sigma_gen[chi2]", Sub), ("J2(1/2; st(chi2))", Quot)]);
}

#[test]
fn i13_sc_half_length_four() {
    let r = decompose_i13(h(), &t("sc(r, sd)")).unwrap();
    assert_eq!(r.length, 4);
    let subs: Vec<_> = r.constituents.iter().filter(|c| c.position == Sub).collect();
    assert_eq!(subs.len(), 1);
    assert_eq!(subs[0].rep, Some(parse_p6(ctx(), "delta_13(sc(r, sd))").unwrap()));
}

#[test]
fn i13_sc_non_s3_zero() {
    let tau = "sc(r, sd, w=chi2, s3=no)";
    expect_p6(
        decompose_i13(qi(0), &t(tau)).unwrap(),
        &[(&format!("I13({tau})_gen"), Sum), (&format!("I13({tau})_deg"), Sum)],
    );
}

#[test]
fn i13_sc_not_self_dual_irreducible() {
    assert_eq!(decompose_i13(qi(0), &t("sc(r)")).unwrap().length, 1);
}

#[test]
fn i3_discrete_series() {
    let a = decompose_i3(&parse_gl3(ctx(), "sc(r)").unwrap()).unwrap();
    let b = decompose_i3(&parse_gl3(ctx(), "sc(r~)").unwrap()).unwrap();
    assert!(a.irreducible);
    assert_eq!(sorted(&a), sorted(&b));
    expect_p6(
        decompose_i3(&parse_gl3(ctx(), "St3(1)").unwrap()).unwrap(),
        &[("I3(St3(1))_gen", Sum), ("I3(St3(1))_deg", Sum)],
    );
}

#[test]
fn i3_three_quadratics() {
    let tau = parse_gl3(ctx(), "ps3(chi2, eta2, chi2*eta2)").unwrap();
    let r = decompose_i3(&tau).unwrap();
    assert_eq!(r.length, 2);
    assert!(r.constituents.iter().all(|c| c.position == Sum));
}

#[test]
fn i1_saito_kurokawa() {
    let tau = parse_gsp4(ctx(), "sk(rho)").unwrap();
    expect_p6(decompose_i1(h(), &tau).unwrap(), &[("delta_1(sk(rho))", Sub), ("J1(1/2; sk(rho))", Quot)]);
    assert!(decompose_i1(qi(0), &tau).unwrap().irreducible);
    assert!(decompose_i1(h(), &parse_gsp4(ctx(), "gsp4(x)").unwrap()).is_err());
}

// ------------------------------------------------------------------ Borel-support oracle

fn abs(e: Q) -> ExponentChar {
    ExponentChar::abs(e)
}

fn times(a: &ExponentChar, t: Q) -> ExponentChar {
    a.twist(t)
}

fn over(a: &ExponentChar, b: &ExponentChar) -> ExponentChar {
    g2theta::chars::char_mul(a, &g2theta::chars::char_inv(b)).unwrap()
}

/// Torus character of Ind_P(|det|^s tau) for a non-supercuspidal tau.
fn p_support(s: Q, tau: &GL2Rep) -> Option<TorusCharG2> {
    let (a, b) = tau.borel_data()?;
    Some(TorusCharG2 { c1: times(&a, s), c2: times(&b, s) })
}

fn q_support(s: Q, tau: &GL2Rep) -> Option<TorusCharG2> {
    let (a, b) = tau.borel_data()?;
    let (a, b) = (times(&a, s), times(&b, s));
    Some(TorusCharG2 { c2: over(&a, &b), c1: b })
}

/// The Borel support of pi, or None when pi has supercuspidal support
/// elsewhere; the discrete series are placed by the induced representation
/// first defining them.
fn support(pi: &G2Rep) -> Option<TorusCharG2> {
    let st = |c: &str| GL2Rep::steinberg(ch(c));
    match pi {
        G2Rep::St | G2Rep::Triv => Some(TorusCharG2 { c1: abs(qi(2)), c2: abs(qi(1)) }),
        G2Rep::JP { s, tau } => p_support(*s, tau),
        G2Rep::JQ { s, tau } => q_support(*s, tau),
        G2Rep::JB(c) | G2Rep::IB(c) | G2Rep::IBSummand(c, _) => Some(c.clone()),
        G2Rep::IP(t) | G2Rep::IPSummand(t, _) => p_support(qi(0), t),
        G2Rep::IQ(t) | G2Rep::IQSummand(t, _) => q_support(qi(0), t),
        G2Rep::PiGen(PiGenParam::One) => p_support(h(), &st("1")),
        G2Rep::PiDeg1 => p_support(h(), &GL2Rep::one_dim(ExponentChar::trivial())),
        G2Rep::PiGen(PiGenParam::Quadratic(c) | PiGenParam::Cubic(c)) => p_support(h(), &GL2Rep::steinberg(c.clone())),
        _ => None,
    }
}

fn same_orbit(a: &TorusCharG2, b: &TorusCharG2) -> bool {
    g2_orbit(a) == g2_orbit(b)
}

fn check_supports(induced: &TorusCharG2, r: &RepStructure<G2Rep>, what: &str) {
    for pi in r.reps() {
        if let Some(s) = support(pi) {
            assert!(same_orbit(&s, induced), "{what}: constituent {pi} has support ({}, {}) off the orbit", s.c1, s.c2);
        }
    }
}

#[test]
fn borel_support_of_maximal_parabolic_constituents() {
    let mut g = Gen::new(reg(), PContext::Other, 11, 0);
    let mut checked = 0;
    for _ in 0..600 {
        let s = g.rat();
        let tau = g.gl2_tempered();
        let tau = match tau.kind() {
            GL2Kind::Supercuspidal(_) => GL2Rep::one_dim(g.unitary()),
            _ => tau,
        };
        if let (Ok(r), Some(x)) = (decompose_ip(s, &tau), p_support(s, &tau)) {
            check_supports(&x, &r, &format!("I_P({s}, {tau})"));
            checked += 1;
        }
        if let (Ok(r), Some(x)) = (decompose_iq(s, &tau), q_support(s, &tau)) {
            check_supports(&x, &r, &format!("I_Q({s}, {tau})"));
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn borel_support_of_borel_constituents() {
    let mut g = Gen::new(reg(), PContext::Other, 12, 0);
    for _ in 0..500 {
        let c = g.torus();
        let r = decompose_ib_g2(&c).unwrap();
        check_supports(&c, &r, &format!("I_B({}, {})", c.c1, c.c2));
    }
}

#[test]
fn borel_support_at_displayed_points() {
    for (s, tau) in [(h(), "st(1)"), (h(), "one(1)"), (q(3, 2), "one(1)"), (h(), "one(chi2)"), (h(), "one(chi3)")] {
        let tau = t(tau);
        check_supports(&p_support(s, &tau).unwrap(), &decompose_ip(s, &tau).unwrap(), "I_P");
        check_supports(&q_support(s, &tau).unwrap(), &decompose_iq(s, &tau).unwrap(), "I_Q");
    }
}

#[test]
fn duality_over_random_inputs() {
    let r = g2theta::verify::Runner { reg: reg(), p: PContext::Other, seed: 3, size: 500 }.reducibility();
    assert!(r.iter().all(|p| p.passed()), "{r:?}");
}
