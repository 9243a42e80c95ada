use g2theta::chars::{q, Registry};
use g2theta::literal::*;
use g2theta::reps::PContext;
use g2theta::Error;

fn reg() -> Registry {
    Registry::default()
}

fn rt(reg: &Registry, p: PContext, s: &str) -> String {
    let ctx = Ctx { reg, p };
    parse_rep_literal(ctx, s).unwrap_or_else(|e| panic!("{s}: {e}")).to_string()
}

#[test]
fn canonical_forms_are_fixed_points() {
    let r = reg();
    let cases = [
        "St_G2",
        "1_G2",
        "pi_deg[1]",
        "pi_sc[omega2]",
        "pi_gen[1]",
        "pi_gen[chi2]",
        "JP(1/2; st(1))",
        "JQ(1; ps(1, chi2))",
        "delta_Q(sc(r, sd))",
        "IP(sc(r, sd))",
        "IB(chi2, chi2*eta2)_deg",
        "theta_D(pd(tau0, yes))",
        "pi_rho(rho0)",
        "sc_G2(l; generic)",
        "St_P6",
        "J2(1; st(1))",
        "delta_1(sk(rho))",
        "J1(1/2; sk(rho))",
        "sc_P6(l; nongeneric)",
        "principal",
        "subregular(1)",
        "cuspidal(l)",
        "ext(St3(1), -)",
        "pd(1)",
        "sk(rho)",
    ];
    for s in cases {
        assert_eq!(rt(&r, PContext::Other, s), s);
    }
}

#[test]
fn normalizes_spacing_and_order() {
    let r = reg();
    let once = rt(&r, PContext::Other, "JP( 1/2 ;st( 1 ) )");
    assert_eq!(once, "JP(1/2; st(1))");
    let ps = rt(&r, PContext::Other, "ps(chi2, 1)");
    assert_eq!(rt(&r, PContext::Other, &ps), ps);
}

#[test]
fn rationals() {
    assert_eq!(parse_rational("-3/6").unwrap(), q(-1, 2));
    assert_eq!(parse_rational("2").unwrap(), q(2, 1));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("1/").is_err());
}

#[test]
fn characters() {
    let r = reg();
    let ctx = Ctx { reg: &r, p: PContext::Other };
    let c = parse_char(ctx, "chi3^2").unwrap();
    assert_eq!(c.to_string(), "chi3^2");
    assert_eq!(parse_char(ctx, "chi3^3").unwrap().to_string(), "1");
    assert_eq!(parse_char(ctx, "|.|^7/3").unwrap().to_string(), "|.|^7/3");
    assert!(matches!(parse_char(ctx, "nope"), Err(Error::UnknownSymbol(_))));
}

#[test]
fn syntax_errors_carry_offsets() {
    let r = reg();
    let ctx = Ctx { reg: &r, p: PContext::Other };
    match parse_g2(ctx, "JP(1/2; st(1)") {
        Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 13),
        other => panic!("{other:?}"),
    }
    match parse_g2(ctx, "JP(1/2; st(1)) x") {
        Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 15),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_rep_literal(ctx, "@@"), Err(Error::Syntax { .. })));
    assert!(matches!(parse_rep_literal(ctx, "frob"), Err(Error::UnknownSymbol(_))));
}

#[test]
fn invalid_shapes_are_rejected() {
    let r = reg();
    let ctx = Ctx { reg: &r, p: PContext::Other };
    // JQ needs s > 0
    assert!(parse_g2(ctx, "JQ(0; st(1))").is_err());
    assert!(parse_g2(ctx, "JQ(-1/2; st(1))").is_err());
    // delta_P needs a self-dual supercuspidal
    assert!(parse_g2(ctx, "delta_P(st(1))").is_err());
    // pi_gen needs a quadratic or cubic unitary character
    assert!(parse_g2(ctx, "pi_gen[chi3]").is_ok());
    assert!(matches!(parse_g2(ctx, "pi_gen[|.|^1]"), Err(Error::InvalidRep(_))));
}

#[test]
fn registry_from_toml() {
    let r = Registry::from_toml(
        r#"
        [[symbol]]
        name = "xi"
        order = 2
        ramified = true
        "#,
    )
    .unwrap();
    let ctx = Ctx { reg: &r, p: PContext::Other };
    assert_eq!(parse_g2(ctx, "pi_gen[xi]").unwrap().to_string(), "pi_gen[xi]");
    assert!(parse_char(ctx, "chi2").is_err());
}
