use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use g2theta::chars::{fmt_q, Registry};
use g2theta::jacquet::{ie_filtration, minrep_jacquet, minrep_jacquet_p6, EtaleCubic, FiltrationPiece};
use g2theta::langlands::packet_of;
use g2theta::literal::{
    parse_ext, parse_g2, parse_gl2, parse_gl3, parse_gsp4, parse_lparam, parse_p6, parse_pd, parse_rational,
    parse_torus, Ctx,
};
use g2theta::reducibility::*;
use g2theta::reps::PContext;
use g2theta::rootsys::*;
use g2theta::theta::*;
use g2theta::verify::{form_failures, printed_form_failures, run_verification, Gen, Suite};
use g2theta::Error;

#[derive(Parser)]
#[command(name = "g2theta", version, about = "G2 root data, principal series, L-packets and theta lifts")]
struct Cli {
    /// Character registry (TOML with [[symbol]] entries). Defaults to chi2, eta2, chi3, eta3.
    #[arg(long, global = true, env = "REGISTRY")]
    registry: Option<PathBuf>,
    /// Residue characteristic context: 2, 3 or other.
    #[arg(long, global = true, env = "PCONTEXT", default_value = "other")]
    p: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 500)]
    size: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Roots, Weyl group orders and parabolic tables of G2 and PGSp6.
    Rootsys {
        /// Also evaluate both readings of the C3 quadratic form on seeded vectors.
        #[arg(long)]
        debug_forms: bool,
    },
    /// Composition series of a principal series representation.
    ///
    /// G2 parabolics P, Q take a GL2 literal; B takes a torus character `c1, c2`
    /// (the exponent s is added to both). PGSp6 parabolics P2, P13 take a GL2
    /// literal, P1 a GSp4 literal, P3 a GL3 literal with s = 0.
    Decompose { group: String, parabolic: String, s: String, rep: String },
    /// The L-packet of a G2 parameter.
    Packet { param: String },
    /// Filtration of the Jacquet module of the minimal representation.
    Jacquet { group: String, parabolic: String },
    /// Filtration of the degenerate principal series I_E(s): E is F3, FxK[:label] or field[:label].
    IeFiltration { s: String, e: String },
    /// Theta lifts to and from G2.
    Theta {
        #[command(subcommand)]
        dir: ThetaDir,
    },
    /// Which of PD^x and PGSp6 a G2 representation lifts to.
    Dichotomy { rep: String },
    /// Target group of a discrete series representation of G2.
    DsTarget { rep: String },
    /// Run a verification suite.
    Verify {
        /// dichotomy, howe, weyl, roundtrip, packets, reducibility, preservation or all
        suite: String,
    },
}

#[derive(Subcommand)]
enum ThetaDir {
    /// PD^x -> G2
    D2g { rep: String },
    /// PGL3 x| Z/2 -> G2
    B2g { rep: String },
    /// G2 -> PGSp6
    G2p { rep: String },
    /// PGSp6 -> G2
    P2g { rep: String },
}

enum Fail {
    Usage(String),
    Property(Value, String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

struct Out {
    json: Value,
    text: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    let emit = |o: &Out| match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&o.json).expect("json")),
        Format::Text => print!("{}", o.text),
    };
    match result {
        Ok(o) => {
            emit(&o);
            ExitCode::SUCCESS
        }
        Err(Fail::Property(json, text)) => {
            emit(&Out { json, text });
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_registry(path: &Option<PathBuf>) -> Result<Registry, Fail> {
    match path {
        None => Ok(Registry::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?;
            Ok(Registry::from_toml(&text)?)
        }
    }
}

fn run(cli: &Cli) -> Result<Out, Fail> {
    let reg = load_registry(&cli.registry)?;
    let p = PContext::parse(&cli.p)?;
    let ctx = Ctx { reg: &reg, p };
    match &cli.cmd {
        Cmd::Rootsys { debug_forms } => Ok(rootsys(&reg, cli.seed, *debug_forms)),
        Cmd::Decompose { group, parabolic, s, rep } => decompose(ctx, group, parabolic, s, rep),
        Cmd::Packet { param } => packet(ctx, param),
        Cmd::Jacquet { group, parabolic } => jacquet(group, parabolic),
        Cmd::IeFiltration { s, e } => {
            let s = parse_rational(s)?;
            let e = EtaleCubic::parse(e)?;
            Ok(layers(json!({ "s": fmt_q(s), "E": e.to_string() }), &ie_filtration(s, &e)))
        }
        Cmd::Theta { dir } => theta(ctx, dir),
        Cmd::Dichotomy { rep } => {
            let pi = parse_g2(ctx, rep)?;
            let side = dichotomy(&reg, &pi)?;
            let json = json!({ "rep": pi.to_string(), "side": side });
            Ok(Out { text: format!("{pi}: {}\n", json["side"].as_str().unwrap_or("")), json })
        }
        Cmd::DsTarget { rep } => {
            let pi = parse_g2(ctx, rep)?;
            let t = discrete_series_target(&reg, &pi, p)?;
            let json = json!({ "rep": pi.to_string(), "target": t });
            Ok(Out { text: format!("{pi}: {}\n", json["target"].as_str().unwrap_or("")), json })
        }
        Cmd::Verify { suite } => {
            let report = run_verification(Suite::parse(suite)?, &reg, p, cli.seed, cli.size);
            let json = serde_json::to_value(&report).expect("json");
            let text = report.to_string();
            if report.passed() {
                Ok(Out { json, text })
            } else {
                Err(Fail::Property(json, text))
            }
        }
    }
}

fn root_json(r: RootVecG2) -> Value {
    json!({ "a": r.a, "b": r.b, "long": r.is_long() })
}

fn rootsys(reg: &Registry, seed: u64, debug_forms: bool) -> Out {
    let parabolics = |g: GroupName| -> Vec<Value> {
        parabolic_names(g)
            .iter()
            .filter_map(|n| parabolic_data(g, n).ok())
            .map(|d| serde_json::to_value(d).expect("json"))
            .collect()
    };
    let roots = g2_roots();
    let triple = long_root_triple();
    let mut json = json!({
        "G2": {
            "roots": roots.iter().map(|r| root_json(*r)).collect::<Vec<_>>(),
            "weyl_order": g2_weyl_order(),
            "long_root_triple": triple.iter().map(|r| root_json(*r)).collect::<Vec<_>>(),
            "parabolics": parabolics(GroupName::G2),
        },
        "PGSp6": {
            "roots": c3_roots(),
            "coroots": c3_coroots(),
            "weyl_order": c3_weyl_order(),
            "parabolics": parabolics(GroupName::PGSp6),
        },
    });
    let mut text = format!(
        "G2: {} roots ({} long), |W| = {}\n  long root triple (a, b coordinates): {}\nPGSp6: {} roots, |W| = {}\n",
        roots.len(),
        roots.iter().filter(|r| r.is_long()).count(),
        g2_weyl_order(),
        triple.iter().map(|r| format!("({}, {})", r.a, r.b)).collect::<Vec<_>>().join(", "),
        c3_roots().len(),
        c3_weyl_order(),
    );
    for g in [GroupName::G2, GroupName::PGSp6] {
        for n in parabolic_names(g) {
            if let Ok(d) = parabolic_data(g, n) {
                let modulus: Vec<String> = d.modulus.iter().map(|m| format!("|{}|^{}", m.character, fmt_q(m.exponent))).collect();
                text += &format!("  {g:?} {n}: Levi {}, modulus {}\n", d.levi_descriptor, modulus.join(" "));
            }
        }
    }
    if debug_forms {
        let mut g = Gen::new(reg, PContext::Other, seed, 1);
        let vs: Vec<_> = (0..100).map(|_| g.c3_vector()).collect();
        let (corrected, printed) = (form_failures(&vs, c3_form_q), printed_form_failures(&vs));
        json["forms"] = json!({
            "vectors": vs.len(),
            "s3_squared_failures": corrected,
            "s3_cubed_failures": printed,
        });
        text += &format!("q with s3^2: fails on {corrected}/{n}; with s3^3: fails on {printed}/{n}\n", n = vs.len());
    }
    Out { json, text }
}

fn structure<R: std::fmt::Display>(head: Value, r: &RepStructure<R>) -> Out {
    let mut json = head;
    json["structure"] = serde_json::to_value(r.to_json()).expect("json");
    let mut text = format!("length {}{}\n", r.length, if r.irreducible { ", irreducible" } else { "" });
    for c in &r.constituents {
        let name = c.rep.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "(unnamed)".into());
        text += &format!("  {:<12} {name}\n", format!("{:?}", c.position));
    }
    if let Some(n) = &r.note {
        text += &format!("  note: {n}\n");
    }
    Out { json, text }
}

fn decompose(ctx: Ctx<'_>, group: &str, parabolic: &str, s: &str, rep: &str) -> Result<Out, Fail> {
    let s = parse_rational(s)?;
    let g = GroupName::parse(group)?;
    let head = json!({ "group": format!("{g:?}"), "parabolic": parabolic, "s": fmt_q(s), "rep": rep });
    Ok(match (g, parabolic) {
        (GroupName::G2, "P") => structure(head, &decompose_ip(s, &parse_gl2(ctx, rep)?)?),
        (GroupName::G2, "Q") => structure(head, &decompose_iq(s, &parse_gl2(ctx, rep)?)?),
        (GroupName::G2, "B") => {
            let c = parse_torus(ctx, rep)?;
            let c = g2theta::chars::TorusCharG2::new(c.c1.twist(s), c.c2.twist(s))?;
            structure(head, &decompose_ib_g2(&c)?)
        }
        (GroupName::PGSp6, "P2") => structure(head, &decompose_i2(s, &parse_gl2(ctx, rep)?)?),
        (GroupName::PGSp6, "P13") => structure(head, &decompose_i13(s, &parse_gl2(ctx, rep)?)?),
        (GroupName::PGSp6, "P1") => structure(head, &decompose_i1(s, &parse_gsp4(ctx, rep)?)?),
        (GroupName::PGSp6, "P3") => {
            if s != g2theta::chars::qi(0) {
                return Err(Fail::Usage("P3 takes s = 0; put any twist into the GL3 literal".into()));
            }
            structure(head, &decompose_i3(&parse_gl3(ctx, rep)?)?)
        }
        _ => return Err(Fail::Usage(format!("no decomposition engine for {group} {parabolic}"))),
    })
}

fn packet(ctx: Ctx<'_>, param: &str) -> Result<Out, Fail> {
    let phi = parse_lparam(ctx, param)?;
    let pk = packet_of(&phi)?;
    let members: Vec<Value> = pk
        .members
        .iter()
        .map(|(ch, m)| json!({ "character": ch, "rep": m.to_string(), "generic": m.is_generic() }))
        .collect();
    let mut text = format!("{phi}: A = {:?}\n", pk.component_group);
    for (ch, m) in &pk.members {
        text += &format!("  {ch:<7} {m}{}\n", if m.is_generic() { "  (generic)" } else { "" });
    }
    let json = json!({ "param": phi.to_string(), "component_group": pk.component_group, "members": members });
    Ok(Out { json, text })
}

fn layers(head: Value, pieces: &[FiltrationPiece]) -> Out {
    let mut json = head;
    json["layers"] = serde_json::to_value(pieces).expect("json");
    let mut text = String::new();
    for p in pieces {
        let v = serde_json::to_value(p).expect("json");
        text += &format!("{}\n", serde_json::to_string(&v).expect("json"));
    }
    Out { json, text }
}

fn jacquet(group: &str, parabolic: &str) -> Result<Out, Fail> {
    let g = GroupName::parse(group)?;
    let pieces = match g {
        GroupName::PGSp6 => minrep_jacquet_p6(parabolic)?,
        _ => minrep_jacquet(g, parabolic)?,
    };
    Ok(layers(json!({ "group": format!("{g:?}"), "parabolic": parabolic }), &pieces))
}

fn lift<T: std::fmt::Display>(r: LiftResult<T>) -> Out {
    Out { text: format!("{r}\n"), json: serde_json::to_value(r.to_json()).expect("json") }
}

fn theta(ctx: Ctx<'_>, dir: &ThetaDir) -> Result<Out, Fail> {
    Ok(match dir {
        ThetaDir::D2g { rep } => lift(theta_d_to_g2(&parse_pd(ctx, rep)?)),
        ThetaDir::B2g { rep } => lift(theta_b_to_g2(&parse_ext(ctx, rep)?, ctx.p)?),
        ThetaDir::G2p { rep } => lift(theta_g2_to_p6(&parse_g2(ctx, rep)?)?),
        ThetaDir::P2g { rep } => lift(theta_p6_to_g2(&parse_p6(ctx, rep)?)?),
    })
}
