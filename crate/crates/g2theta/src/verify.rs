//! Seeded generators over a registry, and the property suites behind the
//! `verify` command.
//!
//! Every property draws from its own ChaCha stream, so a report depends only
//! on (suite, registry, p, seed, size). A failing case is shrunk by trying,
//! in order, smaller twists, simpler characters and the first label.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chars::{mul, q, qi, ExponentChar, Registry, TorusCharG2, Q};
use crate::error::{Error, Result};
use crate::langlands::{component_group, packet_of, LParamG2, Levi, WfImage};
use crate::literal::{parse_g2, parse_lparam, parse_p6, Ctx};
use crate::reducibility::{decompose_i13, decompose_i2, decompose_ib_g2, decompose_ip, decompose_iq, RepStructure};
use crate::reps::{
    classify_pgl3_extension, gl2_langlands_quotient, Ext, G2Rep, GL2Rep, GL3Rep, GSp4Rep,
    Genericity, Gl2Sc, Heart, PContext, PDxRep, PGL3ExtRep, PGSp6Rep, PiGenParam, PiScLabel, Summand,
};
use crate::rootsys::{
    c3_dual_weyl_group, c3_form_q, c3_form_q_printed, c3_weyl_order, g2_act_on_char, g2_weyl_group, g2_weyl_order,
    C3Vec, Mat,
};
use crate::theta::{
    dichotomy, discrete_series_target, theta_b_to_g2, theta_d_to_g2, theta_g2_to_p6, theta_p6_to_g2, DsTarget,
    LiftValue, Side,
};

const LABELS: usize = 5;

// ------------------------------------------------------------------ generators

/// Random representations and parameters over a registry.
pub struct Gen<'a> {
    rng: ChaCha8Rng,
    reg: &'a Registry,
    p: PContext,
    finite: Vec<ExponentChar>,
}

/// The finite-order characters generated by the first few registry symbols.
fn finite_chars(reg: &Registry) -> Vec<ExponentChar> {
    let mut out = vec![ExponentChar::trivial()];
    for s in reg.symbols().take(4) {
        let mut next = Vec::new();
        for c in &out {
            for k in 0..s.order.min(6) {
                let x = ExponentChar::symbol(reg, &s.name, k as i64).expect("registered symbol");
                next.push(mul(c, &x));
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}

impl<'a> Gen<'a> {
    pub fn new(reg: &'a Registry, p: PContext, seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Gen { rng, reg, p, finite: finite_chars(reg) }
    }

    fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    fn pick<T: Clone>(&mut self, v: &[T]) -> Option<T> {
        if v.is_empty() {
            None
        } else {
            let i = self.below(v.len());
            Some(v[i].clone())
        }
    }

    /// Retries a partial generator until it produces a value.
    fn retry<T>(&mut self, mut f: impl FnMut(&mut Self) -> Result<T>) -> T {
        for _ in 0..10_000 {
            if let Ok(x) = f(self) {
                return x;
            }
        }
        panic!("generator found no valid value; the registry is probably too small")
    }

    pub fn unitary(&mut self) -> ExponentChar {
        let f = self.finite.clone();
        self.pick(&f).expect("the trivial character is always present")
    }

    fn of_kind(&mut self, keep: fn(&ExponentChar) -> bool) -> Result<ExponentChar> {
        let v: Vec<ExponentChar> = self.finite.iter().filter(|c| keep(c)).cloned().collect();
        self.pick(&v).ok_or_else(|| Error::Registry("the registry has no character of the requested order".into()))
    }

    pub fn quadratic(&mut self) -> Result<ExponentChar> {
        self.of_kind(ExponentChar::is_quadratic)
    }

    pub fn cubic(&mut self) -> Result<ExponentChar> {
        self.of_kind(ExponentChar::is_cubic)
    }

    /// A rational with small denominator, biased towards half-integers.
    pub fn rat(&mut self) -> Q {
        let d = [1, 2, 2, 2, 3, 4, 6][self.below(7)];
        let n = self.rng.gen_range(-3 * d..=3 * d);
        q(n, d)
    }

    pub fn pos_rat(&mut self) -> Q {
        let d = [1, 2, 2, 2, 3, 4][self.below(6)];
        let n = self.rng.gen_range(1..=3 * d);
        q(n, d)
    }

    pub fn label(&mut self) -> String {
        format!("rho{}", self.below(LABELS))
    }

    pub fn gl2_sc(&mut self) -> GL2Rep {
        self.retry(|g| {
            let label = g.label();
            let sc = match g.below(4) {
                0 | 1 => Gl2Sc { label, dual: false, self_dual: true, central: ExponentChar::trivial(), dihedral_s3: None },
                2 => {
                    let c = g.quadratic()?;
                    let s3 = g.coin();
                    Gl2Sc { label, dual: false, self_dual: true, central: c, dihedral_s3: Some(s3) }
                }
                _ => {
                    let c = g.unitary();
                    let d = g.coin();
                    Gl2Sc { label, dual: d, self_dual: false, central: c, dihedral_s3: None }
                }
            };
            GL2Rep::supercuspidal(sc)
        })
    }

    pub fn gl2_sd_trivial(&mut self) -> GL2Rep {
        let l = self.label();
        GL2Rep::sc_plain(&l).expect("valid label")
    }

    pub fn gl2_dihedral(&mut self) -> Result<GL2Rep> {
        let label = self.label();
        let c = self.quadratic()?;
        GL2Rep::supercuspidal(Gl2Sc { label, dual: false, self_dual: true, central: c, dihedral_s3: Some(true) })
    }

    /// A unitary discrete series of GL2.
    pub fn gl2_ds(&mut self) -> GL2Rep {
        if self.coin() {
            self.gl2_sc()
        } else {
            GL2Rep::steinberg(self.unitary())
        }
    }

    pub fn gl2_tempered(&mut self) -> GL2Rep {
        if self.below(3) < 2 {
            self.gl2_ds()
        } else {
            let (a, b) = (self.unitary(), self.unitary());
            GL2Rep::principal_series(a, b).expect("unitary principal series are irreducible")
        }
    }

    /// A torus character whose exponents often land on walls.
    pub fn torus(&mut self) -> TorusCharG2 {
        let (a, b) = (self.rat(), self.rat());
        let (u, v) = (self.unitary(), self.unitary());
        TorusCharG2 { c1: u.twist(a), c2: v.twist(b) }
    }

    pub fn unitary_torus(&mut self) -> TorusCharG2 {
        TorusCharG2 { c1: self.unitary(), c2: self.unitary() }
    }

    pub fn pd(&mut self) -> PDxRep {
        let p = self.p;
        self.retry(|g| match g.below(4) {
            0 => Ok(PDxRep::Trivial),
            1 => {
                let c = g.cubic()?;
                PDxRep::unramified_cubic(g.reg, c)
            }
            _ => {
                let l = g.label();
                let heart = if p == PContext::Three { [Heart::Yes, Heart::No, Heart::Unknown][g.below(3)] } else { Heart::Yes };
                PDxRep::other(&l, heart, p)
            }
        })
    }

    pub fn gl3(&mut self) -> GL3Rep {
        let p = self.p;
        self.retry(|g| match g.below(6) {
            0 => {
                let sd = p == PContext::Two && g.coin();
                let dual = !sd && g.coin();
                let l = g.label();
                GL3Rep::supercuspidal(&l, dual, sd)
            }
            1 => {
                let c = if g.coin() { ExponentChar::trivial() } else { g.cubic()? };
                GL3Rep::steinberg(c)
            }
            2 => {
                let s = g.gl2_ds();
                GL3Rep::induced(s)
            }
            3 | 4 => {
                let (a, b) = (g.unitary(), g.unitary());
                let c = crate::chars::char_inv(&mul(&a, &b));
                GL3Rep::principal_series([a, b, c])
            }
            _ => {
                let c = if g.coin() { ExponentChar::trivial() } else { g.quadratic()? };
                GL3Rep::special_jb(c)
            }
        })
    }

    pub fn pgl3_ext(&mut self) -> PGL3ExtRep {
        let b = self.gl3();
        let v = classify_pgl3_extension(&b);
        self.pick(&v).expect("every base has an extension")
    }

    pub fn gsp4(&mut self) -> GSp4Rep {
        let l = self.label();
        if self.coin() {
            GSp4Rep::saito_kurokawa(&l).expect("valid label")
        } else {
            let (sk, gen) = (self.coin(), self.coin());
            GSp4Rep::supercuspidal(&l, sk, gen).expect("valid label")
        }
    }

    pub fn g2_nontempered(&mut self) -> G2Rep {
        self.retry(|g| match g.below(5) {
            0 | 1 => {
                let (s, t) = (g.pos_rat(), g.gl2_tempered());
                G2Rep::jp(s, t)
            }
            2 | 3 => {
                let (s, t) = (g.pos_rat(), g.gl2_tempered());
                G2Rep::jq(s, t)
            }
            _ => {
                let (a, b) = (g.pos_rat(), g.pos_rat());
                let (u, v) = (g.unitary(), g.unitary());
                let (a, b) = if a > b { (a, b) } else { (b + a, a) };
                G2Rep::jb(TorusCharG2 { c1: u.twist(a), c2: v.twist(b) })
            }
        })
    }

    /// G2 representations across every constructor, except pi_sc[-1].
    pub fn g2(&mut self) -> G2Rep {
        let p = self.p;
        self.retry(|g| match g.below(20) {
            0 => Ok(G2Rep::St),
            1 => Ok(G2Rep::Triv),
            2..=4 => Ok(g.g2_nontempered()),
            5 => {
                let t = g.gl2_sd_trivial();
                G2Rep::delta_p(t)
            }
            6 => {
                let t = g.gl2_sd_trivial();
                G2Rep::delta_q(t)
            }
            7 => match g.below(4) {
                0 => Ok(G2Rep::PiGen(PiGenParam::One)),
                1 => {
                    let c = g.quadratic()?;
                    G2Rep::pi_gen_quadratic(c)
                }
                2 => {
                    let c = g.cubic()?;
                    G2Rep::pi_gen_cubic(c)
                }
                _ => {
                    let t = g.gl2_dihedral()?;
                    G2Rep::pi_gen_dihedral(t)
                }
            },
            8 => Ok(G2Rep::PiDeg1),
            9 => Ok(G2Rep::PiSc([PiScLabel::One, PiScLabel::Omega, PiScLabel::Omega2][g.below(3)])),
            10 => {
                let t = g.gl2_ds();
                G2Rep::ip(t)
            }
            11 => {
                let t = g.gl2_ds();
                G2Rep::iq(t)
            }
            12 => {
                let c = g.unitary_torus();
                G2Rep::ib(c)
            }
            13 => {
                let t = g.gl2_sc();
                let w = if g.coin() { Summand::Gen } else { Summand::Deg };
                match g.below(3) {
                    0 => G2Rep::ip_summand(t, w),
                    1 => G2Rep::iq_summand(t, w),
                    _ => {
                        let (a, b) = (g.quadratic()?, g.quadratic()?);
                        G2Rep::ib_summand(TorusCharG2 { c1: a, c2: b }, w)
                    }
                }
            }
            14 => {
                let l = g.label();
                G2Rep::sc_from_pd(PDxRep::other(&l, Heart::Yes, p)?)
            }
            15 => {
                let sd = p == PContext::Two && g.coin();
                let dual = !sd && g.coin();
                let l = g.label();
                let b = GL3Rep::supercuspidal(&l, dual, sd)?;
                let v = classify_pgl3_extension(&b);
                G2Rep::sc_from_b(g.pick(&v).expect("every base has an extension"))
            }
            16 => {
                let l = g.label();
                G2Rep::pi_rho(&l)
            }
            _ => {
                let l = g.label();
                G2Rep::sc_abstract(&l, true)
            }
        })
    }

    pub fn g2_discrete(&mut self) -> G2Rep {
        self.retry(|g| {
            let pi = g.g2();
            if pi.is_discrete_series() {
                Ok(pi)
            } else {
                Err(Error::Precondition("not a discrete series".into()))
            }
        })
    }

    pub fn p6_nontempered(&mut self) -> PGSp6Rep {
        self.retry(|g| match g.below(3) {
            0 => {
                let (s, t) = (g.pos_rat(), g.gl2_tempered());
                PGSp6Rep::j2(s, t)
            }
            1 => {
                let (s, t) = (g.pos_rat(), g.gl2_tempered());
                PGSp6Rep::j13(t.twisted(s))
            }
            _ => {
                let (a, b) = (g.pos_rat(), g.pos_rat());
                let (u, v) = (g.unitary(), g.unitary());
                let (a, b) = if a > b { (a, b) } else { (b + a, a) };
                PGSp6Rep::j13(gl2_langlands_quotient(&u.twist(a), &v.twist(b))?)
            }
        })
    }

    pub fn p6(&mut self) -> PGSp6Rep {
        self.retry(|g| match g.below(14) {
            0 => Ok(PGSp6Rep::St),
            1..=3 => Ok(g.p6_nontempered()),
            4 => {
                let t = g.gl2_sd_trivial();
                if g.coin() {
                    PGSp6Rep::delta_2(t)
                } else {
                    PGSp6Rep::delta_13(t)
                }
            }
            5 => {
                if g.coin() {
                    let c = g.quadratic()?;
                    PGSp6Rep::sigma_gen_quadratic(c)
                } else {
                    let t = g.gl2_dihedral()?;
                    PGSp6Rep::sigma_gen_dihedral(t)
                }
            }
            6 => {
                let t = g.gl2_ds();
                PGSp6Rep::i2_irred(t)
            }
            7 => {
                let t = g.gl2_sc();
                let w = if g.coin() { Summand::Gen } else { Summand::Deg };
                if g.coin() {
                    PGSp6Rep::i2_summand(t, w)
                } else {
                    PGSp6Rep::i13_summand(t, w)
                }
            }
            8 => {
                let t = g.gl2_sc();
                PGSp6Rep::i13_irred(t)
            }
            9 => {
                let b = g.gl3();
                PGSp6Rep::i3_irred(b)
            }
            10 => {
                let b = g.gl3();
                let w = if g.coin() { Summand::Gen } else { Summand::Deg };
                PGSp6Rep::i3_summand(b, w)
            }
            11 => {
                let t = g.gsp4();
                PGSp6Rep::delta_1(t)
            }
            12 => {
                let t = g.gsp4();
                if g.coin() {
                    PGSp6Rep::i1_irred(t)
                } else {
                    let s = g.pos_rat();
                    PGSp6Rep::j1(s, t)
                }
            }
            _ => {
                let l = g.label();
                let l = if g.coin() { format!("theta({l})") } else { l };
                let gen = g.coin();
                PGSp6Rep::sc_abstract(&l, gen)
            }
        })
    }

    /// Parameters not factoring through a proper Levi.
    pub fn lparam_discrete(&mut self) -> LParamG2 {
        self.retry(|g| match g.below(9) {
            0 => Ok(LParamG2::Principal),
            1 => LParamG2::subregular(WfImage::Trivial),
            2 => {
                let c = g.quadratic()?;
                LParamG2::subregular(WfImage::Mu2(c))
            }
            3 => {
                let c = g.cubic()?;
                LParamG2::subregular(WfImage::Mu3(c))
            }
            4 => {
                let t = g.gl2_dihedral()?;
                LParamG2::subregular(WfImage::S3(t))
            }
            5 => {
                let t = g.gl2_sd_trivial();
                LParamG2::short_root(t)
            }
            6 => {
                let t = g.gl2_sd_trivial();
                LParamG2::long_root(t)
            }
            _ => {
                let l = g.label();
                LParamG2::cuspidal(&l)
            }
        })
    }

    pub fn lparam(&mut self) -> LParamG2 {
        self.retry(|g| match g.below(4) {
            0 | 1 => Ok(g.lparam_discrete()),
            2 => {
                let levi = if g.coin() { Levi::M } else { Levi::L };
                let (t, s) = (g.gl2_ds(), g.rat());
                LParamG2::levi_gl2(levi, t.twisted(s))
            }
            _ => {
                let c = g.torus();
                Ok(LParamG2::levi_torus(c))
            }
        })
    }

    pub fn c3_vector(&mut self) -> C3Vec {
        [self.rat(), self.rat(), self.rat()]
    }
}

// ------------------------------------------------------------------ shrinking

/// Simpler variants of a G2 representation, in shrinking order.
fn shrink_g2(pi: &G2Rep) -> Vec<G2Rep> {
    let st1 = GL2Rep::steinberg(ExponentChar::trivial());
    let rho0 = || GL2Rep::sc_plain("rho0").expect("valid label");
    let small = [q(1, 2), qi(1)];
    let mut out: Vec<Result<G2Rep>> = Vec::new();
    match pi {
        G2Rep::JP { s, tau } | G2Rep::JQ { s, tau } => {
            let mk = |s: Q, t: GL2Rep| if matches!(pi, G2Rep::JP { .. }) { G2Rep::jp(s, t) } else { G2Rep::jq(s, t) };
            for x in small.iter().filter(|x| *x < s) {
                out.push(mk(*x, tau.clone()));
            }
            out.push(mk(*s, st1.clone()));
            out.push(mk(*s, rho0()));
        }
        G2Rep::JB(c) => {
            let (a, b) = c.exponents();
            out.push(G2Rep::jb(TorusCharG2 { c1: ExponentChar::abs(a), c2: ExponentChar::abs(b) }));
            out.push(G2Rep::jb(TorusCharG2 { c1: ExponentChar::abs(qi(3)), c2: ExponentChar::abs(qi(1)) }));
        }
        G2Rep::IB(c) => {
            out.push(G2Rep::ib(TorusCharG2 { c1: c.c1.clone(), c2: ExponentChar::trivial() }));
            out.push(G2Rep::ib(TorusCharG2::trivial()));
        }
        G2Rep::IP(t) => {
            out.push(G2Rep::ip(st1.clone()));
            out.push(G2Rep::ip(rho0()));
            let _ = t;
        }
        G2Rep::IQ(_) => {
            out.push(G2Rep::iq(st1.clone()));
            out.push(G2Rep::iq(rho0()));
        }
        G2Rep::DeltaP(_) => out.push(G2Rep::delta_p(rho0())),
        G2Rep::DeltaQ(_) => out.push(G2Rep::delta_q(rho0())),
        G2Rep::PiGen(PiGenParam::Quadratic(_) | PiGenParam::Cubic(_)) => out.push(Ok(G2Rep::PiGen(PiGenParam::One))),
        G2Rep::ScFromPD(_) => out.push(G2Rep::sc_from_pd(PDxRep::Other { label: "rho0".into(), heart: Heart::Yes })),
        G2Rep::ScAbstract { sl2_lift: Some(_), .. } => out.push(G2Rep::pi_rho("rho0")),
        G2Rep::ScAbstract { generic, .. } => out.push(G2Rep::sc_abstract("rho0", *generic)),
        _ => {}
    }
    out.into_iter().filter_map(|r| r.ok()).filter(|x| x != pi).collect()
}

fn shrink_p6(sigma: &PGSp6Rep) -> Vec<PGSp6Rep> {
    let st1 = GL2Rep::steinberg(ExponentChar::trivial());
    let mut out: Vec<Result<PGSp6Rep>> = Vec::new();
    match sigma {
        PGSp6Rep::J2 { s, tau } => {
            for x in [q(1, 2), qi(1)].iter().filter(|x| *x < s) {
                out.push(PGSp6Rep::j2(*x, tau.clone()));
            }
            out.push(PGSp6Rep::j2(*s, st1.clone()));
        }
        PGSp6Rep::J13(t) if t.is_essentially_tempered() => {
            out.push(PGSp6Rep::j13(t.untwisted().twisted(q(1, 2))));
            out.push(PGSp6Rep::j13(st1.twisted(t.twist())));
        }
        PGSp6Rep::ScAbstract { label, generic } if label != "rho0" => out.push(PGSp6Rep::sc_abstract("rho0", *generic)),
        _ => {}
    }
    out.into_iter().filter_map(|r| r.ok()).filter(|x| x != sigma).collect()
}

fn no_shrink<T>(_: &T) -> Vec<T> {
    Vec::new()
}

// ------------------------------------------------------------------ reports

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub counterexample: String,
    pub original: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub cases: usize,
    pub failed: usize,
    /// Distinct minimized failures, at most ten.
    pub failures: Vec<Failure>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub size: usize,
    pub p: String,
    pub properties: Vec<PropertyReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.property == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {}, size {}, p {})", self.suite, self.seed, self.size, self.p)?;
        for p in &self.properties {
            let mark = if p.passed() { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {:<28} {} cases, {} failed", p.property, p.cases, p.failed)?;
            for x in &p.failures {
                writeln!(f, "       {}: {}", x.counterexample, x.message)?;
            }
        }
        Ok(())
    }
}

type Outcome = std::result::Result<(), String>;

fn minimize<T: Clone>(x: &T, shrink: &dyn Fn(&T) -> Vec<T>, prop: &dyn Fn(&T) -> Outcome) -> (T, String) {
    let mut cur = x.clone();
    let mut msg = prop(&cur).err().unwrap_or_default();
    'outer: for _ in 0..32 {
        for c in shrink(&cur) {
            if let Err(m) = prop(&c) {
                cur = c;
                msg = m;
                continue 'outer;
            }
        }
        break;
    }
    (cur, msg)
}

fn check<T: Clone + fmt::Display>(
    name: &str,
    inputs: &[T],
    prop: impl Fn(&T) -> Outcome,
    shrink: impl Fn(&T) -> Vec<T>,
) -> PropertyReport {
    let mut failed = 0;
    let mut seen = BTreeSet::new();
    let mut failures = Vec::new();
    for x in inputs {
        if prop(x).is_ok() {
            continue;
        }
        failed += 1;
        let (m, msg) = minimize(x, &shrink, &prop);
        let lit = m.to_string();
        if failures.len() < 10 && seen.insert(lit.clone()) {
            failures.push(Failure { counterexample: lit, original: x.to_string(), message: msg });
        }
    }
    PropertyReport { property: name.into(), cases: inputs.len(), failed, failures }
}

fn single(name: &str, ok: Outcome) -> PropertyReport {
    let failures: Vec<Failure> = ok
        .err()
        .into_iter()
        .map(|m| Failure { counterexample: "-".into(), original: "-".into(), message: m })
        .collect();
    PropertyReport { property: name.into(), cases: 1, failed: failures.len(), failures }
}

fn err(e: Error) -> String {
    e.to_string()
}

// ------------------------------------------------------------------ suites

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Dichotomy,
    Howe,
    Weyl,
    Roundtrip,
    Packets,
    Reducibility,
    Preservation,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Weyl, Suite::Reducibility, Suite::Packets, Suite::Dichotomy, Suite::Howe, Suite::Preservation, Suite::Roundtrip];

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "dichotomy" => Suite::Dichotomy,
            "howe" => Suite::Howe,
            "weyl" => Suite::Weyl,
            "roundtrip" => Suite::Roundtrip,
            "packets" => Suite::Packets,
            "reducibility" => Suite::Reducibility,
            "preservation" => Suite::Preservation,
            "all" => Suite::All,
            _ => {
                return Err(Error::Precondition(format!(
                    "unknown suite `{s}`; expected dichotomy, howe, weyl, roundtrip, packets, reducibility, preservation or all"
                )))
            }
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dichotomy => "dichotomy",
            Suite::Howe => "howe",
            Suite::Weyl => "weyl",
            Suite::Roundtrip => "roundtrip",
            Suite::Packets => "packets",
            Suite::Reducibility => "reducibility",
            Suite::Preservation => "preservation",
            Suite::All => "all",
        }
    }
}

pub struct Runner<'a> {
    pub reg: &'a Registry,
    pub p: PContext,
    pub seed: u64,
    pub size: usize,
}

impl<'a> Runner<'a> {
    fn gen(&self, stream: u64) -> Gen<'a> {
        Gen::new(self.reg, self.p, self.seed, stream)
    }

    fn ctx(&self) -> Ctx<'a> {
        Ctx { reg: self.reg, p: self.p }
    }

    fn draw<T>(&self, stream: u64, f: impl Fn(&mut Gen<'a>) -> T) -> Vec<T> {
        let mut g = self.gen(stream);
        (0..self.size).map(|_| f(&mut g)).collect()
    }

    pub fn run(&self, suite: Suite) -> VerifyReport {
        let properties = match suite {
            Suite::All => Suite::ALL.iter().flat_map(|s| self.properties(*s)).collect(),
            s => self.properties(s),
        };
        VerifyReport { suite: suite.name().into(), seed: self.seed, size: self.size, p: self.p.to_string(), properties }
    }

    fn properties(&self, suite: Suite) -> Vec<PropertyReport> {
        match suite {
            Suite::Weyl => self.weyl(),
            Suite::Reducibility => self.reducibility(),
            Suite::Packets => self.packets(),
            Suite::Dichotomy => self.dichotomy(),
            Suite::Howe => self.howe(),
            Suite::Preservation => self.preservation(),
            Suite::Roundtrip => self.roundtrip(),
            Suite::All => unreachable!("expanded by run"),
        }
    }

    pub fn weyl(&self) -> Vec<PropertyReport> {
        let order = |n: usize, want: usize| if n == want { Ok(()) } else { Err(format!("order {n}, expected {want}")) };
        let vs = self.draw(1, Gen::c3_vector);
        let group = c3_dual_weyl_group();
        let tori = self.draw(2, Gen::torus);
        let w2 = g2_weyl_group();
        vec![
            single("g2_weyl_order", order(g2_weyl_order(), 12)),
            single("c3_weyl_order", order(c3_weyl_order(), 48)),
            check("c3_form_q_invariant", &vs.iter().map(|v| VecLit(*v)).collect::<Vec<_>>(), |v| form_invariant(&group, v.0, c3_form_q), no_shrink),
            check("ib_weyl_invariant", &tori.iter().map(|c| TorusLit(c.clone())).collect::<Vec<_>>(), |c| ib_invariant(&w2, &c.0), no_shrink),
        ]
    }

    pub fn reducibility(&self) -> Vec<PropertyReport> {
        let cases = self.draw(3, |g| DualityCase { s: g.rat(), tau: g.gl2_tempered(), engine: g.below(4) });
        vec![check("duality_minus_s_contragredient", &cases, duality_holds, shrink_duality)]
    }

    pub fn packets(&self) -> Vec<PropertyReport> {
        let params = self.draw(4, Gen::lparam_discrete);
        vec![
            check("packet_size_matches_characters", &params, packet_size, no_shrink),
            check("packet_unique_generic_at_trivial", &params, packet_generic, no_shrink),
        ]
    }

    pub fn dichotomy(&self) -> Vec<PropertyReport> {
        let reg = self.reg;
        let p = self.p;
        let reps = self.draw(5, Gen::g2);
        let ds = self.draw(6, Gen::g2_discrete);
        vec![
            check(
                "dichotomy_exactly_one_side",
                &reps,
                |pi| match dichotomy(reg, pi) {
                    Ok(Side::Unknown) => Err("dichotomy undecided".into()),
                    Ok(_) => Ok(()),
                    Err(e) => Err(err(e)),
                },
                shrink_g2,
            ),
            check(
                "ds_target_decided",
                &ds,
                |pi| match discrete_series_target(reg, pi, p) {
                    Ok(DsTarget::Unknown) => Err("target undecided".into()),
                    Ok(_) => Ok(()),
                    Err(e) => Err(err(e)),
                },
                shrink_g2,
            ),
        ]
    }

    pub fn howe(&self) -> Vec<PropertyReport> {
        let p = self.p;
        let pds = self.draw(7, Gen::pd);
        let exts = self.draw(8, Gen::pgl3_ext);
        let g2s = self.draw(9, Gen::g2);
        let p6s = self.draw(10, Gen::p6);
        let d_img = image(&pds, |x| Ok(theta_d_to_g2(x).value));
        let b_img = image(&exts, |x| theta_b_to_g2(x, p).map(|r| r.value));
        let g_img = image(&g2s, |x| theta_g2_to_p6(x).map(|r| r.value));
        let p_img = image(&p6s, |x| theta_p6_to_g2(x).map(|r| r.value));
        let disjoint = {
            let both: Vec<String> = d_img.keys().filter(|k| b_img.contains_key(*k)).map(|k| k.to_string()).collect();
            if both.is_empty() {
                Ok(())
            } else {
                Err(format!("in both images: {}", both.join(", ")))
            }
        };
        vec![
            injective("injective_theta_d", pds.len(), &d_img),
            injective("injective_theta_b", exts.len(), &b_img),
            injective("injective_theta_g2_p6", g2s.len(), &g_img),
            injective("injective_theta_p6_g2", p6s.len(), &p_img),
            PropertyReport { cases: pds.len() + exts.len(), ..single("images_theta_b_theta_d_disjoint", disjoint) },
        ]
    }

    pub fn preservation(&self) -> Vec<PropertyReport> {
        let p = self.p;
        let g2s = self.draw(11, Gen::g2);
        let p6s = self.draw(12, Gen::p6);
        let exts = self.draw(13, Gen::pgl3_ext);
        let pds = self.draw(14, Gen::pd);
        vec![
            check(
                "preservation_g2_to_p6",
                &g2s,
                |pi| match theta_g2_to_p6(pi).map_err(err)?.value {
                    LiftValue::Rep(s) => preserved(pi.is_tempered(), pi.is_generic(), s.is_tempered(), s.genericity()),
                    _ => Ok(()),
                },
                shrink_g2,
            ),
            check(
                "preservation_p6_to_g2",
                &p6s,
                |s| match theta_p6_to_g2(s).map_err(err)?.value {
                    LiftValue::Rep(pi) => preserved(
                        s.is_tempered(),
                        s.genericity() == Genericity::Generic,
                        pi.is_tempered(),
                        Genericity::from_bool(pi.is_generic()),
                    ),
                    _ => Ok(()),
                },
                shrink_p6,
            ),
            check(
                "preservation_theta_b",
                &exts,
                |e| match theta_b_to_g2(e, p).map_err(err)?.value {
                    LiftValue::Rep(pi) => {
                        let gen = e.base().is_generic() && e.ext() != Ext::Minus;
                        preserved(e.base().is_tempered(), gen, pi.is_tempered(), Genericity::from_bool(pi.is_generic()))
                    }
                    _ => Ok(()),
                },
                no_shrink,
            ),
            check(
                "preservation_theta_d",
                &pds,
                |d| match theta_d_to_g2(d).value {
                    LiftValue::Rep(pi) => preserved(true, false, pi.is_tempered(), Genericity::from_bool(pi.is_generic())),
                    _ => Ok(()),
                },
                no_shrink,
            ),
        ]
    }

    pub fn roundtrip(&self) -> Vec<PropertyReport> {
        let ctx = self.ctx();
        let g2n = self.draw(15, |g| loop {
            let pi = g.g2_nontempered();
            if !matches!(pi, G2Rep::JB(_)) {
                break pi;
            }
        });
        let p6n = self.draw(16, |g| loop {
            let s = g.p6_nontempered();
            if matches!(&s, PGSp6Rep::J2 { .. }) || matches!(&s, PGSp6Rep::J13(t) if t.is_essentially_tempered()) {
                break s;
            }
        });
        let borel = self.draw(17, |g| loop {
            let pi = g.g2_nontempered();
            if matches!(pi, G2Rep::JB(_)) {
                break pi;
            }
        });
        let g2s = self.draw(18, Gen::g2);
        let p6s = self.draw(19, Gen::p6);
        let params = self.draw(20, Gen::lparam);
        let g2_rt = |pi: &G2Rep| -> Outcome {
            let s = theta_g2_to_p6(pi).map_err(err)?;
            let s = s.as_rep().ok_or("lift is not a representation")?;
            let back = theta_p6_to_g2(s).map_err(err)?;
            match back.as_rep() {
                Some(x) if x == pi => Ok(()),
                _ => Err(format!("{pi} -> {s} -> {back}")),
            }
        };
        let p6_rt = |s: &PGSp6Rep| -> Outcome {
            let pi = theta_p6_to_g2(s).map_err(err)?;
            let pi = pi.as_rep().ok_or("lift is not a representation")?;
            let back = theta_g2_to_p6(pi).map_err(err)?;
            match back.as_rep() {
                Some(x) if x == s => Ok(()),
                _ => Err(format!("{s} -> {pi} -> {back}")),
            }
        };
        vec![
            check("nontempered_g2_p6_g2", &g2n, g2_rt, shrink_g2),
            check("nontempered_p6_g2_p6", &p6n, p6_rt, shrink_p6),
            check("nontempered_borel_g2_p6_g2", &borel, g2_rt, shrink_g2),
            check("literal_roundtrip_g2", &g2s, |x| literal_rt(x, parse_g2(ctx, &x.to_string())), shrink_g2),
            check("literal_roundtrip_p6", &p6s, |x| literal_rt(x, parse_p6(ctx, &x.to_string())), shrink_p6),
            check("literal_roundtrip_lparam", &params, |x| literal_rt(x, parse_lparam(ctx, &x.to_string())), no_shrink),
        ]
    }
}

pub fn run_verification(suite: Suite, reg: &Registry, p: PContext, seed: u64, size: usize) -> VerifyReport {
    Runner { reg, p, seed, size }.run(suite)
}

// ------------------------------------------------------------------ property bodies

#[derive(Clone)]
struct VecLit(C3Vec);

impl fmt::Display for VecLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0.map(crate::chars::fmt_q);
        write!(f, "({}, {}, {})", v[0], v[1], v[2])
    }
}

#[derive(Clone)]
struct TorusLit(TorusCharG2);

impl fmt::Display for TorusLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0.c1, self.0.c2)
    }
}

pub fn form_invariant(group: &[Mat<3>], v: C3Vec, form: fn(C3Vec) -> Q) -> Outcome {
    let base = form(v);
    for w in group {
        let wv = w.apply_q(v);
        if form(wv) != base {
            return Err(format!("q changes from {} to {}", crate::chars::fmt_q(base), crate::chars::fmt_q(form(wv))));
        }
    }
    Ok(())
}

/// The generated vectors on which a form fails invariance.
pub fn form_failures(vs: &[C3Vec], form: fn(C3Vec) -> Q) -> usize {
    let g = c3_dual_weyl_group();
    vs.iter().filter(|v| form_invariant(&g, **v, form).is_err()).count()
}

pub fn printed_form_failures(vs: &[C3Vec]) -> usize {
    form_failures(vs, c3_form_q_printed)
}

/// The part of a decomposition that does not depend on the chosen orbit member.
fn ib_verdict(c: &TorusCharG2) -> std::result::Result<(bool, u32, Vec<Option<G2Rep>>), String> {
    let r = decompose_ib_g2(c).map_err(err)?;
    let mut reps: Vec<Option<G2Rep>> = r.constituents.iter().map(|x| x.rep.clone()).collect();
    reps.sort();
    Ok((r.irreducible, r.length, reps))
}

pub fn ib_invariant(w: &[Mat<2>], c: &TorusCharG2) -> Outcome {
    let base = ib_verdict(c);
    for x in w {
        let d = g2_act_on_char(x, c);
        if ib_verdict(&d) != base {
            return Err(format!("verdict differs at ({}, {})", d.c1, d.c2));
        }
    }
    Ok(())
}

#[derive(Clone)]
struct DualityCase {
    s: Q,
    tau: GL2Rep,
    engine: usize,
}

const ENGINES: [&str; 4] = ["IP", "IQ", "I2", "I13"];

impl fmt::Display for DualityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}; {})", ENGINES[self.engine], crate::chars::fmt_q(self.s), self.tau)
    }
}

type Shape = (bool, u32, Vec<(Option<String>, crate::reducibility::Position)>);

fn shape<R: fmt::Display>(r: &RepStructure<R>, dual: bool) -> Shape {
    let mut v: Vec<_> = r
        .constituents
        .iter()
        .map(|c| (c.rep.as_ref().map(|x| x.to_string()), if dual && !r.irreducible { c.position.dual() } else { c.position }))
        .collect();
    v.sort();
    (r.irreducible, r.length, v)
}

fn engine(i: usize, s: Q, tau: &GL2Rep, dual: bool) -> Result<Shape> {
    Ok(match i {
        0 => shape(&decompose_ip(s, tau)?, dual),
        1 => shape(&decompose_iq(s, tau)?, dual),
        2 => shape(&decompose_i2(s, tau)?, dual),
        _ => shape(&decompose_i13(s, tau)?, dual),
    })
}

fn duality_holds(c: &DualityCase) -> Outcome {
    let a = engine(c.engine, c.s, &c.tau, true);
    let b = engine(c.engine, -c.s, &c.tau.contragredient(), false);
    match (a, b) {
        (Ok(a), Ok(b)) if a == b => Ok(()),
        (Err(_), Err(_)) => Ok(()),
        (Ok(_), Ok(_)) => Err("constituents differ".into()),
        (Ok(_), Err(e)) | (Err(e), Ok(_)) => Err(format!("only one side is covered: {e}")),
    }
}

fn shrink_duality(c: &DualityCase) -> Vec<DualityCase> {
    let mut v = Vec::new();
    for s in [q(1, 2), qi(1)] {
        if s < c.s.abs() {
            v.push(DualityCase { s: if c.s < Q::zero() { -s } else { s }, ..c.clone() });
        }
    }
    v.push(DualityCase { tau: GL2Rep::steinberg(ExponentChar::trivial()), ..c.clone() });
    v
}

fn packet_size(phi: &LParamG2) -> Outcome {
    let p = packet_of(phi).map_err(err)?;
    let n = component_group(phi).characters().len();
    if p.members.len() == n {
        Ok(())
    } else {
        Err(format!("{} members for {n} characters", p.members.len()))
    }
}

fn packet_generic(phi: &LParamG2) -> Outcome {
    let p = packet_of(phi).map_err(err)?;
    let generic: Vec<&str> = p.members.iter().filter(|(_, m)| m.is_generic()).map(|(c, _)| c.as_str()).collect();
    if generic == ["1"] {
        Ok(())
    } else {
        Err(format!("generic members at characters {generic:?}"))
    }
}

/// Nonzero outputs keyed by their literal, with the inputs reaching them.
fn image<T: fmt::Display, U: fmt::Display>(
    xs: &[T],
    f: impl Fn(&T) -> Result<LiftValue<U>>,
) -> BTreeMap<String, BTreeSet<String>> {
    let mut m: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for x in xs {
        if let Ok(LiftValue::Rep(y)) = f(x) {
            m.entry(y.to_string()).or_default().insert(x.to_string());
        }
    }
    m
}

fn injective(name: &str, cases: usize, img: &BTreeMap<String, BTreeSet<String>>) -> PropertyReport {
    let failures: Vec<Failure> = img
        .iter()
        .filter(|(_, src)| src.len() > 1)
        .map(|(y, src)| {
            let v: Vec<&str> = src.iter().map(String::as_str).collect();
            Failure { counterexample: v.join(" | "), original: v.join(" | "), message: format!("all lift to {y}") }
        })
        .collect();
    PropertyReport { property: name.into(), cases, failed: failures.len(), failures: failures.into_iter().take(10).collect() }
}

fn preserved(src_tempered: bool, src_generic: bool, tempered: bool, generic: Genericity) -> Outcome {
    if src_tempered != tempered {
        return Err(format!("temperedness {src_tempered} lifts to {tempered}"));
    }
    if src_generic && generic == Genericity::NonGeneric {
        return Err("a generic representation lifts to a non-generic one".into());
    }
    Ok(())
}

fn literal_rt<T: PartialEq + fmt::Display>(x: &T, parsed: Result<T>) -> Outcome {
    match parsed {
        Ok(y) if y == *x => Ok(()),
        Ok(y) => Err(format!("reparsed as {y}")),
        Err(e) => Err(err(e)),
    }
}
