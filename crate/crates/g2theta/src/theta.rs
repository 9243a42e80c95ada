//! The theta correspondences PD^x x G2, (PGL3 x| Z/2) x G2 and G2 x PGSp6,
//! and the checks built on them.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::chars::{borel_char_triple, q, torus_from_triple, ExponentChar, Registry, TorusCharG2};
use crate::error::{Error, Result};
use crate::reps::{
    g2_langlands_from_torus, gl2_langlands_quotient, Ext, G2Rep, GL2Kind, GL2Rep, GL3Rep, GSp4Rep, Heart,
    PContext, PDxRep, PGL3ExtRep, PGSp6Rep, PiGenParam, PiScLabel, Provenance, SigmaGenParam, Summand,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftValue<T> {
    Zero,
    Rep(T),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftResult<T> {
    pub value: LiftValue<T>,
    /// What is known about the big theta lift beyond its quotient.
    pub big_theta_note: Option<String>,
    pub provenance: Option<Provenance>,
}

impl<T> LiftResult<T> {
    fn rep(t: T) -> Self {
        LiftResult { value: LiftValue::Rep(t), big_theta_note: None, provenance: None }
    }

    fn zero() -> Self {
        LiftResult { value: LiftValue::Zero, big_theta_note: None, provenance: None }
    }

    fn unknown() -> Self {
        LiftResult { value: LiftValue::Unknown, big_theta_note: None, provenance: None }
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.big_theta_note = Some(s.into());
        self
    }

    fn from(mut self, p: Provenance) -> Self {
        self.provenance = Some(p);
        self
    }

    pub fn as_rep(&self) -> Option<&T> {
        match &self.value {
            LiftValue::Rep(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.value, LiftValue::Zero)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.value, LiftValue::Unknown)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftJson {
    pub value: &'static str,
    pub target: Option<String>,
    pub big_theta_note: Option<String>,
    pub provenance: Option<&'static str>,
}

pub fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::FromD => "from_D",
        Provenance::FromB => "from_B",
        Provenance::FromSL2tilde => "from_SL2tilde",
        Provenance::Plain => "plain",
    }
}

impl<T: fmt::Display> LiftResult<T> {
    pub fn to_json(&self) -> LiftJson {
        let (value, target) = match &self.value {
            LiftValue::Zero => ("zero", None),
            LiftValue::Rep(t) => ("rep", Some(t.to_string())),
            LiftValue::Unknown => ("unknown", None),
        };
        LiftJson { value, target, big_theta_note: self.big_theta_note.clone(), provenance: self.provenance.map(provenance_name) }
    }
}

impl<T: fmt::Display> fmt::Display for LiftResult<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            LiftValue::Zero => write!(f, "0")?,
            LiftValue::Rep(t) => write!(f, "{t}")?,
            LiftValue::Unknown => write!(f, "unknown")?,
        }
        if let Some(n) = &self.big_theta_note {
            write!(f, "  [{n}]")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------- PD^x -> G2

pub fn theta_d_to_g2(tau: &PDxRep) -> LiftResult<G2Rep> {
    let r = match tau {
        PDxRep::Trivial => LiftResult::rep(G2Rep::PiDeg1),
        PDxRep::UnramifiedCubic { power: 1, .. } => LiftResult::rep(G2Rep::PiSc(PiScLabel::Omega)),
        PDxRep::UnramifiedCubic { .. } => LiftResult::rep(G2Rep::PiSc(PiScLabel::Omega2)),
        PDxRep::Other { heart: Heart::Yes, .. } => LiftResult::rep(G2Rep::ScFromPD(tau.clone())),
        PDxRep::Other { heart: Heart::No, .. } => return LiftResult::zero(),
        PDxRep::Other { heart: Heart::Unknown, .. } => return LiftResult::unknown(),
    };
    r.from(Provenance::FromD)
}

/// The PD^x representation lifting to pi, if pi is in the image of theta_D.
/// `None` also covers the Unknown case; see `d_side`.
pub fn theta_d_preimage(reg: &Registry, pi: &G2Rep) -> Result<Option<PDxRep>> {
    Ok(match pi {
        G2Rep::PiDeg1 => Some(PDxRep::Trivial),
        G2Rep::ScFromPD(p) => Some(p.clone()),
        G2Rep::PiSc(l @ (PiScLabel::Omega | PiScLabel::Omega2)) => {
            let sym = reg
                .unramified_of_order(3)
                .ok_or_else(|| Error::Registry("pi_sc[omega] needs an unramified cubic symbol in the registry".into()))?;
            let base = ExponentChar::symbol(reg, &sym.name, 1)?;
            let chi = if *l == PiScLabel::Omega { base } else { base.pow(2) };
            Some(PDxRep::unramified_cubic(reg, chi)?)
        }
        _ => None,
    })
}

// ---------------------------------------------------------- PGL3 x| Z/2 -> G2

fn triple(c: &[ExponentChar; 3]) -> Result<TorusCharG2> {
    torus_from_triple(&(c[0].clone(), c[1].clone(), c[2].clone()))
}

fn summand(e: Ext) -> Summand {
    if e == Ext::Minus {
        Summand::Deg
    } else {
        Summand::Gen
    }
}

pub fn theta_b_to_g2(tau: &PGL3ExtRep, p: PContext) -> Result<LiftResult<G2Rep>> {
    let base = tau.base();
    let e = tau.ext();
    // the parameter contains the trivial representation and epsilon = -
    if e == Ext::Minus && base.parameter_has_trivial() {
        return Ok(LiftResult::zero());
    }
    let sd_no_trivial = base.is_self_dual() && !base.parameter_has_trivial();
    let r = match base {
        GL3Rep::Supercuspidal { self_dual: true, .. } if p != PContext::Two => {
            return Err(Error::Precondition("self-dual supercuspidals of PGL3 occur only for p = 2".into()));
        }
        GL3Rep::Supercuspidal { .. } => {
            let r = LiftResult::rep(G2Rep::sc_from_b(tau.clone())?);
            if base.is_self_dual() {
                r.note("Theta(tau^+) + Theta(tau^-) = pi_gen + pi_deg, both supercuspidal")
            } else {
                r
            }
        }
        GL3Rep::Steinberg(c) if c.is_trivial() => {
            let pi = if e == Ext::Plus { G2Rep::PiGen(PiGenParam::One) } else { G2Rep::PiSc(PiScLabel::One) };
            LiftResult::rep(pi)
        }
        GL3Rep::Steinberg(c) => LiftResult::rep(G2Rep::pi_gen_cubic(c.clone())?),
        GL3Rep::InducedFromGL2(s) if sd_no_trivial => LiftResult::rep(G2Rep::ip_summand(s.clone(), summand(e))?),
        GL3Rep::InducedFromGL2(s) => LiftResult::rep(G2Rep::ip(s.clone())?),
        GL3Rep::PrincipalSeries(c) if sd_no_trivial => LiftResult::rep(G2Rep::ib_summand(triple(c)?, summand(e))?),
        GL3Rep::PrincipalSeries(c) => LiftResult::rep(G2Rep::ib(triple(c)?)?),
        GL3Rep::SpecialJB(chi) => {
            let t = (chi.twist(q(1, 2)), ExponentChar::trivial(), chi.twist(q(-1, 2)));
            LiftResult::rep(g2_langlands_from_torus(&torus_from_triple(&t)?)?)
        }
    };
    Ok(r.from(Provenance::FromB))
}

/// Candidates for theta_B^{-1}(pi); confirmed by applying theta_B.
fn theta_b_candidates(pi: &G2Rep) -> Result<Vec<PGL3ExtRep>> {
    let with_exts = |b: GL3Rep| -> Vec<PGL3ExtRep> {
        let exts: &[Ext] = if b.is_self_dual() { &[Ext::Plus, Ext::Minus] } else { &[Ext::InducedPlus] };
        exts.iter().filter_map(|e| PGL3ExtRep::new(b.clone(), *e).ok()).collect()
    };
    let ps_of = |c: &TorusCharG2| {
        let (a, b, d) = borel_char_triple(c);
        GL3Rep::principal_series([a, b, d])
    };
    Ok(match pi {
        G2Rep::PiGen(PiGenParam::One) | G2Rep::PiSc(PiScLabel::One) => with_exts(GL3Rep::steinberg(ExponentChar::trivial())?),
        G2Rep::PiGen(PiGenParam::Cubic(c)) => with_exts(GL3Rep::steinberg(c.clone())?),
        G2Rep::IP(s) | G2Rep::IPSummand(s, _) => {
            let mut v = with_exts(GL3Rep::induced(s.clone())?);
            v.extend(with_exts(GL3Rep::induced(s.contragredient())?));
            v
        }
        G2Rep::IB(c) | G2Rep::IBSummand(c, _) => crate::reps::g2_orbit(c)
            .iter()
            .filter_map(|d| ps_of(d).ok())
            .flat_map(with_exts)
            .collect(),
        G2Rep::ScFromB(e) => vec![e.clone()],
        G2Rep::JQ { s, tau } if *s == q(1, 2) => match tau.kind() {
            GL2Kind::PrincipalSeries(a, b) if a == b && a.is_quadratic() && tau.twist().is_zero() => {
                with_exts(GL3Rep::special_jb(a.clone())?)
            }
            _ => Vec::new(),
        },
        _ => Vec::new(),
    })
}

pub fn theta_b_preimage(pi: &G2Rep, p: PContext) -> Result<Option<PGL3ExtRep>> {
    for c in theta_b_candidates(pi)? {
        match theta_b_to_g2(&c, p) {
            Ok(r) if r.as_rep() == Some(pi) => return Ok(Some(c)),
            _ => {}
        }
    }
    Ok(None)
}

// ---------------------------------------------------------- G2 -> PGSp6

fn gl3_of_theta_b(pi: &G2Rep) -> Result<GL3Rep> {
    theta_b_preimage(pi, PContext::Two)?
        .map(|e| e.base().clone())
        .ok_or_else(|| Error::InvariantViolation(format!("{pi} is not in the image of theta_B")))
}

pub fn theta_g2_to_p6(pi: &G2Rep) -> Result<LiftResult<PGSp6Rep>> {
    use G2Rep::*;
    let r = match pi {
        St => LiftResult::rep(PGSp6Rep::St),
        JQ { s, tau } => LiftResult::rep(PGSp6Rep::j2(*s, tau.clone())?)
            .note(format!("Theta({pi}) is a nonzero quotient of I2({} x {})", tau.twisted(*s), tau.twisted(*s))),
        JP { s, tau } => {
            let t = tau.twisted(*s);
            LiftResult::rep(PGSp6Rep::j13(t.clone())?).note(format!("Theta({pi}) is a nonzero quotient of I13({t} x 1)"))
        }
        JB(c) => LiftResult::rep(PGSp6Rep::j13(gl2_langlands_quotient(&c.c1, &c.c2)?)?),
        Triv => LiftResult::rep(PGSp6Rep::j13(GL2Rep::one_dim(ExponentChar::trivial()).twisted(q(3, 2)))?),
        DeltaP(t) => LiftResult::rep(PGSp6Rep::delta_13(t.clone())?),
        DeltaQ(t) => LiftResult::rep(PGSp6Rep::delta_2(t.clone())?),
        PiGen(PiGenParam::One) => LiftResult::rep(PGSp6Rep::i3_summand(GL3Rep::steinberg(ExponentChar::trivial())?, Summand::Gen)?),
        PiSc(PiScLabel::One) => LiftResult::rep(PGSp6Rep::i3_summand(GL3Rep::steinberg(ExponentChar::trivial())?, Summand::Deg)?),
        PiGen(PiGenParam::Cubic(c)) => LiftResult::rep(PGSp6Rep::i3_irred(GL3Rep::steinberg(c.clone())?)?),
        PiGen(PiGenParam::Quadratic(c)) => LiftResult::rep(PGSp6Rep::sigma_gen_quadratic(c.clone())?),
        PiGen(PiGenParam::Dihedral(t)) => LiftResult::rep(PGSp6Rep::sigma_gen_dihedral(t.clone())?),
        IQ(t) => LiftResult::rep(PGSp6Rep::i2_irred(t.clone())?),
        IQSummand(t, w) => LiftResult::rep(PGSp6Rep::i2_summand(t.clone(), *w)?),
        IP(_) | IB(_) => LiftResult::rep(PGSp6Rep::i3_irred(gl3_of_theta_b(pi)?)?),
        IPSummand(_, w) | IBSummand(_, w) => LiftResult::rep(PGSp6Rep::i3_summand(gl3_of_theta_b(pi)?, *w)?),
        ScFromB(e) => {
            let b = e.base().clone();
            if e.ext() == Ext::InducedPlus {
                LiftResult::rep(PGSp6Rep::i3_irred(b)?)
            } else {
                LiftResult::rep(PGSp6Rep::i3_summand(b, summand(e.ext()))?)
            }
        }
        PiDeg1 | PiSc(PiScLabel::Omega | PiScLabel::Omega2) | ScFromPD(_) => LiftResult::zero(),
        PiSc(PiScLabel::MinusOne) => LiftResult::unknown(),
        ScAbstract { sl2_lift: Some(rho), .. } => LiftResult::rep(PGSp6Rep::delta_1(GSp4Rep::saito_kurokawa(rho)?)?),
        ScAbstract { label, generic, .. } => {
            LiftResult::rep(PGSp6Rep::sc_abstract(&format!("theta({label})"), *generic)?)
        }
    };
    Ok(r.from(pi.provenance()))
}

// ---------------------------------------------------------- PGSp6 -> G2

fn sc_label_inner(label: &str) -> Option<&str> {
    label.strip_prefix("theta(")?.strip_suffix(')')
}

pub fn theta_p6_to_g2(sigma: &PGSp6Rep) -> Result<LiftResult<G2Rep>> {
    use PGSp6Rep::*;
    let r = match sigma {
        J2 { s, tau } => LiftResult::rep(G2Rep::jq(*s, tau.clone())?)
            .note(format!("Theta({sigma}) is a quotient of I_Q({})", tau.twisted(*s))),
        J13(t) => {
            let pi = match PGSp6Rep::j13_is_tempered_twist(t) {
                Some(true) => G2Rep::jp(t.twist(), t.untwisted())?,
                Some(false) => {
                    let (a, b) = t.borel_data().ok_or_else(|| Error::InvariantViolation("J13 without Borel data".into()))?;
                    let (c1, c2) = if a.exponent() >= b.exponent() { (a, b) } else { (b, a) };
                    g2_langlands_from_torus(&TorusCharG2::new(c1, c2)?)?
                }
                None => return Err(Error::InvariantViolation(format!("{sigma} has no J13 shape"))),
            };
            LiftResult::rep(pi).note(format!("Theta({sigma}) is a quotient of I_P({t})"))
        }
        J1 { .. } => LiftResult::zero(),
        St => LiftResult::rep(G2Rep::St),
        Delta13(t) => LiftResult::rep(G2Rep::delta_p(t.clone())?),
        Delta2(t) => LiftResult::rep(G2Rep::delta_q(t.clone())?),
        SigmaGen(SigmaGenParam::Quadratic(c)) => LiftResult::rep(G2Rep::pi_gen_quadratic(c.clone())?),
        SigmaGen(SigmaGenParam::Dihedral(t)) => LiftResult::rep(G2Rep::pi_gen_dihedral(t.clone())?),
        I2Irred(t) => LiftResult::rep(G2Rep::iq(t.clone())?),
        I2Summand(t, w) => LiftResult::rep(G2Rep::iq_summand(t.clone(), *w)?),
        I3Irred(b) | I3Summand(b, _) => {
            let w = match sigma {
                I3Summand(_, w) => Some(*w),
                _ => None,
            };
            match i3_source(b, w)? {
                Some(pi) => LiftResult::rep(pi),
                None => LiftResult::unknown(),
            }
        }
        Delta1(GSp4Rep::SaitoKurokawa { rho }) => LiftResult::rep(G2Rep::pi_rho(rho)?),
        ScAbstract { label, generic } => match sc_label_inner(label) {
            Some(l) => LiftResult::rep(G2Rep::sc_abstract(l, *generic)?),
            None => LiftResult::unknown(),
        },
        Delta1(_) | I1Irred(_) | I13Irred(_) | I13Summand(..) => LiftResult::unknown(),
    };
    Ok(r)
}

/// The G2 representation lifting to I3(b) (w = None) or I3(b)_w.
fn i3_source(b: &GL3Rep, w: Option<Summand>) -> Result<Option<G2Rep>> {
    let ext = match w {
        None if b.is_self_dual() => Ext::Plus,
        None => Ext::InducedPlus,
        Some(Summand::Gen) => Ext::Plus,
        Some(Summand::Deg) => Ext::Minus,
    };
    let e = PGL3ExtRep::new(b.clone(), ext)?;
    let pi = match theta_b_to_g2(&e, PContext::Two)?.value {
        LiftValue::Rep(pi) => pi,
        _ => return Ok(None),
    };
    // only the branches of the forward table that land on I3
    let lifted = theta_g2_to_p6(&pi)?;
    let target = match w {
        None => PGSp6Rep::i3_irred(b.clone())?,
        Some(x) => PGSp6Rep::i3_summand(b.clone(), x)?,
    };
    Ok((lifted.as_rep() == Some(&target)).then_some(pi))
}

// ---------------------------------------------------------- dichotomy, discrete series

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    PdSide,
    Pgsp6Side,
    Unknown,
}

/// Whether pi lifts from PD^x: `None` when that is undecided.
fn d_side(reg: &Registry, pi: &G2Rep) -> Result<Option<bool>> {
    if matches!(pi, G2Rep::PiSc(PiScLabel::MinusOne)) {
        return Ok(None);
    }
    Ok(Some(theta_d_preimage(reg, pi)?.is_some()))
}

pub fn dichotomy(reg: &Registry, pi: &G2Rep) -> Result<Side> {
    let d = d_side(reg, pi)?;
    let lift = theta_g2_to_p6(pi)?;
    let p6 = if lift.is_unknown() { None } else { Some(!lift.is_zero()) };
    match (d, p6) {
        (Some(true), Some(false)) => Ok(Side::PdSide),
        (Some(false), Some(true)) => Ok(Side::Pgsp6Side),
        (Some(x), Some(y)) => Err(Error::InvariantViolation(format!(
            "{pi}: lift from PD^x {}, lift to PGSp6 {}",
            if x { "exists" } else { "absent" },
            if y { "nonzero" } else { "zero" }
        ))),
        _ => Ok(Side::Unknown),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DsTarget {
    PDx,
    PGL3,
    PGSp6,
    Unknown,
}

/// The group where the lift of a discrete series pi is a discrete series.
pub fn discrete_series_target(reg: &Registry, pi: &G2Rep, p: PContext) -> Result<DsTarget> {
    if !pi.is_discrete_series() {
        return Err(Error::Precondition(format!("{pi} is not a discrete series")));
    }
    let Some(on_d) = d_side(reg, pi)? else { return Ok(DsTarget::Unknown) };
    let on_b = theta_b_preimage(pi, p)?.is_some_and(|e| e.base().is_discrete_series());
    let lift = theta_g2_to_p6(pi)?;
    if lift.is_unknown() {
        return Ok(DsTarget::Unknown);
    }
    let on_p6 = lift.as_rep().is_some_and(PGSp6Rep::is_discrete_series);
    let hits: Vec<DsTarget> = [(on_d, DsTarget::PDx), (on_b, DsTarget::PGL3), (on_p6, DsTarget::PGSp6)]
        .into_iter()
        .filter_map(|(b, t)| b.then_some(t))
        .collect();
    match hits.as_slice() {
        [t] => Ok(*t),
        _ => Err(Error::InvariantViolation(format!("{pi}: discrete series lifts on {hits:?}"))),
    }
}

/// The Levi datum a non-tempered representation is a Langlands quotient of,
/// as (parabolic, inducing representation); the transport table sends
/// Q to P2 with tau x tau and P (or B through P) to P13 with tau x 1.
pub fn nontempered_levi_datum_g2(pi: &G2Rep) -> Option<(&'static str, GL2Rep)> {
    match pi {
        G2Rep::JQ { s, tau } => Some(("Q", tau.twisted(*s))),
        G2Rep::JP { s, tau } => Some(("P", tau.twisted(*s))),
        G2Rep::JB(c) => Some(("P", gl2_langlands_quotient(&c.c1, &c.c2).ok()?)),
        G2Rep::Triv => Some(("P", GL2Rep::one_dim(ExponentChar::trivial()).twisted(q(3, 2)))),
        _ => None,
    }
}

pub fn nontempered_levi_datum_p6(sigma: &PGSp6Rep) -> Option<(&'static str, GL2Rep)> {
    match sigma {
        PGSp6Rep::J2 { s, tau } => Some(("P2", tau.twisted(*s))),
        PGSp6Rep::J13(t) => Some(("P13", t.clone())),
        _ => None,
    }
}

pub fn levi_transport(parabolic: &str) -> Option<&'static str> {
    match parabolic {
        "Q" => Some("P2"),
        "P" => Some("P13"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steinberg_lifts() {
        let st = GL3Rep::steinberg(ExponentChar::trivial()).unwrap();
        let plus = PGL3ExtRep::new(st.clone(), Ext::Plus).unwrap();
        let minus = PGL3ExtRep::new(st, Ext::Minus).unwrap();
        let p = PContext::Other;
        assert_eq!(theta_b_to_g2(&plus, p).unwrap().as_rep(), Some(&G2Rep::PiGen(PiGenParam::One)));
        assert_eq!(theta_b_to_g2(&minus, p).unwrap().as_rep(), Some(&G2Rep::PiSc(PiScLabel::One)));
    }

    #[test]
    fn trivial_rep_round_trip() {
        let s = theta_g2_to_p6(&G2Rep::Triv).unwrap();
        let back = theta_p6_to_g2(s.as_rep().unwrap()).unwrap();
        assert_eq!(back.as_rep(), Some(&G2Rep::Triv));
    }
}
