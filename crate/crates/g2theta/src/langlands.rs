//! L-parameters of G2, their component groups, and the L-packets.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::chars::{char_inv, ExponentChar, TorusCharG2, Q};
use crate::error::{invalid, Error, Result};
use crate::reducibility::{p_torus, q_torus};
use crate::reps::{
    g2_langlands_from_torus, g2_orbit_min, g2_rho, g2_three_quadratics, G2Rep, GL2Kind, GL2Rep,
    PiGenParam, PiScLabel, Summand,
};

/// Image of W_F in the centralizer of a subregular SL2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WfImage {
    Trivial,
    Mu2(ExponentChar),
    /// Stored as min(chi, chi^-1): the two give the same parameter.
    Mu3(ExponentChar),
    S3(GL2Rep),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Levi {
    M,
    L,
    T,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LeviParam {
    GL2(GL2Rep),
    Torus(TorusCharG2),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LParamG2 {
    Principal,
    Subregular(WfImage),
    ShortRoot(GL2Rep),
    LongRoot(GL2Rep),
    Cuspidal(String),
    LeviFactored { levi: Levi, param: LeviParam, bounded: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentGroup {
    Trivial,
    Mu2,
    Mu3,
    S3,
}

impl ComponentGroup {
    /// Labels of the irreducible characters, trivial character first.
    pub fn characters(self) -> &'static [&'static str] {
        match self {
            ComponentGroup::Trivial => &["1"],
            ComponentGroup::Mu2 => &["1", "-1"],
            ComponentGroup::Mu3 => &["1", "omega", "omega2"],
            ComponentGroup::S3 => &["1", "r", "eps"],
        }
    }
}

fn sd_trivial_central_sc(tau: &GL2Rep) -> bool {
    matches!(tau.sc(), Some(s) if s.self_dual && s.central.is_trivial()) && tau.twist().is_zero()
}

impl LParamG2 {
    pub fn subregular(w: WfImage) -> Result<Self> {
        let w = match w {
            WfImage::Mu2(c) if !c.is_quadratic() => return invalid("Mu2 needs chi^2 = 1, chi != 1"),
            WfImage::Mu3(c) if !c.is_cubic() => return invalid("Mu3 needs chi^3 = 1, chi != 1"),
            WfImage::Mu3(c) => {
                let i = char_inv(&c);
                WfImage::Mu3(c.min(i))
            }
            WfImage::S3(t) => match t.sc() {
                Some(s) if s.dihedral_s3 == Some(true) && t.twist().is_zero() => WfImage::S3(t),
                _ => return invalid("the S3 case needs a supercuspidal tau with Im(phi_tau) = S3"),
            },
            w => w,
        };
        Ok(LParamG2::Subregular(w))
    }

    /// Subregular parameter from a character: trivial, quadratic or cubic.
    pub fn subregular_char(c: ExponentChar) -> Result<Self> {
        if c.is_trivial() {
            LParamG2::subregular(WfImage::Trivial)
        } else if c.is_cubic() {
            LParamG2::subregular(WfImage::Mu3(c))
        } else {
            LParamG2::subregular(WfImage::Mu2(c))
        }
    }

    pub fn short_root(tau: GL2Rep) -> Result<Self> {
        if !sd_trivial_central_sc(&tau) {
            return invalid("short-root SL2 needs a self-dual supercuspidal tau with trivial central character");
        }
        Ok(LParamG2::ShortRoot(tau))
    }

    pub fn long_root(tau: GL2Rep) -> Result<Self> {
        if !sd_trivial_central_sc(&tau) {
            return invalid("long-root SL2 needs a self-dual supercuspidal tau with trivial central character");
        }
        Ok(LParamG2::LongRoot(tau))
    }

    pub fn cuspidal(label: &str) -> Result<Self> {
        if !crate::chars::valid_ident(label) {
            return invalid(format!("`{label}` is not a valid label"));
        }
        Ok(LParamG2::Cuspidal(label.into()))
    }

    /// A parameter through the Levi of P (levi M) or Q (levi L): tau is an
    /// essentially discrete series of GL2, taken up to tau ~ tau^v.
    pub fn levi_gl2(levi: Levi, tau: GL2Rep) -> Result<Self> {
        if levi == Levi::T {
            return invalid("use a torus character for the Borel Levi");
        }
        if !tau.untwisted().is_discrete_series() {
            return invalid("a Levi parameter through M or L needs an essentially discrete series tau; principal series go through T");
        }
        let tau = if tau.twist() < num_traits::zero() {
            tau.contragredient()
        } else if tau.twist().is_zero() {
            let d = tau.contragredient();
            tau.min(d)
        } else {
            tau
        };
        let bounded = tau.twist().is_zero();
        Ok(LParamG2::LeviFactored { levi, param: LeviParam::GL2(tau), bounded })
    }

    pub fn levi_torus(c: TorusCharG2) -> Self {
        let c = g2_orbit_min(&c);
        let bounded = c.is_unitary();
        LParamG2::LeviFactored { levi: Levi::T, param: LeviParam::Torus(c), bounded }
    }

    /// The discrete parameters, i.e. those not factoring through a proper Levi.
    pub fn is_discrete(&self) -> bool {
        !matches!(self, LParamG2::LeviFactored { .. })
    }
}

pub fn component_group(phi: &LParamG2) -> ComponentGroup {
    match phi {
        LParamG2::Principal => ComponentGroup::Trivial,
        LParamG2::Subregular(WfImage::Trivial) => ComponentGroup::S3,
        LParamG2::Subregular(WfImage::Mu2(_)) => ComponentGroup::Mu2,
        LParamG2::Subregular(WfImage::Mu3(_)) => ComponentGroup::Mu3,
        LParamG2::Subregular(WfImage::S3(_)) => ComponentGroup::Trivial,
        LParamG2::ShortRoot(_) | LParamG2::LongRoot(_) => ComponentGroup::Mu2,
        LParamG2::Cuspidal(_) => ComponentGroup::Trivial,
        LParamG2::LeviFactored { .. } => {
            if split_levi_packet(phi).is_some() {
                ComponentGroup::Mu2
            } else {
                ComponentGroup::Trivial
            }
        }
    }
}

/// The bounded Levi parameters whose packet is a pair of summands.
fn split_levi_packet(phi: &LParamG2) -> Option<(G2Rep, G2Rep)> {
    let LParamG2::LeviFactored { levi, param, bounded: true } = phi else { return None };
    let pair = |g: Result<G2Rep>, d: Result<G2Rep>| Some((g.ok()?, d.ok()?));
    match (levi, param) {
        (Levi::M, LeviParam::GL2(t)) => {
            pair(G2Rep::ip_summand(t.clone(), Summand::Gen), G2Rep::ip_summand(t.clone(), Summand::Deg))
        }
        (Levi::L, LeviParam::GL2(t)) => {
            pair(G2Rep::iq_summand(t.clone(), Summand::Gen), G2Rep::iq_summand(t.clone(), Summand::Deg))
        }
        (Levi::T, LeviParam::Torus(c)) if g2_three_quadratics(c) => {
            pair(G2Rep::ib_summand(c.clone(), Summand::Gen), G2Rep::ib_summand(c.clone(), Summand::Deg))
        }
        _ => None,
    }
}

/// A packet member the tables do not name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PacketMember {
    Rep(G2Rep),
    Placeholder { param: String, character: String },
}

impl PacketMember {
    pub fn rep(&self) -> Option<&G2Rep> {
        match self {
            PacketMember::Rep(r) => Some(r),
            PacketMember::Placeholder { .. } => None,
        }
    }

    /// Placeholders stand for supercuspidal members, which are non-generic.
    pub fn is_generic(&self) -> bool {
        self.rep().is_some_and(G2Rep::is_generic)
    }
}

impl fmt::Display for PacketMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PacketMember::Rep(r) => write!(f, "{r}"),
            PacketMember::Placeholder { param, character } => write!(f, "pi({param}; {character})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packet {
    pub component_group: ComponentGroup,
    pub members: Vec<(String, PacketMember)>,
}

pub fn packet_of(phi: &LParamG2) -> Result<Packet> {
    let a = component_group(phi);
    let ch = a.characters();
    let placeholder = |c: &str| PacketMember::Placeholder { param: phi.to_string(), character: c.into() };
    let rep = PacketMember::Rep;
    let members: Vec<PacketMember> = match phi {
        LParamG2::Principal => vec![rep(G2Rep::St)],
        LParamG2::Subregular(WfImage::Trivial) => vec![
            rep(G2Rep::PiGen(PiGenParam::One)),
            rep(G2Rep::PiDeg1),
            rep(G2Rep::PiSc(PiScLabel::One)),
        ],
        LParamG2::Subregular(WfImage::Mu2(c)) => vec![
            rep(G2Rep::pi_gen_quadratic(c.clone())?),
            if c.is_unramified() { rep(G2Rep::PiSc(PiScLabel::MinusOne)) } else { placeholder(ch[1]) },
        ],
        LParamG2::Subregular(WfImage::Mu3(c)) => {
            let un = c.is_unramified();
            vec![
                rep(G2Rep::pi_gen_cubic(c.clone())?),
                if un { rep(G2Rep::PiSc(PiScLabel::Omega)) } else { placeholder(ch[1]) },
                if un { rep(G2Rep::PiSc(PiScLabel::Omega2)) } else { placeholder(ch[2]) },
            ]
        }
        LParamG2::Subregular(WfImage::S3(t)) => vec![rep(G2Rep::pi_gen_dihedral(t.clone())?)],
        LParamG2::ShortRoot(t) => vec![rep(G2Rep::delta_p(t.clone())?), placeholder(ch[1])],
        LParamG2::LongRoot(t) => vec![rep(G2Rep::delta_q(t.clone())?), placeholder(ch[1])],
        LParamG2::Cuspidal(l) => vec![rep(G2Rep::sc_abstract(l, true)?)],
        LParamG2::LeviFactored { levi, param, bounded } => {
            if let Some((g, d)) = split_levi_packet(phi) {
                vec![rep(g), rep(d)]
            } else {
                vec![rep(levi_member(*levi, param, *bounded)?)]
            }
        }
    };
    Ok(Packet {
        component_group: a,
        members: ch.iter().map(|c| c.to_string()).zip(members).collect(),
    })
}

fn levi_member(levi: Levi, param: &LeviParam, bounded: bool) -> Result<G2Rep> {
    match (levi, param) {
        (Levi::M, LeviParam::GL2(t)) if bounded => G2Rep::ip(t.clone()),
        (Levi::L, LeviParam::GL2(t)) if bounded => G2Rep::iq(t.clone()),
        (Levi::M, LeviParam::GL2(t)) => G2Rep::jp(t.twist(), t.untwisted()),
        (Levi::L, LeviParam::GL2(t)) => G2Rep::jq(t.twist(), t.untwisted()),
        (Levi::T, LeviParam::Torus(c)) => g2_langlands_from_torus(c),
        _ => Err(Error::InvariantViolation("Levi and parameter kinds disagree".into())),
    }
}

/// The L-parameter of a non-tempered representation: the Levi parameter of
/// its standard module composed into the dual group.
pub fn param_of_nontempered(pi: &G2Rep) -> Result<LParamG2> {
    let through = |levi: Levi, s: Q, tau: &GL2Rep, torus: fn(&ExponentChar, &ExponentChar, Q) -> TorusCharG2| {
        match tau.kind() {
            GL2Kind::PrincipalSeries(a, b) => Ok(LParamG2::levi_torus(torus(a, b, s + tau.twist()))),
            _ => LParamG2::levi_gl2(levi, tau.twisted(s)),
        }
    };
    match pi {
        G2Rep::JP { s, tau } => through(Levi::M, *s, tau, p_torus),
        G2Rep::JQ { s, tau } => through(Levi::L, *s, tau, q_torus),
        G2Rep::JB(c) => Ok(LParamG2::levi_torus(c.clone())),
        G2Rep::Triv => Ok(LParamG2::levi_torus(g2_rho())),
        _ => Err(Error::Precondition(format!("{pi} is tempered"))),
    }
}

impl fmt::Display for LParamG2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LParamG2::Principal => write!(f, "principal"),
            LParamG2::Subregular(WfImage::Trivial) => write!(f, "subregular(1)"),
            LParamG2::Subregular(WfImage::Mu2(c) | WfImage::Mu3(c)) => write!(f, "subregular({c})"),
            LParamG2::Subregular(WfImage::S3(t)) => write!(f, "subregular({t})"),
            LParamG2::ShortRoot(t) => write!(f, "short({t})"),
            LParamG2::LongRoot(t) => write!(f, "long({t})"),
            LParamG2::Cuspidal(l) => write!(f, "cuspidal({l})"),
            LParamG2::LeviFactored { levi, param, .. } => match (levi, param) {
                (Levi::M, LeviParam::GL2(t)) => write!(f, "levi_P({t})"),
                (Levi::L, LeviParam::GL2(t)) => write!(f, "levi_Q({t})"),
                (_, LeviParam::Torus(c)) => write!(f, "levi_B({}, {})", c.c1, c.c2),
                (_, LeviParam::GL2(t)) => write!(f, "levi_?({t})"),
            },
        }
    }
}
