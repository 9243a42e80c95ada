//! Descriptors for the irreducible representations that occur in the tables:
//! GL2, PGL3, PGL3 x| Z/2, PD^x, GSp4 (the few members needed), G2 and PGSp6.
//!
//! Values are built through the checked constructors, which enforce the
//! canonical forms (exponents pushed into twists, sorted characters, orbit
//! minima). Enum fields are public for pattern matching only.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::chars::{
    borel_char_triple, char_inv, fmt_q, mul, q, ExponentChar, Registry, TorusCharG2, Q,
};
use crate::error::{invalid, Error, Result};
use crate::rootsys::{g2_act_on_char, g2_weyl_group, Mat};

/// Residue characteristic context; gates the p-conditional statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum PContext {
    Two,
    Three,
    #[default]
    Other,
}

impl PContext {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "2" => Ok(PContext::Two),
            "3" => Ok(PContext::Three),
            "other" => Ok(PContext::Other),
            _ => Err(Error::Precondition(format!("p-context must be 2, 3 or other, got `{s}`"))),
        }
    }
}

impl fmt::Display for PContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PContext::Two => "2",
            PContext::Three => "3",
            PContext::Other => "other",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand {
    Gen,
    Deg,
}

impl Summand {
    pub fn suffix(self) -> &'static str {
        match self {
            Summand::Gen => "_gen",
            Summand::Deg => "_deg",
        }
    }
}

// ------------------------------------------------------------------ GL2

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gl2Sc {
    pub label: String,
    /// Marks the contragredient `rho~` of a non-self-dual `rho`.
    pub dual: bool,
    pub self_dual: bool,
    pub central: ExponentChar,
    /// Whether Im(phi_tau) = S3; only meaningful for self-dual tau with
    /// nontrivial central character.
    pub dihedral_s3: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GL2Kind {
    Supercuspidal(Gl2Sc),
    Steinberg(ExponentChar),
    PrincipalSeries(ExponentChar, ExponentChar),
    OneDim(ExponentChar),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GL2Rep {
    kind: GL2Kind,
    twist: Q,
}

impl GL2Rep {
    pub fn supercuspidal(sc: Gl2Sc) -> Result<Self> {
        if !crate::chars::valid_ident(&sc.label) {
            return invalid(format!("`{}` is not a valid supercuspidal label", sc.label));
        }
        if !sc.central.is_unitary() {
            return invalid("supercuspidal central character must have finite order");
        }
        if sc.self_dual {
            if sc.dual {
                return invalid("a self-dual supercuspidal has no separate contragredient label");
            }
            if !sc.central.pow(2).is_trivial() {
                return invalid("a self-dual supercuspidal has central character of order <= 2");
            }
        }
        if sc.dihedral_s3.is_some() && !(sc.self_dual && !sc.central.is_trivial()) {
            return invalid("the S3 flag applies only to self-dual supercuspidals with nontrivial central character");
        }
        Ok(GL2Rep { kind: GL2Kind::Supercuspidal(sc), twist: Q::zero() })
    }

    /// Convenience: a self-dual supercuspidal with trivial central character.
    pub fn sc_plain(label: &str) -> Result<Self> {
        GL2Rep::supercuspidal(Gl2Sc {
            label: label.into(),
            dual: false,
            self_dual: true,
            central: ExponentChar::trivial(),
            dihedral_s3: None,
        })
    }

    pub fn steinberg(chi: ExponentChar) -> Self {
        let e = chi.exponent();
        GL2Rep { kind: GL2Kind::Steinberg(chi.unitary_part()), twist: e }
    }

    pub fn one_dim(chi: ExponentChar) -> Self {
        let e = chi.exponent();
        GL2Rep { kind: GL2Kind::OneDim(chi.unitary_part()), twist: e }
    }

    /// Irreducible principal series pi(chi1, chi2); rejects chi1/chi2 = |.|^{+-1}.
    pub fn principal_series(a: ExponentChar, b: ExponentChar) -> Result<Self> {
        let ratio = mul(&a, &char_inv(&b));
        if ratio.unitary_part().is_trivial() && ratio.exponent().abs() == Q::from_integer(1) {
            return invalid(format!("pi({a}, {b}) is reducible"));
        }
        let t = (a.exponent() + b.exponent()) * q(1, 2);
        let (mut x, mut y) = (a.twist(-t), b.twist(-t));
        if y < x {
            std::mem::swap(&mut x, &mut y);
        }
        Ok(GL2Rep { kind: GL2Kind::PrincipalSeries(x, y), twist: t })
    }

    pub fn kind(&self) -> &GL2Kind {
        &self.kind
    }

    pub fn twist(&self) -> Q {
        self.twist
    }

    pub fn twisted(&self, s: Q) -> Self {
        GL2Rep { kind: self.kind.clone(), twist: self.twist + s }
    }

    pub fn untwisted(&self) -> Self {
        GL2Rep { kind: self.kind.clone(), twist: Q::zero() }
    }

    pub fn sc(&self) -> Option<&Gl2Sc> {
        match &self.kind {
            GL2Kind::Supercuspidal(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_supercuspidal(&self) -> bool {
        self.sc().is_some()
    }

    pub fn central_char(&self) -> ExponentChar {
        let base = match &self.kind {
            GL2Kind::Supercuspidal(s) => s.central.clone(),
            GL2Kind::Steinberg(c) | GL2Kind::OneDim(c) => c.pow(2),
            GL2Kind::PrincipalSeries(a, b) => mul(a, b),
        };
        base.twist(self.twist * Q::from_integer(2))
    }

    pub fn is_tempered(&self) -> bool {
        self.twist.is_zero()
            && match &self.kind {
                GL2Kind::OneDim(_) => false,
                GL2Kind::PrincipalSeries(a, b) => a.is_unitary() && b.is_unitary(),
                _ => true,
            }
    }

    pub fn is_discrete_series(&self) -> bool {
        self.twist.is_zero()
            && matches!(self.kind, GL2Kind::Supercuspidal(_) | GL2Kind::Steinberg(_))
    }

    pub fn is_generic(&self) -> bool {
        !matches!(self.kind, GL2Kind::OneDim(_))
    }

    /// tau is unitary tempered up to a twist by |det|^t.
    pub fn is_essentially_tempered(&self) -> bool {
        self.untwisted().is_tempered()
    }

    pub fn contragredient(&self) -> Self {
        let kind = match &self.kind {
            GL2Kind::Supercuspidal(s) if s.self_dual => GL2Kind::Supercuspidal(s.clone()),
            GL2Kind::Supercuspidal(s) => GL2Kind::Supercuspidal(Gl2Sc {
                dual: !s.dual,
                central: char_inv(&s.central),
                ..s.clone()
            }),
            GL2Kind::Steinberg(c) => GL2Kind::Steinberg(char_inv(c)),
            GL2Kind::OneDim(c) => GL2Kind::OneDim(char_inv(c)),
            GL2Kind::PrincipalSeries(a, b) => {
                let (x, y) = (char_inv(a), char_inv(b));
                if y < x {
                    GL2Kind::PrincipalSeries(y, x)
                } else {
                    GL2Kind::PrincipalSeries(x, y)
                }
            }
        };
        GL2Rep { kind, twist: -self.twist }
    }

    pub fn is_self_dual(&self) -> bool {
        self.contragredient() == *self
    }

    /// Characters (mu1, mu2) with tau a constituent of pi(mu1, mu2), for the
    /// non-supercuspidal kinds. For st and one-dimensional tau the order is
    /// (chi|.|^{1/2}, chi|.|^{-1/2}) before twisting.
    pub fn borel_data(&self) -> Option<(ExponentChar, ExponentChar)> {
        let t = self.twist;
        match &self.kind {
            GL2Kind::Supercuspidal(_) => None,
            GL2Kind::Steinberg(c) | GL2Kind::OneDim(c) => Some((c.twist(t + q(1, 2)), c.twist(t - q(1, 2)))),
            GL2Kind::PrincipalSeries(a, b) => Some((a.twist(t), b.twist(t))),
        }
    }
}

fn twist_suffix(f: &mut fmt::Formatter<'_>, t: Q, unit: &str) -> fmt::Result {
    if !t.is_zero() {
        write!(f, "*|{unit}|^{}", fmt_q(t))?;
    }
    Ok(())
}

impl fmt::Display for Gl2Sc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sc({}{}", self.label, if self.dual { "~" } else { "" })?;
        if self.self_dual {
            write!(f, ", sd")?;
        }
        if !self.central.is_trivial() {
            write!(f, ", w={}", self.central)?;
        }
        if let Some(b) = self.dihedral_s3 {
            write!(f, ", s3={}", if b { "yes" } else { "no" })?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GL2Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GL2Kind::Supercuspidal(s) => write!(f, "{s}")?,
            GL2Kind::Steinberg(c) => write!(f, "st({c})")?,
            GL2Kind::PrincipalSeries(a, b) => write!(f, "ps({a}, {b})")?,
            GL2Kind::OneDim(c) => write!(f, "one({c})")?,
        }
        twist_suffix(f, self.twist, "det")
    }
}

// ------------------------------------------------------------------ PGL3

/// Irreducible representations of PGL3 in the modelled range: the tempered
/// ones, and the non-tempered J_B(chi|.|^{1/2}, 1, chi|.|^{-1/2}) with chi^2 = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GL3Rep {
    Supercuspidal { label: String, dual: bool, self_dual: bool },
    Steinberg(ExponentChar),
    /// Ind(sigma x omega_sigma^-1) from the (2,1) parabolic, sigma a unitary
    /// discrete series of GL2.
    InducedFromGL2(GL2Rep),
    PrincipalSeries([ExponentChar; 3]),
    SpecialJB(ExponentChar),
}

impl GL3Rep {
    pub fn supercuspidal(label: &str, dual: bool, self_dual: bool) -> Result<Self> {
        if !crate::chars::valid_ident(label) {
            return invalid(format!("`{label}` is not a valid supercuspidal label"));
        }
        if self_dual && dual {
            return invalid("a self-dual supercuspidal has no separate contragredient label");
        }
        Ok(GL3Rep::Supercuspidal { label: label.into(), dual, self_dual })
    }

    pub fn steinberg(chi: ExponentChar) -> Result<Self> {
        if !chi.is_unitary() || !chi.pow(3).is_trivial() {
            return invalid("St_chi on PGL3 needs chi^3 = 1");
        }
        Ok(GL3Rep::Steinberg(chi))
    }

    pub fn induced(sigma: GL2Rep) -> Result<Self> {
        if !sigma.is_discrete_series() {
            return invalid("ind(sigma) needs a unitary discrete series sigma");
        }
        if !sigma.central_char().is_unitary() {
            return invalid("ind(sigma) needs a unitary central character");
        }
        Ok(GL3Rep::InducedFromGL2(sigma))
    }

    pub fn principal_series(chis: [ExponentChar; 3]) -> Result<Self> {
        if !chis.iter().all(ExponentChar::is_unitary) {
            return invalid("only unitary principal series of PGL3 are modelled");
        }
        if !mul(&mul(&chis[0], &chis[1]), &chis[2]).is_trivial() {
            return invalid("the three characters must multiply to 1");
        }
        let mut c = chis;
        c.sort();
        Ok(GL3Rep::PrincipalSeries(c))
    }

    pub fn special_jb(chi: ExponentChar) -> Result<Self> {
        if !chi.is_unitary() || !chi.pow(2).is_trivial() {
            return invalid("jb3(chi) needs chi^2 = 1");
        }
        Ok(GL3Rep::SpecialJB(chi))
    }

    pub fn contragredient(&self) -> Self {
        match self {
            GL3Rep::Supercuspidal { self_dual: true, .. } => self.clone(),
            GL3Rep::Supercuspidal { label, dual, self_dual } => {
                GL3Rep::Supercuspidal { label: label.clone(), dual: !dual, self_dual: *self_dual }
            }
            GL3Rep::Steinberg(c) => GL3Rep::Steinberg(char_inv(c)),
            GL3Rep::InducedFromGL2(s) => GL3Rep::InducedFromGL2(s.contragredient()),
            GL3Rep::PrincipalSeries(c) => {
                let mut d = c.clone().map(|x| char_inv(&x));
                d.sort();
                GL3Rep::PrincipalSeries(d)
            }
            GL3Rep::SpecialJB(c) => GL3Rep::SpecialJB(c.clone()),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.contragredient() == *self
    }

    pub fn is_tempered(&self) -> bool {
        !matches!(self, GL3Rep::SpecialJB(_))
    }

    pub fn is_discrete_series(&self) -> bool {
        matches!(self, GL3Rep::Supercuspidal { .. } | GL3Rep::Steinberg(_))
    }

    pub fn is_supercuspidal(&self) -> bool {
        matches!(self, GL3Rep::Supercuspidal { .. })
    }

    pub fn is_generic(&self) -> bool {
        !matches!(self, GL3Rep::SpecialJB(_))
    }

    /// Whether the 3-dimensional parameter phi_tau contains the trivial representation.
    pub fn parameter_has_trivial(&self) -> bool {
        match self {
            GL3Rep::Supercuspidal { .. } | GL3Rep::Steinberg(_) => false,
            GL3Rep::InducedFromGL2(s) => s.central_char().is_trivial(),
            GL3Rep::PrincipalSeries(c) => c.iter().any(ExponentChar::is_trivial),
            GL3Rep::SpecialJB(_) => true,
        }
    }

    /// The three characters are quadratic, nontrivial and pairwise distinct.
    pub fn is_three_quadratics(&self) -> bool {
        match self {
            GL3Rep::PrincipalSeries(c) => three_distinct_quadratics(&c[0], &c[1], &c[2]),
            _ => false,
        }
    }
}

pub fn three_distinct_quadratics(a: &ExponentChar, b: &ExponentChar, c: &ExponentChar) -> bool {
    [a, b, c].iter().all(|x| x.is_quadratic()) && a != b && b != c && a != c
}

impl fmt::Display for GL3Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GL3Rep::Supercuspidal { label, dual, self_dual } => {
                write!(f, "sc({label}{}{})", if *dual { "~" } else { "" }, if *self_dual { ", sd" } else { "" })
            }
            GL3Rep::Steinberg(c) => write!(f, "St3({c})"),
            GL3Rep::InducedFromGL2(s) => write!(f, "ind({s})"),
            GL3Rep::PrincipalSeries([a, b, c]) => write!(f, "ps3({a}, {b}, {c})"),
            GL3Rep::SpecialJB(c) => write!(f, "jb3({c})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ext {
    InducedPlus,
    Plus,
    Minus,
}

/// An irreducible representation of PGL3 x| Z/2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PGL3ExtRep {
    base: GL3Rep,
    ext: Ext,
}

impl PGL3ExtRep {
    /// For `InducedPlus` the base is normalized to min(tau, tau^v), since
    /// Ind(tau) = Ind(tau^v).
    pub fn new(base: GL3Rep, ext: Ext) -> Result<Self> {
        let sd = base.is_self_dual();
        match ext {
            Ext::InducedPlus if sd => invalid(format!("{base} is self-dual; use + or -")),
            Ext::Plus | Ext::Minus if !sd => invalid(format!("{base} is not self-dual; use ind")),
            Ext::InducedPlus => {
                let d = base.contragredient();
                Ok(PGL3ExtRep { base: base.min(d), ext })
            }
            _ => Ok(PGL3ExtRep { base, ext }),
        }
    }

    pub fn base(&self) -> &GL3Rep {
        &self.base
    }

    pub fn ext(&self) -> Ext {
        self.ext
    }
}

/// The irreducible representations of PGL3 x| Z/2 lying over tau.
pub fn classify_pgl3_extension(tau: &GL3Rep) -> Vec<PGL3ExtRep> {
    if tau.is_self_dual() {
        vec![
            PGL3ExtRep { base: tau.clone(), ext: Ext::Plus },
            PGL3ExtRep { base: tau.clone(), ext: Ext::Minus },
        ]
    } else {
        vec![PGL3ExtRep::new(tau.clone(), Ext::InducedPlus).expect("not self-dual")]
    }
}

impl fmt::Display for PGL3ExtRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = match self.ext {
            Ext::InducedPlus => "ind",
            Ext::Plus => "+",
            Ext::Minus => "-",
        };
        write!(f, "ext({}, {e})", self.base)
    }
}

// ------------------------------------------------------------------ PD^x

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Heart {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PDxRep {
    Trivial,
    UnramifiedCubic { chi: ExponentChar, power: u8 },
    Other { label: String, heart: Heart },
}

impl PDxRep {
    /// chi o Nrd for an unramified cubic chi; the power is read off against the
    /// registry's unramified cubic symbol.
    pub fn unramified_cubic(reg: &Registry, chi: ExponentChar) -> Result<Self> {
        if !chi.is_cubic() || !chi.is_unramified() {
            return invalid(format!("{chi} is not an unramified cubic character"));
        }
        let sym = reg
            .unramified_of_order(3)
            .ok_or_else(|| Error::Registry("no unramified cubic symbol declared".into()))?;
        let base = ExponentChar::symbol(reg, &sym.name, 1)?;
        let power = if chi == base {
            1
        } else if chi == base.pow(2) {
            2
        } else {
            return invalid(format!("{chi} is not a power of {base}"));
        };
        Ok(PDxRep::UnramifiedCubic { chi, power })
    }

    /// heart = no/unknown is only meaningful in residue characteristic 3.
    pub fn other(label: &str, heart: Heart, p: PContext) -> Result<Self> {
        if !crate::chars::valid_ident(label) {
            return invalid(format!("`{label}` is not a valid label"));
        }
        if heart != Heart::Yes && p != PContext::Three {
            return invalid("outside p = 3 every representation of PD^x lies in the heart");
        }
        Ok(PDxRep::Other { label: label.into(), heart })
    }
}

impl fmt::Display for PDxRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PDxRep::Trivial => write!(f, "pd(1)"),
            PDxRep::UnramifiedCubic { chi, .. } => write!(f, "pd({chi})"),
            PDxRep::Other { label, heart } => {
                let h = match heart {
                    Heart::Yes => "yes",
                    Heart::No => "no",
                    Heart::Unknown => "unknown",
                };
                write!(f, "pd({label}, {h})")
            }
        }
    }
}

// ------------------------------------------------------------------ GSp4

/// Supercuspidals of GSp4 with trivial central character.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GSp4Rep {
    /// tau_rho, the non-generic Saito-Kurokawa lift of rho from SL2~.
    SaitoKurokawa { rho: String },
    /// `std_trivial`: std o phi_tau contains the trivial representation.
    Supercuspidal { label: String, std_trivial: bool, generic: bool },
}

impl GSp4Rep {
    pub fn saito_kurokawa(rho: &str) -> Result<Self> {
        if !crate::chars::valid_ident(rho) {
            return invalid(format!("`{rho}` is not a valid label"));
        }
        Ok(GSp4Rep::SaitoKurokawa { rho: rho.into() })
    }

    pub fn supercuspidal(label: &str, std_trivial: bool, generic: bool) -> Result<Self> {
        if !crate::chars::valid_ident(label) {
            return invalid(format!("`{label}` is not a valid label"));
        }
        Ok(GSp4Rep::Supercuspidal { label: label.into(), std_trivial, generic })
    }

    pub fn std_has_trivial(&self) -> bool {
        match self {
            GSp4Rep::SaitoKurokawa { .. } => true,
            GSp4Rep::Supercuspidal { std_trivial, .. } => *std_trivial,
        }
    }

    pub fn is_generic(&self) -> bool {
        match self {
            GSp4Rep::SaitoKurokawa { .. } => false,
            GSp4Rep::Supercuspidal { generic, .. } => *generic,
        }
    }
}

impl fmt::Display for GSp4Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GSp4Rep::SaitoKurokawa { rho } => write!(f, "sk({rho})"),
            GSp4Rep::Supercuspidal { label, std_trivial, generic } => {
                write!(f, "gsp4({label}")?;
                if *std_trivial {
                    write!(f, ", sk")?;
                }
                if *generic {
                    write!(f, ", generic")?;
                }
                write!(f, ")")
            }
        }
    }
}

// ------------------------------------------------------------------ G2 torus helpers

fn weyl() -> &'static [Mat<2>] {
    static W: OnceLock<Vec<Mat<2>>> = OnceLock::new();
    W.get_or_init(g2_weyl_group)
}

/// The W-orbit of a torus character, sorted and deduplicated.
pub fn g2_orbit(c: &TorusCharG2) -> Vec<TorusCharG2> {
    let mut v: Vec<TorusCharG2> = weyl().iter().map(|w| g2_act_on_char(w, c)).collect();
    v.sort();
    v.dedup();
    v
}

pub fn g2_orbit_min(c: &TorusCharG2) -> TorusCharG2 {
    g2_orbit(c).into_iter().next().expect("orbit is nonempty")
}

/// The least orbit member whose exponents (a, b) satisfy a >= b >= 0, i.e.
/// the exponent lies in the closed positive chamber.
pub fn g2_dominant(c: &TorusCharG2) -> TorusCharG2 {
    g2_orbit(c)
        .into_iter()
        .find(|d| {
            let (a, b) = d.exponents();
            a >= b && b >= Q::zero()
        })
        .expect("every orbit meets the closed chamber")
}

pub fn g2_three_quadratics(c: &TorusCharG2) -> bool {
    let (a, b, d) = borel_char_triple(c);
    three_distinct_quadratics(&a, &b, &d)
}

/// Support of the trivial and Steinberg representations, delta_B^{1/2}.
pub fn g2_rho() -> TorusCharG2 {
    TorusCharG2 { c1: ExponentChar::abs(Q::from_integer(2)), c2: ExponentChar::abs(Q::from_integer(1)) }
}

/// The irreducible representation J(chi) attached to the W-orbit of chi: the
/// Langlands quotient of the standard module on the dominant member, or the
/// irreducible tempered Ind_B(chi) when chi is unitary.
pub fn g2_langlands_from_torus(c: &TorusCharG2) -> Result<G2Rep> {
    let d = g2_dominant(c);
    let (a, b) = d.exponents();
    if a.is_zero() {
        return G2Rep::ib(d);
    }
    if a > b && b > Q::zero() {
        return G2Rep::jb(d);
    }
    if a == b {
        let tau = GL2Rep::principal_series(d.c1.twist(-a), d.c2.twist(-a))?;
        return G2Rep::jp(a, tau);
    }
    let mu2 = d.c1.twist(-a);
    let mu1 = mul(&d.c2, &mu2);
    G2Rep::jq(a, GL2Rep::principal_series(mu1, mu2)?)
}

// ------------------------------------------------------------------ G2

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PiGenParam {
    One,
    Quadratic(ExponentChar),
    /// Stored as min(chi, chi^-1), since pi_gen[chi] = pi_gen[chi^-1].
    Cubic(ExponentChar),
    Dihedral(GL2Rep),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PiScLabel {
    One,
    MinusOne,
    Omega,
    Omega2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    FromD,
    FromB,
    FromSL2tilde,
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum G2Rep {
    St,
    Triv,
    JP { s: Q, tau: GL2Rep },
    JQ { s: Q, tau: GL2Rep },
    JB(TorusCharG2),
    DeltaP(GL2Rep),
    DeltaQ(GL2Rep),
    PiGen(PiGenParam),
    PiDeg1,
    PiSc(PiScLabel),
    IP(GL2Rep),
    IQ(GL2Rep),
    IB(TorusCharG2),
    IPSummand(GL2Rep, Summand),
    IQSummand(GL2Rep, Summand),
    IBSummand(TorusCharG2, Summand),
    ScFromPD(PDxRep),
    ScFromB(PGL3ExtRep),
    ScAbstract { label: String, generic: bool, sl2_lift: Option<String> },
}

fn sc_selfdual_nontrivial_central(t: &GL2Rep) -> bool {
    matches!(t.sc(), Some(s) if s.self_dual && !s.central.is_trivial()) && t.twist().is_zero()
}

fn require_tempered(tau: &GL2Rep, what: &str) -> Result<()> {
    if !tau.is_tempered() {
        return invalid(format!("{what} needs a unitary tempered tau, got {tau}"));
    }
    Ok(())
}

fn require_ds(tau: &GL2Rep, what: &str) -> Result<()> {
    if !tau.is_discrete_series() {
        return invalid(format!("{what} needs a unitary discrete series tau, got {tau}"));
    }
    Ok(())
}

fn sd_sc_trivial_central(tau: &GL2Rep) -> bool {
    matches!(tau.sc(), Some(s) if s.self_dual && s.central.is_trivial()) && tau.twist().is_zero()
}

impl G2Rep {
    pub fn jp(s: Q, tau: GL2Rep) -> Result<Self> {
        if s <= Q::zero() {
            return invalid("J_P(s, tau) needs s > 0");
        }
        require_tempered(&tau, "J_P")?;
        Ok(G2Rep::JP { s, tau })
    }

    pub fn jq(s: Q, tau: GL2Rep) -> Result<Self> {
        if s <= Q::zero() {
            return invalid("J_Q(s, tau) needs s > 0");
        }
        require_tempered(&tau, "J_Q")?;
        Ok(G2Rep::JQ { s, tau })
    }

    /// J_B(chi) for a regular dominant exponent; J_B(|.|^2, |.|) is 1_G2.
    pub fn jb(c: TorusCharG2) -> Result<Self> {
        let d = g2_dominant(&c);
        let (a, b) = d.exponents();
        if !(a > b && b > Q::zero()) {
            return invalid(format!("J_B needs a regular non-unitary exponent, got {c}"));
        }
        if d == g2_rho() {
            return Ok(G2Rep::Triv);
        }
        Ok(G2Rep::JB(d))
    }

    pub fn delta_p(tau: GL2Rep) -> Result<Self> {
        if !sd_sc_trivial_central(&tau) {
            return invalid("delta_P(tau) needs a self-dual supercuspidal tau with trivial central character");
        }
        Ok(G2Rep::DeltaP(tau))
    }

    pub fn delta_q(tau: GL2Rep) -> Result<Self> {
        if !sd_sc_trivial_central(&tau) {
            return invalid("delta_Q(tau) needs a self-dual supercuspidal tau with trivial central character");
        }
        Ok(G2Rep::DeltaQ(tau))
    }

    pub fn pi_gen_quadratic(chi: ExponentChar) -> Result<Self> {
        if !chi.is_quadratic() {
            return invalid(format!("pi_gen[{chi}] needs a nontrivial quadratic character"));
        }
        Ok(G2Rep::PiGen(PiGenParam::Quadratic(chi)))
    }

    pub fn pi_gen_cubic(chi: ExponentChar) -> Result<Self> {
        if !chi.is_cubic() {
            return invalid(format!("pi_gen[{chi}] needs a nontrivial cubic character"));
        }
        let inv = char_inv(&chi);
        Ok(G2Rep::PiGen(PiGenParam::Cubic(chi.min(inv))))
    }

    pub fn pi_gen_char(chi: ExponentChar) -> Result<Self> {
        if chi.is_trivial() {
            Ok(G2Rep::PiGen(PiGenParam::One))
        } else if chi.is_cubic() {
            G2Rep::pi_gen_cubic(chi)
        } else {
            G2Rep::pi_gen_quadratic(chi)
        }
    }

    pub fn pi_gen_dihedral(tau: GL2Rep) -> Result<Self> {
        match tau.sc() {
            Some(s) if s.dihedral_s3 == Some(true) && tau.twist().is_zero() => {
                Ok(G2Rep::PiGen(PiGenParam::Dihedral(tau)))
            }
            _ => invalid("pi_gen[tau] needs a supercuspidal tau with Im(phi_tau) = S3"),
        }
    }

    /// I_P(tau) at s = 0 for a discrete series tau where it is irreducible.
    pub fn ip(tau: GL2Rep) -> Result<Self> {
        require_ds(&tau, "I_P(tau)")?;
        if sc_selfdual_nontrivial_central(&tau) {
            return invalid("I_P(tau) splits into _gen and _deg for this tau");
        }
        let d = tau.contragredient();
        Ok(G2Rep::IP(tau.min(d)))
    }

    pub fn iq(tau: GL2Rep) -> Result<Self> {
        require_ds(&tau, "I_Q(tau)")?;
        if sc_selfdual_nontrivial_central(&tau) {
            match tau.sc().and_then(|s| s.dihedral_s3) {
                None => return invalid("I_Q(tau) for this tau needs the s3 flag"),
                Some(false) => return invalid("I_Q(tau) splits into _gen and _deg for this tau"),
                Some(true) => {}
            }
        }
        let d = tau.contragredient();
        Ok(G2Rep::IQ(tau.min(d)))
    }

    pub fn ib(c: TorusCharG2) -> Result<Self> {
        if !c.is_unitary() {
            return invalid("I_B(chi) as a tempered representation needs unitary chi");
        }
        if g2_three_quadratics(&c) {
            return invalid("I_B(chi) splits into _gen and _deg for this chi");
        }
        Ok(G2Rep::IB(g2_orbit_min(&c)))
    }

    pub fn ip_summand(tau: GL2Rep, which: Summand) -> Result<Self> {
        if !sc_selfdual_nontrivial_central(&tau) {
            return invalid("I_P(tau)_gen/deg needs a self-dual supercuspidal tau with nontrivial central character");
        }
        Ok(G2Rep::IPSummand(tau, which))
    }

    pub fn iq_summand(tau: GL2Rep, which: Summand) -> Result<Self> {
        if !(sc_selfdual_nontrivial_central(&tau) && tau.sc().and_then(|s| s.dihedral_s3) == Some(false)) {
            return invalid("I_Q(tau)_gen/deg needs a self-dual supercuspidal tau, nontrivial central character, Im != S3");
        }
        Ok(G2Rep::IQSummand(tau, which))
    }

    pub fn ib_summand(c: TorusCharG2, which: Summand) -> Result<Self> {
        if !c.is_unitary() || !g2_three_quadratics(&c) {
            return invalid("I_B(chi)_gen/deg needs three distinct nontrivial quadratic chi_i");
        }
        Ok(G2Rep::IBSummand(g2_orbit_min(&c), which))
    }

    pub fn sc_from_pd(pd: PDxRep) -> Result<Self> {
        match pd {
            PDxRep::Other { heart: Heart::Yes, .. } => Ok(G2Rep::ScFromPD(pd)),
            _ => invalid("theta_D(pd) as a supercuspidal label needs pd(label, yes)"),
        }
    }

    pub fn sc_from_b(ext: PGL3ExtRep) -> Result<Self> {
        if !ext.base().is_supercuspidal() {
            return invalid("theta_B(ext) as a supercuspidal label needs a supercuspidal base");
        }
        Ok(G2Rep::ScFromB(ext))
    }

    pub fn sc_abstract(label: &str, generic: bool) -> Result<Self> {
        if !crate::chars::valid_label(label) {
            return invalid(format!("`{label}` is not a valid label"));
        }
        Ok(G2Rep::ScAbstract { label: label.into(), generic, sl2_lift: None })
    }

    /// pi_rho, lifted from the metaplectic SL2; non-generic.
    pub fn pi_rho(rho: &str) -> Result<Self> {
        if !crate::chars::valid_ident(rho) {
            return invalid(format!("`{rho}` is not a valid label"));
        }
        Ok(G2Rep::ScAbstract { label: rho.into(), generic: false, sl2_lift: Some(rho.into()) })
    }

    pub fn is_tempered(&self) -> bool {
        !matches!(self, G2Rep::Triv | G2Rep::JP { .. } | G2Rep::JQ { .. } | G2Rep::JB(_))
    }

    pub fn is_discrete_series(&self) -> bool {
        matches!(
            self,
            G2Rep::St
                | G2Rep::DeltaP(_)
                | G2Rep::DeltaQ(_)
                | G2Rep::PiGen(_)
                | G2Rep::PiDeg1
                | G2Rep::PiSc(_)
                | G2Rep::ScFromPD(_)
                | G2Rep::ScFromB(_)
                | G2Rep::ScAbstract { .. }
        )
    }

    pub fn is_supercuspidal(&self) -> bool {
        matches!(self, G2Rep::PiSc(_) | G2Rep::ScFromPD(_) | G2Rep::ScFromB(_) | G2Rep::ScAbstract { .. })
    }

    pub fn is_generic(&self) -> bool {
        match self {
            G2Rep::St | G2Rep::DeltaP(_) | G2Rep::DeltaQ(_) | G2Rep::PiGen(_) => true,
            G2Rep::IP(_) | G2Rep::IQ(_) | G2Rep::IB(_) => true,
            G2Rep::Triv | G2Rep::PiDeg1 | G2Rep::PiSc(_) | G2Rep::ScFromPD(_) => false,
            G2Rep::IPSummand(_, w) | G2Rep::IQSummand(_, w) | G2Rep::IBSummand(_, w) => *w == Summand::Gen,
            G2Rep::ScFromB(e) => e.ext() != Ext::Minus,
            G2Rep::ScAbstract { generic, .. } => *generic,
            G2Rep::JP { .. } | G2Rep::JQ { .. } | G2Rep::JB(_) => {
                crate::reducibility::g2_standard_module_irreducible(self)
            }
        }
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            G2Rep::ScFromPD(_) | G2Rep::PiDeg1 => Provenance::FromD,
            G2Rep::PiSc(PiScLabel::Omega | PiScLabel::Omega2) => Provenance::FromD,
            G2Rep::ScFromB(_) | G2Rep::PiSc(PiScLabel::One) => Provenance::FromB,
            G2Rep::ScAbstract { sl2_lift: Some(_), .. } => Provenance::FromSL2tilde,
            _ => Provenance::Plain,
        }
    }
}

impl fmt::Display for PiGenParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PiGenParam::One => write!(f, "1"),
            PiGenParam::Quadratic(c) | PiGenParam::Cubic(c) => write!(f, "{c}"),
            PiGenParam::Dihedral(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Display for PiScLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PiScLabel::One => "1",
            PiScLabel::MinusOne => "-1",
            PiScLabel::Omega => "omega",
            PiScLabel::Omega2 => "omega2",
        })
    }
}

fn gen_word(g: bool) -> &'static str {
    if g {
        "generic"
    } else {
        "nongeneric"
    }
}

impl fmt::Display for G2Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            G2Rep::St => write!(f, "St_G2"),
            G2Rep::Triv => write!(f, "1_G2"),
            G2Rep::JP { s, tau } => write!(f, "JP({}; {tau})", fmt_q(*s)),
            G2Rep::JQ { s, tau } => write!(f, "JQ({}; {tau})", fmt_q(*s)),
            G2Rep::JB(c) => write!(f, "JB({}, {})", c.c1, c.c2),
            G2Rep::DeltaP(t) => write!(f, "delta_P({t})"),
            G2Rep::DeltaQ(t) => write!(f, "delta_Q({t})"),
            G2Rep::PiGen(p) => write!(f, "pi_gen[{p}]"),
            G2Rep::PiDeg1 => write!(f, "pi_deg[1]"),
            G2Rep::PiSc(l) => write!(f, "pi_sc[{l}]"),
            G2Rep::IP(t) => write!(f, "IP({t})"),
            G2Rep::IQ(t) => write!(f, "IQ({t})"),
            G2Rep::IB(c) => write!(f, "IB({}, {})", c.c1, c.c2),
            G2Rep::IPSummand(t, w) => write!(f, "IP({t}){}", w.suffix()),
            G2Rep::IQSummand(t, w) => write!(f, "IQ({t}){}", w.suffix()),
            G2Rep::IBSummand(c, w) => write!(f, "IB({}, {}){}", c.c1, c.c2, w.suffix()),
            G2Rep::ScFromPD(p) => write!(f, "theta_D({p})"),
            G2Rep::ScFromB(e) => write!(f, "theta_B({e})"),
            G2Rep::ScAbstract { label, sl2_lift: Some(_), .. } => write!(f, "pi_rho({label})"),
            G2Rep::ScAbstract { label, generic, .. } => write!(f, "sc_G2({label}; {})", gen_word(*generic)),
        }
    }
}

// ------------------------------------------------------------------ PGSp6

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaGenParam {
    Quadratic(ExponentChar),
    Dihedral(GL2Rep),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Genericity {
    Generic,
    NonGeneric,
    /// Not decided by the available reducibility tables.
    Undetermined,
}

impl Genericity {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Genericity::Generic
        } else {
            Genericity::NonGeneric
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PGSp6Rep {
    St,
    J2 { s: Q, tau: GL2Rep },
    /// J_13(tau x 1); tau is either |det|^t times a tempered representation
    /// with t > 0, or a non-tempered J(chi1, chi2) with exponents s1 > s2 > 0.
    J13(GL2Rep),
    Delta2(GL2Rep),
    Delta13(GL2Rep),
    SigmaGen(SigmaGenParam),
    I2Irred(GL2Rep),
    I2Summand(GL2Rep, Summand),
    I13Irred(GL2Rep),
    I13Summand(GL2Rep, Summand),
    I3Irred(GL3Rep),
    I3Summand(GL3Rep, Summand),
    Delta1(GSp4Rep),
    I1Irred(GSp4Rep),
    J1 { s: Q, tau: GSp4Rep },
    ScAbstract { label: String, generic: bool },
}

/// The GL2 representation J(chi1, chi2) with chi1/chi2 of exponent > 0:
/// one-dimensional when chi1/chi2 = |.|, else the irreducible principal series.
pub fn gl2_langlands_quotient(c1: &ExponentChar, c2: &ExponentChar) -> Result<GL2Rep> {
    let ratio = mul(c1, &char_inv(c2));
    if ratio == ExponentChar::abs(Q::from_integer(1)) {
        return Ok(GL2Rep::one_dim(c1.twist(q(-1, 2))));
    }
    GL2Rep::principal_series(c1.clone(), c2.clone())
}

/// Exponents (s1, s2) of the (b')/(c') datum of J_13.
fn j13_shape(tau: &GL2Rep) -> Option<bool> {
    if tau.is_essentially_tempered() {
        return (tau.twist() > Q::zero()).then_some(true);
    }
    let (a, b) = tau.borel_data()?;
    let (x, y) = if a.exponent() >= b.exponent() { (a, b) } else { (b, a) };
    let ok = x.exponent() > y.exponent() && y.exponent() > Q::zero();
    match tau.kind() {
        GL2Kind::OneDim(_) => ok.then_some(false),
        GL2Kind::PrincipalSeries(_, _) => ok.then_some(false),
        _ => None,
    }
}

impl PGSp6Rep {
    pub fn j2(s: Q, tau: GL2Rep) -> Result<Self> {
        if s <= Q::zero() {
            return invalid("J_2(s, tau x tau) needs s > 0");
        }
        require_tempered(&tau, "J_2")?;
        Ok(PGSp6Rep::J2 { s, tau })
    }

    pub fn j13(tau: GL2Rep) -> Result<Self> {
        if j13_shape(&tau).is_none() {
            return invalid(format!("J_13({tau} x 1) is not a standard-module quotient"));
        }
        Ok(PGSp6Rep::J13(tau))
    }

    /// True for the (b') shape, false for (c').
    pub fn j13_is_tempered_twist(tau: &GL2Rep) -> Option<bool> {
        j13_shape(tau)
    }

    pub fn delta_2(tau: GL2Rep) -> Result<Self> {
        if !sd_sc_trivial_central(&tau) {
            return invalid("delta_2(tau) needs a self-dual supercuspidal tau with trivial central character");
        }
        Ok(PGSp6Rep::Delta2(tau))
    }

    pub fn delta_13(tau: GL2Rep) -> Result<Self> {
        if !sd_sc_trivial_central(&tau) {
            return invalid("delta_13(tau) needs a self-dual supercuspidal tau with trivial central character");
        }
        Ok(PGSp6Rep::Delta13(tau))
    }

    pub fn sigma_gen_quadratic(chi: ExponentChar) -> Result<Self> {
        if !chi.is_quadratic() {
            return invalid("sigma_gen[chi] needs a nontrivial quadratic chi");
        }
        Ok(PGSp6Rep::SigmaGen(SigmaGenParam::Quadratic(chi)))
    }

    pub fn sigma_gen_dihedral(tau: GL2Rep) -> Result<Self> {
        match tau.sc() {
            Some(s) if s.dihedral_s3 == Some(true) && tau.twist().is_zero() => {
                Ok(PGSp6Rep::SigmaGen(SigmaGenParam::Dihedral(tau)))
            }
            _ => invalid("sigma_gen[tau] needs a supercuspidal tau with Im(phi_tau) = S3"),
        }
    }

    pub fn i2_irred(tau: GL2Rep) -> Result<Self> {
        require_ds(&tau, "I_2(tau x tau)")?;
        if sc_selfdual_nontrivial_central(&tau) {
            match tau.sc().and_then(|s| s.dihedral_s3) {
                None => return invalid("I_2(tau x tau) for this tau needs the s3 flag"),
                Some(false) => return invalid("I_2(tau x tau) splits into _gen and _deg for this tau"),
                Some(true) => {}
            }
        }
        let d = tau.contragredient();
        Ok(PGSp6Rep::I2Irred(tau.min(d)))
    }

    pub fn i2_summand(tau: GL2Rep, which: Summand) -> Result<Self> {
        if !(sc_selfdual_nontrivial_central(&tau) && tau.sc().and_then(|s| s.dihedral_s3) == Some(false)) {
            return invalid("I_2(tau x tau)_gen/deg needs a self-dual supercuspidal tau, nontrivial central character, Im != S3");
        }
        Ok(PGSp6Rep::I2Summand(tau, which))
    }

    pub fn i13_irred(tau: GL2Rep) -> Result<Self> {
        if !tau.is_supercuspidal() || !tau.twist().is_zero() {
            return invalid("I_13(tau x 1) is modelled for unitary supercuspidal tau");
        }
        if sc_selfdual_nontrivial_central(&tau) {
            match tau.sc().and_then(|s| s.dihedral_s3) {
                None => return invalid("I_13(tau x 1) for this tau needs the s3 flag"),
                Some(false) => return invalid("I_13(tau x 1) splits into _gen and _deg for this tau"),
                Some(true) => {}
            }
        }
        let d = tau.contragredient();
        Ok(PGSp6Rep::I13Irred(tau.min(d)))
    }

    pub fn i13_summand(tau: GL2Rep, which: Summand) -> Result<Self> {
        if !(sc_selfdual_nontrivial_central(&tau) && tau.sc().and_then(|s| s.dihedral_s3) == Some(false)) {
            return invalid("I_13(tau x 1)_gen/deg needs a self-dual supercuspidal tau, nontrivial central character, Im != S3");
        }
        Ok(PGSp6Rep::I13Summand(tau, which))
    }

    /// I_3(tau) where irreducible: tau tempered and either not self-dual or
    /// with a trivial summand in phi_tau.
    pub fn i3_irred(tau: GL3Rep) -> Result<Self> {
        if !tau.is_tempered() {
            return invalid("I_3(tau) is modelled for tempered tau");
        }
        if tau.is_self_dual() && !tau.parameter_has_trivial() {
            return invalid(format!("I_3({tau}) splits into _gen and _deg"));
        }
        let d = tau.contragredient();
        Ok(PGSp6Rep::I3Irred(tau.min(d)))
    }

    pub fn i3_summand(tau: GL3Rep, which: Summand) -> Result<Self> {
        if !(tau.is_tempered() && tau.is_self_dual() && !tau.parameter_has_trivial()) {
            return invalid(format!("I_3({tau}) does not split"));
        }
        Ok(PGSp6Rep::I3Summand(tau, which))
    }

    pub fn delta_1(tau: GSp4Rep) -> Result<Self> {
        if !tau.std_has_trivial() {
            return invalid("delta_1(tau) needs std o phi_tau to contain the trivial representation");
        }
        Ok(PGSp6Rep::Delta1(tau))
    }

    pub fn i1_irred(tau: GSp4Rep) -> Result<Self> {
        Ok(PGSp6Rep::I1Irred(tau))
    }

    pub fn j1(s: Q, tau: GSp4Rep) -> Result<Self> {
        if s <= Q::zero() {
            return invalid("J_1(s, tau) needs s > 0");
        }
        Ok(PGSp6Rep::J1 { s, tau })
    }

    pub fn sc_abstract(label: &str, generic: bool) -> Result<Self> {
        if !crate::chars::valid_label(label) {
            return invalid(format!("`{label}` is not a valid label"));
        }
        Ok(PGSp6Rep::ScAbstract { label: label.into(), generic })
    }

    pub fn is_tempered(&self) -> bool {
        !matches!(self, PGSp6Rep::J2 { .. } | PGSp6Rep::J13(_) | PGSp6Rep::J1 { .. })
    }

    pub fn is_discrete_series(&self) -> bool {
        matches!(
            self,
            PGSp6Rep::St
                | PGSp6Rep::Delta2(_)
                | PGSp6Rep::Delta13(_)
                | PGSp6Rep::SigmaGen(_)
                | PGSp6Rep::Delta1(_)
                | PGSp6Rep::ScAbstract { .. }
        )
    }

    pub fn genericity(&self) -> Genericity {
        use Genericity::*;
        match self {
            PGSp6Rep::St | PGSp6Rep::Delta2(_) | PGSp6Rep::Delta13(_) | PGSp6Rep::SigmaGen(_) => Generic,
            PGSp6Rep::I2Irred(_) | PGSp6Rep::I13Irred(_) | PGSp6Rep::I3Irred(_) => Generic,
            PGSp6Rep::I2Summand(_, w) | PGSp6Rep::I13Summand(_, w) | PGSp6Rep::I3Summand(_, w) => {
                Genericity::from_bool(*w == Summand::Gen)
            }
            PGSp6Rep::Delta1(t) | PGSp6Rep::I1Irred(t) => Genericity::from_bool(t.is_generic()),
            PGSp6Rep::ScAbstract { generic, .. } => Genericity::from_bool(*generic),
            PGSp6Rep::J2 { .. } | PGSp6Rep::J13(_) | PGSp6Rep::J1 { .. } => {
                crate::reducibility::p6_standard_module_genericity(self)
            }
        }
    }

    /// Generic in the decided sense; `Undetermined` counts as not generic.
    pub fn is_generic(&self) -> bool {
        self.genericity() == Genericity::Generic
    }
}

impl fmt::Display for PGSp6Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PGSp6Rep::St => write!(f, "St_P6"),
            PGSp6Rep::J2 { s, tau } => write!(f, "J2({}; {tau})", fmt_q(*s)),
            PGSp6Rep::J13(t) => write!(f, "J13({t})"),
            PGSp6Rep::Delta2(t) => write!(f, "delta_2({t})"),
            PGSp6Rep::Delta13(t) => write!(f, "delta_13({t})"),
            PGSp6Rep::SigmaGen(SigmaGenParam::Quadratic(c)) => write!(f, "sigma_gen[{c}]"),
            PGSp6Rep::SigmaGen(SigmaGenParam::Dihedral(t)) => write!(f, "sigma_gen[{t}]"),
            PGSp6Rep::I2Irred(t) => write!(f, "I2({t})"),
            PGSp6Rep::I2Summand(t, w) => write!(f, "I2({t}){}", w.suffix()),
            PGSp6Rep::I13Irred(t) => write!(f, "I13({t})"),
            PGSp6Rep::I13Summand(t, w) => write!(f, "I13({t}){}", w.suffix()),
            PGSp6Rep::I3Irred(t) => write!(f, "I3({t})"),
            PGSp6Rep::I3Summand(t, w) => write!(f, "I3({t}){}", w.suffix()),
            PGSp6Rep::Delta1(t) => write!(f, "delta_1({t})"),
            PGSp6Rep::I1Irred(t) => write!(f, "I1({t})"),
            PGSp6Rep::J1 { s, tau } => write!(f, "J1({}; {tau})", fmt_q(*s)),
            PGSp6Rep::ScAbstract { label, generic } => write!(f, "sc_P6({label}; {})", gen_word(*generic)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::qi;

    fn reg() -> Registry {
        Registry::default()
    }

    #[test]
    fn ps_canonical_form() {
        let r = reg();
        let chi = ExponentChar::symbol(&r, "chi2", 1).unwrap();
        let a = GL2Rep::principal_series(chi.twist(qi(2)), ExponentChar::abs(qi(0))).unwrap();
        assert_eq!(a.twist(), qi(1));
        let b = GL2Rep::principal_series(ExponentChar::abs(qi(0)), chi.twist(qi(2))).unwrap();
        assert_eq!(a, b);
        assert!(GL2Rep::principal_series(ExponentChar::abs(qi(1)), ExponentChar::trivial()).is_err());
    }

    #[test]
    fn gl2_contragredient_involutive() {
        let r = reg();
        let w = ExponentChar::symbol(&r, "chi3", 1).unwrap();
        let t = GL2Rep::supercuspidal(Gl2Sc {
            label: "rho".into(),
            dual: false,
            self_dual: false,
            central: w.clone(),
            dihedral_s3: None,
        })
        .unwrap()
        .twisted(q(1, 2));
        let d = t.contragredient();
        assert_eq!(d.twist(), q(-1, 2));
        assert_eq!(d.central_char(), char_inv(&w).twist(qi(-1)));
        assert_eq!(d.contragredient(), t);
    }

    #[test]
    fn trivial_rep_from_rho() {
        assert_eq!(G2Rep::jb(g2_rho()).unwrap(), G2Rep::Triv);
        assert_eq!(g2_langlands_from_torus(&g2_rho()).unwrap(), G2Rep::Triv);
    }

    #[test]
    fn dominant_walls() {
        // exponent (1, 0) lies on the Q-wall
        let c = TorusCharG2 { c1: ExponentChar::abs(qi(1)), c2: ExponentChar::trivial() };
        assert!(matches!(g2_langlands_from_torus(&c).unwrap(), G2Rep::JQ { .. }));
        let c = TorusCharG2 { c1: ExponentChar::abs(qi(1)), c2: ExponentChar::abs(qi(1)) };
        assert!(matches!(g2_langlands_from_torus(&c).unwrap(), G2Rep::JP { .. }));
    }

    #[test]
    fn pgl3_extensions() {
        let st = GL3Rep::steinberg(ExponentChar::trivial()).unwrap();
        assert_eq!(classify_pgl3_extension(&st).len(), 2);
        let sc = GL3Rep::supercuspidal("r", false, false).unwrap();
        let e = classify_pgl3_extension(&sc);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].ext(), Ext::InducedPlus);
    }
}
