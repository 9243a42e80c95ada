//! Jacquet-module filtrations of the minimal representations restricted to
//! G2 x PGSp6, the Mackey filtration of the degenerate principal series
//! I_E(s) of Spin8^E restricted to G2, and the dual-pair tables.
//!
//! Pieces are symbolic descriptors; layer 0 is the bottom of the filtration.

use serde::Serialize;

use crate::chars::{fmt_q, q, qi, Q};
use crate::error::{Error, Result};
use crate::rootsys::{parabolic_data, parabolic_names, ser_q, GroupName};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupRef {
    pub group: GroupName,
    pub name: String,
}

fn sg(group: GroupName, name: &str) -> SubgroupRef {
    SubgroupRef { group, name: name.into() }
}

/// |character|^exponent
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Power {
    pub character: String,
    #[serde(serialize_with = "ser_q")]
    pub exponent: Q,
}

fn pw(c: &str, e: Q) -> Power {
    Power { character: c.into(), exponent: e }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinRepSummand {
    /// Pi_X: minimal representation of a Levi of type X; `Pi_empty` is the
    /// trivial representation.
    pub symbol: String,
    pub twist: Power,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Datum {
    /// Direct sum of twisted minimal representations of the Levi.
    MinRep { summands: Vec<MinRepSummand> },
    /// delta . C_c(group); `delta` empty means no twist.
    Regular { group: String, delta: Vec<Power> },
    Weil { dual_pair: String },
    /// ind_N^G psi for a generic character psi.
    Whittaker { group: String, character: String },
    /// The character |det|^twist of the Levi of the inducing parabolic.
    Character,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationPiece {
    pub layer: u32,
    /// The name the piece carries in the filtration (I0, J1, ...), when it has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub multiplicity: u32,
    /// The inducing subgroup(s); empty when the piece is not induced.
    pub induced_from: Vec<SubgroupRef>,
    pub ambient: String,
    pub datum: Datum,
    /// Twist of the induction parameter, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<Power>,
}

impl FiltrationPiece {
    fn new(induced_from: Vec<SubgroupRef>, ambient: &str, datum: Datum) -> Self {
        FiltrationPiece { layer: 0, label: None, multiplicity: 1, induced_from, ambient: ambient.into(), datum, twist: None }
    }
}

/// Pieces listed top to bottom; numbered from the bottom.
fn number(mut top_down: Vec<FiltrationPiece>) -> Vec<FiltrationPiece> {
    top_down.reverse();
    for (i, p) in top_down.iter_mut().enumerate() {
        p.layer = i as u32;
    }
    top_down
}

fn minrep(pairs: &[(&str, &str, Q)]) -> Datum {
    Datum::MinRep {
        summands: pairs.iter().map(|(s, c, e)| MinRepSummand { symbol: (*s).into(), twist: pw(c, *e) }).collect(),
    }
}

fn regular(group: &str, delta: Vec<Power>) -> Datum {
    Datum::Regular { group: group.into(), delta }
}

/// Filtration of r_P(Pi) or r_Q(Pi) as a GL2 x PGSp6-module.
pub fn minrep_jacquet(group: GroupName, parabolic: &str) -> Result<Vec<FiltrationPiece>> {
    use GroupName::*;
    if group != G2 {
        return Err(Error::NotFound(format!("minimal-representation Jacquet table for {group:?}; use the PGSp6 table")));
    }
    let amb = "GL2 x PGSp6";
    let bbar_p2 = vec![sg(GL2, "Bbar"), sg(PGSp6, "P2")];
    let pieces = match parabolic {
        "P" => vec![
            FiltrationPiece::new(vec![], amb, minrep(&[("Pi_D6", "det", q(1, 2)), ("Pi_empty", "det", q(3, 2))])),
            FiltrationPiece::new(bbar_p2, amb, regular("GL1", vec![pw("a11", q(-1, 2)), pw("a22", qi(1))])),
            FiltrationPiece::new(vec![sg(PGSp6, "P13")], "PGSp6", regular("GL2", vec![])),
        ],
        "Q" => vec![
            FiltrationPiece::new(vec![], amb, minrep(&[("Pi_A5", "det", q(3, 2)), ("Pi_A1", "det", qi(2))])),
            FiltrationPiece::new(bbar_p2, amb, regular("GL1", vec![pw("a11", q(1, 2)), pw("a22", qi(1))])),
            FiltrationPiece::new(vec![sg(PGSp6, "P2")], "PGSp6", Datum::Weil { dual_pair: "GL2 x GSO4".into() }),
        ],
        _ => return Err(Error::NotFound(format!("parabolic {parabolic} of G2 (expected P or Q)"))),
    };
    Ok(number(pieces))
}

/// Filtration of r_{P_i}(Pi) as a G2 x M_i-module.
pub fn minrep_jacquet_p6(parabolic: &str) -> Result<Vec<FiltrationPiece>> {
    use GroupName::*;
    let q1_delta = || regular("GL1", vec![pw("g1", q(-1, 2)), pw("det g2", q(1, 2))]);
    let pieces = match parabolic {
        "P1" => {
            let amb = "G2 x GSp4";
            vec![
                FiltrationPiece::new(vec![], amb, minrep(&[("Pi_D6", "nu", q(1, 2)), ("Pi_empty", "nu", q(3, 2))])),
                FiltrationPiece::new(vec![sg(G2, "Q"), sg(GSp4, "Q1")], amb, q1_delta()),
                FiltrationPiece::new(vec![sg(G2, "P"), sg(GSp4, "Q2")], amb, regular("GL2", vec![])),
            ]
        }
        "P2" => {
            let amb = "G2 x (GL2 x GL2)/GL1";
            vec![
                FiltrationPiece::new(vec![], amb, minrep(&[("Pi_D5", "det", q(1, 2)), ("Pi_A1", "det", q(3, 2))])),
                FiltrationPiece::new(
                    vec![sg(G2, "Q"), sg(GL2, "Bbar"), sg(GL2, "Bbar")],
                    amb,
                    regular("GL1", vec![pw("a11", q(1, 2)), pw("a22", qi(1))]),
                ),
                FiltrationPiece::new(vec![sg(G2, "P"), sg(GL2, "Bbar")], "G2 x GL2", regular("GL2", vec![])),
                FiltrationPiece::new(vec![sg(G2, "Q")], "G2", Datum::Weil { dual_pair: "GL2 x GSO4".into() }),
            ]
        }
        "P3" => {
            let amb = "G2 x GL3";
            vec![
                FiltrationPiece::new(vec![], amb, minrep(&[("Pi_E6", "det", qi(0)), ("Pi_empty", "det", qi(1))])),
                FiltrationPiece::new(vec![sg(G2, "Q"), sg(GL3, "Q1")], amb, q1_delta()),
                FiltrationPiece::new(vec![sg(G2, "P"), sg(GL3, "Q2")], amb, regular("GL2", vec![])),
            ]
        }
        _ => return Err(Error::NotFound(format!("parabolic {parabolic} of PGSp6 (expected P1, P2 or P3)"))),
    };
    Ok(number(pieces))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum EtaleCubic {
    Split,
    PartialSplit { k: String },
    Field { label: String },
}

impl EtaleCubic {
    pub fn m_e(&self) -> u32 {
        match self {
            EtaleCubic::Split => 3,
            EtaleCubic::PartialSplit { .. } => 1,
            EtaleCubic::Field { .. } => 0,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, EtaleCubic::Field { .. })
    }

    /// `F3`, `FxK` or `FxK:label`, `field` or `field:label`.
    pub fn parse(s: &str) -> Result<Self> {
        let (head, label) = match s.split_once(':') {
            Some((h, l)) => (h, Some(l)),
            None => (s, None),
        };
        let lab = |d: &str| label.unwrap_or(d).to_string();
        match head.to_ascii_lowercase().as_str() {
            "f3" | "split" => Ok(EtaleCubic::Split),
            "fxk" | "partial" => Ok(EtaleCubic::PartialSplit { k: lab("K") }),
            "field" | "e" => Ok(EtaleCubic::Field { label: lab("E") }),
            _ => Err(Error::NotFound(format!("etale cubic algebra `{s}` (expected F3, FxK or field)"))),
        }
    }
}

impl std::fmt::Display for EtaleCubic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EtaleCubic::Split => write!(f, "F3"),
            EtaleCubic::PartialSplit { k } => write!(f, "FxK:{k}"),
            EtaleCubic::Field { label } => write!(f, "field:{label}"),
        }
    }
}

/// The restriction of I_E(s) to G2. Layers with multiplicity m_E = 0 are
/// dropped and the rest renumbered, so the layer indices stay contiguous;
/// `label` keeps the names I0, J1, ..., J4.
pub fn ie_filtration(s: Q, e: &EtaleCubic) -> Vec<FiltrationPiece> {
    use GroupName::*;
    let m = e.m_e();
    let half = s * q(1, 2) + q(1, 4);
    let one = s + qi(1);
    let with = |mut p: FiltrationPiece, label: &str, mult: u32, t: Option<Q>| {
        p.label = Some(label.into());
        p.multiplicity = mult;
        p.twist = t.map(|t| pw("det", t));
        p
    };
    let bottom_up = vec![
        with(
            FiltrationPiece::new(vec![], "G2", Datum::Whittaker { group: "G2".into(), character: "psibar_E".into() }),
            "I0",
            1,
            None,
        ),
        with(FiltrationPiece::new(vec![sg(G2, "P")], "G2", regular("PGL2", vec![])), "J1", 1, Some(half)),
        with(
            FiltrationPiece::new(vec![sg(G2, "P")], "G2", Datum::Whittaker { group: "PGL2".into(), character: "psi".into() }),
            "J2",
            m,
            Some(half),
        ),
        with(FiltrationPiece::new(vec![sg(G2, "Q")], "G2", Datum::Character), "J3", m, Some(one)),
        with(FiltrationPiece::new(vec![sg(G2, "P")], "G2", Datum::Character), "J4", 1, Some(one)),
    ];
    let mut v: Vec<FiltrationPiece> = bottom_up.into_iter().filter(|p| p.multiplicity > 0).collect();
    for (i, p) in v.iter_mut().enumerate() {
        p.layer = i as u32;
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum JordanAlgebraCase {
    Dplus,
    M3F,
    H3M2,
}

impl JordanAlgebraCase {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dplus" | "d+" | "d" => Ok(JordanAlgebraCase::Dplus),
            "m3f" | "m3" => Ok(JordanAlgebraCase::M3F),
            "h3m2" | "h3" => Ok(JordanAlgebraCase::H3M2),
            _ => Err(Error::NotFound(format!("Jordan algebra `{s}` (expected Dplus, M3F or H3M2)"))),
        }
    }

    pub fn dim(self) -> u32 {
        match self {
            JordanAlgebraCase::H3M2 => 15,
            _ => 9,
        }
    }

    pub fn s_j(self) -> Q {
        match self {
            JordanAlgebraCase::H3M2 => q(1, 2),
            _ => q(-1, 2),
        }
    }

    fn r_name(self) -> &'static str {
        match self {
            JordanAlgebraCase::Dplus => "R_D(E)",
            JordanAlgebraCase::M3F => "R_M3(F)(E)",
            JordanAlgebraCase::H3M2 => "R_H3(M2(F))(E)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualPairData {
    pub h_j: String,
    pub h_j_e: String,
    pub ambient: String,
    pub dim: u32,
    /// Twisted Jacquet module of the minimal representation along (N, psi_E).
    pub twisted_jacquet: String,
}

pub fn dualpair_table(j: JordanAlgebraCase) -> DualPairData {
    let (h, he, amb) = match j {
        JordanAlgebraCase::Dplus => ("PD^x", "PE^x", "E6^D"),
        JordanAlgebraCase::M3F => ("PGL3 x| Z/2", "PE^x x| Z/2", "E6 x| Z/2"),
        JordanAlgebraCase::H3M2 => ("PGSp6", "SL2(E)/mu2", "E7"),
    };
    DualPairData {
        h_j: h.into(),
        h_j_e: he.into(),
        ambient: amb.into(),
        dim: j.dim(),
        twisted_jacquet: "(Pi_J)_{N,psi_E} = ind_{H_J,E}^{H_J}(1)".into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortExact {
    pub sub: String,
    pub middle: String,
    pub quotient: String,
}

fn ses(a: &str, b: &str, c: &str) -> ShortExact {
    ShortExact { sub: a.into(), middle: b.into(), quotient: c.into() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RjeStructure {
    pub j: JordanAlgebraCase,
    pub e: EtaleCubic,
    /// R_J(E) is the zero representation.
    pub zero: bool,
    #[serde(serialize_with = "ser_q")]
    pub s_j: Q,
    /// R_J(E) embeds in I_E(s_J).
    pub embedding: String,
    pub ie_half_length: u32,
    pub sequences: Vec<ShortExact>,
}

pub fn rje_structure(j: JordanAlgebraCase, e: &EtaleCubic) -> RjeStructure {
    let field = e.is_field();
    let zero = j == JordanAlgebraCase::Dplus && !field;
    let rd = if field { "R_D(E)" } else { "0" };
    let h3 = JordanAlgebraCase::H3M2.r_name();
    let embedding = if zero {
        "0".to_string()
    } else {
        format!("{} -> I_E({})", j.r_name(), fmt_q(j.s_j()))
    };
    RjeStructure {
        j,
        e: e.clone(),
        zero,
        s_j: j.s_j(),
        embedding,
        ie_half_length: if field { 3 } else { 2 },
        sequences: vec![ses(h3, "I_E(1/2)", rd), ses("V", h3, JordanAlgebraCase::M3F.r_name())],
    }
}

// ---------------------------------------------------------- cross-checks against rootsys

/// One row of the twist/modulus comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistCheck {
    pub what: String,
    #[serde(serialize_with = "ser_q")]
    pub emitted: Q,
    #[serde(serialize_with = "ser_q")]
    pub derived: Q,
    pub ok: bool,
}

fn modulus_exponent(group: GroupName, parabolic: &str, character: &str) -> Result<Q> {
    let d = parabolic_data(group, parabolic)?;
    d.modulus
        .iter()
        .find(|m| m.character == character)
        .map(|m| m.exponent)
        .ok_or_else(|| Error::InvariantViolation(format!("{group:?} {parabolic} has no modulus factor {character}")))
}

fn twist_of(pieces: &[FiltrationPiece], symbol: &str) -> Option<Q> {
    pieces.iter().find_map(|p| match &p.datum {
        Datum::MinRep { summands } => summands.iter().find(|s| s.symbol == symbol).map(|s| s.twist.exponent),
        _ => None,
    })
}

fn delta_of(pieces: &[FiltrationPiece], character: &str) -> Option<Q> {
    pieces.iter().find_map(|p| match &p.datum {
        Datum::Regular { delta, .. } => delta.iter().find(|d| d.character == character).map(|d| d.exponent),
        _ => None,
    })
}

/// Compare the twists in the tables with values derived from the modulus
/// characters in `rootsys`. Mapping:
///
/// - (G2, P), P1, P3: the trivial summand Pi_empty of the top piece sits at
///   half the modulus exponent of the parabolic.
/// - P1, middle piece: C_c(Omega) carries |nu|^3, normalization removes
///   delta_{P1}^{1/2}, nu = det g2 on L1, and the induction from Q1 removes
///   delta_{Q1}^{1/2}; the det g2 exponent that remains is the one in delta.
pub fn twist_modulus_checks() -> Result<Vec<TwistCheck>> {
    use GroupName::*;
    let mut out = Vec::new();
    let mut row = |what: &str, emitted: Option<Q>, derived: Q| -> Result<()> {
        let emitted = emitted.ok_or_else(|| Error::InvariantViolation(format!("{what}: no emitted value")))?;
        out.push(TwistCheck { what: what.into(), emitted, derived, ok: emitted == derived });
        Ok(())
    };
    let half = q(1, 2);
    let gp = minrep_jacquet(G2, "P")?;
    row("(G2,P) Pi_empty twist = delta_P exponent / 2", twist_of(&gp, "Pi_empty"), modulus_exponent(G2, "P", "det")? * half)?;
    let p1 = minrep_jacquet_p6("P1")?;
    row("P1 Pi_empty twist = delta_P1 exponent / 2", twist_of(&p1, "Pi_empty"), modulus_exponent(PGSp6, "P1", "nu")? * half)?;
    let p3 = minrep_jacquet_p6("P3")?;
    row("P3 Pi_empty twist = delta_P3 exponent / 2", twist_of(&p3, "Pi_empty"), modulus_exponent(PGSp6, "P3", "det")? * half)?;
    let action = qi(3);
    let derived = action - modulus_exponent(PGSp6, "P1", "nu")? * half - modulus_exponent(GSp4, "Q1", "det g2")? * half;
    row("P1 middle delta, det g2 exponent", delta_of(&p1, "det g2"), derived)?;
    Ok(out)
}

/// Every subgroup a piece is induced from is a parabolic in `rootsys`.
pub fn check_subgroup_names(pieces: &[FiltrationPiece]) -> Result<()> {
    for p in pieces {
        for s in &p.induced_from {
            if !parabolic_names(s.group).contains(&s.name.as_str()) {
                return Err(Error::InvariantViolation(format!("{:?} has no parabolic {}", s.group, s.name)));
            }
        }
    }
    Ok(())
}

/// Layers are numbered 0, 1, ... from the bottom.
pub fn check_contiguous(pieces: &[FiltrationPiece]) -> bool {
    pieces.iter().enumerate().all(|(i, p)| p.layer == i as u32)
}

/// Sum of multiplicities of the J2 and J3 layers.
pub fn middle_multiplicity(pieces: &[FiltrationPiece]) -> u32 {
    pieces
        .iter()
        .filter(|p| matches!(p.label.as_deref(), Some("J2") | Some("J3")))
        .map(|p| p.multiplicity)
        .sum()
}
