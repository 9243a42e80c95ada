//! Composition structure of the parabolically induced representations of G2
//! (from P, Q, B) and of PGSp6 (from P2, P13, P3, P1).
//!
//! Negative s is reduced to positive s through I(-s, tau) = I(s, tau^v)^v,
//! which keeps the constituents and exchanges sub and quotient.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chars::{borel_char_triple, char_inv, mul, q, ExponentChar, TorusCharG2, Q};
use crate::error::{Error, Result};
use crate::reps::{
    g2_dominant, g2_langlands_from_torus, g2_orbit, g2_three_quadratics, G2Rep, GL2Kind, GL2Rep, GL3Rep,
    GSp4Rep, Genericity, PGSp6Rep, Summand,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Position {
    Sub,
    Quotient,
    Subquotient,
    DirectSummand,
}

impl Position {
    pub fn dual(self) -> Self {
        match self {
            Position::Sub => Position::Quotient,
            Position::Quotient => Position::Sub,
            p => p,
        }
    }
}

/// A constituent; `rep = None` marks one the tables leave unnamed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent<R> {
    pub rep: Option<R>,
    pub position: Position,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepStructure<R> {
    pub irreducible: bool,
    pub constituents: Vec<Constituent<R>>,
    pub length: u32,
    pub note: Option<String>,
}

impl<R: Clone> RepStructure<R> {
    fn irr(rep: R) -> Self {
        RepStructure {
            irreducible: true,
            constituents: vec![Constituent { rep: Some(rep), position: Position::Quotient }],
            length: 1,
            note: None,
        }
    }

    fn of(parts: Vec<(Option<R>, Position)>) -> Self {
        let length = parts.len() as u32;
        RepStructure {
            irreducible: length == 1,
            constituents: parts.into_iter().map(|(rep, position)| Constituent { rep, position }).collect(),
            length,
            note: None,
        }
    }

    fn named(parts: Vec<(R, Position)>) -> Self {
        RepStructure::of(parts.into_iter().map(|(r, p)| (Some(r), p)).collect())
    }

    fn summands(g: R, d: R) -> Self {
        RepStructure::named(vec![(g, Position::DirectSummand), (d, Position::DirectSummand)])
    }

    fn dual(mut self) -> Self {
        if self.irreducible {
            return self;
        }
        for c in &mut self.constituents {
            c.position = c.position.dual();
        }
        self
    }

    fn with_note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }

    pub fn reps(&self) -> impl Iterator<Item = &R> {
        self.constituents.iter().filter_map(|c| c.rep.as_ref())
    }
}

impl<R: Clone + PartialEq> RepStructure<R> {
    /// Mark `lq` as the unique quotient: the structure is a positive
    /// standard module and `lq` its Langlands quotient.
    fn with_quotient(mut self, lq: &R) -> Self {
        if self.irreducible || !self.constituents.iter().any(|c| c.rep.as_ref() == Some(lq)) {
            return self;
        }
        for c in &mut self.constituents {
            if c.rep.as_ref() == Some(lq) {
                c.position = Position::Quotient;
            } else if c.position == Position::Quotient {
                c.position = Position::Subquotient;
            }
        }
        self
    }
}

#[derive(Serialize)]
struct ConstituentJson {
    rep: Option<String>,
    position: Position,
}

#[derive(Serialize)]
pub struct RepStructureJson {
    irreducible: bool,
    length: u32,
    constituents: Vec<ConstituentJson>,
    note: Option<String>,
}

impl<R: fmt::Display> RepStructure<R> {
    pub fn to_json(&self) -> RepStructureJson {
        RepStructureJson {
            irreducible: self.irreducible,
            length: self.length,
            constituents: self
                .constituents
                .iter()
                .map(|c| ConstituentJson { rep: c.rep.as_ref().map(|r| r.to_string()), position: c.position })
                .collect(),
            note: self.note.clone(),
        }
    }
}

impl<R: fmt::Display> fmt::Display for RepStructure<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irreducible {
            write!(f, "irreducible:")?;
        } else {
            write!(f, "length {}:", self.length)?;
        }
        for c in &self.constituents {
            let p = match c.position {
                Position::Sub => "sub",
                Position::Quotient => "quot",
                Position::Subquotient => "subquot",
                Position::DirectSummand => "summand",
            };
            match &c.rep {
                Some(r) => write!(f, " [{p} {r}]")?,
                None => write!(f, " [{p} unresolved]")?,
            }
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

use Position::{Quotient as Quot, Sub, Subquotient as SubQ};

fn half() -> Q {
    q(1, 2)
}

fn unitary_input(tau: &GL2Rep) -> Result<()> {
    let ok = tau.twist().is_zero()
        && match tau.kind() {
            GL2Kind::PrincipalSeries(a, b) => a.is_unitary() && b.is_unitary(),
            _ => true,
        };
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("tau must be unitary with the twist carried by s, got {tau}")))
    }
}

fn st(chi: &ExponentChar) -> GL2Rep {
    GL2Rep::steinberg(chi.clone())
}

fn st1() -> GL2Rep {
    st(&ExponentChar::trivial())
}

fn ps(a: ExponentChar, b: ExponentChar) -> GL2Rep {
    GL2Rep::principal_series(a, b).expect("unitary principal series are irreducible")
}

fn bad<T>(e: Error) -> T {
    panic!("table entry failed its own constructor: {e}")
}

/// Torus character of I_P(s, pi(mu1, mu2)) = Ind_B(mu1|.|^s, mu2|.|^s).
pub fn p_torus(mu1: &ExponentChar, mu2: &ExponentChar, s: Q) -> TorusCharG2 {
    TorusCharG2 { c1: mu1.twist(s), c2: mu2.twist(s) }
}

/// Torus character of I_Q(s, pi(mu1, mu2)): c1 = mu2|.|^s, c2 = mu1/mu2.
pub fn q_torus(mu1: &ExponentChar, mu2: &ExponentChar, s: Q) -> TorusCharG2 {
    TorusCharG2 { c1: mu2.twist(s), c2: mul(mu1, &char_inv(mu2)) }
}

fn jp(s: Q, tau: GL2Rep) -> G2Rep {
    G2Rep::jp(s, tau).unwrap_or_else(bad)
}

fn jq(s: Q, tau: GL2Rep) -> G2Rep {
    G2Rep::jq(s, tau).unwrap_or_else(bad)
}

fn sd_sc(tau: &GL2Rep) -> Option<(bool, Option<bool>)> {
    tau.sc().filter(|s| s.self_dual).map(|s| (s.central.is_trivial(), s.dihedral_s3))
}

fn need_s3_flag(tau: &GL2Rep) -> Error {
    Error::Precondition(format!("{tau}: the s3 flag is needed to decide reducibility here"))
}

// ------------------------------------------------------------------ G2, P

pub fn decompose_ip(s: Q, tau: &GL2Rep) -> Result<RepStructure<G2Rep>> {
    unitary_input(tau)?;
    if s < Q::zero() {
        return Ok(decompose_ip(-s, &tau.contragredient())?.dual());
    }
    let h = half();
    match tau.kind() {
        GL2Kind::Supercuspidal(_) => {
            match sd_sc(tau) {
                Some((true, _)) if s == h => {
                    return Ok(RepStructure::named(vec![
                        (G2Rep::delta_p(tau.clone())?, Sub),
                        (jp(h, tau.clone()), Quot),
                    ]))
                }
                Some((false, _)) if s.is_zero() => {
                    return Ok(RepStructure::summands(
                        G2Rep::ip_summand(tau.clone(), Summand::Gen)?,
                        G2Rep::ip_summand(tau.clone(), Summand::Deg)?,
                    ))
                }
                _ => {}
            }
            Ok(RepStructure::irr(if s.is_zero() { G2Rep::ip(tau.clone())? } else { jp(s, tau.clone()) }))
        }
        GL2Kind::Steinberg(chi) => {
            let one = chi.is_trivial();
            if one && s == q(3, 2) {
                return Ok(RepStructure::named(vec![(G2Rep::St, Sub), (jp(s, st1()), Quot)]));
            }
            if one && s == h {
                return Ok(RepStructure::named(vec![
                    (G2Rep::pi_gen_char(chi.clone())?, Sub),
                    (jq(h, st1()), SubQ),
                    (jp(h, st1()), Quot),
                ]));
            }
            if (chi.is_quadratic() || chi.is_cubic()) && s == h {
                return Ok(RepStructure::named(vec![
                    (G2Rep::pi_gen_char(chi.clone())?, Sub),
                    (jp(h, tau.clone()), Quot),
                ]));
            }
            Ok(RepStructure::irr(if s.is_zero() { G2Rep::ip(tau.clone())? } else { jp(s, tau.clone()) }))
        }
        GL2Kind::OneDim(chi) => {
            let one = chi.is_trivial();
            if one && s == q(3, 2) {
                return Ok(RepStructure::named(vec![(jq(q(5, 2), st1()), Sub), (G2Rep::Triv, Quot)]));
            }
            if one && s == h {
                let triv = ExponentChar::trivial();
                return Ok(RepStructure::named(vec![
                    (G2Rep::PiDeg1, Sub),
                    (jq(h, st1()), SubQ),
                    (jq(Q::from_integer(1), ps(triv.clone(), triv)), Quot),
                ]));
            }
            if chi.is_quadratic() && s == h {
                return Ok(RepStructure::named(vec![
                    (jq(h, st(chi)), Sub),
                    (jq(Q::from_integer(1), ps(ExponentChar::trivial(), chi.clone())), Quot),
                ]));
            }
            if chi.is_cubic() && s == h {
                return Ok(RepStructure::named(vec![
                    (jp(h, st(&char_inv(chi))), Sub),
                    (jq(Q::from_integer(1), ps(chi.clone(), char_inv(chi))), Quot),
                ]));
            }
            let c = p_torus(&chi.twist(h), &chi.twist(-h), s);
            Ok(RepStructure::irr(g2_langlands_from_torus(&c)?))
        }
        GL2Kind::PrincipalSeries(m1, m2) => {
            let c = p_torus(m1, m2, s);
            let r = decompose_ib_g2(&c)?.with_note("I_P(s, pi(mu1, mu2)) = Ind_B(mu1|.|^s, mu2|.|^s)");
            Ok(if s.is_zero() { r } else { r.with_quotient(&jp(s, tau.clone())) })
        }
    }
}

// ------------------------------------------------------------------ G2, Q

pub fn decompose_iq(s: Q, tau: &GL2Rep) -> Result<RepStructure<G2Rep>> {
    unitary_input(tau)?;
    if s < Q::zero() {
        return Ok(decompose_iq(-s, &tau.contragredient())?.dual());
    }
    let h = half();
    let one_q = Q::from_integer(1);
    match tau.kind() {
        GL2Kind::Supercuspidal(_) => {
            match sd_sc(tau) {
                Some((true, _)) if s == h => {
                    return Ok(RepStructure::named(vec![
                        (G2Rep::delta_q(tau.clone())?, Sub),
                        (jq(h, tau.clone()), Quot),
                    ]))
                }
                Some((false, None)) if s.is_zero() || s == one_q => return Err(need_s3_flag(tau)),
                Some((false, Some(true))) if s == one_q => {
                    return Ok(RepStructure::named(vec![
                        (G2Rep::pi_gen_dihedral(tau.clone())?, Sub),
                        (jq(one_q, tau.clone()), Quot),
                    ]))
                }
                Some((false, Some(false))) if s.is_zero() => {
                    return Ok(RepStructure::summands(
                        G2Rep::iq_summand(tau.clone(), Summand::Gen)?,
                        G2Rep::iq_summand(tau.clone(), Summand::Deg)?,
                    ))
                }
                _ => {}
            }
            Ok(RepStructure::irr(if s.is_zero() { G2Rep::iq(tau.clone())? } else { jq(s, tau.clone()) }))
        }
        GL2Kind::Steinberg(chi) => {
            let one = chi.is_trivial();
            if one && s == q(5, 2) {
                return Ok(RepStructure::named(vec![(G2Rep::St, Sub), (jq(s, st1()), Quot)]));
            }
            if one && s == h {
                return Ok(RepStructure::named(vec![
                    (G2Rep::PiGen(crate::reps::PiGenParam::One), Sub),
                    (G2Rep::PiDeg1, Sub),
                    (jq(h, st1()), Quot),
                ]));
            }
            if chi.is_quadratic() && s == h {
                return Ok(RepStructure::named(vec![
                    (G2Rep::pi_gen_quadratic(chi.clone())?, Sub),
                    (jq(h, tau.clone()), Quot),
                ]));
            }
            Ok(RepStructure::irr(if s.is_zero() { G2Rep::iq(tau.clone())? } else { jq(s, tau.clone()) }))
        }
        GL2Kind::OneDim(chi) => {
            let one = chi.is_trivial();
            if one && s == q(5, 2) {
                return Ok(RepStructure::named(vec![(jp(q(3, 2), st1()), Sub), (G2Rep::Triv, Quot)]));
            }
            if one && s == h {
                let triv = ExponentChar::trivial();
                return Ok(RepStructure::named(vec![
                    (jq(h, st1()), Sub),
                    (jp(h, st1()), SubQ),
                    (jq(one_q, ps(triv.clone(), triv)), Quot),
                ]));
            }
            if chi.is_quadratic() && s == h {
                return Ok(RepStructure::named(vec![
                    (jp(h, st(chi)), Sub),
                    (jq(one_q, ps(ExponentChar::trivial(), chi.clone())), Quot),
                ]));
            }
            let c = q_torus(&chi.twist(h), &chi.twist(-h), s);
            Ok(RepStructure::irr(g2_langlands_from_torus(&c)?))
        }
        GL2Kind::PrincipalSeries(m1, m2) => {
            let c = q_torus(m1, m2, s);
            let r = decompose_ib_g2(&c)?.with_note("I_Q(s, pi(mu1, mu2)) = Ind_B(mu2|.|^s, mu1/mu2)");
            Ok(if s.is_zero() { r } else { r.with_quotient(&jq(s, tau.clone())) })
        }
    }
}

// ------------------------------------------------------------------ G2, B

fn is_abs_pm1(x: &ExponentChar) -> bool {
    x.unitary_part().is_trivial() && x.exponent().abs() == Q::from_integer(1)
}

/// The reducibility conditions on (chi1, chi2, chi3) = borel_char_triple(chi).
pub fn g2_borel_reducible(c: &TorusCharG2) -> bool {
    let (a, b, d) = borel_char_triple(c);
    let t = [a, b, d];
    let hit = t.iter().any(is_abs_pm1)
        || (0..3).any(|i| (0..3).any(|j| i != j && is_abs_pm1(&mul(&t[i], &char_inv(&t[j])))));
    hit || g2_three_quadratics(c)
}

pub fn decompose_ib_g2(c: &TorusCharG2) -> Result<RepStructure<G2Rep>> {
    if c.is_unitary() && g2_three_quadratics(c) {
        return Ok(RepStructure::summands(
            G2Rep::ib_summand(c.clone(), Summand::Gen)?,
            G2Rep::ib_summand(c.clone(), Summand::Deg)?,
        ));
    }
    if !g2_borel_reducible(c) {
        return Ok(RepStructure::irr(g2_langlands_from_torus(c)?));
    }
    // Factor through a maximal parabolic where the Levi principal series is
    // reducible, and add up the two resulting induced representations.
    let orbit = g2_orbit(c);
    let abs1 = ExponentChar::abs(Q::from_integer(1));
    let h = half();
    let (mut parts, route) = if let Some(d) = orbit.iter().find(|d| mul(&d.c1, &char_inv(&d.c2)) == abs1) {
        let s = (d.c1.exponent() + d.c2.exponent()) * h;
        let chi = d.c1.twist(-(s + h));
        let mut v = decompose_ip(s, &GL2Rep::one_dim(chi.clone()))?.constituents;
        v.extend(decompose_ip(s, &GL2Rep::steinberg(chi))?.constituents);
        (v, "P")
    } else if let Some(d) = orbit.iter().find(|d| d.c2 == abs1) {
        let s = d.c1.exponent() + h;
        let chi = d.c1.unitary_part();
        let mut v = decompose_iq(s, &GL2Rep::one_dim(chi.clone()))?.constituents;
        v.extend(decompose_iq(s, &GL2Rep::steinberg(chi))?.constituents);
        (v, "Q")
    } else {
        return Err(Error::InvariantViolation(format!("reducible {c} meets no wall")));
    };
    // Positions inside Ind_B are only known for the Langlands quotient of a
    // standard module.
    let standard = g2_dominant(c) == *c && !c.is_unitary();
    let lq = g2_langlands_from_torus(c)?;
    let mut seen_lq = false;
    for p in &mut parts {
        p.position = SubQ;
        if standard && !seen_lq && p.rep.as_ref() == Some(&lq) {
            p.position = Quot;
            seen_lq = true;
        }
    }
    let mut out = RepStructure::of(parts.into_iter().map(|p| (p.rep, p.position)).collect());
    out.note = Some(format!("composition factors via I_{route}"));
    Ok(out)
}

/// Irreducibility of the standard module whose Langlands quotient is `pi`.
pub fn g2_standard_module_irreducible(pi: &G2Rep) -> bool {
    let r = match pi {
        G2Rep::JP { s, tau } => decompose_ip(*s, tau),
        G2Rep::JQ { s, tau } => decompose_iq(*s, tau),
        G2Rep::JB(c) => decompose_ib_g2(c),
        G2Rep::Triv => return false,
        _ => return true,
    };
    r.map(|x| x.irreducible).unwrap_or(false)
}

// ------------------------------------------------------------------ PGSp6

fn not_covered<T>(what: &str, tau: impl fmt::Display) -> Result<T> {
    Err(Error::NotCovered(format!("{what} for {tau}")))
}

fn j2(s: Q, tau: GL2Rep) -> PGSp6Rep {
    PGSp6Rep::j2(s, tau).unwrap_or_else(bad)
}

pub fn decompose_i2(s: Q, tau: &GL2Rep) -> Result<RepStructure<PGSp6Rep>> {
    unitary_input(tau)?;
    if s < Q::zero() {
        return Ok(decompose_i2(-s, &tau.contragredient())?.dual());
    }
    let h = half();
    let one_q = Q::from_integer(1);
    match tau.kind() {
        GL2Kind::Supercuspidal(_) => {
            match sd_sc(tau) {
                Some((true, _)) if s == h => {
                    return Ok(RepStructure::named(vec![
                        (PGSp6Rep::delta_2(tau.clone())?, Sub),
                        (j2(h, tau.clone()), Quot),
                    ]))
                }
                Some((false, None)) if s.is_zero() || s == one_q => return Err(need_s3_flag(tau)),
                Some((false, Some(true))) if s == one_q => {
                    return Ok(RepStructure::named(vec![
                        (PGSp6Rep::sigma_gen_dihedral(tau.clone())?, Sub),
                        (j2(one_q, tau.clone()), Quot),
                    ]))
                }
                Some((false, Some(false))) if s.is_zero() => {
                    return Ok(RepStructure::summands(
                        PGSp6Rep::i2_summand(tau.clone(), Summand::Gen)?,
                        PGSp6Rep::i2_summand(tau.clone(), Summand::Deg)?,
                    ))
                }
                _ => {}
            }
            Ok(RepStructure::irr(if s.is_zero() { PGSp6Rep::i2_irred(tau.clone())? } else { j2(s, tau.clone()) }))
        }
        GL2Kind::Steinberg(chi) => {
            let one = chi.is_trivial();
            if one && s == q(5, 2) {
                return Ok(RepStructure::named(vec![(PGSp6Rep::St, Sub), (j2(s, st1()), Quot)]));
            }
            if one && s == h {
                let st3 = GL3Rep::steinberg(ExponentChar::trivial())?;
                return Ok(RepStructure::named(vec![
                    (PGSp6Rep::i3_summand(st3, Summand::Gen)?, Sub),
                    (j2(h, st1()), Quot),
                ]));
            }
            if chi.is_quadratic() && s == h {
                return Ok(RepStructure::named(vec![
                    (PGSp6Rep::sigma_gen_quadratic(chi.clone())?, Sub),
                    (j2(h, tau.clone()), Quot),
                ]));
            }
            Ok(RepStructure::irr(if s.is_zero() { PGSp6Rep::i2_irred(tau.clone())? } else { j2(s, tau.clone()) }))
        }
        _ => not_covered("I_2(s, tau x tau)", tau),
    }
}

pub fn decompose_i13(s: Q, tau: &GL2Rep) -> Result<RepStructure<PGSp6Rep>> {
    unitary_input(tau)?;
    if !tau.is_supercuspidal() {
        return not_covered("I_13(s, tau x 1)", tau);
    }
    if s < Q::zero() {
        return Ok(decompose_i13(-s, &tau.contragredient())?.dual());
    }
    let h = half();
    match sd_sc(tau) {
        Some((true, _)) if s == h => {
            let lq = PGSp6Rep::j13(tau.twisted(h))?;
            return Ok(RepStructure::of(vec![
                (Some(PGSp6Rep::delta_13(tau.clone())?), Sub),
                (None, SubQ),
                (None, SubQ),
                (Some(lq), Quot),
            ])
            .with_note("length 4; two constituents unnamed"));
        }
        Some((false, None)) if s.is_zero() => return Err(need_s3_flag(tau)),
        Some((false, Some(false))) if s.is_zero() => {
            return Ok(RepStructure::summands(
                PGSp6Rep::i13_summand(tau.clone(), Summand::Gen)?,
                PGSp6Rep::i13_summand(tau.clone(), Summand::Deg)?,
            ))
        }
        _ => {}
    }
    Ok(RepStructure::irr(if s.is_zero() {
        PGSp6Rep::i13_irred(tau.clone())?
    } else {
        PGSp6Rep::j13(tau.twisted(s))?
    }))
}

pub fn decompose_i3(tau: &GL3Rep) -> Result<RepStructure<PGSp6Rep>> {
    if !tau.is_tempered() {
        return not_covered("I_3(tau)", tau);
    }
    if tau.is_self_dual() && !tau.parameter_has_trivial() {
        return Ok(RepStructure::summands(
            PGSp6Rep::i3_summand(tau.clone(), Summand::Gen)?,
            PGSp6Rep::i3_summand(tau.clone(), Summand::Deg)?,
        ));
    }
    let r = RepStructure::irr(PGSp6Rep::i3_irred(tau.clone())?);
    if tau.is_self_dual() {
        Ok(r)
    } else {
        Ok(r.with_note(format!("I_3({tau}) = I_3({})", tau.contragredient())))
    }
}

pub fn decompose_i1(s: Q, tau: &GSp4Rep) -> Result<RepStructure<PGSp6Rep>> {
    if !tau.std_has_trivial() {
        return Err(Error::Precondition(format!("{tau}: std o phi_tau must contain the trivial representation")));
    }
    let s_abs = s.abs();
    let r = if s_abs == half() {
        RepStructure::named(vec![
            (PGSp6Rep::delta_1(tau.clone())?, Sub),
            (PGSp6Rep::j1(half(), tau.clone())?, Quot),
        ])
    } else if s.is_zero() {
        RepStructure::irr(PGSp6Rep::i1_irred(tau.clone())?)
    } else {
        RepStructure::irr(PGSp6Rep::j1(s_abs, tau.clone())?)
    };
    Ok(if s < Q::zero() { r.dual() } else { r })
}

/// Genericity of a non-tempered Langlands quotient: generic exactly when its
/// standard module is irreducible and the inducing datum is generic.
pub fn p6_standard_module_genericity(sigma: &PGSp6Rep) -> Genericity {
    let verdict = match sigma {
        PGSp6Rep::J2 { s, tau } => decompose_i2(*s, tau).ok().map(|r| r.irreducible),
        PGSp6Rep::J13(tau) if tau.is_supercuspidal() => {
            decompose_i13(tau.twist(), &tau.untwisted()).ok().map(|r| r.irreducible)
        }
        PGSp6Rep::J1 { s, tau } if tau.std_has_trivial() => {
            decompose_i1(*s, tau).ok().map(|r| r.irreducible && tau.is_generic())
        }
        _ => None,
    };
    verdict.map(Genericity::from_bool).unwrap_or(Genericity::Undetermined)
}
