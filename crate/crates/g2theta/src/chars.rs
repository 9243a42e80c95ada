//! Characters of F^x and of the maximal tori of G2 and PGSp6.
//!
//! A character is a product of declared finite-order symbols and an
//! unramified twist |.|^s with s rational.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::Deserialize;

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
pub struct CharSymbol {
    pub name: String,
    pub order: u32,
    #[serde(default)]
    pub ramified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Registry {
    symbols: BTreeMap<String, CharSymbol>,
}

#[derive(Deserialize)]
struct RegistryFile {
    #[serde(default)]
    symbol: Vec<CharSymbol>,
}

impl Registry {
    pub fn new(symbols: Vec<CharSymbol>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for s in symbols {
            if s.order == 0 {
                return Err(Error::Registry(format!("symbol `{}` has order 0", s.name)));
            }
            if s.name == "1" {
                return Err(Error::Registry("the name `1` is reserved for the trivial character".into()));
            }
            if !valid_ident(&s.name) {
                return Err(Error::Registry(format!("`{}` is not a valid symbol name", s.name)));
            }
            if map.insert(s.name.clone(), s.clone()).is_some() {
                return Err(Error::Registry(format!("symbol `{}` declared twice", s.name)));
            }
        }
        // F^x has exactly one unramified character of each order, so two
        // unramified symbols of the same order would be a contradiction.
        let mut seen = BTreeMap::new();
        for s in map.values().filter(|s| !s.ramified && s.order > 1) {
            if let Some(other) = seen.insert(s.order, s.name.clone()) {
                return Err(Error::Registry(format!(
                    "`{}` and `{}` are both unramified of order {}",
                    other, s.name, s.order
                )));
            }
        }
        Ok(Registry { symbols: map })
    }

    /// chi2 / eta2: unramified / ramified quadratic; chi3 / eta3: unramified / ramified cubic.
    pub fn default_registry() -> Self {
        let sym = |n: &str, o, r| CharSymbol { name: n.into(), order: o, ramified: r };
        Registry::new(vec![
            sym("chi2", 2, false),
            sym("eta2", 2, true),
            sym("chi3", 3, false),
            sym("eta3", 3, true),
        ])
        .expect("default registry is well formed")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let file: RegistryFile =
            toml::from_str(text).map_err(|e| Error::Registry(format!("bad registry file: {e}")))?;
        Registry::new(file.symbol)
    }

    pub fn get(&self, name: &str) -> Result<&CharSymbol> {
        self.symbols.get(name).ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn symbols(&self) -> impl Iterator<Item = &CharSymbol> {
        self.symbols.values()
    }

    pub fn unramified_of_order(&self, order: u32) -> Option<&CharSymbol> {
        self.symbols.values().find(|s| !s.ramified && s.order == order)
    }
}

impl Default for Registry {
    fn default() -> Self {
        Registry::default_registry()
    }
}

pub(crate) fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Opaque labels: identifiers, optionally wrapped as in `theta(rho)`.
pub(crate) fn valid_label(s: &str) -> bool {
    match s.find('(') {
        None => valid_ident(s),
        Some(i) => valid_ident(&s[..i]) && s.ends_with(')') && valid_label(&s[i + 1..s.len() - 1]),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Torsion {
    order: u32,
    ramified: bool,
    residue: u32,
}

/// torsion * |.|^exponent, always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentChar {
    torsion: BTreeMap<String, Torsion>,
    exponent: Q,
}

impl ExponentChar {
    pub fn trivial() -> Self {
        ExponentChar { torsion: BTreeMap::new(), exponent: Q::zero() }
    }

    pub fn abs(s: Q) -> Self {
        ExponentChar { torsion: BTreeMap::new(), exponent: s }
    }

    pub fn symbol(reg: &Registry, name: &str, power: i64) -> Result<Self> {
        let sym = reg.get(name)?;
        let mut c = ExponentChar::trivial();
        let residue = power.rem_euclid(sym.order as i64) as u32;
        if residue != 0 {
            c.torsion.insert(
                sym.name.clone(),
                Torsion { order: sym.order, ramified: sym.ramified, residue },
            );
        }
        Ok(c)
    }

    pub fn exponent(&self) -> Q {
        self.exponent
    }

    pub fn is_unitary(&self) -> bool {
        self.exponent.is_zero()
    }

    pub fn is_trivial(&self) -> bool {
        self.is_unitary() && self.torsion.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        !self.torsion.is_empty()
    }

    /// The finite-order part, i.e. the character with exponent dropped.
    pub fn unitary_part(&self) -> Self {
        ExponentChar { torsion: self.torsion.clone(), exponent: Q::zero() }
    }

    pub fn with_exponent(&self, s: Q) -> Self {
        ExponentChar { torsion: self.torsion.clone(), exponent: s }
    }

    pub fn twist(&self, s: Q) -> Self {
        ExponentChar { torsion: self.torsion.clone(), exponent: self.exponent + s }
    }

    /// Order of the torsion part (1 for the trivial torsion).
    pub fn torsion_order(&self) -> u32 {
        self.torsion
            .values()
            .map(|t| t.order / t.order.gcd(&t.residue))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Multiplicative order, when the character has finite order.
    pub fn finite_order(&self) -> Option<u32> {
        self.is_unitary().then(|| self.torsion_order())
    }

    /// Unramified iff every torsion symbol carrying a nonzero residue is unramified.
    pub fn is_unramified(&self) -> bool {
        self.torsion.values().all(|t| !t.ramified)
    }

    pub fn is_quadratic(&self) -> bool {
        self.finite_order() == Some(2)
    }

    pub fn is_cubic(&self) -> bool {
        self.finite_order() == Some(3)
    }

    /// Integer power, e.g. chi^2.
    pub fn pow(&self, n: i64) -> Self {
        let mut torsion = BTreeMap::new();
        for (k, t) in &self.torsion {
            let r = ((t.residue as i64) * n).rem_euclid(t.order as i64) as u32;
            if r != 0 {
                torsion.insert(k.clone(), Torsion { residue: r, ..*t });
            }
        }
        ExponentChar { torsion, exponent: self.exponent * Q::from_integer(n) }
    }

    /// Re-normalization: drops any zero residues. Idempotent.
    pub fn normalized(&self) -> Self {
        let torsion = self
            .torsion
            .iter()
            .filter_map(|(k, t)| {
                let r = t.residue % t.order;
                (r != 0).then(|| (k.clone(), Torsion { residue: r, ..*t }))
            })
            .collect();
        ExponentChar { torsion, exponent: self.exponent }
    }
}

pub fn char_mul(a: &ExponentChar, b: &ExponentChar) -> Result<ExponentChar> {
    let mut torsion = a.torsion.clone();
    for (k, tb) in &b.torsion {
        match torsion.get_mut(k) {
            Some(ta) => {
                if ta.order != tb.order || ta.ramified != tb.ramified {
                    return Err(Error::Registry(format!(
                        "symbol `{k}` carries different declarations in the two operands"
                    )));
                }
                ta.residue = (ta.residue + tb.residue) % ta.order;
            }
            None => {
                torsion.insert(k.clone(), *tb);
            }
        }
    }
    torsion.retain(|_, t| t.residue != 0);
    Ok(ExponentChar { torsion, exponent: a.exponent + b.exponent })
}

pub fn char_inv(a: &ExponentChar) -> ExponentChar {
    a.pow(-1)
}

/// Product that panics on mismatched declarations; only used on values built
/// from one registry, where `char_mul` cannot fail.
pub(crate) fn mul(a: &ExponentChar, b: &ExponentChar) -> ExponentChar {
    char_mul(a, b).expect("operands share a registry")
}

pub fn fmt_q(x: Q) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for ExponentChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .torsion
            .iter()
            .map(|(k, t)| if t.residue == 1 { k.clone() } else { format!("{k}^{}", t.residue) })
            .collect();
        if !self.exponent.is_zero() {
            parts.push(format!("|.|^{}", fmt_q(self.exponent)));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Character of the G2 torus through T = G_m^2, t -> ((2a+b)(t), (a+b)(t)).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusCharG2 {
    pub c1: ExponentChar,
    pub c2: ExponentChar,
}

impl TorusCharG2 {
    pub fn new(c1: ExponentChar, c2: ExponentChar) -> Result<Self> {
        char_mul(&c1, &c2)?;
        Ok(TorusCharG2 { c1, c2 })
    }

    pub fn trivial() -> Self {
        TorusCharG2 { c1: ExponentChar::trivial(), c2: ExponentChar::trivial() }
    }

    pub fn mul(&self, other: &TorusCharG2) -> Result<TorusCharG2> {
        Ok(TorusCharG2 { c1: char_mul(&self.c1, &other.c1)?, c2: char_mul(&self.c2, &other.c2)? })
    }

    pub fn inv(&self) -> TorusCharG2 {
        TorusCharG2 { c1: char_inv(&self.c1), c2: char_inv(&self.c2) }
    }

    pub fn exponents(&self) -> (Q, Q) {
        (self.c1.exponent(), self.c2.exponent())
    }

    pub fn is_unitary(&self) -> bool {
        self.c1.is_unitary() && self.c2.is_unitary()
    }

    /// chi o gamma^v for the coroot of the root a*alpha + b*beta.
    ///
    /// With e1 = 2a+b and e2 = a+b a basis of X*(T), the coroot gamma^v pairs
    /// to (<e1,gamma^v>, <e2,gamma^v>) and chi o gamma^v = c1^m1 * c2^m2.
    pub fn compose_coroot(&self, root: crate::rootsys::RootVecG2) -> ExponentChar {
        let (m1, m2) = crate::rootsys::coroot_coords(root);
        mul(&self.c1.pow(m1), &self.c2.pow(m2))
    }
}

impl fmt::Display for TorusCharG2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}

/// Character (t1,t2,t3) -> x1(t1) x2(t2) x3(t3) of the M3-torus of PGSp6.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusCharC3 {
    pub x: [ExponentChar; 3],
}

impl TorusCharC3 {
    pub fn new(x1: ExponentChar, x2: ExponentChar, x3: ExponentChar) -> Result<Self> {
        char_mul(&x1, &x2)?;
        char_mul(&x1, &x3)?;
        char_mul(&x2, &x3)?;
        Ok(TorusCharC3 { x: [x1, x2, x3] })
    }

    pub fn exponents(&self) -> [Q; 3] {
        [self.x[0].exponent(), self.x[1].exponent(), self.x[2].exponent()]
    }

    /// x o gamma^v for a cocharacter given in (t1,t2,t3) coordinates.
    pub fn compose_cocharacter(&self, co: [i64; 3]) -> ExponentChar {
        let a = mul(&self.x[0].pow(co[0]), &self.x[1].pow(co[1]));
        mul(&a, &self.x[2].pow(co[2]))
    }
}

/// (chi o beta1^v, chi o beta2^v, chi o beta3^v) for the canonical long-root triple.
pub fn borel_char_triple(chi: &TorusCharG2) -> (ExponentChar, ExponentChar, ExponentChar) {
    let [b1, b2, b3] = crate::rootsys::long_root_triple();
    (chi.compose_coroot(b1), chi.compose_coroot(b2), chi.compose_coroot(b3))
}

/// Inverse of `borel_char_triple` on triples with trivial product.
pub fn torus_from_triple(t: &(ExponentChar, ExponentChar, ExponentChar)) -> Result<TorusCharG2> {
    let prod = char_mul(&char_mul(&t.0, &t.1)?, &t.2)?;
    if !prod.is_trivial() {
        return Err(Error::Precondition(format!("triple product is {prod}, not trivial")));
    }
    // borel_char_triple(c1, c2) = (c1^-1 c2^-1, c2, c1)
    TorusCharG2::new(t.2.clone(), t.1.clone())
}
