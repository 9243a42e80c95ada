//! Root data for G2 and for the C3 realization of PGSp6.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chars::{fmt_q, q, qi, TorusCharG2, Q};
use crate::error::{Error, Result};

/// The root a*alpha + b*beta, alpha short and beta long.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootVecG2 {
    pub a: i64,
    pub b: i64,
}

pub const fn rv(a: i64, b: i64) -> RootVecG2 {
    RootVecG2 { a, b }
}

pub const ALPHA: RootVecG2 = rv(1, 0);
pub const BETA: RootVecG2 = rv(0, 1);
pub const HIGHEST_ROOT: RootVecG2 = rv(3, 2);

impl RootVecG2 {
    pub fn neg(self) -> Self {
        rv(-self.a, -self.b)
    }

    pub fn add(self, o: Self) -> Self {
        rv(self.a + o.a, self.b + o.b)
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn norm2(self) -> i64 {
        g2_form(self, self)
    }

    pub fn is_long(self) -> bool {
        self.norm2() == 6
    }

    pub fn is_short(self) -> bool {
        self.norm2() == 2
    }
}

impl fmt::Display for RootVecG2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Invariant form with (alpha,alpha) = 2, (beta,beta) = 6, (alpha,beta) = -3.
pub fn g2_form(x: RootVecG2, y: RootVecG2) -> i64 {
    2 * x.a * y.a - 3 * (x.a * y.b + x.b * y.a) + 6 * x.b * y.b
}

/// <x, y^v> = 2 (x,y) / (y,y).
pub fn g2_pairing(x: RootVecG2, y: RootVecG2) -> i64 {
    let n = y.norm2();
    assert!(n != 0, "pairing with the zero vector");
    2 * g2_form(x, y) / n
}

/// Coordinates (<e1,gamma^v>, <e2,gamma^v>) with e1 = 2alpha+beta, e2 = alpha+beta.
pub fn coroot_coords(gamma: RootVecG2) -> (i64, i64) {
    (g2_pairing(rv(2, 1), gamma), g2_pairing(rv(1, 1), gamma))
}

pub fn g2_roots() -> Vec<RootVecG2> {
    let mut v: Vec<RootVecG2> = [
        rv(1, 0),
        rv(0, 1),
        rv(1, 1),
        rv(2, 1),
        rv(3, 1),
        rv(3, 2),
    ]
    .iter()
    .flat_map(|r| [*r, r.neg()])
    .collect();
    v.sort();
    v
}

pub fn g2_positive_roots() -> Vec<RootVecG2> {
    g2_roots().into_iter().filter(|r| r.a >= 0 && r.b >= 0).collect()
}

/// Integer matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat<const N: usize>(pub [[i64; N]; N]);

impl<const N: usize> Mat<N> {
    pub fn identity() -> Self {
        let mut m = [[0; N]; N];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        Mat(m)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = [[0; N]; N];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..N).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        Mat(m)
    }

    pub fn transpose(&self) -> Self {
        let mut m = [[0; N]; N];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.0[j][i];
            }
        }
        Mat(m)
    }

    pub fn apply_i(&self, v: [i64; N]) -> [i64; N] {
        let mut out = [0; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }

    pub fn apply_q(&self, v: [Q; N]) -> [Q; N] {
        let mut out = [Q::zero(); N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|k| v[k] * self.0[i][k]).sum();
        }
        out
    }
}

/// Closure of a generating set under multiplication (BFS over words).
pub fn closure<const N: usize>(gens: &[Mat<N>]) -> Vec<Mat<N>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(Mat::<N>::identity());
    queue.push_back(Mat::<N>::identity());
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let n = g.mul(&m);
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.into_iter().collect()
}

/// s_alpha: alpha -> -alpha, beta -> beta + 3alpha.
pub fn g2_s_alpha() -> Mat<2> {
    Mat([[-1, 3], [0, 1]])
}

/// s_beta: alpha -> alpha + beta, beta -> -beta.
pub fn g2_s_beta() -> Mat<2> {
    Mat([[1, 0], [1, -1]])
}

pub fn g2_weyl_group() -> Vec<Mat<2>> {
    closure(&[g2_s_alpha(), g2_s_beta()])
}

pub fn g2_weyl_order() -> usize {
    g2_weyl_group().len()
}

pub fn g2_apply(w: &Mat<2>, r: RootVecG2) -> RootVecG2 {
    let [a, b] = w.apply_i([r.a, r.b]);
    rv(a, b)
}

pub fn g2_weyl_closure(seed: RootVecG2) -> BTreeSet<RootVecG2> {
    g2_weyl_group().iter().map(|w| g2_apply(w, seed)).collect()
}

/// w in the basis e1 = 2alpha+beta, e2 = alpha+beta.
pub fn g2_in_torus_basis(w: &Mat<2>) -> Mat<2> {
    let b = Mat([[2, 1], [1, 1]]);
    let b_inv = Mat([[1, -1], [-1, 2]]);
    b_inv.mul(w).mul(&b)
}

/// The Weyl action on torus characters: w.chi = chi o w^-1 in additive notation
/// w(c1 e1 + c2 e2) = c1 w(e1) + c2 w(e2).
pub fn g2_act_on_char(w: &Mat<2>, chi: &TorusCharG2) -> TorusCharG2 {
    use crate::chars::mul;
    let m = g2_in_torus_basis(w);
    let c1 = mul(&chi.c1.pow(m.0[0][0]), &chi.c2.pow(m.0[0][1]));
    let c2 = mul(&chi.c1.pow(m.0[1][0]), &chi.c2.pow(m.0[1][1]));
    TorusCharG2 { c1, c2 }
}

/// All unordered triples of long roots with zero sum, each sorted.
pub fn long_root_triples() -> Vec<[RootVecG2; 3]> {
    let longs: Vec<RootVecG2> = g2_roots().into_iter().filter(|r| r.is_long()).collect();
    let mut out = Vec::new();
    for i in 0..longs.len() {
        for j in i + 1..longs.len() {
            for k in j + 1..longs.len() {
                if longs[i].add(longs[j]).add(longs[k]).is_zero() {
                    out.push([longs[i], longs[j], longs[k]]);
                }
            }
        }
    }
    out
}

/// The lexicographically least zero-sum long-root triple.
pub fn long_root_triple() -> [RootVecG2; 3] {
    *long_root_triples().iter().min().expect("G2 has zero-sum long-root triples")
}

// ---------------------------------------------------------------- C3

pub type C3Vec = [Q; 3];

fn c3_gen(i: usize) -> Result<Mat<3>> {
    match i {
        1 => Ok(Mat([[1, 0, 0], [0, 0, 1], [0, 1, 0]])),
        2 => Ok(Mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])),
        3 => Ok(Mat([[1, 1, 1], [0, 0, -1], [0, -1, 0]])),
        _ => Err(Error::Precondition(format!("reflection index {i} not in 1..=3"))),
    }
}

/// The three generators acting on characters: s1 swaps s2,s3; s2 swaps s1,s2;
/// s3 sends (s1,s2,s3) to (s1+s2+s3, -s3, -s2).
pub fn c3_generators() -> [Mat<3>; 3] {
    [c3_gen(1).unwrap(), c3_gen(2).unwrap(), c3_gen(3).unwrap()]
}

/// Transposed generators: the action on the dual (cocharacter) side.
pub fn c3_dual_generators() -> [Mat<3>; 3] {
    c3_generators().map(|m| m.transpose())
}

pub fn c3_reflect(i: usize, v: C3Vec) -> Result<C3Vec> {
    Ok(c3_gen(i)?.apply_q(v))
}

/// s3 here is (s1, s2, s3) -> (s1, s1 - s3, s1 - s2).
pub fn c3_reflect_dual(i: usize, v: C3Vec) -> Result<C3Vec> {
    Ok(c3_gen(i)?.transpose().apply_q(v))
}

/// The three simple roots as printed: (0,1,-1), (1,-1,0), (0,2,2).
pub fn c3_simple_roots() -> [C3Vec; 3] {
    [[qi(0), qi(1), qi(-1)], [qi(1), qi(-1), qi(0)], [qi(0), qi(2), qi(2)]]
}

/// Simple roots in character coordinates, one per generator.
pub fn c3_simple_roots_char() -> [[i64; 3]; 3] {
    [[0, 1, -1], [1, -1, 0], [-1, 1, 1]]
}

/// Simple coroots in cocharacter coordinates.
pub fn c3_simple_coroots() -> [[i64; 3]; 3] {
    [[0, 1, -1], [1, -1, 0], [0, 1, 1]]
}

/// s1^2 + s2^2 + s3^2 - (s1+s2+s3)^2 / 4.
pub fn c3_form_q(v: C3Vec) -> Q {
    let s = v[0] + v[1] + v[2];
    v[0] * v[0] + v[1] * v[1] + v[2] * v[2] - s * s * q(1, 4)
}

/// The printed reading with s3 cubed.
pub fn c3_form_q_printed(v: C3Vec) -> Q {
    let s = v[0] + v[1] + v[2];
    v[0] * v[0] + v[1] * v[1] + v[2] * v[2] * v[2] - s * s * q(1, 4)
}

/// s1^2 + s2^2 + s3^2 + (s1+s2+s3)^2, the form preserved by the character action.
pub fn c3_character_form(v: C3Vec) -> Q {
    let s = v[0] + v[1] + v[2];
    v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + s * s
}

pub fn c3_positive_chamber(v: C3Vec) -> bool {
    v[0] > v[1] && v[1] > v[2].abs()
}

pub fn c3_weyl_group() -> Vec<Mat<3>> {
    closure(&c3_generators())
}

pub fn c3_dual_weyl_group() -> Vec<Mat<3>> {
    closure(&c3_dual_generators())
}

pub fn c3_weyl_order() -> usize {
    c3_weyl_group().len()
}

fn orbit3(gens: &[Mat<3>], seeds: &[[i64; 3]]) -> Vec<[i64; 3]> {
    let group = closure(gens);
    let mut set = BTreeSet::new();
    for w in &group {
        for s in seeds {
            set.insert(w.apply_i(*s));
        }
    }
    set.into_iter().collect()
}

/// All 18 roots in character coordinates.
pub fn c3_roots() -> Vec<[i64; 3]> {
    orbit3(&c3_generators(), &c3_simple_roots_char())
}

/// All 18 coroots in cocharacter coordinates.
pub fn c3_coroots() -> Vec<[i64; 3]> {
    orbit3(&c3_dual_generators(), &c3_simple_coroots())
}

/// Coefficients of a root in the simple-root basis (integers for roots).
pub fn c3_simple_coefficients(r: [i64; 3]) -> [i64; 3] {
    // Columns of S are the simple roots; solve S c = r by the explicit inverse.
    // S = [[0,1,-1],[1,-1,1],[-1,0,1]] (columns alpha1, alpha2, alpha3).
    // S^-1 = [[1,1,0],[2,1,1],[1,1,1]].
    let inv = Mat([[1, 1, 0], [2, 1, 1], [1, 1, 1]]);
    inv.apply_i(r)
}

pub fn c3_positive_roots() -> Vec<[i64; 3]> {
    c3_roots()
        .into_iter()
        .filter(|r| c3_simple_coefficients(*r).iter().all(|c| *c >= 0))
        .collect()
}

/// Sum of the positive roots outside the Levi spanned by `levi` (1-based simple indices).
pub fn c3_two_rho_n(levi: &[usize]) -> [i64; 3] {
    let mut acc = [0i64; 3];
    for r in c3_positive_roots() {
        let c = c3_simple_coefficients(r);
        let in_levi = (0..3).all(|i| levi.contains(&(i + 1)) || c[i] == 0);
        if !in_levi {
            for k in 0..3 {
                acc[k] += r[k];
            }
        }
    }
    acc
}

// ---------------------------------------------------------- parabolics

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupName {
    G2,
    PGSp6,
    GL2,
    GL3,
    GSp4,
}

impl GroupName {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g2" => Ok(GroupName::G2),
            "pgsp6" => Ok(GroupName::PGSp6),
            "gl2" => Ok(GroupName::GL2),
            "gl3" => Ok(GroupName::GL3),
            "gsp4" => Ok(GroupName::GSp4),
            _ => Err(Error::NotFound(format!("group `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModulusFactor {
    pub character: String,
    #[serde(serialize_with = "ser_q")]
    pub exponent: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingLayer {
    pub layer: u32,
    pub roots: Vec<Vec<i64>>,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicData {
    pub group: GroupName,
    pub name: String,
    pub levi_descriptor: String,
    pub modulus: Vec<ModulusFactor>,
    /// Sum of the nilradical roots, when the parabolic lives in G2 or PGSp6.
    pub two_rho_n: Option<Vec<i64>>,
    pub nilradical_roots: Vec<Vec<i64>>,
    pub grading: Vec<GradingLayer>,
}

pub(crate) fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(*x))
}

fn mf(c: &str, e: Q) -> ModulusFactor {
    ModulusFactor { character: c.to_string(), exponent: e }
}

fn g2_layers(nil: &[RootVecG2], key: impl Fn(RootVecG2) -> i64, names: &[&str]) -> Vec<GradingLayer> {
    let mut keys: Vec<i64> = nil.iter().map(|r| key(*r)).collect();
    keys.sort();
    keys.dedup();
    keys.iter()
        .enumerate()
        .map(|(i, k)| GradingLayer {
            layer: *k as u32,
            roots: nil.iter().filter(|r| key(**r) == *k).map(|r| vec![r.a, r.b]).collect(),
            description: names.get(i).copied().unwrap_or("").to_string(),
        })
        .collect()
}

fn sum_g2(roots: &[RootVecG2]) -> Vec<i64> {
    let s = roots.iter().fold(rv(0, 0), |acc, r| acc.add(*r));
    vec![s.a, s.b]
}

pub fn parabolic_data(group: GroupName, name: &str) -> Result<ParabolicData> {
    use GroupName::*;
    let pos = g2_positive_roots();
    let c3 = |levi: &[usize], descr: &str, modulus: Vec<ModulusFactor>| {
        let nil: Vec<Vec<i64>> = c3_positive_roots()
            .into_iter()
            .filter(|r| {
                let c = c3_simple_coefficients(*r);
                !(0..3).all(|i| levi.contains(&(i + 1)) || c[i] == 0)
            })
            .map(|r| r.to_vec())
            .collect();
        ParabolicData {
            group: PGSp6,
            name: name.to_string(),
            levi_descriptor: descr.to_string(),
            modulus,
            two_rho_n: Some(c3_two_rho_n(levi).to_vec()),
            nilradical_roots: nil,
            grading: Vec::new(),
        }
    };
    let d = match (group, name) {
        (G2, "P") => {
            let nil: Vec<RootVecG2> = pos.iter().copied().filter(|r| r.b > 0).collect();
            ParabolicData {
                group,
                name: name.into(),
                levi_descriptor: "M = GL2, contains the short root alpha; det = beta0".into(),
                modulus: vec![mf("det", qi(3))],
                two_rho_n: Some(sum_g2(&nil)),
                nilradical_roots: nil.iter().map(|r| vec![r.a, r.b]).collect(),
                grading: g2_layers(&nil, |r| r.b, &["Sym^3(F^2) x det^-1", "det (center)"]),
            }
        }
        (G2, "Q") => {
            let nil: Vec<RootVecG2> = pos.iter().copied().filter(|r| r.a > 0).collect();
            ParabolicData {
                group,
                name: name.into(),
                levi_descriptor: "L = GL2, contains the long root beta; det = 2alpha+beta".into(),
                modulus: vec![mf("det", qi(5))],
                two_rho_n: Some(sum_g2(&nil)),
                nilradical_roots: nil.iter().map(|r| vec![r.a, r.b]).collect(),
                grading: g2_layers(&nil, |r| r.a, &["F^2", "det", "F^2 x det"]),
            }
        }
        (G2, "B") => {
            let nil = pos.clone();
            ParabolicData {
                group,
                name: name.into(),
                levi_descriptor: "T = G_m^2 via ((2alpha+beta)(t), (alpha+beta)(t))".into(),
                modulus: vec![mf("c1", qi(4)), mf("c2", qi(2))],
                two_rho_n: Some(sum_g2(&nil)),
                nilradical_roots: nil.iter().map(|r| vec![r.a, r.b]).collect(),
                grading: Vec::new(),
            }
        }
        (PGSp6, "P1") => c3(&[2, 3], "M1 = GSp4, similitude nu = t1 t2 t3^-1", vec![mf("nu", qi(3))]),
        (PGSp6, "P2") => c3(
            &[1, 3],
            "M2 = (GL2 x GL2)/GL1, det(alpha beta) = t1",
            vec![mf("det(alpha beta)", qi(5))],
        ),
        (PGSp6, "P3") => c3(&[1, 2], "M3 = GL3, det = t1 t2 t3", vec![mf("det", qi(2))]),
        // Not printed as a formula; the value is 2 rho_N for the Levi GL2 x GL1.
        (PGSp6, "P13") => c3(&[2], "M13 = GL2 x GL1 inside M3", vec![mf("t1", qi(3)), mf("t2", qi(3))]),
        (PGSp6, "B") => c3(&[], "T = G_m^3 (torus of M3)", vec![mf("t1", qi(4)), mf("t2", qi(2))]),
        (GL2, "Bbar") => ParabolicData {
            group,
            name: name.into(),
            levi_descriptor: "diagonal torus diag(a11, a22), lower triangular Borel".into(),
            modulus: vec![mf("a11", qi(-1)), mf("a22", qi(1))],
            two_rho_n: None,
            nilradical_roots: Vec::new(),
            grading: Vec::new(),
        },
        (GL3, "Q1") => ParabolicData {
            group,
            name: name.into(),
            levi_descriptor: "GL1 x GL2, block lower triangular, stabilizes rows (*,0,0)".into(),
            modulus: vec![mf("g1", qi(-2)), mf("det g2", qi(1))],
            two_rho_n: None,
            nilradical_roots: Vec::new(),
            grading: Vec::new(),
        },
        (GL3, "Q2") => ParabolicData {
            group,
            name: name.into(),
            levi_descriptor: "GL2 x GL1, block lower triangular, stabilizes rows (*,*,0)".into(),
            modulus: vec![mf("det g2", qi(-1)), mf("g1", qi(2))],
            two_rho_n: None,
            nilradical_roots: Vec::new(),
            grading: Vec::new(),
        },
        (GSp4, "Q1") => ParabolicData {
            group,
            name: name.into(),
            levi_descriptor: "L1 = GL1 x GL2, nu = det g2".into(),
            modulus: vec![mf("g1", qi(-4)), mf("det g2", qi(2))],
            two_rho_n: None,
            nilradical_roots: Vec::new(),
            grading: Vec::new(),
        },
        (GSp4, "Q2") => ParabolicData {
            group,
            name: name.into(),
            levi_descriptor: "L2 = GL2 x GL1, nu = g1".into(),
            modulus: vec![mf("det g2", qi(-3)), mf("g1", qi(3))],
            two_rho_n: None,
            nilradical_roots: Vec::new(),
            grading: Vec::new(),
        },
        _ => return Err(Error::NotFound(format!("parabolic {name} of {group:?}"))),
    };
    Ok(d)
}

pub fn parabolic_names(group: GroupName) -> &'static [&'static str] {
    match group {
        GroupName::G2 => &["P", "Q", "B"],
        GroupName::PGSp6 => &["P1", "P2", "P3", "P13", "B"],
        GroupName::GL2 => &["Bbar"],
        GroupName::GL3 | GroupName::GSp4 => &["Q1", "Q2"],
    }
}

/// Levi characters of the C3 torus in (t1,t2,t3) character coordinates.
pub fn c3_levi_character(name: &str) -> Option<[i64; 3]> {
    match name {
        "nu" => Some([1, 1, -1]),
        "det(alpha beta)" => Some([1, 0, 0]),
        "det" => Some([1, 1, 1]),
        "t1" => Some([1, 0, 0]),
        "t2" => Some([0, 1, 0]),
        "t3" => Some([0, 0, 1]),
        _ => None,
    }
}

/// Levi characters of the G2 torus, as roots.
pub fn g2_levi_character(parabolic: &str, name: &str) -> Option<RootVecG2> {
    match (parabolic, name) {
        ("P", "det") => Some(HIGHEST_ROOT),
        ("Q", "det") => Some(rv(2, 1)),
        ("B", "c1") => Some(rv(2, 1)),
        ("B", "c2") => Some(rv(1, 1)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_matches_printed_map() {
        let v = [qi(1), qi(2), qi(5)];
        assert_eq!(c3_reflect(3, v).unwrap(), [qi(8), qi(-5), qi(-2)]);
        assert_eq!(c3_reflect(1, v).unwrap(), [qi(1), qi(5), qi(2)]);
        assert!(c3_reflect(4, v).is_err());
    }

    #[test]
    fn q_values() {
        assert_eq!(c3_form_q([qi(0); 3]), qi(0));
        assert_eq!(c3_form_q([qi(1), qi(0), qi(0)]), q(3, 4));
    }

    #[test]
    fn chamber_boundary() {
        assert!(c3_positive_chamber([qi(3), qi(2), qi(1)]));
        assert!(!c3_positive_chamber([qi(1), qi(2), qi(3)]));
        assert!(!c3_positive_chamber([qi(2), qi(1), qi(-1)]));
    }
}
