//! Text grammar for characters, representations and L-parameters.
//!
//! Printing (the `Display` impls) and parsing are inverse on canonical
//! forms: `parse(x.to_string()) == x`.
//!
//! ```text
//! CHAR  := FACTOR ('*' FACTOR)*          FACTOR := 1 | IDENT['^'INT] | |.|^RAT
//! GL2   := (sc(..) | sc:IDENT | st(CHAR) | ps(CHAR, CHAR) | one(CHAR)) ['*|det|^'RAT]
//! GL3   := sc(IDENT[~][, sd]) | sc:IDENT | St3(CHAR) | ind(GL2) | ps3(CHAR, CHAR, CHAR) | jb3(CHAR)
//! EXT   := ext(GL3, + | - | ind)
//! PD    := pd(1) | pd(CHAR) | pd(IDENT, yes | no | unknown)
//! GSP4  := sk(IDENT) | gsp4(IDENT[, sk][, generic])
//! ```

use crate::chars::{char_mul, ExponentChar, Registry, TorusCharG2, Q};
use crate::error::{Error, Result};
use crate::langlands::{LParamG2, Levi, WfImage};
use crate::reps::{
    Ext, G2Rep, GL2Rep, GL3Rep, GSp4Rep, Gl2Sc, Heart, PContext, PDxRep, PGL3ExtRep, PGSp6Rep,
    PiScLabel, Summand,
};

/// Parsing context: symbols resolve against the registry, and some
/// constructors depend on the residue characteristic.
#[derive(Clone, Copy)]
pub struct Ctx<'a> {
    pub reg: &'a Registry,
    pub p: PContext,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Char(ExponentChar),
    GL2(GL2Rep),
    GL3(GL3Rep),
    Ext(PGL3ExtRep),
    PD(PDxRep),
    GSp4(GSp4Rep),
    G2(G2Rep),
    PGSp6(PGSp6Rep),
    Param(LParamG2),
}

impl std::fmt::Display for Literal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Literal::Char(x) => write!(f, "{x}"),
            Literal::GL2(x) => write!(f, "{x}"),
            Literal::GL3(x) => write!(f, "{x}"),
            Literal::Ext(x) => write!(f, "{x}"),
            Literal::PD(x) => write!(f, "{x}"),
            Literal::GSp4(x) => write!(f, "{x}"),
            Literal::G2(x) => write!(f, "{x}"),
            Literal::PGSp6(x) => write!(f, "{x}"),
            Literal::Param(x) => write!(f, "{x}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ctx: Ctx<'a>,
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

impl<'a> Parser<'a> {
    fn new(ctx: Ctx<'a>, src: &'a str) -> Self {
        Parser { src, pos: 0, ctx }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    /// Semantic errors from constructors keep their kind; a bare
    /// InvalidRep gets the position attached.
    fn check<T>(&self, start: usize, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::InvalidRep(m) => Error::InvalidRep(format!("{m} (at offset {start})")),
            e => e,
        })
    }

    fn ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self, s: &str) -> bool {
        self.ws();
        self.rest().starts_with(s)
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.peek(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            self.err(format!("expected `{s}`"))
        }
    }

    /// A maximal run of identifier characters (may start with a digit, so
    /// that `1_G2` and `I13` come out as one word).
    fn word(&mut self) -> &'a str {
        self.ws();
        let b = self.rest().as_bytes();
        let n = b.iter().take_while(|c| is_ident_char(**c)).count();
        let w = &self.rest()[..n];
        self.pos += n;
        w
    }

    fn ident(&mut self) -> Result<&'a str> {
        let start = self.pos;
        let w = self.word();
        if !crate::chars::valid_ident(w) {
            self.pos = start;
            return self.err("expected an identifier");
        }
        Ok(w)
    }

    /// An opaque label, allowing one level of wrapping like `theta(rho)`.
    fn label(&mut self) -> Result<String> {
        let head = self.ident()?.to_string();
        if self.rest().starts_with('(') {
            self.pos += 1;
            let inner = self.label()?;
            self.expect(")")?;
            return Ok(format!("{head}({inner})"));
        }
        Ok(head)
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        let neg = self.rest().starts_with('-');
        if neg {
            self.pos += 1;
        }
        let n = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            self.pos = start;
            return self.err("expected an integer");
        }
        let v: i64 = self.rest()[..n].parse().map_err(|_| Error::Syntax { pos: start, msg: "integer overflow".into() })?;
        self.pos += n;
        Ok(if neg { -v } else { v })
    }

    fn rat(&mut self) -> Result<Q> {
        let n = self.int()?;
        if self.rest().starts_with('/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.int()?;
            if d <= 0 {
                self.pos = at;
                return self.err("denominator must be positive");
            }
            return Ok(Q::new(n, d));
        }
        Ok(Q::from_integer(n))
    }

    fn end(&mut self) -> Result<()> {
        self.ws();
        if self.pos != self.src.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }

    // ---------------------------------------------------------- characters

    fn factor(&mut self) -> Result<ExponentChar> {
        self.ws();
        let start = self.pos;
        if self.eat("|.|^") {
            return Ok(ExponentChar::abs(self.rat()?));
        }
        let r = self.rest();
        if r.starts_with('1') && !r[1..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_' || c == '/') {
            self.pos += 1;
            return Ok(ExponentChar::trivial());
        }
        let name = self.ident()?;
        let power = if self.rest().starts_with('^') {
            self.pos += 1;
            self.int()?
        } else {
            1
        };
        self.check(start, ExponentChar::symbol(self.ctx.reg, name, power))
    }

    fn chr(&mut self) -> Result<ExponentChar> {
        let mut c = self.factor()?;
        loop {
            let save = self.pos;
            if !self.eat("*") {
                break;
            }
            if self.peek("|det|") {
                self.pos = save;
                break;
            }
            let start = self.pos;
            let f = self.factor()?;
            c = self.check(start, char_mul(&c, &f))?;
        }
        Ok(c)
    }

    fn char_pair(&mut self) -> Result<TorusCharG2> {
        let start = self.pos;
        let a = self.chr()?;
        self.expect(",")?;
        let b = self.chr()?;
        self.check(start, TorusCharG2::new(a, b))
    }

    // ---------------------------------------------------------- GL2

    fn gl2_sc(&mut self) -> Result<GL2Rep> {
        let start = self.pos;
        if self.eat("sc:") {
            let l = self.ident()?;
            return self.check(start, GL2Rep::sc_plain(l));
        }
        self.expect("sc(")?;
        let label = self.ident()?.to_string();
        let dual = self.eat("~");
        let mut sc = Gl2Sc { label, dual, self_dual: false, central: ExponentChar::trivial(), dihedral_s3: None };
        while self.eat(",") {
            if self.eat("sd") {
                sc.self_dual = true;
            } else if self.eat("w=") {
                sc.central = self.chr()?;
            } else if self.eat("s3=") {
                sc.dihedral_s3 = Some(self.yes_no()?);
            } else {
                return self.err("expected `sd`, `w=` or `s3=`");
            }
        }
        self.expect(")")?;
        self.check(start, GL2Rep::supercuspidal(sc))
    }

    fn yes_no(&mut self) -> Result<bool> {
        match self.word() {
            "yes" => Ok(true),
            "no" => Ok(false),
            _ => self.err("expected `yes` or `no`"),
        }
    }

    fn gl2(&mut self) -> Result<GL2Rep> {
        self.ws();
        let start = self.pos;
        let base = if self.peek("sc") {
            self.gl2_sc()?
        } else {
            match self.word() {
                "st" => {
                    self.expect("(")?;
                    let c = self.chr()?;
                    self.expect(")")?;
                    GL2Rep::steinberg(c)
                }
                "one" => {
                    self.expect("(")?;
                    let c = self.chr()?;
                    self.expect(")")?;
                    GL2Rep::one_dim(c)
                }
                "ps" => {
                    self.expect("(")?;
                    let a = self.chr()?;
                    self.expect(",")?;
                    let b = self.chr()?;
                    self.expect(")")?;
                    self.check(start, GL2Rep::principal_series(a, b))?
                }
                _ => {
                    self.pos = start;
                    return self.err("expected a GL2 representation (sc, st, ps, one)");
                }
            }
        };
        if self.eat("*|det|^") {
            let t = self.rat()?;
            return Ok(base.twisted(t));
        }
        Ok(base)
    }

    // ---------------------------------------------------------- GL3, PGL3 x| Z/2

    fn gl3(&mut self) -> Result<GL3Rep> {
        self.ws();
        let start = self.pos;
        if self.eat("sc:") {
            let l = self.ident()?;
            return self.check(start, GL3Rep::supercuspidal(l, false, true));
        }
        let w = self.word();
        self.expect("(")?;
        let r = match w {
            "sc" => {
                let l = self.ident()?.to_string();
                let dual = self.eat("~");
                let sd = if self.eat(",") {
                    self.expect("sd")?;
                    true
                } else {
                    false
                };
                GL3Rep::supercuspidal(&l, dual, sd)
            }
            "St3" => {
                let c = self.chr()?;
                GL3Rep::steinberg(c)
            }
            "ind" => {
                let s = self.gl2()?;
                GL3Rep::induced(s)
            }
            "ps3" => {
                let a = self.chr()?;
                self.expect(",")?;
                let b = self.chr()?;
                self.expect(",")?;
                let c = self.chr()?;
                GL3Rep::principal_series([a, b, c])
            }
            "jb3" => {
                let c = self.chr()?;
                GL3Rep::special_jb(c)
            }
            _ => {
                self.pos = start;
                return self.err("expected a PGL3 representation (sc, St3, ind, ps3, jb3)");
            }
        };
        self.expect(")")?;
        self.check(start, r)
    }

    fn ext(&mut self) -> Result<PGL3ExtRep> {
        let start = self.pos;
        self.expect("ext(")?;
        let base = self.gl3()?;
        self.expect(",")?;
        let e = if self.eat("+") {
            Ext::Plus
        } else if self.eat("-") {
            Ext::Minus
        } else if self.eat("ind") {
            Ext::InducedPlus
        } else {
            return self.err("expected `+`, `-` or `ind`");
        };
        self.expect(")")?;
        self.check(start, PGL3ExtRep::new(base, e))
    }

    // ---------------------------------------------------------- PD^x, GSp4

    fn pd(&mut self) -> Result<PDxRep> {
        let start = self.pos;
        self.expect("pd(")?;
        let inner = self.pos;
        let w = self.word();
        let r = if self.peek(",") && crate::chars::valid_ident(w) {
            self.expect(",")?;
            let h = match self.word() {
                "yes" => Heart::Yes,
                "no" => Heart::No,
                "unknown" => Heart::Unknown,
                _ => return self.err("expected `yes`, `no` or `unknown`"),
            };
            PDxRep::other(w, h, self.ctx.p)
        } else {
            self.pos = inner;
            let c = self.chr()?;
            if c.is_trivial() {
                Ok(PDxRep::Trivial)
            } else {
                PDxRep::unramified_cubic(self.ctx.reg, c)
            }
        };
        self.expect(")")?;
        self.check(start, r)
    }

    fn gsp4(&mut self) -> Result<GSp4Rep> {
        self.ws();
        let start = self.pos;
        match self.word() {
            "sk" => {
                self.expect("(")?;
                let l = self.ident()?;
                self.expect(")")?;
                self.check(start, GSp4Rep::saito_kurokawa(l))
            }
            "gsp4" => {
                self.expect("(")?;
                let l = self.ident()?;
                let (mut sk, mut gen) = (false, false);
                while self.eat(",") {
                    match self.word() {
                        "sk" => sk = true,
                        "generic" => gen = true,
                        _ => return self.err("expected `sk` or `generic`"),
                    }
                }
                self.expect(")")?;
                self.check(start, GSp4Rep::supercuspidal(l, sk, gen))
            }
            _ => {
                self.pos = start;
                self.err("expected a GSp4 representation (sk, gsp4)")
            }
        }
    }

    // ---------------------------------------------------------- shared pieces

    /// `(s; X)`
    fn s_and<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<(Q, T)> {
        self.expect("(")?;
        let s = self.rat()?;
        self.expect(";")?;
        let x = f(self)?;
        self.expect(")")?;
        Ok((s, x))
    }

    fn paren<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        self.expect("(")?;
        let x = f(self)?;
        self.expect(")")?;
        Ok(x)
    }

    /// `(X)` followed by an optional `_gen`/`_deg`, or `(X, +)` / `(X, -)`.
    fn induced<T>(&mut self, f: impl FnOnce(&mut Self) -> Result<T>) -> Result<(T, Option<Summand>)> {
        self.expect("(")?;
        let x = f(self)?;
        let mut which = None;
        if self.eat(",") {
            which = Some(if self.eat("+") {
                Summand::Gen
            } else if self.eat("-") {
                Summand::Deg
            } else {
                return self.err("expected `+` or `-`");
            });
        }
        self.expect(")")?;
        if which.is_none() {
            if self.rest().starts_with("_gen") {
                self.pos += 4;
                which = Some(Summand::Gen);
            } else if self.rest().starts_with("_deg") {
                self.pos += 4;
                which = Some(Summand::Deg);
            }
        }
        Ok((x, which))
    }

    fn gen_word(&mut self) -> Result<bool> {
        match self.word() {
            "generic" => Ok(true),
            "nongeneric" => Ok(false),
            _ => self.err("expected `generic` or `nongeneric`"),
        }
    }

    /// Bracket contents for pi_gen / sigma_gen: a supercuspidal or a character.
    fn char_or_sc(&mut self) -> Result<std::result::Result<ExponentChar, GL2Rep>> {
        if self.peek("sc") {
            Ok(Err(self.gl2()?))
        } else {
            Ok(Ok(self.chr()?))
        }
    }

    // ---------------------------------------------------------- G2

    fn g2(&mut self) -> Result<G2Rep> {
        self.ws();
        let start = self.pos;
        let w = self.word();
        let r = match w {
            "St_G2" => Ok(G2Rep::St),
            "1_G2" => Ok(G2Rep::Triv),
            "JP" | "JQ" => {
                let (s, t) = self.s_and(Self::gl2)?;
                if w == "JP" {
                    G2Rep::jp(s, t)
                } else {
                    G2Rep::jq(s, t)
                }
            }
            "JB" => {
                let c = self.paren(Self::char_pair)?;
                G2Rep::jb(c)
            }
            "delta_P" => {
                let t = self.paren(Self::gl2)?;
                G2Rep::delta_p(t)
            }
            "delta_Q" => {
                let t = self.paren(Self::gl2)?;
                G2Rep::delta_q(t)
            }
            "pi_gen" => {
                self.expect("[")?;
                let x = self.char_or_sc()?;
                self.expect("]")?;
                match x {
                    Ok(c) => G2Rep::pi_gen_char(c),
                    Err(t) => G2Rep::pi_gen_dihedral(t),
                }
            }
            "pi_deg" => {
                self.expect("[")?;
                self.expect("1")?;
                self.expect("]")?;
                Ok(G2Rep::PiDeg1)
            }
            "pi_sc" => {
                self.expect("[")?;
                let l = if self.eat("-1") {
                    PiScLabel::MinusOne
                } else {
                    match self.word() {
                        "1" => PiScLabel::One,
                        "omega" => PiScLabel::Omega,
                        "omega2" => PiScLabel::Omega2,
                        _ => return self.err("expected 1, -1, omega or omega2"),
                    }
                };
                self.expect("]")?;
                Ok(G2Rep::PiSc(l))
            }
            "IP" | "IQ" => {
                let (t, which) = self.induced(Self::gl2)?;
                match (w, which) {
                    ("IP", None) => G2Rep::ip(t),
                    ("IP", Some(x)) => G2Rep::ip_summand(t, x),
                    (_, None) => G2Rep::iq(t),
                    (_, Some(x)) => G2Rep::iq_summand(t, x),
                }
            }
            "IB" => {
                let (c, which) = self.induced(Self::char_pair)?;
                match which {
                    None => G2Rep::ib(c),
                    Some(x) => G2Rep::ib_summand(c, x),
                }
            }
            "theta_D" => {
                let p = self.paren(Self::pd)?;
                G2Rep::sc_from_pd(p)
            }
            "theta_B" => {
                let e = self.paren(Self::ext)?;
                G2Rep::sc_from_b(e)
            }
            "sc_G2" => {
                self.expect("(")?;
                let l = self.label()?;
                self.expect(";")?;
                let g = self.gen_word()?;
                self.expect(")")?;
                G2Rep::sc_abstract(&l, g)
            }
            "pi_rho" => {
                let l = self.paren(Self::ident)?;
                G2Rep::pi_rho(l)
            }
            _ => {
                self.pos = start;
                return self.err("expected a G2 representation");
            }
        };
        self.check(start, r)
    }

    // ---------------------------------------------------------- PGSp6

    fn p6(&mut self) -> Result<PGSp6Rep> {
        self.ws();
        let start = self.pos;
        let w = self.word();
        let r = match w {
            "St_P6" => Ok(PGSp6Rep::St),
            "J2" => {
                let (s, t) = self.s_and(Self::gl2)?;
                PGSp6Rep::j2(s, t)
            }
            "J13" => {
                let t = self.paren(Self::gl2)?;
                PGSp6Rep::j13(t)
            }
            "J1" => {
                let (s, t) = self.s_and(Self::gsp4)?;
                PGSp6Rep::j1(s, t)
            }
            "delta_2" => {
                let t = self.paren(Self::gl2)?;
                PGSp6Rep::delta_2(t)
            }
            "delta_13" => {
                let t = self.paren(Self::gl2)?;
                PGSp6Rep::delta_13(t)
            }
            "delta_1" => {
                let t = self.paren(Self::gsp4)?;
                PGSp6Rep::delta_1(t)
            }
            "sigma_gen" => {
                self.expect("[")?;
                let x = self.char_or_sc()?;
                self.expect("]")?;
                match x {
                    Ok(c) => PGSp6Rep::sigma_gen_quadratic(c),
                    Err(t) => PGSp6Rep::sigma_gen_dihedral(t),
                }
            }
            "I2" | "I13" => {
                let (t, which) = self.induced(Self::gl2)?;
                match (w, which) {
                    ("I2", None) => PGSp6Rep::i2_irred(t),
                    ("I2", Some(x)) => PGSp6Rep::i2_summand(t, x),
                    (_, None) => PGSp6Rep::i13_irred(t),
                    (_, Some(x)) => PGSp6Rep::i13_summand(t, x),
                }
            }
            "I3" => {
                let (t, which) = self.induced(Self::gl3)?;
                match which {
                    None => PGSp6Rep::i3_irred(t),
                    Some(x) => PGSp6Rep::i3_summand(t, x),
                }
            }
            "I1" => {
                let t = self.paren(Self::gsp4)?;
                PGSp6Rep::i1_irred(t)
            }
            "sc_P6" => {
                self.expect("(")?;
                let l = self.label()?;
                self.expect(";")?;
                let g = self.gen_word()?;
                self.expect(")")?;
                PGSp6Rep::sc_abstract(&l, g)
            }
            _ => {
                self.pos = start;
                return self.err("expected a PGSp6 representation");
            }
        };
        self.check(start, r)
    }

    // ---------------------------------------------------------- L-parameters

    fn lparam(&mut self) -> Result<LParamG2> {
        self.ws();
        let start = self.pos;
        let w = self.word();
        let r = match w {
            "principal" => Ok(LParamG2::Principal),
            "subregular" => {
                let x = self.paren(Self::char_or_sc)?;
                match x {
                    Ok(c) => LParamG2::subregular_char(c),
                    Err(t) => LParamG2::subregular(WfImage::S3(t)),
                }
            }
            "short" => {
                let t = self.paren(Self::gl2)?;
                LParamG2::short_root(t)
            }
            "long" => {
                let t = self.paren(Self::gl2)?;
                LParamG2::long_root(t)
            }
            "cuspidal" => {
                let l = self.paren(Self::label)?;
                LParamG2::cuspidal(&l)
            }
            "levi_P" | "levi_Q" => {
                let t = self.paren(Self::gl2)?;
                LParamG2::levi_gl2(if w == "levi_P" { Levi::M } else { Levi::L }, t)
            }
            "levi_B" => {
                let c = self.paren(Self::char_pair)?;
                Ok(LParamG2::levi_torus(c))
            }
            _ => {
                self.pos = start;
                return self.err("expected an L-parameter");
            }
        };
        self.check(start, r)
    }
}

fn run<T>(ctx: Ctx<'_>, text: &str, f: impl FnOnce(&mut Parser<'_>) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(ctx, text);
    let x = f(&mut p)?;
    p.end()?;
    Ok(x)
}

pub fn parse_rational(text: &str) -> Result<Q> {
    let reg = Registry::new(Vec::new())?;
    run(Ctx { reg: &reg, p: PContext::Other }, text, |p| p.rat())
}

pub fn parse_char(ctx: Ctx<'_>, text: &str) -> Result<ExponentChar> {
    run(ctx, text, |p| p.chr())
}

/// A G2 torus character written `c1, c2` or `(c1, c2)` in the e1, e2 basis.
pub fn parse_torus(ctx: Ctx<'_>, text: &str) -> Result<TorusCharG2> {
    run(ctx, text, |p| if p.eat("(") {
        let c = p.char_pair()?;
        p.expect(")")?;
        Ok(c)
    } else {
        p.char_pair()
    })
}

pub fn parse_gl2(ctx: Ctx<'_>, text: &str) -> Result<GL2Rep> {
    run(ctx, text, |p| p.gl2())
}

pub fn parse_gl3(ctx: Ctx<'_>, text: &str) -> Result<GL3Rep> {
    run(ctx, text, |p| p.gl3())
}

pub fn parse_ext(ctx: Ctx<'_>, text: &str) -> Result<PGL3ExtRep> {
    run(ctx, text, |p| p.ext())
}

pub fn parse_pd(ctx: Ctx<'_>, text: &str) -> Result<PDxRep> {
    run(ctx, text, |p| p.pd())
}

pub fn parse_gsp4(ctx: Ctx<'_>, text: &str) -> Result<GSp4Rep> {
    run(ctx, text, |p| p.gsp4())
}

pub fn parse_g2(ctx: Ctx<'_>, text: &str) -> Result<G2Rep> {
    run(ctx, text, |p| p.g2())
}

pub fn parse_p6(ctx: Ctx<'_>, text: &str) -> Result<PGSp6Rep> {
    run(ctx, text, |p| p.p6())
}

pub fn parse_lparam(ctx: Ctx<'_>, text: &str) -> Result<LParamG2> {
    run(ctx, text, |p| p.lparam())
}

/// Parse a literal of any kind. Words shared between kinds (`sc(..)` is
/// both a GL2 and a GL3 literal) resolve in the order G2, PGSp6, parameter,
/// GL2, GL3, PD^x, PGL3 x| Z/2, GSp4, character. On failure the error from
/// the parse that got furthest is returned.
pub fn parse_rep_literal(ctx: Ctx<'_>, text: &str) -> Result<Literal> {
    type P = fn(Ctx<'_>, &str) -> Result<Literal>;
    let parsers: [P; 9] = [
        |c, t| parse_g2(c, t).map(Literal::G2),
        |c, t| parse_p6(c, t).map(Literal::PGSp6),
        |c, t| parse_lparam(c, t).map(Literal::Param),
        |c, t| parse_gl2(c, t).map(Literal::GL2),
        |c, t| parse_gl3(c, t).map(Literal::GL3),
        |c, t| parse_pd(c, t).map(Literal::PD),
        |c, t| parse_ext(c, t).map(Literal::Ext),
        |c, t| parse_gsp4(c, t).map(Literal::GSp4),
        |c, t| parse_char(c, t).map(Literal::Char),
    ];
    let mut best: Option<Error> = None;
    for f in parsers {
        match f(ctx, text) {
            Ok(x) => return Ok(x),
            // a non-syntax error means the shape matched: report it directly
            Err(e @ Error::Syntax { .. }) => {
                let further = match (&best, &e) {
                    (Some(Error::Syntax { pos: a, .. }), Error::Syntax { pos: b, .. }) => b > a,
                    _ => true,
                };
                if further {
                    best = Some(e);
                }
            }
            Err(e) => return Err(e),
        }
    }
    Err(best.expect("at least one parser ran"))
}
