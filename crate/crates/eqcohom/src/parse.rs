//! Parsers for grading literals, point-class expressions and B_GU(1)
//! expressions. Every Display form produced by the crate parses back to the
//! value it prints.
//!
//! Gradings: `p=5; 2 + 3*M1 - M2`, `3L-1`, `M_2`; for RO(Π_G B) also tuples
//! `(x_0, …, x_{p−1})`, `Omega(i,j)`, `Omega` (p = 2), `omega*`,
//! `chi^i(…)`, and any RO(G) term as a constant.
//!
//! Point classes: sums of integer multiples of products of `1`, `kappa`,
//! `g`, `e`, `e(k)`, `xi`, `xi(k)`, `iota^k`, `iota^(x)`, `tau(…)`,
//! `rho(…)`, `mu(x; a)`, `lam(x; b)`, `lam(x)`, `invkappa(m)`, `dxi(m,n)`,
//! `ekappa(y)`, `edxi(y; n)`, with `^n` powers.
//!
//! B_GU(1): sums of products of `c`, `chic(i)`, `xi(i,1)`, `xibar(α)`,
//! `lambar(β; b_0,…)`, `kapbar(k; θ)`, integers and point-class factors
//! (bare or parenthesized).

use crate::bgu1::{BClass, Engine, GeneratorWord};
use crate::error::{Error, Result};
use crate::gradings::{GradingROG, GradingROPi, PrimeConfig};
use crate::point_rings::{gens, PointClass, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = vec![];
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let v = s[st..i].parse().map_err(|_| Error::Parse { pos: st, msg: "integer out of range".into() })?;
            out.push((st, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if "+-*^(),;=".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return err(i, format!("unexpected character `{}`", s[i..].chars().next().unwrap_or(c)));
        }
    }
    Ok(out)
}

struct P {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
    pc: PrimeConfig,
}

impl P {
    fn new(s: &str, pc: PrimeConfig) -> Result<Self> {
        Ok(Self { toks: lex(s)?, i: 0, end: s.len(), pc })
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.i + k).map(|t| &t.1)
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.pos(), format!("expected `{c}`"))
        }
    }

    fn done(&self) -> Result<()> {
        if self.i < self.toks.len() {
            return err(self.pos(), "unexpected trailing input");
        }
        Ok(())
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.i += 1;
                Ok(if neg { -v } else { v })
            }
            _ => err(self.pos(), "expected an integer"),
        }
    }

    fn ident(&mut self) -> Option<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.i += 1;
                Some(s)
            }
            _ => None,
        }
    }

    /// True when the token after `*` cannot start an operand, so `*` is a
    /// postfix mark as in `omega*`.
    fn star_is_postfix(&self) -> bool {
        matches!(self.peek_at(1), None | Some(Tok::Sym(')' | ',' | '+' | '-' | ';')))
    }

    /// An optional `p=N;` prefix.
    fn prime_prefix(&mut self) -> Result<Option<i64>> {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == "p") && self.peek_at(1) == Some(&Tok::Sym('=')) {
            self.i += 2;
            let p = self.int()?;
            self.expect(';')?;
            return Ok(Some(p));
        }
        Ok(None)
    }
}

/// `Mk`, `M_k` or `L`, as an RO(G) element.
fn rog_symbol(pc: PrimeConfig, name: &str, pos: usize) -> Result<Option<GradingROG>> {
    if name == "L" {
        if !pc.is_two() {
            return err(pos, "L (the sign representation) needs p = 2");
        }
        return Ok(Some(GradingROG::lambda(pc)));
    }
    if let Some(k) = name.strip_prefix('M').map(|r| r.trim_start_matches('_')) {
        if let Ok(k) = k.parse::<i64>() {
            if pc.canon(k).is_none() && k % pc.p() != 0 {
                return err(pos, format!("no irreducible M{k} for p = {}", pc.p()));
            }
            return Ok(Some(GradingROG::mk(pc, k)));
        }
    }
    Ok(None)
}

/// A value in a Z-module built from integer-scaled atoms.
trait Lin: Clone {
    fn add(&self, o: &Self) -> Self;
    fn scale(&self, k: i64) -> Self;
}

impl Lin for GradingROG {
    fn add(&self, o: &Self) -> Self {
        *self + *o
    }
    fn scale(&self, k: i64) -> Self {
        k * *self
    }
}

impl Lin for GradingROPi {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn scale(&self, k: i64) -> Self {
        k * self.clone()
    }
}

enum Factor<T> {
    Scalar(i64),
    Val(T),
}

/// Sum of signed terms; a term is a product of integers and at most one
/// non-scalar factor, with `*` optional (`3M1`, `2*L`).
fn lin<T: Lin>(p: &mut P, unit: &T, atom: &mut dyn FnMut(&mut P) -> Result<Option<T>>) -> Result<T> {
    let mut acc: Option<T> = None;
    let mut first = true;
    loop {
        let sign = if p.eat('-') {
            -1
        } else if p.eat('+') || first {
            1
        } else {
            break;
        };
        first = false;
        let mut scalar = sign;
        let mut val: Option<T> = None;
        let mut any = false;
        loop {
            let at = p.pos();
            let f = match p.peek() {
                Some(Tok::Int(v)) => {
                    let v = *v;
                    p.i += 1;
                    Factor::Scalar(v)
                }
                Some(Tok::Sym('(')) => {
                    let save = p.i;
                    match atom(p)? {
                        Some(v) => Factor::Val(v),
                        None => {
                            p.i = save + 1;
                            let v = lin(p, unit, atom)?;
                            p.expect(')')?;
                            Factor::Val(v)
                        }
                    }
                }
                _ => match atom(p)? {
                    Some(v) => Factor::Val(v),
                    None if any => break,
                    None => return err(at, "expected a term"),
                },
            };
            any = true;
            match f {
                Factor::Scalar(k) => scalar *= k,
                Factor::Val(v) => {
                    if val.is_some() {
                        return err(at, "product of two non-constant terms");
                    }
                    val = Some(v);
                }
            }
            if p.is_sym('*') && !p.star_is_postfix() {
                p.i += 1;
                continue;
            }
            if matches!(p.peek(), Some(Tok::Int(_) | Tok::Ident(_)) | Some(Tok::Sym('('))) {
                continue;
            }
            break;
        }
        let term = val.unwrap_or_else(|| unit.clone()).scale(scalar);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.ok_or_else(|| Error::Parse { pos: p.pos(), msg: "empty expression".into() })
}

fn rog_atom(p: &mut P) -> Result<Option<GradingROG>> {
    let pos = p.pos();
    let pc = p.pc;
    if let Some(Tok::Ident(name)) = p.peek() {
        let name = name.clone();
        if let Some(v) = rog_symbol(pc, &name, pos)? {
            p.i += 1;
            return Ok(Some(v));
        }
        return err(pos, format!("unknown symbol `{name}` in an RO(G) grading"));
    }
    Ok(None)
}

fn rog_expr(p: &mut P) -> Result<GradingROG> {
    let unit = GradingROG::trivial(p.pc, 1);
    lin(p, &unit, &mut rog_atom)
}

/// An RO(G) grading; a leading `p=N;` must agree with `pc`.
pub fn parse_rog(pc: PrimeConfig, s: &str) -> Result<GradingROG> {
    let mut p = P::new(s, pc)?;
    if let Some(q) = p.prime_prefix()? {
        if q != pc.p() {
            return err(0, format!("literal is for p = {q}, expected p = {}", pc.p()));
        }
    }
    let g = rog_expr(&mut p)?;
    p.done()?;
    Ok(g)
}

/// An RO(G) grading whose prime comes from a `p=N;` prefix.
pub fn parse_rog_any(s: &str) -> Result<GradingROG> {
    let mut p = P::new(s, PrimeConfig::new(2)?)?;
    let Some(q) = p.prime_prefix()? else {
        return err(0, "expected a `p=N;` prefix");
    };
    p.pc = PrimeConfig::new(q)?;
    let g = rog_expr(&mut p)?;
    p.done()?;
    Ok(g)
}

fn ropi_atom(p: &mut P) -> Result<Option<GradingROPi>> {
    let pos = p.pos();
    let pc = p.pc;
    if p.is_sym('(') {
        // A tuple of p components, or a parenthesized group (left to the caller).
        let save = p.i;
        p.i += 1;
        let first = ropi_expr(p)?;
        if !p.is_sym(',') {
            p.i = save;
            return Ok(None);
        }
        let mut comps = vec![first];
        while p.eat(',') {
            comps.push(ropi_expr(p)?);
        }
        p.expect(')')?;
        if comps.len() != pc.p() as usize {
            return err(pos, format!("expected {} components, got {}", pc.p(), comps.len()));
        }
        let mut out = vec![];
        for c in comps {
            if !c.is_constant() {
                return err(pos, "tuple components must be RO(G) gradings");
            }
            out.push(c.comp(0));
        }
        return GradingROPi::new(out).map(Some);
    }
    let Some(Tok::Ident(name)) = p.peek().cloned() else {
        return Ok(None);
    };
    if let Some(v) = rog_symbol(pc, &name, pos)? {
        p.i += 1;
        return Ok(Some(GradingROPi::constant(v)));
    }
    p.i += 1;
    match name.as_str() {
        "Omega" if p.is_sym('(') => {
            p.i += 1;
            let i = p.int()?;
            p.expect(',')?;
            let j = p.int()?;
            p.expect(')')?;
            if md_p(j, pc.p()) == 0 {
                return err(pos, "Omega(i,j) needs j prime to p");
            }
            Ok(Some(GradingROPi::omega(pc, i, j)))
        }
        "Omega" if pc.is_two() => Ok(Some(GradingROPi::omega_two(pc))),
        "omega" => {
            if !(p.is_sym('*') && p.star_is_postfix()) {
                return err(p.pos(), "expected `omega*`");
            }
            p.i += 1;
            Ok(Some(GradingROPi::omega_star(pc)))
        }
        "chi" => {
            let i = if p.eat('^') { p.int()? } else { 1 };
            p.expect('(')?;
            let a = ropi_expr(p)?;
            p.expect(')')?;
            Ok(Some(a.chi(i)))
        }
        _ => err(pos, format!("unknown symbol `{name}` in an RO(Π) grading")),
    }
}

fn md_p(a: i64, p: i64) -> i64 {
    a.rem_euclid(p)
}

fn ropi_expr(p: &mut P) -> Result<GradingROPi> {
    let unit = GradingROPi::trivial(p.pc, 1);
    lin(p, &unit, &mut ropi_atom)
}

/// An RO(Π_G B) grading.
pub fn parse_ropi(pc: PrimeConfig, s: &str) -> Result<GradingROPi> {
    let mut p = P::new(s, pc)?;
    if let Some(q) = p.prime_prefix()? {
        if q != pc.p() {
            return err(0, format!("literal is for p = {q}, expected p = {}", pc.p()));
        }
    }
    let g = ropi_expr(&mut p)?;
    p.done()?;
    Ok(g)
}

// ---- point classes ----

fn point_sum(p: &mut P, ring: Ring) -> Result<PointClass> {
    let mut acc: Option<PointClass> = None;
    let mut first = true;
    loop {
        let at = p.pos();
        let sign = if p.eat('-') {
            -1
        } else if p.eat('+') || first {
            1
        } else {
            break;
        };
        first = false;
        let t = point_product(p, ring)?.scale(sign);
        acc = Some(match acc {
            None => t,
            Some(a) => a.checked_add(&t).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })?,
        });
    }
    acc.ok_or_else(|| Error::Parse { pos: p.pos(), msg: "empty expression".into() })
}

fn point_product(p: &mut P, ring: Ring) -> Result<PointClass> {
    let mut scalar = 1i64;
    let mut val: Option<PointClass> = None;
    loop {
        let at = p.pos();
        match p.peek() {
            Some(Tok::Int(v)) if !(*v == 1 && val.is_none() && next_is_end(p)) => {
                scalar *= *v;
                p.i += 1;
            }
            _ => {
                let f = point_factor(p, ring)?;
                val = Some(match val {
                    None => f,
                    Some(v) => v.mul(&f).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })?,
                });
            }
        }
        if !p.eat('*') {
            break;
        }
    }
    let v = match val {
        Some(v) => v,
        None => gens::one(p.pc, ring).map_err(|e| Error::Parse { pos: p.pos(), msg: e.to_string() })?,
    };
    Ok(v.scale(scalar))
}

/// True when the token after the current one ends a product.
fn next_is_end(p: &P) -> bool {
    matches!(p.peek_at(1), None | Some(Tok::Sym(')' | '+' | '-' | ',' | ';')))
}

fn at<T>(pos: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        e => Error::Parse { pos, msg: e.to_string() },
    })
}

fn point_factor(p: &mut P, ring: Ring) -> Result<PointClass> {
    let pos = p.pos();
    let pc = p.pc;
    let base = if p.eat('(') {
        let v = point_sum(p, ring)?;
        p.expect(')')?;
        v
    } else if let Some(Tok::Int(1)) = p.peek() {
        p.i += 1;
        at(pos, gens::one(pc, ring))?
    } else {
        let Some(name) = p.ident() else {
            return err(pos, "expected a point class");
        };
        match name.as_str() {
            "kappa" => gens::kappa(pc),
            "g" => gens::g(pc),
            "e" => {
                if p.eat('(') {
                    let k = p.int()?;
                    p.expect(')')?;
                    at(pos, gens::euler(pc, ring, k))?
                } else if p.eat('^') {
                    let m = p.int()?;
                    return at(pos, gens::e_pow(pc, ring, m));
                } else {
                    at(pos, gens::e_pow(pc, ring, 1))?
                }
            }
            "xi" => {
                if p.eat('(') {
                    let k = p.int()?;
                    p.expect(')')?;
                    if p.eat('^') {
                        let n = p.int()?;
                        let x = n * (GradingROG::mk(pc, k) - GradingROG::trivial(pc, 2));
                        return at(pos, if md_p(k, pc.p()) == 0 { gens::one(pc, ring) } else { gens::xi_pow(ring, x) });
                    }
                    at(pos, gens::xi(pc, ring, k))?
                } else if p.eat('^') {
                    let n = p.int()?;
                    return at(pos, gens::xi1_pow(pc, ring, n));
                } else {
                    at(pos, gens::xi(pc, ring, 1))?
                }
            }
            "iota" => {
                if p.eat('^') {
                    if p.eat('(') {
                        let x = rog_expr(p)?;
                        p.expect(')')?;
                        return at(pos, gens::iota(ring, x));
                    }
                    let k = p.int()?;
                    return at(pos, gens::iota_pow(pc, ring, k));
                }
                at(pos, gens::iota_pow(pc, ring, 1))?
            }
            "tau" | "rho" | "t" => {
                p.expect('(')?;
                let x = point_sum(p, ring)?;
                p.expect(')')?;
                at(
                    pos,
                    match name.as_str() {
                        "tau" => x.tau(),
                        "rho" => x.rho(),
                        _ => Ok(x.t()),
                    },
                )?
            }
            "mu" | "lam" => {
                p.expect('(')?;
                let x = rog_expr(p)?;

                if p.eat(';') {
                    let a = p.int()?;
                    p.expect(')')?;
                    if name == "mu" {
                        at(pos, gens::mu(x, a))?
                    } else {
                        at(pos, gens::lam(x, a))?
                    }
                } else {
                    p.expect(')')?;
                    if name == "mu" {
                        return err(pos, "mu(x; a) needs a residue");
                    }
                    at(pos, gens::lam_rz(x))?
                }
            }
            "invkappa" => {
                p.expect('(')?;
                let m = p.int()?;
                p.expect(')')?;
                at(pos, gens::invkappa(pc, ring, m))?
            }
            "dxi" => {
                p.expect('(')?;
                let m = p.int()?;
                p.expect(',')?;
                let n = p.int()?;
                p.expect(')')?;
                at(pos, gens::dxi(pc, ring, m, n))?
            }
            "ekappa" => {
                p.expect('(')?;
                let y = rog_expr(p)?;
                p.expect(')')?;
                at(pos, gens::ekappa(ring, y))?
            }
            "edxi" => {
                p.expect('(')?;
                let y = rog_expr(p)?;
                p.expect(';')?;
                let n = p.int()?;
                p.expect(')')?;
                at(pos, gens::edxi(y, n))?
            }
            other => return err(pos, format!("unknown point class `{other}`")),
        }
    };
    if p.eat('^') {
        let epos = p.pos();
        let n = p.int()?;
        if n < 0 {
            return err(epos, "negative powers are only defined for e, xi and iota");
        }
        let mut acc = at(pos, gens::one(pc, ring))?;
        for _ in 0..n {
            acc = at(pos, acc.mul(&base))?;
        }
        return Ok(acc);
    }
    Ok(base)
}

/// A point class of `ring`.
pub fn parse_point(pc: PrimeConfig, ring: Ring, s: &str) -> Result<PointClass> {
    let mut p = P::new(s, pc)?;
    let v = point_sum(&mut p, ring)?;
    p.done()?;
    Ok(v)
}

// ---- B_GU(1) ----

/// A product of generator words: the scalar from κ̄ products and the word.
type Word = (i64, GeneratorWord);

fn word_mul(a: Word, b: Word) -> Word {
    let (s, w) = a.1.mul(&b.1);
    (a.0 * b.0 * s, w)
}

fn word_pow(w: Word, n: i64) -> Word {
    let mut acc = (1, GeneratorWord::one(w.1.pc()));
    for _ in 0..n {
        acc = word_mul(acc, w.clone());
    }
    acc
}

/// Comma-separated RO(G) components or a single RO(Π) expression.
fn ropi_args(p: &mut P) -> Result<GradingROPi> {
    let pos = p.pos();
    let first = ropi_expr(p)?;
    if !p.is_sym(',') {
        return Ok(first);
    }
    let mut comps = vec![first];
    while p.eat(',') {
        comps.push(ropi_expr(p)?);
    }
    if comps.len() != p.pc.p() as usize {
        return err(pos, format!("expected {} components, got {}", p.pc.p(), comps.len()));
    }
    let mut out = vec![];
    for c in comps {
        if !c.is_constant() {
            return err(pos, "components must be RO(G) gradings");
        }
        out.push(c.comp(0));
    }
    GradingROPi::new(out)
}

fn index(p: &mut P) -> Result<i64> {
    let pos = p.pos();
    let i = p.int()?;
    if !(0..p.pc.p()).contains(&i) {
        return err(pos, format!("index {i} out of range 0..{}", p.pc.p()));
    }
    Ok(i)
}

/// One B generator, if the next tokens start one.
fn b_generator(p: &mut P) -> Result<Option<Word>> {
    let pos = p.pos();
    let pc = p.pc;
    let Some(Tok::Ident(name)) = p.peek().cloned() else {
        return Ok(None);
    };
    let two_args = p.peek_at(1) == Some(&Tok::Sym('('))
        && matches!(p.peek_at(2), Some(Tok::Int(_)))
        && p.peek_at(3) == Some(&Tok::Sym(','));
    let w = match name.as_str() {
        "c" => {
            p.i += 1;
            GeneratorWord::chic(pc, 0)
        }
        "chic" => {
            p.i += 1;
            p.expect('(')?;
            let i = index(p)?;
            p.expect(')')?;
            GeneratorWord::chic(pc, i)
        }
        "xi" if two_args => {
            p.i += 1;
            p.expect('(')?;
            let i = index(p)?;
            p.expect(',')?;
            let one_pos = p.pos();
            if p.int()? != 1 {
                return err(one_pos, "only xi(i,1) is a generator; use xibar for other ξ's");
            }
            p.expect(')')?;
            GeneratorWord::xi(pc, i)
        }
        "xibar" => {
            p.i += 1;
            p.expect('(')?;
            let a = ropi_args(p)?;
            p.expect(')')?;
            at(pos, GeneratorWord::xibar(a))?
        }
        "lambar" => {
            p.i += 1;
            p.expect('(')?;
            let beta = ropi_args(p)?;
            p.expect(';')?;
            let mut b = vec![p.int()?];
            while p.eat(',') {
                b.push(p.int()?);
            }
            p.expect(')')?;
            if b.len() != pc.p() as usize {
                return err(pos, format!("lambar needs {} residues, got {}", pc.p(), b.len()));
            }
            at(pos, GeneratorWord::lambar(beta, b))?
        }
        "kapbar" => {
            p.i += 1;
            p.expect('(')?;
            let k = index(p)? as usize;
            p.expect(';')?;
            let t = ropi_args(p)?;
            p.expect(')')?;
            at(pos, GeneratorWord::kapbar(k, t))?
        }
        _ => return Ok(None),
    };
    Ok(Some((1, w)))
}

/// A parenthesized product made only of B generators, e.g. `(c*xi(0,1))`.
fn b_group(p: &mut P) -> Result<Option<Word>> {
    let save = p.i;
    if !p.eat('(') {
        return Ok(None);
    }
    let mut acc = (1, GeneratorWord::one(p.pc));
    loop {
        let w = match b_generator(p) {
            Ok(Some(w)) => w,
            _ => {
                p.i = save;
                return Ok(None);
            }
        };
        let w = if p.eat('^') { word_pow(w, p.int()?) } else { w };
        acc = word_mul(acc, w);
        if !p.eat('*') {
            break;
        }
    }
    if !p.eat(')') {
        p.i = save;
        return Ok(None);
    }
    Ok(Some(acc))
}

struct BTerm {
    coef: PointClass,
    word: Word,
}

fn b_term(p: &mut P, ring: Ring) -> Result<BTerm> {
    let pc = p.pc;
    let mut coef = at(p.pos(), gens::one(pc, ring))?;
    let mut word = (1, GeneratorWord::one(pc));
    loop {
        let pos = p.pos();
        if let Some(w) = b_group(p)?.map(Ok).or_else(|| b_generator(p).transpose()).transpose()? {
            let w = if p.eat('^') {
                let n = p.int()?;
                if n < 0 {
                    return err(pos, "negative powers of B generators");
                }
                word_pow(w, n)
            } else {
                w
            };
            word = word_mul(word, w);
        } else if let Some(Tok::Int(v)) = p.peek() {
            let v = *v;
            p.i += 1;
            coef = coef.scale(v);
        } else {
            let f = point_factor(p, ring)?;
            coef = at(pos, coef.mul(&f))?;
        }
        if !p.eat('*') {
            break;
        }
    }
    Ok(BTerm { coef, word })
}

/// A B_GU(1) class, normalized by `e`.
pub fn parse_b(e: &Engine, s: &str) -> Result<BClass> {
    let mut p = P::new(s, e.pc())?;
    let mut acc: Option<BClass> = None;
    let mut first = true;
    loop {
        let pos = p.pos();
        let sign = if p.eat('-') {
            -1
        } else if p.eat('+') || first {
            1
        } else {
            break;
        };
        first = false;
        let t = b_term(&mut p, e.ring())?;
        let x = at(pos, e.normalize(&t.word.1, &t.coef.scale(sign * t.word.0)))?;
        acc = Some(match acc {
            None => x,
            Some(a) => at(pos, a.checked_add(&x))?,
        });
    }
    p.done()?;
    acc.ok_or_else(|| Error::Parse { pos: 0, msg: "empty expression".into() })
}

/// A single generator word with its coefficient, without normalizing.
pub fn parse_word(pc: PrimeConfig, ring: Ring, s: &str) -> Result<(PointClass, GeneratorWord)> {
    let mut p = P::new(s, pc)?;
    let t = b_term(&mut p, ring)?;
    p.done()?;
    Ok((t.coef.scale(t.word.0), t.word.1.paired()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point_rings::{les::window, Level};

    fn pc(p: i64) -> PrimeConfig {
        PrimeConfig::new(p).unwrap()
    }

    #[test]
    fn rog_literals() {
        let p2 = pc(2);
        assert_eq!(parse_rog(p2, "3L-1").unwrap(), GradingROG::new(p2, -1, &[3]).unwrap());
        let p5 = pc(5);
        let want = GradingROG::trivial(p5, 2) + 3 * GradingROG::mk(p5, 1) - GradingROG::mk(p5, 2);
        assert_eq!(parse_rog(p5, "p=5; 2 + 3*M1 - M2").unwrap(), want);
        assert_eq!(parse_rog_any("p=5; 2 + 3M1 - M_2").unwrap(), want);
        assert_eq!(parse_rog(p5, "2(M1 - M2) + M2").unwrap(), 2 * GradingROG::mk(p5, 1) - GradingROG::mk(p5, 2));
        match parse_rog(p5, "2 + L") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            r => panic!("{r:?}"),
        }
        assert!(matches!(parse_rog(p5, "2 +"), Err(Error::Parse { pos: 3, .. })));
        assert!(parse_rog(p5, "p=3; M1").is_err());
    }

    #[test]
    fn rog_round_trip() {
        for p in [2, 3, 5, 7] {
            for x in window(pc(p), 4, 1) {
                assert_eq!(parse_rog(pc(p), &x.to_string()).unwrap(), x, "{x}");
            }
        }
    }

    #[test]
    fn ropi_literals() {
        let q = pc(3);
        assert_eq!(parse_ropi(q, "Omega(1,1)").unwrap(), GradingROPi::omega(q, 1, 1));
        assert_eq!(parse_ropi(q, "omega*").unwrap(), GradingROPi::omega_star(q));
        assert_eq!(parse_ropi(q, "chi^2(omega*)").unwrap(), GradingROPi::omega_star(q).chi(2));
        assert_eq!(
            parse_ropi(q, "2*omega* - Omega(0,1)").unwrap(),
            &(2 * GradingROPi::omega_star(q)) - &GradingROPi::omega(q, 0, 1)
        );
        let t = GradingROPi::new(vec![
            GradingROG::mk(q, 1),
            GradingROG::trivial(q, 2),
            GradingROG::mk(q, 1) - GradingROG::trivial(q, 2) + GradingROG::mk(q, 2),
        ])
        .unwrap();
        assert_eq!(parse_ropi(q, &t.to_string()).unwrap(), t);
        assert_eq!(parse_ropi(q, "M1").unwrap(), GradingROPi::constant(GradingROG::mk(q, 1)));
        assert!(parse_ropi(q, "(1, 2)").is_err());
        let p2 = pc(2);
        assert_eq!(parse_ropi(p2, "Omega").unwrap(), GradingROPi::omega_two(p2));
    }

    #[test]
    fn point_basis_round_trip() {
        for p in [2, 3, 5, 7] {
            for ring in [Ring::S0, Ring::S0RZ, Ring::S0Conc, Ring::EG, Ring::TEG] {
                for x in window(pc(p), 5, 1) {
                    for level in [Level::GG, Level::Ge] {
                        for b in PointClass::basis(ring, x, level) {
                            let s = b.to_string();
                            let back = parse_point(pc(p), ring, &s).unwrap_or_else(|e| panic!("{s} in {ring}: {e}"));
                            assert_eq!(back, b, "{s} in {ring}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn point_expressions() {
        let p2 = pc(2);
        let e = parse_point(p2, Ring::S0, "e^2*xi").unwrap();
        assert_eq!(e, &gens::e_pow(p2, Ring::S0, 2).unwrap() * &gens::xi(p2, Ring::S0, 1).unwrap());
        let p5 = pc(5);
        let a = GradingROG::mk(p5, 2) - GradingROG::mk(p5, 1);
        assert_eq!(parse_point(p5, Ring::S0, "mu(M2-M1; 2)").unwrap(), gens::mu(a, 2).unwrap());
        assert_eq!(parse_point(p5, Ring::S0, "lam(M2-M1; 3)").unwrap(), gens::lam(a, 3).unwrap());
        let t = parse_point(p5, Ring::S0, "tau(iota^(M2-2))").unwrap();
        assert_eq!(t, gens::iota_k(p5, Ring::S0, 2).unwrap().tau().unwrap());
        assert_eq!(
            parse_point(p5, Ring::S0, "2*kappa - 1").unwrap(),
            &gens::kappa(p5).scale(2) - &gens::one(p5, Ring::S0).unwrap()
        );
        assert!(matches!(parse_point(p5, Ring::S0, "e + xi"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_point(p5, Ring::S0, "foo"), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn word_round_trip() {
        use crate::bgu1::sample::random_word;
        use rand::SeedableRng;
        for p in [2, 3, 5] {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(p as u64);
            for _ in 0..200 {
                let (_, w) = random_word(pc(p), &mut rng, 3).unwrap();
                let (c, back) = parse_word(pc(p), Ring::S0, &w.to_string()).unwrap_or_else(|e| panic!("{w}: {e}"));
                assert_eq!(back, w.clone().paired(), "{w}");
                assert_eq!(c, gens::one(pc(p), Ring::S0).unwrap());
            }
        }
    }

    #[test]
    fn b_classes_round_trip() {
        use crate::bgu1::sample::{random_coef, random_word};
        use crate::point_rings::CoeffSystem;
        use rand::SeedableRng;
        for p in [2, 3] {
            let e = Engine::new(pc(p), CoeffSystem::A).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10 + p as u64);
            for _ in 0..100 {
                let (s, w) = random_word(pc(p), &mut rng, 3).unwrap();
                let c = random_coef(pc(p), Ring::S0, &mut rng).unwrap().scale(s);
                let x = e.normalize(&w, &c).unwrap();
                let back = parse_b(&e, &x.to_string()).unwrap_or_else(|err| panic!("{x}: {err}"));
                assert!(back == x || (back.is_zero() && x.is_zero()), "{x} → {back}");
            }
        }
        let e = Engine::new(pc(3), CoeffSystem::A).unwrap();
        let x = parse_b(&e, "chic(0)*xi(0,1)*chic(1)*xi(1,1)").unwrap();
        let y = e.bmul(&parse_b(&e, "chic(0)*xi(0,1)").unwrap(), &parse_b(&e, "chic(1)*xi(1,1)").unwrap()).unwrap();
        assert_eq!(x, y);
    }
}
