//! The defining and implied relations of H(B₊), instantiated over bounded
//! parameter grids. Each relation is checked twice: both sides normalize to
//! the same combination of admissible monomials, and both sides have the
//! same image under η evaluated factor by factor.

use super::class::BClass;
use super::normalize::Engine;
use super::word::{canonical_b, pair_grading, s, GeneratorWord};
use crate::arith::{inv_mod, md};
use crate::error::{Error, Result};
use crate::fixed_ring::{eta_injective_at, FixedRingClass};
use crate::gradings::{GradingROG, GradingROPi, PrimeConfig};
use crate::point_rings::{gens, CoeffSystem, PointClass};
use crate::suites::SuiteReport;

/// coef · w_1 · w_2 ⋯ (products taken after normalizing each word).
#[derive(Clone)]
pub struct Term {
    pub coef: PointClass,
    pub words: Vec<GeneratorWord>,
}

impl Term {
    pub fn new(coef: PointClass, words: Vec<GeneratorWord>) -> Self {
        Self { coef, words }
    }
}

fn eq_or_both_zero_b(a: &BClass, b: &BClass) -> bool {
    (a.is_zero() && b.is_zero()) || (a.grading() == b.grading() && a.terms() == b.terms())
}

fn fixed_eq(a: &FixedRingClass, b: &FixedRingClass) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.grading() == b.grading() && (0..a.p() as usize).all(|k| a.component(k) == b.component(k))
}

fn add_fixed(a: Option<FixedRingClass>, b: FixedRingClass) -> Result<Option<FixedRingClass>> {
    Ok(Some(match a {
        None => b,
        Some(a) if a.is_zero() => b,
        Some(a) if b.is_zero() => a,
        Some(a) => a.checked_add(&b)?,
    }))
}

fn add_b(a: Option<BClass>, b: BClass) -> Result<Option<BClass>> {
    Ok(Some(match a {
        None => b,
        Some(a) if a.is_zero() => b,
        Some(a) if b.is_zero() => a,
        Some(a) => a.checked_add(&b)?,
    }))
}

impl Engine {
    /// The normal form of a sum of terms.
    pub fn eval_terms(&self, terms: &[Term]) -> Result<Option<BClass>> {
        let mut acc = None;
        for t in terms {
            let (first, rest) = match t.words.split_first() {
                Some((f, r)) => (f.clone(), r),
                None => (GeneratorWord::one(self.pc()), &[][..]),
            };
            let mut x = self.normalize(&first, &t.coef)?;
            for w in rest {
                x = self.bmul(&x, &self.word(w)?)?;
            }
            acc = add_b(acc, x)?;
        }
        Ok(acc)
    }

    /// η of a sum of terms, computed generator by generator.
    pub fn eta_terms(&self, terms: &[Term]) -> Result<Option<FixedRingClass>> {
        let mut acc = None;
        for t in terms {
            let mut x = FixedRingClass::from_point(&t.coef);
            for w in &t.words {
                x = x.mul(&self.eta_word(w)?)?;
            }
            acc = add_fixed(acc, x)?;
        }
        Ok(acc)
    }
}

struct Checker<'a> {
    e: &'a Engine,
    rep: SuiteReport,
}

impl Checker<'_> {
    fn rel(&mut self, name: &str, lhs: Vec<Term>, rhs: Vec<Term>) {
        let r = self.try_rel(&lhs, &rhs);
        match r {
            Ok(None) => self.rep.checked += 1,
            Ok(Some(msg)) => self.rep.fail(format!("{name}: {msg}")),
            Err(err) => self.rep.fail(format!("{name}: {err}")),
        }
    }

    fn try_rel(&self, lhs: &[Term], rhs: &[Term]) -> Result<Option<String>> {
        let e = self.e;
        let nl = e.eval_terms(lhs)?;
        let nr = e.eval_terms(rhs)?;
        let zero = |x: &Option<BClass>| x.as_ref().is_none_or(|c| c.is_zero());
        let same = match (&nl, &nr) {
            (Some(a), Some(b)) => eq_or_both_zero_b(a, b),
            _ => zero(&nl) && zero(&nr),
        };
        if !same {
            let show = |x: &Option<BClass>| x.as_ref().map_or("0".to_string(), |c| c.to_string());
            return Ok(Some(format!("normal forms differ: {} vs {}", show(&nl), show(&nr))));
        }
        let el = e.eta_terms(lhs)?;
        let er = e.eta_terms(rhs)?;
        let fz = |x: &Option<FixedRingClass>| x.as_ref().is_none_or(|c| c.is_zero());
        let eta_same = match (&el, &er) {
            (Some(a), Some(b)) => fixed_eq(a, b),
            _ => fz(&el) && fz(&er),
        };
        let injective = nl.as_ref().is_none_or(|c| eta_injective_at(c.grading()));
        if injective && !eta_same {
            return Ok(Some("η images of the two sides differ".into()));
        }
        if let (Some(n), Some(img)) = (&nl, &el) {
            if !n.is_zero() && !fixed_eq(&e.eta(n)?, img) {
                return Ok(Some(format!("η of the normal form {n} differs from η of the generators")));
            }
        }
        Ok(None)
    }
}

fn ro0_samples(pc: PrimeConfig) -> Vec<GradingROPi> {
    let p = pc.p();
    let h = pc.h() as i64;
    let mut v = vec![GradingROPi::zero(pc)];
    if h >= 2 {
        for i in 0..p {
            let d = GradingROG::mk(pc, 2) - GradingROG::mk(pc, 1);
            let mut c = vec![GradingROG::zero(pc); p as usize];
            c[i as usize] = d;
            v.push(GradingROPi::new(c).expect("RO_0"));
        }
        for i in 1..p as usize {
            v.push(&pair_grading(pc, i) - &pair_grading(pc, 0));
        }
    }
    v
}

fn ro0_g_samples(pc: PrimeConfig) -> Vec<GradingROG> {
    let h = pc.h() as i64;
    let mut v = vec![GradingROG::zero(pc)];
    for j in 1..=h {
        for k in 1..=h {
            if j != k {
                v.push(GradingROG::mk(pc, j) - GradingROG::mk(pc, k));
            }
        }
    }
    v
}

/// Valid b vectors for β: the canonical one and shifts by ±p at each index.
fn b_choices(beta: &GradingROPi) -> Result<Vec<Vec<i64>>> {
    let p = beta.p();
    let b = canonical_b(beta)?;
    let mut out = vec![b.clone()];
    for k in 0..b.len() {
        let mut c = b.clone();
        c[k] += p;
        out.push(c);
    }
    let mut c = b.clone();
    c[0] -= p;
    out.push(c);
    Ok(out)
}

fn with_b(beta: &GradingROPi, b: Vec<i64>) -> Result<GeneratorWord> {
    GeneratorWord::lambar(beta.clone(), b)
}

fn prod(ws: &[GeneratorWord]) -> (i64, GeneratorWord) {
    let mut acc = GeneratorWord::one(ws[0].pc());
    let mut sc = 1;
    for w in ws {
        let (s, x) = acc.mul(w);
        sc *= s;
        acc = x;
    }
    (sc, acc)
}

/// e^{−m}κ, with m = 0 giving κ.
fn invk(pc: PrimeConfig, m: i64) -> Result<PointClass> {
    if m == 0 {
        Ok(gens::kappa(pc))
    } else {
        gens::invkappa(pc, crate::point_rings::Ring::S0, m)
    }
}

/// The b vector of the spun-off term of the pivot relation from i to j.
pub fn pivot_b(pc: PrimeConfig, i: usize, j: usize, a: &[i64]) -> Vec<i64> {
    let (ii, jj) = (i as i64, j as i64);
    (0..pc.p() as usize)
        .map(|k| {
            let kk = k as i64;
            if k == j {
                if pc.is_two() {
                    -1
                } else {
                    1
                }
            } else if k == i {
                a[i]
            } else {
                s(pc, ii - jj) * (s(pc, kk - jj) * a[k] - s(pc, kk - ii))
            }
        })
        .collect()
}

/// θ gradings used for κ̄ classes: all fixed dimensions 0.
fn theta_samples(pc: PrimeConfig) -> Vec<GradingROPi> {
    let m1 = GradingROG::mk(pc, 1);
    let mut v = vec![];
    for (t, beta) in ro0_samples(pc).into_iter().take(4).enumerate() {
        let a = [0, -1, 1, -2][t % 4];
        v.push(&beta + &GradingROPi::constant(a * m1));
    }
    v.push(&(&pair_grading(pc, 1 % pc.p() as usize) - &pair_grading(pc, 0)) + &GradingROPi::constant(m1));
    v
}

/// Every relation of the presentation, with A coefficients.
pub fn verify_relations(e: &Engine) -> Result<SuiteReport> {
    match e.sys() {
        CoeffSystem::A => verify_a(e),
        CoeffSystem::RZ => verify_rz(e),
        CoeffSystem::ConcZ => Err(Error::Unsupported("no rewriting engine for ⟨Z⟩ coefficients".into())),
    }
}

fn verify_a(e: &Engine) -> Result<SuiteReport> {
    let pc = e.pc();
    let p = pc.p();
    let pu = p as usize;
    let h = pc.h() as i64;
    let one = e.one_coef();
    let w1 = GeneratorWord::one(pc);
    let mut c = Checker { e, rep: SuiteReport::new("relations", p) };
    let t = |coef: &PointClass, ws: Vec<GeneratorWord>| Term::new(coef.clone(), ws);

    // ξ̄^α = ξ^α on RO(G).
    for j in 1..=h {
        for mult in 1..=2 {
            let x = mult * (GradingROG::mk(pc, j) - GradingROG::trivial(pc, 2));
            if !x.is_ro_plus() {
                continue;
            }
            let lhs = vec![t(&one, vec![GeneratorWord::xibar(GradingROPi::constant(x))?])];
            let rhs = vec![t(&gens::xi_pow(e.ring(), x)?, vec![w1.clone()])];
            c.rel(&format!("xibar({x}) = xi^({x})"), lhs, rhs);
        }
    }
    // λ̄^{α,a} = λ^{α,a} for α ∈ RO(G), a constant.
    for a in ro0_g_samples(pc) {
        let a0 = inv_mod(crate::gradings::nu(&a)?, p);
        for b in [a0, a0 + p, a0 - p, a0 + 2 * p] {
            let lhs = vec![t(&one, vec![with_b(&GradingROPi::constant(a), vec![b; pu])?])];
            let rhs = vec![t(&gens::lam(a, b)?, vec![w1.clone()])];
            c.rel(&format!("lambar({a}; {b}) = lam"), lhs, rhs);
        }
    }
    // ξ̄^α ξ̄^β = ξ̄^{α+β}.
    let omegas: Vec<GradingROPi> = (0..p).flat_map(|i| (1..=h).map(move |j| GradingROPi::omega(pc, i, j))).collect();
    for a in omegas.iter().take(6) {
        for b in omegas.iter().rev().take(4) {
            let lhs = vec![t(&one, vec![GeneratorWord::xibar(a.clone())?, GeneratorWord::xibar(b.clone())?])];
            let rhs = vec![t(&one, vec![GeneratorWord::xibar(a + b)?])];
            c.rel(&format!("xibar{a} xibar{b}"), lhs, rhs);
        }
    }
    // λ̄^{α,a} λ̄^{β,b} = λ̄^{α+β,ab}.
    let ro0 = ro0_samples(pc);
    for a in ro0.iter().take(5) {
        for b in ro0.iter().rev().take(4) {
            for (ba, bb) in b_choices(a)?.into_iter().zip(b_choices(b)?.into_iter().rev()).take(3) {
                let ab: Vec<i64> = ba.iter().zip(&bb).map(|(x, y)| x * y).collect();
                let lhs = vec![t(&one, vec![with_b(a, ba.clone())?, with_b(b, bb.clone())?])];
                let rhs = vec![t(&one, vec![with_b(&(a + b), ab)?])];
                c.rel(&format!("lambar{a} lambar{b}"), lhs, rhs);
            }
        }
    }
    // ξ̄^{Ω_{i,j}} λ̄^{β,b} = ξ̄^{Ω_{i,1}} λ̄^{β+Ω_{i,j}−Ω_{i,1},b'} with b'_k = b_k off i.
    for i in 0..p {
        let iu = i as usize;
        for j in 1..=h {
            for beta in ro0.iter().take(3) {
                for b in b_choices(beta)?.into_iter().take(3) {
                    let d = &GradingROPi::omega(pc, i, j) - &GradingROPi::omega(pc, i, 1);
                    let nb = beta + &d;
                    let can = canonical_b(&nb)?;
                    for shift in [0, p] {
                        let mut b2 = b.clone();
                        b2[iu] = can[iu] + shift;
                        let (_, l) = GeneratorWord::xibar(GradingROPi::omega(pc, i, j))?.mul(&with_b(beta, b.clone())?);
                        let (_, r) = GeneratorWord::xi(pc, i).mul(&with_b(&nb, b2)?);
                        c.rel(
                            &format!("xibar(Omega_{i},{j}) exchange"),
                            vec![t(&one, vec![l])],
                            vec![t(&one, vec![r])],
                        );
                    }
                }
            }
        }
    }
    // e^{−m}κ ξ_{i,1} λ̄^{β,b} is independent of b_i.
    for m in 0..=2 {
        let k = invk(pc, m)?;
        for i in 0..pu {
            for beta in ro0.iter().take(3) {
                let b = canonical_b(beta)?;
                let mut b2 = b.clone();
                b2[i] += p;
                let (_, l) = GeneratorWord::xi(pc, i as i64).mul(&with_b(beta, b)?);
                let (_, r) = GeneratorWord::xi(pc, i as i64).mul(&with_b(beta, b2)?);
                c.rel(&format!("e^-{m}kappa xi({i},1) b-independence"), vec![t(&k, vec![l])], vec![t(&k, vec![r])]);
            }
        }
    }
    // λ̄^{α,a+pδ_i} − λ̄^{α,a} = κ̄_i^α.
    for beta in ro0.iter().take(4) {
        for a in b_choices(beta)?.into_iter().take(3) {
            for i in 0..pu {
                let mut a2 = a.clone();
                a2[i] += p;
                let lhs = vec![t(&one, vec![with_b(beta, a2)?]), t(&one.scale(-1), vec![with_b(beta, a.clone())?])];
                let rhs = vec![t(&one, vec![GeneratorWord::kapbar(i, beta.clone())?])];
                c.rel(&format!("lambar shift at {i}, beta = {beta}"), lhs, rhs);
            }
        }
    }
    // e^{−m}κ λ̄^{α,a} = Σ_k a_k e^{−m}κ̄_k^α.
    for m in 0..=2 {
        let k = invk(pc, m)?;
        for beta in ro0.iter().take(3) {
            for a in b_choices(beta)?.into_iter().take(3) {
                let lhs = vec![t(&k, vec![with_b(beta, a.clone())?])];
                let theta = beta + &GradingROPi::constant(k.grading());
                let rhs = (0..pu)
                    .map(|j| Ok(t(&one.scale(a[j]), vec![GeneratorWord::kapbar(j, theta.clone())?])))
                    .collect::<Result<Vec<_>>>()?;
                c.rel(&format!("e^-{m}kappa lambar{beta}"), lhs, rhs);
            }
        }
    }
    let thetas = theta_samples(pc);
    // λ̄^{α,a}·e^{−m}κ̄_i^β = a_i e^{−m}κ̄_i^{α+β}.
    for alpha in ro0.iter().take(3) {
        for a in b_choices(alpha)?.into_iter().take(3) {
            for theta in thetas.iter().take(3) {
                for i in 0..pu {
                    let lhs = vec![t(&one, vec![with_b(alpha, a.clone())?, GeneratorWord::kapbar(i, theta.clone())?])];
                    let rhs = vec![t(&one.scale(a[i]), vec![GeneratorWord::kapbar(i, alpha + theta)?])];
                    c.rel(&format!("lambar{alpha} kapbar({i})"), lhs, rhs);
                }
            }
        }
    }
    // The pivot relation, for every i ≠ j and several a.
    for i in 0..pu {
        for j in 0..pu {
            if i == j {
                continue;
            }
            let gamma = &pair_grading(pc, i) - &pair_grading(pc, j);
            let gamma2 = &pair_grading(pc, i) - &GradingROPi::constant(GradingROG::mk(pc, i as i64 - j as i64));
            let mut avs = b_choices(&gamma)?;
            if pc.is_two() {
                avs.push(vec![-1, -1]);
            }
            for a in avs {
                let b = pivot_b(pc, i, j, &a);
                let Ok(lb) = with_b(&gamma2, b.clone()) else {
                    c.rep.fail(format!("pivot {i}→{j}: b = {b:?} is not in ν({gamma2})^-1 for a = {a:?}"));
                    continue;
                };
                let (_, r1) = GeneratorWord::pair(pc, j as i64).mul(&with_b(&gamma, a.clone())?);
                let eij = gens::euler(pc, e.ring(), i as i64 - j as i64)?;
                let lhs = vec![t(&one, vec![GeneratorWord::pair(pc, i as i64)])];
                let rhs = vec![t(&one, vec![r1]), t(&-&eij, vec![lb])];
                c.rel(&format!("pivot {i}→{j}, a = {a:?}"), lhs, rhs);
            }
        }
    }
    // Implied: ξ̄^α·κ̄_i = 0 when α_i ≠ 0 (in particular ξ_{i,1}κ̄_i = 0).
    for i in 0..p {
        for j in 1..=h {
            for theta in thetas.iter().take(3) {
                let lhs = vec![t(
                    &one,
                    vec![
                        GeneratorWord::xibar(GradingROPi::omega(pc, i, j))?,
                        GeneratorWord::kapbar(i as usize, theta.clone())?,
                    ],
                )];
                c.rel(&format!("xibar(Omega_{i},{j}) kapbar({i}) = 0"), lhs, vec![]);
                let (_, w) = GeneratorWord::xi(pc, i).mul(&GeneratorWord::kapbar(i as usize, theta.clone())?);
                c.rel(&format!("xi({i},1)*kapbar({i}) = 0 as one word"), vec![t(&one, vec![w])], vec![]);
            }
        }
    }
    // Implied: χ^i c·ξ_{i,1}·κ̄_k = s(k−i) κ̄_k with the shifted exponent.
    for i in 0..pu {
        for k in 0..pu {
            if i == k {
                continue;
            }
            for theta in thetas.iter().take(3) {
                let lhs =
                    vec![t(&one, vec![GeneratorWord::pair(pc, i as i64), GeneratorWord::kapbar(k, theta.clone())?])];
                let rhs = vec![t(
                    &one.scale(s(pc, k as i64 - i as i64)),
                    vec![GeneratorWord::kapbar(k, theta + &pair_grading(pc, i))?],
                )];
                c.rel(&format!("pair({i}) kapbar({k})"), lhs, rhs);
            }
        }
    }
    // κ̄ from its defining word, for several auxiliary b.
    kappa_bar_definition(&mut c, &ro0)?;
    // ∏ ξ_{i,1} = ξ_1.
    let all: Vec<GeneratorWord> = (0..p).map(|i| GeneratorWord::xi(pc, i)).collect();
    let (_, w) = prod(&all);
    c.rel("prod xi(i,1) = xi_1", vec![t(&one, vec![w])], vec![t(&gens::xi(pc, e.ring(), 1)?, vec![w1.clone()])]);
    if pc.is_two() {
        let omk = &one - &gens::kappa(pc);
        let e1 = gens::euler(pc, e.ring(), 1)?;
        c.rel(
            "chic*xi(1,1) = (1-kappa)c*xi(0,1) + e_1",
            vec![t(&one, vec![GeneratorWord::pair(pc, 1)])],
            vec![t(&omk, vec![GeneratorWord::pair(pc, 0)]), t(&e1, vec![w1.clone()])],
        );
    }
    Ok(c.rep)
}

/// e^α κ̄_k^β = ±e^{α−ΣM_i}κ^{β_k} ∏_{i≠k} χ^i c·ξ̄^{Ω_{i,i−k}} λ̄^{β−β_k,b} with b_k = 1.
fn kappa_bar_definition(c: &mut Checker<'_>, ro0: &[GradingROPi]) -> Result<()> {
    let e = c.e;
    let pc = e.pc();
    let p = pc.p();
    let one = e.one_coef();
    let sum_m = (1..p).fold(GradingROG::zero(pc), |acc, i| acc + GradingROG::mk(pc, i));
    let sign: i64 = (1..p).map(|i| s(pc, i)).product();
    for k in 0..p as usize {
        for beta in ro0.iter().take(3) {
            for a in [0, -1, 1] {
                let alpha = a * GradingROG::mk(pc, 1);
                let rest = beta - &GradingROPi::constant(beta.comp(k as i64));
                let mut bs = vec![canonical_b(&rest)?];
                for j in 0..p as usize {
                    if j != k {
                        let mut b = bs[0].clone();
                        b[j] += p;
                        bs.push(b);
                    }
                }
                for b in bs {
                    let mut w = with_b(&rest, b.clone())?;
                    let mut xb = GradingROPi::zero(pc);
                    for i in 0..p {
                        if i as usize != k {
                            w.m[i as usize] += 1;
                            xb += &GradingROPi::omega(pc, i, md(i - k as i64, p));
                        }
                    }
                    w.xibar = Some(xb);
                    let coef = gens::ekappa(e.ring(), alpha + beta.comp(k as i64) - sum_m)?.scale(sign);
                    let theta = beta + &GradingROPi::constant(alpha);
                    c.rel(
                        &format!("kapbar({k}) definition, beta = {beta}, b = {b:?}"),
                        vec![Term::new(coef, vec![w])],
                        vec![Term::new(one.clone(), vec![GeneratorWord::kapbar(k, theta)?])],
                    );
                }
            }
        }
    }
    Ok(())
}

fn verify_rz(e: &Engine) -> Result<SuiteReport> {
    let pc = e.pc();
    let p = pc.p();
    let pu = p as usize;
    let h = pc.h() as i64;
    let one = e.one_coef();
    let w1 = GeneratorWord::one(pc);
    let mut c = Checker { e, rep: SuiteReport::new("relations-RZ", p) };
    let t = |coef: &PointClass, ws: Vec<GeneratorWord>| Term::new(coef.clone(), ws);
    for j in 1..=h {
        let x = GradingROG::mk(pc, j) - GradingROG::trivial(pc, 2);
        if x.is_ro_plus() {
            let lhs = vec![t(&one, vec![GeneratorWord::xibar(GradingROPi::constant(x))?])];
            c.rel("xibar = xi (RZ)", lhs, vec![t(&gens::xi_pow(e.ring(), x)?, vec![w1.clone()])]);
        }
    }
    for a in ro0_g_samples(pc) {
        let a0 = inv_mod(crate::gradings::nu(&a)?, p);
        for b in [a0, a0 + p] {
            let lhs = vec![t(&one, vec![with_b(&GradingROPi::constant(a), vec![b; pu])?])];
            c.rel(&format!("lambar({a}) = lam (RZ)"), lhs, vec![t(&gens::lam_rz(a)?, vec![w1.clone()])]);
        }
    }
    let ro0 = ro0_samples(pc);
    for a in ro0.iter().take(5) {
        for ba in b_choices(a)?.into_iter().take(3) {
            let neg = &GradingROPi::zero(pc) - a;
            let bn = canonical_b(&neg)?;
            let lhs = vec![t(&one, vec![with_b(a, ba.clone())?, with_b(&neg, bn)?])];
            c.rel(&format!("lambar{a} invertible (RZ)"), lhs, vec![t(&one, vec![w1.clone()])]);
        }
        for b in ro0.iter().rev().take(3) {
            let lhs = vec![t(&one, vec![with_b(a, canonical_b(a)?)?, with_b(b, canonical_b(b)?)?])];
            let rhs = vec![t(&one, vec![with_b(&(a + b), canonical_b(&(a + b))?)?])];
            c.rel("lambar product (RZ)", lhs, rhs);
        }
    }
    for i in 0..p {
        for j in 1..=h {
            let d = &GradingROPi::omega(pc, i, j) - &GradingROPi::omega(pc, i, 1);
            let lhs = vec![t(&one, vec![GeneratorWord::xibar(GradingROPi::omega(pc, i, j))?])];
            let (_, r) = GeneratorWord::xi(pc, i).mul(&with_b(&d, canonical_b(&d)?)?);
            c.rel("xibar exchange (RZ)", lhs, vec![t(&one, vec![r])]);
        }
    }
    for i in 0..pu {
        for j in 0..pu {
            if i == j {
                continue;
            }
            let gamma = &pair_grading(pc, i) - &pair_grading(pc, j);
            let gamma2 = &pair_grading(pc, i) - &GradingROPi::constant(GradingROG::mk(pc, i as i64 - j as i64));
            let (_, r1) = GeneratorWord::pair(pc, j as i64).mul(&with_b(&gamma, canonical_b(&gamma)?)?);
            let eij = gens::euler(pc, e.ring(), i as i64 - j as i64)?;
            let lhs = vec![t(&one, vec![GeneratorWord::pair(pc, i as i64)])];
            let rhs = vec![t(&one, vec![r1]), t(&-&eij, vec![with_b(&gamma2, canonical_b(&gamma2)?)?])];
            c.rel(&format!("pivot {i}→{j} (RZ)"), lhs, rhs);
        }
    }
    let all: Vec<GeneratorWord> = (0..p).map(|i| GeneratorWord::xi(pc, i)).collect();
    let (_, w) = prod(&all);
    c.rel("prod xi(i,1) = xi_1 (RZ)", vec![t(&one, vec![w])], vec![t(&gens::xi(pc, e.ring(), 1)?, vec![w1.clone()])]);
    if pc.is_two() {
        let e1 = gens::euler(pc, e.ring(), 1)?;
        c.rel(
            "chic*xi(1,1) = c*xi(0,1) + e_1 (RZ)",
            vec![t(&one, vec![GeneratorWord::pair(pc, 1)])],
            vec![t(&one, vec![GeneratorWord::pair(pc, 0)]), t(&e1, vec![w1.clone()])],
        );
    }
    Ok(c.rep)
}

/// The R Z engine agrees with the A engine followed by the coefficient
/// quotient, on the given words.
pub fn rz_matches_quotient(pc: PrimeConfig, words: &[(PointClass, GeneratorWord)]) -> Result<SuiteReport> {
    let ea = Engine::new(pc, CoeffSystem::A)?;
    let er = Engine::new(pc, CoeffSystem::RZ)?;
    let mut rep = SuiteReport::new("rz-quotient", pc.p());
    for (coef, w) in words {
        let a = ea.normalize(w, coef)?;
        let q = Engine::quotient_rz(&a)?;
        let rc = crate::point_rings::quotient_map(coef)?;
        let r = er.normalize(w, &rc)?;
        rep.check(eq_or_both_zero_b(&q, &r) || (q.is_zero() && r.is_zero()), || {
            format!("{w}: A-engine then quotient gives {q}, R Z engine gives {r}")
        });
    }
    Ok(rep)
}

pub(crate) fn same_class(a: &BClass, b: &BClass) -> bool {
    eq_or_both_zero_b(a, b)
}

pub(crate) fn same_fixed(a: &FixedRingClass, b: &FixedRingClass) -> bool {
    fixed_eq(a, b)
}
