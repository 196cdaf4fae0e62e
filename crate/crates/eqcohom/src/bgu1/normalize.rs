//! Rewriting arbitrary words into combinations of admissible monomials.
//!
//! A term is coef·(∏(χ^i c)^{m_i})(∏(χ^i c·ξ_{i,1})^{q_i})(∏ξ_{i,1}^{n_i})λ̄^{β,b}.
//! Each step either factors out ξ_1 = ∏_i ξ_{i,1}, moves a pair χ^i c·ξ_{i,1}
//! to another index (spinning off a term of lower degree), or, once the
//! exponents are admissible, centers β and brings b into [1, p−1]. The last
//! step spins off κ̄ terms, which are rewritten by solving a triangular
//! system.

use super::admissible::{word_order, AdmissibleMonomial};
use super::class::BClass;
use super::word::{b_valid, canonical_b, pair_grading, s, GeneratorWord};
use crate::arith::{exact_div, inv_mod, md};
use crate::error::{Error, Result};
use crate::fixed_ring::{eta_of, FixedRingClass};
use crate::gradings::{GradingROG, GradingROPi, PrimeConfig};
use crate::point_rings::{gens, quotient_map, CoeffSystem, Level, PointClass, Ring};

/// Bound on rewriting steps for a single normalization.
const MAX_STEPS: usize = 200_000;

/// The rewriting engine for one prime and one coefficient system (A or R Z).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    pc: PrimeConfig,
    sys: CoeffSystem,
}

struct Term {
    coef: PointClass,
    w: GeneratorWord,
}

/// c·X·e^{θ_j} κ̄_j^{θ−θ_j} where X carries no λ̄ factor.
struct KTerm {
    c: i64,
    j: usize,
    m: Vec<i64>,
    q: Vec<i64>,
    n: Vec<i64>,
    theta: GradingROPi,
}

impl Engine {
    pub fn new(pc: PrimeConfig, sys: CoeffSystem) -> Result<Self> {
        if sys == CoeffSystem::ConcZ {
            return Err(Error::Unsupported(
                "⟨Z⟩ coefficients are handled as fixed-point classes; see bgu1::conc_include".into(),
            ));
        }
        Ok(Self { pc, sys })
    }

    pub fn pc(&self) -> PrimeConfig {
        self.pc
    }

    pub fn sys(&self) -> CoeffSystem {
        self.sys
    }

    /// The point ring of coefficients.
    pub fn ring(&self) -> Ring {
        self.sys.point_ring()
    }

    pub fn one_coef(&self) -> PointClass {
        gens::one(self.pc, self.ring()).expect("S0 and S0RZ have units")
    }

    pub fn one(&self) -> BClass {
        BClass::from_term(self.sys, AdmissibleMonomial::one(self.pc), self.one_coef()).expect("unit")
    }

    /// The class of a word, coefficient 1.
    pub fn word(&self, w: &GeneratorWord) -> Result<BClass> {
        self.normalize(w, &self.one_coef())
    }

    /// A point class times the unit.
    pub fn scalar(&self, x: &PointClass) -> Result<BClass> {
        self.normalize(&GeneratorWord::one(self.pc), x)
    }

    pub fn normalize(&self, w: &GeneratorWord, coef: &PointClass) -> Result<BClass> {
        if w.pc() != self.pc || coef.pc() != self.pc {
            return Err(Error::PrimeMismatch(w.pc().p() as u32, self.pc.p() as u32));
        }
        if coef.ring() != self.ring() {
            return Err(Error::InvalidParam(format!("coefficients must lie in {}, got {}", self.ring(), coef.ring())));
        }
        if w.m.iter().chain(&w.q).chain(&w.n).any(|&x| x < 0) {
            return Err(Error::InvalidParam(format!("negative exponent in {w}")));
        }
        if !w.beta.is_ro0() || !b_valid(&w.beta, &w.b) {
            return Err(Error::BadCongruence(format!("λ̄ factor of {w} is not well formed")));
        }
        let total = &w.grading() + &GradingROPi::constant(coef.grading());
        let mut out = BClass::zero(self.sys, coef.level(), total);
        if coef.is_zero() {
            return Ok(out);
        }
        let mut work = vec![];
        let mut kwork = vec![];
        match &w.kapbar {
            Some((j, theta)) => {
                if self.sys == CoeffSystem::A {
                    if let Some(k) = self.kterm_from_word(w, *j, theta, coef)? {
                        kwork.push(k);
                    }
                }
            }
            None => work.push(self.expand_xibar(w, coef.clone())?),
        }
        let mut steps = 0;
        while let Some(t) = work.pop() {
            steps += 1;
            if steps > MAX_STEPS {
                return Err(Error::SizeBound(format!("normalizing {w} took more than {MAX_STEPS} steps")));
            }
            self.reduce(t, &mut out, &mut work, &mut kwork)?;
        }
        for k in kwork {
            self.reduce_k(k, &mut out)?;
        }
        Ok(out)
    }

    /// Replaces ξ̄^α by ∏ ξ_{i,1}^{n_{i,j}} λ̄^{…}, using
    /// ξ̄^{Ω_{i,j}} = ξ_{i,1} λ̄^{Ω_{i,j}−Ω_{i,1}, b} with b_i = j^{-1}, b = 1 elsewhere.
    fn expand_xibar(&self, w: &GeneratorWord, coef: PointClass) -> Result<Term> {
        let mut w = w.clone();
        let Some(alpha) = w.xibar.take() else {
            return Ok(Term { coef, w });
        };
        let pc = self.pc;
        let p = pc.p();
        for i in 0..p as usize {
            let a = alpha.comp(i as i64);
            if pc.is_two() {
                w.n[i] += a.mult(1) / 2;
                continue;
            }
            for j in 1..=pc.h() {
                let c = a.mult(j);
                if c == 0 {
                    continue;
                }
                w.n[i] += c;
                if j > 1 {
                    let d = &GradingROPi::omega(pc, i as i64, j as i64) - &GradingROPi::omega(pc, i as i64, 1);
                    w.beta += &(c * d);
                    let jinv = inv_mod(j as i64, p);
                    for _ in 0..c {
                        w.b[i] = md(w.b[i] * jinv, p);
                    }
                }
            }
        }
        Ok(Term { coef, w })
    }

    fn reduce(&self, t: Term, out: &mut BClass, work: &mut Vec<Term>, kwork: &mut Vec<KTerm>) -> Result<()> {
        let Term { mut coef, w } = t;
        let mut w = w.paired();
        let p = self.pc.p() as usize;
        let xi1 = gens::xi(self.pc, self.ring(), 1)?;
        loop {
            if coef.is_zero() {
                return Ok(());
            }
            if (0..p).all(|i| w.q[i] + w.n[i] > 0) {
                for i in 0..p {
                    if w.n[i] > 0 {
                        w.n[i] -= 1;
                    } else {
                        w.q[i] -= 1;
                        w.m[i] += 1;
                    }
                }
                coef = coef.mul(&xi1)?;
                continue;
            }
            let order = word_order(&w);
            let free = order.iter().filter(|&&k| w.n[k] == 0).count();
            let qtot: i64 = w.q.iter().sum();
            let (from, to) = if qtot as usize >= free {
                let to = *order.iter().find(|&&k| w.q[k] == 0 && w.n[k] == 0).expect("some index is empty");
                let from = *order
                    .iter()
                    .rev()
                    .find(|&&k| w.q[k] >= 2 || (w.q[k] >= 1 && w.n[k] > 0))
                    .ok_or_else(|| Error::Normalize(format!("no pair to move in {w}")))?;
                (from, to)
            } else {
                let target = &order[..qtot as usize];
                let Some(&to) = target.iter().find(|&&k| w.q[k] == 0) else {
                    break;
                };
                let from = *order
                    .iter()
                    .rev()
                    .find(|&&k| w.q[k] >= 2 || (w.q[k] >= 1 && !target.contains(&k)))
                    .ok_or_else(|| Error::Normalize(format!("no pair to move in {w}")))?;
                (from, to)
            };
            self.pivot(from, to, &mut coef, &mut w, work)?;
        }
        self.center_and_emit(coef, w, out, kwork)
    }

    /// χ^i c·ξ_{i,1} = χ^j c·ξ_{j,1} λ̄^{γ,a} − e_{i−j} λ̄^{γ',b}.
    fn pivot(
        &self,
        i: usize,
        j: usize,
        coef: &mut PointClass,
        w: &mut GeneratorWord,
        work: &mut Vec<Term>,
    ) -> Result<()> {
        let pc = self.pc;
        let p = pc.p() as usize;
        let (ii, jj) = (i as i64, j as i64);
        let gamma = &pair_grading(pc, i) - &pair_grading(pc, j);
        let a = canonical_b(&gamma)?;
        let gamma2 = &pair_grading(pc, i) - &GradingROPi::constant(GradingROG::mk(pc, ii - jj));
        let bt: Vec<i64> = (0..p)
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
            .collect();
        if !b_valid(&gamma2, &bt) {
            return Err(Error::Normalize(format!("pivot {i} → {j}: b = {bt:?} is not in ν({gamma2})^-1")));
        }
        let mut w2 = w.clone();
        w2.q[i] -= 1;
        w2.beta += &gamma2;
        for k in 0..p {
            w2.b[k] *= bt[k];
        }
        let e = gens::euler(pc, self.ring(), ii - jj)?;
        work.push(Term { coef: -&coef.mul(&e)?, w: w2 });
        w.q[i] -= 1;
        w.q[j] += 1;
        w.beta += &gamma;
        for k in 0..p {
            w.b[k] *= a[k];
        }
        Ok(())
    }

    fn center_and_emit(
        &self,
        coef: PointClass,
        mut w: GeneratorWord,
        out: &mut BClass,
        kwork: &mut Vec<KTerm>,
    ) -> Result<()> {
        let pc = self.pc;
        let p = pc.p();
        let order = word_order(&w);
        let ki = *order.iter().find(|&&k| w.q[k] == 0).expect("admissible exponents");
        let c0 = w.beta.comp(ki as i64);
        let bk = w.b[ki];
        let lam = match self.sys {
            CoeffSystem::A => gens::lam(c0, bk)?,
            _ => gens::lam_rz(c0)?,
        };
        let main = coef.mul(&lam)?;
        let old_beta = w.beta.clone();
        let old_b = w.b.clone();
        w.beta = &w.beta - &GradingROPi::constant(c0);
        let binv = inv_mod(bk, p);
        w.b = old_b.iter().map(|&x| md(x * binv, p)).collect();
        if self.sys == CoeffSystem::A && coef.level() == Level::GG {
            for k in 0..p as usize {
                let r = exact_div(old_b[k] - bk * w.b[k], p)
                    .ok_or_else(|| Error::Normalize(format!("b = {old_b:?} incongruent at {k}")))?;
                if r != 0 {
                    if let Some(t) = self.kterm(&coef, r, k, &old_beta, &w)? {
                        kwork.push(t);
                    }
                }
            }
        }
        if !main.is_zero() {
            out.add_term(AdmissibleMonomial::new(w)?, &main)?;
        }
        Ok(())
    }

    /// coef·r·X·κ̄_j^θ with X the exponent part of `x`.
    fn kterm(
        &self,
        coef: &PointClass,
        r: i64,
        j: usize,
        theta: &GradingROPi,
        x: &GeneratorWord,
    ) -> Result<Option<KTerm>> {
        if coef.level() == Level::Ge {
            return Ok(None);
        }
        let y = theta.comp(j as i64);
        if y.fixed() != 0 {
            return Err(Error::Normalize(format!("κ̄ exponent {theta} has nonzero fixed dimension at {j}")));
        }
        let u = coef.mul(&gens::ekappa(Ring::S0Conc, y)?)?;
        if u.is_zero() || u.level() == Level::Ge {
            return Ok(None);
        }
        let c = exact_div(u.det().l, self.pc.p())
            .ok_or_else(|| Error::Normalize(format!("{u:?} is not a multiple of e^yκ")))?;
        Ok(Some(KTerm {
            c: r * c,
            j,
            m: x.m.clone(),
            q: x.q.clone(),
            n: x.n.clone(),
            theta: theta + &GradingROPi::constant(coef.grading()),
        }))
    }

    fn kterm_from_word(
        &self,
        w: &GeneratorWord,
        j: usize,
        theta: &GradingROPi,
        coef: &PointClass,
    ) -> Result<Option<KTerm>> {
        if w.xibar.as_ref().is_some_and(|a| !a.comp(j as i64).is_zero()) {
            return Ok(None);
        }
        let w = self.expand_xibar(w, coef.clone())?.w;
        let theta = &w.beta + theta;
        self.kterm(coef, w.b[j], j, &theta, &w)
    }

    fn reduce_k(&self, k: KTerm, out: &mut BClass) -> Result<()> {
        let pc = self.pc;
        let p = pc.p() as usize;
        let KTerm { mut c, j, mut m, mut q, mut n, mut theta } = k;
        for i in 0..p {
            let t = m[i].min(n[i]);
            m[i] -= t;
            n[i] -= t;
            q[i] += t;
        }
        if c == 0 || q[j] > 0 || n[j] > 0 {
            return Ok(());
        }
        for i in 0..p {
            for _ in 0..q[i] {
                c *= s(pc, j as i64 - i as i64);
                theta += &pair_grading(pc, i);
            }
            q[i] = 0;
        }
        let mut x = GeneratorWord::one(pc);
        x.m = m;
        x.n = n;
        let order = word_order(&x);
        let big_n = order.iter().filter(|&&k| x.n[k] == 0).count();
        let lstar = order.iter().position(|&k| k == j).expect("j is an index");
        debug_assert!(lstar < big_n);

        let mut words = vec![];
        let mut hs = vec![];
        let mut tmat = vec![vec![0i64; big_n]; big_n];
        let mut acc = GradingROPi::zero(pc);
        for t in 0..big_n {
            let r = &theta - &acc;
            let h = r.comp(order[t] as i64);
            let beta = &r - &GradingROPi::constant(h);
            let a = canonical_b(&beta)?;
            for l in t..big_n {
                let sign: i64 = order[..t].iter().map(|&ki| s(pc, order[l] as i64 - ki as i64)).product();
                tmat[t][l] = a[order[l]] * sign;
            }
            let mut wt = x.clone();
            for &ki in &order[..t] {
                wt.q[ki] = 1;
            }
            wt.beta = beta;
            wt.b = a;
            words.push(AdmissibleMonomial::new(wt)?);
            hs.push(h);
            acc += &pair_grading(pc, order[t]);
        }
        let row = inverse_row(&tmat, lstar)?;
        for t in 0..big_n {
            let coef_t = row[t] * c;
            if coef_t != 0 {
                let e = gens::ekappa(Ring::S0, hs[t])?.scale(coef_t);
                out.add_term(words[t].clone(), &e)?;
            }
        }
        Ok(())
    }

    /// x·y.
    pub fn bmul(&self, x: &BClass, y: &BClass) -> Result<BClass> {
        if x.sys() != self.sys || y.sys() != self.sys {
            return Err(Error::InvalidParam("classes from a different coefficient system".into()));
        }
        let level = if x.level() == Level::Ge || y.level() == Level::Ge { Level::Ge } else { Level::GG };
        let mut out = BClass::zero(self.sys, level, x.grading() + y.grading());
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                let (sc, w) = m1.word().mul(m2.word());
                let coef = c1.mul(c2)?.scale(sc);
                let part = self.normalize(&w, &coef)?;
                out = add_loose(out, &part)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, x: &BClass, e: u32) -> Result<BClass> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.bmul(&acc, x)?;
        }
        Ok(acc)
    }

    fn eta_ring(&self) -> Ring {
        self.ring()
    }

    /// η of a word (coefficient 1), computed from the images of its factors.
    pub fn eta_word(&self, w: &GeneratorWord) -> Result<FixedRingClass> {
        let mut acc = FixedRingClass::one(self.pc, self.eta_ring())?;
        for (g, e) in w.factors() {
            let img = eta_of(self.pc, self.eta_ring(), &g)?;
            for _ in 0..e {
                acc = acc.mul(&img)?;
            }
        }
        Ok(acc)
    }

    pub fn eta(&self, x: &BClass) -> Result<FixedRingClass> {
        let mut out = FixedRingClass::zero(self.eta_ring(), x.level(), x.grading().clone());
        for (m, c) in x.terms() {
            let img = self.eta_word(m.word())?.mul_point(c)?;
            out = out.checked_add(&img)?;
        }
        Ok(out)
    }

    /// The image of an A-coefficient class under A → R Z.
    pub fn quotient_rz(x: &BClass) -> Result<BClass> {
        if x.sys() != CoeffSystem::A {
            return Err(Error::InvalidParam("the quotient map starts from A coefficients".into()));
        }
        x.map_coeffs(CoeffSystem::RZ, quotient_map)
    }
}

/// Adds classes that may differ in level because one of them is zero.
fn add_loose(a: BClass, b: &BClass) -> Result<BClass> {
    if b.is_zero() {
        return Ok(a);
    }
    if a.is_zero() && a.level() != b.level() {
        return Ok(b.clone());
    }
    a.checked_add(b)
}

/// Row `r` of the inverse of an upper triangular integer matrix with ±1 on
/// the diagonal.
fn inverse_row(t: &[Vec<i64>], r: usize) -> Result<Vec<i64>> {
    let n = t.len();
    // Solve x·T = e_r for the row vector x.
    let mut x = vec![0i64; n];
    for col in 0..n {
        let d = t[col][col];
        if d.abs() != 1 {
            return Err(Error::Normalize(format!("κ̄ system has diagonal entry {d}")));
        }
        let target = i64::from(col == r);
        let s: i64 = (0..col).map(|k| x[k] * t[k][col]).sum();
        x[col] = (target - s) * d;
    }
    Ok(x)
}
