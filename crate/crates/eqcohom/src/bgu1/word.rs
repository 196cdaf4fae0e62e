//! Words in the generators χ^i c, ξ_{i,1}, ξ̄^α, λ̄^{β,b} and κ̄_k.

use crate::arith::{inv_mod, md};
use crate::error::{Error, Result};
use crate::fixed_ring::BGen;
use crate::gradings::{nu, GradingROPi, PrimeConfig};
use serde::Serialize;
use std::fmt;

/// |χ^i c| = χ^i ω_G^*.
pub fn chic_grading(pc: PrimeConfig, i: usize) -> GradingROPi {
    GradingROPi::omega_star(pc).chi(i as i64)
}

/// |ξ_{i,1}| = Ω_{i,1}.
pub fn xi1_grading(pc: PrimeConfig, i: usize) -> GradingROPi {
    GradingROPi::omega(pc, i as i64, 1)
}

/// |χ^i c·ξ_{i,1}|. All its fixed dimensions are 0.
pub fn pair_grading(pc: PrimeConfig, i: usize) -> GradingROPi {
    &chic_grading(pc, i) + &xi1_grading(pc, i)
}

/// s(k) with the convention s ≡ 1 for p = 2.
pub fn s(pc: PrimeConfig, k: i64) -> i64 {
    if pc.is_two() {
        1
    } else {
        pc.sign_s(k).unwrap_or(1)
    }
}

/// The representative in [1, p−1] of ν(β_k)^{-1}, for each k.
pub fn canonical_b(beta: &GradingROPi) -> Result<Vec<i64>> {
    let p = beta.p();
    beta.comps().iter().map(|c| Ok(inv_mod(nu(c)?, p))).collect()
}

pub fn b_valid(beta: &GradingROPi, b: &[i64]) -> bool {
    let p = beta.p();
    b.len() == p as usize && beta.comps().iter().zip(b).all(|(c, &bk)| matches!(nu(c), Ok(n) if md(bk * n - 1, p) == 0))
}

/// (∏(χ^i c)^{m_i})(∏(χ^i c·ξ_{i,1})^{q_i})(∏ξ_{i,1}^{n_i}) ξ̄^α λ̄^{β,b} κ̄_k^θ.
///
/// The κ̄ factor is e^{θ_k} κ̄_k^{θ−θ_k} for θ with all fixed dimensions 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeneratorWord {
    pub m: Vec<i64>,
    pub q: Vec<i64>,
    pub n: Vec<i64>,
    pub beta: GradingROPi,
    pub b: Vec<i64>,
    pub xibar: Option<GradingROPi>,
    pub kapbar: Option<(usize, GradingROPi)>,
}

impl GeneratorWord {
    pub fn one(pc: PrimeConfig) -> Self {
        let p = pc.p() as usize;
        Self {
            m: vec![0; p],
            q: vec![0; p],
            n: vec![0; p],
            beta: GradingROPi::zero(pc),
            b: vec![1; p],
            xibar: None,
            kapbar: None,
        }
    }

    pub fn pc(&self) -> PrimeConfig {
        self.beta.pc()
    }

    fn index(pc: PrimeConfig, i: i64) -> usize {
        md(i, pc.p()) as usize
    }

    pub fn chic(pc: PrimeConfig, i: i64) -> Self {
        let mut w = Self::one(pc);
        w.m[Self::index(pc, i)] = 1;
        w
    }

    /// ξ_{i,1}.
    pub fn xi(pc: PrimeConfig, i: i64) -> Self {
        let mut w = Self::one(pc);
        w.n[Self::index(pc, i)] = 1;
        w
    }

    /// χ^i c·ξ_{i,1}.
    pub fn pair(pc: PrimeConfig, i: i64) -> Self {
        let mut w = Self::one(pc);
        w.q[Self::index(pc, i)] = 1;
        w
    }

    pub fn xibar(alpha: GradingROPi) -> Result<Self> {
        if !alpha.is_ro_plus() {
            return Err(Error::InvalidParam(format!("ξ̄^α needs α ∈ RO_+(Π), got {alpha}")));
        }
        let mut w = Self::one(alpha.pc());
        w.xibar = Some(alpha);
        Ok(w)
    }

    pub fn lambar(beta: GradingROPi, b: Vec<i64>) -> Result<Self> {
        if !beta.is_ro0() {
            return Err(Error::NotInRo0(beta.to_string()));
        }
        if !b_valid(&beta, &b) {
            return Err(Error::BadCongruence(format!("b = {b:?} is not in ν({beta})^-1")));
        }
        let mut w = Self::one(beta.pc());
        w.beta = beta;
        w.b = b;
        Ok(w)
    }

    /// e^{θ_k} κ̄_k^{θ−θ_k}.
    pub fn kapbar(k: usize, theta: GradingROPi) -> Result<Self> {
        let pc = theta.pc();
        if k >= pc.p() as usize || theta.fixed_dims().iter().any(|&f| f != 0) {
            return Err(Error::InvalidParam(format!("κ̄_{k} needs k < p and all fixed dimensions 0, got {theta}")));
        }
        let mut w = Self::one(pc);
        w.kapbar = Some((k, theta));
        Ok(w)
    }

    /// Moves min(m_i, n_i) into q_i.
    pub fn paired(mut self) -> Self {
        for i in 0..self.m.len() {
            let t = self.m[i].min(self.n[i]);
            self.m[i] -= t;
            self.n[i] -= t;
            self.q[i] += t;
        }
        self
    }

    /// The product as words: a scalar (p for κ̄_k·κ̄_k, 0 for κ̄_k·κ̄_l with
    /// k ≠ l) and the combined word.
    pub fn mul(&self, o: &Self) -> (i64, Self) {
        let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
        let p = self.pc().p();
        let b = self.b.iter().zip(&o.b).map(|(x, y)| x * y).collect();
        let xibar = match (&self.xibar, &o.xibar) {
            (Some(a), Some(c)) => Some(a + c),
            (a, c) => a.clone().or_else(|| c.clone()),
        };
        let (scalar, kapbar) = match (&self.kapbar, &o.kapbar) {
            (Some((k, t)), Some((l, u))) => (if k == l { p } else { 0 }, Some((*k, t + u))),
            (a, c) => (1, a.clone().or_else(|| c.clone())),
        };
        let w = Self {
            m: add(&self.m, &o.m),
            q: add(&self.q, &o.q),
            n: add(&self.n, &o.n),
            beta: &self.beta + &o.beta,
            b,
            xibar,
            kapbar,
        };
        (scalar, w)
    }

    pub fn grading(&self) -> GradingROPi {
        let pc = self.pc();
        let mut g = self.beta.clone();
        for i in 0..self.m.len() {
            g += &(self.m[i] * chic_grading(pc, i));
            g += &(self.q[i] * pair_grading(pc, i));
            g += &(self.n[i] * xi1_grading(pc, i));
        }
        if let Some(a) = &self.xibar {
            g += a;
        }
        if let Some((_, t)) = &self.kapbar {
            g += t;
        }
        g
    }

    /// Σ m_i + 2q_i + n_i.
    pub fn degree(&self) -> i64 {
        (0..self.m.len()).map(|i| self.m[i] + 2 * self.q[i] + self.n[i]).sum()
    }

    pub fn is_plain(&self) -> bool {
        self.xibar.is_none() && self.kapbar.is_none()
    }

    /// The word as a list of generators, for evaluation under η.
    pub fn factors(&self) -> Vec<(BGen, i64)> {
        let pc = self.pc();
        let mut out = vec![];
        let mut xi = GradingROPi::zero(pc);
        for i in 0..self.m.len() {
            let c = self.m[i] + self.q[i];
            if c > 0 {
                out.push((BGen::ChiC(i as i64), c));
            }
            xi += &((self.q[i] + self.n[i]) * xi1_grading(pc, i));
        }
        if let Some(a) = &self.xibar {
            xi += a;
        }
        if !xi.is_zero() {
            out.push((BGen::XiBar(xi), 1));
        }
        if !self.beta.is_zero() || self.b.iter().any(|&x| x != 1) {
            out.push((BGen::LamBar(self.beta.clone(), self.b.clone()), 1));
        }
        if let Some((k, t)) = &self.kapbar {
            out.push((BGen::KapBar(*k, t.clone()), 1));
        }
        out
    }
}

fn pow_str(name: &str, e: i64) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

fn chic_name(i: usize) -> String {
    if i == 0 {
        "c".into()
    } else {
        format!("chic({i})")
    }
}

/// Comma-separated components, the form accepted by `lambar(...; ...)`.
pub fn ropi_literal(a: &GradingROPi) -> String {
    a.to_string()
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec![];
        for i in 0..self.m.len() {
            if self.m[i] > 0 {
                parts.push(pow_str(&chic_name(i), self.m[i]));
            }
        }
        for i in 0..self.q.len() {
            if self.q[i] > 0 {
                let pair = format!("{}*xi({i},1)", chic_name(i));
                parts.push(if self.q[i] == 1 { pair } else { format!("({pair})^{}", self.q[i]) });
            }
        }
        for i in 0..self.n.len() {
            if self.n[i] > 0 {
                parts.push(pow_str(&format!("xi({i},1)"), self.n[i]));
            }
        }
        if let Some(a) = &self.xibar {
            parts.push(format!("xibar{}", ropi_literal(a)));
        }
        if !self.beta.is_zero() || self.b.iter().any(|&x| x != 1) {
            let b: Vec<String> = self.b.iter().map(|x| x.to_string()).collect();
            let inner = ropi_literal(&self.beta);
            parts.push(format!("lambar({}; {})", &inner[1..inner.len() - 1], b.join(",")));
        }
        if let Some((k, t)) = &self.kapbar {
            let inner = ropi_literal(t);
            parts.push(format!("kapbar({k}; {})", &inner[1..inner.len() - 1]));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
