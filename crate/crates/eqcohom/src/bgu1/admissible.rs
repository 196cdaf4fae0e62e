//! Admissible monomials: the basis of H(B₊) over the cohomology of a point.

use super::word::{canonical_b, chic_grading, xi1_grading, GeneratorWord};
use crate::error::{Error, Result};
use crate::gradings::{fixed_dim_order_of, GradingROPi};
use serde::Serialize;
use std::fmt;

/// The first condition an admissible monomial fails. Condition 0 means the
/// word carries a ξ̄ or κ̄ factor, which no basis element has.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: u8,
    pub detail: String,
}

fn violation(condition: u8, detail: impl Into<String>) -> Violation {
    Violation { condition, detail: detail.into() }
}

/// The order k_0, k_1, … of indices by m_k − n_k, highest first.
pub fn word_order(w: &GeneratorWord) -> Vec<usize> {
    let d: Vec<i64> = w.m.iter().zip(&w.n).map(|(m, n)| m - n).collect();
    fixed_dim_order_of(&d)
}

pub fn is_admissible(w: &GeneratorWord) -> std::result::Result<(), Violation> {
    let p = w.pc().p();
    if !w.is_plain() {
        return Err(violation(0, "ξ̄ and κ̄ factors are not part of a basis monomial"));
    }
    let np = w.m.len();
    for i in 0..np {
        if w.m[i] < 0 || w.n[i] < 0 || !(0..=1).contains(&w.q[i]) {
            return Err(violation(1, format!("exponents at index {i} out of range")));
        }
    }
    for i in 0..np {
        if (w.m[i] > 0 || w.q[i] > 0) && w.n[i] != 0 {
            return Err(violation(2, format!("n_{i} ≠ 0 alongside χ^{i}c")));
        }
    }
    if !(0..np).any(|i| w.q[i] == 0 && w.n[i] == 0) {
        return Err(violation(3, "no index with ε_i = 0 = n_i"));
    }
    let order = word_order(w);
    let eps: Vec<i64> = order.iter().map(|&k| w.q[k]).collect();
    if let Some(pos) = eps.iter().position(|&e| e == 0) {
        if eps[pos..].iter().any(|&e| e != 0) {
            return Err(violation(4, format!("ε not an initial segment of the order {order:?}")));
        }
    }
    if let Some(i) = w.b.iter().position(|&b| !(1..p).contains(&b)) {
        return Err(violation(5, format!("b_{i} = {} outside [1, p−1]", w.b[i])));
    }
    let ki = order[eps.iter().position(|&e| e == 0).expect("condition 3 holds")];
    if !w.beta.comp(ki as i64).is_zero() {
        return Err(violation(6, format!("β_{ki} ≠ 0")));
    }
    Ok(())
}

/// A word that has passed [`is_admissible`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct AdmissibleMonomial(GeneratorWord);

impl AdmissibleMonomial {
    pub fn new(w: GeneratorWord) -> Result<Self> {
        is_admissible(&w).map_err(|v| {
            Error::InvalidParam(format!("{w} is not admissible (condition {}): {}", v.condition, v.detail))
        })?;
        if !super::word::b_valid(&w.beta, &w.b) {
            return Err(Error::BadCongruence(format!("b of {w} is not in ν(β)^-1")));
        }
        Ok(Self(w))
    }

    pub fn one(pc: crate::gradings::PrimeConfig) -> Self {
        Self(GeneratorWord::one(pc))
    }

    pub fn word(&self) -> &GeneratorWord {
        &self.0
    }

    pub fn grading(&self) -> GradingROPi {
        self.0.grading()
    }

    /// ‖x‖ = Σ 2(m_i + ε_i).
    pub fn int_dim(&self) -> i64 {
        self.0.m.iter().zip(&self.0.q).map(|(m, e)| 2 * (m + e)).sum()
    }

    /// Position I in the order of the first index with ε = 0.
    pub fn first_free(&self) -> usize {
        let order = word_order(&self.0);
        order.iter().position(|&k| self.0.q[k] == 0).expect("admissible")
    }
}

impl fmt::Display for AdmissibleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for AdmissibleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Builds the admissible monomial with the given m, ε, n lying in the coset
/// α + RO(G): β is the unique RO_0(Π) element making the grading land in the
/// coset with β_{k_I} = 0.
pub fn monomial_in_coset(alpha: &GradingROPi, m: &[i64], eps: &[i64], n: &[i64]) -> Result<AdmissibleMonomial> {
    let pc = alpha.pc();
    let mut s = GradingROPi::zero(pc);
    for i in 0..m.len() {
        s += &((m[i] + eps[i]) * chic_grading(pc, i));
        s += &((eps[i] + n[i]) * xi1_grading(pc, i));
    }
    let r = alpha - &s;
    let mut w = GeneratorWord::one(pc);
    w.m = m.to_vec();
    w.q = eps.to_vec();
    w.n = n.to_vec();
    let order = word_order(&w);
    let ki = *order.iter().find(|&&k| eps[k] == 0).ok_or_else(|| Error::InvalidParam("every ε is 1".into()))?;
    let beta = &r - &GradingROPi::constant(r.comp(ki as i64));
    if !beta.is_ro0() {
        return Err(Error::GradingMismatch(format!("{alpha} and the exponents give different cosets")));
    }
    w.b = canonical_b(&beta)?;
    w.beta = beta;
    AdmissibleMonomial::new(w)
}

/// All admissible monomials with grading in α + RO(G) and fixed-dimension
/// offset N ≤ `n_max`, ordered by integer dimension.
pub fn enumerate_admissible(alpha: &GradingROPi, n_max: i64) -> Result<Vec<AdmissibleMonomial>> {
    let a = alpha.fixed_dims();
    let p = a.len();
    if a.iter().any(|x| (x - a[0]) % 2 != 0) {
        return Err(Error::MalformedGrading(format!("fixed dimensions of {alpha} differ in parity")));
    }
    let order = fixed_dim_order_of(&a);
    let mut out = vec![];
    let mut big_n = -a[order[0]];
    while big_n <= n_max {
        let mut m = vec![0; p];
        let mut n = vec![0; p];
        for k in 0..p {
            let v = a[k] + big_n;
            if v >= 0 {
                m[k] = v / 2;
            } else {
                n[k] = -v / 2;
            }
        }
        let j = (0..p).filter(|&k| a[k] + big_n >= 0).count();
        for t in 0..j {
            let mut eps = vec![0; p];
            for &k in &order[..t] {
                eps[k] = 1;
            }
            out.push(monomial_in_coset(alpha, &m, &eps, &n)?);
        }
        big_n += 2;
    }
    Ok(out)
}

/// The first `count` admissible monomials of the coset, by integer dimension.
pub fn admissible_basis(alpha: &GradingROPi, count: usize) -> Result<Vec<AdmissibleMonomial>> {
    let a = alpha.fixed_dims();
    let spread = a.iter().max().unwrap() - a.iter().min().unwrap();
    let n_max = -a.iter().max().unwrap() + spread + 2 * count as i64 + 2;
    let mut v = enumerate_admissible(alpha, n_max)?;
    v.truncate(count);
    Ok(v)
}
