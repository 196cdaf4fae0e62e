//! Gradings: RO(G) for G = Z/p and RO(Π_G B) for B = B_GU(1).
//!
//! An element of RO(G) is stored as integer multiplicities: `n0` copies of the
//! trivial representation and `m[k-1]` copies of the k-th nontrivial
//! irreducible (Λ when p = 2, M_k for 1 ≤ k ≤ (p-1)/2 when p is odd). An
//! element of RO(Π_G B) is a p-tuple of RO(G) elements of equal dimension.

use crate::arith::{self, MAX_H};
use crate::burnside_mackey::burnside::BurnsideElement;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeConfig {
    p: u32,
}

impl PrimeConfig {
    pub fn new(p: i64) -> Result<Self> {
        if !arith::is_prime(p) || p > arith::MAX_P {
            return Err(Error::BadPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn p(&self) -> i64 {
        self.p as i64
    }

    pub fn is_two(&self) -> bool {
        self.p == 2
    }

    /// Number of nontrivial irreducible multiplicities stored per RO(G) element.
    pub fn h(&self) -> usize {
        if self.p == 2 {
            1
        } else {
            (self.p as usize - 1) / 2
        }
    }

    /// Real dimension of each nontrivial irreducible: 1 for Λ, 2 for M_k.
    pub fn irr_dim(&self) -> i64 {
        if self.p == 2 {
            1
        } else {
            2
        }
    }

    /// s(i) = 1 if i mod p lies in [1, p/2], −1 otherwise.
    pub fn sign_s(&self, i: i64) -> Result<i64> {
        let p = self.p();
        let r = arith::md(i, p);
        if r == 0 {
            return Err(Error::ZeroIndex(i));
        }
        Ok(if 2 * r <= p { 1 } else { -1 })
    }

    /// Canonical index of `k` in `1..=h` (k and p−k identified); `None` if k ≡ 0.
    pub fn canon(&self, k: i64) -> Option<usize> {
        let p = self.p();
        let r = arith::md(k, p);
        if r == 0 {
            None
        } else {
            Some(r.min(p - r) as usize)
        }
    }
}

pub fn sign_s(p: PrimeConfig, i: i64) -> Result<i64> {
    p.sign_s(i)
}

/// An element of RO(G).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingROG {
    pub pc: PrimeConfig,
    pub n0: i64,
    m: [i64; MAX_H],
}

impl GradingROG {
    pub fn zero(pc: PrimeConfig) -> Self {
        Self { pc, n0: 0, m: [0; MAX_H] }
    }

    pub fn new(pc: PrimeConfig, n0: i64, m: &[i64]) -> Result<Self> {
        if m.len() != pc.h() {
            return Err(Error::MalformedGrading(format!(
                "expected {} multiplicities for p={}, got {}",
                pc.h(),
                pc.p(),
                m.len()
            )));
        }
        let mut g = Self::zero(pc);
        g.n0 = n0;
        g.m[..m.len()].copy_from_slice(m);
        Ok(g)
    }

    /// `n` copies of the trivial representation.
    pub fn trivial(pc: PrimeConfig, n: i64) -> Self {
        let mut g = Self::zero(pc);
        g.n0 = n;
        g
    }

    /// Λ (p = 2).
    pub fn lambda(pc: PrimeConfig) -> Self {
        assert!(pc.is_two(), "Λ only exists for p = 2");
        let mut g = Self::zero(pc);
        g.m[0] = 1;
        g
    }

    /// M_k: the complex representation z ↦ ζ^k z as a real 2-plane. M_0 = 2,
    /// M_k = M_{p−k}, and for p = 2 M_1 = 2Λ.
    pub fn mk(pc: PrimeConfig, k: i64) -> Self {
        let mut g = Self::zero(pc);
        match pc.canon(k) {
            None => g.n0 = 2,
            Some(_) if pc.is_two() => g.m[0] = 2,
            Some(c) => g.m[c - 1] = 1,
        }
        g
    }

    pub fn mult(&self, k: usize) -> i64 {
        self.m[k - 1]
    }

    pub fn mults(&self) -> &[i64] {
        &self.m[..self.pc.h()]
    }

    pub fn p(&self) -> i64 {
        self.pc.p()
    }

    pub fn dim(&self) -> i64 {
        self.n0 + self.pc.irr_dim() * self.mults().iter().sum::<i64>()
    }

    pub fn fixed(&self) -> i64 {
        self.n0
    }

    pub fn is_zero(&self) -> bool {
        self.n0 == 0 && self.m.iter().all(|&x| x == 0)
    }

    pub fn is_iev(&self) -> bool {
        self.dim() == 0 && self.n0 % 2 == 0
    }

    pub fn is_ro0(&self) -> bool {
        self.dim() == 0 && self.n0 == 0
    }

    /// Σ n_k (M_k − 2) with all n_k ≥ 0.
    pub fn is_ro_plus(&self) -> bool {
        if !self.is_iev() {
            return false;
        }
        if self.pc.is_two() {
            self.m[0] >= 0 && self.m[0] % 2 == 0
        } else {
            self.mults().iter().all(|&x| x >= 0)
        }
    }

    /// ν extended multiplicatively to all of RO(G) by ν(1) = ν(M_1) = 1,
    /// ν(M_k) = k. On RO_0(G) it is the ν of the definition.
    pub fn nu_ext(&self) -> i64 {
        let p = self.p();
        if self.pc.is_two() {
            return 1;
        }
        let mut r = 1;
        for k in 2..=self.pc.h() {
            r = r * arith::pow_mod(k as i64, self.m[k - 1], p) % p;
        }
        r
    }

    /// The RO_0(G) part relative to ⟨1, M_1⟩: Σ_{k≥2} n_k (M_k − M_1).
    pub fn ro0_part(&self) -> Self {
        let mut g = Self::zero(self.pc);
        if self.pc.is_two() {
            return g;
        }
        for k in 2..=self.pc.h() {
            g.m[k - 1] = self.m[k - 1];
            g.m[0] -= self.m[k - 1];
        }
        g
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.pc, o.pc, "mixing gradings for different primes");
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        if self.pc != o.pc {
            return Err(Error::PrimeMismatch(self.pc.p, o.pc.p));
        }
        Ok(*self + *o)
    }
}

impl Add for GradingROG {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self.check(&o);
        self.n0 += o.n0;
        for k in 0..MAX_H {
            self.m[k] += o.m[k];
        }
        self
    }
}

impl AddAssign for GradingROG {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Neg for GradingROG {
    type Output = Self;
    fn neg(mut self) -> Self {
        self.n0 = -self.n0;
        for x in self.m.iter_mut() {
            *x = -*x;
        }
        self
    }
}

impl Sub for GradingROG {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl SubAssign for GradingROG {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Mul<GradingROG> for i64 {
    type Output = GradingROG;
    fn mul(self, mut g: GradingROG) -> GradingROG {
        g.n0 *= self;
        for x in g.m.iter_mut() {
            *x *= self;
        }
        g
    }
}

impl fmt::Display for GradingROG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = Vec::new();
        if self.n0 != 0 {
            terms.push((self.n0, String::new()));
        }
        for k in 1..=self.pc.h() {
            let c = self.m[k - 1];
            if c != 0 {
                let name = if self.pc.is_two() { "L".to_string() } else { format!("M{k}") };
                terms.push((c, name));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, name)) in terms.iter().enumerate() {
            let (sign, a) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if name.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{a}{name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradingROG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

#[derive(Serialize, Deserialize)]
struct RogJson {
    p: i64,
    n0: i64,
    m: Vec<i64>,
}

impl Serialize for GradingROG {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RogJson { p: self.p(), n0: self.n0, m: self.mults().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradingROG {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RogJson::deserialize(d)?;
        let pc = PrimeConfig::new(j.p).map_err(serde::de::Error::custom)?;
        GradingROG::new(pc, j.n0, &j.m).map_err(serde::de::Error::custom)
    }
}

/// Subset membership flags for an RO(G) or RO(Π_G B) element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub in_iev: bool,
    pub in_ro0: bool,
    pub in_ro_plus: bool,
}

pub fn classify(a: &GradingROG) -> Classification {
    Classification { in_iev: a.is_iev(), in_ro0: a.is_ro0(), in_ro_plus: a.is_ro_plus() }
}

/// ν(α) ∈ (Z/p)^× for α ∈ RO_0(G), as a representative in [1, p−1].
pub fn nu(a: &GradingROG) -> Result<i64> {
    if !a.is_ro0() {
        return Err(Error::NotInRo0(a.to_string()));
    }
    Ok(a.nu_ext())
}

/// An element of RO(Π_G B): one RO(G) element per component B^G_k.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingROPi {
    comps: Vec<GradingROG>,
}

/// Coordinates of an RO(Π_G B) element in the standard basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisCoords {
    /// p odd: α = one·1 + Σ omega[i][j-1] Ω_{i,j}.
    Odd { one: i64, omega: Vec<Vec<i64>> },
    /// p = 2: α = one·1 + lambda·Λ + omega·Ω.
    Two { one: i64, lambda: i64, omega: i64 },
}

impl GradingROPi {
    pub fn new(comps: Vec<GradingROG>) -> Result<Self> {
        let g = Self { comps };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let pc = self.comps.first().ok_or_else(|| Error::MalformedGrading("empty tuple".into()))?.pc;
        if self.comps.len() != pc.p() as usize {
            return Err(Error::MalformedGrading(format!("need {} components, got {}", pc.p(), self.comps.len())));
        }
        if self.comps.iter().any(|c| c.pc != pc) {
            return Err(Error::MalformedGrading("components for different primes".into()));
        }
        let d = self.comps[0].dim();
        if self.comps.iter().any(|c| c.dim() != d) {
            return Err(Error::MalformedGrading(format!("unequal dimensions in {self}")));
        }
        let par = self.comps[0].n0.rem_euclid(2);
        if self.comps.iter().any(|c| c.n0.rem_euclid(2) != par) {
            return Err(Error::MalformedGrading(format!("fixed dimensions of different parity in {self}")));
        }
        Ok(())
    }

    pub fn zero(pc: PrimeConfig) -> Self {
        Self { comps: vec![GradingROG::zero(pc); pc.p() as usize] }
    }

    /// The image of an RO(G) element under RO(G) → RO(Π_G B).
    pub fn constant(a: GradingROG) -> Self {
        Self { comps: vec![a; a.p() as usize] }
    }

    pub fn trivial(pc: PrimeConfig, n: i64) -> Self {
        Self::constant(GradingROG::trivial(pc, n))
    }

    pub fn pc(&self) -> PrimeConfig {
        self.comps[0].pc
    }

    pub fn p(&self) -> i64 {
        self.pc().p()
    }

    pub fn comp(&self, k: i64) -> GradingROG {
        self.comps[arith::md(k, self.p()) as usize]
    }

    pub fn comps(&self) -> &[GradingROG] {
        &self.comps
    }

    pub fn dim(&self) -> i64 {
        self.comps[0].dim()
    }

    pub fn fixed_dims(&self) -> Vec<i64> {
        self.comps.iter().map(|c| c.n0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.comps.iter().all(|c| *c == self.comps[0])
    }

    pub fn is_iev(&self) -> bool {
        self.comps.iter().all(|c| c.is_iev())
    }

    pub fn is_ro0(&self) -> bool {
        self.comps.iter().all(|c| c.is_ro0())
    }

    pub fn is_ro_plus(&self) -> bool {
        self.comps.iter().all(|c| c.is_ro_plus())
    }

    /// Ω_{i,j}: M_j − 2 in component i and 0 elsewhere. j ≡ 0 gives 0.
    pub fn omega(pc: PrimeConfig, i: i64, j: i64) -> Self {
        let mut g = Self::zero(pc);
        let idx = arith::md(i, pc.p()) as usize;
        g.comps[idx] = GradingROG::mk(pc, j) - GradingROG::trivial(pc, 2);
        g
    }

    /// Ω (p = 2 only): (1 − Λ, Λ − 1).
    pub fn omega_two(pc: PrimeConfig) -> Self {
        assert!(pc.is_two());
        let one = GradingROG::trivial(pc, 1);
        let l = GradingROG::lambda(pc);
        Self { comps: vec![one - l, l - one] }
    }

    /// ω_G^*: the grading of the Euler class c, with component k equal to M_k
    /// (M_0 = 2).
    pub fn omega_star(pc: PrimeConfig) -> Self {
        Self { comps: (0..pc.p()).map(|k| GradingROG::mk(pc, k)).collect() }
    }

    /// χ^i: (χα)_k = α_{k−1}.
    pub fn chi(&self, i: i64) -> Self {
        let p = self.p();
        Self { comps: (0..p).map(|k| self.comp(k - i)).collect() }
    }

    pub fn basis_decompose(&self) -> Result<BasisCoords> {
        self.validate()?;
        let pc = self.pc();
        if pc.is_two() {
            let (a0, a1) = (self.comps[0], self.comps[1]);
            let c = (a0.n0 - a1.n0) / 2;
            let a = (a0.n0 + a1.n0) / 2;
            let b = a0.mult(1) + c;
            Ok(BasisCoords::Two { one: a, lambda: b, omega: c })
        } else {
            let omega = self.comps.iter().map(|c| c.mults().to_vec()).collect();
            Ok(BasisCoords::Odd { one: self.dim(), omega })
        }
    }

    pub fn reconstruct(pc: PrimeConfig, coords: &BasisCoords) -> Result<Self> {
        match coords {
            BasisCoords::Two { one, lambda, omega } => {
                if !pc.is_two() {
                    return Err(Error::MalformedGrading("p=2 coordinates for odd p".into()));
                }
                Ok(Self::trivial(pc, *one)
                    + Self::constant(*lambda * GradingROG::lambda(pc))
                    + *omega * Self::omega_two(pc))
            }
            BasisCoords::Odd { one, omega } => {
                if pc.is_two() || omega.len() != pc.p() as usize || omega.iter().any(|r| r.len() != pc.h()) {
                    return Err(Error::MalformedGrading("coordinate shape does not match p".into()));
                }
                let mut g = Self::trivial(pc, *one);
                for (i, row) in omega.iter().enumerate() {
                    for (j, &n) in row.iter().enumerate() {
                        g = g + n * Self::omega(pc, i as i64, j as i64 + 1);
                    }
                }
                Ok(g)
            }
        }
    }

    /// Indices ordered by fixed dimension, highest first, ties by smaller index.
    pub fn fixed_dim_order(&self) -> Vec<usize> {
        fixed_dim_order_of(&self.fixed_dims())
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.pc(), o.pc(), "mixing gradings for different primes");
    }
}

pub fn fixed_dim_order_of(fixed: &[i64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..fixed.len()).collect();
    idx.sort_by(|&a, &b| fixed[b].cmp(&fixed[a]).then(a.cmp(&b)));
    idx
}

pub fn chi(a: &GradingROPi, i: i64) -> GradingROPi {
    a.chi(i)
}

impl Add for GradingROPi {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}

impl<'a> Add<&'a GradingROPi> for &'a GradingROPi {
    type Output = GradingROPi;
    fn add(self, o: &GradingROPi) -> GradingROPi {
        self.check(o);
        GradingROPi { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| *a + *b).collect() }
    }
}

impl AddAssign<&GradingROPi> for GradingROPi {
    fn add_assign(&mut self, o: &GradingROPi) {
        self.check(o);
        for (a, b) in self.comps.iter_mut().zip(&o.comps) {
            *a += *b;
        }
    }
}

impl SubAssign<&GradingROPi> for GradingROPi {
    fn sub_assign(&mut self, o: &GradingROPi) {
        self.check(o);
        for (a, b) in self.comps.iter_mut().zip(&o.comps) {
            *a -= *b;
        }
    }
}

impl Neg for GradingROPi {
    type Output = Self;
    fn neg(self) -> Self {
        GradingROPi { comps: self.comps.into_iter().map(|a| -a).collect() }
    }
}

impl Sub for GradingROPi {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<'a> Sub<&'a GradingROPi> for &'a GradingROPi {
    type Output = GradingROPi;
    fn sub(self, o: &GradingROPi) -> GradingROPi {
        self.check(o);
        GradingROPi { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| *a - *b).collect() }
    }
}

impl Mul<GradingROPi> for i64 {
    type Output = GradingROPi;
    fn mul(self, g: GradingROPi) -> GradingROPi {
        GradingROPi { comps: g.comps.into_iter().map(|a| self * a).collect() }
    }
}

impl fmt::Display for GradingROPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GradingROPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for GradingROPi {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.comps.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradingROPi {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let comps = Vec::<GradingROG>::deserialize(d)?;
        GradingROPi::new(comps).map_err(serde::de::Error::custom)
    }
}

/// A unit of the Burnside ring governing graded commutativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignUnit(pub BurnsideElement);

impl SignUnit {
    pub fn one(p: i64) -> Self {
        SignUnit(BurnsideElement::one(p))
    }
    pub fn is_one(&self) -> bool {
        self.0 == BurnsideElement::one(self.0.p)
    }
    /// Image under ρ: A(G) → Z (augmentation).
    pub fn restrict(&self) -> i64 {
        self.0.eps()
    }
}

impl fmt::Display for SignUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.a == 1 && self.0.b == -1 {
            write!(f, "1-g")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

fn unit_from_exponents(p: i64, minus: i64, one_minus_g: i64) -> SignUnit {
    let mut u = BurnsideElement::one(p);
    if minus.rem_euclid(2) == 1 {
        u = -u;
    }
    if p == 2 && one_minus_g.rem_euclid(2) == 1 {
        u = u * (BurnsideElement::one(2) - BurnsideElement::g(2));
    }
    SignUnit(u)
}

/// γ(α, β) on RO(G).
pub fn gamma(a: &GradingROG, b: &GradingROG) -> SignUnit {
    assert_eq!(a.pc, b.pc, "mixing gradings for different primes");
    if a.pc.is_two() {
        unit_from_exponents(2, a.n0 * b.n0, a.mult(1) * b.mult(1))
    } else {
        unit_from_exponents(a.p(), a.n0 * b.n0, 0)
    }
}

/// γ(α, β) on RO(Π_G B), after decategorifying to the RO(G) formula.
pub fn gamma_pi(a: &GradingROPi, b: &GradingROPi) -> SignUnit {
    assert_eq!(a.pc(), b.pc(), "mixing gradings for different primes");
    if a.pc().is_two() {
        let (fa, fb) = (a.comps[0].n0, b.comps[0].n0);
        unit_from_exponents(2, fa * fb, (a.dim() - fa) * (b.dim() - fb))
    } else {
        unit_from_exponents(a.p(), a.dim() * b.dim(), 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(p: i64) -> PrimeConfig {
        PrimeConfig::new(p).unwrap()
    }

    #[test]
    fn dims() {
        let a = 3 * GradingROG::lambda(pc(2));
        assert_eq!((a.dim(), a.fixed()), (3, 0));
        let b = GradingROG::trivial(pc(5), 1) + 2 * GradingROG::mk(pc(5), 2);
        assert_eq!((b.dim(), b.fixed()), (5, 1));
        let w = GradingROPi::omega_star(pc(3));
        assert_eq!(w.dim(), 2);
        assert_eq!(w.fixed_dims(), vec![2, 0, 0]);
    }

    #[test]
    fn mk_aliases() {
        let p5 = pc(5);
        assert_eq!(GradingROG::mk(p5, 3), GradingROG::mk(p5, 2));
        assert_eq!(GradingROG::mk(p5, 0), GradingROG::trivial(p5, 2));
        assert_eq!(GradingROG::mk(pc(2), 1), 2 * GradingROG::lambda(pc(2)));
    }

    #[test]
    fn classification() {
        let p5 = pc(5);
        let z = GradingROG::zero(p5);
        assert_eq!(classify(&z), Classification { in_iev: true, in_ro0: true, in_ro_plus: true });
        let a = GradingROG::mk(p5, 2) - GradingROG::mk(p5, 1);
        let c = classify(&a);
        assert!(c.in_ro0 && !c.in_ro_plus);
        let o = GradingROPi::omega(pc(3), 1, 1);
        assert!(o.is_ro_plus());
    }

    #[test]
    fn nu_values() {
        let p5 = pc(5);
        assert_eq!(nu(&GradingROG::zero(p5)).unwrap(), 1);
        assert_eq!(nu(&(GradingROG::mk(p5, 2) - GradingROG::mk(p5, 1))).unwrap(), 2);
        let p7 = pc(7);
        let m = |k| GradingROG::mk(p7, k);
        let a = 2 * (m(3) - m(1)) + (m(2) - m(1));
        assert_eq!(nu(&a).unwrap(), 4);
        assert!(nu(&m(1)).is_err());
    }

    #[test]
    fn gamma_examples() {
        let l = GradingROG::lambda(pc(2));
        assert_eq!(gamma(&l, &l).to_string(), "1-g");
        let one = GradingROG::trivial(pc(3), 1);
        assert_eq!(gamma(&one, &one).0, -BurnsideElement::one(3));
        assert!(gamma(&GradingROG::zero(pc(3)), &one).is_one());
    }

    #[test]
    fn fixed_order() {
        assert_eq!(fixed_dim_order_of(&[0, 4, 2]), vec![1, 2, 0]);
        assert_eq!(fixed_dim_order_of(&[2, 2, 0]), vec![0, 1, 2]);
        assert_eq!(fixed_dim_order_of(&[1, 1, 1, 1, 1]), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn signs() {
        let p5 = pc(5);
        assert_eq!(p5.sign_s(2).unwrap(), 1);
        assert_eq!(p5.sign_s(3).unwrap(), -1);
        assert_eq!(p5.sign_s(7).unwrap(), 1);
        assert!(p5.sign_s(10).is_err());
        assert_eq!(pc(2).sign_s(1).unwrap(), 1);
    }

    #[test]
    fn omega_star_basis() {
        let p5 = pc(5);
        let w = GradingROPi::omega_star(p5);
        let mut expect = GradingROPi::trivial(p5, 2);
        for i in 1..5 {
            expect = expect + GradingROPi::omega(p5, i, i);
        }
        assert_eq!(w, expect);
        let p2 = pc(2);
        let w2 = GradingROPi::omega_star(p2);
        assert_eq!(w2.basis_decompose().unwrap(), BasisCoords::Two { one: 1, lambda: 1, omega: 1 });
    }

    #[test]
    fn chi_action() {
        let p3 = pc(3);
        assert_eq!(GradingROPi::omega(p3, 0, 1).chi(1), GradingROPi::omega(p3, 1, 1));
        let c = GradingROPi::trivial(p3, 4);
        assert_eq!(c.chi(1), c);
        let p2 = pc(2);
        assert_eq!(GradingROPi::omega_two(p2).chi(1), -GradingROPi::omega_two(p2));
        // Ω_{0,1} = −1 + Λ − Ω and Ω_{1,1} = −1 + Λ + Ω
        let l = GradingROPi::constant(GradingROG::lambda(p2));
        let one = GradingROPi::trivial(p2, 1);
        assert_eq!(GradingROPi::omega(p2, 0, 1), &(&l - &one) - &GradingROPi::omega_two(p2));
        assert_eq!(GradingROPi::omega(p2, 1, 1), &(&l - &one) + &GradingROPi::omega_two(p2));
    }

    #[test]
    fn invalid_tuples() {
        let p3 = pc(3);
        let bad = GradingROPi::new(vec![GradingROG::trivial(p3, 1), GradingROG::zero(p3), GradingROG::zero(p3)]);
        assert!(bad.is_err());
        let p2 = pc(2);
        let bad2 = GradingROPi::new(vec![GradingROG::trivial(p2, 1), GradingROG::lambda(p2)]);
        assert!(bad2.is_err());
    }

    #[test]
    fn json_shape() {
        let g = GradingROG::new(pc(5), 2, &[3, -1]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"p":5,"n0":2,"m":[3,-1]}"#);
        let back: GradingROG = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
