//! The cohomology of the fixed set B^G = ∐_k B_k,
//!
//! ```text
//! H(B^G₊) = ⊕_k H(S⁰)[σ_k, ζ_k^δ | δ_k = 0],
//! ```
//!
//! and its versions with coefficients in H(EG₊), H(ẼG) or another point ring.
//! Restriction η: H(B₊) → H(B^G₊) is the oracle used to check the B_GU(1)
//! engine.
//!
//! A class of grading α has, in component k, terms c·σ_k^s·ζ_k^δ. Since σ_k
//! has grading 2 and the coefficient c lies in RO(G), δ is forced to be
//! α − α_k and c lives in grading α_k − 2s. So a component is stored as a
//! map s ↦ c.

use crate::error::{Error, Result};
use crate::gradings::{GradingROG, GradingROPi, PrimeConfig};
use crate::point_rings::{gens, quotient_map, Level, PointClass, Ring};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct FixedRingClass {
    ring: Ring,
    level: Level,
    grading: GradingROPi,
    comps: Vec<BTreeMap<u32, PointClass>>,
}

impl FixedRingClass {
    pub fn zero(ring: Ring, level: Level, grading: GradingROPi) -> Self {
        let p = grading.p() as usize;
        Self { ring, level, grading, comps: vec![BTreeMap::new(); p] }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn grading(&self) -> &GradingROPi {
        &self.grading
    }

    pub fn pc(&self) -> PrimeConfig {
        self.grading.pc()
    }

    pub fn p(&self) -> i64 {
        self.grading.p()
    }

    /// The σ_k-expansion of component k.
    pub fn component(&self, k: usize) -> &BTreeMap<u32, PointClass> {
        &self.comps[k]
    }

    /// Grading of the σ_k^s coefficient.
    pub fn coeff_grading(&self, k: usize, s: u32) -> GradingROG {
        self.grading.comp(k as i64) - GradingROG::trivial(self.pc(), 2 * s as i64)
    }

    /// The ζ_k exponent shared by all terms of component k.
    pub fn zeta_grading(&self, k: usize) -> GradingROPi {
        &self.grading - &GradingROPi::constant(self.grading.comp(k as i64))
    }

    pub fn coeff(&self, k: usize, s: u32) -> PointClass {
        self.comps[k]
            .get(&s)
            .cloned()
            .unwrap_or_else(|| PointClass::zero(self.ring, self.coeff_grading(k, s), self.level))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_empty())
    }

    /// Adds `c` to the σ_k^s coefficient.
    pub fn add_term(&mut self, k: usize, s: u32, c: &PointClass) -> Result<()> {
        let want = self.coeff_grading(k, s);
        if c.grading() != want || c.ring() != self.ring || c.level() != self.level {
            return Err(Error::GradingMismatch(format!(
                "σ_{k}^{s} coefficient of a class in {} must be {} {} at {want}, got {c:?}",
                self.grading, self.ring, self.level
            )));
        }
        let new = match self.comps[k].get(&s) {
            Some(old) => old.checked_add(c)?,
            None => c.clone(),
        };
        if new.is_zero() {
            self.comps[k].remove(&s);
        } else {
            self.comps[k].insert(s, new);
        }
        Ok(())
    }

    /// The constant class with value `x` in every component.
    pub fn from_point(x: &PointClass) -> Self {
        let pc = x.pc();
        let mut out = Self::zero(x.ring(), x.level(), GradingROPi::constant(x.grading()));
        for k in 0..pc.p() as usize {
            out.add_term(k, 0, x).expect("constant class");
        }
        out
    }

    pub fn one(pc: PrimeConfig, ring: Ring) -> Result<Self> {
        Ok(Self::from_point(&gens::one(pc, ring)?))
    }

    /// σ_k: grading 2, supported on component k.
    pub fn sigma(pc: PrimeConfig, ring: Ring, k: usize) -> Result<Self> {
        let mut out = Self::zero(ring, Level::GG, GradingROPi::trivial(pc, 2));
        out.add_term(k, 1, &gens::one(pc, ring)?)?;
        Ok(out)
    }

    /// ζ_k^δ for δ with δ_k = 0, supported on component k.
    pub fn zeta(pc: PrimeConfig, ring: Ring, k: usize, delta: &GradingROPi) -> Result<Self> {
        if !delta.comp(k as i64).is_zero() {
            return Err(Error::InvalidParam(format!("ζ_{k}^δ needs δ_{k} = 0, got δ = {delta}")));
        }
        let mut out = Self::zero(ring, Level::GG, delta.clone());
        out.add_term(k, 0, &gens::one(pc, ring)?)?;
        Ok(out)
    }

    /// A single term c·σ_k^s·ζ_k^δ; the grading is |c| + 2s + δ.
    pub fn monomial(k: usize, s: u32, c: &PointClass, delta: &GradingROPi) -> Result<Self> {
        let pc = c.pc();
        if !delta.comp(k as i64).is_zero() {
            return Err(Error::InvalidParam(format!("ζ_{k}^δ needs δ_{k} = 0, got δ = {delta}")));
        }
        let g = &GradingROPi::constant(c.grading() + GradingROG::trivial(pc, 2 * s as i64)) + delta;
        let mut out = Self::zero(c.ring(), c.level(), g);
        out.add_term(k, s, c)?;
        Ok(out)
    }

    /// Keeps component k only.
    pub fn project(&self, k: usize) -> Self {
        let mut out = Self::zero(self.ring, self.level, self.grading.clone());
        out.comps[k] = self.comps[k].clone();
        out
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        if self.grading != o.grading || self.ring != o.ring || self.level != o.level {
            return Err(Error::GradingMismatch(format!(
                "cannot add fixed-point classes in {} ({}) and {} ({})",
                self.grading, self.ring, o.grading, o.ring
            )));
        }
        let mut out = self.clone();
        for (k, comp) in o.comps.iter().enumerate() {
            for (&s, c) in comp {
                out.add_term(k, s, c)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, a: i64) -> Self {
        self.map_coeffs(self.ring, |c| Ok(c.scale(a))).expect("scaling keeps gradings")
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Applies a point-level map to every coefficient.
    pub fn map_coeffs(&self, ring: Ring, f: impl Fn(&PointClass) -> Result<PointClass>) -> Result<Self> {
        let level = self.level;
        let mut out = Self::zero(ring, level, self.grading.clone());
        for (k, comp) in self.comps.iter().enumerate() {
            for (&s, c) in comp {
                let img = f(c)?;
                out.ring = img.ring();
                out.level = img.level();
                out.add_term(k, s, &img)?;
            }
        }
        if self.is_zero() {
            out.ring = ring;
        }
        Ok(out)
    }

    /// Image under EG₊ → S⁰ (coefficients multiplied by 1 ∈ H(EG₊)).
    pub fn to_eg(&self) -> Result<Self> {
        let one = gens::one(self.pc(), Ring::EG)?;
        self.map_coeffs(Ring::EG, |c| c.mul(&one))
    }

    /// Image under the coefficient quotient A → R Z.
    pub fn to_rz(&self) -> Result<Self> {
        self.map_coeffs(Ring::S0RZ, quotient_map)
    }

    /// Restriction to G/e.
    pub fn rho(&self) -> Result<Self> {
        let mut out = self.map_coeffs(self.ring, |c| c.rho())?;
        out.level = Level::Ge;
        Ok(out)
    }

    /// The product: polynomial multiplication in each component, coefficients
    /// multiplied in the point rings, ζ exponents added.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.pc() != o.pc() {
            return Err(Error::PrimeMismatch(self.p() as u32, o.p() as u32));
        }
        let ring = product_ring(self.ring, o.ring)?;
        let level = if self.level == Level::Ge || o.level == Level::Ge { Level::Ge } else { Level::GG };
        let mut out = Self::zero(ring, level, &self.grading + &o.grading);
        for k in 0..self.comps.len() {
            for (&s, a) in &self.comps[k] {
                for (&t, b) in &o.comps[k] {
                    let c = a.mul(b)?;
                    out.add_term(k, s + t, &c)?;
                }
            }
        }
        Ok(out)
    }

    /// Multiplication by a point class, acting diagonally.
    pub fn mul_point(&self, x: &PointClass) -> Result<Self> {
        self.mul(&Self::from_point(x))
    }
}

fn product_ring(a: Ring, b: Ring) -> Result<Ring> {
    match (a, b) {
        (x, y) if x == y => Ok(x),
        (Ring::S0, r) | (r, Ring::S0) => Ok(r),
        (x, y) => Err(Error::UndefinedProduct(format!("{x} × {y}"))),
    }
}

/// x·y for fixed-point classes.
pub fn fixed_mul(x: &FixedRingClass, y: &FixedRingClass) -> Result<FixedRingClass> {
    x.mul(y)
}

impl fmt::Display for FixedRingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, comp) in self.comps.iter().enumerate() {
            if comp.is_empty() {
                continue;
            }
            if !first {
                write!(f, " ⊕ ")?;
            }
            first = false;
            write!(f, "[{k}: ")?;
            for (i, (s, c)) in comp.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                match s {
                    0 => write!(f, "({c})")?,
                    1 => write!(f, "({c})·σ")?,
                    _ => write!(f, "({c})·σ^{s}")?,
                }
            }
            let z = self.zeta_grading(k);
            if !z.is_zero() {
                write!(f, " ζ^{z}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FixedRingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{} {} at {}]", self.ring, self.level, self.grading)
    }
}

impl Serialize for FixedRingClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            sigma: u32,
            coeff: &'a PointClass,
        }
        #[derive(Serialize)]
        struct Comp<'a> {
            k: usize,
            zeta: GradingROPi,
            terms: Vec<Term<'a>>,
        }
        #[derive(Serialize)]
        struct J<'a> {
            ring: Ring,
            level: Level,
            grading: &'a GradingROPi,
            components: Vec<Comp<'a>>,
        }
        let components = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_empty())
            .map(|(k, c)| Comp {
                k,
                zeta: self.zeta_grading(k),
                terms: c.iter().map(|(&sigma, coeff)| Term { sigma, coeff }).collect(),
            })
            .collect();
        J { ring: self.ring, level: self.level, grading: &self.grading, components }.serialize(s)
    }
}

/// B-level generators, named by their images under η.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BGen {
    /// χ^i c.
    ChiC(i64),
    /// ξ̄^α, α ∈ RO_+(Π) (any α ∈ I^ev(Π) in the EG₊ variant).
    XiBar(GradingROPi),
    /// λ̄^{β,b}, β ∈ RO_0(Π), b_k ∈ ν(β_k)^{-1}.
    LamBar(GradingROPi, Vec<i64>),
    /// e^{θ_k} κ̄_k^{θ − θ_k} for θ with all fixed dimensions 0.
    KapBar(usize, GradingROPi),
}

impl BGen {
    pub fn grading(&self, pc: PrimeConfig) -> GradingROPi {
        match self {
            BGen::ChiC(i) => GradingROPi::omega_star(pc).chi(*i),
            BGen::XiBar(a) | BGen::LamBar(a, _) | BGen::KapBar(_, a) => a.clone(),
        }
    }
}

/// η of a generator with coefficients in `ring` (S0, EG or S0RZ).
pub fn eta_of(pc: PrimeConfig, ring: Ring, gen: &BGen) -> Result<FixedRingClass> {
    let g = gen.grading(pc);
    if g.pc() != pc {
        return Err(Error::PrimeMismatch(g.p() as u32, pc.p() as u32));
    }
    if let (Ring::EG, BGen::XiBar(a)) = (ring, gen) {
        if !a.is_iev() {
            return Err(Error::InvalidParam(format!("ξ̄^α needs α ∈ I^ev(Π), got {a}")));
        }
        let mut out = FixedRingClass::zero(Ring::EG, Level::GG, a.clone());
        for k in 0..pc.p() as usize {
            out.add_term(k, 0, &gens::xi_pow(Ring::EG, a.comp(k as i64))?)?;
        }
        return Ok(out);
    }
    let base = eta_s0(pc, gen)?;
    match ring {
        Ring::S0 => Ok(base),
        Ring::EG => base.to_eg(),
        Ring::S0RZ => base.to_rz(),
        r => Err(Error::InvalidParam(format!("η is not defined with coefficients in {r}"))),
    }
}

fn eta_s0(pc: PrimeConfig, gen: &BGen) -> Result<FixedRingClass> {
    let p = pc.p();
    let g = gen.grading(pc);
    let mut out = FixedRingClass::zero(Ring::S0, Level::GG, g.clone());
    match gen {
        BGen::ChiC(i) => {
            for k in 0..p {
                let d = k - i;
                out.add_term(k as usize, 0, &gens::euler(pc, Ring::S0, d)?)?;
                out.add_term(k as usize, 1, &gens::xi(pc, Ring::S0, d)?)?;
            }
        }
        BGen::XiBar(a) => {
            if !a.is_ro_plus() {
                return Err(Error::InvalidParam(format!("ξ̄^α needs α ∈ RO_+(Π), got {a}")));
            }
            for k in 0..p {
                out.add_term(k as usize, 0, &gens::xi_pow(Ring::S0, a.comp(k))?)?;
            }
        }
        BGen::LamBar(beta, b) => {
            if !beta.is_ro0() || b.len() != p as usize {
                return Err(Error::InvalidParam(format!("λ̄^{{β,b}} needs β ∈ RO_0(Π) and p entries of b, got {beta}")));
            }
            for k in 0..p {
                out.add_term(k as usize, 0, &gens::lam(beta.comp(k), b[k as usize])?)?;
            }
        }
        BGen::KapBar(k, theta) => {
            if *k >= p as usize || theta.fixed_dims().iter().any(|&f| f != 0) {
                return Err(Error::InvalidParam(format!("κ̄_{k} needs k < p and all fixed dimensions 0, got {theta}")));
            }
            out.add_term(*k, 0, &gens::ekappa(Ring::S0, theta.comp(*k as i64))?)?;
        }
    }
    Ok(out)
}

/// Whether η: H^α(B₊) → H^α(B^G₊) is known to be injective.
pub fn eta_injective_at(alpha: &GradingROPi) -> bool {
    let all_even = alpha.fixed_dims().iter().all(|f| f % 2 == 0);
    alpha.dim() <= 0 || all_even
}
