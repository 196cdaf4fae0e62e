//! Seeded samplers for gradings, generator words and point coefficients.

use super::word::{canonical_b, pair_grading, GeneratorWord};
use crate::error::Result;
use crate::gradings::{GradingROG, GradingROPi, PrimeConfig};
use crate::point_rings::{gens, PointClass, Ring};
use rand::Rng;

/// An element of RO_0(G): Σ c_j M_j with Σ c_j = 0. Always 0 for p ≤ 3.
pub fn random_ro0_g<R: Rng>(pc: PrimeConfig, rng: &mut R) -> GradingROG {
    let h = pc.h();
    if h < 2 {
        return GradingROG::zero(pc);
    }
    let j = rng.gen_range(0..h);
    let mut k = rng.gen_range(0..h - 1);
    if k >= j {
        k += 1;
    }
    let c = rng.gen_range(-2..=2);
    let mut m = vec![0; h];
    m[j] += c;
    m[k] -= c;
    GradingROG::new(pc, 0, &m).expect("dimension 0")
}

/// An element of RO_0(Π): independent RO_0(G) components.
pub fn random_ro0<R: Rng>(pc: PrimeConfig, rng: &mut R) -> GradingROPi {
    let comps = (0..pc.p()).map(|_| if rng.gen_bool(0.5) { random_ro0_g(pc, rng) } else { GradingROG::zero(pc) });
    GradingROPi::new(comps.collect()).expect("equal dimensions")
}

/// A grading with all fixed dimensions 0: pair differences, a multiple of
/// M_1 and an RO_0(Π) part.
pub fn random_theta<R: Rng>(pc: PrimeConfig, rng: &mut R) -> GradingROPi {
    let p = pc.p() as usize;
    let i = rng.gen_range(0..p);
    let j = rng.gen_range(0..p);
    let a = rng.gen_range(-2..=1);
    &(&(&pair_grading(pc, i) - &pair_grading(pc, j)) + &GradingROPi::constant(a * GradingROG::mk(pc, 1)))
        + &random_ro0(pc, rng)
}

/// A small element of RO_+(Π): nonnegative combinations of Ω_{i,j}.
pub fn random_ro_plus<R: Rng>(pc: PrimeConfig, rng: &mut R) -> GradingROPi {
    let mut a = GradingROPi::zero(pc);
    for _ in 0..rng.gen_range(1..=2) {
        let i = rng.gen_range(0..pc.p());
        let j = rng.gen_range(1..=pc.h() as i64);
        a += &GradingROPi::omega(pc, i, j);
    }
    a
}

/// λ̄^{β,b} with b the canonical vector shifted by p at a random index.
pub fn random_lambar<R: Rng>(pc: PrimeConfig, rng: &mut R) -> Result<GeneratorWord> {
    let beta = random_ro0(pc, rng);
    let mut b = canonical_b(&beta)?;
    if rng.gen_bool(0.5) {
        let k = rng.gen_range(0..b.len());
        b[k] += pc.p() * rng.gen_range(-1..=1);
    }
    GeneratorWord::lambar(beta, b)
}

/// One generator: χ^i c, a pair χ^i c·ξ_{i,1}, ξ_{i,1}, ξ̄^α, λ̄^{β,b} or
/// (rarely) e^{θ_k}κ̄_k^{θ−θ_k}.
pub fn random_generator<R: Rng>(pc: PrimeConfig, rng: &mut R) -> Result<GeneratorWord> {
    let p = pc.p();
    let i = rng.gen_range(0..p);
    Ok(match rng.gen_range(0..12) {
        0..=3 => GeneratorWord::chic(pc, i),
        4..=5 => GeneratorWord::pair(pc, i),
        6..=7 => GeneratorWord::xi(pc, i),
        8 => GeneratorWord::xibar(random_ro_plus(pc, rng))?,
        9..=10 => random_lambar(pc, rng)?,
        _ => GeneratorWord::kapbar(i as usize, random_theta(pc, rng))?,
    })
}

/// A product of 1 to `max_len` generators, with the scalar from κ̄·κ̄.
pub fn random_word<R: Rng>(pc: PrimeConfig, rng: &mut R, max_len: usize) -> Result<(i64, GeneratorWord)> {
    let mut w = GeneratorWord::one(pc);
    let mut sc = 1;
    for _ in 0..rng.gen_range(1..=max_len) {
        let (s, x) = w.mul(&random_generator(pc, rng)?);
        sc *= s;
        w = x;
    }
    Ok((sc, w))
}

/// A G/G coefficient from a fixed menu of point classes.
pub fn random_coef<R: Rng>(pc: PrimeConfig, ring: Ring, rng: &mut R) -> Result<PointClass> {
    let rz = ring == Ring::S0RZ;
    let x = match rng.gen_range(0..10) {
        0..=2 => gens::one(pc, ring)?,
        3 if !rz => gens::kappa(pc),
        4 if !rz => gens::burnside(pc, rng.gen_range(-2..=2), rng.gen_range(-2..=2)),
        5 => gens::euler(pc, ring, 1)?,
        6 => gens::xi(pc, ring, 1)?,
        7 if !rz => gens::invkappa(pc, ring, rng.gen_range(1..=2))?,
        8 => gens::e_pow(pc, ring, 2)?,
        9 if !rz => {
            let a = random_ro0_g(pc, rng);
            gens::lam(a, crate::arith::inv_mod(crate::gradings::nu(&a)?, pc.p()))?
        }
        _ => gens::one(pc, ring)?.scale(rng.gen_range(-2..=3)),
    };
    Ok(x)
}
