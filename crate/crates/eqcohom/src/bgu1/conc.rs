//! ⟨Z⟩ coefficients. H(B₊;⟨Z⟩) is the fixed-point ring with coefficients
//! in H(S⁰;⟨Z⟩), and it maps injectively onto the ideal of H(B₊) generated
//! by the classes e^α κ̄_k^β.

use super::class::BClass;
use super::normalize::Engine;
use super::word::{s, GeneratorWord};
use crate::error::{Error, Result};
use crate::fixed_ring::FixedRingClass;
use crate::gradings::{GradingROPi, PrimeConfig};
use crate::point_rings::{include_conc, CoeffSystem, Level, PointClass, Ring};

fn a_engine(pc: PrimeConfig) -> Engine {
    Engine::new(pc, CoeffSystem::A).expect("A coefficients")
}

/// The word (χ^k c)^s ∏_{i≠k} (χ^i c)^{a_i} ξ_{i,1}^{b_i} e^{θ_k}κ̄_k^{θ−θ_k}
/// of total grading `g` whose η image is e^{θ_k}κ σ_k^s in component k, up
/// to the sign ∏ s(k−i)^{a_i}.
fn kappa_word(pc: PrimeConfig, k: usize, s_pow: u32, g: &GradingROPi) -> Result<(i64, GeneratorWord)> {
    let p = pc.p() as usize;
    let f = g.fixed_dims();
    let mut w = GeneratorWord::one(pc);
    w.m[k] = s_pow as i64;
    let mut sign = 1;
    for i in 0..p {
        if i == k {
            continue;
        }
        if f[i] % 2 != 0 {
            return Err(Error::InvalidParam(format!("odd fixed dimension in {g} at {i}")));
        }
        if f[i] > 0 {
            w.m[i] = f[i] / 2;
            if w.m[i] % 2 == 1 {
                sign *= s(pc, k as i64 - i as i64);
            }
        } else {
            w.n[i] = -f[i] / 2;
        }
    }
    let theta = g - &w.grading();
    Ok((sign, w.mul(&GeneratorWord::kapbar(k, theta)?).1))
}

/// The inclusion H(B₊;⟨Z⟩) → H(B₊;A).
pub fn conc_include(x: &FixedRingClass) -> Result<BClass> {
    if x.ring() != Ring::S0Conc {
        return Err(Error::InvalidParam(format!("expected ⟨Z⟩ coefficients, got {}", x.ring())));
    }
    let pc = x.pc();
    let e = a_engine(pc);
    let mut out = BClass::zero(CoeffSystem::A, Level::GG, x.grading().clone());
    for k in 0..pc.p() as usize {
        for (&sp, u) in x.component(k) {
            if u.is_zero() {
                continue;
            }
            if u.level() != Level::GG {
                return Err(Error::LevelMismatch("⟨Z⟩ classes live at G/G".into()));
            }
            let v = include_conc(u)?;
            let n = crate::arith::exact_div(v.det().l, pc.p())
                .ok_or_else(|| Error::Normalize(format!("{v:?} is not a multiple of e^yκ")))?;
            let (sign, w) = kappa_word(pc, k, sp, x.grading())?;
            let part = e.normalize(&w, &e.one_coef().scale(sign * n))?;
            if !part.is_zero() {
                out = out.checked_add(&part)?;
            }
        }
    }
    Ok(out)
}

/// The preimage under include_conc of a point class, if there is one.
pub fn conc_preimage(c: &PointClass) -> Result<PointClass> {
    let y = c.grading();
    let zero = PointClass::zero(Ring::S0Conc, y, c.level());
    if c.is_zero() {
        return Ok(zero);
    }
    let not_in = || Error::InvalidParam(format!("{c:?} is not in the image of ⟨Z⟩ coefficients"));
    let basis = PointClass::basis(Ring::S0Conc, y, c.level());
    let g = basis.first().ok_or_else(not_in)?;
    let gl = include_conc(g)?.det().l;
    let n = crate::arith::exact_div(c.det().l, gl).ok_or_else(not_in)?;
    let pre = g.scale(n);
    if include_conc(&pre)? != *c {
        return Err(not_in());
    }
    Ok(pre)
}

/// The ⟨Z⟩ class whose image has the given η, if η lies in the image.
pub fn conc_restrict(eta: &FixedRingClass) -> Result<FixedRingClass> {
    eta.map_coeffs(Ring::S0Conc, conc_preimage)
}
