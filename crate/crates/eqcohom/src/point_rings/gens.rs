//! Named generators of the point-level rings.
//!
//! Conventions: `e` is e_Λ for p = 2 and e_1 for p odd; `euler(k)` is the
//! Euler class e_k of M_k, with e_k = −e_{p−k} and e_0 = 0 (for p = 2,
//! e_1 = e²). `xi(k)` is ξ_k in grading M_k − 2, with ξ_k = ξ_{p−k}.

use super::cell::Det;
use super::names::e_grading;
use super::{Level, PointClass, Ring};
use crate::arith::{inv_mod, md};
use crate::error::{Error, Result};
use crate::gradings::{nu, GradingROG, PrimeConfig};

fn s0(ring: Ring, x: GradingROG, det: Det) -> Result<PointClass> {
    PointClass::from_det(ring, x, det)
}

/// M_1 − 2, the grading of ξ_1.
pub fn xi_grading(pc: PrimeConfig) -> GradingROG {
    GradingROG::mk(pc, 1) - GradingROG::trivial(pc, 2)
}

pub fn one(pc: PrimeConfig, ring: Ring) -> Result<PointClass> {
    let x = GradingROG::zero(pc);
    match ring {
        Ring::EG => PointClass::from_coords(ring, x, Level::GG, &[1]),
        Ring::S0 | Ring::S0RZ => s0(ring, x, Det::new(1, 1, 0)),
        r => Err(Error::InvalidParam(format!("{r} has no unit"))),
    }
}

/// a + bg ∈ A(G) = H^0 of the point.
pub fn burnside(pc: PrimeConfig, a: i64, b: i64) -> PointClass {
    s0(Ring::S0, GradingROG::zero(pc), Det::new(a + pc.p() * b, a, 0)).expect("A(G) is A_GG")
}

pub fn kappa(pc: PrimeConfig) -> PointClass {
    burnside(pc, pc.p(), -1)
}

pub fn g(pc: PrimeConfig) -> PointClass {
    burnside(pc, 0, 1)
}

/// ι^x at level G/e (|x| = 0).
pub fn iota(ring: Ring, x: GradingROG) -> Result<PointClass> {
    if x.dim() != 0 || !matches!(ring, Ring::S0 | Ring::S0RZ | Ring::EG) {
        return Err(Error::InvalidParam(format!("ι^{x} does not exist in {ring}")));
    }
    PointClass::from_coords(ring, x, Level::Ge, &[1])
}

/// ι^k in grading k(Λ − 1) (p = 2), or ι_1^k in grading k(M_1 − 2) (p odd).
pub fn iota_pow(pc: PrimeConfig, ring: Ring, k: i64) -> Result<PointClass> {
    let x = if pc.is_two() { k * (GradingROG::lambda(pc) - GradingROG::trivial(pc, 1)) } else { k * xi_grading(pc) };
    iota(ring, x)
}

/// ι_k in grading M_k − 2.
pub fn iota_k(pc: PrimeConfig, ring: Ring, k: i64) -> Result<PointClass> {
    iota(ring, GradingROG::mk(pc, k) - GradingROG::trivial(pc, 2))
}

pub fn tau_iota(ring: Ring, x: GradingROG) -> Result<PointClass> {
    iota(ring, x)?.tau()
}

/// The class restricting to ι^x whose localization is ν(x)^{-1} ξ^x:
/// ξ^x for x ∈ RO_+(G), λ^{α,a0} ξ_1^n in general (|x| = 0, x^G ≤ 0).
pub fn xi_pow(ring: Ring, x: GradingROG) -> Result<PointClass> {
    let in_s0 = x.fixed() <= 0 || ring == Ring::EG;
    if x.dim() != 0 || x.fixed() % 2 != 0 || !in_s0 {
        return Err(Error::InvalidParam(format!("no ξ-monomial in grading {x} of {ring}")));
    }
    match ring {
        Ring::EG => PointClass::from_coords(ring, x, Level::GG, &[1]),
        Ring::S0 | Ring::S0RZ => {
            let a0 = inv_mod(x.nu_ext(), x.p());
            s0(ring, x, Det::new(1, a0, 0))
        }
        r => Err(Error::InvalidParam(format!("no ξ in {r}"))),
    }
}

/// ξ_k (alias ξ_{p−k}); ξ_0 = 1.
pub fn xi(pc: PrimeConfig, ring: Ring, k: i64) -> Result<PointClass> {
    if md(k, pc.p()) == 0 {
        return one(pc, ring);
    }
    xi_pow(ring, GradingROG::mk(pc, k) - GradingROG::trivial(pc, 2))
}

/// ξ_1^n for any integer n in EG, n ≥ 0 in S⁰.
pub fn xi1_pow(pc: PrimeConfig, ring: Ring, n: i64) -> Result<PointClass> {
    if n < 0 && ring != Ring::EG {
        return Err(Error::InvalidParam("ξ is only invertible in EG".into()));
    }
    xi_pow(ring, n * xi_grading(pc))
}

/// e_k with e_k = −e_{p−k} for k > p/2 and e_0 = 0.
pub fn euler(pc: PrimeConfig, ring: Ring, k: i64) -> Result<PointClass> {
    let x = GradingROG::mk(pc, k);
    let Ok(s) = pc.sign_s(k) else {
        return Ok(PointClass::zero(ring, x, Level::GG));
    };
    let s = if pc.is_two() { 1 } else { s };
    match ring {
        Ring::S0 | Ring::S0RZ => s0(ring, x, Det::new(0, s, 0)),
        Ring::EG => PointClass::from_coords(ring, x, Level::GG, &[md(s * x.nu_ext(), pc.p())]),
        r => Err(Error::InvalidParam(format!("no Euler classes in {r}"))),
    }
}

/// e^m: e_Λ^m for p = 2, e_1^m for p odd (m ≥ 0).
pub fn e_pow(pc: PrimeConfig, ring: Ring, m: i64) -> Result<PointClass> {
    if m < 0 {
        return Err(Error::InvalidParam("negative powers of e need κ or δ".into()));
    }
    let x = m * e_grading(&GradingROG::zero(pc));
    match ring {
        Ring::S0 | Ring::S0RZ => s0(ring, x, Det::new(i64::from(m == 0), 1, 0)),
        Ring::EG => PointClass::from_coords(ring, x, Level::GG, &[1]),
        r => Err(Error::InvalidParam(format!("no e in {r}"))),
    }
}

/// e_Λ (p = 2).
pub fn e_lambda(pc: PrimeConfig, ring: Ring) -> Result<PointClass> {
    if !pc.is_two() {
        return Err(Error::InvalidParam("e_Λ needs p = 2".into()));
    }
    e_pow(pc, ring, 1)
}

fn check_ro0(alpha: &GradingROG) -> Result<i64> {
    nu(alpha)
}

/// μ^{α,a}, α ∈ RO_0(G), a ≡ ν(α).
pub fn mu(alpha: GradingROG, a: i64) -> Result<PointClass> {
    let n = check_ro0(&alpha)?;
    if md(a - n, alpha.p()) != 0 {
        return Err(Error::BadCongruence(format!("{a} is not in ν({alpha}) = [{n}]")));
    }
    s0(Ring::S0, alpha, Det::new(a, 1, 0))
}

/// λ^{α,b}, α ∈ RO_0(G), b ≡ ν(α)^{-1}.
pub fn lam(alpha: GradingROG, b: i64) -> Result<PointClass> {
    let n = check_ro0(&alpha)?;
    if md(b * n - 1, alpha.p()) != 0 {
        return Err(Error::BadCongruence(format!("{b} is not in ν({alpha})^-1")));
    }
    s0(Ring::S0, alpha, Det::new(1, b, 0))
}

/// λ^α with R Z coefficients.
pub fn lam_rz(alpha: GradingROG) -> Result<PointClass> {
    let n = check_ro0(&alpha)?;
    s0(Ring::S0RZ, alpha, Det::new(1, inv_mod(n, alpha.p()), 0))
}

/// κ^β = κ μ^{β,b}.
pub fn kappa_beta(beta: GradingROG) -> Result<PointClass> {
    check_ro0(&beta)?;
    s0(Ring::S0, beta, Det::new(0, beta.p(), 0))
}

/// e^y κ for y^G = 0: in S⁰ (or ⟨Z⟩ coefficients) the class with
/// localization p, in ẼG the generator.
pub fn ekappa(ring: Ring, y: GradingROG) -> Result<PointClass> {
    if y.fixed() != 0 {
        return Err(Error::InvalidParam(format!("e^yκ needs y^G = 0, got {y}")));
    }
    match ring {
        Ring::S0 | Ring::S0Conc => s0(ring, y, Det::new(0, y.p(), 0)),
        Ring::TEG => PointClass::from_coords(ring, y, Level::GG, &[1]),
        r => Err(Error::InvalidParam(format!("no e^yκ in {r}"))),
    }
}

/// e^{−m}κ.
pub fn invkappa(pc: PrimeConfig, ring: Ring, m: i64) -> Result<PointClass> {
    ekappa(ring, -m * e_grading(&GradingROG::zero(pc)))
}

/// Grading of e^{−m} δ ξ^{−n}: 1 − m·e − n(M_1 − 2).
pub fn dxi_grading(pc: PrimeConfig, m: i64, n: i64) -> GradingROG {
    GradingROG::trivial(pc, 1) - m * e_grading(&GradingROG::zero(pc)) - n * xi_grading(pc)
}

/// e^{−m} δ ξ^{−n} (m, n ≥ 1) in S⁰ or with R Z coefficients.
pub fn dxi(pc: PrimeConfig, ring: Ring, m: i64, n: i64) -> Result<PointClass> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidParam(format!("dxi({m},{n}) needs m, n ≥ 1")));
    }
    match ring {
        Ring::S0 | Ring::S0RZ => s0(ring, dxi_grading(pc, m, n), Det::new(0, 0, 1)),
        Ring::TEG => edxi(-m * e_grading(&GradingROG::zero(pc)), n),
        r => Err(Error::InvalidParam(format!("no δ-classes in {r}"))),
    }
}

/// e^y δ ξ_1^{−n} in ẼG, y^G = 0, n ≥ 1.
pub fn edxi(y: GradingROG, n: i64) -> Result<PointClass> {
    if y.fixed() != 0 || n < 1 {
        return Err(Error::InvalidParam(format!("edxi({y}; {n}) needs y^G = 0 and n ≥ 1")));
    }
    let x = y + GradingROG::trivial(y.pc, 1) - n * xi_grading(y.pc);
    PointClass::from_coords(Ring::TEG, x, Level::GG, &[1])
}

/// μ_{j,k,d} ∈ H^{M_k − M_j}, d ≡ k j^{-1} (p odd, 1 ≤ j, k ≤ (p−1)/2). In
/// EG this is d ξ_j^{-1} ξ_k.
pub fn mu_map(pc: PrimeConfig, ring: Ring, j: i64, k: i64, d: i64) -> Result<PointClass> {
    let p = pc.p();
    let h = pc.h() as i64;
    if pc.is_two() || !(1..=h).contains(&j) || !(1..=h).contains(&k) {
        return Err(Error::InvalidParam(format!("μ_{{{j},{k},{d}}} needs p odd and 1 ≤ j, k ≤ {h}")));
    }
    if md(d * j - k, p) != 0 {
        return Err(Error::BadCongruence(format!("{d} ≢ {k}·{j}^-1 mod {p}")));
    }
    let x = GradingROG::mk(pc, k) - GradingROG::mk(pc, j);
    match ring {
        Ring::S0 => s0(ring, x, Det::new(d, 1, 0)),
        Ring::EG => PointClass::from_coords(ring, x, Level::GG, &[d]),
        r => Err(Error::InvalidParam(format!("μ_{{j,k,d}} is not defined in {r}"))),
    }
}

/// e^y for y^G = 0, |y| > 0: the class localizing to the monomial e^y.
pub fn e_mono(y: GradingROG) -> Result<PointClass> {
    if y.fixed() != 0 || y.dim() <= 0 {
        return Err(Error::InvalidParam(format!("e^y needs y^G = 0 and |y| > 0, got {y}")));
    }
    s0(Ring::S0, y, Det::new(0, 1, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let p2 = PrimeConfig::new(2).unwrap();
        let e = e_lambda(p2, Ring::S0).unwrap();
        assert_eq!(&e * &invkappa(p2, Ring::S0, 1).unwrap(), kappa(p2));
        let xi = xi(p2, Ring::S0, 1).unwrap();
        assert!((&xi * &dxi(p2, Ring::S0, 2, 1).unwrap()).is_zero());

        let p5 = PrimeConfig::new(5).unwrap();
        let a = GradingROG::mk(p5, 2) - GradingROG::mk(p5, 1);
        let b = GradingROG::mk(p5, 3) - GradingROG::mk(p5, 1);
        assert_eq!(&mu(a, 2).unwrap() * &mu(b, 2).unwrap(), mu(a + b, 4).unwrap());
        assert!(mu(a, 3).is_err());

        assert!(euler(p5, Ring::S0, 0).unwrap().is_zero());
        assert_eq!(euler(p5, Ring::S0, 3).unwrap(), euler(p5, Ring::S0, 2).unwrap().scale(-1));
        // e_2 = 2 ξ_1^{-1} ξ_2 e_1 in EG.
        let rhs = &(&xi1_pow(p5, Ring::EG, -1).unwrap() * &super::xi(p5, Ring::EG, 2).unwrap())
            * &euler(p5, Ring::EG, 1).unwrap();
        assert_eq!(euler(p5, Ring::EG, 2).unwrap(), rhs.scale(2));
    }

    #[test]
    fn mu_map_identities() {
        for p in [5, 7, 11] {
            let pc = PrimeConfig::new(p).unwrap();
            let h = pc.h() as i64;
            for j in 1..=h {
                for k in 1..=h {
                    let d = md(k * inv_mod(j, p), p);
                    for d in [d, d - p, d + p] {
                        let m = mu_map(pc, Ring::S0, j, k, d).unwrap();
                        assert_eq!(m.rho().unwrap(), iota(Ring::S0, m.grading()).unwrap().scale(d));
                        assert_eq!(&m * &euler(pc, Ring::S0, j).unwrap(), euler(pc, Ring::S0, k).unwrap());
                        let eg = mu_map(pc, Ring::EG, j, k, d).unwrap();
                        let rhs = &xi(pc, Ring::EG, k).unwrap()
                            * &xi_pow(Ring::EG, -1 * (GradingROG::mk(pc, j) - GradingROG::trivial(pc, 2))).unwrap();
                        assert_eq!(eg, rhs.scale(d));
                    }
                    assert!(matches!(mu_map(pc, Ring::S0, j, k, d_bad(p, j, k)), Err(Error::BadCongruence(_))));
                }
            }
        }
    }

    fn d_bad(p: i64, j: i64, k: i64) -> i64 {
        md(k * inv_mod(j, p), p) + 1
    }
}
