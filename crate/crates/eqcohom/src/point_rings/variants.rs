//! The point with R Z and ⟨Z⟩ coefficients, and the maps relating them to
//! the Burnside ring theory.

use super::{group_at, GroupInfo, Level, PointClass, Ring};
use crate::error::{Error, Result};
use crate::gradings::GradingROG;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffSystem {
    /// The Burnside ring Mackey functor.
    A,
    RZ,
    ConcZ,
}

impl CoeffSystem {
    pub fn point_ring(self) -> Ring {
        match self {
            CoeffSystem::A => Ring::S0,
            CoeffSystem::RZ => Ring::S0RZ,
            CoeffSystem::ConcZ => Ring::S0Conc,
        }
    }
}

impl FromStr for CoeffSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => CoeffSystem::A,
            "RZ" => CoeffSystem::RZ,
            "concZ" | "ConcZ" | "<Z>" => CoeffSystem::ConcZ,
            _ => return Err(Error::InvalidParam(format!("unknown coefficient system `{s}`"))),
        })
    }
}

pub fn coeff_variant(system: CoeffSystem, x: GradingROG) -> GroupInfo {
    group_at(system.point_ring(), x)
}

/// The map induced by A → R Z. It kills every e^α κ^β and sends λ^{α,a} to λ^α.
pub fn quotient_map(x: &PointClass) -> Result<PointClass> {
    if x.ring() != Ring::S0 {
        return Err(Error::InvalidParam(format!("quotient_map expects a class of S0, got {}", x.ring())));
    }
    let g = x.grading();
    match x.level() {
        Level::Ge => PointClass::from_coords(Ring::S0RZ, g, Level::Ge, x.coords()),
        Level::GG => {
            let mut d = x.det();
            d.l = d.l.rem_euclid(g.p());
            PointClass::from_det(Ring::S0RZ, g, d)
        }
    }
}

/// The inclusion of ⟨Z⟩-coefficient cohomology into the Burnside theory,
/// with image the ideal generated by the e^α κ.
pub fn include_conc(x: &PointClass) -> Result<PointClass> {
    if x.ring() != Ring::S0Conc {
        return Err(Error::InvalidParam(format!("include_conc expects a class of S0[<Z>], got {}", x.ring())));
    }
    let g = x.grading();
    match x.level() {
        Level::Ge => Ok(PointClass::zero(Ring::S0, g, Level::Ge)),
        Level::GG => PointClass::from_det(Ring::S0, g, x.det()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::PrimeConfig;
    use crate::point_rings::{gens, les::window};

    #[test]
    fn variant_groups() {
        let p2 = PrimeConfig::new(2).unwrap();
        let g = coeff_variant(CoeffSystem::RZ, GradingROG::zero(p2));
        assert_eq!(g.functor.label.as_deref(), Some("RZ"));
        let l = GradingROG::lambda(p2);
        let g = coeff_variant(CoeffSystem::ConcZ, l);
        assert_eq!(g.functor.label.as_deref(), Some("<Z>"));
        let g = coeff_variant(CoeffSystem::ConcZ, l + GradingROG::trivial(p2, 1));
        assert_eq!(g.functor.gg.dim(), 0);
    }

    #[test]
    fn quotient_kills_kappa() {
        for p in [2, 3, 5] {
            let pc = PrimeConfig::new(p).unwrap();
            let k = gens::invkappa(pc, Ring::S0, 1).unwrap();
            assert!(quotient_map(&k).unwrap().is_zero());
            assert!(quotient_map(&gens::kappa(pc)).unwrap().is_zero());
            let one = quotient_map(&gens::one(pc, Ring::S0).unwrap()).unwrap();
            assert_eq!(one, gens::one(pc, Ring::S0RZ).unwrap());
        }
    }

    #[test]
    fn quotient_and_inclusion_are_module_maps() {
        for p in [2, 3] {
            let pc = PrimeConfig::new(p).unwrap();
            let ws = window(pc, 3, 1);
            for &x in &ws {
                for a in PointClass::basis(Ring::S0, x, Level::GG) {
                    let qa = quotient_map(&a).unwrap();
                    for &y in ws.iter().step_by(7) {
                        for b in PointClass::basis(Ring::S0, y, Level::GG) {
                            let Ok(ab) = a.mul(&b) else { continue };
                            let qb = quotient_map(&b).unwrap();
                            assert_eq!(quotient_map(&ab).unwrap(), qa.mul(&qb).unwrap(), "{a:?} {b:?}");
                        }
                        for c in PointClass::basis(Ring::S0Conc, y, Level::GG) {
                            let lhs = include_conc(&a.mul(&c).unwrap()).unwrap();
                            let rhs = a.mul(&include_conc(&c).unwrap()).unwrap();
                            assert_eq!(lhs, rhs, "{a:?} {c:?}");
                        }
                    }
                }
            }
        }
    }
}
