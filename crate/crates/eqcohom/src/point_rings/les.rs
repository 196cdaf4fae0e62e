//! The long exact sequence
//!
//! ```text
//! … → H^{x−1}(EG₊) --δ--> H^x(ẼG) --ψ--> H^x(S⁰) --φ--> H^x(EG₊) --δ--> H^{x+1}(ẼG) → …
//! ```
//!
//! with its maps on canonical bases, and an exactness check.

use super::cell::{Cell, CellKind, Det};
use super::{Level, PointClass, Ring};
use crate::arith::md;
use crate::burnside_mackey::{mackey, MackeyFunctor, MackeyMap, Matrix, Report};
use crate::error::{Error, Result};
use crate::gradings::GradingROG;
use serde::Serialize;

fn want(x: &PointClass, ring: Ring, what: &str) -> Result<()> {
    if x.ring() != ring {
        return Err(Error::InvalidParam(format!("{what} is defined on {ring}, got a class of {}", x.ring())));
    }
    Ok(())
}

/// δ: H^{w}(EG₊) → H^{w+1}(ẼG). Zero at G/e.
pub fn delta(x: &PointClass) -> Result<PointClass> {
    want(x, Ring::EG, "δ")?;
    let w = x.grading();
    let y = w + GradingROG::trivial(w.pc, 1);
    let tgt = Cell::new(Ring::TEG, y);
    if x.level() == Level::Ge || tgt.kind != CellKind::Delta {
        return Ok(PointClass::zero(Ring::TEG, y, x.level()));
    }
    let c = x.coords().first().copied().unwrap_or(0);
    PointClass::from_coords(Ring::TEG, y, Level::GG, &[md(tgt.a0 * c, w.p())])
}

/// ψ: H^x(ẼG) → H^x(S⁰).
pub fn psi(x: &PointClass) -> Result<PointClass> {
    want(x, Ring::TEG, "ψ")?;
    let g = x.grading();
    if x.level() == Level::Ge {
        return Ok(PointClass::zero(Ring::S0, g, Level::Ge));
    }
    let u = x.coords().first().copied().unwrap_or(0);
    let src = x.cell();
    let tgt = Cell::new(Ring::S0, g);
    let det = match src.kind {
        CellKind::ConcZKappa => Det::new(0, g.p() * u, 0),
        CellKind::Delta if tgt.kind == CellKind::Delta => Det::new(0, 0, u),
        _ => Det::default(),
    };
    PointClass::from_det(Ring::S0, g, det)
}

/// φ: H^x(S⁰) → H^x(EG₊), the ring map induced by EG₊ → S⁰.
pub fn phi(x: &PointClass) -> Result<PointClass> {
    want(x, Ring::S0, "φ")?;
    let one = PointClass::from_coords(Ring::EG, GradingROG::zero(x.pc()), Level::GG, &[1])?;
    x.mul(&one)
}

fn matrix_of(
    f: impl Fn(&PointClass) -> Result<PointClass>,
    src: Ring,
    x: GradingROG,
    tgt_dim: usize,
    level: Level,
) -> Result<Matrix> {
    let basis = PointClass::basis(src, x, level);
    let mut m = Matrix::zeros(tgt_dim, basis.len());
    for (j, b) in basis.iter().enumerate() {
        let img = f(b)?;
        for (i, c) in img.coords().iter().enumerate() {
            m[(i, j)] = *c;
        }
    }
    Ok(m)
}

fn mackey_map(
    f: impl Fn(&PointClass) -> Result<PointClass> + Copy,
    src: Ring,
    x: GradingROG,
    tgt: &MackeyFunctor,
) -> Result<MackeyMap> {
    Ok(MackeyMap {
        f_gg: matrix_of(f, src, x, tgt.gg.dim(), Level::GG)?,
        f_ge: matrix_of(f, src, x, tgt.ge.dim(), Level::Ge)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LesTriple {
    pub grading: GradingROG,
    /// H^{x−1}(EG₊).
    pub eg_prev: MackeyFunctor,
    pub teg: MackeyFunctor,
    pub s0: MackeyFunctor,
    pub eg: MackeyFunctor,
    /// H^{x+1}(ẼG).
    pub teg_next: MackeyFunctor,
    pub delta: MackeyMap,
    pub psi: MackeyMap,
    pub phi: MackeyMap,
    pub delta_next: MackeyMap,
}

pub fn les_maps(x: GradingROG) -> Result<LesTriple> {
    let one = GradingROG::trivial(x.pc, 1);
    let m = |r: Ring, g: GradingROG| Cell::new(r, g).mackey();
    let eg_prev = m(Ring::EG, x - one);
    let teg = m(Ring::TEG, x);
    let s0 = m(Ring::S0, x);
    let eg = m(Ring::EG, x);
    let teg_next = m(Ring::TEG, x + one);
    Ok(LesTriple {
        delta: mackey_map(delta, Ring::EG, x - one, &teg)?,
        psi: mackey_map(psi, Ring::TEG, x, &s0)?,
        phi: mackey_map(phi, Ring::S0, x, &eg)?,
        delta_next: mackey_map(delta, Ring::EG, x, &teg_next)?,
        grading: x,
        eg_prev,
        teg,
        s0,
        eg,
        teg_next,
    })
}

/// Checks that δ, ψ, φ are maps of Mackey functors and that the sequence is
/// exact at H^x(ẼG), H^x(S⁰) and H^x(EG₊), at both levels.
pub fn les_exact(x: GradingROG) -> Result<Report> {
    let t = les_maps(x)?;
    let mut r = Report::default();
    let tag = |s: &str| format!("{s} at {x}");
    for (name, f, a, b) in [
        ("δ", &t.delta, &t.eg_prev, &t.teg),
        ("ψ", &t.psi, &t.teg, &t.s0),
        ("φ", &t.phi, &t.s0, &t.eg),
        ("δ'", &t.delta_next, &t.eg, &t.teg_next),
    ] {
        for fail in f.verify(a, b).failures {
            r.fail(format!("{}: {fail}", tag(name)));
        }
    }
    r.check(mackey::exact_at(&t.delta, &t.teg, &t.psi, &t.s0), || tag("not exact at H(ẼG)"));
    r.check(mackey::exact_at(&t.psi, &t.s0, &t.phi, &t.eg), || tag("not exact at H(S⁰)"));
    r.check(mackey::exact_at(&t.phi, &t.eg, &t.delta_next, &t.teg_next), || tag("not exact at H(EG₊)"));
    Ok(r)
}

/// All gradings with |x^G| ≤ w, |x| ≤ w and RO_0 part in the box
/// [−b, b]^{h−1} (coefficients of M_k − M_1, k ≥ 2).
pub fn window(pc: crate::gradings::PrimeConfig, w: i64, b: i64) -> Vec<GradingROG> {
    let h = pc.h();
    let boxes: Vec<Vec<i64>> = if h <= 1 {
        vec![vec![]]
    } else {
        itertools::Itertools::multi_cartesian_product((1..h).map(|_| -b..=b)).collect()
    };
    let mut out = vec![];
    for f in -w..=w {
        for d in -w..=w {
            if pc.is_two() {
                out.push(GradingROG::new(pc, f, &[d - f]).unwrap());
                continue;
            }
            if (d - f) % 2 != 0 {
                continue;
            }
            for bx in &boxes {
                let mut m = vec![0; h];
                m[0] = (d - f) / 2 - bx.iter().sum::<i64>();
                m[1..].copy_from_slice(bx);
                out.push(GradingROG::new(pc, f, &m).unwrap());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::PrimeConfig;
    use crate::point_rings::gens;

    #[test]
    fn exact_small_window() {
        for p in [2, 3, 5] {
            let pc = PrimeConfig::new(p).unwrap();
            for x in window(pc, 5, 1) {
                let r = les_exact(x).unwrap();
                assert!(r.ok(), "{:?}", r.failures);
            }
        }
    }

    #[test]
    fn named_maps() {
        let p2 = PrimeConfig::new(2).unwrap();
        // δ(ι^k) = 0.
        let i = gens::iota_pow(p2, Ring::EG, 3).unwrap();
        assert!(delta(&i).unwrap().is_zero());
        // ψ(e^m κ) = e^m κ.
        for m in -3..=3 {
            let y = m * GradingROG::lambda(p2);
            let k = gens::ekappa(Ring::TEG, y).unwrap();
            assert_eq!(psi(&k).unwrap(), gens::ekappa(Ring::S0, y).unwrap());
        }
        // φ(e^{-m}κ) = 0.
        assert!(phi(&gens::invkappa(p2, Ring::S0, 2).unwrap()).unwrap().is_zero());
        // δ(e^m ξ^n) = e^m δ ξ^n for n ≤ −1.
        let src = gens::xi1_pow(p2, Ring::EG, -2).unwrap();
        assert_eq!(delta(&src).unwrap(), gens::edxi(GradingROG::zero(p2), 2).unwrap());

        let p5 = PrimeConfig::new(5).unwrap();
        let a = GradingROG::mk(p5, 2) - GradingROG::mk(p5, 1);
        for m in 0..3 {
            let e = gens::e_pow(p5, Ring::S0, m).unwrap();
            let lhs = phi(&(&gens::mu(a, 2).unwrap() * &e)).unwrap();
            let xi_a = gens::xi_pow(Ring::EG, a).unwrap();
            let rhs = &xi_a * &gens::e_pow(p5, Ring::EG, m).unwrap();
            assert_eq!(lhs, rhs.scale(2));
        }
    }
}
