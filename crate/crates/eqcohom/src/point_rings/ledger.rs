//! Relation ledgers of the point-level rings, checked against the
//! multiplication and structure maps over a bounded grid of exponents.

use super::gens::*;
use super::les::{delta, les_exact, phi, psi, window};
use super::{quotient_map, Level, PointClass, Ring};
use crate::arith::inv_mod;
use crate::error::Result;
use crate::gradings::{nu, GradingROG, PrimeConfig};
use crate::suites::SuiteReport;

const S0: Ring = Ring::S0;

struct Ledger {
    rep: SuiteReport,
}

impl Ledger {
    fn eq(&mut self, a: PointClass, b: PointClass, what: impl FnOnce() -> String) {
        self.rep.check(a == b, || format!("{}: {a:?} ≠ {b:?}", what()));
    }

    fn zero(&mut self, a: PointClass, what: impl FnOnce() -> String) {
        self.rep.check(a.is_zero(), || format!("{}: {a:?} ≠ 0", what()));
    }

    fn holds(&mut self, c: bool, what: impl FnOnce() -> String) {
        self.rep.check(c, what);
    }

    fn section(&mut self, name: &str, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.rep.fail(format!("{name}: {e}"));
        }
    }
}

/// Every relation of the point theorem for `p`, with exponents bounded by
/// `grid`, together with the ring axioms and LES compatibility on the
/// window of radius `grid`.
pub fn point_relations(p: i64, grid: i64) -> Result<SuiteReport> {
    let pc = PrimeConfig::new(p)?;
    let mut l = Ledger { rep: SuiteReport::new("point-relations", p) };
    let g = grid.max(1);
    if pc.is_two() {
        two(&mut l, pc, g);
    } else {
        odd(&mut l, pc, g);
    }
    l.section("ring axioms", |l| ring_axioms(l, pc, g));
    l.section("les module maps", |l| les_module_maps(l, pc, g));
    Ok(l.rep)
}

/// Exactness of the long exact sequence at every grading of the window.
pub fn les_exactness(p: i64, w: i64, b: i64) -> Result<SuiteReport> {
    let pc = PrimeConfig::new(p)?;
    let mut rep = SuiteReport::new("les-exactness", p);
    for x in window(pc, w, b) {
        match les_exact(x) {
            Ok(r) => {
                rep.check(r.ok(), || format!("{x}: {}", r.failures.join("; ")));
            }
            Err(e) => rep.fail(format!("{x}: {e}")),
        }
    }
    Ok(rep)
}

fn two(l: &mut Ledger, pc: PrimeConfig, g: i64) {
    let io = |k: i64| iota_pow(pc, S0, k);
    let tio = |k: i64| iota_pow(pc, S0, k)?.tau();
    let e = || e_lambda(pc, S0);
    let xi1 = || xi(pc, S0, 1);
    let ek = |m: i64| if m == 0 { Ok(kappa(pc)) } else { invkappa(pc, S0, m) };
    let dx = |m: i64, n: i64| dxi(pc, S0, m, n);

    l.section("structural", |l| {
        l.zero(tio(-1)?, || "τ(ι^{-1})".into());
        for n in 1..=g {
            l.eq(tio(-2 * n - 1)?, dx(1, n)?, || format!("τ(ι^{}) = dξ(1,{n})", -2 * n - 1));
        }
        l.zero(&kappa(pc) * &xi1()?, || "κξ_1".into());
        l.eq(xi1()?.rho()?, io(2)?, || "ρ(ξ_1)".into());
        l.zero(e()?.rho()?, || "ρ(e)".into());
        for m in 1..=g {
            l.zero(ek(m)?.rho()?, || format!("ρ(e^{{-{m}}}κ)"));
            for n in 1..=g {
                if m >= 2 {
                    l.zero(dx(m, n)?.rho()?, || format!("ρ(dξ({m},{n}))"));
                    l.zero(dx(m, n)?.scale(2), || format!("2dξ({m},{n})"));
                }
            }
        }
        Ok(())
    });

    l.section("multiplicative", |l| {
        l.eq(&io(1)? * &io(-1)?, one(pc, S0)?.rho()?, || "ι·ι^{-1}".into());
        for m in 1..=g {
            l.eq(&e()? * &ek(m)?, ek(m - 1)?, || format!("e·e^{{-{m}}}κ"));
            l.zero(&xi1()? * &ek(m)?, || format!("ξ_1·e^{{-{m}}}κ"));
        }
        for m in 0..g {
            for n in 0..g {
                l.eq(&ek(m)? * &ek(n)?, ek(m + n)?.scale(2), || format!("e^{{-{m}}}κ·e^{{-{n}}}κ"));
            }
        }
        for m in 1..=g {
            for n in 1..=g {
                if m >= 2 {
                    l.eq(&e()? * &dx(m, n)?, dx(m - 1, n)?, || format!("e·dξ({m},{n})"));
                    l.zero(&xi1()? * &dx(m, 1)?, || format!("ξ_1·dξ({m},1)"));
                }
                if n >= 2 {
                    l.eq(&xi1()? * &dx(m, n)?, dx(m, n - 1)?, || format!("ξ_1·dξ({m},{n})"));
                }
                for k in 0..3 {
                    l.zero(&ek(k)? * &dx(m, n)?, || format!("e^{{-{k}}}κ·dξ({m},{n})"));
                }
                for (a, b) in [(1, 1), (2, 3), (1, 2)] {
                    l.zero(&dx(m, n)? * &dx(a, b)?, || format!("dξ({m},{n})·dξ({a},{b})"));
                }
            }
        }
        Ok(())
    });

    l.section("implied", |l| {
        l.eq(&kappa(pc) * &e()?, e()?.scale(2), || "κe".into());
        for m in 1..=g {
            for n in 1..=g {
                let c = &e_pow(pc, S0, m)? * &xi1_pow(pc, S0, n)?;
                l.holds(!c.is_zero() && c.scale(2).is_zero(), || format!("e^{m}ξ_1^{n} has order 2"));
            }
        }
        for k in -2 * g..=2 * g {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            l.eq(io(k)?.t(), io(k)?.scale(sign), || format!("t(ι^{k})"));
            l.eq(&xi1()? * &tio(k)?, tio(k + 2)?, || format!("ξ_1·τ(ι^{k})"));
            l.zero(&e()? * &tio(k)?, || format!("e·τ(ι^{k})"));
            for m in 1..3 {
                l.zero(&ek(m)? * &tio(k)?, || format!("e^{{-{m}}}κ·τ(ι^{k})"));
                l.zero(&dx(m, 1)? * &tio(k)?, || format!("dξ({m},1)·τ(ι^{k})"));
            }
            for j in -g..=g {
                let prod = &tio(k)? * &tio(j)?;
                if k % 2 != 0 || j % 2 != 0 {
                    l.zero(prod, || format!("τ(ι^{k})τ(ι^{j})"));
                } else {
                    l.eq(prod, tio(k + j)?.scale(2), || format!("τ(ι^{k})τ(ι^{j})"));
                }
            }
            if k >= 0 {
                l.zero(tio(2 * k + 1)?, || format!("τ(ι^{})", 2 * k + 1));
            }
        }
        for n in 1..=g {
            l.zero(&e()? * &dx(1, n)?, || format!("e·dξ(1,{n})"));
        }
        Ok(())
    });

    l.section("les maps", |l| {
        for k in -g..=g {
            let i = iota_pow(pc, Ring::EG, k)?;
            l.zero(delta(&i)?, || format!("δ(ι^{k})"));
            l.eq(phi(&io(k)?)?, i, || format!("φ(ι^{k})"));
        }
        for m in 0..g {
            for n in -g..=g {
                let x = &e_pow(pc, Ring::EG, m)? * &xi1_pow(pc, Ring::EG, n)?;
                let d = delta(&x)?;
                if n <= -1 {
                    let y = m * GradingROG::lambda(pc);
                    l.eq(d, edxi(y, -n)?, || format!("δ(e^{m}ξ_1^{n})"));
                } else {
                    l.zero(d, || format!("δ(e^{m}ξ_1^{n})"));
                }
                if n >= 0 {
                    let s = &e_pow(pc, S0, m)? * &xi1_pow(pc, S0, n)?;
                    l.eq(phi(&s)?, x, || format!("φ(e^{m}ξ_1^{n})"));
                }
            }
        }
        for m in -g..=g {
            let y = m * GradingROG::lambda(pc);
            for n in 1..=g {
                let t = edxi(y, n)?;
                if m <= -1 {
                    l.eq(psi(&t)?, dx(-m, n)?, || format!("ψ(e^{m}dξ_{n})"));
                    l.zero(phi(&dx(-m, n)?)?, || format!("φ(dξ({},{n}))", -m));
                } else {
                    l.zero(psi(&t)?, || format!("ψ(e^{m}dξ_{n})"));
                }
            }
            if m >= 1 {
                l.zero(phi(&ek(m)?)?, || format!("φ(e^{{-{m}}}κ)"));
            }
        }
        Ok(())
    });

    l.section("RZ coefficients", |l| {
        let r = Ring::S0RZ;
        let io = |k| iota_pow(pc, r, k);
        let dx = |m, n| dxi(pc, r, m, n);
        let e = e_pow(pc, r, 1)?;
        let xi1 = xi(pc, r, 1)?;
        l.zero(io(-1)?.tau()?, || "τ(ι^{-1}) in RZ".into());
        l.eq(xi1.rho()?, io(2)?, || "ρ(ξ_1) in RZ".into());
        l.zero(e.rho()?, || "ρ(e) in RZ".into());
        for n in 1..=g {
            l.eq(dx(1, n)?, io(-2 * n - 1)?.tau()?, || format!("dξ(1,{n}) in RZ"));
            l.zero(&e * &dx(1, n)?, || format!("e·dξ(1,{n}) in RZ"));
            for m in 2..=g + 1 {
                l.zero(dx(m, n)?.rho()?, || format!("ρ(dξ({m},{n})) in RZ"));
                l.eq(&e * &dx(m, n)?, dx(m - 1, n)?, || format!("e·dξ({m},{n}) in RZ"));
                l.zero(dx(m, n)?.scale(2), || format!("2dξ({m},{n}) in RZ"));
            }
        }
        for m in 1..=g {
            for n in 2..=g {
                l.eq(&xi1 * &dx(m, n)?, dx(m, n - 1)?, || format!("ξ_1·dξ({m},{n}) in RZ"));
            }
            l.zero(&dx(m, 1)? * &dx(1, 2)?, || format!("dξ({m},1)·dξ(1,2) in RZ"));
            for n in 0..=g {
                let c = &e_pow(pc, r, m)? * &xi1_pow(pc, r, n)?;
                l.holds(!c.is_zero() && c.scale(2).is_zero(), || format!("e^{m}ξ_1^{n} has order 2 in RZ"));
            }
        }
        l.eq(&io(1)? * &io(-1)?, one(pc, r)?.rho()?, || "ι·ι^{-1} in RZ".into());
        for k in -g..=g {
            l.eq(&xi1 * &io(k)?.tau()?, io(k + 2)?.tau()?, || format!("ξ_1·τ(ι^{k}) in RZ"));
        }
        for m in 1..=g {
            l.eq(quotient_map(&dxi(pc, S0, m, 2)?)?, dx(m, 2)?, || format!("q(dξ({m},2))"));
            l.zero(quotient_map(&ek(m)?)?, || format!("q(e^{{-{m}}}κ)"));
        }
        Ok(())
    });
}

/// A spread of RO_0 gradings M_j − M_k and their doubles.
fn ro0(pc: PrimeConfig) -> Vec<GradingROG> {
    let h = pc.h() as i64;
    let m = |k| GradingROG::mk(pc, k);
    let mut v = vec![GradingROG::zero(pc)];
    for j in 1..=h {
        for k in 1..=h {
            if j != k {
                v.push(m(j) - m(k));
                v.push(m(j) + m(j) - m(k) - m(k));
            }
        }
    }
    if h >= 3 {
        v.push(m(2) + m(3) - m(1) - m(1));
    }
    v
}

fn odd(l: &mut Ledger, pc: PrimeConfig, g: i64) {
    let p = pc.p();
    let gs = ro0(pc);
    let nu_of = |a: GradingROG| nu(&a);
    let ek = |mm: i64| if mm == 0 { Ok(kappa(pc)) } else { invkappa(pc, S0, mm) };
    let dx = |mm, n| dxi(pc, S0, mm, n);

    l.section("structural", |l| {
        let one = one(pc, S0)?;
        let io1 = iota_pow(pc, S0, 1)?;
        l.eq(xi(pc, S0, 1)?.rho()?, io1, || "ρ(ξ_1)".into());
        l.zero(euler(pc, S0, 1)?.rho()?, || "ρ(e_1)".into());
        l.zero(&kappa(pc) * &xi(pc, S0, 1)?, || "κξ_1".into());
        for k in 1..=pc.h() as i64 {
            let ik = iota_k(pc, S0, k)?;
            let ikinv = iota(S0, -ik.grading())?;
            l.eq(ikinv.t(), ikinv.clone(), || format!("t(ι_{k}^{{-1}})"));
            l.eq(&ik * &ikinv, one.rho()?, || format!("ι_{k}·ι_{k}^{{-1}}"));
        }
        l.eq(mu(GradingROG::zero(pc), 1)?, one.clone(), || "μ(0,1)".into());
        for &a in &gs {
            let n = nu_of(a)?;
            let ia = iota(S0, a)?;
            for r in [n, n + p, n - p, n + 2 * p] {
                let u = mu(a, r)?;
                l.eq(u.rho()?, ia.scale(r), || format!("ρ(μ({a},{r}))"));
                l.eq(mu(a, r + p)?, &u + &ia.tau()?, || format!("μ({a},{})", r + p));
            }
        }
        for mm in 1..=g {
            l.zero(invkappa(pc, S0, mm)?.rho()?, || format!("ρ(e^{{-{mm}}}κ)"));
            for n in 1..=g {
                let d = dx(mm, n)?;
                l.zero(d.rho()?, || format!("ρ(dξ({mm},{n}))"));
                l.holds(d.scale(p).is_zero() && !d.is_zero(), || format!("dξ({mm},{n}) has order p"));
            }
        }
        Ok(())
    });

    l.section("multiplicative", |l| {
        let e1 = euler(pc, S0, 1)?;
        let xi1 = xi(pc, S0, 1)?;
        for &a in &gs {
            for &b in &gs {
                let (na, nb) = (nu_of(a)?, nu_of(b)?);
                for (x, y) in [(na, nb), (na + p, nb), (na, nb - 2 * p)] {
                    l.eq(&mu(a, x)? * &mu(b, y)?, mu(a + b, x * y)?, || format!("μ({a},{x})μ({b},{y})"));
                }
            }
        }
        for mm in 1..=g {
            l.eq(&e1 * &ek(mm)?, ek(mm - 1)?, || format!("e_1·e^{{-{mm}}}κ"));
            l.zero(&xi1 * &ek(mm)?, || format!("ξ_1·e^{{-{mm}}}κ"));
            for n in 1..=g {
                if mm >= 2 {
                    l.eq(&e1 * &dx(mm, n)?, dx(mm - 1, n)?, || format!("e_1·dξ({mm},{n})"));
                } else {
                    l.zero(&e1 * &dx(mm, n)?, || format!("e_1·dξ({mm},{n})"));
                }
                if n >= 2 {
                    l.eq(&xi1 * &dx(mm, n)?, dx(mm, n - 1)?, || format!("ξ_1·dξ({mm},{n})"));
                } else {
                    l.zero(&xi1 * &dx(mm, n)?, || format!("ξ_1·dξ({mm},{n})"));
                }
                for k in 1..3 {
                    l.zero(&ek(k)? * &dx(mm, n)?, || format!("e^{{-{k}}}κ·dξ({mm},{n})"));
                }
                l.zero(&dx(1, 2)? * &dx(mm, n)?, || format!("dξ(1,2)·dξ({mm},{n})"));
                l.eq(&ek(mm)? * &ek(n)?, ek(mm + n)?.scale(p), || format!("e^{{-{mm}}}κ·e^{{-{n}}}κ"));
            }
        }
        Ok(())
    });

    l.section("λ and implied", |l| {
        let e1 = euler(pc, S0, 1)?;
        let xi1 = xi(pc, S0, 1)?;
        let io1 = iota_pow(pc, S0, 1)?;
        l.eq(&kappa(pc) * &e1, e1.scale(p), || "κe_1".into());
        let ex = &e1 * &xi1;
        l.holds(!ex.is_zero() && ex.scale(p).is_zero(), || "e_1ξ_1 has order p".into());
        for &a in &gs {
            let n = nu_of(a)?;
            let ia = iota(S0, a)?;
            let ta = ia.tau()?;
            l.eq(&xi1 * &ta, (&io1 * &ia).tau()?, || format!("ξ_1·τ(ι^{a})"));
            l.zero(&e1 * &ta, || format!("e_1·τ(ι^{a})"));
            for ainv in [n, n + p] {
                let a_ = inv_mod(n, p) + (ainv - n);
                let lm = lam(a, a_)?;
                let mu_a = mu(a, ainv)?;
                let c = (1 - a_ * ainv) / p;
                l.eq(lm.clone(), &mu_a.scale(a_) + &ta.scale(c), || format!("λ({a},{a_}) definition"));
                l.eq(mu_a.clone(), &lm.scale(ainv) + &(&kappa(pc) * &mu_a).scale(c), || format!("μ({a},{ainv}) via λ"));
                let shifted = lam(a, a_ + p)?;
                l.eq(shifted.clone(), &lm + &(&kappa(pc) * &mu_a), || format!("λ({a},{}) shift", a_ + p));
                l.eq(&shifted * &xi1, &lm * &xi1, || format!("λ shift·ξ_1 at {a}"));
                l.eq(&e1 * &lm, (&e1 * &mu_a).scale(a_), || format!("e_1λ({a},{a_})"));
                l.eq(&mu_a * &xi1, (&lm * &xi1).scale(ainv), || format!("μ({a},{ainv})ξ_1"));
                l.eq(lm.rho()?, ia.clone(), || format!("ρ(λ({a},{a_}))"));
            }
            for &b in &gs {
                let tb = iota(S0, b)?.tau()?;
                let tab = iota(S0, a + b)?.tau()?;
                l.eq(&mu(a, n)? * &tb, tab.scale(n), || format!("μ({a},{n})τ(ι^{b})"));
                l.eq(&ta * &tb, tab.scale(p), || format!("τ(ι^{a})τ(ι^{b})"));
                let (x, y) = (inv_mod(n, p), inv_mod(nu_of(b)?, p));
                l.eq(&lam(a, x)? * &lam(b, y)?, lam(a + b, x * y)?, || format!("λ({a},{x})λ({b},{y})"));
            }
        }
        Ok(())
    });

    l.section("euler classes", |l| {
        let e1 = euler(pc, S0, 1)?;
        let h = pc.h() as i64;
        for k in 2..p {
            let j = if k <= h { k } else { p - k };
            let sign = if k <= h { 1 } else { -1 };
            let a = GradingROG::mk(pc, j) - GradingROG::mk(pc, 1);
            for r in [j, j + p] {
                l.eq(euler(pc, S0, k)?, (&mu(a, r)? * &e1).scale(sign), || format!("e_{k} via μ({a},{r})"));
            }
        }
        Ok(())
    });

    l.section("les maps", |l| {
        let e = |r, mm| e_pow(pc, r, mm);
        for &a in &gs {
            let n = nu_of(a)?;
            let xa = xi_pow(Ring::EG, a)?;
            let ainv = inv_mod(n, p);
            for mm in 0..g.min(3) {
                for k in -g..=g {
                    let src = &(&e(Ring::EG, mm)? * &xa) * &xi1_pow(pc, Ring::EG, k)?;
                    let d = delta(&src)?;
                    if k <= -1 {
                        let y = a + mm * GradingROG::mk(pc, 1);
                        l.eq(d, edxi(y, -k)?.scale(ainv), || format!("δ(e^{mm}ξ^{a}ξ_1^{k})"));
                    } else {
                        l.zero(d, || format!("δ(e^{mm}ξ^{a}ξ_1^{k})"));
                    }
                    if k >= 1 {
                        let s = &(&lam(a, ainv)? * &e(S0, mm)?) * &xi1_pow(pc, S0, k)?;
                        l.eq(phi(&s)?, src, || format!("φ(λe^{mm}ξ_1^{k}) at {a}"));
                    }
                }
                let lhs = phi(&(&mu(a, n)? * &e(S0, mm)?))?;
                l.eq(lhs, (&xa * &e(Ring::EG, mm)?).scale(n), || format!("φ(μ({a},{n})e^{mm})"));
            }
            for mm in -g..=g {
                let y = a + mm * GradingROG::mk(pc, 1);
                let sm = if mm >= 0 { e(S0, mm)? } else { invkappa(pc, S0, -mm)? };
                let k = ekappa(Ring::TEG, y)?;
                let mu_a = mu(a, n)?;
                let expect = if mm >= 0 { &(&mu_a * &sm) * &kappa(pc) } else { &mu_a * &sm };
                l.eq(psi(&k)?, expect.clone(), || format!("ψ(e^{y}κ)"));
                l.zero(phi(&expect)?, || format!("φψ(e^{y}κ)"));
                for nn in 1..3 {
                    let t = edxi(y, nn)?;
                    if mm <= -1 {
                        let s = &mu_a * &dx(-mm, nn)?;
                        l.eq(psi(&t)?, s.clone(), || format!("ψ(e^{y}dξ_{nn})"));
                        l.zero(phi(&s)?, || format!("φψ(e^{y}dξ_{nn})"));
                    } else {
                        l.zero(psi(&t)?, || format!("ψ(e^{y}dξ_{nn})"));
                    }
                }
            }
        }
        Ok(())
    });

    l.section("RZ coefficients", |l| {
        let r = Ring::S0RZ;
        let e1 = euler(pc, r, 1)?;
        let xi1 = xi(pc, r, 1)?;
        let one = one(pc, r)?;
        l.eq(xi1.rho()?, iota_pow(pc, r, 1)?, || "ρ(ξ_1) in RZ".into());
        l.zero(e1.rho()?, || "ρ(e_1) in RZ".into());
        l.holds(e1.scale(p).is_zero() && !e1.is_zero(), || "e_1 has order p in RZ".into());
        l.eq(lam_rz(GradingROG::zero(pc))?, one.clone(), || "λ(0) in RZ".into());
        for &a in &gs {
            let la = lam_rz(a)?;
            l.eq(la.rho()?, iota(r, a)?, || format!("ρ(λ({a})) in RZ"));
            l.eq(&la * &lam_rz(-a)?, one.clone(), || format!("λ({a}) invertible in RZ"));
            let n = nu_of(a)?;
            l.eq(quotient_map(&mu(a, n)?)?, la.scale(n), || format!("q(μ({a},{n}))"));
            l.eq(quotient_map(&lam(a, inv_mod(n, p) + p)?)?, la.clone(), || format!("q(λ({a}))"));
            l.zero(quotient_map(&kappa_beta(a)?)?, || format!("q(κ_{a})"));
            for &b in &gs {
                l.eq(&la * &lam_rz(b)?, lam_rz(a + b)?, || format!("λ({a})λ({b}) in RZ"));
                let tb = iota(r, b)?.tau()?;
                l.eq(&la * &tb, iota(r, a + b)?.tau()?, || format!("λ({a})τ(ι^{b}) in RZ"));
            }
        }
        for mm in 1..=g {
            for n in 1..=g {
                let d = dxi(pc, r, mm, n)?;
                l.holds(d.rho()?.is_zero() && d.scale(p).is_zero(), || format!("dξ({mm},{n}) in RZ"));
                if mm >= 2 {
                    l.eq(&e1 * &d, dxi(pc, r, mm - 1, n)?, || format!("e_1·dξ({mm},{n}) in RZ"));
                } else {
                    l.zero(&e1 * &d, || format!("e_1·dξ({mm},{n}) in RZ"));
                }
                if n >= 2 {
                    l.eq(&xi1 * &d, dxi(pc, r, mm, n - 1)?, || format!("ξ_1·dξ({mm},{n}) in RZ"));
                } else {
                    l.zero(&xi1 * &d, || format!("ξ_1·dξ({mm},{n}) in RZ"));
                }
            }
        }
        Ok(())
    });
}

fn basis_in(ring: Ring, gs: &[GradingROG], levels: &[Level]) -> Vec<PointClass> {
    let mut out = vec![];
    for &x in gs {
        for &level in levels {
            out.extend(PointClass::basis(ring, x, level));
        }
    }
    out
}

/// Commutativity on the window of radius `g`; associativity, including the
/// module structure of H(ẼG), on the window of radius g − 1.
fn ring_axioms(l: &mut Ledger, pc: PrimeConfig, g: i64) -> Result<()> {
    let both = [Level::GG, Level::Ge];
    let gs = window(pc, g, 1);
    for ring in [S0, Ring::EG] {
        let set = basis_in(ring, &gs, &both);
        for a in &set {
            for b in &set {
                l.eq(a.mul(b)?, b.mul(a)?, || format!("{a:?}·{b:?} commutes"));
            }
        }
    }
    let small = window(pc, (g - 1).max(1), 0);
    let s = basis_in(S0, &small, &both);
    let teg = basis_in(Ring::TEG, &small, &both);
    for a in &s {
        for b in &s {
            let ab = a.mul(b)?;
            for c in s.iter().chain(&teg) {
                l.eq(ab.mul(c)?, a.mul(&b.mul(c)?)?, || format!("({a:?}·{b:?})·{c:?} associates"));
            }
        }
    }
    Ok(())
}

/// φ is a ring map and δ, ψ are H(S⁰)-module maps.
fn les_module_maps(l: &mut Ledger, pc: PrimeConfig, g: i64) -> Result<()> {
    let gs = window(pc, g, 1);
    let gg = [Level::GG];
    let s = basis_in(S0, &gs, &gg);
    let eg = basis_in(Ring::EG, &gs, &gg);
    let teg = basis_in(Ring::TEG, &gs, &gg);
    for a in &s {
        for b in &s {
            l.eq(phi(&a.mul(b)?)?, phi(a)?.mul(&phi(b)?)?, || format!("φ({a:?}·{b:?})"));
        }
        for x in &eg {
            l.eq(delta(&a.mul(x)?)?, a.mul(&delta(x)?)?, || format!("δ({a:?}·{x:?})"));
        }
        for t in &teg {
            l.eq(psi(&a.mul(t)?)?, a.mul(&psi(t)?)?, || format!("ψ({a:?}·{t:?})"));
        }
    }
    Ok(())
}
