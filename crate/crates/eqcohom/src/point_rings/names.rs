//! Canonical basis names. Every name is an expression in the class grammar
//! of [`crate::parse`] that evaluates to the basis element it names.

use super::{Cell, CellKind, Level, Ring};
use crate::gradings::GradingROG;

/// `name^e` factors joined by `*`; exponent 1 is omitted, exponent 0 drops
/// the factor, and the empty product is `1`.
pub fn monomial(parts: &[(&str, i64)]) -> String {
    let v: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(n, e)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    if v.is_empty() {
        "1".into()
    } else {
        v.join("*")
    }
}

fn join(prefix: Option<String>, rest: String) -> String {
    match prefix {
        None => rest,
        Some(p) if rest == "1" => p,
        Some(p) => format!("{p}*{rest}"),
    }
}

/// The grading of e: Λ for p = 2, M_1 for p odd.
pub fn e_grading(x: &GradingROG) -> GradingROG {
    let pc = x.pc;
    if pc.is_two() {
        GradingROG::lambda(pc)
    } else {
        GradingROG::mk(pc, 1)
    }
}

pub fn iota_name(x: &GradingROG) -> String {
    if x.pc.is_two() {
        match x.mult(1) {
            0 => "iota^0".into(),
            1 => "iota".into(),
            k => format!("iota^{k}"),
        }
    } else {
        format!("iota^({x})")
    }
}

/// Exponents (m, n) with x = α + m·e + n·(M_1 − 2) + (x^G + 2n)·1 for the
/// RO_0 part α; only meaningful in the cases where the caller uses them.
fn mn(x: &GradingROG) -> (i64, i64) {
    let ed = if x.pc.is_two() { 1 } else { 2 };
    let f = x.fixed();
    let d = x.dim();
    // δ-classes: |x| = 1 − m·ed, x^G = 1 + 2n.
    if f % 2 != 0 {
        return ((1 - d) / ed, (f - 1) / 2);
    }
    (d / ed, -f / 2)
}

fn mu_prefix(c: &Cell) -> Option<String> {
    let a = c.x.ro0_part();
    (!a.is_zero()).then(|| format!("mu({a}; {})", c.nu))
}

fn lam_prefix(c: &Cell) -> Option<String> {
    let a = c.x.ro0_part();
    (!a.is_zero()).then(|| format!("lam({a}; {})", c.a0))
}

fn lam_rz_prefix(c: &Cell) -> Option<String> {
    let a = c.x.ro0_part();
    (!a.is_zero()).then(|| format!("lam({a})"))
}

pub fn basis_names(c: &Cell, level: Level) -> Vec<String> {
    if level == Level::Ge {
        return if c.has_ge() { vec![iota_name(&c.x)] } else { vec![] };
    }
    use CellKind::*;
    let (m, n) = mn(&c.x);
    let tau = || format!("tau({})", iota_name(&c.x));
    match (c.ring, c.kind) {
        (_, Zero) | (_, RZMinus) => vec![],
        (Ring::S0, A) => {
            let lam = join(lam_prefix(c), "1".into());
            let kap = join(Some("kappa".into()), mu_prefix(c).unwrap_or_else(|| "1".into()));
            vec![lam, kap]
        }
        (Ring::S0, RZ) => vec![join(lam_prefix(c), monomial(&[("xi", n)]))],
        (Ring::S0, ConcZ) => vec![join(mu_prefix(c), monomial(&[("e", m)]))],
        (Ring::S0, ConcZKappa) => vec![join(mu_prefix(c), format!("invkappa({})", -m))],
        (Ring::S0, ConcZp) => vec![join(lam_prefix(c), monomial(&[("e", m), ("xi", n)]))],
        (Ring::S0, Delta) => vec![join(mu_prefix(c), format!("dxi({m},{n})"))],
        (Ring::S0RZ, RZ) => vec![join(lam_rz_prefix(c), monomial(&[("xi", n)]))],
        (Ring::S0RZ, ConcZp) => vec![join(lam_rz_prefix(c), monomial(&[("e", m), ("xi", n)]))],
        (Ring::S0RZ, Delta) => vec![join(lam_rz_prefix(c), format!("dxi({m},{n})"))],
        (Ring::S0 | Ring::S0RZ, LZ) => vec![tau()],
        (Ring::S0Conc, ConcZKappa) | (Ring::TEG, ConcZKappa) => vec![format!("ekappa({})", c.x)],
        (Ring::TEG, Delta) => {
            let n = (c.x.fixed() - 1) / 2;
            let y = teg_delta_base(&c.x);
            vec![format!("edxi({y}; {n})")]
        }
        (Ring::EG, RZ | ConcZp) => vec![eg_monomial(&c.x)],
        (r, k) => unreachable!("no {k:?} cells in {r}"),
    }
}

/// For a δ-grading x of ẼG, the y with x = y + 1 − n(M_1 − 2), y^G = 0.
pub fn teg_delta_base(x: &GradingROG) -> GradingROG {
    let pc = x.pc;
    let n = (x.fixed() - 1) / 2;
    *x - GradingROG::trivial(pc, 1) + n * (GradingROG::mk(pc, 1) - GradingROG::trivial(pc, 2))
}

/// Name of the canonical EG generator e^m ξ_1^{n_1} Π_{k≥2} ξ_k^{n_k}.
pub fn eg_monomial(x: &GradingROG) -> String {
    let pc = x.pc;
    if pc.is_two() {
        return monomial(&[("e", x.dim()), ("xi", -x.fixed() / 2)]);
    }
    let m = x.dim() / 2;
    let mut parts: Vec<(String, i64)> = vec![("e".into(), m), ("xi".into(), x.mult(1) - m)];
    for k in 2..=pc.h() {
        parts.push((format!("xi({k})"), x.mult(k)));
    }
    let refs: Vec<(&str, i64)> = parts.iter().map(|(s, e)| (s.as_str(), *e)).collect();
    monomial(&refs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::PrimeConfig;

    #[test]
    fn monomials() {
        assert_eq!(monomial(&[("e", 2), ("xi", 1)]), "e^2*xi");
        assert_eq!(monomial(&[("e", 0), ("xi", -1)]), "xi^-1");
        assert_eq!(monomial(&[]), "1");
        let p2 = PrimeConfig::new(2).unwrap();
        assert_eq!(iota_name(&GradingROG::new(p2, 1, &[-1]).unwrap()), "iota^-1");
    }
}
