//! The RO(G)-graded generators, and the matrices of the comparison maps to
//! the EG₊ and ẼG versions on one coset of gradings.

use super::admissible::{admissible_basis, AdmissibleMonomial};
use super::class::BClass;
use super::normalize::Engine;
use super::relations::same_class;
use super::word::{canonical_b, pair_grading, GeneratorWord};
use crate::error::Result;
use crate::gradings::{fixed_dim_order_of, GradingROG, GradingROPi};
use crate::point_rings::{gens, Level, PointClass, Ring};
use crate::suites::SuiteReport;
use serde::Serialize;

/// Named classes generating the RO(G)-graded part: γ, Γ, γ̃ for p = 2 and
/// Γ, Δ_0, …, Δ_{p−1} for p odd.
pub fn lewis_classes(e: &Engine) -> Result<Vec<(String, BClass)>> {
    let pc = e.pc();
    let p = pc.p();
    let mut all_c = GeneratorWord::one(pc);
    for i in 0..p {
        all_c = all_c.mul(&GeneratorWord::chic(pc, i)).1;
    }
    let big = e.word(&all_c)?;
    if pc.is_two() {
        return Ok(vec![
            ("gamma".into(), e.word(&GeneratorWord::pair(pc, 0))?),
            ("Gamma".into(), big),
            ("gamma~".into(), e.word(&GeneratorWord::pair(pc, 1))?),
        ]);
    }
    let mut out = vec![("Gamma".to_string(), big)];
    for k in 0..p as usize {
        out.push((format!("Delta_{k}"), e.word(&delta_word(e, k)?)?));
    }
    Ok(out)
}

/// (∏_{i<k} χ^i c·ξ_{i,1}) λ̄^{β^k,b^k}, β^k = Σ_{i<k}(M_{k−i} − |χ^i c·ξ_{i,1}|).
pub fn delta_word(e: &Engine, k: usize) -> Result<GeneratorWord> {
    let pc = e.pc();
    let mut w = GeneratorWord::one(pc);
    let mut beta = GradingROPi::zero(pc);
    for i in 0..k {
        w.q[i] = 1;
        beta += &(&GradingROPi::constant(GradingROG::mk(pc, (k - i) as i64)) - &pair_grading(pc, i));
    }
    let b = canonical_b(&beta)?;
    Ok(w.mul(&GeneratorWord::lambar(beta, b)?).1)
}

/// The identities relating these classes.
pub fn check_lewis(e: &Engine) -> Result<SuiteReport> {
    let pc = e.pc();
    let p = pc.p();
    let mut rep = SuiteReport::new("lewis", p);
    let cls = lewis_classes(e)?;
    let get = |n: &str| cls.iter().find(|(m, _)| m == n).map(|(_, c)| c.clone()).expect("named class");
    if pc.is_two() {
        let (g, big, gt) = (get("gamma"), get("Gamma"), get("gamma~"));
        let xi1 = e.scalar(&gens::xi(pc, e.ring(), 1)?)?;
        let e1 = e.scalar(&gens::euler(pc, e.ring(), 1)?)?;
        let lhs = e.bmul(&g, &g)?;
        let rhs = e.bmul(&xi1, &big)?.checked_add(&e.bmul(&e1, &g)?)?;
        rep.check(same_class(&lhs, &rhs), || format!("γ² = {lhs}, ξ_1Γ + e_1γ = {rhs}"));
        let omk = e.scalar(&(&gens::one(pc, e.ring())? - &gens::kappa(pc)))?;
        let want = e.bmul(&omk, &g)?.checked_add(&e1)?;
        rep.check(same_class(&gt, &want), || format!("γ̃ = {gt}, (1−κ)γ + e_1 = {want}"));
        return Ok(rep);
    }
    let big = get("Gamma");
    let sum_m = (1..p).fold(GradingROG::zero(pc), |a, i| a + GradingROG::mk(pc, i));
    let delta0 = get("Delta_0");
    rep.check(same_class(&delta0, &e.one()), || format!("Δ_0 = {delta0}"));
    for k in 0..p as usize {
        let d = get(&format!("Delta_{k}"));
        let single = d.terms().len() == 1 && d.terms().values().all(|c| *c == e.one_coef());
        rep.check(single, || format!("Δ_{k} = {d} is not a single admissible monomial"));
        let mut x = d.clone();
        for m in 0..=3i64 {
            let want = m * (GradingROG::trivial(pc, 2) + sum_m)
                + (1..=k as i64).fold(GradingROG::zero(pc), |a, i| a + GradingROG::mk(pc, i));
            let g = x.grading();
            rep.check(g.is_constant() && g.comp(0) == want, || format!("|Γ^{m}Δ_{k}| = {g}, expected {want}"));
            x = e.bmul(&x, &big)?;
        }
    }
    Ok(rep)
}

/// A matrix over the admissible basis of one coset, with rows indexed by
/// the target basis. Entries are summarized as integers: for the EG₊ map 0
/// (zero), ±1 (± a unit) or 2 (other); for the ẼG map the localized
/// coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct CosetMatrix {
    pub coset: GradingROPi,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl CosetMatrix {
    pub fn is_upper_unit(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().enumerate().all(|(c, &v)| if r == c { v.abs() == 1 } else { r < c || v == 0 }))
    }

    pub fn is_lower_unit(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().enumerate().all(|(c, &v)| if r == c { v.abs() == 1 } else { r > c || v == 0 }))
    }
}

/// ±1 if `c` is ± a unit of H(EG₊), 0 if zero, 2 otherwise.
fn eg_unit_code(c: &PointClass) -> i64 {
    if c.is_zero() {
        return 0;
    }
    let one = gens::one(c.pc(), Ring::EG).expect("EG unit");
    let Ok(inv) = gens::xi_pow(Ring::EG, GradingROG::zero(c.pc()) - c.grading()) else {
        return 2;
    };
    match c.mul(&inv) {
        Ok(u) if u == one => 1,
        Ok(u) if u == -&one => -1,
        _ => 2,
    }
}

/// f_{EG₊} on the first `count` admissible monomials of α + RO(G), against
/// the basis c^n ξ̄^{α−nω*+2n}, read off through the σ_0-expansion of the
/// B_0 component.
pub fn f_eg_matrix(e: &Engine, alpha: &GradingROPi, count: usize) -> Result<CosetMatrix> {
    let basis = admissible_basis(alpha, count)?;
    let mut entries = vec![vec![0; basis.len()]; count];
    for (c, x) in basis.iter().enumerate() {
        let img = e.eta_word(x.word())?.to_eg()?;
        for (&s, coef) in img.component(0) {
            if (s as usize) < count {
                entries[s as usize][c] = eg_unit_code(coef);
            }
        }
    }
    Ok(CosetMatrix {
        coset: alpha.clone(),
        rows: (0..count).map(|n| format!("c^{n}")).collect(),
        cols: basis.iter().map(|x| x.to_string()).collect(),
        entries,
    })
}

/// The target basis of the ẼG map: (k, n) for σ_k^n ζ_k^{α−α_k}, ordered by
/// 2n − α^G_k and then by the position of k in the fixed-dimension order.
pub fn teg_rows(alpha: &GradingROPi, count: usize) -> Vec<(usize, u32)> {
    let a = alpha.fixed_dims();
    let order = fixed_dim_order_of(&a);
    let mut rows = vec![];
    let top = 2 * count as i64 + a.iter().max().unwrap() - a.iter().min().unwrap() + 2;
    for (pos, &k) in order.iter().enumerate() {
        for n in 0.. {
            let key = 2 * n - a[k];
            if key > top {
                break;
            }
            rows.push((key, pos, k, n as u32));
        }
    }
    rows.sort();
    rows.into_iter().take(count).map(|(_, _, k, n)| (k, n)).collect()
}

/// f_{ẼG} on the first `count` admissible monomials, with entries the
/// localized coefficients of σ_k^n in component k.
pub fn f_teg_matrix(e: &Engine, alpha: &GradingROPi, count: usize) -> Result<CosetMatrix> {
    let basis: Vec<AdmissibleMonomial> = admissible_basis(alpha, count)?;
    let rows = teg_rows(alpha, count);
    let mut entries = vec![vec![0; basis.len()]; rows.len()];
    for (c, x) in basis.iter().enumerate() {
        let img = e.eta_word(x.word())?;
        for (r, &(k, n)) in rows.iter().enumerate() {
            let coef = img.coeff(k, n);
            if coef.level() == Level::GG && !coef.is_zero() {
                entries[r][c] = coef.det().l;
            }
        }
    }
    Ok(CosetMatrix {
        coset: alpha.clone(),
        rows: rows.iter().map(|(k, n)| format!("sigma_{k}^{n}")).collect(),
        cols: basis.iter().map(|x| x.to_string()).collect(),
        entries,
    })
}
