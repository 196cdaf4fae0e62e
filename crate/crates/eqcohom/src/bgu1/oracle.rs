//! Seeded property suites for the B_GU(1) engine.

use super::admissible::{admissible_basis, enumerate_admissible, is_admissible};
use super::conc::{conc_include, conc_restrict};
use super::normalize::Engine;
use super::relations::{same_class, same_fixed};
use super::sample::{random_coef, random_ro0, random_ro0_g, random_word};
use super::structure::{f_eg_matrix, f_teg_matrix};
use super::word::chic_grading;
use crate::error::Result;
use crate::fixed_ring::{eta_injective_at, fixed_mul, FixedRingClass};
use crate::gradings::{BasisCoords, GradingROG, GradingROPi, PrimeConfig};
use crate::point_rings::{include_conc, CoeffSystem, Level, PointClass, Ring};
use crate::suites::SuiteReport;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_for(seed: u64, p: i64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (p as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

/// A random grading of RO(Π) with small coordinates.
pub fn random_coset<R: Rng>(pc: PrimeConfig, rng: &mut R) -> GradingROPi {
    let coords = if pc.is_two() {
        BasisCoords::Two { one: rng.gen_range(-4..=4), lambda: rng.gen_range(-4..=4), omega: rng.gen_range(-3..=3) }
    } else {
        let omega = (0..pc.p()).map(|_| (0..pc.h()).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        BasisCoords::Odd { one: rng.gen_range(-4..=4), omega }
    };
    GradingROPi::reconstruct(pc, &coords).expect("valid coordinates")
}

/// η(x·y) = η(x)·η(y) on random products of up to three words.
pub fn eta_oracle_suite(p: i64, trials: usize, seed: u64) -> Result<SuiteReport> {
    let pc = PrimeConfig::new(p)?;
    let e = Engine::new(pc, CoeffSystem::A)?;
    let mut rng = rng_for(seed, p, 1);
    let mut rep = SuiteReport::new("eta-oracle", p).with_seed(seed);
    for t in 0..trials {
        let nf = rng.gen_range(2..=3);
        let mut factors = vec![];
        for _ in 0..nf {
            let (sc, w) = random_word(pc, &mut rng, 2)?;
            let coef = random_coef(pc, Ring::S0, &mut rng)?.scale(sc);
            factors.push((coef, w));
        }
        let label = factors.iter().map(|(c, w)| format!("({c})*{w}")).collect::<Vec<_>>().join(" · ");
        let r = (|| -> Result<Option<String>> {
            let mut prod = None;
            let mut eta_prod: Option<FixedRingClass> = None;
            for (c, w) in &factors {
                let x = e.normalize(w, c)?;
                let ex = e.eta(&x)?;
                let direct = e.eta_word(w)?.mul_point(c)?;
                if !same_fixed(&ex, &direct) {
                    return Ok(Some(format!("η of the normal form of ({c})*{w} differs from η of its generators")));
                }
                prod = Some(match prod {
                    None => x,
                    Some(acc) => e.bmul(&acc, &x)?,
                });
                eta_prod = Some(match eta_prod {
                    None => ex,
                    Some(acc) => fixed_mul(&acc, &ex)?,
                });
            }
            let prod = prod.expect("nonempty");
            let lhs = e.eta(&prod)?;
            let rhs = eta_prod.expect("nonempty");
            if !same_fixed(&lhs, &rhs) {
                let inj = if eta_injective_at(prod.grading()) { "" } else { " (non-injective grading)" };
                return Ok(Some(format!("η(product) ≠ product of η{inj}")));
            }
            Ok(None)
        })();
        match r {
            Ok(None) => rep.checked += 1,
            Ok(Some(m)) => rep.fail(format!("trial {t}: {label}: {m}")),
            Err(err) => rep.fail(format!("trial {t}: {label}: {err}")),
        }
    }
    Ok(rep)
}

/// Exponent tuples (m, ε, n) of admissible monomials in the coset of α
/// with ‖x‖ ≤ 2·max_half, found by exhaustive search over a box.
pub fn brute_force_exponents(alpha: &GradingROPi, bound: i64, max_half: i64) -> Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    let a = alpha.fixed_dims();
    let p = a.len();
    // Per index: (m, ε, 0) or (0, 0, n) with n ≥ 1.
    let mut opts = vec![];
    for m in 0..=bound {
        for eps in 0..=1 {
            opts.push((m, eps, 0));
        }
    }
    for n in 1..=bound {
        opts.push((0, 0, n));
    }
    let mut out = vec![];
    let total = opts.len().pow(p as u32);
    for mut code in 0..total {
        let mut m = vec![0; p];
        let mut eps = vec![0; p];
        let mut n = vec![0; p];
        for k in 0..p {
            let (x, y, z) = opts[code % opts.len()];
            code /= opts.len();
            m[k] = x;
            eps[k] = y;
            n[k] = z;
        }
        if (0..p).map(|k| m[k] + eps[k]).sum::<i64>() > max_half {
            continue;
        }
        let shift: Vec<i64> = (0..p).map(|k| 2 * (m[k] - n[k]) - a[k]).collect();
        if shift.iter().any(|&x| x != shift[0]) {
            continue;
        }
        if !(0..p).any(|k| eps[k] == 0 && n[k] == 0) {
            continue;
        }
        // ε must be 1 on an initial segment of the order by m − n.
        let mut idx: Vec<usize> = (0..p).collect();
        idx.sort_by_key(|&k| (-(m[k] - n[k]), k));
        let seq: Vec<i64> = idx.iter().map(|&k| eps[k]).collect();
        if seq.windows(2).any(|w| w[0] == 0 && w[1] == 1) {
            continue;
        }
        out.push((m, eps, n));
    }
    out.sort();
    out
}

/// The admissible basis of random cosets against exhaustive search and the
/// counting lemma.
pub fn admissible_count_suite(p: i64, cosets: usize, seed: u64) -> Result<SuiteReport> {
    let pc = PrimeConfig::new(p)?;
    let mut rng = rng_for(seed, p, 2);
    let mut rep = SuiteReport::new("admissible-count", p).with_seed(seed);
    let bound = if p <= 3 { 4 } else { 3 };
    let mut done = 0;
    while done < cosets {
        let alpha = random_coset(pc, &mut rng);
        let a = alpha.fixed_dims();
        let spread = a.iter().max().unwrap() - a.iter().min().unwrap();
        if spread > 2 * bound {
            continue;
        }
        done += 1;
        let max_half = bound;
        let mut brute = brute_force_exponents(&alpha, bound, max_half);
        let amax = *a.iter().max().unwrap();
        let amin = *a.iter().min().unwrap();
        let all = enumerate_admissible(&alpha, (2 * bound - amin).max(-amax + 8) + 2)?;
        let mut got: Vec<_> = all
            .iter()
            .filter(|x| x.int_dim() <= 2 * max_half)
            .map(|x| (x.word().m.clone(), x.word().q.clone(), x.word().n.clone()))
            .collect();
        got.sort();
        brute.sort();
        rep.check(got == brute, || format!("{alpha}: enumeration {got:?} vs exhaustive {brute:?}"));
        // One monomial per even dimension.
        let basis = admissible_basis(&alpha, 10)?;
        let dims: Vec<i64> = basis.iter().map(|x| x.int_dim()).collect();
        rep.check(dims == (0..10).map(|i| 2 * i).collect::<Vec<_>>(), || format!("{alpha}: dimensions {dims:?}"));
        // Count per fixed-dimension offset N.
        for nn in (-amax..=-amax + 8).step_by(2) {
            let want = a.iter().filter(|&&x| x + nn >= 0).count();
            let have = all
                .iter()
                .filter(|x| {
                    let w = x.word();
                    (0..a.len()).all(|k| 2 * (w.m[k] - w.n[k]) == a[k] + nn)
                })
                .count();
            rep.check(want == have, || format!("{alpha}: N = {nn}: {have} monomials, expected {want}"));
        }
        for x in &basis {
            let w = x.word();
            let g = x.grading();
            let f = g.fixed_dims();
            let dim_ok = x.int_dim() == (0..a.len()).map(|k| 2 * (w.m[k] + w.q[k])).sum::<i64>();
            let fix_ok = (0..a.len()).all(|k| f[k] == 2 * (w.m[k] - w.n[k]));
            let coset_ok = (&g - &alpha).is_constant();
            rep.check(dim_ok && fix_ok && coset_ok && is_admissible(w).is_ok(), || {
                format!("{alpha}: bookkeeping fails for {x}")
            });
        }
    }
    Ok(rep)
}

/// Upper triangularity of f_{EG₊} and lower triangularity of f_{ẼG}.
pub fn triangularity_suite(p: i64, cosets: usize, size: usize, seed: u64) -> Result<SuiteReport> {
    let pc = PrimeConfig::new(p)?;
    let e = Engine::new(pc, CoeffSystem::A)?;
    let mut rng = rng_for(seed, p, 3);
    let mut rep = SuiteReport::new("triangularity", p).with_seed(seed);
    for _ in 0..cosets {
        let alpha = random_coset(pc, &mut rng);
        let m = f_eg_matrix(&e, &alpha, size)?;
        rep.check(m.is_upper_unit(), || format!("f_EG on {alpha} is not upper unitriangular: {:?}", m.entries));
        let m = f_teg_matrix(&e, &alpha, size)?;
        rep.check(m.is_lower_unit(), || {
            format!("f_TEG on {alpha} is not lower triangular with ±1 diagonal: {:?}", m.entries)
        });
    }
    Ok(rep)
}

/// A random ⟨Z⟩ class u σ_k^s ζ_k^δ.
pub fn random_conc_class<R: Rng>(pc: PrimeConfig, rng: &mut R) -> Result<FixedRingClass> {
    let p = pc.p();
    let k = rng.gen_range(0..p as usize);
    let sp = rng.gen_range(0..=2u32);
    let y = rng.gen_range(-2..=2) * GradingROG::mk(pc, 1) + random_ro0_g(pc, rng);
    let gen = PointClass::basis(Ring::S0Conc, y, Level::GG);
    let n = [1, -1, 2, 3][rng.gen_range(0..4)];
    let u = gen[0].scale(n);
    let mut r = random_ro0(pc, rng);
    for _ in 0..rng.gen_range(0..=3) {
        let i = rng.gen_range(0..p);
        if rng.gen_bool(0.5) {
            r += &GradingROPi::omega(pc, i, rng.gen_range(1..=pc.h() as i64));
        } else {
            r += &chic_grading(pc, i as usize);
        }
    }
    let delta = &r - &GradingROPi::constant(r.comp(k as i64));
    FixedRingClass::monomial(k, sp, &u, &delta)
}

/// ⟨Z⟩ coefficients: the point groups, the inclusion into A coefficients
/// and its image.
pub fn conc_suite(p: i64, samples: usize, seed: u64) -> Result<SuiteReport> {
    let pc = PrimeConfig::new(p)?;
    let e = Engine::new(pc, CoeffSystem::A)?;
    let mut rng = rng_for(seed, p, 4);
    let mut rep = SuiteReport::new("conc", p).with_seed(seed);
    for y in crate::point_rings::les::window(pc, 6, 1) {
        let nonzero = !PointClass::basis(Ring::S0Conc, y, Level::GG).is_empty();
        rep.check(nonzero == (y.fixed() == 0), || format!("H^{y}(S0;<Z>) nonzero = {nonzero}"));
    }
    for t in 0..samples {
        let x = random_conc_class(pc, &mut rng)?;
        let (sc, w) = random_word(pc, &mut rng, 2)?;
        let y = e.normalize(&w, &e.one_coef().scale(sc))?;
        let r = (|| -> Result<Option<String>> {
            let ix = conc_include(&x)?;
            if ix.is_zero() {
                return Ok(Some("inclusion is zero".into()));
            }
            if !same_fixed(&e.eta(&ix)?, &x.map_coeffs(Ring::S0, include_conc)?) {
                return Ok(Some(format!("η(ι(x)) ≠ x for ι(x) = {ix}")));
            }
            if !Engine::quotient_rz(&ix)?.is_zero() {
                return Ok(Some(format!("ι(x) = {ix} survives in R Z coefficients")));
            }
            let lhs = e.bmul(&y, &ix)?;
            let yx = e.eta(&y)?.mul(&x)?;
            let rhs = conc_include(&yx)?;
            if !same_class(&lhs, &rhs) {
                return Ok(Some(format!("y·ι(x) = {lhs} but ι(η(y)x) = {rhs}")));
            }
            // The product lies in the image: recover its ⟨Z⟩ preimage.
            if !lhs.is_zero() {
                let back = conc_restrict(&e.eta(&lhs)?)?;
                if !same_class(&conc_include(&back)?, &lhs) {
                    return Ok(Some("restriction to ⟨Z⟩ does not invert the inclusion".into()));
                }
            }
            Ok(None)
        })();
        match r {
            Ok(None) => rep.checked += 1,
            Ok(Some(m)) => rep.fail(format!("sample {t} ({x}, y = {w}): {m}")),
            Err(err) => rep.fail(format!("sample {t} ({x}, y = {w}): {err}")),
        }
    }
    Ok(rep)
}

/// The R Z engine against the A engine followed by the coefficient quotient.
pub fn rz_quotient_suite(p: i64, trials: usize, seed: u64) -> Result<SuiteReport> {
    let pc = PrimeConfig::new(p)?;
    let mut rng = rng_for(seed, p, 5);
    let mut words = vec![];
    for _ in 0..trials {
        let (sc, w) = random_word(pc, &mut rng, 3)?;
        let c = random_coef(pc, Ring::S0, &mut rng)?.scale(sc);
        words.push((c, w));
    }
    let mut rep = super::relations::rz_matches_quotient(pc, &words)?;
    rep.seed = Some(seed);
    Ok(rep)
}
