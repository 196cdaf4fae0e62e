//! Brute-force classification of extensions 0 → K → E → Q → 0 of Mackey
//! functors for the pairs (RZ, ⟨Z⟩) and (⟨Z/p⟩, ⟨Z⟩).
//!
//! Candidate middles are enumerated with bounded structure matrices, kept
//! when the sequence is short exact, and grouped up to equivalence: an
//! isomorphism of middles that is the identity on both ends, itself found by
//! bounded search.

use super::fgab::{self, presented, FgAbGroup};
use super::mackey::{catalog, column_candidates, endomorphisms, Catalog, MackeyFunctor, MackeyMap, SEARCH_LIMIT};
use super::snf::{hnf_rows, kernel, snf, Matrix};
use crate::arith;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub kernel: MackeyFunctor,
    pub middle: MackeyFunctor,
    pub quotient: MackeyFunctor,
    pub incl: MackeyMap,
    pub proj: MackeyMap,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtClass {
    pub representative: Extension,
    /// Number of enumerated candidates falling into this class.
    pub members: usize,
    /// Catalog functors whose standard extension is equivalent to this one.
    pub equivalent_to: Vec<String>,
    /// Catalog functors isomorphic to the middle, ignoring the end maps.
    pub middle_isomorphic_to: Vec<String>,
}

fn is_injective(src: &FgAbGroup, f: &Matrix, tgt: &FgAbGroup) -> bool {
    src.kernel_lattice(f, tgt) == hnf_rows(&src.relations(), src.dim())
}

impl Extension {
    pub fn is_short_exact(&self) -> bool {
        let (k, e, q) = (&self.kernel, &self.middle, &self.quotient);
        if !(k.verify_axioms().ok() && e.verify_axioms().ok() && q.verify_axioms().ok()) {
            return false;
        }
        if !(self.incl.verify(k, e).ok() && self.proj.verify(e, q).ok()) {
            return false;
        }
        is_injective(&k.gg, &self.incl.f_gg, &e.gg)
            && is_injective(&k.ge, &self.incl.f_ge, &e.ge)
            && fgab::exact_at(&e.gg, &self.incl.f_gg, &self.proj.f_gg, &q.gg)
            && fgab::exact_at(&e.ge, &self.incl.f_ge, &self.proj.f_ge, &q.ge)
            && super::mackey::is_surjective(&q.gg, &self.proj.f_gg)
            && super::mackey::is_surjective(&q.ge, &self.proj.f_ge)
    }

    /// An equivalence `self → o`, if one exists with entries bounded by `bound`.
    pub fn equivalence(&self, o: &Extension, bound: i64) -> Result<Option<MackeyMap>> {
        let (e1, e2) = (&self.middle, &o.middle);
        if e1.gg != e2.gg || e1.ge != e2.ge {
            return Ok(None);
        }
        for psi in endomorphisms(&e1.ge, bound, SEARCH_LIMIT)? {
            if !e2.ge.maps_equal(&(&psi * &self.incl.f_ge), &o.incl.f_ge)
                || !o.quotient.ge.maps_equal(&(&o.proj.f_ge * &psi), &self.proj.f_ge)
                || !e2.ge.maps_equal(&(&psi * &e1.t), &(&e2.t * &psi))
            {
                continue;
            }
            let cols = column_candidates(&e1.gg, bound, SEARCH_LIMIT)?;
            let per_col: Vec<Vec<Vec<i64>>> = (0..e1.gg.dim())
                .map(|j| {
                    let want_q = self.proj.f_gg.col(j);
                    let want_r = (&psi * &e1.rho).col(j);
                    cols[j]
                        .iter()
                        .filter(|c| {
                            o.quotient.gg.elem_eq(&o.proj.f_gg.apply(c), &want_q)
                                && e2.ge.elem_eq(&e2.rho.apply(c), &want_r)
                        })
                        .cloned()
                        .collect()
                })
                .collect();
            let total: f64 = per_col.iter().map(|v| v.len() as f64).product();
            if total > SEARCH_LIMIT as f64 {
                return Err(Error::SizeBound(format!("{total} candidate equivalences")));
            }
            for choice in crate::arith::choices(&per_col) {
                let mut phi = Matrix::zeros(e2.gg.dim(), e1.gg.dim());
                for (j, c) in choice.iter().enumerate() {
                    for i in 0..c.len() {
                        phi[(i, j)] = c[i];
                    }
                }
                let m = MackeyMap { f_gg: phi, f_ge: psi.clone() };
                if e2.gg.maps_equal(&(&m.f_gg * &self.incl.f_gg), &o.incl.f_gg) && m.verify(e1, e2).ok() {
                    return Ok(Some(m));
                }
            }
        }
        Ok(None)
    }

    /// Pull back along `f: Q' → Q`. Only torsion-free levels are supported.
    pub fn pullback(&self, qp: &MackeyFunctor, f: &MackeyMap) -> Result<Extension> {
        let e = &self.middle;
        for g in [&e.gg, &e.ge, &qp.gg, &qp.ge, &self.kernel.gg, &self.kernel.ge] {
            if !g.torsion.is_empty() {
                return Err(Error::Unsupported("pullback with torsion levels".into()));
            }
        }
        // E'_L = ker(E_L ⊕ Q'_L → Q_L, (x, y) ↦ π(x) − f(y))
        let level = |pi: &Matrix, fl: &Matrix| -> (Vec<Vec<i64>>, Matrix) {
            let m = pi.hcat(&(-fl));
            let k = kernel(&m);
            let gens: Vec<Vec<i64>> = (0..k.cols).map(|j| k.col(j)).collect();
            let basis = hnf_rows(&gens, m.cols);
            let mut j = Matrix::zeros(m.cols, basis.len());
            for (c, b) in basis.iter().enumerate() {
                for (i, &x) in b.iter().enumerate() {
                    j[(i, c)] = x;
                }
            }
            (basis, j)
        };
        let (bgg, jgg) = level(&self.proj.f_gg, &f.f_gg);
        let (bge, jge) = level(&self.proj.f_ge, &f.f_ge);
        let block = |a: &Matrix, b: &Matrix| {
            let mut m = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
            for i in 0..a.rows {
                for j in 0..a.cols {
                    m[(i, j)] = a[(i, j)];
                }
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(a.rows + i, a.cols + j)] = b[(i, j)];
                }
            }
            m
        };
        let coords = |basis: &[Vec<i64>], m: &Matrix| -> Result<Matrix> {
            let mut out = Matrix::zeros(basis.len(), m.cols);
            for j in 0..m.cols {
                let c = lattice_coords(basis, &m.col(j))
                    .ok_or_else(|| Error::Lattice { cell: "pullback".into(), coords: format!("{:?}", m.col(j)) })?;
                for (i, x) in c.into_iter().enumerate() {
                    out[(i, j)] = x;
                }
            }
            Ok(out)
        };
        let rho = coords(&bge, &(&block(&e.rho, &qp.rho) * &jgg))?;
        let tau = coords(&bgg, &(&block(&e.tau, &qp.tau) * &jge))?;
        let t = coords(&bge, &(&block(&e.t, &qp.t) * &jge))?;
        let middle = MackeyFunctor {
            p: e.p,
            gg: FgAbGroup::free(bgg.len()),
            ge: FgAbGroup::free(bge.len()),
            rho,
            tau,
            t,
            label: None,
        };
        let kz = |m: &Matrix, q: usize| {
            let mut z = Matrix::zeros(m.rows + q, m.cols);
            for i in 0..m.rows {
                for j in 0..m.cols {
                    z[(i, j)] = m[(i, j)];
                }
            }
            z
        };
        let incl = MackeyMap {
            f_gg: coords(&bgg, &kz(&self.incl.f_gg, qp.gg.dim()))?,
            f_ge: coords(&bge, &kz(&self.incl.f_ge, qp.ge.dim()))?,
        };
        let second = |jm: &Matrix, skip: usize, q: usize| {
            let mut m = Matrix::zeros(q, jm.cols);
            for i in 0..q {
                for j in 0..jm.cols {
                    m[(i, j)] = jm[(skip + i, j)];
                }
            }
            m
        };
        let proj =
            MackeyMap { f_gg: second(&jgg, e.gg.dim(), qp.gg.dim()), f_ge: second(&jge, e.ge.dim(), qp.ge.dim()) };
        Ok(Extension { kernel: self.kernel.clone(), middle, quotient: qp.clone(), incl, proj })
    }
}

/// Coordinates of `v` in a row-HNF basis, or `None` if `v` is not in the lattice.
pub fn lattice_coords(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let mut rest = v.to_vec();
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let pc = b.iter().position(|&x| x != 0)?;
        let q = arith::exact_div(rest[pc], b[pc])?;
        for (r, &x) in rest.iter_mut().zip(b) {
            *r -= q * x;
        }
        out.push(q);
    }
    rest.iter().all(|&x| x == 0).then_some(out)
}

/// The standard extension 0 → ⟨Z⟩ → A[d] → RZ → 0 with 1 ↦ κμ, λ ↦ 1.
pub fn a_d_extension(p: i64, d: i64) -> Result<Extension> {
    Ok(Extension {
        kernel: catalog(Catalog::ConcZ, p)?,
        middle: catalog(Catalog::A(d), p)?,
        quotient: catalog(Catalog::RZ, p)?,
        incl: MackeyMap { f_gg: Matrix::column(&[0, 1]), f_ge: Matrix::zeros(1, 0) },
        proj: MackeyMap { f_gg: Matrix::row(&[1, 0]), f_ge: Matrix::from_rows(1, 1, &[1]) },
    })
}

/// Multiplication by `m` on RZ.
pub fn scale_rz(m: i64) -> MackeyMap {
    MackeyMap { f_gg: Matrix::from_rows(1, 1, &[m]), f_ge: Matrix::from_rows(1, 1, &[m]) }
}

/// Candidate middles for (RZ, ⟨Z⟩): as groups E(G/G) = Z ⊕ Z and E(G/e) = Z
/// (every extension of free groups splits), with ⟨Z⟩ included as the second
/// summand and the projection onto the first. ρ, τ and t range over bounded
/// integer matrices.
fn rz_candidates(p: i64, bound: i64) -> Result<Vec<Extension>> {
    let k = catalog(Catalog::ConcZ, p)?;
    let q = catalog(Catalog::RZ, p)?;
    let incl = MackeyMap { f_gg: Matrix::column(&[0, 1]), f_ge: Matrix::zeros(1, 0) };
    let proj = MackeyMap { f_gg: Matrix::row(&[1, 0]), f_ge: Matrix::from_rows(1, 1, &[1]) };
    let r = || -bound..=bound;
    let mut out = Vec::new();
    for t in r() {
        // π commutes with t
        if t != 1 {
            continue;
        }
        for r0 in r() {
            for r1 in r() {
                // π_e ρ = ρ_Q π and ρ ∘ incl = 0
                if r0 != 1 || r1 != 0 {
                    continue;
                }
                for t0 in r() {
                    for t1 in r() {
                        let e = MackeyFunctor {
                            p,
                            gg: FgAbGroup::free(2),
                            ge: FgAbGroup::free(1),
                            rho: Matrix::row(&[r0, r1]),
                            tau: Matrix::column(&[t0, t1]),
                            t: Matrix::from_rows(1, 1, &[t]),
                            label: None,
                        };
                        let x = Extension {
                            kernel: k.clone(),
                            middle: e,
                            quotient: q.clone(),
                            incl: incl.clone(),
                            proj: proj.clone(),
                        };
                        if x.is_short_exact() {
                            out.push(x);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Candidate middles for (⟨Z/p⟩, ⟨Z⟩): E(G/G) = Z{a, b}/⟨r⟩ for bounded
/// relation vectors r, with 1 ↦ a and b ↦ 1; E(G/e) = 0.
fn zp_candidates(p: i64, bound: i64) -> Result<Vec<Extension>> {
    let k = catalog(Catalog::ConcZ, p)?;
    let q = catalog(Catalog::ConcZp, p)?;
    let mut out = Vec::new();
    for ra in -bound..=bound {
        for rb in -bound..=bound {
            if ra == 0 && rb == 0 {
                continue;
            }
            let rel = Matrix::column(&[ra, rb]);
            let (gg, to_canon, from_canon) = canonical_presentation(&rel);
            // π(a) = 0, π(b) = 1 must kill the relation
            if arith::md(rb, p) != 0 {
                continue;
            }
            let incl_pres = Matrix::column(&[1, 0]);
            let proj_pres = Matrix::row(&[0, 1]);
            let e = MackeyFunctor {
                p,
                gg: gg.clone(),
                ge: FgAbGroup::zero(),
                rho: Matrix::zeros(0, gg.dim()),
                tau: Matrix::zeros(gg.dim(), 0),
                t: Matrix::zeros(0, 0),
                label: None,
            };
            let x = Extension {
                kernel: k.clone(),
                middle: e,
                quotient: q.clone(),
                incl: MackeyMap { f_gg: &to_canon * &incl_pres, f_ge: Matrix::zeros(0, 0) },
                proj: MackeyMap { f_gg: &proj_pres * &from_canon, f_ge: Matrix::zeros(0, 0) },
            };
            if x.is_short_exact() {
                out.push(x);
            }
        }
    }
    Ok(out)
}

/// Canonical form of Z^n / colspan(rel): the group, the map from
/// presentation coordinates to canonical coordinates, and a section back.
pub fn canonical_presentation(rel: &Matrix) -> (FgAbGroup, Matrix, Matrix) {
    let s = snf(rel);
    let g = presented(rel);
    let n = rel.rows;
    let diag: Vec<i64> = (0..n).map(|i| if i < s.rank { s.d[(i, i)] } else { 0 }).collect();
    let free: Vec<usize> = (0..n).filter(|&i| diag[i] == 0).collect();
    let tors: Vec<usize> = (0..n).filter(|&i| diag[i] > 1).collect();
    let keep: Vec<usize> = free.into_iter().chain(tors).collect();
    let uinv = unimodular_inverse(&s.u);
    let mut to = Matrix::zeros(keep.len(), n);
    let mut from = Matrix::zeros(n, keep.len());
    for (c, &i) in keep.iter().enumerate() {
        for j in 0..n {
            to[(c, j)] = s.u[(i, j)];
            from[(j, c)] = uinv[(j, i)];
        }
    }
    (g, to, from)
}

fn unimodular_inverse(u: &Matrix) -> Matrix {
    // solve U X = I column by column through the SNF of U
    let n = u.rows;
    let d = u.det();
    assert!(d == 1 || d == -1, "matrix is not unimodular");
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut minor = Matrix::zeros(n - 1, n - 1);
            let mut ri = 0;
            for r in 0..n {
                if r == j {
                    continue;
                }
                let mut ci = 0;
                for c in 0..n {
                    if c == i {
                        continue;
                    }
                    minor[(ri, ci)] = u[(r, c)];
                    ci += 1;
                }
                ri += 1;
            }
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[(i, j)] = sign * minor.det() * d;
        }
    }
    inv
}

/// Classify extensions of `q` by `k`. Supported pairs: (RZ, ⟨Z⟩) and
/// (⟨Z/p⟩, ⟨Z⟩).
pub fn ext1_classify(q: Catalog, k: Catalog, p: i64) -> Result<Vec<ExtClass>> {
    let bound = p + 1;
    let cands = match (q, k) {
        (Catalog::RZ, Catalog::ConcZ) => rz_candidates(p, bound)?,
        (Catalog::ConcZp, Catalog::ConcZ) => zp_candidates(p, bound)?,
        _ => return Err(Error::Unsupported(format!("extensions of {} by {}", q.name(p), k.name(p)))),
    };
    let mut classes: Vec<ExtClass> = Vec::new();
    'next: for c in cands {
        for cl in classes.iter_mut() {
            if c.equivalence(&cl.representative, bound)?.is_some() {
                cl.members += 1;
                continue 'next;
            }
        }
        classes.push(ExtClass { representative: c, members: 1, equivalent_to: vec![], middle_isomorphic_to: vec![] });
    }
    for cl in classes.iter_mut() {
        match q {
            Catalog::RZ => {
                for d in 0..p {
                    let std = a_d_extension(p, d)?;
                    if cl.representative.equivalence(&std, bound)?.is_some() {
                        cl.equivalent_to.push(Catalog::A(d).name(p));
                    }
                    if cl.representative.middle.is_isomorphic(&std.middle)? {
                        cl.middle_isomorphic_to.push(Catalog::A(d).name(p));
                    }
                }
            }
            _ => {
                let mid = &cl.representative.middle;
                let split = catalog(Catalog::ConcZ, p)?.direct_sum(&catalog(Catalog::ConcZp, p)?);
                if mid.is_isomorphic(&split)? {
                    cl.middle_isomorphic_to.push(format!("<Z>+<Z/{p}>"));
                }
                if mid.is_isomorphic(&catalog(Catalog::ConcZ, p)?)? {
                    cl.middle_isomorphic_to.push("<Z>".into());
                }
            }
        }
    }
    Ok(classes)
}

/// The class of an extension of RZ by ⟨Z⟩ in Z/p: c mod p where, after an
/// equivalence, τ(1) = (p, c).
pub fn rz_class_invariant(e: &Extension) -> Result<i64> {
    let p = e.middle.p;
    for d in 0..p {
        if e.equivalence(&a_d_extension(p, d)?, p + 1)?.is_some() {
            return Ok(if d == 0 { 0 } else { arith::md(-arith::inv_mod(d, p), p) });
        }
    }
    Err(Error::InvalidParam("not an extension of RZ by <Z>".into()))
}

/// Ext¹(RZ, ⟨Z⟩): exactly p classes, each equivalent to exactly one A[d],
/// and every A[d] reached.
pub fn ext_suite(p: i64) -> Result<crate::suites::SuiteReport> {
    let mut rep = crate::suites::SuiteReport::new("ext", p);
    let cls = ext1_classify(Catalog::RZ, Catalog::ConcZ, p)?;
    rep.check(cls.len() == p as usize, || format!("{} classes, expected {p}", cls.len()));
    let mut seen = vec![];
    for (i, c) in cls.iter().enumerate() {
        rep.check(c.equivalent_to.len() == 1, || format!("class {i} matches {:?}", c.equivalent_to));
        rep.check(c.representative.is_short_exact(), || format!("class {i} is not short exact"));
        seen.extend(c.equivalent_to.iter().cloned());
    }
    seen.sort();
    seen.dedup();
    rep.check(seen.len() == p as usize, || format!("reached {seen:?}"));
    Ok(rep)
}
