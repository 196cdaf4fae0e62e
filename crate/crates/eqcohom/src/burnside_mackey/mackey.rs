//! Mackey functors for G = Z/p as pairs of groups with restriction ρ,
//! transfer τ and Weyl action t, given by integer matrices on coordinates.

use super::fgab::FgAbGroup;
use super::snf::{hnf_rows, Matrix};
use crate::arith;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MackeyFunctor {
    pub p: i64,
    pub gg: FgAbGroup,
    pub ge: FgAbGroup,
    /// G/G → G/e.
    pub rho: Matrix,
    /// G/e → G/G.
    pub tau: Matrix,
    /// G/e → G/e.
    pub t: Matrix,
    pub label: Option<String>,
}

/// Named members of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Catalog {
    Zero,
    AGG,
    AGe,
    A(i64),
    ConcZ,
    ConcZp,
    LZ,
    RZ,
    LZMinus,
    RZMinus,
}

impl Catalog {
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        Ok(match t {
            "0" | "zero" => Catalog::Zero,
            "A_GG" | "AGG" => Catalog::AGG,
            "A_Ge" | "AGe" => Catalog::AGe,
            "concZ" | "<Z>" => Catalog::ConcZ,
            "concZ/p" | "concZp" | "<Z/p>" => Catalog::ConcZp,
            "LZ" => Catalog::LZ,
            "RZ" => Catalog::RZ,
            "LZminus" | "LZ-" => Catalog::LZMinus,
            "RZminus" | "RZ-" => Catalog::RZMinus,
            _ => {
                let d = t
                    .strip_prefix("A[")
                    .and_then(|r| r.strip_suffix(']'))
                    .and_then(|r| r.trim().parse::<i64>().ok())
                    .ok_or_else(|| Error::InvalidParam(format!("unknown Mackey functor `{t}`")))?;
                Catalog::A(d)
            }
        })
    }

    pub fn name(&self, p: i64) -> String {
        match self {
            Catalog::Zero => "0".into(),
            Catalog::AGG => "A_GG".into(),
            Catalog::AGe => "A_Ge".into(),
            Catalog::A(d) => format!("A[{}]", arith::md(*d, p)),
            Catalog::ConcZ => "<Z>".into(),
            Catalog::ConcZp => format!("<Z/{p}>"),
            Catalog::LZ => "LZ".into(),
            Catalog::RZ => "RZ".into(),
            Catalog::LZMinus => "LZ-".into(),
            Catalog::RZMinus => "RZ-".into(),
        }
    }
}

/// Build a catalog functor. A[d] uses the basis {λ, κμ} of its G/G level.
pub fn catalog(name: Catalog, p: i64) -> Result<MackeyFunctor> {
    if !arith::is_prime(p) || p > arith::MAX_P {
        return Err(Error::BadPrime(p));
    }
    let z = FgAbGroup::free;
    let m1 = |x: i64| Matrix::from_rows(1, 1, &[x]);
    let e = |r: usize, c: usize| Matrix::zeros(r, c);
    let (gg, ge, rho, tau, t) = match name {
        Catalog::Zero => (FgAbGroup::zero(), FgAbGroup::zero(), e(0, 0), e(0, 0), e(0, 0)),
        Catalog::AGG => (z(2), z(1), Matrix::row(&[1, p]), Matrix::column(&[0, 1]), m1(1)),
        Catalog::AGe => {
            let n = p as usize;
            let mut t = Matrix::zeros(n, n);
            for i in 0..n {
                t[((i + 1) % n, i)] = 1;
            }
            (z(1), z(n), Matrix::column(&vec![1; n]), Matrix::row(&vec![1; n]), t)
        }
        Catalog::A(d) => {
            let dinv = if arith::md(d, p) == 0 { 0 } else { arith::inv_mod(d, p) };
            (z(2), z(1), Matrix::row(&[1, 0]), Matrix::column(&[p, -dinv]), m1(1))
        }
        Catalog::ConcZ => (z(1), FgAbGroup::zero(), e(0, 1), e(1, 0), e(0, 0)),
        Catalog::ConcZp => (FgAbGroup::cyclic(p), FgAbGroup::zero(), e(0, 1), e(1, 0), e(0, 0)),
        Catalog::LZ => (z(1), z(1), m1(p), m1(1), m1(1)),
        Catalog::RZ => (z(1), z(1), m1(1), m1(p), m1(1)),
        Catalog::LZMinus | Catalog::RZMinus if p != 2 => {
            return Err(Error::InvalidParam(format!("{} requires p = 2", name.name(p))))
        }
        Catalog::LZMinus => (FgAbGroup::cyclic(2), z(1), m1(0), m1(1), m1(-1)),
        Catalog::RZMinus => (FgAbGroup::zero(), z(1), e(1, 0), e(0, 1), m1(-1)),
    };
    Ok(MackeyFunctor { p, gg, ge, rho, tau, t, label: Some(name.name(p)) })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub failures: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }
    pub fn check(&mut self, cond: bool, msg: impl FnOnce() -> String) {
        if !cond {
            self.failures.push(msg());
        }
    }
    pub fn merge(&mut self, o: Report) {
        self.failures.extend(o.failures);
    }
}

impl MackeyFunctor {
    pub fn zero(p: i64) -> Self {
        let mut m = catalog(Catalog::Zero, p).expect("valid prime");
        m.label = Some("0".into());
        m
    }

    pub fn is_zero(&self) -> bool {
        self.gg.is_zero() && self.ge.is_zero()
    }

    pub fn with_label(mut self, l: impl Into<String>) -> Self {
        self.label = Some(l.into());
        self
    }

    /// N = Σ t^k on G/e.
    pub fn norm(&self) -> Matrix {
        let mut n = Matrix::zeros(self.ge.dim(), self.ge.dim());
        let mut tk = Matrix::identity(self.ge.dim());
        for _ in 0..self.p {
            n = &n + &tk;
            tk = &self.t * &tk;
        }
        n
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p);
        let gg = sum_groups(&self.gg, &o.gg);
        let ge = sum_groups(&self.ge, &o.ge);
        let (pg, pe) = (perm_for_sum(&self.gg, &o.gg), perm_for_sum(&self.ge, &o.ge));
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
        // reorder block coordinates into canonical (free first) order
        let rho = &(&pe * &block(&self.rho, &o.rho)) * &pg.transpose();
        let tau = &(&pg * &block(&self.tau, &o.tau)) * &pe.transpose();
        let t = &(&pe * &block(&self.t, &o.t)) * &pe.transpose();
        let label = match (&self.label, &o.label) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        MackeyFunctor { p: self.p, gg, ge, rho, tau, t, label }
    }

    pub fn verify_axioms(&self) -> Report {
        let mut r = Report::default();
        let (gg, ge) = (&self.gg, &self.ge);
        let shape = self.rho.rows == ge.dim()
            && self.rho.cols == gg.dim()
            && self.tau.rows == gg.dim()
            && self.tau.cols == ge.dim()
            && self.t.rows == ge.dim()
            && self.t.cols == ge.dim();
        if !shape {
            r.fail("matrix shapes do not match the levels");
            return r;
        }
        r.check(gg.map_well_defined(&self.rho, ge), || "ρ is not well defined".into());
        r.check(ge.map_well_defined(&self.tau, gg), || "τ is not well defined".into());
        r.check(ge.map_well_defined(&self.t, ge), || "t is not well defined".into());
        let id = Matrix::identity(ge.dim());
        r.check(ge.maps_equal(&self.t.pow(self.p as u32), &id), || "t^p ≠ 1".into());
        r.check(ge.maps_equal(&(&self.t * &self.rho), &self.rho), || {
            format!("tρ ≠ ρ: {} vs {}", &self.t * &self.rho, self.rho)
        });
        r.check(gg.maps_equal(&(&self.tau * &self.t), &self.tau), || {
            format!("τt ≠ τ: {} vs {}", &self.tau * &self.t, self.tau)
        });
        let n = self.norm();
        r.check(ge.maps_equal(&(&self.rho * &self.tau), &n), || format!("ρτ ≠ N: {} vs {}", &self.rho * &self.tau, n));
        let rtr = &(&self.rho * &self.tau) * &self.rho;
        r.check(ge.maps_equal(&rtr, &(&n * &self.rho)), || "ρτρ ≠ Nρ".into());
        r
    }

    /// The action of g = [G/e] on the G/G level, which is τρ.
    pub fn g_action(&self) -> Matrix {
        &self.tau * &self.rho
    }

    /// Whether the two functors are isomorphic, by exhaustive search over
    /// level-wise isomorphisms with bounded entries commuting with ρ, τ, t.
    pub fn is_isomorphic(&self, o: &Self) -> Result<bool> {
        Ok(self.find_isomorphism(o, (self.p + 1).max(3))?.is_some())
    }

    pub fn find_isomorphism(&self, o: &Self, bound: i64) -> Result<Option<MackeyMap>> {
        if self.p != o.p {
            return Err(Error::PrimeMismatch(self.p as u32, o.p as u32));
        }
        if self.gg != o.gg || self.ge != o.ge {
            return Ok(None);
        }
        if self.gg.rank > 4 || self.ge.rank > 4 {
            return Err(Error::SizeBound(format!("levels {} / {} too large", self.gg, self.ge)));
        }
        let ge_cands = endomorphisms(&self.ge, bound, SEARCH_LIMIT)?;
        for psi in ge_cands {
            if !o.ge.maps_equal(&(&psi * &self.t), &(&o.t * &psi)) || !is_surjective(&o.ge, &psi) {
                continue;
            }
            // columns of φ_GG must satisfy ρ' φ = ψ ρ
            let target = &psi * &self.rho;
            let col_cands = column_candidates(&self.gg, bound, SEARCH_LIMIT)?;
            let mut per_col: Vec<Vec<Vec<i64>>> = Vec::new();
            for j in 0..self.gg.dim() {
                let want = target.col(j);
                let ok: Vec<Vec<i64>> =
                    col_cands[j].iter().filter(|c| o.ge.elem_eq(&o.rho.apply(c), &want)).cloned().collect();
                per_col.push(ok);
            }
            let total: f64 = per_col.iter().map(|v| v.len() as f64).product();
            if total > SEARCH_LIMIT as f64 {
                return Err(Error::SizeBound(format!("{total} candidate G/G maps")));
            }
            let rhs = &o.tau * &psi;
            for cols in crate::arith::choices(&per_col) {
                let phi = if cols.is_empty() {
                    Matrix::zeros(0, 0)
                } else {
                    let mut m = Matrix::zeros(o.gg.dim(), cols.len());
                    for (j, c) in cols.iter().enumerate() {
                        for i in 0..c.len() {
                            m[(i, j)] = c[i];
                        }
                    }
                    m
                };
                if o.gg.maps_equal(&(&phi * &self.tau), &rhs) && is_surjective(&o.gg, &phi) {
                    return Ok(Some(MackeyMap { f_gg: phi, f_ge: psi }));
                }
            }
        }
        Ok(None)
    }

    /// Image of an element under ρ, reduced.
    pub fn restrict(&self, x: &[i64]) -> Vec<i64> {
        self.ge.reduce(&self.rho.apply(x))
    }

    pub fn transfer(&self, x: &[i64]) -> Vec<i64> {
        self.gg.reduce(&self.tau.apply(x))
    }

    pub fn conj(&self, x: &[i64]) -> Vec<i64> {
        self.ge.reduce(&self.t.apply(x))
    }
}

pub const SEARCH_LIMIT: usize = 5_000_000;

fn sum_groups(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let mut tors: Vec<i64> = a.torsion.iter().chain(&b.torsion).copied().collect();
    tors.sort_unstable();
    let g = FgAbGroup { rank: a.rank + b.rank, torsion: tors };
    // a direct sum of divisor chains need not be a chain; this engine only
    // forms sums of groups whose torsion is all of one prime order
    assert!(g.torsion.windows(2).all(|w| w[1] % w[0] == 0), "unsupported direct sum {a} + {b}");
    g
}

/// Permutation taking block coordinates (a then b) to canonical order.
fn perm_for_sum(a: &FgAbGroup, b: &FgAbGroup) -> Matrix {
    let n = a.dim() + b.dim();
    let mut src: Vec<(bool, i64, usize)> = Vec::new();
    for (i, o) in a.orders().into_iter().enumerate() {
        src.push((o != 0, o, i));
    }
    for (i, o) in b.orders().into_iter().enumerate() {
        src.push((o != 0, o, a.dim() + i));
    }
    let mut order = src.clone();
    order.sort_by_key(|&(tors, o, i)| (tors, o, i));
    let mut m = Matrix::zeros(n, n);
    for (new, &(_, _, old)) in order.iter().enumerate() {
        m[(new, old)] = 1;
    }
    m
}

pub(crate) fn is_surjective(g: &FgAbGroup, f: &Matrix) -> bool {
    let full: Vec<Vec<i64>> = (0..g.dim())
        .map(|i| {
            let mut v = vec![0; g.dim()];
            v[i] = 1;
            v
        })
        .collect();
    g.image_lattice(f) == hnf_rows(&full, g.dim())
}

/// For each coordinate j of `g`, the bounded candidate images of the j-th
/// generator under an endomorphism of `g`.
pub(crate) fn column_candidates(g: &FgAbGroup, bound: i64, limit: usize) -> Result<Vec<Vec<Vec<i64>>>> {
    let orders = g.orders();
    let mut out = Vec::new();
    for &src_order in &orders {
        let ranges: Vec<Vec<i64>> = orders
            .iter()
            .map(|&o| {
                if o == 0 {
                    if src_order != 0 {
                        vec![0]
                    } else {
                        (-bound..=bound).collect()
                    }
                } else {
                    (0..o).filter(|x| src_order == 0 || (x * src_order) % o == 0).collect()
                }
            })
            .collect();
        let count: f64 = ranges.iter().map(|r| r.len() as f64).product();
        if count > limit as f64 {
            return Err(Error::SizeBound(format!("{count} candidate columns")));
        }
        let cols: Vec<Vec<i64>> = if ranges.is_empty() {
            vec![vec![]]
        } else {
            itertools::Itertools::multi_cartesian_product(ranges.into_iter().map(|r| r.into_iter())).collect()
        };
        out.push(cols);
    }
    Ok(out)
}

pub(crate) fn endomorphisms(g: &FgAbGroup, bound: i64, limit: usize) -> Result<Vec<Matrix>> {
    let cols = column_candidates(g, bound, limit)?;
    let total: f64 = cols.iter().map(|c| c.len() as f64).product();
    if total > limit as f64 {
        return Err(Error::SizeBound(format!("{total} candidate endomorphisms of {g}")));
    }
    let n = g.dim();
    if n == 0 {
        return Ok(vec![Matrix::zeros(0, 0)]);
    }
    let mut out = Vec::new();
    for choice in crate::arith::choices(&cols) {
        let mut m = Matrix::zeros(n, n);
        for (j, c) in choice.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = c[i];
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// A morphism of Mackey functors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MackeyMap {
    pub f_gg: Matrix,
    pub f_ge: Matrix,
}

impl MackeyMap {
    pub fn identity(m: &MackeyFunctor) -> Self {
        Self { f_gg: Matrix::identity(m.gg.dim()), f_ge: Matrix::identity(m.ge.dim()) }
    }

    pub fn compose(&self, first: &MackeyMap) -> MackeyMap {
        MackeyMap { f_gg: &self.f_gg * &first.f_gg, f_ge: &self.f_ge * &first.f_ge }
    }

    pub fn verify(&self, src: &MackeyFunctor, tgt: &MackeyFunctor) -> Report {
        let mut r = Report::default();
        if self.f_gg.rows != tgt.gg.dim()
            || self.f_gg.cols != src.gg.dim()
            || self.f_ge.rows != tgt.ge.dim()
            || self.f_ge.cols != src.ge.dim()
        {
            r.fail("map shapes do not match the functors");
            return r;
        }
        r.check(src.gg.map_well_defined(&self.f_gg, &tgt.gg), || "G/G part not well defined".into());
        r.check(src.ge.map_well_defined(&self.f_ge, &tgt.ge), || "G/e part not well defined".into());
        r.check(tgt.ge.maps_equal(&(&tgt.rho * &self.f_gg), &(&self.f_ge * &src.rho)), || {
            "does not commute with ρ".into()
        });
        r.check(tgt.gg.maps_equal(&(&tgt.tau * &self.f_ge), &(&self.f_gg * &src.tau)), || {
            "does not commute with τ".into()
        });
        r.check(tgt.ge.maps_equal(&(&tgt.t * &self.f_ge), &(&self.f_ge * &src.t)), || "does not commute with t".into());
        r
    }
}

/// Exactness of `a --f--> b --g--> c` at `b`, level by level.
pub fn exact_at(f: &MackeyMap, b: &MackeyFunctor, g: &MackeyMap, c: &MackeyFunctor) -> bool {
    super::fgab::exact_at(&b.gg, &f.f_gg, &g.f_gg, &c.gg) && super::fgab::exact_at(&b.ge, &f.f_ge, &g.f_ge, &c.ge)
}

/// A bilinear map given on generators: `data[i][j]` is the product of the
/// i-th generator of the first factor and the j-th of the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bilinear {
    pub data: Vec<Vec<Vec<i64>>>,
}

impl Bilinear {
    pub fn apply(&self, x: &[i64], y: &[i64], out_dim: usize) -> Vec<i64> {
        let mut r = vec![0; out_dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                for (k, v) in self.data[i][j].iter().enumerate() {
                    r[k] += xi * yj * v;
                }
            }
        }
        r
    }
}

fn basis(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

/// Check that `(φ_GG, φ_Ge)` defines a pairing S ⊠ T → U: compatibility with
/// t and ρ, and both Frobenius relations, on all pairs of generators.
pub fn verify_pairing(
    s: &MackeyFunctor,
    t: &MackeyFunctor,
    u: &MackeyFunctor,
    phi_gg: &Bilinear,
    phi_ge: &Bilinear,
) -> Report {
    let mut r = Report::default();
    let (ugg, uge) = (u.gg.dim(), u.ge.dim());
    for x in basis(s.ge.dim()) {
        for y in basis(t.ge.dim()) {
            let lhs = u.conj(&phi_ge.apply(&x, &y, uge));
            let rhs = phi_ge.apply(&s.conj(&x), &t.conj(&y), uge);
            r.check(u.ge.elem_eq(&lhs, &rhs), || format!("t(xy) ≠ t(x)t(y) at x={x:?}, y={y:?}"));
        }
    }
    for x in basis(s.gg.dim()) {
        for y in basis(t.gg.dim()) {
            let lhs = u.restrict(&phi_gg.apply(&x, &y, ugg));
            let rhs = phi_ge.apply(&s.restrict(&x), &t.restrict(&y), uge);
            r.check(u.ge.elem_eq(&lhs, &rhs), || format!("ρ(xy) ≠ ρ(x)ρ(y) at x={x:?}, y={y:?}"));
        }
    }
    for x in basis(s.ge.dim()) {
        for y in basis(t.gg.dim()) {
            let lhs = u.transfer(&phi_ge.apply(&x, &t.restrict(&y), uge));
            let rhs = phi_gg.apply(&s.transfer(&x), &y, ugg);
            r.check(u.gg.elem_eq(&lhs, &rhs), || {
                format!("τ(xρ(y)) ≠ τ(x)y at x={x:?} (G/e), y={y:?} (G/G): {lhs:?} vs {rhs:?}")
            });
        }
    }
    for x in basis(s.gg.dim()) {
        for y in basis(t.ge.dim()) {
            let lhs = u.transfer(&phi_ge.apply(&s.restrict(&x), &y, uge));
            let rhs = phi_gg.apply(&x, &t.transfer(&y), ugg);
            r.check(u.gg.elem_eq(&lhs, &rhs), || {
                format!("τ(ρ(x)y) ≠ xτ(y) at x={x:?} (G/G), y={y:?} (G/e): {lhs:?} vs {rhs:?}")
            });
        }
    }
    r
}

impl fmt::Display for MackeyFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            write!(f, "{l}: ")?;
        }
        write!(f, "G/G={} G/e={} ρ={} τ={} t={}", self.gg, self.ge, self.rho, self.tau, self.t)
    }
}

impl fmt::Debug for MackeyFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(p: i64) -> Vec<Catalog> {
        let mut v =
            vec![Catalog::Zero, Catalog::AGG, Catalog::AGe, Catalog::ConcZ, Catalog::ConcZp, Catalog::LZ, Catalog::RZ];
        v.extend((0..p).map(Catalog::A));
        if p == 2 {
            v.extend([Catalog::LZMinus, Catalog::RZMinus]);
        }
        v
    }

    #[test]
    fn catalog_satisfies_axioms() {
        for p in [2, 3, 5, 7] {
            for c in all(p) {
                let m = catalog(c, p).unwrap();
                let r = m.verify_axioms();
                assert!(r.ok(), "{m}: {:?}", r.failures);
            }
        }
    }

    #[test]
    fn broken_rz_fails() {
        let mut m = catalog(Catalog::RZ, 3).unwrap();
        m.tau = Matrix::from_rows(1, 1, &[1]);
        let r = m.verify_axioms();
        assert!(r.failures.iter().any(|f| f.starts_with("ρτ ≠ N")));
    }

    #[test]
    fn minus_variants_need_two() {
        assert!(catalog(Catalog::LZMinus, 3).is_err());
    }

    #[test]
    fn a_d_isomorphism_classes() {
        let a = |d| catalog(Catalog::A(d), 7).unwrap();
        assert!(a(2).is_isomorphic(&a(5)).unwrap());
        assert!(!a(2).is_isomorphic(&a(3)).unwrap());
        assert!(a(3).is_isomorphic(&a(3)).unwrap());
        let agg = catalog(Catalog::AGG, 7).unwrap();
        assert!(a(1).is_isomorphic(&agg).unwrap());
        assert!(!a(2).is_isomorphic(&agg).unwrap());
    }

    #[test]
    fn a_zero_splits() {
        for p in [2, 3, 5] {
            let a0 = catalog(Catalog::A(0), p).unwrap();
            let split = catalog(Catalog::RZ, p).unwrap().direct_sum(&catalog(Catalog::ConcZ, p).unwrap());
            assert!(a0.is_isomorphic(&split).unwrap());
        }
    }

    #[test]
    fn burnside_self_pairing() {
        let p = 3;
        let a = catalog(Catalog::AGG, p).unwrap();
        // basis {1, g}: 1·x = x, g·g = p g
        let gg = Bilinear { data: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, p]]] };
        let ge = Bilinear { data: vec![vec![vec![1]]] };
        assert!(verify_pairing(&a, &a, &a, &gg, &ge).ok());
        let bad = Bilinear { data: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, p + 1]]] };
        let r = verify_pairing(&a, &a, &a, &bad, &ge);
        assert!(!r.ok());
        assert!(r.failures.iter().any(|f| f.contains("τ(")));
    }

    #[test]
    fn rz_acts_on_conc_zp() {
        let p = 5;
        let rz = catalog(Catalog::RZ, p).unwrap();
        let c = catalog(Catalog::ConcZp, p).unwrap();
        let gg = Bilinear { data: vec![vec![vec![1]]] };
        let ge = Bilinear { data: vec![vec![]] };
        assert!(verify_pairing(&rz, &c, &c, &gg, &ge).ok());
    }

    #[test]
    fn presentation_of_conc_z() {
        // A_Ge --τ--> A_GG --ε--> <Z> --> 0
        for p in [2, 3, 5] {
            let age = catalog(Catalog::AGe, p).unwrap();
            let agg = catalog(Catalog::AGG, p).unwrap();
            let cz = catalog(Catalog::ConcZ, p).unwrap();
            let n = p as usize;
            let mut tau_gg = Matrix::zeros(2, 1);
            tau_gg[(1, 0)] = 1;
            let mut f_ge = Matrix::zeros(1, n);
            for j in 0..n {
                f_ge[(0, j)] = 1;
            }
            let f = MackeyMap { f_gg: tau_gg, f_ge };
            assert!(f.verify(&age, &agg).ok());
            // ε at G/G: fixed degree, 1 ↦ 1, g ↦ 0
            let g = MackeyMap { f_gg: Matrix::row(&[1, 0]), f_ge: Matrix::zeros(0, 1) };
            assert!(g.verify(&agg, &cz).ok());
            assert!(exact_at(&f, &agg, &g, &cz));
            let zero = MackeyFunctor::zero(p);
            let h = MackeyMap { f_gg: Matrix::zeros(0, 1), f_ge: Matrix::zeros(0, 0) };
            assert!(exact_at(&g, &cz, &h, &zero));
        }
    }
}
