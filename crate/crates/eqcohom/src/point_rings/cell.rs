//! The additive structure of each ring in one grading: which Mackey functor
//! sits there, its canonical basis, and the detection coordinates used for
//! multiplication.
//!
//! Every G/G class of the point (and of its R Z and ⟨Z⟩ variants) is
//! determined by three numbers:
//!
//! * `r`, the coefficient of ι^x in its restriction (only when |x| = 0);
//! * `l`, its image in the localization obtained by inverting the Euler
//!   classes, as a multiple of the monomial e^y ξ_1^n of that grading
//!   (an integer when x^G = 0, a residue mod p when x^G < 0, zero otherwise);
//! * `d`, the coefficient of the δ-class when the grading carries one.
//!
//! Products act coordinatewise on `r` and `l`, and by a Leibniz rule on `d`,
//! because the δ-classes come from the ẼG module, which is a module over the
//! localization.

use super::{Level, Ring};
use crate::arith::{exact_div, inv_mod, md};
use crate::burnside_mackey::{catalog, Catalog, FgAbGroup, MackeyFunctor, Matrix};
use crate::error::{Error, Result};
use crate::gradings::GradingROG;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellKind {
    Zero,
    /// A[ν(x)] at |x| = x^G = 0, basis {λ^{x,a0}, κ^x}.
    A,
    /// R Z: the G/G generator restricts to ι^x.
    RZ,
    /// L Z: the G/G generator is τ(ι^x).
    LZ,
    /// ⟨Z⟩ generated by e^x, |x| > 0.
    ConcZ,
    /// ⟨Z⟩ generated by e^x κ.
    ConcZKappa,
    /// ⟨Z/p⟩ detected by the localization (S⁰) or the EG coordinate.
    ConcZp,
    /// Z/p at G/G carried by a δ-class; L Z_- when |x| = 0 (p = 2).
    Delta,
    /// R Z_- (p = 2): zero at G/G.
    RZMinus,
}

/// Detection coordinates of a G/G class in an S⁰-type ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Det {
    pub r: i64,
    pub l: i64,
    pub d: i64,
}

impl Det {
    pub fn new(r: i64, l: i64, d: i64) -> Self {
        Self { r, l, d }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub ring: Ring,
    pub x: GradingROG,
    pub kind: CellKind,
    /// Least positive representative of ν(x)^{-1} (1 when p = 2).
    pub a0: i64,
    /// Least positive representative of ν(x) (1 when p = 2).
    pub nu: i64,
}

fn is_odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

pub fn kind_of(ring: Ring, x: &GradingROG) -> CellKind {
    use CellKind::*;
    let d = x.dim();
    let f = x.fixed();
    let even = !is_odd(f);
    match ring {
        Ring::S0 => {
            if d == 0 {
                match (f, even) {
                    (0, _) => A,
                    (f, true) if f < 0 => RZ,
                    (_, true) => LZ,
                    (f, false) if f >= 3 => Delta,
                    _ => RZMinus,
                }
            } else if f == 0 {
                if d > 0 {
                    ConcZ
                } else {
                    ConcZKappa
                }
            } else if d > 0 && f < 0 && even {
                ConcZp
            } else if d < 0 && f >= 3 && !even {
                Delta
            } else {
                Zero
            }
        }
        Ring::S0RZ => {
            if d == 0 {
                match (f, even) {
                    (f, true) if f <= 0 => RZ,
                    (_, true) => LZ,
                    (f, false) if f >= 3 => Delta,
                    _ => RZMinus,
                }
            } else if d > 0 && f <= 0 && even {
                ConcZp
            } else if d < 0 && f >= 3 && !even {
                Delta
            } else {
                Zero
            }
        }
        Ring::S0Conc => {
            if f == 0 {
                ConcZKappa
            } else {
                Zero
            }
        }
        Ring::EG => {
            if d == 0 {
                if even {
                    RZ
                } else {
                    RZMinus
                }
            } else if d > 0 && even {
                ConcZp
            } else {
                Zero
            }
        }
        Ring::TEG => {
            if f == 0 {
                ConcZKappa
            } else if f >= 3 && !even {
                Delta
            } else {
                Zero
            }
        }
    }
}

impl Cell {
    pub fn new(ring: Ring, x: GradingROG) -> Self {
        let p = x.p();
        let nu = x.nu_ext();
        Self { ring, x, kind: kind_of(ring, &x), a0: inv_mod(nu, p), nu }
    }

    pub fn p(&self) -> i64 {
        self.x.p()
    }

    pub fn is_s0_like(&self) -> bool {
        matches!(self.ring, Ring::S0 | Ring::S0RZ | Ring::S0Conc)
    }

    pub fn gg(&self) -> FgAbGroup {
        use CellKind::*;
        match self.kind {
            Zero | RZMinus => FgAbGroup::zero(),
            A => FgAbGroup::free(2),
            RZ | LZ | ConcZ | ConcZKappa => FgAbGroup::free(1),
            ConcZp | Delta => FgAbGroup::cyclic(self.p()),
        }
    }

    pub fn has_ge(&self) -> bool {
        self.x.dim() == 0 && matches!(self.ring, Ring::S0 | Ring::S0RZ | Ring::EG)
    }

    pub fn ge(&self) -> FgAbGroup {
        if self.has_ge() {
            FgAbGroup::free(1)
        } else {
            FgAbGroup::zero()
        }
    }

    pub fn group(&self, level: Level) -> FgAbGroup {
        match level {
            Level::GG => self.gg(),
            Level::Ge => self.ge(),
        }
    }

    /// Action of the generator t on ι^x: (−1)^k for x = k(Λ − 1), trivial for p odd.
    pub fn t_sign(&self) -> i64 {
        if self.x.pc.is_two() && is_odd(self.x.mult(1)) {
            -1
        } else {
            1
        }
    }

    /// Whether `l` is only defined modulo p in this grading.
    fn l_mod_p(&self) -> bool {
        self.ring == Ring::S0RZ || self.x.fixed() < 0
    }

    /// Detection coordinates of a G/G element of an S⁰-type ring.
    pub fn det(&self, v: &[i64]) -> Det {
        use CellKind::*;
        let p = self.p();
        let a0 = self.a0;
        let raw = match self.kind {
            Zero | RZMinus => Det::default(),
            A => Det::new(v[0], a0 * v[0] + p * v[1], 0),
            RZ => Det::new(v[0], a0 * v[0], 0),
            LZ => Det::new(p * v[0], 0, 0),
            ConcZ => Det::new(0, v[0], 0),
            ConcZKappa => Det::new(0, p * v[0], 0),
            ConcZp => Det::new(0, a0 * v[0], 0),
            Delta if self.ring == Ring::S0RZ => Det::new(0, 0, a0 * v[0]),
            Delta => Det::new(0, 0, v[0]),
        };
        self.normalize_det(raw)
    }

    pub fn normalize_det(&self, mut det: Det) -> Det {
        let p = self.p();
        if self.l_mod_p() {
            det.l = md(det.l, p);
        }
        det.d = md(det.d, p);
        det
    }

    fn lattice_err(&self, det: Det) -> Error {
        Error::Lattice {
            cell: format!("{:?} cell of {} at {}", self.kind, self.ring, self.x),
            coords: format!("(r={}, l={}, d={})", det.r, det.l, det.d),
        }
    }

    /// Inverse of [`Cell::det`]; fails if the coordinates are not those of a class.
    pub fn from_det(&self, det: Det) -> Result<Vec<i64>> {
        use CellKind::*;
        let p = self.p();
        let det = self.normalize_det(det);
        let err = || self.lattice_err(det);
        let need = |ok: bool| if ok { Ok(()) } else { Err(err()) };
        let lm = |l: i64| if self.l_mod_p() { md(l, p) } else { l };
        let v = match self.kind {
            Zero | RZMinus => {
                need(det == Det::default())?;
                vec![]
            }
            A => {
                need(det.d == 0)?;
                let v1 = exact_div(det.l - self.a0 * det.r, p).ok_or_else(err)?;
                vec![det.r, v1]
            }
            RZ => {
                need(det.d == 0 && lm(det.l - self.a0 * det.r) == 0)?;
                vec![det.r]
            }
            LZ => {
                need(det.d == 0 && det.l == 0)?;
                vec![exact_div(det.r, p).ok_or_else(err)?]
            }
            ConcZ => {
                need(det.d == 0 && det.r == 0)?;
                vec![det.l]
            }
            ConcZKappa => {
                need(det.d == 0 && det.r == 0)?;
                vec![exact_div(det.l, p).ok_or_else(err)?]
            }
            ConcZp => {
                need(det.d == 0 && det.r == 0)?;
                vec![md(det.l * self.nu, p)]
            }
            Delta => {
                need(det.r == 0 && det.l == 0)?;
                if self.ring == Ring::S0RZ {
                    vec![md(det.d * self.nu, p)]
                } else {
                    vec![det.d]
                }
            }
        };
        Ok(self.gg().reduce(&v))
    }

    /// The value of ρ on each G/G basis element, as a multiple of ι^x.
    pub fn rho_row(&self) -> Vec<i64> {
        let n = self.gg().dim();
        (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                self.rho_coeff(&e)
            })
            .collect()
    }

    /// Coefficient of ι^x in ρ(v).
    pub fn rho_coeff(&self, v: &[i64]) -> i64 {
        if !self.has_ge() {
            return 0;
        }
        match self.ring {
            Ring::EG => match self.kind {
                CellKind::RZ => v[0],
                _ => 0,
            },
            _ => self.det(v).r,
        }
    }

    /// Coordinates of τ(ι^x).
    pub fn tau_coords(&self) -> Vec<i64> {
        if !self.has_ge() {
            return vec![];
        }
        let p = self.p();
        let n = if self.t_sign() == 1 { p } else { 0 };
        match self.ring {
            Ring::EG => match self.kind {
                CellKind::RZ => vec![n],
                _ => vec![],
            },
            _ => {
                // τ(ι^{-2n-1}) = e^{-1}δξ^{-n} when p = 2.
                let d = i64::from(self.kind == CellKind::Delta);
                self.from_det(Det::new(n, 0, d)).expect("transfer lies in the lattice")
            }
        }
    }

    pub fn mackey(&self) -> MackeyFunctor {
        let p = self.p();
        let gg = self.gg();
        let ge = self.ge();
        let rho = Matrix::from_vec_rows(&if ge.dim() == 1 { vec![self.rho_row()] } else { vec![] }, gg.dim());
        let tau = if ge.dim() == 1 { Matrix::column(&self.tau_coords()) } else { Matrix::zeros(gg.dim(), 0) };
        let t = Matrix::scalar(ge.dim(), self.t_sign());
        MackeyFunctor { p, gg, ge, rho, tau, t, label: Some(self.catalog().name(p)) }
    }

    /// The catalog member this cell is isomorphic to.
    pub fn catalog(&self) -> Catalog {
        use CellKind::*;
        match self.kind {
            Zero => Catalog::Zero,
            A if self.nu == 1 => Catalog::AGG,
            A => Catalog::A(self.nu),
            RZ => Catalog::RZ,
            LZ => Catalog::LZ,
            ConcZ | ConcZKappa => Catalog::ConcZ,
            ConcZp => Catalog::ConcZp,
            Delta if self.has_ge() => Catalog::LZMinus,
            Delta => Catalog::ConcZp,
            RZMinus => Catalog::RZMinus,
        }
    }

    /// The catalog functor itself; A_GG is presented as A[1] in the basis {1, κ}.
    pub fn catalog_functor(&self) -> MackeyFunctor {
        let c = match self.catalog() {
            Catalog::AGG => Catalog::A(1),
            c => c,
        };
        catalog(c, self.p()).expect("valid catalog member")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradings::PrimeConfig;

    fn cells(p: i64, ring: Ring) -> Vec<Cell> {
        let pc = PrimeConfig::new(p).unwrap();
        let mut out = vec![];
        for f in -6..=6i64 {
            for d in -6..=6i64 {
                if p == 2 {
                    out.push(Cell::new(ring, GradingROG::new(pc, f, &[d - f]).unwrap()));
                } else if (d - f) % 2 == 0 {
                    let mut m = vec![0; pc.h()];
                    m[0] = (d - f) / 2;
                    if m.len() > 1 {
                        m[1] = 1;
                        m[0] -= 1;
                    }
                    out.push(Cell::new(ring, GradingROG::new(pc, f, &m).unwrap()));
                }
            }
        }
        out
    }

    #[test]
    fn cells_match_catalog() {
        for p in [2, 3, 5, 7] {
            for ring in [Ring::S0, Ring::EG, Ring::TEG, Ring::S0RZ, Ring::S0Conc] {
                for c in cells(p, ring) {
                    let m = c.mackey();
                    assert!(m.verify_axioms().ok(), "{ring} {}: {:?}", c.x, m.verify_axioms());
                    assert!(m.is_isomorphic(&c.catalog_functor()).unwrap(), "{ring} {} is not {:?}", c.x, c.catalog());
                }
            }
        }
    }

    #[test]
    fn det_round_trip() {
        for p in [2, 3, 5] {
            for c in cells(p, Ring::S0).into_iter().chain(cells(p, Ring::S0RZ)) {
                let n = c.gg().dim();
                for j in 0..n {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    assert_eq!(c.from_det(c.det(&e)).unwrap(), c.gg().reduce(&e));
                }
            }
        }
    }
}
