//! Elements of the point-level rings in a fixed grading and level.

use super::cell::{Cell, CellKind, Det};
use super::names::basis_names;
use super::{Level, Ring};
use crate::arith::md;
use crate::burnside_mackey::BurnsideElement;
use crate::error::{Error, Result};
use crate::gradings::{GradingROG, PrimeConfig};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointClass {
    ring: Ring,
    level: Level,
    x: GradingROG,
    v: Vec<i64>,
}

impl PointClass {
    pub fn zero(ring: Ring, x: GradingROG, level: Level) -> Self {
        let n = Cell::new(ring, x).group(level).dim();
        Self { ring, level, x, v: vec![0; n] }
    }

    pub fn from_coords(ring: Ring, x: GradingROG, level: Level, v: &[i64]) -> Result<Self> {
        let g = Cell::new(ring, x).group(level);
        if v.len() != g.dim() {
            return Err(Error::InvalidParam(format!(
                "{} coordinates given for {} at {x} ({level}), which has {}",
                v.len(),
                ring,
                g.dim()
            )));
        }
        Ok(Self { ring, level, x, v: g.reduce(v) })
    }

    /// A G/G class of an S⁰-type ring from its detection coordinates.
    pub fn from_det(ring: Ring, x: GradingROG, det: Det) -> Result<Self> {
        let c = Cell::new(ring, x);
        if !c.is_s0_like() {
            return Err(Error::InvalidParam(format!("{ring} has no detection coordinates")));
        }
        let v = c.from_det(det)?;
        Ok(Self { ring, level: Level::GG, x, v })
    }

    /// The canonical basis of (ring, grading, level).
    pub fn basis(ring: Ring, x: GradingROG, level: Level) -> Vec<Self> {
        let n = Cell::new(ring, x).group(level).dim();
        (0..n)
            .map(|j| {
                let mut v = vec![0; n];
                v[j] = 1;
                Self { ring, level, x, v }
            })
            .collect()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn grading(&self) -> GradingROG {
        self.x
    }

    pub fn pc(&self) -> PrimeConfig {
        self.x.pc
    }

    pub fn p(&self) -> i64 {
        self.x.p()
    }

    pub fn coords(&self) -> &[i64] {
        &self.v
    }

    pub fn cell(&self) -> Cell {
        Cell::new(self.ring, self.x)
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(|&c| c == 0)
    }

    /// Nonzero (basis name, coefficient) pairs.
    pub fn terms(&self) -> Vec<(String, i64)> {
        basis_names(&self.cell(), self.level).into_iter().zip(self.v.iter().copied()).filter(|(_, c)| *c != 0).collect()
    }

    /// Detection coordinates (G/G level of S⁰-type rings only).
    pub fn det(&self) -> Det {
        assert!(self.level == Level::GG, "detection coordinates live at G/G");
        self.cell().det(&self.v)
    }

    /// Image in the localization, as in [`Det::l`].
    pub fn loc(&self) -> i64 {
        self.det().l
    }

    fn same_place(&self, o: &Self) -> Result<()> {
        if self.x.pc != o.x.pc {
            return Err(Error::PrimeMismatch(self.p() as u32, o.p() as u32));
        }
        if self.ring != o.ring || self.level != o.level || self.x != o.x {
            return Err(Error::GradingMismatch(format!(
                "cannot add {} at {} ({}) and {} at {} ({})",
                self.ring, self.x, self.level, o.ring, o.x, o.level
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same_place(o)?;
        let v: Vec<i64> = self.v.iter().zip(&o.v).map(|(a, b)| a + b).collect();
        Self::from_coords(self.ring, self.x, self.level, &v)
    }

    pub fn scale(&self, k: i64) -> Self {
        let v: Vec<i64> = self.v.iter().map(|a| a * k).collect();
        Self::from_coords(self.ring, self.x, self.level, &v).expect("same shape")
    }

    /// Coefficient of ι^x at G/e: the restriction of a G/G class, or the
    /// class itself at G/e.
    fn ge_coeff(&self) -> i64 {
        match self.level {
            Level::Ge => self.v.first().copied().unwrap_or(0),
            Level::GG => self.cell().rho_coeff(&self.v),
        }
    }

    /// The EG coordinate of the image under φ (for S⁰) or of the class itself.
    fn eg_coord(&self) -> i64 {
        match self.ring {
            Ring::EG => self.v.first().copied().unwrap_or(0),
            Ring::S0 => {
                if self.x.dim() == 0 {
                    self.det().r
                } else {
                    md(self.cell().nu * self.det().l, self.p())
                }
            }
            _ => unreachable!("only S0 maps to EG"),
        }
    }

    fn rank(r: Ring) -> u8 {
        match r {
            Ring::S0 => 0,
            Ring::S0RZ => 1,
            Ring::S0Conc => 2,
            Ring::EG => 3,
            Ring::TEG => 4,
        }
    }

    /// The product. Mixed products are module actions of S⁰ on the other
    /// rings; G/G × G/e products restrict the G/G factor first.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.x.pc != o.x.pc {
            return Err(Error::PrimeMismatch(self.p() as u32, o.p() as u32));
        }
        let (a, b) = if Self::rank(self.ring) <= Self::rank(o.ring) { (self, o) } else { (o, self) };
        let target = match (a.ring, b.ring) {
            (Ring::S0, r) => r,
            (Ring::S0RZ, Ring::S0RZ) | (Ring::S0Conc, Ring::S0Conc) | (Ring::EG, Ring::EG) => a.ring,
            (r, s) => return Err(Error::UndefinedProduct(format!("{r} × {s}"))),
        };
        let x = a.x + b.x;
        let cell = Cell::new(target, x);
        if a.level == Level::Ge || b.level == Level::Ge {
            if !cell.has_ge() {
                return Ok(Self::zero(target, x, Level::Ge));
            }
            let k = a.ge_coeff() * b.ge_coeff();
            return Self::from_coords(target, x, Level::Ge, &[k]);
        }
        let v = match target {
            Ring::S0 | Ring::S0RZ | Ring::S0Conc => {
                let (da, db) = (a.det(), b.det());
                let r = if a.x.dim() == 0 && b.x.dim() == 0 { da.r * db.r } else { 0 };
                let l = da.l.checked_mul(db.l).ok_or_else(|| Error::SizeBound("localization overflow".into()))?;
                let d = if cell.kind == CellKind::Delta { da.l * db.d + db.l * da.d } else { 0 };
                cell.from_det(Det::new(r, l, d))?
            }
            Ring::EG => {
                let c = a.eg_coord() * b.eg_coord();
                match cell.kind {
                    CellKind::RZ | CellKind::ConcZp => vec![c],
                    _ if c == 0 => vec![],
                    _ => return Err(self.gap(o, &cell)),
                }
            }
            Ring::TEG => {
                let u = a.det().l * b.v.first().copied().unwrap_or(0);
                match cell.kind {
                    CellKind::ConcZKappa | CellKind::Delta => vec![u],
                    _ => vec![],
                }
            }
        };
        Self::from_coords(target, x, Level::GG, &v)
    }

    fn gap(&self, o: &Self, cell: &Cell) -> Error {
        Error::Lattice {
            cell: format!("{:?} cell of {} at {}", cell.kind, cell.ring, cell.x),
            coords: format!("{self} · {o}"),
        }
    }

    /// ρ: G/G → G/e.
    pub fn rho(&self) -> Result<Self> {
        if self.level != Level::GG {
            return Err(Error::LevelMismatch("ρ needs a G/G class".into()));
        }
        let c = self.cell();
        if !c.has_ge() {
            return Ok(Self::zero(self.ring, self.x, Level::Ge));
        }
        Self::from_coords(self.ring, self.x, Level::Ge, &[c.rho_coeff(&self.v)])
    }

    /// τ: G/e → G/G.
    pub fn tau(&self) -> Result<Self> {
        if self.level != Level::Ge {
            return Err(Error::LevelMismatch("τ needs a G/e class".into()));
        }
        let c = self.cell();
        let k = self.v.first().copied().unwrap_or(0);
        let v: Vec<i64> = c.tau_coords().iter().map(|t| t * k).collect();
        let v = if v.is_empty() { vec![0; c.gg().dim()] } else { v };
        Self::from_coords(self.ring, self.x, Level::GG, &v)
    }

    /// The Weyl action of the generator t.
    pub fn t(&self) -> Self {
        match self.level {
            Level::GG => self.clone(),
            Level::Ge => self.scale(self.cell().t_sign()),
        }
    }

    /// Action of a Burnside ring element: a + bg acts as a + b·τρ.
    pub fn act(&self, u: &BurnsideElement) -> Self {
        match self.level {
            Level::Ge => self.scale(u.eps()),
            Level::GG => {
                let tr = self.rho().and_then(|r| r.tau()).expect("G/G class");
                self.scale(u.a).checked_add(&tr.scale(u.b)).expect("same place")
            }
        }
    }
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.terms();
        if t.is_empty() {
            return write!(f, "0");
        }
        for (i, (name, c)) in t.iter().enumerate() {
            let (sign, a) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if a == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{a}*{name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{} {} at {}]", self, self.ring, self.level, self.x)
    }
}

impl Serialize for PointClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct J<'a> {
            ring: Ring,
            level: Level,
            grading: &'a GradingROG,
            terms: Vec<(String, i64)>,
        }
        J { ring: self.ring, level: self.level, grading: &self.x, terms: self.terms() }.serialize(s)
    }
}

impl Add for &PointClass {
    type Output = PointClass;
    /// Panics on mismatched gradings; use [`PointClass::checked_add`] otherwise.
    fn add(self, o: &PointClass) -> PointClass {
        self.checked_add(o).unwrap()
    }
}

impl Sub for &PointClass {
    type Output = PointClass;
    fn sub(self, o: &PointClass) -> PointClass {
        self.checked_add(&o.scale(-1)).unwrap()
    }
}

impl Neg for &PointClass {
    type Output = PointClass;
    fn neg(self) -> PointClass {
        self.scale(-1)
    }
}

impl Mul for &PointClass {
    type Output = PointClass;
    /// Panics if the product is undefined; use [`PointClass::mul`] otherwise.
    fn mul(self, o: &PointClass) -> PointClass {
        PointClass::mul(self, o).unwrap()
    }
}

impl Mul<&PointClass> for i64 {
    type Output = PointClass;
    fn mul(self, o: &PointClass) -> PointClass {
        o.scale(self)
    }
}
