//! Elements of H(B₊): finite sums of point-class multiples of admissible
//! monomials.

use super::admissible::AdmissibleMonomial;
use crate::error::{Error, Result};
use crate::gradings::{GradingROPi, PrimeConfig};
use crate::point_rings::{CoeffSystem, Level, PointClass};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct BClass {
    sys: CoeffSystem,
    level: Level,
    grading: GradingROPi,
    terms: BTreeMap<AdmissibleMonomial, PointClass>,
}

impl BClass {
    pub fn zero(sys: CoeffSystem, level: Level, grading: GradingROPi) -> Self {
        Self { sys, level, grading, terms: BTreeMap::new() }
    }

    pub fn from_term(sys: CoeffSystem, mono: AdmissibleMonomial, coef: PointClass) -> Result<Self> {
        let g = &mono.grading() + &GradingROPi::constant(coef.grading());
        let mut out = Self::zero(sys, coef.level(), g);
        out.add_term(mono, &coef)?;
        Ok(out)
    }

    pub fn sys(&self) -> CoeffSystem {
        self.sys
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn grading(&self) -> &GradingROPi {
        &self.grading
    }

    pub fn pc(&self) -> PrimeConfig {
        self.grading.pc()
    }

    pub fn terms(&self) -> &BTreeMap<AdmissibleMonomial, PointClass> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `mono` (zero if absent).
    pub fn coeff(&self, mono: &AdmissibleMonomial) -> Option<&PointClass> {
        self.terms.get(mono)
    }

    pub fn add_term(&mut self, mono: AdmissibleMonomial, coef: &PointClass) -> Result<()> {
        let want = &self.grading - &mono.grading();
        let ok_grading = want.is_constant() && want.comp(0) == coef.grading();
        if !ok_grading || coef.ring() != self.sys.point_ring() || coef.level() != self.level {
            return Err(Error::GradingMismatch(format!(
                "coefficient {coef:?} of {mono} does not fit a class of grading {} ({})",
                self.grading, self.level
            )));
        }
        let new = match self.terms.get(&mono) {
            Some(old) => old.checked_add(coef)?,
            None => coef.clone(),
        };
        if new.is_zero() {
            self.terms.remove(&mono);
        } else {
            self.terms.insert(mono, new);
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        if self.sys != o.sys || self.grading != o.grading || self.level != o.level {
            return Err(Error::GradingMismatch(format!(
                "cannot add classes of grading {} and {}",
                self.grading, o.grading
            )));
        }
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&o.neg())
    }

    pub fn scale(&self, a: i64) -> Self {
        let mut out = Self::zero(self.sys, self.level, self.grading.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.scale(a)).expect("scaling keeps gradings");
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Applies a coefficient map landing in `sys`.
    pub fn map_coeffs(&self, sys: CoeffSystem, f: impl Fn(&PointClass) -> Result<PointClass>) -> Result<Self> {
        let mut out = Self::zero(sys, self.level, self.grading.clone());
        for (m, c) in &self.terms {
            let img = f(c)?;
            out.level = img.level();
            out.add_term(m.clone(), &img)?;
        }
        Ok(out)
    }
}

impl fmt::Display for BClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let cs = c.to_string();
            let ms = m.to_string();
            match (cs.as_str(), ms.as_str()) {
                ("1", _) => write!(f, "{ms}")?,
                (_, "1") => write!(f, "({cs})")?,
                _ => write!(f, "({cs})*{ms}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{:?} {} at {}]", self.sys, self.level, self.grading)
    }
}

impl Serialize for BClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            monomial: String,
            word: &'a AdmissibleMonomial,
            coefficient: &'a PointClass,
        }
        #[derive(Serialize)]
        struct J<'a> {
            coefficients: CoeffSystem,
            level: Level,
            grading: &'a GradingROPi,
            terms: Vec<Term<'a>>,
        }
        let terms = self.terms.iter().map(|(m, c)| Term { monomial: m.to_string(), word: m, coefficient: c }).collect();
        J { coefficients: self.sys, level: self.level, grading: &self.grading, terms }.serialize(s)
    }
}
