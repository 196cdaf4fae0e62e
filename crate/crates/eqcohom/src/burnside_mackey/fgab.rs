//! Finitely generated abelian groups in divisor-chain form, and subgroup
//! computations for maps between them.

use super::snf::{hnf_rows, kernel, snf, Matrix};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Z^rank ⊕ ⊕ Z/torsion[i]. Elements are coordinate vectors with the free
/// coordinates first; torsion coordinates are reduced modulo their order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbGroup {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl FgAbGroup {
    pub fn new(rank: usize, torsion: Vec<i64>) -> Self {
        assert!(torsion.iter().all(|&t| t >= 2), "torsion orders must be at least 2");
        assert!(torsion.windows(2).all(|w| w[1] % w[0] == 0), "torsion must be a divisor chain");
        Self { rank, torsion }
    }

    pub fn zero() -> Self {
        Self::new(0, vec![])
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, vec![])
    }

    pub fn cyclic(n: i64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::zero(),
            _ => Self::new(0, vec![n]),
        }
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Order of each coordinate, with 0 for free coordinates.
    pub fn orders(&self) -> Vec<i64> {
        std::iter::repeat_n(0, self.rank).chain(self.torsion.iter().copied()).collect()
    }

    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.dim(), "element has wrong length for {self}");
        v.iter().zip(self.orders()).map(|(&x, o)| if o == 0 { x } else { x.rem_euclid(o) }).collect()
    }

    pub fn elem_eq(&self, a: &[i64], b: &[i64]) -> bool {
        self.reduce(a) == self.reduce(b)
    }

    pub fn elem_is_zero(&self, a: &[i64]) -> bool {
        self.reduce(a).iter().all(|&x| x == 0)
    }

    /// Generators of the relation lattice in Z^dim.
    pub fn relations(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        self.orders()
            .iter()
            .enumerate()
            .filter(|(_, &o)| o != 0)
            .map(|(i, &o)| {
                let mut v = vec![0; n];
                v[i] = o;
                v
            })
            .collect()
    }

    /// Diagonal matrix of relations (columns), zero columns for free coordinates.
    pub fn relation_matrix(&self) -> Matrix {
        let o = self.orders();
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, &x) in o.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    /// Whether two maps into `self` agree.
    pub fn maps_equal(&self, f: &Matrix, g: &Matrix) -> bool {
        assert_eq!((f.rows, f.cols), (g.rows, g.cols));
        (0..f.cols).all(|j| self.elem_eq(&f.col(j), &g.col(j)))
    }

    pub fn map_is_zero(&self, f: &Matrix) -> bool {
        (0..f.cols).all(|j| self.elem_is_zero(&f.col(j)))
    }

    /// Whether `f`, given on coordinates, descends to a homomorphism `self → tgt`.
    pub fn map_well_defined(&self, f: &Matrix, tgt: &FgAbGroup) -> bool {
        if f.rows != tgt.dim() || f.cols != self.dim() {
            return false;
        }
        self.orders()
            .iter()
            .enumerate()
            .filter(|(_, &o)| o != 0)
            .all(|(j, &o)| tgt.elem_is_zero(&f.col(j).iter().map(|x| x * o).collect::<Vec<_>>()))
    }

    /// Canonical generators of the subgroup `f(src)` as a lattice in Z^dim
    /// containing the relations of `self`.
    pub fn image_lattice(&self, f: &Matrix) -> Vec<Vec<i64>> {
        let mut gens: Vec<Vec<i64>> = (0..f.cols).map(|j| f.col(j)).collect();
        gens.extend(self.relations());
        hnf_rows(&gens, self.dim())
    }

    /// Canonical generators of ker(f: self → tgt), as a lattice in Z^dim
    /// containing the relations of `self`.
    pub fn kernel_lattice(&self, f: &Matrix, tgt: &FgAbGroup) -> Vec<Vec<i64>> {
        let n = self.dim();
        let big = f.hcat(&tgt.relation_matrix());
        let k = kernel(&big);
        let mut gens: Vec<Vec<i64>> = (0..k.cols).map(|j| k.col(j)[..n].to_vec()).collect();
        gens.extend(self.relations());
        hnf_rows(&gens, n)
    }

    /// Cokernel of `f: src → self`.
    pub fn cokernel(&self, f: &Matrix) -> FgAbGroup {
        let m = f.hcat(&self.relation_matrix());
        presented(&m)
    }
}

/// The group Z^rows / (column span of `rel`), in divisor-chain form.
pub fn presented(rel: &Matrix) -> FgAbGroup {
    let s = snf(rel);
    let diag = s.diagonal();
    let mut torsion: Vec<i64> = diag.iter().copied().filter(|&x| x > 1).collect();
    torsion.sort_unstable();
    let rank = rel.rows - s.rank;
    FgAbGroup::new(rank, torsion)
}

/// Exactness of `a --f--> b --g--> c` at `b`.
pub fn exact_at(b: &FgAbGroup, f: &Matrix, g: &Matrix, c: &FgAbGroup) -> bool {
    b.image_lattice(f) == b.kernel_lattice(g, c)
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernels() {
        let z = FgAbGroup::free(1);
        assert_eq!(z.cokernel(&Matrix::column(&[3])), FgAbGroup::cyclic(3));
        let z2 = FgAbGroup::free(2);
        let f = Matrix::from_rows(2, 2, &[2, 0, 0, 4]);
        assert_eq!(z2.cokernel(&f), FgAbGroup::new(0, vec![2, 4]));
        let zp = FgAbGroup::cyclic(5);
        assert_eq!(zp.cokernel(&Matrix::zeros(1, 0)), zp);
    }

    #[test]
    fn short_exact() {
        // 0 -> Z --p--> Z --> Z/p -> 0
        let z = FgAbGroup::free(1);
        let zp = FgAbGroup::cyclic(3);
        let zero = FgAbGroup::zero();
        let p = Matrix::column(&[3]);
        let q = Matrix::column(&[1]);
        assert!(exact_at(&z, &Matrix::zeros(1, 0), &p, &z));
        assert!(exact_at(&z, &p, &q, &zp));
        assert!(exact_at(&zp, &q, &Matrix::zeros(0, 1), &zero));
        assert!(!exact_at(&z, &Matrix::column(&[6]), &q, &zp));
    }

    #[test]
    fn well_definedness() {
        let z2 = FgAbGroup::cyclic(2);
        let z = FgAbGroup::free(1);
        assert!(!z2.map_well_defined(&Matrix::column(&[1]), &z));
        assert!(z2.map_well_defined(&Matrix::column(&[0]), &z));
        assert!(z.map_well_defined(&Matrix::column(&[1]), &z2));
    }
}
