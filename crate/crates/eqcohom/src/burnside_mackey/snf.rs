//! Dense integer matrices, Smith and Hermite normal forms, kernels and lattice
//! comparison. Arithmetic runs in `i128`; results are narrowed back to `i64`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn scalar(n: usize, s: i64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s;
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(rows: usize, cols: usize, v: &[i64]) -> Self {
        assert_eq!(v.len(), rows * cols, "wrong number of entries");
        Self { rows, cols, data: v.to_vec() }
    }

    pub fn from_vec_rows(v: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(v.len(), cols);
        for (i, r) in v.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn column(v: &[i64]) -> Self {
        Self::from_rows(v.len(), 1, v)
    }

    pub fn row(v: &[i64]) -> Self {
        Self::from_rows(1, v.len(), v)
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row_vec(&self, i: usize) -> Vec<i64> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)];
            }
        }
        m
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows).map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum()).collect()
    }

    pub fn pow(&self, n: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut r = Self::identity(self.rows);
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        let mut m = Self::zeros(self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
            for j in 0..o.cols {
                m[(i, self.cols + j)] = o[(i, j)];
            }
        }
        m
    }

    /// Determinant by fraction-free elimination (Bareiss).
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| self[(i, j)] as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        narrow(sign * a[n - 1][n - 1])
    }

    fn to_wide(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self[(i, j)] as i128).collect()).collect()
    }

    fn from_wide(a: &[Vec<i128>], rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = narrow(a[i][j]);
            }
        }
        m
    }
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("integer overflow in exact linear algebra")
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut m = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    m[(i, j)] += a * o[(k, j)];
                }
            }
        }
        m
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, o: Matrix) -> Matrix {
        &self * &o
    }
}

impl Mul<&Matrix> for i64 {
    type Output = Matrix;
    fn mul(self, m: &Matrix) -> Matrix {
        let mut r = m.clone();
        for x in r.data.iter_mut() {
            *x *= self;
        }
        r
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let mut r = self.clone();
        for (a, b) in r.data.iter_mut().zip(&o.data) {
            *a += b;
        }
        r
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        self + &(-o)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -1 * self
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let r: Vec<String> = self.row_vec(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", r.join(" "))?;
        }
        write!(f, "]")
    }
}

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub rank: usize,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).collect()
    }
}

pub fn snf(a: &Matrix) -> Snf {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.to_wide();
    let mut u: Vec<Vec<i128>> = Matrix::identity(m).to_wide();
    let mut v: Vec<Vec<i128>> = Matrix::identity(n).to_wide();

    let swap_rows = |x: &mut Vec<Vec<i128>>, i: usize, j: usize| x.swap(i, j);
    let swap_cols = |x: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        for r in x.iter_mut() {
            r.swap(i, j);
        }
    };
    // row_i -= q row_j
    let row_op = |x: &mut Vec<Vec<i128>>, i: usize, j: usize, q: i128| {
        let rj = x[j].clone();
        for (a, b) in x[i].iter_mut().zip(rj) {
            *a -= q * b;
        }
    };
    let col_op = |x: &mut Vec<Vec<i128>>, i: usize, j: usize, q: i128| {
        for r in x.iter_mut() {
            r[i] -= q * r[j];
        }
    };

    let mut t = 0;
    while t < m.min(n) {
        // pivot: smallest nonzero |entry| in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut d, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut done = true;
            for i in t + 1..m {
                if d[i][t] != 0 {
                    let q = d[i][t].div_euclid(d[t][t]);
                    row_op(&mut d, i, t, q);
                    row_op(&mut u, i, t, q);
                    if d[i][t] != 0 {
                        done = false;
                        swap_rows(&mut d, t, i);
                        swap_rows(&mut u, t, i);
                    }
                }
            }
            for j in t + 1..n {
                if d[t][j] != 0 {
                    let q = d[t][j].div_euclid(d[t][t]);
                    col_op(&mut d, j, t, q);
                    col_op(&mut v, j, t, q);
                    if d[t][j] != 0 {
                        done = false;
                        swap_cols(&mut d, t, j);
                        swap_cols(&mut v, t, j);
                    }
                }
            }
            if done {
                // divisibility: make d[t][t] divide the rest of the block
                let bad =
                    (t + 1..m).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| d[i][j] % d[t][t] != 0);
                match bad {
                    Some((i, _)) => {
                        // add row i to row t and continue clearing
                        row_op(&mut d, t, i, -1);
                        row_op(&mut u, t, i, -1);
                    }
                    None => break,
                }
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }
    let rank = (0..m.min(n)).take_while(|&i| d[i][i] != 0).count();
    Snf { u: Matrix::from_wide(&u, m, m), d: Matrix::from_wide(&d, m, n), v: Matrix::from_wide(&v, n, n), rank }
}

/// A basis of the integer kernel of `a`, as the columns of the result.
pub fn kernel(a: &Matrix) -> Matrix {
    let s = snf(a);
    let n = a.cols;
    let mut k = Matrix::zeros(n, n - s.rank);
    for (c, j) in (s.rank..n).enumerate() {
        for i in 0..n {
            k[(i, c)] = s.v[(i, j)];
        }
    }
    k
}

/// Row Hermite normal form of the lattice spanned by `gens` in Z^n. The
/// result lists a canonical basis (positive pivots, reduced above-pivot
/// entries), so two generating sets span the same lattice exactly when their
/// HNFs agree.
pub fn hnf_rows(gens: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| {
            assert_eq!(g.len(), n);
            g.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let mut out: Vec<Vec<i128>> = Vec::new();
    for col in 0..n {
        // gcd-reduce column `col` among the remaining rows
        loop {
            let nz: Vec<usize> = (0..a.len()).filter(|&i| a[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&i| a[i][col].abs()).unwrap();
            for &i in &nz {
                if i != piv {
                    let q = a[i][col].div_euclid(a[piv][col]);
                    let rp = a[piv].clone();
                    for (x, y) in a[i].iter_mut().zip(rp) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(i) = (0..a.len()).find(|&i| a[i][col] != 0) {
            let mut r = a.remove(i);
            if r[col] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(r);
        }
        a.retain(|r| r.iter().any(|&x| x != 0));
    }
    // reduce entries above pivots
    for k in 0..out.len() {
        let pc = out[k].iter().position(|&x| x != 0).unwrap();
        for i in 0..k {
            let q = out[i][pc].div_euclid(out[k][pc]);
            if q != 0 {
                let rk = out[k].clone();
                for (x, y) in out[i].iter_mut().zip(rk) {
                    *x -= q * y;
                }
            }
        }
    }
    out.into_iter().map(|r| r.into_iter().map(narrow).collect()).collect()
}

pub fn lattice_eq(a: &[Vec<i64>], b: &[Vec<i64>], n: usize) -> bool {
    hnf_rows(a, n) == hnf_rows(b, n)
}

/// Whether `v` lies in the lattice spanned by `gens`.
pub fn in_lattice(v: &[i64], gens: &[Vec<i64>], n: usize) -> bool {
    let mut with = gens.to_vec();
    with.push(v.to_vec());
    lattice_eq(gens, &with, n)
}
