//! Small modular-arithmetic helpers shared by every module.

use num_integer::Integer;

/// Largest prime accepted by the engine. Gradings store multiplicities in
/// fixed arrays of length `(MAX_P - 1) / 2`.
pub const MAX_P: i64 = 17;
pub const MAX_H: usize = ((MAX_P - 1) / 2) as usize;

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Least non-negative residue.
pub fn md(a: i64, p: i64) -> i64 {
    a.rem_euclid(p)
}

/// Inverse modulo `p`, in `[1, p-1]`. Panics if `a` is divisible by `p`.
pub fn inv_mod(a: i64, p: i64) -> i64 {
    let g = a.extended_gcd(&p);
    assert!(g.gcd == 1 || g.gcd == -1, "{a} is not invertible mod {p}");
    md(g.x * g.gcd, p)
}

pub fn pow_mod(base: i64, exp: i64, p: i64) -> i64 {
    if exp < 0 {
        return pow_mod(inv_mod(base, p), -exp, p);
    }
    let mut r = 1 % p;
    let mut b = md(base, p);
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Exact division; `None` when the quotient is not integral.
pub fn exact_div(a: i64, b: i64) -> Option<i64> {
    if b == 0 || a % b != 0 {
        None
    } else {
        Some(a / b)
    }
}

/// All choices of one element from each list. Unlike
/// `Itertools::multi_cartesian_product`, the empty family has one choice.
pub fn choices<'a, T>(lists: &'a [Vec<T>]) -> Box<dyn Iterator<Item = Vec<&'a T>> + 'a> {
    if lists.is_empty() {
        return Box::new(std::iter::once(vec![]));
    }
    Box::new(itertools::Itertools::multi_cartesian_product(lists.iter().map(|v| v.iter())))
}
