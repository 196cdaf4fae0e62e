use eqcohom::arith::md;
use eqcohom::burnside_mackey::{snf, BurnsideElement, Matrix};
use eqcohom::gradings::{nu, BasisCoords, GradingROG, GradingROPi, PrimeConfig};
use eqcohom::parse::{parse_rog, parse_ropi};
use proptest::prelude::*;

fn pc(p: i64) -> PrimeConfig {
    PrimeConfig::new(p).unwrap()
}

fn odd_prime() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![3i64, 5, 7, 11])
}

fn rog(p: i64) -> impl Strategy<Value = GradingROG> {
    let h = pc(p).h();
    (-6i64..=6, prop::collection::vec(-4i64..=4, h)).prop_map(move |(n0, m)| GradingROG::new(pc(p), n0, &m).unwrap())
}

/// Σ c_k (M_k − M_1): the elements of RO_0 for odd p.
fn ro0(p: i64) -> impl Strategy<Value = GradingROG> {
    let h = pc(p).h();
    prop::collection::vec(-4i64..=4, h - 1).prop_map(move |c| {
        let q = pc(p);
        c.iter().enumerate().fold(GradingROG::zero(q), |acc, (i, &ck)| {
            acc + ck * (GradingROG::mk(q, i as i64 + 2) - GradingROG::mk(q, 1))
        })
    })
}

fn coords(p: i64) -> BoxedStrategy<BasisCoords> {
    if p == 2 {
        (-6i64..=6, -6i64..=6, -6i64..=6)
            .prop_map(|(one, lambda, omega)| BasisCoords::Two { one, lambda, omega })
            .boxed()
    } else {
        let h = pc(p).h();
        (-6i64..=6, prop::collection::vec(prop::collection::vec(-3i64..=3, h), p as usize))
            .prop_map(|(one, omega)| BasisCoords::Odd { one, omega })
            .boxed()
    }
}

fn any_prime_coords() -> impl Strategy<Value = (i64, BasisCoords)> {
    prop::sample::select(vec![2i64, 3, 5, 7]).prop_flat_map(|p| coords(p).prop_map(move |c| (p, c)))
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| prop::collection::vec(-9i64..=9, r * c).prop_map(move |v| Matrix::from_rows(r, c, &v)))
}

proptest! {
    #[test]
    fn ropi_decompose_inverts_reconstruct((p, c) in any_prime_coords()) {
        let a = GradingROPi::reconstruct(pc(p), &c).unwrap();
        prop_assert_eq!(a.basis_decompose().unwrap(), c);
    }

    #[test]
    fn ropi_reconstruct_inverts_decompose((p, c) in any_prime_coords(), i in 0i64..7) {
        let a = GradingROPi::reconstruct(pc(p), &c).unwrap().chi(i);
        let back = GradingROPi::reconstruct(pc(p), &a.basis_decompose().unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn nu_is_a_homomorphism((p, a, b) in odd_prime().prop_flat_map(|p| (Just(p), ro0(p), ro0(p)))) {
        let n = nu(&(a + b)).unwrap();
        prop_assert_eq!(n, md(nu(&a).unwrap() * nu(&b).unwrap(), p));
        prop_assert_eq!(md(nu(&(-a)).unwrap() * nu(&a).unwrap(), p), 1);
    }

    #[test]
    fn nu_of_mk_minus_m1(p in odd_prime(), k in 1i64..20) {
        prop_assume!(k % p != 0);
        let a = GradingROG::mk(pc(p), k) - GradingROG::mk(pc(p), 1);
        // M_k and M_{-k} are the same representation, so only ±k is determined.
        let n = nu(&a).unwrap();
        prop_assert!(md(n - k, p) == 0 || md(n + k, p) == 0, "nu = {} for k = {}", n, k);
    }

    #[test]
    fn rog_parse_round_trip((p, a) in prop::sample::select(vec![2i64, 3, 5, 7]).prop_flat_map(|p| (Just(p), rog(p)))) {
        prop_assert_eq!(parse_rog(pc(p), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn ropi_parse_round_trip((p, c) in any_prime_coords(), i in 0i64..7) {
        let a = GradingROPi::reconstruct(pc(p), &c).unwrap().chi(i);
        prop_assert_eq!(parse_ropi(pc(p), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn snf_is_a_unimodular_diagonalization(a in matrix()) {
        let s = snf(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert_eq!(s.u.det().abs(), 1);
        prop_assert_eq!(s.v.det().abs(), 1);
        let diag = s.diagonal();
        for i in 0..s.d.rows {
            for j in 0..s.d.cols {
                if i != j {
                    prop_assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(w[0] >= 0);
            let divides = if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 };
            prop_assert!(divides, "{:?}", diag);
        }
        prop_assert_eq!(diag.iter().filter(|&&x| x != 0).count(), s.rank);
    }

    #[test]
    fn burnside_ring_axioms(p in prop::sample::select(vec![2i64, 3, 5]), v in prop::collection::vec(-5i64..=5, 6)) {
        let x = BurnsideElement::new(p, v[0], v[1]);
        let y = BurnsideElement::new(p, v[2], v[3]);
        let z = BurnsideElement::new(p, v[4], v[5]);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!((x * y).eps(), x.eps() * y.eps());
        prop_assert_eq!((x * y).fixed_degree(), x.fixed_degree() * y.fixed_degree());
    }
}
