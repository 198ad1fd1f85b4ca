use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use cacti_core::algebra::rational::{factorial, int};
use cacti_core::algebra::{grid_points, interpolate, truncated_exp, Polynomial, N_SYMBOL};
use cacti_core::circles::CircleSet;
use cacti_core::matrix_model::{big_f_series, f_series, model_forms, wick};
use cacti_core::monodromy::{iterate_cycle_type, MonodromyTuple, Partition, Passport, Permutation};

const VARS: [&str; 3] = ["x", "y", "z"];

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn polynomial(max_exp: i32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((rational(), prop::collection::vec(0..=max_exp, 3)), 0..5).prop_map(
        |terms| {
            terms
                .into_iter()
                .map(|(c, e)| {
                    let powers: Vec<(&str, i32)> = VARS.iter().copied().zip(e).collect();
                    Polynomial::monomial(c, &powers)
                })
                .sum()
        },
    )
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in polynomial(2), q in polynomial(2), r in polynomial(2)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn top_part_is_multiplicative(p in polynomial(2), q in polynomial(2)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let top = (&p * &q).top_homogeneous_part().unwrap();
        let product = &p.top_homogeneous_part().unwrap() * &q.top_homogeneous_part().unwrap();
        prop_assert_eq!(top, product);
    }

    #[test]
    fn json_round_trip(p in polynomial(3)) {
        prop_assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn interpolation_recovers(p in polynomial(1)) {
        let vars: Vec<String> = VARS.iter().map(|v| v.to_string()).collect();
        let degree = p.total_degree().unwrap_or(0) as usize;
        let values: Vec<i64> = (0..=degree as i64 + 1).collect();
        let samples: Vec<(Vec<i64>, BigRational)> = grid_points(3, &values)
            .into_iter()
            .map(|pt| {
                let at = VARS
                    .iter()
                    .zip(&pt)
                    .map(|(v, &x)| (v.to_string(), int(x)))
                    .collect();
                let value = p.evaluate(&at).unwrap();
                (pt, value)
            })
            .collect();
        let fitted = interpolate(&vars, &samples, degree).unwrap();
        // Variables absent from `p` may be listed with exponent 0 only.
        prop_assert!((&fitted - &p).is_zero());
    }

    #[test]
    fn exp_inverse(p in polynomial(2), d in 1i64..5) {
        let q = &p - &Polynomial::constant(p.constant_term());
        let e = truncated_exp(&q, d).unwrap();
        let f = truncated_exp(&-&q, d).unwrap();
        prop_assert_eq!(e.mul_truncated(&f, d), Polynomial::one());
    }

    #[test]
    fn permutation_group_laws(a in permutation(7), b in permutation(7), c in permutation(7)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert_eq!(a.then(&a.inverse()), Permutation::identity(7));
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
        prop_assert_eq!(a.cycle_type().sum(), 7);
    }

    #[test]
    fn tuples_satisfy_riemann_hurwitz(a in permutation(6), b in permutation(6)) {
        let t = MonodromyTuple::new(6, vec![a, b]).unwrap();
        if let Ok((g, p)) = t.euler_data() {
            let moved: i64 = t.sigma().iter().map(|s| 6 - s.num_cycles() as i64).sum();
            prop_assert_eq!(12 - moved - (6 - p as i64), 2 - 2 * g as i64);
        } else {
            prop_assert!(!t.is_transitive());
        }
    }

    #[test]
    fn class_sizes(n in 1usize..=7, pick in any::<prop::sample::Index>()) {
        let all = Partition::all_of(n);
        let lambda = &all[pick.index(all.len())];
        let members: BTreeSet<Vec<usize>> = iterate_cycle_type(n, lambda)
            .unwrap()
            .map(|p| p.images())
            .collect();
        let z: BigInt = lambda
            .multiplicities()
            .iter()
            .map(|(&len, &a)| num_traits::pow(BigInt::from(len), a) * factorial(a as u64))
            .product();
        prop_assert_eq!(BigInt::from(members.len()), factorial(n as u64) / z);
    }

    #[test]
    fn passport_text_round_trip(colors in prop::collection::vec(prop::collection::vec(2usize..6, 1..4), 1..4)) {
        let x = Passport::new(colors.into_iter().map(Partition::new).collect()).unwrap();
        prop_assert_eq!(Passport::parse(&x.to_string()).unwrap(), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn wick_double_factorial(
        n in 1usize..=2,
        k in 2usize..=3,
        seed in prop::collection::vec(rational(), 12),
        m in 1usize..=4,
    ) {
        let (h, _) = model_forms(n, k).unwrap();
        let dim = h.matrix.len();
        let lambda: Vec<BigRational> = seed.into_iter().cycle().take(dim).collect();
        let q = cacti_core::algebra::matrix::bilinear(&h.inverse().unwrap(), &lambda, &lambda);
        let moment = wick(&h, &vec![lambda; 2 * m]).unwrap();
        let double_factorial = factorial(2 * m as u64) / (factorial(m as u64) << m);
        let mut expected = BigRational::from_integer(double_factorial);
        for _ in 0..m {
            expected *= &q;
        }
        prop_assert_eq!(moment, expected);
    }

    #[test]
    fn f_matches_types_at_one(counts in prop::collection::vec(1usize..=2, 2..=3), degree in 0usize..=3) {
        prop_assume!(counts.iter().sum::<usize>() <= 4);
        let set = CircleSet::symbolic(&counts).unwrap();
        let f = f_series(&set, degree).unwrap();
        let big = big_f_series(&set, degree).unwrap();
        for (powers, _) in big.named_terms() {
            let n = powers.iter().find(|(v, _)| v == N_SYMBOL).map_or(0, |p| p.1);
            prop_assert!(n % 2 == 0 && n <= 2 * set.total_circles() as i32);
        }
        prop_assert_eq!(f, big.substitute_value(N_SYMBOL, &int(1)).unwrap());
    }
}
