use std::collections::BTreeSet;
use std::sync::Arc;

use mulattice::arith::{divisors, ArithmeticFunction, StandardArith};
use mulattice::group::{generated_subgroup, group_from_spec, GroupSpec};
use mulattice::poset::{hall_mu, mobius, CoefficientRing, IncidenceFunction, Poset};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// A random partial order on `0..n`, as the transitive closure of random
/// forward edges.
fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * n).prop_map(move |edges| {
            let mut leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x == y || (x < y && edges[x * n + y])).collect()).collect();
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if leq[i][k] && leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
            Poset::new(&leq).unwrap()
        })
    })
}

fn unit_diagonal(poset: &Arc<Poset>, n: u64, seeds: &[u64]) -> IncidenceFunction {
    let ring = CoefficientRing::integers_mod(n);
    let size = poset.size();
    IncidenceFunction::from_fn(poset, &ring, |x, y| {
        let s = seeds[(x * size + y) % seeds.len()];
        if x == y {
            // pick the first unit at or after s
            (0..n).map(|k| (s + k) % n).find(|&v| num_integer::Integer::gcd(&v, &n) == 1).map(BigInt::from).unwrap()
        } else {
            BigInt::from(s)
        }
    })
}

/// Number of strict chains `x = z0 < z1 < ... < zk = y`.
fn count_chains(p: &Poset, x: usize, y: usize, k: usize) -> u64 {
    if k == 0 {
        return u64::from(x == y);
    }
    (0..p.size())
        .filter(|&z| p.lt(x, z) && p.leq(z, y))
        .map(|z| count_chains(p, z, y, k - 1))
        .sum()
}

fn leaf_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1u32..40).prop_map(GroupSpec::Cyclic),
        (1u32..20).prop_map(GroupSpec::Dihedral),
        (1u32..7).prop_map(GroupSpec::Symmetric),
        (1u32..7).prop_map(GroupSpec::Alternating),
        Just(GroupSpec::Quaternion8),
        Just(GroupSpec::Klein4),
    ]
}

fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        leaf_spec(),
        proptest::collection::vec(leaf_spec(), 2..4).prop_map(GroupSpec::DirectProduct),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spec_round_trips(spec in spec_strategy()) {
        let text = spec.to_string();
        prop_assert_eq!(GroupSpec::parse(&text).unwrap(), spec);
    }

    #[test]
    fn generated_subgroup_is_a_closure_operator(
        name in prop::sample::select(vec!["S4", "D6", "Q8", "C2xC2xC2", "A4", "C3xS3"]),
        seed in proptest::collection::vec(0usize..24, 0..4),
        extra in proptest::collection::vec(0usize..24, 0..3),
    ) {
        let g = group_from_spec(name, 384).unwrap();
        let n = g.order();
        let a: BTreeSet<usize> = seed.iter().map(|x| x % n).collect();
        let mut b = a.clone();
        b.extend(extra.iter().map(|x| x % n));
        let ca = generated_subgroup(&g, a.iter().copied());
        let cb = generated_subgroup(&g, b.iter().copied());
        prop_assert!(a.iter().all(|&x| ca.contains(x)));
        prop_assert!(ca.is_subgroup_of(&cb));
        let again = generated_subgroup(&g, ca.members().iter().copied());
        prop_assert_eq!(&again, &ca);
        prop_assert_eq!(n % ca.size(), 0);
    }

    #[test]
    fn invert_is_an_involution_mod_n(p in poset_strategy(7), n in 1u64..30, seeds in proptest::collection::vec(0u64..1000, 1..20)) {
        let p = Arc::new(p);
        let f = unit_diagonal(&p, n, &seeds);
        let g = f.invert().unwrap();
        prop_assert_eq!(&g.invert().unwrap(), &f);
        prop_assert_eq!(&g.left_inverse().unwrap(), &f);
        prop_assert_eq!(&f.right_inverse().unwrap(), &f.left_inverse().unwrap());
        let delta = IncidenceFunction::delta(&p, &CoefficientRing::integers_mod(n));
        prop_assert_eq!(&f.convolve(&g).unwrap(), &delta);
        prop_assert_eq!(&g.convolve(&f).unwrap(), &delta);
    }

    #[test]
    fn mobius_is_the_alternating_eta_series(p in poset_strategy(8)) {
        let p = Arc::new(p);
        let z = CoefficientRing::Integers;
        let eta = IncidenceFunction::eta(&p, &z);
        let mut series = IncidenceFunction::zero(&p, &z);
        let mut power = IncidenceFunction::delta(&p, &z);
        for k in 0..p.size() {
            series = if k % 2 == 0 { series.add(&power).unwrap() } else { series.sub(&power).unwrap() };
            power = power.convolve(&eta).unwrap();
        }
        prop_assert!(power.is_zero());
        let mu = mobius(&p, &z);
        prop_assert_eq!(&series, &mu);
        for x in 0..p.size() {
            for y in 0..p.size() {
                prop_assert_eq!(&hall_mu(&p, x, y), mu.get(x, y));
            }
        }
    }

    #[test]
    fn eta_powers_count_chains(p in poset_strategy(6)) {
        let p = Arc::new(p);
        let z = CoefficientRing::Integers;
        let eta = IncidenceFunction::eta(&p, &z);
        let zeta = IncidenceFunction::zeta(&p, &z);
        let zz = zeta.convolve(&zeta).unwrap();
        for k in 0..=p.size() {
            let ek = eta.pow(k as u32);
            for x in 0..p.size() {
                for y in 0..p.size() {
                    prop_assert_eq!(ek.get(x, y), &BigInt::from(count_chains(&p, x, y, k)));
                    if k == 0 && p.leq(x, y) {
                        prop_assert_eq!(zz.get(x, y), &BigInt::from(p.interval(x, y).len()));
                    }
                }
            }
        }
        prop_assert!(eta.pow(p.size() as u32).is_zero());
        // zeta - eta = delta
        prop_assert_eq!(&zeta.sub(&eta).unwrap(), &IncidenceFunction::delta(&p, &z));
    }

    #[test]
    fn arithmetic_ring_laws(n in 1u64..60, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = ArithmeticFunction::random(n, &mut rng);
        let g = ArithmeticFunction::random(n, &mut rng);
        let h = ArithmeticFunction::random(n, &mut rng);
        let eps = ArithmeticFunction::standard(StandardArith::Epsilon, n).unwrap();
        prop_assert_eq!(f.convolve(&g).unwrap(), g.convolve(&f).unwrap());
        prop_assert_eq!(
            f.convolve(&g).unwrap().convolve(&h).unwrap(),
            f.convolve(&g.convolve(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.convolve(&eps).unwrap(), f.clone());
        if f.is_unit() {
            prop_assert_eq!(f.convolve(&f.invert().unwrap()).unwrap(), eps);
        } else {
            prop_assert!(f.invert().is_err());
        }
        // direct Dirichlet sum over divisors of each divisor
        let conv = f.convolve(&g).unwrap();
        for &a in f.divisors() {
            let direct: u64 = divisors(a).iter().map(|&d| f.at(d) as u128 * g.at(a / d) as u128).sum::<u128>() as u64 % n;
            prop_assert_eq!(conv.at(a), direct % n);
        }
    }
}

#[test]
fn n_equal_one_is_degenerate() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let f = ArithmeticFunction::random(1, &mut rng);
        assert!(f.is_special() && f.is_unit() && f.in_frobenius_coset());
    }
}

#[test]
fn non_unit_diagonal_rejected() {
    let p = Arc::new(Poset::chain(3));
    let f = IncidenceFunction::from_fn(&p, &CoefficientRing::Integers, |x, y| {
        if x == y && x == 1 { BigInt::zero() } else { BigInt::one() }
    });
    assert!(f.invert().is_err());
}
