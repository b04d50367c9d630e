use num_bigint::BigInt;
use serde_json::json;

use crate::arith::{divisors, is_prime, prime_factors};
use crate::group::frobenius_solution_count;

use super::{CongruenceReport, LatticeAlgebra, TheoremError};

/// `sum_{K >= H, [K:H] | d} mu(H, K)`.
fn mobius_divisor_sum(l: &LatticeAlgebra, h: usize, d: usize) -> BigInt {
    let lat = l.lattice();
    let hs = l.size_of(h);
    (0..lat.len())
        .filter(|&k| lat.leq(h, k) && d % (l.size_of(k) / hs) == 0)
        .map(|k| l.mu().get(h, k).clone())
        .sum()
}

/// Sum over the conjugacy class of `F` of the Möbius values `mu(H, K)` with
/// `[K:H] | d`, which is divisible by `d` whenever `d | [G:F]`.
pub fn verify_hio(l: &LatticeAlgebra, f: usize, d: usize) -> Result<CongruenceReport, TheoremError> {
    let index = l.order() / l.size_of(f);
    if d == 0 || index % d != 0 {
        return Err(TheoremError::NotDivisor { n: d, of: index });
    }
    let lhs: BigInt = l
        .lattice()
        .class_members(f)
        .iter()
        .map(|&h| mobius_divisor_sum(l, h, d))
        .sum();
    Ok(CongruenceReport::congruence(
        l.label(),
        "hio_class_congruence",
        "sum over H conjugate to F and K >= H with [K:H] | d of mu(H, K) is divisible by d",
        json!({ "F": f, "F_order": l.size_of(f), "d": d }),
        lhs,
        d,
    ))
}

pub fn hio_suite(l: &LatticeAlgebra) -> Vec<CongruenceReport> {
    let mut out = Vec::new();
    for class in l.lattice().conj_classes() {
        let f = class[0];
        for d in divisors((l.order() / l.size_of(f)) as u64) {
            out.push(verify_hio(l, f, d as usize).expect("d divides the index"));
        }
    }
    out
}

/// The same sum taken over every subgroup of order `h`.
pub fn verify_muthm(l: &LatticeAlgebra, h: usize, d: usize) -> Result<CongruenceReport, TheoremError> {
    if h == 0 || l.order() % h != 0 {
        return Err(TheoremError::NotDivisor { n: h, of: l.order() });
    }
    let co = l.order() / h;
    if d == 0 || co % d != 0 {
        return Err(TheoremError::NotDivisor { n: d, of: co });
    }
    let lhs: BigInt = (0..l.lattice().len())
        .filter(|&x| l.size_of(x) == h)
        .map(|x| mobius_divisor_sum(l, x, d))
        .sum();
    Ok(CongruenceReport::congruence(
        l.label(),
        "mobius_order_congruence",
        "sum over |H| = h and K >= H with [K:H] | d of mu(H, K) is divisible by d",
        json!({ "h": h, "d": d }),
        lhs,
        d,
    ))
}

pub fn muthm_suite(l: &LatticeAlgebra) -> Vec<CongruenceReport> {
    let mut out = Vec::new();
    for h in divisors(l.order() as u64) {
        let h = h as usize;
        for d in divisors((l.order() / h) as u64) {
            out.push(verify_muthm(l, h, d as usize).expect("divisibility holds"));
        }
    }
    out
}

/// `psi_G(t/p) = sum_{|K| = t} psi_K(t/p) mod p`.
pub fn verify_sylow_congruence(l: &LatticeAlgebra, t: usize, p: usize) -> Result<CongruenceReport, TheoremError> {
    if t == 0 || l.order() % t != 0 {
        return Err(TheoremError::NotDivisor { n: t, of: l.order() });
    }
    if !is_prime(p as u64) {
        return Err(TheoremError::NotPrime(p));
    }
    if t % p != 0 {
        return Err(TheoremError::NotDivisor { n: p, of: t });
    }
    let lat = l.lattice();
    let whole = lat.psi(t / p);
    let within: usize = (0..lat.len())
        .filter(|&k| l.size_of(k) == t)
        .map(|k| lat.psi_below(k, t / p))
        .sum();
    Ok(CongruenceReport::congruence(
        l.label(),
        "subgroup_count_congruence",
        "subgroups of order t/p in G and in all subgroups of order t agree mod p",
        json!({ "t": t, "p": p, "psi_G": whole, "psi_sum": within }),
        BigInt::from(whole) - BigInt::from(within),
        p,
    ))
}

/// Every `t | |G|` and prime `p | t`, then `psi(p^k) = 1 mod p` for every
/// prime power dividing `|G|`.
pub fn sylow_suite(l: &LatticeAlgebra) -> Vec<CongruenceReport> {
    let n = l.order();
    let mut out = Vec::new();
    for t in divisors(n as u64) {
        for p in prime_factors(t) {
            out.push(verify_sylow_congruence(l, t as usize, p as usize).expect("valid parameters"));
        }
    }
    for p in prime_factors(n as u64) {
        let p = p as usize;
        let mut q = p;
        while n % q == 0 {
            let count = l.lattice().psi(q);
            out.push(CongruenceReport::congruence(
                l.label(),
                "prime_power_subgroup_count",
                "the number of subgroups of order p^k is 1 mod p",
                json!({ "p": p, "order": q, "count": count }),
                BigInt::from(count) - 1,
                p,
            ));
            q *= p;
        }
    }
    out
}

/// `n` divides `|C|` times the number of `g` with `|<F, g>|` dividing `n`,
/// and that product equals the corresponding sum of `gamma` values.
pub fn verify_frobenius(l: &LatticeAlgebra, f: usize, n: usize) -> Result<Vec<CongruenceReport>, TheoremError> {
    let count = frobenius_solution_count(l.group(), l.lattice().subgroup(f), n)?;
    let class = l.lattice().class_members(f);
    let lhs = BigInt::from(class.len() * count);
    let lat = l.lattice();
    let gamma_sum: BigInt = class
        .iter()
        .flat_map(|&h| {
            (0..lat.len())
                .filter(move |&k| lat.leq(h, k) && n % l.size_of(k) == 0)
                .map(move |k| l.gamma().get(h, k).clone())
        })
        .sum();
    let params = json!({ "F": f, "F_order": l.size_of(f), "n": n, "class_size": class.len(), "solutions": count });
    Ok(vec![
        CongruenceReport::congruence(
            l.label(),
            "frobenius_class_count",
            "n divides |C| times the number of g with |<F, g>| dividing n",
            params.clone(),
            lhs.clone(),
            n,
        ),
        CongruenceReport::identity(
            l.label(),
            "frobenius_gamma_sum",
            "|C| times the solution count equals the sum of gamma(H, K) over H in C and K >= H with |K| | n",
            params,
            lhs,
            gamma_sum,
        ),
    ])
}

pub fn frobenius_suite(l: &LatticeAlgebra) -> Vec<CongruenceReport> {
    let mut out = Vec::new();
    for class in l.lattice().conj_classes() {
        for n in divisors(l.order() as u64) {
            out.extend(verify_frobenius(l, class[0], n as usize).expect("n divides |G|"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_from_spec;
    use crate::theorems::build_lattice_algebra;

    fn algebra(s: &str) -> LatticeAlgebra {
        build_lattice_algebra(group_from_spec(s, 384).unwrap(), 100_000).unwrap()
    }

    fn of_order(l: &LatticeAlgebra, n: usize) -> usize {
        (0..l.lattice().len()).find(|&k| l.size_of(k) == n).unwrap()
    }

    #[test]
    fn hio_examples() {
        let s3 = algebra("S3");
        let r = verify_hio(&s3, of_order(&s3, 2), 3).unwrap();
        assert_eq!(r.lhs, BigInt::from(0));
        assert!(r.pass);
        let r = verify_hio(&s3, s3.top(), 1).unwrap();
        assert_eq!(r.lhs, BigInt::from(1));
        let c4 = algebra("C4");
        assert_eq!(verify_hio(&c4, 0, 2).unwrap().lhs, BigInt::from(0));
        assert!(verify_hio(&s3, of_order(&s3, 2), 2).is_err());
    }

    #[test]
    fn muthm_examples() {
        let s3 = algebra("S3");
        let r = verify_muthm(&s3, 1, 2).unwrap();
        assert_eq!(r.lhs, BigInt::from(-2));
        assert!(r.pass);
        assert_eq!(verify_muthm(&s3, 6, 1).unwrap().lhs, BigInt::from(1));
        assert_eq!(verify_muthm(&algebra("C4"), 1, 2).unwrap().lhs, BigInt::from(0));
    }

    #[test]
    fn sylow_examples() {
        let s3 = algebra("S3");
        let r = verify_sylow_congruence(&s3, 2, 2).unwrap();
        assert_eq!((r.params["psi_G"].as_u64(), r.params["psi_sum"].as_u64()), (Some(1), Some(3)));
        assert!(r.pass);
        assert!(verify_sylow_congruence(&s3, 3, 3).unwrap().pass);
        assert!(verify_sylow_congruence(&algebra("C4"), 4, 2).unwrap().pass);
        assert!(matches!(verify_sylow_congruence(&s3, 6, 6), Err(TheoremError::NotPrime(6))));
    }

    #[test]
    fn frobenius_examples() {
        let s3 = algebra("S3");
        let r = verify_frobenius(&s3, 0, 2).unwrap();
        assert_eq!(r[0].params["solutions"], json!(4));
        assert!(r.iter().all(|x| x.pass));
        let r = verify_frobenius(&s3, of_order(&s3, 3), 3).unwrap();
        assert_eq!(r[0].lhs, BigInt::from(3));
        assert!(verify_frobenius(&s3, 0, 4).is_err());
    }

    #[test]
    fn suites_pass_on_small_groups() {
        for s in ["C1", "S3", "Q8", "D4", "A4", "C2xC2xC2"] {
            let l = algebra(s);
            for r in hio_suite(&l)
                .into_iter()
                .chain(muthm_suite(&l))
                .chain(sylow_suite(&l))
                .chain(frobenius_suite(&l))
            {
                assert!(r.pass, "{r}");
            }
        }
    }
}
