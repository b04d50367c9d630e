use std::collections::HashSet;

use num_bigint::BigInt;
use serde_json::json;

use crate::arith::{binomial_kernel, divisors};
use crate::bitset::BitSet;
use crate::group::{chi, GroupTable, SubgroupLattice};

use super::{CongruenceReport, TheoremError};

/// Result of enumerating the left-translation action on `t`-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideOracle {
    pub t: usize,
    pub subsets: usize,
    pub orbits: usize,
    /// `lambda[k]`: number of `t`-subsets whose stabilizer is exactly subgroup `k`.
    pub lambda: Vec<u64>,
}

fn kernel(m: usize, d: usize) -> BigInt {
    BigInt::from(binomial_kernel(m as u64, d as u64))
}

/// `sum_{d | t} b_m(d) chi(t/d)` with `m = |G|/t`.
fn kernel_sum(g: &GroupTable, t: usize) -> BigInt {
    let m = g.order() / t;
    divisors(t as u64)
        .into_iter()
        .map(|d| kernel(m, d as usize) * chi(g, t / d as usize))
        .sum()
}

fn check_divides(t: usize, order: usize) -> Result<(), TheoremError> {
    if t == 0 || order % t != 0 {
        return Err(TheoremError::NotDivisor { n: t, of: order });
    }
    Ok(())
}

/// `sum_{d | t} b_m(d) chi(t/d) = 0 mod t` for a group of order `tm`.
pub fn verify_element_order_congruence(g: &GroupTable, t: usize) -> Result<CongruenceReport, TheoremError> {
    check_divides(t, g.order())?;
    let m = g.order() / t;
    Ok(CongruenceReport::congruence(
        g.label(),
        "binomial_element_order_congruence",
        "sum over d | t of C(dm-1, d-1) chi(t/d) is divisible by t",
        json!({ "t": t, "m": m }),
        kernel_sum(g, t),
        t,
    ))
}

pub fn prop21_suite(g: &GroupTable) -> Vec<CongruenceReport> {
    divisors(g.order() as u64)
        .into_iter()
        .map(|t| verify_element_order_congruence(g, t as usize).expect("t divides |G|"))
        .collect()
}

/// Next integer with the same number of set bits.
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Enumerates all `t`-subsets of `G`, counts orbits under left translation
/// and records the exact stabilizer of each subset.
pub fn burnside_oracle(
    g: &GroupTable,
    lattice: &SubgroupLattice,
    t: usize,
    bound: usize,
) -> Result<BurnsideOracle, TheoremError> {
    let n = g.order();
    if n > bound.min(63) {
        return Err(TheoremError::BurnsideBound { order: n, bound });
    }
    check_divides(t, n)?;
    let translate = |a: usize, set: u64| -> u64 {
        let mut out = 0u64;
        let mut rest = set;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            out |= 1 << g.mul(a, x);
            rest &= rest - 1;
        }
        out
    };

    let mut lambda = vec![0u64; lattice.len()];
    let mut seen = HashSet::new();
    let (mut orbits, mut subsets) = (0, 0);
    let limit = 1u64 << n;
    let mut set = (1u64 << t) - 1;
    while set < limit {
        subsets += 1;
        let mut stab = BitSet::new(n);
        for a in 0..n {
            let image = translate(a, set);
            if image == set {
                stab.insert(a);
            }
            if seen.insert(image) && a == 0 {
                orbits += 1;
            }
        }
        let k = lattice
            .index_of(&stab)
            .expect("a stabilizer is a subgroup");
        lambda[k] += 1;
        set = next_combination(set);
    }
    Ok(BurnsideOracle { t, subsets, orbits, lambda })
}

/// Orbit count against the Burnside average, then the class-sum and
/// fixed-point relations for `lambda`.
pub fn verify_lambda_congruences(
    g: &GroupTable,
    lattice: &SubgroupLattice,
    oracle: &BurnsideOracle,
) -> Vec<CongruenceReport> {
    let t = oracle.t;
    let m = g.order() / t;
    let label = g.label();
    let mut out = vec![CongruenceReport::identity(
        label,
        "burnside_orbit_count",
        "orbits of G on t-subsets times |G| equals the sum over d | t of C(dm, d) chi(t/d)",
        json!({ "t": t, "m": m, "orbits": oracle.orbits, "subsets": oracle.subsets }),
        BigInt::from(oracle.orbits * g.order()),
        kernel_sum(g, t) * m,
    )];

    for d in divisors(t as u64) {
        let d = d as usize;
        let size = t / d;
        let modulus = d * m;
        let mut all = 0u64;
        for class in lattice.conj_classes() {
            if lattice.subgroup(class[0]).size() != size {
                continue;
            }
            let s: u64 = class.iter().map(|&h| oracle.lambda[h]).sum();
            all += s;
            out.push(CongruenceReport::congruence(
                label,
                "stabilizer_class_sum",
                "subsets with stabilizer in a conjugacy class of subgroups of order t/d number 0 mod dm",
                json!({ "t": t, "d": d, "class_rep": class[0] }),
                s,
                modulus,
            ));
        }
        out.push(CongruenceReport::congruence(
            label,
            "stabilizer_order_sum",
            "subsets with stabilizer of order t/d number 0 mod dm",
            json!({ "t": t, "d": d }),
            all,
            modulus,
        ));
    }

    for h in 0..lattice.len() {
        let size = lattice.subgroup(h).size();
        if t % size != 0 {
            continue;
        }
        let fixed: u64 = (0..lattice.len())
            .filter(|&k| lattice.leq(h, k) && t % lattice.subgroup(k).size() == 0)
            .map(|k| oracle.lambda[k])
            .sum();
        out.push(CongruenceReport::identity(
            label,
            "stabilizer_fixed_points",
            "C(dm-1, d-1) m with d = t/|H| counts the t-subsets fixed by H",
            json!({ "t": t, "H": h }),
            kernel(m, t / size) * m,
            BigInt::from(fixed),
        ));
    }
    out
}

/// All orbit-enumeration checks for every `t | |G|`; empty when `|G|`
/// exceeds `bound`.
pub fn burnside_suite(g: &GroupTable, lattice: &SubgroupLattice, bound: usize) -> Vec<CongruenceReport> {
    if g.order() > bound {
        return Vec::new();
    }
    divisors(g.order() as u64)
        .into_iter()
        .flat_map(|t| {
            let oracle = burnside_oracle(g, lattice, t as usize, bound).expect("within bound");
            verify_lambda_congruences(g, lattice, &oracle)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_subgroups, group_from_spec};

    fn setup(s: &str) -> (GroupTable, SubgroupLattice) {
        let g = group_from_spec(s, 384).unwrap();
        let l = enumerate_subgroups(&g, 100_000).unwrap();
        (g, l)
    }

    #[test]
    fn element_order_examples() {
        let (c6, _) = setup("C6");
        let r = verify_element_order_congruence(&c6, 6).unwrap();
        assert_eq!(r.lhs, BigInt::from(6));
        assert!(r.pass);
        let (s3, _) = setup("S3");
        let r = verify_element_order_congruence(&s3, 2).unwrap();
        assert_eq!(r.lhs, BigInt::from(8));
        assert!(r.pass);
        assert_eq!(verify_element_order_congruence(&s3, 1).unwrap().lhs, BigInt::from(1));
        assert!(verify_element_order_congruence(&s3, 4).is_err());
    }

    #[test]
    fn oracle_examples() {
        let (c2, l) = setup("C2");
        assert_eq!(burnside_oracle(&c2, &l, 1, 12).unwrap().orbits, 1);

        let (s3, l) = setup("S3");
        let o = burnside_oracle(&s3, &l, 2, 12).unwrap();
        assert_eq!((o.subsets, o.orbits), (15, 4));

        let (c4, l) = setup("C4");
        let o = burnside_oracle(&c4, &l, 2, 12).unwrap();
        let c2 = (0..l.len()).find(|&k| l.subgroup(k).size() == 2).unwrap();
        assert_eq!(o.lambda[c2], 2);
        assert!(verify_lambda_congruences(&c4, &l, &o).iter().all(|r| r.pass));
    }

    #[test]
    fn bound_enforced() {
        let (s4, l) = setup("S4");
        assert!(matches!(
            burnside_oracle(&s4, &l, 2, 12),
            Err(TheoremError::BurnsideBound { .. })
        ));
        assert!(burnside_suite(&s4, &l, 12).is_empty());
    }

    #[test]
    fn small_groups_pass() {
        for s in ["C1", "S3", "V4", "Q8", "D6", "A4", "C12"] {
            let (g, l) = setup(s);
            let reports = burnside_suite(&g, &l, 12);
            assert!(!reports.is_empty());
            assert!(reports.iter().all(|r| r.pass), "{s}");
        }
    }
}
