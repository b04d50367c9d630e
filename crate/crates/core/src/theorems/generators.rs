use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Signed;
use serde_json::json;

use crate::group::{generated_subgroup, join_with, GroupTable, Subgroup};

use super::{CongruenceReport, LatticeAlgebra, TheoremError};

/// Groups up to this order get the brute-force tuple count for `gamma^n`.
const TUPLE_ORDER_LIMIT: usize = 12;
const TUPLE_LENGTH_LIMIT: u32 = 3;
/// Largest number of subsets the minimal-generator oracle will try per size.
const SUBSET_LIMIT: usize = 200_000;

/// Least `n >= 0` with `phi^n(H, K) > 0`, searched up to the lattice height.
pub fn min_generators(l: &LatticeAlgebra, h: usize, k: usize) -> Result<Option<usize>, TheoremError> {
    let lat = l.lattice();
    if !lat.leq(h, k) {
        return Err(TheoremError::NotSubgroupPair { lower: h, upper: k });
    }
    if h == k {
        return Ok(Some(0));
    }
    // row h of phi^n, by repeated right multiplication
    let n = lat.len();
    let mut row: Vec<BigInt> = (0..n).map(|z| BigInt::from(usize::from(z == h))).collect();
    for power in 1..=lat.height() {
        row = (0..n)
            .map(|y| {
                (0..n)
                    .filter(|&z| lat.leq(h, z) && lat.leq(z, y))
                    .map(|z| &row[z] * l.phi().get(z, y))
                    .sum()
            })
            .collect();
        if row[k].is_positive() {
            return Ok(Some(power));
        }
    }
    Ok(None)
}

/// Number of `n`-tuples of elements of `K` that generate `K`.
pub fn generating_tuples(g: &GroupTable, k: &Subgroup, n: u32) -> u64 {
    let members = k.members();
    let mut count = 0;
    let mut tuple = vec![0usize; n as usize];
    loop {
        let seed = tuple.iter().map(|&i| members[i]);
        if generated_subgroup(g, seed).size() == k.size() {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        while i < tuple.len() {
            tuple[i] += 1;
            if tuple[i] < members.len() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == tuple.len() {
            return count;
        }
    }
}

/// Least `n` such that some `n` elements generate `G`, by trying subsets in
/// increasing size; `None` once a size class exceeds [`SUBSET_LIMIT`].
fn min_generators_oracle(g: &GroupTable) -> Option<usize> {
    let order = g.order();
    let trivial = Subgroup::trivial(g);
    for n in 0..=order {
        if binomial(order, n) > SUBSET_LIMIT {
            return None;
        }
        if subsets_generate(g, &trivial, 1, n) {
            return Some(n);
        }
    }
    None
}

fn subsets_generate(g: &GroupTable, current: &Subgroup, from: usize, left: usize) -> bool {
    if current.size() == g.order() {
        return true;
    }
    if left == 0 {
        return false;
    }
    (from..g.order()).any(|x| !current.contains(x) && subsets_generate(g, &join_with(g, current, &[x]), x + 1, left - 1))
}

/// Nonnegativity of the powers of `phi`, the minimal generator count of `G`
/// and, for small groups, `gamma^n(1, G)` against a direct tuple count.
pub fn generator_suite(l: &LatticeAlgebra) -> Vec<CongruenceReport> {
    let label = l.label();
    let height = l.lattice().height();
    let (bottom, top) = (l.bottom(), l.top());
    let mut out = Vec::new();

    let mut power = l.phi().clone();
    let mut negatives = 0;
    for n in 1..=height.max(1) {
        if n > 1 {
            power = power.convolve(l.phi()).expect("same poset");
        }
        negatives += (0..l.lattice().len())
            .flat_map(|a| (0..l.lattice().len()).map(move |b| (a, b)))
            .filter(|&(a, b)| power.get(a, b).is_negative())
            .count();
    }
    out.push(CongruenceReport::mismatches(
        label,
        "phi_power_nonnegative",
        "every power phi^n up to the lattice height is nonnegative",
        json!({ "height": height }),
        negatives,
    ));

    let via_phi = min_generators(l, bottom, top).expect("1 <= G");
    if let Some(oracle) = min_generators_oracle(l.group()) {
        out.push(CongruenceReport::identity(
            label,
            "min_generators",
            "the least n with phi^n(1, G) > 0 is the minimal number of generators of G",
            json!({ "height": height }),
            BigInt::from(via_phi.map_or(-1, |n| n as i64)),
            BigInt::from(oracle),
        ));
    }

    if l.order() <= TUPLE_ORDER_LIMIT {
        let whole = l.lattice().subgroup(top);
        let mut gp = l.gamma().clone();
        for n in 1..=TUPLE_LENGTH_LIMIT {
            if n > 1 {
                gp = gp.convolve(l.gamma()).expect("same poset");
            }
            out.push(CongruenceReport::identity(
                label,
                "gamma_power_tuples",
                "gamma^n(1, G) counts the n-tuples of elements generating G",
                json!({ "n": n }),
                gp.get(bottom, top).clone(),
                BigInt::from(generating_tuples(l.group(), whole, n)),
            ));
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

    #[test]
    fn examples() {
        let c6 = algebra("C6");
        assert_eq!(min_generators(&c6, 0, c6.top()).unwrap(), Some(1));
        let v4 = algebra("V4");
        assert_eq!(min_generators(&v4, 0, v4.top()).unwrap(), Some(2));
        // 16 pairs, of which 6 generate
        assert_eq!(generating_tuples(v4.group(), v4.lattice().subgroup(v4.top()), 2), 6);
        let s3 = algebra("S3");
        let c3 = (0..6).find(|&k| s3.size_of(k) == 3).unwrap();
        assert_eq!(min_generators(&s3, c3, s3.top()).unwrap(), Some(1));
        assert_eq!(min_generators(&s3, 0, 0).unwrap(), Some(0));
        assert!(min_generators(&s3, c3, 1).is_err());
    }

    #[test]
    fn oracle_agrees() {
        assert_eq!(min_generators_oracle(algebra("C2xC2xC2").group()), Some(3));
        assert_eq!(min_generators_oracle(algebra("C1").group()), Some(0));
        for s in ["C1", "V4", "S3", "Q8", "C2xC2xC2", "A4", "S4"] {
            assert!(generator_suite(&algebra(s)).iter().all(|r| r.pass), "{s}");
        }
    }
}
