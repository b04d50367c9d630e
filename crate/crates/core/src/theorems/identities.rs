use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use crate::arith::totient;
use crate::poset::{hall_column, mobius, CoefficientRing, IncidenceFunction};

use super::{CongruenceReport, LatticeAlgebra};

fn pairs(l: &LatticeAlgebra) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = l.lattice().len();
    (0..n).flat_map(move |a| (0..n).filter(move |&b| l.lattice().leq(a, b)).map(move |b| (a, b)))
}

fn interval(l: &LatticeAlgebra, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
    (0..l.lattice().len()).filter(move |&z| l.lattice().leq(a, z) && l.lattice().leq(z, b))
}

fn count_bad(l: &LatticeAlgebra, mut bad: impl FnMut(usize, usize) -> bool) -> usize {
    pairs(l).filter(|&(a, b)| bad(a, b)).count()
}

/// Pointwise identities among the lattice's incidence functions, each
/// reported as a count of failing pairs.
pub fn identity_suite(l: &LatticeAlgebra) -> Vec<CongruenceReport> {
    let label = l.label();
    let lat = l.lattice();
    let n = lat.len();
    let idx = |a: usize, b: usize| l.size_of(b) / l.size_of(a);
    let report = |theorem: &str, anchor: &str, bad: usize| {
        CongruenceReport::mismatches(label, theorem, anchor, json!({ "subgroups": n }), bad)
    };
    let mut out = Vec::new();

    out.push(report(
        "phi_interval_sum",
        "sum over H <= K <= L of phi(H, K) equals [L:H]",
        count_bad(l, |a, b| {
            interval(l, a, b).map(|z| l.phi().get(a, z)).sum::<BigInt>() != BigInt::from(idx(a, b))
        }),
    ));

    out.push(report(
        "gamma_equals_order_times_phi",
        "gamma(H, K) equals |H| phi(H, K)",
        count_bad(l, |a, b| l.gamma().get(a, b) != &(l.phi().get(a, b) * l.size_of(a))),
    ));

    let index_inv = l.index().invert().expect("index has unit diagonal");
    out.push(report(
        "index_inverse",
        "the inverse of the index function is [L:H] mu(H, L)",
        count_bad(l, |a, b| index_inv.get(a, b) != &(l.mu().get(a, b) * idx(a, b))),
    ));

    out.push(report(
        "phi_inverse_closed_form",
        "phi^{-1}(H, L) equals the sum over H <= K <= L of [L:K] mu(K, L)",
        count_bad(l, |a, b| {
            interval(l, a, b).map(|z| l.mu().get(z, b) * idx(z, b)).sum::<BigInt>() != *l.phi_inv().get(a, b)
        }),
    ));

    let left = l.phi().left_inverse().expect("phi has unit diagonal");
    out.push(report(
        "left_right_inverse",
        "left and right inverse recursions agree for phi",
        count_bad(l, |a, b| left.get(a, b) != l.phi_inv().get(a, b)),
    ));

    let bottom = l.bottom();
    let cyclic_bad = (0..n)
        .filter(|&k| {
            let expected = if lat.is_cyclic(l.group(), k) {
                totient(l.size_of(k) as u64)
            } else {
                0
            };
            l.phi().get(bottom, k) != &BigInt::from(expected)
        })
        .count();
    out.push(report(
        "phi_cyclic_totient",
        "phi(1, K) is the Euler totient of |K| for cyclic K and zero otherwise",
        cyclic_bad,
    ));

    let poset = l.poset();
    let mut hall_bad = 0;
    for y in 0..n {
        let col = hall_column(poset, y);
        hall_bad += (0..n).filter(|&x| &col[x] != l.mu().get(x, y)).count();
    }
    out.push(report("hall_equals_mobius", "alternating chain counts equal mu on every pair", hall_bad));

    let eta = IncidenceFunction::eta(poset, &CoefficientRing::Integers);
    out.push(report(
        "eta_nilpotent",
        "eta^|P| vanishes",
        usize::from(!eta.pow(n as u32).is_zero()),
    ));

    out.push(report(
        "mobius_interval_sums",
        "for H < K both sums of mu over [H, K] vanish",
        count_bad(l, |a, b| {
            if a == b {
                return l.mu().get(a, a) != &BigInt::from(1);
            }
            let up: BigInt = interval(l, a, b).map(|z| l.mu().get(a, z)).sum();
            let down: BigInt = interval(l, a, b).map(|z| l.mu().get(z, b)).sum();
            !up.is_zero() || !down.is_zero()
        }),
    ));

    let mut convex_bad = 0;
    for class in lat.conj_classes() {
        let filter = l.filter_above_class(class[0]);
        let sub = Arc::new(poset.restrict(&filter));
        let local = mobius(&sub, &CoefficientRing::Integers);
        for (i, &a) in filter.iter().enumerate() {
            for (j, &b) in filter.iter().enumerate() {
                if local.get(i, j) != l.mu().get(a, b) {
                    convex_bad += 1;
                }
            }
        }
    }
    out.push(report(
        "convex_filter_mobius",
        "mu restricted to the subgroups containing a conjugate of F agrees with mu of G",
        convex_bad,
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_from_spec;
    use crate::theorems::build_lattice_algebra;

    #[test]
    fn identities_hold() {
        for s in ["C1", "C12", "S3", "Q8", "D4", "A4", "S4", "C2xC2xC2"] {
            let l = build_lattice_algebra(group_from_spec(s, 384).unwrap(), 100_000).unwrap();
            let reports = identity_suite(&l);
            assert_eq!(reports.len(), 10);
            for r in reports {
                assert!(r.pass, "{r}");
            }
        }
    }
}
