use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::json;

use super::{CongruenceReport, LatticeAlgebra, TheoremError};

/// `[L:K]` as an integer.
fn idx(l: &LatticeAlgebra, lower: usize, upper: usize) -> usize {
    l.size_of(upper) / l.size_of(lower)
}

/// `sum_{K <= H <= G} mu(H, G) [G:H]`, the closed form of `phi^{-1}(K, G)`.
fn closed_form(l: &LatticeAlgebra, k: usize) -> BigInt {
    let top = l.top();
    (0..l.lattice().len())
        .filter(|&h| l.lattice().leq(k, h))
        .map(|h| l.mu().get(h, top) * idx(l, h, top))
        .sum()
}

/// Brown's quantity two ways, plus the class-function and zero-sum
/// properties of `g -> phi^{-1}(<g>, G)`.
pub fn brown_suite(l: &LatticeAlgebra, solvable: bool) -> Vec<CongruenceReport> {
    let label = l.label();
    let (bottom, top) = (l.bottom(), l.top());
    let inverted = l.phi_inv().get(bottom, top).clone();
    let mut out = vec![CongruenceReport::identity(
        label,
        "brown_two_routes",
        "phi^{-1}(1, G) from inverting phi equals the sum over K of [G:K] mu(K, G)",
        json!({ "order": l.order() }),
        inverted.clone(),
        closed_form(l, bottom),
    )];

    let values = l.phi_minus_one();
    let g = l.group();
    let classes = g.conjugacy_classes();
    let bad = classes
        .iter()
        .filter(|c| c.iter().any(|&x| values[x] != values[c[0]]))
        .count();
    out.push(CongruenceReport::mismatches(
        label,
        "phi_minus_one_class_function",
        "phi^{-1}(<g>, G) is constant on conjugacy classes of elements",
        json!({ "classes": classes.len() }),
        bad,
    ));

    if l.order() > 1 {
        let total: BigInt = values.iter().sum();
        out.push(CongruenceReport::identity(
            label,
            "phi_minus_one_zero_sum",
            "for |G| > 1 the values phi^{-1}(<g>, G) sum to zero over G",
            json!({ "order": l.order() }),
            total,
            0,
        ));
    }

    if solvable {
        out.push(CongruenceReport::mismatches(
            label,
            "brown_nonzero_solvable",
            "phi^{-1}(1, G) is nonzero for solvable G",
            json!({ "value": inverted.to_string() }),
            usize::from(inverted.is_zero()),
        ));
    }
    out
}

fn prop63_with(
    l: &LatticeAlgebra,
    f: usize,
    k: usize,
    join: impl Fn(usize, usize) -> usize,
) -> CongruenceReport {
    let top = l.top();
    let lat = l.lattice();
    let rhs: BigInt = (0..lat.len())
        .filter(|&h| lat.leq(f, h) && join(h, k) == top)
        .map(|h| l.phi_inv().get(f, h) * idx(l, h, top))
        .sum();
    CongruenceReport::identity(
        l.label(),
        "phi_inverse_join_formula",
        "phi^{-1}(K, G) equals the sum over H >= F with <H, K> = G of phi^{-1}(F, H) [G:H]",
        json!({ "F": f, "K": k }),
        l.phi_inv().get(k, top).clone(),
        rhs,
    )
}

/// Expresses `phi^{-1}(K, G)` through `phi^{-1}(F, -)` for `F <= K`.
pub fn verify_prop63(l: &LatticeAlgebra, f: usize, k: usize) -> Result<CongruenceReport, TheoremError> {
    if !l.lattice().leq(f, k) {
        return Err(TheoremError::NotSubgroupPair { lower: f, upper: k });
    }
    Ok(prop63_with(l, f, k, |a, b| l.lattice().join(l.group(), a, b)))
}

/// The join formula for every pair `F <= K`, and for every `K` the identity
/// `sum_{K <= H} mu(H, G) [G:H] = sum_{<H, K> = G} phi^{-1}(1, H) [G:H]`.
pub fn prop63_suite(l: &LatticeAlgebra) -> Vec<CongruenceReport> {
    let lat = l.lattice();
    let n = lat.len();
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in a..n {
            let j = lat.join(l.group(), a, b);
            table[a * n + b] = j;
            table[b * n + a] = j;
        }
    }
    let join = |a: usize, b: usize| table[a * n + b];

    let mut out = Vec::new();
    for k in 0..n {
        for f in (0..n).filter(|&f| lat.leq(f, k)) {
            out.push(prop63_with(l, f, k, join));
        }
    }
    let (bottom, top) = (l.bottom(), l.top());
    for k in 0..n {
        let rhs: BigInt = (0..n)
            .filter(|&h| join(h, k) == top)
            .map(|h| l.phi_inv().get(bottom, h) * idx(l, h, top))
            .sum();
        out.push(CongruenceReport::identity(
            l.label(),
            "liaison_identity",
            "sum over H >= K of mu(H, G) [G:H] equals the sum over <H, K> = G of phi^{-1}(1, H) [G:H]",
            json!({ "K": k }),
            closed_form(l, k),
            rhs,
        ));
    }
    out
}
