use num_bigint::BigInt;
use serde_json::json;

use crate::bitset::BitSet;
use crate::group::{GroupTable, SubgroupLattice};
use crate::poset::{hall_column, mobius_column, Poset};

use super::{CongruenceReport, LatticeAlgebra, TheoremError};

pub const DEFAULT_COSET_BUDGET: usize = 10_000;

/// All right cosets `Hx` of all subgroups, ordered by inclusion. `G` is its
/// own only coset and so is the unique top.
#[derive(Clone, Debug)]
pub struct CosetPoset {
    poset: Poset,
    subgroup: Vec<usize>,
    rep: Vec<usize>,
    // coset_of[h][x]: the element for the coset H x
    coset_of: Vec<Vec<usize>>,
    top: usize,
    mobius_top: Vec<BigInt>,
}

impl CosetPoset {
    /// Fails with [`TheoremError::Budget`] when there are more than `budget`
    /// cosets.
    pub fn new(g: &GroupTable, lattice: &SubgroupLattice, budget: usize) -> Result<CosetPoset, TheoremError> {
        let n = g.order();
        let total: usize = lattice.subgroups().iter().map(|s| n / s.size()).sum();
        if total > budget {
            return Err(TheoremError::Budget { what: "coset count", limit: budget });
        }
        let mut subgroup = Vec::with_capacity(total);
        let mut rep = Vec::with_capacity(total);
        let mut coset_of = Vec::with_capacity(lattice.len());
        for (h, sub) in lattice.subgroups().iter().enumerate() {
            let mut ids = vec![usize::MAX; n];
            for x in 0..n {
                if ids[x] != usize::MAX {
                    continue;
                }
                let id = subgroup.len();
                subgroup.push(h);
                rep.push(x);
                for &a in sub.members() {
                    ids[g.mul(a, x)] = id;
                }
            }
            coset_of.push(ids);
        }
        let rows = (0..total)
            .map(|c| {
                let mut row = BitSet::new(total);
                let (h, x) = (subgroup[c], rep[c]);
                for k in lattice.leq_rows()[h].iter() {
                    row.insert(coset_of[k][x]);
                }
                row
            })
            .collect();
        let poset = Poset::from_rows(rows).expect("inclusion of cosets is a partial order");
        let top = coset_of[lattice.top()][0];
        let mobius_top = mobius_column(&poset, top);
        Ok(CosetPoset {
            poset,
            subgroup,
            rep,
            coset_of,
            top,
            mobius_top,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// The subgroup whose coset element `c` is.
    pub fn subgroup_of(&self, c: usize) -> usize {
        self.subgroup[c]
    }

    /// Smallest group element in coset `c`.
    pub fn representative(&self, c: usize) -> usize {
        self.rep[c]
    }

    pub fn coset(&self, h: usize, x: usize) -> usize {
        self.coset_of[h][x]
    }

    /// The cosets of subgroup `h`.
    pub fn cosets_of(&self, h: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&c| self.subgroup[c] == h)
    }

    /// `mu_K(c, G)` for every coset `c`.
    pub fn mobius_to_top(&self) -> &[BigInt] {
        &self.mobius_top
    }
}

/// `[G:H] mu(H, G)` equals the sum of the coset poset's `mu(Hx, G)` over the
/// cosets of `H`.
pub fn bouc_check(l: &LatticeAlgebra, cp: &CosetPoset, h: usize) -> CongruenceReport {
    let top = l.top();
    let index = l.order() / l.size_of(h);
    let left = l.mu().get(h, top) * index;
    let right: BigInt = cp.cosets_of(h).map(|c| &cp.mobius_to_top()[c]).sum();
    CongruenceReport::identity(
        l.label(),
        "bouc_coset_identity",
        "[G:H] mu(H, G) equals the sum over cosets Hx of the coset poset Mobius value mu(Hx, G)",
        json!({ "H": h, "index": index }),
        left,
        right,
    )
}

/// Every subgroup's coset identity, plus Hall's chain formula against the
/// recursive Möbius column of the coset poset.
pub fn bouc_suite(l: &LatticeAlgebra, budget: usize) -> Vec<CongruenceReport> {
    let cp = match CosetPoset::new(l.group(), l.lattice(), budget) {
        Ok(cp) => cp,
        Err(e) => return vec![CongruenceReport::skipped(l.label(), "bouc_coset_identity", &e.to_string())],
    };
    let mut out: Vec<_> = (0..l.lattice().len()).map(|h| bouc_check(l, &cp, h)).collect();
    let hall = hall_column(cp.poset(), cp.top());
    let bad = hall.iter().zip(cp.mobius_to_top()).filter(|(a, b)| a != b).count();
    out.push(CongruenceReport::mismatches(
        l.label(),
        "coset_hall_mobius",
        "alternating chain counts to G equal the Mobius function of the coset poset",
        json!({ "cosets": cp.len() }),
        bad,
    ));
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
    fn cyclic_two() {
        let l = algebra("C2");
        let cp = CosetPoset::new(l.group(), l.lattice(), 100).unwrap();
        assert_eq!(cp.len(), 3);
        let r = bouc_check(&l, &cp, 0);
        assert_eq!(r.params["left"], json!("-2"));
        assert!(r.pass);
        let r = bouc_check(&l, &cp, l.top());
        assert_eq!(r.params["right"], json!("1"));
    }

    #[test]
    fn s3_order_three() {
        let l = algebra("S3");
        let cp = CosetPoset::new(l.group(), l.lattice(), 100).unwrap();
        // 6 + 3*3 + 2 + 1
        assert_eq!(cp.len(), 18);
        let c3 = (0..6).find(|&k| l.size_of(k) == 3).unwrap();
        for c in cp.cosets_of(c3) {
            assert_eq!(cp.mobius_to_top()[c], BigInt::from(-1));
        }
        assert!(bouc_check(&l, &cp, c3).pass);
    }

    #[test]
    fn cosets_of_equal_subgroup_incomparable() {
        let l = algebra("D4");
        let cp = CosetPoset::new(l.group(), l.lattice(), 1000).unwrap();
        for a in 0..cp.len() {
            for b in 0..cp.len() {
                if a != b && cp.subgroup_of(a) == cp.subgroup_of(b) {
                    assert!(!cp.poset().leq(a, b));
                }
            }
            assert!(cp.poset().leq(a, cp.top()));
        }
    }

    #[test]
    fn budget_gives_skip() {
        let l = algebra("S4");
        let r = bouc_suite(&l, 10);
        assert_eq!(r.len(), 1);
        assert!(r[0].is_skipped());
        assert!(bouc_suite(&l, DEFAULT_COSET_BUDGET).iter().all(|r| r.pass));
    }
}
