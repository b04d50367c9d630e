use std::sync::Arc;

use num_bigint::BigInt;

use crate::group::{enumerate_subgroups, single_joins, GroupTable, SubgroupLattice};
use crate::poset::{mobius, CoefficientRing, IncidenceFunction, Poset};

use super::TheoremError;

/// A group's subgroup lattice together with its standard incidence functions
/// over the integers.
#[derive(Clone, Debug)]
pub struct LatticeAlgebra {
    group: GroupTable,
    lattice: SubgroupLattice,
    poset: Arc<Poset>,
    zeta: IncidenceFunction,
    mu: IncidenceFunction,
    index: IncidenceFunction,
    phi: IncidenceFunction,
    phi_inv: IncidenceFunction,
    gamma: IncidenceFunction,
}

/// Enumerates the lattice of `group` and computes `mu`, the index function
/// `i`, `phi = i*mu`, its inverse and the single-generator counts `gamma`.
pub fn build_lattice_algebra(group: GroupTable, subgroup_budget: usize) -> Result<LatticeAlgebra, TheoremError> {
    let lattice = enumerate_subgroups(&group, subgroup_budget)?;
    let poset = Arc::new(
        Poset::from_rows(lattice.leq_rows().to_vec()).expect("inclusion is a partial order"),
    );
    let z = CoefficientRing::Integers;
    let zeta = IncidenceFunction::zeta(&poset, &z);
    let mu = mobius(&poset, &z);
    let index = IncidenceFunction::from_fn(&poset, &z, |h, k| {
        BigInt::from(lattice.subgroup(k).size() / lattice.subgroup(h).size())
    });
    let phi = index.convolve(&mu)?;
    let phi_inv = phi.invert()?;

    let n = lattice.len();
    let mut counts = vec![0u64; n * n];
    for h in 0..n {
        for k in single_joins(&group, &lattice, h) {
            counts[h * n + k] += 1;
        }
    }
    let gamma = IncidenceFunction::from_fn(&poset, &z, |h, k| BigInt::from(counts[h * n + k]));

    Ok(LatticeAlgebra {
        group,
        lattice,
        poset,
        zeta,
        mu,
        index,
        phi,
        phi_inv,
        gamma,
    })
}

impl LatticeAlgebra {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn label(&self) -> &str {
        self.group.label()
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn zeta(&self) -> &IncidenceFunction {
        &self.zeta
    }

    pub fn mu(&self) -> &IncidenceFunction {
        &self.mu
    }

    /// `i(H, K) = [K:H]` for `H <= K`.
    pub fn index(&self) -> &IncidenceFunction {
        &self.index
    }

    pub fn phi(&self) -> &IncidenceFunction {
        &self.phi
    }

    pub fn phi_inv(&self) -> &IncidenceFunction {
        &self.phi_inv
    }

    pub fn gamma(&self) -> &IncidenceFunction {
        &self.gamma
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn size_of(&self, h: usize) -> usize {
        self.lattice.subgroup(h).size()
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// `phi^{-1}(<g>, G)` for every element `g`.
    pub fn phi_minus_one(&self) -> Vec<BigInt> {
        let top = self.top();
        (0..self.order())
            .map(|g| {
                let c = self.lattice.join_element(&self.group, self.bottom(), g);
                self.phi_inv.get(c, top).clone()
            })
            .collect()
    }

    /// The subgroups containing a conjugate of subgroup `f`.
    pub fn filter_above_class(&self, f: usize) -> Vec<usize> {
        let class = self.lattice.class_members(f);
        (0..self.lattice.len())
            .filter(|&h| class.iter().any(|&c| self.lattice.leq(c, h)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_from_spec;

    fn algebra(s: &str) -> LatticeAlgebra {
        build_lattice_algebra(group_from_spec(s, 384).unwrap(), 100_000).unwrap()
    }

    #[test]
    fn cyclic_four_is_a_chain() {
        let l = algebra("C4");
        assert_eq!(l.mu().get(l.bottom(), l.top()), &BigInt::from(0));
        assert_eq!(l.mu().get(0, 1), &BigInt::from(-1));
    }

    #[test]
    fn s3_values() {
        let l = algebra("S3");
        assert_eq!(l.mu().get(0, 5), &BigInt::from(3));
        assert_eq!(l.phi_inv().get(0, 5), &BigInt::from(8));
        // gamma(1, S3) = 0 since S3 is not cyclic
        assert_eq!(l.gamma().get(0, 5), &BigInt::from(0));
        let pm1 = l.phi_minus_one();
        let g = l.group();
        for (x, v) in pm1.iter().enumerate() {
            let expected = match g.elem_order(x) {
                1 => 8,
                2 => -2,
                3 => -1,
                _ => unreachable!(),
            };
            assert_eq!(v, &BigInt::from(expected));
        }
    }

    #[test]
    fn trivial_group() {
        let l = algebra("C1");
        assert_eq!(l.lattice().len(), 1);
        for f in [l.mu(), l.index(), l.phi(), l.phi_inv(), l.gamma(), l.zeta()] {
            assert_eq!(f.get(0, 0), &BigInt::from(1));
        }
    }

    #[test]
    fn filter_is_upward_closed() {
        let l = algebra("S3");
        // an order-2 subgroup: its filter is the three C2 and S3
        assert_eq!(l.filter_above_class(1), vec![1, 2, 3, 5]);
        assert_eq!(l.filter_above_class(0).len(), 6);
    }
}
