use super::lattice::SubgroupLattice;
use super::subgroup::{join_with, Subgroup};
use super::table::GroupTable;
use super::GroupError;

/// Number of elements of order `n`.
pub fn chi(g: &GroupTable, n: usize) -> usize {
    (0..g.order()).filter(|&a| g.elem_order(a) == n).count()
}

/// Number of `x` in `K` with `<H, x> = K`; zero when `H` is not contained in `K`.
pub fn gamma_count(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> usize {
    if !h.is_subgroup_of(k) {
        return 0;
    }
    k.members()
        .iter()
        .filter(|&&x| {
            if h.contains(x) {
                h.size() == k.size()
            } else {
                join_with(g, h, &[x]).size() == k.size()
            }
        })
        .count()
}

/// Number of `x` in `G` with `|<F, x>|` dividing `n`.
pub fn frobenius_solution_count(g: &GroupTable, f: &Subgroup, n: usize) -> Result<usize, GroupError> {
    if n == 0 || g.order() % n != 0 {
        return Err(GroupError::NotDivisor { n, order: g.order() });
    }
    Ok((0..g.order())
        .filter(|&x| {
            let size = if f.contains(x) {
                f.size()
            } else {
                join_with(g, f, &[x]).size()
            };
            n % size == 0
        })
        .count())
}

/// For a fixed subgroup `h`, the lattice position of `<H, x>` for every `x`.
pub fn single_joins(g: &GroupTable, lattice: &SubgroupLattice, h: usize) -> Vec<usize> {
    (0..g.order()).map(|x| lattice.join_element(g, h, x)).collect()
}
