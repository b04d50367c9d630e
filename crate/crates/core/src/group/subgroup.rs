use std::cmp::Ordering;

use crate::bitset::BitSet;

use super::table::GroupTable;

/// A subgroup as a set of element indices.
#[derive(Clone, Debug)]
pub struct Subgroup {
    bits: BitSet,
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn trivial(g: &GroupTable) -> Subgroup {
        let mut bits = BitSet::new(g.order());
        bits.insert(0);
        Subgroup {
            bits,
            members: vec![0],
            generators: Vec::new(),
        }
    }

    pub fn whole(g: &GroupTable) -> Subgroup {
        generated_subgroup(g, g.generators().iter().map(|&x| x as usize))
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, g: usize) -> bool {
        self.bits.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.size() <= other.size() && self.bits.is_subset(&other.bits)
    }

    /// `x H x^-1`.
    pub fn conjugate_by(&self, g: &GroupTable, x: usize) -> BitSet {
        let mut bits = BitSet::new(g.order());
        for &h in &self.members {
            bits.insert(g.conjugate(x, h));
        }
        bits
    }

    /// Canonical order: by size, then lexicographically on sorted members.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.members.cmp(&other.members))
    }

    /// Whether `seed` is closed under products and inverses.
    pub fn is_closed(g: &GroupTable, seed: &BitSet) -> bool {
        seed.contains(0)
            && seed.iter().all(|a| {
                seed.contains(g.inv(a)) && seed.iter().all(|b| seed.contains(g.mul(a, b)))
            })
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subgroup {}

/// The smallest subgroup containing `seed`.
pub fn generated_subgroup(g: &GroupTable, seed: impl IntoIterator<Item = usize>) -> Subgroup {
    let mut gens: Vec<usize> = seed.into_iter().filter(|&x| x != 0).collect();
    gens.sort_unstable();
    gens.dedup();
    let (bits, members) = close_under(g, &gens);
    Subgroup {
        bits,
        members,
        generators: gens,
    }
}

/// `<H, extra>`, reusing the generators of `h`.
pub fn join_with(g: &GroupTable, h: &Subgroup, extra: &[usize]) -> Subgroup {
    let mut kept: Vec<usize> = h.generators.clone();
    for &x in extra {
        if !h.contains(x) && !kept.contains(&x) {
            kept.push(x);
        }
    }
    let (bits, members) = close_under(g, &kept);
    Subgroup {
        bits,
        members,
        generators: kept,
    }
}

/// `<H, K>`.
pub fn join(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Subgroup {
    if k.is_subgroup_of(h) {
        return h.clone();
    }
    if h.is_subgroup_of(k) {
        return k.clone();
    }
    join_with(g, h, &k.generators)
}

// In a finite group the monoid generated by `gens` is already a group, so
// closing the identity under right multiplication suffices.
fn close_under(g: &GroupTable, gens: &[usize]) -> (BitSet, Vec<usize>) {
    let mut bits = BitSet::new(g.order());
    bits.insert(0);
    let mut members = vec![0];
    let mut cursor = 0;
    while cursor < members.len() {
        let x = members[cursor];
        for &s in gens {
            let y = g.mul(x, s);
            if bits.insert(y) {
                members.push(y);
            }
        }
        cursor += 1;
    }
    members.sort_unstable();
    (bits, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), 384).unwrap()
    }

    #[test]
    fn empty_seed_is_trivial() {
        let g = build("S4");
        let h = generated_subgroup(&g, []);
        assert_eq!(h.members(), &[0]);
        assert_eq!(h, Subgroup::trivial(&g));
    }

    #[test]
    fn cyclic_twelve() {
        let g = build("C12");
        // find the element playing the role of 2 in Z/12: an element of order 6
        // that is the square of a generator
        let gen = (0..12).find(|&a| g.elem_order(a) == 12).unwrap();
        let two = g.mul(gen, gen);
        let h = generated_subgroup(&g, [two]);
        assert_eq!(h.size(), 6);
        let mut expected: Vec<usize> = Vec::new();
        let mut x = 0;
        for _ in 0..6 {
            expected.push(x);
            x = g.mul(x, two);
        }
        expected.sort();
        assert_eq!(h.members(), expected.as_slice());
    }

    #[test]
    fn s3_generated_by_three_cycle_and_transposition() {
        let g = build("S3");
        let c3 = (0..6).find(|&a| g.elem_order(a) == 3).unwrap();
        let t = (0..6).find(|&a| g.elem_order(a) == 2).unwrap();
        assert_eq!(generated_subgroup(&g, [c3, t]).size(), 6);
        assert!(Subgroup::is_closed(&g, generated_subgroup(&g, [c3]).bits()));
        assert_eq!(Subgroup::whole(&g).size(), 6);
    }

    #[test]
    fn joins() {
        let g = build("V4");
        let a = generated_subgroup(&g, [1]);
        let b = generated_subgroup(&g, [2]);
        assert_eq!(join(&g, &a, &b).size(), 4);
        assert_eq!(join(&g, &a, &a), a);
    }
}
