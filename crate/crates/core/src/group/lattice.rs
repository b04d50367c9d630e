use std::collections::HashMap;

use crate::bitset::BitSet;

use super::subgroup::{generated_subgroup, join, join_with, Subgroup};
use super::table::GroupTable;
use super::GroupError;

/// Default cap on the number of subgroups enumerated.
pub const DEFAULT_SUBGROUP_BUDGET: usize = 100_000;

/// All subgroups of a group, in canonical order, with inclusion and conjugacy.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    // row i: set of j with subgroups[i] <= subgroups[j]
    leq: Vec<BitSet>,
    conj_classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    index: HashMap<BitSet, usize>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    /// Index of the trivial subgroup (always 0).
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the whole group (always last).
    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i].contains(j)
    }

    pub fn leq_rows(&self) -> &[BitSet] {
        &self.leq
    }

    pub fn conj_classes(&self) -> &[Vec<usize>] {
        &self.conj_classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// The conjugacy class containing subgroup `i`.
    pub fn class_members(&self, i: usize) -> &[usize] {
        &self.conj_classes[self.class_of[i]]
    }

    pub fn index_of(&self, bits: &BitSet) -> Option<usize> {
        self.index.get(bits).copied()
    }

    /// Lattice position of `<H, K>`.
    pub fn join(&self, g: &GroupTable, h: usize, k: usize) -> usize {
        if self.leq(h, k) {
            return k;
        }
        if self.leq(k, h) {
            return h;
        }
        let j = join(g, &self.subgroups[h], &self.subgroups[k]);
        self.index[j.bits()]
    }

    /// Lattice position of `<H, x>`.
    pub fn join_element(&self, g: &GroupTable, h: usize, x: usize) -> usize {
        let sub = &self.subgroups[h];
        if sub.contains(x) {
            return h;
        }
        self.index[join_with(g, sub, &[x]).bits()]
    }

    /// Number of subgroups of order `n`.
    pub fn psi(&self, n: usize) -> usize {
        self.subgroups.iter().filter(|s| s.size() == n).count()
    }

    /// Number of subgroups of order `n` contained in subgroup `k`.
    pub fn psi_below(&self, k: usize, n: usize) -> usize {
        (0..self.len())
            .filter(|&h| self.subgroups[h].size() == n && self.leq(h, k))
            .count()
    }

    /// Length of the longest chain from `bottom` to `top`.
    pub fn height(&self) -> usize {
        let mut best = vec![0usize; self.len()];
        for j in 0..self.len() {
            for i in 0..j {
                if self.leq(i, j) {
                    best[j] = best[j].max(best[i] + 1);
                }
            }
        }
        best[self.top()]
    }

    /// Whether subgroup `i` is cyclic.
    pub fn is_cyclic(&self, g: &GroupTable, i: usize) -> bool {
        let s = &self.subgroups[i];
        s.members().iter().any(|&x| g.elem_order(x) == s.size())
    }
}

/// Enumerates every subgroup of `g`.
///
/// Starts from the cyclic subgroups and repeatedly joins each discovered
/// subgroup with every cyclic subgroup it does not contain. Every subgroup is a
/// join of cyclic subgroups, so the fixpoint is the whole lattice.
pub fn enumerate_subgroups(g: &GroupTable, budget: usize) -> Result<SubgroupLattice, GroupError> {
    let mut found: HashMap<BitSet, usize> = HashMap::new();
    let mut subs: Vec<Subgroup> = Vec::new();
    let mut add = |s: Subgroup, subs: &mut Vec<Subgroup>| -> Result<Option<usize>, GroupError> {
        if found.contains_key(s.bits()) {
            return Ok(None);
        }
        if subs.len() >= budget {
            return Err(GroupError::BudgetExceeded { limit: budget });
        }
        found.insert(s.bits().clone(), subs.len());
        subs.push(s);
        Ok(Some(subs.len() - 1))
    };

    let mut cyclic_gens: Vec<usize> = Vec::new();
    add(Subgroup::trivial(g), &mut subs)?;
    for x in 1..g.order() {
        if add(generated_subgroup(g, [x]), &mut subs)?.is_some() {
            cyclic_gens.push(x);
        }
    }
    let mut cursor = 0;
    while cursor < subs.len() {
        for &c in &cyclic_gens {
            if subs[cursor].contains(c) {
                continue;
            }
            let joined = join_with(g, &subs[cursor], &[c]);
            add(joined, &mut subs)?;
        }
        cursor += 1;
    }

    subs.sort_by(|a, b| a.canonical_cmp(b));
    let n = subs.len();
    let index: HashMap<BitSet, usize> = subs
        .iter()
        .enumerate()
        .map(|(i, s)| (s.bits().clone(), i))
        .collect();

    let mut leq = vec![BitSet::new(n); n];
    for i in 0..n {
        for j in i..n {
            if subs[i].is_subgroup_of(&subs[j]) {
                leq[i].insert(j);
            }
        }
    }

    // orbits under conjugation by the generators of g
    let mut class_of = vec![usize::MAX; n];
    let mut conj_classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = conj_classes.len();
        class_of[i] = id;
        let mut class = vec![i];
        let mut cursor = 0;
        while cursor < class.len() {
            let s = &subs[class[cursor]];
            for &x in g.generators() {
                let j = index[&s.conjugate_by(g, x as usize)];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    class.push(j);
                }
            }
            cursor += 1;
        }
        class.sort_unstable();
        conj_classes.push(class);
    }

    Ok(SubgroupLattice {
        subgroups: subs,
        leq,
        conj_classes,
        class_of,
        index,
    })
}
