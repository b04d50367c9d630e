use std::collections::HashMap;

use rand::Rng;

use super::spec::{CycleNotation, GroupSpec};
use super::GroupError;

/// Default bound on the order of groups that may be built.
pub const DEFAULT_MAX_ORDER: usize = 384;

type Perm = Vec<u16>;

/// A finite group given by its full Cayley table.
///
/// Element 0 is the identity. `mul(a, b)` is the product `ab`, realized as
/// permutation composition `x -> a(b(x))` in the faithful action the table
/// was built from.
#[derive(Clone, Debug)]
pub struct GroupTable {
    label: String,
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    generators: Vec<u32>,
}

impl GroupTable {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elem_order(&self, a: usize) -> usize {
        self.elem_order[a] as usize
    }

    /// Indices of the generators the table was closed from.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// `x a x^-1`.
    #[inline]
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    /// Element conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class: Vec<usize> = Vec::new();
            for x in 0..self.order {
                let c = self.conjugate(x, a);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Builds a table directly from a multiplication closure over `0..order`.
    ///
    /// Element 0 must be the identity. The group laws are checked.
    pub fn from_mul_fn(
        label: impl Into<String>,
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<GroupTable, GroupError> {
        let mut mult = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let c = mul(a, b);
                if c >= order {
                    return Err(GroupError::LawViolation(format!("{a}*{b} out of range")));
                }
                mult.push(c as u32);
            }
        }
        let generators = (1..order as u32).collect();
        let table = Self::finish(label.into(), order, mult, generators)?;
        table.check_laws(&mut rand::thread_rng(), 4096)?;
        Ok(table)
    }

    fn finish(
        label: String,
        order: usize,
        mult: Vec<u32>,
        generators: Vec<u32>,
    ) -> Result<GroupTable, GroupError> {
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mult[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            if inv[a] == u32::MAX {
                return Err(GroupError::LawViolation(format!("element {a} has no inverse")));
            }
        }
        let mut elem_order = vec![0u32; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mult[x * order + a] as usize;
                k += 1;
                if k > order + 1 {
                    return Err(GroupError::LawViolation(format!("element {a} has no finite order")));
                }
            }
            elem_order[a] = k as u32;
        }
        Ok(GroupTable {
            label,
            order,
            mult,
            inv,
            elem_order,
            generators,
        })
    }

    /// Verifies identity, inverse and associativity laws.
    ///
    /// Associativity is exhaustive for order <= 64 and sampled on `samples`
    /// random triples otherwise.
    pub fn check_laws<R: Rng>(&self, rng: &mut R, samples: usize) -> Result<(), GroupError> {
        let n = self.order;
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(GroupError::LawViolation(format!("identity law fails at {g}")));
            }
            if self.mul(g, self.inv(g)) != 0 || self.mul(self.inv(g), g) != 0 {
                return Err(GroupError::LawViolation(format!("inverse law fails at {g}")));
            }
            if n % self.elem_order(g) != 0 {
                return Err(GroupError::LawViolation(format!("order of {g} does not divide {n}")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(GroupError::LawViolation(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            for _ in 0..samples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(GroupError::LawViolation(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Builds the Cayley table of the group described by `spec`.
pub fn build_group(spec: &GroupSpec, max_order: usize) -> Result<GroupTable, GroupError> {
    if let Some(n) = spec.nominal_order() {
        if n > max_order as u128 {
            return Err(GroupError::OrderExceeded { limit: max_order });
        }
    }
    let (degree, gens) = generators(spec)?;
    close(spec.to_string(), degree, &gens, max_order)
}

fn perm_from_cycles(degree: usize, c: &CycleNotation) -> Perm {
    let mut p: Perm = (0..degree as u16).collect();
    for cycle in &c.0 {
        for (i, &a) in cycle.iter().enumerate() {
            let b = cycle[(i + 1) % cycle.len()];
            p[a as usize - 1] = b as u16 - 1;
        }
    }
    p
}

fn cycle_perm(degree: usize, points: &[usize]) -> Perm {
    let mut p: Perm = (0..degree as u16).collect();
    for (i, &a) in points.iter().enumerate() {
        p[a] = points[(i + 1) % points.len()] as u16;
    }
    p
}

/// Faithful permutation generators for each family.
fn generators(spec: &GroupSpec) -> Result<(usize, Vec<Perm>), GroupError> {
    Ok(match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n as usize;
            (n, vec![cycle_perm(n, &(0..n).collect::<Vec<_>>())])
        }
        GroupSpec::Dihedral(1) => (2, vec![cycle_perm(2, &[0, 1])]),
        GroupSpec::Dihedral(2) | GroupSpec::Klein4 => {
            (4, vec![cycle_perm(4, &[0, 1]), cycle_perm(4, &[2, 3])])
        }
        GroupSpec::Dihedral(n) => {
            let n = *n as usize;
            let rotation = cycle_perm(n, &(0..n).collect::<Vec<_>>());
            let reflection: Perm = (0..n).map(|i| ((n - i) % n) as u16).collect();
            (n, vec![rotation, reflection])
        }
        GroupSpec::Symmetric(n) => {
            let n = *n as usize;
            if n < 2 {
                (1, vec![])
            } else {
                (
                    n,
                    vec![
                        cycle_perm(n, &(0..n).collect::<Vec<_>>()),
                        cycle_perm(n, &[0, 1]),
                    ],
                )
            }
        }
        GroupSpec::Alternating(n) => {
            let n = *n as usize;
            if n < 3 {
                (1, vec![])
            } else {
                (n, (2..n).map(|k| cycle_perm(n, &[0, 1, k])).collect())
            }
        }
        GroupSpec::Quaternion8 => (8, quaternion_regular()),
        GroupSpec::DirectProduct(factors) => {
            let parts = factors.iter().map(generators).collect::<Result<Vec<_>, _>>()?;
            let degree: usize = parts.iter().map(|(d, _)| d).sum();
            let mut gens = Vec::new();
            let mut offset = 0;
            for (d, ps) in &parts {
                for p in ps {
                    let mut q: Perm = (0..degree as u16).collect();
                    for i in 0..*d {
                        q[offset + i] = p[i] + offset as u16;
                    }
                    gens.push(q);
                }
                offset += d;
            }
            (degree, gens)
        }
        GroupSpec::Permutations(cs) => {
            let degree = cs.iter().map(|c| c.largest_point()).max().unwrap_or(0).max(1) as usize;
            if degree > u16::MAX as usize {
                return Err(GroupError::Syntax {
                    position: 0,
                    message: "too many points".into(),
                });
            }
            (degree, cs.iter().map(|c| perm_from_cycles(degree, c)).collect())
        }
    })
}

/// Left-multiplication permutations of i and j on the eight units
/// `1, -1, i, -i, j, -j, k, -k`.
fn quaternion_regular() -> Vec<Perm> {
    // unit index u = 2*axis + sign, axis in {1, i, j, k}
    let axis_mul = |a: usize, b: usize| -> (usize, bool) {
        // returns (axis, negated)
        match (a, b) {
            (0, x) | (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let left = |g: usize| -> Perm {
        (0..8)
            .map(|u| {
                let (ax, neg) = axis_mul(g / 2, u / 2);
                let sign = (g % 2) ^ (u % 2) ^ neg as usize;
                (2 * ax + sign) as u16
            })
            .collect()
    };
    vec![left(2), left(4)]
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn close(label: String, degree: usize, gens: &[Perm], max_order: usize) -> Result<GroupTable, GroupError> {
    let identity: Perm = (0..degree as u16).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Perm, u32> = HashMap::from([(identity, 0)]);
    let mut gen_idx = Vec::new();
    for g in gens {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len() as u32);
            elements.push(g.clone());
        }
        gen_idx.push(index[g]);
    }
    if elements.len() > max_order {
        return Err(GroupError::OrderExceeded { limit: max_order });
    }
    let mut cursor = 0;
    while cursor < elements.len() {
        for g in gens {
            let p = compose(&elements[cursor], g);
            if !index.contains_key(&p) {
                if elements.len() == max_order {
                    return Err(GroupError::OrderExceeded { limit: max_order });
                }
                index.insert(p.clone(), elements.len() as u32);
                elements.push(p);
            }
        }
        cursor += 1;
    }
    let order = elements.len();
    let mut mult = Vec::with_capacity(order * order);
    for a in &elements {
        for b in &elements {
            mult.push(index[&compose(a, b)]);
        }
    }
    gen_idx.sort_unstable();
    gen_idx.dedup();
    gen_idx.retain(|&g| g != 0);
    GroupTable::finish(label, order, mult, gen_idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn textbook_orders() {
        for (s, n) in [
            ("C1", 1),
            ("C12", 12),
            ("D1", 2),
            ("D2", 4),
            ("D5", 10),
            ("S1", 1),
            ("S3", 6),
            ("S4", 24),
            ("S5", 120),
            ("A2", 1),
            ("A4", 12),
            ("A5", 60),
            ("Q8", 8),
            ("V4", 4),
            ("C2xS3", 12),
            ("perm:(1 2 3)(4 5),(1 2)", 12),
            ("perm:", 1),
        ] {
            let g = build(s);
            assert_eq!(g.order(), n, "{s}");
            g.check_laws(&mut rand::thread_rng(), 500).unwrap();
        }
    }

    #[test]
    fn quaternion_has_one_involution() {
        let g = build("Q8");
        let involutions = (0..8).filter(|&a| g.elem_order(a) == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!((0..8).filter(|&a| g.elem_order(a) == 4).count(), 6);
    }

    #[test]
    fn klein_product() {
        let g = build("C2xC2");
        assert_eq!(g.order(), 4);
        assert!((1..4).all(|a| g.elem_order(a) == 2));
    }

    #[test]
    fn order_bound() {
        let spec = GroupSpec::parse("S6").unwrap();
        assert!(matches!(build_group(&spec, 384), Err(GroupError::OrderExceeded { limit: 384 })));
        let spec = GroupSpec::parse("perm:(1 2 3 4 5 6),(1 2)").unwrap();
        assert!(matches!(build_group(&spec, 384), Err(GroupError::OrderExceeded { .. })));
        assert_eq!(build_group(&spec, 720).unwrap().order(), 720);
    }

    #[test]
    fn conjugacy_classes_of_s3() {
        let g = build("S3");
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn from_mul_fn_checks_laws() {
        let z5 = GroupTable::from_mul_fn("Z5", 5, |a, b| (a + b) % 5).unwrap();
        assert_eq!(z5.elem_order(2), 5);
        assert!(GroupTable::from_mul_fn("bad", 3, |a, b| (a * b) % 3).is_err());
    }
}
