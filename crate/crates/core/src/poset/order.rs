use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;

use super::PosetError;

/// A finite partial order on `0..size`.
#[derive(Clone, Debug)]
pub struct Poset {
    // row x: the set of y with x <= y
    up: Vec<BitSet>,
    above: Vec<Vec<usize>>,
    below: Vec<Vec<usize>>,
    linear: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    size: usize,
    leq: Vec<Vec<u8>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up
    }
}

impl Eq for Poset {}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity of `leq`.
    pub fn new(leq: &[Vec<bool>]) -> Result<Poset, PosetError> {
        let n = leq.len();
        let mut rows = Vec::with_capacity(n);
        for (x, row) in leq.iter().enumerate() {
            if row.len() != n {
                return Err(PosetError::NotSquare { row: x, len: row.len(), size: n });
            }
            let mut bits = BitSet::new(n);
            for (y, &b) in row.iter().enumerate() {
                if b {
                    bits.insert(y);
                }
            }
            rows.push(bits);
        }
        Self::from_rows(rows)
    }

    /// Like [`Poset::new`], from bitset rows (`rows[x]` holds every `y >= x`).
    pub fn from_rows(rows: Vec<BitSet>) -> Result<Poset, PosetError> {
        let n = rows.len();
        for (x, row) in rows.iter().enumerate() {
            if row.capacity() != n {
                return Err(PosetError::NotSquare { row: x, len: row.capacity(), size: n });
            }
            if !row.contains(x) {
                return Err(PosetError::Reflexivity { x });
            }
        }
        for x in 0..n {
            for y in rows[x].iter() {
                if y != x && rows[y].contains(x) {
                    return Err(PosetError::Antisymmetry { x, y });
                }
                if !rows[y].is_subset(&rows[x]) {
                    let z = rows[y].iter().find(|&z| !rows[x].contains(z)).unwrap();
                    return Err(PosetError::Transitivity { x, y, z });
                }
            }
        }
        let above: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().collect()).collect();
        let mut below = vec![Vec::new(); n];
        for (x, ys) in above.iter().enumerate() {
            for &y in ys {
                below[y].push(x);
            }
        }
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&x| (below[x].len(), x));
        Ok(Poset {
            up: rows,
            above,
            below,
            linear,
        })
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::new(&(0..n).map(|x| (0..n).map(|y| x == y).collect()).collect::<Vec<_>>()).unwrap()
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        Poset::new(&(0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect::<Vec<_>>()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Every `y >= x`, ascending by index.
    pub fn above(&self, x: usize) -> &[usize] {
        &self.above[x]
    }

    /// Every `y <= x`, ascending by index.
    pub fn below(&self, x: usize) -> &[usize] {
        &self.below[x]
    }

    /// A linear extension: if `x < y` then `x` comes first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    /// The interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> Vec<usize> {
        self.above[x].iter().copied().filter(|&z| self.leq(z, y)).collect()
    }

    /// The induced order on `elems` (re-indexed in the given order).
    pub fn restrict(&self, elems: &[usize]) -> Poset {
        let rows = elems
            .iter()
            .map(|&x| {
                let mut r = BitSet::new(elems.len());
                for (j, &y) in elems.iter().enumerate() {
                    if self.leq(x, y) {
                        r.insert(j);
                    }
                }
                r
            })
            .collect();
        Poset::from_rows(rows).expect("induced order is a partial order")
    }

    /// Number of comparable pairs `x <= y`.
    pub fn comparable_pairs(&self) -> usize {
        self.above.iter().map(Vec::len).sum()
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size())
            .map(|x| (0..self.size()).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    /// Adjacency-matrix JSON: `{"size": n, "leq": [[0|1, ...], ...]}`.
    pub fn to_json(&self) -> String {
        let j = PosetJson {
            size: self.size(),
            leq: (0..self.size())
                .map(|x| (0..self.size()).map(|y| self.leq(x, y) as u8).collect())
                .collect(),
        };
        serde_json::to_string(&j).expect("poset json")
    }

    pub fn from_json(text: &str) -> Result<Poset, PosetError> {
        let j: PosetJson = serde_json::from_str(text).map_err(|e| PosetError::Json(e.to_string()))?;
        if j.leq.len() != j.size {
            return Err(PosetError::NotSquare { row: 0, len: j.leq.len(), size: j.size });
        }
        let m: Vec<Vec<bool>> = j
            .leq
            .iter()
            .map(|r| r.iter().map(|&v| v != 0).collect())
            .collect();
        Poset::new(&m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_and_chain() {
        let a = Poset::antichain(3);
        assert!(a.leq(1, 1) && !a.leq(0, 1) && !a.leq(1, 0));
        let c = Poset::chain(3);
        assert!(c.lt(0, 2) && !c.leq(2, 0));
        assert_eq!(c.interval(0, 2), vec![0, 1, 2]);
        assert_eq!(c.comparable_pairs(), 6);
    }

    #[test]
    fn axiom_violations_are_named() {
        let m = vec![vec![true, true], vec![true, true]];
        assert_eq!(Poset::new(&m), Err(PosetError::Antisymmetry { x: 0, y: 1 }));
        let m = vec![vec![false, false], vec![false, true]];
        assert_eq!(Poset::new(&m), Err(PosetError::Reflexivity { x: 0 }));
        let m = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert_eq!(Poset::new(&m), Err(PosetError::Transitivity { x: 0, y: 1, z: 2 }));
        let m = vec![vec![true, false], vec![true]];
        assert!(matches!(Poset::new(&m), Err(PosetError::NotSquare { .. })));
    }

    #[test]
    fn linear_extension_respects_order() {
        // 3 < 0, 2 < 1 < 0
        let m = vec![
            vec![true, false, false, false],
            vec![true, true, false, false],
            vec![true, true, true, false],
            vec![true, false, false, true],
        ];
        let p = Poset::new(&m).unwrap();
        let pos: Vec<usize> = {
            let mut pos = vec![0; 4];
            for (i, &x) in p.linear_extension().iter().enumerate() {
                pos[x] = i;
            }
            pos
        };
        for x in 0..4 {
            for y in 0..4 {
                if p.lt(x, y) {
                    assert!(pos[x] < pos[y]);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let p = Poset::chain(3);
        let s = p.to_json();
        assert_eq!(s, r#"{"size":3,"leq":[[1,1,1],[0,1,1],[0,0,1]]}"#);
        assert_eq!(Poset::from_json(&s).unwrap(), p);
        assert!(Poset::from_json("{").is_err());
    }
}
