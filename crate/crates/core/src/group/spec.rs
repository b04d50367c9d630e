//! Textual group specifications.
//!
//! Grammar: `C<n>`, `D<n>` (dihedral of order 2n), `S<n>`, `A<n>`, `Q8`, `V4`,
//! products joined with an infix `x`, or `perm:` followed by comma separated
//! permutations in disjoint cycle notation on 1-based points. A `perm:` factor
//! consumes the remainder of the input, so inside a product it must come last.

use std::fmt;
use std::str::FromStr;

use super::GroupError;

/// A permutation written as disjoint cycles over 1-based points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleNotation(pub Vec<Vec<u32>>);

impl CycleNotation {
    pub fn largest_point(&self) -> u32 {
        self.0.iter().flatten().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for CycleNotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for cycle in &self.0 {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u32),
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Quaternion8,
    Klein4,
    DirectProduct(Vec<GroupSpec>),
    Permutations(Vec<CycleNotation>),
}

impl GroupSpec {
    /// Parses the canonical grammar.
    pub fn parse(text: &str) -> Result<GroupSpec, GroupError> {
        Parser { src: text, pos: 0 }.spec()
    }

    /// Order known without building the group, when the family determines it.
    pub fn nominal_order(&self) -> Option<u128> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::Dihedral(n) => Some(2 * *n as u128),
            GroupSpec::Symmetric(n) => factorial(*n),
            GroupSpec::Alternating(n) => factorial(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            GroupSpec::Quaternion8 => Some(8),
            GroupSpec::Klein4 => Some(4),
            GroupSpec::DirectProduct(fs) => fs
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.nominal_order()?)),
            GroupSpec::Permutations(_) => None,
        }
    }
}

fn factorial(n: u32) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Quaternion8 => f.write_str("Q8"),
            GroupSpec::Klein4 => f.write_str("V4"),
            GroupSpec::DirectProduct(factors) => {
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupSpec::Permutations(gens) => {
                f.write_str("perm:")?;
                for (i, p) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> GroupError {
        GroupError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c == ' ') {
            self.pos += 1;
        }
    }

    fn spec(&mut self) -> Result<GroupSpec, GroupError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some('x') {
            if matches!(factors.last(), Some(GroupSpec::Permutations(_))) {
                return Err(self.err("a perm: factor must be the last factor"));
            }
            self.bump();
            factors.push(self.factor()?);
        }
        if self.pos != self.src.len() {
            return Err(self.err(format!("unexpected character {:?}", self.peek().unwrap())));
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupSpec::DirectProduct(factors)
        })
    }

    fn number(&mut self) -> Result<u32, GroupError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| GroupError::Syntax {
                position: start,
                message: "number out of range".into(),
            })
    }

    fn factor(&mut self) -> Result<GroupSpec, GroupError> {
        let start = self.pos;
        if self.src[self.pos..].starts_with("perm:") {
            self.pos += 5;
            return self.permutations();
        }
        if self.src[self.pos..].starts_with("Q8") {
            self.pos += 2;
            return Ok(GroupSpec::Quaternion8);
        }
        if self.src[self.pos..].starts_with("V4") {
            self.pos += 2;
            return Ok(GroupSpec::Klein4);
        }
        let family = match self.bump() {
            Some('C') => GroupSpec::Cyclic,
            Some('D') => GroupSpec::Dihedral,
            Some('S') => GroupSpec::Symmetric,
            Some('A') => GroupSpec::Alternating,
            Some(c) => {
                self.pos = start;
                return Err(GroupError::UnsupportedFamily {
                    position: start,
                    family: c.to_string(),
                });
            }
            None => return Err(self.err("expected a group")),
        };
        let n = self.number()?;
        if n == 0 {
            return Err(GroupError::Syntax {
                position: start + 1,
                message: "parameter must be positive".into(),
            });
        }
        Ok(family(n))
    }

    fn permutations(&mut self) -> Result<GroupSpec, GroupError> {
        let mut gens = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Ok(GroupSpec::Permutations(gens));
        }
        loop {
            self.skip_ws();
            gens.push(self.permutation()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.bump();
                }
                None => break,
                Some(c) => return Err(self.err(format!("unexpected character {c:?}"))),
            }
        }
        Ok(GroupSpec::Permutations(gens))
    }

    fn permutation(&mut self) -> Result<CycleNotation, GroupError> {
        let mut cycles = Vec::new();
        let mut seen = Vec::new();
        if self.peek() != Some('(') {
            return Err(self.err("expected '('"));
        }
        while self.peek() == Some('(') {
            self.bump();
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.bump();
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let at = self.pos;
                        let p = self.number()?;
                        if p == 0 {
                            return Err(GroupError::Syntax {
                                position: at,
                                message: "points are 1-based".into(),
                            });
                        }
                        if seen.contains(&p) {
                            return Err(GroupError::Syntax {
                                position: at,
                                message: format!("point {p} repeated"),
                            });
                        }
                        seen.push(p);
                        cycle.push(p);
                    }
                    Some(c) => return Err(self.err(format!("unexpected character {c:?}"))),
                    None => return Err(self.err("unterminated cycle")),
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Ok(CycleNotation(cycles))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(GroupSpec::parse("S3").unwrap(), GroupSpec::Symmetric(3));
        assert_eq!(GroupSpec::parse("Q8").unwrap(), GroupSpec::Quaternion8);
        assert_eq!(GroupSpec::parse("V4").unwrap(), GroupSpec::Klein4);
        assert_eq!(GroupSpec::parse("D12").unwrap(), GroupSpec::Dihedral(12));
    }

    #[test]
    fn products_are_flat() {
        assert_eq!(
            GroupSpec::parse("C2xC4").unwrap(),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)])
        );
        let s = GroupSpec::parse("C2xS3xQ8").unwrap();
        assert_eq!(s.to_string(), "C2xS3xQ8");
        assert_eq!(s.nominal_order(), Some(96));
    }

    #[test]
    fn permutation_generators() {
        let s = GroupSpec::parse("perm:(1 2 3)(4 5),(1 2)").unwrap();
        match &s {
            GroupSpec::Permutations(g) => {
                assert_eq!(g.len(), 2);
                assert_eq!(g[0].0, vec![vec![1, 2, 3], vec![4, 5]]);
                assert_eq!(g.iter().map(|p| p.largest_point()).max(), Some(5));
            }
            _ => panic!("wrong kind"),
        }
        assert_eq!(s.to_string(), "perm:(1 2 3)(4 5),(1 2)");
        assert_eq!(GroupSpec::parse("C3xperm:(1 2)").unwrap().to_string(), "C3xperm:(1 2)");
        assert_eq!(GroupSpec::parse("perm:").unwrap(), GroupSpec::Permutations(vec![]));
        assert_eq!(GroupSpec::parse("perm:()").unwrap().to_string(), "perm:()");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match GroupSpec::parse("perm:(1 2") {
            Err(GroupError::Syntax { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            GroupSpec::parse("C2xZ5"),
            Err(GroupError::UnsupportedFamily { position: 3, .. })
        ));
        assert!(matches!(GroupSpec::parse("C"), Err(GroupError::Syntax { position: 1, .. })));
        assert!(matches!(GroupSpec::parse("C0"), Err(GroupError::Syntax { .. })));
        assert!(matches!(GroupSpec::parse("C2x"), Err(GroupError::Syntax { .. })));
        assert!(matches!(GroupSpec::parse("perm:(1 1)"), Err(GroupError::Syntax { .. })));
        assert!(matches!(GroupSpec::parse("perm:(1 2)xC2"), Err(GroupError::Syntax { .. })));
    }
}
