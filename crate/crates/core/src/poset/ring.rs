use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficient ring for incidence functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    /// Residues in `[0, n)`, `n >= 1`.
    IntegersMod(BigInt),
}

impl CoefficientRing {
    pub fn integers_mod(n: u64) -> Self {
        assert!(n >= 1, "modulus must be positive");
        CoefficientRing::IntegersMod(BigInt::from(n))
    }

    pub fn reduce(&self, v: BigInt) -> BigInt {
        match self {
            CoefficientRing::Integers => v,
            CoefficientRing::IntegersMod(n) => v.mod_floor(n),
        }
    }

    pub fn is_unit(&self, v: &BigInt) -> bool {
        self.unit_inverse(v).is_some()
    }

    pub fn unit_inverse(&self, v: &BigInt) -> Option<BigInt> {
        match self {
            CoefficientRing::Integers => (v.abs().is_one()).then(|| v.clone()),
            CoefficientRing::IntegersMod(n) => {
                let v = v.mod_floor(n);
                let e = v.extended_gcd(n);
                e.gcd.is_one().then(|| e.x.mod_floor(n))
            }
        }
    }

    pub fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    pub fn one(&self) -> BigInt {
        self.reduce(BigInt::one())
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => f.write_str("Z"),
            CoefficientRing::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_canonical() {
        let r = CoefficientRing::integers_mod(6);
        assert_eq!(r.reduce(BigInt::from(-1)), BigInt::from(5));
        assert_eq!(r.reduce(BigInt::from(13)), BigInt::from(1));
        assert_eq!(CoefficientRing::integers_mod(1).one(), BigInt::zero());
    }

    #[test]
    fn units() {
        let z = CoefficientRing::Integers;
        assert_eq!(z.unit_inverse(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert!(!z.is_unit(&BigInt::from(2)));
        let r = CoefficientRing::integers_mod(10);
        assert_eq!(r.unit_inverse(&BigInt::from(3)), Some(BigInt::from(7)));
        assert!(!r.is_unit(&BigInt::from(4)));
        // every residue mod 1 is a unit
        assert!(CoefficientRing::integers_mod(1).is_unit(&BigInt::zero()));
    }
}
