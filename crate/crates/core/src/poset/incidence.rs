use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CoefficientRing, Poset, PosetError};

/// A function on pairs `x <= y` of a finite poset, valued in a coefficient ring.
///
/// Values on incomparable pairs are identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceFunction {
    poset: Arc<Poset>,
    ring: CoefficientRing,
    values: Vec<BigInt>,
}

impl IncidenceFunction {
    /// Builds a function from `f`, evaluated on comparable pairs only.
    pub fn from_fn(
        poset: &Arc<Poset>,
        ring: &CoefficientRing,
        mut f: impl FnMut(usize, usize) -> BigInt,
    ) -> Self {
        let n = poset.size();
        let mut values = vec![BigInt::zero(); n * n];
        for x in 0..n {
            for &y in poset.above(x) {
                values[x * n + y] = ring.reduce(f(x, y));
            }
        }
        IncidenceFunction {
            poset: Arc::clone(poset),
            ring: ring.clone(),
            values,
        }
    }

    pub fn zero(poset: &Arc<Poset>, ring: &CoefficientRing) -> Self {
        Self::from_fn(poset, ring, |_, _| BigInt::zero())
    }

    /// Kronecker delta, the unit of the algebra.
    pub fn delta(poset: &Arc<Poset>, ring: &CoefficientRing) -> Self {
        Self::from_fn(poset, ring, |x, y| BigInt::from((x == y) as u8))
    }

    pub fn zeta(poset: &Arc<Poset>, ring: &CoefficientRing) -> Self {
        Self::from_fn(poset, ring, |_, _| BigInt::one())
    }

    /// `eta(x, y) = 1` iff `x < y`.
    pub fn eta(poset: &Arc<Poset>, ring: &CoefficientRing) -> Self {
        Self::from_fn(poset, ring, |x, y| BigInt::from((x != y) as u8))
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> &BigInt {
        &self.values[x * self.poset.size() + y]
    }

    /// Sets a value; writes to incomparable pairs are rejected.
    pub fn set(&mut self, x: usize, y: usize, v: BigInt) -> Result<(), PosetError> {
        if !self.poset.leq(x, y) {
            return Err(PosetError::Incomparable { x, y });
        }
        let n = self.poset.size();
        self.values[x * n + y] = self.ring.reduce(v);
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PosetError> {
        if !(Arc::ptr_eq(&self.poset, &other.poset) || self.poset == other.poset) {
            return Err(PosetError::PosetMismatch);
        }
        if self.ring != other.ring {
            return Err(PosetError::RingMismatch);
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Self, PosetError> {
        self.check_compatible(other)?;
        Ok(Self::from_fn(&self.poset, &self.ring, |x, y| op(self.get(x, y), other.get(x, y))))
    }

    pub fn add(&self, other: &Self) -> Result<Self, PosetError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PosetError> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (not the algebra product).
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self, PosetError> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, a: &BigInt) -> Self {
        Self::from_fn(&self.poset, &self.ring, |x, y| a * self.get(x, y))
    }

    /// `(f*h)(x, y) = sum over x <= z <= y of f(x, z) h(z, y)`.
    pub fn convolve(&self, other: &Self) -> Result<Self, PosetError> {
        self.check_compatible(other)?;
        let p = &self.poset;
        Ok(Self::from_fn(p, &self.ring, |x, y| {
            p.above(x)
                .iter()
                .filter(|&&z| p.leq(z, y))
                .map(|&z| self.get(x, z) * other.get(z, y))
                .sum()
        }))
    }

    /// `f^k`, with `f^0 = delta`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::delta(&self.poset, &self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.convolve(&base).expect("same algebra");
            }
            k >>= 1;
            if k > 0 {
                base = base.convolve(&base).expect("same algebra");
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn diagonal_inverses(&self) -> Result<Vec<BigInt>, PosetError> {
        (0..self.poset.size())
            .map(|x| {
                self.ring
                    .unit_inverse(self.get(x, x))
                    .ok_or_else(|| PosetError::NonUnitDiagonal {
                        x,
                        value: self.get(x, x).clone(),
                    })
            })
            .collect()
    }

    /// The `h` with `f*h = delta`, column by column from the top of each
    /// interval downwards.
    pub fn right_inverse(&self) -> Result<Self, PosetError> {
        let inv = self.diagonal_inverses()?;
        let p = &self.poset;
        let n = p.size();
        let mut h = Self::zero(p, &self.ring);
        let order = p.linear_extension();
        for y in 0..n {
            for &x in order.iter().rev() {
                if !p.leq(x, y) {
                    continue;
                }
                let v = if x == y {
                    inv[y].clone()
                } else {
                    let s: BigInt = p
                        .above(x)
                        .iter()
                        .filter(|&&z| z != x && p.leq(z, y))
                        .map(|&z| self.get(x, z) * h.get(z, y))
                        .sum();
                    -(&inv[x] * s)
                };
                h.values[x * n + y] = self.ring.reduce(v);
            }
        }
        Ok(h)
    }

    /// The `g` with `g*f = delta`, row by row from the bottom of each
    /// interval upwards.
    pub fn left_inverse(&self) -> Result<Self, PosetError> {
        let inv = self.diagonal_inverses()?;
        let p = &self.poset;
        let n = p.size();
        let mut g = Self::zero(p, &self.ring);
        let order = p.linear_extension();
        for x in 0..n {
            for &y in order {
                if !p.leq(x, y) {
                    continue;
                }
                let v = if x == y {
                    inv[x].clone()
                } else {
                    let s: BigInt = p
                        .below(y)
                        .iter()
                        .filter(|&&z| z != y && p.leq(x, z))
                        .map(|&z| g.get(x, z) * self.get(z, y))
                        .sum();
                    -(&inv[y] * s)
                };
                g.values[x * n + y] = self.ring.reduce(v);
            }
        }
        Ok(g)
    }

    /// Two-sided inverse: the right inverse, checked to also be a left inverse.
    pub fn invert(&self) -> Result<Self, PosetError> {
        let h = self.right_inverse()?;
        let delta = Self::delta(&self.poset, &self.ring);
        if h.convolve(self)? != delta {
            return Err(PosetError::InverseCheckFailed);
        }
        Ok(h)
    }
}

/// `(delta, zeta, eta)` over `ring`.
pub fn standard_functions(
    poset: &Arc<Poset>,
    ring: &CoefficientRing,
) -> (IncidenceFunction, IncidenceFunction, IncidenceFunction) {
    (
        IncidenceFunction::delta(poset, ring),
        IncidenceFunction::zeta(poset, ring),
        IncidenceFunction::eta(poset, ring),
    )
}

/// The Möbius function, the inverse of zeta.
pub fn mobius(poset: &Arc<Poset>, ring: &CoefficientRing) -> IncidenceFunction {
    IncidenceFunction::zeta(poset, ring)
        .invert()
        .expect("zeta has unit diagonal")
}

/// Integer Möbius values `mu(x, top)` for every `x`, without building the full
/// incidence function.
pub fn mobius_column(poset: &Poset, top: usize) -> Vec<BigInt> {
    let mut col = vec![BigInt::zero(); poset.size()];
    for &x in poset.linear_extension().iter().rev() {
        if !poset.leq(x, top) {
            continue;
        }
        col[x] = if x == top {
            BigInt::one()
        } else {
            -poset
                .above(x)
                .iter()
                .filter(|&&z| z != x && poset.leq(z, top))
                .map(|&z| &col[z])
                .sum::<BigInt>()
        };
    }
    col
}

/// Counts of strict chains `x = z0 < ... < zk = top`, for every `x`, for
/// `k = 0, 1, ...` up to `|P| - 1` or until the counts vanish.
pub fn chain_counts_to(poset: &Poset, top: usize) -> Vec<Vec<BigInt>> {
    let n = poset.size();
    let mut current = vec![BigInt::zero(); n];
    current[top] = BigInt::one();
    let mut all = vec![current.clone()];
    for _ in 1..n {
        let next: Vec<BigInt> = (0..n)
            .map(|x| {
                poset
                    .above(x)
                    .iter()
                    .filter(|&&z| z != x)
                    .map(|&z| &current[z])
                    .sum()
            })
            .collect();
        if next.iter().all(Zero::is_zero) {
            break;
        }
        all.push(next.clone());
        current = next;
    }
    all
}

/// Even-length minus odd-length chains from each `x` up to `top`.
pub fn hall_column(poset: &Poset, top: usize) -> Vec<BigInt> {
    let mut col = vec![BigInt::zero(); poset.size()];
    for (k, counts) in chain_counts_to(poset, top).iter().enumerate() {
        for (x, c) in counts.iter().enumerate() {
            if k % 2 == 0 {
                col[x] += c;
            } else {
                col[x] -= c;
            }
        }
    }
    col
}

/// Hall's alternating chain count from `x` to `y`.
pub fn hall_mu(poset: &Poset, x: usize, y: usize) -> BigInt {
    hall_column(poset, y).swap_remove(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int() -> CoefficientRing {
        CoefficientRing::Integers
    }

    fn v4_lattice() -> Arc<Poset> {
        // 0 bottom, 1..=3 atoms, 4 top
        let m: Vec<Vec<bool>> = (0..5)
            .map(|x| (0..5).map(|y| x == y || x == 0 || y == 4).collect())
            .collect();
        Arc::new(Poset::new(&m).unwrap())
    }

    #[test]
    fn standard_functions_on_chain() {
        let p = Arc::new(Poset::chain(2));
        let (d, z, e) = standard_functions(&p, &int());
        assert_eq!(z.get(0, 1), &BigInt::one());
        assert!(e.get(0, 0).is_zero());
        assert!(d.get(0, 1).is_zero());
        assert_eq!(z.sub(&e).unwrap(), d);
        let a = Arc::new(Poset::antichain(3));
        let (d, z, _) = standard_functions(&a, &int());
        assert_eq!(d, z);
    }

    #[test]
    fn zeta_squared_counts_intervals() {
        let p = v4_lattice();
        let z = IncidenceFunction::zeta(&p, &int());
        let z2 = z.convolve(&z).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                let expected = if p.leq(x, y) { p.interval(x, y).len() } else { 0 };
                assert_eq!(z2.get(x, y), &BigInt::from(expected));
            }
        }
    }

    #[test]
    fn mobius_examples() {
        let chain = Arc::new(Poset::chain(2));
        assert_eq!(mobius(&chain, &int()).get(0, 1), &BigInt::from(-1));
        let p = v4_lattice();
        let mu = mobius(&p, &int());
        assert_eq!(mu.get(0, 4), &BigInt::from(2));
        assert_eq!(hall_mu(&p, 0, 4), BigInt::from(2));
        assert_eq!(hall_mu(&p, 2, 2), BigInt::one());
        assert_eq!(hall_mu(&chain, 0, 1), BigInt::from(-1));
        assert_eq!(mobius_column(&p, 4)[0], BigInt::from(2));
        let counts = chain_counts_to(&p, 4);
        assert_eq!(counts[1][0], BigInt::one());
        assert_eq!(counts[2][0], BigInt::from(3));
    }

    #[test]
    fn delta_is_self_inverse() {
        let p = v4_lattice();
        let d = IncidenceFunction::delta(&p, &int());
        assert_eq!(d.invert().unwrap(), d);
    }

    #[test]
    fn non_unit_diagonal_is_rejected() {
        let p = Arc::new(Poset::chain(3));
        let mut f = IncidenceFunction::zeta(&p, &int());
        f.set(1, 1, BigInt::zero()).unwrap();
        assert_eq!(
            f.invert(),
            Err(PosetError::NonUnitDiagonal { x: 1, value: BigInt::zero() })
        );
        let r = CoefficientRing::integers_mod(6);
        let mut g = IncidenceFunction::zeta(&p, &r);
        g.set(2, 2, BigInt::from(3)).unwrap();
        assert!(matches!(g.invert(), Err(PosetError::NonUnitDiagonal { x: 2, .. })));
        assert_eq!(f.set(2, 0, BigInt::one()), Err(PosetError::Incomparable { x: 2, y: 0 }));
    }

    #[test]
    fn mismatches() {
        let a = IncidenceFunction::zeta(&Arc::new(Poset::chain(2)), &int());
        let b = IncidenceFunction::zeta(&Arc::new(Poset::antichain(2)), &int());
        assert_eq!(a.convolve(&b), Err(PosetError::PosetMismatch));
        let c = IncidenceFunction::zeta(a.poset(), &CoefficientRing::integers_mod(5));
        assert_eq!(a.convolve(&c), Err(PosetError::RingMismatch));
    }

    #[test]
    fn eta_powers_count_chains() {
        let p = v4_lattice();
        let e = IncidenceFunction::eta(&p, &int());
        assert_eq!(e.pow(2).get(0, 4), &BigInt::from(3));
        assert!(e.pow(5).is_zero());
        assert_eq!(e.pow(0), IncidenceFunction::delta(&p, &int()));
    }
}
