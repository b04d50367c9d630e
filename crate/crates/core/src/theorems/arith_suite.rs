use num_bigint::BigUint;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arith::{
    binomial_kernel, divisors, inverse_mod, prime_factors, ArithmeticFunction as Af, StandardArith,
};
use crate::group::{chi, GroupTable};

use super::CongruenceReport;

const MAX_M: u64 = 5;

struct Basics {
    n: u64,
    eps: Af,
    e: Af,
    mu: Af,
    phi: Af,
}

impl Basics {
    fn new(n: u64) -> Basics {
        let std = |k| Af::standard(k, n).expect("positive modulus");
        Basics {
            n,
            eps: std(StandardArith::Epsilon),
            e: std(StandardArith::One),
            mu: std(StandardArith::Moebius),
            phi: std(StandardArith::EulerPhi),
        }
    }

    fn unit<R: Rng>(&self, rng: &mut R) -> u64 {
        loop {
            let u = rng.gen_range(0..self.n);
            if inverse_mod(u, self.n).is_some() {
                return u;
            }
        }
    }

    /// Random special function; with `unit`, its value at 1 is a unit.
    fn special<R: Rng>(&self, rng: &mut R, unit: bool) -> Af {
        let lead = unit.then(|| self.unit(rng));
        let n = self.n;
        Af::from_fn(n, |t| match (t, lead) {
            (1, Some(u)) => u as i128,
            _ => (t * rng.gen_range(0..n / t)) as i128,
        })
        .expect("positive modulus")
    }

    fn random<R: Rng>(&self, rng: &mut R) -> Af {
        Af::random(self.n, rng)
    }

    fn conv(&self, a: &Af, b: &Af) -> Af {
        a.convolve(b).expect("same modulus")
    }

    fn binomial(&self, m: u64) -> Af {
        Af::standard(StandardArith::Binomial(m), self.n).expect("positive modulus")
    }
}

/// `sum_{d | t} h(d) b(t/d) = 0 mod t`, i.e. `(h*b)(t) = 0 mod t`.
fn divisible_at(h: &Af, b: &Af, t: u64) -> bool {
    h.convolve(b).expect("same modulus").at(t) % t == 0
}

/// Builds `h` divisor by divisor so that for each `t` a randomly chosen `m_t`
/// makes `sum_{d | t} h(d) b_{m_t}(t/d)` vanish mod `t`.
fn per_divisor_witness<R: Rng>(b: &Basics, kernels: &[Af], rng: &mut R) -> (Af, Vec<u64>) {
    let n = b.n;
    let divs = divisors(n);
    let mut values = vec![0u64; divs.len()];
    let mut choices = Vec::with_capacity(divs.len());
    for (i, &t) in divs.iter().enumerate() {
        let m = rng.gen_range(1..=MAX_M);
        choices.push(m);
        let kernel = &kernels[(m - 1) as usize];
        let partial = divs[..i]
            .iter()
            .enumerate()
            .filter(|&(_, &d)| t % d == 0)
            .fold(0u128, |acc, (j, &d)| acc + values[j] as u128 * kernel.at(t / d) as u128);
        let fix = (t as u128 - partial % t as u128) % t as u128;
        values[i] = ((fix + t as u128 * rng.gen_range(0..n / t) as u128) % n as u128) as u64;
    }
    let f = Af::from_fn(n, |a| values[divs.binary_search(&a).unwrap()] as i128).expect("positive modulus");
    (f, choices)
}

/// Property checks on `Ar_n` over `samples` seeded random draws; each report
/// counts failing samples.
pub fn ring_property_reports(n: u64, samples: usize, seed: u64, label: &str) -> Vec<CongruenceReport> {
    let b = Basics::new(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n);
    let params = json!({ "n": n, "samples": samples, "seed": seed });
    let report = |theorem: &str, anchor: &str, bad: usize| {
        CongruenceReport::mismatches(label, theorem, anchor, params.clone(), bad)
    };
    let kernels: Vec<Af> = (1..=MAX_M).map(|m| b.binomial(m)).collect();
    let mut out = Vec::new();

    let mut bad = 0;
    for _ in 0..samples {
        let (f, g, h) = (b.random(&mut rng), b.random(&mut rng), b.random(&mut rng));
        let fg = b.conv(&f, &g);
        let ok = b.conv(&fg, &h) == b.conv(&f, &b.conv(&g, &h))
            && fg == b.conv(&g, &f)
            && b.conv(&f, &g.add(&h).unwrap()) == fg.add(&b.conv(&f, &h)).unwrap()
            && b.conv(&f, &b.eps) == f
            && f.add(&f.neg()).unwrap().values().iter().all(|&v| v == 0)
            && (!f.is_unit() || b.conv(&f, &f.invert().unwrap()) == b.eps);
        bad += usize::from(!ok);
    }
    out.push(report(
        "ring_axioms",
        "Dirichlet convolution mod n is associative, commutative, distributive with unit epsilon",
        bad,
    ));

    let mut bad = usize::from(!b.eps.is_special());
    for _ in 0..samples {
        let (f, h) = (b.special(&mut rng, false), b.special(&mut rng, true));
        let ok = f.add(&h).unwrap().is_special()
            && b.conv(&f, &h).is_special()
            && h.invert().map(|x| x.is_special()).unwrap_or(false);
        bad += usize::from(!ok);
    }
    out.push(report(
        "special_subring",
        "special functions form a subring and special units have special inverses",
        bad,
    ));

    // f*E special: f = s*mu with s special
    let (mut bad_a, mut bad_b, mut bad_c) = (0, 0, 0);
    for _ in 0..samples {
        let f = b.conv(&b.special(&mut rng, false), &b.mu);
        let h = b.conv(&b.special(&mut rng, false), &b.e);
        bad_a += usize::from(!b.conv(&h, &f).is_special());

        let fu = b.conv(&b.special(&mut rng, true), &b.mu);
        let fi = fu.invert().expect("unit");
        let r = b.special(&mut rng, false);
        let mu_side = b.conv(&r, &b.e);
        let f_side = b.conv(&r, &fi);
        let random = b.random(&mut rng);
        let ok_b = b.conv(&mu_side, &fu).is_special()
            && b.conv(&f_side, &b.mu).is_special()
            && b.conv(&random, &b.mu).is_special() == b.conv(&random, &fu).is_special();
        bad_b += usize::from(!ok_b);

        let e_side = b.conv(&r, &b.mu);
        let inv_side = b.conv(&r, &fu);
        let ok_c = b.conv(&e_side, &fi).is_special()
            && b.conv(&inv_side, &b.e).is_special()
            && b.conv(&random, &b.e).is_special() == b.conv(&random, &fi).is_special();
        bad_c += usize::from(!ok_c);
    }
    out.push(report(
        "special_implication",
        "if f*E is special then h*mu special implies h*f special",
        bad_a,
    ));
    out.push(report(
        "special_equivalence_mu",
        "for a unit f with f*E special, h*mu is special iff h*f is special",
        bad_b,
    ));
    out.push(report(
        "special_equivalence_e",
        "for a unit f with f*E special, h*E is special iff h*f^{-1} is special",
        bad_c,
    ));

    let mut bad = 0;
    for _ in 0..samples {
        let candidates = [b.random(&mut rng), b.conv(&b.special(&mut rng, false), &b.mu)];
        for h in &candidates {
            let summatory = b.conv(h, &b.e).is_special();
            bad += kernels
                .iter()
                .filter(|k| b.conv(h, k).is_special() != summatory)
                .count();
        }
    }
    out.push(report(
        "binomial_equivalence",
        "h*E is special iff h*b_m is special, for m = 1..5",
        bad,
    ));

    let divs = divisors(n);
    let mut bad = 0;
    let mut mixed = 0;
    for _ in 0..samples {
        let (h, choices) = per_divisor_witness(&b, &kernels, &mut rng);
        if choices.iter().any(|&m| m != choices[0]) {
            mixed += 1;
        }
        bad += usize::from(!b.conv(&h, &b.e).is_special());
        let random = b.random(&mut rng);
        let some_m = divs
            .iter()
            .all(|&t| kernels.iter().any(|k| divisible_at(&random, k, t)));
        let summatory = b.conv(&random, &b.e).is_special();
        bad += usize::from(some_m && !summatory);
        bad += usize::from(summatory && !some_m);
    }
    let mut r = report(
        "per_divisor_binomial_criterion",
        "if each divisor t admits some m with sum_{d | t} h(d) b_m(t/d) = 0 mod t then h*E is special",
        bad,
    );
    r.params["mixed_choices"] = json!(mixed);
    out.push(r);

    let mut bad = 0;
    for &d in &divs {
        for m in 1..=MAX_M {
            let lhs = binomial_kernel(m, d) * BigUint::from(m);
            let rhs = num_integer::binomial(BigUint::from(d * m), BigUint::from(d));
            bad += usize::from(lhs != rhs);
        }
    }
    out.push(report("binomial_kernel_scaling", "C(dm-1, d-1) m equals C(dm, d)", bad));

    let phi_inv = b.phi.invert().expect("phi(1) = 1");
    let closed = divs
        .iter()
        .filter(|&&a| {
            let p = prime_factors(a)
                .into_iter()
                .fold(1i128, |acc, p| acc * (1 - p as i128));
            phi_inv.at(a) as i128 != p.rem_euclid(n as i128)
        })
        .count();
    out.push(report(
        "phi_inverse_product",
        "phi^{-1}(a) is the product of (1 - p) over primes p dividing a",
        closed,
    ));

    let mut members: Vec<Af> = (1..=3)
        .map(|k| Af::standard(StandardArith::Sigma(k), n).unwrap())
        .collect();
    members.extend(
        (0..n)
            .filter(|&u| u.gcd(&n) == 1)
            .map(|u| Af::standard(StandardArith::Power(u), n).unwrap()),
    );
    members.push(phi_inv);
    let outside = members.iter().filter(|f| !f.in_frobenius_coset()).count();
    let mut r = report(
        "frobenius_coset_members",
        "sigma_k for k <= 3, a -> u^a for units u, and phi^{-1} lie in the coset E*R_n^*",
        outside,
    );
    r.params["members"] = json!(members.len());
    out.push(r);

    let mut bad = usize::from(n > 1 && b.eps.in_frobenius_coset());
    for _ in 0..samples {
        let candidates = [b.random(&mut rng), b.conv(&b.special(&mut rng, false), &b.mu)];
        for h in &candidates {
            let summatory = b.conv(h, &b.e).is_special();
            bad += members
                .iter()
                .filter(|m| b.conv(h, m).is_special() != summatory)
                .count();
        }
    }
    out.push(report(
        "frobenius_coset_equivalence",
        "for b in the coset, h*E is special iff h*b is special",
        bad,
    ));
    out
}

/// Frobenius' count of elements whose order divides `t`, its binomial
/// criterion, and the ring properties at `n = |G|`.
pub fn arith_suite(g: &GroupTable, samples: usize, seed: u64) -> Vec<CongruenceReport> {
    let n = g.order() as u64;
    let divs = divisors(n);
    let mut out = Vec::new();
    for &t in &divs {
        let s: usize = divisors(t).into_iter().map(|d| chi(g, d as usize)).sum();
        out.push(CongruenceReport::congruence(
            g.label(),
            "frobenius_order_divides",
            "the number of g with g^t = 1 is divisible by t",
            json!({ "t": t }),
            s,
            t,
        ));
    }

    let h = Af::from_fn(n, |d| chi(g, d as usize) as i128).expect("positive order");
    let criterion_fails = divs
        .iter()
        .filter(|&&t| {
            let b = Af::standard(StandardArith::Binomial(n / t), n).unwrap();
            !divisible_at(&h, &b, t)
        })
        .count();
    let summatory = h.convolve(&Af::standard(StandardArith::One, n).unwrap()).unwrap();
    out.push(CongruenceReport::mismatches(
        g.label(),
        "binomial_criterion_chi",
        "chi satisfies the binomial criterion with m = |G|/t at every t, hence chi*E is special",
        json!({ "n": n }),
        criterion_fails + usize::from(!summatory.is_special()),
    ));
    out.extend(ring_property_reports(n, samples, seed, g.label()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_from_spec;

    #[test]
    fn ring_reports_pass() {
        for n in [1, 2, 6, 12, 30] {
            for r in ring_property_reports(n, 30, 0xA11CE, "t") {
                assert!(r.pass, "{r}");
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(ring_property_reports(12, 10, 7, "x"), ring_property_reports(12, 10, 7, "x"));
    }

    #[test]
    fn witness_construction() {
        let b = Basics::new(24);
        let kernels: Vec<Af> = (1..=MAX_M).map(|m| b.binomial(m)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (h, choices) = per_divisor_witness(&b, &kernels, &mut rng);
        for (t, m) in divisors(24).into_iter().zip(choices) {
            assert!(divisible_at(&h, &kernels[(m - 1) as usize], t));
        }
    }

    #[test]
    fn group_suite() {
        let g = group_from_spec("S3", 384).unwrap();
        let reports = arith_suite(&g, 10, 1);
        assert!(reports.iter().all(|r| r.pass));
        assert_eq!(reports[1].lhs, num_bigint::BigInt::from(4));
    }
}
