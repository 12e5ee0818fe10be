//! Seeded random instances with prescribed real and non-real root counts.

use hawaii_core::algebra::ratio;
use hawaii_core::hawaii::count_nonreal;
use hawaii_core::{Poly, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{usage, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub degree: usize,
    pub real_simple: usize,
    /// Multiplicities (each at least 2) of the repeated real roots.
    pub real_multiple: Vec<u32>,
    pub nonreal_pairs: usize,
    /// Bound on root numerators and on the coefficients of the quadratic factors.
    pub coefficient_bound: i64,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn validate(&self) -> CliResult<()> {
        let total = self.real_simple
            + self.real_multiple.iter().map(|&m| m as usize).sum::<usize>()
            + 2 * self.nonreal_pairs;
        if total != self.degree {
            return usage(format!(
                "real_simple + sum(real_multiple) + 2*nonreal_pairs = {total}, degree is {}",
                self.degree
            ));
        }
        if self.degree == 0 {
            return usage("degree must be at least 1");
        }
        if self.real_multiple.iter().any(|&m| m < 2) {
            return usage("repeated-root multiplicities must be at least 2");
        }
        if self.coefficient_bound < 1 {
            return usage("coefficient_bound must be at least 1");
        }
        let distinct = self.real_simple + self.real_multiple.len();
        if distinct as i64 > 4 * self.coefficient_bound + 1 {
            return usage("coefficient_bound too small for the number of distinct real roots");
        }
        Ok(())
    }
}

/// Real roots `n/d` with `|n| <= bound` and `d` in `{1, 2}`, all distinct.
fn distinct_roots(rng: &mut ChaCha8Rng, count: usize, bound: i64) -> Vec<Rational> {
    let mut pool: Vec<Rational> = (-2 * bound..=2 * bound).map(|n| ratio(n, 2)).collect();
    pool.shuffle(rng);
    pool.truncate(count);
    pool
}

/// `z^2 + b z + c` with `b^2 < 4c` and `|b|, |c| <= bound`.
fn irreducible_quadratic(rng: &mut ChaCha8Rng, bound: i64) -> Poly {
    loop {
        let b = rng.gen_range(-bound..=bound);
        let c = rng.gen_range(1..=bound);
        if b * b < 4 * c {
            return Poly::from_ints(&[c, b, 1]);
        }
    }
}

/// Product of distinct rational linear factors, repeated linear factors and
/// irreducible quadratics, scaled to integer coefficients. Deterministic in
/// the spec.
pub fn generate_instance(spec: &InstanceSpec) -> CliResult<Poly> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let roots = distinct_roots(&mut rng, spec.real_simple + spec.real_multiple.len(), spec.coefficient_bound);
    let (simple, repeated) = roots.split_at(spec.real_simple);
    let mut p = Poly::one();
    for r in simple {
        p = &p * &Poly::linear(r);
    }
    for (r, &m) in repeated.iter().zip(&spec.real_multiple) {
        p = &p * &Poly::linear(r).pow(m);
    }
    for _ in 0..spec.nonreal_pairs {
        p = &p * &irreducible_quadratic(&mut rng, spec.coefficient_bound);
    }
    let p = p.primitive();
    assert_eq!(
        count_nonreal(&p).expect("nonzero"),
        2 * spec.nonreal_pairs,
        "generated instance has the wrong number of non-real zeros: {p}"
    );
    Ok(p)
}

/// A random feasible spec of degree `1..=max_degree`.
pub fn random_spec(rng: &mut impl Rng, max_degree: usize, coefficient_bound: i64) -> InstanceSpec {
    let degree = rng.gen_range(1..=max_degree.max(1));
    let nonreal_pairs = rng.gen_range(0..=degree / 2);
    let mut real = degree - 2 * nonreal_pairs;
    let mut real_multiple = Vec::new();
    while real >= 2 && rng.gen_bool(0.3) {
        let m = rng.gen_range(2..=real.min(4)) as u32;
        real_multiple.push(m);
        real -= m as usize;
    }
    InstanceSpec {
        degree,
        real_simple: real,
        real_multiple,
        nonreal_pairs,
        coefficient_bound,
        seed: rng.gen(),
    }
}

/// A rational `n/d` with `|n| <= bound`, `1 <= d <= 3`.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

/// A polynomial of degree exactly `degree` with coefficients in `[-bound, bound]`.
pub fn random_poly(rng: &mut impl Rng, degree: usize, bound: i64) -> Poly {
    let mut c: Vec<i64> = (0..degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    let lead = rng.gen_range(1..=bound);
    c.push(if rng.gen_bool(0.5) { lead } else { -lead });
    Poly::from_ints(&c)
}

/// Independent stream `index` of the generator seeded with `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use hawaii_core::sturm::real_root_count;

    fn spec(degree: usize, real_simple: usize, real_multiple: Vec<u32>, nonreal_pairs: usize, seed: u64) -> InstanceSpec {
        InstanceSpec { degree, real_simple, real_multiple, nonreal_pairs, coefficient_bound: 5, seed }
    }

    #[test]
    fn quadratic_without_real_roots() {
        let p = generate_instance(&spec(2, 0, vec![], 1, 11)).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(count_nonreal(&p).unwrap(), 2);
    }

    #[test]
    fn hyperbolic_cubic() {
        let p = generate_instance(&spec(3, 3, vec![], 0, 4)).unwrap();
        assert_eq!(count_nonreal(&p).unwrap(), 0);
        assert_eq!(real_root_count(&p).unwrap(), 3);
    }

    #[test]
    fn deterministic() {
        let s = spec(7, 1, vec![2], 2, 99);
        assert_eq!(generate_instance(&s).unwrap(), generate_instance(&s).unwrap());
        let other = InstanceSpec { seed: 100, ..s.clone() };
        assert_ne!(generate_instance(&s).unwrap(), generate_instance(&other).unwrap());
    }

    #[test]
    fn infeasible_specs() {
        assert!(generate_instance(&spec(3, 1, vec![], 0, 0)).is_err());
        assert!(generate_instance(&spec(3, 2, vec![1], 0, 0)).is_err());
        assert!(generate_instance(&InstanceSpec { coefficient_bound: 0, ..spec(1, 1, vec![], 0, 0) }).is_err());
    }

    #[test]
    fn random_specs_are_feasible() {
        let mut rng = stream(5, 0);
        for _ in 0..50 {
            let s = random_spec(&mut rng, 10, 4);
            let p = generate_instance(&s).unwrap();
            assert_eq!(p.degree(), Some(s.degree));
        }
    }
}
