#![allow(dead_code)]

use hawaii_core::algebra::ratio;
use hawaii_core::{Poly, Rational};
use proptest::prelude::*;

pub fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

pub fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly> {
    (prop::collection::vec(-bound..=bound, 1..=max_deg), 1..=bound, any::<bool>()).prop_map(|(mut c, lead, neg)| {
        c.push(if neg { -lead } else { lead });
        Poly::from_ints(&c)
    })
}

pub fn nonzero(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly> {
    poly(max_deg, bound).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=4i64).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rational(bound: i64) -> impl Strategy<Value = Rational> {
    rational(bound).prop_filter("nonzero", |r| *r != ratio(0, 1))
}

/// Product of `(z - root)^mult` over small rational roots.
pub fn from_root_data(roots: &[(Rational, u32)]) -> Poly {
    roots.iter().fold(Poly::one(), |acc, (r, m)| &acc * &Poly::linear(r).pow(*m))
}

pub fn quadratic_no_real_roots() -> impl Strategy<Value = Poly> {
    (-3i64..=3, 1i64..=4).prop_map(|(b, extra)| {
        // z^2 + b z + c with b^2 < 4c
        let c = (b * b) / 4 + extra;
        Poly::from_ints(&[c, b, 1])
    })
}
