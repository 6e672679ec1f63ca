#![allow(dead_code)]

use jortho::exactnum::{rat, Rational};
use jortho::space::ScalarProduct;
use proptest::prelude::*;

pub const SIGNATURES: [(usize, usize); 7] = [(0, 2), (1, 1), (0, 3), (1, 2), (0, 4), (1, 3), (2, 2)];
pub const INDEFINITE: [(usize, usize); 4] = [(1, 1), (1, 2), (1, 3), (2, 2)];

pub fn signature() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(SIGNATURES.to_vec())
}

pub fn indefinite() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(INDEFINITE.to_vec())
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=5, any::<bool>()).prop_map(|(p, q, s)| rat(if s { p } else { -p }, q))
}

pub fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

pub fn metric((p, q): (usize, usize)) -> ScalarProduct {
    ScalarProduct::canonical(p, q)
}
