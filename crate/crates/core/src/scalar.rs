//! Integer scalars backing every coefficient component.
//!
//! The engine never needs anything beyond exact integer arithmetic with
//! Euclidean division, so the bound is a bundle of `num-traits` /
//! `num-integer` traits. `BigInt` is the default everywhere a concrete type is
//! required; `i64` works for small residue rings and short computations over
//! the integers, but overflows panic in debug builds.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as a coefficient component.
pub trait Int:
    num_integer::Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("every Int type holds an i64")
    }
}

impl<T> Int for T where
    T: num_integer::Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Extended gcd returning `(g, x, y)` with `g >= 0` and `x*a + y*b = g`.
pub fn ext_gcd<I: Int>(a: &I, b: &I) -> (I, I, I) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

/// Multi-argument extended gcd: returns the non-negative gcd and one
/// coefficient per input. An empty slice yields gcd 0.
pub fn ext_gcd_fold<I: Int>(values: &[I]) -> (I, Vec<I>) {
    let mut g = I::zero();
    let mut coeffs: Vec<I> = Vec::with_capacity(values.len());
    for v in values {
        let (ng, x, y) = ext_gcd(&g, v);
        for c in coeffs.iter_mut() {
            *c = c.clone() * x.clone();
        }
        coeffs.push(y);
        g = ng;
    }
    (g, coeffs)
}

/// Lossless conversion to `BigInt`.
pub fn to_big<I: Int>(x: &I) -> BigInt {
    x.to_string().parse().expect("integers print as decimal")
}

/// Conversion from `BigInt`; `None` when `I` cannot hold the value.
pub fn from_big<I: Int>(x: &BigInt) -> Option<I> {
    x.to_string().parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn fold_recombines() {
        let vals: Vec<i64> = vec![6, 10, 15];
        let (g, c) = ext_gcd_fold(&vals);
        assert_eq!(g, 1);
        assert_eq!(vals.iter().zip(&c).map(|(a, b)| a * b).sum::<i64>(), 1);
    }

    #[test]
    fn fold_handles_zero_and_negative() {
        let vals: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(-4)];
        let (g, c) = ext_gcd_fold(&vals);
        assert_eq!(g, BigInt::from(4));
        assert_eq!(&c[1] * BigInt::from(-4), BigInt::from(4));
        let (g, c) = ext_gcd_fold::<i64>(&[]);
        assert_eq!(g, 0);
        assert!(c.is_empty());
    }
}
