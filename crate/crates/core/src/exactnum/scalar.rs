//! Scalar backends.
//!
//! Two implementations of [`Scalar`] exist: [`Rational`] (arbitrary precision,
//! exact) and [`Approx`] (an `f64` carrying an absolute comparison tolerance).
//! Every exact decision in the crate is made over `Rational`; `Approx` only
//! exists for quick exploration from the command line.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::NumError;

/// Exact rational numbers in canonical lowest terms.
pub type Rational = BigRational;

/// Field operations shared by the exact and the tolerance-based backend.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `true` when equality is decidable (no tolerance involved).
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn from_rational(r: &Rational) -> Self;

    /// -1, 0 or 1. For `Approx` values within tolerance of zero this is 0.
    fn sign(&self) -> i8;

    /// Square root when it exists in the backend. For `Rational` this is only
    /// the case for squares of rationals.
    fn sqrt(&self) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// Pivot quality used by elimination: exact backends accept any nonzero
    /// pivot, float backends prefer the largest magnitude.
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rational::new(n, d))
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Shorthand for `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integer as an exact rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Canonical text form: `"p/q"` in lowest terms with `q > 0`, or `"p"` when
/// `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, NumError> {
    let t = s.trim();
    let bad = || NumError::BadRational(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// A float carrying the absolute tolerance used for every comparison.
///
/// Binary operations keep the larger tolerance of the two operands, so a
/// tolerance attached to the inputs propagates to everything derived from
/// them. Constants (`zero`, `one`, `from_i64`) carry tolerance 0.
#[derive(Clone, Copy, Debug)]
pub struct Approx {
    pub value: f64,
    pub tol: f64,
}

impl Approx {
    pub fn new(value: f64, tol: f64) -> Self {
        Approx { value, tol }
    }

    pub fn with_tol(r: &Rational, tol: f64) -> Self {
        Approx::new(Scalar::to_f64(r), tol)
    }
}

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        (self.value - other.value).abs() <= self.tol.max(other.tol)
    }
}

macro_rules! approx_binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for Approx {
            type Output = Approx;
            fn $f(self, rhs: Approx) -> Approx {
                Approx::new(self.value $op rhs.value, self.tol.max(rhs.tol))
            }
        }
    };
}

approx_binop!(Add, add, +);
approx_binop!(Sub, sub, -);
approx_binop!(Mul, mul, *);
approx_binop!(Div, div, /);

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx::new(-self.value, self.tol)
    }
}

impl Zero for Approx {
    fn zero() -> Self {
        Approx::new(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.value.abs() <= self.tol
    }
}

impl One for Approx {
    fn one() -> Self {
        Approx::new(1.0, 0.0)
    }
}

impl Scalar for Approx {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        Approx::new(v as f64, 0.0)
    }

    fn from_rational(r: &Rational) -> Self {
        Approx::new(Scalar::to_f64(r), 0.0)
    }

    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.value < 0.0 {
            -1
        } else {
            1
        }
    }

    fn sqrt(&self) -> Option<Self> {
        if self.value < -self.tol {
            None
        } else {
            Some(Approx::new(self.value.max(0.0).sqrt(), self.tol))
        }
    }

    fn to_f64(&self) -> f64 {
        self.value
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
