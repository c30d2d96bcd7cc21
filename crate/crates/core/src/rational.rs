//! Exact rational numbers and their wire format.
//!
//! All fractional quantities in this crate (`t_i(k)`, degrees `d(k)`,
//! Lyapunov exponents, cusp orders) are [`Rational`]s: always reduced,
//! positive denominator, arbitrary precision. The wire format is `p/q`
//! with integers rendered bare (`"4/15"`, `"1"`, `"0"`), which is exactly
//! what `num`'s `Display`/`FromStr` produce, so values round-trip
//! bit-exactly through text.

use num::bigint::BigInt;
use num::rational::BigRational;

/// Exact reduced fraction with a positive denominator.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An integer as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` from unsigned parts, the common case for residues mod `N`.
pub fn rat_u(n: u64, d: u64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
