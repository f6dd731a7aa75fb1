//! Exact arithmetic substrate: rationals, Gaussian rationals and
//! univariate polynomials in `t` over them.
//!
//! All lattice and period computations in this crate run over `ℚ(i)`.
//! The scalars here are immutable values; every operation returns a new
//! value and nothing is shared mutably, so they can be moved freely
//! across threads.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

mod parse;
mod poly;

pub use parse::{parse_poly, parse_poly_with_cap, ParseError, ParseErrorKind, DEFAULT_EXPONENT_CAP};
pub use poly::Poly;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator and `0/1` as the unique zero.
///
/// These invariants are maintained by `num_rational::BigRational`
/// itself; the crate relies on them for canonical printing.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` as a [`Rational`].
///
/// Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Element of `ℚ(i)`: real and imaginary rational parts.
///
/// Equality is componentwise field-element equality; conjugation negates
/// the imaginary part. The bilinear lattice pairings in this crate never
/// conjugate implicitly — [`GaussianRational::conj`] is always explicit.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// `n/d` as a Gaussian rational. Panics when `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate: fixes `re`, negates `im`.
    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re² + im²`, the field norm down to `ℚ`. Zero iff `self` is zero.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussianRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        let k = rat_int(k);
        GaussianRational { re: &self.re * &k, im: &self.im * &k }
    }

    pub fn scale_rat(&self, k: &Rational) -> Self {
        GaussianRational { re: &self.re * k, im: &self.im * k }
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical scalar form: `p/q` when real, `{b}i` when purely
    /// imaginary, `(a+bi)` / `(a-bi)` otherwise. Re-parses as a `coeff`
    /// of the polynomial literal grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({}-{}i)", self.re, -self.im.clone())
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}
forward_binop!(Add, add);

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
forward_binop!(Mul, mul);

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero; use [`GaussianRational::inverse`]
    /// for a checked variant.
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inverse().expect("division by zero GaussianRational");
        self * &inv
    }
}
forward_binop!(Div, div);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::from_rational(re)
    }
}

/// Common interface of the two coefficient rings used for lattice
/// vectors: [`GaussianRational`] and [`Poly`]. Lets pairings,
/// reflections and projections run over either.
pub trait RingScalar: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    /// Multiplication by an integer, used to apply integral Gram matrices.
    fn ring_scale_i64(&self, k: i64) -> Self;
    /// Multiplication by a rational, used to solve integral Gram systems.
    fn ring_scale_rat(&self, k: &Rational) -> Self;
}

impl RingScalar for GaussianRational {
    fn ring_zero() -> Self {
        Self::zero()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_scale_i64(&self, k: i64) -> Self {
        self.scale_i64(k)
    }
    fn ring_scale_rat(&self, k: &Rational) -> Self {
        self.scale_rat(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    #[test]
    fn conjugation_is_involutive_ring_morphism() {
        let x = g((3, 2), (-1, 5));
        let y = g((0, 1), (7, 3));
        assert_eq!(x.conj().conj(), x);
        assert_eq!((&x + &y).conj(), x.conj() + y.conj());
        assert_eq!((&x * &y).conj(), x.conj() * y.conj());
    }

    #[test]
    fn inverse_times_self_is_one() {
        let x = g((3, 2), (-1, 5));
        assert_eq!(&x * &x.inverse().unwrap(), GaussianRational::one());
        assert!(GaussianRational::zero().inverse().is_none());
    }

    #[test]
    fn display_canonical_forms() {
        assert_eq!(g((1, 2), (0, 1)).to_string(), "1/2");
        assert_eq!(g((-3, 1), (0, 1)).to_string(), "-3");
        assert_eq!(g((0, 1), (2, 3)).to_string(), "2/3i");
        assert_eq!(g((0, 1), (-1, 1)).to_string(), "-1i");
        assert_eq!(g((3, 1), (2, 1)).to_string(), "(3+2i)");
        assert_eq!(g((1, 2), (-4, 3)).to_string(), "(1/2-4/3i)");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }
}
