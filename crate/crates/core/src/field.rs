//! Exact scalar fields.
//!
//! Everything in this crate is generic over [`Field`]. Two families are
//! provided: arbitrary-precision rationals ([`Rational`]) and prime fields
//! [`Fp<P>`] with the modulus fixed at compile time.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational numbers, the default scalar field.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("malformed scalar {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// An exact field usable as the scalar type of graded linear algebra.
pub trait Field:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic() -> u64;

    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Parses `"a"` or `"a/b"` with integer `a`, `b`.
    fn parse_scalar(s: &str) -> Result<Self, ScalarError>;

    /// Canonical text form: lowest terms with the sign on the numerator for
    /// rationals, the least non-negative residue for prime fields.
    fn canonical(&self) -> String;

    /// Human-readable field name, `"Q"` or `"Fp:<p>"`.
    fn descriptor() -> String {
        match Self::characteristic() {
            0 => "Q".to_string(),
            p => format!("Fp:{p}"),
        }
    }

    fn pow_i64(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc *= sq.clone();
            }
            sq = sq.clone() * sq;
            e >>= 1;
        }
        Some(acc)
    }
}

fn split_fraction(s: &str) -> Result<(BigInt, BigInt), ScalarError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let parse = |x: &str| {
        if x.is_empty() || x.starts_with('+') && x.len() == 1 {
            return Err(ScalarError::Malformed(s.to_string()));
        }
        BigInt::from_str(x).map_err(|_| ScalarError::Malformed(s.to_string()))
    };
    let n = parse(num)?;
    let d = parse(den)?;
    if d.is_zero() {
        return Err(ScalarError::ZeroDenominator(s.to_string()));
    }
    Ok((n, d))
}

impl Field for Rational {
    fn characteristic() -> u64 {
        0
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_scalar(s: &str) -> Result<Self, ScalarError> {
        let (n, d) = split_fraction(s)?;
        Ok(Rational::new(n, d))
    }

    fn canonical(&self) -> String {
        // `Ratio::new` keeps the denominator positive and reduced.
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

/// The prime field `Z/PZ`. `P` must be prime; [`Fp::new`] reduces any
/// integer into range.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(value: i64) -> Self {
        Self(value.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn from_bigint(n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(P));
        Self(r.to_u64().expect("residue fits in u64"))
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Self((P - self.0) % P)
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Self(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn from_int(n: i64) -> Self {
        Self::new(n)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(P-2)
        let mut e = P - 2;
        let mut acc = Self::one();
        let mut sq = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq;
            }
            sq = sq * sq;
            e >>= 1;
        }
        Some(acc)
    }

    fn parse_scalar(s: &str) -> Result<Self, ScalarError> {
        let (n, d) = split_fraction(s)?;
        let d = Self::from_bigint(&d);
        let inv = d
            .inverse()
            .ok_or_else(|| ScalarError::ZeroDenominator(s.to_string()))?;
        Ok(Self::from_bigint(&n) * inv)
    }

    fn canonical(&self) -> String {
        self.0.to_string()
    }
}

/// `n` as an element of `F`, for small signed integers given as `BigInt`.
pub fn from_bigint<F: Field>(n: &BigInt) -> F {
    let mut out = F::zero();
    let mut place = F::one();
    let base = F::from_int(1 << 30);
    let mut m = n.abs();
    let chunk = BigInt::from(1u64 << 30);
    while !m.is_zero() {
        let (q, r) = m.div_rem(&chunk);
        out += place.clone() * F::from_int(r.to_i64().unwrap());
        place *= base.clone();
        m = q;
    }
    if n.is_negative() {
        -out
    } else {
        out
    }
}
