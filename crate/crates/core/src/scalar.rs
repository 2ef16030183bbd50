//! Coefficient domains.
//!
//! The polynomial layers are generic over [`Coeff`]. Two families are
//! provided: exact rationals (any `num_rational::Ratio<T>`, in practice
//! [`BigRational`](num_rational::BigRational)) used by the oracles, and the
//! prime field [`Zp`] used by the production pipelines.
//!
//! A prime-field element carries its modulus, so constants are built from a
//! [`Coeff::Ctx`] value rather than from a context-free `zero()`/`one()`.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// A field (or, for the integer oracle paths, a ring) of polynomial coefficients.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Whatever is needed to build constants of the domain.
    type Ctx: Clone + Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn from_int(n: i64, ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Parses the form written by [`encode`](Coeff::encode).
    fn parse(s: &str, ctx: &Self::Ctx) -> Option<Self>;

    /// Serialized form: a decimal residue for prime fields, `num/den` for rationals.
    fn encode(&self) -> String {
        self.to_string()
    }

    fn zero_in(ctx: &Self::Ctx) -> Self {
        Self::from_int(0, ctx)
    }

    fn one_in(ctx: &Self::Ctx) -> Self {
        Self::from_int(1, ctx)
    }
}

impl<T> Coeff for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + FromStr + Display + Debug + Send + Sync,
{
    type Ctx = ();

    fn ctx(&self) {}

    fn from_int(n: i64, _: &()) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer fits the rational base type"))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn encode(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse(s: &str, _: &()) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let d: T = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(Ratio::new(n.trim().parse().ok()?, d))
            }
            None => Some(Ratio::from_integer(s.parse().ok()?)),
        }
    }
}

/// Modulus of a prime field, `2 < p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Modulus(u32);

impl Modulus {
    /// Wraps `p` without a primality check; use
    /// [`validate_prime`](crate::modmat::validate_prime) at configuration time.
    pub fn new(p: u64) -> Option<Self> {
        if p > 2 && p <= u32::MAX as u64 && p % 2 == 1 {
            Some(Modulus(p as u32))
        } else {
            None
        }
    }

    pub fn get(self) -> u64 {
        self.0 as u64
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce_i64(self, n: i64) -> u32 {
        n.rem_euclid(self.0 as i64) as u32
    }

    pub fn reduce_bigint(self, n: &BigInt) -> u32 {
        let p = BigInt::from(self.0);
        n.mod_floor(&p).to_u32().expect("residue below modulus")
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse via Fermat; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.pow(a, self.0 as u64 - 2)
    }
}

/// An element of the prime field F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zp {
    value: u32,
    modulus: Modulus,
}

impl Zp {
    pub fn new(n: i64, modulus: Modulus) -> Self {
        Zp { value: modulus.reduce_i64(n), modulus }
    }

    pub fn from_residue(value: u32, modulus: Modulus) -> Self {
        debug_assert!((value as u64) < modulus.get());
        Zp { value, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

impl Debug for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.0)
    }
}

impl Display for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Zp {
    type Output = Zp;
    fn add(self, rhs: Zp) -> Zp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Zp { value: self.modulus.add(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Sub for Zp {
    type Output = Zp;
    fn sub(self, rhs: Zp) -> Zp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Zp { value: self.modulus.sub(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Mul for Zp {
    type Output = Zp;
    fn mul(self, rhs: Zp) -> Zp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Zp { value: self.modulus.mul(self.value, rhs.value), modulus: self.modulus }
    }
}

impl Neg for Zp {
    type Output = Zp;
    fn neg(self) -> Zp {
        Zp { value: self.modulus.sub(0, self.value), modulus: self.modulus }
    }
}

impl Coeff for Zp {
    type Ctx = Modulus;

    fn ctx(&self) -> Modulus {
        self.modulus
    }

    fn from_int(n: i64, ctx: &Modulus) -> Self {
        Zp::new(n, *ctx)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inv(&self) -> Option<Self> {
        (self.value != 0).then(|| Zp { value: self.modulus.inv(self.value), modulus: self.modulus })
    }

    fn parse(s: &str, ctx: &Modulus) -> Option<Self> {
        let n: BigInt = s.trim().parse().ok()?;
        Some(Zp { value: ctx.reduce_bigint(&n), modulus: *ctx })
    }
}
