//! Small checked-integer helpers shared by every module.
//!
//! Coordinates and parameters are `i64`; Möbius values are [`Mu`] (`i128`),
//! since `mu_S` grows exponentially on many semigroups. Anything that could
//! wrap goes through these helpers and surfaces as [`MobiusError::Overflow`].

use crate::error::{MobiusError, Result};

/// Type of a Möbius value.
pub type Mu = i128;

pub(crate) trait Checked: Copy {
    fn c_add(self, b: Self) -> Option<Self>;
    fn c_sub(self, b: Self) -> Option<Self>;
    fn c_mul(self, b: Self) -> Option<Self>;
    fn c_neg(self) -> Option<Self>;
}

macro_rules! checked_impl {
    ($($t:ty),*) => {$(
        impl Checked for $t {
            fn c_add(self, b: Self) -> Option<Self> { self.checked_add(b) }
            fn c_sub(self, b: Self) -> Option<Self> { self.checked_sub(b) }
            fn c_mul(self, b: Self) -> Option<Self> { self.checked_mul(b) }
            fn c_neg(self) -> Option<Self> { self.checked_neg() }
        }
    )*};
}

checked_impl!(i64, i128);

#[inline]
pub(crate) fn add<T: Checked>(a: T, b: T) -> Result<T> {
    a.c_add(b).ok_or(MobiusError::Overflow)
}

#[inline]
pub(crate) fn sub<T: Checked>(a: T, b: T) -> Result<T> {
    a.c_sub(b).ok_or(MobiusError::Overflow)
}

#[inline]
pub(crate) fn mul<T: Checked>(a: T, b: T) -> Result<T> {
    a.c_mul(b).ok_or(MobiusError::Overflow)
}

#[inline]
pub(crate) fn neg<T: Checked>(a: T) -> Result<T> {
    a.c_neg().ok_or(MobiusError::Overflow)
}

/// Non-negative gcd; `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

/// Inverse of `x` modulo `m` (m >= 1), in `0..m`. `None` when gcd(x, m) != 1.
pub fn mod_inverse(x: i64, m: i64) -> Option<i64> {
    debug_assert!(m >= 1);
    if m == 1 {
        return Some(0);
    }
    // extended Euclid on i128 so that intermediate coefficients cannot wrap
    let (mut old_r, mut r) = (x.rem_euclid(m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as i64)
}

/// `(x * y) mod m` in `0..m` without intermediate overflow.
#[inline]
pub(crate) fn mul_mod(x: i64, y: i64, m: i64) -> i64 {
    ((x as i128 * y as i128).rem_euclid(m as i128)) as i64
}

/// Ceiling division for `b > 0`.
#[inline]
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}
