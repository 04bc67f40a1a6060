//! Closed form for `S = <2q, 2q+d, 2q+2d>` with `gcd(2q, d) = 1`.
//!
//! Elements are written `[x0, x1, x2] = x0*a + x1*(a+d) + x2*(a+2d)` with
//! `a = 2q`, `x1 in {0,1}`, `x2 in 0..q` and `x0` any integer. The value of
//! `mu_S` is expressed through the multiplicity functions of the multisets
//!
//! ```text
//! A_i = { m(q+d) + i        : m >= 0 }
//! B_i = { m(q+d) - n*d + i  : m >= 2, 1 <= n <= floor(m/2) }
//! C_i = A_i + B_i            (multiset union)
//! ```
//!
//! for `i in {-1, 0, 1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{MobiusError, Result};
use crate::num::{self, gcd, Mu};
use crate::semigroup::{ArithmeticParams, Representation};

/// Parameters `(q, d)` of `<2q, 2q+d, 2q+2d>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvenCaseParams {
    q: i64,
    d: i64,
}

impl EvenCaseParams {
    pub fn new(q: i64, d: i64) -> Result<Self> {
        if q < 2 {
            return Err(MobiusError::InvalidParameter(format!(
                "q = {q} must be at least 2"
            )));
        }
        if d < 1 {
            return Err(MobiusError::InvalidParameter(format!(
                "d = {d} must be positive"
            )));
        }
        let a = num::mul(2, q)?;
        let g = gcd(a, d);
        if g != 1 {
            return Err(MobiusError::GcdNotOne(g));
        }
        num::add(a, num::mul(2, d)?)?;
        Ok(Self { q, d })
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `a = 2q`.
    pub fn a(&self) -> i64 {
        2 * self.q
    }

    /// `q + d`, the period of every `A_i`.
    pub fn step(&self) -> i64 {
        self.q + self.d
    }

    pub fn arithmetic(&self) -> ArithmeticParams {
        ArithmeticParams::new(self.a(), self.d, 2).expect("validated even-case params")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
}

/// One of the nine multisets `A_i`, `B_i`, `C_i`, `i in {-1, 0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultisetId {
    family: Family,
    offset: i64,
}

impl MultisetId {
    pub fn new(family: Family, offset: i64) -> Result<Self> {
        if !(-1..=1).contains(&offset) {
            return Err(MobiusError::InvalidParameter(format!(
                "multiset offset {offset} not in {{-1, 0, 1}}"
            )));
        }
        Ok(Self { family, offset })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }
}

impl fmt::Display for MultisetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}", self.family, self.offset)
    }
}

fn mult_a(p: &EvenCaseParams, i: i64, x: i64) -> u64 {
    let y = x - i;
    u64::from(y >= 0 && y % p.step() == 0)
}

fn mult_b(p: &EvenCaseParams, i: i64, x: i64) -> u64 {
    let (step, d) = (p.step() as i128, p.d as i128);
    let (i, x) = (i as i128, x as i128);
    let mut count = 0;
    // the least element contributed by m is m(q+d) - floor(m/2)d + i, which
    // strictly increases with m
    let mut m: i128 = 2;
    while m * step - (m / 2) * d + i <= x {
        let gap = m * step + i - x;
        if gap % d == 0 {
            let n = gap / d;
            if (1..=m / 2).contains(&n) {
                count += 1;
            }
        }
        m += 1;
    }
    count
}

/// Multiplicity of `x` in the multiset `id`.
pub fn multiplicity(p: &EvenCaseParams, id: MultisetId, x: i64) -> u64 {
    let i = id.offset;
    match id.family {
        Family::A => mult_a(p, i, x),
        Family::B => mult_b(p, i, x),
        Family::C => mult_a(p, i, x) + mult_b(p, i, x),
    }
}

fn m(p: &EvenCaseParams, family: Family, offset: i64, x: i64) -> Mu {
    Mu::from(multiplicity(p, MultisetId { family, offset }, x))
}

/// `mu_S(x)` from the multiset closed form.
pub fn mobius_even_closed(p: &EvenCaseParams, x: i64) -> Result<Mu> {
    let rep = p.arithmetic().decompose(x)?;
    let (x0, x2) = (rep.x0, rep.xk);
    let magnitude = if x2 == 0 {
        m(p, Family::A, 0, x0) - m(p, Family::A, 1, x0) + 2 * m(p, Family::B, 0, x0)
            - m(p, Family::B, -1, x0)
            - m(p, Family::B, 1, x0)
    } else {
        let y = x0 - x2;
        2 * m(p, Family::C, 0, y) - m(p, Family::C, -1, y) - m(p, Family::C, 1, y)
    };
    Ok(if rep.xi == 1 { -magnitude } else { magnitude })
}

/// Right-hand side of the three-term recursion on representations:
///
/// ```text
/// mu([x0,x1,0])  = mu([x0-(q+d),x1,0]) + mu([x0-(q+d)-1,x1,q-1]) - mu([x0-2(q+d)-1,x1,q-1])
/// mu([x0,x1,x2]) = mu([x0-(q+d),x1,x2]) + mu([x0-1,x1,x2-1])     - mu([x0-(q+d)-1,x1,x2-1])
/// ```
///
/// valid for `(x0, x2)` outside `{0,1} x {0,1}`. `mu` supplies values of
/// already-known points by integer argument.
pub fn mobius_even_step<F>(p: &EvenCaseParams, rep: &Representation, mut mu: F) -> Result<Mu>
where
    F: FnMut(i64) -> Result<Mu>,
{
    let arith = p.arithmetic();
    arith.validate(rep)?;
    let (x0, x1, x2) = (rep.x0, rep.xi, rep.xk);
    if (0..=1).contains(&x0) && (0..=1).contains(&x2) {
        return Err(MobiusError::OutOfDomain { x0, x2 });
    }
    let s = p.step();
    let mut at = |a0: i64, a2: i64| -> Result<Mu> {
        let x = arith.compose(&Representation::triple(a0, x1, a2))?;
        mu(x)
    };
    let terms = if x2 == 0 {
        [
            at(x0 - s, 0)?,
            at(x0 - s - 1, p.q - 1)?,
            at(x0 - 2 * s - 1, p.q - 1)?,
        ]
    } else {
        [
            at(x0 - s, x2)?,
            at(x0 - 1, x2 - 1)?,
            at(x0 - s - 1, x2 - 1)?,
        ]
    };
    num::sub(num::add(terms[0], terms[1])?, terms[2])
}
