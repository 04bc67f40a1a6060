use crate::error::{MobiusError, Result};
use crate::num::{self, gcd, Mu};

/// Möbius function of `<a, b>` in constant time.
///
/// For `x >= 0` the value is 1 when `x ≡ 0` or `a + b (mod ab)`, -1 when
/// `x ≡ a` or `b (mod ab)`, and 0 otherwise.
pub fn mobius_deddens(a: i64, b: i64, x: i64) -> Result<Mu> {
    if a < 2 || b <= a {
        return Err(MobiusError::InvalidParameter(format!(
            "expected 2 <= a < b, got a = {a}, b = {b}"
        )));
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(MobiusError::GcdNotOne(g));
    }
    if x < 0 {
        return Ok(0);
    }
    let period = num::mul(a, b)?;
    let sum = num::add(a, b)? % period;
    let res = x % period;
    Ok(if res == 0 || res == sum {
        1
    } else if res == a || res == b {
        -1
    } else {
        0
    })
}
