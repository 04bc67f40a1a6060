//! Three-branch recursion for `S = <a, a+d, ..., a+kd>`, `k >= 2`.
//!
//! With `T = a + kd`, `g_i = a + id` and `a = qk + r`, for every `x` outside
//! `E = {0, a, T, a + T}`:
//!
//! ```text
//! r = 0:  mu(x) = mu(x - qT) + sum_{i=1}^{k-1} [ mu(x - g_i - qT) - mu(x - g_i) ]
//! r = 1:  mu(x) = mu(x - (q+1)T) + sum_{i=1}^{k-1} mu(x - g_i - qT)
//!                 - sum_{i=1}^{k-1} mu(x - g_i)
//! r >= 2: mu(x) = mu(x - (q+1)T) + sum_{i=1}^{r-1} mu(x - g_i - (q+1)T)
//!                 + sum_{i=r}^{k-1} mu(x - g_i - qT) - sum_{i=1}^{k-1} mu(x - g_i)
//! ```
//!
//! Every shift is positive, so the recursion only looks backwards. The four
//! points of `E` come from the generic recursion.

use crate::error::{MobiusError, Result};
use crate::num::{self, Mu};
use crate::oracle::{check_table_index, MobiusMemo};
use crate::semigroup::ArithmeticParams;

/// Which of the three recursion shapes applies, selected by `r = a mod k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Remainder {
    Zero,
    One,
    AtLeastTwo,
}

/// Memoised evaluator of the arithmetic-semigroup recursion.
#[derive(Clone, Debug)]
pub struct ArithmeticMobius {
    params: ArithmeticParams,
    branch: Remainder,
    // (x, mu(x)) for x in {0, a, T, a + T}
    base: [(i64, Mu); 4],
    added: Vec<i64>,
    subtracted: Vec<i64>,
    mu: Vec<Mu>,
}

impl ArithmeticMobius {
    pub fn new(params: ArithmeticParams) -> Result<Self> {
        let (a, k, q, r) = (params.a(), params.k(), params.q(), params.r());
        if k < 2 {
            return Err(MobiusError::KOutOfRange { a, k });
        }
        let top = params.generator(k);
        let q_top = num::mul(q, top)?;
        let q1_top = num::mul(q + 1, top)?;
        let middle = 1..k;

        let branch = match r {
            0 => Remainder::Zero,
            1 => Remainder::One,
            _ => Remainder::AtLeastTwo,
        };
        let mut added = Vec::with_capacity(k as usize);
        match branch {
            Remainder::Zero => {
                added.push(q_top);
                for i in middle.clone() {
                    added.push(num::add(params.generator(i), q_top)?);
                }
            }
            Remainder::One | Remainder::AtLeastTwo => {
                added.push(q1_top);
                for i in 1..r {
                    added.push(num::add(params.generator(i), q1_top)?);
                }
                for i in r..k {
                    added.push(num::add(params.generator(i), q_top)?);
                }
            }
        }
        let subtracted: Vec<i64> = middle.map(|i| params.generator(i)).collect();

        let excluded = [0, a, top, num::add(a, top)?];
        let mut oracle = MobiusMemo::new(params.semigroup());
        let mut base = [(0, 0); 4];
        for (slot, &x) in base.iter_mut().zip(&excluded) {
            *slot = (x, oracle.mobius(x)?);
        }

        Ok(Self {
            params,
            branch,
            base,
            added,
            subtracted,
            mu: Vec::new(),
        })
    }

    pub fn params(&self) -> &ArithmeticParams {
        &self.params
    }

    pub fn branch(&self) -> Remainder {
        self.branch
    }

    /// The four points excluded from the recursion with their cached values.
    pub fn base_values(&self) -> &[(i64, Mu); 4] {
        &self.base
    }

    fn lookup(&self, x: i64) -> Mu {
        if x < 0 {
            0
        } else {
            self.mu[x as usize]
        }
    }

    fn fill_to(&mut self, x: i64) -> Result<()> {
        check_table_index(x)?;
        while self.mu.len() as i64 <= x {
            let n = self.mu.len() as i64;
            let value = match self.base.iter().find(|(e, _)| *e == n) {
                Some(&(_, v)) => v,
                None => {
                    let mut acc: Mu = 0;
                    for &s in &self.added {
                        acc = num::add(acc, self.lookup(n - s))?;
                    }
                    for &s in &self.subtracted {
                        acc = num::sub(acc, self.lookup(n - s))?;
                    }
                    acc
                }
            };
            self.mu.push(value);
        }
        Ok(())
    }

    pub fn mobius(&mut self, x: i64) -> Result<Mu> {
        if x < 0 {
            return Ok(0);
        }
        self.fill_to(x)?;
        Ok(self.mu[x as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(a: i64, d: i64, k: i64, x: i64) -> Mu {
        let p = ArithmeticParams::new(a, d, k).unwrap();
        ArithmeticMobius::new(p).unwrap().mobius(x).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(eval(3, 1, 2, 12), -3);
        assert_eq!(eval(3, 1, 2, 7), 1);
        assert_eq!(eval(22, 5, 2, 54), 2);
        assert_eq!(eval(22, 5, 2, -54), 0);
    }

    #[test]
    fn branch_selection() {
        let b = |a, d, k| {
            ArithmeticMobius::new(ArithmeticParams::new(a, d, k).unwrap())
                .unwrap()
                .branch()
        };
        assert_eq!(b(22, 5, 2), Remainder::Zero);
        assert_eq!(b(3, 1, 2), Remainder::One);
        assert_eq!(b(11, 2, 3), Remainder::AtLeastTwo);
    }

    #[test]
    fn rejects_k_one() {
        let p = ArithmeticParams::new(5, 2, 1).unwrap();
        assert!(matches!(
            ArithmeticMobius::new(p),
            Err(MobiusError::KOutOfRange { .. })
        ));
    }

    #[test]
    fn base_values_are_cached_points() {
        let m = ArithmeticMobius::new(ArithmeticParams::new(3, 1, 2).unwrap()).unwrap();
        // S = <3,4,5>, T = 5: mu(0)=1, mu(3)=-1, mu(5)=-1, mu(8)=2
        assert_eq!(m.base_values(), &[(0, 1), (3, -1), (5, -1), (8, 2)]);
    }
}
