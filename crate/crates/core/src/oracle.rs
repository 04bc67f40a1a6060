//! Ground-truth Möbius values of `(Z, <=_S)`, where `x <=_S y` iff
//! `y - x` lies in `S`.
//!
//! Two independent routes are provided:
//!
//! * [`mobius_by_chains`] sums `(-1)^l c_l(0, x)` over chain counts, with the
//!   counts built from `c_l(0, y) = sum_{c in [0, y[} c_{l-1}(0, c)`;
//! * [`MobiusMemo`] evaluates `mu(x) = -sum_{y in S \ {0}} mu(x - y)`
//!   bottom-up with a dense table.
//!
//! Because `mu_S(x, y) = mu_S(0, y - x)`, everything is expressed through the
//! one-variable function `mu_S(x) = mu_S(0, x)`.

use crate::error::{MobiusError, Result};
use crate::num::{self, Mu};
use crate::semigroup::{MembershipTable, NumericalSemigroup};

/// Largest index a dense table in this crate will grow to.
pub const MAX_TABLE_INDEX: i64 = 1 << 25;

pub(crate) fn check_table_index(x: i64) -> Result<()> {
    if x > MAX_TABLE_INDEX {
        Err(MobiusError::GridTooLarge(format!(
            "x = {x} exceeds the dense-table limit {MAX_TABLE_INDEX}"
        )))
    } else {
        Ok(())
    }
}

/// Number of chains of a given length in a segment `[0, x]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainCount(pub u64);

/// All chain counts `c_l(0, y)` for `0 <= y <= x` and every `l`.
#[derive(Clone, Debug)]
pub struct ChainTable {
    bound: i64,
    // rows[l][y] = c_l(0, y); the last row is identically zero
    rows: Vec<Vec<u64>>,
}

impl ChainTable {
    pub fn new(semigroup: &NumericalSemigroup, bound: i64) -> Result<Self> {
        check_table_index(bound)?;
        let bound = bound.max(0);
        let n = bound as usize + 1;
        let mut table = MembershipTable::new(semigroup.clone());
        table.extend_to(bound);
        let member: Vec<bool> = (0..n as i64).map(|y| table.contains(y)).collect();

        let mut first = vec![0u64; n];
        first[0] = 1;
        let mut rows = vec![first];
        loop {
            let prev = rows.last().unwrap();
            let mut next = vec![0u64; n];
            for y in 1..n {
                let mut acc = 0u64;
                for c in 0..y {
                    if prev[c] != 0 && member[y - c] {
                        acc = acc.checked_add(prev[c]).ok_or(MobiusError::Overflow)?;
                    }
                }
                next[y] = acc;
            }
            let done = next.iter().all(|&v| v == 0);
            rows.push(next);
            if done {
                break;
            }
        }
        Ok(Self { bound, rows })
    }

    /// `c_l(0, y)`; zero outside the table's range.
    pub fn count(&self, y: i64, l: usize) -> ChainCount {
        if y < 0 || y > self.bound || l >= self.rows.len() {
            return ChainCount(0);
        }
        ChainCount(self.rows[l][y as usize])
    }

    /// `sum_l (-1)^l c_l(0, y)`.
    pub fn mobius(&self, y: i64) -> Result<Mu> {
        if y < 0 || y > self.bound {
            return Ok(0);
        }
        let mut acc: Mu = 0;
        for (l, row) in self.rows.iter().enumerate() {
            let c = Mu::from(row[y as usize]);
            acc = if l % 2 == 0 {
                num::add(acc, c)?
            } else {
                num::sub(acc, c)?
            };
        }
        Ok(acc)
    }
}

/// Number of chains `0 = a_0 <_S a_1 <_S ... <_S a_l = x`.
pub fn count_chains(semigroup: &NumericalSemigroup, x: i64, l: usize) -> Result<ChainCount> {
    if x < 0 {
        return Ok(ChainCount(0));
    }
    // consecutive chain elements differ by at least 1
    if l as i64 > x {
        return Ok(ChainCount(0));
    }
    Ok(ChainTable::new(semigroup, x)?.count(x, l))
}

/// Möbius value as the alternating sum of chain counts.
pub fn mobius_by_chains(semigroup: &NumericalSemigroup, x: i64) -> Result<Mu> {
    if x < 0 {
        return Ok(0);
    }
    ChainTable::new(semigroup, x)?.mobius(x)
}

/// Dense memo of `mu_S` over `0..=high`, filled bottom-up.
///
/// A memo is single-writer; give each thread its own instance.
#[derive(Clone, Debug)]
pub struct MobiusMemo {
    semigroup: NumericalSemigroup,
    membership: MembershipTable,
    // nonzero elements of S seen so far, ascending
    elements: Vec<usize>,
    mu: Vec<Mu>,
}

impl MobiusMemo {
    pub fn new(semigroup: NumericalSemigroup) -> Self {
        Self {
            membership: MembershipTable::new(semigroup.clone()),
            semigroup,
            elements: Vec::new(),
            mu: Vec::new(),
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// Number of filled entries; `mu(0..high_water)` is cached.
    pub fn high_water(&self) -> usize {
        self.mu.len()
    }

    fn fill_to(&mut self, x: i64) -> Result<()> {
        check_table_index(x)?;
        let target = x as usize;
        while self.mu.len() <= target {
            let n = self.mu.len();
            if n == 0 {
                self.mu.push(1);
                continue;
            }
            if self.membership.contains(n as i64) {
                self.elements.push(n);
            }
            let mut acc: Mu = 0;
            for &y in &self.elements {
                acc = num::add(acc, self.mu[n - y])?;
            }
            self.mu.push(num::neg(acc)?);
        }
        Ok(())
    }

    /// `mu_S(x)`; zero for negative `x`.
    pub fn mobius(&mut self, x: i64) -> Result<Mu> {
        if x < 0 {
            return Ok(0);
        }
        self.fill_to(x)?;
        Ok(self.mu[x as usize])
    }

    /// `mu_S(x, y) = mu_S(y - x)`.
    pub fn mobius_bivariate(&mut self, x: i64, y: i64) -> Result<Mu> {
        self.mobius(num::sub(y, x)?)
    }

    /// `sum_{y in S, 0 <= y <= x} mu_S(x - y)`, which vanishes for `x >= 1`.
    pub fn convolution_residual(&mut self, x: i64) -> Result<Mu> {
        if x < 1 {
            return Err(MobiusError::InvalidParameter(format!(
                "convolution residual needs x >= 1, got {x}"
            )));
        }
        self.fill_to(x)?;
        let mut acc: Mu = 0;
        for y in 0..=x {
            if self.membership.contains(y) {
                acc = num::add(acc, self.mu[(x - y) as usize])?;
            }
        }
        Ok(acc)
    }

    /// Values `mu_S(from..=to)`.
    pub fn range(&mut self, from: i64, to: i64) -> Result<Vec<Mu>> {
        (from..=to).map(|x| self.mobius(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn chain_counts_two_generators() {
        let s = sg(&[2, 3]);
        assert_eq!(count_chains(&s, 5, 1).unwrap(), ChainCount(1));
        assert_eq!(count_chains(&s, 5, 2).unwrap(), ChainCount(2));
        assert_eq!(count_chains(&s, 5, 3).unwrap(), ChainCount(0));
    }

    #[test]
    fn chain_counts_at_zero() {
        for g in [&[2, 3][..], &[3, 4, 5], &[22, 27, 32]] {
            let s = sg(g);
            assert_eq!(count_chains(&s, 0, 0).unwrap(), ChainCount(1));
            for l in 1..4 {
                assert_eq!(count_chains(&s, 0, l).unwrap(), ChainCount(0));
            }
            assert_eq!(count_chains(&s, -4, 0).unwrap(), ChainCount(0));
        }
    }

    #[test]
    fn chain_counts_even_case() {
        let s = sg(&[22, 27, 32]);
        let t = ChainTable::new(&s, 81).unwrap();
        assert_eq!(
            (t.count(81, 1), t.count(81, 2), t.count(81, 3)),
            (ChainCount(1), ChainCount(6), ChainCount(7))
        );
        assert_eq!(
            (t.count(54, 1), t.count(54, 2)),
            (ChainCount(1), ChainCount(3))
        );
    }

    #[test]
    fn chain_mobius_examples() {
        let s = sg(&[22, 27, 32]);
        assert_eq!(mobius_by_chains(&s, 0).unwrap(), 1);
        assert_eq!(mobius_by_chains(&s, 54).unwrap(), 2);
        // 81 = 22 + 27 + 32: -c_3 + c_2 - c_1 = -7 + 6 - 1
        assert_eq!(mobius_by_chains(&s, 81).unwrap(), -2);
        assert_eq!(mobius_by_chains(&s, -7).unwrap(), 0);
    }

    #[test]
    fn recursive_examples() {
        let mut memo = MobiusMemo::new(sg(&[3, 4, 5]));
        assert_eq!(memo.mobius(3).unwrap(), -1);
        assert_eq!(
            memo.range(0, 8).unwrap(),
            vec![1, 0, 0, -1, -1, -1, 0, 1, 2]
        );
        assert_eq!(memo.mobius(-1).unwrap(), 0);
        let mut memo = MobiusMemo::new(sg(&[2, 3]));
        assert_eq!(memo.mobius(5).unwrap(), 1);
        assert_eq!(memo.high_water(), 6);
    }

    #[test]
    fn bivariate_examples() {
        let mut memo = MobiusMemo::new(sg(&[2, 3]));
        assert_eq!(memo.mobius_bivariate(4, 4).unwrap(), 1);
        assert_eq!(memo.mobius_bivariate(7, 12).unwrap(), 1);
        assert_eq!(memo.mobius_bivariate(10, 3).unwrap(), 0);
    }

    #[test]
    fn residual_examples() {
        assert_eq!(MobiusMemo::new(sg(&[2, 3])).convolution_residual(6), Ok(0));
        assert_eq!(
            MobiusMemo::new(sg(&[3, 4, 5])).convolution_residual(12),
            Ok(0)
        );
        assert_eq!(
            MobiusMemo::new(sg(&[22, 27, 32])).convolution_residual(100),
            Ok(0)
        );
        assert!(MobiusMemo::new(sg(&[2, 3]))
            .convolution_residual(0)
            .is_err());
    }

    #[test]
    fn table_limit() {
        let mut memo = MobiusMemo::new(sg(&[2, 3]));
        assert!(matches!(
            memo.mobius(MAX_TABLE_INDEX + 1),
            Err(MobiusError::GridTooLarge(_))
        ));
    }

    #[test]
    fn exponential_growth_is_reported_not_wrapped() {
        let mut memo = MobiusMemo::new(sg(&[3, 4, 5]));
        assert_eq!(memo.mobius(100), Ok(-114836));
        assert!(memo.mobius(627).is_ok());
        assert_eq!(memo.mobius(628), Err(MobiusError::Overflow));
    }
}
