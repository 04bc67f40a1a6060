//! Numerical semigroups, arithmetic semigroups, Apéry sets and the unique
//! normal form of elements of `<a, a+d, ..., a+kd>`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{MobiusError, Result};
use crate::num::{self, ceil_div, gcd, mod_inverse, mul_mod};

/// A numerical semigroup given by a sorted, deduplicated list of generators
/// with gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(MobiusError::EmptyGenerators);
        }
        if let Some(&g) = generators.iter().find(|&&g| g < 1) {
            return Err(MobiusError::NonPositiveGenerator(g));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(MobiusError::GcdNotOne(g));
        }
        Ok(Self { generators: gens })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Smallest generator.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn max_generator(&self) -> i64 {
        *self.generators.last().unwrap()
    }

    /// Upper bound on the Frobenius number, `(m-1)(M-1) - 1`: every integer
    /// above it is in the semigroup.
    pub(crate) fn frobenius_bound(&self) -> i64 {
        let m = self.multiplicity() as i128;
        let big = self.max_generator() as i128;
        ((m - 1) * (big - 1) - 1).clamp(-1, i64::MAX as i128) as i64
    }

    /// Membership by forward dynamic programming over the generators.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x > self.frobenius_bound() {
            return true;
        }
        let mut table = MembershipTable::new(self.clone());
        table.contains(x)
    }

    /// Generators that are not sums of two nonzero elements.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let top = self.max_generator();
        let mut table = MembershipTable::new(self.clone());
        table.extend_to(top);
        self.generators
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|y| table.contains(y) && table.contains(g - y)))
            .collect()
    }

    /// `Ap(S; m) = { x in S : x - m not in S }`, sorted ascending.
    ///
    /// Computed as the least element of the semigroup in each residue class
    /// modulo `m`.
    pub fn apery_set(&self, m: i64) -> Result<Vec<i64>> {
        if m < 1 || !self.contains(m) {
            return Err(MobiusError::NotAMember(m));
        }
        let mut least: Vec<Option<i64>> = vec![None; m as usize];
        let mut found = 0usize;
        let mut table = MembershipTable::new(self.clone());
        let mut x = 0i64;
        while found < m as usize {
            if table.contains(x) {
                let slot = &mut least[x.rem_euclid(m) as usize];
                if slot.is_none() {
                    *slot = Some(x);
                    found += 1;
                }
            }
            x = num::add(x, 1)?;
        }
        let mut out: Vec<i64> = least.into_iter().map(Option::unwrap).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Recognises `<a, a+d, ..., a+kd>` with `gcd(a,d) = 1` and `1 <= k <= a-1`.
    pub fn as_arithmetic(&self) -> Option<ArithmeticParams> {
        let g = &self.generators;
        if g.len() < 2 {
            return None;
        }
        let d = g[1] - g[0];
        if g.windows(2).any(|w| w[1] - w[0] != d) {
            return None;
        }
        ArithmeticParams::new(g[0], d, g.len() as i64 - 1).ok()
    }
}

impl TryFrom<Vec<i64>> for NumericalSemigroup {
    type Error = MobiusError;

    fn try_from(generators: Vec<i64>) -> Result<Self> {
        Self::new(&generators)
    }
}

impl From<NumericalSemigroup> for Vec<i64> {
    fn from(s: NumericalSemigroup) -> Self {
        s.generators
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (n, g) in self.generators.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Growable dense membership table `0..=high` built by forward DP.
#[derive(Clone, Debug)]
pub(crate) struct MembershipTable {
    semigroup: NumericalSemigroup,
    member: Vec<bool>,
}

impl MembershipTable {
    pub(crate) fn new(semigroup: NumericalSemigroup) -> Self {
        Self {
            semigroup,
            member: vec![true],
        }
    }

    pub(crate) fn extend_to(&mut self, x: i64) {
        if x < self.member.len() as i64 {
            return;
        }
        let target = x as usize;
        self.member.reserve(target + 1 - self.member.len());
        for n in self.member.len()..=target {
            let hit = self
                .semigroup
                .generators
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| self.member[n - g as usize]);
            self.member.push(hit);
        }
    }

    pub(crate) fn contains(&mut self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        self.extend_to(x);
        self.member[x as usize]
    }
}

/// Parameters of the arithmetic semigroup `<a, a+d, ..., a+kd>`, with
/// `a = qk + r`, `0 <= r < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ArithmeticParams {
    a: i64,
    d: i64,
    k: i64,
    q: i64,
    r: i64,
    #[serde(skip)]
    d_inv: i64,
}

impl ArithmeticParams {
    pub fn new(a: i64, d: i64, k: i64) -> Result<Self> {
        if a < 2 {
            return Err(MobiusError::InvalidParameter(format!(
                "a = {a} must be at least 2"
            )));
        }
        if d < 1 {
            return Err(MobiusError::InvalidParameter(format!(
                "d = {d} must be positive"
            )));
        }
        let g = gcd(a, d);
        if g != 1 {
            return Err(MobiusError::GcdNotOne(g));
        }
        if k < 1 || k > a - 1 {
            return Err(MobiusError::KOutOfRange { a, k });
        }
        // largest generator must be representable
        num::add(a, num::mul(k, d)?)?;
        let d_inv = mod_inverse(d, a).expect("gcd(a, d) = 1");
        Ok(Self {
            a,
            d,
            k,
            q: a / k,
            r: a % k,
            d_inv,
        })
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn d(&self) -> i64 {
        self.d
    }
    pub fn k(&self) -> i64 {
        self.k
    }
    pub fn q(&self) -> i64 {
        self.q
    }
    pub fn r(&self) -> i64 {
        self.r
    }

    /// The generator `a + i*d`, `0 <= i <= k`.
    pub fn generator(&self, i: i64) -> i64 {
        debug_assert!((0..=self.k).contains(&i));
        self.a + i * self.d
    }

    pub fn generators(&self) -> Vec<i64> {
        (0..=self.k).map(|i| self.generator(i)).collect()
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(&self.generators()).expect("validated arithmetic params")
    }

    /// `x*d^{-1} mod a`, the coefficient of `d` when `x = m_a*a + m_d*d`
    /// with `0 <= m_d < a`.
    fn d_coefficient(&self, x: i64) -> i64 {
        mul_mod(x, self.d_inv, self.a)
    }

    /// Membership via `x = m_a*a + m_d*d`, `0 <= m_d < a`:
    /// `x in S  <=>  m_a >= ceil(m_d / k)`.
    pub fn contains(&self, x: i64) -> bool {
        let m_d = self.d_coefficient(x);
        // exact: x - m_d*d is divisible by a
        let m_a = (x as i128 - m_d as i128 * self.d as i128) / self.a as i128;
        m_a >= ceil_div(m_d, self.k) as i128
    }

    /// Apéry set with respect to `a`, listed by residue index
    /// `i = 0..a`: element `ceil(i/k)*a + i*d`.
    pub fn apery(&self) -> Result<Vec<i64>> {
        (0..self.a)
            .map(|i| num::add(num::mul(ceil_div(i, self.k), self.a)?, num::mul(i, self.d)?))
            .collect()
    }

    /// Normal form `x = x0*a + xi*(a+i*d) + xk*(a+k*d)` with
    /// `i*xi + k*xk < a`, for any integer `x`; `x0 >= 0` exactly when
    /// `x` lies in the semigroup. Requires `k >= 2`.
    pub fn decompose(&self, x: i64) -> Result<Representation> {
        if self.k < 2 {
            return Err(MobiusError::KOutOfRange {
                a: self.a,
                k: self.k,
            });
        }
        let t = self.d_coefficient(x);
        let xk = t / self.k;
        let rem = t % self.k;
        let (i, xi) = if rem == 0 { (1, 0) } else { (rem, 1) };
        let used = num::add(
            num::mul(xi, self.generator(i))?,
            num::mul(xk, self.generator(self.k))?,
        )?;
        let diff = num::sub(x, used)?;
        debug_assert_eq!(diff % self.a, 0);
        Ok(Representation {
            x0: diff / self.a,
            i,
            xi,
            xk,
        })
    }

    pub fn compose(&self, rep: &Representation) -> Result<i64> {
        self.validate(rep)?;
        let tail = num::add(
            num::mul(rep.xi, self.generator(rep.i))?,
            num::mul(rep.xk, self.generator(self.k))?,
        )?;
        num::add(num::mul(rep.x0, self.a)?, tail)
    }

    pub fn validate(&self, rep: &Representation) -> Result<()> {
        let bad = |msg: String| Err(MobiusError::InvalidRepresentation(msg));
        if self.k < 2 {
            return Err(MobiusError::KOutOfRange {
                a: self.a,
                k: self.k,
            });
        }
        if rep.xi != 0 && rep.xi != 1 {
            return bad(format!("xi = {} not in {{0,1}}", rep.xi));
        }
        if rep.i < 1 || rep.i > self.k - 1 {
            return bad(format!("i = {} not in [1, {}]", rep.i, self.k - 1));
        }
        if rep.xk < 0 || rep.xk > self.a / self.k {
            return bad(format!("xk = {} not in [0, {}]", rep.xk, self.a / self.k));
        }
        if rep.i * rep.xi + self.k * rep.xk >= self.a {
            return bad(format!(
                "i*xi + k*xk = {} is not below a = {}",
                rep.i * rep.xi + self.k * rep.xk,
                self.a
            ));
        }
        Ok(())
    }
}

impl fmt::Display for ArithmeticParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{}, {}+{}, ..., {}+{}*{}>",
            self.a, self.a, self.d, self.a, self.k, self.d
        )
    }
}

/// `[x0, xi, xk]` with the index `i` of the middle generator. When
/// `xi == 0` the index is normalised to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub x0: i64,
    pub i: i64,
    pub xi: i64,
    pub xk: i64,
}

impl Representation {
    /// The `k = 2` triple `[x0, x1, x2]`.
    pub fn triple(x0: i64, x1: i64, x2: i64) -> Self {
        Self {
            x0,
            i: 1,
            xi: x1,
            xk: x2,
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.x0, self.xi, self.xk)
    }
}
