//! Verification suites. Each suite walks a parameter grid, compares two or
//! more independent computations and collects every disagreement.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::{
    crosscheck_parallel, mu_table, Grid, Method, REFERENCE_D, REFERENCE_Q, REFERENCE_TABLE,
};
use crate::closed::{mobius_deddens, mobius_even_closed, mobius_even_step, multiplicity};
use crate::closed::{EvenCaseParams, Family, MultisetId};
use crate::error::{MobiusError, Result};
use crate::num::{gcd, Mu};
use crate::oracle::{ChainTable, MobiusMemo};
use crate::semigroup::{ArithmeticParams, NumericalSemigroup, Representation};

const MAX_LISTED_FAILURES: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Table,
    Deddens,
    Arith,
    Even,
    Defs,
    Shifts,
    Repr,
    Apery,
    Invariants,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Table,
        Suite::Deddens,
        Suite::Arith,
        Suite::Even,
        Suite::Defs,
        Suite::Shifts,
        Suite::Repr,
        Suite::Apery,
        Suite::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Deddens => "deddens",
            Suite::Arith => "arith",
            Suite::Even => "even",
            Suite::Defs => "defs",
            Suite::Shifts => "shifts",
            Suite::Repr => "repr",
            Suite::Apery => "apery",
            Suite::Invariants => "invariants",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = MobiusError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| MobiusError::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Grid size. `Full` is the acceptance grid; `Tiny` shrinks every range for
/// quick smoke runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    Tiny,
    Full,
}

impl FromStr for Bound {
    type Err = MobiusError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tiny" => Ok(Bound::Tiny),
            "full" => Ok(Bound::Full),
            _ => Err(MobiusError::InvalidParameter(format!(
                "unknown bound {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checks: u64,
    pub failure_count: u64,
    /// First few failures, human readable.
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

struct Tally {
    checks: u64,
    failure_count: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checks: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        got: T,
        want: T,
        what: impl FnOnce() -> String,
    ) {
        self.check(got == want, || {
            format!("{}: got {got}, expected {want}", what())
        });
    }
}

pub fn run_suite(suite: Suite, bound: Bound, jobs: usize) -> Result<SuiteOutcome> {
    let start = Instant::now();
    let mut t = Tally::new();
    match suite {
        Suite::Table => table(&mut t)?,
        Suite::Deddens => deddens(&mut t, bound, jobs)?,
        Suite::Arith => arith(&mut t, bound, jobs)?,
        Suite::Even => even(&mut t, bound, jobs)?,
        Suite::Defs => defs(&mut t, bound)?,
        Suite::Shifts => shifts(&mut t, bound),
        Suite::Repr => repr(&mut t, bound)?,
        Suite::Apery => apery(&mut t, bound)?,
        Suite::Invariants => invariants(&mut t, bound)?,
    }
    Ok(SuiteOutcome {
        suite,
        checks: t.checks,
        failure_count: t.failure_count,
        failures: t.failures,
        elapsed: start.elapsed(),
    })
}

fn sg(g: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::new(g).expect("suite semigroups are valid")
}

fn tally_reports(t: &mut Tally, grids: &[Grid], jobs: usize) -> Result<()> {
    for r in crosscheck_parallel(grids, jobs)? {
        t.check(r.agree, || {
            let vals: Vec<String> = r.values().iter().map(|(m, v)| format!("{m}={v}")).collect();
            format!("{} x={}: {}", r.semigroup, r.x, vals.join(" "))
        });
    }
    Ok(())
}

/// `(a, d, k)` with `a <= a_max`, `d <= d_max`, `gcd(a, d) = 1`, `2 <= k < a`.
pub fn arithmetic_grid(a_max: i64, d_max: i64) -> Vec<ArithmeticParams> {
    let mut out = Vec::new();
    for a in 3..=a_max {
        for d in 1..=d_max {
            for k in 2..a {
                if let Ok(p) = ArithmeticParams::new(a, d, k) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// `(q, d)` with `2 <= q <= q_max`, odd `d <= d_max`, `gcd(q, d) = 1`.
pub fn even_grid(q_max: i64, d_max: i64) -> Vec<EvenCaseParams> {
    let mut out = Vec::new();
    for q in 2..=q_max {
        for d in (1..=d_max).step_by(2) {
            if let Ok(p) = EvenCaseParams::new(q, d) {
                out.push(p);
            }
        }
    }
    out
}

fn coprime_pairs(max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in 2..=max {
        for b in a + 1..=max {
            if gcd(a, b) == 1 {
                out.push((a, b));
            }
        }
    }
    out
}

fn table(t: &mut Tally) -> Result<()> {
    let p = EvenCaseParams::new(REFERENCE_Q, REFERENCE_D)?;
    let x0_max = REFERENCE_TABLE.len() as i64 - 1;
    let closed = mu_table(&p, x0_max)?;
    let arith = p.arithmetic();
    let mut memo = MobiusMemo::new(arith.semigroup());
    for (x0, row) in REFERENCE_TABLE.iter().enumerate() {
        for (x2, &want) in row.iter().enumerate() {
            let want = Mu::from(want);
            let where_ = || format!("[{x0},0,{x2}]");
            t.eq(closed.rows[x0][x2], want, || {
                format!("closed form at {}", where_())
            });
            let x = arith.compose(&Representation::triple(x0 as i64, 0, x2 as i64))?;
            t.eq(memo.mobius(x)?, want, || {
                format!("recursion at {}", where_())
            });
        }
    }
    Ok(())
}

fn deddens(t: &mut Tally, bound: Bound, jobs: usize) -> Result<()> {
    let max = if bound == Bound::Full { 10 } else { 6 };
    let mut grids = Vec::new();
    for (a, b) in coprime_pairs(max) {
        let s = sg(&[a, b]);
        let mut memo = MobiusMemo::new(s.clone());
        for (x, want) in [(0, 1), (a, -1), (b, -1), (a + b, 1)] {
            t.eq(mobius_deddens(a, b, x)?, want, || {
                format!("<{a},{b}> closed form at {x}")
            });
            t.eq(memo.mobius(x)?, want, || {
                format!("<{a},{b}> recursion at {x}")
            });
        }
        grids.push(Grid::new(
            s,
            -a * b,
            3 * a * b,
            &[Method::Recursive, Method::Deddens],
        ));
    }
    tally_reports(t, &grids, jobs)
}

fn arith(t: &mut Tally, bound: Bound, jobs: usize) -> Result<()> {
    let (a_max, d_max, mult) = match bound {
        Bound::Full => (12, 7, 50),
        Bound::Tiny => (7, 3, 12),
    };
    let grids: Vec<Grid> = arithmetic_grid(a_max, d_max)
        .into_iter()
        .map(|p| {
            Grid::new(
                p.semigroup(),
                0,
                mult * p.a(),
                &[Method::Recursive, Method::Arithmetic],
            )
        })
        .collect();
    tally_reports(t, &grids, jobs)
}

fn even(t: &mut Tally, bound: Bound, jobs: usize) -> Result<()> {
    let (q_max, d_max, mult) = match bound {
        Bound::Full => (9, 9, 40),
        Bound::Tiny => (4, 5, 10),
    };
    let grids: Vec<Grid> = even_grid(q_max, d_max)
        .into_iter()
        .map(|p| {
            let s = p.arithmetic().semigroup();
            Grid::new(
                s,
                -10,
                mult * p.step(),
                &[Method::Recursive, Method::EvenClosed],
            )
        })
        .collect();
    tally_reports(t, &grids, jobs)
}

fn defs(t: &mut Tally, bound: Bound) -> Result<()> {
    let top = if bound == Bound::Full { 40 } else { 20 };
    for g in [&[2, 3][..], &[3, 4, 5], &[4, 5, 6], &[5, 7]] {
        let s = sg(g);
        let chains = ChainTable::new(&s, top)?;
        let mut memo = MobiusMemo::new(s.clone());
        for x in 0..=top {
            t.eq(chains.mobius(x)?, memo.mobius(x)?, || {
                format!("{s} chains vs recursion at {x}")
            });
        }
    }
    for (a, b) in coprime_pairs(7) {
        let chains = ChainTable::new(&sg(&[a, b]), a + b)?;
        t.eq(chains.count(a + b, 1).0 as i64, 1, || {
            format!("c_1(0,{}) on <{a},{b}>", a + b)
        });
        t.eq(chains.count(a + b, 2).0 as i64, 2, || {
            format!("c_2(0,{}) on <{a},{b}>", a + b)
        });
    }
    // 81 = 22 + 27 + 32 = 3 * 27: the length-2 chains pass through
    // 22, 27, 32, 49, 54, 59 and the length-3 ones are the six orderings of
    // (22, 27, 32) plus (27, 27, 27)
    let chains = ChainTable::new(&sg(&[22, 27, 32]), 81)?;
    for (l, want) in [(1, 1), (2, 6), (3, 7), (4, 0)] {
        t.eq(chains.count(81, l).0 as i64, want, || {
            format!("c_{l}(0,81) on <22,27,32>")
        });
    }
    t.eq(chains.mobius(81)?, -2, || "mu(81) on <22,27,32>".into());
    Ok(())
}

const SHIFT_PARAMS: [(i64, i64); 4] = [(11, 5), (2, 1), (5, 3), (9, 7)];

fn shifts(t: &mut Tally, bound: Bound) {
    let top = if bound == Bound::Full { 2000 } else { 400 };
    let families = [Family::A, Family::B, Family::C];
    for (q, d) in SHIFT_PARAMS {
        let p = EvenCaseParams::new(q, d).expect("valid shift params");
        let id = |f, i| MultisetId::new(f, i).expect("offset in range");
        for i in -1..=1 {
            for x in -100..=top {
                let m = |f, y| multiplicity(&p, id(f, i), y) as i64;
                if x != i {
                    t.eq(m(Family::A, x), m(Family::A, x - p.step()), || {
                        format!("A_{i} shift at x={x}, (q,d)=({q},{d})")
                    });
                }
                t.eq(m(Family::B, x), m(Family::C, x - (2 * q + d)), || {
                    format!("B_{i}/C_{i} shift at x={x}, (q,d)=({q},{d})")
                });
                t.eq(m(Family::C, x), m(Family::A, x) + m(Family::B, x), || {
                    format!("C_{i} = A_{i} + B_{i} at x={x}, (q,d)=({q},{d})")
                });
            }
            for f in families {
                t.eq(multiplicity(&p, id(f, i), i - 1) as i64, 0, || {
                    format!("{f:?}_{i} below {i}")
                });
            }
        }
    }
    // exhaustive (m, n) enumeration for B_0 at 459 with (q, d) = (11, 5)
    let p = EvenCaseParams::new(11, 5).expect("valid");
    let mut witnesses = 0;
    for m in 2..=459i64 {
        for n in 1..=m / 2 {
            if m * 16 - n * 5 == 459 {
                witnesses += 1;
            }
        }
    }
    t.eq(witnesses, 2, || "exhaustive B_0 witnesses at 459".into());
    let b0 = MultisetId::new(Family::B, 0).expect("valid");
    t.eq(multiplicity(&p, b0, 459) as i64, witnesses, || {
        "m_B0(459)".into()
    });
}

fn repr(t: &mut Tally, bound: Bound) -> Result<()> {
    let (a_max, d_max, span) = match bound {
        Bound::Full => (12, 7, 500),
        Bound::Tiny => (7, 3, 100),
    };
    for p in arithmetic_grid(a_max, d_max) {
        for x in -span..=span {
            let rep = p.decompose(x)?;
            t.eq(p.compose(&rep)?, x, || format!("round trip of {x} in {p}"));
            t.check(p.validate(&rep).is_ok(), || {
                format!("decompose({x}) = {rep} invalid in {p}")
            });
        }
    }
    let uniq_a_max = if bound == Bound::Full { 12 } else { 7 };
    for p in arithmetic_grid(uniq_a_max, d_max) {
        unique_representations(t, &p)?;
    }
    Ok(())
}

/// Enumerates every admissible `(x0 >= 0, i, xi, xk)` below `30a` and checks
/// each element of `S` is hit exactly once, by `decompose`'s triple.
fn unique_representations(t: &mut Tally, p: &ArithmeticParams) -> Result<()> {
    let (a, k) = (p.a(), p.k());
    let limit = 30 * a;
    let mut hits: Vec<Vec<Representation>> = vec![Vec::new(); limit as usize];
    for xk in 0..=a / k {
        for xi in 0..=1 {
            // xi = 0 does not depend on i
            let indices = if xi == 0 { 1..=1 } else { 1..=k - 1 };
            for i in indices {
                if i * xi + k * xk >= a {
                    continue;
                }
                let tail = xi * p.generator(i) + xk * p.generator(k);
                let mut x0 = 0;
                while x0 * a + tail < limit {
                    hits[(x0 * a + tail) as usize].push(Representation { x0, i, xi, xk });
                    x0 += 1;
                }
            }
        }
    }
    let s = p.semigroup();
    for (x, found) in hits.iter().enumerate() {
        let x = x as i64;
        if s.contains(x) {
            t.eq(found.len() as i64, 1, || {
                format!("representations of {x} in {p}: {found:?}")
            });
            if let [only] = found[..] {
                let rep = p.decompose(x)?;
                t.check(rep == only, || {
                    format!("decompose({x}) = {rep}, enumeration gives {only}")
                });
            }
        } else {
            t.eq(found.len() as i64, 0, || {
                format!("non-member {x} of {p} has representations")
            });
        }
    }
    Ok(())
}

fn apery(t: &mut Tally, bound: Bound) -> Result<()> {
    let (a_max, d_max) = if bound == Bound::Full {
        (12, 7)
    } else {
        (7, 3)
    };
    for p in arithmetic_grid(a_max, d_max).into_iter().chain(
        // k = 1 as well
        (2..=a_max)
            .flat_map(|a| (1..=d_max).filter_map(move |d| ArithmeticParams::new(a, d, 1).ok())),
    ) {
        let mut formula = p.apery()?;
        formula.sort_unstable();
        let generic = p.semigroup().apery_set(p.a())?;
        t.check(formula == generic, || {
            format!("{p}: formula {formula:?} vs generic {generic:?}")
        });
        t.eq(formula.len() as i64, p.a(), || format!("|Ap| for {p}"));
        let mut residues: Vec<i64> = formula.iter().map(|x| x % p.a()).collect();
        residues.sort_unstable();
        residues.dedup();
        t.eq(residues.len() as i64, p.a(), || {
            format!("distinct residues of Ap for {p}")
        });
    }
    Ok(())
}

fn invariants(t: &mut Tally, bound: Bound) -> Result<()> {
    let top = if bound == Bound::Full { 1000 } else { 200 };
    // mu on <3,4,5> grows like 1.15^x and leaves i128 at x = 628
    let cases = [
        (&[2, 3][..], top),
        (&[4, 5, 6], top),
        (&[22, 27, 32], top),
        (&[3, 4, 5], top / 2),
    ];
    for (g, top) in cases {
        let s = sg(g);
        let mut memo = MobiusMemo::new(s.clone());
        for x in 1..=top {
            t.eq(memo.convolution_residual(x)?, 0, || {
                format!("residual of {s} at {x}")
            });
            if x != 0 && !s.contains(x) {
                t.eq(memo.mobius(x)?, 0, || {
                    format!("{s}: mu off the semigroup at {x}")
                });
            }
        }
    }
    let pair_max = if bound == Bound::Full { 10 } else { 6 };
    for (a, b) in coprime_pairs(pair_max) {
        for x in 0..=5 * a * b {
            if ![0, a, b, a + b].contains(&x) {
                t.eq(
                    mobius_deddens(a, b, x)?,
                    mobius_deddens(a, b, x - a * b)?,
                    || format!("<{a},{b}> periodicity at {x}"),
                );
            }
        }
    }
    let (q_max, d_max) = if bound == Bound::Full { (9, 9) } else { (4, 5) };
    for p in even_grid(q_max, d_max) {
        let arith = p.arithmetic();
        for x1 in 0..=1 {
            for x0 in -3..=3 * p.step() {
                for x2 in 1..p.q() {
                    let here = mobius_even_closed(
                        &p,
                        arith.compose(&Representation::triple(x0, x1, x2))?,
                    )?;
                    let diag = mobius_even_closed(
                        &p,
                        arith.compose(&Representation::triple(x0 - x2 + 1, x1, 1))?,
                    )?;
                    t.eq(here, diag, || {
                        format!("diagonal at [{x0},{x1},{x2}] for q={}, d={}", p.q(), p.d())
                    });
                }
            }
        }
        even_step(t, &p)?;
    }
    for g in [
        &[2, 3][..],
        &[3, 4, 5],
        &[4, 5, 6],
        &[5, 7],
        &[6, 9, 10, 15],
        &[7, 8, 9, 10, 11],
        &[22, 27, 32],
    ] {
        let s = sg(g);
        let mut memo = MobiusMemo::new(s.clone());
        for m in s.minimal_generators() {
            t.eq(memo.mobius(m)?, -1, || {
                format!("{s} at minimal generator {m}")
            });
        }
        for x in -20..=60 {
            for shift in [-50, -7, 0, 13, 50] {
                t.eq(
                    memo.mobius_bivariate(x, x + 17)?,
                    memo.mobius_bivariate(x + shift, x + 17 + shift)?,
                    || format!("{s}: translation of ({x}, {}) by {shift}", x + 17),
                );
            }
        }
    }
    Ok(())
}

/// The three-term step recursion against the generic recursion, on every
/// in-domain representation with `x0 <= 4(q+d)`, for both `x1`.
fn even_step(t: &mut Tally, p: &EvenCaseParams) -> Result<()> {
    let arith = p.arithmetic();
    let mut memo = MobiusMemo::new(arith.semigroup());
    for x1 in 0..=1 {
        for x0 in -2..=4 * p.step() {
            for x2 in 0..p.q() {
                if (0..=1).contains(&x0) && (0..=1).contains(&x2) {
                    continue;
                }
                let rep = Representation::triple(x0, x1, x2);
                let rhs = mobius_even_step(p, &rep, |x| memo.mobius(x))?;
                let lhs = memo.mobius(arith.compose(&rep)?)?;
                t.eq(rhs, lhs, || {
                    format!("step recursion at {rep}, q={}, d={}", p.q(), p.d())
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_suites_pass() {
        for s in Suite::ALL {
            let out = run_suite(s, Bound::Tiny, 1).unwrap();
            assert!(out.passed(), "{s}: {:?}", out.failures);
            assert!(out.checks > 0, "{s}");
        }
    }

    #[test]
    fn grids_have_expected_sizes() {
        // a = 3..=12, d <= 7 coprime to a, k = 2..a
        let grid = arithmetic_grid(12, 7);
        assert!(grid.iter().any(|p| p.r() == 0));
        assert!(grid.iter().any(|p| p.r() == 1));
        assert!(grid.iter().any(|p| p.r() >= 2));
        assert_eq!(even_grid(9, 9).len(), {
            let mut n = 0;
            for q in 2..=9i64 {
                for d in [1i64, 3, 5, 7, 9] {
                    n += usize::from(gcd(q, d) == 1);
                }
            }
            n
        });
    }

    #[test]
    fn names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("tiny".parse::<Bound>().unwrap(), Bound::Tiny);
        assert!("huge".parse::<Bound>().is_err());
    }
}
