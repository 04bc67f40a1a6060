use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed::{mobius_deddens, mobius_even_closed, ArithmeticMobius, EvenCaseParams};
use crate::error::{MobiusError, Result};
use crate::num::Mu;
use crate::oracle::{ChainTable, MobiusMemo};
use crate::semigroup::{ArithmeticParams, NumericalSemigroup};

/// Largest `x` the chain-sum method is run on.
pub const CHAINS_CAP: i64 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Chains,
    Recursive,
    Deddens,
    Arithmetic,
    EvenClosed,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Chains,
        Method::Recursive,
        Method::Deddens,
        Method::Arithmetic,
        Method::EvenClosed,
    ];

    /// Short name used on the command line and in output records.
    pub fn name(self) -> &'static str {
        match self {
            Method::Chains => "chains",
            Method::Recursive => "recursive",
            Method::Deddens => "deddens",
            Method::Arithmetic => "arith",
            Method::EvenClosed => "even",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = MobiusError;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| MobiusError::InvalidParameter(format!("unknown method {s:?}")))
    }
}

/// The two generators of `S` if it is minimally two-generated.
pub fn two_generators(s: &NumericalSemigroup) -> Option<(i64, i64)> {
    match s.minimal_generators()[..] {
        [a, b] => Some((a, b)),
        _ => None,
    }
}

/// Arithmetic parameters with `k >= 2` for `S`, trying the given generators
/// first and the minimal ones second.
pub fn arithmetic_params(s: &NumericalSemigroup) -> Option<ArithmeticParams> {
    let direct = s.as_arithmetic().filter(|p| p.k() >= 2);
    direct.or_else(|| {
        NumericalSemigroup::new(&s.minimal_generators())
            .ok()?
            .as_arithmetic()
            .filter(|p| p.k() >= 2)
    })
}

pub fn even_params(s: &NumericalSemigroup) -> Option<EvenCaseParams> {
    let p = arithmetic_params(s)?;
    if p.k() != 2 || p.a() % 2 != 0 {
        return None;
    }
    EvenCaseParams::new(p.a() / 2, p.d()).ok()
}

/// Checks whether `method` can evaluate `mu` on `s`.
pub fn applicability(s: &NumericalSemigroup, method: Method) -> Result<()> {
    let inapplicable = |reason: &str| {
        Err(MobiusError::MethodInapplicable {
            method: method.name(),
            reason: format!("{s} {reason}"),
        })
    };
    match method {
        Method::Chains | Method::Recursive => Ok(()),
        Method::Deddens => match two_generators(s) {
            Some(_) => Ok(()),
            None => inapplicable("is not minimally two-generated"),
        },
        Method::Arithmetic => match arithmetic_params(s) {
            Some(_) => Ok(()),
            None => inapplicable("is not <a, a+d, ..., a+kd> with 2 <= k <= a-1"),
        },
        Method::EvenClosed => match even_params(s) {
            Some(_) => Ok(()),
            None => inapplicable("is not <2q, 2q+d, 2q+2d> with q >= 2 and gcd(2q, d) = 1"),
        },
    }
}

/// Fastest applicable method.
pub fn auto_method(s: &NumericalSemigroup) -> Method {
    if two_generators(s).is_some() {
        Method::Deddens
    } else if even_params(s).is_some() {
        Method::EvenClosed
    } else if arithmetic_params(s).is_some() {
        Method::Arithmetic
    } else {
        Method::Recursive
    }
}

/// Stateful evaluator of `mu_S` by one method. Not shareable across threads
/// while in use; build one per worker.
#[derive(Debug)]
pub enum Evaluator {
    Chains {
        semigroup: NumericalSemigroup,
        table: Option<ChainTable>,
        bound: i64,
    },
    Recursive(MobiusMemo),
    Deddens(i64, i64),
    Arithmetic(ArithmeticMobius),
    EvenClosed(EvenCaseParams),
}

impl Evaluator {
    pub fn new(s: &NumericalSemigroup, method: Method) -> Result<Self> {
        applicability(s, method)?;
        Ok(match method {
            Method::Chains => Evaluator::Chains {
                semigroup: s.clone(),
                table: None,
                bound: -1,
            },
            Method::Recursive => Evaluator::Recursive(MobiusMemo::new(s.clone())),
            Method::Deddens => {
                let (a, b) = two_generators(s).expect("checked");
                Evaluator::Deddens(a, b)
            }
            Method::Arithmetic => Evaluator::Arithmetic(ArithmeticMobius::new(
                arithmetic_params(s).expect("checked"),
            )?),
            Method::EvenClosed => Evaluator::EvenClosed(even_params(s).expect("checked")),
        })
    }

    pub fn method(&self) -> Method {
        match self {
            Evaluator::Chains { .. } => Method::Chains,
            Evaluator::Recursive(_) => Method::Recursive,
            Evaluator::Deddens(..) => Method::Deddens,
            Evaluator::Arithmetic(_) => Method::Arithmetic,
            Evaluator::EvenClosed(_) => Method::EvenClosed,
        }
    }

    pub fn mobius(&mut self, x: i64) -> Result<Mu> {
        match self {
            Evaluator::Chains {
                semigroup,
                table,
                bound,
            } => {
                if x > CHAINS_CAP {
                    return Err(MobiusError::GridTooLarge(format!(
                        "chain enumeration is capped at x <= {CHAINS_CAP}, got {x}"
                    )));
                }
                if x < 0 {
                    return Ok(0);
                }
                if table.is_none() || x > *bound {
                    *bound = x.max(*bound);
                    *table = Some(ChainTable::new(semigroup, *bound)?);
                }
                table.as_ref().unwrap().mobius(x)
            }
            Evaluator::Recursive(memo) => memo.mobius(x),
            Evaluator::Deddens(a, b) => mobius_deddens(*a, *b, x),
            Evaluator::Arithmetic(m) => m.mobius(x),
            Evaluator::EvenClosed(p) => mobius_even_closed(p, x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn auto_selection() {
        assert_eq!(auto_method(&sg(&[2, 3])), Method::Deddens);
        assert_eq!(auto_method(&sg(&[2, 3, 4])), Method::Deddens);
        assert_eq!(auto_method(&sg(&[22, 27, 32])), Method::EvenClosed);
        assert_eq!(auto_method(&sg(&[3, 4, 5])), Method::Arithmetic);
        assert_eq!(auto_method(&sg(&[3, 4, 5, 6])), Method::Arithmetic);
        assert_eq!(auto_method(&sg(&[5, 7, 11])), Method::Recursive);
        assert_eq!(auto_method(&sg(&[1])), Method::Recursive);
    }

    #[test]
    fn auto_is_always_applicable() {
        for g in [
            &[2, 3][..],
            &[4, 5, 6],
            &[6, 7, 8, 9],
            &[5, 8, 9, 12],
            &[1, 5],
            &[7, 9, 11],
        ] {
            let s = sg(g);
            assert!(applicability(&s, auto_method(&s)).is_ok(), "{s}");
        }
    }

    #[test]
    fn inapplicable_methods() {
        let s = sg(&[3, 4, 5]);
        assert!(matches!(
            Evaluator::new(&s, Method::Deddens),
            Err(MobiusError::MethodInapplicable { .. })
        ));
        // a = 3 is odd
        assert!(Evaluator::new(&s, Method::EvenClosed).is_err());
        assert!(Evaluator::new(&sg(&[2, 3]), Method::Arithmetic).is_err());
    }

    #[test]
    fn chains_cap() {
        let mut e = Evaluator::new(&sg(&[2, 3]), Method::Chains).unwrap();
        assert_eq!(e.mobius(5), Ok(1));
        assert_eq!(e.mobius(3), Ok(-1));
        assert!(matches!(e.mobius(61), Err(MobiusError::GridTooLarge(_))));
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
    }
}
