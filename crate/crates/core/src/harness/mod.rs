//! Cross-validation of the different `mu_S` methods, the `q = 11, d = 5`
//! reference table and the verification suites.

mod method;
pub mod suites;
mod table;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{MobiusError, Result};
use crate::num::Mu;
use crate::semigroup::NumericalSemigroup;

pub use method::{
    applicability, arithmetic_params, auto_method, even_params, two_generators, Evaluator, Method,
    CHAINS_CAP,
};
pub use table::{mu_table, mu_table_rows, MuTable, REFERENCE_D, REFERENCE_Q, REFERENCE_TABLE};

/// One semigroup, an inclusive `x` range, and the methods to compare on it.
#[derive(Clone, Debug)]
pub struct Grid {
    pub semigroup: NumericalSemigroup,
    pub from: i64,
    pub to: i64,
    pub methods: Vec<Method>,
}

impl Grid {
    pub fn new(semigroup: NumericalSemigroup, from: i64, to: i64, methods: &[Method]) -> Self {
        Self {
            semigroup,
            from,
            to,
            methods: methods.to_vec(),
        }
    }

    /// Every method applicable to `semigroup`.
    pub fn all_methods(semigroup: NumericalSemigroup, from: i64, to: i64) -> Self {
        let methods: Vec<Method> = Method::ALL
            .into_iter()
            .filter(|&m| applicability(&semigroup, m).is_ok())
            .filter(|&m| m != Method::Chains || to <= CHAINS_CAP)
            .collect();
        Self {
            semigroup,
            from,
            to,
            methods,
        }
    }
}

/// Values of every requested method at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MethodReport {
    pub semigroup: String,
    pub x: i64,
    pub chains: Option<Mu>,
    pub recursive: Option<Mu>,
    pub deddens: Option<Mu>,
    pub arithmetic: Option<Mu>,
    pub even_closed: Option<Mu>,
    pub agree: bool,
}

impl MethodReport {
    fn new(semigroup: String, x: i64, values: &[(Method, Mu)]) -> Self {
        let get = |m: Method| values.iter().find(|(k, _)| *k == m).map(|&(_, v)| v);
        let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
        Self {
            semigroup,
            x,
            chains: get(Method::Chains),
            recursive: get(Method::Recursive),
            deddens: get(Method::Deddens),
            arithmetic: get(Method::Arithmetic),
            even_closed: get(Method::EvenClosed),
            agree,
        }
    }

    pub fn values(&self) -> Vec<(Method, Mu)> {
        [
            (Method::Chains, self.chains),
            (Method::Recursive, self.recursive),
            (Method::Deddens, self.deddens),
            (Method::Arithmetic, self.arithmetic),
            (Method::EvenClosed, self.even_closed),
        ]
        .into_iter()
        .filter_map(|(m, v)| v.map(|v| (m, v)))
        .collect()
    }
}

fn check_grid(grid: &Grid) -> Result<()> {
    if grid.from > grid.to {
        return Err(MobiusError::InvalidParameter(format!(
            "empty range {}..={}",
            grid.from, grid.to
        )));
    }
    if grid.methods.contains(&Method::Chains) && grid.to > CHAINS_CAP {
        return Err(MobiusError::GridTooLarge(format!(
            "chains method requested up to x = {}, cap is {CHAINS_CAP}",
            grid.to
        )));
    }
    Ok(())
}

fn run_grid(grid: &Grid) -> Result<Vec<MethodReport>> {
    let mut evaluators = grid
        .methods
        .iter()
        .map(|&m| Evaluator::new(&grid.semigroup, m))
        .collect::<Result<Vec<_>>>()?;
    let name = grid.semigroup.to_string();
    let mut out = Vec::with_capacity((grid.to - grid.from + 1) as usize);
    let mut values = Vec::with_capacity(evaluators.len());
    for x in grid.from..=grid.to {
        values.clear();
        for e in evaluators.iter_mut() {
            values.push((e.method(), e.mobius(x)?));
        }
        out.push(MethodReport::new(name.clone(), x, &values));
    }
    Ok(out)
}

/// Evaluates every grid with all its methods. Reports come out in grid order,
/// then ascending `x`; disagreements are reported, not raised.
pub fn crosscheck(grids: &[Grid]) -> Result<Vec<MethodReport>> {
    grids.iter().try_for_each(check_grid)?;
    let mut out = Vec::new();
    for g in grids {
        out.extend(run_grid(g)?);
    }
    Ok(out)
}

/// [`crosscheck`] with grids spread over `jobs` worker threads. Output order
/// is identical to the sequential version.
pub fn crosscheck_parallel(grids: &[Grid], jobs: usize) -> Result<Vec<MethodReport>> {
    if jobs <= 1 {
        return crosscheck(grids);
    }
    grids.iter().try_for_each(check_grid)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| MobiusError::InvalidParameter(e.to_string()))?;
    let parts: Vec<Result<Vec<MethodReport>>> =
        pool.install(|| grids.par_iter().map(run_grid).collect());
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn crosscheck_examples() {
        let grids = [
            Grid::new(sg(&[2, 3]), 0, 36, &Method::ALL[..3]),
            Grid::new(
                sg(&[3, 4, 5]),
                0,
                150,
                &[Method::Recursive, Method::Arithmetic],
            ),
            Grid::new(
                sg(&[22, 27, 32]),
                0,
                600,
                &[Method::Recursive, Method::EvenClosed],
            ),
        ];
        let reports = crosscheck(&grids).unwrap();
        assert_eq!(reports.len(), 37 + 151 + 601);
        assert!(reports.iter().all(|r| r.agree));
        assert_eq!(reports[5].deddens, Some(1));
        assert_eq!(reports[5].arithmetic, None);
    }

    #[test]
    fn chains_over_cap_is_rejected() {
        let g = Grid::new(sg(&[2, 3]), 0, 61, &[Method::Chains]);
        assert!(matches!(
            crosscheck(&[g]),
            Err(MobiusError::GridTooLarge(_))
        ));
    }

    #[test]
    fn disagreement_flag() {
        let r = MethodReport::new(
            "s".into(),
            1,
            &[(Method::Recursive, 1), (Method::Deddens, 0)],
        );
        assert!(!r.agree);
        assert_eq!(
            r.values(),
            vec![(Method::Recursive, 1), (Method::Deddens, 0)]
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let grids: Vec<Grid> = [&[2, 5][..], &[4, 5, 6], &[5, 7, 9], &[6, 7, 8, 9], &[3, 7]]
            .iter()
            .map(|g| Grid::all_methods(sg(g), -3, 80))
            .collect();
        assert_eq!(
            crosscheck(&grids).unwrap(),
            crosscheck_parallel(&grids, 4).unwrap()
        );
    }
}
