use smobius_core::harness::suites::{run_suite, Bound, Suite};
use smobius_core::harness::{crosscheck, crosscheck_parallel, mu_table, Grid};
use smobius_core::{Evaluator, EvenCaseParams, Method, MobiusError, NumericalSemigroup};

fn sg(g: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::new(g).unwrap()
}

#[test]
fn every_suite_passes_tiny() {
    for suite in Suite::ALL {
        let outcome = run_suite(suite, Bound::Tiny, 2).unwrap();
        assert!(outcome.passed(), "{suite}: {:?}", outcome.failures);
        assert!(outcome.checks > 0, "{suite} ran no checks");
    }
}

#[test]
fn table_suite_full() {
    let outcome = run_suite(Suite::Table, Bound::Full, 1).unwrap();
    assert!(outcome.passed(), "{:?}", outcome.failures);
}

#[test]
fn crosscheck_agrees_across_methods() {
    let grids = vec![
        Grid::all_methods(sg(&[2, 3]), -6, 60),
        Grid::all_methods(sg(&[3, 4, 5]), -6, 60),
        Grid::all_methods(sg(&[22, 27, 32]), -6, 1000),
        Grid::all_methods(sg(&[7, 9, 11, 13]), 0, 700),
        Grid::all_methods(sg(&[6, 10, 15]), 0, 300),
    ];
    let reports = crosscheck(&grids).unwrap();
    assert!(reports.iter().all(|r| r.agree));
    // <22,27,32> is compared by recursion, arithmetic and the even closed form
    let r = reports
        .iter()
        .find(|r| r.semigroup == "<22,27,32>" && r.x == 594)
        .unwrap();
    assert_eq!(
        (r.recursive, r.arithmetic, r.even_closed),
        (Some(2), Some(2), Some(2))
    );
    assert_eq!(reports, crosscheck_parallel(&grids, 3).unwrap());
}

#[test]
fn evaluators_agree_on_auto() {
    for g in [
        &[2, 3][..],
        &[5, 8],
        &[10, 13, 16],
        &[9, 11, 13, 15],
        &[6, 10, 15],
    ] {
        let s = sg(g);
        let mut auto = Evaluator::new(&s, smobius_core::harness::auto_method(&s)).unwrap();
        let mut oracle = Evaluator::new(&s, Method::Recursive).unwrap();
        for x in -10..400 {
            assert_eq!(auto.mobius(x), oracle.mobius(x), "{s} at {x}");
        }
    }
}

#[test]
fn errors_surface() {
    assert_eq!(
        NumericalSemigroup::new(&[4, 6]).unwrap_err(),
        MobiusError::GcdNotOne(2)
    );
    assert_eq!(
        EvenCaseParams::new(4, 2).unwrap_err(),
        MobiusError::GcdNotOne(2)
    );
    let g = Grid::new(sg(&[2, 3]), 0, 100, &[Method::Chains, Method::Recursive]);
    assert!(matches!(
        crosscheck(&[g]),
        Err(MobiusError::GridTooLarge(_))
    ));
    let p = EvenCaseParams::new(2, 1).unwrap();
    let t = mu_table(&p, 2).unwrap();
    // <4,5,6>: 10 = 4+6 = 5+5, so mu(10) = -1 + 3
    assert_eq!(t.rows, vec![vec![1, -1], vec![-1, 2], vec![0, -1]]);
}
