//! Runs the module inside an embedded interpreter.

use std::sync::Once;

use pyo3::prelude::*;

use semigroup_mobius::semigroup_mobius;

static INIT: Once = Once::new();

fn run(code: &std::ffi::CStr) {
    INIT.call_once(|| {
        pyo3::append_to_inittab!(semigroup_mobius);
        Python::initialize();
    });
    Python::attach(|py| {
        if let Err(e) = py.run(code, None, None) {
            e.display(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn semigroup_api() {
    run(c"
import semigroup_mobius as sm
s = sm.Semigroup([3, 4, 5])
assert s.generators == [3, 4, 5]
assert s.multiplicity == 3
assert 7 in s and not s.contains(2)
assert s.apery_set() == [0, 4, 5]
assert s.auto_method() == 'arith'
assert s.mobius(12) == -3
assert s.mobius_range(0, 9) == [1, 0, 0, -1, -1, -1, 0, 1, 2]
assert s.mobius(12, method='chains') == s.mobius(12, method='recursive')
assert str(s) == '<3,4,5>'
assert sm.Semigroup([22, 27, 32]).count_chains(81, 2) == 6
");
}

#[test]
fn arithmetic_api() {
    run(c"
import semigroup_mobius as sm
p = sm.ArithmeticSemigroup(22, 5, 2)
assert p.decompose(54) == (1, 1, 0, 1)
assert p.compose(1, 1, 0, 1) == 54
assert p.mobius(594) == 2
assert sorted(p.apery()) == p.semigroup().apery_set()
assert sm.Semigroup([22, 27, 32]).as_arithmetic().k == 2
");
}

#[test]
fn functions_and_errors() {
    run(c"
import semigroup_mobius as sm
assert [sm.mobius_two_generators(2, 3, x) for x in range(7)] == [1, 0, -1, -1, 0, 1, 1]
assert sm.mobius_even(11, 5, 81) == -2
assert sm.mu_table(2, 1, 2) == [[1, -1], [-1, 2]]
ok, checks, failures = sm.run_suite('table')
assert ok and checks > 0 and failures == []
big = sm.Semigroup([3, 4, 5]).mobius(600)
assert abs(big) > 2**63
def raises(exc, f, *args):
    try:
        f(*args)
    except exc:
        return True
    return False
assert raises(ValueError, sm.Semigroup, [4, 6])
assert raises(ValueError, sm.mobius_even, 4, 2, 1)
assert raises(ValueError, sm.Semigroup([3, 4, 5]).mobius, 1, 'deddens')
assert raises(OverflowError, sm.Semigroup([3, 4, 5]).mobius, 1000)
");
}
