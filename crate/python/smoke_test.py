"""Build the extension module, import it, and check a few known values.

Usage: python3 python/smoke_test.py [--no-build]

With --no-build the module must already be importable.
"""

import os
import shutil
import subprocess
import sys
import sysconfig
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build_module(dest):
    env = dict(os.environ, PYO3_BUILD_EXTENSION_MODULE="1", PYO3_PYTHON=sys.executable)
    target = os.path.join(ROOT, "target", "python")
    subprocess.run(
        ["cargo", "build", "--release", "-p", "smobius-py", "--target-dir", target],
        cwd=ROOT,
        env=env,
        check=True,
    )
    built = os.path.join(target, "release", "libsemigroup_mobius.so")
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy(built, os.path.join(dest, "semigroup_mobius" + suffix))


def main():
    if "--no-build" not in sys.argv:
        dest = tempfile.mkdtemp(prefix="semigroup_mobius_")
        build_module(dest)
        sys.path.insert(0, dest)

    import semigroup_mobius as sm

    assert [sm.mobius_two_generators(2, 3, x) for x in range(7)] == [1, 0, -1, -1, 0, 1, 1]

    s = sm.Semigroup([3, 4, 5])
    assert s.mobius_range(0, 9) == [1, 0, 0, -1, -1, -1, 0, 1, 2]
    assert s.apery_set() == [0, 4, 5]

    even = sm.Semigroup([22, 27, 32])
    assert even.auto_method() == "even"
    assert even.mobius(54) == 2
    assert even.mobius(594) == 2
    assert sm.mu_table(11, 5, 3)[1] == [-1, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0]

    p = sm.ArithmeticSemigroup(22, 5, 2)
    assert p.decompose(54) == (1, 1, 0, 1)

    try:
        sm.Semigroup([4, 6])
    except ValueError:
        pass
    else:
        raise AssertionError("gcd 2 accepted")

    ok, checks, _ = sm.run_suite("table", "full")
    assert ok and checks > 0

    print("smoke test passed")


if __name__ == "__main__":
    main()
