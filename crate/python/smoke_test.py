#!/usr/bin/env python3
"""Smoke test for the cayley_census_py extension module.

Build it first, then run this script from the repository root:

    cargo build -p cayley-census-py --release
    python3 python/smoke_test.py

The script copies the built cdylib next to a temp directory under the
importable module name, so no maturin/pip step is needed.
"""

import pathlib
import shutil
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def find_extension():
    stems = {
        "linux": "libcayley_census_py.so",
        "darwin": "libcayley_census_py.dylib",
        "win32": "cayley_census_py.dll",
    }
    name = stems.get(sys.platform, stems["linux"])
    candidates = [
        ROOT / "target" / profile / name for profile in ("release", "debug")
    ]
    for candidate in candidates:
        if candidate.exists():
            return candidate
    raise SystemExit(
        "extension not built; run `cargo build -p cayley-census-py` first "
        f"(looked for {', '.join(str(c) for c in candidates)})"
    )


def import_module():
    built = find_extension()
    tmp = tempfile.mkdtemp(prefix="cayley_census_py_")
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, pathlib.Path(tmp) / f"cayley_census_py{suffix}")
    sys.path.insert(0, tmp)
    import cayley_census_py

    return cayley_census_py


def main():
    cc = import_module()

    # arithmetic kernel
    assert cc.euler_phi(15) == 8
    assert cc.mult_order(2, 15) == 4
    assert cc.divisors_of(15) == [1, 3, 5, 15]
    assert cc.is_squarefree(15) and not cc.is_squarefree(9)

    # automorphism algebra
    a = cc.Aut(15, 19, 20)  # subscripts reduce mod n
    assert (a.n, a.r, a.t) == (15, 4, 5)
    assert a.order() == cc.kappa(15, 4, 5) == 6
    assert a.compose(a) == cc.Aut(15, 1, 10)
    assert a.power(6).is_identity()
    assert len(cc.enumerate_aut(15)) == 15 * cc.euler_phi(15)
    perm = a.permutation()
    assert sorted(perm) == list(range(29))

    # cycle counts
    data = cc.cycle_total(15, 4, 5)
    assert data["total"] == 11
    assert data["c_v"] == 3
    assert data["u_parts"] == [(3, 2), (5, 2), (15, 4)]
    assert a.cycle_data()["total"] == 11

    # census: plain Python ints, three routes in agreement
    assert cc.burnside_count(3) == 12
    assert cc.burnside_count(5) == cc.powerset_orbit_count(5) == 44
    v5 = cc.d6p_count(5)
    assert v5 == cc.dci_census(15) == cc.burnside_count(15) == 4512576
    assert cc.d6p_count(7) == 8729668864
    assert cc.dci_status(15) == "known_dci"
    assert cc.dci_status(12) == "known_not_dci"
    assert cc.dci_status(35) == "unknown"

    row = cc.census_row(15, method="theorem")
    assert row["orbit_count"] == 4512576
    assert row["burnside_sum"] == 4512576 * 120
    assert row["dci"] == "known_dci"

    # domain errors surface as ValueError
    for call in (
        lambda: cc.Aut(15, 3, 0),
        lambda: cc.dci_census(9),
        lambda: cc.d6p_count(4),
        lambda: cc.powerset_orbit_count(50),
        lambda: cc.census_row(15, method="bogus"),
    ):
        try:
            call()
        except ValueError:
            pass
        else:
            raise AssertionError(f"{call} should have raised ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
