"""Acceptance criteria 1-12, each checked at exact equality.

Run under pytest for one PASS/FAIL line per criterion in the terminal summary,
or directly with ``python tests/test_acceptance.py``.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest  # noqa: E402

from dtableau import verify  # noqa: E402
from dtableau.cycles import special_census  # noqa: E402

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # pragma: no cover
    ACCEPTANCE_LINES = {}


def _record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def _run(number, title, body):
    start = time.perf_counter()
    try:
        ok, detail = body()
    except AssertionError as exc:
        ok, detail = False, f"assertion failed {exc}"
    detail = f"{detail} ({time.perf_counter() - start:.1f}s)"
    _record(number, title, ok, detail)
    return ok, detail


def c1():
    start = time.perf_counter()
    results = [verify.check_bijection(n) for n in range(1, 6)]
    elapsed = time.perf_counter() - start
    sizes = [r.detail["pairs"] for r in results]
    ok = all(r.passed for r in results) and sizes == [2, 8, 48, 384, 3840] and elapsed < 10
    return ok, f"images {sizes}, halves split exactly"


def c2():
    results = [verify.check_round_trip(n) for n in range(1, 6)]
    return all(r.passed for r in results), f"{sum(r.detail['sequences'] for r in results)} sequences"


def c3():
    results = [verify.check_parity(n) for n in range(1, 6)]
    return all(r.passed for r in results), f"{sum(r.detail['sequences'] for r in results)} sequences"


def c4():
    results = [verify.check_tau(n) for n in range(1, 5)]
    elements = sum(r.detail["elements"] for r in results)
    return all(r.passed for r in results) and elements == 442, f"{elements} elements x 2 sides"


def c5():
    walls = [verify.check_wall_equivariance(n) for n in (3, 4)]
    quads = [verify.check_quad_equivariance(4), verify.check_quad_equivariance(5, sample=600)]
    ok = all(r.passed for r in walls + quads)
    apps = sum(r.detail["applications"] for r in walls)
    qapps = sum(r.detail["applications"] for r in quads)
    return ok, f"{apps} wall and {qapps} quad applications agree"


def c6():
    results = [verify.check_extended_cycles(n) for n in range(1, 6)]
    seen = sum(r.detail["extended_cycles"] for r in results)
    return all(r.passed for r in results), f"{seen} extended cycles shift n_h by 2"


def c7():
    results = [verify.check_quad_structure(n) for n in (4, 5)]
    elements = [r.detail["elements"] for r in results]
    return all(r.passed for r in results) and elements == [192, 1920], f"elements {elements}"


def c8():
    results = [verify.check_special(n) for n in range(1, 7)]
    census = {tuple(s): c for s, c in special_census(2).items()}
    want = {(3, 1): 1, (1, 1, 1, 1): 1, (2, 2): 2}
    orbits = sum(r.detail["orbits"] for r in results)
    return all(r.passed for r in results) and census == want, f"{orbits} orbits, census {census}"


def c9():
    start = time.perf_counter()
    results = [verify.check_gtd_fibers(n) for n in (3, 4)]
    elapsed = time.perf_counter() - start
    pairs = [r.detail["pairs"] for r in results]
    ok = all(r.passed for r in results) and pairs == [48, 384] and elapsed < 60
    return ok, f"pairs {pairs}, classes {[r.detail['classes'] for r in results]}"


def c10():
    results = [verify.check_jrd_fibers(n) for n in range(1, 5)]
    counts = [r.detail["special_tableaux"] for r in results]
    return all(r.passed for r in results), f"special tableaux per rank {counts}"


def c11():
    results = [verify.check_connectivity(n) for n in (3, 4)]
    comps = [r.detail["components"] for r in results]
    return all(r.passed for r in results), f"components {comps}"


def c12():
    r = verify.check_nested(12)
    return r.passed, f"{r.detail['shapes']} shapes"


CRITERIA = [
    (1, "bijection counts", c1),
    (2, "round trip", c2),
    (3, "parity", c3),
    (4, "descent agreement", c4),
    (5, "insertion equivariance", c5),
    (6, "extended-cycle dichotomy", c6),
    (7, "quad-operator structure", c7),
    (8, "special normalization", c8),
    (9, "generalized tau fibers", c9),
    (10, "right classes and cl", c10),
    (11, "connectivity", c11),
    (12, "nested shapes", c12),
]


@pytest.mark.parametrize("number,title,body", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, body):
    ok, detail = _run(number, title, body)
    assert ok, detail


if __name__ == "__main__":
    failures = sum(not _run(n, t, b)[0] for n, t, b in CRITERIA)
    sys.exit(1 if failures else 0)
