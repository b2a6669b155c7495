"""Acceptance criteria 1-11, one PASS/FAIL line each.

Run under pytest (lines are repeated in the terminal summary) or directly:
``python tests/test_acceptance.py``.  Stage results are cached; set
DVSIGMA_TEST_CACHE to reuse a cache directory between runs.
"""

from __future__ import annotations

import os
import sys
import tempfile
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import ensure  # noqa: E402

from dvsigma.pipeline import Cache, Options  # noqa: E402

RESULTS: dict[int, str] = {}


def _checks(cache, stage, names=None):
    block = ensure(cache, stage).block(stage)
    picked = [c for c in block["checks"] if names is None or c["name"] in names]
    if names is not None and len(picked) != len(names):
        missing = set(names) - {c["name"] for c in picked}
        raise AssertionError(f"checks not found in {stage}: {sorted(missing)}")
    return block, picked


def _verdict(picked):
    bad = [f"{c['name']} (got {c['value']}, want {c['anchor']})" for c in picked if not c["ok"]]
    return not bad, "; ".join(bad)


def c1(cache):
    _, picked = _checks(cache, "build-sigma", [
        "dim of {P,R}-invariant trivectors", "{P,R}-invariants = span(sigma1, sigma2)",
        "dim of {P,R,a}-invariant trivectors", "{P,R,a}-invariants = span(sigma1 + sigma2)"])
    return _verdict(picked)


def c2(cache):
    _, picked = _checks(cache, "characters", [
        "row orthogonality", "character of wedge^3 V10", "multiplicity of the trivial character",
        "trivial multiplicity in wedge^3 of V10'"])
    return _verdict(picked)


def c3(cache):
    _, picked = _checks(cache, "singular-points", [
        "number of points", "points distinct", "rank 4 at every point", "no rank<=2 point",
        "B acts transitively (P cycles columns, R cycles rows)", "closed under a"])
    return _verdict(picked)


def c4(cache):
    p = cache.opts.primes[0]
    _, picked = _checks(cache, "singular-points", [
        f"rank<={b} locus mod {p}: (dim, degree)" for b in (2, 4, 6)])
    return _verdict(picked)


def c5(cache):
    _, picked = _checks(cache, "picard", [
        "|det Pic|", "H = D00 + ... + D0,10", "q(H,H)", "q(H,D) over all 55 classes", "signature"])
    return _verdict(picked)


def c6(cache):
    _, picked = _checks(cache, "lattice")
    return _verdict(picked)


def c7(cache):
    block, picked = _checks(cache, "aut-group", [
        "kernel of Aut(H-perp) on D(H-perp)", "kernel is simple",
        "generators with a^2 = b^3 = (ab)^11 = [a,babab]^2 = 1"])
    ok, why = _verdict(picked)
    if block["status"] == "inconclusive":
        return False, "search budget exceeded"
    if block["timing"]["seconds"] > 1800:
        return False, f"took {block['timing']['seconds']} s"
    return ok, why


def c8(cache):
    _, picked = _checks(cache, "picard", [
        "character of H-perp", "character of H-perp, classes sorted by element order"])
    return _verdict(picked)


def c9(cache):
    _, picked = _checks(cache, "nikulin")
    return _verdict(picked)


def c10(cache):
    _, picked = _checks(cache, "fixed-points")
    return _verdict(picked)


def c11(cache):
    block, picked = _checks(cache, "smoothness")
    if block["status"] == "inconclusive":
        return False, "inconclusive (stretch criterion)"
    return _verdict(picked)


CRITERIA = [
    (1, "invariant trivector: {P,R}-fixed space = span(sigma1, sigma2), G-fixed = span(sigma)", c1),
    (2, "character table orthonormal, wedge^3 character and multiplicities", c2),
    (3, "55 distinct rank-4 singular points, B-transitive, closed under a", c3),
    (4, "rank loci mod 23: (-1, 11), (0, 55), (6, 15)", c4),
    (5, "Picard lattice: det 22, q(H,H) = 22, q(H,D) = 2, signature (1,20)", c5),
    (6, "H-perp: rank 20, det 121, D = (Z/11)^2 matching the reference form", c6),
    (7, "kernel of Aut(H-perp) on D(H-perp): order 660, simple, presentation", c7),
    (8, "H-perp character = 2 V10'", c8),
    (9, "even lattice enumeration, discriminant forms, uniqueness and embedding conditions", c9),
    (10, "5 P-fixed coordinate 6-spaces in one R-orbit", c10),
    (11, "[STRETCH] X3 smooth mod 23 on all 120 charts", c11),
]


def _record(num, title, ok, why):
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {title}" + ("" if ok else f" [{why}]")
    RESULTS[num] = line
    print(line)
    return line


@pytest.mark.slow
@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn, cache):
    try:
        ok, why = fn(cache)
    except Exception as exc:  # recorded as a failing line, then re-raised
        _record(num, title, False, repr(exc))
        raise
    _record(num, title, ok, why)
    assert ok, why


def main() -> int:
    root = os.environ.get("DVSIGMA_TEST_CACHE") or tempfile.mkdtemp(prefix="dvsigma-acceptance-")
    cache = Cache(Path(root), Options())
    failed = 0
    for num, title, fn in CRITERIA:
        try:
            ok, why = fn(cache)
        except Exception as exc:
            ok, why = False, repr(exc)
        _record(num, title, ok, why)
        failed += (not ok) and num != 11
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
