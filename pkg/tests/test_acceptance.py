"""The twelve acceptance criteria, each at its stated size and time budget.

Every test prints one PASS/FAIL line; the lines are repeated in the pytest
terminal summary. Run standalone with ``python tests/test_acceptance.py``.
"""
import time

import pytest

from kernexp import verify

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # running as a script
    ACCEPTANCE_LINES = []

SEED = 0

CRITERIA = [
    # (number, title, suite, kwargs, seconds or None)
    (1, "reciprocity, 1000 instances", verify.suite_reciprocity, {"count": 1000}, 5),
    (2, "exponential forms agree, 200 kernels, sizes <= 4", verify.suite_bangt_forms,
     {"count": 200, "max_atoms": 3, "max_size": 4}, 30),
    (3, "discretisation, 100 kernels, depth 3", verify.suite_discretisation,
     {"count": 100, "max_atoms": 3, "depth": 3}, 60),
    (4, "equaliser laws and symmetric-power forms", verify.suite_equaliser, {"count": 40}, 10),
    (5, "naturality of p_step, n <= 3", verify.suite_naturality, {"count": 12, "max_atoms": 3, "max_n": 3}, None),
    (6, "projection chain identity, n <= 4", verify.suite_pnk, {"count": 3, "max_n": 4}, None),
    (7, "averaged promotions and the coefficient", verify.suite_dbra, {"count": 100, "max_n": 4}, None),
    (8, "bipolar engine and Galois laws, 50 candidates", verify.suite_bipolar, {"count": 20, "candidates": 50}, None),
    (9, "small-instance lemmas, 50 each", verify.suite_lemmas, {"count": 50}, 60),
    (10, "restrictions of measures on the exponential", verify.suite_conhold, {"count": 20, "depth": 3}, None),
    (11, "generator families of the exponential", verify.suite_charlim, {"count": 15}, None),
    (12, "biproduct laws, 100 instances", verify.suite_biproduct, {"count": 100}, None),
]


def evaluate(number, title, suite, kwargs, budget):
    start = time.perf_counter()
    outcomes = suite(SEED, **kwargs)
    elapsed = time.perf_counter() - start
    failed = [o for o in outcomes if not o.passed]
    in_time = budget is None or elapsed < budget
    ok = not failed and in_time
    limit = f" < {budget}s" if budget is not None else ""
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} ({elapsed:.2f}s{limit}, seed {SEED})"
    return ok, line, failed, elapsed


@pytest.mark.parametrize("number,title,suite,kwargs,budget", CRITERIA, ids=[f"c{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, suite, kwargs, budget):
    ok, line, failed, elapsed = evaluate(number, title, suite, kwargs, budget)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not failed, "; ".join(f"{o.name}: {o.detail}" for o in failed)
    assert budget is None or elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line, failed, _ in results:
        print(line)
        for o in failed:
            print(f"    {o.name}: {o.detail}")
    raise SystemExit(0 if all(r[0] for r in results) else 1)
