"""Acceptance suite: one test per criterion, one printed verdict line each.

Every expected value is exact (integer Betti equality, exact torsion);
stated wall-clock budgets are asserted too. Run with ``pytest -s`` to see
the verdict lines as they happen.
"""

import random
import time

import pytest

from gridhomology import (
    Raw,
    SimplicialComplex,
    delta_graph,
    descriptor_euler,
    equals_complex,
    fold_reduce,
    grid_graph,
    independence_complex,
    line_graph,
    matching_complex,
    predict,
    reduced_euler_characteristic,
    reduced_homology,
    smith_normal_form,
    boundary_matrix,
    SparseIntMatrix,
)
from gridhomology.cli import run_step_checks, verify_instance

from oracles import (
    brute_betti,
    brute_matchings,
    dd_invariant_factors,
    random_graph,
)


def verdict(num: int, passed: bool, desc: str):
    line = f"[criterion {num}] {'PASS' if passed else 'FAIL'}: {desc}"
    print(line, flush=True)
    assert passed, line


# instances shared between the homology criteria and the Euler criterion:
# (m, n) -> (reduced Euler characteristic of the computed complex, HomologyResult)
_VERIFIED: dict = {}


def _compute_instance(m, n, reduce=False):
    g = delta_graph(m, n)
    if reduce:
        trace = fold_reduce(g)
        if trace.is_contractible:
            from gridhomology import HomologyResult

            _VERIFIED[(m, n)] = (0, HomologyResult({}, {}))
            return _VERIFIED[(m, n)]
        g = trace.final
    comp = independence_complex(g)
    res = reduced_homology(comp)
    _VERIFIED[(m, n)] = (reduced_euler_characteristic(comp), res)
    return _VERIFIED[(m, n)]


def test_criterion_1_base_cases():
    t0 = time.perf_counter()
    ok = True
    for m in (2, 3, 4):
        expected_by_n = {
            1: {},
            2: {0: 1},
            3: ({1: 2} if m == 2 else {1: 1, m - 1: 1}),
            4: {m: 1},
        }
        for n in (1, 2, 3, 4):
            _, res = _compute_instance(m, n)
            ok = ok and res.betti == expected_by_n[n] and res.torsion == {}
    elapsed = time.perf_counter() - t0
    verdict(1, ok and elapsed < 10, f"base cases m in 2..4, n in 1..4 exact ({elapsed:.1f}s)")


def test_criterion_2_single_row_family():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 11):
        expected = {} if n % 2 else {n // 2 - 1: 1}
        _, res = _compute_instance(1, n)
        ok = ok and res.betti == expected and res.torsion == {}
    elapsed = time.perf_counter() - t0
    verdict(2, ok and elapsed < 10, f"m=1 parity family n in 1..10 exact ({elapsed:.1f}s)")


def test_criterion_3_recursion_at_desk_scale():
    t0 = time.perf_counter()
    ok = True
    for m, ns in ((2, range(5, 10)), (3, range(5, 8))):
        for n in ns:
            rep = verify_instance(m, n, reduce=True)
            ok = ok and rep.status == "ok" and rep.match is True and rep.torsion_free is True
            _compute_instance(m, n, reduce=True)

    # the two headline values, against brute-force homology of the matching complexes
    for n, expected in ((5, {2: 2}), (6, {3: 5})):
        brute = brute_betti(brute_matchings(grid_graph(n, 2)))
        _, res = _compute_instance(2, n)
        ok = ok and brute == expected == res.betti

    elapsed = time.perf_counter() - t0
    verdict(
        3,
        ok and elapsed < 300,
        f"recursion verified for m=2 n=5..9 and m=3 n=5..7 with reduce, "
        f"matching-complex values brute-confirmed ({elapsed:.1f}s)",
    )


def test_criterion_4_matching_equals_independence_of_line_graph():
    ok = True
    for n in range(2, 9):
        g = grid_graph(n, 2)
        mc = matching_complex(g)
        ic = independence_complex(line_graph(g))
        ok = ok and equals_complex(mc, ic, {v: v for v in mc.labels})
    verdict(4, ok, "matching complex equals independence of line graph, n in 2..8")


def test_criterion_5_step_pipeline():
    ok = True
    failing = []
    for m in (2, 3):
        for n in (5, 6, 7):
            report = run_step_checks(m, n)
            if not report["all_passed"]:
                failing.append((m, n, [s["name"] for s in report["steps"] if not s["passed"]]))
            ok = ok and report["all_passed"]
    verdict(5, ok, f"deletion pipeline step checks, m in 2..3, n in 5..7 {failing or ''}")


def test_criterion_6_fold_invariance():
    t0 = time.perf_counter()
    rng = random.Random(60616)
    ok = True
    count = 0
    for p in (0.2, 0.4, 0.6):
        for _ in range(70):
            g = random_graph(rng, rng.randint(1, 12), p)
            before = reduced_homology(independence_complex(g))
            trace = fold_reduce(g)
            if trace.is_contractible:
                same = before.betti == {} and before.torsion == {}
            else:
                same = reduced_homology(independence_complex(trace.final)) == before
            ok = ok and same
            count += 1
    elapsed = time.perf_counter() - t0
    verdict(6, ok and count >= 200 and elapsed < 120,
            f"fold invariance on {count} random graphs ({elapsed:.1f}s)")


def test_criterion_7_snf_against_determinantal_divisors():
    t0 = time.perf_counter()
    rng = random.Random(70707)
    ok = True
    for _ in range(500):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        dense = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        entries = {(i, j): v for i, row in enumerate(dense) for j, v in enumerate(row) if v}
        got = smith_normal_form(SparseIntMatrix(m, n, entries))
        expected = dd_invariant_factors(dense)
        ok = ok and list(got.invariant_factors) == expected and got.rank == len(expected)
    elapsed = time.perf_counter() - t0
    verdict(7, ok and elapsed < 30, f"500 Smith forms match the minor-gcd oracle ({elapsed:.1f}s)")


def test_criterion_8_euler_consistency():
    assert _VERIFIED, "homology criteria must populate the instance table first"
    ok = True
    for (m, n), (chi, res) in sorted(_VERIFIED.items()):
        alt = sum((1 if d % 2 == 0 else -1) * b for d, b in res.betti.items())
        ok = ok and descriptor_euler(predict(m, n)) == chi == alt
    verdict(8, ok, f"Euler characteristics agree three ways on {len(_VERIFIED)} instances")


def test_criterion_9_torsion_detector_live():
    triangles = [
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
        (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5),
    ]
    labs = [Raw(f"p{i}") for i in range(6)]
    rp2 = SimplicialComplex.from_facets([tuple(labs[i] for i in t) for t in triangles])
    res = reduced_homology(rp2)
    verdict(
        9,
        res.torsion == {1: [2]} and res.betti == {},
        "projective-plane fixture reports torsion (2) in dimension 1",
    )
