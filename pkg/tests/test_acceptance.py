"""Acceptance criteria, one test each, at exact integer equality.

Every test appends a ``PASS``/``FAIL`` line that pytest prints in its
terminal summary.  Each criterion gets a fresh invariant cache so its runtime
budget is measured without help from earlier criteria.
"""

import itertools
import time

import pytest

from resdom import families as fam
from resdom.solvers import Predicate, Solver, naive_minimum_set
from resdom.verify import CorpusSpec, Oracle, Status, enumerate_connected_graphs, run_check

EXHAUSTIVE_6 = CorpusSpec("EXHAUSTIVE", n_max=6)
RANDOM_500 = CorpusSpec("RANDOM", n_min=2, n_max=12, count=500, probabilities=(0.2, 0.5), seed=2024)
ALL_LABELED_4_6 = CorpusSpec("EXHAUSTIVE", n_min=4, n_max=6, include_disconnected=True)
CONNECTED_4_6 = CorpusSpec("EXHAUSTIVE", n_min=4, n_max=6)


def _finish(log, number, title, rows, start, budget, extra_ok=True, note=""):
    elapsed = time.perf_counter() - start
    fails = [r for r in rows if r.status is Status.FAIL]
    passes = sum(r.status is Status.PASS for r in rows)
    ok = not fails and passes > 0 and extra_ok and elapsed < budget
    detail = f"{passes} pass / {len(fails)} fail / {len(rows) - passes - len(fails)} skipped rows"
    if fails:
        f = fails[0]
        detail += f"; first failure {f.check_id} {f.params}: {f.counterexample}"
    if note:
        detail += f"; {note}"
    line = (f"{'PASS' if ok else 'FAIL'} criterion {number:2d} {title}: {detail}; "
            f"{elapsed:.1f}s (budget {budget}s)")
    log.append(line)
    print(line)
    assert ok, line


def test_criterion_01_path_formula(acceptance_log):
    start = time.perf_counter()
    rows = run_check("CHK_PATH_FORMULA", CorpusSpec("FAMILY", n_max=16), (1, 2, 3, 4), oracle=Oracle())
    _finish(acceptance_log, 1, "path formula", rows, start, 5, extra_ok=len(rows) == 4 * 15)


def test_criterion_02_cycle_formula(acceptance_log):
    start = time.perf_counter()
    rows = run_check("CHK_CYCLE_FORMULA", CorpusSpec("FAMILY", n_max=16), (1, 2, 3), oracle=Oracle())
    special = sorted(r.params["n"] for r in rows if r.params.get("case") == "4k+2")
    _finish(acceptance_log, 2, "cycle formula", rows, start, 10,
            extra_ok=len(rows) == 3 * 14 + 3 and special == [6, 10, 14])


def test_criterion_03_cycle_resolving(acceptance_log):
    start = time.perf_counter()
    rows = run_check("CHK_CYCLE_RESOLVING", CorpusSpec("FAMILY", n_max=20), (1, 2, 3, 4),
                     oracle=Oracle())
    negatives = sorted(r.params["n"] for r in rows if not r.params["expect_resolving"])
    _finish(acceptance_log, 3, "cycle resolving pair", rows, start, 1,
            extra_ok=negatives == [6, 10, 14, 18])


BOUND_CHECKS = ("CHK_SANDWICH", "CHK_DIAM_COLLAPSE", "CHK_RADIUS_PLUS1", "CHK_NK_UPPER",
                "CHK_DIAM_UPPER", "CHK_LOWER_TRIO")


def test_criterion_04_bounds(acceptance_log):
    start = time.perf_counter()
    oracle = Oracle()
    rows = []
    for cid in BOUND_CHECKS:
        for corpus in (EXHAUSTIVE_6, RANDOM_500):
            rows += [r for r in run_check(cid, corpus, (1, 2, 3), oracle=oracle)
                     if r.params.get("corpus") != "t_gamma"]
    random_rows = [r for r in rows if r.params["corpus"] == "random"]
    covered = all(r.params["cases"] + r.params["skipped"] == 500 for r in random_rows)
    _finish(acceptance_log, 4, "sandwich and conditional bounds", rows, start, 180,
            extra_ok=covered and len(random_rows) == 6 * 3)


def test_criterion_05_t_gamma(acceptance_log):
    start = time.perf_counter()
    pairs = [(1, 2), (2, 2), (2, 3), (3, 2)]
    rows = [r for r in run_check("CHK_NK_UPPER", CorpusSpec("EXHAUSTIVE", n_max=1), (1,),
                                 oracle=Oracle(), t_gamma_pairs=pairs)
            if r.params.get("corpus") == "t_gamma"]
    _finish(acceptance_log, 5, "T_gamma equality", rows, start, 10, extra_ok=len(rows) == 4)


def test_criterion_06_characterizations(acceptance_log):
    start = time.perf_counter()
    oracle = Oracle()
    rows = run_check("CHK_CHAR1", EXHAUSTIVE_6, (1, 2, 3), oracle=oracle)
    for cid in ("CHK_CHAR_N2", "CHK_CHAR_N1", "CHK_LEM22"):
        rows += run_check(cid, EXHAUSTIVE_6, (2, 3), oracle=oracle)
    per_check = {cid: any(r.check_id == cid and r.status is Status.PASS for r in rows)
                 for cid in ("CHK_CHAR1", "CHK_CHAR_N2", "CHK_CHAR_N1", "CHK_LEM22")}
    _finish(acceptance_log, 6, "characterizations and the n-i equivalence", rows, start, 300,
            extra_ok=all(per_check.values()))


def test_criterion_07_triples(acceptance_log):
    start = time.perf_counter()
    rows = run_check("CHK_TRIPLES", EXHAUSTIVE_6, (2, 3), oracle=Oracle(), max_bg=3, max_alpha=6)
    # the infeasible set must be exactly {(1, g, g+1) : g >= 2} among in-range targets
    raised = set()
    for k, b, g, a in itertools.product((2, 3), range(1, 4), range(1, 4), range(1, 7)):
        if max(b, g) <= a <= b + g:
            try:
                fam.TripleTarget(k, b, g, a).validate()
            except fam.InfeasibleTripleError:
                raised.add((b, g, a))
    scans = [r for r in rows if "corpus" in r.params]
    _finish(acceptance_log, 7, "realizable triples", rows, start, 120,
            extra_ok=raised == {(1, 2, 3), (1, 3, 4)} and len(scans) == 12)


def test_criterion_08_extremal_order(acceptance_log):
    start = time.perf_counter()
    pairs = ((1, 2), (2, 2), (1, 3))
    rows = run_check("CHK_MAXORDER", EXHAUSTIVE_6, (1, 2, 3), oracle=Oracle(), pairs=pairs)
    orders = [fam.predicted_max_order(k, r) for k, r in pairs]
    certified = [r for r in rows if "r" in r.params]
    _finish(acceptance_log, 8, "extremal order", rows, start, 120,
            extra_ok=orders == [8, 18, 30] and len(certified) == 3)


def test_criterion_09_nordhaus_gaddum(acceptance_log):
    start = time.perf_counter()
    oracle = Oracle()
    rows = run_check("CHK_NG2", ALL_LABELED_4_6, (2,), oracle=oracle)
    rows += run_check("CHK_NGK", ALL_LABELED_4_6, (3,), oracle=oracle)
    rows += run_check("CHK_NG_CONNECTED", CONNECTED_4_6, (2, 3), oracle=oracle)
    note = ""
    if any(r.status is Status.FAIL for r in rows):
        note = ("P5 and its complement reach 2n-6 at n=5, k=3 but are missing from the "
                "stated upper-equality list; recorded as a finding, not masked")
    _finish(acceptance_log, 9, "Nordhaus-Gaddum", rows, start, 300, note=note)


def test_criterion_10_ld_relation(acceptance_log):
    start = time.perf_counter()
    rows = run_check("CHK_LD_DOMINATES", EXHAUSTIVE_6, (1, 2, 3), oracle=Oracle())
    _finish(acceptance_log, 10, "gamma_rk <= LD_k", rows, start, 120)


def test_criterion_11_oracle_equivalence(acceptance_log):
    start = time.perf_counter()
    mismatches = []
    cases = 0
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            solvers = (Solver(g, strategy="dense"), Solver(g, strategy="dfs"))
            for pred in Predicate:
                for k in ((None,) if pred is Predicate.RESOLVING else (1, 2, 3)):
                    want = naive_minimum_set(g, pred, k)
                    for s in solvers:
                        got = s.minimum(pred, k)
                        cases += 1
                        if (got.value, got.witness) != (want.value, want.witness):
                            mismatches.append((g, pred.name, k, s.strategy))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    line = (f"{'PASS' if ok else 'FAIL'} criterion 11 oracle equivalence: {cases} comparisons, "
            f"{len(mismatches)} mismatches; {elapsed:.1f}s (budget 60s)")
    acceptance_log.append(line)
    print(line)
    assert ok, mismatches[:3]


@pytest.mark.parametrize("n", [6])
def test_exhaustive_corpus_size(n):
    # the exhaustive slices really are all labeled connected graphs
    assert sum(1 for _ in enumerate_connected_graphs(n)) == 26704
