"""Exit criteria. Each test prints one PASS/FAIL line; run with ``-s`` or read the summary.

Tolerances and budgets are fixed here and must not be relaxed.
"""

import io
import math
import time
from contextlib import redirect_stdout

import numpy as np
import pytest

from dematel_todim import casestudy
from dematel_todim.cfcs import cfcs_cell
from dematel_todim.cli import main
from dematel_todim.dematel import initial_weights, run_dematel, total_relation
from dematel_todim.errors import SingularSystem
from dematel_todim.fuzzy import TFN
from dematel_todim.matrix import DirectRelationMatrix
from dematel_todim.todim import TodimInput, phi, run_todim

WEIGHT_TOL = 5e-4
FINAL_TOL = 6e-4
FORMULA_BUDGET_S = 0.010
END_TO_END_BUDGET_S = 1.0
CASES = 1000
HAND_TOL = 5e-4

RESULTS = []


@pytest.fixture
def verdict(request, capsys):
    def record(ok: bool, detail: str):
        line = f"[{'PASS' if ok else 'FAIL'}] {request.node.name}: {detail}"
        RESULTS.append(line)
        with capsys.disabled():
            print("\n" + line)
        assert ok, detail

    return record


def _best_of(fn, repeats=5):
    best, out = math.inf, None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def test_criterion_1_initial_weight_regression(verdict):
    table = casestudy.published_dematel()
    elapsed, (w, rank) = _best_of(lambda: initial_weights(table.r, table.c))
    dev = np.abs(w - table.weights)
    within = int(np.sum(dev <= WEIGHT_TOL))
    ranks = int(np.sum(rank == table.rank))
    ok = within == 17 and ranks == 17 and elapsed < FORMULA_BUDGET_S
    verdict(ok, f"{within}/17 weights within {WEIGHT_TOL}, {ranks}/17 ranks, {elapsed * 1e3:.3f} ms")


def test_criterion_2_final_weight_relation(verdict):
    table = casestudy.published_todim()
    assert table.final_weights[0] == 0.0607

    def rebuild():
        loss = table.xi
        return (1.0 - loss) / (len(loss) - 1)

    elapsed, final = _best_of(rebuild)
    dev = np.abs(final - table.final_weights)
    within = int(np.sum(dev <= FINAL_TOL))
    c5 = dev[table.ids.index("C5")]
    ok = within >= 16 and c5 <= FINAL_TOL and elapsed < FORMULA_BUDGET_S
    verdict(ok, f"{within}/17 within {FINAL_TOL} (C5 deviates {c5:.2e}), {elapsed * 1e3:.3f} ms")


def test_criterion_3_verify_paper_end_to_end(verdict):
    buf = io.StringIO()
    t0 = time.perf_counter()
    with redirect_stdout(buf):
        code = main(["verify-paper", "--theta", "1"])
    elapsed = time.perf_counter() - t0
    out = buf.getvalue()
    rep = casestudy.verify_paper(theta=1.0)
    sr, sc = rep.dematel.r.sum(), rep.dematel.c.sum()
    conserved = abs(sr - sc) <= 1e-9 * abs(sr)
    has_rho = (
        "DEMATEL rank vs published DEMATEL rank: spearman" in out
        and "hybrid rank vs published hybrid rank: spearman" in out
    )
    has_notes = "Notes" in out and "62.5653" in out
    ok = code == 0 and elapsed < END_TO_END_BUDGET_S and has_rho and has_notes and conserved
    rho = {c.name: c.spearman for c in rep.comparisons}
    verdict(
        ok,
        f"{elapsed:.3f} s, rho(DEMATEL)={rho['DEMATEL rank vs published DEMATEL rank']:+.4f}, "
        f"rho(hybrid)={rho['hybrid rank vs published hybrid rank']:+.4f}, |sum r - sum c|={abs(sr - sc):.1e}",
    )


def _random_direct(rng):
    n = int(rng.integers(2, 21))
    a = rng.uniform(0, 1, (n, n))
    if rng.uniform() < 0.3:
        a *= rng.uniform(size=(n, n)) < 0.5
    np.fill_diagonal(a, 0)
    if not a.any():
        a[0, 1] = 1.0
    return a


def _series(d, terms):
    term, total = d.copy(), d.copy()
    for _ in range(terms - 1):
        term = term @ d
        total += term
    return total


def test_criterion_4_property_batch(verdict):
    """Seeded batch of every randomized invariant, CASES draws each."""
    rng = np.random.default_rng(4)
    failures = {}
    counts = {}

    def check(name, ok):
        counts[name] = counts.get(name, 0) + 1
        if not ok:
            failures[name] = failures.get(name, 0) + 1

    t0 = time.perf_counter()
    # DEMATEL
    done = 0
    while done < CASES:
        a = _random_direct(rng)
        try:
            res = run_dematel(a)
        except SingularSystem:
            continue
        done += 1
        d, t = res.normalized, res.total
        check("T = D + DT", np.max(np.abs(t - d - d @ t)) <= 1e-10)
        total = t.sum()
        check("sum r = sum c", abs(res.r.sum() - res.c.sum()) <= 1e-9 * abs(total))
        alpha = float(np.exp(rng.uniform(-5, 5)))
        scaled = run_dematel(alpha * a)
        separated = np.min(np.diff(np.sort(res.weights))) > 1e-12
        check(
            "DEMATEL weights scale-invariant",
            np.max(np.abs(scaled.weights - res.weights)) <= 1e-12
            and (not separated or np.array_equal(scaled.rank, res.rank)),
        )
        p = rng.permutation(len(a))
        perm = run_dematel(a[np.ix_(p, p)])
        check(
            "DEMATEL permutation equivariance",
            np.max(np.abs(perm.weights - res.weights[p])) <= 1e-12
            and (not separated or np.array_equal(perm.rank, res.rank[p])),
        )

    # series oracle: 50 terms where they suffice, converged series up to row sum 0.95
    for _ in range(CASES):
        a = _random_direct(rng)
        bound = float(rng.uniform(0.01, 0.95))
        d = a / a.sum(axis=1).max() * bound
        t = total_relation(d)
        terms = max(1, math.ceil(math.log(1e-13 * (1 - bound)) / math.log(bound)))
        check("Neumann series agreement", np.max(np.abs(t - _series(d, terms))) <= 1e-8)
        d = d / bound * float(rng.uniform(0.01, 0.6))
        check("50-term Neumann agreement", np.max(np.abs(total_relation(d) - _series(d, 50))) <= 1e-8)

    # CFCS
    for _ in range(CASES):
        k = int(rng.integers(1, 11))
        cell = [TFN(*np.sort(rng.uniform(0, 1, 3))) for _ in range(k)]
        value, trace = cfcs_cell(cell)
        lo, hi = min(c.l for c in cell), max(c.r for c in cell)
        check(
            "CFCS BNP bounds",
            all(lo - 1e-12 <= b <= hi + 1e-12 for b in trace.bnp) and lo - 1e-12 <= value <= hi + 1e-12,
        )
        m, half = rng.uniform(-5, 5), rng.uniform(1e-6, 5)
        check("CFCS symmetric midpoint", abs(cfcs_cell([TFN(m - half, m, m + half)])[0] - m) <= 1e-12)
        t, s = rng.uniform(-10, 10), float(np.exp(rng.uniform(-5, 5)))
        shifted = cfcs_cell([TFN(c.l + t, c.m + t, c.r + t) for c in cell])[0]
        scaled = cfcs_cell([TFN(c.l * s, c.m * s, c.r * s) for c in cell])[0]
        check("CFCS translation equivariance", abs(shifted - (value + t)) <= 1e-12)
        check("CFCS scale equivariance", abs(scaled - value * s) <= 1e-12)
        order = rng.permutation(k)
        check("CFCS expert order", cfcs_cell([cell[i] for i in order])[0] == value)

    # TODIM; degenerate draws still count for the diagonal check
    while counts.get("sum loss = sum final = 1", 0) < CASES:
        mm, n = int(rng.integers(2, 21)), int(rng.integers(1, 21))
        x = rng.uniform(0, 1, (mm, n))
        if rng.uniform() < 0.5:
            x = np.round(x * 4) / 4
        w = rng.uniform(0.05, 1, n)
        w /= w.sum()
        theta = float(rng.uniform(0.1, 10))
        res = run_todim(TodimInput(x, w, theta=theta))
        check("delta(i,i) = 0", np.all(np.diag(res.dominance) == 0.0))
        if not res.degenerate:
            check("xi in [0,1], min 0, max 1", res.xi.min() == 0.0 and res.xi.max() == 1.0)
            check(
                "sum loss = sum final = 1",
                abs(res.loss_share.sum() - 1) <= 1e-12 and abs(res.final_weights.sum() - 1) <= 1e-12,
            )
        c = int(rng.integers(0, n))
        a_, b_ = sorted(rng.choice(10**6, 2, replace=False) / 1e5)
        mags = [abs(phi(res.relative_weights, c, a_, b_, th)) for th in (0.5, 1.0, 2.0, 5.0)]
        check("loss magnitude decreasing in theta", all(u > v for u, v in zip(mags, mags[1:])))
        p = rng.permutation(mm)
        perm = run_todim(TodimInput(x[p], w, theta=theta, reference=res.reference))
        separated = np.min(np.diff(np.sort(res.dominance_sums))) > 1e-9
        check(
            "TODIM permutation equivariance",
            np.max(np.abs(perm.dominance - res.dominance[np.ix_(p, p)])) <= 1e-12
            and np.max(np.abs(perm.xi - res.xi[p])) <= 1e-12
            and np.max(np.abs(perm.final_weights - res.final_weights[p])) <= 1e-12
            and (not separated or np.array_equal(perm.rank, res.rank[p])),
        )
    elapsed = time.perf_counter() - t0

    short = {k: v for k, v in counts.items() if v < CASES}
    ok = not failures and not short
    detail = f"{len(counts)} invariants, min {min(counts.values())} cases, {elapsed:.1f} s"
    if failures:
        detail += f", failures: {failures}"
    if short:
        detail += f", under-sampled: {short}"
    verdict(ok, detail)


def _inverse_2x2(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    return np.array([[d, -b], [-c, a]]) / det


def test_criterion_5_hand_oracles(verdict):
    # DEMATEL chain by explicit 2x2 inversion
    a = np.array([[0.0, 2.0], [1.0, 0.0]])
    d = a / max(a.sum(axis=1))
    t_oracle = d @ _inverse_2x2(np.eye(2) - d)
    w_oracle = (t_oracle.sum(axis=1) + t_oracle.sum(axis=0)) / (2 * t_oracle.sum())
    assert np.allclose(t_oracle, [[1, 2], [1, 1]]) and np.allclose(w_oracle, [0.5, 0.5])
    dem = run_dematel(DirectRelationMatrix(a))
    dem_ok = np.max(np.abs(dem.total - t_oracle)) <= HAND_TOL and np.max(np.abs(dem.weights - w_oracle)) <= HAND_TOL

    # TODIM chain by direct scalar evaluation of the gain/loss terms
    w_rc = (1.0, 0.4 / 0.6)
    s = sum(w_rc)
    d12 = math.sqrt(w_rc[0] * 1 / s) - math.sqrt(s * 1 / w_rc[1])
    d21 = -math.sqrt(s * 1 / w_rc[0]) + math.sqrt(w_rc[1] * 1 / s)
    assert abs(d12 - -0.8065) <= HAND_TOL and abs(d21 - -0.6585) <= HAND_TOL
    tod = run_todim(TodimInput([[1, 0], [0, 1]], [0.6, 0.4], theta=1.0))
    tod_ok = (
        abs(tod.dominance[0, 1] - d12) <= HAND_TOL
        and abs(tod.dominance[1, 0] - d21) <= HAND_TOL
        and tod.rank.tolist() == [2, 1]
    )
    verdict(
        dem_ok and tod_ok,
        f"T={np.round(dem.total, 6).tolist()}, w={np.round(dem.weights, 6).tolist()}, "
        f"delta12={tod.dominance[0, 1]:.4f}, delta21={tod.dominance[1, 0]:.4f}, rank={tod.rank.tolist()}",
    )
