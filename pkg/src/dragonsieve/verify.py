"""Verification sweeps wiring the division-free constructions to their oracles."""

from __future__ import annotations

import time

from .dragons import check_heighway_equivalence, check_levy_theorem
from .fractal import (
    aperiodicity_witness,
    check_self_containment,
    decimate_terms,
    reconstruct_odd_part,
)
from .render import TurnProgram, path_equal, reduce_mod, trace
from .reports import CheckReport, Failure
from .sieve import primes, read_factorization, run_sieve
from .valuations import (
    generate_dci,
    odd_even_parts,
    primes_by_trial_division,
)

VALUATION_PRIMES = (2, 3, 5, 7, 11, 13)
FRACTAL_PRIMES = (2, 3, 5, 7)


def _timed(report: CheckReport, started: float) -> CheckReport:
    report.wall_time = time.perf_counter() - started
    return report


def verify_sieve(limit: int) -> list[CheckReport]:
    t0 = time.perf_counter()
    table = run_sieve(limit)
    expected = primes_by_trial_division(limit)
    got = primes(table)
    failures = []
    if got != expected:
        bad = next(i for i, (a, b) in enumerate(zip(got + [None], expected + [None])) if a != b)
        failures.append(Failure(bad + 1, expected[bad] if bad < len(expected) else None,
                                got[bad] if bad < len(got) else None))
    reports = [_timed(CheckReport("sieve-primes-match-trial-division", len(expected), failures), t0)]

    t0 = time.perf_counter()
    failures = []
    for n in range(2, limit + 1):
        value = read_factorization(table, n).value()
        if value != n:
            failures.append(Failure(n, n, value))
            break
    reports.append(_timed(
        CheckReport("factorization-reconstructs-n", max(limit - 1, 0), failures), t0))
    return reports


def verify_valuations(limit: int, bases=VALUATION_PRIMES) -> list[CheckReport]:
    reports = []
    for p in bases:
        t0 = time.perf_counter()
        terms = generate_dci(p, limit).terms
        failures = []
        for n in range(1, limit + 1):
            # Inline repeated-division oracle; the generated side never divides.
            k, nn = 0, n
            while nn % p == 0:
                nn //= p
                k += 1
            if terms[n - 1] != k:
                failures.append(Failure(n, k, terms[n - 1]))
                break
        reports.append(_timed(
            CheckReport(f"dci-matches-division-oracle-p{p}", limit, failures), t0))
    return reports


def verify_fractal(limit: int, max_period: int) -> list[CheckReport]:
    reports = []
    for p in FRACTAL_PRIMES:
        t0 = time.perf_counter()
        seq = generate_dci(p, limit)
        count = limit // (p + 1)
        report = check_self_containment(seq, count)
        report.name = f"decimation-self-containment-p{p}"
        reports.append(_timed(report, t0))

        # Second decimation level: the decimated output is itself the sequence.
        t0 = time.perf_counter()
        once = decimate_terms(seq.terms, p)
        twice = decimate_terms(once, p)
        failures = [
            Failure(i + 1, seq.terms[i], twice[i])
            for i in range(len(twice))
            if twice[i] != seq.terms[i]
        ]
        reports.append(_timed(
            CheckReport(f"nested-decimation-p{p}", len(twice), failures), t0))

    for p in (2, 3):
        t0 = time.perf_counter()
        terms = generate_dci(p, limit).terms
        failures = []
        for q in range(1, max_period + 1):
            if aperiodicity_witness(terms, q) is None:
                failures.append(Failure(q, "witness", None))
        reports.append(_timed(
            CheckReport(f"aperiodicity-witnesses-p{p}", max_period, failures), t0))

    t0 = time.perf_counter()
    rebuilt = reconstruct_odd_part(limit)
    failures = []
    for n in range(1, limit + 1):
        want = odd_even_parts(n).odd_part
        if rebuilt[n - 1] != want:
            failures.append(Failure(n, want, rebuilt[n - 1]))
            break
    reports.append(_timed(
        CheckReport("odd-part-reconstruction", limit, failures), t0))

    t0 = time.perf_counter()
    failures = []
    for n in range(1, limit + 1):
        parts = odd_even_parts(n)
        if parts.even_part * parts.odd_part != n or parts.odd_part % 2 == 0:
            failures.append(Failure(n, n, parts.even_part * parts.odd_part))
            break
    reports.append(_timed(
        CheckReport("odd-even-decomposition-identity", limit, failures), t0))
    return reports


def verify_levy(iterations: int) -> list[CheckReport]:
    t0 = time.perf_counter()
    return [_timed(check_levy_theorem(iterations), t0)]


def verify_heighway(iterations: int) -> list[CheckReport]:
    t0 = time.perf_counter()
    return [_timed(check_heighway_equivalence(iterations), t0)]


def verify_render(limit: int) -> list[CheckReport]:
    reports = []
    terms = tuple(generate_dci(2, limit).terms)

    t0 = time.perf_counter()
    full = trace(TurnProgram(terms, 90))
    reduced = trace(TurnProgram(tuple(reduce_mod(terms, 4)), 90))
    failures = [] if path_equal(full, reduced, 0.0) else [Failure(1, "equal paths", "mismatch")]
    reports.append(_timed(
        CheckReport("mod4-trace-invariance-90deg", len(terms), failures), t0))

    for angle in (120, 135, 60):
        t0 = time.perf_counter()
        path = trace(TurnProgram(terms, angle))
        failures = []
        for i in range(len(path.vertices) - 1):
            (x0, y0), (x1, y1) = path.vertices[i], path.vertices[i + 1]
            d = ((x1 - x0) ** 2 + (y1 - y0) ** 2) ** 0.5
            if abs(d - 1.0) > 1e-9:
                failures.append(Failure(i + 1, 1.0, d))
                break
        reports.append(_timed(
            CheckReport(f"unit-segment-length-{angle}deg", len(terms), failures), t0))

    t0 = time.perf_counter()
    failures = []
    for k in range(1, 101):
        prefix = terms[: 1 + (k * 37) % min(len(terms), 500)]
        path = trace(TurnProgram(prefix, 90))
        if len(path.vertices) != len(prefix) + 1:
            failures.append(Failure(k, len(prefix) + 1, len(path.vertices)))
    reports.append(_timed(CheckReport("vertex-count-law", 100, failures), t0))
    return reports
