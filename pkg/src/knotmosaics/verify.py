"""Cross-checks between the brute-force oracle and the algebraic engines.

Each check compares two independently computed values and reports them as
strings, so a mismatch report shows the offending numbers directly.  The
``quick`` level runs in seconds; ``full`` extends the ranges and takes on
the order of a minute.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matrixfree, oracle, transfer

__all__ = ["CheckResult", "run_checks", "report_dict"]


@dataclass
class CheckResult:
    name: str
    ok: bool
    expected: str
    got: str


def _check(results, name, expected, got):
    results.append(CheckResult(name, expected == got, str(expected), str(got)))


def run_checks(level="quick", budget=None):
    """Run the verification battery; returns one :class:`CheckResult` per check.

    Raises :class:`oracle.BudgetExceededError` if the oracle budget is too
    small for the requested level, which callers must report separately
    from a value mismatch.
    """
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    full = level == "full"
    if budget is None:
        budget = oracle.DEFAULT_BUDGET
    results: list[CheckResult] = []

    for p in range(1, 6 if full else 4):
        tally = oracle.oracle_split_matrices(p, budget)
        split = transfer.build_split(p)
        _check(results, f"split_p{p}_x", split.x.rows, tally.as_split().x.rows)
        _check(results, f"split_p{p}_o", split.o.rows, tally.as_split().o.rows)

    limit = 6 if full else 5
    for p in range(1, limit):
        for q in range(1, limit + 1 - p):
            empirical = oracle.oracle_state_matrix(p, q, budget)
            algebraic = transfer.state_matrix(p, q)
            _check(results, f"state_matrix_p{p}_q{q}", algebraic.rows, empirical.rows)

    knot_sizes = [(2, 2), (2, 3), (3, 3)]
    if full:
        knot_sizes.append((3, 4))
    for m, n in knot_sizes:
        _check(
            results,
            f"knot_count_{m}_{n}",
            transfer.count_dense(m, n),
            oracle.oracle_knot_count(m, n, budget),
        )

    m_max, n_max = (10, 12) if full else (6, 8)
    for m in range(2, m_max + 1):
        for n in range(2, n_max + 1):
            _check(
                results,
                f"engines_m{m}_n{n}",
                transfer.count_dense(m, n),
                matrixfree.count_matrixfree(m, n),
            )

    return results


def report_dict(level, results):
    """JSON-ready report of a check run."""
    failures = [r for r in results if not r.ok]
    return {
        "level": level,
        "passed": len(results) - len(failures),
        "failed": len(failures),
        "checks": [
            {"name": r.name, "status": "ok" if r.ok else "mismatch",
             "expected": r.expected, "got": r.got}
            for r in results
        ],
    }
