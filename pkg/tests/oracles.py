"""Independent reference computations used by the test suite.

Everything in this module is deliberately naive and shares no code with
the package, so agreement between the two is evidence of correctness
rather than a tautology.
"""

from __future__ import annotations

import contextlib
import io
from fractions import Fraction
from itertools import combinations


def fraction_rank(rows) -> int:
    """Rank of an integer matrix by plain Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / lead[col]
                m[r] = [a - f * b for a, b in zip(m[r], lead)]
        rank += 1
        if rank == len(m):
            break
    return rank


def fraction_determinant(matrix) -> int:
    """Determinant of a square integer matrix over Fraction."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        lead = m[col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / lead[col]
                m[r] = [a - f * b for a, b in zip(m[r], lead)]
    assert det.denominator == 1
    return int(det)


def naive_members(generators, bound: int) -> set[int]:
    """Members of the additive closure of the generators, up to bound."""
    reached = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for g in generators:
            w = v + g
            if w <= bound and w not in reached:
                reached.add(w)
                frontier.append(w)
    return reached


def count_gap_sets(genus: int) -> int:
    """Number of numerical semigroups of the given genus, by brute force.

    Every gap of a genus-g semigroup is at most 2g - 1, so it suffices to
    test every g-subset of {1, ..., 2g - 1} for an additively closed
    complement.
    """
    if genus == 0:
        return 1
    top = 2 * genus - 1
    count = 0
    for gaps in combinations(range(1, top + 1), genus):
        gap_set = set(gaps)
        closed = True
        for a in range(1, top):
            if a in gap_set:
                continue
            for b in range(a, top + 1 - a):
                if b not in gap_set and a + b in gap_set:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            count += 1
    return count


def brute_force_minor_degrees(pres, limit: int) -> set[int]:
    """Degrees below limit of nonvanishing maximal derivative minors.

    Enumerates every subset of relation rows of the right size and tests
    the determinant over Fraction; only usable for small presentations.
    """
    skip = pres.gen_tuple.has_x
    n_vars = len(pres.gen_tuple.var_weights)
    col_sum = sum(pres.gen_tuple.var_weights)
    rows = [(rel.degree, rel.coefficients(skip_first=skip))
            for rel in pres.relations]
    out = set()
    for subset in combinations(rows, n_vars):
        degree = sum(d for d, _ in subset) - col_sum
        if degree >= limit:
            continue
        if fraction_determinant([list(c) for _, c in subset]) != 0:
            out.add(degree)
    return out


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Invoke the command line entry point in process.

    Returns (exit code, stdout, stderr) exactly as a shell caller would
    see them.
    """
    from curvetorsion.cli import main

    out, err = io.StringIO(), io.StringIO()
    code = 0
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            main(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 0
    return code, out.getvalue(), err.getvalue()
