"""Monomial fractional ideals of a numerical-semigroup ring.

A fractional ideal stable under the semigroup action is determined by its
set of exponent values: a subset of the integers, bounded below, closed
under adding semigroup members, and containing every integer from some
tail onward.  All the dualizing objects of this package (complementary
module, inverses, the two differents) are of this shape, so identities
between them reduce to finite set comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import integer_rank
from .presentation import Presentation, _tuple_semigroup
from .semigroup import NumericalSemigroup


class IdealError(ValueError):
    """Raised for value sets that are not semigroup-stable or comparable."""


@dataclass(frozen=True)
class ValueSet:
    """Value set of a monomial fractional ideal.

    members lists the values below tail_start; every integer at or above
    tail_start belongs to the set.  Construct through make_value_set,
    which normalizes the tail and checks stability.
    """

    ambient: NumericalSemigroup
    members: tuple[int, ...]
    tail_start: int

    @property
    def min_value(self) -> int:
        return self.members[0] if self.members else self.tail_start

    def contains(self, v: int) -> bool:
        return v >= self.tail_start or v in self.members

    def values_up_to(self, bound: int) -> list[int]:
        out = [m for m in self.members if m < bound]
        out.extend(range(self.tail_start, bound))
        return out

    def __str__(self) -> str:
        shown = ", ".join(str(m) for m in self.members)
        sep = ", " if shown else ""
        return "{" + shown + sep + str(self.tail_start) + "+}"


def make_value_set(ambient: NumericalSemigroup, values, tail_start: int) -> ValueSet:
    """Normalize and validate a value set.

    values are the known members below tail_start; the tail is shrunk
    back over any run of consecutive members ending right before it.
    """
    below = sorted({v for v in values if v < tail_start})
    while below and below[-1] == tail_start - 1:
        tail_start -= 1
        below.pop()
    vs = ValueSet(ambient, tuple(below), tail_start)
    top = tail_start + ambient.conductor
    present = set(vs.values_up_to(top))
    for v in vs.members:
        for gen in ambient.min_generators:
            if v + gen < top and v + gen not in present:
                raise IdealError(f"value set not stable: {v} + {gen} missing")
    return vs


def value_set_of(S: NumericalSemigroup) -> ValueSet:
    """The ring itself as a value set."""
    return make_value_set(S, S.members(S.conductor), S.conductor)


def complementary_module(S: NumericalSemigroup) -> ValueSet:
    """Trace dual of the ring over the subring generated by its parameter.

    The ring is free over k[[t^q]] with one basis monomial per residue
    class mod q, of value w(c) = least member in class c.  The trace of
    t^j vanishes unless q divides j, so t^v lies in the dual exactly when
    v + m >= 0 for every member m in the class of -v; the sharpest m is
    w((-v) mod q), giving the closed form v >= -w((-v) mod q).  Both the
    closed form and the defining condition are evaluated on a window
    around zero and compared, so neither route is trusted alone.
    """
    q = S.multiplicity
    apery = S.apery_set(q)
    members = [v for v in range(-max(apery), 0) if v >= -apery[(-v) % q]]
    vs = make_value_set(S, members, 0)
    window = q + S.conductor
    check_members = S.members(window + q)
    for v in range(-window, window):
        direct = all(v + m >= 0 for m in check_members if (v + m) % q == 0)
        if direct != vs.contains(v):
            raise IdealError(f"complementary module self-check failed at {v}")
    return vs


def inverse(V: ValueSet) -> ValueSet:
    """Value set of {m : m + V inside the ring}."""
    S = V.ambient
    cond = S.conductor
    tail = cond - V.min_value
    lo = max(-V.min_value, cond - V.tail_start)
    finite_part = V.values_up_to(V.tail_start)
    members = []
    for m in range(lo, tail):
        if all(S.contains(m + v) for v in finite_part if m + v < cond):
            members.append(m)
    return make_value_set(S, members, tail)


def fitting_minor_degrees(pres: Presentation) -> tuple[int, ...]:
    """Degrees of the nonvanishing maximal minors of the derivative matrix,
    up to one conductor above the least one.

    The matrix has one row per relation and one column per
    non-distinguished variable; entry (r, i) is the integer exponent
    difference times a single power of the uniformizer, so each maximal
    minor is an integer determinant times the uniformizer to the power
    sum(chosen relation degrees) - sum(variable weights).  A minor is
    nonzero exactly when its rows are linearly independent, and
    independent subsets form a matroid: the greedy algorithm yields the
    least degree, and degrees at least one conductor higher add nothing
    to the generated ideal, so a pruned search over the window suffices.
    """
    n_vars = len(pres.gen_tuple.var_weights)
    skip = pres.gen_tuple.has_x
    col_sum = sum(pres.gen_tuple.var_weights)
    rows = sorted((rel.degree, list(rel.coefficients(skip_first=skip)))
                  for rel in pres.relations)
    degrees = [d for d, _ in rows]

    basis: list[list[int]] = []
    base_sum = 0
    for d, vec in rows:
        if len(basis) == n_vars:
            break
        if integer_rank(basis + [vec]) > len(basis):
            basis.append(vec)
            base_sum += d
    if len(basis) < n_vars:
        raise IdealError("all maximal minors vanish")
    least = base_sum - col_sum

    conductor = _tuple_semigroup(pres.gen_tuple.weights).conductor
    if conductor == 0:
        return (least,)
    limit = base_sum + conductor
    found: set[int] = set()

    def search(start: int, chosen: list[list[int]], total: int,
               need: int) -> None:
        if need == 0:
            found.add(total - col_sum)
            return
        for i in range(start, len(rows) - need + 1):
            d = degrees[i]
            if total + d + sum(degrees[i + 1:i + need]) >= limit:
                break
            vec = rows[i][1]
            if integer_rank(chosen + [vec]) > len(chosen):
                search(i + 1, chosen + [vec], total + d, need - 1)

    search(0, [], 0, n_vars)
    found.add(least)
    return tuple(sorted(found))


def kaehler_different(S: NumericalSemigroup, pres: Presentation) -> ValueSet:
    """Value set of the ideal of maximal minors of the derivative matrix.

    Differentiation is taken with respect to the non-distinguished
    variables only; the distinguished parameter is a constant of the
    derivation.  For a one-variable curve the derivative matrix is empty
    and the different is the whole ring.
    """
    if S.embdim == 1:
        return value_set_of(S)
    if pres.gen_tuple.weights != S.min_generators or not pres.gen_tuple.has_x:
        raise IdealError("presentation does not match the curve")
    degs = fitting_minor_degrees(pres)
    base = min(degs)
    tail = base + S.conductor
    values = set()
    for v in degs:
        for m in S.members(tail - v):
            values.add(v + m)
    return make_value_set(S, values, tail)


def dedekind_different(S: NumericalSemigroup) -> ValueSet:
    """Inverse of the complementary module."""
    return inverse(complementary_module(S))


def quotient_length(outer: ValueSet, inner: ValueSet) -> int:
    """Number of values in outer but not in inner.

    Demands the same ambient curve and actual containment.
    """
    if outer.ambient != inner.ambient:
        raise IdealError("value sets live over different curves")
    if inner.tail_start < outer.tail_start:
        raise IdealError("inner set not contained in outer: tail")
    bound = max(outer.tail_start, inner.tail_start)
    outer_vals = set(outer.values_up_to(bound))
    inner_vals = set(inner.values_up_to(bound))
    if not inner_vals <= outer_vals:
        raise IdealError("inner set not contained in outer")
    return len(outer_vals - inner_vals)


def different_inverse_gap(S: NumericalSemigroup, pres: Presentation) -> int:
    """Length of the inverse of the different over the complementary module.

    Zero exactly when inverting the different recovers the trace dual; the
    deficit enters the drop formula for curves with one extra relation.
    """
    dk = kaehler_different(S, pres)
    return quotient_length(inverse(dk), complementary_module(S))
