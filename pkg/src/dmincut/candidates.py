"""Candidate generation: bounded integer compositions over a cut.

A d-MC candidate assigns the arcs of one minimal cut capacities that sum to
the demand d (each within its maximum) while every off-cut arc sits at full
capacity.  Enumeration is a lazy bounded-composition recursion in ascending
lexicographic order of the on-cut components; the closed-form count uses
inclusion-exclusion over capacity overflows and doubles as an independent
bound on the stream length.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .cuts import MinCut
from .errors import ValidationError
from .network import Network, StateVector


@dataclass(frozen=True)
class Candidate:
    """One Step-2 solution: the full state vector plus its provenance."""

    vector: StateVector
    origin_cut: int  # index of the generating cut in the solver's cut list
    ordinal: int  # 1-based position within that cut's stream


def compositions(caps: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Yield all vectors 0 <= x_i <= caps[i] with sum(x) == total, lexicographically."""
    k = len(caps)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    out = [0] * k

    def recurse(pos: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if pos == k:
            if remaining == 0:
                yield tuple(out)
            return
        low = max(0, remaining - suffix[pos + 1])
        high = min(caps[pos], remaining)
        for value in range(low, high + 1):
            out[pos] = value
            yield from recurse(pos + 1, remaining - value)

    if 0 <= total <= suffix[0]:
        yield from recurse(0, total)


def count_compositions(caps: Sequence[int], total: int) -> int:
    """Number of vectors 0 <= x_i <= caps[i] with sum(x) == total.

    Inclusion-exclusion over the arcs forced past their cap: subtracting
    cap+1 from the total for each member of an overflow set reduces the
    bounded count to unbounded stars-and-bars terms.
    """
    if total < 0:
        return 0
    k = len(caps)
    if k == 0:
        return 1 if total == 0 else 0
    count = 0
    for mask in range(1 << k):
        reduced = total
        bits = 0
        for i in range(k):
            if mask >> i & 1:
                reduced -= caps[i] + 1
                bits += 1
        if reduced < 0:
            continue
        term = comb(reduced + k - 1, k - 1)
        count += -term if bits % 2 else term
    return count


def enumerate_candidates(net: Network, cut: MinCut, demand: int, origin_cut: int = 0) -> Iterator[Candidate]:
    """Stream every candidate of ``cut`` at level ``demand`` exactly once.

    The stream is empty when the demand exceeds the cut's total capacity;
    consuming lazily lets the solver interleave generation and testing.
    """
    if demand < 0:
        raise ValidationError(f"demand must be nonnegative, got {demand}")
    positions = [arc_id - 1 for arc_id in cut]
    caps = [net.max_capacities[p] for p in positions]
    base = list(net.max_capacities)
    for ordinal, on_cut in enumerate(compositions(caps, demand), start=1):
        vector = base.copy()
        for p, value in zip(positions, on_cut):
            vector[p] = value
        yield Candidate(vector=tuple(vector), origin_cut=origin_cut, ordinal=ordinal)


def count_candidates(net: Network, cut: MinCut, demand: int) -> int:
    """Closed-form length of ``enumerate_candidates(net, cut, demand)``."""
    if demand < 0:
        raise ValidationError(f"demand must be nonnegative, got {demand}")
    return count_compositions([net.max_capacities[a - 1] for a in cut], demand)
