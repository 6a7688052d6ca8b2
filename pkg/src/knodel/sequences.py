"""Enumeration of gap sequences of one-sided vertex sets up to rotation.

A set of k same-side vertices in W(delta, n) determines a cyclic sequence of
k positive gaps summing to n/2; rotating the sequence corresponds to
relabelling which chosen vertex is listed first, so classes are represented
by their lexicographically smallest rotation.  Reversal is a genuinely
different placement and is *not* factored out.  Two statistics drive the
enumeration filters:

* how many gaps lie in the difference set m_delta (each such gap is a pair
  of chosen vertices at a distance forcing a common neighbour);
* how many adjacent cyclic gap pairs have their sum in m_delta (a second,
  longer-range way to force a common neighbour).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import (
    CyclicSequence,
    KnodelGraph,
    Side,
    Vertex,
    build_graph,
    common_neighbor_predicate,
    m_delta,
)

__all__ = [
    "SequenceClass",
    "canonical_rotation",
    "reconstruct_positions",
    "colliding_pairs",
    "enumerate_sequences",
]


@dataclass(frozen=True)
class SequenceClass:
    """A rotation class of gap sequences together with its filter statistics.

    colliding_pairs counts chosen-vertex pairs sharing a neighbour in
    W(delta, 2 * total); it is None when that graph does not exist, i.e.
    when 2 * total < 2**delta.
    """

    canonical: CyclicSequence
    parts_in_m: int
    adjacent_sums_in_m: int
    colliding_pairs: int | None


def canonical_rotation(seq: CyclicSequence) -> CyclicSequence:
    """Lexicographically smallest rotation of seq; reversal is not applied."""
    gaps = seq.gaps
    k = len(gaps)
    best = min(gaps[i:] + gaps[:i] for i in range(k))
    return CyclicSequence(best, seq.half)


def reconstruct_positions(seq: CyclicSequence) -> frozenset[Vertex]:
    """U-side vertices with gap sequence seq, anchored at u_1.

    Returns {u_1, u_{1+g_1}, u_{1+g_1+g_2}, ...}; its cyclic_sequence in any
    graph with the matching half is a rotation of seq.
    """
    out = [1]
    for gap in seq.gaps[:-1]:
        out.append(out[-1] + gap)
    return frozenset(Vertex(Side.U, i) for i in out)


def colliding_pairs(g: KnodelGraph, s: frozenset[Vertex]) -> int:
    """Number of unordered same-side pairs of s that share a neighbour."""
    vs = sorted(s)
    count = 0
    for i, a in enumerate(vs):
        for b in vs[i + 1 :]:
            if a.side is b.side and common_neighbor_predicate(g, a, b):
                count += 1
    return count


def _compositions(k: int, total: int) -> Iterator[tuple[int, ...]]:
    """All k-tuples of positive integers summing to total, lexicographically."""

    def rec(prefix: tuple[int, ...], remaining: int, parts_left: int):
        if parts_left == 1:
            yield prefix + (remaining,)
            return
        for first in range(1, remaining - parts_left + 2):
            yield from rec(prefix + (first,), remaining - first, parts_left - 1)

    if k >= 1 and total >= k:
        yield from rec((), total, k)


def _adjacent_sums(gaps: tuple[int, ...]) -> tuple[int, ...]:
    """Sums of cyclically adjacent gap pairs; each unordered pair once."""
    k = len(gaps)
    if k == 1:
        return ()
    if k == 2:
        return (gaps[0] + gaps[1],)
    return tuple(gaps[i] + gaps[(i + 1) % k] for i in range(k))


def enumerate_sequences(
    k: int,
    total: int,
    parts_in_m_exact: int,
    adjacent_sums_in_m_max: int,
    delta: int = 4,
) -> list[SequenceClass]:
    """Rotation classes of k positive gaps summing to total, filtered.

    Keeps the classes with exactly parts_in_m_exact gaps in m_delta(delta)
    and at most adjacent_sums_in_m_max adjacent cyclic pair sums in it.
    Classes are returned sorted by their canonical gap tuple.  An infeasible
    filter combination yields an empty list.
    """
    if k < 1:
        raise ValueError(f"sequence length must be at least 1, got {k}")
    if total < k:
        raise ValueError(f"total {total} cannot be split into {k} positive gaps")
    if parts_in_m_exact < 0 or adjacent_sums_in_m_max < 0:
        raise ValueError("filter counts must be non-negative")
    m = m_delta(delta)
    n = 2 * total
    graph = build_graph(delta, n) if n >= 2**delta else None

    classes = []
    for gaps in _compositions(k, total):
        if any(gaps[i:] + gaps[:i] < gaps for i in range(1, k)):
            continue
        in_m = sum(1 for gap in gaps if gap in m)
        if in_m != parts_in_m_exact:
            continue
        sums_in_m = sum(1 for q in _adjacent_sums(gaps) if q in m)
        if sums_in_m > adjacent_sums_in_m_max:
            continue
        seq = CyclicSequence(gaps, total)
        collisions = None
        if graph is not None:
            collisions = colliding_pairs(graph, reconstruct_positions(seq))
        classes.append(SequenceClass(seq, in_m, sums_in_m, collisions))
    classes.sort(key=lambda c: c.canonical.gaps)
    return classes
