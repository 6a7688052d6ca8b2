"""Dominating-set machinery: immutable vertex sets, the verifier, and bounds.

A set D dominates W(delta, n) when every vertex is in D or adjacent to a
member of D.  Vertex sets are stored as bitmasks over graph slots, so the
verifier is a constant number of big-integer operations; it is the single
source of truth that every construction and solver certificate in this
package is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import KnodelGraph, Side, Vertex

__all__ = [
    "VertexSet",
    "closed_neighborhood",
    "is_dominating",
    "undominated",
    "gamma_bounds",
    "greedy_upper_bound",
]


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of a graph's vertices, backed by a slot bitmask."""

    graph: KnodelGraph
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.graph.n:
            raise ValueError("mask has bits outside the graph's slot range")

    @classmethod
    def empty(cls, graph: KnodelGraph) -> "VertexSet":
        return cls(graph, 0)

    @classmethod
    def full(cls, graph: KnodelGraph) -> "VertexSet":
        return cls(graph, graph.full_mask)

    @classmethod
    def of(cls, graph: KnodelGraph, vertices: Iterable[Vertex]) -> "VertexSet":
        """Set containing the given vertices, each validated against graph."""
        mask = 0
        for x in vertices:
            mask |= 1 << graph.slot(x)
        return cls(graph, mask)

    @classmethod
    def from_indices(
        cls,
        graph: KnodelGraph,
        u_indices: Iterable[int] = (),
        v_indices: Iterable[int] = (),
    ) -> "VertexSet":
        """Set {u_i : i in u_indices} | {v_j : j in v_indices}."""
        return cls.of(
            graph,
            [Vertex(Side.U, i) for i in u_indices]
            + [Vertex(Side.V, j) for j in v_indices],
        )

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: Vertex) -> bool:
        return bool(self.mask >> self.graph.slot(x) & 1)

    def __iter__(self) -> Iterator[Vertex]:
        """Members in slot order: u-side ascending, then v-side ascending."""
        m = self.mask
        while m:
            low = m & -m
            yield self.graph.vertex_at(low.bit_length() - 1)
            m ^= low

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_graph(other)
        return VertexSet(self.graph, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_graph(other)
        return VertexSet(self.graph, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_same_graph(other)
        return VertexSet(self.graph, self.mask & ~other.mask)

    def _check_same_graph(self, other: "VertexSet") -> None:
        if self.graph != other.graph:
            raise ValueError("vertex sets belong to different graphs")

    def with_vertex(self, x: Vertex) -> "VertexSet":
        return VertexSet(self.graph, self.mask | 1 << self.graph.slot(x))

    def issubset(self, other: "VertexSet") -> bool:
        self._check_same_graph(other)
        return self.mask & ~other.mask == 0

    @property
    def u_indices(self) -> tuple[int, ...]:
        """Sorted u-side indices of the members."""
        return tuple(x.index for x in self if x.side is Side.U)

    @property
    def v_indices(self) -> tuple[int, ...]:
        """Sorted v-side indices of the members."""
        return tuple(x.index for x in self if x.side is Side.V)


def _check_bound(g: KnodelGraph, s: VertexSet) -> None:
    if s.graph != g:
        raise ValueError(f"vertex set is bound to {s.graph}, not {g}")


def closed_neighborhood(g: KnodelGraph, s: VertexSet) -> VertexSet:
    """Union of s with every neighbourhood of a member of s."""
    _check_bound(g, s)
    cover = g.cover_masks
    out = 0
    m = s.mask
    while m:
        low = m & -m
        out |= cover[low.bit_length() - 1]
        m ^= low
    return VertexSet(g, out)


def is_dominating(g: KnodelGraph, s: VertexSet) -> bool:
    """Whether every vertex of g is in s or adjacent to a member of s."""
    return closed_neighborhood(g, s).mask == g.full_mask


def undominated(g: KnodelGraph, s: VertexSet) -> VertexSet:
    """All vertices left uncovered by s; empty exactly when s dominates."""
    _check_bound(g, s)
    return VertexSet(g, g.full_mask & ~closed_neighborhood(g, s).mask)


def gamma_bounds(g: KnodelGraph) -> tuple[int, int]:
    """General bounds ceil(n / (delta + 1)) <= gamma <= n - delta."""
    lower = -(-g.n // (g.delta + 1))
    return lower, g.n - g.delta


def greedy_upper_bound(g: KnodelGraph) -> VertexSet:
    """Dominating set built by repeatedly taking a vertex of maximum new cover.

    Ties are broken by lowest slot, i.e. side U before side V and then by
    ascending index, which makes the result deterministic.
    """
    cover = g.cover_masks
    full = g.full_mask
    chosen = 0
    covered = 0
    while covered != full:
        best_slot = -1
        best_gain = 0
        for slot in range(g.n):
            gain = (cover[slot] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_slot = slot
        chosen |= 1 << best_slot
        covered |= cover[best_slot]
    return VertexSet(g, chosen)
