"""Closed-form domination numbers of W(4, n) and matching explicit sets.

For every even n >= 16 the domination number is 2 * floor(n/10) plus a small
addend fixed by n mod 10, with six small orders (16, 18, 26, 28, 36, 38)
falling outside the residue pattern.  construct_dominating_set() returns an
optimal set witnessing the value: the general shape places stride-5 index
progressions on both sides, the six irregular orders come from a lookup
table, and every result is re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import VertexSet, undominated
from .graphs import KnodelGraph, Vertex, build_graph

__all__ = [
    "EXCEPTIONAL_ORDERS",
    "GammaFormulaResult",
    "ConstructionError",
    "gamma_formula",
    "construct_dominating_set",
]

MIN_ORDER = 16

# Optimal dominating sets (u-side indices, v-side indices) for the six
# orders whose value does not follow their residue class.
EXCEPTIONAL_ORDERS: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    16: ((1, 2), (6, 7)),
    18: ((1, 2), (6, 7)),
    26: ((1, 4, 9, 10), (1, 2, 6)),
    28: ((1, 7, 11, 13), (3, 5, 9)),
    36: ((1, 2, 10, 11), (6, 7, 15, 16)),
    38: ((1, 6, 11, 16, 18), (3, 5, 10, 13, 15)),
}


@dataclass(frozen=True)
class GammaFormulaResult:
    """Domination number of W(4, n) together with how it decomposes.

    value = 2 * t + addend where t = floor(n / 10); residue is n mod 10 and
    exceptional flags the six orders handled outside the residue pattern.
    """

    n: int
    t: int
    residue: int
    addend: int
    value: int
    exceptional: bool


def _check_order(n: int) -> None:
    if n % 2 != 0 or n < MIN_ORDER:
        raise ValueError(f"order must be an even integer >= {MIN_ORDER}, got {n}")


def gamma_formula(n: int) -> GammaFormulaResult:
    """Domination number of W(4, n) by the piecewise residue formula.

    The addend on top of 2 * floor(n/10) is 0 for residue 0; 2 for residues
    2 and 4; 3 for residue 6; 4 for residue 8; except that 16, 18 and 36
    take addend 2 and 28 takes addend 3.
    """
    _check_order(n)
    t, residue = divmod(n, 10)
    exceptional = n in EXCEPTIONAL_ORDERS
    if residue == 0:
        addend = 0
    elif residue in (2, 4) or n in (16, 18, 36):
        addend = 2
    elif residue == 6 or n == 28:
        addend = 3
    else:
        addend = 4
    return GammaFormulaResult(n, t, residue, addend, 2 * t + addend, exceptional)


class ConstructionError(RuntimeError):
    """A constructed set failed verification; carries the uncovered vertices."""

    def __init__(self, n: int, witnesses: tuple[Vertex, ...], message: str | None = None):
        self.n = n
        self.witnesses = witnesses
        if message is None:
            labels = " ".join(str(x) for x in witnesses)
            message = (
                f"constructed set for n={n} leaves "
                f"{len(witnesses)} vertices undominated: {labels}"
            )
        super().__init__(message)


def _progression(first: int, last: int) -> tuple[int, ...]:
    """Indices first, first+5, ..., last; last must be reachable by stride 5."""
    if (last - first) % 5 != 0:
        raise ValueError(f"endpoint {last} not reachable from {first} by stride 5")
    return tuple(range(first, last + 1, 5))


def construct_dominating_set(n: int) -> VertexSet:
    """An optimal dominating set of W(4, n), verified before it is returned.

    Raises ConstructionError (with the uncovered vertices attached) if the
    built set ever failed to dominate or had the wrong size.
    """
    _check_order(n)
    g = build_graph(4, n)
    if n in EXCEPTIONAL_ORDERS:
        u_indices, v_indices = EXCEPTIONAL_ORDERS[n]
    else:
        t, residue = divmod(n, 10)
        if residue == 0:
            u_indices = _progression(1, 5 * t - 4)
            v_indices = _progression(5, 5 * t)
        else:
            u_indices = _progression(1, 5 * t + 1)
            base = _progression(5, 5 * t)
            if residue == 2:
                v_indices = base + (5 * t + 1,)
            elif residue == 4:
                v_indices = (3,) + base
            elif residue == 6:
                v_indices = (2, 3) + base
            else:
                extra = sorted((3, 5 * t - 2, 5 * t + 3))
                v_indices = tuple(sorted(set(base) | set(extra)))
    ds = VertexSet.from_indices(g, u_indices, v_indices)
    _verify(g, ds, n)
    return ds


def _verify(g: KnodelGraph, ds: VertexSet, n: int) -> None:
    missed = undominated(g, ds)
    if len(missed) > 0:
        raise ConstructionError(n, tuple(missed))
    expected = gamma_formula(n).value
    if len(ds) != expected:
        raise ConstructionError(
            n, (), f"constructed set for n={n} has size {len(ds)}, expected {expected}"
        )
