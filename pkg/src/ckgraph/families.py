"""Kautz, De Bruijn, cyclic Kautz and modified cyclic Kautz digraphs.

Every constructor enumerates the valid labels directly and generates at
most d candidate successors per vertex (shift left, append a symbol).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .digraph import Digraph
from .errors import DomainError
from .labels import Label, kautz_labels


class Family(enum.Enum):
    KAUTZ = "K"
    DEBRUIJN = "DB"
    CYCLIC_KAUTZ = "CK"
    MODIFIED_CYCLIC_KAUTZ = "MCK"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().upper()
        for fam in cls:
            if key in (fam.value, fam.name):
                return fam
        raise DomainError(f"unknown family {text!r}; expected one of K, DB, CK, MCK")


def _check(d: int, l: int) -> None:
    if d < 1 or l < 1:
        raise DomainError(f"need d >= 1 and l >= 1, got d={d}, l={l}")


def _shift_graph(labels: list[Label], successors, name: str, d: int) -> Digraph:
    index = {lab: i for i, lab in enumerate(labels)}
    out = [[index[v] for v in successors(u)] for u in labels]
    # labels come out of the generators already sorted, so no remapping is needed
    return Digraph(labels, [sorted(set(o)) for o in out], name, d)


def kautz(d: int, l: int) -> Digraph:
    """K(d, l): labels over d+1 symbols with distinct neighbours; arcs shift left."""
    _check(d, l)
    labels = list(kautz_labels(d, l))

    def succ(u):
        return [u[1:] + (x,) for x in range(d + 1) if x != u[-1]]

    return _shift_graph(labels, succ, f"K_{d}_{l}", d)


def de_bruijn(d: int, l: int) -> Digraph:
    """B(d, l): all d**l words over d symbols; constant words carry a loop."""
    _check(d, l)
    labels = list(product(range(d), repeat=l))

    def succ(u):
        return [u[1:] + (x,) for x in range(d)]

    return _shift_graph(labels, succ, f"DB_{d}_{l}", max(d - 1, 0))


def _ck_successors(u: Label, d: int) -> list[Label]:
    # the (l+1)-word u + x must have distinct neighbours and its suffix must
    # be a cyclic Kautz label: x != u[-1] and, for l >= 2, x != u[1]
    if len(u) == 1:
        return [(x,) for x in range(d + 1) if x != u[0]]
    return [u[1:] + (x,) for x in range(d + 1) if x != u[-1] and x != u[1]]


def cyclic_kautz(d: int, l: int) -> Digraph:
    """CK(d, l): Kautz labels with first != last, arcs between such labels only.

    Empty for d = 1 and odd l.
    """
    _check(d, l)
    labels = list(kautz_labels(d, l, cyclic=True))
    return _shift_graph(labels, lambda u: _ck_successors(u, d), f"CK_{d}_{l}", d)


def replacement_symbol(u: Label, x: int, d: int) -> int:
    """Smallest a2' with a2' != a3 and a2' != x, for the forbidden shift of u by x."""
    for s in range(d + 1):
        if s != u[2] and s != x:
            return s
    raise DomainError(f"no replacement symbol exists for d={d}")


def mck_successors(u: Label, d: int) -> list[Label]:
    succ = []
    for x in range(d + 1):
        if x == u[-1]:
            continue
        if x != u[1]:
            succ.append(u[1:] + (x,))
        else:
            succ.append((replacement_symbol(u, x, d),) + u[2:] + (x,))
    return succ


def modified_cyclic_kautz(d: int, l: int) -> Digraph:
    """MCK(d, l): CK(d, l) plus one rerouted arc for every forbidden shift.

    When the natural successor ``a2 .. a(l+1)`` has a2 = a(l+1), the arc is
    sent to ``a2' a3 .. a(l+1)`` with the smallest admissible a2' instead.
    Defined for d >= 2 and l >= 3.
    """
    if d < 2 or l < 3:
        raise DomainError(f"MCK(d, l) is defined for d >= 2 and l >= 3, got ({d}, {l})")
    labels = list(kautz_labels(d, l, cyclic=True))
    return _shift_graph(labels, lambda u: mck_successors(u, d), f"MCK_{d}_{l}", d)


def predicted_order(family: Family, d: int, l: int) -> int:
    """Vertex count from the closed-form order of each family (no construction)."""
    if family is Family.KAUTZ:
        return (d + 1) * d ** (l - 1)
    if family is Family.DEBRUIJN:
        return d**l
    return (-1) ** l * d + d**l


_CONSTRUCTORS = {
    Family.KAUTZ: kautz,
    Family.DEBRUIJN: de_bruijn,
    Family.CYCLIC_KAUTZ: cyclic_kautz,
    Family.MODIFIED_CYCLIC_KAUTZ: modified_cyclic_kautz,
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    d: int
    l: int

    def __post_init__(self):
        if self.d < 1 or self.l < 1:
            raise DomainError(f"need d >= 1 and l >= 1, got d={self.d}, l={self.l}")

    @property
    def descriptor(self) -> str:
        return f"{self.family.value}({self.d},{self.l})"

    @property
    def name(self) -> str:
        return f"{self.family.value}_{self.d}_{self.l}"

    def predicted_order(self) -> int:
        return predicted_order(self.family, self.d, self.l)

    def build(self) -> Digraph:
        return _CONSTRUCTORS[self.family](self.d, self.l)
