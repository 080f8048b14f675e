"""Reachability in CK(2, l) decided from imprint sign counts.

Two vertices of CK(2, l) lie on a common directed path exactly when their
imprints carry the same number of plus signs, so the relation is an
equivalence whose classes are the strongly connected components.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .digraph import bfs_distances
from .errors import DomainError, InvalidLabelError
from .families import cyclic_kautz
from .labels import format_label, imprint, is_cyclic_kautz_label, kautz_labels


@dataclass(frozen=True, order=True)
class ImprintClass:
    plus_count: int
    length: int

    def __post_init__(self):
        if not 0 <= self.plus_count <= self.length:
            raise DomainError(f"plus count {self.plus_count} outside 0..{self.length}")

    @property
    def minus_count(self) -> int:
        return self.length - self.plus_count


def imprint_class(label: Sequence[int]) -> ImprintClass:
    im = imprint(label)
    return ImprintClass(im.plus_count, len(im))


def _validate(label: Sequence[int], l: int | None) -> tuple[int, ...]:
    label = tuple(label)
    if any(not 0 <= s <= 2 for s in label):
        raise DomainError("the imprint oracle covers CK(2, l) only")
    if l is not None and len(label) != l:
        raise InvalidLabelError(f"{format_label(label)} has length {len(label)}, expected {l}")
    if len(label) < 2:
        raise DomainError("the imprint oracle needs l >= 2")
    if not is_cyclic_kautz_label(label, 2):
        raise InvalidLabelError(f"{format_label(label)} is not a vertex of CK(2, {len(label)})")
    return label


def reachable(u: Sequence[int], v: Sequence[int], d: int = 2, l: int | None = None) -> bool:
    """True iff CK(2, l) has a directed path from ``u`` to ``v``."""
    if d != 2:
        raise DomainError(f"the imprint oracle is proved for d = 2 only, got d={d}; use BFS")
    u = _validate(u, l)
    v = _validate(v, len(u))
    return imprint(u).plus_count == imprint(v).plus_count


def reachable_bfs(u: Sequence[int], v: Sequence[int], d: int = 2) -> bool:
    """Same question answered by breadth-first search on CK(d, l)."""
    u, v = tuple(u), tuple(v)
    g = cyclic_kautz(d, len(u))
    return bfs_distances(g, u)[g.vertices[g.index(v)]] is not None


def component_census(l: int, d: int = 2) -> dict[int, int]:
    """Number of CK(2, l) vertices per realised imprint plus-count."""
    if d != 2:
        raise DomainError(f"the imprint census is defined for d = 2 only, got d={d}")
    if l < 2:
        raise DomainError(f"need l >= 2, got {l}")
    counts = Counter(imprint(lab).plus_count for lab in kautz_labels(2, l, cyclic=True))
    return dict(sorted(counts.items()))
