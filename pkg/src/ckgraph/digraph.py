"""Labeled digraph container and the graph algorithms the families rely on.

Vertices are hashable labels, normally tuples of ints.  A digraph is
immutable once built; vertices are kept in lexicographic label order so
that every traversal and export is reproducible.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import BuildError, ContractError, PreconditionError, UnknownVertexError
from .labels import format_label

Vertex = Hashable
Arc = tuple[Vertex, Vertex]

UNREACHABLE = None


def label_sort_key(label: Vertex):
    if isinstance(label, tuple):
        return (0, label)
    if isinstance(label, int):
        return (1, label)
    if isinstance(label, str):
        return (2, label)
    return (3, repr(label))


def render(label: Vertex, d: int | None = None) -> str:
    """Text form of a vertex label used in exports and pair labels."""
    if isinstance(label, tuple) and all(isinstance(s, int) for s in label):
        return format_label(label, d)
    return str(label)


def merge_labels(u: Vertex, v: Vertex, d: int | None = None) -> Vertex:
    """Label of the line-digraph vertex built from the arc (u, v).

    Overlapping sequences ``a1..ak`` and ``a2..a(k+1)`` merge into
    ``a1..a(k+1)``; anything else gets the pair label ``"u|v"``.
    """
    if isinstance(u, tuple) and isinstance(v, tuple) and len(u) == len(v) and u[1:] == v[:-1]:
        return u + v[-1:]
    return f"{render(u, d)}|{render(v, d)}"


class DiameterKind(enum.Enum):
    FINITE = "FINITE"
    INFINITE = "INFINITE"
    NONEXISTENT = "NONEXISTENT"


@dataclass(frozen=True)
class Diameter:
    kind: DiameterKind
    value: int | None = None

    def __post_init__(self):
        if (self.kind is DiameterKind.FINITE) != (self.value is not None):
            raise ValueError("only FINITE diameters carry a value")
        if self.value is not None and self.value < 0:
            raise ValueError("diameter must be nonnegative")

    @classmethod
    def finite(cls, n: int) -> "Diameter":
        return cls(DiameterKind.FINITE, int(n))

    @property
    def is_finite(self) -> bool:
        return self.kind is DiameterKind.FINITE

    def __str__(self) -> str:
        if self.kind is DiameterKind.FINITE:
            return f"FINITE({self.value})"
        return self.kind.value

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.value is not None:
            out["value"] = self.value
        return out

    @classmethod
    def parse(cls, text: str) -> "Diameter":
        text = text.strip()
        if text.startswith("FINITE(") and text.endswith(")"):
            return cls.finite(int(text[7:-1]))
        return cls(DiameterKind(text))


INFINITE = Diameter(DiameterKind.INFINITE)
NONEXISTENT = Diameter(DiameterKind.NONEXISTENT)


@dataclass(frozen=True)
class DegreeProfile:
    min_out: int
    max_out: int
    min_in: int
    max_in: int

    @property
    def is_out_regular(self) -> bool:
        return self.min_out == self.max_out

    @property
    def is_regular(self) -> bool:
        return self.is_out_regular and self.min_in == self.max_in == self.min_out


class Digraph:
    """Immutable digraph with forward and backward adjacency.

    Loops are allowed, multiple arcs are not.  Build one with
    :meth:`Digraph.build` (or the module-level :func:`build`).
    """

    __slots__ = ("_labels", "_index", "_out", "_in", "name", "d")

    def __init__(self, labels, out, name: str = "G", d: int | None = None):
        # private: labels sorted, out[i] sorted unique index lists
        self._labels: tuple = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        self._out: list[tuple[int, ...]] = [tuple(o) for o in out]
        ins: list[list[int]] = [[] for _ in self._labels]
        for i, targets in enumerate(self._out):
            for j in targets:
                ins[j].append(i)
        self._in: list[tuple[int, ...]] = [tuple(x) for x in ins]
        self.name = name
        self.d = d

    @classmethod
    def build(
        cls,
        vertices: Iterable[Vertex],
        arcs: Iterable[Arc] = (),
        name: str = "G",
        d: int | None = None,
    ) -> "Digraph":
        labels = list(dict.fromkeys(vertices))
        index = {lab: i for i, lab in enumerate(labels)}
        out: list[set[int]] = [set() for _ in labels]
        for u, v in arcs:
            try:
                out[index[u]].add(index[v])
            except KeyError:
                raise BuildError(f"arc ({u!r}, {v!r}) has an endpoint outside the vertex set") from None
        return cls._from_adjacency(labels, out, name, d)

    @classmethod
    def _from_adjacency(cls, labels: Sequence[Vertex], out: Sequence[Iterable[int]], name: str, d):
        """Sort vertices by label and remap index-based adjacency accordingly."""
        if len(set(labels)) != len(labels):
            raise BuildError("duplicate vertex labels")
        order = sorted(range(len(labels)), key=lambda i: label_sort_key(labels[i]))
        rank = [0] * len(labels)
        for new, old in enumerate(order):
            rank[old] = new
        new_out = [sorted({rank[j] for j in out[old]}) for old in order]
        return cls([labels[i] for i in order], new_out, name, d)

    # -- basic queries ---------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._labels

    @property
    def order(self) -> int:
        return len(self._labels)

    @property
    def size(self) -> int:
        return sum(len(o) for o in self._out)

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"<Digraph {self.name}: {self.order} vertices, {self.size} arcs>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._labels == other._labels and self._out == other._out

    __hash__ = None

    def index(self, label: Vertex) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(f"no vertex {label!r} in {self.name}") from None

    def arcs(self) -> Iterator[Arc]:
        labels = self._labels
        for i, targets in enumerate(self._out):
            for j in targets:
                yield labels[i], labels[j]

    def arc_set(self) -> set[Arc]:
        return set(self.arcs())

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        j = self._index.get(v)
        i = self._index.get(u)
        return i is not None and j is not None and j in self._out[i]

    def out_neighbors(self, label: Vertex) -> tuple:
        return tuple(self._labels[j] for j in self._out[self.index(label)])

    def in_neighbors(self, label: Vertex) -> tuple:
        return tuple(self._labels[j] for j in self._in[self.index(label)])

    def out_degree(self, label: Vertex) -> int:
        return len(self._out[self.index(label)])

    def in_degree(self, label: Vertex) -> int:
        return len(self._in[self.index(label)])

    def degree_profile(self) -> DegreeProfile:
        if not self._labels:
            return DegreeProfile(0, 0, 0, 0)
        outs = [len(o) for o in self._out]
        ins = [len(x) for x in self._in]
        return DegreeProfile(min(outs), max(outs), min(ins), max(ins))

    def render(self, label: Vertex) -> str:
        return render(label, self.d)

    def renamed(self, name: str) -> "Digraph":
        return Digraph(self._labels, self._out, name, self.d)


build = Digraph.build


def complete_symmetric_digraph(n: int, loops: bool = False, name: str | None = None) -> Digraph:
    """Complete symmetric digraph on the length-one labels (0,), ..., (n-1,)."""
    verts = [(i,) for i in range(n)]
    arcs = [(u, v) for u in verts for v in verts if loops or u != v]
    return build(verts, arcs, name or f"K{n}", d=max(n - 1, 0))


def directed_cycle(n: int, name: str | None = None) -> Digraph:
    verts = [(i,) for i in range(n)]
    arcs = [((i,), ((i + 1) % n,)) for i in range(n)]
    return build(verts, arcs, name or f"C{n}", d=max(n - 1, 0))


# -- traversal ------------------------------------------------------------


def _bfs_indices(out: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(out)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        nd = dist[v] + 1
        for w in out[v]:
            if dist[w] < 0:
                dist[w] = nd
                queue.append(w)
    return dist


def bfs_distances(g: Digraph, source: Vertex) -> dict:
    """Shortest directed path lengths from ``source``; UNREACHABLE (None) if no path."""
    dist = _bfs_indices(g._out, g.index(source))
    return {lab: (x if x >= 0 else UNREACHABLE) for lab, x in zip(g._labels, dist)}


def distance(g: Digraph, u: Vertex, v: Vertex) -> int | None:
    return bfs_distances(g, u)[g.vertices[g.index(v)]]


def strongly_connected_components(g: Digraph) -> list[list[Vertex]]:
    """Tarjan's algorithm, iterative.  Classes are sorted internally and by first label."""
    out = g._out
    n = len(out)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            targets = out[v]
            if pos < len(targets):
                work[-1] = (v, pos + 1)
                w = targets[pos]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    labels = g._labels
    return [[labels[i] for i in c] for c in comps]


def is_strongly_connected(g: Digraph) -> bool:
    return g.order > 0 and len(strongly_connected_components(g)) == 1


def is_directed_cycle(g: Digraph) -> bool:
    prof = g.degree_profile()
    return (
        g.order > 0
        and prof.max_out == prof.min_out == prof.max_in == prof.min_in == 1
        and is_strongly_connected(g)
    )


# Sources per block of the bit-parallel BFS (multiple of 64).
_BLOCK = 4096


def _predecessor_table(g: Digraph):
    """Predecessors as a padded (n, k) array, or CSR arrays when in-degrees are skewed.

    Padding entries and vertices without predecessors point at row n, which
    the BFS keeps at zero.
    """
    n = g.order
    k = max((len(p) for p in g._in), default=0) or 1
    m = g.size
    if n * k <= 4 * (m + n):
        table = np.full((n, k), n, dtype=np.int64)
        for i, preds in enumerate(g._in):
            table[i, : len(preds)] = preds
        return table, None
    src: list[int] = []
    ptr = []
    for preds in g._in:
        ptr.append(len(src))
        src.extend(preds if preds else (n,))
    return np.asarray(src, dtype=np.int64), np.asarray(ptr, dtype=np.int64)


def _max_eccentricity(g: Digraph) -> int | None:
    """Largest BFS depth over all sources, or None if some pair is unreachable.

    Runs a breadth-first search from a block of sources at once: bit s of
    row v records whether source s has reached v.
    """
    n = g.order
    table, starts = _predecessor_table(g)
    one = np.uint64(1)
    ecc = 0
    for start in range(0, n, _BLOCK):
        size = min(_BLOCK, n - start)
        w = -(-size // 64)
        visited = np.zeros((n, w), dtype=np.uint64)
        offs = np.arange(size)
        visited[start + offs, offs // 64] = one << (offs % 64).astype(np.uint64)
        frontier = np.zeros((n + 1, w), dtype=np.uint64)
        frontier[:n] = visited
        new = np.empty((n, w), dtype=np.uint64)
        scratch = np.empty((n, w), dtype=np.uint64)
        full = np.full(w, np.iinfo(np.uint64).max, dtype=np.uint64)
        if size % 64:
            full[-1] = (one << np.uint64(size % 64)) - one
        level = 0
        while True:
            if starts is None:
                np.take(frontier, table[:, 0], axis=0, out=new)
                for slot in range(1, table.shape[1]):
                    np.take(frontier, table[:, slot], axis=0, out=scratch)
                    new |= scratch
            else:
                new = np.bitwise_or.reduceat(frontier[table], starts, axis=0)
            new &= ~visited
            if not new.any():
                break
            visited |= new
            frontier[:n] = new
            level += 1
        if not (visited == full).all():
            return None
        ecc = max(ecc, level)
    return ecc


def diameter(g: Digraph) -> Diameter:
    if g.order == 0:
        return NONEXISTENT
    if len(strongly_connected_components(g)) > 1:
        return INFINITE
    ecc = _max_eccentricity(g)
    return INFINITE if ecc is None else Diameter.finite(ecc)


# -- line digraph functors ------------------------------------------------


def line_digraph(g: Digraph, name: str | None = None) -> Digraph:
    """L(G): one vertex per arc uv, and uv -> vw for every out-neighbour w of v."""
    out = g._out
    offset = [0]
    for targets in out:
        offset.append(offset[-1] + len(targets))
    labels = g._labels
    new_labels = []
    new_out = []
    for i, targets in enumerate(out):
        for j in targets:
            new_labels.append(merge_labels(labels[i], labels[j], g.d))
            new_out.append(range(offset[j], offset[j + 1]))
    return Digraph._from_adjacency(new_labels, new_out, name or f"L1_{g.name}", g.d)


def iterated_line_digraph(g: Digraph, t: int) -> Digraph:
    if t < 0:
        raise ValueError("iteration count must be nonnegative")
    h = g
    for _ in range(t):
        h = line_digraph(h)
    return h.renamed(f"L{t}_{g.name}") if t else h


def canonical_choose(g: Digraph, keep: set[Arc]) -> Callable[[Vertex, Vertex], Vertex]:
    """Pick the smallest in-neighbour v' of w with v'w kept."""

    def choose(v: Vertex, w: Vertex) -> Vertex:
        for cand in g.in_neighbors(w):
            if (cand, w) in keep:
                return cand
        raise PreconditionError(f"no kept arc enters {w!r}")

    return choose


def partial_line_digraph(
    g: Digraph,
    keep: Iterable[Arc],
    choose: Callable[[Vertex, Vertex], Vertex] | Mapping[Arc, Vertex] | None = None,
    name: str | None = None,
) -> Digraph:
    """Partial line digraph PL(G) on the kept arcs.

    A kept arc uv is joined to v'w for every out-neighbour w of v, where
    v' = v when vw is kept and v' = choose(v, w) otherwise.  ``choose``
    defaults to :func:`canonical_choose`.
    """
    keep = set(keep)
    for u, v in keep:
        if not g.has_arc(u, v):
            raise PreconditionError(f"kept pair ({u!r}, {v!r}) is not an arc")
    heads = {v for _, v in keep}
    if len(heads) != g.order:
        missing = [x for x in g.vertices if x not in heads]
        raise PreconditionError(f"kept arcs do not enter every vertex, e.g. {missing[0]!r}")
    if choose is None:
        pick = canonical_choose(g, keep)
    elif isinstance(choose, Mapping):
        pick = lambda v, w: choose[(v, w)]  # noqa: E731
    else:
        pick = choose

    kept = sorted(keep, key=lambda a: (label_sort_key(a[0]), label_sort_key(a[1])))
    position = {a: k for k, a in enumerate(kept)}
    new_labels = [merge_labels(u, v, g.d) for u, v in kept]
    new_out = []
    for u, v in kept:
        targets = []
        for w in g.out_neighbors(v):
            if (v, w) in keep:
                targets.append(position[(v, w)])
                continue
            vp = pick(v, w)
            if (vp, w) not in keep:
                raise ContractError(f"choose({v!r}, {w!r}) returned {vp!r}, but ({vp!r}, {w!r}) is not kept")
            targets.append(position[(vp, w)])
        new_out.append(targets)
    return Digraph._from_adjacency(new_labels, new_out, name or f"PL_{g.name}", g.d)
