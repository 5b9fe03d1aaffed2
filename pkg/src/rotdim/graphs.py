"""Weighted graph model: validated construction, named families, minors, separators.

Vertices carry 1-based ids ``1..n``.  Every graph stores a positive vertex
weight ``s(i)`` and a positive length ``l(ij)`` per edge; edges are kept once,
canonically as ``(i, j)`` with ``i < j``, sorted lexicographically.  Graph
values are immutable after construction, so they can be shared freely.

Connectivity is enforced by :func:`new_graph` and by the solver entry points;
minor operations and structural classifiers accept intermediate graphs that
may be disconnected (build those with ``require_connected=False``).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphValidationError(ValueError):
    """Base class for invalid graph data."""


class SelfLoopError(GraphValidationError):
    pass


class DuplicateEdgeError(GraphValidationError):
    pass


class NonPositiveParameterError(GraphValidationError):
    pass


class DisconnectedError(GraphValidationError):
    pass


class MissingEdgeError(GraphValidationError):
    pass


class NotIsolatedError(GraphValidationError):
    pass


class NotASeparatorError(GraphValidationError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with vertex weights and edge lengths.

    Instances are produced by :func:`new_graph` or the family constructors;
    fields should be treated as read-only.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    s: np.ndarray
    l: np.ndarray

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return {v: tuple(sorted(nb)) for v, nb in adj.items()}

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_index

    def length_of(self, i: int, j: int) -> float:
        return float(self.l[self.edge_index[(min(i, j), max(i, j))]])

    def is_connected(self) -> bool:
        return _is_connected(self.n, self.neighbors)


def _is_connected(n: int, neighbors: dict[int, Sequence[int]]) -> bool:
    if n <= 1:
        return True
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for u in neighbors[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == n


def new_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    s: Sequence[float] | None = None,
    l: Sequence[float] | None = None,
    require_connected: bool = True,
) -> Graph:
    """Validate and build a graph.

    ``s`` and ``l`` default to all ones.  Edges are canonicalized to
    ``(min, max)`` order and sorted; the length vector is permuted along.
    Raises :class:`SelfLoopError`, :class:`DuplicateEdgeError`,
    :class:`NonPositiveParameterError`, or :class:`DisconnectedError`.
    """
    if n < 1:
        raise GraphValidationError(f"vertex count must be >= 1, got {n}")
    pairs = [tuple(int(x) for x in e) for e in edges]
    for e in pairs:
        if len(e) != 2:
            raise GraphValidationError(f"edge {e!r} is not a pair")
        i, j = e
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphValidationError(f"edge ({i},{j}) has vertex id outside 1..{n}")
        if i == j:
            raise SelfLoopError(f"self-loop at vertex {i}")

    s_arr = np.ones(n) if s is None else np.asarray(s, dtype=float).copy()
    if s_arr.shape != (n,):
        raise GraphValidationError(f"expected {n} vertex weights, got {s_arr.shape}")
    l_arr = np.ones(len(pairs)) if l is None else np.asarray(l, dtype=float).copy()
    if l_arr.shape != (len(pairs),):
        raise GraphValidationError(
            f"expected {len(pairs)} edge lengths, got {l_arr.shape}"
        )
    if not np.all(np.isfinite(s_arr)) or np.any(s_arr <= 0):
        raise NonPositiveParameterError("vertex weights must be positive and finite")
    if not np.all(np.isfinite(l_arr)) or np.any(l_arr <= 0):
        raise NonPositiveParameterError("edge lengths must be positive and finite")

    canon = [((min(i, j), max(i, j)), float(le)) for (i, j), le in zip(pairs, l_arr)]
    canon.sort(key=lambda item: item[0])
    seen: set[tuple[int, int]] = set()
    for e, _ in canon:
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
    edge_tuple = tuple(e for e, _ in canon)
    l_sorted = np.array([le for _, le in canon], dtype=float)

    s_arr.setflags(write=False)
    l_sorted.setflags(write=False)
    g = Graph(n=n, edges=edge_tuple, s=s_arr, l=l_sorted)
    if require_connected and not g.is_connected():
        raise DisconnectedError(f"graph on {n} vertices is not connected")
    return g


def complete_graph(n: int) -> Graph:
    """K_n with unit weights and lengths."""
    if n < 2:
        raise GraphValidationError(f"complete graph needs n >= 2, got {n}")
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return new_graph(n, edges)


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge (n-1, n) removed; vertices 1..n-2 form the shared clique."""
    if n < 3:
        raise GraphValidationError(f"complete-minus-edge needs n >= 3, got {n}")
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if (i, j) != (n - 1, n)
    ]
    return new_graph(n, edges)


def clique_sum_family(m: int, k: int) -> Graph:
    """G(m,k): clique on 1..m plus satellites m+1..m+k adjacent to all of the clique.

    Satellites are pairwise nonadjacent.  Unit weights and lengths.
    """
    if m < 2 or k < 1:
        raise GraphValidationError(f"need m >= 2 and k >= 1, got ({m},{k})")
    edges = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    edges += [(i, m + t) for i in range(1, m + 1) for t in range(1, k + 1)]
    return new_graph(m + k, edges)


def delete_edge(g: Graph, edge: Sequence[int]) -> Graph:
    """Remove one edge.  The result may be disconnected."""
    e = (min(edge), max(edge))
    if e not in g.edge_index:
        raise MissingEdgeError(f"edge {e} not in graph")
    keep = [(pair, le) for pair, le in zip(g.edges, g.l) if pair != e]
    return new_graph(
        g.n,
        [p for p, _ in keep],
        s=g.s,
        l=[le for _, le in keep],
        require_connected=False,
    )


def contract_edge(g: Graph, edge: Sequence[int]) -> Graph:
    """Contract one edge, merging its endpoints.

    The smaller endpoint survives and receives the sum of the two vertex
    weights; parallel duplicates collapse to the edge incident to the kept
    endpoint, self-loops vanish, and ids above the removed endpoint shift
    down by one.  Surviving edges keep their lengths.
    """
    a, b = min(edge), max(edge)
    if (a, b) not in g.edge_index:
        raise MissingEdgeError(f"edge ({a},{b}) not in graph")

    def remap(v: int) -> int:
        if v == b:
            return a
        return v - 1 if v > b else v

    merged: dict[tuple[int, int], float] = {}
    # First pass keeps every edge not incident to b, so an (a,x) edge wins
    # over a parallel (b,x) edge.
    for (i, j), le in zip(g.edges, g.l):
        if b in (i, j):
            continue
        merged[(remap(i), remap(j))] = float(le)
    for (i, j), le in zip(g.edges, g.l):
        if b not in (i, j) or (i, j) == (a, b):
            continue
        u, v = remap(i), remap(j)
        key = (min(u, v), max(u, v))
        merged.setdefault(key, float(le))

    s_new = [float(x) for x in g.s]
    s_new[a - 1] += s_new[b - 1]
    del s_new[b - 1]
    items = sorted(merged.items())
    return new_graph(
        g.n - 1,
        [p for p, _ in items],
        s=s_new,
        l=[le for _, le in items],
        require_connected=False,
    )


def delete_isolated_vertex(g: Graph, v: int) -> Graph:
    """Drop a degree-zero vertex; ids above it shift down by one."""
    if not 1 <= v <= g.n:
        raise GraphValidationError(f"vertex {v} outside 1..{g.n}")
    if g.degree(v) != 0:
        raise NotIsolatedError(f"vertex {v} has degree {g.degree(v)}")
    remap = lambda u: u - 1 if u > v else u
    edges = [(remap(i), remap(j)) for i, j in g.edges]
    s_new = [float(x) for x in g.s]
    del s_new[v - 1]
    return new_graph(g.n - 1, edges, s=s_new, l=g.l, require_connected=False)


@dataclass(frozen=True, eq=False)
class Separator:
    """A vertex cut together with the components it leaves behind."""

    vertices: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def components_after_removal(g: Graph, subset: Iterable[int]) -> Separator:
    """Remove a vertex set and list the remaining connected components.

    Components are each sorted and ordered by their smallest vertex id.
    Raises :class:`NotASeparatorError` when fewer than two components remain.
    """
    cut = {int(v) for v in subset}
    for v in cut:
        if not 1 <= v <= g.n:
            raise GraphValidationError(f"vertex {v} outside 1..{g.n}")
    rest = [v for v in range(1, g.n + 1) if v not in cut]
    unvisited = set(rest)
    components: list[tuple[int, ...]] = []
    for start in rest:
        if start not in unvisited:
            continue
        comp = {start}
        unvisited.discard(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors[v]:
                if u in unvisited:
                    unvisited.discard(u)
                    comp.add(u)
                    queue.append(u)
        components.append(tuple(sorted(comp)))
    if len(components) < 2:
        raise NotASeparatorError(
            f"removing {sorted(cut)} leaves {len(components)} component(s)"
        )
    components.sort(key=lambda c: c[0])
    return Separator(vertices=tuple(sorted(cut)), components=tuple(components))


def graph_to_json_dict(g: Graph) -> dict:
    """Graph as the CLI's JSON structure: 1-based ids, per-edge length triples."""
    return {
        "n": g.n,
        "edges": [[i, j, float(le)] for (i, j), le in zip(g.edges, g.l)],
        "s": [float(x) for x in g.s],
    }


def graph_from_json_dict(data: dict, require_connected: bool = True) -> Graph:
    """Parse the CLI JSON structure.

    Omitted ``"s"`` means unit vertex weights; an edge entry ``[i, j]``
    without a third element means length 1.
    """
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphValidationError("graph JSON needs 'n' and 'edges'")
    n = int(data["n"])
    edges = []
    lengths = []
    for entry in data["edges"]:
        if not isinstance(entry, (list, tuple)) or len(entry) not in (2, 3):
            raise GraphValidationError(f"bad edge entry {entry!r}")
        edges.append((int(entry[0]), int(entry[1])))
        lengths.append(float(entry[2]) if len(entry) == 3 else 1.0)
    s = data.get("s")
    return new_graph(n, edges, s=s, l=lengths, require_connected=require_connected)


def graph_from_json(text: str, require_connected: bool = True) -> Graph:
    return graph_from_json_dict(json.loads(text), require_connected=require_connected)
