"""Explicit small Johnson graphs as ground truth for the spectrum formulas.

Vertices are n-bit masks of weight r; u ~ v iff popcount(u & v) == s. The
checks here never touch the eigenvalue formulas: moments tr(A^k) are counted
as closed walks in exact integer arithmetic and compared with
sum_i mult_i * E(i)^k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .exactmath import binom
from .spectrum import DegenerateGraphError, GraphParams, ParamsLike, as_params, full_spectrum

__all__ = [
    "DEFAULT_VERTEX_CAP",
    "DisjointSet",
    "ExplicitGraph",
    "ConsistencyResult",
    "build_graph",
    "weight_masks",
    "trace_moments",
    "spectrum_consistency",
    "components",
    "write_edge_list",
]

DEFAULT_VERTEX_CAP = 20_000
MAX_BITS = 128


def weight_masks(n: int, r: int) -> list[int]:
    """All n-bit masks of weight r in increasing order (colex order of r-sets)."""
    if r == 0:
        return [0]
    out = []
    v = (1 << r) - 1
    limit = 1 << n
    while v < limit:
        out.append(v)
        # Gosper's hack: next integer with the same popcount
        c = v & -v
        nxt = v + c
        v = (((nxt ^ v) >> 2) // c) | nxt
    return out


class DisjointSet:
    """Union-find over 0..size-1 with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def component_sizes(self) -> list[int]:
        return sorted((self.size[x] for x in range(len(self.parent)) if self.parent[x] == x),
                      reverse=True)


@dataclass(frozen=True, eq=False)
class ExplicitGraph:
    """G(n, r, s) with neighbor lists stored in CSR form.

    ``indices[indptr[u]:indptr[u+1]]`` are the sorted neighbors of vertex u.
    """

    params: GraphParams
    vertices: tuple[int, ...]
    indptr: np.ndarray
    indices: np.ndarray
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def neighbors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    @property
    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(u).tolist() for u in range(self.order)]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @cached_property
    def edge_array(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoints (u, v), u < v, ordered by u then v."""
        us = np.repeat(np.arange(self.order, dtype=np.int64), self.degrees())
        keep = us < self.indices
        return us[keep], self.indices[keep]

    @property
    def edge_count(self) -> int:
        return int(self.indices.size // 2)

    def dense(self, dtype=object) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=dtype)
        for u in range(self.order):
            a[u, self.neighbors(u)] = 1
        return a


def build_graph(params: ParamsLike, cap: int = DEFAULT_VERTEX_CAP) -> ExplicitGraph:
    """Enumerate G(n, r, s) explicitly. Vertices come in increasing mask order."""
    p = as_params(params)
    if p.n > MAX_BITS:
        raise ValueError(f"n={p.n} exceeds the {MAX_BITS}-bit vertex representation")
    count = binom(p.n, p.r)
    if count > cap:
        raise ValueError(f"{p} has {count} vertices, above the vertex cap of {cap}")
    masks = weight_masks(p.n, p.r)
    rows = []
    if p.n <= 63:
        arr = np.array(masks, dtype=np.uint64)
        for m in arr:
            rows.append(np.flatnonzero(np.bitwise_count(arr & m) == p.s))
    else:
        for m in masks:
            rows.append(np.array([v for v, w in enumerate(masks) if (m & w).bit_count() == p.s],
                                 dtype=np.int64))
    indptr = np.zeros(count + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(x) for x in rows])
    indices = np.concatenate(rows).astype(np.int64) if rows else np.zeros(0, dtype=np.int64)
    return ExplicitGraph(p, tuple(masks), indptr, indices)


def _apply(graph: ExplicitGraph, x: np.ndarray) -> np.ndarray:
    """A @ x for an exact (object dtype) vector or column block x."""
    deg = graph.degrees()
    out = np.zeros_like(x)
    if graph.indices.size == 0:
        return out
    gathered = x[graph.indices]
    nz = deg > 0
    out[nz] = np.add.reduceat(gathered, graph.indptr[:-1][nz], axis=0)
    return out


def _closed_walks(graph: ExplicitGraph, roots: Sequence[int], K: int) -> list[list[int]]:
    """For each root v, the counts (A^k)_{vv} for k = 0..K.

    Uses (A^k)_{vv} = <A^a e_v, A^b e_v> with a + b = k, so only about K/2
    products are needed.
    """
    N = graph.order
    half = (K + 1) // 2
    out = []
    # Work in column blocks to bound memory of the object arrays.
    block = max(1, min(len(roots), 2_000_000 // max(N, 1)))
    for start in range(0, len(roots), block):
        chunk = roots[start:start + block]
        x = np.zeros((N, len(chunk)), dtype=object)
        x[:, :] = 0
        for c, v in enumerate(chunk):
            x[v, c] = 1
        powers = [x]
        for _ in range(half):
            powers.append(_apply(graph, powers[-1]))
        for c in range(len(chunk)):
            walks = []
            for k in range(K + 1):
                a = k // 2
                b = k - a
                walks.append(int(np.dot(powers[a][:, c], powers[b][:, c])))
            out.append(walks)
    return out


def trace_moments(graph: ExplicitGraph, K: int, method: str = "auto") -> list[int]:
    """Exact tr(A^k) for k = 0..K.

    ``method``:
      * ``"walks"``  sum of closed-walk counts over every vertex;
      * ``"matrix"`` dense integer matrix powers (small graphs only);
      * ``"orbit"``  N times the closed-walk count at one vertex. Coordinate
        permutations act transitively on weight-r vectors, so all diagonal
        entries of A^k coincide; the count is taken at the first and last
        vertex and must agree.
      * ``"auto"``   ``walks`` when cheap, else ``orbit``.
    """
    if K < 0:
        raise ValueError("K must be >= 0")
    N = graph.order
    if method == "auto":
        method = "walks" if N * max(graph.indices.size, 1) <= 4_000_000 else "orbit"
    if method == "walks":
        per_root = _closed_walks(graph, list(range(N)), K)
        return [sum(w[k] for w in per_root) for k in range(K + 1)]
    if method == "orbit":
        roots = [0] if N == 1 else [0, N - 1]
        per_root = _closed_walks(graph, roots, K)
        if per_root[0] != per_root[-1]:
            raise RuntimeError(f"closed-walk counts differ between vertices of {graph.params}")
        return [N * w for w in per_root[0]]
    if method == "matrix":
        a = graph.dense(object)
        power = np.identity(N, dtype=object)
        out = []
        for k in range(K + 1):
            out.append(int(np.trace(power)))
            if k < K:
                power = power.dot(a)
        return out
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class ConsistencyResult:
    params: GraphParams
    K: int
    passed: bool
    first_failure: Optional[int]
    predicted: tuple[int, ...]
    observed: tuple[int, ...]

    def __bool__(self):
        return self.passed


def spectrum_consistency(params: ParamsLike, K: Optional[int] = None,
                         cap: int = DEFAULT_VERTEX_CAP, method: str = "auto") -> ConsistencyResult:
    """Compare sum_i mult_i E(i)^k with tr(A^k) of the explicit graph, k = 0..K.

    With at most r + 1 distinct eigenvalues, K = 2r + 1 moments pin the
    spectrum down; that is the default.
    """
    p = as_params(params)
    if K is None:
        K = 2 * min(p.r, p.n - p.r) + 1
    graph = build_graph(p, cap=cap)
    observed = trace_moments(graph, K, method=method)
    try:
        spec = full_spectrum(p)
        predicted = [spec.moment(k) for k in range(K + 1)]
    except DegenerateGraphError:
        predicted = [graph.order] + [0] * K
    first = next((k for k in range(K + 1) if predicted[k] != observed[k]), None)
    return ConsistencyResult(p, K, first is None, first, tuple(predicted), tuple(observed))


EdgeMask = Union[None, Callable[[int, int], bool], np.ndarray, Sequence[bool]]


def components(graph: ExplicitGraph, edge_mask: EdgeMask = None) -> list[int]:
    """Connected component sizes, largest first.

    ``edge_mask`` is either a predicate ``keep(u, v)`` called once per edge
    with u < v, or a boolean array aligned with ``graph.edge_array``.
    """
    us, vs = graph.edge_array
    if edge_mask is not None:
        if callable(edge_mask):
            keep = np.fromiter((bool(edge_mask(int(u), int(v))) for u, v in zip(us, vs)),
                               dtype=bool, count=us.size)
        else:
            keep = np.asarray(edge_mask, dtype=bool)
            if keep.shape != us.shape:
                raise ValueError(f"edge mask has shape {keep.shape}, expected {us.shape}")
        us, vs = us[keep], vs[keep]
    ds = DisjointSet(graph.order)
    for u, v in zip(us.tolist(), vs.tolist()):
        ds.union(u, v)
    return ds.component_sizes()


def write_edge_list(graph: ExplicitGraph, fh) -> int:
    """Write one "u v" line per edge (0-based, u < v). Returns the edge count."""
    us, vs = graph.edge_array
    for u, v in zip(us.tolist(), vs.tolist()):
        fh.write(f"{u} {v}\n")
    return int(us.size)
