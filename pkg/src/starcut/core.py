"""Star graphs on permutations and the graph primitives everything else uses.

Vertices of the n-dimensional star graph are the n! permutations of n
symbols; two permutations are adjacent exactly when one results from the
other by swapping the first symbol with the symbol at some later position.
Internally permutations are tuples over 0..n-1 and vertices are addressed
by Lehmer rank; anything user-facing (labels, error text) is 1-based.
"""

from __future__ import annotations

import itertools
from array import array
from collections import deque
from math import factorial, inf


class InputError(ValueError):
    """Invalid argument: bad permutation, out-of-range index, unknown mode."""


class CapacityError(InputError):
    """The requested graph is too large for the chosen representation."""


class InvariantViolationError(RuntimeError):
    """A guaranteed structural property failed to hold; implementation bug."""


# Materialized adjacency stores int32 ranks, so n! must stay below 2**31.
MATERIALIZED_MAX_N = 12
# Implicit mode keeps rank arithmetic within int64.
IMPLICIT_MAX_N = 20
# Auto mode materializes up to 9! = 362,880 vertices and stays implicit beyond.
AUTO_MATERIALIZE_MAX_N = 9


def _as_1based(symbols) -> str:
    return ",".join(str(s + 1) for s in symbols)


def validate_perm(p, n: int | None = None):
    """Check that p is a permutation of 0..len(p)-1 (internal 0-based form)."""
    m = len(p)
    if n is not None and m != n:
        raise InputError(f"expected a permutation of length {n}, got length {m}")
    if sorted(p) != list(range(m)):
        raise InputError(f"not a permutation of 1..{m}: {_as_1based(p)}")


def parse_perm(text: str) -> tuple[int, ...]:
    """Parse "3,4,1,2" (any n), or the digit shorthand "3412" for n <= 9."""
    text = text.strip()
    if "," in text:
        try:
            symbols = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise InputError(f"cannot parse permutation {text!r}") from None
    elif text.isdigit():
        symbols = [int(ch) for ch in text]
    else:
        raise InputError(f"cannot parse permutation {text!r}")
    p = tuple(s - 1 for s in symbols)
    validate_perm(p)
    return p


def format_perm(p, compact: bool = False) -> str:
    """Render a permutation with 1-based symbols, comma separated by default."""
    if compact:
        if len(p) > 9:
            raise InputError("compact digit form is only defined for n <= 9")
        return "".join(str(s + 1) for s in p)
    return _as_1based(p)


def star_neighbors(p) -> list[tuple[int, ...]]:
    """Neighbors of p: swap position 1 with position i, for i = 2..n ascending."""
    validate_perm(p)
    first = p[0]
    out = []
    for i in range(1, len(p)):
        q = list(p)
        q[0] = p[i]
        q[i] = first
        out.append(tuple(q))
    return out


def perm_rank(p) -> int:
    """Lehmer rank: index of p in lexicographic order of all permutations."""
    validate_perm(p)
    n = len(p)
    r = 0
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                smaller += 1
        r = r * (n - i) + smaller
    return r


def perm_unrank(r: int, n: int) -> tuple[int, ...]:
    """Inverse of perm_rank for permutations of length n."""
    if n < 1:
        raise InputError("n must be >= 1")
    f = factorial(n)
    if not 0 <= r < f:
        raise InputError(f"rank {r} out of range 0..{f - 1} for n={n}")
    avail = list(range(n))
    out = []
    for i in range(n):
        f //= n - i
        d, r = divmod(r, f)
        out.append(avail.pop(d))
    return tuple(out)


class StarGraph:
    """Immutable n-dimensional star graph addressed by Lehmer rank.

    mode "materialized" stores the adjacency as one flat int32 array,
    "implicit" computes neighbor ranks on demand, and "auto" materializes
    up to n = 9.  Instances never mutate after construction, so they can
    be shared freely across threads and forked workers.
    """

    def __init__(self, n: int, mode: str = "auto"):
        if n < 1:
            raise InputError("n must be >= 1")
        if mode == "auto":
            mode = "materialized" if n <= AUTO_MATERIALIZE_MAX_N else "implicit"
        if mode == "materialized":
            if n > MATERIALIZED_MAX_N:
                raise CapacityError(
                    f"materialized mode rejects n={n}: {n}! exceeds int32 ranks"
                )
        elif mode == "implicit":
            if n > IMPLICIT_MAX_N:
                raise CapacityError(
                    f"n={n} is beyond the supported range: {n}! exceeds int64 ranks"
                )
        else:
            raise InputError(f"unknown mode {mode!r}")
        self.n = n
        self.mode = mode
        self.num_vertices = factorial(n)
        self.degree = n - 1
        self.num_edges = self.num_vertices * (n - 1) // 2
        self._adj = self._materialize() if mode == "materialized" else None

    def _materialize(self):
        n = self.n
        # itertools.permutations yields lexicographic order, which matches
        # Lehmer rank order, so enumeration position doubles as the rank.
        perms = list(itertools.permutations(range(n)))
        index = {p: r for r, p in enumerate(perms)}
        adj = array("i", bytes(4 * self.num_vertices * self.degree))
        pos = 0
        for p in perms:
            first = p[0]
            for i in range(1, n):
                q = list(p)
                q[0] = p[i]
                q[i] = first
                adj[pos] = index[tuple(q)]
                pos += 1
        return adj

    def _check_vertex(self, v: int):
        if not 0 <= v < self.num_vertices:
            raise InputError(f"vertex rank {v} out of range for n={self.n}")

    def perm(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return perm_unrank(v, self.n)

    def label(self, v: int, compact: bool = False) -> str:
        return format_perm(self.perm(v), compact)

    def neighbors(self, v: int) -> list[int]:
        """Neighbor ranks of v, ordered by swap position ascending."""
        self._check_vertex(v)
        if self._adj is not None:
            d = self.degree
            return list(self._adj[v * d : (v + 1) * d])
        p = perm_unrank(v, self.n)
        return [perm_rank(q) for q in star_neighbors(p)]

    def adjacency_lists(self) -> list[tuple[int, ...]]:
        """All neighbor rows at once; handy for tight search loops."""
        if self._adj is not None:
            d = self.degree
            a = self._adj
            return [tuple(a[v * d : (v + 1) * d]) for v in range(self.num_vertices)]
        return [tuple(self.neighbors(v)) for v in range(self.num_vertices)]

    def has_edge(self, u: int, v: int) -> bool:
        """Adjacency test via the swap rule, O(n)."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        pu = perm_unrank(u, self.n)
        pv = perm_unrank(v, self.n)
        diff = [i for i in range(self.n) if pu[i] != pv[i]]
        if len(diff) != 2 or diff[0] != 0:
            return False
        i = diff[1]
        return pu[0] == pv[i] and pu[i] == pv[0]

    def edges(self):
        """All edges as (u, v) with u < v, sorted by (u, v)."""
        for u in range(self.num_vertices):
            for v in sorted(self.neighbors(u)):
                if v > u:
                    yield (u, v)

    def __repr__(self):
        return f"StarGraph(n={self.n}, mode={self.mode!r})"


def build_star_graph(n: int, mode: str = "auto") -> StarGraph:
    """Construct the n-dimensional star graph (see StarGraph for modes)."""
    return StarGraph(n, mode)


def _canon_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _vertex_set(g: StarGraph, vertices) -> set[int]:
    out = set()
    for v in vertices:
        g._check_vertex(v)
        out.add(v)
    return out


def _edge_key_set(g: StarGraph, edges) -> set[tuple[int, int]]:
    out = set()
    for u, v in edges:
        g._check_vertex(u)
        g._check_vertex(v)
        out.add(_canon_edge(u, v))
    return out


def components(g: StarGraph, removed_vertices=(), removed_edges=()) -> list[list[int]]:
    """Connected components of g minus the given vertices and edges.

    Components are ordered by their smallest member and each component is
    sorted ascending, so output is fully deterministic.
    """
    removed_v = _vertex_set(g, removed_vertices)
    removed_e = _edge_key_set(g, removed_edges)
    seen = bytearray(g.num_vertices)
    for r in removed_v:
        seen[r] = 1
    comps = []
    for start in range(g.num_vertices):
        if seen[start]:
            continue
        seen[start] = 1
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if seen[w]:
                    continue
                if removed_e and _canon_edge(u, w) in removed_e:
                    continue
                seen[w] = 1
                comp.append(w)
                queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def min_degree(g: StarGraph, removed_vertices=(), removed_edges=()):
    """Minimum degree among surviving vertices; inf when none survive.

    The inf sentinel lets "disconnected and minimum degree >= k" compose
    without special-casing total annihilation.
    """
    removed_v = _vertex_set(g, removed_vertices)
    removed_e = _edge_key_set(g, removed_edges)
    best = inf
    for v in range(g.num_vertices):
        if v in removed_v:
            continue
        deg = 0
        for w in g.neighbors(v):
            if w in removed_v:
                continue
            if removed_e and _canon_edge(v, w) in removed_e:
                continue
            deg += 1
        if deg < best:
            best = deg
            if best == 0:
                break
    return best


def neighborhood(g: StarGraph, X) -> list[int]:
    """N(X): vertices outside X adjacent to some member of X, sorted."""
    xs = _vertex_set(g, X)
    out = set()
    for u in xs:
        out.update(g.neighbors(u))
    out -= xs
    return sorted(out)


def edge_boundary(g: StarGraph, X) -> list[tuple[int, int]]:
    """All edges with exactly one endpoint in X, canonical and sorted."""
    xs = _vertex_set(g, X)
    out = set()
    for u in xs:
        for w in g.neighbors(u):
            if w not in xs:
                out.add(_canon_edge(u, w))
    return sorted(out)


def induced_edges(g: StarGraph, X) -> list[tuple[int, int]]:
    """Edges with both endpoints in X, canonical and sorted."""
    xs = _vertex_set(g, X)
    out = []
    for u in xs:
        for w in g.neighbors(u):
            if w > u and w in xs:
                out.append((u, w))
    out.sort()
    return out


def induced_min_degree(g: StarGraph, X):
    """Minimum degree of the subgraph induced by X; inf for empty X."""
    xs = _vertex_set(g, X)
    best = inf
    for u in xs:
        deg = sum(1 for w in g.neighbors(u) if w in xs)
        if deg < best:
            best = deg
            if best == 0:
                break
    return best
