"""Independent reference implementations used as test oracles.

Everything here deliberately avoids the library's code paths: neighbors via
permutation composition, components via union-find, minimum cuts via plain
subset enumeration with its own connectivity check.
"""

import itertools

from starcut import parse_perm, perm_rank


def rank_of(text: str) -> int:
    return perm_rank(parse_perm(text))


def ranks_of(*texts) -> list[int]:
    return sorted(rank_of(t) for t in texts)


def neighbors_by_composition(p):
    """Star neighbors computed as p composed with a position transposition."""
    n = len(p)
    out = []
    for i in range(1, n):
        tau = list(range(n))
        tau[0], tau[i] = tau[i], tau[0]
        out.append(tuple(p[tau[m]] for m in range(n)))
    return out


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def components_by_union_find(num_vertices, edges, removed_vertices=(), removed_edges=()):
    """Component partition via union-find; edges as (u, v) pairs."""
    removed_v = set(removed_vertices)
    removed_e = {tuple(sorted(e)) for e in removed_edges}
    uf = UnionFind(num_vertices)
    for u, v in edges:
        if u in removed_v or v in removed_v:
            continue
        if tuple(sorted((u, v))) in removed_e:
            continue
        uf.union(u, v)
    groups = {}
    for v in range(num_vertices):
        if v in removed_v:
            continue
        groups.setdefault(uf.find(v), []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda c: c[0])


def connected_induced_subgraphs(adjacency, max_size):
    """Yield every connected vertex set up to max_size exactly once.

    Anchor rule: a set is grown only from its smallest member, extending by
    exclusive neighbors with larger ids, so nothing repeats.
    """
    n = len(adjacency)

    def expand(sub, ext, anchor):
        yield sorted(sub)
        if len(sub) == max_size:
            return
        for idx, w in enumerate(ext):
            fresh = [
                u
                for u in adjacency[w]
                if u > anchor and u not in sub and not any(u in adjacency[s] for s in sub)
            ]
            sub.add(w)
            yield from expand(sub, ext[idx + 1:] + fresh, anchor)
            sub.remove(w)

    for v in range(n):
        yield from expand({v}, [u for u in adjacency[v] if u > v], v)


def brute_min_k_cut(num_vertices, edges, k, mode):
    """Minimum k-cut by enumerating every subset; only for tiny graphs.

    Returns the minimum size, or None when no valid cut exists.  A vertex
    remainder with fewer than two vertices counts as disconnected, matching
    the library's complete-graph convention.
    """
    adjacency = {v: set() for v in range(num_vertices)}
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    def degrees_ok(removed_v, removed_e):
        for v in range(num_vertices):
            if v in removed_v:
                continue
            deg = sum(
                1
                for w in adjacency[v]
                if w not in removed_v and tuple(sorted((v, w))) not in removed_e
            )
            if deg < k:
                return False
        return True

    if mode == "vertex":
        ground = list(range(num_vertices))
    else:
        ground = [tuple(sorted(e)) for e in edges]
    for size in range(1, len(ground) + (0 if mode == "vertex" else 1)):
        for combo in itertools.combinations(ground, size):
            if mode == "vertex":
                removed_v, removed_e = set(combo), set()
                if len(removed_v) == num_vertices:
                    continue
            else:
                removed_v, removed_e = set(), set(combo)
            comps = components_by_union_find(
                num_vertices, edges, removed_v, removed_e
            )
            survivors = num_vertices - len(removed_v)
            disconnected = len(comps) >= 2 or survivors < 2
            if disconnected and degrees_ok(removed_v, removed_e):
                return size
    return None
