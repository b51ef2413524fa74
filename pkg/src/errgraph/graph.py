"""Metric balls over implicit graphs and the reconstruction parameter N(G, r).

A :class:`GraphView` supplies a neighbour oracle and, optionally, an explicit
vertex list and a closed-form metric.  Everything here falls back to BFS when
no metric is given, so BFS is also the oracle the closed metrics are checked
against.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Callable, Hashable, Iterable, NamedTuple

from .errors import InfeasibleError, UnreachableError

Vertex = Hashable


class GraphView:
    """Implicit simple undirected connected graph.

    Subclasses override :meth:`neighbors`; explicit graphs also override
    :meth:`vertices`.  ``transitive`` is a promise by the caller, never
    detected, and lets :func:`n_of_gamma` fix one base point.
    """

    transitive: bool = False
    name: str = "graph"

    def neighbors(self, v: Vertex) -> Iterable[Vertex]:
        raise NotImplementedError

    def vertices(self) -> Iterable[Vertex] | None:
        return None

    def order(self) -> int | None:
        vs = self.vertices()
        return None if vs is None else sum(1 for _ in vs)

    def base_point(self) -> Vertex:
        vs = self.vertices()
        if vs is None:
            raise NotImplementedError("implicit graph without a base point")
        return next(iter(vs))

    def metric(self, x: Vertex, y: Vertex) -> int | None:
        """Closed-form distance if the view has one, else None."""
        return None

    def format_vertex(self, v: Vertex) -> str:
        return str(v)

    def parse_vertex(self, text: str) -> Vertex:
        raise NotImplementedError

    def dist(self, x: Vertex, y: Vertex) -> int:
        d = self.metric(x, y)
        return distance(self, x, y) if d is None else d

    def __contains__(self, v: Vertex) -> bool:
        vs = self.vertices()
        return vs is not None and v in set(vs)


class ExplicitGraph(GraphView):
    """A graph given by an adjacency mapping; vertex order is insertion order."""

    def __init__(self, adjacency: dict, name: str = "explicit", transitive: bool = False):
        self.adj = {v: tuple(ns) for v, ns in adjacency.items()}
        self._set = {v: frozenset(ns) for v, ns in self.adj.items()}
        self.name = name
        self.transitive = transitive
        for v, ns in self._set.items():
            if v in ns:
                raise ValueError(f"loop at {v!r}")
            for u in ns:
                if u not in self._set or v not in self._set[u]:
                    raise ValueError(f"edge {v!r}-{u!r} is not symmetric")

    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], edges: Iterable[tuple], **kw) -> "ExplicitGraph":
        adj = {v: [] for v in vertices}
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        return cls(adj, **kw)

    def neighbors(self, v):
        return self.adj[v]

    def vertices(self):
        return list(self.adj)

    def order(self):
        return len(self.adj)

    def __contains__(self, v):
        return v in self._set

    def parse_vertex(self, text):
        text = text.strip()
        for v in self.adj:
            if str(v) == text:
                return v
        raise ValueError(f"unknown vertex {text!r}")

    def complement(self, name: str | None = None) -> "ExplicitGraph":
        vs = list(self.adj)
        adj = {v: [u for u in vs if u != v and u not in self._set[v]] for v in vs}
        g = ExplicitGraph.__new__(ExplicitGraph)
        g.adj = {v: tuple(ns) for v, ns in adj.items()}
        g._set = {v: frozenset(ns) for v, ns in adj.items()}
        g.name = name or f"complement({self.name})"
        g.transitive = self.transitive
        return g


def materialize(g: GraphView) -> ExplicitGraph:
    vs = g.vertices()
    if vs is None:
        raise ValueError("cannot materialize an implicit graph without vertex enumeration")
    out = ExplicitGraph({v: list(g.neighbors(v)) for v in vs}, name=g.name, transitive=g.transitive)
    # keep the source's vertex text format
    out.format_vertex = g.format_vertex
    if type(g).parse_vertex is not GraphView.parse_vertex:
        out.parse_vertex = g.parse_vertex
    return out


@dataclass(frozen=True)
class LocalProfile:
    c: int
    a: int
    b: int

    @property
    def degree(self) -> int:
        return self.c + self.a + self.b


@dataclass
class NResult:
    value: int
    per_distance: dict = field(default_factory=dict)
    witness: tuple | None = None
    witness_classes: list = field(default_factory=list)
    by_class: dict = field(default_factory=dict)

    @property
    def argmax(self) -> list:
        return sorted(s for s, v in self.per_distance.items() if v == self.value)


def distance(g: GraphView, x: Vertex, y: Vertex) -> int:
    """BFS path distance; raises UnreachableError for disconnected pairs."""
    if x == y:
        return 0
    seen = {x}
    frontier = [x]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for u in g.neighbors(v):
                if u == y:
                    return d
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    raise UnreachableError(f"{g.format_vertex(y)} is unreachable from {g.format_vertex(x)}")


def spheres_up_to(g: GraphView, x: Vertex, r: int) -> list:
    """[S_0(x), ..., S_r(x)] as lists in BFS discovery order (trailing empties kept)."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    spheres = [[x]]
    seen = {x}
    for _ in range(r):
        nxt = []
        for v in spheres[-1]:
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        spheres.append(nxt)
    return spheres


def ball(g: GraphView, x: Vertex, r: int) -> set:
    return {v for s in spheres_up_to(g, x, r) for v in s}


def _within(g: GraphView, center: Vertex, r: int) -> Callable[[Vertex], bool]:
    """Membership test for B_r(center): closed metric if available, else one BFS."""
    if g.metric(center, center) is not None:
        return lambda v: g.metric(center, v) <= r
    members = ball(g, center, r)
    return members.__contains__


def intersection_size(g: GraphView, x: Vertex, y: Vertex, r: int) -> int:
    """|B_r(x) & B_r(y)| by walking the smaller ball and testing distance to the other centre."""
    if x == y:
        raise ValueError("centres must be distinct")
    walk = ball(g, x, r)
    if not g.transitive:
        by = ball(g, y, r)
        if len(by) < len(walk):
            walk, y = by, x
    inside = _within(g, y, r)
    return sum(1 for v in walk if inside(v))


def ball_decomposition_check(g: GraphView, x: Vertex, y: Vertex, r: int) -> bool:
    """Check the annulus decomposition of B_r(x) & B_r(y) as a set identity."""
    s = distance(g, x, y)
    bxr = ball(g, x, r)
    byr = ball(g, y, r)
    lhs = bxr & byr
    if r >= s:
        inner = ball(g, x, r - s)
        rhs = inner | ((bxr - inner) & byr)
    else:
        hole = ball(g, x, s - r - 1) if s - r - 1 >= 0 else set()
        rhs = byr & (bxr - hole)
    return lhs == rhs


def local_profile(g: GraphView, x: Vertex, y: Vertex) -> LocalProfile:
    """Neighbours of y one step closer to, level with, and further from x."""
    i = g.dist(x, y)
    c = a = b = 0
    for z in g.neighbors(y):
        d = g.dist(x, z)
        if d == i - 1:
            c += 1
        elif d == i:
            a += 1
        else:
            b += 1
    return LocalProfile(c, a, b)


def _centers(g: GraphView) -> Iterable[Vertex]:
    if g.transitive:
        return [g.base_point()]
    vs = g.vertices()
    if vs is None:
        raise InfeasibleError("pair sweep over an implicit, non-transitive graph", -1, 0)
    return vs


def lambda_mu(g: GraphView) -> tuple:
    """(max common neighbours over edges, max common neighbours over distance-2 pairs)."""
    lam = 0
    mu = None
    for x in _centers(g):
        nx = set(g.neighbors(x))
        s = spheres_up_to(g, x, 2)
        for y in s[1]:
            lam = max(lam, len(nx.intersection(g.neighbors(y))))
        for y in s[2]:
            m = len(nx.intersection(g.neighbors(y)))
            mu = m if mu is None else max(mu, m)
    if mu is None:
        raise ValueError("diameter < 2: mu is undefined")
    return lam, mu


DEFAULT_PAIR_BUDGET = 10**7


def n_of_gamma(g: GraphView, r: int, budget: int = DEFAULT_PAIR_BUDGET, all_pairs: bool = False) -> NResult:
    """N(G, r) = max over distinct x, y of |B_r(x) & B_r(y)|, with the per-distance table.

    Transitive views fix x at the base point unless ``all_pairs``; otherwise every
    pair at distance <= 2r is visited once, with all radius-r balls cached.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    per: dict = {}
    wit: dict = {}
    if g.transitive and not all_pairs:
        x = g.base_point()
        spheres = spheres_up_to(g, x, 2 * r)
        bx = {v for s in spheres[: r + 1] for v in s}
        work = sum(len(s) for s in spheres) * len(bx)
        if work > budget:
            raise InfeasibleError(f"N({g.name}, {r}) from a base point", work, budget)
        for s_idx in range(1, 2 * r + 1):
            for y in spheres[s_idx]:
                inside = _within(g, y, r)
                val = sum(1 for v in bx if inside(v))
                if val > per.get(s_idx, -1):
                    per[s_idx], wit[s_idx] = val, (x, y)
    else:
        vs = g.vertices()
        if vs is None:
            raise InfeasibleError(f"N({g.name}, {r}) over all pairs of an implicit graph", -1, budget)
        vs = list(vs)
        balls = {}
        work = 0
        for v in vs:
            balls[v] = ball(g, v, r)
            work += len(balls[v])
            if work * len(vs) > budget:
                raise InfeasibleError(f"N({g.name}, {r}) over all pairs", work * len(vs), budget)
        index = {v: k for k, v in enumerate(vs)}
        for x in vs:
            spheres = spheres_up_to(g, x, 2 * r)
            bx = balls[x]
            for s_idx in range(1, 2 * r + 1):
                for y in spheres[s_idx]:
                    if index[y] < index[x]:
                        continue
                    val = len(bx & balls[y])
                    if val > per.get(s_idx, -1):
                        per[s_idx], wit[s_idx] = val, (x, y)
    if not per:
        raise ValueError("graph has a single vertex")
    value = max(per.values())
    best = min(s for s, v in per.items() if v == value)
    return NResult(value=value, per_distance=dict(sorted(per.items())), witness=wit[best])


class LPBound(NamedTuple):
    exact: Fraction
    value: int


def lp_lower_bound(k: int, mu: int, n1: int) -> LPBound:
    """Lower bound on N_2(G, 2) for a k-regular graph with given mu and N(G, 1).

    mu(mu-1)/2 is an integer, so the exact value is too; the floor is kept as a guard.
    """
    if k < 2 or mu < 1 or n1 < 2:
        raise ValueError("need k >= 2, mu >= 1, N(G,1) >= 2")
    exact = mu * (k - 1 - Fraction(mu - 1, 2) * (n1 - 2)) + 2
    return LPBound(exact, floor(exact))


class Multipartite(NamedTuple):
    t: int
    m: int


def regular_upper_bound(v: int, lam: int, k: int) -> tuple:
    """(v + lambda)/2 and the complete multipartite class that can attain it, if any."""
    if k == v - 1:
        raise ValueError("complete graphs (k = v - 1) are outside the bound's scope")
    if not 0 < k <= v - 2:
        raise ValueError(f"need 0 < k <= v - 2, got v={v}, k={k}")
    bound = Fraction(v + lam, 2)
    m = k - lam
    eq = Multipartite(v // m, m) if m == v - k and m > 0 and v % m == 0 else None
    return bound, eq


def distance_matrix(g: GraphView) -> tuple:
    vs = list(g.vertices())
    index = {v: i for i, v in enumerate(vs)}
    inf = len(vs) + 1
    rows = []
    for v in vs:
        row = [inf] * len(vs)
        for d, sphere in enumerate(all_spheres(g, v)):
            for u in sphere:
                row[index[u]] = d
        rows.append(row)
    return vs, rows


def brute_automorphism_count(g: GraphView, cap: int = 40) -> int:
    """|Aut(G)| by backtracking over distance-preserving partial maps."""
    vs = g.vertices()
    if vs is None:
        raise InfeasibleError("automorphism count needs explicit vertices", -1, cap)
    vs, dm = distance_matrix(g)
    nv = len(vs)
    if nv > cap:
        raise InfeasibleError("automorphism count", nv, cap)
    profile = [tuple(sorted(row)) for row in dm]
    # BFS order keeps each new vertex adjacent to an already-mapped one
    order = []
    seen = set()
    for start in range(nv):
        if start in seen:
            continue
        q = deque([start])
        seen.add(start)
        while q:
            a = q.popleft()
            order.append(a)
            for b in range(nv):
                if dm[a][b] == 1 and b not in seen:
                    seen.add(b)
                    q.append(b)
    image = [-1] * nv
    used = [False] * nv
    count = 0

    def extend(depth: int) -> None:
        nonlocal count
        if depth == nv:
            count += 1
            return
        a = order[depth]
        done = order[:depth]
        for b in range(nv):
            if used[b] or profile[b] != profile[a]:
                continue
            if all(dm[a][u] == dm[b][image[u]] for u in done):
                image[a] = b
                used[b] = True
                extend(depth + 1)
                used[b] = False
        image[a] = -1

    extend(0)
    return count


def is_connected(g: GraphView) -> bool:
    vs = list(g.vertices())
    if not vs:
        return True
    return sum(map(len, all_spheres(g, vs[0]))) == len(vs)


def degrees(g: GraphView) -> set:
    return {sum(1 for _ in g.neighbors(v)) for v in g.vertices()}


def all_spheres(g: GraphView, x: Vertex) -> list:
    """Spheres around x until the component is exhausted."""
    spheres = [[x]]
    seen = {x}
    while True:
        nxt = []
        for v in spheres[-1]:
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        if not nxt:
            return spheres
        spheres.append(nxt)


def diameter(g: GraphView) -> int:
    centers = [g.base_point()] if g.transitive else g.vertices()
    return max(len(all_spheres(g, x)) - 1 for x in centers)


def format_adjacency(g: GraphView) -> str:
    """One line per vertex: ``id: n1 n2 ...``."""
    lines = []
    for v in g.vertices():
        nb = " ".join(g.format_vertex(u) for u in g.neighbors(v))
        lines.append(f"{g.format_vertex(v)}: {nb}".rstrip())
    return "\n".join(lines) + "\n"


def parse_adjacency(text: str, name: str = "file") -> ExplicitGraph:
    adj: dict = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ValueError(f"missing ':' in adjacency line {raw!r}")
        adj.setdefault(head.strip(), [])
        for u in tail.split():
            adj[head.strip()].append(u)
    for v, ns in list(adj.items()):
        for u in ns:
            adj.setdefault(u, [])
    return ExplicitGraph(adj, name=name)
