"""Hamming and Johnson spaces, and a small catalogue of strongly regular graphs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import ConsistencyError
from .graph import ExplicitGraph, GraphView, is_connected, n_of_gamma


class HammingView(GraphView):
    """F_q^n with words encoded as base-q integers, first coordinate most significant."""

    transitive = True

    def __init__(self, n: int, q: int):
        if n < 1 or q < 2:
            raise ValueError("need n >= 1 and q >= 2")
        if q > 36:
            raise ValueError("alphabets above 36 symbols have no single-character format")
        self.n, self.q = n, q
        self.name = f"hamming:{n}:{q}"
        self._place = [q ** (n - 1 - k) for k in range(n)]

    def digits(self, v: int) -> list:
        return [(v // p) % self.q for p in self._place]

    def from_digits(self, ds) -> int:
        return sum(d * p for d, p in zip(ds, self._place))

    def neighbors(self, v: int):
        out = []
        for p in self._place:
            d = (v // p) % self.q
            base = v - d * p
            out.extend(base + s * p for s in range(self.q) if s != d)
        return out

    def vertices(self):
        return range(self.q ** self.n)

    def order(self):
        return self.q ** self.n

    def base_point(self):
        return 0

    def metric(self, x, y):
        if x == y:
            return 0
        q = self.q
        d = 0
        for _ in range(self.n):
            d += x % q != y % q
            x //= q
            y //= q
        return d

    def format_vertex(self, v):
        return "".join("0123456789abcdefghijklmnopqrstuvwxyz"[d] for d in self.digits(v))

    def parse_vertex(self, text):
        text = text.strip()
        if len(text) != self.n:
            raise ValueError(f"expected a word of length {self.n}, got {text!r}")
        ds = [int(c, 36) for c in text]
        if any(d >= self.q for d in ds):
            raise ValueError(f"symbol out of range for q={self.q}: {text!r}")
        return self.from_digits(ds)

    def __contains__(self, v):
        return isinstance(v, int) and 0 <= v < self.q ** self.n


class JohnsonView(GraphView):
    """w-subsets of {1..n} as sorted tuples; neighbours swap one element."""

    transitive = True

    def __init__(self, n: int, w: int):
        if not 1 <= w <= n - 1:
            raise ValueError("need 1 <= w <= n-1")
        self.n, self.w = n, w
        self.name = f"johnson:{n}:{w}"

    def neighbors(self, v: tuple):
        inside = set(v)
        outside = [b for b in range(1, self.n + 1) if b not in inside]
        return [tuple(sorted(inside - {a} | {b})) for a in v for b in outside]

    def vertices(self):
        return list(combinations(range(1, self.n + 1), self.w))

    def order(self):
        return comb(self.n, self.w)

    def base_point(self):
        return tuple(range(1, self.w + 1))

    def metric(self, x, y):
        return self.w - len(set(x).intersection(y))

    def format_vertex(self, v):
        return "{" + ",".join(map(str, v)) + "}"

    def parse_vertex(self, text):
        items = tuple(sorted(int(a) for a in re.split(r"[\s,{}]+", text) if a))
        if len(items) != self.w or len(set(items)) != self.w or not all(1 <= a <= self.n for a in items):
            raise ValueError(f"not a {self.w}-subset of 1..{self.n}: {text!r}")
        return items

    def __contains__(self, v):
        return isinstance(v, tuple) and len(v) == self.w and list(v) == sorted(set(v)) and all(
            1 <= a <= self.n for a in v
        )


def hamming_closed(n: int, q: int, r: int) -> int:
    if n < 1 or q < 2 or not 1 <= r <= n:
        raise ValueError(f"need n >= 1, q >= 2, 1 <= r <= n; got n={n}, q={q}, r={r}")
    return q * sum(comb(n - 1, i) * (q - 1) ** i for i in range(r))


def johnson_closed(n: int, w: int, r: int) -> int:
    if not 1 <= w <= n - 1 or r < 1:
        raise ValueError(f"need 1 <= w <= n-1 and r >= 1; got n={n}, w={w}, r={r}")
    total = n * sum(Fraction(comb(w - 1, i) * comb(n - w - 1, i), i + 1) for i in range(r))
    if total.denominator != 1:
        raise ConsistencyError(f"johnson_closed({n}, {w}, {r}) = {total} is not an integer")
    return total.numerator


# Strongly regular families.

FAMILIES = ("triangle", "lattice", "paley", "multipartite", "complement")


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


@dataclass(frozen=True)
class SrgFamily:
    kind: str
    params: tuple = ()
    base: "SrgFamily | None" = None

    def __post_init__(self):
        p = self.params
        if self.kind == "triangle":
            if len(p) != 1 or p[0] < 4:
                raise ValueError("T(m) needs m >= 4")
        elif self.kind == "lattice":
            if len(p) != 1 or p[0] < 2:
                raise ValueError("L2(m) needs m >= 2")
        elif self.kind == "paley":
            if len(p) != 1 or not _is_prime(p[0]) or p[0] % 4 != 1:
                raise ValueError("P(q) needs q prime with q = 1 mod 4")
        elif self.kind == "multipartite":
            if len(p) != 2 or p[0] < 2 or p[1] < 2:
                raise ValueError("O^t_m needs t >= 2 parts of size m >= 2")
        elif self.kind == "complement":
            if self.base is None:
                raise ValueError("a complement needs a base family")
        else:
            raise ValueError(f"unknown family {self.kind!r}; choose from {', '.join(FAMILIES)}")

    def __str__(self) -> str:
        if self.kind == "complement":
            return f"complement({self.base})"
        label = {"triangle": "T", "lattice": "L2", "paley": "P", "multipartite": "O"}[self.kind]
        if self.kind == "multipartite":
            return f"O^{self.params[0]}_{self.params[1]}"
        return f"{label}({self.params[0]})"

    def expected(self) -> tuple:
        """(v, k, lambda, mu, N1) from the family formulas; N1 is None for a disconnected complement."""
        if self.kind == "triangle":
            (m,) = self.params
            return m * (m - 1) // 2, 2 * (m - 2), m - 2, 4, m
        if self.kind == "lattice":
            (m,) = self.params
            return m * m, 2 * (m - 1), m - 2, 2, m
        if self.kind == "paley":
            (q,) = self.params
            return q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4, (q + 3) // 4
        if self.kind == "multipartite":
            t, m = self.params
            v = t * m
            return v, v - m, v - 2 * m, v - m, v - m
        v, k, lam, mu, _ = self.base.expected()
        kc, lc, mc = v - k - 1, v - 2 * k - 2 + mu, v - 2 * k + lam
        connected = mc > 0
        return v, kc, lc, mc, max(lc + 2, mc) if connected else None

    def build(self) -> ExplicitGraph:
        name = str(self)
        if self.kind == "triangle":
            (m,) = self.params
            vs = list(combinations(range(1, m + 1), 2))
            edges = [(a, b) for a, b in combinations(vs, 2) if len(set(a) & set(b)) == 1]
            return _labelled(vs, edges, lambda v: f"{v[0]}.{v[1]}", name)
        if self.kind == "lattice":
            (m,) = self.params
            vs = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1)]
            edges = [(a, b) for a, b in combinations(vs, 2) if (a[0] == b[0]) != (a[1] == b[1])]
            return _labelled(vs, edges, lambda v: f"{v[0]}.{v[1]}", name)
        if self.kind == "paley":
            (q,) = self.params
            squares = {x * x % q for x in range(1, q)}
            vs = list(range(q))
            edges = [(a, b) for a, b in combinations(vs, 2) if (b - a) % q in squares]
            return _labelled(vs, edges, str, name)
        if self.kind == "multipartite":
            t, m = self.params
            vs = [(i, j) for i in range(1, t + 1) for j in range(1, m + 1)]
            edges = [(a, b) for a, b in combinations(vs, 2) if a[0] != b[0]]
            return _labelled(vs, edges, lambda v: f"{v[0]}.{v[1]}", name)
        return self.base.build().complement(name)


def _labelled(vs, edges, label, name) -> ExplicitGraph:
    return ExplicitGraph.from_edges([label(v) for v in vs], [(label(a), label(b)) for a, b in edges], name=name)


def parse_family(text: str) -> SrgFamily:
    """'triangle:5', 'lattice:3', 'paley:13', 'multipartite:3:2', 'complement:triangle:5'."""
    head, _, rest = text.partition(":")
    if head == "complement":
        return SrgFamily("complement", (), parse_family(rest))
    try:
        params = tuple(int(a) for a in rest.split(":")) if rest else ()
    except ValueError:
        raise ValueError(f"bad family parameters in {text!r}") from None
    return SrgFamily(head, params)


@dataclass
class SrgReport:
    family: SrgFamily
    expected: tuple
    computed: tuple  # (v, k, lambda, mu, N1); N1 is None when disconnected
    connected: bool
    strongly_regular: bool

    @property
    def matches(self) -> bool:
        return self.strongly_regular and self.computed == self.expected


def srg_parameters(g: ExplicitGraph) -> tuple:
    """(v, k, lambda, mu, strongly_regular); k/lambda/mu are None when not constant."""
    vs = g.vertices()
    adj = {v: set(g.neighbors(v)) for v in vs}
    ks = {len(ns) for ns in adj.values()}
    lams, mus = set(), set()
    for a, b in combinations(vs, 2):
        common = len(adj[a] & adj[b])
        (lams if b in adj[a] else mus).add(common)
    one = lambda s: next(iter(s)) if len(s) == 1 else None
    k, lam, mu = one(ks), one(lams), one(mus)
    regular = k is not None and (lam is not None or not lams) and (mu is not None or not mus)
    return len(vs), k, lam, mu, regular


def srg_family(fam: SrgFamily) -> tuple:
    """Build the family's graph and verify its parameters against the formulas."""
    g = fam.build()
    v, k, lam, mu, regular = srg_parameters(g)
    connected = is_connected(g)
    n1 = n_of_gamma(g, 1).value if connected else None
    return g, SrgReport(fam, fam.expected(), (v, k, lam, mu, n1), connected, regular)


def is_complete_multipartite(g: GraphView) -> bool:
    """Non-adjacency (plus equality) is an equivalence with equal-size classes."""
    vs = list(g.vertices())
    adj = {v: set(g.neighbors(v)) for v in vs}
    classes = {frozenset(u for u in vs if u not in adj[v]) for v in vs}
    cover = sum(len(c) for c in classes)
    return cover == len(vs) and len({len(c) for c in classes}) == 1 and all(
        not (adj[a] & c) for c in classes for a in c
    )


def catalogue(max_complement_order: int = 50) -> list:
    """Instances exercised by the verification sweep, complements included."""
    fams = [SrgFamily("triangle", (m,)) for m in range(4, 8)]
    fams += [SrgFamily("lattice", (m,)) for m in range(2, 7)]
    fams += [SrgFamily("paley", (q,)) for q in (5, 13, 17, 29)]
    fams += [SrgFamily("multipartite", (t, m)) for t in range(2, 16) for m in range(2, 16) if t * m <= 30]
    comps = [SrgFamily("complement", (), f) for f in fams if f.expected()[0] <= max_complement_order]
    return fams + comps
