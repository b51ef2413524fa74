"""Identify an unknown vertex from distinct observations inside its radius-r ball."""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations, product
from math import factorial, prod
from typing import Iterable, Sequence

from .classic import HammingView, JohnsonView, hamming_closed, johnson_closed
from .errors import InconsistentObservations, InfeasibleError, UnreachableError
from .graph import GraphView, _within, ball, n_of_gamma


@dataclass(frozen=True)
class ObservationSet:
    vertices: tuple
    radius: int

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("need at least one observation")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("observations must be distinct")
        if self.radius < 0:
            raise ValueError("radius must be non-negative")

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class ChannelConfig:
    graph: GraphView
    center: object
    radius: int
    count: int
    seed: int = 0


@dataclass
class Reconstruction:
    value: object  # None when ambiguous
    candidates: list
    ambiguous: bool
    method: str


def sorted_ball(g: GraphView, x, r: int) -> list:
    """B_r(x) in a canonical order, so seeded sampling is reproducible."""
    return sorted(ball(g, x, r), key=g.format_vertex)


def sample_observations(cfg: ChannelConfig) -> ObservationSet:
    """``count`` distinct vertices drawn uniformly without replacement from B_r(center)."""
    members = sorted_ball(cfg.graph, cfg.center, cfg.radius)
    if not 1 <= cfg.count <= len(members):
        raise ValueError(f"count={cfg.count} but |B_{cfg.radius}(center)| = {len(members)}")
    rng = random.Random(cfg.seed)
    return ObservationSet(tuple(rng.sample(members, cfg.count)), cfg.radius)


def _consistent(g: GraphView, obs: ObservationSet, pool: Iterable) -> list:
    tests = [_within(g, o, obs.radius) for o in obs.vertices]
    return [v for v in pool if all(t(v) for t in tests)]


def reconstruct_intersection(g: GraphView, obs: ObservationSet) -> set:
    """Every vertex within distance r of all observations."""
    found = _consistent(g, obs, ball(g, obs.vertices[0], obs.radius))
    if not found:
        raise InconsistentObservations("no vertex is within the claimed radius of every observation")
    return set(found)


def _n_value(g: GraphView, r: int) -> int:
    """N(G, r) for the Hamming and Johnson views; radii past the diameter see the whole space."""
    if r == 0:
        return 0
    if isinstance(g, HammingView):
        return hamming_closed(g.n, g.q, min(r, g.n))
    return johnson_closed(g.n, g.w, r)


def _settle(g: GraphView, obs: ObservationSet, pick, pool: list, method: str) -> Reconstruction:
    if pick is not None and _consistent(g, obs, [pick]):
        if len(obs) > _n_value(g, obs.radius):
            return Reconstruction(pick, [pick], False, method)
        # too few observations for the guarantee: the rule's answer may not be the only one
        found = sorted(reconstruct_intersection(g, obs), key=g.format_vertex)
        if len(found) == 1:
            return Reconstruction(pick, found, False, method)
        return Reconstruction(None, found, True, method + "+check")
    found = _consistent(g, obs, pool)
    if len(found) == 1 and len(obs) > _n_value(g, obs.radius):
        return Reconstruction(found[0], found, False, method + "+fallback")
    # the restricted pool may miss or undercount the centres; ask the full intersection
    found = sorted(reconstruct_intersection(g, obs), key=g.format_vertex)
    if len(found) == 1:
        return Reconstruction(found[0], found, False, method + "+fallback")
    return Reconstruction(None, found, True, method + "+fallback")


def reconstruct_majority_hamming(g: HammingView, obs: ObservationSet) -> Reconstruction:
    """Coordinatewise plurality; tied coordinates are resolved against the observations."""
    words = [g.digits(v) for v in obs.vertices]
    choices = []
    for k in range(g.n):
        counts = Counter(w[k] for w in words)
        top = max(counts.values())
        choices.append(sorted(s for s, c in counts.items() if c == top))
    if all(len(c) == 1 for c in choices):
        return _settle(g, obs, g.from_digits([c[0] for c in choices]), [], "majority")
    pool = [g.from_digits(ds) for ds in product(*choices)]
    return _settle(g, obs, None, pool, "majority")


def reconstruct_threshold_johnson(g: JohnsonView, obs: ObservationSet) -> Reconstruction:
    """Keep the w most frequent elements; ties across the cut are resolved against the observations."""
    counts = Counter(a for v in obs.vertices for a in v)
    ranked = sorted(range(1, g.n + 1), key=lambda a: (-counts[a], a))
    cut = counts[ranked[g.w - 1]]
    if g.w == g.n or counts[ranked[g.w]] != cut:
        return _settle(g, obs, tuple(sorted(ranked[: g.w])), [], "threshold")
    sure = [a for a in ranked if counts[a] > cut]
    tied = [a for a in ranked if counts[a] == cut]
    pool = [tuple(sorted(sure + list(extra))) for extra in combinations(tied, g.w - len(sure))]
    return _settle(g, obs, None, pool, "threshold")


def ambiguity_witness(g: GraphView, r: int) -> tuple:
    """An N(G, r)-set lying in two distinct balls, and its full candidate set."""
    res = n_of_gamma(g, r)
    x, y = res.witness
    common = sorted(ball(g, x, r) & ball(g, y, r), key=g.format_vertex)
    obs = ObservationSet(tuple(common), r)
    return obs, reconstruct_intersection(g, obs), res


def guarantee_sweep(g: GraphView, r: int, size: int) -> tuple:
    """(subsets tried, failures) over every centre and every ``size``-subset of its ball."""
    tried = 0
    failures = []
    vs = g.vertices()
    centres = [g.base_point()] if vs is None else list(vs)
    for x in centres:
        members = sorted_ball(g, x, r)
        for sub in combinations(members, size):
            tried += 1
            got = reconstruct_intersection(g, ObservationSet(sub, r))
            if got != {x}:
                failures.append((x, sub, got))
    return tried, failures


# Words under coordinate swaps.

DEFAULT_ORBIT_BUDGET = 10**6


def word_channel_distance(a: Sequence, b: Sequence, budget: int = DEFAULT_ORBIT_BUDGET) -> int:
    """Fewest coordinate swaps turning word a into word b (BFS over a's orbit)."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or Counter(a) != Counter(b):
        raise UnreachableError("words differ in length or symbol content")
    orbit = factorial(len(a)) // prod(factorial(c) for c in Counter(a).values())
    if orbit > budget:
        raise InfeasibleError("word orbit", orbit, budget)
    if a == b:
        return 0
    pairs = list(combinations(range(len(a)), 2))
    seen = {a: 0}
    queue = deque([a])
    while queue:
        w = queue.popleft()
        d = seen[w]
        for i, j in pairs:
            if w[i] == w[j]:
                continue
            u = list(w)
            u[i], u[j] = u[j], u[i]
            u = tuple(u)
            if u == b:
                return d + 1
            if u not in seen:
                seen[u] = d + 1
                queue.append(u)
    raise UnreachableError("target not found in orbit")  # unreachable given equal multisets


def permute_word(a: Sequence, g) -> tuple:
    """Coordinates of a rearranged by the permutation g: position j takes a[g(j)]."""
    return tuple(a[g(j) - 1] for j in range(1, len(a) + 1))


# Observation files and JSON records.

def format_observations(g: GraphView, obs: ObservationSet, desc: str | None = None) -> str:
    lines = [f"# graph={desc or g.name} r={obs.radius}"]
    lines += [g.format_vertex(v) for v in obs.vertices]
    return "\n".join(lines) + "\n"


def read_observation_header(text: str) -> tuple:
    """(graph description, radius, vertex lines) from an observation file."""
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("observation file must start with '# graph=<desc> r=<r>'")
    fields = dict(tok.split("=", 1) for tok in lines[0].lstrip("#").split() if "=" in tok)
    if "graph" not in fields or "r" not in fields:
        raise ValueError(f"bad header {lines[0]!r}")
    body = [ln for ln in lines[1:] if ln and not ln.startswith("#")]
    return fields["graph"], int(fields["r"]), body


def parse_observations(g: GraphView, r: int, lines: list) -> ObservationSet:
    return ObservationSet(tuple(g.parse_vertex(ln) for ln in lines), r)


def report_record(g: GraphView, obs: ObservationSet, candidates: Iterable, seed=None, desc: str | None = None) -> dict:
    cands = sorted(candidates, key=g.format_vertex)
    return {
        "graph": desc or g.name,
        "r": obs.radius,
        "observations": [g.format_vertex(v) for v in obs.vertices],
        "candidates": [g.format_vertex(v) for v in cands],
        "ambiguous": len(cands) != 1,
        "seed": None if seed is None else str(seed),
    }
