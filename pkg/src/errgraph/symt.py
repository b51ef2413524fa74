"""The transposition Cayley graph Sym_n(T) and its reconstruction numbers."""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .counts import ball_size, restricted_stirling, sphere_size
from .errors import InfeasibleError
from .graph import GraphView, LocalProfile, NResult
from .perm import (
    CycleType,
    Permutation,
    all_permutations,
    apply_transposition,
    cayley_distance,
    class_reps,
    enumerate_ball,
    enumerate_class,
    parse_permutation,
    transpositions,
)

DEFAULT_BUDGET = 10**8


class SymnTView(GraphView):
    """Sym_n with edges {p, p*t} for every transposition t."""

    transitive = True

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("n must be at least 2")
        self.n = n
        self.name = f"symt:{n}"
        self._pairs = list(combinations(range(1, n + 1), 2))

    def neighbors(self, p: Permutation):
        return [apply_transposition(p, i, j) for i, j in self._pairs]

    def vertices(self):
        return list(all_permutations(self.n))

    def order(self):
        from math import factorial

        return factorial(self.n)

    def base_point(self):
        return Permutation.identity(self.n)

    def metric(self, x, y):
        return cayley_distance(x, y)

    def format_vertex(self, v):
        return str(v)

    def parse_vertex(self, text):
        return parse_permutation(text, self.n)

    def __contains__(self, v):
        return isinstance(v, Permutation) and v.n == self.n


def local_params_formula(ct: CycleType, n: int | None = None) -> LocalProfile:
    """Down/level/up degrees of any y of type ``ct`` relative to e (ct padded with fixed points to n)."""
    n = ct.n if n is None else n
    if n < ct.n:
        raise ValueError(f"cycle type of degree {ct.n} does not fit in n={n}")
    sq = sum(j * j * m for j, m in ct.h.items()) + (n - ct.n)
    c = (sq - n) // 2
    return LocalProfile(c=c, a=0, b=(n * n - sq) // 2)


def labeled_edge_count(n: int, r: int) -> int:
    """Edges {z, z*y} between S_{r-1} and S_r carrying one fixed transposition label y."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"need 1 <= r <= n-1, got n={n}, r={r}")
    return sum((-1) ** k * sphere_size(n, r - 1 - k) for k in range(r))


def total_edge_count(n: int, r: int) -> int:
    """All edges between S_{r-1} and S_r."""
    return comb(n, 2) * labeled_edge_count(n, r)


def n1_sym_closed(n: int, r: int) -> int:
    """N_1(Sym_n(T), r) = 2(|S_{r-1}| + |S_{r-3}| + ...)."""
    if not 2 <= r <= n - 1:
        raise ValueError(f"need 2 <= r <= n-1, got n={n}, r={r}")
    return 2 * sum(sphere_size(n, i) for i in range(r - 1, -1, -2))


def z_decomposition(n: int, r: int, kind: str) -> int:
    """|Z_1| + |Z_2| for y* a 3-cycle (kind '3') or a double transposition (kind '22')."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return restricted_stirling(kind, n, r) + restricted_stirling(kind, n, r + 1)


def n2_sym_closed(n: int, r: int) -> int:
    return ball_size(n, r - 1) + max(z_decomposition(n, r, k) for k in ("3", "22"))


def general_formula(n: int, r: int) -> int:
    return ball_size(n, r - 1) + restricted_stirling("3", n, r) + restricted_stirling("3", n, r + 1)


# smallest n from which each radius has a proof
PROVEN_FROM = {1: 3, 2: 5, 3: 16}


def n_sym_closed(n: int, r: int) -> tuple:
    """(value, 'proven' | 'asymptotic') for N(Sym_n(T), r)."""
    if r < 1:
        raise ValueError("r must be at least 1")
    value = general_formula(n, r)
    start = PROVEN_FROM.get(r)
    return value, "proven" if start is not None and n >= start else "asymptotic"


def r2_formula(n: int) -> int:
    return 3 * (n + 1) * (n - 2) // 2


def r3_formula(n: int) -> int:
    return (
        ball_size(n, 2)
        + (n + 2) * (n - 3)
        + 24 * comb(n - 3, 2)
        + 22 * comb(n - 3, 3)
        + 6 * comb(n - 3, 4)
    )


def n1_r3_formula(n: int) -> int:
    return 2 * sphere_size(n, 0) + 2 * sphere_size(n, 2)


# Batched arithmetic on blocks of permutations (rows are 0-based image arrays).

@lru_cache(maxsize=8)
def ball_array(n: int, r: int) -> tuple:
    """(rows, ranks) for B_r(e) in Sym_n(T), enumerated sphere by sphere."""
    rows = np.array([p.images for p in enumerate_ball(n, r)], dtype=np.int16) - 1
    ranks = np.concatenate([np.full(sphere_size(n, i), i, dtype=np.int16) for i in range(min(r, n - 1) + 1)])
    rows.setflags(write=False)
    ranks.setflags(write=False)
    return rows, ranks


def cycle_counts(block: np.ndarray) -> np.ndarray:
    """Number of cycles of each row; orbit minima by repeated squaring."""
    m, n = block.shape
    idx = np.arange(n, dtype=block.dtype)
    low = np.broadcast_to(idx, block.shape).copy()
    step = block
    span = 1
    while span < n:
        low = np.minimum(low, np.take_along_axis(low, step.astype(np.intp), axis=1))
        step = np.take_along_axis(step, step.astype(np.intp), axis=1)
        span *= 2
    return (low == idx).sum(axis=1)


def distances_to(block: np.ndarray, y: Permutation) -> np.ndarray:
    """Cayley distance from every row to y: n - cycles(y^-1 z)."""
    yinv = np.array(y.inverse().images, dtype=block.dtype) - 1
    return block.shape[1] - cycle_counts(yinv[block])


def targeted_intersection(n: int, r: int, y: Permutation) -> int:
    """|B_r(e) & B_r(y)| by walking B_r(e)."""
    rows, _ = ball_array(n, r)
    return int((distances_to(rows, y) <= r).sum())


def n_sym_brute(n: int, r: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> NResult:
    """N(Sym_n(T), r) from one representative per conjugacy class at each distance s <= 2r."""
    if r < 1:
        raise ValueError("r must be at least 1")
    top = min(2 * r, n - 1)
    reps = [ct for s in range(1, top + 1) for ct in class_reps(n, s)]
    size = ball_size(n, r)
    work = size * len(reps)
    if work > budget:
        raise InfeasibleError(f"N(symt:{n}, {r}) over {len(reps)} classes", work, budget)
    rows, ranks = ball_array(n, r)

    def one(ct: CycleType) -> int:
        s = ct.rank
        # rows closer to e than s - r cannot reach y within r
        keep = rows if s <= r else rows[ranks >= s - r]
        return int((distances_to(keep, ct.representative()) <= r).sum())

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(one, reps))
    else:
        values = [one(ct) for ct in reps]
    by_class = dict(zip(reps, values))
    per: dict = {}
    for ct, v in by_class.items():
        per[ct.rank] = max(per.get(ct.rank, 0), v)
    value = max(per.values())
    winners = [ct for ct, v in by_class.items() if v == value]
    e = Permutation.identity(n)
    return NResult(
        value=value,
        per_distance=dict(sorted(per.items())),
        witness=(e, winners[0].representative()),
        witness_classes=winners,
        by_class=by_class,
    )


def agreement_onset(r: int, n_max: int, budget: int = DEFAULT_BUDGET) -> int | None:
    """Smallest n >= 2 from which brute N(Sym_n(T), r) equals general_formula for every n up to n_max."""
    onset = None
    for n in range(2, n_max + 1):
        if n_sym_brute(n, r, budget=budget).value == general_formula(n, r):
            onset = n if onset is None else onset
        else:
            onset = None
    return onset


# Table of |{z in class C : d(z, y) <= 2}| for y in row class R, both inside B_4.

TABLE1_COLUMNS = ((3,), (2, 2), (2,), ())

TABLE1_ROWS = {
    (5,): lambda n: (10, 10, 0, 0),
    (4, 2): lambda n: (4, 6, 0, 0),
    (3, 3): lambda n: (2, 9, 0, 0),
    (3, 2, 2): lambda n: (1, 7, 0, 0),
    (2, 2, 2, 2): lambda n: (0, 6, 0, 0),
    (4,): lambda n: (4, 2, 6, 0),
    (3, 2): lambda n: (1, 3, 4, 0),
    (2, 2, 2): lambda n: (0, 3, 3, 0),
    (3,): lambda n: (6 * (n - 3) + 2, 3 * comb(n - 2, 2), 3, 1),
    (2, 2): lambda n: (4 * (n - 2), 2 * comb(n - 2, 2) - 1, 2, 1),
    (2,): lambda n: (2 * (n - 2), comb(n - 2, 2), comb(n, 2), 1),
}


# Entries whose printed form disagrees with direct counting; the value at any n >= 5.
TABLE1_ERRATA = {
    ((4, 2), (2, 2)): lambda n: 8,
    ((2, 2), (2, 2)): lambda n: 2 * comb(n - 2, 2) + 1,
}


def table1_corrected(row: tuple, col: tuple, n: int) -> int:
    fix = TABLE1_ERRATA.get((row, col))
    if fix is not None:
        return fix(n)
    return TABLE1_ROWS[row](n)[TABLE1_COLUMNS.index(col)]


@dataclass
class Table1Entry:
    row: tuple
    col: tuple
    formula: int
    direct: int | None  # None when the row class is empty at this n

    @property
    def present(self) -> bool:
        return self.direct is not None

    @property
    def verified(self) -> bool:
        return self.present and self.formula == self.direct


@dataclass
class Table1:
    n: int
    entries: list = field(default_factory=list)

    def row_sums(self) -> dict:
        out: dict = {}
        for e in self.entries:
            if e.present:
                out[e.row] = out.get(e.row, 0) + e.direct
        return out

    def all_verified(self) -> bool:
        return all(e.verified for e in self.entries if e.present)


def table1(n: int) -> Table1:
    """Evaluate every entry at n and count it directly where the row class exists."""
    cols = {}
    for col in TABLE1_COLUMNS:
        if sum(col) <= n:
            members = list(enumerate_class(CycleType.of(n, *col)))
            cols[col] = np.array([p.images for p in members], dtype=np.int16) - 1
    out = Table1(n)
    for row, formula in TABLE1_ROWS.items():
        values = formula(n)
        exists = sum(row) <= n
        y = CycleType.of(n, *row).representative() if exists else None
        for col, f in zip(TABLE1_COLUMNS, values):
            direct = None
            if exists:
                direct = int((distances_to(cols[col], y) <= 2).sum()) if col in cols else 0
            out.entries.append(Table1Entry(row, col, f, direct))
    return out


def aut_action_check(n: int, trials: int = 10_000, seed: int = 0) -> bool:
    """Edge preservation of x -> a x b^-1 and x -> x^-1, plus conjugation fixing spheres.

    Exhaustive over all (a, b) and all edges when n == 3; sampled otherwise.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    ts = transpositions(n)
    e = Permutation.identity(n)

    def edge_ok(x: Permutation, t: Permutation, a: Permutation, b: Permutation) -> bool:
        y = x * t
        binv = b.inverse()
        if cayley_distance(a * x * binv, a * y * binv) != 1:
            return False
        if cayley_distance(x.inverse(), y.inverse()) != 1:
            return False
        return cayley_distance(e, b * x * binv) == cayley_distance(e, x)

    if n == 3:
        perms = list(all_permutations(3))
        return all(edge_ok(x, t, a, b) for a in perms for b in perms for x in perms for t in ts)
    rng = random.Random(seed)
    pts = list(range(1, n + 1))

    def rand_perm() -> Permutation:
        img = pts[:]
        rng.shuffle(img)
        return Permutation(img)

    return all(edge_ok(rand_perm(), rng.choice(ts), rand_perm(), rand_perm()) for _ in range(trials))
