"""Permutations of {1..n}, cycle types and sphere enumeration in Sym_n(T).

Permutations compose right-to-left: ``(x * y)(j) == x(y(j))``.  Distance in the
transposition Cayley graph is ``n - cycles(p^-1 q)``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Permutation:
    """A permutation stored as its 1-based image sequence."""

    __slots__ = ("images", "_cycles")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self._cycles = None

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._cycles = None
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        img = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n or a in seen:
                    raise ValueError(f"bad cycle element {a} for n={n}")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                img[a - 1] = b
        return cls._trusted(tuple(img))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        if i == j:
            raise ValueError("a transposition needs two distinct points")
        return cls.from_cycles([(i, j)], n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError("degree mismatch")
        img = self.images
        return Permutation._trusted(tuple(img[k - 1] for k in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, k in enumerate(self.images, 1):
            inv[k - 1] = j
        return Permutation._trusted(tuple(inv))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def cycles(self) -> tuple:
        """All cycles including fixed points, each starting at its smallest point."""
        if self._cycles is None:
            img = self.images
            seen = [False] * (len(img) + 1)
            out = []
            for start in range(1, len(img) + 1):
                if seen[start]:
                    continue
                cyc = [start]
                seen[start] = True
                k = img[start - 1]
                while k != start:
                    cyc.append(k)
                    seen[k] = True
                    k = img[k - 1]
                out.append(tuple(cyc))
            self._cycles = tuple(out)
        return self._cycles

    def num_cycles(self) -> int:
        return len(self.cycles())

    def support(self) -> frozenset:
        return frozenset(j for j, k in enumerate(self.images, 1) if j != k)

    def cycle_type(self) -> "CycleType":
        return cycle_type(self)

    def one_line(self) -> str:
        return " ".join(map(str, self.images))

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, n={self.n})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse cycle notation ``(1 2 3)(4 5)`` or one-line notation ``2 3 1 5 4``.

    Cycle notation needs ``n`` unless the largest moved point is the degree.
    Commas are accepted as separators inside cycles.
    """
    text = text.strip()
    if text.startswith("("):
        body = _CYCLE_RE.sub("", text).strip()
        if body:
            raise ValueError(f"trailing garbage in cycle notation: {text!r}")
        cycles = []
        for grp in _CYCLE_RE.findall(text):
            parts = grp.replace(",", " ").split()
            if parts:
                cycles.append(tuple(int(a) for a in parts))
        top = max((a for c in cycles for a in c), default=0)
        if n is None:
            n = top
        if top > n:
            raise ValueError(f"point {top} exceeds degree {n}")
        return Permutation.from_cycles(cycles, n)
    images = tuple(int(a) for a in text.replace(",", " ").split())
    p = Permutation(images)
    if n is not None and p.n != n:
        raise ValueError(f"expected degree {n}, got {p.n}")
    return p


@dataclass(frozen=True, order=True)
class CycleType:
    """Conjugacy class label of Sym_n: cycle lengths in decreasing order, 1-cycles included."""

    parts: tuple

    def __post_init__(self):
        if any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"cycle lengths must be positive and non-increasing: {self.parts}")

    @classmethod
    def of(cls, n: int, *nontrivial: int) -> "CycleType":
        """``CycleType.of(n, 3)`` is 1^{n-3}3^1; raises if the lengths do not fit in n."""
        big = sorted((p for p in nontrivial if p > 1), reverse=True)
        rest = n - sum(big)
        if rest < 0:
            raise ValueError(f"cycle lengths {nontrivial} do not fit in n={n}")
        return cls(tuple(big) + (1,) * rest)

    @classmethod
    def from_h(cls, h: dict) -> "CycleType":
        parts = []
        for j, mult in h.items():
            parts += [j] * mult
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse ``1^2 3^1`` (exponent optional, so ``1 1 3`` also works)."""
        parts = []
        for tok in text.replace(",", " ").split():
            base, _, exp = tok.partition("^")
            parts += [int(base)] * (int(exp) if exp else 1)
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def h(self) -> dict:
        return dict(sorted(Counter(self.parts).items()))

    @property
    def num_cycles(self) -> int:
        return len(self.parts)

    @property
    def nontrivial(self) -> tuple:
        return tuple(p for p in self.parts if p > 1)

    @property
    def rank(self) -> int:
        """Distance from the identity of any element of this class."""
        return self.n - self.num_cycles

    def representative(self) -> Permutation:
        cycles, k = [], 1
        for length in self.parts:
            cycles.append(tuple(range(k, k + length)))
            k += length
        return Permutation.from_cycles(cycles, self.n)

    def __str__(self) -> str:
        return " ".join(f"{j}^{m}" for j, m in self.h.items())


def cycle_type(p: Permutation) -> CycleType:
    return CycleType(tuple(sorted((len(c) for c in p.cycles()), reverse=True)))


def apply_transposition(p: Permutation, i: int, j: int) -> Permutation:
    """Right multiplication ``p * (i j)``: joins two cycles or splits one."""
    img = list(p.images)
    img[i - 1], img[j - 1] = img[j - 1], img[i - 1]
    return Permutation._trusted(tuple(img))


def cayley_distance(p: Permutation, q: Permutation) -> int:
    if p.n != q.n:
        raise ValueError("degree mismatch")
    return p.n - (p.inverse() * q).num_cycles()


def class_size(ct: CycleType) -> int:
    denom = prod(j**m * factorial(m) for j, m in ct.h.items())
    return factorial(ct.n) // denom


def _excess_partitions(i: int, room: int, cap: int | None = None) -> Iterator[tuple]:
    """Non-increasing tuples of lengths >= 2 with sum(len - 1) == i and sum(len) <= room."""
    if i == 0:
        yield ()
        return
    top = i + 1 if cap is None else min(cap, i + 1)
    for length in range(top, 1, -1):
        if length > room:
            continue
        for rest in _excess_partitions(i - (length - 1), room - length, length):
            yield (length,) + rest


def class_reps(n: int, i: int) -> list:
    """Every cycle type of Sym_n with exactly n - i cycles."""
    if not 0 <= i <= max(n - 1, 0):
        raise ValueError(f"need 0 <= i <= n-1, got n={n}, i={i}")
    return [CycleType.of(n, *parts) for parts in _excess_partitions(i, n)]


def _arrange(points: tuple, lengths: Counter, img: list) -> Iterator[None]:
    # smallest free point opens a cycle; its successors are listed in order
    if not points:
        yield
        return
    first, rest = points[0], points[1:]
    for length in sorted(lengths):
        lengths[length] -= 1
        if lengths[length] == 0:
            del lengths[length]
        for tail in permutations(rest, length - 1):
            cyc = (first,) + tail
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
            remaining = tuple(x for x in rest if x not in tail)
            yield from _arrange(remaining, lengths, img)
            for a in cyc:
                img[a - 1] = a
        lengths[length] = lengths.get(length, 0) + 1


def enumerate_class(ct: CycleType) -> Iterator[Permutation]:
    """Every member of a conjugacy class exactly once, by support subset then arrangement."""
    n = ct.n
    big = ct.nontrivial
    width = sum(big)
    img = list(range(1, n + 1))
    for support in combinations(range(1, n + 1), width):
        for _ in _arrange(support, Counter(big), img):
            yield Permutation._trusted(tuple(img))


def enumerate_sphere(n: int, i: int) -> Iterator[Permutation]:
    """The sphere S_i(e) of Sym_n(T): permutations with exactly n - i cycles."""
    for ct in class_reps(n, i):
        yield from enumerate_class(ct)


def enumerate_ball(n: int, r: int) -> Iterator[Permutation]:
    for i in range(min(r, n - 1) + 1):
        yield from enumerate_sphere(n, i)


def all_permutations(n: int) -> Iterator[Permutation]:
    for img in permutations(range(1, n + 1)):
        yield Permutation._trusted(img)


def transpositions(n: int) -> list:
    return [Permutation.transposition(i, j, n) for i, j in combinations(range(1, n + 1), 2)]


def same_cycle(p: Permutation, points: Iterable[int]) -> bool:
    """True when every given point lies in one cycle of p."""
    points = list(points)
    img = p.images
    orbit = {points[0]}
    k = img[points[0] - 1]
    while k != points[0]:
        orbit.add(k)
        k = img[k - 1]
    return all(a in orbit for a in points)
