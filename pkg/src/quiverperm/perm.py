"""Permutations of {1..n} as immutable value objects.

The row-action convention used throughout the package: ``sigma`` acting on a
matrix ``M`` produces the matrix whose ``i``-th row is row ``sigma^{-1}(i)``
of ``M``.  Equivalently, row ``r`` of ``M`` lands at position ``sigma(r)``.
Composition is function composition: ``(p * q)(x) == p(q(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        """The transposition (a b) in S_n; the identity when a == b."""
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"transposition ({a} {b}) out of range for n={n}")
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cycle in cycles:
            cyc = list(cycle)
            for src, dst in zip(cyc, cyc[1:] + cyc[:1]):
                images[src - 1] = dst
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise IndexError(f"point {x} out of range for a permutation of 1..{self.n}")
        return self.images[x - 1]

    def inverse(self) -> Permutation:
        images = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(tuple(images))

    def __mul__(self, other: Permutation) -> Permutation:
        """Function composition: apply ``other`` first, then ``self``."""
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def apply_to_rows(self, rows: Sequence) -> tuple:
        """Send row ``r`` of ``rows`` to position ``self(r)`` (1-based)."""
        if len(rows) != self.n:
            raise ValueError("row count does not match permutation size")
        out = [None] * self.n
        for r, row in enumerate(rows, start=1):
            out[self(r) - 1] = row
        return tuple(out)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_string(self) -> str:
        """Cycle notation, e.g. ``(12)`` or ``(123)(45)``; identity is ``id``."""
        cycles = self.cycles()
        if not cycles:
            return "id"
        sep = " " if self.n > 9 else ""
        return "".join("(" + sep.join(str(x) for x in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.cycle_string()
