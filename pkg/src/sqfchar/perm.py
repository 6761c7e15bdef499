"""Permutations on {0, ..., n-1} and the 1-based cycle notation used at the I/O boundary."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce

__all__ = ["Permutation", "parse_cycles", "CycleSyntaxError"]


class CycleSyntaxError(ValueError):
    """Raised for a malformed cycle string."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., degree-1}, stored as its image tuple.

    Products compose left to right: ``(a * b)(i) = b(a(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        return cls(parse_cycles(text, degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        o = other.images
        return Permutation._unchecked(tuple(o[i] for i in self.images))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._unchecked(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def to_cycles(self) -> str:
        """1-based cycle string; ``()`` for the identity."""
        parts = ["(" + " ".join(str(i + 1) for i in c) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycles()}, degree={self.degree})"

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> "Permutation":
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation such as ``(1 2 3)(4 5)`` into 0-based images.

    Entries inside a cycle may be separated by whitespace or commas.
    """
    s = text.strip()
    images = list(range(degree))
    pos = 0
    used: set[int] = set()
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(s, pos)
        if m is None:
            raise CycleSyntaxError(f"malformed cycle string {text!r} at position {pos}")
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(t) - 1 for t in body]
        except ValueError:
            raise CycleSyntaxError(f"non-integer point in cycle {m.group(0)!r}") from None
        for p in pts:
            if not 0 <= p < degree:
                raise CycleSyntaxError(f"point {p + 1} outside 1..{degree}")
            if p in used:
                raise CycleSyntaxError(f"point {p + 1} repeated in {text!r}")
            used.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
        pos = m.end()
    return tuple(images)
