"""Permutations on ``{0, ..., degree-1}`` and cycle-notation parsing."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from gkforge.errors import MalformedPermutation

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection given by its image list; ``p * q`` applies ``p`` first."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(len(images))):
            raise MalformedPermutation(f"not a bijection on 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        """Build from 0-based cycles, e.g. ``[(0, 1, 2), (3, 4)]``."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = [int(v) for v in cyc]
            for v in cyc:
                if not 0 <= v < degree:
                    raise MalformedPermutation(f"point {v} outside degree {degree}")
                if v in seen:
                    raise MalformedPermutation(f"point {v} repeated in cycle notation")
                seen.add(v)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-based cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity."""
        text = text.strip()
        if not text:
            raise MalformedPermutation("empty permutation")
        stripped = _CYCLE_RE.sub("", text)
        if stripped.strip():
            raise MalformedPermutation(f"unparseable cycle text {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            tokens = body.replace(",", " ").split()
            try:
                cycles.append([int(t) - 1 for t in tokens])
            except ValueError:
                raise MalformedPermutation(f"non-integer point in {text!r}") from None
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise MalformedPermutation("degree mismatch")
        o = other.images
        return Permutation(tuple(o[v] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            v = self.images[start]
            while v != start:
                cyc.append(v)
                seen.add(v)
                v = self.images[v]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def shifted(self, offset: int, degree: int) -> "Permutation":
        """Embed into a larger degree, acting on ``offset .. offset+self.degree-1``."""
        images = list(range(degree))
        for i, v in enumerate(self.images):
            images[offset + i] = offset + v
        return Permutation(tuple(images))

    def __str__(self) -> str:
        parts = ["(" + " ".join(str(v + 1) for v in c) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Permutation({self})"
