"""Permutations on {0, …, n-1} and the plain-text generator file format.

Composition is left to right: ``p * q`` applies ``p`` first, so
``(p * q)[i] == q[p[i]]``.  This matches right actions throughout the
package (``T^k`` acts on cosets by right multiplication).

Generator file grammar::

    # comment
    degree 6
    (0 1 2)(3 4)
    img 1 2 0 4 3 5
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from diagctl.domain.errors import DegreeMismatch, ParseError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of ``range(degree)`` stored as its image list."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ParseError(
                "images are not a bijection on 0..n-1",
                images=list(self.images),
            )

    # --- constructors ---

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Iterable[int]) -> Permutation:
        return cls(tuple(int(i) for i in images))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Permutation:
        """Parse cycle notation such as ``(0 1 2)(3 4)``; ``()`` is the identity."""
        stripped = text.strip()
        if _CYCLE_RE.sub("", stripped).strip():
            raise ParseError(f"malformed cycle notation: {text!r}")
        images = list(range(degree))
        seen: set[int] = set()
        for body in _CYCLE_RE.findall(stripped):
            tokens = body.replace(",", " ").split()
            if not tokens:
                continue
            try:
                points = [int(tok) for tok in tokens]
            except ValueError as exc:
                raise ParseError(f"non-integer point in cycle ({body})") from exc
            for p in points:
                if not 0 <= p < degree:
                    raise ParseError(f"point {p} outside 0..{degree - 1}", degree=degree)
                if p in seen:
                    raise ParseError(f"point {p} repeated in cycle notation")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1], strict=True):
                images[a] = b
        return cls(tuple(images))

    # --- arithmetic ---

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, exponent: int) -> Permutation:
        if exponent < 0:
            return inverse(self) ** (-exponent)
        result = Permutation.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = compose(result, base)
            base = compose(base, base)
            exponent >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def to_cycles(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def cycle_type(self) -> tuple[int, ...]:
        """Nontrivial cycle lengths in decreasing order."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def conjugate_by(self, other: Permutation) -> Permutation:
        """``other^{-1} * self * other``."""
        return compose(compose(inverse(other), self), other)

    def __str__(self) -> str:
        return self.to_cycles()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply *p* then *q*."""
    if p.degree != q.degree:
        raise DegreeMismatch(
            f"cannot compose degrees {p.degree} and {q.degree}",
            left=p.degree,
            right=q.degree,
        )
    return Permutation(tuple(q.images[i] for i in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, image in enumerate(p.images):
        inv[image] = i
    return Permutation(tuple(inv))


def common_degree(perms: Sequence[Permutation]) -> int:
    """Return the shared degree of *perms* or raise :class:`DegreeMismatch`."""
    degrees = {p.degree for p in perms}
    if len(degrees) != 1:
        raise DegreeMismatch("generators have different degrees", degrees=sorted(degrees))
    return degrees.pop()


# ---------------------------------------------------------------------------
# Generator files
# ---------------------------------------------------------------------------


def parse_generator_text(text: str) -> tuple[int, list[Permutation]]:
    """Parse generator-file text into ``(degree, generators)``."""
    degree: int | None = None
    generators: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'degree <n>'", line=lineno)
            degree = int(parts[1])
            if degree < 1:
                raise ParseError(f"line {lineno}: degree must be positive", line=lineno)
            continue
        try:
            if line.startswith("img"):
                tokens = line[3:].split()
                if len(tokens) != degree:
                    raise ParseError(
                        f"image list has {len(tokens)} entries, expected {degree}",
                    )
                generators.append(Permutation.from_images(int(tok) for tok in tokens))
            else:
                generators.append(Permutation.from_cycles(line, degree))
        except (ParseError, ValueError) as exc:
            raise ParseError(f"line {lineno}: {exc}", line=lineno) from exc
    if degree is None:
        raise ParseError("generator file has no 'degree' line")
    if not generators:
        raise ParseError("generator file lists no generators")
    return degree, generators


def load_generator_file(path: Path) -> tuple[int, list[Permutation]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read generator file {path}: {exc}", path=str(path)) from exc
    return parse_generator_text(text)


def dump_generator_text(degree: int, generators: Iterable[Permutation]) -> str:
    lines = [f"degree {degree}"]
    lines.extend(g.to_cycles() for g in generators)
    return "\n".join(lines) + "\n"
