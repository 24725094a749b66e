"""Permutations of {1..n}, stored 0-based as image tuples.

Composition is left-to-right throughout: (a*b)(i) = b(a(i)).  Points are
1-based on every user-facing surface (cycle notation, data files, reports);
the internal image arrays are 0-based.
"""

from __future__ import annotations

import re
from math import lcm


class DegreeMismatch(ValueError):
    pass


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def compose(a, b):
    """Raw image-array composition a then b; a and b are same-type sequences."""
    if isinstance(a, bytes):
        return bytes(map(b.__getitem__, a))
    return tuple(map(b.__getitem__, a))


def invert(a):
    """Raw image-array inverse."""
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return bytes(out) if isinstance(a, bytes) else tuple(out)


def identity_tuple(n):
    return tuple(range(n))


class Permutation:
    """An immutable permutation of {1..n}."""

    __slots__ = ("img",)

    def __init__(self, img):
        self.img = tuple(img)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_images(cls, images):
        """Build from a 1-based image list, e.g. [2, 1, 3] for (1 2)."""
        img = tuple(i - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return cls(img)

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Build from 1-based cycles, e.g. [(1, 2), (3, 4, 5)]."""
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                img[a - 1] = b - 1
            if cyc:
                img[cyc[-1] - 1] = cyc[0] - 1
        p = cls(img)
        if sorted(p.img) != list(range(degree)):
            raise ValueError(f"cycles overlap: {cycles}")
        return p

    @classmethod
    def parse(cls, text, degree=None):
        """Parse cycle notation like '(1,2,3)(4,5)'; '()' is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise ValueError(f"cannot parse permutation: {text!r}")
        cycles = []
        maxpt = 0
        for body in _CYCLE_RE.findall(text):
            pts = [int(t) for t in re.split(r"[,\s]+", body.strip()) if t]
            if any(pt < 1 for pt in pts):
                raise ValueError("points are 1-based")
            if pts:
                cycles.append(tuple(pts))
                maxpt = max(maxpt, max(pts))
        n = degree if degree is not None else maxpt
        if maxpt > n:
            raise ValueError(f"point {maxpt} exceeds degree {n}")
        return cls.from_cycles(cycles, n)

    @property
    def degree(self):
        return len(self.img)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return Permutation(compose(self.img, other.img))

    def inverse(self):
        return Permutation(invert(self.img))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        r = Permutation.identity(self.degree)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __call__(self, point):
        """Image of a 1-based point."""
        return self.img[point - 1] + 1

    def conjugated_by(self, g):
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def commutes_with(self, other):
        a, b = self.img, other.img
        if len(a) != len(b):
            raise DegreeMismatch(f"degrees {len(a)} and {len(b)}")
        return all(b[a[i]] == a[b[i]] for i in range(len(a)))

    def commutator(self, other):
        return self.inverse() * other.inverse() * self * other

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.img))

    def moved_points(self):
        """Sorted 1-based points moved by this permutation."""
        return [i + 1 for i, j in enumerate(self.img) if i != j]

    def cycles(self):
        """Nontrivial cycles as 1-based tuples, least point first."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.img[i] == i:
                continue
            cyc = [i]
            j = self.img[i]
            seen[i] = True
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.img[j]
            out.append(tuple(pt + 1 for pt in cyc))
        return out

    def cycle_string(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def order(self):
        cycs = self.cycles()
        return lcm(*(len(c) for c in cycs)) if cycs else 1

    def extended(self, n):
        """The same permutation viewed on the larger point set 1..n."""
        if n < self.degree:
            raise ValueError("cannot shrink a permutation")
        return Permutation(self.img + tuple(range(self.degree, n)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"
