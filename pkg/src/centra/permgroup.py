"""Permutation groups with a base and strong generating set.

The stabiliser chain is built by a deterministic Schreier-Sims: no
randomisation, base points chosen as the least moved point when a new level
is opened, orbits explored breadth-first with generators in a fixed order.
The same input generators therefore always produce the same base, the same
transversals and the same element enumeration order, which keeps reports
and golden files byte-stable.

Raw image tuples (or bytes, for degree <= 256 hot paths) are used inside
the chain; Permutation objects appear only at the API boundary.
"""

from __future__ import annotations

from math import prod
from random import Random

from .perms import DegreeMismatch, Permutation, compose, identity_tuple, invert

DEFAULT_ELEMENT_CAP = 2_000_000


class CapExceeded(RuntimeError):
    """A computation would exceed its declared resource cap."""

    def __init__(self, message, size=None, cap=None):
        super().__init__(message)
        self.size = size
        self.cap = cap


class _Chain:
    """Mutable Schreier-Sims stabiliser chain on raw image tuples."""

    __slots__ = ("degree", "base", "sgens", "orbits", "_id")

    def __init__(self, degree, base_hint=()):
        self.degree = degree
        self.base = []
        self.sgens = []   # sgens[j]: strong generators first assigned at level j
        self.orbits = []  # orbits[j]: {point: transversal tuple mapping base[j] -> point}
        self._id = identity_tuple(degree)
        for beta in base_hint:
            self._new_level(beta)

    def _new_level(self, beta):
        self.base.append(beta)
        self.sgens.append([])
        self.orbits.append({beta: self._id})

    def _gens_at(self, level):
        out = []
        for j in range(level, len(self.base)):
            out.extend(self.sgens[j])
        return out

    def _recompute_orbit(self, level):
        beta = self.base[level]
        gens = self._gens_at(level)
        orbit = {beta: self._id}
        queue = [beta]
        for pt in queue:
            t = orbit[pt]
            for s in gens:
                npt = s[pt]
                if npt not in orbit:
                    orbit[npt] = compose(t, s)
                    queue.append(npt)
        self.orbits[level] = orbit

    def strip(self, g, start=0):
        """Sift g; returns (residue, level where sifting stopped)."""
        for i in range(start, len(self.base)):
            pt = g[self.base[i]]
            t = self.orbits[i].get(pt)
            if t is None:
                return g, i
            if t is not self._id:
                g = compose(g, invert(t))
        return g, len(self.base)

    def _assign_level(self, g):
        j = 0
        while j < len(self.base) and g[self.base[j]] == self.base[j]:
            j += 1
        if j == len(self.base):
            beta = min(i for i, x in enumerate(g) if x != i)
            self._new_level(beta)
        return j

    def add_generator(self, g):
        """Insert one new generator and restore BSGS completeness.

        Returns True if g was not already in the group.
        """
        h, _ = self.strip(g)
        if h == self._id:
            return False
        j = self._assign_level(h)
        self.sgens[j].append(h)
        self._complete(j)
        return True

    def _complete(self, start_level):
        i = start_level
        while i >= 0:
            self._recompute_orbit(i)
            residue = self._find_residue(i)
            if residue is None:
                i -= 1
                continue
            h, stop = residue
            if stop == len(self.base):
                self._assign_level(h)  # opens a new level
                stop = len(self.base) - 1
            self.sgens[stop].append(h)
            i = stop

    def _find_residue(self, level):
        orbit = self.orbits[level]
        gens = self._gens_at(level)
        idn = self._id
        for pt, t in orbit.items():
            for s in gens:
                u = compose(t, s)
                t2 = orbit[s[pt]]
                if u == t2:
                    continue
                u = compose(u, invert(t2))
                h, stop = self.strip(u, level + 1)
                if h != idn:
                    return h, stop
        return None

    def order(self):
        return prod(len(o) for o in self.orbits) if self.base else 1

    def contains(self, g):
        h, _ = self.strip(g)
        return h == self._id

    def elements_raw(self):
        """All elements, lexicographically ordered by base-image vectors."""
        levels = [(self.base[i], self.orbits[i]) for i in range(len(self.base))]
        idn = self._id

        def rec(level, outer):
            if level == len(levels):
                yield outer
                return
            _, orbit = levels[level]
            for pt in sorted(orbit, key=outer.__getitem__):
                yield from rec(level + 1, compose(orbit[pt], outer))

        yield from rec(0, idn)


def _word_invert(word):
    return tuple(-x for x in reversed(word))


class PermGroup:
    """An immutable permutation group given by generators.

    The BSGS is built lazily on first use; construction itself only
    normalises the generator list.
    """

    def __init__(self, generators, degree=None, parent=None):
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            gens.append(g)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch("generators of mixed degree")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        self.parent = parent
        if parent is not None:
            for g in self.generators:
                if g not in parent:
                    raise ValueError(f"generator {g.cycle_string()} not in parent group")
        self._chain = None
        self._words = None

    @classmethod
    def trivial(cls, degree):
        return cls([], degree=degree)

    def _get_chain(self, base_hint=()):
        if self._chain is None:
            chain = _Chain(self.degree, base_hint)
            for g in self.generators:
                chain.add_generator(g.img)
            self._chain = chain
        return self._chain

    def with_base_hint(self, base_hint):
        """Force the first base points (0-based); used for point stabilisers."""
        g = PermGroup(self.generators, degree=self.degree, parent=self.parent)
        g._get_chain(tuple(base_hint))
        return g

    # -- basic queries --

    def order(self):
        return self._get_chain().order()

    def __contains__(self, perm):
        if isinstance(perm, Permutation):
            if perm.degree != self.degree:
                return False
            perm = perm.img
        elif len(perm) != self.degree:
            return False
        return self._get_chain().contains(tuple(perm))

    def sift(self, perm):
        h, _ = self._get_chain().strip(perm.img)
        return Permutation(h)

    def is_trivial(self):
        return not self.generators

    def is_abelian(self):
        gens = self.generators
        return all(a.commutes_with(b) for i, a in enumerate(gens) for b in gens[i + 1:])

    @property
    def base(self):
        return tuple(self._get_chain().base)

    def basic_orbit_lengths(self):
        return tuple(len(o) for o in self._get_chain().orbits)

    def identity(self):
        return Permutation.identity(self.degree)

    # -- element generation --

    def elements(self, cap=None):
        """Iterate all elements in deterministic order; caps on |G|."""
        if cap is not None and self.order() > cap:
            raise CapExceeded(
                f"group order {self.order()} exceeds enumeration cap {cap}",
                size=self.order(), cap=cap)
        for raw in self._get_chain().elements_raw():
            yield Permutation(raw)

    def elements_raw(self, cap=None, as_bytes=False):
        if cap is not None and self.order() > cap:
            raise CapExceeded(
                f"group order {self.order()} exceeds enumeration cap {cap}",
                size=self.order(), cap=cap)
        it = self._get_chain().elements_raw()
        if as_bytes and self.degree <= 256:
            return (bytes(t) for t in it)
        return it

    def random_element(self, seed):
        """Uniformly random element, deterministic for a given seed."""
        chain = self._get_chain()
        rng = Random(seed)
        g = identity_tuple(self.degree)
        for orbit in reversed(chain.orbits):
            pts = sorted(orbit)
            t = orbit[rng.choice(pts)]
            g = compose(g, t)
        return Permutation(g)

    # -- words in the original generators --

    def express(self, perm, max_len=100_000):
        """Write perm as a word in the generators (1-based signed indices).

        Raises CapExceeded when the tracked word grows past max_len, and
        ValueError when perm is not in the group.
        """
        if self._words is None:
            self._words = _WordChain(self)
        word = self._words.express(perm.img, max_len)
        if word is None:
            raise ValueError(f"{perm.cycle_string()} is not in the group")
        return word

    def evaluate_word(self, word):
        g = Permutation.identity(self.degree)
        for idx in word:
            gen = self.generators[abs(idx) - 1]
            g = g * (gen if idx > 0 else gen.inverse())
        return g

    def __repr__(self):
        shown = ", ".join(g.cycle_string() for g in self.generators[:4])
        if len(self.generators) > 4:
            shown += ", ..."
        return f"PermGroup(degree={self.degree}, gens=[{shown}])"


class _WordChain:
    """A stabiliser chain that tracks words in the original generators."""

    def __init__(self, group):
        self.degree = group.degree
        self._id = identity_tuple(self.degree)
        self.base = []
        self.sgens = []    # per level: list of (perm, word)
        self.orbits = []   # per level: {point: (perm, word)}
        for i, g in enumerate(group.generators):
            self._add((g.img, (i + 1,)))

    def _new_level(self, beta):
        self.base.append(beta)
        self.sgens.append([])
        self.orbits.append({beta: (self._id, ())})

    def _gens_at(self, level):
        out = []
        for j in range(level, len(self.base)):
            out.extend(self.sgens[j])
        return out

    def _recompute_orbit(self, level):
        beta = self.base[level]
        gens = self._gens_at(level)
        orbit = {beta: (self._id, ())}
        queue = [beta]
        for pt in queue:
            t, w = orbit[pt]
            for s, sw in gens:
                npt = s[pt]
                if npt not in orbit:
                    orbit[npt] = (compose(t, s), w + sw)
                    queue.append(npt)
        self.orbits[level] = orbit

    def strip(self, g, word, start=0):
        for i in range(start, len(self.base)):
            pt = g[self.base[i]]
            entry = self.orbits[i].get(pt)
            if entry is None:
                return g, word, i
            t, tw = entry
            g = compose(g, invert(t))
            word = word + _word_invert(tw)
        return g, word, len(self.base)

    def _assign_level(self, g):
        j = 0
        while j < len(self.base) and g[self.base[j]] == self.base[j]:
            j += 1
        if j == len(self.base):
            beta = min(i for i, x in enumerate(g) if x != i)
            self._new_level(beta)
        return j

    def _add(self, gw):
        g, word = gw
        h, hw, _ = self.strip(g, word)
        if h == self._id:
            return
        j = self._assign_level(h)
        self.sgens[j].append((h, hw))
        i = j
        while i >= 0:
            self._recompute_orbit(i)
            res = self._find_residue(i)
            if res is None:
                i -= 1
                continue
            h, hw, stop = res
            if stop == len(self.base):
                self._assign_level(h)
                stop = len(self.base) - 1
            self.sgens[stop].append((h, hw))
            i = stop

    def _find_residue(self, level):
        orbit = self.orbits[level]
        gens = self._gens_at(level)
        for pt, (t, tw) in orbit.items():
            for s, sw in gens:
                u = compose(t, s)
                t2, t2w = orbit[s[pt]]
                if u == t2:
                    continue
                h, hw, stop = self.strip(compose(u, invert(t2)),
                                         tw + sw + _word_invert(t2w), level + 1)
                if h != self._id:
                    return h, hw, stop
        return None

    def express(self, g, max_len):
        # strip gives g = t_{L-1} * ... * t_1 * t_0 with t_i the level-i
        # transversal element, so transversal words are prepended
        word = ()
        for i in range(len(self.base)):
            pt = g[self.base[i]]
            entry = self.orbits[i].get(pt)
            if entry is None:
                return None
            t, tw = entry
            g = compose(g, invert(t))
            word = tw + word
            if len(word) > max_len:
                raise CapExceeded("expressed word exceeds length limit",
                                  size=len(word), cap=max_len)
        if g != self._id:
            return None
        return word
