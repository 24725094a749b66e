"""Structural group algorithms: centralisers, centre, derived series,
solubility, conjugacy classes, quotients.

Everything works on immutable PermGroup inputs and returns fresh subgroup
objects.  Two centraliser strategies are provided: brute filtering of a
full element enumeration (small groups) and the conjugation-orbit method
with Schreier generators (large groups).  Conjugacy classes are found by
partitioning the full enumeration under conjugation, which keeps class
representatives and all derived reports deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .perms import Permutation, compose, invert
from .permgroup import CapExceeded, DEFAULT_ELEMENT_CAP, PermGroup, _Chain


@dataclass(frozen=True)
class ConjClass:
    rep: Permutation
    size: int


@dataclass(frozen=True)
class SeriesReport:
    """Orders along the derived series, terminating at 1 or at stabilisation."""
    orders: tuple
    soluble: bool
    derived_length: int | None


class GrowingGroup:
    """Incrementally built subgroup; wraps a mutable stabiliser chain."""

    def __init__(self, degree):
        self.degree = degree
        self._chain = _Chain(degree)
        self.gens = []

    def add(self, raw):
        """Add a raw image tuple; returns True if the group grew."""
        if self._chain.add_generator(tuple(raw)):
            self.gens.append(Permutation(raw))
            return True
        return False

    def order(self):
        return self._chain.order()

    def contains_raw(self, raw):
        return self._chain.contains(tuple(raw))

    def to_group(self, parent=None):
        g = PermGroup(self.gens, degree=self.degree, parent=parent)
        g._chain = self._chain
        return g


def _raw_gens_with_inverses(G):
    gens = [g.img for g in G.generators]
    return [(g, invert(g)) for g in gens]


def _conjugate(x, g, ginv):
    # g^-1 * x * g on raw image arrays
    return compose(compose(ginv, x), g)


# -- centralisers ------------------------------------------------------------


def centraliser(G, x, cap=DEFAULT_ELEMENT_CAP):
    """The centraliser C_G(x).

    Small groups (|G| <= cap) are filtered element by element; larger ones
    use the conjugation orbit of x with Schreier generators, capping the
    orbit length at `cap`.
    """
    if not isinstance(x, Permutation):
        x = Permutation(x)
    if x not in G:
        raise ValueError(f"{x.cycle_string()} is not an element of the group")
    if G.order() <= cap:
        cgens = [g for g in G.elements() if g.commutes_with(x)]
        return PermGroup(cgens, degree=G.degree, parent=G)
    return _centraliser_orbit(G, x, cap)


def _centraliser_orbit(G, x, orbit_cap, known_order=None):
    """Conjugation-orbit centraliser: C_G(x) = Stab_G(x) under conjugation."""
    xr = x.img if isinstance(x, Permutation) else tuple(x)
    gens = _raw_gens_with_inverses(G)
    idn = tuple(range(G.degree))
    trans = {xr: idn}
    queue = [xr]
    H = GrowingGroup(G.degree)
    target = known_order
    for y in queue:
        ty = trans[y]
        for g, ginv in gens:
            z = _conjugate(y, g, ginv)
            if z not in trans:
                if len(trans) >= orbit_cap:
                    raise CapExceeded("conjugation orbit exceeds cap",
                                      size=len(trans), cap=orbit_cap)
                trans[z] = compose(ty, g)
                queue.append(z)
            else:
                u = compose(compose(ty, g), invert(trans[z]))
                H.add(u)
                if target is not None and H.order() == target:
                    return H.to_group(parent=G)
    if target is None:
        target = G.order() // len(trans)
        if H.order() != target:
            raise AssertionError("orbit-stabiliser mismatch in centraliser")
    return H.to_group(parent=G)


def centre(G, cap=DEFAULT_ELEMENT_CAP):
    """Z(G): the elements commuting with every generator."""
    if G.is_trivial():
        return PermGroup.trivial(G.degree)
    if G.order() <= cap:
        zs = [g for g in G.elements()
              if all(g.commutes_with(s) for s in G.generators)]
        return PermGroup(zs, degree=G.degree, parent=G)
    # C(g1) first (conjugation orbit), then filter what little is left
    current = _centraliser_orbit(G, G.generators[0], cap)
    zs = [g for g in current.elements(cap)
          if all(g.commutes_with(s) for s in G.generators[1:])]
    return PermGroup(zs, degree=G.degree, parent=G)


# -- derived series and solubility -------------------------------------------


def normal_closure(G, seeds):
    """Smallest normal subgroup of G containing the seed permutations."""
    H = GrowingGroup(G.degree)
    gens = _raw_gens_with_inverses(G)
    frontier = []
    for s in seeds:
        raw = s.img if isinstance(s, Permutation) else tuple(s)
        if H.add(raw):
            frontier.append(raw)
    while frontier:
        nxt = []
        for y in frontier:
            for g, ginv in gens:
                z = _conjugate(y, g, ginv)
                if not H.contains_raw(z):
                    H.add(z)
                    nxt.append(z)
        frontier = nxt
    return H.to_group(parent=G)


def derived_subgroup(G):
    gens = G.generators
    seeds = []
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            c = a.commutator(b)
            if not c.is_identity():
                seeds.append(c)
    return normal_closure(G, seeds)


def derived_series(G):
    """Iterate derived subgroups until trivial or stable.

    The reported orders run down the series; an insoluble group ends with
    the repeated order of the perfect terminal term (e.g. A_5 -> (60, 60)).
    """
    orders = [G.order()]
    if G.order() == 1:
        return SeriesReport((1,), True, 0)
    current = G
    while True:
        nxt = derived_subgroup(current)
        orders.append(nxt.order())
        if nxt.order() == 1:
            return SeriesReport(tuple(orders), True, len(orders) - 1)
        if nxt.order() == current.order():
            return SeriesReport(tuple(orders), False, None)
        current = nxt


def is_soluble(G):
    return derived_series(G).soluble


def is_perfect(G):
    return derived_subgroup(G).order() == G.order()


# -- conjugacy classes -------------------------------------------------------


def conjugacy_classes(G, cap=DEFAULT_ELEMENT_CAP):
    """One representative per class with class sizes, in enumeration order.

    Requires |G| <= cap (the whole group is enumerated once).
    """
    order = G.order()
    if order > cap:
        raise CapExceeded(f"group order {order} exceeds cap {cap}",
                          size=order, cap=cap)
    use_bytes = G.degree <= 256
    gens = [(bytes(g.img), bytes(invert(g.img))) if use_bytes
            else (g.img, invert(g.img)) for g in G.generators]
    seen = set()
    classes = []
    for x in G.elements_raw(as_bytes=use_bytes):
        if x in seen:
            continue
        seen.add(x)
        members = [x]
        for y in members:
            for g, ginv in gens:
                z = _conjugate(y, g, ginv)
                if z not in seen:
                    seen.add(z)
                    members.append(z)
        classes.append(ConjClass(Permutation(x), len(members)))
    if sum(c.size for c in classes) != order:
        raise AssertionError("class sizes do not sum to the group order")
    return classes


def class_centraliser(G, cls, orbit_cap=None):
    """Centraliser of a class representative via its conjugation orbit."""
    target = G.order() // cls.size
    cap = orbit_cap if orbit_cap is not None else cls.size + 1
    return _centraliser_orbit(G, cls.rep, cap, known_order=target)


# -- element predicates ------------------------------------------------------


def element_order(x):
    return x.order()


def is_pi_element(x, pi):
    """True when every prime divisor of the element order lies in pi."""
    n = x.order()
    if n == 1:
        return True
    if pi is None:  # the full set of primes
        return True
    f = 2
    while f * f <= n:
        if n % f == 0:
            if f not in pi:
                return False
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1 and n not in pi:
        return False
    return True


def is_p_group(G, p):
    n = G.order()
    while n % p == 0:
        n //= p
    return n == 1


def is_p_central(P, p, cap=DEFAULT_ELEMENT_CAP):
    """True iff every element of order p is central in the p-group P."""
    if not is_p_group(P, p):
        raise ValueError(f"group of order {P.order()} is not a {p}-group")
    for x in P.elements(cap):
        if x.order() == p and not all(x.commutes_with(g) for g in P.generators):
            return False
    return True


# -- quotients ---------------------------------------------------------------


@dataclass
class Quotient:
    """G/N as a permutation group on the right cosets of N."""
    group: PermGroup
    reps: list
    _parent: PermGroup
    _normal: PermGroup

    def project(self, g):
        """Image of g in the quotient (a permutation of the coset indices)."""
        img = [self._coset_index(r * g) for r in self.reps]
        return Permutation(img)

    def _coset_index(self, c):
        for j, r in enumerate(self.reps):
            if c * r.inverse() in self._normal:
                return j
        raise ValueError("element does not lie in the parent group")

    def preimage_rep(self, qperm):
        """A coset representative projecting onto the given quotient element.

        The coset action is regular, so the image of the identity coset
        pins the element down.
        """
        return self.reps[qperm.img[0]]


def quotient_action(G, N, cap=100_000):
    """Permutation action of G on the right cosets of the normal subgroup N."""
    index = G.order() // N.order()
    if G.order() % N.order():
        raise ValueError("subgroup order does not divide group order")
    if index > cap:
        raise CapExceeded(f"index {index} exceeds cap {cap}", size=index, cap=cap)
    for n in N.generators:
        for g in G.generators:
            if n.conjugated_by(g) not in N:
                raise ValueError("designated subgroup is not normal")
    reps = [G.identity()]
    queue = [0]

    def find(c):
        for j, r in enumerate(reps):
            if c * r.inverse() in N:
                return j
        return None

    edges = {}
    for i in queue:
        for k, g in enumerate(G.generators):
            c = reps[i] * g
            j = find(c)
            if j is None:
                reps.append(c)
                j = len(reps) - 1
                queue.append(j)
            edges[(i, k)] = j
    if len(reps) != index:
        raise AssertionError("coset enumeration did not reach the full index")
    qgens = []
    for k in range(len(G.generators)):
        qgens.append(Permutation([edges[(i, k)] for i in range(index)]))
    Q = PermGroup(qgens, degree=index)
    return Quotient(Q, reps, G, N)
