"""Classification-table predicates.

Machine encodings of the classification data: which alternating degrees,
classical ranks and sporadic groups are compatible with solubility of all
non-central pi-element centralisers, the thickness bound, the sharper
symplectic dimension bound, the special prime-power set Q used for the
rank-one linear groups, and the prime-set to composition-factor table.
The numeric rows live in data/tables.json and are loaded once.
"""

from __future__ import annotations

import json
from functools import lru_cache

from .catalogue import data_path
from .ffield import is_prime, prime_factors


@lru_cache(maxsize=None)
def load_tables():
    with open(data_path("tables.json")) as fh:
        return json.load(fh)


def _smallest(pi):
    return min(pi) if pi else None


def _as_prime_set(pi):
    if pi is None:
        return None
    out = frozenset(int(p) for p in pi)
    for p in out:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    return out


# -- alternating and classical bounds -------------------------------------------


def alt_degree_bound(pi):
    """Largest alternating degree compatible with the prime set (None = no bound)."""
    pi = _as_prime_set(pi)
    if pi is None:
        return 7  # every prime present, so 3 is
    if 3 in pi:
        return 7
    if 2 in pi:
        return 8
    p = _smallest(pi)
    return None if p is None else p + 4


def alt_degree_allowed(n, pi):
    """Membership of A_n in the allowed alternating collection (n >= 5)."""
    if n < 5:
        raise ValueError("alternating membership is defined for n >= 5")
    bound = alt_degree_bound(pi)
    return bound is None or n <= bound


def thickness_bound(p):
    """Upper bound for the degree of any alternating section: p+4+2[p=2]."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p + 4 + (2 if p == 2 else 0)


def classical_rank_bound(family, pi):
    """Dimension bound n for the classical families L/U/O/Sp.

    The bound is the same for every family: 7 when 3 is present, 8 when 2
    is present without 3, p+4 otherwise (p the smallest prime; None means
    no bound for the empty prime set).  For symplectic groups the bound
    applies to n with the group PSp_{dn}(q), d = 2 for odd q and 1 for
    even q.
    """
    if family not in ("L", "U", "O", "Sp"):
        raise ValueError(f"unknown classical family {family!r}")
    pi = _as_prime_set(pi)
    if pi is None or 3 in pi:
        return 7
    if 2 in pi:
        return 8
    p = _smallest(pi)
    return None if p is None else p + 4


def classical_rank_bound_variant(family, pi):
    """The sharper n <= p+4 variant used alongside the table bound."""
    if family not in ("L", "U", "O", "Sp"):
        raise ValueError(f"unknown classical family {family!r}")
    pi = _as_prime_set(pi)
    if pi is None:
        return 2 + 4
    p = _smallest(pi)
    return None if p is None else p + 4


def symplectic_dim_bound(pi):
    """Sharper symplectic bound p + 6 + 8[p=2] + 6[p=3] + 4[p=5]."""
    pi = _as_prime_set(pi)
    if not pi:
        raise ValueError("the symplectic bound needs a nonempty prime set")
    p = _smallest(pi)
    return p + 6 + (8 if p == 2 else 0) + (6 if p == 3 else 0) + (4 if p == 5 else 0)


# -- sporadic and exceptional tables ---------------------------------------------


def sporadic_allowed(name, pi):
    """True iff the listed good-prime set of the sporadic group contains pi."""
    data = load_tables()["sporadic_good_primes"]
    if name not in data:
        raise KeyError(f"unknown sporadic group {name!r}")
    good = set(data[name])
    pi = _as_prime_set(pi)
    if pi is None:
        return False  # no sporadic group is good at every prime
    return pi <= good


def sporadic_good_primes(name):
    data = load_tables()["sporadic_good_primes"]
    if name not in data:
        raise KeyError(f"unknown sporadic group {name!r}")
    return tuple(data[name])


def sporadic_max_alt_degree(name):
    data = load_tables()["sporadic_max_alt_degree"]
    if name not in data:
        raise KeyError(f"unknown sporadic group {name!r}")
    return data[name]


def exceptional_alt_degree(family):
    data = load_tables()["exceptional_alt_degree"]
    key = family.replace(" ", "")
    if key == "Sz":
        key = "2B2"
    if key == "Ree":
        key = "2G2"
    if key not in data:
        raise KeyError(f"unknown exceptional family {family!r}")
    return data[key]


def exceptional_families():
    return tuple(load_tables()["exceptional_alt_degree"])


# -- the special prime-power set Q ------------------------------------------------


def q_is_special(q):
    """True for 2^r and 3^r with r an odd prime, and for odd primes
    congruent to 0 or +-2 modulo 5."""
    if q < 2:
        return False
    for base in (2, 3):
        e = 0
        m = q
        while m % base == 0:
            m //= base
            e += 1
        if m == 1:
            return e > 2 and is_prime(e)
    if is_prime(q) and q % 2 == 1:
        return q % 5 in (0, 2, 3)
    return False


# -- prime sets to composition factor sets ----------------------------------------


def _suzuki_prime_set(p):
    """pi(Sz(2^p)) together with p, for an odd prime p."""
    q = 2 ** p
    order = q * q * (q * q + 1) * (q - 1)
    return frozenset(prime_factors(order)) | {p}


def _l2_aut_prime_set(q):
    """Prime divisors of |Aut(L2(q))| for a prime power q."""
    base = prime_factors(q)[0]
    f = 0
    m = q
    while m % base == 0:
        m //= base
        f += 1
    primes = set(prime_factors(q * (q - 1) * (q + 1)))
    primes |= set(prime_factors(f)) if f > 1 else set()
    return frozenset(primes)


@lru_cache(maxsize=None)
def _special_qs(limit=600):
    return tuple(q for q in range(2, limit) if q_is_special(q))


def composition_factors_for(pi, q_limit=600, suzuki_exp_limit=13):
    """Composition factor sets attached to a prime set, as a sorted tuple.

    Matches the concrete rows of the table plus its two parametric rows
    (the Suzuki row and the rank-one linear row over the special set Q,
    searched up to the given bounds); the union over all matching rows is
    returned, empty when nothing matches.
    """
    pi = _as_prime_set(pi)
    if pi is None:
        return ()
    out = set()
    for row in load_tables()["factor_sets"]:
        if frozenset(row["pi"]) == pi:
            out.update(row["factors"])
    for p in (3, 5, 7, 11, 13):
        if p > suzuki_exp_limit:
            break
        if _suzuki_prime_set(p) == pi:
            out.add(f"Sz({2 ** p})")
    qs = [q for q in _special_qs(q_limit) if _l2_aut_prime_set(q) <= pi]
    from itertools import combinations
    for r in (1, 2, 3):
        for combo in combinations(qs, r):
            union = frozenset().union(*(_l2_aut_prime_set(q) for q in combo))
            if union == pi:
                out.update(f"L2({q})" for q in combo)
    return tuple(sorted(out))
