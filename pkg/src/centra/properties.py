"""Centraliser-solubility property checks and classification cross-checks.

The main entry point decides, for a permutation group and a set of primes,
whether every non-central element whose order only involves those primes
has a soluble centraliser.  The check walks conjugacy class representatives
(centraliser structure is a class invariant), skipping central and
irrelevant classes, and reports holds / fails / capped with a re-verifiable
witness on failure.

A second harness cross-checks the outcomes against the classification
tables: whenever the property holds for a catalogue simple group, the group
must be accounted for by the alternating / classical / exceptional /
sporadic tables, with primes not dividing the group order set aside.
Finally, lifting checks confirm on concrete extensions that insoluble
centralisers transfer from a quotient G/N to G (coprime order case, and
the central p-power case).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from math import gcd

from . import catalogue, tables
from .perms import Permutation
from .permgroup import CapExceeded, DEFAULT_ELEMENT_CAP, PermGroup
from .structure import (class_centraliser, centre, conjugacy_classes,
                        derived_series, is_pi_element, quotient_action)


# -- prime sets -----------------------------------------------------------------


class PiSet:
    """A sorted set of primes, or the set of all primes."""

    def __init__(self, primes=None, universal=False):
        self.universal = universal
        if universal:
            self.primes = None
        else:
            ps = sorted(set(int(p) for p in primes))
            for p in ps:
                if not tables.is_prime(p):
                    raise ValueError(f"{p} is not prime")
            self.primes = tuple(ps)

    @classmethod
    def parse(cls, text):
        text = text.strip().lower()
        if text in ("all", "*"):
            return cls(universal=True)
        if not text:
            raise ValueError("empty prime set")
        return cls(int(t) for t in text.replace(" ", "").split(","))

    @classmethod
    def universal_set(cls):
        return cls(universal=True)

    def smallest(self):
        if self.universal:
            return 2
        return self.primes[0] if self.primes else None

    def as_set(self):
        return None if self.universal else frozenset(self.primes)

    def __contains__(self, p):
        return True if self.universal else p in self.primes

    def __iter__(self):
        if self.universal:
            raise TypeError("cannot iterate the set of all primes")
        return iter(self.primes)

    def label(self):
        return "all" if self.universal else ",".join(map(str, self.primes))

    def __repr__(self):
        return f"PiSet({self.label()})"

    def __eq__(self, other):
        return isinstance(other, PiSet) and (self.universal, self.primes) == \
            (other.universal, other.primes)

    def __hash__(self):
        return hash((self.universal, self.primes))


# -- cached per-group analysis -----------------------------------------------------


class GroupAnalysis:
    """Conjugacy classes of a group with lazily computed centraliser data."""

    def __init__(self, group, cap=DEFAULT_ELEMENT_CAP):
        self.group = group
        self.cap = cap
        self.classes = conjugacy_classes(group, cap)
        self.centre_order = sum(c.size for c in self.classes if c.size == 1)
        self._class_info = {}

    def class_info(self, index):
        """(centraliser order, soluble flag, derived orders) for one class."""
        if index not in self._class_info:
            cls = self.classes[index]
            C = class_centraliser(self.group, cls)
            series = derived_series(C)
            self._class_info[index] = (C.order(), series.soluble, series.orders)
        return self._class_info[index]


_ANALYSES = {}


def group_analysis(group, cap=DEFAULT_ELEMENT_CAP):
    key = (id(group), cap)
    if key not in _ANALYSES:
        _ANALYSES[key] = GroupAnalysis(group, cap)
    return _ANALYSES[key]


# -- the property check -------------------------------------------------------------


@dataclass
class Witness:
    element: Permutation
    order: int
    centraliser_order: int
    derived_orders: tuple

    def to_json(self):
        return {"element": self.element.cycle_string(),
                "order": self.order,
                "centraliser_order": self.centraliser_order,
                "derived_orders": list(self.derived_orders)}


@dataclass
class PropertyReport:
    group: str
    pi: PiSet
    outcome: str           # holds | fails | capped
    witness: Witness | None
    classes_examined: int
    cap: int
    seed: int
    elapsed_ms: int
    degree: int | None = None

    def holds(self):
        return self.outcome == "holds"

    def to_json(self):
        return {"group": self.group,
                "pi": self.pi.label(),
                "outcome": self.outcome,
                "witness": self.witness.to_json() if self.witness else None,
                "classes_examined": self.classes_examined,
                "cap": self.cap,
                "seed": self.seed,
                "elapsed_ms": self.elapsed_ms}


def check_soluble_pi_centralisers(group, pi, cap=DEFAULT_ELEMENT_CAP,
                                  name=None, seed=0):
    """Decide whether every non-central pi-element centraliser is soluble.

    Central classes and classes whose element orders involve primes outside
    pi are skipped.  The first failing class (in the deterministic class
    order) provides the witness.
    """
    label = name if name is not None else f"degree-{group.degree} group"
    start = time.monotonic()
    try:
        analysis = group_analysis(group, cap)
    except CapExceeded:
        return PropertyReport(label, pi, "capped", None, 0, cap, seed,
                              _ms(start), group.degree)
    examined = 0
    witness = None
    for i, cls in enumerate(analysis.classes):
        if cls.size == 1:
            continue  # central
        order = cls.rep.order()
        if not is_pi_element(cls.rep, pi.as_set()):
            continue
        examined += 1
        c_order, soluble, d_orders = analysis.class_info(i)
        if not soluble:
            witness = Witness(cls.rep, order, c_order, d_orders)
            break
    outcome = "fails" if witness else "holds"
    return PropertyReport(label, pi, outcome, witness, examined, cap, seed,
                          _ms(start), group.degree)


def _ms(start):
    return int((time.monotonic() - start) * 1000)


def check_catalogue_group(name, pi, cap=DEFAULT_ELEMENT_CAP, seed=0):
    desc = catalogue.resolve(name)
    return check_soluble_pi_centralisers(catalogue.build(desc.key), pi,
                                         cap=cap, name=desc.key, seed=seed)


def verify_witness(group, pi, witness_json):
    """Re-verify a failure witness from its JSON form alone."""
    elem = Permutation.parse(witness_json["element"], group.degree)
    if elem not in group:
        return False, "witness is not a group element"
    if elem.order() != witness_json["order"]:
        return False, "stated order is wrong"
    if not is_pi_element(elem, pi.as_set()):
        return False, "witness is not a pi-element"
    if all(elem.commutes_with(g) for g in group.generators):
        return False, "witness is central"
    from .structure import centraliser
    C = centraliser(group, elem, cap=max(DEFAULT_ELEMENT_CAP, group.order()))
    if C.order() != witness_json["centraliser_order"]:
        return False, "centraliser order mismatch"
    if derived_series(C).soluble:
        return False, "centraliser is soluble after all"
    return True, "ok"


# -- classification cross-check -------------------------------------------------------


def classification_member(desc, group, pi):
    """Is the simple group accounted for by the classification tables?

    Primes not dividing the group order cannot constrain it, so membership
    is evaluated at pi intersected with the primes of |G|; an empty
    intersection counts as exempt.
    """
    order_primes = frozenset(tables.prime_factors(group.order()))
    eff = order_primes if pi.universal else (pi.as_set() & order_primes)
    if not eff:
        return True, "exempt (no common primes with the group order)"
    cls = desc.classification
    if cls is None:
        raise ValueError(f"{desc.key} has no classification metadata")
    if cls.kind == "alternating":
        ok = tables.alt_degree_allowed(cls.n, eff)
        return ok, f"alternating degree {cls.n}"
    if cls.kind == "classical":
        if cls.family == "Sp":
            d = 2 if cls.q % 2 else 1
            n_eff = cls.n // d
        else:
            n_eff = cls.n
        bound = tables.classical_rank_bound(cls.family, eff)
        ok = bound is None or n_eff <= bound
        return ok, f"classical {cls.family} n={n_eff} bound={bound}"
    if cls.kind == "sporadic":
        ok = tables.sporadic_allowed(cls.family, eff)
        return ok, f"sporadic {cls.family}"
    if cls.kind == "exceptional":
        return True, f"exceptional family {cls.family}"
    raise AssertionError(cls.kind)


@dataclass
class CrosscheckRow:
    group: str
    outcome: str
    member: bool | None
    consistent: bool
    detail: str


@dataclass
class CrosscheckReport:
    pi: PiSet
    rows: list
    violations: int

    def to_json(self):
        return {"pi": self.pi.label(),
                "violations": self.violations,
                "rows": [{"group": r.group, "outcome": r.outcome,
                          "member": r.member, "consistent": r.consistent,
                          "detail": r.detail} for r in self.rows]}


def classification_crosscheck(pi, names=None, cap=DEFAULT_ELEMENT_CAP):
    """Soundness direction over the catalogue: holds implies table membership.

    Groups where the check fails or caps impose no obligation.
    """
    if names is None:
        names = [d.key for d in catalogue.list_descriptors(simple_only=True)]
    rows = []
    violations = 0
    for name in names:
        desc = catalogue.resolve(name)
        group = catalogue.build(desc.key)
        report = check_soluble_pi_centralisers(group, pi, cap=cap, name=desc.key)
        if report.outcome != "holds":
            rows.append(CrosscheckRow(desc.key, report.outcome, None, True,
                                      "no obligation"))
            continue
        member, detail = classification_member(desc, group, pi)
        if not member:
            violations += 1
        rows.append(CrosscheckRow(desc.key, "holds", member, member, detail))
    return CrosscheckReport(pi, rows, violations)


# -- lifting checks ----------------------------------------------------------------


@dataclass
class LiftReport:
    ok: bool
    mode: str
    detail: str
    lift: Permutation | None = None


def lifting_check(group, normal, x_image, expected_normal_order=None,
                  cap=100_000):
    """Coprime-order lifting check on a concrete extension.

    Given a group with designated normal subgroup N and an element x of the
    quotient G/N of order coprime to |N|, find a lift of the same order
    whose centraliser projects onto the full quotient centraliser.  Returns
    a LiftReport; raises ValueError when the coprimality precondition
    fails.
    """
    if expected_normal_order is not None and normal.order() != expected_normal_order:
        raise ValueError(f"normal subgroup order {normal.order()} != "
                         f"declared {expected_normal_order}")
    quo = quotient_action(group, normal, cap=cap)
    if not isinstance(x_image, Permutation):
        raise TypeError("x_image must be an element of the quotient group")
    if x_image not in quo.group:
        raise ValueError("x_image is not in the quotient")
    m = x_image.order()
    if gcd(m, normal.order()) != 1:
        raise ValueError(f"order {m} of the image shares a prime with "
                         f"|N| = {normal.order()}")
    # construct a lift of exact order m from any preimage
    y = quo.preimage_rep(x_image)
    t = y.order() // m
    # y^m lies in N, so t divides |N| and is coprime to m
    s = _crt_power(m, t)
    lift = y ** s
    if lift.order() != m or quo.project(lift) != x_image:
        return LiftReport(False, "coprime", "power trick failed to produce a lift")
    # centraliser of the lift must project onto the quotient centraliser
    from .structure import centraliser
    C_lift = centraliser(group, lift, cap=max(group.order(), 1))
    C_quot = centraliser(quo.group, x_image, cap=max(quo.group.order(), 1))
    projected = PermGroup([quo.project(g) for g in C_lift.generators],
                          degree=quo.group.degree)
    if projected.order() != C_quot.order():
        return LiftReport(False, "coprime",
                          f"projection has order {projected.order()}, "
                          f"quotient centraliser {C_quot.order()}", lift)
    for g in projected.generators:
        if g not in C_quot:
            return LiftReport(False, "coprime",
                              "projection leaves the quotient centraliser", lift)
    return LiftReport(True, "coprime",
                      f"lift of order {m} found; centraliser projects onto "
                      f"the quotient centraliser of order {C_quot.order()}", lift)


def _crt_power(m, t):
    """Exponent s with s = 1 mod m and s = 0 mod t (m, t coprime)."""
    if t == 1:
        return 1
    return t * pow(t, -1, m)


def central_lifting_check(group, central, p, cap=DEFAULT_ELEMENT_CAP):
    """Central p-power lifting: an insoluble p-power centraliser in G/Z
    yields one in G.

    Verifies the hypothesis downstairs by searching the quotient, then
    confirms the conclusion upstairs.  Returns a LiftReport.
    """
    for z in central.generators:
        if not all(z.commutes_with(g) for g in group.generators):
            raise ValueError("designated subgroup is not central")
    zorder = central.order()
    if zorder == 1 or any(zorder % q == 0 and q != p
                          for q in tables.prime_factors(zorder)):
        raise ValueError("central subgroup must have p-power order")
    quo = quotient_action(group, central, cap=cap)
    down = _insoluble_p_power_witness(quo.group, p, cap)
    if down is None:
        return LiftReport(False, "central",
                          "quotient has no insoluble p-power centraliser; "
                          "hypothesis not met")
    up = _insoluble_p_power_witness(group, p, cap)
    if up is None:
        return LiftReport(False, "central",
                          "no insoluble p-power centraliser upstairs", down)
    return LiftReport(True, "central",
                      f"witness of order {up.order()} upstairs matches the "
                      f"quotient witness of order {down.order()}", up)


def _insoluble_p_power_witness(group, p, cap):
    analysis = group_analysis(group, cap)
    for i, cls in enumerate(analysis.classes):
        if cls.size == 1:
            continue
        order = cls.rep.order()
        if order == 1 or any(order % q == 0 for q in tables.prime_factors(order)
                             if q != p):
            continue
        _, soluble, _ = analysis.class_info(i)
        if not soluble:
            return cls.rep
    return None


# -- canonical report output ----------------------------------------------------------


def canonical_json(payload):
    """Sorted-key JSON with a trailing newline; elapsed_ms is zeroed so that
    repeated runs give byte-identical files."""
    def scrub(obj):
        if isinstance(obj, dict):
            return {k: (0 if k == "elapsed_ms" else scrub(v))
                    for k, v in obj.items()}
        if isinstance(obj, list):
            return [scrub(v) for v in obj]
        return obj
    return json.dumps(scrub(payload), sort_keys=True, indent=2) + "\n"


def emit_report(report, path):
    """Write a report as canonical JSON (byte-stable across repeat runs)."""
    payload = report.to_json() if hasattr(report, "to_json") else report
    data = canonical_json(payload)
    with open(path, "w") as fh:
        fh.write(data)
    return data
