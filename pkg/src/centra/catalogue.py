"""Constructors and data ingestion for the named groups of the catalogue.

Families built on the fly: alternating and symmetric groups, PSL_2(q) on
the q+1 projective-line points, PSL_3(q) on the q^2+q+1 projective-plane
points (normalized homogeneous coordinates, first nonzero entry 1, ordered
lexicographically by coefficient codes).  The Mathieu groups, U_3(3),
PSp_4(3), L_3(4) and Sz(8) ship as generator files under data/ with their
orders recorded and cross-checked at load time.

Presentations for A_5, A_6, A_7, L_2(7), L_2(8) and L_3(3) ship as .pres
files carrying both the relators and the permutation generators they were
verified against; relators are re-evaluated at load time.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import factorial, gcd

from .ffield import FieldSpec
from .perms import Permutation
from .permgroup import PermGroup
from . import modrep


def data_path(filename):
    """Locate a shipped data file, honouring the CENTRA_DATA override."""
    override = os.environ.get("CENTRA_DATA")
    if override:
        return os.path.join(override, filename)
    return str(resources.files("centra").joinpath("data", filename))


# -- generator file format -----------------------------------------------------


def read_generator_file(path):
    """Parse a generator file: `degree n`, optional `order N`, image lines."""
    degree = order = None
    gens = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("degree"):
                degree = int(line.split()[1])
            elif line.startswith("order"):
                order = int(line.split()[1])
            else:
                images = [int(v) for v in line.split()]
                if degree is None or len(images) != degree:
                    raise ValueError(f"bad generator line in {path}: {line!r}")
                gens.append(Permutation.from_images(images))
    if degree is None:
        raise ValueError(f"{path} has no degree header")
    if not gens:
        raise ValueError(f"{path} has no generators")
    return degree, order, gens


def write_generator_file(path, degree, gens, order=None, comment=None):
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"degree {degree}")
    if order is not None:
        lines.append(f"order {order}")
    for g in gens:
        lines.append(" ".join(str(i + 1) for i in g.img))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


# -- matrix helpers over a FieldSpec (entries are field codes) -------------------


def fmat_mul(F, A, B):
    n, m = len(A), len(B[0])
    k = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                s = F.add(s, F.mul(A[i][t], B[t][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def fvec_mat(F, v, A):
    m = len(A[0])
    out = []
    for j in range(m):
        s = 0
        for i in range(len(v)):
            s = F.add(s, F.mul(v[i], A[i][j]))
        out.append(s)
    return tuple(out)


def fmat_identity(F, n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def projective_points(F, dim):
    """Normalized representatives of 1-spaces, lexicographically ordered."""
    pts = []
    for code in range(F.order ** dim):
        v = []
        c = code
        for _ in range(dim):
            v.append(c % F.order)
            c //= F.order
        v = tuple(reversed(v))  # lexicographic in the natural reading order
        lead = next((x for x in v if x), None)
        if lead is None or lead != 1:
            continue
        pts.append(v)
    return pts


def normalize_projective(F, v):
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ValueError("zero vector has no projective point")
    if lead == 1:
        return tuple(v)
    inv = F.inv(lead)
    return tuple(F.mul(inv, x) for x in v)


def projective_action(F, mats, dim):
    """Permutations induced by matrices on the projective points."""
    pts = projective_points(F, dim)
    index = {v: i for i, v in enumerate(pts)}
    perms = []
    for A in mats:
        img = [index[normalize_projective(F, fvec_mat(F, v, A))] for v in pts]
        perms.append(Permutation(img))
    return perms, pts


def orbit_action(F, mats, start):
    """Permutations induced on the orbit of a projective point."""
    mats = list(mats)
    start = normalize_projective(F, start)
    pts = [start]
    index = {start: 0}
    for v in pts:
        for A in mats:
            w = normalize_projective(F, fvec_mat(F, v, A))
            if w not in index:
                index[w] = len(pts)
                pts.append(w)
    perms = []
    for A in mats:
        img = [index[normalize_projective(F, fvec_mat(F, v, A))] for v in pts]
        perms.append(Permutation(img))
    return perms, pts


def matrix_image_order(F, mats, cap=2_000_000):
    """Order of the permutation image of <mats> on the nonzero vectors."""
    dim = len(mats[0])
    vecs = []
    for code in range(1, F.order ** dim):
        v = []
        c = code
        for _ in range(dim):
            v.append(c % F.order)
            c //= F.order
        vecs.append(tuple(reversed(v)))
    index = {v: i for i, v in enumerate(vecs)}
    perms = [Permutation([index[fvec_mat(F, v, A)] for v in vecs]) for A in mats]
    G = PermGroup(perms)
    if G.order() > cap:
        raise ValueError("image order exceeds cap")
    return G.order()


# -- family constructors ---------------------------------------------------------


def alternating(n):
    if n < 1:
        raise ValueError("degree must be positive")
    if n <= 2:
        return PermGroup.trivial(max(n, 1))
    if n == 3:
        G = PermGroup([Permutation.from_cycles([(1, 2, 3)], 3)])
    else:
        a = Permutation.from_cycles([(1, 2, 3)], n)
        cyc = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        b = Permutation.from_cycles([cyc], n)
        G = PermGroup([a, b])
    assert G.order() == factorial(n) // 2
    return G


def symmetric(n):
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return PermGroup.trivial(1)
    gens = [Permutation.from_cycles([(1, 2)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    G = PermGroup(gens)
    assert G.order() == factorial(n)
    return G


def cyclic(n):
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup([Permutation.from_cycles([tuple(range(1, n + 1))], n)])


def dihedral(n):
    """Dihedral group of order 2n acting on n points."""
    if n < 3:
        raise ValueError("need n >= 3")
    rot = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    refl = Permutation([((n - i) % n) for i in range(n)])
    G = PermGroup([rot, refl])
    assert G.order() == 2 * n
    return G


def psl2(q):
    """PSL_2(q) on the q+1 points of the projective line."""
    F = FieldSpec(*_prime_power(q))
    mu = F.generator_code
    one = 1
    u = ((one, one), (0, one))            # x -> x + 1 on the affine line
    lo = ((one, 0), (mu, one))
    mats = [u, lo]
    if F.k > 1:
        mats.append(((one, mu), (0, one)))
    perms, _ = projective_action(F, mats, 2)
    G = PermGroup(perms)
    expected = q * (q * q - 1) // gcd(2, q - 1)
    assert G.order() == expected, f"PSL2({q}): got {G.order()}, want {expected}"
    return G


def psl3(q):
    """PSL_3(q) on the q^2+q+1 points of the projective plane."""
    F = FieldSpec(*_prime_power(q))
    mu = F.generator_code
    w = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
    e12 = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    mats = [w, e12]
    if F.k > 1:
        mats.append(((1, mu, 0), (0, 1, 0), (0, 0, 1)))
    perms, _ = projective_action(F, mats, 3)
    G = PermGroup(perms)
    expected = q ** 3 * (q ** 3 - 1) * (q * q - 1) // gcd(3, q - 1)
    assert G.order() == expected, f"PSL3({q}): got {G.order()}, want {expected}"
    return G


def sl2_vector_action(q):
    """SL_2(q) acting on the q^2-1 nonzero vectors (faithful)."""
    F = FieldSpec(*_prime_power(q))
    vecs = [(a, b) for a in range(F.order) for b in range(F.order)
            if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}
    mats = [((1, 1), (0, 1)), ((1, 0), (1, 1))]
    if F.k > 1:
        mats.append(((1, F.generator_code), (0, 1)))
    perms = [Permutation([index[fvec_mat(F, v, A)] for v in vecs]) for A in mats]
    G = PermGroup(perms)
    assert G.order() == q * (q * q - 1)
    return G


def direct_product(G, H):
    """G x H on the disjoint union of their point sets."""
    n, m = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(g.img + tuple(range(n, n + m))))
    for h in H.generators:
        gens.append(Permutation(tuple(range(n)) + tuple(i + n for i in h.img)))
    P = PermGroup(gens, degree=n + m)
    assert P.order() == G.order() * H.order()
    return P


def _prime_power(q):
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise ValueError("not a prime power")
            return p, k
    raise ValueError("not a prime power")


# -- presentations ----------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """Relators plus the permutation generators they were verified against."""
    name: str
    generator_count: int
    relators: tuple
    generators: tuple

    def group(self):
        return _presentation_group(self.name)

    def verify(self):
        """Check every relator evaluates to the identity permutation."""
        idn = Permutation.identity(self.generators[0].degree)
        for rel in self.relators:
            g = idn
            for idx in rel:
                gen = self.generators[abs(idx) - 1]
                g = g * (gen if idx > 0 else gen.inverse())
            if not g.is_identity():
                raise ValueError(f"{self.name}: relator {rel} does not hold")


@lru_cache(maxsize=None)
def _presentation_group(name):
    pres = shipped_presentation(name)
    return PermGroup(pres.generators)


def read_presentation_file(path, name):
    degree = None
    perms = []
    count = None
    relators = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("degree"):
                degree = int(line.split()[1])
            elif line.startswith("perm"):
                images = [int(v) for v in line.split()[1:]]
                if degree is None or len(images) != degree:
                    raise ValueError(f"bad perm line in {path}")
                perms.append(Permutation.from_images(images))
            elif line.startswith("gens"):
                count = int(line.split()[1])
            else:
                relators.append(tuple(int(v) for v in line.split()))
    if count is None or count != len(perms):
        raise ValueError(f"{path}: generator count mismatch")
    pres = Presentation(name, count, tuple(relators), tuple(perms))
    pres.verify()
    return pres


PRESENTATION_NAMES = ("A5", "A6", "A7", "L2(7)", "L2(8)", "L3(3)")

_PRES_FILES = {
    "A5": "a5.pres", "A6": "a6.pres", "A7": "a7.pres",
    "L2(7)": "l2_7.pres", "L2(8)": "l2_8.pres", "L3(3)": "l3_3.pres",
}


@lru_cache(maxsize=None)
def shipped_presentation(name):
    key = canonical_name(name)
    if key not in _PRES_FILES:
        raise KeyError(f"no shipped presentation for {name!r}; "
                       f"available: {', '.join(PRESENTATION_NAMES)}")
    return read_presentation_file(data_path(_PRES_FILES[key]), key)


# -- the deleted permutation module embedding A_{n+1} -> GL_n(q) -------------------


@dataclass
class DeletedEmbedding:
    field: FieldSpec
    dimension: int
    quotiented: bool
    matrices: tuple      # field-code matrices, one per generator
    generators: tuple    # the A_{n+1} permutation generators used
    presentation: Presentation | None


def deleted_perm_embedding(n, q):
    """Matrices over GF(q) for the A_{n+1} generators acting on the
    deleted permutation module (sum-zero subspace; modulo the all-ones
    vector when the characteristic divides n+1).
    """
    if n < 4:
        raise ValueError("need n >= 4")
    m = n + 1
    F = FieldSpec(*_prime_power(q))
    pres = None
    key = f"A{m}"
    if key in _PRES_FILES:
        pres = shipped_presentation(key)
        G = pres.group()
    else:
        G = alternating(m)
    pm = modrep.permutation_module(G, F.p)
    deleted = modrep.deleted_submodule(pm)
    if pres is not None:
        # relators must map to the identity matrix
        modrep.GModule(F.p, deleted.matrices, group=G, presentation=pres)
    mats = tuple(tuple(tuple(int(c) for c in row) for row in mat)
                 for mat in deleted.matrices)
    return DeletedEmbedding(F, deleted.dim, deleted.quotiented, mats,
                            G.generators, pres)


# -- descriptors and the catalogue registry -----------------------------------------


@dataclass(frozen=True)
class Classification:
    kind: str            # alternating | classical | sporadic | exceptional
    family: str | None   # L, U, Sp, O for classical; family tag otherwise
    n: int | None        # degree (alternating) or dimension (classical)
    q: int | None


@dataclass(frozen=True)
class GroupDescriptor:
    key: str
    family: str              # Alt | Sym | PSL2 | PSL3 | File | Aux
    param: tuple
    expected_order: int | None
    simple: bool
    classification: Classification | None

    @property
    def name(self):
        return self.key


_FILE_ORDERS = {
    "M11": 7920, "M12": 95040, "M22": 443520,
    "U3(3)": 6048, "PSp4(3)": 25920, "L3(4)": 20160, "Sz(8)": 29120,
}

_FILE_STEMS = {
    "M11": "m11", "M12": "m12", "M22": "m22", "U3(3)": "u3_3",
    "PSp4(3)": "psp4_3", "L3(4)": "l3_4", "Sz(8)": "sz8",
}


def _registry():
    out = {}

    def add(key, family, param, order, simple, cls):
        out[key] = GroupDescriptor(key, family, param, order, simple, cls)

    for n in range(5, 10):
        add(f"A{n}", "Alt", (n,), factorial(n) // 2, True,
            Classification("alternating", None, n, None))
    for n in (3, 4):
        add(f"A{n}", "Alt", (n,), factorial(n) // 2, False, None)
    for n in (3, 4, 5, 6):
        add(f"S{n}", "Sym", (n,), factorial(n), False, None)
    for q in (7, 8, 9, 11, 13):
        add(f"L2({q})", "PSL2", (q,), q * (q * q - 1) // gcd(2, q - 1), True,
            Classification("classical", "L", 2, q))
    add("L3(3)", "PSL3", (3,), 5616, True, Classification("classical", "L", 3, 3))
    add("L3(4)", "File", ("l3_4",), 20160, True,
        Classification("classical", "L", 3, 4))
    add("U3(3)", "File", ("u3_3",), 6048, True,
        Classification("classical", "U", 3, 3))
    add("PSp4(3)", "File", ("psp4_3",), 25920, True,
        Classification("classical", "Sp", 4, 3))
    add("Sz(8)", "File", ("sz8",), 29120, True,
        Classification("exceptional", "2B2", None, 8))
    for key in ("M11", "M12", "M22"):
        add(key, "File", (_FILE_STEMS[key],), _FILE_ORDERS[key], True,
            Classification("sporadic", key, None, None))
    add("SL2(3)", "Aux", ("sl2_3",), 24, False, None)
    return out


REGISTRY = _registry()


def canonical_name(name):
    s = re.sub(r"[\s_]", "", str(name))
    s = s.replace("PSL", "L").replace("psl", "L")
    m = re.fullmatch(r"[Aa]lt\((\d+)\)", s)
    if m:
        return f"A{m.group(1)}"
    m = re.fullmatch(r"[Ss]ym\((\d+)\)", s)
    if m:
        return f"S{m.group(1)}"
    m = re.fullmatch(r"[AaSs](\d+)", s)
    if m:
        return s[0].upper() + m.group(1)
    m = re.fullmatch(r"[Ll](\d)\((\d+)\)", s)
    if m:
        return f"L{m.group(1)}({m.group(2)})"
    m = re.fullmatch(r"[Ll]\((\d),(\d+)\)", s)
    if m:
        return f"L{m.group(1)}({m.group(2)})"
    m = re.fullmatch(r"[Ll](\d),?(\d+)", s)
    if m:
        return f"L{m.group(1)}({m.group(2)})"
    m = re.fullmatch(r"[Uu]3\(?3\)?", s)
    if m:
        return "U3(3)"
    m = re.fullmatch(r"(?:P[Ss]p|PSP|psp|Sp|sp)4\(?3\)?", s)
    if m:
        return "PSp4(3)"
    m = re.fullmatch(r"[Ss][Zz]\(?8\)?", s)
    if m:
        return "Sz(8)"
    m = re.fullmatch(r"[Mm](\d+)", s)
    if m:
        return f"M{m.group(1)}"
    m = re.fullmatch(r"SL2\(?3\)?", s, re.IGNORECASE)
    if m:
        return "SL2(3)"
    return s


def list_descriptors(simple_only=False):
    descs = sorted(REGISTRY.values(), key=lambda d: d.key)
    if simple_only:
        descs = [d for d in descs if d.simple]
    return descs


def resolve(name):
    key = canonical_name(name)
    if key in REGISTRY:
        return REGISTRY[key]
    raise KeyError(f"unknown catalogue group {name!r}")


@lru_cache(maxsize=None)
def build(name):
    """Build a catalogue group by name; orders are always cross-checked."""
    desc = resolve(name)
    if desc.family == "Alt":
        G = alternating(desc.param[0])
    elif desc.family == "Sym":
        G = symmetric(desc.param[0])
    elif desc.family == "PSL2":
        G = psl2(desc.param[0])
    elif desc.family == "PSL3":
        G = psl3(desc.param[0])
    elif desc.family == "File":
        degree, order, gens = read_generator_file(data_path(desc.param[0] + ".gens"))
        G = PermGroup(gens, degree=degree)
        if order is not None and G.order() != order:
            raise ValueError(f"{desc.key}: file order {order} != computed {G.order()}")
    elif desc.family == "Aux":
        G = sl2_vector_action(3)
    else:
        raise AssertionError(desc.family)
    if desc.expected_order is not None and G.order() != desc.expected_order:
        raise ValueError(f"{desc.key}: expected order {desc.expected_order}, "
                         f"got {G.order()}")
    return G


def build_from_file(path):
    degree, order, gens = read_generator_file(path)
    G = PermGroup(gens, degree=degree)
    if order is not None and G.order() != order:
        raise ValueError(f"{path}: recorded order {order} != computed {G.order()}")
    return G
