"""Modules for permutation groups over prime fields GF(p).

A GModule assigns one invertible d x d matrix over GF(p) to each group
generator.  The action convention is row-vector times matrix, composed
left-to-right, matching the permutation action convention; permutation
modules are built so that e_i * rho(g) = e_{g(i)}.

Provides fixed subspaces, irreducibility by spinning, vector orbits and
stabilisers, the derivation space Z^1 with inner derivations B^1 and the
quotient H^1, and an exhaustive complement-counting oracle for Z^1.
Derivations follow the twisted rule d(gh) = d(g) + d(h) * rho(g)^-1, whose
graphs {d(g)g} are exactly the complements to the module in the split
extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .perms import Permutation
from .permgroup import CapExceeded, PermGroup
from .structure import GrowingGroup, is_soluble


# -- linear algebra over GF(p) on int tuples ---------------------------------


def mat_identity(d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_mul(A, B, p):
    d = len(A)
    m = len(B[0])
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) % p for col in Bt)
                 for row in A)


def vec_mat(v, A, p):
    d = len(A[0])
    return tuple(sum(v[i] * A[i][j] for i in range(len(v))) % p for j in range(d))


def mat_add(A, B, p):
    return tuple(tuple((a + b) % p for a, b in zip(ra, rb))
                 for ra, rb in zip(A, B))


def mat_scale(A, c, p):
    return tuple(tuple(a * c % p for a in row) for row in A)


def mat_inv(A, p):
    d = len(A)
    aug = [list(A[i]) + [1 if i == j else 0 for j in range(d)] for i in range(d)]
    for col in range(d):
        piv = next((r for r in range(col, d) if aug[r][col] % p), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [a * inv % p for a in aug[col]]
        for r in range(d):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[d:]) for row in aug)


def rref(rows, p):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows if any(x % p for x in r)]
    pivots = []
    r = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [a * inv % p for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def nullspace(rows, p, width):
    """Basis of {v : v * M^T = 0} for the row list M (i.e. right kernel)."""
    ech, pivots = rref(rows, p)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * width
        v[fc] = 1
        for r, pc in zip(ech, pivots):
            v[pc] = (-r[fc]) % p
        basis.append(tuple(v))
    return basis


def in_span(basis_ech, pivots, v, p):
    v = list(v)
    for row, pc in zip(basis_ech, pivots):
        if v[pc]:
            f = v[pc]
            v = [(a - f * b) % p for a, b in zip(v, row)]
    return not any(v)


# -- modules -------------------------------------------------------------------


class GModule:
    """Matrices over GF(p), one per generator of the acting group."""

    def __init__(self, p, matrices, group=None, presentation=None):
        self.p = p
        self.matrices = tuple(tuple(tuple(c % p for c in row) for row in m)
                              for m in matrices)
        self.dim = len(self.matrices[0]) if self.matrices else 0
        self.group = group
        self.presentation = presentation
        self.inverses = tuple(mat_inv(m, p) for m in self.matrices)
        if presentation is not None:
            self._verify_presentation()

    def _verify_presentation(self):
        if self.presentation.generator_count != len(self.matrices):
            raise ValueError("generator count mismatch with presentation")
        idm = mat_identity(self.dim)
        for rel in self.presentation.relators:
            if self.evaluate_word(rel) != idm:
                raise ValueError(f"relator {rel} does not map to the identity matrix")

    def evaluate_word(self, word):
        m = mat_identity(self.dim)
        for idx in word:
            m = mat_mul(m, self.matrices[idx - 1] if idx > 0
                        else self.inverses[-idx - 1], self.p)
        return m

    def act(self, v, gen_index):
        """Image of row vector v under the (1-based, signed) generator."""
        mat = (self.matrices[gen_index - 1] if gen_index > 0
               else self.inverses[-gen_index - 1])
        return vec_mat(v, mat, self.p)

    def vectors(self):
        return product(range(self.p), repeat=self.dim)

    def nonzero_vectors(self):
        zero = (0,) * self.dim
        return (v for v in self.vectors() if v != zero)

    def __repr__(self):
        return f"GModule(dim={self.dim}, p={self.p}, gens={len(self.matrices)})"


def permutation_module(G, p):
    """The natural permutation module of G over GF(p)."""
    n = G.degree
    mats = []
    for g in G.generators:
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][g.img[i]] = 1
        mats.append(tuple(tuple(row) for row in m))
    return GModule(p, mats, group=G)


def deleted_submodule(M):
    """The sum-zero submodule of a permutation module, in its own basis.

    When p divides the number of points the all-ones vector lies inside the
    sum-zero subspace and is factored out as well, so the dimension drops
    by 2 instead of 1.  The chosen basis is f_i = e_i - e_n.
    """
    p, n = M.p, M.dim
    quotiented = n % p == 0
    d = n - 2 if quotiented else n - 1

    def reduce_perm_matrix(mat):
        # rows of the action on f_1..f_{n-1}
        rows = []
        for i in range(n - 1):
            img = [0] * n
            for j in range(n):
                img[j] = (mat[i][j] - mat[n - 1][j]) % p
            # e-coordinates of f_i * mat; rewrite in the f basis
            row = [img[j] % p for j in range(n - 1)]
            rows.append(row)
        if not quotiented:
            return tuple(tuple(r) for r in rows)
        # factor out j = f_1 + ... + f_{n-1}: substitute f_{n-1} = -(f_1+..+f_{n-2})
        out = []
        for i in range(n - 2):
            last = rows[i][n - 2]
            out.append(tuple((rows[i][j] - last) % p for j in range(n - 2)))
        return tuple(out)

    mats = [reduce_perm_matrix(m) for m in M.matrices]
    sub = GModule(M.p, mats, group=M.group, presentation=M.presentation)
    sub.quotiented = quotiented
    return sub


def trivial_module(G, p, dim=1):
    return GModule(p, [mat_identity(dim) for _ in G.generators], group=G)


def embed_vector(v_natural, n, p):
    """Coordinates of a sum-zero e-vector in the deleted-module basis."""
    quotiented = n % p == 0
    d = n - 2 if quotiented else n - 1
    if sum(v_natural) % p:
        raise ValueError("vector is not in the sum-zero subspace")
    # e-coords (c_1..c_n) with sum zero equal sum c_i f_i restricted to i<n
    coords = [c % p for c in v_natural[:n - 1]]
    if quotiented:
        last = coords[n - 2]
        coords = [(coords[j] - last) % p for j in range(n - 2)]
    return tuple(coords)


# -- fixed subspaces and irreducibility ---------------------------------------


def fixed_subspace(M, acting=None, word_limit=100_000):
    """Basis of the common fixed space of the given acting elements.

    `acting` may be None (all generators), a list of signed generator
    indices/words, or a PermGroup whose generators are expressed as words
    in the module group's generators by sifting.
    """
    p, d = M.p, M.dim
    words = _acting_words(M, acting, word_limit)
    conditions = []
    # v is fixed iff v * (m - I) = 0: one condition per matrix and column
    for w in words:
        m = M.evaluate_word(w)
        for j in range(d):
            conditions.append(tuple((m[i][j] - (1 if i == j else 0)) % p
                                    for i in range(d)))
    if not conditions:
        return [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return nullspace(conditions, p, d)


def _acting_words(M, acting, word_limit):
    if acting is None:
        return [(i + 1,) for i in range(len(M.matrices))]
    if isinstance(acting, PermGroup):
        if M.group is None:
            raise ValueError("module has no attached group to sift against")
        return [M.group.express(g, max_len=word_limit) for g in acting.generators]
    out = []
    for w in acting:
        if isinstance(w, int):
            out.append((w,))
        else:
            out.append(tuple(w))
    return out


def spin(M, v):
    """Basis of the smallest submodule containing v."""
    p = M.p
    basis, pivots = rref([v], p)
    queue = list(basis)
    while queue:
        w = queue.pop()
        for k in range(1, len(M.matrices) + 1):
            u = M.act(w, k)
            if not in_span(basis, pivots, u, p):
                basis, pivots = rref(list(basis) + [u], p)
                queue.append(u)
    return basis


@dataclass(frozen=True)
class IrreducibilityReport:
    irreducible: bool
    witness: tuple | None  # basis of a proper submodule when reducible

    def __bool__(self):
        return self.irreducible


def is_irreducible(M, cap=1_000_000):
    """Exhaustive spinning from one seed per 1-dimensional subspace."""
    p, d = M.p, M.dim
    if d == 0:
        return IrreducibilityReport(False, ())
    if p ** d > cap:
        raise CapExceeded(f"{p}^{d} exceeds cap {cap}", size=p ** d, cap=cap)
    if d == 1:
        return IrreducibilityReport(True, None)
    for v in M.nonzero_vectors():
        # one representative per scalar class: leading coefficient 1
        lead = next(c for c in v if c)
        if lead != 1:
            continue
        basis = spin(M, v)
        if len(basis) < d:
            return IrreducibilityReport(False, tuple(basis))
    return IrreducibilityReport(True, None)


# -- vector orbits and stabilisers ---------------------------------------------


@dataclass
class StabiliserReport:
    orbit_size: int
    stabiliser: PermGroup
    vector: tuple


def vector_stabiliser(G, M, v, cap=1_000_000):
    """Orbit of v under the matrix action and its stabiliser in G.

    The stabiliser generators are group elements (permutations) obtained
    from Schreier generators over the orbit's spanning tree.
    """
    v = tuple(c % M.p for c in v)
    if not any(v):
        raise ValueError("vector must be nonzero")
    if len(G.generators) != len(M.matrices):
        raise ValueError("module is not aligned with the group's generators")
    p = M.p
    idn = G.identity()
    trans = {v: idn}
    queue = [v]
    for u in queue:
        t = trans[u]
        for k, g in enumerate(G.generators):
            w = vec_mat(u, M.matrices[k], p)
            if w not in trans:
                if len(trans) >= cap:
                    raise CapExceeded("vector orbit exceeds cap",
                                      size=len(trans), cap=cap)
                trans[w] = t * g
                queue.append(w)
    orbit_size = len(trans)
    target, rem = divmod(G.order(), orbit_size)
    if rem:
        raise AssertionError("orbit length does not divide the group order")
    H = GrowingGroup(G.degree)
    for u in trans:
        t = trans[u]
        for k, g in enumerate(G.generators):
            w = vec_mat(u, M.matrices[k], p)
            s = t * g * trans[w].inverse()
            if not s.is_identity():
                H.add(s.img)
            if H.order() == target:
                stab = H.to_group(parent=G)
                return StabiliserReport(orbit_size, stab, v)
    stab = H.to_group(parent=G)
    if stab.order() != target:
        raise AssertionError("orbit-stabiliser mismatch")
    return StabiliserReport(orbit_size, stab, v)


@dataclass
class ModuleScanReport:
    all_soluble: bool
    witness: StabiliserReport | None
    orbits_examined: int


def all_stabilisers_soluble(G, M, cap=1_000_000):
    """Scan one vector per orbit; fail fast on an insoluble stabiliser.

    Orbit representatives are the lexicographically first vectors of their
    orbits, scanned in lexicographic order.
    """
    p, d = M.p, M.dim
    if p ** d > cap:
        raise CapExceeded(f"{p}^{d} exceeds cap {cap}", size=p ** d, cap=cap)
    seen = set()
    examined = 0
    for v in M.nonzero_vectors():
        if v in seen:
            continue
        # mark the whole orbit
        orbit = {v}
        queue = [v]
        for u in queue:
            for k in range(len(M.matrices)):
                w = vec_mat(u, M.matrices[k], p)
                if w not in orbit:
                    orbit.add(w)
                    queue.append(w)
        seen |= orbit
        examined += 1
        rep = vector_stabiliser(G, M, v, cap=cap)
        if not is_soluble(rep.stabiliser):
            return ModuleScanReport(False, rep, examined)
    return ModuleScanReport(True, None, examined)


# -- derivations, H^1, complements ---------------------------------------------


@dataclass(frozen=True)
class DerivationSpace:
    p: int
    dim_z1: int
    dim_b1: int
    dim_h1: int
    z1_basis: tuple  # tuples of generator-image vectors


def _relator_coefficients(P, M, relator):
    """Per-generator coefficient matrices of d(relator) = 0.

    Walking the word with the twisted rule gives, for each occurrence of a
    generator, a coefficient rho(prefix)^-1 (positive letter, prefix
    excluding the letter) or -rho(prefix)^-1 (inverse letter, prefix
    including it).
    """
    p, d = M.p, M.dim
    r = P.generator_count
    coeff = [None] * r  # accumulated d x d matrices
    Q = mat_identity(d)  # rho(prefix^-1)
    for letter in relator:
        i = abs(letter) - 1
        if letter > 0:
            term = Q
            Q = mat_mul(M.inverses[i], Q, p)
        else:
            Q = mat_mul(M.matrices[i], Q, p)
            term = mat_scale(Q, p - 1, p)
        coeff[i] = term if coeff[i] is None else mat_add(coeff[i], term, p)
    zero = tuple(tuple(0 for _ in range(d)) for _ in range(d))
    return [c if c is not None else zero for c in coeff]


def derivation_space(P, M):
    """Z^1, B^1 and H^1 for the presented group acting via M."""
    p, d = M.p, M.dim
    r = P.generator_count
    if len(M.matrices) != r:
        raise ValueError("module matrices are not indexed like the presentation")
    conditions = []  # one length-r*d linear condition per relator coordinate
    for rel in P.relators:
        coeffs = _relator_coefficients(P, M, rel)
        for col in range(d):
            cond = []
            for i in range(r):
                cond.extend(coeffs[i][row][col] for row in range(d))
            conditions.append(tuple(cond))
    if conditions:
        z1 = nullspace(conditions, p, r * d)
    else:
        z1 = [tuple(int(i == j) for j in range(r * d)) for i in range(r * d)]
    fixed = fixed_subspace(M)
    dim_b1 = d - len(fixed)
    basis = tuple(tuple(tuple(vec[i * d:(i + 1) * d]) for i in range(r))
                  for vec in z1)
    return DerivationSpace(p, len(z1), dim_b1, len(z1) - dim_b1, basis)


def count_complements(P, M, cap=1_000_000):
    """Exhaustively count generator-image tuples satisfying every relator.

    Independent oracle for |Z^1| = p^dim(Z^1): candidate derivations are
    enumerated and each relator is evaluated by walking the word, instead
    of solving the cocycle system.
    """
    p, d = M.p, M.dim
    r = P.generator_count
    total = p ** (d * r)
    if total > cap:
        raise CapExceeded(f"{p}^{d * r} exceeds cap {cap}", size=total, cap=cap)
    vectors = list(product(range(p), repeat=d))
    vindex = {v: i for i, v in enumerate(vectors)}
    nvec = len(vectors)
    add_code = [[vindex[tuple((a + b) % p for a, b in zip(u, w))]
                 for w in vectors] for u in vectors]
    # per relator: list of (generator index, image table by vector code)
    relator_tables = []
    for rel in sorted(P.relators, key=len):
        per_letter = []
        Q = mat_identity(d)
        for letter in rel:
            i = abs(letter) - 1
            if letter > 0:
                E = Q
                Q = mat_mul(M.inverses[i], Q, p)
            else:
                Q = mat_mul(M.matrices[i], Q, p)
                E = mat_scale(Q, p - 1, p)
            table = [vindex[vec_mat(v, E, p)] for v in vectors]
            per_letter.append((i, table))
        relator_tables.append(per_letter)
    zero_code = vindex[(0,) * d]
    count = 0
    for tup in product(range(nvec), repeat=r):
        ok = True
        for per_letter in relator_tables:
            acc = zero_code
            for i, table in per_letter:
                acc = add_code[acc][table[tup[i]]]
            if acc != zero_code:
                ok = False
                break
        if ok:
            count += 1
    return count


# -- module file format ----------------------------------------------------------


def write_module_file(path, M, comment=None):
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"dim {M.dim}")
    lines.append(f"p {M.p}")
    for m in M.matrices:
        lines.append(" ".join(str(c) for row in m for c in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_module_file(path, group=None, presentation=None):
    dim = p = None
    mats = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("dim "):
                dim = int(line.split()[1])
            elif line.startswith("p "):
                p = int(line.split()[1])
            else:
                vals = [int(v) for v in line.split()]
                if dim is None or len(vals) != dim * dim:
                    raise ValueError(f"bad matrix line in {path}")
                mats.append(tuple(tuple(vals[i * dim:(i + 1) * dim])
                                  for i in range(dim)))
    if dim is None or p is None:
        raise ValueError(f"missing dim/p headers in {path}")
    return GModule(p, mats, group=group, presentation=presentation)


# -- split extensions V x| G --------------------------------------------------


@dataclass
class AffineExtension:
    """The split extension of a module by its acting group, as permutations
    of the p^d module vectors."""
    group: PermGroup
    normal: PermGroup           # the translation subgroup (image of V)
    top_generators: tuple       # images of the acting group's generators
    vectors: tuple
    index_of: dict

    def translation(self, v):
        img = [self.index_of[tuple((a + b) % self._p for a, b in zip(u, v))]
               for u in self.vectors]
        return Permutation(img)


def affine_extension(M):
    """Build V x| G acting on the vectors of V (degree p^dim)."""
    if M.group is None:
        raise ValueError("module needs an attached acting group")
    p, d = M.p, M.dim
    vectors = tuple(product(range(p), repeat=d))
    index_of = {v: i for i, v in enumerate(vectors)}
    trans_gens = []
    for i in range(d):
        e = tuple(int(j == i) for j in range(d))
        img = [index_of[tuple((a + b) % p for a, b in zip(u, e))] for u in vectors]
        trans_gens.append(Permutation(img))
    lin_gens = []
    for mat in M.matrices:
        img = [index_of[vec_mat(u, mat, p)] for u in vectors]
        lin_gens.append(Permutation(img))
    G = PermGroup(trans_gens + lin_gens)
    N = PermGroup(trans_gens, degree=G.degree, parent=G)
    ext = AffineExtension(G, N, tuple(lin_gens), vectors, index_of)
    ext._p = p
    return ext
