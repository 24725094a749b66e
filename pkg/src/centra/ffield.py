"""Exact arithmetic in small finite fields GF(p^k).

An element of GF(p^k) is a polynomial c0 + c1*x + ... + c_{k-1}*x^{k-1}
over GF(p), reduced modulo a fixed monic irreducible modulus of degree k.
Elements are encoded as the integer c0 + c1*p + ... + c_{k-1}*p^{k-1}, so
encodings run over 0 .. p^k-1 with 0 and 1 the additive and multiplicative
identities.

Each FieldSpec precomputes discrete-log (Zech-style) exp/log tables for a
primitive element, giving constant-time mul, inv, pow and multiplicative
order.  Field sizes are capped at 2^16; everything here is sized for the
small fields that projective group constructions need.
"""

from __future__ import annotations

from functools import lru_cache

MAX_FIELD_ORDER = 1 << 16

# Canonical monic irreducible moduli (coefficient lists, constant term
# first) for the (p, k) pairs the group catalogue uses.  Each entry is the
# lexicographically least choice under the integer encoding above, which is
# also what _search_modulus produces; the table just skips the search.
_CANONICAL_MODULI = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (3, 2): (1, 0, 1),        # x^2 + 1
    (3, 3): (1, 2, 0, 1),     # x^3 + 2x + 1
}


def is_prime(n):
    """Trial-division primality test, adequate for field-sized inputs."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    """Sorted distinct prime factors of n >= 1."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# -- polynomial helpers; polys are tuples of coefficients, constant first --


def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mulmod(a, b, mod, p):
    deg = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce modulo the monic modulus
    for i in range(len(res) - 1, deg - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(deg):
                res[i - deg + j] = (res[i - deg + j] - c * mod[j]) % p
    return _poly_trim(res[:deg] if len(res) > deg else res)


def _poly_powmod(base, e, mod, p):
    result = (1,)
    base = _poly_trim(base)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_divmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            f = c * inv_lb % p
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return a


def is_irreducible(modulus, p):
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    modulus = _poly_trim(modulus)
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p != 1:
        return False
    if k == 1:
        return True

    def frob_minus_x(e):
        # x^(p^e) - x reduced mod modulus
        v = list(_poly_powmod((0, 1), p ** e, modulus, p))
        v += [0] * max(0, 2 - len(v))
        v[1] = (v[1] - 1) % p
        return _poly_trim(v)

    if frob_minus_x(k):
        return False
    for ell in prime_factors(k):
        g = _poly_gcd(frob_minus_x(k // ell), modulus, p)
        if len(g) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p, k):
    """Least monic irreducible of degree k over GF(p), by integer encoding."""
    if (p, k) in _CANONICAL_MODULI:
        return _CANONICAL_MODULI[(p, k)]
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        cand = tuple(coeffs) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial found for GF({p}^{k})")


class FieldSpec:
    """GF(p^k) with precomputed exp/log tables; immutable once built."""

    def __init__(self, p, k=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        q = p ** k
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"field order {q} exceeds cap {MAX_FIELD_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, k)
        modulus = _poly_trim(modulus)
        if len(modulus) != k + 1 or modulus[-1] % p != 1:
            raise ValueError("modulus must be monic of degree k")
        modulus = tuple(c % p for c in modulus)
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.order = q
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.order
        # encode/decode between integer codes and coefficient tuples
        self._pk = tuple(p ** i for i in range(k))
        gen = self._find_primitive()
        exp = [1] * (q - 1)
        log = [0] * q  # log[0] unused
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_raw(cur, gen)
        if cur != 1:
            raise AssertionError("primitive element table did not close")
        self._exp = exp
        self._log = log
        self.generator_code = gen

    def _mul_raw(self, a, b):
        # polynomial multiplication on codes, used only to build tables
        pa = self.decode(a)
        pb = self.decode(b)
        return self.encode(_poly_mulmod(pa, pb, self.modulus, self.p))

    def _find_primitive(self):
        q = self.order
        if q == 2:
            return 1
        fs = prime_factors(q - 1)
        for cand in range(2, q):
            if all(self._pow_raw(cand, (q - 1) // f) != 1 for f in fs):
                return cand
        raise AssertionError("no primitive element found")

    def _pow_raw(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    # -- code-level arithmetic --

    def decode(self, code):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(code % p)
            code //= p
        return _poly_trim(out)

    def encode(self, coeffs):
        return sum(c % self.p * pk for c, pk in zip(coeffs, self._pk))

    def add(self, a, b):
        p = self.p
        if self.k == 1:
            return (a + b) % p
        s = 0
        for pk in self._pk:
            s += (a // pk % p + b // pk % p) % p * pk
        return s

    def neg(self, a):
        p = self.p
        if self.k == 1:
            return (-a) % p
        s = 0
        for pk in self._pk:
            s += (-(a // pk % p)) % p * pk
        return s

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inversion of zero field element")
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def mult_order(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        t = self._log[a]
        from math import gcd
        return n // gcd(n, t)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def element(self, value):
        if isinstance(value, FieldElement):
            if value.spec is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.encode(value))
        return FieldElement(self, value % self.p if self.k == 1 else value)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def x(self):
        """The image of the indeterminate x (only interesting for k > 1)."""
        return FieldElement(self, self._pk[1] if self.k > 1 else 1)

    def all_codes(self):
        return range(self.order)

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


class FieldElement:
    """A field element: a FieldSpec reference plus an integer code."""

    __slots__ = ("spec", "code")

    def __init__(self, spec, code):
        self.spec = spec
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError("mismatched field specs")
            return other
        if isinstance(other, int):
            return FieldElement(self.spec, other % self.spec.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.add(self.code, o.code))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.code))

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.sub(self.code, o.code))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.mul(self.code, o.code))

    __rmul__ = __mul__

    def __pow__(self, e):
        return FieldElement(self.spec, self.spec.pow(self.code, e))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.code))

    def mult_order(self):
        return self.spec.mult_order(self.code)

    def frobenius(self):
        return FieldElement(self.spec, self.spec.frobenius(self.code))

    def coeffs(self):
        c = self.spec.decode(self.code)
        return c + (0,) * (self.spec.k - len(c))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = FieldElement(self.spec, other % self.spec.p)
        return (isinstance(other, FieldElement)
                and self.spec == other.spec and self.code == other.code)

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self.code))

    def __repr__(self):
        if self.spec.k == 1:
            return str(self.code)
        terms = []
        for i, c in enumerate(self.coeffs()):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == 1 else f"{c}{xs}")
        return "+".join(terms) if terms else "0"


def format_spec_line(spec):
    """Serialize a FieldSpec as the `p,k,c0,c1,...` data-file line."""
    return ",".join(str(v) for v in (spec.p, spec.k) + spec.modulus)


def parse_spec_line(line):
    """Parse a `p,k,c0,c1,...` line into a FieldSpec."""
    parts = [int(v) for v in line.strip().split(",")]
    if len(parts) < 2:
        raise ValueError(f"malformed field spec line: {line!r}")
    p, k = parts[0], parts[1]
    modulus = tuple(parts[2:]) if len(parts) > 2 else None
    return FieldSpec(p, k, modulus)
