"""Arithmetic in binary fields F_{2^m} in polynomial-basis encoding.

An element of F_{2^m} is stored as a plain integer in [0, 2^m): bit j of
the encoding is the coefficient of X^j, so 0 and 1 are the additive and
multiplicative identities and addition is xor.  A FieldSpec fixes the
extension degree m and a degree-m irreducible modulus; every product is
reduced modulo that polynomial.  Subfields F_{2^s} for s | m live inside
the same flat encoding as the fixed points of the s-fold Frobenius map,
so no tower representation is ever built.

Degrees up to 16 get discrete log / antilog tables over the canonical
generator (the smallest encoding of full multiplicative order), which is
what keeps the whole-field sweeps elsewhere in the package cheap.
Degrees 17..24 are accepted but stay on carry-less multiplication, fine
for single operations and slow for bulk work.
"""

from __future__ import annotations

import numpy as np

MAX_DEGREE = 24
TABLE_DEGREE_CAP = 16


def poly_mod(a: int, b: int) -> int:
    """Remainder of carry-less division of a by b over F_2 (b != 0)."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def smallest_poly_factor(p: int) -> int:
    """Smallest-encoding nontrivial factor of p over F_2, or 0 if p is irreducible.

    Trial division by every polynomial of degree 1..deg(p)//2, ascending, so
    the returned factor is the lexicographically first one.
    """
    deg = p.bit_length() - 1
    for d in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(p, d) == 0:
            return d
    return 0


def default_modulus(m: int) -> int:
    """Lexicographically smallest irreducible polynomial of degree m."""
    for enc in range(1 << m, 1 << (m + 1)):
        if smallest_poly_factor(enc) == 0:
            return enc
    raise AssertionError("no irreducible polynomial of degree %d" % m)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldElement:
    """One element of a FieldSpec, wrapping its integer encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        if not 0 <= value < field.order:
            raise ValueError(
                "encoding %r out of range for F_{2^%d}" % (value, field.m))
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("elements belong to different fields: %r vs %r"
                             % (self.field, other.field))
        return other.value

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.value ^ v)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.mul(self.value, v))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, s: int) -> FieldElement:
        return FieldElement(self.field, self.field.frobenius(self.value, s))

    def rel_trace(self, s: int, from_degree: int | None = None) -> FieldElement:
        return FieldElement(
            self.field, self.field.rel_trace(self.value, s, from_degree))

    def in_subfield(self, s: int) -> bool:
        return self.field.is_in_subfield(self.value, s)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field.m, self.field.modulus, self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "FieldElement(%#x, m=%d)" % (self.value, self.field.m)


def as_encoding(spec: FieldSpec, x) -> int:
    """Accept an int encoding or a FieldElement of spec; return the encoding."""
    if isinstance(x, FieldElement):
        if x.field != spec:
            raise ValueError("element belongs to %r, not %r" % (x.field, spec))
        return x.value
    v = int(x)
    if not 0 <= v < spec.order:
        raise ValueError("encoding %r out of range for F_{2^%d}" % (x, spec.m))
    return v


class FieldSpec:
    """F_{2^m} with a fixed irreducible modulus.

    All element arguments and results of the arithmetic methods are plain
    integer encodings; use element() / parse_element() for the wrapped
    FieldElement view.  Instances are immutable apart from internal
    memoised lookup tables.
    """

    def __init__(self, m: int, modulus: int):
        if not 1 <= m <= MAX_DEGREE:
            raise ValueError("degree m must be in 1..%d, got %r" % (MAX_DEGREE, m))
        if modulus.bit_length() - 1 != m:
            raise ValueError("modulus %#x does not have degree %d" % (modulus, m))
        factor = smallest_poly_factor(modulus)
        if factor:
            raise ValueError("modulus %#x is reducible: divisible by %#x"
                             % (modulus, factor))
        self.m = m
        self.modulus = modulus
        self.order = 1 << m

        g = self._find_generator()
        if m <= TABLE_DEGREE_CAP:
            n1 = self.order - 1
            exp = [1] * (2 * n1 if n1 > 1 else 2)
            log = [0] * self.order
            v = 1
            for j in range(n1):
                exp[j] = v
                log[v] = j
                v = self._mul_raw(v, g)
            for j in range(n1, len(exp)):
                exp[j] = exp[j - n1]
            self._exp = exp
            self._log = log
            self._sqr = [self.mul(x, x) for x in range(self.order)]
            self._exp_np = np.asarray(exp[:n1] if n1 > 1 else [1], dtype=np.int64)
            self._log_np = np.asarray(log, dtype=np.int64)
            self._sqr_np = np.asarray(self._sqr, dtype=np.int64)
        else:
            self._exp = None
            self._log = None
            self._sqr = None
        self._frob_maps: dict[int, np.ndarray] = {}
        self._trace_maps: dict[int, np.ndarray] = {}
        self.generator = FieldElement(self, g)

    # -- construction helpers -------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        # carry-less multiply with reduction folded into the shift loop
        top = 1 << self.m
        mod = self.modulus
        p = 0
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return p

    def _pow_raw(self, x: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._mul_raw(r, x)
            x = self._mul_raw(x, x)
            k >>= 1
        return r

    def _find_generator(self) -> int:
        n1 = self.order - 1
        checks = [n1 // p for p in _prime_factors(n1)]
        for cand in range(1, self.order):
            if all(self._pow_raw(cand, k) != 1 for k in checks):
                return cand
        raise AssertionError("no generator found")  # unreachable: the group is cyclic

    # -- scalar arithmetic on encodings ---------------------------------------

    @property
    def has_tables(self) -> bool:
        return self._log is not None

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[x] + self._log[y]]
        return self._mul_raw(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._log is not None:
            return self._exp[self.order - 1 - self._log[x]]
        return self._pow_raw(x, self.order - 2)

    def pow(self, x: int, k: int) -> int:
        """x**k by square-and-multiply, with 0**0 = 1."""
        if k < 0:
            raise ValueError("exponent must be nonnegative, got %r" % k)
        if x == 0:
            return 1 if k == 0 else 0
        k %= self.order - 1 or 1  # x != 0 has order dividing 2^m - 1
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            k >>= 1
        return r

    def frobenius(self, x: int, s: int) -> int:
        """x^(2^s): s repeated squarings (s may exceed m, the map has order m)."""
        if s < 0:
            raise ValueError("Frobenius power must be nonnegative, got %r" % s)
        for _ in range(s % self.m):
            x = self.mul(x, x)
        return x

    def rel_trace(self, x: int, s: int, from_degree: int | None = None) -> int:
        """Trace of x onto the subfield F_{2^s}.

        By default sums the m/s Frobenius iterates x^(2^(s*j)) over the whole
        field.  Pass from_degree=d (s | d | m, x in F_{2^d}) to take the trace
        of the intermediate field F_{2^d} onto F_{2^s} instead; that is the
        form tower-composition identities actually hold in.
        """
        d = self.m if from_degree is None else from_degree
        if s < 1 or d % s != 0 or self.m % d != 0:
            raise ValueError("need s | d | m, got s=%r d=%r m=%d" % (s, d, self.m))
        if from_degree is not None and not self.is_in_subfield(x, d):
            raise ValueError("%#x is not in the subfield F_{2^%d}" % (x, d))
        acc = x
        cur = x
        for _ in range(d // s - 1):
            cur = self.frobenius(cur, s)
            acc ^= cur
        return acc

    def is_in_subfield(self, x: int, s: int) -> bool:
        """True iff x lies in F_{2^s} (requires s | m)."""
        if s < 1 or self.m % s != 0:
            raise ValueError("s=%r does not divide m=%d" % (s, self.m))
        return self.frobenius(x, s) == x

    def subfield_values(self, s: int) -> list[int]:
        """Ascending encodings of the subfield F_{2^s} (requires s | m)."""
        if s < 1 or self.m % s != 0:
            raise ValueError("s=%r does not divide m=%d" % (s, self.m))
        if s == self.m:
            return list(range(self.order))
        if self._log is not None:
            # nonzero subfield elements are the powers g^(j*step)
            step = (self.order - 1) // ((1 << s) - 1)
            vals = {0}
            vals.update(self._exp[j * step] for j in range((1 << s) - 1))
            return sorted(vals)
        return [x for x in range(self.order) if self.frobenius(x, s) == x]

    def subfield_elements(self, s: int) -> list[FieldElement]:
        return [FieldElement(self, v) for v in self.subfield_values(s)]

    # -- element wrapping and text form ---------------------------------------

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def parse_element(self, text: str) -> FieldElement:
        """Parse "13", "0xd" or "g^7" (g = canonical generator, "g" = g^1)."""
        s = text.strip().lower()
        try:
            if s == "g":
                return self.generator
            if s.startswith("g^"):
                k = int(s[2:])
                if k < 0:
                    raise ValueError
                return FieldElement(self, self.pow(self.generator.value, k))
            if s.startswith("0x"):
                return FieldElement(self, int(s, 16))
            return FieldElement(self, int(s, 10))
        except ValueError:
            raise ValueError("cannot parse %r as an element of F_{2^%d} "
                             "(want decimal, 0x hex, or g^k)" % (text, self.m)) from None

    # -- bulk tables for whole-field sweeps ------------------------------------

    def _require_tables(self):
        if self._log is None:
            raise RuntimeError("bulk table ops need log tables (m <= %d), "
                               "this field has m=%d" % (TABLE_DEGREE_CAP, self.m))

    def mul_vec(self, c: int, arr: np.ndarray) -> np.ndarray:
        """Elementwise product of the scalar c with an array of encodings."""
        self._require_tables()
        if c == 0:
            return np.zeros_like(arr)
        n1 = self.order - 1
        out = self._exp_np[(self._log_np[arr] + self._log[c]) % n1]
        return np.where(arr == 0, 0, out)

    def pow_map(self, k: int) -> np.ndarray:
        """Array P with P[x] = x**k for every encoding x (0**0 = 1)."""
        self._require_tables()
        if k < 0:
            raise ValueError("exponent must be nonnegative, got %r" % k)
        if k == 0:
            return np.ones(self.order, dtype=np.int64)
        n1 = self.order - 1
        out = self._exp_np[(self._log_np * (k % n1)) % n1]
        out[0] = 0
        return out

    def frob_map(self, s: int) -> np.ndarray:
        """Array F with F[x] = x^(2^s)."""
        self._require_tables()
        s %= self.m
        cached = self._frob_maps.get(s)
        if cached is None:
            cached = np.arange(self.order, dtype=np.int64)
            for _ in range(s):
                cached = self._sqr_np[cached]
            cached.setflags(write=False)
            self._frob_maps[s] = cached
        return cached

    def trace_map(self, s: int) -> np.ndarray:
        """Array T with T[x] = rel_trace(x, s) over the whole field."""
        self._require_tables()
        if s < 1 or self.m % s != 0:
            raise ValueError("s=%r does not divide m=%d" % (s, self.m))
        cached = self._trace_maps.get(s)
        if cached is None:
            frob = self.frob_map(s)
            cur = np.arange(self.order, dtype=np.int64)
            acc = cur.copy()
            for _ in range(self.m // s - 1):
                cur = frob[cur]
                acc ^= cur
            cached = acc
            cached.setflags(write=False)
            self._trace_maps[s] = cached
        return cached

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.m == other.m and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return "FieldSpec(m=%d, modulus=%#x)" % (self.m, self.modulus)


def make_field(m: int, modulus: int | None = None) -> FieldSpec:
    """Construct F_{2^m}, picking the smallest irreducible modulus by default."""
    if not 1 <= m <= MAX_DEGREE:
        raise ValueError("degree m must be in 1..%d, got %r" % (MAX_DEGREE, m))
    if modulus is None:
        modulus = default_modulus(m)
    return FieldSpec(m, modulus)
