"""Trace-form function families gamma*X + Tr(X^k) as evaluation tables.

All families live over F_{2^m} with m = 2*n*t, written relative to the
base subfield F_q, q = 2^t, and the trace Tr taken from the whole field
onto F_q.  The built-ins differ only in the power k and in where the
coefficient gamma is required to live:

  family f:   k = 2^i * (q + 1),    gamma in F_{q^2}, nonzero
  family g:   k = q^2 + 1,          gamma in F_q, nonzero
  family h:   k = 2^i * (q^2 + 1),  gamma in F_{q^2}, nonzero

family "generic" takes an explicit k >= 1 and any nonzero gamma, for
exploration outside the three constructions.

Family h with odd n is only a permutation when gamma satisfies a trace
condition (check_h_permutation_condition); building such a table without
the condition is refused unless explicitly overridden.  Exponents are
reduced mod 2^m - 1 on nonzero inputs while 0 maps through the unreduced
power, so 0 always maps to 0 for k >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import FieldSpec, as_encoding, make_field

FAMILIES = ("f", "g", "h", "generic")


@dataclass(frozen=True)
class FamilyParams:
    family: str
    t: int
    n: int
    i: int = 1          # Frobenius power, unused by g and generic
    gamma: int = 1      # coefficient encoding, resolved against the field
    k: int | None = None  # explicit power, generic only

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r (want one of %s)"
                             % (self.family, "/".join(FAMILIES)))
        if self.t < 1 or self.n < 1:
            raise ValueError("t and n must be positive, got t=%r n=%r"
                             % (self.t, self.n))
        if self.family in ("f", "h") and self.i < 1:
            raise ValueError("family %s needs a positive i, got %r"
                             % (self.family, self.i))
        if self.family == "generic":
            if self.k is None or self.k < 1:
                raise ValueError("family generic needs an explicit power k >= 1")
        elif self.k is not None:
            raise ValueError("family %s derives its power, do not pass k"
                             % self.family)

    @property
    def degree(self) -> int:
        return 2 * self.n * self.t

    def exponent(self) -> int:
        """The power k applied to X inside the trace."""
        q = 1 << self.t
        if self.family == "f":
            return (1 << self.i) * (q + 1)
        if self.family == "g":
            return q * q + 1
        if self.family == "h":
            return (1 << self.i) * (q * q + 1)
        return self.k

    def gamma_subfield_degree(self) -> int | None:
        """Degree of the subfield gamma must lie in, None for no constraint."""
        if self.family in ("f", "h"):
            return 2 * self.t
        if self.family == "g":
            return self.t
        return None

    def to_text(self) -> str:
        parts = ["family=%s" % self.family, "t=%d" % self.t, "n=%d" % self.n]
        if self.family in ("f", "h"):
            parts.append("i=%d" % self.i)
        if self.family == "generic":
            parts.append("k=%d" % self.k)
        parts.append("gamma=%d" % self.gamma)
        return " ".join(parts)


def params_from_text(text: str) -> tuple[FieldSpec, FamilyParams]:
    """Parse "family=f t=2 n=1 i=1 gamma=g^3" into a field and params.

    The field is built first (m = 2*n*t, default modulus) so that gamma can
    be given in any element text form, g^k included.
    """
    raw: dict[str, str] = {}
    for token in text.split():
        if "=" not in token:
            raise ValueError("expected key=value tokens, got %r" % token)
        key, _, value = token.partition("=")
        if key in raw:
            raise ValueError("duplicate key %r" % key)
        raw[key] = value
    return params_from_strings(raw)


def params_from_strings(raw: dict[str, str]) -> tuple[FieldSpec, FamilyParams]:
    known = {"family", "t", "n", "i", "k", "gamma"}
    unknown = set(raw) - known
    if unknown:
        raise ValueError("unknown parameter keys: %s" % ", ".join(sorted(unknown)))
    for key in ("family", "t", "n"):
        if key not in raw:
            raise ValueError("missing required parameter %r" % key)
    family = raw["family"].lower()
    t = int(raw["t"])
    n = int(raw["n"])
    if t < 1 or n < 1:
        raise ValueError("t and n must be positive, got t=%r n=%r" % (t, n))
    spec = make_field(2 * n * t)
    gamma = spec.parse_element(raw.get("gamma", "1")).value
    params = FamilyParams(
        family=family,
        t=t,
        n=n,
        i=int(raw.get("i", "1")),
        gamma=gamma,
        k=int(raw["k"]) if "k" in raw else None,
    )
    return spec, params


@dataclass(frozen=True)
class FunctionTable:
    """Full evaluation table of one function, indexed by element encoding."""

    spec: FieldSpec
    images: tuple[int, ...]
    params: FamilyParams | None = None

    def __post_init__(self):
        if len(self.images) != self.spec.order:
            raise ValueError("table has %d images, field has %d elements"
                             % (len(self.images), self.spec.order))

    def image_of(self, x) -> int:
        return self.images[as_encoding(self.spec, x)]


def check_h_permutation_condition(spec: FieldSpec, t: int, n: int, i: int,
                                  gamma, exponent: int | None = None) -> bool:
    """Whether gamma admits a family-h permutation at these parameters.

    Even n always qualifies.  Odd n requires, with q = 2^t and e the
    exponent below,

        Tr_{q^2/q}((1/gamma)^e) ^ ((q-1) / gcd(2^(i+1)-1, q-1))  !=  1

    The exponent e defaults to 2^(i+1), the form this package validated
    empirically against exhaustive permutation checks; pass exponent to try
    a variant such as 2^i + 1.
    """
    if t < 1 or n < 1 or i < 1:
        raise ValueError("t, n, i must be positive")
    if spec.m != 2 * n * t:
        raise ValueError("field degree %d does not match 2*n*t = %d"
                         % (spec.m, 2 * n * t))
    g = as_encoding(spec, gamma)
    if g == 0 or not spec.is_in_subfield(g, 2 * t):
        raise ValueError("gamma must be a nonzero element of the F_{2^%d} "
                         "subfield, got %r" % (2 * t, gamma))
    if n % 2 == 0:
        return True
    e = (1 << (i + 1)) if exponent is None else exponent
    q1 = (1 << t) - 1
    outer = q1 // math.gcd((1 << (i + 1)) - 1, q1)
    tr = spec.rel_trace(spec.pow(spec.inv(g), e), t, from_degree=2 * t)
    return spec.pow(tr, outer) != 1


def build_family(spec: FieldSpec, params: FamilyParams, *,
                 override_h_condition: bool = False) -> FunctionTable:
    """Evaluate gamma*X + Tr_{2^m/2^t}(X^k) at every field element.

    Raises on dimension mismatch, on gamma outside its required subfield,
    and on family h with odd n when gamma fails the permutation condition
    (unless override_h_condition is set).
    """
    if spec.m != params.degree:
        raise ValueError("field degree %d does not match 2*n*t = %d"
                         % (spec.m, params.degree))
    gamma = params.gamma
    if gamma == 0 or not 0 < gamma < spec.order:
        raise ValueError("gamma must be a nonzero field element, got %r" % gamma)
    sub = params.gamma_subfield_degree()
    if sub is not None and not spec.is_in_subfield(gamma, sub):
        raise ValueError("family %s needs gamma in the F_{2^%d} subfield, "
                         "got %d" % (params.family, sub, gamma))
    if params.family == "h" and params.n % 2 == 1:
        if (not check_h_permutation_condition(spec, params.t, params.n,
                                              params.i, gamma)
                and not override_h_condition):
            raise ValueError(
                "family h with odd n=%d requires the gamma trace condition "
                "and gamma=%d fails it; the table would not be a permutation "
                "(pass override_h_condition=True to build it anyway)"
                % (params.n, gamma))

    k = params.exponent()
    if spec.has_tables:
        powers = spec.pow_map(k)
        traces = spec.trace_map(params.t)[powers]
        images = spec.mul_vec(gamma, np.arange(spec.order, dtype=np.int64))
        images ^= traces
        return FunctionTable(spec, tuple(int(v) for v in images), params)
    images = tuple(
        spec.mul(gamma, x) ^ spec.rel_trace(spec.pow(x, k), params.t)
        for x in range(spec.order))
    return FunctionTable(spec, images, params)


def is_permutation(table: FunctionTable) -> bool:
    """True iff the table hits every encoding exactly once (seen-bitmap scan)."""
    seen = bytearray(table.spec.order)
    for v in table.images:
        if seen[v]:
            return False
        seen[v] = 1
    return True
