"""Roots of affine equations X^(2^i) + alpha*X + beta over F_{2^t}.

The left side is an F_2-linear map plus a constant, so the root set is
either empty or a coset of the kernel of X^(2^i) + alpha*X; the root
count is always 0, 1, or 2^gcd(i, t).  Solving is plain brute force over
the field, which is exact and fast enough for the degrees this module
accepts (t <= 16).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import FieldSpec

SOLVE_DEGREE_CAP = 16


@dataclass(frozen=True)
class AffineLinearizedEq:
    """X^(2^i) + alpha*X + beta = 0 over the field spec (alpha, beta encodings)."""

    spec: FieldSpec
    i: int
    alpha: int
    beta: int

    def __post_init__(self):
        if self.spec.m > SOLVE_DEGREE_CAP:
            raise ValueError("brute-force solving is capped at degree %d, got %d"
                             % (SOLVE_DEGREE_CAP, self.spec.m))
        if self.i < 1:
            raise ValueError("Frobenius power i must be positive, got %r" % self.i)
        if not 0 <= self.alpha < self.spec.order:
            raise ValueError("alpha %r out of range" % self.alpha)
        if not 0 <= self.beta < self.spec.order:
            raise ValueError("beta %r out of range" % self.beta)
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero (else the equation is a "
                             "plain Frobenius image lookup)")

    def root_count_options(self) -> tuple[int, int, int]:
        """The only possible root counts: 0, 1, or 2^gcd(i, t)."""
        return (0, 1, 1 << math.gcd(self.i, self.spec.m))


def solve_affine(eq: AffineLinearizedEq) -> list[int]:
    """All roots in ascending encoding order, by exhaustive evaluation."""
    spec = eq.spec
    return [x for x in range(spec.order)
            if spec.frobenius(x, eq.i) ^ spec.mul(eq.alpha, x) ^ eq.beta == 0]


def count_roots(eq: AffineLinearizedEq) -> int:
    """Number of roots; same value as len(solve_affine(eq)) without the list.

    Kept as a tight loop over the log tables because verification suites
    call this once per (alpha, beta) pair over whole fields.
    """
    spec = eq.spec
    exp, log, sqr = spec._exp, spec._log, spec._sqr
    s = eq.i % spec.m
    la = log[eq.alpha]
    beta = eq.beta
    count = 0
    for x in range(spec.order):
        y = x
        for _ in range(s):
            y = sqr[y]
        if x:
            y ^= exp[la + log[x]]
        if y == beta:
            count += 1
    return count
