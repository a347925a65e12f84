"""c-difference distribution tables and c-uniformity sweeps.

For a table f over F_{2^m}, a multiplier c, and a direction a, the entry
at (a, b) counts the solutions x of

    f(x + a) + c * f(x) = b.

The uniformity is the maximum entry over the whole (a, b) grid, except
that the a = 0 row is left out exactly when c = 1 (there the row is the
degenerate all-of-the-field spike of the classical DDT).  A function is
rated PCN when the maximum is 1 and APCN when it is 2.

c_uniformity does one histogram pass per direction: bucket-counting the
2^m derivative values gives a whole DDT row at once, so a full scan is
O(2^(2m)) instead of the O(2^(3m)) of entry-by-entry counting.
cddt_entry stays the literal definitional count on purpose; tests hold
the two routes against each other.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .families import FunctionTable
from .field import FieldSpec, as_encoding

PCN = "PCN"
APCN = "APCN"
OTHER = "OTHER"

IN_F2 = "IN_F2"
IN_FQ_MINUS_F2 = "IN_FQ_MINUS_F2"
IN_FQ2_MINUS_FQ = "IN_FQ2_MINUS_FQ"
BEYOND_FQ2 = "BEYOND_FQ2"

WITNESS_CAP = 8


@dataclass(frozen=True)
class CDiffQuery:
    """A (table, c) pair, optionally pinned to one direction a or output b."""

    table: FunctionTable
    c: int
    a: int | None = None
    b: int | None = None

    def __post_init__(self):
        order = self.table.spec.order
        for name in ("c", "a", "b"):
            v = getattr(self, name)
            if v is not None and not 0 <= v < order:
                raise ValueError("%s=%r out of range for F_{2^%d}"
                                 % (name, v, self.table.spec.m))


@dataclass(frozen=True)
class CUniformityReport:
    """Result of one full (a, b) scan at a fixed c."""

    c: int
    uniformity: int
    classification: str
    spectrum: dict[int, int]        # entry value -> number of (a, b) pairs, zeros dropped
    witnesses: tuple[tuple[int, int], ...]
    classical: bool                 # c == 1, the classical DDT case

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "classical": self.classical,
            "uniformity": self.uniformity,
            "classification": self.classification,
            "spectrum": {str(v): self.spectrum[v] for v in sorted(self.spectrum)},
            "witnesses": [list(w) for w in self.witnesses],
        }


def classify(uniformity: int) -> str:
    if uniformity == 1:
        return PCN
    if uniformity == 2:
        return APCN
    return OTHER


def c_derivative(table: FunctionTable, c, a, x) -> int:
    """f(x + a) + c*f(x) at one point."""
    spec = table.spec
    cv = as_encoding(spec, c)
    av = as_encoding(spec, a)
    xv = as_encoding(spec, x)
    return table.images[xv ^ av] ^ spec.mul(cv, table.images[xv])


def cddt_entry(table: FunctionTable, c, a, b) -> int:
    """Literal definitional count of x with f(x+a) + c*f(x) = b."""
    spec = table.spec
    cv = as_encoding(spec, c)
    av = as_encoding(spec, a)
    bv = as_encoding(spec, b)
    images = table.images
    mul = spec.mul
    count = 0
    for x in range(spec.order):
        if images[x ^ av] ^ mul(cv, images[x]) == bv:
            count += 1
    return count


def _row_counts(table: FunctionTable, cv: int, av: int) -> list[int]:
    # one histogram pass = one DDT row
    spec = table.spec
    images = table.images
    mul = spec.mul
    row = [0] * spec.order
    for x in range(spec.order):
        row[images[x ^ av] ^ mul(cv, images[x])] += 1
    return row


def c_uniformity(table: FunctionTable, c) -> CUniformityReport:
    """Scan the whole (a, b) grid at one c by per-direction histogramming.

    The a = 0 row is excluded from the maximum and the spectrum exactly
    when c = 1; for every other c, including c = 0, it participates.
    """
    spec = table.spec
    cv = as_encoding(spec, c)
    classical = cv == 1
    order = spec.order
    a_values = range(1, order) if classical else range(order)

    best = 0
    witnesses: list[tuple[int, int]] = []
    if spec.has_tables:
        images = np.asarray(table.images, dtype=np.int64)
        cf = spec.mul_vec(cv, images)
        idx = np.arange(order, dtype=np.int64)
        spectrum_acc = np.zeros(order + 1, dtype=np.int64)
        for a in a_values:
            row = np.bincount(images[idx ^ a] ^ cf, minlength=order)
            spectrum_acc += np.bincount(row, minlength=order + 1)
            rmax = int(row.max())
            if rmax > best:
                best = rmax
                hits = np.flatnonzero(row == rmax)[:WITNESS_CAP]
                witnesses = [(a, int(b)) for b in hits]
            elif rmax == best and len(witnesses) < WITNESS_CAP:
                hits = np.flatnonzero(row == rmax)[:WITNESS_CAP - len(witnesses)]
                witnesses.extend((a, int(b)) for b in hits)
        spectrum = {v: int(n) for v, n in enumerate(spectrum_acc) if v and n}
    else:
        from collections import Counter
        tally: Counter[int] = Counter()
        for a in a_values:
            row = _row_counts(table, cv, a)
            tally.update(row)
            rmax = max(row)
            if rmax > best:
                best = rmax
                witnesses = [(a, b) for b, n in enumerate(row)
                             if n == rmax][:WITNESS_CAP]
            elif rmax == best and len(witnesses) < WITNESS_CAP:
                witnesses.extend([(a, b) for b, n in enumerate(row)
                                  if n == rmax][:WITNESS_CAP - len(witnesses)])
        spectrum = {v: n for v, n in sorted(tally.items()) if v and n}

    return CUniformityReport(
        c=cv,
        uniformity=best,
        classification=classify(best),
        spectrum=spectrum,
        witnesses=tuple(witnesses),
        classical=classical,
    )


def worker_count() -> int:
    """Parallel width for scan_c: CDU_THREADS, 0 or unset meaning auto."""
    raw = os.environ.get("CDU_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


def resolve_c_range(spec: FieldSpec, c_range) -> list[int]:
    """Normalize "all", "subfield:<s>", or an explicit collection to encodings."""
    if isinstance(c_range, str):
        text = c_range.strip().lower()
        if text == "all":
            return list(range(spec.order))
        if text.startswith("subfield:"):
            s = int(text.split(":", 1)[1])
            return spec.subfield_values(s)
        raise ValueError("bad c range %r (want \"all\", \"subfield:<s>\" or "
                         "a collection of elements)" % c_range)
    return sorted({as_encoding(spec, c) for c in c_range})


def scan_c(table: FunctionTable, c_range,
           exclusions: Iterable = ()) -> list[CUniformityReport]:
    """One CUniformityReport per c in the range minus exclusions, ascending.

    Distinct c values may be scanned on worker threads (CDU_THREADS); the
    output order is by c either way.
    """
    spec = table.spec
    excluded = {as_encoding(spec, e) for e in exclusions}
    cs = [c for c in resolve_c_range(spec, c_range) if c not in excluded]
    workers = min(worker_count(), len(cs)) or 1
    if workers == 1:
        return [c_uniformity(table, c) for c in cs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: c_uniformity(table, c), cs))


def classify_theorem_case(spec: FieldSpec, t: int, c) -> str:
    """Place c in the F_2 / F_q / F_{q^2} / beyond ladder, q = 2^t."""
    if t < 1 or spec.m % t != 0 or spec.m % (2 * t) != 0:
        raise ValueError("need t | m and 2t | m, got t=%r m=%d" % (t, spec.m))
    cv = as_encoding(spec, c)
    if cv in (0, 1):
        return IN_F2
    if spec.is_in_subfield(cv, t):
        return IN_FQ_MINUS_F2
    if spec.is_in_subfield(cv, 2 * t):
        return IN_FQ2_MINUS_FQ
    return BEYOND_FQ2


def iter_cddt(table: FunctionTable, c, a: int | None = None,
              b: int | None = None):
    """Yield (a, b, count) rows in lexicographic order, via row histograms."""
    spec = table.spec
    cv = as_encoding(spec, c)
    a_list = range(spec.order) if a is None else [as_encoding(spec, a)]
    for av in a_list:
        row = _row_counts(table, cv, av)
        if b is None:
            for bv in range(spec.order):
                yield av, bv, row[bv]
        else:
            bv = as_encoding(spec, b)
            yield av, bv, row[bv]


def write_cddt_csv(table: FunctionTable, c, out, *,
                   a: int | None = None, b: int | None = None,
                   include_zeros: bool = True) -> None:
    """Dump DDT rows as CSV with a,b,count header; zero rows drop on request."""
    spec = table.spec
    cv = as_encoding(spec, c)
    lines = ["# m=%d modulus=%#x c=%d" % (spec.m, spec.modulus, cv)]
    if cv == 1:
        lines.append("# c=1 is the classical DDT: the a=0 row is shown "
                     "but never counted toward uniformity")
    lines.append("a,b,count")
    for av, bv, count in iter_cddt(table, cv, a, b):
        if count or include_zeros:
            lines.append("%d,%d,%d" % (av, bv, count))
    text = "\n".join(lines) + "\n"
    if hasattr(out, "write"):
        out.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
