"""Fixed verification grids for the claimed uniformity properties.

Each suite walks a small parameter grid, rebuilds the family tables, and
checks the claimed bound against measured c-uniformities:

  t1: family f is PCN for every c in F_{q^2} outside F_2, and stays
      within uniformity 2 beyond F_{q^2} when gcd(i, t) = 1
  t2: family g is PCN for every c outside F_2 in the whole field
  t3: family h, split by the parity of n; odd n additionally
      cross-checks the gamma trace condition against actual
      permutation status and reports which exponent reading survives
  lemma: root counts of X^(2^i) + alpha*X + beta over F_{2^t} only ever
      hit 0, 1, or 2^gcd(i, t)

Grids are filtered by a max_m cap on the field degree so the runtime
stays proportionate; the defaults match the documented acceptance runs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .cdiff import c_uniformity
from .families import (FamilyParams, build_family,
                       check_h_permutation_condition, is_permutation)
from .field import make_field
from .linsolve import AffineLinearizedEq, count_roots

T1_GRID = ((2, 1, 1), (2, 1, 2), (3, 1, 1))   # (t, i, n)
T2_GRID = ((1, 2), (2, 1), (2, 2))            # (t, n)
T3_GRID = ((2, 1, 2), (2, 1, 1))              # (t, i, n)
LEMMA_T_MAX = 6
LEMMA_I_MAX = 6

SUITES = ("t1", "t2", "t3", "lemma")

DEFAULT_MAX_M = 12


@dataclass
class VerificationSuiteResult:
    suite: str
    parameter_grid: list[dict] = field(default_factory=list)
    verdicts: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v["pass"] for v in self.verdicts)

    def add(self, instance: dict, verdict: dict):
        self.parameter_grid.append(instance)
        self.verdicts.append(verdict)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "grid": self.parameter_grid,
            "verdicts": self.verdicts,
            "notes": self.notes,
        }


def _max_uniformity(table, cs) -> int:
    return max(c_uniformity(table, c).uniformity for c in cs)


def _pcn_case(result, table, instance, cs):
    observed = _max_uniformity(table, cs)
    result.add(dict(instance, case="pcn", c_count=len(cs)),
               {"expected": "== 1", "observed_uniformity": observed,
                "pass": observed == 1})


def _bound_case(result, table, instance, cs):
    observed = _max_uniformity(table, cs)
    result.add(dict(instance, case="bounded_beyond", c_count=len(cs)),
               {"expected": "<= 2", "observed_uniformity": observed,
                "pass": observed <= 2})


def run_t1(max_m: int = DEFAULT_MAX_M) -> VerificationSuiteResult:
    result = VerificationSuiteResult("t1")
    start = time.perf_counter()
    for (t, i, n) in T1_GRID:
        m = 2 * n * t
        if m > max_m:
            continue
        spec = make_field(m)
        q2 = spec.subfield_values(2 * t)
        q2_set = set(q2)
        inside = [c for c in q2 if c > 1]
        beyond = [c for c in range(spec.order) if c not in q2_set]
        for gamma in q2[1:]:
            table = build_family(spec, FamilyParams("f", t, n, i, gamma=gamma))
            instance = {"family": "f", "t": t, "i": i, "n": n, "gamma": gamma}
            _pcn_case(result, table, instance, inside)
            if beyond and math.gcd(i, t) == 1:
                _bound_case(result, table, instance, beyond)
    result.elapsed = time.perf_counter() - start
    return result


def run_t2(max_m: int = DEFAULT_MAX_M) -> VerificationSuiteResult:
    result = VerificationSuiteResult("t2")
    start = time.perf_counter()
    for (t, n) in T2_GRID:
        m = 2 * n * t
        if m > max_m:
            continue
        spec = make_field(m)
        cs = [c for c in range(spec.order) if c > 1]
        for gamma in spec.subfield_values(t)[1:]:
            table = build_family(spec, FamilyParams("g", t, n, gamma=gamma))
            _pcn_case(result, table,
                      {"family": "g", "t": t, "n": n, "gamma": gamma}, cs)
    result.elapsed = time.perf_counter() - start
    return result


def run_t3(max_m: int = DEFAULT_MAX_M) -> VerificationSuiteResult:
    result = VerificationSuiteResult("t3")
    start = time.perf_counter()
    for (t, i, n) in T3_GRID:
        m = 2 * n * t
        if m > max_m:
            continue
        spec = make_field(m)
        q2 = spec.subfield_values(2 * t)
        q2_set = set(q2)
        inside = [c for c in q2 if c > 1]
        beyond = [c for c in range(spec.order) if c not in q2_set]
        odd = n % 2 == 1
        exponent_tally = {"agree": 0, "false_pos": [], "false_neg": [],
                          "alt_false_pos": [], "total": 0} if odd else None
        for gamma in q2[1:]:
            instance = {"family": "h", "t": t, "i": i, "n": n, "gamma": gamma}
            if odd:
                cond = check_h_permutation_condition(spec, t, n, i, gamma)
                table = build_family(spec, FamilyParams("h", t, n, i, gamma=gamma),
                                     override_h_condition=True)
                perm = is_permutation(table)
                result.add(dict(instance, case="condition_vs_permutation"),
                           {"expected": "condition implies permutation",
                            "condition": cond, "permutation": perm,
                            "pass": (not cond) or perm})
                alt = check_h_permutation_condition(
                    spec, t, n, i, gamma, exponent=(1 << i) + 1)
                exponent_tally["total"] += 1
                if cond == perm:
                    exponent_tally["agree"] += 1
                if cond and not perm:
                    exponent_tally["false_pos"].append(gamma)
                if perm and not cond:
                    exponent_tally["false_neg"].append(gamma)
                if alt and not perm:
                    exponent_tally["alt_false_pos"].append(gamma)
                if not cond:
                    continue
            else:
                table = build_family(spec, FamilyParams("h", t, n, i, gamma=gamma))
            _pcn_case(result, table, instance, inside)
            if beyond and math.gcd(i, t) == 1:
                _bound_case(result, table, instance, beyond)
        if odd and exponent_tally["total"]:
            tally = exponent_tally
            result.notes.append(
                "odd-n gamma condition at t=%d i=%d n=%d: default exponent "
                "2^(i+1) agrees with the exhaustive permutation check on "
                "%d/%d gammas (false positives %s, false negatives %s); "
                "variant exponent 2^i+1 wrongly admits %d non-permutation "
                "gammas %s; the default reading stands"
                % (t, i, n, tally["agree"], tally["total"],
                   tally["false_pos"] or "none", tally["false_neg"] or "none",
                   len(tally["alt_false_pos"]), tally["alt_false_pos"] or ""))
    result.elapsed = time.perf_counter() - start
    return result


def run_lemma(max_m: int = DEFAULT_MAX_M) -> VerificationSuiteResult:
    result = VerificationSuiteResult("lemma")
    start = time.perf_counter()
    for t in range(1, min(LEMMA_T_MAX, max_m) + 1):
        spec = make_field(t)
        for i in range(1, LEMMA_I_MAX + 1):
            allowed = {0, 1, 1 << math.gcd(i, t)}
            seen = set()
            ok = True
            for alpha in range(1, spec.order):
                for beta in range(spec.order):
                    count = count_roots(AffineLinearizedEq(spec, i, alpha, beta))
                    seen.add(count)
                    if count not in allowed:
                        ok = False
            result.add({"lemma": "affine_root_trichotomy", "t": t, "i": i,
                        "pairs": (spec.order - 1) * spec.order},
                       {"expected": sorted(allowed),
                        "observed_counts": sorted(seen), "pass": ok})
    result.elapsed = time.perf_counter() - start
    return result


_RUNNERS = {"t1": run_t1, "t2": run_t2, "t3": run_t3, "lemma": run_lemma}


def run_suite(name: str, max_m: int = DEFAULT_MAX_M) -> VerificationSuiteResult:
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError("unknown suite %r (want one of %s)"
                         % (name, "/".join(SUITES))) from None
    return runner(max_m)
