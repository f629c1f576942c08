"""
Exhaustive theorem checks over S_n and IPF_n.

Each check takes the degree and returns a :class:`CheckResult`; failures
carry the first counterexample found. :func:`run_verification` runs the
whole battery and assembles a report ordered by check name.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Callable

from ._config import closure_cap
from .parking import (
    IntervalPair, count_ipfs, count_parking_functions, enumerate_ipfs,
    enumerate_parking_functions, ipf_completions, is_ipf, is_parking_function,
    outcome, run_algorithm_b,
)
from .permutation import (
    IntVector, bruhat_leq, componentwise_leq, conjugate, identity, length,
    longest, simple, symmetric_group,
)
from .patterns import AR_MODES, avoids_213, is_ar
from .posets import bruhat_relation, weak_relation
from .reachability import (
    bioutcome, count_criterion, fiber_count, is_reachable,
    pseudoreachability_relation, refine_to_cover_chain,
)
from .sorting import from_lambda, lambda_box, lambda_vector, sorting_relation

__all__ = ["CheckResult", "VerificationReport", "CHECKS", "run_verification", "TIER_LIMITS"]

PASS, FAIL, SKIP = "pass", "fail", "skip"

TIER_LIMITS = {"fast": 5, "slow": 6}

# IPF_n has n!(n+1)^(n-1) members; 155,520 at n = 5 and about 12 million at n = 6
IPF_ENUMERATION_LIMIT = 5
# brute-force Algorithm B over all of [n]^n x [n]^n
ALGORITHM_B_BRUTE_LIMIT = 4


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    counterexample: str = ""
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class VerificationReport:
    n: int
    tier: str
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"verify n={self.n} tier={self.tier}"]
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            line = f"{c.status.upper():4}  {c.name:<{width}}"
            if c.detail:
                line += f"  {c.detail}"
            if c.counterexample:
                line += f"  counterexample: {c.counterexample}"
            out.append(line)
        passed = sum(c.status == PASS for c in self.checks)
        failed = sum(c.status == FAIL for c in self.checks)
        skipped = sum(c.status == SKIP for c in self.checks)
        out.append(
            f"{passed} passed, {failed} failed, {skipped} skipped in {self.elapsed:.2f}s"
        )
        return out


def _result(name, counterexample, detail=""):
    if counterexample is None:
        return CheckResult(name, PASS, "", detail)
    return CheckResult(name, FAIL, counterexample, detail)


def _skip(name, why):
    return CheckResult(name, SKIP, "", why)


@lru_cache(maxsize=4)
def _ipfs_with_bioutcome(n: int) -> tuple:
    return tuple((pair, bioutcome(pair)) for pair in enumerate_ipfs(n))


@lru_cache(maxsize=4)
def _fiber_table(n: int) -> dict:
    perms = symmetric_group(n)
    return {(x, y): fiber_count(x, y) for x in perms for y in perms}


def check_ipf_count(n: int) -> CheckResult:
    name = "ipf_count"
    if n > IPF_ENUMERATION_LIMIT:
        return _skip(name, f"enumeration limited to n <= {IPF_ENUMERATION_LIMIT}")
    pf = sum(1 for _ in enumerate_parking_functions(n))
    if pf != count_parking_functions(n):
        return _result(name, f"|PF_{n}| = {pf}, expected {count_parking_functions(n)}")
    if n <= ALGORITHM_B_BRUTE_LIMIT:
        # independent count: simulate Algorithm B on every pair in [n]^n x [n]^n
        vectors = [IntVector(v) for v in _all_vectors(n)]
        ipf = 0
        for a in vectors:
            for b in vectors:
                pair = IntervalPair(a, b)
                simulated = run_algorithm_b(pair).success
                if simulated != is_ipf(pair):
                    return _result(name, f"({pair}): simulation {simulated}, criterion {not simulated}")
                ipf += simulated
        how = "Algorithm B over all pairs"
    else:
        ipf = sum(1 for _ in _ipfs_with_bioutcome(n))
        how = "completion enumeration"
    expected = count_ipfs(n)
    detail = f"|PF_{n}| = {pf}; |IPF_{n}| = {ipf} = {expected} ({how})"
    if ipf != expected:
        return _result(name, f"|IPF_{n}| = {ipf}, expected {expected}", detail)
    return _result(name, None, detail)


def _all_vectors(n):
    return product(range(1, n + 1), repeat=n)


def check_completion_count(n: int) -> CheckResult:
    name = "completion_count"
    if n > IPF_ENUMERATION_LIMIT:
        return _skip(name, f"enumeration limited to n <= {IPF_ENUMERATION_LIMIT}")
    target = factorial(n)
    checked = 0
    for a in enumerate_parking_functions(n):
        comps = ipf_completions(a)
        if len(comps) != target:
            return _result(name, f"a = {a} has {len(comps)} completions, expected {target}")
        checked += 1
    return _result(name, None, f"{checked} parking functions x {target} completions")


def check_prop33_facts(n: int) -> CheckResult:
    """b* is a parking function, a <= outcome <= b, outcome(b*)* <= b, B agrees with A."""
    name = "prop33_facts"
    if n > IPF_ENUMERATION_LIMIT:
        return _skip(name, f"enumeration limited to n <= {IPF_ENUMERATION_LIMIT}")
    for pair, _ in _ipfs_with_bioutcome(n):
        a, b = pair.a, pair.b
        x = outcome(a)
        bstar = conjugate(b)
        if not is_parking_function(bstar):
            return _result(name, f"({pair}): b* = {bstar} is not a parking function")
        if not (componentwise_leq(a, x) and componentwise_leq(x, b)):
            return _result(name, f"({pair}): a <= outcome <= b fails")
        if not componentwise_leq(conjugate(outcome(bstar)), b):
            return _result(name, f"({pair}): outcome(b*)* <= b fails")
        if run_algorithm_b(pair).outcome != x:
            return _result(name, f"({pair}): Algorithm B outcome differs from Algorithm A")
    return _result(name, None, f"{count_ipfs(n)} IPFs")


def check_bruhat_property(n: int) -> CheckResult:
    name = "bruhat_property"
    if n > IPF_ENUMERATION_LIMIT:
        return _skip(name, f"enumeration limited to n <= {IPF_ENUMERATION_LIMIT}")
    for pair, (x, y) in _ipfs_with_bioutcome(n):
        if not bruhat_leq(y, x):
            return _result(name, f"({pair}) -> ({x}, {y}) not Bruhat-related")
    return _result(name, None, f"{count_ipfs(n)} IPFs")


def check_criterion_equivalence(n: int, rc: Callable = is_reachable) -> CheckResult:
    """Interval criterion == count criterion == (phi > 0) == nonempty brute-force fiber."""
    name = "criterion_equivalence"
    perms = symmetric_group(n)
    fibers = _fiber_table(n)
    brute = None
    if n <= IPF_ENUMERATION_LIMIT:
        brute = Counter(bio for _, bio in _ipfs_with_bioutcome(n))
    for x in perms:
        for y in perms:
            phi = fibers[(x, y)]
            answers = {
                "interval": bool(rc(x, y)),
                "count": count_criterion(x, y),
                "phi": phi > 0,
            }
            if brute is not None:
                answers["brute"] = brute[(x, y)] > 0
                if brute[(x, y)] != phi:
                    return _result(name, f"({x}, {y}): phi = {phi}, fiber has {brute[(x, y)]}")
            if len(set(answers.values())) != 1:
                got = ", ".join(f"{k}={v}" for k, v in answers.items())
                return _result(name, f"({x}, {y}): {got}")
    how = "with brute-force fibers" if brute is not None else "brute-force fibers omitted"
    return _result(name, None, f"{len(perms) ** 2} pairs, {how}")


def check_fiber_sum(n: int) -> CheckResult:
    name = "fiber_sum"
    total = sum(_fiber_table(n).values())
    expected = count_ipfs(n)
    e, w0 = identity(n), longest(n)
    detail = f"total {total}"
    if total != expected:
        return _result(name, f"sum of fibers {total} != {expected}", detail)
    if fiber_count(e, e) != factorial(n) ** 2:
        return _result(name, f"phi(e, e) = {fiber_count(e, e)}", detail)
    if fiber_count(w0, w0) != 1:
        return _result(name, f"phi(w0, w0) = {fiber_count(w0, w0)}", detail)
    return _result(name, None, detail)


def check_weak_implies_reachable(n: int) -> CheckResult:
    name = "weak_implies_reachable"
    count = 0
    for y in symmetric_group(n):
        for i in range(1, n):
            x = simple(i, n) * y
            if length(x) == length(y) + 1:
                count += 1
                if not is_reachable(x, y):
                    return _result(name, f"weak cover ({x}, {y}) not reachable")
    return _result(name, None, f"{count} weak covers")


def check_gradedness(n: int) -> CheckResult:
    name = "gradedness"
    if n > closure_cap():
        return _skip(name, f"relations limited to n <= {closure_cap()}")
    pseudo = pseudoreachability_relation(n)
    cov = pseudo.covers()
    for x, y in cov:
        if length(x) != length(y) + 1:
            return _result(name, f"cover ({x}, {y}) has length gap {length(x) - length(y)}")
    chains = 0
    if n <= IPF_ENUMERATION_LIMIT:
        for x, y in pseudo.pairs():
            if not is_reachable(x, y):
                continue
            chain = refine_to_cover_chain(x, y)
            bad = _chain_defect(chain, x, y)
            if bad:
                return _result(name, f"chain for ({x}, {y}): {bad}")
            chains += 1
    if n > IPF_ENUMERATION_LIMIT:
        return _result(name, None, f"{len(cov)} covers; chain refinement limited to n <= {IPF_ENUMERATION_LIMIT}")
    return _result(name, None, f"{len(cov)} covers; {chains} chains refined")


def _chain_defect(chain, x, y) -> str:
    if chain[0] != y or chain[-1] != x:
        return "wrong endpoints"
    if len(chain) != length(x) - length(y) + 1:
        return f"{len(chain) - 1} steps for length gap {length(x) - length(y)}"
    for lo, hi in zip(chain, chain[1:]):
        if length(hi) != length(lo) + 1 or not is_reachable(hi, lo):
            return f"bad link {lo} -> {hi}"
    return ""


def check_sandwich(n: int) -> CheckResult:
    name = "sandwich"
    if n > closure_cap():
        return _skip(name, f"relations limited to n <= {closure_cap()}")
    weak, pseudo, bru = weak_relation(n), pseudoreachability_relation(n), bruhat_relation(n)
    if not weak.issubset(pseudo):
        x, y = next(p for p in weak.pairs() if not pseudo.related(*p))
        return _result(name, f"weak pair ({x}, {y}) not pseudoreachable")
    if not pseudo.issubset(bru):
        x, y = next(p for p in pseudo.pairs() if not bru.related(*p))
        return _result(name, f"pseudoreachable pair ({x}, {y}) not Bruhat-related")
    sizes = "/".join(str(len(r.pairs(strict=True))) for r in (weak, pseudo, bru))
    return _result(name, None, f"strict pairs weak/pseudo/bruhat = {sizes}")


def check_sorting_coincidence(n: int) -> CheckResult:
    name = "sorting_coincidence"
    if n > closure_cap():
        return _skip(name, f"relations limited to n <= {closure_cap()}")
    pseudo, sort = pseudoreachability_relation(n), sorting_relation(n)
    if not pseudo.same_relation(sort):
        diff = pseudo.matrix ^ sort.matrix
        i, j = map(int, next(iter(zip(*diff.nonzero()))))
        x, y = pseudo.elements[i], pseudo.elements[j]
        return _result(name, f"({x}, {y}): pseudo={pseudo.related(x, y)} sorting={sort.related(x, y)}")
    return _result(name, None, f"{len(sort.pairs())} related pairs")


def check_lambda_roundtrip(n: int) -> CheckResult:
    name = "lambda_roundtrip"
    for x in symmetric_group(n):
        lv = lambda_vector(x)
        if from_lambda(lv) != x:
            return _result(name, f"from_lambda(lambda({x})) = {from_lambda(lv)}")
        if sum(lv) != length(x):
            return _result(name, f"lambda({x}) = {lv} sums to {sum(lv)}, length {length(x)}")
    box = 0
    for lv in lambda_box(n):
        box += 1
        if lambda_vector(from_lambda(lv)) != lv:
            return _result(name, f"lambda(from_lambda({lv})) != {lv}")
    if box != factorial(n):
        return _result(name, f"box has {box} points, expected {factorial(n)}")
    return _result(name, None, f"{box} permutations")


def check_ar_equivalence(n: int) -> CheckResult:
    name = "ar_equivalence"
    for x in symmetric_group(n):
        answers = {mode: is_ar(x, mode) for mode in AR_MODES}
        if len(set(answers.values())) != 1:
            return _result(name, f"{x}: {answers}")
    return _result(name, None, f"modes {', '.join(AR_MODES)}")


def check_ar_count(n: int) -> CheckResult:
    name = "ar_count"
    count = sum(1 for x in symmetric_group(n) if is_ar(x))
    detail = f"{count} = 2^{n - 1}"
    if count != 2 ** (n - 1):
        return _result(name, f"{count} AR permutations, expected {2 ** (n - 1)}")
    return _result(name, None, detail)


def _bruhat_pairs(n: int):
    if n <= closure_cap():
        return bruhat_relation(n).pairs()
    perms = symmetric_group(n)
    return [(x, y) for x in perms for y in perms if bruhat_leq(y, x)]


def check_ar_downset(n: int) -> CheckResult:
    name = "ar_downset"
    for x, y in _bruhat_pairs(n):
        if is_ar(x) and not is_ar(y):
            return _result(name, f"{x} is AR, {y} <= {x} is not")
    return _result(name, None)


def check_thm_213(n: int) -> CheckResult:
    name = "thm_213"
    hits = 0
    for x, y in _bruhat_pairs(n):
        if avoids_213(y):
            hits += 1
            if not is_reachable(x, y):
                return _result(name, f"({x}, {y}) Bruhat-related, y avoids 213, unreachable")
    return _result(name, None, f"{hits} pairs")


def check_thm_ar(n: int) -> CheckResult:
    name = "thm_ar"
    hits = 0
    for x, y in _bruhat_pairs(n):
        if is_ar(x):
            hits += 1
            if not is_reachable(x, y):
                return _result(name, f"({x}, {y}) Bruhat-related, x AR, unreachable")
    return _result(name, None, f"{hits} pairs")


CHECKS: dict[str, Callable[[int], CheckResult]] = {
    "ar_count": check_ar_count,
    "ar_downset": check_ar_downset,
    "ar_equivalence": check_ar_equivalence,
    "bruhat_property": check_bruhat_property,
    "completion_count": check_completion_count,
    "criterion_equivalence": check_criterion_equivalence,
    "fiber_sum": check_fiber_sum,
    "gradedness": check_gradedness,
    "ipf_count": check_ipf_count,
    "lambda_roundtrip": check_lambda_roundtrip,
    "prop33_facts": check_prop33_facts,
    "sandwich": check_sandwich,
    "sorting_coincidence": check_sorting_coincidence,
    "thm_213": check_thm_213,
    "thm_ar": check_thm_ar,
    "weak_implies_reachable": check_weak_implies_reachable,
}


def run_verification(n: int, tier: str = "fast", rc: Callable | None = None) -> VerificationReport:
    """Run every check at degree n.

    ``rc`` replaces the reachability test inside criterion_equivalence; it
    exists so a deliberately broken criterion can be shown to be caught.
    """
    if tier not in TIER_LIMITS:
        raise ValueError(f"unknown tier {tier!r}")
    limit = TIER_LIMITS[tier]
    if not 1 <= n <= limit:
        raise ValueError(f"{tier} tier supports 1 <= n <= {limit}, got {n}")
    start = time.perf_counter()
    report = VerificationReport(n, tier)
    for name in sorted(CHECKS):
        if name == "criterion_equivalence" and rc is not None:
            result = check_criterion_equivalence(n, rc=rc)
        else:
            result = CHECKS[name](n)
        report.checks.append(result)
    report.elapsed = time.perf_counter() - start
    return report


def mutated_reachability(x, y) -> bool:
    """A broken interval test that drops the upper endpoint x(i). Negative control only."""
    yv, xv = y.values, x.values
    for i in range(len(xv)):
        tail = set(yv[i:])
        if any(v not in tail for v in range(yv[i], xv[i])):
            return False
    return True
