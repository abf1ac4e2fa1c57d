"""Exhaustive scans for equality sets of the closed-form bounds.

Two scans, both over canonically normalized candidates so that no
translate or dilate of a set is visited twice (cardinalities, bounds
and slack are invariant under both):

* integer scan: sets 0 = a_1 < ... < a_k <= max_diameter whose gaps
  have gcd 1, checked against the capped-multiplicity bound; inside the
  inverse hypotheses (k >= 5, 2 <= r <= h <= r*k - 2) the interval
  {0, ..., k-1} must be the one and only equality set;
* mod-p scan: k-subsets of Z/pZ containing 0, checked against the
  distinct-pair bound |2^A| >= min(p, 2k - 3); inside the hypotheses
  (k >= 5, p > 2k - 3) every equality set must be a modular arithmetic
  progression.  Other h are accepted for exploration but assert
  nothing.

Both refuse up front if the candidate count exceeds the cap, and both
can split the enumeration over worker processes by the smallest
nonzero element; chunk results are merged in deterministic order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Tuple

from .core import (
    GroundSet,
    SumParams,
    bound_direct_integers,
    bound_erdos_heilbronn,
    generalized_sumset,
    is_prime,
)
from .errors import DomainError, ResourceCapError
from .verify import _is_ap_int, _is_ap_mod

DEFAULT_CAP = 10**8

InstanceCallback = Callable[[dict], None]


@dataclass(frozen=True)
class ScanReport:
    """Aggregated outcome of one exhaustive scan."""

    kind: str  # "extremal" | "inverse-eh"
    k: int
    h: int
    r: int
    p: Optional[int]
    max_diameter: Optional[int]
    bound: int
    candidates: int
    evaluated: int
    equality_sets: Tuple[Tuple[int, ...], ...]
    violations: Tuple[Tuple[int, ...], ...]
    non_ap_equality: Tuple[Tuple[int, ...], ...]
    in_hypothesis: bool
    hypothesis: str

    @property
    def counterexamples(self) -> Tuple[Tuple[int, ...], ...]:
        """Sets refuting a claim this scan is entitled to assert."""
        if not self.in_hypothesis:
            return self.violations
        if self.kind == "extremal":
            expected = tuple(range(self.k))
            extra = tuple(s for s in self.equality_sets if s != expected)
            missing = () if expected in self.equality_sets else (expected,)
            return self.violations + extra + missing
        return self.violations + self.non_ap_equality

    @property
    def verdict(self) -> str:
        return "fail" if self.counterexamples else "pass"

    def to_record(self) -> dict:
        return {
            "op": "scan-summary",
            "kind": self.kind,
            "k": self.k,
            "h": self.h,
            "r": self.r,
            "p": self.p,
            "max_diameter": self.max_diameter,
            "bound": self.bound,
            "candidates": self.candidates,
            "evaluated": self.evaluated,
            "equality_sets": [list(s) for s in self.equality_sets],
            "violations": [list(s) for s in self.violations],
            "non_ap_equality": [list(s) for s in self.non_ap_equality],
            "in_hypothesis": self.in_hypothesis,
            "hypothesis": self.hypothesis,
            "counterexamples": [list(s) for s in self.counterexamples],
            "verdict": self.verdict,
        }


def _guard_cap(count: int, cap: int) -> None:
    if count > cap:
        raise ResourceCapError(count, cap)


def _extremal_chunk(args) -> Tuple[int, int, list, list]:
    """Evaluate all normalized candidates whose smallest nonzero element
    is ``first``.  Returns (evaluated, equality, violations, instances)."""
    k, h, r, max_diameter, first, bound, collect = args
    params = SumParams(h=h, r=r)
    evaluated = 0
    equality = []
    violations = []
    instances = []
    for rest in combinations(range(first + 1, max_diameter + 1), k - 2):
        cand = (0, first) + rest
        g = first
        prev = first
        for v in rest:
            g = math.gcd(g, v - prev)
            prev = v
        if g != 1:
            continue
        evaluated += 1
        card = generalized_sumset(GroundSet(cand), params).cardinality
        slack = card - bound
        if slack == 0:
            equality.append(cand)
        elif slack < 0:
            violations.append(cand)
        if collect:
            instances.append((cand, card, slack))
    return evaluated, equality, violations, instances


def scan_extremal_integers(
    k: int,
    h: int,
    r: int,
    max_diameter: int,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    on_instance: Optional[InstanceCallback] = None,
) -> ScanReport:
    """Scan all normalized k-sets of diameter <= max_diameter.

    Every candidate's |h^(r)A| is compared with the closed-form bound;
    equality sets and (never expected) violations are collected.
    """
    bound = bound_direct_integers(k, h, r)
    if max_diameter < k - 1:
        raise DomainError(
            f"max_diameter >= k - 1 required to fit k distinct values: "
            f"max_diameter={max_diameter}, k={k}"
        )
    count = math.comb(max_diameter, k - 1)
    _guard_cap(count, cap)
    in_hyp = k >= 5 and 2 <= r <= h <= r * k - 2
    hypothesis = "k >= 5 and 2 <= r <= h <= r*k - 2"
    params = SumParams(h=h, r=r)

    if k == 1:
        card = generalized_sumset(GroundSet((0,)), params).cardinality
        slack = card - bound
        if on_instance:
            on_instance(_instance_record("extremal", (0,), None, card, bound, slack))
        return ScanReport(
            kind="extremal",
            k=k,
            h=h,
            r=r,
            p=None,
            max_diameter=max_diameter,
            bound=bound,
            candidates=1,
            evaluated=1,
            equality_sets=((0,),) if slack == 0 else (),
            violations=((0,),) if slack < 0 else (),
            non_ap_equality=(),
            in_hypothesis=in_hyp,
            hypothesis=hypothesis,
        )

    collect = on_instance is not None
    chunk_args = [
        (k, h, r, max_diameter, first, bound, collect)
        for first in range(1, max_diameter - k + 3)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_extremal_chunk, chunk_args))
    else:
        results = [_extremal_chunk(a) for a in chunk_args]

    evaluated = 0
    equality = []
    violations = []
    for ev, eq, vio, instances in results:
        evaluated += ev
        equality.extend(eq)
        violations.extend(vio)
        if collect:
            for cand, card, slack in instances:
                on_instance(
                    _instance_record("extremal", cand, None, card, bound, slack)
                )
    non_ap = tuple(s for s in equality if not _is_ap_int(s))
    return ScanReport(
        kind="extremal",
        k=k,
        h=h,
        r=r,
        p=None,
        max_diameter=max_diameter,
        bound=bound,
        candidates=count,
        evaluated=evaluated,
        equality_sets=tuple(equality),
        violations=tuple(violations),
        non_ap_equality=non_ap,
        in_hypothesis=in_hyp,
        hypothesis=hypothesis,
    )


def _inverse_chunk(args) -> Tuple[int, int, list, list]:
    k, h, p, first, target, collect = args
    params = SumParams(h=h, r=1)
    evaluated = 0
    equality = []
    violations = []
    instances = []
    for rest in combinations(range(first + 1, p), k - 2):
        cand = (0, first) + rest
        evaluated += 1
        card = generalized_sumset(GroundSet(cand, p), params).cardinality
        slack = card - target
        if slack == 0:
            equality.append(cand)
        elif slack < 0:
            violations.append(cand)
        if collect:
            instances.append((cand, card, slack))
    return evaluated, equality, violations, instances


def scan_inverse_eh_mod_p(
    p: int,
    k: int,
    h: int = 2,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    on_instance: Optional[InstanceCallback] = None,
) -> ScanReport:
    """Scan all k-subsets of Z/pZ containing 0 for |h^A| equality sets.

    The default h = 2 carries the inverse statement (equality sets are
    modular progressions when k >= 5 and p > 2k - 3).  Other h values
    are exploratory: reported, asserted never.
    """
    if not is_prime(p):
        raise DomainError(f"p must be prime, got p={p}")
    if not 1 <= k <= p:
        raise DomainError(f"1 <= k <= p required: k={k}, p={p}")
    if not 1 <= h <= k:
        raise DomainError(f"1 <= h <= k required for distinct sums: h={h}, k={k}")
    target = bound_erdos_heilbronn(k, h, p)
    count = math.comb(p - 1, k - 1)
    _guard_cap(count, cap)
    in_hyp = h == 2 and k >= 5 and p > 2 * k - 3
    hypothesis = "h == 2 and k >= 5 and p > 2*k - 3"
    params = SumParams(h=h, r=1)

    if k == 1:
        card = generalized_sumset(GroundSet((0,), p), params).cardinality
        slack = card - target
        if on_instance:
            on_instance(_instance_record("inverse-eh", (0,), p, card, target, slack))
        return ScanReport(
            kind="inverse-eh",
            k=k,
            h=h,
            r=1,
            p=p,
            max_diameter=None,
            bound=target,
            candidates=1,
            evaluated=1,
            equality_sets=((0,),) if slack == 0 else (),
            violations=((0,),) if slack < 0 else (),
            non_ap_equality=(),
            in_hypothesis=in_hyp,
            hypothesis=hypothesis,
        )

    collect = on_instance is not None
    chunk_args = [
        (k, h, p, first, target, collect) for first in range(1, p - k + 2)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_inverse_chunk, chunk_args))
    else:
        results = [_inverse_chunk(a) for a in chunk_args]

    evaluated = 0
    equality = []
    violations = []
    for ev, eq, vio, instances in results:
        evaluated += ev
        equality.extend(eq)
        violations.extend(vio)
        if collect:
            for cand, card, slack in instances:
                on_instance(
                    _instance_record("inverse-eh", cand, p, card, target, slack)
                )
    non_ap = tuple(s for s in equality if not _is_ap_mod(s, p))
    return ScanReport(
        kind="inverse-eh",
        k=k,
        h=h,
        r=1,
        p=p,
        max_diameter=None,
        bound=target,
        candidates=count,
        evaluated=evaluated,
        equality_sets=tuple(equality),
        violations=tuple(violations),
        non_ap_equality=non_ap,
        in_hypothesis=in_hyp,
        hypothesis=hypothesis,
    )


def _instance_record(kind, cand, p, card, bound, slack) -> dict:
    return {
        "op": "scan",
        "kind": kind,
        "set": list(cand),
        "p": p,
        "cardinality": card,
        "bound": bound,
        "slack": slack,
        "equality": slack == 0,
    }


_MANIFEST_KEYS = ("k", "h", "r", "max_diameter", "p")


def parse_manifest(text: str) -> list:
    """Parse a scan grid manifest into a list of parameter dicts.

    One ``key = value`` per line; blank lines and ``#`` comments are
    skipped.  A value is an integer, a comma list, or an ``a..b``
    inclusive range; multiple multi-valued keys expand as a Cartesian
    product in key order k, h, r, max_diameter, p.
    """
    grid = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"manifest line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _MANIFEST_KEYS:
            raise DomainError(
                f"manifest line {lineno}: unknown key {key!r} "
                f"(allowed: {', '.join(_MANIFEST_KEYS)})"
            )
        if key in grid:
            raise DomainError(f"manifest line {lineno}: duplicate key {key!r}")
        grid[key] = _parse_values(value.strip(), lineno)
    if not grid:
        raise DomainError("manifest is empty")
    combos = [{}]
    for key in _MANIFEST_KEYS:
        if key not in grid:
            continue
        combos = [dict(c, **{key: v}) for c in combos for v in grid[key]]
    return combos


def _parse_values(text: str, lineno: int) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo_text, _, hi_text = part.partition("..")
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError:
                raise DomainError(
                    f"manifest line {lineno}: bad range {part!r}"
                ) from None
            if hi < lo:
                raise DomainError(
                    f"manifest line {lineno}: empty range {part!r}"
                )
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(part))
            except ValueError:
                raise DomainError(
                    f"manifest line {lineno}: bad value {part!r}"
                ) from None
    if not out:
        raise DomainError(f"manifest line {lineno}: no values")
    return out
