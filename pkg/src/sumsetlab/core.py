"""Exact generalized sumsets over Z and Z/pZ.

For a set A = {a_1 < ... < a_k} and integers h >= 1, r >= 1 with
h <= r*k, the generalized sumset is

    h^(r)A = { r_1 a_1 + ... + r_k a_k : 0 <= r_i <= r, sum r_i = h },

i.e. all sums of h elements of A where no element is used more than r
times.  Two classical cases fall out: r = h gives the h-fold sumset hA
(unbounded repetition never exceeds h anyway), and r = 1 gives the
restricted sumset h^A of sums of h distinct elements.

Everything here is exact integer arithmetic.  Sumsets are computed by a
dynamic program over big-int bit vectors: dp[t] is the bitmask of sums
achievable using the elements scanned so far with total multiplicity
exactly t.  Scanning element a updates

    dp'[t] = OR over c in 0..min(r, t) of  dp[t - c] << (c * a')

where a' = a - min(A), so shifts stay non-negative; the final mask is
read off at t = h and translated back by h * min(A).  Modulo a prime p
the mask has p bits and shifting becomes rotation.

Conventions: modular elements are residues in [0, p) and p must be
prime; integer ground sets are kept sorted ascending; h = m*r + eps
with 0 <= eps <= r - 1 is the Euclidean split used by the closed-form
bounds and the minimum/maximum formulas.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Tuple

from .errors import DomainError

# Resource guard, not a correctness limit: sums are exact bigints, but a
# ground set whose span overflows 64 bits signals an unreasonable input.
_MAX_MAGNITUDE = 2**63 - 1


class SetLiteralWarning(UserWarning):
    """Emitted when a parsed set literal had to be canonicalized."""


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def split_h(h: int, r: int) -> Tuple[int, int]:
    """Euclidean split h = m*r + eps with 0 <= eps <= r - 1."""
    if r < 1:
        raise DomainError(f"r >= 1 required, got r={r}")
    if h < 0:
        raise DomainError(f"h >= 0 required, got h={h}")
    return divmod(h, r)


@dataclass(frozen=True)
class GroundSet:
    """A finite set of integers, optionally viewed inside Z/pZ.

    ``elements`` must be strictly increasing; with a modulus they must
    be residues in [0, p) and p must be prime.  Use :meth:`of` to build
    one from unordered values, or :func:`parse_ground_set` for text.
    """

    elements: Tuple[int, ...]
    modulus: Optional[int] = None

    def __post_init__(self):
        if not self.elements:
            raise DomainError("ground set must be nonempty")
        if any(e != int(e) for e in self.elements):
            raise DomainError("ground set elements must be integers")
        for x, y in zip(self.elements, self.elements[1:]):
            if x >= y:
                raise DomainError(
                    "ground set elements must be strictly increasing; "
                    "use GroundSet.of() to canonicalize"
                )
        if self.modulus is not None:
            p = self.modulus
            if not is_prime(p):
                raise DomainError(f"modulus must be prime, got {p}")
            if self.elements[0] < 0 or self.elements[-1] >= p:
                raise DomainError(
                    f"modular elements must be residues in [0, {p})"
                )
        else:
            if max(abs(self.elements[0]), abs(self.elements[-1])) > _MAX_MAGNITUDE:
                raise DomainError("element magnitude exceeds 64 bits")

    @classmethod
    def of(cls, values: Iterable[int], modulus: Optional[int] = None) -> "GroundSet":
        """Build a ground set, sorting, deduplicating and (if modular)
        reducing values into [0, p).  Silent; the text parser warns."""
        vals = list(values)
        if modulus is not None:
            if not is_prime(modulus):
                raise DomainError(f"modulus must be prime, got {modulus}")
            vals = [v % modulus for v in vals]
        return cls(tuple(sorted(set(vals))), modulus)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    def translate(self, t: int) -> "GroundSet":
        if self.modulus is not None:
            return GroundSet.of((e + t for e in self.elements), self.modulus)
        return GroundSet(tuple(e + t for e in self.elements))

    def dilate(self, c: int) -> "GroundSet":
        if c == 0:
            raise DomainError("dilation factor must be nonzero")
        if self.modulus is not None:
            return GroundSet.of((e * c for e in self.elements), self.modulus)
        return GroundSet.of(e * c for e in self.elements)


@dataclass(frozen=True)
class SumParams:
    """The pair (h, r): total multiplicity h, per-element cap r."""

    h: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"r >= 1 required, got r={self.r}")
        if self.h < 1:
            raise DomainError(f"h >= 1 required, got h={self.h}")

    @property
    def m(self) -> int:
        return self.h // self.r

    @property
    def epsilon(self) -> int:
        return self.h % self.r


@dataclass(frozen=True)
class SumsetResult:
    """A computed sumset: sorted values, plus the modulus if modular."""

    values: Tuple[int, ...]
    modulus: Optional[int] = None

    @property
    def cardinality(self) -> int:
        return len(self.values)

    @property
    def min(self) -> int:
        return self.values[0]

    @property
    def max(self) -> int:
        return self.values[-1]

    def as_set(self) -> set:
        return set(self.values)

    def __contains__(self, x: int) -> bool:
        return x in set(self.values)

    def __iter__(self):
        return iter(self.values)


def parse_ground_set(text: str) -> GroundSet:
    """Parse a set literal like ``"0,1,3,7"`` or ``"0,1,3,7 mod 11"``.

    Whitespace-insensitive.  Values are sorted and deduplicated, and
    modular values reduced into [0, p); any such canonicalization emits
    a :class:`SetLiteralWarning`.
    """
    parts = text.split("mod")
    if len(parts) > 2:
        raise DomainError(f"set literal has more than one 'mod': {text!r}")
    modulus = None
    if len(parts) == 2:
        mod_text = parts[1].strip()
        try:
            modulus = int(mod_text)
        except ValueError:
            raise DomainError(f"bad modulus {mod_text!r} in set literal") from None
    tokens = [t.strip() for t in parts[0].split(",")]
    tokens = [t for t in tokens if t]
    if not tokens:
        raise DomainError("set literal has no elements")
    try:
        raw = [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not _is_int_token(t))
        raise DomainError(f"bad element {bad!r} in set literal") from None
    gs = GroundSet.of(raw, modulus)
    canon = list(gs.elements)
    reduced = [v % modulus for v in raw] if modulus is not None else raw
    if reduced != raw:
        warnings.warn(
            "set literal contained residues outside [0, p); reduced mod p",
            SetLiteralWarning,
            stacklevel=2,
        )
    if sorted(set(reduced)) != reduced:
        warnings.warn(
            "set literal was unsorted or contained duplicates; canonicalized",
            SetLiteralWarning,
            stacklevel=2,
        )
    assert canon == sorted(set(reduced))
    return gs


def _is_int_token(t: str) -> bool:
    try:
        int(t)
        return True
    except ValueError:
        return False


def _validate_params(ground: GroundSet, params: SumParams) -> None:
    k = ground.size
    if params.h > params.r * k:
        raise DomainError(
            f"h <= r*k required (no multiset of {params.h} draws fits "
            f"{k} elements with cap {params.r}): h={params.h}, r*k={params.r * k}"
        )
    if ground.modulus is None:
        span = max(abs(ground.elements[0]), abs(ground.elements[-1]))
        if params.h * span > _MAX_MAGNITUDE:
            raise DomainError(
                f"h * max|a_i| = {params.h * span} exceeds the 64-bit guard"
            )


def generalized_sumset(ground: GroundSet, params: SumParams) -> SumsetResult:
    """Compute h^(r)A exactly.

    Bit-vector dynamic program over exact multiplicity: one pass per
    element, tracking for each total multiplicity t the bitmask of
    achievable sums.  Integer case runs in the translated coordinates
    a - min(A); modular case uses p-bit rotating masks.
    """
    _validate_params(ground, params)
    if ground.modulus is None:
        return _sumset_integers(ground, params)
    return _sumset_mod_p(ground, params)


def _sumset_integers(ground: GroundSet, params: SumParams) -> SumsetResult:
    A = ground.elements
    h, r = params.h, params.r
    k = len(A)
    base = A[0]
    shifts = [a - base for a in A]
    dp = [0] * (h + 1)
    dp[0] = 1
    for i, a in enumerate(shifts):
        step = [c * a for c in range(r + 1)]
        # dp[t] can only matter later if t is reachable from this prefix
        # and completable by the remaining elements.
        hi = min(h, (i + 1) * r)
        lo = max(0, h - (k - i - 1) * r)
        new = [0] * (h + 1)
        for t in range(lo, hi + 1):
            acc = 0
            for c in range(min(r, t) + 1):
                x = dp[t - c]
                if x:
                    acc |= x << step[c]
            new[t] = acc
        dp = new
    mask = dp[h]
    offset = h * base
    return SumsetResult(tuple(v + offset for v in _mask_bits(mask)), None)


def _sumset_mod_p(ground: GroundSet, params: SumParams) -> SumsetResult:
    A = ground.elements
    h, r = params.h, params.r
    p = ground.modulus
    k = len(A)
    full = (1 << p) - 1
    dp = [0] * (h + 1)
    dp[0] = 1
    for i, a in enumerate(A):
        rots = [(c * a) % p for c in range(r + 1)]
        hi = min(h, (i + 1) * r)
        lo = max(0, h - (k - i - 1) * r)
        new = [0] * (h + 1)
        for t in range(lo, hi + 1):
            acc = 0
            for c in range(min(r, t) + 1):
                x = dp[t - c]
                if x:
                    s = rots[c]
                    if s:
                        acc |= ((x << s) | (x >> (p - s))) & full
                    else:
                        acc |= x
            new[t] = acc
        dp = new
    return SumsetResult(tuple(_mask_bits(dp[h])), p)


def _mask_bits(mask: int) -> list:
    """Positions of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def classical_sumset(ground: GroundSet, h: int) -> SumsetResult:
    """hA: sums of h elements with repetition unrestricted (cap r = h)."""
    return generalized_sumset(ground, SumParams(h=h, r=h))


def restricted_sumset(ground: GroundSet, h: int) -> SumsetResult:
    """h^A: sums of h distinct elements (cap r = 1)."""
    return generalized_sumset(ground, SumParams(h=h, r=1))


def bound_direct_integers(k: int, h: int, r: int) -> int:
    """Closed-form lower bound for |h^(r)A| over the integers.

    With h = m*r + eps the bound is h*k - m^2*r + 1 - 2*m*eps - eps.
    Hypotheses: k >= 1, r >= 1, 1 <= h <= r*k.  Equality holds exactly
    on arithmetic progressions (for k >= 5, 2 <= r <= h <= r*k - 2 the
    progressions are the only equality sets).
    """
    if k < 1:
        raise DomainError(f"k >= 1 required, got k={k}")
    if r < 1:
        raise DomainError(f"r >= 1 required, got r={r}")
    if not 1 <= h <= r * k:
        raise DomainError(f"1 <= h <= r*k required: h={h}, r*k={r * k}")
    m, eps = split_h(h, r)
    return h * k - m * m * r + 1 - 2 * m * eps - eps


def bound_direct_mod_p(k: int, h: int, r: int, p: int) -> int:
    """Lower bound for |h^(r)A| in Z/pZ: min(p, integer bound).

    Hypotheses: p prime, 1 <= k <= p, and 1 <= r <= h <= r*k.  Note the
    extra r <= h requirement, absent in the integer case.
    """
    if not is_prime(p):
        raise DomainError(f"p must be prime, got p={p}")
    if not 1 <= k <= p:
        raise DomainError(f"1 <= k <= p required: k={k}, p={p}")
    if r < 1:
        raise DomainError(f"r >= 1 required, got r={r}")
    if not r <= h <= r * k:
        raise DomainError(f"r <= h <= r*k required: r={r}, h={h}, r*k={r * k}")
    m, eps = split_h(h, r)
    return min(p, h * k - m * m * r + 1 - 2 * m * eps - eps)


def bound_cauchy_davenport(k: int, h: int, p: int) -> int:
    """Cauchy-Davenport lower bound for |hA| in Z/pZ: min(p, h*k - h + 1)."""
    if not is_prime(p):
        raise DomainError(f"p must be prime, got p={p}")
    if not 1 <= k <= p:
        raise DomainError(f"1 <= k <= p required: k={k}, p={p}")
    if h < 1:
        raise DomainError(f"h >= 1 required, got h={h}")
    return min(p, h * k - h + 1)


def bound_erdos_heilbronn(k: int, h: int, p: int) -> int:
    """Erdos-Heilbronn lower bound for |h^A| in Z/pZ: min(p, h*k - h^2 + 1)."""
    if not is_prime(p):
        raise DomainError(f"p must be prime, got p={p}")
    if not 1 <= k <= p:
        raise DomainError(f"1 <= k <= p required: k={k}, p={p}")
    if not 1 <= h <= k:
        raise DomainError(f"1 <= h <= k required: h={h}, k={k}")
    return min(p, h * k - h * h + 1)


def extremes_closed_form(ground: GroundSet, params: SumParams) -> Tuple[int, int]:
    """Minimum and maximum of h^(r)A over the integers, in closed form.

    With h = m*r + eps:

        min = r*(a_1 + ... + a_m) + eps*a_{m+1}
        max = r*(a_{k-m+1} + ... + a_k) + eps*a_{k-m}

    When eps = 0 the stray terms vanish (and for h = r*k, i.e. m = k,
    the indices a_{m+1} / a_{k-m} do not exist at all).
    """
    if ground.modulus is not None:
        raise DomainError("extremes are defined for integer ground sets only")
    _validate_params(ground, params)
    A = ground.elements
    k = len(A)
    m, eps = params.m, params.epsilon
    lo = params.r * sum(A[:m])
    hi = params.r * sum(A[k - m:]) if m > 0 else 0
    if eps:
        lo += eps * A[m]
        hi += eps * A[k - m - 1]
    return lo, hi
