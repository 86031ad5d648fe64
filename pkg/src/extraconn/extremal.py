"""Closed forms for extremal induced-edge counts and minimum boundary sizes.

ex_m is twice the maximum number of edges an m-vertex induced subgraph can
have; it is attained by the lexicographic segment {0, ..., m-1}, which makes
the minimum boundary over size-m sets with both sides connected equal to
degree*m - ex_m. Everything is exact integer arithmetic; values reach the
2^(n+6) scale, so no floating point appears anywhere on these paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graphs import GraphSpec


def binary_decomposition(m: int) -> list[int]:
    """Exponents of the set bits of m, strictly decreasing.

    The head exponent is floor(log2 m) and each later exponent is the floor
    log of the remainder, so summing 2^t over the result reassembles m.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"binary decomposition needs a positive integer, got {m!r}")
    exponents = []
    while m:
        t = m.bit_length() - 1
        exponents.append(t)
        m ^= 1 << t
    return exponents


def ex_hypercube(n: int, m: int) -> int:
    """ex_m of the plain n-cube: sum of (t_i + 2i) * 2^(t_i) over the decomposition."""
    if not 1 <= m <= 1 << n:
        raise DomainError(f"cardinality m={m} outside [1, 2^{n}]")
    return sum((t + 2 * i) << t for i, t in enumerate(binary_decomposition(m)))


def ex_enhanced(n: int, m: int) -> int:
    """ex_m of Q_{n,2}, the plain value plus the complementary-edge credit.

    Compact form: ex_m(Q_n) + floor(m/2^(n-1))*2^(n-1) + 2*[m mod 2^(n-1) -
    2^(n-2)]^+ with [x]^+ = max(x, 0). It collapses the four ranges of the
    piecewise definition (no credit up to a quarter of the vertices, a 2m -
    2^(n-1) ramp up to half, a flat 2^(n-1) plateau, then a 2x ramp) into a
    single expression, so there are no branch-boundary cases to get wrong.
    """
    if n < 3:
        raise DomainError(f"enhanced family needs n >= 3, got n={n}")
    if not 1 <= m <= 1 << n:
        raise DomainError(f"cardinality m={m} outside [1, 2^{n}]")
    half = 1 << (n - 1)
    quarter = 1 << (n - 2)
    wraps = m >> (n - 1)
    rest = m - (wraps << (n - 1))
    return ex_hypercube(n, m) + wraps * half + 2 * max(rest - quarter, 0)


@dataclass(frozen=True)
class Family:
    """A graph family with a closed-form ex: the plain n-cube or Q_{n,2}."""

    kind: str
    n: int

    HYPERCUBE = "hypercube"
    ENHANCED = "enhanced"

    def __post_init__(self):
        if self.kind not in (self.HYPERCUBE, self.ENHANCED):
            raise DomainError(f"unknown family kind {self.kind!r}")
        minimum = 3 if self.kind == self.ENHANCED else 2
        if not isinstance(self.n, int) or self.n < minimum:
            raise DomainError(f"{self.kind} family needs n >= {minimum}, got {self.n!r}")

    @classmethod
    def hypercube(cls, n: int) -> "Family":
        return cls(cls.HYPERCUBE, n)

    @classmethod
    def enhanced(cls, n: int) -> "Family":
        return cls(cls.ENHANCED, n)

    @property
    def degree(self) -> int:
        return self.n if self.kind == self.HYPERCUBE else self.n + 1

    @property
    def half(self) -> int:
        return 1 << (self.n - 1)

    def graph_spec(self) -> GraphSpec:
        """The matching concrete graph, for counting against the closed forms."""
        return GraphSpec(self.n, None if self.kind == self.HYPERCUBE else 2)

    def ex(self, m: int) -> int:
        if self.kind == self.HYPERCUBE:
            return ex_hypercube(self.n, m)
        return ex_enhanced(self.n, m)


def xi(family: Family, m: int) -> int:
    """Minimum boundary over size-m sets with both sides connected.

    Defined only up to half the vertices; larger m is rejected rather than
    mirrored, even though ex itself extends further.
    """
    if not 1 <= m <= family.half:
        raise DomainError(f"xi is defined for 1 <= m <= 2^(n-1) = {family.half}, got m={m}")
    return family.degree * m - family.ex(m)


@dataclass(frozen=True)
class SplitIdentity:
    """Both candidate right-hand sides for splitting ex_m(Q_{n,2}) at index a.

    The decomposition prefix through index a contributes m1, the tail m2.
    For m up to a quarter of the vertices the stated identity and its
    derivation agree on the correction term 2(a+1)m2, so the two fields
    coincide. On the upper range the stated correction 2m1 + 2(a+1)m2 and
    the derived correction 2(a+2)m2 differ; both are reported so callers can
    decide which side matches the directly computed value.
    """

    n: int
    m: int
    a: int
    m1: int
    m2: int
    lhs: int
    rhs_statement: int
    rhs_proof: int


def split_identity_check(n: int, m: int, a: int) -> SplitIdentity:
    """Evaluate ex_m(Q_{n,2}) directly and via both split identities."""
    if not 1 <= m <= 1 << (n - 1):
        raise DomainError(f"cardinality m={m} outside [1, 2^(n-1)]")
    exponents = binary_decomposition(m)
    s = len(exponents) - 1
    if s < 1:
        raise DomainError(f"m={m} has a single-term decomposition; no split exists")
    if not 0 <= a < s:
        raise DomainError(f"split index a={a} outside [0, {s - 1}]")
    m1 = sum(1 << t for t in exponents[: a + 1])
    m2 = m - m1
    lhs = ex_enhanced(n, m)
    base = ex_enhanced(n, m1) + ex_enhanced(n, m2)
    if m <= 1 << (n - 2):
        rhs_statement = rhs_proof = base + 2 * (a + 1) * m2
    else:
        rhs_statement = base + 2 * m1 + 2 * (a + 1) * m2
        rhs_proof = base + 2 * (a + 2) * m2
    return SplitIdentity(n, m, a, m1, m2, lhs, rhs_statement, rhs_proof)


def ex_upper_bound_check(n: int, t: int, m: int) -> bool:
    """True iff ex_m(Q_n) <= t*m and ex_m(Q_{n,2}) <= (t+1)*m for m <= 2^t."""
    if not 0 <= t <= n:
        raise DomainError(f"exponent t={t} outside [0, {n}]")
    if not 1 <= m <= 1 << t:
        raise DomainError(f"cardinality m={m} outside [1, 2^{t}]")
    return ex_hypercube(n, m) <= t * m and ex_enhanced(n, m) <= (t + 1) * m
