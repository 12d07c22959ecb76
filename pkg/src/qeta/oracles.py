"""Combinatorial ground truth, computed without any series machinery.

Four counting functions, each built by a direct dynamic program (or, for the
theta indicator, plain integer arithmetic):

* ``p_oracle``     -- partitions of n.
* ``overp_oracle`` -- overpartitions of n (first occurrence of a part size
  may be overlined).
* ``a_oracle``     -- partitions avoiding parts congruent to 3 mod 6, or
  equivalently partitions whose odd parts repeat at most twice; both
  definitions are implemented independently so the equivalence itself is
  testable.
* ``g_oracle``     -- indicator of n = 3k^2 + 2k for some integer k, decided
  by whether 3n+1 is a perfect square (3(3k^2+2k)+1 = (3k+1)^2, and any
  square root of 3n+1 is congruent to +-1 mod 3, so a representation can
  always be recovered).

These are the independent cross-checks for every generating function the
series engine produces.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "OracleKind", "ADefinition", "OracleTable",
    "p_oracle", "overp_oracle", "a_oracle", "g_oracle", "oracle_by_name",
]


class OracleKind(enum.Enum):
    P = "p"
    OVERP = "overp"
    A_MOD6 = "a-mod6"
    A_ODDTWICE = "a-oddtwice"
    G = "g"


class ADefinition(enum.Enum):
    MOD6 = "mod6"          # no part congruent to 3 mod 6
    ODDTWICE = "oddtwice"  # odd parts repeated at most twice


@dataclass(frozen=True)
class OracleTable:
    """Exact values of one counting function for n = 0..limit."""

    kind: OracleKind
    values: tuple[int, ...]

    @property
    def limit(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _check_bound(n_max: int) -> None:
    if n_max < 0:
        raise DomainError("oracle bound must be non-negative")


def p_oracle(n_max: int) -> OracleTable:
    """p(n) by the coin-counting DP over part sizes 1..n_max."""
    _check_bound(n_max)
    dp = [0] * (n_max + 1)
    dp[0] = 1
    for part in range(1, n_max + 1):
        for s in range(part, n_max + 1):
            dp[s] += dp[s - part]
    return OracleTable(OracleKind.P, tuple(dp))


def overp_oracle(n_max: int) -> OracleTable:
    """Overpartition counts: unlimited parts, plus one optional overline per size.

    Realized as the product of the unrestricted-multiplicity DP and a
    distinct-parts pass (the overlined copies form a partition into distinct
    parts).
    """
    _check_bound(n_max)
    dp = [0] * (n_max + 1)
    dp[0] = 1
    for part in range(1, n_max + 1):
        for s in range(part, n_max + 1):
            dp[s] += dp[s - part]
    for part in range(1, n_max + 1):
        for s in range(n_max, part - 1, -1):
            dp[s] += dp[s - part]
    return OracleTable(OracleKind.OVERP, tuple(dp))


def a_oracle(n_max: int, definition: ADefinition = ADefinition.MOD6) -> OracleTable:
    """a(n) under either of its two definitions (the choice is the cross-check)."""
    _check_bound(n_max)
    dp = [0] * (n_max + 1)
    dp[0] = 1
    if definition is ADefinition.MOD6:
        for part in range(1, n_max + 1):
            if part % 6 == 3:
                continue
            for s in range(part, n_max + 1):
                dp[s] += dp[s - part]
        return OracleTable(OracleKind.A_MOD6, tuple(dp))
    if definition is ADefinition.ODDTWICE:
        for part in range(1, n_max + 1):
            if part % 2 == 0:
                for s in range(part, n_max + 1):
                    dp[s] += dp[s - part]
            else:
                # multiplicity capped at 2: convolve with 1 + q^part + q^{2 part}
                twice = 2 * part
                for s in range(n_max, part - 1, -1):
                    dp[s] += dp[s - part] + (dp[s - twice] if s >= twice else 0)
        return OracleTable(OracleKind.A_ODDTWICE, tuple(dp))
    raise DomainError(f"unknown a(n) definition: {definition!r}")


def g_oracle(n_max: int) -> OracleTable:
    """Indicator of n = 3k^2 + 2k: 1 iff 3n+1 is a perfect square."""
    _check_bound(n_max)
    values = []
    for n in range(n_max + 1):
        s = 3 * n + 1
        r = math.isqrt(s)
        values.append(1 if r * r == s else 0)
    return OracleTable(OracleKind.G, tuple(values))


def oracle_by_name(name: str, n_max: int) -> OracleTable:
    """Build a table from its corpus/CLI name; 'a' means the MOD6 definition."""
    builders = {
        "p": lambda n: p_oracle(n),
        "overp": lambda n: overp_oracle(n),
        "a": lambda n: a_oracle(n, ADefinition.MOD6),
        "a-mod6": lambda n: a_oracle(n, ADefinition.MOD6),
        "a-oddtwice": lambda n: a_oracle(n, ADefinition.ODDTWICE),
        "g": lambda n: g_oracle(n),
    }
    if name not in builders:
        raise DomainError(
            f"unknown oracle '{name}' (expected one of {', '.join(sorted(builders))})"
        )
    return builders[name](n_max)
