"""Coefficientwise verification of identities, congruences, and support claims.

Every check returns a :class:`Report` carrying a PASS/FAIL verdict, the
highest index actually compared, and (on failure) the minimal mismatch index
with both values.  Verdicts mean "holds to the stated order", never "proved":
the engine only ever inspects finitely many coefficients.

Checks are pure functions of immutable inputs, so independent checks can run
on separate threads without coordination.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .dsl import ExprAST, FAtom, Pow, evaluate
from .errors import NotPrimeError, QetaError
from .oracles import ADefinition, a_oracle, g_oracle, oracle_by_name, p_oracle
from .series import Series

__all__ = [
    "CheckKind", "Verdict", "IdentityCheck", "Report", "EvaluationError",
    "check_identity", "check_congruence_progression", "check_frobenius",
    "check_convolution", "check_empty_support", "check_oracle_match",
    "run_checks",
]


class CheckKind(enum.Enum):
    EQUALITY = "equality"
    CONGRUENCE = "congruence"


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"


class EvaluationError(QetaError):
    """An expression failed to evaluate while running a check.

    Attributes:
        side: which expression failed ("lhs" or "rhs").
        cause: the underlying error.
    """

    def __init__(self, name: str, side: str, cause: QetaError):
        super().__init__(f"{name}: evaluation of {side} failed: {cause}")
        self.side = side
        self.cause = cause


@dataclass(frozen=True)
class IdentityCheck:
    """One corpus-style identity: lhs == rhs (optionally mod a modulus)."""

    name: str
    lhs: ExprAST
    rhs: ExprAST
    kind: CheckKind = CheckKind.EQUALITY
    modulus: int | None = None
    order: int = 500

    def __post_init__(self):
        if (self.kind is CheckKind.CONGRUENCE) != (self.modulus is not None):
            raise QetaError(
                "a modulus must be given exactly when the check kind is CONGRUENCE"
            )
        if self.modulus is not None and self.modulus < 2:
            raise QetaError("congruence modulus must be at least 2")


@dataclass(frozen=True)
class Report:
    """Outcome of one check.

    ``first_mismatch`` is ``(index, lhs_value, rhs_value)`` for the smallest
    failing index, present exactly when the verdict is FAIL.  For congruence
    and support checks the two values are the offending residue (or indicator)
    and its required value.
    """

    name: str
    verdict: Verdict
    checked_up_to: int
    first_mismatch: tuple[int, int, int] | None = None

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def record(self) -> str:
        """The tab-separated record: name, verdict, checked_up_to, then
        mismatch index and both values (empty on PASS)."""
        if self.first_mismatch is None:
            tail = "\t\t\t"
        else:
            idx, lhs, rhs = self.first_mismatch
            tail = f"\t{idx}\t{lhs}\t{rhs}"
        return f"{self.name}\t{self.verdict.value}\t{self.checked_up_to}{tail}"


def _compare(name: str, lhs: Series, rhs: Series) -> Report:
    up_to = min(lhs.order, rhs.order)
    for n in range(up_to + 1):
        a, b = lhs.coeff(n), rhs.coeff(n)
        if a != b:
            return Report(name, Verdict.FAIL, up_to, (n, a, b))
    return Report(name, Verdict.PASS, up_to)


def _evaluate_side(name: str, side: str, expr: ExprAST, order: int) -> Series:
    try:
        return evaluate(expr, order)
    except QetaError as exc:
        raise EvaluationError(name, side, exc) from exc


def check_identity(check: IdentityCheck) -> Report:
    """Evaluate both sides to the check's order and compare coefficientwise.

    extract/inflate nodes auto-expand their operands, so the compared range
    is honest; for CONGRUENCE checks both sides are reduced first.
    """
    lhs = _evaluate_side(check.name, "lhs", check.lhs, check.order)
    rhs = _evaluate_side(check.name, "rhs", check.rhs, check.order)
    if check.kind is CheckKind.CONGRUENCE:
        lhs = lhs.reduce_mod(check.modulus)
        rhs = rhs.reduce_mod(check.modulus)
    return _compare(check.name, lhs, rhs)


def check_congruence_progression(
    base: ExprAST,
    m: int,
    j: int,
    modulus: int,
    n_max: int,
    name: str = "congruence",
) -> Report:
    """Check coeff(m*n + j) == 0 (mod modulus) for all m*n + j <= n_max."""
    if not 0 <= j < m:
        raise QetaError(f"residue must satisfy 0 <= j < m, got j={j}, m={m}")
    if modulus < 2:
        raise QetaError("modulus must be at least 2")
    series = _evaluate_side(name, "base", base, n_max)
    top = min(series.order, n_max)
    last = -1
    for idx in range(j, top + 1, m):
        last = idx
        residue = series.coeff(idx) % modulus
        if residue:
            return Report(name, Verdict.FAIL, last, (idx, residue, 0))
    return Report(name, Verdict.PASS, last)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    limit = math.isqrt(n)
    while d <= limit:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def check_frobenius(p: int, a: int, b: int, order: int, name: str | None = None) -> Report:
    """Check f_{ap}^b == f_a^{bp} (mod p) to the given order."""
    if not is_prime(p):
        raise NotPrimeError(f"p = {p} is not prime")
    if a < 1 or b < 1:
        raise QetaError("a and b must be positive integers")
    if name is None:
        name = f"frobenius-p{p}-a{a}-b{b}"
    check = IdentityCheck(
        name=name,
        lhs=Pow(FAtom(a * p), b),
        rhs=Pow(FAtom(a), b * p),
        kind=CheckKind.CONGRUENCE,
        modulus=p,
        order=order,
    )
    return check_identity(check)


def check_convolution(n_max: int, name: str = "convolution-mod2") -> Report:
    """Check a(n) == sum_k p(k) g(n - 12k) (mod 2) for all n <= n_max.

    g vanishes on negative arguments, so the sum runs over k <= n // 12.
    """
    a_tab = a_oracle(n_max, ADefinition.MOD6)
    p_tab = p_oracle(n_max // 12)
    g_tab = g_oracle(n_max)
    for n in range(n_max + 1):
        acc = 0
        for k in range(n // 12 + 1):
            acc += p_tab[k] * g_tab[n - 12 * k]
        lhs, rhs = a_tab[n] % 2, acc % 2
        if lhs != rhs:
            return Report(name, Verdict.FAIL, n, (n, lhs, rhs))
    return Report(name, Verdict.PASS, n_max)


def check_empty_support(m: int, j: int, n_max: int, name: str | None = None) -> Report:
    """Check g(n) == 0 for every n <= n_max with n congruent to j mod m."""
    if not 0 <= j < m:
        raise QetaError(f"residue must satisfy 0 <= j < m, got j={j}, m={m}")
    if name is None:
        name = f"empty-support-{m}n+{j}"
    g_tab = g_oracle(n_max)
    last = -1
    for n in range(j, n_max + 1, m):
        last = n
        if g_tab[n]:
            return Report(name, Verdict.FAIL, last, (n, g_tab[n], 0))
    return Report(name, Verdict.PASS, last)


def check_oracle_match(
    expr: ExprAST, oracle_name: str, order: int, name: str = "oracle-match"
) -> Report:
    """Compare a series expansion against an independently computed oracle table."""
    series = _evaluate_side(name, "expr", expr, order)
    table = oracle_by_name(oracle_name, order)
    up_to = min(series.order, table.limit)
    for n in range(up_to + 1):
        a, b = series.coeff(n), table[n]
        if a != b:
            return Report(name, Verdict.FAIL, up_to, (n, a, b))
    return Report(name, Verdict.PASS, up_to)


def run_checks(checks) -> list[Report]:
    """Run independent identity checks and return reports sorted by name."""
    return sorted((check_identity(c) for c in checks), key=lambda r: r.name)
