"""Exact arithmetic on truncated formal power series in q over the integers.

A :class:`Series` stores the coefficients of q^0 .. q^order as exact Python
integers.  Everything past the truncation order is *unknown*, never assumed
zero: reading such a coefficient raises :class:`~qeta.errors.OutOfRangeError`,
and every operation propagates the order of its inputs conservatively (binary
operations truncate to the shorter input).

Values are immutable after construction and all operations are pure, so
series can be shared freely between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import DomainError, NotAUnitError, OutOfRangeError

__all__ = ["Series"]


# Multiplication strategy: schoolbook convolution over the nonzero terms of
# the sparser operand while that stays cheap, otherwise Kronecker substitution
# (pack coefficients into one big integer per operand, multiply, unpack).
# Both are exact; tests pin them against each other.
_SPARSE_NNZ_LIMIT = 48
_SMALL_LEN_LIMIT = 96


def _convolve_school(a: Sequence[int], b: Sequence[int], n_out: int) -> list[int]:
    """Plain convolution of coefficient lists, truncated to n_out terms."""
    out = [0] * n_out
    nz_a = [(i, c) for i, c in enumerate(a) if c and i < n_out]
    nz_b = [(i, c) for i, c in enumerate(b) if c and i < n_out]
    if len(nz_b) < len(nz_a):
        nz_a, nz_b = nz_b, nz_a
    for i, ca in nz_a:
        for j, cb in nz_b:
            k = i + j
            if k >= n_out:
                break
            out[k] += ca * cb
    return out


def _pack(coeffs: Sequence[int], slot_bytes: int) -> int:
    """Pack signed coefficients into one integer, one little-endian slot each."""
    zeros = bytes(slot_bytes)
    pos = b"".join(
        c.to_bytes(slot_bytes, "little") if c > 0 else zeros for c in coeffs
    )
    val = int.from_bytes(pos, "little")
    if any(c < 0 for c in coeffs):
        neg = b"".join(
            (-c).to_bytes(slot_bytes, "little") if c < 0 else zeros for c in coeffs
        )
        val -= int.from_bytes(neg, "little")
    return val


def _convolve_kronecker(a: Sequence[int], b: Sequence[int], n_out: int) -> list[int]:
    """Exact convolution via one big-integer multiplication.

    Slot width is chosen so every convolution coefficient fits strictly below
    half a slot; adding a half-slot bias after the product then makes all
    base-2^bits digits non-negative, so unpacking is pure byte slicing.
    """
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    if max_a == 0 or max_b == 0:
        return [0] * n_out
    bound = max_a * max_b * min(len(a), len(b))
    bits = ((bound.bit_length() + 1 + 7) // 8) * 8
    slot_bytes = bits // 8
    prod = _pack(a, slot_bytes) * _pack(b, slot_bytes)

    n_keep = min(n_out, len(a) + len(b) - 1)
    half = 1 << (bits - 1)
    bias = int.from_bytes(half.to_bytes(slot_bytes, "little") * n_keep, "little")
    mask = (1 << (bits * n_keep)) - 1
    data = ((prod + bias) & mask).to_bytes(slot_bytes * n_keep, "little")

    out = [
        int.from_bytes(data[k * slot_bytes : (k + 1) * slot_bytes], "little") - half
        for k in range(n_keep)
    ]
    if n_keep < n_out:
        out.extend([0] * (n_out - n_keep))
    return out


def _convolve(a: Sequence[int], b: Sequence[int], n_out: int) -> list[int]:
    if n_out <= _SMALL_LEN_LIMIT:
        return _convolve_school(a, b, n_out)
    nnz_a = sum(1 for c in a if c)
    nnz_b = sum(1 for c in b if c)
    if min(nnz_a, nnz_b) <= _SPARSE_NNZ_LIMIT:
        return _convolve_school(a, b, n_out)
    return _convolve_kronecker(a, b, n_out)


class Series:
    """Truncated power series: coefficients of q^0..q^order, exact integers.

    The constructor pads missing high coefficients with zeros when an explicit
    ``order`` is given, i.e. the caller asserts the input is an exact
    polynomial known to that order.  Without ``order``, the order is
    ``len(coeffs) - 1``.
    """

    __slots__ = ("_coeffs", "_nonzero")

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be exact integers, got {type(c).__name__}")
        if order is not None:
            if order < 0:
                raise DomainError("truncation order must be non-negative")
            if len(cs) > order + 1:
                del cs[order + 1 :]
            else:
                cs.extend([0] * (order + 1 - len(cs)))
        elif not cs:
            raise DomainError("a series needs at least its constant coefficient")
        self._coeffs = tuple(cs)
        self._nonzero: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def _wrap(cls, coeffs: Iterable[int]) -> "Series":
        """Internal constructor for already-validated integer coefficients."""
        s = object.__new__(cls)
        s._coeffs = tuple(coeffs)
        s._nonzero = None
        return s

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls._wrap([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def constant(cls, value: int, order: int) -> "Series":
        if not isinstance(value, int):
            raise TypeError("constant must be an exact integer")
        return cls._wrap([value] + [0] * order)

    @classmethod
    def q_power(cls, exponent: int, order: int) -> "Series":
        """The monomial q^exponent, or the zero series if it lies past the order."""
        if exponent < 0:
            raise DomainError("q exponent must be non-negative")
        cs = [0] * (order + 1)
        if exponent <= order:
            cs[exponent] = 1
        return cls._wrap(cs)

    # -- introspection -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def coeff(self, n: int) -> int:
        """Coefficient of q^n; raises OutOfRangeError past the truncation order."""
        if n < 0 or n > self.order:
            raise OutOfRangeError(
                f"coefficient of q^{n} is outside the known range 0..{self.order}"
            )
        return self._coeffs[n]

    __getitem__ = coeff

    def nonzero_terms(self) -> tuple[tuple[int, int], ...]:
        """The (exponent, coefficient) pairs with nonzero coefficient."""
        if self._nonzero is None:
            self._nonzero = tuple(
                (i, c) for i, c in enumerate(self._coeffs) if c
            )
        return self._nonzero

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero known coefficient, or None if all zero."""
        nz = self.nonzero_terms()
        return nz[0][0] if nz else None

    def is_zero(self) -> bool:
        return not self.nonzero_terms()

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        a, b = self._coeffs, other._coeffs
        return Series._wrap([a[i] + b[i] for i in range(n)])

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        a, b = self._coeffs, other._coeffs
        return Series._wrap([a[i] - b[i] for i in range(n)])

    def __neg__(self) -> "Series":
        return Series._wrap([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return Series._wrap([c * other for c in self._coeffs])
        if not isinstance(other, Series):
            return NotImplemented
        n = min(len(self._coeffs), len(other._coeffs))
        return Series._wrap(_convolve(self._coeffs[:n], other._coeffs[:n], n))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def invert(self) -> "Series":
        """Reciprocal series u with self * u = 1 up to the truncation order.

        Requires constant term 1 or -1 so the reciprocal stays integral.
        Sparse inputs use the classical recurrence; dense ones use Newton
        iteration with precision doubling (exact at every step).
        """
        a = self._coeffs
        a0 = a[0]
        if a0 not in (1, -1):
            raise NotAUnitError(
                f"series with constant term {a0} has no integer reciprocal"
            )
        n1 = len(a)
        nz_tail = [(j, c) for j, c in self.nonzero_terms() if j > 0]
        if len(nz_tail) <= _SPARSE_NNZ_LIMIT or n1 <= _SMALL_LEN_LIMIT:
            # c_n = -(1/a0) * sum_{j>=1} a_j c_{n-j}; 1/a0 = a0 here.
            out = [0] * n1
            out[0] = a0
            for n in range(1, n1):
                acc = 0
                for j, c in nz_tail:
                    if j > n:
                        break
                    acc += c * out[n - j]
                out[n] = -a0 * acc
            return Series._wrap(out)
        # Newton: x <- x*(2 - a*x), doubling the correct order each round.
        x = [a0]
        m = 1
        while m < n1:
            m2 = min(2 * m, n1)
            ax = _convolve(a[:m2], x, m2)
            t = [-c for c in ax]
            t[0] += 2
            x = _convolve(x, t, m2)
            m = m2
        return Series._wrap(x)

    def __pow__(self, k: int) -> "Series":
        """k-fold product by binary exponentiation; negative k inverts first."""
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return Series.one(self.order)
        base = self.invert() if k < 0 else self
        k = abs(k)
        result = None
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structural operations ----------------------------------------------

    def shift(self, s: int) -> "Series":
        """Multiply by q^s; coefficients pushed past the order are dropped."""
        if s < 0:
            raise DomainError("shift distance must be non-negative")
        if s == 0:
            return self
        n1 = len(self._coeffs)
        if s >= n1:
            return Series.zero(self.order)
        return Series._wrap([0] * s + list(self._coeffs[: n1 - s]))

    def inflate(self, m: int) -> "Series":
        """Substitute q -> q^m.  Result order is m * self.order."""
        if m < 1:
            raise DomainError("inflation step must be positive")
        if m == 1:
            return self
        out = [0] * (m * self.order + 1)
        for i, c in self.nonzero_terms():
            out[m * i] = c
        return Series._wrap(out)

    def extract(self, m: int, j: int) -> "Series":
        """Collect coefficients on the progression mn + j: result[n] = self[mn+j]."""
        if m < 1:
            raise DomainError("extraction modulus must be positive")
        if not 0 <= j < m:
            raise DomainError(f"residue must satisfy 0 <= j < m, got j={j}, m={m}")
        if j > self.order:
            raise DomainError(
                f"series of order {self.order} has no coefficient at residue {j}"
            )
        if m == 1:
            return self
        return Series._wrap(self._coeffs[j :: m])

    def reduce_mod(self, modulus: int) -> "Series":
        """Replace every coefficient by its least non-negative residue."""
        if modulus < 2:
            raise DomainError("modulus must be at least 2")
        return Series._wrap([c % modulus for c in self._coeffs])

    def truncate(self, order: int) -> "Series":
        """Drop knowledge above the given order (never extends it)."""
        if order > self.order:
            raise OutOfRangeError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        if order == self.order:
            return self
        return Series._wrap(self._coeffs[: order + 1])

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        if len(self._coeffs) <= 17:
            return f"Series({list(self._coeffs)})"
        head = ", ".join(str(c) for c in self._coeffs[:16])
        return f"Series([{head}, ...], order={self.order})"

    def __str__(self) -> str:
        parts: list[str] = []
        for i, c in self.nonzero_terms():
            if i == 0:
                mono = "1"
            elif i == 1:
                mono = "q"
            else:
                mono = f"q^{i}"
            mag = abs(c)
            body = mono if i > 0 and mag == 1 else (str(mag) if i == 0 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        if not parts:
            parts.append("0")
        parts.append(f"+ O(q^{self.order + 1})")
        return " ".join(parts)
