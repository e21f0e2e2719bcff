"""Exact truncated power series in q with integer coefficients.

A :class:`QSeries` holds the coefficients c_0..c_N of a series known
through q^N.  Coefficients are Python ints, so arithmetic is exact at any
size.  Operations between series of different orders truncate to the
smaller order: a result never claims more precision than its inputs
support.

On top of the ring arithmetic this module provides the standard q-objects
used by character formulas: finite Pochhammer symbols (q)_n, the partition
generating function 1/(q)_oo, Gaussian (q-binomial) coefficients, and
modular products prod 1/(1-q^k) over residue classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


class NonUnitConstantTermError(ValueError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


@dataclass(frozen=True)
class QSeries:
    """A q-series truncated after q^order, with exact integer coefficients."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @staticmethod
    def from_coeffs(coeffs: Iterable[int], order: int | None = None) -> QSeries:
        """Build a series from coefficients, padding with zeros or truncating."""
        cs = [int(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if not cs:
            cs = [0]
        if len(cs) <= order:
            cs.extend([0] * (order + 1 - len(cs)))
        return QSeries(order, tuple(cs[: order + 1]))

    @staticmethod
    def zero(order: int) -> QSeries:
        return QSeries(order, (0,) * (order + 1))

    @staticmethod
    def one(order: int) -> QSeries:
        return QSeries(order, (1,) + (0,) * order)

    @staticmethod
    def monomial(exponent: int, order: int, coeff: int = 1) -> QSeries:
        """coeff * q^exponent truncated to the given order."""
        cs = [0] * (order + 1)
        if 0 <= exponent <= order:
            cs[exponent] = coeff
        return QSeries(order, tuple(cs))

    def coefficient(self, n: int) -> int:
        """Coefficient of q^n.  n must be within the known order."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient q^{n} unknown beyond order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return QSeries(order, self.coeffs[: order + 1])

    def shift(self, exponent: int) -> QSeries:
        """Multiply by q^exponent, keeping the same order."""
        if exponent < 0:
            raise ValueError("negative shifts are not supported")
        cs = (0,) * min(exponent, self.order + 1) + self.coeffs
        return QSeries(self.order, cs[: self.order + 1])

    # -- ring operations (mixed orders truncate to the smaller one) --------

    def __add__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        return QSeries(n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        return QSeries(n, tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __neg__(self) -> QSeries:
        return QSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return QSeries(n, tuple(out))

    def invert(self) -> QSeries:
        """Multiplicative inverse through q^order.

        Requires constant term +1 or -1 so the inverse has integer
        coefficients; uses the triangular recurrence
        b_n = -c_0 * sum_{k=1..n} c_k b_{n-k}.
        """
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NonUnitConstantTermError(
                f"constant term must be +1 or -1 to invert, got {c0}"
            )
        n = self.order
        out = [0] * (n + 1)
        out[0] = c0  # inverse of +/-1 is itself
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                ci = self.coeffs[i]
                if ci:
                    acc += ci * out[k - i]
            out[k] = -c0 * acc
        return QSeries(n, tuple(out))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- text formats -------------------------------------------------------

    def to_csv(self) -> str:
        """One line `c0,c1,...,cN`."""
        return ",".join(str(c) for c in self.coeffs)

    @staticmethod
    def from_csv(line: str) -> QSeries:
        parts = [p.strip() for p in line.strip().split(",")]
        return QSeries.from_coeffs(int(p) for p in parts)

    def to_pretty(self) -> str:
        """Human form `1 + q + 2*q^2 + ...`."""
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if n == 0:
                body = str(mag)
            elif n == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{n}" if mag == 1 else f"{mag}*q^{n}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def series_arith(op: str, a: QSeries, b: QSeries) -> QSeries:
    """Dispatch add/sub/mul by name (the batch surface used by the CLI)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def series_invert(a: QSeries) -> QSeries:
    return a.invert()


def pochhammer_finite(n: int, order: int) -> QSeries:
    """(q)_n = prod_{i=1..n} (1 - q^i), truncated; (q)_0 = 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    out = [1] + [0] * order
    for i in range(1, min(n, order) + 1):
        # multiply in place by (1 - q^i)
        for j in range(order, i - 1, -1):
            out[j] -= out[j - i]
    return QSeries(order, tuple(out))


def pochhammer_inf_inverse(order: int) -> QSeries:
    """1/(q)_oo truncated; the coefficient of q^n is the partition count p(n)."""
    out = [1] + [0] * order
    for i in range(1, order + 1):
        # multiply in place by 1/(1 - q^i) = 1 + q^i + q^{2i} + ...
        for j in range(i, order + 1):
            out[j] += out[j - i]
    return QSeries(order, tuple(out))


@lru_cache(maxsize=None)
def _qbinom_coeffs(m: int, n: int) -> tuple[int, ...]:
    """Exact coefficient tuple of the Gaussian binomial [m choose n]_q."""
    if n == 0 or n == m:
        return (1,)
    # [m n] = [m-1 n-1] + q^n [m-1 n]
    a = _qbinom_coeffs(m - 1, n - 1)
    b = _qbinom_coeffs(m - 1, n)
    out = [0] * (n * (m - n) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + n] += c
    return tuple(out)


def q_binomial(m: int, n: int, order: int) -> QSeries:
    """Gaussian binomial (q)_m / ((q)_n (q)_{m-n}) for 0 <= n <= m, else 0.

    The result is a polynomial of degree n(m-n) with nonnegative integer
    coefficients, truncated to the requested order.
    """
    if not 0 <= n <= m:
        return QSeries.zero(order)
    return QSeries.from_coeffs(_qbinom_coeffs(m, n), order)


def modular_product(modulus: int, residues: Iterable[int], order: int) -> QSeries:
    """prod_{k>=1, k mod modulus in residues} 1/(1 - q^k), truncated."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    rs = {int(r) for r in residues}
    if not rs:
        raise ValueError("residue set must be nonempty")
    bad = [r for r in rs if not 0 <= r < modulus]
    if bad:
        raise ValueError(f"residues out of range mod {modulus}: {sorted(bad)}")
    out = [1] + [0] * order
    for k in range(1, order + 1):
        if k % modulus in rs:
            for j in range(k, order + 1):
                out[j] += out[j - k]
    return QSeries(order, tuple(out))
