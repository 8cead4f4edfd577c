"""Truncated Taylor-series arithmetic (jets).

A ``Jet`` holds the Taylor coefficients of a smooth function about a point:
``coeffs[k]`` is ``f^(k)(x0) / k!``.  All arithmetic follows the truncated
power-series rules exactly, which makes jets a drop-in substitute for symbolic
differentiation everywhere a derivative of a coefficient function is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

DEFAULT_ORDER = 4


@dataclass(frozen=True)
class Jet:
    """Taylor coefficients ``(c0, c1, ..., cK)`` of a function at a point."""

    coeffs: tuple[float, ...]

    # -- constructors ----------------------------------------------------

    @staticmethod
    def variable(x: float, order: int = DEFAULT_ORDER) -> "Jet":
        """Jet of the identity function at x."""
        c = [0.0] * (order + 1)
        c[0] = float(x)
        if order >= 1:
            c[1] = 1.0
        return Jet(tuple(c))

    @staticmethod
    def const(v: float, order: int = DEFAULT_ORDER) -> "Jet":
        c = [0.0] * (order + 1)
        c[0] = float(v)
        return Jet(tuple(c))

    # -- accessors -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self) -> float:
        return self.coeffs[0]

    def derivative(self, k: int = 1) -> float:
        """k-th derivative of the underlying function at the base point."""
        if k > self.order:
            raise IndexError(f"jet of order {self.order} has no derivative {k}")
        return self.coeffs[k] * math.factorial(k)

    def shift(self, m: int) -> "Jet":
        """Jet of the m-th derivative (loses m orders of Taylor data)."""
        if m == 0:
            return self
        if m > self.order:
            raise IndexError(f"jet of order {self.order} cannot shift by {m}")
        c = [
            self.coeffs[i + m] * math.factorial(i + m) / math.factorial(i)
            for i in range(len(self.coeffs) - m)
        ]
        return Jet(tuple(c))

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Jet | None":
        if isinstance(other, Jet):
            return other
        if isinstance(other, (int, float)):
            return Jet.const(float(other), self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(len(self.coeffs), len(o.coeffs))
        return Jet(tuple(self.coeffs[i] + o.coeffs[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Jet(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(len(self.coeffs), len(o.coeffs))
        return Jet(tuple(self.coeffs[i] - o.coeffs[i] for i in range(n)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Jet(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Jet):
            return NotImplemented
        n = min(len(self.coeffs), len(other.coeffs))
        out = [0.0] * n
        for i in range(n):
            s = 0.0
            for j in range(i + 1):
                s += self.coeffs[j] * other.coeffs[i - j]
            out[i] = s
        return Jet(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        if not isinstance(other, Jet):
            return NotImplemented
        if other.coeffs[0] == 0.0:
            raise DomainError("jet division by a jet with zero value")
        n = min(len(self.coeffs), len(other.coeffs))
        out = [0.0] * n
        b0 = other.coeffs[0]
        for i in range(n):
            s = self.coeffs[i]
            for j in range(1, i + 1):
                s -= other.coeffs[j] * out[i - j]
            out[i] = s / b0
        return Jet(tuple(out))

    def __rtruediv__(self, other):
        return Jet.const(float(other), self.order) / self

    def __pow__(self, p):
        if isinstance(p, int):
            if p == 0:
                return Jet.const(1.0, self.order)
            if p < 0:
                return 1.0 / (self ** (-p))
            r = self
            for _ in range(p - 1):
                r = r * self
            return r
        return self.power(float(p))

    # -- elementary functions --------------------------------------------

    def exp(self) -> "Jet":
        n = len(self.coeffs)
        out = [0.0] * n
        out[0] = math.exp(self.coeffs[0])
        # e' = a' e  =>  (k+1) e_{k+1} = sum_{j} (j+1) a_{j+1} e_{k-j}
        for k in range(n - 1):
            s = 0.0
            for j in range(k + 1):
                s += (j + 1) * self.coeffs[j + 1] * out[k - j]
            out[k + 1] = s / (k + 1)
        return Jet(tuple(out))

    def log(self) -> "Jet":
        if self.coeffs[0] <= 0.0:
            raise DomainError("jet log of non-positive value")
        n = len(self.coeffs)
        out = [0.0] * n
        out[0] = math.log(self.coeffs[0])
        if n > 1:
            q = self.shift(1) / Jet(self.coeffs[:-1])  # a'/a, order n-2
            for k in range(1, n):
                out[k] = q.coeffs[k - 1] / k
        return Jet(tuple(out))

    def power(self, p: float) -> "Jet":
        """Real power; requires a positive value at the base point."""
        if self.coeffs[0] <= 0.0:
            raise DomainError("jet real power of non-positive value")
        return (self.log() * p).exp()

    def sqrt(self) -> "Jet":
        return self.power(0.5)
