"""Univariate polynomials in t with nonnegative integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Polynomial:
    """Poincare polynomial: coefficients[k] is the coefficient of t^k."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if any(c < 0 for c in coeffs):
            raise ValueError("Poincare polynomials have nonnegative coefficients")
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (0,)
        object.__setattr__(self, "coefficients", coeffs)

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial((0,))

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def binomial(k: int) -> "Polynomial":
        """(1 + t)^k."""
        from math import comb
        return Polynomial(tuple(comb(k, j) for j in range(k + 1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(c * other for c in self.coefficients))
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            for j, y in enumerate(other.coefficients):
                out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "Polynomial":
        """Multiply by t^k."""
        if self.coefficients == (0,):
            return self
        return Polynomial((0,) * k + self.coefficients)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0 and len(self.coefficients) > 1:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}t" if c != 1 else "t")
            else:
                terms.append(f"{c}t^{k}" if c != 1 else f"t^{k}")
        return " + ".join(terms)
