"""Orthogonal polynomials from three-term recurrences and their moment matrices."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .factorization import JFraction
from .matrix import TriMatrix


def _fr(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Recurrence:
    """``P_n = (x - alphas[n-1]) P_{n-1} - betas[n-2] P_{n-2}`` for ``n >= 2``.

    ``alphas[k]`` is α_k and ``betas[k]`` is β_{k+1}.  ``p0`` and ``p1`` are
    dense coefficient vectors in ascending powers; for a monic family built
    from a J-fraction ``p1 = x - α_0``.
    """

    p0: tuple[Fraction, ...]
    p1: tuple[Fraction, ...]
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]

    def __post_init__(self):
        for name in ("p0", "p1", "alphas", "betas"):
            object.__setattr__(self, name, _fr(getattr(self, name)))

    @classmethod
    def monic(cls, alphas: Sequence, betas: Sequence) -> Recurrence:
        alphas = _fr(alphas)
        a0 = alphas[0] if alphas else Fraction(0)
        return cls((1,), (-a0, 1), alphas, betas)

    def polynomials(self, n: int) -> list[list[Fraction]]:
        """``P_0 .. P_{n-1}`` as ascending coefficient lists."""
        if n <= 0:
            return []
        polys = [list(self.p0)]
        if n > 1:
            polys.append(list(self.p1))
        for m in range(2, n):
            if m - 1 >= len(self.alphas) or m - 2 >= len(self.betas):
                raise IndexError(f"P_{m} needs alpha_{m - 1} and beta_{m - 1}")
            alpha, beta = self.alphas[m - 1], self.betas[m - 2]
            prev, prev2 = polys[m - 1], polys[m - 2]
            nxt = [Fraction(0)] * (len(prev) + 1)
            for i, c in enumerate(prev):
                nxt[i + 1] += c
                nxt[i] -= alpha * c
            for i, c in enumerate(prev2):
                nxt[i] -= beta * c
            polys.append(nxt)
        return polys


def coeff_array(r: Recurrence, n: int) -> TriMatrix:
    """Row ``i`` holds the coefficients of ``P_i``."""
    rows = []
    for i, p in enumerate(r.polynomials(n)):
        if any(p[n:]):
            raise ValueError(f"P_{i} has degree >= {n}; not a triangular family")
        if len(p) > i + 1 and any(p[i + 1:]):
            raise ValueError(f"deg P_{i} exceeds {i}")
        rows.append((p + [Fraction(0)] * n)[:n])
    return TriMatrix(rows, n)


def moment_matrix(r: Recurrence, n: int) -> TriMatrix:
    """Inverse of the coefficient array; its first column is the moment sequence."""
    return coeff_array(r, n).inverse()


def moments(r: Recurrence, n: int) -> list[Fraction]:
    return list(moment_matrix(r, n).column(0))


def recurrence_from_jfraction(j: JFraction) -> Recurrence:
    return Recurrence.monic(j.alphas, j.betas)
