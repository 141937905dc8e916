"""Hankel and Toeplitz-plus-Hankel matrices, exact LDLᵀ, Hankel transforms and J-fractions.

The central identity is ``H = L A L^t`` where ``H = (b_{i+j})`` is the Hankel
matrix of the 𝔹-transform ``b`` of a symmetric sequence ``a`` and
``A = (a_{i-j} + a_{i+j+1})``.  An LDLᵀ factorization ``H = 𝓛 D 𝓛^t``
then gives ``A = (L^{-1} 𝓛) D (L^{-1} 𝓛)^t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .btransform import l_array, transform_binomial
from .matrix import Matrix, SymMatrix, TriMatrix, first_difference
from .powerseries import Series, TruncationError, div
from .riordan import to_matrix
from .sequences import Seq, from_list


class SingularMinorError(ArithmeticError):
    """A leading principal minor vanished where a pivot was needed."""

    def __init__(self, order: int):
        super().__init__(f"leading principal minor of order {order} is zero")
        self.order = order


class JFractionError(ArithmeticError):
    """The series is not normal: a zero β was met before the requested depth."""

    def __init__(self, attained: int, partial: "JFraction"):
        super().__init__(f"zero beta encountered; J-fraction attained depth {attained}")
        self.attained = attained
        self.partial = partial


def _as_seq(b) -> Seq:
    return b if isinstance(b, Seq) else from_list(b)


# -- structured matrices ------------------------------------------------------

def hankel_matrix(b, n: int) -> SymMatrix:
    """``(b_{i+j})_{i,j<n}``."""
    b = _as_seq(b)
    b.require(max(2 * n - 1, 0), f"a {n}x{n} Hankel matrix")
    return SymMatrix([[b[i + j] for j in range(n)] for i in range(n)], n)


def tph_matrix(a, n: int) -> SymMatrix:
    """``(a_{|i-j|} + a_{i+j+1})_{i,j<n}``: symmetric Toeplitz plus Hankel."""
    a = _as_seq(a)
    a.require(2 * n, f"a {n}x{n} Toeplitz-plus-Hankel matrix")
    return SymMatrix([[a.ext(i - j) + a[i + j + 1] for j in range(n)] for i in range(n)], n)


# -- LDLᵀ -------------------------------------------------------------------

@dataclass(frozen=True)
class LDU:
    """``M = L diag(D) L^t`` with ``L`` unit lower triangular."""

    L: TriMatrix
    D: tuple[Fraction, ...]

    def reconstruct(self) -> Matrix:
        return self.L @ Matrix.diagonal(self.D) @ self.L.T


def ldu(m: Matrix) -> LDU:
    """Symmetric Gaussian elimination without pivoting.

    Raises :class:`SingularMinorError` when a zero pivot would have to be
    divided by.  A zero final pivot is allowed: the factors are still unique.
    """
    if not m.is_symmetric():
        raise ValueError("ldu needs a symmetric matrix")
    n = m.shape[0]
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D: list[Fraction] = []
    for j in range(n):
        d = m[j, j] - sum((L[j][k] ** 2 * D[k] for k in range(j) if L[j][k]), Fraction(0))
        D.append(d)
        if j + 1 < n and d == 0:
            raise SingularMinorError(j + 1)
        for i in range(j + 1, n):
            s = m[i, j] - sum((L[i][k] * L[j][k] * D[k] for k in range(j)), Fraction(0))
            L[i][j] = s / d
    return LDU(TriMatrix(L, n), tuple(D))


def bareiss_det(m: Matrix) -> Fraction:
    """Determinant by fraction-free elimination with row swaps."""
    n, n2 = m.shape
    if n != n2:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    # scale to integers so every division below is exact
    den = 1
    for r in m.rows:
        for v in r:
            den = den * v.denominator // _gcd(den, v.denominator)
    a = [[int(v * den) for v in r] for r in m.rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den**n)


def _gcd(x: int, y: int) -> int:
    from math import gcd
    return gcd(x, y)


def hankel_transform(b, n: int) -> list[Fraction]:
    """``h_k = det(b_{i+j})_{i,j<=k}`` for ``k = 0..n``.

    Uses the pivots of one LDLᵀ factorization (``h_k = D_0 ... D_k``) and falls
    back to a fraction-free determinant per ``k`` when a pivot vanishes.
    """
    b = _as_seq(b)
    b.require(2 * n + 1, f"Hankel transform up to h_{n}")
    H = hankel_matrix(b, n + 1)
    try:
        D = ldu(H).D
    except SingularMinorError:
        return [bareiss_det(H.leading(k + 1)) for k in range(n + 1)]
    out, acc = [], Fraction(1)
    for d in D:
        acc *= d
        out.append(acc)
    return out


# -- J-fractions ------------------------------------------------------------

@dataclass(frozen=True)
class JFraction:
    """``a0 / (1 - α_0 x - β_1 x^2 / (1 - α_1 x - β_2 x^2 / ...))``.

    ``betas[k]`` holds β_{k+1}.
    """

    a0: Fraction
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]

    @property
    def depth(self) -> int:
        return len(self.alphas)

    def series(self, order: int) -> Series:
        """Expand the fraction, cutting it off after the last known α."""
        one = Series.constant(1, order)
        x = Series.x(order)
        v = one
        for k in range(self.depth - 1, -1, -1):
            tail = Series.constant(0, order)
            if k < len(self.betas) and k < self.depth - 1:
                tail = self.betas[k] * (x * x * v)
            v = div(one, one - self.alphas[k] * x - tail)
        return self.a0 * v


def jfraction(s: Series, depth: int | None = None) -> JFraction:
    """J-fraction coefficients by repeated series inversion.

    From ``v_k`` (with ``v_0 = s / a0``): ``w = 1 - 1/v_k``, ``α_k = [x] w``,
    ``β_{k+1} = [x^2] (w - α_k x)`` and ``v_{k+1} = (w - α_k x) / (β_{k+1} x^2)``.
    """
    if s.order == 0 or s.coeffs[0] == 0:
        raise ValueError("jfraction needs a nonzero constant term")
    max_depth = (s.order - 1) // 2
    depth = max_depth if depth is None else depth
    if depth > max_depth:
        raise TruncationError(f"depth {depth} needs order {2 * depth + 1}, series has {s.order}")
    a0 = s.coeffs[0]
    v = s / a0
    alphas: list[Fraction] = []
    betas: list[Fraction] = []
    for k in range(depth):
        w = 1 - div(Series.constant(1, v.order), v)
        alphas.append(w.coeffs[1])
        if k == depth - 1:
            break
        t = w - alphas[-1] * Series.x(w.order)
        beta = t.coeffs[2]
        if beta == 0:
            raise JFractionError(k + 1, JFraction(a0, tuple(alphas), tuple(betas)))
        betas.append(beta)
        v = t.shift_down(2) / beta
    return JFraction(a0, tuple(alphas), tuple(betas))


def hankel_from_jfraction(j: JFraction, n: int) -> list[Fraction]:
    """``h_k = a0^{k+1} prod_{i=1}^{k} β_i^{k+1-i}`` for ``k = 0..n``."""
    if len(j.betas) < n:
        raise TruncationError(f"need {n} betas, J-fraction has {len(j.betas)}")
    out = []
    for k in range(n + 1):
        h = j.a0 ** (k + 1)
        for i in range(1, k + 1):
            h *= j.betas[i - 1] ** (k + 1 - i)
        out.append(h)
    return out


# -- the conjugation identity -------------------------------------------------

@dataclass(frozen=True)
class ConjugationCheck:
    ok: bool
    H: SymMatrix
    A: SymMatrix
    L: TriMatrix
    witness: tuple | None = None


def _l_block(n: int) -> TriMatrix:
    return to_matrix(l_array(max(n, 2)), n)


def verify_conjugation(a, n: int) -> ConjugationCheck:
    """Check ``H = L A L^t`` exactly on ``n x n`` blocks."""
    a = _as_seq(a)
    b = transform_binomial(a, 2 * n - 1) if n else []
    H = hankel_matrix(b, n)
    A = tph_matrix(a, n)
    L = _l_block(n)
    rhs = L @ A @ L.T
    witness = first_difference(H, rhs)
    return ConjugationCheck(witness is None, H, A, L, witness)


def hankel_ldu(a, n: int) -> LDU:
    """LDLᵀ of the Hankel matrix of the 𝔹-transform of ``a``."""
    a = _as_seq(a)
    b = transform_binomial(a, 2 * n - 1) if n else []
    return ldu(hankel_matrix(b, n))


def tph_ldu(a, n: int) -> LDU:
    """LDLᵀ of ``A`` obtained as ``(L^{-1} 𝓛, D)`` from the factorization of ``H``."""
    a = _as_seq(a)
    h = hankel_ldu(a, n)
    factor = _l_block(n).inverse() @ h.L
    result = LDU(factor, h.D)
    witness = first_difference(result.reconstruct(), tph_matrix(a, n))
    if witness is not None:
        raise ArithmeticError(f"(L^-1 𝓛) D (L^-1 𝓛)^t does not reconstruct A: {witness}")
    return result


def ldu_of(values: Sequence[Sequence]) -> LDU:
    return ldu(SymMatrix(values))
