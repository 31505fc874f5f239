"""Polynomial calculus for anti-commuting pairs of complex matrices.

If AB = -BA then (A + B)^2 = A^2 + B^2, and splitting f into even and odd parts,
f(z) = k(z^2) + z l(z^2), gives

    f(A + B) = k(A^2 + B^2) + (A + B) l(A^2 + B^2).

Applied to f(z) = z^n this yields the Pauli-Pascal triangle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter, NotAnticommuting, ShapeMismatch

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

ANTICOMMUTE_RTOL = 1e-12
MAX_PASCAL_ROW = 32


@dataclass(frozen=True)
class SeriesSplit:
    """f(z) = k(z^2) + l(z^2) z, coefficients in increasing degree."""

    k: np.ndarray
    l: np.ndarray

    def __call__(self, z):
        z2 = z * z
        return np.polynomial.polynomial.polyval(z2, self.k) + np.polynomial.polynomial.polyval(z2, self.l) * z


def split_series(coeffs) -> SeriesSplit:
    c = np.asarray(coeffs, dtype=complex)
    k = c[0::2]
    l = c[1::2] if c.size > 1 else np.zeros(1, dtype=complex)
    return SeriesSplit(k, l)


def matrix_horner(coeffs, X: np.ndarray) -> np.ndarray:
    """sum coeffs[j] X^j by Horner's rule."""
    n = X.shape[0]
    out = np.zeros((n, n), dtype=complex)
    eye = np.eye(n, dtype=complex)
    for c in np.asarray(coeffs, dtype=complex)[::-1]:
        out = out @ X + c * eye
    return out


def anticommute(A: np.ndarray, B: np.ndarray, rtol: float = ANTICOMMUTE_RTOL) -> bool:
    scale = np.linalg.norm(A) * np.linalg.norm(B)
    return bool(np.linalg.norm(A @ B + B @ A) <= rtol * scale)


def apply_anticommuting_pair(coeffs, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """f(A + B) = k(A^2 + B^2) + (A + B) l(A^2 + B^2) for a polynomial f."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape != B.shape:
        raise ShapeMismatch(f"need equal square matrices, got {A.shape} and {B.shape}")
    if not anticommute(A, B):
        raise NotAnticommuting("AB + BA is not zero")
    split = split_series(coeffs)
    Q = A @ A + B @ B
    return matrix_horner(split.k, Q) + (A + B) @ matrix_horner(split.l, Q)


def pauli_pascal_row(n: int) -> list[int]:
    """Coefficients c[j] of A^(n-j) B^j in (A + B)^n for anti-commuting A, B.

    (A + B)^n = (A + B)^(n mod 2) (A^2 + B^2)^(n // 2), and A^2, B^2 commute
    with each other and with A and B, so the square factor expands
    binomially; B then moves right through even powers of A.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or not 0 <= n <= MAX_PASCAL_ROW:
        raise InvalidParameter(f"row index must be an integer in 0..{MAX_PASCAL_ROW}, got {n!r}")
    half = n // 2
    row = [0] * (n + 1)
    for i in range(half + 1):
        c = math.comb(half, i)
        if n % 2 == 0:
            row[2 * i] += c
        else:
            row[2 * i] += c  # A * A^(2(half-i)) B^(2i)
            row[2 * i + 1] += c  # B * A^(2(half-i)) B^(2i) = A^(2(half-i)) B^(2i+1)
    return row


def pascal_row_by_words(n: int, A: np.ndarray = SIGMA_X, B: np.ndarray = SIGMA_Y) -> list[int]:
    """Brute-force row: expand (A + B)^n into all 2^n words with matrices.

    Each word is a signed copy of the normal-ordered A^(n-j) B^j; the sign is
    read off by projecting the word onto it.
    """
    row = [0.0] * (n + 1)
    power = [np.linalg.matrix_power(A, e) for e in range(n + 1)]
    powerB = [np.linalg.matrix_power(B, e) for e in range(n + 1)]
    for word in itertools.product((0, 1), repeat=n):
        j = sum(word)
        prod = np.eye(A.shape[0], dtype=complex)
        for letter in word:
            prod = prod @ (B if letter else A)
        ref = power[n - j] @ powerB[j]
        row[j] += (np.vdot(ref, prod) / np.vdot(ref, ref)).real
    return [int(round(c)) for c in row]


def random_anticommuting_pair(rng: np.random.Generator, scale: float = 1.0):
    """s U sx U^H and t U sy U^H for a random unitary U and reals s, t."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    U = q * (np.diag(r) / np.abs(np.diag(r)))
    s, t = rng.uniform(-scale, scale, size=2)
    return s * U @ SIGMA_X @ U.conj().T, t * U @ SIGMA_Y @ U.conj().T
