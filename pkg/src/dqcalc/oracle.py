"""Brute-force evaluators used as ground truth for the closed-form calculus.

Nothing here goes through the decomposition of the dual part: polynomials are
evaluated by direct multiplication in the dual-quaternion algebra.
"""

from __future__ import annotations

import numpy as np

from .algebra import DualQuaternion, Quaternion, quat_mul
from .functions import ValidPolynomial


def scalar_and_vector_parts(eta: DualQuaternion) -> tuple[DualQuaternion, DualQuaternion]:
    """S = (eta + conj eta)/2 and V = (eta - conj eta)/2; S is central."""
    c = eta.conj()
    return (eta + c) * 0.5, (eta - c) * 0.5


def _powers(x: DualQuaternion, k: int) -> list[DualQuaternion]:
    out = [DualQuaternion.scalar(1.0)]
    for _ in range(k):
        out.append(out[-1] * x)
    return out


def poly_eval_dq(p: ValidPolynomial, eta: DualQuaternion, v_first: bool = False) -> DualQuaternion:
    """sum r[m,n] S^m V^n, substituting x -> S and iy -> V.

    ``v_first`` multiplies as V^n S^m instead; S is central so the two orders
    must agree.
    """
    S, V = scalar_and_vector_parts(eta)
    M, N = p.shape
    Sp = _powers(S, M - 1)
    Vp = _powers(V, N - 1)
    total = DualQuaternion()
    for m, n, r in p.terms():
        term = Vp[n] * Sp[m] if v_first else Sp[m] * Vp[n]
        total = total + term * r
    return total


def poly_eval_quaternion(p: ValidPolynomial, A: Quaternion) -> Quaternion:
    return poly_eval_dq(p, DualQuaternion(A)).real


def nc_derivative(p: ValidPolynomial, A: Quaternion, B: Quaternion) -> Quaternion:
    """d/dr p(A + rB) at r = 0, by the product rule over factor positions.

    Each monomial x^m (iy)^n becomes a word of m scalar-part factors and n
    vector-part factors; the derivative sums the words with one factor
    replaced by the matching part of B.
    """
    s_val, s_der = Quaternion(A.w), Quaternion(B.w)
    v_val, v_der = Quaternion.from_parts(0.0, A.vector), Quaternion.from_parts(0.0, B.vector)
    total = Quaternion()
    for m, n, r in p.terms():
        word = [(s_val, s_der)] * m + [(v_val, v_der)] * n
        for pos in range(len(word)):
            prod = Quaternion(1.0)
            for i, (val, der) in enumerate(word):
                prod = quat_mul(prod, der if i == pos else val)
            total = total + prod * r
    return total


def taylor_exp(eta: DualQuaternion, N: int = 40) -> DualQuaternion:
    """sum_{k=0}^{N} eta^k / k!."""
    if N < 1:
        raise ValueError("N must be at least 1")
    term = DualQuaternion.scalar(1.0)
    total = term
    for k in range(1, N + 1):
        term = (term * eta) / k
        total = total + term
    return total


def kl_split_poly(c) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients of k and l with p(z) = k(z^2) + l(z^2) z.

    ``c`` lists the coefficients of p in increasing degree.
    """
    c = np.asarray(c)
    k = c[0::2].copy()
    l = c[1::2].copy()
    if l.size == 0:
        l = np.zeros(1, dtype=c.dtype)
    return k, l
