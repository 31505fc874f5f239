"""Evaluating valid functions at quaternions and dual quaternions.

The core routine is :func:`apply`. For A + eps B with A = a0 + a1 and the dual
vector split into b1 (parallel to a1) and b2 (perpendicular),

    f(A + eps B) = f(A) + eps (fx(A) b0 + fiy(A) b1 + h(A) b2)

where f(A), fx(A), fiy(A) are quaternions obtained by lifting through the
complex point a0 + i|a1| and h(A) is a real scalar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import (
    DecomposedDual,
    DualNumber,
    DualQuaternion,
    Quaternion,
    Vector3,
    decompose,
    is_zero_vector,
)
from .errors import DomainError, InvalidParameter, NonCommuting, ShapeMismatch, SingularInput
from .functions import (
    ValidFunction,
    _sinc,
    cayley_function,
    eval_h,
    power_function,
)

COMMUTE_RTOL = 1e-10
SHAPE_RTOL = 1e-12


def _complexify(a0: float, a1: Vector3) -> complex:
    return complex(a0, a1.norm())


def _lift(func: Callable[[complex], complex], a0: float, a1: Vector3) -> Quaternion:
    """Quaternion value of a valid function given as a plain complex callable.

    With z = a0 + i|a1|, g(z) = Re f(z) and h(z) |a1| = Im f(z), so the
    quaternion g + h a1 is Re f(z) + Im f(z) * a1/|a1|.
    """
    n = a1.norm()
    if n == 0.0:
        return Quaternion(complex(func(complex(a0))).real)
    w = complex(func(complex(a0, n)))
    return Quaternion.from_parts(w.real, a1 * (w.imag / n))


def apply_quaternion(f: ValidFunction, A: Quaternion) -> Quaternion:
    a0, a1 = A.w, A.vector
    f.check_domain(_complexify(a0, a1))
    return _lift(f.eval, a0, a1)


def apply_dual_number(f, d: DualNumber, derivative: Optional[Callable[[float], float]] = None) -> DualNumber:
    """f(a + eps b) = f(a) + eps f'(a) b.

    ``f`` is either a ValidFunction (its ``fx`` supplies f') or a real
    callable, in which case ``derivative`` is required.
    """
    if isinstance(f, ValidFunction):
        f.check_domain(complex(d.a))
        return DualNumber(f(d.a).real, f.fx(complex(d.a)).real * d.b)
    if derivative is None:
        raise InvalidParameter("a plain callable needs its derivative")
    try:
        fa = float(f(d.a))
        dfa = float(derivative(d.a))
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise DomainError(f"{d.a!r} is outside the domain: {exc}") from exc
    if not (math.isfinite(fa) and math.isfinite(dfa)):
        raise DomainError(f"{d.a!r} is outside the domain")
    return DualNumber(fa, dfa * d.b)


def _commuting_part(f: ValidFunction, a0: float, a1: Vector3, b0: float, b1: Vector3):
    """f(A), and fx(A) b0 + fiy(A) b1, for B1 = b0 + b1 commuting with A."""
    fA = _lift(f.eval, a0, a1)
    dual = _lift(f.fx, a0, a1) * b0
    if b1.x or b1.y or b1.z:
        dual = dual + _lift(f.fiy, a0, a1) * b1
    return fA, dual


def apply_commuting(f: ValidFunction, eta: DualQuaternion) -> DualQuaternion:
    """f(A + eps B) for commuting A and B."""
    A, B = eta.real, eta.dual
    comm = (A * B - B * A).norm()
    if comm > COMMUTE_RTOL * (1.0 + A.norm()) * (1.0 + B.norm()):
        raise NonCommuting(f"|AB - BA| = {comm:.3g}")
    a0, a1 = A.w, A.vector
    f.check_domain(_complexify(a0, a1))
    fA, dual = _commuting_part(f, a0, a1, B.w, B.vector)
    return DualQuaternion(fA, dual)


def apply_anticommute(f: ValidFunction, a: Vector3, b1: Vector3, b2: Vector3) -> DualQuaternion:
    """f(a + eps b1 + eps b2) for pure a, with b1 parallel and b2 perpendicular to a."""
    scale = (1.0 + a.norm()) * (1.0 + b1.norm() + b2.norm())
    if a.cross(b1).norm() > SHAPE_RTOL * scale:
        raise ShapeMismatch("b1 is not parallel to a")
    if abs(b2.dot(a)) > SHAPE_RTOL * scale:
        raise ShapeMismatch("b2 is not perpendicular to a")
    head = apply_commuting(f, DualQuaternion(a.as_quaternion(), b1.as_quaternion()))
    h = eval_h(f, complex(0.0, a.norm()))
    return DualQuaternion(head.real, head.dual + b2.as_quaternion() * h)


def apply(f: ValidFunction, eta: DualQuaternion) -> DualQuaternion:
    """Evaluate a valid function at a dual quaternion."""
    d = decompose(eta)
    z = _complexify(d.a0, d.a1)
    f.check_domain(z)
    fA, dual = _commuting_part(f, d.a0, d.a1, d.b0, d.b1)
    if not d.a1_is_zero:
        dual = dual + d.b2.as_quaternion() * eval_h(f, z)
    return DualQuaternion(fA, dual)


# ---------------------------------------------------------------------------
# closed forms


def exp_dq(eta: DualQuaternion) -> DualQuaternion:
    d = decompose(eta)
    t = d.a1.norm()
    s = _sinc(t)
    scale = math.exp(d.a0)
    rot = Quaternion.from_parts(math.cos(t), d.a1 * s)
    real = rot * scale
    dual = (rot * d.B1 + d.b2.as_quaternion() * s) * scale
    return DualQuaternion(real, dual)


@dataclass(frozen=True)
class LogBranch:
    """Branch choice for :func:`log_dq`.

    ``t`` is the polar angle of (a0, |a1|) when a1 != 0 (None means the
    principal angle in [0, pi]). ``n`` fixes t = n*pi when a1 = 0 (None picks
    0 for a0 > 0 and 1 for a0 < 0). ``axis_fallback`` is used as the rotation
    axis when a1 = 0, n != 0 and b1 = 0; ``p`` is an extra dual vector,
    perpendicular to the axis, allowed only when n != 0.
    """

    t: Optional[float] = None
    n: Optional[int] = None
    axis_fallback: Vector3 = Vector3(0.0, 0.0, 1.0)
    p: Vector3 = Vector3()


@dataclass(frozen=True)
class LogResult:
    value: DualQuaternion
    t: float
    n: Optional[int]
    axis: Optional[Vector3]
    p: Vector3


ANGLE_TOL = 1e-9


def log_dq_detailed(eta: DualQuaternion, branch: LogBranch = LogBranch()) -> LogResult:
    """Like :func:`log_dq` but also reports the branch parameters used."""
    A, B = eta.real, eta.dual
    nA = A.norm()
    if nA <= 1e-12 * (1.0 + B.norm()):
        raise SingularInput("log of a dual quaternion with A = 0")
    d = decompose(eta)

    if not d.a1_is_zero:
        na1 = d.a1.norm()
        t0 = math.atan2(na1, d.a0)
        if branch.t is None:
            t = t0
        else:
            t = float(branch.t)
            if abs(math.cos(t) - d.a0 / nA) > ANGLE_TOL or abs(math.sin(t) - na1 / nA) > ANGLE_TOL:
                raise InvalidParameter(f"t = {t} is not a polar angle of ({d.a0}, {na1})")
        k = t / na1
        real = Quaternion.from_parts(math.log(nA), d.a1 * k)
        dual = (A.conj() * d.B1) / (nA * nA) + d.b2.as_quaternion() * k
        return LogResult(DualQuaternion(real, dual), t, None, None, Vector3())

    a0 = d.a0
    n = branch.n
    if n is None:
        n = 0 if a0 > 0 else 1
    n = int(n)
    if (n % 2 == 0) != (a0 > 0):
        raise InvalidParameter(f"n = {n} has the wrong parity for a0 = {a0}")
    nb1 = d.b1.norm()
    if nb1 > 0.0:
        axis = d.b1 / nb1
    else:
        axis_norm = branch.axis_fallback.norm()
        if axis_norm == 0.0:
            raise InvalidParameter("axis_fallback must be nonzero")
        axis = branch.axis_fallback / axis_norm
    p = branch.p
    if n == 0 and p.norm() != 0.0:
        raise InvalidParameter("p must be zero when n = 0")
    if abs(p.dot(axis)) > SHAPE_RTOL * (1.0 + p.norm()):
        raise InvalidParameter("p must be perpendicular to the rotation axis")
    real = Quaternion.from_parts(math.log(abs(a0)), axis * (n * math.pi))
    dual = d.B1 / a0 + p.as_quaternion()
    return LogResult(DualQuaternion(real, dual), n * math.pi, n, axis, p)


def log_dq(eta: DualQuaternion, branch: LogBranch = LogBranch()) -> DualQuaternion:
    """A logarithm of eta, i.e. a right inverse of :func:`exp_dq`."""
    return log_dq_detailed(eta, branch).value


POW_LIMIT_RTOL = 1e-8


def pow_dq(eta: DualQuaternion, alpha: float) -> DualQuaternion:
    """Principal power (A + eps B)**alpha for A off the half line (-inf, 0]."""
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise InvalidParameter(f"exponent must be finite, got {alpha}")
    d = decompose(eta)
    nA = eta.real.norm()
    if nA == 0.0 and alpha < 1:
        raise SingularInput(f"0 ** {alpha}")
    if d.a1_is_zero and d.a0 <= 0.0:
        raise DomainError(f"A = {d.a0} lies on (-inf, 0]")
    f = power_function(alpha)
    g = power_function(alpha - 1.0)
    Aa = _lift(f.eval, d.a0, d.a1)
    Aa1 = _lift(g.eval, d.a0, d.a1)
    dual = Aa1 * d.B1 * alpha
    if not d.a1_is_zero:
        na1 = d.a1.norm()
        if na1 <= POW_LIMIT_RTOL * (1.0 + nA):
            # Im(A^a)/Im(A) tends to a * A^(a-1), real in the limit
            ratio = alpha * Aa1.w
        else:
            ratio = (complex(d.a0, na1) ** alpha).imag / na1
        dual = dual + d.b2.as_quaternion() * ratio
    return DualQuaternion(Aa, dual)


def inv_dq(eta: DualQuaternion) -> DualQuaternion:
    """A^-1 - eps A^-1 B A^-1."""
    A, B = eta.real, eta.dual
    if A.norm2() == 0.0:
        raise SingularInput("A = 0 has no inverse")
    Ai = A.inverse()
    return DualQuaternion(Ai, -(Ai * B * Ai))


def cayley_forms(eta: DualQuaternion) -> tuple[DualQuaternion, DualQuaternion]:
    """Both closed forms of (1 + eta)/(1 - eta).

    The first splits the dual part along a1; the second sandwiches B between
    two copies of (1 - A)^-1.
    """
    A, B = eta.real, eta.dual
    one_minus = 1.0 - A
    if one_minus.norm() <= 1e-12:
        raise SingularInput("Cayley transform is singular at A = 1")
    d = decompose(eta)
    f = cayley_function()
    # (1 - A)^-2 via the quaternion lift of z -> (1 - z)^-2
    inv_sq = _lift(lambda z: 1.0 / (1.0 - z) ** 2, d.a0, d.a1)
    head = _lift(f.eval, d.a0, d.a1)
    split = DualQuaternion(
        head,
        inv_sq * d.B1 * 2.0 + d.b2.as_quaternion() * (2.0 / one_minus.norm2()),
    )
    inv = one_minus.inverse()
    sandwich = DualQuaternion((1.0 + A) * inv, inv * B * inv * 2.0)
    return split, sandwich


def cayley_dq(eta: DualQuaternion) -> DualQuaternion:
    return cayley_forms(eta)[0]


def dq_abs(eta: DualQuaternion) -> DualNumber:
    """|A| + eps Re(A conj(B))/|A|."""
    A, B = eta.real, eta.dual
    nA = A.norm()
    if nA == 0.0:
        raise SingularInput("|A + eps B| is not differentiable at A = 0")
    return DualNumber(nA, (A * B.conj()).w / nA)


# ---------------------------------------------------------------------------
# the screw (conjugation) route


@dataclass(frozen=True)
class ScrewFactorization:
    """eta = (1 + eps r) core (1 - eps r) with core's dual vector parallel to a1."""

    r: Vector3
    core: DualQuaternion

    def reassemble(self) -> DualQuaternion:
        return conjugate_by_translation(self.core, self.r)


def conjugate_by_translation(eta: DualQuaternion, r: Vector3) -> DualQuaternion:
    """(1 + eps r) eta (1 - eps r) = A + eps (B + rA - Ar)."""
    A = eta.real
    rq = r.as_quaternion()
    return DualQuaternion(A, eta.dual + rq * A - A * rq)


def screw_factor(eta: DualQuaternion) -> ScrewFactorization:
    A = eta.real
    a1, b = A.vector, eta.dual.vector
    if is_zero_vector(a1, A.norm()):
        return ScrewFactorization(Vector3(), eta)
    # r = (a1 b - b a1)/(4|a1|^2) = (a1 x b)/(2|a1|^2)
    r = a1.cross(b) / (2.0 * a1.dot(a1))
    return ScrewFactorization(r, conjugate_by_translation(eta, -r))


def apply_via_screw(f: ValidFunction, eta: DualQuaternion) -> DualQuaternion:
    """f(eta) computed by conjugating to the commuting case and back."""
    sf = screw_factor(eta)
    return conjugate_by_translation(apply_commuting(f, sf.core), sf.r)
