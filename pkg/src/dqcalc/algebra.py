"""Quaternions, dual numbers and dual quaternions over double precision.

All values are immutable. The basis relations are i^2 = j^2 = k^2 = ijk = -1
for quaternions and eps^2 = 0 for the dual unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

Real = Union[int, float]

# |a1| below this multiple of (1 + |A|) is treated as a vanishing vector part.
ZERO_VECTOR_RTOL = 1e-12


@dataclass(frozen=True)
class Vector3:
    """A 3-vector, identified with the pure quaternion xi + yj + zk."""

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __add__(self, other: Vector3) -> Vector3:
        return Vector3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vector3) -> Vector3:
        return Vector3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Vector3:
        return Vector3(-self.x, -self.y, -self.z)

    def __mul__(self, s: Real) -> Vector3:
        return Vector3(s * self.x, s * self.y, s * self.z)

    __rmul__ = __mul__

    def __truediv__(self, s: Real) -> Vector3:
        return Vector3(self.x / s, self.y / s, self.z / s)

    def dot(self, other: Vector3) -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: Vector3) -> Vector3:
        return Vector3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def to_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Quaternion:
    """The quaternion w + xi + yj + zk."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_parts(cls, scalar: Real, vector: Vector3) -> Quaternion:
        return cls(float(scalar), vector.x, vector.y, vector.z)

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> Vector3:
        return Vector3(self.x, self.y, self.z)

    def __add__(self, other: Quaternion | Real) -> Quaternion:
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other: Quaternion | Real) -> Quaternion:
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __rsub__(self, other: Real) -> Quaternion:
        return Quaternion(other - self.w, -self.x, -self.y, -self.z)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: Quaternion | Vector3 | Real) -> Quaternion:
        if isinstance(other, (int, float)):
            return Quaternion(other * self.w, other * self.x, other * self.y, other * self.z)
        if isinstance(other, Vector3):
            other = other.as_quaternion()
        return quat_mul(self, other)

    def __rmul__(self, other: Vector3 | Real) -> Quaternion:
        if isinstance(other, Vector3):
            return quat_mul(other.as_quaternion(), self)
        return Quaternion(other * self.w, other * self.x, other * self.y, other * self.z)

    def __truediv__(self, s: Real) -> Quaternion:
        return Quaternion(self.w / s, self.x / s, self.y / s, self.z / s)

    def conj(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm2())

    __abs__ = norm

    def inverse(self) -> Quaternion:
        n2 = self.norm2()
        if n2 == 0.0:
            from .errors import SingularInput

            raise SingularInput("zero quaternion has no inverse")
        return self.conj() / n2

    def to_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def to_dict(self) -> dict[str, float]:
        return {"w": self.w, "x": self.x, "y": self.y, "z": self.z}

    @classmethod
    def from_dict(cls, d: dict) -> Quaternion:
        return cls(*(float(d[key]) for key in "wxyz"))


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


@dataclass(frozen=True)
class DualNumber:
    """a + eps*b with eps^2 = 0."""

    a: float = 0.0
    b: float = 0.0

    def __add__(self, other: DualNumber | Real) -> DualNumber:
        if isinstance(other, (int, float)):
            return DualNumber(self.a + other, self.b)
        return DualNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: DualNumber | Real) -> DualNumber:
        if isinstance(other, (int, float)):
            return DualNumber(self.a - other, self.b)
        return DualNumber(self.a - other.a, self.b - other.b)

    def __neg__(self) -> DualNumber:
        return DualNumber(-self.a, -self.b)

    def __mul__(self, other: DualNumber | Real) -> DualNumber:
        if isinstance(other, (int, float)):
            return DualNumber(other * self.a, other * self.b)
        return DualNumber(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def conj(self) -> DualNumber:
        # real dual numbers are self-conjugate
        return self

    def to_dict(self) -> dict[str, float]:
        return {"a": self.a, "b": self.b}


@dataclass(frozen=True)
class DualQuaternion:
    """A + eps*B for quaternions A (real part) and B (dual part)."""

    real: Quaternion = Quaternion()
    dual: Quaternion = Quaternion()

    @classmethod
    def from_components(cls, values) -> DualQuaternion:
        """Build from 8 numbers: (w, x, y, z) of A followed by those of B."""
        v = [float(c) for c in values]
        if len(v) != 8:
            raise ValueError(f"expected 8 components, got {len(v)}")
        return cls(Quaternion(*v[:4]), Quaternion(*v[4:]))

    @classmethod
    def scalar(cls, a: Real, b: Real = 0.0) -> DualQuaternion:
        return cls(Quaternion(float(a)), Quaternion(float(b)))

    def __add__(self, other: DualQuaternion | Real) -> DualQuaternion:
        if isinstance(other, (int, float)):
            return DualQuaternion(self.real + other, self.dual)
        return DualQuaternion(self.real + other.real, self.dual + other.dual)

    __radd__ = __add__

    def __sub__(self, other: DualQuaternion | Real) -> DualQuaternion:
        if isinstance(other, (int, float)):
            return DualQuaternion(self.real - other, self.dual)
        return DualQuaternion(self.real - other.real, self.dual - other.dual)

    def __rsub__(self, other: Real) -> DualQuaternion:
        return DualQuaternion(other - self.real, -self.dual)

    def __neg__(self) -> DualQuaternion:
        return DualQuaternion(-self.real, -self.dual)

    def __mul__(self, other: DualQuaternion | Real) -> DualQuaternion:
        if isinstance(other, (int, float)):
            return DualQuaternion(self.real * other, self.dual * other)
        return dq_mul(self, other)

    def __rmul__(self, other: Real) -> DualQuaternion:
        return DualQuaternion(self.real * other, self.dual * other)

    def __truediv__(self, s: Real) -> DualQuaternion:
        return DualQuaternion(self.real / s, self.dual / s)

    def conj(self) -> DualQuaternion:
        return DualQuaternion(self.real.conj(), self.dual.conj())

    def components(self) -> tuple[float, ...]:
        return self.real.to_tuple() + self.dual.to_tuple()

    def norm(self) -> float:
        """Euclidean norm of the 8 components (not the dual-number modulus)."""
        return math.sqrt(self.real.norm2() + self.dual.norm2())

    def to_dict(self) -> dict:
        return {"real": self.real.to_dict(), "dual": self.dual.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> DualQuaternion:
        return cls(Quaternion.from_dict(d["real"]), Quaternion.from_dict(d["dual"]))


def dq_mul(eta: DualQuaternion, zeta: DualQuaternion) -> DualQuaternion:
    """(A + eps B)(C + eps D) = AC + eps(AD + BC)."""
    A, B = eta.real, eta.dual
    C, D = zeta.real, zeta.dual
    return DualQuaternion(quat_mul(A, C), quat_mul(A, D) + quat_mul(B, C))


def conj(value):
    """Conjugate of a Quaternion, DualNumber or DualQuaternion."""
    return value.conj()


def is_zero_vector(a1: Vector3, scale: float) -> bool:
    """True when |a1| <= 1e-12 * (1 + scale)."""
    return a1.norm() <= ZERO_VECTOR_RTOL * (1.0 + scale)


@dataclass(frozen=True)
class DecomposedDual:
    """Split of A + eps B into a0 + a1 and b0 + b1 + b2.

    ``b1`` is the part of the dual vector parallel to ``a1`` and ``b2`` the
    perpendicular part. When ``a1`` vanishes the whole dual vector is put in
    ``b1`` and ``b2`` is zero.
    """

    a0: float
    a1: Vector3
    b0: float
    b1: Vector3
    b2: Vector3
    a1_is_zero: bool = False

    @property
    def B1(self) -> Quaternion:
        return Quaternion.from_parts(self.b0, self.b1)

    @property
    def A(self) -> Quaternion:
        return Quaternion.from_parts(self.a0, self.a1)

    @property
    def B(self) -> Quaternion:
        return Quaternion.from_parts(self.b0, self.b1 + self.b2)

    def reassemble(self) -> DualQuaternion:
        return DualQuaternion(self.A, self.B)


def decompose(eta: DualQuaternion) -> DecomposedDual:
    A, B = eta.real, eta.dual
    a1, b = A.vector, B.vector
    if is_zero_vector(a1, A.norm()):
        return DecomposedDual(A.w, a1, B.w, b, Vector3(), a1_is_zero=True)
    b1 = a1 * (b.dot(a1) / a1.dot(a1))
    return DecomposedDual(A.w, a1, B.w, b1, b - b1)
