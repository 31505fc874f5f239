"""Valid complex functions: f(conj z) = conj f(z) on a conjugation-symmetric domain.

A valid function is carried around together with its partial derivatives
``fx = df/dx`` and ``fiy = -i df/dy``. From ``f`` alone we derive the two even,
real-valued functions

    g(x+iy) = (f(x+iy) + f(x-iy)) / 2
    h(x+iy) = (f(x+iy) - f(x-iy)) / (2iy),   h(x) = fiy(x)

so that f = g + iy*h.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional

import numpy as np

from .errors import DomainError, InvalidParameter

ComplexFn = Callable[[complex], complex]

# below |y| <= H_SWITCH_RTOL * (1 + |x|) the difference quotient for h is replaced by fiy(x)
H_SWITCH_RTOL = 1e-8
VALIDITY_RTOL = 1e-12


def _everywhere(z: complex) -> bool:
    return True


@dataclass(frozen=True)
class ValidFunction:
    """Evaluator bundle for a valid function.

    ``h_exact`` optionally supplies h in closed form, bypassing the difference
    quotient and its cancellation near the real axis.
    """

    eval: ComplexFn
    fx: ComplexFn
    fiy: ComplexFn
    in_domain: Callable[[complex], bool] = _everywhere
    h_exact: Optional[Callable[[complex], float]] = None
    name: str = "f"

    def __call__(self, z: complex) -> complex:
        return complex(self.eval(complex(z)))

    def check_domain(self, z: complex) -> None:
        if not self.in_domain(complex(z)):
            raise DomainError(f"{z!r} is outside the domain of {self.name}")


def eval_g(f: ValidFunction, z: complex) -> float:
    z = complex(z)
    f.check_domain(z)
    w = f(z) + f(z.conjugate())
    return 0.5 * w.real


def eval_h(f: ValidFunction, z: complex) -> float:
    z = complex(z)
    f.check_domain(z)
    if f.h_exact is not None:
        return float(f.h_exact(z))
    x, y = z.real, z.imag
    if abs(y) <= H_SWITCH_RTOL * (1.0 + abs(x)):
        return complex(f.fiy(complex(x))).real
    d = f(z) - f(z.conjugate())
    return (d / (2j * y)).real


# ---------------------------------------------------------------------------
# polynomials in x and iy


class ValidPolynomial:
    """sum r[m, n] * x**m * (iy)**n with real coefficients r.

    Real coefficients are exactly what makes such a polynomial valid, so the
    coefficient array is always stored as float64.
    """

    def __init__(self, coeffs):
        c = np.atleast_2d(np.asarray(coeffs, dtype=float))
        if c.ndim != 2:
            raise InvalidParameter("coefficient array must be 2-D")
        if not np.all(np.isfinite(c)):
            raise InvalidParameter("coefficients must be finite")
        c = c.copy()
        c.flags.writeable = False
        self.coeffs = c

    # -- construction

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, float]]) -> ValidPolynomial:
        terms = list(terms)
        if not terms:
            return cls.zero()
        M = max(m for m, _, _ in terms) + 1
        N = max(n for _, n, _ in terms) + 1
        c = np.zeros((M, N))
        for m, n, r in terms:
            if m < 0 or n < 0:
                raise InvalidParameter(f"negative exponent in term ({m}, {n})")
            c[m, n] += r
        return cls(c)

    @classmethod
    def zero(cls) -> ValidPolynomial:
        return cls([[0.0]])

    @classmethod
    def constant(cls, r: float) -> ValidPolynomial:
        return cls([[float(r)]])

    @classmethod
    def identity(cls) -> ValidPolynomial:
        """The polynomial z = x + iy."""
        return cls([[0.0, 1.0], [1.0, 0.0]])

    @classmethod
    def conjugation(cls) -> ValidPolynomial:
        """The polynomial conj(z) = x - iy."""
        return cls([[0.0, -1.0], [1.0, 0.0]])

    @classmethod
    def from_univariate(cls, c) -> ValidPolynomial:
        """sum c[k] z**k, expanded binomially in x and iy."""
        c = np.asarray(c, dtype=float)
        d = len(c)
        out = np.zeros((d, d))
        for k, ck in enumerate(c):
            for n in range(k + 1):
                out[k - n, n] += ck * math.comb(k, n)
        return cls(out)

    @classmethod
    def random(cls, rng: np.random.Generator, max_degree: int = 8) -> ValidPolynomial:
        """Total degree uniform in 0..max_degree, coefficients uniform in [-1, 1]."""
        d = int(rng.integers(0, max_degree + 1))
        c = rng.uniform(-1.0, 1.0, size=(d + 1, d + 1))
        m, n = np.indices(c.shape)
        c[m + n > d] = 0.0
        return cls(c)

    # -- JSON

    def to_json(self) -> dict:
        terms = [
            {"m": int(m), "n": int(n), "r": float(self.coeffs[m, n])}
            for m, n in zip(*np.nonzero(self.coeffs))
        ]
        return {"terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> ValidPolynomial:
        try:
            terms = [(int(t["m"]), int(t["n"]), float(t["r"])) for t in data["terms"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParameter(f"malformed polynomial JSON: {exc}") from exc
        return cls.from_terms(terms)

    @classmethod
    def load(cls, path) -> ValidPolynomial:
        return cls.from_json(json.loads(Path(path).read_text()))

    # -- algebra

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs.shape

    def terms(self):
        """Yield (m, n, r) for the nonzero coefficients."""
        for m, n in zip(*np.nonzero(self.coeffs)):
            yield int(m), int(n), float(self.coeffs[m, n])

    def _padded(self, other: ValidPolynomial):
        M = max(self.shape[0], other.shape[0])
        N = max(self.shape[1], other.shape[1])
        a = np.zeros((M, N))
        b = np.zeros((M, N))
        a[: self.shape[0], : self.shape[1]] = self.coeffs
        b[: other.shape[0], : other.shape[1]] = other.coeffs
        return a, b

    def __add__(self, other: ValidPolynomial) -> ValidPolynomial:
        a, b = self._padded(other)
        return ValidPolynomial(a + b)

    def __sub__(self, other: ValidPolynomial) -> ValidPolynomial:
        a, b = self._padded(other)
        return ValidPolynomial(a - b)

    def __mul__(self, other) -> ValidPolynomial:
        if isinstance(other, (int, float)):
            return ValidPolynomial(other * self.coeffs)
        a, b = self.coeffs, other.coeffs
        out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1))
        for m, n in zip(*np.nonzero(a)):
            out[m : m + b.shape[0], n : n + b.shape[1]] += a[m, n] * b
        return ValidPolynomial(out)

    def __rmul__(self, s: float) -> ValidPolynomial:
        return ValidPolynomial(s * self.coeffs)

    def __neg__(self) -> ValidPolynomial:
        return ValidPolynomial(-self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ValidPolynomial):
            return NotImplemented
        a, b = self._padded(other)
        return bool(np.array_equal(a, b))

    def __repr__(self) -> str:
        return f"ValidPolynomial({self.coeffs.tolist()!r})"

    def conj(self) -> ValidPolynomial:
        """The polynomial z -> conj(p(z)), i.e. iy -> -iy."""
        sign = (-1.0) ** np.arange(self.shape[1])
        return ValidPolynomial(self.coeffs * sign)

    def partials(self) -> tuple[ValidPolynomial, ValidPolynomial]:
        return poly_partials(self)

    # -- evaluation

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        x, iy = z.real, 1j * z.imag
        total = 0j
        power = 1 + 0j
        # Horner in x for each fixed power of iy
        for n in range(self.shape[1]):
            col = self.coeffs[:, n]
            acc = 0.0
            for r in col[::-1]:
                acc = acc * x + r
            total += acc * power
            power *= iy
        return total

    def h(self, z: complex) -> float:
        """Closed-form h: the odd-in-iy terms divided by iy."""
        z = complex(z)
        x, y2 = z.real, z.imag * z.imag
        total = 0.0
        ypow = 1.0  # (iy)^(n-1) for odd n is (-y^2)^((n-1)/2)
        for n in range(1, self.shape[1], 2):
            col = self.coeffs[:, n]
            acc = 0.0
            for r in col[::-1]:
                acc = acc * x + r
            total += acc * ypow
            ypow *= -y2
        return total

    def to_valid_function(self, name: str = "poly") -> ValidFunction:
        fx, fiy = poly_partials(self)
        return ValidFunction(eval=self, fx=fx, fiy=fiy, h_exact=self.h, name=name)


def poly_partials(p: ValidPolynomial) -> tuple[ValidPolynomial, ValidPolynomial]:
    """(d/dx p, -i d/dy p), both again valid polynomials."""
    c = p.coeffs
    M, N = c.shape
    if M > 1:
        fx = c[1:, :] * np.arange(1, M)[:, None]
    else:
        fx = np.zeros((1, N))
    # -i d/dy (iy)^n = n (iy)^(n-1)
    if N > 1:
        fiy = c[:, 1:] * np.arange(1, N)[None, :]
    else:
        fiy = np.zeros((M, 1))
    return ValidPolynomial(fx), ValidPolynomial(fiy)


# ---------------------------------------------------------------------------
# built-in analytic functions


def _sinc(t: float) -> float:
    """sin(t)/t with sinc(0) = 1."""
    return float(np.sinc(t / math.pi))


def exp_function() -> ValidFunction:
    def h(z: complex) -> float:
        return math.exp(z.real) * _sinc(abs(z.imag))

    return ValidFunction(eval=cmath.exp, fx=cmath.exp, fiy=cmath.exp, h_exact=h, name="exp")


def _not_on_negative_axis(z: complex) -> bool:
    return not (z.imag == 0.0 and z.real <= 0.0)


def power_function(alpha: float) -> ValidFunction:
    """Principal value z**alpha on C minus (-inf, 0]."""
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise InvalidParameter(f"exponent must be finite, got {alpha}")

    def f(z: complex) -> complex:
        return complex(z) ** alpha

    def df(z: complex) -> complex:
        return alpha * complex(z) ** (alpha - 1.0)

    def h(z: complex) -> float:
        # Im(z^a)/y = (a/r) r^a sinc(a*theta)/sinc(theta), smooth across y = 0
        r = abs(z)
        theta = math.atan2(abs(z.imag), z.real)
        return alpha * r ** (alpha - 1.0) * _sinc(alpha * theta) / _sinc(theta)

    return ValidFunction(eval=f, fx=df, fiy=df, in_domain=_not_on_negative_axis, h_exact=h,
                         name=f"pow:{alpha!r}")


CAYLEY_POLE_TOL = 1e-12


def cayley_function() -> ValidFunction:
    """(1 + z)/(1 - z) on C minus {1}."""

    def f(z: complex) -> complex:
        return (1 + z) / (1 - z)

    def df(z: complex) -> complex:
        return 2 / (1 - z) ** 2

    def h(z: complex) -> float:
        return 2.0 / ((1.0 - z.real) ** 2 + z.imag * z.imag)

    def in_domain(z: complex) -> bool:
        return abs(1 - z) > CAYLEY_POLE_TOL

    return ValidFunction(eval=f, fx=df, fiy=df, in_domain=in_domain, h_exact=h, name="cayley")


def abs_function() -> ValidFunction:
    """|z|, valid and smooth away from 0 but not analytic."""

    def f(z: complex) -> complex:
        return complex(abs(z))

    def fx(z: complex) -> complex:
        return complex(z.real / abs(z))

    def fiy(z: complex) -> complex:
        return -1j * z.imag / abs(z)

    return ValidFunction(eval=f, fx=fx, fiy=fiy, in_domain=lambda z: z != 0,
                         h_exact=lambda z: 0.0, name="abs")


def builtin(name: str, arg=None) -> ValidFunction:
    """Look up a built-in valid function.

    ``name`` is one of ``exp``, ``pow`` (``arg`` is the exponent), ``cayley``
    or ``polynomial`` (``arg`` is a ValidPolynomial).
    """
    if name == "exp":
        return exp_function()
    if name == "pow":
        if arg is None:
            raise InvalidParameter("pow needs an exponent")
        return power_function(arg)
    if name == "cayley":
        return cayley_function()
    if name in ("polynomial", "poly"):
        if not isinstance(arg, ValidPolynomial):
            raise InvalidParameter("polynomial builtin needs a ValidPolynomial")
        return arg.to_valid_function()
    raise InvalidParameter(f"unknown builtin {name!r}")


# ---------------------------------------------------------------------------
# validity checking


@dataclass
class ValidityReport:
    max_defect: float
    passed: bool
    failures: list = field(default_factory=list)  # (z, defect) pairs over tolerance


def check_valid(f: ValidFunction, samples: Iterable[complex]) -> ValidityReport:
    max_defect = 0.0
    failures = []
    for z in samples:
        z = complex(z)
        fz = f(z)
        defect = abs(f(z.conjugate()) - fz.conjugate())
        max_defect = max(max_defect, defect)
        if defect > VALIDITY_RTOL * (1.0 + abs(fz)):
            failures.append((z, defect))
    return ValidityReport(max_defect, not failures, failures)
