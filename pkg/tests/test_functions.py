import cmath
import json
import math

import numpy as np
import pytest

from dqcalc.errors import DomainError, InvalidParameter
from dqcalc.functions import (
    ValidFunction,
    ValidPolynomial,
    builtin,
    cayley_function,
    check_valid,
    eval_g,
    eval_h,
    exp_function,
    poly_partials,
    power_function,
)


def square():
    return ValidPolynomial.from_univariate([0, 0, 1]).to_valid_function()


def sample_points(rng, n, radius=3.0, avoid=None):
    pts = []
    while len(pts) < n:
        z = complex(*rng.uniform(-radius, radius, 2))
        if abs(z) <= radius and (avoid is None or avoid(z)):
            pts.append(z)
    return pts


def domain_samples(f, rng, n=200):
    return sample_points(rng, n, avoid=lambda z: f.in_domain(z) and abs(1 - z) > 0.1 and abs(z) > 0.1)


BUILTINS = {
    "exp": exp_function(),
    "pow-0.5": power_function(0.5),
    "pow-1.7": power_function(-1.7),
    "cayley": cayley_function(),
    "poly": ValidPolynomial.random(np.random.default_rng(9)).to_valid_function(),
}


def test_g_examples():
    f = exp_function()
    assert math.isclose(eval_g(f, 1j * math.pi), -1.0, rel_tol=1e-15)
    assert math.isclose(eval_g(f, 1.0), math.e, rel_tol=1e-15)
    # (1+2i)^2 = -3 + 4i, so g = -3
    assert eval_g(square(), 1 + 2j) == -3.0


def test_h_examples():
    f = exp_function()
    x, y = 0.3, 1.1
    assert math.isclose(eval_h(f, complex(x, y)), math.exp(x) * math.sin(y) / y, rel_tol=1e-14)
    assert eval_h(f, 0) == 1.0
    # ((x+iy)^2 - (x-iy)^2)/(2iy) = 2x
    for z in (0.7 + 0.2j, -1.5 + 3j, 2.0):
        assert math.isclose(eval_h(square(), z), 2 * z.real, rel_tol=1e-14)


def test_h_difference_quotient_path():
    f = exp_function()
    bare = ValidFunction(eval=f.eval, fx=f.fx, fiy=f.fiy)
    assert math.isclose(eval_h(bare, complex(0.4, 0.9)), math.exp(0.4) * math.sin(0.9) / 0.9, rel_tol=1e-14)
    # below the switch threshold h is fiy on the axis
    assert eval_h(bare, complex(0.4, 1e-10)) == cmath.exp(0.4).real


def test_domain_errors():
    with pytest.raises(DomainError):
        eval_g(power_function(0.5), -2.0)
    with pytest.raises(DomainError):
        eval_h(cayley_function(), 1.0)


def test_builtin_values():
    assert builtin("exp")(0) == 1
    assert abs(builtin("pow", -1)(2j) - (-0.5j)) <= 1e-16
    assert builtin("cayley")(0) == 1
    p = ValidPolynomial.identity()
    assert builtin("polynomial", p)(2 + 3j) == 2 + 3j
    with pytest.raises(InvalidParameter):
        builtin("pow", math.inf)
    with pytest.raises(InvalidParameter):
        builtin("sin")


def test_check_valid():
    rng = np.random.default_rng(0)
    pts = sample_points(rng, 100)
    assert check_valid(exp_function(), pts).passed

    bad = ValidFunction(eval=lambda z: 1j * z, fx=lambda z: 1j, fiy=lambda z: 1j)
    report = check_valid(bad, pts)
    assert not report.passed
    # conj(iz) = -i conj(z), so the defect is |2i conj(z)| = 2|z|
    assert math.isclose(report.max_defect, max(2 * abs(z) for z in pts), rel_tol=1e-14)

    p = ValidPolynomial.random(rng)
    assert check_valid(p.to_valid_function(), pts).passed


def test_poly_partials_examples():
    fx, fiy = poly_partials(ValidPolynomial.from_terms([(2, 0, 1.0)]))
    assert fx == ValidPolynomial.from_terms([(1, 0, 2.0)])
    assert fiy == ValidPolynomial.zero()

    fx, fiy = poly_partials(ValidPolynomial.from_terms([(0, 2, 1.0)]))
    assert fx == ValidPolynomial.zero()
    assert fiy == ValidPolynomial.from_terms([(0, 1, 2.0)])

    fx, fiy = poly_partials(ValidPolynomial.from_terms([(1, 1, 1.0)]))
    assert fx == ValidPolynomial.from_terms([(0, 1, 1.0)])
    assert fiy == ValidPolynomial.from_terms([(1, 0, 1.0)])


def test_poly_partials_match_finite_differences():
    rng = np.random.default_rng(5)
    h = 1e-6
    for _ in range(20):
        p = ValidPolynomial.random(rng, 5)
        fx, fiy = p.partials()
        z = complex(*rng.uniform(-1, 1, 2))
        dx = (p(z + h) - p(z - h)) / (2 * h)
        dy = (p(z + 1j * h) - p(z - 1j * h)) / (2 * h)
        assert abs(fx(z) - dx) <= 1e-7
        assert abs(fiy(z) - (-1j) * dy) <= 1e-7


def test_poly_univariate_and_json():
    p = ValidPolynomial.from_univariate([1, -2, 0.5, 3])
    for z in (0.3 + 0.1j, -2 + 1j):
        assert abs(p(z) - (1 - 2 * z + 0.5 * z**2 + 3 * z**3)) <= 1e-13
    assert ValidPolynomial.from_json(json.loads(json.dumps(p.to_json()))) == p
    with pytest.raises(InvalidParameter):
        ValidPolynomial.from_json({"terms": [{"m": 1}]})


def test_poly_h_matches_difference_quotient():
    rng = np.random.default_rng(6)
    for _ in range(50):
        p = ValidPolynomial.random(rng)
        z = complex(*rng.uniform(-1.5, 1.5, 2))
        dq = ((p(z) - p(z.conjugate())) / (2j * z.imag)).real
        assert abs(p.h(z) - dq) <= 1e-11 * (1 + abs(p(z)))


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtin_properties(name):
    f = BUILTINS[name]
    rng = np.random.default_rng(1)
    pts = domain_samples(f, rng)
    assert check_valid(f, pts).passed
    for z in pts:
        fz = f(z)
        g, h = eval_g(f, z), eval_h(f, z)
        assert abs((f(z) + f(z.conjugate())).imag) / 2 <= 1e-12 * (1 + abs(fz))
        assert eval_g(f, z.conjugate()) == g
        assert eval_h(f, z.conjugate()) == h
        assert abs(fz - (g + 1j * z.imag * h)) <= 1e-12 * (1 + abs(fz))


@pytest.mark.parametrize("f", [exp_function(), power_function(0.5), power_function(-2.5)],
                         ids=["exp", "sqrt", "pow-2.5"])
def test_h_continuous_at_axis(f):
    bare = ValidFunction(eval=f.eval, fx=f.fx, fiy=f.fiy, in_domain=f.in_domain)
    for x in (0.5, 1.0, 2.0):
        axis = f.h_exact(complex(x))
        assert abs(eval_h(f, complex(x, 1e-7)) - axis) <= 1e-8
        assert abs(eval_h(bare, complex(x, 1e-7)) - axis) <= 1e-8
        assert math.isclose(axis, f.fiy(complex(x)).real, rel_tol=1e-14)


@pytest.mark.parametrize("name", ["exp", "pow-0.5", "pow-1.7", "cayley"])
def test_cauchy_riemann_witness(name):
    f = BUILTINS[name]
    rng = np.random.default_rng(2)
    step = 1e-6
    for z in domain_samples(f, rng, 50):
        assert abs(f.fx(z) - f.fiy(z)) <= 1e-10
        # analytic derivative against a central difference of f itself
        fd = (f(z + step) - f(z - step)) / (2 * step)
        assert abs(fd - f.fx(z)) <= 1e-6 * (1 + abs(f.fx(z)))
