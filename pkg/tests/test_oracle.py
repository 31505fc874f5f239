import math

import numpy as np

from dqcalc.algebra import DualQuaternion, Quaternion
from dqcalc.functions import ValidPolynomial
from dqcalc.oracle import kl_split_poly, nc_derivative, poly_eval_dq, poly_eval_quaternion, taylor_exp
from dqcalc.verify import random_dq, random_quaternion, rel_defect

I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)


def test_poly_eval_examples():
    eta = DualQuaternion(Quaternion(0.5, 1, 2, 3), Quaternion(-1, 4, 5, 6))
    x = ValidPolynomial.from_terms([(1, 0, 1.0)])
    assert poly_eval_dq(x, eta) == DualQuaternion.scalar(0.5, -1.0)

    iy2 = ValidPolynomial.from_terms([(0, 2, 1.0)])
    assert rel_defect(poly_eval_dq(iy2, DualQuaternion(I, J)), DualQuaternion.scalar(-1.0)) == 0.0

    # |z|^2 = x^2 - (iy)^2 evaluates to S^2 - V^2 = (eta conj(eta) + conj(eta) eta)/2
    p = ValidPolynomial.from_terms([(2, 0, 1.0), (0, 2, -1.0)])
    rng = np.random.default_rng(0)
    for _ in range(10):
        eta = random_dq(rng)
        c = eta.conj()
        assert rel_defect(poly_eval_dq(p, eta), (eta * c + c * eta) * 0.5) <= 1e-15


def test_centrality_of_scalar_part():
    rng = np.random.default_rng(1)
    for _ in range(100):
        p = ValidPolynomial.random(rng)
        eta = random_dq(rng)
        assert rel_defect(poly_eval_dq(p, eta, v_first=True), poly_eval_dq(p, eta)) <= 1e-13


def test_nc_derivative_examples():
    rng = np.random.default_rng(2)
    A, B = random_quaternion(rng), random_quaternion(rng)
    sq = ValidPolynomial.from_univariate([0, 0, 1])
    assert rel_defect(nc_derivative(sq, A, B), A * B + B * A) <= 1e-15

    # i^2 j + i j i + j i^2 = -j + j - j
    cube = ValidPolynomial.from_univariate([0, 0, 0, 1])
    assert rel_defect(nc_derivative(cube, I, J), -J) <= 1e-15

    assert nc_derivative(ValidPolynomial.constant(1.0), A, B) == Quaternion()


def test_nc_derivative_against_finite_difference():
    rng = np.random.default_rng(3)
    step = 1e-6
    for _ in range(20):
        p = ValidPolynomial.random(rng, 6)
        A, B = random_quaternion(rng), random_quaternion(rng)
        fd = (poly_eval_quaternion(p, A + B * step) - poly_eval_quaternion(p, A - B * step)) / (2 * step)
        assert rel_defect(nc_derivative(p, A, B), fd) <= 1e-7


def test_eq7_consistency():
    rng = np.random.default_rng(4)
    for _ in range(100):
        p = ValidPolynomial.random(rng)
        A, B = random_quaternion(rng), random_quaternion(rng)
        rhs = DualQuaternion(poly_eval_quaternion(p, A), nc_derivative(p, A, B))
        assert rel_defect(poly_eval_dq(p, DualQuaternion(A, B)), rhs) <= 1e-10


def test_taylor_exp_examples():
    assert taylor_exp(DualQuaternion(), 1) == DualQuaternion.scalar(1.0)
    assert abs(taylor_exp(DualQuaternion.scalar(1.0), 40).real.w - math.e) <= 1e-15
    eta = DualQuaternion(I * math.pi, J)
    assert rel_defect(taylor_exp(eta, 40), DualQuaternion.scalar(-1.0)) <= 1e-12


def test_kl_split():
    k, l = kl_split_poly([0, 0, 1])
    assert list(k) == [0, 1] and list(l) == [0]
    k, l = kl_split_poly([0, 1, 0, 1])
    assert list(k) == [0, 0] and list(l) == [1, 1]
    k, l = kl_split_poly([1, 1, 1, 1])
    assert list(k) == [1, 1] and list(l) == [1, 1]

    rng = np.random.default_rng(5)
    c = rng.uniform(-1, 1, 9)
    k, l = kl_split_poly(c)
    P = np.polynomial.polynomial.polyval
    for z in rng.normal(size=50) + 1j * rng.normal(size=50):
        assert abs(P(z * z, k) + P(z * z, l) * z - P(z, c)) <= 1e-12 * (1 + abs(P(z, c)))
