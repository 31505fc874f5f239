import math

import numpy as np
import pytest

from dqcalc.errors import InvalidParameter, NotAnticommuting, ShapeMismatch
from dqcalc.pauli import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    anticommute,
    apply_anticommuting_pair,
    matrix_horner,
    pascal_row_by_words,
    pauli_pascal_row,
    random_anticommuting_pair,
    split_series,
)

EYE = np.eye(2)


def test_pauli_matrices_anticommute():
    for a, b in ((SIGMA_X, SIGMA_Y), (SIGMA_Y, SIGMA_Z), (SIGMA_Z, SIGMA_X)):
        assert anticommute(a, b)
    assert not anticommute(SIGMA_X, SIGMA_X)


def test_split_series_monomials():
    s = split_series([0, 0, 0, 0, 1])
    assert list(s.k) == [0, 0, 1] and not np.any(s.l)
    s = split_series([0, 0, 0, 1])
    assert not np.any(s.k) and list(s.l) == [0, 1]


def test_split_series_exp():
    c = [1 / math.factorial(j) for j in range(11)]
    s = split_series(c)
    np.testing.assert_allclose(s.k, [1 / math.factorial(2 * m) for m in range(6)])
    np.testing.assert_allclose(s.l, [1 / math.factorial(2 * m + 1) for m in range(5)])
    assert s.l[0] == 1.0  # l(0) = f'(0)
    for z in (0.3, -1.2 + 0.5j, 2j):
        assert abs(s(z) - np.polynomial.polynomial.polyval(z, c)) <= 1e-13


def test_pair_examples():
    np.testing.assert_allclose(apply_anticommuting_pair([0, 0, 1], SIGMA_X, SIGMA_Y), 2 * EYE)
    np.testing.assert_allclose(matrix_horner([0, 0, 1], SIGMA_X + SIGMA_Y), 2 * EYE)
    np.testing.assert_allclose(apply_anticommuting_pair([0, 1], SIGMA_X, SIGMA_Y), SIGMA_X + SIGMA_Y)
    got = apply_anticommuting_pair([0, 0, 0, 0, 1], SIGMA_X, SIGMA_Y)
    np.testing.assert_allclose(got, 4 * EYE)
    np.testing.assert_allclose(np.linalg.matrix_power(SIGMA_X + SIGMA_Y, 4), 4 * EYE)


def test_pair_random_against_horner():
    rng = np.random.default_rng(0)
    for _ in range(100):
        A, B = random_anticommuting_pair(rng)
        c = rng.uniform(-1, 1, 11) + 1j * rng.uniform(-1, 1, 11)
        direct = matrix_horner(c, A + B)
        assert np.linalg.norm(apply_anticommuting_pair(c, A, B) - direct) <= 1e-10 * max(1, np.linalg.norm(direct))


def test_even_function_needs_no_odd_part():
    rng = np.random.default_rng(1)
    A, B = random_anticommuting_pair(rng)
    c = np.array([0.5, 0, -1, 0, 0.25])
    s = split_series(c)
    assert not np.any(s.l)
    Q = A @ A + B @ B
    np.testing.assert_allclose(apply_anticommuting_pair(c, A, B), matrix_horner(s.k, Q), atol=1e-14)


def test_pair_errors():
    with pytest.raises(NotAnticommuting):
        apply_anticommuting_pair([1, 1], SIGMA_X, SIGMA_X)
    with pytest.raises(ShapeMismatch):
        apply_anticommuting_pair([1, 1], SIGMA_X, np.eye(3))


@pytest.mark.parametrize("n,row", [(0, [1]), (1, [1, 1]), (2, [1, 0, 1]), (4, [1, 0, 2, 0, 1])])
def test_pascal_rows(n, row):
    assert pauli_pascal_row(n) == row
    assert pascal_row_by_words(n) == row


def test_pascal_rows_match_brute_force():
    for n in range(9):
        assert pauli_pascal_row(n) == pascal_row_by_words(n)
    # a different anti-commuting pair gives the same triangle
    for n in range(7):
        assert pascal_row_by_words(n, SIGMA_Y, SIGMA_Z) == pauli_pascal_row(n)


def test_pascal_row_structure():
    for n in range(2, 33):
        row = pauli_pascal_row(n)
        assert sum(row) == 2 ** (n // 2) * (1 + n % 2)
        if n % 2:
            assert row == list(np.convolve(pauli_pascal_row(n - 1), [1, 1]))
        else:
            assert row[1::2] == [0] * (n // 2)
            assert row[0::2] == [math.comb(n // 2, i) for i in range(n // 2 + 1)]


@pytest.mark.parametrize("n", [-1, 33, 2.0, True])
def test_pascal_bad_n(n):
    with pytest.raises(InvalidParameter):
        pauli_pascal_row(n)
