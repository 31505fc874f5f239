"""Anti-commuting pairs and the Pauli-Pascal triangle.

For AB = -BA, (A + B)^2 = A^2 + B^2 and f(A + B) = k(A^2 + B^2) + (A + B) l(A^2 + B^2)
where k and l collect the even and odd coefficients of f.
"""
import numpy as np

from dqcalc.pauli import (
    SIGMA_X,
    SIGMA_Y,
    apply_anticommuting_pair,
    matrix_horner,
    pascal_row_by_words,
    pauli_pascal_row,
    random_anticommuting_pair,
)

# %% the split formula against plain Horner on A + B
rng = np.random.default_rng(1)
A, B = random_anticommuting_pair(rng)
c = rng.uniform(-1, 1, 9)
print("difference:", np.linalg.norm(apply_anticommuting_pair(c, A, B) - matrix_horner(c, A + B)))

# %% the triangle, and the brute-force word expansion with sigma_x, sigma_y
for n in range(9):
    row = pauli_pascal_row(n)
    assert row == pascal_row_by_words(n, SIGMA_X, SIGMA_Y)
    print(" ".join(map(str, row)).center(40))
