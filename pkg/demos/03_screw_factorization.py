"""Two routes to f(eta).

The direct formula splits the dual part along the rotation axis. The screw
route first conjugates by a pure translation (1 + eps r) so the dual part
commutes with A, applies the commuting formula, then conjugates back.
"""
import numpy as np

from dqcalc import ValidPolynomial, apply, apply_via_screw, builtin, screw_factor
from dqcalc.oracle import poly_eval_dq
from dqcalc.verify import random_dq

rng = np.random.default_rng(0)
eta = random_dq(rng)

# %% factor and reassemble
sf = screw_factor(eta)
print("r =", sf.r)
print("core dual vector x a1 =", sf.core.dual.vector.cross(eta.real.vector))
print("reassembly error =", (sf.reassemble() - eta).norm())

# %% both routes agree, and agree with direct polynomial algebra
p = ValidPolynomial.random(rng)
f = p.to_valid_function()
print("direct  :", apply(f, eta).components())
print("screw   :", apply_via_screw(f, eta).components())
print("algebra :", poly_eval_dq(p, eta).components())

for name, fn in [("exp", builtin("exp")), ("cayley", builtin("cayley"))]:
    print(name, "route difference:", (apply(fn, eta) - apply_via_screw(fn, eta)).norm())
