"""Valid functions on quaternions.

A valid function satisfies f(conj z) = conj f(z). For a quaternion
A = a0 + a1 we evaluate f at the complex point a0 + i|a1| and send i to the
unit vector a1/|a1|.
"""
import math

from dqcalc import Quaternion, ValidPolynomial, apply_quaternion, builtin, check_valid, eval_g, eval_h

# %% exp of a pure quaternion of length pi/2 is the unit axis itself
exp = builtin("exp")
print("exp((pi/2) i) =", apply_quaternion(exp, Quaternion(0, math.pi / 2, 0, 0)))

# %% g and h are the even real functions with f(x+iy) = g + iy h
z = 0.3 + 1.1j
print("g, h of exp at", z, "=", eval_g(exp, z), eval_h(exp, z))
print("e^x sin(y)/y       =", math.exp(0.3) * math.sin(1.1) / 1.1)

# %% a polynomial in x and iy is valid exactly when its coefficients are real
p = ValidPolynomial.from_terms([(2, 0, 1.0), (1, 1, -0.5), (0, 3, 2.0)])
print("validity report:", check_valid(p.to_valid_function(), [0.5 + 0.2j, -1 + 2j]).passed)

# %% the norm survives the lift: |f(A)| = |f(a0 + i|a1|)|
A = Quaternion(0.4, -0.3, 1.2, 0.5)
sqrt = builtin("pow", 0.5)
fA = apply_quaternion(sqrt, A)
print("|sqrt(A)| =", fA.norm(), " |sqrt(z)| =", abs(sqrt(complex(A.w, A.vector.norm()))))
print("sqrt(A)^2 =", fA * fA, " A =", A)
