"""Closed forms on dual quaternions, checked against brute force.

exp is compared with its truncated power series; log is a right inverse of
exp with an explicit branch; powers are compared with repeated products.
"""
import math

from dqcalc import DualQuaternion, LogBranch, Quaternion, Vector3, exp_dq, inv_dq, log_dq, pow_dq
from dqcalc.oracle import taylor_exp

eta = DualQuaternion(Quaternion(0.2, 0.7, -0.4, 0.1), Quaternion(0.5, -1.0, 0.3, 0.8))

# %% exp: closed form vs 40-term series
print("closed:", exp_dq(eta).components())
print("series:", taylor_exp(eta, 40).components())

# %% a rotation by pi kills the perpendicular dual part
edge = DualQuaternion(Quaternion(0, math.pi, 0, 0), Quaternion(0, 0, 1, 0))
print("exp(pi i + eps j) =", exp_dq(edge).components())

# %% log: principal branch, then another winding of the same angle
L = log_dq(eta)
print("exp(log eta) - eta:", (exp_dq(L) - eta).norm())
t = math.atan2(eta.real.vector.norm(), eta.real.w) + 2 * math.pi
print("other branch round trip:", (exp_dq(log_dq(eta, LogBranch(t=t))) - eta).norm())

# %% real A: the angle is n*pi; the axis comes from b1 or the fallback
minus_one = DualQuaternion.scalar(-1.0)
print("log(-1) about j:", log_dq(minus_one, LogBranch(axis_fallback=Vector3(0, 1, 0))).components())

# %% powers and the inverse
half = pow_dq(eta, 0.5)
print("sqrt(eta)^2 - eta:", (half * half - eta).norm())
print("eta^-1 vs inverse formula:", (pow_dq(eta, -1.0) - inv_dq(eta)).norm())
