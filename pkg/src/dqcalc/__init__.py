"""Functional calculus for dual quaternions.

Evaluate valid complex functions (f(conj z) = conj f(z)) at quaternions and
dual quaternions, with closed forms for exp, log, powers, inverse and the
Cayley transform, and brute-force oracles to check them against.
"""

from .algebra import (
    DecomposedDual,
    DualNumber,
    DualQuaternion,
    Quaternion,
    Vector3,
    conj,
    decompose,
    dq_mul,
    quat_mul,
)
from .calculus import (
    LogBranch,
    ScrewFactorization,
    apply,
    apply_anticommute,
    apply_commuting,
    apply_dual_number,
    apply_quaternion,
    apply_via_screw,
    cayley_dq,
    cayley_forms,
    dq_abs,
    exp_dq,
    inv_dq,
    log_dq,
    pow_dq,
    screw_factor,
)
from .errors import (
    DomainError,
    InvalidParameter,
    NonCommuting,
    NotAnticommuting,
    ShapeMismatch,
    SingularInput,
)
from .functions import (
    ValidFunction,
    ValidPolynomial,
    builtin,
    check_valid,
    eval_g,
    eval_h,
    poly_partials,
)

__version__ = "0.1.0"
