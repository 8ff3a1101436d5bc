"""Planar rotations, reflections, projections, and perpendiculars.

All functions operate on plain numpy arrays: directions are shape (2,),
operators are shape (2, 2). Vectors passed as unit directions are accepted
with a small amount of normalization slack and silently renormalized;
beyond that they are rejected.
"""

import numpy as np

from .errors import NonUnitVector

# unit-norm deviation accepted without complaint
UNIT_TOL = 1e-12
# beyond this deviation the vector is rejected instead of renormalized
UNIT_REJECT = 1e-9


def _as_unit(x) -> np.ndarray:
    v = np.asarray(x, dtype=float).reshape(2)
    nrm = float(np.hypot(v[0], v[1]))
    if abs(nrm - 1.0) > UNIT_REJECT:
        raise NonUnitVector(f"expected a unit vector, got norm {nrm:.12g}")
    return v / nrm


def rotation(theta: float) -> np.ndarray:
    """Counterclockwise rotation operator for angle theta (radians)."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def reflection(theta: float) -> np.ndarray:
    """Reflection operator rotation(theta) @ diag(1, -1).

    Reflects across the line at angle theta/2; determinant is -1.
    """
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [s, -c]])


def householder(x) -> np.ndarray:
    """I - 2 x x^T for a unit vector x.

    Involutive, and equal to reflection(2 * angle(x) + pi): it fixes
    perp(x) and negates x.
    """
    v = _as_unit(x)
    return np.eye(2) - 2.0 * np.outer(v, v)


def projection(x) -> np.ndarray:
    """Orthogonal projector I - x x^T onto the complement of unit x."""
    v = _as_unit(x)
    return np.eye(2) - np.outer(v, v)


def perp(x) -> np.ndarray:
    """Rotate x by +90 degrees: (x, y) -> (-y, x). Any length allowed."""
    v = np.asarray(x, dtype=float).reshape(2)
    return np.array([-v[1], v[0]])
