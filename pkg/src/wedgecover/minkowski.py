"""Minkowski space R^{1+3} with signature (+,-,-,-).

Four-vectors are plain ``numpy`` arrays of shape ``(4,)``. The auxiliary
Euclidean product ``<x, y>_{e0} = -g(x, y) + 2 g(x, e0) g(y, e0)`` turns the
Lorentz metric into a positive definite form once a time axis ``e0`` is chosen;
it is what makes polar decomposition of Lorentz maps meaningful.
"""
import numpy as np

from .errors import CoverError

TAU_ZERO = 1e-9

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
E0 = np.array([1.0, 0.0, 0.0, 0.0])
E1 = np.array([0.0, 1.0, 0.0, 0.0])
E2 = np.array([0.0, 0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 0.0, 1.0])

ZERO = "zero"
TIMELIKE_FUTURE = "timelike-future"
TIMELIKE_PAST = "timelike-past"
LIGHTLIKE_FUTURE = "lightlike-future"
LIGHTLIKE_PAST = "lightlike-past"
SPACELIKE = "spacelike"


def vec(v):
    """Coerce ``v`` to a finite float four-vector."""
    v = np.asarray(v, dtype=float)
    if v.shape != (4,):
        raise ValueError(f"expected a four-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("four-vector has non-finite components")
    return v


def minkowski_inner(u, v):
    return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3]


def minkowski_square(v):
    return minkowski_inner(v, v)


def classify(v, tol=TAU_ZERO):
    """Causal class of ``v``.

    The tolerance is applied relative to the Euclidean size of ``v`` (with an
    absolute floor of ``tol``) so that the classification survives Lorentz maps
    with large boosts. Vectors inside the tolerance band around the cone count
    as lightlike.
    """
    v = np.asarray(v, dtype=float)
    scale = max(1.0, float(v @ v))
    if np.max(np.abs(v)) < tol:
        return ZERO
    q = minkowski_square(v)
    if q < -tol * scale:
        return SPACELIKE
    future = v[0] > 0
    if q > tol * scale:
        return TIMELIKE_FUTURE if future else TIMELIKE_PAST
    return LIGHTLIKE_FUTURE if future else LIGHTLIKE_PAST


def on_forward_hyperboloid(v, tol=TAU_ZERO):
    """Membership in M_1^+ = {x : x^2 = 1, x^0 > 0}."""
    v = np.asarray(v, dtype=float)
    return v[0] > 0 and abs(minkowski_square(v) - 1.0) < tol * max(1.0, float(v @ v))


def on_spacelike_hyperboloid(v, tol=TAU_ZERO):
    """Membership in H_1 = {x : x^2 = -1}."""
    v = np.asarray(v, dtype=float)
    return abs(minkowski_square(v) + 1.0) < tol * max(1.0, float(v @ v))


def check_e0(e0):
    e0 = vec(e0)
    if not on_forward_hyperboloid(e0):
        raise CoverError("invalid-e0", f"{e0.tolist()} is not a future unit timelike vector")
    return e0


def euclid_gram(e0):
    """Gram matrix Q of the e0-Euclidean product: <x, y>_{e0} = x @ Q @ y."""
    ge = METRIC @ e0
    return -METRIC + 2.0 * np.outer(ge, ge)


def euclid_inner_e0(u, v, e0=E0):
    e0 = check_e0(e0)
    return -minkowski_inner(u, v) + 2.0 * minkowski_inner(u, e0) * minkowski_inner(v, e0)


def frame_boost(e0):
    """Pure boost taking (1,0,0,0) to ``e0``.

    Its columns form a basis that is orthonormal both for g and for
    <.,.>_{e0}; the last three columns span the time-zero plane of ``e0``
    and carry the right-handed orientation of the standard spatial axes.
    """
    return boost_between(E0, e0)


def boost_between(u, v):
    """The pure boost in span{u, v} taking unit future timelike u to v."""
    w = u + v
    gu = METRIC @ u
    return np.eye(4) - np.outer(w, METRIC @ w) / (1.0 + minkowski_inner(u, v)) + 2.0 * np.outer(v, gu)


def cross_time_zero(u, v, e0=E0, tol=TAU_ZERO):
    """Vector product of two vectors of the time-zero plane of ``e0``."""
    e0 = check_e0(e0)
    u, v = vec(u), vec(v)
    for w in (u, v):
        if abs(minkowski_inner(w, e0)) > tol * max(1.0, float(np.linalg.norm(w) * np.linalg.norm(e0))):
            raise CoverError("not-time-zero", f"{w.tolist()} is not orthogonal to e0")
    frame = frame_boost(e0)
    # Coordinates in the orthonormal frame: x^i = -g(x, f_i).
    fu = -(frame[:, 1:].T @ METRIC @ u)
    fv = -(frame[:, 1:].T @ METRIC @ v)
    return frame[:, 1:] @ np.cross(fu, fv)
