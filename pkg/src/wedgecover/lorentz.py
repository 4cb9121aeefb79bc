"""Lorentz maps as 4x4 real matrices.

A Lorentz map is an ``ndarray`` of shape ``(4, 4)`` acting on column
four-vectors. Everything relative to a time axis ``e0`` (rotations, boosts,
polar parts) is computed in the orthonormal frame given by the pure boost
taking (1,0,0,0) to ``e0``; in that frame the e0-Euclidean product is the dot
product and rotations/boosts have their textbook block form.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import null_space, subspace_angles
from scipy.optimize import least_squares

from .errors import CoverError
from .minkowski import (
    E0,
    METRIC,
    check_e0,
    cross_time_zero,
    frame_boost,
    minkowski_inner,
    vec,
)

LORENTZ_TOL = 1e-8
FP_RELATIVE_THRESHOLD = 1e-7
FP_ABSOLUTE_FLOOR = 1e-10
INTERSECTION_RANK_TOL = 1e-8

G = METRIC


class PolarParts(NamedTuple):
    rho: np.ndarray
    beta: np.ndarray
    e0: np.ndarray


@dataclass(frozen=True)
class SpacelikePlane:
    u: np.ndarray
    v: np.ndarray

    @property
    def basis(self):
        return np.column_stack([self.u, self.v])


@dataclass(frozen=True)
class Circle:
    """E(rho, beta) is a full circle of unit vectors (commuting factors)."""


@dataclass(frozen=True)
class AntipodalPair:
    """E(rho, beta) = {e, -e}."""
    e: np.ndarray


# -- basic predicates -------------------------------------------------------

def metric_defect(m):
    return float(np.max(np.abs(m.T @ G @ m - G)))


def is_lorentz(m, tol=LORENTZ_TOL):
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4) or not np.all(np.isfinite(m)):
        return False
    # Large boosts carry entries of size cosh(chi); scale the tolerance with them.
    return metric_defect(m) < tol * max(1.0, float(np.max(np.abs(m))) ** 2)


def det_sign(m):
    return 1 if np.linalg.det(m) > 0 else -1


def is_orthochronous(m, tol=LORENTZ_TOL):
    return m[0, 0] >= 1.0 - tol


def is_restricted(m, tol=LORENTZ_TOL):
    return is_lorentz(m, tol) and det_sign(m) == 1 and is_orthochronous(m, tol)


def check_restricted(m):
    m = np.asarray(m, dtype=float)
    if not is_restricted(m):
        raise CoverError("not-restricted", "matrix is not a restricted Lorentz transformation")
    return m


def lorentz_inverse(m):
    return G @ m.T @ G


def _to_frame(m, e0):
    f = frame_boost(e0)
    return lorentz_inverse(f) @ m @ f, f


def _from_frame(m, f):
    return f @ m @ lorentz_inverse(f)


def _spatial_unit(w, e0, code):
    """Frame coordinates of a unit vector in the time-zero plane of e0."""
    w = vec(w)
    f = frame_boost(e0)
    wf = lorentz_inverse(f) @ w
    if abs(wf[0]) > 1e-8 or abs(np.linalg.norm(wf[1:]) - 1.0) > 1e-8:
        raise CoverError(code, f"{w.tolist()} is not a unit vector orthogonal to e0")
    return wf[1:] / np.linalg.norm(wf[1:]), f


# -- rotations and boosts ---------------------------------------------------

def rotation_3d(axis, angle):
    """Right-handed rotation matrix of R^3 (Rodrigues)."""
    k = np.array([[0.0, -axis[2], axis[1]],
                  [axis[2], 0.0, -axis[0]],
                  [-axis[1], axis[0], 0.0]])
    return np.eye(3) + np.sin(angle) * k + (1.0 - np.cos(angle)) * (k @ k)


def make_rotation(axis, angle, e0=E0):
    e0 = check_e0(e0)
    a, f = _spatial_unit(axis, e0, "bad-axis")
    m = np.eye(4)
    m[1:, 1:] = rotation_3d(a, float(np.mod(angle, 2 * np.pi)))
    return _from_frame(m, f)


def make_boost(direction, rapidity, e0=E0):
    e0 = check_e0(e0)
    d, f = _spatial_unit(direction, e0, "bad-direction")
    ch, sh = np.cosh(rapidity), np.sinh(rapidity)
    m = np.eye(4)
    m[0, 0] = ch
    m[0, 1:] = sh * d
    m[1:, 0] = sh * d
    m[1:, 1:] += (ch - 1.0) * np.outer(d, d)
    return _from_frame(m, f)


def polar_decompose(mu, e0=E0):
    """Split ``mu = rho @ beta`` into a rotation and a boost relative to e0.

    ``beta = (mu* mu)^{1/2}`` with ``*`` the adjoint for <.,.>_{e0}. In the e0
    frame this is the ordinary polar decomposition, computed from the SVD
    ``mf = U S V^T`` as ``rho = U V^T`` and ``beta = V S V^T``; the positive
    singular values select the positive branch of the square root.
    """
    return polar_parts_unchecked(check_restricted(mu), check_e0(e0))


def polar_parts_unchecked(mu, e0=E0):
    """Polar split without the restricted-map precondition (callers guarantee it)."""
    mf, f = _to_frame(mu, e0)
    u, sv, vt = np.linalg.svd(mf)
    # Lorentz singular values come as {l, 1/l, 1, 1}; the small ones carry only
    # absolute precision, so take them as reciprocals of the large ones.
    sv[2], sv[3] = 1.0 / sv[1], 1.0 / sv[0]
    beta_f = (vt.T * sv) @ vt
    beta_f = 0.5 * (beta_f + beta_f.T)
    return PolarParts(_from_frame(u @ vt, f), _from_frame(beta_f, f), e0)


def _default_axis(f):
    return f[:, 3].copy()


def _sign_normalize(a):
    for c in a:
        if abs(c) > 1e-12:
            return a if c > 0 else -a
    return a


def rotation_axis_angle(rho, e0=E0, tol=1e-8):
    """Axis a(rho) and angle alpha(rho) in [0, pi].

    The identity returns the default axis (the frame's third spatial axis) with
    angle 0. A half turn has no preferred axis orientation; its axis is signed
    so that the first nonzero frame component is positive.
    """
    e0 = check_e0(e0)
    rf, f = _to_frame(np.asarray(rho, dtype=float), e0)
    r = rf[1:, 1:]
    if (np.max(np.abs(rf[0, 1:])) > tol or np.max(np.abs(rf[1:, 0])) > tol
            or abs(rf[0, 0] - 1.0) > tol or np.max(np.abs(r.T @ r - np.eye(3))) > tol
            or np.linalg.det(r) < 0):
        raise CoverError("not-a-rotation", "map does not fix e0 orthogonally")
    s = 0.5 * np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    c = 0.5 * (np.trace(r) - 1.0)
    sin_a = np.linalg.norm(s)
    angle = float(np.arctan2(sin_a, c))
    if sin_a < 1e-14 and c > 0:
        return _default_axis(f), 0.0
    if c < 0:
        # Near a half turn the antisymmetric part is tiny; read the axis off the
        # symmetric part R + R^T - 2c I = 2(1 - c) a a^T instead.
        sym = 0.5 * (r + r.T) - c * np.eye(3)
        col = sym[:, int(np.argmax(np.diag(sym)))]
        a = col / np.linalg.norm(col)
        if sin_a > 1e-12:
            a = a if a @ s > 0 else -a
        else:
            a = _sign_normalize(a)
            angle = float(np.pi)
    else:
        a = s / sin_a
    return f[:, 1:] @ a, angle


def boost_direction_rapidity(beta, e0=E0, tol=1e-8):
    """Direction b(beta) and rapidity chi(beta) >= 0 of a boost."""
    e0 = check_e0(e0)
    bf, f = _to_frame(np.asarray(beta, dtype=float), e0)
    scale = max(1.0, float(np.max(np.abs(bf))))
    if (not is_restricted(beta) or np.max(np.abs(bf - bf.T)) > tol * scale
            or np.min(np.linalg.eigvalsh(0.5 * (bf + bf.T))) <= 0):
        raise CoverError("not-a-boost", "map is not symmetric positive in the e0 frame")
    s = bf[1:, 0]
    n = np.linalg.norm(s)
    if n < 1e-15:
        return _default_axis(f), 0.0
    return f[:, 1:] @ (s / n), float(np.arcsinh(n))


# -- fixed points -----------------------------------------------------------

def fixed_point_space(mu):
    """Dimension and an orthonormal basis of the kernel of ``mu - 1``."""
    mu = np.asarray(mu, dtype=float)
    _, sv, vt = np.linalg.svd(mu - np.eye(4))
    cut = max(FP_RELATIVE_THRESHOLD * sv[0], FP_ABSOLUTE_FLOOR)
    null = sv < cut
    return int(null.sum()), [vt[i] for i in np.nonzero(null)[0]]


def _fp_gram(mu):
    dim, basis = fixed_point_space(mu)
    if dim != 2:
        return dim, None
    b = np.column_stack(basis)
    return dim, b.T @ G @ b


def is_generalized_boost(mu):
    dim, gram = _fp_gram(mu)
    if dim == 4:
        return True
    return gram is not None and bool(np.all(np.linalg.eigvalsh(gram) < 0))


def is_generalized_rotation(mu):
    dim, gram = _fp_gram(mu)
    if dim == 4:
        return True
    return gram is not None and np.linalg.det(gram) < 0


# -- reflections at spacelike planes ---------------------------------------

def plane_gram(p):
    b = p.basis
    return b.T @ G @ b


def check_spacelike_plane(p, tol=1e-10):
    gram = plane_gram(p)
    scale = max(1.0, float(np.max(np.abs(p.basis))) ** 2)
    if not np.all(np.isfinite(gram)) or np.max(np.linalg.eigvalsh(gram)) > -tol * scale:
        raise CoverError("degenerate-plane", "basis does not span a spacelike 2-plane")
    return gram


def reflect_at_plane(p):
    """Orthogonal reflection fixing the plane ``p`` and negating its complement."""
    gram = check_spacelike_plane(p)
    b = p.basis
    proj = b @ np.linalg.solve(gram, b.T @ G)
    return 2.0 * proj - np.eye(4)


def orthogonal_complement(basis):
    """Basis (4 x k) of the Minkowski-orthogonal complement of a column span."""
    basis = np.atleast_2d(basis)
    _, sv, vt = np.linalg.svd(basis.T @ G)
    rank = int(np.sum(sv > 1e-12 * sv[0]))
    return vt[rank:].T


def principal_angles(basis_a, basis_b):
    return subspace_angles(np.asarray(basis_a), np.asarray(basis_b))


def _unit_spacelike(w):
    return w / np.sqrt(-minkowski_inner(w, w))


def _lightlike_pair_of_timelike_plane(w):
    """Two future lightlike vectors spanning a timelike plane (columns of w)."""
    k = w.T @ G @ w
    lam, vecs = np.linalg.eigh(k)
    if not (lam[0] < 0 < lam[1]):
        raise CoverError("degenerate-plane", "complement is not a timelike plane")
    t = w @ vecs[:, 1] / np.sqrt(lam[1])
    s = w @ vecs[:, 0] / np.sqrt(-lam[0])
    if t[0] < 0:
        t = -t
    return t + s, t - s


def _orthonormalize_spacelike(c1, c2):
    u1 = _unit_spacelike(c1)
    u2 = c2 + minkowski_inner(c2, u1) * u1
    return SpacelikePlane(u1, _unit_spacelike(u2))


def _reflecting_plane_intersecting(qa, qb):
    _, _, vt = np.linalg.svd(np.column_stack([qa, -qb]))
    c = qa @ vt[-1, :2]
    c = _unit_spacelike(c)

    def leg(q):
        res = [u + minkowski_inner(u, c) * c for u in q.T]
        r = max(res, key=np.linalg.norm)
        return _unit_spacelike(r)

    a1, b1 = leg(qa), leg(qb)
    gab = minkowski_inner(a1, b1)
    # a1 + b1 is spacelike when g(a1, b1) < 1, a1 - b1 when g(a1, b1) > -1.
    c1 = a1 + b1 if gab <= 0 else a1 - b1
    c1 = c1 + minkowski_inner(c1, c) * c
    return _orthonormalize_spacelike(c, c1)


def _reflecting_plane_generic(qa, qb):
    x, y = _lightlike_pair_of_timelike_plane(orthogonal_complement(qa))
    v0, w0 = _lightlike_pair_of_timelike_plane(orthogonal_complement(qb))
    g = minkowski_inner
    best, best_quality = None, -1.0
    for v, w in ((v0, w0), (w0, v0)):
        alpha = np.sqrt(g(x, y) * g(x, w) / (g(v, w) * g(y, v)))
        beta = np.sqrt(g(x, y) * g(y, v) / (g(v, w) * g(x, w)))
        c1, c2 = x - alpha * v, y - beta * w
        quality = min(np.linalg.norm(c1) / (np.linalg.norm(x) + alpha * np.linalg.norm(v)),
                      np.linalg.norm(c2) / (np.linalg.norm(y) + beta * np.linalg.norm(w)))
        if quality > best_quality:
            best, best_quality = (c1, c2), quality
    if best_quality < 1e-7:
        raise CoverError("ill-conditioned", "lightlike pairing degenerates; perturb the planes")
    return _orthonormalize_spacelike(*best)


def _euclid_orthonormal(basis):
    q, _ = np.linalg.qr(basis)
    return q


def reflecting_plane(a, b):
    """A spacelike plane C whose reflection maps plane ``a`` onto plane ``b``.

    Planes meeting in a line are handled inside the 3-dimensional Minkowski
    complement of the common line (angle bisector of the remaining legs);
    planes meeting only at the origin use the lightlike spanning vectors of
    the two timelike complements.
    """
    check_spacelike_plane(a)
    check_spacelike_plane(b)
    qa, qb = _euclid_orthonormal(a.basis), _euclid_orthonormal(b.basis)
    sv = np.linalg.svd(np.column_stack([qa, qb]), compute_uv=False)
    if sv[-1] < INTERSECTION_RANK_TOL:
        c = _reflecting_plane_intersecting(qa, qb)
    else:
        c = _reflecting_plane_generic(qa, qb)
    return _polish_reflecting_plane(c, qa, qb)


def _reflection_mismatch(qc, qa, qb):
    """Part of j_C(A) sticking out of B (Euclidean), flattened."""
    j = reflect_at_plane(SpacelikePlane(qc[:, 0], qc[:, 1]))
    img = j @ qa
    return (img - qb @ (qb.T @ img)).ravel()


def _polish_reflecting_plane(c, qa, qb, tol=1e-12):
    """Gauss-Newton refinement of C; nearly coincident planes make both
    constructions lose digits to cancellation."""
    qc = _euclid_orthonormal(c.basis)
    if np.max(np.abs(_reflection_mismatch(qc, qa, qb))) <= tol:
        return c
    n = null_space(qc.T)

    def residual(s):
        return _reflection_mismatch(qc + n @ s.reshape(2, 2), qa, qb)

    sol = least_squares(residual, np.zeros(4), method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15)
    basis = qc + n @ sol.x.reshape(2, 2)
    return _orthonormalize_spacelike(basis[:, 0], basis[:, 1])


def plane_image(j, p):
    return SpacelikePlane(j @ p.u, j @ p.v)


# -- rotation/boost pairs ---------------------------------------------------

def commute(m1, m2, tol=LORENTZ_TOL):
    scale = max(1.0, float(np.max(np.abs(m1))) * float(np.max(np.abs(m2))))
    return float(np.max(np.abs(m1 @ m2 - m2 @ m1))) < tol * scale


def e_section(rho, beta, e0=E0):
    """Unit time-zero vector a(rho) x b(beta) / |a(rho) x b(beta)|."""
    a, _ = rotation_axis_angle(rho, e0)
    b, _ = boost_direction_rapidity(beta, e0)
    c = cross_time_zero(a, b, e0)
    n = np.sqrt(max(-minkowski_inner(c, c), 0.0))
    if n < 1e-9:
        raise CoverError("parallel-axes", "rotation axis and boost direction are parallel")
    return c / n


def E_set_classify(rho, beta, e0=E0):
    if commute(rho, beta):
        return Circle()
    return AntipodalPair(e_section(rho, beta, e0))
