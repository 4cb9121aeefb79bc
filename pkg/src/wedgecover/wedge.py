"""Rindler wedges as classes of zweibeine.

A zweibein ``(t, x)`` (future unit timelike ``t``, unit spacelike ``x``
orthogonal to it) generates the wedge ``{p : -g(p, x) > |g(p, t)|}``, the
wedge that contains ``x`` itself (g(x, x) = -1). Zweibeine
related by a boost inside ``span{t, x}`` generate the same wedge; a
:class:`WedgeClass` stores the unique member whose ``x`` has vanishing time
component.
"""
from dataclasses import dataclass

import numpy as np

from .errors import CoverError
from .lorentz import SpacelikePlane, lorentz_inverse, make_rotation, reflect_at_plane
from .minkowski import E0, E1, E2, E3, METRIC, boost_between, cross_time_zero, minkowski_inner, vec

ZB_TOL = 1e-9
WEDGE_EQ_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Zweibein:
    t: np.ndarray
    x: np.ndarray

    def validate(self, tol=ZB_TOL):
        t, x = self.t, self.x
        scale = max(1.0, float(t @ t), float(x @ x))
        if (abs(minkowski_inner(t, t) - 1) > tol * scale or abs(minkowski_inner(x, x) + 1) > tol * scale
                or abs(minkowski_inner(t, x)) > tol * scale or t[0] <= 0):
            raise CoverError("invalid-zweibein", "expected future unit t, unit spacelike x, t orthogonal to x")
        return self


@dataclass(frozen=True, eq=False)
class WedgeClass:
    t: np.ndarray
    x: np.ndarray

    @property
    def zweibein(self):
        return Zweibein(self.t, self.x)

    def __neg__(self):
        return opposite(self)

    def isclose(self, other, tol=WEDGE_EQ_TOL):
        return bool(np.max(np.abs(self.t - other.t)) < tol and np.max(np.abs(self.x - other.x)) < tol)

    def __repr__(self):
        return f"WedgeClass(t={self.t.tolist()}, x={self.x.tolist()})"


def _normalize_canonical(t, x):
    x = x.copy()
    x[0] = 0.0
    x /= np.linalg.norm(x)
    t = t + minkowski_inner(t, x) * x
    t /= np.sqrt(minkowski_inner(t, t))
    return t, x


def canonicalize(xi):
    """Boost along the wedge's own boost orbit until x has zero time component."""
    t, x = vec(xi.t), vec(xi.x)
    if t[0] < 0:
        t = -t
    chi = np.arctanh(-x[0] / t[0])
    ch, sh = np.cosh(chi), np.sinh(chi)
    t, x = ch * t + sh * x, sh * t + ch * x
    return WedgeClass(*_normalize_canonical(t, x))


def wedge(t, x):
    return canonicalize(Zweibein(vec(t), vec(x)).validate())


def standard_wedge(axis):
    """The class e-bar = (e0, e) for a spatial unit vector e."""
    return WedgeClass(E0.copy(), vec(axis).copy())


NAMED_WEDGES = {"e1": E1, "e2": E2, "e3": E3}


def wedge_contains(a, p):
    p = vec(p)
    return bool(-minkowski_inner(p, a.x) > abs(minkowski_inner(p, a.t)))


def act(mu, a):
    """Image of the class under any Lorentz map.

    A time-reversing map sends t to the past; since the wedge only depends on
    |g(p, t)|, the same wedge is described by flipping that leg back.
    """
    mu = np.asarray(mu, dtype=float)
    t, x = mu @ a.t, mu @ a.x
    if t[0] < 0:
        t = -t
    return canonicalize(Zweibein(t, x))


def opposite(a):
    return WedgeClass(a.t.copy(), -a.x)


def edge(a):
    """The spacelike edge plane {t, x}^perp of the wedge."""
    _, _, vt = np.linalg.svd(np.column_stack([a.t, a.x]).T @ METRIC)
    return SpacelikePlane(vt[2], vt[3])


def wedge_reflection(a):
    # Equivalent to x - 2 g(x,t) t + 2 g(x,x_) x_ for the zweibein (t, x_).
    return np.eye(4) - 2.0 * np.outer(a.t, METRIC @ a.t) + 2.0 * np.outer(a.x, METRIC @ a.x)


def wedge_reflection_via_plane(a):
    return reflect_at_plane(edge(a))


def wedge_from_edge(plane, orient=None):
    """A class whose edge is ``plane``; the wedge leans towards the vector ``orient``."""
    _, _, vt = np.linalg.svd(plane.basis.T @ METRIC)
    w = vt[2:].T
    k = w.T @ METRIC @ w
    lam, vecs = np.linalg.eigh(k)
    t = w @ vecs[:, 1] / np.sqrt(lam[1])
    x = w @ vecs[:, 0] / np.sqrt(-lam[0])
    if t[0] < 0:
        t = -t
    if orient is not None and minkowski_inner(orient, x) > 0:
        x = -x
    return canonicalize(Zweibein(t, x))


def lightlike_pair(a):
    return a.x + a.t, a.x - a.t


def wedge_from_lightlike_pair(lplus, lminus):
    lplus, lminus = vec(lplus), vec(lminus)
    gpm = minkowski_inner(lplus, lminus)
    scale = float(np.linalg.norm(lplus) * np.linalg.norm(lminus))
    if (gpm >= -1e-12 * scale or lplus[0] <= 0 or lminus[0] >= 0
            or abs(minkowski_inner(lplus, lplus)) > 1e-9 * float(lplus @ lplus)
            or abs(minkowski_inner(lminus, lminus)) > 1e-9 * float(lminus @ lminus)):
        raise CoverError("degenerate-pair", "need future and past lightlike vectors with g(l+, l-) < 0")
    k = np.sqrt(-2.0 / gpm)
    x = 0.5 * k * (lplus + lminus)
    t = 0.5 * k * (lplus - lminus)
    return canonicalize(Zweibein(t, x))


def boost_group(a, chi):
    """Boost fixing the edge of ``a`` with l+ = x + t scaled by e^chi."""
    ch, sh = np.cosh(chi), np.sinh(chi)
    t, x = a.t, a.x
    gt, gx = METRIC @ t, METRIC @ x
    # Decompose p = g(p,t) t - g(p,x) x + edge part, then boost the first two.
    pt = np.outer(t, gt)
    px = -np.outer(x, gx)
    m = np.eye(4) - pt - px
    m += (ch * np.outer(t, gt) + sh * np.outer(x, gt))
    m += -(sh * np.outer(t, gx) + ch * np.outer(x, gx))
    return m


def edge_rotation(a, angle):
    """Rotation by ``angle`` inside the edge plane, fixing t and x."""
    p = edge(a)
    e1 = p.u / np.sqrt(-minkowski_inner(p.u, p.u))
    e2 = p.v + minkowski_inner(p.v, e1) * e1
    e2 /= np.sqrt(-minkowski_inner(e2, e2))
    c, s = np.cos(angle), np.sin(angle)
    g1, g2 = -(METRIC @ e1), -(METRIC @ e2)
    return (np.eye(4) + (c - 1) * (np.outer(e1, g1) + np.outer(e2, g2))
            + s * (np.outer(e2, g1) - np.outer(e1, g2)))


def transport(xi, eta):
    """A restricted Lorentz map taking zweibein ``xi`` to ``eta``.

    Boost t_xi onto t_eta, then rotate the image of x_xi onto x_eta inside the
    time-zero plane of t_eta.
    """
    b = boost_between(xi.t, eta.t)
    t, x1, x2 = eta.t, b @ xi.x, eta.x
    c = float(np.clip(-minkowski_inner(x1, x2), -1.0, 1.0))
    n = cross_time_zero(x1, x2, t)
    s = np.sqrt(max(-minkowski_inner(n, n), 0.0))
    if s > 1e-12:
        return make_rotation(n / s, np.arctan2(s, c), t) @ b
    if c > 0:
        return b
    # Antiparallel legs: half turn about any axis orthogonal to t and x1.
    _, _, vt = np.linalg.svd(np.column_stack([t, x1]).T @ METRIC)
    n = vt[3] / np.sqrt(-minkowski_inner(vt[3], vt[3]))
    return make_rotation(n, np.pi, t) @ b


def stabilizes(mu, a, tol=WEDGE_EQ_TOL):
    return act(mu, a).isclose(a, tol)


def lorentz_conjugate(mu, m):
    return mu @ m @ lorentz_inverse(mu)
