"""The covering group built from pairs of wedge classes.

A pair ``(a, b)`` of wedge classes determines the restricted Lorentz map
``lambda(a, b) = j_a j_b``. Its class in the covering group is computed as an
SL(2,C) matrix ``Phi(a, b)`` by lifting a path: move ``a`` from ``b`` to its
final position through restricted Lorentz maps, follow ``lambda`` along the way
and multiply the near-identity lifts of the increments. The pair space is simply
connected and ``Phi`` is the identity on the diagonal, so the result does not
depend on the path chosen (``via`` exposes a second path family to check this).
"""
from dataclasses import dataclass

import numpy as np
from scipy.spatial.transform import Rotation
from scipy.optimize import least_squares

from . import kernels
from .errors import CoverError
from .lorentz import (
    boost_direction_rapidity,
    commute,
    e_section,
    lorentz_inverse,
    make_boost,
    make_rotation,
    polar_decompose,
    polar_parts_unchecked,
    rotation_3d,
    rotation_axis_angle,
)
from .minkowski import E0, check_e0, frame_boost
from .sl2c import I2, jordan_classify, lift, sl2_inverse, sqrt_lorentz, DIAG
from .wedge import (
    WedgeClass,
    Zweibein,
    act,
    canonicalize,
    opposite,
    transport,
    wedge_reflection,
)

COVER_EQ_TOL = 1e-6
DEFAULT_STEPS = 128
MIN_STEPS = 16
MAX_STEPS = 4096
TRUST_RADIUS = 0.5


@dataclass(frozen=True, eq=False)
class PairElement:
    a: WedgeClass
    b: WedgeClass

    def isclose(self, other, tol=1e-8):
        return self.a.isclose(other.a, tol) and self.b.isclose(other.b, tol)

    def __repr__(self):
        return f"PairElement(a={self.a!r}, b={self.b!r})"


@dataclass(frozen=True, eq=False)
class CoverElement:
    rep: np.ndarray
    image: np.ndarray

    @classmethod
    def from_rep(cls, rep):
        rep = np.asarray(rep, dtype=complex)
        return cls(rep, kernels.spinor_map(rep))

    def __matmul__(self, other):
        return product(self, other)

    def __neg__(self):
        return negate(self)

    def isclose(self, other, tol=COVER_EQ_TOL):
        return cover_distance(self, other) < tol

    def __repr__(self):
        return f"CoverElement(rep={self.rep.tolist()})"


ONE = CoverElement(I2.copy(), np.eye(4))
MINUS_ONE = CoverElement(-I2, np.eye(4))


def cover_distance(g, h):
    """Sup-norm distance of representatives, relative once entries exceed 1."""
    scale = max(1.0, float(np.max(np.abs(g.rep))))
    return float(np.max(np.abs(g.rep - h.rep))) / scale


def lambda_pair(m):
    return wedge_reflection(m.a) @ wedge_reflection(m.b)


def act_pair(mu, m):
    return PairElement(act(mu, m.a), act(mu, m.b))


def negate_pair(m):
    """(-a, -b), the pair identified with (a, b) by the relation."""
    return PairElement(opposite(m.a), opposite(m.b))


def flip_second(m):
    """(a, -b), which projects to the other sheet."""
    return PairElement(m.a, opposite(m.b))


def compose_pairs(m, n, tol=1e-8):
    """Groupoid product (a, b) o (b, c) = (a, c)."""
    if not m.b.isclose(n.a, tol):
        raise ValueError("pairs are not composable: middle wedges differ")
    return PairElement(m.a, n.b)


# -- path construction ------------------------------------------------------

def _rotation_boost_stack(axis3, alpha, dir3, chi, s):
    """R(axis, s alpha) @ B(dir, s chi) for every s (standard frame)."""
    n = len(s)
    k = np.array([[0.0, -axis3[2], axis3[1]],
                  [axis3[2], 0.0, -axis3[0]],
                  [-axis3[1], axis3[0], 0.0]])
    th = s * alpha
    rot = np.zeros((n, 4, 4))
    rot[:, 0, 0] = 1.0
    rot[:, 1:, 1:] = (np.eye(3) + np.sin(th)[:, None, None] * k
                      + (1.0 - np.cos(th))[:, None, None] * (k @ k))
    r = s * chi
    ch, sh = np.cosh(r), np.sinh(r)
    bst = np.zeros((n, 4, 4))
    bst[:, 0, 0] = ch
    bst[:, 0, 1:] = sh[:, None] * dir3
    bst[:, 1:, 0] = sh[:, None] * dir3
    bst[:, 1:, 1:] = np.eye(3) + (ch - 1.0)[:, None, None] * np.outer(dir3, dir3)
    return rot @ bst


def _segment(src, dst, steps):
    """Maps mu(s), s in [0, 1], from the identity to a transport src -> dst."""
    t = transport(src.zweibein, dst.zweibein)
    # Far-out wedges make t only approximately Lorentz, so its rotation and
    # boost parameters are read off directly and the exact path endpoint is
    # used from here on. The final snap absorbs the small endpoint error.
    rho, beta, _ = polar_parts_unchecked(t)
    rotvec = Rotation.from_matrix(rho[1:, 1:]).as_rotvec()
    alpha = float(np.linalg.norm(rotvec))
    axis3 = rotvec / alpha if alpha > 1e-15 else np.array([0.0, 0.0, 1.0])
    v = beta[1:, 0]
    n = float(np.linalg.norm(v))
    dir3 = v / n if n > 1e-15 else np.array([0.0, 0.0, 1.0])
    s = np.linspace(0.0, 1.0, steps + 1)
    mus = _rotation_boost_stack(axis3, alpha, dir3, float(np.arcsinh(n)), s)
    return mus, mus[-1]


def _lambda_path(m, steps, via):
    b = m.b
    jb = wedge_reflection(b)
    stops = [c for c in via] + [m.a]
    pieces, pre, cur = [], np.eye(4), b
    for stop in stops:
        mus, t = _segment(cur, stop, steps)
        mus = mus @ pre
        pieces.append(mus if not pieces else mus[1:])
        pre = t @ pre
        cur = stop
    mus = np.concatenate(pieces)
    inv = np.swapaxes(mus, 1, 2)
    g = np.array([1.0, -1.0, -1.0, -1.0])
    inv = g[None, :, None] * inv * g[None, None, :]
    return mus @ jb @ inv @ jb


def _snap(rep, target):
    residual = target @ lorentz_inverse(kernels.spinor_map(rep))
    return kernels.local_lift(residual) @ rep


def project(m, steps=DEFAULT_STEPS, via=()):
    """Element of the covering group represented by the pair ``m``.

    ``via`` lists intermediate wedge classes the moving wedge passes through
    (a different homotopy class of path in L_1, same endpoint in the cover).
    """
    if steps < MIN_STEPS:
        raise ValueError(f"steps must be at least {MIN_STEPS}")
    target = lambda_pair(m)
    n = steps
    while True:
        lams = _lambda_path(m, n, via)
        rep, dist = kernels.lift_path(lams)
        if dist <= TRUST_RADIUS:
            break
        n *= 2
        if n > MAX_STEPS:
            raise CoverError("path-step-too-coarse", f"increment {dist:.3g} exceeds trust radius at {MAX_STEPS} steps")
    rep = _snap(rep, target)
    return CoverElement(rep, kernels.spinor_map(rep))


# -- group operations -------------------------------------------------------

def product(g, h):
    return CoverElement.from_rep(g.rep @ h.rep)


def inverse(g):
    return CoverElement(sl2_inverse(g.rep), lorentz_inverse(g.image))


def negate(g):
    return CoverElement(-g.rep, g.image)


def fiber(mu, e0=E0):
    lf = lift(mu, e0)
    return CoverElement.from_rep(lf.plus), CoverElement.from_rep(lf.minus)


def equivalent(m, n, steps=DEFAULT_STEPS, tol=COVER_EQ_TOL):
    return project(m, steps).isclose(project(n, steps), tol)


def adjoint(h, m, steps=DEFAULT_STEPS):
    return product(product(h, project(m, steps)), inverse(h))


# -- canonical pairs and polar decomposition in the cover -------------------

def _bar(e, e0):
    return canonicalize(Zweibein(e0, e))


def _unit_orthogonal(axis, e0):
    """A unit time-zero vector orthogonal to ``axis`` (deterministic)."""
    f = frame_boost(e0)
    a3 = (lorentz_inverse(f) @ axis)[1:]
    trial = np.eye(3)[int(np.argmin(np.abs(a3)))]
    w = np.cross(a3, trial)
    return f[:, 1:] @ (w / np.linalg.norm(w))


def canonical_pair(g, e0=E0, steps=DEFAULT_STEPS):
    """A pair of wedge classes projecting onto ``g``.

    Generic elements use ``(tau e, beta^{-1/2} e)`` with e orthogonal to the
    rotation axis and the boost direction of the polar parts, where tau is the
    square root of the rotation part lying on the sheet of ``g``.
    """
    e0 = check_e0(e0)
    mu = g.image
    f = frame_boost(e0)
    if np.max(np.abs(mu - np.eye(4))) < 1e-10:
        a = _bar(f[:, 1], e0)
        sign = np.real(np.trace(g.rep))
        return PairElement(a, a if sign > 0 else opposite(a))
    rho, beta, _ = polar_decompose(mu, e0)
    trivial_rot = np.max(np.abs(rho - np.eye(4))) < 1e-10
    trivial_boost = np.max(np.abs(beta - np.eye(4))) < 1e-10
    if trivial_rot:
        d, chi = boost_direction_rapidity(beta, e0)
        e = _bar(_unit_orthogonal(d, e0), e0)
        half = act(make_boost(d, -0.5 * chi, e0), e)
        candidates = [PairElement(e, half), PairElement(e, opposite(half))]
    else:
        axis, alpha = rotation_axis_angle(rho, e0)
        if trivial_boost:
            e_vec = _unit_orthogonal(axis, e0)
            half_beta = np.eye(4)
        else:
            try:
                e_vec = e_section(rho, beta, e0)
            except CoverError:
                e_vec = _unit_orthogonal(axis, e0)
            d, chi = boost_direction_rapidity(beta, e0)
            half_beta = make_boost(d, -0.5 * chi, e0)
        e = _bar(e_vec, e0)
        second = act(half_beta, e)
        taus = [make_rotation(axis, 0.5 * alpha, e0), make_rotation(axis, 0.5 * alpha + np.pi, e0)]
        candidates = [PairElement(act(tau, e), second) for tau in taus]
    if project(candidates[0], steps).isclose(g):
        return candidates[0]
    return candidates[1]


def polar_cover(g, e0=E0):
    """``g = r (.) b`` over the polar parts; b is the positive-trace boost lift."""
    e0 = check_e0(e0)
    _, beta, _ = polar_decompose(g.image, e0)
    b = CoverElement.from_rep(lift(beta, e0).plus)
    r = product(g, inverse(b))
    return r, b


# -- explicit witnesses of the relation --------------------------------------

def _commutant_families(a):
    """Parametrized one-complex-parameter subgroups commuting with ``a``."""
    jf = jordan_classify(a)
    p, pinv = jf.P, sl2_inverse(jf.P)
    fams = []
    if jf.kind == DIAG:
        def diag(u, v):
            w = np.exp(u + 1j * v)
            return p @ np.diag([w, 1.0 / w]) @ pinv
        fams.append(diag)
        if abs(jf.z - 1j) < 1e-8 or abs(jf.z + 1j) < 1e-8:
            def anti(u, v):
                w = np.exp(u + 1j * v)
                return p @ np.array([[0.0, w], [-1.0 / w, 0.0]]) @ pinv
            fams.append(anti)
    else:
        def para(u, v):
            return p @ np.array([[1.0, u + 1j * v], [0.0, 1.0]]) @ pinv
        fams.append(para)
    return fams


def _pair_matches(mu, m, n, tol=1e-7):
    return act_pair(mu, m).isclose(n, tol)


def equivalence_witness(m, n, restarts=8, seed=0):
    """A map mu commuting with lambda(m) with mu^2 m = n or mu^2 m = (-n.a, -n.b).

    Searches the commutant in the Jordan frame of lambda(m); returns ``None``
    when no witness is found (in particular when the pairs are inequivalent).
    """
    lam = lambda_pair(m)
    if not np.allclose(lam, lambda_pair(n), atol=1e-7 * max(1.0, float(np.max(np.abs(lam))))):
        return None
    targets = [n, negate_pair(n)]
    rng = np.random.default_rng(seed)

    def roots_commuting(nu):
        if np.max(np.abs(nu - np.eye(4))) < 1e-10:
            return [np.eye(4)]
        return [r for r in sqrt_lorentz(nu) if commute(r, lam)]

    if np.max(np.abs(lam - np.eye(4))) < 1e-10:
        for tgt in targets:
            nu = transport(m.b.zweibein, tgt.b.zweibein)
            for mu in roots_commuting(nu):
                if _pair_matches(mu @ mu, m, tgt):
                    return mu
        return None

    a = lift(lam).plus
    for fam in _commutant_families(a):
        for tgt in targets:
            def resid(x, fam=fam, tgt=tgt):
                nu = kernels.spinor_map(fam(*x))
                img = act(nu, m.b)
                return np.concatenate([img.t - tgt.b.t, img.x - tgt.b.x])
            for k in range(restarts):
                x0 = np.zeros(2) if k == 0 else rng.normal(size=2)
                try:
                    sol = least_squares(resid, x0, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15)
                except (ValueError, FloatingPointError, np.linalg.LinAlgError):
                    continue
                if np.max(np.abs(sol.fun)) > 1e-9:
                    continue
                nu = kernels.spinor_map(fam(*sol.x))
                for mu in roots_commuting(nu):
                    if _pair_matches(mu @ mu, m, tgt):
                        return mu
    return None


def rotation_about(axis, angle):
    """Rotation in the standard frame (helper for demos)."""
    m = np.eye(4)
    m[1:, 1:] = rotation_3d(axis, angle)
    return m


def demo_sheet(total_angle, steps=1024):
    """Lift the rotation path theta -> R(e3, theta), theta in [0, total_angle]."""
    th = np.linspace(0.0, total_angle, steps + 1)
    lams = np.array([rotation_about(np.array([0.0, 0.0, 1.0]), t) for t in th])
    rep, dist = kernels.lift_path(lams)
    if dist > TRUST_RADIUS:
        raise CoverError("path-step-too-coarse", f"increment {dist:.3g} with {steps} steps")
    return _snap(rep, lams[-1])

