"""SL(2,C) and its covering map onto the restricted Lorentz group.

The spinor map identifies x with ``X = x^0 I + x^i sigma_i`` and sends A to
the Lorentz map ``X -> A X A^dagger``. With this convention
``diag(e^{chi/2}, e^{-chi/2})`` is the boost along e3 with rapidity chi and
``exp(-i theta sigma_3 / 2)`` the right-handed rotation about e3 by theta.
"""
from typing import NamedTuple

import numpy as np

from . import kernels
from ._kernels_py import SIGMA
from .errors import CoverError
from .lorentz import (
    boost_direction_rapidity,
    check_restricted,
    lorentz_inverse,
    polar_decompose,
    rotation_axis_angle,
)
from .minkowski import E0, check_e0, frame_boost

SL2_TOL = 1e-9
UNIT_CIRCLE_TOL = 1e-12
PARABOLIC_TOL = 1e-10

I2 = np.eye(2, dtype=complex)

DIAG = "diag"
PARABOLIC_PLUS = "parabolic+"
PARABOLIC_MINUS = "parabolic-"


class Lift(NamedTuple):
    plus: np.ndarray
    minus: np.ndarray


class JordanForm(NamedTuple):
    kind: str
    z: complex
    P: np.ndarray

    @property
    def normal_form(self):
        if self.kind == DIAG:
            return np.diag([self.z, 1.0 / self.z]).astype(complex)
        s = 1.0 if self.kind == PARABOLIC_PLUS else -1.0
        return np.array([[s, 1.0], [0.0, s]], dtype=complex)


class SquareRoots(NamedTuple):
    roots: list
    has_involution_family: bool


def as_sl2(a, tol=SL2_TOL):
    a = np.asarray(a, dtype=complex)
    if a.shape != (2, 2) or not np.all(np.isfinite(a)):
        raise CoverError("not-unit-determinant", "expected a finite 2x2 complex matrix")
    if abs(np.linalg.det(a) - 1.0) > tol * max(1.0, float(np.max(np.abs(a))) ** 2):
        raise CoverError("not-unit-determinant", f"det = {np.linalg.det(a)}")
    return a


def sl2_inverse(a):
    return np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]])


def pauli_vector(n):
    """n . sigma for a real 3-vector n."""
    return n[0] * SIGMA[1] + n[1] * SIGMA[2] + n[2] * SIGMA[3]


def covering_map(a):
    return kernels.spinor_map(as_sl2(a))


def rotation_rotor(axis3, angle):
    return np.cos(angle / 2) * I2 - 1j * np.sin(angle / 2) * pauli_vector(axis3)


def boost_rotor(dir3, rapidity):
    return np.cosh(rapidity / 2) * I2 + np.sinh(rapidity / 2) * pauli_vector(dir3)


def _frame_rotor(e0):
    """Positive-trace lift of the pure boost taking (1,0,0,0) to e0."""
    f = frame_boost(e0)
    u = f[:, 0]
    n = np.linalg.norm(u[1:])
    if n < 1e-15:
        return I2.copy(), f
    return boost_rotor(u[1:] / n, np.arcsinh(n)), f


def lift(mu, e0=E0):
    """The two SL(2,C) preimages of ``mu``; ``plus`` is the polar branch.

    ``plus = A_rho @ A_beta`` where A_rho = cos(alpha/2) - i sin(alpha/2) a.sigma
    and A_beta = cosh(chi/2) + sinh(chi/2) b.sigma, built from the polar parts of
    ``mu`` relative to e0 (a, b in e0-frame coordinates).
    """
    e0 = check_e0(e0)
    mu = check_restricted(mu)
    rho, beta, _ = polar_decompose(mu, e0)
    # rho and beta carry rounding of order eps * |mu|^2.
    tol = max(1e-8, 1e-13 * float(np.max(np.abs(mu))) ** 2)
    axis, alpha = rotation_axis_angle(rho, e0, tol)
    direction, chi = boost_direction_rapidity(beta, e0, tol)
    fr, f = _frame_rotor(e0)
    finv = lorentz_inverse(f)
    a3 = (finv @ axis)[1:]
    b3 = (finv @ direction)[1:]
    core = rotation_rotor(a3, alpha) @ boost_rotor(b3, chi)
    plus = fr @ core @ sl2_inverse(fr)
    # Snap the residual rounding of the polar split onto the exact preimage. For
    # very large boosts the residual itself is dominated by cancellation, so the
    # snap is kept only when it improves the fit.
    residual = mu @ lorentz_inverse(kernels.spinor_map(plus))
    snapped = kernels.local_lift(residual) @ plus
    if _image_error(snapped, mu) < _image_error(plus, mu):
        plus = snapped
    return Lift(plus, -plus)


def _image_error(a, mu):
    return float(np.max(np.abs(kernels.spinor_map(a) - mu)))


def _eigenvector(a, z):
    c1 = np.array([a[0, 1], z - a[0, 0]])
    c2 = np.array([z - a[1, 1], a[1, 0]])
    v = c1 if np.linalg.norm(c1) >= np.linalg.norm(c2) else c2
    return v / np.linalg.norm(v)


def _preferred_eigenvalue(z):
    """Of {z, 1/z} pick |z| > 1; on the unit circle Im z >= 0, then Re z >= 0."""
    w = 1.0 / z
    if abs(abs(z) - 1.0) > UNIT_CIRCLE_TOL:
        return z if abs(z) > 1 else w
    if abs(z.imag - w.imag) > UNIT_CIRCLE_TOL:
        return z if z.imag > w.imag else w
    return z if z.real >= w.real else w


def _unit_det(p):
    return p / np.sqrt(np.linalg.det(p))


def jordan_classify(a):
    """``a = P N P^{-1}`` with N one of diag(z, 1/z), [[1,1],[0,1]], [[-1,1],[0,-1]]."""
    a = as_sl2(a)
    tr = a[0, 0] + a[1, 1]
    disc = np.sqrt(tr * tr - 4.0)
    scale = max(1.0, float(np.max(np.abs(a))))
    if abs(tr * tr - 4.0) < PARABOLIC_TOL * scale ** 2:
        s = 1.0 if tr.real > 0 else -1.0
        nil = a - s * I2
        if np.max(np.abs(nil)) < 1e-8 * scale:
            return JordanForm(DIAG, complex(s), I2.copy())
        # Columns v1 = N v2, v2 with N v2 != 0 give P^{-1} A P = [[s, 1], [0, s]].
        j = int(np.argmax(np.linalg.norm(nil, axis=0)))
        v2 = np.zeros(2, dtype=complex)
        v2[j] = 1.0
        v1 = nil @ v2
        p = np.column_stack([v1, v2])
        p = p / np.sqrt(np.linalg.det(p))
        # Rescaling P by a scalar leaves the normal form unchanged.
        return JordanForm(PARABOLIC_PLUS if s > 0 else PARABOLIC_MINUS, complex(s * np.inf), p)
    z1 = 0.5 * (tr + disc) if abs(tr + disc) >= abs(tr - disc) else 0.5 * (tr - disc)
    z = _preferred_eigenvalue(complex(z1))
    p = np.column_stack([_eigenvector(a, z), _eigenvector(a, 1.0 / z)])
    return JordanForm(DIAG, z, _unit_det(p))


def sqrt_sl2(a):
    """All B in SL(2,C) with B @ B = a.

    For a = +I or -I the square roots form a continuum (every trace-zero B
    squares to -I); the list then holds only canonical representatives and
    ``has_involution_family`` is set.
    """
    a = as_sl2(a)
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - I2)) < 1e-12 * scale:
        return SquareRoots([I2.copy(), -I2], True)
    if np.max(np.abs(a + I2)) < 1e-12 * scale:
        r = np.diag([1j, -1j])
        return SquareRoots([r, -r], True)
    jf = jordan_classify(a)
    p, pinv = jf.P, sl2_inverse(jf.P)
    if jf.kind == PARABOLIC_MINUS:
        return SquareRoots([], False)
    if jf.kind == PARABOLIC_PLUS:
        b = p @ np.array([[1.0, 0.5], [0.0, 1.0]]) @ pinv
    else:
        w = np.sqrt(jf.z)
        b = p @ np.diag([w, 1.0 / w]) @ pinv
    return SquareRoots([b, -b], False)


def _dedupe(mats, tol=1e-8):
    out = []
    for m in mats:
        scale = max(1.0, float(np.max(np.abs(m))))
        if all(np.max(np.abs(m - o)) > tol * scale for o in out):
            out.append(m)
    return out


def sqrt_lorentz(mu):
    """The restricted square roots of ``mu != 1`` (one or two of them)."""
    mu = check_restricted(mu)
    if np.max(np.abs(mu - np.eye(4))) < 1e-10:
        raise CoverError("identity-input", "the identity has infinitely many square roots")
    a = lift(mu).plus
    roots = sqrt_sl2(a).roots + sqrt_sl2(-a).roots
    return _dedupe([kernels.spinor_map(b) for b in roots])


def commutes(a, b, tol=SL2_TOL):
    return float(np.max(np.abs(a @ b - b @ a))) < tol * max(1.0, float(np.max(np.abs(a)) * np.max(np.abs(b))))


def anticommutes(a, b, tol=SL2_TOL):
    return float(np.max(np.abs(a @ b + b @ a))) < tol * max(1.0, float(np.max(np.abs(a)) * np.max(np.abs(b))))


def commutant_abelian(mu, tol=1e-8):
    """True iff the commutant of ``mu`` in L_1 is abelian, i.e. mu^2 != 1."""
    mu = check_restricted(mu)
    scale = max(1.0, float(np.max(np.abs(mu))) ** 2)
    return float(np.max(np.abs(mu @ mu - np.eye(4)))) > tol * scale


