"""Finite-dimensional spin representations of the cover and the statistics sign.

Spin j acts on homogeneous polynomials of degree n = 2j in two variables. In
the basis ``f_k = sqrt(C(n, k)) x^(n-k) y^k`` the restriction to SU(2) is
unitary; boosts are represented by non-unitary matrices, as for any
finite-dimensional representation of SL(2,C).
"""
from dataclasses import dataclass
from math import comb

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.linalg import block_diag

from .cover import MINUS_ONE, PairElement, project
from .errors import CoverError
from .wedge import NAMED_WEDGES, opposite, standard_wedge


@dataclass(frozen=True)
class SpinRep:
    two_j: int

    def __post_init__(self):
        if int(self.two_j) != self.two_j or self.two_j < 0:
            raise ValueError("two_j must be a non-negative integer")

    @property
    def dim(self):
        return self.two_j + 1

    @property
    def spin(self):
        return self.two_j / 2


@dataclass(frozen=True)
class DirectSumRep:
    """Block-diagonal sum of irreducible spin representations."""
    parts: tuple

    @property
    def dim(self):
        return sum(p.dim for p in self.parts)


def symmetric_power(a, n):
    """Matrix of the degree-n symmetric power of the 2x2 matrix ``a``."""
    a = np.asarray(a, dtype=complex)
    d = np.empty((n + 1, n + 1), dtype=complex)
    col_x = np.array([a[0, 0], a[1, 0]])  # image of x, as a polynomial in y/x
    col_y = np.array([a[0, 1], a[1, 1]])
    for k in range(n + 1):
        poly = P.polymul(P.polypow(col_x, n - k), P.polypow(col_y, k))
        coeffs = np.zeros(n + 1, dtype=complex)
        coeffs[:len(poly)] = poly
        d[:, k] = coeffs
    norm = np.sqrt([comb(n, k) for k in range(n + 1)])
    return d * norm[None, :] / norm[:, None]


def rep_matrix(r, g):
    """D(g) for a cover element (or a bare SL(2,C) matrix) ``g``."""
    rep = g.rep if hasattr(g, "rep") else np.asarray(g, dtype=complex)
    if isinstance(r, DirectSumRep):
        return block_diag(*[rep_matrix(p, rep) for p in r.parts])
    return symmetric_power(rep, r.two_j)


def statistics_operator(r, wedge=None, steps=128):
    """k = D(pi(a, -a)); the choice of wedge a does not matter."""
    a = standard_wedge(NAMED_WEDGES["e1"]) if wedge is None else wedge
    return rep_matrix(r, project(PairElement(a, opposite(a)), steps))


def twist(r, wedge=None):
    k = statistics_operator(r, wedge)
    return (np.eye(len(k)) + 1j * k) / (1 + 1j)


def bose_fermi_projectors(r, wedge=None):
    k = statistics_operator(r, wedge)
    eye = np.eye(len(k))
    return 0.5 * (eye + k), 0.5 * (eye - k)


def spin_statistics_sign(r, tol=1e-12):
    """(-1)^(2j), checked against D(-1) and against exp(2 pi i j)."""
    if isinstance(r, DirectSumRep):
        raise CoverError("reducible-input", "the sign is defined for a single spin")
    sign = 1 if r.two_j % 2 == 0 else -1
    k = rep_matrix(r, MINUS_ONE)
    phase = np.exp(2j * np.pi * r.spin)
    if np.max(np.abs(k - sign * np.eye(r.dim))) > tol or abs(phase - sign) > tol:
        raise CoverError("ill-conditioned", "statistics operator disagrees with exp(2 pi i j)")
    return sign
