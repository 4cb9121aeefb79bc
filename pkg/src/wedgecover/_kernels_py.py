"""Pure numpy implementation of the inner-loop kernels.

Mirrors the compiled ``_kernels`` extension function for function; the
selector in :mod:`wedgecover.kernels` falls back to this module when the
extension is not built.
"""
import numpy as np

SIGMA = np.array([
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)

# SIGMA_PRODUCTS[m, n] = sigma_m @ sigma_n
SIGMA_PRODUCTS = np.einsum("mij,njk->mnik", SIGMA, SIGMA)

_G = np.array([1.0, -1.0, -1.0, -1.0])


def spinor_map(a):
    """Lorentz matrix of A: entries 1/2 Re tr(sigma_m A sigma_n A^dagger)."""
    a = np.asarray(a, dtype=complex)[..., None, :, :]
    conj = a @ SIGMA @ np.swapaxes(a.conj(), -1, -2)
    return 0.5 * np.einsum("mij,...nji->...mn", SIGMA, conj).real


def local_lift(lam):
    """SL(2,C) preimage of lam on the sheet with nonnegative Re tr.

    Uses sum_{m,n} lam[m,n] sigma_m sigma_n = 2 conj(tr A) A, which is only
    usable away from tr A = 0, i.e. for maps not too far from the identity.
    """
    lam = np.asarray(lam, dtype=float)
    m = np.einsum("...mn,mnij->...ij", lam, SIGMA_PRODUCTS)
    det = m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    a = m / np.sqrt(det)[..., None, None]
    flip = (a[..., 0, 0] + a[..., 1, 1]).real < 0
    return np.where(flip[..., None, None], -a, a)


def lorentz_increments(lams):
    """lams[k] @ inverse(lams[k-1]) for a stack of Lorentz matrices."""
    inv_prev = _G[None, :, None] * np.swapaxes(lams[:-1], 1, 2) * _G[None, None, :]
    return lams[1:] @ inv_prev


def ordered_product(mats):
    """mats[-1] @ ... @ mats[0] by pairwise reduction."""
    mats = np.asarray(mats)
    if len(mats) == 0:
        return np.eye(2, dtype=complex)
    while len(mats) > 1:
        if len(mats) % 2:
            mats = np.concatenate([mats, np.eye(2, dtype=complex)[None]])
        mats = mats[1::2] @ mats[0::2]
    return mats[0]


def lift_path(lams):
    """Lift a path of Lorentz matrices starting at the identity.

    Returns the SL(2,C) endpoint obtained by multiplying the near-identity
    lifts of consecutive increments, and the largest sup-norm distance of an
    increment lift from the identity.
    """
    lams = np.ascontiguousarray(lams, dtype=float)
    steps = local_lift(lorentz_increments(lams))
    dist = float(np.max(np.abs(steps - np.eye(2)))) if len(steps) else 0.0
    return ordered_product(steps), dist
