"""JSON encodings of the library's values and canonical output formatting."""
import json

import numpy as np

from .cover import CoverElement, PairElement
from .lorentz import SpacelikePlane, det_sign, is_orthochronous
from .minkowski import vec
from .sl2c import as_sl2
from .spin import SpinRep
from .wedge import NAMED_WEDGES, opposite, standard_wedge, wedge

ZERO_SNAP = 1e-13


class ParseError(ValueError):
    code = "parse-error"

    def __init__(self, detail):
        super().__init__(detail)
        self.detail = detail


def _require(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing key {key!r}")
    return obj[key]


def _numbers(obj, shape, what):
    try:
        arr = np.asarray(obj, dtype=float)
    except (TypeError, ValueError):
        raise ParseError(f"{what}: expected numbers") from None
    if arr.size != int(np.prod(shape)) or not np.all(np.isfinite(arr)):
        raise ParseError(f"{what}: expected {int(np.prod(shape))} finite numbers")
    return arr.reshape(shape)


# -- decoding ---------------------------------------------------------------

def four_vector(obj):
    return vec(_numbers(obj, (4,), "four-vector"))


def lorentz_map(obj):
    m = obj["matrix"] if isinstance(obj, dict) and "matrix" in obj else obj
    return _numbers(m, (4, 4), "matrix")


def spacelike_plane(obj):
    return SpacelikePlane(four_vector(_require(obj, "u")), four_vector(_require(obj, "v")))


def wedge_class(obj):
    if isinstance(obj, str):
        # "e1".."e3" name the standard wedges; a leading "-" names the opposite one
        name = obj[1:] if obj.startswith("-") else obj
        if name not in NAMED_WEDGES:
            raise ParseError(f"unknown wedge name {obj!r}")
        a = standard_wedge(NAMED_WEDGES[name])
        return opposite(a) if obj.startswith("-") else a
    return wedge(four_vector(_require(obj, "t")), four_vector(_require(obj, "x")))


def pair_element(obj):
    return PairElement(wedge_class(_require(obj, "a")), wedge_class(_require(obj, "b")))


def sl2(obj):
    try:
        arr = np.asarray(obj, dtype=float)
    except (TypeError, ValueError):
        raise ParseError("SL2: expected nested [re, im] pairs") from None
    if arr.shape == (2, 2, 2):
        a = arr[..., 0] + 1j * arr[..., 1]
    elif arr.shape == (2, 2):
        a = arr.astype(complex)
    else:
        raise ParseError(f"SL2: unexpected shape {arr.shape}")
    if not np.all(np.isfinite(a)):
        raise ParseError("SL2: non-finite entry")
    return as_sl2(a)


def cover_element(obj):
    rep = _require(obj, "rep") if isinstance(obj, dict) else obj
    return CoverElement.from_rep(sl2(rep))


def spin_rep(obj):
    n = _require(obj, "two_j") if isinstance(obj, dict) else obj
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParseError("two_j must be a non-negative integer")
    return SpinRep(n)


# -- encoding ---------------------------------------------------------------

def encode_vector(v):
    return [float(c) for c in v]


def encode_lorentz(m):
    return {"matrix": [float(c) for c in np.ravel(m)], "det_sign": det_sign(m),
            "orthochronous": is_orthochronous(m)}


def encode_plane(p):
    return {"u": encode_vector(p.u), "v": encode_vector(p.v)}


def encode_wedge(a):
    return {"t": encode_vector(a.t), "x": encode_vector(a.x)}


def encode_pair(m):
    return {"a": encode_wedge(m.a), "b": encode_wedge(m.b)}


def encode_complex_matrix(a):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(a, dtype=complex)]


def encode_cover(g):
    return {"rep": encode_complex_matrix(g.rep), "image": encode_lorentz(g.image)}


def _round(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if abs(x) < ZERO_SNAP:
            return 0.0
        return float("%.12g" % x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, dict):
        return {str(k): _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def canonical_dumps(obj):
    """Sorted keys, floats rounded to 12 significant digits, tiny values as 0."""
    return json.dumps(_round(obj), sort_keys=True)
