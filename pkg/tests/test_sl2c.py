import numpy as np
import pytest

from oracles import spinor_image
from samplers import random_e0, random_restricted, random_sl2
from wedgecover.errors import CoverError
from wedgecover.lorentz import make_boost, make_rotation, polar_decompose
from wedgecover.minkowski import E1, E3
from wedgecover.sl2c import (
    DIAG, I2, PARABOLIC_MINUS, PARABOLIC_PLUS, anticommutes, as_sl2, commutant_abelian,
    commutes, covering_map, jordan_classify, lift, rotation_rotor, sl2_inverse, sqrt_lorentz,
    sqrt_sl2,
)

SIGMA3 = np.diag([1.0, -1.0]).astype(complex)


def rel_close(a, b, tol):
    return np.max(np.abs(a - b)) <= tol * max(1.0, np.max(np.abs(b)))


def test_covering_examples():
    assert np.allclose(covering_map(I2), np.eye(4))
    chi, th = 0.9, 1.3
    assert np.allclose(covering_map(np.diag([np.exp(chi / 2), np.exp(-chi / 2)])), make_boost(E3, chi))
    rotor = np.diag([np.exp(-1j * th / 2), np.exp(1j * th / 2)])
    assert np.allclose(covering_map(rotor), make_rotation(E3, th))


def test_covering_matches_oracle_and_is_homomorphism():
    rng = np.random.default_rng(0)
    for _ in range(200):
        a, b = random_sl2(rng), random_sl2(rng)
        la, lb = covering_map(a), covering_map(b)
        assert rel_close(la, spinor_image(a), 1e-12)
        assert rel_close(covering_map(a @ b), la @ lb, 1e-9)
        assert np.array_equal(covering_map(-a), la)


def test_not_unit_determinant():
    with pytest.raises(CoverError) as err:
        covering_map(2 * I2)
    assert err.value.code == "not-unit-determinant"


def test_lift_examples():
    plus, minus = lift(np.eye(4))
    assert np.allclose(plus, I2) and np.allclose(minus, -I2)
    plus, _ = lift(make_rotation(E3, np.pi / 2))
    assert np.allclose(plus, np.diag([np.exp(-1j * np.pi / 4), np.exp(1j * np.pi / 4)]))


def test_lift_round_trips():
    rng = np.random.default_rng(1)
    for _ in range(300):
        e0 = random_e0(rng)
        mu = random_restricted(rng)
        plus, minus = lift(mu, e0)
        assert np.allclose(minus, -plus)
        assert rel_close(covering_map(plus), mu, 1e-9)
        a = random_sl2(rng)
        back = lift(covering_map(a)).plus
        assert rel_close(back, a, 1e-8) or rel_close(back, -a, 1e-8)


def test_lift_polar_branch_consistency():
    rng = np.random.default_rng(2)
    for _ in range(200):
        mu = random_restricted(rng)
        rho, beta, _ = polar_decompose(mu)
        assert rel_close(lift(mu).plus, lift(rho).plus @ lift(beta).plus, 1e-9)


def test_lift_rejects_non_restricted():
    with pytest.raises(CoverError) as err:
        lift(np.diag([-1.0, -1, 1, 1]))
    assert err.value.code == "not-restricted"


def test_jordan_examples():
    jf = jordan_classify(I2)
    assert jf.kind == DIAG and jf.z == 1
    jf = jordan_classify(np.array([[1, 1], [0, 1]]))
    assert jf.kind == PARABOLIC_PLUS and np.allclose(jf.P, I2)
    assert jordan_classify(np.array([[-1, 1], [0, -1]])).kind == PARABOLIC_MINUS


def test_jordan_branch_rule_and_reconstruction():
    rng = np.random.default_rng(3)
    z = 2 + 1j
    for _ in range(100):
        p = random_sl2(rng)
        a = p @ np.diag([z, 1 / z]) @ sl2_inverse(p)
        jf = jordan_classify(a)
        assert jf.kind == DIAG and abs(jf.z - z) < 1e-8
        assert abs(np.linalg.det(jf.P) - 1) < 1e-9
        assert rel_close(jf.P @ jf.normal_form @ sl2_inverse(jf.P), a, 1e-8)
    for w in (np.exp(0.4j), np.exp(-0.4j), np.exp(2.5j), np.exp(-2.5j)):
        jf = jordan_classify(np.diag([w, 1 / w]))
        assert abs(abs(jf.z) - 1) < 1e-12 and jf.z.imag >= 0
    for w in (-1 + 0j, 1 + 0j):
        jf = jordan_classify(np.diag([w, 1 / w]))
        assert jf.kind == DIAG
    for s, kind in ((1, PARABOLIC_PLUS), (-1, PARABOLIC_MINUS)):
        p = random_sl2(rng)
        a = p @ np.array([[s, 1], [0, s]]) @ sl2_inverse(p)
        jf = jordan_classify(a)
        assert jf.kind == kind
        assert rel_close(jf.P @ jf.normal_form @ sl2_inverse(jf.P), a, 1e-8)


def test_sqrt_examples():
    res = sqrt_sl2(I2)
    assert res.has_involution_family and any(np.allclose(r, I2) for r in res.roots)
    res = sqrt_sl2(-I2)
    assert res.has_involution_family and all(np.allclose(r @ r, -I2) for r in res.roots)
    assert sqrt_sl2(np.array([[-1, 1], [0, -1]])).roots == []
    roots = sqrt_sl2(np.diag([4, 0.25])).roots
    assert len(roots) == 2
    assert any(np.allclose(r, np.diag([2, 0.5])) for r in roots)
    assert any(np.allclose(r, -np.diag([2, 0.5])) for r in roots)


def test_sqrt_squares_back():
    rng = np.random.default_rng(4)
    for k in range(200):
        p = random_sl2(rng)
        if k % 4 == 0:
            n = np.array([[1, 1], [0, 1]])
        else:
            z = rng.normal() + 1j * rng.normal()
            n = np.diag([z, 1 / z])
        a = as_sl2(p @ n @ sl2_inverse(p), tol=1e-6)
        res = sqrt_sl2(a)
        assert len(res.roots) == 2 and not res.has_involution_family
        for b in res.roots:
            assert rel_close(b @ b, a, 1e-9)


def test_sqrt_lorentz_examples():
    roots = sqrt_lorentz(make_rotation(E3, np.pi))
    assert len(roots) == 2
    assert np.allclose(roots[0] @ roots[1], np.eye(4))
    targets = [make_rotation(E3, np.pi / 2), make_rotation(E3, 3 * np.pi / 2)]
    for t in targets:
        assert any(np.allclose(r, t) for r in roots)
    mu = make_boost(E1, 2.0)
    roots = sqrt_lorentz(mu)
    assert len(roots) == 2
    assert any(np.allclose(r, make_boost(E1, 1.0)) for r in roots)
    assert any(np.allclose(r, make_rotation(E1, np.pi) @ make_boost(E1, 1.0)) for r in roots)
    for r in roots:
        assert np.allclose(r @ r, mu)
    with pytest.raises(CoverError) as err:
        sqrt_lorentz(np.eye(4))
    assert err.value.code == "identity-input"


def test_sqrt_lorentz_random():
    rng = np.random.default_rng(5)
    for _ in range(200):
        mu = random_restricted(rng, 1.5)
        roots = sqrt_lorentz(mu)
        assert 1 <= len(roots) <= 2
        for r in roots:
            assert rel_close(r @ r, mu, 1e-8)


def test_commutant_abelian_examples():
    assert not commutant_abelian(np.eye(4))
    assert not commutant_abelian(make_rotation(E3, np.pi))
    assert commutant_abelian(make_rotation(E3, 1.0))


def test_commuting_squares_imply_commuting_roots():
    rng = np.random.default_rng(6)
    for _ in range(100):
        p = random_sl2(rng, 0.5)
        pinv = sl2_inverse(p)
        z, w = np.exp(rng.normal(size=2) + 1j * rng.uniform(-np.pi, np.pi, size=2))
        mu = covering_map(as_sl2(p @ np.diag([z, 1 / z]) @ pinv, tol=1e-6))
        nu = covering_map(as_sl2(p @ np.diag([w, 1 / w]) @ pinv, tol=1e-6))
        for root in sqrt_lorentz(nu @ nu):
            if commutant_abelian(root):
                assert commutes(mu @ mu, root @ root, tol=1e-7)
                assert commutes(mu, root, tol=1e-7)


def test_matrix_predicates():
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    assert anticommutes(SIGMA3, sx) and not commutes(SIGMA3, sx)
    assert commutes(SIGMA3, rotation_rotor(np.array([0, 0, 1.0]), 0.4))
    r = make_rotation(E3, 0.8)
    assert commutes(r, r @ r)
    assert not commutes(r, make_boost(E1, 1.0))
