import numpy as np
import pytest

from samplers import random_restricted, random_wedge
from wedgecover.errors import CoverError
from wedgecover.lorentz import lorentz_inverse, make_boost, make_rotation, reflect_at_plane
from wedgecover.minkowski import E0, E1, E2, E3, minkowski_inner
from wedgecover.wedge import (
    Zweibein, act, boost_group, canonicalize, edge, edge_rotation, lightlike_pair, opposite,
    stabilizes, standard_wedge, transport, wedge, wedge_contains, wedge_from_edge,
    wedge_from_lightlike_pair, wedge_reflection, wedge_reflection_via_plane,
)

E1BAR = standard_wedge(E1)


def sample_points(rng, n=400):
    return rng.normal(size=(n, 4)) * 3


def test_zweibein_validation():
    Zweibein(E0, E1).validate()
    with pytest.raises(CoverError) as err:
        Zweibein(-E0, E1).validate()
    assert err.value.code == "invalid-zweibein"
    with pytest.raises(CoverError):
        wedge(E0, E0 + E1)


def test_canonicalize_examples():
    assert canonicalize(Zweibein(E0, E1)).isclose(E1BAR)
    b = make_boost(E1, 2.0)
    assert canonicalize(Zweibein(b @ E0, b @ E1)).isclose(E1BAR)


def test_canonical_form_and_idempotence():
    rng = np.random.default_rng(0)
    for _ in range(200):
        mu = random_restricted(rng)
        c = canonicalize(Zweibein(mu @ E0, mu @ E1))
        assert abs(c.x[0]) < 1e-10
        assert canonicalize(c.zweibein).isclose(c)


def test_canonicalize_constant_on_boost_orbit():
    rng = np.random.default_rng(1)
    for _ in range(100):
        a = random_wedge(rng)
        chi = rng.uniform(-3, 3)
        b = boost_group(a, chi)
        assert canonicalize(Zweibein(b @ a.t, b @ a.x)).isclose(a)


def test_canonicalize_commutes_with_action():
    rng = np.random.default_rng(2)
    for _ in range(100):
        mu, nu = random_restricted(rng), random_restricted(rng, 1.0)
        xi = Zweibein(nu @ E0, nu @ E1)
        direct = canonicalize(Zweibein(mu @ xi.t, mu @ xi.x))
        assert act(mu, canonicalize(xi)).isclose(direct)


def test_contains_examples():
    assert wedge_contains(E1BAR, [0, 1, 0, 0])
    assert not wedge_contains(E1BAR, [2, 1, 0, 0])
    assert not wedge_contains(E1BAR, [1, 1, 0, 0])


def test_action_examples():
    assert act(np.eye(4), E1BAR).isclose(E1BAR)
    assert act(make_rotation(E3, np.pi / 2), E1BAR).isclose(standard_wedge(E2))
    assert act(make_boost(E1, 1.3), E1BAR).isclose(E1BAR)


def test_action_covariance_of_membership():
    rng = np.random.default_rng(3)
    for _ in range(50):
        a, mu = random_wedge(rng), random_restricted(rng)
        b = act(mu, a)
        for p in sample_points(rng, 50):
            assert wedge_contains(b, mu @ p) == wedge_contains(a, p)


def test_action_of_time_reversing_maps():
    rng = np.random.default_rng(4)
    for _ in range(50):
        a, c = random_wedge(rng), random_wedge(rng)
        j = wedge_reflection(c)
        b = act(j, a)
        for p in sample_points(rng, 50):
            assert wedge_contains(b, j @ p) == wedge_contains(a, p)


def test_opposite():
    assert opposite(E1BAR).isclose(standard_wedge(-E1))
    rng = np.random.default_rng(5)
    a = random_wedge(rng)
    assert opposite(opposite(a)).isclose(a)
    assert (-a).isclose(opposite(a))
    j = wedge_reflection(a)
    for p in sample_points(rng):
        assert not (wedge_contains(a, p) and wedge_contains(opposite(a), p))
        if wedge_contains(a, p):
            assert wedge_contains(opposite(a), j @ p)


def test_reflection_examples():
    j = wedge_reflection(E1BAR)
    assert np.allclose(j, np.diag([-1.0, -1, 1, 1]))
    rng = np.random.default_rng(6)
    for _ in range(100):
        a = random_wedge(rng)
        j = wedge_reflection(a)
        assert np.allclose(j, wedge_reflection(opposite(a)))
        assert np.allclose(j @ j, np.eye(4), atol=1e-10)
        assert np.allclose(j, wedge_reflection_via_plane(a), atol=1e-9)
        assert np.allclose(j @ a.t, -a.t) and np.allclose(j @ a.x, -a.x)


def test_reflection_conjugation_covariance():
    rng = np.random.default_rng(7)
    for _ in range(100):
        a, mu = random_wedge(rng), random_restricted(rng)
        lhs = wedge_reflection(act(mu, a))
        assert np.allclose(lhs, mu @ wedge_reflection(a) @ lorentz_inverse(mu), atol=1e-8 * np.max(np.abs(mu)) ** 2)


def test_reflected_reflection():
    rng = np.random.default_rng(8)
    for _ in range(100):
        a, b = random_wedge(rng), random_wedge(rng)
        ja, jb = wedge_reflection(a), wedge_reflection(b)
        c = act(ja @ jb, b)
        assert np.allclose(wedge_reflection(c), ja @ jb @ ja, atol=1e-8)
        assert c.isclose(act(ja, b)) or c.isclose(opposite(act(ja, b)))


def test_edge_round_trip():
    rng = np.random.default_rng(9)
    for _ in range(50):
        a = random_wedge(rng)
        p = edge(a)
        b = wedge_from_edge(p, orient=a.x)
        assert b.isclose(a)
        assert wedge_from_edge(p, orient=-a.x).isclose(opposite(a))


def test_lightlike_pair():
    lp, lm = lightlike_pair(E1BAR)
    assert np.allclose(lp, E1 + E0) and np.allclose(lm, E1 - E0)
    assert wedge_from_lightlike_pair(2 * lp, 5 * lm).isclose(E1BAR)
    rng = np.random.default_rng(10)
    for _ in range(100):
        a = random_wedge(rng)
        assert wedge_from_lightlike_pair(*lightlike_pair(a)).isclose(a)
    with pytest.raises(CoverError) as err:
        wedge_from_lightlike_pair(lp, 3 * lp)
    assert err.value.code == "degenerate-pair"


def test_boost_group():
    assert np.allclose(boost_group(E1BAR, 0.0), np.eye(4))
    assert np.allclose(boost_group(E1BAR, 0.9), make_boost(E1, 0.9))
    rng = np.random.default_rng(11)
    for _ in range(50):
        a = random_wedge(rng)
        chi, chi2 = rng.uniform(0.1, 2, size=2)
        m = boost_group(a, chi)
        assert np.allclose(m @ boost_group(a, chi2), boost_group(a, chi + chi2), atol=1e-8)
        lp, lm = lightlike_pair(a)
        assert np.allclose(m @ lp, np.exp(chi) * lp) and np.allclose(m @ lm, np.exp(-chi) * lm)
        assert stabilizes(m, a)
        for p in sample_points(rng, 40):
            if wedge_contains(a, p):
                assert minkowski_inner(m @ p - p, m @ p - p) > 0
                assert wedge_contains(a, m @ p)


def test_transport_examples():
    xi = Zweibein(E0, E1)
    assert np.allclose(transport(xi, xi), np.eye(4))
    assert np.allclose(transport(xi, Zweibein(E0, E2)), make_rotation(E3, np.pi / 2))
    assert np.allclose(transport(xi, Zweibein(E0, -E1)) @ E1, -E1)


def test_transport_random():
    rng = np.random.default_rng(12)
    for _ in range(200):
        mu, nu = random_restricted(rng), random_restricted(rng)
        xi, eta = Zweibein(mu @ E0, mu @ E1), Zweibein(nu @ E0, nu @ E2)
        t = transport(xi, eta)
        assert np.allclose(t @ xi.t, eta.t, atol=1e-9) and np.allclose(t @ xi.x, eta.x, atol=1e-9)
        assert np.linalg.det(t) > 0 and t[0, 0] >= 1 - 1e-9


def test_stabilizers_intersect_only_for_equal_or_opposite():
    rng = np.random.default_rng(13)
    for _ in range(100):
        a, b = random_wedge(rng), random_wedge(rng)
        g = boost_group(a, rng.uniform(0.2, 2)) @ edge_rotation(a, rng.uniform(0.2, 6))
        assert stabilizes(g, a) and stabilizes(g, opposite(a))
        assert not stabilizes(g, b)


def test_reflection_matches_plane_reflection_of_edge():
    j = reflect_at_plane(edge(E1BAR))
    assert np.allclose(j, wedge_reflection(E1BAR))
