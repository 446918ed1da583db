"""Tests for the prebuilt example scenarios.

Covers the cyclic-group / nilpotent-line family, the Sweedler-algebra module
family over all parameter choices, and the polynomial/Weyl family.
"""

import pytest

from braidcenters.braid import (
    check_braiding_invertible,
    check_hexagons,
    check_module_algebra,
)
from braidcenters.braided_hopf import check_braided_hopf
from braidcenters.scenarios import sweedler_setup, uqsl2_setup, weyl_setup


@pytest.mark.parametrize("n", [3, 5])
def test_uqsl2_setup_shapes(n):
    s = uqsl2_setup(n, gamma=1)
    assert s.trunc == 2 * n + 2
    assert s.H.alg.dim == n
    assert s.A.alg.dim == s.trunc + 1
    assert s.rb.alg.dim == s.H.alg.dim * s.A.alg.dim
    assert s.gamma == s.field.one


def test_uqsl2_setup_gamma_zero():
    s = uqsl2_setup(3, gamma=0)
    x_act = s.A.hmod.gen_actions["x"]
    for j in range(s.A.alg.dim):
        assert x_act(s.A.alg.space.basis(j)).is_zero()


@pytest.mark.parametrize("xi", [0, 1, 2])
@pytest.mark.parametrize("gamma", [0, 1, 2])
def test_sweedler_setup_module_algebra(xi, gamma):
    s = sweedler_setup(xi, gamma)
    assert s.alg.dim == 9
    assert check_module_algebra(s.kmod, s.alg)


def test_sweedler_setup_pinned_values():
    s = sweedler_setup(1, 1)
    u2 = s.alg.space.basis(2)
    assert s.kmod.gen_actions["g"](u2) == u2
    assert s.kmod.gen_actions["x"](u2).is_zero()
    u1 = s.alg.space.basis(1)
    assert s.kmod.gen_actions["g"](u1) == -u1
    assert s.kmod.gen_actions["x"](u1) == s.alg.one.scale(s.gamma)


def test_sweedler_setup_braiding():
    s = sweedler_setup(1, 1)
    assert all(s.qt.check().values())
    assert check_braiding_invertible(s.kmod, s.kmod)
    assert check_hexagons(s.kmod, s.kmod, s.kmod)


@pytest.mark.parametrize("nvars", [1, 2])
def test_weyl_setup_braided_hopf(nvars):
    w = weyl_setup(nvars, trunc=4)
    assert w.H.alg.dim == w.dual.alg.dim
    assert all(check_braided_hopf(w.H).values())
    assert all(check_braided_hopf(w.dual).values())


def test_weyl_setup_heisenberg_dim():
    w = weyl_setup(1, trunc=5)
    assert w.heis.dim == 36
    assert w.heis.truncation == 5
