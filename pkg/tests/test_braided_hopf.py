"""Tests for braided Hopf algebras and modules over them."""

import pytest

from braidcenters.algebra import PresentedAlgebra
from braidcenters.braid import KModule, cyclic_qt, sweedler_qt
from braidcenters.braided_hopf import (
    BraidedHopf,
    HModule,
    check_braided_hopf,
    check_h_module_algebra,
    nilpotent_line_hopf,
    trivial_braided_hopf,
)
from braidcenters.linspace import LinMap
from braidcenters.scalars import CycField, q_binomial, q_integer, q_root


def _setup(n):
    field, q = q_root(n)
    qt = cyclic_qt(field, q, n)
    return field, q, qt


@pytest.mark.parametrize("n,weight", [(3, -1), (3, 1), (5, -1)])
def test_nilpotent_line_axioms(n, weight):
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n, weight=weight)
    results = check_braided_hopf(H)
    assert all(results.values()), results


@pytest.mark.parametrize("n", [3, 5])
def test_coproduct_gaussian_closed_form(n):
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    t = q * q
    for m in range(n):
        got = H._coproduct_basis(H.alg.index[(m,)])
        expect = H.space2.zero()
        for i in range(m + 1):
            pos = H.alg.index[(i,)] * H.alg.dim + H.alg.index[(m - i,)]
            expect = expect + H.space2.basis(pos).scale(q_binomial(m, i, t))
        assert got == expect


def test_coproduct_square_pinned():
    field, q, qt = _setup(5)
    H = nilpotent_line_hopf(qt, q, 5)
    x = H.alg.gen("x")
    x2 = H.alg.mul(x, x)
    got = H.coproduct(x2)
    one = H.alg.one
    expect = x2.tensor(one) + x.tensor(x).scale(field.one + q * q) + one.tensor(x2)
    assert got == expect


@pytest.mark.parametrize("n,weight", [(3, -1), (5, -1), (3, 1)])
def test_antipode_closed_form(n, weight):
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n, weight=weight)
    for m in range(n):
        got = H._antipode_basis(H.alg.index[(m,)])
        sign = field.one if m % 2 == 0 else -field.one
        expect = H.space.basis(H.alg.index[(m,)]).scale(
            sign * q ** (2 * (m * (m - 1) // 2)))
        assert got == expect
    xm = H.space.basis(H.alg.index[(n - 1,)])
    assert H.antipode_inverse(H.antipode(xm)) == xm


def test_trivial_braided_hopf():
    field, q, qt = _setup(3)
    H = trivial_braided_hopf(qt)
    assert H.alg.dim == 1
    results = check_braided_hopf(H)
    assert all(results.values()), results
    assert H.coproduct(H.one) == H.one.tensor(H.one)
    assert H.antipode(H.one) == H.one


def sweedler_trivial_hopf(xi):
    field = CycField(4)
    qt = sweedler_qt(field, field.from_int(xi))
    return field, qt, trivial_braided_hopf(qt)


@pytest.mark.parametrize("xi", [0, 2])
def test_trivial_hopf_over_sweedler(xi):
    field, qt, H = sweedler_trivial_hopf(xi)
    results = check_braided_hopf(H)
    assert all(results.values()), results


# -- modules over the braided Hopf algebra ------------------------------------


def line_module_algebra(qt, q, n, gamma, trunc):
    """A = k[u] with g.u = q^2 u and x.u^j = gamma [j]_(q^-2) u^(j-1)."""
    field = qt.K.field
    H = nilpotent_line_hopf(qt, q, n)
    A = PresentedAlgebra(field, ["u"], {"u": ("free",)}, {},
                         truncation=trunc, name="k[u]")
    kmod = KModule.diagonal(
        qt, A.space, {"g": [q ** (2 * sum(m)) for m in A.basis]}, name="A")
    cols = {}
    for i, m in enumerate(A.basis):
        j = sum(m)
        if j:
            cols[i] = {i - 1: gamma * q_integer(j, q ** -2)}
    x_act = LinMap(A.space, A.space, cols)
    return H, A, HModule(H, kmod, {"x": x_act}, name="A")


@pytest.mark.parametrize("n,gamma", [(3, 0), (3, 1), (3, 2), (5, 1)])
def test_line_module_algebra(n, gamma):
    field, q, qt = _setup(n)
    H, A, hmod = line_module_algebra(qt, q, n, field.from_int(gamma), 2 * n + 2)
    assert hmod.check()
    assert check_h_module_algebra(hmod, A)


def test_wrong_action_coefficient_fails():
    # Replacing [j]_(q^-2) by [j]_(q^2) breaks the braided module-algebra law.
    n = 3
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    A = PresentedAlgebra(field, ["u"], {"u": ("free",)}, {},
                         truncation=8, name="k[u]")
    kmod = KModule.diagonal(
        qt, A.space, {"g": [q ** (2 * sum(m)) for m in A.basis]}, name="A")
    cols = {}
    for i, m in enumerate(A.basis):
        j = sum(m)
        if j:
            cols[i] = {i - 1: q_integer(j, q ** 2)}
    bad = HModule(H, kmod, {"x": LinMap(A.space, A.space, cols)}, name="bad")
    assert bad.check()  # still a module; the algebra law is what fails
    assert not check_h_module_algebra(bad, A)


def test_action_values_pinned():
    n = 3
    field, q, qt = _setup(n)
    gamma = field.from_int(1)
    H, A, hmod = line_module_algebra(qt, q, n, gamma, 8)
    u = A.gen("u")
    x = H.alg.gen("x")
    one = A.one
    assert hmod.act(x, u) == one
    # x . u^2 = (1 + q^-2) u.
    assert hmod.act(x, A.mul(u, u)) == u.scale(field.one + q ** -2)
    # x^2 . u^2 = (1 + q^-2) * 1.
    x2 = H.alg.mul(x, x)
    assert hmod.act(x2, A.mul(u, u)) == one.scale(field.one + q ** -2)
    assert hmod.act(H.alg.power(x, 3)[0], A.mul(u, u)).is_zero()


def test_trivial_module_over_trivial_hopf():
    field, qt, H = sweedler_trivial_hopf(1)
    A = PresentedAlgebra(field, ["u"], {"u": ("free",)}, {},
                         truncation=4, name="k[u]")
    g_act = LinMap(A.space, A.space, {
        i: {i: field.from_int(-1 if sum(m) % 2 else 1)}
        for i, m in enumerate(A.basis)})
    x_cols = {}
    for i, m in enumerate(A.basis):
        if sum(m) % 2 == 1:
            x_cols[i] = {i - 1: field.one}
    kmod = KModule(qt, A.space, {"g": g_act, "x": LinMap(A.space, A.space, x_cols)})
    hmod = HModule(H, kmod, {}, name="A")
    assert hmod.check()
    assert check_h_module_algebra(hmod, A)
