"""Yetter-Drinfeld modules: axioms, braiding, inverse, tensor products."""

import pytest

from braidcenters.algebra import PresentedAlgebra
from braidcenters.braid import KModule, cyclic_qt
from braidcenters.braided_hopf import HModule, nilpotent_line_hopf, trivial_braided_hopf
from braidcenters.linspace import LinMap
from braidcenters.scalars import q_integer, q_root
from braidcenters.yd import (YDModule, adjoint_yd, check_braided_commutative,
                             check_yd, yd_braid, yd_braid_inverse, yd_tensor)


def _setup(n):
    field, q = q_root(n)
    qt = cyclic_qt(field, q, n)
    return field, q, qt


def _line_module(qt, q, n, gamma, trunc):
    """A = k[u] (truncated) as module algebra over H = k[x]/(x^n)."""
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
    return H, A, HModule(H, kmod, {"x": LinMap(A.space, A.space, cols)}, name="A")


@pytest.mark.parametrize("n,weight", [(3, -1), (3, 1), (5, -1)])
def test_adjoint_yd_passes_all_checks(n, weight):
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n, weight=weight)
    yd = adjoint_yd(H)
    results = check_yd(yd)
    assert all(results.values()), results


@pytest.mark.parametrize("n", [3, 5])
def test_adjoint_action_pinned(n):
    # Adjoint action of x on x^m is (1 - q^(2m)) x^(m+1).
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    yd = adjoint_yd(H)
    x = H.alg.gen("x")
    for m in range(n):
        xm = H.alg.power(x, m)[0]
        expect = H.alg.power(x, m + 1)[0].scale(field.one - q ** (2 * m)) \
            if m + 1 < n else H.space.zero()
        assert yd.act(x, xm) == expect


@pytest.mark.parametrize("n", [3, 5])
def test_adjoint_yd_braided_commutative(n):
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    yd = adjoint_yd(H)
    assert check_braided_commutative(H.alg, yd)


def test_yd_braiding_pinned_small():
    # Psi^YD(x (x) x) = (1 - q^2) x^2 (x) 1 + q^2 x (x) x on the adjoint module.
    n = 3
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    yd = adjoint_yd(H)
    x = H.alg.gen("x")
    x2 = H.alg.mul(x, x)
    one = H.alg.one
    got = yd_braid(yd, yd, x.tensor(x))
    expect = x2.tensor(one).scale(field.one - q ** 2) + x.tensor(x).scale(q ** 2)
    assert got == expect


@pytest.mark.parametrize("n", [3, 5])
def test_yd_braiding_invertible(n):
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    yd = adjoint_yd(H)
    dim = H.alg.dim
    vw = yd.space.tensor(yd.space)
    for p in range(dim * dim):
        e = vw.basis(p)
        assert yd_braid_inverse(yd, yd, yd_braid(yd, yd, e)) == e
        assert yd_braid(yd, yd, yd_braid_inverse(yd, yd, e)) == e


def test_mixed_braiding_invertible():
    # V carries the full YD structure, W only an action (module algebra k[u]).
    n = 3
    field, q, qt = _setup(n)
    H, A, hmod = _line_module(qt, q, n, field.from_int(1), 6)
    yd = adjoint_yd(H)
    vw = yd.space.tensor(hmod.space)
    wv = hmod.space.tensor(yd.space)
    for p in range(vw.dim):
        e = vw.basis(p)
        assert yd_braid_inverse(yd, hmod, yd_braid(yd, hmod, e)) == e
    for p in range(wv.dim):
        e = wv.basis(p)
        assert yd_braid(yd, hmod, yd_braid_inverse(yd, hmod, e)) == e


def test_tensor_of_yd_modules_is_yd():
    n = 3
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    yd = adjoint_yd(H)
    tt = yd_tensor(yd, yd)
    results = check_yd(tt)
    assert all(results.values()), results


def test_yd_braiding_hexagon():
    # Psi_{V, W(x)U} = (Id_W (x) Psi_{V,U})(Psi_{V,W} (x) Id_U) and
    # Psi_{V(x)W, U} = (Psi_{V,U} (x) Id_W)(Id_V (x) Psi_{W,U}).
    n = 3
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    yd = adjoint_yd(H)
    tt = yd_tensor(yd, yd)
    dim = H.alg.dim
    total = yd.space.tensor(tt.space)
    for p in range(dim ** 3):
        e = total.basis(p)
        lhs = yd_braid(yd, tt, e)
        a, rest = divmod(p, dim * dim)
        b, c = divmod(rest, dim)
        step1 = yd_braid(yd, yd, yd.space.basis(a).tensor(yd.space.basis(b)))
        rhs = tt.space.tensor(yd.space).zero()
        for pos, coef in step1.comps.items():
            bp, ap = divmod(pos, dim)
            inner = yd_braid(yd, yd, yd.space.basis(ap).tensor(yd.space.basis(c)))
            for pos2, coef2 in inner.comps.items():
                cp, app = divmod(pos2, dim)
                q_ = (bp * dim + cp) * dim + app
                rhs = rhs + tt.space.tensor(yd.space).element({q_: coef * coef2})
        assert lhs == rhs

    total2 = tt.space.tensor(yd.space)
    for p in range(dim ** 3):
        e = total2.basis(p)
        lhs = yd_braid(tt, yd, e)
        rest, c = divmod(p, dim)
        a, b = divmod(rest, dim)
        step1 = yd_braid(yd, yd, yd.space.basis(b).tensor(yd.space.basis(c)))
        rhs = yd.space.tensor(tt.space).zero()
        for pos, coef in step1.comps.items():
            cp, bp = divmod(pos, dim)
            inner = yd_braid(yd, yd, yd.space.basis(a).tensor(yd.space.basis(cp)))
            for pos2, coef2 in inner.comps.items():
                cpp, ap = divmod(pos2, dim)
                q_ = (cpp * dim + ap) * dim + bp
                rhs = rhs + yd.space.tensor(tt.space).element({q_: coef * coef2})
        assert lhs == rhs


def test_broken_coaction_detected():
    # Adjoint action with the trivial coaction delta(v) = 1 (x) v satisfies the
    # module and comodule axioms but breaks the crossed compatibility.
    n = 3
    field, q, qt = _setup(n)
    H = nilpotent_line_hopf(qt, q, n)
    good = adjoint_yd(H)
    trivial = LinMap.from_function(
        H.space, H.space.tensor(H.space), lambda v: H.alg.one.tensor(v))
    bad = YDModule(H, good.kmod, good.gen_actions, trivial, name="bad")
    results = check_yd(bad)
    assert results["h_module"]
    assert results["comodule_coassociative"]
    assert results["comodule_counit"]
    assert not results["yd_compatibility"]


def test_trivial_hopf_adjoint_yd():
    field, q, qt = _setup(3)
    H = trivial_braided_hopf(qt)
    yd = adjoint_yd(H)
    results = check_yd(yd)
    assert all(results.values()), results
    assert check_braided_commutative(H.alg, yd)
