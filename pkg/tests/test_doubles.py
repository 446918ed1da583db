"""Tests for dual pairings, the Heisenberg and Drinfeld doubles, and u_q(sl2).

The double's derived rewrite rule is validated two independent ways: against
the known closed-form relations of u_q(sl2) under the explicit isomorphism,
and by re-evaluating the defining cross-relation inside the built algebra on
every basis pair of generator powers.
"""

import pytest

from braidcenters.algebra import check_associativity, check_hopf
from braidcenters.braid import cyclic_qt, sweedler_qt
from braidcenters.braided_hopf import nilpotent_line_hopf
from braidcenters.constructions import sweep_associativity
from braidcenters.doubles import (
    check_pairing,
    check_presented_action,
    coregular_module,
    cross_relation_check,
    double_iso_uqsl2,
    drinfeld_double,
    heisenberg_double,
    heisenberg_mul_oracle,
    line_pairing,
    map_respects_relations,
    phi_functor,
    polynomial_pairing,
    uqsl2_presentation,
)
from braidcenters.scalars import CycField, q_factorial, q_root
from braidcenters.scenarios import uqsl2_setup, weyl_setup


@pytest.fixture(scope="module")
def line3():
    """The dual pair of nilpotent lines over the cyclic group, n = 3."""
    field, q = q_root(3)
    qt = cyclic_qt(field, q, 3)
    H = nilpotent_line_hopf(qt, q, 3, gen="x", weight=-1)
    dual = nilpotent_line_hopf(qt, q, 3, gen="xs", weight=1)
    return field, q, qt, H, dual, line_pairing(dual, H, q)


@pytest.fixture(scope="module")
def double3(line3):
    field, q, qt, H, dual, p = line3
    return drinfeld_double(qt, p)


# -- pairings ---------------------------------------------------------------------


def test_line_pairing_laws(line3):
    _, _, _, _, _, p = line3
    assert all(check_pairing(p).values())


def test_line_pairing_values(line3):
    field, q, _, H, dual, p = line3
    lam = (q - q ** -1).inverse()
    assert p.pair_basis(1, 1) == lam
    assert p.pair_basis(2, 2) == q_factorial(2, q * q) * lam ** 2
    assert p.pair_basis(2, 2) == (field.one + q ** 2) * lam ** 2
    assert not p.pair_basis(1, 2)
    assert p.rank() == H.alg.dim


@pytest.mark.parametrize("nvars", [1, 2])
def test_polynomial_pairing_laws(nvars):
    w = weyl_setup(nvars, trunc=4)
    assert all(check_pairing(w.pairing).values())


def test_polynomial_pairing_values():
    w = weyl_setup(2, trunc=4)
    p = w.pairing
    field = w.field
    d2 = p.dual.alg.monomial_element({"d1": 2})
    x2 = p.primal.alg.monomial_element({"x1": 2})
    assert p.eval(d2, x2) == field.from_int(2)
    d11 = p.dual.alg.monomial_element({"d1": 1, "d2": 1})
    x11 = p.primal.alg.monomial_element({"x1": 1, "x2": 1})
    assert p.eval(d11, x11) == field.one
    assert not p.eval(d2, x11)


# -- coregular action -------------------------------------------------------------


def test_coregular_value_line(line3):
    """x . x* = <x*, x> 1 = 1/(q - q^-1)."""
    _, q, _, H, dual, p = line3
    co = coregular_module(p)
    lam = (q - q ** -1).inverse()
    assert co.hmod.gen_actions["x"](dual.alg.gen("xs")) == \
        dual.alg.one.scale(lam)
    assert all(co.check().values())


def test_coregular_value_weyl():
    """x . d = <d, x> 1 = 1."""
    w = weyl_setup(1, trunc=4)
    co = coregular_module(w.pairing)
    dual = w.dual
    assert co.hmod.gen_actions["x1"](dual.alg.gen("d1")) == dual.alg.one
    assert all(co.check().values())


# -- the Heisenberg double --------------------------------------------------------


def test_heisenberg_weyl_relations():
    """In Heis(k[x], k[d]): x d = 1 + d x and the families commute."""
    w = weyl_setup(2, trunc=6)
    heis = w.heis
    H, dual = w.H, w.dual

    def emb_x(name):
        return dual.alg.one.tensor(H.alg.gen(name))

    def emb_d(name):
        return dual.alg.gen(name).tensor(H.alg.one)

    def mul(a, b):
        out, cl = heis.product(a, b)
        assert not cl
        return out

    for i, xn in enumerate(["x1", "x2"]):
        for j, dn in enumerate(["d1", "d2"]):
            lhs = mul(emb_x(xn), emb_d(dn))
            want = mul(emb_d(dn), emb_x(xn))
            if i == j:
                want = want + dual.alg.one.tensor(H.alg.one)
            assert lhs == want
    assert mul(emb_x("x1"), emb_x("x2")) == mul(emb_x("x2"), emb_x("x1"))
    assert mul(emb_d("d1"), emb_d("d2")) == mul(emb_d("d2"), emb_d("d1"))


def test_heisenberg_weyl_associativity():
    w = weyl_setup(1, trunc=6)
    assert sweep_associativity(w.heis) > 0


def test_heisenberg_weyl_matches_oracle_all_pairs():
    """The smash-product route equals the closed three-R-matrix formula on
    every basis pair within the truncation bound."""
    w = weyl_setup(1, trunc=6)
    heis = w.heis
    for i in range(heis.dim):
        for j in range(heis.dim):
            if heis.degree(i) + heis.degree(j) > heis.truncation:
                continue
            got, cl = heis.product(heis.space.basis(i), heis.space.basis(j))
            assert not cl
            assert got == heisenberg_mul_oracle(w.pairing,
                                                heis.space.basis(i),
                                                heis.space.basis(j))


def test_heisenberg_line_matches_oracle(line3):
    """Same agreement in the braided (cyclic-group) case, on all pairs of
    generator powers times group elements up to degree two."""
    _, q, qt, H, dual, p = line3
    heis = heisenberg_double(p)
    assert sweep_associativity(heis) == heis.dim ** 3
    hdim = H.alg.dim
    low = [c * hdim + b for c in range(hdim) for b in range(hdim)
           if c + b <= 2]
    for i in low:
        for j in low:
            got, _ = heis.product(heis.space.basis(i), heis.space.basis(j))
            assert got == heisenberg_mul_oracle(p, heis.space.basis(i),
                                                heis.space.basis(j))


# -- the Drinfeld double ----------------------------------------------------------


def test_double_shape(double3):
    assert double3.dim == 27
    assert double3.gens == ["xs", "g", "x"]
    assert check_associativity(double3) == 27 ** 3


def test_double_structural_relations(double3, line3):
    """g x = q^-2 x g, g x* = q^2 x* g, x* x - q^2 x x* = (1 - g^-2) lam."""
    _, q, _, _, _, _ = line3
    D = double3
    lam = (q - q ** -1).inverse()
    x, xs, g = D.gen("x"), D.gen("xs"), D.gen("g")
    assert D.mul(g, x) == D.mul(x, g).scale(q ** -2)
    assert D.mul(g, xs) == D.mul(xs, g).scale(q ** 2)
    lhs = D.mul(xs, x) - D.mul(x, xs).scale(q ** 2)
    assert lhs == (D.one - D.monomial_element({"g": 1})).scale(lam)


def test_double_skew_primitives(double3):
    """x and x* are (g^-1, 1)-skew primitive and S acts as -g(.)."""
    D = double3
    ginv = D.monomial_element({"g": 2})
    for name in ("x", "xs"):
        v = D.gen(name)
        want = v.tensor(D.one) + ginv.tensor(v)
        assert D.coproduct(v) == want
        assert D.antipode(v) == -D.mul(D.gen("g"), v)
        assert not D.counit(v)


def test_double_hopf_axioms(double3):
    assert all(check_hopf(double3).values())


def test_double_cross_relation_all_pairs(line3, double3):
    """The defining relation holds inside the built double for every pair
    of generator powers -- not only the generator case used to derive it."""
    _, _, qt, _, _, p = line3
    assert cross_relation_check(qt, p, double3)


def test_double_rejects_noncyclic_k():
    field = CycField(4)
    qt = sweedler_qt(field, field.one)
    H = nilpotent_line_hopf(qt, -field.one, 2)
    p = line_pairing(H, H, -field.one, normalization=field.one)
    with pytest.raises(ValueError):
        drinfeld_double(qt, p)


def test_double_rejects_multiple_generators():
    w = weyl_setup(2, trunc=4)
    with pytest.raises(ValueError):
        drinfeld_double(w.qt, w.pairing)


# -- identification with u_q(sl2) -------------------------------------------------


def test_uqsl2_shape():
    uq = uqsl2_presentation(3)
    assert uq.dim == 27
    assert all(check_hopf(uq).values())


def test_double_is_uqsl2_n3():
    report = double_iso_uqsl2(3)
    assert report["rank"] == 27
    for key, value in report.items():
        if isinstance(value, bool):
            assert value, key


def test_map_respects_relations_detects_failure():
    """Sending e, f, k to the wrong targets is rejected."""
    uq = uqsl2_presentation(3)
    bad = {"f": uq.gen("e"), "k": uq.gen("k"), "e": uq.gen("f")}
    assert not map_respects_relations(uq, uq, bad)


# -- action of the double on YD modules -------------------------------------------


@pytest.mark.parametrize("gamma", [1, 2])
def test_double_acts_on_rb(gamma, line3):
    _, q, qt, H, dual, p = line3
    s = uqsl2_setup(3, gamma=gamma, trunc=8, q=q)
    D = drinfeld_double(qt, p)
    acts = phi_functor(s.rb.yd, p)
    assert check_presented_action(D, acts)


def test_double_action_values(line3):
    """Through g -> k, x -> f, x* -> k^-1 e the module H (x) A realizes

        k.y = q^-2 y, f.y = (1-q^2) y^2, e.y = 1/(q-q^-1) 1,
        k.u = q^2  u, f.u = (1-q^-4) yu + gamma, e.u = 0.
    """
    field, q, qt, H, dual, p = line3
    s = uqsl2_setup(3, gamma=1, trunc=8, q=q)
    acts = phi_functor(s.rb.yd, p)
    adim = s.A.alg.dim
    space = s.rb.space
    y = space.basis(1 * adim + 0)
    u = space.basis(0 * adim + 1)
    lam = (q - q ** -1).inverse()

    def e_act(v):
        return acts["g"](acts["xs"](v))

    assert acts["g"](y) == y.scale(q ** -2)
    assert acts["g"](u) == u.scale(q ** 2)
    assert acts["x"](y) == space.basis(2 * adim).scale(field.one - q ** 2)
    assert acts["x"](u) == (space.basis(1 * adim + 1).scale(field.one - q ** -4)
                            + space.basis(0))
    assert e_act(y) == space.basis(0).scale(lam)
    assert e_act(u).is_zero()
