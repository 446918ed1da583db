"""Ready-made scenario builders used by the CLI and the test suites.

Each builder assembles a complete worked configuration:

* ``uqsl2_setup``: the nilpotent line H = k[x]/(x^n) over the cyclic group
  with its induced YD algebra on H (x) k[u] (g.u = q^2 u, x.u = gamma);
* ``sweedler_setup``: k[u] as a module algebra over the Sweedler Hopf
  algebra with its xi-family of quasi-triangular structures;
* ``weyl_setup``: the Weyl algebra in one or more variables as the
  Heisenberg double of truncated polynomial Hopf algebras.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import PresentedAlgebra
from .braid import KModule, QuasiTriangular, cyclic_qt, sweedler_qt, trivial_qt
from .braided_hopf import BraidedHopf, nilpotent_line_hopf
from .constructions import (
    ModuleAlgebra,
    SmashAlgebra,
    YDAlgebra,
    line_module_algebra,
    rb_algebra,
)
from .doubles import DualPairing, heisenberg_double, polynomial_hopf, polynomial_pairing
from .linspace import Element, LinMap
from .scalars import CycField, Scalar, q_binomial, q_root



@dataclass
class UqScenario:
    n: int
    field: CycField
    q: Scalar
    qt: QuasiTriangular
    H: BraidedHopf
    A: ModuleAlgebra
    rb: YDAlgebra
    gamma: Scalar
    trunc: int


def uqsl2_setup(n: int, gamma, trunc: int | None = None,
                q: Scalar | None = None) -> UqScenario:
    """The nilpotent-line scenario: H = k[x]/(x^n) over kZ_n acting on k[u]."""
    if q is None:
        field, q = q_root(n)
    else:
        field = q.field
    if trunc is None:
        trunc = 2 * n + 2
    if isinstance(gamma, int):
        gamma = field.from_int(gamma)
    qt = cyclic_qt(field, q, n)
    H = nilpotent_line_hopf(qt, q, n)
    A = line_module_algebra(H, q, gamma, trunc)
    rb = rb_algebra(A, H)
    return UqScenario(n=n, field=field, q=q, qt=qt, H=H, A=A, rb=rb,
                      gamma=gamma, trunc=trunc)


@dataclass
class SweedlerScenario:
    field: CycField
    qt: QuasiTriangular
    alg: PresentedAlgebra
    kmod: KModule
    xi: Scalar
    gamma: Scalar
    trunc: int


def sweedler_setup(xi, gamma, trunc: int = 8,
                   field: CycField | None = None) -> SweedlerScenario:
    """A = k[u] (truncated) as a module algebra over the Sweedler Hopf
    algebra: g.u = -u and x.u = gamma, so x.u^j is gamma u^{j-1} for odd j
    and 0 for even j.

    Pass a shared ``field`` to build several configurations over literally
    the same scalars (needed when their results are compared element-wise).
    """
    if field is None:
        field = CycField(4)
    if isinstance(xi, int):
        xi = field.from_int(xi)
    if isinstance(gamma, int):
        gamma = field.from_int(gamma)
    qt = sweedler_qt(field, xi)
    alg = PresentedAlgebra(field, ["u"], {"u": ("free",)}, {},
                           truncation=trunc, name="k[u]")
    space = alg.space
    gcols = {j: {j: field.from_int(-1 if sum(m) % 2 else 1)}
             for j, m in enumerate(alg.basis)}
    xcols = {}
    for j in range(1, alg.dim):
        if j % 2 == 1 and gamma:
            xcols[j] = {j - 1: gamma}
    kmod = KModule(qt, space, {
        "g": LinMap(space, space, gcols),
        "x": LinMap(space, space, xcols),
    }, name=alg.name)
    return SweedlerScenario(field=field, qt=qt, alg=alg, kmod=kmod,
                            xi=xi, gamma=gamma, trunc=trunc)


@dataclass
class WeylScenario:
    field: CycField
    qt: QuasiTriangular
    H: BraidedHopf
    dual: BraidedHopf
    pairing: DualPairing
    heis: SmashAlgebra
    nvars: int
    trunc: int


def uq_center_element(scn: UqScenario, ell: int = 1) -> Element:
    """Closed-form central element z_ell of the induced algebra on
    H (x) k[u] when the x-action weight gamma is invertible:

        z_ell = sum_{k=0}^{n-1} gamma^(-k) qbinom(ell+k-1, k; q^2)
                q^(-2(k ell + k(k+1)/2)) (1 - q^2)^k   x^k (x) u^(k+ell),

    with z_0 = 1.  Every term must fit under the truncation bound."""
    if ell < 0:
        raise ValueError("power must be nonnegative, got %d" % ell)
    alg = scn.rb.alg
    if ell == 0:
        return alg.one
    if not scn.gamma:
        raise ValueError("the closed form needs an invertible x-action weight")
    q = scn.q
    qq = q * q
    one_minus_qq = scn.field.one - qq
    acc = alg.space.zero()
    for k in range(scn.n):
        udeg = k + ell
        if udeg > scn.trunc:
            raise ValueError(
                "term x^%d u^%d of z_%d exceeds the truncation bound %d"
                % (k, udeg, ell, scn.trunc))
        coeff = (scn.gamma ** (-k)
                 * q_binomial(ell + k - 1, k, qq)
                 * q ** (-2 * (k * ell + k * (k + 1) // 2))
                 * one_minus_qq ** k)
        if coeff:
            term = scn.H.alg.monomial_element({"x": k}).tensor(
                scn.A.alg.monomial_element({"u": udeg}))
            acc = acc + term.scale(coeff)
    return acc


def weyl_setup(nvars: int, trunc: int = 8) -> WeylScenario:
    """The Weyl algebra as the Heisenberg double of truncated polynomials."""
    field = CycField(1)
    qt = trivial_qt(field)
    xs = ["x%d" % (i + 1) for i in range(nvars)]
    ds = ["d%d" % (i + 1) for i in range(nvars)]
    H = polynomial_hopf(qt, xs, trunc)
    dual = polynomial_hopf(qt, ds, trunc)
    p = polynomial_pairing(dual, H)
    heis = heisenberg_double(p)
    return WeylScenario(field=field, qt=qt, H=H, dual=dual, pairing=p,
                        heis=heis, nvars=nvars, trunc=trunc)
