"""Quasi-triangular Hopf algebras, their modules, and the induced braiding.

A quasi-triangular structure on an ordinary Hopf algebra K is an invertible
element R of K (x) K intertwining the coproduct with its opposite and
satisfying the two coproduct-leg identities.  Modules over K then braid via

    Psi_{V,W}(v (x) w) = (R2 . w) (x) (R1 . v),

and the inverse braiding (as a map V (x) W -> W (x) V) acts with the legs of
R^-1 exchanged:  (R1' . w) (x) (R2' . v).
"""

from __future__ import annotations

from .algebra import HopfAlgebra, tensor_algebra_product
from .linspace import Element, LinMap, Space, solve_linear
from .scalars import Scalar


class QuasiTriangular:
    """A Hopf algebra together with an (invertible) R-matrix."""

    def __init__(self, hopf: HopfAlgebra, r_matrix: Element, r_inverse: Element | None = None):
        self.K = hopf
        self.R = r_matrix
        if r_inverse is None:
            r_inverse = self._solve_inverse()
        self.R_inv = r_inverse

    def _solve_inverse(self) -> Element:
        K = self.K
        space2 = K.space2
        one2 = K.one.tensor(K.one)
        columns = [K.mul2(self.R, space2.basis(j)) for j in range(space2.dim)]
        sol = solve_linear(columns, one2)
        if sol is None:
            raise ValueError("R-matrix is not invertible")
        r_inv = space2.element(sol)
        if K.mul2(r_inv, self.R) != one2:
            raise ValueError("right inverse of R is not a left inverse")
        return r_inv

    def check(self) -> dict:
        """Exact verification of the quasi-triangularity axioms."""
        K = self.K
        d = K.dim
        results = {}
        one2 = K.one.tensor(K.one)
        results["r_invertible"] = (
            K.mul2(self.R, self.R_inv) == one2
            and K.mul2(self.R_inv, self.R) == one2)

        space3 = K.space2.tensor(K.space)
        algs3 = (K, K, K)

        def leg13(r):
            return Element(space3, {
                (pos // d) * d * d + (pos % d): c for pos, c in r.comps.items()})

        def leg23(r):
            return Element(space3, {pos: c for pos, c in r.comps.items()})

        def leg12(r):
            return Element(space3, {pos * d: c for pos, c in r.comps.items()})

        # (Delta (x) Id) R = R13 R23.
        lhs = space3.zero()
        for pos, c in self.R.comps.items():
            i, j = divmod(pos, d)
            for p, c2 in K._coproduct_basis(i).comps.items():
                lhs = lhs + Element(space3, {p * d + j: c * c2})
        rhs, clipped = tensor_algebra_product(algs3, leg13(self.R), leg23(self.R))
        results["coproduct_first_leg"] = not clipped and lhs == rhs

        # (Id (x) Delta) R = R13 R12.
        lhs = space3.zero()
        for pos, c in self.R.comps.items():
            i, j = divmod(pos, d)
            for p, c2 in K._coproduct_basis(j).comps.items():
                lhs = lhs + Element(space3, {i * d * d + p: c * c2})
        rhs, clipped = tensor_algebra_product(algs3, leg13(self.R), leg12(self.R))
        results["coproduct_second_leg"] = not clipped and lhs == rhs

        # Delta^op(k) R = R Delta(k) for every basis element k.
        ok = True
        for i in range(d):
            delta = K._coproduct_basis(i)
            delta_op = Element(K.space2, {
                (pos % d) * d + pos // d: c for pos, c in delta.comps.items()})
            if K.mul2(delta_op, self.R) != K.mul2(self.R, delta):
                ok = False
                break
        results["intertwines_coproduct"] = ok

        # (eps (x) id) R = 1 = (id (x) eps) R.
        left = K.space.zero()
        right = K.space.zero()
        for pos, c in self.R.comps.items():
            i, j = divmod(pos, d)
            left = left + K.space.basis(j).scale(c * K.counit(K.space.basis(i)))
            right = right + K.space.basis(i).scale(c * K.counit(K.space.basis(j)))
        results["counit_legs"] = left == K.one and right == K.one
        return results


class KModule:
    """A module over the quasi-triangular Hopf algebra's underlying algebra.

    The action is stored on generators of K as linear maps on the module
    space and extended along normal-form letters.
    """

    def __init__(self, qt: QuasiTriangular, space: Space, gen_actions: dict[str, LinMap],
                 name: str = "V"):
        self.qt = qt
        self.space = space
        self.gen_actions = gen_actions
        self.name = name
        self._basis_act: dict[int, LinMap] = {0: LinMap.identity(space)}

    @staticmethod
    def trivial(qt: QuasiTriangular, name: str = "I") -> "KModule":
        space = Space(qt.K.field, ["1"])
        acts = {}
        for g in qt.K.gens:
            c = qt.K._counit_gen[g]
            acts[g] = LinMap(space, space, {0: {0: c}} if c else {})
        return KModule(qt, space, acts, name=name)

    @staticmethod
    def diagonal(qt: QuasiTriangular, space: Space, gen_scalars: dict[str, list[Scalar]],
                 name: str = "V") -> "KModule":
        """Generators act diagonally with the given per-basis scalars."""
        acts = {}
        for g, scalars in gen_scalars.items():
            acts[g] = LinMap(space, space, {
                i: {i: c} for i, c in enumerate(scalars) if c})
        return KModule(qt, space, acts, name=name)

    def act_basis(self, i: int) -> LinMap:
        hit = self._basis_act.get(i)
        if hit is not None:
            return hit
        K = self.qt.K
        mono = K.basis[i]
        acc = None
        for g in range(K.ngens):
            for _ in range(mono[g]):
                step = self.gen_actions[K.gens[g]]
                acc = step if acc is None else acc.compose(step)
        self._basis_act[i] = acc
        return acc

    def act(self, k: Element, v: Element) -> Element:
        out = self.space.zero()
        for i, c in k.comps.items():
            out = out + self.act_basis(i)(v).scale(c)
        return out

    def check(self) -> bool:
        """The generator actions respect K's defining relations."""
        K = self.qt.K
        for hi in range(K.ngens):
            for lo in range(hi):
                lhs = self.gen_actions[K.gens[hi]].compose(self.gen_actions[K.gens[lo]])
                prod, clipped = K._mono_times_mono(
                    K._expvec({K.gens[hi]: 1}), K._expvec({K.gens[lo]: 1}))
                assert not clipped
                rhs_fn = lambda v: self.act(
                    Element(K.space, {K.index[m]: c for m, c in prod.items()}), v)
                for b in range(self.space.dim):
                    if lhs(self.space.basis(b)) != rhs_fn(self.space.basis(b)):
                        return False
        for g, (kind, bound) in zip(K.gens, K.powers):
            power = self.gen_actions[g]
            for _ in range(bound - 1):
                power = self.gen_actions[g].compose(power)
            target = (LinMap(self.space, self.space, {}) if kind == "nil"
                      else LinMap.identity(self.space))
            for b in range(self.space.dim):
                if power(self.space.basis(b)) != target(self.space.basis(b)):
                    return False
        return True

    def __repr__(self):
        return "KModule(%s, dim=%d)" % (self.name, self.space.dim)


def tensor_module(a: KModule, b: KModule, name: str | None = None) -> KModule:
    """V (x) W with the coproduct action."""
    qt = a.qt
    K = qt.K
    space = a.space.tensor(b.space)
    acts = {}
    for g in K.gens:
        delta = K._cop_gen[g]
        d = K.dim

        def act_fn(elem, delta=delta, d=d):
            out = space.zero()
            dim_b = b.space.dim
            for pos, c in delta.comps.items():
                i, j = divmod(pos, d)
                fa = a.act_basis(i)
                fb = b.act_basis(j)
                for p, v in elem.comps.items():
                    pa, pb = divmod(p, dim_b)
                    ia = fa(a.space.basis(pa))
                    ib = fb(b.space.basis(pb))
                    out = out + ia.tensor(ib).scale(c * v)
            return out

        acts[g] = LinMap.from_function(space, space, act_fn)
    return KModule(qt, space, acts,
                   name=name or "%s(x)%s" % (a.name, b.name))


def braid(mv: KModule, mw: KModule, elem: Element, inverse: bool = False) -> Element:
    """Psi_{V,W} (or the inverse braiding V (x) W -> W (x) V) applied to elem."""
    qt = mv.qt
    r = qt.R_inv if inverse else qt.R
    dim_k = qt.K.dim
    dim_w = mw.space.dim
    dim_v = mv.space.dim
    out: dict[int, Scalar] = {}
    for rpos, rc in r.comps.items():
        i, j = divmod(rpos, dim_k)
        if inverse:
            fw, fv = mw.act_basis(i), mv.act_basis(j)
        else:
            fw, fv = mw.act_basis(j), mv.act_basis(i)
        for p, d in elem.comps.items():
            a, b = divmod(p, dim_w)
            col_w = fw.cols.get(b)
            col_v = fv.cols.get(a)
            if not col_w or not col_v:
                continue
            cd = rc * d
            for iw, cw in col_w.items():
                base = iw * dim_v
                ccw = cd * cw
                for iv, cv in col_v.items():
                    pos = base + iv
                    s = out.get(pos)
                    v = ccw * cv
                    s = v if s is None else s + v
                    if s:
                        out[pos] = s
                    elif pos in out:
                        del out[pos]
    return Element(mw.space.tensor(mv.space), out)


def braiding_map(mv: KModule, mw: KModule, inverse: bool = False) -> LinMap:
    domain = mv.space.tensor(mw.space)
    codomain = mw.space.tensor(mv.space)
    return LinMap.from_function(domain, codomain,
                                lambda e: braid(mv, mw, e, inverse=inverse))


def check_braiding_invertible(mv: KModule, mw: KModule) -> bool:
    """braid followed by inverse braiding is the identity, both ways."""
    dim = mv.space.dim * mw.space.dim
    vw = mv.space.tensor(mw.space)
    for p in range(dim):
        e = vw.basis(p)
        if braid(mw, mv, braid(mv, mw, e), inverse=True) != e:
            return False
    wv = mw.space.tensor(mv.space)
    for p in range(wv.dim):
        e = wv.basis(p)
        if braid(mv, mw, braid(mw, mv, e, inverse=True)) != e:
            return False
    return True


def check_hexagons(mu: KModule, mv: KModule, mw: KModule) -> bool:
    """Both hexagon identities on the given module triple, all basis vectors.

    Psi_{U, V(x)W} = (Id_V (x) Psi_{U,W}) o (Psi_{U,V} (x) Id_W)
    Psi_{U(x)V, W} = (Psi_{U,W} (x) Id_V) o (Id_U (x) Psi_{V,W})
    """
    vw = tensor_module(mv, mw)
    uv = tensor_module(mu, mv)
    du, dv, dw = mu.space.dim, mv.space.dim, mw.space.dim

    for p in range(du * dv * dw):
        e = mu.space.tensor(vw.space).basis(p)
        lhs = braid(mu, vw, e)
        # (Psi_{U,V} (x) Id_W): regroup positions (u,(v,w)) -> ((u,v),w).
        mid: dict[int, Scalar] = {}
        for pos, c in e.comps.items():
            uvpos, w = divmod(pos, dw)
            img = braid(mu, mv, mu.space.tensor(mv.space).basis(uvpos))
            for p2, c2 in img.comps.items():
                mid[p2 * dw + w] = mid.get(p2 * dw + w, mu.space.field.zero) + c * c2
        mid = {k: v for k, v in mid.items() if v}
        # (Id_V (x) Psi_{U,W}): positions ((v,u),w) -> (v,(u,w)).
        rhs: dict[int, Scalar] = {}
        for pos, c in mid.items():
            vu, w = divmod(pos, dw)
            v, u = divmod(vu, du)
            img = braid(mu, mw, mu.space.tensor(mw.space).basis(u * dw + w))
            for p2, c2 in img.comps.items():
                q = v * dw * du + p2
                rhs[q] = rhs.get(q, mu.space.field.zero) + c * c2
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs.comps != rhs:
            return False

    for p in range(du * dv * dw):
        e = uv.space.tensor(mw.space).basis(p)
        lhs = braid(uv, mw, e)
        # (Id_U (x) Psi_{V,W}).
        mid: dict[int, Scalar] = {}
        for pos, c in e.comps.items():
            uvpos, w = divmod(pos, dw)
            u, v = divmod(uvpos, dv)
            img = braid(mv, mw, mv.space.tensor(mw.space).basis(v * dw + w))
            for p2, c2 in img.comps.items():
                q = u * dw * dv + p2
                mid[q] = mid.get(q, mu.space.field.zero) + c * c2
        # (Psi_{U,W} (x) Id_V): positions (u,(w,v)) -> ((w,u),v)... compute
        # braid on the (u,w) pair, keep v in place.
        rhs: dict[int, Scalar] = {}
        for pos, c in mid.items():
            if not c:
                continue
            u, wv = divmod(pos, dw * dv)
            w, v = divmod(wv, dv)
            img = braid(mu, mw, mu.space.tensor(mw.space).basis(u * dw + w))
            for p2, c2 in img.comps.items():
                q = p2 * dv + v
                rhs[q] = rhs.get(q, mu.space.field.zero) + c * c2
        rhs = {k: val for k, val in rhs.items() if val}
        if lhs.comps != rhs:
            return False
    return True


def check_module_algebra(mod: KModule, alg) -> bool:
    """K-module algebra laws: k.(ab) = (k1.a)(k2.b) and k.1 = eps(k)1.

    Checked for every K generator against all unclipped basis pairs of the
    algebra; multiplicativity of the coproduct extends this to all of K.
    """
    K = mod.qt.K
    space = mod.space
    if space.dim != alg.dim:
        raise ValueError("module space does not match the algebra")
    d = K.dim
    for gname in K.gens:
        gact = mod.gen_actions[gname]
        delta = K._cop_gen[gname]
        eps = K._counit_gen[gname]
        if gact(alg.one) != alg.one.scale(eps):
            return False
        for i in range(alg.dim):
            ei = space.basis(i)
            for j in range(alg.dim):
                ej = space.basis(j)
                prod, clipped = alg.product(ei, ej)
                if clipped:
                    continue
                lhs = gact(prod)
                rhs = space.zero()
                for pos, c in delta.comps.items():
                    a, b = divmod(pos, d)
                    left = mod.act_basis(a)(ei)
                    right = mod.act_basis(b)(ej)
                    term, clip2 = alg.product(left, right)
                    if clip2:
                        clipped = True
                        break
                    rhs = rhs + term.scale(c)
                if clipped:
                    continue
                if lhs != rhs:
                    return False
    return True


# -- concrete quasi-triangular structures -------------------------------------


def cyclic_group_hopf(field, n: int) -> HopfAlgebra:
    alg = HopfAlgebra(
        field, ["g"], {"g": ("cyclic", n)}, {},
        coproducts={}, counits={}, antipodes={}, name="kZ%d" % n)
    alg._cop_gen = {"g": alg.gen("g").tensor(alg.gen("g"))}
    alg._counit_gen = {"g": field.one}
    alg._anti_gen = {"g": alg.monomial_element({"g": (n - 1) % n})
                     if n > 1 else alg.one}
    return alg


def cyclic_qt(field, q, n: int) -> QuasiTriangular:
    """K = kZ_n with R = (1/n) sum q^(-2ij) g^i (x) g^j.

    Requires q^2 of multiplicative order n; the inverse has the sign of the
    exponent flipped.
    """
    K = cyclic_group_hopf(field, n)
    inv_n = field.from_int(n).inverse()
    r_comps = {}
    r_inv_comps = {}
    for i in range(n):
        for j in range(n):
            pos = K.index[(i,)] * n + K.index[(j,)]
            r_comps[pos] = inv_n * q ** (-2 * i * j)
            r_inv_comps[pos] = inv_n * q ** (2 * i * j)
    R = Element(K.space2, r_comps)
    R_inv = Element(K.space2, r_inv_comps)
    qt = QuasiTriangular(K, R, R_inv)
    one2 = K.one.tensor(K.one)
    assert K.mul2(R, R_inv) == one2 and K.mul2(R_inv, R) == one2
    return qt


def sweedler_hopf(field) -> HopfAlgebra:
    """The 4-dimensional Hopf algebra with g^2 = 1, x^2 = 0, xg = -gx."""
    alg = HopfAlgebra(
        field, ["g", "x"],
        {"g": ("cyclic", 2), "x": ("nil", 2)},
        {("x", "g"): [(-field.one, {"g": 1, "x": 1})]},
        coproducts={}, counits={}, antipodes={}, name="T2")
    one, g, x = alg.one, alg.gen("g"), alg.gen("x")
    # The coproduct orientation is the one compatible with the R-matrix
    # family below: with Delta(x) = g (x) x + x (x) 1 the coproduct-leg
    # axioms fail for xi != 0, while this orientation passes all of them.
    alg._cop_gen = {
        "g": g.tensor(g),
        "x": one.tensor(x) + x.tensor(g),
    }
    alg._counit_gen = {"g": field.one, "x": field.zero}
    alg._anti_gen = {"g": g, "x": alg.mul(g, x)}
    return alg


def sweedler_qt(field, xi) -> QuasiTriangular:
    """The one-parameter family of R-matrices on the 4-dimensional algebra."""
    K = sweedler_hopf(field)
    one, g, x = K.one, K.gen("g"), K.gen("x")
    gx = K.mul(g, x)
    half = field.from_int(2).inverse()
    r = (one.tensor(one) + one.tensor(g) + g.tensor(one) - g.tensor(g)).scale(half)
    r = r + (x.tensor(x) + x.tensor(gx) + gx.tensor(gx) - gx.tensor(x)).scale(half * xi)
    return QuasiTriangular(K, r)


def trivial_qt(field) -> QuasiTriangular:
    """The trivial Hopf algebra k with R = 1 (x) 1; braiding is the flip."""
    alg = HopfAlgebra(
        field, ["g"], {"g": ("cyclic", 1)}, {},
        coproducts={}, counits={}, antipodes={}, name="k")
    alg._cop_gen = {"g": alg.one.tensor(alg.one)}
    alg._counit_gen = {"g": field.one}
    alg._anti_gen = {"g": alg.one}
    return QuasiTriangular(alg, alg.one.tensor(alg.one), alg.one.tensor(alg.one))
