"""Yetter-Drinfeld modules over a braided Hopf algebra.

A YD module carries an H-action and an H-coaction, compatible through the
crossed condition relating m_H, Delta_H, the action, the coaction and the
background braiding.  YD modules braid via

    Psi_{V,W}(v (x) w) = sum (v_(-1) . w') (x) v_(0)',

acting with the coaction leg of v on the braided image of w; the inverse
uses the inverse background braiding and the inverse antipode.
"""

from __future__ import annotations

from .braid import braid, tensor_module
from .braided_hopf import BraidedHopf, HModule, tensor_hmodule
from .linspace import Element, LinMap
from .scalars import Scalar


class YDModule(HModule):
    """An H-module with a compatible H-coaction delta: V -> H (x) V."""

    def __init__(self, bhopf: BraidedHopf, kmod, gen_actions, coaction: LinMap,
                 name: str = "V"):
        super().__init__(bhopf, kmod, gen_actions, name=name)
        self.coaction = coaction

    def coact(self, v: Element) -> Element:
        return self.coaction(v)


def check_yd(yd: YDModule) -> dict:
    """Exact verification of module, comodule and crossed compatibility."""
    H = yd.hopf
    dim_h = H.alg.dim
    dim_v = yd.space.dim
    field = H.alg.field
    results = {"h_module": yd.check()}

    # Comodule axioms.
    ok_coassoc = True
    ok_counit = True
    for b in range(dim_v):
        d = yd.coaction(yd.space.basis(b))
        lhs: dict[int, Scalar] = {}
        rhs: dict[int, Scalar] = {}
        back = yd.space.zero()
        for pos, c in d.comps.items():
            h, v = divmod(pos, dim_v)
            for p2, c2 in H._coproduct_basis(h).comps.items():
                q = p2 * dim_v + v
                lhs[q] = lhs.get(q, field.zero) + c * c2
            for p2, c2 in yd.coaction(yd.space.basis(v)).comps.items():
                q = h * dim_h * dim_v + p2
                rhs[q] = rhs.get(q, field.zero) + c * c2
            back = back + yd.space.basis(v).scale(c * H.counit(H.space.basis(h)))
        if {k: s for k, s in lhs.items() if s} != {k: s for k, s in rhs.items() if s}:
            ok_coassoc = False
        if back != yd.space.basis(b):
            ok_counit = False
    results["comodule_coassociative"] = ok_coassoc
    results["comodule_counit"] = ok_counit

    # The coaction is K-linear into the tensor module H (x) V.
    hv = tensor_module(H.mod, yd.kmod)
    ok = True
    for gname in H.qt.K.gens:
        for b in range(dim_v):
            e = yd.space.basis(b)
            if yd.coaction(yd.kmod.gen_actions[gname](e)) != \
                    hv.gen_actions[gname](yd.coaction(e)):
                ok = False
    results["coaction_module_map"] = ok

    # Crossed compatibility, on every H-basis x V-basis pair.
    ok = True
    for i in range(dim_h):
        delta_h = H._coproduct_basis(i)
        for b in range(dim_v):
            v = yd.space.basis(b)
            dv = yd.coaction(v)
            lhs = _yd_lhs(H, yd, delta_h, dv)
            rhs = _yd_rhs(H, yd, delta_h, v)
            if lhs != rhs:
                ok = False
    results["yd_compatibility"] = ok
    return results


def _yd_lhs(H: BraidedHopf, yd: YDModule, delta_h: Element, dv: Element) -> Element:
    """(m_H (x) a_V)(Id (x) Psi_{H,H} (x) Id)(Delta_H (x) delta_V)."""
    dim_h = H.alg.dim
    dim_v = yd.space.dim
    out = H.space.tensor(yd.space).zero()
    for p1, c1 in delta_h.comps.items():
        h1, h2 = divmod(p1, dim_h)
        for p2, c2 in dv.comps.items():
            vm, v0 = divmod(p2, dim_v)
            crossed = braid(H.mod, H.mod, H.space.basis(h2).tensor(H.space.basis(vm)))
            for pc, cc in crossed.comps.items():
                vmp, h2p = divmod(pc, dim_h)
                left = H.alg.mul(H.space.basis(h1), H.space.basis(vmp))
                right = yd.act_basis(h2p)(yd.space.basis(v0))
                out = out + left.tensor(right).scale(c1 * c2 * cc)
    return out


def _yd_rhs(H: BraidedHopf, yd: YDModule, delta_h: Element, v: Element) -> Element:
    """(m_H (x) Id)(Id (x) Psi_{V,H})(delta (x) Id)(a (x) Id)(Id (x) Psi_{H,V})(Delta (x) Id)."""
    dim_h = H.alg.dim
    dim_v = yd.space.dim
    out = H.space.tensor(yd.space).zero()
    for p1, c1 in delta_h.comps.items():
        h1, h2 = divmod(p1, dim_h)
        crossed = braid(H.mod, yd.kmod, H.space.basis(h2).tensor(v))
        for pc, cc in crossed.comps.items():
            vp, h2p = divmod(pc, dim_h)
            acted = yd.act_basis(h1)(yd.space.basis(vp))
            dacted = yd.coaction(acted)
            for p2, c2 in dacted.comps.items():
                hm, v0 = divmod(p2, dim_v)
                crossed2 = braid(yd.kmod, H.mod,
                                 yd.space.basis(v0).tensor(H.space.basis(h2p)))
                for pc2, cc2 in crossed2.comps.items():
                    hp, v0p = divmod(pc2, dim_v)
                    left = H.alg.mul(H.space.basis(hm), H.space.basis(hp))
                    out = out + left.tensor(yd.space.basis(v0p)).scale(
                        c1 * cc * c2 * cc2)
    return out


# -- YD braiding -----------------------------------------------------------------


def yd_braid(v_mod: YDModule, w_mod: HModule, elem: Element) -> Element:
    """Psi^YD_{V,W}: V (x) W -> W (x) V; needs delta on V, action on W."""
    H = v_mod.hopf
    dim_v = v_mod.space.dim
    dim_w = w_mod.space.dim
    out = w_mod.space.tensor(v_mod.space).zero()
    for pos, c in elem.comps.items():
        a, b = divmod(pos, dim_w)
        dv = v_mod.coaction(v_mod.space.basis(a))
        for p1, c1 in dv.comps.items():
            vm, v0 = divmod(p1, dim_v)
            crossed = braid(v_mod.kmod, w_mod.kmod,
                            v_mod.space.basis(v0).tensor(w_mod.space.basis(b)))
            for pc, cc in crossed.comps.items():
                wp, v0p = divmod(pc, dim_v)
                acted = w_mod.act_basis(vm)(w_mod.space.basis(wp))
                out = out + acted.tensor(v_mod.space.basis(v0p)).scale(c * c1 * cc)
    return out


def yd_braid_inverse(v_mod: YDModule, w_mod: HModule, elem: Element) -> Element:
    """(Psi^YD_{V,W})^-1: W (x) V -> V (x) W.

    Composite (Id_V (x) a_W PsiInv_{W,H})(PsiInv_{W,V} (x) S^-1)
    (Id_W (x) PsiInv_{H,V} delta_V), where PsiInv_{X,Y}: X (x) Y -> Y (x) X
    is the inverse background braiding.
    """
    H = v_mod.hopf
    dim_v = v_mod.space.dim
    dim_w = w_mod.space.dim
    out = v_mod.space.tensor(w_mod.space).zero()
    for pos, c in elem.comps.items():
        w, a = divmod(pos, dim_v)
        dv = v_mod.coaction(v_mod.space.basis(a))
        for p1, c1 in dv.comps.items():
            hm, v0 = divmod(p1, dim_v)
            # PsiInv_{H,V}: H (x) V -> V (x) H.
            step1 = braid(H.mod, v_mod.kmod,
                          H.space.basis(hm).tensor(v_mod.space.basis(v0)),
                          inverse=True)
            for pc, cc in step1.comps.items():
                vp, hp = divmod(pc, H.alg.dim)
                sh = H.antipode_inverse(H.space.basis(hp))
                # PsiInv_{W,V}: W (x) V -> V (x) W.
                step2 = braid(w_mod.kmod, v_mod.kmod,
                              w_mod.space.basis(w).tensor(v_mod.space.basis(vp)),
                              inverse=True)
                for pc2, cc2 in step2.comps.items():
                    vpp, wp = divmod(pc2, dim_w)
                    for hpos, hc in sh.comps.items():
                        # PsiInv_{W,H}: W (x) H -> H (x) W, then act.
                        step3 = braid(w_mod.kmod, H.mod,
                                      w_mod.space.basis(wp).tensor(H.space.basis(hpos)),
                                      inverse=True)
                        for pc3, cc3 in step3.comps.items():
                            hq, wq = divmod(pc3, dim_w)
                            acted = w_mod.act_basis(hq)(w_mod.space.basis(wq))
                            out = out + v_mod.space.basis(vpp).tensor(acted).scale(
                                c * c1 * cc * cc2 * hc * cc3)
    return out


def yd_tensor(v_mod: YDModule, w_mod: YDModule, name: str | None = None) -> YDModule:
    """Tensor product of YD modules with the crossed action and coaction."""
    H = v_mod.hopf
    dim_v = v_mod.space.dim
    dim_w = w_mod.space.dim
    base = tensor_hmodule(v_mod, w_mod, name=name)
    kmod = base.kmod
    space = base.space

    # Coaction: (m_H (x) Id)(Id (x) Psi_{V,H} (x) Id)(delta_V (x) delta_W).
    def coact_fn(elem):
        out = H.space.tensor(space).zero()
        for pos, c in elem.comps.items():
            a, b = divmod(pos, dim_w)
            dv = v_mod.coaction(v_mod.space.basis(a))
            dw = w_mod.coaction(w_mod.space.basis(b))
            for p1, c1 in dv.comps.items():
                vm, v0 = divmod(p1, dim_v)
                for p2, c2 in dw.comps.items():
                    wm, w0 = divmod(p2, dim_w)
                    crossed = braid(v_mod.kmod, H.mod,
                                    v_mod.space.basis(v0).tensor(H.space.basis(wm)))
                    for pc, cc in crossed.comps.items():
                        hp, v0p = divmod(pc, dim_v)
                        left = H.alg.mul(H.space.basis(vm), H.space.basis(hp))
                        for lp, lc in left.comps.items():
                            q = (lp * dim_v + v0p) * dim_w + w0
                            out = out + Element(out.space, {q: c * c1 * c2 * cc * lc})
        return out

    coaction = LinMap.from_function(space, H.space.tensor(space), coact_fn)
    return YDModule(H, kmod, base.gen_actions, coaction,
                    name=name or "%s(x)%s" % (v_mod.name, w_mod.name))


# -- braided commutativity for YD algebras ----------------------------------------


def check_braided_commutative(alg, yd: YDModule) -> bool:
    """m Psi^YD = m and m (Psi^YD)^-1 = m on all unclipped basis pairs."""
    if yd.space.dim != alg.dim:
        raise ValueError("YD module space does not match the algebra")
    for i in range(alg.dim):
        ei = yd.space.basis(i)
        for j in range(alg.dim):
            ej = yd.space.basis(j)
            plain, clipped = alg.product(ei, ej)
            if clipped:
                continue
            crossed = yd_braid(yd, yd, ei.tensor(ej))
            acc = yd.space.zero()
            bad = False
            for pos, c in crossed.comps.items():
                a, b = divmod(pos, alg.dim)
                term, clip2 = alg.product(yd.space.basis(a), yd.space.basis(b))
                if clip2:
                    bad = True
                    break
                acc = acc + term.scale(c)
            if not bad and acc != plain:
                return False
            inv = yd_braid_inverse(yd, yd, ei.tensor(ej))
            acc = yd.space.zero()
            bad = False
            for pos, c in inv.comps.items():
                a, b = divmod(pos, alg.dim)
                term, clip2 = alg.product(yd.space.basis(a), yd.space.basis(b))
                if clip2:
                    bad = True
                    break
                acc = acc + term.scale(c)
            if not bad and acc != plain:
                return False
    return True


# -- the adjoint YD structure on H itself ------------------------------------------


def adjoint_yd(H: BraidedHopf) -> YDModule:
    """H as a YD module: adjoint action h.v = h1 v' S(h2') and coaction Delta."""
    dim = H.alg.dim

    def adjoint_of_gen(gname):
        delta_g = H._cop_gen[gname]

        def act_fn(v):
            out = H.space.zero()
            for p1, c1 in delta_g.comps.items():
                h1, h2 = divmod(p1, dim)
                crossed = braid(H.mod, H.mod, H.space.basis(h2).tensor(v))
                for pc, cc in crossed.comps.items():
                    vp, h2p = divmod(pc, dim)
                    term = H.alg.mul(
                        H.alg.mul(H.space.basis(h1), H.space.basis(vp)),
                        H._antipode_basis(h2p))
                    out = out + term.scale(c1 * cc)
            return out

        return LinMap.from_function(H.space, H.space, act_fn)

    gen_actions = {g: adjoint_of_gen(g) for g in H.alg.gens}
    coaction = LinMap.from_function(
        H.space, H.space.tensor(H.space), H.coproduct)
    return YDModule(H, H.mod, gen_actions, coaction, name="%s_ad" % H.alg.name)
