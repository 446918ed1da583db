"""Dual pairings, the braided Drinfeld and Heisenberg doubles, and u_q(sl2).

A nondegenerate Hopf pairing of braided Hopf algebras in Mod_K induces:

* the coregular action of the primal algebra on the Psi-inverse opposite of
  the dual, and with it the braided Heisenberg double as a smash product,
  checked against the closed three-R-matrix multiplication formula;
* the braided Drinfeld double on Hdual (x) K (x) H as an ordinary presented
  Hopf algebra.  The rewrite rule for the out-of-order generator product is
  derived numerically by expanding both sides of the defining cross-relation
  and solving; the defining relation is then re-verified on every basis pair
  of the result.  For the nilpotent line over a cyclic group the double is
  identified with the small quantum group u_q(sl2) by an explicit pair of
  mutually inverse maps (``double_iso_uqsl2``);
* the action of the double on any Yetter-Drinfeld module, with the dual
  generators acting through the coaction and the pairing (``phi_functor``).

Truncated polynomial Hopf algebras and their factorial pairing (the input
data whose Heisenberg double is the Weyl algebra) live here as well.
"""

from __future__ import annotations

from .algebra import CYCLIC, FREE, NIL, HopfAlgebra, PresentedAlgebra
from .braid import KModule, QuasiTriangular, cyclic_qt
from .braided_hopf import BraidedHopf, HModule, nilpotent_line_hopf
from .constructions import ModuleAlgebra, OppositeBraidedAlgebra, SmashAlgebra, smash_product
from .linspace import Element, LinMap
from .scalars import Scalar, q_factorial, q_root
from .yd import YDModule

# -- dual pairings ----------------------------------------------------------------


class DualPairing:
    """A pairing <c, b> of a dual braided Hopf algebra against a primal one.

    The canonical matrix is stored dual-first; the opposite orientation
    ev: H (x) Hdual -> k used by coregular actions and Heisenberg doubles
    reads the same matrix, ev(b (x) c) = <c, b>.
    """

    def __init__(self, dual: BraidedHopf, primal: BraidedHopf,
                 matrix: dict[tuple[int, int], Scalar]):
        self.dual = dual
        self.primal = primal
        self.matrix = {k: v for k, v in matrix.items() if v}
        self.field = primal.alg.field

    def pair_basis(self, ci: int, bi: int) -> Scalar:
        return self.matrix.get((ci, bi), self.field.zero)

    def eval(self, c: Element, b: Element) -> Scalar:
        acc = self.field.zero
        for ci, cc in c.comps.items():
            for bi, bc in b.comps.items():
                v = self.matrix.get((ci, bi))
                if v is not None:
                    acc = acc + cc * bc * v
        return acc

    def rank(self) -> int:
        rows: dict[int, dict[int, Scalar]] = {}
        for (ci, bi), v in self.matrix.items():
            rows.setdefault(ci, {})[bi] = v
        cols = {bi: {} for bi in range(self.primal.alg.dim)}
        for ci, row in rows.items():
            for bi, v in row.items():
                cols[bi][ci] = v
        f = LinMap(self.primal.space, self.dual.space,
                   {j: col for j, col in cols.items() if col})
        return f.rank()


def check_pairing(p: DualPairing) -> dict:
    """Certify the Hopf pairing laws on all basis data, both orientations."""
    dual, primal = p.dual, p.primal
    ddim, bdim = dual.alg.dim, primal.alg.dim
    field = p.field
    results = {}

    square = ddim == bdim
    results["nondegenerate"] = square and p.rank() == bdim

    ok = True
    for bi in range(bdim):
        if p.eval(dual.alg.one, primal.space.basis(bi)) != \
                primal.counit(primal.space.basis(bi)):
            ok = False
    for ci in range(ddim):
        if p.eval(dual.space.basis(ci), primal.alg.one) != \
                dual.counit(dual.space.basis(ci)):
            ok = False
    results["unit_counit"] = ok

    # <c c', b> = sum <c, b_1><c', b_2>  (product on the dual side).
    dtrunc = dual.alg.truncation
    ok = True
    for ci in range(ddim):
        for cj in range(ddim):
            if dtrunc is not None and \
                    dual.alg.degree(ci) + dual.alg.degree(cj) > dtrunc:
                continue
            cc = dual.alg.mul(dual.space.basis(ci), dual.space.basis(cj))
            for bi in range(bdim):
                lhs = p.eval(cc, primal.space.basis(bi))
                rhs = field.zero
                for pos, w in primal._coproduct_basis(bi).comps.items():
                    b1, b2 = divmod(pos, bdim)
                    rhs = rhs + w * p.pair_basis(ci, b1) * p.pair_basis(cj, b2)
                if lhs != rhs:
                    ok = False
    results["dual_product_law"] = ok

    # <c, a b> = sum <c_1, a><c_2, b>  (product on the primal side).
    btrunc = primal.alg.truncation
    ok = True
    for bi in range(bdim):
        for bj in range(bdim):
            if btrunc is not None and \
                    primal.alg.degree(bi) + primal.alg.degree(bj) > btrunc:
                continue
            bb = primal.alg.mul(primal.space.basis(bi), primal.space.basis(bj))
            for ci in range(ddim):
                lhs = p.eval(dual.space.basis(ci), bb)
                rhs = field.zero
                for pos, w in dual._coproduct_basis(ci).comps.items():
                    c1, c2 = divmod(pos, ddim)
                    rhs = rhs + w * p.pair_basis(c1, bi) * p.pair_basis(c2, bj)
                if lhs != rhs:
                    ok = False
    results["primal_product_law"] = ok

    ok = True
    for ci in range(ddim):
        sc = dual.antipode(dual.space.basis(ci))
        for bi in range(bdim):
            sb = primal.antipode(primal.space.basis(bi))
            if p.eval(sc, primal.space.basis(bi)) != \
                    p.eval(dual.space.basis(ci), sb):
                ok = False
    results["antipode_compatible"] = ok

    # K-invariance: <k_1 . c, k_2 . b> = eps(k) <c, b> for K-generators.
    K = dual.qt.K
    ok = True
    for kname in K.gens:
        delta = K._cop_gen[kname]
        eps = K._counit_gen[kname]
        for ci in range(ddim):
            for bi in range(bdim):
                acc = field.zero
                for pos, w in delta.comps.items():
                    k1, k2 = divmod(pos, K.dim)
                    cc = dual.mod.act_basis(k1)(dual.space.basis(ci))
                    bb = primal.mod.act_basis(k2)(primal.space.basis(bi))
                    acc = acc + w * p.eval(cc, bb)
                if acc != eps * p.pair_basis(ci, bi):
                    ok = False
    results["k_invariant"] = ok
    return results


def line_pairing(dual: BraidedHopf, primal: BraidedHopf, q: Scalar,
                 normalization: Scalar | None = None) -> DualPairing:
    """Pairing of the dual nilpotent lines: <c^a, x^b> = delta_ab [a]!_{q^2} lam^a.

    The default normalization is lam = <c, x> = 1/(q - q^-1).
    """
    lam = normalization
    if lam is None:
        lam = (q - q ** -1).inverse()
    t = q * q
    matrix = {}
    for a in range(primal.alg.dim):
        matrix[(a, a)] = q_factorial(a, t) * lam ** a
    return DualPairing(dual, primal, matrix)


def polynomial_pairing(dual: BraidedHopf, primal: BraidedHopf) -> DualPairing:
    """Pairing of dual polynomial Hopf algebras: <d^alpha, x^beta> =
    delta_{alpha,beta} alpha! (componentwise factorials)."""
    field = primal.alg.field
    matrix = {}
    index = {mono: i for i, mono in enumerate(dual.alg.basis)}
    for bi, mono in enumerate(primal.alg.basis):
        ci = index.get(mono)
        if ci is None:
            continue
        val = 1
        for e in mono:
            for m in range(2, e + 1):
                val *= m
        matrix[(ci, bi)] = field.from_int(val)
    return DualPairing(dual, primal, matrix)


# -- coregular action and the Heisenberg double -----------------------------------


def coregular_module(p: DualPairing) -> ModuleAlgebra:
    """Hdual^{Psi-inverse} as a module algebra over H via the coregular action

        h . c = sum ev(h (x) c_1) c_2 = sum <c_1, h> c_2.
    """
    H, dual = p.primal, p.dual
    ddim = dual.alg.dim
    opp = OppositeBraidedAlgebra(dual.alg, dual.mod,
                                 name="%s^(PsiInv)" % dual.alg.name)
    space = dual.space

    gen_actions = {}
    for gname in H.alg.gens:
        gi = next(iter(H.alg.gen(gname).comps))

        def act_fn(elem, gi=gi):
            out = space.zero()
            for ci, cc in elem.comps.items():
                for pos, w in dual._coproduct_basis(ci).comps.items():
                    c1, c2 = divmod(pos, ddim)
                    v = p.pair_basis(c1, gi)
                    if v:
                        out = out + space.basis(c2).scale(cc * w * v)
            return out

        gen_actions[gname] = LinMap.from_function(space, space, act_fn)

    hmod = HModule(H, dual.mod, gen_actions, name="coregular")
    return ModuleAlgebra(opp, hmod)


def heisenberg_double(p: DualPairing,
                      qt: QuasiTriangular | None = None) -> SmashAlgebra:
    """Heis(H, Hdual) = Hdual^{Psi-inverse} >< H."""
    if qt is not None and qt is not p.primal.qt:
        raise ValueError("pairing and quasi-triangular structure disagree")
    return smash_product(coregular_module(p), p.primal,
                         name="Heis(%s)" % p.primal.alg.name)


def heisenberg_mul_oracle(p: DualPairing, x: Element, y: Element) -> Element:
    """Independent evaluation of the closed multiplication formula

        m(a (x) g (x) b (x) h) = m_Hd(R^(-1) R'^(2) . b_2 (x) R^(-2) . a)
            (x) m_H(R''^(1) R'^(1) . g_2 (x) h) <g_1, R''^(2) . b_1>

    with three independent copies of the R-matrix.  Elements live in the
    Heisenberg space Hdual (x) H.
    """
    H, dual = p.primal, p.dual
    qt = H.qt
    K = qt.K
    hdim, ddim = H.alg.dim, dual.alg.dim
    space = dual.space.tensor(H.space)
    rinv = [(divmod(pos, K.dim), c) for pos, c in qt.R_inv.comps.items()]
    rmat = [(divmod(pos, K.dim), c) for pos, c in qt.R.comps.items()]
    out = space.zero()
    for pos1, c1 in x.comps.items():
        a, g = divmod(pos1, hdim)
        for pos2, c2 in y.comps.items():
            b, h = divmod(pos2, hdim)
            for pb, wb in dual._coproduct_basis(b).comps.items():
                b1, b2 = divmod(pb, ddim)
                for pg, wg in H._coproduct_basis(g).comps.items():
                    g1, g2 = divmod(pg, hdim)
                    for ((r1, r2), wr) in rinv:
                        for ((rp1, rp2), wrp) in rmat:
                            # K-products acting on b_2 and (with the third
                            # copy below) on g_2.
                            kb = K.mul(K.space.basis(r1), K.space.basis(rp2))
                            left_b = _k_act(dual.mod, kb,
                                            dual.space.basis(b2))
                            right_a = dual.mod.act_basis(r2)(
                                dual.space.basis(a))
                            mleft, cl = dual.alg.product(left_b, right_a)
                            if cl:
                                raise OverflowError(
                                    "oracle product exceeded truncation")
                            for ((rpp1, rpp2), wrpp) in rmat:
                                kg = K.mul(K.space.basis(rpp1),
                                           K.space.basis(rp1))
                                left_g = _k_act(H.mod, kg, H.space.basis(g2))
                                mright, cr = H.alg.product(left_g,
                                                           H.space.basis(h))
                                if cr:
                                    raise OverflowError(
                                        "oracle product exceeded truncation")
                                acted_b1 = dual.mod.act_basis(rpp2)(
                                    dual.space.basis(b1))
                                pairing = p.eval(acted_b1, H.space.basis(g1))
                                w = (c1 * c2 * wb * wg * wr * wrp * wrpp *
                                     pairing)
                                if w:
                                    out = out + mleft.tensor(mright).scale(w)
    return out


def _k_act(kmod: KModule, kelem: Element, v: Element) -> Element:
    out = kmod.space.zero()
    for ki, kc in kelem.comps.items():
        out = out + kmod.act_basis(ki)(v).scale(kc)
    return out


# -- polynomial Hopf algebras (for the Weyl scenario) -----------------------------


def polynomial_hopf(qt: QuasiTriangular, names: list[str], trunc: int,
                    name: str | None = None) -> BraidedHopf:
    """k[x_1..x_m] truncated at total degree trunc, generators primitive."""
    field = qt.K.field
    swaps = {}
    for i, hi in enumerate(names):
        for lo in names[:i]:
            swaps[(hi, lo)] = [(field.one, {lo: 1, hi: 1})]
    alg = PresentedAlgebra(field, names, {nm: ("free",) for nm in names},
                           swaps, truncation=trunc,
                           name=name or "k[%s]" % ",".join(names))
    acts = {}
    for g in qt.K.gens:
        c = qt.K._counit_gen[g]
        cols = {j: {j: c} for j in range(alg.dim)} if c else {}
        acts[g] = LinMap(alg.space, alg.space, cols)
    mod = KModule(qt, alg.space, acts, name=alg.name)
    coproducts = {}
    counits = {}
    antipodes = {}
    for nm in names:
        x = alg.gen(nm)
        coproducts[nm] = x.tensor(alg.one) + alg.one.tensor(x)
        counits[nm] = field.zero
        antipodes[nm] = -x
    return BraidedHopf(alg, mod, coproducts, counits, antipodes)


# -- braided Drinfeld double -------------------------------------------------------


def _gen_action_scalar(kmod: KModule, kindex: int, gen_elem: Element) -> Scalar:
    """The scalar by which the K-basis element acts on a weight vector."""
    image = kmod.act_basis(kindex)(gen_elem)
    (pos, val), = image.comps.items()
    gpos = next(iter(gen_elem.comps))
    if pos != gpos:
        raise ValueError("generator is not a K-weight vector")
    return val / gen_elem.comps[gpos]


def _derive_cross_rule(qt: QuasiTriangular, p: DualPairing):
    """Solve the defining cross-relation for the out-of-order product b c.

    Both sides of the relation

        (Rinv1 . b_2)(Rinv2 . c_1) <c_2, b_1>
            = Rinv1 c_2 b_1 R2 <Rinv2' . c_1, R1' . b_2>

    are expanded for the generators b, c into normal-ordered words
    c^t g^m b^s; the left side contains the single out-of-order word b c
    with a nonzero coefficient mu, so b c = (rhs - lhs_normal) / mu.
    Returns ({(t, m, s): Scalar}, mu).
    """
    H, dual = p.primal, p.dual
    K = qt.K
    kdim = K.dim
    field = p.field
    rinv = [(divmod(pos, kdim), c) for pos, c in qt.R_inv.comps.items()]
    rmat = [(divmod(pos, kdim), c) for pos, c in qt.R.comps.items()]

    def h_legs(bh):
        """Sweedler legs of the generator coproduct as (i, j, coeff)."""
        dim = bh.alg.dim
        return [(divmod(pos, dim), c)
                for pos, c in bh._cop_gen[bh.alg.gens[0]].comps.items()]

    def word_degree(elem, alg):
        """Basis index and coefficient of a single-term element."""
        (pos, val), = elem.comps.items()
        return alg.degree(pos), val

    lhs_normal: dict[tuple[int, int, int], Scalar] = {}
    rhs_normal: dict[tuple[int, int, int], Scalar] = {}
    mu = field.zero

    def add(table, key, value):
        s = table.get(key)
        s = value if s is None else s + value
        if s:
            table[key] = s
        elif key in table:
            del table[key]

    for (b1, b2), wb in h_legs(H):
        for (c1, c2), wc in h_legs(dual):
            w0 = wb * wc
            # Left side: pairing <c_2, b_1> then (Rinv1 . b_2)(Rinv2 . c_1).
            pair_l = p.pair_basis(c2, b1)
            if pair_l:
                for ((i, j), wr) in rinv:
                    bb = H.mod.act_basis(i)(H.space.basis(b2))
                    cc = dual.mod.act_basis(j)(dual.space.basis(c1))
                    if not bb.comps or not cc.comps:
                        continue
                    db, vb = word_degree(bb, H.alg)
                    dc, vc = word_degree(cc, dual.alg)
                    w = w0 * pair_l * wr * vb * vc
                    if db and dc:
                        if db != 1 or dc != 1:
                            raise ValueError(
                                "cross-relation is not solvable by a single "
                                "generator rewrite")
                        mu = mu + w
                    else:
                        add(lhs_normal, (dc, 0, db), w)
            # Right side: Rinv1 c_2 b_1 R2 <Rinv2 . c_1, R1 . b_2>.
            for ((i1, i2), wr1) in rinv:
                cc = dual.mod.act_basis(i2)(dual.space.basis(c1))
                if not cc.comps:
                    continue
                for ((k1, k2), wr2) in rmat:
                    bb = H.mod.act_basis(k1)(H.space.basis(b2))
                    if not bb.comps:
                        continue
                    pair_r = p.eval(cc, bb)
                    if not pair_r:
                        continue
                    # Normalize g^{i1} c_2 b_1 g^{k2} to c^t g^m b^s.
                    alpha_elem = dual.mod.act_basis(i1)(dual.space.basis(c2))
                    dt, alpha = word_degree(alpha_elem, dual.alg)
                    kinv = (kdim - k2) % kdim
                    beta_elem = H.mod.act_basis(kinv)(H.space.basis(b1))
                    ds, beta = word_degree(beta_elem, H.alg)
                    w = w0 * wr1 * wr2 * pair_r * alpha * beta
                    add(rhs_normal, (dt, (i1 + k2) % kdim, ds), w)

    if not mu:
        raise ValueError("cross-relation has no out-of-order term to solve for")
    rule: dict[tuple[int, int, int], Scalar] = {}
    keys = set(lhs_normal) | set(rhs_normal)
    for key in keys:
        v = rhs_normal.get(key, field.zero) - lhs_normal.get(key, field.zero)
        if v:
            rule[key] = v / mu
    return rule, mu


def drinfeld_double(qt: QuasiTriangular, p: DualPairing,
                    name: str = "Drin") -> HopfAlgebra:
    """The braided Drinfeld double Drin_K(Hdual, H) as a presented Hopf algebra.

    Supported inputs: K the cyclic group algebra with one group-like
    generator, and H, Hdual single-generator nilpotent lines.  The algebra
    lives on Hdual (x) K (x) H with normal-ordered basis c^t g^m b^s; the
    rewrite rule for b c is derived numerically from the defining
    cross-relation, and the straightening rules for g come from the K-weights
    of the generators.  Coproducts and antipodes are evaluated from their
    defining expressions, collapsing the R-matrix sums numerically.
    """
    H, dual = p.primal, p.dual
    K = qt.K
    field = p.field
    if len(K.gens) != 1 or K.powers[0][0] != CYCLIC:
        raise ValueError("the double needs K to be a cyclic group algebra")
    if len(H.alg.gens) != 1 or len(dual.alg.gens) != 1:
        raise ValueError("the double supports single-generator duals only")
    bname = H.alg.gens[0]
    cname = dual.alg.gens[0]
    if bname == cname or "g" in (bname, cname):
        raise ValueError("generator names collide")
    nk = K.powers[0][1]
    nb = H.alg.powers[0][1]
    nc = dual.alg.powers[0][1]

    g_index = next(iter(K.gen("g").comps))
    s_c = _gen_action_scalar(dual.mod, g_index, dual.alg.gen(cname))
    s_b = _gen_action_scalar(H.mod, g_index, H.alg.gen(bname))

    rule, _mu = _derive_cross_rule(qt, p)
    swap_bc = [(coeff, {cname: t, "g": m, bname: s})
               for (t, m, s), coeff in sorted(rule.items())]

    alg = HopfAlgebra(
        field, [cname, "g", bname],
        {cname: ("nil", nc), "g": ("cyclic", nk), bname: ("nil", nb)},
        {
            ("g", cname): [(s_c, {cname: 1, "g": 1})],
            (bname, "g"): [(s_b.inverse(), {"g": 1, bname: 1})],
            (bname, cname): swap_bc,
        },
        coproducts={}, counits={}, antipodes={}, name=name)

    def embed_h(elem):
        out = alg.space.zero()
        for pos, c in elem.comps.items():
            out = out + alg.monomial_element({bname: pos}).scale(c)
        return out

    def embed_d(elem):
        out = alg.space.zero()
        for pos, c in elem.comps.items():
            out = out + alg.monomial_element({cname: pos}).scale(c)
        return out

    def embed_k(elem):
        out = alg.space.zero()
        for pos, c in elem.comps.items():
            out = out + alg.monomial_element({"g": pos}).scale(c)
        return out

    kdim = K.dim
    rinv = [(divmod(pos, kdim), c) for pos, c in qt.R_inv.comps.items()]
    rmat = [(divmod(pos, kdim), c) for pos, c in qt.R.comps.items()]

    # Delta(b) = b_1 R2 (x) (R1 . b_2).
    hdim = H.alg.dim
    cop_b = alg.space2.zero()
    for pos, w in H._cop_gen[bname].comps.items():
        b1, b2 = divmod(pos, hdim)
        for ((i, j), wr) in rmat:
            left = alg.mul(embed_h(H.space.basis(b1)),
                           alg.monomial_element({"g": j}))
            right = embed_h(H.mod.act_basis(i)(H.space.basis(b2)))
            cop_b = cop_b + _tensor2(alg, left, right).scale(w * wr)

    # Delta(c) = Rinv1 c_2 (x) (Rinv2 . c_1).
    ddim = dual.alg.dim
    cop_c = alg.space2.zero()
    for pos, w in dual._cop_gen[cname].comps.items():
        c1, c2 = divmod(pos, ddim)
        for ((i, j), wr) in rinv:
            left = alg.mul(alg.monomial_element({"g": i}),
                           embed_d(dual.space.basis(c2)))
            right = embed_d(dual.mod.act_basis(j)(dual.space.basis(c1)))
            cop_c = cop_c + _tensor2(alg, left, right).scale(w * wr)

    g_elem = alg.gen("g")
    alg._cop_gen = {
        "g": g_elem.tensor(g_elem),
        bname: cop_b,
        cname: cop_c,
    }
    alg._counit_gen = {
        "g": field.one,
        bname: H._counit_gen[bname],
        cname: dual._counit_gen[cname],
    }

    # S(b) = S_K(R2) (R1 . S_H(b));  S(c) = S_K(Rinv1) (Rinv2 . Sinv_Hd(c)).
    anti_b = alg.space.zero()
    sb = H.antipode(H.alg.gen(bname))
    for ((i, j), wr) in rmat:
        left = embed_k(K._antipode_basis(j))
        right = embed_h(H.mod.act_basis(i)(sb))
        anti_b = anti_b + alg.mul(left, right).scale(wr)
    anti_c = alg.space.zero()
    sc = dual.antipode_inverse(dual.alg.gen(cname))
    for ((i, j), wr) in rinv:
        left = embed_k(K._antipode_basis(i))
        right = embed_d(dual.mod.act_basis(j)(sc))
        anti_c = anti_c + alg.mul(left, right).scale(wr)
    alg._anti_gen = {
        "g": alg.monomial_element({"g": nk - 1}),
        bname: anti_b,
        cname: anti_c,
    }
    return alg


def _tensor2(alg, left: Element, right: Element) -> Element:
    comps: dict[int, Scalar] = {}
    dim = alg.dim
    for lp, lc in left.comps.items():
        for rp, rc in right.comps.items():
            v = lc * rc
            pos = lp * dim + rp
            s = comps.get(pos)
            s = v if s is None else s + v
            if s:
                comps[pos] = s
            elif pos in comps:
                del comps[pos]
    return Element(alg.space2, comps)


def cross_relation_check(qt: QuasiTriangular, p: DualPairing,
                         double: HopfAlgebra) -> bool:
    """Verify the defining cross-relation inside the built double for every
    basis pair of powers (c^t, b^s) -- an independent sweep that exercises
    the full coproducts and the full pairing matrix, not just the generator
    case the construction solved."""
    H, dual = p.primal, p.dual
    K = qt.K
    kdim = K.dim
    hdim, ddim = H.alg.dim, dual.alg.dim
    bname, cname = H.alg.gens[0], dual.alg.gens[0]
    rinv = [(divmod(pos, kdim), c) for pos, c in qt.R_inv.comps.items()]
    rmat = [(divmod(pos, kdim), c) for pos, c in qt.R.comps.items()]

    def embed(t, m, s):
        return double.monomial_element({cname: t, "g": m, bname: s})

    for s in range(hdim):
        for t in range(ddim):
            lhs = double.space.zero()
            rhs = double.space.zero()
            for pb, wb in H._coproduct_basis(s).comps.items():
                b1, b2 = divmod(pb, hdim)
                for pc, wc in dual._coproduct_basis(t).comps.items():
                    c1, c2 = divmod(pc, ddim)
                    w0 = wb * wc
                    pair_l = p.pair_basis(c2, b1)
                    if pair_l:
                        for ((i, j), wr) in rinv:
                            bb = H.mod.act_basis(i)(H.space.basis(b2))
                            cc = dual.mod.act_basis(j)(dual.space.basis(c1))
                            for bpos, bv in bb.comps.items():
                                for cpos, cv in cc.comps.items():
                                    term = double.mul(embed(0, 0, bpos),
                                                      embed(cpos, 0, 0))
                                    lhs = lhs + term.scale(
                                        w0 * pair_l * wr * bv * cv)
                    for ((i1, i2), wr1) in rinv:
                        cc = dual.mod.act_basis(i2)(dual.space.basis(c1))
                        if not cc.comps:
                            continue
                        for ((k1, k2), wr2) in rmat:
                            bb = H.mod.act_basis(k1)(H.space.basis(b2))
                            if not bb.comps:
                                continue
                            pair_r = p.eval(cc, bb)
                            if not pair_r:
                                continue
                            word = double.mul(
                                double.mul(embed(0, i1, 0), embed(c2, 0, 0)),
                                double.mul(embed(0, 0, b1), embed(0, k2, 0)))
                            rhs = rhs + word.scale(w0 * wr1 * wr2 * pair_r)
            if lhs != rhs:
                return False
    return True


# -- u_q(sl2) and the identification with the double ------------------------------


def uqsl2_presentation(n: int, q: Scalar | None = None) -> HopfAlgebra:
    """The small quantum group u_q(sl2) with PBW basis f^a k^b e^c."""
    if q is None:
        field, q = q_root(n)
    else:
        field = q.field
    c = (q - q ** -1).inverse()
    alg = HopfAlgebra(
        field, ["f", "k", "e"],
        {"f": ("nil", n), "k": ("cyclic", n), "e": ("nil", n)},
        {
            ("k", "f"): [(q ** -2, {"f": 1, "k": 1})],
            ("e", "f"): [(field.one, {"f": 1, "e": 1}),
                         (c, {"k": 1}),
                         (-c, {"k": n - 1})],
            ("e", "k"): [(q ** -2, {"k": 1, "e": 1})],
        },
        coproducts={}, counits={}, antipodes={}, name="uqsl2")
    one = alg.one
    f, k, e = alg.gen("f"), alg.gen("k"), alg.gen("e")
    kinv = alg.monomial_element({"k": n - 1})
    alg._cop_gen = {
        "k": k.tensor(k),
        "e": one.tensor(e) + e.tensor(k),
        "f": kinv.tensor(f) + f.tensor(one),
    }
    alg._counit_gen = {"k": field.one, "e": field.zero, "f": field.zero}
    alg._anti_gen = {
        "k": kinv,
        "e": -alg.mul(e, kinv),
        "f": -alg.mul(k, f),
    }
    return alg


def algebra_map(src: PresentedAlgebra, dst, gen_images: dict[str, Element]) -> LinMap:
    """The linear map sending each normal-ordered monomial to the ordered
    product of generator images."""
    cols = {}
    for i, mono in enumerate(src.basis):
        img = dst.one
        for gi, e in enumerate(mono):
            for _ in range(e):
                img = dst.mul(img, gen_images[src.gens[gi]])
        if img.comps:
            cols[i] = dict(img.comps)
    return LinMap(src.space, dst.space, cols)


def map_respects_relations(src: PresentedAlgebra, dst,
                           gen_images: dict[str, Element]) -> bool:
    """All defining relations of src map to zero under the generator images."""
    def image_of_mono(mono):
        img = dst.one
        for gi, e in enumerate(mono):
            for _ in range(e):
                img = dst.mul(img, gen_images[src.gens[gi]])
        return img

    for (hi, lo), rules in src._swaps.items():
        lhs = dst.mul(gen_images[src.gens[hi]], gen_images[src.gens[lo]])
        rhs = dst.one.scale(src.field.zero)
        for coeff, mono in rules:
            rhs = rhs + image_of_mono(mono).scale(coeff)
        if lhs != rhs:
            return False
    for gname, (kind, bound) in zip(src.gens, src.powers):
        if kind == FREE:
            continue
        img = dst.one
        for _ in range(bound):
            img = dst.mul(img, gen_images[gname])
        if kind == NIL and not img.is_zero():
            return False
        if kind == CYCLIC and img != dst.one:
            return False
    return True


def double_iso_uqsl2(n: int, q: Scalar | None = None) -> dict:
    """Certify that the double of the nilpotent line is u_q(sl2).

    The map sends g -> k, the primal generator x -> f and the dual
    generator -> k^{n-1} e; the report records relation preservation in
    both directions, bijectivity (matrix rank), and compatibility with the
    coproducts, counits and antipodes on generators.
    """
    if q is None:
        field, q = q_root(n)
    else:
        field = q.field
    qt = cyclic_qt(field, q, n)
    H = nilpotent_line_hopf(qt, q, n, gen="x", weight=-1)
    dual = nilpotent_line_hopf(qt, q, n, gen="xs", weight=1)
    p = line_pairing(dual, H, q)
    double = drinfeld_double(qt, p)
    uq = uqsl2_presentation(n, q)

    pi_gens = {
        "g": uq.gen("k"),
        "x": uq.gen("f"),
        "xs": uq.mul(uq.monomial_element({"k": n - 1}), uq.gen("e")),
    }
    rho_gens = {
        "k": double.gen("g"),
        "f": double.gen("x"),
        "e": double.mul(double.gen("g"), double.gen("xs")),
    }
    pi = algebra_map(double, uq, pi_gens)

    report = {
        "cross_relation_sweep": cross_relation_check(qt, p, double),
        "pi_respects_relations": map_respects_relations(double, uq, pi_gens),
        "rho_respects_relations": map_respects_relations(uq, double, rho_gens),
        "rank": pi.rank(),
        "bijective": pi.rank() == n ** 3,
    }

    ok = True
    for gname, img in rho_gens.items():
        if pi(img) != uq.gen(gname):
            ok = False
    report["pi_rho_is_identity_on_generators"] = ok

    ok_cop = True
    ok_counit = True
    ok_anti = True
    ddim = double.dim
    for gname in double.gens:
        dcop = double._cop_gen[gname]
        mapped = uq.space2.zero()
        for pos, c in dcop.comps.items():
            l, r = divmod(pos, ddim)
            left = pi(double.space.basis(l))
            right = pi(double.space.basis(r))
            for lp, lc in left.comps.items():
                for rp, rc in right.comps.items():
                    mapped = mapped + Element(
                        uq.space2, {lp * uq.dim + rp: c * lc * rc})
        if mapped != uq.coproduct(pi_gens[gname]):
            ok_cop = False
        if double._counit_gen[gname] != uq.counit(pi_gens[gname]):
            ok_counit = False
        if pi(double._anti_gen[gname]) != uq.antipode(pi_gens[gname]):
            ok_anti = False
    report["coproduct_compatible"] = ok_cop
    report["counit_compatible"] = ok_counit
    report["antipode_compatible"] = ok_anti
    report["all"] = all(
        v if isinstance(v, bool) else True for v in report.values())
    return report


# -- the double acting on YD modules ----------------------------------------------


def phi_functor(v: YDModule, p: DualPairing) -> dict[str, LinMap]:
    """Action maps of the double's generators on a YD module.

    The dual generator acts through the coaction and the pairing,
    c . w = <c, w_(-1)> w_(0); g acts by the K-structure and the primal
    generator by the H-action.
    """
    H, dual = p.primal, p.dual
    bname = H.alg.gens[0]
    cname = dual.alg.gens[0]
    ci = next(iter(dual.alg.gen(cname).comps))
    dim_v = v.space.dim

    def c_act(elem):
        out = v.space.zero()
        for pos, c in elem.comps.items():
            for p1, c1 in v.coaction(v.space.basis(pos)).comps.items():
                h, v0 = divmod(p1, dim_v)
                w = p.pair_basis(ci, h)
                if w:
                    out = out + v.space.basis(v0).scale(c * c1 * w)
        return out

    return {
        cname: LinMap.from_function(v.space, v.space, c_act),
        "g": v.kmod.gen_actions["g"],
        bname: v.gen_actions[bname],
    }


def check_presented_action(alg: PresentedAlgebra,
                           gen_maps: dict[str, LinMap]) -> bool:
    """All defining relations of the presented algebra act consistently."""
    space = next(iter(gen_maps.values())).domain

    def op_of_mono(mono):
        op = LinMap.identity(space)
        for gi, e in enumerate(mono):
            for _ in range(e):
                op = op.compose(gen_maps[alg.gens[gi]])
        return op

    for (hi, lo), rules in alg._swaps.items():
        lhs = gen_maps[alg.gens[hi]].compose(gen_maps[alg.gens[lo]])
        for b in range(space.dim):
            e = space.basis(b)
            rhs = space.zero()
            for coeff, mono in rules:
                rhs = rhs + op_of_mono(mono)(e).scale(coeff)
            if lhs(e) != rhs:
                return False
    for gname, (kind, bound) in zip(alg.gens, alg.powers):
        if kind == FREE:
            continue
        op = LinMap.identity(space)
        for _ in range(bound):
            op = op.compose(gen_maps[gname])
        for b in range(space.dim):
            e = space.basis(b)
            img = op(e)
            if kind == NIL and not img.is_zero():
                return False
            if kind == CYCLIC and img != e:
                return False
    return True
