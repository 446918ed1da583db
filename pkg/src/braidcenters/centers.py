"""Braided centralizers, centers, and the center of a module algebra.

The membership condition solved here is exact linear algebra: a candidate c
lies in the left centralizer of a test set S when

    c * t  ==  m(Psi(c (x) t))        for every t in S,

where Psi is the braiding of the ambient category (the background braiding
for a plain algebra in Mod_K, the crossed-module braiding for an algebra
carrying an action and coaction).  The right variant uses the inverse
braiding.  The left center is the left centralizer of the whole algebra; by
linearity it suffices to test against a generating set, and the solver then
re-verifies the computed basis against every ambient basis vector, so a
generating set that fails to see all constraints is reported, never silently
trusted.

Truncated ambients impose a boundary discipline.  With truncation bound D
and test elements of degree at most d, the condition is only meaningful for
candidates of degree at most the window W = D - d (beyond it the products
clip).  The result therefore carries a certified window and a safe degree:
the window minus the largest generator degree.  Within the safe degree the
reported basis is the entire center restricted to those degrees; outside it
no claim is made.
"""

from __future__ import annotations

from dataclasses import dataclass, field as _field
from typing import Callable, Optional

from .braid import KModule, braid, tensor_module
from .braided_hopf import BraidedHopf
from .constructions import (
    ModuleAlgebra,
    OppositeBraidedAlgebra,
    YDAlgebra,
    phi_maps,
    smash_product,
)
from .linspace import (
    Element,
    LinMap,
    Space,
    canonical_basis,
    in_span,
    invert_linmap,
    kernel_from_rows,
    refine_kernel,
    solve_linear,
    spans_equal,
)
from .scalars import Scalar, q_integer
from .yd import YDModule, yd_braid, yd_braid_inverse


class CenterError(RuntimeError):
    """A center computation could not be completed or certified."""


def element_degree(alg, elem: Element) -> int:
    """Largest basis degree in the support of ``elem`` (0 for the zero element)."""
    return max((alg.degree(p) for p in elem.comps), default=0)


def _pair_product(alg, i: int, j: int):
    """Product of the i-th and j-th basis vectors, via the pair cache if any."""
    cached = getattr(alg, "pair_product", None)
    if cached is not None:
        return cached(i, j)
    return alg.product(alg.space.basis(i), alg.space.basis(j))


def _mul_tensor(alg, elem2: Element):
    """Multiply out an element of A (x) A; returns (product, clipped)."""
    acc: dict[int, Scalar] = {}
    clipped = False
    dim = alg.dim
    for pos, c in elem2.comps.items():
        i, j = divmod(pos, dim)
        prod, cl = _pair_product(alg, i, j)
        clipped = clipped or cl
        for t, d in prod.comps.items():
            v = c * d
            s = acc.get(t)
            s = v if s is None else s + v
            if s:
                acc[t] = s
            elif t in acc:
                del acc[t]
    return Element(alg.space, acc), clipped


@dataclass
class CenterResult:
    """Canonical description of a computed centralizer or center.

    ``basis`` is the reduced-echelon basis of the solution space over the
    candidate window; ``generators`` is a minimal set of basis elements
    that, together with the unit, generate the reported basis under
    unclipped multiplication; ``safe_degree`` is the degree bound within
    which the answer is certified complete (None when the ambient carries
    no truncation and the result is exact).
    """

    ambient: object
    basis: list
    safe_degree: Optional[int]
    algebra_closed: bool
    commutative: bool
    generators: list
    tests: list = _field(default_factory=list)
    side: str = "left"
    window: Optional[int] = None
    kmod: Optional[KModule] = None
    center_yd: Optional[YDModule] = None
    cond_psi: Optional[Callable] = _field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, elem: Element) -> bool:
        return in_span(self.basis, elem)

    def restricted_basis(self, degree: int) -> list:
        """Canonical basis of the part of the span supported in degrees <= degree."""
        return restrict_span(self.ambient, self.basis, degree)

    def __repr__(self):
        return ("CenterResult(dim=%d, safe_degree=%r, closed=%r, commutative=%r, "
                "generators=%d)" % (self.dim, self.safe_degree,
                                    self.algebra_closed, self.commutative,
                                    len(self.generators)))


def restrict_span(alg, basis: list, degree: int) -> list:
    """Canonical basis of the part of span(basis) supported in degrees <= degree."""
    space = alg.space

    def high_part(v: Element) -> Element:
        return Element(space, {p: c for p, c in v.comps.items()
                               if alg.degree(p) > degree})

    return refine_kernel(basis, high_part)


def _membership_defect(alg, psi: Callable, c: Element, t: Element) -> Element:
    """c*t - m(Psi(c (x) t)); raises CenterError if either product clips."""
    direct, cl1 = alg.product(c, t)
    braided, cl2 = _mul_tensor(alg, psi(c.tensor(t)))
    if cl1 or cl2:
        raise CenterError(
            "constraint product clipped inside the candidate window of %s"
            % alg.name)
    return direct - braided


def centralizer(alg, tests, psi, side: str = "left", *,
                psi_inverse: Optional[Callable] = None,
                kmod: Optional[KModule] = None) -> CenterResult:
    """Left or right centralizer of the given test elements.

    ``psi`` is the braiding on A (x) A, given either as a LinMap or as a
    plain callable Element -> Element (preferred for large ambients, where
    materializing the braiding is wasteful).  ``side='left'`` solves
    c*t == m(Psi(c (x) t)); ``side='right'`` solves with the inverse
    braiding, supplied via ``psi_inverse`` or obtained by inverting a
    LinMap ``psi``.
    """
    tests = [t for t in tests]
    if not tests:
        raise ValueError("centralizer needs a nonempty test set")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right', got %r" % side)
    dim2 = alg.dim * alg.dim
    if isinstance(psi, LinMap):
        if psi.domain.dim != dim2 or psi.codomain.dim != dim2:
            raise ValueError(
                "braiding acts on a %d-dimensional space, ambient needs %d"
                % (psi.domain.dim, dim2))
    if isinstance(psi_inverse, LinMap):
        if psi_inverse.domain.dim != dim2 or psi_inverse.codomain.dim != dim2:
            raise ValueError(
                "inverse braiding acts on a %d-dimensional space, ambient needs %d"
                % (psi_inverse.domain.dim, dim2))
    for t in tests:
        if t.space.dim != alg.dim:
            raise ValueError("test element lives in a %d-dimensional space, "
                             "ambient has dimension %d" % (t.space.dim, alg.dim))

    if side == "right":
        if psi_inverse is None:
            if not isinstance(psi, LinMap):
                raise ValueError("side='right' needs psi_inverse or a LinMap psi")
            psi_inverse = invert_linmap(psi)
        cond_psi, other_psi = psi_inverse, psi
    else:
        cond_psi, other_psi = psi, psi_inverse

    if alg.truncation is None:
        window = None
        candidates = [alg.space.basis(i) for i in range(alg.dim)]
    else:
        d = max(element_degree(alg, t) for t in tests)
        window = alg.truncation - d
        if window < 0:
            raise CenterError(
                "truncation %d is too small for tests of degree %d: "
                "no candidate degree is certifiable" % (alg.truncation, d))
        candidates = [alg.space.basis(i) for i in range(alg.dim)
                      if alg.degree(i) <= window]

    basis = candidates
    for t in tests:
        if not basis:
            break
        basis = refine_kernel(
            basis, lambda c, t=t: _membership_defect(alg, cond_psi, c, t))

    generators = _extract_generators(alg, basis)
    gen_degree = max((element_degree(alg, g) for g in generators), default=0)
    safe = None if window is None else window - gen_degree
    closed = _closure_holds(alg, basis, window)
    commutative = _braided_commutes(alg, basis, cond_psi, other_psi)
    return CenterResult(ambient=alg, basis=basis, safe_degree=safe,
                        algebra_closed=closed, commutative=commutative,
                        generators=generators, tests=tests, side=side,
                        window=window, kmod=kmod, cond_psi=cond_psi)


def _close_under_products(alg, seed: list, bound: Optional[int] = None) -> list:
    """Canonical basis of the smallest unclipped-product-closed span of seed."""
    reached = canonical_basis(seed)
    while True:
        grown = list(reached)
        for a in reached:
            for b in reached:
                prod, clipped = alg.product(a, b)
                if clipped or prod.is_zero():
                    continue
                grown.append(prod)
        grown = canonical_basis(grown)
        if len(grown) == len(reached):
            return reached
        reached = grown
        if bound is not None and len(reached) > bound:
            return reached


def _extract_generators(alg, basis: list) -> list:
    """Greedy minimal generating elements of span(basis) over the unit.

    Basis vectors are consumed in order of (degree, leading position); each
    one not yet reachable from the unit and previous picks under unclipped
    multiplication becomes a generator.
    """
    if not basis:
        return []
    order = sorted(basis, key=lambda v: (element_degree(alg, v), min(v.comps)))
    generators: list = []
    reached = canonical_basis([alg.one])
    for v in order:
        if in_span(reached, v):
            continue
        generators.append(v)
        reached = _close_under_products(alg, reached + [v], bound=alg.dim)
    return generators


def _closure_holds(alg, basis: list, window: Optional[int]) -> bool:
    """Whether every product of basis elements that stays inside the candidate
    window also stays in the span.  Products clipping the truncation bound or
    landing beyond the window carry no certifiable membership information and
    are skipped."""
    for a in basis:
        for b in basis:
            prod, clipped = alg.product(a, b)
            if clipped:
                continue
            if window is not None and element_degree(alg, prod) > window:
                continue
            if not in_span(basis, prod):
                return False
    return True


def _braided_commutes(alg, basis: list, psi: Callable,
                      psi_inverse: Optional[Callable]) -> bool:
    """c*d == m(Psi(c (x) d)) (and with the inverse braiding when given) on
    every basis pair whose products stay under the truncation bound."""
    flips = [psi] if psi_inverse is None else [psi, psi_inverse]
    for a in basis:
        for b in basis:
            direct, cl = alg.product(a, b)
            if cl:
                continue
            for flip in flips:
                braided, cl2 = _mul_tensor(alg, flip(a.tensor(b)))
                if cl2:
                    continue
                if direct != braided:
                    return False
    return True


def verify_on_tests(result: CenterResult, tests, psi: Optional[Callable] = None) -> int:
    """Re-check every basis element of ``result`` against extra test elements.

    Pairs whose constraint products would clip are skipped (they carry no
    certifiable information).  Raises CenterError with a witness on the
    first violated pair; returns the number of pairs actually checked.
    """
    alg = result.ambient
    if psi is None:
        psi = result.cond_psi
    if psi is None:
        raise ValueError("verify_on_tests needs the braiding that defined the result")
    trunc = alg.truncation
    checked = 0
    for c in result.basis:
        cdeg = element_degree(alg, c)
        for t in tests:
            if trunc is not None and cdeg + element_degree(alg, t) > trunc:
                continue
            defect = _membership_defect(alg, psi, c, t)
            checked += 1
            if not defect.is_zero():
                raise CenterError(
                    "generating tests were insufficient: %r fails against %r"
                    % (c, t))
    return checked


def left_center(A, kmod: Optional[KModule] = None) -> CenterResult:
    """The left center of an algebra, certified against the full basis.

    Accepts either an algebra with a crossed-module structure (braided with
    the action/coaction braiding) or a plain algebra in Mod_K together with
    its K-module structure (braided with the background braiding).  The
    solve runs against the algebra's generators; the result is then
    re-verified against every ambient basis vector, so the generating set
    can never silently miss a constraint.
    """
    if isinstance(A, YDAlgebra):
        alg = A.alg
        yd = A.yd
        psi = lambda e: yd_braid(yd, yd, e)
        psi_inv = lambda e: yd_braid_inverse(yd, yd, e)
        weight_mod = A.kmod if kmod is None else kmod
    else:
        if kmod is None:
            raise ValueError(
                "a plain algebra needs its K-module structure to be braided")
        alg = A
        psi = lambda e: braid(kmod, kmod, e)
        psi_inv = lambda e: braid(kmod, kmod, e, inverse=True)
        weight_mod = kmod
    gens = alg.generators()
    if not gens:
        raise ValueError("algebra %s has no generators to test against" % alg.name)
    result = centralizer(alg, list(gens.values()), psi,
                         psi_inverse=psi_inv, kmod=weight_mod)
    verify_on_tests(result, [alg.space.basis(i) for i in range(alg.dim)])
    return result


def b_center(A: ModuleAlgebra, H: BraidedHopf, D: int) -> CenterResult:
    """The center of the module algebra A over H at truncation bound D.

    Computes the left center of the induced algebra on H (x) A with its
    action/coaction braiding, restricts the crossed-module structure to the
    computed subspace (raising CenterError if the subspace is not
    invariant), and certifies braided commutativity with both the braiding
    and its inverse.
    """
    from .constructions import rb_algebra

    if A.alg.truncation != D:
        raise ValueError(
            "module algebra is truncated at %r, expected %d; rebuild the "
            "scenario at the requested bound" % (A.alg.truncation, D))
    rb = rb_algebra(A, H)
    result = left_center(rb)
    result.center_yd = restrict_yd(rb.yd, result.basis, name="Z(%s)" % rb.name)
    return result


def restrict_yd(yd: YDModule, basis: list, name: str = "W") -> YDModule:
    """The crossed-module structure restricted to span(basis), in the
    coordinates of the given basis.  Raises CenterError if the span is not
    invariant under the K-action, the H-action, or the coaction."""
    field = yd.space.field
    coords = Space(field, ["c%d" % k for k in range(len(basis))])

    def restrict_map(f, what: str) -> LinMap:
        cols: dict[int, dict[int, Scalar]] = {}
        for k, b in enumerate(basis):
            sol = solve_linear(basis, f(b))
            if sol is None:
                raise CenterError(
                    "computed subspace is not invariant under the %s" % what)
            col = {i: c for i, c in sol.items() if c}
            if col:
                cols[k] = col
        return LinMap(coords, coords, cols)

    kacts = {g: restrict_map(f, "K-action of %s" % g)
             for g, f in yd.kmod.gen_actions.items()}
    sub_kmod = KModule(yd.kmod.qt, coords, kacts, name=name)
    hacts = {g: restrict_map(f, "action of %s" % g)
             for g, f in yd.gen_actions.items()}

    vdim = yd.space.dim
    hspace = yd.hopf.alg.space
    nsub = len(basis)
    ccols: dict[int, dict[int, Scalar]] = {}
    for k, b in enumerate(basis):
        img = yd.coaction(b)
        per_h: dict[int, dict[int, Scalar]] = {}
        for pos, c in img.comps.items():
            h, v = divmod(pos, vdim)
            per_h.setdefault(h, {})[v] = c
        col: dict[int, Scalar] = {}
        for h, comp in per_h.items():
            sol = solve_linear(basis, Element(yd.space, comp))
            if sol is None:
                raise CenterError(
                    "computed subspace is not invariant under the coaction")
            for i, c in sol.items():
                if c:
                    col[h * nsub + i] = c
        if col:
            ccols[k] = col
    coaction = LinMap(coords, hspace.tensor(coords), ccols)
    return YDModule(yd.hopf, sub_kmod, hacts, coaction, name=name)


def embed_in_basis(basis: list, coords_elem: Element) -> Element:
    """Send an element written in restricted coordinates back to the ambient."""
    acc = basis[0].space.zero() if basis else None
    if acc is None:
        raise ValueError("empty basis")
    for k, c in coords_elem.comps.items():
        acc = acc + basis[k].scale(c)
    return acc


# -- independent recurrence oracle -----------------------------------------------


def recurrence_oracle(n: int, q: Scalar, gamma: Scalar, D: int):
    """Independent solution table for the nilpotent-line center conditions.

    For the algebra on H (x) k[u] with H = k[x]/(x^n), g.u = q^2 u and
    x.u = gamma, centrality of sum lambda_{i,j} x^i u^j against the two
    generators reduces to the two-term recurrence

        (q^(2(j-1)) - 1) lambda_{i,j-1}
            + gamma q^(2j) [i+1]_{q^2} lambda_{i,j}  |->  shifted to (i+1, j),

    i.e. row (i, j):  (q^(2(j-1)) - 1) L[i, j-1] + gamma q^(2j) [i+1]_{q^2}
    L[i+1, j] = 0, imposed for 0 <= i < n and 0 <= j <= W + 1 where
    W = D - 1 is the candidate window; references outside the window are
    zero, exactly as the truncated solver sees them.  Returns the canonical
    kernel as a list of {(i, j): Scalar} tables.
    """
    field = q.field
    if isinstance(gamma, int):
        gamma = field.from_int(gamma)
    W = D - 1
    if W < 0:
        return []
    width = W + 1

    def flat(i: int, j: int) -> int:
        return i * width + j

    qq = q * q
    rows = []
    for i in range(n):
        for j in range(W + 2):
            row: dict[int, Scalar] = {}
            if j >= 1:
                c = qq ** (j - 1) - field.one
                if c:
                    row[flat(i, j - 1)] = c
            if i + 1 <= n - 1 and j <= W:
                c = gamma * q ** (2 * j) * q_integer(i + 1, qq)
                if c:
                    row[flat(i + 1, j)] = c
            if row:
                rows.append(row)
    vecs = kernel_from_rows(rows, n * width, field)
    return [{divmod(k, width): c for k, c in vec.items()} for vec in vecs]


def oracle_elements(scn, tables) -> list:
    """Realize recurrence-oracle tables as elements of the scenario's
    induced algebra on H (x) k[u]."""
    alg = scn.rb.alg
    adim = scn.A.alg.dim
    out = []
    for table in tables:
        comps: dict[int, Scalar] = {}
        for (i, j), c in table.items():
            comps[i * adim + j] = c
        out.append(Element(alg.space, comps))
    return out


# -- cross-check through the smash product ----------------------------------------


def cross_check_smash(A: ModuleAlgebra, H: BraidedHopf, D: int) -> dict:
    """Two independent routes to the center of a module algebra, compared.

    Route 1: the left center of the induced algebra on H (x) A with the
    action/coaction braiding (``b_center``).

    Route 2: the left centralizer of the embedded copy of A inside the
    smash product A >< H, braided with the *background* braiding of Mod_K,
    then carried over by the inverse transport map phi^{-1}: A (x) H ->
    H (x) A.

    The report records whether the two subspaces agree and whether the
    multiplication carries over: phi maps products in the induced algebra
    to products in the background-opposite smash product (m compose
    Psi^{-1}).  Both routes are full-basis verified.
    """
    center = b_center(A, H, D)
    smash = smash_product(A, H)
    skmod = tensor_module(A.kmod, H.mod)
    psi = lambda e: braid(skmod, skmod, e)
    psi_inv = lambda e: braid(skmod, skmod, e, inverse=True)

    hone = H.alg.one
    tests = [e.tensor(hone) for e in A.alg.generators().values()]
    cent = centralizer(smash, tests, psi, psi_inverse=psi_inv, kmod=skmod)
    embedded = [A.space.basis(t).tensor(hone) for t in range(A.alg.dim)]
    verify_on_tests(cent, embedded)

    phi, phi_inv = phi_maps(A, H)
    image = canonical_basis([phi_inv(c) for c in cent.basis])
    report = {
        "centralizer_dim": cent.dim,
        "center_dim": center.dim,
        "subspaces_equal": spans_equal(image, center.basis),
    }

    opposite = OppositeBraidedAlgebra(smash, skmod)
    rb_alg = center.ambient
    ok = True
    pairs = 0
    witness = None
    for zi in center.basis:
        for zj in center.basis:
            prod, cl = rb_alg.product(zi, zj)
            if cl:
                continue
            lhs = phi(prod)
            rhs, cl2 = opposite.product(phi(zi), phi(zj))
            if cl2:
                continue
            pairs += 1
            if lhs != rhs:
                ok = False
                witness = (zi, zj)
                break
        if witness is not None:
            break
    report["products_match"] = ok
    report["pairs_checked"] = pairs
    if witness is not None:
        report["witness"] = "%r , %r" % witness
    report["agree"] = bool(report["subspaces_equal"] and ok and pairs > 0)
    report["center"] = center
    report["centralizer"] = cent
    return report


# -- comparison of computed centers -----------------------------------------------


def _diagonal_weights(result: CenterResult):
    """Per-position weight labels from the invertibly-diagonal K-generators.

    Only generators acting diagonally with nonzero eigenvalues contribute
    (nilpotent or otherwise singular actions carry no weight grading); the
    label of position p is the tuple of eigenvalue reprs at p, over
    contributing generator names in sorted order.  Without any such
    generator all positions share the empty label.
    """
    amb_dim = result.ambient.dim
    if result.kmod is None:
        return {p: () for p in range(amb_dim)}
    diagonals = []
    for name in sorted(result.kmod.gen_actions):
        f = result.kmod.gen_actions[name]
        entries = {}
        diagonal = True
        for j in range(amb_dim):
            col = f.cols.get(j, {})
            if any(i != j for i in col) or not col.get(j):
                diagonal = False
                break
            entries[j] = repr(col[j])
        if diagonal:
            diagonals.append(entries)
    return {p: tuple(d[p] for d in diagonals) for p in range(amb_dim)}


def center_signature(result: CenterResult, cutoff: Optional[int] = None):
    """(degree, weight) dimension profile of the result within the cutoff.

    For each degree level 0..cutoff the restricted span is split into
    weight-homogeneous parts; the signature maps (degree, weight-label) to
    the dimension of the part.  A part that does not split cleanly is
    recorded under the label '<mixed>'.  Signatures are comparable across
    ambients of equal scalar order (labels are canonical scalar reprs).
    """
    if cutoff is None:
        cutoff = result.safe_degree
    if cutoff is None:
        cutoff = max((result.ambient.degree(i)
                      for i in range(result.ambient.dim)), default=0)
    weights = _diagonal_weights(result)
    space = result.ambient.space
    sig: dict = {}
    for d in range(cutoff + 1):
        level = result.restricted_basis(d)
        if not level:
            continue
        seen = 0
        labels = sorted({weights[p] for v in level for p in v.comps})
        for w in labels:
            def off_weight(v: Element, w=w) -> Element:
                return Element(space, {p: c for p, c in v.comps.items()
                                       if weights[p] != w})
            part = len(refine_kernel(level, off_weight))
            if part:
                sig[(d, w)] = part
                seen += part
        if seen != len(level):
            sig[(d, "<mixed>")] = len(level) - seen
    return sig


def compare_centers(c1: CenterResult, c2: CenterResult) -> str:
    """Compare two computed centers within their common certified window.

    Returns one of:

    * ``'distinguishable'`` — the (degree, weight) dimension signatures
      differ, so no graded isomorphism matching the K-weights can exist;
    * ``'isomorphic-as-graded'`` — the canonical restricted bases match up
      degree-for-degree and weight-for-weight, the unit has the same
      coordinates, and the multiplication tables agree entry by entry;
    * ``'inconclusive'`` — neither certificate could be produced.
    """
    safes = [s for s in (c1.safe_degree, c2.safe_degree) if s is not None]
    cutoff = min(safes) if safes else None
    s1 = center_signature(c1, cutoff)
    s2 = center_signature(c2, cutoff)
    if s1 != s2:
        return "distinguishable"

    if cutoff is None:
        b1, b2 = c1.basis, c2.basis
    else:
        b1 = c1.restricted_basis(cutoff)
        b2 = c2.restricted_basis(cutoff)
    if len(b1) != len(b2):
        return "distinguishable"
    if not b1:
        return "isomorphic-as-graded"

    w1 = _diagonal_weights(c1)
    w2 = _diagonal_weights(c2)
    deg1 = [element_degree(c1.ambient, v) for v in b1]
    deg2 = [element_degree(c2.ambient, v) for v in b2]
    for k in range(len(b1)):
        lab1 = (deg1[k], sorted({w1[p] for p in b1[k].comps}))
        lab2 = (deg2[k], sorted({w2[p] for p in b2[k].comps}))
        if lab1 != lab2:
            return "inconclusive"

    def coords_repr(basis, target):
        sol = solve_linear(basis, target)
        if sol is None:
            return None
        return {k: repr(c) for k, c in sol.items() if c}

    u1 = coords_repr(b1, c1.ambient.one)
    u2 = coords_repr(b2, c2.ambient.one)
    if u1 is None or u2 is None or u1 != u2:
        return "inconclusive"

    bound = cutoff if cutoff is not None else None
    for k in range(len(b1)):
        for l in range(len(b1)):
            if bound is not None and deg1[k] + deg1[l] > bound:
                continue
            p1, cl1 = c1.ambient.product(b1[k], b1[l])
            p2, cl2 = c2.ambient.product(b2[k], b2[l])
            if cl1 or cl2:
                if cl1 != cl2:
                    return "inconclusive"
                continue
            t1 = coords_repr(b1, p1)
            t2 = coords_repr(b2, p2)
            if t1 is None or t2 is None or t1 != t2:
                return "inconclusive"
    return "isomorphic-as-graded"
