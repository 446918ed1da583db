"""Presented associative algebras with ordered monomial (PBW-style) bases.

An algebra is given by an ordered list of generators, a power rule per
generator (nilpotent g^N = 0, cyclic g^N = 1, or free), and a straightening
rule for every out-of-order generator pair (hi, lo) expressing g_hi * g_lo as
a combination of ordered monomials.  The basis consists of ordered monomials
g_0^{a_0} ... g_{r-1}^{a_{r-1}} in graded-lexicographic order.

Free generators require a total-degree truncation bound; products that
overflow the bound report a clipped flag so callers can discard untrustworthy
results instead of silently using them.
"""

from __future__ import annotations

from itertools import product as iter_product

from .linspace import Element, LinMap, Space, invert_linmap
from .scalars import Scalar

NIL = "nil"
CYCLIC = "cyclic"
FREE = "free"


class PresentedAlgebra:
    """Associative algebra with an ordered monomial basis and rewriting."""

    def __init__(self, field, gen_names, power_rules, swap_rules,
                 truncation=None, name="A"):
        """
        gen_names: ordered generator names (order fixes the normal form).
        power_rules: {name: ("nil", N) | ("cyclic", N) | ("free",)}.
        swap_rules: {(hi_name, lo_name): [(Scalar, {name: exp, ...}), ...]}
            giving g_hi * g_lo for every pair appearing out of order.
        truncation: total-degree bound, required iff any generator is free.
        """
        self.field = field
        self.name = name
        self.gens = list(gen_names)
        self.ngens = len(self.gens)
        self._gen_index = {g: i for i, g in enumerate(self.gens)}
        self.powers = []
        for g in self.gens:
            rule = power_rules[g]
            kind = rule[0]
            if kind not in (NIL, CYCLIC, FREE):
                raise ValueError("unknown power rule %r" % (rule,))
            bound = rule[1] if kind != FREE else None
            self.powers.append((kind, bound))
        if truncation is None and any(k == FREE for k, _ in self.powers):
            raise ValueError("free generators require a truncation bound")
        self.truncation = truncation
        self._swaps = {}
        for (hi, lo), combo in swap_rules.items():
            hi_i, lo_i = self._gen_index[hi], self._gen_index[lo]
            if hi_i <= lo_i:
                raise ValueError("swap rule %s,%s is not out of order" % (hi, lo))
            self._swaps[(hi_i, lo_i)] = [
                (coeff, self._expvec(mono)) for coeff, mono in combo
            ]
        for hi_i in range(self.ngens):
            for lo_i in range(hi_i):
                if (hi_i, lo_i) not in self._swaps:
                    raise ValueError(
                        "missing swap rule for (%s, %s)" % (self.gens[hi_i], self.gens[lo_i]))
        self.basis = self._enumerate_basis()
        self.dim = len(self.basis)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.space = Space(field, [self.monomial_name(m) for m in self.basis])
        self.one = self.space.basis(0)
        self._letter_cache = {}
        self._sc = None

    # -- construction helpers ---------------------------------------------

    def _expvec(self, mono: dict) -> tuple:
        vec = [0] * self.ngens
        for g, e in mono.items():
            vec[self._gen_index[g]] = e
        return tuple(vec)

    def _enumerate_basis(self):
        ranges = []
        for kind, bound in self.powers:
            if kind == FREE:
                ranges.append(range(self.truncation + 1))
            else:
                ranges.append(range(bound))
        monos = []
        for vec in iter_product(*ranges):
            if self.truncation is not None and sum(vec) > self.truncation:
                continue
            monos.append(vec)
        monos.sort(key=lambda m: (sum(m), m))
        assert monos and not any(monos[0])
        return monos

    def monomial_name(self, mono: tuple) -> str:
        parts = []
        for g, e in zip(self.gens, mono):
            if e == 1:
                parts.append(g)
            elif e > 1:
                parts.append("%s^%d" % (g, e))
        return "*".join(parts) if parts else "1"

    def degree(self, i: int) -> int:
        return sum(self.basis[i])

    def gen(self, name: str) -> Element:
        vec = [0] * self.ngens
        vec[self._gen_index[name]] = 1
        return self.space.basis(self.index[tuple(vec)])

    def generators(self) -> dict:
        """Named generating elements, in declaration order."""
        return {g: self.gen(g) for g in self.gens}

    def monomial_element(self, mono: dict) -> Element:
        return self.space.basis(self.index[self._expvec(mono)])

    def from_terms(self, terms) -> Element:
        """Element from [(coeff, {gen: exp, ...}), ...]."""
        comps = {}
        for coeff, mono in terms:
            i = self.index[self._expvec(mono)]
            c = comps.get(i)
            c = coeff if c is None else c + coeff
            if c:
                comps[i] = c
            elif i in comps:
                del comps[i]
        return Element(self.space, comps)

    # -- rewriting ---------------------------------------------------------

    def _mono_times_letter(self, mono: tuple, g: int):
        """mono * generator_g as ({mono: Scalar}, clipped)."""
        key = (mono, g)
        hit = self._letter_cache.get(key)
        if hit is not None:
            return hit
        j = -1
        for idx in range(self.ngens - 1, g, -1):
            if mono[idx]:
                j = idx
                break
        if j < 0:
            # Append in order and apply the power rule.
            kind, bound = self.powers[g]
            e = mono[g] + 1
            if kind == NIL and e == bound:
                result = ({}, False)
            elif kind == FREE and sum(mono) + 1 > self.truncation:
                result = ({}, True)
            else:
                if kind == CYCLIC and e == bound:
                    e = 0
                new = mono[:g] + (e,) + mono[g + 1:]
                result = ({new: self.field.one}, False)
        else:
            head = mono[:j] + (mono[j] - 1,) + mono[j + 1:]
            acc: dict[tuple, Scalar] = {}
            clipped = False
            for coeff, rule_mono in self._swaps[(j, g)]:
                prod, c1 = self._mono_times_mono(head, rule_mono)
                clipped = clipped or c1
                for t, c in prod.items():
                    v = coeff * c
                    s = acc.get(t)
                    s = v if s is None else s + v
                    if s:
                        acc[t] = s
                    elif t in acc:
                        del acc[t]
            result = (acc, clipped)
        self._letter_cache[key] = result
        return result

    def _mono_times_mono(self, m1: tuple, m2: tuple):
        current = {m1: self.field.one}
        clipped = False
        for g in range(self.ngens):
            for _ in range(m2[g]):
                nxt: dict[tuple, Scalar] = {}
                for mono, c in current.items():
                    sub, c2 = self._mono_times_letter(mono, g)
                    clipped = clipped or c2
                    for t, d in sub.items():
                        v = c * d
                        s = nxt.get(t)
                        s = v if s is None else s + v
                        if s:
                            nxt[t] = s
                        elif t in nxt:
                            del nxt[t]
                current = nxt
                if not current:
                    return {}, clipped
        return current, clipped

    # -- products ------------------------------------------------------------

    def product(self, x: Element, y: Element):
        """(x * y, clipped); clipped means terms overflowed the truncation."""
        acc: dict[int, Scalar] = {}
        clipped = False
        basis = self.basis
        index = self.index
        for i, cx in x.comps.items():
            for j, cy in y.comps.items():
                prod, c2 = self._mono_times_mono(basis[i], basis[j])
                clipped = clipped or c2
                cxy = cx * cy
                for t, d in prod.items():
                    v = cxy * d
                    ti = index[t]
                    s = acc.get(ti)
                    s = v if s is None else s + v
                    if s:
                        acc[ti] = s
                    elif ti in acc:
                        del acc[ti]
        return Element(self.space, acc), clipped

    def mul(self, x: Element, y: Element) -> Element:
        out, clipped = self.product(x, y)
        if clipped:
            raise OverflowError("product exceeded truncation bound in %s" % self.name)
        return out

    def power(self, x: Element, k: int):
        """(x^k, clipped)."""
        acc = self.one
        clipped = False
        for _ in range(k):
            acc, c = self.product(acc, x)
            clipped = clipped or c
        return acc, clipped

    def is_finite(self) -> bool:
        return all(kind != FREE for kind, _ in self.powers)

    def structure_constants(self):
        """Full product table sc[i][j] = {m: Scalar} for finite algebras."""
        if not self.is_finite():
            raise ValueError("structure constants require a finite algebra")
        if self._sc is None:
            index = self.index
            table = []
            for m1 in self.basis:
                row = []
                for m2 in self.basis:
                    prod, clipped = self._mono_times_mono(m1, m2)
                    assert not clipped
                    row.append({index[t]: c for t, c in prod.items()})
                table.append(row)
            self._sc = table
        return self._sc

    def __repr__(self):
        return "PresentedAlgebra(%s, dim=%d)" % (self.name, self.dim)


# -- tensor products of algebras ---------------------------------------------


def tensor_algebra_product(algs, x: Element, y: Element):
    """Componentwise product in a tensor product of algebras.

    x, y live in the tensor of the algebras' spaces (stride positioning).
    Returns (Element, clipped).
    """
    dims = [a.dim for a in algs]

    def split(pos):
        out = []
        for d in reversed(dims[1:]):
            pos, r = divmod(pos, d)
            out.append(r)
        out.append(pos)
        out.reverse()
        return out

    space = x.space
    acc: dict[int, Scalar] = {}
    clipped = False
    for p1, c1 in x.comps.items():
        parts1 = split(p1)
        for p2, c2 in y.comps.items():
            parts2 = split(p2)
            # Multiply factorwise; collect distributed terms.
            terms = [(c1 * c2, 0)]
            ok = True
            for fi, alg in enumerate(algs):
                prod, c3 = alg._mono_times_mono(
                    alg.basis[parts1[fi]], alg.basis[parts2[fi]])
                clipped = clipped or c3
                if not prod:
                    ok = False
                    break
                new_terms = []
                d = alg.dim
                for coeff, pos in terms:
                    for t, ct in prod.items():
                        new_terms.append((coeff * ct, pos * d + alg.index[t]))
                terms = new_terms
            if not ok:
                continue
            for coeff, pos in terms:
                s = acc.get(pos)
                s = coeff if s is None else s + coeff
                if s:
                    acc[pos] = s
                elif pos in acc:
                    del acc[pos]
    return Element(space, acc), clipped


# -- associativity sweep -------------------------------------------------------


def _raw_mul(an, ad, bn, bd, red, deg):
    if deg == 1:
        return (an[0] * bn[0],), ad * bd
    conv = [0] * (2 * deg - 1)
    for i in range(deg):
        x = an[i]
        if x:
            for j in range(deg):
                y = bn[j]
                if y:
                    conv[i + j] += x * y
    nums = conv[:deg]
    for k in range(deg, 2 * deg - 1):
        c = conv[k]
        if c:
            row = red[k - deg]
            for i in range(deg):
                r = row[i]
                if r:
                    nums[i] += c * r
    return tuple(nums), ad * bd


def _raw_add(an, ad, bn, bd):
    if ad == bd:
        return tuple(x + y for x, y in zip(an, bn)), ad
    return tuple(x * bd + y * ad for x, y in zip(an, bn)), ad * bd


def _raw_eq(a, b):
    an, ad = a
    bn, bd = b
    if ad == bd:
        return an == bn
    return all(x * bd == y * ad for x, y in zip(an, bn))


def _raw_zero(a):
    return not any(a[0])


def check_associativity(alg: PresentedAlgebra) -> int:
    """Verify (e_i e_j) e_k == e_i (e_j e_k) exactly; returns triples checked.

    Finite algebras sweep all basis triples using the cached product table.
    Truncated algebras sweep all triples whose degrees fit inside the bound
    (larger products are clipped and carry no information).
    """
    if alg.is_finite():
        return _check_assoc_finite(alg)
    return _check_assoc_truncated(alg)


def _check_assoc_finite(alg: PresentedAlgebra) -> int:
    field = alg.field
    deg = field.degree
    red = field._red
    sc = alg.structure_constants()
    raw = [[{m: (c.nums, c.den) for m, c in cell.items()} for cell in row]
           for row in sc]
    dim = alg.dim
    checked = 0
    for i in range(dim):
        row_i = raw[i]
        for j in range(dim):
            pij = row_i[j]
            row_j = raw[j]
            for k in range(dim):
                lhs: dict = {}
                for m, (cn, cd) in pij.items():
                    for t, (dn, dd) in raw[m][k].items():
                        v = _raw_mul(cn, cd, dn, dd, red, deg)
                        cur = lhs.get(t)
                        lhs[t] = v if cur is None else _raw_add(cur[0], cur[1], v[0], v[1])
                rhs: dict = {}
                for m, (cn, cd) in row_j[k].items():
                    for t, (dn, dd) in row_i[m].items():
                        v = _raw_mul(dn, dd, cn, cd, red, deg)
                        cur = rhs.get(t)
                        rhs[t] = v if cur is None else _raw_add(cur[0], cur[1], v[0], v[1])
                for t in lhs.keys() | rhs.keys():
                    l = lhs.get(t)
                    r = rhs.get(t)
                    if l is None:
                        ok = _raw_zero(r)
                    elif r is None:
                        ok = _raw_zero(l)
                    else:
                        ok = _raw_eq(l, r)
                    if not ok:
                        raise AssertionError(
                            "associativity fails in %s at (%s, %s, %s)" % (
                                alg.name, alg.space.name(i), alg.space.name(j),
                                alg.space.name(k)))
                checked += 1
    return checked


def _check_assoc_truncated(alg: PresentedAlgebra) -> int:
    bound = alg.truncation
    checked = 0
    by_deg = [(i, alg.degree(i)) for i in range(alg.dim)]
    for i, di in by_deg:
        ei = alg.space.basis(i)
        for j, dj in by_deg:
            if di + dj > bound:
                continue
            ej = alg.space.basis(j)
            pij, c1 = alg.product(ei, ej)
            assert not c1
            for k, dk in by_deg:
                if di + dj + dk > bound:
                    continue
                ek = alg.space.basis(k)
                lhs, c2 = alg.product(pij, ek)
                pjk, c3 = alg.product(ej, ek)
                rhs, c4 = alg.product(ei, pjk)
                assert not (c2 or c3 or c4)
                if lhs != rhs:
                    raise AssertionError(
                        "associativity fails in %s at (%s, %s, %s)" % (
                            alg.name, alg.space.name(i), alg.space.name(j),
                            alg.space.name(k)))
                checked += 1
    return checked


# -- ordinary Hopf algebras ---------------------------------------------------


class HopfAlgebra(PresentedAlgebra):
    """A presented algebra with compatible coproduct, counit and antipode.

    The coproduct and counit are algebra maps and the antipode is an
    anti-algebra map, so all three are stored on generators only and extended
    (anti-)multiplicatively along the normal form.
    """

    def __init__(self, field, gen_names, power_rules, swap_rules,
                 coproducts, counits, antipodes, name="H"):
        super().__init__(field, gen_names, power_rules, swap_rules,
                         truncation=None, name=name)
        self.space2 = self.space.tensor(self.space)
        self._cop_gen = dict(coproducts)   # name -> Element of space2
        self._counit_gen = dict(counits)   # name -> Scalar
        self._anti_gen = dict(antipodes)   # name -> Element of space
        self._cop_cache = {0: self.one.tensor(self.one)}
        self._anti_cache = {0: self.one}
        self._anti_map = None
        self._anti_inv_map = None

    def tensor_elem(self, terms) -> Element:
        """Element of H (x) H from [(coeff, left_mono, right_mono), ...]."""
        comps = {}
        dim = self.dim
        for coeff, left, right in terms:
            pos = self.index[self._expvec(left)] * dim + self.index[self._expvec(right)]
            c = comps.get(pos)
            c = coeff if c is None else c + coeff
            if c:
                comps[pos] = c
            elif pos in comps:
                del comps[pos]
        return Element(self.space2, comps)

    def mul2(self, x: Element, y: Element) -> Element:
        """Componentwise product on H (x) H."""
        out, clipped = tensor_algebra_product((self, self), x, y)
        assert not clipped
        return out

    def _letters(self, i: int):
        mono = self.basis[i]
        out = []
        for g in range(self.ngens):
            out.extend([g] * mono[g])
        return out

    def coproduct(self, x: Element) -> Element:
        acc = self.space2.zero()
        for i, c in x.comps.items():
            acc = acc + self._coproduct_basis(i).scale(c)
        return acc

    def _coproduct_basis(self, i: int) -> Element:
        hit = self._cop_cache.get(i)
        if hit is not None:
            return hit
        letters = self._letters(i)
        acc = self._cop_gen[self.gens[letters[0]]]
        for g in letters[1:]:
            acc = self.mul2(acc, self._cop_gen[self.gens[g]])
        self._cop_cache[i] = acc
        return acc

    def counit(self, x: Element) -> Scalar:
        acc = self.field.zero
        for i, c in x.comps.items():
            val = self.field.one
            for g in self._letters(i):
                val = val * self._counit_gen[self.gens[g]]
            acc = acc + c * val
        return acc

    def antipode(self, x: Element) -> Element:
        acc = self.space.zero()
        for i, c in x.comps.items():
            acc = acc + self._antipode_basis(i).scale(c)
        return acc

    def _antipode_basis(self, i: int) -> Element:
        hit = self._anti_cache.get(i)
        if hit is not None:
            return hit
        letters = self._letters(i)
        acc = self.one
        for g in letters:  # anti-map: S(ab) = S(b)S(a), so prepend
            acc = self.mul(self._anti_gen[self.gens[g]], acc)
        self._anti_cache[i] = acc
        return acc

    def antipode_map(self) -> LinMap:
        if self._anti_map is None:
            self._anti_map = LinMap.from_function(self.space, self.space, self.antipode)
        return self._anti_map

    def antipode_inverse(self, x: Element) -> Element:
        if self._anti_inv_map is None:
            self._anti_inv_map = invert_linmap(self.antipode_map())
        return self._anti_inv_map(x)

    def coproduct_map(self) -> LinMap:
        return LinMap.from_function(self.space, self.space2, self.coproduct)


def check_hopf(hopf: HopfAlgebra, full_pairs: bool = False) -> dict:
    """Exact verification of the Hopf algebra axioms.

    Coassociativity, counit and antipode laws are swept over every basis
    element.  The algebra-map property of the coproduct/counit and the
    anti-map property of the antipode are swept over generator x basis pairs;
    together with associativity (checked separately on all triples) this
    implies the property for arbitrary pairs, since every basis monomial
    factors as letter * shorter monomial.  full_pairs=True sweeps all basis
    pairs instead.
    """
    H = hopf
    dim = H.dim
    one2 = H.one.tensor(H.one)
    results = {}

    ok = H.coproduct(H.one) == one2 and H.counit(H.one) == H.field.one \
        and H.antipode(H.one) == H.one
    results["unit_laws"] = ok

    ok = True
    for i in range(dim):
        e = H.space.basis(i)
        d = H.coproduct(e)
        # (Delta (x) Id) Delta == (Id (x) Delta) Delta; stride positions of
        # (H (x) H) (x) H and H (x) (H (x) H) coincide.
        lhs: dict = {}
        rhs: dict = {}
        for pos, c in d.comps.items():
            a, b = divmod(pos, dim)
            for p2, c2 in H._coproduct_basis(a).comps.items():
                q = p2 * dim + b
                s = lhs.get(q)
                s = c * c2 if s is None else s + c * c2
                if s:
                    lhs[q] = s
                elif q in lhs:
                    del lhs[q]
            for p2, c2 in H._coproduct_basis(b).comps.items():
                q = a * dim * dim + p2
                s = rhs.get(q)
                s = c * c2 if s is None else s + c * c2
                if s:
                    rhs[q] = s
                elif q in rhs:
                    del rhs[q]
        if lhs != rhs:
            ok = False
            break
    results["coassociative"] = ok

    ok = True
    for i in range(dim):
        e = H.space.basis(i)
        d = H.coproduct(e)
        left = H.space.zero()
        right = H.space.zero()
        for pos, c in d.comps.items():
            a, b = divmod(pos, dim)
            left = left + H.space.basis(b).scale(c * H.counit(H.space.basis(a)))
            right = right + H.space.basis(a).scale(c * H.counit(H.space.basis(b)))
        if left != e or right != e:
            ok = False
            break
    results["counit_laws"] = ok

    ok = True
    for i in range(dim):
        e = H.space.basis(i)
        d = H.coproduct(e)
        conv_l = H.space.zero()
        conv_r = H.space.zero()
        for pos, c in d.comps.items():
            a, b = divmod(pos, dim)
            conv_l = conv_l + H.mul(H._antipode_basis(a), H.space.basis(b)).scale(c)
            conv_r = conv_r + H.mul(H.space.basis(a), H._antipode_basis(b)).scale(c)
        target = H.one.scale(H.counit(e))
        if conv_l != target or conv_r != target:
            ok = False
            break
    results["antipode_laws"] = ok

    pairs = []
    if full_pairs:
        pairs = [(H.space.basis(i), H.space.basis(j))
                 for i in range(dim) for j in range(dim)]
    else:
        for g in H.gens:
            ge = H.gen(g)
            for j in range(dim):
                pairs.append((ge, H.space.basis(j)))

    ok_cop = ok_cou = ok_anti = True
    for a, b in pairs:
        ab = H.mul(a, b)
        if H.coproduct(ab) != H.mul2(H.coproduct(a), H.coproduct(b)):
            ok_cop = False
        if H.counit(ab) != H.counit(a) * H.counit(b):
            ok_cou = False
        if H.antipode(ab) != H.mul(H.antipode(b), H.antipode(a)):
            ok_anti = False
        if not (ok_cop and ok_cou and ok_anti):
            break
    results["coproduct_multiplicative"] = ok_cop
    results["counit_multiplicative"] = ok_cou
    results["antipode_antimultiplicative"] = ok_anti

    try:
        H.antipode_inverse(H.one)
        results["antipode_bijective"] = True
    except ValueError:
        results["antipode_bijective"] = False
    return results
