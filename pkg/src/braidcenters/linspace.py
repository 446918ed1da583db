"""Sparse exact linear algebra over a cyclotomic field.

Spaces carry named bases; elements are sparse coordinate dictionaries; linear
maps are sparse column dictionaries.  Tensor products use stride positioning
(position of e_i (x) e_j in V (x) W is i * dim W + j) and never materialize
dense data, so triple tensors of dimension in the millions stay cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .scalars import CycField, Scalar


class Space:
    """A finite-dimensional vector space with a named basis."""

    def __init__(self, field: CycField, names: list[str], _factors=None):
        self.field = field
        self.dim = len(names) if _factors is None else _factors[0].dim * _factors[1].dim
        self._names = names if _factors is None else None
        self.factors = _factors

    @staticmethod
    def tensor_pair(left: "Space", right: "Space") -> "Space":
        if left.field is not right.field:
            raise ValueError("tensor factors over different fields")
        return Space(left.field, [], _factors=(left, right))

    def tensor(self, other: "Space") -> "Space":
        return Space.tensor_pair(self, other)

    def name(self, i: int) -> str:
        if self.factors is None:
            return self._names[i]
        left, right = self.factors
        a, b = divmod(i, right.dim)
        return "%s(x)%s" % (left.name(a), right.name(b))

    def zero(self) -> "Element":
        return Element(self, {})

    def basis(self, i: int) -> "Element":
        if not 0 <= i < self.dim:
            raise IndexError("basis index %d out of range" % i)
        return Element(self, {i: self.field.one})

    def element(self, comps: dict[int, Scalar]) -> "Element":
        return Element(self, {i: c for i, c in comps.items() if c})

    def __repr__(self):
        return "Space(dim=%d)" % self.dim


class Element:
    """A sparse vector; zero coordinates are never stored."""

    __slots__ = ("space", "comps")

    def __init__(self, space: Space, comps: dict[int, Scalar]):
        self.space = space
        self.comps = comps

    def is_zero(self) -> bool:
        return not self.comps

    def __bool__(self):
        return bool(self.comps)

    def __add__(self, other: "Element") -> "Element":
        if other.space.dim != self.space.dim:
            raise ValueError("adding elements of different spaces")
        comps = dict(self.comps)
        for i, c in other.comps.items():
            s = comps.get(i)
            if s is None:
                comps[i] = c
            else:
                s = s + c
                if s:
                    comps[i] = s
                else:
                    del comps[i]
        return Element(self.space, comps)

    def __neg__(self):
        return Element(self.space, {i: -c for i, c in self.comps.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        if isinstance(c, (int, Fraction)):
            c = self.space.field.from_fraction(Fraction(c))
        if not c:
            return Element(self.space, {})
        return Element(self.space, {i: c * v for i, v in self.comps.items()})

    def tensor(self, other: "Element") -> "Element":
        space = Space.tensor_pair(self.space, other.space)
        stride = other.space.dim
        comps = {}
        for i, a in self.comps.items():
            base = i * stride
            for j, b in other.comps.items():
                comps[base + j] = a * b
        return Element(space, comps)

    def coeff(self, i: int) -> Scalar:
        return self.comps.get(i, self.space.field.zero)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.space.dim == other.space.dim and self.comps == other.comps

    def __hash__(self):
        return hash(frozenset(self.comps.items()))

    def __repr__(self):
        if not self.comps:
            return "0"
        parts = []
        for i in sorted(self.comps):
            parts.append("(%r)*%s" % (self.comps[i], self.space.name(i)))
        return " + ".join(parts)


def tensor_elements(*elems: Element) -> Element:
    out = elems[0]
    for e in elems[1:]:
        out = out.tensor(e)
    return out


class LinMap:
    """A linear map stored as sparse columns: cols[j][i] = entry (i, j)."""

    def __init__(self, domain: Space, codomain: Space, cols: dict[int, dict[int, Scalar]]):
        self.domain = domain
        self.codomain = codomain
        self.cols = cols

    @staticmethod
    def from_function(domain: Space, codomain: Space, fn: Callable[[Element], Element]) -> "LinMap":
        cols = {}
        for j in range(domain.dim):
            image = fn(domain.basis(j))
            if image.comps:
                cols[j] = dict(image.comps)
        return LinMap(domain, codomain, cols)

    @staticmethod
    def identity(space: Space) -> "LinMap":
        one = space.field.one
        return LinMap(space, space, {j: {j: one} for j in range(space.dim)})

    def apply(self, elem: Element) -> Element:
        out: dict[int, Scalar] = {}
        for j, c in elem.comps.items():
            col = self.cols.get(j)
            if not col:
                continue
            for i, a in col.items():
                v = a * c
                s = out.get(i)
                if s is None:
                    if v:
                        out[i] = v
                else:
                    s = s + v
                    if s:
                        out[i] = s
                    else:
                        del out[i]
        return Element(self.codomain, out)

    def __call__(self, elem: Element) -> Element:
        return self.apply(elem)

    def compose(self, inner: "LinMap") -> "LinMap":
        """self o inner."""
        cols = {}
        for j, col in inner.cols.items():
            image = self.apply(Element(self.domain, col))
            if image.comps:
                cols[j] = image.comps
        return LinMap(inner.domain, self.codomain, cols)

    def __add__(self, other: "LinMap") -> "LinMap":
        cols = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            mine = cols.setdefault(j, {})
            for i, c in col.items():
                s = mine.get(i)
                s = c if s is None else s + c
                if s:
                    mine[i] = s
                elif i in mine:
                    del mine[i]
            if not mine:
                del cols[j]
        return LinMap(self.domain, self.codomain, cols)

    def __neg__(self) -> "LinMap":
        return LinMap(self.domain, self.codomain,
                      {j: {i: -c for i, c in col.items()} for j, col in self.cols.items()})

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def tensor(self, other: "LinMap") -> "LinMap":
        domain = Space.tensor_pair(self.domain, other.domain)
        codomain = Space.tensor_pair(self.codomain, other.codomain)
        dstride = other.domain.dim
        cstride = other.codomain.dim
        cols = {}
        for j1, col1 in self.cols.items():
            for j2, col2 in other.cols.items():
                col = {}
                for i1, a in col1.items():
                    for i2, b in col2.items():
                        col[i1 * cstride + i2] = a * b
                cols[j1 * dstride + j2] = col
        return LinMap(domain, codomain, cols)

    def rank(self) -> int:
        rows = _transpose(self.cols)
        pivots, _ = rref_rows(list(rows.values()), self.codomain.field)
        return len(pivots)

    def kernel(self) -> list[Element]:
        rows = list(_transpose(self.cols).values())
        vecs = kernel_from_rows(rows, self.domain.dim, self.domain.field)
        return [Element(self.domain, v) for v in vecs]

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.cols == other.cols

    def __repr__(self):
        return "LinMap(%d -> %d, %d nonzero cols)" % (
            self.domain.dim, self.codomain.dim, len(self.cols))


def tensor_maps(*maps: LinMap) -> LinMap:
    out = maps[0]
    for f in maps[1:]:
        out = out.tensor(f)
    return out


def _transpose(cols: dict[int, dict[int, Scalar]]) -> dict[int, dict[int, Scalar]]:
    rows: dict[int, dict[int, Scalar]] = {}
    for j, col in cols.items():
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    return rows


# -- exact Gaussian elimination --------------------------------------------


def rref_rows(rows: Iterable[dict[int, Scalar]], field: CycField):
    """Reduced row echelon form of sparse rows.

    Returns (pivots, reduced_rows) with rows ordered by pivot column, each
    pivot entry 1 and its column cleared elsewhere.  Input rows are not
    mutated.
    """
    done: dict[int, dict[int, Scalar]] = {}  # pivot column -> normalized row
    for row in rows:
        row = dict(row)
        while row:
            hit_col = None
            for j in sorted(row):
                if j in done:
                    hit_col = j
                    break
            if hit_col is None:
                break
            hit = done[hit_col]
            c = row.pop(hit_col)
            for j, v in hit.items():
                if j == hit_col:
                    continue
                s = row.get(j)
                s = -c * v if s is None else s - c * v
                if s:
                    row[j] = s
                elif j in row:
                    del row[j]
        if not row:
            continue
        lead = min(row)
        inv = row[lead].inverse()
        row = {j: inv * v for j, v in row.items()}
        # Clear the new pivot column from existing rows.
        for other in done.values():
            c = other.get(lead)
            if c is None:
                continue
            del other[lead]
            for j, v in row.items():
                if j == lead:
                    continue
                s = other.get(j)
                s = -c * v if s is None else s - c * v
                if s:
                    other[j] = s
                elif j in other:
                    del other[j]
        done[lead] = row
    pivots = sorted(done)
    return pivots, [done[p] for p in pivots]


def kernel_from_rows(rows, ncols: int, field: CycField):
    """Canonical kernel basis of the matrix whose rows are given.

    Each kernel vector has coefficient 1 at one free column and is supported
    on that column and the pivot columns; vectors are ordered by free column.
    """
    pivots, red = rref_rows(rows, field)
    pivot_set = set(pivots)
    one = field.one
    out = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        vec = {j: one}
        for p, row in zip(pivots, red):
            c = row.get(j)
            if c:
                vec[p] = -c
        out.append(vec)
    return out


def canonical_basis(elements: list[Element]) -> list[Element]:
    """A canonical (RREF) basis of the span of the given elements."""
    if not elements:
        return []
    space = elements[0].space
    _, red = rref_rows([e.comps for e in elements], space.field)
    return [Element(space, r) for r in red]


def refine_kernel(basis: list[Element], fn: Callable[[Element], Element]) -> list[Element]:
    """The sub-basis of span(basis) annihilated by the linear function fn."""
    if not basis:
        return []
    space = basis[0].space
    field = space.field
    images = [fn(e) for e in basis]
    # Solve for coefficient vectors c with sum c_k images[k] = 0.
    rows: dict[int, dict[int, Scalar]] = {}
    for k, img in enumerate(images):
        for i, c in img.comps.items():
            rows.setdefault(i, {})[k] = c
    vecs = kernel_from_rows(list(rows.values()), len(basis), field)
    out = []
    for vec in vecs:
        acc = space.zero()
        for k, c in vec.items():
            acc = acc + basis[k].scale(c)
        out.append(acc)
    return canonical_basis(out)


def solve_linear(columns: list[Element], target: Element):
    """Solve sum x_k columns[k] = target; returns {k: Scalar} or None.

    When the system is underdetermined an arbitrary solution (from the RREF
    parametrization with free variables set to zero) is returned.
    """
    if target.space.dim and not columns:
        return {} if target.is_zero() else None
    field = target.space.field
    n = len(columns)
    rows: dict[int, dict[int, Scalar]] = {}
    for k, col in enumerate(columns):
        for i, c in col.comps.items():
            rows.setdefault(i, {})[k] = c
    for i, c in target.comps.items():
        rows.setdefault(i, {})[n] = -c
    vecs = kernel_from_rows(list(rows.values()), n + 1, field)
    for vec in vecs:
        c = vec.get(n)
        if c:
            inv = c.inverse()
            return {k: inv * v for k, v in vec.items() if k != n and v}
    return None


def invert_linmap(f: LinMap) -> LinMap:
    """Exact inverse of a bijective map between spaces of equal dimension."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise ValueError("only square maps can be inverted")
    # RREF of [M | I]; pivots must be exactly the first n columns.
    rows = _transpose(f.cols)
    aug = []
    one = f.domain.field.one
    for i in range(n):
        row = dict(rows.get(i, {}))
        row[n + i] = one
        aug.append(row)
    pivots, red = rref_rows(aug, f.domain.field)
    if pivots != list(range(n)):
        raise ValueError("map is not invertible (rank %d of %d)" % (
            sum(1 for p in pivots if p < n), n))
    inv_cols: dict[int, dict[int, Scalar]] = {}
    for i, row in enumerate(red):
        for j, c in row.items():
            if j >= n:
                inv_cols.setdefault(j - n, {})[i] = c
    return LinMap(f.codomain, f.domain, inv_cols)


def in_span(basis: list[Element], elem: Element) -> bool:
    return solve_linear(basis, elem) is not None


def spans_equal(a: list[Element], b: list[Element]) -> bool:
    """Whether two lists of elements span the same subspace (canonical RREF)."""
    return [e.comps for e in canonical_basis(a)] == [e.comps for e in canonical_basis(b)]
