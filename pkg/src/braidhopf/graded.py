"""G-graded vector spaces, degree-preserving maps, bicharacter braidings and
canonical idempotent splitting.

This is the concrete braided monoidal category the engine computes in.  The
category is strict: tensor bases are flattened left-factor-major, labels of
tensor basis vectors join with "@", and the unit object is the 1-dimensional
degree-zero space labeled "1".  Tensoring with the unit returns the other
factor unchanged, so the unit isomorphisms are identities on the nose.

Idempotents split canonically: the image basis is read off a reduced
row-echelon form per degree block, so equal inputs always split identically
and coinvariant constructions downstream are well defined without any
isomorphism bookkeeping.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CompositionError,
    DegreeError,
    FieldError,
    ShapeError,
    SplitError,
)

UNIT_LABEL = "1"
LABEL_SEP = "@"


class AbelianGroup:
    """Z/n1 x ... x Z/nr for a fixed signature (n1, ..., nr); elements are tuples."""

    __slots__ = ("signature",)

    def __init__(self, signature):
        sig = tuple(int(n) for n in signature)
        if any(n < 1 for n in sig):
            raise ShapeError(f"invalid group signature {sig}")
        self.signature = sig

    @property
    def rank(self):
        return len(self.signature)

    @property
    def zero(self):
        return (0,) * len(self.signature)

    def canon(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(self.signature):
            raise ShapeError(f"degree {coords} does not match signature {self.signature}")
        return tuple(c % n for c, n in zip(coords, self.signature))

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.signature))

    def neg(self, a):
        return tuple((-x) % n for x, n in zip(a, self.signature))

    def elements(self):
        return itertools.product(*(range(n) for n in self.signature))

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and other.signature == self.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        return f"AbelianGroup{self.signature}"


class GradedSpace:
    """Ordered basis of (label, degree) pairs over a fixed grading group.

    Immutable; tensor products and hashes are cached, so spaces reached along
    one computation are usually the same object and comparisons short-circuit.
    """

    __slots__ = ("group", "basis", "dim", "degrees", "_blocks", "_tensor_cache", "_hash")

    def __init__(self, group: AbelianGroup, basis):
        pairs = tuple((str(lbl), group.canon(deg)) for lbl, deg in basis)
        labels = [lbl for lbl, _ in pairs]
        if len(set(labels)) != len(labels):
            dup = sorted({l for l in labels if labels.count(l) > 1})
            raise ShapeError(f"duplicate basis labels {dup}")
        self._fill(group, pairs)

    def _fill(self, group, pairs):
        self.group = group
        self.basis = pairs
        self.dim = len(pairs)
        self.degrees = tuple(deg for _, deg in pairs)
        self._blocks = None
        self._tensor_cache = {}
        self._hash = None

    @staticmethod
    def _trusted(group, pairs):
        """Internal constructor for bases whose degrees are already canonical."""
        labels = {lbl for lbl, _ in pairs}
        if len(labels) != len(pairs):
            raise ShapeError("duplicate basis labels in tensor product")
        out = object.__new__(GradedSpace)
        out._fill(group, tuple(pairs))
        return out

    @property
    def labels(self):
        return tuple(lbl for lbl, _ in self.basis)

    def degree(self, i):
        return self.degrees[i]

    def label(self, i):
        return self.basis[i][0]

    @property
    def is_unit(self):
        return self.basis == ((UNIT_LABEL, self.group.zero),)

    def tensor(self, other: "GradedSpace") -> "GradedSpace":
        cached = self._tensor_cache.get(other)
        if cached is not None:
            return cached
        if other.group != self.group:
            raise ShapeError("tensor of spaces over different grading groups")
        if self.is_unit:
            out = other
        elif other.is_unit:
            out = self
        else:
            add = self.group.add
            out = GradedSpace._trusted(self.group, [
                (a + LABEL_SEP + b, add(da, db))
                for a, da in self.basis
                for b, db in other.basis
            ])
        self._tensor_cache[other] = out
        return out

    def blocks(self):
        """Ordered index lists per degree, in order of first appearance."""
        if self._blocks is None:
            blocks = {}
            for i, (_, d) in enumerate(self.basis):
                blocks.setdefault(d, []).append(i)
            self._blocks = blocks
        return self._blocks

    def __eq__(self, other):
        if other is self:
            return True
        return (
            isinstance(other, GradedSpace)
            and other.group == self.group
            and other.basis == self.basis
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.group, self.basis))
        return self._hash

    def __repr__(self):
        shown = ",".join(self.labels[:6]) + ("..." if self.dim > 6 else "")
        return f"GradedSpace[{self.dim}: {shown}]"


class GradedMap:
    """Degree-preserving linear map stored as a sparse {(row, col): value} dict."""

    __slots__ = ("domain", "codomain", "field", "entries")

    def __init__(self, domain, codomain, entries, field):
        if domain.group != codomain.group:
            raise ShapeError("map between spaces over different grading groups")
        ddeg = domain.degrees
        cdeg = codomain.degrees
        m, n = codomain.dim, domain.dim
        clean = {}
        for (i, j), v in entries.items():
            if not (0 <= i < m and 0 <= j < n):
                raise ShapeError(f"entry index ({i},{j}) outside {m}x{n}")
            if not v:
                continue
            if cdeg[i] != ddeg[j]:
                raise DegreeError(
                    f"entry ({codomain.label(i)}, {domain.label(j)}) = {v} links "
                    f"degree {ddeg[j]} to degree {cdeg[i]}"
                )
            clean[(i, j)] = v
        self.domain = domain
        self.codomain = codomain
        self.field = field
        self.entries = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def identity(space, field):
        one = field.one
        return GradedMap(space, space, {(i, i): one for i in range(space.dim)}, field)

    @staticmethod
    def zero(domain, codomain, field):
        return GradedMap(domain, codomain, {}, field)

    @staticmethod
    def from_rows(domain, codomain, rows, field):
        if len(rows) != codomain.dim or any(len(r) != domain.dim for r in rows):
            raise ShapeError(
                f"dense matrix must be {codomain.dim}x{domain.dim}, "
                f"got {len(rows)}x{len(rows[0]) if rows else 0}"
            )
        entries = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                val = field.of(v) if isinstance(v, (int, str)) else v
                if val:
                    entries[(i, j)] = val
        return GradedMap(domain, codomain, entries, field)

    # -- data access --------------------------------------------------------

    def entry(self, i, j):
        return self.entries.get((i, j), self.field.zero)

    def to_rows(self):
        z = self.field.zero
        rows = [[z] * self.domain.dim for _ in range(self.codomain.dim)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    @property
    def is_zero(self):
        return not self.entries

    @property
    def is_identity(self):
        return self.domain == self.codomain and self == GradedMap.identity(
            self.domain, self.field
        )

    def nnz(self):
        return len(self.entries)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._same_shape(other, "add")
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            out[k] = v if s is None else s + v
        return GradedMap(self.domain, self.codomain, out, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GradedMap(
            self.domain, self.codomain, {k: -v for k, v in self.entries.items()}, self.field
        )

    def scale(self, c):
        return GradedMap(
            self.domain, self.codomain, {k: c * v for k, v in self.entries.items()}, self.field
        )

    def _same_shape(self, other, what):
        if other.domain != self.domain or other.codomain != self.codomain:
            raise ShapeError(f"cannot {what} maps with different domains/codomains")

    def __eq__(self, other):
        return (
            isinstance(other, GradedMap)
            and other.domain == self.domain
            and other.codomain == self.codomain
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(sorted(self.entries))))

    def __repr__(self):
        return f"GradedMap({self.domain.dim}->{self.codomain.dim}, nnz={len(self.entries)})"

    def leading_entry(self):
        """Deterministic representative nonzero entry, for residual reports."""
        if not self.entries:
            return None
        i, j = min(self.entries)
        return (self.codomain.label(i), self.domain.label(j), self.entries[(i, j)])


def matrices_match(f: GradedMap, g: GradedMap) -> bool:
    """Structure-constant equality: same graded dimensions and same entries.

    Basis labels are ignored; split objects keep provenance labels, so
    "verbatim" roundtrip statements are exactly this notion of equality.
    """
    return (
        f.domain.group == g.domain.group
        and f.domain.degrees == g.domain.degrees
        and f.codomain.degrees == g.codomain.degrees
        and f.entries == g.entries
    )


def compose(*maps) -> GradedMap:
    """compose(f, g, h) = f o g o h (rightmost applied first)."""
    if not maps:
        raise ShapeError("compose needs at least one map")
    out = maps[-1]
    for g in reversed(maps[:-1]):
        out = _compose2(g, out)
    return out


def _compose2(g: GradedMap, f: GradedMap) -> GradedMap:
    if f.codomain != g.domain:
        raise CompositionError(
            f"cannot compose {g!r} after {f!r}: middle objects differ "
            f"({f.codomain!r} vs {g.domain!r})"
        )
    gcols = {}
    for (i, m), v in g.entries.items():
        gcols.setdefault(m, []).append((i, v))
    out = {}
    for (m, c), v in f.entries.items():
        for i, w in gcols.get(m, ()):
            key = (i, c)
            s = out.get(key)
            t = w * v if s is None else s + w * v
            if t:
                out[key] = t
            elif s is not None:
                del out[key]
    return GradedMap(f.domain, g.codomain, out, f.field)


def tensor(*maps) -> GradedMap:
    """Kronecker product of maps, left factor major."""
    if not maps:
        raise ShapeError("tensor needs at least one map")
    out = maps[0]
    for g in maps[1:]:
        out = _tensor2(out, g)
    return out


def _tensor2(f: GradedMap, g: GradedMap) -> GradedMap:
    dom = f.domain.tensor(g.domain)
    cod = f.codomain.tensor(g.codomain)
    gm, gn = g.codomain.dim, g.domain.dim
    out = {}
    g_items = list(g.entries.items())
    for (i1, j1), v1 in f.entries.items():
        base_i = i1 * gm
        base_j = j1 * gn
        for (i2, j2), v2 in g_items:
            out[(base_i + i2, base_j + j2)] = v1 * v2
    return GradedMap(dom, cod, out, f.field)


# -- bicharacter and context -------------------------------------------------


class Bicharacter:
    """chi: G x G -> k^x given on generators, extended biadditively."""

    __slots__ = ("field", "group", "table", "_cache")

    def __init__(self, field, group, table):
        r = group.rank
        tab = tuple(tuple(field.of(v) for v in row) for row in table)
        if len(tab) != r or any(len(row) != r for row in tab):
            raise ShapeError(f"bicharacter table must be {r}x{r}")
        for i, row in enumerate(tab):
            for j, v in enumerate(row):
                if not v:
                    raise FieldError(f"bicharacter entry chi({i},{j}) is zero")
                ni, nj = group.signature[i], group.signature[j]
                if v**ni != field.one or v**nj != field.one:
                    raise FieldError(
                        f"chi({i},{j}) = {v} is not killed by the orders "
                        f"({ni},{nj}) of the generators"
                    )
        self.field = field
        self.group = group
        self.table = tab
        self._cache = {}

    def value(self, a, b):
        key = (a, b)
        v = self._cache.get(key)
        if v is None:
            v = self.field.one
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    if bj:
                        v = v * self.table[i][j] ** (ai * bj)
            self._cache[key] = v
        return v

    def value_inv(self, a, b):
        return self.value(a, b) ** -1

    @property
    def is_trivial(self):
        return all(v == self.field.one for row in self.table for v in row)

    def mirror_table(self):
        r = self.group.rank
        return tuple(
            tuple(self.table[j][i] ** -1 for j in range(r)) for i in range(r)
        )

    def __eq__(self, other):
        return (
            isinstance(other, Bicharacter)
            and other.field == self.field
            and other.group == self.group
            and other.table == self.table
        )

    def __hash__(self):
        return hash((self.field, self.group, self.table))


class BraidedContext:
    """field + grading group + bicharacter; fixes the tensor product and braiding."""

    __slots__ = ("field", "group", "chi", "unit")

    def __init__(self, field, signature=(), chi_table=None):
        group = signature if isinstance(signature, AbelianGroup) else AbelianGroup(signature)
        if chi_table is None:
            chi_table = [[field.one] * group.rank for _ in range(group.rank)]
        self.field = field
        self.group = group
        self.chi = Bicharacter(field, group, chi_table)
        self.unit = GradedSpace(group, [(UNIT_LABEL, group.zero)])

    def space(self, basis):
        return GradedSpace(self.group, basis)

    def ident(self, X):
        return GradedMap.identity(X, self.field)

    def zero_map(self, X, Y):
        return GradedMap.zero(X, Y, self.field)

    def from_rows(self, X, Y, rows):
        return GradedMap.from_rows(X, Y, [[self.field.of(v) for v in r] for r in rows], self.field)

    def scalar(self, value):
        v = self.field.of(value)
        return GradedMap(self.unit, self.unit, {(0, 0): v} if v else {}, self.field)

    def braiding(self, X, Y, inverse=False):
        """Psi_{X,Y}: X(x)Y -> Y(x)X, or its inverse Y(x)X -> X(x)Y."""
        XY, YX = X.tensor(Y), Y.tensor(X)
        out = {}
        for ix in range(X.dim):
            a = X.degree(ix)
            for iy in range(Y.dim):
                b = Y.degree(iy)
                col = ix * Y.dim + iy
                row = iy * X.dim + ix
                if inverse:
                    out[(col, row)] = self.chi.value_inv(a, b)
                else:
                    out[(row, col)] = self.chi.value(a, b)
        if inverse:
            return GradedMap(YX, XY, out, self.field)
        return GradedMap(XY, YX, out, self.field)

    def braid(self, X, Y):
        return self.braiding(X, Y)

    def braid_inv(self, X, Y):
        return self.braiding(X, Y, inverse=True)

    def mirror(self):
        """Context with the mirror-reversed braiding chi~(a,b) = chi(b,a)^-1."""
        return BraidedContext(self.field, self.group, self.chi.mirror_table())

    @property
    def is_symmetric(self):
        # chi(a,b) * chi(b,a) == 1 for all generator pairs
        r = self.group.rank
        one = self.field.one
        return all(
            self.chi.table[i][j] * self.chi.table[j][i] == one
            for i in range(r)
            for j in range(r)
        )

    def __eq__(self, other):
        return (
            isinstance(other, BraidedContext)
            and other.field == self.field
            and other.group == self.group
            and other.chi == self.chi
        )

    def __hash__(self):
        return hash((self.field, self.group, self.chi))

    def __repr__(self):
        return f"BraidedContext({self.field.describe()}, {self.group.signature})"


# -- exact elimination -------------------------------------------------------


def rref(rows, field):
    """Reduced row echelon form; returns (new rows, pivot column indices).

    Pure-python Gauss-Jordan over an exact field; `rows` is not mutated.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def block_rank(f: GradedMap) -> dict:
    """Rank of each degree block of f, keyed by degree."""
    ranks = {}
    for deg, cols in f.domain.blocks().items():
        rows_idx = f.codomain.blocks().get(deg, [])
        block = [[f.entry(i, j) for j in cols] for i in rows_idx]
        if not block:
            ranks[deg] = 0
            continue
        _, piv = rref(block, f.field)
        ranks[deg] = len(piv)
    return ranks


def is_epimorphism(f: GradedMap) -> bool:
    """Full row rank on every degree block of the codomain."""
    ranks = block_rank(f)
    for deg, rows_idx in f.codomain.blocks().items():
        if ranks.get(deg, 0) != len(rows_idx):
            return False
    return True


def invert(f: GradedMap):
    """Two-sided inverse of a degree-preserving map, or None if singular."""
    if f.domain.dim != f.codomain.dim:
        return None
    field = f.field
    entries = {}
    dom_blocks = f.domain.blocks()
    cod_blocks = f.codomain.blocks()
    if set(dom_blocks) != set(cod_blocks):
        return None
    for deg, cols in dom_blocks.items():
        rows_idx = cod_blocks[deg]
        n = len(cols)
        if len(rows_idx) != n:
            return None
        aug = []
        for bi, i in enumerate(rows_idx):
            row = [f.entry(i, j) for j in cols]
            row += [field.one if bj == bi else field.zero for bj in range(n)]
            aug.append(row)
        red, piv = rref(aug, field)
        if piv != list(range(n)):
            return None
        for bi in range(n):
            for bj in range(n):
                v = red[bi][n + bj]
                if v:
                    entries[(cols[bi], rows_idx[bj])] = v
    inv = GradedMap(f.codomain, f.domain, entries, field)
    return inv


def _strip_unit_atoms(label: str) -> str:
    """Drop one leading unit atom from a tensor label: projectors of
    one-sided Hopf module type trivialize exactly the leftmost tensor leg, so
    split objects reuse the surviving factors' labels and strict associativity
    holds on the nose (coinvariants of a free module on V come back labeled
    exactly like V).  Deeper unit atoms are genuine basis labels and stay."""
    prefix = UNIT_LABEL + LABEL_SEP
    return label[len(prefix):] if label.startswith(prefix) else label


@dataclass(frozen=True)
class SplitIdempotent:
    """Canonical splitting e = i o p with p o i = id on the split object."""

    object: GradedSpace
    i: GradedMap
    p: GradedMap


def split_idempotent(e: GradedMap) -> SplitIdempotent:
    """Split an idempotent through its image, chosen canonically.

    Per degree block the pivot columns of the reduced row echelon form of e
    pick the image basis (the actual columns of e), and the nonzero echelon
    rows give the projection.  Repeated calls on equal inputs return
    identical results.
    """
    if e.domain != e.codomain:
        raise ShapeError("split_idempotent needs an endomorphism")
    residual = compose(e, e) - e
    if not residual.is_zero:
        raise SplitError(f"input is not idempotent; e*e - e has leading entry {residual.leading_entry()}")
    X = e.domain
    field = e.field
    pivot_cols = []
    prows = {}  # global pivot col -> {global col: value}
    for deg, idx in X.blocks().items():
        block = [[e.entry(i, j) for j in idx] for i in idx]
        red, piv = rref(block, field)
        for k, jloc in enumerate(piv):
            gj = idx[jloc]
            pivot_cols.append(gj)
            prows[gj] = {idx[c]: red[k][c] for c in range(len(idx)) if red[k][c]}
    pivot_cols.sort()
    labels = [_strip_unit_atoms(X.label(j)) for j in pivot_cols]
    if len(set(labels)) != len(labels):
        labels = [X.label(j) for j in pivot_cols]  # fallback keeps provenance intact
    obj = GradedSpace(X.group, list(zip(labels, (X.degree(j) for j in pivot_cols))))
    i_entries = {}
    for a, j in enumerate(pivot_cols):
        for r in range(X.dim):
            v = e.entry(r, j)
            if v:
                i_entries[(r, a)] = v
    p_entries = {}
    for a, j in enumerate(pivot_cols):
        for c, v in prows[j].items():
            p_entries[(a, c)] = v
    i = GradedMap(obj, X, i_entries, field)
    p = GradedMap(X, obj, p_entries, field)
    if compose(p, i) != GradedMap.identity(obj, field):
        raise SplitError("internal: p o i is not the identity")
    if compose(i, p) != e:
        raise SplitError("internal: i o p does not recover the idempotent")
    return SplitIdempotent(obj, i, p)
