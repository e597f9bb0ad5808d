"""Built-in generators for the concrete algebras used throughout the tests
and the shipped scenarios: group algebras and their duals, the 4-dimensional
small quantum group, truncated polynomial (q-)lines, Taft algebras obtained by
bosonization, and single-entry perturbations for negative testing.

Two contexts show up repeatedly.  The q-line k[x]/(x^n) is a Hopf algebra in
the Z/n-graded category with braiding chi(a,b) = q^{ab}; the same structure
constants, read in a trivially braided context over the same field, form a
bialgebra in the category of Yetter-Drinfeld modules over k[Z/n] (acting by
the character q^deg, coacting by the grading), which is exactly what
bosonization consumes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import FieldError, ShapeError
from .fields import PrimeField, RationalField, root_of_unity
from .graded import BraidedContext, GradedMap, compose
from .structures import ActionMap, CoactionMap, HopfStructure


def q_int(q, n, one):
    """[n]_q = 1 + q + ... + q^{n-1}."""
    acc = one - one
    pw = one
    for _ in range(n):
        acc = acc + pw
        pw = pw * q
    return acc


def q_binomial(n, k, q, one):
    """Gaussian binomial by the Pascal recursion [n,k] = [n-1,k-1] + q^k [n-1,k];
    exact for any invertible q, including roots of unity where the factorial
    ratio would hit 0/0."""
    if k < 0 or k > n:
        return one - one
    row = [one]
    for m in range(1, n + 1):
        new = [one]
        for j in range(1, m):
            new.append(row[j - 1] + q**j * row[j])
        new.append(one)
        row = new
    return row[k]


@dataclass
class ExampleSpec:
    """Nameable recipe for a built-in example."""

    kind: str
    params: dict = dc_field(default_factory=dict)


@dataclass
class BuiltExample:
    """A built structure plus whatever canonical extras the kind provides."""

    ctx: BraidedContext
    hopf: HopfStructure
    extras: dict = dc_field(default_factory=dict)


# -- group algebras ------------------------------------------------------------


def _cyclic_basis(n, degree_zero=True):
    return [(f"g{a}" if a else "1", ()) for a in range(n)]


def group_algebra(ctx: BraidedContext, n: int, name="") -> HopfStructure:
    """k[Z/n] with all basis vectors in degree zero, so it is a Hopf algebra in
    any braided context over the right field."""
    zero = ctx.group.zero
    H = ctx.space([(f"g{a}" if a else "1", zero) for a in range(n)])
    one = ctx.field.one
    m = {(int((a + b) % n), a * n + b): one for a in range(n) for b in range(n)}
    eta = {(0, 0): one}
    delta = {(a * n + a, a): one for a in range(n)}
    eps = {(0, a): one for a in range(n)}
    s = {((-a) % n, a): one for a in range(n)}
    f = ctx.field
    return HopfStructure(
        ctx, H,
        m=GradedMap(H.tensor(H), H, m, f),
        eta=GradedMap(ctx.unit, H, eta, f),
        delta=GradedMap(H, H.tensor(H), delta, f),
        eps=GradedMap(H, ctx.unit, eps, f),
        s=GradedMap(H, H, s, f),
        level="hopf", name=name or f"k[Z/{n}]",
    )


def dual_group_algebra(ctx: BraidedContext, n: int, name="") -> HopfStructure:
    """Functions on Z/n: orthogonal idempotents e_a, grouplike-dual structure."""
    zero = ctx.group.zero
    H = ctx.space([(f"e{a}", zero) for a in range(n)])
    one = ctx.field.one
    f = ctx.field
    m = {(a, a * n + a): one for a in range(n)}
    eta = {(a, 0): one for a in range(n)}
    delta = {}
    for c in range(n):
        for a in range(n):
            delta[((a * n + (c - a) % n), c)] = one
    eps = {(0, 0): one}
    s = {((-a) % n, a): one for a in range(n)}
    return HopfStructure(
        ctx, H,
        m=GradedMap(H.tensor(H), H, m, f),
        eta=GradedMap(ctx.unit, H, eta, f),
        delta=GradedMap(H, H.tensor(H), delta, f),
        eps=GradedMap(H, ctx.unit, eps, f),
        s=GradedMap(H, H, s, f),
        level="hopf", name=name or f"k^(Z/{n})",
    )


# -- the 4-dimensional small quantum group --------------------------------------


def sweedler(ctx: BraidedContext = None) -> BuiltExample:
    """The 4-dimensional Hopf algebra <g, x | g^2=1, x^2=0, xg=-gx> over the
    rationals, with grouplike g and (1,g)-primitive x; trivial braiding."""
    if ctx is None:
        ctx = BraidedContext(RationalField())
    f = ctx.field
    if ctx.group.rank != 0 or not ctx.chi.is_trivial:
        raise ShapeError("the 4-dim small quantum group lives in a trivially braided context")
    H = ctx.space([("1", ()), ("g", ()), ("x", ()), ("gx", ())])
    one = f.one

    def idx(a, b):  # g^a x^b with a,b in {0,1}
        return [["1", "g"], ["x", "gx"]][b][a]

    pos = {lbl: i for i, (lbl, _) in enumerate(H.basis)}
    m = {}
    for a1 in range(2):
        for b1 in range(2):
            for a2 in range(2):
                for b2 in range(2):
                    col = pos[idx(a1, b1)] * 4 + pos[idx(a2, b2)]
                    if b1 and b2:
                        continue  # x^2 = 0
                    sign = one if (b1 * a2) % 2 == 0 else -one
                    m[(pos[idx((a1 + a2) % 2, b1 + b2)], col)] = sign
    eta = {(pos["1"], 0): one}
    # Delta g = g(x)g, Delta x = x(x)1 + g(x)x
    delta = {
        (pos["1"] * 4 + pos["1"], pos["1"]): one,
        (pos["g"] * 4 + pos["g"], pos["g"]): one,
        (pos["x"] * 4 + pos["1"], pos["x"]): one,
        (pos["g"] * 4 + pos["x"], pos["x"]): one,
        (pos["gx"] * 4 + pos["g"], pos["gx"]): one,
        (pos["1"] * 4 + pos["gx"], pos["gx"]): one,
    }
    eps = {(0, pos["1"]): one, (0, pos["g"]): one}
    # S: 1->1, g->g, x->-gx, gx->x
    s = {
        (pos["1"], pos["1"]): one,
        (pos["g"], pos["g"]): one,
        (pos["gx"], pos["x"]): -one,
        (pos["x"], pos["gx"]): one,
    }
    HH = H.tensor(H)
    h = HopfStructure(
        ctx, H,
        m=GradedMap(HH, H, m, f),
        eta=GradedMap(ctx.unit, H, eta, f),
        delta=GradedMap(H, HH, delta, f),
        eps=GradedMap(H, ctx.unit, eps, f),
        s=GradedMap(H, H, s, f),
        level="hopf", name="H4",
    )
    return BuiltExample(ctx, h, {"square_of_antipode": compose(h.s, h.s)})


# -- truncated q-line ------------------------------------------------------------


def _line_maps(ctx, n, q, name):
    """Structure constants of k[x]/(x^n) with divided q-binomial coproduct."""
    f = ctx.field
    one = f.one
    X = ctx.space([(f"x{k}" if k else "1", (k,) if ctx.group.rank else ()) for k in range(n)])
    m = {}
    for i in range(n):
        for j in range(n):
            if i + j < n:
                m[(i + j, i * n + j)] = one
    eta = {(0, 0): one}
    delta = {}
    for k in range(n):
        for j in range(k + 1):
            delta[(j * n + (k - j), k)] = q_binomial(k, j, q, one)
    eps = {(0, 0): one}
    s = {}
    for k in range(n):
        coef = (-one) ** k * q ** (k * (k - 1) // 2)
        if coef:
            s[(k, k)] = coef
    XX = X.tensor(X)
    return HopfStructure(
        ctx, X,
        m=GradedMap(XX, X, m, f),
        eta=GradedMap(ctx.unit, X, eta, f),
        delta=GradedMap(X, XX, delta, f),
        eps=GradedMap(X, ctx.unit, eps, f),
        s=GradedMap(X, X, s, f),
        level="hopf", name=name,
    )


def braided_line(n: int, p: int) -> BuiltExample:
    """k[x]/(x^n) as a Hopf algebra in the Z/n-graded category over F_p with
    chi(1,1) = q, the smallest element of exact order n (requires p = 1 mod n)."""
    fld = PrimeField(p)
    if n > 1 and (p - 1) % n != 0:
        raise FieldError(f"braided line needs p = 1 (mod {n}); got p = {p}")
    q = root_of_unity(fld, n)
    ctx = BraidedContext(fld, (n,), [[q]])
    h = _line_maps(ctx, n, q, f"line{n}")
    return BuiltExample(ctx, h, {"q": q})


def braided_line_yd(n: int, p: int) -> BuiltExample:
    """The same structure constants in a trivially braided context over F_p,
    packaged as a Yetter-Drinfeld module over k[Z/n]: the character action
    x^k <- g = q^k x^k and the coaction x^k -> x^k (x) g^k.

    Returned extras: 'group_hopf' (k[Z/n]), 'action', 'coaction', 'q'.
    """
    fld = PrimeField(p)
    if n > 1 and (p - 1) % n != 0:
        raise FieldError(f"q-line YD data needs p = 1 (mod {n}); got p = {p}")
    q = root_of_unity(fld, n)
    ctx = BraidedContext(fld)  # no grading, trivial braiding
    grp = group_algebra(ctx, n)
    x = _line_maps(ctx, n, q, f"line{n}")
    X, H = x.carrier, grp.carrier
    act = {}
    for k in range(n):
        for a in range(n):
            act[(k, k * n + a)] = q ** (k * a)
    coact = {(k * n + k, k): fld.one for k in range(n)}
    action = ActionMap("right", GradedMap(X.tensor(H), X, act, fld), grp)
    coaction = CoactionMap("right", GradedMap(X, X.tensor(H), coact, fld), grp)
    return BuiltExample(ctx, x, {"group_hopf": grp, "action": action,
                                 "coaction": coaction, "q": q})


def taft_oracle(n: int, p: int):
    """Independent normal-form model of the Taft algebra T_n(q) over F_p.

    Basis g^a x^b, product (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d},
    coproduct from Delta g = g(x)g and Delta x = x(x)g + 1(x)x, antipode in
    closed form.  Dense structure-constant dictionaries, built without any
    engine machinery: the comparison target for bosonization.
    """
    fld = PrimeField(p)
    q = root_of_unity(fld, n)
    one = fld.one
    dim = n * n

    def nf(a, b):  # index of g^a x^b, g-major like the engine's H (x) X basis
        return (a % n) * n + b

    m = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b + d < n:
                        m[(nf(a + c, b + d), nf(a, b) * dim + nf(c, d))] = q ** (b * c)
    delta = {}
    for a in range(n):
        for b in range(n):
            for j in range(b + 1):
                coef = q_binomial(b, j, q, one)
                if coef:
                    delta[(nf(a, j) * dim + nf(a + j, b - j), nf(a, b))] = coef
    eta = {(nf(0, 0), 0): one}
    eps = {(0, nf(a, 0)): one for a in range(n)}
    s = {}
    for a in range(n):
        for b in range(n):
            coef = (-one) ** b * q ** (-(b * (b + 1) // 2) - a * b)
            if coef:
                s[(nf(-a - b, b), nf(a, b))] = coef
    return {"m": m, "delta": delta, "eta": eta, "eps": eps, "s": s, "q": q, "dim": dim}


def taft_via_bosonization(n: int, p: int) -> BuiltExample:
    """Taft algebra built by bosonizing the q-line over k[Z/n]; extras carry the
    projection data and the ingredients."""
    from .crossed_modules import CrossedBialgebra, CrossedModule
    from .projections import bosonize

    blk = braided_line_yd(n, p)
    grp = blk.extras["group_hopf"]
    cm = CrossedModule(grp, blk.hopf.carrier, blk.extras["action"], blk.extras["coaction"])
    cb = CrossedBialgebra(
        cm, m=blk.hopf.m, eta=blk.hopf.eta, delta=blk.hopf.delta,
        eps=blk.hopf.eps, s=blk.hopf.s,
    )
    hopf, proj = bosonize(grp, cb)
    return BuiltExample(blk.ctx, hopf, {
        "projection": proj, "group_hopf": grp, "yd_bialgebra": cb, "q": blk.extras["q"],
    })


# -- perturbations ---------------------------------------------------------------


MAP_NAMES = ("m", "eta", "delta", "eps", "s")


def perturb(h: HopfStructure, which: str, entry, delta) -> HopfStructure:
    """Copy of h with one structure constant changed by delta.

    delta = 0 returns an equal structure.  The result is *not* validated; a
    perturbation breaking degree preservation raises DegreeError at map
    construction, which counts as detection at the earliest possible gate.
    """
    if which not in MAP_NAMES:
        raise ShapeError(f"unknown structure map {which!r}")
    base = getattr(h, which)
    if base is None:
        raise ShapeError(f"structure has no map {which!r}")
    d = h.field.of(delta)
    i, j = entry
    entries = dict(base.entries)
    cur = entries.get((i, j), h.field.zero)
    new = cur + d
    if new:
        entries[(i, j)] = new
    else:
        entries.pop((i, j), None)
    changed = GradedMap(base.domain, base.codomain, entries, h.field)
    return h.with_maps(**{which: changed})


def legal_entries(f: GradedMap):
    """All (row, col) pairs a nonzero entry may occupy without breaking degrees."""
    out = []
    for j in range(f.domain.dim):
        dj = f.domain.degree(j)
        for i in range(f.codomain.dim):
            if f.codomain.degree(i) == dj:
                out.append((i, j))
    return out


# -- spec-driven dispatch ----------------------------------------------------------


def build(spec: ExampleSpec, ctx: BraidedContext = None) -> BuiltExample:
    """Build a named example; `ctx` must be compatible when supplied."""
    k = spec.kind
    P = spec.params
    if k == "group_algebra":
        c = ctx or BraidedContext(RationalField())
        return BuiltExample(c, group_algebra(c, int(P["n"])))
    if k == "dual_group_algebra":
        c = ctx or BraidedContext(RationalField())
        return BuiltExample(c, dual_group_algebra(c, int(P["n"])))
    if k == "sweedler":
        return sweedler(ctx)
    if k == "braided_line":
        built = braided_line(int(P["n"]), int(P["p"]))
        if ctx is not None and ctx != built.ctx:
            raise ShapeError("braided_line requires the q-graded context it defines")
        return built
    if k == "braided_line_yd":
        built = braided_line_yd(int(P["n"]), int(P["p"]))
        if ctx is not None and ctx != built.ctx:
            raise ShapeError("braided_line_yd requires an ungraded context over F_p")
        return built
    if k == "taft_via_bosonization":
        built = taft_via_bosonization(int(P["n"]), int(P["p"]))
        if ctx is not None and ctx != built.ctx:
            raise ShapeError("taft_via_bosonization requires an ungraded context over F_p")
        return built
    if k == "perturbed":
        base = build(ExampleSpec(P["base"], P.get("base_params", {})), ctx)
        h = perturb(base.hopf, P["which"], tuple(P["entry"]), P["delta"])
        return BuiltExample(base.ctx, h, dict(base.extras))
    raise ShapeError(f"unknown example kind {spec.kind!r}")
