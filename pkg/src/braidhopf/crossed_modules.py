"""Right crossed (Yetter-Drinfeld) modules over a bialgebra, their
pre-braiding and its inverse, side conversion through the antipode, the
monoidal structure of the category, and bialgebras inside it.

The compatibility condition is the braided right-right Yetter-Drinfeld
condition with the positive braiding at every crossing; it is pinned by the
consistency suite (the adjoint example passes, coinvariants of Hopf bimodules
pass, and the pre-braiding below is a braiding on everything that passes).
Left crossed modules exist only as side-conversion outputs; they get their own
compatibility check but no parallel tensor/braiding code.
"""

from __future__ import annotations

from .checks import Report
from .errors import ShapeError, StructureError
from .graded import compose, tensor
from .structures import (
    ActionMap,
    Bimodule,
    CoactionMap,
    adjoint_action,
    check_comodule,
    check_module,
    coadjoint_coaction,
    diagonal_action,
    diagonal_coaction,
    regular_action,
    regular_coaction,
)


class CrossedModule:
    """Module + comodule on one side satisfying the Yetter-Drinfeld condition."""

    def __init__(self, over, carrier, action: ActionMap, coaction: CoactionMap,
                 side="right", name=""):
        if action.side != side or coaction.side != side:
            raise ShapeError(f"{side} crossed module needs {side} (co)actions")
        H = over.carrier
        if side == "right":
            ok_act = action.map.domain == carrier.tensor(H) and action.map.codomain == carrier
            ok_coact = coaction.map.domain == carrier and coaction.map.codomain == carrier.tensor(H)
        else:
            ok_act = action.map.domain == H.tensor(carrier) and action.map.codomain == carrier
            ok_coact = coaction.map.domain == carrier and coaction.map.codomain == H.tensor(carrier)
        if not (ok_act and ok_coact):
            raise ShapeError("crossed module (co)action shapes are wrong")
        self.over = over
        self.ctx = over.ctx
        self.carrier = carrier
        self.action = action
        self.coaction = coaction
        self.side = side
        self.name = name
        self._checked = False

    @property
    def mu(self):
        return self.action.map

    @property
    def nu(self):
        return self.coaction.map

    def verify(self):
        if not self._checked:
            check_crossed_module(self).raise_if_failed(self.name or "crossed module")
            self._checked = True
        return self

    def __repr__(self):
        return f"CrossedModule({self.side}, {self.name or '?'}, dim={self.carrier.dim})"


def yd_compatibility_right(over, mu, nu):
    """Residual of the right-right Yetter-Drinfeld condition, X(x)H -> X(x)H."""
    ctx = over.ctx
    H = over.carrier
    X = mu.codomain
    idX, idH = ctx.ident(X), ctx.ident(H)
    lhs = compose(
        tensor(idX, over.m),
        tensor(ctx.braid(H, X), idH),
        tensor(idH, nu),
        tensor(idH, mu),
        tensor(ctx.braid(X, H), idH),
        tensor(idX, over.delta),
    )
    rhs = compose(
        tensor(mu, over.m),
        tensor(idX, ctx.braid(H, H), idH),
        tensor(nu, over.delta),
    )
    return lhs - rhs


def yd_compatibility_left(over, mu, nu):
    """Mirror condition for left crossed modules, H(x)X -> H(x)X."""
    ctx = over.ctx
    H = over.carrier
    X = mu.codomain
    idX, idH = ctx.ident(X), ctx.ident(H)
    lhs = compose(
        tensor(over.m, idX),
        tensor(idH, ctx.braid(X, H)),
        tensor(nu, idH),
        tensor(mu, idH),
        tensor(idH, ctx.braid(H, X)),
        tensor(over.delta, idX),
    )
    rhs = compose(
        tensor(over.m, mu),
        tensor(idH, ctx.braid(H, H), idX),
        tensor(over.delta, nu),
    )
    return lhs - rhs


def check_crossed_module(x: CrossedModule) -> Report:
    rep = Report(x.name or "crossed module")
    rep.merge(check_module(x.action), "module_")
    rep.merge(check_comodule(x.coaction), "comodule_")
    if x.side == "right":
        rep.expect_zero("compatibility", yd_compatibility_right(x.over, x.mu, x.nu))
    else:
        rep.expect_zero("compatibility", yd_compatibility_left(x.over, x.mu, x.nu))
    return rep


def unit_crossed_module(b) -> CrossedModule:
    """The unit object: counit action, unit coaction."""
    return CrossedModule(
        b, b.ctx.unit,
        ActionMap("right", b.eps, b),
        CoactionMap("right", b.eta, b),
        name="unit",
    )


def adjoint_crossed_module(h):
    """(H, adjoint action, regular coaction) and its dual (H, regular action,
    coadjoint coaction); both verified."""
    h.verify()
    if h.level != "hopf":
        raise StructureError("adjoint crossed modules need a Hopf algebra")
    reg_bim = Bimodule(regular_action(h, "left"), regular_action(h, "right"))
    ad = adjoint_action(reg_bim)
    from .structures import Bicomodule

    reg_bicom = Bicomodule(regular_coaction(h, "left"), regular_coaction(h, "right"))
    coad = coadjoint_coaction(reg_bicom)
    h_ad = CrossedModule(h, h.carrier, ad, regular_coaction(h, "right"),
                         name=(h.name or "H") + "_ad")
    h_coad = CrossedModule(h, h.carrier, regular_action(h, "right"), coad,
                           name=(h.name or "H") + "^ad")
    h_ad.verify()
    h_coad.verify()
    return h_ad, h_coad


def is_crossed_morphism(f, x: CrossedModule, y: CrossedModule) -> Report:
    ctx = x.ctx
    idH = ctx.ident(x.over.carrier)
    rep = Report("crossed module morphism")
    if x.side != y.side:
        return rep.add("same_side", False, note="sides differ")
    if x.side == "right":
        rep.expect_equal("action_intertwined", compose(f, x.mu), compose(y.mu, tensor(f, idH)))
        rep.expect_equal("coaction_intertwined", compose(y.nu, f), compose(tensor(f, idH), x.nu))
    else:
        rep.expect_equal("action_intertwined", compose(f, x.mu), compose(y.mu, tensor(idH, f)))
        rep.expect_equal("coaction_intertwined", compose(y.nu, f), compose(tensor(idH, f), x.nu))
    return rep


# -- pre-braiding -------------------------------------------------------------------


def yd_braiding(x: CrossedModule, y: CrossedModule, inverse=False):
    """Pre-braiding of right crossed modules; the inverse needs a Hopf algebra
    with invertible antipode and is built from the explicit reversed composite.
    """
    if x.side != "right" or y.side != "right":
        raise ShapeError("the pre-braiding is implemented for right crossed modules")
    x.verify()
    y.verify()
    h = x.over
    ctx = x.ctx
    X, Y, H = x.carrier, y.carrier, h.carrier
    idX, idY, idB = ctx.ident(X), ctx.ident(Y), ctx.ident(H)
    if not inverse:
        return compose(
            tensor(idY, x.mu),
            tensor(ctx.braid(X, Y), idB),
            tensor(idX, y.nu),
        )
    if h.level != "hopf":
        raise StructureError("the inverse pre-braiding needs a Hopf algebra")
    s_inv = h.antipode_inverse()
    return compose(
        tensor(x.mu, idY),
        tensor(idX, ctx.braid_inv(H, Y)),
        tensor(ctx.braid_inv(X, Y), s_inv),
        tensor(idY, ctx.braid_inv(X, H)),
        tensor(y.nu, idX),
    )


def yd_tensor(x: CrossedModule, y: CrossedModule) -> CrossedModule:
    """Diagonal action and coaction on the tensor product."""
    if x.side != "right" or y.side != "right":
        raise ShapeError("tensor of crossed modules is implemented on the right side")
    x.verify()
    y.verify()
    return CrossedModule(
        x.over, x.carrier.tensor(y.carrier),
        diagonal_action(x.action, y.action),
        diagonal_coaction(x.coaction, y.coaction),
        name=f"{x.name}(x){y.name}",
    )


def yd_braiding_report(x, y, z, morphisms=()) -> Report:
    """Invertibility, hexagons, naturality and Yang-Baxter on concrete objects."""
    rep = Report("crossed module braiding")
    ctx = x.ctx
    psi = yd_braiding(x, y)
    inv = yd_braiding(x, y, inverse=True)
    rep.expect_equal("inverse_right", compose(psi, inv),
                     ctx.ident(y.carrier.tensor(x.carrier)))
    rep.expect_equal("inverse_left", compose(inv, psi),
                     ctx.ident(x.carrier.tensor(y.carrier)))
    rep.merge(is_crossed_morphism(psi, yd_tensor(x, y), yd_tensor(y, x)), "braiding_")
    idX = ctx.ident(x.carrier)
    idY = ctx.ident(y.carrier)
    idZ = ctx.ident(z.carrier)
    rep.expect_equal(
        "hexagon_right",
        yd_braiding(x, yd_tensor(y, z)),
        compose(tensor(idY, yd_braiding(x, z)), tensor(yd_braiding(x, y), idZ)),
    )
    rep.expect_equal(
        "hexagon_left",
        yd_braiding(yd_tensor(x, y), z),
        compose(tensor(yd_braiding(x, z), idY), tensor(idX, yd_braiding(y, z))),
    )
    for k, (f, src, tgt) in enumerate(morphisms):
        rep.expect_equal(
            f"naturality_{k}",
            compose(yd_braiding(tgt, y), tensor(f, idY)),
            compose(tensor(idY, f), yd_braiding(src, y)),
        )
    return rep


def yang_baxter_report(x: CrossedModule) -> Report:
    """(psi (x) id)(id (x) psi)(psi (x) id) = (id (x) psi)(psi (x) id)(id (x) psi)."""
    ctx = x.ctx
    idX = ctx.ident(x.carrier)
    psi = yd_braiding(x, x)
    lhs = compose(tensor(psi, idX), tensor(idX, psi), tensor(psi, idX))
    rhs = compose(tensor(idX, psi), tensor(psi, idX), tensor(idX, psi))
    return Report("Yang-Baxter").expect_zero("yang_baxter", lhs - rhs)


# -- side conversion ------------------------------------------------------------------


SIDE_VARIANTS = ("antipode_upper", "antipode_lower", "antipode_upper_inv", "antipode_lower_inv")
# right -> left: antipode_upper (uses S on the coaction, S^-1 on the action),
#                antipode_lower (uses S on the action, S^-1 on the coaction);
# left -> right: the companions that undo them.


def side_convert(x: CrossedModule, variant: str) -> CrossedModule:
    """Left crossed module from a right one (or back) through the antipode.

    variant 'antipode_upper'/'antipode_lower' convert right -> left; their
    companions 'antipode_upper_inv'/'antipode_lower_inv' convert left -> right
    and are two-sided inverses of the former, which is asserted by the
    round-trip report below.
    """
    h = x.over
    h.verify()
    if h.level != "hopf":
        raise StructureError("side conversion needs a Hopf algebra")
    s = h.s
    s_inv = h.antipode_inverse()
    ctx = x.ctx
    X, H = x.carrier, h.carrier
    idX = ctx.ident(X)
    if variant in ("antipode_upper", "antipode_lower"):
        if x.side != "right":
            raise ShapeError(f"{variant} converts right crossed modules")
        if variant == "antipode_upper":
            mu = compose(x.mu, ctx.braid_inv(X, H), tensor(s_inv, idX))
            nu = compose(tensor(s, idX), ctx.braid(X, H), x.nu)
        else:
            mu = compose(x.mu, ctx.braid(H, X), tensor(s, idX))
            nu = compose(tensor(s_inv, idX), ctx.braid_inv(H, X), x.nu)
        out = CrossedModule(h, X, ActionMap("left", mu, h), CoactionMap("left", nu, h),
                            side="left", name=f"{x.name}:{variant}")
    elif variant in ("antipode_upper_inv", "antipode_lower_inv"):
        if x.side != "left":
            raise ShapeError(f"{variant} converts left crossed modules")
        if variant == "antipode_upper_inv":
            mu = compose(x.mu, ctx.braid(X, H), tensor(idX, s))
            nu = compose(tensor(idX, s_inv), ctx.braid_inv(X, H), x.nu)
        else:
            mu = compose(x.mu, ctx.braid_inv(H, X), tensor(idX, s_inv))
            nu = compose(tensor(idX, s), ctx.braid(H, X), x.nu)
        out = CrossedModule(h, X, ActionMap("right", mu, h), CoactionMap("right", nu, h),
                            side="right", name=f"{x.name}:{variant}")
    else:
        raise ShapeError(f"unknown side conversion {variant!r}")
    out.verify()
    return out


def side_conversion_report(x: CrossedModule) -> Report:
    """All four conversions type-check, verify, and the paired ones are mutually
    inverse on the structure maps."""
    rep = Report("side conversion")
    up = side_convert(x, "antipode_upper")
    rep.expect("upper_left_valid", check_crossed_module(up).ok)
    back = side_convert(up, "antipode_upper_inv")
    rep.expect_equal("upper_roundtrip_action", back.mu, x.mu)
    rep.expect_equal("upper_roundtrip_coaction", back.nu, x.nu)
    low = side_convert(x, "antipode_lower")
    rep.expect("lower_left_valid", check_crossed_module(low).ok)
    back2 = side_convert(low, "antipode_lower_inv")
    rep.expect_equal("lower_roundtrip_action", back2.mu, x.mu)
    rep.expect_equal("lower_roundtrip_coaction", back2.nu, x.nu)
    return rep


# -- bialgebras in the category of crossed modules -----------------------------------


class CrossedBialgebra:
    """A (co)algebra on a crossed module whose structure maps live in the
    category: everything commutes with the (co)action, and the bialgebra
    axioms hold with the Yetter-Drinfeld pre-braiding in the middle."""

    def __init__(self, crossed: CrossedModule, m, eta, delta, eps, s=None, name=""):
        self.crossed = crossed
        self.m = m
        self.eta = eta
        self.delta = delta
        self.eps = eps
        self.s = s
        self.name = name or crossed.name
        self._checked = False

    @property
    def carrier(self):
        return self.crossed.carrier

    @property
    def over(self):
        return self.crossed.over

    @property
    def ctx(self):
        return self.crossed.ctx

    def verify(self):
        if not self._checked:
            check_crossed_bialgebra(self).raise_if_failed(self.name or "crossed bialgebra")
            self._checked = True
        return self

    def __repr__(self):
        return f"CrossedBialgebra({self.name or '?'}, dim={self.carrier.dim})"


def check_crossed_bialgebra(b: CrossedBialgebra) -> Report:
    rep = Report(b.name or "crossed bialgebra")
    x = b.crossed
    rep.merge(check_crossed_module(x), "crossed_")
    ctx = b.ctx
    X = b.carrier
    idX = ctx.ident(X)
    xx = yd_tensor(x, x)
    unit = unit_crossed_module(b.over)
    rep.merge(is_crossed_morphism(b.m, xx, x), "m_")
    rep.merge(is_crossed_morphism(b.eta, unit, x), "eta_")
    rep.merge(is_crossed_morphism(b.delta, x, xx), "delta_")
    rep.merge(is_crossed_morphism(b.eps, x, unit), "eps_")
    rep.expect_equal("associativity", compose(b.m, tensor(b.m, idX)), compose(b.m, tensor(idX, b.m)))
    rep.expect_equal("left_unit", compose(b.m, tensor(b.eta, idX)), idX)
    rep.expect_equal("right_unit", compose(b.m, tensor(idX, b.eta)), idX)
    rep.expect_equal(
        "coassociativity", compose(tensor(b.delta, idX), b.delta),
        compose(tensor(idX, b.delta), b.delta),
    )
    rep.expect_equal("left_counit", compose(tensor(b.eps, idX), b.delta), idX)
    rep.expect_equal("right_counit", compose(tensor(idX, b.eps), b.delta), idX)
    psi = yd_braiding(x, x)
    rep.expect_equal(
        "comultiplication_multiplicative",
        compose(b.delta, b.m),
        compose(tensor(b.m, b.m), tensor(idX, psi, idX), tensor(b.delta, b.delta)),
    )
    rep.expect_equal("comultiplication_unital", compose(b.delta, b.eta), tensor(b.eta, b.eta))
    rep.expect_equal("counit_multiplicative", compose(b.eps, b.m), tensor(b.eps, b.eps))
    rep.expect_equal("counit_unital", compose(b.eps, b.eta), ctx.ident(ctx.unit))
    if b.s is not None:
        target = compose(b.eta, b.eps)
        rep.expect_equal("antipode_left", compose(b.m, tensor(b.s, idX), b.delta), target)
        rep.expect_equal("antipode_right", compose(b.m, tensor(idX, b.s), b.delta), target)
    return rep
