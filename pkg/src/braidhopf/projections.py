"""Bialgebra projections, relative antipodes, the isomorphism between
projections and bialgebras in the category of Hopf bimodules, smash
(co)products with their universal property, admissible pairs, and
bosonization of crossed module bialgebras.

Antipodes of composite objects are never transported by formula alone: the
engine solves the convolution equation exactly and then asserts the closed
formulas as theorems.
"""

from __future__ import annotations

from dataclasses import dataclass

from .checks import Report
from .errors import StructureError
from .graded import GradedMap, compose, matrices_match, tensor
from .structures import (
    ActionMap,
    CoactionMap,
    HopfStructure,
    check_bialgebra_morphism,
    check_algebra_morphism,
    check_comodule_coalgebra,
    check_module_algebra,
    check_structure,
    pullback_bimodule,
    solve_antipode,
)
from .hopf_modules import (
    coinvariant_projector_right,
    regular_hopf_module,
    structure_isomorphisms,
)
from .crossed_modules import (
    CrossedBialgebra,
    CrossedModule,
    side_convert,
)
from .hopf_bimodules import (
    HopfBimodule,
    hbm_braiding,
    hbm_tensor_over_h,
    is_hbm_morphism,
    regular_hopf_bimodule,
    to_crossed_module,
)


# -- relative antipode -----------------------------------------------------------------


def _double_action(x: HopfBimodule):
    """M_X = mu_l o (id (x) mu_r): H (x) X (x) H -> X."""
    return compose(x.mu_l.map, tensor(x.ctx.ident(x.over.carrier), x.mu_r.map))


def _double_coaction(x: HopfBimodule):
    """N_X = (id (x) nu_r) o nu_l: X -> H (x) X (x) H."""
    return compose(tensor(x.ctx.ident(x.over.carrier), x.nu_r.map), x.nu_l.map)


def relative_antipode(x: HopfBimodule) -> GradedMap:
    """S on both coefficient legs around the double coaction."""
    x.verify()
    h = x.over
    if h.level != "hopf":
        raise StructureError("relative antipode needs a Hopf algebra")
    h.verify()
    idX = x.ctx.ident(x.carrier)
    return compose(_double_action(x), tensor(h.s, idX, h.s), _double_coaction(x))


def relative_antipode_inverse(x: HopfBimodule) -> GradedMap:
    """Closed inverse formula (valid when S is invertible); asserted two-sided."""
    h = x.over
    s_inv = h.antipode_inverse()
    ctx = x.ctx
    X, H = x.carrier, h.carrier
    idX = ctx.ident(X)
    inv = compose(
        _double_action(x),
        tensor(s_inv, ctx.braid_inv(X, H)),
        tensor(ctx.braid_inv(H, H), idX),
        tensor(s_inv, ctx.braid_inv(H, X)),
        _double_coaction(x),
    )
    s_rel = relative_antipode(x)
    rep = Report("relative antipode inverse")
    rep.expect_equal("right_inverse", compose(s_rel, inv), idX)
    rep.expect_equal("left_inverse", compose(inv, s_rel), idX)
    rep.raise_if_failed("relative antipode inverse")
    return inv


def right_coinvariant_split(x: HopfBimodule):
    from .graded import split_idempotent

    proj = coinvariant_projector_right(x.over, x.mu_r.map, x.nu_r.map)
    return split_idempotent(proj), proj


def left_crossed_on_right_coinvariants(x: HopfBimodule) -> CrossedModule:
    """Mirror companion of the coinvariant crossed module: the right
    coinvariants carry a left crossed structure."""
    sp, _ = right_coinvariant_split(x)
    h = x.over
    ctx = x.ctx
    idH = ctx.ident(h.carrier)
    beta = compose(sp.p, x.mu_l.map, tensor(idH, sp.i))
    delta = compose(tensor(idH, sp.p), x.nu_l.map, sp.i)
    out = CrossedModule(h, sp.object, ActionMap("left", beta, h),
                        CoactionMap("left", delta, h), side="left",
                        name=f"coinv_r({x.name})")
    out.verify()
    return out


def relative_antipode_report(x: HopfBimodule, y: HopfBimodule = None) -> Report:
    """The polarized anti-(co)multiplicativity, the projector interchange
    identities, the two-sided inverse, the induced maps between the two
    coinvariant objects as (co)module morphisms into side-converted
    structures, and (when a second bimodule is given) the braiding
    compatibility of relative antipodes under the tensor product over H
    together with its dual (both in the reconstructed reading, flagged)."""
    x.verify()
    h = x.over
    ctx = x.ctx
    X, H = x.carrier, h.carrier
    idX, idH = ctx.ident(X), ctx.ident(H)
    s_rel = relative_antipode(x)
    rep = Report("relative antipode")
    # polarized anti-multiplicativity and duals
    rep.expect_equal(
        "action_right", compose(s_rel, x.mu_r.map),
        compose(x.mu_l.map, ctx.braid(X, H), tensor(s_rel, h.s)),
    )
    rep.expect_equal(
        "action_left", compose(s_rel, x.mu_l.map),
        compose(x.mu_r.map, ctx.braid(H, X), tensor(h.s, s_rel)),
    )
    rep.expect_equal(
        "coaction_right", compose(x.nu_r.map, s_rel),
        compose(tensor(s_rel, h.s), ctx.braid(H, X), x.nu_l.map),
    )
    rep.expect_equal(
        "coaction_left", compose(x.nu_l.map, s_rel),
        compose(tensor(h.s, s_rel), ctx.braid(X, H), x.nu_r.map),
    )
    # projector interchange
    left_proj = x.split().projector
    right_proj = coinvariant_projector_right(h, x.mu_r.map, x.nu_r.map)
    rep.expect_equal("left_of_right", compose(s_rel, right_proj), compose(left_proj, right_proj))
    rep.expect_equal("left_after_rel", compose(left_proj, s_rel), compose(left_proj, right_proj))
    rep.expect_equal("right_of_left", compose(s_rel, left_proj), compose(right_proj, left_proj))
    rep.expect_equal("right_after_rel", compose(right_proj, s_rel), compose(right_proj, left_proj))
    # inverse formula (two-sided, raises internally on failure)
    relative_antipode_inverse(x)
    rep.expect("inverse_two_sided", True)
    # induced maps between the coinvariant objects
    spl = x.split()
    spr, _ = right_coinvariant_split(x)
    left_cm = to_crossed_module(x)          # right crossed structure on coinv_l
    right_cm = left_crossed_on_right_coinvariants(x)  # left structure on coinv_r
    to_right = compose(spr.p, s_rel, spl.i)  # coinv_l -> coinv_r
    to_left = compose(spl.p, s_rel, spr.i)   # coinv_r -> coinv_l
    # each induced map is a crossed-module morphism into one side-converted
    # structure (action and coaction through the same conversion); pinned
    # exactly by the examples, the printed source being ambiguous here
    conv_right = side_convert(right_cm, "antipode_upper_inv")
    rep.expect_equal(
        "module_morphism_into_converted",
        compose(to_right, left_cm.mu),
        compose(conv_right.mu, tensor(to_right, idH)),
    )
    rep.expect_equal(
        "comodule_morphism_into_converted",
        compose(conv_right.nu, to_right),
        compose(tensor(to_right, idH), left_cm.nu),
    )
    conv_left = side_convert(left_cm, "antipode_lower")
    rep.expect_equal(
        "module_morphism_from_right",
        compose(to_left, right_cm.mu),
        compose(conv_left.mu, tensor(idH, to_left)),
    )
    rep.expect_equal(
        "comodule_morphism_from_right",
        compose(conv_left.nu, to_left),
        compose(tensor(idH, to_left), right_cm.nu),
    )
    if y is not None:
        rep.merge(tensor_relative_antipode_report(x, y), "tensor_")
    return rep


def _quotient_map(x: HopfBimodule, y: HopfBimodule):
    """X (x) Y -> X (x)_H Y, the tensor-over-H coequalizer."""
    ctx = x.ctx
    _, from_y = structure_isomorphisms(y.as_left_module())
    return compose(tensor(x.mu_r.map, ctx.ident(y.split().object)),
                   tensor(ctx.ident(x.carrier), from_y))


def _embedding_map(x: HopfBimodule, y: HopfBimodule):
    """X (x)_H Y -> X (x) Y, the cotensor-over-H equalizer."""
    ctx = x.ctx
    to_y, _ = structure_isomorphisms(y.as_left_module())
    return compose(tensor(ctx.ident(x.carrier), to_y),
                   tensor(x.nu_r.map, ctx.ident(y.split().object)))


def tensor_relative_antipode_report(x: HopfBimodule, y: HopfBimodule) -> Report:
    """Reconstructed reading: the bimodule braiding intertwines the relative
    antipode of X (x)_H Y with the plain braiding of the factor antipodes,
    over the quotient map; dually over the embedding.  Flagged as a
    reconstructed reading of an ambiguous display."""
    ctx = x.ctx
    xy = hbm_tensor_over_h(x, y)
    yx = hbm_tensor_over_h(y, x)
    s_x, s_y = relative_antipode(x), relative_antipode(y)
    s_xy = relative_antipode(xy)
    lam_xy = _quotient_map(x, y)
    lam_yx = _quotient_map(y, x)
    rep = Report("relative antipode vs braiding")
    lhs = compose(hbm_braiding(x, y), s_xy, lam_xy)
    rhs = compose(lam_yx, ctx.braid(x.carrier, y.carrier), tensor(s_x, s_y))
    rep.expect_zero("braiding_intertwines (reconstructed reading)", lhs - rhs)
    rho_xy = _embedding_map(x, y)
    rho_yx = _embedding_map(y, x)
    s_yx = relative_antipode(yx)
    lhs2 = compose(rho_xy, s_xy, hbm_braiding(y, x))
    rhs2 = compose(tensor(s_x, s_y), ctx.braid(y.carrier, x.carrier), rho_yx)
    rep.expect_zero("dual_intertwines (reconstructed reading)", lhs2 - rhs2)
    return rep


# -- bialgebra projections ----------------------------------------------------------------


@dataclass
class BialgebraProjection:
    """Bialgebra maps H -> B -> H composing to the identity on H."""

    h: HopfStructure
    b: HopfStructure
    inj: GradedMap
    proj: GradedMap
    name: str = ""

    def verify(self):
        check_projection(self).raise_if_failed(self.name or "projection")
        return self


def check_projection(p: BialgebraProjection) -> Report:
    rep = Report(p.name or "projection")
    if p.h.ctx != p.b.ctx:
        return rep.add("same_context", False, note="H and B live in different contexts")
    rep.merge(check_structure(p.h), "h_")
    rep.merge(check_structure(p.b), "b_")
    rep.merge(check_bialgebra_morphism(p.inj, p.h, p.b), "inj_")
    rep.merge(check_bialgebra_morphism(p.proj, p.b, p.h), "proj_")
    rep.expect_equal("retraction", compose(p.proj, p.inj), p.h.ctx.ident(p.h.carrier))
    return rep


def projection_to_hbm(p: BialgebraProjection) -> HopfBimodule:
    """B as an H-Hopf bimodule: actions through inj, coactions through proj."""
    p.verify()
    ctx = p.h.ctx
    B = p.b.carrier
    idB = ctx.ident(B)
    out = HopfBimodule(
        p.h, B,
        ActionMap("left", compose(p.b.m, tensor(p.inj, idB)), p.h),
        ActionMap("right", compose(p.b.m, tensor(idB, p.inj)), p.h),
        CoactionMap("left", compose(tensor(p.proj, idB), p.b.delta), p.h),
        CoactionMap("right", compose(tensor(idB, p.proj), p.b.delta), p.h),
        name=p.name or (p.b.name or "B"),
    )
    out.verify()
    return out


@dataclass
class HbmBialgebra:
    """A bialgebra in the category of Hopf bimodules over H; structure maps
    have tensor-over-H shaped domains and codomains."""

    underlying: HopfBimodule
    m: GradedMap       # B (x)_H B -> B
    eta: GradedMap     # H -> B
    delta: GradedMap   # B -> B (x)_H B
    eps: GradedMap     # B -> H
    s: GradedMap = None
    name: str = ""

    @property
    def over(self):
        return self.underlying.over

    @property
    def carrier(self):
        return self.underlying.carrier

    def verify(self):
        check_hbm_bialgebra(self).raise_if_failed(self.name or "bimodule bialgebra")
        return self


def _coinv_of_morphism(b: HbmBialgebra, f, dom_split, cod_split):
    return compose(cod_split.p, f, dom_split.i)


def check_hbm_bialgebra(b: HbmBialgebra) -> Report:
    """All five structure maps are Hopf bimodule morphisms and the bialgebra
    axioms hold with the tensor product over H and its braiding."""
    rep = Report(b.name or "bimodule bialgebra")
    x = b.underlying
    x.verify()
    h = x.over
    ctx = x.ctx
    B = x.carrier
    sp = x.split()
    bb = hbm_tensor_over_h(x, x)
    hreg = regular_hopf_bimodule(h)
    rep.merge(is_hbm_morphism(b.m, bb, x), "m_")
    rep.merge(is_hbm_morphism(b.eta, hreg, x), "eta_")
    rep.merge(is_hbm_morphism(b.delta, x, bb), "delta_")
    rep.merge(is_hbm_morphism(b.eps, x, hreg), "eps_")
    if b.s is not None:
        rep.merge(is_hbm_morphism(b.s, x, x), "antipode_")
    idB = ctx.ident(B)
    idC = ctx.ident(sp.object)
    m_red = compose(sp.p, b.m, tensor(sp.i, idC))        # coinv tensor coinv -> coinv
    delta_red = compose(tensor(sp.p, idC), b.delta, sp.i)
    # associativity / coassociativity in the category
    rep.expect_equal(
        "associativity", compose(b.m, tensor(b.m, idC)),
        compose(b.m, tensor(idB, m_red)),
    )
    rep.expect_equal(
        "coassociativity", compose(tensor(b.delta, idC), b.delta),
        compose(tensor(idB, delta_red), b.delta),
    )
    # unit and counit laws against the unit object's coherence maps
    hmod = regular_hopf_module(h)
    sph = hmod.split()
    rep.expect_equal(
        "left_unit", compose(b.m, tensor(b.eta, idC)),
        compose(x.mu_l.map, tensor(ctx.ident(h.carrier), sp.i)),
    )
    eta_red = compose(sp.p, b.eta, sph.i)  # coinv(H) -> coinv(B)
    rep.expect_equal(
        "right_unit", compose(b.m, tensor(idB, eta_red)),
        tensor(idB, compose(h.eps, sph.i)),
    )
    mu_b = compose(x.mu_l.map, tensor(ctx.ident(h.carrier), sp.i))  # H (x) coinv -> B
    rep.expect_equal(
        "left_counit", compose(mu_b, tensor(b.eps, idC), b.delta), idB
    )
    eps_red = compose(sph.p, b.eps, sp.i)
    rep.expect_equal(
        "right_counit",
        compose(tensor(idB, compose(h.eps, sph.i)), tensor(idB, eps_red), b.delta),
        idB,
    )
    # the braided compatibility in the category
    psi = hbm_braiding(x, x)
    psi_red = compose(tensor(sp.p, idC), psi, tensor(sp.i, idC))
    middle = tensor(idB, psi_red, idC)
    rep.expect_equal(
        "comultiplication_multiplicative",
        compose(b.delta, b.m),
        compose(tensor(b.m, m_red), middle, tensor(b.delta, delta_red)),
    )
    delta_unit = compose(tensor(ctx.ident(h.carrier), sph.p), h.delta)  # H -> H (x)_H H
    rep.expect_equal(
        "comultiplication_unital", compose(b.delta, b.eta),
        compose(tensor(b.eta, eta_red), delta_unit),
    )
    m_unit = compose(h.m, tensor(ctx.ident(h.carrier), sph.i))  # H (x) coinv(H) -> H
    rep.expect_equal(
        "counit_multiplicative", compose(b.eps, b.m),
        compose(m_unit, tensor(b.eps, eps_red)),
    )
    rep.expect_equal("counit_unital", compose(b.eps, b.eta), ctx.ident(h.carrier))
    # key identity behind the compatibility axiom
    rep.expect_equal(
        "coaction_interchange_on_coinvariants",
        compose(tensor(compose(x.nu_r.map, sp.projector), idB), b_delta_plain(b), sp.i),
        compose(tensor(idB, x.nu_l.map), b_delta_plain(b), sp.i),
    )
    if b.s is not None:
        target = compose(b.eta, b.eps)
        rep.expect_equal(
            "antipode_left", compose(b.m, tensor(b.s, idC), b.delta), target
        )
        s_red = compose(sp.p, b.s, sp.i)
        rep.expect_equal(
            "antipode_right", compose(b.m, tensor(idB, s_red), b.delta), target
        )
    return rep


def b_delta_plain(b: HbmBialgebra) -> GradedMap:
    """The comultiplication landing in the plain tensor square, via the
    cotensor embedding."""
    x = b.underlying
    rho = _embedding_map(x, x)
    return compose(rho, b.delta)


def project_to_category(p: BialgebraProjection) -> HbmBialgebra:
    """The functor from projections to bimodule bialgebras: restrict the
    multiplication along the coinvariant inclusion and corestrict the
    comultiplication along the coinvariant projection."""
    x = projection_to_hbm(p)
    sp = x.split()
    ctx = p.h.ctx
    idB = ctx.ident(p.b.carrier)
    m_bar = compose(p.b.m, tensor(idB, sp.i))
    delta_bar = compose(tensor(idB, sp.p), p.b.delta)
    s_bar = None
    if p.b.s is not None:
        h = p.h
        s_bar = compose(
            _double_action(x), tensor(ctx.ident(h.carrier), p.b.s, ctx.ident(h.carrier)),
            _double_coaction(x),
        )
    out = HbmBialgebra(x, m=m_bar, eta=p.inj, delta=delta_bar, eps=p.proj, s=s_bar,
                       name=f"F({p.name or p.b.name or 'B'})")
    out.verify()
    return out


def recover_from_category(b: HbmBialgebra) -> BialgebraProjection:
    """The inverse functor: paste the quotient and embedding back in to get a
    bialgebra in the base category, antipode through the relative antipode."""
    b.verify()
    x = b.underlying
    h = x.over
    ctx = x.ctx
    lam = _quotient_map(x, x)
    rho = _embedding_map(x, x)
    m_b = compose(b.m, lam)
    eta_b = compose(b.eta, h.eta)
    delta_b = compose(rho, b.delta)
    eps_b = compose(h.eps, b.eps)
    s_b = None
    level = "bialgebra"
    if b.s is not None:
        s_rel = relative_antipode(x)
        s1 = compose(b.s, s_rel)
        s2 = compose(s_rel, b.s)
        if s1 != s2:
            raise StructureError("antipode candidates disagree between the two orders")
        s_b = s1
        level = "hopf"
    bb = HopfStructure(ctx, x.carrier, m=m_b, eta=eta_b, delta=delta_b, eps=eps_b,
                       s=s_b, level=level, name=f"G({b.name or '?'})")
    bb.verify()
    out = BialgebraProjection(h, bb, inj=b.eta, proj=b.eps, name=f"G({b.name or '?'})")
    out.verify()
    return out


def is_projection_morphism(f, p: BialgebraProjection, q: BialgebraProjection) -> Report:
    rep = Report("projection morphism")
    rep.merge(check_bialgebra_morphism(f, p.b, q.b))
    rep.expect_equal("under_h", compose(f, p.inj), q.inj)
    rep.expect_equal("over_h", compose(q.proj, f), p.proj)
    return rep


def is_hbm_bialgebra_morphism(f, a: HbmBialgebra, b: HbmBialgebra) -> Report:
    rep = Report("bimodule bialgebra morphism")
    rep.merge(is_hbm_morphism(f, a.underlying, b.underlying), "bimodule_")
    spa, spb = a.underlying.split(), b.underlying.split()
    f_red = compose(spb.p, f, spa.i)
    rep.expect_equal("multiplicative", compose(f, a.m), compose(b.m, tensor(f, f_red)))
    rep.expect_equal("comultiplicative", compose(b.delta, f), compose(tensor(f, f_red), a.delta))
    rep.expect_equal("unital", compose(f, a.eta), b.eta)
    rep.expect_equal("counital", compose(b.eps, f), a.eps)
    return rep


def projection_theorem_report(projections=(), morphisms=()) -> Report:
    """Both functors roundtrip to verbatim structure constants on the samples
    and act as the identity on morphisms."""
    rep = Report("projection correspondence")
    built = []
    for p in projections:
        nm = p.name or p.b.name or f"dim{p.b.carrier.dim}"
        f_img = project_to_category(p)
        back = recover_from_category(f_img)
        rep.expect(f"{nm}_m", matrices_match(back.b.m, p.b.m))
        rep.expect(f"{nm}_eta", matrices_match(back.b.eta, p.b.eta))
        rep.expect(f"{nm}_delta", matrices_match(back.b.delta, p.b.delta))
        rep.expect(f"{nm}_eps", matrices_match(back.b.eps, p.b.eps))
        if p.b.s is not None:
            rep.expect(f"{nm}_antipode", matrices_match(back.b.s, p.b.s))
        rep.expect(f"{nm}_inj", matrices_match(back.inj, p.inj))
        rep.expect(f"{nm}_proj", matrices_match(back.proj, p.proj))
        # and the other composite: F(G(F(p))) has F(p)'s maps again
        f2 = project_to_category(back)
        rep.expect(f"{nm}_m_bar", matrices_match(f2.m, f_img.m))
        rep.expect(f"{nm}_delta_bar", matrices_match(f2.delta, f_img.delta))
        built.append((p, f_img))
    for f, src_idx, tgt_idx in morphisms:
        p, fp = built[src_idx]
        q, fq = built[tgt_idx]
        rep.merge(is_projection_morphism(f, p, q), "morphism_")
        rep.merge(is_hbm_bialgebra_morphism(f, fp, fq), "functor_image_")
    return rep


# -- smash products and bosonization --------------------------------------------------------


def smash_product(h: HopfStructure, alg: HopfStructure, action: ActionMap,
                  test_morphisms=()):
    """The cross product algebra on H (x) A for a right module algebra A.

    Returns (algebra, from_coefficients j, from_algebra i) and asserts the
    universal property: j and i are algebra maps, i is equivariant for the
    adjoint action pulled back along j, and each supplied (target, g, f) pair
    factors uniquely as m_U o (g (x) f)."""
    h.verify()
    check_module_algebra(alg, action).raise_if_failed("module algebra")
    ctx = h.ctx
    H, A = h.carrier, alg.carrier
    idH, idA = ctx.ident(H), ctx.ident(A)
    m = compose(
        tensor(h.m, alg.m),
        tensor(idH, idH, action.map, idA),
        tensor(idH, ctx.braid(A, H), idH, idA),
        tensor(idH, idA, h.delta, idA),
    )
    eta = tensor(h.eta, alg.eta)
    smash = HopfStructure(ctx, H.tensor(A), m=m, eta=eta, level="algebra",
                          name=f"{h.name or 'H'}|x{alg.name or 'A'}")
    check_structure(smash).raise_if_failed("smash product algebra")
    j = tensor(idH, alg.eta)
    i = tensor(h.eta, idA)
    rep = Report("smash universal property")
    rep.merge(check_algebra_morphism(j, h, smash), "j_")
    rep.merge(check_algebra_morphism(i, alg, smash), "i_")
    _, ad_j = pullback_bimodule(smash, j, h)
    rep.expect_equal(
        "i_equivariant", compose(i, action.map), compose(ad_j.map, tensor(i, idH))
    )
    for k, (target, g, f) in enumerate(test_morphisms):
        gf = compose(target.m, tensor(g, f))
        rep.merge(check_algebra_morphism(gf, smash, target), f"factor_{k}_")
        rep.expect_equal(f"factor_{k}_through_i", compose(gf, i), f)
        rep.expect_equal(f"factor_{k}_through_j", compose(gf, j), g)
    rep.raise_if_failed("smash product")
    return smash, i, j


def smash_coproduct(h: HopfStructure, coalg: HopfStructure, coaction: CoactionMap):
    """Dual-symmetric cross coproduct on H (x) C for a right comodule coalgebra."""
    h.verify()
    check_comodule_coalgebra(coalg, coaction).raise_if_failed("comodule coalgebra")
    ctx = h.ctx
    H, C = h.carrier, coalg.carrier
    idH, idC = ctx.ident(H), ctx.ident(C)
    delta = compose(
        tensor(idH, idC, h.m, idC),
        tensor(idH, ctx.braid(H, C), idH, idC),
        tensor(idH, idH, coaction.map, idC),
        tensor(h.delta, coalg.delta),
    )
    eps = tensor(h.eps, coalg.eps)
    out = HopfStructure(ctx, H.tensor(C), delta=delta, eps=eps, level="coalgebra",
                        name=f"{h.name or 'H'}|x{coalg.name or 'C'}")
    check_structure(out).raise_if_failed("smash coproduct coalgebra")
    return out


@dataclass
class AdmissibleInput:
    """Carrier with simultaneous module-algebra and comodule-coalgebra data."""

    algebra: HopfStructure   # algebra level (m, eta)
    coalgebra: HopfStructure  # coalgebra level (delta, eps)
    action: ActionMap
    coaction: CoactionMap
    s: GradedMap = None
    name: str = ""

    @staticmethod
    def from_crossed_bialgebra(b: CrossedBialgebra):
        ctx = b.ctx
        alg = HopfStructure(ctx, b.carrier, m=b.m, eta=b.eta, level="algebra",
                            name=b.name)
        coalg = HopfStructure(ctx, b.carrier, delta=b.delta, eps=b.eps,
                              level="coalgebra", name=b.name)
        return AdmissibleInput(alg, coalg, b.crossed.action, b.crossed.coaction,
                               s=b.s, name=b.name)


def check_admissible(h: HopfStructure, data: AdmissibleInput) -> Report:
    """Builds the smash algebra and coproduct on H (x) X, checks the combined
    bialgebra axioms, and only then asserts the admissibility relations and the
    induced projection."""
    rep = Report(f"admissible pair ({data.name or '?'})")
    try:
        smash, i, j = smash_product(h, data.algebra, data.action)
    except StructureError as exc:
        return rep.add("smash_algebra", False, note=str(exc))
    try:
        cosmash = smash_coproduct(h, data.coalgebra, data.coaction)
    except StructureError as exc:
        return rep.add("smash_coproduct", False, note=str(exc))
    ctx = h.ctx
    combined = HopfStructure(
        ctx, smash.carrier, m=smash.m, eta=smash.eta, delta=cosmash.delta,
        eps=cosmash.eps, level="bialgebra",
        name=f"{h.name or 'H'}x{data.name or 'X'}",
    )
    bial = check_structure(combined)
    rep.merge(bial, "bialgebra_")
    if not bial.ok:
        return rep
    alg, coalg = data.algebra, data.coalgebra
    rep.expect_equal("counit_multiplicative", compose(coalg.eps, alg.m),
                     tensor(coalg.eps, coalg.eps))
    rep.expect_equal("counit_action", compose(coalg.eps, data.action.map),
                     tensor(coalg.eps, h.eps))
    rep.expect_equal("unit_comultiplicative", compose(coalg.delta, alg.eta),
                     tensor(alg.eta, alg.eta))
    rep.expect_equal("unit_coaction", compose(data.coaction.map, alg.eta),
                     tensor(alg.eta, h.eta))
    rep.expect_equal("counit_unit", compose(coalg.eps, alg.eta), ctx.ident(ctx.unit))
    k = tensor(ctx.ident(h.carrier), coalg.eps)
    projection = BialgebraProjection(h, combined, inj=j, proj=k,
                                     name=f"{h.name or 'H'}x{data.name or 'X'}")
    rep.merge(check_projection(projection), "projection_")
    return rep


def bosonize(h: HopfStructure, xb: CrossedBialgebra):
    """Cross product bialgebra of a crossed module bialgebra, with its
    projection onto H.  When the input has an antipode the result is completed
    to a Hopf algebra by exact convolution solve."""
    xb.verify()
    data = AdmissibleInput.from_crossed_bialgebra(xb)
    rep = check_admissible(h, data)
    rep.raise_if_failed("bosonization input")
    smash, i, j = smash_product(h, data.algebra, data.action)
    cosmash = smash_coproduct(h, data.coalgebra, data.coaction)
    ctx = h.ctx
    level = "bialgebra"
    s = None
    combined = HopfStructure(
        ctx, smash.carrier, m=smash.m, eta=smash.eta, delta=cosmash.delta,
        eps=cosmash.eps, level="bialgebra",
        name=f"{h.name or 'H'}x{data.name or 'X'}",
    )
    if xb.s is not None:
        s = solve_antipode(combined)
        if s is None:
            raise StructureError("cross product of a Hopf input has no antipode")
        combined = combined.with_maps(s=s, level="hopf")
    combined.verify()
    k = tensor(ctx.ident(h.carrier), data.coalgebra.eps)
    proj = BialgebraProjection(h, combined, inj=j, proj=k, name=combined.name)
    proj.verify()
    return combined, proj


def coinvariant_bialgebra(p: BialgebraProjection) -> CrossedBialgebra:
    """The crossed module bialgebra on the coinvariants of a projection."""
    f_img = project_to_category(p)
    x = f_img.underlying
    sp = x.split()
    cm = to_crossed_module(x)
    h = p.h
    hreg_split = regular_hopf_module(h).split()
    ctx = h.ctx
    m_red = compose(sp.p, p.b.m, tensor(sp.i, sp.i))
    eta_red = compose(sp.p, p.b.eta)
    delta_red = compose(tensor(sp.p, sp.p), p.b.delta, sp.i)
    eps_red = compose(p.b.eps, sp.i)
    s_red = None
    if f_img.s is not None:
        s_red = compose(sp.p, f_img.s, sp.i)
    out = CrossedBialgebra(cm, m=m_red, eta=eta_red, delta=delta_red, eps=eps_red,
                           s=s_red, name=f"coinv({p.name or '?'})")
    out.verify()
    return out


def bosonization_report(h: HopfStructure, samples) -> Report:
    """For each crossed module bialgebra X: H x X is admissible, the
    coinvariants of the induced bimodule bialgebra return X verbatim, and
    re-bosonizing reproduces H x X verbatim; admissible-pair morphisms
    factor as id (x) f."""
    rep = Report("bosonization")
    ctx = h.ctx
    for xb in samples:
        nm = xb.name or f"dim{xb.carrier.dim}"
        data = AdmissibleInput.from_crossed_bialgebra(xb)
        adm = check_admissible(h, data)
        rep.merge(adm, f"{nm}_admissible_")
        if not adm.ok:
            continue
        combined, proj = bosonize(h, xb)
        back = coinvariant_bialgebra(proj)
        rep.expect(f"{nm}_carrier", back.carrier.degrees == xb.carrier.degrees)
        rep.expect(f"{nm}_m", matrices_match(back.m, xb.m))
        rep.expect(f"{nm}_eta", matrices_match(back.eta, xb.eta))
        rep.expect(f"{nm}_delta", matrices_match(back.delta, xb.delta))
        rep.expect(f"{nm}_eps", matrices_match(back.eps, xb.eps))
        rep.expect(f"{nm}_action", matrices_match(back.crossed.mu, xb.crossed.mu))
        rep.expect(f"{nm}_coaction", matrices_match(back.crossed.nu, xb.crossed.nu))
        if xb.s is not None and back.s is not None:
            rep.expect(f"{nm}_antipode", matrices_match(back.s, xb.s))
        again, proj2 = bosonize(h, back)
        rep.expect(f"{nm}_rebosonize_m", matrices_match(again.m, combined.m))
        rep.expect(f"{nm}_rebosonize_delta", matrices_match(again.delta, combined.delta))
        # morphism factorization through the smash legs
        idX = ctx.ident(xb.carrier)
        f = idX  # identity is an admissible morphism; extraction must return it
        hmor = tensor(ctx.ident(h.carrier), f)
        extracted = compose(
            tensor(h.eps, idX), hmor, tensor(h.eta, idX)
        )
        rep.expect_equal(f"{nm}_morphism_extraction", extracted, f)
        rep.expect_equal(f"{nm}_morphism_factorizes", tensor(ctx.ident(h.carrier), extracted), hmor)
    return rep
