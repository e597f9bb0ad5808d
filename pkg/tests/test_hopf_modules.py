from fractions import Fraction

import pytest

from braidhopf.errors import StructureError
from braidhopf.examples import group_algebra
from braidhopf.graded import GradedMap, compose, matrices_match, tensor
from braidhopf.structures import (
    ActionMap,
    CoactionMap,
    regular_action,
    regular_coaction,
    trivial_action,
    trivial_coaction,
)
import braidhopf.hopf_modules as hm


def regular(h):
    return hm.regular_hopf_module(h)


def test_regular_module_is_hopf_module(h4, b3, kz2):
    for h in (h4.hopf, b3.hopf, kz2):
        assert hm.check_hopf_module(regular(h)).ok


def test_free_modules_pass_for_random_objects(h4, b3):
    for built in (h4, b3):
        h = built.hopf
        for V in hm.default_plain_objects(h.ctx):
            assert hm.check_hopf_module(hm.free_hopf_module(h, V)).ok


def test_coopposite_twist_fails_compatibility(h4):
    h = h4.hopf
    ctx = h.ctx
    twisted = hm.HopfModule(
        h, h.carrier,
        ActionMap("left", h.m, h),
        CoactionMap("left", compose(ctx.braid(h.carrier, h.carrier), h.delta), h),
    )
    rep = hm.check_hopf_module(twisted)
    assert not rep.ok
    assert not rep.find("compatibility").ok
    assert rep.find("comodule_counit_law").ok  # the twist is still a comodule


def test_projector_on_regular_is_unit_counit(h4, kz2):
    for h in (h4.hopf, kz2):
        proj = hm.coinvariant_projector(regular(h))
        assert proj == compose(h.eta, h.eps)
        sp = regular(h).split()
        assert sp.object.dim == 1


def test_projector_on_free_module(h4):
    h = h4.hopf
    V = h.ctx.space([("v0", ()), ("v1", ())])
    free = hm.free_hopf_module(h, V)
    proj = hm.coinvariant_projector(free)
    assert proj == tensor(compose(h.eta, h.eps), h.ctx.ident(V))
    sp = free.split()
    assert sp.object.dim == V.dim
    assert sp.object.labels == V.labels  # verbatim, including labels


def test_projector_trivial_hopf_algebra(rational_ctx):
    k1 = group_algebra(rational_ctx, 1)
    proj = hm.coinvariant_projector(regular(k1))
    assert proj == rational_ctx.ident(k1.carrier)


def test_zero_dimensional_module(h4):
    h = h4.hopf
    V = h.ctx.space([])
    free = hm.free_hopf_module(h, V)
    assert free.carrier.dim == 0
    assert free.split().object.dim == 0


def test_coinvariants_factor_test_morphisms(h4):
    h = h4.hopf
    V = h.ctx.space([("v0", ())])
    free = hm.free_hopf_module(h, V)
    # a morphism with trivial coaction into the free module: eta (x) id
    f = tensor(h.eta, h.ctx.ident(V))
    sp = hm.coinvariants(free, test_morphisms=[f])
    assert compose(sp.i, sp.p, f) == f


def test_free_embedding_fullness(h4):
    h = h4.hopf
    ctx = h.ctx
    V = ctx.space([("v0", ()), ("v1", ())])
    W = ctx.space([("w0", ()), ("w1", ()), ("w2", ())])
    g = ctx.from_rows(V, W, [[1, 2], [0, 1], [3, 0]])
    f = hm.free_morphism(h, V, W, g)
    assert hm.extract_free_morphism(h, V, W, f) == g
    # identity case
    assert hm.extract_free_morphism(h, V, V, tensor(ctx.ident(h.carrier), ctx.ident(V))) \
        == ctx.ident(V)
    # a non-free morphism is rejected
    bad = f + tensor(compose(h.eta, h.eps), ctx.zero_map(V, W) + g)
    with pytest.raises(StructureError):
        hm.extract_free_morphism(h, V, W, bad)


def test_structure_isomorphisms_and_naturality(h4, b3):
    for built in (h4, b3):
        h = built.hopf
        for x in hm.default_module_samples(h):
            to_x, from_x = hm.structure_isomorphisms(x)
            assert compose(to_x, from_x) == h.ctx.ident(x.carrier)
            free = hm.free_hopf_module(h, x.split().object)
            assert hm.projector_naturality(to_x, free, x).ok


def test_structure_isomorphisms_shapes(h4):
    h = h4.hopf
    # regular module: the coinvariants are the unit object and the cover is
    # literally the identity (strict right unit law)
    reg = hm.regular_hopf_module(h)
    to_x, from_x = hm.structure_isomorphisms(reg)
    assert to_x.is_identity and from_x.is_identity
    # free module: the section is the identity matrix under the verbatim
    # identification of the coinvariants with the fiber
    V = h.ctx.space([("v0", ()), ("v1", ())])
    free = hm.free_hopf_module(h, V)
    to_f, from_f = hm.structure_isomorphisms(free)
    assert matrices_match(from_f, h.ctx.ident(free.carrier))


def test_tensor_over_h_cases(h4, kz2):
    for h in (h4.hopf, kz2):
        reg = regular(h)
        V = h.ctx.space([("v0", ()), ("v1", ())])
        free = hm.free_hopf_module(h, V)
        # N = trivial module: quotient equals the coinvariant projection
        triv = trivial_action(h, h.ctx.unit, "right")
        t = hm.tensor_over_h(triv, free)
        assert t.quotient == free.split().p
        # N = regular right module against M = regular: quotient is epi onto H
        t2 = hm.tensor_over_h(regular_action(h, "right"), reg)
        assert t2.object.degrees == h.carrier.degrees
        # M = regular: lambda recovers the right action composed with counit leg
        t3 = hm.tensor_over_h(regular_action(h, "right"), free)
        f = t3.quotient
        fbar = compose(f, tensor(h.ctx.ident(h.carrier), free.split().i))
        assert compose(fbar, f) == f  # factorization of the quotient itself


def test_cotensor_cases(h4):
    h = h4.hopf
    reg = regular(h)
    c = hm.cotensor_over_h(regular_coaction(h, "right"), reg)
    assert c.object.degrees == h.carrier.degrees
    triv = trivial_coaction(h, h.ctx.unit, "right")
    c2 = hm.cotensor_over_h(triv, reg)
    assert c2.object.dim == 1


def test_composite_block_matrix_oracle(kz2):
    # N = M = H regular over k[Z/2]: the composite maps g^i (x) g^j to
    # g^{i+j} (x) g^{i+j}; hand-computed 4x4 matrix
    h = kz2
    phi = hm.tensor_cotensor_composite(
        regular_action(h, "right"), regular_coaction(h, "right"), regular(h)
    )
    one = Fraction(1)
    assert phi.entries == {(0, 0): one, (3, 1): one, (3, 2): one, (0, 3): one}


def test_composite_trivial_hopf(rational_ctx):
    k1 = group_algebra(rational_ctx, 1)
    phi = hm.tensor_cotensor_composite(
        regular_action(k1, "right"), regular_coaction(k1, "right"), regular(k1)
    )
    assert phi.is_identity


def test_composite_on_free_module(h4):
    h = h4.hopf
    V = h.ctx.space([("v0", ())])
    free = hm.free_hopf_module(h, V)
    phi = hm.tensor_cotensor_composite(
        regular_action(h, "right"), regular_coaction(h, "right"), free
    )
    lam = hm.tensor_over_h(regular_action(h, "right"), free).quotient
    rho = hm.cotensor_over_h(regular_coaction(h, "right"), free).embedding
    assert phi == compose(rho, lam)


def test_unit_right_iso(h4):
    h = h4.hopf
    x = regular(h)
    rho = hm.unit_right_iso(x)
    xt = hm.hopfmod_tensor(x, regular(h))
    assert rho.domain == xt.carrier
    assert hm.is_hopf_module_morphism(rho, xt, x).ok


def test_braided_category_on_samples(h4, b3):
    for built in (h4, b3):
        h = built.hopf
        s = hm.default_module_samples(h)
        rep = hm.braided_category_report(s[0], s[1], s[2])
        assert rep.ok, str(rep)


def test_symmetric_specialization(kz2):
    # trivial braiding and cocommutative: the module-category braiding squares
    # to the identity on tested pairs
    h = kz2
    s = hm.default_module_samples(h)
    x, y = s[1], s[2]
    psi = hm.hopfmod_braiding(x, y)
    psi_back = hm.hopfmod_braiding(y, x)
    assert compose(psi_back, psi) == h.ctx.ident(hm.hopfmod_tensor(x, y).carrier)


def test_structure_theorem(h4, b3, kz2):
    for h in (h4.hopf, b3.hopf, kz2):
        rep = hm.verify_structure_theorem(h)
        assert rep.ok, str(rep)


def test_structure_theorem_includes_nonfree_candidate(h4):
    samples = hm.default_module_samples(h4.hopf)
    assert any("conjugated" in (s.name or "") for s in samples)
    conj = [s for s in samples if "conjugated" in (s.name or "")][0]
    # it is a genuine Hopf module but its structure maps differ from the free one
    assert hm.check_hopf_module(conj).ok
    free = samples[1]
    assert conj.mu != free.mu


def test_twofold_regular_and_free(h4, b3, kz2):
    for h in (h4.hopf, b3.hopf, kz2):
        rep, act = hm.twofold_ops(hm.regular_twofold(h))
        assert rep.ok, str(rep)
    # free two-fold module over a nontrivial right module: coinvariants
    # recover the right module structure verbatim
    h = h4.hopf
    ctx = h.ctx
    V = ctx.space([("v", ())])
    one = ctx.field.one
    # v <- 1 = v, v <- g = -v, v <- x = 0, v <- gx = 0
    act_map = GradedMap(V.tensor(h.carrier), V, {(0, 0): one, (0, 1): -one}, ctx.field)
    right = ActionMap("right", act_map, h)
    tf = hm.free_twofold(h, right)
    rep, coinv_act = hm.twofold_ops(tf)
    assert rep.ok, str(rep)
    assert matrices_match(coinv_act.map, act_map)


def test_trivial_hopf_twofold(rational_ctx):
    k1 = group_algebra(rational_ctx, 1)
    rep, act = hm.twofold_ops(hm.regular_twofold(k1))
    assert rep.ok
    assert act.map.is_identity


def test_mirror_left_module_of_right_action(h4):
    # a right module becomes a left module over the opposite algebra in the
    # mirror context; checked through the raw law with the opposite product
    h = h4.hopf
    ctx = h.ctx
    mu_r = h.m  # right regular action
    psi_inv = ctx.braid_inv(h.carrier, h.carrier)
    mu_l = compose(mu_r, psi_inv)  # left action of the mirror-opposite algebra
    m_op = compose(h.m, psi_inv)
    idH = ctx.ident(h.carrier)
    assert compose(mu_l, tensor(m_op, idH)) == compose(mu_l, tensor(idH, mu_l))
    assert compose(mu_l, tensor(h.eta, idH)) == idH
