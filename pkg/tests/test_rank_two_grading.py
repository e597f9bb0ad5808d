"""The whole stack over a rank-2 grading group with a genuinely asymmetric
bicharacter over the rationals: chi(e1,e2) = -1 but chi(e2,e1) = +1, so the
braiding is not symmetric even though every coefficient is +-1."""

import pytest

from braidhopf.fields import RationalField
from braidhopf.graded import BraidedContext, GradedMap
from braidhopf.structures import HopfStructure, check_structure
import braidhopf.crossed_modules as cm
import braidhopf.hopf_bimodules as hb
import braidhopf.hopf_modules as hm
import braidhopf.projections as pr


@pytest.fixture(scope="module")
def superline():
    ctx = BraidedContext(RationalField(), (2, 2), [[-1, -1], [1, -1]])
    assert not ctx.is_symmetric
    one = ctx.field.one
    X = ctx.space([("1", (0, 0)), ("x", (1, 0))])
    h = HopfStructure(
        ctx, X,
        m=GradedMap(X.tensor(X), X, {(0, 0): one, (1, 1): one, (1, 2): one}, ctx.field),
        eta=GradedMap(ctx.unit, X, {(0, 0): one}, ctx.field),
        delta=GradedMap(X, X.tensor(X), {(0, 0): one, (1, 1): one, (2, 1): one}, ctx.field),
        eps=GradedMap(X, ctx.unit, {(0, 0): one}, ctx.field),
        s=GradedMap(X, X, {(0, 0): one, (1, 1): -one}, ctx.field),
        level="hopf", name="superline",
    )
    return h


def test_hopf_axioms(superline):
    assert check_structure(superline).ok


def test_structure_theorem(superline):
    assert hm.verify_structure_theorem(superline).ok


def test_yd_suite(superline):
    h_ad, h_coad = cm.adjoint_crossed_module(superline)
    unit = cm.unit_crossed_module(superline)
    assert cm.yd_braiding_report(h_ad, h_ad, unit).ok
    assert cm.yang_baxter_report(h_ad).ok
    assert cm.side_conversion_report(h_ad).ok


def test_bimodule_equivalence_and_antipode(superline):
    h = superline
    h_ad, _ = cm.adjoint_crossed_module(h)
    reg = hb.regular_hopf_bimodule(h)
    cp = hb.cross_product(h, h_ad)
    assert hb.verify_equivalence(h, bimodules=[reg, cp],
                                 crossed=[cm.unit_crossed_module(h), h_ad]).ok
    assert hb.hbm_braiding_report(cp, cp, reg).ok
    assert pr.relative_antipode(reg) == h.s
    assert pr.relative_antipode_report(cp).ok
