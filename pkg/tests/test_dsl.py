import pytest
from hypothesis import given, settings, strategies as st

from braidhopf.errors import DslError
from braidhopf.graded import compose, tensor
from braidhopf import dsl


@pytest.fixture()
def env(h4):
    e = dsl.Environment(h4.hopf.ctx)
    e.bind_structure("H", h4.hopf)
    return e


def test_parse_compose_chain():
    t = dsl.parse("m o (S x id(H)) o delta")
    assert isinstance(t, dsl.Compose)
    assert len(t.parts) == 3
    assert t.parts[0] == dsl.Gen("m")
    assert t.parts[1] == dsl.Tensor((dsl.Gen("S"), dsl.Id(dsl.ObjName("H"))))


def test_parse_compatibility_shape():
    t = dsl.parse("(m x mu_l) o (id(H) x braid(H,H) x id(X)) o (delta x nu_l)")
    expected = dsl.Compose((
        dsl.Tensor((dsl.Gen("m"), dsl.Gen("mu_l"))),
        dsl.Tensor((
            dsl.Id(dsl.ObjName("H")),
            dsl.Braid(dsl.ObjName("H"), dsl.ObjName("H"), False),
            dsl.Id(dsl.ObjName("X")),
        )),
        dsl.Tensor((dsl.Gen("delta"), dsl.Gen("nu_l"))),
    ))
    assert t == expected


def test_parse_errors():
    with pytest.raises(DslError) as ei:
        dsl.parse("m o o delta")
    assert ei.value.pos == 4
    with pytest.raises(DslError):
        dsl.parse("")
    with pytest.raises(DslError):
        dsl.parse("m o (S x id(H)")
    with pytest.raises(DslError):
        dsl.parse("m delta")


def test_evaluate_unit_law(env, h4):
    h = h4.hopf
    out = dsl.evaluate(dsl.parse("m o (eta x id(H))"), env)
    assert out == h.ctx.ident(h.carrier)


def test_evaluate_antipode_identity(env, h4):
    h = h4.hopf
    out = dsl.evaluate(dsl.parse("m o (S x id(H)) o delta"), env)
    assert out == compose(h.eta, h.eps)
    assert out.nnz() == 2  # rank one: unit row times counit


def test_projector_on_regular_module(env, h4):
    h = h4.hopf
    env.bind_module("X", h.carrier, {"act_l": h.m, "coact_l": h.delta})
    out = dsl.evaluate(dsl.parse("act_l o (S x id(X)) o coact_l"), env)
    assert out == compose(h.eta, h.eps)


def test_type_error_names_subterm(env):
    with pytest.raises(DslError) as ei:
        dsl.evaluate(dsl.parse("delta o delta"), env)
    assert "delta" in str(ei.value)
    assert "dim" in str(ei.value)


def test_unknown_names(env):
    with pytest.raises(DslError):
        dsl.evaluate(dsl.parse("nonsense"), env)
    with pytest.raises(DslError):
        dsl.evaluate(dsl.parse("id(Nowhere)"), env)


def test_ambiguity(h4, kz2):
    e = dsl.Environment(h4.hopf.ctx)
    e.bind_structure("H", h4.hopf)
    e.bind_structure("K", kz2)
    with pytest.raises(DslError) as ei:
        dsl.evaluate(dsl.parse("m"), e)
    assert "ambiguous" in str(ei.value)
    assert dsl.evaluate(dsl.parse("H.m"), e) == h4.hopf.m


def test_assert_equal_reports(env, h4):
    rep = dsl.assert_equal("m o (S x id(H)) o delta", "eta o eps", env)
    assert rep.ok
    rep2 = dsl.assert_equal("m", "m o braid(H, H)", env)
    assert not rep2.ok
    assert "first differing entry" in rep2.items[0].note
    rep3 = dsl.assert_equal("m", "delta", env)
    assert not rep3.ok and "shape" in rep3.items[0].name


def test_braiding_evaluation(b3):
    e = dsl.Environment(b3.hopf.ctx)
    e.bind_structure("B", b3.hopf)
    psi = dsl.evaluate(dsl.parse("braid(B, B)"), e)
    assert psi == b3.hopf.ctx.braid(b3.hopf.carrier, b3.hopf.carrier)
    roundtrip = dsl.assert_equal("braid_inv(B, B) o braid(B, B)", "id(B x B)", e)
    assert roundtrip.ok
    swapped = dsl.assert_equal("braid(B, B)", "braid_inv(B, B)", e)
    assert not swapped.ok


# -- printer roundtrip property ---------------------------------------------------


_names = st.sampled_from(["m", "eta", "delta", "eps", "S", "H.m", "act_l", "f2"])
_objs = st.recursive(
    st.sampled_from(["H", "X", "Y", "1"]).map(dsl.ObjName),
    lambda inner: st.lists(inner, min_size=2, max_size=3).map(
        lambda ps: dsl.ObjTensor(tuple(ps))
    ),
    max_leaves=4,
)


def _atoms():
    return st.one_of(
        _names.map(dsl.Gen),
        _objs.map(dsl.Id),
        st.tuples(_objs, _objs, st.booleans()).map(lambda t: dsl.Braid(*t)),
    )


_terms = st.recursive(
    _atoms(),
    lambda inner: st.one_of(
        st.lists(inner, min_size=2, max_size=3).map(lambda ps: dsl.Compose(tuple(ps))),
        st.lists(inner, min_size=2, max_size=3).map(lambda ps: dsl.Tensor(tuple(ps))),
    ),
    max_leaves=8,
)


@given(_terms)
@settings(max_examples=200, deadline=None)
def test_parse_print_roundtrip(term):
    assert dsl.parse(dsl.print_term(term)) == term


# -- evaluation is a monoidal functor ----------------------------------------------


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_evaluate_compositional(h4, data):
    h = h4.hopf
    e = dsl.Environment(h.ctx)
    e.bind_structure("H", h)
    # random well-typed compose/tensor combinations of unary generators
    unary = ["S", "m o (eta x id(H))", "m o (id(H) x eta)", "id(H)"]
    a = data.draw(st.sampled_from(unary))
    b = data.draw(st.sampled_from(unary))
    ta, tb = dsl.parse(a), dsl.parse(b)
    assert dsl.evaluate(dsl.Compose((ta, tb)), e) == compose(
        dsl.evaluate(ta, e), dsl.evaluate(tb, e)
    )
    assert dsl.evaluate(dsl.Tensor((ta, tb)), e) == tensor(
        dsl.evaluate(ta, e), dsl.evaluate(tb, e)
    )
