"""Scenario files: a JSON format declaring a braided context, objects,
morphisms, structures and a list of named checks; a loader that validates
everything before any check runs; a runner; and deterministic human and
machine report emitters.

Exactness survives the I/O boundary: scalar literals are strings like "3" or
"-2/7" (or plain integers), and any floating point literal anywhere in the
file is a load error.  Machine reports are byte-identical across runs of the
same scenario with the same engine version; wall-clock timing appears only in
the human format.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field as dc_field

from . import __version__
from .checks import Report
from .errors import EngineError, ScenarioError
from .fields import PrimeField, RationalField
from .graded import BraidedContext, GradedMap, compose, split_idempotent, tensor
from .structures import (
    ActionMap,
    CoactionMap,
    HopfStructure,
    antipode_properties,
    check_structure,
    check_module,
    mirror_opposites,
    pullback_bimodule,
    regular_action,
    regular_coaction,
    trivial_action,
)
from . import dsl
from . import examples as ex
from . import hopf_modules as hm
from . import crossed_modules as cm
from . import hopf_bimodules as hb
from . import projections as pr

SCENARIO_SCHEMA = "braidhopf-scenario/1"
REPORT_SCHEMA = "braidhopf-report/1"


def _reject_float(s):
    raise ScenarioError(f"floating point literal {s!r} is not allowed; use exact literals")


@dataclass
class CheckSpec:
    name: str
    kind: str
    params: dict
    expect: str = "pass"


@dataclass
class Scenario:
    name: str
    digest: str
    ctx: BraidedContext
    env: dsl.Environment
    structures: dict = dc_field(default_factory=dict)
    hopf_modules: dict = dc_field(default_factory=dict)
    crossed_modules: dict = dc_field(default_factory=dict)
    hopf_bimodules: dict = dc_field(default_factory=dict)
    projections: dict = dc_field(default_factory=dict)
    examples: dict = dc_field(default_factory=dict)
    checks: list = dc_field(default_factory=list)


def _field_of(spec, loc):
    kind = spec.get("kind")
    if kind == "rational":
        return RationalField()
    if kind == "prime":
        try:
            return PrimeField(int(spec["p"]))
        except EngineError as exc:
            raise ScenarioError(str(exc), loc)
        except KeyError:
            raise ScenarioError("prime field needs 'p'", loc)
    raise ScenarioError(f"unknown field kind {kind!r}", loc)


def load(path) -> Scenario:
    """Parse and fully validate a scenario file; every declared structure with
    verify=true (the default) must pass its validator before any check runs."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario: {exc}")
    digest = hashlib.sha256(raw).hexdigest()
    try:
        doc = json.loads(raw.decode("utf-8"), parse_float=_reject_float)
    except ScenarioError:
        raise
    except Exception as exc:
        raise ScenarioError(f"not valid JSON: {exc}")
    if not isinstance(doc, dict) or doc.get("schema") != SCENARIO_SCHEMA:
        raise ScenarioError(f"schema must be {SCENARIO_SCHEMA!r}", "schema")
    name = doc.get("name") or "scenario"
    field = _field_of(doc.get("field", {"kind": "rational"}), "field")
    signature = tuple(int(n) for n in doc.get("group", []))
    chi_spec = doc.get("bicharacter")
    try:
        chi_table = None
        if chi_spec is not None:
            chi_table = [[field.of(v) for v in row] for row in chi_spec]
        ctx = BraidedContext(field, signature, chi_table)
    except EngineError as exc:
        raise ScenarioError(str(exc), "bicharacter")
    env = dsl.Environment(ctx)
    sc = Scenario(name=name, digest=digest, ctx=ctx, env=env)

    for oname, basis in doc.get("objects", {}).items():
        try:
            for lbl, _deg in basis:
                if "@" in str(lbl):
                    raise ScenarioError("label may not contain '@'", f"objects.{oname}")
            space = ctx.space([(lbl, tuple(deg)) for lbl, deg in basis])
            env.bind_space(oname, space)
        except ScenarioError:
            raise
        except EngineError as exc:
            raise ScenarioError(str(exc), f"objects.{oname}")

    for ename, spec in doc.get("examples", {}).items():
        kind = spec.get("kind")
        params = {k: v for k, v in spec.items() if k != "kind"}
        try:
            built = ex.build(ex.ExampleSpec(kind, params), ctx)
        except EngineError as exc:
            raise ScenarioError(str(exc), f"examples.{ename}")
        sc.examples[ename] = built
        if kind in ("group_algebra", "dual_group_algebra", "sweedler",
                    "braided_line", "taft_via_bosonization"):
            sc.structures[ename] = built.hopf
            env.bind_structure(ename, built.hopf)
            if kind == "taft_via_bosonization":
                proj = built.extras["projection"]
                grp = built.extras["group_hopf"]
                sc.projections[f"{ename}.projection"] = proj
                sc.structures[f"{ename}.H"] = grp
                env.bind_structure(f"{ename}.H", grp)
        elif kind == "braided_line_yd":
            grp = built.extras["group_hopf"]
            sc.structures[f"{ename}.H"] = grp
            env.bind_structure(f"{ename}.H", grp)
            env.bind_module(ename, built.hopf.carrier, {
                "act_r": built.extras["action"].map,
                "coact_r": built.extras["coaction"].map,
            })
            env.bind_map(f"{ename}.m", built.hopf.m)
            env.bind_map(f"{ename}.delta", built.hopf.delta)
            env.bind_map(f"{ename}.eta", built.hopf.eta)
            env.bind_map(f"{ename}.eps", built.hopf.eps)
        elif kind == "perturbed":
            sc.structures[ename] = built.hopf  # deliberately unvalidated
            env.bind_structure(ename, built.hopf)

    for mname, spec in doc.get("morphisms", {}).items():
        try:
            if "expr" in spec:
                mp = dsl.evaluate(dsl.parse(spec["expr"]), env)
            else:
                dom = env.lookup_space(spec["domain"])
                cod = env.lookup_space(spec["codomain"])
                mp = ctx.from_rows(dom, cod, spec["rows"])
            env.bind_map(mname, mp)
        except EngineError as exc:
            raise ScenarioError(str(exc), f"morphisms.{mname}")

    for sname, spec in doc.get("structures", {}).items():
        try:
            carrier = env.lookup_space(spec["carrier"])
            maps = {}
            for key in ("m", "eta", "delta", "eps", "s"):
                if key in spec:
                    maps[key] = env.lookup_map(spec[key])
            h = HopfStructure(ctx, carrier, level=spec.get("level", "bialgebra"),
                              name=sname, **maps)
            if spec.get("verify", True):
                check_structure(h).raise_if_failed(sname)
                h._checked = True
            sc.structures[sname] = h
            env.bind_structure(sname, h)
        except ScenarioError:
            raise
        except EngineError as exc:
            raise ScenarioError(str(exc), f"structures.{sname}")

    def _over(spec, loc):
        oname = spec.get("over")
        if oname not in sc.structures:
            raise ScenarioError(f"unknown structure {oname!r}", loc)
        return sc.structures[oname]

    for mname, spec in doc.get("hopf_modules", {}).items():
        loc = f"hopf_modules.{mname}"
        try:
            h = _over(spec, loc)
            carrier = env.lookup_space(spec["carrier"])
            mod = hm.HopfModule(
                h, carrier,
                ActionMap("left", env.lookup_map(spec["action"]), h),
                CoactionMap("left", env.lookup_map(spec["coaction"]), h),
                name=mname,
            )
            if spec.get("verify", True):
                hm.check_hopf_module(mod).raise_if_failed(mname)
                mod._checked = True
            sc.hopf_modules[mname] = mod
            env.bind_module(mname, carrier, {"act_l": mod.mu, "coact_l": mod.nu})
        except ScenarioError:
            raise
        except EngineError as exc:
            raise ScenarioError(str(exc), loc)

    for cname, spec in doc.get("crossed_modules", {}).items():
        loc = f"crossed_modules.{cname}"
        try:
            h = _over(spec, loc)
            carrier = env.lookup_space(spec["carrier"])
            mod = cm.CrossedModule(
                h, carrier,
                ActionMap("right", env.lookup_map(spec["action"]), h),
                CoactionMap("right", env.lookup_map(spec["coaction"]), h),
                name=cname,
            )
            if spec.get("verify", True):
                cm.check_crossed_module(mod).raise_if_failed(cname)
                mod._checked = True
            sc.crossed_modules[cname] = mod
            env.bind_module(cname, carrier, {"act_r": mod.mu, "coact_r": mod.nu})
        except ScenarioError:
            raise
        except EngineError as exc:
            raise ScenarioError(str(exc), loc)

    for bname, spec in doc.get("hopf_bimodules", {}).items():
        loc = f"hopf_bimodules.{bname}"
        try:
            h = _over(spec, loc)
            carrier = env.lookup_space(spec["carrier"])
            mod = hb.HopfBimodule(
                h, carrier,
                ActionMap("left", env.lookup_map(spec["action_left"]), h),
                ActionMap("right", env.lookup_map(spec["action_right"]), h),
                CoactionMap("left", env.lookup_map(spec["coaction_left"]), h),
                CoactionMap("right", env.lookup_map(spec["coaction_right"]), h),
                name=bname,
            )
            if spec.get("verify", True):
                hb.check_hopf_bimodule(mod).raise_if_failed(bname)
                mod._checked = True
            sc.hopf_bimodules[bname] = mod
            env.bind_module(bname, carrier, {
                "act_l": mod.mu_l.map, "act_r": mod.mu_r.map,
                "coact_l": mod.nu_l.map, "coact_r": mod.nu_r.map,
            })
        except ScenarioError:
            raise
        except EngineError as exc:
            raise ScenarioError(str(exc), loc)

    for pname, spec in doc.get("projections", {}).items():
        loc = f"projections.{pname}"
        try:
            hname, bname = spec["h"], spec["b"]
            for n in (hname, bname):
                if n not in sc.structures:
                    raise ScenarioError(f"unknown structure {n!r}", loc)
            p = pr.BialgebraProjection(
                sc.structures[hname], sc.structures[bname],
                env.lookup_map(spec["inj"]), env.lookup_map(spec["proj"]), name=pname,
            )
            if spec.get("verify", True):
                pr.check_projection(p).raise_if_failed(pname)
            sc.projections[pname] = p
        except ScenarioError:
            raise
        except EngineError as exc:
            raise ScenarioError(str(exc), loc)

    seen = set()
    for k, spec in enumerate(doc.get("checks", [])):
        loc = f"checks[{k}]"
        cname = spec.get("name")
        kind = spec.get("kind")
        if not cname or not kind:
            raise ScenarioError("check needs 'name' and 'kind'", loc)
        if cname in seen:
            raise ScenarioError(f"duplicate check name {cname!r}", loc)
        seen.add(cname)
        if kind not in CHECK_KINDS:
            raise ScenarioError(f"unknown check kind {kind!r}", loc)
        expect = spec.get("expect", "pass")
        if expect not in ("pass", "fail"):
            raise ScenarioError(f"expect must be 'pass' or 'fail', got {expect!r}", loc)
        params = {k2: v for k2, v in spec.items() if k2 not in ("name", "kind", "expect")}
        sc.checks.append(CheckSpec(cname, kind, params, expect))
    return sc


# -- check runners ----------------------------------------------------------------


def _structure(sc, params, key="structure"):
    nm = params.get(key)
    if nm not in sc.structures:
        raise ScenarioError(f"unknown structure {nm!r}")
    return sc.structures[nm]


def _yd_bundle(sc, params):
    nm = params.get("yd")
    if nm not in sc.examples or "yd_bialgebra" not in getattr(sc.examples[nm], "extras", {}):
        built = sc.examples.get(nm)
        if built is None or "action" not in built.extras:
            raise ScenarioError(f"{nm!r} is not a Yetter-Drinfeld example")
        crossed = cm.CrossedModule(
            built.extras["group_hopf"], built.hopf.carrier,
            built.extras["action"], built.extras["coaction"], name=nm,
        )
        cb = cm.CrossedBialgebra(crossed, m=built.hopf.m, eta=built.hopf.eta,
                                 delta=built.hopf.delta, eps=built.hopf.eps,
                                 s=built.hopf.s, name=nm)
        return built.extras["group_hopf"], cb
    built = sc.examples[nm]
    return built.extras["group_hopf"], built.extras["yd_bialgebra"]


def run_structure(sc, params):
    h = _structure(sc, params)
    rep = check_structure(h)
    if rep.ok and h.level == "hopf":
        rep.merge(antipode_properties(h), "antipode_")
    return rep


def run_mirror_suite(sc, params):
    h = _structure(sc, params)
    h_op, h_cop, _mctx = mirror_opposites(h)
    rep = Report("mirror opposites")
    rep.merge(check_structure(h_op), "opposite_algebra_")
    rep.merge(check_structure(h_cop), "opposite_coalgebra_")
    return rep


def run_pullback_adjoint(sc, params):
    h = _structure(sc, params)
    ctx = h.ctx
    rep = Report("pullback and adjoint")
    bim, ad = pullback_bimodule(h, ctx.ident(h.carrier), h)
    rep.merge(check_module(ad), "identity_pullback_")
    rep.expect_equal("identity_unit_law",
                     compose(ad.map, tensor(ctx.ident(h.carrier), h.eta)),
                     ctx.ident(h.carrier))
    trivial = compose(h.eta, h.eps)
    bim2, ad2 = pullback_bimodule(h, trivial, h)
    rep.merge(check_module(ad2), "trivial_pullback_")
    rep.expect_equal("trivial_is_counit_action", ad2.map,
                     tensor(ctx.ident(h.carrier), h.eps))
    return rep


def run_hopf_module(sc, params):
    nm = params.get("module")
    if nm not in sc.hopf_modules:
        raise ScenarioError(f"unknown Hopf module {nm!r}")
    return hm.check_hopf_module(sc.hopf_modules[nm])


def run_crossed_module(sc, params):
    nm = params.get("crossed")
    if nm not in sc.crossed_modules:
        raise ScenarioError(f"unknown crossed module {nm!r}")
    return cm.check_crossed_module(sc.crossed_modules[nm])


def run_hopf_bimodule(sc, params):
    nm = params.get("bimodule")
    if nm not in sc.hopf_bimodules:
        raise ScenarioError(f"unknown Hopf bimodule {nm!r}")
    return hb.check_hopf_bimodule(sc.hopf_bimodules[nm])


def run_dsl_equal(sc, params):
    return dsl.assert_equal(params["lhs"], params["rhs"], sc.env)


def _pseudo_random_map(ctx, rng, X, Y):
    entries = {}
    for j in range(X.dim):
        for i in range(Y.dim):
            if Y.degree(i) == X.degree(j) and rng.random() < 0.7:
                v = ctx.field.of(rng.randint(-2, 2))
                if v:
                    entries[(i, j)] = v
    return GradedMap(X, Y, entries, ctx.field)


def run_category_axioms(sc, params):
    """Hexagons and naturality of the braiding, and the splitting roundtrip,
    on deterministic pseudo-random data over the declared objects."""
    ctx = sc.ctx
    rng = random.Random(int(params.get("seed", 0)))
    names = params.get("objects")
    if names:
        spaces = [sc.env.lookup_space(n) for n in names]
    else:
        spaces = hm.default_plain_objects(ctx)
    while len(spaces) < 3:
        spaces = spaces + spaces
    X, Y, Z = spaces[0], spaces[1], spaces[2]
    rep = Report("category axioms")
    idX, idY, idZ = ctx.ident(X), ctx.ident(Y), ctx.ident(Z)
    rep.expect_equal(
        "hexagon_right", ctx.braid(X, Y.tensor(Z)),
        compose(tensor(idY, ctx.braid(X, Z)), tensor(ctx.braid(X, Y), idZ)),
    )
    rep.expect_equal(
        "hexagon_left", ctx.braid(X.tensor(Y), Z),
        compose(tensor(ctx.braid(X, Z), idY), tensor(idX, ctx.braid(Y, Z))),
    )
    rep.expect_equal(
        "inverse", compose(ctx.braid_inv(X, Y), ctx.braid(X, Y)),
        ctx.ident(X.tensor(Y)),
    )
    f = _pseudo_random_map(ctx, rng, X, Y)
    g = _pseudo_random_map(ctx, rng, Y, Z)
    rep.expect_equal(
        "naturality", compose(ctx.braid(Y, Z), tensor(f, g)),
        compose(tensor(g, f), ctx.braid(X, Y)),
    )
    f1 = _pseudo_random_map(ctx, rng, X, Y)
    f2 = _pseudo_random_map(ctx, rng, Y, Z)
    g1 = _pseudo_random_map(ctx, rng, Y, X)
    g2 = _pseudo_random_map(ctx, rng, X, Y)
    rep.expect_equal(
        "tensor_functorial", tensor(compose(f2, f1), compose(g2, g1)),
        compose(tensor(f2, g2), tensor(f1, g1)),
    )
    # splitting roundtrip on a conjugated diagonal idempotent
    one = ctx.field.one
    t_entries = {(i, i): one for i in range(X.dim)}
    for _, idx in X.blocks().items():
        if len(idx) >= 2:
            t_entries[(idx[0], idx[1])] = one
    T = GradedMap(X, X, t_entries, ctx.field)
    from .graded import invert

    Tinv = invert(T)
    D = GradedMap(X, X, {(i, i): one for i in range(0, X.dim, 2)}, ctx.field)
    e = compose(T, D, Tinv)
    sp = split_idempotent(e)
    rep.expect_equal("split_recovers", compose(sp.i, sp.p), e)
    rep.expect_equal("split_section", compose(sp.p, sp.i), ctx.ident(sp.object))
    sp2 = split_idempotent(e)
    rep.expect("split_deterministic", sp2.i == sp.i and sp2.p == sp.p)
    return rep


def _samples(sc, params):
    h = _structure(sc, params, key="over")
    return h, hm.default_module_samples(h, int(params.get("max_dim", 3)))


def run_pi_suite(sc, params):
    h, samples = _samples(sc, params)
    extra = [sc.hopf_modules[n] for n in params.get("modules", [])]
    rep = Report("coinvariant projectors")
    for x in samples + extra:
        nm = x.name or f"dim{x.carrier.dim}"
        x.split()  # asserts idempotency, trivialized legs, (co)equalizer legs
        rep.expect(f"{nm}_projector_and_legs", True)
    return rep


def run_structure_theorem(sc, params):
    h = _structure(sc, params, key="over")
    return hm.verify_structure_theorem(h)


def run_braided_module_category(sc, params):
    h, samples = _samples(sc, params)
    x, y, z = samples[0], samples[1], samples[2 % len(samples)]
    to_x, _ = hm.structure_isomorphisms(x)
    free = hm.free_hopf_module(h, x.split().object)
    return hm.braided_category_report(x, y, z, morphisms=[(to_x, free, x)])


def run_tensor_over_h(sc, params):
    h, samples = _samples(sc, params)
    m = samples[1]
    rep = Report("tensor and cotensor over H")
    n_act = regular_action(h, "right")
    n_coact = regular_coaction(h, "right")
    t = hm.tensor_over_h(n_act, m)
    rep.expect("quotient_built", True)
    c = hm.cotensor_over_h(n_coact, m)
    rep.expect("embedding_built", True)
    hm.tensor_cotensor_composite(n_act, n_coact, m)
    rep.expect("composite_equals_embedding_after_quotient", True)
    triv = trivial_action(h, h.ctx.unit, "right")
    t2 = hm.tensor_over_h(triv, m)
    rep.expect_equal("trivial_module_gives_coinvariants", t2.quotient, m.split().p)
    reg = samples[0]
    t3 = hm.tensor_over_h(n_act, reg)
    rep.expect("unit_object_case", t3.object.degrees == h.carrier.degrees)
    return rep


def run_twofold(sc, params):
    h = _structure(sc, params, key="over")
    rep = Report("two-fold modules")
    r1, _ = hm.twofold_ops(hm.regular_twofold(h))
    rep.merge(r1, "regular_")
    r2, act = hm.twofold_ops(hm.free_twofold(h, regular_action(h, "right")))
    rep.merge(r2, "free_")
    return rep


def run_yd_suite(sc, params):
    h = _structure(sc, params, key="over")
    h_ad, h_coad = cm.adjoint_crossed_module(h)
    unit = cm.unit_crossed_module(h)
    rep = Report("Yetter-Drinfeld suite")
    rep.merge(cm.check_crossed_module(h_ad), "adjoint_")
    rep.merge(cm.check_crossed_module(h_coad), "coadjoint_")
    eta_mor = h.eta
    rep.merge(
        cm.yd_braiding_report(h_ad, h_ad, unit, morphisms=[(eta_mor, unit, h_ad)]),
        "braiding_",
    )
    rep.merge(cm.yang_baxter_report(h_ad), "")
    return rep


def run_side_conversion(sc, params):
    h = _structure(sc, params, key="over")
    h_ad, _ = cm.adjoint_crossed_module(h)
    return cm.side_conversion_report(h_ad)


def run_bimodule_equivalence(sc, params):
    h = _structure(sc, params, key="over")
    h_ad, _ = cm.adjoint_crossed_module(h)
    unit = cm.unit_crossed_module(h)
    reg = hb.regular_hopf_bimodule(h)
    cp = hb.cross_product(h, h_ad)
    return hb.verify_equivalence(h, bimodules=[reg, cp], crossed=[unit, h_ad])


def run_bimodule_braiding(sc, params):
    h = _structure(sc, params, key="over")
    h_ad, _ = cm.adjoint_crossed_module(h)
    reg = hb.regular_hopf_bimodule(h)
    cp = hb.cross_product(h, h_ad)
    return hb.hbm_braiding_report(cp, cp, reg)


def run_projected_braiding(sc, params):
    h = _structure(sc, params, key="over")
    reg = hb.regular_hopf_bimodule(h)
    _, rep = hb.projected_braiding(reg, reg)
    h_ad, _ = cm.adjoint_crossed_module(h)
    cp = hb.cross_product(h, h_ad)
    _, rep2 = hb.projected_braiding(cp, cp)
    rep.merge(rep2, "cross_product_")
    return rep


def run_relative_antipode(sc, params):
    h = _structure(sc, params, key="over")
    reg = hb.regular_hopf_bimodule(h)
    rep = Report("relative antipode suite")
    rep.expect_equal("regular_is_antipode", pr.relative_antipode(reg), h.s)
    rep.merge(pr.relative_antipode_report(reg, reg), "regular_")
    h_ad, _ = cm.adjoint_crossed_module(h)
    cp = hb.cross_product(h, h_ad)
    rep.merge(pr.relative_antipode_report(cp), "cross_product_")
    return rep


def run_projection_roundtrip(sc, params):
    names = params.get("projections", [])
    ps = []
    for n in names:
        if n not in sc.projections:
            raise ScenarioError(f"unknown projection {n!r}")
        ps.append(sc.projections[n])
    if params.get("include_trivial", True):
        h = ps[0].h if ps else _structure(sc, params, key="over")
        idh = h.ctx.ident(h.carrier)
        ps.insert(0, pr.BialgebraProjection(h, h, idh, idh, name="trivial"))
    return pr.projection_theorem_report(ps)


def run_smash_universal(sc, params):
    grp, cb = _yd_bundle(sc, params)
    data = pr.AdmissibleInput.from_crossed_bialgebra(cb)
    smash, i, j = pr.smash_product(grp, data.algebra, data.action)
    smash2, _, _ = pr.smash_product(grp, data.algebra, data.action,
                                    test_morphisms=[(smash, j, i)])
    rep = Report("smash universal property")
    rep.expect("universal_clauses", True)  # smash_product raises on failure
    rep.merge(check_structure(smash), "algebra_")
    return rep


def run_admissible_pair(sc, params):
    grp, cb = _yd_bundle(sc, params)
    data = pr.AdmissibleInput.from_crossed_bialgebra(cb)
    return pr.check_admissible(grp, data)


def run_bosonization(sc, params):
    grp, cb = _yd_bundle(sc, params)
    rep = Report("bosonization")
    rep.merge(cm.check_crossed_bialgebra(cb), "input_")
    rep.merge(pr.bosonization_report(grp, [cb]), "")
    oracle = params.get("oracle")
    if oracle == "taft":
        n = int(params["n"])
        p = int(params["p"])
        combined, _proj = pr.bosonize(grp, cb)
        ora = ex.taft_oracle(n, p)
        for key in ("m", "delta", "eta", "eps", "s"):
            rep.expect(f"oracle_{key}", dict(getattr(combined, key).entries) == ora[key])
    return rep


def run_detection_power(sc, params):
    """Every degree-legal single-entry perturbation of each structure map must
    be caught by the axiom checker; degree-illegal ones are caught at map
    construction."""
    base_spec = params.get("base")
    built = ex.build(ex.ExampleSpec(base_spec["kind"],
                                    {k: v for k, v in base_spec.items() if k != "kind"}),
                     sc.ctx)
    h = built.hopf
    delta = params.get("delta", 1)
    rep = Report("detection power")
    total = caught_construction = 0
    missed = []
    for which in ex.MAP_NAMES:
        base_map = getattr(h, which)
        if base_map is None:
            continue
        for i in range(base_map.codomain.dim):
            for j in range(base_map.domain.dim):
                total += 1
                try:
                    cand = ex.perturb(h, which, (i, j), delta)
                except EngineError:
                    caught_construction += 1
                    continue
                if check_structure(cand).ok:
                    missed.append((which, i, j))
    rep.add(
        "all_perturbations_caught", not missed,
        note=f"{total} perturbations, {caught_construction} rejected at construction"
             + (f"; missed {missed[:5]}" if missed else ""),
    )
    unchanged = ex.perturb(h, "m", (0, 0), 0)
    rep.expect("zero_delta_is_noop", check_structure(unchanged).ok)
    return rep


CHECK_KINDS = {
    "structure": run_structure,
    "mirror_suite": run_mirror_suite,
    "pullback_adjoint": run_pullback_adjoint,
    "hopf_module": run_hopf_module,
    "crossed_module": run_crossed_module,
    "hopf_bimodule": run_hopf_bimodule,
    "dsl_equal": run_dsl_equal,
    "category_axioms": run_category_axioms,
    "pi_suite": run_pi_suite,
    "structure_theorem": run_structure_theorem,
    "braided_module_category": run_braided_module_category,
    "tensor_over_h": run_tensor_over_h,
    "twofold": run_twofold,
    "yd_suite": run_yd_suite,
    "side_conversion": run_side_conversion,
    "bimodule_equivalence": run_bimodule_equivalence,
    "bimodule_braiding": run_bimodule_braiding,
    "projected_braiding": run_projected_braiding,
    "relative_antipode": run_relative_antipode,
    "projection_roundtrip": run_projection_roundtrip,
    "smash_universal": run_smash_universal,
    "admissible_pair": run_admissible_pair,
    "bosonization": run_bosonization,
    "detection_power": run_detection_power,
}


# -- running and reporting ----------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    kind: str
    expect: str
    status: str  # "pass" | "fail" | "error"
    ok: bool     # status matches expectation
    items: list
    error: str = ""
    seconds: float = 0.0


@dataclass
class RunReport:
    scenario: str
    digest: str
    engine: str
    field: str
    group: tuple
    results: list
    seconds: float = 0.0

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    @property
    def summary(self):
        passed = sum(1 for r in self.results if r.ok)
        return passed, len(self.results)


def run(sc: Scenario, selection=None) -> RunReport:
    """Execute the selected checks (default: all), sorted by name.

    A check's outcome must match its declared expectation; expect="fail"
    checks pass exactly when the underlying validation detects the defect."""
    specs = sc.checks
    if selection is not None:
        by_name = {c.name: c for c in sc.checks}
        unknown = [n for n in selection if n not in by_name]
        if unknown:
            raise ScenarioError(f"unknown check name(s): {', '.join(unknown)}")
        specs = [by_name[n] for n in selection]
    results = []
    t_all = time.perf_counter()
    for spec in sorted(specs, key=lambda c: c.name):
        runner = CHECK_KINDS[spec.kind]
        t0 = time.perf_counter()
        err = ""
        try:
            rep = runner(sc, spec.params)
            status = "pass" if rep.ok else "fail"
            items = rep.items
        except ScenarioError:
            raise
        except EngineError as exc:
            status = "fail"
            items = []
            err = str(exc)
        dt = time.perf_counter() - t0
        ok = (status == "pass") == (spec.expect == "pass")
        results.append(CheckResult(spec.name, spec.kind, spec.expect, status, ok,
                                   items, error=err, seconds=dt))
    return RunReport(
        scenario=sc.name, digest=sc.digest, engine=__version__,
        field=sc.ctx.field.name, group=sc.ctx.group.signature,
        results=results, seconds=time.perf_counter() - t_all,
    )


def _item_payload(it):
    out = {"name": it.name, "ok": it.ok}
    s = it.residual_summary()
    if s:
        out["residual"] = s
    if it.note:
        out["note"] = it.note
    return out


def emit(report: RunReport, fmt="human") -> str:
    if fmt == "machine":
        doc = {
            "schema": REPORT_SCHEMA,
            "engine": report.engine,
            "scenario": report.scenario,
            "digest": report.digest,
            "field": report.field,
            "group": list(report.group),
            "checks": [
                {
                    "name": r.name,
                    "kind": r.kind,
                    "expect": r.expect,
                    "status": r.status,
                    "ok": r.ok,
                    "error": r.error,
                    "items": [_item_payload(it) for it in r.items if not it.ok],
                }
                for r in report.results
            ],
            "summary": {"passed": report.summary[0], "total": report.summary[1]},
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if fmt == "human":
        passed, total = report.summary
        lines = [
            f"scenario: {report.scenario} (sha256 {report.digest[:12]})",
            f"engine: braidhopf {report.engine}  "
            f"field: {report.field}  group: {list(report.group)}",
            f"checks: {passed}/{total} passed in {report.seconds:.2f}s",
        ]
        for r in report.results:
            mark = "pass" if r.ok else "FAIL"
            expect = "" if r.expect == "pass" else " (expected to fail)"
            lines.append(f"  [{mark}] {r.name} [{r.kind}]{expect} ({r.seconds:.2f}s)")
            if not r.ok:
                if r.error:
                    lines.append(f"         error: {r.error}")
                for it in r.items:
                    if not it.ok:
                        s = it.residual_summary() or it.note or "failed"
                        lines.append(f"         {it.name}: {s}")
        return "\n".join(lines) + "\n"
    raise ScenarioError(f"unknown report format {fmt!r}")


def parse_machine_report(text: str) -> dict:
    """Parse and validate a machine report; emit(run(...), 'machine') round-trips."""
    doc = json.loads(text)
    if doc.get("schema") != REPORT_SCHEMA:
        raise ScenarioError(f"not a {REPORT_SCHEMA} report")
    for key in ("engine", "scenario", "digest", "checks", "summary"):
        if key not in doc:
            raise ScenarioError(f"report is missing {key!r}")
    return doc
