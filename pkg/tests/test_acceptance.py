"""Acceptance suite: one test per criterion, each printing a pass/fail line
with its runtime against the stated bound.  All comparisons are bit-exact."""

import os
import time
from contextlib import contextmanager

import pytest

from braidhopf.examples import (
    braided_line,
    group_algebra,
    sweedler,
    taft_oracle,
    taft_via_bosonization,
)
from braidhopf.fields import RationalField
from braidhopf.graded import BraidedContext, GradedMap, compose
from braidhopf.structures import (
    check_structure,
    regular_action,
    regular_coaction,
    trivial_action,
)
import braidhopf.crossed_modules as cm
import braidhopf.hopf_bimodules as hb
import braidhopf.hopf_modules as hm
import braidhopf.projections as pr
from braidhopf.scenario import emit, load, run


SCEN = os.path.join(os.path.dirname(__file__), "..", "scenarios")
CORPUS = [
    "trivial.json",
    "group_algebra_z2.json",
    "sweedler_structure_theorem.json",
    "sweedler_yd_equivalence.json",
    "taft_3_7.json",
    "braided_line_mirror.json",
    "negative_structure.json",
    "negative_braided_line.json",
    "negative_modules.json",
    "negative_dsl.json",
    "negative_projection.json",
]


@contextmanager
def criterion(num, desc, limit_s):
    t0 = time.perf_counter()
    failed = None
    try:
        yield
    except BaseException as exc:
        failed = exc
    dt = time.perf_counter() - t0
    status = "pass" if failed is None and dt < limit_s else "FAIL"
    print(f"ACCEPTANCE {num:02d} [{status}] {desc} ({dt:.2f}s < {limit_s:g}s)")
    if failed is not None:
        raise failed
    assert dt < limit_s, f"criterion {num} exceeded its runtime bound: {dt:.2f}s"


@pytest.fixture(scope="module")
def bases():
    ctx = BraidedContext(RationalField())
    return {
        "kz2": group_algebra(ctx, 2),
        "h4": sweedler().hopf,
        "b3": braided_line(3, 7).hopf,
    }


def test_criterion_01_projector_suite(bases):
    with criterion(1, "coinvariant projector idempotent with exact legs", 1.0):
        for h in bases.values():
            for x in hm.default_module_samples(h):
                sp = x.split()  # asserts idempotency and the four leg identities
                proj = sp.projector
                assert compose(proj, proj) == proj


def test_criterion_02_structure_theorem(bases):
    with criterion(2, "structure theorem with verbatim coinvariants and cells", 5.0):
        for h in bases.values():
            rep = hm.verify_structure_theorem(h)
            assert rep.ok, str(rep)


def test_criterion_03_tensor_cotensor(bases):
    with criterion(3, "tensor and cotensor over H with exact composite", 5.0):
        for h in bases.values():
            samples = hm.default_module_samples(h)
            for m in (samples[0], samples[1]):
                hm.tensor_over_h(regular_action(h, "right"), m)
                hm.cotensor_over_h(regular_coaction(h, "right"), m)
                hm.tensor_cotensor_composite(
                    regular_action(h, "right"), regular_coaction(h, "right"), m
                )
            triv = trivial_action(h, h.ctx.unit, "right")
            t = hm.tensor_over_h(triv, samples[1])
            assert t.quotient == samples[1].split().p


def test_criterion_04_yd_suite(bases):
    with criterion(4, "Yetter-Drinfeld braiding, inverse, hexagons, Yang-Baxter", 5.0):
        for key in ("h4", "b3"):
            h = bases[key]
            h_ad, _ = cm.adjoint_crossed_module(h)
            unit = cm.unit_crossed_module(h)
            rep = cm.yd_braiding_report(h_ad, h_ad, unit,
                                        morphisms=[(h.eta, unit, h_ad)])
            assert rep.ok, str(rep)
            assert cm.yang_baxter_report(h_ad).ok
            psi = cm.yd_braiding(h_ad, h_ad)
            inv = cm.yd_braiding(h_ad, h_ad, inverse=True)
            sq = h_ad.carrier.tensor(h_ad.carrier)
            assert compose(inv, psi) == h.ctx.ident(sq)
            assert compose(psi, inv) == h.ctx.ident(sq)


def test_criterion_05_bimodule_equivalence(bases):
    with criterion(5, "Hopf bimodule / crossed module equivalence with braidings", 10.0):
        for key in ("h4", "b3"):
            h = bases[key]
            h_ad, _ = cm.adjoint_crossed_module(h)
            unit = cm.unit_crossed_module(h)
            reg = hb.regular_hopf_bimodule(h)
            cp = hb.cross_product(h, h_ad)
            rep = hb.verify_equivalence(h, bimodules=[reg, cp],
                                        crossed=[unit, h_ad])
            assert rep.ok, str(rep)
            _, rep2 = hb.projected_braiding(cp, cp)
            assert rep2.ok, str(rep2)


def test_criterion_06_relative_antipode(bases):
    with criterion(6, "relative antipode identities, inverse, braiding compatibility", 5.0):
        for key in ("h4", "b3"):
            h = bases[key]
            reg = hb.regular_hopf_bimodule(h)
            assert pr.relative_antipode(reg) == h.s
            rep = pr.relative_antipode_report(reg, reg)
            assert rep.ok, str(rep)
            h_ad, _ = cm.adjoint_crossed_module(h)
            cp = hb.cross_product(h, h_ad)
            rep2 = pr.relative_antipode_report(cp)
            assert rep2.ok, str(rep2)


def test_criterion_07_projection_isomorphism(bases):
    with criterion(7, "projection / bimodule-bialgebra functors roundtrip verbatim", 5.0):
        h4 = bases["h4"]
        ctx = h4.ctx
        idh = ctx.ident(h4.carrier)
        trivial = pr.BialgebraProjection(h4, h4, idh, idh, name="trivial")
        kz2 = bases["kz2"]
        one = ctx.field.one
        inj = GradedMap(kz2.carrier, h4.carrier, {(0, 0): one, (1, 1): one}, ctx.field)
        proj = GradedMap(h4.carrier, kz2.carrier, {(0, 0): one, (1, 1): one}, ctx.field)
        grouplike = pr.BialgebraProjection(kz2, h4, inj, proj, name="grouplike")
        taft = taft_via_bosonization(3, 7)
        rep = pr.projection_theorem_report(
            [trivial, grouplike, taft.extras["projection"]]
        )
        assert rep.ok, str(rep)


def test_criterion_08_bosonization():
    with criterion(8, "bosonization of the q-line is the Taft algebra, verbatim", 5.0):
        taft = taft_via_bosonization(3, 7)
        assert taft.hopf.level == "hopf"
        assert taft.hopf.carrier.dim == 9
        assert check_structure(taft.hopf).ok
        oracle = taft_oracle(3, 7)
        for key in ("m", "delta", "eta", "eps", "s"):
            assert dict(getattr(taft.hopf, key).entries) == oracle[key]
        grp = taft.extras["group_hopf"]
        cb = taft.extras["yd_bialgebra"]
        rep = pr.bosonization_report(grp, [cb])
        assert rep.ok, str(rep)
        adm = pr.check_admissible(grp, pr.AdmissibleInput.from_crossed_bialgebra(cb))
        assert adm.ok, str(adm)


def test_criterion_09_detection_power(bases):
    with criterion(9, "every structure-constant perturbation is detected", 30.0):
        from braidhopf.examples import MAP_NAMES, perturb
        from braidhopf.errors import EngineError

        for h in bases.values():
            for which in MAP_NAMES:
                base_map = getattr(h, which)
                if base_map is None:
                    continue
                for i in range(base_map.codomain.dim):
                    for j in range(base_map.domain.dim):
                        try:
                            cand = perturb(h, which, (i, j), 1)
                        except EngineError:
                            continue  # caught at the degree gate
                        assert not check_structure(cand).ok, (
                            f"silent pass: {h.name} {which} ({i},{j})"
                        )


def test_criterion_10_determinism():
    with criterion(10, "full-corpus machine reports are byte-identical", 120.0):
        first = []
        second = []
        for name in CORPUS:
            first.append(emit(run(load(os.path.join(SCEN, name))), "machine"))
        for name in CORPUS:
            second.append(emit(run(load(os.path.join(SCEN, name))), "machine"))
        assert first == second
        for text in first:
            assert text.endswith("\n") and text.startswith("{")
