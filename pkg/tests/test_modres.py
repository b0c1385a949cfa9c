"""The evaluation/interpolation pipeline and its plan machinery."""

import json
import random

import pytest

from oreelim import (
    Automorphism,
    ModularPlan,
    PlanFailure,
    check_bad_eval,
    conjugacy_audit,
    embed_uni,
    eval_uni,
    extend_field,
    field_new,
    partial_evaluations,
    plan_modular,
    res_x2_direct,
    res_x2_modular,
)
from oracles import classical_resultant, bivar_to_lists, uni_to_list
from support import bivar_for, rand_bivar, rand_bivar_exact


def test_plan_no_extension_when_bound_small():
    ring = bivar_for(2, 2, 1, 1)
    # coefficients constant in x1 except one linear term: bound = 1
    f = ring.poly([ring.inner.poly([0, 1]), ring.inner.one()])  # x1 + x2
    g = ring.poly([ring.inner.one(), ring.inner.one()])
    plan = plan_modular(f, g)
    assert plan.degree_bound == 1
    assert plan.work_ctx == ring.ctx
    assert [pt.val for pt in plan.points] == [1, 2]


def test_plan_extends_beyond_bound():
    ring = bivar_for(2, 2, 1, 1)
    # f: n=1 with inner degree 1; g: m=1 with inner degree 2 -> D = 3
    f = ring.poly([ring.inner.poly([0, 1]), ring.inner.one()])
    g = ring.poly([ring.inner.poly([0, 0, 1]), ring.inner.one()])
    plan = plan_modular(f, g)
    assert plan.degree_bound == 3
    assert plan.work_ctx.m == 4
    assert len(plan.points) == 4


def test_plan_constant_coefficients_full_basis():
    ring = bivar_for(2, 2, 1, 1)
    f = ring.poly([1, 1])
    g = ring.poly([ring.ctx.from_coords([0, 1]), ring.ctx.one])
    plan = plan_modular(f, g)
    assert plan.degree_bound == 0
    assert len(plan.points) == ring.ctx.m


def test_plan_rejects_constant_inputs():
    ring = bivar_for(2, 2, 1, 1)
    with pytest.raises(PlanFailure):
        plan_modular(ring.constant(1), ring.x2())


def test_plan_respects_sigma_order():
    # sigma1 = Frobenius(2) on GF(2^4) has order 2; a bound of 2 needs a
    # working field whose sigma1-order exceeds it, not just M > D
    ring = bivar_for(2, 4, 2, 1)
    f = ring.poly([ring.inner.poly([0, 1]), ring.inner.one()])
    g = ring.poly([ring.inner.poly([0, 1]), ring.inner.one()])
    plan = plan_modular(f, g)
    d = plan.degree_bound
    m_work = plan.work_ctx.m
    order = m_work // __import__("math").gcd(2, m_work)
    assert order > d >= 2


def test_check_bad_eval_structurally_false():
    ring = bivar_for(2, 8, 1, 1)
    rng = random.Random(0)
    f = rand_bivar(ring, rng, 2, 2, min_d2=1)
    g = rand_bivar(ring, rng, 2, 2, min_d2=1)
    plan = plan_modular(f, g)
    assert not check_bad_eval(f, plan)
    assert not check_bad_eval(g, plan)
    const_lead = ring.poly([ring.inner.x(), ring.inner.one()])
    assert not check_bad_eval(const_lead, plan)


def test_check_bad_eval_flags_artificial_collision():
    # over a plan whose working field is the input field itself, the formal
    # polynomial x1^m - 1 acts as sigma^m - id = 0 on GF(p^m)
    ctx = field_new(2, 4)
    ring = bivar_for(2, 4, 1, 1)
    work, emb = extend_field(ctx, 4)
    plan = ModularPlan(
        base_ring=ring,
        work_ring=ring,
        embedding=emb,
        points=tuple(ctx.prime_basis()),
        degree_bound=4,
        mode="frobenius",
    )
    collapsing = ring.inner.x(4) - 1
    f_bad = ring.poly([ring.inner.one(), collapsing])
    assert check_bad_eval(f_bad, plan)


def test_modular_equals_direct_frobenius():
    ring = bivar_for(2, 8, 1, 1)
    rng = random.Random(1)
    for _ in range(10):
        f = rand_bivar(ring, rng, 2, 2, min_d2=1)
        g = rand_bivar(ring, rng, 2, 2, min_d2=1)
        assert res_x2_modular(f, g).rep == res_x2_direct(f, g).rep


def test_modular_identity_sigmas_match_classical():
    ring = bivar_for(7, 1, 0, 0)
    rng = random.Random(2)
    for _ in range(25):
        f = rand_bivar(ring, rng, 2, 2, min_d2=1)
        g = rand_bivar(ring, rng, 2, 2, min_d2=1)
        d = res_x2_modular(f, g)
        oracle = classical_resultant(bivar_to_lists(f), bivar_to_lists(g), 7)
        if d.is_zero:
            assert oracle == []
            continue
        rep = uni_to_list(d.rep)
        assert rep == oracle or [(-c) % 7 for c in rep] == oracle


def test_modular_common_right_factor_vanishes():
    ring = bivar_for(2, 4, 1, 1)
    rng = random.Random(3)
    hits = 0
    while hits < 10:
        h = rand_bivar_exact(ring, rng, 1, 1)
        u = rand_bivar(ring, rng, 1, 1)
        v = rand_bivar(ring, rng, 1, 1)
        f, g = u * h, v * h
        if f.is_zero or g.is_zero or f.degree < 1 or g.degree < 1:
            continue
        assert res_x2_modular(f, g).is_zero
        hits += 1


def test_partial_evaluations_match_direct_rep():
    # the chain value at each point equals the operator evaluation of the
    # embedded direct representative
    ring = bivar_for(2, 8, 1, 1)
    rng = random.Random(4)
    for _ in range(5):
        f = rand_bivar(ring, rng, 2, 2, min_d2=1)
        g = rand_bivar(ring, rng, 2, 2, min_d2=1)
        plan, evals = partial_evaluations(f, g)
        rep_w = embed_uni(res_x2_direct(f, g).rep, plan)
        op = eval_uni(rep_w)
        for pe in evals:
            assert op(pe.point) == pe.value


def test_moore_recovery_reproduces_chain_values():
    ring = bivar_for(2, 8, 1, 1)
    rng = random.Random(5)
    f = rand_bivar(ring, rng, 2, 2, min_d2=1)
    g = rand_bivar(ring, rng, 2, 2, min_d2=1)
    plan, evals = partial_evaluations(f, g)
    det = res_x2_modular(f, g, plan=plan)
    rep_w = embed_uni(det.rep, plan)
    op = eval_uni(rep_w)
    for pe in evals:
        assert op(pe.point) == pe.value


def test_degree_preserved_by_evaluation():
    from oreelim import eval_bivar

    ring = bivar_for(2, 4, 1, 1)
    rng = random.Random(6)
    for _ in range(50):
        f = rand_bivar(ring, rng, 3, 2, min_d2=1)
        assert eval_bivar(f).degree == f.degree


def test_threads_do_not_change_output():
    ring = bivar_for(2, 8, 1, 1)
    rng = random.Random(7)
    f = rand_bivar(ring, rng, 2, 2, min_d2=1)
    g = rand_bivar(ring, rng, 2, 2, min_d2=1)
    assert res_x2_modular(f, g, threads=1).rep == res_x2_modular(f, g, threads=4).rep


def test_plan_serializes_to_json():
    ring = bivar_for(2, 2, 1, 1)
    f = ring.poly([ring.inner.poly([0, 1]), ring.inner.one()])
    plan = plan_modular(f, f)
    payload = json.loads(json.dumps(plan.to_jsonable()))
    assert payload["mode"] == "frobenius"
    assert payload["degree_bound"] == plan.degree_bound


def test_conjugacy_audit_gf4():
    ctx = field_new(2, 2)
    report = conjugacy_audit(list(ctx.elements()), Automorphism(ctx, 1))
    assert report.class_sizes == [3]
    assert len(report.zero_points) == 1
    json.dumps(report.to_jsonable())


def test_conjugacy_audit_gf9():
    ctx = field_new(3, 2)
    points = [a for a in ctx.elements() if not a.is_zero]
    report = conjugacy_audit(points, Automorphism(ctx, 1))
    assert sorted(report.class_sizes) == [4, 4]
    # norms land in the fixed prime field
    for norm, _ in report.classes:
        assert norm.val in (1, 2)
