"""Elimination by evaluation and interpolation.

Instead of multiplying the triangularized diagonal into one polynomial, the
pipeline treats the diagonal entries as operators, applies the composition
chain

    d_1(sigma1)( d_2(sigma1)( ... d_k(sigma1)(a) ... ) )

to a deterministic set of points a, and recovers the eliminant's coefficients
by coefficient comparison: the chain value at a equals sum(r_i * sigma1^i(a)),
so values on a GF(p)-basis of the working field pin down r_0..r_D through an
invertible Moore system.  Steps:

  1. bound the eliminant degree D from the Sylvester shape and, if the input
     field is too small, extend it (Frobenius exponents lift unchanged, and
     the embedding commutes with them);
  2. map both inputs into the working field and rename x1 -> sigma1
     (operator-valued Sylvester entries; the commutation data is identical,
     so the skew triangularization machinery applies verbatim);
  3. triangularize once, sharing the pivot rule with the direct method;
  4. evaluate the diagonal chain at every plan point (independently, hence
     optionally in parallel -- results do not depend on evaluation order);
  5. solve the Moore system and map coefficients back through the inverse
     embedding when they lie in the base field.

The working degree M is chosen so that M > D and sigma1's order on GF(p^M)
exceeds D; distinct powers sigma1^0..sigma1^D are then distinct automorphisms,
which are linearly independent maps, so a well-formed plan admits no bad
evaluation and no singular Moore system (both remain asserted).

With sigma1 the identity the operator reading collapses (every sigma-power is
the same map), and the pipeline degenerates to its commutative special case:
plug-in evaluation of the diagonal at D+1 distinct points and Vandermonde
recovery.  `ModularPlan.mode` records which regime a plan uses.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd

from .errors import (
    BadEvaluation,
    PlanFailure,
    RingMismatch,
    SingularMooreSystem,
    ZeroPolynomial,
)
from .field import NEG_INF, Automorphism, FieldElem, extend_field, sigma_norm
from .ore_bivar import BivarOrePoly, BivarRing
from .opeval import eval_bivar
from .resultant import sylvester_degree_bound, sylvester_matrix
from .skewdet import DetResult, triangularize_with_log


@dataclass(frozen=True)
class ModularPlan:
    """Working field, embedding, evaluation points, and recovery shape."""

    base_ring: BivarRing
    work_ring: BivarRing
    embedding: object  # FieldEmbedding
    points: tuple  # FieldElem values in the working field
    degree_bound: int
    mode: str  # "frobenius" | "plugin"

    @property
    def work_ctx(self):
        return self.work_ring.ctx

    def to_jsonable(self):
        return {
            "base_field": self.base_ring.ctx.spec_string(),
            "work_field": self.work_ctx.spec_string(),
            "mode": self.mode,
            "degree_bound": self.degree_bound,
            "points": [str(pt) for pt in self.points],
        }


@dataclass(frozen=True)
class PartialEval:
    """The chain evaluation of the diagonal operators at one point."""

    point: FieldElem
    value: FieldElem


def plan_modular(f, g):
    """Choose the working field and evaluation points for a pair of inputs.

    The degree bound D comes from the Sylvester shape.  In the Frobenius
    regime the working degree M is the least multiple of the input degree m
    with M > D and order(sigma1 on GF(p^M)) > D, and the points are the power
    basis; in the plug-in regime (sigma1 = id) M is the least multiple of m
    with p^M >= D + 1 and the points are the first D + 1 field values."""
    if not isinstance(f, BivarOrePoly) or not isinstance(g, BivarOrePoly):
        raise RingMismatch("plan_modular expects bivariate Ore polynomials")
    if f.ring != g.ring:
        raise RingMismatch("f and g must share one Ore algebra")
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("cannot plan elimination for a zero polynomial")
    if f.degree < 1 or g.degree < 1:
        raise PlanFailure(
            "evaluation/interpolation needs x2-degree >= 1 on both inputs "
            "(the direct method handles constant-in-x2 inputs)"
        )
    ring = f.ring
    ctx = ring.ctx
    m = ctx.m
    e1 = ring.sigma1.e
    bound = sylvester_degree_bound(f, g)
    if e1 == 0:
        mode = "plugin"
        big_m = m
        while ctx.p**big_m < bound + 1:
            big_m += m
    else:
        mode = "frobenius"
        big_m = m
        while not (bound < big_m and big_m // gcd(e1, big_m) > bound):
            big_m += m
    work_ctx, emb = extend_field(ctx, big_m)
    work_ring = BivarRing(
        work_ctx, Automorphism(work_ctx, e1), Automorphism(work_ctx, ring.sigma2.e)
    )
    if mode == "frobenius":
        points = tuple(work_ctx.prime_basis())
    else:
        points = tuple(work_ctx.elem(v) for v in range(bound + 1))
    return ModularPlan(
        base_ring=ring,
        work_ring=work_ring,
        embedding=emb,
        points=points,
        degree_bound=bound,
        mode=mode,
    )


def embed_uni(f, plan):
    """Map an inner polynomial into the working field, coefficient-wise."""
    emb = plan.embedding.map_packed
    return plan.work_ring.inner.from_packed([emb(c) for c in f.coeffs])


def embed_bivar(f, plan):
    emb = plan.embedding.map_packed
    inner = plan.work_ring.inner
    return plan.work_ring.poly(
        [inner.from_packed([emb(v) for v in c.coeffs]) for c in f.coeffs]
    )


def check_bad_eval(f, plan):
    """True iff the leading x2-coefficient, read as an operator over the
    working field, is the zero map.  A well-formed plan keeps sigma1-powers
    below the field order linearly independent, so a nonzero leading
    coefficient can never be flagged; the check exists to assert exactly
    that.  In the plug-in regime the renaming is trivial and only a zero
    polynomial could degrade the degree, so the flag is structurally false."""
    lead = embed_uni(f.lead_coeff, plan) if not f.is_zero else None
    if lead is None or lead.is_zero:
        return True
    if plan.mode == "plugin":
        return False
    ctx = plan.work_ctx
    e = plan.work_ring.sigma1.e
    add, mul, frob = ctx.add, ctx.mul, ctx.frob
    for j in range(ctx.m):
        u = ctx.p**j
        acc = 0
        cur = u
        for i, c in enumerate(lead.coeffs):
            if i:
                cur = frob(cur, e)
            if c:
                acc = add(acc, mul(c, cur))
        if acc:
            return False
    return True


def _apply_formal(ctx, e, coeffs, u):
    """sum(c_i * sigma^i(u)) on packed values."""
    add, mul, frob = ctx.add, ctx.mul, ctx.frob
    acc = 0
    cur = u
    for i, c in enumerate(coeffs):
        if i:
            cur = frob(cur, e)
        if c:
            acc = add(acc, mul(c, cur))
    return acc


def _eval_plugin(ctx, coeffs, u):
    """Ordinary Horner evaluation (commutative regime)."""
    add, mul = ctx.add, ctx.mul
    acc = 0
    for c in reversed(coeffs):
        acc = add(mul(acc, u), c)
    return acc


def chain_evaluate(diag, plan, threads=1):
    """PartialEval at every plan point of the diagonal chain per the
    composition formula: the row-order product d_1 * ... * d_k acts as
    d_1 applied last.  Points are independent; the output order is the
    plan's point order regardless of thread count."""
    ctx = plan.work_ctx
    e = plan.work_ring.sigma1.e
    coeff_rows = [d.coeffs for d in diag]

    def at_point(pt):
        u = pt.val
        if plan.mode == "frobenius":
            for coeffs in reversed(coeff_rows):
                u = _apply_formal(ctx, e, coeffs, u)
        else:
            acc = 1
            for coeffs in coeff_rows:
                acc = ctx.mul(acc, _eval_plugin(ctx, coeffs, pt.val))
            u = acc
        return PartialEval(point=pt, value=FieldElem(ctx, u))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return tuple(pool.map(at_point, plan.points))
    return tuple(at_point(pt) for pt in plan.points)


def _solve_exact(ctx, rows, rhs, ncols):
    """Gauss-Jordan over the working field; rows may exceed ncols, in which
    case the leftover equations are checked for consistency."""
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    nrows = len(aug)
    rank = 0
    for col in range(ncols):
        sel = None
        for k in range(rank, nrows):
            if aug[k][col]:
                sel = k
                break
        if sel is None:
            raise SingularMooreSystem(
                "evaluation points do not determine the coefficients"
            )
        aug[rank], aug[sel] = aug[sel], aug[rank]
        inv = ctx.inv(aug[rank][col])
        mul, sub = ctx.mul, ctx.sub
        aug[rank] = [mul(inv, x) for x in aug[rank]]
        prow = aug[rank]
        for k in range(nrows):
            if k != rank and aug[k][col]:
                c = aug[k][col]
                aug[k] = [sub(x, mul(c, y)) for x, y in zip(aug[k], prow)]
        rank += 1
    for k in range(rank, nrows):
        if any(aug[k]):
            raise SingularMooreSystem("chain values are inconsistent")
    return [aug[i][ncols] for i in range(ncols)]


def _recover_coefficients(plan, evals):
    ctx = plan.work_ctx
    d = plan.degree_bound
    if plan.mode == "frobenius":
        e = plan.work_ring.sigma1.e
        rows = []
        for pe in evals:
            cur = pe.point.val
            row = [cur]
            for _ in range(d):
                cur = ctx.frob(cur, e)
                row.append(cur)
            rows.append(row)
    else:
        rows = []
        for pe in evals:
            cur = 1
            row = [1]
            for _ in range(d):
                cur = ctx.mul(cur, pe.point.val)
                row.append(cur)
            rows.append(row)
    rhs = [pe.value.val for pe in evals]
    return _solve_exact(ctx, rows, rhs, d + 1)


def _pipeline(f, g, plan, rule, seed):
    """Steps 2-4: embed, rename, build the operator-entry Sylvester matrix,
    triangularize.  Returns the diagonal (inner polynomials over the working
    field) and the op log."""
    fw = embed_bivar(f, plan)
    gw = embed_bivar(g, plan)
    syl = sylvester_matrix(eval_bivar(fw).inner, eval_bivar(gw).inner)
    tri, ops = triangularize_with_log(syl.inner, rule=rule, seed=seed)
    diag = [tri.rows[i][i] for i in range(tri.n)]
    return diag, ops


def partial_evaluations(f, g, plan=None, rule="min_degree", seed=0, threads=1):
    """Run the pipeline through step 4 and return (plan, partial evals)."""
    if plan is None:
        plan = plan_modular(f, g)
    diag, _ = _pipeline(f, g, plan, rule, seed)
    if any(d.is_zero for d in diag):
        zero = plan.work_ctx.zero
        return plan, tuple(PartialEval(point=pt, value=zero) for pt in plan.points)
    return plan, chain_evaluate(diag, plan, threads=threads)


def res_x2_modular(f, g, rule="min_degree", seed=0, threads=1, plan=None) -> DetResult:
    """res_{x2}(f, g) by evaluation and interpolation.

    Equals the direct representative coefficient-for-coefficient when both
    use the same pivot rule: the triangularization of the embedded inputs
    mirrors the base-field one step for step, and Moore recovery is exact for
    degree bound < working degree."""
    if plan is None:
        plan = plan_modular(f, g)
    if check_bad_eval(f, plan):
        raise BadEvaluation("leading coefficient of f acts as the zero map")
    if check_bad_eval(g, plan):
        raise BadEvaluation("leading coefficient of g acts as the zero map")
    diag, ops = _pipeline(f, g, plan, rule, seed)
    base_inner = plan.base_ring.inner
    if any(d.is_zero for d in diag):
        return DetResult(
            rep=base_inner.zero(), is_zero=True, degree=NEG_INF, op_log=ops
        )
    deg_r = sum(d.degree for d in diag)
    if deg_r > plan.degree_bound:
        raise PlanFailure(
            f"diagonal degree {deg_r} exceeds the planned bound {plan.degree_bound}"
        )
    evals = chain_evaluate(diag, plan, threads=threads)
    coeffs = _recover_coefficients(plan, evals)
    back = [plan.embedding.inverse_packed(c) for c in coeffs]
    if all(b is not None for b in back):
        rep = base_inner.from_packed(back)
    else:
        rep = plan.work_ring.inner.from_packed(coeffs)
    return DetResult(rep=rep, is_zero=rep.is_zero, degree=rep.degree, op_log=ops)


@dataclass(frozen=True)
class ConjugacyReport:
    """How the plan's points fall into sigma-conjugacy classes (informational:
    correctness rests on GF(p)-linear independence, but the class structure is
    what the interpolation-point folklore talks about)."""

    classes: tuple  # ((norm FieldElem, members tuple), ...)
    zero_points: tuple

    @property
    def class_sizes(self):
        return [len(members) for _, members in self.classes]

    def to_jsonable(self):
        return {
            "classes": [
                {"norm": str(norm), "members": [str(x) for x in members]}
                for norm, members in self.classes
            ],
            "zero_points": [str(x) for x in self.zero_points],
        }


def conjugacy_audit(points, sigma):
    """Partition points by sigma-norm; zero points are reported, not rejected."""
    zero_points = []
    buckets = {}
    order = []
    for pt in points:
        if pt.is_zero:
            zero_points.append(pt)
            continue
        nv = sigma_norm(sigma, pt)
        key = nv.val
        if key not in buckets:
            buckets[key] = (nv, [])
            order.append(key)
        buckets[key][1].append(pt)
    classes = tuple(
        (buckets[k][0], tuple(buckets[k][1])) for k in sorted(order)
    )
    return ConjugacyReport(classes=classes, zero_points=tuple(zero_points))
