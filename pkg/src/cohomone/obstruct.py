"""Obstructions to positive curvature for diagrams in S^3 x S^3.

Each check returns a :class:`~cohomone.verdict.Verdict`.  ``run_pipeline``
runs them in a fixed order and collects an :class:`ObstructionReport`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .diagram import Diagram, ValidationReport, kernel_triviality_check, validate
from .errors import CohomOneError
from .groups import (
    FiniteSubgroup,
    IDENTITY_ROTATION,
    SlopeCircle,
    ad_conjugate,
    axis_rotation,
    bracket_closure_rank,
    circle_torsion_intersect,
    lie_line,
    normalizer_identity_component,
    octahedral_rotations,
    rank_over_field,
    rotation_matrix,
)
from .qfield import AXES, GroupElement, Quaternion
from .verdict import FAIL, NOT_APPLICABLE, PASS, Verdict
from .weyl import WeylResult, weyl_group, weyl_words

__all__ = [
    "CHECKS",
    "ObstructionReport",
    "check_rank",
    "check_forbidden_elements",
    "check_weight",
    "check_frankel",
    "check_weyl_bounds",
    "check_linear_primitivity",
    "check_group_primitivity",
    "run_pipeline",
]

CHECKS = (
    "validate",
    "kernel_triviality",
    "rank",
    "forbidden_elements",
    "weight_minus",
    "weight_plus",
    "frankel",
    "weyl_group",
    "weyl_bounds",
    "linear_primitivity",
    "group_primitivity",
)

MINUS_ONE = Quaternion(-1)
ANTIPODE = GroupElement(MINUS_ONE, MINUS_ONE)


def check_rank(d: Diagram) -> Verdict:
    """The corank of ``H`` in ``G`` must be 0 or 2 in odd dimensions."""
    corank = 2 - d.h_rank
    if corank in (0, 2):
        return Verdict.ok(f"corank {corank}")
    return Verdict.fail(f"corank {corank}")


def check_forbidden_elements(H: FiniteSubgroup) -> Verdict:
    """``H`` may not contain ``(a, +-1)`` or ``(+-1, a)`` with ``a`` noncentral."""
    for h in H.sorted():
        left_c, right_c = h.left.is_central_unit(), h.right.is_central_unit()
        if left_c != right_c:
            return Verdict.fail("element with one central component", witness=h.literal())
    return Verdict.ok()


def check_weight(C: SlopeCircle, H: FiniteSubgroup) -> Verdict:
    """Normal weight ``k = |C meet H|`` against the slopes.

    Passes when ``|2(p-q)| = k``, ``|2(p+q)| = k``, or ``4|p| = 4|q| = k``.
    """
    k = len(circle_torsion_intersect(C, H))
    p, q = C.p, C.q
    if abs(2 * (p - q)) == k:
        return Verdict.ok(f"k={k}, |2(p-q)|={k}")
    if abs(2 * (p + q)) == k:
        return Verdict.ok(f"k={k}, |2(p+q)|={k}")
    if 4 * abs(p) == k and 4 * abs(q) == k:
        return Verdict.ok(f"k={k}, 4|p|=4|q|={k}")
    return Verdict.fail(f"weight k={k} does not match slopes ({p},{q})", details={"k": k})


def _weight_side(d: Diagram, side: int) -> Verdict:
    K = d.sides[side]
    if not K.is_circle:
        return Verdict.skip("not a circle fibre")
    return check_weight(K.circle, d.H)


def _has_quaternionic_element(H: FiniteSubgroup) -> bool:
    return any((h * h) == ANTIPODE for h in H.elements)


def check_frankel(d: Diagram) -> Verdict:
    """Two totally geodesic strata cannot both exist: small slopes required.

    ``min |p|`` and ``min |q|`` over the two circles must be at most 2, and
    exactly 1 when ``H`` has an element squaring to ``(-1,-1)``.
    """
    if not (d.Kminus.is_circle and d.Kplus.is_circle):
        return Verdict.skip("needs two circle fibres")
    cm, cp = d.Kminus.circle, d.Kplus.circle
    min_p = min(abs(cm.p), abs(cp.p))
    min_q = min(abs(cm.q), abs(cp.q))
    limit = 1 if _has_quaternionic_element(d.H) else 2
    detail = {"min_p": min_p, "min_q": min_q, "limit": limit}
    if min_p <= limit and min_q <= limit:
        return Verdict.ok(f"min|p|={min_p}, min|q|={min_q} <= {limit}", details=detail)
    return Verdict.fail(f"min|p|={min_p}, min|q|={min_q}, limit {limit}", details=detail)


def check_weyl_bounds(d: Diagram, w: WeylResult) -> Verdict:
    """Lower bound ``|W| (l- + l+) >= 2 dim G/H``; ``|W| <= 8`` when ``H`` is cyclic.

    ``details`` records each bound as pass, fail or not_applicable.
    """
    order = w.order
    lsum = d.Kminus.dim + d.Kplus.dim
    if order * lsum < 12:
        return Verdict.fail(
            f"|W|={order} below 12/(l-+l+) with l-+l+={lsum}",
            details={"lower": FAIL, "upper": NOT_APPLICABLE},
        )
    if d.H.is_cyclic():
        if order > 8:
            return Verdict.fail(f"|W|={order} exceeds 8 for cyclic H", details={"lower": PASS, "upper": FAIL})
        return Verdict.ok(f"|W|={order}: lower and upper bound hold", details={"lower": PASS, "upper": PASS})
    return Verdict.ok(
        f"|W|={order}: lower bound holds; upper bound not applicable (H not cyclic)",
        details={"lower": PASS, "upper": NOT_APPLICABLE},
    )


def check_linear_primitivity(d: Diagram, w: WeylResult) -> Verdict:
    """The isotropy Lie algebras along the normal geodesic must span so(3)+so(3)."""
    base = lie_line(d.Kminus) + lie_line(d.Kplus)
    lines = [ad_conjugate(g, L) for g in weyl_words(w) for L in base]
    rank = rank_over_field(lines)
    if rank == 6:
        return Verdict.ok("rank 6")
    return Verdict.fail(f"isotropy algebras span rank {rank}", details={"rank": rank})


def _rotation_samples(comp) -> list:
    if comp is None:
        return [IDENTITY_ROTATION]
    if comp is not True:
        # eighth turns of the circle act by rotations through multiples of pi/4
        return [axis_rotation(comp, t) for t in range(8)]
    mats = {rotation_matrix(x) for x in octahedral_rotations()}
    for u in AXES.values():
        mats.update(axis_rotation(u, t) for t in range(8))
    return sorted(mats, key=lambda m: tuple(c.sort_key() for row in m for c in row))


def group_primitivity_samples(d: Diagram) -> list:
    """Pairs of rotation matrices sampling the adjoint action of ``N(H)_0``."""
    left, right = normalizer_identity_component(d.H)
    if d.Kminus.is_diag or d.Kplus.is_diag:
        # conjugating by (x, x) preserves the diagonal, so one factor suffices
        left = None
    return list(product(_rotation_samples(left), _rotation_samples(right)))


def check_group_primitivity(d: Diagram) -> Verdict:
    """``K-`` and every ``N(H)_0``-conjugate of ``K+`` must generate ``G``.

    The identity component is sampled on the grid of angle multiples of
    2 pi/16 (plus the rotations of the cube when it is a full ``S^3``); the
    configuration ``|p-|=|q-|`` with ``|p+|=|q+|`` always fails.
    """
    if d.Kminus.is_circle and d.Kplus.is_circle:
        cm, cp = d.Kminus.circle, d.Kplus.circle
        if abs(cm.p) == abs(cm.q) and abs(cp.p) == abs(cp.q):
            return Verdict.fail("degenerate slopes |p-|=|q-| and |p+|=|q+|")
    fixed, moved = d.Kminus, d.Kplus
    if d.Kplus.is_diag and not d.Kminus.is_diag:
        fixed, moved = moved, fixed
    samples = group_primitivity_samples(d)
    base = lie_line(fixed)
    moving = lie_line(moved)
    for a in samples:
        rank = bracket_closure_rank(base + [ad_conjugate(a, L) for L in moving])
        if rank < 6:
            return Verdict.fail(
                f"generated subalgebra has dimension {rank} at a sampled normalizer element",
                details={"rank": rank},
            )
    sampled = len(samples) > 1
    return Verdict.ok(f"full rank at {len(samples)} normalizer samples", sampled=sampled)


@dataclass
class ObstructionReport:
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    validation: ValidationReport | None = None
    weyl: WeylResult | None = None

    @property
    def first_fail(self) -> str | None:
        return next((name for name, v in self.verdicts.items() if v.failed), None)

    @property
    def survives(self) -> bool:
        return self.first_fail is None

    @property
    def overall(self) -> str:
        first = self.first_fail
        return "Survives" if first is None else f"Rejected({first})"

    def to_json(self) -> dict:
        return {
            "overall": "survives" if self.survives else "rejected",
            "first_fail": self.first_fail,
            "verdicts": {name: v.to_json() for name, v in self.verdicts.items()},
            "validation": self.validation.to_json() if self.validation else None,
            "weyl": self.weyl.to_json() if self.weyl else None,
        }

    def summary(self) -> str:
        lines = [f"overall: {self.overall}"]
        lines += [f"  {name:20s} {v}" for name, v in self.verdicts.items()]
        return "\n".join(lines)


def run_pipeline(d: Diagram, fail_fast: bool = False) -> ObstructionReport:
    """Run every check in order.

    A structural validation error stops the run.  Otherwise all checks are
    recorded, unless ``fail_fast`` asks to stop at the first failure (the
    enumeration uses this).
    """
    rep = ObstructionReport()
    v = rep.verdicts

    def done():
        return fail_fast and rep.first_fail is not None

    try:
        rep.validation = validate(d)
    except CohomOneError as exc:
        v["validate"] = Verdict.fail(f"{type(exc).__name__}: {exc}")
        return rep
    if rep.validation.pi1_order != 1:
        v["validate"] = Verdict.fail(f"not simply connected: pi1 of order {rep.validation.pi1_order}")
    else:
        v["validate"] = Verdict.ok(f"l=({rep.validation.l_minus},{rep.validation.l_plus})")
    steps = [
        ("kernel_triviality", lambda: kernel_triviality_check(d)),
        ("rank", lambda: check_rank(d)),
        ("forbidden_elements", lambda: check_forbidden_elements(d.H)),
        ("weight_minus", lambda: _weight_side(d, 0)),
        ("weight_plus", lambda: _weight_side(d, 1)),
        ("frankel", lambda: check_frankel(d)),
    ]
    for name, fn in steps:
        if done():
            return rep
        v[name] = fn()
    if done():
        return rep
    try:
        rep.weyl = weyl_group(d)
        v["weyl_group"] = Verdict.ok(rep.weyl.type)
    except CohomOneError as exc:
        v["weyl_group"] = Verdict.fail(f"{type(exc).__name__}: {exc}")
    if done():
        return rep
    if rep.weyl is None:
        v["weyl_bounds"] = Verdict.skip("Weyl group unavailable")
        v["linear_primitivity"] = Verdict.skip("Weyl group unavailable")
    else:
        v["weyl_bounds"] = check_weyl_bounds(d, rep.weyl)
        if done():
            return rep
        v["linear_primitivity"] = check_linear_primitivity(d, rep.weyl)
    if done():
        return rep
    v["group_primitivity"] = check_group_primitivity(d)
    return rep
