"""Self-contained suite of the published statements about R, its action and invariants.

Each check returns ``(ok, detail)``.  ``run_checks`` is what ``verify-paper``
executes; it needs no data beyond this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .action import coaction, sq_n, sq_pow2_on_generator, sq_via_coaction, total_sq
from .dual import DualPoly, DualTensor, conjugation, diagonal, milnor_coefficient, xi, zeta
from .invariants import (
    classify_monomial,
    family_members,
    invariant_subspace,
    is_invariant,
    minimal_support,
)
from .limit import compare_with_closed_form
from .parser import parse_rpoly
from .ring import Bidegree, Generator, RPoly, basis, generator_degree, mono_mul

P = parse_rpoly

TABLE_B = [
    ("h[2,0]^2*h[2,1]^2", (4, 18)),
    ("h[2,0]*h[2,1]^3", (4, 21)),
    ("h[2,1]^4", (4, 24)),
    ("h[2,0]^4*h[2,1]^3", (7, 30)),
    ("h[2,0]^3*h[2,1]^4", (7, 33)),
    ("h[2,0]^2*h[2,1]^5", (7, 36)),
]

ELEMENT_Z = "h[4,0]^2*h[2,1]^3 + h[2,0]^2*h[2,1]^2*h[4,1] + h[3,0]^2*h[2,1]*h[3,1]^2 + h[2,0]^2*h[3,1]^3"
ELEMENT_E = "h[2,0]^8*h[3,1]^4 + h[3,0]^8*h[2,1]^4 + h[2,1]^11*h[3,1]"
SPORADIC_SPAN = [(i, s) for i in range(2, 6) for s in (0, 1)]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _eq(got, want) -> tuple[bool, str]:
    return got == want, f"got {got}, expected {want}"


def _check_table_b():
    missing = []
    for text, bd in TABLE_B:
        p = P(text)
        if p.bidegree != bd or not invariant_subspace(bd).contains(p):
            missing.append(f"{text} at {bd}")
    return not missing, "all six table entries invariant" if not missing else "; ".join(missing)


def _check_family_c():
    bad = []
    for n in range(1, 5):
        for fam in family_members(n, 60):
            if not is_invariant(RPoly.from_monomial(fam.monomial())):
                bad.append(str(fam))
    return not bad, "all family members up to degree 60 invariant" if not bad else ", ".join(bad[:5])


def _check_sporadic(bd, expected_size):
    res = minimal_support(bd, SPORADIC_SPAN)
    if res is None:
        return False, f"no nonzero invariant at {bd} in the h_i0, h_i1 span"
    return True, f"minimal support {res.size} monomials (published: {expected_size})"


def _check_theorem_iso():
    bad = [
        (s, d)
        for s in range(5)
        for d in range(41)
        if not compare_with_closed_form((s, d)).iso
    ]
    return not bad, "limit iso to R for sigma<=4, d<=40" if not bad else f"fails at {bad[:5]}"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("degree of h[1,0] is (1,1)", lambda: _eq(generator_degree(Generator(1, 0)), Bidegree(1, 1))),
    ("h[1,0]*h[2,1] = 0", lambda: _eq(mono_mul(((1, 0, 1),), ((2, 1, 1),)), None)),
    ("h[2,0]*h[2,1] != 0", lambda: (mono_mul(((2, 0, 1),), ((2, 1, 1),)) is not None, "")),
    ("diagonal(xi1)", lambda: _eq(diagonal(DualPoly.xi(1)), DualTensor([(xi(1), ()), ((), xi(1))]))),
    (
        "diagonal(xi2)",
        lambda: _eq(diagonal(DualPoly.xi(2)), DualTensor([(xi(2), ()), (xi(1, 2), xi(1)), ((), xi(2))])),
    ),
    ("chi(chi(xi3)) = xi3", lambda: _eq(conjugation(conjugation(DualPoly.xi(3))), DualPoly.xi(3))),
    ("chi(xi3) contains xi1^7", lambda: _eq(milnor_coefficient(zeta(3), 7), 1)),
    ("Sq^2 h[2,0] = h[1,0] (indecomposable formula)", lambda: _eq(sq_pow2_on_generator(1, Generator(2, 0)), P("h[1,0]"))),
    ("Sq^2 h[2,0] = h[1,0] (Cartan)", lambda: _eq(sq_n(2, P("h[2,0]")), P("h[1,0]"))),
    ("Sq^2 h[2,0] = h[1,0] (coaction)", lambda: _eq(sq_via_coaction(2, P("h[2,0]")), P("h[1,0]"))),
    ("Sq^2 (h[2,0]*h[2,1]) = 0", lambda: _eq(sq_n(2, P("h[2,0]*h[2,1]")), RPoly.zero())),
    ("Sq^1, Sq^2 kill h[2,1]", lambda: (not sq_pow2_on_generator(0, Generator(2, 1)) and not sq_pow2_on_generator(1, Generator(2, 1)), "")),
    ("total square fixes h[2,1]", lambda: _eq(total_sq(P("h[2,1]")), P("h[2,1]"))),
    ("coaction of h[2,1] is 1 (x) h[2,1]", lambda: _eq(len(coaction(P("h[2,1]"))), 1)),
    ("h[t,t-1] invariant, t = 1..8", lambda: (all(is_invariant(RPoly.gen(t, t - 1)) for t in range(1, 9)), "")),
    ("R^{1,1} invariants = {h[1,0]}", lambda: _eq([str(p) for p in invariant_subspace((1, 1)).invariant_basis], ["h[1,0]"])),
    ("h[2,0] not invariant", lambda: _eq(invariant_subspace((1, 3)).invariant_dim, 0)),
    ("invariant table in bidegrees (4,*) and (7,*)", _check_table_b),
    ("h[2,0]^3*h[2,1]^2 is family form", lambda: (classify_monomial(next(iter(P("h[2,0]^3*h[2,1]^2")))), "")),
    ("h[3,0], h[3,1] not invariant", lambda: (not is_invariant(P("h[3,0]")) and not is_invariant(P("h[3,1]")), "")),
    ("family h_n0^i0...h_n,n-1^i(n-1) invariant (n<=4, d<=60)", _check_family_c),
    ("z is invariant in (5,48)", lambda: (P(ELEMENT_Z).bidegree == (5, 48) and is_invariant(P(ELEMENT_Z)), "")),
    ("sporadic element invariant in (12,80)", lambda: (P(ELEMENT_E).bidegree == (12, 80) and is_invariant(P(ELEMENT_E)), "")),
    ("nonzero invariant in (13,104)", lambda: _check_sporadic((13, 104), 12)),
    ("nonzero invariant in (9,104)", lambda: _check_sporadic((9, 104), 8)),
    ("h[2,0]^2 * h[2,1]^2 parses to the (4,18) monomial", lambda: _eq(P("h[2,0]^2 * h[2,1]^2").bidegree, (4, 18))),
    ("h[2,1]^4 in invariants of (4,24)", lambda: (invariant_subspace((4, 24)).contains(P("h[2,1]^4")), "")),
    ("basis(2,9) = {h[2,0]h[2,1]}", lambda: _eq(basis((2, 9)), [((2, 0, 1), (2, 1, 1))])),
    ("inverse limit identified with R", _check_theorem_iso),
]


def run_checks() -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail))
    return results
