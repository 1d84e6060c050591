import random

import pytest

from steenrod_invariants.action import sq_n
from steenrod_invariants.errors import ResourceLimitError
from steenrod_invariants.invariants import (
    FamilyDescriptor,
    classify_monomial,
    family_members,
    invariant_subspace,
    is_invariant,
    minimal_support,
    scan,
)
from steenrod_invariants.parser import parse_rpoly as P
from steenrod_invariants.ring import RPoly, basis, mono_degree

H = RPoly.gen


def test_invariant_subspace_examples():
    r = invariant_subspace((1, 1))
    assert r.invariant_dim == 1 and r.invariant_basis == [H(1, 0)]
    assert invariant_subspace((1, 3)).invariant_dim == 0
    assert invariant_subspace((4, 24)).contains(H(2, 1) ** 4)


@pytest.mark.parametrize(
    "text, bd",
    [
        ("h[2,0]^2*h[2,1]^2", (4, 18)),
        ("h[2,0]*h[2,1]^3", (4, 21)),
        ("h[2,0]^4*h[2,1]^3", (7, 30)),
        ("h[2,0]^3*h[2,1]^4", (7, 33)),
        ("h[2,0]^2*h[2,1]^5", (7, 36)),
    ],
)
def test_table_memberships(text, bd):
    assert invariant_subspace(bd).contains(P(text))


def test_is_invariant_examples():
    z = P("h[4,0]^2*h[2,1]^3 + h[2,0]^2*h[2,1]^2*h[4,1] + h[3,0]^2*h[2,1]*h[3,1]^2 + h[2,0]^2*h[3,1]^3")
    assert z.bidegree == (5, 48)
    assert is_invariant(z)
    e = P("h[2,0]^8*h[3,1]^4 + h[3,0]^8*h[2,1]^4 + h[2,1]^11*h[3,1]")
    assert e.bidegree == (12, 80)
    assert is_invariant(e)
    assert not is_invariant(H(3, 0))


def test_is_invariant_splits_components():
    assert is_invariant(H(1, 0) + H(2, 1))
    assert not is_invariant(H(1, 0) + H(2, 0))


def test_classify_examples():
    assert classify_monomial(((2, 0, 3), (2, 1, 2)))
    assert not classify_monomial(((3, 0, 1), (3, 1, 1)))
    assert not is_invariant(H(3, 0) * H(3, 1))
    assert classify_monomial(())


def test_family_descriptor():
    fam = FamilyDescriptor(3, (1, 0, 2))
    assert fam.monomial() == ((3, 0, 1), (3, 2, 2))
    assert fam.degree() == mono_degree(fam.monomial())
    with pytest.raises(ValueError):
        FamilyDescriptor(2, (1, 0))
    assert all(m.degree().d <= 40 for m in family_members(2, 40))


def test_scan_sigma1_window():
    nonzero = [r.bidegree.d for r in scan(1, 100, sigma_min=1) if r.invariant_dim]
    assert nonzero == [1, 6, 28]


def test_scan_sigma0():
    reports = scan(0, 30)
    assert [r.bidegree.d for r in reports if r.invariant_dim] == [0]


def test_scan_window_contains_table():
    reports = {tuple(r.bidegree): r for r in scan(4, 24)}
    for text, bd in [("h[2,0]^2*h[2,1]^2", (4, 18)), ("h[2,0]*h[2,1]^3", (4, 21)), ("h[2,1]^4", (4, 24))]:
        assert reports[bd].contains(P(text))


def test_scan_parallel_matches_serial():
    serial = scan(3, 20)
    parallel = scan(3, 20, jobs=2)
    assert [(r.bidegree, r.invariant_basis) for r in serial] == [(r.bidegree, r.invariant_basis) for r in parallel]


def test_degenerate_bidegree():
    r = invariant_subspace((2, 7))
    assert (r.ambient_dim, r.invariant_dim, r.invariant_basis) == (0, 0, [])


def test_resource_limit():
    with pytest.raises(ResourceLimitError):
        invariant_subspace((6, 40), max_ambient_dim=1)


@pytest.mark.parametrize("sigma, d", [(s, d) for s in range(1, 8) for d in range(0, 45, 3)])
def test_report_consistency(sigma, d):
    r = invariant_subspace((sigma, d))
    assert r.invariant_dim == len(r.invariant_basis) <= r.ambient_dim
    assert set(r.monomial_invariants) <= set(r.basis)
    for p in r.invariant_basis:
        assert is_invariant(p)
        # full Sq^n vanishing, not just the 2-power generators
        for n in range(1, d + 1):
            assert not sq_n(n, p)
    rng = random.Random(sigma * 1000 + d)
    for _ in range(1000 if r.ambient_dim else 0):
        p = RPoly(m for m in r.basis if rng.random() < 0.5)
        assert r.contains(p) == is_invariant(p)


def test_echelon_determinism():
    a = invariant_subspace((6, 36))
    b = invariant_subspace((6, 36))
    assert [str(p) for p in a.invariant_basis] == [str(p) for p in b.invariant_basis]


def test_subring_property():
    rng = random.Random(9)
    pools = [invariant_subspace(bd).invariant_basis for bd in [(2, 12), (3, 15), (4, 18), (2, 9), (1, 28), (3, 21)]]
    elems = [p for pool in pools for p in pool]
    assert elems
    for _ in range(100):
        p, q = rng.choice(elems), rng.choice(elems)
        assert is_invariant(p * q)
        if p.bidegree == q.bidegree:
            assert is_invariant(p + q)


def test_monomial_classification_window():
    for d in range(0, 61):
        for sigma in range(0, d + 1):
            for m in basis((sigma, d)):
                assert is_invariant(RPoly([m])) == classify_monomial(m), m


def test_minimal_support_sporadic():
    span = [(i, s) for i in range(2, 6) for s in (0, 1)]
    big = minimal_support((13, 104), span)
    small = minimal_support((9, 104), span)
    assert big is not None and small is not None
    assert is_invariant(big.element) and is_invariant(small.element)
    assert (big.size, small.size) == (12, 8)
    assert minimal_support((1, 3), [(2, 0)]) is None


def test_family_members_rejects_n0():
    with pytest.raises(ValueError):
        family_members(0, 10)
    assert family_members(4, 60) == []
