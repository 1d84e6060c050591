import itertools

import pytest

from steenrod_invariants.limit import (
    ElementarySite,
    compare_with_closed_form,
    limit_space,
    restrict,
    site_basis,
)
from steenrod_invariants.ring import RPoly, basis, is_admissible

Max = ElementarySite.maximal
Meet = ElementarySite.intersection


@pytest.mark.parametrize("d", range(0, 70))
def test_site_basis_maximal_1(d):
    expected = [((t, 0, 1),) for t in range(1, 8) if 2**t - 1 == d]
    assert site_basis(Max(1), (1, d)) == expected


def test_site_basis_examples():
    assert site_basis(Max(2), (1, 6)) == [((2, 1, 1),)]
    assert site_basis(Max(4), (2, 10)) == []


@pytest.mark.parametrize("n", range(1, 5))
def test_site_basis_is_free_and_admissible(n):
    gens = Max(n).generators(40)
    for sigma in range(1, 4):
        for d in range(0, 41):
            got = site_basis(Max(n), (sigma, d))
            count = sum(
                1
                for combo in itertools.combinations_with_replacement(gens, sigma)
                if sum(2**s * (2**t - 1) for t, s in combo) == d
            )
            assert len(got) == count
            assert all(is_admissible(m) for m in got)


def test_annihilated_product_lives_on_no_site():
    # h[1,0]*h[2,1] = 0 in R
    assert not any(Max(n).contains(1, 0) and Max(n).contains(2, 1) for n in range(1, 6))


def test_restrict_examples():
    assert restrict(Max(2), Meet(1, 2), RPoly.gen(2, 1)) == frozenset()
    assert restrict(Max(2), Meet(1, 2), RPoly.gen(2, 0)) == frozenset([((2, 0, 1),)])
    assert restrict(Max(3), Meet(2, 3), RPoly.one()) == frozenset([()])
    assert restrict(Max(2), Meet(1, 2), RPoly.gen(2, 0) * RPoly.gen(2, 1)) == frozenset()
    with pytest.raises(ValueError):
        restrict(Meet(1, 2), Max(2), RPoly.one())


def test_restriction_composes_on_triple_overlaps():
    for n in range(1, 5):
        for m in range(n + 1, 6):
            for k in range(m + 1, 7):
                gens = Max(n).generators(200)
                for t, s in gens:
                    mono = [((t, s, 1),)]
                    direct = restrict(Max(n), Meet(n, k), mono)
                    via = restrict(Meet(n, m), Meet(n, k), restrict(Max(n), Meet(n, m), mono))
                    assert direct == via


def test_intersection_basis_is_generator_intersection():
    for n in range(1, 4):
        for m in range(n + 1, 5):
            meet = set(Meet(n, m).generators(200))
            assert meet == set(Max(n).generators(200)) & set(Max(m).generators(200))


def test_limit_space_examples():
    assert limit_space((1, 6)).dimension == 1
    assert limit_space((0, 0)).dimension == 1
    assert limit_space((2, 9)).dimension == 1
    assert basis((2, 9)) == [((2, 0, 1), (2, 1, 1))]


@pytest.mark.parametrize("bd, dims", [((1, 6), (1, 1)), ((2, 7), (0, 0)), ((4, 24), None)])
def test_compare_examples(bd, dims):
    v = compare_with_closed_form(bd)
    assert v.iso
    if dims:
        assert (v.ring_dim, v.limit_dim) == dims


@pytest.mark.parametrize("sigma", range(0, 5))
def test_limit_matches_ring_window(sigma):
    for d in range(0, 41):
        v = compare_with_closed_form((sigma, d))
        assert v.limit_dim == len(basis((sigma, d)))
        assert v.iso, v
