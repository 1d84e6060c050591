import random

import pytest

from steenrod_invariants.dual import (
    XI_ONE,
    DualPoly,
    DualTensor,
    _tensor_mul,
    conjugate_generator,
    conjugation,
    diagonal,
    milnor_coefficient,
    xi,
    xi_degree,
    xi_mul,
    xi_pow2,
    zeta,
)


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def milnor_closed_form(n):
    """chi(xi_n) as the sum over compositions (a1..ak) of n of prod xi_{ai}^{2^(a1+..+a_{i-1})}."""
    acc = set()
    for comp in compositions(n):
        m = XI_ONE
        shift = 0
        for a in comp:
            m = xi_mul(m, xi(a, 1 << shift))
            shift += a
        acc ^= {m}
    return frozenset(acc)


def test_diagonal_examples():
    assert diagonal(DualPoly.xi(1)) == DualTensor([(xi(1), XI_ONE), (XI_ONE, xi(1))])
    assert diagonal(DualPoly.xi(2)) == DualTensor([(xi(2), XI_ONE), (xi(1, 2), xi(1)), (XI_ONE, xi(2))])
    assert diagonal(DualPoly.xi(1, 2)) == DualTensor([(xi(1, 2), XI_ONE), (XI_ONE, xi(1, 2))])


def test_conjugation_examples():
    assert conjugation(DualPoly.xi(1)) == DualPoly.xi(1)
    assert conjugation(DualPoly.xi(2)) == DualPoly.xi(2) + DualPoly.xi(1, 3)
    assert conjugation(conjugation(DualPoly.xi(3))) == DualPoly.xi(3)


@pytest.mark.parametrize("n", range(0, 9))
def test_conjugation_matches_closed_form(n):
    assert conjugate_generator(n) == milnor_closed_form(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_antipode_axiom_both_sides(n):
    left = DualPoly()
    right = DualPoly()
    for i in range(n + 1):
        left = left + zeta(n - i) ** (1 << i) * DualPoly.xi(i)
        right = right + DualPoly.xi(n - i, 1 << i) * zeta(i)
    assert not left
    assert not right


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugation_involution_and_leading_term(n):
    assert conjugation(zeta(n)) == DualPoly.xi(n)
    assert milnor_coefficient(zeta(n), 2**n - 1) == 1
    assert all(xi_degree(m) == 2**n - 1 for m in zeta(n))


def test_conjugation_involution_random():
    rng = random.Random(7)
    for _ in range(40):
        p = DualPoly(
            tuple(sorted({rng.randint(1, 4): rng.randint(1, 3) for _ in range(rng.randint(0, 3))}.items()))
            for _ in range(rng.randint(1, 4))
        )
        assert conjugation(conjugation(p)) == p


def test_milnor_coefficient():
    p = DualPoly.xi(2) + DualPoly.xi(1, 3)
    assert milnor_coefficient(p, 3) == 1
    assert milnor_coefficient(p, 2) == 0
    assert milnor_coefficient(zeta(3), 7) == 1
    assert milnor_coefficient(DualPoly.one(), 0) == 1


def _delta_left(t: DualTensor):
    return {(a1, a2, b) for a, b in t.terms for a1, a2 in diagonal(DualPoly([a])).terms}


@pytest.mark.parametrize("n", range(1, 7))
def test_diagonal_coassociative(n):
    delta = diagonal(DualPoly.xi(n))
    left = set()
    right = set()
    for a, b in delta.terms:
        for a1, a2 in diagonal(DualPoly([a])).terms:
            left ^= {(a1, a2, b)}
        for b1, b2 in diagonal(DualPoly([b])).terms:
            right ^= {(a, b1, b2)}
    assert left == right


@pytest.mark.parametrize("n", range(1, 9))
def test_diagonal_preserves_degree(n):
    for a, b in diagonal(DualPoly.xi(n)).terms:
        assert xi_degree(a) + xi_degree(b) == 2**n - 1


def test_diagonal_is_multiplicative():
    p, q = DualPoly.xi(1) + DualPoly.xi(2), DualPoly.xi(3, 2)
    assert diagonal(p * q) == DualTensor(_tensor_mul(diagonal(p).terms, diagonal(q).terms))
    assert diagonal(p * p) == diagonal(DualPoly(xi_pow2(m, 1) for m in p))
