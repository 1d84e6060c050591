"""Steenrod action and A_*-coaction on R.

Two independent routes compute Sq^n: the Cartan route starts from the
closed generator formula and extends through the Cartan formula; the
coaction route expands psi(h_ts) and reads off the coefficient of xi_1^n.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from . import dual
from .dual import XI_ONE, XiMonomial, render_xi, xi, xi_mul, xi_pow2, xi_sort_key
from .ring import (
    ONE,
    Generator,
    Monomial,
    RPoly,
    internal_degree,
    mono_degree,
    mono_mul,
    mono_pow2,
    mono_sort_key,
    render_monomial,
    xor_into,
)

# -- generator formulas -------------------------------------------------------


def _pow2_targets(k: int, t: int, s: int) -> list[tuple[int, int]]:
    out = []
    if k == s and s + 1 < t - 1:
        out.append((t - 1, s + 1))
    if k == s + t - 1 and s < t - 1:
        out.append((t - 1, s))
    return out


def sq_pow2_on_generator(k: int, g: Generator) -> RPoly:
    """Sq^(2^k) on h_ts from the indecomposable formula."""
    t, s = Generator(*g).validate()
    if k < 0:
        raise ValueError("k must be nonnegative")
    return RPoly(((tt, ss, 1),) for tt, ss in _pow2_targets(k, t, s))


@lru_cache(maxsize=None)
def generator_total_square(t: int, s: int) -> tuple[tuple[int, tuple[int, int]], ...]:
    """All ``(n, target)`` with Sq^n(h_ts) = h_target, including n = 0."""
    out = []
    j = 0
    while s + j < t - j:
        out.append(((1 << s) * ((1 << j) - 1), (t - j, s + j)))
        j += 1
    j = 0
    while s + j < t - j - 1:
        out.append(((1 << (s + t - 1)) + (1 << s) * ((1 << j) - 1), (t - j - 1, s + j)))
        j += 1
    out.sort()
    return tuple(out)


def sq_n_on_generator(n: int, g: Generator) -> RPoly:
    """Sq^n on h_ts from the closed formula for every n."""
    t, s = Generator(*g).validate()
    acc: set = set()
    xor_into(acc, (((tt, ss, 1),) for m, (tt, ss) in generator_total_square(t, s) if m == n))
    return RPoly(frozenset(acc))


# -- Cartan route -------------------------------------------------------------


def _mul_sets(a: Iterable[Monomial], b: frozenset) -> frozenset:
    acc: set = set()
    for x in a:
        for y in b:
            m = mono_mul(x, y)
            if m is not None:
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
    return frozenset(acc)


_EMPTY = frozenset()


@lru_cache(maxsize=None)
def _sq_power(n: int, t: int, s: int, e: int) -> frozenset:
    """Sq^n(h_ts^e) by peeling one factor off at a time."""
    deg = internal_degree(t, s)
    if n > e * deg:
        return _EMPTY
    if e == 1:
        return frozenset(((tt, ss, 1),) for m, (tt, ss) in generator_total_square(t, s) if m == n)
    acc: set = set()
    for i, (tt, ss) in generator_total_square(t, s):
        if i > n:
            break
        rest = _sq_power(n - i, t, s, e - 1)
        if rest:
            xor_into(acc, _mul_sets([((tt, ss, 1),)], rest))
    return frozenset(acc)


@lru_cache(maxsize=None)
def _sq_monomial(n: int, m: Monomial) -> frozenset:
    if not m:
        return frozenset([ONE]) if n == 0 else _EMPTY
    if n == 0:
        return frozenset([m])
    t, s, e = m[0]
    rest = m[1:]
    head_deg = e * internal_degree(t, s)
    rest_deg = mono_degree(rest).d
    if n > head_deg + rest_deg:
        return _EMPTY
    if not rest:
        return _sq_power(n, t, s, e)
    acc: set = set()
    for i in range(max(0, n - rest_deg), min(n, head_deg) + 1):
        left = _sq_power(i, t, s, e)
        if not left:
            continue
        right = _sq_monomial(n - i, rest)
        if right:
            xor_into(acc, _mul_sets(left, right))
    return frozenset(acc)


def sq_monomial(n: int, m: Monomial) -> frozenset:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _sq_monomial(n, m)


def sq_n(n: int, p: RPoly) -> RPoly:
    """Sq^n(p), extended from generators by the Cartan formula."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc: set = set()
    for m in p.terms:
        xor_into(acc, _sq_monomial(n, m))
    return RPoly(frozenset(acc))


def total_sq(p: RPoly, degree_window: int | None = None) -> RPoly:
    """Sum of Sq^n(p) over 0 <= n <= max internal degree of p."""
    d = max((mono_degree(m).d for m in p.terms), default=0)
    if degree_window is not None and d > degree_window:
        raise ValueError(f"element has internal degree {d} above window {degree_window}")
    acc: set = set()
    for n in range(d + 1):
        for m in p.terms:
            xor_into(acc, _sq_monomial(n, m))
    return RPoly(frozenset(acc))


# -- coaction route -----------------------------------------------------------


class CoactionValue:
    """An element of A_* (x) R, stored as ``(xi-monomial, R-monomial)`` pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[XiMonomial, Monomial]] = ()):
        if isinstance(terms, frozenset):
            self.terms = terms
        else:
            acc: set = set()
            xor_into(acc, terms)
            self.terms = frozenset(acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, CoactionValue):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[XiMonomial, Monomial]]:
        return iter(sorted(self.terms, key=lambda am: (xi_sort_key(am[0]), mono_sort_key(am[1]))))

    def counit(self) -> RPoly:
        """Apply epsilon (x) id: keep the terms whose xi-part is 1."""
        return RPoly(frozenset(m for a, m in self.terms if a == XI_ONE))

    def coefficient(self, a: XiMonomial) -> RPoly:
        """The R-part paired with the xi-monomial ``a``."""
        return RPoly(frozenset(m for b, m in self.terms if b == a))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{render_xi(a)} (x) {render_monomial(m)}" for a, m in self)

    __repr__ = __str__


def coaction_index_pairs(t: int, s: int) -> list[tuple[int, int]]:
    """``(i, j)`` pairs contributing to psi(h_ts): j >= 0, j+s+1 <= i <= t-j."""
    pairs = []
    j = 0
    while j + s + 1 <= t - j:
        for i in range(j + s + 1, t - j + 1):
            pairs.append((i, j))
        j += 1
    return pairs


def printed_coaction_index_pairs(t: int, s: int) -> list[tuple[int, int]]:
    """Same sum with the outer bound floor((s+t-1)/2); empty inner ranges drop out."""
    return [
        (i, j)
        for j in range((s + t - 1) // 2 + 1)
        for i in range(j + s + 1, t - j + 1)
    ]


def _coaction_mul(p: frozenset, q: frozenset) -> frozenset:
    acc: set = set()
    for a, m in p:
        for b, n in q:
            r = mono_mul(m, n)
            if r is not None:
                x = (xi_mul(a, b), r)
                if x in acc:
                    acc.remove(x)
                else:
                    acc.add(x)
    return frozenset(acc)


@lru_cache(maxsize=None)
def coaction_generator(t: int, s: int) -> frozenset:
    """psi(h_ts): sum of zeta_j^(2^s) xi_{t-i-j}^(2^(i+j+s)) (x) h_{i,j+s}."""
    Generator(t, s).validate()
    acc: set = set()
    for i, j in coaction_index_pairs(t, s):
        target = ((i, j + s, 1),)
        tail = xi(t - i - j, 1 << (i + j + s))
        for z in dual.conjugate_generator(j):
            xor_into(acc, [(xi_mul(xi_pow2(z, s), tail), target)])
    return frozenset(acc)


@lru_cache(maxsize=None)
def _coaction_power(t: int, s: int, e: int) -> frozenset:
    base = coaction_generator(t, s)
    result = frozenset([(XI_ONE, ONE)])
    k = 0
    while e:
        if e & 1:
            result = _coaction_mul(
                result, frozenset((xi_pow2(a, k), mono_pow2(m, k)) for a, m in base)
            )
        e >>= 1
        k += 1
    return result


@lru_cache(maxsize=4096)
def coaction_monomial(m: Monomial) -> frozenset:
    result = frozenset([(XI_ONE, ONE)])
    for t, s, e in m:
        result = _coaction_mul(result, _coaction_power(t, s, e))
    return result


def coaction(p: RPoly) -> CoactionValue:
    """psi(p), extended multiplicatively from the generator formula."""
    acc: set = set()
    for m in p.terms:
        xor_into(acc, coaction_monomial(m))
    return CoactionValue(frozenset(acc))


def sq_via_coaction(n: int, p: RPoly) -> RPoly:
    """Sq^n(p) as the R-part of psi(p) paired with xi_1^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return coaction(p).coefficient(xi(1, n))
