"""The dual Steenrod algebra A_* = F2[xi_1, xi_2, ...].

Monomials are tuples of ``(i, e)`` pairs sorted by ``i``; ``()`` is the unit.
Polynomials are frozensets of monomials, tensors frozensets of monomial pairs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .ring import checked, xor_into

XiMonomial = tuple  # tuple[tuple[int, int], ...]
XI_ONE: XiMonomial = ()


def xi(i: int, e: int = 1) -> XiMonomial:
    """The monomial xi_i^e (``xi_0`` is the unit)."""
    if i < 0 or e < 0:
        raise ValueError("xi index and exponent must be nonnegative")
    return ((i, e),) if i and e else XI_ONE


def xi_degree(m: XiMonomial) -> int:
    d = 0
    for i, e in m:
        d = checked(d + checked(e * ((1 << i) - 1)))
    return d


def xi_mul(a: XiMonomial, b: XiMonomial) -> XiMonomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for i, e in b:
        acc[i] = acc.get(i, 0) + e
    return tuple(sorted(acc.items()))


def xi_pow2(m: XiMonomial, k: int) -> XiMonomial:
    return tuple((i, e << k) for i, e in m)


def xi_sort_key(m: XiMonomial) -> tuple:
    return (xi_degree(m), m)


def render_xi(m: XiMonomial, name: str = "xi") -> str:
    if not m:
        return "1"
    return "*".join(f"{name}[{i}]" if e == 1 else f"{name}[{i}]^{e}" for i, e in m)


class DualPoly:
    """An element of A_*."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[XiMonomial] = ()):
        if isinstance(terms, frozenset):
            self.terms = terms
        else:
            acc: set = set()
            xor_into(acc, terms)
            self.terms = frozenset(acc)

    @classmethod
    def xi(cls, i: int, e: int = 1) -> "DualPoly":
        return cls(frozenset([xi(i, e)]))

    @classmethod
    def one(cls) -> "DualPoly":
        return cls(frozenset([XI_ONE]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[XiMonomial]:
        return iter(sorted(self.terms, key=xi_sort_key))

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, m) -> bool:
        return m in self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, DualPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: "DualPoly") -> "DualPoly":
        return DualPoly(self.terms ^ other.terms)

    def __mul__(self, other: "DualPoly") -> "DualPoly":
        return DualPoly(_poly_mul(self.terms, other.terms))

    def __pow__(self, e: int) -> "DualPoly":
        return DualPoly(_poly_pow(self.terms, e))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_xi(m) for m in self)

    __repr__ = __str__


class DualTensor:
    """An element of A_* (x) A_*."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[XiMonomial, XiMonomial]] = ()):
        if isinstance(terms, frozenset):
            self.terms = terms
        else:
            acc: set = set()
            xor_into(acc, terms)
            self.terms = frozenset(acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, DualTensor):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: "DualTensor") -> "DualTensor":
        return DualTensor(self.terms ^ other.terms)

    def __mul__(self, other: "DualTensor") -> "DualTensor":
        return DualTensor(_tensor_mul(self.terms, other.terms))

    def __iter__(self):
        return iter(sorted(self.terms, key=lambda ab: (xi_sort_key(ab[0]), xi_sort_key(ab[1]))))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{render_xi(a)} (x) {render_xi(b)}" for a, b in self)

    __repr__ = __str__


def _poly_mul(p: frozenset, q: frozenset) -> frozenset:
    acc: set = set()
    xor_into(acc, (xi_mul(a, b) for a in p for b in q))
    return frozenset(acc)


def _poly_pow(p: frozenset, e: int) -> frozenset:
    # Frobenius: (sum m)^(2^k) = sum m^(2^k)
    result = frozenset([XI_ONE])
    k = 0
    while e:
        if e & 1:
            result = _poly_mul(result, frozenset(xi_pow2(m, k) for m in p))
        e >>= 1
        k += 1
    return result


def _tensor_mul(p: frozenset, q: frozenset) -> frozenset:
    acc: set = set()
    xor_into(acc, ((xi_mul(a, c), xi_mul(b, d)) for a, b in p for c, d in q))
    return frozenset(acc)


def _tensor_pow(p: frozenset, e: int) -> frozenset:
    result = frozenset([(XI_ONE, XI_ONE)])
    k = 0
    while e:
        if e & 1:
            result = _tensor_mul(result, frozenset((xi_pow2(a, k), xi_pow2(b, k)) for a, b in p))
        e >>= 1
        k += 1
    return result


@lru_cache(maxsize=None)
def _diagonal_generator(n: int) -> frozenset:
    return frozenset((xi(n - i, 1 << i), xi(i)) for i in range(n + 1))


def diagonal(p: DualPoly) -> DualTensor:
    """The coproduct, extended multiplicatively from its value on each xi_n."""
    acc: set = set()
    for m in p.terms:
        term = frozenset([(XI_ONE, XI_ONE)])
        for i, e in m:
            term = _tensor_mul(term, _tensor_pow(_diagonal_generator(i), e))
        xor_into(acc, term)
    return DualTensor(frozenset(acc))


@lru_cache(maxsize=None)
def conjugate_generator(n: int) -> frozenset:
    """chi(xi_n) as a set of monomials; solves sum_i xi_{n-i}^{2^i} chi(xi_i) = 0."""
    if n == 0:
        return frozenset([XI_ONE])
    acc: set = set()
    for i in range(n):
        xor_into(acc, _poly_mul(frozenset([xi(n - i, 1 << i)]), conjugate_generator(i)))
    return frozenset(acc)


def conjugate_monomial(m: XiMonomial) -> frozenset:
    result = frozenset([XI_ONE])
    for i, e in m:
        result = _poly_mul(result, _poly_pow(conjugate_generator(i), e))
    return result


def conjugation(p: DualPoly) -> DualPoly:
    """The antipode chi as an algebra map."""
    acc: set = set()
    for m in p.terms:
        xor_into(acc, conjugate_monomial(m))
    return DualPoly(frozenset(acc))


def zeta(j: int) -> DualPoly:
    return DualPoly(conjugate_generator(j))


def milnor_coefficient(p: DualPoly, n: int) -> int:
    """Coefficient of xi_1^n in ``p``, i.e. the value of Sq^n on it."""
    return int(xi(1, n) in p.terms)
