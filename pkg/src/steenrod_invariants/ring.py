"""The bigraded ring R = F2[h_ts | s < t] / (h_ts h_vu | u >= t).

A monomial is stored as a tuple of ``(t, s, e)`` triples sorted ascending by
``(t, s)`` with every exponent ``e >= 1``; the empty tuple is the unit.  A
nonzero monomial is *admissible*: the largest ``s`` among its generators is
smaller than the smallest ``t``.  Products violating this vanish.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import ResourceLimitError

INT64_MAX = 2**63 - 1

Monomial = tuple  # tuple[tuple[int, int, int], ...]
ONE: Monomial = ()

#: Default cap on the number of candidate generators a basis window may use.
DEFAULT_MAX_GENERATORS = 512


def checked(value: int) -> int:
    """Reject integers that would not fit a signed 64-bit degree."""
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise OverflowError(f"internal degree {value} exceeds 64-bit range")
    return value


class Bidegree(NamedTuple):
    sigma: int
    d: int

    def __str__(self) -> str:
        return f"({self.sigma},{self.d})"


class Generator(NamedTuple):
    """The generator h_ts; requires ``0 <= s < t``."""

    t: int
    s: int

    def validate(self) -> "Generator":
        if not (0 <= self.s < self.t):
            raise ValueError(f"h[{self.t},{self.s}] requires 0 <= s < t")
        return self

    @property
    def degree(self) -> Bidegree:
        return generator_degree(self)

    def monomial(self, e: int = 1) -> Monomial:
        self.validate()
        return ((self.t, self.s, e),) if e else ONE

    def __str__(self) -> str:
        return f"h[{self.t},{self.s}]"


def internal_degree(t: int, s: int) -> int:
    if not (0 <= s < t):
        raise ValueError(f"h[{t},{s}] requires 0 <= s < t")
    return checked((1 << s) * checked((1 << t) - 1))


def generator_degree(g: Generator) -> Bidegree:
    return Bidegree(1, internal_degree(g.t, g.s))


# -- monomials ---------------------------------------------------------------


def monomial(factors: dict | Iterable = ()) -> Monomial | None:
    """Build a canonical monomial from ``{(t, s): e}`` or ``(t, s, e)`` triples.

    Returns ``None`` (the zero element) when the factors are not admissible.
    """
    items = factors.items() if isinstance(factors, dict) else (((t, s), e) for t, s, e in factors)
    acc: dict[tuple[int, int], int] = {}
    for (t, s), e in items:
        if e < 0:
            raise ValueError("negative exponent")
        Generator(t, s).validate()
        if e:
            acc[(t, s)] = acc.get((t, s), 0) + e
    m = tuple(sorted((t, s, e) for (t, s), e in acc.items()))
    return m if is_admissible(m) else None


def is_admissible(m: Monomial) -> bool:
    if not m:
        return True
    return max(s for _, s, _ in m) < m[0][0]


def mono_degree(m: Monomial) -> Bidegree:
    sigma = 0
    d = 0
    for t, s, e in m:
        sigma += e
        d = checked(d + checked(e * internal_degree(t, s)))
    return Bidegree(sigma, d)


def mono_mul(a: Monomial, b: Monomial) -> Monomial | None:
    """Product of two admissible monomials, or ``None`` if it is annihilated."""
    if not a:
        return b
    if not b:
        return a
    min_t = a[0][0] if a[0][0] < b[0][0] else b[0][0]
    for _, s, _ in a:
        if s >= min_t:
            return None
    for _, s, _ in b:
        if s >= min_t:
            return None
    acc = {(t, s): e for t, s, e in a}
    for t, s, e in b:
        acc[(t, s)] = acc.get((t, s), 0) + e
    return tuple(sorted((t, s, e) for (t, s), e in acc.items()))


def mono_pow2(m: Monomial, k: int) -> Monomial:
    """``m ** (2**k)``; squaring never leaves the admissible set."""
    return tuple((t, s, e << k) for t, s, e in m)


def mono_sort_key(m: Monomial) -> tuple:
    """Graded lexicographic key: bidegree first, then the factor list."""
    sigma, d = mono_degree(m)
    return (sigma, d, m)


def render_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(f"h[{t},{s}]" if e == 1 else f"h[{t},{s}]^{e}" for t, s, e in m)


# -- polynomials -------------------------------------------------------------


def xor_into(acc: set, items: Iterable) -> None:
    """Add ``items`` into ``acc`` with F2 cancellation."""
    for x in items:
        if x in acc:
            acc.remove(x)
        else:
            acc.add(x)


class RPoly:
    """An element of R: a finite set of admissible monomials over F2."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Monomial] = ()):
        if isinstance(terms, frozenset):
            self.terms = terms
        else:
            acc: set = set()
            xor_into(acc, terms)
            self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def zero(cls) -> "RPoly":
        return cls(frozenset())

    @classmethod
    def one(cls) -> "RPoly":
        return cls(frozenset([ONE]))

    @classmethod
    def gen(cls, t: int, s: int, e: int = 1) -> "RPoly":
        return cls(frozenset([Generator(t, s).monomial(e)]))

    @classmethod
    def from_monomial(cls, m: Monomial | None) -> "RPoly":
        return cls(frozenset() if m is None else frozenset([m]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self.terms, key=mono_sort_key))

    def __contains__(self, m) -> bool:
        return m in self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, RPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __add__(self, other: "RPoly") -> "RPoly":
        return RPoly(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "RPoly") -> "RPoly":
        return poly_multiply(self, other)

    def __pow__(self, e: int) -> "RPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = RPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def degrees(self) -> set[Bidegree]:
        return {mono_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def bidegree(self) -> Bidegree | None:
        """The common bidegree of a nonzero homogeneous element."""
        degs = self.degrees()
        if len(degs) != 1:
            return None
        return next(iter(degs))

    def components(self) -> dict[Bidegree, "RPoly"]:
        out: dict[Bidegree, set] = {}
        for m in self.terms:
            out.setdefault(mono_degree(m), set()).add(m)
        return {bd: RPoly(frozenset(ms)) for bd, ms in sorted(out.items())}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_monomial(m) for m in self)

    def __repr__(self) -> str:
        return f"RPoly({str(self)!r})"


def multiply(a: Monomial, b: Monomial) -> RPoly:
    return RPoly.from_monomial(mono_mul(a, b))


def add(p: RPoly, q: RPoly) -> RPoly:
    return p + q


def poly_multiply(p: RPoly, q: RPoly) -> RPoly:
    acc: set = set()
    for a in p.terms:
        for b in q.terms:
            m = mono_mul(a, b)
            if m is not None:
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
    return RPoly(frozenset(acc))


def render(p: RPoly) -> str:
    return str(p)


# -- bases -------------------------------------------------------------------


def generators_up_to(d: int) -> list[Generator]:
    """All h_ts with internal degree <= d, in ascending (t, s) order."""
    gens = []
    t = 1
    while (1 << t) - 1 <= d:
        for s in range(t):
            if internal_degree(t, s) <= d:
                gens.append(Generator(t, s))
        t += 1
    return gens


def basis(bd: Bidegree | tuple[int, int], max_generators: int = DEFAULT_MAX_GENERATORS) -> list[Monomial]:
    """Admissible monomials of bidegree ``bd`` in canonical order."""
    sigma, d = bd
    if sigma < 0 or d < 0:
        raise ValueError("bidegree must be nonnegative")
    if sigma == 0:
        return [ONE] if d == 0 else []
    gens = generators_up_to(d)
    if len(gens) > max_generators:
        raise ResourceLimitError(
            f"basis window ({sigma},{d}) needs {len(gens)} generators (cap {max_generators})"
        )
    degs = [internal_degree(g.t, g.s) for g in gens]
    out: list[Monomial] = []
    chosen: list[tuple[int, int, int]] = []

    def dfs(start: int, sig_left: int, d_left: int, min_t: int) -> None:
        if sig_left == 0:
            if d_left == 0:
                out.append(tuple(chosen))
            return
        for j in range(start, len(gens)):
            deg = degs[j]
            if deg > d_left:
                continue
            t, s = gens[j]
            if chosen and s >= min_t:
                continue
            mt = min_t if chosen else t
            # every later factor has degree >= 1, so leave room for them
            e_max = min(sig_left, d_left // deg)
            for e in range(1, e_max + 1):
                rest_sig = sig_left - e
                rest_d = d_left - e * deg
                if rest_sig == 0 and rest_d != 0:
                    continue
                if rest_sig and rest_d < rest_sig:
                    continue
                chosen.append((t, s, e))
                dfs(j + 1, rest_sig, rest_d, mt)
                chosen.pop()

    dfs(0, sigma, d, 0)
    out.sort()
    return out
