"""Invariant subspaces of R under the Steenrod action, one bidegree at a time."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from . import gf2
from .action import _sq_monomial, sq_n
from .errors import ResourceLimitError
from .ring import (
    DEFAULT_MAX_GENERATORS,
    Bidegree,
    Generator,
    Monomial,
    RPoly,
    basis,
    internal_degree,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_AMBIENT_DIM = 20000
EXHAUSTIVE_SUPPORT_DIM = 20


@dataclass
class InvariantReport:
    bidegree: Bidegree
    ambient_dim: int
    invariant_dim: int
    invariant_basis: list[RPoly]
    monomial_invariants: list[Monomial]
    basis: list[Monomial] = field(default_factory=list, repr=False)
    constraining_k: list[int] = field(default_factory=list)

    def contains(self, p: RPoly) -> bool:
        """Whether ``p`` lies in the span of the invariant basis."""
        if not p:
            return True
        index = {m: j for j, m in enumerate(self.basis)}
        if any(m not in index for m in p.terms):
            return False
        rows = [_to_bits(q, index) for q in self.invariant_basis]
        return gf2.span_contains(rows, _to_bits(p, index))


def _to_bits(p: RPoly, index: dict) -> int:
    v = 0
    for m in p.terms:
        v |= 1 << index[m]
    return v


def _from_bits(v: int, cols: Sequence[Monomial]) -> RPoly:
    return RPoly(frozenset(cols[j] for j in gf2.BitVector(len(cols), v).support()))


def pow2_operations(d: int) -> list[int]:
    """Exponents k with 2^k <= d."""
    ks = []
    k = 0
    while (1 << k) <= d:
        ks.append(k)
        k += 1
    return ks


def constraint_rows(cols: Sequence[Monomial], d: int) -> tuple[list[int], list[int]]:
    """Stacked matrices of Sq^(2^k), k with 2^k <= d, as bit rows over ``cols``.

    Returns the rows and the list of k that contributed a nonzero block.
    """
    rows: list[int] = []
    active = []
    for k in pow2_operations(d):
        n = 1 << k
        block: dict[Monomial, int] = {}
        for j, m in enumerate(cols):
            for target in _sq_monomial(n, m):
                block[target] = block.get(target, 0) ^ (1 << j)
        block_rows = [r for _, r in sorted(block.items()) if r]
        if block_rows:
            active.append(k)
            rows.extend(block_rows)
    return rows, active


def _kernel(cols: Sequence[Monomial], d: int) -> tuple[list[int], list[int]]:
    rows, active = constraint_rows(cols, d)
    return gf2.nullspace_bits(rows, len(cols)), active


def invariant_subspace(
    bd: Bidegree | tuple[int, int],
    max_ambient_dim: int = DEFAULT_MAX_AMBIENT_DIM,
    max_generators: int = DEFAULT_MAX_GENERATORS,
) -> InvariantReport:
    """Joint kernel of all Sq^(2^k) on R in bidegree ``bd``."""
    bd = Bidegree(*bd)
    cols = basis(bd, max_generators=max_generators)
    if len(cols) > max_ambient_dim:
        raise ResourceLimitError(
            f"bidegree {bd} has ambient dimension {len(cols)} (cap {max_ambient_dim})"
        )
    if not cols:
        return InvariantReport(bd, 0, 0, [], [], [])
    kernel, active = _kernel(cols, bd.d)
    invariant_basis = [_from_bits(v, cols) for v in kernel]
    monomials = [m for m in cols if is_invariant(RPoly.from_monomial(m))]
    return InvariantReport(bd, len(cols), len(kernel), invariant_basis, monomials, cols, active)


def is_invariant(p: RPoly) -> bool:
    """True iff every homogeneous component is killed by each Sq^(2^k), 2^k <= d."""
    for bd, comp in p.components().items():
        for k in pow2_operations(bd.d):
            if sq_n(1 << k, comp):
                return False
    return True


def classify_monomial(m: Monomial) -> bool:
    """Whether ``m`` has the form h_{n0}^i0 ... h_{n,n-1}^i_{n-1} with i_{n-1} >= 1."""
    if not m:
        return True
    n = m[0][0]
    if any(t != n for t, _, _ in m):
        return False
    return m[-1][1] == n - 1


@dataclass(frozen=True)
class FamilyDescriptor:
    """The monomial h_{n,0}^e0 h_{n,1}^e1 ... h_{n,n-1}^e_{n-1}."""

    n: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.exponents) != self.n:
            raise ValueError("need exactly n exponents for n >= 1")
        if self.exponents[-1] < 1 or min(self.exponents) < 0:
            raise ValueError("last exponent must be >= 1, the rest >= 0")

    def monomial(self) -> Monomial:
        return tuple((self.n, s, e) for s, e in enumerate(self.exponents) if e)

    def degree(self) -> Bidegree:
        return Bidegree(
            sum(self.exponents),
            sum(e * internal_degree(self.n, s) for s, e in enumerate(self.exponents)),
        )


def family_members(n: int, d_max: int) -> list[FamilyDescriptor]:
    """Every family descriptor for ``n`` with internal degree <= d_max."""
    if n < 1:
        raise ValueError("n must be >= 1")
    degs = [internal_degree(n, s) for s in range(n)]
    if degs[-1] > d_max:
        return []
    ranges = [range(d_max // deg + 1) for deg in degs[:-1]] + [range(1, d_max // degs[-1] + 1)]
    out = []
    for exps in product(*ranges):
        if sum(e * deg for e, deg in zip(exps, degs)) <= d_max:
            out.append(FamilyDescriptor(n, tuple(exps)))
    return out


def _report_for(args) -> InvariantReport:
    bd, max_dim, max_gens = args
    return invariant_subspace(bd, max_ambient_dim=max_dim, max_generators=max_gens)


def scan(
    sigma_max: int,
    d_max: int,
    *,
    sigma_min: int = 0,
    d_min: int = 0,
    jobs: int = 1,
    max_ambient_dim: int = DEFAULT_MAX_AMBIENT_DIM,
    max_generators: int = DEFAULT_MAX_GENERATORS,
) -> list[InvariantReport]:
    """Reports for every bidegree in the window, in (sigma, d) order."""
    tasks = [
        (Bidegree(sigma, d), max_ambient_dim, max_generators)
        for sigma in range(sigma_min, sigma_max + 1)
        for d in range(d_min, d_max + 1)
    ]
    if jobs <= 1 or len(tasks) < 2:
        return [_report_for(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order
        return list(pool.map(_report_for, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


@dataclass
class SupportResult:
    element: RPoly
    size: int
    subspace_dim: int
    exhaustive: bool


def span_basis(bd: Bidegree | tuple[int, int], generators: Iterable) -> list[Monomial]:
    """Basis monomials of ``bd`` that only use the given generators."""
    allowed = {tuple(Generator(*g)) for g in generators}
    return [m for m in basis(bd) if all((t, s) in allowed for t, s, _ in m)]


def minimal_support(bd: Bidegree | tuple[int, int], generators: Iterable) -> SupportResult | None:
    """A nonzero invariant in the span of ``generators`` with fewest monomials.

    Exhaustive over the restricted invariant subspace when its dimension is at
    most ``EXHAUSTIVE_SUPPORT_DIM``; otherwise the sparsest echelon vector.
    Returns ``None`` if there is no nonzero invariant in that span.
    """
    bd = Bidegree(*bd)
    cols = span_basis(bd, generators)
    if not cols:
        return None
    kernel, _ = _kernel(cols, bd.d)
    if not kernel:
        return None
    dim = len(kernel)
    if dim <= EXHAUSTIVE_SUPPORT_DIM:
        best = None
        v = 0
        # Gray code walk over all nonzero combinations
        for i in range(1, 1 << dim):
            v ^= kernel[(i & -i).bit_length() - 1]
            w = bin(v).count("1")
            if best is None or w < best[0] or (w == best[0] and v < best[1]):
                best = (w, v)
        exhaustive = True
    else:
        logger.warning("invariant subspace at %s has dimension %d; support is not guaranteed minimal", bd, dim)
        reduced = gf2.rref(gf2.BitMatrix(dim, len(cols), list(kernel)))
        best = min((bin(v).count("1"), v) for v in reduced)
        exhaustive = False
    return SupportResult(_from_bits(best[1], cols), best[0], dim, exhaustive)
