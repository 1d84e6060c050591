"""Inverse limit of the cohomology of the maximal elementary sub-Hopf algebras.

Each site has free polynomial cohomology on the h_ts it contains.  The limit
in a fixed bidegree is the space of families ``(x_n)`` over the maximal sites
whose restrictions to every pairwise intersection agree.  This module builds
that equalizer directly and compares it with the closed-form ring R; it does
not use ``ring.basis`` so the two stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable

from . import gf2
from .ring import Bidegree, Monomial, RPoly, basis, internal_degree


@dataclass(frozen=True)
class ElementarySite:
    """Maximal(n) when ``m`` is None, else the intersection of Maximal(n) and Maximal(m)."""

    n: int
    m: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("site index must be >= 1")
        if self.m is not None and not self.n < self.m:
            raise ValueError("intersection sites need n < m")

    @classmethod
    def maximal(cls, n: int) -> "ElementarySite":
        return cls(n)

    @classmethod
    def intersection(cls, n: int, m: int) -> "ElementarySite":
        return cls(n, m)

    @property
    def kind(self) -> str:
        return "maximal" if self.m is None else "intersection"

    @property
    def t_min(self) -> int:
        return self.n if self.m is None else self.m

    @property
    def s_bound(self) -> int:
        """Generators have ``s < s_bound``."""
        return self.n

    def contains(self, t: int, s: int) -> bool:
        return t >= self.t_min and 0 <= s < self.s_bound and s < t

    def is_subsite_of(self, other: "ElementarySite") -> bool:
        return self.t_min >= other.t_min and self.s_bound <= other.s_bound

    def generators(self, d_max: int) -> list[tuple[int, int]]:
        out = []
        t = self.t_min
        while (1 << t) - 1 <= d_max:
            for s in range(min(self.s_bound, t)):
                if internal_degree(t, s) <= d_max:
                    out.append((t, s))
            t += 1
        return out

    def __str__(self) -> str:
        return f"Maximal({self.n})" if self.m is None else f"Intersection({self.n},{self.m})"


def site_basis(site: ElementarySite, bd: Bidegree | tuple[int, int]) -> list[Monomial]:
    """All monomials in the site's generators with bidegree ``bd``; no relations."""
    sigma, d = bd
    if sigma == 0:
        return [()] if d == 0 else []
    gens = site.generators(d)
    out = set()
    for combo in combinations_with_replacement(gens, sigma):
        if sum(internal_degree(t, s) for t, s in combo) != d:
            continue
        exps: dict = {}
        for g in combo:
            exps[g] = exps.get(g, 0) + 1
        out.add(tuple(sorted((t, s, e) for (t, s), e in exps.items())))
    return sorted(out)


def restrict(source: ElementarySite, target: ElementarySite, p: Iterable[Monomial]) -> frozenset:
    """Send generators missing from ``target`` to zero, keep the others."""
    if not target.is_subsite_of(source):
        raise ValueError(f"{target} is not contained in {source}")
    terms = p.terms if isinstance(p, RPoly) else p
    out: set = set()
    for mono in terms:
        if any(not source.contains(t, s) for t, s, _ in mono):
            raise ValueError(f"monomial {mono} does not live on {source}")
        if all(target.contains(t, s) for t, s, _ in mono):
            out ^= {mono}
    return frozenset(out)


def t_max(d: int) -> int:
    """Largest t with 2^t - 1 <= d, and at least 1."""
    t = 1
    while (1 << (t + 1)) - 1 <= d:
        t += 1
    return t


@dataclass
class LimitSpace:
    bidegree: Bidegree
    sites: list[ElementarySite]
    site_bases: dict[ElementarySite, list[Monomial]]
    constraints: list[int]
    families: list[int]
    offsets: dict[ElementarySite, int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.families)

    @property
    def n_variables(self) -> int:
        return sum(len(b) for b in self.site_bases.values())

    def family_components(self, v: int) -> dict[ElementarySite, frozenset]:
        """Split a family vector into its per-site polynomials."""
        out = {}
        for site in self.sites:
            base = self.site_bases[site]
            off = self.offsets[site]
            out[site] = frozenset(m for j, m in enumerate(base) if (v >> (off + j)) & 1)
        return out


def limit_space(bd: Bidegree | tuple[int, int]) -> LimitSpace:
    """Compatible families over Maximal(1..t_max) in bidegree ``bd``.

    Sites beyond ``t_max`` have no generators of degree <= d and add nothing.
    """
    bd = Bidegree(*bd)
    sites = [ElementarySite.maximal(n) for n in range(1, t_max(bd.d) + 1)]
    site_bases = {site: site_basis(site, bd) for site in sites}
    offsets = {}
    off = 0
    for site in sites:
        offsets[site] = off
        off += len(site_bases[site])
    rows: list[int] = []
    for a in range(len(sites)):
        for b in range(a + 1, len(sites)):
            lo, hi = sites[a], sites[b]
            meet = ElementarySite.intersection(lo.n, hi.n)
            row_of: dict[Monomial, int] = {}
            for site in (lo, hi):
                for j, mono in enumerate(site_bases[site]):
                    for image in restrict(site, meet, [mono]):
                        row_of[image] = row_of.get(image, 0) ^ (1 << (offsets[site] + j))
            rows.extend(r for _, r in sorted(row_of.items()) if r)
    families = gf2.nullspace_bits(rows, off)
    return LimitSpace(bd, sites, site_bases, rows, families, offsets)


@dataclass
class Verdict:
    bidegree: Bidegree
    ring_dim: int
    limit_dim: int
    well_defined: bool
    injective: bool
    surjective: bool
    t_max: int

    @property
    def iso(self) -> bool:
        return self.well_defined and self.injective and self.surjective

    def __str__(self) -> str:
        status = "iso" if self.iso else "not iso"
        return f"{status}: dim R = {self.ring_dim}, dim lim = {self.limit_dim}"


def canonical_image(space: LimitSpace, mono: Monomial) -> int:
    """The family a monomial of R defines: itself on every site holding all its factors."""
    v = 0
    for site in space.sites:
        if all(site.contains(t, s) for t, s, _ in mono):
            j = space.site_bases[site].index(mono)
            v |= 1 << (space.offsets[site] + j)
    return v


def compare_with_closed_form(bd: Bidegree | tuple[int, int]) -> Verdict:
    """Check that R^{bd} maps isomorphically onto the computed limit."""
    bd = Bidegree(*bd)
    space = limit_space(bd)
    ring_basis = basis(bd)
    images = [canonical_image(space, m) for m in ring_basis]
    well_defined = all(
        bin(row & v).count("1") % 2 == 0 for v in images for row in space.constraints
    )
    image_rank = gf2.rank(gf2.BitMatrix(len(images), space.n_variables, images))
    injective = image_rank == len(ring_basis)
    surjective = well_defined and image_rank == space.dimension
    return Verdict(bd, len(ring_basis), space.dimension, well_defined, injective, surjective, t_max(bd.d))
