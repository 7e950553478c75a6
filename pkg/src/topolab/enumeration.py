"""Exhaustive enumeration of labeled topologies, canonical forms, and maps.

Spaces stream in a fixed canonical order: ascending point count, then
lexicographic on the canonically-sorted opens tuple.  The order is stable
across runs and backends, so shards of the stream can be recombined
deterministically.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

from . import _kernels
from .errors import BadParams, ScopeTooLarge
from .maps import SpaceMap
from .space import FiniteSpace, family_sort_key

ENUMERATION_CAP = 5

_labeled_cache: dict = {}
_homeo_cache: dict = {}


def _check_scope(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise BadParams(f"point count {n!r} must be a non-negative integer")
    if n > ENUMERATION_CAP:
        raise ScopeTooLarge(f"enumeration is capped at {ENUMERATION_CAP} points, got {n}")


def _check_shard(shard):
    if shard is None:
        return
    i, k = shard
    if not (isinstance(i, int) and isinstance(k, int) and 0 <= i < k):
        raise BadParams(f"shard {shard!r} must be (index, count) with 0 <= index < count")


def _labeled(n: int) -> tuple:
    spaces = _labeled_cache.get(n)
    if spaces is None:
        spaces = []
        for fm in _kernels.enumerate_masks(n):
            opens = [a for a in range(1 << n) if fm >> a & 1]
            opens.sort(key=family_sort_key)
            spaces.append(FiniteSpace(n, tuple(opens)))
        spaces.sort(key=lambda s: s.opens)
        spaces = tuple(spaces)
        _labeled_cache[n] = spaces
    return spaces


def enumerate_topologies(n: int, shard=None) -> Iterator[FiniteSpace]:
    """All labeled topologies on n points, in canonical stream order.

    ``shard=(i, k)`` yields every k-th space starting at position i, so k
    disjoint shards partition the stream.
    """
    _check_scope(n)
    _check_shard(shard)
    spaces = _labeled(n)
    if shard is None:
        yield from spaces
    else:
        i, k = shard
        yield from spaces[i::k]


def relabel(space: FiniteSpace, perm) -> FiniteSpace:
    """Push the topology through the point relabeling x -> perm[x]."""
    if sorted(perm) != list(range(space.n)):
        raise BadParams(f"{perm!r} is not a permutation of 0..{space.n - 1}")
    opens = []
    for u in space.opens:
        v = 0
        t = u
        while t:
            b = t & -t
            t ^= b
            v |= 1 << perm[b.bit_length() - 1]
        opens.append(v)
    opens.sort(key=family_sort_key)
    return FiniteSpace(space.n, tuple(opens))


def canonical_form(space: FiniteSpace) -> FiniteSpace:
    """Least relabeling of the space; equal iff two spaces are homeomorphic."""
    best = None
    for perm in permutations(range(space.n)):
        cand = relabel(space, perm).opens
        if best is None or cand < best:
            best = cand
    return FiniteSpace(space.n, best)


def enumerate_topologies_up_to_homeo(n: int, shard=None) -> Iterator[FiniteSpace]:
    """One canonical representative per homeomorphism class."""
    _check_scope(n)
    _check_shard(shard)
    reps = _homeo_cache.get(n)
    if reps is None:
        seen = set()
        out = []
        for s in _labeled(n):
            c = canonical_form(s)
            if c.opens not in seen:
                seen.add(c.opens)
                out.append(c)
        out.sort(key=lambda s: s.opens)
        reps = tuple(out)
        _homeo_cache[n] = reps
    if shard is None:
        yield from reps
    else:
        i, k = shard
        yield from reps[i::k]


def spaces_up_to(max_points: int) -> tuple:
    """All labeled topologies with 0..max_points points, stream-ordered."""
    _check_scope(max_points)
    out = []
    for n in range(max_points + 1):
        out.extend(_labeled(n))
    return tuple(out)


def enumerate_maps(domain: FiniteSpace, codomain: FiniteSpace,
                   surjective_only: bool = False,
                   bijective_only: bool = False) -> Iterator[SpaceMap]:
    """All maps domain -> codomain in rank order, optionally filtered."""
    if domain.n > ENUMERATION_CAP or codomain.n > ENUMERATION_CAP:
        raise ScopeTooLarge(
            f"map enumeration is capped at {ENUMERATION_CAP}-point spaces")
    full = codomain.full
    for assign in product(range(codomain.n), repeat=domain.n):
        if bijective_only or surjective_only:
            img = 0
            for y in assign:
                img |= 1 << y
            if img != full:
                continue
            if bijective_only and len(set(assign)) != domain.n:
                continue
        yield SpaceMap(domain, codomain, assign)
