"""Finite topological spaces over a bitmask ground set.

A subset of the ground set {0..n-1} is a plain ``int`` bitmask: bit p set
means point p belongs to the subset.  The empty set is 0 and the full set
is ``(1 << n) - 1``, so both exist for every n >= 0 and equality of
subsets is integer equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from . import _kernels
from .errors import BadParams, NotATopology

MAX_POINTS = 16

# type alias: subsets are bitmasks
PointSet = int


def subset_of_points(points: Iterable[int], n: int) -> PointSet:
    """Bitmask of an iterable of 0-based point indices (order-free)."""
    mask = 0
    for p in points:
        if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < n:
            raise BadParams(f"point {p!r} outside ground set of {n} points")
        mask |= 1 << p
    return mask


def points_of(mask: PointSet) -> list[int]:
    """Ascending point indices of a bitmask."""
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def family_sort_key(mask: PointSet) -> tuple[int, int]:
    """Canonical subset order: cardinality first, then numeric value."""
    return (mask.bit_count(), mask)


def format_subset(mask: PointSet) -> str:
    return "{" + ",".join(str(p) for p in points_of(mask)) + "}"


@dataclass(frozen=True)
class FiniteSpace:
    """An immutable, validated topology on points 0..n-1.

    ``opens`` is deduplicated and stored in canonical order (cardinality,
    then numeric bitmask value).  Instances are pure values: hashable,
    comparable field by field, picklable, and safe to share across threads
    (derived tables are cached on first use and recomputation is
    idempotent).  Construct through :func:`new_space` or the generators;
    the raw constructor does not validate.
    """

    n: int
    opens: tuple[PointSet, ...]

    @property
    def full(self) -> PointSet:
        return (1 << self.n) - 1

    @cached_property
    def _open_set(self) -> frozenset:
        return frozenset(self.opens)

    @cached_property
    def _pack(self):
        # (min_nbhd, min_alpha_nbhd, interior table, closure table)
        return _kernels.space_pack(self.n, self.opens)

    @property
    def min_nbhd(self) -> tuple[PointSet, ...]:
        """Smallest open neighbourhood of each point."""
        return self._pack[0]

    @property
    def min_alpha_nbhd(self) -> tuple[PointSet, ...]:
        """Smallest alpha-open neighbourhood of each point."""
        return self._pack[1]

    def check_subset(self, a: PointSet) -> None:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a <= self.full:
            raise BadParams(f"subset {a!r} does not fit in {self.n} points")

    def subsets(self) -> range:
        """All subset bitmasks, ascending."""
        return range(1 << self.n)

    def complement(self, a: PointSet) -> PointSet:
        self.check_subset(a)
        return self.full ^ a

    def interior(self, a: PointSet) -> PointSet:
        """Largest open subset of ``a``."""
        self.check_subset(a)
        return self._pack[2][a]

    def closure(self, a: PointSet) -> PointSet:
        """Smallest closed superset of ``a``."""
        self.check_subset(a)
        return self._pack[3][a]

    def is_open(self, a: PointSet) -> bool:
        self.check_subset(a)
        return a in self._open_set

    def is_closed(self, a: PointSet) -> bool:
        return self.is_open(self.full ^ a)

    def is_clopen(self, a: PointSet) -> bool:
        return self.is_open(a) and self.is_open(self.full ^ a)

    def to_record(self) -> dict:
        return {"n": self.n, "opens": [points_of(u) for u in self.opens]}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    def __repr__(self):
        opens = ",".join(format_subset(u) for u in self.opens)
        return f"FiniteSpace(n={self.n}, opens=[{opens}])"


def _diagnose_family(n: int, members: set) -> None:
    """Raise NotATopology naming one offending pair of an invalid family."""
    size = 1 << n
    # some pairwise intersection missing?
    for x in range(n):
        bx = 1 << x
        cur = None
        for u in sorted(members):
            if not u & bx:
                continue
            if cur is None:
                cur = u
                continue
            if cur & u not in members:
                raise NotATopology(
                    f"intersection of {format_subset(cur)} and {format_subset(u)}"
                    f" = {format_subset(cur & u)} is not in the family")
            cur &= u
    # all minimal neighbourhoods are members; some union must be missing
    minn = [((1 << n) - 1)] * n
    for x in range(n):
        for u in members:
            if u >> x & 1:
                minn[x] &= u
    for a in range(size):
        if a in members:
            continue
        t = a
        up_closed = True
        while t:
            b = t & -t
            t ^= b
            mx = minn[b.bit_length() - 1]
            if mx & a != mx:
                up_closed = False
                break
        if not up_closed:
            continue
        parts = [minn[p] for p in points_of(a)]
        cur = parts[0]
        for p in parts[1:]:
            if cur | p not in members:
                raise NotATopology(
                    f"union of {format_subset(cur)} and {format_subset(p)}"
                    f" = {format_subset(cur | p)} is not in the family")
            cur |= p
    raise NotATopology("family is not closed under union/intersection")


def _validate_family(n: int, members: set) -> None:
    size = 1 << n
    full = size - 1
    if 0 not in members:
        raise NotATopology("the empty set is missing from the family")
    if full not in members:
        raise NotATopology(f"the full set {format_subset(full)} is missing from the family")
    k = len(members)
    if k == size:
        return  # power set: always a topology
    if k * k <= n * size:
        ordered = sorted(members)
        for i, u in enumerate(ordered):
            for v in ordered[i + 1:]:
                if u | v not in members:
                    raise NotATopology(
                        f"union of {format_subset(u)} and {format_subset(v)}"
                        f" = {format_subset(u | v)} is not in the family")
                if u & v not in members:
                    raise NotATopology(
                        f"intersection of {format_subset(u)} and {format_subset(v)}"
                        f" = {format_subset(u & v)} is not in the family")
        return
    # large families: valid iff equal to the up-sets of their own minimal
    # neighbourhoods (unions/intersections of up-sets are up-sets)
    minn = [full] * n
    for x in range(n):
        for u in members:
            if u >> x & 1:
                minn[x] &= u
    for a in range(size):
        t = a
        up_closed = True
        while t:
            b = t & -t
            t ^= b
            mx = minn[b.bit_length() - 1]
            if mx & a != mx:
                up_closed = False
                break
        if up_closed != (a in members):
            _diagnose_family(n, members)
    return


def new_space(n: int, opens: Iterable[PointSet]) -> FiniteSpace:
    """Validated constructor from bitmask opens.

    Deduplicates, checks every subset fits, checks the topology axioms,
    and stores the family canonically ordered.  Raises NotATopology with
    a message naming one offending pair (or the missing empty/full set).
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= MAX_POINTS:
        raise BadParams(f"point count {n!r} outside 0..{MAX_POINTS}")
    full = (1 << n) - 1
    members = set()
    for u in opens:
        if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u <= full:
            raise BadParams(f"subset {u!r} does not fit in {n} points")
        members.add(u)
    _validate_family(n, members)
    return FiniteSpace(n, tuple(sorted(members, key=family_sort_key)))


def _from_min_nbhds(n: int, minn: list) -> FiniteSpace:
    # opens = subsets closed upward under the given neighbourhood table;
    # such a family is a topology by construction, so skip re-validation
    size = 1 << n
    opens = []
    for a in range(size):
        t = a
        ok = True
        while t:
            b = t & -t
            t ^= b
            mx = minn[b.bit_length() - 1]
            if mx & a != mx:
                ok = False
                break
        if ok:
            opens.append(a)
    return FiniteSpace(n, tuple(sorted(opens, key=family_sort_key)))


def _check_n(n, low: int = 0):
    if not isinstance(n, int) or isinstance(n, bool) or not low <= n <= MAX_POINTS:
        raise BadParams(f"point count {n!r} outside {low}..{MAX_POINTS}")


def discrete(n: int) -> FiniteSpace:
    """Every subset open."""
    _check_n(n)
    return _from_min_nbhds(n, [1 << x for x in range(n)])


def indiscrete(n: int) -> FiniteSpace:
    """Only the empty set and the full set open."""
    _check_n(n)
    full = (1 << n) - 1
    return _from_min_nbhds(n, [full] * n)


def sierpinski() -> FiniteSpace:
    """Two points with exactly one nontrivial open, {0}."""
    return _from_min_nbhds(2, [0b01, 0b11])


def particular_point(n: int, p: int) -> FiniteSpace:
    """Opens are the empty set plus every subset containing ``p``."""
    _check_n(n, low=1)
    if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < n:
        raise BadParams(f"point {p!r} outside ground set of {n} points")
    return _from_min_nbhds(n, [(1 << x) | (1 << p) for x in range(n)])


def excluded_point(n: int, p: int) -> FiniteSpace:
    """Opens are the full set plus every subset avoiding ``p``."""
    _check_n(n, low=1)
    if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < n:
        raise BadParams(f"point {p!r} outside ground set of {n} points")
    full = (1 << n) - 1
    return _from_min_nbhds(n, [full if x == p else 1 << x for x in range(n)])


def khalimsky_interval(n: int) -> FiniteSpace:
    """Digital-line interval: odd points open, even points have the
    three-point neighbourhood {p-1, p, p+1} clipped to range."""
    _check_n(n)
    full = (1 << n) - 1
    minn = []
    for p in range(n):
        if p % 2 == 1:
            minn.append(1 << p)
        else:
            m = 1 << p
            if p > 0:
                m |= 1 << (p - 1)
            if p + 1 < n:
                m |= 1 << (p + 1)
            minn.append(m & full)
    return _from_min_nbhds(n, minn)


GENERATORS = {
    "discrete": (discrete, 1),
    "indiscrete": (indiscrete, 1),
    "sierpinski": (sierpinski, 0),
    "particular_point": (particular_point, 2),
    "excluded_point": (excluded_point, 2),
    "khalimsky_interval": (khalimsky_interval, 1),
}


def generate(name: str, *params: int) -> FiniteSpace:
    """Dispatch to a named generator; BadParams on unknown name or arity."""
    try:
        fn, arity = GENERATORS[name]
    except KeyError:
        raise BadParams(f"unknown generator {name!r}; choose from "
                        + ", ".join(sorted(GENERATORS))) from None
    if len(params) != arity:
        raise BadParams(f"generator {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def space_from_record(obj) -> FiniteSpace:
    """Parse and fully validate the dict form ``{"n": ..., "opens": [[...]]}``."""
    if not isinstance(obj, dict) or set(obj) != {"n", "opens"}:
        raise BadParams("space record must be an object with keys 'n' and 'opens'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise BadParams("space record field 'n' must be an integer")
    raw = obj["opens"]
    if not isinstance(raw, list) or not all(isinstance(u, list) for u in raw):
        raise BadParams("space record field 'opens' must be a list of point lists")
    if not 0 <= n <= MAX_POINTS:
        raise BadParams(f"point count {n!r} outside 0..{MAX_POINTS}")
    return new_space(n, [subset_of_points(u, n) for u in raw])


def space_from_json(text: str) -> FiniteSpace:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParams(f"invalid JSON: {exc}") from None
    return space_from_record(obj)
