"""Separation axioms decided by family comparison.

T0/T1 use the minimal-neighbourhood characterizations (m(x) = m(y) iff no
open separates x from y; m(x) = {x} iff opens separate x from everything),
which agree with the pointwise definitions on finite spaces.  T_half asks
that every g-closed set be closed, T_alpha_m that every alpha_m-closed set
be closed, and the singleton dichotomy that every singleton be alpha-closed
or clopen.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import classes
from .space import FiniteSpace, PointSet, points_of

AXIOM_IDS = ("T0", "T1", "T_half", "T_alpha_m", "singleton_dichotomy")


def is_T0(space: FiniteSpace) -> bool:
    """Some open contains exactly one of each pair of distinct points."""
    minn = space.min_nbhd
    return len(set(minn)) == space.n


def is_T1(space: FiniteSpace) -> bool:
    """Each of two distinct points has an open avoiding the other."""
    minn = space.min_nbhd
    return all(minn[x] == 1 << x for x in range(space.n))


def is_T_half(space: FiniteSpace) -> bool:
    """Every g-closed set is closed."""
    return classes.family_set(space, "g_closed") == classes.family_set(space, "closed")


def is_T_alpha_m(space: FiniteSpace) -> bool:
    """Every alpha_m-closed set is closed."""
    return (classes.family_set(space, "alpha_m_closed")
            == classes.family_set(space, "closed"))


def singleton_dichotomy(space: FiniteSpace) -> bool:
    """Every singleton is alpha-closed or clopen."""
    return all(
        classes.is_alpha_closed(space, 1 << x) or space.is_clopen(1 << x)
        for x in range(space.n)
    )


def _t0_witness(space: FiniteSpace):
    minn = space.min_nbhd
    for x in range(space.n):
        for y in range(x + 1, space.n):
            if minn[x] == minn[y]:
                return (1 << x) | (1 << y)
    return None


def _t1_witness(space: FiniteSpace):
    minn = space.min_nbhd
    for x in range(space.n):
        for y in range(space.n):
            if y != x and minn[x] >> y & 1:
                return (1 << x) | (1 << y)
    return None


def _family_gap_witness(space: FiniteSpace, class_id: str):
    # first member of the class that is not closed, canonical order
    closed = classes.family_set(space, "closed")
    for a in classes.family(space, class_id):
        if a not in closed:
            return a
    return None


def _dichotomy_witness(space: FiniteSpace):
    for x in range(space.n):
        s = 1 << x
        if not (classes.is_alpha_closed(space, s) or space.is_clopen(s)):
            return s
    return None


@dataclass(frozen=True)
class AxiomReport:
    """Axiom flags plus one offending witness subset per failed axiom."""

    T0: bool
    T1: bool
    T_half: bool
    T_alpha_m: bool
    singleton_dichotomy: bool
    witnesses: tuple  # ordered (axiom_id, subset-bitmask) pairs

    def to_record(self) -> dict:
        rec = {name: getattr(self, name) for name in AXIOM_IDS}
        rec["witnesses"] = {axiom: points_of(mask) for axiom, mask in self.witnesses}
        return rec


def axiom_report(space: FiniteSpace) -> AxiomReport:
    """Evaluate all five axioms with diagnostics for the failures."""
    finders = {
        "T0": _t0_witness,
        "T1": _t1_witness,
        "T_half": lambda s: _family_gap_witness(s, "g_closed"),
        "T_alpha_m": lambda s: _family_gap_witness(s, "alpha_m_closed"),
        "singleton_dichotomy": _dichotomy_witness,
    }
    flags = {
        "T0": is_T0(space),
        "T1": is_T1(space),
        "T_half": is_T_half(space),
        "T_alpha_m": is_T_alpha_m(space),
        "singleton_dichotomy": singleton_dichotomy(space),
    }
    witnesses = []
    for axiom in AXIOM_IDS:
        if not flags[axiom]:
            mask = finders[axiom](space)
            assert mask is not None  # a failed axiom always has a witness
            witnesses.append((axiom, mask))
    return AxiomReport(witnesses=tuple(witnesses), **flags)
