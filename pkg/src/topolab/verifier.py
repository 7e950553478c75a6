"""Exhaustive bounded-scope checking of the implication claims.

Every claim is an implication over bound spaces and maps.  ``verify``
sweeps every binding inside a :class:`Scope` (all labeled topologies with
0..max_points points and, per binding, all maps between them), counts the
failing instances, and returns a report whose outcome is either
``holds-on-scope`` or ``refuted``.  Holds-on-scope is exhaustive for the
scope and is not a proof beyond it.

Instances are counted analytically from the binding product, so serial and
parallel runs of the same scope produce identical reports; bindings whose
hypotheses fail count as (vacuously true) checked instances.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from . import _kernels, axioms, classes, maps
from .enumeration import spaces_up_to
from .errors import ArityMismatch, BadParams, InternalCheckError, ScopeTooLarge
from .maps import SpaceMap, assignment_from_index, compose, map_from_record
from .space import FiniteSpace, space_from_record

MAX_SCOPE_POINTS = 5

SCOPE_NOTE = ("exhaustive check of every binding within the bounded scope; "
              "holds-on-scope is not a proof beyond it")

_PROP_IDX = {name: i for i, name in enumerate(_kernels.MAP_PROP_ORDER)}

_DIRECT_MAP_PRED = {
    "continuous": maps.is_continuous,
    "open_map": maps.is_open_map,
    "closed_map": maps.is_closed_map,
    "surjective": maps.is_surjective,
    "bijective": maps.is_bijective,
    "alpha_m_continuous": maps.is_alpha_m_continuous,
    "alpha_m_irresolute": maps.is_alpha_m_irresolute,
    "alpha_m_closed_map": maps.is_alpha_m_closed_map,
    "alpha_m_open_map": maps.is_alpha_m_open_map,
    "open_preimages_alpha_m_open": maps.open_preimages_alpha_m_open,
    "inverse_alpha_m_continuous":
        lambda f: maps.is_alpha_m_continuous(maps.inverse(f)),
}

_LABEL_TEMPLATE = {
    name: name + "({m})" for name in _DIRECT_MAP_PRED
}
_LABEL_TEMPLATE["inverse_alpha_m_continuous"] = "alpha_m_continuous(inverse({m}))"


@dataclass(frozen=True)
class _SpaceClaim:
    hyp: str    # axiom flag name
    concl: str


@dataclass(frozen=True)
class _PairClaim:
    map_hyp: tuple
    space_hyp_x: bool = False       # additional hypothesis: T_alpha_m(X)
    concl_map: str = ""             # empty iff the conclusion is T_alpha_m(Y)


@dataclass(frozen=True)
class _TripleClaim:
    map_prop: str   # hypothesis property of f and g; conclusion property of g after f


_ENCODINGS = {
    "T3_2_ab": _SpaceClaim(hyp="T_alpha_m", concl="singleton_dichotomy"),
    "T3_2_ba": _SpaceClaim(hyp="singleton_dichotomy", concl="T_alpha_m"),
    "P3_3": _PairClaim(map_hyp=("alpha_m_continuous",), space_hyp_x=True,
                       concl_map="continuous"),
    "T3_4b": _PairClaim(map_hyp=("alpha_m_irresolute",), space_hyp_x=True,
                        concl_map="continuous"),
    "T3_5_fwd": _PairClaim(map_hyp=("alpha_m_continuous",),
                           concl_map="open_preimages_alpha_m_open"),
    "T3_5_bwd": _PairClaim(map_hyp=("open_preimages_alpha_m_open",),
                           concl_map="alpha_m_continuous"),
    "P3_6": _TripleClaim(map_prop="alpha_m_continuous"),
    "T3_8b": _TripleClaim(map_prop="alpha_m_closed_map"),
    "T3_9b": _PairClaim(map_hyp=("alpha_m_closed_map",), space_hyp_x=True,
                        concl_map="closed_map"),
    "T3_10": _PairClaim(map_hyp=("surjective", "closed_map", "alpha_m_irresolute"),
                        space_hyp_x=True, concl_map=""),
    "P3_12_ab": _PairClaim(map_hyp=("bijective", "inverse_alpha_m_continuous"),
                           concl_map="alpha_m_open_map"),
    "P3_12_bc": _PairClaim(map_hyp=("bijective", "alpha_m_open_map"),
                           concl_map="alpha_m_closed_map"),
    "P3_12_ca": _PairClaim(map_hyp=("bijective", "alpha_m_closed_map"),
                           concl_map="inverse_alpha_m_continuous"),
}

# claim id -> (encoding key, statement); several ids restate one encoding
# and are swept once per scope but always reported separately
_CLAIMS = {
    "T3_2_ab": ("T3_2_ab", "if every alpha_m-closed set is closed then every "
                           "singleton is alpha-closed or clopen"),
    "T3_2_ba": ("T3_2_ba", "if every singleton is alpha-closed or clopen then "
                           "every alpha_m-closed set is closed"),
    "P3_3": ("P3_3", "an alpha_m-continuous map out of a T_alpha_m space is continuous"),
    "T3_4a": ("P3_3", "an alpha_m-continuous map out of a T_alpha_m space is continuous"),
    "T3_4b": ("T3_4b", "an alpha_m-irresolute map out of a T_alpha_m space is continuous"),
    "T3_5_fwd": ("T3_5_fwd", "an alpha_m-continuous map pulls every open set "
                             "back to an alpha_m-open set"),
    "T3_5_bwd": ("T3_5_bwd", "a map pulling every open set back to an "
                             "alpha_m-open set is alpha_m-continuous"),
    "P3_6": ("P3_6", "alpha_m-continuous maps compose to an alpha_m-continuous "
                     "map when the middle space is T_alpha_m"),
    "T3_8a": ("P3_6", "alpha_m-continuous maps compose to an alpha_m-continuous "
                      "map when the middle space is T_alpha_m"),
    "T3_8b": ("T3_8b", "alpha_m-closed maps compose to an alpha_m-closed map "
                       "when the middle space is T_alpha_m"),
    "T3_9a": ("P3_3", "an alpha_m-continuous map out of a T_alpha_m space is continuous"),
    "T3_9b": ("T3_9b", "an alpha_m-closed map out of a T_alpha_m space is a closed map"),
    "T3_10": ("T3_10", "a surjective closed alpha_m-irresolute image of a "
                       "T_alpha_m space is T_alpha_m"),
    "P3_11": ("T3_8b", "alpha_m-closed maps compose to an alpha_m-closed map "
                       "when the middle space is T_alpha_m"),
    "P3_12_ab": ("P3_12_ab", "a bijection with an alpha_m-continuous inverse "
                             "is an alpha_m-open map"),
    "P3_12_bc": ("P3_12_bc", "a bijective alpha_m-open map is an alpha_m-closed map"),
    "P3_12_ca": ("P3_12_ca", "a bijective alpha_m-closed map has an "
                             "alpha_m-continuous inverse"),
}

CLAIM_IDS = tuple(_CLAIMS)


@dataclass(frozen=True)
class Scope:
    """Bounds of a sweep: all labeled spaces with 0..max_points points.

    ``map_cap`` optionally limits each space pair to its first map_cap maps
    in rank order; ``witness_limit`` caps collected witnesses (None keeps
    every failing instance).
    """

    max_points: int
    map_cap: int = None
    witness_limit: int = 5

    def __post_init__(self):
        if not isinstance(self.max_points, int) or isinstance(self.max_points, bool) \
                or self.max_points < 0:
            raise BadParams(f"max_points {self.max_points!r} must be a non-negative integer")
        if self.max_points > MAX_SCOPE_POINTS:
            raise ScopeTooLarge(
                f"sweeps are capped at {MAX_SCOPE_POINTS} points, got {self.max_points}")
        if self.map_cap is not None and (not isinstance(self.map_cap, int)
                                         or self.map_cap < 1):
            raise BadParams("map_cap must be None or a positive integer")
        if self.witness_limit is not None and (not isinstance(self.witness_limit, int)
                                               or self.witness_limit < 1):
            raise BadParams("witness_limit must be None or a positive integer")

    def to_record(self) -> dict:
        return {"max_points": self.max_points, "map_cap": self.map_cap,
                "witness_limit": self.witness_limit}


@dataclass(frozen=True)
class Witness:
    """One failing binding: all hypotheses hold, the conclusion does not."""

    claim: str
    spaces: tuple
    maps: tuple
    hypotheses: tuple   # ((label, bool), ...)
    conclusion: tuple   # (label, bool)

    def to_record(self) -> dict:
        return {
            "claim": self.claim,
            "spaces": [s.to_record() for s in self.spaces],
            "maps": [m.to_record() for m in self.maps],
            "hypotheses": {label: value for label, value in self.hypotheses},
            "conclusion": {self.conclusion[0]: self.conclusion[1]},
        }


def witness_from_record(obj) -> Witness:
    """Parse a witness record, re-validating the embedded spaces and maps."""
    if not isinstance(obj, dict):
        raise BadParams("witness record must be an object")
    for key in ("claim", "spaces", "maps", "hypotheses", "conclusion"):
        if key not in obj:
            raise BadParams(f"witness record is missing {key!r}")
    claim = obj["claim"]
    if claim not in _CLAIMS:
        raise BadParams(f"unknown claim id {claim!r}")
    spaces = tuple(space_from_record(s) for s in obj["spaces"])
    parsed_maps = tuple(map_from_record(m) for m in obj["maps"])
    hyps = tuple((k, bool(v)) for k, v in obj["hypotheses"].items())
    (c_label, c_value), = obj["conclusion"].items()
    return Witness(claim=claim, spaces=spaces, maps=parsed_maps,
                   hypotheses=hyps, conclusion=(c_label, bool(c_value)))


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one claim sweep over one scope."""

    claim: str
    statement: str
    scope: Scope
    instances: int
    failures: int
    outcome: str        # "holds-on-scope" | "refuted"
    witnesses: tuple
    wall_time: float    # informational; excluded from to_record()

    def to_record(self) -> dict:
        return {
            "claim": self.claim,
            "statement": self.statement,
            "scope": self.scope.to_record(),
            "instances": self.instances,
            "failures": self.failures,
            "outcome": self.outcome,
            "witnesses": [w.to_record() for w in self.witnesses],
        }


# ---------------------------------------------------------------- direct path

def _axiom_flag(name: str, space: FiniteSpace) -> bool:
    if name == "T_alpha_m":
        return axioms.is_T_alpha_m(space)
    if name == "singleton_dichotomy":
        return axioms.singleton_dichotomy(space)
    raise AssertionError(name)


def _bind(claim_id: str, spaces, bound_maps) -> None:
    enc = _ENCODINGS[_CLAIMS[claim_id][0]]
    if isinstance(enc, _SpaceClaim):
        want_spaces, want_maps = 1, 0
    elif isinstance(enc, _PairClaim):
        want_spaces, want_maps = 2, 1
    else:
        want_spaces, want_maps = 3, 2
    if len(spaces) != want_spaces or len(bound_maps) != want_maps:
        raise ArityMismatch(
            f"claim {claim_id} binds {want_spaces} space(s) and {want_maps} map(s); "
            f"got {len(spaces)} and {len(bound_maps)}")
    for i, f in enumerate(bound_maps):
        if f.domain != spaces[i] or f.codomain != spaces[i + 1]:
            raise ArityMismatch(
                f"map {i} endpoints do not match the bound spaces of claim {claim_id}")


class InstanceEvaluation(NamedTuple):
    """Outcome of one bound instance: labeled flags plus overall truth."""

    hypotheses: tuple
    conclusion: tuple
    holds: bool


def evaluate_instance(claim_id: str, spaces, bound_maps=()) -> InstanceEvaluation:
    """Hypothesis flags, conclusion flag, and truth of one bound instance.

    Hypotheses evaluate in declared order and stop at the first failure;
    the conclusion is evaluated only when every hypothesis holds (so the
    returned conclusion flag is None for vacuously true instances).
    """
    if claim_id not in _CLAIMS:
        raise BadParams(f"unknown claim id {claim_id!r}")
    _bind(claim_id, spaces, bound_maps)
    enc = _ENCODINGS[_CLAIMS[claim_id][0]]
    hyps = []

    def run(label, fn):
        value = bool(fn())
        hyps.append((label, value))
        return value

    if isinstance(enc, _SpaceClaim):
        (s,) = spaces
        if not run(f"{enc.hyp}(X)", lambda: _axiom_flag(enc.hyp, s)):
            return InstanceEvaluation(tuple(hyps), (f"{enc.concl}(X)", None), True)
        value = _axiom_flag(enc.concl, s)
        return InstanceEvaluation(tuple(hyps), (f"{enc.concl}(X)", value), value)
    if isinstance(enc, _PairClaim):
        x, y = spaces
        (f,) = bound_maps
        for name in enc.map_hyp:
            label = _LABEL_TEMPLATE[name].format(m="f")
            if not run(label, lambda name=name: _DIRECT_MAP_PRED[name](f)):
                return InstanceEvaluation(tuple(hyps), _pair_concl_label(enc), True)
        if enc.space_hyp_x and not run("T_alpha_m(X)",
                                       lambda: axioms.is_T_alpha_m(x)):
            return InstanceEvaluation(tuple(hyps), _pair_concl_label(enc), True)
        label, _ = _pair_concl_label(enc)
        if enc.concl_map:
            value = bool(_DIRECT_MAP_PRED[enc.concl_map](f))
        else:
            value = axioms.is_T_alpha_m(y)
        return InstanceEvaluation(tuple(hyps), (label, value), value)
    x, y, z = spaces
    f, g = bound_maps
    pred = _DIRECT_MAP_PRED[enc.map_prop]
    for label, fn in ((_LABEL_TEMPLATE[enc.map_prop].format(m="f"), lambda: pred(f)),
                      (_LABEL_TEMPLATE[enc.map_prop].format(m="g"), lambda: pred(g)),
                      ("T_alpha_m(Y)", lambda: axioms.is_T_alpha_m(y))):
        if not run(label, fn):
            return InstanceEvaluation(
                tuple(hyps),
                (_LABEL_TEMPLATE[enc.map_prop].format(m="compose(g,f)"), None),
                True)
    value = bool(pred(compose(g, f)))
    return InstanceEvaluation(
        tuple(hyps),
        (_LABEL_TEMPLATE[enc.map_prop].format(m="compose(g,f)"), value),
        value)


def _pair_concl_label(enc: _PairClaim):
    if enc.concl_map:
        return (_LABEL_TEMPLATE[enc.concl_map].format(m="f"), None)
    return ("T_alpha_m(Y)", None)


def check_instance(claim_id: str, spaces, bound_maps=()) -> bool:
    """True iff the implication holds on this one binding."""
    _, _, holds = evaluate_instance(claim_id, spaces, bound_maps)
    return holds


# ---------------------------------------------------------------- mask path

class _SpaceInfo:
    __slots__ = ("open", "closed", "amc", "amo", "t_alpha_m", "dichotomy")

    def __init__(self, space: FiniteSpace):
        masks = classes._masks(space)
        idx = classes.CLASS_IDS.index
        self.open = masks[idx("open")]
        self.closed = masks[idx("closed")]
        self.amc = masks[idx("alpha_m_closed")]
        self.amo = masks[idx("alpha_m_open")]
        self.t_alpha_m = self.amc == self.closed
        clopen = masks[idx("clopen")]
        alpha_closed = masks[idx("alpha_closed")]
        ok = True
        for x in range(space.n):
            s = 1 << x
            if not (alpha_closed >> s & 1 or clopen >> s & 1):
                ok = False
                break
        self.dichotomy = ok


@lru_cache(maxsize=65536)
def _space_info(space: FiniteSpace) -> _SpaceInfo:
    return _SpaceInfo(space)


@lru_cache(maxsize=65536)
def _pair_masks(x: FiniteSpace, y: FiniteSpace):
    ix = _space_info(x)
    iy = _space_info(y)
    return _kernels.map_masks(x.n, ix.open, ix.closed, ix.amc, ix.amo,
                              y.n, iy.open, iy.closed, iy.amc, iy.amo)


def _map_count(n_dom: int, n_cod: int, cap) -> int:
    m = n_cod ** n_dom  # one empty map when the domain is empty
    return m if cap is None else min(m, cap)


def _count_instances(enc, spaces, scope: Scope) -> int:
    sizes = Counter(s.n for s in spaces)
    if isinstance(enc, _SpaceClaim):
        return len(spaces)
    if isinstance(enc, _PairClaim):
        return sum(ca * cb * _map_count(a, b, scope.map_cap)
                   for a, ca in sizes.items() for b, cb in sizes.items())
    return sum(ca * cb * cc
               * _map_count(a, b, scope.map_cap) * _map_count(b, c, scope.map_cap)
               for a, ca in sizes.items()
               for b, cb in sizes.items()
               for c, cc in sizes.items())


def _space_axiom_flag(name: str, info: _SpaceInfo) -> bool:
    return info.t_alpha_m if name == "T_alpha_m" else info.dichotomy


def _build_pair_witness(claim_id, x, y, rank):
    f = SpaceMap(x, y, assignment_from_index(rank, x.n, y.n))
    hyps, concl, holds = evaluate_instance(claim_id, (x, y), (f,))
    if holds:
        raise InternalCheckError(
            f"sweep marked a passing instance of {claim_id} as failing")
    return Witness(claim=claim_id, spaces=(x, y), maps=(f,),
                   hypotheses=hyps, conclusion=concl)


def _build_triple_witness(claim_id, x, y, z, f_rank, g_rank):
    f = SpaceMap(x, y, assignment_from_index(f_rank, x.n, y.n))
    g = SpaceMap(y, z, assignment_from_index(g_rank, y.n, z.n))
    hyps, concl, holds = evaluate_instance(claim_id, (x, y, z), (f, g))
    if holds:
        raise InternalCheckError(
            f"sweep marked a passing instance of {claim_id} as failing")
    return Witness(claim=claim_id, spaces=(x, y, z), maps=(f, g),
                   hypotheses=hyps, conclusion=concl)


def _allowed_bits(n_maps: int, cap) -> int:
    return (1 << (n_maps if cap is None else min(n_maps, cap))) - 1


def _iter_bits(bits):
    while bits:
        b = bits & -bits
        bits ^= b
        yield b.bit_length() - 1


def _sweep_chunk(claim_id: str, scope: Scope, start: int, stop: int):
    """Failures and witnesses contributed by outer-space positions [start, stop)."""
    enc = _ENCODINGS[_CLAIMS[claim_id][0]]
    spaces = spaces_up_to(scope.max_points)
    limit = scope.witness_limit
    failures = 0
    witnesses = []

    def room():
        return limit is None or len(witnesses) < limit

    if isinstance(enc, _SpaceClaim):
        for ix in range(start, stop):
            s = spaces[ix]
            info = _space_info(s)
            if _space_axiom_flag(enc.hyp, info) and not _space_axiom_flag(enc.concl, info):
                failures += 1
                if room():
                    hyps, concl, holds = evaluate_instance(claim_id, (s,), ())
                    if holds:
                        raise InternalCheckError(
                            f"sweep marked a passing instance of {claim_id} as failing")
                    witnesses.append(Witness(claim=claim_id, spaces=(s,), maps=(),
                                             hypotheses=hyps, conclusion=concl))
        return failures, witnesses

    if isinstance(enc, _PairClaim):
        hyp_idx = [_PROP_IDX[name] for name in enc.map_hyp]
        concl_idx = _PROP_IDX[enc.concl_map] if enc.concl_map else None
        for ix in range(start, stop):
            x = spaces[ix]
            if enc.space_hyp_x and not _space_info(x).t_alpha_m:
                continue
            for y in spaces:
                masks = _pair_masks(x, y)
                n_maps = y.n ** x.n
                hyp_bits = _allowed_bits(n_maps, scope.map_cap)
                for i in hyp_idx:
                    hyp_bits &= masks[i]
                    if not hyp_bits:
                        break
                if not hyp_bits:
                    continue
                if concl_idx is None:
                    fail_bits = 0 if _space_info(y).t_alpha_m else hyp_bits
                else:
                    fail_bits = hyp_bits & ~masks[concl_idx]
                if not fail_bits:
                    continue
                failures += fail_bits.bit_count()
                for rank in _iter_bits(fail_bits):
                    if not room():
                        break
                    witnesses.append(_build_pair_witness(claim_id, x, y, rank))
        return failures, witnesses

    prop_idx = _PROP_IDX[enc.map_prop]
    for ix in range(start, stop):
        x = spaces[ix]
        for y in spaces:
            if not _space_info(y).t_alpha_m:
                continue
            f_bits = (_pair_masks(x, y)[prop_idx]
                      & _allowed_bits(y.n ** x.n, scope.map_cap))
            if not f_bits:
                continue
            f_ranks = list(_iter_bits(f_bits))
            for z in spaces:
                g_bits = (_pair_masks(y, z)[prop_idx]
                          & _allowed_bits(z.n ** y.n, scope.map_cap))
                if not g_bits:
                    continue
                g_ranks = list(_iter_bits(g_bits))
                target = _pair_masks(x, z)[prop_idx]
                want = -1 if limit is None else max(0, limit - len(witnesses))
                count, pairs = _kernels.composition_failures(
                    x.n, y.n, z.n, f_ranks, g_ranks, target, want)
                failures += count
                for f_rank, g_rank in pairs:
                    witnesses.append(
                        _build_triple_witness(claim_id, x, y, z, f_rank, g_rank))
    return failures, witnesses


def _chunks(total: int, jobs: int):
    parts = max(1, min(total, jobs * 4))
    step = (total + parts - 1) // parts
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_sweep(claim_id: str, scope: Scope, jobs: int):
    spaces = spaces_up_to(scope.max_points)
    total = len(spaces)
    if jobs <= 1 or total <= 1:
        failures, witnesses = _sweep_chunk(claim_id, scope, 0, total)
    else:
        failures = 0
        witnesses = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = _chunks(total, jobs)
            for part_failures, part_witnesses in pool.map(
                    _sweep_chunk_star,
                    [(claim_id, scope, lo, hi) for lo, hi in parts]):
                failures += part_failures
                witnesses.extend(part_witnesses)
        if scope.witness_limit is not None:
            witnesses = witnesses[:scope.witness_limit]
    return failures, tuple(witnesses)


def _sweep_chunk_star(args):
    return _sweep_chunk(*args)


def default_scope(claim_id: str) -> Scope:
    """n <= 4 for the space-quantified claims, n <= 3 for map-quantified ones."""
    if claim_id not in _CLAIMS:
        raise BadParams(f"unknown claim id {claim_id!r}")
    enc = _ENCODINGS[_CLAIMS[claim_id][0]]
    return Scope(4) if isinstance(enc, _SpaceClaim) else Scope(3)


def claim_statement(claim_id: str) -> str:
    if claim_id not in _CLAIMS:
        raise BadParams(f"unknown claim id {claim_id!r}")
    return _CLAIMS[claim_id][1]


def verify(claim_id: str, scope: Scope = None, jobs: int = 1) -> TheoremReport:
    """Sweep one claim over a scope (default per claim kind) and report."""
    if claim_id not in _CLAIMS:
        raise BadParams(f"unknown claim id {claim_id!r}")
    if scope is None:
        scope = default_scope(claim_id)
    started = time.perf_counter()
    failures, witnesses = _run_sweep(claim_id, scope, jobs)
    wall = time.perf_counter() - started
    enc = _ENCODINGS[_CLAIMS[claim_id][0]]
    instances = _count_instances(enc, spaces_up_to(scope.max_points), scope)
    outcome = "refuted" if failures else "holds-on-scope"
    if bool(failures) != bool(witnesses):
        raise InternalCheckError(
            f"claim {claim_id}: {failures} failures but {len(witnesses)} witnesses")
    return TheoremReport(claim=claim_id, statement=_CLAIMS[claim_id][1],
                         scope=scope, instances=instances, failures=failures,
                         outcome=outcome, witnesses=witnesses, wall_time=wall)


def verify_all(scope: Scope = None, claims=None, jobs: int = 1):
    """Reports for every claim id (or a subset), reusing shared sweeps.

    With ``scope=None`` each claim runs at its per-kind default scope.
    Claims that restate the same encoding are swept once per scope and
    reported separately.
    """
    if claims is None:
        claims = CLAIM_IDS
    reports = []
    shared = {}
    for claim_id in claims:
        if claim_id not in _CLAIMS:
            raise BadParams(f"unknown claim id {claim_id!r}")
        claim_scope = scope if scope is not None else default_scope(claim_id)
        key = (_CLAIMS[claim_id][0], claim_scope)
        if key in shared:
            failures, witnesses, wall = shared[key]
            enc = _ENCODINGS[_CLAIMS[claim_id][0]]
            instances = _count_instances(
                enc, spaces_up_to(claim_scope.max_points), claim_scope)
            outcome = "refuted" if failures else "holds-on-scope"
            witnesses = tuple(
                Witness(claim=claim_id, spaces=w.spaces, maps=w.maps,
                        hypotheses=w.hypotheses, conclusion=w.conclusion)
                for w in witnesses)
            reports.append(TheoremReport(
                claim=claim_id, statement=_CLAIMS[claim_id][1], scope=claim_scope,
                instances=instances, failures=failures, outcome=outcome,
                witnesses=witnesses, wall_time=wall))
        else:
            report = verify(claim_id, claim_scope, jobs=jobs)
            shared[key] = (report.failures, report.witnesses, report.wall_time)
            reports.append(report)
    return reports


def validate_witness(report: TheoremReport) -> bool:
    """True iff every witness still refutes its claim after a round trip
    through the serialized text form."""
    for w in report.witnesses:
        rec = json.loads(json.dumps(w.to_record()))
        back = witness_from_record(rec)
        if check_instance(back.claim, back.spaces, back.maps):
            return False
    return True


def reports_to_json(reports, indent=None) -> str:
    """Deterministic structured output for a batch of reports."""
    payload = {"note": SCOPE_NOTE,
               "reports": [r.to_record() for r in reports]}
    return json.dumps(payload, indent=indent, separators=(",", ":"))
