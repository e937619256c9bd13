"""Exhaustive theorem sweeps over generated graph families.

Each sweep walks a deterministic stream of non-isomorphic graphs, evaluates
one theorem predicate per graph (or one set comparison per order), and
returns a report whose failure records can be replayed through the CLI's
compute command via their graph6 strings.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .canonical import canonical_code
from .characterization import (
    lemma2_sufficient,
    lemma14_sufficient_sd_gt_one,
    longest_paths,
    predicts_sd_one,
)
from .errors import UnknownTheorem
from .family import generate_family, verify_bc_property
from .fixtures import cycle, path
from .graph import Graph, structure_profile
from .graph6 import graph6_encode
from .enumeration import (
    CONNECTED_ORDER_CAP,
    enumerate_connected_graphs,
    enumerate_trees,
)
from .subdivision import msd_gamma_t, sd_gamma_t

_FAMILY_CODE_CAP = 32


@dataclass(frozen=True)
class Record:
    graph6: str
    ok: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    orders_checked: tuple[int, int]
    graphs_checked: int
    failures: tuple[Record, ...]
    elapsed: float
    records: tuple[Record, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def path_cycle_formula(n: int) -> int:
    """The mod-4 value shared by the subdivision and multisubdivision numbers."""
    if n % 4 == 2:
        return 3
    if n % 4 == 3:
        return 2
    return 1


@lru_cache(maxsize=None)
def _sd3(t: Graph) -> int | None:
    return sd_gamma_t(t, cap=3).value


@lru_cache(maxsize=None)
def _sd1(t: Graph) -> int | None:
    return sd_gamma_t(t, cap=1).value


@lru_cache(maxsize=None)
def _msd3(t: Graph) -> int | None:
    return msd_gamma_t(t, cap=3).value


def _fmt(v: int | None) -> str:
    return str(v) if v is not None else ">cap"


def _map_graphs(fn: Callable[[Graph], Record], graphs: Iterable[Graph], jobs: int) -> list[Record]:
    graphs = list(graphs)
    if jobs <= 1:
        return [fn(g) for g in graphs]
    chunk = max(1, len(graphs) // (jobs * 8) or 1)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, graphs, chunksize=chunk))


def _trees(lo: int, hi: int) -> Iterable[Graph]:
    for n in range(lo, hi + 1):
        yield from enumerate_trees(n)


def _connected(lo: int, hi: int) -> Iterable[Graph]:
    for n in range(lo, hi + 1):
        yield from enumerate_connected_graphs(n)


# -- per-graph checks (module level so they pickle for worker pools) ---------

def _check_msd_le_3(g: Graph) -> Record:
    value = _msd3(g)
    return Record(graph6_encode(g), value is not None, "msd_gamma_t <= 3", _fmt(value))


def _check_tree_sd_eq_msd(t: Graph) -> Record:
    sd = _sd3(t)
    msd = _msd3(t)
    return Record(
        graph6_encode(t), sd == msd and sd is not None,
        "sd_gamma_t == msd_gamma_t", f"sd={_fmt(sd)} msd={_fmt(msd)}",
    )


def _check_sd1_characterization(t: Graph) -> Record:
    predicted = predicts_sd_one(t)
    actual = _sd1(t) == 1
    return Record(
        graph6_encode(t), predicted == actual,
        "predicts_sd_one == (sd_gamma_t == 1)",
        f"predicted={predicted} sd1={actual}",
    )


def _check_lemma2(g: Graph) -> Record:
    fires = lemma2_sufficient(g)
    ok = (not fires) or _sd1(g) == 1
    detail = "not fired" if not fires else f"sd1={_sd1(g) == 1}"
    return Record(graph6_encode(g), ok, "lemma2 => sd_gamma_t == 1", detail)


def _check_lemma14(t: Graph) -> Record:
    fires = lemma14_sufficient_sd_gt_one(t)
    ok = (not fires) or _sd1(t) is None
    detail = "not fired" if not fires else ("sd>1" if _sd1(t) is None else "sd=1")
    return Record(graph6_encode(t), ok, "lemma14 => sd_gamma_t > 1", detail)


def _check_universal(g: Graph) -> Record:
    if g.n < 3 or not any(g.degree(v) == g.n - 1 for v in range(g.n)):
        return Record(graph6_encode(g), True, "no universal vertex", "skipped")
    value = _msd3(g)
    return Record(graph6_encode(g), value == 2, "msd_gamma_t == 2", _fmt(value))


def _riti_ok(t: Graph) -> bool:
    prof = structure_profile(t)
    if prof.strong_supports:
        return False
    supports = prof.supports
    for p in longest_paths(t):
        for pth in (p, p[::-1]):
            if len(pth) < 6:
                return False
            if t.degree(pth[1]) != 2 or t.degree(pth[2]) != 2:
                return False
            if pth[3] in supports:
                return False
    return True


def _check_strong_support(t: Graph) -> Record:
    if _msd3(t) != 3:
        return Record(graph6_encode(t), True, "msd != 3", "skipped")
    ok = _riti_ok(t)
    return Record(
        graph6_encode(t), ok,
        "no strong support; deg(v1)=deg(v2)=2; v3 not a support",
        "ok" if ok else "violated",
    )


def _check_bc(member) -> Record:
    ok = verify_bc_property(member)
    return Record(graph6_encode(member.tree), ok, "B|C is a minimum total dominating set", str(ok))


def _check_path_cycle(n: int) -> list[Record]:
    want = path_cycle_formula(n)
    out = []
    for name, g in (("path", path(n)), ("cycle", cycle(n))):
        sd = sd_gamma_t(g, cap=3).value
        msd = _msd3(g)
        out.append(Record(
            graph6_encode(g), sd == want and msd == want,
            f"sd=msd={want} for {name} n={n}", f"sd={_fmt(sd)} msd={_fmt(msd)}",
        ))
    return out


# -- sweeps -------------------------------------------------------------------

def _sweep_msd_le_3(n_max: int, jobs: int):
    hi = min(n_max, CONNECTED_ORDER_CAP)
    return (2, hi), _map_graphs(_check_msd_le_3, _connected(2, hi), jobs)


def _sweep_tree_sd_eq_msd(n_max: int, jobs: int):
    return (3, n_max), _map_graphs(_check_tree_sd_eq_msd, _trees(3, n_max), jobs)


def _sweep_family_sd3(n_max: int, jobs: int):
    family_codes: dict[bytes, Graph] = {}
    for member in generate_family(n_max):
        family_codes[canonical_code(member.tree, cap=_FAMILY_CODE_CAP)] = member.tree
    records = []
    for n in range(3, n_max + 1):
        for t in enumerate_trees(n):
            code = canonical_code(t, cap=_FAMILY_CODE_CAP)
            sd_is_3 = _sd3(t) == 3
            in_family = code in family_codes
            records.append(Record(
                graph6_encode(t), sd_is_3 == in_family,
                "sd_gamma_t == 3 iff tree in family",
                f"sd3={sd_is_3} family={in_family}",
            ))
    return (3, n_max), records


def _sweep_sd1_characterization(n_max: int, jobs: int):
    return (3, n_max), _map_graphs(_check_sd1_characterization, _trees(3, n_max), jobs)


def _sweep_bc(n_max: int, jobs: int):
    return (6, n_max), [_check_bc(m) for m in generate_family(n_max)]


def _sweep_strong_support(n_max: int, jobs: int):
    return (3, n_max), _map_graphs(_check_strong_support, _trees(3, n_max), jobs)


def _sweep_universal(n_max: int, jobs: int):
    hi = min(n_max, CONNECTED_ORDER_CAP)
    return (3, hi), _map_graphs(_check_universal, _connected(3, hi), jobs)


def _sweep_path_cycle(n_max: int, jobs: int):
    records = []
    for n in range(3, n_max + 1):
        records.extend(_check_path_cycle(n))
    return (3, n_max), records


def _sweep_lemma2(n_max: int, jobs: int):
    tree_hi = min(n_max, 12)
    records = _map_graphs(_check_lemma2, _trees(3, tree_hi), jobs)
    records += _map_graphs(_check_lemma2, _connected(3, min(n_max, CONNECTED_ORDER_CAP)), jobs)
    return (3, max(tree_hi, min(n_max, CONNECTED_ORDER_CAP))), records


def _sweep_lemma14(n_max: int, jobs: int):
    return (3, n_max), _map_graphs(_check_lemma14, _trees(3, n_max), jobs)


THEOREMS: dict[str, tuple[int, Callable]] = {
    "msd-le-3": (7, _sweep_msd_le_3),
    "tree-sd-eq-msd": (14, _sweep_tree_sd_eq_msd),
    "family-sd3": (14, _sweep_family_sd3),
    "sd1-characterization": (12, _sweep_sd1_characterization),
    "bc-minimum": (14, _sweep_bc),
    "strong-support": (14, _sweep_strong_support),
    "universal-vertex": (7, _sweep_universal),
    "path-cycle-formulas": (16, _sweep_path_cycle),
    "lemma2-implies": (12, _sweep_lemma2),
    "lemma14-implies": (12, _sweep_lemma14),
}


def run_verification(theorem_id: str, n_max: int | None = None, jobs: int = 1) -> VerificationReport:
    if theorem_id not in THEOREMS:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")
    default_n_max, sweep = THEOREMS[theorem_id]
    n_max = default_n_max if n_max is None else n_max
    start = time.perf_counter()
    orders, records = sweep(n_max, jobs)
    elapsed = time.perf_counter() - start
    failures = tuple(r for r in records if not r.ok)
    return VerificationReport(
        theorem_id=theorem_id,
        orders_checked=orders,
        graphs_checked=len(records),
        failures=failures,
        elapsed=elapsed,
        records=tuple(records),
    )
