"""Identity-verification suites with machine-readable reports.

Each check compares two independently computed integer series (or runs an
exhaustive structural test) and reports pass/fail with the first mismatch.
Checks are independent jobs, so suites can fan out over processes; the
report order is canonical regardless of scheduling.  VIRACOMB_THREADS
caps the worker count (default: all cores).
"""

from __future__ import annotations

import json
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import bijections as bj
from . import halfpath as hp
from . import particles as pt
from . import rsos as rs
from .characters import (
    CharacterLabel,
    bosonic_character,
    fermionic_character_12,
    fermionic_sum_2_5,
    fermionic_sum_3_7,
    fermionic_sum_4_7,
    theorem1_label,
    verify_symmetries,
)
from .qseries import QSeries, modular_product


@dataclass
class VerifyReport:
    suite: str
    name: str
    params: dict
    order: int
    ok: bool
    mismatch_power: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "name": self.name,
            "params": self.params,
            "order": self.order,
            "status": "pass" if self.ok else "fail",
            "elapsed": round(self.elapsed, 3),
        }
        if not self.ok:
            payload["mismatch_power"] = self.mismatch_power
            payload["lhs"] = self.lhs
            payload["rhs"] = self.rhs
        if self.detail:
            payload["detail"] = self.detail
        return json.dumps(payload, sort_keys=True)


def worker_count() -> int:
    cap = os.environ.get("VIRACOMB_THREADS", "")
    if cap.strip():
        return max(1, int(cap))
    return os.cpu_count() or 1


def _series_report(
    suite: str, name: str, params: dict, lhs: QSeries, rhs: QSeries, t0: float
) -> VerifyReport:
    order = min(lhs.order, rhs.order)
    for k in range(order + 1):
        if lhs.coeffs[k] != rhs.coeffs[k]:
            return VerifyReport(
                suite, name, params, order, False, k,
                lhs.coeffs[k], rhs.coeffs[k], time.time() - t0,
            )
    return VerifyReport(suite, name, params, order, True, elapsed=time.time() - t0)


# -- individual jobs (module level so a process pool can run them) ----------


def _job_xrocha(p: int, pp: int, a: int, b: int, order: int) -> VerifyReport:
    t0 = time.time()
    r = rs.tail_band_index(p, pp, b)
    lhs = rs.generating_function(p, pp, a, b, order)
    rhs = bosonic_character(CharacterLabel(p, pp, r, a), order)
    return _series_report(
        "theorem1", f"X({p},{pp},{a},{b})", dict(p=p, pp=pp, a=a, b=b), lhs, rhs, t0
    )


def _job_yhalf(t2: int, a2: int, b2: int, order: int) -> VerifyReport:
    t0 = time.time()
    lhs = hp.generating_function(t2, a2, b2, order)
    rhs = bosonic_character(theorem1_label(t2, a2 // 2, b2 // 2), order)
    return _series_report(
        "theorem1", f"Y({t2},{a2},{b2})", dict(T=t2, A=a2, B=b2), lhs, rhs, t0
    )


def _job_theorem2(t2: int, order: int) -> VerifyReport:
    t0 = time.time()
    lhs = fermionic_character_12(t2, order)
    rhs = bosonic_character(theorem1_label(t2, 1, 1), order)
    return _series_report("theorem2", f"fermionic(T={t2})", dict(T=t2), lhs, rhs, t0)


_CLOSED_FORMS = {
    "M(2,5)": (fermionic_sum_2_5, (2, 5, 1, 2)),
    "M(3,7)": (fermionic_sum_3_7, (3, 7, 1, 2)),
    "M(4,7)": (fermionic_sum_4_7, (4, 7, 1, 2)),
}

_PRODUCTS = {
    "M(2,5)": (5, frozenset({1, 4}), (2, 5, 1, 2)),
    "M(3,7)": (
        28,
        frozenset(range(1, 28))
        - frozenset({2, 26, 10, 18, 12, 16, 14}),
        (3, 7, 1, 2),
    ),
    "M(3,4)": (16, frozenset({1, 4, 6, 7, 9, 10, 12, 15}), (3, 4, 1, 3)),
}


def _job_closed_form(which: str, order: int) -> VerifyReport:
    t0 = time.time()
    fn, label = _CLOSED_FORMS[which]
    lhs = fn(order)
    rhs = bosonic_character(CharacterLabel(*label), order)
    return _series_report("theorem2", f"closed-form {which}", dict(model=which), lhs, rhs, t0)


def _job_product(which: str, order: int) -> VerifyReport:
    t0 = time.time()
    modulus, residues, label = _PRODUCTS[which]
    lhs = modular_product(modulus, residues, order)
    rhs = bosonic_character(CharacterLabel(*label), order)
    return _series_report(
        "products", f"product {which}", dict(model=which, modulus=modulus), lhs, rhs, t0
    )


def _job_symmetry(p: int, pp: int, r: int, s: int, order: int) -> VerifyReport:
    t0 = time.time()
    rep = verify_symmetries(CharacterLabel(p, pp, r, s), order)
    return VerifyReport(
        "symmetries",
        f"chi({p},{pp},{r},{s})",
        dict(p=p, pp=pp, r=r, s=s),
        order,
        rep.ok,
        rep.mismatch_power,
        rep.lhs_coeff,
        rep.rhs_coeff,
        time.time() - t0,
        {} if rep.ok else {"identity": rep.failed_identity},
    )


def _job_bijection(family: int, p: int, a: int, tail: int, max_weight: int) -> VerifyReport:
    """Exhaustive weight-bounded round trip for one (a, tail) pair."""
    t0 = time.time()
    pp = 2 * p + 1 if family == 1 else 2 * p - 1
    name = f"bij{family}({p},{pp},a={a},tail={tail})"
    params = dict(family=family, p=p, pp=pp, a=a, tail=tail, max_weight=max_weight)
    forward = bj.bij1_forward if family == 1 else bj.bij2_forward
    inverse = bj.bij1_inverse if family == 1 else bj.bij2_inverse
    if family == 1:
        half_args = (2 * p, a, tail)
    else:
        half_args = (pp, tail + 1, a)
    paths = rs.enumerate_paths(p, pp, a, tail, max_weight)
    halves = hp.enumerate_paths(*half_args, max_weight)
    images = set()
    for h in paths:
        img, _ = forward(h)
        if hp.weight(img) != rs.weight(h):
            return VerifyReport(
                "bijections", name, params, max_weight, False,
                detail={"reason": "weight changed", "path": h.to_line()},
                elapsed=time.time() - t0,
            )
        if inverse(img) != h:
            return VerifyReport(
                "bijections", name, params, max_weight, False,
                detail={"reason": "inverse mismatch", "path": h.to_line()},
                elapsed=time.time() - t0,
            )
        images.add(img)
    if len(images) != len(paths) or images != set(halves):
        return VerifyReport(
            "bijections", name, params, max_weight, False,
            detail={
                "reason": "image set does not exhaust the half-path set",
                "paths": len(paths), "halves": len(halves), "images": len(images),
            },
            elapsed=time.time() - t0,
        )
    for g in halves:
        back = inverse(g)
        again, _ = forward(back)
        if again != g:
            return VerifyReport(
                "bijections", name, params, max_weight, False,
                detail={"reason": "forward(inverse) mismatch", "path": g.to_line()},
                elapsed=time.time() - t0,
            )
    return VerifyReport(
        "bijections", name, params, max_weight, True,
        elapsed=time.time() - t0, detail={"paths": len(paths)},
    )


def sector_vectors(t2: int, budget: int):
    """All occupation vectors whose minimal weight is within budget."""
    size = t2 - 3

    def rec(prefix: list[int]):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        k = 0
        while True:
            probe = tuple(prefix + [k] + [0] * (size - len(prefix) - 1))
            if pt.minimal_weight(t2, probe) > budget:
                break
            yield from rec(prefix + [k])
            k += 1

    yield from rec([])


def _job_sector_sum(t2: int, order: int) -> VerifyReport:
    t0 = time.time()
    acc = [0] * (order + 1)
    for vec in sector_vectors(t2, order):
        for i, c in enumerate(pt.sector_gf(t2, vec, order).coeffs):
            acc[i] += c
    lhs = QSeries(order, tuple(acc))
    rhs = hp.generating_function(t2, 2, 2, order)
    return _series_report("sectors", f"sector-sum(T={t2})", dict(T=t2), lhs, rhs, t0)


def _job_sector_group(t2: int, order: int) -> VerifyReport:
    t0 = time.time()
    groups: dict[tuple[int, ...], list[int]] = defaultdict(lambda: [0] * (order + 1))
    for path in hp.enumerate_paths(t2, 2, 2, order):
        groups[pt.dissect(path).sector][hp.weight(path)] += 1
    for sector, counts in sorted(groups.items()):
        expect = pt.sector_gf(t2, sector, order)
        got = QSeries(order, tuple(counts))
        if got.coeffs != expect.coeffs:
            rep = _series_report(
                "sectors", f"sector-group(T={t2})", dict(T=t2, sector=list(sector)),
                got, expect, t0,
            )
            return rep
    return VerifyReport(
        "sectors", f"sector-group(T={t2})", dict(T=t2), order, True,
        elapsed=time.time() - t0, detail={"sectors": len(groups)},
    )


def _job_minimal_sectors(t2: int, budget: int) -> VerifyReport:
    t0 = time.time()
    checked = 0
    for vec in sector_vectors(t2, budget):
        path = pt.minimal_path(t2, vec)  # asserts the dissection round trip
        if hp.weight(path) != pt.minimal_weight(t2, vec):
            return VerifyReport(
                "sectors", f"minimal(T={t2})", dict(T=t2), budget, False,
                detail={"sector": list(vec)}, elapsed=time.time() - t0,
            )
        checked += 1
    return VerifyReport(
        "sectors", f"minimal(T={t2})", dict(T=t2), budget, True,
        elapsed=time.time() - t0, detail={"sectors": checked},
    )


def _job_moves(t2: int, max_weight: int, rounds: int) -> VerifyReport:
    """Apply every permitted move to every enumerated path, then keep going
    breadth-first for a few rounds; apply_move itself asserts the +1 weight
    shift and sector preservation, so this job mainly counts coverage.
    """
    t0 = time.time()
    frontier = list(hp.enumerate_paths(t2, 2, 2, max_weight))
    seen = set(frontier)
    pairs = 0
    for _ in range(rounds):
        nxt = []
        for path in frontier:
            for move in pt.enumerate_moves(path):
                new = pt.apply_move(path, move)
                pairs += 1
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return VerifyReport(
        "sectors", f"moves(T={t2})", dict(T=t2, max_weight=max_weight), max_weight,
        True, elapsed=time.time() - t0, detail={"pairs": pairs},
    )


# -- suite assembly -----------------------------------------------------------

RSOS_FAMILIES = ((2, 5), (3, 5), (3, 7), (4, 7), (4, 9), (5, 9), (5, 11))


def jobs_theorem1(x_order: int = 20, y_order: int = 15, max_t2: int = 10):
    jobs = []
    for p, pp in RSOS_FAMILIES:
        for a in range(2, pp):
            for b in sorted(rs.dark_floors(p, pp)):
                jobs.append((_job_xrocha, (p, pp, a, b, x_order)))
    for t2 in range(4, max_t2 + 1):
        if t2 % 2 == 0:
            aa = range(2, t2 + 1, 2)
            bb = range(2, t2 - 1, 2)
        else:
            aa = range(2, t2, 2)
            bb = range(2, t2, 2)
        for a2 in aa:
            for b2 in bb:
                jobs.append((_job_yhalf, (t2, a2, b2, y_order)))
    return jobs


def jobs_theorem2(order: int = 30, max_t2: int = 10):
    jobs = [(_job_theorem2, (t2, order)) for t2 in range(4, max_t2 + 1)]
    jobs += [(_job_closed_form, (which, order)) for which in sorted(_CLOSED_FORMS)]
    return jobs


def jobs_products(order: int = 30):
    return [(_job_product, (which, order)) for which in sorted(_PRODUCTS)]


def jobs_symmetries(order: int = 30):
    from math import gcd

    jobs = []
    for pp in range(3, 13):
        for p in range(2, pp):
            if gcd(p, pp) != 1:
                continue
            for r in range(1, p):
                for s in range(1, pp):
                    jobs.append((_job_symmetry, (p, pp, r, s, order)))
    return jobs


def jobs_bijections(max_weight: int = 12):
    jobs = []
    for p in (2, 3, 4):
        for a in range(2, 2 * p + 1, 2):
            for b in range(2, 2 * p, 2):
                jobs.append((_job_bijection, (1, p, a, b, max_weight)))
    for p in (3, 4):
        for a in range(2, 2 * p - 1, 2):
            for bb in range(2, 2 * p - 1, 2):
                jobs.append((_job_bijection, (2, p, a, bb - 1, max_weight)))
    return jobs


def jobs_sectors(order: int = 15, group_order: int = 12, max_t2: int = 10,
                 move_rounds: int = 8):
    jobs = []
    for t2 in range(4, max_t2 + 1):
        jobs.append((_job_sector_sum, (t2, order)))
        jobs.append((_job_sector_group, (t2, group_order)))
        jobs.append((_job_minimal_sectors, (t2, group_order)))
        jobs.append((_job_moves, (t2, group_order, move_rounds)))
    return jobs


SUITES = {
    "theorem1": lambda order, max_t2: jobs_theorem1(order, min(order, 15), max_t2),
    "theorem2": lambda order, max_t2: jobs_theorem2(order, max_t2),
    "products": lambda order, max_t2: jobs_products(order),
    "symmetries": lambda order, max_t2: jobs_symmetries(order),
    "bijections": lambda order, max_t2: jobs_bijections(min(order, 12)),
    "sectors": lambda order, max_t2: jobs_sectors(min(order, 15), 12, max_t2),
}


def _run_job(job) -> VerifyReport:
    fn, args = job
    return fn(*args)


def run_jobs(jobs, workers: int | None = None) -> list[VerifyReport]:
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(jobs) <= 1:
        reports = [_run_job(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            reports = list(pool.map(_run_job, jobs))
    return sorted(reports, key=lambda r: (r.suite, r.name))


def run_suite(name: str, order: int = 20, max_t2: int = 10,
              workers: int | None = None) -> list[VerifyReport]:
    if name == "all":
        jobs = []
        for key in ("products", "symmetries", "theorem2", "theorem1",
                    "bijections", "sectors"):
            jobs += SUITES[key](order, max_t2)
        return run_jobs(jobs, workers)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return run_jobs(SUITES[name](order, max_t2), workers)
