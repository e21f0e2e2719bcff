"""Particle calculus on half-lattice paths that start and end at height 1.

Every peak of such a path is assigned a charge by a right-to-left scan of
increasing charge values; a charge-d/2 particle owns a horizontal baseline
nominally of doubled length 2d drawn d below its peak, and one valley per
baseline is discounted from later scans.  The infinite tail supplies an
inexhaustible sea of charge-1/2 particles.  Paths with the same multiset
of charges >= 1 form a sector; the minimal path of a sector lines its
particles up against the left wall in decreasing charge order, and every
other member is reached from it by weight-one particle moves.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import halfpath as hp
from .characters import b_matrix, m_vector_of
from .halfpath import HalfPath
from .qseries import QSeries, pochhammer_finite, q_binomial


class DissectionError(Exception):
    """A peak could not be assigned a charge (model violation)."""


@dataclass(frozen=True)
class Particle:
    peak: int      # doubled position of the peak vertex
    charge2: int   # doubled charge, 1..T-2
    origin: int    # doubled position of the left end of the baseline
    base_h: int    # doubled height of the baseline
    length: int    # doubled length of the baseline; 2*charge2 when unsquashed


@dataclass(frozen=True)
class Dissection:
    path: HalfPath
    particles: tuple[Particle, ...]  # stored peaks, left to right
    sector: tuple[int, ...]          # counts of doubled charges 2..T-2


def dissect(path: HalfPath) -> Dissection:
    """Assign a charge and baseline to every stored peak.

    Only defined on paths with start and tail height 1 (doubled 2); the
    charge-1/2 tail peaks are handled implicitly: each discounts the valley
    to its right, leaving the junction valley available to stored peaks.
    """
    if path.a2 != 2 or path.b2 != 2:
        raise ValueError("dissection is defined on paths from height 1 to height 1")
    t2 = path.t2
    H = path.height
    peaks = [
        i for i in range(1, path.horizon)
        if H(i - 1) < H(i) > H(i + 1)
    ]
    valleys = [
        i for i in range(0, path.horizon + 1)
        if H(i - 1) > H(i) < H(i + 1)
    ]
    discounted: set[int] = set()
    assigned: dict[int, Particle] = {}

    def nearest_valley(peak: int, direction: int) -> int | None:
        candidates = (
            [v for v in valleys if v < peak and v not in discounted]
            if direction < 0
            else [v for v in valleys if v > peak and v not in discounted]
        )
        if not candidates:
            return None
        return max(candidates) if direction < 0 else min(candidates)

    def far_side_stop(peak: int, identified: int, base_h: int) -> int:
        step = 1 if identified < peak else -1
        z = peak + step
        while 0 <= z:
            if H(z) == base_h:
                return z
            z += step
            if z > path.horizon + 2 * t2 + 4:
                raise DissectionError("baseline ran past the tail without closing")
        raise DissectionError("baseline ran off the left wall")

    for charge2 in range(1, t2 - 1):
        for peak in reversed(peaks):
            if peak in assigned:
                continue
            left = nearest_valley(peak, -1)
            right = nearest_valley(peak, +1)
            hits_left = left is not None and H(peak) - H(left) == charge2
            hits_right = right is not None and H(peak) - H(right) == charge2
            if not hits_left and not hits_right:
                continue
            identified = right if hits_right else left  # ties go to the right
            base_h = H(peak) - charge2
            if charge2 == 1:
                origin, end = peak - 1, peak + 1
            else:
                stop = far_side_stop(peak, identified, base_h)
                origin, end = min(identified, stop), max(identified, stop)
            assigned[peak] = Particle(peak, charge2, origin, base_h, end - origin)
            discounted.add(identified)

    missing = [pk for pk in peaks if pk not in assigned]
    if missing:
        raise DissectionError(f"peaks without a charge after the scan: {missing}")
    sector = [0] * (t2 - 3)
    for part in assigned.values():
        if part.charge2 >= 2:
            sector[part.charge2 - 2] += 1
    particles = tuple(assigned[pk] for pk in peaks)
    return Dissection(path, particles, tuple(sector))


def minimal_path(t2: int, sector: tuple[int, ...]) -> HalfPath:
    """Triangles of decreasing charge flush against the left wall."""
    if len(sector) != t2 - 3:
        raise ValueError(f"sector must have length {t2 - 3}, got {len(sector)}")
    if any(x < 0 for x in sector):
        raise ValueError("occupation numbers must be nonnegative")
    hs = [2]
    for charge2 in range(t2 - 2, 1, -1):
        for _ in range(sector[charge2 - 2]):
            hs.extend(range(3, charge2 + 3))          # ascend to 2 + charge2
            hs.extend(range(charge2 + 1, 1, -1))      # descend back to 2
    out = HalfPath.of(t2, 2, 2, hs)
    check = dissect(out)
    if check.sector != tuple(sector):
        raise AssertionError(
            f"minimal path dissects to {check.sector}, expected {tuple(sector)}"
        )
    return out


def minimal_weight(t2: int, sector: tuple[int, ...]) -> int:
    """Half the value of the occupation vector under the charge form."""
    if len(sector) != t2 - 3:
        raise ValueError(f"sector must have length {t2 - 3}, got {len(sector)}")
    bmat = b_matrix(t2)
    total = 0
    for i, ni in enumerate(sector):
        for j, nj in enumerate(sector):
            total += ni * bmat[i][j] * nj
    assert total % 2 == 0
    return total // 2


def m_vector(t2: int, sector: tuple[int, ...]) -> list[int]:
    """Maximal move counts per charge; also the fermionic-sum arguments."""
    return m_vector_of(t2, tuple(sector))


def sector_gf(t2: int, sector: tuple[int, ...], order: int) -> QSeries:
    """Weight generating function of one sector."""
    sector = tuple(sector)
    e = minimal_weight(t2, sector)
    if e > order:
        return QSeries.zero(order)
    ms = m_vector(t2, sector)
    term = pochhammer_finite(ms[0], order - e).invert()
    for j in range(2, t2 - 2):
        term = term * q_binomial(sector[j - 2] + ms[j - 1], sector[j - 2], order - e)
    coeffs = [0] * (order + 1)
    for i, cc in enumerate(term.coeffs):
        coeffs[e + i] = cc
    return QSeries(order, tuple(coeffs))


# -- particle moves -----------------------------------------------------------


@dataclass(frozen=True)
class Move:
    particle: Particle
    owner: Particle


def _candidates(path: HalfPath, dis: Dissection) -> list[Particle]:
    # stored particles plus the first tail particle, which is the only sea
    # member that can ever move
    tail = Particle(path.horizon + 1, 1, path.horizon, 2, 2)
    return list(dis.particles) + [tail]


def _slope_owner(q: Particle, others: list[Particle]) -> Particle | None:
    """The particle whose slope contains q's origin.

    The origin lies on a slope when it sits strictly above that particle's
    baseline within its span, or exactly at the baseline's right end (the
    flush contact of side-by-side particles).  A touch at the same height
    anywhere else is a boundary artifact of a stretched baseline and owns
    nothing.  Among owners, the highest baseline wins; the shortest on ties.
    """
    best = None
    for p in others:
        if p.peak == q.peak:
            continue
        strictly_above = (
            p.base_h < q.base_h and p.origin <= q.origin <= p.origin + p.length
        )
        flush_right = p.base_h == q.base_h and q.origin == p.origin + p.length
        if not (strictly_above or flush_right):
            continue
        key = (-p.base_h, p.length, p.peak)
        if best is None or key < best[0]:
            best = (key, p)
    return best[1] if best else None


def _move_plan(path: HalfPath, q: Particle, p: Particle):
    """The concrete edit a move would perform, or None when the contact is
    spurious (an origin touching a squashed or stretched stretch of slope
    supports no consistent enactment).
    """
    d2 = q.charge2
    hq, hr = path.height(q.peak), path.height(p.peak)
    if q.peak > p.peak and hr == hq + 1:
        # a genuine half-height contact sits at exactly this offset
        if q.peak != p.peak + 2 * d2 + 1:
            return None
        return ("exchange", p.peak, q.peak)
    if q.peak > p.peak and hq == hr:
        origin = q.origin - (q.peak - p.peak)  # hand the role to the left peak
    elif q.peak < p.peak or hq <= hr - 2:
        origin = q.origin
    else:
        return None
    if origin < 2:
        return None
    delta = path.height(origin - 2) - path.height(origin)
    if abs(delta) != 2:
        return None  # the two edges to the left do not align
    top = max(path.height(i) for i in range(origin, origin + 2 * d2 + 1))
    if not 2 <= top + delta <= path.t2:
        return None
    return ("shift", origin)


def enumerate_moves(path: HalfPath) -> list[Move]:
    """All permitted moves: squashed baselines, wall-blocked particles,
    equal-charge contacts and spurious slope touches are excluded.
    """
    dis = dissect(path)
    cands = _candidates(path, dis)
    moves = []
    for q in cands:
        if q.length != 2 * q.charge2:
            continue
        if q.origin <= 0:
            continue
        owner = _slope_owner(q, cands)
        if owner is None or owner.charge2 <= q.charge2:
            continue
        if _move_plan(path, q, owner) is None:
            continue
        moves.append(Move(q, owner))
    return moves


def apply_move(path: HalfPath, move: Move) -> HalfPath:
    """Enact a permitted move; the weight grows by exactly one and the
    sector is unchanged (both asserted by re-dissection).
    """
    q, p = move.particle, move.owner
    d2 = q.charge2
    plan = _move_plan(path, q, p)
    if plan is None:
        raise AssertionError("move is not permitted on this path")
    upto = max(path.horizon, q.origin + 2 * d2, p.peak) + 2 * d2 + 8
    seq = [path.height(i) for i in range(upto + 1)]

    if plan[0] == "exchange":
        _, r_peak, q_peak = plan
        out = list(seq)
        del out[r_peak : r_peak + 2]               # lower the taller peak
        j = q_peak - 2
        out[j + 1 : j + 1] = [out[j] + 1, out[j]]  # raise the mover
    else:
        out = _shift_particle(seq, plan[1], d2)

    new = HalfPath.of(path.t2, path.a2, path.b2, out)
    assert hp.weight(new) == hp.weight(path) + 1, "a move must add exactly one"
    assert dissect(new).sector == dissect(path).sector, "a move must fix the sector"
    return new


def _shift_particle(seq: list[int], origin: int, d2: int) -> list[int]:
    """Slide the triangle over [origin, origin+2*d2] two half-units left and
    two up or down, re-hanging the two displaced edges on its right.
    """
    if origin < 2:
        raise AssertionError("no room to the left of the particle")
    delta = seq[origin - 2] - seq[origin]
    if abs(delta) != 2:
        raise AssertionError("the two edges left of the particle must align")
    s = delta // 2
    end = origin + 2 * d2
    out = seq[: origin - 1]
    out.extend(v + delta for v in seq[origin + 1 : end + 1])
    out.append(seq[end] + s)
    out.append(seq[end])
    out.extend(seq[end + 1 :])
    return out
