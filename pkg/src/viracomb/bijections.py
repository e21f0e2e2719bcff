"""Weight-preserving bijections between RSOS and half-lattice paths.

Two families are covered, with all intermediate data exposed in a trace:

* p' = 2p+1, start and tail heights both even: particles are adjacent
  pairs of scoring vertices; removing them, reading the cut path verbatim
  as doubled heights, and re-heightening a staggered set of peaks gives a
  half-lattice path of the same weight.

* p' = 2p-1, even start a and tail at odd b-1: particles are adjacent
  pairs of non-scoring vertices against an infinite zero-label sea; after
  removal the cut path is flipped, every peak is raised half a unit, a
  prefix of the label partition raises further peaks, and the remainder is
  deposited at accretion vertices.

Every stage asserts the exact weight bookkeeping it is supposed to
satisfy, so a violation surfaces at the stage that caused it rather than
as a bad round trip.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import halfpath as hp
from . import rsos
from .halfpath import HalfPath
from .rsos import RsosPath


class BijectionDomainError(ValueError):
    """Input path lies outside the family a bijection is defined on."""


class StructureError(Exception):
    """Input passed validation but is not in the bijection's image."""


@dataclass(frozen=True)
class Bij1Trace:
    h_cut: RsosPath
    n: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    h_hat_cut: HalfPath
    h_hat: HalfPath


@dataclass(frozen=True)
class Bij2Trace:
    h_cut: RsosPath
    n: int
    k: int
    m: int
    c: int
    d: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    h_hat_cut: HalfPath
    h_hat_int: HalfPath
    h_hat: HalfPath


# -- small sequence editors --------------------------------------------------


def _rsos_seq(path: RsosPath, upto: int) -> list[int]:
    return [path.height(x) for x in range(upto + 1)]


def _half_seq(path: HalfPath, upto: int) -> list[int]:
    return [path.height(i) for i in range(upto + 1)]


def _delete_pairs(seq: list[int], positions: list[int]) -> list[int]:
    """Delete (pos, pos+1) for each position, processed right to left."""
    out = list(seq)
    for pos in sorted(positions, reverse=True):
        del out[pos : pos + 2]
    return out


def _delete_positions(seq: list[int], positions: set[int]) -> list[int]:
    return [v for i, v in enumerate(seq) if i not in positions]


def _insert_notches(seq: list[int], notches: list[tuple[int, int]]) -> list[int]:
    """Insert (value+step, value) after each (pos, step), right to left.

    step +1 raises a notch above the host vertex, step -1 digs one below;
    repeated entries at one position stack into an oscillation.
    """
    out = list(seq)
    for pos, step in sorted(notches, reverse=True):
        h = out[pos]
        out[pos + 1 : pos + 1] = [h + step, h]
    return out


def _is_partition(parts: tuple[int, ...]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and all(
        x >= 0 for x in parts
    )


def _pair_runs(positions: list[int]) -> list[tuple[int, int]]:
    """Pair consecutive positions left to right inside each maximal run.

    A leftover single at the right end of a run is not a particle.
    """
    pairs = []
    i = 0
    while i < len(positions):
        j = i
        while j + 1 < len(positions) and positions[j + 1] == positions[j] + 1:
            j += 1
        run = positions[i : j + 1]
        for k in range(0, len(run) - 1, 2):
            pairs.append((run[k], run[k + 1]))
        i = j + 1
    return pairs


def _half_straight_count(path: HalfPath) -> int:
    return sum(1 for i in range(path.horizon + 1) if path.is_straight(i))


def _half_peak_position(path: HalfPath, number: int) -> int:
    """Doubled position of the number-th peak from the left (tail included)."""
    stored = [
        i
        for i in range(1, path.horizon + 1)
        if path.height(i - 1) < path.height(i) > path.height(i + 1)
    ]
    if number <= len(stored):
        return stored[number - 1]
    return path.horizon + 1 + 2 * (number - len(stored) - 1)


def _notch_step(height: int) -> int:
    # Even hosts take the notch below, odd hosts above; in both families
    # this lands the new pair of edges in the band that keeps the inserted
    # vertices' scoring class correct and the host's class unchanged.
    return -1 if height % 2 == 0 else 1


# -- the p' = 2p+1 family ----------------------------------------------------


def bij1_forward(path: RsosPath) -> tuple[HalfPath, Bij1Trace]:
    p, pp, a, b = path.p, path.p_prime, path.a, path.b
    if pp != 2 * p + 1:
        raise BijectionDomainError(f"expected p' = 2p+1, got ({p},{pp})")
    if a % 2 or b % 2:
        raise BijectionDomainError(f"start a={a} and tail b={b} must be even")
    if not (1 < a <= 2 * p and 1 < b < 2 * p):
        raise BijectionDomainError(f"(a,b)=({a},{b}) out of range for p={p}")

    w = rsos.weight(path)
    info = rsos.classify(path)
    scoring = [v.x for v in info if v.scoring]
    k = len(scoring)
    particles = _pair_runs(scoring)
    n = len(particles)

    ns_flag = {v.x for v in info if not v.scoring}
    lam = tuple(
        sum(1 for y in ns_flag if y < x1) for x1, _ in reversed(particles)
    )
    assert _is_partition(lam)

    doomed = {x for pair in particles for x in pair}
    seq = _rsos_seq(path, path.horizon + 2 * n + 2)
    h_cut = RsosPath.of(p, pp, a, b, _delete_positions(seq, doomed))

    w_cut = rsos.weight(h_cut)
    k_cut = sum(1 for v in rsos.classify(h_cut) if v.scoring)
    assert k_cut == k - 2 * n, "particle removal must drop the scoring count by 2n"
    assert w_cut == w - sum(lam) - n * (k - n), "cut-path weight bookkeeping failed"

    h_hat_cut = HalfPath.of(2 * p, a, b, h_cut.heights)
    assert hp.weight(h_hat_cut) == w_cut, "verbatim reread must preserve the weight"

    ell = _half_straight_count(h_hat_cut)
    assert ell == 2 * k_cut

    mu = tuple(lam[i] + n - i for i in range(n))  # lam_i + n + 1 - (i+1)
    assert all(mu[i] > mu[i + 1] for i in range(n - 1))

    notch_at = [_half_peak_position(h_hat_cut, number) for number in mu]
    upto = h_hat_cut.horizon + 2 * n + 4
    if notch_at:
        upto = max(upto, max(notch_at) + 2 * n + 4)
    seq2 = _half_seq(h_hat_cut, upto)
    h_hat = HalfPath.of(2 * p, a, b, _insert_notches(seq2, [(x, 1) for x in notch_at]))

    w_hat = hp.weight(h_hat)
    assert w_hat == hp.weight(h_hat_cut) + n * (ell + n - 1) // 2 + sum(mu)
    assert w_hat == w, "the map must preserve the weight"
    return h_hat, Bij1Trace(h_cut, n, lam, mu, h_hat_cut, h_hat)


def bij1_inverse(path: HalfPath) -> RsosPath:
    t2, a, b = path.t2, path.a2, path.b2
    if t2 % 2:
        raise BijectionDomainError(f"expected even T = 2p, got {t2}")
    p = t2 // 2
    pp = t2 + 1
    if not (1 < a <= 2 * p and 1 < b < 2 * p):
        raise BijectionDomainError(f"(A,B)=({a},{b}) out of range for T={t2}")

    w_hat = hp.weight(path)
    peaks = [
        i
        for i in range(1, path.horizon + 1)
        if path.height(i - 1) < path.height(i) > path.height(i + 1)
    ]
    integer_peaks = [(num + 1, pos) for num, pos in enumerate(peaks)
                     if path.height(pos) % 2 == 0]
    n = len(integer_peaks)
    mu = tuple(num for num, _ in reversed(integer_peaks))
    lam = tuple(mu[i] - n + i for i in range(n))  # mu_i - n - 1 + (i+1)
    if not _is_partition(lam):
        raise StructureError(f"integer-peak numbers {mu} do not define a partition")

    seq = _delete_pairs(list(path.doubled), [pos for _, pos in integer_peaks])
    h_hat_cut = HalfPath.of(t2, a, b, seq)
    if any(
        h_hat_cut.height(i - 1) < h_hat_cut.height(i) > h_hat_cut.height(i + 1)
        and h_hat_cut.height(i) % 2 == 0
        for i in range(1, h_hat_cut.horizon + 1)
    ):
        raise StructureError("integer peaks remain after unstacking")

    h_cut = RsosPath.of(p, pp, a, b, h_hat_cut.doubled)

    info = rsos.classify(h_cut)
    ns_list = [v.x for v in info if not v.scoring]

    def nonscoring_position(j: int) -> int:
        if j <= 0:
            return 0
        if j <= len(ns_list):
            return ns_list[j - 1]
        return h_cut.horizon + (j - len(ns_list))  # tail vertices

    notches = []
    for lam_i in lam:
        pos = nonscoring_position(lam_i)
        height = h_cut.height(pos)
        step = _notch_step(height)
        if not 1 <= height + step <= pp - 1:
            raise StructureError(f"reinsertion at position {pos} leaves the strip")
        notches.append((pos, step))

    upto = h_cut.horizon + 2 * n + 4
    if notches:
        upto = max(upto, max(pos for pos, _ in notches) + 2 * n + 4)
    seq2 = _insert_notches(_rsos_seq(h_cut, upto), notches)
    out = RsosPath.of(p, pp, a, b, seq2)
    if rsos.weight(out) != w_hat:
        raise StructureError("reinserted path does not reproduce the weight")
    return out


# -- the p' = 2p-1 family ----------------------------------------------------


def bij2_forward(path: RsosPath) -> tuple[HalfPath, Bij2Trace]:
    p, pp, a = path.p, path.p_prime, path.a
    if pp != 2 * p - 1:
        raise BijectionDomainError(f"expected p' = 2p-1, got ({p},{pp})")
    if p < 3:
        raise BijectionDomainError(f"need p >= 3, got {p}")
    bb = path.b + 1  # the even reference height just above the odd tail
    if a % 2 or bb % 2:
        raise BijectionDomainError(
            f"start a={a} must be even and tail {path.b} odd"
        )
    if not (1 < a < pp and 1 < bb < pp):
        raise BijectionDomainError(f"(a, tail+1)=({a},{bb}) out of range")

    w = rsos.weight(path)
    info = rsos.classify(path)
    scoring = [v.x for v in info if v.scoring]
    k = len(scoring)
    last_scoring = scoring[-1] if scoring else 0

    nonscoring = [x for x in range(1, last_scoring) if x not in set(scoring)]
    pairs = [pr for pr in _pair_runs(nonscoring) if pr[1] < last_scoring]
    lam = tuple(sum(1 for s in scoring if s > x2) for _, x2 in pairs)
    assert all(x > 0 for x in lam) and _is_partition(lam)
    n = len(lam)

    doomed = {x for pair in pairs for x in pair}
    seq = _rsos_seq(path, path.horizon + 2 * n + 2)
    h_cut = RsosPath.of(p, pp, a, path.b, _delete_positions(seq, doomed))

    cut_info = rsos.classify(h_cut)
    k_cut = sum(1 for v in cut_info if v.scoring)
    assert k_cut == k, "removing non-scoring pairs must not change the scoring count"
    assert rsos.weight(h_cut) == w - sum(lam), "cut-path weight bookkeeping failed"
    m = sum(1 for v in cut_info if v.scoring and v.shape == rsos.PEAK)

    c = 0
    while c < n and lam[c] - (c + 1) >= k - m:
        c += 1
    mu = tuple(lam[i] - (i + 1) - k + m + 1 for i in range(c))
    nu = tuple(lam[c:])
    d = n - c
    assert all(x >= 1 for x in mu) and all(mu[i] > mu[i + 1] for i in range(c - 1))

    # flip, raise every peak by half a unit, land in the doubled strip
    truncated = list(h_cut.heights)
    assert truncated[-1] == bb, "even cut horizon must end at the even tail height"
    rev = truncated[::-1]
    peak_pos = [j for j in range(1, len(rev) - 1) if rev[j - 1] < rev[j] > rev[j + 1]]
    lifted = _insert_notches(rev, [(j, 1) for j in peak_pos])
    lifted += [a + 1, a, a + 1, a]
    h_hat_cut = HalfPath.of(2 * p - 1, bb, a, lifted)

    w_hat_cut = hp.weight(h_hat_cut)
    assert w_hat_cut == rsos.weight(h_cut), "flip and lift must preserve the weight"
    ell = _half_straight_count(h_hat_cut)
    assert ell == 2 * k - 2 * m

    notch_at = [_half_peak_position(h_hat_cut, number) for number in mu]
    upto = h_hat_cut.horizon + 2 * n + 4
    if notch_at:
        upto = max(upto, max(notch_at) + 2 * n + 4)
    seq_int = _insert_notches(
        _half_seq(h_hat_cut, upto), [(x, 1) for x in notch_at]
    )
    h_hat_int = HalfPath.of(2 * p - 1, bb, a, seq_int)
    w_hat_int = hp.weight(h_hat_int)
    assert w_hat_int == w_hat_cut + c * (ell + c - 1) // 2 + sum(mu)

    accretion = _accretion_positions(h_hat_int)
    if nu and nu[0] > len(accretion):
        raise AssertionError("remainder labels exceed the accretion vertex count")
    notches2 = []
    for number in nu:
        pos = accretion[number - 1]
        notches2.append((pos, 1))
    seq_fin = _insert_notches(_half_seq(h_hat_int, h_hat_int.horizon + 2 * d + 4), notches2)
    h_hat = HalfPath.of(2 * p - 1, bb, a, seq_fin)

    w_hat = hp.weight(h_hat)
    assert w_hat == w_hat_int + sum(nu)
    assert w_hat == w, "the map must preserve the weight"
    return h_hat, Bij2Trace(
        h_cut, n, k, m, c, d, lam, mu, nu, h_hat_cut, h_hat_int, h_hat
    )


def _accretion_positions(path: HalfPath) -> list[int]:
    """Even positions where neither the vertex nor its successor is a peak,
    numbered from the right (index 0 is the rightmost).
    """

    def is_peak(i: int) -> bool:
        return path.height(i - 1) < path.height(i) > path.height(i + 1)

    out = [
        i
        for i in range(0, path.horizon, 2)
        if not is_peak(i) and not is_peak(i + 1)
    ]
    return out[::-1]


def bij2_inverse(path: HalfPath) -> RsosPath:
    t2 = path.t2
    if t2 % 2 == 0:
        raise BijectionDomainError(f"expected odd T = 2p-1, got {t2}")
    p = (t2 + 1) // 2
    pp = t2
    bb, a = path.a2, path.b2  # start of the flipped image, even tail reference
    if not (1 < a < pp and 1 < bb < pp):
        raise BijectionDomainError(f"(A,B)=({bb},{a}) out of range for T={t2}")

    w_hat = hp.weight(path)

    # undo the accretion insertions: repeatedly strip the rightmost
    # non-integer peak whose neighbours are not both straight
    work = list(path.doubled)
    removals: list[int] = []  # anchor positions, kept in final coordinates

    def horizon_of(seq: list[int]) -> int:
        start = len(seq) - 1
        while start > 0 and seq[start - 1] in (a, a + 1):
            start -= 1
        return start if start % 2 == 0 else start + 1

    def value(seq: list[int], i: int) -> int:
        if i == -1:
            return bb + 1
        if i < len(seq):
            return seq[i]
        last = seq[-1]
        off = i - (len(seq) - 1)
        return last if off % 2 == 0 else (a + 1 if last == a else a)

    def straight(seq: list[int], i: int) -> bool:
        return value(seq, i - 1) != value(seq, i + 1)

    while True:
        lim = horizon_of(work)
        found = None
        for j in range(lim - 1, 0, -1):
            if not (value(work, j - 1) < work[j] > value(work, j + 1)):
                continue
            if work[j] % 2 == 0:
                continue
            if straight(work, j - 1) and straight(work, j + 1):
                continue
            found = j
            break
        if found is None:
            break
        for idx in range(len(removals)):
            if removals[idx] > found:
                removals[idx] -= 2
        removals.append(found - 1)
        del work[found : found + 2]

    h_hat_int = HalfPath.of(t2, bb, a, work)
    accretion = _accretion_positions(h_hat_int)
    numbers = {pos: num + 1 for num, pos in enumerate(accretion)}
    nu_parts = []
    for anchor in removals:
        if anchor not in numbers:
            raise StructureError(
                f"stripped insertion anchored off an accretion vertex ({anchor})"
            )
        nu_parts.append(numbers[anchor])
    nu = tuple(sorted(nu_parts, reverse=True))
    d = len(nu)

    # undo the staggered peak raises: non-integer peaks of the interim path
    peaks = [
        i
        for i in range(1, h_hat_int.horizon + 1)
        if h_hat_int.height(i - 1) < h_hat_int.height(i) > h_hat_int.height(i + 1)
    ]
    odd_peaks = [(num + 1, pos) for num, pos in enumerate(peaks)
                 if h_hat_int.height(pos) % 2 == 1]
    c = len(odd_peaks)
    mu = tuple(num for num, _ in reversed(odd_peaks))

    seq = _delete_pairs(list(h_hat_int.doubled), [pos for _, pos in odd_peaks])
    h_hat_cut = HalfPath.of(t2, bb, a, seq)
    for i in range(1, h_hat_cut.horizon + 1):
        up = h_hat_cut.height(i - 1) < h_hat_cut.height(i) > h_hat_cut.height(i + 1)
        if up and h_hat_cut.height(i) % 2 == 1:
            raise StructureError("non-integer peak survived the unstacking")

    # invert the flip-and-lift: lower every peak, reverse, restore the tail
    truncated = list(h_hat_cut.doubled)
    assert truncated[-1] == a
    peak_pos = [
        j for j in range(1, len(truncated) - 1)
        if truncated[j - 1] < truncated[j] > truncated[j + 1]
    ]
    lowered = _delete_pairs(truncated, peak_pos)
    rev = lowered[::-1]
    assert rev[0] == a and rev[-1] == bb
    rev += [bb - 1, bb, bb - 1]
    h_cut = RsosPath.of(p, pp, a, bb - 1, rev)

    cut_info = rsos.classify(h_cut)
    scoring = [v.x for v in cut_info if v.scoring]
    k = len(scoring)
    m = sum(1 for v in cut_info if v.scoring and v.shape == rsos.PEAK)

    lam = tuple(mu[i] + (i + 1) + k - m - 1 for i in range(c)) + nu
    n = c + d
    if not _is_partition(lam):
        raise StructureError(f"recovered labels {lam} are not a partition")
    if d and c < n and nu[0] - (c + 1) >= k - m:
        raise StructureError("prefix length is not maximal for the recovered labels")

    notches = []
    for lam_i in lam:
        if lam_i > k:
            raise StructureError(f"label {lam_i} exceeds the scoring count {k}")
        pos = 0 if lam_i == k else scoring[k - lam_i - 1]
        height = h_cut.height(pos)
        step = _notch_step(height)
        if not 1 <= height + step <= pp - 1:
            raise StructureError(f"reinsertion at position {pos} leaves the strip")
        notches.append((pos, step))

    upto = h_cut.horizon + 2 * n + 4
    if notches:
        upto = max(upto, max(pos for pos, _ in notches) + 2 * n + 4)
    seq2 = _insert_notches(_rsos_seq(h_cut, upto), notches)
    out = RsosPath.of(p, pp, a, bb - 1, seq2)
    if rsos.weight(out) != w_hat:
        raise StructureError("reinserted path does not reproduce the weight")
    return out
