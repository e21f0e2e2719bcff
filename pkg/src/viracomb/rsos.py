"""RSOS paths: unit-step height sequences with an oscillating tail.

A path lives on heights 1..p'-1, starts at a, and eventually oscillates
between b and b+1 forever.  Only the prefix through the canonical horizon
L(h) is stored: the smallest even L from which every later height lies in
{b, b+1}.  Horizontal bands between consecutive heights are dark or light
according to the floor function y = floor(r p'/p); scoring vertices (and
hence weights) are defined relative to that shading.

Weights are finite only when the tail sits in a dark band, i.e. when b is
one of the dark floors.  Enumeration of all paths up to a weight bound is
a depth-first search with exact lower-bound pruning, a hard horizon, and a
horizon-stabilization re-run that certifies completeness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple


class InvalidPathError(ValueError):
    """Raised for sequences violating the path constraints."""


class InfiniteWeightError(ValueError):
    """Raised when the tail band is light, making the weight diverge."""


PEAK = "peak"
VALLEY = "valley"
STRAIGHT_UP = "straight-up"
STRAIGHT_DOWN = "straight-down"


@lru_cache(maxsize=None)
def dark_floors(p: int, p_prime: int) -> frozenset[int]:
    """Floors y of the dark bands: y = floor(r p'/p) for 1 <= r < p."""
    if not 1 < p < p_prime or gcd(p, p_prime) != 1:
        raise ValueError(f"need coprime 1 < p < p', got ({p}, {p_prime})")
    return frozenset((r * p_prime) // p for r in range(1, p))


def band_is_dark(p: int, p_prime: int, y: int) -> bool:
    """Whether the band with floor height y is dark.  1 <= y <= p'-2."""
    if not 1 <= y <= p_prime - 2:
        raise ValueError(f"band floor must be in 1..{p_prime - 2}, got {y}")
    return y in dark_floors(p, p_prime)


def tail_band_index(p: int, p_prime: int, b: int) -> int | None:
    """The r with floor(r p'/p) = b, or None when the b-band is light."""
    for r in range(1, p):
        if (r * p_prime) // p == b:
            return r
    return None


@dataclass(frozen=True)
class RsosPath:
    """Canonical representation of a b-tailed RSOS path."""

    p: int
    p_prime: int
    a: int
    b: int
    heights: tuple[int, ...]

    @staticmethod
    def of(p: int, p_prime: int, a: int, b: int, heights) -> RsosPath:
        """Validate and canonicalize a height sequence (tail may be partial)."""
        if not 1 < p < p_prime or gcd(p, p_prime) != 1:
            raise InvalidPathError(f"need coprime 1 < p < p', got ({p}, {p_prime})")
        hs = [int(h) for h in heights]
        if not hs:
            raise InvalidPathError("height sequence is empty")
        if hs[0] != a:
            raise InvalidPathError(f"path must start at a={a}, got {hs[0]}")
        if not 1 <= b <= p_prime - 1:
            raise InvalidPathError(f"tail height b={b} out of range")
        for x, h in enumerate(hs):
            if not 1 <= h <= p_prime - 1:
                raise InvalidPathError(f"height {h} at position {x} out of range")
            if x and abs(h - hs[x - 1]) != 1:
                raise InvalidPathError(f"step at position {x} is not a unit step")
        if hs[-1] not in (b, b + 1):
            raise InvalidPathError(
                f"stored sequence must end inside the tail band, got {hs[-1]}"
            )
        return RsosPath(p, p_prime, a, b, _canonical(hs, b))

    @property
    def horizon(self) -> int:
        """Index of the last stored height (the canonical L)."""
        return len(self.heights) - 1

    def height(self, x: int) -> int:
        """Height at any position, continuing the tail oscillation."""
        if x < 0:
            raise IndexError("positions are nonnegative")
        if x <= self.horizon:
            return self.heights[x]
        last = self.heights[-1]
        if (x - self.horizon) % 2 == 0:
            return last
        return self.b + 1 if last == self.b else self.b

    def to_line(self) -> str:
        hs = ",".join(str(h) for h in self.heights)
        return f"rsos p={self.p} pp={self.p_prime} a={self.a} b={self.b} h={hs}"

    @staticmethod
    def from_line(line: str) -> RsosPath:
        fields = _parse_fields(line, "rsos", ("p", "pp", "a", "b", "h"))
        hs = [int(v) for v in fields["h"].split(",")]
        return RsosPath.of(
            int(fields["p"]), int(fields["pp"]), int(fields["a"]), int(fields["b"]), hs
        )


def _canonical(hs: list[int], b: int) -> tuple[int, ...]:
    """Trim or extend so storage runs exactly through the canonical horizon."""
    in_band = lambda h: h in (b, b + 1)
    # first index from which everything stored is a b/b+1 oscillation
    start = len(hs) - 1
    while start > 0 and in_band(hs[start - 1]):
        start -= 1
    lh = start if start % 2 == 0 else start + 1
    if lh < len(hs):
        return tuple(hs[: lh + 1])
    # stored data ends before the canonical horizon: extend by oscillation
    out = list(hs)
    while len(out) - 1 < lh:
        out.append(b + 1 if out[-1] == b else b)
    return tuple(out)


def _parse_fields(line: str, kind: str, names: tuple[str, ...]) -> dict[str, str]:
    parts = line.strip().split()
    if not parts or parts[0] != kind:
        raise InvalidPathError(f"expected a {kind!r} line, got {line!r}")
    fields: dict[str, str] = {}
    for part in parts[1:]:
        if "=" not in part:
            raise InvalidPathError(f"malformed field {part!r}")
        key, value = part.split("=", 1)
        fields[key] = value
    missing = [n for n in names if n not in fields]
    if missing:
        raise InvalidPathError(f"missing fields {missing} in {kind!r} line")
    return fields


class VertexInfo(NamedTuple):
    x: int
    shape: str
    scoring: bool
    up: bool          # left edge NE
    value: int        # u_x if up else v_x


def classify(path: RsosPath) -> list[VertexInfo]:
    """Classification of vertices 1..L.  The startpoint is never classified,
    and tail vertices beyond L are non-scoring whenever the weight is finite.
    """
    dark = dark_floors(path.p, path.p_prime)
    a = path.a
    out = []
    for x in range(1, path.horizon + 1):
        prev, h, nxt = path.height(x - 1), path.height(x), path.height(x + 1)
        up = prev < h
        if nxt == prev:
            shape = PEAK if prev < h else VALLEY
            straight = False
        else:
            shape = STRAIGHT_UP if up else STRAIGHT_DOWN
            straight = True
        right_floor = min(h, nxt)
        scoring = straight == (right_floor in dark)
        u = (x - h + a) // 2
        v = (x + h - a) // 2
        assert u + v == x and u >= 0 and v >= 0
        out.append(VertexInfo(x, shape, scoring, up, u if up else v))
    return out


def weight(path: RsosPath) -> int:
    """Sum of u over up-scoring and v over down-scoring vertices."""
    _require_finite(path)
    return sum(v.value for v in classify(path) if v.scoring)


def weight_edgewise(path: RsosPath) -> int:
    """Equivalent edge-based weight: for each position x, count the scoring
    vertices strictly to its right whose class matches the edge into x.
    """
    _require_finite(path)
    info = classify(path)
    horizon = path.horizon
    up_suffix = [0] * (horizon + 2)
    down_suffix = [0] * (horizon + 2)
    for v in reversed(info):
        up_suffix[v.x] = up_suffix[v.x + 1] + (1 if v.scoring and v.up else 0)
        down_suffix[v.x] = down_suffix[v.x + 1] + (1 if v.scoring and not v.up else 0)
    total = 0
    for x in range(1, horizon + 1):
        if path.height(x) < path.height(x - 1):  # SE edge into x
            total += up_suffix[x + 1] if x + 1 <= horizon else 0
        else:
            total += down_suffix[x + 1] if x + 1 <= horizon else 0
    return total


def _require_finite(path: RsosPath) -> None:
    if tail_band_index(path.p, path.p_prime, path.b) is None:
        raise InfiniteWeightError(
            f"tail band with floor {path.b} is light for ({path.p},{path.p_prime}); "
            "the weight diverges"
        )


def enumerate_paths(
    p: int,
    p_prime: int,
    a: int,
    b: int,
    max_weight: int,
    *,
    stabilize: bool = True,
) -> list[RsosPath]:
    """All paths of weight <= max_weight, sorted by their height tuples.

    Completeness is certified by re-running the search with the hard horizon
    extended by two and demanding the identical set.
    """
    if not 1 <= a <= p_prime - 1:
        raise InvalidPathError(f"start height a={a} out of range")
    if tail_band_index(p, p_prime, b) is None:
        raise InvalidPathError(
            f"b={b} is not a dark-band floor for ({p},{p_prime}); weights diverge"
        )
    if max_weight < 0:
        return []
    horizon = 2 * max_weight + abs(a - b) + 2 * p_prime
    found = _search(p, p_prime, a, b, max_weight, horizon)
    if stabilize:
        again = _search(p, p_prime, a, b, max_weight, horizon + 2)
        if found != again:
            raise AssertionError(
                "enumeration did not stabilize: horizon "
                f"{horizon} vs {horizon + 2} for ({p},{p_prime},{a},{b})"
            )
    return [RsosPath(p, p_prime, a, b, hs) for hs in sorted(found)]


def generating_function(p: int, p_prime: int, a: int, b: int, order: int):
    """Weight generating function of the path set, truncated to the order."""
    from .qseries import QSeries

    coeffs = [0] * (order + 1)
    for path in enumerate_paths(p, p_prime, a, b, order):
        coeffs[weight(path)] += 1
    return QSeries(order, tuple(coeffs))


def _search(
    p: int, p_prime: int, a: int, b: int, max_w: int, horizon: int
) -> set[tuple[int, ...]]:
    dark = dark_floors(p, p_prime)
    top = p_prime - 1
    in_band = (b, b + 1)
    results: set[tuple[int, ...]] = set()
    hs = [a]

    def contribution(x: int, prev: int, h: int, nxt: int) -> int:
        straight = nxt != prev
        if straight != ((h if nxt > h else nxt) in dark):
            return 0
        return (x - h + a) // 2 if prev < h else (x + h - a) // 2

    def future_bound(x: int, h: int) -> int:
        # every completion still owes at least one scoring vertex tied to
        # the final approach into the tail band
        if h > b + 1:
            v = x + h - a
            return (v + 1) // 2 if v > 0 else 0
        if h < b:
            u = x + a - h
            return (u + 1) // 2 if u > 0 else 0
        return 0

    def leave_bound(x: int) -> int:
        # cheapest cost of ever leaving the tail band at position >= x
        opts = []
        if b + 2 <= top:
            v = x + 1 + b + 2 - a
            opts.append((v + 1) // 2 if v > 0 else 0)
        if b - 1 >= 1:
            u = x + 1 + a - (b - 1)
            opts.append((u + 1) // 2 if u > 0 else 0)
        return min(opts) if opts else max_w + 1

    def emit_weight(x: int, w: int) -> int | None:
        # canonical-horizon check plus the junction vertex's contribution
        h = hs[x]
        if x == 0:
            return w
        prev = hs[x - 1]
        if prev in in_band and hs[x - 2] in in_band:
            return None  # the tail started earlier; already emitted there
        if h == b:
            # junction is straight (scoring) from b-1, or a dark valley from b+1
            return w + ((x - b + a) // 2 if prev == b - 1 else 0)
        # h == b+1: straight (scoring) from b+2, or a dark peak from b
        return w + ((x + b + 1 - a) // 2 if prev == b + 2 else 0)

    def step(x: int, w: int) -> None:
        h = hs[x]
        if x % 2 == 0 and h in in_band:
            ew = emit_weight(x, w)
            if ew is not None and ew <= max_w:
                results.add(tuple(hs))
        if x >= horizon:
            return
        prev = hs[x - 1] if x >= 1 else None
        for nh in (h - 1, h + 1):
            if not 1 <= nh <= top:
                continue
            c = contribution(x, prev, h, nh) if x >= 1 else 0
            w2 = w + c
            if w2 > max_w:
                continue
            if w2 + future_bound(x + 1, nh) > max_w:
                continue
            if (
                nh in in_band
                and h in in_band
                and prev is not None
                and prev in in_band
                and w2 + leave_bound(x + 1) > max_w
            ):
                continue
            hs.append(nh)
            step(x + 1, w2)
            hs.pop()

    step(0, 0)
    return results
