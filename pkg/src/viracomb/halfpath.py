"""Half-lattice paths in doubled coordinates.

Positions and heights are both doubled so that every stored quantity is an
integer: entry H_i is twice the height at position i/2.  A path lives on
doubled heights 2..T (T = 2t), starts at A = 2a, and eventually oscillates
between B and B+1.  Valleys are only allowed at even doubled heights; the
startpoint's shape uses the virtual convention H_{-1} = A + 1.

The raw weight is half the sum of the positions of the straight vertices.
In doubled coordinates that sum is an integer number of quarter-units;
normalizing by the ground state (the straight staircase from A to B) gives
the integer weight used everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qseries import QSeries


class InvalidHalfPathError(ValueError):
    """Raised for sequences violating the half-lattice constraints."""


def find_violation(t2: int, a2: int, b2: int, doubled) -> str | None:
    """First constraint violation of a doubled height sequence, or None."""
    hs = list(doubled)
    if t2 < 4:
        return f"need T = 2t >= 4, got {t2}"
    if a2 % 2 or b2 % 2:
        return f"start A={a2} and tail B={b2} must be even (integer heights)"
    if not hs:
        return "height sequence is empty"
    if hs[0] != a2:
        return f"path must start at A={a2}, got {hs[0]}"
    if not 2 <= b2 <= t2:
        return f"tail height B={b2} out of range 2..{t2}"
    for i, h in enumerate(hs):
        if not 2 <= h <= t2:
            return f"height {h} at doubled position {i} out of range 2..{t2}"
        if i and abs(h - hs[i - 1]) != 1:
            return f"step at doubled position {i} is not a half-unit step"
    # valleys only at integer (even doubled) heights; H_{-1} = A + 1
    for i in range(len(hs) - 1):
        prev = hs[i - 1] if i else a2 + 1
        if prev == hs[i + 1] == hs[i] + 1 and hs[i] % 2 == 1:
            return f"valley at non-integer height {hs[i]}/2 (doubled position {i})"
    if hs[-1] not in (b2, b2 + 1):
        return f"stored sequence must end inside the tail band, got {hs[-1]}"
    return None


@dataclass(frozen=True)
class HalfPath:
    """Canonical representation of a tail-oscillating half-lattice path."""

    t2: int
    a2: int
    b2: int
    doubled: tuple[int, ...]

    @staticmethod
    def of(t2: int, a2: int, b2: int, doubled) -> HalfPath:
        violation = find_violation(t2, a2, b2, doubled)
        if violation is not None:
            raise InvalidHalfPathError(violation)
        return HalfPath(t2, a2, b2, _canonical(list(doubled), b2))

    @property
    def horizon(self) -> int:
        """The doubled canonical horizon 2*Lhat."""
        return len(self.doubled) - 1

    def height(self, i: int) -> int:
        """Doubled height at doubled position i >= -1 (tail continues)."""
        if i == -1:
            return self.a2 + 1
        if i < 0:
            raise IndexError("doubled positions start at -1")
        if i <= self.horizon:
            return self.doubled[i]
        last = self.doubled[-1]
        if (i - self.horizon) % 2 == 0:
            return last
        return self.b2 + 1 if last == self.b2 else self.b2

    def is_straight(self, i: int) -> bool:
        return self.height(i - 1) != self.height(i + 1)

    def to_line(self) -> str:
        hs = ",".join(str(h) for h in self.doubled)
        return f"half T={self.t2} A={self.a2} B={self.b2} H={hs}"

    @staticmethod
    def from_line(line: str) -> HalfPath:
        from .rsos import _parse_fields

        fields = _parse_fields(line, "half", ("T", "A", "B", "H"))
        hs = [int(v) for v in fields["H"].split(",")]
        return HalfPath.of(int(fields["T"]), int(fields["A"]), int(fields["B"]), hs)


def _canonical(hs: list[int], b2: int) -> tuple[int, ...]:
    in_band = lambda h: h in (b2, b2 + 1)
    start = len(hs) - 1
    while start > 0 and in_band(hs[start - 1]):
        start -= 1
    lh = start if start % 2 == 0 else start + 1
    if lh < len(hs):
        return tuple(hs[: lh + 1])
    out = list(hs)
    while len(out) - 1 < lh:
        out.append(b2 + 1 if out[-1] == b2 else b2)
    return tuple(out)


def validate(t2: int, a2: int, b2: int, doubled) -> str | None:
    """Non-raising checker; returns the first violation message or None."""
    return find_violation(t2, a2, b2, doubled)


def raw_weight_quarters(path: HalfPath) -> int:
    """Sum of doubled positions of straight vertices, in quarter-units.

    Tail vertices beyond the horizon are peaks and valleys, so the sum is
    finite; the junction vertex at the horizon is included.
    """
    total = 0
    for i in range(path.horizon + 1):
        if path.is_straight(i):
            total += i
    return total


def theorem1_domain(t2: int, a2: int, b2: int) -> bool:
    """Whether (A, B) is an admissible doubled start/tail pair for T."""
    if t2 < 4 or a2 % 2 or b2 % 2:
        return False
    if t2 % 2 == 0:
        return 2 <= a2 <= t2 and 2 <= b2 <= t2 - 2
    return 2 <= a2 <= t2 - 1 and 2 <= b2 <= t2 - 1


def ground_state(t2: int, a2: int, b2: int) -> HalfPath:
    """The straight staircase from A to B followed by the tail."""
    if not theorem1_domain(t2, a2, b2):
        raise InvalidHalfPathError(
            f"(A,B)=({a2},{b2}) out of the admissible range for T={t2}"
        )
    step = 1 if b2 >= a2 else -1
    hs = list(range(a2, b2 + step, step))
    return HalfPath.of(t2, a2, b2, hs)


def weight(path: HalfPath) -> int:
    """Raw weight minus the ground-state raw weight, in whole units."""
    gs = ground_state(path.t2, path.a2, path.b2)
    diff = raw_weight_quarters(path) - raw_weight_quarters(gs)
    if diff % 4 != 0:
        raise AssertionError(
            f"quarter-unit weight difference {diff} is not divisible by 4"
        )
    if diff < 0:
        raise AssertionError("path weight below the ground state")
    return diff // 4


def weight_extended(path: HalfPath) -> int:
    """Weight computed from the leftward extension trick.

    The path is extended 2e doubled steps to the left (e = |a-b|) so it
    starts at B, with the start convention moved to the extension origin;
    the weight is then the plain quarter-unit sum over straight vertices of
    the extended path, divided by four.
    """
    a2, b2 = path.a2, path.b2
    ext = abs(a2 - b2)
    if ext == 0:
        total = raw_weight_quarters(path)
    else:
        sign = 1 if a2 > b2 else -1

        def height(i: int) -> int:
            if i < -ext:
                return b2 + 1  # start convention at the extension origin
            if i < 0:
                return b2 + sign * (i + ext)
            return path.height(i)

        total = 0
        for i in range(-ext, path.horizon + 1):
            if height(i - 1) != height(i + 1):
                total += i
    if total % 4 != 0:
        raise AssertionError(f"extended quarter-unit sum {total} not divisible by 4")
    return total // 4


def enumerate_paths(
    t2: int,
    a2: int,
    b2: int,
    max_weight: int,
    *,
    stabilize: bool = True,
) -> list[HalfPath]:
    """All paths of weight <= max_weight, sorted by their doubled heights."""
    if not theorem1_domain(t2, a2, b2):
        raise InvalidHalfPathError(
            f"(A,B)=({a2},{b2}) out of the admissible range for T={t2}"
        )
    if max_weight < 0:
        return []
    gs_q = raw_weight_quarters(ground_state(t2, a2, b2))
    budget = 4 * max_weight + gs_q
    horizon = 4 * max_weight + 2 * abs(a2 - b2) + 8
    found = _search(t2, a2, b2, budget, horizon)
    if stabilize:
        again = _search(t2, a2, b2, budget, horizon + 2)
        if found != again:
            raise AssertionError(
                "enumeration did not stabilize: horizon "
                f"{horizon} vs {horizon + 2} for (T,A,B)=({t2},{a2},{b2})"
            )
    return [HalfPath(t2, a2, b2, hs) for hs in sorted(found)]


def generating_function(t2: int, a2: int, b2: int, order: int) -> QSeries:
    coeffs = [0] * (order + 1)
    for path in enumerate_paths(t2, a2, b2, order):
        coeffs[weight(path)] += 1
    return QSeries(order, tuple(coeffs))


def _search(t2: int, a2: int, b2: int, budget: int, horizon: int) -> set[tuple[int, ...]]:
    top = t2
    in_band = (b2, b2 + 1)
    results: set[tuple[int, ...]] = set()
    hs = [a2]

    def future_bound(i: int, h: int) -> int:
        # a single monotone run to the tail still has |h - B| - 1 interior
        # straight vertices, at distinct positions beyond i
        d = abs(h - b2)
        if d <= 1:
            return 0
        m = d - 1
        return m * i + m * (m + 1) // 2

    def emit_quarters(i: int, w: int) -> int | None:
        h = hs[i]
        if i == 0:
            return w
        prev = hs[i - 1]
        if prev in in_band and hs[i - 2] in in_band:
            return None
        # junction vertex: straight when approached from below (B-1) or,
        # for an h == B+1 horizon, from above (B+2)
        if h == b2:
            return w + (i if prev == b2 - 1 else 0)
        return w + (i if prev == b2 + 2 else 0)

    def step(i: int, w: int) -> None:
        h = hs[i]
        if i % 2 == 0 and h in in_band:
            ew = emit_quarters(i, w)
            if ew is not None and ew <= budget:
                results.add(tuple(hs))
        if i >= horizon:
            return
        prev = hs[i - 1] if i >= 1 else a2 + 1
        for nh in (h - 1, h + 1):
            if not 2 <= nh <= top:
                continue
            if prev == nh == h + 1 and h % 2 == 1:
                continue  # valley at non-integer height
            c = i if nh != prev else 0
            w2 = w + c
            if w2 > budget:
                continue
            if w2 + future_bound(i + 1, nh) > budget:
                continue
            if (
                i >= 1
                and nh in in_band
                and h in in_band
                and prev in in_band
                and w2 + i + 1 > budget
            ):
                continue  # any exit from the tail band costs a straight vertex
            hs.append(nh)
            step(i + 1, w2)
            hs.pop()

    step(0, 0)
    return results
