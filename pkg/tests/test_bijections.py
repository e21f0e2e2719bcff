import pytest

from viracomb import halfpath as hp
from viracomb import rsos
from viracomb.bijections import (
    BijectionDomainError,
    StructureError,
    bij1_forward,
    bij1_inverse,
    bij2_forward,
    bij2_inverse,
)
from viracomb.halfpath import HalfPath
from viracomb.rsos import RsosPath

from data_paths import (
    BIJ1_LAM,
    BIJ1_MU,
    BIJ2_C,
    BIJ2_D,
    BIJ2_K,
    BIJ2_LAM,
    BIJ2_M,
    BIJ2_MU,
    BIJ2_NU,
    HALF_7_CUT,
    HALF_7_IMAGE,
    HALF_7_INT,
    HALF_8_IMAGE,
    RSOS_47,
    RSOS_47_CUT,
    RSOS_49,
    RSOS_49_CUT,
)


def test_bij1_golden_trace():
    path = RsosPath.of(*RSOS_49)
    image, trace = bij1_forward(path)
    assert trace.n == 4
    assert trace.lam == BIJ1_LAM
    assert trace.mu == BIJ1_MU
    assert trace.h_cut == RsosPath.of(*RSOS_49_CUT)
    assert image == HalfPath.of(*HALF_8_IMAGE)
    assert hp.weight(image) == rsos.weight(path) == 74


def test_bij1_golden_inverse():
    assert bij1_inverse(HalfPath.of(*HALF_8_IMAGE)) == RsosPath.of(*RSOS_49)


def test_bij1_particle_free_path():
    path = RsosPath.of(2, 5, 2, 2, [2])
    image, trace = bij1_forward(path)
    assert trace.n == 0 and trace.lam == () and trace.mu == ()
    assert image == hp.ground_state(4, 2, 2)
    back = bij1_inverse(image)
    assert back == path


def test_bij1_domain_errors():
    with pytest.raises(BijectionDomainError):
        bij1_forward(RsosPath.of(4, 7, 6, 1, [6, 5, 4, 3, 2, 1]))  # wrong family
    with pytest.raises(BijectionDomainError):
        bij1_forward(RsosPath.of(4, 9, 7, 6, [7, 6]))  # odd start
    with pytest.raises(BijectionDomainError):
        bij1_inverse(HalfPath.of(7, 2, 6, [2, 3, 4, 5, 6]))  # odd doubled T


def test_bij2_golden_trace():
    path = RsosPath.of(*RSOS_47)
    image, trace = bij2_forward(path)
    assert trace.n == 8
    assert trace.lam == BIJ2_LAM
    assert (trace.k, trace.m, trace.c, trace.d) == (BIJ2_K, BIJ2_M, BIJ2_C, BIJ2_D)
    assert trace.mu == BIJ2_MU
    assert trace.nu == BIJ2_NU
    assert trace.h_cut == RsosPath.of(*RSOS_47_CUT)
    assert trace.h_hat_cut == HalfPath.of(*HALF_7_CUT)
    assert trace.h_hat_int == HalfPath.of(*HALF_7_INT)
    assert image == HalfPath.of(*HALF_7_IMAGE)
    assert hp.weight(image) == rsos.weight(path) == 112


def test_bij2_golden_inverse():
    assert bij2_inverse(HalfPath.of(*HALF_7_IMAGE)) == RsosPath.of(*RSOS_47)


def test_bij2_sea_only_path():
    # no particle carries a positive label: nothing is removed
    path = RsosPath.of(3, 5, 2, 1, [2, 1])
    image, trace = bij2_forward(path)
    assert trace.n == 0 and trace.c == 0 and trace.nu == ()
    assert bij2_inverse(image) == path


def test_bij2_domain_errors():
    with pytest.raises(BijectionDomainError):
        bij2_forward(RsosPath.of(4, 9, 8, 6, [8, 7, 6]))  # wrong family
    with pytest.raises(BijectionDomainError):
        bij2_forward(RsosPath.of(4, 7, 6, 2, [6, 5, 4, 3, 2]))  # even tail
    with pytest.raises(BijectionDomainError):
        bij2_inverse(HalfPath.of(8, 2, 2, [2]))  # even doubled T


def test_bij2_inverse_rejects_corrupted_input():
    # every validated half path is in the image, so corruption means a
    # constraint-violating sequence smuggled past the constructor
    bad = HalfPath(7, 2, 4, (2, 3, 4, 3, 4, 5, 4))  # valley at height 3/2
    with pytest.raises((StructureError, AssertionError)):
        bij2_inverse(bad)


@pytest.mark.parametrize("p,a,b", [(2, 2, 2), (3, 4, 2), (4, 6, 4)])
def test_bij1_roundtrip_small(p, a, b):
    pp = 2 * p + 1
    for path in rsos.enumerate_paths(p, pp, a, b, 8):
        image, _ = bij1_forward(path)
        assert hp.weight(image) == rsos.weight(path)
        assert bij1_inverse(image) == path
    for half in hp.enumerate_paths(2 * p, a, b, 8):
        again, _ = bij1_forward(bij1_inverse(half))
        assert again == half


@pytest.mark.parametrize("p,a,bb", [(3, 2, 4), (4, 4, 2), (4, 6, 6)])
def test_bij2_roundtrip_small(p, a, bb):
    pp = 2 * p - 1
    for path in rsos.enumerate_paths(p, pp, a, bb - 1, 8):
        image, _ = bij2_forward(path)
        assert hp.weight(image) == rsos.weight(path)
        assert bij2_inverse(image) == path
    for half in hp.enumerate_paths(pp, bb, a, 8):
        again, _ = bij2_forward(bij2_inverse(half))
        assert again == half


def test_bij2_accretion_vertices_count_their_straights():
    # the j-th accretion vertex from the right sees exactly 2j straight
    # vertices to its right, or 2j-1 when it is itself straight-down
    from viracomb.bijections import _accretion_positions

    for path in rsos.enumerate_paths(4, 7, 6, 1, 8):
        _, trace = bij2_forward(path)
        hint = trace.h_hat_int
        straights = [i for i in range(hint.horizon + 1) if hint.is_straight(i)]
        for j, pos in enumerate(_accretion_positions(hint), start=1):
            right = sum(1 for s in straights if s > pos)
            down = hint.height(pos - 1) > hint.height(pos) > hint.height(pos + 1)
            assert right == (2 * j - 1 if down else 2 * j), (path, pos, j)


def test_bij1_cut_has_no_adjacent_scoring_and_particles_start_on_turns():
    for path in rsos.enumerate_paths(3, 7, 4, 4, 8):
        _, trace = bij1_forward(path)
        xs = [v.x for v in rsos.classify(trace.h_cut) if v.scoring]
        assert all(y - x > 1 for x, y in zip(xs, xs[1:]))
        info = {v.x: v for v in rsos.classify(path)}
        scoring = sorted(x for x, v in info.items() if v.scoring)
        runs = []
        for x in scoring:
            if runs and runs[-1][-1] == x - 1:
                runs[-1].append(x)
            else:
                runs.append([x])
        for run in runs:
            for first in run[0:len(run) - len(run) % 2:2]:
                assert info[first].shape in (rsos.PEAK, rsos.VALLEY)
