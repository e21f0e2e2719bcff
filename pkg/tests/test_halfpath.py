import pytest

from viracomb.characters import bosonic_character, theorem1_label
from viracomb.halfpath import (
    HalfPath,
    InvalidHalfPathError,
    enumerate_paths,
    generating_function,
    ground_state,
    raw_weight_quarters,
    validate,
    weight,
    weight_extended,
)

from data_paths import (
    HALF_7_GS_QUARTERS,
    HALF_7_IMAGE,
    HALF_7_RAW_QUARTERS,
    HALF_7_WEIGHT,
    HALF_8_IMAGE,
    HALF_8_RAW_QUARTERS,
    HALF_8_WEIGHT,
    HALF_10,
    HALF_10_GS_QUARTERS,
    HALF_10_RAW_QUARTERS,
    HALF_10_WEIGHT,
)


def test_validate_accepts_integer_valleys():
    assert validate(10, 4, 8, [4, 5, 4, 5, 6, 7, 8]) is None


def test_validate_rejects_half_height_valley():
    msg = validate(10, 6, 6, [6, 5, 6])
    assert msg is not None and "valley" in msg


def test_validate_examples():
    assert validate(*HALF_10) is None
    assert validate(10, 4, 8, [4, 3, 5]) is not None  # bad step
    assert validate(10, 3, 8, [3, 4]) is not None  # odd endpoints
    assert validate(10, 4, 8, [4, 3, 2, 1, 2]) is not None  # below the strip


def test_raw_weight_golden():
    path = HalfPath.of(*HALF_10)
    assert raw_weight_quarters(path) == HALF_10_RAW_QUARTERS
    gs = ground_state(10, 4, 8)
    assert gs.doubled == (4, 5, 6, 7, 8)
    assert raw_weight_quarters(gs) == HALF_10_GS_QUARTERS
    assert weight(path) == HALF_10_WEIGHT


def test_descending_ground_state():
    gs = ground_state(8, 8, 6)
    assert gs.doubled == (8, 7, 6)
    assert raw_weight_quarters(gs) == 1


def test_pure_tail_ground_state():
    gs = ground_state(8, 4, 4)
    assert gs.doubled == (4,)
    assert raw_weight_quarters(gs) == 0
    assert weight(gs) == 0


def test_image_weights_golden():
    f5 = HalfPath.of(*HALF_8_IMAGE)
    assert raw_weight_quarters(f5) == HALF_8_RAW_QUARTERS
    assert weight(f5) == HALF_8_WEIGHT
    f9 = HalfPath.of(*HALF_7_IMAGE)
    assert raw_weight_quarters(f9) == HALF_7_RAW_QUARTERS
    assert raw_weight_quarters(ground_state(7, 2, 6)) == HALF_7_GS_QUARTERS
    assert weight(f9) == HALF_7_WEIGHT


def test_weight_extended_matches():
    for data in (HALF_10, HALF_8_IMAGE, HALF_7_IMAGE):
        path = HalfPath.of(*data)
        assert weight_extended(path) == weight(path)
    gs = ground_state(10, 4, 8)
    assert weight_extended(gs) == 0


def test_weight_extended_on_enumerated_set():
    for path in enumerate_paths(8, 8, 6, 7):
        assert weight_extended(path) == weight(path)


def test_enumerate_ground_state_only():
    paths = enumerate_paths(4, 2, 2, 0)
    assert paths == [ground_state(4, 2, 2)]


def test_enumerate_counts_match_character():
    paths = enumerate_paths(4, 2, 2, 10)
    chi = bosonic_character(theorem1_label(4, 1, 1), 10)
    counts = [0] * 11
    for p in paths:
        counts[weight(p)] += 1
    assert tuple(counts) == chi.coeffs


@pytest.mark.parametrize(
    "t2,a2,b2",
    [(4, 2, 2), (7, 2, 6), (10, 4, 8), (8, 8, 6), (5, 4, 2), (6, 6, 2)],
)
def test_generating_function_is_character(t2, a2, b2):
    gf = generating_function(t2, a2, b2, 10)
    chi = bosonic_character(theorem1_label(t2, a2 // 2, b2 // 2), 10)
    assert gf == chi
    assert gf.coeffs[0] == 1


def test_truncation_point_does_not_change_weight():
    path = HalfPath.of(*HALF_10)
    longer = list(path.doubled) + [9, 8, 9, 8]
    again = HalfPath.of(path.t2, path.a2, path.b2, longer)
    assert again == path
    assert raw_weight_quarters(again) == raw_weight_quarters(path)


def test_domain_validation():
    with pytest.raises(InvalidHalfPathError):
        ground_state(10, 4, 10)  # B must stay below the top for even T
    with pytest.raises(InvalidHalfPathError):
        enumerate_paths(7, 2, 7, 4)  # odd doubled height
    with pytest.raises(InvalidHalfPathError):
        HalfPath.of(10, 4, 8, [4, 5, 6])  # ends outside the tail band


def test_line_roundtrip():
    path = HalfPath.of(*HALF_10)
    assert HalfPath.from_line(path.to_line()) == path
