import pytest

from viracomb.characters import CharacterLabel, bosonic_character
from viracomb.qseries import QSeries
from viracomb.rsos import (
    InfiniteWeightError,
    InvalidPathError,
    RsosPath,
    band_is_dark,
    classify,
    dark_floors,
    enumerate_paths,
    generating_function,
    tail_band_index,
    weight,
    weight_edgewise,
)

from data_paths import (
    RSOS_47,
    RSOS_47_SCORING,
    RSOS_47_WEIGHT,
    RSOS_49,
    RSOS_49_CONTRIBS,
    RSOS_49_DOWN,
    RSOS_49_UP,
    RSOS_49_WEIGHT,
)


@pytest.fixture
def path49():
    return RsosPath.of(*RSOS_49)


@pytest.fixture
def path47():
    return RsosPath.of(*RSOS_47)


def test_dark_floors():
    assert sorted(dark_floors(4, 9)) == [2, 4, 6]
    assert sorted(dark_floors(4, 7)) == [1, 3, 5]
    assert sorted(dark_floors(2, 5)) == [2]
    assert band_is_dark(4, 9, 2) and not band_is_dark(4, 9, 3)
    with pytest.raises(ValueError):
        band_is_dark(4, 9, 8)


def test_tail_band_index():
    assert tail_band_index(4, 9, 6) == 3
    assert tail_band_index(4, 9, 3) is None


def test_canonical_storage(path49):
    assert path49.horizon == 22
    assert path49.heights[-1] == 6
    # short input is extended to the canonical horizon
    p = RsosPath.of(4, 9, 8, 6, [8, 7])
    assert p.heights == (8, 7, 6)
    assert p.height(5) == 7


def test_validation_errors():
    with pytest.raises(InvalidPathError):
        RsosPath.of(4, 9, 8, 6, [8, 7, 5])  # bad step
    with pytest.raises(InvalidPathError):
        RsosPath.of(4, 9, 8, 6, [7, 6])  # wrong start
    with pytest.raises(InvalidPathError):
        RsosPath.of(4, 9, 8, 6, [8, 7, 6, 5])  # ends outside the tail band
    with pytest.raises(InvalidPathError):
        RsosPath.of(4, 6, 8, 6, [8, 7, 6])  # p, p' not coprime


def test_classification_golden(path49):
    info = classify(path49)
    assert [v.x for v in info if v.scoring and not v.up] == RSOS_49_DOWN
    assert [v.x for v in info if v.scoring and v.up] == RSOS_49_UP
    assert [v.value for v in info if v.scoring] == RSOS_49_CONTRIBS


def test_classification_golden_dual(path47):
    info = classify(path47)
    assert [v.x for v in info if v.scoring] == RSOS_47_SCORING


def test_pure_tail_is_nonscoring():
    p = RsosPath.of(4, 9, 6, 6, [6])
    assert all(not v.scoring for v in classify(p))
    assert weight(p) == 0


def test_weights_golden(path49, path47):
    assert weight(path49) == RSOS_49_WEIGHT
    assert weight_edgewise(path49) == RSOS_49_WEIGHT
    assert weight(path47) == RSOS_47_WEIGHT
    assert weight_edgewise(path47) == RSOS_47_WEIGHT


def test_weight_requires_dark_tail():
    p = RsosPath.of(4, 9, 3, 3, [3])
    with pytest.raises(InfiniteWeightError):
        weight(p)
    with pytest.raises(InvalidPathError):
        enumerate_paths(4, 9, 3, 3, 5)


def test_enumerate_weight_zero():
    paths = enumerate_paths(4, 9, 8, 6, 0)
    assert len(paths) == 1
    assert weight(paths[0]) == 0
    pure = enumerate_paths(4, 9, 6, 6, 0)
    assert RsosPath.of(4, 9, 6, 6, [6]) in pure


def test_enumerate_counts_match_character():
    paths = enumerate_paths(4, 9, 8, 6, 5)
    chi = bosonic_character(CharacterLabel(4, 9, 3, 8), 5)
    counts = [0] * 6
    for p in paths:
        counts[weight(p)] += 1
    assert tuple(counts) == chi.coeffs


@pytest.mark.parametrize(
    "p,pp,a,b,label",
    [
        (2, 5, 2, 2, (2, 5, 1, 2)),
        (4, 9, 8, 6, (4, 9, 3, 8)),
        (4, 7, 6, 1, (4, 7, 1, 6)),
        (3, 5, 4, 3, (3, 5, 2, 4)),
    ],
)
def test_generating_function_is_character(p, pp, a, b, label):
    gf = generating_function(p, pp, a, b, 12)
    assert gf == bosonic_character(CharacterLabel(*label), 12)
    assert gf.coeffs[0] == 1


def test_edgewise_identity_on_enumerated_set():
    for p in enumerate_paths(3, 7, 4, 2, 8):
        assert weight(p) == weight_edgewise(p)


def test_line_roundtrip(path49):
    assert RsosPath.from_line(path49.to_line()) == path49
    with pytest.raises(InvalidPathError):
        RsosPath.from_line("rsos p=4 pp=9 a=8")
    with pytest.raises(InvalidPathError):
        RsosPath.from_line("bogus nonsense")


def test_gf_type():
    assert isinstance(generating_function(2, 5, 2, 2, 4), QSeries)
