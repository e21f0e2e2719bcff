import math

import pytest

from viracomb.characters import (
    CharacterLabel,
    InvalidLabelError,
    alternating_sum_series,
    b_matrix,
    bosonic_character,
    fermionic_character_12,
    fermionic_sum_2_5,
    fermionic_sum_3_7,
    fermionic_sum_4_7,
    m_vector_of,
    theorem1_label,
    verify_symmetries,
)
from viracomb.qseries import modular_product, pochhammer_inf_inverse


def all_labels(max_pp):
    for pp in range(3, max_pp + 1):
        for p in range(2, pp):
            if math.gcd(p, pp) != 1:
                continue
            for r in range(1, p):
                for s in range(1, pp):
                    yield CharacterLabel(p, pp, r, s)


def test_label_validation():
    with pytest.raises(InvalidLabelError):
        CharacterLabel(2, 4, 1, 1)  # not coprime
    with pytest.raises(InvalidLabelError):
        CharacterLabel(5, 3, 1, 1)  # p >= p'
    with pytest.raises(InvalidLabelError):
        CharacterLabel(3, 5, 3, 1)  # r out of range
    with pytest.raises(InvalidLabelError):
        CharacterLabel(3, 5, 1, 5)  # s out of range


def test_bosonic_rogers_ramanujan_product():
    lhs = bosonic_character(CharacterLabel(2, 5, 1, 2), 8)
    assert lhs == modular_product(5, {1, 4}, 8)


def test_bosonic_ising_like_product():
    lhs = bosonic_character(CharacterLabel(3, 4, 1, 3), 16)
    assert lhs == modular_product(16, {1, 4, 6, 7, 9, 10, 12, 15}, 16)


def test_constant_term_and_positivity():
    for label in all_labels(12):
        series = bosonic_character(label, 30)
        assert series.coeffs[0] == 1, label
        assert all(c >= 0 for c in series.coeffs), label


def test_fermionic_rejects_small_t2():
    with pytest.raises(ValueError):
        fermionic_character_12(3, 5)


@pytest.mark.parametrize("t2", range(4, 11))
def test_fermionic_equals_bosonic(t2):
    lhs = fermionic_character_12(t2, 30)
    rhs = bosonic_character(theorem1_label(t2, 1, 1), 30)
    assert lhs == rhs


def test_fermionic_enumeration_bound_is_not_tight():
    # widening the per-coordinate window may not change the sum; checked by
    # comparing with an order bump that forces strictly more vectors through
    for t2 in (5, 7, 8):
        wide = fermionic_character_12(t2, 24).truncate(18)
        assert wide == fermionic_character_12(t2, 18)


def test_theorem1_label_values():
    assert theorem1_label(10, 2, 4) == CharacterLabel(5, 11, 4, 4)
    assert theorem1_label(7, 1, 3) == CharacterLabel(4, 7, 1, 6)
    assert theorem1_label(4, 1, 1) == CharacterLabel(2, 5, 1, 2)


def test_theorem1_label_rejects_out_of_range():
    with pytest.raises(InvalidLabelError):
        theorem1_label(10, 6, 1)
    with pytest.raises(InvalidLabelError):
        theorem1_label(10, 1, 5)
    with pytest.raises(InvalidLabelError):
        theorem1_label(7, 4, 1)


def test_symmetries_pass():
    assert verify_symmetries(CharacterLabel(2, 5, 1, 2), 30).ok
    assert verify_symmetries(CharacterLabel(4, 9, 3, 8), 30).ok


def test_modulus_swap_directly():
    lhs = alternating_sum_series(3, 4, 1, 3, 30) * pochhammer_inf_inverse(30)
    rhs = alternating_sum_series(4, 3, 3, 1, 30) * pochhammer_inf_inverse(30)
    assert lhs == rhs


def test_closed_form_sums():
    assert fermionic_sum_2_5(30) == bosonic_character(CharacterLabel(2, 5, 1, 2), 30)
    assert fermionic_sum_3_7(30) == bosonic_character(CharacterLabel(3, 7, 1, 2), 30)
    assert fermionic_sum_4_7(30) == bosonic_character(CharacterLabel(4, 7, 1, 2), 30)


def test_b_matrix_inverts_modified_cartan():
    # B is (2t-2) times the inverse of the type-A Cartan matrix whose last
    # diagonal entry is lowered from 2 to (2t-3)/(2t-2); as an exact integer
    # identity: B . M = (2t-2) . I with M as below.
    for t2 in range(4, 11):
        size = t2 - 3
        bmat = b_matrix(t2)
        m = [
            [(t2 - 2) * (2 if i == j else -1 if abs(i - j) == 1 else 0)
             for j in range(size)]
            for i in range(size)
        ]
        m[size - 1][size - 1] = t2 - 3
        for i in range(size):
            for j in range(size):
                entry = sum(bmat[i][k] * m[k][j] for k in range(size))
                assert entry == ((t2 - 2) if i == j else 0)


def test_b_matrix_positive_definite():
    def det(mat):
        if len(mat) == 1:
            return mat[0][0]
        total = 0
        for j in range(len(mat)):
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            total += (-1) ** j * mat[0][j] * det(minor)
        return total

    for t2 in range(4, 11):
        bmat = b_matrix(t2)
        for lead in range(1, len(bmat) + 1):
            sub = [row[:lead] for row in bmat[:lead]]
            assert det(sub) > 0


def test_m_vector_examples():
    assert m_vector_of(4, (3,)) == [3]
    assert m_vector_of(10, (2, 1, 1, 1, 0, 1, 0)) == [17, 11, 7, 4, 2, 1, 0]
    assert m_vector_of(10, (0,) * 7) == [0] * 7
