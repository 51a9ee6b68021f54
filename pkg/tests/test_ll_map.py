import itertools
from fractions import Fraction

import pytest

from fec_census import ll_map
from fec_census.ll_map import WEIGHT_TABLE, WeightVector, corollary_check, ll_degree


def test_e6_degree_by_hand():
    # 8! * (1/2)(3 * 3/2 + 3 * 3) / ((2/3)^3 (1/3)^3)
    assert ll_degree(WEIGHT_TABLE["E6tilde"]) == 40320 * Fraction(27, 4) * Fraction(729, 8) == 24_800_580


def test_degrees():
    assert ll_degree(WEIGHT_TABLE["E7tilde"]) == 688_128_000
    assert ll_degree(WEIGHT_TABLE["E8tilde"]) == 21_374_793_216


def test_weight_lengths_match_mu():
    assert [w.mu for w in WEIGHT_TABLE.values()] == [8, 9, 10]


@pytest.mark.parametrize("label", ["E6tilde", "E7tilde", "E8tilde"])
def test_corollary(label):
    assert corollary_check(label).passed


@pytest.mark.parametrize("text, label", [("E7~", "E7tilde"), ("e8tilde", "E8tilde"), ("E6", "E6tilde")])
def test_labels(text, label):
    assert ll_map.normalize_label(text) == label


def test_bad_label():
    with pytest.raises(ValueError):
        ll_map.normalize_label("E9~")


def test_permutation_invariance():
    w = WEIGHT_TABLE["E7tilde"].weights
    expected = ll_degree(WEIGHT_TABLE["E7tilde"])
    for perm in itertools.islice(itertools.permutations(w[1:-1]), 0, None, 97):
        assert ll_degree(WeightVector("E7tilde", (w[0], *perm, w[-1]))) == expected


def test_invalid_weights():
    with pytest.raises(ValueError):
        WeightVector("bad", (Fraction(1), Fraction(0), Fraction(1, 2), Fraction(0)))
    with pytest.raises(ValueError):
        WeightVector("bad", (Fraction(1), Fraction(1, 2)))
