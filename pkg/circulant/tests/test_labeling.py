import random
import pytest
from circulant.errors import LabelingError
from circulant.labeling import Labeling, iter_restricted_growth_strings
from circulant.permutation import Permutation


def test_create_labeling():
    c = Labeling([1, 3, 2])
    assert c.labels == (1, 3, 2)
    assert c.r == 3
    assert c.n == 3
    assert c(1) == 3
    assert c[2] == 2
    assert list(c) == [1, 3, 2]
    assert Labeling([1, 1], r=4).r == 4
    with pytest.raises(LabelingError):
        Labeling([0, 1])
    with pytest.raises(LabelingError):
        Labeling([1, 5], r=4)


def test_repr():
    assert Labeling([1, 1, 2]).__repr__() == "Labeling: 1,1,2"


def test_str():
    assert Labeling([2, 1]).__str__() == "2,1"
    assert Labeling([]).__str__() == ""


def test_create_random_labeling():
    Labeling.set_random_seed(111)
    c = Labeling.create_random_labeling(32, 3)
    assert c.n == 32
    assert c.r == 3
    assert set(c.labels) <= {1, 2, 3}
    with pytest.raises(LabelingError):
        Labeling.create_random_labeling(4, 0)


def test_set_random_seed():
    Labeling.set_random_seed(333)
    first = Labeling.create_random_labeling(8, 2)
    second = Labeling.create_random_labeling(16, 4)
    # Resetting the seed to the same original value should produce the same sequence of labelings
    Labeling.set_random_seed(333)
    assert Labeling.create_random_labeling(8, 2) == first
    assert Labeling.create_random_labeling(16, 4) == second


def test_create_random_labeling_with_own_generator():
    a = Labeling.create_random_labeling(10, 3, random.Random(5))
    b = Labeling.create_random_labeling(10, 3, random.Random(5))
    assert a == b


def test_used_labels_and_compressed():
    c = Labeling([4, 2, 4, 7], r=7)
    assert c.used_labels() == [2, 4, 7]
    assert c.label_count() == 3
    assert c.compressed() == Labeling([2, 1, 2, 3], r=3)
    assert c.restricted_to([3, 0]) == (7, 4)


def test_from_restricted_growth():
    assert Labeling.from_restricted_growth((0, 1, 0, 2)) == Labeling([1, 2, 1, 3], r=3)


def test_composed_with():
    c = Labeling([1, 2, 2])
    swap = Permutation.transposition(3, 1, 2)
    assert c.composed_with(swap) == c
    assert c.is_preserved_by(swap)
    rotate = Permutation.rotation(3)
    assert c.composed_with(rotate).labels == (2, 2, 1)
    assert not c.is_preserved_by(rotate)
    with pytest.raises(LabelingError):
        c.composed_with(Permutation.identity(4))


def test_equality_and_hash():
    assert Labeling([1, 2]) == Labeling([1, 2], r=2)
    assert Labeling([1, 2]) != Labeling([1, 2], r=3)
    assert len({Labeling([1, 2]), Labeling([1, 2])}) == 1


def test_restricted_growth_strings():
    assert list(iter_restricted_growth_strings(3, 3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert len(list(iter_restricted_growth_strings(4, 2))) == 8
    assert len(list(iter_restricted_growth_strings(5, 5))) == 52
    assert list(iter_restricted_growth_strings(0, 3)) == [()]
    assert list(iter_restricted_growth_strings(2, 0)) == []


def test_restricted_growth_strings_are_sorted():
    strings = list(iter_restricted_growth_strings(6, 3))
    assert strings == sorted(strings)
    assert all(s[0] == 0 for s in strings)


def test_restricted_growth_strings_with_conflicts():
    assert list(iter_restricted_growth_strings(3, 2, {1: [0]})) == [(0, 1, 0), (0, 1, 1)]
    # 0, 1 and 2 pairwise distinct in 3 labels: a single string
    assert list(iter_restricted_growth_strings(3, 3, {1: [0], 2: [0, 1]})) == [(0, 1, 2)]
    assert list(iter_restricted_growth_strings(3, 2, {1: [0], 2: [0, 1]})) == []
