import pytest
from circulant.automorphism import is_automorphism
from circulant.errors import DegreeMismatchError, LabelingError, NonRainbowBlockError, SpecError
from circulant.permutation import Permutation
from circulant.spec import CmpSpec, build_cmp, module_partition
from circulant.symmetry import delta_from_labeling, first_repeated_pair, module_permutation, psi


def test_module_permutation_swap():
    spec = CmpSpec(2, 3)
    partition = module_partition(spec)
    swap = Permutation.transposition(2, 0, 1)
    identity = Permutation.identity(2)
    sigma = module_permutation(partition, [swap, identity, identity])
    assert sigma == Permutation.transposition(6, 0, 3)
    assert is_automorphism(build_cmp(spec), sigma)
    assert module_permutation(partition, [identity] * 3).is_identity()


def test_module_permutation_three_cycle():
    spec = CmpSpec(3, 5)
    partition = module_partition(spec)
    identity = Permutation.identity(3)
    sigma = module_permutation(partition, [Permutation([1, 2, 0])] + [identity] * 4)
    assert sigma.cycles() == [(0, 5, 10)]
    assert is_automorphism(build_cmp(spec), sigma)


def test_module_permutation_shape_mismatch():
    partition = module_partition(CmpSpec(2, 3))
    with pytest.raises(DegreeMismatchError):
        module_permutation(partition, [Permutation.identity(2)] * 2)
    with pytest.raises(DegreeMismatchError):
        module_permutation(partition, [Permutation.identity(3)] * 3)


def test_psi():
    p44 = psi(CmpSpec(4, 4))
    assert (p44(0), p44(1), p44(5)) == (3, 2, 6)
    p25 = psi(CmpSpec(2, 5))
    assert p25(7) == 7
    assert (p25 * p25).is_identity()
    for m in range(1, 4):
        for p in range(2, 8):
            if m * p >= 3:
                spec = CmpSpec(m, p)
                assert is_automorphism(build_cmp(spec), psi(spec))
    with pytest.raises(SpecError):
        psi(CmpSpec(3, 1))


def test_first_repeated_pair():
    spec = CmpSpec(2, 5)
    assert first_repeated_pair(spec, [1] * 10) == (0, 0, 5)
    assert first_repeated_pair(spec, [1, 1, 2, 1, 1, 2, 2, 2, 2, 2]) == (2, 2, 7)
    assert first_repeated_pair(spec, [1, 1, 1, 1, 1, 2, 2, 2, 2, 2]) is None


def test_delta_from_labeling():
    spec = CmpSpec(2, 5)
    labels = [1, 2, 1, 2, 1, 2, 1, 2, 1, 2]
    delta = delta_from_labeling(spec, labels)
    assert delta(0) == 0
    assert delta(5) == 5
    assert delta(1) == 6
    assert delta(6) == 1
    assert is_automorphism(build_cmp(spec), delta)
    for block in module_partition(spec):
        assert sorted(delta(v) for v in block) == list(block)


def test_delta_of_identity_order_labeling():
    spec = CmpSpec(3, 4)
    labels = [v // 4 + 1 for v in range(12)]
    assert delta_from_labeling(spec, labels).is_identity()


def test_delta_rejects_non_rainbow_blocks():
    spec = CmpSpec(2, 5)
    with pytest.raises(NonRainbowBlockError) as e:
        delta_from_labeling(spec, [1, 1, 1, 2, 2, 2, 2, 1, 1, 1])
    assert (e.value.block, e.value.u, e.value.v) == (2, 2, 7)
    assert str(e.value) == "non-rainbow block M_2: vertices 2 and 7 share a label"
    with pytest.raises(LabelingError):
        delta_from_labeling(spec, [1, 2])
    with pytest.raises(LabelingError):
        delta_from_labeling(spec, [1, 3] * 5)
