import random
import pytest
from circulant.automorphism import is_automorphism
from circulant.distinguishing import (BoundCertificate, MultipartiteShape, band_labels,
                                      break_m_labeling, cmp_distinguishing_formula,
                                      exact_distinguishing_number, explicit_labeling,
                                      is_distinguishing, module_lower_bound,
                                      multipartite_distinguishing_formula, multipartite_labeling,
                                      multipartite_shape, neighborhood_label_signature,
                                      verify_cmp_bounds)
from circulant.errors import (BoundExceededError, CapExceededError, LabelingError,
                              NoSmallLabelingError, SpecError)
from circulant.graph import (Graph, complement, complete_graph, complete_multipartite,
                             cycle_graph, disjoint_union, path_graph)
from circulant.labeling import Labeling
from circulant.permutation import Permutation
from circulant.spec import CmpSpec, build_cmp, module_partition
from circulant.stats import SearchStats
from circulant.symmetry import psi

ORACLE_SWEEP = [CmpSpec(m, p) for m in range(1, 11) for p in range(1, 11)
                if 3 <= m * p <= 10 and not (p == 1 and m < 3)]


def test_is_distinguishing():
    assert is_distinguishing(complete_graph(3), [1, 2, 3])
    verification = is_distinguishing(complete_graph(3), [1, 1, 2])
    assert not verification
    assert verification.witness == Permutation.transposition(3, 0, 1)
    assert is_distinguishing(build_cmp(CmpSpec(2, 5)), explicit_labeling(CmpSpec(2, 5)))
    with pytest.raises(LabelingError):
        is_distinguishing(complete_graph(3), [1, 2])


def test_exact_distinguishing_number_known_values():
    assert exact_distinguishing_number(complete_graph(4))[0] == 4
    assert exact_distinguishing_number(path_graph(4)) == (2, Labeling([1, 1, 1, 2]))
    assert exact_distinguishing_number(build_cmp(CmpSpec(2, 3)))[0] == 3
    assert exact_distinguishing_number(cycle_graph(4))[0] == 3
    assert exact_distinguishing_number(path_graph(1)) == (1, Labeling([1]))
    assert exact_distinguishing_number(Graph(0, [])) == (1, Labeling((), 1))


def test_exact_witness_is_distinguishing():
    for g in (cycle_graph(6), build_cmp(CmpSpec(2, 3)), complete_multipartite([3, 2])):
        d, witness = exact_distinguishing_number(g)
        assert witness.label_count() == d
        assert is_distinguishing(g, witness)


def test_exact_distinguishing_number_limits():
    with pytest.raises(BoundExceededError) as e:
        exact_distinguishing_number(complete_graph(4), r_max=3)
    assert e.value.r_max == 3
    with pytest.raises(CapExceededError):
        exact_distinguishing_number(cycle_graph(6), cap=1)
    with pytest.raises(SpecError):
        exact_distinguishing_number(cycle_graph(6), r_max=0)


def test_exact_stats():
    stats = SearchStats()
    exact_distinguishing_number(cycle_graph(5), stats=stats)
    assert stats.labelings_tested > 1
    assert stats.nodes > 0


def test_labeling_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CIRCDIST_LABELING_CAP", "1")
    with pytest.raises(CapExceededError):
        exact_distinguishing_number(cycle_graph(6))


def test_cmp_distinguishing_formula():
    assert cmp_distinguishing_formula(CmpSpec(4, 1)) == 4
    assert cmp_distinguishing_formula(CmpSpec(1, 6)) == 2
    assert cmp_distinguishing_formula(CmpSpec(1, 4)) == 3
    assert cmp_distinguishing_formula(CmpSpec(2, 4)) == 5
    assert cmp_distinguishing_formula(CmpSpec(3, 7)) == 4
    assert cmp_distinguishing_formula(CmpSpec(5, 2)) == 6
    with pytest.raises(SpecError):
        cmp_distinguishing_formula(CmpSpec(2, 1))


def test_formula_matches_oracle():
    assert len(ORACLE_SWEEP) >= 15
    for spec in ORACLE_SWEEP:
        d, witness = exact_distinguishing_number(build_cmp(spec))
        assert d == cmp_distinguishing_formula(spec), spec
        assert d >= spec.m
        if spec.m >= 2 and spec.p >= 2:
            for block in module_partition(spec):
                restricted = witness.restricted_to(block)
                assert len(set(restricted)) == len(restricted), spec


def test_distinguishing_number_of_complement():
    for spec in ORACLE_SWEEP:
        if spec.n <= 7:
            g = build_cmp(spec)
            assert exact_distinguishing_number(complement(g))[0] == \
                exact_distinguishing_number(g)[0], spec


def test_multipartite_shape():
    shape = MultipartiteShape.from_part_sizes([2, 3, 2])
    assert shape.parts == ((3, 1), (2, 2))
    assert shape.__str__() == "K_{3^1,2^2}"
    with pytest.raises(SpecError):
        MultipartiteShape(((2, 1), (3, 1)))
    with pytest.raises(SpecError):
        MultipartiteShape(((2, 0),))
    assert multipartite_shape(build_cmp(CmpSpec(2, 4))) == MultipartiteShape(((4, 2),))
    assert multipartite_shape(cycle_graph(5)) is None


def test_multipartite_distinguishing_formula():
    assert multipartite_distinguishing_formula(MultipartiteShape(((2, 2),))) == 3
    assert multipartite_distinguishing_formula(MultipartiteShape(((4, 2),))) == 5
    assert multipartite_distinguishing_formula(MultipartiteShape(((1, 6),))) == 6
    for m in range(2, 6):
        shape = multipartite_shape(build_cmp(CmpSpec(m, 4)))
        assert shape == MultipartiteShape(((2 * m, 2),))
        assert multipartite_distinguishing_formula(shape) == 2 * m + 1
        assert cmp_distinguishing_formula(CmpSpec(m, 4)) == 2 * m + 1


def test_multipartite_formula_matches_oracle():
    for sizes, expected in (([2, 2], 3), ([2, 2, 2], 3), ([3, 3], 4), ([1, 1, 1], 3),
                            ([3, 2], 3)):
        g = complete_multipartite(sizes)
        assert multipartite_distinguishing_formula(multipartite_shape(g)) == expected
        assert exact_distinguishing_number(g)[0] == expected


def test_cmp_2_4_oracle():
    assert exact_distinguishing_number(build_cmp(CmpSpec(2, 4)))[0] == 5


def test_multipartite_labeling():
    assert multipartite_labeling(build_cmp(CmpSpec(2, 3))) == Labeling([1, 1, 2, 2, 3, 3])
    assert multipartite_labeling(build_cmp(CmpSpec(2, 2))) == Labeling([1, 1, 2, 3])
    for sizes in ([2, 2], [3, 3, 3], [4, 2, 2], [1, 1, 1, 1]):
        g = complete_multipartite(sizes)
        c = multipartite_labeling(g)
        assert c.label_count() == multipartite_distinguishing_formula(multipartite_shape(g))
        assert is_distinguishing(g, c)
    with pytest.raises(SpecError):
        multipartite_labeling(cycle_graph(5))


def test_explicit_labeling():
    assert explicit_labeling(CmpSpec(2, 5)).labels == (1, 1, 1, 2, 2, 3, 3, 3, 3, 1)
    assert explicit_labeling(CmpSpec(3, 5))[10] == 4
    assert explicit_labeling(CmpSpec(2, 3)) == Labeling([1, 1, 2, 2, 3, 3])
    with pytest.raises(NoSmallLabelingError):
        explicit_labeling(CmpSpec(2, 4))
    with pytest.raises(SpecError):
        explicit_labeling(CmpSpec(1, 6))
    with pytest.raises(SpecError):
        explicit_labeling(CmpSpec(4, 1))


def test_explicit_labeling_is_distinguishing():
    for m in (2, 3, 4):
        for p in (5, 6, 7, 8):
            if m * p > 32:
                continue
            spec = CmpSpec(m, p)
            c = explicit_labeling(spec)
            assert c.label_count() == m + 1
            assert is_distinguishing(build_cmp(spec), c), spec


def test_explicit_labeling_small_periods():
    for m in (2, 3, 4):
        for p in (2, 3):
            spec = CmpSpec(m, p)
            c = explicit_labeling(spec)
            assert c.label_count() == m + 1
            assert is_distinguishing(build_cmp(spec), c), spec


def test_neighborhood_label_signature():
    spec = CmpSpec(2, 5)
    g, c = build_cmp(spec), explicit_labeling(spec)
    assert neighborhood_label_signature(g, c, 0) == (1, 1, 2, 3)
    assert neighborhood_label_signature(g, c, 9) == (1, 2, 3, 3)
    assert neighborhood_label_signature(path_graph(1), [1], 0) == ()


def test_vertex_0_is_the_anchor_of_the_explicit_labeling():
    for m in (2, 3, 4):
        for p in (5, 6, 7, 8):
            if m * p > 32:
                continue
            spec = CmpSpec(m, p)
            g, c = build_cmp(spec), explicit_labeling(spec)
            anchor = (1, 1, 2, 3) + tuple(j for j in range(4, m + 2) for _ in range(2))
            matches = [v for v in range(g.n)
                       if c[v] == 1 and neighborhood_label_signature(g, c, v) == anchor]
            assert matches == [0], spec


def test_band_labels():
    spec = CmpSpec(2, 5)
    assert band_labels(spec, explicit_labeling(spec)) == [(1, 1, 1, 2, 2), (3, 3, 3, 3, 1)]


def test_break_constant_labeling():
    spec = CmpSpec(2, 5)
    sigma = break_m_labeling(spec, [1] * 10)
    assert sigma == Permutation.transposition(10, 0, 5)
    assert sigma.__str__() == "(0 5)"


def test_break_rainbow_identity_order_labeling():
    spec = CmpSpec(2, 5)
    c = Labeling([v // 5 + 1 for v in range(10)])
    assert break_m_labeling(spec, c) == psi(spec)


def test_break_rainbow_labeling_sends_0_into_last_module():
    spec = CmpSpec(4, 4)
    graph = build_cmp(spec)
    rng = random.Random(2)
    labels = [0] * spec.n
    for block in module_partition(spec):
        order = list(range(1, 5))
        rng.shuffle(order)
        for v, label in zip(block, order):
            labels[v] = label
    c = Labeling(labels)
    sigma = break_m_labeling(spec, c)
    assert not sigma.is_identity()
    assert is_automorphism(graph, sigma)
    assert c.is_preserved_by(sigma)
    assert sigma(0) % spec.p == spec.p - 1
    assert c[sigma(0)] == c[0]


def test_break_compresses_labels():
    spec = CmpSpec(2, 5)
    c = Labeling([3, 3, 3, 3, 3, 7, 7, 7, 7, 7])
    assert break_m_labeling(spec, c) == psi(spec)


def test_break_random_labelings():
    for spec in (CmpSpec(2, 5), CmpSpec(2, 6), CmpSpec(3, 5), CmpSpec(2, 7)):
        graph = build_cmp(spec)
        rng = random.Random(spec.n)
        for _ in range(1000):
            c = Labeling.create_random_labeling(spec.n, spec.m, rng)
            sigma = break_m_labeling(spec, c)
            assert not sigma.is_identity()
            assert is_automorphism(graph, sigma)
            assert c.is_preserved_by(sigma)


def test_break_rejects_bad_input():
    with pytest.raises(LabelingError):
        break_m_labeling(CmpSpec(2, 5), [1, 2, 3] + [1] * 7)
    with pytest.raises(LabelingError):
        break_m_labeling(CmpSpec(2, 5), [1, 2])
    with pytest.raises(SpecError):
        break_m_labeling(CmpSpec(1, 6), [1] * 6)


def test_module_lower_bound():
    spec = CmpSpec(3, 5)
    g = build_cmp(spec)
    assert module_lower_bound(g, [0, 5, 10]) == 3
    assert module_lower_bound(build_cmp(CmpSpec(2, 3)), [0, 3]) == 2
    with pytest.raises(SpecError):
        module_lower_bound(g, [0, 1])


def test_disconnected_distinguishing_numbers():
    assert exact_distinguishing_number(disjoint_union(complete_graph(3), path_graph(2)))[0] == 3
    assert exact_distinguishing_number(disjoint_union(complete_graph(2), path_graph(3)))[0] == 2
    assert exact_distinguishing_number(disjoint_union(complete_graph(2), path_graph(2)))[0] == 3


def test_verify_cmp_bounds():
    certificate = verify_cmp_bounds(CmpSpec(2, 5), samples=50, seed=1)
    assert certificate
    assert certificate.upper_verified
    assert certificate.labels_used == 3
    assert certificate.samples_broken == 50
    assert certificate.failures == 0
    assert not BoundCertificate(CmpSpec(2, 5), True, 3, 10, 9)
    with pytest.raises(NoSmallLabelingError):
        verify_cmp_bounds(CmpSpec(2, 4), samples=1)
