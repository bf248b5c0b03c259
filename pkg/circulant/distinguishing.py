import logging
import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple, Union
from circulant import config
from circulant.automorphism import find_preserving_automorphism, is_automorphism
from circulant.errors import (BoundExceededError, CapExceededError, LabelingError,
                              NoSmallLabelingError, SpecError)
from circulant.graph import (Graph, complete_multipartite_parts, induced_subgraph, is_module,
                             twin_pairs)
from circulant.labeling import Labeling, iter_restricted_growth_strings
from circulant.permutation import Permutation
from circulant.spec import CmpSpec, build_cmp
from circulant.stats import SearchStats
from circulant.symmetry import delta_from_labeling, first_repeated_pair, psi

logger = logging.getLogger(__name__)

LabelsLike = Union[Labeling, Sequence[int]]


def _labels_of(c: LabelsLike) -> Tuple[int, ...]:
    return c.labels if isinstance(c, Labeling) else tuple(c)


@dataclass(frozen=True)
class Verification:
    """
    Outcome of a distinguishing test. Truthy iff the labeling is distinguishing; otherwise
    witness is a nontrivial automorphism that preserves the labeling.
    """
    distinguishing: bool
    witness: Optional[Permutation] = None

    def __bool__(self):
        return self.distinguishing


@dataclass(frozen=True)
class MultipartiteShape:
    """
    A complete multipartite graph with multiplicities[i] parts of size sizes[i], sizes
    strictly decreasing.
    """
    parts: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        parts = tuple((int(a), int(j)) for a, j in self.parts)
        object.__setattr__(self, "parts", parts)
        sizes = [a for a, _ in parts]
        if not parts:
            raise SpecError("a multipartite shape needs at least one part")
        if any(a < 1 for a in sizes) or any(j < 1 for _, j in parts):
            raise SpecError(f"part sizes and multiplicities must be >= 1, got {parts}")
        if any(a <= b for a, b in zip(sizes, sizes[1:])):
            raise SpecError(f"part sizes must be strictly decreasing, got {sizes}")

    @staticmethod
    def from_part_sizes(sizes: Iterable[int]) -> "MultipartiteShape":
        counts = {}
        for size in sizes:
            counts[size] = counts.get(size, 0) + 1
        return MultipartiteShape(tuple(sorted(counts.items(), reverse=True)))

    def __str__(self):
        return "K_{" + ",".join(f"{a}^{j}" for a, j in self.parts) + "}"


# ---------------------------------------------------------------------------------------------
# Verification and exact computation
# ---------------------------------------------------------------------------------------------

def is_distinguishing(g: Graph, c: LabelsLike, stats: Optional[SearchStats] = None) -> Verification:
    """
    Test whether no nontrivial automorphism of g preserves the labeling.

    The test searches directly for a label-preserving automorphism, so it never lists the
    automorphism group.

    Returns:
        Verification: Truthy if distinguishing; otherwise carries the lexicographically least
        nontrivial automorphism preserving c.
    """
    labels = _labels_of(c)
    if len(labels) != g.n:
        raise LabelingError(f"labeling has length {len(labels)}, graph has {g.n} vertices")
    witness = find_preserving_automorphism(g, labels, stats=stats)
    return Verification(witness is None, witness)


def exact_distinguishing_number(g: Graph, r_max: int = config.DEFAULT_R_MAX,
                                cap: Optional[int] = None,
                                stats: Optional[SearchStats] = None) -> Tuple[int, Labeling]:
    """
    Compute D(g) by exhaustive search.

    For r = 1, 2, ... the labelings with exactly r labels are tried in the order of their
    restricted growth strings, so renamings of the labels are tried once. Labelings giving
    two twins the same label are skipped: swapping the twins would preserve them.

    Args:
        g (Graph): The graph.
        r_max (int): Largest number of labels to try.
        cap (int, optional): Maximum number of labelings to test; defaults to the configured
            labeling cap.
        stats (SearchStats, optional): Receives the search counters.

    Returns:
        Tuple[int, Labeling]: D(g) and the lexicographically least distinguishing labeling
        with D(g) labels.

    Raises:
        BoundExceededError: No labeling with at most r_max labels is distinguishing.
        CapExceededError: More than cap labelings were tested.
    """
    if r_max < 1:
        raise SpecError(f"r_max must be >= 1, got {r_max}")
    if cap is None:
        cap = config.labeling_cap()
    stats = stats if stats is not None else SearchStats()
    distinct_from = {}
    for u, v in twin_pairs(g):
        distinct_from.setdefault(v, []).append(u)
    if g.n == 0:
        return 1, Labeling((), 1)

    tested = 0
    for r in range(1, r_max + 1):
        logger.info("trying %d labels on %r", r, g)
        for rgs in iter_restricted_growth_strings(g.n, r, distinct_from):
            if max(rgs) + 1 < r:
                # Already rejected with fewer labels.
                continue
            tested += 1
            stats.labelings_tested += 1
            if tested > cap:
                raise CapExceededError("labelings", cap)
            if find_preserving_automorphism(g, [x + 1 for x in rgs], stats=stats) is None:
                logger.debug("D(%r) = %d after %d labelings", g, r, tested)
                return r, Labeling.from_restricted_growth(rgs)
    raise BoundExceededError(r_max)


# ---------------------------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------------------------

def cmp_distinguishing_formula(spec: CmpSpec) -> int:
    """
    D(C(m,p)) in closed form:

        m       if p = 1 and m >= 3
        2m + 1  if m = 1 and p in {3, 4, 5}, or m >= 2 and p = 4
        m + 1   if m = 1 and p >= 6, or m >= 2, p >= 2 and p != 4
    """
    m, p = spec.m, spec.p
    if p == 1:
        if m >= 3:
            return m
        raise SpecError(f"{spec} is outside the closed form (p = 1 needs m >= 3)")
    if m == 1:
        if p in (3, 4, 5):
            return 2 * m + 1
        if p >= 6:
            return m + 1
        raise SpecError(f"{spec} is outside the closed form (m = 1 needs p >= 3)")
    if p == 4:
        return 2 * m + 1
    return m + 1


def multipartite_distinguishing_formula(shape: MultipartiteShape) -> int:
    """
    D of a complete multipartite graph: the least q with comb(q, a) >= j for every part
    size a occurring j times.
    """
    q = max(a for a, _ in shape.parts)
    while any(comb(q, a) < j for a, j in shape.parts):
        q += 1
    return q


def multipartite_shape(g: Graph) -> Optional[MultipartiteShape]:
    parts = complete_multipartite_parts(g)
    if parts is None:
        return None
    return MultipartiteShape.from_part_sizes(len(part) for part in parts)


def multipartite_labeling(g: Graph) -> Labeling:
    """
    A D(g)-distinguishing labeling of a complete multipartite graph.

    Among the parts of size a (ordered by smallest vertex), the k-th part gets the k-th
    a-subset of {1..D} in lexicographic order, its vertices taking the subset's labels in
    increasing order. Parts of different sizes are never swapped by an automorphism.
    """
    parts = complete_multipartite_parts(g)
    if parts is None:
        raise SpecError(f"{g!r} is not complete multipartite")
    d = multipartite_distinguishing_formula(MultipartiteShape.from_part_sizes(map(len, parts)))
    labels = [0] * g.n
    subsets = {}
    for part in parts:
        size = len(part)
        if size not in subsets:
            subsets[size] = combinations(range(1, d + 1), size)
        for v, c in zip(part, next(subsets[size])):
            labels[v] = c
    return Labeling(labels, d)


# ---------------------------------------------------------------------------------------------
# Constructions for C(m,p)
# ---------------------------------------------------------------------------------------------

def explicit_labeling(spec: CmpSpec) -> Labeling:
    """
    An (m+1)-distinguishing labeling of C(m,p), m >= 2, p != 4.

    For p >= 5, with P_j the j-th band {(j-1)p, ..., jp-1}:

        c(v) = 1      for 0 <= v <= floor(p/2) and for v = 2p - 1
        c(v) = 2      for floor(p/2) < v <= p - 1
        c(v) = j + 1  for v in P_j, 2 <= j <= m, v != 2p - 1

    For p in {2, 3} the graph is K_{m,m} or K_{m,m,m} and the multipartite labeling is used.

    Raises:
        NoSmallLabelingError: p = 4, where D(C(m,4)) = 2m + 1.
    """
    m, p = spec.m, spec.p
    if m < 2 or p < 2:
        raise SpecError(f"explicit labeling needs m >= 2 and p >= 2, got {spec}")
    if p == 4:
        raise NoSmallLabelingError(f"no (m+1)-labeling exists for {spec}: "
                                   f"D = {2 * m + 1}")
    if p in (2, 3):
        return multipartite_labeling(build_cmp(spec))
    labels = []
    for v in range(spec.n):
        j = v // p + 1
        if v == 2 * p - 1:
            labels.append(1)
        elif j == 1:
            labels.append(1 if v <= p // 2 else 2)
        else:
            labels.append(j + 1)
    return Labeling(labels, m + 1)


def neighborhood_label_signature(g: Graph, c: LabelsLike, v: int) -> Tuple[int, ...]:
    """The sorted labels of the neighbours of v."""
    labels = _labels_of(c)
    return tuple(sorted(labels[u] for u in g.neighbors(v)))


def break_m_labeling(spec: CmpSpec, c: LabelsLike) -> Permutation:
    """
    A nontrivial automorphism of C(m,p) preserving a labeling with at most m labels.

    If some module repeats a label, the transposition of the lexicographically least such
    pair is returned. Otherwise every module is rainbow and the result is
    delta^-1 ∘ psi ∘ delta, where delta sorts each module by label; it sends 0 to the
    vertex of M_{p-1} that carries the label of 0.
    """
    if spec.m < 2 or spec.p < 2:
        raise SpecError(f"breaking needs m >= 2 and p >= 2, got {spec}")
    labeling = c if isinstance(c, Labeling) else Labeling(c)
    if labeling.n != spec.n:
        raise LabelingError(f"labeling has length {labeling.n}, {spec} has {spec.n} vertices")
    if labeling.label_count() > spec.m:
        raise LabelingError(f"labeling uses {labeling.label_count()} labels, more than "
                            f"m = {spec.m}")
    labels = labeling.compressed().labels
    repeated = first_repeated_pair(spec, labels)
    if repeated is not None:
        _, u, v = repeated
        return Permutation.transposition(spec.n, u, v)
    delta = delta_from_labeling(spec, labels)
    return delta.inverse() * psi(spec) * delta


def band_labels(spec: CmpSpec, c: LabelsLike) -> List[Tuple[int, ...]]:
    """The labels of each band P_1..P_m, in vertex order."""
    labels = _labels_of(c)
    return [labels[j * spec.p:(j + 1) * spec.p] for j in range(spec.m)]


def module_lower_bound(g: Graph, module: Iterable[int]) -> int:
    """
    D(g[M]) for a module M of g, a lower bound for D(g): every automorphism of g[M] extends
    to g by fixing the other vertices.
    """
    vertices = sorted(set(module))
    if not is_module(g, vertices):
        raise SpecError(f"{vertices} is not a module of {g!r}")
    return exact_distinguishing_number(induced_subgraph(g, vertices))[0]


@dataclass(frozen=True)
class BoundCertificate:
    """
    Evidence for D(C(m,p)) = m + 1: the explicit labeling verified (upper bound) and random
    m-labelings each broken by an automorphism (lower bound).
    """
    spec: CmpSpec
    upper_verified: bool
    labels_used: int
    samples: int
    samples_broken: int

    @property
    def failures(self) -> int:
        return self.samples - self.samples_broken

    def __bool__(self):
        return self.upper_verified and self.labels_used == self.spec.m + 1 and self.failures == 0


def verify_cmp_bounds(spec: CmpSpec, samples: int = config.RANDOM_SAMPLES,
                      seed: int = config.DEFAULT_SEED) -> BoundCertificate:
    """
    Certify D(C(m,p)) = m + 1 for m >= 2, p >= 2, p != 4 without the exact oracle.
    """
    graph = build_cmp(spec)
    labeling = explicit_labeling(spec)
    upper = bool(is_distinguishing(graph, labeling))
    rng = random.Random(seed)
    broken = 0
    for _ in range(samples):
        c = Labeling.create_random_labeling(spec.n, spec.m, rng)
        sigma = break_m_labeling(spec, c)
        if not sigma.is_identity() and is_automorphism(graph, sigma) and c.is_preserved_by(sigma):
            broken += 1
    logger.info("%s: explicit labeling %s, %d/%d random %d-labelings broken", spec,
                "verified" if upper else "FAILED", broken, samples, spec.m)
    return BoundCertificate(spec, upper, labeling.label_count(), samples, broken)
