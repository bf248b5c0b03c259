import random
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
from circulant.errors import LabelingError
from circulant.permutation import Permutation


class Labeling:
    """
    A vertex labeling c: V -> {1, ..., r}.
    """
    _random = random.Random()

    def __init__(self, labels: Iterable[int], r: Optional[int] = None):
        """
        Create a labeling.

        Args:
            labels (iterable of int): labels[v] is the label of vertex v.
            r (int, optional): The size of the label range 1..r. Defaults to the largest label.
        """
        self._labels = tuple(int(c) for c in labels)
        if r is None:
            r = max(self._labels, default=1)
        self._r = int(r)
        bad = sorted({c for c in self._labels if not 1 <= c <= self._r})
        if bad:
            raise LabelingError(f"labels {bad} are outside 1..{self._r}")

    @staticmethod
    def create_random_labeling(n: int, r: int, rng: Optional[random.Random] = None) -> "Labeling":
        """
        Create a labeling of n vertices where every label is drawn uniformly from 1..r.

        Args:
            n (int): The number of vertices.
            r (int): The number of available labels. Must be >= 1.
            rng (random.Random, optional): Generator to draw from. Defaults to the isolated
                generator of this module (see set_random_seed).
        """
        if r < 1:
            raise LabelingError(f"need at least one label, got r={r}")
        rng = rng or Labeling._random
        return Labeling((rng.randint(1, r) for _ in range(n)), r)

    @staticmethod
    def set_random_seed(seed):
        """
        Set the seed for the isolated random number generator used only by
        create_random_labeling, so that experiments are reproducible.
        """
        Labeling._random = random.Random(seed)

    @staticmethod
    def from_restricted_growth(rgs: Sequence[int]) -> "Labeling":
        """The labeling v -> rgs[v] + 1."""
        return Labeling((x + 1 for x in rgs), max(rgs, default=0) + 1)

    @property
    def labels(self) -> Tuple[int, ...]:
        return self._labels

    @property
    def r(self) -> int:
        return self._r

    @property
    def n(self) -> int:
        return len(self._labels)

    def used_labels(self) -> List[int]:
        return sorted(set(self._labels))

    def label_count(self) -> int:
        """The number of distinct labels actually used."""
        return len(set(self._labels))

    def compressed(self) -> "Labeling":
        """
        Relabel onto 1..k (k = number of labels used) keeping the order of the labels.
        """
        rank = {c: index + 1 for index, c in enumerate(self.used_labels())}
        return Labeling((rank[c] for c in self._labels), max(len(rank), 1))

    def restricted_to(self, vertices: Iterable[int]) -> Tuple[int, ...]:
        return tuple(self._labels[v] for v in vertices)

    def composed_with(self, sigma: Permutation) -> "Labeling":
        """The labeling c ∘ sigma, i.e. v -> c(sigma(v))."""
        if sigma.degree != self.n:
            raise LabelingError(f"permutation of degree {sigma.degree} on a labeling of "
                                f"{self.n} vertices")
        return Labeling((self._labels[sigma(v)] for v in range(self.n)), self._r)

    def is_preserved_by(self, sigma: Permutation) -> bool:
        return self.composed_with(sigma).labels == self._labels

    def __call__(self, v: int) -> int:
        return self._labels[v]

    def __getitem__(self, v: int) -> int:
        return self._labels[v]

    def __len__(self):
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __eq__(self, other):
        if not isinstance(other, Labeling):
            return NotImplemented
        return self._labels == other._labels and self._r == other._r

    def __hash__(self):
        return hash((self._labels, self._r))

    def __repr__(self):
        """
        Example:
            >>> Labeling([1, 1, 2]).__repr__()
            'Labeling: 1,1,2'
        """
        return "Labeling: " + self.__str__()

    def __str__(self):
        return ",".join(str(c) for c in self._labels)


def iter_restricted_growth_strings(n: int, k: int,
                                   distinct_from: Optional[Dict[int, Sequence[int]]] = None
                                   ) -> Iterator[Tuple[int, ...]]:
    """
    Enumerate restricted growth strings of length n with values below k, in lexicographic
    order.

    A restricted growth string a has a[0] = 0 and a[v] <= max(a[:v]) + 1; it encodes a
    partition of 0..n-1 into at most k blocks, each partition exactly once.

    Args:
        n (int): Length.
        k (int): Maximum number of blocks.
        distinct_from (dict, optional): distinct_from[v] lists earlier vertices u < v with
            a[u] != a[v] required. Prefixes violating this are cut.
    """
    if n == 0:
        yield ()
        return
    if k < 1:
        return
    conflicts = distinct_from or {}
    values = [0] * n

    def extend(v, blocks):
        if v == n:
            yield tuple(values)
            return
        taken = {values[u] for u in conflicts.get(v, ())}
        for x in range(min(blocks + 1, k)):
            if x in taken:
                continue
            values[v] = x
            yield from extend(v + 1, max(blocks, x + 1))

    yield from extend(0, 0)
