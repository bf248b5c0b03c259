import math
from typing import Iterable, List, Sequence, Tuple
from circulant.errors import DegreeMismatchError, PermutationError


class Permutation:
    """
    A bijection of the vertices 0..n-1, stored as its image array: images[v] is the image of v.
    """

    def __init__(self, images: Iterable[int]):
        """
        Create a permutation from its image array.

        Args:
            images (iterable of int): images[v] = sigma(v). Must be a rearrangement of 0..n-1.
        """
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"not a bijection of 0..{len(images) - 1}: {list(images)}")
        self._images = images

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(n))

    @staticmethod
    def rotation(n: int, k: int = 1) -> "Permutation":
        """The rotation v -> v + k mod n."""
        return Permutation((v + k) % n for v in range(n))

    @staticmethod
    def transposition(n: int, u: int, v: int) -> "Permutation":
        images = list(range(n))
        images[u], images[v] = v, u
        return Permutation(images)

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """
        Create a permutation of degree n from disjoint cycles, e.g. [(0, 5), (1, 2, 3)].
        """
        images = list(range(n))
        for cycle in cycles:
            for index, v in enumerate(cycle):
                images[v] = cycle[(index + 1) % len(cycle)]
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    def __call__(self, v: int) -> int:
        return self._images[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """
        The composition self ∘ other, i.e. v -> self(other(v)).
        """
        if self.degree != other.degree:
            raise DegreeMismatchError(f"cannot compose permutations of degree {self.degree} "
                                      f"and {other.degree}")
        return Permutation(self._images[x] for x in other._images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for v, w in enumerate(self._images):
            images[w] = v
        return Permutation(images)

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self._images))

    def support(self) -> List[int]:
        """The vertices that are moved."""
        return [v for v, w in enumerate(self._images) if v != w]

    def cycles(self) -> List[Tuple[int, ...]]:
        """
        The nontrivial cycles, each starting at its smallest vertex, ordered by that vertex.
        """
        seen = [False] * self.degree
        cycles = []
        for start in range(self.degree):
            if seen[start] or self._images[start] == start:
                continue
            cycle = []
            v = start
            while not seen[v]:
                seen[v] = True
                cycle.append(v)
                v = self._images[v]
            cycles.append(tuple(cycle))
        return cycles

    def apply_to_labels(self, labels: Sequence[int]) -> Tuple[int, ...]:
        """The labels moved along the permutation, v -> labels[sigma(v)]."""
        if len(labels) != self.degree:
            raise DegreeMismatchError(f"permutation of degree {self.degree} applied to "
                                      f"{len(labels)} labels")
        return tuple(labels[w] for w in self._images)

    def order(self) -> int:
        """The order of the permutation in the symmetric group."""
        return math.lcm(*(len(c) for c in self.cycles()))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other):
        return self._images < other._images

    def __hash__(self):
        return hash(self._images)

    def __len__(self):
        return self.degree

    def __repr__(self):
        """
        Example:
            >>> Permutation([5, 1, 2, 3, 4, 0]).__repr__()
            'Permutation: (0 5)'
        """
        return "Permutation: " + self.__str__()

    def __str__(self):
        """
        Cycle notation without fixed points; the identity prints as "()".
        """
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(v) for v in cycle) + ")" for cycle in cycles)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a ∘ b: first apply b, then a."""
    return a.compose(b)


def inverse(a: Permutation) -> Permutation:
    return a.inverse()
