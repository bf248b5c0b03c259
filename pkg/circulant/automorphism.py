import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import numpy as np
from circulant import config
from circulant.errors import CapExceededError, DegreeMismatchError, LabelingError, SpecError
from circulant.graph import Graph, bfs_order
from circulant.permutation import Permutation
from circulant.stats import SearchStats

logger = logging.getLogger(__name__)


def refine_coloring(g: Graph, colors: Optional[Sequence[int]] = None) -> List[int]:
    """
    Colour refinement to a stable partition.

    Each round replaces the colour of v by the pair (colour of v, sorted colours of the
    neighbours of v), renumbered in sorted order of these pairs. Starting from a uniform
    colouring the first round separates vertices by degree and the second by their
    neighbour-degree multiset. The stable cells are preserved by every automorphism that
    preserves the initial colours.

    Args:
        g (Graph): The graph.
        colors (sequence of int, optional): Initial vertex colours; uniform if omitted.

    Returns:
        List[int]: The stable colour of every vertex, numbered 0..k-1.
    """
    if colors is None:
        current = [0] * g.n
    else:
        if len(colors) != g.n:
            raise LabelingError(f"colouring has length {len(colors)}, graph has {g.n} vertices")
        palette = {c: index for index, c in enumerate(sorted(set(colors)))}
        current = [palette[c] for c in colors]
    cell_count = len(set(current))
    while True:
        keys = [(current[v], tuple(sorted(current[u] for u in g.neighbors(v))))
                for v in range(g.n)]
        numbering = {key: index for index, key in enumerate(sorted(set(keys)))}
        refined = [numbering[key] for key in keys]
        if len(numbering) == cell_count:
            return refined
        current, cell_count = refined, len(numbering)


class AutomorphismSearch:
    """
    Backtracking search for the (colour-preserving) automorphisms of a graph.

    Vertices are mapped one at a time in a fixed order. A vertex may only go to an unused
    vertex of the same refined colour cell, and every partial map must preserve adjacency and
    non-adjacency among the vertices mapped so far. When the vertex already has a mapped
    neighbour, only the neighbours of that neighbour's image are tried.
    """

    def __init__(self, graph: Graph, colors: Optional[Sequence[int]] = None,
                 order: Optional[Sequence[int]] = None):
        """
        Create an automorphism search.

        Args:
            graph (Graph): The graph.
            colors (sequence of int, optional): Vertex colours that every automorphism must
                preserve. Omit to search the full automorphism group.
            order (sequence of int, optional): The order in which vertices are mapped. Defaults
                to breadth-first order from vertex 0. With the natural order 0..n-1 the
                automorphisms come out in lexicographic order of their image arrays.
        """
        self._graph = graph
        self._cells = refine_coloring(graph, colors)
        self._order = list(order) if order is not None else bfs_order(graph)
        if sorted(self._order) != list(range(graph.n)):
            raise SpecError("search order must list every vertex exactly once")
        self._cell_masks: Dict[int, int] = {}
        for v, cell in enumerate(self._cells):
            self._cell_masks[cell] = self._cell_masks.get(cell, 0) | (1 << v)
        self.stats = SearchStats()

    @property
    def cells(self) -> List[int]:
        return self._cells

    def __iter__(self) -> Iterator[Permutation]:
        n = self._graph.n
        images = [-1] * n
        self.stats.start()
        try:
            yield from self._extend(0, images, 0, 0)
        finally:
            self.stats.stop()

    def _extend(self, depth, images, domain_mask, image_mask):
        if depth == len(self._order):
            self.stats.leaves += 1
            self.stats.automorphisms_found += 1
            yield Permutation(images)
            return
        graph = self._graph
        v = self._order[depth]

        # Images of the already-mapped neighbours of v; the image of v must see exactly these
        # among the already-used images.
        mapped_neighbors = graph.neighbor_mask(v) & domain_mask
        required = 0
        while mapped_neighbors:
            low = mapped_neighbors & -mapped_neighbors
            required |= 1 << images[low.bit_length() - 1]
            mapped_neighbors ^= low

        candidates = self._cell_masks[self._cells[v]] & ~image_mask
        if required:
            anchor = (required & -required).bit_length() - 1
            candidates &= graph.neighbor_mask(anchor)

        while candidates:
            low = candidates & -candidates
            candidates ^= low
            w = low.bit_length() - 1
            if (graph.neighbor_mask(w) & image_mask) != required:
                continue
            self.stats.nodes += 1
            images[v] = w
            yield from self._extend(depth + 1, images, domain_mask | (1 << v), image_mask | low)
            images[v] = -1


@dataclass(frozen=True)
class AutGroup:
    """
    The full automorphism group of a graph, listed element by element. The identity comes
    first; the rest follow in lexicographic order of their image arrays.
    """
    n: int
    elements: Tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, sigma: Permutation) -> bool:
        return sigma in self._element_set()

    def _element_set(self):
        cached = self.__dict__.get("_cached_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_cached_set", cached)
        return cached

    def is_group(self) -> bool:
        """
        Check exhaustively that the elements contain the identity and are closed under
        composition and inverses.
        """
        if not self.elements or not self.elements[0].is_identity():
            return False
        table = np.array([sigma.images for sigma in self.elements], dtype=np.int64)
        table = table.reshape(len(self.elements), self.n)
        members = {row.tobytes() for row in table}
        for row in table:
            # row ∘ b for every b at once: (row ∘ b)(v) = row[b[v]]
            products = row[table]
            if any(product.tobytes() not in members for product in products):
                return False
            inverse = np.empty_like(row)
            inverse[row] = np.arange(self.n)
            if inverse.tobytes() not in members:
                return False
        return True

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def iter_automorphisms(g: Graph, colors: Optional[Sequence[int]] = None,
                       order: Optional[Sequence[int]] = None) -> Iterator[Permutation]:
    """Lazily yield the (colour-preserving) automorphisms of g."""
    return iter(AutomorphismSearch(g, colors, order))


def is_automorphism(g: Graph, sigma: Permutation) -> bool:
    """
    Check whether sigma maps the edge set of g onto itself.

    Since sigma is a bijection, mapping every edge to an edge is enough.
    """
    if sigma.degree != g.n:
        raise DegreeMismatchError(f"permutation of degree {sigma.degree} on a graph with "
                                  f"{g.n} vertices")
    return all(g.adjacent(sigma(u), sigma(v)) for u, v in g.edges)


def enumerate_automorphisms(g: Graph, cap: Optional[int] = None,
                            stats: Optional[SearchStats] = None) -> AutGroup:
    """
    List every automorphism of g.

    Args:
        g (Graph): The graph.
        cap (int, optional): Maximum group order accepted; defaults to the configured cap.
        stats (SearchStats, optional): Receives the search counters.

    Returns:
        AutGroup: The group, identity first, then lexicographic by image array.

    Raises:
        CapExceededError: The group has more than cap elements.
    """
    if cap is None:
        cap = config.automorphism_cap()
    if cap <= 0:
        raise SpecError(f"cap must be positive, got {cap}")
    search = AutomorphismSearch(g)
    elements = []
    for sigma in search:
        elements.append(sigma)
        if len(elements) > cap:
            raise CapExceededError("automorphisms", cap)
    elements.sort()
    if stats is not None:
        stats.merge(search.stats)
    logger.debug("enumerated %d automorphisms of %r in %d nodes", len(elements), g,
                 search.stats.nodes)
    return AutGroup(g.n, tuple(elements))


def find_preserving_automorphism(g: Graph, labels: Sequence[int],
                                 stats: Optional[SearchStats] = None) -> Optional[Permutation]:
    """
    The lexicographically least nontrivial automorphism sigma of g with
    labels[sigma(v)] == labels[v] for every v, or None if there is none.
    """
    search = AutomorphismSearch(g, colors=labels, order=range(g.n))
    witness = None
    automorphisms = iter(search)
    for sigma in automorphisms:
        if not sigma.is_identity():
            witness = sigma
            break
    automorphisms.close()
    if stats is not None:
        stats.merge(search.stats)
    return witness
