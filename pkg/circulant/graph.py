import math
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import networkx as nx
from networkx.utils import UnionFind
import numpy as np
from circulant.errors import GraphError

UNREACHABLE = math.inf


class Graph:
    """
    A finite, simple, undirected graph on the vertices 0..n-1.

    Graphs are immutable. Adjacency is held twice: as an n×n boolean numpy matrix for
    vectorized set tests, and as one Python int bitmask per vertex for the pair queries
    of the backtracking searches.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]], name: Optional[str] = None):
        """
        Create a graph.

        Args:
            n (int): The number of vertices. Must be >= 0.
            edges (iterable of pairs): The edges as pairs (u, v) with u != v and both < n. Each
                unordered pair may appear at most once.
            name (str, optional): A short human-readable name such as "K4" or "C(2,5)".
        """
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        adjacency = np.zeros((n, n), dtype=bool)
        normalized = []
        for edge in edges:
            u, v = (int(x) for x in edge)
            if u == v:
                raise GraphError(f"self loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {{{u},{v}}} has an endpoint outside 0..{n - 1}")
            if adjacency[u, v]:
                raise GraphError(f"duplicate edge {{{min(u, v)},{max(u, v)}}}")
            adjacency[u, v] = adjacency[v, u] = True
            normalized.append((min(u, v), max(u, v)))
        self._init_from_matrix(n, adjacency, tuple(sorted(normalized)), name)

    @classmethod
    def from_adjacency(cls, adjacency: np.ndarray, name: Optional[str] = None) -> "Graph":
        """
        Create a graph from a symmetric boolean adjacency matrix with an empty diagonal.
        """
        matrix = np.array(adjacency, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise GraphError(f"adjacency matrix must be square, got shape {matrix.shape}")
        if matrix.diagonal().any():
            raise GraphError("adjacency matrix has a self loop")
        if not np.array_equal(matrix, matrix.T):
            raise GraphError("adjacency matrix is not symmetric")
        us, vs = np.nonzero(np.triu(matrix, k=1))
        edges = tuple(zip(us.tolist(), vs.tolist()))
        graph = cls.__new__(cls)
        graph._init_from_matrix(matrix.shape[0], matrix, edges, name)
        return graph

    def _init_from_matrix(self, n, adjacency, edges, name):
        adjacency.setflags(write=False)
        self._n = n
        self._adjacency = adjacency
        self._edges = edges
        self._name = name
        self._neighbors = tuple(tuple(np.flatnonzero(row).tolist()) for row in adjacency)
        self._masks = tuple(sum(1 << u for u in nbrs) for nbrs in self._neighbors)
        self._nx_view = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """Edges as (u, v) pairs with u < v, sorted lexicographically."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def name(self) -> Optional[str]:
        return self._name

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adjacency

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._masks[u] >> v) & 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._neighbors[v]

    def neighbor_mask(self, v: int) -> int:
        """Neighbourhood of v as an int bitmask (bit u set iff u ~ v)."""
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def degrees(self) -> np.ndarray:
        return self._adjacency.sum(axis=1)

    def is_regular(self) -> bool:
        degrees = self.degrees()
        return bool(degrees.size == 0 or (degrees == degrees[0]).all())

    def renamed(self, name: str) -> "Graph":
        return Graph.from_adjacency(self._adjacency, name)

    @property
    def nx_view(self) -> nx.Graph:
        """
        A frozen networkx copy of the graph, built on first use. Each adjacency list is in
        ascending vertex order.
        """
        if self._nx_view is None:
            graph = nx.Graph()
            graph.add_nodes_from(range(self._n))
            graph.add_edges_from(self._edges)
            self._nx_view = nx.freeze(graph)
        return self._nx_view

    def to_networkx(self) -> nx.Graph:
        """A mutable networkx copy of the graph."""
        return nx.Graph(self.nx_view)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        label = f"{self._name}, " if self._name else ""
        return f"Graph({label}n={self._n}, edges={len(self._edges)})"

    def __str__(self):
        edges = " ".join(f"{u}-{v}" for u, v in self._edges)
        return f"{self._name or 'G'}[{self._n}]: {edges}"


# ---------------------------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    """The clique K_n."""
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)), name=f"K{n}")


def empty_graph(n: int) -> Graph:
    """n isolated vertices."""
    return Graph(n, (), name=f"E{n}")


def path_graph(n: int) -> Graph:
    """The path P_n on n >= 1 vertices; P_1 is a single vertex."""
    if n < 1:
        raise GraphError(f"a path needs at least one vertex, got {n}")
    return Graph(n, ((v, v + 1) for v in range(n - 1)), name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    """The cycle C_n on n >= 3 vertices."""
    if n < 3:
        raise GraphError(f"a cycle needs at least three vertices, got {n}")
    return Graph(n, ((v, (v + 1) % n) for v in range(n)), name=f"C{n}")


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """
    The complete multipartite graph with parts of the given sizes, numbered consecutively.

    Args:
        sizes (sequence of int): Part sizes, each >= 1.

    Returns:
        Graph: For sizes (2, 3) the parts are {0, 1} and {2, 3, 4}.
    """
    if any(size < 1 for size in sizes):
        raise GraphError(f"part sizes must be >= 1, got {list(sizes)}")
    part_of = [index for index, size in enumerate(sizes) for _ in range(size)]
    n = len(part_of)
    edges = ((u, v) for u in range(n) for v in range(u + 1, n) if part_of[u] != part_of[v])
    return Graph(n, edges, name="K_{" + ",".join(str(size) for size in sizes) + "}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """
    The disjoint union of g and h; vertices of h are shifted by g.n.
    """
    shifted = ((u + g.n, v + g.n) for u, v in h.edges)
    name = None
    if g.name and h.name:
        name = f"{g.name}+{h.name}"
    return Graph(g.n + h.n, list(g.edges) + list(shifted), name=name)


def complement(g: Graph) -> Graph:
    """
    The complement of g: same vertices, u ~ v iff u and v are distinct and not adjacent in g.
    """
    matrix = ~g.adjacency
    np.fill_diagonal(matrix, False)
    name = f"co-{g.name}" if g.name else None
    return Graph.from_adjacency(matrix, name)


# ---------------------------------------------------------------------------------------------
# Vertex-set predicates
# ---------------------------------------------------------------------------------------------

def _as_index_array(g: Graph, vertices: Iterable[int]) -> np.ndarray:
    indexes = np.array(sorted(set(int(v) for v in vertices)), dtype=int)
    if indexes.size and (indexes[0] < 0 or indexes[-1] >= g.n):
        raise GraphError(f"vertex set {indexes.tolist()} is not contained in 0..{g.n - 1}")
    return indexes


def is_module(g: Graph, vertices: Iterable[int]) -> bool:
    """
    Check whether every vertex outside the set sees all of it or none of it.

    Empty and singleton sets are trivial modules and always pass.
    """
    inside = _as_index_array(g, vertices)
    if inside.size <= 1:
        return True
    outside = np.setdiff1d(np.arange(g.n), inside)
    seen = g.adjacency[np.ix_(outside, inside)].sum(axis=1)
    return bool(np.all((seen == 0) | (seen == inside.size)))


def is_stable(g: Graph, vertices: Iterable[int]) -> bool:
    """
    Check whether no edge has both endpoints in the set.
    """
    inside = _as_index_array(g, vertices)
    return not g.adjacency[np.ix_(inside, inside)].any()


# ---------------------------------------------------------------------------------------------
# Distances
# ---------------------------------------------------------------------------------------------

def distances_from(g: Graph, source: int) -> List[float]:
    """
    Breadth-first distances from source to every vertex; UNREACHABLE (math.inf) when there
    is no path.
    """
    if not 0 <= source < g.n:
        raise GraphError(f"vertex {source} is not in 0..{g.n - 1}")
    lengths = nx.single_source_shortest_path_length(g.nx_view, source)
    return [lengths.get(v, UNREACHABLE) for v in range(g.n)]


def distance(g: Graph, u: int, v: int) -> float:
    """
    Number of edges on a shortest uv-path, or UNREACHABLE.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} is not in 0..{g.n - 1}")
    return distances_from(g, u)[v]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return nx.is_connected(g.nx_view)


def bfs_order(g: Graph) -> List[int]:
    """
    Vertices in breadth-first order from vertex 0, restarting at the smallest unvisited
    vertex for each further component.
    """
    order = []
    for component in sorted(nx.connected_components(g.nx_view), key=min):
        root = min(component)
        order.append(root)
        order.extend(v for _, v in nx.bfs_edges(g.nx_view, root))
    return order


# ---------------------------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------------------------

def complete_multipartite_parts(g: Graph) -> Optional[List[List[int]]]:
    """
    Recognize a complete multipartite graph and return its parts.

    Vertices are grouped by their closed non-neighbourhood (the non-neighbours together with
    the vertex itself). The graph is complete multipartite exactly when every group equals
    the closed non-neighbourhood of its members: groups are then stable and every pair of
    vertices in different groups is adjacent.

    Returns:
        Optional[List[List[int]]]: The parts, each sorted, ordered by smallest vertex; None if
        g is not complete multipartite.
    """
    groups: Dict[FrozenSet[int], List[int]] = {}
    for v in range(g.n):
        key = frozenset(np.flatnonzero(~g.adjacency[v]).tolist())
        groups.setdefault(key, []).append(v)
    for key, members in groups.items():
        if key != frozenset(members):
            return None
    return sorted(groups.values())


def complete_multipartite_signature(g: Graph) -> Optional[List[int]]:
    """
    The part sizes of a complete multipartite graph in ascending order, or None if g is not
    complete multipartite.
    """
    parts = complete_multipartite_parts(g)
    if parts is None:
        return None
    return sorted(len(part) for part in parts)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """
    The subgraph induced by the given vertices, renumbered 0..k-1 in ascending order.
    """
    inside = _as_index_array(g, vertices)
    return Graph.from_adjacency(g.adjacency[np.ix_(inside, inside)])


def twin_pairs(g: Graph) -> List[Tuple[int, int]]:
    """
    All pairs u < v whose transposition is an automorphism of g, i.e. u and v have the same
    neighbours apart from each other (false twins or true twins).
    """
    pairs = []
    for v in range(g.n):
        mask_v = g.neighbor_mask(v)
        for u in range(v):
            if (g.neighbor_mask(u) & ~(1 << v)) == (mask_v & ~(1 << u)):
                pairs.append((u, v))
    return pairs


def twin_classes(g: Graph) -> List[List[int]]:
    """
    Group vertices into classes of mutual twins, each class sorted, classes ordered by their
    smallest vertex. Being twins is transitive, so the pairs close into classes.
    """
    classes = UnionFind(range(g.n))
    for u, v in twin_pairs(g):
        classes.union(u, v)
    return sorted(sorted(c) for c in classes.to_sets())


def quotient_by_partition(g: Graph, blocks: Sequence[Iterable[int]]) -> Graph:
    """
    Contract each block to a single vertex; block i and block j become adjacent when some
    edge of g joins them.
    """
    block_of = [-1] * g.n
    for index, block in enumerate(blocks):
        for v in block:
            if not 0 <= v < g.n or block_of[v] != -1:
                raise GraphError("blocks must be disjoint subsets of the vertex set")
            block_of[v] = index
    if -1 in block_of:
        raise GraphError("blocks do not cover the vertex set")
    quotient_edges = {tuple(sorted((block_of[u], block_of[v]))) for u, v in g.edges
                      if block_of[u] != block_of[v]}
    return Graph(len(blocks), sorted(quotient_edges))
