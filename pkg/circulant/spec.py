from dataclasses import dataclass
from typing import Iterable, Tuple
import numpy as np
from circulant.errors import GeneratorError, SpecError
from circulant.graph import Graph, complete_graph


def symmetrize(n: int, generators: Iterable[int]) -> Tuple[int, ...]:
    """
    Close a generator set under negation modulo n and drop 0.

    This is a convenience for building valid specs; CirculantSpec itself never repairs its
    input.
    """
    residues = {g % n for g in generators}
    residues |= {(n - g) % n for g in residues}
    residues.discard(0)
    return tuple(sorted(residues))


@dataclass(frozen=True)
class CirculantSpec:
    """
    A circulant graph of order n: i ~ j iff (j - i) mod n is one of the generators.
    """
    n: int
    generators: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise SpecError(f"circulant order must be >= 3, got {self.n}")
        residues = tuple(sorted(set(int(g) for g in self.generators)))
        object.__setattr__(self, "generators", residues)
        if 0 in residues:
            raise GeneratorError("generator set contains 0 (would create self loops)")
        outside = [g for g in residues if not 0 < g < self.n]
        if outside:
            raise GeneratorError(f"generators {outside} are not residues in 1..{self.n - 1}")
        missing = [g for g in residues if (self.n - g) % self.n not in residues]
        if missing:
            negations = [(self.n - g) % self.n for g in missing]
            raise GeneratorError(f"generator set is not symmetric: {missing} present but "
                                 f"{negations} missing modulo {self.n}")

    def __str__(self):
        return f"Circ({self.n}; {','.join(str(g) for g in self.generators)})"


def circulant_generators(m: int, p: int) -> Tuple[int, ...]:
    """
    The generator set {p-1+rp, p+1+rp : 0 <= r < m} reduced modulo n = mp.
    """
    n = m * p
    return tuple(sorted({(p - 1 + r * p) % n for r in range(m)} |
                        {(p + 1 + r * p) % n for r in range(m)}))


@dataclass(frozen=True)
class CmpSpec:
    """
    The circulant graph C(m,p) of order n = m*p: m is the multiplicity (module size) and p
    the period (number of modules). C(m,1) denotes the clique K_m.
    """
    m: int
    p: int

    def __post_init__(self):
        if self.m < 1 or self.p < 1:
            raise SpecError(f"C(m,p) needs m >= 1 and p >= 1, got C({self.m},{self.p})")
        if self.m * self.p < 3:
            raise SpecError(f"C(m,p) needs m*p >= 3, got C({self.m},{self.p}) of order "
                            f"{self.m * self.p}")

    @property
    def n(self) -> int:
        return self.m * self.p

    @property
    def generators(self) -> Tuple[int, ...]:
        if self.p == 1:
            raise SpecError("C(m,1) is the clique K_m and has no generator set")
        return circulant_generators(self.m, self.p)

    def to_circulant(self) -> CirculantSpec:
        return CirculantSpec(self.n, self.generators)

    def __str__(self):
        return f"C({self.m},{self.p})"


@dataclass(frozen=True)
class ModulePartition:
    """
    The partition of C(m,p) into the p stable modules M_i = {i + rp : 0 <= r < m}.
    """
    spec: CmpSpec
    blocks: Tuple[Tuple[int, ...], ...]

    def block_of(self, v: int) -> int:
        return v % self.spec.p

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __str__(self):
        return " ".join("{" + ",".join(str(v) for v in block) + "}" for block in self.blocks)


def build_circulant(spec: CirculantSpec, name: str = None) -> Graph:
    """
    Build the circulant graph of a spec.

    Args:
        spec (CirculantSpec): A validated circulant spec.
        name (str, optional): Graph name; defaults to the spec's string form.

    Returns:
        Graph: Vertex i is adjacent to j iff (j - i) mod n is a generator.
    """
    index = np.arange(spec.n)
    difference = (index[None, :] - index[:, None]) % spec.n
    adjacency = np.isin(difference, spec.generators)
    return Graph.from_adjacency(adjacency, name or str(spec))


def build_cmp(spec: CmpSpec) -> Graph:
    """
    Build C(m,p). For p = 1 this is K_m; otherwise the circulant graph of the derived
    generator set.
    """
    if spec.p == 1:
        return complete_graph(spec.m).renamed(str(spec))
    return build_circulant(spec.to_circulant(), name=str(spec))


def module_partition(spec: CmpSpec) -> ModulePartition:
    """
    The p stable modules of C(m,p). Needs m >= 2 and p >= 2, otherwise the partition is
    made of singletons or of the whole vertex set.
    """
    if spec.m < 2 or spec.p < 2:
        raise SpecError(f"module partition needs m >= 2 and p >= 2, got {spec}")
    blocks = tuple(tuple(i + r * spec.p for r in range(spec.m)) for i in range(spec.p))
    return ModulePartition(spec, blocks)


def band(spec: CmpSpec, j: int) -> Tuple[int, ...]:
    """
    The j-th period P_j = {(j-1)p, ..., jp-1} of C(m,p), for 1 <= j <= m.
    """
    if not 1 <= j <= spec.m:
        raise SpecError(f"band index must be in 1..{spec.m}, got {j}")
    return tuple(range((j - 1) * spec.p, j * spec.p))
