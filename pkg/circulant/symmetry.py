"""
Named automorphisms of C(m,p): permutations inside the modules, the reflection psi and the
labeling sort delta.
"""

from itertools import combinations
from typing import Sequence
from circulant.errors import DegreeMismatchError, LabelingError, NonRainbowBlockError, SpecError
from circulant.permutation import Permutation
from circulant.spec import CmpSpec, ModulePartition, module_partition


def module_permutation(partition: ModulePartition, per_block: Sequence[Permutation]) -> Permutation:
    """
    Combine one permutation per module into a permutation of the whole vertex set.

    Args:
        partition (ModulePartition): The module partition of C(m,p).
        per_block (sequence of Permutation): per_block[i] permutes the positions 0..m-1 of
            block i, so that the vertex i + rp goes to i + per_block[i](r) p.

    Returns:
        Permutation: Acts as per_block[i] inside M_i; an automorphism of C(m,p) because each
        M_i is a stable module.
    """
    if len(per_block) != len(partition.blocks):
        raise DegreeMismatchError(f"expected {len(partition.blocks)} block permutations, "
                                  f"got {len(per_block)}")
    images = list(range(partition.spec.n))
    for index, (block, sigma) in enumerate(zip(partition.blocks, per_block)):
        if sigma.degree != len(block):
            raise DegreeMismatchError(f"block M_{index} has {len(block)} vertices but its "
                                      f"permutation has degree {sigma.degree}")
        for position, v in enumerate(block):
            images[v] = block[sigma(position)]
    return Permutation(images)


def psi(spec: CmpSpec) -> Permutation:
    """
    The reflection i + rp -> (p-1-i) + rp, which keeps every band P_j and reverses it.
    It is an involution and an automorphism of C(m,p).
    """
    if spec.p < 2:
        raise SpecError(f"psi needs p >= 2, got {spec}")
    p = spec.p
    return Permutation((p - 1 - v % p) + (v // p) * p for v in range(spec.n))


def first_repeated_pair(spec: CmpSpec, labels: Sequence[int]):
    """
    The lexicographically least pair (u, v), u < v, of equally labeled vertices in a common
    module, with its block index; None when every module is rainbow.
    """
    best = None
    for index, block in enumerate(module_partition(spec).blocks):
        for u, v in combinations(block, 2):
            if labels[u] == labels[v] and (best is None or (u, v) < best[1:]):
                best = (index, u, v)
                break
    return best


def delta_from_labeling(spec: CmpSpec, labels: Sequence[int]) -> Permutation:
    """
    The labeling sort: each v in M_i goes to (c(v) - 1) p + i.

    Every module must be rainbow, i.e. carry each of the labels 1..m exactly once. The result
    permutes every module within itself, so it is an automorphism.

    Raises:
        NonRainbowBlockError: Some module repeats a label; the error names the two vertices,
            whose transposition preserves the labeling.
    """
    if len(labels) != spec.n:
        raise LabelingError(f"labeling has length {len(labels)}, {spec} has {spec.n} vertices")
    outside = sorted({c for c in labels if not 1 <= c <= spec.m})
    if outside:
        raise LabelingError(f"labels {outside} are outside 1..{spec.m}")
    repeated = first_repeated_pair(spec, labels)
    if repeated is not None:
        raise NonRainbowBlockError(*repeated)
    p = spec.p
    return Permutation((labels[v] - 1) * p + v % p for v in range(spec.n))
