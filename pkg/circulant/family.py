"""
Families of graphs of a common order whose distinguishing numbers are a prescribed sequence
d_1 < d_2 < ... < d_r.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
from circulant.distinguishing import cmp_distinguishing_formula
from circulant.errors import InconsistencyError, SpecError, TargetsError
from circulant.graph import Graph, complete_graph, disjoint_union, path_graph
from circulant.spec import CmpSpec

logger = logging.getLogger(__name__)


def validate_targets(targets: Sequence[int]) -> Tuple[int, ...]:
    """
    Check that the targets are at least two integers >= 2 in strictly increasing order.

    Returns:
        Tuple[int, ...]: The targets as a tuple.
    """
    try:
        values = tuple(int(d) for d in targets)
    except (TypeError, ValueError) as e:
        raise TargetsError(f"targets must be integers, got {targets!r}") from e
    if len(values) < 2:
        raise TargetsError(f"need at least two targets, got {len(values)}")
    if min(values) < 2:
        raise TargetsError(f"every target must be >= 2, got {list(values)}")
    if any(a >= b for a, b in zip(values, values[1:])):
        raise TargetsError(f"targets must be strictly increasing, got {list(values)}")
    return values


def in_plus_one_regime(m: int, p: int) -> bool:
    """
    Whether D(C(m,p)) = m + 1, i.e. m >= 2 with p >= 2 and p != 4, or m = 1 with p >= 6.
    """
    if m == 1:
        return p >= 6
    return m >= 2 and p >= 2 and p != 4


@dataclass(frozen=True)
class FamilyPlan:
    """
    Connected circulant graphs C(m_i, p_i) of common order n with D(C(m_i, p_i)) = d_i.
    """
    targets: Tuple[int, ...]
    members: Tuple[CmpSpec, ...]
    common_order: int
    scaling_k: Optional[int] = None
    notes: Tuple[str, ...] = ()

    def validate(self):
        """
        Re-check every member against the closed form.

        Raises:
            InconsistencyError: A member has the wrong order or distinguishing number.
        """
        if len(self.members) != len(self.targets):
            raise InconsistencyError(f"{len(self.members)} members for {len(self.targets)} "
                                     f"targets")
        for spec, d in zip(self.members, self.targets):
            if spec.n != self.common_order:
                raise InconsistencyError(f"{spec} has order {spec.n}, plan order is "
                                         f"{self.common_order}")
            value = cmp_distinguishing_formula(spec)
            if value != d:
                raise InconsistencyError(f"D({spec}) = {value}, target is {d}")
        return self

    def __str__(self):
        return f"n={self.common_order}: " + ", ".join(
            f"{spec} (D={d})" for spec, d in zip(self.members, self.targets))


@dataclass(frozen=True)
class DisconnectedPlan:
    """
    Graphs of common order n = d_r: K_{d_i} ⊎ P_{n - d_i} for i < r, and K_{d_r}.
    """
    targets: Tuple[int, ...]
    members: Tuple[Graph, ...]
    common_order: int

    def __str__(self):
        return f"n={self.common_order}: " + ", ".join(
            f"{g.name} (D={d})" for g, d in zip(self.members, self.targets))


def _notes(members: Sequence[CmpSpec], scaling_k: Optional[int]) -> Tuple[str, ...]:
    notes = []
    if scaling_k is not None and scaling_k > 1:
        notes.append(f"base order scaled by k={scaling_k} to keep every member in the "
                     f"D = m + 1 regime")
    for spec in members:
        if spec.m == 1:
            notes.append(f"{spec} is the cycle C_{spec.p}; D = 2 needs p >= 6")
    return tuple(notes)


def build_connected_family(targets: Sequence[int]) -> FamilyPlan:
    """
    Build the family C(d_i - 1, k * n0 / (d_i - 1)) with n0 the product of all d_i - 1.

    The factor k is the smallest one that puts every member in the D = m + 1 regime: a
    period of 4, or a cycle of length below 6, would change D.

    Args:
        targets (sequence of int): Strictly increasing, each >= 2, at least two of them.

    Returns:
        FamilyPlan: The validated plan.
    """
    values = validate_targets(targets)
    ms = [d - 1 for d in values]
    n0 = math.prod(ms)
    base_periods = [n0 // m for m in ms]
    k = 1
    # k = 3 always works: 3 * base period is >= 3, never 4, and >= 6 for the m = 1 member
    # since the other members have m >= 2.
    while not all(in_plus_one_regime(m, k * p) for m, p in zip(ms, base_periods)):
        k += 1
    members = tuple(CmpSpec(m, k * p) for m, p in zip(ms, base_periods))
    logger.info("targets %s: n0=%d, scaling k=%d, n=%d", list(values), n0, k, k * n0)
    plan = FamilyPlan(values, members, k * n0, k, _notes(members, k))
    return plan.validate()


def minimal_common_order(targets: Sequence[int]) -> FamilyPlan:
    """
    The smallest order n for which every C(d_i - 1, n / (d_i - 1)) exists and has
    distinguishing number d_i, found by ascending search over the multiples of
    lcm(d_i - 1).
    """
    values = validate_targets(targets)
    ms = [d - 1 for d in values]
    step = math.lcm(*ms)
    n0 = math.prod(ms)
    upper = build_connected_family(values).common_order
    for n in range(step, upper + 1, step):
        members = _members_of_order(ms, n)
        if members is not None and all(cmp_distinguishing_formula(spec) == d
                                       for spec, d in zip(members, values)):
            scaling_k = n // n0 if n % n0 == 0 else None
            logger.info("targets %s: minimal common order %d", list(values), n)
            return FamilyPlan(values, members, n, scaling_k, _notes(members, scaling_k)).validate()
    raise InconsistencyError(f"no common order up to {upper} for targets {list(values)}")


def _members_of_order(ms: Sequence[int], n: int) -> Optional[Tuple[CmpSpec, ...]]:
    members: List[CmpSpec] = []
    for m in ms:
        try:
            spec = CmpSpec(m, n // m)
            cmp_distinguishing_formula(spec)
        except SpecError:
            return None
        members.append(spec)
    return tuple(members)


def build_disconnected_family(targets: Sequence[int]) -> DisconnectedPlan:
    """
    Build graphs of order n = d_r with distinguishing numbers d_1 < ... < d_r: K_{d_i} ⊎
    P_{n - d_i} has D = d_i because the clique needs d_i labels and a path only 2, and the
    last member is K_{d_r}. For d_1 = 2 and n = 4, K_2 ⊎ P_2 needs 3 labels, so P_4 is used.
    """
    values = validate_targets(targets)
    n = values[-1]
    members = []
    for d in values[:-1]:
        if d == 2 and n == 4:
            members.append(path_graph(4))
        else:
            members.append(disjoint_union(complete_graph(d), path_graph(n - d)))
    members.append(complete_graph(n))
    return DisconnectedPlan(values, tuple(members), n)
