import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence
from circulant.automorphism import enumerate_automorphisms, is_automorphism
from circulant.distinguishing import (break_m_labeling, cmp_distinguishing_formula,
                                      exact_distinguishing_number, explicit_labeling,
                                      is_distinguishing, multipartite_distinguishing_formula,
                                      multipartite_labeling, multipartite_shape,
                                      verify_cmp_bounds)
from circulant.errors import InconsistencyError, SpecError
from circulant.family import (build_connected_family, build_disconnected_family,
                              minimal_common_order)
from circulant.graph import Graph
from circulant.labeling import Labeling
from circulant.serialization import (aut_group_to_dict, disconnected_plan_to_dict,
                                     family_plan_to_dict, graph_to_dict, labeling_to_dict,
                                     permutation_to_dict, to_dot)
from circulant.spec import CmpSpec, build_cmp, module_partition
from circulant.stats import SearchStats

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_INCONSISTENT = 3

# Largest order at which commands run the exact oracle on their own initiative.
ORACLE_ORDER_LIMIT = 10


@dataclass
class CommandResult:
    """
    What a command hands back to the front end: the exit code, the JSON document and,
    for graph-producing commands, DOT text.
    """
    exit_code: int
    document: Dict
    dot: Optional[str] = None
    title: str = ""


def report_blocks(result: CommandResult) -> Iterator[str]:
    """
    Yield a human-readable report of a command result, one block per section.
    """
    scalars = {k: v for k, v in result.document.items() if not isinstance(v, (dict, list))}
    nested = {k: v for k, v in result.document.items() if isinstance(v, (dict, list))}
    width = max((len(k) for k in result.document), default=0)
    yield (f"\n==============================\n{result.title.upper()}\n"
           f"==============================\n"
           + "".join(f"• {k:<{width}} : {v}\n" for k, v in scalars.items()))
    for key, value in nested.items():
        if isinstance(value, dict):
            body = "".join(f"• {k} : {v}\n" for k, v in value.items())
        else:
            body = "".join(f"• {item}\n" for item in value)
        yield f"\n------------------------------\n{key}\n------------------------------\n{body}"


def resolve_threads(threads: Optional[int]) -> int:
    return threads if threads and threads > 0 else (os.cpu_count() or 1)


# ---------------------------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------------------------

def run_construct(graph: Graph, spec: Optional[CmpSpec]) -> CommandResult:
    colors = None
    if spec is not None and spec.m >= 2 and spec.p >= 2:
        partition = module_partition(spec)
        colors = [partition.block_of(v) for v in range(graph.n)]
    document = graph_to_dict(graph)
    return CommandResult(EXIT_OK, document, to_dot(graph, colors), title=f"graph {graph.name}")


def run_dnumber(graph: Graph, spec: Optional[CmpSpec], exact: bool, formula: bool,
                r_max: int, cap: Optional[int]) -> CommandResult:
    """
    Compute D(graph) by the exact oracle, by a closed form, or by both; with both, the two
    values must agree.
    """
    document = {"graph": graph.name, "n": graph.n}
    formula_value = None
    if formula:
        if spec is not None:
            formula_value = cmp_distinguishing_formula(spec)
            document["formula"] = "circulant"
        else:
            shape = multipartite_shape(graph)
            if shape is None:
                raise SpecError(f"no closed form for {graph!r}; use --exact")
            formula_value = multipartite_distinguishing_formula(shape)
            document["formula"] = f"multipartite {shape}"
    exact_value = None
    if exact:
        stats = SearchStats()
        stats.start()
        exact_value, witness = exact_distinguishing_number(graph, r_max=r_max, cap=cap,
                                                           stats=stats)
        stats.stop()
        document["witness"] = labeling_to_dict(witness)
        document["stats"] = stats.as_dict()
    if exact and formula:
        document["method"] = "exact+formula"
        if exact_value != formula_value:
            raise InconsistencyError(f"D({graph.name}): oracle gives {exact_value}, closed "
                                     f"form gives {formula_value}")
    else:
        document["method"] = "exact" if exact else "formula"
    document["d"] = exact_value if exact else formula_value
    return CommandResult(EXIT_OK, document, title=f"distinguishing number of {graph.name}")


def run_label(spec: CmpSpec, multipartite: bool) -> CommandResult:
    """
    Produce the explicit labeling of C(m,p) (or the multipartite one) and verify it.
    """
    graph = build_cmp(spec)
    labeling = multipartite_labeling(graph) if multipartite else explicit_labeling(spec)
    verification = is_distinguishing(graph, labeling)
    if not verification:
        raise InconsistencyError(f"labeling {labeling} of {spec} is preserved by "
                                 f"{verification.witness}")
    document = {"spec": str(spec), "d": labeling.label_count(),
                "labeling": labeling_to_dict(labeling), "verified": True}
    return CommandResult(EXIT_OK, document, title=f"labeling of {spec}")


def run_verify(graph: Graph, labels: Sequence[int]) -> CommandResult:
    verification = is_distinguishing(graph, labels)
    document = {"graph": graph.name, "distinguishing": verification.distinguishing}
    if not verification:
        document["witness"] = permutation_to_dict(verification.witness)
        document["cycles"] = str(verification.witness)
    return CommandResult(EXIT_OK if verification else EXIT_FALSE, document,
                         title=f"verification on {graph.name}")


def _check_breaker(spec: CmpSpec, graph: Graph, labeling: Labeling) -> bool:
    sigma = break_m_labeling(spec, labeling)
    return (not sigma.is_identity()) and is_automorphism(graph, sigma) \
        and labeling.is_preserved_by(sigma)


def _break_chunk(m: int, p: int, chunk: List[List[int]]) -> int:
    spec = CmpSpec(m, p)
    graph = build_cmp(spec)
    return sum(_check_breaker(spec, graph, Labeling(labels, m)) for labels in chunk)


def run_break(spec: CmpSpec, labels: Optional[Sequence[int]], samples: int, seed: int,
              threads: Optional[int]) -> CommandResult:
    """
    Break one given labeling, or sample random labelings with at most m labels and break
    each of them.
    """
    graph = build_cmp(spec)
    if labels is not None:
        labeling = Labeling(labels)
        sigma = break_m_labeling(spec, labeling)
        if sigma.is_identity() or not is_automorphism(graph, sigma) \
                or not labeling.is_preserved_by(sigma):
            raise InconsistencyError(f"{sigma} does not break {labeling} on {spec}")
        document = {"spec": str(spec), "witness": permutation_to_dict(sigma),
                    "cycles": str(sigma)}
        return CommandResult(EXIT_OK, document, title=f"breaking a labeling of {spec}")

    rng = random.Random(seed)
    drawn = [list(Labeling.create_random_labeling(spec.n, spec.m, rng)) for _ in range(samples)]
    workers = resolve_threads(threads)
    if workers == 1 or samples < 2:
        broken = _break_chunk(spec.m, spec.p, drawn)
    else:
        size = -(-samples // workers)
        chunks = [drawn[i:i + size] for i in range(0, samples, size)]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_break_chunk, spec.m, spec.p, chunk) for chunk in chunks]
            broken = sum(f.result() for f in futures)
    document = {"spec": str(spec), "samples": samples, "seed": seed, "broken": broken,
                "failures": samples - broken}
    if broken != samples:
        raise InconsistencyError(f"{samples - broken} of {samples} random labelings of {spec} "
                                 f"were not broken")
    return CommandResult(EXIT_OK, document, title=f"breaking random labelings of {spec}")


def run_autgroup(graph: Graph, elements: bool, cap: Optional[int]) -> CommandResult:
    stats = SearchStats()
    group = enumerate_automorphisms(graph, cap=cap, stats=stats)
    document = {"graph": graph.name, **aut_group_to_dict(group, elements)}
    if elements:
        if not group.is_group():
            raise InconsistencyError(f"automorphisms of {graph.name} are not closed under "
                                     f"composition")
        document["is_group"] = True
    document["stats"] = stats.as_dict()
    return CommandResult(EXIT_OK, document, title=f"automorphism group of {graph.name}")


def _certify_member(m: int, p: int, samples: int, seed: int) -> Dict:
    spec = CmpSpec(m, p)
    certificate = {"m": m, "p": p}
    if spec.n <= ORACLE_ORDER_LIMIT:
        certificate["oracle_d"] = exact_distinguishing_number(build_cmp(spec))[0]
    if m >= 2 and p != 4:
        bounds = verify_cmp_bounds(spec, samples=samples, seed=seed)
        certificate.update(upper_verified=bounds.upper_verified, labels_used=bounds.labels_used,
                           samples=bounds.samples, samples_broken=bounds.samples_broken,
                           certified=bool(bounds))
    return certificate


def run_family(targets: Sequence[int], minimal: bool, disconnected: bool, samples: int,
               seed: int, threads: Optional[int]) -> CommandResult:
    """
    Build a family for the targets and certify every member: the exact oracle for small
    members, explicit labeling plus breaking of random labelings for the rest.
    """
    if disconnected:
        plan = build_disconnected_family(targets)
        document = disconnected_plan_to_dict(plan)
        if plan.common_order <= ORACLE_ORDER_LIMIT:
            oracle = [exact_distinguishing_number(g)[0] for g in plan.members]
            document["oracle_d"] = oracle
            if oracle != list(plan.targets):
                raise InconsistencyError(f"oracle gives {oracle} for targets "
                                         f"{list(plan.targets)}")
        return CommandResult(EXIT_OK, document, title="disconnected family")

    plan = minimal_common_order(targets) if minimal else build_connected_family(targets)
    document = family_plan_to_dict(plan)
    workers = min(resolve_threads(threads), len(plan.members))
    jobs = [(spec.m, spec.p, samples, seed) for spec in plan.members]
    if workers == 1:
        certificates = [_certify_member(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_certify_member, *job) for job in jobs]
            certificates = [f.result() for f in futures]
    for certificate, d in zip(certificates, plan.targets):
        if certificate.get("oracle_d", d) != d or certificate.get("certified", True) is False:
            raise InconsistencyError(f"member C({certificate['m']},{certificate['p']}) failed "
                                     f"certification: {certificate}")
    document["certificates"] = certificates
    return CommandResult(EXIT_OK, document, title="connected family")


