"""
JSON documents and DOT export.

Every writer emits its fields in a fixed order with sorted edge lists, so that
dumps(to_dict(from_dict(loads(text)))) == text for any text produced here.

Command reports add fields of their own on top of these documents ("certificates",
"oracle_d", "stats", ...). Readers ignore them: they describe a run, not the object.
"""

import json
from typing import Dict, Optional, Sequence
from circulant.automorphism import AutGroup
from circulant.errors import GraphError, SpecError
from circulant.family import DisconnectedPlan, FamilyPlan
from circulant.graph import Graph
from circulant.labeling import Labeling
from circulant.permutation import Permutation
from circulant.spec import CirculantSpec, CmpSpec, build_circulant

# Module colours for DOT output, cycled when there are more modules than colours.
PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta", "gold",
           "gray")


def dumps(doc: Dict) -> str:
    return json.dumps(doc, indent=4)


def graph_to_dict(g: Graph) -> Dict:
    return {"n": g.n, "edges": [list(edge) for edge in g.edges]}


def circulant_to_dict(spec: CirculantSpec) -> Dict:
    return {"circulant": {"n": spec.n, "generators": list(spec.generators)}}


def graph_from_dict(doc: Dict) -> Graph:
    """
    Read a graph document: either an explicit edge list or a circulant spec.
    """
    if not isinstance(doc, dict):
        raise GraphError(f"graph document must be a JSON object, got {type(doc).__name__}")
    try:
        if "circulant" in doc:
            body = doc["circulant"]
            return build_circulant(CirculantSpec(int(body["n"]), tuple(body["generators"])))
        return Graph(int(doc["n"]), [tuple(edge) for edge in doc["edges"]])
    except KeyError as e:
        raise GraphError(f"graph document lacks field {e}") from e
    except TypeError as e:
        raise GraphError(f"malformed graph document: {e}") from e


def load_graph(path: str) -> Graph:
    with open(path) as f:
        return graph_from_dict(json.load(f))


def permutation_to_dict(sigma: Permutation) -> Dict:
    return {"images": list(sigma.images)}


def permutation_from_dict(doc: Dict) -> Permutation:
    return Permutation(doc["images"])


def labeling_to_dict(c: Labeling) -> Dict:
    return {"r": c.r, "labels": list(c.labels)}


def labeling_from_dict(doc: Dict) -> Labeling:
    return Labeling(doc["labels"], doc["r"])


def aut_group_to_dict(group: AutGroup, elements: bool = False) -> Dict:
    doc = {"order": group.order}
    if elements:
        doc["elements"] = [list(sigma.images) for sigma in group]
    return doc


def aut_group_from_dict(doc: Dict) -> AutGroup:
    """
    Read a group document written with elements=True. An order-only document cannot be
    read back.
    """
    if "elements" not in doc:
        raise SpecError("group document lists no elements; write it with elements=True")
    elements = tuple(Permutation(images) for images in doc["elements"])
    if not elements or len(elements) != int(doc["order"]):
        raise SpecError(f"group document has order {doc['order']} but lists "
                        f"{len(elements)} elements")
    return AutGroup(elements[0].degree, elements)


def family_plan_to_dict(plan: FamilyPlan) -> Dict:
    return {
        "n": plan.common_order,
        "members": [{"m": spec.m, "p": spec.p, "target_d": d}
                    for spec, d in zip(plan.members, plan.targets)],
        "scaling_k": plan.scaling_k,
        "notes": list(plan.notes),
    }


def family_plan_from_dict(doc: Dict) -> FamilyPlan:
    members = tuple(CmpSpec(int(member["m"]), int(member["p"])) for member in doc["members"])
    targets = tuple(int(member["target_d"]) for member in doc["members"])
    return FamilyPlan(targets, members, int(doc["n"]), doc.get("scaling_k"),
                      tuple(doc.get("notes", ())))


def disconnected_plan_to_dict(plan: DisconnectedPlan) -> Dict:
    return {
        "n": plan.common_order,
        "members": [{"name": g.name, "target_d": d, **graph_to_dict(g)}
                    for g, d in zip(plan.members, plan.targets)],
    }


def disconnected_plan_from_dict(doc: Dict) -> DisconnectedPlan:
    members = tuple(Graph(int(member["n"]), [tuple(edge) for edge in member["edges"]],
                          name=member["name"]) for member in doc["members"])
    targets = tuple(int(member["target_d"]) for member in doc["members"])
    return DisconnectedPlan(targets, members, int(doc["n"]))


def to_dot(g: Graph, colors: Optional[Sequence[int]] = None) -> str:
    """
    Undirected DOT text for g; colors[v], if given, selects the PALETTE colour of vertex v.

    Example:
        >>> print(to_dot(Graph(3, [(0, 1)], name="demo")))
        graph "demo" {
            0;
            1;
            2;
            0 -- 1;
        }
    """
    if colors is not None and len(colors) != g.n:
        raise GraphError(f"{len(colors)} colours for {g.n} vertices")
    lines = [f'graph "{g.name or "G"}" {{']
    for v in range(g.n):
        if colors is None:
            lines.append(f"    {v};")
        else:
            color = PALETTE[colors[v] % len(PALETTE)]
            lines.append(f'    {v} [color="{color}", style="filled", fillcolor="{color}"];')
    for u, v in g.edges:
        lines.append(f"    {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
