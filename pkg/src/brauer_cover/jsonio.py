"""JSON schemas for every core type.

Group elements always serialize as canonical words, so the documents stay
small and diffable.  ``*_to_doc`` functions return plain dicts; ``dumps``
fixes key order so golden files are byte-stable.
"""

from __future__ import annotations

import json

from .brauer import Arrow, BoundQuiver, BrauerGraph, BrauerPermutation
from .errors import MalformedInputError
from .groups import ABELIAN, INF, GroupSpec
from .smash import BrauerCovering, CoveringQuiver
from .weights import GWeight


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _require(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInputError(f"missing key {key!r}", witness=key)
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise MalformedInputError(f"key {key!r} has the wrong type", witness=key)
    return value


# --------------------------------------------------------------------------- #
# groups


def group_to_doc(spec: GroupSpec) -> dict:
    if spec.kind == ABELIAN:
        return {
            "abelian": [
                {"gen": name, "order": "inf" if order is INF else order}
                for name, order in spec.factors
            ]
        }
    return {
        "perm_group": {
            "degree": spec.degree,
            "generators": {name: list(perm) for name, perm in spec.generators},
        }
    }


def group_from_doc(doc) -> GroupSpec:
    if not isinstance(doc, dict):
        raise MalformedInputError("group document must be an object")
    try:
        if "abelian" in doc:
            factors = []
            for item in doc["abelian"]:
                order = item["order"]
                factors.append((item["gen"], INF if order == "inf" else order))
            return GroupSpec.abelian(factors)
        if "perm_group" in doc:
            inner = doc["perm_group"]
            return GroupSpec.perm_group(inner["degree"], inner["generators"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad group document: {exc}") from None
    raise MalformedInputError("group document needs an 'abelian' or 'perm_group' key")


# --------------------------------------------------------------------------- #
# Brauer permutations


def brauer_to_doc(bp: BrauerPermutation) -> dict:
    return {
        "half_edges": list(bp.half_edges),
        "sigma": dict(bp.sigma),
        "tau": dict(bp.tau),
        "multiplicity": dict(bp.multiplicity),
    }


def raw_brauer_parts(doc) -> tuple[dict, dict, dict]:
    sigma = dict(_require(doc, "sigma", dict))
    tau = dict(_require(doc, "tau", dict))
    multiplicity = dict(_require(doc, "multiplicity", dict))
    if "half_edges" in doc:
        declared = set(_require(doc, "half_edges", list))
        if declared != set(sigma):
            raise MalformedInputError("half_edges does not match the domain of sigma")
    return sigma, tau, multiplicity


def brauer_from_doc(doc) -> BrauerPermutation:
    sigma, tau, multiplicity = raw_brauer_parts(doc)
    return BrauerPermutation(sigma, tau, multiplicity)


# --------------------------------------------------------------------------- #
# weights


def weight_to_doc(weight: GWeight) -> dict:
    return {"group": group_to_doc(weight.group), "values": weight.restrict_words()}


def weight_from_doc(doc, domain=None) -> GWeight:
    group = group_from_doc(_require(doc, "group"))
    words = _require(doc, "values", dict) if "values" in doc else {}
    if domain is None:
        values = {name: group.parse_word(word) for name, word in words.items()}
        return GWeight(group, values)
    return GWeight.from_words(group, domain, words)


# --------------------------------------------------------------------------- #
# quivers


def quiver_to_doc(quiver: BoundQuiver) -> dict:
    return {
        "vertices": list(quiver.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in quiver.arrows],
        # a path lists arrow names in application order (first applied first)
        "relations": [
            [[coeff, list(path)] for coeff, path in relation] for relation in quiver.relations
        ],
    }


def quiver_from_doc(doc) -> BoundQuiver:
    vertices = tuple(_require(doc, "vertices", list))
    arrows = tuple(
        Arrow(item["name"], item["source"], item["target"])
        for item in _require(doc, "arrows", list)
    )
    relations = []
    for relation in doc.get("relations", ()):
        relations.append(tuple((int(coeff), tuple(path)) for coeff, path in relation))
    try:
        return BoundQuiver(vertices, arrows, tuple(relations))
    except (ValueError, KeyError, TypeError) as exc:
        raise MalformedInputError(f"bad quiver document: {exc}") from None


# --------------------------------------------------------------------------- #
# coverings and graphs


def covering_to_doc(cov: BrauerCovering) -> dict:
    return {
        "group": group_to_doc(cov.group),
        "half_edges": list(cov.half_edges),
        "sigma": dict(cov.sigma),
        "tau": dict(cov.tau),
        "multiplicity": dict(cov.multiplicity),
        "frontier": sorted(cov.frontier),
        "complete": cov.complete,
    }


def covering_quiver_to_doc(cov: CoveringQuiver) -> dict:
    doc = quiver_to_doc(cov.quiver)
    doc["core_vertices"] = list(cov.core_vertices)
    doc["frontier_vertices"] = sorted(cov.frontier_vertices)
    doc["complete"] = cov.complete
    return doc


def graph_to_doc(graph: BrauerGraph) -> dict:
    return {
        "vertices": [
            {"key": min(cycle), "cycle": list(cycle), "multiplicity": graph.multiplicity.get(min(cycle), 1)}
            for cycle in graph.vertices
        ],
        "edges": [{"key": e, "half_edges": [e, f], "ends": list(graph.incidence[e])} for e, f in graph.edges],
    }
