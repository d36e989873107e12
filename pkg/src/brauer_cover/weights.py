"""Group weights on Brauer permutations and on bound quivers.

A weight assigns a group element to every half edge (equivalently to every
arrow of the bound Brauer quiver, via ``W(a_e) = W(e)``) or to every arrow
of a general quiver.  Path weights multiply with later arrows on the left:
``W(a_n ... a_1) = W(a_n) ... W(a_1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .brauer import BoundQuiver, BrauerPermutation, Path
from .errors import UnknownNameError
from .groups import GroupElement, GroupSpec


@dataclass(frozen=True)
class GWeight:
    """A total map from half-edge/arrow names to elements of ``group``."""

    group: GroupSpec
    values: dict

    @staticmethod
    def total(
        group: GroupSpec,
        domain: Iterable[str],
        values: Optional[Mapping[str, GroupElement]] = None,
    ) -> "GWeight":
        """Fill unspecified names with the identity (the "1 otherwise" of
        every deletion construction)."""
        values = dict(values or {})
        out = {}
        domain = list(domain)
        unknown = sorted(set(values) - set(domain))
        if unknown:
            raise UnknownNameError(f"weight given for unknown names {unknown}", witness=unknown)
        for name in domain:
            out[name] = values.get(name, group.identity())
        return GWeight(group, out)

    @staticmethod
    def from_words(
        group: GroupSpec,
        domain: Iterable[str],
        words: Mapping[str, str],
    ) -> "GWeight":
        values = {name: group.parse_word(word) for name, word in words.items()}
        return GWeight.total(group, domain, values)

    def __getitem__(self, name: str) -> GroupElement:
        try:
            return self.values[name]
        except KeyError:
            raise UnknownNameError(f"no weight for {name!r}", witness=name) from None

    def restrict_words(self) -> dict:
        """Non-identity values as canonical words (the JSON form)."""
        return {
            name: self.group.format_word(value)
            for name, value in sorted(self.values.items())
            if not self.group.is_identity(value)
        }


def path_weight(weight: GWeight, path: Path) -> GroupElement:
    """W(mu) for a path in application order; later arrows multiply on the left."""
    acc = weight.group.identity()
    for name in path:
        acc = weight.group.multiply(weight[name], acc)
    return acc


def cycle_power_weight(bp: BrauerPermutation, weight: GWeight, e: str) -> GroupElement:
    """W(mu_e^{m(<sigma>e)})."""
    return weight.group.power(path_weight(weight, bp.mu_path(e)), bp.m(e))


def is_admissible(bp: BrauerPermutation, weight: GWeight) -> tuple[bool, Optional[str]]:
    """True iff W(mu_e^{m}) = 1 for every half edge; witness is the first
    violating half edge in lexicographic order."""
    for e in bp.half_edges:
        if not weight.group.is_identity(cycle_power_weight(bp, weight, e)):
            return False, e
    return True, None


def is_homogeneous_brauer(bp: BrauerPermutation, weight: GWeight) -> tuple[bool, Optional[str]]:
    """True iff W(mu_e^{m}) = W(mu_{tau e}^{m'}) for every half edge."""
    for e in bp.half_edges:
        if cycle_power_weight(bp, weight, e) != cycle_power_weight(bp, weight, bp.tau[e]):
            return False, e
    return True, None


def is_homogeneous_quiver(quiver: BoundQuiver, weight: GWeight) -> tuple[bool, Optional[int]]:
    """True iff within each relation generator all paths have equal weight;
    witness is the index of the first violating generator."""
    for i, relation in enumerate(quiver.relations):
        first = path_weight(weight, relation[0][1])
        for _, path in relation[1:]:
            if path_weight(weight, path) != first:
                return False, i
    return True, None
