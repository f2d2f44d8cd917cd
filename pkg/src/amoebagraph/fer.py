"""Feasible edge-replacements, their permutation cosets, and Fer groups.

A replacement e1 -> e2 removes one present edge and adds one absent edge;
it is feasible when the result is isomorphic (as an unlabeled graph) to the
original.  Fer_G(e1 -> e2) is the set of permutations whose embedding
realizes the replaced graph; it is a left coset of Aut(G).  The union E_G
of all cosets generates the group Fer(G).

All results are cached per unrooted graph value, so repeated queries over
root choices of the same graph share one computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .lgraph import (
    FormatError,
    GraphError,
    LabeledGraph,
    are_isomorphic,
    automorphism_group,
    label_isomorphisms,
)
from .permgroup import (
    Permutation,
    PermutationGroup,
    cycle_notation,
    flat,
    group_from_generators,
    label_key,
)

NEUTRAL = "∅"


class InfeasibleReplacementError(ValueError):
    """Raised when a replacement cannot be applied or breaks the isomorphism type."""


def _canonical_pair(edge) -> tuple:
    u, v = edge
    if u == v:
        raise GraphError(f"self-loop at {flat(u)!r}")
    return (u, v) if label_key(u) <= label_key(v) else (v, u)


@dataclass(frozen=True)
class EdgeReplacement:
    """An edge swap removed -> added; both None is the neutral replacement.

    A swap of an edge for itself collapses to the neutral replacement.
    """

    removed: Optional[tuple] = None
    added: Optional[tuple] = None

    def __post_init__(self):
        if (self.removed is None) != (self.added is None):
            raise GraphError("replacement needs both edges, or neither")
        if self.removed is not None:
            removed = _canonical_pair(self.removed)
            added = _canonical_pair(self.added)
            if removed == added:
                removed = added = None
            object.__setattr__(self, "removed", removed)
            object.__setattr__(self, "added", added)

    @property
    def is_neutral(self) -> bool:
        return self.removed is None

    def __str__(self) -> str:
        return replacement_notation(self)


def replacement_notation(r: EdgeReplacement) -> str:
    """Render as "12->13" (single-char labels), "a,b->c,d" otherwise, "∅->∅"."""
    if r.is_neutral:
        return f"{NEUTRAL}->{NEUTRAL}"
    names = [flat(x) for x in (*r.removed, *r.added)]
    if all(len(name) == 1 for name in names):
        return f"{names[0]}{names[1]}->{names[2]}{names[3]}"
    return f"{names[0]},{names[1]}->{names[2]},{names[3]}"


def parse_replacement(text: str, labels) -> EdgeReplacement:
    """Parse replacement notation over the given label set."""
    by_flat = {flat(x): x for x in labels}
    left, arrow, right = text.partition("->")
    if not arrow:
        raise FormatError(f"not a replacement: {text!r}")

    def side(chunk: str):
        chunk = chunk.strip()
        if chunk in (NEUTRAL, "0"):
            return None
        if "," in chunk:
            names = [name.strip() for name in chunk.split(",")]
        elif len(chunk) == 2:
            names = [chunk[0], chunk[1]]
        else:
            raise FormatError(f"cannot read edge {chunk!r} in {text!r}")
        if len(names) != 2:
            raise FormatError(f"cannot read edge {chunk!r} in {text!r}")
        try:
            return (by_flat[names[0]], by_flat[names[1]])
        except KeyError as err:
            raise FormatError(f"unknown label {err.args[0]!r} in {text!r}") from None

    removed, added = side(left), side(right)
    if (removed is None) != (added is None):
        raise FormatError(f"half-neutral replacement: {text!r}")
    return EdgeReplacement(removed, added)


def apply_replacement(g: LabeledGraph, r: EdgeReplacement) -> LabeledGraph:
    """The replaced graph g - removed + added; neutral returns g unchanged.

    The removed edge must be present and the added one absent (GraphError
    otherwise); whether the result is isomorphic to g is a separate question
    answered by feasible_replacements.
    """
    if r.is_neutral:
        return g
    return g.remove_edge(*r.removed).add_edge(*r.added)


@dataclass(frozen=True)
class FerCoset:
    """All permutations realizing one feasible replacement (a left Aut-coset)."""

    replacement: EdgeReplacement
    perms: tuple

    @property
    def size(self) -> int:
        return len(self.perms)

    def to_json(self) -> dict:
        return {
            "replacement": replacement_notation(self.replacement),
            "perms": [cycle_notation(p) for p in self.perms],
        }


@lru_cache(maxsize=None)
def _aut(g: LabeledGraph) -> PermutationGroup:
    return automorphism_group(g)


@lru_cache(maxsize=None)
def _feasible(g: LabeledGraph) -> tuple:
    replacements = [EdgeReplacement()]
    absent = g.non_edges()
    for removed in g.edges:
        base = g.remove_edge(*removed)
        for added in absent:
            if are_isomorphic(base.add_edge(*added), g):
                replacements.append(EdgeReplacement(removed, added))
    return tuple(replacements)


@lru_cache(maxsize=None)
def _coset(g: LabeledGraph, r: EdgeReplacement) -> FerCoset:
    target = apply_replacement(g, r)
    perms = label_isomorphisms(target, g)
    if not perms:
        raise InfeasibleReplacementError(
            f"replacement {replacement_notation(r)} changes the isomorphism type"
        )
    return FerCoset(r, perms)


@lru_cache(maxsize=None)
def _generating_set(g: LabeledGraph) -> tuple:
    out = []
    seen = set()
    for r in _feasible(g):
        for p in _coset(g, r).perms:
            if p.images not in seen:
                seen.add(p.images)
                out.append(p)
    return tuple(out)


@lru_cache(maxsize=None)
def _fer_group(g: LabeledGraph) -> PermutationGroup:
    return group_from_generators(_generating_set(g), domain=g.labels)


@lru_cache(maxsize=None)
def _fixed_generating_set(g: LabeledGraph, i) -> tuple:
    return tuple(p for p in _generating_set(g) if p(i) == i)


@lru_cache(maxsize=None)
def _fer_fixed_group(g: LabeledGraph, i) -> PermutationGroup:
    return group_from_generators(_fixed_generating_set(g, i), domain=g.labels)


@lru_cache(maxsize=None)
def _hang_group(g: LabeledGraph, i) -> PermutationGroup:
    gens = _fixed_generating_set(g, i) + _aut(g).generators
    return group_from_generators(gens, domain=g.labels)


def _require_label(g: LabeledGraph, i):
    if i not in set(g.labels):
        raise GraphError(f"unknown label {flat(i)!r}")


def feasible_replacements(g: LabeledGraph) -> tuple:
    """The neutral replacement plus every feasible edge swap, in edge order."""
    return _feasible(g.unrooted())


def fer_coset(g: LabeledGraph, r: EdgeReplacement) -> FerCoset:
    """Fer_G(removed -> added): every p with embed(g, p) = g - removed + added."""
    return _coset(g.unrooted(), r)


def generating_set(g: LabeledGraph) -> tuple:
    """E_G: the union of all feasible cosets, deduplicated (neutral first)."""
    return _generating_set(g.unrooted())


def fer_group(g: LabeledGraph) -> PermutationGroup:
    """Fer(G) = <E_G>, the feasible edge-replacement group."""
    return _fer_group(g.unrooted())


def fixed_generating_set(g: LabeledGraph, i) -> tuple:
    """E^i_G: the members of E_G fixing label i."""
    _require_label(g, i)
    return _fixed_generating_set(g.unrooted(), i)


def fer_fixed_group(g: LabeledGraph, i) -> PermutationGroup:
    """Fer^i(G) = <E^i_G>."""
    _require_label(g, i)
    return _fer_fixed_group(g.unrooted(), i)


def hang_group(g: LabeledGraph, i) -> PermutationGroup:
    """The hang group <E^i_G ∪ Aut(G)>."""
    _require_label(g, i)
    return _hang_group(g.unrooted(), i)
