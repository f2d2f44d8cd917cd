"""Labeled graphs, embeddings under permutations, and isomorphism search.

A labeled graph is a simple graph whose vertices *are* its labels (strings,
or (b, x) pairs from comb products), plus an optional root label.  The JSON
file format is fixed: {"labels": [...], "edges": [[u, v], ...], "root": u}
with flattened labels, canonically ordered endpoints, and sorted lists.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .permgroup import (
    Permutation,
    PermutationGroup,
    flat,
    group_from_generators,
    label_key,
    sorted_domain,
)


class GraphError(ValueError):
    """Raised for structurally invalid graphs or graph edits."""


class FormatError(ValueError):
    """Raised for malformed graph JSON or DOT requests."""


def _canonical_edge(u, v) -> tuple:
    if u == v:
        raise GraphError(f"self-loop at {flat(u)!r}")
    return (u, v) if label_key(u) <= label_key(v) else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on a label set, with an optional root label."""

    labels: tuple
    edges: tuple = ()
    root: Optional[object] = None

    def __post_init__(self):
        domain = sorted_domain(self.labels)
        if not domain:
            raise GraphError("graph needs at least one label")
        label_set = set(domain)
        canon = []
        seen = set()
        for edge in self.edges:
            u, v = edge
            if u not in label_set or v not in label_set:
                raise GraphError(f"edge endpoint not a label: {flat(u)!r}-{flat(v)!r}")
            pair = _canonical_edge(u, v)
            if pair in seen:
                raise GraphError(f"duplicate edge {flat(pair[0])!r}-{flat(pair[1])!r}")
            seen.add(pair)
            canon.append(pair)
        canon.sort(key=lambda e: (label_key(e[0]), label_key(e[1])))
        if self.root is not None and self.root not in label_set:
            raise GraphError(f"root {flat(self.root)!r} is not a label")
        object.__setattr__(self, "labels", domain)
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def _adjacency(self) -> dict:
        adj = {x: set() for x in self.labels}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {x: frozenset(nbrs) for x, nbrs in adj.items()}

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def neighbors(self, x) -> frozenset:
        try:
            return self._adjacency[x]
        except KeyError:
            raise GraphError(f"unknown label {flat(x)!r}") from None

    def degree(self, x) -> int:
        return len(self.neighbors(x))

    def has_edge(self, u, v) -> bool:
        return _canonical_edge(u, v) in self._edge_set

    def leaves(self) -> tuple:
        """Labels of degree exactly 1."""
        return tuple(x for x in self.labels if self.degree(x) == 1)

    def isolated(self) -> tuple:
        """Labels of degree 0."""
        return tuple(x for x in self.labels if self.degree(x) == 0)

    def non_edges(self) -> tuple:
        """Canonical absent pairs, in domain order."""
        out = []
        for i, u in enumerate(self.labels):
            for v in self.labels[i + 1 :]:
                if v not in self._adjacency[u]:
                    out.append((u, v))
        return tuple(out)

    def add_edge(self, u, v) -> "LabeledGraph":
        """A copy with the edge added; the edge must be absent."""
        pair = _canonical_edge(u, v)
        if u not in self._adjacency or v not in self._adjacency:
            raise GraphError(f"edge endpoint not a label: {flat(u)!r}-{flat(v)!r}")
        if pair in self._edge_set:
            raise GraphError(f"edge {flat(u)!r}-{flat(v)!r} already present")
        return LabeledGraph(self.labels, self.edges + (pair,), self.root)

    def remove_edge(self, u, v) -> "LabeledGraph":
        """A copy with the edge removed; the edge must be present."""
        pair = _canonical_edge(u, v)
        if pair not in self._edge_set:
            raise GraphError(f"edge {flat(u)!r}-{flat(v)!r} not present")
        return LabeledGraph(self.labels, tuple(e for e in self.edges if e != pair), self.root)

    def with_root(self, x) -> "LabeledGraph":
        return LabeledGraph(self.labels, self.edges, x)

    def unrooted(self) -> "LabeledGraph":
        return self if self.root is None else LabeledGraph(self.labels, self.edges)


def embed(g: LabeledGraph, p: Permutation) -> LabeledGraph:
    """The embedding G_p: edge ij present iff p(i)p(j) is an edge of g.

    The root is metadata and carries over unchanged.
    """
    if p.domain != g.labels:
        raise GraphError("permutation domain does not match graph labels")
    pinv = p.inverse()
    return LabeledGraph(g.labels, tuple((pinv(u), pinv(v)) for u, v in g.edges), g.root)


def relabel(g: LabeledGraph, mapping: dict) -> LabeledGraph:
    """Rename every label through a bijective mapping."""
    if set(mapping) != set(g.labels) or len(set(mapping.values())) != len(g.labels):
        raise GraphError("relabeling is not a bijection on the labels")
    return LabeledGraph(
        tuple(mapping[x] for x in g.labels),
        tuple((mapping[u], mapping[v]) for u, v in g.edges),
        None if g.root is None else mapping[g.root],
    )


def disjoint_union(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """Union of two graphs on disjoint label sets; keeps g's root if any."""
    overlap = set(g.labels) & set(h.labels)
    if overlap:
        raise GraphError(f"label collision in union: {sorted(map(flat, overlap))}")
    return LabeledGraph(g.labels + h.labels, g.edges + h.edges, g.root)


def _vertex_invariants(g: LabeledGraph) -> dict:
    deg = {x: g.degree(x) for x in g.labels}
    return {
        x: (deg[x], tuple(sorted(deg[y] for y in g.neighbors(x))))
        for x in g.labels
    }


def _isomorphism_search(h: LabeledGraph, g: LabeledGraph, first_only: bool) -> list:
    """All label bijections m (as dicts) with edge ij in h iff edge m(i)m(j) in g."""
    if len(h.labels) != len(g.labels) or len(h.edges) != len(g.edges):
        return []
    inv_h = _vertex_invariants(h)
    inv_g = _vertex_invariants(g)
    if sorted(inv_h.values()) != sorted(inv_g.values()):
        return []
    candidates = defaultdict(list)
    for w in g.labels:
        candidates[inv_g[w]].append(w)

    adj_h = h._adjacency
    adj_g = g._adjacency
    placed = {}
    used = set()
    results = []

    def pick_next():
        return max(
            (v for v in h.labels if v not in placed),
            key=lambda v: (sum(u in placed for u in adj_h[v]), len(adj_h[v])),
        )

    def extend() -> bool:
        if len(placed) == len(h.labels):
            results.append(dict(placed))
            return first_only
        v = pick_next()
        for w in candidates[inv_h[v]]:
            if w in used:
                continue
            if any((u in adj_h[v]) != (placed[u] in adj_g[w]) for u in placed):
                continue
            placed[v] = w
            used.add(w)
            if extend():
                return True
            del placed[v]
            used.discard(w)
        return False

    extend()
    return results


def label_isomorphisms(h: LabeledGraph, g: LabeledGraph) -> tuple:
    """Every permutation p with embed(g, p) == h (roots ignored), sorted.

    The graphs must share one label set; use are_isomorphic for the
    unlabeled question across different label sets.
    """
    if set(h.labels) != set(g.labels):
        raise GraphError("label sets differ; no permutation can relate the graphs")
    found = [
        Permutation.from_mapping(m)
        for m in _isomorphism_search(h, g, first_only=False)
    ]
    return tuple(sorted(found, key=lambda p: tuple(label_key(y) for y in p.images)))


def are_isomorphic(h: LabeledGraph, g: LabeledGraph) -> bool:
    """Whether some label bijection maps g onto h (roots ignored)."""
    return bool(_isomorphism_search(h, g, first_only=True))


def automorphism_group(g: LabeledGraph) -> PermutationGroup:
    """Aut(g) with every automorphism listed as a generator."""
    return group_from_generators(label_isomorphisms(g, g), domain=g.labels)


def to_json(g: LabeledGraph) -> str:
    """Serialize in the canonical JSON format (stable bytes)."""
    edges = sorted(
        [sorted((flat(u), flat(v))) for u, v in g.edges]
    )
    obj = {"labels": sorted(flat(x) for x in g.labels), "edges": edges}
    if g.root is not None:
        obj["root"] = flat(g.root)
    return json.dumps(obj, indent=2) + "\n"


def from_json(text: str) -> LabeledGraph:
    """Parse the canonical JSON format; labels stay plain strings."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"invalid JSON: {err}") from None
    if not isinstance(obj, dict):
        raise FormatError("top level must be an object")
    labels = obj.get("labels")
    if not isinstance(labels, list) or not all(
        isinstance(x, str) and x for x in labels
    ):
        raise FormatError('field "labels" must be a list of non-empty strings')
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise FormatError('field "edges" must be a list of label pairs')
    label_set = set(labels)
    parsed = []
    for k, edge in enumerate(edges):
        if (
            not isinstance(edge, list)
            or len(edge) != 2
            or not all(isinstance(x, str) for x in edge)
        ):
            raise FormatError(f'field "edges[{k}]" must be a pair of labels')
        if edge[0] not in label_set or edge[1] not in label_set:
            raise FormatError(f'field "edges[{k}]" uses an unknown label')
        parsed.append(tuple(edge))
    root = obj.get("root")
    if root is not None and (not isinstance(root, str) or root not in label_set):
        raise FormatError('field "root" must be one of the labels')
    extra = set(obj) - {"labels", "edges", "root"}
    if extra:
        raise FormatError(f"unknown fields: {sorted(extra)}")
    try:
        return LabeledGraph(tuple(labels), tuple(parsed), root)
    except GraphError as err:
        raise FormatError(str(err)) from None


def to_dot(g: LabeledGraph) -> str:
    """Plain DOT dump: one line per vertex and per edge."""
    lines = ["graph {"]
    for x in g.labels:
        mark = " [root=true]" if x == g.root else ""
        lines.append(f'  "{flat(x)}"{mark};')
    for u, v in g.edges:
        lines.append(f'  "{flat(u)}" -- "{flat(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
