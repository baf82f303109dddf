"""Labeled graphs on a fixed vertex set, stored as edge bitmasks, and the
poset of bridgeless (isthmus-free) edge sets ordered by inclusion.

Edge index order is lexicographic on pairs (i, j) with i < j, 0-based, so
bitmask encodings are stable across runs. Isolated vertices always count
as connected components.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from math import comb

from .posetlin import RationalPoly

DEFAULT_POSET_CAP = 6


@lru_cache(maxsize=None)
def vertex_pairs(v: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(v), 2))


@dataclass(frozen=True)
class EdgeSet:
    """Subset of the unordered vertex pairs on v labeled vertices."""

    v: int
    bits: int

    def __post_init__(self):
        if self.v < 1:
            raise ValueError("need at least one vertex")
        top = 1 << comb(self.v, 2)
        if not 0 <= self.bits < top:
            raise ValueError(f"edge bitmask {self.bits:#b} out of range for v={self.v}")

    @classmethod
    def from_edges(cls, v: int, edges) -> "EdgeSet":
        pairs = vertex_pairs(v)
        index = {p: n for n, p in enumerate(pairs)}
        bits = 0
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop edge ({a},{a}) not allowed")
            key = (min(a, b), max(a, b))
            if key not in index:
                raise ValueError(f"edge {key} out of range for v={v}")
            bits |= 1 << index[key]
        return cls(v, bits)

    @classmethod
    def from_text(cls, text: str) -> "EdgeSet":
        """Parse "v=4;edges=01,02,12" or "v=4;mask=0b000111"."""
        fields = dict(part.split("=", 1) for part in text.strip().split(";") if part)
        if "v" not in fields:
            raise ValueError(f"edge set text needs a v= field: {text!r}")
        v = int(fields["v"])
        if "mask" in fields:
            return cls(v, int(fields["mask"], 0))
        if "edges" in fields:
            spec = fields["edges"].strip()
            edges = []
            if spec:
                for token in spec.split(","):
                    token = token.strip()
                    if len(token) != 2 or not token.isdigit():
                        raise ValueError(f"bad edge token {token!r} (want e.g. 01)")
                    edges.append((int(token[0]), int(token[1])))
            return cls.from_edges(v, edges)
        raise ValueError(f"edge set text needs edges= or mask=: {text!r}")

    def to_text(self, mask_form: bool = False) -> str:
        if mask_form:
            width = comb(self.v, 2)
            return f"v={self.v};mask=0b{self.bits:0{width}b}"
        tokens = ",".join(f"{a}{b}" for a, b in self.edges())
        return f"v={self.v};edges={tokens}"

    @cached_property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def edges(self) -> tuple[tuple[int, int], ...]:
        pairs = vertex_pairs(self.v)
        return tuple(pairs[n] for n in range(len(pairs)) if (self.bits >> n) & 1)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.v)]
        for a, b in self.edges():
            nbrs[a].append(b)
            nbrs[b].append(a)
        return tuple(tuple(ns) for ns in nbrs)

    def is_subset_of(self, other: "EdgeSet") -> bool:
        if self.v != other.v:
            raise ValueError("edge sets on different vertex counts")
        return self.bits & ~other.bits == 0

    def without_edge(self, n: int) -> "EdgeSet":
        return EdgeSet(self.v, self.bits & ~(1 << n))

    def __repr__(self):
        return f"EdgeSet({self.to_text()})"


def components(edge_set: EdgeSet) -> int:
    """Number of connected components, isolated vertices included."""
    adj = edge_set.adjacency
    seen = [False] * edge_set.v
    count = 0
    for start in range(edge_set.v):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def _connected_avoiding(edge_set: EdgeSet, src: int, dst: int, skip: int) -> bool:
    # is dst reachable from src without using edge index `skip`?
    pairs = vertex_pairs(edge_set.v)
    adj: list[list[int]] = [[] for _ in range(edge_set.v)]
    for n in range(len(pairs)):
        if n != skip and (edge_set.bits >> n) & 1:
            a, b = pairs[n]
            adj[a].append(b)
            adj[b].append(a)
    seen = [False] * edge_set.v
    seen[src] = True
    stack = [src]
    while stack:
        u = stack.pop()
        if u == dst:
            return True
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return False


def is_isthmus_free(edge_set: EdgeSet) -> bool:
    """True iff removing any single edge keeps the component count, i.e.
    every edge lies on a cycle."""
    pairs = vertex_pairs(edge_set.v)
    for n in range(len(pairs)):
        if (edge_set.bits >> n) & 1:
            a, b = pairs[n]
            if not _connected_avoiding(edge_set, a, b, n):
                return False
    return True


def girth(edge_set: EdgeSet):
    """Length of the shortest cycle; math.inf for forests."""
    pairs = vertex_pairs(edge_set.v)
    best = math.inf
    for n in range(len(pairs)):
        if not (edge_set.bits >> n) & 1:
            continue
        a, b = pairs[n]
        # BFS distance a -> b avoiding the edge itself
        dist = {a: 0}
        frontier = [a]
        while frontier and b not in dist:
            nxt = []
            for u in frontier:
                for m in range(len(pairs)):
                    if m == n or not (edge_set.bits >> m) & 1:
                        continue
                    x, y = pairs[m]
                    if x == u and y not in dist:
                        dist[y] = dist[u] + 1
                        nxt.append(y)
                    elif y == u and x not in dist:
                        dist[x] = dist[u] + 1
                        nxt.append(x)
            frontier = nxt
        if b in dist:
            best = min(best, dist[b] + 1)
    return best


@dataclass(frozen=True)
class SubgraphPoset:
    """All bridgeless edge sets on v vertices, sorted by (edge count, bitmask).

    The sort order is a linear extension of inclusion: if E is a subset of
    H then index(E) <= index(H). The empty graph is always member 0.
    """

    v: int
    members: tuple[EdgeSet, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def index_by_mask(self) -> dict[int, int]:
        return {m.bits: i for i, m in enumerate(self.members)}

    def index_of(self, edge_set: EdgeSet) -> int:
        if edge_set.v != self.v:
            raise ValueError("edge set on wrong vertex count for this poset")
        try:
            return self.index_by_mask[edge_set.bits]
        except KeyError:
            raise ValueError(f"{edge_set!r} is not isthmus-free") from None

    def leq(self, i: int, j: int) -> bool:
        return self.members[i].bits & ~self.members[j].bits == 0

    @cached_property
    def down_sets(self) -> tuple[tuple[int, ...], ...]:
        """For each member, the sorted indices of all members below it."""
        out = []
        for member in self.members:
            below = []
            sub = member.bits
            while True:
                idx = self.index_by_mask.get(sub)
                if idx is not None:
                    below.append(idx)
                if sub == 0:
                    break
                sub = (sub - 1) & member.bits
            out.append(tuple(sorted(below)))
        return tuple(out)

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(m.edge_count for m in self.members)


def enumerate_poset(v: int, cap: int = DEFAULT_POSET_CAP) -> SubgraphPoset:
    """Enumerate every bridgeless edge set on v labeled vertices."""
    if not 2 <= v <= cap:
        raise ValueError(f"v must be in 2..{cap}, got {v}")
    n_pairs = comb(v, 2)
    found = [
        EdgeSet(v, bits)
        for bits in range(1 << n_pairs)
        if is_isthmus_free(EdgeSet(v, bits))
    ]
    found.sort(key=lambda e: (e.edge_count, e.bits))
    return SubgraphPoset(v, tuple(found))


@lru_cache(maxsize=None)
def canonical_bits(v: int, bits: int) -> int:
    """Minimum bitmask over all vertex relabelings; class representative."""
    pairs = vertex_pairs(v)
    index = {p: n for n, p in enumerate(pairs)}
    edges = [pairs[n] for n in range(len(pairs)) if (bits >> n) & 1]
    best = bits
    for perm in permutations(range(v)):
        relabeled = 0
        for a, b in edges:
            x, y = perm[a], perm[b]
            relabeled |= 1 << index[(min(x, y), max(x, y))]
        if relabeled < best:
            best = relabeled
    return best


def _cycle_lengths(edge_set: EdgeSet) -> list[int] | None:
    # lengths of the cycles when every non-isolated vertex has degree 2
    adj = edge_set.adjacency
    active = [u for u in range(edge_set.v) if adj[u]]
    if any(len(adj[u]) != 2 for u in active):
        return None
    lengths = []
    seen: set[int] = set()
    for start in active:
        if start in seen:
            continue
        length = 0
        prev, u = None, start
        while True:
            seen.add(u)
            length += 1
            a, b = adj[u]
            prev, u = u, (b if a == prev else a)
            if u == start:
                break
        lengths.append(length)
    return sorted(lengths, reverse=True)


def class_label(v: int, bits: int) -> str:
    """Human name for the isomorphism class of a bridgeless edge set."""
    es = EdgeSet(v, bits)
    e = es.edge_count
    if e == 0:
        return "empty"
    adj = es.adjacency
    active = [u for u in range(v) if adj[u]]
    na = len(active)
    cycles = _cycle_lengths(es)
    if cycles is not None:
        return "+".join(f"C{n}" for n in cycles) if cycles != [3] else "K3"
    if e == comb(na, 2):
        return f"K{na}"
    if na == 4 and e == 5:
        return "diamond"
    degs = sorted((len(adj[u]) for u in active), reverse=True)
    if na == 5 and e == 6 and degs == [4, 2, 2, 2, 2]:
        return "bowtie"
    return f"g{na}v{e}e_{canonical_bits(v, bits):x}"


def iso_class_blocks(poset: SubgraphPoset) -> list[tuple[str, tuple[int, ...]]]:
    """Partition poset indices by graph isomorphism class.

    Classes come out in display order: descending edge count, then by
    canonical bitmask, so the complete graph is first and empty is last.
    """
    groups: dict[int, list[int]] = {}
    for i, member in enumerate(poset.members):
        groups.setdefault(canonical_bits(poset.v, member.bits), []).append(i)
    keyed = sorted(groups.items(), key=lambda kv: (-EdgeSet(poset.v, kv[0]).edge_count, kv[0]))
    return [(class_label(poset.v, canon), tuple(idxs)) for canon, idxs in keyed]


def containment_count(poset: SubgraphPoset, inner: int, outer_class: tuple[int, ...]) -> int:
    """How many members of outer_class contain the member `inner`."""
    return sum(1 for j in outer_class if poset.leq(inner, j))


@lru_cache(maxsize=None)
def _chromatic(v: int, edges: frozenset[tuple[int, int]]) -> RationalPoly:
    if not edges:
        return RationalPoly.monomial(v)
    u, w = min(edges)
    deleted = edges - {(u, w)}
    # contract w into u, relabel vertices above w down by one
    def relabel(x: int) -> int:
        if x == w:
            return u
        return x - 1 if x > w else x
    contracted = set()
    for a, b in deleted:
        a2, b2 = relabel(a), relabel(b)
        if a2 != b2:
            contracted.add((min(a2, b2), max(a2, b2)))
    return _chromatic(v, deleted) - _chromatic(v - 1, frozenset(contracted))


def chromatic_oracle(edge_set: EdgeSet) -> RationalPoly:
    """Chromatic polynomial by deletion-contraction; bridges are fine here.

    Isolated vertices each contribute one factor of the color count.
    """
    return _chromatic(edge_set.v, frozenset(edge_set.edges()))


def poset_to_json(poset: SubgraphPoset) -> str:
    labels = {}
    for label, idxs in iso_class_blocks(poset):
        for i in idxs:
            labels[i] = label
    rows = []
    for i, member in enumerate(poset.members):
        g = girth(member)
        rows.append(
            {
                "index": i,
                "mask": member.bits,
                "edges": member.to_text(),
                "edge_count": member.edge_count,
                "components": components(member),
                "girth": "inf" if g == math.inf else g,
                "iso_class": labels[i],
            }
        )
    return json.dumps({"v": poset.v, "count": len(poset.members), "members": rows}, indent=2)
