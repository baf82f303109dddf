"""Coloring probability vectors over the bridgeless subgraph poset, computed
by three independent routes, plus the reciprocity identity, its transfer
form, girth-order main terms, and the chromatic specialization.

For an edge set E and a symmetric allowed set A, the E coordinate is the
probability that a uniformly random coloring of the vertices has every edge
difference inside A. Exact rational arithmetic everywhere except the
Fourier cross-check, which is floating point by design.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import comb

from .graphs import EdgeSet, SubgraphPoset, components, girth, is_isthmus_free
from .groups import AllowedSet, character_sum
from .posetlin import RationalPoly, matvec_rational, mobius_table, transfer_at

DEFAULT_BUDGET = 10**8
FOURIER_TOL = 1e-9


class BudgetExceededError(Exception):
    """Raised when an enumeration would exceed the configured work budget."""

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(f"{message} (needs {required} > budget {budget})")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class GammaVector:
    """Probability per poset coordinate, tagged with the producing method."""

    poset: SubgraphPoset
    values: tuple
    method: str

    def __getitem__(self, i: int):
        return self.values[i]

    def value_at(self, edge_set: EdgeSet):
        return self.values[self.poset.index_of(edge_set)]


@dataclass(frozen=True)
class CoboundaryContext:
    """Oriented edges (low to high vertex), one root per component, and the
    fundamental cycles of a spanning forest.

    The coboundary of a coloring X assigns X_j - X_i to each edge (i, j)
    with i < j; its image has exactly f^(v - c) elements, parametrized by
    the colorings that fix every root to the identity.
    """

    edge_set: EdgeSet

    @cached_property
    def oriented_edges(self) -> tuple[tuple[int, int], ...]:
        return self.edge_set.edges()

    @cached_property
    def _forest(self):
        v = self.edge_set.v
        adj: dict[int, list[tuple[int, int]]] = {u: [] for u in range(v)}
        for pos, (a, b) in enumerate(self.oriented_edges):
            adj[a].append((b, pos))
            adj[b].append((a, pos))
        parent: list[tuple[int, int] | None] = [None] * v
        roots: list[int] = []
        seen = [False] * v
        tree_edges: set[int] = set()
        for start in range(v):
            if seen[start]:
                continue
            roots.append(start)
            seen[start] = True
            stack = [start]
            while stack:
                u = stack.pop()
                for w, pos in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        parent[w] = (u, pos)
                        tree_edges.add(pos)
                        stack.append(w)
        return roots, parent, tree_edges

    @property
    def roots(self) -> list[int]:
        return self._forest[0]

    @property
    def tree_edges(self) -> set[int]:
        return self._forest[2]

    @cached_property
    def nontree_edges(self) -> tuple[int, ...]:
        tree = self.tree_edges
        return tuple(
            pos for pos in range(len(self.oriented_edges)) if pos not in tree
        )

    def _steps_to_root(self, u: int) -> list[tuple[int, int, int]]:
        # (from_vertex, to_vertex, edge_pos) walking up the forest
        _, parent, _ = self._forest
        out = []
        while parent[u] is not None:
            p, pos = parent[u]
            out.append((u, p, pos))
            u = p
        return out

    @cached_property
    def fundamental_cycles(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """One signed edge-coefficient list per non-tree edge.

        Each entry is ((edge_pos, sign), ...) describing a closed walk; the
        signed sums at every vertex cancel, so these span the cycle space.
        """
        cycles = []
        for pos in self.nontree_edges:
            a, b = self.oriented_edges[pos]
            coeffs: dict[int, int] = {pos: 1}  # step a -> b along (a, b)
            up_b = self._steps_to_root(b)
            up_a = self._steps_to_root(a)
            while up_b and up_a and up_b[-1] == up_a[-1]:
                up_b.pop()
                up_a.pop()
            steps = list(up_b) + [(y, x, m) for (x, y, m) in reversed(up_a)]
            for x, y, m in steps:
                lo, hi = self.oriented_edges[m]
                coeffs[m] = coeffs.get(m, 0) + (1 if (x, y) == (lo, hi) else -1)
            cycles.append(tuple((m, s) for m, s in sorted(coeffs.items()) if s))
        return tuple(cycles)

    @cached_property
    def edge_cycle_incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each edge position in the set, the (cycle index, sign) pairs."""
        inc: dict[int, list[tuple[int, int]]] = {
            pos: [] for pos in range(len(self.oriented_edges))
        }
        for ci, cycle in enumerate(self.fundamental_cycles):
            for pos, sign in cycle:
                inc[pos].append((ci, sign))
        return tuple(tuple(inc[pos]) for pos in range(len(self.oriented_edges)))

    def coboundary(self, group, coloring) -> tuple[int, ...]:
        """Edge differences X_j - X_i (element indices) for a coloring."""
        return tuple(
            group.sub(coloring[j], coloring[i]) for i, j in self.oriented_edges
        )

    def image_size(self, group) -> int:
        return group.order ** (self.edge_set.v - len(self.roots))


def gamma_bruteforce(
    edge_set: EdgeSet, allowed: AllowedSet, budget: int = DEFAULT_BUDGET
) -> Fraction:
    """Count all f^v colorings directly. The defining formula, and the
    oracle the other methods are checked against."""
    group = allowed.group
    f = group.order
    v = edge_set.v
    if f**v > budget:
        raise BudgetExceededError(
            "vertex enumeration too large; use gamma_cyclespace", f**v, budget
        )
    edges = edge_set.edges()
    contains = allowed.contains_index
    sub = group.sub
    count = 0
    for coloring in product(range(f), repeat=v):
        if all(contains(sub(coloring[j], coloring[i])) for i, j in edges):
            count += 1
    return Fraction(count, f**v)


def gamma_cyclespace(
    edge_set: EdgeSet, allowed: AllowedSet, budget: int = DEFAULT_BUDGET
) -> Fraction:
    """Enumerate the coboundary image only: fix one root color per component
    and sweep the remaining f^(v - c) colorings."""
    group = allowed.group
    f = group.order
    ctx = CoboundaryContext(edge_set)
    free = [u for u in range(edge_set.v) if u not in ctx.roots]
    if f ** len(free) > budget:
        raise BudgetExceededError("coboundary image too large", f ** len(free), budget)
    edges = edge_set.edges()
    contains = allowed.contains_index
    sub = group.sub
    coloring = [0] * edge_set.v
    count = 0
    for assignment in product(range(f), repeat=len(free)):
        for slot, u in enumerate(free):
            coloring[u] = assignment[slot]
        if all(contains(sub(coloring[j], coloring[i])) for i, j in edges):
            count += 1
    return Fraction(count, f ** len(free))


def gamma_fourier(
    edge_set: EdgeSet,
    allowed: AllowedSet,
    budget: int = DEFAULT_BUDGET,
    tol: float = FOURIER_TOL,
) -> float:
    """Character double sum over the dual cycle space; floating cross-check.

    The kernel of the boundary map is enumerated through the fundamental
    cycles of a spanning forest: f^(e - v + c) edge characters in total.
    An imaginary residue above tol means the kernel enumeration is wrong.
    """
    group = allowed.group
    f = group.order
    ctx = CoboundaryContext(edge_set)
    m = len(ctx.nontree_edges)
    if f**m > budget:
        raise BudgetExceededError("dual cycle space too large", f**m, budget)
    char_sums = [character_sum(allowed, p) for p in range(f)]
    incidence = ctx.edge_cycle_incidence
    add = group.add
    neg = group.neg
    total = 0j
    for assignment in product(range(f), repeat=m):
        term = complex(1, 0)
        for inc in incidence:
            p = 0
            for ci, sign in inc:
                g = assignment[ci]
                p = add(p, g if sign > 0 else neg(g))
            term *= char_sums[p]
        total += term
    value = total / f**edge_set.edge_count
    if abs(value.imag) > tol:
        raise ArithmeticError(
            f"imaginary residue {value.imag:.3e} exceeds {tol}; kernel enumeration bug"
        )
    return value.real


_METHODS = {
    "brute": gamma_bruteforce,
    "cycle": gamma_cyclespace,
    "fourier": gamma_fourier,
}


def gamma_vector(
    poset: SubgraphPoset,
    allowed: AllowedSet,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
) -> GammaVector:
    """Apply one per-coordinate method to every poset member.

    "auto" picks the cycle-space enumeration, which is never more work
    than the vertex brute force.
    """
    name = "cycle" if method == "auto" else method
    try:
        fn = _METHODS[name]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; want brute, cycle, or fourier")
    values = tuple(fn(member, allowed, budget) for member in poset.members)
    return GammaVector(poset, values, name)


def gamma_plus(gamma: GammaVector, alpha: Fraction) -> GammaVector:
    """Mobius-invert the weighted zeta expansion: the inverse weighted zeta
    at alpha applied to the vector, exactly."""
    poset = gamma.poset
    table = mobius_table(poset)
    sizes = poset.sizes
    alpha = Fraction(alpha)
    values = []
    for h in range(len(poset)):
        acc = Fraction(0)
        for e, mu in table[h].items():
            if mu:
                acc += mu * alpha ** (sizes[h] - sizes[e]) * gamma.values[e]
        values.append(acc)
    return GammaVector(poset, tuple(values), gamma.method + "+mobius")


@dataclass(frozen=True)
class ReciprocityReport:
    """Coordinatewise comparison of the two Mobius-inverted vectors."""

    poset: SubgraphPoset
    alpha: Fraction
    lhs: tuple
    rhs: tuple
    gamma: GammaVector
    gamma_complement: GammaVector

    @property
    def per_coordinate(self) -> tuple[bool, ...]:
        return tuple(a == b for a, b in zip(self.lhs, self.rhs))

    @property
    def ok(self) -> bool:
        return all(self.per_coordinate)

    def failing_indices(self) -> tuple[int, ...]:
        return tuple(i for i, good in enumerate(self.per_coordinate) if not good)

    def to_dict(self) -> dict:
        coords = []
        for i, member in enumerate(self.poset.members):
            coords.append(
                {
                    "mask": member.bits,
                    "edges": member.to_text(),
                    "lhs": str(self.lhs[i]),
                    "rhs": str(self.rhs[i]),
                    "equal": self.lhs[i] == self.rhs[i],
                }
            )
        return {
            "alpha": str(self.alpha),
            "alpha_bar": str(1 - self.alpha),
            "ok": self.ok,
            "coordinates": coords,
        }


def verify_reciprocity(
    poset: SubgraphPoset,
    allowed: AllowedSet,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
) -> ReciprocityReport:
    """Check that Mobius inversion at alpha of the allowed vector equals the
    parity-signed Mobius inversion at 1 - alpha of the complement vector.

    Exact rational comparison; a mismatch is reported, never raised.
    """
    g_a = gamma_vector(poset, allowed, method, budget)
    g_bar = gamma_vector(poset, allowed.complement(), method, budget)
    plus_a = gamma_plus(g_a, allowed.alpha)
    plus_bar = gamma_plus(g_bar, allowed.alpha_bar)
    signed = tuple(
        (-1) ** poset.sizes[h] * plus_bar.values[h] for h in range(len(poset))
    )
    return ReciprocityReport(poset, allowed.alpha, plus_a.values, signed, g_a, g_bar)


def apply_transfer(
    poset: SubgraphPoset, alpha_bar: Fraction, gamma_bar: GammaVector
) -> GammaVector:
    """Map the complement vector to the allowed vector through the transfer
    matrix evaluated at the complement density."""
    matrix = transfer_at(poset, Fraction(alpha_bar))
    values = matvec_rational(matrix, gamma_bar.values)
    return GammaVector(poset, values, "transfer")


# ---------------------------------------------------------------------------
# Local interval computations. The transfer row of an edge set E against the
# empty column only involves bridgeless subsets of E, so these avoid building
# the full ambient poset.


def _interval_members(edge_set: EdgeSet) -> list[int]:
    masks = []
    sub = edge_set.bits
    while True:
        if is_isthmus_free(EdgeSet(edge_set.v, sub)):
            masks.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & edge_set.bits
    masks.sort(key=lambda m: (m.bit_count(), m))
    return masks


def _local_mobius(members: list[int]) -> list[dict[int, int]]:
    # mu(E, G) per member G, keyed by member position of E; same recursion
    # as the global table but over an arbitrary down-closed family
    pos = {m: i for i, m in enumerate(members)}
    downs = []
    for m in members:
        below = []
        sub = m
        while True:
            if sub in pos:
                below.append(pos[sub])
            if sub == 0:
                break
            sub = (sub - 1) & m
        downs.append(sorted(below))
    table: list[dict[int, int]] = []
    for gi, down in enumerate(downs):
        mu_g: dict[int, int] = {gi: 1}
        for ei in reversed(down[:-1]):
            acc = 0
            for hi in down:
                if hi != ei and members[ei] & ~members[hi] == 0:
                    acc += mu_g[hi]
            mu_g[ei] = -acc
        table.append(mu_g)
    return table


def main_term(edge_set: EdgeSet, alpha_bar: Fraction) -> Fraction:
    """Transfer-row entry against the empty graph, evaluated at alpha_bar.

    This is the group-independent approximation of the allowed probability;
    the neglected part has order alpha_bar^(girth - 1).
    """
    if not is_isthmus_free(edge_set):
        raise ValueError("main term is defined on isthmus-free edge sets")
    alpha_bar = Fraction(alpha_bar)
    members = _interval_members(edge_set)
    mu_table = _local_mobius(members)
    e_top = edge_set.edge_count
    acc = Fraction(0)
    for gi, g_mask in enumerate(members):
        mu = mu_table[gi].get(0, 0)
        if mu:
            eg = g_mask.bit_count()
            acc += (1 - alpha_bar) ** (e_top - eg) * (-1) ** eg * mu * alpha_bar**eg
    return acc


def residual(
    edge_set: EdgeSet, allowed: AllowedSet, budget: int = DEFAULT_BUDGET
) -> Fraction:
    """Exact gap between the allowed probability and its main term."""
    return gamma_cyclespace(edge_set, allowed, budget) - main_term(
        edge_set, allowed.alpha_bar
    )


def residual_order_ratio(
    edge_set: EdgeSet, allowed: AllowedSet, budget: int = DEFAULT_BUDGET
) -> Fraction:
    """Residual divided by alpha_bar^(girth - 1): the empirical constant in
    the girth-order bound. Needs a nonempty edge set and alpha_bar > 0."""
    g = girth(edge_set)
    if g == float("inf"):
        raise ValueError("empty edge set: the main term is already exact")
    ab = allowed.alpha_bar
    if ab == 0:
        raise ValueError("alpha_bar is zero; the bound is vacuous")
    return residual(edge_set, allowed, budget) / ab ** (g - 1)


def chromatic_via_transfer(edge_set: EdgeSet) -> RationalPoly:
    """Chromatic polynomial of an isthmus-free edge set from the transfer
    matrix at r = 1/f applied to the component-count weights f^c.

    All negative powers of f must cancel and every coefficient must be an
    integer; anything else signals a transfer matrix bug.
    """
    if not is_isthmus_free(edge_set):
        raise ValueError(
            "transfer specialization needs an isthmus-free edge set; "
            "use the deletion-contraction oracle instead"
        )
    v = edge_set.v
    members = _interval_members(edge_set)
    mu_table = _local_mobius(members)
    e_top = edge_set.edge_count
    comp = {m: components(EdgeSet(v, m)) for m in members}
    laurent: dict[int, int] = {}
    for gi, g_mask in enumerate(members):
        eg = g_mask.bit_count()
        sign = (-1) ** eg
        spread = e_top - eg  # (1 - 1/f)^spread
        for hi, mu in mu_table[gi].items():
            if not mu:
                continue
            h_mask = members[hi]
            eh = h_mask.bit_count()
            base = comp[h_mask] - (eg - eh)
            for i in range(spread + 1):
                key = base - i
                laurent[key] = laurent.get(key, 0) + sign * mu * comb(spread, i) * (-1) ** i
    bad = {k: c for k, c in laurent.items() if c and k < 0}
    if bad:
        raise ArithmeticError(f"negative powers survive in chromatic specialization: {bad}")
    top = max((k for k, c in laurent.items() if c), default=0)
    return RationalPoly.of([laurent.get(k, 0) for k in range(top + 1)])


# ---------------------------------------------------------------------------
# Worked-example closed forms.


def triangle_gamma_from_pairs(allowed: AllowedSet) -> Fraction:
    """Triangle coordinate by enumerating difference pairs inside the set:
    (a, b) with a, b, a + b all allowed, over f^2. Exact, and cheap when
    the set is small even if the group is big."""
    group = allowed.group
    add = group.add
    members = allowed.indices()
    contains = allowed.contains_index
    count = sum(1 for a in members for b in members if contains(add(a, b)))
    return Fraction(count, group.order**2)


def hamming_k3_closed_form(n: int) -> tuple[Fraction, Fraction]:
    """Reference closed forms for the triangle coordinate in (Z/2)^n at
    weight threshold k = 1: (complement value, allowed value).

    The complement form (3n + 1)/4^n is correct. The allowed-value form
    reproduced here verbatim is internally inconsistent: the value forced
    by reciprocity is larger by exactly 2/4^n (see
    hamming_k3_from_reciprocity). Both are kept so reports can show the
    discrepancy instead of silently repairing it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    gamma_bar = Fraction(3 * n + 1, 4**n)
    gamma = 1 - Fraction(3 * n + 3, 2**n) + Fraction(3 * n * n + 3 * n, 4**n)
    return gamma_bar, gamma


def hamming_k3_from_reciprocity(n: int) -> Fraction:
    """Triangle coordinate at k = 1 obtained by pushing the complement
    closed form through the triangle transfer row: equals
    1 - (3n+3)/2^n + (3n^2 + 3n + 2)/4^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha_bar = Fraction(n + 1, 2**n)
    gamma_bar = Fraction(3 * n + 1, 4**n)
    return (1 - 3 * alpha_bar + 3 * alpha_bar**2) - gamma_bar
