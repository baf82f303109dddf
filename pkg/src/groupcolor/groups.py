"""Finite Abelian groups, their characters, and symmetric allowed-difference sets.

Groups are products of cyclic factors Z/n_1 x ... x Z/n_m. Elements are
indexed 0..f-1 by a mixed-radix encoding (first factor most significant),
so index 0 is always the identity and all tables are reproducible.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb, prod

DEFAULT_MAX_ORDER = 4096

# Above this order the generic add() falls back to tuple arithmetic instead
# of a precomputed f x f table.
_ADD_TABLE_LIMIT = 512


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups; houses the color set of size ``order``."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        if len(self.cyclic_orders) == 0:
            raise ValueError("group needs at least one cyclic factor")
        bad = [n for n in self.cyclic_orders if n < 2]
        if bad:
            raise ValueError(f"cyclic orders must be >= 2, got {bad}")

    @cached_property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @cached_property
    def _weights(self) -> tuple[int, ...]:
        # mixed-radix place values, most significant factor first
        weights = []
        w = 1
        for n in reversed(self.cyclic_orders):
            weights.append(w)
            w *= n
        return tuple(reversed(weights))

    def residues_of(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.order:
            raise ValueError(f"element index {index} out of range 0..{self.order - 1}")
        out = []
        for n, w in zip(self.cyclic_orders, self._weights):
            out.append((index // w) % n)
        return tuple(out)

    def index_of(self, residues: tuple[int, ...]) -> int:
        if len(residues) != len(self.cyclic_orders):
            raise ValueError("residue tuple has wrong length for this group")
        idx = 0
        for r, n, w in zip(residues, self.cyclic_orders, self._weights):
            idx += (r % n) * w
        return idx

    @cached_property
    def _mode(self) -> str:
        if len(self.cyclic_orders) == 1:
            return "cyclic"
        if all(n == 2 for n in self.cyclic_orders):
            return "xor"
        return "mixed"

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self._mode != "mixed" or self.order > _ADD_TABLE_LIMIT:
            return None
        tuples = [self.residues_of(i) for i in range(self.order)]
        table = []
        for a in tuples:
            row = [
                self.index_of(tuple((x + y) % n for x, y, n in zip(a, b, self.cyclic_orders)))
                for b in tuples
            ]
            table.append(row)
        return table

    def add(self, a: int, b: int) -> int:
        """Group law on element indices."""
        if self._mode == "cyclic":
            return (a + b) % self.order
        if self._mode == "xor":
            return a ^ b
        table = self._add_table
        if table is not None:
            return table[a][b]
        ra, rb = self.residues_of(a), self.residues_of(b)
        return self.index_of(tuple((x + y) % n for x, y, n in zip(ra, rb, self.cyclic_orders)))

    @cached_property
    def _neg_table(self) -> tuple[int, ...]:
        if self._mode == "cyclic":
            f = self.order
            return tuple((-i) % f for i in range(f))
        if self._mode == "xor":
            return tuple(range(self.order))
        return tuple(
            self.index_of(tuple((-r) % n for r, n in zip(self.residues_of(i), self.cyclic_orders)))
            for i in range(self.order)
        )

    def neg(self, a: int) -> int:
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def element(self, spec) -> "GroupElement":
        """Coerce an index, residue tuple, or GroupElement into an element."""
        if isinstance(spec, GroupElement):
            if spec.group != self:
                raise ValueError("element belongs to a different group")
            return spec
        if isinstance(spec, int):
            return GroupElement(self, self.residues_of(spec))
        if isinstance(spec, (tuple, list)):
            residues = tuple(r % n for r, n in zip(spec, self.cyclic_orders))
            if len(residues) != len(self.cyclic_orders):
                raise ValueError("residue tuple has wrong length for this group")
            return GroupElement(self, residues)
        raise TypeError(f"cannot interpret {spec!r} as a group element")

    def elements(self):
        for i in range(self.order):
            yield GroupElement(self, self.residues_of(i))

    def characters(self):
        """All characters, indexed like elements (self-dual choice)."""
        for i in range(self.order):
            yield Character(self, self.residues_of(i))

    def __repr__(self):
        return f"FiniteAbelianGroup({list(self.cyclic_orders)})"


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    residues: tuple[int, ...]

    @property
    def index(self) -> int:
        return self.group.index_of(self.residues)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        res = tuple((a + b) % n for a, b, n in zip(self.residues, other.residues, self.group.cyclic_orders))
        return GroupElement(self.group, res)

    def __neg__(self) -> "GroupElement":
        res = tuple((-a) % n for a, n in zip(self.residues, self.group.cyclic_orders))
        return GroupElement(self.group, res)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __repr__(self):
        return f"GroupElement{self.residues}"


@dataclass(frozen=True)
class Character:
    """Character of the group, written additively through the dual residues."""

    group: FiniteAbelianGroup
    residues: tuple[int, ...]

    @property
    def index(self) -> int:
        return self.group.index_of(self.residues)

    def __repr__(self):
        return f"Character{self.residues}"


def pairing(p: Character, q: GroupElement) -> complex:
    """Canonical unit-modulus pairing exp(2*pi*i * sum_i p_i q_i / n_i)."""
    if p.group != q.group:
        raise ValueError("character and element belong to different groups")
    phase = Fraction(0)
    for pi, qi, n in zip(p.residues, q.residues, p.group.cyclic_orders):
        phase += Fraction(pi * qi, n)
    phase -= math.floor(phase)
    return cmath.exp(2j * math.pi * float(phase))


def pairing_by_index(group: FiniteAbelianGroup, p: int, q: int) -> complex:
    """Pairing on raw element indices; hot path for Fourier sums."""
    phase = Fraction(0)
    for pi, qi, n in zip(group.residues_of(p), group.residues_of(q), group.cyclic_orders):
        phase += Fraction(pi * qi, n)
    phase -= math.floor(phase)
    return cmath.exp(2j * math.pi * float(phase))


@dataclass(frozen=True)
class AllowedSet:
    """Symmetric subset A = -A of a group, stored as a membership bitmask."""

    group: FiniteAbelianGroup
    mask: int

    def __post_init__(self):
        f = self.group.order
        if not 0 <= self.mask < (1 << f):
            raise ValueError("membership mask out of range for group order")
        for i in range(f):
            if (self.mask >> i) & 1 and not (self.mask >> self.group.neg(i)) & 1:
                el = self.group.residues_of(i)
                raise ValueError(
                    f"allowed set is not symmetric: {el} is in A but its negation is not"
                )

    @cached_property
    def size(self) -> int:
        return self.mask.bit_count()

    @cached_property
    def alpha(self) -> Fraction:
        """Density |A| / f as an exact rational."""
        return Fraction(self.size, self.group.order)

    @property
    def alpha_bar(self) -> Fraction:
        return 1 - self.alpha

    def complement(self) -> "AllowedSet":
        full = (1 << self.group.order) - 1
        return AllowedSet(self.group, self.mask ^ full)

    def contains_index(self, i: int) -> bool:
        return bool((self.mask >> i) & 1)

    def __contains__(self, item) -> bool:
        if isinstance(item, GroupElement):
            return self.contains_index(item.index)
        if isinstance(item, int):
            return self.contains_index(item)
        return self.contains_index(self.group.index_of(tuple(item)))

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.group.order) if self.contains_index(i))

    def elements(self):
        for i in self.indices():
            yield GroupElement(self.group, self.group.residues_of(i))

    def __repr__(self):
        return f"AllowedSet(size={self.size}, f={self.group.order})"


def make_group(cyclic_orders, max_order: int = DEFAULT_MAX_ORDER) -> FiniteAbelianGroup:
    """Build a product of cyclic groups; rejects orders < 2 and huge groups."""
    group = FiniteAbelianGroup(tuple(int(n) for n in cyclic_orders))
    if group.order > max_order:
        raise ValueError(f"group order {group.order} exceeds cap {max_order}")
    return group


def allowed_interval(group: FiniteAbelianGroup, k: int) -> AllowedSet:
    """For cyclic Z/f: allow differences x with k < x < f - k.

    The complement is the interval [-k, k] of size 2k + 1, so the allowed
    set consists of the colors at circular distance more than k.
    """
    if len(group.cyclic_orders) != 1:
        raise ValueError("interval allowed sets need a single cyclic factor")
    f = group.order
    if k < 0:
        raise ValueError("k must be >= 0")
    if 2 * k + 1 > f:
        raise ValueError(f"2k+1 = {2 * k + 1} exceeds group order {f}")
    mask = 0
    for x in range(f):
        if k < x < f - k:
            mask |= 1 << x
    return AllowedSet(group, mask)


def allowed_hamming(n: int, k: int) -> AllowedSet:
    """In (Z/2)^n: allow differences of Hamming weight strictly above k."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n:
        raise ValueError(f"k must be in 0..{n}, got {k}")
    group = make_group([2] * n)
    mask = 0
    for i in range(group.order):
        if sum(group.residues_of(i)) > k:
            mask |= 1 << i
    return AllowedSet(group, mask)


def allowed_complement_identity(group: FiniteAbelianGroup) -> AllowedSet:
    """A = F - {0}: all differences except equality (proper colorings)."""
    full = (1 << group.order) - 1
    return AllowedSet(group, full ^ 1)


def allowed_explicit(group: FiniteAbelianGroup, elements) -> AllowedSet:
    """Allowed set from listed elements (indices, residue tuples, or elements).

    Symmetry A = -A is validated; the offending element is reported.
    """
    mask = 0
    for spec in elements:
        mask |= 1 << group.element(spec).index
    return AllowedSet(group, mask)


def character_sum(allowed: AllowedSet, p: Character | int) -> complex:
    """sum_{q in A} <p, q> over the allowed set."""
    group = allowed.group
    p_idx = p.index if isinstance(p, Character) else p
    return sum(pairing_by_index(group, p_idx, q) for q in allowed.indices())


def hamming_weight_tail(n: int, k: int) -> Fraction:
    """Exact density of weight > k in (Z/2)^n, i.e. alpha for allowed_hamming."""
    return Fraction(sum(comb(n, w) for w in range(k + 1, n + 1)), 2**n)
