"""Exact rational polynomials and the incidence-algebra matrices on the
poset of bridgeless edge sets: zeta, Mobius, the edge-weighted zeta matrix
and the reciprocity transfer matrix built from it.

Matrix orientation: entry(h, e) multiplies coordinate e and contributes to
coordinate h, so (M x)_H = sum_E entry(H, E) x_E. With the empty graph
first in the linear extension, every matrix here is lower triangular.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:  # pragma: no cover
    from .graphs import SubgraphPoset

Rational = Fraction

RationalMatrix = tuple[tuple[Fraction, ...], ...]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class RationalPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are ascending; no trailing zeros are stored, so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use RationalPoly.of")

    @classmethod
    def of(cls, coefficients) -> "RationalPoly":
        coeffs = [_as_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls.of([c])

    @classmethod
    def monomial(cls, power: int, c=1) -> "RationalPoly":
        if power < 0:
            raise ValueError("negative power")
        return cls.of([0] * power + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly.of(out)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly.of(out)

    __rmul__ = __mul__

    def scale(self, c) -> "RationalPoly":
        c = _as_fraction(c)
        if c == 0:
            return RationalPoly.zero()
        return RationalPoly(tuple(c * a for a in self.coeffs))

    def __pow__(self, n: int) -> "RationalPoly":
        if n < 0:
            raise ValueError("negative power")
        result = RationalPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "RationalPoly") -> "RationalPoly":
        """Substitute another polynomial for the variable."""
        acc = RationalPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + RationalPoly.constant(c)
        return acc

    def render(self, var: str = "r") -> str:
        """Canonical ascending form, e.g. "1 - 5r + 10r^2 - 8r^3"."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                vk = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = vk
                elif mag.denominator == 1:
                    body = f"{mag}{vk}"
                else:
                    body = f"({mag}){vk}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RationalPoly({self.render()})"


_ZERO = RationalPoly.zero()
_ONE = RationalPoly.constant(1)

# the formal variable itself
VARIABLE = RationalPoly.monomial(1)


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of rational polynomials indexed by a subgraph poset."""

    poset: "SubgraphPoset"
    entries: tuple[tuple[RationalPoly, ...], ...]

    def __post_init__(self):
        n = len(self.poset)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("entry grid does not match poset size")

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, h: int, e: int) -> RationalPoly:
        return self.entries[h][e]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.poset is not self.poset and other.poset != self.poset:
            raise ValueError("matrices over different posets")
        n = self.n
        rows = []
        for h in range(n):
            row = []
            for e in range(n):
                acc = _ZERO
                for g in range(n):
                    a = self.entries[h][g]
                    if not a.is_zero and not other.entries[g][e].is_zero:
                        acc = acc + a * other.entries[g][e]
                row.append(acc)
            rows.append(tuple(row))
        return PolyMatrix(self.poset, tuple(rows))

    def substitute(self, inner: RationalPoly) -> "PolyMatrix":
        return PolyMatrix(
            self.poset,
            tuple(tuple(p.compose(inner) for p in row) for row in self.entries),
        )

    def evaluate(self, r) -> RationalMatrix:
        r = _as_fraction(r)
        return tuple(tuple(p(r) for p in row) for row in self.entries)

    def render_rows(self, var: str = "r", paper_order: bool = False) -> list[list[str]]:
        """Rows of polynomial strings; paper_order lists the complete graph
        first (reversed linear extension) for side-by-side comparison."""
        idx = range(self.n - 1, -1, -1) if paper_order else range(self.n)
        return [[self.entries[h][e].render(var) for e in idx] for h in idx]

    def is_identity(self) -> bool:
        for h in range(self.n):
            for e in range(self.n):
                want = _ONE if h == e else _ZERO
                if self.entries[h][e] != want:
                    return False
        return True


def identity_matrix(poset: "SubgraphPoset") -> PolyMatrix:
    n = len(poset)
    return PolyMatrix(
        poset, tuple(tuple(_ONE if h == e else _ZERO for e in range(n)) for h in range(n))
    )


def zeta_matrix(poset: "SubgraphPoset") -> PolyMatrix:
    """Containment indicator: entry(H, E) = 1 iff E is a subgraph of H."""
    n = len(poset)
    rows = [[_ZERO] * n for _ in range(n)]
    for h in range(n):
        for e in poset.down_sets[h]:
            rows[h][e] = _ONE
    return PolyMatrix(poset, tuple(tuple(row) for row in rows))


@lru_cache(maxsize=None)
def mobius_table(poset: "SubgraphPoset") -> tuple[dict[int, int], ...]:
    """mu(E, H) for every pair E <= H, as one dict per H keyed by E index.

    Uses mu(E, H) = -sum over E < G <= H of mu(G, H); iterating E downward
    along the linear extension keeps every needed value available.
    """
    table: list[dict[int, int]] = []
    for h in range(len(poset)):
        down = poset.down_sets[h]
        mu_h: dict[int, int] = {h: 1}
        for e in reversed(down[:-1]):
            acc = 0
            for g in down:
                if g != e and poset.leq(e, g):
                    acc += mu_h[g]
            mu_h[e] = -acc
        table.append(mu_h)
    return tuple(table)


def mobius_matrix(poset: "SubgraphPoset") -> PolyMatrix:
    """Exact inverse of the zeta matrix; entries are Mobius values."""
    n = len(poset)
    table = mobius_table(poset)
    rows = [[_ZERO] * n for _ in range(n)]
    for h in range(n):
        for e, mu in table[h].items():
            if mu:
                rows[h][e] = RationalPoly.constant(mu)
    return PolyMatrix(poset, tuple(tuple(row) for row in rows))


def weighted_zeta_matrix(poset: "SubgraphPoset") -> PolyMatrix:
    """Edge-weighted zeta: entry(H, E) = r^(|H| - |E|) when E <= H."""
    n = len(poset)
    sizes = poset.sizes
    rows = [[_ZERO] * n for _ in range(n)]
    for h in range(n):
        for e in poset.down_sets[h]:
            rows[h][e] = RationalPoly.monomial(sizes[h] - sizes[e])
    return PolyMatrix(poset, tuple(tuple(row) for row in rows))


def weighted_zeta_inverse(poset: "SubgraphPoset") -> PolyMatrix:
    """Inverse of the weighted zeta: entry(H, E) = mu(E, H) r^(|H| - |E|)."""
    n = len(poset)
    sizes = poset.sizes
    table = mobius_table(poset)
    rows = [[_ZERO] * n for _ in range(n)]
    for h in range(n):
        for e, mu in table[h].items():
            if mu:
                rows[h][e] = RationalPoly.monomial(sizes[h] - sizes[e], mu)
    return PolyMatrix(poset, tuple(tuple(row) for row in rows))


def sign_diagonal(poset: "SubgraphPoset") -> PolyMatrix:
    """Diagonal matrix with entry (-1)^(edge count) per poset member."""
    n = len(poset)
    rows = [[_ZERO] * n for _ in range(n)]
    for h in range(n):
        rows[h][h] = RationalPoly.constant((-1) ** poset.sizes[h])
    return PolyMatrix(poset, tuple(tuple(row) for row in rows))


def transfer_matrix(poset: "SubgraphPoset") -> PolyMatrix:
    """Reciprocity transfer matrix: weighted zeta at (1 - r), times the
    parity sign diagonal, times the inverse weighted zeta at r.

    Exact polynomial product throughout; intended for v <= 4 where the
    poset is small. For larger posets evaluate at rational points with
    transfer_at instead.
    """
    one_minus_r = RationalPoly.of([1, -1])
    j_at_complement = weighted_zeta_matrix(poset).substitute(one_minus_r)
    return j_at_complement @ sign_diagonal(poset) @ weighted_zeta_inverse(poset)


def evaluate(matrix: PolyMatrix, r) -> RationalMatrix:
    """Entrywise exact evaluation at a rational point."""
    return matrix.evaluate(r)


# ---------------------------------------------------------------------------
# Evaluated (rational, not symbolic) fast paths. These only touch chains
# E <= G <= H of the poset, which keeps v = 5 runs quick.


def _power_table(x: Fraction, max_power: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(max_power):
        out.append(out[-1] * x)
    return out


def weighted_zeta_at(poset: "SubgraphPoset", r) -> RationalMatrix:
    r = _as_fraction(r)
    n = len(poset)
    sizes = poset.sizes
    powers = _power_table(r, max(sizes, default=0))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for h in range(n):
        for e in poset.down_sets[h]:
            rows[h][e] = powers[sizes[h] - sizes[e]]
    return tuple(tuple(row) for row in rows)


def weighted_zeta_inverse_at(poset: "SubgraphPoset", r) -> RationalMatrix:
    r = _as_fraction(r)
    n = len(poset)
    sizes = poset.sizes
    table = mobius_table(poset)
    powers = _power_table(r, max(sizes, default=0))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for h in range(n):
        for e, mu in table[h].items():
            rows[h][e] = mu * powers[sizes[h] - sizes[e]]
    return tuple(tuple(row) for row in rows)


def transfer_at(poset: "SubgraphPoset", r) -> RationalMatrix:
    """Transfer matrix evaluated exactly at a rational point via chain sums."""
    r = _as_fraction(r)
    n = len(poset)
    sizes = poset.sizes
    table = mobius_table(poset)
    max_e = max(sizes, default=0)
    r_pow = _power_table(r, max_e)
    s_pow = _power_table(1 - r, max_e)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for h in range(n):
        for g in poset.down_sets[h]:
            weight = s_pow[sizes[h] - sizes[g]] * (-1) ** sizes[g]
            for e, mu in table[g].items():
                if mu:
                    rows[h][e] += weight * mu * r_pow[sizes[g] - sizes[e]]
    return tuple(tuple(row) for row in rows)


def matmul_rational(poset: "SubgraphPoset", a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Product of two poset-supported rational matrices (lower triangular
    with support on comparable pairs); iterates only over chains."""
    n = len(poset)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for h in range(n):
        a_row = a[h]
        for g in poset.down_sets[h]:
            coeff = a_row[g]
            if coeff:
                b_row = b[g]
                out = rows[h]
                for e in poset.down_sets[g]:
                    if b_row[e]:
                        out[e] += coeff * b_row[e]
    return tuple(tuple(row) for row in rows)


def matvec_rational(matrix: RationalMatrix, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum(row[e] * vec[e] for e in range(len(vec))) for row in matrix)


def is_identity_rational(matrix: RationalMatrix) -> bool:
    return all(
        matrix[h][e] == (1 if h == e else 0)
        for h in range(len(matrix))
        for e in range(len(matrix))
    )
