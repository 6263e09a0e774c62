"""Root systems of the simple Lie algebras, in simple-root coordinates.

A root is an integer coefficient vector over the simple roots.  Simple roots
are numbered 1..rank following Bourbaki (plates I-IX); all public indices in
this package are 1-based Bourbaki indices.  Long roots are normalized to
squared length 2, so coroot pairings of short roots stay integral in the
non-simply-laced families.

The highest root defines a grading by its attach node(s) in the extended
diagram: grade 1 cuts out the tangent part of the quaternionic symmetric
space attached to the algebra, grade 0 and 2 its isotropy part.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

Root = tuple[int, ...]

FAMILIES = "ABCDEFG"

# Lower rank bounds per family; B2 and C2 are both accepted (they are the
# same diagram with opposite numbering).
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "F": 4, "G": 2}
_E_RANKS = (6, 7, 8)

# Desk-scale cap for the classical families; exceptional types are fixed.
CLASSICAL_RANK_CAP = 10

_TYPE_RE = re.compile(r"^([A-Za-z])([0-9]+)$")


class InvalidTypeError(ValueError):
    """Raised for unknown families or out-of-range ranks."""


class GradingError(ValueError):
    """Raised when a root system admits no quaternionic node grading."""


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple Cartan type: family letter A-G plus rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidTypeError(
                f"unknown family {self.family!r}; valid families are A-G"
            )
        if self.family == "E":
            if self.rank not in _E_RANKS:
                raise InvalidTypeError(
                    f"rank {self.rank} out of range for family E; valid ranks are 6, 7, 8"
                )
        elif self.family == "F":
            if self.rank != 4:
                raise InvalidTypeError(
                    f"rank {self.rank} out of range for family F; the only valid rank is 4"
                )
        elif self.family == "G":
            if self.rank != 2:
                raise InvalidTypeError(
                    f"rank {self.rank} out of range for family G; the only valid rank is 2"
                )
        else:
            lo = _MIN_RANK[self.family]
            if not lo <= self.rank <= CLASSICAL_RANK_CAP:
                raise InvalidTypeError(
                    f"rank {self.rank} out of range for family {self.family}; "
                    f"valid ranks are {lo}..{CLASSICAL_RANK_CAP}"
                )

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.label


def parse_type(label: str) -> SimpleType:
    """Parse a type label such as ``"E8"`` or ``"B5"`` into a SimpleType."""
    m = _TYPE_RE.match(label.strip())
    if not m:
        raise InvalidTypeError(
            f"cannot parse type label {label!r}; expected a family letter A-G "
            "followed by a rank, e.g. E8"
        )
    family = m.group(1).upper()
    if family not in FAMILIES:
        raise InvalidTypeError(
            f"unknown family {family!r}; valid families are A-G"
        )
    return SimpleType(family, int(m.group(2)))


def _cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix A[i][j] = <alpha_i, alpha_j-check>, 0-based."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if t.family == "A":
        for i in range(n - 1):
            edge(i, i + 1)
    elif t.family == "B":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -2, -1)  # alpha_n short
    elif t.family == "C":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 2, n - 1, -1, -2)  # alpha_n long
    elif t.family == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif t.family == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            edge(i, j)
        if n >= 7:
            edge(5, 6)
        if n == 8:
            edge(6, 7)
    elif t.family == "F":
        edge(0, 1)
        edge(1, 2, -2, -1)  # alpha_3, alpha_4 short
        edge(2, 3)
    else:  # G2: alpha_1 short, alpha_2 long
        edge(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


def _squared_lengths(cartan: tuple[tuple[int, ...], ...]) -> tuple[Fraction, ...]:
    """Squared lengths of the simple roots, long roots normalized to 2.

    Length ratios follow from the Cartan matrix: |a_j|^2 / |a_i|^2 =
    A[j][i] / A[i][j] for every edge (i, j); the diagram is connected,
    so one propagation pass determines all ratios.
    """
    n = len(cartan)
    lengths = {0: Fraction(1)}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and j not in lengths:
                lengths[j] = lengths[i] * Fraction(cartan[j][i], cartan[i][j])
                stack.append(j)
    assert len(lengths) == n, "Dynkin diagram must be connected"
    top = max(lengths.values())
    return tuple(lengths[i] * 2 / top for i in range(n))


def _vadd(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _vneg(a: Root) -> Root:
    return tuple(-x for x in a)


def _generate_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> list[Root]:
    """Positive roots via root-string extension from the simple roots.

    Working height by height, alpha + alpha_i is adjoined exactly when the
    alpha_i-string through alpha does not stop at alpha: with p the largest
    k such that alpha - k*alpha_i is a root, the string extends upward by
    q = p - <alpha, alpha_i-check> steps.
    """
    n = len(cartan)
    simples: list[Root] = [
        tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
    ]
    known: set[Root] = set(simples)
    layer = list(simples)
    while layer:
        next_layer: list[Root] = []
        for alpha in layer:
            for i, alpha_i in enumerate(simples):
                pairing = sum(alpha[j] * cartan[j][i] for j in range(n))
                p = 0
                beta = _vsub(alpha, alpha_i)
                while beta in known:
                    p += 1
                    beta = _vsub(beta, alpha_i)
                if p - pairing > 0:
                    new = _vadd(alpha, alpha_i)
                    if new not in known:
                        known.add(new)
                        next_layer.append(new)
        layer = next_layer
    return sorted(known, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class RootSystem:
    """A simple root system with its Cartan data and highest root.

    Immutable; positive roots are ordered by height then lexicographically
    by coefficients, which places the highest root last.
    """

    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    root_lengths: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def root_set(self) -> frozenset[Root]:
        """All roots, positive and negative."""
        return frozenset(self.positive_roots) | frozenset(
            _vneg(r) for r in self.positive_roots
        )

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))

    @cached_property
    def _coroot_rows(self) -> dict[Root, tuple[int, ...]]:
        """Per root, its pairings with every simple coroot (0-based columns)."""
        n = self.rank
        cols = tuple(tuple(self.cartan[j][i] for j in range(n)) for i in range(n))
        table: dict[Root, tuple[int, ...]] = {}
        for r in self.root_set:
            table[r] = tuple(
                sum(r[j] * col[j] for j in range(n)) for col in cols
            )
        return table

    def is_root(self, v: Root) -> bool:
        return v in self.root_set

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RootSystem({self.type.label}, {len(self.positive_roots)} positive roots)"


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """Construct the root system of a simple type.

    The result is cached and shared: RootSystem is immutable and all
    operations on it are pure.
    """
    cartan = _cartan_matrix(t)
    pos = _generate_positive_roots(cartan)
    highest = pos[-1]
    top_height = sum(highest)
    assert sum(1 for r in pos if sum(r) == top_height) == 1, "highest root not unique"
    rs = RootSystem(
        type=t,
        cartan=cartan,
        positive_roots=tuple(pos),
        highest_root=highest,
        root_lengths=_squared_lengths(cartan),
    )
    assert all(not rs.is_root(_vadd(highest, s)) for s in rs.simple_roots)
    return rs


def coroot_pairing(rs: RootSystem, alpha: Root, i: int) -> int:
    """Cartan pairing <alpha, alpha_i-check> for a root alpha, i 1-based."""
    if not rs.is_root(alpha):
        raise ValueError(f"{alpha} is not a root of {rs.type.label}")
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple root index {i} out of range 1..{rs.rank}")
    return rs._coroot_rows[alpha][i - 1]


def symmetrized_inner(rs: RootSystem, a: Root, b: Root) -> Fraction:
    """Weyl-invariant inner product (a, b), long roots of squared length 2."""
    rows = rs._coroot_rows
    row_a = rows.get(a)
    if row_a is None:
        row_a = tuple(
            sum(a[j] * rs.cartan[j][i] for j in range(rs.rank))
            for i in range(rs.rank)
        )
    total = Fraction(0)
    for i in range(rs.rank):
        if b[i]:
            total += b[i] * (rs.root_lengths[i] / 2) * row_a[i]
    return total


def pairing_with_coroot(rs: RootSystem, a: Root, b: Root) -> int:
    """Integer Cartan pairing <a, b-check> = 2(a,b)/(b,b) of two roots."""
    val = 2 * symmetrized_inner(rs, a, b) / symmetrized_inner(rs, b, b)
    assert val.denominator == 1, f"non-integral pairing {val} for {a}, {b}"
    return int(val)


def node_set(rs: RootSystem) -> frozenset[int]:
    """Simple roots attached to the negative of the highest root (1-based).

    This is the set of i with <highest, alpha_i-check> > 0.  It is a
    singleton except for diagrams of A shape (family A at rank >= 2, and
    D3 which is A3 renumbered), where both chain ends appear and grades
    add over the pair.
    """
    if rs.rank < 2:
        raise GradingError(
            f"no quaternionic node grading for {rs.type.label} (rank 1)"
        )
    row = rs._coroot_rows[rs.highest_root]
    return frozenset(i + 1 for i in range(rs.rank) if row[i] > 0)


def grade(rs: RootSystem, nodes: frozenset[int] | set[int], alpha: Root) -> int:
    """Sum of alpha's coefficients over the node set (1-based indices)."""
    return sum(alpha[i - 1] for i in nodes)


@dataclass(frozen=True)
class GradedDecomposition:
    """Split of the positive roots by node grade.

    Grade 1 spans the tangent space of the quaternionic symmetric space
    G/K built on the highest root; grades 0 and 2 span the isotropy
    algebra.  The highest root is the unique root of grade 2.
    """

    node_set: frozenset[int]
    k_pos: tuple[Root, ...]
    m_pos: tuple[Root, ...]
    quaternionic_dim: int


def quaternionic_decomposition(rs: RootSystem) -> GradedDecomposition:
    """Grade the positive roots at the node set and split them into k and m."""
    nodes = node_set(rs)
    k_pos: list[Root] = []
    m_pos: list[Root] = []
    grade2: list[Root] = []
    for alpha in rs.positive_roots:
        g = grade(rs, nodes, alpha)
        assert 0 <= g <= 2, f"grade {g} out of range for {alpha}"
        if g == 1:
            m_pos.append(alpha)
        else:
            k_pos.append(alpha)
            if g == 2:
                grade2.append(alpha)
    assert grade2 == [rs.highest_root], "grade-2 part is not the highest root alone"
    assert len(m_pos) % 2 == 0
    return GradedDecomposition(
        node_set=nodes,
        k_pos=tuple(k_pos),
        m_pos=tuple(m_pos),
        quaternionic_dim=len(m_pos) // 2,
    )


def roots_to_json(roots: tuple[Root, ...] | list[Root]) -> list[list[int]]:
    """Serialize a root list as JSON-ready integer vectors."""
    return [list(r) for r in roots]
