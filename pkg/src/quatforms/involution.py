"""Toral elements and their root centralizers.

A toral element is a torus point written as integer coordinates over a
denominator d; a root pairs with it to a residue mod d and the centralizer
is the set of roots pairing to zero.  Two coordinate bases are supported:

* ``coroot``: the element is exp(2*pi*i/d * sum c_i alpha_i-check), so a
  root alpha pairs as sum c_i * <alpha, alpha_i-check> mod d;
* ``coweight``: the element is exp(2*pi*i/d * sum c_i w_i-check) with w_i
  the fundamental coweights, so alpha pairs as sum c_i * n_i(alpha) mod d
  (the plain coefficient sum).

The bases are interchangeable through the Cartan matrix; with denominator 2
the coweight vectors in {0,1}^rank exhaust the inner involutions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import Root, RootSystem
from .subsys import Subsystem

COROOT = "coroot"
COWEIGHT = "coweight"


@dataclass(frozen=True)
class ToralElement:
    """Integer coordinates over a denominator, in a named basis."""

    coords: tuple[int, ...]
    denom: int = 2
    basis: str = COROOT

    def __post_init__(self) -> None:
        if self.denom < 1:
            raise ValueError("denominator must be a positive integer")
        if self.basis not in (COROOT, COWEIGHT):
            raise ValueError(f"unknown basis {self.basis!r}; use coroot or coweight")
        object.__setattr__(
            self, "coords", tuple(c % self.denom for c in self.coords)
        )

    @property
    def is_identity(self) -> bool:
        return self.denom == 1 or not any(self.coords)

    def describe(self) -> str:
        return (
            ",".join(str(c) for c in self.coords)
            + f" (denom {self.denom}, {self.basis} basis)"
        )


def _check_rank(rs: RootSystem, t: ToralElement) -> None:
    if len(t.coords) != rs.rank:
        raise ValueError(
            f"toral element has {len(t.coords)} coordinates, expected {rs.rank}"
        )


def pairing(rs: RootSystem, t: ToralElement, alpha: Root) -> int:
    """Residue mod denom of the root alpha against the toral element."""
    _check_rank(rs, t)
    if not rs.is_root(alpha):
        raise ValueError(f"{alpha} is not a root of {rs.type.label}")
    if t.basis == COWEIGHT:
        total = sum(c * n for c, n in zip(t.coords, alpha))
    else:
        row = rs._coroot_rows[alpha]
        total = sum(c * p for c, p in zip(t.coords, row))
    return total % t.denom


def convert_to_coweight(rs: RootSystem, t: ToralElement) -> ToralElement:
    """Re-express a coroot-basis element in the coweight basis.

    The new coordinates are c' = A c (Cartan matrix times the old ones),
    which leaves the pairing of every root unchanged.
    """
    _check_rank(rs, t)
    if t.basis != COROOT:
        raise ValueError("convert_to_coweight expects a coroot-basis element")
    n = rs.rank
    coords = tuple(
        sum(rs.cartan[j][i] * t.coords[i] for i in range(n)) % t.denom
        for j in range(n)
    )
    return ToralElement(coords, t.denom, COWEIGHT)


def centralizer_roots(rs: RootSystem, t: ToralElement) -> frozenset[Root]:
    """Roots pairing to zero mod denom, as a plain set."""
    _check_rank(rs, t)
    d = t.denom
    if t.basis == COWEIGHT:
        c = t.coords
        return frozenset(
            r for r in rs.root_set if sum(x * n for x, n in zip(c, r)) % d == 0
        )
    c = t.coords
    rows = rs._coroot_rows
    return frozenset(
        r for r in rs.root_set if sum(x * p for x, p in zip(c, rows[r])) % d == 0
    )


def centralizer(rs: RootSystem, t: ToralElement) -> Subsystem:
    """Centralizer subsystem of a toral element.

    Pairing is additive on roots, so the result is closed and symmetric;
    Subsystem construction asserts both.
    """
    return Subsystem(rs, centralizer_roots(rs, t))
