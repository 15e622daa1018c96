"""Residuated structure on finite posets.

Residua are never postulated: they are derived from the multiplication
table through the adjointness condition

    x*y <= z  iff  x <= rres[y][z]  iff  y <= lres[z][x]

by taking the maximum (join, on lattices) of the candidate set, and the
full triple biconditional is re-verified afterwards, since pointwise
maxima alone do not imply it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np

from .orders import (
    FiniteLattice,
    FinitePoset,
    is_boolean,
    is_complemented,
    lattice_from_covers,
)
from .reports import LawReport, law_fail, law_pass


class ResiduationError(Exception):
    pass


class NoResiduum(ResiduationError):
    def __init__(self, pair: tuple, kind: str, detail: str):
        self.pair = tuple(pair)
        self.witness = self.pair
        self.kind = kind
        super().__init__(f"{kind} residuum undefined at {self.pair}: {detail}")


class AdjointnessFailure(ResiduationError):
    def __init__(self, witness: tuple):
        self.witness = tuple(witness)
        super().__init__(f"adjointness biconditional fails at {self.witness}")


class NotBoolean(Exception):
    pass


def as_mul_table(m, n: int) -> np.ndarray:
    """Validate an n x n multiplication table of element indices."""
    t = np.array(m, dtype=np.intp)
    if t.shape != (n, n):
        raise ValueError(f"multiplication table must be {n}x{n}, got {t.shape}")
    if t.min() < 0 or t.max() >= n:
        raise ValueError("multiplication table entry out of range")
    t.flags.writeable = False
    return t


def check_associative(m) -> LawReport:
    """PASS iff (x*y)*z = x*(y*z) for all triples."""
    t = np.asarray(m, dtype=np.intp)
    n = t.shape[0]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if t[t[x, y], z] != t[x, t[y, z]]:
                    return law_fail("associativity", (x, y, z))
    return law_pass("associativity")


@dataclass(frozen=True)
class Flags:
    commutative: bool
    idempotent: bool
    unit: Optional[int]
    integral: bool


@dataclass(frozen=True, eq=False)
class ResiduatedStructure:
    """A poset (or lattice) with multiplication and verified residua."""

    poset: FinitePoset
    mul: np.ndarray
    rres: np.ndarray  # rres[y, z] is the right residuum y -> z
    lres: np.ndarray  # lres[z, x] is the left residuum z <- x
    flags: Flags
    lattice: Optional[FiniteLattice] = None

    @property
    def n(self) -> int:
        return self.poset.n

    def label(self, i: int) -> str:
        return self.poset.label(i)


def _order_parts(order: Union[FinitePoset, FiniteLattice]):
    if isinstance(order, FiniteLattice):
        return order.poset, order
    return order, None


def derive_residua(order: Union[FinitePoset, FiniteLattice], mul) -> Tuple[np.ndarray, np.ndarray]:
    """Compute both residua tables from adjointness, or fail loudly.

    Raises NoResiduum when some candidate set is empty or has no maximum,
    and AdjointnessFailure when the tables exist pointwise but the triple
    biconditional does not hold (multiplication not monotone, say).
    """
    poset, lat = _order_parts(order)
    n, leq = poset.n, poset.leq
    t = as_mul_table(mul, n)

    def maximum(cand, pair, kind):
        if not cand:
            raise NoResiduum(pair, kind, "empty candidate set")
        if lat is not None:
            m = cand[0]
            for c in cand[1:]:
                m = int(lat.join[m, c])
            if m not in cand:
                raise NoResiduum(pair, kind, "candidate set has no maximum")
            return m
        for m in cand:
            if all(leq[c, m] for c in cand):
                return m
        raise NoResiduum(pair, kind, "candidate set has no maximum")

    rres = np.zeros((n, n), dtype=np.intp)
    lres = np.zeros((n, n), dtype=np.intp)
    for y in range(n):
        for z in range(n):
            rres[y, z] = maximum([x for x in range(n) if leq[t[x, y], z]], (y, z), "right")
    for z in range(n):
        for x in range(n):
            lres[z, x] = maximum([y for y in range(n) if leq[t[x, y], z]], (z, x), "left")

    for x in range(n):
        for y in range(n):
            for z in range(n):
                a = leq[t[x, y], z]
                if a != leq[x, rres[y, z]] or a != leq[y, lres[z, x]]:
                    raise AdjointnessFailure((x, y, z))
    rres.flags.writeable = False
    lres.flags.writeable = False
    return rres, lres


def classify(order: Union[FinitePoset, FiniteLattice], mul) -> Flags:
    """Exhaustively scan for commutativity, idempotency, unit, integrality."""
    poset, lat = _order_parts(order)
    n = poset.n
    t = np.asarray(mul, dtype=np.intp)
    commutative = bool((t == t.T).all())
    idempotent = all(t[i, i] == i for i in range(n))
    unit = None
    for e in range(n):
        if all(t[e, x] == x and t[x, e] == x for x in range(n)):
            unit = e
            break
    top = lat.top if lat is not None else next(
        (i for i in range(n) if poset.leq[:, i].all()), None
    )
    integral = unit is not None and unit == top
    return Flags(commutative, idempotent, unit, integral)


def residuated_structure(order: Union[FinitePoset, FiniteLattice], mul) -> ResiduatedStructure:
    """Derive residua, classify, and assemble a verified structure."""
    poset, lat = _order_parts(order)
    t = as_mul_table(mul, poset.n)
    rres, lres = derive_residua(order, t)
    return ResiduatedStructure(poset, t, rres, lres, classify(order, t), lat)


def check_integral_consequences(s: ResiduatedStructure) -> LawReport:
    """On integral structures, x*y must sit below both factors."""
    if not s.flags.integral:
        raise ValueError("structure is not integral")
    leq = s.poset.leq
    for x in range(s.n):
        for y in range(s.n):
            m = s.mul[x, y]
            if not (leq[m, x] and leq[m, y]):
                return law_fail("integral-product-below-factors", (x, y))
    return law_pass("integral-product-below-factors")


def boolean_residuation(l: FiniteLattice) -> ResiduatedStructure:
    """The canonical residuation of a Boolean algebra: x*y = x /\\ y and
    y -> z = y' \\/ z.  Raises NotBoolean otherwise."""
    report = is_boolean(l)
    if not report.passed:
        raise NotBoolean(report.note or "lattice is not Boolean")
    _, comps = is_complemented(l)
    n = l.n
    rres = np.zeros((n, n), dtype=np.intp)
    lres = np.zeros((n, n), dtype=np.intp)
    for y in range(n):
        for z in range(n):
            rres[y, z] = l.join[comps[y], z]
            lres[z, y] = l.join[comps[y], z]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                a = l.leq[l.meet[x, y], z]
                if a != l.leq[x, rres[y, z]] or a != l.leq[y, lres[z, x]]:
                    raise AdjointnessFailure((x, y, z))
    rres.flags.writeable = False
    lres.flags.writeable = False
    flags = Flags(commutative=True, idempotent=True, unit=l.top, integral=True)
    return ResiduatedStructure(l.poset, l.meet, rres, lres, flags, l)


def _chain_with_fraction_labels(m: int) -> FiniteLattice:
    labels = [str(Fraction(k, m - 1)) for k in range(m)]
    return lattice_from_covers([(i, i + 1) for i in range(m - 1)], labels)


def lukasiewicz_chain(m: int) -> ResiduatedStructure:
    """The m-element chain 0, 1/(m-1), ..., 1 under a*b = max(0, a+b-1).

    Arithmetic is exact: index k stands for k/(m-1), so the product of
    indices i and j is max(0, i+j-(m-1)).
    """
    if m < 2:
        raise ValueError("need at least two elements")
    lat = _chain_with_fraction_labels(m)
    mul = np.fromfunction(
        lambda i, j: np.maximum(0, i + j - (m - 1)), (m, m), dtype=np.intp
    )
    return residuated_structure(lat, mul)


def godel_chain(m: int) -> ResiduatedStructure:
    """The m-element chain under a*b = min(a, b)."""
    if m < 2:
        raise ValueError("need at least two elements")
    lat = _chain_with_fraction_labels(m)
    return residuated_structure(lat, lat.meet)


def drastic_chain(m: int) -> ResiduatedStructure:
    """The m-element chain under the drastic product: a*b = a /\\ b when
    one factor is 1, else 0.  Residuated but, for m >= 4, not involutive;
    a handy non-example obtained by flattening the middle of a chain."""
    if m < 2:
        raise ValueError("need at least two elements")
    lat = _chain_with_fraction_labels(m)
    mul = np.zeros((m, m), dtype=np.intp)
    mul[m - 1, :] = np.arange(m)
    mul[:, m - 1] = np.arange(m)
    return residuated_structure(lat, mul)
