"""Torsion linking forms and the pairings of decomposed U(1) classes.

A class splits into a free origin A_m, a torsion origin A0_kappa and a
flat translation. Their pairings, all valued in Q/Z, are:

    A_m . A_n        = 0            (integral linking; diagonal set to 0)
    A_m . omega_0    = m . theta
    A0_k . A_m       = 0
    A0_k . omega     = 0
    A0_k1 . A0_k2    = -Q(k1, k2)

On a surgery presentation L the linking form is Q(x, y) = -x^T L^-1 y
mod 1 on the Smith generators of coker(L).
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Optional, Sequence

from abeltqft.algebra.intmatrix import IntMatrix, RationalMatrix, det, integer_inverse, rational_inverse
from abeltqft.algebra.modone import ModOne
from abeltqft.algebra.snf import snf
from abeltqft.errors import DimensionMismatch, NonSquare, NonSymmetric, SingularMatrix
from abeltqft.topology.groups import AbelianGroup, TorsionElement, torsion_elements

if TYPE_CHECKING:
    from abeltqft.topology.manifolds import Manifold

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinkingForm:
    """Q on the torsion generators e_i of ``group``: q[i, j] = Q(e_i, e_j) in [0, 1)."""
    group: AbelianGroup
    q: RationalMatrix

    def __post_init__(self):
        n = len(self.group.torsion_orders)
        if self.q.shape != (n, n):
            raise DimensionMismatch(f"form matrix {self.q.shape} for {n} torsion generators")
        q = self.q.mod_one()
        object.__setattr__(self, "q", q)
        orders = self.group.torsion_orders
        for i in range(n):
            for j in range(n):
                if q[i, j] != q[j, i]:
                    raise NonSymmetric(f"linking form is not symmetric at ({i}, {j})")
                if (orders[i] * q[i, j]).denominator != 1 or (orders[j] * q[i, j]).denominator != 1:
                    raise ValueError(f"Q(e_{i}, e_{j}) = {q[i, j]} is not defined on Z/{orders[i]} x Z/{orders[j]}")

    @classmethod
    def cyclic(cls, p: int, value: Fraction) -> "LinkingForm":
        """Form on Z/p with Q(e, e) = value."""
        return cls(AbelianGroup(0, (p,)), RationalMatrix.from_rows([[Fraction(value)]]))

    @property
    def torsion_orders(self) -> tuple[int, ...]:
        return self.group.torsion_orders

    @cached_property
    def denominator(self) -> int:
        """Common denominator D: every q[i, j] is a multiple of 1/D."""
        return self.torsion_orders[-1] if self.torsion_orders else 1

    @cached_property
    def numerators(self) -> tuple[tuple[int, ...], ...]:
        """Integer matrix D * q, entries in [0, D)."""
        d = self.denominator
        n = len(self.torsion_orders)
        return tuple(tuple(int(self.q[i, j] * d) for j in range(n)) for i in range(n))

    def numerator_of(self, a: Sequence[int], b: Sequence[int]) -> int:
        """D * Q(a, b) mod D on raw coefficient vectors."""
        total = 0
        for ai, row in zip(a, self.numerators):
            if ai:
                total += ai * sum(x * y for x, y in zip(row, b))
        return total % self.denominator

    def _check(self, *elements: TorsionElement):
        for x in elements:
            if x.orders != self.torsion_orders:
                raise DimensionMismatch(
                    f"element of Z/{x.orders} does not live on torsion {self.torsion_orders}"
                )

    def __call__(self, a: TorsionElement, b: TorsionElement) -> ModOne:
        return eval_q(self, a, b)

    def reversed(self) -> "LinkingForm":
        """Form of the orientation-reversed manifold: -Q."""
        return LinkingForm(self.group, -self.q)

    def quadratic_values(self, budget: Optional[int] = None) -> Counter:
        """Multiset {Q(t, t)}; a presentation-independent fingerprint."""
        return Counter(eval_q(self, t, t) for t in torsion_elements(self.group, budget))

    def is_nondegenerate(self, budget: Optional[int] = None) -> bool:
        """Every nonzero t has some s with Q(t, s) != 0; testing s over generators suffices."""
        n = len(self.torsion_orders)
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        for t in torsion_elements(self.group, budget):
            if t.is_zero():
                continue
            if all(self.numerator_of(t.coefficients, e) == 0 for e in basis):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "torsion": list(self.torsion_orders),
            "q": [[f"{x.numerator}/{x.denominator}" for x in self.q.row(i)] for i in range(self.q.rows)],
        }


@dataclass(frozen=True)
class ZeroModeVector:
    """theta_b in R/Z (restricted to Q/Z), one per free generator."""
    theta: tuple[ModOne, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(ModOne(x) for x in self.theta))

    def __len__(self) -> int:
        return len(self.theta)


@dataclass(frozen=True)
class FreeOriginVector:
    """Integers m^a fixing the fibre over sum_a m^a z_a."""
    m: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))

    def __len__(self) -> int:
        return len(self.m)


@dataclass(frozen=True)
class OriginClass:
    """Origin A_m + A0_kappa of a fibre of the Deligne bundle."""
    free: FreeOriginVector
    torsion: TorsionElement


def linking_form_from_matrix(l: IntMatrix) -> LinkingForm:
    """Linking form on coker(l) for a nonsingular symmetric surgery matrix.

    With U l V = D, the Smith generator e_i of Z/d_i is column i of
    U^-1 in the original coordinates, so q = -(U^-T l^-1 U^-1) mod 1
    restricted to the indices with d_i > 1.
    """
    if not l.is_square:
        raise NonSquare(f"linking matrix is {l.rows}x{l.cols}")
    if not l.is_symmetric():
        raise NonSymmetric(f"linking matrix {l} is not symmetric")
    if det(l) == 0:
        raise SingularMatrix(f"linking matrix {l} is singular; split off the free part first")

    dec = snf(l)
    generators = integer_inverse(dec.u)
    full = -(generators.T @ rational_inverse(l) @ generators)
    factors = dec.invariant_factors
    keep = [i for i, x in enumerate(factors) if x > 1]
    q = RationalMatrix.from_rows([[full[i, j] for j in keep] for i in keep], len(keep))
    form = LinkingForm(AbelianGroup(0, tuple(factors[i] for i in keep)), q)
    logger.debug(f"[Linking] {l.rows}x{l.cols} -> torsion {form.torsion_orders}, q = {form.to_json()['q']}")
    return form


def linking_form_of_presentation(l: IntMatrix) -> LinkingForm:
    """Linking form of a possibly degenerate symmetric presentation.

    The last columns of V in U l V = D span ker l, so V^T l V is block
    diagonal with a nondegenerate leading block carrying all torsion.
    """
    if not l.is_square:
        raise NonSquare(f"linking matrix is {l.rows}x{l.cols}")
    if not l.is_symmetric():
        raise NonSymmetric(f"linking matrix {l} is not symmetric")
    dec = snf(l)
    r = dec.rank
    if r == l.rows:
        return linking_form_from_matrix(l)
    congruent = dec.v.T @ l @ dec.v
    block = congruent.submatrix(range(r), range(r))
    form = linking_form_from_matrix(block)
    logger.debug(f"[Linking] split off free rank {l.rows - r} from {l.rows}x{l.cols} presentation")
    return LinkingForm(AbelianGroup(l.rows - r, form.torsion_orders), form.q)


def linking_form_of_manifold(manifold: "Manifold") -> LinkingForm:
    return linking_form_of_presentation(manifold.presentation)


def eval_q(form: LinkingForm, a: TorsionElement, b: TorsionElement) -> ModOne:
    """Q(a, b) = sum_ij a_i b_j q_ij mod 1."""
    form._check(a, b)
    return ModOne(Fraction(form.numerator_of(a.coefficients, b.coefficients), form.denominator))


def pairing_free_zero_mode(m: FreeOriginVector, theta: ZeroModeVector) -> ModOne:
    """A_m . omega_0 = m . theta mod 1."""
    if len(m) != len(theta):
        raise DimensionMismatch(f"{len(m)} free coefficients against {len(theta)} zero modes")
    return sum((ModOne(x.value * k) for k, x in zip(m.m, theta.theta)), ModOne.zero())


def pairing_free_free(m: FreeOriginVector, n: FreeOriginVector) -> ModOne:
    """A_m . A_n = 0: an integral linking number, and 0 on the diagonal by zero regularisation."""
    if len(m) != len(n):
        raise DimensionMismatch(f"{len(m)} against {len(n)} free coefficients")
    return ModOne.zero()


def pairing_torsion_free(kappa: TorsionElement, m: FreeOriginVector) -> ModOne:
    return ModOne.zero()


def pairing_torsion_zero_mode(kappa: TorsionElement, theta: ZeroModeVector) -> ModOne:
    return ModOne.zero()


def pairing_origins(form: LinkingForm, x: OriginClass, y: OriginClass) -> ModOne:
    """x . y for origins; only the torsion-torsion term survives."""
    return (
        pairing_free_free(x.free, y.free)
        + pairing_torsion_free(x.torsion, y.free)
        + pairing_torsion_free(y.torsion, x.free)
        - eval_q(form, x.torsion, y.torsion)
    )


def cs_origin_phase(form: LinkingForm, kappa: TorsionElement, level: int) -> ModOne:
    """N * (A0_k . A0_k) = -N Q(k, k): exponent of the Chern-Simons summand."""
    return -(eval_q(form, kappa, kappa) * level)


def bf_origin_phase(form: LinkingForm, kappa_a: TorsionElement, kappa_b: TorsionElement, level: int) -> ModOne:
    """N * (A0_a . B0_b) = -N Q(a, b)."""
    return -(eval_q(form, kappa_a, kappa_b) * level)
