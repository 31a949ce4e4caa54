"""Exact arithmetic with formal integer combinations of roots of unity.

A :class:`CyclotomicNumber` of order ``m`` is an element of the group
ring Z[Z/m], read as the complex number sum_k c_k * exp(2*pi*i*k/m).
Arithmetic stays in the group ring; equality of the complex values is
decided on demand by reducing modulo the m-th cyclotomic polynomial.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping, Optional, Union

import mpmath
from sympy import Poly, Symbol, ZZ, cyclotomic_poly, primefactors

from abeltqft.algebra.modone import ModOne
from abeltqft.config import config
from abeltqft.errors import OrderOverflow, ParseError

logger = logging.getLogger(__name__)

_X = Symbol("x")


@lru_cache(maxsize=256)
def _cyclotomic_polynomial(m: int) -> Poly:
    return Poly(cyclotomic_poly(m, _X), _X, domain=ZZ)


def _check_order(order: int) -> int:
    cap = config.cyclotomic_order_cap
    if order > cap:
        raise OrderOverflow(order, cap)
    return order


@dataclass(frozen=True)
class GaussianApprox:
    """Multiprecision view ``re + i*im`` with |exact - (re + i*im)| <= err."""
    re: mpmath.mpf
    im: mpmath.mpf
    err: mpmath.mpf
    digits: int

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def contains(self, value: complex, slack: float = 0.0) -> bool:
        return abs(complex(self) - complex(value)) <= float(self.err) + 1e-12 + slack

    def _snap(self, x: mpmath.mpf) -> mpmath.mpf:
        # parts below the error bound are indistinguishable from 0
        return mpmath.mpf(0) if abs(x) <= self.err else x

    def format_re(self) -> str:
        return mpmath.nstr(self._snap(self.re), self.digits, strip_zeros=True)

    def format_im(self) -> str:
        return mpmath.nstr(self._snap(self.im), self.digits, strip_zeros=True)

    def __str__(self) -> str:
        im = self._snap(self.im)
        if not im:
            return self.format_re()
        sign = "-" if im < 0 else "+"
        return f"{self.format_re()} {sign} {mpmath.nstr(abs(im), self.digits, strip_zeros=True)}i"

    def to_json(self) -> dict:
        return {
            "re": self.format_re(),
            "im": self.format_im(),
            "err": mpmath.nstr(self.err, 3),
        }


@dataclass(frozen=True, eq=False)
class CyclotomicNumber:
    order: int
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"root-of-unity order must be a positive integer, got {self.order!r}")
        merged: Counter = Counter()
        for k, c in self.terms:
            merged[k % self.order] += c
        object.__setattr__(self, "terms", tuple(sorted((k, c) for k, c in merged.items() if c)))

    # ---------- constructors ----------

    @classmethod
    def from_coeffs(cls, order: int, coeffs: Mapping[int, int]) -> "CyclotomicNumber":
        return cls(order, tuple(coeffs.items()))

    @classmethod
    def from_int(cls, n: int) -> "CyclotomicNumber":
        return cls(1, ((0, n),))

    @classmethod
    def zero(cls) -> "CyclotomicNumber":
        return cls(1)

    @classmethod
    def one(cls) -> "CyclotomicNumber":
        return cls.from_int(1)

    @classmethod
    def root(cls, order: int, k: int = 1) -> "CyclotomicNumber":
        """zeta_order ** k."""
        return cls(order, ((k, 1),))

    # ---------- views ----------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    @property
    def weight(self) -> int:
        """Sum of |c_k|; bounds the modulus of the value."""
        return sum(abs(c) for _, c in self.terms)

    def lift(self, order: int) -> "CyclotomicNumber":
        """Same element written with roots of a multiple ``order`` of the current order."""
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        factor = order // self.order
        return CyclotomicNumber(order, tuple((k * factor, c) for k, c in self.terms))

    def minimal_order(self) -> "CyclotomicNumber":
        """Rewrite with the smallest order that expresses the same group-ring element."""
        g = self.order
        for k, _ in self.terms:
            g = math.gcd(g, k)
        if not self.terms:
            g = self.order
        return CyclotomicNumber(self.order // g, tuple((k // g, c) for k, c in self.terms))

    def _unify(self, other: "CyclotomicNumber") -> tuple["CyclotomicNumber", "CyclotomicNumber"]:
        if self.order == other.order:
            return self, other
        order = _check_order(math.lcm(self.order, other.order))
        return self.lift(order), other.lift(order)

    @staticmethod
    def _coerce(value: Any) -> Optional["CyclotomicNumber"]:
        if isinstance(value, CyclotomicNumber):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return CyclotomicNumber.from_int(value)
        return None

    # ---------- ring operations ----------

    def __add__(self, other: Union["CyclotomicNumber", int]) -> "CyclotomicNumber":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._unify(other)
        return CyclotomicNumber(a.order, a.terms + b.terms)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: Union["CyclotomicNumber", int]) -> "CyclotomicNumber":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "CyclotomicNumber":
        return (-self) + other

    def __mul__(self, other: Union["CyclotomicNumber", int]) -> "CyclotomicNumber":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._unify(other)
        product: Counter = Counter()
        for k1, c1 in a.terms:
            for k2, c2 in b.terms:
                product[(k1 + k2) % a.order] += c1 * c2
        return CyclotomicNumber(a.order, tuple(product.items()))

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, tuple((-k, c) for k, c in self.terms))

    # ---------- exact comparison ----------

    def reduced_coefficients(self) -> list[int]:
        """Coordinates in the power basis 1, zeta, ..., zeta^(phi(m)-1)."""
        m = _check_order(self.order)
        phi = _cyclotomic_polynomial(m)
        dense = [0] * m
        for k, c in self.terms:
            dense[k] = c
        remainder = Poly(dense[::-1], _X, domain=ZZ).rem(phi)
        coeffs = [int(c) for c in remainder.all_coeffs()[::-1]]
        return coeffs + [0] * (phi.degree() - len(coeffs))

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        return not any(self.reduced_coefficients())

    def equals(self, other: Union["CyclotomicNumber", int]) -> bool:
        other = self._coerce(other)
        if other is None:
            return False
        return (self - other).is_zero()

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def as_integer(self) -> Optional[int]:
        """The value as a rational integer, or None if it is not one."""
        if not self.terms:
            return 0
        coeffs = self.reduced_coefficients()
        if any(coeffs[1:]):
            return None
        return coeffs[0]

    # ---------- numeric view ----------

    def numeric(self, precision: Optional[int] = None) -> GaussianApprox:
        digits = config.precision if precision is None else precision
        if digits < 1:
            raise ValueError(f"precision must be >= 1, got {digits}")
        weight = self.weight
        guard = len(str(weight)) + 10
        with mpmath.workdps(digits + guard):
            total = mpmath.mpc(0)
            for k, c in self.terms:
                total += c * mpmath.expjpi(mpmath.mpf(2 * k) / self.order)
            re, im = +total.real, +total.imag
            err = mpmath.mpf(10) ** (-digits) * weight
        return GaussianApprox(re=re, im=im, err=err, digits=digits)

    def _drop_prime(self, p: int) -> Optional["CyclotomicNumber"]:
        """The same value written at order m/p if it lies in Q(zeta_(m/p)), else None."""
        sub = self.order // p
        if sub % p == 0:
            # Phi_m(x) = Phi_sub(x^p): the subfield is the span of the powers divisible by p
            coords = self.reduced_coefficients()
            if any(c for k, c in enumerate(coords) if k % p):
                return None
            return CyclotomicNumber(sub, tuple((k // p, c) for k, c in enumerate(coords)))
        if p == 2:
            # zeta_m^k = (-1)^k * zeta_sub^(k (sub + 1) / 2) for odd sub
            half = (sub + 1) // 2
            return CyclotomicNumber(sub, tuple((k * half, -c if k % 2 else c) for k, c in self.terms))
        # zeta_m^k = zeta_sub^a * zeta_p^b, and 1, zeta_p, ..., zeta_p^(p-2) is a basis over Z[zeta_sub]
        to_sub, to_p = pow(p, -1, sub), pow(sub, -1, p)
        blocks = [Counter() for _ in range(p - 1)]
        for k, c in self.terms:
            a, b = k * to_sub % sub, k * to_p % p
            if b == p - 1:
                for block in blocks:
                    block[a] -= c
            else:
                blocks[b][a] += c
        parts = [CyclotomicNumber.from_coeffs(sub, block) for block in blocks]
        if any(not part.is_zero() for part in parts[1:]):
            return None
        return parts[0]

    def reduced(self) -> "CyclotomicNumber":
        """Canonical representative: power basis over the smallest zeta_f holding the value.

        The orders d with the value in Q(zeta_d) are closed under gcd, so
        removing one prime at a time reaches that f from any order.
        """
        x = self.minimal_order()
        descending = True
        while descending and x.terms:
            descending = False
            for p in primefactors(x.order):
                smaller = x._drop_prime(p)
                if smaller is not None:
                    x = smaller.minimal_order()
                    descending = True
                    break
        if not x.terms:
            return CyclotomicNumber.zero()
        return CyclotomicNumber(x.order, tuple(enumerate(x.reduced_coefficients())))

    # ---------- serialization ----------

    def to_json(self) -> dict:
        x = self.reduced()
        return {"order": x.order, "coeffs": {str(k): c for k, c in x.terms}}

    @classmethod
    def from_json(cls, data: Any) -> "CyclotomicNumber":
        try:
            return cls(int(data["order"]), tuple((int(k), int(c)) for k, c in data["coeffs"].items()))
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ParseError(f"bad cyclotomic JSON: {e}") from None

    def __str__(self) -> str:
        x = self.reduced()
        if not x.terms:
            return "0"
        parts = []
        for k, c in x.terms:
            if k == 0:
                body = str(abs(c))
            else:
                root = f"zeta{x.order}" + (f"^{k}" if k != 1 else "")
                body = root if abs(c) == 1 else f"{abs(c)}*{root}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.order}, {self.terms})"


def root_term(q: Union[ModOne, Fraction, int], scale: int = 1, order: Optional[int] = None) -> CyclotomicNumber:
    """exp(2*pi*i * scale*q) as a root of unity.

    The order is the denominator of ``scale*q mod 1`` unless a common
    ``order`` (a multiple of it) is requested.
    """
    r = ModOne(q) * scale
    term = CyclotomicNumber.root(r.denominator, r.numerator)
    if order is not None:
        term = term.lift(_check_order(order))
    return term


def counts_to_number(order: int, counts: Mapping[int, int]) -> CyclotomicNumber:
    """Build sum_k counts[k] * zeta_order^k from an exponent histogram."""
    return CyclotomicNumber.from_coeffs(_check_order(order), counts)