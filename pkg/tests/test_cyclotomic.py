import cmath
from fractions import Fraction

import pytest

from abeltqft.algebra.cyclotomic import CyclotomicNumber, counts_to_number, root_term
from abeltqft.config import config
from abeltqft.errors import OrderOverflow, ParseError

zeta = CyclotomicNumber.root


def test_normalization():
    x = CyclotomicNumber(4, ((5, 2), (1, -1), (2, 0)))
    assert x.terms == ((1, 1),)


@pytest.mark.parametrize("m", range(2, 13))
def test_sum_of_all_roots_is_zero(m):
    total = sum((zeta(m, k) for k in range(m)), CyclotomicNumber.zero())
    assert total.is_zero()
    assert total == 0


def test_basic_identities():
    assert zeta(4) * zeta(4) == -1
    assert zeta(2) == -1
    assert zeta(6, 2) == zeta(3)
    assert zeta(3) + zeta(3, 2) == -1
    assert zeta(8) * zeta(8, 7) == 1
    assert zeta(5) != zeta(5, 2)


def test_mixed_orders_unify():
    x = zeta(2) + zeta(3)
    assert x.order == 6
    assert x == zeta(3) - 1


def test_conjugate():
    x = CyclotomicNumber.from_coeffs(7, {1: 2, 3: -1})
    assert x.conjugate().coeffs == {6: 2, 4: -1}
    norm = x * x.conjugate()
    assert abs(complex(norm.numeric()) - abs(complex(x.numeric())) ** 2) < 1e-12


def test_as_integer():
    assert CyclotomicNumber.from_coeffs(3, {0: 2, 1: -1, 2: -1}).as_integer() == 3
    assert zeta(3).as_integer() is None
    assert CyclotomicNumber.zero().as_integer() == 0


def test_gauss_sum_for_three():
    # sum_k exp(-2 pi i * 2k^2 / 3) = 1 + 2 zeta_3
    counts = {}
    for k in range(3):
        e = (-2 * k * k) % 3
        counts[e] = counts.get(e, 0) + 1
    g = counts_to_number(3, counts)
    assert g == 1 + 2 * zeta(3)
    assert (g * g.conjugate()).as_integer() == 3


def test_numeric_view():
    x = CyclotomicNumber.from_coeffs(5, {0: 1, 2: 3, 4: -2})
    expected = 1 + 3 * cmath.exp(2j * cmath.pi * 2 / 5) - 2 * cmath.exp(2j * cmath.pi * 4 / 5)
    approx = x.numeric(precision=40)
    assert approx.contains(expected)
    assert approx.digits == 40
    assert abs(float(approx.format_im()) - expected.imag) < 1e-12


def test_numeric_snaps_vanishing_parts():
    approx = (zeta(4) + zeta(4, 3)).numeric()
    assert approx.to_json()["re"] == "0.0"
    assert approx.to_json()["im"] == "0.0"


def test_root_term():
    assert root_term(Fraction(1, 2)) == -1
    assert root_term(Fraction(1, 3), scale=3) == 1
    term = root_term(Fraction(1, 4), order=8)
    assert term.order == 8
    assert term == zeta(4)


def test_str():
    assert str(CyclotomicNumber.zero()) == "0"
    assert str(CyclotomicNumber.from_int(-4)) == "-4"
    assert str(1 + 2 * zeta(3)) == "1 + 2*zeta3"
    assert str(zeta(2) + 1) == "0"


def test_json():
    x = 1 + 2 * zeta(3)
    assert x.to_json() == {"order": 3, "coeffs": {"0": 1, "1": 2}}
    assert CyclotomicNumber.from_json(x.to_json()) == x
    assert (zeta(2) + 1).to_json() == {"order": 1, "coeffs": {}}
    assert CyclotomicNumber.from_int(6).lift(12).to_json() == {"order": 1, "coeffs": {"0": 6}}
    with pytest.raises(ParseError):
        CyclotomicNumber.from_json({"order": 3})


def test_not_hashable():
    with pytest.raises(TypeError):
        hash(zeta(3))


def test_order_cap():
    config.set("limits.cyclotomic_order_cap", 10)
    with pytest.raises(OrderOverflow):
        zeta(7) + zeta(11)
    with pytest.raises(OrderOverflow):
        zeta(12).is_zero()


def test_invalid_order():
    with pytest.raises(ValueError):
        CyclotomicNumber(0)


def test_json_is_canonical_across_orders():
    a = zeta(3)
    b = zeta(3) + zeta(2) + 1
    assert a == b
    assert b.order == 6
    assert a.to_json() == b.to_json() == {"order": 3, "coeffs": {"1": 1}}
    assert str(a) == str(b) == "zeta3"

    sqrt2 = zeta(8) + zeta(8, 7)
    padded = sqrt2 + zeta(3) + zeta(3, 2) + 1
    assert padded.order == 24
    assert padded.to_json() == sqrt2.to_json()


def test_json_is_canonical_for_random_values(rng):
    for _ in range(40):
        m = int(rng.integers(1, 25))
        x = CyclotomicNumber.from_coeffs(m, {int(k): int(c) for k, c in zip(rng.integers(0, m, size=4), rng.integers(-3, 4, size=4))})
        k = int(rng.integers(2, 5))
        other = int(rng.choice([2, 3, 5]))
        vanishing = sum((zeta(other, j) for j in range(other)), CyclotomicNumber.zero())
        y = x.lift(k * m) + vanishing
        assert y == x
        assert y.to_json() == x.to_json()
        assert CyclotomicNumber.from_json(y.to_json()) == x


def random_element(rng, m: int, size: int = 4) -> CyclotomicNumber:
    exponents = rng.integers(0, m, size=size)
    coefficients = rng.integers(-4, 5, size=size)
    return CyclotomicNumber(m, tuple((int(k), int(c)) for k, c in zip(exponents, coefficients)))


def test_ring_axioms(rng):
    for _ in range(25):
        m = int(rng.integers(1, 361))
        a, b, c = (random_element(rng, m) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_numeric_error_compounds_under_operations(rng):
    for _ in range(25):
        m = int(rng.integers(2, 61))
        a, b = random_element(rng, m), random_element(rng, m)
        na, nb = a.numeric(precision=20), b.numeric(precision=20)
        ea, eb = float(na.err), float(nb.err)
        za, zb = complex(na), complex(nb)
        assert (a + b).numeric(precision=20).contains(za + zb, slack=ea + eb)
        bound = abs(za) * eb + abs(zb) * ea + ea * eb
        assert (a * b).numeric(precision=20).contains(za * zb, slack=bound)
