import json
import math

import pytest

from abeltqft.algebra.intmatrix import IntMatrix, det
from abeltqft.errors import InvalidManifold, NonSymmetric, NotCoprime, ParseError
from abeltqft.theories import z_bf, z_cs
from abeltqft.topology.groups import AbelianGroup, group_from_presentation
from abeltqft.topology.linking import linking_form_of_manifold
from abeltqft.topology.manifolds import (
    Manifold,
    connected_sum,
    continued_fraction,
    lens_space,
    load_matrix_file,
    poincare_sphere,
    s1_x_s2,
    save_matrix_file,
    sphere3,
)
from abeltqft.topology.spec_parser import parse_manifold


def test_sphere3():
    m = sphere3()
    assert m.presentation.shape == (0, 0)
    assert group_from_presentation(m.presentation).is_trivial


def test_s1_x_s2():
    assert group_from_presentation(s1_x_s2().presentation) == AbelianGroup(1)


def test_poincare_sphere():
    m = poincare_sphere()
    assert m.presentation.shape == (8, 8)
    assert abs(det(m.presentation)) == 1
    assert all(x == 2 for x in m.presentation.diagonal_entries())
    assert group_from_presentation(m.presentation).is_trivial


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (5, 2, [3, 2]),
        (7, 3, [3, 2, 2]),
        (7, 1, [7]),
        (7, 6, [2, 2, 2, 2, 2, 2]),
    ],
)
def test_continued_fraction(p, q, expected):
    assert continued_fraction(p, q) == expected


def test_lens_space_examples():
    assert lens_space(2, 1).presentation.to_lists() == [[2]]
    assert lens_space(1, 1).presentation.to_lists() == [[1]]
    assert lens_space(5, 2).presentation.to_lists() == [[3, 1], [1, 2]]
    assert lens_space(5, 7).presentation == lens_space(5, 2).presentation
    assert lens_space(5, 2).name == "L(5,2)"


def test_lens_spaces_up_to_thirty():
    for p in range(2, 31):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            m = lens_space(p, q)
            assert abs(det(m.presentation)) == p
            assert group_from_presentation(m.presentation) == AbelianGroup(0, (p,))
            assert all(a >= 2 for a in m.presentation.diagonal_entries())


def test_lens_space_errors():
    with pytest.raises(NotCoprime) as info:
        lens_space(4, 2)
    assert (info.value.p, info.value.q) == (4, 2)
    with pytest.raises(InvalidManifold):
        lens_space(0, 1)


@pytest.mark.parametrize(
    "a, b, torsion",
    [
        (lens_space(2, 1), lens_space(3, 1), (6,)),
        (lens_space(2, 1), lens_space(2, 1), (2, 2)),
        (lens_space(4, 1), lens_space(6, 1), (2, 12)),
    ],
)
def test_connected_sum_homology(a, b, torsion):
    s = connected_sum(a, b)
    assert group_from_presentation(s.presentation).torsion_orders == torsion
    expected = group_from_presentation(a.presentation).direct_sum(group_from_presentation(b.presentation))
    assert group_from_presentation(s.presentation) == expected


def test_connected_sum_with_sphere_is_identity():
    x = lens_space(5, 2)
    s = connected_sum(sphere3(), x)
    assert s.presentation == x.presentation
    for n in range(-3, 4):
        assert z_cs(linking_form_of_manifold(s), n).exact == z_cs(linking_form_of_manifold(x), n).exact
        assert z_bf(linking_form_of_manifold(s), n).exact == z_bf(linking_form_of_manifold(x), n).exact


def test_orientation_reversal():
    m = lens_space(7, 2)
    r = m.reversed()
    assert r.display_name == "-L(7,2)"
    assert r.presentation == -m.presentation
    assert r.reversed() == m
    form, reversed_form = linking_form_of_manifold(m), linking_form_of_manifold(r)
    for n in range(1, 8):
        assert z_cs(reversed_form, n).exact == z_cs(form, n).exact.conjugate()


def test_manifold_validation():
    with pytest.raises(NonSymmetric):
        Manifold("bad", IntMatrix.from_rows([[1, 2], [0, 1]]))
    with pytest.raises(InvalidManifold):
        Manifold("", IntMatrix.from_rows([[1]]))
    with pytest.raises(InvalidManifold):
        Manifold("x", IntMatrix.from_rows([[1]]), orientation=2)


# ---------- specifications ----------

def test_parse_catalog_names():
    assert parse_manifold("S3").presentation.shape == (0, 0)
    assert parse_manifold("S1xS2").presentation.to_lists() == [[0]]
    assert parse_manifold("Poincare").presentation == poincare_sphere().presentation


def test_parse_lens_and_sum():
    assert parse_manifold("L(5,2)").presentation == lens_space(5, 2).presentation
    assert parse_manifold(" L( 5 , 2 ) ").presentation == lens_space(5, 2).presentation
    assert parse_manifold("sum(L(2,1),S1xS2)").presentation.to_lists() == [[2, 0], [0, 0]]
    nested = parse_manifold("sum(L(2,1),sum(L(3,1),-L(5,2)))")
    assert nested.presentation.shape == (4, 4)
    assert group_from_presentation(nested.presentation).torsion_orders == (30,)


def test_parse_reversal():
    m = parse_manifold("-L(5,2)")
    assert m.orientation == -1
    assert m.presentation == -lens_space(5, 2).presentation


def test_parse_not_coprime():
    with pytest.raises(NotCoprime):
        parse_manifold("L(4,2)")


@pytest.mark.parametrize(
    "spec, position",
    [
        ("", 0),
        ("Foo", 0),
        ("L(5,", 4),
        ("L(5 2)", 4),
        ("S3 extra", 3),
        ("sum(S3)", 6),
        ("sum(@,S3)", 5),
    ],
)
def test_parse_errors(spec, position):
    with pytest.raises(ParseError) as info:
        parse_manifold(spec)
    assert info.value.position == position


def test_matrix_file_round_trip(tmp_path):
    path = tmp_path / "l72.json"
    save_matrix_file(lens_space(7, 2).reversed(), path)
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data == {"rows": 2, "cols": 2, "entries": [[-4, -1], [-1, -2]]}

    loaded = load_matrix_file(path)
    assert loaded.presentation == lens_space(7, 2).reversed().presentation
    assert parse_manifold(f"@{path}").presentation == loaded.presentation


def test_matrix_file_inside_connected_sum(tmp_path):
    path = tmp_path / "l52.json"
    save_matrix_file(lens_space(5, 2), path)
    both = parse_manifold(f"sum(@{path}, S1xS2)")
    assert both.presentation == connected_sum(lens_space(5, 2), s1_x_s2()).presentation
    nested = parse_manifold(f"sum(L(2,1),sum(@{path},S3))")
    assert nested.presentation.rows == 3


def test_matrix_file_errors(tmp_path):
    with pytest.raises(ParseError):
        load_matrix_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        load_matrix_file(bad)
    asym = tmp_path / "asym.json"
    asym.write_text(json.dumps({"rows": 2, "cols": 2, "entries": [[1, 2], [0, 1]]}), encoding="utf-8")
    with pytest.raises(NonSymmetric):
        load_matrix_file(asym)
