import pytest

from shilovdet.domains import ambient_dim, is_tube, parse_domain
from shilovdet.shilov import (
    CIRCLE,
    E6,
    F4,
    O,
    SO,
    CompactGroup,
    LieSphere,
    ProductModel,
    Quotient,
    Sp,
    U,
    antipodal_degree,
    lie_sphere_bundle_trivial,
    lie_sphere_orientable,
    model_dim,
    shilov_model,
)
from shilovdet.verify import enumerate_domains


def test_group_dims():
    assert U(5).dim == 25
    assert Sp(3).dim == 21
    assert SO(10).dim == 45 and O(10).dim == 45
    assert SO(7).dim == 21
    assert E6.dim == 78 and F4.dim == 52 and CIRCLE.dim == 1
    assert CompactGroup("SU", 3).dim == 8
    with pytest.raises(ValueError):
        CompactGroup("G2")


def test_models():
    assert shilov_model(parse_domain("I(5,4)")) == Quotient(U(5), (U(1),))
    assert shilov_model(parse_domain("II(7)")) == Quotient(U(7), (Sp(3), CIRCLE))
    assert shilov_model(parse_domain("II(8)")) == Quotient(U(8), (Sp(4),))
    assert shilov_model(parse_domain("III(3)")) == Quotient(U(3), (O(3),))
    assert shilov_model(parse_domain("IV(6)")) == LieSphere(6)
    assert shilov_model(parse_domain("V")) == Quotient(SO(10), (SO(7),))
    vi = shilov_model(parse_domain("VI"))
    assert isinstance(vi, ProductModel) and not vi.exact
    assert Quotient(E6, (F4,), exact=False) in vi.factors
    assert str(vi) == "S^1 · E6/F4"


def test_exact_flag_only_for_vi():
    for d in enumerate_domains(60):
        assert shilov_model(d).exact == (d.family != "VI")


def test_model_dims():
    assert model_dim(Quotient(SO(10), (SO(7),))) == 24
    assert model_dim(LieSphere(6)) == 6
    # tube halving oracle: ambient_dim(VI)/2
    assert model_dim(shilov_model(parse_domain("VI"))) == 27 == ambient_dim(parse_domain("VI")) // 2
    assert model_dim(shilov_model(parse_domain("I(1,1) x I(4,1)"))) == 8


def test_tube_halving_and_table_two():
    for d in enumerate_domains(300):
        m = model_dim(shilov_model(d))
        if is_tube(d):
            assert 2 * m == ambient_dim(d), d
        elif d.family == "I":
            p, q = d.params
            assert m == 2 * p * q - q * q
        elif d.family == "II":
            q = d.params[0] // 2
            assert m == 2 * q * q + 3 * q
        else:
            assert m == 24


def test_antipodal_degree():
    assert antipodal_degree(1) == 1   # rotation of the circle by pi
    assert antipodal_degree(2) == -1
    assert antipodal_degree(5) == 1


@pytest.mark.parametrize("n, expected", [(6, True), (7, False), (27, False), (9, False), (8, True)])
def test_lie_sphere(n, expected):
    assert lie_sphere_orientable(n) is expected
    assert lie_sphere_bundle_trivial(n) is expected


def test_lie_sphere_rejects_small():
    with pytest.raises(ValueError):
        lie_sphere_orientable(4)
    with pytest.raises(ValueError):
        LieSphere(3)
