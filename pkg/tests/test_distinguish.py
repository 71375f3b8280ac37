import itertools

import pytest

from shilovdet.distinguish import (
    CERTIFICATE_SCHEMA,
    Inconclusive,
    Isomorphic,
    SeparatedBy,
    certificate_to_json,
    distinguish,
    explain,
)
from shilovdet.domains import parse_domain
from shilovdet.graded import recover_generators
from shilovdet.invariants import invariant_vector
from shilovdet.verify import enumerate_domains


def P(text):
    return parse_domain(text)


def tube_shilov_dims(limit):
    """Independent table of tube Shilov dimensions (half the real dimension)."""
    out = {}
    for q in range(1, limit + 1):
        out.setdefault(q * q, []).append(f"I({q},{q})")
    for q in range(3, limit + 1):
        out.setdefault(q * (2 * q - 1), []).append(f"II({2 * q})")
    for n in range(2, limit + 1):
        out.setdefault(n * (n + 1) // 2, []).append(f"III({n})")
    for n in range(5, limit + 1):
        out.setdefault(n, []).append(f"IV({n})")
    out.setdefault(27, []).append("VI")
    return {k: v for k, v in out.items() if k <= limit}


def test_tube_dim_tie_oracle():
    dims = tube_shilov_dims(40)
    assert set(dims[36]) == {"I(6,6)", "III(8)", "IV(36)"}
    assert set(dims[27]) == {"IV(27)", "VI"}
    assert set(dims[15]) == {"II(6)", "IV(15)", "III(5)"}


def test_vi_vs_iv27():
    c = distinguish(P("VI"), P("IV(27)"))
    assert isinstance(c, SeparatedBy)
    assert (c.step, c.label, c.invariant, c.lhs, c.rhs) == (4, "pi9", "pi9_nonzero", "yes", "no")


def test_i66_vs_iii8():
    c = distinguish(P("I(6,6)"), P("III(8)"))
    assert (c.step, c.invariant, c.lhs, c.rhs) == (5, "pi2_nonzero", "no", "yes")


@pytest.mark.parametrize("other", ["I(5,4)", "I(7,2)"])
def test_v_vs_stiefel(other):
    c = distinguish(P("V"), P(other))
    assert (c.step, c.invariant, c.lhs, c.rhs) == (6, "h_torsion_free", "no", "yes")


def test_ii7_vs_equal_dim_type_i():
    partners = [d for d in enumerate_domains(400)
                if d.family == "I" and invariant_vector(d).shilov_dim == 27 and d.params[0] > d.params[1]]
    assert {str(d) for d in partners} == {"I(6,3)", "I(14,1)"}
    c = distinguish(P("II(7)"), P("I(6,3)"))
    assert c.step == 7 and c.invariant == "cover_poincare"
    assert c.detail == {"lhs_generators": [5, 9, 13], "rhs_generators": [7, 9, 11],
                        "lhs_step": 4, "rhs_step": 2}
    c = distinguish(P("II(7)"), P("I(14,1)"))
    assert c.step == 7 and c.detail["rhs_generators"] == [27]


def test_reducible_coincidence_is_inconclusive():
    c = distinguish(P("IV(8)"), P("I(1,1) x I(4,1)"))
    assert isinstance(c, Inconclusive)
    assert "I(1,1) x I(n,1)" in c.anchor
    assert "I(1,1) x I(n,1)" in explain(c)


def test_isomorphic():
    c = distinguish(P("I(3,3)"), P("I(3,3)"))
    assert c == Isomorphic(P("I(3,3)"))
    assert explain(c) == "identical canonical type I(3,3)"
    assert isinstance(distinguish(P("IV(6) x I(2,1)"), P("I(2,1) x IV(6)")), Isomorphic)


def test_distinct_products_never_isomorphic():
    specs = [P(t) for t in ("I(1,1) x I(1,1)", "I(1,1) x I(2,1)", "III(2) x III(2)", "I(2,2)")]
    for a, b in itertools.combinations(specs, 2):
        assert not isinstance(distinguish(a, b), Isomorphic)


def test_symmetry_and_reflexivity():
    ds = enumerate_domains(60)
    for a in ds:
        assert distinguish(a, a) == Isomorphic(a)
    for a, b in itertools.combinations(ds, 2):
        x, y = distinguish(a, b), distinguish(b, a)
        assert type(x) is type(y)
        if isinstance(x, SeparatedBy):
            assert (x.step, x.invariant, x.lhs, x.rhs) == (y.step, y.invariant, y.rhs, y.lhs)


def test_step_seven_soundness():
    ds = enumerate_domains(200)
    vecs = {d: invariant_vector(d) for d in ds}
    for a, b in itertools.combinations(ds, 2):
        c = distinguish(a, b)
        if isinstance(c, SeparatedBy) and c.step == 7 and c.detail:
            assert sorted(c.detail["lhs_generators"]) != sorted(c.detail["rhs_generators"])
            assert tuple(c.detail["lhs_generators"]) == recover_generators(vecs[a].cover_poincare)


def test_separated_values_differ():
    for a, b in itertools.combinations(enumerate_domains(100), 2):
        c = distinguish(a, b)
        assert isinstance(c, SeparatedBy) and c.lhs != c.rhs


def test_json_and_explain():
    jsonschema = pytest.importorskip("jsonschema")
    pairs = [("VI", "IV(27)"), ("I(3,3)", "I(3,3)"), ("IV(8)", "I(1,1) x I(4,1)"), ("II(7)", "I(6,3)")]
    for s1, s2 in pairs:
        c = distinguish(P(s1), P(s2))
        for cite in (True, False):
            doc = certificate_to_json(c, cite=cite)
            jsonschema.validate(doc, CERTIFICATE_SCHEMA)
        assert explain(c, P(s1), P(s2)) == explain(c, P(s1), P(s2))
    c = distinguish(P("VI"), P("IV(27)"))
    assert certificate_to_json(c)["result"] == "separated"
    assert "π₉" in explain(c)
