import json

import pytest

from shilovdet.distinguish import SeparatedBy
from shilovdet.domains import Irreducible, ambient_dim, parse_domain
from shilovdet.verify import (
    COINCIDENCE_SCHEMA,
    REPORT_SCHEMA,
    enumerate_domains,
    find_coincidences,
    verify_theorem,
)


def brute_domains(bound):
    """Direct scan of the dimension formulas over a generous parameter box."""
    out = set()
    for p in range(1, bound + 1):
        for q in range(1, p + 1):
            if 2 * p * q <= bound:
                out.add(f"I({p},{q})")
    for n in range(5, bound + 1):
        if n * (n - 1) <= bound:
            out.add(f"II({n})")
        if 2 * n <= bound:
            out.add(f"IV({n})")
    for n in range(2, bound + 1):
        if n * (n + 1) <= bound:
            out.add(f"III({n})")
    if bound >= 32:
        out.add("V")
    if bound >= 54:
        out.add("VI")
    return out


def test_enumerate_examples():
    assert [str(d) for d in enumerate_domains(10)] == [
        "I(1,1)", "I(2,1)", "I(2,2)", "I(3,1)", "I(4,1)", "I(5,1)", "III(2)", "IV(5)"]
    assert enumerate_domains(2) == [Irreducible("I", (1, 1))]
    assert [str(d) for d in enumerate_domains(54)].count("VI") == 1
    assert "VI" not in [str(d) for d in enumerate_domains(53)]


@pytest.mark.parametrize("bound", [2, 10, 31, 32, 54, 120, 400])
def test_enumerate_matches_brute_force(bound):
    ds = enumerate_domains(bound)
    assert {str(d) for d in ds} == brute_domains(bound)
    assert len(ds) == len(set(ds))
    assert all(ambient_dim(d) <= bound for d in ds)


def test_small_sweep_and_certificate_lookup():
    rep = verify_theorem(54, keep_certificates=True)
    assert rep.ok and rep.failures == []
    c = rep.certificates[("IV(27)", "VI")]
    assert isinstance(c, SeparatedBy) and c.step == 4
    assert rep.step_counts["pi9"] == 1
    assert rep.pair_count == rep.domain_count * (rep.domain_count - 1) // 2
    assert sum(rep.step_counts.values()) == rep.pair_count


def test_determinism_and_json():
    jsonschema = pytest.importorskip("jsonschema")
    a, b = verify_theorem(120).to_json(), verify_theorem(120).to_json()
    a.pop("elapsed"), b.pop("elapsed")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    doc = verify_theorem(60).to_json()
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert "VERIFIED" in verify_theorem(60).to_text()


def test_parallel_matches_serial():
    s = verify_theorem(200).to_json()
    p = verify_theorem(200, workers=2).to_json()
    s.pop("elapsed"), p.pop("elapsed")
    assert s == p


def test_monotone_failures():
    small, big = verify_theorem(80), verify_theorem(160)
    allowed = {str(d) for d in enumerate_domains(80)}
    restricted = {(a, b) for a, b, _ in big.failures if a in allowed and b in allowed}
    assert {(a, b) for a, b, _ in small.failures} <= restricted


def test_bad_bound():
    with pytest.raises(ValueError):
        verify_theorem(1)


def test_coincidences_contain_remark_pairs():
    found = {(str(c.lhs), str(c.rhs)) for c in find_coincidences(20, 2)}
    assert ("IV(6)", "I(1,1) x I(3,1)") in found
    assert ("IV(8)", "I(1,1) x I(4,1)") in found


def test_coincidences_iv_members_follow_pattern():
    for c in find_coincidences(40, 2):
        for a, b in ((c.lhs, c.rhs), (c.rhs, c.lhs)):
            if isinstance(a, Irreducible) and a.family == "IV":
                n = a.params[0] // 2
                assert a.params[0] % 2 == 0
                assert b == parse_domain(f"I(1,1) x I({n},1)")


def test_no_irreducible_coincidences():
    assert find_coincidences(8, 1) == []
    assert find_coincidences(120, 1) == []


def test_coincidence_records_and_schema():
    jsonschema = pytest.importorskip("jsonschema")
    found = find_coincidences(20, 2)
    docs = [c.to_json() for c in found]
    jsonschema.validate(docs, COINCIDENCE_SCHEMA)
    rec = next(c for c in found if str(c.lhs) == "IV(8)")
    assert rec.shared["shilov_dim"] == 8
    assert rec.shared["cover_poincare"] == "1 + t^1 + t^7 + t^8"
    assert find_coincidences(8, 2) == find_coincidences(8, 2)
