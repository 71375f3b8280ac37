"""Exhaustive desk-scale checks: every pair of irreducible domains up to a dimension bound."""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .distinguish import (
    Certificate,
    Inconclusive,
    Isomorphic,
    compare_vectors,
    distinguish,
)
from .domains import DomainSpec, Irreducible, ambient_dim, is_tube, make_product
from .graded import top_degree
from .invariants import degree_sum_holds, invariant_vector, type_v_alexander_check
from .shilov import lie_sphere_bundle_trivial, lie_sphere_orientable, model_dim, shilov_model


def enumerate_domains(max_ambient_dim: int) -> list[Irreducible]:
    """Canonical irreducible domains with real dimension <= bound, in family order."""
    bound = max_ambient_dim
    out: list[Irreducible] = []
    p = 1
    while 2 * p <= bound:
        for q in range(1, p + 1):
            if 2 * p * q <= bound:
                out.append(Irreducible("I", (p, q)))
        p += 1
    for fam, start in (("II", 5), ("III", 2), ("IV", 5)):
        n = start
        while ambient_dim(Irreducible(fam, (n,))) <= bound:
            out.append(Irreducible(fam, (n,)))
            n += 1
    for fam in ("V", "VI"):
        if ambient_dim(Irreducible(fam)) <= bound:
            out.append(Irreducible(fam))
    return out


@dataclass
class IdentityCheck:
    name: str
    passed: bool
    detail: str


@dataclass
class Coincidence:
    lhs: DomainSpec
    rhs: DomainSpec
    shared: dict

    def to_json(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "shared": self.shared}


@dataclass
class VerificationReport:
    max_ambient_dim: int
    domain_count: int
    pair_count: int
    failures: list[tuple[str, str, str]]
    identity_checks: list[IdentityCheck]
    step_counts: dict[str, int]
    coincidences: list[Coincidence] = field(default_factory=list)
    elapsed: float = 0.0
    certificates: Optional[dict[tuple[str, str], Certificate]] = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return not self.failures and all(c.passed for c in self.identity_checks)

    def to_json(self) -> dict:
        return {
            "max_ambient_dim": self.max_ambient_dim,
            "domain_count": self.domain_count,
            "pair_count": self.pair_count,
            "failures": [{"lhs": a, "rhs": b, "reason": r} for a, b, r in self.failures],
            "identity_checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.identity_checks
            ],
            "step_counts": dict(self.step_counts),
            "coincidences": [c.to_json() for c in self.coincidences],
            "elapsed": round(self.elapsed, 6),
            "ok": self.ok,
        }

    def to_text(self) -> str:
        lines = [
            f"domains with real dimension <= {self.max_ambient_dim}: {self.domain_count}",
            f"pairs checked: {self.pair_count}",
            "separating step histogram:",
        ]
        lines += [f"  {k:<16}{v:>8}" for k, v in self.step_counts.items()]
        lines.append("identity checks:")
        lines += [f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in self.identity_checks]
        lines.append(f"failures: {len(self.failures)}")
        lines += [f"  {a} vs {b}: {r}" for a, b, r in self.failures]
        if self.coincidences:
            lines.append(f"coincidences: {len(self.coincidences)}")
            lines += [f"  {c.lhs}  ~  {c.rhs}" for c in self.coincidences]
        lines.append(f"verdict: {'VERIFIED' if self.ok else 'FAILED'}")
        return "\n".join(lines)


REPORT_SCHEMA = {
    "type": "object",
    "required": ["max_ambient_dim", "domain_count", "pair_count", "failures", "identity_checks",
                 "step_counts", "coincidences", "elapsed", "ok"],
    "properties": {
        "max_ambient_dim": {"type": "integer"},
        "domain_count": {"type": "integer", "minimum": 0},
        "pair_count": {"type": "integer", "minimum": 0},
        "failures": {"type": "array", "items": {
            "type": "object", "required": ["lhs", "rhs", "reason"],
            "properties": {"lhs": {"type": "string"}, "rhs": {"type": "string"}, "reason": {"type": "string"}},
        }},
        "identity_checks": {"type": "array", "items": {
            "type": "object", "required": ["name", "passed", "detail"],
            "properties": {"name": {"type": "string"}, "passed": {"type": "boolean"}, "detail": {"type": "string"}},
        }},
        "step_counts": {"type": "object", "additionalProperties": {"type": "integer"}},
        "coincidences": {"type": "array", "items": {
            "type": "object", "required": ["lhs", "rhs", "shared"],
            "properties": {"lhs": {"type": "string"}, "rhs": {"type": "string"}, "shared": {"type": "object"}},
        }},
        "elapsed": {"type": "number", "minimum": 0},
        "ok": {"type": "boolean"},
    },
    "additionalProperties": False,
}

COINCIDENCE_SCHEMA = {"type": "array", "items": REPORT_SCHEMA["properties"]["coincidences"]["items"]}


def _judge(a: Irreducible, b: Irreducible, cert: Certificate) -> Optional[str]:
    if isinstance(cert, Inconclusive):
        return f"inconclusive: {cert.reason}"
    if isinstance(cert, Isomorphic):
        return "claimed isomorphic for distinct specs"
    return None


def _check_chunk(args: tuple[list[Irreducible], list[tuple[int, int]]]) -> tuple[list, Counter]:
    domains, pairs = args
    vectors = [invariant_vector(d) for d in domains]
    failures, counts = [], Counter()
    for i, j in pairs:
        a, b = domains[i], domains[j]
        sep = compare_vectors(vectors[i], vectors[j])
        cert = sep if sep is not None else distinguish(a, b)
        why = _judge(a, b, cert)
        if why is not None:
            failures.append((i, j, why))
        else:
            counts[cert.label] += 1
    return failures, counts


def identity_checks(domains: list[Irreducible]) -> list[IdentityCheck]:
    checks = []

    bad = [str(d) for d in domains
           if is_tube(d) and 2 * model_dim(shilov_model(d)) != ambient_dim(d)]
    n_tube = sum(1 for d in domains if is_tube(d))
    checks.append(IdentityCheck("tube_halving", not bad,
                                f"{n_tube} tube domains" + (f"; mismatches {bad}" if bad else "")))

    vectors = [(d, invariant_vector(d)) for d in domains]
    with_cover = [(d, v) for d, v in vectors if v.cover_poincare is not None]
    bad = [f"{d}: top {top_degree(v.cover_poincare)} != dim {v.shilov_dim}"
           for d, v in with_cover if not degree_sum_holds(v)]
    checks.append(IdentityCheck("degree_sum", not bad,
                                f"{len(with_cover)} cover polynomials" + (f"; {bad}" if bad else "")))

    bad = []
    n_rows = 0
    for d in domains:
        if is_tube(d):
            continue
        n_rows += 1
        if d.family == "I":
            p, q = d.params
            expected = 2 * p * q - q * q
        elif d.family == "II":
            q = d.params[0] // 2
            expected = 2 * q * q + 3 * q
        else:
            expected = 24
        got = model_dim(shilov_model(d))
        if got != expected:
            bad.append(f"{d}: {got} != {expected}")
    checks.append(IdentityCheck("non_tube_shilov_dims", not bad,
                                f"{n_rows} non-tube rows" + (f"; {bad}" if bad else "")))

    ns = sorted({d.params[0] for d in domains if d.family == "IV"} | set(range(5, 41)))
    bad = [n for n in ns
           if not (lie_sphere_bundle_trivial(n) == (n % 2 == 0) == lie_sphere_orientable(n))]
    checks.append(IdentityCheck("lie_sphere_parity", not bad,
                                f"n in [{ns[0]}, {ns[-1]}]" + (f"; mismatches {bad}" if bad else "")))

    av = type_v_alexander_check()
    t = av.trace()
    checks.append(IdentityCheck(
        "type_v_alexander", av.passed,
        f"{t['boundary_sphere']}, shilov {t['shilov_dim']}, fiber {t['fiber_dim']}, "
        f"base {t['base_dim']}, {t['vanishes']}",
    ))
    return checks


def verify_theorem(max_ambient_dim: int = 400, *, workers: int = 1,
                   keep_certificates: bool = False) -> VerificationReport:
    if max_ambient_dim < 2:
        raise ValueError("max_ambient_dim must be >= 2")
    t0 = time.perf_counter()
    domains = enumerate_domains(max_ambient_dim)
    pairs = list(itertools.combinations(range(len(domains)), 2))

    if workers > 1 and len(pairs) > 1000:
        size = -(-len(pairs) // workers)
        chunks = [(domains, pairs[k:k + size]) for k in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_chunk, chunks))
    else:
        results = [_check_chunk((domains, pairs))]

    raw_failures, counts = [], Counter()
    for f, c in results:
        raw_failures.extend(f)
        counts.update(c)
    raw_failures.sort()
    failures = [(str(domains[i]), str(domains[j]), why) for i, j, why in raw_failures]

    certs = None
    if keep_certificates:
        certs = {(str(domains[i]), str(domains[j])): distinguish(domains[i], domains[j]) for i, j in pairs}

    order = ["pi1", "dimension", "pi9", "pi2", "torsion", "cover_poincare"]
    return VerificationReport(
        max_ambient_dim=max_ambient_dim,
        domain_count=len(domains),
        pair_count=len(pairs),
        failures=failures,
        identity_checks=identity_checks(domains),
        step_counts={k: counts.get(k, 0) for k in order},
        elapsed=time.perf_counter() - t0,
        certificates=certs,
    )


def enumerate_products(max_ambient_dim: int, max_factors: int) -> list[DomainSpec]:
    """Irreducibles and products of up to ``max_factors`` of them, total dimension <= bound."""
    base = enumerate_domains(max_ambient_dim)
    dims = [ambient_dim(d) for d in base]
    out: list[DomainSpec] = []
    for k in range(1, max_factors + 1):
        for combo in itertools.combinations_with_replacement(range(len(base)), k):
            if sum(dims[i] for i in combo) <= max_ambient_dim:
                out.append(make_product(*(base[i] for i in combo)))
    return out


def _shared_fields(a: DomainSpec, b: DomainSpec) -> dict:
    ja, jb = invariant_vector(a).to_json(cite=False), invariant_vector(b).to_json(cite=False)
    shared = {}
    for k, va in ja.items():
        if k in ("citations", "cover_kind"):
            continue
        vb = jb[k]
        if va == vb and va not in ("unknown", None):
            shared[k] = va
    return shared


def find_coincidences(max_ambient_dim: int, max_factors: int) -> list[Coincidence]:
    """Pairs of structurally distinct specs that no known invariant separates."""
    if max_factors < 1:
        raise ValueError("max_factors must be >= 1")
    specs = enumerate_products(max_ambient_dim, max_factors)
    buckets: dict[tuple[int, int], list[DomainSpec]] = {}
    for s in specs:
        v = invariant_vector(s)
        buckets.setdefault((v.shilov_dim, v.pi1.free_rank), []).append(s)
    out = []
    for key in sorted(buckets):
        group = buckets[key]
        for a, b in itertools.combinations(group, 2):
            if isinstance(distinguish(a, b), Inconclusive):
                out.append(Coincidence(a, b, _shared_fields(a, b)))
    return out
