"""Command-line interface: ``shilovdet {info,distinguish,verify,coincidences}``.

Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
3 inconclusive distinguish.
"""

from __future__ import annotations

import argparse
import json
import sys

from .distinguish import Inconclusive, certificate_to_json, distinguish, explain
from .domains import DomainError, Irreducible, ambient_dim, parse_domain, rank, tube_class
from .invariants import invariant_vector, literal_unitary_degrees, unitary_degrees
from .shilov import (
    LieSphere,
    lie_sphere_bundle_trivial,
    lie_sphere_orientable,
    model_dim,
    shilov_model,
)
from .verify import find_coincidences, verify_theorem

EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _max_dim(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("--max-dim must be at least 2")
    return n


def _factors(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("--factors must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="shilovdet", description="Shilov boundary invariants of bounded symmetric domains")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--no-cite", action="store_true", help="omit citation anchors")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", parents=[common], help="invariants of one domain")
    p.add_argument("spec")

    p = sub.add_parser("distinguish", parents=[common], help="separate two domains")
    p.add_argument("spec1")
    p.add_argument("spec2")

    p = sub.add_parser("verify", parents=[common], help="pairwise sweep over irreducible domains")
    p.add_argument("--max-dim", type=_max_dim, default=400)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("coincidences", parents=[common], help="products no invariant separates")
    p.add_argument("--max-dim", type=_max_dim, default=20)
    p.add_argument("--factors", type=_factors, default=2)
    return ap


def info_document(spec, cite: bool = True) -> dict:
    model = shilov_model(spec)
    vec = invariant_vector(spec)
    doc = {
        "spec": str(spec),
        "ambient_dim": ambient_dim(spec),
        "rank": rank(spec),
        "tube_class": str(tube_class(spec)) if isinstance(spec, Irreducible) else None,
        "shilov_model": str(model),
        "model_exact": model.exact,
        "model_dim": model_dim(model),
        "invariants": vec.to_json(cite=cite),
    }
    if isinstance(model, LieSphere):
        doc["lie_sphere"] = {
            "orientable": lie_sphere_orientable(model.n),
            "bundle_trivial": lie_sphere_bundle_trivial(model.n),
        }
    if isinstance(spec, Irreducible) and spec.family == "I" and spec.params[0] == spec.params[1]:
        q = spec.params[0]
        doc["unitary_generators"] = {
            "implemented": list(unitary_degrees(q)),
            "alternative_listing": list(literal_unitary_degrees(q)),
            "alternative_degree_sum": sum(literal_unitary_degrees(q)),
            "dim_U": q * q,
        }
    return doc


def _info_text(doc: dict) -> str:
    inv = doc["invariants"]
    lines = [
        f"domain          {doc['spec']}",
        f"real dimension  {doc['ambient_dim']}",
        f"rank            {doc['rank']}",
    ]
    if doc["tube_class"]:
        lines.append(f"class           {doc['tube_class']}")
    exact = "" if doc["model_exact"] else "  (up to finite cover)"
    lines.append(f"Shilov boundary {doc['shilov_model']}{exact}")
    lines.append(f"Shilov dim      {doc['model_dim']}")
    pi1 = "trivial" if inv["pi1_trivial"] else f"free rank {inv['pi1_free_rank']}"
    lines.append(f"pi1             {pi1}")
    lines.append(f"pi2 nonzero     {inv['pi2_nonzero']}")
    lines.append(f"pi9 nonzero     {inv['pi9_nonzero']}")
    tor = {"yes": "no (torsion-free)", "no": "present", "unknown": "unknown"}[inv["h_torsion_free"]]
    lines.append(f"torsion         {tor}")
    lines.append(f"orientable      {inv['orientable']}")
    if "lie_sphere" in doc:
        ls = doc["lie_sphere"]
        lines.append(f"bundle trivial  {'yes' if ls['bundle_trivial'] else 'no'} (L^n -> S^1, fibre sphere)")
    lines.append(f"cover ({inv['cover_kind']}) {inv['cover_poincare'] or '-'}")
    if "unitary_generators" in doc:
        ug = doc["unitary_generators"]
        lines.append(f"H*(U(q)) gens   {ug['implemented']} (sum {sum(ug['implemented'])} = dim U = {ug['dim_U']})")
        lines.append(f"  alt. listing  {ug['alternative_listing']} (sum {ug['alternative_degree_sum']}, rejected)")
    if inv["citations"]:
        lines.append("citations:")
        lines += [f"  {k}: {v}" for k, v in inv["citations"].items()]
    return "\n".join(lines)


def _emit(fmt: str, doc, text: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cite = not args.no_cite
    try:
        if args.command == "info":
            spec = parse_domain(args.spec)
            doc = info_document(spec, cite=cite)
            _emit(args.format, doc, _info_text(doc))
            return EXIT_OK

        if args.command == "distinguish":
            d1, d2 = parse_domain(args.spec1), parse_domain(args.spec2)
            cert = distinguish(d1, d2)
            doc = certificate_to_json(cert, cite=cite)
            text = explain(cert, d1, d2)
            if not cite:
                text = "\n".join(l for l in text.splitlines() if not l.lstrip().startswith(("because:", "known coincidence:")))
            doc["explanation"] = text
            _emit(args.format, doc, text)
            return EXIT_INCONCLUSIVE if isinstance(cert, Inconclusive) else EXIT_OK
    except DomainError as exc:
        print(f"shilovdet: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.command == "verify":
        report = verify_theorem(args.max_dim, workers=max(1, args.workers))
        _emit(args.format, report.to_json(), report.to_text())
        return EXIT_OK if report.ok else EXIT_VERIFY_FAILED

    found = find_coincidences(args.max_dim, args.factors)
    docs = [c.to_json() for c in found]
    text = "\n".join(f"{c.lhs}  ~  {c.rhs}" for c in found) or "no coincidences"
    _emit(args.format, docs, text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
