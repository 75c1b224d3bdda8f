"""Command-line frontend: emit tables as JSON or LaTeX and run the verification suites."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .coset_counts import alpha_tau_p, alpha_tau_pi, tilde_c_q1
from .hecke_poly import hecke_polynomial
from .parabolic import ParabolicDatum, enumerate_packet, hodge_types, min_length_set, pq_values
from .poly_core import P_TABLE, LaurentPolynomial, RationalFunction
from .relations import (
    appendix9_check,
    algebraic_relation_count,
    eigenvalue_vector,
    expected_relation_count,
    find_linear_relations,
    theorem_44_relation,
)
from .render import latex, latex_hecke_block, latex_name, latex_phi_expansion
from .satake import CONVENTIONS, satake_phi_expansion, satake_tau_p, satake_tau_pi
from .spin_clifford import (
    literal_theta_eigenvalue,
    m2_matches_orthogonal,
    theta_action_check,
    torus_weight,
    weil_numbers,
)
from .verify import SCOPES, max_g, verify_tables
from .weyl import subsets

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _poly(f: LaurentPolynomial | RationalFunction) -> dict:
    return f.to_dict()


def _need_g(args: argparse.Namespace, lo: int = 1, hi: int | None = None) -> int:
    if args.g is None:
        raise UsageError("--g is required")
    if args.g < lo or (hi is not None and args.g > hi):
        raise UsageError(f"--g must lie in {lo}..{hi if hi is not None else 'inf'}")
    return args.g


def _parabolic(args: argparse.Namespace) -> ParabolicDatum:
    g = _need_g(args)
    if args.parts is None:
        parts = (1,) * g
    else:
        try:
            parts = tuple(int(x) for x in args.parts.split(","))
        except ValueError:
            raise UsageError(f"--parts must be comma-separated integers, got {args.parts!r}") from None
    if sum(parts) != g or any(b < 1 for b in parts):
        raise UsageError(f"--parts {parts} must be positive and sum to g={g}")
    return ParabolicDatum(args.ptype, parts)


# commands --------------------------------------------------------------------

def cmd_satake(args: argparse.Namespace) -> str:
    g = _need_g(args)
    indices = range(g + 1) if args.i is None else [args.i]
    if args.i is not None and not 0 <= args.i <= g:
        raise UsageError(f"--i must lie in 0..{g}")
    if args.format == "latex":
        lines = []
        if args.i is None:
            lines.append(latex_phi_expansion("tau_p", {i: LaurentPolynomial.constant(P_TABLE, 1) for i in range(g + 1)}))
        for i in indices:
            exp = {k: v for k, v in satake_phi_expansion(g, i, args.convention).items() if not v.is_zero()}
            lines.append(latex_phi_expansion(f"tau_p{i}", exp))
        return "\n".join(lines)
    out: dict[str, Any] = {"g": g, "convention": args.convention}
    if args.i is None:
        out["tau_p"] = {"phi": {str(i): "1" for i in range(g + 1)}, "uv": _poly(satake_tau_p(g))}
    for i in indices:
        exp = satake_phi_expansion(g, i, args.convention)
        out[f"tau_p{i}"] = {
            "phi": {f"{j},{k}": _poly(c) for (j, k), c in sorted(exp.items()) if not c.is_zero()},
            "uv": _poly(satake_tau_pi(g, i, args.convention)),
        }
    return _dump(out)


def cmd_hecke_poly(args: argparse.Namespace) -> str:
    g = _need_g(args)
    coeffs = [h.poly for h in hecke_polynomial(g, args.convention)]
    if args.format == "latex":
        return latex_hecke_block(coeffs)
    return _dump({"g": g, "convention": args.convention, "coefficients": [_poly(h) for h in coeffs]})


def cmd_alpha(args: argparse.Namespace) -> str:
    g = _need_g(args)
    if args.i is None:
        value = alpha_tau_p(g)
        label = "tau_p"
    else:
        if not 0 <= args.i <= g:
            raise UsageError(f"--i must lie in 0..{g}")
        value = alpha_tau_pi(g, args.i, args.convention)
        label = f"tau_p{args.i}"
    if args.format == "latex":
        factor = "a_0 " if value.odd else ""
        return rf"\alpha({latex_name(label)}) = {factor}\left({latex(value.poly)}\right)"
    return _dump({"g": g, "of": label, "convention": args.convention, "a0_odd": value.odd, "poly": _poly(value.poly)})


def cmd_coset_table(args: argparse.Namespace) -> str:
    q_max = args.q1_max
    grid = {str(q1): {str(k): tilde_c_q1(q1, k, args.convention) for k in range(q1 + 1)} for q1 in range(q_max + 1)}
    if args.format == "latex":
        rows = [f"q_1={q1}: " + " & ".join(latex(v) for v in row.values()) for q1, row in grid.items()]
        return "\n".join(rows)
    return _dump({"convention": args.convention, "grid": {q: {k: _poly(v) for k, v in row.items()} for q, row in grid.items()}})


def cmd_spin(args: argparse.Namespace) -> str:
    g = _need_g(args, 1, max_g("clifford"))
    rows = []
    for I in subsets(g):
        rows.append({
            "I": list(I),
            "theta": [str(theta_action_check(g, i, I)) for i in range(1, g + 1)],
            "theta_literal": [str(literal_theta_eigenvalue(g, i, I)) for i in range(1, g + 1)],
            "weight": str(torus_weight(g, I)),
        })
    out = {
        "g": g,
        "basis": rows,
        "m2_matches_orthogonal": m2_matches_orthogonal(g),
        "weil_numbers": [str(x) for x in weil_numbers(g)],
    }
    return _dump(out)


def cmd_packet(args: argparse.Namespace) -> str:
    P = _parabolic(args)
    members = []
    for c in enumerate_packet(P):
        p_w, q_w = pq_values(P, c)
        reps = [{"a": list(r.a) if r.a is not None else None, "D": [list(d) for d in r.D], "length": n}
                for r, n in min_length_set(P, c)]
        members.append({"c": list(c.c), "p_w": p_w, "q_w": q_w, "min_length_set": reps})
    types = sorted(hodge_types(P).items())
    return _dump({
        "parabolic": P.label(),
        "members": members,
        "hodge_types": [{"p": p, "q": q, "multiplicity": m} for (p, q), m in types],
    })


def _relation_json(rel) -> dict:
    return {lab: str(c) for lab, c in zip(rel.labels, rel.coefficients)}


def cmd_relations(args: argparse.Namespace) -> str:
    if args.appendix9:
        rep = appendix9_check(args.convention, raise_on_failure=False)
        return _dump({"checks": rep.checks, "details": rep.details, "ok": rep.ok})
    if args.theorem44:
        g = _need_g(args, 2)
        rel = theorem_44_relation(g, args.convention)
        return _dump({"g": g, "relation": _relation_json(rel), "verified": True})
    P = _parabolic(args)
    rels = find_linear_relations(P, args.convention)
    vec = eigenvalue_vector(P, args.convention)
    return _dump({
        "parabolic": P.label(),
        "free_variables": list(vec.plan.free),
        "linear_relations": [_relation_json(r) for r in rels],
        "linear_count": len(rels),
        "algebraic_count": algebraic_relation_count(P, args.convention),
        "expected_count": expected_relation_count(P),
    })


def cmd_verify_tables(args: argparse.Namespace) -> tuple[str, int]:
    rep = verify_tables(args.scope)
    return _dump(rep.to_dict()), rep.exit_status


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="siegel-hecke", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, i: bool = False, fmt: bool = True, conv: bool = True) -> None:
        p.add_argument("--g", type=int)
        if i:
            p.add_argument("--i", type=int)
        if fmt:
            p.add_argument("--format", choices=("json", "latex"), default="json")
        if conv:
            p.add_argument("--convention", choices=CONVENTIONS, default="product")

    common(sub.add_parser("satake", help="Satake images of tau_p and tau_{p,i}"), i=True)
    common(sub.add_parser("hecke-poly", help="coefficients h_i of the Hecke polynomial"))
    common(sub.add_parser("alpha", help="alpha_G(chi) of tau_p (no --i) or tau_{p,i}"), i=True)
    ct = sub.add_parser("coset-table", help="the C~(q_1, k) grid")
    ct.add_argument("--q1-max", type=int, default=3)
    ct.add_argument("--format", choices=("json", "latex"), default="json")
    ct.add_argument("--convention", choices=CONVENTIONS, default="spherical")
    common(sub.add_parser("spin", help="Clifford construction of the spin representation"), fmt=False, conv=False)

    for name in ("packet", "relations"):
        p = sub.add_parser(name)
        p.add_argument("--g", type=int)
        p.add_argument("--parts")
        p.add_argument("--ptype", type=int, choices=(1, 2), default=1)
        if name == "relations":
            p.add_argument("--convention", choices=CONVENTIONS, default="product")
            p.add_argument("--theorem44", action="store_true")
            p.add_argument("--appendix9", action="store_true")
            p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")

    vt = sub.add_parser("verify-tables", help="regenerate tables and diff against golden data")
    vt.add_argument("--scope", choices=("all",) + SCOPES, default="all")
    return parser


_COMMANDS = {
    "satake": cmd_satake,
    "hecke-poly": cmd_hecke_poly,
    "alpha": cmd_alpha,
    "coset-table": cmd_coset_table,
    "spin": cmd_spin,
    "packet": cmd_packet,
    "relations": cmd_relations,
    "verify-tables": cmd_verify_tables,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    status = 0
    if isinstance(result, tuple):
        result, status = result
    sys.stdout.write(result + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
