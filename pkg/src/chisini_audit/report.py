"""Certificate serialization and the text report rendered from it.

JSON is canonical: UTF-8, keys in construction order, two-space indent, a
trailing newline, and integers only. The text report reads nothing but
the parsed JSON, so anything it shows is in the certificate.
"""

from __future__ import annotations

import json
from typing import Any

from . import __version__
from .sweep import SweepCertificate, expected_survivors


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def certificate_json(cert: SweepCertificate) -> str:
    return dumps(cert.to_dict())


def _assert_no_floats(obj: Any, path: str = "$") -> None:
    if isinstance(obj, float):
        raise ValueError(f"floating-point value at {path}")
    if isinstance(obj, dict):
        for k, v in obj.items():
            _assert_no_floats(v, f"{path}.{k}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            _assert_no_floats(v, f"{path}[{i}]")


def loads(text: str) -> dict:
    doc = json.loads(text)
    _assert_no_floats(doc)
    return doc


def _tuple_str(tup: dict) -> str:
    return f"({tup['m']};{tup['dbar']},{tup['u']},{tup['gbar']},{tup['t']})"


def _survivor_key(v: dict) -> tuple[int, ...]:
    tup = v["tuple"]
    return (tup["m"], tup["dbar"], tup["u"], tup["gbar"], tup["t"])


def acceptance_summary(doc: dict) -> list[tuple[str, bool]]:
    """Named assertions over a parsed certificate, in a fixed order."""
    rows: list[tuple[str, bool]] = []
    for entry in doc["per_m"]:
        m = entry["m"]
        checks = entry["checks"]
        rows.append(
            (f"m={m}: histogram totals equal tuples examined",
             sum(entry["histogram"].values()) == entry["tuples_examined"])
        )
        rows.append(
            (f"m={m}: both Chern derivations agree",
             checks["chern_mismatches"] == 0)
        )
        rows.append(
            (f"m={m}: line-section genus agrees with Hurwitz",
             checks["line_genus_mismatches"] == 0 and checks["parity_failures"] == 0)
        )
        rows.append(
            (f"m={m}: rational criterion equals polynomial form",
             checks["equivalence_failures"] == 0)
        )
        rows.append(
            (f"m={m}: degree bound below 12 under BMY",
             checks["bmy_bound_failures"] == 0)
        )
        if 6 <= m <= 11:
            rows.append(
                (f"m={m}: no feasible violating tuple satisfies BMY",
                 checks["lemma_gen_hits"] == 0)
            )
        if m in (6, 7):
            rows.append(
                (f"m={m}: no feasible violating tuple meets the ruled bounds",
                 checks["ruled_hits"] == 0)
            )
    lo, hi = doc["m_range"]
    found = {_survivor_key(v): v["classification"] for e in doc["per_m"] for v in e["survivors"]}
    enumerated = {e["m"] for e in doc["per_m"]}
    expected = {k: c for k, c in expected_survivors(lo, hi).items() if k[0] in enumerated}
    rows.append(("survivors match the two known exceptional families", found == expected))
    return rows


def render_report(doc: dict) -> str:
    lines = []
    lo, hi = doc["m_range"]
    lines.append(f"chisini-audit {__version__}  certificate v{doc['version']}  degrees {lo}..{hi}")
    lines.append("")
    lines.append("Axiom registry")
    for ax in doc["axioms"]:
        lines.append(f"  {ax['id']:<4} {ax['role']:<10} {ax['name']} [{ax['source']}]")
        lines.append(f"       {ax['statement']}")
    lines.append("")

    total_survivors = 0
    for entry in doc["per_m"]:
        lines.append(f"Degree m={entry['m']}: {entry['tuples_examined']} tuples")
        width = max((len(k) for k in entry["histogram"]), default=0)
        for key, count in entry["histogram"].items():
            lines.append(f"  {key:<{width}}  {count:>10}")
        if not entry["survivors"]:
            lines.append("  survivors: none")
        for v in entry["survivors"]:
            total_survivors += 1
            b, ch = v["branch"], v["chern"]
            lines.append(
                f"  survivor {_tuple_str(v['tuple'])}: d={b['d']} g={b['g']} c={b['c']} "
                f"n={b['n']}  K^2={ch['k2']} e={ch['e']}  -> {v['classification']}"
            )
            fib = v.get("fibered")
            if fib is not None:
                lines.extend("    " + row for row in _fibered_lines(fib))
        lines.append("")

    if doc["delegated"]:
        degrees = ", ".join(str(d["m"]) for d in doc["delegated"])
        lines.append(f"Delegated to AX2 without enumeration: m = {degrees}")
        lines.append("")

    lines.append("Acceptance summary")
    for name, ok in acceptance_summary(doc):
        lines.append(f"  [{'PASS' if ok else 'FAIL'}] {name}")
    lines.append(f"  survivors: {total_survivors}")
    return "\n".join(lines) + "\n"


def _fibered_lines(fib: dict) -> list[str]:
    bound = fib["bound"]
    out = [f"competing-degree bound {bound['num']}/{bound['den']}"]
    for ex in fib["excluded"]:
        out.append(f"degree {ex['degree']} excluded by {ex['axiom']}")
    if fib["outcome"] == "UndefinedBound":
        out.append("bound undefined: denominator 2(3d+g-1)-c is not positive")
    elif not fib["candidates"]:
        out.append("no candidate degrees")
    for cand in fib["candidates"]:
        tab = cand["table"]
        verdict = "obstructed" if cand["contradiction"] else "not obstructed: " + "; ".join(cand["failed"])
        out.append(
            f"degree {cand['degree']}: R^2={tab['r2']} C1^2={tab['c1sq']} C2^2={tab['c2sq']} "
            f"(R,C1)={tab['rc1']} (R,C2)={tab['rc2']} (C1,C2)={tab['c1c2']} "
            f"det={cand['determinant']}  {verdict}"
        )
    out.append(f"outcome: {fib['outcome']}")
    return out


def render_fibered(fib: dict) -> str:
    b = fib["branch"]
    head = f"branch d={b['d']} g={b['g']} c={b['c']} n={b['n']}, primary degree {fib['deg_primary']}"
    return "\n".join([head] + _fibered_lines(fib)) + "\n"
