"""Text, LaTeX and JSON renderings of presentations."""
from __future__ import annotations

import re
from typing import Sequence

from .parse import parse_relations
from .polynomial import Polynomial
from .ring import Presentation

FORMATS = ("text", "latex", "json")


def _name_latex(name: str) -> str:
    m = re.fullmatch(r"([A-Za-z]+)_?(\d+)", name)
    return f"{m.group(1)}_{{{m.group(2)}}}" if m else name


def format_polynomial(p: Polynomial, names: Sequence[str], latex: bool = False) -> str:
    """``2*x1-3*x2`` style (or ``2x_{1}-3x_{2}`` with ``latex``), leading term first."""
    if p.is_zero():
        return "0"
    out = []
    for exps, c in p:
        factors = []
        for i, e in enumerate(exps):
            if not e:
                continue
            v = _name_latex(names[i]) if latex else names[i]
            if e > 1:
                v += f"^{{{e}}}" if latex else f"^{e}"
            factors.append(v)
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = ("" if latex else "*").join(factors)
        else:
            body = str(mag) + ("" if latex else "*") + ("" if latex else "*").join(factors)
        sign = "-" if c < 0 else ("+" if out else "")
        out.append(sign + body)
    return "".join(out)


def relation_strings(p: Presentation, latex: bool = False) -> list[str]:
    return [format_polynomial(q, p.variables, latex) for q in p.relations()]


def render_text(p: Presentation) -> str:
    if not p.variables:
        return "Z"
    rels = relation_strings(p) or ["0"]
    return f"Z[{','.join(p.variables)}]/({', '.join(rels)})"


def render_latex(p: Presentation) -> str:
    if not p.variables:
        return r"\mathbb{Z}"
    names = ",".join(_name_latex(v) for v in p.variables)
    rels = relation_strings(p, latex=True) or ["0"]
    return rf"\mathbb{{Z}}[{names}]/({', '.join(rels)})"


def to_json_doc(p: Presentation) -> dict:
    """JSON-ready dict; ``relations`` parse back with :func:`parse_relations`."""
    return {
        "ring": render_text(p),
        "variables": [{"name": v, "degree": 1} for v in p.variables],
        "relations": [format_polynomial(q, p.variables) for q in p.polynomial_relations],
        "monomial_relations": [[p.variables[i] for i in m] for m in p.monomial_relations],
    }


def from_json_doc(doc: dict) -> Presentation:
    variables = []
    for v in doc["variables"]:
        name, degree = (v, 1) if isinstance(v, str) else (v["name"], v.get("degree", 1))
        if degree != 1:
            raise ValueError(f"variable {name!r} has degree {degree}; only degree 1 is supported")
        variables.append(name)
    rels = doc.get("relations", [])
    if isinstance(rels, str):
        rels = [rels]
    polys = parse_relations("\n".join(rels), variables) if rels else []
    index = {v: i for i, v in enumerate(variables)}
    monos = []
    for m in doc.get("monomial_relations", []):
        try:
            monos.append(tuple(index[v] for v in m))
        except KeyError as exc:
            raise ValueError(f"unknown variable {exc.args[0]!r} in monomial relation") from None
    return Presentation(tuple(variables), tuple(monos), tuple(polys))


def render(p: Presentation, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(p)
    if fmt == "latex":
        return render_latex(p)
    if fmt == "json":
        import json
        return json.dumps(to_json_doc(p), indent=2)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


_RING = re.compile(r"\s*(?:Z|ZZ|\\mathbb\{Z\}|ℤ)\s*\[(?P<vars>[^\]]*)\]\s*(?:/\s*\((?P<rels>.*)\)\s*)?", re.S)


def parse_ring(text: str) -> Presentation:
    """Read back ``Z[s,t]/(2*t)`` style text, as produced by :func:`render_text`."""
    m = _RING.fullmatch(text)
    if m is None:
        raise ValueError(f"not a ring of the form Z[vars]/(relations): {text!r}")
    names = [v.strip() for v in m.group("vars").split(",") if v.strip()]
    rels = m.group("rels") or ""
    polys = parse_relations(rels, names) if rels.strip() not in ("", "0") else []
    return Presentation(tuple(names), (), tuple(polys))
