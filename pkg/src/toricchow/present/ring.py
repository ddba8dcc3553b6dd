"""Graded quotient rings Z[v_1..v_m]/(relations) with every v_i in degree 1."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exactla import FgAbelianGroup, IntMatrix, quotient_group, smith_normal_form
from .polynomial import Exps, Polynomial

MAX_DEGREE = 12
MAX_VARIABLES = 32


@dataclass(frozen=True)
class Presentation:
    """A ring presentation: names, squarefree monomial relations, polynomial relations.

    Monomial relations are sorted tuples of variable indices. Polynomial
    relations must be homogeneous; zero relations are dropped.
    """

    variables: tuple[str, ...]
    monomial_relations: tuple[tuple[int, ...], ...] = ()
    polynomial_relations: tuple[Polynomial, ...] = ()

    def __post_init__(self):
        names = tuple(self.variables)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be unique: {list(names)}")
        n = len(names)
        monos = []
        for m in self.monomial_relations:
            m = tuple(sorted(m))
            if not m or len(set(m)) != len(m) or not all(0 <= i < n for i in m):
                raise ValueError(f"bad monomial relation {m} over {n} variables")
            monos.append(m)
        polys = []
        for p in self.polynomial_relations:
            if p.nvars != n:
                raise ValueError(f"relation in {p.nvars} variables, ring has {n}")
            if not p.is_homogeneous():
                raise ValueError(f"inhomogeneous relation {p!r}")
            if p.is_zero():
                continue
            if p.degree() == 0:
                raise ValueError("nonzero constant relation")
            polys.append(p)
        object.__setattr__(self, "variables", names)
        object.__setattr__(self, "monomial_relations", tuple(monos))
        object.__setattr__(self, "polynomial_relations", tuple(polys))

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def degrees(self) -> tuple[int, ...]:
        return (1,) * len(self.variables)

    def monomial_polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(self.ngens, m) for m in self.monomial_relations]

    def relations(self) -> list[Polynomial]:
        """All relations as polynomials: polynomial ones first, then monomials."""
        return list(self.polynomial_relations) + self.monomial_polynomials()

    def __str__(self) -> str:
        from .render import render_text
        return render_text(self)


# ---------------------------------------------------------------------------
# simplification


def _unit_variable(p: Polynomial) -> int | None:
    """Lowest-index variable appearing only as a linear term with coefficient +-1."""
    n = p.nvars
    for v in range(n):
        e = tuple(int(i == v) for i in range(n))
        if p.coefficient(e) not in (1, -1):
            continue
        if any(exps[v] for exps, _ in p if exps != e):
            continue
        return v
    return None


def _dedupe(polys):
    out = []
    for p in polys:
        if not p.is_zero() and p not in out:
            out.append(p)
    return out


def _is_diagonal(polys: list[Polynomial]) -> bool:
    used = set()
    for p in polys:
        if len(p) != 1:
            return False
        (v,) = p.variables()
        if v in used:
            return False
        used.add(v)
    return True


def _indexed(prefix: str, k: int) -> list[str]:
    return [prefix] if k == 1 else [f"{prefix}{i + 1}" for i in range(k)]


def _linear_snf(names, polys):
    """Diagonalize a purely linear presentation by an integral change of coordinates.

    With U R V = D for the coefficient matrix R, the new coordinates
    w = V^-1 x turn the relations into d_i w_i. Coordinates with d_i = 1
    vanish; free ones are named s.., torsion ones t..
    """
    n = len(names)
    r = IntMatrix([p.linear_coefficients() for p in polys], shape=(len(polys), n))
    res = smith_normal_form(r)
    diag = res.invariant_factors
    free = list(range(len(diag), n))
    tors = [i for i, d in enumerate(diag) if d > 1]
    new_names = _indexed("s", len(free)) + _indexed("t", len(tors))
    m = len(new_names)
    rels = [Polynomial.var(m, len(free) + k, diag[i]) for k, i in enumerate(tors)]
    return new_names, rels


def simplify(p: Presentation) -> Presentation:
    """Eliminate variables through relations with a unit linear coefficient.

    Relations are scanned in stored order; the first one having a variable
    that occurs only in a +-1 linear term is solved for the lowest such
    variable, which is substituted everywhere and dropped together with
    the relation (monomial relations touching it become polynomial
    relations, appended at the end). This repeats until nothing applies.
    If what is left is purely linear, has no monomial relations and is not
    already diagonal, an SNF change of coordinates finishes the job.
    Leading coefficients of the output are made positive.
    """
    names = list(p.variables)
    polys = list(p.polynomial_relations)
    monos = [tuple(m) for m in p.monomial_relations]
    while True:
        hit = None
        for k, rel in enumerate(polys):
            v = _unit_variable(rel)
            if v is not None:
                hit = (k, v)
                break
        if hit is None:
            break
        k, v = hit
        rel = polys.pop(k)
        n = len(names)
        c = rel.coefficient(tuple(int(i == v) for i in range(n)))
        value = (rel - Polynomial.var(n, v, c)) * (-c)
        polys = [q.substitute(v, value) for q in polys]
        kept = []
        for m in monos:
            if v in m:
                polys.append(Polynomial.monomial(n, m).substitute(v, value))
            else:
                kept.append(m)
        polys = [q.drop_variable(v) for q in _dedupe(polys)]
        monos = [tuple(i - (i > v) for i in m) for m in kept]
        del names[v]
    polys = _dedupe(polys)
    if polys and not monos and all(q.degree() == 1 for q in polys) and not _is_diagonal(polys):
        names, polys = _linear_snf(names, polys)
    polys = _dedupe(q.normalize_sign() for q in polys)
    monos = list(dict.fromkeys(monos))
    return Presentation(tuple(names), tuple(monos), tuple(polys))


# ---------------------------------------------------------------------------
# graded oracle


@dataclass(frozen=True)
class GradedTable:
    """Degree-k pieces of a graded ring as abelian groups, k = 0..max_degree."""

    groups: tuple[FgAbelianGroup, ...]

    @property
    def max_degree(self) -> int:
        return len(self.groups) - 1

    def __getitem__(self, k: int) -> FgAbelianGroup:
        return self.groups[k]

    def lines(self) -> list[str]:
        return [f"deg {k}: {g}" for k, g in enumerate(self.groups)]

    def __str__(self) -> str:
        return "\n".join(self.lines())

    def to_list(self) -> list[dict]:
        return [{"degree": k, "free_rank": g.rank, "torsion": list(g.torsion)}
                for k, g in enumerate(self.groups)]


def monomials(nvars: int, degree: int) -> list[Exps]:
    """All exponent vectors of the given total degree, graded-lex descending."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        out.extend((first,) + rest for rest in monomials(nvars - 1, degree - first))
    return out


def graded_piece(relations: Sequence[Polynomial], nvars: int, k: int) -> FgAbelianGroup:
    """Degree-k component of Z[v_1..v_nvars]/(relations)."""
    basis = monomials(nvars, k)
    index = {e: i for i, e in enumerate(basis)}
    rows = []
    for rel in relations:
        e = rel.degree()
        if e > k:
            continue
        terms = rel.terms()
        for mult in monomials(nvars, k - e):
            rows.append({index[tuple(a + b for a, b in zip(exps, mult))]: c for exps, c in terms})
    return quotient_group(rows, len(basis))


def graded_invariants(p: Presentation, max_degree: int) -> GradedTable:
    if not 0 <= max_degree <= MAX_DEGREE:
        raise ValueError(f"max_degree must be in 0..{MAX_DEGREE}, got {max_degree}")
    if p.ngens > MAX_VARIABLES:
        raise ValueError(f"at most {MAX_VARIABLES} variables supported, got {p.ngens}")
    rels = p.relations()
    return GradedTable(tuple(graded_piece(rels, p.ngens, k) for k in range(max_degree + 1)))


def graded_equal(p: Presentation, q: Presentation, max_degree: int) -> bool:
    """Degree-by-degree agreement up to ``max_degree``.

    Necessary for the two rings to be isomorphic as graded rings, not
    sufficient.
    """
    return graded_invariants(p, max_degree) == graded_invariants(q, max_degree)
