"""Non-strict stacky fans and the Stanley-Reisner presentation of their Chow rings.

A stacky fan here is a simplicial fan on L = Z^r together with a lift
``B`` of beta: L -> N = Z^d + Z/a_1 + ... + Z/a_s, given as a (d+s) x r
integer matrix. The first d rows are free coordinates; row d+j is read
modulo a_j but is used exactly as supplied.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactla import (FgAbelianGroup, IntMatrix, as_matrix, cokernel, invariant_factors, rank,
                      saturation, solve_integer)
from .fan import (Fan, FanError, ValidationReport, has_torus_factor, hat_fan,
                  minimal_nonfaces, validate_fan)
from .present import Polynomial, Presentation


class HypothesisError(ValueError):
    """The input violates a hypothesis of the Chow ring formula."""

    def __init__(self, report: ValidationReport | str):
        if isinstance(report, str):
            report = ValidationReport((report,))
        self.report = report
        super().__init__("; ".join(report.violations))


@dataclass(frozen=True)
class StackyFan:
    fan: Fan
    target: FgAbelianGroup
    lift: IntMatrix

    def __post_init__(self):
        lift = as_matrix(self.lift)
        if lift.cols != self.fan.lattice_rank:
            if lift.rows == 0 and lift.cols == 0:
                lift = IntMatrix.zeros(0, self.fan.lattice_rank)
            else:
                raise FanError(f"lift has {lift.cols} columns, lattice rank is {self.fan.lattice_rank}")
        if lift.rows != self.target.ngens:
            raise FanError(f"lift has {lift.rows} rows, target needs rank + |torsion| = {self.target.ngens}")
        object.__setattr__(self, "lift", lift)

    @property
    def free_rows(self) -> IntMatrix:
        return self.lift.select_rows(range(self.target.rank))

    @property
    def torsion_rows(self) -> IntMatrix:
        return self.lift.select_rows(range(self.target.rank, self.target.ngens))

    def normalized_lift(self) -> IntMatrix:
        """Copy of the lift with torsion rows reduced modulo their coefficients."""
        d = self.target.rank
        rows = [list(self.lift.row(i)) if i < d
                else [x % self.target.torsion[i - d] for x in self.lift.row(i)]
                for i in range(self.lift.rows)]
        return IntMatrix(rows, shape=self.lift.shape)


@dataclass(frozen=True)
class CoxQuotientReport:
    """The block matrix (F B^T ; Q^T), its cokernel M and the weight map Z^(n+s) -> M."""

    matrix: IntMatrix
    character_group: FgAbelianGroup
    weights: IntMatrix

    def lines(self) -> list[str]:
        return [
            f"block matrix: {self.matrix.to_list()}",
            f"character group M: {self.character_group}",
            f"weights: {self.weights.to_list()}",
        ]


def validate_hypotheses(sf: StackyFan, check_fan: bool = True) -> ValidationReport:
    """Fan validity, smoothness and absence of torus factors, each reported separately."""
    fan = sf.fan
    report = validate_fan(fan) if check_fan else ValidationReport()
    if not report.ok:
        return report
    out = []
    for k, c in enumerate(fan.max_cones):
        diag = invariant_factors(fan.cone_matrix(c))
        if len(diag) < len(c) or any(x != 1 for x in diag):
            out.append(f"not smooth: max cone {k} {sorted(c)} has invariant factors {list(diag)}")
    if has_torus_factor(fan):
        out.append(f"torus factor: rays span rank {rank(fan.ray_matrix())} < lattice rank {fan.lattice_rank}")
    return report + ValidationReport(tuple(out))


def cokernel_is_finite(sf: StackyFan) -> bool:
    return rank(sf.free_rows) == sf.target.rank


def split_infinite(sf: StackyFan) -> tuple[int, StackyFan]:
    """Pass to the saturation N_1 of the image of beta.

    N_1 is Sat(free image) + all torsion; the free rows of the lift are
    rewritten in the column-HNF basis of the saturation, torsion rows
    are kept. Returns rk(N_0) = d - rk(free rows) and the reduced fan.
    """
    free = sf.free_rows
    sat = saturation(free)
    coords = solve_integer(sat, free)
    lift = coords.vstack(sf.torsion_rows)
    target = FgAbelianGroup(sat.cols, sf.target.torsion)
    return sf.target.rank - sat.cols, StackyFan(sf.fan, target, lift)


def _torsion_block(target: FgAbelianGroup) -> IntMatrix:
    d, s = target.rank, len(target.torsion)
    return IntMatrix([[0] * d + [target.torsion[j] if k == j else 0 for k in range(s)]
                      for j in range(s)], shape=(s, d + s))


def assemble_block_matrix(sf: StackyFan) -> CoxQuotientReport:
    fbt = sf.fan.ray_matrix() @ sf.lift.T
    matrix = fbt.vstack(_torsion_block(sf.target))
    group, weights = cokernel(matrix)
    return CoxQuotientReport(matrix, group, weights)


def _require(sf: StackyFan, check_fan: bool):
    report = validate_hypotheses(sf, check_fan)
    if not report.ok:
        raise HypothesisError(report)


def stanley_reisner(sf: StackyFan, check_fan: bool = True) -> Presentation:
    """SR(Sigma, beta) = Z[x_1..x_n, y_1..y_s]/(I + J_1 + J_2).

    Polynomial relations are J_1 then J_2 in column order; I comes from
    the minimal non-faces.
    """
    _require(sf, check_fan)
    if not cokernel_is_finite(sf):
        raise HypothesisError("cokernel of beta is infinite; use chow_ring")
    n, d = sf.fan.n, sf.target.rank
    s = len(sf.target.torsion)
    fbt = sf.fan.ray_matrix() @ sf.lift.T
    names = tuple(f"x{i + 1}" for i in range(n)) + tuple(f"y{j + 1}" for j in range(s))
    polys = [Polynomial.linear(list(fbt.col(i)) + [0] * s) for i in range(d)]
    for j in range(s):
        ys = [0] * s
        ys[j] = sf.target.torsion[j]
        polys.append(Polynomial.linear(list(fbt.col(d + j)) + ys))
    return Presentation(names, tuple(minimal_nonfaces(sf.fan)), tuple(polys))


def adjoin_free_variables(p: Presentation, k: int, prefix: str = "z") -> Presentation:
    """Prepend ``k`` relation-free degree-1 variables z1..zk."""
    if k == 0:
        return p
    m = p.ngens + k
    shift = [Polynomial.var(m, k + i) for i in range(p.ngens)]
    names = tuple(f"{prefix}{i + 1}" for i in range(k)) + p.variables
    monos = tuple(tuple(i + k for i in mono) for mono in p.monomial_relations)
    polys = tuple(q.compose(shift) for q in p.polynomial_relations)
    return Presentation(names, monos, polys)


def chow_ring(sf: StackyFan, check_fan: bool = True) -> Presentation:
    """Presentation of the integral Chow ring of the stack of ``sf``.

    Finite cokernel: the Stanley-Reisner ring itself. Otherwise the
    Stanley-Reisner ring of the reduced fan with rk(N_0) free variables
    z1.. placed in front.
    """
    _require(sf, check_fan)
    if cokernel_is_finite(sf):
        return stanley_reisner(sf, check_fan=False)
    n0, reduced = split_infinite(sf)
    return adjoin_free_variables(stanley_reisner(reduced, check_fan=False), n0)


def cox_report(sf: StackyFan) -> CoxQuotientReport:
    """Block-matrix report for the fan the ring is actually computed from."""
    if not cokernel_is_finite(sf):
        sf = split_infinite(sf)[1]
    return assemble_block_matrix(sf)


def fantastack_fan(target: Fan, images: Sequence[Sequence[int]]) -> StackyFan:
    """The stacky fan (hat fan, beta) on Z^n induced by images of the e_i in Z^d."""
    report = validate_fan(target)
    if not report.ok:
        raise HypothesisError(report)
    images = [tuple(v) for v in images]
    hat = hat_fan(target, images)
    lift = IntMatrix.from_columns(images, target.lattice_rank)
    return StackyFan(hat, FgAbelianGroup(target.lattice_rank), lift)


def fantastack_chow(target: Fan, images: Sequence[Sequence[int]]) -> Presentation:
    """Z[x_1..x_n]/(I_beta + J) for the fantastack of (target, beta)."""
    sf = fantastack_fan(target, images)
    if not cokernel_is_finite(sf):
        raise HypothesisError("beta must have finite cokernel for a fantastack")
    return stanley_reisner(sf)
