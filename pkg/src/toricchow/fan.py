"""Simplicial fans on Z^r: validation, smoothness, torus factors, non-faces.

Cones are stored as sets of ray indices. That is enough because every
fan the pipeline accepts is simplicial, where faces of a cone are exactly
the subsets of its rays; :func:`validate_fan` rejects anything else.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactla import IntMatrix, invariant_factors, is_primitive, rank, solve_rational

MAX_RAYS = 32


class FanError(ValueError):
    """Malformed fan data (wrong vector lengths, bad indices)."""


class HatFanError(ValueError):
    """A fantastack precondition failed; ``kind``/``index`` locate the culprit."""

    def __init__(self, message: str, kind: str, index: int):
        super().__init__(message)
        self.kind = kind
        self.index = index


@dataclass(frozen=True)
class Fan:
    lattice_rank: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[frozenset[int], ...]

    def __init__(self, lattice_rank: int, rays: Sequence[Sequence[int]],
                 max_cones: Sequence[Sequence[int]]):
        if not isinstance(lattice_rank, int) or lattice_rank < 0:
            raise FanError(f"lattice_rank must be a nonnegative integer, got {lattice_rank!r}")
        rays_t = []
        for i, v in enumerate(rays):
            v = tuple(v)
            if len(v) != lattice_rank:
                raise FanError(f"ray {i} has length {len(v)}, expected {lattice_rank}")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
                raise FanError(f"ray {i} has non-integer entries")
            rays_t.append(v)
        cones = []
        for k, c in enumerate(max_cones or [()]):
            c = tuple(c)
            for i in c:
                if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < len(rays_t):
                    raise FanError(f"cone {k} refers to ray {i!r}; there are {len(rays_t)} rays")
            if len(set(c)) != len(c):
                raise FanError(f"cone {k} repeats a ray index")
            cones.append(frozenset(c))
        object.__setattr__(self, "lattice_rank", lattice_rank)
        object.__setattr__(self, "rays", tuple(rays_t))
        object.__setattr__(self, "max_cones", tuple(cones))

    @property
    def n(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> IntMatrix:
        """The n x r matrix F whose rows are the rays."""
        return IntMatrix(self.rays, shape=(self.n, self.lattice_rank))

    def cone_matrix(self, cone) -> IntMatrix:
        return IntMatrix([self.rays[i] for i in sorted(cone)], shape=(len(cone), self.lattice_rank))

    def is_face(self, rays) -> bool:
        rays = set(rays)
        return any(rays <= c for c in self.max_cones)

    def to_dict(self) -> dict:
        return {
            "lattice_rank": self.lattice_rank,
            "rays": [list(v) for v in self.rays],
            "max_cones": [sorted(c) for c in self.max_cones],
        }


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __add__(self, other: ValidationReport) -> ValidationReport:
        return ValidationReport(self.violations + other.violations)

    def __str__(self) -> str:
        return "pass" if self.ok else "\n".join(self.violations)


def _in_simplicial_cone(gens: IntMatrix, point: Sequence[int]) -> bool:
    """Membership of ``point`` in the cone spanned by the rows of ``gens``.

    ``gens`` must have linearly independent rows; the coordinates are the
    unique rational solution, and the point is inside iff they are >= 0.
    """
    if gens.rows == 0:
        return all(x == 0 for x in point)
    coords = solve_rational(gens.T, point)
    return coords is not None and all(c >= 0 for c in coords)


def _kernel_circuits(columns: list[tuple[int, ...]]):
    """Nonnegative minimal-support kernel vectors of the matrix with these columns.

    These generate the pointed cone {z >= 0 : A z = 0}; enumerated by
    brute force over supports, which is fine at desk scale.
    """
    m = len(columns)
    for size in range(1, m + 1):
        for supp in combinations(range(m), size):
            sub = IntMatrix.from_columns([columns[j] for j in supp], len(columns[0]) if columns else 0)
            if rank(sub) != size - 1:
                continue
            # one-dimensional kernel: drop a column that keeps full rank, solve for it
            for drop in range(size):
                rest = [supp[k] for k in range(size) if k != drop]
                rest_m = IntMatrix.from_columns([columns[j] for j in rest], sub.rows)
                if rank(rest_m) == size - 1:
                    coords = solve_rational(rest_m, [-x for x in columns[supp[drop]]])
                    break
            z = {supp[drop]: Fraction(1)}
            z.update({j: c for j, c in zip(rest, coords)})
            if all(c > 0 for c in z.values()):
                yield z
            elif all(c < 0 for c in z.values()):
                yield {j: -c for j, c in z.items()}


def _cones_meet_in_face(fan: Fan, s: frozenset, t: frozenset) -> bool:
    """Whether cone(s) and cone(t) intersect exactly in cone(s & t).

    A bad intersection point gives a nonnegative relation
    sum(l_i u_i) = sum(m_j w_j) with some weight off the common rays;
    it suffices to look at the extreme relations.
    """
    if s <= t or t <= s:
        return True
    s_idx, t_idx = sorted(s), sorted(t)
    cols = [fan.rays[i] for i in s_idx] + [tuple(-x for x in fan.rays[j]) for j in t_idx]
    outside = {k for k, i in enumerate(s_idx) if i not in t}
    outside |= {len(s_idx) + k for k, j in enumerate(t_idx) if j not in s}
    return not any(outside & z.keys() for z in _kernel_circuits(cols))


def validate_fan(fan: Fan) -> ValidationReport:
    """Check that ``fan`` is a simplicial fan with primitive rays.

    Violations are collected rather than raised; malformed input has
    already been rejected by the :class:`Fan` constructor.
    """
    out = []
    if fan.n > MAX_RAYS:
        out.append(f"fan has {fan.n} rays; at most {MAX_RAYS} are supported")
    seen = {}
    for i, v in enumerate(fan.rays):
        if not any(v):
            out.append(f"ray {i} is the zero vector")
        elif not is_primitive(v):
            out.append(f"ray {i} {list(v)} is not primitive")
        if v in seen:
            out.append(f"ray {i} duplicates ray {seen[v]}")
        seen.setdefault(v, i)
    cones = fan.max_cones
    for a in range(len(cones)):
        for b in range(len(cones)):
            if a == b:
                continue
            if cones[a] == cones[b] and a < b:
                out.append(f"max cone {b} duplicates max cone {a}")
            elif cones[a] < cones[b]:
                out.append(f"max cone {a} {sorted(cones[a])} is contained in max cone {b} {sorted(cones[b])}")
    used = set().union(*cones) if cones else set()
    for i in range(fan.n):
        if i not in used:
            out.append(f"ray {i} lies in no cone")
    simplicial = []
    for k, c in enumerate(cones):
        if rank(fan.cone_matrix(c)) < len(c):
            out.append(f"max cone {k} {sorted(c)} is not simplicial")
        else:
            simplicial.append(k)
    for a, b in combinations(simplicial, 2):
        if cones[a] == cones[b]:
            continue
        if not _cones_meet_in_face(fan, cones[a], cones[b]):
            out.append(f"max cones {a} and {b} do not meet along a common face")
    return ValidationReport(tuple(out))


def is_smooth(fan: Fan) -> bool:
    return all(all(d == 1 for d in invariant_factors(fan.cone_matrix(c))) for c in fan.max_cones)


def has_torus_factor(fan: Fan) -> bool:
    return rank(fan.ray_matrix()) < fan.lattice_rank


def minimal_nonfaces(fan: Fan) -> list[tuple[int, ...]]:
    """Inclusion-minimal ray sets lying in no cone, sorted lexicographically.

    Level-by-level over subset size: a k-set is a candidate only when all
    of its (k-1)-subsets are faces, so supersets of non-faces never appear.
    """
    if fan.n > MAX_RAYS:
        raise ValueError(f"at most {MAX_RAYS} rays supported, got {fan.n}")
    cone_masks = [sum(1 << i for i in c) for c in fan.max_cones]

    def face(mask):
        return any(mask & ~c == 0 for c in cone_masks)

    found = []
    level = {0}
    while level:
        nxt = set()
        for f in level:
            top = f.bit_length()
            for j in range(top, fan.n):
                s = f | (1 << j)
                subs_ok = all(s & ~(1 << i) in level for i in range(fan.n) if s >> i & 1)
                if not subs_ok:
                    continue
                if face(s):
                    nxt.add(s)
                else:
                    found.append(s)
        level = nxt
    out = [tuple(i for i in range(fan.n) if s >> i & 1) for s in set(found)]
    return sorted(out)


def hat_fan(target: Fan, images: Sequence[Sequence[int]]) -> Fan:
    """The fan on Z^n whose cones are {e_i : images[i] in sigma} for max cones sigma."""
    images = [tuple(v) for v in images]
    for i, v in enumerate(images):
        if len(v) != target.lattice_rank:
            raise FanError(f"image {i} has length {len(v)}, expected {target.lattice_rank}")
    mats = {c: target.cone_matrix(c) for c in target.max_cones}
    for c, m in mats.items():
        if rank(m) < len(c):
            raise FanError(f"cone {sorted(c)} of the target fan is not simplicial")
    hats = []
    for c in target.max_cones:
        hats.append(frozenset(i for i, v in enumerate(images) if _in_simplicial_cone(mats[c], v)))
    covered = set().union(*hats) if hats else set()
    for i in range(len(images)):
        if i not in covered:
            raise HatFanError(f"image {i} {list(images[i])} is outside the support of the fan",
                              "image", i)
    for k, v in enumerate(target.rays):
        ray_m = IntMatrix([v], shape=(1, target.lattice_rank))
        if not any(any(images[i]) and _in_simplicial_cone(ray_m, images[i]) for i in range(len(images))):
            raise HatFanError(f"ray {k} {list(v)} contains no image", "ray", k)
    maximal = []
    for h in hats:
        if any(h < g for g in hats) or h in maximal:
            continue
        maximal.append(h)
    n = len(images)
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return Fan(n, basis, [sorted(h) for h in maximal])
