"""Sparse multivariate polynomials with integer coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Exps = tuple[int, ...]


def grlex_key(exps: Exps):
    """Sort key for graded lex order (larger key = larger monomial)."""
    return (sum(exps), exps)


class Polynomial:
    """Polynomial over Z in a fixed number of variables.

    Terms map exponent vectors to nonzero ints; zero coefficients are
    never stored. Iteration order is graded lex, leading term first.
    Instances are treated as immutable.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | Iterable = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Exps, int] = {}
        for exps, c in terms:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not match {nvars} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            acc[exps] = acc.get(exps, 0) + c
        self.nvars = nvars
        self._terms = {e: c for e, c in sorted(acc.items(), key=lambda t: grlex_key(t[0]), reverse=True) if c}

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, coeff: int = 1) -> Polynomial:
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def monomial(cls, nvars: int, indices: Iterable[int], coeff: int = 1) -> Polynomial:
        """Product of the variables in ``indices`` (repeats raise the power)."""
        exps = [0] * nvars
        for i in indices:
            exps[i] += 1
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> Polynomial:
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    # inspection

    def terms(self) -> list[tuple[Exps, int]]:
        return list(self._terms.items())

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def leading_term(self) -> tuple[Exps, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def variables(self) -> set[int]:
        return {i for e in self._terms for i, x in enumerate(e) if x}

    def linear_coefficients(self) -> list[int]:
        if self.degree() > 1 or self.coefficient((0,) * self.nvars):
            raise ValueError("not a linear form")
        out = [0] * self.nvars
        for e, c in self._terms.items():
            out[e.index(1)] = c
        return out

    # arithmetic

    def _check(self, other: Polynomial):
        if other.nvars != self.nvars:
            raise ValueError(f"variable-list mismatch: {self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.nvars, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self._terms!r})"

    # substitution

    def compose(self, images: Sequence[Polynomial]) -> Polynomial:
        """Replace variable i by ``images[i]``; the result lives in the images' ring."""
        if len(images) != self.nvars:
            raise ValueError(f"{len(images)} images for {self.nvars} variables")
        if not images:
            return Polynomial(0, self._terms)
        m = images[0].nvars
        if any(q.nvars != m for q in images):
            raise ValueError("images live in different rings")
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[i, k] = images[i] ** k
            return powers[i, k]

        out = Polynomial.zero(m)
        for e, c in self._terms.items():
            term = Polynomial.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def substitute(self, i: int, q: Polynomial) -> Polynomial:
        """Replace variable ``i`` by ``q`` (same ring)."""
        self._check(q)
        images = [Polynomial.var(self.nvars, j) for j in range(self.nvars)]
        images[i] = q
        return self.compose(images)

    def drop_variable(self, i: int) -> Polynomial:
        """Remove an unused variable, shifting later indices down."""
        if i in self.variables():
            raise ValueError(f"variable {i} still occurs")
        return Polynomial(self.nvars - 1, {e[:i] + e[i + 1:]: c for e, c in self._terms.items()})

    def normalize_sign(self) -> Polynomial:
        """Make the leading coefficient positive."""
        if self._terms and self.leading_term()[1] < 0:
            return -self
        return self
