"""Sparse multivariate polynomials over exact rationals.

Terms map exponent tuples to Fraction coefficients; the number of
variables is fixed per polynomial.  Just enough ring operations for the
cell-matrix computations: degrees stay small and coefficients exact.
"""

from __future__ import annotations

from fractions import Fraction

Expo = tuple[int, ...]


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Expo, Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[Expo, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def const(cls, nvars: int, value) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def var(cls, nvars: int, idx: int) -> "Poly":
        e = [0] * nvars
        e[idx] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("mixing polynomials with different variable counts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        out: dict[Expo, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.nvars, out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> tuple[bool, int]:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True, 0
        return len(degs) == 1, max(degs)

    def derivative(self, idx: int) -> "Poly":
        out: dict[Expo, Fraction] = {}
        for e, c in self.terms.items():
            if e[idx]:
                ne = list(e)
                ne[idx] -= 1
                out[tuple(ne)] = c * e[idx]
        return Poly(self.nvars, out)

    def monomial_gcd(self) -> Expo:
        """Componentwise minimum exponent over all terms."""
        if not self.terms:
            return (0,) * self.nvars
        its = iter(self.terms)
        acc = list(next(its))
        for e in its:
            for i, x in enumerate(e):
                if x < acc[i]:
                    acc[i] = x
        return tuple(acc)

    def divide_monomial(self, e: Expo) -> "Poly":
        out = {}
        for t, c in self.terms.items():
            nt = tuple(a - b for a, b in zip(t, e))
            if any(x < 0 for x in nt):
                raise ValueError("monomial does not divide every term")
            out[nt] = c
        return Poly(self.nvars, out)

    def subs(self, values) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def pretty(self, names: list[str]) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i]
                for i, k in enumerate(e) if k)
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self) -> str:
        return self.pretty([f"x{i}" for i in range(self.nvars)])


# -- matrices of polynomials -------------------------------------------------

PolyMatrix = tuple[tuple[Poly, ...], ...]


def identity_matrix(n: int, nvars: int) -> PolyMatrix:
    return tuple(tuple(Poly.const(nvars, 1 if i == j else 0) for j in range(n))
                 for i in range(n))


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Poly.zero(a[0][0].nvars)
            for k in range(n):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_det(m) -> Poly:
    """Determinant by expansion over column subsets, memoized per row count."""
    n = len(m)
    nvars = m[0][0].nvars
    memo: dict[tuple[int, ...], Poly] = {(): Poly.const(nvars, 1)}

    def det_for(cols: tuple[int, ...]) -> Poly:
        if cols in memo:
            return memo[cols]
        row = n - len(cols)
        acc = Poly.zero(nvars)
        sign = 1
        for idx, j in enumerate(cols):
            entry = m[row][j]
            if not entry.is_zero():
                sub = det_for(cols[:idx] + cols[idx + 1:])
                term = entry * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[cols] = acc
        return acc

    return det_for(tuple(range(n)))


def submatrix_det(m, rows: tuple[int, ...], cols: tuple[int, ...]) -> Poly:
    sub = [[m[i][j] for j in cols] for i in rows]
    return mat_det(sub)
