"""Sparse multivariate polynomials with integer coefficients.

Terms are stored as a dict from exponent tuples to nonzero integer
coefficients.  Variables print as u1..un unless other names are given.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import VariableCountMismatch


class FPolynomial:
    """Polynomial in Z[u_1, ..., u_n], held sparsely and immutably by convention."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, int] | None = None):
        self.nvars = int(nvars)
        clean: dict[tuple, int] = {}
        if terms:
            for exp, coef in terms.items():
                exp = tuple(int(x) for x in exp)
                if len(exp) != self.nvars or any(x < 0 for x in exp):
                    raise ValueError(f"bad exponent vector {exp} for {self.nvars} variables")
                coef = int(coef)
                if coef:
                    clean[exp] = coef
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "FPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "FPolynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "FPolynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "FPolynomial":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    # -- ring structure ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FPolynomial):
            if other.nvars != self.nvars:
                raise VariableCountMismatch(
                    f"{self.nvars} variables vs {other.nvars}")
            return other
        if isinstance(other, int):
            return FPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            new = terms.get(exp, 0) + coef
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        return FPolynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return FPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exp, 0) + c1 * c2
                if new:
                    terms[exp] = new
                else:
                    terms.pop(exp, None)
        return FPolynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = FPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = FPolynomial.constant(self.nvars, other)
        if not isinstance(other, FPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -------------------------------------------------------------

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    @property
    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(e) for e in self.terms}
        if not degrees:
            return True
        if degree is None:
            return len(degrees) == 1
        return degrees == {degree}

    def evaluate(self, values: Sequence):
        """Exact evaluation; values may be ints or Fractions."""
        if len(values) != self.nvars:
            raise VariableCountMismatch(
                f"{self.nvars} variables, {len(values)} values")
        total = 0
        for exp, coef in self.terms.items():
            term = coef
            for v, k in zip(values, exp):
                if k:
                    term *= v ** k
            total += term
        return total

    def partial(self, index: int) -> "FPolynomial":
        """Partial derivative with respect to variable `index`."""
        terms: dict[tuple, int] = {}
        for exp, coef in self.terms.items():
            k = exp[index]
            if k:
                new = list(exp)
                new[index] = k - 1
                key = tuple(new)
                terms[key] = terms.get(key, 0) + coef * k
        return FPolynomial(self.nvars, terms)

    # -- presentation ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms sorted by total degree, then lexicographic exponent."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"u{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exp, coef in self.sorted_terms():
            factors = []
            for name, k in zip(names, exp):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(coef)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"FPolynomial({self.nvars}, {self.to_text()!r})"

    # -- JSON schema -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        """{"vars": n, "terms": [{"exp": [...], "coef": c}, ...]} lex-sorted."""
        return {
            "vars": self.nvars,
            "terms": [
                {"exp": list(exp), "coef": coef}
                for exp, coef in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "FPolynomial":
        nvars = int(data["vars"])
        terms = {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]}
        return cls(nvars, terms)


def f_poly_multiply(f: FPolynomial, g: FPolynomial) -> FPolynomial:
    """Exact product; raises VariableCountMismatch on differing variable counts."""
    if f.nvars != g.nvars:
        raise VariableCountMismatch(f"{f.nvars} variables vs {g.nvars}")
    return f * g


# ---------------------------------------------------------------------------
# Small matrices over Z[u_1..u_n]; enough for products of elementary matrices
# and minors of the results.
# ---------------------------------------------------------------------------

def poly_identity(size: int, nvars: int) -> list[list[FPolynomial]]:
    one = FPolynomial.one(nvars)
    zero = FPolynomial.zero(nvars)
    return [[one if i == j else zero for j in range(size)] for i in range(size)]


def poly_matmul(a: Sequence[Sequence[FPolynomial]],
                b: Sequence[Sequence[FPolynomial]]) -> list[list[FPolynomial]]:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = FPolynomial.zero(a[0][0].nvars)
            for t in range(k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def poly_det(rows: Sequence[Sequence[FPolynomial]]) -> FPolynomial:
    """Cofactor expansion; fine for the <= 9 x 9 matrices used here."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix has no determinant here; use size >= 1")
    if n == 1:
        return rows[0][0]
    acc = FPolynomial.zero(rows[0][0].nvars)
    for j in range(n):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [[rows[i][c] for c in range(n) if c != j] for i in range(1, n)]
        cof = entry * poly_det(minor)
        acc = acc + (cof if j % 2 == 0 else -cof)
    return acc
