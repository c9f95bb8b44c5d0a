"""Sparse multivariate polynomials with exact rational coefficients.

Keys are dense exponent tuples, values are Fractions; zero coefficients are
never stored.  Just enough arithmetic for the divided-difference calculus:
ring operations, single-variable linear substitution and exact division by
a linear form.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Poly", "InexactDivision"]

Monomial = tuple[int, ...]


class InexactDivision(ArithmeticError):
    """Division by a linear form left a remainder (an internal bug)."""


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Monomial, Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = Fraction(c)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, value, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, j: int, nvars: int) -> "Poly":
        m = tuple(1 if k == j else 0 for k in range(nvars))
        return cls(nvars, {m: Fraction(1)})

    @classmethod
    def linear(cls, coeffs, nvars: int) -> "Poly":
        terms = {}
        for j, c in enumerate(coeffs):
            if c:
                m = tuple(1 if k == j else 0 for k in range(nvars))
                terms[m] = Fraction(c)
        return cls(nvars, terms)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            value = out.get(m, 0) + c
            if value:
                out[m] = value
            else:
                out.pop(m, None)
        return Poly(self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            value = out.get(m, 0) - c
            if value:
                out[m] = value
            else:
                out.pop(m, None)
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    value = out.get(m, 0) + c1 * c2
                    if value:
                        out[m] = value
                    else:
                        out.pop(m, None)
            return Poly(self.nvars, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, scalar) -> "Poly":
        scalar = Fraction(scalar)
        if not scalar:
            return Poly(self.nvars)
        return Poly(self.nvars, {m: c * scalar for m, c in self.terms.items()})

    def shift(self, monomial: Monomial) -> "Poly":
        """Multiply by a plain monomial."""
        return Poly(
            self.nvars,
            {
                tuple(a + b for a, b in zip(m, monomial)): c
                for m, c in self.terms.items()
            },
        )

    def pow(self, k: int) -> "Poly":
        result = Poly.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ---------------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            factors = [
                f"y{j + 1}" + (f"^{e}" if e > 1 else "")
                for j, e in enumerate(m)
                if e
            ]
            bits.append(f"{c}*" + "*".join(factors) if factors else str(c))
        return " + ".join(bits)

    # -- exact division ------------------------------------------------------------

    def divide_linear(self, linear: "Poly", main: int) -> "Poly":
        """Exact quotient by a linear form whose `main` coefficient is nonzero.

        Long division in the main variable; a nonzero remainder raises
        InexactDivision since callers only divide known multiples.
        """
        unit = tuple(1 if k == main else 0 for k in range(self.nvars))
        lead = linear.terms.get(unit)
        if not lead:
            raise ValueError("linear form has no main-variable term")
        rest = [(m, c) for m, c in linear.terms.items() if m != unit]
        work = dict(self.terms)
        quotient: dict[Monomial, Fraction] = {}
        while work:
            m = max(work, key=lambda mm: (mm[main], mm))
            coeff = work.pop(m)
            e = m[main]
            if e == 0:
                raise InexactDivision(
                    f"remainder contains monomial {m} with coefficient {coeff}"
                )
            qm = tuple(x - 1 if k == main else x for k, x in enumerate(m))
            qc = coeff / lead
            quotient[qm] = quotient.get(qm, Fraction(0)) + qc
            for lm, lc in rest:
                nm = tuple(a + b for a, b in zip(qm, lm))
                value = work.get(nm, 0) - qc * lc
                if value:
                    work[nm] = value
                else:
                    work.pop(nm, None)
        return Poly(self.nvars, quotient)
