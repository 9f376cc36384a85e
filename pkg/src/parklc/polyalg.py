"""Exact sparse polynomials over the integers, plus log-concavity diagnostics."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass


class IntPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    Stored sparsely as {exponent: coefficient}. Zero coefficients are never
    stored; the zero polynomial is the empty mapping. Instances are treated
    as immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data: dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for exp, c in items:
                if not isinstance(exp, int) or isinstance(exp, bool) or exp < 0:
                    raise ValueError(f"exponent must be a nonnegative integer, got {exp!r}")
                if not isinstance(c, int) or isinstance(c, bool):
                    raise ValueError(f"coefficient must be an integer, got {c!r}")
                data[exp] = data.get(exp, 0) + c
        self._coeffs = {e: c for e, c in data.items() if c}

    @classmethod
    def from_coeff_list(cls, coeffs) -> "IntPolynomial":
        """Build from a dense list [a0, a1, ...]."""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPolynomial":
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return min(self._coeffs)

    @property
    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def evaluate(self, x: int) -> int:
        """Exact evaluation at an integer point."""
        return sum(c * x**e for e, c in self._coeffs.items())

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(out)

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) - c
        return IntPolynomial(out)

    def __mul__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        return IntPolynomial(out)

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        inner = ", ".join(f"{e}: {c}" for e, c in sorted(self._coeffs.items()))
        return f"IntPolynomial({{{inner}}})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items()):
            parts.append(_term_str(c, "x", e, first=not parts))
        return "".join(parts)

    def to_json_dict(self) -> dict:
        return {"coeffs": {str(e): str(c) for e, c in sorted(self._coeffs.items())}}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data) -> "IntPolynomial":
        if not isinstance(data, dict) or "coeffs" not in data or not isinstance(data["coeffs"], dict):
            raise ValueError('polynomial JSON must be an object {"coeffs": {...}}')
        out = {}
        for k, v in data["coeffs"].items():
            try:
                exp = int(k)
                coeff = int(v)
            except (TypeError, ValueError):
                raise ValueError(f"bad coefficient entry {k!r}: {v!r}") from None
            out[exp] = coeff
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls.from_json_dict(json.loads(text))


def _term_str(c: int, var: str, exp, first: bool) -> str:
    """Render one term; exp may be an int or a preformatted string like 'x^2y'."""
    sign = "" if first else (" + " if c >= 0 else " - ")
    if not first:
        c = abs(c)
    if isinstance(exp, int):
        body = "" if exp == 0 else (var if exp == 1 else f"{var}^{exp}")
    else:
        body = exp
    if body == "":
        return f"{sign}{c}"
    mag = "" if abs(c) == 1 else str(abs(c)) if not first else None
    if first:
        mag = "" if c == 1 else ("-" if c == -1 else str(c))
    return f"{sign}{mag}{body}"


class BivariatePolynomial:
    """Polynomial in two variables x, y with exact integer coefficients.

    Stored sparsely as {(x_exp, y_exp): coefficient}.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data: dict[tuple[int, int], int] = {}
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for key, c in items:
                i, j = key
                if i < 0 or j < 0:
                    raise ValueError(f"exponents must be nonnegative, got {key!r}")
                if not isinstance(c, int) or isinstance(c, bool):
                    raise ValueError(f"coefficient must be an integer, got {c!r}")
                data[(i, j)] = data.get((i, j), 0) + c
        self._coeffs = {k: c for k, c in data.items() if c}

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "BivariatePolynomial":
        return cls({(i, j): coeff})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._coeffs)

    def coefficient(self, i: int, j: int) -> int:
        return self._coeffs.get((i, j), 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def swap_variables(self) -> "BivariatePolynomial":
        """Exchange the roles of x and y."""
        return BivariatePolynomial({(j, i): c for (i, j), c in self._coeffs.items()})

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._coeffs.items())

    def __add__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    def __mul__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out)

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        inner = ", ".join(f"({i}, {j}): {c}" for (i, j), c in sorted(self._coeffs.items()))
        return f"BivariatePolynomial({{{inner}}})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        # x-exponent descending, then y-exponent ascending
        order = sorted(self._coeffs, key=lambda k: (-k[0], k[1]))
        parts = []
        for i, j in order:
            c = self._coeffs[(i, j)]
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            ys = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            parts.append(_term_str(c, "", xs + ys if (xs or ys) else 0, first=not parts))
        return "".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "coeffs": {f"{i},{j}": str(c) for (i, j), c in sorted(self._coeffs.items())}
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data) -> "BivariatePolynomial":
        if not isinstance(data, dict) or "coeffs" not in data or not isinstance(data["coeffs"], dict):
            raise ValueError('polynomial JSON must be an object {"coeffs": {...}}')
        out = {}
        for k, v in data["coeffs"].items():
            try:
                i_s, j_s = k.split(",")
                out[(int(i_s), int(j_s))] = int(v)
            except (TypeError, ValueError):
                raise ValueError(f"bad coefficient entry {k!r}: {v!r}") from None
        return cls(out)


@dataclass(frozen=True)
class LcReport:
    """Log-concavity diagnostics over the contiguous support range."""

    is_log_concave: bool
    is_unimodal: bool
    has_internal_zeros: bool
    first_violation: int | None = None


def poly_mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Exact product of two polynomials."""
    return f * g


def shift_compose(f: IntPolynomial) -> IntPolynomial:
    """Return f(1 + x), computed exactly via binomial expansion."""
    out: dict[int, int] = {}
    for e, c in f.coeffs.items():
        for k in range(e + 1):
            out[k] = out.get(k, 0) + c * math.comb(e, k)
    return IntPolynomial(out)


def reciprocal_reverse(f: IntPolynomial, n: int) -> IntPolynomial:
    """Return x^n * f(1/x); requires n >= degree(f)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"reversal degree must be a nonnegative integer, got {n!r}")
    if f.is_zero:
        return f
    if n < f.max_degree:
        raise ValueError(f"reversal degree {n} is below the polynomial degree {f.max_degree}")
    return IntPolynomial({n - e: c for e, c in f.coeffs.items()})


def lc_diagnostics(f: IntPolynomial) -> LcReport:
    """Check log-concavity, unimodality and internal zeros of the coefficient sequence.

    The sequence runs over the contiguous exponent range [min_degree,
    max_degree]; absent coefficients count as 0. The zero polynomial is
    vacuously log-concave and unimodal with no internal zeros.
    """
    if f.is_zero:
        return LcReport(True, True, False, None)
    lo, hi = f.min_degree, f.max_degree
    seq = [f.coefficient(e) for e in range(lo, hi + 1)]

    is_lc = True
    first = None
    for i in range(1, len(seq) - 1):
        if seq[i] * seq[i] < seq[i - 1] * seq[i + 1]:
            is_lc = False
            first = lo + i
            break

    internal = any(c == 0 for c in seq[1:-1])

    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    uni = i == len(seq) - 1

    return LcReport(is_lc, uni, internal, first)
