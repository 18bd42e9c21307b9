"""Exact bivariate integer polynomials in the formal variables λ and μ.

What λ and μ stand for in terms of (k, l) depends on the polynomial's
convention (see ``models.Convention``); this module only does the algebra.
No floating point is used anywhere.
"""

import re
from fractions import Fraction

from .exceptions import InterpolationError

VARIABLES = ("λ", "μ")

_TERM_RE = re.compile(r"([+-]?)(\d+)((?:\*[^\s*^+-]+\^\d+)*)")
_FACTOR_RE = re.compile(r"\*([^\s*^+-]+)\^(\d+)")


class BivarPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for (i, j), coeff in dict(terms or {}).items():
            whole = int(coeff)
            if whole != coeff:
                raise ValueError(f"Coefficient {coeff} of ({i}, {j}) is not an integer.")
            if whole:
                cleaned[(int(i), int(j))] = whole
        self._terms = cleaned

    @classmethod
    def constant(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def lam(cls):
        return cls({(1, 0): 1})

    @classmethod
    def mu(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_univariate(cls, coeffs, variable=0):
        """``coeffs[d]`` is the coefficient of the chosen variable to the d-th power."""
        if variable == 0:
            return cls({(d, 0): c for d, c in enumerate(coeffs)})
        return cls({(0, d): c for d, c in enumerate(coeffs)})

    @property
    def terms(self):
        """Terms as ``((i, j), coeff)`` in display order."""
        return tuple(sorted(self._terms.items(), key=lambda item: (-sum(item[0]), -item[0][0])))

    def coefficient(self, i, j):
        return self._terms.get((i, j), 0)

    def is_zero(self):
        return not self._terms

    @property
    def degree_lambda(self):
        return max((i for i, _ in self._terms), default=0)

    @property
    def degree_mu(self):
        return max((j for _, j in self._terms), default=0)

    @property
    def total_degree(self):
        return max((i + j for i, j in self._terms), default=0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return BivarPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BivarPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials.")
        result = BivarPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor):
        return BivarPoly({key: coeff * factor for key, coeff in self._terms.items()})

    def evaluate(self, a, b):
        """Horner evaluation at λ=a, μ=b; exact for ints and Fractions."""
        if not self._terms:
            return 0
        rows = {}
        for (i, j), coeff in self._terms.items():
            rows.setdefault(i, {})[j] = coeff
        result = 0
        for i in range(self.degree_lambda, -1, -1):
            row = rows.get(i, {})
            inner = 0
            for j in range(max(row, default=0), -1, -1):
                inner = inner * b + row.get(j, 0)
            result = result * a + inner
        if isinstance(result, Fraction) and result.denominator == 1:
            return result.numerator
        return result

    __call__ = evaluate

    def d_dmu(self):
        return BivarPoly({(i, j - 1): coeff * j for (i, j), coeff in self._terms.items() if j})

    def substitute_mu(self, value):
        """P(λ, value) as a polynomial in λ; ``value`` must be an integer."""
        terms = {}
        for (i, j), coeff in self._terms.items():
            terms[(i, 0)] = terms.get((i, 0), 0) + coeff * value ** j
        return BivarPoly(terms)

    def substitute_lambda(self, value):
        terms = {}
        for (i, j), coeff in self._terms.items():
            terms[(0, j)] = terms.get((0, j), 0) + coeff * value ** i
        return BivarPoly(terms)

    def lambda_slice(self):
        return self.substitute_mu(0)

    def swap_variables(self):
        return BivarPoly({(j, i): coeff for (i, j), coeff in self._terms.items()})

    def render(self, names=VARIABLES):
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), coeff in self.terms:
            factors = "".join(
                f"*{name}^{power}" for name, power in zip(names, (i, j)) if power
            )
            body = f"{abs(coeff)}{factors}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BivarPoly({self.render()!r})"

    def json_terms(self):
        return [{"i": i, "j": j, "coeff": str(coeff)} for (i, j), coeff in self.terms]


def _coerce(value):
    if isinstance(value, BivarPoly):
        return value
    if isinstance(value, int):
        return BivarPoly.constant(value)
    return NotImplemented


def parse(text, names=VARIABLES):
    """Read the ``render`` format back, e.g. ``1*λ^2 + 2*λ^1*μ^1 - 3``."""
    compact = "".join(text.split())
    if compact == "0":
        return BivarPoly.zero()
    terms = {}
    position = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != position or not match.group(0):
            break
        if position and not match.group(1):
            raise ValueError(f"Missing sign before term at {position} in {text!r}.")
        coeff = int(match.group(2)) * (-1 if match.group(1) == "-" else 1)
        exponents = [0, 0]
        for name, power in _FACTOR_RE.findall(match.group(3)):
            if name not in names:
                raise ValueError(f"Unknown variable {name!r} in {text!r}.")
            exponents[names.index(name)] += int(power)
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + coeff
        position = match.end()
    if position != len(compact):
        raise ValueError(f"Cannot parse polynomial {text!r}.")
    return BivarPoly(terms)


def kl_expansion(poly, convention):
    """Expand P(λ(k), μ(l)) in the original arguments.

    The result is a BivarPoly whose first variable is k and second is l;
    render it with ``names=("k", "l")``.
    """
    a, b = convention.lambda_affine
    lam = BivarPoly({(1, 0): a}) + b
    mu = BivarPoly({(0, 1): convention.mu_scale})
    result = BivarPoly.zero()
    for (i, j), coeff in poly.terms:
        result = result + (lam ** i) * (mu ** j) * coeff
    return result


def _newton_monomial(xs, ys):
    """Monomial coefficients (low to high) of the interpolant through (xs, ys)."""
    count = len(xs)
    table = [Fraction(y) for y in ys]
    newton = [table[0]]
    for level in range(1, count):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(count - level)
        ]
        newton.append(table[0])
    coeffs = [Fraction(0)] * count
    coeffs[0] = newton[-1]
    used = 1
    for index in range(count - 2, -1, -1):
        # coeffs <- coeffs * (x - xs[index]) + newton[index]
        shifted = [Fraction(0)] + coeffs[:used]
        for d in range(used):
            shifted[d] -= coeffs[d] * xs[index]
        used += 1
        shifted[0] += newton[index]
        coeffs[:used] = shifted
    return coeffs


def interpolate_grid(values, degree):
    """Tensor-product Lagrange fit on a full (degree+1) x (degree+1) grid.

    ``values`` is a mapping ``(a, b) -> int`` or an iterable of
    ``(a, b, value)`` triples. The result must have integer coefficients
    and total degree at most ``degree``.
    """
    if hasattr(values, "items"):
        points = [(a, b, v) for (a, b), v in values.items()]
    else:
        points = list(values)
    grid = {}
    for a, b, value in points:
        if (a, b) in grid:
            raise InterpolationError(f"Duplicate grid coordinate ({a}, {b}).")
        grid[(a, b)] = value
    xs = sorted({a for a, _ in grid})
    ys = sorted({b for _, b in grid})
    if len(xs) != degree + 1 or len(ys) != degree + 1 or len(grid) != len(xs) * len(ys):
        raise InterpolationError(
            f"Need a full {degree + 1}x{degree + 1} grid, got {len(xs)} λ values, "
            f"{len(ys)} μ values and {len(grid)} points."
        )
    # Fit each μ-row in λ, then each λ-coefficient across the rows in μ.
    rows = [_newton_monomial(xs, [grid[(a, b)] for a in xs]) for b in ys]
    terms = {}
    for i in range(degree + 1):
        column = _newton_monomial(ys, [row[i] for row in rows])
        for j, coeff in enumerate(column):
            if coeff == 0:
                continue
            if coeff.denominator != 1:
                raise InterpolationError(f"Non-integral coefficient {coeff} at λ^{i} μ^{j}.")
            if i + j > degree:
                raise InterpolationError(
                    f"Term λ^{i} μ^{j} exceeds total degree {degree}."
                )
            terms[(i, j)] = coeff.numerator
    return BivarPoly(terms)


def interpolate_univariate(xs, ys, variable=0):
    """Integer polynomial in one variable through the points (xs, ys)."""
    if len(set(xs)) != len(xs):
        raise InterpolationError("Duplicate interpolation node.")
    coeffs = _newton_monomial(list(xs), list(ys))
    for d, coeff in enumerate(coeffs):
        if coeff.denominator != 1:
            raise InterpolationError(f"Non-integral coefficient {coeff} at degree {d}.")
    return BivarPoly.from_univariate([c.numerator for c in coeffs], variable)
