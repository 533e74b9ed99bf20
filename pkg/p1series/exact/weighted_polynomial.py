"""
Sparse polynomials in g2, lambda, g3 with rational coefficients.

The variables carry weights 4, 5 and 6, so the monomial ``g2^i lambda^j g3^k`` has
weight ``4i + 5j + 6k``. Laurent and tau coefficients of index n are homogeneous of
weight n when computed over these polynomials.
"""
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple

Exponent = Tuple[int, int, int]

WEIGHTS = (4, 5, 6)
VARIABLE_NAMES = ("g2", "lambda", "g3")


def weight_of(exponent: Exponent) -> int:
    return sum(w * e for w, e in zip(WEIGHTS, exponent))


class WeightedPolynomial:
    """Immutable map from exponent triples to nonzero Fractions."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] = None):
        cleaned: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                cleaned[tuple(exponent)] = coefficient
        self._terms = cleaned
        self._hash = None

    # construction

    @classmethod
    def constant(cls, value) -> 'WeightedPolynomial':
        return cls({(0, 0, 0): value})

    @classmethod
    def monomial(cls, exponent: Exponent, coefficient=1) -> 'WeightedPolynomial':
        return cls({exponent: coefficient})

    @classmethod
    def _from_clean(cls, terms: Dict[Exponent, Fraction]) -> 'WeightedPolynomial':
        poly = cls.__new__(cls)
        poly._terms = {e: c for e, c in terms.items() if c}
        poly._hash = None
        return poly

    # inspection

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterable[Tuple[Exponent, Fraction]]:
        return sorted(self._terms.items())

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def weights(self) -> set:
        return {weight_of(e) for e in self._terms}

    def is_homogeneous(self, weight: int) -> bool:
        """True when every monomial has the given weight (the zero polynomial qualifies)."""
        return all(weight_of(e) == weight for e in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self._terms)

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, WeightedPolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return WeightedPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return WeightedPolynomial._from_clean(result)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPolynomial._from_clean({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            factor = Fraction(other)
            if not factor:
                return WeightedPolynomial()
            return WeightedPolynomial._from_clean({e: c * factor for e, c in self._terms.items()})
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        result: Dict[Exponent, Fraction] = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2, k1 + k2)
                result[key] = result.get(key, 0) + c1 * c2
        return WeightedPolynomial._from_clean(result)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, WeightedPolynomial) and other.is_constant() and not other.is_zero():
            return self * (1 / other.coefficient((0, 0, 0)))
        return NotImplemented

    def __pow__(self, power: int):
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = WeightedPolynomial.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution

    def evaluate(self, g2, lam, g3):
        """Substitute values for the three variables; exact when the values are rational."""
        total = 0
        for (i, j, k), coefficient in self._terms.items():
            total += coefficient * g2 ** i * lam ** j * g3 ** k
        return total

    def scale_weights(self, zeta) -> 'WeightedPolynomial':
        """Substitute g2 -> zeta^4 g2, lambda -> zeta^5 lambda, g3 -> zeta^6 g3."""
        zeta = Fraction(zeta)
        return WeightedPolynomial._from_clean(
            {e: c * zeta ** weight_of(e) for e, c in self._terms.items()})

    # printing

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exponent, coefficient in sorted(self._terms.items(), key=lambda item: (weight_of(item[0]), item[0])):
            factors = []
            for name, power in zip(VARIABLE_NAMES, exponent):
                if power == 1:
                    factors.append(name)
                elif power > 1:
                    factors.append(f"{name}^{power}")
            monomial = "*".join(factors)
            magnitude = abs(coefficient)
            sign = "-" if coefficient < 0 else "+"
            if not monomial:
                body = str(magnitude)
            elif magnitude.denominator == 1:
                body = monomial if magnitude == 1 else f"{magnitude.numerator}*{monomial}"
            else:
                head = monomial if magnitude.numerator == 1 else f"{magnitude.numerator}*{monomial}"
                body = f"{head}/{magnitude.denominator}"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"WeightedPolynomial({self})"


def g2() -> WeightedPolynomial:
    return WeightedPolynomial.monomial((1, 0, 0))


def lam() -> WeightedPolynomial:
    return WeightedPolynomial.monomial((0, 1, 0))


def g3() -> WeightedPolynomial:
    return WeightedPolynomial.monomial((0, 0, 1))


def poly_evaluate(p: WeightedPolynomial, params) -> Fraction:
    """
    Exact value of ``p`` at a rational parameter point.

    Args:
        p: polynomial in g2, lambda, g3
        params: ParameterTriple with rational entries

    Returns:
        Fraction: the substituted value

    Raises:
        SeriesDomainError: when params are not rational
    """
    from p1series.core.exceptions import SeriesDomainError

    if not params.is_rational():
        raise SeriesDomainError("poly_evaluate needs rational parameters", details={"params": str(params)})
    return Fraction(p.evaluate(params.g2, params.lam, params.g3))


def poly_scale_weights(p: WeightedPolynomial, zeta) -> WeightedPolynomial:
    return p.scale_weights(zeta)
