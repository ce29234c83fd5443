"""Free-group words, finite presentations, and Fox free differential calculus.

A word is a tuple of nonzero signed generator indices: letter ``i > 0`` means
the i-th generator, ``-i`` its inverse.  Words are kept freely reduced.  All
coefficient arithmetic is exact (Python integers), since minors and
resultants overflow fixed-width types already for small knots.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UngradedGenerator

Word = tuple[int, ...]


def free_reduce(letters) -> Word:
    """Freely reduce a letter sequence.

    >>> free_reduce([1, 2, -2, -1])
    ()
    >>> free_reduce([1, 2, -2, 3])
    (1, 3)
    """
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word_inverse(w) -> Word:
    return tuple(-x for x in reversed(w))


def word_concat(*ws) -> Word:
    letters: list[int] = []
    for w in ws:
        letters.extend(w)
    return free_reduce(letters)


def word_power(w, k: int) -> Word:
    if k < 0:
        return word_power(word_inverse(w), -k)
    return word_concat(*([w] * k))


def exponent_sum(w, gen: int) -> int:
    return sum(1 if x == gen else -1 if x == -gen else 0 for x in w)


def word_grade(w, grading) -> int:
    """Total t-exponent of a word under a generator -> integer grading."""
    total = 0
    for x in w:
        g = abs(x)
        if g not in grading:
            raise UngradedGenerator(f"generator {g} has no grading")
        total += grading[g] if x > 0 else -grading[g]
    return total


class LaurentPoly:
    """Integer Laurent polynomial, stored as a sparse exponent -> coefficient
    map with no zero coefficients.

    Doubles as the carrier for images of Fox derivatives under an integral
    t-grading (an element of Z[t, t^-1]).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs: dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    self.coeffs[int(e)] = int(c)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def t_power(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs, lowest: int = 0) -> "LaurentPoly":
        return cls({lowest + i: c for i, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shifted(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def evaluate(self, t: int) -> int:
        """Exact evaluation at a nonzero integer.  Negative exponents are
        only meaningful over the integers at t = +-1 (where t^-1 = t)."""
        total = 0
        for e, c in self.coeffs.items():
            if e >= 0:
                total += c * t ** e
            elif abs(t) == 1:
                total += c * t ** (-e)
            else:
                raise ValueError("negative exponents only supported at t = +-1")
        return total

    def normalized(self) -> "LaurentPoly":
        """Shift the lowest exponent to 0 and make the leading (highest
        degree) coefficient positive.  The zero polynomial is unchanged."""
        if not self.coeffs:
            return LaurentPoly()
        low = self.min_exp()
        sign = 1 if self.coeffs[self.max_exp()] > 0 else -1
        return LaurentPoly({e - low: sign * c for e, c in self.coeffs.items()})

    def coefficient_list(self) -> list[int]:
        """Dense coefficients from the lowest exponent upward ([] for 0)."""
        if not self.coeffs:
            return []
        low, high = self.min_exp(), self.max_exp()
        return [self.coeffs.get(e, 0) for e in range(low, high + 1)]

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = [f"{c}*t^{e}" for e, c in sorted(self.coeffs.items())]
        return "LaurentPoly(" + " + ".join(terms) + ")"


# Fox-derivative images live in the same ring.
GroupRingElem = LaurentPoly


def fox_derivative(w, gen: int, grading) -> GroupRingElem:
    """Fox free derivative of a word with respect to a generator, pushed into
    Z[t, t^-1] along the given generator -> integer grading.

    Satisfies d(uv) = du + phi(u) dv, dg/dg = 1, d(g^-1)/dg = -phi(g^-1),
    dh/dg = 0 for h != g, where phi is the t-grading of the leading prefix.

    >>> fox_derivative((1, 2, -1, -2), 1, {1: 1, 2: 1}).coeffs
    {0: 1, 1: -1}
    """
    out: dict[int, int] = {}
    prefix = 0
    for x in w:
        g = abs(x)
        if g not in grading:
            raise UngradedGenerator(f"generator {g} has no grading")
        step = grading[g] if x > 0 else -grading[g]
        if g == gen:
            # positive letter contributes t^prefix, inverse letter -t^(prefix+step)
            e = prefix if x > 0 else prefix + step
            c = 1 if x > 0 else -1
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        prefix += step
    return LaurentPoly(out)


@dataclass(frozen=True)
class Presentation:
    """A finitely presented group with an optional distinguished meridian.

    ``meridian`` is a 1-based generator index.  ``meridional`` lists every
    generator known to be conjugate to a meridian (for Wirtinger
    presentations that is all of them); it drives the search-space pruning in
    the brute-force representation counter.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    meridian: int | None = None
    meridional: tuple[int, ...] = field(default=())

    def __post_init__(self):
        n = len(self.generators)
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))
        for r in self.relators:
            for x in r:
                if not 1 <= abs(x) <= n:
                    raise ValueError(f"relator letter {x} outside 1..{n}")
        if self.meridian is not None and not 1 <= self.meridian <= n:
            raise ValueError(f"meridian {self.meridian} outside 1..{n}")
        for g in self.meridional:
            if not 1 <= g <= n:
                raise ValueError(f"meridional index {g} outside 1..{n}")

    def all_meridian_grading(self) -> dict[int, int]:
        return {g: 1 for g in range(1, len(self.generators) + 1)}


def abelianization_matrix(p: Presentation) -> list[list[int]]:
    """Exponent-sum matrix, one row per relator, one column per generator."""
    n = len(p.generators)
    return [[exponent_sum(r, g) for g in range(1, n + 1)] for r in p.relators]
