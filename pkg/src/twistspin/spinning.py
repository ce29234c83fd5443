"""Group presentations for branched twist spins and cyclic branched covers.

Four constructions are provided, all returning ordinary ``Presentation``
values:

* ``btws_presentation``: adjoin a central generator h to any knot-group
  presentation with meridian y1, with the extra relator y1^|m| h^beta;
* ``branched_cover_presentation``: the fundamental group of the m-fold
  cyclic branched cover, built from surface-presentation data by taking m
  shifted copies of the generators and relating consecutive sheets;
* ``plotnick_presentation``: the branched-cover presentation extended by a
  meridian eta whose conjugation action shifts sheets by n;
* ``reduced_presentation``: the two-generator-per-handle surrogate
  eta alpha_i eta^-1 = beta_i used by the representation count; it has the
  same shape as the input surface presentation.

Parameters (m, n, epsilon, beta, q) are canonicalized by ``make_params``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import MeridianUnset, NonPositiveM, NotCoprime
from .freegroup import Presentation, Word, exponent_sum, free_reduce, word_inverse

_ETA = "eta"


@dataclass(frozen=True)
class TwistSpinParams:
    """Canonical bookkeeping for the pair (m, n).

    epsilon is the sign of m (with +1 for m >= 0).  beta is the least
    nonnegative solution of n*beta = epsilon (mod |m|), except beta = 1 when
    m = 0 and beta = 0 when |m| = 1.  q is the least nonnegative inverse of
    n mod |m| (q = 0 when |m| = 1, unset when m = 0).
    """

    m: int
    n: int
    epsilon: int
    beta: int
    q: int | None


def make_params(m: int, n: int) -> TwistSpinParams:
    """Validate coprimality and canonicalize (m, n, epsilon, beta, q).

    >>> make_params(3, 2)
    TwistSpinParams(m=3, n=2, epsilon=1, beta=2, q=2)
    """
    if n < 1:
        raise NotCoprime(f"n must be a positive integer, got {n}")
    if gcd(abs(m), n) != 1:
        raise NotCoprime(f"|m| = {abs(m)} and n = {n} are not coprime")
    epsilon = 1 if m >= 0 else -1
    if m == 0:
        return TwistSpinParams(m=0, n=n, epsilon=1, beta=1, q=None)
    am = abs(m)
    if am == 1:
        return TwistSpinParams(m=m, n=n, epsilon=epsilon, beta=0, q=0)
    beta = next(b for b in range(am) if (n * b - epsilon) % am == 0)
    q = next(v for v in range(am) if (n * v - 1) % am == 0)
    return TwistSpinParams(m=m, n=n, epsilon=epsilon, beta=beta, q=q)


@dataclass(frozen=True)
class LinPresentation:
    """Surface data for a genus-g free Seifert surface: push-off words
    alpha_i (positive side) and beta_i (negative side) of the 2g spine
    loops, written in the dual generators x_1..x_2g of the complementary
    handlebody.  The implicit meridian conjugates alpha_i to beta_i.
    """

    genus: int
    alphas: tuple[Word, ...]
    betas: tuple[Word, ...]

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be positive")
        k = 2 * self.genus
        if len(self.alphas) != k or len(self.betas) != k:
            raise ValueError(f"need {k} alpha and beta words")
        object.__setattr__(self, "alphas", tuple(free_reduce(w) for w in self.alphas))
        object.__setattr__(self, "betas", tuple(free_reduce(w) for w in self.betas))
        for w in self.alphas + self.betas:
            for x in w:
                if not 1 <= abs(x) <= k:
                    raise ValueError(f"word letter {x} outside x_1..x_{k}")

    def exponent_matrices(self) -> tuple[list[list[int]], list[list[int]]]:
        """(A, B) with A[i][j], B[i][j] the exponent sums of x_j in alpha_i,
        beta_i.  A is the Seifert linking matrix of the surface data."""
        k = 2 * self.genus
        a = [[exponent_sum(w, j) for j in range(1, k + 1)] for w in self.alphas]
        b = [[exponent_sum(w, j) for j in range(1, k + 1)] for w in self.betas]
        return a, b

    def lin_group_presentation(self) -> Presentation:
        """The classical knot-group presentation <x_1..x_2g, mu |
        mu alpha_i mu^-1 beta_i^-1> with mu the meridian."""
        k = 2 * self.genus
        mu = k + 1
        names = tuple(f"x{i}" for i in range(1, k + 1)) + ("mu",)
        relators = tuple(
            free_reduce((mu,) + a + (-mu,) + word_inverse(b))
            for a, b in zip(self.alphas, self.betas))
        return Presentation(names, relators, meridian=mu, meridional=(mu,))


def btws_presentation(k: Presentation, p: TwistSpinParams) -> Presentation:
    """Knot group of the branched twist spin built on a presentation of the
    1-knot group whose meridian is set.

    Generators grow by one central h; relators grow by the commutators
    [y_i, h] and the single relator y1^|m| h^beta.  The distinguished
    meridian of the result is deliberately left unset: the 2-knot meridian
    lives in the Plotnick form, not among the y_i.
    """
    if k.meridian is None:
        raise MeridianUnset("base presentation must designate the meridian y1")
    s = len(k.generators)
    h = s + 1
    names = k.generators + ("h",)
    relators = list(k.relators)
    for g in range(1, s + 1):
        relators.append(free_reduce((g, h, -g, -h)))
    relators.append(free_reduce((k.meridian,) * abs(p.m) + (h,) * p.beta))
    return Presentation(names, tuple(relators), meridian=None, meridional=k.meridional)


def _sheet_letter(x: int, sheet: int, width: int) -> int:
    base = sheet * width + abs(x)
    return base if x > 0 else -base


def _sheet_word(w: Word, sheet: int, width: int) -> Word:
    return tuple(_sheet_letter(x, sheet, width) for x in w)


def _sheet_names(genus: int, m: int) -> tuple[str, ...]:
    return tuple(f"t{j}x{i}" for j in range(m) for i in range(1, 2 * genus + 1))


def branched_cover_presentation(lin: LinPresentation, m: int) -> Presentation:
    """Fundamental group of the m-fold cyclic branched cover.

    Generators are the m sheet copies t^j x_i of the surface generators;
    the relators identify the positive push-off on sheet j with the negative
    push-off on sheet j-1: alpha_i^(j) = beta_i^(j-1), indices mod m.
    """
    if m < 1:
        raise NonPositiveM(f"cover degree must be at least 1, got {m}")
    width = 2 * lin.genus
    names = _sheet_names(lin.genus, m)
    relators = []
    for j in range(m):
        for a, b in zip(lin.alphas, lin.betas):
            relators.append(free_reduce(
                _sheet_word(a, j, width) + word_inverse(_sheet_word(b, (j - 1) % m, width))))
    return Presentation(names, tuple(relators))


def plotnick_presentation(lin: LinPresentation, p: TwistSpinParams) -> Presentation:
    """Knot group of the branched twist spin in fibered form: the cover
    presentation plus a meridian eta with eta t^(j+n) x_i eta^-1 = t^j x_i.

    Only defined for m >= 1; callers flip (m, n) to (-m, n) first, which
    does not change the group.
    """
    m = p.m
    if m < 1:
        raise NonPositiveM(f"need m >= 1, got {m}")
    width = 2 * lin.genus
    cover = branched_cover_presentation(lin, m)
    eta = m * width + 1
    names = cover.generators + (_ETA,)
    relators = list(cover.relators)
    for j in range(m):
        for i in range(1, width + 1):
            hi = _sheet_letter(i, (j + p.n) % m, width)
            lo = _sheet_letter(i, j, width)
            relators.append(free_reduce((eta, hi, -eta, -lo)))
    return Presentation(names, tuple(relators), meridian=eta, meridional=(eta,))


def reduced_presentation(lin: LinPresentation) -> Presentation:
    """Two-relator-per-handle surrogate <t0x_1..t0x_2g, eta |
    eta alpha_i eta^-1 = beta_i>; same shape as the surface presentation, so
    downstream consumers can treat its output as surface data again.
    """
    width = 2 * lin.genus
    eta = width + 1
    names = _sheet_names(lin.genus, 1) + (_ETA,)
    relators = tuple(
        free_reduce((eta,) + _sheet_word(a, 0, width) + (-eta,)
                    + word_inverse(_sheet_word(b, 0, width)))
        for a, b in zip(lin.alphas, lin.betas))
    return Presentation(names, relators, meridian=eta, meridional=(eta,))
