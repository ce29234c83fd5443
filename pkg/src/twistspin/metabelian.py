"""Irreducible metabelian SL(2,C) representation counting for branched twist
spins, three ways:

* a closed formula in the knot determinant D = |Delta(-1)|: (D-1)/2 for even
  twisting degree m, zero for odd m;
* explicit character enumeration: nontrivial solutions of M c = 0 (mod D)
  in (Z/D)^2g, with M the sum of the push-off exponent matrices, grouped
  into conjugation pairs {c, -c} and extended sheet by sheet over the
  branched cover;
* exhaustive search of homomorphisms into the binary dihedral subgroup of
  SL(2,C), the universal target for such representations.

All root-of-unity arithmetic is exponent arithmetic modulo 2D; no floating
point appears anywhere, so every verdict is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import (
    DeterminantMismatch,
    EvenDeterminant,
    InconsistentExtension,
    IncompatiblePresentation,
    InputError,
    MissingLinData,
    SearchSpaceTooLarge,
)
from .freegroup import Presentation
from .invariants import IntMatrix, bareiss_determinant, smith_normal_form
from .spinning import LinPresentation, TwistSpinParams


@dataclass(frozen=True)
class Character:
    """Eigenvalue data of a diagonal representation of the surface
    generators: x_i maps to diag(z^c_i, z^-c_i) with z = exp(2 pi i / D)."""

    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents",
                           tuple(v % self.modulus for v in self.exponents))

    @property
    def nontrivial(self) -> bool:
        return any(self.exponents)

    def negated(self) -> "Character":
        return Character(self.modulus, tuple(-v % self.modulus for v in self.exponents))


@dataclass(frozen=True)
class RepClass:
    """Unordered conjugation pair {c, -c}, stored by its lexicographically
    smaller member."""

    modulus: int
    representative: tuple[int, ...]

    @classmethod
    def of(cls, modulus: int, exponents) -> "RepClass":
        c = tuple(v % modulus for v in exponents)
        neg = tuple(-v % modulus for v in c)
        return cls(modulus, min(c, neg))

    def pair(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        neg = tuple(-v % self.modulus for v in self.representative)
        return (self.representative, neg)

    def character(self) -> Character:
        return Character(self.modulus, self.representative)


@dataclass(frozen=True)
class ExtendedCharacter:
    """Sheet-by-sheet eigenvalue exponents lambda^(j), j = 0..m-1.

    Consecutive sheets agree when q is even and are negated when q is odd
    (q the inverse of n mod m); the constructor below enforces that the
    pattern closes up around the cover and is compatible with the meridian
    conjugation, which is exactly what fails for odd m.
    """

    base: Character
    levels: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DihedralElement:
    """Element of the binary dihedral group of order 4D inside SL(2,C).

    ``f = 0`` encodes the rotation diag(z^a, z^-a) with z a primitive 2D-th
    root of unity; ``f = 1`` encodes r(a) * J with J = [[0,-1],[1,0]].
    Reflection-type elements square to r(D) = -I.
    """

    modulus: int  # 2D
    a: int
    f: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.modulus)

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli")
        if self.f == 0:
            return DihedralElement(self.modulus, self.a + other.a, other.f)
        half = self.modulus // 2
        a = self.a - other.a + (half if other.f else 0)
        return DihedralElement(self.modulus, a, 1 - other.f)

    def inverse(self) -> "DihedralElement":
        if self.f == 0:
            return DihedralElement(self.modulus, -self.a, 0)
        return DihedralElement(self.modulus, self.a + self.modulus // 2, 1)

    @classmethod
    def identity(cls, two_d: int) -> "DihedralElement":
        return cls(two_d, 0, 0)

    @classmethod
    def rotation(cls, two_d: int, a: int) -> "DihedralElement":
        return cls(two_d, a, 0)

    @classmethod
    def reflection(cls, two_d: int, a: int) -> "DihedralElement":
        return cls(two_d, a, 1)

    @property
    def is_identity(self) -> bool:
        return self.f == 0 and self.a == 0

    def commutes_with(self, other: "DihedralElement") -> bool:
        return self * other == other * self


@dataclass(frozen=True)
class RepVerdict:
    valid: bool
    irreducible: bool
    failed_relator: int | None = None

    @property
    def label(self) -> str:
        if not self.valid:
            return f"invalid(relator {self.failed_relator})"
        return "valid+irreducible" if self.irreducible else "valid+reducible"


def count_by_formula(det: int, m: int) -> int:
    """(det - 1) / 2 for even m, zero for odd m; m = 0 counts as even.

    Knot determinants are odd, so an even value signals an upstream bug.
    """
    if det < 1 or det % 2 == 0:
        raise EvenDeterminant(f"knot determinants are odd, got {det}")
    return (det - 1) // 2 if m % 2 == 0 else 0


def character_condition_matrix(lin: LinPresentation) -> IntMatrix:
    """M = A + B, the sum of the push-off exponent matrices.

    Conjugation by the meridian image [[0,-1],[1,0]] inverts diagonal
    matrices, so the relator eta alpha_i eta^-1 = beta_i forces
    lambda(alpha_i) * lambda(beta_i) = 1, i.e. M c = 0 (mod D) on the
    eigenvalue exponents.
    """
    a, b = lin.exponent_matrices()
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def enumerate_characters(m: IntMatrix, modulus: int, brute: bool = False) -> list[RepClass]:
    """All nontrivial c in (Z/D)^2g with M c = 0 (mod D), grouped into
    {c, -c} classes and sorted by representative.

    The kernel has exactly D elements when |det M| = D, so the class count
    is (D-1)/2.  Enumeration goes through the Smith form; ``brute = True``
    scans all of (Z/D)^2g instead (debug oracle, D^2g <= 10**7).
    """
    k = len(m)
    if any(len(row) != k for row in m):
        raise ValueError("condition matrix must be square")
    if modulus < 1 or modulus % 2 == 0:
        raise EvenDeterminant(f"modulus must be a positive odd integer, got {modulus}")
    adet = abs(bareiss_determinant(m))
    if adet != modulus:
        raise DeterminantMismatch(f"|det M| = {adet} but modulus = {modulus}")
    if modulus == 1:
        return []

    solutions: set[tuple[int, ...]] = set()
    if brute:
        if modulus ** k > 10 ** 7:
            raise SearchSpaceTooLarge(f"{modulus}^{k} points is past the debug-scan bound")
        for c in itertools.product(range(modulus), repeat=k):
            if all(sum(row[j] * c[j] for j in range(k)) % modulus == 0 for row in m):
                solutions.add(c)
    else:
        snf = smith_normal_form(m)
        # d_i y_i = 0 (mod D) leaves gcd(d_i, D) choices for y_i; c = R y.
        steps = [modulus // gcd(d, modulus) if d else 1 for d in snf.diagonal]
        counts = [gcd(d, modulus) if d else modulus for d in snf.diagonal]
        for combo in itertools.product(*(range(cnt) for cnt in counts)):
            y = [ci * st for ci, st in zip(combo, steps)]
            c = tuple(sum(snf.right[i][j] * y[j] for j in range(k)) % modulus
                      for i in range(k))
            solutions.add(c)
    assert len(solutions) == modulus, "kernel of M mod D must have exactly D points"

    classes = {RepClass.of(modulus, c) for c in solutions if any(c)}
    return sorted(classes, key=lambda r: r.representative)


def extend_character(c: Character, p: TwistSpinParams) -> ExtendedCharacter:
    """Extend surface eigenvalue data over the m sheets of the cover.

    Each step multiplies by (-1)^q in exponent form.  Two compatibility
    constraints must hold for a nontrivial character: walking all m sheets
    must return to the start (fails when m*q is odd), and conjugation by the
    meridian must negate (fails when q*n is even).  Either failure raises
    ``InconsistentExtension``; both can only occur for odd m, which is the
    concrete form of the odd-m vanishing.
    """
    if p.m == 0 or p.q is None:
        raise ValueError("extension is defined for m >= 1; handle m = 0 upstream")
    m = abs(p.m)
    if c.nontrivial:
        if (p.q * p.n) % 2 == 0:
            raise InconsistentExtension(
                f"q*n = {p.q * p.n} even: meridian conjugation forces c = -c")
        if (m * p.q) % 2 == 1:
            raise InconsistentExtension(
                f"m*q = {m * p.q} odd: walking the cover forces c = -c")
    levels = []
    cur = c.exponents
    for _ in range(m):
        levels.append(cur)
        if p.q % 2 == 1:
            cur = tuple(-v % c.modulus for v in cur)
    return ExtendedCharacter(base=c, levels=tuple(levels))


def build_representation(ec: ExtendedCharacter, p: Presentation) -> dict[int, DihedralElement]:
    """Images of the generators of a fibered-form or reduced presentation.

    Sheet generator t^j x_i maps to the rotation with exponent
    2 * lambda_i^(j) in Z/2D (even exponents are D-th roots of unity on the
    diagonal); the meridian maps to [[0,-1],[1,0]].
    """
    if p.meridian is None:
        raise IncompatiblePresentation("presentation has no distinguished meridian")
    width = len(ec.base.exponents)
    others = [g for g in range(1, len(p.generators) + 1) if g != p.meridian]
    if len(others) == width:
        sheets = 1
    elif len(others) == width * len(ec.levels):
        sheets = len(ec.levels)
    else:
        raise IncompatiblePresentation(
            f"{len(others)} non-meridian generators fit neither 2g = {width} "
            f"nor 2g*m = {width * len(ec.levels)}")
    two_d = 2 * ec.base.modulus
    rho = {p.meridian: DihedralElement.reflection(two_d, 0)}
    for pos, g in enumerate(others):
        lam = ec.levels[pos // width][pos % width]
        rho[g] = DihedralElement.rotation(two_d, 2 * lam)
    return rho


def evaluate_word(word, rho) -> DihedralElement:
    first = next(iter(rho.values()))
    acc = DihedralElement.identity(first.modulus)
    for x in word:
        e = rho[abs(x)]
        acc = acc * (e if x > 0 else e.inverse())
    return acc


def verify_representation(p: Presentation, rho) -> RepVerdict:
    """Evaluate every relator exactly; classify the result.

    Valid when all relators map to the identity.  Irreducible exactly when
    the image is nonabelian, i.e. some eigenvalue exponent outside {0, D}
    coexists with a reflection-type image (checked as a pairwise
    commutation test on the generator images).
    """
    for idx, rel in enumerate(p.relators):
        if not evaluate_word(rel, rho).is_identity:
            return RepVerdict(valid=False, irreducible=False, failed_relator=idx)
    images = [rho[g] for g in range(1, len(p.generators) + 1)]
    nonabelian = any(not u.commutes_with(v)
                     for i, u in enumerate(images) for v in images[i + 1:])
    return RepVerdict(valid=True, irreducible=nonabelian)


def _canonical_class(items, two_d: int) -> tuple:
    """Conjugacy invariant of a binary-dihedral assignment: rotation
    exponents verbatim, reflection exponents relative to the first
    reflection, everything up to a global negation."""

    def norm(seq):
        shift = next((a for a, f in seq if f == 1), 0)
        return tuple((a - shift) % two_d if f else a % two_d for a, f in seq)

    plain = norm(items)
    negated = norm([(-a % two_d, f) for a, f in items])
    return min(plain, negated)


def brute_force_count(p: Presentation, modulus: int, *, partitions: int = 1,
                      unpruned: bool = False, limit: int = 10 ** 8) -> int:
    """Count conjugacy classes of valid irreducible assignments of the
    generators into the binary dihedral group of order 4D.

    Meridian-conjugate generators only range over reflection-type elements
    and the rest over rotations; this loses nothing since conjugates share
    their type and any element commuting with an irreducible image is a
    central rotation.  ``unpruned = True`` searches the full group for every
    generator (a pruning audit for tiny instances).  The assignment space is
    split into ``partitions`` deterministic chunks; the result does not
    depend on the partitioning.
    """
    if modulus < 1 or modulus % 2 == 0:
        raise EvenDeterminant(f"need a positive odd determinant, got {modulus}")
    if partitions < 1:
        raise ValueError("partitions must be >= 1")
    two_d = 2 * modulus
    n = len(p.generators)
    meridional = set(p.meridional)
    if not meridional and p.meridian is not None:
        meridional = {p.meridian}

    rotations = [(a, 0) for a in range(two_d)]
    reflections = [(a, 1) for a in range(two_d)]
    candidates: list[list[tuple[int, int]]] = []
    gauge_gen = min(meridional) if (meridional and not unpruned) else None
    for g in range(1, n + 1):
        if unpruned:
            candidates.append(rotations + reflections)
        elif g in meridional:
            candidates.append([(0, 1)] if g == gauge_gen else reflections)
        else:
            candidates.append(rotations)

    total = 1
    for cand in candidates:
        total *= len(cand)
    if total > limit:
        raise SearchSpaceTooLarge(f"{total} assignments exceed the bound {limit}")

    radices = [len(cand) for cand in candidates]
    classes: set[tuple] = set()
    bounds = [total * i // partitions for i in range(partitions + 1)]
    for chunk in range(partitions):
        for idx in range(bounds[chunk], bounds[chunk + 1]):
            items = []
            rem = idx
            for cand, radix in zip(candidates, radices):
                rem, pick = divmod(rem, radix)
                items.append(cand[pick])
            rho = {g + 1: DihedralElement(two_d, a, f)
                   for g, (a, f) in enumerate(items)}
            verdict = verify_representation(p, rho)
            if verdict.valid and verdict.irreducible:
                classes.add(_canonical_class(items, two_d))
    return len(classes)


# --- orchestration ----------------------------------------------------------------


def count_representations(params: TwistSpinParams, method: str, *, det: int | None = None,
                          lin: LinPresentation | None = None,
                          presentation: Presentation | None = None,
                          partitions: int = 1, brute_limit: int = 10 ** 8) -> dict:
    """Run one or all counting methods and assemble a report.

    ``method`` is one of ``formula``, ``characters``, ``brute``, ``all``.
    With ``all``, methods whose inputs are missing or whose search space is
    too large are skipped with a note rather than failing.  The report
    carries per-method counts, the surviving character representatives, and
    an agreement flag.
    """
    wanted = ["formula", "characters", "brute"] if method == "all" else [method]
    per_method: dict[str, int] = {}
    flags: list[str] = []
    characters_out: list[list[int]] = []
    lenient = method == "all"
    if params.m == 0:
        flags.append("m=0: formula extended")

    for name in wanted:
        if name == "formula":
            if det is None:
                raise ValueError("formula method needs the knot determinant")
            per_method["formula"] = count_by_formula(det, params.m)
        elif name == "characters":
            if lin is None:
                if lenient:
                    flags.append("characters skipped: no surface data")
                    continue
                raise MissingLinData("characters method needs surface-presentation data")
            m_cond = character_condition_matrix(lin)
            modulus = abs(bareiss_determinant(m_cond))
            if det is not None and det != modulus:
                raise DeterminantMismatch(
                    f"surface data gives determinant {modulus}, expected {det}")
            classes = enumerate_characters(m_cond, modulus)
            if params.m == 0:
                survivors = classes
            else:
                survivors = []
                for cls in classes:
                    try:
                        extend_character(cls.character(), params)
                    except InconsistentExtension:
                        continue
                    survivors.append(cls)
            per_method["characters"] = len(survivors)
            characters_out = [list(cls.representative) for cls in survivors]
        elif name == "brute":
            if presentation is None or det is None:
                if lenient:
                    flags.append("brute skipped: no presentation")
                    continue
                raise InputError("brute method needs a presentation and the determinant")
            try:
                per_method["brute"] = brute_force_count(
                    presentation, det, partitions=partitions, limit=brute_limit)
            except SearchSpaceTooLarge as exc:
                if not lenient:
                    raise
                flags.append(f"brute skipped: {exc}")
        else:
            raise ValueError(f"unknown method {name!r}")

    values = sorted(set(per_method.values()))
    agreement = len(values) <= 1
    count = values[0] if values else 0
    return {
        "m": params.m,
        "n": params.n,
        "beta": params.beta,
        "epsilon": params.epsilon,
        "q": params.q,
        "determinant": det,
        "count": count,
        "per_method": per_method,
        "characters": characters_out,
        "flags": flags,
        "agreement": agreement,
    }


@dataclass(frozen=True)
class Distinction:
    verdict: str  # "inequivalent" or "inconclusive"
    rule: int | None


def distinguish(a: tuple[int, int], b: tuple[int, int]) -> Distinction:
    """Inequivalence test from determinants and twist parities alone.

    Rule 1: both m even and the determinants differ.  Rule 2: one m even,
    the other odd, and the even side's determinant is not 1.  Anything else
    is inconclusive.
    """
    det_a, m_a = a
    det_b, m_b = b
    even_a, even_b = m_a % 2 == 0, m_b % 2 == 0
    if even_a and even_b and det_a != det_b:
        return Distinction("inequivalent", 1)
    if even_a != even_b:
        even_det = det_a if even_a else det_b
        if even_det != 1:
            return Distinction("inequivalent", 2)
    return Distinction("inconclusive", None)
