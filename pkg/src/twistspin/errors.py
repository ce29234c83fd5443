"""Exception hierarchy.

Two broad families matter to callers: ``InputError`` (bad or unusable input,
CLI exit code 2) and ``VerificationError`` (independent computation routes
disagree, CLI exit code 3).  Everything derives from ``TwistspinError``.
"""


class TwistspinError(Exception):
    pass


class InputError(TwistspinError):
    pass


class VerificationError(TwistspinError):
    pass


# --- diagram / braid parsing ------------------------------------------------

class MalformedToken(InputError):
    """Input text does not match the expected grammar."""


class EdgeMultiplicity(InputError):
    """An edge label does not occur exactly once as a source and once as a
    target across the crossing tuples."""


class SplitLink(InputError):
    """Edge labels trace more than one closed cycle (a link, not a knot)."""


class LetterOutOfRange(InputError):
    """A braid letter names a generator outside 1..strands-1."""


class ZeroLetter(InputError):
    """Braid letters must be nonzero."""


class NotAKnot(InputError):
    """A braid closure with more than one component."""


# --- free group / invariants --------------------------------------------------

class UngradedGenerator(InputError):
    """Fox derivative requested with a grading that misses a generator."""


class DegenerateMatrix(TwistspinError):
    """Alexander matrix has identically vanishing maximal minors."""


class MeridianUnset(InputError):
    """Operation needs a presentation with a distinguished meridian."""


# --- twist-spin parameters / presentations -----------------------------------

class NotCoprime(InputError):
    """|m| and n must be coprime."""


class NonPositiveM(InputError):
    """Construction only defined for m >= 1."""


class MissingLinData(InputError):
    """Knot record carries no surface-presentation data."""


# --- metabelian counting ------------------------------------------------------

class EvenDeterminant(TwistspinError):
    """Knot determinants are odd; an even value signals corrupt input."""


class DeterminantMismatch(VerificationError):
    """|det M| disagrees with the stated modulus."""


class InconsistentExtension(TwistspinError):
    """Character cannot be extended over all sheets of the cyclic cover.

    Concretely: the required sign pattern forces c = -c, which has no
    nontrivial solution modulo an odd determinant.
    """


class IncompatiblePresentation(InputError):
    """Presentation shape does not match the character's genus and cover degree."""


class SearchSpaceTooLarge(TwistspinError):
    """Brute-force enumeration would exceed the configured bound."""


class MethodDisagreement(VerificationError):
    """Independent counting methods returned different values."""
