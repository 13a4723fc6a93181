"""Exception hierarchy for exact-arithmetic failures and invalid inputs."""


class FlatFieldsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(FlatFieldsError):
    """A constructor invariant was violated by user-supplied data."""


# exact number fields

class ReduciblePolynomial(FlatFieldsError):
    """The polynomial offered as a field minimal polynomial factors over Q."""


class BadInterval(FlatFieldsError):
    """The isolating interval contains zero or more than one real root."""


class DivisionByZero(FlatFieldsError, ZeroDivisionError):
    """Exact division by a zero field element."""


class FieldMismatch(FlatFieldsError):
    """Operands belong to different coefficient fields."""


class DegreeLimitExceeded(FlatFieldsError):
    """A configured degree cap or step budget would be exceeded."""


# surfaces

class BadGluing(FlatFieldsError):
    """Edge pairing is not a translation gluing (vectors not exact negatives,
    or an edge side is not glued exactly once)."""


class Disconnected(FlatFieldsError):
    """The glued polygons do not form a connected surface."""


class NonPolygon(FlatFieldsError):
    """A vertex loop is not a simple positively oriented polygon."""


class Intransitive(FlatFieldsError):
    """Square-tiled permutation pair does not act transitively."""


class DegeneratePeriods(FlatFieldsError):
    """All absolute periods are collinear over R; no holonomy frame exists."""


# monodromy

class NotSimple(FlatFieldsError):
    """No simple real positive dominant eigenvalue (input is not
    pseudo-Anosov-like)."""


class NotCoprime(FlatFieldsError):
    """gcd(g, f/g) != 1; the selected eigenvalues are not simple."""


class NotADivisor(FlatFieldsError):
    """The given polynomial does not divide the characteristic polynomial."""


class NotInvariant(FlatFieldsError):
    """The subspace is not invariant under every generator."""


class NoComplement(FlatFieldsError):
    """No invariant complement exists (input representation not semisimple)."""


class TraceFieldMismatch(FlatFieldsError):
    """Field of definition and trace field disagree; input is not genuine
    monodromy data."""


class NotBlockTriangular(FlatFieldsError):
    """No power up to the configured bound acts trivially on ker(p)."""
