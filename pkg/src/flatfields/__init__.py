"""Exact-arithmetic invariants of translation surfaces.

Holonomy fields, fields of definition of subspaces, Galois-conjugate
cohomology decompositions, and typicality verdicts, all over explicitly
certified real number fields with no floating point anywhere.
"""

from .config import DEFAULT, Config, load_config
from .errors import (
    BadGluing, BadInterval, DegeneratePeriods, DegreeLimitExceeded,
    Disconnected, DivisionByZero, FieldMismatch, FlatFieldsError,
    Intransitive, InvalidInput, NoComplement, NonPolygon, NotADivisor,
    NotBlockTriangular, NotCoprime, NotInvariant, NotSimple,
    ReduciblePolynomial, TraceFieldMismatch,
)
from .fieldops import (
    Subfield, conjugate_embeddings, factor_over_K, field_generated_by,
    field_intersect, field_join, is_member, subfields,
)
from .generic import (
    AmbientModel, ExtendedPeriod, SpecialVerdict, TypicalVerdict,
    generic_verdict, is_typical, relation_space_over,
)
from .holonomy import (
    FodReport, HolonomyReport, field_of_definition_subspace, holonomy_field,
    k_of_M_from_samples, normalize_to_ki,
)
from .linalg import (
    MatF, Subspace, charpoly, extended_gcd_poly, kernel, poly_of_matrix,
    rref, smith_normal_form, subspace_ops,
)
from .monodromy import (
    Decomposition, PerronData, Representation, dimension_inequality_check,
    invariant_complement, isotypic_decomposition, min_poly_over, orbit_span,
    perron_root, primary_projection, relative_block_structure, trace_field,
    word_traces,
)
from .numfield import (
    QQ, ComplexAlg, NFElement, NumberField, minimal_polynomial, nf_arith,
    nf_create, sign,
)
from .poly import Poly
from .qfactor import factor_over_Q, is_irreducible_over_Q
from .surface import (
    HomologyData, PeriodVector, PolygonSurface, SquareTiled, Stratum,
    absolute_periods, homology, periods, square_tiled_to_polygon, validate,
)

__version__ = "0.1.0"
